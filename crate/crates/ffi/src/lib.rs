//! C ABI over the walk library.
//!
//! Every fallible call returns a [`QwStatus`] and writes its result through
//! an out-pointer. On failure `qw_last_error_message` describes the error
//! for the calling thread. Handles are opaque and released by the matching
//! `*_free` function; passing null to a `*_free` function is a no-op.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use qwalk::asymptotics::{approx_prob, ks_distance, ApproxKind, DensityKind, LimitDensity};
use qwalk::closed_form::{
    half_line_exact_by_inner, half_line_exact_split, half_line_exact_total, line_exact,
    q2_oracle_distribution, ExactParams, Precision, SumKernel,
};
use qwalk::evolution::evolve;
use qwalk::{Coin, Distribution, Error, WalkKind};

pub const QW_WALK_HALF_LINE: u32 = 0;
pub const QW_WALK_LINE: u32 = 1;

pub const QW_PRECISION_DOUBLE: u32 = 0;
pub const QW_PRECISION_DOUBLE_DOUBLE: u32 = 1;
pub const QW_PRECISION_EXACT: u32 = 2;

pub const QW_VIEW_INNER0: u32 = 0;
pub const QW_VIEW_INNER1: u32 = 1;
pub const QW_VIEW_TOTAL: u32 = 2;
pub const QW_VIEW_SPLIT: u32 = 3;

pub const QW_DENSITY_LINE_TOTAL: u32 = 0;
pub const QW_DENSITY_HALF_INNER0: u32 = 1;
pub const QW_DENSITY_HALF_INNER1: u32 = 2;
pub const QW_DENSITY_HALF_TOTAL: u32 = 3;

pub const QW_APPROX_INNER0: u32 = 0;
pub const QW_APPROX_INNER1: u32 = 1;
pub const QW_APPROX_TOTAL: u32 = 2;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QwStatus {
    Ok = 0,
    InvalidArgument = 1,
    Domain = 2,
    Resource = 3,
    Precision = 4,
    Parse = 5,
    Io = 6,
    NullPointer = 7,
    Panic = 8,
}

/// Coin handle.
pub struct QwCoin(Coin);

/// Distribution handle.
pub struct QwDistribution(Distribution);

/// Limit density handle.
pub struct QwLimitDensity(LimitDensity);

/// One distribution row. Columns a route does not provide are NaN.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QwRow {
    pub x: i64,
    pub p0: f64,
    pub p1: f64,
    pub p: f64,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let text = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = text);
}

enum Failure {
    Core(Error),
    Null(&'static str),
    Arg(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

fn status_of(f: Failure) -> QwStatus {
    match f {
        Failure::Null(what) => {
            set_error(format!("null pointer: {what}"));
            QwStatus::NullPointer
        }
        Failure::Arg(msg) => {
            set_error(format!("invalid argument: {msg}"));
            QwStatus::InvalidArgument
        }
        Failure::Core(e) => {
            set_error(e.to_string());
            match e {
                Error::InvalidArgument(_) => QwStatus::InvalidArgument,
                Error::Domain(_) => QwStatus::Domain,
                Error::Resource(_) => QwStatus::Resource,
                Error::Precision(_) => QwStatus::Precision,
                Error::Parse(_) => QwStatus::Parse,
                Error::Io { .. } => QwStatus::Io,
            }
        }
    }
}

/// Runs `f`, stores its value through `out` and maps errors and panics.
fn guard<T>(out: *mut T, f: impl FnOnce() -> Result<T, Failure>) -> QwStatus {
    if out.is_null() {
        return status_of(Failure::Null("out"));
    }
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(v)) => {
            // SAFETY: `out` is non-null and the caller guarantees it is writable.
            unsafe { out.write(v) };
            QwStatus::Ok
        }
        Ok(Err(e)) => status_of(e),
        Err(_) => {
            set_error("internal panic");
            QwStatus::Panic
        }
    }
}

fn deref<'a, T>(p: *const T, what: &'static str) -> Result<&'a T, Failure> {
    // SAFETY: a non-null handle came from this library and is still live.
    unsafe { p.as_ref() }.ok_or(Failure::Null(what))
}

fn walk_kind(walk: u32) -> Result<WalkKind, Failure> {
    match walk {
        QW_WALK_HALF_LINE => Ok(WalkKind::HalfLine),
        QW_WALK_LINE => Ok(WalkKind::Line),
        other => Err(Failure::Arg(format!("unknown walk {other}"))),
    }
}

fn precision(p: u32) -> Result<Precision, Failure> {
    match p {
        QW_PRECISION_DOUBLE => Ok(Precision::Double),
        QW_PRECISION_DOUBLE_DOUBLE => Ok(Precision::DoubleDouble),
        QW_PRECISION_EXACT => Ok(Precision::ExactQ2),
        other => Err(Failure::Arg(format!("unknown precision {other}"))),
    }
}

fn density_kind(kind: u32) -> Result<DensityKind, Failure> {
    match kind {
        QW_DENSITY_LINE_TOTAL => Ok(DensityKind::LineTotal),
        QW_DENSITY_HALF_INNER0 => Ok(DensityKind::HalfInner0),
        QW_DENSITY_HALF_INNER1 => Ok(DensityKind::HalfInner1),
        QW_DENSITY_HALF_TOTAL => Ok(DensityKind::HalfTotal),
        other => Err(Failure::Arg(format!("unknown density kind {other}"))),
    }
}

fn boxed<T>(v: T) -> *mut T {
    Box::into_raw(Box::new(v))
}

/// Message for the last failed call on this thread. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn qw_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Coin for an angle in radians.
///
/// # Safety
/// `out` must be a valid pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn qw_coin_new(theta: f64, out: *mut *mut QwCoin) -> QwStatus {
    guard(out, || Ok(boxed(QwCoin(Coin::new(theta)?))))
}

/// Coin for the angle `num/den · π`, kept exact.
///
/// # Safety
/// `out` must be a valid pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn qw_coin_from_pi_fraction(
    num: i64,
    den: i64,
    out: *mut *mut QwCoin,
) -> QwStatus {
    guard(out, || Ok(boxed(QwCoin(Coin::pi_fraction(num, den)?))))
}

/// Writes cos θ and sin θ.
///
/// # Safety
/// `coin` must be a live handle; `c` and `s` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qw_coin_cos_sin(
    coin: *const QwCoin,
    c: *mut f64,
    s: *mut f64,
) -> QwStatus {
    if s.is_null() {
        return status_of(Failure::Null("s"));
    }
    guard(c, || {
        let coin = &deref(coin, "coin")?.0;
        // SAFETY: checked non-null above.
        unsafe { s.write(coin.s()) };
        Ok(coin.c())
    })
}

/// # Safety
/// `coin` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qw_coin_free(coin: *mut QwCoin) {
    if !coin.is_null() {
        drop(unsafe { Box::from_raw(coin) });
    }
}

/// Distribution after `t` steps of unitary evolution.
///
/// # Safety
/// `coin` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qw_evolve(
    coin: *const QwCoin,
    walk: u32,
    t: u64,
    out: *mut *mut QwDistribution,
) -> QwStatus {
    guard(out, || {
        let coin = &deref(coin, "coin")?.0;
        let steps = i64::try_from(t).map_err(|_| Failure::Arg(format!("t = {t} too large")))?;
        let state = evolve(walk_kind(walk)?, coin, steps)?;
        Ok(boxed(QwDistribution(state.distribution())))
    })
}

/// Closed-form distribution. `view` selects the half-line columns and is
/// ignored for the line walk, which is total-only.
///
/// # Safety
/// `coin` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qw_exact(
    coin: *const QwCoin,
    walk: u32,
    t: u64,
    view: u32,
    precision_level: u32,
    out: *mut *mut QwDistribution,
) -> QwStatus {
    guard(out, || {
        let coin = &deref(coin, "coin")?.0;
        let params = ExactParams::new(precision(precision_level)?).with_kernel(SumKernel::Jacobi);
        let d = match walk_kind(walk)? {
            WalkKind::Line => line_exact(coin, t, params)?,
            WalkKind::HalfLine => match view {
                QW_VIEW_INNER0 => half_line_exact_by_inner(coin, t, 0, params)?,
                QW_VIEW_INNER1 => half_line_exact_by_inner(coin, t, 1, params)?,
                QW_VIEW_TOTAL => half_line_exact_total(coin, t, params)?,
                QW_VIEW_SPLIT => half_line_exact_split(coin, t, params)?,
                other => return Err(Failure::Arg(format!("unknown view {other}"))),
            },
        };
        Ok(boxed(QwDistribution(d)))
    })
}

/// Exact θ = π/4 distribution, rounded once to double.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qw_oracle(walk: u32, t: u64, out: *mut *mut QwDistribution) -> QwStatus {
    guard(out, || {
        let exact = q2_oracle_distribution(walk_kind(walk)?, t)?;
        Ok(boxed(QwDistribution(exact.to_f64())))
    })
}

/// Number of rows.
///
/// # Safety
/// `dist` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qw_distribution_len(
    dist: *const QwDistribution,
    out: *mut usize,
) -> QwStatus {
    guard(out, || Ok(deref(dist, "dist")?.0.rows.len()))
}

/// Time step of the distribution.
///
/// # Safety
/// `dist` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qw_distribution_time(
    dist: *const QwDistribution,
    out: *mut u64,
) -> QwStatus {
    guard(out, || Ok(deref(dist, "dist")?.0.t))
}

/// Row `index`, in increasing position order.
///
/// # Safety
/// `dist` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qw_distribution_row(
    dist: *const QwDistribution,
    index: usize,
    out: *mut QwRow,
) -> QwStatus {
    guard(out, || {
        let rows = &deref(dist, "dist")?.0.rows;
        let r = rows.get(index).ok_or_else(|| {
            Failure::Arg(format!("row {index} out of range for {} rows", rows.len()))
        })?;
        Ok(QwRow {
            x: r.x,
            p0: r.p0.unwrap_or(f64::NAN),
            p1: r.p1.unwrap_or(f64::NAN),
            p: r.p,
        })
    })
}

/// Sum of the `p` column.
///
/// # Safety
/// `dist` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qw_distribution_total(
    dist: *const QwDistribution,
    out: *mut f64,
) -> QwStatus {
    guard(out, || Ok(deref(dist, "dist")?.0.total()))
}

/// # Safety
/// `dist` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qw_distribution_free(dist: *mut QwDistribution) {
    if !dist.is_null() {
        drop(unsafe { Box::from_raw(dist) });
    }
}

/// Limit density of the scaled position.
///
/// # Safety
/// `coin` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qw_limit_density_new(
    coin: *const QwCoin,
    kind: u32,
    out: *mut *mut QwLimitDensity,
) -> QwStatus {
    guard(out, || {
        let coin = deref(coin, "coin")?.0;
        Ok(boxed(QwLimitDensity(LimitDensity::new(
            coin,
            density_kind(kind)?,
        )?)))
    })
}

/// Density value at `y`; zero off the support.
///
/// # Safety
/// `density` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qw_limit_density_at(
    density: *const QwLimitDensity,
    y: f64,
    out: *mut f64,
) -> QwStatus {
    guard(out, || Ok(deref(density, "density")?.0.density_at(y)))
}

/// Cumulative distribution at `y`.
///
/// # Safety
/// `density` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qw_limit_cdf_at(
    density: *const QwLimitDensity,
    y: f64,
    out: *mut f64,
) -> QwStatus {
    guard(out, || Ok(deref(density, "density")?.0.cdf_at(y)))
}

/// # Safety
/// `density` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qw_limit_density_free(density: *mut QwLimitDensity) {
    if !density.is_null() {
        drop(unsafe { Box::from_raw(density) });
    }
}

/// Density-based approximation of P(X_t = x) on the half line.
///
/// # Safety
/// `coin` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qw_approx_prob(
    coin: *const QwCoin,
    t: u64,
    x: i64,
    kind: u32,
    out: *mut f64,
) -> QwStatus {
    guard(out, || {
        let coin = &deref(coin, "coin")?.0;
        let kind = match kind {
            QW_APPROX_INNER0 => ApproxKind::Inner0,
            QW_APPROX_INNER1 => ApproxKind::Inner1,
            QW_APPROX_TOTAL => ApproxKind::Total,
            other => return Err(Failure::Arg(format!("unknown approximation kind {other}"))),
        };
        Ok(approx_prob(coin, t, x, kind))
    })
}

/// Kolmogorov–Smirnov distance between X_t/t and the limit law.
///
/// # Safety
/// `coin` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qw_ks_distance(
    coin: *const QwCoin,
    t: u64,
    kind: u32,
    out: *mut f64,
) -> QwStatus {
    guard(out, || {
        let coin = &deref(coin, "coin")?.0;
        Ok(ks_distance(coin, t, density_kind(kind)?)?.ks)
    })
}
