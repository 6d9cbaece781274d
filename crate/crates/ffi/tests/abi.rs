use std::ffi::CStr;
use std::ptr;

use qwalk_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(qw_last_error_message()) }
        .to_string_lossy()
        .into_owned()
}

fn quarter() -> *mut QwCoin {
    let mut coin = ptr::null_mut();
    assert_eq!(
        unsafe { qw_coin_from_pi_fraction(1, 4, &mut coin) },
        QwStatus::Ok
    );
    coin
}

fn rows(dist: *const QwDistribution) -> Vec<QwRow> {
    let mut n = 0usize;
    assert_eq!(unsafe { qw_distribution_len(dist, &mut n) }, QwStatus::Ok);
    (0..n)
        .map(|i| {
            let mut row = QwRow {
                x: 0,
                p0: 0.0,
                p1: 0.0,
                p: 0.0,
            };
            assert_eq!(
                unsafe { qw_distribution_row(dist, i, &mut row) },
                QwStatus::Ok
            );
            row
        })
        .collect()
}

#[test]
fn evolution_and_closed_form_agree() {
    let coin = quarter();
    for walk in [QW_WALK_HALF_LINE, QW_WALK_LINE] {
        let (mut evolved, mut exact) = (ptr::null_mut(), ptr::null_mut());
        unsafe {
            assert_eq!(qw_evolve(coin, walk, 15, &mut evolved), QwStatus::Ok);
            let view = QW_VIEW_SPLIT;
            assert_eq!(
                qw_exact(coin, walk, 15, view, QW_PRECISION_DOUBLE_DOUBLE, &mut exact),
                QwStatus::Ok
            );
        }
        let ev = rows(evolved);
        for r in rows(exact) {
            let e = ev.iter().find(|e| e.x == r.x).unwrap();
            assert!((e.p - r.p).abs() < 1e-12, "walk {walk}, x = {}", r.x);
        }
        let mut total = 0.0;
        assert_eq!(
            unsafe { qw_distribution_total(evolved, &mut total) },
            QwStatus::Ok
        );
        assert!((total - 1.0).abs() < 1e-12);
        let mut t = 0;
        assert_eq!(unsafe { qw_distribution_time(exact, &mut t) }, QwStatus::Ok);
        assert_eq!(t, 15);
        unsafe {
            qw_distribution_free(evolved);
            qw_distribution_free(exact);
        }
    }
    unsafe { qw_coin_free(coin) };
}

#[test]
fn oracle_rows_and_missing_columns() {
    let mut d = ptr::null_mut();
    assert_eq!(
        unsafe { qw_oracle(QW_WALK_HALF_LINE, 1, &mut d) },
        QwStatus::Ok
    );
    let r = rows(d);
    assert_eq!(r.len(), 2);
    assert_eq!((r[0].x, r[0].p0, r[0].p1, r[0].p), (0, 0.0, 0.5, 0.5));
    unsafe { qw_distribution_free(d) };

    let coin = quarter();
    let mut line = ptr::null_mut();
    unsafe {
        qw_exact(
            coin,
            QW_WALK_LINE,
            4,
            QW_VIEW_TOTAL,
            QW_PRECISION_EXACT,
            &mut line,
        )
    };
    assert!(rows(line).iter().all(|r| r.p0.is_nan() && r.p1.is_nan()));
    unsafe {
        qw_distribution_free(line);
        qw_coin_free(coin);
    }
}

#[test]
fn limit_and_approximation() {
    let coin = quarter();
    let mut d = ptr::null_mut();
    assert_eq!(
        unsafe { qw_limit_density_new(coin, QW_DENSITY_HALF_TOTAL, &mut d) },
        QwStatus::Ok
    );
    let (mut f, mut cdf) = (0.0, 0.0);
    unsafe {
        assert_eq!(qw_limit_density_at(d, 0.0, &mut f), QwStatus::Ok);
        assert_eq!(qw_limit_cdf_at(d, 1.0, &mut cdf), QwStatus::Ok);
    }
    assert!((f - 2.0 / std::f64::consts::PI).abs() < 1e-15);
    assert!((cdf - 1.0).abs() < 1e-10);
    let mut p = 0.0;
    assert_eq!(
        unsafe { qw_approx_prob(coin, 500, 0, QW_APPROX_TOTAL, &mut p) },
        QwStatus::Ok
    );
    assert!((p - 2.0 / (500.0 * std::f64::consts::PI)).abs() < 1e-15);
    let mut ks = 0.0;
    assert_eq!(
        unsafe { qw_ks_distance(coin, 200, QW_DENSITY_HALF_TOTAL, &mut ks) },
        QwStatus::Ok
    );
    assert!(ks > 0.0 && ks < 0.1);
    unsafe {
        qw_limit_density_free(d);
        qw_coin_free(coin);
    }
}

#[test]
fn errors_map_to_status_codes() {
    let mut coin = ptr::null_mut();
    assert_eq!(
        unsafe { qw_coin_new(f64::NAN, &mut coin) },
        QwStatus::InvalidArgument
    );
    assert!(last_error().contains("non-finite"));

    assert_eq!(unsafe { qw_coin_new(0.0, &mut coin) }, QwStatus::Ok);
    let mut d = ptr::null_mut();
    let st = unsafe {
        qw_exact(
            coin,
            QW_WALK_HALF_LINE,
            3,
            QW_VIEW_TOTAL,
            QW_PRECISION_DOUBLE,
            &mut d,
        )
    };
    assert_eq!(st, QwStatus::Domain);
    let mut density = ptr::null_mut();
    assert_eq!(
        unsafe { qw_limit_density_new(coin, 9, &mut density) },
        QwStatus::InvalidArgument
    );
    assert!(last_error().contains("density kind"));
    unsafe { qw_coin_free(coin) };

    let q = quarter();
    assert_eq!(
        unsafe { qw_oracle(QW_WALK_LINE, 10_000, &mut d) },
        QwStatus::Resource
    );
    assert_eq!(
        unsafe { qw_evolve(q, 7, 3, &mut d) },
        QwStatus::InvalidArgument
    );
    assert_eq!(
        unsafe { qw_evolve(ptr::null(), QW_WALK_LINE, 3, &mut d) },
        QwStatus::NullPointer
    );
    assert_eq!(
        unsafe { qw_evolve(q, QW_WALK_LINE, 3, ptr::null_mut()) },
        QwStatus::NullPointer
    );
    assert!(last_error().contains("null pointer"));

    assert_eq!(
        unsafe { qw_evolve(q, QW_WALK_LINE, 3, &mut d) },
        QwStatus::Ok
    );
    let mut row = QwRow {
        x: 0,
        p0: 0.0,
        p1: 0.0,
        p: 0.0,
    };
    assert_eq!(
        unsafe { qw_distribution_row(d, 1000, &mut row) },
        QwStatus::InvalidArgument
    );
    unsafe {
        qw_distribution_free(d);
        qw_coin_free(q);
        qw_coin_free(ptr::null_mut());
        qw_distribution_free(ptr::null_mut());
        qw_limit_density_free(ptr::null_mut());
    }
}

#[test]
fn errors_are_per_thread() {
    let mut coin = ptr::null_mut();
    assert_eq!(
        unsafe { qw_coin_new(f64::INFINITY, &mut coin) },
        QwStatus::InvalidArgument
    );
    let other = std::thread::spawn(last_error).join().unwrap();
    assert!(other.is_empty());
    assert!(!last_error().is_empty());
}
