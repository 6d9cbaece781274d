//! Tables for CSV/JSON emission and their parsers.

use std::fmt;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use super::checks::{CheckEntry, Outcome, Suite};
use crate::closed_form::{ExactDistribution, ExactRow};
use crate::distribution::{DistRow, Distribution};
use crate::error::{Error, Result};
use crate::numeric::rational_to_f64;

/// Which computation produced a table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    Evolve,
    Exact,
    Oracle,
    Approx,
    Limit,
}

impl Route {
    pub fn name(self) -> &'static str {
        match self {
            Route::Evolve => "evolve",
            Route::Exact => "exact",
            Route::Oracle => "oracle",
            Route::Approx => "approx",
            Route::Limit => "limit",
        }
    }
}

impl FromStr for Route {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        [
            Route::Evolve,
            Route::Exact,
            Route::Oracle,
            Route::Approx,
            Route::Limit,
        ]
        .into_iter()
        .find(|r| r.name() == s)
        .ok_or_else(|| Error::InvalidArgument(format!("unknown route '{s}'")))
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(Error::InvalidArgument(format!("unknown format '{s}'"))),
        }
    }
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

/// Table metadata. `kind` is the walk kind, density kind or "verify".
#[derive(Clone, Debug, PartialEq)]
pub struct Meta {
    pub kind: String,
    pub theta: Option<f64>,
    pub t: Option<u64>,
    pub route: Option<Route>,
    /// Name used for file names, e.g. "fig4_exact".
    pub label: Option<String>,
}

impl Meta {
    pub fn new(
        kind: impl Into<String>,
        theta: Option<f64>,
        t: Option<u64>,
        route: Option<Route>,
    ) -> Self {
        Meta {
            kind: kind.into(),
            theta,
            t,
            route,
            label: None,
        }
    }

    pub fn labeled(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }
}

/// One (argument, value) sample of a density or CDF.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Sample {
    pub at: f64,
    pub value: f64,
}

/// One row of a long-format time series.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SeriesRow {
    pub t: u64,
    pub row: DistRow,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Rows {
    /// x,p0,p1,p
    Distribution(Vec<DistRow>),
    /// x,p0,p1,p with exact rationals alongside (JSON only)
    Exact(Vec<ExactRow>),
    /// y,density
    Density(Vec<Sample>),
    /// x,cdf
    Cdf(Vec<Sample>),
    /// t,x,p0,p1,p
    Series(Vec<SeriesRow>),
    /// suite,theta,t,max_residual,tolerance,pass,outcome
    Checks(Vec<CheckEntry>),
}

const DIST_COLS: &[&str] = &["x", "p0", "p1", "p"];
const DENSITY_COLS: &[&str] = &["y", "density"];
const CDF_COLS: &[&str] = &["x", "cdf"];
const SERIES_COLS: &[&str] = &["t", "x", "p0", "p1", "p"];
const CHECK_COLS: &[&str] = &[
    "suite",
    "theta",
    "t",
    "max_residual",
    "tolerance",
    "pass",
    "outcome",
];

impl Rows {
    pub fn columns(&self) -> &'static [&'static str] {
        match self {
            Rows::Distribution(_) | Rows::Exact(_) => DIST_COLS,
            Rows::Density(_) => DENSITY_COLS,
            Rows::Cdf(_) => CDF_COLS,
            Rows::Series(_) => SERIES_COLS,
            Rows::Checks(_) => CHECK_COLS,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Rows::Distribution(r) => r.len(),
            Rows::Exact(r) => r.len(),
            Rows::Density(r) | Rows::Cdf(r) => r.len(),
            Rows::Series(r) => r.len(),
            Rows::Checks(r) => r.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct OutputTable {
    pub meta: Meta,
    pub rows: Rows,
}

impl OutputTable {
    pub fn distribution(d: &Distribution, theta: f64, route: Route) -> Self {
        OutputTable {
            meta: Meta::new(d.kind.to_string(), Some(theta), Some(d.t), Some(route)),
            rows: Rows::Distribution(d.rows.clone()),
        }
    }

    pub fn exact(d: &ExactDistribution, theta: f64, route: Route) -> Self {
        OutputTable {
            meta: Meta::new(d.kind.to_string(), Some(theta), Some(d.t), Some(route)),
            rows: Rows::Exact(d.rows.clone()),
        }
    }

    /// The same table with exact rationals replaced by their f64 images,
    /// which is what the CSV form carries.
    pub fn to_float(&self) -> OutputTable {
        let rows = match &self.rows {
            Rows::Exact(r) => Rows::Distribution(
                r.iter()
                    .map(|e| DistRow {
                        x: e.x,
                        p0: e.p0.as_ref().map(rational_to_f64),
                        p1: e.p1.as_ref().map(rational_to_f64),
                        p: rational_to_f64(&e.p),
                    })
                    .collect(),
            ),
            other => other.clone(),
        };
        OutputTable {
            meta: self.meta.clone(),
            rows,
        }
    }

    pub fn file_name(&self, format: Format) -> String {
        let stem = self.meta.label.clone().unwrap_or_else(|| {
            let mut s = self.meta.route.map_or("table", Route::name).to_string();
            s.push('_');
            s.push_str(&self.meta.kind);
            if let Some(th) = self.meta.theta {
                s.push_str(&format!("_theta{}", format_number(th)));
            }
            if let Some(t) = self.meta.t {
                s.push_str(&format!("_t{t}"));
            }
            s
        });
        format!("{stem}.{}", format.extension())
    }
}

/// "0" for zero, plain shortest round-trip decimal for moderate magnitudes,
/// shortest round-trip scientific otherwise.
pub fn format_number(v: f64) -> String {
    if v == 0.0 {
        "0".to_string()
    } else if v.is_finite() && (1e-5..1e16).contains(&v.abs()) {
        format!("{v}")
    } else {
        format!("{v:e}")
    }
}

fn opt_number(v: Option<f64>) -> String {
    v.map(format_number).unwrap_or_default()
}

fn parse_number(s: &str) -> Result<f64> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("not a number: {s:?}")))
}

fn parse_opt_number(s: &str) -> Result<Option<f64>> {
    if s.trim().is_empty() {
        Ok(None)
    } else {
        parse_number(s).map(Some)
    }
}

fn parse_int<T: FromStr>(s: &str) -> Result<T> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("not an integer: {s:?}")))
}

fn dist_record(r: &DistRow) -> Vec<String> {
    vec![
        r.x.to_string(),
        opt_number(r.p0),
        opt_number(r.p1),
        format_number(r.p),
    ]
}

fn records(rows: &Rows) -> Vec<Vec<String>> {
    match rows {
        Rows::Distribution(r) => r.iter().map(dist_record).collect(),
        Rows::Exact(r) => r
            .iter()
            .map(|e| {
                vec![
                    e.x.to_string(),
                    opt_number(e.p0.as_ref().map(rational_to_f64)),
                    opt_number(e.p1.as_ref().map(rational_to_f64)),
                    format_number(rational_to_f64(&e.p)),
                ]
            })
            .collect(),
        Rows::Density(r) | Rows::Cdf(r) => r
            .iter()
            .map(|s| vec![format_number(s.at), format_number(s.value)])
            .collect(),
        Rows::Series(r) => r
            .iter()
            .map(|s| {
                let mut v = vec![s.t.to_string()];
                v.extend(dist_record(&s.row));
                v
            })
            .collect(),
        Rows::Checks(r) => r
            .iter()
            .map(|c| {
                vec![
                    c.suite.name().to_string(),
                    format_number(c.theta),
                    c.t.to_string(),
                    format_number(c.max_residual),
                    format_number(c.tolerance),
                    c.pass.to_string(),
                    c.outcome.name().to_string(),
                ]
            })
            .collect(),
    }
}

pub fn to_csv(table: &OutputTable) -> Result<String> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    let csv_err = |e: csv::Error| Error::Parse(format!("csv: {e}"));
    w.write_record(table.rows.columns()).map_err(csv_err)?;
    for rec in records(&table.rows) {
        w.write_record(&rec).map_err(csv_err)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::Parse(format!("csv: {e}")))?;
    String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))
}

fn num_value(v: f64) -> Value {
    // NaN and infinities have no JSON form
    serde_json::Number::from_f64(v).map_or(Value::Null, Value::Number)
}

fn opt_value(v: Option<f64>) -> Value {
    v.map_or(Value::Null, num_value)
}

fn rational_value(q: &BigRational) -> Value {
    json!({"num": q.numer().to_string(), "den": q.denom().to_string()})
}

fn dist_value(r: &DistRow) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("x".into(), r.x.into());
    m.insert("p0".into(), opt_value(r.p0));
    m.insert("p1".into(), opt_value(r.p1));
    m.insert("p".into(), num_value(r.p));
    m
}

fn row_values(rows: &Rows) -> Vec<Value> {
    match rows {
        Rows::Distribution(r) => r.iter().map(|d| Value::Object(dist_value(d))).collect(),
        Rows::Exact(r) => r
            .iter()
            .map(|e| {
                let float = DistRow {
                    x: e.x,
                    p0: e.p0.as_ref().map(rational_to_f64),
                    p1: e.p1.as_ref().map(rational_to_f64),
                    p: rational_to_f64(&e.p),
                };
                let mut m = dist_value(&float);
                let q = |v: &Option<BigRational>| v.as_ref().map_or(Value::Null, rational_value);
                m.insert(
                    "exact".into(),
                    json!({"p0": q(&e.p0), "p1": q(&e.p1), "p": rational_value(&e.p)}),
                );
                Value::Object(m)
            })
            .collect(),
        Rows::Density(r) => r
            .iter()
            .map(|s| json!({"y": num_value(s.at), "density": num_value(s.value)}))
            .collect(),
        Rows::Cdf(r) => r
            .iter()
            .map(|s| json!({"x": num_value(s.at), "cdf": num_value(s.value)}))
            .collect(),
        Rows::Series(r) => r
            .iter()
            .map(|s| {
                let mut m = Map::new();
                m.insert("t".into(), s.t.into());
                m.extend(dist_value(&s.row));
                Value::Object(m)
            })
            .collect(),
        Rows::Checks(r) => r
            .iter()
            .map(|c| {
                json!({
                    "suite": c.suite.name(),
                    "theta": num_value(c.theta),
                    "t": c.t,
                    "max_residual": num_value(c.max_residual),
                    "tolerance": num_value(c.tolerance),
                    "pass": c.pass,
                    "outcome": c.outcome.name(),
                })
            })
            .collect(),
    }
}

pub fn to_json(table: &OutputTable) -> Result<String> {
    let m = &table.meta;
    let mut meta = Map::new();
    meta.insert("kind".into(), m.kind.clone().into());
    meta.insert("theta".into(), opt_value(m.theta));
    meta.insert("t".into(), m.t.map_or(Value::Null, Value::from));
    meta.insert(
        "route".into(),
        m.route.map_or(Value::Null, |r| r.name().into()),
    );
    if let Some(l) = &m.label {
        meta.insert("label".into(), l.clone().into());
    }
    let mut doc = Map::new();
    doc.insert("meta".into(), Value::Object(meta));
    doc.insert("columns".into(), json!(table.rows.columns()));
    doc.insert("rows".into(), Value::Array(row_values(&table.rows)));
    let doc = Value::Object(doc);
    let mut s = serde_json::to_string_pretty(&doc).map_err(|e| Error::Parse(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

pub fn render(table: &OutputTable, format: Format) -> Result<String> {
    match format {
        Format::Csv => to_csv(table),
        Format::Json => to_json(table),
    }
}

/// Writes the table to `dest`, or to stdout when `dest` is `None`.
pub fn emit(table: &OutputTable, format: Format, dest: Option<&Path>) -> Result<()> {
    let text = render(table, format)?;
    match dest {
        Some(path) => std::fs::write(path, text).map_err(|e| Error::io(path, e)),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| Error::io("<stdout>", e))
        }
    }
}

fn parse_dist(get: impl Fn(usize) -> String) -> Result<DistRow> {
    Ok(DistRow {
        x: parse_int(&get(0))?,
        p0: parse_opt_number(&get(1))?,
        p1: parse_opt_number(&get(2))?,
        p: parse_number(&get(3))?,
    })
}

/// Parses CSV text written by [`to_csv`]. CSV carries no metadata, so it is
/// supplied by the caller; exact tables come back as their float images.
pub fn parse_csv(text: &str, meta: Meta) -> Result<OutputTable> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_reader(text.as_bytes());
    let csv_err = |e: csv::Error| Error::Parse(format!("csv: {e}"));
    let header: Vec<String> = rdr
        .headers()
        .map_err(csv_err)?
        .iter()
        .map(str::to_string)
        .collect();
    let header: Vec<&str> = header.iter().map(String::as_str).collect();
    let recs = rdr
        .records()
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(csv_err)?;
    let field = |r: &csv::StringRecord, i: usize| r.get(i).unwrap_or("").to_string();
    let rows = match header.as_slice() {
        h if h == DIST_COLS => Rows::Distribution(
            recs.iter()
                .map(|r| parse_dist(|i| field(r, i)))
                .collect::<Result<_>>()?,
        ),
        h if h == DENSITY_COLS || h == CDF_COLS => {
            let samples = recs
                .iter()
                .map(|r| {
                    Ok(Sample {
                        at: parse_number(&field(r, 0))?,
                        value: parse_number(&field(r, 1))?,
                    })
                })
                .collect::<Result<_>>()?;
            if h == DENSITY_COLS {
                Rows::Density(samples)
            } else {
                Rows::Cdf(samples)
            }
        }
        h if h == SERIES_COLS => Rows::Series(
            recs.iter()
                .map(|r| {
                    Ok(SeriesRow {
                        t: parse_int(&field(r, 0))?,
                        row: parse_dist(|i| field(r, i + 1))?,
                    })
                })
                .collect::<Result<_>>()?,
        ),
        h if h == CHECK_COLS => Rows::Checks(
            recs.iter()
                .map(|r| {
                    Ok(CheckEntry {
                        suite: field(r, 0).parse::<Suite>()?,
                        theta: parse_number(&field(r, 1))?,
                        t: parse_int(&field(r, 2))?,
                        max_residual: parse_number(&field(r, 3))?,
                        tolerance: parse_number(&field(r, 4))?,
                        pass: parse_int(&field(r, 5))?,
                        outcome: field(r, 6).parse::<Outcome>()?,
                    })
                })
                .collect::<Result<_>>()?,
        ),
        h => return Err(Error::Parse(format!("unrecognised columns {h:?}"))),
    };
    Ok(OutputTable { meta, rows })
}

fn jnum(v: &Value) -> Result<f64> {
    match v {
        Value::Null => Ok(f64::NAN),
        v => v
            .as_f64()
            .ok_or_else(|| Error::Parse(format!("expected number, got {v}"))),
    }
}

fn jopt(v: &Value) -> Result<Option<f64>> {
    if v.is_null() {
        Ok(None)
    } else {
        jnum(v).map(Some)
    }
}

fn jint<T: TryFrom<i64>>(v: &Value) -> Result<T> {
    v.as_i64()
        .and_then(|i| T::try_from(i).ok())
        .ok_or_else(|| Error::Parse(format!("expected integer, got {v}")))
}

fn jstr(v: &Value) -> Result<&str> {
    v.as_str()
        .ok_or_else(|| Error::Parse(format!("expected string, got {v}")))
}

fn jrational(v: &Value) -> Result<Option<BigRational>> {
    if v.is_null() {
        return Ok(None);
    }
    let big = |k: &str| -> Result<BigInt> {
        jstr(&v[k])?
            .parse()
            .map_err(|_| Error::Parse(format!("bad rational part {}", v[k])))
    };
    let den = big("den")?;
    if den == BigInt::from(0) {
        return Err(Error::Parse("zero denominator".into()));
    }
    Ok(Some(BigRational::new(big("num")?, den)))
}

fn jdist(v: &Value) -> Result<DistRow> {
    Ok(DistRow {
        x: jint(&v["x"])?,
        p0: jopt(&v["p0"])?,
        p1: jopt(&v["p1"])?,
        p: jnum(&v["p"])?,
    })
}

/// Parses JSON written by [`to_json`].
pub fn parse_json(text: &str) -> Result<OutputTable> {
    let doc: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let m = &doc["meta"];
    let meta = Meta {
        kind: jstr(&m["kind"])?.to_string(),
        theta: jopt(&m["theta"])?,
        t: if m["t"].is_null() {
            None
        } else {
            Some(jint(&m["t"])?)
        },
        route: if m["route"].is_null() {
            None
        } else {
            Some(jstr(&m["route"])?.parse()?)
        },
        label: m["label"].as_str().map(str::to_string),
    };
    let cols: Vec<&str> = doc["columns"]
        .as_array()
        .ok_or_else(|| Error::Parse("missing columns".into()))?
        .iter()
        .map(jstr)
        .collect::<Result<_>>()?;
    let items = doc["rows"]
        .as_array()
        .ok_or_else(|| Error::Parse("missing rows".into()))?;
    let exact = items.first().is_some_and(|r| r.get("exact").is_some());
    let rows = match cols.as_slice() {
        c if c == DIST_COLS && exact => Rows::Exact(
            items
                .iter()
                .map(|r| {
                    let e = &r["exact"];
                    Ok(ExactRow {
                        x: jint(&r["x"])?,
                        p0: jrational(&e["p0"])?,
                        p1: jrational(&e["p1"])?,
                        p: jrational(&e["p"])?
                            .ok_or_else(|| Error::Parse("missing exact p".into()))?,
                    })
                })
                .collect::<Result<_>>()?,
        ),
        c if c == DIST_COLS => Rows::Distribution(items.iter().map(jdist).collect::<Result<_>>()?),
        c if c == DENSITY_COLS => Rows::Density(
            items
                .iter()
                .map(|r| {
                    Ok(Sample {
                        at: jnum(&r["y"])?,
                        value: jnum(&r["density"])?,
                    })
                })
                .collect::<Result<_>>()?,
        ),
        c if c == CDF_COLS => Rows::Cdf(
            items
                .iter()
                .map(|r| {
                    Ok(Sample {
                        at: jnum(&r["x"])?,
                        value: jnum(&r["cdf"])?,
                    })
                })
                .collect::<Result<_>>()?,
        ),
        c if c == SERIES_COLS => Rows::Series(
            items
                .iter()
                .map(|r| {
                    Ok(SeriesRow {
                        t: jint(&r["t"])?,
                        row: jdist(r)?,
                    })
                })
                .collect::<Result<_>>()?,
        ),
        c if c == CHECK_COLS => Rows::Checks(
            items
                .iter()
                .map(|r| {
                    Ok(CheckEntry {
                        suite: jstr(&r["suite"])?.parse()?,
                        theta: jnum(&r["theta"])?,
                        t: jint(&r["t"])?,
                        max_residual: jnum(&r["max_residual"])?,
                        tolerance: jnum(&r["tolerance"])?,
                        pass: r["pass"]
                            .as_bool()
                            .ok_or_else(|| Error::Parse("pass must be boolean".into()))?,
                        outcome: jstr(&r["outcome"])?.parse()?,
                    })
                })
                .collect::<Result<_>>()?,
        ),
        c => return Err(Error::Parse(format!("unrecognised columns {c:?}"))),
    };
    Ok(OutputTable { meta, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_form::{line_exact, q2_oracle_distribution, ExactParams};
    use crate::coin::Coin;
    use crate::evolution::evolve_half_line;
    use crate::state::WalkKind;
    use proptest::prelude::*;

    fn body(csv: &str) -> &str {
        csv.split_once('\n').unwrap().1
    }

    #[test]
    fn half_line_first_step_csv() {
        let coin = Coin::pi_fraction(1, 4).unwrap();
        let d = evolve_half_line(&coin, 1).distribution();
        let csv = to_csv(&OutputTable::distribution(&d, coin.theta(), Route::Evolve)).unwrap();
        assert!(csv.starts_with("x,p0,p1,p\n"));
        // float evolution is within an ulp or two of the hand values
        let back = parse_csv(&csv, Meta::new("halfline", None, None, None)).unwrap();
        let Rows::Distribution(rows) = back.rows else {
            panic!()
        };
        for (x, r) in rows.iter().enumerate() {
            assert_eq!((r.x, r.p0), (x as i64, Some(0.0)));
            assert!((r.p1.unwrap() - 0.5).abs() < 1e-15 && (r.p - 0.5).abs() < 1e-15);
        }
        // the exact route prints them verbatim
        let q = q2_oracle_distribution(WalkKind::HalfLine, 1).unwrap();
        let csv = to_csv(&OutputTable::exact(&q, coin.theta(), Route::Oracle)).unwrap();
        assert_eq!(body(&csv), "0,0,0.5,0.5\n1,0,0.5,0.5\n");
    }

    #[test]
    fn line_exact_is_total_only() {
        let coin = Coin::pi_fraction(1, 4).unwrap();
        let d = line_exact(&coin, 1, ExactParams::default()).unwrap();
        let csv = to_csv(&OutputTable::distribution(&d, coin.theta(), Route::Exact)).unwrap();
        assert_eq!(body(&csv), "-2,,,0.5\n-1,,,0.5\n");
    }

    #[test]
    fn empty_table_is_header_only() {
        let t = OutputTable {
            meta: Meta::new("halfline", None, None, Some(Route::Evolve)),
            rows: Rows::Distribution(vec![]),
        };
        assert_eq!(to_csv(&t).unwrap(), "x,p0,p1,p\n");
        assert_eq!(parse_json(&to_json(&t).unwrap()).unwrap(), t);
    }

    #[test]
    fn number_format() {
        assert_eq!(format_number(0.0), "0");
        assert_eq!(format_number(0.25), "0.25");
        assert_eq!(format_number(1e-7), "1e-7");
        assert_eq!(format_number(-3.5e20), "-3.5e20");
        assert_eq!(format_number(f64::NAN), "NaN");
    }

    #[test]
    fn exact_json_keeps_rationals() {
        let d = q2_oracle_distribution(WalkKind::HalfLine, 9).unwrap();
        let t = OutputTable::exact(&d, std::f64::consts::FRAC_PI_4, Route::Oracle);
        let json = to_json(&t).unwrap();
        assert!(json.contains("\"num\""));
        assert_eq!(parse_json(&json).unwrap(), t);
        let csv = to_csv(&t).unwrap();
        assert_eq!(parse_csv(&csv, t.meta.clone()).unwrap(), t.to_float());
    }

    #[test]
    fn checks_round_trip_with_nan() {
        let t = OutputTable {
            meta: Meta::new("verify", None, None, None),
            rows: Rows::Checks(vec![
                CheckEntry::measured(Suite::Lemma1, 0.5, 3, 1e-17, 1e-12),
                CheckEntry::domain_error(Suite::ExactVsSim, 0.0, 10, 1e-9),
            ]),
        };
        for back in [
            parse_csv(&to_csv(&t).unwrap(), t.meta.clone()).unwrap(),
            parse_json(&to_json(&t).unwrap()).unwrap(),
        ] {
            let (Rows::Checks(a), Rows::Checks(b)) = (&t.rows, &back.rows) else {
                panic!("wrong rows")
            };
            assert_eq!(a[0], b[0]);
            assert!(b[1].max_residual.is_nan());
            assert_eq!(b[1].outcome, Outcome::DomainError);
        }
    }

    #[test]
    fn file_names() {
        let mut m = Meta::new("line", Some(0.5), Some(12), Some(Route::Exact));
        let t = OutputTable {
            meta: m.clone(),
            rows: Rows::Distribution(vec![]),
        };
        assert_eq!(t.file_name(Format::Csv), "exact_line_theta0.5_t12.csv");
        m = m.labeled("fig4_exact");
        let t = OutputTable {
            meta: m,
            rows: Rows::Distribution(vec![]),
        };
        assert_eq!(t.file_name(Format::Json), "fig4_exact.json");
    }

    fn prob() -> impl Strategy<Value = f64> {
        prop_oneof![Just(0.0), 0.0f64..1.0, (1e-300f64..1e-5)]
    }

    fn dist_row() -> impl Strategy<Value = DistRow> {
        (
            -1000i64..1000,
            proptest::option::of(prob()),
            proptest::option::of(prob()),
            prob(),
        )
            .prop_map(|(x, p0, p1, p)| DistRow { x, p0, p1, p })
    }

    fn table() -> impl Strategy<Value = OutputTable> {
        let meta = (
            proptest::option::of(-10.0f64..10.0),
            proptest::option::of(0u64..5000),
        )
            .prop_map(|(th, t)| Meta::new("halfline", th, t, Some(Route::Evolve)));
        let rows = prop_oneof![
            proptest::collection::vec(dist_row(), 0..30).prop_map(Rows::Distribution),
            proptest::collection::vec((-2.0f64..2.0, prob()), 0..30).prop_map(|v| Rows::Density(
                v.into_iter()
                    .map(|(at, value)| Sample { at, value })
                    .collect()
            )),
            proptest::collection::vec((-2.0f64..2.0, prob()), 0..30).prop_map(|v| Rows::Cdf(
                v.into_iter()
                    .map(|(at, value)| Sample { at, value })
                    .collect()
            )),
            proptest::collection::vec((0u64..600, dist_row()), 0..30).prop_map(|v| Rows::Series(
                v.into_iter().map(|(t, row)| SeriesRow { t, row }).collect()
            )),
        ];
        (meta, rows).prop_map(|(meta, rows)| OutputTable { meta, rows })
    }

    proptest! {
        #[test]
        fn csv_round_trip(t in table()) {
            let back = parse_csv(&to_csv(&t).unwrap(), t.meta.clone()).unwrap();
            prop_assert_eq!(back, t);
        }

        #[test]
        fn json_round_trip(t in table()) {
            prop_assert_eq!(parse_json(&to_json(&t).unwrap()).unwrap(), t);
        }

        #[test]
        fn numbers_round_trip(v in proptest::num::f64::NORMAL | proptest::num::f64::SUBNORMAL | proptest::num::f64::ZERO) {
            let back: f64 = format_number(v).parse().unwrap();
            prop_assert!(back == v);
        }
    }
}
