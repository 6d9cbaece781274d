use qwalk::closed_form::{
    half_line_exact_rational, line_exact_rational, ExactRow, Q2Walk, SumKernel,
};
use qwalk::harness::{run_checks, Suite};
use qwalk::{Coin, WalkKind};

#[test]
fn oracle_equals_rational_closed_form_up_to_t_100() {
    let mut half = Q2Walk::new(WalkKind::HalfLine);
    let mut line = Q2Walk::new(WalkKind::Line);
    for t in 1..=100u64 {
        half.step();
        line.step();
        let oracle = half.distribution().unwrap();
        for row in half_line_exact_rational(t, SumKernel::Jacobi).unwrap().rows {
            let got = oracle.row(row.x).unwrap();
            assert_eq!(got.p0, row.p0, "t = {t}, x = {}", row.x);
            assert_eq!(got.p1, row.p1, "t = {t}, x = {}", row.x);
            assert_eq!(got.p, row.p, "t = {t}, x = {}", row.x);
        }
        let oracle = line.distribution().unwrap();
        let closed = line_exact_rational(t, SumKernel::Jacobi).unwrap();
        for ExactRow { x, p, .. } in &oracle.rows {
            assert_eq!(*p, closed.prob(*x), "t = {t}, x = {x}");
        }
    }
}

#[test]
fn every_suite_passes_on_the_standard_grid() {
    let thetas = [
        Coin::pi_fraction(1, 6).unwrap(),
        Coin::pi_fraction(1, 4).unwrap(),
        Coin::pi_fraction(1, 3).unwrap(),
        Coin::new(1.0).unwrap(),
    ];
    let ts: Vec<u64> = (1..=200).collect();
    let report = run_checks(Suite::All, &thetas, &ts);
    let failures: Vec<_> = report.failures().collect();
    assert!(failures.is_empty(), "{failures:?}");
    assert_eq!(report.domain_errors().count(), 0);
    assert_eq!(report.checks.len(), 6 * 4 * 200 + 4);
}
