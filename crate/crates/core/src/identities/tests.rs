use super::*;
use crate::arith::factorial;
use crate::triangle::{lah, stirling1_unsigned, stirling2, triangle};

const EXEC: Execution = Execution::Sequential;

fn explicit(kind: TriangleKind, rows: usize) -> Triangle {
    triangle(kind, rows, Strategy::Explicit).unwrap()
}

fn corrupted(mut t: Triangle, n: usize, k: usize) -> Triangle {
    let v = t.get(n as i64, k as i64) + 1;
    t.set(n, k, v);
    t
}

fn fails_at_row(report: &CheckReport, n: i64) {
    let c = report
        .counterexample
        .as_ref()
        .unwrap_or_else(|| panic!("{} should have failed", report.name));
    assert_eq!(c.at.n, n, "{}", report.to_line());
}

#[test]
fn horizontal_wardlah() {
    assert!(check_horizontal_wardlah(10, 3).passed());
    let t = explicit(TriangleKind::WardLah, 10);
    let m1 = check_wardlah_m1_recurrence_on(&t, 10, EXEC);
    assert!(m1.passed());
    assert_eq!(m1.checked, 55);
    let bad = corrupted(t, 6, 2);
    fails_at_row(&check_horizontal_wardlah_on(&bad, 10, 3, EXEC), 6);
    fails_at_row(&check_wardlah_m1_recurrence_on(&bad, 10, EXEC), 6);
}

#[test]
fn order3_wardlah() {
    let r = check_order3_wardlah(20);
    assert!(r.passed(), "{r}");
    // n=2, k=1: 2*3*T(1,0) - 2*0*T(0,1) + 3*T(1,1) = 0 - 0 + 6
    let t = explicit(TriangleKind::WardLah, 2);
    assert_eq!(t.get(2, 1), Integer::from(6));
    assert_eq!(
        Integer::from(6) * t.get(1, 0) - Integer::from(0) * t.get(0, 1)
            + Integer::from(3) * t.get(1, 1),
        Integer::from(6)
    );
    let bad = corrupted(explicit(TriangleKind::WardLah, 20), 9, 4);
    fails_at_row(&check_order3_wardlah_on(&bad, 20, EXEC), 9);
}

#[test]
fn order5_binomial_wardlah() {
    let r = check_order5_binomial_wardlah(15);
    assert!(r.passed(), "{r}");
    let t = explicit(TriangleKind::BinomialWardLah, 2);
    let first = check_order5_binomial_wardlah_on(&t, 2, EXEC);
    assert!(first.passed());
    assert_eq!(first.checked, 1);
    let bad = corrupted(explicit(TriangleKind::BinomialWardLah, 15), 7, 7);
    fails_at_row(&check_order5_binomial_wardlah_on(&bad, 15, EXEC), 7);
}

#[test]
fn egf_wardlah() {
    let r = check_egf_wardlah(1, 8);
    assert!(r.passed(), "{r}");
    assert!(check_egf_wardlah(2, 6).passed());
    // k = 2: coefficient of x^4 is 1/2 = T(2,2)/4! = 12/24
    let one_minus_x = &PowerSeries::one(6) - &PowerSeries::x(6);
    let s = one_minus_x
        .inverse()
        .unwrap()
        .pow(2)
        .shift(4)
        .div_scalar(&qi(2))
        .unwrap();
    assert_eq!(s.coeff(4), rational(1, 2));
    assert_eq!(s.coeff(3), Rational::zero());
    let k1 = one_minus_x.inverse().unwrap().shift(2);
    assert!((2..=6).all(|n| k1.coeff(n) == qi(1)));
    let bad = corrupted(explicit(TriangleKind::WardLah, 24), 5, 3);
    fails_at_row(&check_egf_wardlah_on(&bad, 3, 24), 8);
}

#[test]
fn gf_varied_wardlah() {
    for k in 1..=4 {
        assert!(check_gf_variedwardlah(k, 12).passed());
    }
    let t = explicit(TriangleKind::VariedWardLah, 3);
    assert_eq!(Rational::new(t.get(3, 2), factorial(6)), qi(2));
    for n in 1..=3 {
        assert_eq!(Rational::new(t.get(n, 1), factorial(2 * n as u64)), qi(1));
    }
    let bad = corrupted(explicit(TriangleKind::VariedWardLah, 12), 4, 2);
    fails_at_row(&check_gf_variedwardlah_on(&bad, 2, 12), 4);
}

#[test]
fn lah_varied_wardlah() {
    assert!(check_lah_variedwardlah(12).passed());
    // n=2, k=1: 2 * L(2,1) = 4 = binom(2,1) * (T*(1,0) + T*(1,1))
    let t = explicit(TriangleKind::VariedWardLah, 2);
    assert_eq!(rising_factorial(2, 1) * lah(2, 1), Integer::from(4));
    assert_eq!(
        Integer::from(2) * (t.get(1, 0) + t.get(1, 1)),
        Integer::from(4)
    );
    for n in 1..=6 {
        assert_eq!(rising_factorial(1, 0) * lah(n, n), Integer::from(1));
    }
}

#[test]
fn stirling_row_sum_conjectures() {
    let r1 = check_conjecture_rowsums_stirling(TriangleKind::BinomialWard1, 12);
    let r2 = check_conjecture_rowsums_stirling(TriangleKind::BinomialWard2, 12);
    assert!(r1.conjecture && r2.conjecture);
    assert!(r1.passed() && r2.passed());
    assert_eq!(r1.evidence[2].row_sum, Integer::from(11));
    assert_eq!(r1.evidence[2].expected, stirling1_unsigned(4, 2));
    assert_eq!(r2.evidence[2].row_sum, Integer::from(7));
    assert_eq!(r2.evidence[2].expected, stirling2(4, 2));
    assert_eq!(r1.evidence[0].row_sum, Integer::from(1));
    assert_eq!(r1.evidence.len(), 13);
}

#[test]
fn central_lah_row_sums() {
    let r = check_central_lah_rowsums(20);
    assert!(r.passed());
    assert_eq!(r.evidence[1].row_sum, Integer::from(2));
    // 24 + 12 = 36 = 4!/2! * binom(3,1)
    assert_eq!(r.evidence[2].row_sum, Integer::from(36));
    assert_eq!(r.evidence[2].expected, lah(4, 2));
    assert_eq!(r.evidence[0].row_sum, Integer::from(1));
    let bad = corrupted(explicit(TriangleKind::BinomialWardLah, 8), 5, 1);
    let lah = Reference::Lah.table(16);
    fails_at_row(&check_central_lah_rowsums_on(&bad, &lah, 8), 5);
}

#[test]
fn side_conditions_are_skipped_and_counted() {
    let t = explicit(TriangleKind::WardLah, 6);
    let r = check_wardlah_recurrence_rational_on(&t, 6, EXEC);
    assert!(r.passed());
    assert_eq!((r.checked, r.skipped), (15, 6));
    let b = explicit(TriangleKind::BinomialWardLah, 6);
    let r = check_binomial_wardlah_recurrence_on(&b, 6, EXEC);
    assert_eq!((r.checked, r.skipped), (15, 6));
}

#[test]
fn full_suite_passes() {
    let reports = identity_suite(15).unwrap();
    for r in &reports {
        assert!(r.passed(), "{r}");
        assert!(!r.conjecture);
    }
    assert!(reports.len() > 30);
    let cache = TriangleCache::new(EXEC);
    let set = TriangleSet::build(&cache, GF_ORDER).unwrap();
    let per_kind: usize = TriangleKind::ALL
        .into_iter()
        .filter(|k| k.scale() != Scale::Plain)
        .map(|k| identity_suite_for(&set, k, 6, EXEC).len())
        .sum();
    assert!(per_kind < identity_suite_on(&set, 6, EXEC).len());
    assert_eq!(
        identity_suite_for(&set, TriangleKind::Ward1, 6, EXEC).len(),
        3
    );
}

#[test]
fn suite_detects_faults_in_every_kind() {
    let cache = TriangleCache::new(EXEC);
    let clean = TriangleSet::build(&cache, GF_ORDER).unwrap();
    for kind in TriangleKind::ALL {
        let mut set = clean.clone();
        let bad = corrupted(set.get(kind).clone(), 5, 3);
        set.replace(bad);
        let reports = identity_suite_for(&set, kind, 10, EXEC);
        assert!(
            reports
                .iter()
                .any(|r| r.counterexample.as_ref().is_some_and(|c| c.at.n == 5)),
            "fault in {kind} went unnoticed"
        );
    }
}

#[test]
fn equivalence_reports_first_difference() {
    let a = triangle(TriangleKind::Ward1, 10, Strategy::Recurrence).unwrap();
    let b = triangle(TriangleKind::Ward1, 10, Strategy::PartitionTransform).unwrap();
    assert!(check_strategy_equivalence(&a, &b, 10).passed());
    let r = check_strategy_equivalence(&corrupted(a, 4, 0), &b, 10);
    assert_eq!(r.counterexample.unwrap().at, Point::nk(4, 0));
}

#[test]
fn relation_names_parse() {
    assert_eq!(
        "stirling1".parse::<RowSumRelation>().unwrap(),
        RowSumRelation::Stirling1
    );
    assert_eq!(
        "central-lah".parse::<RowSumRelation>().unwrap(),
        RowSumRelation::CentralLah
    );
    assert!("bell".parse::<RowSumRelation>().is_err());
}
