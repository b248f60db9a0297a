use proptest::prelude::*;
use ward_core::identities::check_strategy_equivalence;
use ward_core::{build, triangle, value, Execution, Integer, Strategy, TriangleKind};

fn row(kind: TriangleKind, n: usize) -> Vec<i64> {
    let t = triangle(kind, n, Strategy::Recurrence).unwrap();
    t.row(n).iter().map(|v| i64::try_from(v).unwrap()).collect()
}

#[test]
fn known_rows() {
    use TriangleKind::*;
    assert_eq!(row(Ward1, 4), [0, 24, 130, 210, 105]);
    assert_eq!(row(Ward2, 4), [0, 1, 25, 105, 105]);
    assert_eq!(row(WardLah, 3), [0, 24, 120, 120]);
    assert_eq!(row(BinomialWardLah, 3), [0, 360, 720, 120]);
    assert_eq!(row(VariedWard1, 2), [0, 8, 6]);
    assert_eq!(row(BinomialWard2, 2), [0, 4, 3]);
}

#[test]
fn every_strategy_pair_agrees() {
    for kind in TriangleKind::ALL {
        let built: Vec<_> = kind
            .supported_strategies()
            .iter()
            .map(|&s| triangle(kind, 12, s).unwrap())
            .collect();
        for a in &built {
            for b in &built {
                let r = check_strategy_equivalence(a, b, 12);
                assert!(r.passed(), "{kind}: {r}");
            }
        }
    }
}

#[test]
fn execution_policy_does_not_change_values() {
    for kind in TriangleKind::ALL {
        for &s in kind.supported_strategies() {
            let rows = if s == Strategy::PartitionTransform {
                10
            } else {
                30
            };
            let seq = build(kind, rows, s, Execution::Sequential).unwrap();
            let par = build(kind, rows, s, Execution::Parallel).unwrap();
            assert_eq!(seq, par, "{kind} by {s}");
        }
    }
}

#[test]
fn out_of_range_is_zero() {
    let t = triangle(TriangleKind::WardLah, 5, Strategy::Explicit).unwrap();
    assert_eq!(t.get(3, 4), Integer::from(0));
    assert_eq!(t.get(3, -1), Integer::from(0));
    assert_eq!(t.get(-1, 0), Integer::from(0));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn single_values_match_tables(kind_index in 0usize..9, n in 0usize..=25, k_seed in 0usize..=25) {
        let kind = TriangleKind::ALL[kind_index];
        let k = k_seed % (n + 1);
        let t = triangle(kind, 25, Strategy::Recurrence).unwrap();
        for &s in kind.supported_strategies() {
            if s == Strategy::PartitionTransform && n > 14 {
                continue;
            }
            prop_assert_eq!(value(kind, n, k, s).unwrap(), t.get(n as i64, k as i64));
        }
    }
}
