mod common;

use weylmin::criterion::{ak_bound, classical_bound, sl2_lr0_member, sl2_property, ClassicalBound, GroupDatum};
use weylmin::ell::ell_delta;
use weylmin::{RootSystem, SimpleType};

/// Weights of V_a as a multiset of integers a, a−2, ..., −a.
fn weights(a: i64) -> Vec<i64> {
    (0..=a).map(|i| a - 2 * i).collect()
}

/// dim (V_a ⊗ V_b)^{SL₂} = mult(0) − mult(2).
fn invariants(a: i64, b: i64) -> i64 {
    let (wa, wb) = (weights(a), weights(b));
    let count = |t: i64| wa.iter().flat_map(|x| wb.iter().map(move |y| x + y)).filter(|&s| s == t).count() as i64;
    count(0) - count(2)
}

#[test]
fn clebsch_gordan_oracle_a1xa1() {
    for a in 0..=6 {
        for b in 0..=6 {
            // Membership in the cone: some positive multiple carries invariants.
            let oracle = (1..=4).any(|n| invariants(n * a, n * b) > 0);
            let m = sl2_lr0_member(&[a, b], &[true, true]).unwrap();
            assert_eq!(m.member, oracle, "(a, b) = ({a}, {b})");
        }
    }
}

#[test]
fn lr0_is_a_cone() {
    for v in [[3i64, 3, 0], [1, 4, 2], [5, 1, 1], [0, 0, 0]] {
        let base = sl2_lr0_member(&v, &[true, true, false]).unwrap().member;
        for s in 2..5 {
            let scaled: Vec<i64> = v.iter().map(|x| x * s).collect();
            assert_eq!(sl2_lr0_member(&scaled, &[true, true, false]).unwrap().member, base);
        }
    }
}

#[test]
fn torus_reports_ell() {
    for t in common::simple_types(6) {
        let rs = RootSystem::from_type_string(&t).unwrap();
        let r = ak_bound(&rs, &GroupDatum::torus(1)).unwrap();
        assert_eq!(r.max_k as usize, ell_delta(&rs).unwrap().value, "{t}");
    }
}

#[test]
fn sl2_exact_answer() {
    for t in common::simple_types(8) {
        let st: SimpleType = t.parse().unwrap();
        let (a, m) = sl2_property(&[st], &[true]).unwrap();
        assert_eq!(a, t != "A1", "{t}");
        assert_eq!(m, !matches!(t.as_str(), "A1" | "A2" | "B2"), "{t}");
    }
}

#[test]
fn classical_bound_grows_with_m() {
    assert_eq!(classical_bound("B2".parse().unwrap(), 1, true).unwrap().k(), Some(2));
    let ks: Vec<i64> = (3..=9).map(|n| classical_bound(SimpleType::new(weylmin::Family::B, n).unwrap(), 3, true).unwrap().k().unwrap()).collect();
    assert!(ks.windows(2).all(|w| w[0] < w[1]), "{ks:?}");
    assert!(matches!(classical_bound("A4".parse().unwrap(), 1, false).unwrap(), ClassicalBound::NotApplicable { .. }));
}
