mod common;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use weylmin::ell::{ell_exit_cone, ell_minus};
use weylmin::{RootSystem, Weight, WeylWord};

fn ell(rs: &RootSystem, h: &Weight, l: &Weight) -> Option<usize> {
    ell_minus(rs, h, l, None).unwrap().value()
}

fn systems(max_rank: usize) -> Vec<RootSystem> {
    common::simple_types(max_rank).iter().map(|t| RootSystem::from_type_string(t).unwrap()).collect()
}

fn random_dominant(rng: &mut ChaCha8Rng, n: usize, max: i64) -> Weight {
    loop {
        let w = Weight::new((0..n).map(|_| rng.gen_range(0..=max)).collect());
        if !w.is_zero() {
            return w;
        }
    }
}

#[test]
fn symmetry_on_fundamental_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let mut pool = systems(6);
    pool.push(RootSystem::from_type_string("A2xG2").unwrap());
    pool.push(RootSystem::from_type_string("B2xA3").unwrap());
    for _ in 0..240 {
        let rs = &pool[rng.gen_range(0..pool.len())];
        let n = rs.rank();
        let (j, k) = (rng.gen_range(1..=n), rng.gen_range(1..=n));
        let (wj, wk) = (rs.fundamental_weight(j).unwrap(), rs.fundamental_weight(k).unwrap());
        assert_eq!(ell(rs, &wj, &wk), ell(rs, &wk, &wj), "{} ({j},{k})", rs.type_string());
    }
}

#[test]
fn superadditivity_on_dominant_triples() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    let pool = systems(5);
    for _ in 0..120 {
        let rs = &pool[rng.gen_range(0..pool.len())];
        let n = rs.rank();
        let h = random_dominant(&mut rng, n, 2);
        let (l1, l2) = (random_dominant(&mut rng, n, 2), random_dominant(&mut rng, n, 2));
        let whole = ell(rs, &h, &l1.add(&l2)).unwrap();
        let parts = ell(rs, &h, &l1).unwrap().min(ell(rs, &h, &l2).unwrap());
        assert!(whole >= parts, "{} h={h} l1={l1} l2={l2}: {whole} < {parts}", rs.type_string());
    }
}

#[test]
fn duality_involution() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    // Types where the duality involution is nontrivial, plus a few where it is the identity.
    let pool: Vec<RootSystem> = ["A3", "A4", "A5", "A6", "D5", "E6", "A2xA3", "B3", "D4"]
        .iter()
        .map(|t| RootSystem::from_type_string(t).unwrap())
        .collect();
    for _ in 0..120 {
        let rs = &pool[rng.gen_range(0..pool.len())];
        let n = rs.rank();
        let h = random_dominant(&mut rng, n, 1);
        let l = random_dominant(&mut rng, n, 1);
        let (hs, ls) = (rs.dual_weight(&h).unwrap(), rs.dual_weight(&l).unwrap());
        assert_eq!(rs.dual_weight(&hs).unwrap(), h);
        assert_eq!(ell(rs, &hs, &ls), ell(rs, &h, &l), "{} h={h} l={l}", rs.type_string());
    }
}

#[test]
fn cone_equivalence() {
    for rs in systems(6) {
        let n = rs.rank();
        for k in 1..=n {
            let l = rs.fundamental_weight(k).unwrap();
            let via_min = (1..=n).filter_map(|j| ell(&rs, &rs.fundamental_weight(j).unwrap(), &l)).min().unwrap();
            assert_eq!(ell_exit_cone(&rs, &l).unwrap(), via_min, "{} w{k}", rs.type_string());
        }
    }
}

fn arb_case() -> impl Strategy<Value = (String, Vec<usize>, Vec<i64>)> {
    prop::sample::select(vec!["A3", "B3", "C4", "D4", "G2", "F4", "A1xB2"]).prop_flat_map(|t| {
        let n = RootSystem::from_type_string(t).unwrap().rank();
        (Just(t.to_string()), prop::collection::vec(1..=n, 0..12), prop::collection::vec(-3i64..=3, n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 128, rng_algorithm: prop::test_runner::RngAlgorithm::ChaCha, failure_persistence: None, rng_seed: prop::test_runner::RngSeed::Fixed(0x5eed_0004), ..ProptestConfig::default() })]

    #[test]
    fn word_inverse_undoes((t, letters, coords) in arb_case()) {
        let rs = RootSystem::from_type_string(&t).unwrap();
        let w = WeylWord::new(letters);
        let l = Weight::new(coords);
        let there = rs.apply_word(&w, &l).unwrap();
        prop_assert_eq!(rs.apply_word(&w.inverse(), &there).unwrap(), l);
        prop_assert!(rs.word_length(&w).unwrap() <= w.len());
        prop_assert_eq!(rs.word_length(&w).unwrap() % 2, w.len() % 2);
    }

    #[test]
    fn word_text_round_trip((t, letters, _c) in arb_case()) {
        let rs = RootSystem::from_type_string(&t).unwrap();
        let w = WeylWord::new(letters);
        prop_assert_eq!(WeylWord::parse(&w.format(rs.rank()), rs.rank()).unwrap(), w);
    }

    #[test]
    fn reflection_preserves_form((t, _w, coords) in arb_case(), i in 0usize..8) {
        let rs = RootSystem::from_type_string(&t).unwrap();
        let i = i % rs.rank() + 1;
        let l = Weight::new(coords);
        let r = rs.reflect(i, &l).unwrap();
        prop_assert_eq!(rs.reflect(i, &r).unwrap(), l.clone());
        let g = rs.scaled_gram_matrix();
        let q = |v: &Weight| -> i64 {
            let c = v.coords();
            (0..c.len()).map(|a| (0..c.len()).map(|b| c[a] * g[a][b] * c[b]).sum::<i64>()).sum()
        };
        prop_assert_eq!(q(&r), q(&l));
    }
}
