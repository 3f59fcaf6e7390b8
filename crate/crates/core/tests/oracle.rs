mod common;

use common::{fundamental, Oracle};
use num_rational::Rational64;
use weylmin::ell::{check_witness, ell_minus, EllOutcome, Pairing};
use weylmin::{RootSystem, Weight};

fn found(rs: &RootSystem, h: &[i64], l: &[i64]) -> weylmin::ell::EllResult {
    match ell_minus(rs, &Weight::new(h.to_vec()), &Weight::new(l.to_vec()), None).unwrap() {
        EllOutcome::Found(r) => r,
        other => panic!("no element found: {other:?}"),
    }
}

#[test]
fn brute_force_over_whole_group() {
    for (ty, order) in [("A2", 6), ("B2", 8), ("G2", 12), ("A1xA1", 4)] {
        let rs = RootSystem::from_type_string(ty).unwrap();
        let o = Oracle::new(&rs);
        let words = o.group_words();
        assert_eq!(words.len(), order, "{ty}");
        let zero = Rational64::from_integer(0);
        for j in 0..o.n {
            for k in 0..o.n {
                let (h, l) = (fundamental(o.n, j), fundamental(o.n, k));
                let brute = words
                    .iter()
                    .filter(|w| o.form(&o.apply(w, &l), &h) < zero)
                    .map(|w| o.length(w))
                    .min();
                let got = ell_minus(&rs, &Weight::new(h.clone()), &Weight::new(l.clone()), None).unwrap();
                assert_eq!(got.value(), brute, "{ty} h=w{} lambda=w{}", j + 1, k + 1);
                let Some(r) = got.into_found() else { continue };
                let img = o.apply(r.witness.letters(), &l);
                assert!(o.form(&img, &h) < zero);
                assert_eq!(o.length(r.witness.letters()), r.value);
            }
        }
    }
}

#[test]
fn inversion_count_oracle() {
    for ty in ["A3", "A4", "B3", "C3", "B4", "C4", "D4", "D5", "G2", "F4", "A2xB2", "A5"] {
        let rs = RootSystem::from_type_string(ty).unwrap();
        let o = Oracle::new(&rs);
        assert_eq!(o.pos_coroots.len(), rs.num_positive_roots(), "{ty}");
        for j in 0..o.n {
            for k in 0..o.n {
                let (h, l) = (fundamental(o.n, j), fundamental(o.n, k));
                let expect = o.ell_minus(&h, &l);
                let got = ell_minus(&rs, &Weight::new(h.clone()), &Weight::new(l.clone()), None).unwrap().value();
                assert_eq!(got, expect, "{ty} (w{}, w{})", j + 1, k + 1);
            }
        }
    }
}

#[test]
fn witnesses_verify_independently() {
    for ty in ["E6", "F4", "B5", "D6"] {
        let rs = RootSystem::from_type_string(ty).unwrap();
        let o = Oracle::new(&rs);
        let zero = Rational64::from_integer(0);
        for j in 0..o.n {
            let h = fundamental(o.n, j);
            let l = vec![1; o.n];
            let r = found(&rs, &h, &l);
            let img = o.apply(r.witness.letters(), &l);
            assert_eq!(img, r.image.coords());
            assert!(o.form(&img, &h) < zero);
            assert_eq!(o.length(r.witness.letters()), r.witness.len(), "{ty}: witness not reduced");
            let c = check_witness(&rs, &Pairing::Weight(Weight::new(h)), &Weight::new(l), &r.witness).unwrap();
            assert!(c.is_valid());
        }
    }
}

#[test]
fn root_counts_match_library() {
    for ty in common::simple_types(8) {
        let rs = RootSystem::from_type_string(&ty).unwrap();
        let o = Oracle::new(&rs);
        assert_eq!(o.pos_coroots.len(), rs.num_positive_roots(), "{ty}");
    }
}
