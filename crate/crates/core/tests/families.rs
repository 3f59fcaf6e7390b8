use weylmin::ell::{dominant_root_law, ell_delta, ell_sd_delta};
use weylmin::RootSystem;

fn both(t: &str) -> (usize, usize) {
    let rs = RootSystem::from_type_string(t).unwrap();
    (ell_delta(&rs).unwrap().value, ell_sd_delta(&rs).unwrap().value)
}

#[test]
fn type_a_up_to_12() {
    for n in 1..=12 {
        assert_eq!(both(&format!("A{n}")), (1, (n + 2) / 2), "A{n}");
    }
}

#[test]
fn type_c_up_to_12() {
    for n in 2..=12 {
        let (l, sd) = both(&format!("C{n}"));
        assert_eq!(l, n, "C{n}");
        assert_eq!(sd, l, "C{n}: -1 lies in W");
    }
}

#[test]
fn type_d_up_to_12() {
    for n in 4..=12 {
        let (l, _) = both(&format!("D{n}"));
        assert_eq!(l, if n == 5 { 3 } else { n - 1 }, "D{n}");
    }
}

#[test]
fn b_equals_c_up_to_8() {
    for n in 2..=8 {
        assert_eq!(both(&format!("B{n}")), both(&format!("C{n}")), "n = {n}");
    }
}

#[test]
fn monotone_in_rank() {
    for fam in ["A", "B", "C"] {
        let start = if fam == "A" { 1 } else { 2 };
        let vals: Vec<(usize, usize)> = (start..=10).map(|n| both(&format!("{fam}{n}"))).collect();
        assert!(vals.windows(2).all(|w| w[0].0 <= w[1].0 && w[0].1 <= w[1].1), "{fam}: {vals:?}");
    }
}

#[test]
fn products_take_the_minimum() {
    let pairs = [("A3", "B2"), ("G2", "C3"), ("D4", "F4"), ("A1", "E6")];
    for (x, y) in pairs {
        let (lx, sx) = both(x);
        let (ly, sy) = both(y);
        assert_eq!(both(&format!("{x}x{y}")), (lx.min(ly), sx.min(sy)), "{x}x{y}");
    }
}

#[test]
fn dominant_root_law_rank_le_8() {
    for t in [
        "A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "B2", "B3", "B4", "B5", "B6", "B7", "B8", "C3", "C4", "C5",
        "C6", "C7", "C8", "D4", "D5", "D6", "D7", "D8", "G2", "F4", "E6", "E7", "E8",
    ] {
        let rs = RootSystem::from_type_string(t).unwrap();
        for c in dominant_root_law(&rs).unwrap() {
            assert!(c.holds(), "{t}: {c:?}");
        }
    }
}
