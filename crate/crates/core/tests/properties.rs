use bimaps::closedform::{quad_closed_at_point, quad_rewritten_at_point};
use bimaps::dimers::{self, Ends, SegmentSpec};
use bimaps::hankel::hankel_det;
use bimaps::paths::{
    check_reflection_even, check_reflection_even_white, check_reflection_odd, rat_path, z_plus, Color, RatPathWeights,
    WeightLadder,
};
use bimaps::qseries::rat;
use bimaps::{MSeries, Rat};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn small_rat(lo: i64, hi: i64) -> impl Strategy<Value = Rat> {
    (lo..=hi, prop::sample::select(vec![1i64, 2, 3, 5, 7, 11]))
        .prop_filter("nonzero", |(n, _)| *n != 0)
        .prop_map(|(n, d)| rat(n, d))
}

fn positive() -> impl Strategy<Value = Rat> {
    small_rat(1, 12)
}

/// Symmetric-convention path sum over every step sequence.
fn brute_path(from: i64, to: i64, len: usize, floor: Option<i64>, b: &Rat, w: &Rat) -> Rat {
    let mut total = Rat::zero();
    'paths: for mask in 0u32..(1 << len) {
        let mut h = from;
        let mut v = Rat::one();
        for s in 0..len {
            let up = mask >> s & 1 == 1;
            let lower = if up { h } else { h - 1 };
            v *= if (lower - from).rem_euclid(2) == 0 { w } else { b };
            h += if up { 1 } else { -1 };
            if floor.is_some_and(|f| h < f) {
                continue 'paths;
            }
        }
        if h == to {
            total += v;
        }
    }
    total
}

fn leibniz(m: &[Vec<Rat>]) -> Rat {
    let n = m.len();
    if n == 0 {
        return Rat::one();
    }
    let mut total = Rat::zero();
    for c in 0..n {
        let minor: Vec<Vec<Rat>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &m[0][c] * leibniz(&minor);
        if c % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn path_dp_equals_enumeration(b in positive(), w in positive(), from in 0i64..4, to in -3i64..4, len in 0usize..=8, floor in prop::option::of(-2i64..1)) {
        let wt = RatPathWeights::new(b.clone(), w.clone());
        prop_assert_eq!(rat_path(Color::Black, from, to, len, floor, &wt), brute_path(from, to, len, floor, &b, &w));
    }

    #[test]
    fn reflection_identities(b in positive(), w in positive(), k in 0i64..=3, l in 0i64..=3, q in 0usize..=5) {
        let wt = RatPathWeights::new(b, w);
        if k >= 1 && l >= 1 {
            prop_assert!(check_reflection_odd(k, l, q, &wt).holds());
        }
        prop_assert!(check_reflection_even(k, l, q, &wt).holds());
        prop_assert!(check_reflection_even_white(k, l, q, &wt).holds());
    }

    #[test]
    fn constant_ladder_translation(n in 1usize..=4, d in 1i64..=5, white in any::<bool>()) {
        let tb = MSeries::var(2, 8, 0);
        let tw = MSeries::var(2, 8, 1);
        let lad = WeightLadder::constant(tb, tw);
        let start = if white { Color::White } else { Color::Black };
        let base = z_plus(start, 0, 0, 2 * n, &lad, 0).unwrap();
        prop_assert_eq!(z_plus(start, d, d, 2 * n, &lad, d).unwrap(), base);
    }

    #[test]
    fn hankel_det_equals_expansion(f in prop::collection::vec(small_rat(-9, 9), 8), shift in 0usize..2, i in 0usize..=3) {
        let m: Vec<Vec<Rat>> = (0..=i).map(|r| (0..=i).map(|c| f[r + c + shift].clone()).collect()).collect();
        prop_assert_eq!(hankel_det(&f, shift, i).unwrap(), leibniz(&m));
    }

    #[test]
    fn transfer_equals_brute_force(links in 0usize..=12, e in 0usize..4) {
        if let Ok(s) = SegmentSpec::new(links, Ends::ALL[e]) {
            prop_assert_eq!(dimers::zhd(s), dimers::zhd_brute(s));
        }
    }

    #[test]
    fn dimer_closed_forms(c in small_rat(-9, 9), x in small_rat(-9, 9), links in 0usize..=10, e in 0usize..4) {
        let Ok(s) = SegmentSpec::new(links, Ends::ALL[e]) else { return Ok(()) };
        let degenerate = [x.clone(), x.recip(), -&x]
            .iter()
            .any(|xx| dimers::zhd_closed(s, &c, xx).is_err() || dimers::zhd_closed(s, &-&c, xx).is_err());
        prop_assume!(!degenerate);
        let v = dimers::zhd_closed_check(s, &c, &x).unwrap();
        prop_assert!(v.holds(), "{:?}", v);
    }

    #[test]
    fn rewritten_closed_form(c in small_rat(1, 11), x in small_rat(1, 11), k in 0usize..=8) {
        // c in (0, 1], x in (0, 1) avoids every pole
        prop_assume!(c <= Rat::one() && x < Rat::one());
        prop_assert_eq!(quad_closed_at_point(&c, &x, k), quad_rewritten_at_point(&c, &x, k));
    }
}
