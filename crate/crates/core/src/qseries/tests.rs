use super::*;
use proptest::prelude::*;

fn p(order: u32, s: &str) -> MSeries {
    MSeries::parse(2, order, s).unwrap()
}

#[test]
fn product_and_truncation() {
    let f = p(4, "1 + tb");
    let g = p(4, "1 + tw");
    assert_eq!(&f * &g, p(4, "1 + tb + tw + tb*tw"));

    let z = MSeries::zero(2, 4).with_reliable(3);
    let prod = &f * &z;
    assert!(prod.is_zero());
    assert_eq!(prod.reliable(), 3);

    let s = p(1, "tb + tw");
    assert!((&s * &s).is_zero());
}

#[test]
fn mismatched_variable_count() {
    let a = MSeries::one(2, 3);
    let b = MSeries::one(3, 3);
    assert_eq!(a.try_mul(&b), Err(Error::VarMismatch(2, 3)));
    assert_eq!(a.try_add(&b), Err(Error::VarMismatch(2, 3)));
}

#[test]
fn inverses() {
    assert_eq!(
        p(3, "1 - tb").inv_unit().unwrap(),
        p(3, "1 + tb + tb^2 + tb^3")
    );
    assert_eq!(
        p(2, "1 + tb + tw").inv_unit().unwrap(),
        p(2, "1 - tb - tw + tb^2 + 2*tb*tw + tw^2")
    );
    assert_eq!(p(3, "tb").inv_unit(), Err(Error::NotAUnit));
}

#[test]
fn exact_division() {
    let q = p(5, "tb*tw + tb^2*tw").exact_div(&p(5, "tb")).unwrap();
    assert_eq!(q.reliable(), 4);
    assert!(q.agrees_to(&p(5, "tw + tb*tw"), 4));

    assert!(matches!(
        p(5, "tb + tw").exact_div(&p(5, "tb")),
        Err(Error::Divisibility { .. })
    ));
    assert_eq!(
        p(5, "1").exact_div(&MSeries::zero(2, 5)),
        Err(Error::DivisionByZero)
    );
    // lowest monomial of tb + tw is 1, which is absent
    assert!(matches!(
        p(5, "tb*tw").exact_div(&p(5, "tb + tw")),
        Err(Error::NotMonomialTimesUnit(_))
    ));
}

#[test]
fn exact_division_with_unit_part() {
    let g = p(8, "tb*(1 + tb + 3*tw^2)");
    let q = p(8, "tb^2*tw - tb^3").exact_div(&g).unwrap();
    assert_eq!(q.reliable(), 7);
    let back = &q * &g;
    assert!(back.agrees_to(&p(8, "tb^2*tw - tb^3"), q.reliable()));
}

#[test]
fn exact_division_exhausts_order() {
    let g = p(2, "tb^3").with_reliable(2);
    assert!(matches!(
        p(2, "1").exact_div(&g),
        Err(Error::DivisionByZero)
    ));
    let g = p(3, "tb^3");
    let f = p(3, "tb^3").with_reliable(2);
    assert!(matches!(f.exact_div(&g), Err(Error::OrderExhausted { .. })));
}

#[test]
fn square_roots() {
    assert_eq!(p(4, "1").sqrt_unit().unwrap(), p(4, "1"));
    assert_eq!(p(4, "1 + 2*tb + tb^2").sqrt_unit().unwrap(), p(4, "1 + tb"));
    let r = p(2, "1 - tb").sqrt_unit().unwrap();
    assert_eq!(r, p(2, "1 - tb/2 - tb^2/8"));
    assert!((&r * &r).agrees_to(&p(2, "1 - tb"), 2));
    assert_eq!(
        p(3, "4 + tw").sqrt_unit().unwrap().constant_term(),
        rat_int(2)
    );
    assert!(matches!(
        p(3, "2 + tb").sqrt_unit(),
        Err(Error::NotASquare(_))
    ));
    assert!(matches!(p(3, "tb").sqrt_unit(), Err(Error::NotASquare(_))));
}

#[test]
fn quadratic_branch() {
    let z = MSeries::zero(2, 5);
    let r = solve_quadratic_branch(&z, &p(5, "-1"), &p(5, "tb")).unwrap();
    assert_eq!(r, p(5, "tb"));

    // μ = tb + μ² : Catalan generating function shifted
    let r = solve_quadratic_branch(&p(5, "1"), &p(5, "-1"), &p(5, "tb")).unwrap();
    assert_eq!(r, p(5, "tb + tb^2 + 2*tb^3 + 5*tb^4 + 14*tb^5"));

    assert_eq!(
        solve_quadratic_branch(&z, &p(5, "tb"), &p(5, "tb")),
        Err(Error::NotAUnit)
    );
    assert_eq!(
        solve_quadratic_branch(&z, &p(5, "1"), &p(5, "1 + tb")),
        Err(Error::NoSeriesRoot)
    );
}

#[test]
fn parser_and_display() {
    let f = p(6, "3/2*tb*(tb + tw) - (tb - tw)^2");
    assert_eq!(f.coeff(&[2, 0]), rat(1, 2));
    assert_eq!(f.coeff(&[1, 1]), rat(7, 2));
    assert_eq!(f.coeff(&[0, 2]), rat_int(-1));
    assert_eq!(format!("{}", p(3, "1 - 2*tb*tw^2")), "1 - 2*tb*tw^2 + O(4)");
    assert!(MSeries::parse(2, 3, "tg").is_err());
    assert!(MSeries::parse(3, 3, "tg + tb").is_ok());
    assert!(MSeries::parse(2, 3, "(tb").is_err());
}

#[test]
fn helpers() {
    let f = p(5, "tb + 2*tw^2 + tb*tw^3");
    assert_eq!(f.swap_colors(), p(5, "tw + 2*tb^2 + tb^3*tw"));
    assert_eq!(f.collapse(), p(5, "tb + 2*tb^2 + tb^4"));
    assert_eq!(
        f.eval(&[rat(1, 2), rat_int(1)]),
        rat(1, 2) + rat_int(2) + rat(1, 2)
    );
    let g = p(5, "tb + 2*tw^2");
    assert!(f.agrees_to(&g, 3));
    let m = f.first_difference(&g, 5).unwrap();
    assert_eq!(m.exps, vec![1, 3]);
    let v = p(5, "tb^2*tw + tb^3*tw").valuation().unwrap();
    assert_eq!(v.monomial, vec![2, 1]);
    assert_eq!(v.unit_part.reliable(), 2);
    assert_eq!(p(4, "1 + tb").pow(3), p(4, "1 + 3*tb + 3*tb^2 + tb^3"));
    assert_eq!(p(4, "tb").shift(&[1, 2]), p(4, "tb^2*tw^2"));
}

fn arb_poly(nvars: usize) -> impl Strategy<Value = MSeries> {
    let term = (
        proptest::collection::vec(0u32..3, nvars),
        -5i64..=5,
        1i64..=4,
    );
    proptest::collection::vec(term, 0..8).prop_map(move |ts| {
        MSeries::from_terms(
            nvars,
            4,
            ts.into_iter()
                .filter(|(e, _, _)| e.iter().sum::<u32>() <= 4)
                .map(|(e, n, d)| (e, rat(n, d))),
        )
    })
}

fn arb_unit(nvars: usize) -> impl Strategy<Value = MSeries> {
    (arb_poly(nvars), 1i64..=6).prop_map(|(f, c)| {
        let f0 = f.constant_term();
        &f + &f.constant_like(rat_int(c) - f0)
    })
}

proptest! {
    #[test]
    fn ring_laws(a in arb_poly(2), b in arb_poly(2), c in arb_poly(2)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
    }

    #[test]
    fn ring_laws_three_vars(a in arb_poly(3), b in arb_poly(3), c in arb_poly(3)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
    }

    #[test]
    fn inverse_is_inverse(u in arb_unit(2)) {
        let inv = u.inv_unit().unwrap();
        prop_assert!((&u * &inv).agrees_to(&u.one_like(), inv.reliable()));
    }

    #[test]
    fn division_round_trip(f in arb_poly(2), u in arb_unit(2), e0 in 0u32..2, e1 in 0u32..2) {
        let g = u.shift(&[e0, e1]);
        let fg = &f * &g;
        let q = fg.exact_div(&g).unwrap();
        prop_assert!((&q * &g).agrees_to(&fg, q.reliable()));
        prop_assert!(q.agrees_to(&f, q.reliable()));
    }

    #[test]
    fn sqrt_squares_back(f in arb_poly(2), k in 1i64..4) {
        let sq = &f.constant_like(rat_int(k * k)) + &(&f - &f.constant_like(f.constant_term()));
        let r = sq.sqrt_unit().unwrap();
        prop_assert!((&r * &r).agrees_to(&sq, r.reliable()));
    }

    #[test]
    fn quadratic_root_satisfies(a2 in arb_poly(2), u in arb_unit(2), a0 in arb_poly(2)) {
        let a0 = &a0 - &a0.constant_like(a0.constant_term());
        let mu = solve_quadratic_branch(&a2, &u, &a0).unwrap();
        let resid = &(&(&a2 * &(&mu * &mu)) + &(&u * &mu)) + &a0;
        prop_assert!(resid.is_zero_reliably());
        prop_assert!(mu.constant_term().is_zero());
    }
}
