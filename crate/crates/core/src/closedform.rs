//! Explicit parametrized solutions of the slice recursions, evaluated as
//! series without ever forming `c = √(B/W)` or `x`.
//!
//! Every closed form is a ratio of sums `N(i) = 1 - Σ_j c_j ψ_j^i` and their
//! β- and γ-twisted companions, where `γ_j = ψ_j / β_j`. Quadrangulations use
//! the single term `(1, y)`; hexangulations use three.

use num_traits::One;

use crate::error::{Error, Result};
use crate::paths::WeightLadder;
use crate::qseries::{rat, rat_int, solve_quadratic_branch, MSeries, Rat};
use crate::slices::{self, FaceWeights, TwoPointTable};

/// One term `c · ψ^i` of a product-family numerator with its twists.
#[derive(Clone, Debug)]
pub struct FamilyTerm {
    pub coeff: MSeries,
    pub base: MSeries,
    pub beta: MSeries,
    pub gamma: MSeries,
}

/// The sums `N(i)`, `N_β(i)`, `N_γ(i)` shared by all closed forms.
#[derive(Clone, Debug)]
pub struct ProductFamily {
    terms: Vec<FamilyTerm>,
    // powers[j][i] = base_j^i
    powers: Vec<Vec<MSeries>>,
}

impl ProductFamily {
    pub fn new(terms: Vec<FamilyTerm>) -> Self {
        let powers = terms
            .iter()
            .map(|t| vec![t.base.one_like().with_reliable(t.base.reliable())])
            .collect();
        ProductFamily { terms, powers }
    }

    fn pow(&mut self, j: usize, i: usize) -> MSeries {
        while self.powers[j].len() <= i {
            let next = self.powers[j].last().expect("nonempty") * &self.terms[j].base;
            self.powers[j].push(next);
        }
        self.powers[j][i].clone()
    }

    fn sum(&mut self, i: usize, twist: impl Fn(&FamilyTerm) -> MSeries) -> MSeries {
        let mut acc = self.terms[0].base.one_like();
        for j in 0..self.terms.len() {
            let c = &self.terms[j].coeff * &twist(&self.terms[j]);
            acc = &acc - &(&c * &self.pow(j, i));
        }
        acc
    }

    /// `1 - Σ c_j ψ_j^i`.
    pub fn n(&mut self, i: usize) -> MSeries {
        self.sum(i, |t| t.coeff.one_like())
    }

    /// `1 - Σ c_j β_j ψ_j^i`.
    pub fn n_beta(&mut self, i: usize) -> MSeries {
        self.sum(i, |t| t.beta.clone())
    }

    /// `1 - Σ c_j γ_j ψ_j^{i-1}`, i.e. the `β^{-1}` twist at exponent `i`.
    pub fn n_gamma(&mut self, i: usize) -> MSeries {
        assert!(i >= 1);
        self.sum(i - 1, |t| t.gamma.clone())
    }
}

fn frac(num: &[&MSeries], den: &[&MSeries]) -> Result<MSeries> {
    let mut n = num[0].clone();
    for x in &num[1..] {
        n = &n * x;
    }
    let mut d = den[0].clone();
    for x in &den[1..] {
        d = &d * x;
    }
    Ok(&n * &d.inv_unit()?)
}

/// Ladder `B_1..B_n`, `W_1..W_n` from the shared product shape:
///
/// `B_{2i} = B N(i) N_β(i+1) / (N(i+1) N_β(i))`,
/// `W_{2i} = W N(i) N_γ(i+2) / (N(i+1) N_γ(i+1))`,
/// `B_{2i+1} = B N(i+2) N_γ(i+1) / (N(i+1) N_γ(i+2))`,
/// `W_{2i+1} = W N(i+2) N_β(i) / (N(i+1) N_β(i+1))`.
pub fn shape_a_ladder(fam: &mut ProductFamily, tail_b: &MSeries, tail_w: &MSeries, n: usize) -> Result<WeightLadder> {
    let mut bl = Vec::with_capacity(n);
    let mut wl = Vec::with_capacity(n);
    for k in 1..=n {
        let i = k / 2;
        let (nb, nw) = if k % 2 == 0 {
            let (n0, n1) = (fam.n(i), fam.n(i + 1));
            (
                frac(&[tail_b, &n0, &fam.n_beta(i + 1)], &[&n1, &fam.n_beta(i)])?,
                frac(&[tail_w, &n0, &fam.n_gamma(i + 2)], &[&n1, &fam.n_gamma(i + 1)])?,
            )
        } else {
            let (n1, n2) = (fam.n(i + 1), fam.n(i + 2));
            (
                frac(&[tail_b, &n2, &fam.n_gamma(i + 1)], &[&n1, &fam.n_gamma(i + 2)])?,
                frac(&[tail_w, &n2, &fam.n_beta(i)], &[&n1, &fam.n_beta(i + 1)])?,
            )
        };
        bl.push(nb);
        wl.push(nw);
    }
    Ok(WeightLadder::new(bl, wl, tail_b.clone(), tail_w.clone()))
}

/// Index-0 entries of the shape (both vanish identically).
pub fn shape_a_zero(fam: &mut ProductFamily, tail_b: &MSeries, tail_w: &MSeries) -> Result<(MSeries, MSeries)> {
    let (n0, n1) = (fam.n(0), fam.n(1));
    Ok((
        frac(&[tail_b, &n0, &fam.n_beta(1)], &[&n1, &fam.n_beta(0)])?,
        frac(&[tail_w, &n0, &fam.n_gamma(2)], &[&n1, &fam.n_gamma(1)])?,
    ))
}

/// Parameters `(d, y, β, γ)` of the one-root parametrization.
#[derive(Clone, Debug)]
pub struct QuadParams {
    pub b: MSeries,
    pub w: MSeries,
    pub d: MSeries,
    pub y: MSeries,
    pub beta: MSeries,
    pub gamma: MSeries,
}

impl QuadParams {
    /// `β = (d+y)/(1+d)` and `γ = y/β` from a given `d`, `y`.
    pub fn from_dy(b: MSeries, w: MSeries, d: MSeries, y: MSeries) -> Result<Self> {
        let beta = &(&d + &y) * &(&d.one_like() + &d).inv_unit()?;
        let gamma = y.exact_div(&beta)?;
        Ok(QuadParams {
            b,
            w,
            d,
            y,
            beta,
            gamma,
        })
    }

    pub fn family(&self) -> ProductFamily {
        ProductFamily::new(vec![FamilyTerm {
            coeff: self.y.one_like(),
            base: self.y.clone(),
            beta: self.beta.clone(),
            gamma: self.gamma.clone(),
        }])
    }

    /// Quantities that vanish when the parameters are consistent.
    pub fn residuals(&self) -> Vec<(&'static str, MSeries)> {
        let (b, w, d) = (&self.b, &self.w, &self.d);
        let lin = &(b + w).scale_int(2) - &b.one_like();
        vec![
            ("characteristic", (&(&(w * &(d * d)) + &(&lin * d)) + b)),
            ("y B = d² W", &(&self.y * b) - &(&(d * d) * w)),
            ("β (1+d) = d + y", &(&self.beta * &(&d.one_like() + d)) - &(d + &self.y)),
            ("β γ = y", &(&self.beta * &self.gamma) - &self.y),
        ]
    }
}

/// `d` from `W d² + (2(B+W) - 1) d + B = 0`, then `y = d² W / B`.
pub fn quad_params(b: &MSeries, w: &MSeries) -> Result<QuadParams> {
    let a1 = &(b + w).scale_int(2) - &b.one_like();
    let d = solve_quadratic_branch(w, &a1, b)?;
    let y = (&(&d * &d) * w).exact_div(b)?;
    QuadParams::from_dy(b.clone(), w.clone(), d, y)
}

pub fn quad_ladder_closed(params: &QuadParams, n: usize) -> Result<WeightLadder> {
    shape_a_ladder(&mut params.family(), &params.b, &params.w, n)
}

/// Two-root parametrization for hexangulations.
#[derive(Clone, Debug)]
pub struct HexParams {
    pub b: MSeries,
    pub w: MSeries,
    pub wz1: MSeries,
    pub wz2: MSeries,
    pub d1: MSeries,
    pub d2: MSeries,
    pub y1: MSeries,
    pub y2: MSeries,
    pub lambda1: MSeries,
    pub lambda2: MSeries,
    pub beta1: MSeries,
    pub beta2: MSeries,
    pub gamma1: MSeries,
    pub gamma2: MSeries,
    /// `(W/B) d1 d2`
    pub kappa: MSeries,
}

pub fn hex_params(b: &MSeries, w: &MSeries) -> Result<HexParams> {
    let one = b.one_like();
    let disc_arg = &one
        - &(&(&(b * b).scale_int(3) + &(b * w).scale_int(14)) + &(w * w).scale_int(3)).scale(&rat(1, 4));
    let root = disc_arg.sqrt_unit()?;
    let base = (b + w).scale_int(-3);
    let half = rat(1, 2);
    let wz1 = (&base - &root.scale_int(2)).scale(&half);
    let wz2 = (&base + &root.scale_int(2)).scale(&half);
    let d1 = solve_quadratic_branch(w, &-&wz1, b)?;
    let d2 = solve_quadratic_branch(w, &-&wz2, b)?;
    let lead = |s: &MSeries| s.coeff(&[1, 0]);
    if lead(&d1) != rat_int(-1) || lead(&d2) != rat_int(1) {
        return Err(Error::Degenerate("unexpected branch for d1, d2".into()));
    }
    let y1 = (&(&d1 * &d1) * w).exact_div(b)?;
    let y2 = (&(&d2 * &d2) * w).exact_div(b)?;
    let lambda1 = (&d1 - &(&y1 * &d2)).exact_div(&(&d1 - &d2))?;
    let lambda2 = (&d2 - &(&y2 * &d1)).exact_div(&(&d2 - &d1))?;
    let beta1 = &(&d1 + &y1) * &(&one + &d1).inv_unit()?;
    let beta2 = &(&d2 + &y2) * &(&one + &d2).inv_unit()?;
    let gamma1 = y1.exact_div(&beta1)?;
    let gamma2 = y2.exact_div(&beta2)?;
    let kappa = (&(w * &d1) * &d2).exact_div(b)?;
    Ok(HexParams {
        b: b.clone(),
        w: w.clone(),
        wz1,
        wz2,
        d1,
        d2,
        y1,
        y2,
        lambda1,
        lambda2,
        beta1,
        beta2,
        gamma1,
        gamma2,
        kappa,
    })
}

impl HexParams {
    pub fn family(&self) -> ProductFamily {
        ProductFamily::new(vec![
            FamilyTerm {
                coeff: self.lambda1.clone(),
                base: self.y1.clone(),
                beta: self.beta1.clone(),
                gamma: self.gamma1.clone(),
            },
            FamilyTerm {
                coeff: self.lambda2.clone(),
                base: self.y2.clone(),
                beta: self.beta2.clone(),
                gamma: self.gamma2.clone(),
            },
            FamilyTerm {
                coeff: self.kappa.clone(),
                base: &self.y1 * &self.y2,
                beta: &self.beta1 * &self.beta2,
                gamma: &self.gamma1 * &self.gamma2,
            },
        ])
    }

    pub fn residuals(&self) -> Vec<(&'static str, MSeries)> {
        let (b, w) = (&self.b, &self.w);
        let one = b.one_like();
        let mut out = Vec::new();
        let c0 = &(&(b * w).scale_int(8) + &(&(b * b) + &(w * w)).scale_int(3)) - &one;
        for (name, wz) in [("z1 equation", &self.wz1), ("z2 equation", &self.wz2)] {
            let lin = &(b + w).scale_int(3) * wz;
            out.push((name, &(&(wz * wz) + &lin) + &c0));
        }
        for (name, d, wz) in [("d1 equation", &self.d1, &self.wz1), ("d2 equation", &self.d2, &self.wz2)] {
            out.push((name, &(&(w * &(d * d)) - &(wz * d)) + b));
        }
        for (name, y, d) in [("y1 B = d1² W", &self.y1, &self.d1), ("y2 B = d2² W", &self.y2, &self.d2)] {
            out.push((name, &(y * b) - &(&(d * d) * w)));
        }
        out.push((
            "λ1 definition",
            &(&self.lambda1 * &(&self.d1 - &self.d2)) - &(&self.d1 - &(&self.y1 * &self.d2)),
        ));
        out.push((
            "λ2 definition",
            &(&self.lambda2 * &(&self.d2 - &self.d1)) - &(&self.d2 - &(&self.y2 * &self.d1)),
        ));
        for (name, beta, d, y, gamma) in [
            ("β1 definition", &self.beta1, &self.d1, &self.y1, &self.gamma1),
            ("β2 definition", &self.beta2, &self.d2, &self.y2, &self.gamma2),
        ] {
            out.push((name, &(beta * &(&one + d)) - &(d + y)));
            out.push(("β γ = y", &(beta * gamma) - y));
        }
        out.push(("κ B = W d1 d2", &(&self.kappa * b) - &(&(w * &self.d1) * &self.d2)));
        out
    }
}

pub fn hex_ladder_closed(params: &HexParams, n: usize) -> Result<WeightLadder> {
    shape_a_ladder(&mut params.family(), &params.b, &params.w, n)
}

/// Families with an implemented closed form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedFamily {
    Quad,
    Hex,
}

impl ClosedFamily {
    pub fn weights(self) -> FaceWeights {
        match self {
            ClosedFamily::Quad => FaceWeights::quad(),
            ClosedFamily::Hex => FaceWeights::hex(),
        }
    }
}

fn closed_ladder_at(family: ClosedFamily, order: u32, n: usize) -> Result<WeightLadder> {
    let (b, w) = slices::tail_solve(&family.weights(), order)?;
    match family {
        ClosedFamily::Quad => quad_ladder_closed(&quad_params(&b, &w)?, n),
        ClosedFamily::Hex => hex_ladder_closed(&hex_params(&b, &w)?, n),
    }
}

/// Closed-form ladder exact to `order`, computed at a slightly higher
/// internal order to absorb the valuation losses of the parametrization.
pub fn closed_ladder(family: ClosedFamily, order: u32, n: usize) -> Result<WeightLadder> {
    let mut internal = order + 2;
    for _ in 0..6 {
        let lad = closed_ladder_at(family, internal, n)?;
        let rel = lad.reliable_upto(n);
        if rel >= order {
            return Ok(lad.truncated(n, order));
        }
        internal += order - rel;
    }
    Err(Error::NonConvergence {
        what: "closed-form order elevation".into(),
        sweeps: 6,
    })
}

/// Full pipeline: tails, parameters, closed-form ladder, two-point functions.
pub fn twopoint_closed(family: ClosedFamily, order: u32, i_max: usize) -> Result<TwoPointTable> {
    let lad = closed_ladder(family, order, i_max)?;
    Ok(slices::twopoint_from_ladder(&lad, i_max))
}

/// One-root closed form in `x^{±}` form at a rational point `(c, x)`:
/// returns `(B_k/B, W_k/W)` from the `x^{±}` expressions with
/// `γ = (c+x)/(1+cx)`, for checking the series rewriting.
pub fn quad_closed_at_point(c: &Rat, x: &Rat, k: usize) -> (Rat, Rat) {
    let pw = |e: i64| -> Rat {
        if e >= 0 {
            num_traits::pow(x.clone(), e as usize)
        } else {
            num_traits::pow(x.recip(), (-e) as usize)
        }
    };
    let g = (c + x) / (Rat::one() + c * x);
    let gi = g.recip();
    let i = (k / 2) as i64;
    let u = |e: i64| pw(e) - pw(-e);
    if k % 2 == 0 {
        let b = u(i) * (&g * pw(i + 1) - pw(-(i + 2))) / ((&g * pw(i) - pw(-(i + 1))) * u(i + 1));
        let w = u(i) * (&gi * pw(i + 1) - pw(-(i + 2))) / ((&gi * pw(i) - pw(-(i + 1))) * u(i + 1));
        (b, w)
    } else {
        let b = (&gi * pw(i) - pw(-(i + 1))) * u(i + 2) / (u(i + 1) * (&gi * pw(i + 1) - pw(-(i + 2))));
        let w = (&g * pw(i) - pw(-(i + 1))) * u(i + 2) / (u(i + 1) * (&g * pw(i + 1) - pw(-(i + 2))));
        (b, w)
    }
}

/// Same quantities from the `(d, y, β, γ)` rewriting evaluated at `d = cx`, `y = x²`.
pub fn quad_rewritten_at_point(c: &Rat, x: &Rat, k: usize) -> (Rat, Rat) {
    let d = c * x;
    let y = x * x;
    let beta = (&d + &y) / (Rat::one() + &d);
    let gamma = &y / &beta;
    let yp = |e: usize| num_traits::pow(y.clone(), e);
    let n = |e: usize| Rat::one() - yp(e);
    let nb = |e: usize| Rat::one() - &beta * yp(e);
    let ng = |e: usize| Rat::one() - &gamma * yp(e - 1);
    let i = k / 2;
    if k % 2 == 0 {
        (
            n(i) * nb(i + 1) / (n(i + 1) * nb(i)),
            n(i) * ng(i + 2) / (n(i + 1) * ng(i + 1)),
        )
    } else {
        (
            n(i + 2) * ng(i + 1) / (n(i + 1) * ng(i + 2)),
            n(i + 2) * nb(i) / (n(i + 1) * nb(i + 1)),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::slices::{default_height, ladder_solve, tail_solve};

    fn p(order: u32, s: &str) -> MSeries {
        MSeries::parse(2, order, s).unwrap()
    }

    #[test]
    fn quad_parameters() {
        let (b, w) = tail_solve(&FaceWeights::quad(), 8).unwrap();
        let qp = quad_params(&b, &w).unwrap();
        let d = p(8, "tb + (3*tb^2 + 4*tb*tw) + (10*tb^3 + 33*tb^2*tw + 16*tb*tw^2) + (35*tb^4 + 202*tb^3*tw + 243*tb^2*tw^2 + 64*tb*tw^3)");
        assert!(qp.d.agrees_to(&d, 4));
        let y = p(8, "tb*tw + (7*tb^2*tw + 7*tb*tw^2) + (38*tb^3*tw + 91*tb^2*tw^2 + 38*tb*tw^3)");
        assert!(qp.y.agrees_to(&y, 4));
        assert_eq!(qp.gamma.coeff(&[0, 1]), rat_int(1));
        assert!((&qp.gamma * &qp.beta).agrees(&qp.y));
        for (name, r) in qp.residuals() {
            assert!(r.is_zero_reliably(), "{name}");
        }
    }

    #[test]
    fn quad_closed_ladder() {
        let lad = closed_ladder(ClosedFamily::Quad, 6, 6).unwrap();
        assert!(lad.b(2).agrees_to(
            &p(6, "tb + tb*(tb + 2*tw) + tb*(2*tb^2 + 9*tb*tw + 6*tw^2) + tb*(5*tb^3 + 37*tb^2*tw + 57*tb*tw^2 + 20*tw^3)"),
            4
        ));
        assert!(lad.b(3).agrees_to(
            &p(6, "tb + tb*(tb + 2*tw) + tb*(2*tb^2 + 10*tb*tw + 6*tw^2) + tb*(5*tb^3 + 44*tb^2*tw + 65*tb*tw^2 + 20*tw^3)"),
            4
        ));
        let g = FaceWeights::quad();
        let rec = ladder_solve(&g, 6, default_height(&g, 6)).unwrap();
        for i in 1..=6 {
            assert_eq!(lad.b(i), rec.b(i), "B_{i}");
            assert_eq!(lad.w(i), rec.w(i), "W_{i}");
        }
    }

    #[test]
    fn index_zero_vanishes() {
        let (b, w) = tail_solve(&FaceWeights::quad(), 6).unwrap();
        let qp = quad_params(&b, &w).unwrap();
        let (b0, w0) = shape_a_zero(&mut qp.family(), &b, &w).unwrap();
        assert!(b0.is_zero() && w0.is_zero());
        let (b, w) = tail_solve(&FaceWeights::hex(), 6).unwrap();
        let hp = hex_params(&b, &w).unwrap();
        let mut fam = hp.family();
        assert!(fam.n(0).is_zero_reliably());
        let (b0, w0) = shape_a_zero(&mut fam, &b, &w).unwrap();
        assert!(b0.is_zero_reliably() && w0.is_zero_reliably());
    }

    #[test]
    fn hex_parameters() {
        let (b, w) = tail_solve(&FaceWeights::hex(), 7).unwrap();
        let hp = hex_params(&b, &w).unwrap();
        let d1 = p(7, "-tb + 3/2*tb*(tb + tw) - 1/8*tb*(29*tb^2 + 106*tw*tb + 45*tw^2) + 3/2*tb*(5*tb^3 + 30*tw*tb^2 + 32*tw^2*tb + 7*tw^3)");
        let d2 = p(7, "tb + 3/2*tb*(tb + tw) + 1/8*tb*(29*tb^2 + 106*tw*tb + 45*tw^2) + 3/2*tb*(5*tb^3 + 30*tw*tb^2 + 32*tw^2*tb + 7*tw^3)");
        assert!(hp.d1.agrees_to(&d1, 4));
        assert!(hp.d2.agrees_to(&d2, 4));
        let y1 = p(7, "tb*tw - 3*tb*tw*(tb + tw) + 1/2*tb*tw*(23*tb^2 + 62*tw*tb + 23*tw^2)");
        let y2 = p(7, "tb*tw + 3*tb*tw*(tb + tw) + 1/2*tb*tw*(23*tb^2 + 62*tw*tb + 23*tw^2)");
        assert!(hp.y1.agrees_to(&y1, 4));
        assert!(hp.y2.agrees_to(&y2, 4));
        assert_eq!(hp.lambda1.constant_term(), rat(1, 2));
        assert_eq!(hp.lambda2.constant_term(), rat(1, 2));
        for (name, r) in hp.residuals() {
            assert!(r.is_zero_reliably(), "{name}");
        }
    }

    #[test]
    fn hex_closed_ladder() {
        let lad = closed_ladder(ClosedFamily::Hex, 6, 6).unwrap();
        assert!(lad.b(1).agrees_to(
            &p(6, "tb + tb*(tb^2 + 3*tb*tw + tw^2) + tb*(3*tb^4 + 24*tb^3*tw + 46*tb^2*tw^2 + 24*tb*tw^3 + 3*tw^4)"),
            5
        ));
        assert!(lad.b(2).agrees_to(
            &p(6, "tb + tb*(tb^2 + 5*tb*tw + 3*tw^2) + tb*(3*tb^4 + 36*tb^3*tw + 99*tb^2*tw^2 + 77*tb*tw^3 + 15*tw^4)"),
            5
        ));
        let g = FaceWeights::hex();
        let rec = ladder_solve(&g, 6, default_height(&g, 6)).unwrap();
        for i in 1..=6 {
            assert_eq!(lad.b(i), rec.b(i), "B_{i}");
            assert_eq!(lad.w(i), rec.w(i), "W_{i}");
        }
    }

    #[test]
    fn two_point_closed() {
        let tp = twopoint_closed(ClosedFamily::Quad, 6, 3).unwrap();
        assert!(tp.g_black(3).agrees_to(&p(6, "tb^2*tw^2 + tb^2*tw^2*(7*tb + 8*tw)"), 5));
        let tp = twopoint_closed(ClosedFamily::Hex, 6, 3).unwrap();
        assert!(tp.g_black(2).agrees_to(
            &p(6, "(2*tb^3*tw + 2*tb^2*tw^2) + (12*tb^5*tw + 53*tb^4*tw^2 + 53*tb^3*tw^3 + 12*tb^2*tw^4)"),
            6
        ));
        for i in 1..=3 {
            assert!(tp.g_black(i).has_nonneg_integer_coeffs());
        }
    }

    #[test]
    fn collapse_gives_equal_families() {
        for fam in [ClosedFamily::Quad, ClosedFamily::Hex] {
            let lad = closed_ladder(fam, 6, 5).unwrap();
            for i in 1..=5 {
                assert_eq!(lad.b(i).collapse(), lad.w(i).collapse());
            }
        }
    }

    #[test]
    fn stabilization() {
        let lad = closed_ladder(ClosedFamily::Quad, 7, 7).unwrap();
        for i in 1..=7i64 {
            assert!(lad.b(i).agrees_to(&lad.tail_b, (i - 1) as u32));
        }
    }

    #[test]
    fn rewriting_matches_power_form() {
        let pts = [(rat(2, 1), rat(1, 3)), (rat(1, 2), rat(2, 5)), (rat(3, 7), rat(-1, 4)), (rat(1, 1), rat(1, 5)), (rat(5, 3), rat(3, 11))];
        for (c, x) in pts {
            for k in 0..=7 {
                assert_eq!(quad_closed_at_point(&c, &x, k), quad_rewritten_at_point(&c, &x, k), "k={k}");
            }
        }
    }

    #[test]
    fn nonzero_constant_rejected() {
        assert!(hex_params(&p(5, "2 + tb"), &p(5, "tw")).is_err());
        assert!(quad_params(&p(5, "1 + tb"), &p(5, "tw")).is_err());
    }
}
