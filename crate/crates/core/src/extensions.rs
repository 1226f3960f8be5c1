//! Integrable companions of the slice recursions: a ternary-tree system, a
//! binary-tree system, and a three-color system.

use crate::closedform::{shape_a_ladder, ProductFamily, QuadParams};
use crate::error::{Error, Result};
use crate::paths::WeightLadder;
use crate::qseries::{solve_quadratic_branch, Mismatch, MSeries};

/// Result of comparing two routes entry by entry.
#[derive(Clone, Debug, Default)]
pub struct Verdict {
    pub entries: Vec<(String, Option<Mismatch>)>,
}

impl Verdict {
    pub fn push(&mut self, name: impl Into<String>, mismatch: Option<Mismatch>) {
        self.entries.push((name.into(), mismatch));
    }

    pub fn compare(&mut self, name: impl Into<String>, left: &MSeries, right: &MSeries, upto: u32) {
        self.push(name, left.first_difference(right, upto));
    }

    pub fn holds(&self) -> bool {
        self.entries.iter().all(|(_, m)| m.is_none())
    }

    pub fn failures(&self) -> impl Iterator<Item = &(String, Option<Mismatch>)> {
        self.entries.iter().filter(|(_, m)| m.is_some())
    }
}

/// Coupled ladders `X^c_i`, with `X^c_0 = 0` and `X^c_i = tail_c` above `height`.
#[derive(Clone, Debug, PartialEq)]
pub struct Ladders {
    lists: Vec<Vec<MSeries>>,
    pub tails: Vec<MSeries>,
}

impl Ladders {
    pub fn height(&self) -> usize {
        self.lists[0].len() - 1
    }

    pub fn get(&self, c: usize, i: i64) -> &MSeries {
        assert!(i >= 0);
        self.lists[c].get(i as usize).unwrap_or(&self.tails[c])
    }

    pub fn list(&self, c: usize) -> &[MSeries] {
        &self.lists[c]
    }
}

fn jacobi(
    tails: Vec<MSeries>,
    height: usize,
    order: u32,
    what: &str,
    update: impl Fn(&Ladders, usize, i64) -> MSeries,
) -> Result<Ladders> {
    let k = tails.len();
    let lists = tails
        .iter()
        .map(|t| std::iter::once(t.zero_like()).chain(std::iter::repeat_n(t.clone(), height)).collect())
        .collect();
    let mut cur = Ladders { lists, tails };
    let sweeps = order as usize + 4;
    for _ in 0..sweeps {
        let mut next = cur.clone();
        for c in 0..k {
            for i in 1..=height {
                next.lists[c][i] = update(&cur, c, i as i64);
            }
        }
        if next == cur {
            return Ok(cur);
        }
        cur = next;
    }
    Err(Error::NonConvergence {
        what: what.into(),
        sweeps,
    })
}

fn fixed_point(mut x: Vec<MSeries>, order: u32, what: &str, step: impl Fn(&[MSeries]) -> Vec<MSeries>) -> Result<Vec<MSeries>> {
    let sweeps = order as usize + 4;
    for _ in 0..sweeps {
        let next = step(&x);
        if next == x {
            return Ok(x);
        }
        x = next;
    }
    Err(Error::NonConvergence {
        what: what.into(),
        sweeps,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SystemKind {
    /// `P_i = 1 + z∘ Q_{i-1} P_i Q_{i+1}`, `Q_i = 1 + z• P_{i-1} Q_i P_{i+1}`
    Ternary,
    /// `R_i = 1 + y• S_{i-1} S_{i+1}`, `S_i = 1 + y∘ R_{i-1} R_{i+1}`
    Binary,
}

/// Solution of a two-ladder system in the weights `(x•, x∘)`, which are
/// the series variables 0 and 1.
#[derive(Clone, Debug)]
pub struct TwoVarSystem {
    pub kind: SystemKind,
    pub order: u32,
    pub ladders: Ladders,
}

impl TwoVarSystem {
    /// First family (`P` or `R`).
    pub fn first(&self, i: i64) -> &MSeries {
        self.ladders.get(0, i)
    }

    /// Second family (`Q` or `S`).
    pub fn second(&self, i: i64) -> &MSeries {
        self.ladders.get(1, i)
    }

    pub fn tails(&self) -> (&MSeries, &MSeries) {
        (&self.ladders.tails[0], &self.ladders.tails[1])
    }
}

fn weights2(order: u32) -> (MSeries, MSeries) {
    (MSeries::var(2, order, 0), MSeries::var(2, order, 1))
}

/// Tails of a two-ladder system at `order`.
pub fn system_tails(kind: SystemKind, order: u32) -> Result<(MSeries, MSeries)> {
    let (xb, xw) = weights2(order);
    let one = xb.one_like();
    let v = fixed_point(vec![one.clone(), one.clone()], order, "system tails", |v| match kind {
        SystemKind::Ternary => vec![
            &one + &(&(&xw * &(&v[1] * &v[1])) * &v[0]),
            &one + &(&(&xb * &(&v[0] * &v[0])) * &v[1]),
        ],
        SystemKind::Binary => vec![&one + &(&xb * &(&v[1] * &v[1])), &one + &(&xw * &(&v[0] * &v[0]))],
    })?;
    Ok((v[0].clone(), v[1].clone()))
}

fn system_solve(kind: SystemKind, order: u32) -> Result<TwoVarSystem> {
    let (a, b) = system_tails(kind, order)?;
    let (xb, xw) = weights2(order);
    let one = xb.one_like();
    let weights = [xw, xb];
    let ladders = jacobi(vec![a, b], order as usize + 2, order, "system ladder", |l, c, i| {
        let o = 1 - c;
        match kind {
            SystemKind::Ternary => {
                &one + &(&(&weights[c] * &(l.get(o, i - 1) * l.get(o, i + 1))) * l.get(c, i))
            }
            SystemKind::Binary => {
                let wt = &weights[1 - c];
                &one + &(wt * &(l.get(o, i - 1) * l.get(o, i + 1)))
            }
        }
    })?;
    Ok(TwoVarSystem { kind, order, ladders })
}

pub fn ternary_solve(order: u32) -> Result<TwoVarSystem> {
    system_solve(SystemKind::Ternary, order)
}

pub fn binary_solve(order: u32) -> Result<TwoVarSystem> {
    system_solve(SystemKind::Binary, order)
}

/// `(D, Y)` with `D = c·x` the zero-constant-term root of the system's
/// quadratic and `Y = x²`.
pub fn system_dy(kind: SystemKind, a: &MSeries, b: &MSeries) -> Result<(MSeries, MSeries)> {
    let one = a.one_like();
    let (a1, b1) = (a - &one, b - &one);
    match kind {
        SystemKind::Ternary => {
            // (P-1) D^2 - D + (Q-1) = 0, c^2 = (Q-1)/(P-1)
            let d = solve_quadratic_branch(&a1, &-&one, &b1)?;
            let y = (&(&d * &d) * &a1).exact_div(&b1)?;
            Ok((d, y))
        }
        SystemKind::Binary => {
            // S(S-1) D^2 - R S D + R(R-1) = 0, c^2 = R(R-1)/(S(S-1))
            let ss = b * &b1;
            let rr = a * &a1;
            let d = solve_quadratic_branch(&ss, &-&(a * b), &rr)?;
            let y = (&(&d * &d) * &ss).exact_div(&rr)?;
            Ok((d, y))
        }
    }
}

/// Residual of the quadratic solved by `D`.
pub fn system_dy_residual(kind: SystemKind, a: &MSeries, b: &MSeries, d: &MSeries) -> MSeries {
    let one = a.one_like();
    let (a1, b1) = (a - &one, b - &one);
    match kind {
        SystemKind::Ternary => &(&(&a1 * &(d * d)) - d) + &b1,
        SystemKind::Binary => &(&(&(b * &b1) * &(d * d)) - &(&(a * b) * d)) + &(a * &a1),
    }
}

/// Binary-system shape:
/// `R_{2i} = R N(i) N_γ(i+3) / (N(i+1) N_γ(i+2))`,
/// `S_{2i+1} = S N_γ(i+1) N(i+3) / (N_γ(i+2) N(i+2))`,
/// `R_{2i+1} = R N_β(i) N(i+3) / (N_β(i+1) N(i+2))`,
/// `S_{2i} = S N(i) N_β(i+2) / (N(i+1) N_β(i+1))`.
pub fn shape_b_ladder(fam: &mut ProductFamily, tail_r: &MSeries, tail_s: &MSeries, n: usize) -> Result<WeightLadder> {
    let frac = |num: [&MSeries; 3], den: [&MSeries; 2]| -> Result<MSeries> {
        Ok(&(&(num[0] * num[1]) * num[2]) * &(den[0] * den[1]).inv_unit()?)
    };
    let mut rl = Vec::with_capacity(n);
    let mut sl = Vec::with_capacity(n);
    for k in 1..=n {
        let i = k / 2;
        if k % 2 == 0 {
            let (n0, n1) = (fam.n(i), fam.n(i + 1));
            rl.push(frac([tail_r, &n0, &fam.n_gamma(i + 3)], [&n1, &fam.n_gamma(i + 2)])?);
            sl.push(frac([tail_s, &n0, &fam.n_beta(i + 2)], [&n1, &fam.n_beta(i + 1)])?);
        } else {
            let (n2, n3) = (fam.n(i + 2), fam.n(i + 3));
            rl.push(frac([tail_r, &fam.n_beta(i), &n3], [&fam.n_beta(i + 1), &n2])?);
            sl.push(frac([tail_s, &fam.n_gamma(i + 1), &n3], [&fam.n_gamma(i + 2), &n2])?);
        }
    }
    Ok(WeightLadder::new(rl, sl, tail_r.clone(), tail_s.clone()))
}

/// Closed-form ladder of a two-ladder system, entries `1..=n`.
pub fn system_closed_ladder(kind: SystemKind, order: u32, n: usize) -> Result<WeightLadder> {
    let mut internal = order + 3;
    for _ in 0..6 {
        let (a, b) = system_tails(kind, internal)?;
        let (d, y) = system_dy(kind, &a, &b)?;
        let params = QuadParams::from_dy(a.clone(), b.clone(), d, y)?;
        let mut fam = params.family();
        let lad = match kind {
            SystemKind::Ternary => shape_a_ladder(&mut fam, &a, &b, n)?,
            SystemKind::Binary => shape_b_ladder(&mut fam, &a, &b, n)?,
        };
        let rel = lad.reliable_upto(n);
        if rel >= order {
            return Ok(lad.truncated(n, order));
        }
        internal += order - rel;
    }
    Err(Error::NonConvergence {
        what: "system closed-form order elevation".into(),
        sweeps: 6,
    })
}

/// Closed form against the perturbative solution for indices `0..=i_max`.
pub fn system_closed_check(sys: &TwoVarSystem, i_max: usize) -> Result<Verdict> {
    let lad = system_closed_ladder(sys.kind, sys.order, i_max)?;
    let names = match sys.kind {
        SystemKind::Ternary => ("P", "Q"),
        SystemKind::Binary => ("R", "S"),
    };
    let mut v = Verdict::default();
    for i in 1..=i_max as i64 {
        v.compare(format!("{}_{i}", names.0), lad.b(i), sys.first(i), sys.order);
        v.compare(format!("{}_{i}", names.1), lad.w(i), sys.second(i), sys.order);
    }
    Ok(v)
}

pub fn ternary_closed(sys: &TwoVarSystem, i_max: usize) -> Result<Verdict> {
    system_closed_check(sys, i_max)
}

pub fn binary_closed(sys: &TwoVarSystem, i_max: usize) -> Result<Verdict> {
    system_closed_check(sys, i_max)
}

/// Parameters `(y, d, e)` and `â = (e+d+y)/(1+e+d)` of the three-color system.
#[derive(Clone, Debug, PartialEq)]
pub struct TriParams {
    pub y: MSeries,
    pub d: MSeries,
    pub e: MSeries,
    pub a_hat: MSeries,
}

/// Fixed point of `y = U(y+d) + V y (1+e)`, `d = V(d+e) + T(d+y)`,
/// `e = T(e+1) + U(e+d)`.
pub fn tri_params(t: &MSeries, u: &MSeries, v: &MSeries) -> Result<TriParams> {
    let one = t.one_like();
    let order = t.order();
    let z = vec![t.zero_like(); 3];
    let s = fixed_point(z, order, "three-color parameters", |s| {
        let (y, d, e) = (&s[0], &s[1], &s[2]);
        vec![
            &(u * &(y + d)) + &(&(v * y) * &(&one + e)),
            &(v * &(d + e)) + &(t * &(d + y)),
            &(t * &(e + &one)) + &(u * &(e + d)),
        ]
    })?;
    let rel = t.reliable().min(u.reliable()).min(v.reliable());
    let (y, d, e) = (s[0].clone().with_reliable(rel), s[1].clone().with_reliable(rel), s[2].clone().with_reliable(rel));
    let a_hat = &(&(&e + &d) + &y) * &(&(&one + &e) + &d).inv_unit()?;
    Ok(TriParams { y, d, e, a_hat })
}

/// `TUV(1+y)² - y(1-T-U-V)²`.
pub fn characteristic_residual(t: &MSeries, u: &MSeries, v: &MSeries, y: &MSeries) -> MSeries {
    let one = t.one_like();
    let opy = &one + y;
    let m = &(&(&one - t) - u) - v;
    &(&(&(t * u) * v) * &(&opy * &opy)) - &(y * &(&m * &m))
}

#[derive(Clone, Debug)]
pub struct TriColorState {
    pub order: u32,
    /// Families `T`, `U`, `V` as ladders 0, 1, 2.
    pub ladders: Ladders,
    pub params: TriParams,
}

impl TriColorState {
    pub fn t(&self, i: i64) -> &MSeries {
        self.ladders.get(0, i)
    }
    pub fn u(&self, i: i64) -> &MSeries {
        self.ladders.get(1, i)
    }
    pub fn v(&self, i: i64) -> &MSeries {
        self.ladders.get(2, i)
    }
}

/// Tails `T = t• + T(U+V)` and rotations.
pub fn tricolor_tails(order: u32) -> Result<(MSeries, MSeries, MSeries)> {
    let vars: Vec<MSeries> = (0..3).map(|k| MSeries::var(3, order, k)).collect();
    let s = fixed_point(vars.clone(), order, "three-color tails", |s| {
        (0..3)
            .map(|c| &vars[c] + &(&s[c] * &(&s[(c + 1) % 3] + &s[(c + 2) % 3])))
            .collect()
    })?;
    Ok((s[0].clone(), s[1].clone(), s[2].clone()))
}

/// `T_i = t• + T_i(U_{i-1} + V_{i+1})` and its rotations, `T_0 = U_0 = V_0 = 0`.
pub fn tricolor_solve(order: u32) -> Result<TriColorState> {
    let (t, u, v) = tricolor_tails(order)?;
    let vars: Vec<MSeries> = (0..3).map(|k| MSeries::var(3, order, k)).collect();
    let one = t.one_like();
    let ladders = jacobi(vec![t.clone(), u.clone(), v.clone()], order as usize + 2, order, "three-color ladder", |l, c, i| {
        let s = l.get((c + 1) % 3, i - 1) + l.get((c + 2) % 3, i + 1);
        &vars[c] * &(&one - &s).inv_unit().expect("unit")
    })?;
    let params = tri_params(&t, &u, &v)?;
    Ok(TriColorState { order, ladders, params })
}

/// `X (1-y^i)(1-â y^{i+1}) / ((1-â y^i)(1-y^{i+1}))`.
pub fn tri_closed_3i(tail: &MSeries, p: &TriParams, i: u32) -> Result<MSeries> {
    let one = tail.one_like();
    let yi = p.y.pow(i);
    let yi1 = &yi * &p.y;
    let num = &(&one - &yi) * &(&one - &(&p.a_hat * &yi1));
    let den = &(&one - &(&p.a_hat * &yi)) * &(&one - &yi1);
    Ok(&(tail * &num) * &den.inv_unit()?)
}

/// Cyclic rotation `(t•, t∘, t⊙) -> (t∘, t⊙, t•)` of the variables.
pub fn rotate(s: &MSeries) -> MSeries {
    s.permute(&[1, 2, 0])
}

/// Closed forms of `T_{3i}`, `U_{3i}`, `V_{3i}` for `3i <= i_max`, rotation
/// symmetry, and the characteristic identity.
pub fn tricolor_closed_check(state: &TriColorState, i_max: usize) -> Result<Verdict> {
    let order = state.order;
    let mut v = Verdict::default();
    let tails = [state.ladders.tails[0].clone(), state.ladders.tails[1].clone(), state.ladders.tails[2].clone()];
    let names = ["T", "U", "V"];
    for c in 0..3 {
        let p = tri_params(&tails[c], &tails[(c + 1) % 3], &tails[(c + 2) % 3])?;
        if c > 0 {
            v.compare(format!("rotated y ({})", names[c]), &p.y, &state.params.y, order);
        }
        for i in 0..=(i_max / 3) as u32 {
            let closed = tri_closed_3i(&tails[c], &p, i)?;
            v.compare(format!("{}_{}", names[c], 3 * i), &closed, state.ladders.get(c, 3 * i as i64), order);
        }
    }
    for i in 0..=i_max as i64 {
        for c in 0..3 {
            v.compare(
                format!("rotation {}_{i}", names[c]),
                &rotate(state.ladders.get(c, i)),
                state.ladders.get((c + 1) % 3, i),
                order,
            );
        }
    }
    let p = &state.params;
    v.push(
        "characteristic identity",
        characteristic_residual(&tails[0], &tails[1], &tails[2], &p.y).first_difference(&tails[0].zero_like(), order),
    );
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::rat;
    use crate::slices::{default_height, ladder_solve, FaceWeights};

    #[test]
    fn ternary_basics() {
        let sys = ternary_solve(8).unwrap();
        assert!(sys.first(0).is_zero() && sys.second(0).is_zero());
        assert_eq!(sys.first(1), &sys.first(1).one_like());
        assert_eq!(sys.second(1), &sys.second(1).one_like());
        let (p, q) = sys.tails();
        let one = p.one_like();
        let xb = MSeries::var(2, 8, 0);
        let xw = MSeries::var(2, 8, 1);
        assert!((&one + &(&(&xw * &(q * q)) * p)).agrees(p));
        assert!((&one + &(&(&xb * &(p * p)) * q)).agrees(q));
        for i in 1..=8 {
            assert_eq!(sys.first(i).swap_colors(), *sys.second(i));
        }
    }

    #[test]
    fn binary_basics() {
        let sys = binary_solve(8).unwrap();
        assert_eq!(sys.first(1), &sys.first(1).one_like());
        assert_eq!(sys.second(1), &sys.second(1).one_like());
        for i in 1..=8 {
            let lhs = sys.first(i);
            let rhs = &lhs.one_like() + &(&MSeries::var(2, 8, 0) * &(sys.second(i - 1) * sys.second(i + 1)));
            assert!(lhs.agrees(&rhs));
        }
    }

    #[test]
    fn dy_residuals() {
        for kind in [SystemKind::Ternary, SystemKind::Binary] {
            let (a, b) = system_tails(kind, 8).unwrap();
            let (d, y) = system_dy(kind, &a, &b).unwrap();
            assert!(system_dy_residual(kind, &a, &b, &d).is_zero_reliably());
            assert_eq!(y.min_degree(), Some(2));
        }
    }

    #[test]
    fn closed_forms_match_perturbative() {
        let sys = ternary_solve(8).unwrap();
        let v = ternary_closed(&sys, 6).unwrap();
        assert!(v.holds(), "{:?}", v.failures().collect::<Vec<_>>());
        let sys = binary_solve(8).unwrap();
        let v = binary_closed(&sys, 6).unwrap();
        assert!(v.holds(), "{:?}", v.failures().collect::<Vec<_>>());
    }

    #[test]
    fn ternary_from_quadrangulations() {
        let order = 6;
        let g = FaceWeights::quad();
        let lad = ladder_solve(&g, order, default_height(&g, order)).unwrap();
        let tb = MSeries::var(2, order, 0);
        let tw = MSeries::var(2, order, 1);
        let zb = (lad.b(1) * lad.b(1)).exact_div(&tb).unwrap();
        let zw = (lad.w(1) * lad.w(1)).exact_div(&tw).unwrap();
        let sys = ternary_solve(order).unwrap();
        let b1_inv = lad.b(1).exact_div(&tb).unwrap().inv_unit().unwrap();
        let w1_inv = lad.w(1).exact_div(&tw).unwrap().inv_unit().unwrap();
        for i in 1..=5 {
            let p = sys.first(i).substitute(&[zb.clone(), zw.clone()]).unwrap();
            let q = sys.second(i).substitute(&[zb.clone(), zw.clone()]).unwrap();
            let bi = (lad.b(i) * &b1_inv).exact_div(&tb).unwrap();
            let wi = (lad.w(i) * &w1_inv).exact_div(&tw).unwrap();
            assert!(p.agrees(&bi), "P_{i}");
            assert!(q.agrees(&wi), "Q_{i}");
        }
    }

    #[test]
    fn binary_from_ternary() {
        let order = 7;
        let sys = ternary_solve(order).unwrap();
        let zb = MSeries::var(2, order, 0);
        let zw = MSeries::var(2, order, 1);
        let one = zb.one_like();
        let delta = (sys.second(2) - &one).exact_div(&zb).unwrap();
        let delta2 = (sys.first(2) - &one).exact_div(&zw).unwrap();
        assert!(delta.agrees(&delta2));
        let yb = &zb * &delta;
        let yw = &zw * &delta;
        let r = |i: i64| (sys.first(i + 1) - &one).exact_div(&yw).unwrap();
        let s = |i: i64| (sys.second(i + 1) - &one).exact_div(&yb).unwrap();
        assert!(r(0).is_zero() && s(0).is_zero());
        for i in 1..=4 {
            assert!(r(i).agrees(&(&one + &(&yb * &(&s(i - 1) * &s(i + 1))))), "R_{i}");
            assert!(s(i).agrees(&(&one + &(&yw * &(&r(i - 1) * &r(i + 1))))), "S_{i}");
        }
    }

    #[test]
    fn tricolor_system() {
        let st = tricolor_solve(6).unwrap();
        assert!(st.t(0).is_zero());
        assert_eq!(st.params.e.coeff(&[1, 0, 0]), rat(1, 1));
        let v = tricolor_closed_check(&st, 6).unwrap();
        assert!(v.holds(), "{:?}", v.failures().collect::<Vec<_>>());
        for i in 1..=6 {
            assert_eq!(st.t(i).collapse(), st.u(i).collapse());
            assert_eq!(st.t(i).collapse(), st.v(i).collapse());
        }
    }

    #[test]
    fn tricolor_collapse_equation() {
        // t = T_i - T_i(T_{i-1} + T_{i+1}) for the common collapsed series
        let st = tricolor_solve(6).unwrap();
        let t = MSeries::var(3, 6, 0);
        for i in 1..=5 {
            let c = |k: i64| st.t(k).collapse();
            let rhs = &t + &(&c(i) * &(&c(i - 1) + &c(i + 1)));
            assert!(c(i).agrees(&rhs));
        }
    }

    #[test]
    fn characteristic_identity_order_8() {
        let (t, u, v) = tricolor_tails(8).unwrap();
        let p = tri_params(&t, &u, &v).unwrap();
        assert!(characteristic_residual(&t, &u, &v, &p.y).is_zero_reliably());
    }

    #[test]
    fn params_positive_in_tails() {
        let vars: Vec<MSeries> = (0..3).map(|k| MSeries::var(3, 8, k)).collect();
        let p = tri_params(&vars[0], &vars[1], &vars[2]).unwrap();
        for s in [&p.y, &p.d, &p.e] {
            assert!(s.has_nonneg_integer_coeffs(), "{s}");
        }
    }

    #[test]
    fn characteristic_rearrangement_at_points() {
        // TUV(x^3 + x^-3 + 2) = (1-T-U-V)^2 with T,U,V from (t,u,v,x)
        use crate::qseries::Rat;
        for (t, u, v, x) in [(1, 2, 3, rat(1, 2)), (2, 1, 5, rat(2, 7)), (1, 1, 1, rat(1, 3)), (3, 5, 2, rat(3, 4)), (4, 1, 1, rat(1, 5))] {
            let (t, u, v) = (rat(t, 1), rat(u, 1), rat(v, 1));
            let tt = &u * &v * &x / ((&u + &t * &x) * (&t + &v * &x));
            let uu = &t * &v * &x / ((&u + &t * &x) * (&v + &u * &x));
            let vv = &t * &u * &x / ((&v + &u * &x) * (&t + &v * &x));
            let one = Rat::from_integer(1.into());
            let y = &x * &x * &x;
            let m = &one - &tt - &uu - &vv;
            let lhs = &tt * &uu * &vv * (&y + y.recip() + Rat::from_integer(2.into()));
            assert_eq!(lhs, &m * &m);
            let opy = &one + &y;
            assert_eq!(&tt * &uu * &vv * &opy * &opy, &y * &m * &m);
        }
    }
}
