//! Hankel determinants of the `F_n` sequences and the continued-fraction
//! coefficients they encode.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::paths::{self, Color, WeightLadder};
use crate::qseries::{MSeries, Rat, Ring};
use crate::slices::{self, FaceWeights};

/// `det (F_{n+m+shift})_{0<=n,m<=i}` by expansion over column subsets.
///
/// Uses only ring operations, so it is valid for truncated series.
pub fn hankel_det<S: Ring>(f: &[S], shift: usize, i: usize) -> Result<S> {
    let needed = 2 * i + 1 + shift;
    if f.len() < needed {
        return Err(Error::InsufficientEntries {
            needed,
            have: f.len(),
        });
    }
    det(&(0..=i)
        .map(|r| (0..=i).map(|c| f[r + c + shift].clone()).collect())
        .collect::<Vec<Vec<S>>>())
}

/// Division-free determinant: `dp[mask]` sums signed products over the first
/// `|mask|` rows using exactly the columns in `mask`.
pub fn det<S: Ring>(a: &[Vec<S>]) -> Result<S> {
    let n = a.len();
    if n == 0 {
        return Err(Error::InsufficientEntries { needed: 1, have: 0 });
    }
    assert!(n <= 20, "matrix too large for subset expansion");
    let zero = a[0][0].zero_like();
    let mut dp: Vec<Option<S>> = vec![None; 1 << n];
    dp[0] = Some(a[0][0].one_like());
    for mask in 0usize..(1 << n) {
        let Some(cur) = dp[mask].take() else { continue };
        let row = mask.count_ones() as usize;
        if row == n {
            dp[mask] = Some(cur);
            continue;
        }
        for j in 0..n {
            if mask >> j & 1 == 1 || a[row][j].is_zero_elem() {
                continue;
            }
            let above = (mask >> (j + 1)).count_ones();
            let mut term = cur.times(&a[row][j]);
            if above % 2 == 1 {
                term = term.negate();
            }
            let slot = &mut dp[mask | 1 << j];
            *slot = Some(match slot.take() {
                Some(s) => s.plus(&term),
                None => term,
            });
        }
    }
    Ok(dp[(1 << n) - 1].take().unwrap_or(zero))
}

/// The determinant sequences `h_i^{(0)}, h_i^{(1)}` and their tilde versions,
/// stored for `i >= 0`; index `-1` reads as 1.
#[derive(Clone, Debug)]
pub struct HankelFamily {
    pub h0: Vec<MSeries>,
    pub h1: Vec<MSeries>,
    pub h0_tilde: Vec<MSeries>,
    pub h1_tilde: Vec<MSeries>,
}

fn at(list: &[MSeries], i: i64) -> Result<MSeries> {
    if i < 0 {
        return Ok(list[0].one_like());
    }
    list.get(i as usize).cloned().ok_or(Error::InsufficientEntries {
        needed: i as usize + 1,
        have: list.len(),
    })
}

impl HankelFamily {
    /// Determinants for every index the sequences allow.
    pub fn from_f(f_black: &[MSeries], f_white: &[MSeries]) -> Result<Self> {
        let seq = |f: &[MSeries], shift: usize| -> Result<Vec<MSeries>> {
            let count = (f.len() + 1 - shift) / 2;
            (0..count).map(|i| hankel_det(f, shift, i)).collect()
        };
        Ok(HankelFamily {
            h0: seq(f_black, 0)?,
            h1: seq(f_black, 1)?,
            h0_tilde: seq(f_white, 0)?,
            h1_tilde: seq(f_white, 1)?,
        })
    }

    pub fn h0(&self, i: i64) -> Result<MSeries> {
        at(&self.h0, i)
    }

    pub fn h1(&self, i: i64) -> Result<MSeries> {
        at(&self.h1, i)
    }

    pub fn h0_tilde(&self, i: i64) -> Result<MSeries> {
        at(&self.h0_tilde, i)
    }

    pub fn h1_tilde(&self, i: i64) -> Result<MSeries> {
        at(&self.h1_tilde, i)
    }
}

/// `(x0 · x1) / (y0 · y1)` with valuation-aware division.
fn ratio(x0: &MSeries, x1: &MSeries, y0: &MSeries, y1: &MSeries) -> Result<MSeries> {
    (x0 * x1).exact_div(&(y0 * y1))
}

/// `B_1..B_n`, `W_1..W_n` from the determinants. Each entry keeps its own
/// reliable order; the tails are set to `B_n`, `W_n`, which agree with the true
/// tails up to degree `n - 1`.
pub fn cf_extract(h: &HankelFamily, n: usize) -> Result<WeightLadder> {
    assert!(n >= 1);
    let mut bl = Vec::with_capacity(n);
    let mut wl = Vec::with_capacity(n);
    for k in 1..=n as i64 {
        if k % 2 == 0 {
            let i = k / 2;
            bl.push(ratio(&h.h0(i)?, &h.h1(i - 2)?, &h.h0(i - 1)?, &h.h1(i - 1)?)?);
            wl.push(ratio(
                &h.h0_tilde(i)?,
                &h.h1_tilde(i - 2)?,
                &h.h0_tilde(i - 1)?,
                &h.h1_tilde(i - 1)?,
            )?);
        } else {
            let i = (k + 1) / 2;
            bl.push(ratio(
                &h.h1_tilde(i - 1)?,
                &h.h0_tilde(i - 2)?,
                &h.h1_tilde(i - 2)?,
                &h.h0_tilde(i - 1)?,
            )?);
            wl.push(ratio(&h.h1(i - 1)?, &h.h0(i - 2)?, &h.h1(i - 2)?, &h.h0(i - 1)?)?);
        }
    }
    let cap = (n - 1) as u32;
    let tail_b = bl[n - 1].clone().with_reliable(cap);
    let tail_w = wl[n - 1].clone().with_reliable(cap);
    Ok(WeightLadder::new(bl, wl, tail_b, tail_w))
}

/// `F_0..=F_{n_max}` of the given root color from the continued fraction
/// truncated after `depth` levels.
pub fn cf_expand_color(color: Color, ladder: &WeightLadder, depth: usize, n_max: usize) -> Vec<MSeries> {
    let one = ladder.tail_b.one_like();
    let zero = ladder.tail_b.zero_like();
    // t[m] is the z^m coefficient of the current tail fraction
    let mut t: Vec<MSeries> = vec![zero.clone(); n_max + 1];
    t[0] = one.clone();
    for k in (1..=depth as i64).rev() {
        let own = if k % 2 == 1 { color.other() } else { color };
        let a = ladder.get(own, k);
        // x = z · a · t, u = 1/(1 - x): u_m = Σ_{j>=1} x_j u_{m-j}
        let mut x = vec![zero.clone(); n_max + 1];
        for m in 1..=n_max {
            x[m] = a * &t[m - 1];
        }
        let mut u = vec![zero.clone(); n_max + 1];
        u[0] = one.clone();
        for m in 1..=n_max {
            let mut acc = zero.clone();
            for j in 1..=m {
                if !x[j].is_zero() && !u[m - j].is_zero() {
                    acc = &acc + &(&x[j] * &u[m - j]);
                }
            }
            u[m] = acc;
        }
        t = u;
    }
    t
}

/// `F_n^•` for `n <= n_max` from the continued fraction.
pub fn cf_expand(ladder: &WeightLadder, depth: usize, n_max: usize) -> Vec<MSeries> {
    cf_expand_color(Color::Black, ladder, depth, n_max)
}

/// Hankel route: tails, `F_n` by the direct formula, determinants, extraction.
pub fn hankel_ladder(g: &FaceWeights, order: u32, n: usize) -> Result<WeightLadder> {
    let (b, w) = slices::tail_solve(g, order)?;
    let fb = slices::f_sequence(Color::Black, n, g, &b, &w)?;
    let fw = slices::f_sequence(Color::White, n, g, &b, &w)?;
    cf_extract(&HankelFamily::from_f(&fb, &fw)?, n)
}

/// Hankel route run at whatever internal order makes every entry
/// `B_1..B_n`, `W_1..W_n` reliable to at least `target`; the result is
/// truncated to `target`.
pub fn hankel_ladder_to(g: &FaceWeights, target: u32, n: usize) -> Result<WeightLadder> {
    let mut internal = target + 1;
    for _ in 0..8 {
        match hankel_ladder(g, internal, n) {
            Ok(lad) => {
                let rel = lad.reliable_upto(n);
                if rel >= target {
                    return Ok(lad.truncated(n, target));
                }
                internal += target - rel;
            }
            Err(Error::OrderExhausted { needed, have }) => internal += needed - have + 1,
            Err(Error::DivisionByZero) => internal += internal / 2 + 1,
            Err(e) => return Err(e),
        }
    }
    Err(Error::NonConvergence {
        what: "hankel order elevation".into(),
        sweeps: 8,
    })
}

/// Exact `F_n^•` at a rational point where the tails take the values
/// `B = b`, `W = w`; returns `(t•, t∘, [F_0..=F_{n_max}])`.
///
/// The vertex weights are read off the tail equations, so the point lies on
/// the solution curve exactly.
pub fn f_at_point(g: &FaceWeights, b: &Rat, w: &Rat, n_max: usize) -> Result<(Rat, Rat, Vec<Rat>)> {
    let pt = [b.clone(), w.clone()];
    let g1 = g.g(1);
    let mut t_b = b * (Rat::one() - &g1);
    let mut t_w = w * (Rat::one() - &g1);
    for k in 2..=g.p() + 1 {
        let gk = g.g(k);
        if gk.is_zero() {
            continue;
        }
        let len = 2 * k - 1;
        t_b -= &gk * paths::uniform_poly(Color::Black, 0, -1, len, None)?.eval(&pt);
        t_w -= &gk * paths::uniform_poly(Color::White, 0, -1, len, None)?.eval(&pt);
    }
    if t_b.is_zero() {
        return Err(Error::Degenerate("t• vanishes at this point".into()));
    }
    let mut alpha = Vec::new();
    for q in 0..=g.p() {
        let mut bracket = if q == 0 { Rat::one() } else { Rat::zero() };
        for k in q + 1..=g.p() + 1 {
            let gk = g.g(k);
            if !gk.is_zero() {
                bracket -= gk * paths::uniform_poly(Color::Black, 0, 0, 2 * (k - q - 1), None)?.eval(&pt);
            }
        }
        alpha.push(b / &t_b * bracket);
    }
    let mut f = vec![Rat::one()];
    for n in 1..=n_max {
        let mut acc = Rat::zero();
        for (q, a) in alpha.iter().enumerate() {
            acc += a * paths::uniform_poly(Color::Black, 0, 0, 2 * (n + q), Some(0))?.eval(&pt);
        }
        f.push(acc);
    }
    Ok((t_b, t_w, f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::{rat, rat_int};
    use crate::slices::{default_height, ladder_solve, tail_solve};

    fn p(order: u32, s: &str) -> MSeries {
        MSeries::parse(2, order, s).unwrap()
    }

    fn leibniz<S: Ring>(a: &[Vec<S>]) -> S {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    out.push(q);
                }
            }
            out
        }
        let n = a.len();
        let mut total = a[0][0].zero_like();
        for perm in perms(n) {
            let inversions = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| perm[i] > perm[j])
                .count();
            let mut term = a[0][0].one_like();
            for (r, &c) in perm.iter().enumerate() {
                term = term.times(&a[r][c]);
            }
            total = if inversions % 2 == 0 {
                total.plus(&term)
            } else {
                total.minus(&term)
            };
        }
        total
    }

    #[test]
    fn det_matches_leibniz() {
        let f: Vec<Rat> = [3, -1, 4, 1, -5, 9, 2, -6, 5, 3]
            .iter()
            .enumerate()
            .map(|(i, &x)| rat(x, i as i64 + 1))
            .collect();
        for shift in 0..=1 {
            for i in 0..=3 {
                let m: Vec<Vec<Rat>> = (0..=i)
                    .map(|r| (0..=i).map(|c| f[r + c + shift].clone()).collect())
                    .collect();
                assert_eq!(hankel_det(&f, shift, i).unwrap(), leibniz(&m));
            }
        }
        let fs: Vec<MSeries> = (0..8)
            .map(|n| p(6, &format!("1 + {n}*tb - tw^2 + {}*tb*tw", n * n)))
            .collect();
        for i in 0..=3 {
            let m: Vec<Vec<MSeries>> = (0..=i)
                .map(|r| (0..=i).map(|c| fs[r + c].clone()).collect())
                .collect();
            assert_eq!(hankel_det(&fs, 0, i).unwrap(), leibniz(&m));
        }
        assert!(hankel_det(&f[..3], 1, 1).is_err());
    }

    #[test]
    fn small_determinants() {
        let g = FaceWeights::quad();
        let (b, w) = tail_solve(&g, 8).unwrap();
        let f = slices::f_sequence(Color::Black, 4, &g, &b, &w).unwrap();
        assert_eq!(hankel_det(&f, 0, 0).unwrap(), b.one_like());
        let lad = ladder_solve(&g, 8, default_height(&g, 8)).unwrap();
        assert!(hankel_det(&f, 1, 0).unwrap().agrees(lad.w(1)));
        let h = HankelFamily::from_f(&f, &f).unwrap();
        let w1 = cf_extract(&h, 1).unwrap();
        assert!(w1.w(1).agrees(&f[1]));
    }

    #[test]
    fn quad_extraction_matches_recursion() {
        let g = FaceWeights::quad();
        let lad = ladder_solve(&g, 8, default_height(&g, 8)).unwrap();
        let cf = hankel_ladder(&g, 8, 4).unwrap();
        for i in 1..=4i64 {
            assert!(cf.b(i).reliable() >= 1);
            assert!(cf.b(i).agrees(lad.b(i)), "B_{i}");
            assert!(cf.w(i).agrees(lad.w(i)), "W_{i}");
        }
        assert!(cf.b(1).agrees_to(&p(8, "tb + tb*(tb + tw)"), 2));
    }

    #[test]
    fn elevated_order_reaches_target() {
        let g = FaceWeights::quad();
        let cf = hankel_ladder_to(&g, 5, 4).unwrap();
        assert_eq!(cf.reliable_upto(4), 5);
        let lad = ladder_solve(&g, 5, default_height(&g, 5)).unwrap();
        for i in 1..=4i64 {
            assert_eq!(cf.b(i), lad.b(i));
            assert_eq!(cf.w(i), lad.w(i));
        }
    }

    #[test]
    fn expansion_matches_direct_formula() {
        let g = FaceWeights::quad();
        let order = 8;
        let lad = ladder_solve(&g, order, default_height(&g, order)).unwrap();
        let (b, w) = (lad.tail_b.clone(), lad.tail_w.clone());
        let f = cf_expand(&lad, 6, 3);
        assert_eq!(f[1], lad.w(1).clone());
        for n in 1..=3 {
            assert!(f[n].agrees(&slices::f_direct(n, &g, &b, &w).unwrap()), "F_{n}");
            let fw = cf_expand_color(Color::White, &lad, 6, 3);
            assert!(fw[n].agrees(&slices::f_direct_white(n, &g, &b, &w).unwrap()));
        }
        let deeper = cf_expand(&lad, 9, 3);
        assert_eq!(f, deeper);
    }

    #[test]
    fn round_trip() {
        let g = FaceWeights::hex();
        let order = 7;
        let lad = ladder_solve(&g, order, default_height(&g, order)).unwrap();
        let fb = cf_expand_color(Color::Black, &lad, 6, 4);
        let fw = cf_expand_color(Color::White, &lad, 6, 4);
        let back = cf_extract(&HankelFamily::from_f(&fb, &fw).unwrap(), 4).unwrap();
        for i in 1..=4i64 {
            assert!(back.b(i).agrees(lad.b(i)));
            assert!(back.w(i).agrees(lad.w(i)));
        }
    }

    #[test]
    fn positivity_at_rational_points() {
        for (g, pts) in [
            (FaceWeights::quad(), vec![rat(1, 10), rat(1, 20), rat(3, 20)]),
            (FaceWeights::hex(), vec![rat(1, 10), rat(1, 8), rat(1, 6)]),
        ] {
            for beta in pts {
                let (t, tw_, f) = f_at_point(&g, &beta, &beta, 10).unwrap();
                assert_eq!(t, tw_);
                assert!(t > Rat::zero());
                for i in 0..=4 {
                    assert!(hankel_det(&f, 0, i).unwrap() > Rat::zero(), "h0_{i}");
                    assert!(hankel_det(&f, 1, i).unwrap() > Rat::zero(), "h1_{i}");
                }
            }
        }
    }

    #[test]
    fn point_values_match_series() {
        // F_1 = W - B²W/t• holds exactly at the point as well
        let g = FaceWeights::quad();
        let (b, w) = (rat(1, 10), rat(1, 7));
        let (t, _, f) = f_at_point(&g, &b, &w, 2).unwrap();
        assert_eq!(f[1], &w - &b * &b * &w / &t);
        assert_eq!(t, &b - &b * (&b + rat_int(2) * &w));
    }
}
