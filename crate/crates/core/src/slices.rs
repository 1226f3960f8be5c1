//! Slice recursions: tail values `B`, `W`, the ladder `B_i`, `W_i`,
//! conserved quantities, the direct `F_n` formula and two-point functions.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::paths::{self, Color, Strip, WeightLadder};
use crate::qseries::{rat_int, MSeries, Rat};

/// Face weights `g_1, g_2, ...` (a face of degree `2k` gets `g_k`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceWeights {
    g: Vec<Rat>,
}

impl FaceWeights {
    pub fn new(g: Vec<Rat>) -> Result<Self> {
        match g.last() {
            None => Err(Error::FaceWeights("empty weight list".into())),
            Some(x) if x.is_zero() => Err(Error::FaceWeights("last weight must be nonzero".into())),
            _ => {
                if g[0] == Rat::one() {
                    return Err(Error::FaceWeights(
                        "g_1 = 1 makes the slice equations singular".into(),
                    ));
                }
                Ok(FaceWeights { g })
            }
        }
    }

    pub fn from_ints(g: &[i64]) -> Result<Self> {
        FaceWeights::new(g.iter().map(|&x| rat_int(x)).collect())
    }

    pub fn quad() -> Self {
        FaceWeights::from_ints(&[0, 1]).expect("valid")
    }

    pub fn hex() -> Self {
        FaceWeights::from_ints(&[0, 0, 1]).expect("valid")
    }

    /// `g_k` for `k >= 1`, zero beyond the list.
    pub fn g(&self, k: usize) -> Rat {
        assert!(k >= 1);
        self.g.get(k - 1).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn weights(&self) -> &[Rat] {
        &self.g
    }

    /// `p` such that the largest face degree is `2(p+1)`.
    pub fn p(&self) -> usize {
        self.g.len() - 1
    }

    /// Indices `k >= 2` with `g_k != 0`.
    fn nonlinear(&self) -> impl Iterator<Item = (usize, &Rat)> + '_ {
        self.g
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| (i + 1, x))
    }
}

impl fmt::Display for FaceWeights {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.g.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

fn tb(order: u32) -> MSeries {
    MSeries::var(2, order, 0)
}

fn tw(order: u32) -> MSeries {
    MSeries::var(2, order, 1)
}

/// Scale factor `1/(1-g_1)` absorbing the length-1 strip term.
fn linear_factor(g: &FaceWeights) -> Rat {
    (Rat::one() - g.g(1)).recip()
}

/// Tail values `(B, W)` of the slice recursion, exact to `order`.
pub fn tail_solve(g: &FaceWeights, order: u32) -> Result<(MSeries, MSeries)> {
    // strip polynomials in formal (B, W), unconstrained and height independent
    let polys: Vec<(Rat, MSeries, MSeries)> = g
        .nonlinear()
        .map(|(k, gk)| {
            let len = 2 * k - 1;
            let pb = paths::uniform_poly(Color::Black, 0, -1, len, None)?;
            let pw = paths::uniform_poly(Color::White, 0, -1, len, None)?;
            Ok((gk.clone(), pb, pw))
        })
        .collect::<Result<_>>()?;
    let scale = linear_factor(g);
    let (t_b, t_w) = (tb(order), tw(order));
    let mut cur = (t_b.scale(&scale), t_w.scale(&scale));
    for sweep in 0..=order as usize + 2 {
        let vals = [cur.0.clone(), cur.1.clone()];
        let mut nb = t_b.clone();
        let mut nw = t_w.clone();
        for (gk, pb, pw) in &polys {
            nb = &nb + &pb.substitute(&vals)?.scale(gk);
            nw = &nw + &pw.substitute(&vals)?.scale(gk);
        }
        let next = (nb.scale(&scale), nw.scale(&scale));
        if next == cur && sweep > 0 {
            return Ok(cur);
        }
        cur = next;
    }
    Err(Error::NonConvergence {
        what: "tail equations".into(),
        sweeps: order as usize + 3,
    })
}

/// Ladder `B_i`, `W_i` for `1 <= i <= height`, tails beyond; exact to `order`.
///
/// `height` must be at least `order + p`; see [`default_height`].
pub fn ladder_solve(g: &FaceWeights, order: u32, height: usize) -> Result<WeightLadder> {
    if height < order as usize + g.p() {
        return Err(Error::InsufficientEntries {
            needed: order as usize + g.p(),
            have: height,
        });
    }
    let (tail_b, tail_w) = tail_solve(g, order)?;
    ladder_with_tails(g, order, height, tail_b, tail_w)
}

pub fn default_height(g: &FaceWeights, order: u32) -> usize {
    order as usize + g.p() + 1
}

fn ladder_with_tails(
    g: &FaceWeights,
    order: u32,
    height: usize,
    tail_b: MSeries,
    tail_w: MSeries,
) -> Result<WeightLadder> {
    let scale = linear_factor(g);
    let (t_b, t_w) = (tb(order), tw(order));
    let mut lad = WeightLadder::new(
        vec![t_b.clone(); height],
        vec![t_w.clone(); height],
        tail_b,
        tail_w,
    );
    let max_sweeps = order as usize + 3;
    for _ in 0..max_sweeps {
        let mut bl = Vec::with_capacity(height);
        let mut wl = Vec::with_capacity(height);
        for i in 1..=height as i64 {
            let mut nb = t_b.clone();
            let mut nw = t_w.clone();
            for (k, gk) in g.nonlinear() {
                let len = 2 * k - 1;
                nb = &nb + &paths::z_strip(Strip::BlackWhite, i, len, &lad)?.scale(gk);
                nw = &nw + &paths::z_strip(Strip::WhiteBlack, i, len, &lad)?.scale(gk);
            }
            bl.push(nb.scale(&scale));
            wl.push(nw.scale(&scale));
        }
        let next = WeightLadder::new(bl, wl, lad.tail_b.clone(), lad.tail_w.clone());
        if next == lad {
            return Ok(lad);
        }
        lad = next;
    }
    Err(Error::NonConvergence {
        what: "ladder recursion".into(),
        sweeps: max_sweeps,
    })
}

/// Coefficients `α_q` and `α̃_q`, `q = 0..=p`.
#[derive(Clone, Debug)]
pub struct AlphaCoeffs {
    pub alpha: Vec<MSeries>,
    pub alpha_tilde: Vec<MSeries>,
}

impl AlphaCoeffs {
    pub fn new(g: &FaceWeights, b: &MSeries, w: &MSeries) -> Result<Self> {
        let order = b.order();
        let b_over = b.exact_div(&tb(order))?;
        let w_over = w.exact_div(&tw(order))?;
        let mut alpha = Vec::new();
        let mut alpha_tilde = Vec::new();
        for q in 0..=g.p() {
            let mut bracket = if q == 0 {
                b.one_like()
            } else {
                b.zero_like()
            };
            for k in q + 1..=g.p() + 1 {
                let gk = g.g(k);
                if gk.is_zero() {
                    continue;
                }
                let l0 = paths::l_zero(2 * (k - q - 1), b, w)?;
                bracket = &bracket - &l0.scale(&gk);
            }
            alpha.push(&b_over * &bracket);
            alpha_tilde.push(&w_over * &bracket);
        }
        Ok(AlphaCoeffs { alpha, alpha_tilde })
    }

    pub fn get(&self, color: Color) -> &[MSeries] {
        match color {
            Color::Black => &self.alpha,
            Color::White => &self.alpha_tilde,
        }
    }
}

/// `F_n` from the α-formula with constant weights; `F_0 = 1`.
pub fn f_direct_with(color: Color, n: usize, alpha: &AlphaCoeffs, b: &MSeries, w: &MSeries) -> Result<MSeries> {
    if n == 0 {
        return Ok(b.one_like());
    }
    let mut acc = b.zero_like();
    for (q, a) in alpha.get(color).iter().enumerate() {
        let z = paths::uniform_paths(color, 0, 0, 2 * (n + q), Some(0), b, w)?;
        acc = &acc + &(a * &z);
    }
    Ok(acc)
}

/// `F_n^•` from the tails.
pub fn f_direct(n: usize, g: &FaceWeights, b: &MSeries, w: &MSeries) -> Result<MSeries> {
    f_direct_with(Color::Black, n, &AlphaCoeffs::new(g, b, w)?, b, w)
}

/// `F_n^∘` from the tails.
pub fn f_direct_white(n: usize, g: &FaceWeights, b: &MSeries, w: &MSeries) -> Result<MSeries> {
    f_direct_with(Color::White, n, &AlphaCoeffs::new(g, b, w)?, b, w)
}

/// `F_0..=F_{n_max}` of one color.
pub fn f_sequence(color: Color, n_max: usize, g: &FaceWeights, b: &MSeries, w: &MSeries) -> Result<Vec<MSeries>> {
    let alpha = AlphaCoeffs::new(g, b, w)?;
    (0..=n_max)
        .map(|n| f_direct_with(color, n, &alpha, b, w))
        .collect()
}

/// Conserved quantity evaluated at offset `d`; equals `F_n^•` for every `d >= 0`.
pub fn conserved(n: usize, d: i64, ladder: &WeightLadder, g: &FaceWeights) -> Result<MSeries> {
    assert!(d >= 0 && n >= 1);
    let len = 2 * n;
    let main = paths::z_plus(Color::Black, d, d, len, ladder, d)?;
    let mut corr = main.zero_like();
    for j in 1..=n as i64 {
        let up = paths::z_plus(Color::Black, d, d + 2 * j, len, ladder, d)?;
        if up.is_zero() {
            continue;
        }
        let mut down = main.zero_like();
        if d >= 1 {
            for (k, gk) in g.weights().iter().enumerate() {
                let klen = 2 * k + 1;
                if gk.is_zero() || (klen as i64) < 2 * j + 1 {
                    continue;
                }
                let z = paths::descending_paths(
                    &main.one_like(),
                    Color::Black,
                    d + 2 * j,
                    d - 1,
                    klen,
                    Some(0),
                    ladder,
                )?;
                down = &down + &z.scale(gk);
            }
        }
        corr = &corr + &(&up * &down);
    }
    let corr = corr.exact_div(&tb(main.order()))?;
    Ok(&main - &corr)
}

/// White counterpart of [`conserved`], giving `F_n^∘`.
pub fn conserved_white(n: usize, d: i64, ladder: &WeightLadder, g: &FaceWeights) -> Result<MSeries> {
    Ok(conserved(n, d, &ladder.swap_colors(), g)?.swap_colors())
}

/// Two-point functions `G_1..G_I` of both root colors.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoPointTable {
    pub black: Vec<MSeries>,
    pub white: Vec<MSeries>,
}

impl TwoPointTable {
    /// `G_i^•` for `i >= 1`.
    pub fn g_black(&self, i: usize) -> &MSeries {
        &self.black[i - 1]
    }

    pub fn g_white(&self, i: usize) -> &MSeries {
        &self.white[i - 1]
    }

    pub fn max_distance(&self) -> usize {
        self.black.len()
    }
}

pub fn twopoint_from_ladder(ladder: &WeightLadder, i_max: usize) -> TwoPointTable {
    let order = ladder.tail_b.order();
    let black = twopoint_family(i_max, |i| ladder.b(i).clone(), &tb(order), &tw(order));
    let white = twopoint_family(i_max, |i| ladder.w(i).clone(), &tw(order), &tb(order));
    TwoPointTable { black, white }
}

fn twopoint_family<F: Fn(i64) -> MSeries>(i_max: usize, x: F, own: &MSeries, other: &MSeries) -> Vec<MSeries> {
    (1..=i_max as i64)
        .map(|i| {
            if i == 1 {
                other * &(&x(1) - own)
            } else {
                let diff = &x(i) - &x(i - 1);
                if i % 2 == 0 {
                    own * &diff
                } else {
                    other * &diff
                }
            }
        })
        .collect()
}
