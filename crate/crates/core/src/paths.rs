//! Weighted bicolored lattice paths.
//!
//! Heights alternate in color along a path; the start height carries the
//! color passed in. Series-valued enumerators weight only descending steps
//! (`B_h` from a black height `h`, `W_h` from a white one). The rational
//! enumerator [`rat_path`] uses the symmetric convention where every step is
//! weighted by the color of its lower end (`b` if white, `w` if black).

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::qseries::{MSeries, Rat, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }

    /// Color of height `h` on a path whose height `start` has color `self`.
    pub fn at(self, start: i64, h: i64) -> Color {
        if (h - start).rem_euclid(2) == 0 {
            self
        } else {
            self.other()
        }
    }
}

/// Start and end colors of a strip path `i → i-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strip {
    BlackWhite,
    WhiteBlack,
}

impl Strip {
    pub fn start(self) -> Color {
        match self {
            Strip::BlackWhite => Color::Black,
            Strip::WhiteBlack => Color::White,
        }
    }
}

/// Weight of a descending step leaving height `top` of color `color`.
pub trait StepWeights<S> {
    fn down(&self, top: i64, color: Color) -> S;
}

/// Height-dependent slice weights `B_i`, `W_i` with `B_0 = W_0 = 0` and
/// tail values above the ladder height.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightLadder {
    b: Vec<MSeries>,
    w: Vec<MSeries>,
    pub tail_b: MSeries,
    pub tail_w: MSeries,
}

impl WeightLadder {
    /// `b_list[k]`, `w_list[k]` hold `B_{k+1}`, `W_{k+1}`.
    pub fn new(
        b_list: Vec<MSeries>,
        w_list: Vec<MSeries>,
        tail_b: MSeries,
        tail_w: MSeries,
    ) -> Self {
        assert_eq!(b_list.len(), w_list.len(), "ladder lists differ in length");
        let zero = tail_b.zero_like();
        let mut b = vec![zero.clone()];
        b.extend(b_list);
        let mut w = vec![zero];
        w.extend(w_list);
        WeightLadder {
            b,
            w,
            tail_b,
            tail_w,
        }
    }

    /// Every `B_i = B`, `W_i = W` for `i >= 1`.
    pub fn constant(tail_b: MSeries, tail_w: MSeries) -> Self {
        WeightLadder::new(Vec::new(), Vec::new(), tail_b, tail_w)
    }

    pub fn height(&self) -> usize {
        self.b.len() - 1
    }

    pub fn b(&self, i: i64) -> &MSeries {
        self.entry(&self.b, &self.tail_b, i)
    }

    pub fn w(&self, i: i64) -> &MSeries {
        self.entry(&self.w, &self.tail_w, i)
    }

    fn entry<'a>(&'a self, list: &'a [MSeries], tail: &'a MSeries, i: i64) -> &'a MSeries {
        assert!(i >= 0, "negative ladder index {i}");
        list.get(i as usize).unwrap_or(tail)
    }

    pub fn get(&self, color: Color, i: i64) -> &MSeries {
        match color {
            Color::Black => self.b(i),
            Color::White => self.w(i),
        }
    }

    /// Exchange the two families and the variables t•, t∘.
    pub fn swap_colors(&self) -> WeightLadder {
        WeightLadder {
            b: self.w.iter().map(MSeries::swap_colors).collect(),
            w: self.b.iter().map(MSeries::swap_colors).collect(),
            tail_b: self.tail_w.swap_colors(),
            tail_w: self.tail_b.swap_colors(),
        }
    }

    /// Smallest reliable order among `B_1..B_n`, `W_1..W_n`.
    pub fn reliable_upto(&self, n: usize) -> u32 {
        (1..=n as i64)
            .flat_map(|i| [self.b(i).reliable(), self.w(i).reliable()])
            .min()
            .unwrap_or(u32::MAX)
    }

    /// First `n` rungs and the tails, truncated to `order`.
    pub fn truncated(&self, n: usize, order: u32) -> WeightLadder {
        let bl = (1..=n as i64).map(|i| self.b(i).truncate(order)).collect();
        let wl = (1..=n as i64).map(|i| self.w(i).truncate(order)).collect();
        WeightLadder::new(bl, wl, self.tail_b.truncate(order), self.tail_w.truncate(order))
    }
}

impl StepWeights<MSeries> for WeightLadder {
    fn down(&self, top: i64, color: Color) -> MSeries {
        self.get(color, top).clone()
    }
}

/// Height-independent weights; any height, negative included, is allowed.
#[derive(Clone, Debug)]
pub struct Uniform<S> {
    pub b: S,
    pub w: S,
}

impl<S: Clone> StepWeights<S> for Uniform<S> {
    fn down(&self, _top: i64, color: Color) -> S {
        match color {
            Color::Black => self.b.clone(),
            Color::White => self.w.clone(),
        }
    }
}

/// Rational sample values `b = √B`, `w = √W`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatPathWeights {
    pub b: Rat,
    pub w: Rat,
}

impl RatPathWeights {
    pub fn new(b: Rat, w: Rat) -> Self {
        assert!(
            b > Rat::zero() && w > Rat::zero(),
            "weights must be positive"
        );
        RatPathWeights { b, w }
    }

    pub fn c(&self) -> Rat {
        &self.b / &self.w
    }
}

fn check_shape(from: i64, to: i64, len: usize) -> Result<()> {
    let diff = to - from;
    if (diff - len as i64).rem_euclid(2) != 0 {
        return Err(Error::Parity(format!(
            "height change {diff} in {len} steps"
        )));
    }
    if (len as i64) < diff.abs() {
        return Err(Error::Length { len, diff });
    }
    Ok(())
}

/// Transfer-matrix sum over ±1 paths `from → to` of `len` steps staying
/// `>= floor`; `step(h, up)` gives the weight of the step leaving height `h`
/// (`None` for weight one).
fn path_dp<S, F>(one: &S, from: i64, to: i64, len: usize, floor: Option<i64>, step: F) -> Result<S>
where
    S: Ring,
    F: Fn(i64, bool) -> Option<S>,
{
    check_shape(from, to, len)?;
    if let Some(f) = floor {
        if from < f || to < f {
            return Ok(one.zero_like());
        }
    }
    let mut cur: BTreeMap<i64, S> = BTreeMap::new();
    cur.insert(from, one.clone());
    for s in 0..len {
        let left = (len - s - 1) as i64;
        let mut next: BTreeMap<i64, S> = BTreeMap::new();
        for (&h, v) in &cur {
            for up in [true, false] {
                let h2 = if up { h + 1 } else { h - 1 };
                if floor.is_some_and(|f| h2 < f) || (h2 - to).abs() > left {
                    continue;
                }
                let contrib = match step(h, up) {
                    Some(x) => v.times(&x),
                    None => v.clone(),
                };
                match next.get_mut(&h2) {
                    Some(acc) => *acc = acc.plus(&contrib),
                    None => {
                        next.insert(h2, contrib);
                    }
                }
            }
        }
        cur = next;
    }
    Ok(cur.remove(&to).unwrap_or_else(|| one.zero_like()))
}

/// Paths weighted on descending steps only, over any ring.
pub fn descending_paths<S, Wt>(
    one: &S,
    start: Color,
    from: i64,
    to: i64,
    len: usize,
    floor: Option<i64>,
    wt: &Wt,
) -> Result<S>
where
    S: Ring,
    Wt: StepWeights<S>,
{
    path_dp(one, from, to, len, floor, |h, up| {
        if up {
            None
        } else {
            Some(wt.down(h, start.at(from, h)))
        }
    })
}

/// `Z^{+}_{d,d2}(len)` with ladder weights, paths staying `>= floor`.
pub fn z_plus(
    start: Color,
    d: i64,
    d2: i64,
    len: usize,
    ladder: &WeightLadder,
    floor: i64,
) -> Result<MSeries> {
    if d < floor || d2 < floor {
        return Err(Error::Length { len, diff: d2 - d });
    }
    check_shape(d, d2, len)?;
    descending_paths(
        &ladder.tail_b.one_like(),
        start,
        d,
        d2,
        len,
        Some(floor),
        ladder,
    )
}

/// `Z_{i,i-1}(len)` above height 0 with ladder weights.
pub fn z_strip(colors: Strip, i: i64, len: usize, ladder: &WeightLadder) -> Result<MSeries> {
    if len % 2 == 0 {
        return Err(Error::Parity(format!("strip length {len} is even")));
    }
    if i < 1 {
        return Err(Error::Length { len, diff: -1 });
    }
    descending_paths(
        &ladder.tail_b.one_like(),
        colors.start(),
        i,
        i - 1,
        len,
        Some(0),
        ladder,
    )
}

/// Path polynomial in formal variables `(B, W)` with uniform weights.
///
/// The result is an exact polynomial (order = number of descending steps),
/// ready for [`MSeries::substitute`].
pub fn uniform_poly(
    start: Color,
    from: i64,
    to: i64,
    len: usize,
    floor: Option<i64>,
) -> Result<MSeries> {
    let order = len as u32;
    let wt = Uniform {
        b: MSeries::var(2, order, 0),
        w: MSeries::var(2, order, 1),
    };
    descending_paths(&MSeries::one(2, order), start, from, to, len, floor, &wt)
}

/// Evaluate a uniform-weight path sum at series values of `B`, `W`.
pub fn uniform_paths(
    start: Color,
    from: i64,
    to: i64,
    len: usize,
    floor: Option<i64>,
    b: &MSeries,
    w: &MSeries,
) -> Result<MSeries> {
    uniform_poly(start, from, to, len, floor)?.substitute(&[b.clone(), w.clone()])
}

/// Unconstrained closed paths from a black height: `L_0(len)`.
pub fn l_zero(len: usize, b: &MSeries, w: &MSeries) -> Result<MSeries> {
    uniform_paths(Color::Black, 0, 0, len, None, b, w)
}

/// Rational path sum with symmetric step weights; impossible shapes give 0.
pub fn rat_path(
    start: Color,
    from: i64,
    to: i64,
    len: usize,
    floor: Option<i64>,
    wt: &RatPathWeights,
) -> Rat {
    if check_shape(from, to, len).is_err() {
        return Rat::zero();
    }
    path_dp(&Rat::one(), from, to, len, floor, |h, up| {
        let lower = if up { h } else { h - 1 };
        Some(match start.at(from, lower) {
            Color::White => wt.b.clone(),
            Color::Black => wt.w.clone(),
        })
    })
    .expect("shape checked")
}

/// `L_m(len)`: unconstrained symmetric-weight paths with height decrease `2m`.
pub fn l_rat(m: i64, len: usize, wt: &RatPathWeights) -> Rat {
    rat_path(Color::Black, 0, -2 * m.abs(), len, None, wt)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReflectionVerdict {
    pub lhs: Rat,
    pub rhs: Rat,
}

impl ReflectionVerdict {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// `A^{∘∘}_{2k-1,2l-1}(2q) = L_{k-l}(2q) - L_{k+l}(2q)`, for `k, l >= 1`.
pub fn check_reflection_odd(k: i64, l: i64, q: usize, wt: &RatPathWeights) -> ReflectionVerdict {
    assert!(k >= 1 && l >= 1);
    let lhs = rat_path(Color::White, 2 * k - 1, 2 * l - 1, 2 * q, Some(0), wt);
    let rhs = l_rat(k - l, 2 * q, wt) - l_rat(k + l, 2 * q, wt);
    ReflectionVerdict { lhs, rhs }
}

/// `A^{••}_{2k,2l}(2q) = L_{k-l} - c L_{k+l+1} + (c²-1) Σ_{m≥2} L_{k+l+m} (-c)^{m-2}`
/// with `c = b/w`.
pub fn check_reflection_even(k: i64, l: i64, q: usize, wt: &RatPathWeights) -> ReflectionVerdict {
    reflection_even(Color::Black, k, l, q, wt)
}

/// White-start companion of [`check_reflection_even`], with `c → 1/c`.
pub fn check_reflection_even_white(
    k: i64,
    l: i64,
    q: usize,
    wt: &RatPathWeights,
) -> ReflectionVerdict {
    reflection_even(Color::White, k, l, q, wt)
}

fn reflection_even(
    start: Color,
    k: i64,
    l: i64,
    q: usize,
    wt: &RatPathWeights,
) -> ReflectionVerdict {
    assert!(k >= 0 && l >= 0);
    let len = 2 * q;
    let lhs = rat_path(start, 2 * k, 2 * l, len, Some(0), wt);
    let c = match start {
        Color::Black => wt.c(),
        Color::White => wt.c().recip(),
    };
    // L_m is color independent; evaluate it from the start color's convention
    let l_of = |m: i64| rat_path(start, 0, -2 * m.abs(), len, None, wt);
    let mut rhs = l_of(k - l) - &c * l_of(k + l + 1);
    let factor = &c * &c - Rat::one();
    let mut sign_pow = Rat::one();
    let mut m = 2;
    while k + l + m <= q as i64 {
        rhs += &factor * l_of(k + l + m) * &sign_pow;
        sign_pow *= -&c;
        m += 1;
    }
    ReflectionVerdict { lhs, rhs }
}
