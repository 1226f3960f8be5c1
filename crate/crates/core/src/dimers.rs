//! Hard dimers on bicolored oriented segments, and the reconstruction of
//! Hankel determinants from them via nonintersecting path systems.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::paths::Color;
use crate::qseries::{MSeries, Rat, Ring};

/// Polynomial in the dimer weights `s1`, `s2` with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DimerPoly {
    coeffs: BTreeMap<(u32, u32), BigInt>,
}

impl DimerPoly {
    pub fn one() -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert((0, 0), BigInt::one());
        DimerPoly { coeffs }
    }

    pub fn zero() -> Self {
        DimerPoly::default()
    }

    pub fn coeff(&self, a: u32, b: u32) -> BigInt {
        self.coeffs.get(&(a, b)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.coeffs.iter()
    }

    /// Largest number of dimers in any configuration.
    pub fn max_dimers(&self) -> u32 {
        self.coeffs.keys().map(|(a, b)| a + b).max().unwrap_or(0)
    }

    fn add_term(&mut self, key: (u32, u32), c: BigInt) {
        let e = self.coeffs.entry(key).or_default();
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    pub fn add(&self, other: &DimerPoly) -> DimerPoly {
        let mut out = self.clone();
        for (k, c) in &other.coeffs {
            out.add_term(*k, c.clone());
        }
        out
    }

    /// Multiply by `s1^a s2^b`.
    pub fn shift(&self, a: u32, b: u32) -> DimerPoly {
        DimerPoly {
            coeffs: self.coeffs.iter().map(|((x, y), c)| ((x + a, y + b), c.clone())).collect(),
        }
    }

    pub fn swap(&self) -> DimerPoly {
        DimerPoly {
            coeffs: self.coeffs.iter().map(|((x, y), c)| ((*y, *x), c.clone())).collect(),
        }
    }

    pub fn eval<S: Ring>(&self, s1: &S, s2: &S) -> S {
        let one = s1.one_like();
        let mut acc = s1.zero_like();
        for ((a, b), c) in &self.coeffs {
            let mut t = one.from_rat_like(&Rat::from_integer(c.clone()));
            for _ in 0..*a {
                t = t.times(s1);
            }
            for _ in 0..*b {
                t = t.times(s2);
            }
            acc = acc.plus(&t);
        }
        acc
    }

    /// `p^r · Z(W/p, B/p)` as coefficients of `p^0, p^1, ..., p^r`.
    pub fn homogenize(&self, r: u32, w: &MSeries, b: &MSeries) -> Vec<MSeries> {
        let mut out = vec![w.zero_like(); r as usize + 1];
        for ((x, y), c) in &self.coeffs {
            let deg = r.checked_sub(x + y).expect("too many dimers for the homogenizing power");
            let t = (&w.pow(*x) * &b.pow(*y)).scale(&Rat::from_integer(c.clone()));
            out[deg as usize] = &out[deg as usize] + &t;
        }
        out
    }
}

impl fmt::Display for DimerPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<_> = self.coeffs.iter().collect();
        keys.sort_by_key(|((a, b), _)| (a + b, std::cmp::Reverse(*a)));
        let mut first = true;
        for ((a, b), c) in keys {
            let (neg, mag) = if c < &BigInt::zero() { (true, -c) } else { (false, c.clone()) };
            if !first {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            } else if neg {
                write!(f, "-")?;
            }
            first = false;
            let mut parts = Vec::new();
            if !mag.is_one() || (a + b == 0) {
                parts.push(mag.to_string());
            }
            for (name, e) in [("s1", *a), ("s2", *b)] {
                match e {
                    0 => {}
                    1 => parts.push(name.to_string()),
                    _ => parts.push(format!("{name}^{e}")),
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

/// Colors of the first and last node of a segment.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ends {
    BlackBlack,
    BlackWhite,
    WhiteBlack,
    WhiteWhite,
}

impl Ends {
    pub const ALL: [Ends; 4] = [Ends::BlackBlack, Ends::BlackWhite, Ends::WhiteBlack, Ends::WhiteWhite];

    pub fn first(self) -> Color {
        match self {
            Ends::BlackBlack | Ends::BlackWhite => Color::Black,
            _ => Color::White,
        }
    }

    pub fn last(self) -> Color {
        match self {
            Ends::BlackBlack | Ends::WhiteBlack => Color::Black,
            _ => Color::White,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Ends::BlackBlack => "bb",
            Ends::BlackWhite => "bw",
            Ends::WhiteBlack => "wb",
            Ends::WhiteWhite => "ww",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SegmentSpec {
    pub links: usize,
    pub ends: Ends,
}

impl SegmentSpec {
    pub fn new(links: usize, ends: Ends) -> Result<Self> {
        let same = ends.first() == ends.last();
        if same != (links % 2 == 0) {
            return Err(Error::Parity(format!("{} links with ends {}", links, ends.label())));
        }
        Ok(SegmentSpec { links, ends })
    }

    /// Whether link `j` (between nodes `j` and `j+1`) goes black to white.
    fn link_is_bw(&self, j: usize) -> bool {
        (self.ends.first() == Color::Black) == (j % 2 == 0)
    }
}

/// Hard-dimer polynomial by transfer along the segment.
pub fn zhd(spec: SegmentSpec) -> DimerPoly {
    // free: last node uncovered; taken: last node covered
    let mut free = DimerPoly::one();
    let mut taken = DimerPoly::zero();
    for j in 0..spec.links {
        let dimer = if spec.link_is_bw(j) { free.shift(1, 0) } else { free.shift(0, 1) };
        free = free.add(&taken);
        taken = dimer;
    }
    free.add(&taken)
}

/// Hard-dimer polynomial by enumerating all link subsets.
pub fn zhd_brute(spec: SegmentSpec) -> DimerPoly {
    assert!(spec.links <= 20, "brute force limited to 20 links");
    let mut out = DimerPoly::zero();
    for mask in 0u32..(1 << spec.links) {
        if mask & (mask >> 1) != 0 {
            continue;
        }
        let (mut a, mut b) = (0, 0);
        for j in 0..spec.links {
            if mask >> j & 1 == 1 {
                if spec.link_is_bw(j) {
                    a += 1;
                } else {
                    b += 1;
                }
            }
        }
        out.add_term((a, b), BigInt::one());
    }
    out
}

/// `Z^{••}_{2i}` and `Z^{•∘}_{2i+1}` by the decomposition on the last link,
/// returned as `(even, odd)` lists for `i = 0..=i_max`.
pub fn zhd_recursive(i_max: usize) -> (Vec<DimerPoly>, Vec<DimerPoly>) {
    let mut even = vec![DimerPoly::one()];
    let mut odd = vec![DimerPoly::one().add(&DimerPoly::one().shift(1, 0))];
    for i in 1..=i_max {
        even.push(odd[i - 1].add(&even[i - 1].shift(0, 1)));
        odd.push(even[i].add(&odd[i - 1].shift(1, 0)));
    }
    (even, odd)
}

/// `s1(c,x)`, `s2(c,x)`.
pub fn dimer_weights(c: &Rat, x: &Rat) -> Result<(Rat, Rat)> {
    let den = (c + x) * (Rat::one() + c * x);
    if den.is_zero() {
        return Err(Error::Degenerate("(c+x)(1+cx) = 0".into()));
    }
    Ok((-x / &den, -(c * c * x) / den))
}

/// Closed-form value of the segment polynomial at `(c, x)`.
pub fn zhd_closed(spec: SegmentSpec, c: &Rat, x: &Rat) -> Result<Rat> {
    let one = Rat::one();
    if c.is_zero() || x.is_zero() || x == &one || x == &-&one || (c * x) == -&one {
        return Err(Error::Degenerate(format!("c = {c}, x = {x}")));
    }
    let den = (c + x) * (&one + c * x);
    if den.is_zero() {
        return Err(Error::Degenerate("(c+x)(1+cx) = 0".into()));
    }
    let k = c / den;
    let x2 = x * x;
    let i = spec.links / 2;
    let pw = |e: usize| num_traits::pow(x.clone(), e);
    Ok(match spec.ends {
        Ends::BlackBlack | Ends::WhiteWhite => {
            num_traits::pow(k, i) * (&one - pw(2 * i + 2)) / (&one - x2)
        }
        Ends::BlackWhite => {
            let r = (c + x) / (&one + c * x);
            (&one + c * x) * num_traits::pow(k, i + 1) * (&one - r * pw(2 * i + 3)) / (&one - x2)
        }
        Ends::WhiteBlack => {
            let r = (&one + c * x) / (c + x);
            (&one + x / c) * num_traits::pow(k, i + 1) * (&one - r * pw(2 * i + 3)) / (&one - x2)
        }
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedVerdict {
    pub polynomial: Rat,
    pub closed: Rat,
    pub closed_inverted_x: Rat,
    pub closed_negated: Rat,
}

impl ClosedVerdict {
    pub fn holds(&self) -> bool {
        self.polynomial == self.closed && self.closed == self.closed_inverted_x && self.closed == self.closed_negated
    }
}

/// Compare the polynomial at `(s1(c,x), s2(c,x))` with the closed form, and
/// the closed form with its images under `x -> 1/x` and `(c,x) -> (-c,-x)`.
pub fn zhd_closed_check(spec: SegmentSpec, c: &Rat, x: &Rat) -> Result<ClosedVerdict> {
    let (s1, s2) = dimer_weights(c, x)?;
    Ok(ClosedVerdict {
        polynomial: zhd(spec).eval(&s1, &s2),
        closed: zhd_closed(spec, c, x)?,
        closed_inverted_x: zhd_closed(spec, c, &x.recip())?,
        closed_negated: zhd_closed(spec, &-c, &-x)?,
    })
}

fn bw_power(b: &MSeries, w: &MSeries, e: u32) -> MSeries {
    (b * w).pow(e)
}

/// `(h_i^{(0)}, h_i^{(1)})` for quadrangulations from the single-column
/// dimer model. `alpha` holds `α_0, α_1` of the color being computed; pass
/// swapped tails and the tilde coefficients for the tilde family.
pub fn lgv_quad(i: usize, b: &MSeries, w: &MSeries, alpha: &[MSeries]) -> Result<(MSeries, MSeries)> {
    let ratio = &alpha[1] * &alpha[0].inv_unit()?;
    let s1 = w * &ratio;
    let s2 = b * &ratio;
    let pref = &bw_power(b, w, (i * (i + 1) / 2) as u32) * &alpha[0].pow(i as u32 + 1);
    let odd = zhd(SegmentSpec::new(2 * i + 1, Ends::BlackWhite)?).eval(&s1, &s2);
    let even = zhd(SegmentSpec::new(2 * i + 2, Ends::BlackBlack)?).eval(&s1, &s2);
    Ok((&pref * &odd, &(&pref * &w.pow(i as u32 + 1)) * &even))
}

/// `φ(p1) φ(p2)` for `φ = Σ c_k p^k`, where `p1 + p2 = e1`, `p1 p2 = e2`.
pub fn symmetric_norm(phi: &[MSeries], e1: &MSeries, e2: &MSeries) -> MSeries {
    // reduce modulo p^2 = e1 p - e2, highest power first
    let mut v: Vec<MSeries> = phi.to_vec();
    for k in (2..v.len()).rev() {
        let top = v[k].clone();
        v[k - 1] = &v[k - 1] + &(&top * e1);
        v[k - 2] = &v[k - 2] - &(&top * e2);
    }
    let a = v[0].clone();
    let bb = if v.len() > 1 { v[1].clone() } else { a.zero_like() };
    &(&(&a * &a) + &(&(&a * &bb) * e1)) + &(&(&bb * &bb) * e2)
}

/// `(h_i^{(0)}, h_i^{(1)})` for hexangulations from the two-column model,
/// with the column weights entering only through `α_1/α_2` and `α_0/α_2`.
pub fn lgv_hex(i: usize, b: &MSeries, w: &MSeries, alpha: &[MSeries]) -> Result<(MSeries, MSeries)> {
    let e1 = alpha[1].exact_div(&alpha[2])?;
    let e2 = alpha[0].exact_div(&alpha[2])?;
    let bw = b * w;
    let mut s0 = b.zero_like();
    let mut s1 = b.zero_like();
    for r in 0..=i + 1 {
        let rest = bw.pow((i + 1 - r) as u32);
        let z_odd = if r == 0 {
            DimerPoly::one()
        } else {
            zhd(SegmentSpec::new(2 * r - 1, Ends::BlackWhite)?)
        };
        let z_even = zhd(SegmentSpec::new(2 * r, Ends::BlackBlack)?);
        let n_odd = symmetric_norm(&z_odd.homogenize(r as u32, w, b), &e1, &e2);
        let n_even = symmetric_norm(&z_even.homogenize(r as u32, w, b), &e1, &e2);
        s0 = &s0 + &(&rest * &n_odd);
        s1 = &s1 + &(&rest * &n_even);
    }
    let pref = &alpha[2].pow(i as u32 + 1) * &bw_power(b, w, (i * (i + 1) / 2) as u32);
    Ok((&pref * &s0, &(&pref * &w.pow(i as u32 + 1)) * &s1))
}
