//! Truncated multivariate formal power series over exact rationals.
//!
//! A series `f = Σ c_m t^m + O(deg > order)` in 2 or 3 variables. Truncation is
//! by total degree. Besides the truncation bound every series carries a
//! `reliable` degree: coefficients of total degree `<= reliable` are exact,
//! anything above may be polluted by an earlier valuation-losing division.
//!
//! Invariants:
//! - every stored monomial has total degree `<= order`
//! - no stored coefficient is zero
//! - `reliable <= order`
//!
//! Binary operations take the minimum of both reliable orders; [`MSeries::exact_div`]
//! additionally subtracts the degree of the divisor's leading monomial.

mod parse;
mod ring;

use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use ring::Ring;

/// Exact rational coefficient, always kept in lowest terms with positive denominator.
pub type Rat = num_rational::BigRational;

pub const MAX_VARS: usize = 3;

/// Convenience constructor for small rationals.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Exponent vector ordered by total degree first, then lexicographically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    deg: u32,
    exps: [u32; MAX_VARS],
}

impl Monomial {
    pub fn new(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "at most {MAX_VARS} variables");
        let mut e = [0; MAX_VARS];
        e[..exps.len()].copy_from_slice(exps);
        Monomial {
            deg: e.iter().sum(),
            exps: e,
        }
    }

    pub fn one() -> Self {
        Monomial::new(&[])
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn exps(&self) -> &[u32; MAX_VARS] {
        &self.exps
    }

    fn times(&self, other: &Monomial) -> Monomial {
        let mut e = self.exps;
        for (a, b) in e.iter_mut().zip(other.exps.iter()) {
            *a += b;
        }
        Monomial {
            deg: self.deg + other.deg,
            exps: e,
        }
    }

    fn divide(&self, other: &Monomial) -> Option<Monomial> {
        let mut e = [0; MAX_VARS];
        for k in 0..MAX_VARS {
            e[k] = self.exps[k].checked_sub(other.exps[k])?;
        }
        Some(Monomial {
            deg: self.deg - other.deg,
            exps: e,
        })
    }

    fn gcd(&self, other: &Monomial) -> Monomial {
        let mut e = [0; MAX_VARS];
        for k in 0..MAX_VARS {
            e[k] = self.exps[k].min(other.exps[k]);
        }
        Monomial::new(&e)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct MSeries {
    nvars: usize,
    order: u32,
    reliable: u32,
    coeffs: BTreeMap<Monomial, Rat>,
}

/// Decomposition `f = t^monomial · unit_part` with `unit_part(0) != 0`.
#[derive(Clone, Debug)]
pub struct Valuation {
    pub monomial: Vec<u32>,
    pub unit_part: MSeries,
}

/// First coefficient where two series disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub exps: Vec<u32>,
    pub left: Rat,
    pub right: Rat,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "coefficient of {:?}: {} vs {}",
            self.exps, self.left, self.right
        )
    }
}

impl MSeries {
    pub fn zero(nvars: usize, order: u32) -> Self {
        assert!(
            (1..=MAX_VARS).contains(&nvars),
            "unsupported variable count {nvars}"
        );
        MSeries {
            nvars,
            order,
            reliable: order,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, order: u32, c: Rat) -> Self {
        let mut s = MSeries::zero(nvars, order);
        s.set(Monomial::one(), c);
        s
    }

    pub fn one(nvars: usize, order: u32) -> Self {
        MSeries::constant(nvars, order, Rat::one())
    }

    /// The variable `t_idx` (0 = t•, 1 = t∘, 2 = t⊙).
    pub fn var(nvars: usize, order: u32, idx: usize) -> Self {
        assert!(idx < nvars);
        let mut e = [0u32; MAX_VARS];
        e[idx] = 1;
        MSeries::monomial(nvars, order, &e[..nvars], Rat::one())
    }

    pub fn monomial(nvars: usize, order: u32, exps: &[u32], c: Rat) -> Self {
        let mut s = MSeries::zero(nvars, order);
        s.set(Monomial::new(exps), c);
        s
    }

    pub fn from_terms<I>(nvars: usize, order: u32, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, Rat)>,
    {
        let mut s = MSeries::zero(nvars, order);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length");
            let m = Monomial::new(&e);
            let cur = s.coeffs.remove(&m).unwrap_or_else(Rat::zero);
            s.set(m, cur + c);
        }
        s
    }

    /// Parse a polynomial written with variables `tb`, `tw`, `tg`
    /// (for t•, t∘, t⊙), e.g. `"tb + tb*(tb + 2*tw) - 3/2*tb^2"`.
    pub fn parse(nvars: usize, order: u32, src: &str) -> Result<Self> {
        parse::parse_poly(nvars, order, src)
    }

    fn set(&mut self, m: Monomial, c: Rat) {
        if m.deg <= self.order && !c.is_zero() {
            self.coeffs.insert(m, c);
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn reliable(&self) -> u32 {
        self.reliable
    }

    /// Lower the reliable order (never raises it).
    pub fn with_reliable(mut self, reliable: u32) -> Self {
        self.reliable = self.reliable.min(reliable);
        self
    }

    pub fn coeff(&self, exps: &[u32]) -> Rat {
        self.coeffs
            .get(&Monomial::new(exps))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    pub fn constant_term(&self) -> Rat {
        self.coeff(&[])
    }

    /// Nonzero terms in graded order (total degree, then lexicographic exponents).
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rat)> + '_ {
        let n = self.nvars;
        self.coeffs.iter().map(move |(m, c)| (&m.exps[..n], c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Zero up to the reliable order.
    pub fn is_zero_reliably(&self) -> bool {
        self.coeffs.keys().all(|m| m.deg > self.reliable)
    }

    /// Lowest total degree of a reliable nonzero term.
    pub fn min_degree(&self) -> Option<u32> {
        self.coeffs
            .keys()
            .map(|m| m.deg)
            .find(|&d| d <= self.reliable)
    }

    pub fn same_shape(&self, other: &MSeries) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VarMismatch(self.nvars, other.nvars));
        }
        Ok(())
    }

    pub fn zero_like(&self) -> MSeries {
        MSeries::zero(self.nvars, self.order)
    }

    pub fn one_like(&self) -> MSeries {
        MSeries::one(self.nvars, self.order)
    }

    pub fn constant_like(&self, c: Rat) -> MSeries {
        MSeries::constant(self.nvars, self.order, c)
    }

    /// Drop everything above total degree `deg`.
    pub fn truncate(&self, deg: u32) -> MSeries {
        let order = self.order.min(deg);
        MSeries {
            nvars: self.nvars,
            order,
            reliable: self.reliable.min(order),
            coeffs: self
                .coeffs
                .iter()
                .filter(|(m, _)| m.deg <= order)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Same series, only terms up to the reliable order kept.
    pub fn reliable_part(&self) -> MSeries {
        let mut s = self.truncate(self.reliable);
        s.order = self.order;
        s
    }

    pub fn try_add(&self, other: &MSeries) -> Result<MSeries> {
        self.same_shape(other)?;
        let order = self.order.min(other.order);
        let mut out = self.truncate(order);
        out.reliable = self.reliable.min(other.reliable).min(order);
        for (m, c) in &other.coeffs {
            if m.deg > order {
                continue;
            }
            let cur = out.coeffs.remove(m).unwrap_or_else(Rat::zero);
            out.set(*m, cur + c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &MSeries) -> Result<MSeries> {
        self.try_add(&other.neg_ref())
    }

    fn neg_ref(&self) -> MSeries {
        MSeries {
            nvars: self.nvars,
            order: self.order,
            reliable: self.reliable,
            coeffs: self.coeffs.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn try_mul(&self, other: &MSeries) -> Result<MSeries> {
        self.same_shape(other)?;
        let order = self.order.min(other.order);
        let reliable = self.reliable.min(other.reliable).min(order);
        let (da, lhs) = self.integer_terms(order);
        let (db, rhs) = other.integer_terms(order);
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (ma, ca) in &lhs {
            let room = order - ma.deg;
            for (mb, cb) in &rhs {
                if mb.deg > room {
                    break;
                }
                let prod = ca * cb;
                match acc.entry(ma.times(mb)) {
                    Entry::Occupied(mut e) => *e.get_mut() += prod,
                    Entry::Vacant(e) => {
                        e.insert(prod);
                    }
                }
            }
        }
        let den = da * db;
        let coeffs = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (m, Rat::new(c, den.clone())))
            .collect();
        Ok(MSeries {
            nvars: self.nvars,
            order,
            reliable,
            coeffs,
        })
    }

    /// Terms up to `deg` scaled to a common denominator.
    fn integer_terms(&self, deg: u32) -> (BigInt, Vec<(Monomial, BigInt)>) {
        let mut den = BigInt::one();
        for (m, c) in &self.coeffs {
            if m.deg > deg {
                break;
            }
            if !c.denom().is_one() {
                den = den.lcm(c.denom());
            }
        }
        let terms = self
            .coeffs
            .iter()
            .take_while(|(m, _)| m.deg <= deg)
            .map(|(m, c)| (*m, c.numer() * (&den / c.denom())))
            .collect();
        (den, terms)
    }

    /// Substitute series for the variables: `Σ c_m Π vals[k]^{m_k}`.
    pub fn substitute(&self, vals: &[MSeries]) -> Result<MSeries> {
        if vals.len() != self.nvars {
            return Err(Error::VarMismatch(self.nvars, vals.len()));
        }
        let base = vals[0].clone();
        for v in &vals[1..] {
            base.same_shape(v)?;
        }
        let mut powers: Vec<Vec<MSeries>> = vals
            .iter()
            .map(|v| vec![v.one_like().with_reliable(v.reliable)])
            .collect();
        for (k, v) in vals.iter().enumerate() {
            let top = self.coeffs.keys().map(|m| m.exps[k]).max().unwrap_or(0);
            for _ in 0..top {
                let next = powers[k].last().expect("nonempty") * v;
                powers[k].push(next);
            }
        }
        let mut out = base.zero_like();
        out.reliable = vals.iter().map(|v| v.reliable).min().unwrap_or(out.order);
        let mut grouped: BTreeMap<Vec<u32>, MSeries> = BTreeMap::new();
        // group on all but the last variable to share products
        let last = self.nvars - 1;
        for (m, c) in &self.coeffs {
            let key = m.exps[..last].to_vec();
            let term = powers[last][m.exps[last] as usize].scale(c);
            let slot = grouped.entry(key).or_insert_with(|| out.clone());
            *slot = &*slot + &term;
        }
        for (key, inner) in grouped {
            let mut prod = inner;
            for (k, &e) in key.iter().enumerate() {
                if e > 0 {
                    prod = &prod * &powers[k][e as usize];
                }
            }
            out = &out + &prod;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rat) -> MSeries {
        if c.is_zero() {
            return self.zero_like().with_reliable(self.reliable);
        }
        MSeries {
            nvars: self.nvars,
            order: self.order,
            reliable: self.reliable,
            coeffs: self.coeffs.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> MSeries {
        self.scale(&rat_int(c))
    }

    /// Multiply by a monomial `t^exps`.
    pub fn shift(&self, exps: &[u32]) -> MSeries {
        let m = Monomial::new(exps);
        let mut out = self.zero_like().with_reliable(self.reliable);
        for (k, c) in &self.coeffs {
            out.set(k.times(&m), c.clone());
        }
        out
    }

    /// `self^n` by repeated squaring.
    pub fn pow(&self, mut n: u32) -> MSeries {
        let mut base = self.clone();
        let mut acc = self.one_like().with_reliable(self.reliable);
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `1/f` for a series with nonzero constant term (Newton iteration).
    pub fn inv_unit(&self) -> Result<MSeries> {
        let c0 = self.constant_term();
        if c0.is_zero() {
            return Err(Error::NotAUnit);
        }
        let mut g = self.constant_like(c0.recip());
        let two = self.constant_like(rat_int(2));
        let mut correct = 1u32;
        while correct <= self.order {
            let fg = self * &g;
            g = &g * &(&two - &fg);
            correct = correct.saturating_mul(2);
        }
        g.reliable = self.reliable.min(g.order);
        Ok(g)
    }

    /// Monomial-times-unit decomposition using terms up to the reliable order.
    pub fn valuation(&self) -> Result<Valuation> {
        let mut lead: Option<Monomial> = None;
        for m in self.coeffs.keys().filter(|m| m.deg <= self.reliable) {
            lead = Some(match lead {
                None => *m,
                Some(l) => l.gcd(m),
            });
        }
        let lead = lead.ok_or(Error::DivisionByZero)?;
        if !self.coeffs.contains_key(&lead) {
            return Err(Error::NotMonomialTimesUnit(
                lead.exps[..self.nvars].to_vec(),
            ));
        }
        let mut unit = self.zero_like();
        unit.reliable = self.reliable - lead.deg;
        for (m, c) in self.coeffs.iter().filter(|(m, _)| m.deg <= self.reliable) {
            unit.set(m.divide(&lead).expect("gcd divides"), c.clone());
        }
        Ok(Valuation {
            monomial: lead.exps[..self.nvars].to_vec(),
            unit_part: unit,
        })
    }

    /// Quotient `q` with `q·g = f`, where `g = t^m · u` with `u` a unit.
    ///
    /// `q.reliable = min(f.reliable, g.reliable) - deg(m)`. Any reliable term of
    /// `f` not divisible by `t^m` is reported as [`Error::Divisibility`].
    pub fn exact_div(&self, g: &MSeries) -> Result<MSeries> {
        self.same_shape(g)?;
        let val = g.valuation()?;
        let m = Monomial::new(&val.monomial);
        let base = self.reliable.min(g.reliable);
        if base < m.deg {
            return Err(Error::OrderExhausted {
                needed: m.deg,
                have: base,
            });
        }
        let reliable = base - m.deg;
        let mut reduced = self.zero_like();
        for (k, c) in self.coeffs.iter().filter(|(k, _)| k.deg <= base) {
            match k.divide(&m) {
                Some(q) => reduced.set(q, c.clone()),
                None => {
                    return Err(Error::Divisibility {
                        exps: k.exps[..self.nvars].to_vec(),
                        divisor: val.monomial.clone(),
                    })
                }
            }
        }
        reduced.reliable = reliable;
        let inv = val.unit_part.inv_unit()?;
        let mut q = &reduced * &inv;
        q.coeffs.retain(|k, _| k.deg <= reliable);
        q.reliable = reliable;
        Ok(q)
    }

    /// Square root of a series whose constant term is a positive rational square;
    /// the branch with positive constant term is returned.
    pub fn sqrt_unit(&self) -> Result<MSeries> {
        let c0 = self.constant_term();
        let root = rational_sqrt(&c0).ok_or_else(|| Error::NotASquare(c0.to_string()))?;
        if root.is_zero() {
            return Err(Error::NotASquare(c0.to_string()));
        }
        let mut s = self.constant_like(root);
        let half = rat(1, 2);
        let mut correct = 1u32;
        while correct <= self.order {
            let q = self.exact_div_unit(&s)?;
            s = (&s + &q).scale(&half);
            correct = correct.saturating_mul(2);
        }
        s.reliable = self.reliable.min(s.order);
        Ok(s)
    }

    fn exact_div_unit(&self, u: &MSeries) -> Result<MSeries> {
        Ok(self * &u.inv_unit()?)
    }

    /// Evaluate the stored polynomial at a rational point.
    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.nvars);
        let mut total = Rat::zero();
        for (m, c) in &self.coeffs {
            let mut term = c.clone();
            for (k, x) in point.iter().enumerate() {
                for _ in 0..m.exps[k] {
                    term *= x;
                }
            }
            total += term;
        }
        total
    }

    /// Permute variables: variable `k` of `self` becomes variable `perm[k]`.
    pub fn permute(&self, perm: &[usize]) -> MSeries {
        assert_eq!(perm.len(), self.nvars);
        let mut out = self.zero_like().with_reliable(self.reliable);
        for (m, c) in &self.coeffs {
            let mut e = [0u32; MAX_VARS];
            for k in 0..self.nvars {
                e[perm[k]] = m.exps[k];
            }
            out.set(Monomial::new(&e), c.clone());
        }
        out
    }

    /// Exchange t• and t∘.
    pub fn swap_colors(&self) -> MSeries {
        match self.nvars {
            2 => self.permute(&[1, 0]),
            3 => self.permute(&[1, 0, 2]),
            _ => self.clone(),
        }
    }

    /// Identify all variables with the first one (`t• = t∘ [= t⊙] = t`).
    pub fn collapse(&self) -> MSeries {
        let mut out = self.zero_like().with_reliable(self.reliable);
        for (m, c) in &self.coeffs {
            let mut e = [0u32; MAX_VARS];
            e[0] = m.deg;
            let key = Monomial::new(&e);
            let cur = out.coeffs.remove(&key).unwrap_or_else(Rat::zero);
            out.set(key, cur + c);
        }
        out
    }

    /// First coefficient of total degree `<= upto` where `self` and `other` differ.
    pub fn first_difference(&self, other: &MSeries, upto: u32) -> Option<Mismatch> {
        let keys: std::collections::BTreeSet<&Monomial> = self
            .coeffs
            .keys()
            .chain(other.coeffs.keys())
            .filter(|m| m.deg <= upto)
            .collect();
        for m in keys {
            let a = self.coeffs.get(m).cloned().unwrap_or_else(Rat::zero);
            let b = other.coeffs.get(m).cloned().unwrap_or_else(Rat::zero);
            if a != b {
                return Some(Mismatch {
                    exps: m.exps[..self.nvars].to_vec(),
                    left: a,
                    right: b,
                });
            }
        }
        None
    }

    pub fn agrees_to(&self, other: &MSeries, upto: u32) -> bool {
        self.first_difference(other, upto).is_none()
    }

    /// Compare on the common reliable order.
    pub fn agrees(&self, other: &MSeries) -> bool {
        self.agrees_to(other, self.reliable.min(other.reliable))
    }

    /// True when all reliable coefficients are nonnegative integers.
    pub fn has_nonneg_integer_coeffs(&self) -> bool {
        self.coeffs
            .iter()
            .filter(|(m, _)| m.deg <= self.reliable)
            .all(|(_, c)| c.is_integer() && !c.is_negative())
    }
}

/// Series root with zero constant term of `a2·μ² + a1·μ + a0 = 0`, for `a1` a unit
/// and `a0(0) = 0`, by iterating `μ ← -(a0 + a2·μ²)/a1` from `μ = 0`.
pub fn solve_quadratic_branch(a2: &MSeries, a1: &MSeries, a0: &MSeries) -> Result<MSeries> {
    a2.same_shape(a1)?;
    a2.same_shape(a0)?;
    if !a0.constant_term().is_zero() {
        return Err(Error::NoSeriesRoot);
    }
    let inv = a1.inv_unit()?.neg_ref();
    let order = a2.order.min(a1.order).min(a0.order);
    let mut mu = MSeries::zero(a0.nvars, order);
    for _ in 0..=order {
        mu = &(a0 + &(a2 * &(&mu * &mu))) * &inv;
    }
    mu.reliable = a2.reliable.min(a1.reliable).min(a0.reliable).min(order);
    Ok(mu)
}

fn rational_sqrt(q: &Rat) -> Option<Rat> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(Rat::new(n, d))
    } else {
        None
    }
}

impl fmt::Display for MSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; MAX_VARS] = ["tb", "tw", "tg"];
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.coeffs {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let mut parts: Vec<String> = Vec::new();
            if !abs.is_one() || m.deg == 0 {
                parts.push(abs.to_string());
            }
            for k in 0..self.nvars {
                match m.exps[k] {
                    0 => {}
                    1 => parts.push(NAMES[k].to_string()),
                    e => parts.push(format!("{}^{}", NAMES[k], e)),
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        write!(f, " + O({})", self.order + 1)
    }
}

impl fmt::Debug for MSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [reliable {}]", self, self.reliable)
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $try:ident) => {
        impl<'a> $tr<&'a MSeries> for &'a MSeries {
            type Output = MSeries;
            fn $method(self, rhs: &'a MSeries) -> MSeries {
                self.$try(rhs).expect("series shape mismatch")
            }
        }
        impl $tr<MSeries> for MSeries {
            type Output = MSeries;
            fn $method(self, rhs: MSeries) -> MSeries {
                self.$try(&rhs).expect("series shape mismatch")
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &MSeries {
    type Output = MSeries;
    fn neg(self) -> MSeries {
        self.neg_ref()
    }
}

impl Neg for MSeries {
    type Output = MSeries;
    fn neg(self) -> MSeries {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests;
