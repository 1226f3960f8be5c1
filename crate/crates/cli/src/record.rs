use bimaps::dimers::DimerPoly;
use bimaps::qseries::Rat;
use bimaps::MSeries;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub exponents: Vec<u32>,
    pub numerator: String,
    pub denominator: String,
}

/// One named series, exact up to total degree `reliable`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesRecord {
    pub name: String,
    pub reliable: u32,
    pub terms: Vec<TermRecord>,
}

impl SeriesRecord {
    /// Terms of degree above `reliable` are dropped.
    pub fn from_series(name: impl Into<String>, s: &MSeries) -> Self {
        let rel = s.reliable();
        let terms = s
            .terms()
            .filter(|(e, _)| e.iter().sum::<u32>() <= rel)
            .map(|(e, c)| TermRecord {
                exponents: e.to_vec(),
                numerator: c.numer().to_string(),
                denominator: c.denom().to_string(),
            })
            .collect();
        SeriesRecord {
            name: name.into(),
            reliable: rel,
            terms,
        }
    }

    /// A dimer polynomial is exact, so `reliable` is its degree.
    pub fn from_dimer(name: impl Into<String>, p: &DimerPoly) -> Self {
        let mut terms: Vec<(Vec<u32>, &BigInt)> = p.terms().map(|((a, b), c)| (vec![*a, *b], c)).collect();
        terms.sort_by(|x, y| (x.0[0] + x.0[1], &x.0).cmp(&(y.0[0] + y.0[1], &y.0)));
        SeriesRecord {
            name: name.into(),
            reliable: p.max_dimers(),
            terms: terms
                .into_iter()
                .map(|(e, c)| TermRecord {
                    exponents: e,
                    numerator: c.to_string(),
                    denominator: "1".into(),
                })
                .collect(),
        }
    }

    /// Series in `nvars` variables with `order = reliable = self.reliable`.
    pub fn to_series(&self, nvars: usize) -> Result<MSeries, CliError> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            if t.exponents.len() != nvars {
                return Err(CliError::Usage(format!("record {}: inconsistent exponent length", self.name)));
            }
            let n: BigInt = t
                .numerator
                .parse()
                .map_err(|_| CliError::Usage(format!("record {}: bad numerator", self.name)))?;
            let d: BigInt = t
                .denominator
                .parse()
                .map_err(|_| CliError::Usage(format!("record {}: bad denominator", self.name)))?;
            if d == BigInt::from(0) {
                return Err(CliError::Usage(format!("record {}: zero denominator", self.name)));
            }
            terms.push((t.exponents.clone(), Rat::new(n, d)));
        }
        Ok(MSeries::from_terms(nvars, self.reliable, terms))
    }
}
