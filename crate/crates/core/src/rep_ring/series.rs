//! Truncated elements of `R[t]`, where `R` is the completed representation
//! ring `⊕_n R(S_n)` with the induction product.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::Error;
use crate::rep_ring::SchurVector;

/// `Σ_{n ≤ N} Σ_j v_{n,j} t^j` with `v_{n,j} ∈ R(S_n)`; terms above degree
/// `N` are dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepSeries {
    truncation: usize,
    terms: BTreeMap<(usize, usize), SchurVector>,
}

#[derive(Serialize, Deserialize)]
struct SeriesCell {
    n: usize,
    t_power: usize,
    schur_vector: Value,
}

impl RepSeries {
    pub fn new(truncation: usize) -> Self {
        RepSeries { truncation, terms: BTreeMap::new() }
    }

    pub fn one(truncation: usize) -> Self {
        let mut s = Self::new(truncation);
        s.add(0, SchurVector::unit());
        s
    }

    /// `Σ_{n≥0} h_n`, the sum of all trivial modules.
    pub fn all_trivial(truncation: usize) -> Self {
        let mut s = Self::new(truncation);
        for n in 0..=truncation {
            s.add(0, SchurVector::h(n));
        }
        s
    }

    /// `1 + Σ_{n≥2 even} h_n`.
    pub fn even_trivial(truncation: usize) -> Self {
        let mut s = Self::one(truncation);
        for n in (2..=truncation).step_by(2) {
            s.add(0, SchurVector::h(n));
        }
        s
    }

    /// `1 + Σ_{n≥2 even} e_n t^{n/2}`.
    pub fn even_sign_t(truncation: usize) -> Self {
        let mut s = Self::one(truncation);
        for n in (2..=truncation).step_by(2) {
            s.add(n / 2, SchurVector::e(n));
        }
        s
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    /// Adds `v · t^t_power` in degree `v.n()`; ignored above the truncation.
    pub fn add(&mut self, t_power: usize, v: SchurVector) {
        let n = v.n();
        if n > self.truncation || v.is_zero() {
            return;
        }
        let key = (n, t_power);
        match self.terms.get_mut(&key) {
            Some(cur) => {
                *cur += &v;
                if cur.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, v);
            }
        }
    }

    pub fn get(&self, n: usize, t_power: usize) -> SchurVector {
        self.terms.get(&(n, t_power)).cloned().unwrap_or_else(|| SchurVector::zero(n))
    }

    pub fn cells(&self) -> impl Iterator<Item = (&(usize, usize), &SchurVector)> {
        self.terms.iter()
    }

    /// The degree-`n` part as a map `t_power → coefficient`.
    pub fn degree(&self, n: usize) -> BTreeMap<usize, SchurVector> {
        self.terms
            .range((n, 0)..=(n, usize::MAX))
            .map(|(&(_, j), v)| (j, v.clone()))
            .collect()
    }

    /// Sum over `t`-powers of the degree-`n` part, i.e. the value at `t = 1`.
    pub fn at_t_one(&self, n: usize) -> SchurVector {
        let mut v = SchurVector::zero(n);
        for (_, c) in self.degree(n) {
            v += &c;
        }
        v
    }

    pub fn multiply(&self, other: &RepSeries) -> RepSeries {
        let truncation = self.truncation.min(other.truncation);
        let mut out = RepSeries::new(truncation);
        for (&(n1, j1), a) in &self.terms {
            for (&(n2, j2), b) in &other.terms {
                if n1 + n2 <= truncation {
                    out.add(j1 + j2, a.product(b));
                }
            }
        }
        out
    }

    /// Multiplicative inverse up to the truncation.
    ///
    /// Requires the degree-0 part to be exactly `1` (no `t` terms). With
    /// `a = 1 + a'`, the inverse `b` satisfies `b_n = -Σ_{k≥1} a'_k b_{n-k}`.
    pub fn invert(&self) -> Result<RepSeries, Error> {
        let constant = self.degree(0);
        if constant.len() != 1 || constant.get(&0) != Some(&SchurVector::unit()) {
            return Err(Error::NonUnitConstant);
        }
        let mut inv = RepSeries::one(self.truncation);
        for n in 1..=self.truncation {
            let mut cell: BTreeMap<usize, SchurVector> = BTreeMap::new();
            for k in 1..=n {
                for (ja, a) in self.degree(k) {
                    for (jb, b) in inv.degree(n - k) {
                        let prod = a.product(&b);
                        *cell.entry(ja + jb).or_insert_with(|| SchurVector::zero(n)) -= &prod;
                    }
                }
            }
            for (j, v) in cell {
                inv.add(j, v);
            }
        }
        Ok(inv)
    }

    pub fn to_json(&self) -> Value {
        let cells: Vec<SeriesCell> = self
            .terms
            .iter()
            .map(|(&(n, t_power), v)| SeriesCell { n, t_power, schur_vector: v.to_json() })
            .collect();
        serde_json::to_value(cells).expect("serializable")
    }

    pub fn from_json(truncation: usize, value: &Value) -> Result<Self, Error> {
        let cells: Vec<SeriesCell> = serde_json::from_value(value.clone())?;
        let mut s = RepSeries::new(truncation);
        for c in cells {
            s.add(c.t_power, SchurVector::from_json(c.n, &c.schur_vector)?);
        }
        Ok(s)
    }
}

/// `true` when both series agree in every cell up to the smaller truncation.
pub fn agree_through(a: &RepSeries, b: &RepSeries, degree: usize) -> bool {
    (0..=degree).all(|n| a.degree(n) == b.degree(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_inverse() {
        let a = RepSeries::even_sign_t(4);
        let inv = a.invert().unwrap();
        assert_eq!(inv.degree(2), BTreeMap::from([(1, -&SchurVector::e(2))]));
        // e_2·e_2 − e_4
        let expected = SchurVector::from_int_terms(4, &[(&[2, 2], 1), (&[2, 1, 1], 1)]);
        assert_eq!(inv.get(4, 2), expected);
        assert!(inv.get(4, 1).is_zero());
    }

    #[test]
    fn inverse_of_all_trivial() {
        let a = RepSeries::all_trivial(8);
        let prod = a.multiply(&a.invert().unwrap());
        assert_eq!(prod, RepSeries::one(8));
    }

    #[test]
    fn rejects_bad_constant() {
        let mut a = RepSeries::new(3);
        a.add(0, SchurVector::h(1));
        assert!(matches!(a.invert(), Err(Error::NonUnitConstant)));
        let mut b = RepSeries::one(3);
        b.add(1, SchurVector::unit());
        assert!(b.invert().is_err());
    }

    #[test]
    fn json_round_trip() {
        let s = RepSeries::even_sign_t(4).invert().unwrap();
        let j = s.to_json();
        assert_eq!(RepSeries::from_json(4, &j).unwrap(), s);
        assert_eq!(j[0]["n"], 0);
        assert_eq!(j[0]["t_power"], 0);
    }
}
