//! Betti numbers and graded `S_n`-representations on `H^i(T_n(R), Q)`.
//!
//! Two independent pipelines produce `H^i` as an element of `R(S_n)`:
//!
//! * [`rep_via_induction`]: the signed sum over compositions of `2i` into even
//!   parts `n_1, …, n_m` of `(-1)^{i+m} e_{n_1} ⋯ e_{n_m} h_{n-2i}`, pure Pieri
//!   arithmetic;
//! * [`rep_via_poset`]: the sign-twisted top homology of `B_{2i}^ev`, from the
//!   order complex and the Hopf trace formula, induced up with `h_{n-2i}`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinatorics::{binomial, factorial, factorial_big, partitions_of, secant_numbers};
use crate::error::Error;
use crate::poset_homology::{top_homology_rep, BRUTE_FORCE_LIMIT};
use crate::rep_ring::{RepSeries, SchurVector};
use crate::{Discrepancy, Rational};

/// Largest `n` accepted by the closed-form routes.
pub const FORMULA_LIMIT: usize = 12;

/// `dim H^i = A_{2i} · C(n, 2i)`, zero when `2i > n`.
pub fn betti(n: usize, i: usize) -> BigInt {
    if 2 * i > n {
        return BigInt::zero();
    }
    let a = secant_numbers(2 * i).pop().expect("A_{2i}");
    a * BigInt::from(binomial(n, 2 * i))
}

/// Compositions of `total` into even parts `≥ 2`.
pub fn even_compositions(total: usize) -> Vec<Vec<usize>> {
    if total == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (2..=total).step_by(2) {
        for mut rest in even_compositions(total - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn sign(exp: usize) -> Rational {
    if exp.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Signed induction formula, summing over ordered tuples of even parts.
pub fn rep_via_induction(n: usize, i: usize) -> SchurVector {
    if 2 * i > n {
        return SchurVector::zero(n);
    }
    let mut total = SchurVector::zero(n);
    for parts in even_compositions(2 * i) {
        let term = parts
            .iter()
            .fold(SchurVector::unit(), |v, &k| v.pieri_e(k))
            .pieri_h(n - 2 * i);
        total.add_scaled(&term, &sign(i + parts.len()));
    }
    total
}

/// Same sum with the commuting `e`-factors collected: one term per partition
/// of `i`, weighted by the number of its distinct orderings.
pub fn rep_via_induction_multiset(n: usize, i: usize) -> SchurVector {
    if 2 * i > n {
        return SchurVector::zero(n);
    }
    let mut total = SchurVector::zero(n);
    for halves in partitions_of(i) {
        let m = halves.len();
        let orderings = factorial(m)
            / halves.multiplicities().iter().map(|&k| factorial(k)).product::<u64>();
        let term = halves
            .parts()
            .iter()
            .fold(SchurVector::unit(), |v, &k| v.pieri_e(2 * k))
            .pieri_h(n - 2 * i);
        let weight = sign(i + m) * Rational::from_integer(BigInt::from(orderings));
        total.add_scaled(&term, &weight);
    }
    total
}

/// Induced, sign-twisted top homology of `B_{2i}^ev`.
pub fn rep_via_poset(n: usize, i: usize) -> Result<SchurVector, Error> {
    if 2 * i > n {
        return Ok(SchurVector::zero(n));
    }
    if 2 * i > BRUTE_FORCE_LIMIT {
        return Err(Error::OutOfBound { what: "2i", value: 2 * i, limit: BRUTE_FORCE_LIMIT });
    }
    Ok(top_homology_rep(2 * i)?.omega().pieri_h(n - 2 * i))
}

/// One row of a [`CohomologyTable`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyRow {
    pub betti: BigInt,
    pub rep: SchurVector,
}

/// `H^i(T_n(R), Q)` for every `i ≤ n/2`, from the induction formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyTable {
    pub n: usize,
    pub rows: BTreeMap<usize, CohomologyRow>,
}

impl CohomologyTable {
    pub fn build(n: usize) -> Result<Self, Error> {
        if n > FORMULA_LIMIT {
            return Err(Error::OutOfBound { what: "n", value: n, limit: FORMULA_LIMIT });
        }
        let rows = (0..=n / 2)
            .map(|i| (i, CohomologyRow { betti: betti(n, i), rep: rep_via_induction(n, i) }))
            .collect();
        Ok(CohomologyTable { n, rows })
    }

    /// Rows whose Betti number differs from the dimension of the representation.
    pub fn inconsistent_rows(&self) -> Vec<usize> {
        self.rows
            .iter()
            .filter(|(_, r)| Rational::from_integer(r.betti.clone()) != r.rep.dimension())
            .map(|(&i, _)| i)
            .collect()
    }
}

/// Left side `1 + Σ_{n≥1} Σ_i H^i (-t)^i`, with `H^i` from the poset route.
pub fn generating_series_from_poset(max_degree: usize) -> Result<RepSeries, Error> {
    let mut s = RepSeries::one(max_degree);
    for n in 1..=max_degree {
        for i in 0..=n / 2 {
            s.add(i, rep_via_poset(n, i)?.scale(&sign(i)));
        }
    }
    Ok(s)
}

/// Right side `(Σ_n h_n)(1 + Σ_{n≥2 even} e_n t^{n/2})^{-1}`.
pub fn generating_series_closed_form(max_degree: usize) -> Result<RepSeries, Error> {
    let inverse = RepSeries::even_sign_t(max_degree).invert()?;
    Ok(RepSeries::all_trivial(max_degree).multiply(&inverse))
}

/// First `(n, t-power)` cell where the two sides differ, if any.
pub fn generating_identity_first_mismatch(max_degree: usize) -> Result<Option<Discrepancy>, Error> {
    if max_degree > BRUTE_FORCE_LIMIT {
        return Err(Error::OutOfBound { what: "N", value: max_degree, limit: BRUTE_FORCE_LIMIT });
    }
    let left = generating_series_from_poset(max_degree)?;
    let right = generating_series_closed_form(max_degree)?;
    for n in 0..=max_degree {
        let (l, r) = (left.degree(n), right.degree(n));
        let powers: std::collections::BTreeSet<usize> = l.keys().chain(r.keys()).copied().collect();
        for j in powers {
            let (a, b) = (left.get(n, j), right.get(n, j));
            if a != b {
                return Ok(Some(Discrepancy::new(format!("n={n}, i={j}"), &a, &b)));
            }
        }
        // value at t = 1 is the alternating sum Σ (-1)^i H^i
        let mut alternating = SchurVector::zero(n);
        for i in 0..=n / 2 {
            alternating.add_scaled(&rep_via_poset(n, i)?, &sign(i));
        }
        if left.at_t_one(n) != alternating || right.at_t_one(n) != alternating {
            return Ok(Some(Discrepancy::new(
                format!("n={n}, t=1"),
                &left.at_t_one(n),
                &right.at_t_one(n),
            )));
        }
    }
    Ok(None)
}

pub fn verify_generating_identity(max_degree: usize) -> Result<bool, Error> {
    Ok(generating_identity_first_mismatch(max_degree)?.is_none())
}

/// Coefficients of `t^i x^n / n!` in `exp(x) · sech(t^{1/2} x)`, computed by
/// exact series arithmetic with `sech = 1 / cosh`.
pub fn exp_sech_coefficients(max_degree: usize) -> BTreeMap<(usize, usize), BigInt> {
    let half = max_degree / 2;
    // sech(u) = Σ_k s_k u^{2k}
    let cosh: Vec<Rational> = (0..=half).map(|k| Rational::new(BigInt::one(), factorial_big(2 * k))).collect();
    let mut sech: Vec<Rational> = Vec::with_capacity(half + 1);
    for k in 0..=half {
        let mut acc = if k == 0 { Rational::one() } else { Rational::zero() };
        for j in 1..=k {
            acc -= &cosh[j] * &sech[k - j];
        }
        sech.push(acc);
    }
    let mut out = BTreeMap::new();
    for n in 0..=max_degree {
        for (i, coeff) in sech.iter().enumerate().take(n / 2 + 1) {
            let c = coeff / Rational::from_integer(factorial_big(n - 2 * i));
            let scaled = c * Rational::from_integer(factorial_big(n));
            assert!(scaled.is_integer());
            out.insert((n, i), scaled.to_integer());
        }
    }
    out
}

/// One coefficient of the dimension specialization of the generating series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentialRow {
    pub n: usize,
    pub i: usize,
    /// `(-1)^i dim H^i` from the poset-route representation.
    pub from_representation: BigInt,
    /// Coefficient of `t^i x^n/n!` in `exp(x) sech(t^{1/2} x)`.
    pub from_series: BigInt,
    /// `(-1)^i A_{2i} C(n, 2i)`.
    pub formula: BigInt,
}

impl ExponentialRow {
    pub fn agrees(&self) -> bool {
        self.from_representation == self.from_series && self.from_series == self.formula
    }
}

/// Applies `V ↦ dim V` to the poset-route generating series and compares
/// against `exp(x)·sech(t^{1/2} x)` and the Betti formula.
pub fn exponential_specialization(max_degree: usize) -> Result<Vec<ExponentialRow>, Error> {
    let left = generating_series_from_poset(max_degree)?;
    let series = exp_sech_coefficients(max_degree);
    let mut rows = Vec::new();
    for n in 0..=max_degree {
        for i in 0..=n / 2 {
            let dim = left.get(n, i).dimension();
            assert!(dim.is_integer());
            let s = if i % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            rows.push(ExponentialRow {
                n,
                i,
                from_representation: dim.to_integer(),
                from_series: series[&(n, i)].clone(),
                formula: s * betti(n, i),
            });
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational;

    #[test]
    fn betti_examples() {
        for n in 1..=10 {
            assert_eq!(betti(n, 0), BigInt::one());
            assert_eq!(betti(n, 1), BigInt::from(binomial(n, 2)));
        }
        assert_eq!(betti(4, 2), BigInt::from(5));
        assert_eq!(betti(6, 3), BigInt::from(61));
        assert_eq!(betti(5, 3), BigInt::zero());
    }

    #[test]
    fn compositions() {
        assert_eq!(even_compositions(4), vec![vec![2, 2], vec![4]]);
        assert_eq!(even_compositions(6).len(), 4);
    }

    #[test]
    fn induction_examples() {
        for n in 1..=6 {
            assert_eq!(rep_via_induction(n, 0), SchurVector::h(n));
        }
        assert_eq!(
            rep_via_induction(4, 2),
            SchurVector::from_int_terms(4, &[(&[2, 2], 1), (&[2, 1, 1], 1)])
        );
        let r41 = rep_via_induction(4, 1);
        assert_eq!(r41, SchurVector::from_int_terms(4, &[(&[3, 1], 1), (&[2, 1, 1], 1)]));
        assert_eq!(r41.dimension(), rational::int(6));
        assert!(rep_via_induction(3, 2).is_zero());
    }

    #[test]
    fn multiset_route_agrees() {
        for n in 0..=10 {
            for i in 0..=n / 2 {
                assert_eq!(rep_via_induction(n, i), rep_via_induction_multiset(n, i));
            }
        }
    }

    #[test]
    fn poset_examples() {
        assert_eq!(rep_via_poset(4, 0).unwrap(), SchurVector::h(4));
        assert_eq!(
            rep_via_poset(4, 2).unwrap(),
            SchurVector::from_int_terms(4, &[(&[2, 2], 1), (&[2, 1, 1], 1)])
        );
        assert_eq!(rep_via_poset(5, 1).unwrap(), SchurVector::e(2).pieri_h(3));
        assert!(rep_via_poset(12, 5).is_err());
    }

    #[test]
    fn circle_is_sign() {
        assert_eq!(rep_via_induction(2, 1), SchurVector::e(2));
    }

    #[test]
    fn table_rows_consistent() {
        let t = CohomologyTable::build(8).unwrap();
        assert!(t.inconsistent_rows().is_empty());
        assert_eq!(t.rows.len(), 5);
        assert!(CohomologyTable::build(13).is_err());
    }

    #[test]
    fn generating_identity_small() {
        assert!(verify_generating_identity(4).unwrap());
        let right = generating_series_closed_form(1).unwrap();
        assert_eq!(right.get(1, 0), SchurVector::h(1));
    }

    #[test]
    fn exponential_rows() {
        let rows = exponential_specialization(4).unwrap();
        assert!(rows.iter().all(ExponentialRow::agrees));
        let at = |n, i| rows.iter().find(|r| r.n == n && r.i == i).unwrap().formula.clone();
        assert_eq!(at(2, 1), BigInt::from(-1));
        assert_eq!(at(4, 2), BigInt::from(5));
        for n in 0..=4 {
            assert_eq!(at(n, 0), BigInt::one());
        }
    }
}
