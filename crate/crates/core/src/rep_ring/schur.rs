//! Virtual representations of `S_n` in the Schur (irreducible) basis.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::combinatorics::{partitions_of, Partition};
use crate::error::Error;
use crate::rational;
use crate::Rational;

/// A rational combination of irreducible classes `s_λ`, all with `|λ| = n`.
///
/// Zero coefficients are never stored, and iteration follows the canonical
/// partition order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SchurVector {
    n: usize,
    coeffs: BTreeMap<Partition, Rational>,
}

impl SchurVector {
    pub fn zero(n: usize) -> Self {
        SchurVector { n, coeffs: BTreeMap::new() }
    }

    /// The class of the trivial module of `S_0`, the unit of the ring.
    pub fn unit() -> Self {
        Self::basis(Partition::empty())
    }

    pub fn basis(lambda: Partition) -> Self {
        Self::basis_scaled(lambda, Rational::one())
    }

    pub fn basis_scaled(lambda: Partition, c: Rational) -> Self {
        let mut v = Self::zero(lambda.n());
        v.add_term(lambda, c);
        v
    }

    /// `h_k = s_{(k)}`, the trivial module of `S_k`.
    pub fn h(k: usize) -> Self {
        Self::basis(Partition::row(k))
    }

    /// `e_k = s_{(1^k)}`, the sign module of `S_k`.
    pub fn e(k: usize) -> Self {
        Self::basis(Partition::column(k))
    }

    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (Partition, Rational)>,
    {
        let mut v = Self::zero(n);
        for (lambda, c) in terms {
            if lambda.n() != n {
                return Err(Error::DegreeMismatch { expected: n, found: lambda.n() });
            }
            v.add_term(lambda, c);
        }
        Ok(v)
    }

    /// Convenience constructor from integer-coefficient terms; panics on a
    /// malformed partition.
    pub fn from_int_terms(n: usize, terms: &[(&[usize], i64)]) -> Self {
        let terms = terms
            .iter()
            .map(|(p, c)| (Partition::new(p.to_vec()).expect("valid partition"), rational::int(*c)));
        Self::from_terms(n, terms).expect("consistent degree")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.coeffs.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, lambda: Partition, c: Rational) {
        assert_eq!(lambda.n(), self.n, "partition {lambda} has the wrong degree");
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(lambda) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &SchurVector, c: &Rational) {
        if other.is_zero() || c.is_zero() {
            return;
        }
        assert_eq!(self.n, other.n, "degree mismatch in SchurVector sum");
        for (lambda, x) in &other.coeffs {
            self.add_term(lambda.clone(), x * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> SchurVector {
        let mut v = SchurVector::zero(self.n);
        v.add_scaled(self, c);
        v
    }

    /// `Σ c_λ · dim V_λ`.
    pub fn dimension(&self) -> Rational {
        self.coeffs
            .iter()
            .map(|(lambda, c)| c * Rational::from_integer(lambda.dimension()))
            .sum()
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer())
    }

    /// Every multiplicity is a nonnegative integer, i.e. an honest module.
    pub fn is_module(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer() && !c.is_negative())
    }

    /// Sign twist `V ↦ V ⊗ ε`, sending `s_λ` to `s_{λ'}`.
    pub fn omega(&self) -> SchurVector {
        let mut v = SchurVector::zero(self.n);
        for (lambda, c) in &self.coeffs {
            v.add_term(lambda.conjugate(), c.clone());
        }
        v
    }

    /// Restriction from `S_n` to `S_{n-1}`: remove one corner box.
    pub fn restrict(&self) -> SchurVector {
        assert!(self.n >= 1, "cannot restrict a degree-0 class");
        let mut v = SchurVector::zero(self.n - 1);
        for (lambda, c) in &self.coeffs {
            let parts = lambda.parts();
            for i in 0..parts.len() {
                if parts[i] > lambda.part(i + 1) {
                    let mut mu = parts.to_vec();
                    mu[i] -= 1;
                    v.add_term(Partition::from_unsorted(mu), c.clone());
                }
            }
        }
        v
    }

    /// Product with `h_k` (induction with the trivial module of `S_k`), by
    /// adding horizontal strips of size `k`.
    pub fn pieri_h(&self, k: usize) -> SchurVector {
        let mut v = SchurVector::zero(self.n + k);
        for (lambda, c) in &self.coeffs {
            for mu in horizontal_strips(lambda, k) {
                v.add_term(mu, c.clone());
            }
        }
        v
    }

    /// Product with `e_k` (induction with the sign module of `S_k`), by adding
    /// vertical strips of size `k`.
    pub fn pieri_e(&self, k: usize) -> SchurVector {
        let mut v = SchurVector::zero(self.n + k);
        for (lambda, c) in &self.coeffs {
            for mu in vertical_strips(lambda, k) {
                v.add_term(mu, c.clone());
            }
        }
        v
    }

    /// Multiplication by the class `h_{α_1} h_{α_2} ⋯`.
    pub fn pieri_h_all(&self, alpha: &[usize]) -> SchurVector {
        alpha.iter().fold(self.clone(), |v, &k| v.pieri_h(k))
    }

    /// Induction product. When either factor is a single `h_k` or `e_k` this is
    /// one Pieri step; otherwise the right factor is expanded in products of
    /// `h`'s, which is slow for large degrees.
    pub fn product(&self, other: &SchurVector) -> SchurVector {
        if let Some(v) = self.single_pieri_product(other) {
            return v;
        }
        if let Some(v) = other.single_pieri_product(self) {
            return v;
        }
        let mut out = SchurVector::zero(self.n + other.n);
        for (lambda, c) in &other.coeffs {
            for (alpha, d) in schur_in_h_basis(lambda) {
                out.add_scaled(&self.pieri_h_all(alpha.parts()), &(c * d));
            }
        }
        out
    }

    /// `self · other` when `other` is a multiple of one `h_k` or `e_k`.
    fn single_pieri_product(&self, other: &SchurVector) -> Option<SchurVector> {
        if other.coeffs.len() != 1 {
            return None;
        }
        let (lambda, c) = other.coeffs.iter().next()?;
        let k = lambda.n();
        let v = if lambda.is_row() {
            self.pieri_h(k)
        } else if lambda.is_column() {
            self.pieri_e(k)
        } else {
            return None;
        };
        Some(v.scale(c))
    }
}

/// All `μ ⊇ λ` such that `μ/λ` is a horizontal strip of size `k`.
pub fn horizontal_strips(lambda: &Partition, k: usize) -> Vec<Partition> {
    // Row i of μ lies in [λ_i, λ_{i-1}], row 0 unbounded; at most one new row.
    fn go(lambda: &Partition, row: usize, rest: usize, mu: &mut Vec<usize>, out: &mut Vec<Partition>) {
        let base = lambda.part(row);
        if row == lambda.len() {
            // the new row, bounded by λ_{ℓ-1} (or unbounded if λ is empty)
            let cap = if row == 0 { usize::MAX } else { lambda.part(row - 1) };
            if rest <= cap {
                mu.push(rest);
                out.push(Partition::from_unsorted(mu.clone()));
                mu.pop();
            }
            return;
        }
        let cap = if row == 0 { base + rest } else { lambda.part(row - 1).min(base + rest) };
        for len in base..=cap {
            mu.push(len);
            go(lambda, row + 1, rest - (len - base), mu, out);
            mu.pop();
        }
    }
    let mut out = Vec::new();
    go(lambda, 0, k, &mut Vec::new(), &mut out);
    out
}

/// All `μ ⊇ λ` such that `μ/λ` is a vertical strip of size `k`.
pub fn vertical_strips(lambda: &Partition, k: usize) -> Vec<Partition> {
    // Each of the first ℓ(λ)+k rows gains at most one box.
    fn go(lambda: &Partition, rows: usize, row: usize, rest: usize, mu: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            let mut parts = mu.clone();
            parts.extend((row..lambda.len()).map(|i| lambda.part(i)));
            out.push(Partition::new(parts).expect("vertical strip keeps a partition"));
            return;
        }
        if row == rows || rows - row < rest {
            return;
        }
        let base = lambda.part(row);
        let prev = if row == 0 { usize::MAX } else { mu[row - 1] };
        for add in [1usize, 0] {
            let len = base + add;
            if len <= prev && (len > 0 || add == 1) {
                mu.push(len);
                go(lambda, rows, row + 1, rest - add, mu, out);
                mu.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(lambda, lambda.len() + k, 0, k, &mut Vec::new(), &mut out);
    out
}

/// `s_λ` expanded as `Σ c_α h_α` over partitions `α ⊢ |λ|`.
///
/// `h_α = Σ_λ K_{λα} s_λ` is unitriangular with respect to dominance, and
/// the canonical order is a linear extension of it, so back-substitution in
/// canonical order solves for every `s_λ`.
pub fn schur_in_h_basis(lambda: &Partition) -> Vec<(Partition, Rational)> {
    let n = lambda.n();
    let mut solved: BTreeMap<Partition, BTreeMap<Partition, Rational>> = BTreeMap::new();
    for mu in partitions_of(n) {
        let h_mu = SchurVector::unit().pieri_h_all(mu.parts());
        let mut expansion = BTreeMap::new();
        expansion.insert(mu.clone(), Rational::one());
        for (nu, kostka) in h_mu.terms() {
            if *nu == mu {
                continue;
            }
            let earlier = &solved[nu];
            for (alpha, c) in earlier {
                let entry = expansion.entry(alpha.clone()).or_insert_with(Rational::zero);
                *entry -= kostka * c;
            }
        }
        expansion.retain(|_, c| !c.is_zero());
        let done = mu == *lambda;
        solved.insert(mu, expansion);
        if done {
            break;
        }
    }
    solved.remove(lambda).expect("λ is a partition of n").into_iter().collect()
}

impl Add<&SchurVector> for &SchurVector {
    type Output = SchurVector;
    fn add(self, rhs: &SchurVector) -> SchurVector {
        let mut v = self.clone();
        v += rhs;
        v
    }
}

impl Sub<&SchurVector> for &SchurVector {
    type Output = SchurVector;
    fn sub(self, rhs: &SchurVector) -> SchurVector {
        let mut v = self.clone();
        v -= rhs;
        v
    }
}

impl AddAssign<&SchurVector> for SchurVector {
    fn add_assign(&mut self, rhs: &SchurVector) {
        self.add_scaled(rhs, &Rational::one());
    }
}

impl SubAssign<&SchurVector> for SchurVector {
    fn sub_assign(&mut self, rhs: &SchurVector) {
        self.add_scaled(rhs, &-Rational::one());
    }
}

impl Neg for &SchurVector {
    type Output = SchurVector;
    fn neg(self) -> SchurVector {
        self.scale(&-Rational::one())
    }
}

impl Mul<&SchurVector> for &SchurVector {
    type Output = SchurVector;
    fn mul(self, rhs: &SchurVector) -> SchurVector {
        self.product(rhs)
    }
}

impl fmt::Display for SchurVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (lambda, c)) in self.coeffs.iter().enumerate() {
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if i == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if !mag.is_one() {
                write!(f, "{}·", rational::format(&mag))?;
            }
            write!(f, "s{lambda}")?;
        }
        Ok(())
    }
}

/// One entry of the JSON list form of a [`SchurVector`].
#[derive(Debug, Clone, Serialize, Deserialize)]
struct SchurTerm {
    partition: Partition,
    numerator: Value,
    denominator: Value,
}

impl SchurVector {
    pub fn to_json(&self) -> Value {
        let terms: Vec<SchurTerm> = self
            .coeffs
            .iter()
            .map(|(lambda, c)| SchurTerm {
                partition: lambda.clone(),
                numerator: rational::integer_json(c.numer()),
                denominator: rational::integer_json(c.denom()),
            })
            .collect();
        serde_json::to_value(terms).expect("serializable")
    }

    /// Parses the list form. The degree must be given because the zero vector
    /// is an empty list.
    pub fn from_json(n: usize, value: &Value) -> Result<Self, Error> {
        let terms: Vec<SchurTerm> = serde_json::from_value(value.clone())?;
        let mut v = SchurVector::zero(n);
        for t in terms {
            if t.partition.n() != n {
                return Err(Error::DegreeMismatch { expected: n, found: t.partition.n() });
            }
            let num = rational::integer_from_json(&t.numerator)?;
            let den = rational::integer_from_json(&t.denominator)?;
            if den == BigInt::from(0) {
                return Err(Error::InvalidRational(format!("{num}/0")));
            }
            v.add_term(t.partition, Rational::new(num, den));
        }
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(n: usize, terms: &[(&[usize], i64)]) -> SchurVector {
        SchurVector::from_int_terms(n, terms)
    }

    #[test]
    fn pieri_h_examples() {
        for k in 0..5 {
            assert_eq!(SchurVector::unit().pieri_h(k), SchurVector::h(k));
        }
        assert_eq!(SchurVector::h(1).pieri_h(1), sv(2, &[(&[2], 1), (&[1, 1], 1)]));
        assert_eq!(
            SchurVector::h(2).pieri_h(2),
            sv(4, &[(&[4], 1), (&[3, 1], 1), (&[2, 2], 1)])
        );
    }

    #[test]
    fn pieri_e_examples() {
        for k in 0..5 {
            assert_eq!(SchurVector::unit().pieri_e(k), SchurVector::e(k));
        }
        assert_eq!(
            SchurVector::e(2).pieri_e(2),
            sv(4, &[(&[2, 2], 1), (&[2, 1, 1], 1), (&[1, 1, 1, 1], 1)])
        );
    }

    #[test]
    fn omega_examples() {
        assert_eq!(SchurVector::h(5).omega(), SchurVector::e(5));
        let s21 = sv(3, &[(&[2, 1], 1)]);
        assert_eq!(s21.omega(), s21);
    }

    #[test]
    fn restrict_examples() {
        assert_eq!(SchurVector::h(5).restrict(), SchurVector::h(4));
        assert_eq!(sv(3, &[(&[2, 1], 1)]).restrict(), sv(2, &[(&[2], 1), (&[1, 1], 1)]));
    }

    #[test]
    fn restriction_preserves_dimension() {
        for n in 1..=7 {
            for lambda in partitions_of(n) {
                let v = SchurVector::basis(lambda);
                assert_eq!(v.restrict().dimension(), v.dimension());
            }
        }
    }

    #[test]
    fn h_expansion_inverts_kostka() {
        for n in 0..=6 {
            for lambda in partitions_of(n) {
                let mut v = SchurVector::zero(n);
                for (alpha, c) in schur_in_h_basis(&lambda) {
                    v.add_scaled(&SchurVector::unit().pieri_h_all(alpha.parts()), &c);
                }
                assert_eq!(v, SchurVector::basis(lambda));
            }
        }
    }

    #[test]
    fn general_product_is_commutative() {
        let a = sv(3, &[(&[2, 1], 1)]);
        let b = sv(3, &[(&[2, 1], 2), (&[3], -1)]);
        assert_eq!(&a * &b, &b * &a);
        // s21 · s21 has dimension C(6,3)·2·2 = 80
        assert_eq!((&a * &a).dimension(), rational::int(80));
    }

    #[test]
    fn json_form() {
        let v = sv(2, &[(&[1, 1], -1), (&[2], 3)]);
        let j = v.to_json();
        assert_eq!(
            j,
            serde_json::json!([
                {"partition": [2], "numerator": 3, "denominator": 1},
                {"partition": [1, 1], "numerator": -1, "denominator": 1}
            ])
        );
        assert_eq!(SchurVector::from_json(2, &j).unwrap(), v);
        assert!(SchurVector::from_json(3, &j).is_err());
    }

    #[test]
    fn display() {
        let v = sv(2, &[(&[1, 1], -1), (&[2], 3)]);
        assert_eq!(v.to_string(), "3·s(2) - s(1,1)");
    }
}
