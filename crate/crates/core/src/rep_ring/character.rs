//! Class functions on `S_n`: the character-side mirror of [`SchurVector`].
//!
//! Nothing here is used to compute representations; it exists to check the
//! Schur-basis arithmetic against an independent route (Murnaghan–Nakayama
//! characters and induction from Young subgroups by cycle splitting).

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::combinatorics::{class_data, partitions_of, CycleType, Partition};
use crate::rational;
use crate::rep_ring::SchurVector;
use crate::Rational;

/// Rational values on the conjugacy classes of `S_n`; absent classes are 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    n: usize,
    values: BTreeMap<CycleType, Rational>,
}

impl ClassFunction {
    pub fn from_fn<F: FnMut(&CycleType) -> Rational>(n: usize, mut f: F) -> Self {
        let mut values = BTreeMap::new();
        for mu in partitions_of(n) {
            let mu = CycleType(mu);
            let v = f(&mu);
            if !v.is_zero() {
                values.insert(mu, v);
            }
        }
        ClassFunction { n, values }
    }

    pub fn trivial(n: usize) -> Self {
        Self::from_fn(n, |_| Rational::one())
    }

    pub fn sign(n: usize) -> Self {
        Self::from_fn(n, |mu| rational::int(sign_of(mu)))
    }

    /// The permutation character of `S_n` on `[n]`.
    pub fn fixed_points(n: usize) -> Self {
        Self::from_fn(n, |mu| rational::int(mu.partition().multiplicities().get(1).copied().unwrap_or(0) as i64))
    }

    pub fn irreducible(lambda: &Partition) -> Self {
        Self::from_fn(lambda.n(), |mu| mn_character(lambda, mu))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn value(&self, mu: &CycleType) -> Rational {
        self.values.get(mu).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn values(&self) -> impl Iterator<Item = (&CycleType, &Rational)> {
        self.values.iter()
    }

    /// `⟨f, g⟩ = Σ_μ f(μ) g(μ) / z_μ` (characters here are real-valued).
    pub fn inner(&self, other: &ClassFunction) -> Rational {
        assert_eq!(self.n, other.n);
        self.values
            .iter()
            .map(|(mu, f)| {
                let (z, _) = class_data(mu);
                f * other.value(mu) / rational::int(z as i64)
            })
            .sum()
    }

    /// Pointwise product, i.e. the character of the tensor product.
    pub fn tensor(&self, other: &ClassFunction) -> ClassFunction {
        assert_eq!(self.n, other.n);
        ClassFunction::from_fn(self.n, |mu| self.value(mu) * other.value(mu))
    }

    pub fn add(&self, other: &ClassFunction) -> ClassFunction {
        assert_eq!(self.n, other.n);
        ClassFunction::from_fn(self.n, |mu| self.value(mu) + other.value(mu))
    }

    pub fn scale(&self, c: &Rational) -> ClassFunction {
        ClassFunction::from_fn(self.n, |mu| self.value(mu) * c)
    }

    /// Character of `Ind_{S_a × S_b}^{S_{a+b}}(self ⊠ other)`.
    ///
    /// The value at cycle type `μ` sums, over every way of splitting the cycles
    /// of `μ` into a cycle type `α` of `S_a` and `β` of `S_b`, the quantity
    /// `z_μ · f(α) g(β) / (z_α z_β)`.
    pub fn induced_product(&self, other: &ClassFunction) -> ClassFunction {
        let (a, b) = (self.n, other.n);
        ClassFunction::from_fn(a + b, |mu| {
            let mult = mu.partition().multiplicities();
            let (z_mu, _) = class_data(mu);
            let mut total = Rational::zero();
            let mut split = vec![0usize; mult.len()];
            loop {
                let mut left = Vec::new();
                let mut right = Vec::new();
                for (len, (&m, &k)) in mult.iter().zip(&split).enumerate().skip(1) {
                    left.extend(std::iter::repeat_n(len, k));
                    right.extend(std::iter::repeat_n(len, m - k));
                }
                if left.iter().sum::<usize>() == a {
                    let alpha = CycleType(Partition::from_unsorted(left));
                    let beta = CycleType(Partition::from_unsorted(right));
                    let fa = self.value(&alpha);
                    let gb = other.value(&beta);
                    if !fa.is_zero() && !gb.is_zero() {
                        let (za, _) = class_data(&alpha);
                        let (zb, _) = class_data(&beta);
                        total += fa * gb * rational::int(z_mu as i64)
                            / rational::int((za * zb) as i64);
                    }
                }
                // odometer over 0 ≤ split[i] ≤ mult[i]
                let mut i = 1;
                while i < mult.len() && split[i] == mult[i] {
                    split[i] = 0;
                    i += 1;
                }
                if i >= mult.len() {
                    break;
                }
                split[i] += 1;
            }
            total
        })
    }
}

/// Sign of a permutation with cycle type `μ`.
pub fn sign_of(mu: &CycleType) -> i64 {
    if (mu.n() - mu.partition().len()).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Irreducible character value `χ^λ(μ)` by the Murnaghan–Nakayama rule.
///
/// Rim hooks are removed on the beta-set (abacus) of `λ`: removing a rim
/// hook of length `r` moves a bead from `b` to an empty position `b - r`, with
/// sign `(-1)^{beads strictly between}`.
pub fn mn_character(lambda: &Partition, mu: &CycleType) -> Rational {
    assert_eq!(lambda.n(), mu.n(), "χ^λ(μ) needs |λ| = |μ|");
    let len = lambda.len();
    let mut beads: Vec<usize> = (0..len).map(|i| lambda.part(i) + len - 1 - i).collect();
    beads.reverse();
    rational::int(mn_beads(&mut beads, mu.partition().parts()))
}

fn mn_beads(beads: &mut Vec<usize>, cycles: &[usize]) -> i64 {
    let Some((&r, rest)) = cycles.split_first() else {
        return 1;
    };
    let mut total = 0;
    for idx in 0..beads.len() {
        let b = beads[idx];
        if b < r || beads.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let between = beads.iter().filter(|&&x| x > target && x < b).count();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        let saved = beads.clone();
        beads[idx] = target;
        beads.sort_unstable();
        total += sign * mn_beads(beads, rest);
        *beads = saved;
    }
    total
}

pub fn to_class_function(v: &SchurVector) -> ClassFunction {
    ClassFunction::from_fn(v.n(), |mu| {
        v.terms().map(|(lambda, c)| c * mn_character(lambda, mu)).sum()
    })
}

/// Multiplicities `⟨f, χ^λ⟩`, together with the partitions whose multiplicity
/// is not an integer (nonempty only when `f` is not a virtual character).
pub fn decompose_reporting(f: &ClassFunction) -> (SchurVector, Vec<Partition>) {
    let mut v = SchurVector::zero(f.n());
    let mut non_integral = Vec::new();
    for lambda in partitions_of(f.n()) {
        let chi = ClassFunction::irreducible(&lambda);
        let m = f.inner(&chi);
        if !m.is_integer() {
            non_integral.push(lambda.clone());
        }
        v.add_term(lambda, m);
    }
    (v, non_integral)
}

pub fn decompose(f: &ClassFunction) -> SchurVector {
    decompose_reporting(f).0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn ct(v: &[usize]) -> CycleType {
        CycleType(p(v))
    }

    #[test]
    fn mn_examples() {
        for n in 1..=6 {
            for mu in partitions_of(n) {
                assert_eq!(mn_character(&Partition::row(n), &CycleType(mu)), Rational::one());
            }
        }
        assert_eq!(mn_character(&p(&[1, 1]), &ct(&[2])), rational::int(-1));
        assert_eq!(mn_character(&p(&[2, 1]), &ct(&[1, 1, 1])), rational::int(2));
        assert_eq!(mn_character(&p(&[2, 1]), &ct(&[3])), rational::int(-1));
        assert_eq!(mn_character(&p(&[2, 2]), &ct(&[2, 2])), rational::int(2));
    }

    #[test]
    fn column_is_sign() {
        for n in 1..=6 {
            assert_eq!(ClassFunction::irreducible(&Partition::column(n)), ClassFunction::sign(n));
        }
    }

    #[test]
    fn orthonormality() {
        for n in 0..=7 {
            let chars: Vec<_> = partitions_of(n).iter().map(ClassFunction::irreducible).collect();
            for (i, a) in chars.iter().enumerate() {
                for (j, b) in chars.iter().enumerate() {
                    let expect = if i == j { Rational::one() } else { Rational::zero() };
                    assert_eq!(a.inner(b), expect, "n={n} i={i} j={j}");
                }
            }
        }
    }

    #[test]
    fn permutation_character() {
        for n in 3..=5 {
            let v = decompose(&ClassFunction::fixed_points(n));
            let expect = &SchurVector::h(n) + &SchurVector::basis(p(&[n - 1, 1]));
            assert_eq!(v, expect);
        }
        assert_eq!(decompose(&ClassFunction::trivial(4)), SchurVector::h(4));
    }

    #[test]
    fn non_integral_is_reported() {
        let f = ClassFunction::trivial(3).scale(&Rational::new(1.into(), 2.into()));
        let (v, bad) = decompose_reporting(&f);
        assert_eq!(bad, vec![Partition::row(3)]);
        assert_eq!(v.coeff(&Partition::row(3)), Rational::new(1.into(), 2.into()));
    }

    #[test]
    fn induced_permutation_module() {
        // Ind_{S_1×S_2}^{S_3}(1) is the permutation module on [3].
        let f = ClassFunction::trivial(1).induced_product(&ClassFunction::trivial(2));
        assert_eq!(f, ClassFunction::fixed_points(3));
    }
}
