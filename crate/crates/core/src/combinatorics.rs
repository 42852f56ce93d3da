//! Enumerative building blocks: partitions, subsets of `[n]`, subset chains
//! (equivalently ordered set partitions), Euler secant numbers and
//! conjugacy-class data for the symmetric group.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::Rational;

/// An integer partition, stored as its weakly decreasing positive parts.
///
/// `Ord` is the canonical order used everywhere in this crate: reverse
/// lexicographic, so `(n)` comes first and `(1^n)` last among partitions of
/// the same `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self, Error> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts in any order.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(k)`.
    pub fn row(k: usize) -> Self {
        if k == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![k] }
        }
    }

    /// The one-column partition `(1^k)`.
    pub fn column(k: usize) -> Self {
        Partition { parts: vec![1; k] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The size `n` of the partition.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), or 0 beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    pub fn is_row(&self) -> bool {
        self.parts.len() <= 1
    }

    pub fn is_column(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }

    /// `true` if the diagram of `self` sits inside the diagram of `other`.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    /// Multiplicities `m_i` of each part size `i`, indexed from 1.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.part(0) + 1];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }

    /// Dimension of the irreducible module `V_λ`, by the hook-length formula.
    pub fn dimension(&self) -> BigInt {
        let conj = self.conjugate();
        let mut hooks = BigInt::one();
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                let hook = row - j + conj.part(j) - i - 1;
                hooks *= hook;
            }
        }
        factorial_big(self.n()) / hooks
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other.parts.cmp(&self.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self, Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n`, in canonical (reverse lexicographic) order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for first in (1..=rest.min(max)).rev() {
            prefix.push(first);
            go(rest - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn conjugate(lambda: &Partition) -> Partition {
    lambda.conjugate()
}

/// The cycle type of a conjugacy class of `S_n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CycleType(pub Partition);

impl CycleType {
    pub fn new(parts: Vec<usize>) -> Result<Self, Error> {
        Partition::new(parts).map(CycleType)
    }

    pub fn partition(&self) -> &Partition {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    /// A permutation of `{0, …, n-1}` with this cycle type, cycles laid out
    /// on consecutive points.
    pub fn representative(&self) -> Vec<usize> {
        let mut w = Vec::with_capacity(self.n());
        let mut start = 0;
        for &len in self.0.parts() {
            for k in 0..len {
                w.push(start + (k + 1) % len);
            }
            start += len;
        }
        w
    }

    /// Compact label used as a JSON object key, e.g. `"2,1,1"`.
    pub fn key(&self) -> String {
        self.0
            .parts()
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Centralizer order `z_μ = ∏ i^{m_i} m_i!` and class size `n!/z_μ`.
pub fn class_data(mu: &CycleType) -> (u64, u64) {
    let z = mu
        .0
        .multiplicities()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &m)| (i as u64).pow(m as u32) * factorial(m))
        .product::<u64>();
    (z, factorial(mu.n()) / z)
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

pub fn factorial_big(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, j| acc * (n - j) as u64 / (j + 1) as u64)
}

/// Stirling numbers of the second kind, `S(n, k)`.
pub fn stirling2(n: usize, k: usize) -> u64 {
    let mut row = vec![0u64; k + 1];
    row[0] = 1;
    for _ in 0..n {
        for j in (1..=k).rev() {
            row[j] = j as u64 * row[j] + row[j - 1];
        }
        row[0] = 0;
    }
    row[k]
}

/// Number of ordered set partitions of `[n]` into `m` blocks.
pub fn ordered_set_partitions(n: usize, m: usize) -> u64 {
    factorial(m) * stirling2(n, m)
}

/// Euler secant numbers `A_0, A_2, …, A_{max_index}`.
///
/// The Taylor series of `sec(x)` is obtained by exact division of `1` by the
/// cosine series; `A_{2i}` is `(2i)!` times the coefficient of `x^{2i}`.
pub fn secant_numbers(max_index: usize) -> Vec<BigInt> {
    assert!(max_index.is_multiple_of(2), "secant numbers are indexed by even integers");
    let terms = max_index / 2 + 1;
    // Coefficients in the variable y = x^2.
    let cos: Vec<Rational> = (0..terms)
        .map(|k| {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            Rational::new(BigInt::from(sign), factorial_big(2 * k))
        })
        .collect();
    let mut sec: Vec<Rational> = Vec::with_capacity(terms);
    for m in 0..terms {
        let mut acc = if m == 0 { Rational::one() } else { Rational::zero() };
        for k in 1..=m {
            acc -= &cos[k] * &sec[m - k];
        }
        sec.push(acc);
    }
    sec.into_iter()
        .enumerate()
        .map(|(k, c)| {
            let scaled = c * Rational::from_integer(factorial_big(2 * k));
            assert!(scaled.is_integer() && !scaled.is_negative());
            scaled.to_integer()
        })
        .collect()
}

/// A subset of `[n]`, stored as a bitmask (bit `i-1` for element `i`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Subset(pub u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn full(n: usize) -> Self {
        Subset(((1u64 << n) - 1) as u32)
    }

    /// From 1-based elements.
    pub fn from_elements(elements: &[usize]) -> Result<Self, Error> {
        let mut bits = 0u32;
        for &e in elements {
            if e == 0 || e > 31 || bits & (1 << (e - 1)) != 0 {
                return Err(Error::InvalidSubset(elements.to_vec()));
            }
            bits |= 1 << (e - 1);
        }
        Ok(Subset(bits))
    }

    /// Sorted 1-based elements.
    pub fn elements(self) -> Vec<usize> {
        self.indices().map(|i| i + 1).collect()
    }

    /// Sorted 0-based indices.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&i| self.0 & (1 << i) != 0)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains_index(self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn minus(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    /// Image under a permutation given as `w[i] = w(i)` on 0-based indices.
    pub fn permute(self, w: &[usize]) -> Subset {
        Subset(self.indices().fold(0, |acc, i| acc | (1 << w[i])))
    }

    /// All subsets of this one (including empty and itself), ascending bitmask.
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        let full = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full { None } else { Some(((cur | !full).wrapping_add(1)) & full) };
            Some(Subset(cur))
        })
    }
}

impl Serialize for Subset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.elements().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Subset {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Subset::from_elements(&v).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e: Vec<String> = self.elements().iter().map(|x| x.to_string()).collect();
        write!(f, "{{{}}}", e.join(","))
    }
}

/// A strictly descending chain `[n] = K_1 ⊃ K_2 ⊃ … ⊃ K_{m+1} = ∅`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Subset>", into = "Vec<Subset>")]
pub struct SubsetChain {
    blocks: Vec<Subset>,
}

impl SubsetChain {
    /// Validates the chain. `n` is inferred from the first block, which must be
    /// `{1, …, n}`.
    pub fn new(blocks: Vec<Subset>) -> Result<Self, Error> {
        let invalid = || Error::InvalidChain(blocks.iter().map(|b| b.elements()).collect());
        let first = *blocks.first().ok_or_else(invalid)?;
        let n = first.len();
        if first != Subset::full(n) || blocks.last() != Some(&Subset::EMPTY) {
            return Err(invalid());
        }
        if n >= 1 && blocks.len() < 2 {
            return Err(invalid());
        }
        if blocks.windows(2).any(|w| !(w[1].is_subset_of(w[0]) && w[1] != w[0])) {
            return Err(invalid());
        }
        Ok(SubsetChain { blocks })
    }

    /// Chain whose successive differences are the given blocks, in order.
    pub fn from_differences(n: usize, diffs: &[Subset]) -> Result<Self, Error> {
        let mut blocks = vec![Subset::full(n)];
        let mut cur = Subset::full(n);
        for d in diffs {
            cur = cur.minus(*d);
            blocks.push(cur);
        }
        SubsetChain::new(blocks)
    }

    pub fn blocks(&self) -> &[Subset] {
        &self.blocks
    }

    pub fn n(&self) -> usize {
        self.blocks[0].len()
    }

    /// Number of strict steps; the chain has `m + 1` blocks.
    pub fn m(&self) -> usize {
        self.blocks.len() - 1
    }

    /// Successive differences `K_ℓ \ K_{ℓ+1}`.
    pub fn differences(&self) -> Vec<Subset> {
        self.blocks.windows(2).map(|w| w[0].minus(w[1])).collect()
    }

    /// Index `s` (0-based) with `i ∈ K_s \ K_{s+1}`.
    pub fn level_of_index(&self, i: usize) -> usize {
        self.blocks
            .windows(2)
            .position(|w| w[0].contains_index(i) && !w[1].contains_index(i))
            .expect("index outside [n]")
    }

    /// Index `s` (0-based) with `I ⊆ K_s` and `I ⊄ K_{s+1}`.
    pub fn level_of_subset(&self, subset: Subset) -> usize {
        self.blocks
            .windows(2)
            .position(|w| subset.is_subset_of(w[0]) && !subset.is_subset_of(w[1]))
            .expect("nonempty subset of [n]")
    }

    /// The chain with every block replaced by its image under `w`.
    pub fn permute(&self, w: &[usize]) -> SubsetChain {
        SubsetChain { blocks: self.blocks.iter().map(|b| b.permute(w)).collect() }
    }
}

impl TryFrom<Vec<Subset>> for SubsetChain {
    type Error = Error;

    fn try_from(v: Vec<Subset>) -> Result<Self, Error> {
        SubsetChain::new(v)
    }
}

impl From<SubsetChain> for Vec<Subset> {
    fn from(c: SubsetChain) -> Self {
        c.blocks
    }
}

impl fmt::Display for SubsetChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.blocks.iter().map(|b| b.to_string()).collect();
        write!(f, "{}", parts.join(" ⊃ "))
    }
}

/// All chains `[n] = K_1 ⊃ … ⊃ K_{m+1} = ∅` with exactly `m + 1` blocks.
pub fn enumerate_chains(n: usize, m: usize) -> Vec<SubsetChain> {
    fn go(rest: Subset, steps: usize, blocks: &mut Vec<Subset>, out: &mut Vec<SubsetChain>) {
        if steps == 1 {
            blocks.push(Subset::EMPTY);
            out.push(SubsetChain { blocks: blocks.clone() });
            blocks.pop();
            return;
        }
        // Each further step removes at least one element.
        for next in rest.subsets() {
            if next != rest && next.len() >= steps - 1 {
                blocks.push(next);
                go(next, steps - 1, blocks, out);
                blocks.pop();
            }
        }
    }
    let mut out = Vec::new();
    if m == 0 || m > n {
        return out;
    }
    let full = Subset::full(n);
    go(full, m, &mut vec![full], &mut out);
    out.sort();
    out
}

/// A permutation of `{0, …, n-1}`, stored as its image list `w[i] = w(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, Error> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation(images));
            }
        }
        Ok(Permutation(images))
    }

    /// From 1-based images, as written in one-line notation.
    pub fn from_one_line(images: &[usize]) -> Result<Self, Error> {
        if images.contains(&0) {
            return Err(Error::InvalidPermutation(images.to_vec()));
        }
        Self::new(images.iter().map(|x| x - 1).collect())
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// The transposition of `a` and `b` (0-based) in `S_n`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut w: Vec<usize> = (0..n).collect();
        w.swap(a, b);
        Permutation(w)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Permutation(inv)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut seen = vec![false; self.0.len()];
        let mut lengths = Vec::new();
        for start in 0..self.0.len() {
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.0[x];
                len += 1;
            }
            if len > 0 {
                lengths.push(len);
            }
        }
        CycleType(Partition::from_unsorted(lengths))
    }
}

/// All permutations of `S_n` in lexicographic order of one-line notation.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    fn go(rest: &mut Vec<usize>, prefix: &mut Vec<usize>, out: &mut Vec<Permutation>) {
        if rest.is_empty() {
            out.push(Permutation(prefix.clone()));
            return;
        }
        for k in 0..rest.len() {
            let x = rest.remove(k);
            prefix.push(x);
            go(rest, prefix, out);
            prefix.pop();
            rest.insert(k, x);
        }
    }
    let mut out = Vec::new();
    go(&mut (0..n).collect(), &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(4).len(), 5);
        assert_eq!(partitions_of(7).len(), 15);
    }

    #[test]
    fn partitions_are_reverse_lex() {
        let ps = partitions_of(4);
        let parts: Vec<Vec<usize>> = ps.iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(
            parts,
            vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]
        );
        assert!(ps.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn rejects_bad_partitions() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0, 1]).is_err());
        assert_eq!(Partition::new(vec![2, 1, 0]).unwrap(), p(&[2, 1]));
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[5]).conjugate(), Partition::column(5));
        assert_eq!(p(&[2, 1, 1]).conjugate(), p(&[3, 1]));
        for n in 0..=8 {
            for lam in partitions_of(n) {
                assert_eq!(lam.conjugate().conjugate(), lam);
            }
        }
    }

    #[test]
    fn hook_lengths() {
        assert_eq!(p(&[2, 1]).dimension(), BigInt::from(2));
        assert_eq!(p(&[3, 2]).dimension(), BigInt::from(5));
        assert_eq!(p(&[2, 1, 1]).dimension(), BigInt::from(3));
    }

    #[test]
    fn class_data_examples() {
        for n in 1..=6 {
            let id = CycleType(Partition::column(n));
            assert_eq!(class_data(&id), (factorial(n), 1));
            assert_eq!(class_data(&CycleType(Partition::row(n))).0, n as u64);
        }
        assert_eq!(class_data(&CycleType(p(&[2, 1]))), (2, 3));
    }

    #[test]
    fn class_sizes_sum_to_group_order() {
        for n in 0..=8 {
            let total: u64 = partitions_of(n).into_iter().map(|mu| class_data(&CycleType(mu)).1).sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn representative_has_cycle_type() {
        let mu = CycleType::new(vec![3, 2, 1]).unwrap();
        let w = mu.representative();
        assert_eq!(w, vec![1, 2, 0, 4, 3, 5]);
    }

    #[test]
    fn secant_values() {
        let a = secant_numbers(8);
        let expect: Vec<BigInt> = [1, 1, 5, 61, 1385].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(a, expect);
        assert_eq!(secant_numbers(0), vec![BigInt::one()]);
    }

    #[test]
    fn chain_counts() {
        assert_eq!(enumerate_chains(2, 2).len(), 2);
        assert_eq!(enumerate_chains(3, 2).len(), 6);
        for n in 1..=6 {
            assert_eq!(enumerate_chains(n, n).len() as u64, factorial(n));
        }
        for n in 1..=6 {
            for m in 1..=n {
                assert_eq!(enumerate_chains(n, m).len() as u64, ordered_set_partitions(n, m));
            }
        }
    }

    #[test]
    fn chain_validation() {
        let s = |v: &[usize]| Subset::from_elements(v).unwrap();
        assert!(SubsetChain::new(vec![s(&[1, 2, 3]), s(&[1]), s(&[])]).is_ok());
        assert!(SubsetChain::new(vec![s(&[1, 2, 3]), s(&[1]), s(&[1]), s(&[])]).is_err());
        assert!(SubsetChain::new(vec![s(&[1, 2]), s(&[3]), s(&[])]).is_err());
        assert!(SubsetChain::new(vec![s(&[1, 2, 3]), s(&[1])]).is_err());
    }

    #[test]
    fn chain_json() {
        let c = enumerate_chains(3, 3)[0].clone();
        let text = serde_json::to_string(&c).unwrap();
        assert_eq!(text, "[[1,2,3],[1,2],[1],[]]");
        let back: SubsetChain = serde_json::from_str(&text).unwrap();
        assert_eq!(back, c);
        assert_eq!(serde_json::to_string(&p(&[3, 1])).unwrap(), "[3,1]");
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }

    #[test]
    fn permutations() {
        let w = Permutation::from_one_line(&[2, 3, 1, 5, 4]).unwrap();
        assert_eq!(w.cycle_type(), CycleType::new(vec![3, 2]).unwrap());
        assert_eq!(w.compose(&w.inverse()), Permutation::identity(5));
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![2, 0]).is_err());
        let mu = CycleType::new(vec![4, 2, 1]).unwrap();
        assert_eq!(Permutation::new(mu.representative()).unwrap().cycle_type(), mu);
    }

    #[test]
    fn subset_iteration() {
        let s = Subset::from_elements(&[1, 3, 4]).unwrap();
        assert_eq!(s.subsets().count(), 8);
        assert_eq!(s.elements(), vec![1, 3, 4]);
    }
}
