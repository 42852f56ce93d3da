//! Homology of open intervals `(∅, I)` in the poset `B_n^ev` of even-size
//! subsets of `[n]`, computed from the order complex over `Q`.
//!
//! Degrees follow the shifted convention `H_m(∅, I) = H̃_{m-2}` of the order
//! complex, with `H_0(∅, ∅) = Q`. Intervals with isomorphic closures give
//! isomorphic homology, so only `(∅, [n])` is ever built.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use crate::combinatorics::{partitions_of, CycleType, Subset};
use crate::error::Error;
use crate::linalg::{self, SparseRow};
use crate::rational;
use crate::rep_ring::{decompose, ClassFunction, SchurVector};
use crate::Discrepancy;

/// Largest interval top size for which order complexes are built.
pub const BRUTE_FORCE_LIMIT: usize = 8;

/// The open interval `(∅, [n])` of `B_n^ev`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenInterval {
    n: usize,
}

impl EvenInterval {
    pub fn new(n: usize) -> Result<Self, Error> {
        if !n.is_multiple_of(2) {
            return Err(Error::OddInterval(n));
        }
        if n > BRUTE_FORCE_LIMIT {
            return Err(Error::OutOfBound { what: "interval size", value: n, limit: BRUTE_FORCE_LIMIT });
        }
        Ok(EvenInterval { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn top(&self) -> Subset {
        Subset::full(self.n)
    }

    /// Elements `J` with `∅ ⊂ J ⊂ [n]`, `|J|` even, ordered by size then mask.
    pub fn elements(&self) -> Vec<Subset> {
        let mut out: Vec<Subset> = self
            .top()
            .subsets()
            .filter(|s| !s.is_empty() && *s != self.top() && s.len() % 2 == 0)
            .collect();
        out.sort_by_key(|s| (s.len(), s.0));
        out
    }

    /// `rank(J) = |J| / 2`.
    pub fn rank_of(j: Subset) -> usize {
        j.len() / 2
    }

    pub fn complex(&self) -> IntervalComplex {
        IntervalComplex::build(self)
    }
}

/// The order complex of an open interval, augmented by the empty chain.
///
/// `chains[k]` holds the chains with `k` elements, i.e. simplices of dimension
/// `k - 1`; `chains[0]` is the single empty chain.
#[derive(Clone, Debug)]
pub struct IntervalComplex {
    chains: Vec<Vec<Vec<Subset>>>,
}

impl IntervalComplex {
    fn build(interval: &EvenInterval) -> Self {
        let elements = interval.elements();
        let mut chains: Vec<Vec<Vec<Subset>>> = vec![vec![Vec::new()]];
        loop {
            let last = chains.last().expect("nonempty");
            let mut next = Vec::new();
            for chain in last {
                for &x in &elements {
                    let above = match chain.last() {
                        None => true,
                        Some(&top) => top.is_subset_of(x) && top != x,
                    };
                    if above {
                        let mut c = chain.clone();
                        c.push(x);
                        next.push(c);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            chains.push(next);
        }
        IntervalComplex { chains }
    }

    /// Number of simplices of each dimension `d = -1, 0, 1, …` in order.
    pub fn simplex_counts(&self) -> Vec<usize> {
        self.chains.iter().map(Vec::len).collect()
    }

    /// Chains with `len` elements.
    pub fn chains(&self, len: usize) -> &[Vec<Subset>] {
        self.chains.get(len).map_or(&[], Vec::as_slice)
    }

    /// Boundary map from chains with `len` elements to chains with `len - 1`,
    /// one sparse row per source chain. Deleting the element at position `k`
    /// carries sign `(-1)^k`.
    pub fn boundary(&self, len: usize) -> Vec<SparseRow> {
        if len == 0 || len >= self.chains.len() {
            return Vec::new();
        }
        let index: HashMap<&[Subset], usize> = self.chains[len - 1]
            .iter()
            .enumerate()
            .map(|(i, c)| (c.as_slice(), i))
            .collect();
        self.chains[len]
            .iter()
            .map(|chain| {
                let mut row: SparseRow = (0..len)
                    .map(|k| {
                        let mut face = chain.clone();
                        face.remove(k);
                        let sign = if k % 2 == 0 { 1 } else { -1 };
                        (index[face.as_slice()], sign)
                    })
                    .collect();
                row.sort_unstable_by_key(|e| e.0);
                row
            })
            .collect()
    }

    /// Checks `∂ ∘ ∂ = 0` in every degree.
    pub fn boundary_squares_to_zero(&self) -> bool {
        (2..self.chains.len()).all(|len| {
            let outer = self.boundary(len);
            let inner = self.boundary(len - 1);
            outer.iter().all(|row| {
                let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
                for &(face, a) in row {
                    for &(sub, b) in &inner[face] {
                        *acc.entry(sub).or_default() += a * b;
                    }
                }
                acc.values().all(|&x| x == 0)
            })
        })
    }

    /// Reduced Betti numbers `rank H̃_d` for `d = -1, 0, 1, …`.
    pub fn reduced_betti(&self) -> Vec<usize> {
        let ranks: Vec<usize> = (0..=self.chains.len()).map(|len| linalg::rank(&self.boundary(len))).collect();
        (0..self.chains.len())
            .map(|len| self.chains[len].len() - ranks[len] - ranks[len + 1])
            .collect()
    }

    /// Reduced Euler characteristic `Σ_d (-1)^d · #simplices_d`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        alternating(&self.simplex_counts())
    }

    /// Number of chains of each length fixed by the permutation `w`.
    ///
    /// `w` preserves cardinality, so a chain is fixed as a set exactly when
    /// each of its elements is fixed.
    pub fn fixed_chain_counts(&self, w: &[usize]) -> Vec<usize> {
        self.chains
            .iter()
            .map(|level| {
                level
                    .iter()
                    .filter(|chain| chain.iter().all(|&x| x.permute(w) == x))
                    .count()
            })
            .collect()
    }
}

/// `Σ_k (-1)^{k-1} counts[k]`, where index `k` stands for dimension `k - 1`.
fn alternating(counts: &[usize]) -> i64 {
    counts
        .iter()
        .enumerate()
        .map(|(k, &c)| if k % 2 == 1 { c as i64 } else { -(c as i64) })
        .sum()
}

/// Homology of `(∅, I)` for `|I| = i_size`, keyed by the shifted degree `m`.
/// Every degree the complex can support appears, zeros included.
pub fn homology_ranks(i_size: usize) -> Result<BTreeMap<usize, usize>, Error> {
    Ok(top_homology(i_size)?.ranks.clone())
}

fn compute_ranks(interval: &EvenInterval, complex: &IntervalComplex) -> BTreeMap<usize, usize> {
    if interval.n() == 0 {
        return BTreeMap::from([(0, 1)]);
    }
    // chains with k elements have dimension k - 1, hence m = k + 1
    complex.reduced_betti().into_iter().enumerate().map(|(k, r)| (k + 1, r)).collect()
}

/// `true` iff the homology of `(∅, [n])` is concentrated in degree `n / 2`.
pub fn cm_concentration_check(n: usize) -> Result<bool, Error> {
    let ranks = homology_ranks(n)?;
    Ok(ranks.iter().all(|(&m, &r)| (r != 0) == (m == n / 2)))
}

/// Everything known about the top homology `H_{n/2}(∅, [n])`.
#[derive(Clone, Debug)]
pub struct TopHomology {
    pub n: usize,
    pub ranks: BTreeMap<usize, usize>,
    pub simplex_counts: Vec<usize>,
    /// `None` when the homology is not concentrated in one degree.
    pub character: Option<ClassFunction>,
}

impl TopHomology {
    fn compute(n: usize) -> Result<Self, Error> {
        let interval = EvenInterval::new(n)?;
        let complex = interval.complex();
        let ranks = compute_ranks(&interval, &complex);
        let concentrated = ranks.iter().all(|(&m, &r)| (r != 0) == (m == n / 2));
        let character = concentrated.then(|| hopf_trace_character(n, &complex));
        Ok(TopHomology { n, ranks, simplex_counts: complex.simplex_counts(), character })
    }
}

/// Hopf trace: `Σ_d (-1)^d tr(g | C_d) = Σ_d (-1)^d tr(g | H̃_d)`, and with
/// homology only in `d = n/2 - 2` the right side is `± χ_top(g)`.
fn hopf_trace_character(n: usize, complex: &IntervalComplex) -> ClassFunction {
    if n == 0 {
        return ClassFunction::trivial(0);
    }
    let top_dim = n as i64 / 2 - 2;
    let sign = if top_dim.rem_euclid(2) == 0 { 1 } else { -1 };
    ClassFunction::from_fn(n, |mu| {
        let fixed = complex.fixed_chain_counts(&mu.representative());
        rational::int(sign * alternating(&fixed))
    })
}

fn cache() -> &'static Mutex<BTreeMap<usize, Arc<TopHomology>>> {
    static CACHE: OnceLock<Mutex<BTreeMap<usize, Arc<TopHomology>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(BTreeMap::new()))
}

/// Memoized order-complex computation for `(∅, [n])`.
pub fn top_homology(n: usize) -> Result<Arc<TopHomology>, Error> {
    if let Some(t) = cache().lock().expect("cache lock").get(&n) {
        return Ok(Arc::clone(t));
    }
    let computed = Arc::new(TopHomology::compute(n)?);
    let mut guard = cache().lock().expect("cache lock");
    Ok(Arc::clone(guard.entry(n).or_insert(computed)))
}

/// Character of `S_n` on `H_{n/2}(∅, [n])`, via the Hopf trace formula.
/// Fails if the homology is not concentrated in the top degree.
pub fn equivariant_top_character(n: usize) -> Result<ClassFunction, Error> {
    let top = top_homology(n)?;
    top.character.clone().ok_or_else(|| Error::NotConcentrated {
        n,
        ranks: top.ranks.iter().map(|(&m, &r)| (m, r)).collect(),
    })
}

/// `H_{n/2}(∅, [n])` as an element of `R(S_n)`.
pub fn top_homology_rep(n: usize) -> Result<SchurVector, Error> {
    Ok(decompose(&equivariant_top_character(n)?))
}

/// `WH_i(B_n^ev) = Ind_{S_{2i} × S_{n-2i}}(H_i(∅, [2i]) ⊠ 1)`.
pub fn whitney_homology(n: usize, i: usize) -> Result<SchurVector, Error> {
    if 2 * i > n {
        return Ok(SchurVector::zero(n));
    }
    Ok(top_homology_rep(2 * i)?.pieri_h(n - 2 * i))
}

/// `Σ_i (-1)^i WH_i(B_n^ev)`.
pub fn whitney_alternating_sum(n: usize) -> Result<SchurVector, Error> {
    let mut total = SchurVector::zero(n);
    for i in 0..=n / 2 {
        let wh = whitney_homology(n, i)?;
        if i % 2 == 0 {
            total += &wh;
        } else {
            total -= &wh;
        }
    }
    Ok(total)
}

/// Compares `1 + Σ (-1)^{n/2} H_{n/2}(∅, [n])` (order-complex route) with
/// `(1 + Σ_{n≥2 even} h_n)^{-1}` degree by degree through `max_degree`.
pub fn inverse_series_first_mismatch(max_degree: usize) -> Result<Option<Discrepancy>, Error> {
    if max_degree > BRUTE_FORCE_LIMIT {
        return Err(Error::OutOfBound { what: "N", value: max_degree, limit: BRUTE_FORCE_LIMIT });
    }
    let inverse = crate::rep_ring::RepSeries::even_trivial(max_degree).invert()?;
    for n in 0..=max_degree {
        let right = inverse.get(n, 0);
        let left = if n % 2 == 1 {
            SchurVector::zero(n)
        } else if n == 0 {
            SchurVector::unit()
        } else {
            let rep = top_homology_rep(n)?;
            if (n / 2) % 2 == 0 {
                rep
            } else {
                -&rep
            }
        };
        if left != right {
            return Ok(Some(Discrepancy::new(format!("n={n}"), &left, &right)));
        }
    }
    Ok(None)
}

pub fn verify_inverse_series(max_degree: usize) -> Result<bool, Error> {
    Ok(inverse_series_first_mismatch(max_degree)?.is_none())
}

/// Characters of `H_{n/2}(∅, [n])` keyed by cycle type, for JSON output.
pub fn character_table(n: usize) -> Result<BTreeMap<String, String>, Error> {
    let chi = equivariant_top_character(n)?;
    Ok(partitions_of(n)
        .into_iter()
        .map(|mu| {
            let mu = CycleType(mu);
            (mu.key(), rational::format(&chi.value(&mu)))
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Partition;
    use num_traits::ToPrimitive;

    fn nonzero(ranks: &BTreeMap<usize, usize>) -> Vec<(usize, usize)> {
        ranks.iter().filter(|(_, &r)| r > 0).map(|(&m, &r)| (m, r)).collect()
    }

    #[test]
    fn small_ranks() {
        assert_eq!(homology_ranks(0).unwrap(), BTreeMap::from([(0, 1)]));
        assert_eq!(nonzero(&homology_ranks(2).unwrap()), vec![(1, 1)]);
        assert_eq!(nonzero(&homology_ranks(4).unwrap()), vec![(2, 5)]);
        assert_eq!(nonzero(&homology_ranks(6).unwrap()), vec![(3, 61)]);
    }

    #[test]
    fn odd_size_rejected() {
        assert!(matches!(homology_ranks(3), Err(Error::OddInterval(3))));
        assert!(homology_ranks(10).is_err());
    }

    #[test]
    fn six_complex_shape() {
        // 15 two-subsets, 15 four-subsets, each 4-subset over 6 two-subsets
        let c = EvenInterval::new(6).unwrap().complex();
        assert_eq!(c.simplex_counts(), vec![1, 30, 90]);
        assert!(c.boundary_squares_to_zero());
    }

    #[test]
    fn concentration() {
        for n in [2, 4, 6] {
            assert!(cm_concentration_check(n).unwrap());
        }
    }

    #[test]
    fn euler_characteristic_matches_homology() {
        for n in [2, 4, 6] {
            let c = EvenInterval::new(n).unwrap().complex();
            let betti = c.reduced_betti();
            assert_eq!(alternating(&betti), c.reduced_euler_characteristic());
        }
    }

    #[test]
    fn top_characters() {
        assert_eq!(equivariant_top_character(0).unwrap(), ClassFunction::trivial(0));
        assert_eq!(equivariant_top_character(2).unwrap(), ClassFunction::trivial(2));
        let rep = top_homology_rep(4).unwrap();
        let expect = SchurVector::from_int_terms(4, &[(&[3, 1], 1), (&[2, 2], 1)]);
        assert_eq!(rep, expect);
        assert_eq!(rep.dimension(), rational::int(5));
    }

    #[test]
    fn character_at_identity_is_rank() {
        for n in [2, 4, 6] {
            let chi = equivariant_top_character(n).unwrap();
            let id = CycleType(Partition::column(n));
            let top = homology_ranks(n).unwrap()[&(n / 2)];
            assert_eq!(chi.value(&id).to_integer().to_usize(), Some(top));
        }
    }

    #[test]
    fn whitney_examples() {
        for n in 4..=6 {
            assert_eq!(whitney_homology(n, 0).unwrap(), SchurVector::h(n));
            let wh1 = whitney_homology(n, 1).unwrap();
            assert_eq!(wh1, SchurVector::h(2).pieri_h(n - 2));
            assert_eq!(wh1.dimension(), rational::int(crate::combinatorics::binomial(n, 2) as i64));
        }
        assert!(whitney_alternating_sum(4).unwrap().is_zero());
    }

    #[test]
    fn inverse_series_small() {
        for n in [2, 4, 6] {
            assert!(verify_inverse_series(n).unwrap());
        }
    }
}
