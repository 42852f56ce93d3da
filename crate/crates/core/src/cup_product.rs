//! Degree-1 and degree-2 cup products of `H^*(Y_n(R), Q)`.
//!
//! `H^1` has basis `ν_ij` (`i < j`) with `ν_ji = −ν_ij`. Products of degree-1
//! classes anticommute, and `ν_ij ν_ik = 0`. The subspace `C ⊆ H^2` spanned by
//! products has basis the three pairings `ν_ij ν_kl, ν_ik ν_jl, ν_il ν_jk` of
//! each 4-subset `i < j < k < l`, whose independence is taken as given.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::combinatorics::{binomial, partitions_of, CycleType, Partition, Permutation, Subset};
use crate::linalg::{rank, SparseRow};
use crate::rep_ring::{decompose, ClassFunction, SchurVector};
use crate::{rational, Rational};

/// An ordered pair `i < j` of 0-based indices.
pub type Pair = (usize, usize);

/// `±ν_ij` in normal form `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NuClass {
    pub pair: Pair,
    pub sign: i8,
}

impl NuClass {
    /// `ν_ab` for distinct 0-based `a, b`.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "ν needs two distinct indices");
        if a < b {
            NuClass { pair: (a, b), sign: 1 }
        } else {
            NuClass { pair: (b, a), sign: -1 }
        }
    }

    pub fn negate(self) -> Self {
        NuClass { sign: -self.sign, ..self }
    }

    fn shares_index(&self, other: &NuClass) -> bool {
        let (a, b) = self.pair;
        let (c, d) = other.pair;
        a == c || a == d || b == c || b == d
    }
}

impl fmt::Display for NuClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.sign < 0 { "-" } else { "" };
        write!(f, "{sign}ν_{}{}", self.pair.0 + 1, self.pair.1 + 1)
    }
}

/// `w.ν_ij = ν_{w(i)w(j)}`, renormalized.
pub fn sn_act_on_nu(w: &Permutation, nu: &NuClass) -> NuClass {
    let moved = NuClass::new(w.apply(nu.pair.0), w.apply(nu.pair.1));
    if nu.sign < 0 {
        moved.negate()
    } else {
        moved
    }
}

/// A product `ν_x ν_y` of disjoint pairs with `x < y`.
pub type Monomial = (Pair, Pair);

/// A rational combination of reduced degree-2 monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DegreeTwoClass {
    terms: BTreeMap<Monomial, Rational>,
}

impl DegreeTwoClass {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        let entry = self.terms.entry(m).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&mut self, other: &DegreeTwoClass) {
        for (m, c) in &other.terms {
            self.add_term(*m, c.clone());
        }
    }

    /// Multiplicative extension of the `S_n` action.
    pub fn act(&self, w: &Permutation) -> DegreeTwoClass {
        let mut out = DegreeTwoClass::zero();
        for ((x, y), c) in &self.terms {
            let a = sn_act_on_nu(w, &NuClass { pair: *x, sign: 1 });
            let b = sn_act_on_nu(w, &NuClass { pair: *y, sign: 1 });
            for (m, d) in cup_reduce(&a, &b).terms {
                out.add_term(m, c * d);
            }
        }
        out
    }
}

impl fmt::Display for DegreeTwoClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((x, y), c)| {
                let mono = format!("ν_{}{}·ν_{}{}", x.0 + 1, x.1 + 1, y.0 + 1, y.1 + 1);
                if c.is_one() {
                    mono
                } else if (-c).is_one() {
                    format!("-{mono}")
                } else {
                    format!("{}·{mono}", rational::format(c))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Reduces `a · b`: products sharing an index vanish, and the factors are
/// put in increasing order at the cost of a sign.
pub fn cup_reduce(a: &NuClass, b: &NuClass) -> DegreeTwoClass {
    let mut out = DegreeTwoClass::zero();
    if a.shares_index(b) {
        return out;
    }
    let mut sign = i64::from(a.sign) * i64::from(b.sign);
    let mono = if a.pair < b.pair {
        (a.pair, b.pair)
    } else {
        sign = -sign;
        (b.pair, a.pair)
    };
    out.add_term(mono, rational::int(sign));
    out
}

/// The three pairings of each 4-subset, ordered by 4-subset then pairing.
pub fn c_basis(n: usize) -> Vec<Monomial> {
    let mut four_sets: Vec<Subset> = Subset::full(n).subsets().filter(|s| s.len() == 4).collect();
    four_sets.sort_by_key(|s| s.elements());
    four_sets
        .into_iter()
        .flat_map(|s| {
            let v: Vec<usize> = s.indices().collect();
            let (i, j, k, l) = (v[0], v[1], v[2], v[3]);
            [((i, j), (k, l)), ((i, k), (j, l)), ((i, l), (j, k))]
        })
        .collect()
}

/// Rank of the span of all products `ν_ab ν_cd` over ordered pairs of
/// distinct indices, written in the basis coordinates.
pub fn cup_span_dimension(n: usize) -> usize {
    let index: BTreeMap<Monomial, usize> = c_basis(n).into_iter().enumerate().map(|(k, m)| (m, k)).collect();
    let ordered: Vec<NuClass> =
        (0..n).flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| NuClass::new(a, b))).collect();
    let mut rows: Vec<SparseRow> = Vec::new();
    for x in &ordered {
        for y in &ordered {
            let mut row: SparseRow = cup_reduce(x, y)
                .terms()
                .map(|(m, c)| (index[m], c.to_integer().to_i64().expect("unit coefficient")))
                .collect();
            if !row.is_empty() {
                row.sort_unstable();
                rows.push(row);
            }
        }
    }
    rank(&rows)
}

pub fn c_dimension_formula(n: usize) -> u64 {
    3 * binomial(n, 4)
}

/// `C ≅ Ind_{S_4×S_{n-4}}^{S_n}(V_{(2,1,1)} ⊠ 1)`, by the Pieri rule.
pub fn c_as_rep_pieri(n: usize) -> SchurVector {
    assert!(n >= 4, "C vanishes below n = 4");
    SchurVector::basis(Partition::new(vec![2, 1, 1]).expect("valid")).pieri_h(n - 4)
}

/// Trace of `w` on `C` in the pairing basis.
pub fn c_trace(w: &Permutation) -> Rational {
    c_basis(w.n())
        .into_iter()
        .map(|m| {
            let single = {
                let mut d = DegreeTwoClass::zero();
                d.add_term(m, Rational::one());
                d
            };
            single.act(w).coeff(&m)
        })
        .sum()
}

/// The character of `C` from signed traces, one representative per class.
pub fn c_character(n: usize) -> ClassFunction {
    ClassFunction::from_fn(n, |mu| c_trace(&Permutation::new(mu.representative()).expect("valid representative")))
}

/// `C` decomposed from its directly computed character.
pub fn c_as_rep_character(n: usize) -> SchurVector {
    decompose(&c_character(n))
}

/// The closed form for `n ≥ 6`:
/// `V_{(n-2,1,1)} ⊕ V_{(n-3,2,1)} ⊕ V_{(n-3,1,1,1)} ⊕ V_{(n-4,2,1,1)}`.
pub fn c_pattern(n: usize) -> SchurVector {
    assert!(n >= 6, "pattern holds from n = 6");
    let terms: [Vec<usize>; 4] = [vec![n - 2, 1, 1], vec![n - 3, 2, 1], vec![n - 3, 1, 1, 1], vec![n - 4, 2, 1, 1]];
    let mut v = SchurVector::zero(n);
    for t in terms {
        v.add_term(Partition::new(t).expect("valid"), Rational::one());
    }
    v
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Infeasible,
    Feasible,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessEntry {
    pub partition: Partition,
    pub multiplicity: u64,
}

/// Outcome of the search for an `S_{n+1}`-module restricting to a target.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub n: usize,
    pub status: Status,
    pub witness: Vec<WitnessEntry>,
}

type Counts = BTreeMap<Partition, u64>;

fn to_counts(v: &SchurVector) -> Option<Counts> {
    let mut out = Counts::new();
    for (lambda, c) in v.terms() {
        if !c.is_integer() || c.is_negative() {
            return None;
        }
        out.insert(lambda.clone(), c.to_integer().to_u64()?);
    }
    Some(out)
}

struct Search {
    candidates: Vec<(Partition, Counts)>,
    /// `reachable[k]`: irreducibles of `S_n` met by candidates `k..`.
    reachable: Vec<Vec<Partition>>,
    chosen: Vec<u64>,
}

impl Search {
    fn run(&mut self, k: usize, residual: &mut Counts) -> bool {
        if residual.values().all(|&c| c == 0) {
            self.chosen[k..].iter_mut().for_each(|c| *c = 0);
            return true;
        }
        if k == self.candidates.len()
            || residual.iter().any(|(mu, &c)| c > 0 && !self.reachable[k].contains(mu))
        {
            return false;
        }
        let restriction = self.candidates[k].1.clone();
        let max = restriction.iter().map(|(mu, &c)| residual.get(mu).copied().unwrap_or(0) / c).min().unwrap_or(0);
        for mult in (0..=max).rev() {
            for (mu, c) in &restriction {
                *residual.get_mut(mu).expect("bounded by residual") -= c * mult;
            }
            self.chosen[k] = mult;
            let found = self.run(k + 1, residual);
            for (mu, c) in &restriction {
                *residual.get_mut(mu).expect("bounded by residual") += c * mult;
            }
            if found {
                return true;
            }
        }
        false
    }
}

/// Complete depth-first search for nonnegative `c_λ` with
/// `Σ c_λ·Res(V_λ) = target`, over partitions `λ` of `n + 1` in order of
/// decreasing dimension. Candidates whose restriction exceeds the target
/// anywhere are discarded up front.
pub fn branching_search(target: &SchurVector) -> Certificate {
    let n = target.n();
    let infeasible = Certificate { n, status: Status::Infeasible, witness: Vec::new() };
    let Some(goal) = to_counts(target) else {
        return infeasible;
    };
    let mut candidates: Vec<(Partition, Counts)> = partitions_of(n + 1)
        .into_iter()
        .filter_map(|lambda| {
            let res = to_counts(&SchurVector::basis(lambda.clone()).restrict())?;
            let fits = res.iter().all(|(mu, c)| goal.get(mu).is_some_and(|g| g >= c));
            fits.then_some((lambda, res))
        })
        .collect();
    candidates.sort_by(|a, b| b.0.dimension().cmp(&a.0.dimension()).then_with(|| a.0.cmp(&b.0)));
    let mut reachable = vec![Vec::new(); candidates.len() + 1];
    for k in (0..candidates.len()).rev() {
        let mut r = reachable[k + 1].clone();
        for mu in candidates[k].1.keys() {
            if !r.contains(mu) {
                r.push(mu.clone());
            }
        }
        reachable[k] = r;
    }
    let mut search = Search { chosen: vec![0; candidates.len()], candidates, reachable };
    let mut residual = goal;
    if !search.run(0, &mut residual) {
        return infeasible;
    }
    let mut witness: Vec<WitnessEntry> = search
        .candidates
        .iter()
        .zip(&search.chosen)
        .filter(|(_, &m)| m > 0)
        .map(|((lambda, _), &m)| WitnessEntry { partition: lambda.clone(), multiplicity: m })
        .collect();
    witness.sort_by(|a, b| a.partition.cmp(&b.partition));
    Certificate { n, status: Status::Feasible, witness }
}

/// Whether `C` (for `S_n`) is the restriction of some `S_{n+1}`-module.
pub fn branching_infeasibility(n: usize) -> Certificate {
    branching_search(&c_as_rep_pieri(n))
}

/// `Σ c_λ·Res(V_λ)` for a witness.
pub fn witness_restriction(n: usize, witness: &[WitnessEntry]) -> SchurVector {
    let mut v = SchurVector::zero(n);
    for w in witness {
        v.add_scaled(&SchurVector::basis(w.partition.clone()).restrict(), &rational::int(w.multiplicity as i64));
    }
    v
}

/// `true` iff every basis monomial is sent to `±` a basis monomial.
pub fn permutes_basis_up_to_sign(w: &Permutation) -> bool {
    let basis = c_basis(w.n());
    basis.iter().all(|&m| {
        let mut d = DegreeTwoClass::zero();
        d.add_term(m, Rational::one());
        let image = d.act(w);
        let terms: Vec<_> = image.terms().collect();
        terms.len() == 1 && basis.contains(terms[0].0) && terms[0].1.abs().is_one()
    })
}

/// Cycle types of `S_n`, for reporting characters.
pub fn cycle_types(n: usize) -> Vec<CycleType> {
    partitions_of(n).into_iter().map(CycleType).collect()
}
