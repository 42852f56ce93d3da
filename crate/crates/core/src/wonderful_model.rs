//! Points of the wonderful model `Y_n ⊂ ∏_{∅≠I⊆[n]} P^I`.
//!
//! A point is a family of homogeneous coordinate tuples `(a_i^I)_{i∈I}`, one
//! per nonempty `I ⊆ [n]`. It lies on `Y_n` iff for all `I ⊆ J` the tuples
//! `(a_i^I)_{i∈I}` and `(a_i^J)_{i∈I}` are linearly dependent. Torus orbits
//! are labelled by subset chains through the vanishing recursion
//! `K_{ℓ+1} = {k ∈ K_ℓ : a_k^{K_ℓ} = 0}`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use serde_json::{json, Value};

use crate::combinatorics::{binomial, enumerate_chains, ordered_set_partitions, Permutation, Subset, SubsetChain};
use crate::error::Error;
use crate::rational;
use crate::{Discrepancy, Rational};

/// `true` iff all 2×2 minors of the pair vanish.
fn dependent(u: &[Rational], v: &[Rational]) -> bool {
    debug_assert_eq!(u.len(), v.len());
    for x in 0..u.len() {
        for y in x + 1..u.len() {
            if &u[x] * &v[y] != &u[y] * &v[x] {
                return false;
            }
        }
    }
    true
}

/// Projective equality of two nonzero tuples.
pub fn projectively_equal(u: &[Rational], v: &[Rational]) -> bool {
    u.len() == v.len() && u.iter().any(|x| !x.is_zero()) && v.iter().any(|x| !x.is_zero()) && dependent(u, v)
}

/// A point of `∏ P^I`: one coordinate tuple per nonempty `I ⊆ [n]`.
///
/// Coordinates of each tuple follow increasing element order. Singleton
/// components carry no information and are stored as `(1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelPoint {
    n: usize,
    components: BTreeMap<Subset, Vec<Rational>>,
}

impl ModelPoint {
    pub fn new(n: usize, components: BTreeMap<Subset, Vec<Rational>>) -> Result<Self, Error> {
        if n == 0 || n > 16 {
            return Err(Error::InvalidPoint(format!("n = {n} outside 1..=16")));
        }
        let full = Subset::full(n);
        let mut checked = BTreeMap::new();
        for subset in full.subsets().filter(|s| !s.is_empty()) {
            let coords = components
                .get(&subset)
                .ok_or_else(|| Error::InvalidPoint(format!("missing component {subset}")))?;
            if coords.len() != subset.len() {
                return Err(Error::InvalidPoint(format!("component {subset} has {} coordinates", coords.len())));
            }
            if coords.iter().all(Zero::is_zero) {
                return Err(Error::InvalidPoint(format!("component {subset} is identically zero")));
            }
            let coords = if subset.len() == 1 { vec![Rational::one()] } else { coords.clone() };
            checked.insert(subset, coords);
        }
        if components.keys().any(|s| !s.is_subset_of(full) || s.is_empty()) {
            return Err(Error::InvalidPoint("component outside [n]".into()));
        }
        Ok(ModelPoint { n, components: checked })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn component(&self, subset: Subset) -> &[Rational] {
        &self.components[&subset]
    }

    /// `a_i^I` for a 0-based index `i ∈ I`.
    pub fn coord(&self, subset: Subset, i: usize) -> &Rational {
        let pos = subset.indices().position(|x| x == i).expect("index in subset");
        &self.components[&subset][pos]
    }

    /// Restriction of the `J`-tuple to `I ⊆ J`.
    fn restricted(&self, j: Subset, i: Subset) -> Vec<Rational> {
        i.indices().map(|x| self.coord(j, x).clone()).collect()
    }

    pub fn components(&self) -> impl Iterator<Item = (&Subset, &Vec<Rational>)> {
        self.components.iter()
    }

    pub fn to_json(&self) -> Value {
        let mut comps: Vec<(&Subset, &Vec<Rational>)> = self.components.iter().collect();
        comps.sort_by_key(|(s, _)| (s.len(), s.elements()));
        let comps: Vec<Value> = comps
            .into_iter()
            .map(|(s, c)| {
                json!({
                    "subset": s.elements(),
                    "coords": c.iter().map(rational::format).collect::<Vec<_>>(),
                })
            })
            .collect();
        json!({ "n": self.n, "components": comps })
    }

    pub fn from_json(value: &Value) -> Result<Self, Error> {
        let bad = |m: &str| Error::InvalidPoint(m.to_string());
        let n = value.get("n").and_then(Value::as_u64).ok_or_else(|| bad("missing integer field n"))? as usize;
        let list = value
            .get("components")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing array field components"))?;
        let mut components = BTreeMap::new();
        for entry in list {
            let elements: Vec<usize> = serde_json::from_value(
                entry.get("subset").cloned().ok_or_else(|| bad("component without subset"))?,
            )?;
            let mut sorted = elements.clone();
            sorted.sort_unstable();
            if sorted != elements {
                return Err(bad("subset elements must be sorted"));
            }
            let subset = Subset::from_elements(&elements)?;
            let coords = entry
                .get("coords")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("component without coords"))?
                .iter()
                .map(rational::from_json)
                .collect::<Result<Vec<_>, _>>()?;
            if components.insert(subset, coords).is_some() {
                return Err(Error::InvalidPoint(format!("duplicate component {subset}")));
            }
        }
        ModelPoint::new(n, components)
    }
}

/// A point `[a_1 : … : a_n]` of the open torus; all entries nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusElement(Vec<Rational>);

impl TorusElement {
    pub fn new(coords: Vec<Rational>) -> Result<Self, Error> {
        if coords.is_empty() || coords.iter().any(Zero::is_zero) {
            return Err(Error::ZeroTorusEntry);
        }
        Ok(TorusElement(coords))
    }

    pub fn from_ints(coords: &[i64]) -> Result<Self, Error> {
        Self::new(coords.iter().map(|&x| rational::int(x)).collect())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }
}

/// `ρ(a)`: the `I`-component is the restriction `(a_i)_{i∈I}`.
pub fn rho(t: &TorusElement) -> ModelPoint {
    let n = t.n();
    let components = Subset::full(n)
        .subsets()
        .filter(|s| !s.is_empty())
        .map(|s| (s, s.indices().map(|i| t.0[i].clone()).collect()))
        .collect();
    ModelPoint::new(n, components).expect("restrictions of a torus point are nonzero")
}

/// First pair `I ⊆ J` violating the defining equations, if any.
pub fn model_violation(p: &ModelPoint) -> Option<(Subset, Subset)> {
    for &j in p.components.keys() {
        for i in j.subsets().filter(|s| !s.is_empty() && *s != j) {
            if !dependent(p.component(i), &p.restricted(j, i)) {
                return Some((i, j));
            }
        }
    }
    None
}

pub fn is_on_model(p: &ModelPoint) -> bool {
    model_violation(p).is_none()
}

fn require_on_model(p: &ModelPoint) -> Result<(), Error> {
    match model_violation(p) {
        Some((i, j)) => Err(Error::NotOnModel(i.to_string(), j.to_string())),
        None => Ok(()),
    }
}

/// Label of a torus orbit: a chain `[n] = K_1 ⊃ … ⊃ K_{m+1} = ∅`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct OrbitLabel {
    pub chain: SubsetChain,
}

impl OrbitLabel {
    /// The orbit is a torus of dimension `n - m`.
    pub fn dimension(&self) -> usize {
        self.chain.n() - self.chain.m()
    }

    /// Dimension of the corresponding cone of the Coxeter fan.
    pub fn cone_dimension(&self) -> usize {
        self.chain.m() - 1
    }
}

/// The orbit containing `p`, by the vanishing recursion.
pub fn orbit_of(p: &ModelPoint) -> Result<OrbitLabel, Error> {
    require_on_model(p)?;
    let mut current = Subset::full(p.n);
    let mut blocks = vec![current];
    while !current.is_empty() {
        let zeros = Subset(
            current
                .indices()
                .filter(|&k| p.coord(current, k).is_zero())
                .fold(0, |acc, k| acc | (1 << k)),
        );
        blocks.push(zeros);
        current = zeros;
    }
    Ok(OrbitLabel { chain: SubsetChain::new(blocks)? })
}

/// The canonical point of an orbit: `a_i^{K_s} = value(s, i)` on
/// `K_s \ K_{s+1}` and `0` on `K_{s+1}`, extended to every `I` through the
/// level `s` with `I ⊆ K_s`, `I ⊄ K_{s+1}`.
pub fn orbit_point_with<F>(chain: &SubsetChain, mut value: F) -> ModelPoint
where
    F: FnMut(usize, usize) -> Rational,
{
    let n = chain.n();
    let blocks = chain.blocks();
    let level_coords: Vec<Vec<Rational>> = (0..chain.m())
        .map(|s| {
            (0..n)
                .map(|i| {
                    if blocks[s].contains_index(i) && !blocks[s + 1].contains_index(i) {
                        let v = value(s, i);
                        assert!(!v.is_zero(), "orbit coordinates must be nonzero");
                        v
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect();
    let components = Subset::full(n)
        .subsets()
        .filter(|s| !s.is_empty())
        .map(|subset| {
            let s = chain.level_of_subset(subset);
            (subset, subset.indices().map(|i| level_coords[s][i].clone()).collect())
        })
        .collect();
    ModelPoint::new(n, components).expect("orbit point components are nonzero")
}

/// The all-ones representative of the orbit labelled by `chain`.
pub fn orbit_representative(chain: &SubsetChain) -> ModelPoint {
    orbit_point_with(chain, |_, _| Rational::one())
}

/// `a_k^{K_ℓ} = 0` for all `k ∈ K_{ℓ+1}`: only the `K_ℓ`-components are
/// constrained. Every point in the orbit closure of `chain` satisfies these,
/// but they do not cut the closure out on their own; see [`in_orbit_closure`].
pub fn satisfies_block_equations(p: &ModelPoint, chain: &SubsetChain) -> bool {
    chain
        .blocks()
        .windows(2)
        .filter(|w| !w[0].is_empty())
        .all(|w| w[1].indices().all(|k| p.coord(w[0], k).is_zero()))
}

/// Membership in the closure of the orbit of `chain`: for every nonempty `I`
/// at level `s` (so `I ⊆ K_s`, `I ⊄ K_{s+1}`), `a_k^I = 0` for all
/// `k ∈ I ∩ K_{s+1}`.
pub fn in_orbit_closure(p: &ModelPoint, chain: &SubsetChain) -> bool {
    let blocks = chain.blocks();
    p.components().all(|(&subset, _)| {
        let s = chain.level_of_subset(subset);
        subset.indices().filter(|&k| blocks[s + 1].contains_index(k)).all(|k| p.coord(subset, k).is_zero())
    })
}

/// A monomial `coefficient · t^exponent`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub coefficient: Rational,
    pub exponent: usize,
}

/// Result of checking `lim_{t→0} ρ(q(t))` on one component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LimitCheck {
    pub subset: Subset,
    pub limit: Vec<Rational>,
    pub matches: bool,
}

/// A one-parameter family `q(t)` in the torus with `ρ(q(t)) → p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegenerationWitness {
    pub orbit: OrbitLabel,
    /// `a_i(t) = t^s a_i^{K_s}` for `i ∈ K_s \ K_{s+1}`, levels counted from 1.
    pub family: Vec<Monomial>,
    pub checks: Vec<LimitCheck>,
}

impl DegenerationWitness {
    pub fn verified(&self) -> bool {
        self.checks.iter().all(|c| c.matches)
    }

    /// The first component whose limit disagrees with the point.
    pub fn first_failure(&self) -> Option<Subset> {
        self.checks.iter().find(|c| !c.matches).map(|c| c.subset)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "orbit": self.orbit.chain,
            "family": self.family.iter().map(|m| json!({
                "coefficient": rational::format(&m.coefficient),
                "exponent": m.exponent,
            })).collect::<Vec<_>>(),
            "verified": self.verified(),
            "failures": self.checks.iter().filter(|c| !c.matches).map(|c| c.subset.elements()).collect::<Vec<_>>(),
        })
    }
}

/// Builds `q(t)` and checks, for each `I`, that the `I`-restriction of `q(t)`
/// divided by its lowest power of `t` and evaluated at `t = 0` is
/// projectively the `I`-component of `p`.
pub fn degeneration_witness(p: &ModelPoint) -> Result<DegenerationWitness, Error> {
    let orbit = orbit_of(p)?;
    let chain = &orbit.chain;
    let family: Vec<Monomial> = (0..p.n)
        .map(|i| {
            let s = chain.level_of_index(i);
            Monomial { coefficient: p.coord(chain.blocks()[s], i).clone(), exponent: s + 1 }
        })
        .collect();
    let mut checks = Vec::new();
    for (&subset, coords) in &p.components {
        let restricted: Vec<&Monomial> = subset.indices().map(|i| &family[i]).collect();
        let lowest = restricted.iter().map(|m| m.exponent).min().expect("nonempty subset");
        let limit: Vec<Rational> = restricted
            .iter()
            .map(|m| if m.exponent == lowest { m.coefficient.clone() } else { Rational::zero() })
            .collect();
        let in_torus = restricted.iter().all(|m| !m.coefficient.is_zero());
        let matches = in_torus && projectively_equal(&limit, coords);
        checks.push(LimitCheck { subset, limit, matches });
    }
    Ok(DegenerationWitness { orbit, family, checks })
}

/// Torus action `[a_i^I] ↦ [a_i a_i^I]`.
pub fn torus_act(g: &TorusElement, p: &ModelPoint) -> ModelPoint {
    assert_eq!(g.n(), p.n, "torus element and point live over different n");
    let components = p
        .components
        .iter()
        .map(|(&s, c)| (s, s.indices().zip(c).map(|(i, x)| &g.0[i] * x).collect()))
        .collect();
    ModelPoint::new(p.n, components).expect("scaling by nonzero entries keeps tuples nonzero")
}

/// Permutation action moving the `I`-component to `w(I)`, with
/// `[a_i^I]_{i∈I} ↦ [a_{w^{-1}(j)}^I]_{j∈w(I)}`.
pub fn permutation_act(w: &Permutation, p: &ModelPoint) -> ModelPoint {
    assert_eq!(w.n(), p.n, "permutation and point live over different n");
    let inv = w.inverse();
    let components = p
        .components
        .keys()
        .map(|&s| {
            let image = s.permute(w.images());
            (image, image.indices().map(|j| p.coord(s, inv.apply(j)).clone()).collect())
        })
        .collect();
    ModelPoint::new(p.n, components).expect("relabelling keeps tuples nonzero")
}

/// Either kind of group element acting on `Y_n`.
#[derive(Clone, Debug)]
pub enum GroupElement {
    Torus(TorusElement),
    Permutation(Permutation),
}

pub fn group_act(g: &GroupElement, p: &ModelPoint) -> ModelPoint {
    match g {
        GroupElement::Torus(t) => torus_act(t, p),
        GroupElement::Permutation(w) => permutation_act(w, p),
    }
}

/// `Σ_chains (-2)^{n-m}`: each orbit is a real torus of dimension `n - m`, and
/// `R^×` has compactly supported Euler characteristic `-2`. Chains with
/// `m + 1` blocks are counted as ordered set partitions into `m` blocks.
pub fn euler_characteristic_cells(n: usize) -> i64 {
    (1..=n)
        .map(|m| ordered_set_partitions(n, m) as i64 * (-2i64).pow((n - m) as u32))
        .sum()
}

/// Same sum, enumerating every chain explicitly.
pub fn euler_characteristic_cells_enumerated(n: usize) -> i64 {
    (1..=n)
        .flat_map(|m| enumerate_chains(n, m))
        .map(|c| (-2i64).pow((c.n() - c.m()) as u32))
        .sum()
}

/// `Σ_i (-1)^i A_{2i} C(n, 2i)`.
pub fn euler_characteristic_betti(n: usize) -> BigInt {
    (0..=n / 2)
        .map(|i| {
            let b = crate::cohomology::betti(n, i);
            if i % 2 == 0 {
                b
            } else {
                -b
            }
        })
        .sum()
}

/// `true` iff `a` refines `b`: every block of `b` is a block of `a`. The
/// orbit of `a` then lies in the closure of the orbit of `b`.
pub fn closure_refinement(a: &SubsetChain, b: &SubsetChain) -> bool {
    a.n() == b.n() && b.blocks().iter().all(|x| a.blocks().contains(x))
}

/// A random nonzero rational with small numerator and denominator.
pub fn random_nonzero<R: Rng>(rng: &mut R) -> Rational {
    let num: i64 = loop {
        let x = rng.gen_range(-9..=9);
        if x != 0 {
            break x;
        }
    };
    Rational::new(BigInt::from(num), BigInt::from(rng.gen_range(1..=5)))
}

pub fn random_torus_element<R: Rng>(n: usize, rng: &mut R) -> TorusElement {
    TorusElement::new((0..n).map(|_| random_nonzero(rng)).collect()).expect("nonzero entries")
}

pub fn random_permutation<R: Rng>(n: usize, rng: &mut R) -> Permutation {
    let mut w: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        w.swap(i, rng.gen_range(0..=i));
    }
    Permutation::new(w).expect("shuffled identity")
}

/// Applies random torus elements and permutations to `p` and checks that
/// membership is preserved, torus orbits are unchanged, and permutations act
/// on orbit labels blockwise.
pub fn equivariance_check<R: Rng>(p: &ModelPoint, trials: usize, rng: &mut R) -> Result<Option<Discrepancy>, Error> {
    let on_model = is_on_model(p);
    let orbit = if on_model { Some(orbit_of(p)?) } else { None };
    for trial in 0..trials {
        let g = random_torus_element(p.n, rng);
        let moved = torus_act(&g, p);
        if is_on_model(&moved) != on_model {
            return Ok(Some(Discrepancy::new(format!("torus trial {trial}"), &on_model, &!on_model)));
        }
        if let Some(o) = &orbit {
            let o2 = orbit_of(&moved)?;
            if &o2 != o {
                return Ok(Some(Discrepancy::new(format!("torus trial {trial}"), &o.chain, &o2.chain)));
            }
        }
        let w = random_permutation(p.n, rng);
        let moved = permutation_act(&w, p);
        if is_on_model(&moved) != on_model {
            return Ok(Some(Discrepancy::new(format!("permutation trial {trial}"), &on_model, &!on_model)));
        }
        if let Some(o) = &orbit {
            let expect = o.chain.permute(w.images());
            let got = orbit_of(&moved)?.chain;
            if got != expect {
                return Ok(Some(Discrepancy::new(format!("permutation trial {trial}"), &expect, &got)));
            }
        }
    }
    Ok(None)
}

/// Number of components `2^n - 1` and defining-equation pairs `3^n - 2^n`
/// (pairs `∅ ≠ I ⊊ J`); used for reporting.
pub fn equation_counts(n: usize) -> (u64, u64) {
    let components = (1u64 << n) - 1;
    let pairs: u64 = (1..=n).map(|j| binomial(n, j) * ((1u64 << j) - 2)).sum();
    (components, pairs)
}
