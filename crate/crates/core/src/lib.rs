//! Rational cohomology of the real toric variety of the type-A Coxeter fan.
//!
//! The variety is handled through its wonderful-model description `Y_n`, a
//! closed subvariety of `∏_{∅≠I⊆[n]} P^I`. Every headline number is computed by
//! two independent routes:
//!
//! * Betti numbers `A_{2i}·C(n,2i)` against dimensions of symmetric-group
//!   representations and a cell count of the orbit stratification;
//! * the graded representation on cohomology from signed induction products
//!   (Pieri rules) against sign-twisted top homology of the even-subset
//!   lattice, itself obtained by brute-force order-complex homology and the
//!   Hopf trace formula;
//! * the degree-2 cup-product subspace through a Pieri rule against a direct
//!   signed-permutation character.

pub mod cli;
pub mod cohomology;
pub mod combinatorics;
pub mod cup_product;
pub mod error;
pub mod linalg;
pub mod poset_homology;
pub mod rational;
pub mod rep_ring;
pub mod wonderful_model;

pub use error::Error;

/// Exact rational numbers.
pub type Rational = num_rational::BigRational;

/// The first point at which two routes that should agree do not.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Discrepancy {
    pub location: String,
    pub left: String,
    pub right: String,
}

impl Discrepancy {
    pub fn new(
        location: impl Into<String>,
        left: &impl std::fmt::Display,
        right: &impl std::fmt::Display,
    ) -> Self {
        Discrepancy { location: location.into(), left: left.to_string(), right: right.to_string() }
    }
}
