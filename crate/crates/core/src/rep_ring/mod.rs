//! The representation ring `⊕_n R(S_n)` in the Schur basis, its truncated
//! polynomial extension `R[t]`, and the character-side oracle.

pub mod character;
pub mod schur;
pub mod series;

pub use character::{decompose, decompose_reporting, mn_character, to_class_function, ClassFunction};
pub use schur::SchurVector;
pub use series::RepSeries;
