//! Hereditarily finite sets, von Neumann ordinals, free term algebras over
//! finite signatures, and the graded von Neumann construction that realizes
//! a free algebra of any signature inside the hereditarily finite sets.

pub mod hf;
pub mod iterative;
pub mod ordinals;
pub mod term;
pub mod vnn;
