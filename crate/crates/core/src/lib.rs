//! Permutation tableaux, alternative tableaux and tree-like tableaux, the
//! corners of their diagrams, and the permutation statistics they encode.

pub mod bijections;
pub mod diagrams;
pub mod error;
pub mod formulas;
pub mod permstats;
pub mod tableaux;

pub use diagrams::{Cell, Shape, ShiftedShape};
pub use error::{BijectionError, FormulaError, PermError, ShapeError, StructuralError, TableauError, Violation};
pub use permstats::{Permutation, SignedPermutation};
