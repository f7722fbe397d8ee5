//! Category algebras over finite fields and their structure: radical,
//! idempotents, Ext-quiver.

mod groups;
mod idempotents;
mod quiver;
mod radical;
mod structure;

use thiserror::Error;

pub use groups::{group_rep_finite, group_simple_count, is_trivial_or_p_group, sylow_order, sylow_p_cyclic};
pub use idempotents::{
    decompose, element_min_poly, is_local, lift_idempotent, primitive_idempotents, primitive_idempotents_split,
    unit_count, IdempotentDecomposition, IdempotentReport,
};
pub use quiver::{analyze, basic_algebra, ext_quiver, AlgebraAnalysis, ArrowEntry, BasicAlgebra, ExtQuiver};
pub use radical::{
    left_ideal_is_nilpotent, loewy_length, radical, radical_bounded, radical_exhaustive, radical_series,
    subspace_is_nilpotent, DEFAULT_DIM_BOUND,
};
pub use structure::{category_algebra, group_algebra, incidence_algebra, AlgebraJson, Sparse, StructureAlgebra};

use crate::linfield::FieldError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("multiplication is not associative on ({0}, {1}, {2})")]
    NotAssociative(String, String, String),
    #[error("unit does not act as identity on {0}")]
    NoUnit(String),
    #[error("dimension {dim} exceeds the bound {bound}")]
    DimensionBoundExceeded { dim: usize, bound: usize },
    #[error("semisimple quotient does not split; an extension of degree {degree} is needed")]
    NonSplit { degree: u32 },
    #[error("structure constants do not lie in the prime field")]
    ConstantsNotPrime,
    #[error("search budget {0} exceeded")]
    BudgetExceeded(u64),
    #[error("could not split a semisimple corner of dimension {0}")]
    SplitFailed(usize),
    #[error("idempotent lifting did not converge")]
    LiftFailed,
    #[error("integer overflow in a count")]
    Overflow,
    #[error("malformed algebra: {0}")]
    Malformed(String),
}
