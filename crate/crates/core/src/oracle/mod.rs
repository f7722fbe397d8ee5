//! Brute-force representation theory over small finite fields:
//! enumeration, isomorphism, indecomposability, counting, and explicit
//! module families.

mod count;
mod endo;
mod family;
mod system;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use count::{
    count_indecomposables, count_indecomposables_naive, enumerate_reps, for_each_rep, gl_order, CountOptions,
    OracleReport, DEFAULT_BUDGET,
};
pub use endo::{are_isomorphic, aut_count, end_basis, hom_basis, is_indecomposable, split};
pub use family::{
    a_lambda, build_family, group_modules, induce_from_product, FamilyRegime, FamilyWitness, GroupModule, ProductModule,
};
pub use system::{is_functor, RepSystem, SystemRelation};

use crate::algebra::AlgebraError;
use crate::fincat::CategoryError;
use crate::linfield::{Field, Matrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Category(#[from] CategoryError),
    #[error("search space of size {size} exceeds the budget {budget}")]
    BudgetExceeded { size: u128, budget: u128 },
    #[error("dimension vector has {got} entries, expected {expected}")]
    DimensionMismatch { got: usize, expected: usize },
    #[error("the category does not match a family regime: {0}")]
    RegimeMismatch(String),
    #[error("the automorphism groups do not act freely on the hom set")]
    ActionNotFree,
    #[error("no suitable module found: {0}")]
    ModuleNotFound(String),
    #[error("malformed input: {0}")]
    Malformed(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepArrow {
    pub label: String,
    pub src: usize,
    pub tgt: usize,
}

/// A representation of a quiver-like diagram: one vector space per vertex
/// and one matrix per arrow, `maps[a]` of shape `dims[tgt] x dims[src]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub field: Field,
    pub vertices: Vec<String>,
    pub dims: Vec<usize>,
    pub arrows: Vec<RepArrow>,
    pub maps: Vec<Matrix>,
}

impl Representation {
    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// Shapes agree with the dimension vector.
    pub fn check_shapes(&self) -> Result<(), OracleError> {
        if self.maps.len() != self.arrows.len() {
            return Err(OracleError::Malformed("one matrix per arrow".into()));
        }
        for (a, m) in self.arrows.iter().zip(&self.maps) {
            if m.rows() != self.dims[a.tgt] || m.cols() != self.dims[a.src] {
                return Err(OracleError::Malformed(format!("matrix for {} has the wrong shape", a.label)));
            }
        }
        Ok(())
    }

    pub fn direct_sum(&self, other: &Representation) -> Representation {
        assert_eq!(self.arrows, other.arrows, "same diagram");
        Representation {
            field: self.field.clone(),
            vertices: self.vertices.clone(),
            dims: self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect(),
            arrows: self.arrows.clone(),
            maps: self.maps.iter().zip(&other.maps).map(|(a, b)| a.direct_sum(b)).collect(),
        }
    }

    /// Conjugates by per-vertex invertible matrices: `maps[a] -> P_t maps[a] P_s^{-1}`.
    pub fn conjugate(&self, p: &[Matrix]) -> Representation {
        let inv: Vec<Matrix> = p.iter().map(|m| m.inverse().expect("invertible change of basis")).collect();
        let maps = self.arrows.iter().zip(&self.maps).map(|(a, m)| p[a.tgt].mul(m).mul(&inv[a.src])).collect();
        Representation { maps, ..self.clone() }
    }

    pub fn matrix(&self, label: &str) -> Option<&Matrix> {
        self.arrows.iter().position(|a| a.label == label).map(|i| &self.maps[i])
    }

    /// Matrix entries as plain integers, row-major, per arrow.
    pub fn to_report(&self) -> RepresentationReport {
        RepresentationReport {
            dims: self.dims.clone(),
            maps: self
                .arrows
                .iter()
                .zip(&self.maps)
                .map(|(a, m)| (a.label.clone(), m.data().iter().map(|e| e.0).collect()))
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationReport {
    pub dims: Vec<usize>,
    pub maps: Vec<(String, Vec<u32>)>,
}

pub(crate) fn identity_or_empty(field: &Field, n: usize) -> Matrix {
    Matrix::identity(field, n)
}
