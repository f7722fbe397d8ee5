pub mod algebra;
pub mod corpus;
pub mod endotriv;
pub mod fincat;
pub mod linfield;
pub mod oracle;
pub mod presentations;
pub mod reptype;

pub use algebra::{category_algebra, AlgebraError, ExtQuiver, IdempotentDecomposition, StructureAlgebra};
pub use endotriv::{endotrivialize, is_endotrivial, EndotrivError, Endotrivialization};
pub use fincat::{CategoryError, FiniteCategory, Functor, Group, HomAction, ObjectPoset};
pub use linfield::{Elem, Field, FieldError, FieldSpec, Matrix, Poly, Subspace};
pub use oracle::{OracleError, RepSystem, Representation};
pub use reptype::{classify, classify_coprime, ClassifyOptions, OracleMode, RepTypeVerdict, RuleId, Verdict};
