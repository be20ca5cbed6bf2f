//! Exact decision procedures for simplicity, centers and Lie simplicity of
//! Leavitt path algebras, Steinberg algebras of finite groupoids and
//! Exel-Pardo algebras of self-similar actions, with an independent
//! Lie-ideal oracle over prime fields.

pub mod cli;
pub mod field;
pub mod fixtures;
pub mod graph;
pub mod groupoid;
pub mod lie;
pub mod lpa;
pub mod selfsimilar;
pub mod steinberg;
pub mod verdict;

pub use field::{FieldError, FieldSpec, Matrix, Scalar, Subspace};
pub use graph::{Graph, GraphDoc, GraphError, LpaSimplicity};
pub use groupoid::{FiniteGroupoid, GroupoidDoc, GroupoidError};
pub use lie::{AssociativeAlgebra, LieAlgebra, LieError, LieSimplicity};
pub use selfsimilar::{ActionDoc, SelfSimilarAction, SelfSimilarError};
pub use steinberg::SteinbergAlgebra;
pub use verdict::{CenterVerdict, LieVerdict};
