//! Triassociative algebras, their representations and corepresentations,
//! and truncated free algebras.

pub mod free;
pub mod modules;
pub mod relations;
pub mod tensor;
pub mod trias;

pub use free::GradedFreeAlgebra;
pub use modules::{derivations, inner_derivation, inner_derivations, Corepresentation, RelationViolation, Representation, RepresentationViolation};
pub use relations::{Arg, Gen, UaExpr, UaRelation, UA_RELATIONS};
pub use tensor::{unit, Tensor3};
pub use trias::{Axiom, AxiomViolation, Op, TriasAlgebra, AXIOMS};
