//! Exact (co)homology, enveloping algebras and deformation theory for
//! triassociative algebras.

pub mod algebra;
pub mod cli;
pub mod complexes;
pub mod deform;
pub mod error;
pub mod fixtures;
pub mod io;
pub mod limits;
pub mod linalg;
pub mod trees;
pub mod uea;

pub use error::{Error, Result};
pub use limits::Limits;
