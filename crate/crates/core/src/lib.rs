//! Exact computations with wreath products `G_n = G^n ⋊ S_n`, their
//! affine Hecke algebras `H_n(G)`, cyclotomic quotients, explicit modules
//! over finite fields, and the affine crystals governing modular branching.

pub mod crystal;
pub mod cyclotomic;
pub mod error;
pub mod groups;
pub mod hecke;
pub mod linalg;
pub mod partition;
pub mod perm;
pub mod report;
pub mod repmod;
pub mod scalars;
pub mod wreath;

pub use error::{Error, Result};
pub use scalars::{Field, FieldSpec, Fq};
