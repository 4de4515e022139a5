//! Mod-2 modular forms of level 1, 3 and 5 and the finite-scale structure of
//! their Hecke algebras.

pub mod arith;
pub mod error;
pub mod f2la;
pub mod fps2;
pub mod galois;
pub mod genforms;
pub mod heckeq;
pub mod recur;
pub mod spaces;
pub mod structure;
pub mod tangent;
pub mod verify;
mod words;

pub use error::{Error, Result};
pub use f2la::BitMatrix;
pub use fps2::QExpansion;
pub use genforms::{GenName, GeneratorId};
pub use heckeq::{OpKind, OpSpec};
pub use recur::{CompanionPoly, F2Poly, PolyCoord};
