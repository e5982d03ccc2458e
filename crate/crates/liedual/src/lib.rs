//! Exact computations with compact symmetric triads and non-compact symmetric
//! pairs: the duality between them, ideal decompositions, restricted roots,
//! gradings of type K_epsilon and isotropy-module analysis.

#![allow(clippy::needless_range_loop, clippy::type_complexity)]

pub mod error;
pub mod exact;
pub mod lie;
pub mod invol;
pub mod ideals;
pub mod duality;
pub mod roots;
pub mod keps;
pub mod modrep;
pub mod catalog;

pub use error::{Error, Result};
pub use exact::{GMatrix, GaussRat, Matrix, QMatrix, Rat, Scalar, Signature};
pub use lie::{LieAlgebra, RealLieAlgebra, SubalgebraView, Subspace};
