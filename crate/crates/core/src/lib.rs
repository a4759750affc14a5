//! Affine almost positive roots, compatibility degrees, cluster fans,
//! and a seed-mutation oracle.

pub mod almost_positive;
pub mod cartan;
pub mod cluster;
pub mod compat;
pub mod coxeter;
pub mod error;
pub mod finite;
pub mod laurent;
pub mod linalg;
pub mod nu;
pub mod oracle;
pub mod roots;
pub mod suite;
pub mod svg;
pub mod table;

pub use error::{Error, Result};
