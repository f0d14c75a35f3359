//! Combinatorics of extended affine Weyl groups: quantum Bruhat graphs,
//! Bruhat order criteria, Demazure products and generic Newton points.

pub mod affine;
pub mod criteria;
pub mod demazure;
pub mod error;
pub mod format;
pub mod newton;
pub mod qbg;
pub mod rootsys;
pub mod semiaffine;
pub mod sweep;

pub use error::{Error, Result};
