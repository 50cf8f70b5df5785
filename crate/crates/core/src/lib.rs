//! Exact construction and classification of the discrete-symmetry (CPT) groups
//! of spinor fields, over Brauer–Weyl Clifford bases.

pub mod autosolve;
pub mod catalog;
pub mod cli;
pub mod cptgroup;
pub mod error;
pub mod exactnum;
pub mod golden;
pub mod lorentzrep;
pub mod multivector;
pub mod spinbasis;

pub use error::{Error, Result};
