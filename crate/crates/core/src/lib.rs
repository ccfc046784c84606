//! Exact construction and verification of the univariate Racah polynomials
//! and the bivariate Tratnik and Griffiths polynomials of Racah type.

pub mod error;
pub mod exactnum;

pub use error::{Error, Result};
pub mod bivariate;
pub mod domains;
pub mod griffiths;
pub mod interp;
pub mod limits;
pub mod racah_uni;
pub mod report;
pub mod tratnik;
pub mod wigner;
