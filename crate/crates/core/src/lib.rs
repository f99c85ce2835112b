//! Exact computations with Dunkl operators for the symmetric and dihedral
//! reflection groups: quasiharmonic polynomials, deformed invariants,
//! explicit dihedral families and standard Frobenius algebras.

pub mod error;
pub mod frobenius;
pub mod coxeter;
pub mod dihedral;
pub mod dunkl;
pub mod linsolve;
pub mod quasiharmonic;
pub mod ring;

pub use error::{AlgebraError, Result};
pub use ring::{CPoly, Cyclo, Degree, MPoly, Mono, QZeta, Rat, RatFunc, Ring, Vars};
