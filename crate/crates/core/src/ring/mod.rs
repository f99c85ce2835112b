//! Exact coefficient domains and sparse multivariate polynomials.
//!
//! The coefficient ladder is `Rat ⊂ CPoly ⊂ RatFunc`, plus cyclotomic
//! extensions `Cyclo<Rat>` and `Cyclo<CPoly>`. Moving between domains is
//! always an explicit call.

pub mod cpoly;
mod cyclo;
mod mpoly;
mod rat;
mod ratfunc;
pub mod structured;
pub mod text;
mod upoly;

pub use cpoly::{CPoly, PExp};
pub use cyclo::{cyclotomic_polynomial, Cyclo, QZeta};
pub use mpoly::{monomials_of_degree, vars, Degree, MPoly, Mono, Vars};
pub use rat::{q, Rat};
pub use ratfunc::RatFunc;
pub use upoly::{rational_roots, UPoly};

use crate::error::Result;
use std::fmt::Debug;

/// How a coefficient prints inside a polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoeffText {
    /// A signed single term; `magnitude == "1"` means a bare unit.
    Atom { negative: bool, magnitude: String },
    /// A sum that has to be parenthesised when used as a factor.
    Compound(String),
}

/// A commutative ring with exact arithmetic.
pub trait Ring: Clone + PartialEq + Eq + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_rat(r: &Rat) -> Self;

    /// Exact quotient `self / d` when it exists in the ring.
    fn div_exact(&self, d: &Self) -> Option<Self>;

    /// Embedding of an element of ℚ(ζ_m). Domains without ζ accept only
    /// rational inputs.
    fn from_qzeta(x: &QZeta) -> Option<Self> {
        x.as_scalar().map(|r| Self::from_rat(&r))
    }

    fn text(&self) -> CoeffText;
    fn to_json(&self) -> serde_json::Value;
    fn from_json(v: &serde_json::Value) -> Result<Self>;

    /// Rough size, used to prefer cheap pivots during fraction-free elimination.
    fn weight(&self) -> usize {
        1
    }

    /// The rational value of a scalar element, if it is one.
    fn as_rat(&self) -> Option<Rat> {
        None
    }

    fn from_i64(n: i64) -> Self {
        Self::from_rat(&Rat::from(n))
    }
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

/// Rings whose nonzero elements are all invertible.
pub trait Field: Ring {
    fn inv(&self) -> Self;
    fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }
}

/// Rings that know the Cherednik parameters c₁, c₂ as elements.
pub trait ParamRing: Ring {
    fn param(index: usize) -> Self;
}

/// Evaluation of the parameters at rational values (the map ev_c).
pub trait Specialize: Ring {
    type Target: Ring;
    fn specialize(&self, values: &[Rat]) -> Result<Self::Target>;
}
