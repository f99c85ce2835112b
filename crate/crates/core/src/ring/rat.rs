use super::{CoeffText, Field, Ring, Specialize};
use crate::error::{AlgebraError, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

/// Arbitrary-precision rational number in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rat(BigRational);

impl Rat {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Rat {
        Rat(BigRational::new(num.into(), den.into()))
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Result<Rat> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Rat(BigRational::new(num, den)))
    }

    pub fn integer(n: impl Into<BigInt>) -> Rat {
        Rat(BigRational::from_integer(n.into()))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }

    pub fn recip(&self) -> Rat {
        Rat(self.0.recip())
    }

    pub fn signum(&self) -> i32 {
        match self.0.cmp(&BigRational::zero()) {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        }
    }

    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn inner(&self) -> &BigRational {
        &self.0
    }

    pub fn powi(&self, e: i32) -> Rat {
        if e >= 0 {
            Ring::pow(self, e as u32)
        } else {
            Ring::pow(&self.recip(), (-e) as u32)
        }
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Rat {
        Rat::integer(n)
    }
}

impl From<BigInt> for Rat {
    fn from(n: BigInt) -> Rat {
        Rat(BigRational::from_integer(n))
    }
}

impl FromStr for Rat {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Rat> {
        let s = s.trim();
        let bad = || AlgebraError::Parse(format!("not a rational: {s:?}"));
        match s.split_once('/') {
            Some((n, d)) => {
                let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
                let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
                Rat::from_big(n, d)
            }
            None => Ok(Rat::from(BigInt::from_str(s).map_err(|_| bad())?)),
        }
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Ring for Rat {
    fn zero() -> Self {
        Rat(BigRational::zero())
    }
    fn one() -> Self {
        Rat(BigRational::one())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        Rat(&self.0 + &o.0)
    }
    fn sub(&self, o: &Self) -> Self {
        Rat(&self.0 - &o.0)
    }
    fn mul(&self, o: &Self) -> Self {
        Rat(&self.0 * &o.0)
    }
    fn neg(&self) -> Self {
        Rat(-&self.0)
    }
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            None
        } else {
            Some(Rat(&self.0 / &d.0))
        }
    }
    fn is_one(&self) -> bool {
        self.0.is_one()
    }
    fn as_rat(&self) -> Option<Rat> {
        Some(self.clone())
    }
    fn text(&self) -> CoeffText {
        CoeffText::Atom {
            negative: self.is_negative(),
            magnitude: self.abs().to_string(),
        }
    }
    fn to_json(&self) -> serde_json::Value {
        serde_json::json!({"num": self.numer().to_string(), "den": self.denom().to_string()})
    }
    fn from_json(v: &serde_json::Value) -> Result<Self> {
        let field = |k: &str| -> Result<BigInt> {
            let raw = v
                .get(k)
                .ok_or_else(|| AlgebraError::Parse(format!("rational without `{k}`")))?;
            let s = match raw {
                serde_json::Value::String(s) => s.clone(),
                serde_json::Value::Number(n) => n.to_string(),
                _ => return Err(AlgebraError::Parse(format!("bad `{k}` in rational"))),
            };
            BigInt::from_str(&s).map_err(|_| AlgebraError::Parse(format!("bad integer {s:?}")))
        };
        let (num, den) = (field("num")?, field("den")?);
        let r = Rat::from_big(num.clone(), den.clone())?;
        // Canonical form is required on input so that round trips are exact.
        if r.numer() != &num || r.denom() != &den {
            return Err(AlgebraError::Parse("rational not in lowest terms".into()));
        }
        Ok(r)
    }
}

impl Field for Rat {
    fn inv(&self) -> Self {
        self.recip()
    }
}

impl Specialize for Rat {
    type Target = Rat;
    fn specialize(&self, _values: &[Rat]) -> Result<Rat> {
        Ok(self.clone())
    }
}

/// Shorthand used throughout tests and suites.
pub fn q(n: i64, d: i64) -> Rat {
    Rat::new(n, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms() {
        let r = Rat::new(6, -4);
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!(r.denom(), &BigInt::from(2));
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "-7", "3/4", "-12/5"] {
            let r: Rat = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
        assert!("1/0".parse::<Rat>().is_err());
    }

    #[test]
    fn json_round_trip() {
        let r = Rat::new(-22, 7);
        assert_eq!(Rat::from_json(&r.to_json()).unwrap(), r);
    }
}
