use super::{CPoly, CoeffText, Field, ParamRing, Rat, Ring, Specialize};
use crate::error::{AlgebraError, Result};
use std::fmt;

/// Element of ℚ(c₁, c₂), kept reduced with a monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: CPoly,
    den: CPoly,
}

impl RatFunc {
    pub fn new(num: CPoly, den: CPoly) -> Result<RatFunc> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: CPoly, den: CPoly) -> RatFunc {
        if num.is_zero() {
            return RatFunc { num, den: CPoly::one() };
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        let lc = d.leading_coeff();
        if !lc.is_one() {
            let inv = lc.recip();
            n = n.scale(&inv);
            d = d.scale(&inv);
        }
        RatFunc { num: n, den: d }
    }

    pub fn from_poly(p: CPoly) -> RatFunc {
        RatFunc { num: p, den: CPoly::one() }
    }

    pub fn numer(&self) -> &CPoly {
        &self.num
    }

    pub fn denom(&self) -> &CPoly {
        &self.den
    }

    /// The polynomial this element equals, if the denominator is constant.
    pub fn as_poly(&self) -> Option<CPoly> {
        self.den.is_one().then(|| self.num.clone())
    }

    pub fn eval(&self, values: &[Rat]) -> Result<Rat> {
        let d = self.den.eval(values)?;
        if d.is_zero() {
            return Err(AlgebraError::SingularEvaluation(format!(
                "denominator {} vanishes",
                self.den
            )));
        }
        Ok(self.num.eval(values)?.mul(&d.recip()))
    }

    pub fn render(&self) -> String {
        if self.den.is_one() {
            self.num.render()
        } else {
            format!("({})/({})", self.num.render(), self.den.render())
        }
    }
}

impl Ring for RatFunc {
    fn zero() -> Self {
        Self::from_poly(CPoly::zero())
    }
    fn one() -> Self {
        Self::from_poly(CPoly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return Self::reduced(self.num.add(&o.num), self.den.clone());
        }
        Self::reduced(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        if self.den.is_one() && o.den.is_one() {
            return Self::from_poly(self.num.mul(&o.num));
        }
        Self::reduced(self.num.mul(&o.num), self.den.mul(&o.den))
    }
    fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }
    fn from_rat(r: &Rat) -> Self {
        Self::from_poly(CPoly::from_rat(r))
    }
    fn as_rat(&self) -> Option<Rat> {
        self.as_poly().and_then(|p| p.constant_value())
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            None
        } else {
            Some(self.div(d))
        }
    }
    fn text(&self) -> CoeffText {
        if self.den.is_one() {
            self.num.text()
        } else {
            CoeffText::Compound(self.render())
        }
    }
    fn to_json(&self) -> serde_json::Value {
        serde_json::json!({"num": self.num.to_json(), "den": self.den.to_json()})
    }
    fn from_json(v: &serde_json::Value) -> Result<Self> {
        match (v.get("num"), v.get("den")) {
            (Some(n), Some(d)) if n.is_object() => {
                RatFunc::new(CPoly::from_json(n)?, CPoly::from_json(d)?)
            }
            _ => Ok(Self::from_poly(CPoly::from_json(v)?)),
        }
    }
}

impl Field for RatFunc {
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        Self::reduced(self.den.clone(), self.num.clone())
    }
}

impl ParamRing for RatFunc {
    fn param(index: usize) -> Self {
        Self::from_poly(CPoly::param(index))
    }
}

impl Specialize for RatFunc {
    type Target = Rat;
    fn specialize(&self, values: &[Rat]) -> Result<Rat> {
        self.eval(values)
    }
}

impl From<CPoly> for RatFunc {
    fn from(p: CPoly) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat::q;

    #[test]
    fn cancels_common_factors() {
        let c = CPoly::param(0);
        let one = CPoly::one();
        let a = c.mul(&c).sub(&one);
        let b = c.sub(&one).scale(&q(2, 1));
        let r = RatFunc::new(a, b).unwrap();
        assert_eq!(r.render(), "1/2*c1+1/2");
        assert_eq!(r.eval(&[q(3, 1)]).unwrap(), q(2, 1));
    }

    #[test]
    fn singular_specialization_is_reported() {
        let c = CPoly::param(0);
        let r = RatFunc::new(CPoly::one(), c.sub(&CPoly::constant(q(1, 3)))).unwrap();
        assert!(matches!(r.eval(&[q(1, 3)]), Err(AlgebraError::SingularEvaluation(_))));
    }
}
