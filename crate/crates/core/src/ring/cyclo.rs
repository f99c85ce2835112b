//! Cyclotomic extensions R[ζ_m] = R[t]/Φ_m(t) over a coefficient ring R ⊇ ℚ.

use super::{CoeffText, CPoly, Field, ParamRing, Rat, Ring, Specialize, UPoly};
use crate::error::{AlgebraError, Result};
use num_integer::Integer;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

/// ℚ(ζ_m).
pub type QZeta = Cyclo<Rat>;

fn cache() -> &'static Mutex<HashMap<u32, UPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, UPoly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Φ_m(t), obtained by dividing t^m − 1 by Φ_d for every proper divisor d.
pub fn cyclotomic_polynomial(m: u32) -> UPoly {
    assert!(m >= 1, "cyclotomic index must be positive");
    if let Some(p) = cache().lock().unwrap().get(&m) {
        return p.clone();
    }
    let mut cs = vec![Rat::zero(); m as usize + 1];
    cs[0] = Rat::from(-1);
    cs[m as usize] = Rat::one();
    let mut p = UPoly::new(cs);
    for d in 1..m {
        if m.is_multiple_of(d) {
            let (quo, rem) = p.divrem(&cyclotomic_polynomial(d));
            debug_assert!(rem.is_zero());
            p = quo;
        }
    }
    cache().lock().unwrap().insert(m, p.clone());
    p
}

/// Σ coeffs[i]·ζ_m^i, reduced modulo Φ_m. Scalars are stored with `m = 0`
/// so that `zero()` and `one()` need no ambient order.
#[derive(Clone)]
pub struct Cyclo<R: Ring> {
    m: u32,
    coeffs: Vec<R>,
}

impl<R: Ring> Cyclo<R> {
    pub fn scalar(r: R) -> Self {
        let coeffs = if r.is_zero() { Vec::new() } else { vec![r] };
        Cyclo { m: 0, coeffs }
    }

    /// ζ_m^k for any integer k.
    pub fn zeta_pow(m: u32, k: i64) -> Self {
        let e = k.rem_euclid(m as i64) as usize;
        let mut coeffs = vec![R::zero(); e + 1];
        coeffs[e] = R::one();
        Self::from_coeffs(m, coeffs)
    }

    pub fn from_coeffs(m: u32, coeffs: Vec<R>) -> Self {
        let mut out = Cyclo { m, coeffs };
        out.reduce();
        out
    }

    pub fn order(&self) -> u32 {
        self.m
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn as_scalar(&self) -> Option<R> {
        match self.coeffs.len() {
            0 => Some(R::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    fn reduce(&mut self) {
        if self.m > 1 {
            let phi = cyclotomic_polynomial(self.m);
            let deg = phi.degree().unwrap();
            let pc: Vec<R> = phi.coeffs().iter().map(R::from_rat).collect();
            for k in (deg..self.coeffs.len()).rev() {
                let top = std::mem::replace(&mut self.coeffs[k], R::zero());
                if top.is_zero() {
                    continue;
                }
                for (j, p) in pc.iter().enumerate().take(deg) {
                    let idx = k - deg + j;
                    self.coeffs[idx] = self.coeffs[idx].sub(&top.mul(p));
                }
            }
        } else if self.m == 1 && self.coeffs.len() > 1 {
            let sum = self.coeffs.iter().fold(R::zero(), |a, b| a.add(b));
            self.coeffs = vec![sum];
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        if self.coeffs.len() <= 1 {
            self.m = 0;
        }
    }

    /// Re-expresses in ℚ(ζ_target) for target a multiple of the current order.
    fn lift(&self, target: u32) -> Self {
        if self.m == 0 || self.m == target {
            return Cyclo { m: target, coeffs: self.coeffs.clone() };
        }
        let step = (target / self.m) as usize;
        let mut coeffs = vec![R::zero(); (self.coeffs.len() - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * step] = c.clone();
        }
        Self::from_coeffs(target, coeffs)
    }

    fn common(&self, o: &Self) -> (Self, Self, u32) {
        let m = match (self.m, o.m) {
            (0, b) => b,
            (a, 0) => a,
            (a, b) => a.lcm(&b),
        };
        (self.lift(m), o.lift(m), m)
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Cyclo<S> {
        Cyclo::from_coeffs(self.m, self.coeffs.iter().map(f).collect())
    }

    /// Complex conjugation ζ ↦ ζ^{-1}.
    pub fn conj(&self) -> Self {
        if self.m == 0 {
            return self.clone();
        }
        let m = self.m as usize;
        let mut coeffs = vec![R::zero(); m];
        for (i, c) in self.coeffs.iter().enumerate() {
            let j = (m - i) % m;
            coeffs[j] = coeffs[j].add(c);
        }
        Self::from_coeffs(self.m, coeffs)
    }

    fn render(&self) -> String {
        let mut parts: Vec<(bool, String)> = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "zeta".to_string(),
                _ => format!("zeta^{i}"),
            };
            parts.push(super::text::format_term(&c.text(), &mono));
        }
        super::text::join_terms(&parts, false)
    }
}

impl<R: Ring> PartialEq for Cyclo<R> {
    fn eq(&self, o: &Self) -> bool {
        // Non-scalars always carry their order, scalars carry 0.
        if self.m == o.m || self.m == 0 || o.m == 0 {
            return self.coeffs == o.coeffs;
        }
        let (a, b, _) = self.common(o);
        a.coeffs == b.coeffs
    }
}

impl<R: Ring> Eq for Cyclo<R> {}

impl<R: Ring> Ring for Cyclo<R> {
    fn zero() -> Self {
        Cyclo { m: 0, coeffs: Vec::new() }
    }
    fn one() -> Self {
        Self::scalar(R::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, o: &Self) -> Self {
        let (a, b, m) = self.common(o);
        let n = a.coeffs.len().max(b.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (a.coeffs.get(i), b.coeffs.get(i)) {
                (Some(x), Some(y)) => x.add(y),
                (Some(x), None) => x.clone(),
                (None, Some(y)) => y.clone(),
                (None, None) => R::zero(),
            })
            .collect();
        Self::from_coeffs(m, coeffs)
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let (a, b, m) = self.common(o);
        let mut coeffs = vec![R::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&x.mul(y));
            }
        }
        Self::from_coeffs(m, coeffs)
    }
    fn neg(&self) -> Self {
        Cyclo { m: self.m, coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }
    fn from_rat(r: &Rat) -> Self {
        Self::scalar(R::from_rat(r))
    }
    fn as_rat(&self) -> Option<Rat> {
        self.as_scalar().and_then(|s| s.as_rat())
    }
    fn from_qzeta(x: &QZeta) -> Option<Self> {
        Some(Cyclo::from_coeffs(x.m, x.coeffs.iter().map(R::from_rat).collect()))
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        if let Some(s) = d.as_scalar() {
            if s.is_zero() {
                return None;
            }
            let coeffs: Option<Vec<R>> = self.coeffs.iter().map(|c| c.div_exact(&s)).collect();
            return Some(Cyclo { m: self.m, coeffs: coeffs? });
        }
        // Divisors with rational coefficients are inverted in ℚ(ζ_m).
        let rational: Option<Vec<Rat>> = d.coeffs.iter().map(|c| c.as_rat()).collect();
        let inv = Cyclo::from_coeffs(d.m, rational?).inv();
        Some(self.mul(&Self::from_qzeta(&inv)?))
    }
    fn text(&self) -> CoeffText {
        if let Some(s) = self.as_scalar() {
            return s.text();
        }
        let nonzero: Vec<usize> = (0..self.coeffs.len()).filter(|&i| !self.coeffs[i].is_zero()).collect();
        if nonzero.len() == 1 {
            let (neg, body) = super::text::format_term(
                &self.coeffs[nonzero[0]].text(),
                &if nonzero[0] == 1 { "zeta".to_string() } else { format!("zeta^{}", nonzero[0]) },
            );
            return CoeffText::Atom { negative: neg, magnitude: body };
        }
        CoeffText::Compound(self.render())
    }
    fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "zeta": self.m,
            "coeffs": self.coeffs.iter().map(|c| c.to_json()).collect::<Vec<_>>()
        })
    }
    fn from_json(v: &serde_json::Value) -> Result<Self> {
        let (Some(m), Some(cs)) = (v.get("zeta").and_then(|x| x.as_u64()), v.get("coeffs").and_then(|x| x.as_array()))
        else {
            return Ok(Self::scalar(R::from_json(v)?));
        };
        let coeffs: Result<Vec<R>> = cs.iter().map(R::from_json).collect();
        Ok(Self::from_coeffs(m as u32, coeffs?))
    }
}

impl Field for QZeta {
    fn inv(&self) -> Self {
        if let Some(s) = self.as_scalar() {
            assert!(!s.is_zero(), "inverse of zero");
            return Self::scalar(s.recip());
        }
        let phi = cyclotomic_polynomial(self.m);
        let a = UPoly::new(self.coeffs.clone());
        let (g, s, _) = a.ext_gcd(&phi);
        // Φ_m is irreducible, so a nonzero residue is coprime to it.
        assert_eq!(g.degree(), Some(0), "residue not invertible");
        let s = s.scale(&g.lead().recip());
        Self::from_coeffs(self.m, s.coeffs().to_vec())
    }
}

impl<R: ParamRing> ParamRing for Cyclo<R> {
    fn param(index: usize) -> Self {
        Self::scalar(R::param(index))
    }
}

impl<R: Specialize<Target = Rat>> Specialize for Cyclo<R> {
    type Target = QZeta;
    fn specialize(&self, values: &[Rat]) -> Result<QZeta> {
        let coeffs: Result<Vec<Rat>> = self.coeffs.iter().map(|c| c.specialize(values)).collect();
        Ok(Cyclo::from_coeffs(self.m, coeffs?))
    }
}

impl Cyclo<CPoly> {
    /// Splits into rational parameter polynomials when ζ does not occur.
    pub fn into_cpoly(self) -> Result<CPoly> {
        self.as_scalar()
            .ok_or_else(|| AlgebraError::DomainMismatch(format!("{self:?} involves zeta")))
    }
}

impl QZeta {
    pub fn into_rat(self) -> Result<Rat> {
        self.as_scalar()
            .ok_or_else(|| AlgebraError::DomainMismatch(format!("{self:?} involves zeta")))
    }
}

impl<R: Ring> fmt::Debug for Cyclo<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_polynomial(4), UPoly::from_i64(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(3), UPoly::from_i64(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(6), UPoly::from_i64(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), UPoly::from_i64(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn zeta_relations() {
        for m in 2..=12u32 {
            let z = QZeta::zeta_pow(m, 1);
            assert_eq!(z.pow(m), QZeta::one());
            let sum = (0..m).fold(QZeta::zero(), |acc, k| acc.add(&QZeta::zeta_pow(m, k as i64)));
            assert!(sum.is_zero(), "m = {m}");
        }
    }

    #[test]
    fn inverse_and_conjugate() {
        let m = 5;
        let x = QZeta::from_coeffs(m, vec![Rat::from(2), Rat::from(-1), Rat::zero(), Rat::from(3)]);
        assert_eq!(x.mul(&x.inv()), QZeta::one());
        let z = QZeta::zeta_pow(m, 1);
        assert_eq!(z.conj(), QZeta::zeta_pow(m, -1));
        // ζ + ζ^{-1} is real.
        let re = z.add(&z.conj());
        assert_eq!(re.conj(), re);
    }

    #[test]
    fn mixed_orders_lift() {
        let i = QZeta::zeta_pow(4, 1);
        let w = QZeta::zeta_pow(12, 3);
        assert_eq!(i, w);
        assert_eq!(i.mul(&QZeta::zeta_pow(3, 1)), QZeta::zeta_pow(12, 7));
    }
}
