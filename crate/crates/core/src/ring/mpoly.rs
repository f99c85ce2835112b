use super::{Rat, Ring, Specialize};
use crate::error::{AlgebraError, Result};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// Shared, ordered variable names.
pub type Vars = Arc<[String]>;

pub fn vars(names: &[&str]) -> Vars {
    names.iter().map(|s| s.to_string()).collect::<Vec<_>>().into()
}

/// Exponent vector, ordered graded-lexicographically (variables in declaration order).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mono(pub Vec<u32>);

impl Mono {
    pub fn one(n: usize) -> Mono {
        Mono(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Mono {
        let mut e = vec![0; n];
        e[i] = 1;
        Mono(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, o: &Mono) -> Mono {
        Mono(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    /// `self / o` when `o` divides `self`.
    pub fn div(&self, o: &Mono) -> Option<Mono> {
        self.0
            .iter()
            .zip(&o.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Mono)
    }
}

impl Ord for Mono {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree().cmp(&o.degree()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// All monomials of total degree `d` in `n` variables, in descending term order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Mono> {
    fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Mono>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(Mono(prefix.clone()));
            prefix.pop();
            return;
        }
        for a in (0..=d).rev() {
            prefix.push(a);
            rec(n, d - a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Mono(Vec::new()));
        }
        return out;
    }
    rec(n, d, &mut Vec::new(), &mut out);
    out
}

/// Polynomial degree; the zero polynomial has degree −∞.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Degree {
    NegInfinity,
    Finite(u32),
}

impl Degree {
    pub fn finite(self) -> Option<u32> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

/// Sparse multivariate polynomial over a coefficient ring.
#[derive(Clone)]
pub struct MPoly<R: Ring> {
    vars: Vars,
    terms: BTreeMap<Mono, R>,
}

impl<R: Ring> PartialEq for MPoly<R> {
    fn eq(&self, o: &Self) -> bool {
        self.vars == o.vars && self.terms == o.terms
    }
}

impl<R: Ring> Eq for MPoly<R> {}

impl<R: Ring> MPoly<R> {
    pub fn zero(vars: &Vars) -> Self {
        MPoly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &Vars, c: R) -> Self {
        Self::monomial(vars, Mono::one(vars.len()), c)
    }

    pub fn one(vars: &Vars) -> Self {
        Self::constant(vars, R::one())
    }

    pub fn var(vars: &Vars, i: usize) -> Self {
        Self::monomial(vars, Mono::var(vars.len(), i), R::one())
    }

    pub fn monomial(vars: &Vars, m: Mono, c: R) -> Self {
        assert_eq!(m.0.len(), vars.len(), "exponent length does not match variables");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { vars: vars.clone(), terms }
    }

    pub fn from_terms(vars: &Vars, terms: impl IntoIterator<Item = (Mono, R)>) -> Self {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            assert_eq!(m.0.len(), vars.len(), "exponent length does not match variables");
            p.add_term(m, &c);
        }
        p
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    /// Terms in descending term order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &R)> {
        self.terms.iter().rev()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Mono) -> R {
        self.terms.get(m).cloned().unwrap_or_else(R::zero)
    }

    pub fn leading(&self) -> Option<(&Mono, &R)> {
        self.terms.iter().next_back()
    }

    pub fn degree(&self) -> Degree {
        self.terms
            .keys()
            .map(|m| m.degree())
            .max()
            .map_or(Degree::NegInfinity, Degree::Finite)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(|m| m.degree());
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    pub fn homogeneous_part(&self, d: u32) -> Self {
        MPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    fn add_term(&mut self, m: Mono, c: &R) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(e) => {
                *e = e.add(c);
                if e.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    fn check_vars(&self, o: &Self) -> Result<()> {
        if self.vars != o.vars {
            return Err(AlgebraError::DomainMismatch(format!(
                "variables {:?} vs {:?}",
                self.vars, o.vars
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        self.check_vars(o)?;
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self> {
        self.try_add(&o.neg())
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        self.check_vars(o)?;
        let mut out = Self::zero(&self.vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                out.add_term(m1.mul(m2), &c1.mul(c2));
            }
        }
        Ok(out)
    }

    /// Sum; panics when the variable lists differ (use `try_add` for untrusted input).
    pub fn add(&self, o: &Self) -> Self {
        self.try_add(o).expect("polynomial variable mismatch")
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.try_sub(o).expect("polynomial variable mismatch")
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.try_mul(o).expect("polynomial variable mismatch")
    }

    pub fn neg(&self) -> Self {
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, s: &R) -> Self {
        if s.is_zero() {
            return Self::zero(&self.vars);
        }
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &c.mul(s));
        }
        out
    }

    pub fn scale_rat(&self, s: &Rat) -> Self {
        self.scale(&R::from_rat(s))
    }

    pub fn mul_mono(&self, e: &Mono) -> Self {
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.mul(e), c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.vars);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact quotient by `d`; any remainder is an error.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        self.check_vars(d)?;
        let (ld, lc) = d
            .leading()
            .map(|(m, c)| (m.clone(), c.clone()))
            .ok_or(AlgebraError::DivisionByZero)?;
        let mut r = self.clone();
        let mut quo = Self::zero(&self.vars);
        while let Some((lm, lr)) = r.leading() {
            let inexact = || AlgebraError::InexactDivision(format!("{self:?} by {d:?}"));
            let e = lm.div(&ld).ok_or_else(inexact)?;
            let c = lr.div_exact(&lc).ok_or_else(inexact)?;
            let t = Self::monomial(&self.vars, e, c);
            r = r.sub(&t.mul(d));
            quo = quo.add(&t);
        }
        Ok(quo)
    }

    /// ∂/∂(variable i).
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let k = m.0[i];
            if k > 0 {
                let mut e = m.clone();
                e.0[i] -= 1;
                out.add_term(e, &c.mul(&R::from_i64(k as i64)));
            }
        }
        out
    }

    /// Algebra map sending variable i to `images[i]`.
    pub fn substitute(&self, images: &[MPoly<R>]) -> Result<MPoly<R>> {
        if images.len() != self.vars.len() {
            return Err(AlgebraError::Precondition(format!(
                "substitution needs {} images, got {}",
                self.vars.len(),
                images.len()
            )));
        }
        let target = images
            .first()
            .map(|p| p.vars.clone())
            .unwrap_or_else(|| self.vars.clone());
        for im in images {
            if im.vars != target {
                return Err(AlgebraError::DomainMismatch("substitution images disagree".into()));
            }
        }
        // Powers are shared across terms.
        let mut powers: Vec<Vec<MPoly<R>>> = images.iter().map(|p| vec![Self::one(&target), p.clone()]).collect();
        let mut out = Self::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Self::constant(&target, c.clone());
            for (i, &k) in m.0.iter().enumerate() {
                while powers[i].len() <= k as usize {
                    let next = powers[i].last().unwrap().mul(&images[i]);
                    powers[i].push(next);
                }
                if k > 0 {
                    t = t.mul(&powers[i][k as usize]);
                }
            }
            out = out.add(&t);
        }
        Ok(out)
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> MPoly<S> {
        let mut out = MPoly::<S>::zero(&self.vars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &f(c));
        }
        out
    }

    pub fn try_map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> Result<S>) -> Result<MPoly<S>> {
        let mut out = MPoly::<S>::zero(&self.vars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &f(c)?);
        }
        Ok(out)
    }

    /// Same terms under new variable names.
    pub fn with_vars(&self, vars: &Vars) -> Result<Self> {
        if vars.len() != self.vars.len() {
            return Err(AlgebraError::DomainMismatch("variable count differs".into()));
        }
        Ok(MPoly { vars: vars.clone(), terms: self.terms.clone() })
    }

    /// Coefficient vector against a list of monomials; fails if a term lies outside it.
    pub fn coords(&self, basis: &[Mono]) -> Result<Vec<R>> {
        let out: Vec<R> = basis.iter().map(|m| self.coeff(m)).collect();
        let covered = self.terms.keys().filter(|m| basis.contains(m)).count();
        if covered != self.terms.len() {
            return Err(AlgebraError::Precondition("polynomial outside the monomial span".into()));
        }
        Ok(out)
    }

    pub fn from_coords(vars: &Vars, basis: &[Mono], coords: &[R]) -> Self {
        Self::from_terms(vars, basis.iter().cloned().zip(coords.iter().cloned()))
    }

    /// True when both are nonzero and a·lc(b) = b·lc(a).
    pub fn is_proportional(&self, o: &Self) -> bool {
        match (self.leading(), o.leading()) {
            (Some((ma, ca)), Some((mb, cb))) => ma == mb && self.scale(cb) == o.scale(ca),
            _ => false,
        }
    }

    /// Sum of coefficient·(monomial value) for numeric values of the variables.
    pub fn eval_at(&self, point: &[R]) -> R {
        self.terms.iter().fold(R::zero(), |acc, (m, c)| {
            let v = m.0.iter().zip(point).fold(c.clone(), |t, (&k, x)| t.mul(&x.pow(k)));
            acc.add(&v)
        })
    }
}

impl<R: Specialize> MPoly<R> {
    /// ev_c applied coefficientwise.
    pub fn specialize(&self, values: &[Rat]) -> Result<MPoly<R::Target>> {
        self.try_map_coeffs(|c| c.specialize(values))
    }
}

impl<R: Ring> fmt::Debug for MPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::render(self))
    }
}

impl<R: Ring> fmt::Display for MPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::render(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zz() -> Vars {
        vars(&["z", "zb"])
    }

    #[test]
    fn grlex_order_and_enumeration() {
        let ms = monomials_of_degree(3, 2);
        let exps: Vec<Vec<u32>> = ms.iter().map(|m| m.0.clone()).collect();
        assert_eq!(
            exps,
            vec![vec![2, 0, 0], vec![1, 1, 0], vec![1, 0, 1], vec![0, 2, 0], vec![0, 1, 1], vec![0, 0, 2]]
        );
        assert!(Mono(vec![0, 0, 3]) > Mono(vec![2, 0, 0]));
    }

    #[test]
    fn zero_degree_sentinel() {
        let z = MPoly::<Rat>::zero(&zz());
        assert_eq!(z.degree(), Degree::NegInfinity);
        assert!(Degree::NegInfinity < Degree::Finite(0));
    }

    #[test]
    fn division_examples() {
        let v = zz();
        let z = MPoly::<Rat>::var(&v, 0);
        let zb = MPoly::<Rat>::var(&v, 1);
        let num = z.mul(&z).sub(&zb.mul(&zb));
        assert_eq!(num.div_exact(&z.sub(&zb)).unwrap(), z.add(&zb));
        assert_eq!(z.mul(&zb).div_exact(&z).unwrap(), zb);
        assert!(matches!(num.div_exact(&z), Err(AlgebraError::InexactDivision(_))));
    }

    #[test]
    fn mismatched_variables_are_rejected() {
        let a = MPoly::<Rat>::var(&zz(), 0);
        let b = MPoly::<Rat>::var(&vars(&["x", "y"]), 0);
        assert!(matches!(a.try_add(&b), Err(AlgebraError::DomainMismatch(_))));
    }
}
