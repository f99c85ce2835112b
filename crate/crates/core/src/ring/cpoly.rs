//! Polynomials in the Cherednik parameters c₁, c₂ over ℚ.

use super::{CoeffText, ParamRing, Rat, Ring, Specialize, UPoly};
use crate::error::{AlgebraError, Result};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

pub const PARAM_NAMES: [&str; 2] = ["c1", "c2"];

/// Exponent pair (a₁, a₂) of c₁^a₁ c₂^a₂, ordered graded-lexicographically.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PExp(pub u32, pub u32);

impl PExp {
    pub fn degree(self) -> u32 {
        self.0 + self.1
    }
}

impl Ord for PExp {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree()
            .cmp(&o.degree())
            .then(self.0.cmp(&o.0))
    }
}

impl PartialOrd for PExp {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CPoly {
    terms: BTreeMap<PExp, Rat>,
}

impl CPoly {
    pub fn constant(c: Rat) -> CPoly {
        CPoly::monomial(PExp(0, 0), c)
    }

    pub fn monomial(e: PExp, c: Rat) -> CPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        CPoly { terms }
    }

    /// `a + b·c₁`, used for the linear factors that appear everywhere.
    pub fn linear(a: Rat, b: Rat) -> CPoly {
        CPoly::constant(a).add(&CPoly::monomial(PExp(1, 0), b))
    }

    /// Terms in descending term order.
    pub fn terms(&self) -> impl Iterator<Item = (&PExp, &Rat)> {
        self.terms.iter().rev()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn leading(&self) -> Option<(PExp, &Rat)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    pub fn leading_coeff(&self) -> Rat {
        self.leading().map(|(_, c)| c.clone()).unwrap_or_else(Rat::zero)
    }

    pub fn coeff(&self, e: PExp) -> Rat {
        self.terms.get(&e).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| *e == PExp(0, 0))
    }

    pub fn constant_value(&self) -> Option<Rat> {
        if self.is_constant() {
            Some(self.coeff(PExp(0, 0)))
        } else {
            None
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.leading().map(|(e, _)| e.degree())
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms
            .keys()
            .map(|e| if var == 0 { e.0 } else { e.1 })
            .max()
            .unwrap_or(0)
    }

    pub fn uses_param(&self, var: usize) -> bool {
        self.degree_in(var) > 0
    }

    pub fn scale(&self, s: &Rat) -> CPoly {
        if s.is_zero() {
            return CPoly::default();
        }
        CPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c.mul(s))).collect(),
        }
    }

    fn add_term(&mut self, e: PExp, c: &Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Rat::zero);
        *entry = entry.add(c);
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    /// Value at (c₁, c₂); a missing c₂ is only allowed if c₂ does not occur.
    pub fn eval(&self, values: &[Rat]) -> Result<Rat> {
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            if e.0 > 0 {
                let v = values
                    .first()
                    .ok_or_else(|| AlgebraError::Precondition("c1 unbound".into()))?;
                t = t.mul(&v.pow(e.0));
            }
            if e.1 > 0 {
                let v = values
                    .get(1)
                    .ok_or_else(|| AlgebraError::Precondition("c2 unbound".into()))?;
                t = t.mul(&v.pow(e.1));
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    /// Substitutes c₁ ↦ a, c₂ ↦ b with CPoly images.
    pub fn compose(&self, a: &CPoly, b: &CPoly) -> CPoly {
        let mut acc = CPoly::default();
        for (e, c) in &self.terms {
            acc = acc.add(&a.pow(e.0).mul(&b.pow(e.1)).scale(c));
        }
        acc
    }

    /// View as a univariate polynomial in `var` when the other parameter is absent.
    pub fn to_upoly(&self, var: usize) -> Option<UPoly> {
        if self.uses_param(1 - var) {
            return None;
        }
        let deg = self.degree_in(var) as usize;
        let mut cs = vec![Rat::zero(); deg + 1];
        for (e, c) in &self.terms {
            cs[if var == 0 { e.0 } else { e.1 } as usize] = c.clone();
        }
        Some(UPoly::new(cs))
    }

    pub fn from_upoly(var: usize, p: &UPoly) -> CPoly {
        let mut out = CPoly::default();
        for (i, c) in p.coeffs().iter().enumerate() {
            let e = if var == 0 { PExp(i as u32, 0) } else { PExp(0, i as u32) };
            out.add_term(e, c);
        }
        out
    }

    /// Scales so that the leading coefficient is 1.
    pub fn monic(&self) -> CPoly {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// Monic gcd over ℚ[c₁, c₂]; gcd(0, 0) = 0.
    pub fn gcd(&self, o: &CPoly) -> CPoly {
        if self.is_zero() {
            return o.monic();
        }
        if o.is_zero() || self.is_constant() || o.is_constant() {
            return if o.is_zero() { self.monic() } else { CPoly::one() };
        }
        let two = self.uses_param(1) || o.uses_param(1);
        let one = self.uses_param(0) || o.uses_param(0);
        if !two {
            let g = self.to_upoly(0).unwrap().gcd(&o.to_upoly(0).unwrap());
            return CPoly::from_upoly(0, &g);
        }
        if !one {
            let g = self.to_upoly(1).unwrap().gcd(&o.to_upoly(1).unwrap());
            return CPoly::from_upoly(1, &g);
        }
        from_rec(&rec_gcd(to_rec(self), to_rec(o))).monic()
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (e, c)) in self.terms().enumerate() {
            let mono = param_monomial(*e);
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push(if neg { '-' } else { '+' });
            }
            let mag = c.abs();
            if mono.is_empty() {
                s.push_str(&mag.to_string());
            } else if mag.is_one() {
                s.push_str(&mono);
            } else {
                s.push_str(&format!("{mag}*{mono}"));
            }
        }
        s
    }
}

fn param_monomial(e: PExp) -> String {
    let mut parts = Vec::new();
    for (k, name) in [e.0, e.1].into_iter().zip(PARAM_NAMES) {
        match k {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{name}^{k}")),
        }
    }
    parts.join("*")
}

// Recursive view ℚ[c₂][c₁]: entry i is the coefficient of c₁^i.
fn to_rec(p: &CPoly) -> Vec<UPoly> {
    let deg = p.degree_in(0) as usize;
    let mut rows: Vec<Vec<Rat>> = vec![Vec::new(); deg + 1];
    for (e, c) in &p.terms {
        let row = &mut rows[e.0 as usize];
        if row.len() <= e.1 as usize {
            row.resize(e.1 as usize + 1, Rat::zero());
        }
        row[e.1 as usize] = c.clone();
    }
    rows.into_iter().map(UPoly::new).collect()
}

fn from_rec(v: &[UPoly]) -> CPoly {
    let mut out = CPoly::default();
    for (i, u) in v.iter().enumerate() {
        for (j, c) in u.coeffs().iter().enumerate() {
            out.add_term(PExp(i as u32, j as u32), c);
        }
    }
    out
}

fn trim_rec(v: &mut Vec<UPoly>) {
    while v.last().is_some_and(|u| u.is_zero()) {
        v.pop();
    }
}

fn rec_content(v: &[UPoly]) -> UPoly {
    let mut g = UPoly::zero();
    for u in v {
        g = g.gcd(u);
    }
    g
}

fn rec_primitive(v: &[UPoly]) -> Vec<UPoly> {
    let g = rec_content(v);
    if g.is_zero() {
        return v.to_vec();
    }
    v.iter().map(|u| u.divrem(&g).0).collect()
}

fn rec_prem(a: &[UPoly], b: &[UPoly]) -> Vec<UPoly> {
    let mut r = a.to_vec();
    trim_rec(&mut r);
    let lb = b.last().expect("nonzero divisor").clone();
    while r.len() >= b.len() && !r.is_empty() {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - b.len();
        let mut next: Vec<UPoly> = r.iter().map(|u| u.mul(&lb)).collect();
        for (j, bj) in b.iter().enumerate() {
            next[shift + j] = next[shift + j].sub(&bj.mul(&lr));
        }
        trim_rec(&mut next);
        r = next;
    }
    r
}

fn rec_gcd(a: Vec<UPoly>, b: Vec<UPoly>) -> Vec<UPoly> {
    let cont = rec_content(&a).gcd(&rec_content(&b));
    let (mut x, mut y) = (rec_primitive(&a), rec_primitive(&b));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = rec_prem(&x, &y);
        x = y;
        y = if r.is_empty() { r } else { rec_primitive(&r) };
    }
    let x = rec_primitive(&x);
    x.iter().map(|u| u.mul(&cont)).collect()
}

impl Ring for CPoly {
    fn zero() -> Self {
        CPoly::default()
    }
    fn weight(&self) -> usize {
        self.total_degree().unwrap_or(0) as usize * 1024 + self.num_terms()
    }
    fn one() -> Self {
        CPoly::constant(Rat::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, c);
        }
        out
    }
    fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, &c.neg());
        }
        out
    }
    fn mul(&self, o: &Self) -> Self {
        let mut out = CPoly::default();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                out.add_term(PExp(e1.0 + e2.0, e1.1 + e2.1), &c1.mul(c2));
            }
        }
        out
    }
    fn neg(&self) -> Self {
        CPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c.neg())).collect(),
        }
    }
    fn from_rat(r: &Rat) -> Self {
        CPoly::constant(r.clone())
    }
    fn as_rat(&self) -> Option<Rat> {
        self.constant_value()
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        let (ld, lc) = d.leading()?;
        let lc_inv = lc.recip();
        if let Some(k) = d.constant_value() {
            return Some(self.scale(&k.recip()));
        }
        let mut r = self.clone();
        let mut quo = CPoly::default();
        while let Some((lr, cr)) = r.leading() {
            if lr.0 < ld.0 || lr.1 < ld.1 {
                return None;
            }
            let t = CPoly::monomial(PExp(lr.0 - ld.0, lr.1 - ld.1), cr.mul(&lc_inv));
            r = r.sub(&t.mul(d));
            quo = quo.add(&t);
        }
        Some(quo)
    }
    fn text(&self) -> CoeffText {
        if self.terms.len() <= 1 {
            let c = self.leading_coeff();
            let e = self.leading().map(|(e, _)| e).unwrap_or(PExp(0, 0));
            let mono = param_monomial(e);
            let mag = c.abs();
            let magnitude = if mono.is_empty() {
                mag.to_string()
            } else if mag.is_one() {
                mono
            } else {
                format!("{mag}*{mono}")
            };
            CoeffText::Atom { negative: c.is_negative(), magnitude }
        } else {
            CoeffText::Compound(self.render())
        }
    }
    fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms()
            .map(|(e, c)| serde_json::json!({"exp": [e.0, e.1], "coeff": c.to_json()}))
            .collect();
        serde_json::json!({"vars": PARAM_NAMES, "terms": terms})
    }
    fn from_json(v: &serde_json::Value) -> Result<Self> {
        if let Some(s) = v.get("num").and_then(|n| n.as_str()) {
            // A bare rational is accepted as a constant parameter polynomial.
            let _ = s;
            return Ok(CPoly::constant(Rat::from_json(v)?));
        }
        let vars = v
            .get("vars")
            .and_then(|x| x.as_array())
            .ok_or_else(|| AlgebraError::Parse("parameter polynomial without vars".into()))?;
        let names: Vec<&str> = vars.iter().filter_map(|x| x.as_str()).collect();
        if names != PARAM_NAMES[..names.len()] || names.is_empty() {
            return Err(AlgebraError::Parse(format!("unexpected parameter names {names:?}")));
        }
        let terms = v
            .get("terms")
            .and_then(|x| x.as_array())
            .ok_or_else(|| AlgebraError::Parse("parameter polynomial without terms".into()))?;
        let mut out = CPoly::default();
        for t in terms {
            let exp = t
                .get("exp")
                .and_then(|x| x.as_array())
                .ok_or_else(|| AlgebraError::Parse("term without exp".into()))?;
            let mut ex = [0u32; 2];
            for (k, x) in exp.iter().enumerate().take(2) {
                ex[k] = x
                    .as_u64()
                    .ok_or_else(|| AlgebraError::Parse("bad exponent".into()))?
                    as u32;
            }
            let c = Rat::from_json(
                t.get("coeff")
                    .ok_or_else(|| AlgebraError::Parse("term without coeff".into()))?,
            )?;
            if c.is_zero() {
                return Err(AlgebraError::Parse("stored zero coefficient".into()));
            }
            out.add_term(PExp(ex[0], ex[1]), &c);
        }
        Ok(out)
    }
}

impl ParamRing for CPoly {
    fn param(index: usize) -> Self {
        match index {
            0 => CPoly::monomial(PExp(1, 0), Rat::one()),
            1 => CPoly::monomial(PExp(0, 1), Rat::one()),
            _ => panic!("only two parameters exist"),
        }
    }
}

impl Specialize for CPoly {
    type Target = Rat;
    fn specialize(&self, values: &[Rat]) -> Result<Rat> {
        self.eval(values)
    }
}

impl fmt::Display for CPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for CPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat::q;

    fn c1() -> CPoly {
        CPoly::param(0)
    }
    fn c2() -> CPoly {
        CPoly::param(1)
    }

    #[test]
    fn render_matches_canonical_form() {
        let p = c1().sub(&CPoly::one());
        assert_eq!(p.render(), "c1-1");
        let p = c1().mul(&c1()).scale(&q(-3, 2)).add(&c2());
        assert_eq!(p.render(), "-3/2*c1^2+c2");
    }

    #[test]
    fn bivariate_gcd() {
        let f = c1().add(&c2()).sub(&CPoly::one());
        let g = c1().sub(&c2().scale(&q(2, 1)));
        let h = c1().mul(&c2()).add(&CPoly::constant(q(3, 1)));
        let a = f.mul(&g).mul(&g);
        let b = f.mul(&h).mul(&g);
        assert_eq!(a.gcd(&b), f.mul(&g).monic());
    }

    #[test]
    fn exact_division() {
        let f = c1().add(&c2());
        let g = c1().sub(&c2());
        assert_eq!(f.mul(&g).div_exact(&g), Some(f.clone()));
        assert_eq!(f.add(&CPoly::one()).div_exact(&g), None);
    }
}
