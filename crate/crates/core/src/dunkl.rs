//! Dunkl operators: the generic reflection-sum form, composite operators
//! ∇_p, the c-pairing, the closed dihedral formulas and the sl₂ triple.

use crate::coxeter::GroupModel;
use crate::error::{AlgebraError, Result};
use crate::linsolve::Matrix;
use crate::ring::{monomials_of_degree, CPoly, MPoly, Mono, ParamRing, QZeta, Rat, Ring};
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

/// The Cherednik parameter as given on the command line or in a suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParamValue {
    /// Indeterminates c₁ (and c₂ when there are two reflection classes).
    Symbolic,
    /// One indeterminate c shared by all reflections.
    SymbolicConst,
    /// Exact values, one per reflection class (a single value is broadcast).
    Rational(Vec<Rat>),
}

/// How coordinate operators of a dihedral group are evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DihedralPath {
    ClosedForm,
    ReflectionSum,
}

/// A group together with a parameter value c(s) for each reflection class.
pub struct DunklContext<R: Ring> {
    pub group: Arc<GroupModel>,
    pub c: Vec<R>,
    path: DihedralPath,
    cache: Mutex<HashMap<(usize, Mono), MPoly<R>>>,
}

impl<R: Ring> Clone for DunklContext<R> {
    fn clone(&self) -> Self {
        DunklContext {
            group: self.group.clone(),
            c: self.c.clone(),
            path: self.path,
            cache: Mutex::new(HashMap::new()),
        }
    }
}

impl DunklContext<CPoly> {
    /// c₁ (and c₂) as indeterminates.
    pub fn symbolic(group: Arc<GroupModel>) -> Self {
        let c = (0..group.class_count).map(CPoly::param).collect();
        Self::new(group, c)
    }

    /// A single indeterminate c on every reflection.
    pub fn symbolic_const(group: Arc<GroupModel>) -> Self {
        let c = vec![CPoly::param(0); group.class_count];
        Self::new(group, c)
    }
}

impl DunklContext<Rat> {
    pub fn rational(group: Arc<GroupModel>, values: &[Rat]) -> Result<Self> {
        let c = broadcast(&group, values)?;
        Ok(Self::new(group, c))
    }
}

fn broadcast(group: &GroupModel, values: &[Rat]) -> Result<Vec<Rat>> {
    match (values.len(), group.class_count) {
        (1, k) => Ok(vec![values[0].clone(); k]),
        (a, b) if a == b => Ok(values.to_vec()),
        (a, b) => Err(AlgebraError::Precondition(format!("{a} parameter values for {b} reflection classes"))),
    }
}

impl<R: Ring> DunklContext<R> {
    pub fn new(group: Arc<GroupModel>, c: Vec<R>) -> Self {
        assert_eq!(c.len(), group.class_count, "one parameter per reflection class");
        DunklContext { group, c, path: DihedralPath::ClosedForm, cache: Mutex::new(HashMap::new()) }
    }

    /// Uses the literal reflection sum for dihedral groups too (needs ζ in R).
    pub fn with_path(mut self, path: DihedralPath) -> Self {
        self.path = path;
        self.cache = Mutex::new(HashMap::new());
        self
    }

    pub fn path(&self) -> DihedralPath {
        self.path
    }

    pub fn is_const(&self) -> bool {
        self.c.windows(2).all(|w| w[0] == w[1])
    }

    /// |c| = (2/ℓ)·Σ_s c(s).
    pub fn c_abs(&self) -> R {
        let sum = self
            .group
            .reflections
            .iter()
            .fold(R::zero(), |acc, s| acc.add(&self.c[s.class_index]));
        sum.mul(&R::from_rat(&Rat::new(2, self.group.rank as i64)))
    }

    /// Number of coordinate operators (n ambient ones for S_n, Y and Ȳ for I₂(m)).
    pub fn num_coords(&self) -> usize {
        self.group.dual_functionals.len()
    }

    /// ∂q/∂y − Σ_s c(s)⟨y,α_s⟩(q − s(q))/α_s for a functional y.
    pub fn dunkl_apply(&self, y: &[QZeta], q: &MPoly<R>) -> Result<MPoly<R>> {
        let vars = q.vars().clone();
        let embed = |x: &QZeta| {
            R::from_qzeta(x).ok_or_else(|| {
                AlgebraError::DomainMismatch(format!("{x:?} needs a cyclotomic coefficient domain"))
            })
        };
        let mut out = MPoly::zero(&vars);
        for (k, yk) in y.iter().enumerate() {
            if !yk.is_zero() {
                out = out.add(&q.derivative(k).scale(&embed(yk)?));
            }
        }
        for s in &self.group.reflections {
            let pair = y.iter().zip(&s.root).fold(QZeta::zero(), |a, (u, v)| a.add(&u.mul(v)));
            let cs = &self.c[s.class_index];
            if pair.is_zero() || cs.is_zero() {
                continue;
            }
            let diff = q.sub(&s.map.apply(q)?);
            if diff.is_zero() {
                continue;
            }
            let quo = diff.div_exact(&s.root_poly(&vars)?)?;
            out = out.sub(&quo.scale(&cs.mul(&embed(&pair)?)));
        }
        Ok(out)
    }

    fn monomial_image(&self, k: usize, m: &Mono) -> Result<MPoly<R>> {
        if let Some(p) = self.cache.lock().unwrap().get(&(k, m.clone())) {
            return Ok(p.clone());
        }
        let q = MPoly::monomial(&self.group.vars, m.clone(), R::one());
        let p = match (self.group.dihedral_m(), self.path) {
            (Some(_), DihedralPath::ClosedForm) => {
                if k == 0 {
                    self.dihedral_y(&q)?
                } else {
                    self.dihedral_ybar(&q)?
                }
            }
            _ => self.dunkl_apply(&self.group.dual_functionals[k], &q)?,
        };
        self.cache.lock().unwrap().insert((k, m.clone()), p.clone());
        Ok(p)
    }

    /// Coordinate Dunkl operator number k applied to q.
    pub fn coord(&self, k: usize, q: &MPoly<R>) -> Result<MPoly<R>> {
        let mut out = MPoly::zero(q.vars());
        for (m, c) in q.terms() {
            out = out.add(&self.monomial_image(k, m)?.scale(c));
        }
        Ok(out)
    }

    /// ∇_p q for p a polynomial in the dual coordinates.
    pub fn nabla(&self, p: &MPoly<Rat>, q: &MPoly<R>) -> Result<MPoly<R>> {
        self.nabla_r(&p.map_coeffs(R::from_rat), q)
    }

    pub fn nabla_r(&self, p: &MPoly<R>, q: &MPoly<R>) -> Result<MPoly<R>> {
        if p.nvars() != self.num_coords() {
            return Err(AlgebraError::DomainMismatch("operator polynomial in the wrong variables".into()));
        }
        let mut out = MPoly::zero(q.vars());
        for (m, c) in p.terms() {
            let mut t = q.clone();
            for (k, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    if t.is_zero() {
                        break;
                    }
                    t = self.coord(k, &t)?;
                }
            }
            out = out.add(&t.scale(c));
        }
        Ok(out)
    }

    /// ⟨p, q⟩_c: the constant term of ∇_p q when the degrees agree, else 0.
    pub fn pairing(&self, p: &MPoly<Rat>, q: &MPoly<R>) -> Result<R> {
        if p.degree() != q.degree() {
            return Ok(R::zero());
        }
        let r = self.nabla(p, q)?;
        Ok(r.coeff(&Mono::one(q.nvars())))
    }

    /// Matrix of ∇_p from degree n to degree n − deg p, in descending monomial order.
    pub fn operator_matrix(&self, p: &MPoly<Rat>, n: u32) -> Result<Matrix<R>> {
        let d = p.degree().finite().unwrap_or(0);
        let cols = monomials_of_degree(self.group.rank, n);
        if d > n {
            return Ok(Matrix::zeros(0, cols.len()));
        }
        let rows = monomials_of_degree(self.group.rank, n - d);
        let mut mat = Matrix::zeros(rows.len(), cols.len());
        for (j, m) in cols.iter().enumerate() {
            let img = self.nabla(p, &MPoly::monomial(&self.group.vars, m.clone(), R::one()))?;
            for (i, r) in rows.iter().enumerate() {
                mat.set(i, j, img.coeff(r));
            }
        }
        Ok(mat)
    }

    fn dihedral_data(&self) -> Result<(u32, R, R)> {
        let m = self
            .group
            .dihedral_m()
            .ok_or_else(|| AlgebraError::Precondition("closed forms exist only for I2(m)".into()))?;
        let c1 = self.c[0].clone();
        let c2 = self.c.get(1).cloned().unwrap_or_else(|| c1.clone());
        Ok((m, c1, c2))
    }

    /// Closed-form Y on z^a z̄^b, extended linearly.
    pub fn dihedral_y(&self, q: &MPoly<R>) -> Result<MPoly<R>> {
        let (m, c1, c2) = self.dihedral_data()?;
        let vars = q.vars().clone();
        let mut out = MPoly::zero(&vars);
        for (mono, coeff) in q.terms() {
            let terms = closed_y(m, &c1, &c2, mono.0[0] as i64, mono.0[1] as i64);
            for (a, b, c) in terms {
                out = out.add(&MPoly::monomial(&vars, Mono(vec![a as u32, b as u32]), c.mul(coeff)));
            }
        }
        Ok(out)
    }

    /// Ȳ = T Y T with T the swap of z and z̄.
    pub fn dihedral_ybar(&self, q: &MPoly<R>) -> Result<MPoly<R>> {
        Ok(swap(&self.dihedral_y(&swap(q))?))
    }

    /// Closed-form F = −∇_{e₂}.
    pub fn dihedral_f(&self, q: &MPoly<R>) -> Result<MPoly<R>> {
        let (m, c1, c2) = self.dihedral_data()?;
        let vars = q.vars().clone();
        let mut out = MPoly::zero(&vars);
        for (mono, coeff) in q.terms() {
            let (a, b) = (mono.0[0] as i64, mono.0[1] as i64);
            let (terms, swapped) = if a >= b {
                (closed_f(m, &c1, &c2, a, b), false)
            } else {
                (closed_f(m, &c1, &c2, b, a), true)
            };
            for (x, y, c) in terms {
                let e = if swapped { vec![y as u32, x as u32] } else { vec![x as u32, y as u32] };
                out = out.add(&MPoly::monomial(&vars, Mono(e), c.mul(coeff)));
            }
        }
        Ok(out)
    }
}

/// Exchanges z and z̄.
pub fn swap<R: Ring>(q: &MPoly<R>) -> MPoly<R> {
    MPoly::from_terms(q.vars(), q.terms().map(|(m, c)| (Mono(vec![m.0[1], m.0[0]]), c.clone())))
}

fn sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// (m/2)((−1)^k c₁ + c₂), the weight of the k-th half-period step.
fn half_weight<R: Ring>(m: u32, c1: &R, c2: &R, k: i64) -> R {
    let t = if k % 2 == 0 { c1.add(c2) } else { c2.sub(c1) };
    t.mul(&R::from_rat(&Rat::new(m as i64, 2)))
}

fn closed_y<R: Ring>(m: u32, c1: &R, c2: &R, a: i64, b: i64) -> Vec<(i64, i64, R)> {
    let mut out = Vec::new();
    if a > 0 {
        out.push((a - 1, b, R::from_i64(a)));
    }
    let step = m as i64; // mk/2 with k counted in half periods
    if a >= b {
        let mut k = 0;
        while k * step <= 2 * (a - b - 1) {
            let w = half_weight(m, c1, c2, k);
            let s = sign(step * k / 2);
            if !w.is_zero() && (step * k) % 2 == 0 {
                out.push((a - 1 - step * k / 2, b + step * k / 2, w.mul(&R::from_i64(-s))));
            }
            k += 1;
        }
    } else {
        let mut k = 1;
        while k * step <= 2 * (b - a) {
            let w = half_weight(m, c1, c2, k);
            let s = sign(step * k / 2);
            if !w.is_zero() && (step * k) % 2 == 0 {
                out.push((a - 1 + step * k / 2, b - step * k / 2, w.mul(&R::from_i64(s))));
            }
            k += 1;
        }
    }
    out
}

fn closed_f<R: Ring>(m: u32, c1: &R, c2: &R, a: i64, b: i64) -> Vec<(i64, i64, R)> {
    let mut out = Vec::new();
    if b > 0 {
        let lead = half_weight(m, c1, c2, 0).sub(&R::from_i64(a)).mul(&R::from_i64(b));
        out.push((a - 1, b - 1, lead));
    }
    let step = m as i64;
    let mut k = 1;
    while k * step <= 2 * (a - b) {
        let shift = step * k;
        if shift % 2 == 0 {
            let h = shift / 2;
            let w = half_weight(m, c1, c2, k);
            let coeff = w.mul(&R::from_i64(-sign(h) * (a - b - h)));
            if !coeff.is_zero() {
                out.push((a - 1 - h, b - 1 + h, coeff));
            }
        }
        k += 1;
    }
    out
}

/// The operators E = z z̄·, F = −∇_{e₂}, H = Euler + (1 − |c|) for I₂(m).
pub struct Sl2<'a, R: Ring> {
    ctx: &'a DunklContext<R>,
}

impl<'a, R: Ring> Sl2<'a, R> {
    pub fn new(ctx: &'a DunklContext<R>) -> Result<Self> {
        ctx.dihedral_data()?;
        Ok(Sl2 { ctx })
    }

    pub fn e(&self, q: &MPoly<R>) -> MPoly<R> {
        q.mul_mono(&Mono(vec![1, 1]))
    }

    pub fn f(&self, q: &MPoly<R>) -> Result<MPoly<R>> {
        let e2 = &self.ctx.group.dual_invariant_generators[0];
        Ok(self.ctx.nabla(e2, q)?.neg())
    }

    pub fn h(&self, q: &MPoly<R>) -> MPoly<R> {
        let shift = R::one().sub(&self.ctx.c_abs());
        MPoly::from_terms(
            q.vars(),
            q.terms().map(|(m, c)| (m.clone(), c.mul(&R::from_i64(m.degree() as i64).add(&shift)))),
        )
    }

    /// The three commutator defects [E,F]−H, [H,E]−2E, [H,F]+2F on q.
    pub fn defects(&self, q: &MPoly<R>) -> Result<[MPoly<R>; 3]> {
        let two = R::from_i64(2);
        let ef = self.e(&self.f(q)?).sub(&self.f(&self.e(q))?);
        let he = self.h(&self.e(q)).sub(&self.e(&self.h(q)));
        let hf = self.h(&self.f(q)?).sub(&self.f(&self.h(q))?);
        Ok([
            ef.sub(&self.h(q)),
            he.sub(&self.e(q).scale(&two)),
            hf.add(&self.f(q)?.scale(&two)),
        ])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Cyclo, q};

    fn zpoly<R: Ring>(g: &GroupModel, a: u32, b: u32) -> MPoly<R> {
        MPoly::monomial(&g.vars, Mono(vec![a, b]), R::one())
    }

    #[test]
    fn closed_y_example_m3() {
        let g = Arc::new(GroupModel::dihedral(3));
        let ctx = DunklContext::symbolic(g.clone());
        let y = ctx.dihedral_y(&zpoly(&g, 4, 0)).unwrap();
        let c = CPoly::param(0);
        let expect = MPoly::from_terms(
            &g.vars,
            [
                (Mono(vec![3, 0]), CPoly::from_i64(4).sub(&c.scale(&q(3, 1)))),
                (Mono(vec![0, 3]), c.scale(&q(3, 1))),
            ],
        );
        assert_eq!(y, expect);
    }

    #[test]
    fn closed_f_example_m3() {
        let g = Arc::new(GroupModel::dihedral(3));
        let ctx = DunklContext::symbolic(g.clone());
        let f = ctx.dihedral_f(&zpoly(&g, 4, 1)).unwrap();
        let c = CPoly::param(0);
        let expect = MPoly::monomial(&g.vars, Mono(vec![3, 0]), c.scale(&q(3, 1)).sub(&CPoly::from_i64(4)));
        assert_eq!(f, expect);
    }

    #[test]
    fn generic_matches_closed_for_z4() {
        let g = Arc::new(GroupModel::dihedral(3));
        let closed = DunklContext::symbolic(g.clone());
        let generic = DunklContext::new(g.clone(), vec![Cyclo::scalar(CPoly::param(0))])
            .with_path(DihedralPath::ReflectionSum);
        let p = zpoly::<CPoly>(&g, 4, 0);
        let a = closed.coord(0, &p).unwrap().map_coeffs(|c| Cyclo::scalar(c.clone()));
        let b = generic.coord(0, &p.map_coeffs(|c| Cyclo::scalar(c.clone()))).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn e2_on_zzbar() {
        let g = Arc::new(GroupModel::dihedral(5));
        let ctx = DunklContext::symbolic(g.clone());
        let r = ctx.nabla(&g.dual_invariant_generators[0], &zpoly(&g, 1, 1)).unwrap();
        let c = CPoly::param(0);
        assert_eq!(r, MPoly::constant(&g.vars, CPoly::one().sub(&c.scale(&q(5, 1)))));
    }

    #[test]
    fn symmetric_degree_one_pairing() {
        let g = Arc::new(GroupModel::symmetric(4));
        let ctx = DunklContext::symbolic(g.clone());
        let v1 = MPoly::<CPoly>::var(&g.vars, 0);
        let y1 = MPoly::<Rat>::var(&g.dual_vars, 0);
        let c = CPoly::param(0);
        assert_eq!(ctx.pairing(&y1, &v1).unwrap(), CPoly::one().sub(&c.scale(&q(4, 1))));
        assert_eq!(ctx.c_abs(), c.scale(&q(4, 1)));
    }
}
