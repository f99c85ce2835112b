//! Graded Frobenius algebras given by homogeneous ideals, and their
//! characteristic polynomials.
//!
//! Polynomials are stored with ordinary coefficients. The apolar pairing is
//! ⟨x^α, x^β⟩ = α!·δ_αβ, so a form p annihilates u when Σ α! p_α u_α = 0.
//! Divided-power coordinates d_α = α!·p_α turn this into a plain dot product.

use crate::coxeter::GroupModel;
use crate::error::{AlgebraError, Result};
use crate::linsolve::{determinant, field_kernel, rref, Matrix};
use crate::ring::{monomials_of_degree, vars, Field, MPoly, Mono, QZeta, Rat, Ring, Vars};
use num_bigint::BigInt;

fn factorial(n: u32) -> Rat {
    Rat::from((1..=n).fold(BigInt::from(1), |a, k| a * k))
}

/// α! for an exponent vector.
pub fn mono_factorial(m: &Mono) -> Rat {
    m.0.iter().fold(Rat::one(), |a, &e| a.mul(&factorial(e)))
}

/// Coordinates of a homogeneous form in divided powers: d_α = α!·p_α.
pub fn to_divided<R: Ring>(p: &MPoly<R>, basis: &[Mono]) -> Result<Vec<R>> {
    Ok(p.coords(basis)?
        .into_iter()
        .zip(basis)
        .map(|(c, m)| c.mul(&R::from_rat(&mono_factorial(m))))
        .collect())
}

/// Inverse of [`to_divided`].
pub fn from_divided<R: Ring>(vs: &Vars, basis: &[Mono], d: &[R]) -> MPoly<R> {
    MPoly::from_terms(
        vs,
        basis.iter().zip(d).map(|(m, c)| (m.clone(), c.mul(&R::from_rat(&mono_factorial(m).recip())))),
    )
}

/// Row-reduced degree-k piece of an ideal.
#[derive(Clone, Debug)]
struct Component {
    monos: Vec<Mono>,
    rows: Vec<Vec<Rat>>,
}

impl Component {
    fn rank(&self) -> usize {
        self.rows.len()
    }
}

fn reduce_rows(cols: usize, rows: Vec<Vec<Rat>>) -> Vec<Vec<Rat>> {
    if rows.is_empty() {
        return rows;
    }
    let (r, piv) = rref(&Matrix::from_rows(cols, rows));
    (0..piv.len()).map(|i| r.row(i).to_vec()).collect()
}

fn rank_of(cols: usize, rows: Vec<Vec<Rat>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    rref(&Matrix::from_rows(cols, rows)).1.len()
}

/// A homogeneous ideal of ℚ[x], materialized degree by degree.
#[derive(Clone, Debug)]
pub struct GradedIdeal {
    vars: Vars,
    generators: Vec<MPoly<Rat>>,
    comps: Vec<Component>,
}

impl GradedIdeal {
    pub fn new(vs: &Vars, generators: &[MPoly<Rat>]) -> Result<Self> {
        for g in generators {
            if g.vars() != vs {
                return Err(AlgebraError::DomainMismatch("generator variables".into()));
            }
            if g.is_zero() || !g.is_homogeneous() {
                return Err(AlgebraError::Precondition("generators must be nonzero and homogeneous".into()));
            }
        }
        Ok(GradedIdeal { vars: vs.clone(), generators: generators.to_vec(), comps: Vec::new() })
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn generators(&self) -> &[MPoly<Rat>] {
        &self.generators
    }

    fn component(&mut self, k: u32) -> Result<&Component> {
        let n = self.vars.len();
        while self.comps.len() <= k as usize {
            let d = self.comps.len() as u32;
            let monos = monomials_of_degree(n, d);
            let mut rows = Vec::new();
            if let Some(prev) = self.comps.last() {
                for row in &prev.rows {
                    let p = MPoly::from_coords(&self.vars, &prev.monos, row);
                    for i in 0..n {
                        rows.push(p.mul_mono(&Mono::var(n, i)).coords(&monos)?);
                    }
                }
            }
            for g in &self.generators {
                if g.degree().finite() == Some(d) {
                    rows.push(g.coords(&monos)?);
                }
            }
            let rows = reduce_rows(monos.len(), rows);
            self.comps.push(Component { monos, rows });
        }
        Ok(&self.comps[k as usize])
    }

    /// dim J_k.
    pub fn dim(&mut self, k: u32) -> Result<usize> {
        Ok(self.component(k)?.rank())
    }

    /// dim (ℚ[x]/J)_k.
    pub fn quotient_dim(&mut self, k: u32) -> Result<usize> {
        let c = self.component(k)?;
        Ok(c.monos.len() - c.rank())
    }

    /// Quotient dimensions from degree 0 up to the last nonzero one.
    pub fn quotient_dims(&mut self, cap: u32) -> Result<Vec<usize>> {
        let mut dims = Vec::new();
        for k in 0..=cap {
            let d = self.quotient_dim(k)?;
            if d == 0 {
                return Ok(dims);
            }
            dims.push(d);
        }
        Err(AlgebraError::CheckFailed(format!("quotient is not finite-dimensional up to degree {cap}")))
    }

    /// Basis of J_k as polynomials.
    pub fn basis(&mut self, k: u32) -> Result<Vec<MPoly<Rat>>> {
        let vs = self.vars.clone();
        let c = self.component(k)?;
        Ok(c.rows.iter().map(|r| MPoly::from_coords(&vs, &c.monos, r)).collect())
    }

    /// Exact membership, one homogeneous part at a time.
    pub fn contains(&mut self, p: &MPoly<Rat>) -> Result<bool> {
        let Some(top) = p.degree().finite() else {
            return Ok(true);
        };
        for d in 0..=top {
            let part = p.homogeneous_part(d);
            if part.is_zero() {
                continue;
            }
            let c = self.component(d)?;
            let v = part.coords(&c.monos)?;
            let mut rows = c.rows.clone();
            let r = rows.len();
            rows.push(v);
            if rank_of(c.monos.len(), rows) > r {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Forms of degree k annihilated by J_k under the apolar pairing.
    pub fn annihilator(&mut self, k: u32) -> Result<Vec<MPoly<Rat>>> {
        let vs = self.vars.clone();
        let c = self.component(k)?;
        let ker = if c.rows.is_empty() {
            (0..c.monos.len())
                .map(|i| (0..c.monos.len()).map(|j| Rat::from((i == j) as i64)).collect())
                .collect()
        } else {
            field_kernel(&Matrix::from_rows(c.monos.len(), c.rows.clone()))
        };
        Ok(ker.iter().map(|d| from_divided(&vs, &c.monos, d)).collect())
    }
}

/// Characteristic polynomial with the graded structure of the algebra it defines.
#[derive(Clone, Debug)]
pub struct FrobeniusData {
    /// dim A₁.
    pub rank: usize,
    pub socle_degree: u32,
    pub charpoly: MPoly<Rat>,
    /// Graded dimensions of A = Ã/rad(Ã), read off the derivatives of p_A.
    pub dims: Vec<usize>,
    /// Graded dimensions of Ã = ℚ[x]/J before removing the radical.
    pub quotient_dims: Vec<usize>,
}

impl FrobeniusData {
    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.dims.iter().eq(self.dims.iter().rev())
    }

    /// Whether Ã is already Frobenius (the radical is zero).
    pub fn is_standard(&self) -> bool {
        self.dims == self.quotient_dims
    }

    /// First partial derivatives of p_A are linearly independent.
    pub fn essential_dependence(&self) -> bool {
        let n = self.charpoly.nvars();
        let Some(d) = self.charpoly.degree().finite() else {
            return false;
        };
        if d == 0 {
            return n == 0;
        }
        let monos = monomials_of_degree(n, d - 1);
        let rows: Vec<Vec<Rat>> =
            (0..n).map(|i| self.charpoly.derivative(i).coords(&monos).unwrap_or_default()).collect();
        rank_of(monos.len(), rows) == n
    }
}

/// p_A for A = ℚ[x]/(generators), with the radical quotient when Ã is not Frobenius.
pub fn charpoly_from_ideal(generators: &[MPoly<Rat>], cap: u32) -> Result<FrobeniusData> {
    let vs = generators
        .first()
        .map(|g| g.vars().clone())
        .ok_or_else(|| AlgebraError::Precondition("at least one generator".into()))?;
    let mut ideal = GradedIdeal::new(&vs, generators)?;
    let quotient_dims = ideal.quotient_dims(cap)?;
    let top = quotient_dims.len() as u32 - 1;
    let ann = ideal.annihilator(top)?;
    if ann.len() != 1 {
        return Err(AlgebraError::CheckFailed(format!(
            "top quotient degree {top} has dimension {}, not 1",
            ann.len()
        )));
    }
    let charpoly = normalize(&ann[0]);
    let dims: Vec<usize> = (0..=top).map(|k| graded_dims_from_charpoly(&charpoly, k)).collect();
    Ok(FrobeniusData { rank: dims.get(1).copied().unwrap_or(0), socle_degree: top, charpoly, dims, quotient_dims })
}

/// Scales a nonzero polynomial so its leading coefficient is 1.
pub fn normalize(p: &MPoly<Rat>) -> MPoly<Rat> {
    match p.leading() {
        Some((_, c)) => p.scale(&c.inv()),
        None => p.clone(),
    }
}

fn binary_coeffs<R: Ring>(p: &MPoly<R>, deg: u32) -> Result<Vec<R>> {
    if p.nvars() != 2 {
        return Err(AlgebraError::Precondition("binary form expected".into()));
    }
    Ok((0..=deg).map(|i| p.coeff(&Mono(vec![i, deg - i]))).collect())
}

/// Resultant of two binary forms of degree d (Sylvester determinant).
pub fn binary_resultant<R: Ring>(a: &MPoly<R>, b: &MPoly<R>, d: u32) -> Result<R> {
    let ca = binary_coeffs(a, d)?;
    let cb = binary_coeffs(b, d)?;
    let size = 2 * d as usize;
    let mut m = Matrix::zeros(size, size);
    for s in 0..d as usize {
        for i in 0..=d as usize {
            m.set(s, i + s, ca[i].clone());
            m.set(s + d as usize, i + s, cb[i].clone());
        }
    }
    Ok(determinant(&m))
}

/// p_A for A = ℚ[z, z̄]/(R₁, R₂) with R₁, R₂ of degree n+1, from the maximal
/// minors of the coefficient matrix of the degree-2n multiples.
pub fn charpoly_rank2_minors<R: Ring>(r1: &MPoly<R>, r2: &MPoly<R>) -> Result<MPoly<R>> {
    let d = r1
        .degree()
        .finite()
        .filter(|&d| d >= 1 && r2.degree().finite() == Some(d) && r1.is_homogeneous() && r2.is_homogeneous())
        .ok_or_else(|| AlgebraError::Precondition("two homogeneous forms of equal positive degree".into()))?;
    if binary_resultant(r1, r2, d)?.is_zero() {
        return Err(AlgebraError::Precondition("generators have a common factor (resultant 0)".into()));
    }
    let n = d - 1;
    let width = 2 * n as usize + 1;
    let (a, b) = (binary_coeffs(r1, d)?, binary_coeffs(r2, d)?);
    let mut u = Matrix::zeros(2 * n as usize, width);
    for s in 0..n as usize {
        for i in 0..=d as usize {
            u.set(s, i + s, a[i].clone());
            u.set(s + n as usize, i + s, b[i].clone());
        }
    }
    let vs = r1.vars().clone();
    let monos: Vec<Mono> = (0..width as u32).map(|i| Mono(vec![i, 2 * n - i])).collect();
    let minors: Vec<R> = (0..width)
        .map(|i| {
            let keep: Vec<usize> = (0..width).filter(|&j| j != i).collect();
            let t = u.transpose().select_rows(&keep).transpose();
            let det = determinant(&t);
            if i % 2 == 0 {
                det
            } else {
                det.neg()
            }
        })
        .collect();
    Ok(from_divided(&vs, &monos, &minors))
}

fn span_basis(polys: Vec<MPoly<Rat>>, d: u32) -> Vec<MPoly<Rat>> {
    let Some(first) = polys.first() else {
        return polys;
    };
    let vs = first.vars().clone();
    let monos = monomials_of_degree(vs.len(), d);
    let rows: Vec<Vec<Rat>> = polys.iter().map(|p| p.coords(&monos).expect("same variables")).collect();
    reduce_rows(monos.len(), rows).iter().map(|r| MPoly::from_coords(&vs, &monos, r)).collect()
}

/// dim A_k as the rank of all order-(N−k) partial derivatives of p.
pub fn graded_dims_from_charpoly(p: &MPoly<Rat>, k: u32) -> usize {
    let Some(n) = p.degree().finite() else {
        return 0;
    };
    if k > n {
        return 0;
    }
    let mut span = vec![p.clone()];
    for order in 1..=n - k {
        let next: Vec<MPoly<Rat>> =
            span.iter().flat_map(|q| (0..p.nvars()).map(move |i| q.derivative(i))).filter(|q| !q.is_zero()).collect();
        span = span_basis(next, n - order);
    }
    span.len()
}

/// H_{k,n−k}(p) with entries c_{i+j}, c the divided-power coefficients of p.
pub fn hankel_matrix(p: &MPoly<Rat>, k: u32) -> Result<Matrix<Rat>> {
    let n = p.degree().finite().ok_or_else(|| AlgebraError::Precondition("nonzero form".into()))?;
    if k > n {
        return Err(AlgebraError::Precondition(format!("k = {k} exceeds the degree {n}")));
    }
    let monos: Vec<Mono> = (0..=n).map(|i| Mono(vec![i, n - i])).collect();
    let c = to_divided(p, &monos)?;
    let rows = (0..=k as usize).map(|i| (0..=(n - k) as usize).map(|j| c[i + j].clone()).collect()).collect();
    Ok(Matrix::from_rows((n - k) as usize + 1, rows))
}

pub fn hankel_rank(p: &MPoly<Rat>, k: u32) -> Result<usize> {
    let h = hankel_matrix(p, k)?;
    Ok(rref(&h).1.len())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductMode {
    /// A ⊗ B: the product in disjoint variable sets.
    Tensor,
    /// A * B: the plain product, same variables.
    Internal,
}

pub fn product_charpolys(a: &MPoly<Rat>, b: &MPoly<Rat>, mode: ProductMode) -> Result<MPoly<Rat>> {
    match mode {
        ProductMode::Internal => a.try_mul(b),
        ProductMode::Tensor => {
            let mut names: Vec<String> = a.vars().to_vec();
            for v in b.vars().iter() {
                let mut name = v.clone();
                while names.contains(&name) {
                    name.push('\'');
                }
                names.push(name);
            }
            let vs: Vars = names.into();
            let na = a.nvars();
            let embed = |p: &MPoly<Rat>, offset: usize| {
                MPoly::from_terms(
                    &vs,
                    p.terms().map(|(m, c)| {
                        let mut e = vec![0; vs.len()];
                        e[offset..offset + m.0.len()].copy_from_slice(&m.0);
                        (Mono(e), c.clone())
                    }),
                )
            };
            Ok(embed(a, 0).mul(&embed(b, na)))
        }
    }
}

/// p_A restricted to the span of the given vectors, in coordinates t1..tk.
pub fn restrict(p: &MPoly<Rat>, basis: &[Vec<Rat>]) -> Result<MPoly<Rat>> {
    let names: Vec<String> = (1..=basis.len()).map(|i| format!("t{i}")).collect();
    let ts: Vars = names.into();
    let images: Vec<MPoly<Rat>> = (0..p.nvars())
        .map(|i| {
            basis.iter().enumerate().fold(MPoly::zero(&ts), |acc, (j, v)| {
                acc.add(&MPoly::var(&ts, j).scale(v.get(i).unwrap_or(&Rat::zero())))
            })
        })
        .collect();
    let out = p.substitute(&images)?;
    if out.is_zero() {
        return Err(AlgebraError::CheckFailed("restriction is identically zero".into()));
    }
    Ok(out)
}

/// The coinvariant algebra ℚ[V]/(invariants of positive degree).
pub fn coinvariants(g: &GroupModel) -> Result<FrobeniusData> {
    let cap = g.degrees.iter().map(|d| d - 1).sum::<u32>() + 1;
    charpoly_from_ideal(&g.invariant_generators, cap)
}

/// Product of the coroots as linear forms in dual coordinates w_k, the
/// names taken from the first `rank` dual variables.
pub fn coroot_product(g: &GroupModel) -> Result<MPoly<Rat>> {
    let names: Vec<&str> = g.dual_vars.iter().take(g.rank).map(|s| s.as_str()).collect();
    let ws = vars(&names);
    let mut acc = MPoly::<QZeta>::one(&ws);
    for s in &g.reflections {
        let form = s
            .coroot
            .iter()
            .enumerate()
            .fold(MPoly::zero(&ws), |a, (k, c)| a.add(&MPoly::var(&ws, k).scale(c)));
        acc = acc.mul(&form);
    }
    acc.try_map_coeffs(|c| c.clone().into_rat())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::q;

    fn xy() -> Vars {
        vars(&["x1", "x2"])
    }

    #[test]
    fn monomial_complete_intersection() {
        let vs = xy();
        let x = MPoly::<Rat>::var(&vs, 0);
        let y = MPoly::<Rat>::var(&vs, 1);
        let fd = charpoly_from_ideal(&[x.pow(3), y.pow(2)], 10).unwrap();
        assert_eq!(fd.socle_degree, 3);
        assert!(fd.charpoly.is_proportional(&x.pow(2).mul(&y)));
        assert_eq!(fd.dims, vec![1, 2, 2, 1]);
        assert!(fd.is_standard() && fd.essential_dependence());
    }

    #[test]
    fn minors_of_squares() {
        let vs = vars(&["z", "zb"]);
        let z = MPoly::<Rat>::var(&vs, 0);
        let zb = MPoly::<Rat>::var(&vs, 1);
        let p = charpoly_rank2_minors(&z.pow(2), &zb.pow(2)).unwrap();
        assert!(p.is_proportional(&z.mul(&zb)));
        assert!(charpoly_rank2_minors(&z.pow(2), &z.pow(2)).is_err());
    }

    #[test]
    fn hankel_examples() {
        let vs = vars(&["z", "zb"]);
        let z = MPoly::<Rat>::var(&vs, 0);
        let zb = MPoly::<Rat>::var(&vs, 1);
        // z^(2) zb^(2) = z²zb²/4
        let p = z.pow(2).mul(&zb.pow(2)).scale(&q(1, 4));
        assert_eq!(hankel_rank(&p, 1).unwrap(), 2);
        assert_eq!(hankel_rank(&z.pow(4), 1).unwrap(), 1);
    }

    #[test]
    fn products_and_restrictions() {
        let vs = xy();
        let x = MPoly::<Rat>::var(&vs, 0);
        let y = MPoly::<Rat>::var(&vs, 1);
        let one = MPoly::one(&vs);
        assert_eq!(product_charpolys(&x, &one, ProductMode::Internal).unwrap(), x);
        let t = product_charpolys(&x.mul(&y), &x, ProductMode::Tensor).unwrap();
        assert_eq!(t.nvars(), 4);
        let d = restrict(&x.mul(&y), &[vec![Rat::one(), Rat::one()]]).unwrap();
        assert_eq!(d, MPoly::var(d.vars(), 0).pow(2));
        assert!(restrict(&x.mul(&y), &[vec![Rat::one(), Rat::zero()]]).is_err());
    }
}
