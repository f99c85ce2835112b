//! Explicit quasiharmonic families for I₂(m) in the coordinates z, z̄.
//!
//! For constant c the polynomials R_{n,c} and ρ_{n,c} are given three ways
//! (closed sum, recursion, residue), and for even m with two parameters the
//! family S_{n,c} is built recursively. The ideals J_{n,c} generated by the
//! quasiharmonics of degree n are handled degreewise through
//! [`GradedIdeal`].

use crate::coxeter::GroupModel;
use crate::dunkl::{swap, DunklContext};
use crate::error::{AlgebraError, Result};
use crate::frobenius::{from_divided, GradedIdeal};
use crate::quasiharmonic::{proportionality, qh_space, QHKind};
use crate::ring::{CPoly, MPoly, Mono, ParamRing, Rat, Ring, Vars};
use std::sync::Arc;

fn zvars() -> Vars {
    GroupModel::dihedral(3).vars
}

fn sign(k: u64) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn c() -> CPoly {
    CPoly::param(0)
}

fn ci(k: i64) -> CPoly {
    CPoly::from_i64(k)
}

/// λ_k(c) = c(c−1)…(c−k), with λ_{−1} = 1.
pub fn lambda(k: i64) -> CPoly {
    lambda_of(&c(), k)
}

fn lambda_of(x: &CPoly, k: i64) -> CPoly {
    (0..=k).fold(CPoly::one(), |acc, i| acc.mul(&x.sub(&ci(i))))
}

fn binomial(n: u64, k: u64) -> Rat {
    (0..k).fold(Rat::one(), |acc, i| acc.mul(&Rat::new((n - i) as i64, (i + 1) as i64)))
}

/// Binomial series coefficient binom(x, k) = x(x−1)…(x−k+1)/k!.
fn binom_poly(x: &CPoly, k: u64) -> CPoly {
    (0..k).fold(CPoly::one(), |acc, i| acc.mul(&x.sub(&ci(i as i64)))).scale(&factorial(k).recip())
}

fn factorial(k: u64) -> Rat {
    (1..=k).fold(Rat::one(), |acc, i| acc.mul(&Rat::from(i as i64)))
}

fn mono(vs: &Vars, a: u64, b: u64, coeff: CPoly) -> MPoly<CPoly> {
    MPoly::monomial(vs, Mono(vec![a as u32, b as u32]), coeff)
}

/// ρ_{n,c} together with the unnormalized R_{n,c}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhoPoly {
    pub m: u32,
    pub n: u32,
    pub q: u32,
    pub r: u32,
    pub big_r: MPoly<CPoly>,
    pub rho: MPoly<CPoly>,
}

impl RhoPoly {
    pub fn bar(&self) -> MPoly<CPoly> {
        swap(&self.rho)
    }
}

/// R_{n,c} as the explicit sum over p of binom(q,p) λ_{q−p} λ_{p−1} z^{n−mp} z̄^{mp}.
pub fn r_explicit(m: u32, n: u32) -> MPoly<CPoly> {
    let vs = zvars();
    let (m, n) = (m as u64, n as u64);
    let q = n / m;
    (0..=q).fold(MPoly::zero(&vs), |acc, p| {
        let coeff = lambda(q as i64 - p as i64)
            .mul(&lambda(p as i64 - 1))
            .scale(&binomial(q, p).mul(&Rat::from(sign(m * p))));
        acc.add(&mono(&vs, n - m * p, m * p, coeff))
    })
}

/// R_{n,c} from R_0 = c by multiplying with z, with the correction at n ≡ 0 mod m.
pub fn r_recursive(m: u32, n: u32) -> MPoly<CPoly> {
    let vs = zvars();
    let z = MPoly::var(&vs, 0);
    let zb = MPoly::var(&vs, 1);
    let mut cur = MPoly::constant(&vs, c());
    for k in 1..=n as u64 {
        let (q, r) = (k / m as u64, k % m as u64);
        cur = if r != 0 {
            z.mul(&cur)
        } else {
            let bar = swap(&cur);
            z.mul(&cur)
                .scale(&c().sub(&ci(q as i64)))
                .add(&zb.mul(&bar).scale(&c().scale(&Rat::from(sign(m as u64 * q)))))
        };
    }
    cur
}

/// R_{n,c} as c·q!·z^r times the coefficient of u^q in
/// (1 + (−z̄)^m u)^c (1 + z^m u)^{c−1}.
pub fn r_residue(m: u32, n: u32) -> MPoly<CPoly> {
    let vs = zvars();
    let (m64, n64) = (m as u64, n as u64);
    let (q, r) = (n64 / m64, n64 % m64);
    let a = mono(&vs, 0, m64, ci(sign(m64)));
    let b = mono(&vs, m64, 0, CPoly::one());
    let expand = |x: &CPoly, base: &MPoly<CPoly>| -> Vec<MPoly<CPoly>> {
        (0..=q).map(|k| base.pow(k as u32).scale(&binom_poly(x, k))).collect()
    };
    let sa = expand(&c(), &a);
    let sb = expand(&c().sub(&CPoly::one()), &b);
    let coeff = (0..=q as usize).fold(MPoly::zero(&vs), |acc, i| acc.add(&sa[i].mul(&sb[q as usize - i])));
    let front = c().scale(&factorial(q));
    coeff.scale(&front).mul_mono(&Mono(vec![r as u32, 0]))
}

/// ρ_{n,c} = R_{n,c}/λ_{[q/2]}(c).
pub fn rho(m: u32, n: u32) -> Result<RhoPoly> {
    if m < 3 {
        return Err(AlgebraError::Precondition("m ≥ 3".into()));
    }
    let (q, r) = (n / m, n % m);
    let big_r = r_explicit(m, n);
    let d = lambda((q / 2) as i64);
    let rho = big_r.try_map_coeffs(|x| {
        x.div_exact(&d).ok_or_else(|| AlgebraError::InexactDivision(format!("R_{n} by λ_{}", q / 2)))
    })?;
    Ok(RhoPoly { m, n, q, r, big_r, rho })
}

/// Whether the three constructions of R_{n,c} coincide term by term.
pub fn rho_routes_agree(m: u32, n: u32) -> bool {
    let e = r_explicit(m, n);
    e == r_recursive(m, n) && e == r_residue(m, n)
}

/// Basis of QH_n for constant c, valid for every value of c.
///
/// For n = mq with q odd, ρ and ρ̄ become dependent at c = q/2, where
/// ρ = −σρ̄ with σ = (−1)^{mq}; the basis is then {ρ − σρ̄, (ρ + σρ̄)/(2c − q)}.
pub fn qh_basis_dihedral(m: u32, n: u32) -> Result<Vec<MPoly<CPoly>>> {
    let rp = rho(m, n)?;
    if n == 0 {
        return Ok(vec![rp.rho]);
    }
    let (a, b) = (rp.rho.clone(), rp.bar());
    if rp.r != 0 || rp.q % 2 == 0 {
        return Ok(vec![a, b]);
    }
    let b = b.scale(&ci(sign(m as u64 * rp.q as u64)));
    let d = c().scale(&Rat::from(2)).sub(&ci(rp.q as i64));
    let quot = a.add(&b).try_map_coeffs(|x| {
        x.div_exact(&d).ok_or_else(|| AlgebraError::InexactDivision(format!("ρ ± ρ̄ by 2c − {}", rp.q)))
    })?;
    Ok(vec![a.sub(&b), quot])
}

/// The basis at a rational value of c.
pub fn qh_basis_dihedral_at(m: u32, n: u32, c0: &Rat) -> Result<Vec<MPoly<Rat>>> {
    qh_basis_dihedral(m, n)?.iter().map(|p| p.specialize(std::slice::from_ref(c0))).collect()
}

fn kind_check(m: u32, n: u32) -> Result<(u64, u64, u64)> {
    if !m.is_multiple_of(2) || m < 4 {
        return Err(AlgebraError::Precondition(format!("S_n needs even m ≥ 4, got {m}")));
    }
    let h = m as u64 / 2;
    Ok((h, n as u64 / h, n as u64 % h))
}

/// (−1)^{mq/2}((−1)^q c₁ + c₂).
fn twist(m: u32, q: u64) -> CPoly {
    let (c1, c2) = (CPoly::param(0), CPoly::param(1));
    let inner = if q.is_multiple_of(2) { c1.add(&c2) } else { c2.sub(&c1) };
    inner.scale(&Rat::from(sign(m as u64 / 2 * q)))
}

/// S_{n,c} for even m from S₀ = 1 with S̄₀ taken as 0: the normalization
/// "no z̄^n term" cannot hold for both S₀ and its conjugate at n = 0.
pub fn s_poly(m: u32, n: u32) -> Result<MPoly<CPoly>> {
    Ok(s_family(m, n)?.pop().expect("nonempty"))
}

/// S_0, …, S_n.
pub fn s_family(m: u32, n: u32) -> Result<Vec<MPoly<CPoly>>> {
    kind_check(m, 0)?;
    let vs = zvars();
    let z = MPoly::var(&vs, 0);
    let s = CPoly::param(0).add(&CPoly::param(1));
    let mut out = vec![MPoly::one(&vs)];
    for k in 0..n {
        let (_, q, r) = kind_check(m, k)?;
        let cur = &out[k as usize];
        let next = if r != 0 {
            z.mul(cur)
        } else {
            let bar = if k == 0 { MPoly::zero(&vs) } else { swap(cur) };
            z.mul(cur).scale(&s.sub(&ci(q as i64))).add(&z.mul(&bar).scale(&twist(m, q)))
        };
        out.push(next);
    }
    Ok(out)
}

fn conj_or_zero(p: &MPoly<CPoly>, n: u32) -> MPoly<CPoly> {
    if n == 0 {
        MPoly::zero(p.vars())
    } else {
        swap(p)
    }
}

/// Checks F(S_n) = 0 and the Y, Ȳ laws for S_1..S_nmax symbolically.
pub fn s_action_check(m: u32, nmax: u32) -> Result<bool> {
    let fam = s_family(m, nmax)?;
    let ctx = DunklContext::symbolic(Arc::new(GroupModel::dihedral(m)));
    let s = CPoly::param(0).add(&CPoly::param(1));
    let half = Rat::new(m as i64, 2);
    for n in 1..=nmax {
        let (_, q, r) = kind_check(m, n)?;
        let (cur, prev) = (&fam[n as usize], &fam[n as usize - 1]);
        let prev_bar = conj_or_zero(prev, n - 1);
        if !ctx.dihedral_f(cur)?.is_zero() {
            return Ok(false);
        }
        let lead = ci(n as i64).sub(&s.scale(&half));
        let y_expect = if r != 1 {
            prev.scale(&lead)
        } else {
            prev.scale(&s.sub(&ci(q as i64))).add(&prev_bar.scale(&twist(m, q))).scale(&lead)
        };
        let yb_expect = if r != 0 {
            MPoly::zero(cur.vars())
        } else {
            prev_bar.scale(&twist(m, q).scale(&half))
        };
        if ctx.dihedral_y(cur)? != y_expect || ctx.dihedral_ybar(cur)? != yb_expect {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks Y(ρ_n) and Ȳ(ρ_n) against the closed action laws for n ≤ nmax.
pub fn rho_action_check(m: u32, nmax: u32) -> Result<bool> {
    let ctx = DunklContext::symbolic_const(Arc::new(GroupModel::dihedral(m)));
    for n in 1..=nmax {
        let cur = rho(m, n)?;
        let prev = rho(m, n - 1)?.rho;
        let (q, r) = (cur.q as i64, cur.r);
        let factor = if r != 0 {
            ci(n as i64).sub(&c().scale(&Rat::from(m as i64)))
        } else if q % 2 == 1 {
            c().scale(&Rat::from(2)).sub(&ci(q)).scale(&Rat::from(m as i64 * q))
        } else {
            ci(2 * m as i64 * q)
        };
        if ctx.dihedral_y(&cur.rho)? != prev.scale(&factor) || !ctx.dihedral_ybar(&cur.rho)?.is_zero() {
            return Ok(false);
        }
        if !ctx.dihedral_f(&cur.rho)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Q_k(c) of degree 2km.
pub fn q_poly(m: u32, k: u32) -> MPoly<CPoly> {
    let vs = zvars();
    let (m, k) = (m as u64, k as u64);
    if k == 1 {
        return mono(&vs, 2 * m, 0, c().sub(&ci(1))).add(&mono(&vs, m, m, c().scale(&Rat::from(sign(m)))));
    }
    let falling = (0..=k as i64).fold(CPoly::one(), |a, i| a.mul(&c().sub(&ci(i))));
    let rising = (-1..k as i64).fold(CPoly::one(), |a, i| a.mul(&c().add(&ci(i))));
    mono(&vs, 2 * k * m, 0, falling).add(&mono(&vs, m * (k + 1), m * (k - 1), rising.scale(&Rat::from(sign(m * k + m + k)))))
}

/// z^{mq} z̄^r R_{n,c} expanded through Q_{q−k}; both sides are returned.
/// The final Q₁ term carries (−1)^{m(q+1)}.
pub fn multz_sides(m: u32, n: u32) -> Result<(MPoly<CPoly>, MPoly<CPoly>)> {
    let (q, r) = ((n / m) as u64, (n % m) as u64);
    if q == 0 {
        return Err(AlgebraError::Precondition("n ≥ m".into()));
    }
    let m64 = m as u64;
    let vs = zvars();
    let lhs = r_explicit(m, n).mul_mono(&Mono(vec![(m64 * q) as u32, r as u32]));
    let zzb = |e: u64| Mono(vec![e as u32, e as u32]);
    let falling = |k: u64| (0..k as i64).fold(CPoly::one(), |a, i| a.mul(&c().sub(&ci(i))));
    let mut rhs = MPoly::zero(&vs);
    for k in 0..q.saturating_sub(1) {
        let coeff = falling(k).scale(&binomial(q, k).mul(&Rat::from(sign(m64 * k))));
        rhs = rhs.add(&q_poly(m, (q - k) as u32).mul_mono(&zzb(m64 * k + r)).scale(&coeff));
    }
    let last = falling(q).scale(&Rat::from(sign(m64 * (q + 1))));
    rhs = rhs.add(&q_poly(m, 1).mul_mono(&zzb(m64 * (q - 1) + r)).scale(&last));
    Ok((lhs, rhs))
}

/// The characteristic polynomial of J_{n+1,c} in closed form, multiplied by
/// (1−c)(2−c)⋯(q−c) so that every coefficient is a polynomial in c.
pub fn charpoly_closed(m: u32, n: u32) -> MPoly<CPoly> {
    let vs = zvars();
    let (m, n) = (m as u64, n as u64);
    let q = n / m;
    let clear = |lo: u64| (lo..=q).fold(CPoly::one(), |a, i| a.mul(&ci(i as i64).sub(&c())));
    let rising = |k: u64| (0..k as i64).fold(CPoly::one(), |a, i| a.mul(&c().add(&ci(i))));
    let monos: Vec<Mono> = (0..=2 * n).map(|i| Mono(vec![i as u32, (2 * n - i) as u32])).collect();
    let mut d = vec![CPoly::zero(); monos.len()];
    d[n as usize] = clear(1);
    for k in 1..=q {
        let coeff = rising(k).mul(&clear(k + 1)).scale(&Rat::from(sign(m * k)));
        d[(n - m * k) as usize] = d[(n - m * k) as usize].add(&coeff);
        d[(n + m * k) as usize] = d[(n + m * k) as usize].add(&coeff);
    }
    from_divided(&vs, &monos, &d)
}

pub fn charpoly_closed_at(m: u32, n: u32, c0: &Rat) -> Result<MPoly<Rat>> {
    charpoly_closed(m, n).specialize(std::slice::from_ref(c0))
}

/// Δ = −∂²/∂z∂z̄.
pub fn laplacian<R: Ring>(p: &MPoly<R>) -> MPoly<R> {
    p.derivative(0).derivative(1).neg()
}

/// The scalar a with Δ p_{2n} = a·p_{2(n−1)} for the cleared closed forms at c₀.
pub fn laplace_descent_check(m: u32, n: u32, c0: &Rat) -> Result<Rat> {
    if n == 0 {
        return Err(AlgebraError::Precondition("n ≥ 1".into()));
    }
    let top = laplacian(&charpoly_closed_at(m, n, c0)?);
    let below = charpoly_closed_at(m, n - 1, c0)?;
    if below.is_zero() {
        return if top.is_zero() {
            Err(AlgebraError::CheckFailed("both sides vanish".into()))
        } else {
            Err(AlgebraError::CheckFailed(format!("p_{} vanishes at c = {c0}", 2 * (n - 1))))
        };
    }
    proportionality(&top, &below)
        .ok_or_else(|| AlgebraError::CheckFailed(format!("Δ p_{} is not proportional to p_{}", 2 * n, 2 * (n - 1))))
}

/// 𝒫_{n,c₀} = ℚ[z, z̄]/J_{n+1,c₀}.
#[derive(Clone, Debug)]
pub struct QuotientAlgebra {
    pub m: u32,
    pub n: u32,
    pub c0: Vec<Rat>,
    pub generators: Vec<MPoly<Rat>>,
    pub graded_dims: Vec<usize>,
    pub total_dim: usize,
    pub socle_degree: u32,
    ideal: GradedIdeal,
}

/// Degreewise J_{n,c₀} for I₂(m), generated by the quasiharmonics of degree n
/// (solved directly from the Dunkl operators, independently of ρ and S).
pub fn quasiharmonic_ideal(m: u32, n: u32, c0: &[Rat]) -> Result<GradedIdeal> {
    let g = Arc::new(GroupModel::dihedral(m));
    let ctx = DunklContext::rational(g.clone(), c0)?;
    let gens = qh_space(&ctx, n, QHKind::Quasiharmonic)?.basis;
    GradedIdeal::new(&g.vars, &gens)
}

pub fn ideal_graded(m: u32, n: u32, c0: &[Rat], cap: u32) -> Result<QuotientAlgebra> {
    if cap < 2 * n + 2 {
        return Err(AlgebraError::Precondition(format!("cap {cap} below 2n + 2")));
    }
    let mut ideal = quasiharmonic_ideal(m, n + 1, c0)?;
    let graded_dims = ideal.quotient_dims(cap)?;
    Ok(QuotientAlgebra {
        m,
        n,
        c0: c0.to_vec(),
        generators: ideal.generators().to_vec(),
        total_dim: graded_dims.iter().sum(),
        socle_degree: graded_dims.len() as u32 - 1,
        graded_dims,
        ideal,
    })
}

impl QuotientAlgebra {
    /// Whether p is zero in 𝒫_{n,c₀}.
    pub fn reduces_to_zero(&mut self, p: &MPoly<Rat>) -> Result<bool> {
        self.ideal.contains(p)
    }

    pub fn is_symmetric(&self) -> bool {
        self.graded_dims.iter().eq(self.graded_dims.iter().rev())
    }

    pub fn has_simple_socle(&self) -> bool {
        self.graded_dims.last() == Some(&1)
    }

    pub fn ideal(&mut self) -> &mut GradedIdeal {
        &mut self.ideal
    }

    /// z z̄·J_{n,c₀} ⊂ J_{n+1,c₀}, checked on a basis of each component up to degree kmax.
    pub fn zzbar_forward(&mut self, kmax: u32) -> Result<bool> {
        let mut lower = quasiharmonic_ideal(self.m, self.n, &self.c0)?;
        let zzb = Mono(vec![1, 1]);
        for k in self.n..=kmax {
            for p in lower.basis(k)? {
                if !self.ideal.contains(&p.mul_mono(&zzb))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// For each degree k ≤ kmax: (k, dim {P : z z̄ P ∈ J_{n+1}}, dim J_{n,k}).
    /// Equal numbers in every degree are what the converse inclusion predicts.
    pub fn zzbar_converse_evidence(&mut self, kmax: u32) -> Result<Vec<(u32, usize, usize)>> {
        let mut lower = quasiharmonic_ideal(self.m, self.n, &self.c0)?;
        let vs = self.ideal.vars().clone();
        let mut out = Vec::new();
        for k in 0..=kmax {
            let zzb_images: Vec<MPoly<Rat>> = (0..=k)
                .map(|i| MPoly::monomial(&vs, Mono(vec![i + 1, k - i + 1]), Rat::one()))
                .collect();
            let upper = self.ideal.basis(k + 2)?;
            let both = upper.iter().chain(zzb_images.iter()).cloned().collect::<Vec<_>>();
            let joint = GradedIdeal::new(&vs, &both)?.dim(k + 2)?;
            let preimage = (k as usize + 1) + upper.len() - joint;
            out.push((k, preimage, lower.dim(k)?));
        }
        Ok(out)
    }
}

/// Results of the membership statements for n = mq + r at c₀.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMembership {
    /// z^r z̄^r Q_q ∈ J_{n+1,c₀}.
    pub q_member: bool,
    /// z^{2n−r} z̄^r ∈ J_{n+1,c₀}, tested when c₀ ∈ {−1, …, −q+1}.
    pub zeros: Option<bool>,
    /// z^{n+m+r} z̄^{n−m−r} ∈ J_{n+1,c₀}, tested when c₀ ∈ {1, …, q}.
    pub monomial: Option<bool>,
}

pub fn q_membership(m: u32, q: u32, r: u32, c0: &Rat) -> Result<QMembership> {
    if q == 0 || r >= m {
        return Err(AlgebraError::Precondition("q ≥ 1 and 0 ≤ r < m".into()));
    }
    let n = m * q + r;
    let mut ideal = quasiharmonic_ideal(m, n + 1, std::slice::from_ref(c0))?;
    let vs = ideal.vars().clone();
    let qq = q_poly(m, q).specialize(std::slice::from_ref(c0))?.mul_mono(&Mono(vec![r, r]));
    let q_member = ideal.contains(&qq)?;
    let int = c0.is_integer().then(|| c0.numer().clone());
    let in_range = |lo: i64, hi: i64| int.as_ref().is_some_and(|v| *v >= lo.into() && *v <= hi.into());
    let zeros = if in_range(-(q as i64) + 1, -1) {
        Some(ideal.contains(&MPoly::monomial(&vs, Mono(vec![2 * n - r, r]), Rat::one()))?)
    } else {
        None
    };
    let monomial = if in_range(1, q as i64) {
        Some(ideal.contains(&MPoly::monomial(&vs, Mono(vec![n + m + r, n - m - r]), Rat::one()))?)
    } else {
        None
    };
    Ok(QMembership { q_member, zeros, monomial })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::q;

    #[test]
    fn rho_small_cases() {
        let r = rho(3, 2).unwrap();
        assert_eq!(r.rho, MPoly::monomial(&zvars(), Mono(vec![2, 0]), CPoly::one()));
        let r3 = rho(3, 3).unwrap().rho;
        let expect = mono(&zvars(), 3, 0, c().sub(&ci(1))).sub(&mono(&zvars(), 0, 3, c()));
        assert_eq!(r3, expect);
    }

    #[test]
    fn basis_switch_is_polynomial() {
        let b = qh_basis_dihedral(3, 3).unwrap();
        assert_eq!(b.len(), 2);
        let at0 = qh_basis_dihedral_at(3, 4, &Rat::zero()).unwrap();
        assert!(at0.iter().all(|p| p.num_terms() == 1));
    }

    #[test]
    fn quotient_m3_n2() {
        let alg = ideal_graded(3, 2, &[q(1, 7)], 8).unwrap();
        assert_eq!(alg.graded_dims, vec![1, 2, 3, 2, 1]);
        assert_eq!(alg.total_dim, 9);
    }
}
