//! Harmonic and quasiharmonic spaces, deformed invariants, isotypic
//! components, singular vectors, Jack polynomials and the S_n family q_{i,r}.

use crate::coxeter::{perm_map, GroupKind, GroupModel};
use crate::dunkl::DunklContext;
use crate::error::{AlgebraError, Result};
use crate::linsolve::{rank_over_parameters, rational_content, rref, ExceptionalLocus, KernelRing, Matrix};
use crate::ring::{monomials_of_degree, CPoly, Field, MPoly, Mono, ParamRing, QZeta, Rat, RatFunc, Ring, Vars};

/// Which invariant Dunkl operators must annihilate the space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QHKind {
    /// All invariant generators.
    Harmonic,
    /// Generators of degree below the Coxeter number.
    Quasiharmonic,
    /// Generators of degree below d.
    Truncated(u32),
}

impl QHKind {
    /// Indices of the invariant generators imposed as conditions.
    pub fn generator_indices(&self, g: &GroupModel) -> Vec<usize> {
        let bound = match *self {
            QHKind::Harmonic => u32::MAX,
            QHKind::Quasiharmonic => g.coxeter_number,
            QHKind::Truncated(d) => d,
        };
        (0..g.degrees.len()).filter(|&j| g.degrees[j] < bound).collect()
    }

    /// Closed-form Hilbert series numerator factors: Π (1 − t^{d_j}) over the imposed generators.
    pub fn predicted_dims(&self, g: &GroupModel, nmax: u32) -> Vec<i64> {
        let num: Vec<u32> = self.generator_indices(g).iter().map(|&j| g.degrees[j]).collect();
        series(&num, &vec![1; g.rank], nmax)
    }
}

/// Coefficients up to t^nmax of Π(1 − t^{a}) / Π(1 − t^{b}).
pub fn series(num: &[u32], den: &[u32], nmax: u32) -> Vec<i64> {
    let len = nmax as usize + 1;
    let mut s = vec![0i64; len];
    s[0] = 1;
    for &a in num {
        for k in (a as usize..len).rev() {
            s[k] -= s[k - a as usize];
        }
    }
    for &b in den {
        for k in b as usize..len {
            s[k] += s[k - b as usize];
        }
    }
    s
}

/// Multiplies a series by 1/Π(1 − t^{b}).
pub fn series_divide(s: &[i64], den: &[u32]) -> Vec<i64> {
    let mut out = s.to_vec();
    for &b in den {
        for k in b as usize..out.len() {
            out[k] += out[k - b as usize];
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct QHSpace<R: Ring> {
    pub degree: u32,
    pub kind: QHKind,
    pub basis: Vec<MPoly<R>>,
}

impl<R: Ring> QHSpace<R> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Stacked matrices of ∇_{e_{d_j}} (j in `gens`) on the degree-n monomials.
pub fn constraint_matrix<R: Ring>(ctx: &DunklContext<R>, gens: &[usize], n: u32) -> Result<Matrix<R>> {
    let cols = monomials_of_degree(ctx.group.rank, n).len();
    let mut m = Matrix::zeros(0, cols);
    for &j in gens {
        let op = &ctx.group.dual_invariant_generators[j];
        m = m.vstack(&ctx.operator_matrix(op, n)?);
    }
    Ok(m)
}

fn polys_from_kernel<R: Ring>(vs: &Vars, monos: &[Mono], ker: Vec<Vec<R>>) -> Vec<MPoly<R>> {
    ker.iter().map(|v| MPoly::from_coords(vs, monos, v)).collect()
}

/// Kernel of the kind's invariant Dunkl operators on degree n.
pub fn qh_space<R: KernelRing>(ctx: &DunklContext<R>, n: u32, kind: QHKind) -> Result<QHSpace<R>> {
    let g = &ctx.group;
    let monos = monomials_of_degree(g.rank, n);
    let m = constraint_matrix(ctx, &kind.generator_indices(g), n)?;
    let basis = polys_from_kernel(&g.vars, &monos, R::kernel(&m));
    Ok(QHSpace { degree: n, kind, basis })
}

/// Generic dimension and exceptional values of a single-parameter QH space.
pub fn qh_locus(ctx: &DunklContext<CPoly>, n: u32, kind: QHKind, seed: u64) -> Result<(usize, ExceptionalLocus)> {
    let m = constraint_matrix(ctx, &kind.generator_indices(&ctx.group), n)?;
    if m.rows() == 0 {
        let cols = m.cols();
        let locus = rank_over_parameters(&Matrix::zeros(1, cols), seed);
        return Ok((cols, locus));
    }
    let locus = rank_over_parameters(&m, seed);
    Ok((m.cols() - locus.generic_rank, locus))
}

/// Common kernel of all coordinate Dunkl operators on degree n.
pub fn singular_vectors(ctx: &DunklContext<Rat>, n: u32) -> Result<Vec<MPoly<Rat>>> {
    let g = &ctx.group;
    let monos = monomials_of_degree(g.rank, n);
    let mut m = Matrix::zeros(0, monos.len());
    for k in 0..ctx.num_coords() {
        let op = MPoly::var(&g.dual_vars, k);
        m = m.vstack(&ctx.operator_matrix(&op, n)?);
    }
    Ok(polys_from_kernel(&g.vars, &monos, Rat::kernel(&m)))
}

/// An invariant killed by the lower invariant Dunkl operators.
#[derive(Clone, Debug)]
pub struct DeformedInvariant {
    pub degree: u32,
    pub polynomial: MPoly<CPoly>,
    /// Coordinates against products of the classical generators (exponent vectors).
    pub generator_coords: Vec<(Vec<u32>, CPoly)>,
}

impl DeformedInvariant {
    /// The invariant as a polynomial in the generator symbols E1..Eℓ.
    pub fn in_generators(&self) -> MPoly<CPoly> {
        let names: Vec<String> = (1..=self.generator_coords[0].0.len()).map(|i| format!("E{i}")).collect();
        let vs: Vars = names.into();
        MPoly::from_terms(&vs, self.generator_coords.iter().map(|(e, c)| (Mono(e.clone()), c.clone())))
    }
}

/// Operators imposed on a degree-d invariant: generators of degree below min(d, h).
fn invariant_conditions(g: &GroupModel, d: u32) -> Vec<usize> {
    let bound = d.min(g.coxeter_number);
    (0..g.degrees.len()).filter(|&j| g.degrees[j] < bound).collect()
}

/// Degree-d invariants annihilated by the lower invariant operators, as
/// coordinate vectors against `invariant_basis(d)`.
pub fn invariant_kernel<R: KernelRing>(ctx: &DunklContext<R>, d: u32) -> Result<Vec<(Vec<R>, MPoly<R>)>> {
    let g = &ctx.group;
    let basis = g.invariant_basis(d);
    let polys: Vec<MPoly<R>> = basis.iter().map(|(_, p)| p.map_coeffs(R::from_rat)).collect();
    let mut rows: Vec<Vec<R>> = Vec::new();
    for j in invariant_conditions(g, d) {
        let op = &g.dual_invariant_generators[j];
        let images = polys.iter().map(|p| ctx.nabla(op, p)).collect::<Result<Vec<_>>>()?;
        let target = monomials_of_degree(g.rank, d - g.degrees[j]);
        for mono in &target {
            rows.push(images.iter().map(|im| im.coeff(mono)).collect());
        }
    }
    let m = Matrix::from_rows(polys.len(), rows);
    Ok(R::kernel(&m)
        .into_iter()
        .map(|v| {
            let p = v
                .iter()
                .zip(&polys)
                .fold(MPoly::zero(&g.vars), |acc, (a, b)| acc.add(&b.scale(a)));
            (v, p)
        })
        .collect())
}

/// Divides by the gcd of the coefficients and the rational content, and fixes
/// the sign by the leading coefficient of the leading term. Returns the factor
/// g and the rational scale s with result = p / g · s.
pub fn primitive_poly(p: &MPoly<CPoly>) -> (MPoly<CPoly>, CPoly, Rat) {
    let g = p.terms().fold(CPoly::zero(), |g, (_, c)| g.gcd(c));
    if g.is_zero() {
        return (p.clone(), CPoly::one(), Rat::one());
    }
    let q = p.map_coeffs(|c| c.div_exact(&g).expect("gcd divides"));
    let content = rational_content(q.terms().flat_map(|(_, c)| c.terms().map(|(_, r)| r.clone())));
    let neg = q.leading().map(|(_, c)| c.leading_coeff().is_negative()).unwrap_or(false);
    let s = if neg { content.recip().neg() } else { content.recip() };
    (q.scale(&CPoly::constant(s.clone())), g, s)
}

/// The deformed invariant of degree d over ℚ[c₁,c₂], content-free with the
/// sign convention of [`primitive_poly`].
pub fn deformed_invariant(ctx: &DunklContext<CPoly>, d: u32) -> Result<DeformedInvariant> {
    let g = &ctx.group;
    let mut ker = invariant_kernel(ctx, d)?;
    if ker.len() != 1 {
        return Err(AlgebraError::Precondition(format!(
            "invariant space of degree {d} has dimension {} over the parameter field",
            ker.len()
        )));
    }
    let (v, p) = ker.pop().unwrap();
    let (poly, gcd, s) = primitive_poly(&p);
    let generator_coords = g
        .invariant_basis(d)
        .into_iter()
        .zip(v)
        .filter(|(_, a)| !a.is_zero())
        .map(|((e, _), a)| (e, a.div_exact(&gcd).expect("gcd divides").scale(&s)))
        .collect();
    Ok(DeformedInvariant { degree: d, polynomial: poly, generator_coords })
}

/// Certifies independence by a full-rank Jacobian, in generator coordinates,
/// at the parameter value `c0` and a seeded rational point.
pub fn algebraic_independence_check(invs: &[DeformedInvariant], c0: &[Rat], seed: u64) -> Result<bool> {
    use rand::{Rng, SeedableRng};
    let Some(first) = invs.first() else { return Ok(true) };
    let l = first.generator_coords[0].0.len();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let point: Vec<Rat> = (0..l).map(|_| Rat::new(rng.gen_range(-30..=30), rng.gen_range(1..=9))).collect();
    let mut rows = Vec::new();
    for inv in invs {
        let f = inv.in_generators().specialize(c0)?;
        rows.push((0..l).map(|j| f.derivative(j).eval_at(&point)).collect());
    }
    let jac = Matrix::from_rows(l, rows);
    Ok(rref(&jac).1.len() == l.min(invs.len()) && invs.len() == l)
}

/// (dim χ/|W|)·Σ_g χ(g)·g(p) for the irreducible named `target`.
fn project<R: Ring>(g: &GroupModel, target: &str, p: &MPoly<R>) -> Result<MPoly<R>> {
    let table = g.character_table();
    let idx = table
        .index_of(target)
        .ok_or_else(|| AlgebraError::Precondition(format!("unknown irreducible {target}")))?;
    let irr = &table.irreps[idx];
    let mut acc = MPoly::zero(p.vars());
    for (map, class) in g.elements() {
        let chi = irr.values[class].conj();
        if chi.is_zero() {
            continue;
        }
        let w = R::from_qzeta(&chi)
            .ok_or_else(|| AlgebraError::DomainMismatch("character value needs a cyclotomic domain".into()))?;
        acc = acc.add(&map.apply(p)?.scale(&w));
    }
    let scale = Rat::new(irr.dim as i64, g.order as i64);
    Ok(acc.scale(&R::from_rat(&scale)))
}

fn row_basis<F: crate::ring::Field>(vs: &Vars, polys: &[MPoly<F>]) -> Vec<MPoly<F>> {
    let mut monos: Vec<Mono> = polys.iter().flat_map(|p| p.terms().map(|(m, _)| m.clone())).collect();
    monos.sort_by(|a, b| b.cmp(a));
    monos.dedup();
    if monos.is_empty() {
        return Vec::new();
    }
    let rows = polys.iter().map(|p| monos.iter().map(|m| p.coeff(m)).collect()).collect();
    let (r, piv) = rref(&Matrix::from_rows(monos.len(), rows));
    (0..piv.len()).map(|i| MPoly::from_coords(vs, &monos, r.row(i))).collect()
}

/// The copy of `target` inside the span of a W-stable rational basis.
pub fn isotypic_component(g: &GroupModel, basis: &[MPoly<Rat>], target: &str) -> Result<Vec<MPoly<Rat>>> {
    let mults = g.decompose_module(basis)?;
    let mult = mults.iter().find(|(n, _)| n == target).map(|x| x.1).unwrap_or(0);
    if mult == 0 {
        return Ok(Vec::new());
    }
    if mult > 1 {
        return Err(AlgebraError::Unsupported(format!("{target} occurs {mult} times")));
    }
    let lifted: Vec<MPoly<QZeta>> = basis.iter().map(crate::coxeter::lift_poly).collect();
    let images = lifted.iter().map(|p| project(g, target, p)).collect::<Result<Vec<_>>>()?;
    row_basis(&g.vars, &images)
        .into_iter()
        .map(|p| {
            p.try_map_coeffs(|c| {
                c.as_scalar()
                    .ok_or_else(|| AlgebraError::Unsupported(format!("{target} component is not defined over Q")))
            })
        })
        .collect()
}

/// Does ∇ over the invariants of degree kh (k ≥ 1, kh ≥ n) span QH_n?
pub fn generation_check(ctx: &DunklContext<Rat>, n: u32) -> Result<bool> {
    if n == 0 {
        return Ok(true);
    }
    let g = &ctx.group;
    let h = g.coxeter_number;
    let target = qh_space(ctx, n, QHKind::Quasiharmonic)?;
    let k0 = n.div_ceil(h);
    let mut images: Vec<MPoly<Rat>> = Vec::new();
    for k in k0..=k0 + 1 {
        let mut ker = invariant_kernel(ctx, k * h)?;
        if ker.len() != 1 {
            return Ok(false);
        }
        let e = ker.pop().unwrap().1;
        for mono in monomials_of_degree(g.dual_vars.len(), k * h - n) {
            let p = MPoly::monomial(&g.dual_vars, mono, Rat::one());
            let im = ctx.nabla(&p, &e)?;
            if !im.is_zero() {
                images.push(im);
            }
        }
    }
    let spanned = row_basis(&g.vars, &images);
    if spanned.len() != target.dim() {
        return Ok(false);
    }
    let both: Vec<MPoly<Rat>> = spanned.iter().chain(&target.basis).cloned().collect();
    Ok(row_basis(&g.vars, &both).len() == target.dim())
}

#[derive(Clone, Debug)]
pub struct HilbertRow {
    pub degree: u32,
    pub dim: usize,
    pub predicted_dim: i64,
    pub multiplicities: Vec<(String, usize)>,
}

/// Dimensions and irreducible multiplicities of the kind's spaces up to nmax.
pub fn hilbert_table(ctx: &DunklContext<Rat>, kind: QHKind, nmax: u32) -> Result<Vec<HilbertRow>> {
    let predicted = kind.predicted_dims(&ctx.group, nmax);
    (0..=nmax)
        .map(|n| {
            let sp = qh_space(ctx, n, kind)?;
            let multiplicities = if sp.basis.is_empty() {
                Vec::new()
            } else {
                ctx.group.decompose_module(&sp.basis)?
            };
            Ok(HilbertRow { degree: n, dim: sp.dim(), predicted_dim: predicted[n as usize], multiplicities })
        })
        .collect()
}

/// Predicted [V : QH_r] for r ≥ 1 (distinct degrees only).
pub fn defining_multiplicity(g: &GroupModel, r: u32) -> usize {
    let h = g.coxeter_number;
    g.degrees.iter().filter(|&&d| r % h == (d - 1) % h).count()
}

/// Binomial coefficient C(c, k) as a polynomial in c₁.
fn binom_c(k: u32) -> CPoly {
    let c = CPoly::param(0);
    let mut acc = CPoly::one();
    for j in 0..k {
        acc = acc.mul(&c.sub(&CPoly::from_i64(j as i64)));
    }
    let fact: i64 = (1..=k as i64).product();
    acc.scale(&Rat::new(1, fact))
}

/// The coefficient of u^r in Π_j(1 − x_j u)^c / (1 − x_i u), restricted to
/// x_n = 0 and written in the difference coordinates v (i is 0-based).
pub fn jack_f(n: usize, i: usize, r: u32) -> MPoly<CPoly> {
    let names: Vec<String> = (1..=n).map(|k| format!("x{k}")).collect();
    let xs: Vars = names.into();
    // Series in u stored as a vector of coefficients up to u^r.
    let one = MPoly::<CPoly>::one(&xs);
    let mut series = vec![MPoly::zero(&xs); r as usize + 1];
    series[0] = one.clone();
    for j in 0..n {
        let xj = MPoly::<CPoly>::var(&xs, j);
        let factor: Vec<MPoly<CPoly>> = (0..=r)
            .map(|k| {
                let sign = if k % 2 == 0 { Rat::one() } else { Rat::one().neg() };
                xj.pow(k).scale(&binom_c(k).scale(&sign))
            })
            .collect();
        series = mul_series(&series, &factor);
    }
    let xi = MPoly::<CPoly>::var(&xs, i);
    let geom: Vec<MPoly<CPoly>> = (0..=r).map(|k| xi.pow(k)).collect();
    let full = mul_series(&series, &geom);
    let target = &full[r as usize];
    let vs: Vars = (1..n).map(|k| format!("v{k}")).collect::<Vec<_>>().into();
    let mut images: Vec<MPoly<CPoly>> = (0..n - 1).map(|k| MPoly::var(&vs, k)).collect();
    images.push(MPoly::zero(&vs));
    target.substitute(&images).expect("image count matches")
}

fn mul_series(a: &[MPoly<CPoly>], b: &[MPoly<CPoly>]) -> Vec<MPoly<CPoly>> {
    let len = a.len().min(b.len());
    let vs = a[0].vars().clone();
    (0..len)
        .map(|k| (0..=k).fold(MPoly::zero(&vs), |acc, j| acc.add(&a[j].mul(&b[k - j]))))
        .collect()
}

/// One level r of the S_n family: q_{i,r} = kappa·w(raw) with w(n) = i.
#[derive(Clone, Debug)]
pub struct QLevel {
    pub r: u32,
    /// Primitive S_{n−1}-invariant generator of V^(r;c) (or e_{kn}^(c)).
    pub raw: MPoly<CPoly>,
    /// β with ∇_{x_n} raw_r = β·raw_{r−1}.
    pub beta: CPoly,
    /// Normalization making α_r = r − nc.
    pub kappa: RatFunc,
}

impl QLevel {
    /// q_{i,r} for 0-based i, over ℚ(c).
    pub fn q(&self, n: usize, i: usize) -> Result<MPoly<RatFunc>> {
        let p = transposition(n, i).apply(&self.raw)?;
        Ok(p.map_coeffs(|c| RatFunc::from(c.clone())).scale(&self.kappa))
    }
}

#[derive(Clone, Debug)]
pub struct QFamily {
    pub n: usize,
    pub levels: Vec<QLevel>,
}

/// Outcome of checking one level of the recursion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QCheck {
    pub r: u32,
    /// ∇_{x_i} q_{i,r} = (r − nc)·q_{i,r−1} for every i.
    pub recursion: bool,
    /// q_{i,r} is finite and nonzero at c = r/n.
    pub nonvanishing: bool,
    /// Σ_i q_{i,r} = 0 (required when n ∤ r).
    pub sum_zero: bool,
}

fn transposition(n: usize, i: usize) -> crate::coxeter::LinearMap {
    let mut sigma: Vec<usize> = (0..n).collect();
    sigma.swap(i, n - 1);
    perm_map(n, &sigma)
}

/// Multiplicity of c₁ = p as a root of a univariate parameter polynomial.
fn root_order(f: &CPoly, p: &Rat) -> i64 {
    let mut u = f.to_upoly(0).expect("single parameter");
    let lin = crate::ring::UPoly::linear(p);
    let mut k = 0;
    while !u.is_zero() {
        let (quo, rem) = u.divrem(&lin);
        if !rem.is_zero() {
            break;
        }
        u = quo;
        k += 1;
    }
    k
}

fn order_at(f: &RatFunc, p: &Rat) -> i64 {
    root_order(f.numer(), p) - root_order(f.denom(), p)
}

/// Builds the levels r = 0..=rmax of the q-family for S_n over ℚ[c].
///
/// The ratios κ_r/κ_{r−1} = (r − nc)/β_r are forced, so the only freedom is
/// the c-dependent scalar κ_0 in front of q_{i,0} = 1. It is chosen to cancel
/// the zero or pole of κ_0⁻¹κ_r at c = r/n for every level.
pub fn q_family(ctx: &DunklContext<CPoly>, rmax: u32) -> Result<QFamily> {
    let g = ctx.group.clone();
    let n = match g.kind {
        GroupKind::Symmetric(n) => n,
        _ => return Err(AlgebraError::Precondition("the q-family is defined for S_n".into())),
    };
    let defining = g.defining_irrep();
    let stab: Vec<_> = crate::coxeter::permutations(n - 1)
        .into_iter()
        .map(|mut s| {
            s.push(n - 1);
            perm_map(n, &s)
        })
        .collect();
    let mut levels = vec![QLevel {
        r: 0,
        raw: MPoly::one(&g.vars),
        beta: CPoly::one(),
        kappa: RatFunc::from(CPoly::one()),
    }];
    for r in 1..=rmax {
        let raw = if (r as usize).is_multiple_of(n) {
            deformed_invariant(ctx, r)?.polynomial
        } else {
            let space = qh_space(ctx, r, QHKind::Quasiharmonic)?;
            let mut found = None;
            for b in &space.basis {
                let v = project(&g, &defining, b)?;
                let avg = stab.iter().try_fold(MPoly::zero(&g.vars), |acc, w| w.apply(&v).map(|x| acc.add(&x)))?;
                if !avg.is_zero() {
                    found = Some(primitive_poly(&avg).0);
                    break;
                }
            }
            found.ok_or_else(|| AlgebraError::CheckFailed(format!("no S_(n-1)-invariant in V^({r};c)")))?
        };
        let prev = &levels[r as usize - 1];
        let image = ctx.coord(n - 1, &raw)?;
        let beta = proportionality(&image, &prev.raw).ok_or_else(|| {
            AlgebraError::CheckFailed(format!("∇_(x_n) q_(n,{r}) is not proportional to q_(n,{})", r - 1))
        })?;
        if beta.is_zero() {
            return Err(AlgebraError::CheckFailed(format!("normalization impossible at r = {r}")));
        }
        let alpha = CPoly::linear(Rat::from(r as i64), Rat::from(-(n as i64)));
        let kappa = prev.kappa.mul(&RatFunc::from(alpha)).div(&RatFunc::from(beta.clone()));
        levels.push(QLevel { r, raw, beta, kappa });
    }
    let mut base = RatFunc::from(CPoly::one());
    for lv in &levels {
        let p = Rat::new(lv.r as i64, n as i64);
        let k = order_at(&lv.kappa, &p);
        let lin = RatFunc::from(CPoly::linear(p.neg(), Rat::one()));
        for _ in 0..k.abs() {
            base = if k > 0 { base.div(&lin) } else { base.mul(&lin) };
        }
    }
    for lv in &mut levels {
        lv.kappa = lv.kappa.mul(&base);
    }
    Ok(QFamily { n, levels })
}

impl QFamily {
    /// Re-derives every level's recursion for all i, independently of how the
    /// family was built (which only used i = n).
    pub fn verify(&self, ctx: &DunklContext<CPoly>) -> Result<Vec<QCheck>> {
        let n = self.n;
        let vs = ctx.group.vars.clone();
        let mut out = Vec::new();
        for w in self.levels.windows(2) {
            let (prev, cur) = (&w[0], &w[1]);
            let alpha = RatFunc::from(CPoly::linear(Rat::from(cur.r as i64), Rat::from(-(n as i64))));
            let mut recursion = alpha == cur.kappa.mul(&RatFunc::from(cur.beta.clone())).div(&prev.kappa);
            let mut sum = MPoly::zero(&vs);
            for i in 0..n {
                let t = transposition(n, i);
                let qi = t.apply(&cur.raw)?;
                let pi = t.apply(&prev.raw)?;
                recursion &= ctx.coord(i, &qi)? == pi.scale(&cur.beta);
                sum = sum.add(&qi);
            }
            let at = Rat::new(cur.r as i64, n as i64);
            let nonvanishing = order_at(&cur.kappa, &at) == 0;
            let sum_zero = (cur.r as usize).is_multiple_of(n) || sum.is_zero();
            out.push(QCheck { r: cur.r, recursion, nonvanishing, sum_zero });
        }
        Ok(out)
    }
}

/// λ with a = λ·b, when it exists in the coefficient ring (a may be zero).
pub fn proportionality<R: Ring>(a: &MPoly<R>, b: &MPoly<R>) -> Option<R> {
    let (mb, cb) = b.leading()?;
    let lam = a.coeff(mb).div_exact(cb)?;
    (b.scale(&lam) == *a).then_some(lam)
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::q;
    use std::sync::Arc;

    #[test]
    fn series_expansion() {
        // (1−t²)(1−t³)/(1−t)³
        assert_eq!(series(&[2, 3], &[1, 1, 1], 5), vec![1, 3, 5, 6, 6, 6]);
    }

    #[test]
    fn dihedral_dims_are_two() {
        let g = Arc::new(GroupModel::dihedral(5));
        let ctx = DunklContext::symbolic(g);
        for n in 1..=6 {
            assert_eq!(qh_space(&ctx, n, QHKind::Quasiharmonic).unwrap().dim(), 2, "n = {n}");
        }
    }

    #[test]
    fn s4_e4_matches_formula() {
        let g = Arc::new(GroupModel::symmetric(4));
        let ctx = DunklContext::symbolic(g.clone());
        let inv = deformed_invariant(&ctx, 4).unwrap();
        let c = CPoly::param(0);
        let e2 = &g.invariant_generators[0];
        let e4 = &g.invariant_generators[2];
        let lift = |p: &MPoly<Rat>| p.map_coeffs(|x| CPoly::constant(x.clone()));
        let expect = lift(e4)
            .scale(&c.scale(&q(48, 1)).sub(&CPoly::from_i64(20)))
            .sub(&lift(&e2.mul(e2)).scale(&c.scale(&q(4, 1)).sub(&CPoly::one())));
        assert!(inv.polynomial.is_proportional(&expect));
    }

    #[test]
    fn jack_at_zero_is_power() {
        let f = jack_f(3, 0, 2).specialize(&[Rat::zero()]).unwrap();
        let vs = f.vars().clone();
        assert_eq!(f, MPoly::var(&vs, 0).pow(2));
    }

    #[test]
    fn jack_singular_at_two_thirds() {
        let g = Arc::new(GroupModel::symmetric(3));
        let ctx = DunklContext::rational(g.clone(), &[q(2, 3)]).unwrap();
        for i in 0..3 {
            let f = jack_f(3, i, 2).specialize(&[q(2, 3)]).unwrap().with_vars(&g.vars).unwrap();
            assert!(!f.is_zero());
            for k in 0..3 {
                assert!(ctx.coord(k, &f).unwrap().is_zero());
            }
        }
    }
}
