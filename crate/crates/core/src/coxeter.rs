//! Realizations of S_n (in difference coordinates) and I₂(m) (in z, z̄):
//! reflections, polynomial action, invariants and character theory.

use crate::error::{AlgebraError, Result};
use crate::linsolve::{rref, Matrix};
use crate::ring::{vars, Field, MPoly, Mono, QZeta, Rat, Ring, Vars};
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupKind {
    Symmetric(usize),
    Dihedral(u32),
}

impl FromStr for GroupKind {
    type Err = AlgebraError;
    /// Accepts `Sn:4` and `I2:5`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || AlgebraError::Parse(format!("unknown group {s:?}; expected Sn:<n> or I2:<m>"));
        let (kind, size) = s.split_once(':').ok_or_else(bad)?;
        let size: u32 = size.trim().parse().map_err(|_| bad())?;
        match kind.trim() {
            "Sn" | "S" | "A" => Ok(GroupKind::Symmetric(size as usize)),
            "I2" | "I" => Ok(GroupKind::Dihedral(size)),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::Symmetric(n) => write!(f, "S{n}"),
            GroupKind::Dihedral(m) => write!(f, "I2({m})"),
        }
    }
}

/// A linear substitution: variable k goes to Σ_l images[k][l]·x_l.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    pub images: Vec<Vec<QZeta>>,
}

impl LinearMap {
    pub fn identity(n: usize) -> Self {
        let images = (0..n)
            .map(|k| (0..n).map(|l| if k == l { QZeta::one() } else { QZeta::zero() }).collect())
            .collect();
        LinearMap { images }
    }

    /// The map applying `inner` first and then `self`: x ↦ self(inner(x)).
    pub fn after(&self, inner: &LinearMap) -> LinearMap {
        let n = self.images.len();
        let images = (0..n)
            .map(|k| {
                (0..n)
                    .map(|p| {
                        (0..n).fold(QZeta::zero(), |acc, l| {
                            acc.add(&inner.images[k][l].mul(&self.images[l][p]))
                        })
                    })
                    .collect()
            })
            .collect();
        LinearMap { images }
    }

    /// Algebra automorphism induced on polynomials.
    pub fn apply<R: Ring>(&self, p: &MPoly<R>) -> Result<MPoly<R>> {
        let v = p.vars();
        let mut imgs = Vec::with_capacity(v.len());
        for row in &self.images {
            let mut t = MPoly::zero(v);
            for (l, a) in row.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let a = R::from_qzeta(a).ok_or_else(|| {
                    AlgebraError::DomainMismatch(format!("coefficient {a:?} needs a cyclotomic domain"))
                })?;
                t = t.add(&MPoly::var(v, l).scale(&a));
            }
            imgs.push(t);
        }
        p.substitute(&imgs)
    }
}

#[derive(Clone, Debug)]
pub struct Reflection {
    pub index: usize,
    pub label: String,
    /// Root α_s as a linear form in the coordinate variables.
    pub root: Vec<QZeta>,
    /// Coroot as a functional: ⟨α_s∨, x_k⟩ = coroot[k].
    pub coroot: Vec<QZeta>,
    pub class_index: usize,
    pub map: LinearMap,
}

impl Reflection {
    fn new(index: usize, label: String, root: Vec<QZeta>, coroot: Vec<QZeta>, class_index: usize) -> Self {
        // s(x) = x − ⟨α∨, x⟩ α
        let n = root.len();
        let images = (0..n)
            .map(|k| {
                (0..n)
                    .map(|l| {
                        let id = if k == l { QZeta::one() } else { QZeta::zero() };
                        id.sub(&coroot[k].mul(&root[l]))
                    })
                    .collect()
            })
            .collect();
        Reflection { index, label, root, coroot, class_index, map: LinearMap { images } }
    }

    pub fn root_poly<R: Ring>(&self, vars: &Vars) -> Result<MPoly<R>> {
        let mut t = MPoly::zero(vars);
        for (l, a) in self.root.iter().enumerate() {
            if !a.is_zero() {
                let a = R::from_qzeta(a)
                    .ok_or_else(|| AlgebraError::DomainMismatch("root needs a cyclotomic domain".into()))?;
                t = t.add(&MPoly::var(vars, l).scale(&a));
            }
        }
        Ok(t)
    }
}

#[derive(Clone, Debug)]
pub struct ConjClass {
    pub label: String,
    pub size: usize,
    pub rep: LinearMap,
}

#[derive(Clone, Debug)]
pub struct Irrep {
    pub name: String,
    pub dim: usize,
    /// Character value on each conjugacy class.
    pub values: Vec<QZeta>,
}

#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub classes: Vec<ConjClass>,
    pub irreps: Vec<Irrep>,
}

impl CharacterTable {
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.irreps.iter().position(|r| r.name == name)
    }
}

/// A finite real reflection group acting on polynomials.
#[derive(Clone, Debug)]
pub struct GroupModel {
    pub kind: GroupKind,
    pub rank: usize,
    pub vars: Vars,
    /// Names of the dual coordinates used for operator polynomials.
    pub dual_vars: Vars,
    /// Functional attached to each dual variable (coefficient vectors).
    pub dual_functionals: Vec<Vec<QZeta>>,
    pub reflections: Vec<Reflection>,
    pub class_count: usize,
    pub degrees: Vec<u32>,
    pub coxeter_number: u32,
    pub invariant_generators: Vec<MPoly<Rat>>,
    pub dual_invariant_generators: Vec<MPoly<Rat>>,
    pub order: usize,
}

fn qz(r: i64) -> QZeta {
    QZeta::from_rat(&Rat::from(r))
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Elementary symmetric polynomials e_0..e_k of the given polynomials.
pub fn elementary_symmetric(vs: &Vars, us: &[MPoly<Rat>], kmax: usize) -> Vec<MPoly<Rat>> {
    let mut e = vec![MPoly::zero(vs); kmax + 1];
    e[0] = MPoly::one(vs);
    for u in us {
        for k in (1..=kmax).rev() {
            let t = e[k - 1].mul(u);
            e[k] = e[k].add(&t);
        }
    }
    e
}

impl GroupModel {
    pub fn build(kind: GroupKind) -> Result<GroupModel> {
        match kind {
            GroupKind::Symmetric(n) if n >= 2 => Ok(Self::symmetric(n)),
            GroupKind::Dihedral(m) if m >= 3 => Ok(Self::dihedral(m)),
            _ => Err(AlgebraError::Unsupported(format!("group {kind}"))),
        }
    }

    pub fn symmetric(n: usize) -> GroupModel {
        let names: Vec<String> = (1..n).map(|i| format!("v{i}")).collect();
        let vs: Vars = names.into();
        let dual: Vars = (1..=n).map(|i| format!("y{i}")).collect::<Vec<_>>().into();
        let l = n - 1;
        // Ambient functional e_i seen on difference coordinates.
        let ambient = |i: usize| -> Vec<QZeta> {
            (0..l)
                .map(|k| {
                    let a = if k == i { 1 } else { 0 } - if i == n - 1 { 1 } else { 0 };
                    qz(a)
                })
                .collect()
        };
        let form = |i: usize| -> Vec<QZeta> { (0..l).map(|k| qz((k == i) as i64)).collect() };
        let mut reflections = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let mut root = form(i);
                if j < n - 1 {
                    let fj = form(j);
                    root = root.iter().zip(&fj).map(|(a, b)| a.sub(b)).collect();
                }
                let coroot: Vec<QZeta> = ambient(i).iter().zip(&ambient(j)).map(|(a, b)| a.sub(b)).collect();
                let idx = reflections.len();
                reflections.push(Reflection::new(idx, format!("({} {})", i + 1, j + 1), root, coroot, 0));
            }
        }
        let mean = (0..l).fold(MPoly::<Rat>::zero(&vs), |acc, k| acc.add(&MPoly::var(&vs, k)))
            .scale(&Rat::new(1, n as i64));
        let mut us: Vec<MPoly<Rat>> = (0..l).map(|k| MPoly::var(&vs, k).sub(&mean)).collect();
        us.push(mean.neg());
        let e = elementary_symmetric(&vs, &us, n);
        let ys: Vec<MPoly<Rat>> = (0..n).map(|k| MPoly::var(&dual, k)).collect();
        let de = elementary_symmetric(&dual, &ys, n);
        GroupModel {
            kind: GroupKind::Symmetric(n),
            rank: l,
            vars: vs,
            dual_vars: dual,
            dual_functionals: (0..n).map(ambient).collect(),
            reflections,
            class_count: 1,
            degrees: (2..=n as u32).collect(),
            coxeter_number: n as u32,
            invariant_generators: e[2..].to_vec(),
            dual_invariant_generators: de[2..].to_vec(),
            order: factorial(n),
        }
    }

    pub fn dihedral(m: u32) -> GroupModel {
        let vs = vars(&["z", "zb"]);
        let dual = vars(&["Y", "Yb"]);
        let two_class = m.is_multiple_of(2);
        let reflections = (0..m as i64)
            .map(|j| {
                let root = vec![QZeta::one(), QZeta::zeta_pow(m, j)];
                let coroot = vec![QZeta::one(), QZeta::zeta_pow(m, -j)];
                // c₁ belongs to the odd-indexed reflections.
                let class = if two_class && j % 2 == 0 { 1 } else { 0 };
                Reflection::new(j as usize, format!("s{j}"), root, coroot, class)
            })
            .collect();
        let z = MPoly::<Rat>::var(&vs, 0);
        let zb = MPoly::<Rat>::var(&vs, 1);
        let sign = Rat::from(if m.is_multiple_of(2) { 1 } else { -1 });
        let em = z.pow(m).add(&zb.pow(m).scale(&sign));
        let y = MPoly::<Rat>::var(&dual, 0);
        let yb = MPoly::<Rat>::var(&dual, 1);
        let dem = y.pow(m).add(&yb.pow(m).scale(&sign));
        GroupModel {
            kind: GroupKind::Dihedral(m),
            rank: 2,
            vars: vs,
            dual_vars: dual,
            dual_functionals: vec![vec![QZeta::one(), QZeta::zero()], vec![QZeta::zero(), QZeta::one()]],
            reflections,
            class_count: if two_class { 2 } else { 1 },
            degrees: vec![2, m],
            coxeter_number: m,
            invariant_generators: vec![z.mul(&zb), em],
            dual_invariant_generators: vec![y.mul(&yb), dem],
            order: 2 * m as usize,
        }
    }

    pub fn is_dihedral(&self) -> bool {
        matches!(self.kind, GroupKind::Dihedral(_))
    }

    pub fn dihedral_m(&self) -> Option<u32> {
        match self.kind {
            GroupKind::Dihedral(m) => Some(m),
            _ => None,
        }
    }

    /// Number of reflections in each class.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut s = vec![0; self.class_count];
        for r in &self.reflections {
            s[r.class_index] += 1;
        }
        s
    }

    /// Applies the word s_{w₀}·s_{w₁}⋯ (rightmost letter acts first).
    pub fn act<R: Ring>(&self, word: &[usize], p: &MPoly<R>) -> Result<MPoly<R>> {
        let mut out = p.clone();
        for &i in word.iter().rev() {
            let r = self
                .reflections
                .get(i)
                .ok_or_else(|| AlgebraError::Precondition(format!("no reflection {i}")))?;
            out = r.map.apply(&out)?;
        }
        Ok(out)
    }

    /// Linear map of a word, for use with [`LinearMap::apply`].
    pub fn word_map(&self, word: &[usize]) -> LinearMap {
        word.iter()
            .fold(LinearMap::identity(self.rank), |acc, &i| acc.after(&self.reflections[i].map))
    }

    /// Every group element, with the index of its conjugacy class.
    pub fn elements(&self) -> Vec<(LinearMap, usize)> {
        match self.kind {
            GroupKind::Symmetric(n) => {
                let classes = partitions(n);
                permutations(n)
                    .into_iter()
                    .map(|sigma| {
                        let ct = cycle_type(&sigma);
                        let ci = classes.iter().position(|p| *p == ct).unwrap();
                        (perm_map(n, &sigma), ci)
                    })
                    .collect()
            }
            GroupKind::Dihedral(m) => {
                let mut out = Vec::new();
                for k in 0..m {
                    out.push((rotation_map(m, k as i64), k.min(m - k) as usize));
                }
                let nrot = (m / 2 + 1) as usize;
                for r in &self.reflections {
                    out.push((r.map.clone(), nrot + r.class_index));
                }
                out
            }
        }
    }

    pub fn character_table(&self) -> Arc<CharacterTable> {
        static CACHE: OnceLock<Mutex<HashMap<GroupKind, Arc<CharacterTable>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(t) = cache.lock().unwrap().get(&self.kind) {
            return t.clone();
        }
        let t = Arc::new(match self.kind {
            GroupKind::Symmetric(n) => symmetric_table(n),
            GroupKind::Dihedral(m) => dihedral_table(m, &self.reflections),
        });
        cache.lock().unwrap().insert(self.kind, t.clone());
        t
    }

    /// Name of the reflection representation in the character table.
    pub fn defining_irrep(&self) -> String {
        match self.kind {
            GroupKind::Symmetric(n) => partition_name(&hook(n, 1)),
            GroupKind::Dihedral(_) => "Z1".into(),
        }
    }

    /// Name of the sign representation.
    pub fn sign_irrep(&self) -> String {
        match self.kind {
            GroupKind::Symmetric(n) => partition_name(&vec![1; n]),
            GroupKind::Dihedral(_) => "eps".into(),
        }
    }

    /// Name of the irreducible realized on a γ-eigenspace pair ζ^{±n} (dihedral only).
    pub fn dihedral_irrep_of_degree(&self, n: u32) -> Option<Vec<String>> {
        let m = self.dihedral_m()?;
        let k = n % m;
        let k = k.min(m - k);
        Some(if k == 0 {
            vec!["1".into(), "eps".into()]
        } else if 2 * k == m {
            vec!["eps_odd".into(), "eps_even".into()]
        } else {
            vec![format!("Z{k}")]
        })
    }

    /// Basis of the degree-k invariants: products of generators, with exponent vectors.
    pub fn invariant_basis(&self, k: u32) -> Vec<(Vec<u32>, MPoly<Rat>)> {
        invariant_monomials(&self.degrees, k)
            .into_iter()
            .map(|e| {
                let p = e
                    .iter()
                    .zip(&self.invariant_generators)
                    .fold(MPoly::one(&self.vars), |acc, (&a, g)| acc.mul(&g.pow(a)));
                (e, p)
            })
            .collect()
    }

    /// Dual (operator-side) invariants of degree k, aligned with `invariant_basis`.
    pub fn dual_invariant_basis(&self, k: u32) -> Vec<(Vec<u32>, MPoly<Rat>)> {
        invariant_monomials(&self.degrees, k)
            .into_iter()
            .map(|e| {
                let p = e
                    .iter()
                    .zip(&self.dual_invariant_generators)
                    .fold(MPoly::one(&self.dual_vars), |acc, (&a, g)| acc.mul(&g.pow(a)));
                (e, p)
            })
            .collect()
    }

    /// Checks that the span of `basis` is closed under every reflection.
    pub fn is_stable(&self, basis: &[MPoly<QZeta>]) -> Result<bool> {
        let solver = SpanSolver::new(basis);
        for r in &self.reflections {
            for b in basis {
                if solver.coordinates(&r.map.apply(b)?).is_none() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Trace of each class representative on the span of `basis`.
    pub fn class_traces(&self, basis: &[MPoly<QZeta>]) -> Result<Vec<QZeta>> {
        let table = self.character_table();
        let solver = SpanSolver::new(basis);
        table
            .classes
            .iter()
            .map(|c| {
                let mut tr = QZeta::zero();
                for (i, b) in basis.iter().enumerate() {
                    let img = c.rep.apply(b)?;
                    let co = solver
                        .coordinates(&img)
                        .ok_or_else(|| AlgebraError::Precondition("span is not W-stable".into()))?;
                    tr = tr.add(&co[i]);
                }
                Ok(tr)
            })
            .collect()
    }

    /// Multiplicity of every irreducible in the span of a W-stable basis.
    pub fn decompose_module(&self, basis: &[MPoly<Rat>]) -> Result<Vec<(String, usize)>> {
        let lifted: Vec<MPoly<QZeta>> = basis.iter().map(lift_poly).collect();
        if !self.is_stable(&lifted)? {
            return Err(AlgebraError::Precondition("span is not W-stable".into()));
        }
        let traces = self.class_traces(&lifted)?;
        let table = self.character_table();
        let order = Rat::from(self.order as i64);
        table
            .irreps
            .iter()
            .map(|irr| {
                let s = table.classes.iter().zip(&traces).zip(&irr.values).fold(
                    QZeta::zero(),
                    |acc, ((cl, t), chi)| acc.add(&t.mul(&chi.conj()).mul(&qz(cl.size as i64))),
                );
                let mult = s
                    .into_rat()?
                    .mul(&order.recip());
                if !mult.is_integer() || mult.is_negative() {
                    return Err(AlgebraError::CheckFailed(format!(
                        "non-integral multiplicity {mult} for {}",
                        irr.name
                    )));
                }
                Ok((irr.name.clone(), mult.to_f64() as usize))
            })
            .collect()
    }
}

pub fn lift_poly(p: &MPoly<Rat>) -> MPoly<QZeta> {
    p.map_coeffs(|c| QZeta::scalar(c.clone()))
}

/// Exponent vectors a with Σ a_i·d_i = k, in descending lexicographic order.
pub fn invariant_monomials(degrees: &[u32], k: u32) -> Vec<Vec<u32>> {
    fn rec(ds: &[u32], k: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if ds.is_empty() {
            if k == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for a in (0..=k / ds[0]).rev() {
            cur.push(a);
            rec(&ds[1..], k - a * ds[0], cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(degrees, k, &mut Vec::new(), &mut out);
    out
}

/// Solves for coordinates of polynomials in the span of a fixed basis.
pub struct SpanSolver<F: Field> {
    monos: Vec<Mono>,
    basis: Vec<Vec<F>>,
}

impl<F: Field> SpanSolver<F> {
    pub fn new(basis: &[MPoly<F>]) -> Self {
        let mut monos: Vec<Mono> = Vec::new();
        for b in basis {
            for (m, _) in b.terms() {
                if !monos.contains(m) {
                    monos.push(m.clone());
                }
            }
        }
        let basis = basis.iter().map(|b| monos.iter().map(|m| b.coeff(m)).collect()).collect();
        SpanSolver { monos, basis }
    }

    /// Coordinates of `p`, or `None` if it is outside the span.
    pub fn coordinates(&self, p: &MPoly<F>) -> Option<Vec<F>> {
        if p.terms().any(|(m, _)| !self.monos.contains(m)) {
            return None;
        }
        let k = self.basis.len();
        let rows = (0..self.monos.len())
            .map(|i| {
                let mut r: Vec<F> = self.basis.iter().map(|b| b[i].clone()).collect();
                r.push(p.coeff(&self.monos[i]));
                r
            })
            .collect();
        let (a, pivots) = rref(&Matrix::from_rows(k + 1, rows));
        if pivots.contains(&k) {
            return None;
        }
        let mut x = vec![F::zero(); k];
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = a.get(i, k).clone();
        }
        Some(x)
    }
}

fn rotation_map(m: u32, k: i64) -> LinearMap {
    LinearMap {
        images: vec![
            vec![QZeta::zeta_pow(m, k), QZeta::zero()],
            vec![QZeta::zero(), QZeta::zeta_pow(m, -k)],
        ],
    }
}

/// Action of σ on difference coordinates: v_i ↦ v_{σ(i)} − v_{σ(n)}, with v_n = 0.
pub fn perm_map(n: usize, sigma: &[usize]) -> LinearMap {
    let l = n - 1;
    let images = (0..l)
        .map(|i| {
            let mut row = vec![QZeta::zero(); l];
            if sigma[i] < l {
                row[sigma[i]] = row[sigma[i]].add(&QZeta::one());
            }
            if sigma[n - 1] < l {
                row[sigma[n - 1]] = row[sigma[n - 1]].sub(&QZeta::one());
            }
            row
        })
        .collect();
    LinearMap { images }
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

pub fn cycle_type(sigma: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; sigma.len()];
    let mut out = Vec::new();
    for s in 0..sigma.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            i = sigma[i];
            len += 1;
        }
        out.push(len);
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Partitions of n in reverse lexicographic order, starting with [n].
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            cur.push(k);
            rec(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

fn hook(n: usize, legs: usize) -> Vec<usize> {
    let mut p = vec![n - legs];
    p.extend(std::iter::repeat_n(1, legs));
    p
}

pub fn partition_name(p: &[usize]) -> String {
    format!("[{}]", p.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(","))
}

/// χ^λ(μ) by the Murnaghan–Nakayama rule on beta-sets.
pub fn mn_character(lambda: &[usize], mu: &[usize]) -> i64 {
    let k = lambda.len();
    let beta: Vec<usize> = lambda.iter().enumerate().map(|(i, &l)| l + (k - 1 - i)).collect();
    mn_beta(&beta, mu)
}

fn mn_beta(beta: &[usize], mu: &[usize]) -> i64 {
    let Some((&r, rest)) = mu.split_first() else {
        return 1;
    };
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > b - r && x < b).count();
        let mut nb = beta.to_vec();
        nb[i] = b - r;
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * mn_beta(&nb, rest);
    }
    total
}

fn class_size(n: usize, mu: &[usize]) -> usize {
    let mut z = 1usize;
    let mut counts: HashMap<usize, usize> = HashMap::new();
    for &p in mu {
        *counts.entry(p).or_default() += 1;
    }
    for (p, c) in counts {
        z *= p.pow(c as u32) * factorial(c);
    }
    factorial(n) / z
}

fn perm_with_cycle_type(n: usize, mu: &[usize]) -> Vec<usize> {
    let mut sigma: Vec<usize> = (0..n).collect();
    let mut start = 0;
    for &len in mu {
        for t in 0..len {
            sigma[start + t] = start + (t + 1) % len;
        }
        start += len;
    }
    sigma
}

fn symmetric_table(n: usize) -> CharacterTable {
    let parts = partitions(n);
    let classes = parts
        .iter()
        .map(|mu| ConjClass {
            label: partition_name(mu),
            size: class_size(n, mu),
            rep: perm_map(n, &perm_with_cycle_type(n, mu)),
        })
        .collect();
    let irreps = parts
        .iter()
        .map(|lambda| {
            let values: Vec<QZeta> = parts.iter().map(|mu| qz(mn_character(lambda, mu))).collect();
            let dim = mn_character(lambda, &vec![1; n]) as usize;
            Irrep { name: partition_name(lambda), dim, values }
        })
        .collect();
    CharacterTable { classes, irreps }
}

fn dihedral_table(m: u32, reflections: &[Reflection]) -> CharacterTable {
    let mut classes = Vec::new();
    for k in 0..=m / 2 {
        classes.push(ConjClass {
            label: format!("rot{k}"),
            size: if k == 0 || 2 * k == m { 1 } else { 2 },
            rep: rotation_map(m, k as i64),
        });
    }
    let nrot = classes.len();
    if m % 2 == 1 {
        classes.push(ConjClass { label: "refl".into(), size: m as usize, rep: reflections[0].map.clone() });
    } else {
        classes.push(ConjClass { label: "refl_odd".into(), size: m as usize / 2, rep: reflections[1].map.clone() });
        classes.push(ConjClass { label: "refl_even".into(), size: m as usize / 2, rep: reflections[0].map.clone() });
    }
    let one_dim = |name: &str, rot_alt: bool, refl: &[i64]| {
        let mut values: Vec<QZeta> = (0..nrot).map(|k| qz(if rot_alt && k % 2 == 1 { -1 } else { 1 })).collect();
        values.extend(refl.iter().map(|&v| qz(v)));
        Irrep { name: name.into(), dim: 1, values }
    };
    let mut irreps = Vec::new();
    if m % 2 == 1 {
        irreps.push(one_dim("1", false, &[1]));
        irreps.push(one_dim("eps", false, &[-1]));
    } else {
        irreps.push(one_dim("1", false, &[1, 1]));
        irreps.push(one_dim("eps", false, &[-1, -1]));
        irreps.push(one_dim("eps_odd", true, &[-1, 1]));
        irreps.push(one_dim("eps_even", true, &[1, -1]));
    }
    for k in 1..=(m - 1) / 2 {
        let mut values: Vec<QZeta> = (0..nrot as i64)
            .map(|j| QZeta::zeta_pow(m, k as i64 * j).add(&QZeta::zeta_pow(m, -(k as i64) * j)))
            .collect();
        values.extend(std::iter::repeat_n(QZeta::zero(), classes.len() - nrot));
        irreps.push(Irrep { name: format!("Z{k}"), dim: 2, values });
    }
    CharacterTable { classes, irreps }
}
