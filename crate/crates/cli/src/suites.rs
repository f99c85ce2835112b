//! The verification battery: one suite per acceptance criterion.
//!
//! Every suite only calls public operations of `qharm-core`; the algebra
//! itself lives there. Checks never panic on a core error: the error is
//! reported as a failed check with the message as witness.

use crate::probe::Probe;
use crate::report::{Check, Status, SuiteReport};
use qharm_core::coxeter::{GroupKind, GroupModel};
use qharm_core::dihedral::*;
use qharm_core::dunkl::{DihedralPath, DunklContext, Sl2};
use qharm_core::frobenius::*;
use qharm_core::quasiharmonic::*;
use qharm_core::ring::text::{parse_cpoly, parse_rat};
use qharm_core::ring::{monomials_of_degree, q, structured, vars, CPoly, Cyclo, MPoly, ParamRing, Rat, Ring, Vars};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, Mutex};
use std::time::{Duration, Instant};

/// The golden structured rendering of e₄^(c) for S₄, built from the closed formula.
pub const GOLDEN_S4_E4: &str = include_str!("../golden/s4_e4.json");

pub const CRIT1_LIMIT: Duration = Duration::from_secs(10);
pub const CRIT2_LIMIT: Duration = Duration::from_secs(60);

#[derive(Clone, Debug)]
pub struct Config {
    pub seed: u64,
    /// Restricts the dihedral orders examined (intersected with each suite's own range).
    pub m_range: Option<(u32, u32)>,
    pub workers: usize,
}

impl Default for Config {
    fn default() -> Self {
        let workers = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1);
        Config { seed: crate::probe::DEFAULT_SEED, m_range: None, workers }
    }
}

impl Config {
    fn ms(&self, own: impl IntoIterator<Item = u32>) -> Vec<u32> {
        own.into_iter()
            .filter(|m| self.m_range.is_none_or(|(lo, hi)| (lo..=hi).contains(m)))
            .collect()
    }
}

/// Round-trip bookkeeping for every polynomial a suite produces.
#[derive(Clone, Debug, Default)]
pub struct Recorder {
    pub structured: usize,
    pub text: usize,
    pub failures: Vec<String>,
}

impl Recorder {
    pub fn any<R: Ring>(&mut self, src: &str, p: &MPoly<R>) {
        self.structured += 1;
        let s = structured::to_string(p);
        match structured::from_str::<R>(&s) {
            Ok(back) if &back == p && structured::to_string(&back) == s => {}
            _ => self.failures.push(format!("structured: {src}")),
        }
    }

    pub fn cpoly(&mut self, src: &str, p: &MPoly<CPoly>) {
        self.any(src, p);
        self.text += 1;
        if parse_cpoly(&p.to_string(), p.vars()).ok().as_ref() != Some(p) {
            self.failures.push(format!("text: {src}"));
        }
    }

    pub fn rat(&mut self, src: &str, p: &MPoly<Rat>) {
        self.any(src, p);
        self.text += 1;
        if parse_rat(&p.to_string(), p.vars()).ok().as_ref() != Some(p) {
            self.failures.push(format!("text: {src}"));
        }
    }

    pub fn merge(&mut self, o: Recorder) {
        self.structured += o.structured;
        self.text += o.text;
        self.failures.extend(o.failures);
    }
}

type Runner = fn(&Config, &mut Recorder) -> Vec<Check>;

pub struct SuiteDef {
    pub name: &'static str,
    pub criterion: u32,
    run: Runner,
}

pub const SUITES: [SuiteDef; 14] = [
    SuiteDef { name: "dihedral-dims", criterion: 1, run: dihedral_dims },
    SuiteDef { name: "s4-exceptional", criterion: 2, run: s4_exceptional },
    SuiteDef { name: "rho-family", criterion: 3, run: rho_family },
    SuiteDef { name: "charpoly", criterion: 4, run: charpoly },
    SuiteDef { name: "sl2", criterion: 5, run: sl2 },
    SuiteDef { name: "deformed-invariants", criterion: 6, run: deformed_invariants },
    SuiteDef { name: "dunkl-closed-forms", criterion: 7, run: dunkl_closed_forms },
    SuiteDef { name: "singular-values", criterion: 8, run: singular_values },
    SuiteDef { name: "frobenius", criterion: 9, run: frobenius },
    SuiteDef { name: "quotient-algebras", criterion: 10, run: quotient_algebras },
    SuiteDef { name: "q-recursion", criterion: 11, run: q_recursion },
    SuiteDef { name: "symm-e", criterion: 12, run: symm_e },
    SuiteDef { name: "hilbert-tables", criterion: 13, run: hilbert_tables },
    SuiteDef { name: "serialization", criterion: 14, run: serialization_standalone },
];

/// Named groups of suites accepted by `verify`.
const ALIASES: [(&str, &[u32]); 2] = [("dihedral-core", &[1, 3, 4, 5, 7, 10]), ("all", &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14])];

/// Suite names (or aliases, or criterion numbers) to suite descriptors.
pub fn resolve(name: &str) -> Option<Vec<&'static SuiteDef>> {
    if let Some((_, crits)) = ALIASES.iter().find(|(a, _)| *a == name) {
        return Some(crits.iter().map(|&c| &SUITES[c as usize - 1]).collect());
    }
    let by_number = name.parse::<u32>().ok().and_then(|c| SUITES.iter().find(|s| s.criterion == c));
    by_number.or_else(|| SUITES.iter().find(|s| s.name == name)).map(|s| vec![s])
}

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|s| s.name).chain(ALIASES.iter().map(|a| a.0)).collect()
}

fn run_def(def: &SuiteDef, cfg: &Config) -> (SuiteReport, Recorder) {
    let mut rec = Recorder::default();
    let t0 = Instant::now();
    let checks = (def.run)(cfg, &mut rec);
    let report = SuiteReport {
        suite: def.name.to_string(),
        criterion: def.criterion,
        seed: cfg.seed,
        checks,
        wall_clock_ms: t0.elapsed().as_millis() as u64,
    };
    (report, rec)
}

/// Runs one suite by name.
pub fn run_suite(name: &str, cfg: &Config) -> anyhow::Result<SuiteReport> {
    match resolve(name).as_deref() {
        Some([one]) => Ok(run_def(one, cfg).0),
        Some(_) => anyhow::bail!("{name:?} names several suites; use run_suites"),
        None => anyhow::bail!("unknown suite {name:?}; known: {}", suite_names().join(", ")),
    }
}

/// Runs suites concurrently on `cfg.workers` threads; reports come back in criterion order.
///
/// When the serialization suite is among them and all of 1–13 are too, it reuses
/// their recorders instead of running the battery a second time.
pub fn run_suites(defs: &[&'static SuiteDef], cfg: &Config) -> Vec<SuiteReport> {
    let has_all = (1..=13).all(|c| defs.iter().any(|s| s.criterion == c));
    let wants_14 = defs.iter().any(|s| s.criterion == 14);
    let mut work: Vec<&SuiteDef> = defs.iter().copied().filter(|s| !(has_all && s.criterion == 14)).collect();
    work.sort_by_key(|s| s.criterion);
    work.dedup_by_key(|s| s.criterion);
    let mut results = run_parallel(&work, cfg);
    if has_all && wants_14 {
        let t0 = Instant::now();
        let mut rec = Recorder::default();
        for (_, r) in &results {
            rec.merge(r.clone());
        }
        let first: Vec<SuiteReport> = results.iter().map(|(r, _)| r.clone()).collect();
        let checks = serialization_checks(cfg, &rec, &first);
        let report = SuiteReport {
            suite: "serialization".into(),
            criterion: 14,
            seed: cfg.seed,
            checks,
            wall_clock_ms: t0.elapsed().as_millis() as u64,
        };
        results.push((report, Recorder::default()));
    }
    results.into_iter().map(|(r, _)| r).collect()
}

fn run_parallel(work: &[&SuiteDef], cfg: &Config) -> Vec<(SuiteReport, Recorder)> {
    let next = AtomicUsize::new(0);
    let out: Mutex<Vec<(SuiteReport, Recorder)>> = Mutex::new(Vec::new());
    std::thread::scope(|s| {
        for _ in 0..cfg.workers.clamp(1, work.len().max(1)) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                let Some(def) = work.get(i) else { break };
                let r = run_def(def, cfg);
                out.lock().unwrap().push(r);
            });
        }
    });
    let mut v = out.into_inner().unwrap();
    v.sort_by_key(|(r, _)| r.criterion);
    v
}

fn attempt(id: impl Into<String>, anchor: &str, f: impl FnOnce() -> qharm_core::Result<(bool, Value)>) -> Check {
    let id = id.into();
    match f() {
        Ok((ok, w)) => Check::new(id, anchor, ok, w),
        Err(e) => Check::new(id, anchor, false, json!({ "error": e.to_string() })),
    }
}

fn texts(cs: &[Rat]) -> Vec<String> {
    cs.iter().map(|c| c.to_string()).collect()
}

fn lift(p: &MPoly<Rat>) -> MPoly<CPoly> {
    p.map_coeffs(|x| CPoly::constant(x.clone()))
}

/// a·c + b as a polynomial in c₁.
fn c_lin(a: i64, b: i64) -> CPoly {
    CPoly::linear(Rat::from(b), Rat::from(a))
}

fn dihedral(m: u32) -> Arc<GroupModel> {
    Arc::new(GroupModel::dihedral(m))
}

fn symmetric(n: usize) -> Arc<GroupModel> {
    Arc::new(GroupModel::symmetric(n))
}

// ---------------------------------------------------------------- 1

fn dihedral_dims(cfg: &Config, rec: &mut Recorder) -> Vec<Check> {
    const A: &str = "dihedral-qh-dimension";
    let t0 = Instant::now();
    let mut out = Vec::new();
    let expect = |n: u32| if n == 0 { 1 } else { 2 };
    for m in cfg.ms(3..=6) {
        let g = dihedral(m);
        out.push(attempt(format!("c01.m{m}.symbolic"), A, || {
            let ctx = DunklContext::symbolic(g.clone());
            let mut dims = Vec::new();
            for n in 0..=3 * m {
                let sp = qh_space(&ctx, n, QHKind::Quasiharmonic)?;
                for p in &sp.basis {
                    rec.cpoly(&format!("c01 m={m} n={n}"), p);
                }
                dims.push(sp.dim());
            }
            let ok = dims.iter().zip(0..).all(|(&d, n)| d == expect(n));
            Ok((ok, json!({ "dims": dims })))
        }));
        let mut probe = Probe::new(cfg.seed, 100 + m as u64);
        let mut params: Vec<Vec<Rat>> = probe.regular_set(&g.degrees, 10).into_iter().map(|c| vec![c]).collect();
        if g.class_count == 2 {
            params.extend((0..3).map(|_| {
                let (a, b) = probe.regular_pair(&g.degrees);
                vec![a, b]
            }));
        }
        for (i, c) in params.iter().enumerate() {
            out.push(attempt(format!("c01.m{m}.rational{i}"), A, || {
                let ctx = DunklContext::rational(g.clone(), c)?;
                let mut dims = Vec::new();
                for n in 0..=3 * m {
                    let sp = qh_space(&ctx, n, QHKind::Quasiharmonic)?;
                    if n == 3 * m {
                        for p in &sp.basis {
                            rec.rat(&format!("c01 m={m} c={c:?}"), p);
                        }
                    }
                    dims.push(sp.dim());
                }
                let ok = dims.iter().zip(0..).all(|(&d, n)| d == expect(n));
                Ok((ok, json!({ "c": texts(c), "dims": dims })))
            }));
        }
    }
    let within = t0.elapsed() < CRIT1_LIMIT;
    out.push(Check::new("c01.runtime", A, within, json!({ "limit_s": CRIT1_LIMIT.as_secs() })));
    out
}

// ---------------------------------------------------------------- 2

fn s4_exceptional(cfg: &Config, rec: &mut Recorder) -> Vec<Check> {
    const A: &str = "s4-exceptional-table";
    let t0 = Instant::now();
    let g = symmetric(4);
    let ctx = DunklContext::symbolic(g.clone());
    let cases = [(3u32, vec![q(1, 4), q(1, 2)], 7usize), (4, vec![q(1, 3), q(1, 2), q(3, 4)], 9)];
    let mut out = Vec::new();
    for (n, expected, exc_dim) in cases {
        out.push(attempt(format!("c02.qh{n}"), A, || {
            let (dim, loc) = qh_locus(&ctx, n, QHKind::Quasiharmonic, cfg.seed)?;
            let cols = monomials_of_degree(g.rank, n).len();
            // Independent confirmation: the kernel over ℚ at each exceptional value.
            let mut table = Vec::new();
            let mut direct_ok = true;
            for c in loc.confirmed_values() {
                let sp = qh_space(&DunklContext::rational(g.clone(), std::slice::from_ref(&c))?, n, QHKind::Quasiharmonic)?;
                for p in &sp.basis {
                    rec.rat(&format!("c02 n={n} c={c}"), p);
                }
                direct_ok &= sp.dim() == exc_dim;
                table.push(json!({ "c": c.to_string(), "dim": sp.dim() }));
            }
            let ranks_ok = loc.confirmed.iter().all(|(_, rk)| cols - rk == exc_dim);
            let no_irrational = loc.unevaluated.degree().unwrap_or(0) == 0;
            let ok = dim == 6 && loc.confirmed_values() == expected && ranks_ok && direct_ok && no_irrational;
            Ok((ok, json!({ "generic_dim": dim, "exceptional": table, "irrational_factor": !no_irrational })))
        }));
    }
    let within = t0.elapsed() < CRIT2_LIMIT;
    out.push(Check::new("c02.runtime", A, within, json!({ "limit_s": CRIT2_LIMIT.as_secs() })));
    out
}

// ---------------------------------------------------------------- 3

fn rho_family(cfg: &Config, rec: &mut Recorder) -> Vec<Check> {
    const A: &str = "dihedral-rho-family";
    let mut out = Vec::new();
    for m in cfg.ms(3..=5) {
        out.push(attempt(format!("c03.m{m}.routes"), A, || {
            let mut bad = Vec::new();
            for n in 0..=3 * m {
                if !rho_routes_agree(m, n) {
                    bad.push(n);
                }
                let r = rho(m, n)?;
                rec.cpoly(&format!("c03 rho m={m} n={n}"), &r.rho);
                rec.cpoly(&format!("c03 R m={m} n={n}"), &r.big_r);
            }
            Ok((bad.is_empty(), json!({ "nmax": 3 * m, "disagreeing_n": bad })))
        }));
        out.push(attempt(format!("c03.m{m}.action"), A, || {
            Ok((rho_action_check(m, 3 * m)?, json!({ "nmax": 3 * m })))
        }));
    }
    out
}

// ---------------------------------------------------------------- 4

fn charpoly(cfg: &Config, rec: &mut Recorder) -> Vec<Check> {
    const A: &str = "dihedral-characteristic-polynomial";
    const L: &str = "dihedral-laplace-descent";
    let mut out = Vec::new();
    for m in cfg.ms([3, 4]) {
        for n in 1..=2 * m + 2 {
            rec.cpoly(&format!("c04 closed m={m} n={n}"), &charpoly_closed(m, n));
        }
        let cs = Probe::new(cfg.seed, 400 + m as u64).regular_set(&[2, m], 3);
        for (i, c0) in cs.iter().enumerate() {
            out.push(attempt(format!("c04.m{m}.c{i}.minors"), A, || {
                let mut bad = Vec::new();
                for n in 1..=2 * m + 2 {
                    let closed = charpoly_closed_at(m, n, c0)?;
                    let basis = qh_basis_dihedral_at(m, n + 1, c0)?;
                    let minors = charpoly_rank2_minors(&basis[0], &basis[1])?;
                    rec.rat(&format!("c04 minors m={m} n={n}"), &minors);
                    if !minors.is_proportional(&closed) {
                        bad.push(n);
                    }
                }
                Ok((bad.is_empty(), json!({ "c": c0.to_string(), "nmax": 2 * m + 2, "disagreeing_n": bad })))
            }));
            let mut r0 = Vec::new();
            let mut rn = Vec::new();
            let mut err = None;
            for n in 1..=2 * m + 1 {
                match laplace_descent_check(m, n, c0) {
                    Ok(a) if n % m == 0 => r0.push((n, a, c0.sub(&Rat::from((n / m) as i64)))),
                    Ok(a) => rn.push((n, a, Rat::one())),
                    Err(e) => err = Some(e.to_string()),
                }
            }
            let verdict = |v: &[(u32, Rat, Rat)]| {
                let ok = err.is_none() && v.iter().all(|(_, a, e)| a == e);
                let w: Vec<Value> = v
                    .iter()
                    .map(|(n, a, e)| json!({ "n": n, "observed": a.to_string(), "expected": e.to_string() }))
                    .collect();
                (ok, json!({ "c": c0.to_string(), "scalars": w, "error": err }))
            };
            let (ok0, w0) = verdict(&r0);
            out.push(Check::new(format!("c04.m{m}.c{i}.laplace-r0"), L, ok0, w0));
            let (okn, wn) = verdict(&rn);
            out.push(Check::new(format!("c04.m{m}.c{i}.laplace-rn"), L, okn, wn));
        }
    }
    out
}

// ---------------------------------------------------------------- 5

fn sl2(cfg: &Config, _rec: &mut Recorder) -> Vec<Check> {
    const A: &str = "dihedral-sl2-triple";
    let mut out = Vec::new();
    for m in cfg.ms(3..=6) {
        out.push(attempt(format!("c05.m{m}"), A, || {
            let g = dihedral(m);
            let ctx = DunklContext::symbolic(g.clone());
            let triple = Sl2::new(&ctx)?;
            let mut count = 0usize;
            let mut bad = Vec::new();
            for d in 0..=12 {
                for mono in monomials_of_degree(2, d) {
                    let p = MPoly::monomial(&g.vars, mono, CPoly::one());
                    count += 1;
                    if triple.defects(&p)?.iter().any(|x| !x.is_zero()) {
                        bad.push(p.to_string());
                    }
                }
            }
            Ok((bad.is_empty(), json!({ "monomials": count, "failing": bad })))
        }));
    }
    out
}

// ---------------------------------------------------------------- 6

fn fixed_by_reflections(g: &GroupModel, p: &MPoly<CPoly>) -> qharm_core::Result<bool> {
    let lp = p.map_coeffs(|c| Cyclo::scalar(c.clone()));
    for r in &g.reflections {
        if g.act(&[r.index], &lp)? != lp {
            return Ok(false);
        }
    }
    Ok(true)
}

fn deformed_invariants(cfg: &Config, rec: &mut Recorder) -> Vec<Check> {
    const A: &str = "deformed-invariants";
    let mut out = Vec::new();
    for n in 3..=5usize {
        let g = symmetric(n);
        let ctx = DunklContext::symbolic(g.clone());
        let e = |k: usize| lift(&g.invariant_generators[k - 2]);
        let ni = n as i64;
        let mut expected: Vec<(u32, MPoly<CPoly>)> = vec![(2, e(2)), (3, e(3))];
        if n >= 4 {
            let a = c_lin(-ni, 1).scale(&Rat::new((ni - 2) * (ni - 3), 2));
            let b = c_lin(ni * ni * (ni - 1), -ni * (ni + 1));
            expected.push((4, e(2).mul(&e(2)).scale(&a).add(&e(4).scale(&b))));
        }
        if n >= 5 {
            let a = c_lin(-ni, 1).scale(&Rat::from((ni - 3) * (ni - 4)));
            let b = c_lin(ni * ni * (ni - 1), -ni * (ni + 5));
            expected.push((5, e(2).mul(&e(3)).scale(&a).add(&e(5).scale(&b))));
        }
        if n == 4 {
            // The explicit S₄ forms of e₄ and e₈.
            let (e2, e3, e4) = (e(2), e(3), e(4));
            expected.push((4, e4.scale(&c_lin(48, -20)).sub(&e2.pow(2).scale(&c_lin(4, -1)))));
            let c = CPoly::param(0);
            let quad = |a: i64, b: i64, k: i64| {
                c.mul(&c).scale(&Rat::from(a)).add(&c.scale(&Rat::from(b))).add(&CPoly::from_i64(k))
            };
            let e8 = e2
                .pow(4)
                .scale(&quad(16, -32, 27))
                .sub(&e2.pow(2).mul(&e4).scale(&quad(16, -40, 29).scale(&Rat::from(24))))
                .sub(&e2.mul(&e3.pow(2)).scale(&c_lin(12, -13).scale(&Rat::from(24))))
                .add(&e4.pow(2).scale(&c_lin(12, -13).mul(&c_lin(4, -5)).scale(&Rat::from(48))));
            expected.push((8, e8));
        }
        for (k, (d, want)) in expected.iter().enumerate() {
            out.push(attempt(format!("c06.S{n}.e{d}.f{k}"), A, || {
                let inv = deformed_invariant(&ctx, *d)?;
                rec.cpoly(&format!("c06 S{n} e{d}"), &inv.polynomial);
                let prop = inv.polynomial.is_proportional(want);
                let fixed = fixed_by_reflections(&g, &inv.polynomial)?;
                Ok((prop && fixed, json!({ "proportional": prop, "invariant": fixed })))
            }));
        }
    }
    for m in cfg.ms(3..=6) {
        let g = dihedral(m);
        let em = lift(&g.invariant_generators[1]);
        out.push(attempt(format!("c06.I2_{m}.const"), A, || {
            let inv = deformed_invariant(&DunklContext::symbolic_const(g.clone()), m)?;
            rec.cpoly(&format!("c06 I2({m}) e{m}"), &inv.polynomial);
            let prop = inv.polynomial.is_proportional(&em);
            let fixed = fixed_by_reflections(&g, &inv.polynomial)?;
            Ok((prop && fixed, json!({ "proportional": prop, "invariant": fixed })))
        }));
        if m % 2 == 0 {
            out.push(attempt(format!("c06.I2_{m}.two-class"), A, || {
                let (c1, c2) = (CPoly::param(0), CPoly::param(1));
                let sign = if (m / 2) % 2 == 0 { 2 } else { -2 };
                let e2h = lift(&g.invariant_generators[0]).pow(m / 2);
                let want = em
                    .scale(&c1.add(&c2).sub(&CPoly::one()))
                    .add(&e2h.scale(&c2.sub(&c1).scale(&Rat::from(sign))));
                let inv = deformed_invariant(&DunklContext::symbolic(g.clone()), m)?;
                rec.cpoly(&format!("c06 I2({m}) two-class e{m}"), &inv.polynomial);
                let prop = inv.polynomial.is_proportional(&want);
                let fixed = fixed_by_reflections(&g, &inv.polynomial)?;
                Ok((prop && fixed, json!({ "proportional": prop, "invariant": fixed })))
            }));
        }
    }
    out
}

// ---------------------------------------------------------------- 7

fn dunkl_closed_forms(cfg: &Config, rec: &mut Recorder) -> Vec<Check> {
    const A: &str = "dihedral-closed-dunkl";
    let up = |p: &MPoly<CPoly>| p.map_coeffs(|c| Cyclo::scalar(c.clone()));
    let mut out = Vec::new();
    for m in cfg.ms(3..=6) {
        out.push(attempt(format!("c07.m{m}"), A, || {
            let g = dihedral(m);
            let closed = DunklContext::symbolic(g.clone());
            let c = (0..g.class_count).map(|k| Cyclo::scalar(CPoly::param(k))).collect();
            let generic = DunklContext::new(g.clone(), c).with_path(DihedralPath::ReflectionSum);
            let e2 = &g.dual_invariant_generators[0];
            let mut count = 0usize;
            let mut bad = Vec::new();
            for d in 0..=8 {
                for mono in monomials_of_degree(2, d) {
                    let p = MPoly::monomial(&g.vars, mono, CPoly::one());
                    let lp = up(&p);
                    let y = closed.dihedral_y(&p)?;
                    let yb = closed.dihedral_ybar(&p)?;
                    let f = closed.dihedral_f(&p)?;
                    let gy = generic.coord(0, &lp)?;
                    rec.any(&format!("c07 m={m} {p}"), &gy);
                    rec.cpoly(&format!("c07 m={m} Y {p}"), &y);
                    count += 1;
                    if up(&y) != gy || up(&yb) != generic.coord(1, &lp)? || up(&f) != generic.nabla(e2, &lp)?.neg() {
                        bad.push(p.to_string());
                    }
                }
            }
            Ok((bad.is_empty(), json!({ "monomials": count, "failing": bad })))
        }));
    }
    out
}

// ---------------------------------------------------------------- 8

fn singular_values(cfg: &Config, rec: &mut Recorder) -> Vec<Check> {
    const A: &str = "singular-values";
    let mut out = Vec::new();
    for m in cfg.ms(3..=5) {
        let g = dihedral(m);
        let mut cases: Vec<(Rat, u32)> =
            (1..=2 * m).filter(|k| k % m != 0).map(|k| (Rat::new(k as i64, m as i64), k)).collect();
        cases.push((q(1, 2), m));
        cases.push((q(3, 2), 3 * m));
        for (c, deg) in cases {
            out.push(attempt(format!("c08.I2_{m}.c{}.deg{deg}", c.to_string().replace('/', "_")), A, || {
                let ctx = DunklContext::rational(g.clone(), std::slice::from_ref(&c))?;
                let sv = singular_vectors(&ctx, deg)?;
                for p in &sv {
                    rec.rat(&format!("c08 I2({m}) c={c}"), p);
                }
                Ok((!sv.is_empty(), json!({ "c": c.to_string(), "degree": deg, "dim": sv.len() })))
            }));
        }
    }
    for n in 2..=4usize {
        let g = symmetric(n);
        for r in (1..=5u32).filter(|r| gcd(*r as usize, n) == 1) {
            let c = Rat::new(r as i64, n as i64);
            out.push(attempt(format!("c08.S{n}.jack.r{r}"), A, || {
                let ctx = DunklContext::rational(g.clone(), std::slice::from_ref(&c))?;
                let mut ok = true;
                for i in 0..n {
                    let sym = jack_f(n, i, r);
                    rec.cpoly(&format!("c08 jack n={n} i={i} r={r}"), &sym);
                    let f = sym.specialize(std::slice::from_ref(&c))?.with_vars(&g.vars)?;
                    ok &= !f.is_zero();
                    for k in 0..ctx.num_coords() {
                        ok &= ctx.coord(k, &f)?.is_zero();
                    }
                }
                Ok((ok, json!({ "c": c.to_string(), "degree": r })))
            }));
        }
    }
    out
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

// ---------------------------------------------------------------- 9

fn random_form(vs: &Vars, d: u32, rng: &mut ChaCha8Rng) -> MPoly<Rat> {
    let monos = monomials_of_degree(vs.len(), d);
    MPoly::from_terms(vs, monos.into_iter().map(|m| (m, Rat::from(rng.gen_range(-5i64..=5)))))
}

/// Complete intersections: coinvariant ideals plus a few fixed and seeded instances.
pub fn frobenius_corpus(seed: u64) -> Vec<(String, Vec<MPoly<Rat>>)> {
    let mut out = Vec::new();
    for g in [GroupModel::symmetric(3), GroupModel::symmetric(4)].into_iter().chain((3..=6).map(GroupModel::dihedral)) {
        out.push((format!("{} coinvariants", g.kind), g.invariant_generators.clone()));
    }
    let xy = vars(&["x1", "x2"]);
    let (x, y) = (MPoly::<Rat>::var(&xy, 0), MPoly::<Rat>::var(&xy, 1));
    out.push(("x1^3, x2^4".into(), vec![x.pow(3), y.pow(4)]));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (a, b) in [(2, 3), (3, 3), (3, 5)] {
        out.push((format!("random binary ({a},{b})"), vec![random_form(&xy, a, &mut rng), random_form(&xy, b, &mut rng)]));
    }
    let xyz = vars(&["x1", "x2", "x3"]);
    for degs in [[2, 2, 2], [2, 2, 3]] {
        let gens = degs.iter().map(|&d| random_form(&xyz, d, &mut rng)).collect();
        out.push((format!("random ternary {degs:?}"), gens));
    }
    out
}

fn frobenius(cfg: &Config, rec: &mut Recorder) -> Vec<Check> {
    const A: &str = "standard-frobenius";
    let mut out = Vec::new();
    let corpus = frobenius_corpus(cfg.seed);
    out.push(Check::new("c09.corpus-size", A, corpus.len() >= 10, json!({ "instances": corpus.len() })));
    for (k, (name, gens)) in corpus.iter().enumerate() {
        out.push(attempt(format!("c09.ci{k}"), A, || {
            let degs: Vec<u32> = gens.iter().filter_map(|g| g.degree().finite()).collect();
            let socle: u32 = degs.iter().map(|d| d - 1).sum();
            let fd = charpoly_from_ideal(gens, socle + 2)?;
            rec.rat(&format!("c09 {name}"), &fd.charpoly);
            let hilbert: Vec<usize> = series(&degs, &vec![1; degs.len()], socle).iter().map(|&x| x as usize).collect();
            let deriv: Vec<usize> = (0..=socle).map(|j| graded_dims_from_charpoly(&fd.charpoly, j)).collect();
            let hankel_ok = if fd.charpoly.nvars() == 2 {
                (0..=socle / 2).try_fold(true, |acc, j| Ok::<_, qharm_core::AlgebraError>(acc && hankel_rank(&fd.charpoly, j)? == fd.dims[j as usize]))?
            } else {
                true
            };
            let ok = fd.socle_degree == socle
                && fd.total_dim() == degs.iter().product::<u32>() as usize
                && fd.dims == hilbert
                && fd.quotient_dims == hilbert
                && deriv == hilbert
                && fd.is_symmetric()
                && fd.is_standard()
                && fd.essential_dependence()
                && hankel_ok;
            Ok((ok, json!({ "name": name, "socle_degree": fd.socle_degree, "dims": fd.dims, "hankel": hankel_ok })))
        }));
    }
    let groups = [GroupModel::symmetric(3), GroupModel::symmetric(4)]
        .into_iter()
        .chain(cfg.ms(3..=6).into_iter().map(GroupModel::dihedral));
    for g in groups {
        out.push(attempt(format!("c09.coroot.{}", g.kind), A, || {
            let fd = coinvariants(&g)?;
            let delta = coroot_product(&g)?;
            rec.rat(&format!("c09 delta {}", g.kind), &delta);
            let prop = fd.charpoly.with_vars(delta.vars())?.is_proportional(&delta);
            Ok((prop && fd.total_dim() == g.order, json!({ "group": g.kind.to_string(), "total_dim": fd.total_dim() })))
        }));
    }
    out
}

// ---------------------------------------------------------------- 10

fn quotient_algebras(cfg: &Config, rec: &mut Recorder) -> Vec<Check> {
    const A: &str = "dihedral-quotient-algebra";
    let mut out = Vec::new();
    for m in cfg.ms([3, 4]) {
        let cs = Probe::new(cfg.seed, 1000 + m as u64).regular_set(&[2, m], 2);
        for (i, c0) in cs.iter().enumerate() {
            for n in 1..=8u32 {
                out.push(attempt(format!("c10.m{m}.c{i}.n{n}"), A, || {
                    let mut alg = ideal_graded(m, n, std::slice::from_ref(c0), 2 * n + 2)?;
                    for g in &alg.generators {
                        rec.rat(&format!("c10 m={m} n={n}"), g);
                    }
                    let vanish = alg.ideal().quotient_dim(2 * n + 1)? == 0;
                    let ok = alg.total_dim == ((n + 1) * (n + 1)) as usize
                        && alg.socle_degree == 2 * n
                        && alg.is_symmetric()
                        && alg.has_simple_socle()
                        && vanish;
                    Ok((ok, json!({ "c": c0.to_string(), "dims": alg.graded_dims, "total": alg.total_dim })))
                }));
            }
        }
    }
    out
}

// ---------------------------------------------------------------- 11

fn q_recursion(_cfg: &Config, rec: &mut Recorder) -> Vec<Check> {
    const A: &str = "sn-q-family";
    let mut out = Vec::new();
    for n in 3..=4usize {
        out.push(attempt(format!("c11.S{n}"), A, || {
            let ctx = DunklContext::symbolic(symmetric(n));
            let fam = q_family(&ctx, 5)?;
            for lvl in &fam.levels {
                for i in 0..n {
                    rec.any(&format!("c11 n={n} r={} i={i}", lvl.r), &lvl.q(n, i)?);
                }
            }
            let checks = fam.verify(&ctx)?;
            let ok = checks.iter().all(|c| c.recursion && c.nonvanishing && c.sum_zero);
            let w: Vec<Value> = checks
                .iter()
                .map(|c| json!({ "r": c.r, "recursion": c.recursion, "nonvanishing": c.nonvanishing, "sum_zero": c.sum_zero }))
                .collect();
            Ok((ok, json!({ "symbolic": true, "levels": w })))
        }));
    }
    out
}

// ---------------------------------------------------------------- 12

fn symm_e(cfg: &Config, _rec: &mut Recorder) -> Vec<Check> {
    const A: &str = "quasiharmonic-generation";
    let mut groups: Vec<(Arc<GroupModel>, u32)> = cfg.ms(3..=5).into_iter().map(|m| (dihedral(m), 2 * m)).collect();
    groups.push((symmetric(3), 6));
    let mut out = Vec::new();
    for (g, nmax) in groups {
        let cs = Probe::new(cfg.seed, 1200 + g.order as u64).regular_set(&g.degrees, 3);
        for (i, c0) in cs.iter().enumerate() {
            out.push(attempt(format!("c12.{}.c{i}", g.kind), A, || {
                let ctx = DunklContext::rational(g.clone(), std::slice::from_ref(c0))?;
                let mut bad = Vec::new();
                for n in 0..=nmax {
                    if !generation_check(&ctx, n)? {
                        bad.push(n);
                    }
                }
                Ok((bad.is_empty(), json!({ "c": c0.to_string(), "nmax": nmax, "failing_n": bad })))
            }));
        }
    }
    out
}

// ---------------------------------------------------------------- 13

fn trivial_irrep(g: &GroupModel) -> String {
    match g.kind {
        GroupKind::Symmetric(n) => format!("[{n}]"),
        GroupKind::Dihedral(_) => "1".into(),
    }
}

/// Multiplicity series of each irreducible over a table.
fn char_series(rows: &[HilbertRow], names: &[String]) -> BTreeMap<String, Vec<i64>> {
    names
        .iter()
        .map(|name| {
            let s = rows
                .iter()
                .map(|r| r.multiplicities.iter().find(|(n, _)| n == name).map_or(0, |x| x.1 as i64))
                .collect();
            (name.clone(), s)
        })
        .collect()
}

fn hilbert_tables(cfg: &Config, _rec: &mut Recorder) -> Vec<Check> {
    let mut groups = vec![symmetric(3), symmetric(4)];
    groups.extend(cfg.ms(3..=6).into_iter().map(dihedral));
    let mut out = Vec::new();
    for g in groups {
        let id = |s: &str| format!("c13.{}.{s}", g.kind);
        let h = g.coxeter_number;
        let nmax = 2 * h;
        let c0 = Probe::new(cfg.seed, 1300 + g.order as u64).regular(&g.degrees);
        let ctx = match DunklContext::rational(g.clone(), std::slice::from_ref(&c0)) {
            Ok(c) => c,
            Err(e) => {
                out.push(Check::new(id("context"), "hilbert-tables", false, json!({ "error": e.to_string() })));
                continue;
            }
        };
        let names: Vec<String> = g.character_table().irreps.iter().map(|i| i.name.clone()).collect();
        let harmonic = hilbert_table(&ctx, QHKind::Harmonic, nmax);
        let quasi = hilbert_table(&ctx, QHKind::Quasiharmonic, nmax);
        let (harmonic, quasi) = match (harmonic, quasi) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(e), _) | (_, Err(e)) => {
                out.push(Check::new(id("tables"), "hilbert-tables", false, json!({ "error": e.to_string() })));
                continue;
            }
        };
        let dims_ok = |rows: &[HilbertRow]| rows.iter().all(|r| r.dim as i64 == r.predicted_dim);
        let dims = |rows: &[HilbertRow]| rows.iter().map(|r| r.dim).collect::<Vec<_>>();
        out.push(Check::new(id("harmonic-dims"), "hilbert-series", dims_ok(&harmonic), json!({ "c": c0.to_string(), "dims": dims(&harmonic) })));
        out.push(Check::new(id("qh-dims"), "hilbert-series", dims_ok(&quasi), json!({ "c": c0.to_string(), "dims": dims(&quasi) })));

        let ch_h = char_series(&harmonic, &names);
        let ch_qh = char_series(&quasi, &names);
        let triv = &ch_qh[&trivial_irrep(&g)];
        let triv_expect: Vec<i64> = (0..=nmax).map(|r| i64::from(r % h == 0)).collect();
        out.push(Check::new(id("trivial-character"), "invariant-character", *triv == triv_expect, json!({ "qh_trivial": triv })));

        let def = g.defining_irrep();
        let std_expect: Vec<i64> =
            (0..=nmax).map(|r| g.degrees.iter().filter(|&&d| d - 1 == r).count() as i64).collect();
        out.push(Check::new(id("standard-multiplicity"), "defining-multiplicity", ch_h[&def] == std_expect, json!({ "harmonic_defining": ch_h[&def] })));
        let mut_expect: Vec<i64> = (0..=nmax)
            .map(|r| if r == 0 { 0 } else { defining_multiplicity(&g, r) as i64 })
            .collect();
        out.push(Check::new(id("qh-defining-multiplicity"), "defining-multiplicity", ch_qh[&def] == mut_expect, json!({ "qh_defining": ch_qh[&def] })));

        let all_tau = names.iter().all(|n| ch_qh[n] == series_divide(&ch_h[n], &[h]));
        out.push(Check::new(id("qh-characters"), "graded-characters", all_tau, json!({ "irreps": names.len() })));

        for (i, &d) in g.degrees.iter().enumerate() {
            out.push(attempt(id(&format!("truncated-d{d}")), "truncated-characters", || {
                let rows = hilbert_table(&ctx, QHKind::Truncated(d), nmax)?;
                let ch = char_series(&rows, &names);
                let rest = &g.degrees[i..];
                let ok = dims_ok(&rows) && names.iter().all(|n| ch[n] == series_divide(&ch_h[n], rest));
                Ok((ok, json!({ "d": d, "dims": dims(&rows) })))
            }));
        }
    }
    out
}

// ---------------------------------------------------------------- 14

/// Suites that draw random parameters, rerun to confirm byte-stable reports.
const RERUN: [u32; 3] = [1, 4, 12];

fn serialization_standalone(cfg: &Config, _rec: &mut Recorder) -> Vec<Check> {
    let defs: Vec<&SuiteDef> = SUITES.iter().filter(|s| s.criterion <= 13).collect();
    let results = run_parallel(&defs, cfg);
    let mut rec = Recorder::default();
    let mut first = Vec::new();
    for (r, rr) in results {
        rec.merge(rr);
        first.push(r);
    }
    serialization_checks(cfg, &rec, &first)
}

fn serialization_checks(cfg: &Config, rec: &Recorder, first: &[SuiteReport]) -> Vec<Check> {
    const A: &str = "serialization";
    let mut out = vec![Check::new(
        "c14.round-trip",
        A,
        rec.failures.is_empty() && rec.structured > 0,
        json!({ "structured": rec.structured, "text": rec.text, "failures": rec.failures }),
    )];
    out.push(attempt("c14.golden-s4-e4", A, || {
        let golden = GOLDEN_S4_E4.trim_end();
        let parsed: MPoly<CPoly> = structured::from_str(golden)?;
        let bytes_ok = structured::to_string(&parsed) == golden;
        let inv = deformed_invariant(&DunklContext::symbolic(symmetric(4)), 4)?;
        let prop = inv.polynomial.is_proportional(&parsed);
        Ok((bytes_ok && prop, json!({ "byte_identical": bytes_ok, "proportional": prop })))
    }));
    let defs: Vec<&SuiteDef> = RERUN
        .iter()
        .filter_map(|c| SUITES.iter().find(|s| s.criterion == *c))
        .filter(|s| first.iter().any(|r| r.criterion == s.criterion))
        .collect();
    let again = run_parallel(&defs, cfg);
    for (r2, _) in &again {
        let r1 = first.iter().find(|r| r.criterion == r2.criterion).expect("filtered above");
        let same = r1.stable_json() == r2.stable_json();
        out.push(Check::new(format!("c14.stable.{}", r2.suite), A, same, json!({ "bytes": r1.stable_json().len() })));
    }
    if defs.is_empty() {
        out.push(Check::skip("c14.stable", A, json!({ "reason": "no seeded suite in this run" })));
    }
    out
}

/// Criteria with any failing check.
pub fn failing_criteria(reports: &[SuiteReport]) -> Vec<u32> {
    reports.iter().filter(|r| r.checks.iter().any(|c| c.status == Status::Fail)).map(|r| r.criterion).collect()
}
