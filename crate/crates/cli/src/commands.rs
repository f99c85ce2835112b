//! Command handlers. Each one parses its inputs, calls a single core
//! operation and renders the result; nothing here does algebra.

use anyhow::{bail, Context};
use qharm_core::coxeter::{GroupKind, GroupModel};
use qharm_core::dihedral;
use qharm_core::dunkl::{DunklContext, ParamValue};
use qharm_core::frobenius;
use qharm_core::quasiharmonic::{self as qh, QHKind};
use qharm_core::ring::text::parse_rat;
use qharm_core::ring::{structured, MPoly, Rat, Ring, Vars};
use serde_json::{json, Value};
use std::fmt::Write as _;
use std::sync::Arc;

/// A command result in both renderings, plus whether its built-in check passed.
pub struct Rendered {
    pub text: String,
    pub json: Value,
    pub ok: bool,
}

impl Rendered {
    fn new(text: String, json: Value) -> Self {
        Rendered { text, json, ok: true }
    }
}

pub fn group(s: &str) -> anyhow::Result<Arc<GroupModel>> {
    let kind: GroupKind = s.parse()?;
    Ok(Arc::new(GroupModel::build(kind)?))
}

/// `--c symbolic`, `--c 1/3`, or `--c1 1/3 --c2 2/5`.
pub fn param(c: Option<&str>, c1: Option<&str>, c2: Option<&str>) -> anyhow::Result<ParamValue> {
    let rat = |s: &str| s.parse::<Rat>().with_context(|| format!("bad parameter value {s:?}"));
    match (c, c1, c2) {
        (Some("symbolic"), None, None) => Ok(ParamValue::Symbolic),
        (Some("const"), None, None) => Ok(ParamValue::SymbolicConst),
        (Some(v), None, None) => Ok(ParamValue::Rational(vec![rat(v)?])),
        (None, Some(a), Some(b)) => Ok(ParamValue::Rational(vec![rat(a)?, rat(b)?])),
        (None, Some(a), None) => Ok(ParamValue::Rational(vec![rat(a)?])),
        (None, None, None) => Ok(ParamValue::Symbolic),
        _ => bail!("give either --c or --c1 [--c2]"),
    }
}

fn rational(p: &ParamValue) -> anyhow::Result<&[Rat]> {
    match p {
        ParamValue::Rational(v) => Ok(v),
        _ => bail!("this command needs a rational parameter value"),
    }
}

pub fn kind(s: &str) -> anyhow::Result<QHKind> {
    match s {
        "harmonic" => Ok(QHKind::Harmonic),
        "quasiharmonic" | "qh" => Ok(QHKind::Quasiharmonic),
        _ => match s.strip_prefix("truncated:") {
            Some(d) => Ok(QHKind::Truncated(d.parse().context("truncation degree")?)),
            None => bail!("unknown kind {s:?}; expected harmonic, quasiharmonic or truncated:<d>"),
        },
    }
}

fn polys<R: Ring>(ps: &[MPoly<R>]) -> Rendered {
    let text = ps.iter().map(|p| format!("{p}\n")).collect();
    let json = Value::Array(ps.iter().map(structured::to_value).collect());
    Rendered::new(text, json)
}

fn param_ctx_dims(g: Arc<GroupModel>, p: &ParamValue, kind: QHKind, degs: impl Iterator<Item = u32>) -> anyhow::Result<Vec<(u32, usize)>> {
    let degs: Vec<u32> = degs.collect();
    Ok(match p {
        ParamValue::Symbolic | ParamValue::SymbolicConst => {
            let ctx = if *p == ParamValue::Symbolic { DunklContext::symbolic(g) } else { DunklContext::symbolic_const(g) };
            degs.into_iter().map(|n| Ok((n, qh::qh_space(&ctx, n, kind)?.dim()))).collect::<anyhow::Result<_>>()?
        }
        ParamValue::Rational(v) => {
            let ctx = DunklContext::rational(g, v)?;
            degs.into_iter().map(|n| Ok((n, qh::qh_space(&ctx, n, kind)?.dim()))).collect::<anyhow::Result<_>>()?
        }
    })
}

pub fn qh_dims(g: Arc<GroupModel>, p: &ParamValue, kind: QHKind, degmax: u32) -> anyhow::Result<Rendered> {
    let predicted = kind.predicted_dims(&g, degmax);
    let rows = param_ctx_dims(g, p, kind, 0..=degmax)?;
    let mut text = String::from("n  dim  series\n");
    for (n, d) in &rows {
        let _ = writeln!(text, "{n:<2} {d:<4} {}", predicted[*n as usize]);
    }
    let dims: Vec<usize> = rows.iter().map(|r| r.1).collect();
    Ok(Rendered::new(text, json!({ "dims": dims, "series": predicted })))
}

pub fn qh_basis(g: Arc<GroupModel>, p: &ParamValue, kind: QHKind, n: u32) -> anyhow::Result<Rendered> {
    Ok(match p {
        ParamValue::Symbolic => polys(&qh::qh_space(&DunklContext::symbolic(g), n, kind)?.basis),
        ParamValue::SymbolicConst => polys(&qh::qh_space(&DunklContext::symbolic_const(g), n, kind)?.basis),
        ParamValue::Rational(v) => polys(&qh::qh_space(&DunklContext::rational(g, v)?, n, kind)?.basis),
    })
}

pub fn qh_locus(g: Arc<GroupModel>, kind: QHKind, n: u32, seed: u64) -> anyhow::Result<Rendered> {
    let ctx = DunklContext::symbolic_const(g);
    let (dim, loc) = qh::qh_locus(&ctx, n, kind, seed)?;
    let cols = dim + loc.generic_rank;
    let exc: Vec<Value> = loc
        .confirmed
        .iter()
        .map(|(c, rk)| json!({ "c": c.to_string(), "dim": cols - rk }))
        .collect();
    let mut text = format!("generic dim {dim}\n");
    for (c, rk) in &loc.confirmed {
        let _ = writeln!(text, "c = {c}: dim {}", cols - rk);
    }
    Ok(Rendered::new(text, json!({ "generic_dim": dim, "exceptional": exc })))
}

pub fn invariants_deformed(g: Arc<GroupModel>, p: &ParamValue, d: u32) -> anyhow::Result<Rendered> {
    let ctx = match p {
        ParamValue::Symbolic => DunklContext::symbolic(g),
        ParamValue::SymbolicConst => DunklContext::symbolic_const(g),
        ParamValue::Rational(_) => bail!("deformed invariants are computed over Q[c]; use --c symbolic or const"),
    };
    let inv = qh::deformed_invariant(&ctx, d)?;
    let text = format!("{}\n= {}\n", inv.polynomial, inv.in_generators());
    Ok(Rendered::new(text, structured::to_value(&inv.polynomial)))
}

pub fn dihedral_rho(m: u32, n: u32) -> anyhow::Result<Rendered> {
    let r = dihedral::rho(m, n)?;
    let mut out = polys(&[r.rho.clone(), r.bar()]);
    out.ok = dihedral::rho_routes_agree(m, n);
    Ok(out)
}

pub fn dihedral_s(m: u32, n: u32) -> anyhow::Result<Rendered> {
    Ok(polys(&[dihedral::s_poly(m, n)?]))
}

pub fn dihedral_charpoly(m: u32, n: u32, c: Option<&Rat>, check_minors: bool) -> anyhow::Result<Rendered> {
    let Some(c0) = c else {
        return Ok(polys(&[dihedral::charpoly_closed(m, n)]));
    };
    let closed = dihedral::charpoly_closed_at(m, n, c0)?;
    let mut out = polys(std::slice::from_ref(&closed));
    if check_minors {
        let b = dihedral::qh_basis_dihedral_at(m, n + 1, c0)?;
        let minors = frobenius::charpoly_rank2_minors(&b[0], &b[1])?;
        out.ok = minors.is_proportional(&closed);
        let _ = writeln!(out.text, "minors proportional: {}", out.ok);
        out.json = json!({ "closed": out.json[0], "minors": structured::to_value(&minors), "proportional": out.ok });
    }
    Ok(out)
}

pub fn dihedral_quotient(m: u32, n: u32, c: &[Rat]) -> anyhow::Result<Rendered> {
    let alg = dihedral::ideal_graded(m, n, c, 2 * n + 2)?;
    let text = format!(
        "graded dims {:?}\ntotal {}\nsocle degree {}\nsymmetric {}\n",
        alg.graded_dims,
        alg.total_dim,
        alg.socle_degree,
        alg.is_symmetric()
    );
    let json = json!({ "dims": alg.graded_dims, "total": alg.total_dim, "socle_degree": alg.socle_degree });
    let mut out = Rendered::new(text, json);
    out.ok = alg.is_symmetric() && alg.has_simple_socle();
    Ok(out)
}

/// Reads polynomials from a file: a JSON array of structured polynomials, or
/// text with a `vars: a, b, ...` line followed by one polynomial per line.
pub fn read_polys(src: &str) -> anyhow::Result<Vec<MPoly<Rat>>> {
    let trimmed = src.trim_start();
    if trimmed.starts_with('[') {
        let v: Vec<Value> = serde_json::from_str(trimmed)?;
        return v.iter().map(|x| Ok(structured::from_value(x)?)).collect();
    }
    if trimmed.starts_with('{') {
        return Ok(vec![structured::from_str(trimmed)?]);
    }
    let mut vs: Option<Vars> = None;
    let mut out = Vec::new();
    for line in src.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
        if let Some(names) = line.strip_prefix("vars:") {
            let names: Vec<String> = names.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect();
            vs = Some(names.into());
            continue;
        }
        let v = vs.as_ref().context("text input needs a `vars:` line before the polynomials")?;
        out.push(parse_rat(line, v)?);
    }
    Ok(out)
}

fn frobenius_render(fd: &frobenius::FrobeniusData) -> Rendered {
    let text = format!(
        "charpoly {}\ndims {:?}\nsocle degree {}\nsymmetric {}\n",
        fd.charpoly,
        fd.dims,
        fd.socle_degree,
        fd.is_symmetric()
    );
    let json = json!({
        "charpoly": structured::to_value(&fd.charpoly),
        "dims": fd.dims,
        "socle_degree": fd.socle_degree,
    });
    let mut out = Rendered::new(text, json);
    out.ok = fd.is_symmetric() && fd.is_standard();
    out
}

pub fn frobenius_charpoly(src: &str, cap: u32) -> anyhow::Result<Rendered> {
    let gens = read_polys(src)?;
    Ok(frobenius_render(&frobenius::charpoly_from_ideal(&gens, cap)?))
}

pub fn frobenius_dims(src: &str) -> anyhow::Result<Rendered> {
    let ps = read_polys(src)?;
    let [p] = ps.as_slice() else { bail!("expected exactly one polynomial") };
    let n = p.degree().finite().context("zero polynomial")?;
    let dims: Vec<usize> = (0..=n).map(|k| frobenius::graded_dims_from_charpoly(p, k)).collect();
    Ok(Rendered::new(format!("dims {dims:?}\n"), json!({ "dims": dims })))
}

pub fn frobenius_coinvariants(g: Arc<GroupModel>) -> anyhow::Result<Rendered> {
    let fd = frobenius::coinvariants(&g)?;
    let delta = frobenius::coroot_product(&g)?;
    let mut out = frobenius_render(&fd);
    let prop = fd.charpoly.with_vars(delta.vars())?.is_proportional(&delta);
    let _ = writeln!(out.text, "proportional to coroot product: {prop}");
    out.ok &= prop;
    Ok(out)
}

pub fn singular_scan(g: Arc<GroupModel>, c: &[Rat], degmax: u32) -> anyhow::Result<Rendered> {
    let ctx = DunklContext::rational(g, c)?;
    let mut text = String::new();
    let mut hits = Vec::new();
    for n in 1..=degmax {
        let sv = qh::singular_vectors(&ctx, n)?;
        if !sv.is_empty() {
            let _ = writeln!(text, "degree {n}: dim {}", sv.len());
            for p in &sv {
                let _ = writeln!(text, "  {p}");
            }
            hits.push(json!({ "degree": n, "basis": sv.iter().map(structured::to_value).collect::<Vec<_>>() }));
        }
    }
    if hits.is_empty() {
        text.push_str("no singular vectors\n");
    }
    Ok(Rendered::new(text, Value::Array(hits)))
}

pub fn rational_param(p: &ParamValue) -> anyhow::Result<Vec<Rat>> {
    Ok(rational(p)?.to_vec())
}
