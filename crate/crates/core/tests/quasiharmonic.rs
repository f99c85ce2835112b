use qharm_core::coxeter::GroupModel;
use qharm_core::dunkl::DunklContext;
use qharm_core::quasiharmonic::*;
use qharm_core::ring::{q, CPoly, MPoly, ParamRing, Rat, Ring};
use std::sync::Arc;

fn lift(p: &MPoly<Rat>) -> MPoly<CPoly> {
    p.map_coeffs(|x| CPoly::constant(x.clone()))
}

fn c_lin(a: i64, b: i64) -> CPoly {
    // a·c + b
    CPoly::linear(Rat::from(b), Rat::from(a))
}

#[test]
fn s4_exceptional_tables() {
    let g = Arc::new(GroupModel::symmetric(4));
    let ctx = DunklContext::symbolic(g);
    let (dim3, loc3) = qh_locus(&ctx, 3, QHKind::Quasiharmonic, 7).unwrap();
    assert_eq!(dim3, 6);
    assert_eq!(loc3.confirmed_values(), vec![q(1, 4), q(1, 2)]);
    assert!(loc3.confirmed.iter().all(|(_, rk)| 10 - rk == 7));
    let (dim4, loc4) = qh_locus(&ctx, 4, QHKind::Quasiharmonic, 7).unwrap();
    assert_eq!(dim4, 6);
    assert_eq!(loc4.confirmed_values(), vec![q(1, 3), q(1, 2), q(3, 4)]);
    assert!(loc4.confirmed.iter().all(|(_, rk)| 15 - rk == 9));
}

#[test]
fn s4_dims_follow_generating_function() {
    let g = Arc::new(GroupModel::symmetric(4));
    let ctx = DunklContext::symbolic(g);
    let dims: Vec<usize> = (0..=5).map(|n| qh_space(&ctx, n, QHKind::Quasiharmonic).unwrap().dim()).collect();
    assert_eq!(dims, vec![1, 3, 5, 6, 6, 6]);
}

#[test]
fn sn_deformed_invariants_match_closed_formulas() {
    for n in 3..=5usize {
        let g = Arc::new(GroupModel::symmetric(n));
        let ctx = DunklContext::symbolic(g.clone());
        let e = |k: usize| lift(&g.invariant_generators[k - 2]);
        let ni = n as i64;
        assert!(deformed_invariant(&ctx, 2).unwrap().polynomial.is_proportional(&e(2)));
        assert!(deformed_invariant(&ctx, 3).unwrap().polynomial.is_proportional(&e(3)));
        if n >= 4 {
            let a = c_lin(-ni, 1).scale(&Rat::new((ni - 2) * (ni - 3), 2));
            let b = c_lin(ni * ni * (ni - 1), -ni * (ni + 1));
            let expect = e(2).mul(&e(2)).scale(&a).add(&e(4).scale(&b));
            assert!(deformed_invariant(&ctx, 4).unwrap().polynomial.is_proportional(&expect), "n = {n}");
        }
        if n >= 5 {
            let a = c_lin(-ni, 1).scale(&Rat::from((ni - 3) * (ni - 4)));
            let b = c_lin(ni * ni * (ni - 1), -ni * (ni + 5));
            let expect = e(2).mul(&e(3)).scale(&a).add(&e(5).scale(&b));
            assert!(deformed_invariant(&ctx, 5).unwrap().polynomial.is_proportional(&expect), "n = {n}");
        }
    }
}

#[test]
fn s4_e8_matches_printed_formula() {
    let g = Arc::new(GroupModel::symmetric(4));
    let ctx = DunklContext::symbolic(g.clone());
    let c = CPoly::param(0);
    let quad = |a: i64, b: i64, k: i64| c.mul(&c).scale(&Rat::from(a)).add(&c.scale(&Rat::from(b))).add(&CPoly::from_i64(k));
    let e2 = lift(&g.invariant_generators[0]);
    let e3 = lift(&g.invariant_generators[1]);
    let e4 = lift(&g.invariant_generators[2]);
    let expect = e2
        .pow(4)
        .scale(&quad(16, -32, 27))
        .sub(&e2.pow(2).mul(&e4).scale(&quad(16, -40, 29).scale(&Rat::from(24))))
        .sub(&e2.mul(&e3.pow(2)).scale(&c_lin(12, -13).scale(&Rat::from(24))))
        .add(&e4.pow(2).scale(&c_lin(12, -13).mul(&c_lin(4, -5)).scale(&Rat::from(48))));
    let got = deformed_invariant(&ctx, 8).unwrap().polynomial;
    assert!(got.is_proportional(&expect), "{got}");
}

#[test]
fn dihedral_top_invariants() {
    for m in 3..=6u32 {
        let g = Arc::new(GroupModel::dihedral(m));
        let em = lift(&g.invariant_generators[1]);
        let ctx = DunklContext::symbolic_const(g.clone());
        assert!(deformed_invariant(&ctx, m).unwrap().polynomial.is_proportional(&em));
        if m % 2 == 0 {
            let ctx2 = DunklContext::symbolic(g.clone());
            let (c1, c2) = (CPoly::param(0), CPoly::param(1));
            let sign = if (m / 2) % 2 == 0 { 2 } else { -2 };
            let e2h = lift(&g.invariant_generators[0]).pow(m / 2);
            let expect = em
                .scale(&c1.add(&c2).sub(&CPoly::one()))
                .add(&e2h.scale(&c2.sub(&c1).scale(&Rat::from(sign))));
            let got = deformed_invariant(&ctx2, m).unwrap();
            assert!(got.polynomial.is_proportional(&expect), "m = {m}: {}", got.polynomial);
            let e2 = deformed_invariant(&ctx2, 2).unwrap();
            let invs = [e2, got];
            assert!(algebraic_independence_check(&invs, &[q(1, 7), q(2, 5)], 1).unwrap());
            assert!(!algebraic_independence_check(&invs, &[q(1, 3), q(2, 3)], 1).unwrap());
        }
    }
}

#[test]
fn q_family_normalization() {
    for n in 3..=4usize {
        let g = Arc::new(GroupModel::symmetric(n));
        let ctx = DunklContext::symbolic(g.clone());
        let fam = q_family(&ctx, 5).unwrap();
        for chk in fam.verify(&ctx).unwrap() {
            assert!(chk.recursion && chk.nonvanishing && chk.sum_zero, "n={n}: {chk:?}");
        }
    }
}

#[test]
fn generation_small() {
    let g = Arc::new(GroupModel::dihedral(3));
    let ctx = DunklContext::rational(g, &[q(1, 7)]).unwrap();
    for n in 0..=6 {
        assert!(generation_check(&ctx, n).unwrap(), "n = {n}");
    }
    let g = Arc::new(GroupModel::symmetric(3));
    let ctx = DunklContext::rational(g, &[q(1, 5)]).unwrap();
    for n in 0..=6 {
        assert!(generation_check(&ctx, n).unwrap(), "n = {n}");
    }
}

#[test]
fn s4_isotypic_v_in_degree_three() {
    let g = Arc::new(GroupModel::symmetric(4));
    let ctx = DunklContext::rational(g.clone(), &[q(2, 7)]).unwrap();
    let sp = qh_space(&ctx, 3, QHKind::Quasiharmonic).unwrap();
    let mults = g.decompose_module(&sp.basis).unwrap();
    let get = |name: &str| mults.iter().find(|(n, _)| n == name).map(|x| x.1).unwrap_or(0);
    assert_eq!(get("[3,1]"), 1);
    assert_eq!(get("[2,1,1]"), 1);
    let v = isotypic_component(&g, &sp.basis, "[3,1]").unwrap();
    assert_eq!(v.len(), 3);
    let ve = isotypic_component(&g, &sp.basis, "[2,1,1]").unwrap();
    assert_eq!(ve.len(), 3);
    assert!(isotypic_component(&g, &sp.basis, "[4]").unwrap().is_empty());
}
