use proptest::prelude::*;
use qharm_core::coxeter::GroupModel;
use qharm_core::dunkl::{DihedralPath, DunklContext, Sl2};
use qharm_core::ring::{monomials_of_degree, CPoly, Cyclo, MPoly, Mono, ParamRing, QZeta, Rat, Ring};
use std::sync::Arc;

fn lift(p: &MPoly<CPoly>) -> MPoly<Cyclo<CPoly>> {
    p.map_coeffs(|c| Cyclo::scalar(c.clone()))
}

fn generic_ctx(g: &Arc<GroupModel>) -> DunklContext<Cyclo<CPoly>> {
    let c = (0..g.class_count).map(|k| Cyclo::scalar(CPoly::param(k))).collect();
    DunklContext::new(g.clone(), c).with_path(DihedralPath::ReflectionSum)
}

#[test]
fn closed_forms_match_reflection_sum() {
    for m in 3..=6u32 {
        let g = Arc::new(GroupModel::dihedral(m));
        let closed = DunklContext::symbolic(g.clone());
        let generic = generic_ctx(&g);
        let e2 = &g.dual_invariant_generators[0];
        for d in 0..=8 {
            for mono in monomials_of_degree(2, d) {
                let p = MPoly::monomial(&g.vars, mono, CPoly::one());
                let lp = lift(&p);
                assert_eq!(lift(&closed.dihedral_y(&p).unwrap()), generic.coord(0, &lp).unwrap(), "Y m={m} {p}");
                assert_eq!(lift(&closed.dihedral_ybar(&p).unwrap()), generic.coord(1, &lp).unwrap(), "Ybar m={m} {p}");
                let f = generic.nabla(e2, &lp).unwrap().neg();
                assert_eq!(lift(&closed.dihedral_f(&p).unwrap()), f, "F m={m} {p}");
            }
        }
    }
}

#[test]
fn sl2_relations_up_to_degree_twelve() {
    for m in 3..=6u32 {
        let g = Arc::new(GroupModel::dihedral(m));
        let ctx = DunklContext::symbolic(g.clone());
        let sl2 = Sl2::new(&ctx).unwrap();
        for d in 0..=12 {
            for mono in monomials_of_degree(2, d) {
                let p = MPoly::monomial(&g.vars, mono, CPoly::one());
                for defect in sl2.defects(&p).unwrap() {
                    assert!(defect.is_zero(), "m={m} {p}");
                }
            }
        }
    }
}

fn groups() -> Vec<Arc<GroupModel>> {
    vec![
        Arc::new(GroupModel::symmetric(3)),
        Arc::new(GroupModel::symmetric(4)),
        Arc::new(GroupModel::dihedral(3)),
        Arc::new(GroupModel::dihedral(4)),
        Arc::new(GroupModel::dihedral(5)),
    ]
}

/// A random polynomial with small integer coefficients in `nvars` variables.
fn poly_strategy(max_deg: u32) -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
    prop::collection::vec((prop::collection::vec(0..=max_deg, 3), -4i64..=4), 1..5)
}

fn build<R: Ring>(g: &GroupModel, terms: &[(Vec<u32>, i64)], max_deg: u32) -> MPoly<R> {
    let n = g.rank;
    MPoly::from_terms(
        &g.vars,
        terms.iter().filter_map(|(e, c)| {
            let e: Vec<u32> = e[..n].to_vec();
            (e.iter().sum::<u32>() <= max_deg).then(|| (Mono(e), R::from_i64(*c)))
        }),
    )
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, .. ProptestConfig::default() })]

    #[test]
    fn operators_commute(gi in 0usize..5, terms in poly_strategy(4), i in 0usize..4, j in 0usize..4) {
        let g = &groups()[gi];
        let ctx = DunklContext::symbolic(g.clone());
        let (i, j) = (i % ctx.num_coords(), j % ctx.num_coords());
        let p: MPoly<CPoly> = build(g, &terms, 8);
        let a = ctx.coord(i, &ctx.coord(j, &p).unwrap()).unwrap();
        let b = ctx.coord(j, &ctx.coord(i, &p).unwrap()).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn degree_drops_by_one(gi in 0usize..5, terms in poly_strategy(5), i in 0usize..4, d in 0u32..6) {
        let g = &groups()[gi];
        let ctx = DunklContext::symbolic(g.clone());
        let i = i % ctx.num_coords();
        let p: MPoly<CPoly> = build(g, &terms, 8).homogeneous_part(d);
        let r = ctx.coord(i, &p).unwrap();
        prop_assert!(r.is_zero() || (d >= 1 && r.is_homogeneous() && r.degree().finite() == Some(d - 1)));
    }

    #[test]
    fn equivariance_under_reflections(gi in 0usize..5, terms in poly_strategy(4), k in 0usize..4, s in 0usize..10) {
        let g = &groups()[gi];
        let ctx = generic_ctx(g);
        let w = &g.reflections[s % g.reflections.len()];
        let y = &g.dual_functionals[k % g.dual_functionals.len()];
        // The classical part fixes the transformed direction: y'_k = ∂_y(w(x_k)).
        let y2: Vec<QZeta> = w.map.images.iter()
            .map(|row| row.iter().zip(y).fold(QZeta::zero(), |acc, (a, b)| acc.add(&a.mul(b))))
            .collect();
        let p: MPoly<Cyclo<CPoly>> = build(g, &terms, 8);
        let lhs = w.map.apply(&ctx.dunkl_apply(y, &w.map.apply(&p).unwrap()).unwrap()).unwrap();
        let rhs = ctx.dunkl_apply(&y2, &p).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn symmetric_coordinates_sum_to_zero(n in 3usize..5, terms in poly_strategy(4)) {
        let g = Arc::new(GroupModel::symmetric(n));
        let ctx = DunklContext::symbolic(g.clone());
        let p: MPoly<CPoly> = build(&g, &terms, 8);
        let total = (0..n).fold(MPoly::zero(&g.vars), |acc, i| acc.add(&ctx.coord(i, &p).unwrap()));
        prop_assert!(total.is_zero());
    }

    #[test]
    fn pairing_conjugation(gi in 0usize..5, dr in 0u32..3, dp in 1u32..3, k1 in 0usize..4, k2 in 0usize..4, terms in poly_strategy(5)) {
        let g = &groups()[gi];
        let ctx = DunklContext::symbolic(g.clone());
        let nd = g.dual_vars.len();
        let r = MPoly::<Rat>::var(&g.dual_vars, k1 % nd).pow(dr);
        let p = MPoly::<Rat>::var(&g.dual_vars, k2 % nd).pow(dp).add(&MPoly::var(&g.dual_vars, 0).pow(dp));
        let q: MPoly<CPoly> = build(g, &terms, 8).homogeneous_part(dr + dp);
        let lhs = ctx.pairing(&r.mul(&p), &q).unwrap();
        let rhs = ctx.pairing(&r, &ctx.nabla(&p, &q).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
