use proptest::prelude::*;
use qharm_core::ring::text::{parse_cpoly, parse_rat, render};
use qharm_core::ring::{structured, vars, CPoly, Cyclo, MPoly, Mono, PExp, ParamRing, QZeta, Rat, RatFunc, Ring};

fn rat() -> impl Strategy<Value = Rat> {
    (-30i64..=30, 1i64..=12).prop_map(|(a, b)| Rat::new(a, b))
}

fn cpoly() -> impl Strategy<Value = CPoly> {
    prop::collection::vec(((0u32..3, 0u32..3), rat()), 0..4).prop_map(|ts| {
        ts.into_iter().fold(CPoly::zero(), |acc, ((a, b), c)| acc.add(&CPoly::monomial(PExp(a, b), c)))
    })
}

fn mpoly_cp() -> impl Strategy<Value = MPoly<CPoly>> {
    prop::collection::vec(((0u32..4, 0u32..4), cpoly()), 0..4).prop_map(|ts| {
        let vs = vars(&["z", "zb"]);
        MPoly::from_terms(&vs, ts.into_iter().map(|((a, b), c)| (Mono(vec![a, b]), c)))
    })
}

fn qzeta(m: u32) -> impl Strategy<Value = QZeta> {
    prop::collection::vec(rat(), 1..6)
        .prop_map(move |cs| cs.into_iter().enumerate().fold(QZeta::zero(), |acc, (k, c)| acc.add(&QZeta::zeta_pow(m, k as i64).mul(&QZeta::scalar(c)))))
}

fn axioms<R: Ring>(a: &R, b: &R, c: &R) -> bool {
    a.add(b) == b.add(a)
        && a.mul(b) == b.mul(a)
        && a.add(b).add(c) == a.add(&b.add(c))
        && a.mul(b).mul(c) == a.mul(&b.mul(c))
        && a.mul(&b.add(c)) == a.mul(b).add(&a.mul(c))
        && a.sub(a).is_zero()
        && a.mul(&R::one()) == *a
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, .. ProptestConfig::default() })]

    #[test]
    fn rat_axioms(a in rat(), b in rat(), c in rat()) {
        prop_assert!(axioms(&a, &b, &c));
    }

    #[test]
    fn cpoly_axioms(a in cpoly(), b in cpoly(), c in cpoly()) {
        prop_assert!(axioms(&a, &b, &c));
    }

    #[test]
    fn ratfunc_axioms(a in cpoly(), b in cpoly(), c in cpoly(), d in cpoly()) {
        prop_assume!(!b.is_zero() && !d.is_zero());
        let x = RatFunc::new(a.clone(), b.clone()).unwrap();
        let y = RatFunc::new(c.clone(), d.clone()).unwrap();
        let z = RatFunc::from(a.add(&c));
        prop_assert!(axioms(&x, &y, &z));
        // Canonical form: monic denominator, reduced.
        prop_assert_eq!(x.denom().leading_coeff(), Rat::one());
        prop_assert!(x.numer().gcd(x.denom()).is_constant());
    }

    #[test]
    fn cyclo_axioms(a in qzeta(5), b in qzeta(5), c in qzeta(5)) {
        prop_assert!(axioms(&a, &b, &c));
    }

    #[test]
    fn mpoly_axioms(a in mpoly_cp(), b in mpoly_cp(), c in mpoly_cp()) {
        prop_assert!(axioms_m(&a, &b, &c));
        if !b.is_zero() {
            prop_assert_eq!(a.mul(&b).div_exact(&b).unwrap(), a.clone());
        }
    }

    #[test]
    fn specialization_is_a_homomorphism(a in mpoly_cp(), b in mpoly_cp(), c1 in rat(), c2 in rat()) {
        let v = [c1, c2];
        let lhs = a.mul(&b).specialize(&v).unwrap();
        let rhs = a.specialize(&v).unwrap().mul(&b.specialize(&v).unwrap());
        prop_assert_eq!(lhs, rhs);
        let s = a.add(&b).specialize(&v).unwrap();
        prop_assert_eq!(s, a.specialize(&v).unwrap().add(&b.specialize(&v).unwrap()));
    }

    #[test]
    fn text_round_trip(a in mpoly_cp()) {
        let s = render(&a);
        prop_assert_eq!(parse_cpoly(&s, a.vars()).unwrap(), a.clone());
        let r = a.specialize(&[Rat::new(1, 3), Rat::new(-2, 5)]).unwrap();
        prop_assert_eq!(parse_rat(&render(&r), r.vars()).unwrap(), r);
    }

    #[test]
    fn structured_round_trip(a in mpoly_cp(), x in qzeta(7)) {
        prop_assert_eq!(structured::from_str::<CPoly>(&structured::to_string(&a)).unwrap(), a.clone());
        let vs = vars(&["z", "zb"]);
        let p = MPoly::monomial(&vs, Mono(vec![1, 2]), x);
        prop_assert_eq!(structured::from_str::<QZeta>(&structured::to_string(&p)).unwrap(), p);
    }
}

fn axioms_m(a: &MPoly<CPoly>, b: &MPoly<CPoly>, c: &MPoly<CPoly>) -> bool {
    a.add(b) == b.add(a)
        && a.mul(b) == b.mul(a)
        && a.mul(b).mul(c) == a.mul(&b.mul(c))
        && a.mul(&b.add(c)) == a.mul(b).add(&a.mul(c))
}

#[test]
fn roots_of_unity() {
    for m in 2..=8u32 {
        assert_eq!(QZeta::zeta_pow(m, 1).pow(m), QZeta::one());
        let sum = (0..m as i64).fold(QZeta::zero(), |acc, k| acc.add(&QZeta::zeta_pow(m, k)));
        assert!(sum.is_zero(), "m = {m}");
    }
    let c = Cyclo::<CPoly>::scalar(CPoly::param(0));
    assert_eq!(c.mul(&Cyclo::zeta_pow(3, 3)), c);
}

#[test]
fn canonical_text() {
    let vs = vars(&["z", "zb"]);
    let c = CPoly::param(0);
    let p = MPoly::from_terms(
        &vs,
        [(Mono(vec![3, 0]), c.sub(&CPoly::one())), (Mono(vec![0, 3]), c.neg())],
    );
    assert_eq!(render(&p), "(c1-1)*z^3 - c1*zb^3");
    assert_eq!(parse_cpoly("(c1-1)*z^3 - c1*zb^3", &vs).unwrap(), p);
}
