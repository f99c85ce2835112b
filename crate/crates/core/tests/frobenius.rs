use qharm_core::coxeter::GroupModel;
use qharm_core::frobenius::*;
use qharm_core::quasiharmonic::series;
use qharm_core::ring::{vars, MPoly, Mono, Rat, Ring};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_form(vs: &qharm_core::ring::Vars, d: u32, rng: &mut ChaCha8Rng) -> MPoly<Rat> {
    let monos = qharm_core::ring::monomials_of_degree(vs.len(), d);
    MPoly::from_terms(vs, monos.into_iter().map(|m| (m, Rat::from(rng.gen_range(-5i64..=5)))))
}

/// (name, generators) of complete intersections.
fn corpus() -> Vec<(String, Vec<MPoly<Rat>>)> {
    let mut out = Vec::new();
    for g in [GroupModel::symmetric(3), GroupModel::symmetric(4)] {
        out.push((format!("{} coinvariants", g.kind), g.invariant_generators.clone()));
    }
    for m in 3..=6 {
        let g = GroupModel::dihedral(m);
        out.push((format!("{} coinvariants", g.kind), g.invariant_generators.clone()));
    }
    let xy = vars(&["x1", "x2"]);
    let (x, y) = (MPoly::<Rat>::var(&xy, 0), MPoly::<Rat>::var(&xy, 1));
    out.push(("x^3, y^4".into(), vec![x.pow(3), y.pow(4)]));
    let mut rng = ChaCha8Rng::seed_from_u64(11);
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

#[test]
fn complete_intersections() {
    let corpus = corpus();
    assert!(corpus.len() >= 10);
    for (name, gens) in corpus {
        let degs: Vec<u32> = gens.iter().map(|g| g.degree().finite().unwrap()).collect();
        let socle: u32 = degs.iter().map(|d| d - 1).sum();
        let fd = charpoly_from_ideal(&gens, socle + 2).unwrap();
        assert_eq!(fd.socle_degree, socle, "{name}");
        assert_eq!(fd.total_dim(), degs.iter().product::<u32>() as usize, "{name}");
        let hilbert: Vec<usize> = series(&degs, &vec![1; degs.len()], socle).iter().map(|&x| x as usize).collect();
        assert_eq!(fd.dims, hilbert, "{name}");
        assert_eq!(fd.quotient_dims, hilbert, "{name}");
        assert!(fd.is_symmetric() && fd.is_standard() && fd.essential_dependence(), "{name}");
        if fd.charpoly.nvars() == 2 {
            for k in 0..=socle / 2 {
                assert_eq!(hankel_rank(&fd.charpoly, k).unwrap(), fd.dims[k as usize], "{name} k={k}");
            }
        }
    }
}

#[test]
fn coinvariant_charpoly_is_coroot_product() {
    let groups = [GroupModel::symmetric(3), GroupModel::symmetric(4)]
        .into_iter()
        .chain((3..=6).map(GroupModel::dihedral));
    for g in groups {
        let fd = coinvariants(&g).unwrap();
        let delta = coroot_product(&g).unwrap();
        let p = fd.charpoly.with_vars(delta.vars()).unwrap();
        assert!(p.is_proportional(&delta), "{}", g.kind);
        assert_eq!(fd.total_dim(), g.order);
    }
}

#[test]
fn derivative_dims_examples() {
    let vs = vars(&["z", "zb"]);
    let (z, zb) = (MPoly::<Rat>::var(&vs, 0), MPoly::<Rat>::var(&vs, 1));
    let p = z.mul(&zb);
    let dims: Vec<usize> = (0..=2).map(|k| graded_dims_from_charpoly(&p, k)).collect();
    assert_eq!(dims, vec![1, 2, 1]);
    let d4 = coroot_product(&GroupModel::dihedral(4)).unwrap();
    let dims: Vec<usize> = (0..=4).map(|k| graded_dims_from_charpoly(&d4, k)).collect();
    assert_eq!(dims, vec![1, 2, 2, 2, 1]);
    let sq = product_charpolys(&p, &p, ProductMode::Internal).unwrap();
    assert_eq!(sq, z.pow(2).mul(&zb.pow(2)));
    let dims: Vec<usize> = (0..=4).map(|k| graded_dims_from_charpoly(&sq, k)).collect();
    assert_eq!(dims, vec![1, 2, 3, 2, 1]);
    assert!(restrict(&p, &[vec![Rat::one(), Rat::zero()]]).is_err());
}

#[test]
fn internal_product_is_tensor_then_diagonal() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let vs = vars(&["x1", "x2"]);
    for _ in 0..5 {
        let a = random_form(&vs, rng.gen_range(1..4), &mut rng);
        let b = random_form(&vs, rng.gen_range(1..4), &mut rng);
        let t = product_charpolys(&a, &b, ProductMode::Tensor).unwrap();
        // The diagonal {(u, u)} in the doubled space.
        let diag = vec![vec![Rat::one(), Rat::zero(), Rat::one(), Rat::zero()], vec![Rat::zero(), Rat::one(), Rat::zero(), Rat::one()]];
        let r = restrict(&t, &diag).unwrap();
        let direct = product_charpolys(&a, &b, ProductMode::Internal).unwrap();
        assert_eq!(r, direct.with_vars(r.vars()).unwrap());
    }
}

#[test]
fn minors_agree_with_annihilator_on_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let vs = vars(&["z", "zb"]);
    for n in 1..=5 {
        let a = random_form(&vs, n + 1, &mut rng);
        let b = random_form(&vs, n + 1, &mut rng);
        let minors = charpoly_rank2_minors(&a, &b).unwrap();
        let fd = charpoly_from_ideal(&[a, b], 2 * n + 2).unwrap();
        assert_eq!(fd.socle_degree, 2 * n);
        assert!(minors.is_proportional(&fd.charpoly));
        // A shared linear factor makes the resultant vanish.
        let l = MPoly::monomial(&vs, Mono(vec![1, 0]), Rat::one()).add(&MPoly::monomial(&vs, Mono(vec![0, 1]), Rat::from(2)));
        let (a2, b2) = (random_form(&vs, n, &mut rng).mul(&l), random_form(&vs, n, &mut rng).mul(&l));
        assert!(charpoly_rank2_minors(&a2, &b2).is_err());
    }
}
