use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qharm_core::coxeter::GroupModel;
use qharm_core::dihedral::{charpoly_closed_at, qh_basis_dihedral_at, rho};
use qharm_core::dunkl::DunklContext;
use qharm_core::frobenius::{charpoly_from_ideal, charpoly_rank2_minors};
use qharm_core::quasiharmonic::{qh_locus, qh_space, QHKind};
use qharm_core::ring::q;
use std::hint::black_box;
use std::sync::Arc;

fn symbolic_kernels(c: &mut Criterion) {
    let mut g = c.benchmark_group("symbolic-qh-space");
    for m in [4u32, 6] {
        let ctx = DunklContext::symbolic(Arc::new(GroupModel::dihedral(m)));
        g.bench_with_input(BenchmarkId::new("I2", m), &m, |b, &m| {
            b.iter(|| qh_space(&ctx, black_box(3 * m), QHKind::Quasiharmonic).unwrap())
        });
    }
    let s4 = DunklContext::symbolic(Arc::new(GroupModel::symmetric(4)));
    g.bench_function("S4 locus n=4", |b| b.iter(|| qh_locus(&s4, black_box(4), QHKind::Quasiharmonic, 7).unwrap()));
    g.finish();
}

fn dihedral_families(c: &mut Criterion) {
    c.bench_function("rho m=5 n=15", |b| b.iter(|| rho(black_box(5), black_box(15)).unwrap()));
    let c0 = q(2, 7);
    c.bench_function("charpoly closed m=4 n=10", |b| b.iter(|| charpoly_closed_at(4, black_box(10), &c0).unwrap()));
    let basis = qh_basis_dihedral_at(4, 11, &c0).unwrap();
    c.bench_function("charpoly minors m=4 n=10", |b| {
        b.iter(|| charpoly_rank2_minors(black_box(&basis[0]), &basis[1]).unwrap())
    });
    let basis = qh_basis_dihedral_at(3, 5, &c0).unwrap();
    c.bench_function("charpoly annihilator m=3 n=4", |b| b.iter(|| charpoly_from_ideal(black_box(&basis), 10).unwrap()));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = symbolic_kernels, dihedral_families
}
criterion_main!(benches);
