use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use maclab_core::canonical::{canonicalize, compact_htilde, generate_family};
use maclab_core::flips::gamma;
use maclab_core::golden;
use maclab_core::monomial::{htilde_brute_force, htilde_monomial, p_lambda_mu};
use maclab_core::statistics::{eta, maj, quinv};
use maclab_core::{EtaStatistic, Mode, Partition, QuadrupleSet, Stat};

fn statistics(c: &mut Criterion) {
    let (tau, _, _, _) = golden::gamma_two_row();
    let s2 = EtaStatistic::new(QuadrupleSet::new(2).unwrap(), false);
    c.bench_function("maj_quinv_two_rows", |b| b.iter(|| (maj(black_box(&tau)), quinv(black_box(&tau)))));
    c.bench_function("eta_s2_two_rows", |b| b.iter(|| eta(black_box(&tau), s2, 8).unwrap()));
}

fn bijections(c: &mut Criterion) {
    let (tau, _, _, _) = golden::gamma_two_row();
    let set = QuadrupleSet::new(2).unwrap();
    c.bench_function("gamma_two_rows", |b| b.iter(|| gamma(black_box(&tau), set).unwrap()));
    let (tau, sigma) = golden::canonicalize_three_rows();
    c.bench_function("canonicalize_three_rows", |b| b.iter(|| canonicalize(black_box(&tau), Mode::Canonical)));
    c.bench_function("family_three_rows", |b| b.iter(|| generate_family(black_box(&sigma), Mode::Canonical).unwrap()));
}

fn expansions(c: &mut Criterion) {
    let lam: Partition = "2,2".parse().unwrap();
    let s2 = EtaStatistic::new(QuadrupleSet::new(2).unwrap(), false);
    let mut group = c.benchmark_group("htilde_2_2_alphabet_4");
    group.bench_function("hhl", |b| b.iter(|| htilde_brute_force(black_box(&lam), 4, Stat::Inv).unwrap()));
    group.bench_function("compact", |b| b.iter(|| compact_htilde(black_box(&lam), 4, Mode::Canonical, s2).unwrap()));
    group.bench_function("monomial", |b| b.iter(|| htilde_monomial(black_box(&lam), 4, 1).unwrap()));
    group.finish();
    let (lam, mu): (Partition, Partition) = ("3,2,1".parse().unwrap(), "2,2,1,1".parse().unwrap());
    let mut group = c.benchmark_group("p_3_2_1_at_2_2_1_1");
    for f in 1..=4u8 {
        group.bench_function(format!("formula_{f}"), |b| b.iter(|| p_lambda_mu(black_box(&lam), &mu, f).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, statistics, bijections, expansions);
criterion_main!(benches);
