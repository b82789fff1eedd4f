//! Canonical families checked against exhaustive enumeration.

use std::collections::{BTreeMap, BTreeSet};

use maclab_core::canonical::*;
use maclab_core::diagrams::{complement_flip, enumerate_fillings};
use maclab_core::statistics::{admissible_pairs, eta, maj};
use maclab_core::{Filling, Mode, Partition, QtPoly};

fn shapes() -> Vec<(Partition, u32)> {
    [
        ("1", 4),
        ("2", 4),
        ("3", 4),
        ("1,1", 4),
        ("2,1", 4),
        ("2,2", 4),
        ("3,1", 3),
        ("2,1,1", 3),
        ("3,2", 3),
        ("2,2,1", 3),
        ("3,3", 3),
    ]
    .iter()
    .map(|(s, n)| (s.parse().unwrap(), *n))
    .collect()
}

#[test]
fn fibers_of_canonicalize_are_the_families() {
    for (lam, n) in shapes() {
        for mode in [Mode::Canonical, Mode::Dual] {
            let mut fibers: BTreeMap<Filling, BTreeSet<Filling>> = BTreeMap::new();
            for tau in enumerate_fillings(&lam, n) {
                let (sigma, trace) = canonicalize(&tau, mode);
                assert!(is_canonical_in(&sigma, mode), "{tau:?} -> {sigma:?}");
                assert_eq!(trace.replay(), sigma);
                fibers.entry(sigma).or_default().insert(tau);
            }
            let canon: BTreeSet<Filling> = enumerate_canonical(&lam, n, mode).into_iter().collect();
            assert_eq!(canon.len(), fibers.len(), "{lam} {mode}");
            for (sigma, fiber) in &fibers {
                assert!(canon.contains(sigma));
                let fam = generate_family(sigma, mode).unwrap();
                let set: BTreeSet<Filling> = fam.iter().cloned().collect();
                assert_eq!(set.len(), fam.len(), "duplicates in family of {sigma:?}");
                assert_eq!(&set, fiber, "{lam} {mode} {sigma:?}");
            }
        }
    }
}

#[test]
fn family_weights_factor_through_d() {
    for (lam, n) in shapes() {
        for (mode, stat) in admissible_pairs() {
            for sigma in enumerate_canonical(&lam, n, mode) {
                let d = d_coeff(&sigma, mode).unwrap();
                assert_eq!(d, d_coeff_in(&sigma, n, mode).unwrap());
                // dual statistics are read on the complemented, flipped filling
                let image = |f: &Filling| if stat.dual { complement_flip(f, n).unwrap() } else { f.clone() };
                let base = eta(&image(&sigma), stat, n).unwrap() as i64;
                let mut sum = QtPoly::zero();
                for tau in generate_family(&sigma, mode).unwrap() {
                    assert_eq!(maj(&image(&tau)), maj(&image(&sigma)));
                    sum += QtPoly::t_pow(eta(&image(&tau), stat, n).unwrap() as i64 - base);
                }
                assert_eq!(sum, d, "{lam} {mode} {stat} {sigma:?}");
            }
        }
    }
}

#[test]
fn nu_s_round_trip_exhaustive() {
    for (h, w) in [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3)] {
        for mode in [Mode::Canonical, Mode::Dual] {
            for sigma in canonical_rectangles(h, w, 4, mode) {
                let (nu, s) = nu_s_from_canonical(&sigma, 4, mode).unwrap();
                assert_eq!(sigma_from_nu_s(&nu, &s, 4, mode).unwrap(), sigma);
            }
        }
    }
}

#[test]
fn closed_forms_match_direct_counts() {
    use maclab_core::statistics::{descents_between, eta_s_between, EtaStatistic, QuadrupleSet};
    let stat = EtaStatistic::new(QuadrupleSet::new(2).unwrap(), false);
    for (lam, n) in shapes() {
        for sigma in enumerate_canonical(&lam, n, Mode::Canonical) {
            let data = NuSData::of(&sigma, n, Mode::Canonical).unwrap();
            let mut pairs = 0i64;
            for rect in maclab_core::diagrams::rect_ranges(&lam).into_iter().filter(|r| r.width > 0) {
                let j = rect.height;
                for i in 1..=j {
                    let s = &data.s[j - 1][i - 1];
                    let nu = &data.nu[j - 1][i - 1];
                    let desc = if i < j { descents_between(&sigma, i, rect.start, rect.width) } else { 0 };
                    assert_eq!(pair_maj_closed(s, i, j), (j - i) * desc);
                    let w = rect.width as i64;
                    let direct = w * (w - 1) / 2 - eta_s_between(&sigma, stat.set, i, rect.start, rect.width) as i64;
                    assert_eq!(pair_eta_bar_closed(s, nu), direct, "{sigma:?} rows {i},{j}");
                    pairs += direct;
                }
            }
            let eta_bar = lam.conjugate().n_stat() as i64 - eta(&sigma, stat, n).unwrap() as i64;
            assert_eq!(quinv_bar_closed(&data, &lam), eta_bar - pairs, "{sigma:?}");
        }
    }
}

#[test]
fn neutral_block_lengths() {
    use maclab_core::diagrams::distinct_permutations;
    let mut blocks = 0;
    for (lam, n) in shapes() {
        let rects: Vec<_> = maclab_core::diagrams::rect_ranges(&lam).into_iter().filter(|r| r.width > 0).collect();
        for full in enumerate_canonical(&lam, n, Mode::Canonical) {
            // blocks live inside the rectangles
            for sigma in rects.iter().map(|rc| full.block(1, rc.height, rc.start, rc.width)) {
                for r in 1..=sigma.num_rows() {
                    for b in extract_blocks(&sigma, r) {
                        if b.kind != BlockKind::Neutral {
                            continue;
                        }
                        blocks += 1;
                        let a = b.upper_neighbor[0];
                        let p = &b.entries;
                        let clamped = alpha(&b).unwrap();
                        assert_eq!(length_generating_function(&clamped), multiplicity_multinomial(&clamped));
                        assert_eq!(clamped_length_sum(p, a), multiplicity_multinomial(&clamped), "{p:?} under {a}");
                        if a > 0 {
                            for w in distinct_permutations(p) {
                                assert_eq!(
                                    length_from(p, &w).unwrap(),
                                    lessdot_inv(&w, a - 1, n),
                                    "{p:?} {w:?} {a} {sigma:?} {r}"
                                );
                            }
                        }
                    }
                }
            }
        }
    }
    assert!(blocks > 1000);
}
