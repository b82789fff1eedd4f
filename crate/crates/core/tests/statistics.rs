use maclab_core::diagrams::{complement_flip, enumerate_fillings, rect_ranges};
use maclab_core::golden;
use maclab_core::statistics::*;
use maclab_core::{EtaStatistic, Filling, Partition, QtPoly, QuadrupleSet};
use proptest::prelude::*;

fn one_row() -> impl Strategy<Value = Vec<u32>> {
    proptest::collection::vec(1u32..6, 1..8)
}

proptest! {
    #[test]
    fn quadruple_symmetries(id in 1u8..9, z in 0u32..6, w in 0u32..6, u in 0u32..6, v in 0u32..6) {
        let s = QuadrupleSet::new(id).unwrap();
        if z != w {
            prop_assert_eq!(quad_membership(s, z, w, u, v), quad_membership(s, w, z, v, u));
        }
        if u == v {
            prop_assert!(!quad_membership(s, z, w, u, v));
        } else {
            prop_assert_ne!(quad_membership(s, z, w, u, v), quad_membership(s, z, w, v, u));
        }
    }

    #[test]
    fn one_row_statistics_are_word_inversions(w in one_row()) {
        let f = Filling::from_rows(vec![w.clone()]).unwrap();
        let pairs = || (0..w.len()).flat_map(|i| (i + 1..w.len()).map(move |j| (i, j)));
        prop_assert_eq!(inv(&f), pairs().filter(|&(i, j)| w[i] > w[j]).count());
        prop_assert_eq!(quinv(&f), pairs().filter(|&(i, j)| w[i] < w[j]).count());
        prop_assert_eq!(maj(&f), 0);
    }

    #[test]
    fn eta_and_eta_bar_add_up(entries in proptest::collection::vec(1u32..5, 9), id in 1u8..9, dual: bool) {
        let f = Filling::from_rows(vec![entries[..4].to_vec(), entries[4..7].to_vec(), entries[7..].to_vec()]).unwrap();
        let stat = EtaStatistic::new(QuadrupleSet::new(id).unwrap(), dual);
        let total = f.shape().conjugate().n_stat() as i64;
        prop_assert_eq!(eta(&f, stat, 4).unwrap() as i64 + eta_bar(&f, stat, 4).unwrap(), total);
    }
}

#[test]
fn worked_values() {
    assert_eq!(maj(&Filling::from_rows(vec![vec![1], vec![2]]).unwrap()), 1);
    let (tau, _, q, m) = golden::gamma_two_row();
    assert_eq!((quinv(&tau), maj(&tau)), (q, m));
    let s2 = QuadrupleSet::new(2).unwrap();
    assert!(quad_membership(s2, 0, 0, 4, 5));
    assert!(quad_membership(s2, 3, 3, 1, 2));
    let (f, set, e_s, e) = golden::eta_tableau();
    assert_eq!(eta_s(&f, set), e_s);
    assert_eq!(eta(&f, EtaStatistic::new(set, false), 8).unwrap(), e);
    let n_conj = "4,4,3".parse::<Partition>().unwrap().conjugate().n_stat() as i64;
    assert_eq!(eta_bar(&f, EtaStatistic::new(set, false), 8).unwrap(), n_conj - 6);
    assert_eq!(eta_bar(&Filling::from_rows(vec![vec![1]]).unwrap(), EtaStatistic::new(set, false), 1).unwrap(), 0);
    assert_eq!(quinv(&Filling::from_rows(vec![vec![2, 2], vec![2, 2]]).unwrap()), 0);
    assert_eq!(inv(&Filling::from_rows(vec![vec![1], vec![3], vec![2]]).unwrap()), 0);
}

#[test]
fn dual_statistics_on_rectangles() {
    for lam in ["2,2", "3,3", "2,2,2"] {
        let lam: Partition = lam.parse().unwrap();
        assert_eq!(rect_ranges(&lam).into_iter().filter(|r| r.width > 0).count(), 1);
        for f in enumerate_fillings(&lam, 3) {
            let flipped = complement_flip(&f, 3).unwrap();
            for set in QuadrupleSet::all() {
                let primal = eta(&f, EtaStatistic::new(set, false), 3).unwrap();
                assert_eq!(eta(&flipped, EtaStatistic::new(set, true), 3).unwrap(), primal);
            }
        }
    }
}

#[test]
fn inv_and_quinv_on_the_square() {
    let mut a = QtPoly::zero();
    let mut b = QtPoly::zero();
    for f in enumerate_fillings(&"2,2".parse().unwrap(), 2) {
        a.add_term(maj(&f) as i64, inv(&f) as i64, 1.into());
        b.add_term(maj(&f) as i64, quinv(&f) as i64, 1.into());
    }
    assert_eq!(a, b);
}

#[test]
fn all_sixteen_on_two_one() {
    let lam: Partition = "2,1".parse().unwrap();
    let sum = |stat: Stat| {
        let mut p = QtPoly::zero();
        for f in enumerate_fillings(&lam, 3) {
            p.add_term(maj(&f) as i64, stat.value(&f, 3).unwrap() as i64, 1.into());
        }
        p
    };
    let base = sum(Stat::Quinv);
    for e in EtaStatistic::all() {
        assert_eq!(sum(Stat::Eta(e)), base, "{e}");
    }
}
