use maclab_core::diagrams::*;
use maclab_core::golden;
use maclab_core::{t_multinomial, Filling, Partition};
use num_bigint::BigInt;
use proptest::prelude::*;

fn partition() -> impl Strategy<Value = Partition> {
    proptest::collection::vec(1usize..7, 0..6).prop_map(|mut p| {
        p.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(p).unwrap()
    })
}

fn filling() -> impl Strategy<Value = (Filling, u32)> {
    (proptest::collection::vec(1usize..5, 1..4), 1u32..6).prop_flat_map(|(mut parts, n)| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let lam = Partition::new(parts).unwrap();
        let cells = lam.size();
        proptest::collection::vec(1..=n, cells).prop_map(move |entries| {
            let mut rows = Vec::new();
            let mut it = entries.into_iter();
            for &p in lam.parts() {
                rows.push(it.by_ref().take(p).collect());
            }
            (Filling::from_rows(rows).unwrap(), n)
        })
    })
}

fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(lam in partition()) {
        prop_assert_eq!(lam.conjugate().conjugate(), lam.clone());
        prop_assert_eq!(lam.conjugate().size(), lam.size());
    }

    #[test]
    fn n_of_the_conjugate(lam in partition()) {
        let direct: usize = lam.parts().iter().map(|&p| binom2(p)).sum();
        prop_assert_eq!(lam.conjugate().n_stat(), direct);
    }

    #[test]
    fn complement_flip_is_an_involution((f, n) in filling()) {
        let g = complement_flip(&f, n).unwrap();
        prop_assert_eq!(complement_flip(&g, n).unwrap(), f);
    }

    #[test]
    fn row_class_sizes((f, _) in filling()) {
        let class = row_equivalence_class(&f);
        let mut expected = BigInt::from(1);
        for row in f.rows() {
            let mut counts = std::collections::BTreeMap::new();
            for &x in row {
                *counts.entry(x).or_insert(0i64) += 1;
            }
            let parts: Vec<i64> = counts.into_values().collect();
            expected *= t_multinomial(row.len() as i64, &parts).unwrap().eval_one();
        }
        prop_assert_eq!(BigInt::from(class.len()), expected);
    }

    #[test]
    fn rectangles_reassemble((f, _) in filling()) {
        prop_assert_eq!(rect_decompose(&f).concat(f.shape()), f);
    }
}

#[test]
fn conjugates_and_n() {
    let c = |s: &str| s.parse::<Partition>().unwrap().conjugate().to_string();
    assert_eq!(c("3,2"), "2,2,1");
    assert_eq!(c("4,2"), "2,2,1,1");
    assert_eq!(c("1"), "1");
    assert_eq!("4,2".parse::<Partition>().unwrap().n_stat(), 2);
    assert_eq!("4,2".parse::<Partition>().unwrap().conjugate().n_stat(), 7);
    assert_eq!("1".parse::<Partition>().unwrap().n_stat(), 0);
}

#[test]
fn filling_counts() {
    let count = |s: &str, n| enumerate_fillings(&s.parse().unwrap(), n).count();
    assert_eq!(count("1", 2), 2);
    assert_eq!(count("2", 2), 4);
    assert_eq!(count("2,2", 3), 81);
    let ones: Vec<Filling> = enumerate_fillings(&"1".parse().unwrap(), 2).collect();
    assert_eq!(ones[0].get(1, 1), 1);
    assert_eq!(ones[1].get(1, 1), 2);
}

#[test]
fn row_classes() {
    let column = Filling::from_rows(vec![vec![1], vec![2], vec![3]]).unwrap();
    assert_eq!(row_equivalence_class(&column).len(), 1);
    assert_eq!(row_equivalence_class(&Filling::from_rows(vec![vec![1, 2]]).unwrap()).len(), 2);
    let square = Filling::from_rows(vec![vec![1, 2], vec![1, 1]]).unwrap();
    assert_eq!(row_equivalence_class(&square).len(), 2);
}

#[test]
fn rectangles_of_shapes() {
    let widths = |s: &str| -> Vec<(usize, usize)> {
        rect_ranges(&s.parse().unwrap()).into_iter().filter(|r| r.width > 0).map(|r| (r.height, r.width)).collect()
    };
    assert_eq!(widths("3,3"), vec![(2, 3)]);
    assert_eq!(widths("3,2"), vec![(2, 2), (1, 1)]);
    assert_eq!(widths("4,4,3"), vec![(3, 3), (2, 1)]);
}

#[test]
fn complement_flip_of_small_fillings() {
    let one = Filling::from_rows(vec![vec![1]]).unwrap();
    assert_eq!(complement_flip(&one, 1).unwrap(), one);
    let column = Filling::from_rows(vec![vec![2], vec![5]]).unwrap();
    assert_eq!(complement_flip(&column, 6).unwrap(), Filling::from_rows(vec![vec![2], vec![5]]).unwrap());
    let column = Filling::from_rows(vec![vec![1], vec![3]]).unwrap();
    assert_eq!(complement_flip(&column, 4).unwrap(), Filling::from_rows(vec![vec![2], vec![4]]).unwrap());
    let (f, _, _, _) = golden::eta_tableau();
    assert_eq!(complement_flip(&complement_flip(&f, 8).unwrap(), 8).unwrap(), f);
}
