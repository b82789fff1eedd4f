//! Worked tableaux and printed values that the `example` command and the
//! acceptance suite recompute.

use crate::diagrams::{Filling, Partition};
use crate::qt::QtPoly;
use crate::statistics::QuadrupleSet;

/// Names of the worked examples. The second name of each entry is a short alias.
pub const EXAMPLES: &[(&str, &str)] = &[
    ("eta-on-a-three-row-tableau", "sec3"),
    ("gamma-two-row", "sec5"),
    ("canonicalize-three-rows", "sec6"),
    ("formulas-one-two-at-3-2", "1.5"),
    ("formulas-three-four-at-4-2", "1.6"),
];

/// Resolves a name or alias to the primary name.
pub fn resolve_example(id: &str) -> Option<&'static str> {
    EXAMPLES.iter().find(|(name, alias)| *name == id || *alias == id).map(|(name, _)| *name)
}

fn t(e: i64) -> QtPoly {
    QtPoly::t_pow(e)
}

fn q(e: i64) -> QtPoly {
    QtPoly::q_pow(e)
}

fn one_plus(x: QtPoly) -> QtPoly {
    QtPoly::one() + x
}

/// Tableau of shape `(4,4,3)` with `eta_S = 4` and `eta = 6` for `S2`.
pub fn eta_tableau() -> (Filling, QuadrupleSet, usize, usize) {
    let f = Filling::parse_text("5 4 5\n3 6 3 1\n1 7 2 8").expect("valid tableau");
    (f, QuadrupleSet::new(2).expect("valid set"), 4, 6)
}

/// Two-row tableau, its image under `gamma` for `S2`, and the common
/// `quinv`/`eta` value and `maj`.
pub fn gamma_two_row() -> (Filling, Filling, usize, usize) {
    let tau = Filling::from_rows(vec![vec![3, 5, 1, 3, 7, 6, 5, 1, 4, 2, 6], vec![2, 3, 2, 4, 4, 5, 4, 5, 6, 8, 7]])
        .expect("valid tableau");
    let image = Filling::from_rows(vec![vec![3, 2, 5, 1, 7, 5, 6, 1, 4, 3, 6], vec![2, 3, 2, 4, 4, 5, 4, 5, 6, 8, 7]])
        .expect("valid tableau");
    (tau, image, 72, 6)
}

/// A `(5,5,5)` filling and its canonical form.
pub fn canonicalize_three_rows() -> (Filling, Filling) {
    let tau = Filling::from_rows_top_to_bottom(vec![vec![5, 1, 3, 2, 1], vec![3, 3, 2, 4, 7], vec![3, 8, 1, 2, 2]])
        .expect("valid tableau");
    let sigma = Filling::from_rows_top_to_bottom(vec![vec![5, 3, 2, 1, 1], vec![3, 2, 7, 4, 3], vec![8, 1, 2, 2, 3]])
        .expect("valid tableau");
    (tau, sigma)
}

/// Columns and rows of the `delta` moves that canonicalize
/// [`canonicalize_three_rows`], in the order applied.
pub fn canonicalize_three_rows_moves() -> Vec<(usize, usize)> {
    vec![(2, 3), (3, 3), (4, 2), (3, 2), (4, 1), (3, 1), (2, 1), (1, 1), (2, 1), (3, 1), (4, 1)]
}

/// A canonical tableau of shape `(11,11,11)`, rows top first.
pub fn canonical_tableau() -> Filling {
    Filling::from_rows_top_to_bottom(vec![
        vec![9, 9, 8, 8, 8, 5, 5, 5, 5, 3, 3],
        vec![4, 3, 6, 3, 9, 4, 3, 2, 9, 2, 6],
        vec![2, 2, 8, 7, 8, 1, 6, 4, 6, 2, 7],
    ])
    .expect("valid tableau")
}

/// A dual canonical tableau of shape `(11,11,11)`.
pub fn dual_canonical_tableau() -> Filling {
    Filling::from_rows_top_to_bottom(vec![
        vec![9, 9, 8, 8, 8, 5, 5, 5, 5, 3, 3],
        vec![6, 4, 4, 3, 9, 3, 3, 2, 9, 2, 6],
        vec![8, 2, 2, 1, 8, 7, 6, 4, 6, 2, 7],
    ])
    .expect("valid tableau")
}

/// A sorted tableau that is not canonical: its bottom neutral block under
/// the 3's is `(2,5,1)`.
pub fn sorted_not_canonical() -> Filling {
    Filling::from_rows_top_to_bottom(vec![
        vec![5, 5, 5, 5, 3, 3, 3],
        vec![4, 4, 2, 2, 2, 1, 4],
        vec![2, 5, 1, 3, 5, 2, 1],
    ])
    .expect("valid tableau")
}

/// `lambda`, `mu` and the summands of `P_{lambda mu}(q, t)` under the first
/// and second formula.
pub fn summands_3_2() -> (Partition, Partition, Vec<QtPoly>, Vec<QtPoly>) {
    let a = one_plus(t(1));
    let first = vec![t(2), &(&t(3) * &q(1)) * &a, &t(3) * &a];
    let second = vec![t(4), &(&t(3) * &q(1)) * &a, &t(2) * &a];
    ("3,2".parse().unwrap(), "4,1".parse().unwrap(), first, second)
}

/// The three systems for `lambda = (3,2)`, `mu = (4,1)`, in printed order.
pub fn systems_3_2() -> Vec<&'static str> {
    vec![
        "nu_1,1=(0,1) nu_1,2=(2,2) nu_2,2=(2,2)",
        "nu_1,1=(1,1) nu_1,2=(1,2) nu_2,2=(2,2)",
        "nu_1,1=(1,1) nu_1,2=(2,2) nu_2,2=(1,2)",
    ]
}

/// The six systems for `lambda = mu = (4,2)`.
pub fn systems_4_2() -> Vec<&'static str> {
    vec![
        "nu_1,1=(0,2) nu_1,2=(2,2) nu_2,2=(2,2)",
        "nu_1,1=(1,2) nu_1,2=(1,2) nu_2,2=(2,2)",
        "nu_1,1=(1,2) nu_1,2=(2,2) nu_2,2=(1,2)",
        "nu_1,1=(2,2) nu_1,2=(2,2) nu_2,2=(0,2)",
        "nu_1,1=(2,2) nu_1,2=(0,2) nu_2,2=(2,2)",
        "nu_1,1=(2,2) nu_1,2=(1,2) nu_2,2=(1,2)",
    ]
}

/// `lambda = mu = (4,2)` and the summands of `P_{lambda mu}(1/q, 1/t)` under
/// the third and fourth formula.
pub fn summands_4_2() -> (Partition, Vec<QtPoly>, Vec<QtPoly>) {
    let u = |e: i64| t(-e);
    let a = one_plus(u(1));
    let aa = &a * &a;
    let third = vec![
        u(3),
        &u(4) * &aa,
        &(&q(-1) * &u(4)) * &aa,
        &q(-2) * &u(7),
        u(7),
        &(&u(3) * &one_plus(&q(-1) * &u(3))) * &a,
    ];
    let fourth = vec![
        u(3),
        &u(3) * &aa,
        &(&q(-1) * &u(4)) * &aa,
        &q(-2) * &u(7),
        u(7),
        &(&u(5) * &one_plus(&q(-1) * &u(1))) * &a,
    ];
    ("4,2".parse().unwrap(), third, fourth)
}

/// `n(lambda)` values: `(4,2) -> 2` and `(2,2,1,1) -> 7`.
pub fn n_values() -> Vec<(Partition, usize)> {
    vec![("4,2".parse().unwrap(), 2), ("2,2,1,1".parse().unwrap(), 7)]
}
