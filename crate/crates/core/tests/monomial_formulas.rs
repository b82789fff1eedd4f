//! The four formulas for `P_{lambda mu}` against each other, the printed
//! worked examples, and the brute-force sum over fillings.

use maclab_core::canonical::compact_htilde;
use maclab_core::monomial::*;
use maclab_core::statistics::admissible_pairs;
use maclab_core::{Partition, QtPoly, Stat};

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn t(e: i64) -> QtPoly {
    QtPoly::t_pow(e)
}

fn q(e: i64) -> QtPoly {
    QtPoly::q_pow(e)
}

fn sorted(mut v: Vec<QtPoly>) -> Vec<String> {
    let mut out: Vec<String> = v.drain(..).map(|x| x.to_string()).collect();
    out.sort();
    out
}

#[test]
fn three_by_two_over_four_one_summands() {
    let one_plus_t = QtPoly::one() + t(1);
    let f1 = vec![t(2), &(&t(3) * &q(1)) * &one_plus_t, &t(3) * &one_plus_t];
    let f2 = vec![t(4), &(&t(3) * &q(1)) * &one_plus_t, &t(2) * &one_plus_t];
    let lam = p("3,2");
    let mu = p("4,1");
    for (formula, want) in [(1, f1), (2, f2)] {
        let got: Vec<QtPoly> = p_summands(&lam, &mu, formula).unwrap().into_iter().map(|(_, x)| x).collect();
        assert_eq!(sorted(got), sorted(want.clone()), "formula {formula}");
    }
}

#[test]
fn four_two_summands_at_inverted_variables() {
    let inv = |x: &QtPoly| x.substitute_q_inverse().substitute_t_inverse();
    let u = |e: i64| t(-e);
    let one_plus = |x: QtPoly| QtPoly::one() + x;
    let a = one_plus(u(1));
    let f3 = vec![
        u(3),
        &(&u(4) * &a) * &a,
        &(&(&q(-1) * &u(4)) * &a) * &a,
        &q(-2) * &u(7),
        u(7),
        &(&u(3) * &one_plus(&q(-1) * &u(3))) * &a,
    ];
    let f4 = vec![
        u(3),
        &(&u(3) * &a) * &a,
        &(&(&q(-1) * &u(4)) * &a) * &a,
        &q(-2) * &u(7),
        u(7),
        &(&u(5) * &one_plus(&q(-1) * &u(1))) * &a,
    ];
    let lam = p("4,2");
    for (formula, want) in [(3, f3), (4, f4)] {
        let got: Vec<QtPoly> = p_summands(&lam, &lam, formula).unwrap().iter().map(|(_, x)| inv(x)).collect();
        assert_eq!(sorted(got), sorted(want), "formula {formula}");
    }
}

#[test]
fn four_formulas_agree() {
    for n in 1..=6 {
        for lam in Partition::all_of(n) {
            for mu in Partition::all_of(n) {
                let p1 = p_lambda_mu(&lam, &mu, 1).unwrap();
                for f in 2..=4 {
                    assert_eq!(p_lambda_mu(&lam, &mu, f).unwrap(), p1, "{lam} {mu} formula {f}");
                }
            }
        }
    }
}

#[test]
fn monomial_expansion_matches_brute_force() {
    for n in 1..=4 {
        for lam in Partition::all_of(n) {
            let brute = htilde_brute_force(&lam, n as u32, Stat::Inv).unwrap();
            for f in 1..=4 {
                assert_eq!(htilde_monomial(&lam, n, f).unwrap(), brute, "{lam} formula {f}");
            }
        }
    }
}

#[test]
fn compact_sums_match_brute_force() {
    for (s, n) in [("2,1", 3), ("2,2", 4), ("3,2", 3), ("3,3", 3), ("2,2,1", 3)] {
        let lam = p(s);
        for (mode, stat) in admissible_pairs() {
            let brute = htilde_brute_force(&lam, n, Stat::Eta(stat)).unwrap();
            assert_eq!(compact_htilde(&lam, n, mode, stat).unwrap(), brute, "{lam} {mode} {stat}");
        }
        assert_eq!(htilde_brute_force(&lam, n, Stat::Quinv).unwrap(), htilde_brute_force(&lam, n, Stat::Inv).unwrap());
    }
}

#[test]
fn phi_factors_of_a_three_by_two_summand() {
    let one = PhiArgs::new(&[0, 0], &[1, 1], (0, 0), XiVariant::One);
    let mid = PhiArgs::new(&[2, 2], &[1, 2], (1, 1), XiVariant::One);
    let top = PhiArgs::new(&[0, 0], &[2, 2], (0, 0), XiVariant::One);
    let product = &(&phi_big(&one).unwrap() * &phi_big(&mid).unwrap()) * &phi_big(&top).unwrap();
    let summands: Vec<QtPoly> = p_summands(&p("3,2"), &p("4,1"), 1).unwrap().into_iter().map(|(_, s)| s).collect();
    let want = &(&t(2) * &QtPoly::monomial(1, 1, 1)) * &(&t(0) + &t(1));
    assert!(summands.contains(&want), "{summands:?}");
    assert!(summands.iter().any(|s| s == &(&t(2) * &product)), "{product}");
}
