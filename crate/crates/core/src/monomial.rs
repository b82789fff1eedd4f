//! Monomial expansion of `H~_lambda`: the sums `Phi` and `phi`, the
//! exponents `chi_1..chi_4`, systems of `nu` sequences and the four formulas
//! for `P_{lambda mu}`, plus the brute-force sum over all fillings.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canonical::{d_factor, dominant_weight, NuSeq, SSequence};
use crate::diagrams::{enumerate_fillings, Partition};
use crate::error::{Error, Result};
use crate::qt::{MonomialSym, QtPoly};
use crate::statistics::{maj, Mode, Stat};

/// Which `xi` enters the sum: `xi_1` for `Phi`, `xi_0` for `phi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum XiVariant {
    Zero,
    One,
}

/// Arguments of `Phi_{nu|nu~}(xi, z; t)` and `phi_{nu|nu~}(xi, z; t)`.
/// Sequences include the leading `nu^0 = 0`; `z = q^a t^b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PhiArgs {
    pub nu: NuSeq,
    pub nu_tilde: NuSeq,
    pub z: (i64, i64),
    pub xi: XiVariant,
    /// Evaluate at `t^{-1}` (the `z` monomial is left alone).
    pub t_inverse: bool,
}

impl PhiArgs {
    pub fn new(nu: &[usize], nu_tilde: &[usize], z: (i64, i64), xi: XiVariant) -> PhiArgs {
        let pad = |v: &[usize]| std::iter::once(0).chain(v.iter().copied()).collect();
        PhiArgs { nu: pad(nu), nu_tilde: pad(nu_tilde), z, xi, t_inverse: false }
    }

    fn alphabet(&self) -> usize {
        self.nu.len() - 1
    }

    fn validate(&self) -> Result<()> {
        let n = self.alphabet();
        if n == 0 || self.nu_tilde.len() != n + 1 {
            return Err(Error::SizeMismatch("nu and nu~ need the same positive length".into()));
        }
        // a zero `nu` stands for the empty row above a rectangle
        if self.nu[n] != self.nu_tilde[n] && self.nu[n] != 0 {
            return Err(Error::SizeMismatch(format!("nu^N = {} but nu~^N = {}", self.nu[n], self.nu_tilde[n])));
        }
        for v in [&self.nu, &self.nu_tilde] {
            if v[0] != 0 || v.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::SizeMismatch("sequences must be weakly increasing from 0".into()));
            }
        }
        Ok(())
    }
}

/// `xi_gamma(s, nu~)`.
pub fn xi(s: &SSequence, nu_tilde: &NuSeq, gamma: usize) -> i64 {
    let n = s.alphabet as usize;
    let mut total = 0;
    for k in gamma..n {
        for i in gamma..=k {
            total += (s.get(i, k + 1) as i64 - s.get(i, k) as i64) * (nu_tilde[k] as i64 - s.partial(k, i, k) as i64);
        }
    }
    total
}

/// Weakly increasing chains `c_h <= ... <= c_{N-1} <= top`, listed from `c_h`.
fn chains_below(len: usize, top: usize, first_zero: bool) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for pos in (0..len).rev() {
        out = out
            .into_iter()
            .flat_map(|tail: Vec<usize>| {
                let max = tail.first().copied().unwrap_or(top);
                let hi = if first_zero && pos == 0 { 0 } else { max };
                (0..=hi).map(move |v| {
                    let mut c = vec![v];
                    c.extend_from_slice(&tail);
                    c
                })
            })
            .collect();
    }
    out
}

/// Every `s` whose chains `s^h_h <= ... <= s^h_N` end at the value fixed by `nu`.
fn s_chains(nu: &NuSeq, mode: Mode) -> Vec<SSequence> {
    let n = nu.len() - 1;
    let base = SSequence::zero(mode, n as u32);
    let mut out = vec![base.clone()];
    for h in base.first_index()..=base.last_index() {
        let top = match mode {
            Mode::Canonical => nu[h] - nu[h - 1],
            Mode::Dual => nu[h + 1] - nu[h],
        };
        let chains = chains_below(n - h, top, mode == Mode::Dual && h == 0);
        out = out
            .into_iter()
            .flat_map(|s| {
                chains.iter().map(move |c| {
                    let mut s = s.clone();
                    for (off, &v) in c.iter().enumerate() {
                        s.set(h, h + off, v);
                    }
                    s.set(h, n, top);
                    s
                })
            })
            .collect();
    }
    out
}

fn phi_sum(args: &PhiArgs, mode: Mode) -> Result<QtPoly> {
    args.validate()?;
    let n = args.alphabet();
    let gamma = match mode {
        Mode::Canonical => 1,
        Mode::Dual => 0,
    };
    let mut total = QtPoly::zero();
    for s in s_chains(&args.nu, mode) {
        let mut t_part = d_factor(&args.nu_tilde, &s);
        if t_part.is_zero() {
            continue;
        }
        t_part = t_part.shift(0, xi(&s, &args.nu_tilde, gamma));
        if args.t_inverse {
            t_part = t_part.substitute_t_inverse();
        }
        let e: i64 = (gamma..n).map(|k| s.get(k, n) as i64 - s.get(k, k) as i64).sum();
        total += t_part.shift(args.z.0 * e, args.z.1 * e);
    }
    Ok(total)
}

/// `Phi_{nu|nu~}(xi_1, z; t)`, summed over `s^i_k` with `1 <= i <= k <= N`.
pub fn phi_big(args: &PhiArgs) -> Result<QtPoly> {
    if args.xi != XiVariant::One {
        return Err(Error::SizeMismatch("Phi uses xi_1".into()));
    }
    phi_sum(args, Mode::Canonical)
}

/// `phi_{nu|nu~}(xi_0, z; t)`, summed over `s^i_k` with `0 <= i < N`.
pub fn phi_small(args: &PhiArgs) -> Result<QtPoly> {
    if args.xi != XiVariant::Zero {
        return Err(Error::SizeMismatch("phi uses xi_0".into()));
    }
    phi_sum(args, Mode::Dual)
}

/// Sequences `nu_{i,j}` for `1 <= i <= j <= n`, each stored with `nu^0 = 0`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NuSystem {
    pub n: usize,
    pub alphabet: usize,
    pub nu: BTreeMap<(usize, usize), NuSeq>,
}

impl NuSystem {
    /// `nu^k_{i,j}`; zero for `i = j + 1` and for `k = 0`.
    pub fn get(&self, i: usize, j: usize, k: usize) -> usize {
        if i > j {
            0
        } else {
            self.nu[&(i, j)][k]
        }
    }

    pub fn seq(&self, i: usize, j: usize) -> NuSeq {
        if i > j {
            vec![0; self.alphabet + 1]
        } else {
            self.nu[&(i, j)].clone()
        }
    }

    fn diff(&self, i: usize, j: usize, k: usize) -> i64 {
        self.get(i, j, k) as i64 - self.get(i, j, k - 1) as i64
    }
}

impl fmt::Display for NuSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .nu
            .iter()
            .map(|((i, j), v)| {
                let body: Vec<String> = v[1..].iter().map(|x| x.to_string()).collect();
                format!("nu_{i},{j}=({})", body.join(","))
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// All systems subject to `nu^N_{i,j} = lambda_j - lambda_{j+1}`, and
/// `sum_{i<=j} nu^k_{i,j} = mu_1 + ... + mu_k`.
pub fn enumerate_nu_systems(lam: &Partition, mu: &Partition) -> Result<Vec<NuSystem>> {
    if lam.size() != mu.size() {
        return Err(Error::SizeMismatch(format!("|{lam}| != |{mu}|")));
    }
    let n = lam.len();
    let big_n = mu.len();
    let cells: Vec<(usize, usize)> = (1..=n).flat_map(|j| (1..=j).map(move |i| (i, j))).collect();
    let last: Vec<usize> = cells.iter().map(|&(_, j)| lam.part(j) - lam.part(j + 1)).collect();
    let mut levels: Vec<Vec<Vec<usize>>> = vec![vec![vec![0; cells.len()]]];
    let mut target = 0;
    for k in 1..=big_n {
        target += mu.part(k);
        let mut next = Vec::new();
        for prev in &levels {
            let lo = prev.last().unwrap();
            if k == big_n {
                if last.iter().sum::<usize>() == target && lo.iter().zip(&last).all(|(a, b)| a <= b) {
                    let mut p = prev.clone();
                    p.push(last.clone());
                    next.push(p);
                }
                continue;
            }
            let mut cur = Vec::with_capacity(cells.len());
            fill(lo, &last, target, 0, &mut cur, &mut |v| {
                let mut p = prev.clone();
                p.push(v.to_vec());
                next.push(p);
            });
        }
        levels = next;
    }
    Ok(levels
        .into_iter()
        .map(|lv| {
            let nu = cells.iter().enumerate().map(|(c, &cell)| (cell, lv.iter().map(|row| row[c]).collect())).collect();
            NuSystem { n, alphabet: big_n, nu }
        })
        .collect())
}

/// Vectors between `lo` and `hi` entrywise with the given sum.
fn fill(
    lo: &[usize],
    hi: &[usize],
    remaining: usize,
    idx: usize,
    cur: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    if idx == lo.len() {
        if remaining == 0 {
            emit(cur);
        }
        return;
    }
    let room: usize = hi[idx + 1..].iter().sum();
    let floor: usize = lo[idx + 1..].iter().sum();
    for v in lo[idx]..=hi[idx].min(remaining) {
        let rest = remaining - v;
        if rest < floor || rest > room {
            continue;
        }
        cur.push(v);
        fill(lo, hi, rest, idx + 1, cur, emit);
        cur.pop();
    }
}

fn choose2(x: i64) -> i64 {
    x * (x - 1) / 2
}

/// `chi_variant(nu)` for `variant` in `1..=4`.
pub fn chi(sys: &NuSystem, variant: u8) -> Result<i64> {
    let (n, big_n) = (sys.n, sys.alphabet);
    let mut total = 0;
    for k in 1..=big_n {
        for j in 1..=n {
            for i in 1..=j {
                let d = sys.diff(i, j, k);
                if variant <= 2 {
                    total += choose2(d);
                }
                for l in j + 1..=n {
                    let (a, b) = match variant {
                        1 | 3 => (i, i + 1),
                        2 | 4 => (l - j + i, l - j + i + 1),
                        _ => return Err(Error::Parse(format!("no chi_{variant}"))),
                    };
                    let other = if variant <= 2 {
                        sys.get(a, l, k) as i64 - sys.get(b, l, k - 1) as i64
                    } else {
                        sys.get(a, l, k - 1) as i64 - sys.get(b, l, k) as i64
                    };
                    total += d * other;
                }
            }
        }
        if !(1..=4).contains(&variant) {
            return Err(Error::Parse(format!("no chi_{variant}")));
        }
    }
    Ok(total)
}

/// Memoizes `Phi`/`phi` across the cells of many systems.
#[derive(Default)]
pub struct PhiCache {
    map: HashMap<PhiArgs, QtPoly>,
}

impl PhiCache {
    pub fn get(&mut self, args: PhiArgs) -> Result<QtPoly> {
        if let Some(p) = self.map.get(&args) {
            return Ok(p.clone());
        }
        let p = match args.xi {
            XiVariant::One => phi_big(&args)?,
            XiVariant::Zero => phi_small(&args)?,
        };
        self.map.insert(args, p.clone());
        Ok(p)
    }
}

/// The summand of formula `formula` for one system.
pub fn p_summand(lam: &Partition, sys: &NuSystem, formula: u8, cache: &mut PhiCache) -> Result<QtPoly> {
    let n = sys.n;
    let l = |i: usize| lam.part(i) as i64;
    let mut acc = match formula {
        1 => QtPoly::t_pow(chi(sys, 1)?),
        2 => QtPoly::t_pow(chi(sys, 2)?),
        3 | 4 => QtPoly::monomial(1, lam.n_stat() as i64, lam.conjugate().n_stat() as i64 - chi(sys, formula)?),
        _ => return Err(Error::Parse(format!("no formula {formula}; expected 1..4"))),
    };
    for j in 1..=n {
        for i in 1..=j {
            let (ii, jj) = (i as i64, j as i64);
            let z = match formula {
                1 => (jj - ii, l(i) - l(j)),
                2 => (ii, l(j - i + 1) - l(j)),
                3 => (ii - jj, l(j) - l(i)),
                _ => (-ii, l(j) - l(j - i + 1)),
            };
            let xi = if formula <= 2 { XiVariant::One } else { XiVariant::Zero };
            let mut args = PhiArgs { nu: sys.seq(i + 1, j), nu_tilde: sys.seq(i, j), z, xi, t_inverse: formula >= 3 };
            if formula <= 2 {
                args.t_inverse = false;
            }
            let phi = cache.get(args)?;
            acc = &acc * &phi;
            if acc.is_zero() {
                return Ok(acc);
            }
        }
    }
    Ok(acc)
}

/// Every system with its summand under `formula`.
pub fn p_summands(lam: &Partition, mu: &Partition, formula: u8) -> Result<Vec<(NuSystem, QtPoly)>> {
    let mut cache = PhiCache::default();
    enumerate_nu_systems(lam, mu)?
        .into_iter()
        .map(|sys| {
            let p = p_summand(lam, &sys, formula, &mut cache)?;
            Ok((sys, p))
        })
        .collect()
}

/// `P_{lambda mu}(q, t)` by formula `1..=4`.
pub fn p_lambda_mu(lam: &Partition, mu: &Partition, formula: u8) -> Result<QtPoly> {
    let total: QtPoly = p_summands(lam, mu, formula)?.into_iter().map(|(_, p)| p).sum();
    assert!(
        total.is_zero() || total.in_natural_qt(),
        "formula {formula} left negative exponents for {lam}, {mu}: {total}"
    );
    Ok(total)
}

/// `H~_lambda = t^{n(lambda')} sum_mu P_{lambda mu}(q, 1/t) m_mu` over `mu`
/// with at most `max_parts` parts.
pub fn htilde_monomial(lam: &Partition, max_parts: usize, formula: u8) -> Result<MonomialSym> {
    let shift = lam.conjugate().n_stat() as i64;
    let mus: Vec<Partition> = Partition::all_of(lam.size()).into_iter().filter(|m| m.len() <= max_parts).collect();
    let coeffs: Vec<Result<(Partition, QtPoly)>> = mus
        .into_par_iter()
        .map(|mu| {
            let p = p_lambda_mu(lam, &mu, formula)?;
            Ok((mu, p.substitute_t_inverse().shift(0, shift)))
        })
        .collect();
    let mut out = MonomialSym::zero();
    for c in coeffs {
        let (mu, p) = c?;
        out.add_coeff(mu, &p);
    }
    Ok(out)
}

/// `sum x^tau q^maj t^stat` over every filling with entries at most
/// `alphabet`, keeping the monomials `x^mu` that carry `m_mu`.
pub fn htilde_brute_force(lam: &Partition, alphabet: u32, stat: Stat) -> Result<MonomialSym> {
    let terms: Vec<Result<Option<(Partition, i64, i64)>>> = enumerate_fillings(lam, alphabet)
        .par_bridge()
        .map(|tau| {
            let Some(mu) = dominant_weight(&tau, alphabet) else {
                return Ok(None);
            };
            Ok(Some((mu, maj(&tau) as i64, stat.value(&tau, alphabet)? as i64)))
        })
        .collect();
    let mut acc: BTreeMap<Partition, QtPoly> = BTreeMap::new();
    for t in terms {
        if let Some((mu, qe, te)) = t? {
            acc.entry(mu).or_insert_with(QtPoly::zero).add_term(qe, te, 1.into());
        }
    }
    let mut out = MonomialSym::zero();
    for (mu, p) in acc {
        out.add_coeff(mu, &p);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn one_letter_phi_is_one() {
        for nu in 0..3 {
            let a = PhiArgs::new(&[nu], &[nu], (1, 1), XiVariant::One);
            assert_eq!(phi_big(&a).unwrap(), QtPoly::one());
        }
    }

    #[test]
    fn phi_rejects_mismatched_tops() {
        let a = PhiArgs::new(&[1, 1], &[0, 2], (0, 0), XiVariant::One);
        assert!(phi_big(&a).is_err());
        let b = PhiArgs::new(&[0, 2], &[0, 2], (0, 0), XiVariant::One);
        assert!(phi_small(&b).is_err());
    }

    #[test]
    fn system_counts() {
        assert_eq!(enumerate_nu_systems(&p("3,2"), &p("4,1")).unwrap().len(), 3);
        assert_eq!(enumerate_nu_systems(&p("4,2"), &p("4,2")).unwrap().len(), 6);
        assert_eq!(enumerate_nu_systems(&p("1"), &p("1")).unwrap().len(), 1);
        assert!(enumerate_nu_systems(&p("2"), &p("1")).is_err());
    }

    #[test]
    fn single_cell() {
        for f in 1..=4 {
            assert_eq!(p_lambda_mu(&p("1"), &p("1"), f).unwrap(), QtPoly::one());
        }
    }

    #[test]
    fn chi_without_taller_rectangles() {
        for sys in enumerate_nu_systems(&p("3"), &p("2,1")).unwrap() {
            let want: i64 = (1..=2).map(|k| choose2(sys.diff(1, 1, k))).sum();
            assert_eq!(chi(&sys, 1).unwrap(), want);
            assert_eq!(chi(&sys, 3).unwrap(), 0);
            assert_eq!(chi(&sys, 4).unwrap(), 0);
        }
    }
}
