//! Canonical and dual canonical tableaux, their families `G(sigma)`, the
//! `(nu, s)` encoding of canonical rectangles and the coefficients `d`.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::diagrams::{complement_flip, distinct_permutations, rect_ranges, Filling, Partition};
use crate::error::{Error, Result};
use crate::flips::{
    act_row_mut, apply_permutation, perm_inversions, shortest_permutation, BijectionTrace, Op, OpKind, ReducedWord,
};
use crate::qt::{t_binomial, t_multinomial, MonomialSym, QtPoly};
use crate::statistics::{eta, is_admissible, maj, EtaStatistic, Mode};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BlockKind {
    Descent,
    NonDescent,
    Neutral,
}

/// Entries of one row grouped by how they sit under the row above.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub kind: BlockKind,
    /// `(row, column)` of every entry, left to right.
    pub positions: Vec<(usize, usize)>,
    pub entries: Vec<u32>,
    pub upper_neighbor: Vec<u32>,
}

fn upper(sigma: &Filling, r: usize, c: usize) -> u32 {
    sigma.get(r + 1, c)
}

/// The non-descent block, the descent block and the neutral blocks of row
/// `r`, in that order; empty blocks are left out.
pub fn extract_blocks(sigma: &Filling, r: usize) -> Vec<Block> {
    let cols = 1..=sigma.shape().part(r);
    let make = |kind, cs: Vec<usize>| Block {
        kind,
        positions: cs.iter().map(|&c| (r, c)).collect(),
        entries: cs.iter().map(|&c| sigma.get(r, c)).collect(),
        upper_neighbor: cs.iter().map(|&c| upper(sigma, r, c)).collect(),
    };
    let mut out = Vec::new();
    let nd: Vec<usize> = cols.clone().filter(|&c| upper(sigma, r, c) <= sigma.get(r, c)).collect();
    let des: Vec<usize> = cols.clone().filter(|&c| upper(sigma, r, c) > sigma.get(r, c)).collect();
    if !nd.is_empty() {
        out.push(make(BlockKind::NonDescent, nd));
    }
    if !des.is_empty() {
        out.push(make(BlockKind::Descent, des));
    }
    let mut seen = BTreeSet::new();
    for c in cols.clone() {
        let a = upper(sigma, r, c);
        if seen.insert(a) {
            let same: Vec<usize> = cols.clone().filter(|&d| upper(sigma, r, d) == a).collect();
            out.push(make(BlockKind::Neutral, same));
        }
    }
    out
}

fn neutral_upper(p: &Block) -> Result<u32> {
    match (p.kind, p.upper_neighbor.first()) {
        (BlockKind::Neutral, Some(&a)) => Ok(a),
        (BlockKind::Neutral, None) => Ok(0),
        _ => Err(Error::InvalidFilling("alpha needs a neutral block".into())),
    }
}

/// Entries at least the upper neighbour are replaced by it.
pub fn alpha(p: &Block) -> Result<Vec<u32>> {
    let a = neutral_upper(p)?;
    Ok(p.entries.iter().map(|&x| if x >= a { a } else { x }).collect())
}

/// Entries below the upper neighbour are replaced by it.
pub fn alpha_bar(p: &Block) -> Result<Vec<u32>> {
    let a = neutral_upper(p)?;
    Ok(p.entries.iter().map(|&x| if x < a { a } else { x }).collect())
}

/// Conditions (I) and (II) between a row `p` and the row `a` above it.
pub fn row_pair_ok(a: &[u32], p: &[u32], mode: Mode) -> bool {
    let k = a.len();
    for i in 0..k {
        for j in i + 1..k {
            let (b, c) = (p[i], p[j]);
            if a[i] == a[j] {
                let x = a[i];
                if !(x > b && b >= c || c >= x && x > b || b >= c && c >= x) {
                    return false;
                }
            }
            let watched = |n: usize| match mode {
                Mode::Canonical => a[n] <= p[n],
                Mode::Dual => a[n] > p[n],
            };
            if watched(i) && watched(j) {
                let ok = if a[i] >= a[j] { b >= c } else { b <= c };
                if !ok {
                    return false;
                }
            }
        }
    }
    true
}

/// The unique canonical rearrangement of `p` under `a` reachable inside the
/// family: every equal-upper group keeps its descent multiset (canonical)
/// or non-descent multiset (dual) and its split into descents and
/// non-descents; the remaining entries are redistributed over their slots.
pub fn canonical_row(a: &[u32], p: &[u32], mode: Mode) -> Vec<u32> {
    let k = a.len();
    let mut out = vec![0; k];
    let mut groups: Vec<u32> = a.to_vec();
    groups.sort_unstable_by(|x, y| y.cmp(x));
    groups.dedup();
    // slots shared across groups, with their upper values
    let mut shared_slots: Vec<usize> = Vec::new();
    let mut shared_vals: Vec<u32> = Vec::new();
    for &g in &groups {
        let pos: Vec<usize> = (0..k).filter(|&i| a[i] == g).collect();
        let mut des: Vec<u32> = pos.iter().map(|&i| p[i]).filter(|&x| x < g).collect();
        let mut nd: Vec<u32> = pos.iter().map(|&i| p[i]).filter(|&x| x >= g).collect();
        des.sort_unstable_by(|x, y| y.cmp(x));
        nd.sort_unstable_by(|x, y| y.cmp(x));
        let (d, n) = (des.len(), nd.len());
        match mode {
            Mode::Canonical => {
                for (slot, &x) in pos[..d].iter().zip(&des) {
                    out[*slot] = x;
                }
                shared_slots.extend_from_slice(&pos[d..d + n]);
                shared_vals.extend(nd);
            }
            Mode::Dual => {
                for (slot, &x) in pos[d..].iter().zip(&nd) {
                    out[*slot] = x;
                }
                shared_slots.extend_from_slice(&pos[..d]);
                shared_vals.extend(des);
            }
        }
    }
    // groups were visited with decreasing upper value, slots left to right
    shared_vals.sort_unstable_by(|x, y| y.cmp(x));
    for (slot, x) in shared_slots.into_iter().zip(shared_vals) {
        out[slot] = x;
    }
    out
}

fn rect_is_canonical(sigma: &Filling, mode: Mode) -> bool {
    (1..=sigma.num_rows()).all(|r| {
        let a: Vec<u32> = (1..=sigma.width()).map(|c| upper(sigma, r, c)).collect();
        row_pair_ok(&a, sigma.row(r), mode)
    })
}

fn rects(sigma: &Filling) -> impl Iterator<Item = (usize, Filling)> + '_ {
    rect_ranges(sigma.shape())
        .into_iter()
        .filter(|r| r.width > 0)
        .map(move |r| (r.start, sigma.block(1, r.height, r.start, r.width)))
}

pub fn is_canonical_in(sigma: &Filling, mode: Mode) -> bool {
    rects(sigma).all(|(_, f)| rect_is_canonical(&f, mode))
}

pub fn is_canonical(sigma: &Filling) -> bool {
    is_canonical_in(sigma, Mode::Canonical)
}

pub fn is_dual_canonical(sigma: &Filling) -> bool {
    is_canonical_in(sigma, Mode::Dual)
}

fn require_canonical(sigma: &Filling, mode: Mode) -> Result<()> {
    if is_canonical_in(sigma, mode) {
        Ok(())
    } else {
        Err(Error::NotCanonical(match mode {
            Mode::Canonical => "filling is not canonical",
            Mode::Dual => "filling is not dual canonical",
        }))
    }
}

/// Sorts every row top-down into its canonical form with `delta` moves.
pub fn canonicalize(tau: &Filling, mode: Mode) -> (Filling, BijectionTrace) {
    let mut trace = BijectionTrace::new(tau.clone());
    for rect in rect_ranges(tau.shape()).into_iter().filter(|r| r.width > 0) {
        for r in (1..=rect.height).rev() {
            let cols = rect.start..rect.start + rect.width;
            let cur = &trace.output;
            let a: Vec<u32> = cols.clone().map(|c| upper(cur, r, c)).collect();
            let p: Vec<u32> = cols.clone().map(|c| cur.get(r, c)).collect();
            let target = canonical_row(&a, &p, mode);
            let perm = shortest_permutation(&p, &target).expect("rearrangement");
            for l in ReducedWord::from_permutation(&perm).letters {
                trace.push(Op { kind: OpKind::Delta, col: rect.start - 1 + l, row: r });
            }
        }
    }
    (trace.output.clone(), trace)
}

fn rect_family(sigma: &Filling, mode: Mode) -> Vec<Filling> {
    let mut family = vec![sigma.clone()];
    for r in 1..=sigma.num_rows() {
        let a: Vec<u32> = (1..=sigma.width()).map(|c| upper(sigma, r, c)).collect();
        let p = sigma.row(r).to_vec();
        let words: Vec<Vec<u32>> =
            distinct_permutations(&p).into_iter().filter(|w| canonical_row(&a, w, mode) == p).collect();
        let mut next = Vec::with_capacity(family.len() * words.len());
        for tau in &family {
            for w in &words {
                let mut t = tau.clone();
                act_row_mut(&mut t, r, 1, w).expect("rearrangement");
                next.push(t);
            }
        }
        family = next;
    }
    family
}

/// The family `G(sigma)`: every filling that canonicalizes to `sigma`.
pub fn generate_family(sigma: &Filling, mode: Mode) -> Result<Vec<Filling>> {
    require_canonical(sigma, mode)?;
    let mut out = vec![sigma.clone()];
    for (start, rect) in rects(sigma) {
        let fam = rect_family(&rect, mode);
        let mut next = Vec::with_capacity(out.len() * fam.len());
        for base in &out {
            for f in &fam {
                let mut t = base.clone();
                t.paste(f, 1, start);
                next.push(t);
            }
        }
        out = next;
    }
    Ok(out)
}

/// Cumulative entry counts of one row, `nu[0] = 0`.
pub type NuSeq = Vec<usize>;

/// The chains `s^h_k` of one pair of rows, stored by upper index `h` and
/// lower cut `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SSequence {
    pub mode: Mode,
    pub alphabet: u32,
    values: Vec<Vec<usize>>,
}

impl SSequence {
    pub fn zero(mode: Mode, alphabet: u32) -> Self {
        let n = alphabet as usize;
        SSequence { mode, alphabet, values: vec![vec![0; n + 1]; n + 1] }
    }

    /// Smallest upper index: 1 for canonical, 0 for dual.
    pub fn first_index(&self) -> usize {
        match self.mode {
            Mode::Canonical => 1,
            Mode::Dual => 0,
        }
    }

    /// Last upper index with a chain.
    pub fn last_index(&self) -> usize {
        match self.mode {
            Mode::Canonical => self.alphabet as usize,
            Mode::Dual => self.alphabet as usize - 1,
        }
    }

    /// `s^h_k`; zero outside `h <= k <= N`.
    pub fn get(&self, h: usize, k: usize) -> usize {
        if h > k || k > self.alphabet as usize || h < self.first_index() || h > self.last_index() {
            return 0;
        }
        self.values[h][k]
    }

    pub fn set(&mut self, h: usize, k: usize, v: usize) {
        self.values[h][k] = v;
    }

    /// `s^{lo..=hi}_k`, summed over upper indices.
    pub fn partial(&self, k: usize, lo: usize, hi: usize) -> usize {
        (lo..=hi).map(|h| self.get(h, k)).sum()
    }

    /// Upper value belonging to index `h`.
    pub fn upper_value(&self, h: usize) -> u32 {
        match self.mode {
            Mode::Canonical => self.alphabet + 1 - h as u32,
            Mode::Dual => h as u32 + 1,
        }
    }

    /// Lower values counted by `s^h_k`.
    fn counts(&self, k: usize, u: u32) -> bool {
        match self.mode {
            Mode::Canonical => u >= self.alphabet + 1 - k as u32,
            Mode::Dual => u <= k as u32,
        }
    }

    /// Chains are weakly increasing from `s^h_h` to `s^h_N`.
    pub fn is_monotone(&self) -> bool {
        let n = self.alphabet as usize;
        (self.first_index()..=self.last_index()).all(|h| (h..n).all(|k| self.get(h, k) <= self.get(h, k + 1)))
    }
}

/// `nu` of a row: canonical counts entries `>= N + 1 - k`, dual entries `<= k`.
pub fn nu_of_row(row: &[u32], alphabet: u32, mode: Mode) -> NuSeq {
    (0..=alphabet as usize)
        .map(|k| match mode {
            Mode::Canonical => row.iter().filter(|&&x| x as usize + k > alphabet as usize).count(),
            Mode::Dual => row.iter().filter(|&&x| x as usize <= k).count(),
        })
        .collect()
}

/// `s` of the pair of rows `a` over `p`.
pub fn s_of_pair(a: &[u32], p: &[u32], alphabet: u32, mode: Mode) -> SSequence {
    let mut s = SSequence::zero(mode, alphabet);
    for h in s.first_index()..=s.last_index() {
        let z = s.upper_value(h);
        for k in h..=alphabet as usize {
            let n = a.iter().zip(p).filter(|&(&x, &u)| x == z && s.counts(k, u)).count();
            s.set(h, k, n);
        }
    }
    s
}

fn check_alphabet(sigma: &Filling, alphabet: u32) -> Result<()> {
    let max = sigma.max_entry();
    if max > alphabet {
        return Err(Error::AlphabetTooSmall { alphabet, max });
    }
    Ok(())
}

/// `nu` of every row (bottom first) and `s` of every row with the one above
/// it; the top row sits under zeros, so its `s` vanishes.
pub fn nu_s_from_canonical(sigma: &Filling, alphabet: u32, mode: Mode) -> Result<(Vec<NuSeq>, Vec<SSequence>)> {
    let h = sigma.num_rows();
    if sigma.shape().parts().iter().any(|&p| p != sigma.width()) {
        return Err(Error::InvalidFilling("expected a rectangle".into()));
    }
    check_alphabet(sigma, alphabet)?;
    require_canonical(sigma, mode)?;
    let nu = (1..=h).map(|r| nu_of_row(sigma.row(r), alphabet, mode)).collect();
    let s = (1..=h)
        .map(|r| {
            if r == h {
                SSequence::zero(mode, alphabet)
            } else {
                s_of_pair(sigma.row(r + 1), sigma.row(r), alphabet, mode)
            }
        })
        .collect();
    Ok((nu, s))
}

fn row_counts(nu: &NuSeq, alphabet: u32, mode: Mode) -> Result<Vec<usize>> {
    let mut counts = vec![0; alphabet as usize + 1];
    for k in 1..=alphabet as usize {
        if nu[k] < nu[k - 1] {
            return Err(Error::Infeasible("nu must be weakly increasing".into()));
        }
        let v = match mode {
            Mode::Canonical => alphabet as usize + 1 - k,
            Mode::Dual => k,
        };
        counts[v] = nu[k] - nu[k - 1];
    }
    Ok(counts)
}

fn take(counts: &mut [usize], v: u32, n: usize) -> Result<()> {
    let slot = &mut counts[v as usize];
    if *slot < n {
        return Err(Error::Infeasible(format!("row has too few entries {v}")));
    }
    *slot -= n;
    Ok(())
}

fn expand_desc(counts: &[usize]) -> Vec<u32> {
    let mut out = Vec::new();
    for v in (1..counts.len()).rev() {
        out.extend(std::iter::repeat_n(v as u32, counts[v]));
    }
    out
}

fn build_row(a: &[u32], nu: &NuSeq, s: Option<&SSequence>, alphabet: u32, mode: Mode) -> Result<Vec<u32>> {
    let k = a.len();
    let mut counts = row_counts(nu, alphabet, mode)?;
    if counts.iter().sum::<usize>() != k {
        return Err(Error::Infeasible("row length does not match nu".into()));
    }
    let Some(s) = s else {
        return Ok(expand_desc(&counts));
    };
    if !s.is_monotone() {
        return Err(Error::Infeasible("s chains must be weakly increasing".into()));
    }
    // per upper value: entries placed in the first round, and the number of open slots
    let mut out = vec![0u32; k];
    let mut open: Vec<usize> = Vec::new();
    let mut groups: Vec<u32> = a.to_vec();
    groups.sort_unstable_by(|x, y| y.cmp(x));
    groups.dedup();
    let n = alphabet as usize;
    for h in s.first_index()..=s.last_index() {
        let z = s.upper_value(h);
        let pos: Vec<usize> = (0..k).filter(|&i| a[i] == z).collect();
        if s.get(h, n) != pos.len() {
            return Err(Error::Infeasible(format!("s does not match the {z}'s above")));
        }
    }
    for &z in &groups {
        if z == 0 {
            return Err(Error::Infeasible("zero upper entry inside a rectangle".into()));
        }
        let h = match mode {
            Mode::Canonical => n + 1 - z as usize,
            Mode::Dual => z as usize - 1,
        };
        let pos: Vec<usize> = (0..k).filter(|&i| a[i] == z).collect();
        let mut fixed: Vec<u32> = Vec::new();
        for kk in h + 1..=n {
            let m = s.get(h, kk) - s.get(h, kk - 1);
            let v = match mode {
                Mode::Canonical => (n + 1 - kk) as u32,
                Mode::Dual => kk as u32,
            };
            take(&mut counts, v, m)?;
            fixed.extend(std::iter::repeat_n(v, m));
        }
        fixed.sort_unstable_by(|x, y| y.cmp(x));
        let free = s.get(h, h);
        match mode {
            Mode::Canonical => {
                for (slot, &x) in pos[..fixed.len()].iter().zip(&fixed) {
                    out[*slot] = x;
                }
                open.extend_from_slice(&pos[fixed.len()..fixed.len() + free]);
            }
            Mode::Dual => {
                for (slot, &x) in pos[free..].iter().zip(&fixed) {
                    out[*slot] = x;
                }
                open.extend_from_slice(&pos[..free]);
            }
        }
    }
    let rest = expand_desc(&counts);
    if rest.len() != open.len() {
        return Err(Error::Infeasible("second round does not fill the row".into()));
    }
    for (slot, x) in open.into_iter().zip(rest) {
        let ok = match mode {
            Mode::Canonical => x >= a[slot],
            Mode::Dual => x < a[slot],
        };
        if !ok {
            return Err(Error::Infeasible(format!("entry {x} cannot sit under {}", a[slot])));
        }
        out[slot] = x;
    }
    Ok(out)
}

/// Rebuilds a canonical rectangle from its `nu` rows (bottom first) and the
/// `s` of each row with the row above.
pub fn sigma_from_nu_s(nu: &[NuSeq], s: &[SSequence], alphabet: u32, mode: Mode) -> Result<Filling> {
    let h = nu.len();
    if h == 0 || s.len() != h {
        return Err(Error::SizeMismatch(format!("{h} nu rows against {} s sequences", s.len())));
    }
    if nu.iter().any(|v| v.len() != alphabet as usize + 1) {
        return Err(Error::SizeMismatch("nu sequences need N + 1 entries".into()));
    }
    let width = nu[h - 1][alphabet as usize];
    let mut rows = vec![Vec::new(); h];
    rows[h - 1] = build_row(&vec![0; width], &nu[h - 1], None, alphabet, mode)?;
    for r in (1..h).rev() {
        rows[r - 1] = build_row(&rows[r].clone(), &nu[r - 1], Some(&s[r - 1]), alphabet, mode)?;
    }
    if rows.iter().any(|r| r.len() != width) {
        return Err(Error::Infeasible("rows of different lengths".into()));
    }
    let f = Filling::from_rows(rows)?;
    require_canonical(&f, mode).map_err(|_| Error::Infeasible("data do not give a canonical filling".into()))?;
    Ok(f)
}

/// The `d` factor of one row with `nu` and the `s` of the pair it heads.
pub fn d_factor(nu: &NuSeq, s: &SSequence) -> QtPoly {
    let n = s.alphabet as usize;
    let lo = s.first_index();
    let nu = |k: usize| nu[k] as i64;
    let mut acc = QtPoly::one();
    for k in lo..n {
        let top = nu(k + 1) - s.partial(k + 1, lo, k) as i64;
        let bottom = nu(k) - s.partial(k, lo, k) as i64;
        acc = &acc * &t_binomial(top, bottom);
        for h in lo..=k {
            acc = &acc * &t_binomial(s.get(h, k + 1) as i64, s.get(h, k) as i64);
        }
    }
    acc
}

/// `d` of a (dual) canonical filling: a product over rectangles and rows.
pub fn d_coeff(sigma: &Filling, mode: Mode) -> Result<QtPoly> {
    d_coeff_in(sigma, sigma.max_entry().max(1), mode)
}

/// `d` computed with an explicit alphabet; the value does not depend on it.
pub fn d_coeff_in(sigma: &Filling, alphabet: u32, mode: Mode) -> Result<QtPoly> {
    require_canonical(sigma, mode)?;
    let mut acc = QtPoly::one();
    for (_, rect) in rects(sigma) {
        let (nu, s) = nu_s_from_canonical(&rect, alphabet, mode)?;
        for (v, si) in nu.iter().zip(&s) {
            acc = &acc * &d_factor(v, si);
        }
    }
    Ok(acc)
}

/// `nu` and `s` of every rectangle: `nu[j - 1][i - 1]` is row `i` of the
/// rectangle of height `j`, and `s[j - 1][i - 1]` the pair of rows `i`, `i + 1`.
/// Empty rectangles carry zero sequences.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NuSData {
    pub alphabet: u32,
    pub mode: Mode,
    pub nu: Vec<Vec<NuSeq>>,
    pub s: Vec<Vec<SSequence>>,
}

impl NuSData {
    pub fn of(sigma: &Filling, alphabet: u32, mode: Mode) -> Result<NuSData> {
        check_alphabet(sigma, alphabet)?;
        let n = sigma.shape().len();
        let mut nu = vec![Vec::new(); n];
        let mut s = vec![Vec::new(); n];
        for rect in rect_ranges(sigma.shape()) {
            let j = rect.height;
            if rect.width == 0 {
                nu[j - 1] = vec![vec![0; alphabet as usize + 1]; j];
                s[j - 1] = vec![SSequence::zero(mode, alphabet); j];
            } else {
                let (a, b) = nu_s_from_canonical(&sigma.block(1, j, rect.start, rect.width), alphabet, mode)?;
                nu[j - 1] = a;
                s[j - 1] = b;
            }
        }
        Ok(NuSData { alphabet, mode, nu, s })
    }

    /// `nu^k_{i,j}`, zero when `i > j` or `k = 0`.
    pub fn nu(&self, i: usize, j: usize, k: usize) -> usize {
        if i > j {
            0
        } else {
            self.nu[j - 1][i - 1][k]
        }
    }
}

/// Descent columns between two rows, read off `s`.
pub fn descent_columns(s: &SSequence) -> usize {
    let n = s.alphabet as usize;
    (1..n).map(|k| s.get(k, n) - s.get(k, k)).sum()
}

/// `xi_1(s, nu)` of the canonical statistics.
pub fn xi_one(s: &SSequence, nu: &NuSeq) -> i64 {
    let n = s.alphabet as usize;
    let mut total = 0;
    for k in 1..n {
        for i in 1..=k {
            total += (s.get(i, k + 1) as i64 - s.get(i, k) as i64) * (nu[k] as i64 - s.partial(k, i, k) as i64);
        }
    }
    total
}

fn choose2(x: i64) -> i64 {
    x * (x - 1) / 2
}

/// Closed form of `maj` between rows `i` and `i + 1` of the height-`j` rectangle.
pub fn pair_maj_closed(s: &SSequence, i: usize, j: usize) -> usize {
    (j - i) * descent_columns(s)
}

/// Closed form of the non-`S2` quadruples between a row with `nu` and the
/// row above it, for canonical rectangles.
pub fn pair_eta_bar_closed(s: &SSequence, nu: &NuSeq) -> i64 {
    let n = s.alphabet as usize;
    let nu = |k: usize| nu[k] as i64;
    let mut total = xi_one(s, &(0..=n).map(|k| nu(k) as usize).collect());
    for k in 1..=n {
        total += choose2(nu(k) - nu(k - 1));
    }
    for k in 1..n {
        for h in 1..=k {
            total += (s.get(h, k + 1) as i64 - s.get(h, k) as i64) * s.get(h, k) as i64;
        }
        let a = nu(k + 1) - s.partial(k + 1, 1, k) as i64;
        let b = nu(k) - s.partial(k, 1, k) as i64;
        total += (a - b) * b;
    }
    total
}

/// Closed form of the non-`quinv` triples between columns of different
/// heights of a canonical filling of `lam`.
pub fn quinv_bar_closed(data: &NuSData, lam: &Partition) -> i64 {
    let n = lam.len();
    let big_n = data.alphabet as usize;
    let mut total = 0i64;
    for j in 1..=n {
        for i in 1..=j {
            let gap = lam.part(i) as i64 - lam.part(j) as i64;
            total += gap * descent_columns(&data.s[j - 1][i - 1]) as i64;
            for k in 1..=big_n {
                let here = data.nu(i, j, k) as i64 - data.nu(i, j, k - 1) as i64;
                for l in j + 1..=n {
                    total += here * (data.nu(i, l, k) as i64 - data.nu(i + 1, l, k - 1) as i64);
                }
            }
        }
    }
    total
}

/// Inversions of `w` in the order `u, u - 1, ..., 1, N, N - 1, ..., u + 1`
/// (smallest first).
pub fn lessdot_inv(w: &[u32], u: u32, alphabet: u32) -> usize {
    let rank = |x: u32| if x <= u { u - x } else { u + alphabet - x };
    let mut total = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            total += (rank(w[i]) > rank(w[j])) as usize;
        }
    }
    total
}

/// `L_p(w)`: the length of the shortest permutation taking `p` to `w`.
pub fn length_from(p: &[u32], w: &[u32]) -> Result<usize> {
    Ok(perm_inversions(&shortest_permutation(p, w)?))
}

/// `sum_{w} t^{L_p(w)}` over the distinct rearrangements `w` of `p`.
pub fn length_generating_function(p: &[u32]) -> QtPoly {
    distinct_permutations(p).iter().map(|w| QtPoly::t_pow(length_from(p, w).expect("rearrangement") as i64)).sum()
}

/// `sum t^{L_p(w~(p))}` over the shortest permutations `w~` rearranging
/// `alpha(p)`, for a neutral block `p` under `a`.
pub fn clamped_length_sum(p: &[u32], a: u32) -> QtPoly {
    let clamp: Vec<u32> = p.iter().map(|&x| x.min(a)).collect();
    distinct_permutations(&clamp)
        .iter()
        .map(|w| {
            let perm = shortest_permutation(&clamp, w).expect("rearrangement");
            let moved = apply_permutation(&perm, p);
            QtPoly::t_pow(length_from(p, &moved).expect("rearrangement") as i64)
        })
        .sum()
}

/// The `t`-multinomial of the multiplicities of `p`.
pub fn multiplicity_multinomial(p: &[u32]) -> QtPoly {
    let mut counts: BTreeMap<u32, i64> = BTreeMap::new();
    for &x in p {
        *counts.entry(x).or_default() += 1;
    }
    let parts: Vec<i64> = counts.into_values().collect();
    t_multinomial(p.len() as i64, &parts).expect("counts add up")
}

fn weakly_decreasing_rows(width: usize, alphabet: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(width);
    fn go(cur: &mut Vec<u32>, width: usize, max: u32, out: &mut Vec<Vec<u32>>) {
        if cur.len() == width {
            out.push(cur.clone());
            return;
        }
        for v in (1..=max).rev() {
            cur.push(v);
            go(cur, width, v, out);
            cur.pop();
        }
    }
    go(&mut cur, width, alphabet, &mut out);
    out
}

fn all_rows(width: usize, alphabet: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..width {
        out = out
            .into_iter()
            .flat_map(|r: Vec<u32>| {
                (1..=alphabet).map(move |v| {
                    let mut r = r.clone();
                    r.push(v);
                    r
                })
            })
            .collect();
    }
    out
}

/// Canonical rectangles of the given size, rows listed bottom first.
pub fn canonical_rectangles(height: usize, width: usize, alphabet: u32, mode: Mode) -> Vec<Filling> {
    let candidates = all_rows(width, alphabet);
    let mut partial: Vec<Vec<Vec<u32>>> =
        weakly_decreasing_rows(width, alphabet).into_iter().map(|r| vec![r]).collect();
    for _ in 1..height {
        let mut next = Vec::new();
        for rows in &partial {
            let a = rows.last().unwrap();
            for p in &candidates {
                if row_pair_ok(a, p, mode) {
                    let mut r = rows.clone();
                    r.push(p.clone());
                    next.push(r);
                }
            }
        }
        partial = next;
    }
    partial
        .into_iter()
        .map(|mut rows| {
            rows.reverse();
            Filling::from_rows(rows).expect("rectangle")
        })
        .collect()
}

/// All (dual) canonical fillings of `lam` with entries at most `alphabet`.
pub fn enumerate_canonical(lam: &Partition, alphabet: u32, mode: Mode) -> Vec<Filling> {
    let mut out = vec![Filling::constant(lam, 1)];
    for rect in rect_ranges(lam).into_iter().filter(|r| r.width > 0) {
        let pieces = canonical_rectangles(rect.height, rect.width, alphabet, mode);
        let mut next = Vec::with_capacity(out.len() * pieces.len());
        for base in &out {
            for piece in &pieces {
                let mut f = base.clone();
                f.paste(piece, 1, rect.start);
                next.push(f);
            }
        }
        out = next;
    }
    out
}

/// Weight of a filling as a partition when its content `(c_1, c_2, ...)` is
/// weakly decreasing, the leading monomial of `m_mu`.
pub fn dominant_weight(sigma: &Filling, alphabet: u32) -> Option<Partition> {
    let c = sigma.content(alphabet);
    let c = &c[1..];
    if c.windows(2).any(|w| w[0] < w[1]) {
        return None;
    }
    Partition::new(c.to_vec()).ok()
}

/// The compact sum over (dual) canonical fillings, collected into the
/// monomial basis with `alphabet` variables.
pub fn compact_htilde(lam: &Partition, alphabet: u32, mode: Mode, stat: EtaStatistic) -> Result<MonomialSym> {
    if !is_admissible(mode, stat) {
        return Err(Error::Inadmissible(format!("{stat} with {mode}")));
    }
    let canon = enumerate_canonical(lam, alphabet, mode);
    let terms: Vec<(Partition, QtPoly)> = canon
        .par_iter()
        .filter_map(|sigma| {
            let image = if stat.dual { complement_flip(sigma, alphabet).ok()? } else { sigma.clone() };
            let mu = dominant_weight(&image, alphabet)?;
            let d = d_coeff(sigma, mode).ok()?;
            let e = eta(&image, stat, alphabet).ok()?;
            Some((mu, d.shift(maj(&image) as i64, e as i64)))
        })
        .collect();
    let mut out = MonomialSym::zero();
    for (mu, p) in terms {
        out.add_coeff(mu, &p);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tb(rows: Vec<Vec<u32>>) -> Filling {
        Filling::from_rows_top_to_bottom(rows).unwrap()
    }

    fn worked() -> Filling {
        tb(vec![
            vec![9, 9, 8, 8, 8, 5, 5, 5, 5, 3, 3],
            vec![4, 3, 6, 3, 9, 4, 3, 2, 9, 2, 6],
            vec![2, 2, 8, 7, 8, 1, 6, 4, 6, 2, 7],
        ])
    }

    fn worked_dual() -> Filling {
        tb(vec![
            vec![9, 9, 8, 8, 8, 5, 5, 5, 5, 3, 3],
            vec![6, 4, 4, 3, 9, 3, 3, 2, 9, 2, 6],
            vec![8, 2, 2, 1, 8, 7, 6, 4, 6, 2, 7],
        ])
    }

    #[test]
    fn worked_tableaux_are_canonical() {
        assert!(is_canonical(&worked()));
        assert!(is_dual_canonical(&worked_dual()));
        let sorted_only = tb(vec![vec![5, 5, 5, 5, 3, 3, 3], vec![4, 4, 2, 2, 2, 1, 4], vec![2, 5, 1, 3, 5, 2, 1]]);
        assert!(!is_canonical(&sorted_only));
    }

    #[test]
    fn blocks_of_the_bottom_row() {
        let blocks = extract_blocks(&worked(), 1);
        let nd = blocks.iter().find(|b| b.kind == BlockKind::NonDescent).unwrap();
        assert_eq!(nd.entries, vec![8, 7, 6, 4, 2, 7]);
        let threes = blocks.iter().find(|b| b.kind == BlockKind::Neutral && b.upper_neighbor[0] == 3).unwrap();
        assert_eq!(threes.entries, vec![2, 7, 6]);
        let eights = extract_blocks(&worked(), 2)
            .into_iter()
            .find(|b| b.kind == BlockKind::Neutral && b.upper_neighbor[0] == 8)
            .unwrap();
        assert_eq!(eights.entries, vec![6, 3, 9]);
        assert_eq!(alpha(&eights).unwrap(), vec![6, 3, 8]);
        assert!(alpha(&blocks[0]).is_err());
    }

    #[test]
    fn canonical_rows_are_fixed_points() {
        for (f, mode) in [(worked(), Mode::Canonical), (worked_dual(), Mode::Dual)] {
            for r in 1..=3 {
                let a: Vec<u32> = (1..=11).map(|c| f.get(r + 1, c)).collect();
                assert_eq!(canonical_row(&a, f.row(r), mode), f.row(r));
            }
        }
    }

    #[test]
    fn canonicalize_the_three_row_example() {
        let tau = tb(vec![vec![5, 1, 3, 2, 1], vec![3, 3, 2, 4, 7], vec![3, 8, 1, 2, 2]]);
        let (sigma, trace) = canonicalize(&tau, Mode::Canonical);
        let want = tb(vec![vec![5, 3, 2, 1, 1], vec![3, 2, 7, 4, 3], vec![8, 1, 2, 2, 3]]);
        assert_eq!(sigma, want);
        assert_eq!(trace.replay(), want);
        let first: Vec<(usize, usize)> = trace.ops.iter().take(2).map(|o| (o.col, o.row)).collect();
        assert_eq!(first, vec![(2, 3), (3, 3)]);
        let ops: Vec<(usize, usize)> = trace.ops.iter().map(|o| (o.col, o.row)).collect();
        assert_eq!(&ops[2..4], &[(4, 2), (3, 2)]);
        assert_eq!(&ops[4..], &[(4, 1), (3, 1), (2, 1), (1, 1), (2, 1), (3, 1), (4, 1)]);
        assert_eq!(trace.ops.len(), 2 + 2 + 7);
    }

    #[test]
    fn one_row_family_is_all_rearrangements() {
        let sigma = Filling::from_rows(vec![vec![3, 2, 2, 1]]).unwrap();
        assert_eq!(generate_family(&sigma, Mode::Canonical).unwrap().len(), 12);
        assert_eq!(d_coeff(&sigma, Mode::Canonical).unwrap().eval_one(), 12.into());
        let c = Filling::constant(&"2,2".parse().unwrap(), 2);
        assert_eq!(generate_family(&c, Mode::Dual).unwrap().len(), 1);
        assert_eq!(d_coeff(&c, Mode::Canonical).unwrap(), QtPoly::one());
    }

    #[test]
    fn nu_s_round_trip_on_worked_tableaux() {
        for (f, mode) in [(worked(), Mode::Canonical), (worked_dual(), Mode::Dual)] {
            let (nu, s) = nu_s_from_canonical(&f, 9, mode).unwrap();
            assert_eq!(sigma_from_nu_s(&nu, &s, 9, mode).unwrap(), f);
        }
    }
}
