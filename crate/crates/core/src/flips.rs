//! Column swap operators `t`, `rho`, `delta`, the row action they generate,
//! the sorting permutations of a two-row block, and the bijections `gamma`
//! and `g`.

use serde::{Deserialize, Serialize};

use crate::diagrams::{rect_ranges, Filling};
use crate::error::{Error, Result};
use crate::statistics::{q3, PatternClass, QuadrupleSet, A2};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum OpKind {
    T,
    Rho,
    Delta,
}

/// One applied operator: kind, left column `i`, row bound `r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Op {
    pub kind: OpKind,
    pub col: usize,
    pub row: usize,
}

/// Input, output and the operators that lead from one to the other.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BijectionTrace {
    pub input: Filling,
    pub output: Filling,
    pub ops: Vec<Op>,
}

impl BijectionTrace {
    pub fn new(input: Filling) -> Self {
        BijectionTrace { output: input.clone(), input, ops: Vec::new() }
    }

    /// Applies `op` to the output and records it.
    pub fn push(&mut self, op: Op) {
        apply_op(&mut self.output, op);
        self.ops.push(op);
    }

    /// Re-runs the log from the input.
    pub fn replay(&self) -> Filling {
        let mut f = self.input.clone();
        for &op in &self.ops {
            apply_op(&mut f, op);
        }
        f
    }
}

fn apply_op(f: &mut Filling, op: Op) {
    match op.kind {
        OpKind::T => f.swap_range(op.col, op.row, op.row),
        OpKind::Rho => rho_mut(f, op.col, op.row),
        OpKind::Delta => delta_mut(f, op.col, op.row),
    }
}

/// Checks that columns `i` and `i + 1` exist, have equal height, and `r` fits.
pub fn check_pair(sigma: &Filling, i: usize, r: usize) -> Result<()> {
    if i == 0 || i >= sigma.width() {
        return Err(Error::InvalidPosition(format!("no column pair at {i}")));
    }
    if sigma.height(i) != sigma.height(i + 1) {
        return Err(Error::UnequalColumns(i, i + 1));
    }
    if r == 0 || r > sigma.height(i) {
        return Err(Error::InvalidPosition(format!("row {r} outside columns {i}, {}", i + 1)));
    }
    Ok(())
}

pub fn t_swap(sigma: &Filling, i: usize, r: usize) -> Result<Filling> {
    t_swap_range(sigma, i, r, r)
}

pub fn t_swap_range(sigma: &Filling, i: usize, lo: usize, hi: usize) -> Result<Filling> {
    check_pair(sigma, i, hi)?;
    if lo == 0 || lo > hi {
        return Err(Error::InvalidPosition(format!("empty row range {lo}..={hi}")));
    }
    let mut out = sigma.clone();
    out.swap_range(i, lo, hi);
    Ok(out)
}

fn rho_start(sigma: &Filling, i: usize, r: usize) -> usize {
    (1..=r)
        .rev()
        .find(|&k| {
            let (b, c) = (sigma.get(k - 1, i), sigma.get(k - 1, i + 1));
            q3(sigma.get(k, i), b, c) == q3(sigma.get(k, i + 1), b, c)
        })
        .unwrap_or(1)
}

fn delta_start(sigma: &Filling, i: usize, r: usize) -> usize {
    (1..=r).rev().find(|&k| sigma.get(k, i) == sigma.get(k, i + 1)).unwrap_or(1)
}

/// `rho_i^r` in place, without validation.
pub fn rho_mut(sigma: &mut Filling, i: usize, r: usize) {
    let k = rho_start(sigma, i, r);
    sigma.swap_range(i, k, r);
}

/// `delta_i^r` in place, without validation.
pub fn delta_mut(sigma: &mut Filling, i: usize, r: usize) {
    let k = delta_start(sigma, i, r);
    sigma.swap_range(i, k, r);
}

pub fn rho(sigma: &Filling, i: usize, r: usize) -> Result<Filling> {
    check_pair(sigma, i, r)?;
    let mut out = sigma.clone();
    rho_mut(&mut out, i, r);
    Ok(out)
}

pub fn delta(sigma: &Filling, i: usize, r: usize) -> Result<Filling> {
    check_pair(sigma, i, r)?;
    let mut out = sigma.clone();
    delta_mut(&mut out, i, r);
    Ok(out)
}

/// `rho_i` acting on the full column height.
pub fn rho_top(sigma: &Filling, i: usize) -> Result<Filling> {
    check_pair(sigma, i, 1)?;
    rho(sigma, i, sigma.height(i))
}

/// `delta_i` acting on the full column height.
pub fn delta_top(sigma: &Filling, i: usize) -> Result<Filling> {
    check_pair(sigma, i, 1)?;
    delta(sigma, i, sigma.height(i))
}

/// A word in adjacent transpositions, listed in the order they are applied.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedWord {
    pub letters: Vec<usize>,
}

impl ReducedWord {
    /// Reduced word of a permutation in one-line notation (`perm[i - 1]` is
    /// the new position of the item at position `i`), by bubble sorting.
    pub fn from_permutation(perm: &[usize]) -> ReducedWord {
        // fill destinations left to right, moving each entry leftwards
        let mut target = perm.to_vec();
        let mut letters = Vec::new();
        for i in 0..target.len() {
            let j = i + target[i..].iter().position(|&d| d == i + 1).expect("permutation");
            for l in (i + 1..=j).rev() {
                target.swap(l - 1, l);
                letters.push(l);
            }
        }
        ReducedWord { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Shifts every letter by `offset` columns.
    pub fn shifted(&self, offset: usize) -> ReducedWord {
        ReducedWord { letters: self.letters.iter().map(|l| l + offset).collect() }
    }
}

/// Applies the letters left to right with `rho^r` or `delta^r`.
pub fn apply_reduced_word(sigma: &Filling, w: &ReducedWord, kind: OpKind, r: usize) -> Result<Filling> {
    let mut out = sigma.clone();
    for &i in &w.letters {
        check_pair(&out, i, r)?;
        match kind {
            OpKind::Rho => rho_mut(&mut out, i, r),
            OpKind::Delta => delta_mut(&mut out, i, r),
            OpKind::T => out.swap_range(i, r, r),
        }
    }
    Ok(out)
}

/// Inversions of a permutation in one-line notation.
pub fn perm_inversions(perm: &[usize]) -> usize {
    let mut n = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            n += (perm[i] > perm[j]) as usize;
        }
    }
    n
}

pub fn invert_permutation(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p - 1] = i + 1;
    }
    inv
}

/// `out[perm(i)] = seq[i]`.
pub fn apply_permutation<T: Clone>(perm: &[usize], seq: &[T]) -> Vec<T> {
    let mut out = seq.to_vec();
    for (i, &p) in perm.iter().enumerate() {
        out[p - 1] = seq[i].clone();
    }
    out
}

/// The shortest permutation taking `p` to its rearrangement `w`: equal
/// entries keep their relative order.
pub fn shortest_permutation(p: &[u32], w: &[u32]) -> Result<Vec<usize>> {
    if p.len() != w.len() {
        return Err(Error::SizeMismatch(format!("{} entries against {}", p.len(), w.len())));
    }
    let mut used = vec![false; w.len()];
    let mut perm = Vec::with_capacity(p.len());
    for &x in p {
        let pos = (0..w.len())
            .find(|&j| !used[j] && w[j] == x)
            .ok_or_else(|| Error::SizeMismatch("target is not a rearrangement".into()))?;
        used[pos] = true;
        perm.push(pos + 1);
    }
    Ok(perm)
}

/// Number of adjacent swaps needed to turn `p` into `w`.
pub fn min_swaps(p: &[u32], w: &[u32]) -> Result<usize> {
    Ok(perm_inversions(&shortest_permutation(p, w)?))
}

/// Rearranges row `r` inside columns `c0..c0 + target.len()` into `target`
/// by `delta^r` operators along a reduced word of the shortest permutation.
pub fn act_row_mut(sigma: &mut Filling, r: usize, c0: usize, target: &[u32]) -> Result<()> {
    let cur = &sigma.row(r)[c0 - 1..c0 - 1 + target.len()];
    let perm = shortest_permutation(cur, target)?;
    for &l in &ReducedWord::from_permutation(&perm).letters {
        delta_mut(sigma, c0 - 1 + l, r);
    }
    Ok(())
}

pub fn act_row(sigma: &Filling, r: usize, c0: usize, target: &[u32]) -> Result<Filling> {
    if target.is_empty() {
        return Ok(sigma.clone());
    }
    check_pair_range(sigma, r, c0, target.len())?;
    let mut out = sigma.clone();
    act_row_mut(&mut out, r, c0, target)?;
    Ok(out)
}

fn check_pair_range(sigma: &Filling, r: usize, c0: usize, w: usize) -> Result<()> {
    if c0 == 0 || c0 + w - 1 > sigma.width() {
        return Err(Error::InvalidPosition(format!("columns {c0}..{} outside the filling", c0 + w)));
    }
    let h = sigma.height(c0);
    if (c0..c0 + w).any(|c| sigma.height(c) != h) {
        return Err(Error::UnequalColumns(c0, c0 + w - 1));
    }
    if r == 0 || r > h {
        return Err(Error::InvalidPosition(format!("row {r} outside height {h}")));
    }
    Ok(())
}

/// Which sorting permutation of a two-row block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SortKind {
    /// Stable weakly decreasing sort of the upper row.
    Bullet,
    /// Descent columns first in place order, then the rest weakly decreasing.
    Diamond,
    /// Descent columns weakly decreasing, then the rest in place order.
    Dagger,
}

/// One-line permutation (`perm[i - 1]` = new position of column `i`) that
/// sorts the upper row `a` over the lower row `p`.
pub fn sort_perm(a: &[u32], p: &[u32], kind: SortKind) -> Result<Vec<usize>> {
    if a.len() != p.len() {
        return Err(Error::SizeMismatch(format!("upper row {} against lower row {}", a.len(), p.len())));
    }
    let idx: Vec<usize> = (0..a.len()).collect();
    let by_upper_desc = |v: &mut Vec<usize>| v.sort_by(|&i, &j| a[j].cmp(&a[i]).then(i.cmp(&j)));
    let order: Vec<usize> = match kind {
        SortKind::Bullet => {
            let mut v = idx;
            by_upper_desc(&mut v);
            v
        }
        SortKind::Diamond => {
            let mut des: Vec<usize> = idx.iter().copied().filter(|&i| a[i] > p[i]).collect();
            let mut nd: Vec<usize> = idx.iter().copied().filter(|&i| a[i] <= p[i]).collect();
            by_upper_desc(&mut nd);
            des.append(&mut nd);
            des
        }
        SortKind::Dagger => {
            let mut des: Vec<usize> = idx.iter().copied().filter(|&i| a[i] > p[i]).collect();
            let mut nd: Vec<usize> = idx.iter().copied().filter(|&i| a[i] <= p[i]).collect();
            by_upper_desc(&mut des);
            des.append(&mut nd);
            des
        }
    };
    let mut perm = vec![0; a.len()];
    for (pos, &i) in order.iter().enumerate() {
        perm[i] = pos + 1;
    }
    Ok(perm)
}

/// The conjugated action on rows `1..=r + 1` of the rectangle at columns
/// `c0..c0 + w.len()`: sort by `star`, move row `r` along the shortest
/// permutation, sort back. With `r` the top row no sorting happens.
pub fn delta_word(tau: &Filling, w: &[u32], r: usize, c0: usize, star: SortKind) -> Result<Filling> {
    let k = w.len();
    check_pair_range(tau, r, c0, k)?;
    let top = r == tau.height(c0);
    if top {
        return act_row(tau, r, c0, w);
    }
    let a = &tau.row(r + 1)[c0 - 1..c0 - 1 + k];
    let p = &tau.row(r)[c0 - 1..c0 - 1 + k];
    let pi = sort_perm(a, p, star)?;
    let word = ReducedWord::from_permutation(&pi).shifted(c0 - 1);
    let sorted = apply_reduced_word(tau, &word, OpKind::Delta, r + 1)?;
    let moved = act_row(&sorted, r, c0, &apply_permutation(&pi, w))?;
    let back = ReducedWord::from_permutation(&invert_permutation(&pi)).shifted(c0 - 1);
    apply_reduced_word(&moved, &back, OpKind::Delta, r + 1)
}

/// Direction the top row is sorted to before `gamma` pushes it back.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TopOrder {
    Decreasing,
    Increasing,
}

/// For the chosen pattern `omega` of a class and its mirror `(w, z, v, u)`,
/// exactly one has `(z, u, v)` not a queue inversion triple. If that one is
/// increasing (`z < w`) the top row is sorted weakly decreasing, otherwise
/// weakly increasing.
pub fn top_order(set: QuadrupleSet, class: PatternClass) -> Result<TopOrder> {
    let [z, w, u, v] = set.chosen(class).representative();
    let own = q3(z, u, v);
    let mirror = q3(w, v, u);
    match (own, mirror) {
        (false, true) => Ok(if z < w { TopOrder::Decreasing } else { TopOrder::Increasing }),
        (true, false) => Ok(if w < z { TopOrder::Decreasing } else { TopOrder::Increasing }),
        _ => Err(Error::Uncovered(format!("{set} has no unique orientation in class {class:?}"))),
    }
}

fn out_of_order(order: TopOrder, x: u32, y: u32) -> bool {
    match order {
        TopOrder::Decreasing => x < y,
        TopOrder::Increasing => x > y,
    }
}

/// Bubble sorts the top row of a two-row filling with full-height `rho`'s in
/// rightward passes; returns the columns used in application order.
pub fn bubble_rho(sigma: &mut Filling, order: TopOrder) -> Vec<usize> {
    let mut used = Vec::new();
    let k = sigma.width();
    loop {
        let mut swapped = false;
        for i in 1..k {
            if out_of_order(order, sigma.get(2, i), sigma.get(2, i + 1)) {
                rho_mut(sigma, i, 2);
                used.push(i);
                swapped = true;
            }
        }
        if !swapped {
            return used;
        }
    }
}

fn undo_with_delta(sigma: &mut Filling, used: &[usize]) {
    for &i in used.iter().rev() {
        delta_mut(sigma, i, 2);
    }
}

fn gamma_extreme(tau: &Filling, order: TopOrder) -> Filling {
    let mut out = tau.clone();
    let used = bubble_rho(&mut out, order);
    undo_with_delta(&mut out, &used);
    out
}

fn columns(f: &Filling, cols: &[usize]) -> Filling {
    let rows = (1..=f.num_rows()).map(|r| cols.iter().map(|&c| f.get(r, c)).collect()).collect();
    Filling::from_rows(rows).expect("column selection is a rectangle")
}

/// `gamma` on a two-row rectangle.
pub fn gamma_two_rows(tau: &Filling, set: QuadrupleSet) -> Result<Filling> {
    let k = tau.width();
    let des = (1..=k).filter(|&c| tau.get(2, c) > tau.get(1, c)).count();
    if des == k {
        return Ok(gamma_extreme(tau, top_order(set, PatternClass::A1)?));
    }
    if des == 0 {
        return Ok(gamma_extreme(tau, top_order(set, PatternClass::A2)?));
    }
    let mut sigma = tau.clone();
    let used = bubble_rho(&mut sigma, top_order(set, PatternClass::A3)?);
    let des_cols: Vec<usize> = (1..=k).filter(|&c| sigma.get(2, c) > sigma.get(1, c)).collect();
    let nd_cols: Vec<usize> = (1..=k).filter(|&c| sigma.get(2, c) <= sigma.get(1, c)).collect();
    let g_des = gamma_extreme(&columns(&sigma, &des_cols), top_order(set, PatternClass::A1)?);
    let g_nd = gamma_extreme(&columns(&sigma, &nd_cols), top_order(set, PatternClass::A2)?);
    let mut merged = sigma.clone();
    for (src, cols) in [(&g_des, &des_cols), (&g_nd, &nd_cols)] {
        for (n, &c) in cols.iter().enumerate() {
            merged.set(1, c, src.get(1, n + 1));
            merged.set(2, c, src.get(2, n + 1));
        }
    }
    undo_with_delta(&mut merged, &used);
    Ok(merged)
}

fn gamma_rect(sigma: &Filling, set: QuadrupleSet) -> Result<Filling> {
    let m = sigma.num_rows();
    let k = sigma.width();
    match m {
        0 | 1 => Ok(sigma.clone()),
        2 => gamma_two_rows(sigma, set),
        _ => {
            let lower = gamma_rect(&sigma.block(1, m - 1, 1, k), set)?;
            let mut out = sigma.clone();
            out.paste(&lower, 1, 1);
            let top = gamma_two_rows(&sigma.block(m - 1, m, 1, k), set)?;
            act_row_mut(&mut out, m - 1, 1, top.row(1))?;
            Ok(out)
        }
    }
}

/// The bijection transporting `(maj, quinv)` to `(maj, eta)` for the set,
/// applied rectangle by rectangle.
pub fn gamma(sigma: &Filling, set: QuadrupleSet) -> Result<Filling> {
    let mut out = sigma.clone();
    for rect in rect_ranges(sigma.shape()) {
        if rect.width == 0 {
            continue;
        }
        let g = gamma_rect(&sigma.block(1, rect.height, rect.start, rect.width), set)?;
        out.paste(&g, 1, rect.start);
    }
    Ok(out)
}

/// Set pairs that differ only in the `a2` element: the first holds
/// `v>u>=z>w`, the second `u>v>=z>w`.
pub fn a2_pairs() -> Vec<(QuadrupleSet, QuadrupleSet)> {
    let mut out = Vec::new();
    for si in QuadrupleSet::all() {
        if si.chosen(PatternClass::A2).text() != A2[1] {
            continue;
        }
        for sj in QuadrupleSet::all() {
            if sj.chosen(PatternClass::A2).text() == A2[0]
                && [PatternClass::A1, PatternClass::A3].iter().all(|&c| si.chosen(c) == sj.chosen(c))
            {
                out.push((si, sj));
            }
        }
    }
    out
}

fn check_g_domain(sigma: &Filling) -> Result<()> {
    if sigma.num_rows() != 2 || sigma.shape().part(1) != sigma.shape().part(2) {
        return Err(Error::InvalidFilling("g acts on two-row rectangles".into()));
    }
    let k = sigma.width();
    if (1..=k).any(|c| sigma.get(2, c) > sigma.get(1, c)) {
        return Err(Error::InvalidFilling("g needs non-descent columns only".into()));
    }
    if (1..k).any(|c| sigma.get(2, c) < sigma.get(2, c + 1)) {
        return Err(Error::InvalidFilling("g needs a weakly decreasing top row".into()));
    }
    Ok(())
}

fn reverse_runs(sigma: &mut Filling) {
    let k = sigma.width();
    let mut start = 1;
    while start <= k {
        let mut end = start;
        while end < k && sigma.get(2, end + 1) == sigma.get(2, start) {
            end += 1;
        }
        let run: Vec<u32> = (start..=end).map(|c| sigma.get(1, c)).collect();
        for (n, &x) in run.iter().rev().enumerate() {
            sigma.set(1, start + n, x);
        }
        start = end + 1;
    }
}

fn reverse_rows(sigma: &Filling) -> Filling {
    let rows = sigma.rows().iter().map(|r| r.iter().rev().copied().collect()).collect();
    Filling::from_rows(rows).expect("reversed rows keep the shape")
}

fn check_pair_sets(si: QuadrupleSet, sj: QuadrupleSet) -> Result<bool> {
    let pairs = a2_pairs();
    if pairs.contains(&(si, sj)) {
        Ok(true)
    } else if pairs.contains(&(sj, si)) {
        Ok(false)
    } else {
        Err(Error::IncompatibleSets(format!("{si} and {sj} do not differ exactly in a2")))
    }
}

fn g_forward(sigma: &Filling) -> Filling {
    let mut tau = reverse_rows(sigma);
    bubble_rho(&mut tau, TopOrder::Decreasing);
    reverse_runs(&mut tau);
    tau
}

fn g_backward(sigma: &Filling) -> Filling {
    let mut tau = sigma.clone();
    reverse_runs(&mut tau);
    let mut top = Filling::from_rows(vec![tau.row(2).iter().rev().copied().collect()]).unwrap();
    // the rho schedule depends on the top row alone; replay it on a copy
    let mut probe = Filling::from_rows(vec![top.row(1).to_vec(), top.row(1).to_vec()]).unwrap();
    let used = bubble_rho(&mut probe, TopOrder::Decreasing);
    top = tau;
    for &i in used.iter().rev() {
        rho_mut(&mut top, i, 2);
    }
    reverse_rows(&top)
}

/// The bijection on two-row all-non-descent tableaux with weakly decreasing
/// top row carrying `(maj, eta_i)` to `(maj, eta_j)`.
pub fn g_bijection(sigma: &Filling, si: QuadrupleSet, sj: QuadrupleSet) -> Result<Filling> {
    let forward = check_pair_sets(si, sj)?;
    check_g_domain(sigma)?;
    Ok(if forward { g_forward(sigma) } else { g_backward(sigma) })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(i: u8) -> QuadrupleSet {
        QuadrupleSet::new(i).unwrap()
    }

    fn two_rows(top: &[u32], bottom: &[u32]) -> Filling {
        Filling::from_rows(vec![bottom.to_vec(), top.to_vec()]).unwrap()
    }

    #[test]
    fn swaps() {
        let f = two_rows(&[1, 2], &[3, 4]);
        let g = t_swap_range(&f, 1, 1, 2).unwrap();
        assert_eq!(g, two_rows(&[2, 1], &[4, 3]));
        assert_eq!(t_swap_range(&g, 1, 1, 2).unwrap(), f);
        assert_eq!(t_swap(&f, 1, 1).unwrap(), two_rows(&[1, 2], &[4, 3]));
        let uneven = Filling::from_rows(vec![vec![1, 2], vec![3]]).unwrap();
        assert_eq!(t_swap(&uneven, 1, 1), Err(Error::UnequalColumns(1, 2)));
    }

    #[test]
    fn sort_permutations() {
        let a = [4, 3, 6, 3, 9, 4, 3, 2, 9, 2, 6];
        let p = [2, 2, 8, 7, 8, 1, 6, 4, 6, 2, 7];
        assert_eq!(sort_perm(&a, &p, SortKind::Diamond).unwrap(), vec![1, 2, 6, 8, 3, 4, 9, 10, 5, 11, 7]);
        let bullet = sort_perm(&a, &p, SortKind::Bullet).unwrap();
        assert_eq!(bullet, vec![5, 7, 3, 8, 1, 6, 9, 10, 2, 11, 4]);
        assert_eq!(apply_permutation(&bullet, &p), vec![8, 6, 8, 7, 2, 1, 2, 7, 6, 4, 2]);
        assert_eq!(apply_permutation(&bullet, &a), vec![9, 9, 6, 6, 4, 4, 3, 3, 3, 2, 2]);
        assert_eq!(
            apply_permutation(&sort_perm(&a, &p, SortKind::Diamond).unwrap(), &a),
            vec![4, 3, 9, 4, 9, 6, 6, 3, 3, 2, 2]
        );
        let sorted = [5, 5, 3, 1];
        assert_eq!(sort_perm(&sorted, &[1, 1, 1, 1], SortKind::Bullet).unwrap(), vec![1, 2, 3, 4]);
        assert!(sort_perm(&a, &p[..3], SortKind::Bullet).is_err());
    }

    #[test]
    fn reduced_words() {
        let perm = vec![3, 1, 2];
        let w = ReducedWord::from_permutation(&perm);
        assert_eq!(w.len(), perm_inversions(&perm));
        let seq = [10u32, 20, 30];
        let mut moved = seq.to_vec();
        for &l in &w.letters {
            moved.swap(l - 1, l);
        }
        assert_eq!(moved, apply_permutation(&perm, &seq));
        assert_eq!(shortest_permutation(&[2, 1, 2], &[2, 2, 1]).unwrap(), vec![1, 3, 2]);
    }

    #[test]
    fn top_orders_follow_the_worked_example() {
        assert_eq!(top_order(s(2), PatternClass::A1).unwrap(), TopOrder::Decreasing);
        assert_eq!(top_order(s(2), PatternClass::A2).unwrap(), TopOrder::Decreasing);
        assert_eq!(top_order(s(2), PatternClass::A3).unwrap(), TopOrder::Increasing);
        for set in QuadrupleSet::all() {
            for class in [PatternClass::A1, PatternClass::A2, PatternClass::A3] {
                assert!(top_order(set, class).is_ok());
            }
        }
    }

    #[test]
    fn a2_pairs_are_four() {
        let pairs: Vec<(u8, u8)> = a2_pairs().iter().map(|(a, b)| (a.id(), b.id())).collect();
        assert_eq!(pairs, vec![(2, 1), (4, 3), (7, 5), (8, 6)]);
    }

    #[test]
    fn g_is_rejected_outside_its_domain() {
        let f = two_rows(&[1, 2], &[3, 4]);
        assert!(g_bijection(&f, s(2), s(1)).is_err());
        let f = two_rows(&[2, 1], &[3, 4]);
        assert!(g_bijection(&f, s(2), s(3)).is_err());
        let c = two_rows(&[2, 2], &[3, 3]);
        assert_eq!(g_bijection(&c, s(2), s(1)).unwrap(), c);
    }

    #[test]
    fn gamma_on_the_worked_two_row_example() {
        let tau = two_rows(&[2, 3, 2, 4, 4, 5, 4, 5, 6, 8, 7], &[3, 5, 1, 3, 7, 6, 5, 1, 4, 2, 6]);
        let mut sigma = tau.clone();
        let used = bubble_rho(&mut sigma, TopOrder::Increasing);
        assert_eq!(used, vec![2, 6, 10]);
        assert_eq!(sigma.row(2), &[2, 2, 3, 4, 4, 4, 5, 5, 6, 7, 8]);
        let out = gamma(&tau, s(2)).unwrap();
        assert_eq!(out.row(2), tau.row(2));
        assert_eq!(out.row(1), &[3, 2, 5, 1, 7, 5, 6, 1, 4, 3, 6]);
        assert_eq!(crate::statistics::quinv(&tau), 72);
        assert_eq!(crate::statistics::eta_s(&out, s(2)) + crate::statistics::quinv_unequal(&out), 72);
        assert_eq!(crate::statistics::maj(&out), 6);
    }

    #[test]
    fn descending_block_schedule() {
        let mut f = two_rows(&[3, 4, 5, 6, 7, 8], &[1, 1, 1, 1, 1, 1]);
        let used = bubble_rho(&mut f, TopOrder::Decreasing);
        assert_eq!(used, vec![1, 2, 3, 4, 5, 1, 2, 3, 4, 1, 2, 3, 1, 2, 1]);
    }
}
