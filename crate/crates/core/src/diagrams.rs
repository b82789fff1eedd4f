//! Partitions, fillings of French Young diagrams and the maps between them.
//!
//! Rows are numbered from 1 at the bottom and columns from 1 at the left.
//! Reading row 0 of any column yields [`INF`]; reading above the top of a
//! column yields 0.

use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Sentinel placed below the bottom row.
pub const INF: u32 = u32::MAX;

/// Weakly decreasing sequence of positive parts.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Validates the parts; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has an inner zero")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// `lambda_i` with 1-based `i`; zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition((1..=width).map(|c| self.0.iter().filter(|&&p| p >= c).count()).collect())
    }

    /// `sum_i (i-1) lambda_i`.
    pub fn n_stat(&self) -> usize {
        self.0.iter().enumerate().map(|(i, p)| i * p).sum()
    }

    /// All partitions of `n` in reverse lexicographic order.
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=n.min(max)).rev() {
                cur.push(p);
                rec(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Partitions whose diagram fits inside `self` (including `self`).
    pub fn sub_shapes(&self) -> Vec<Partition> {
        fn rec(bound: &[usize], max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition(cur.clone()));
            if cur.len() == bound.len() {
                return;
            }
            for p in 1..=max.min(bound[cur.len()]) {
                cur.push(p);
                rec(bound, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(&self.0, usize::MAX, &mut Vec::new(), &mut out);
        out
    }
}

pub fn conjugate(lam: &Partition) -> Partition {
    lam.conjugate()
}

pub fn n_stat(lam: &Partition) -> usize {
    lam.n_stat()
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Partition::new(vec![]);
        }
        let parts = s
            .split(',')
            .map(|p| {
                let p = p.trim();
                match p.parse::<usize>() {
                    Ok(0) | Err(_) => Err(Error::Parse(format!("bad partition part {p:?}"))),
                    Ok(v) => Ok(v),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Partition::new(Vec::deserialize(d)?).map_err(D::Error::custom)
    }
}

/// A filling of a French Young diagram by positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Filling {
    shape: Partition,
    /// `rows[r - 1]` is row `r`, counted from the bottom.
    rows: Vec<Vec<u32>>,
    heights: Vec<usize>,
}

impl Filling {
    /// Rows are listed bottom to top.
    pub fn new(shape: Partition, rows: Vec<Vec<u32>>) -> Result<Self> {
        if rows.len() != shape.len() {
            return Err(Error::InvalidFilling(format!("{} rows for a shape with {} parts", rows.len(), shape.len())));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != shape.part(i + 1) {
                return Err(Error::InvalidFilling(format!(
                    "row {} has {} entries, expected {}",
                    i + 1,
                    row.len(),
                    shape.part(i + 1)
                )));
            }
            if row.iter().any(|&x| x == 0 || x == INF) {
                return Err(Error::InvalidFilling("entries must be positive integers".into()));
            }
        }
        let heights = shape.conjugate().0;
        Ok(Filling { shape, rows, heights })
    }

    /// Builds a filling from rows given bottom to top; the shape is read off.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(|r| r.len()).collect())?;
        Filling::new(shape, rows)
    }

    /// Builds a filling from rows given top to bottom.
    pub fn from_rows_top_to_bottom(mut rows: Vec<Vec<u32>>) -> Result<Self> {
        rows.reverse();
        Filling::from_rows(rows)
    }

    /// The constant filling with every entry equal to `v`.
    pub fn constant(shape: &Partition, v: u32) -> Filling {
        let rows = shape.parts().iter().map(|&p| vec![v; p]).collect();
        Filling::new(shape.clone(), rows).expect("constant filling is valid")
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Number of rows.
    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// Number of columns.
    pub fn width(&self) -> usize {
        self.heights.len()
    }

    /// Height of column `c` (1-based).
    pub fn height(&self, c: usize) -> usize {
        self.heights[c - 1]
    }

    pub fn heights(&self) -> &[usize] {
        &self.heights
    }

    /// Row `r` (1-based from the bottom).
    pub fn row(&self, r: usize) -> &[u32] {
        &self.rows[r - 1]
    }

    /// Rows bottom to top.
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn rows_top_to_bottom(&self) -> Vec<Vec<u32>> {
        self.rows.iter().rev().cloned().collect()
    }

    /// Entry at row `r`, column `c` with the 0 / [`INF`] padding.
    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        if r == 0 {
            INF
        } else if r > self.heights[c - 1] {
            0
        } else {
            self.rows[r - 1][c - 1]
        }
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.rows[r - 1][c - 1] = v;
    }

    /// Exchanges the entries at rows `lo..=hi` of columns `c` and `c + 1`.
    pub(crate) fn swap_range(&mut self, c: usize, lo: usize, hi: usize) {
        for r in lo..=hi {
            self.rows[r - 1].swap(c - 1, c);
        }
    }

    pub fn max_entry(&self) -> u32 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    /// Row multiset counts: `content()[v]` is the number of entries equal to `v`.
    pub fn content(&self, alphabet: u32) -> Vec<usize> {
        let mut c = vec![0; alphabet as usize + 1];
        for &x in self.rows.iter().flatten() {
            c[x as usize] += 1;
        }
        c
    }

    /// Sub-filling of rows `lo..=hi` restricted to columns `c0..c0 + w`.
    pub fn block(&self, lo: usize, hi: usize, c0: usize, w: usize) -> Filling {
        let rows: Vec<Vec<u32>> = (lo..=hi).map(|r| self.rows[r - 1][c0 - 1..c0 - 1 + w].to_vec()).collect();
        Filling::from_rows(rows).expect("sub-rectangle is valid")
    }

    /// Writes a rectangle `sub` into rows starting at `lo` and columns starting at `c0`.
    pub fn paste(&mut self, sub: &Filling, lo: usize, c0: usize) {
        for (i, row) in sub.rows.iter().enumerate() {
            self.rows[lo - 1 + i][c0 - 1..c0 - 1 + row.len()].copy_from_slice(row);
        }
    }

    /// Rows top to bottom, entries space separated.
    pub fn to_text(&self) -> String {
        self.rows
            .iter()
            .rev()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// Parses rows top to bottom separated by newlines or `/`.
    pub fn parse_text(s: &str) -> Result<Filling> {
        let rows = s
            .split(['\n', '/'])
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|l| {
                l.split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|x| !x.is_empty())
                    .map(|x| x.parse::<u32>().map_err(|_| Error::Parse(format!("bad entry {x:?}"))))
                    .collect::<Result<Vec<u32>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Filling::from_rows_top_to_bottom(rows)
    }
}

impl fmt::Display for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl fmt::Debug for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.rows.iter().rev().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")).collect();
        write!(f, "[{}]", rows.join(" / "))
    }
}

#[derive(Serialize, Deserialize)]
struct FillingJson {
    shape: Vec<usize>,
    rows_top_to_bottom: Vec<Vec<u32>>,
}

impl Serialize for Filling {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FillingJson { shape: self.shape.0.clone(), rows_top_to_bottom: self.rows_top_to_bottom() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Filling {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = FillingJson::deserialize(d)?;
        let shape = Partition::new(j.shape).map_err(D::Error::custom)?;
        let mut rows = j.rows_top_to_bottom;
        rows.reverse();
        Filling::new(shape, rows).map_err(D::Error::custom)
    }
}

/// Odometer over all fillings with entries in `1..=alphabet`. Cells are
/// ordered row by row from the bottom, left to right; the first cell varies
/// fastest.
pub struct Fillings {
    current: Option<Filling>,
    alphabet: u32,
}

impl Iterator for Fillings {
    type Item = Filling;

    fn next(&mut self) -> Option<Filling> {
        let out = self.current.clone()?;
        let mut next = out.clone();
        let mut carried = true;
        'outer: for row in next.rows.iter_mut() {
            for x in row.iter_mut() {
                if *x < self.alphabet {
                    *x += 1;
                    carried = false;
                    break 'outer;
                }
                *x = 1;
            }
        }
        self.current = if carried { None } else { Some(next) };
        Some(out)
    }
}

pub fn enumerate_fillings(lam: &Partition, alphabet: u32) -> Fillings {
    Fillings { current: if alphabet == 0 { None } else { Some(Filling::constant(lam, 1)) }, alphabet }
}

/// Rearranges `v` into the next lexicographic permutation; false at the last one.
pub fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All distinct rearrangements of `v` in lexicographic order.
pub fn distinct_permutations<T: Ord + Clone>(v: &[T]) -> Vec<Vec<T>> {
    let mut cur = v.to_vec();
    cur.sort();
    let mut out = vec![cur.clone()];
    while next_permutation(&mut cur) {
        out.push(cur.clone());
    }
    out
}

/// All fillings with the same row multisets as `sigma`.
pub fn row_equivalence_class(sigma: &Filling) -> Vec<Filling> {
    let mut out = vec![sigma.clone()];
    for r in 1..=sigma.num_rows() {
        let perms = distinct_permutations(sigma.row(r));
        let mut next = Vec::with_capacity(out.len() * perms.len());
        for f in &out {
            for p in &perms {
                let mut g = f.clone();
                g.rows[r - 1] = p.clone();
                next.push(g);
            }
        }
        out = next;
    }
    out
}

/// A maximal rectangle of columns sharing one height.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rect {
    pub height: usize,
    /// First column (1-based); meaningless when `width == 0`.
    pub start: usize,
    pub width: usize,
}

/// The rectangles `sigma_n, ..., sigma_1` of a shape, left to right,
/// including empty ones.
pub fn rect_ranges(lam: &Partition) -> Vec<Rect> {
    let n = lam.len();
    let mut out = Vec::with_capacity(n);
    let mut start = 1;
    for j in (1..=n).rev() {
        let width = lam.part(j) - lam.part(j + 1);
        out.push(Rect { height: j, start, width });
        start += width;
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RectDecomposition {
    pub ranges: Vec<Rect>,
    /// `None` for empty rectangles.
    pub rects: Vec<Option<Filling>>,
}

pub fn rect_decompose(sigma: &Filling) -> RectDecomposition {
    let ranges = rect_ranges(sigma.shape());
    let rects = ranges.iter().map(|r| (r.width > 0).then(|| sigma.block(1, r.height, r.start, r.width))).collect();
    RectDecomposition { ranges, rects }
}

impl RectDecomposition {
    /// Reassembles the filling.
    pub fn concat(&self, shape: &Partition) -> Filling {
        let mut out = Filling::constant(shape, 1);
        for (range, rect) in self.ranges.iter().zip(&self.rects) {
            if let Some(f) = rect {
                out.paste(f, 1, range.start);
            }
        }
        out
    }
}

/// Complements entries (`x -> N + 1 - x`) and turns every maximal rectangle
/// upside down.
pub fn complement_flip(sigma: &Filling, alphabet: u32) -> Result<Filling> {
    let max = sigma.max_entry();
    if alphabet < max {
        return Err(Error::AlphabetTooSmall { alphabet, max });
    }
    let mut out = sigma.clone();
    for rect in rect_ranges(sigma.shape()) {
        for r in 1..=rect.height {
            for c in rect.start..rect.start + rect.width {
                out.set(rect.height + 1 - r, c, alphabet + 1 - sigma.get(r, c));
            }
        }
    }
    Ok(out)
}
