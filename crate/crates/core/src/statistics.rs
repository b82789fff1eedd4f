//! Statistics on fillings: `maj`, `inv`, `quinv`, the eight quadruple sets
//! and the sixteen statistics `eta` / `eta*` built from them.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::diagrams::{complement_flip, Filling};
use crate::error::{Error, Result};

/// The three-entry pattern shared by queue inversion and inversion triples.
#[inline]
pub fn q3(a: u32, b: u32, c: u32) -> bool {
    (a < b && b < c) || (b < c && c < a) || (c < a && a < b) || (a == b && b != c)
}

pub fn maj(sigma: &Filling) -> usize {
    let mut total = 0;
    for c in 1..=sigma.width() {
        let h = sigma.height(c);
        for r in 2..=h {
            if sigma.get(r, c) > sigma.get(r - 1, c) {
                total += h - r + 1;
            }
        }
    }
    total
}

/// Number of descent cells between rows `r` and `r + 1` inside columns `c0..c0 + w`.
pub fn descents_between(sigma: &Filling, r: usize, c0: usize, w: usize) -> usize {
    (c0..c0 + w).filter(|&c| sigma.get(r + 1, c) > sigma.get(r, c) && r < sigma.height(c)).count()
}

fn quinv_triples(sigma: &Filling, unequal_only: bool) -> usize {
    let mut total = 0;
    for r in 1..=sigma.num_rows() {
        let row = sigma.row(r);
        for (i, &b) in row.iter().enumerate() {
            let c1 = i + 1;
            let a = sigma.get(r + 1, c1);
            let h1 = sigma.height(c1);
            for (j, &c) in row.iter().enumerate().skip(i + 1) {
                if unequal_only && sigma.height(j + 1) == h1 {
                    continue;
                }
                total += q3(a, b, c) as usize;
            }
        }
    }
    total
}

fn inv_triples(sigma: &Filling, unequal_only: bool) -> usize {
    let mut total = 0;
    for r in 1..=sigma.num_rows() {
        let row = sigma.row(r);
        for (i, &a) in row.iter().enumerate() {
            let c1 = i + 1;
            let b = sigma.get(r - 1, c1);
            let h1 = sigma.height(c1);
            for (j, &c) in row.iter().enumerate().skip(i + 1) {
                if unequal_only && sigma.height(j + 1) == h1 {
                    continue;
                }
                total += q3(a, b, c) as usize;
            }
        }
    }
    total
}

pub fn quinv(sigma: &Filling) -> usize {
    quinv_triples(sigma, false)
}

pub fn inv(sigma: &Filling) -> usize {
    inv_triples(sigma, false)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Rel {
    Gt,
    Ge,
}

/// A weak chain such as `z>v>=w>u` over the variables `z, w, u, v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    vars: [usize; 4],
    rels: [Rel; 3],
    text: &'static str,
}

impl Chain {
    fn parse(text: &'static str) -> Chain {
        let mut vars = Vec::new();
        let mut rels = Vec::new();
        let mut rest = text;
        loop {
            let ch = rest.chars().next().expect("chain variable");
            vars.push(match ch {
                'z' => 0,
                'w' => 1,
                'u' => 2,
                'v' => 3,
                _ => panic!("bad chain {text}"),
            });
            rest = &rest[1..];
            if rest.is_empty() {
                break;
            }
            if let Some(r) = rest.strip_prefix(">=") {
                rels.push(Rel::Ge);
                rest = r;
            } else if let Some(r) = rest.strip_prefix('>') {
                rels.push(Rel::Gt);
                rest = r;
            } else {
                panic!("bad chain {text}");
            }
        }
        Chain { vars: vars.try_into().unwrap(), rels: rels.try_into().unwrap(), text }
    }

    /// True when `x = (z, w, u, v)` satisfies the chain.
    pub fn holds(&self, x: [u32; 4]) -> bool {
        (0..3).all(|k| {
            let (a, b) = (x[self.vars[k]], x[self.vars[k + 1]]);
            match self.rels[k] {
                Rel::Gt => a > b,
                Rel::Ge => a >= b,
            }
        })
    }

    /// The chain with `u` and `v` exchanged.
    pub fn swap_uv(&self) -> [usize; 4] {
        self.vars.map(|v| match v {
            2 => 3,
            3 => 2,
            o => o,
        })
    }

    pub fn text(&self) -> &'static str {
        self.text
    }

    /// Distinct representative values `(z, w, u, v)` satisfying the chain strictly.
    pub fn representative(&self) -> [u32; 4] {
        let mut x = [0; 4];
        for (pos, &var) in self.vars.iter().enumerate() {
            x[var] = 4 - pos as u32;
        }
        x
    }
}

/// The pattern pairs every set chooses from, for `z > w`.
pub const MANDATORY: [&str; 2] = ["z>v>=w>u", "u>=z>v>=w"];
pub const A1: [&str; 2] = ["z>w>v>u", "z>w>u>v"];
pub const A2: [&str; 2] = ["u>v>=z>w", "v>u>=z>w"];
pub const A3: [&str; 2] = ["z>u>v>=w", "z>v>u>=w"];
pub const A4: [&str; 2] = ["v>=z>w>u", "u>=z>w>v"];

/// Choices `(a1, a2, a3)` for the sets `S1..S8`, indices into the arrays above.
const CHOICES: [(usize, usize, usize); 8] =
    [(0, 0, 0), (0, 1, 0), (1, 0, 0), (1, 1, 0), (0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)];

/// Pattern class a quadruple with `z > w` can fall into.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PatternClass {
    A1,
    A2,
    A3,
    A4,
}

/// One of the eight quinv-quadruple sets.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QuadrupleSet(u8);

struct SetData {
    chains: Vec<Chain>,
    table: Vec<bool>,
}

fn cmp_code(x: [u32; 4]) -> usize {
    let mut code = 0;
    for i in 0..4 {
        for j in i + 1..4 {
            let d = match x[i].cmp(&x[j]) {
                std::cmp::Ordering::Less => 0,
                std::cmp::Ordering::Equal => 1,
                std::cmp::Ordering::Greater => 2,
            };
            code = code * 3 + d;
        }
    }
    code
}

fn set_data() -> &'static [SetData] {
    static DATA: OnceLock<Vec<SetData>> = OnceLock::new();
    DATA.get_or_init(|| {
        (1..=8u8)
            .map(|id| {
                let (a1, a2, a3) = CHOICES[id as usize - 1];
                let chains: Vec<Chain> = [MANDATORY[0], MANDATORY[1], A1[a1], A2[a2], A3[a3], A4[a3]]
                    .into_iter()
                    .map(Chain::parse)
                    .collect();
                let mut table = vec![false; 729];
                for code in 0..256u32 {
                    let x = [code & 3, (code >> 2) & 3, (code >> 4) & 3, (code >> 6) & 3];
                    table[cmp_code(x)] = membership_by_chains(&chains, x);
                }
                SetData { chains, table }
            })
            .collect()
    })
}

fn membership_by_chains(chains: &[Chain], x: [u32; 4]) -> bool {
    let [z, w, u, v] = x;
    if u == v {
        false
    } else if z == w {
        q3(z, u, v)
    } else if z < w {
        membership_by_chains(chains, [w, z, v, u])
    } else {
        chains.iter().any(|c| c.holds(x))
    }
}

impl QuadrupleSet {
    pub fn new(id: u8) -> Result<Self> {
        if (1..=8).contains(&id) {
            Ok(QuadrupleSet(id))
        } else {
            Err(Error::Parse(format!("quadruple set S{id} does not exist")))
        }
    }

    pub fn all() -> impl Iterator<Item = QuadrupleSet> {
        (1..=8).map(QuadrupleSet)
    }

    pub fn id(self) -> u8 {
        self.0
    }

    fn data(self) -> &'static SetData {
        &set_data()[self.0 as usize - 1]
    }

    /// Chains listed for `z > w`.
    pub fn chains(self) -> impl Iterator<Item = &'static str> {
        self.data().chains.iter().map(|c| c.text())
    }

    /// The chain chosen by this set within the given class.
    pub fn chosen(self, class: PatternClass) -> Chain {
        let (a1, a2, a3) = CHOICES[self.0 as usize - 1];
        Chain::parse(match class {
            PatternClass::A1 => A1[a1],
            PatternClass::A2 => A2[a2],
            PatternClass::A3 => A3[a3],
            PatternClass::A4 => A4[a3],
        })
    }

    /// Membership of the ordered quadruple `(z, w, u, v)`.
    #[inline]
    pub fn contains(self, z: u32, w: u32, u: u32, v: u32) -> bool {
        self.data().table[cmp_code([z, w, u, v])]
    }

    /// Membership evaluated directly from the chains (no table).
    pub fn contains_slow(self, z: u32, w: u32, u: u32, v: u32) -> bool {
        membership_by_chains(&self.data().chains, [z, w, u, v])
    }
}

pub fn quad_membership(s: QuadrupleSet, z: u32, w: u32, u: u32, v: u32) -> bool {
    s.contains(z, w, u, v)
}

impl fmt::Display for QuadrupleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S{}", self.0)
    }
}

impl fmt::Debug for QuadrupleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S{}", self.0)
    }
}

impl FromStr for QuadrupleSet {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let digits = s.trim().trim_start_matches(['S', 's']);
        let id: u8 = digits.parse().map_err(|_| Error::Parse(format!("bad quadruple set {s:?}")))?;
        QuadrupleSet::new(id)
    }
}

/// A member of the family: `eta` for a set, or its dual `eta*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EtaStatistic {
    pub set: QuadrupleSet,
    pub dual: bool,
}

impl EtaStatistic {
    pub fn new(set: QuadrupleSet, dual: bool) -> Self {
        EtaStatistic { set, dual }
    }

    /// All sixteen statistics.
    pub fn all() -> Vec<EtaStatistic> {
        [false, true]
            .into_iter()
            .flat_map(|dual| QuadrupleSet::all().map(move |set| EtaStatistic { set, dual }))
            .collect()
    }
}

impl fmt::Display for EtaStatistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.set, if self.dual { "*" } else { "" })
    }
}

/// Counts `S`-quadruples over all pairs of equal-height columns.
pub fn eta_s(sigma: &Filling, set: QuadrupleSet) -> usize {
    let mut total = 0;
    let w = sigma.width();
    for c1 in 1..=w {
        let h = sigma.height(c1);
        for c2 in c1 + 1..=w {
            if sigma.height(c2) != h {
                break;
            }
            for r in 1..=h {
                let (z, wv) = (sigma.get(r + 1, c1), sigma.get(r + 1, c2));
                let (u, v) = (sigma.get(r, c1), sigma.get(r, c2));
                total += set.contains(z, wv, u, v) as usize;
            }
        }
    }
    total
}

/// `S`-quadruples between rows `r` and `r + 1` inside columns `c0..c0 + w`
/// (all of equal height).
pub fn eta_s_between(sigma: &Filling, set: QuadrupleSet, r: usize, c0: usize, w: usize) -> usize {
    let mut total = 0;
    for c1 in c0..c0 + w {
        for c2 in c1 + 1..c0 + w {
            let (z, wv) = (sigma.get(r + 1, c1), sigma.get(r + 1, c2));
            let (u, v) = (sigma.get(r, c1), sigma.get(r, c2));
            total += set.contains(z, wv, u, v) as usize;
        }
    }
    total
}

/// Queue inversion triples whose `(a, b)` column is strictly taller than `c`'s.
pub fn quinv_unequal(sigma: &Filling) -> usize {
    quinv_triples(sigma, true)
}

/// Inversion triples whose `(a, b)` column is strictly taller than `c`'s.
pub fn inv_unequal(sigma: &Filling) -> usize {
    inv_triples(sigma, true)
}

pub fn eta(sigma: &Filling, stat: EtaStatistic, alphabet: u32) -> Result<usize> {
    if stat.dual {
        let pre = complement_flip(sigma, alphabet)?;
        Ok(eta_s(&pre, stat.set) + inv_unequal(sigma))
    } else {
        Ok(eta_s(sigma, stat.set) + quinv_unequal(sigma))
    }
}

/// `eta` for the primal statistics, which never depend on the alphabet.
pub fn eta_plus(sigma: &Filling, set: QuadrupleSet) -> usize {
    eta_s(sigma, set) + quinv_unequal(sigma)
}

pub fn eta_bar(sigma: &Filling, stat: EtaStatistic, alphabet: u32) -> Result<i64> {
    let total = sigma.shape().conjugate().n_stat() as i64;
    Ok(total - eta(sigma, stat, alphabet)? as i64)
}

/// Which compact formula a canonical family belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Mode {
    /// Canonical tableaux with `d_diamond`.
    Canonical,
    /// Dual canonical tableaux with `d_dagger`.
    Dual,
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "canonical" | "diamond" => Ok(Mode::Canonical),
            "dual" | "dagger" => Ok(Mode::Dual),
            _ => Err(Error::Parse(format!("unknown mode {s:?}"))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            match self {
                Mode::Canonical => "canonical",
                Mode::Dual => "dual",
            }
        )
    }
}

/// `(mode, statistic)` pairs for which the compact formula applies. Canonical
/// needs `v>u>=z>w` in the set; dual canonical needs `z>w>v>u`.
pub fn admissible_pairs() -> Vec<(Mode, EtaStatistic)> {
    let diamond = Chain::parse("v>u>=z>w").representative();
    let dagger = Chain::parse("z>w>v>u").representative();
    let mut out = Vec::new();
    for (mode, rep) in [(Mode::Canonical, diamond), (Mode::Dual, dagger)] {
        for dual in [false, true] {
            for set in QuadrupleSet::all() {
                if set.contains(rep[0], rep[1], rep[2], rep[3]) {
                    out.push((mode, EtaStatistic { set, dual }));
                }
            }
        }
    }
    out
}

pub fn is_admissible(mode: Mode, stat: EtaStatistic) -> bool {
    admissible_pairs().contains(&(mode, stat))
}

/// Any statistic that can pair with `maj`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Stat {
    Inv,
    Quinv,
    Eta(EtaStatistic),
}

impl Stat {
    pub fn value(self, sigma: &Filling, alphabet: u32) -> Result<usize> {
        match self {
            Stat::Inv => Ok(inv(sigma)),
            Stat::Quinv => Ok(quinv(sigma)),
            Stat::Eta(e) => eta(sigma, e, alphabet),
        }
    }

    /// Parses `inv`, `quinv`, `S1`..`S8`; `dual` turns `S_i` into its dual.
    pub fn parse(s: &str, dual: bool) -> Result<Stat> {
        let s = s.trim();
        let (s, star) = match s.strip_suffix('*') {
            Some(rest) => (rest, true),
            None => (s, false),
        };
        match s.to_ascii_lowercase().as_str() {
            "inv" => Ok(Stat::Inv),
            "quinv" => Ok(Stat::Quinv),
            _ => Ok(Stat::Eta(EtaStatistic { set: s.parse()?, dual: dual || star })),
        }
    }
}

impl fmt::Display for Stat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stat::Inv => write!(f, "inv"),
            Stat::Quinv => write!(f, "quinv"),
            Stat::Eta(e) => write!(f, "{e}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(i: u8) -> QuadrupleSet {
        QuadrupleSet::new(i).unwrap()
    }

    fn worked() -> Filling {
        Filling::parse_text("5 4 5\n3 6 3 1\n1 7 2 8").unwrap()
    }

    #[test]
    fn maj_small() {
        assert_eq!(maj(&Filling::from_rows(vec![vec![3, 1, 2]]).unwrap()), 0);
        assert_eq!(maj(&Filling::from_rows(vec![vec![1], vec![2]]).unwrap()), 1);
        assert_eq!(maj(&Filling::from_rows(vec![vec![2], vec![1]]).unwrap()), 0);
        assert_eq!(maj(&Filling::from_rows(vec![vec![1], vec![2], vec![3]]).unwrap()), 3);
    }

    #[test]
    fn one_row_words() {
        let f = Filling::from_rows(vec![vec![3, 1, 4, 2]]).unwrap();
        assert_eq!(inv(&f), 3);
        assert_eq!(quinv(&f), 3);
        let f = Filling::from_rows(vec![vec![1, 2, 3]]).unwrap();
        assert_eq!(inv(&f), 0);
        assert_eq!(quinv(&f), 3);
    }

    #[test]
    fn constant_square() {
        let f = Filling::from_rows(vec![vec![2, 2], vec![2, 2]]).unwrap();
        assert_eq!(quinv(&f), 0);
        assert_eq!(inv(Filling::from_rows(vec![vec![1], vec![2]]).as_ref().unwrap()), 0);
    }

    #[test]
    fn worked_quadruples() {
        let s2 = s(2);
        assert!(s2.contains(0, 0, 4, 5));
        assert!(s2.contains(5, 4, 3, 6));
        assert!(s2.contains(4, 5, 6, 3));
        assert!(s2.contains(3, 3, 1, 2));
        assert!(q3(4, 6, 1) && q3(6, 7, 8));
        assert_eq!(eta_s(&worked(), s2), 4);
        assert_eq!(eta(&worked(), EtaStatistic::new(s2, false), 8).unwrap(), 6);
        let bar = eta_bar(&worked(), EtaStatistic::new(s2, false), 8).unwrap();
        assert_eq!(bar, 4 * 3 / 2 * 2 + 3 - 6);
    }

    #[test]
    fn sets_are_distinct_and_symmetric() {
        let mut tables = Vec::new();
        for set in QuadrupleSet::all() {
            let mut t = Vec::new();
            for code in 0..625u32 {
                let x = [code % 5, code / 5 % 5, code / 25 % 5, code / 125 % 5];
                let m = set.contains(x[0], x[1], x[2], x[3]);
                assert_eq!(m, set.contains_slow(x[0], x[1], x[2], x[3]));
                if x[2] == x[3] {
                    assert!(!m);
                } else {
                    assert_ne!(m, set.contains(x[0], x[1], x[3], x[2]));
                }
                if x[0] != x[1] {
                    assert_eq!(m, set.contains(x[1], x[0], x[3], x[2]));
                }
                t.push(m);
            }
            tables.push(t);
        }
        tables.sort();
        tables.dedup();
        assert_eq!(tables.len(), 8);
    }

    #[test]
    fn admissible() {
        let pairs = admissible_pairs();
        assert_eq!(pairs.len(), 16);
        assert!(is_admissible(Mode::Canonical, EtaStatistic::new(s(2), false)));
        assert!(!is_admissible(Mode::Canonical, EtaStatistic::new(s(1), false)));
        let diamond: Vec<u8> =
            pairs.iter().filter(|(m, e)| *m == Mode::Canonical && !e.dual).map(|(_, e)| e.set.id()).collect();
        assert_eq!(diamond, vec![2, 4, 7, 8]);
        let dagger: Vec<u8> =
            pairs.iter().filter(|(m, e)| *m == Mode::Dual && !e.dual).map(|(_, e)| e.set.id()).collect();
        assert_eq!(dagger, vec![1, 2, 5, 7]);
    }

    #[test]
    fn parse_stats() {
        assert_eq!(Stat::parse("quinv", false).unwrap(), Stat::Quinv);
        assert_eq!(Stat::parse("S3", true).unwrap(), Stat::Eta(EtaStatistic::new(s(3), true)));
        assert_eq!(Stat::parse("s5*", false).unwrap(), Stat::Eta(EtaStatistic::new(s(5), true)));
        assert!(Stat::parse("S9", false).is_err());
    }
}
