//! Exhaustive and sampled checks of the identities between statistics,
//! bijections and formulas. Each check returns a [`Report`].

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::canonical::*;
use crate::diagrams::{complement_flip, enumerate_fillings, rect_ranges, Filling, Partition};
use crate::flips::{a2_pairs, delta_mut, g_bijection, gamma, rho_mut};
use crate::golden;
use crate::monomial::{htilde_brute_force, htilde_monomial, p_lambda_mu, p_summands};
use crate::qt::QtPoly;
use crate::statistics::{
    admissible_pairs, descents_between, eta, inv, maj, quinv, EtaStatistic, Mode, QuadrupleSet, Stat,
};

/// Outcome of one check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub check: String,
    pub params: Value,
    pub pass: bool,
    pub detail: String,
}

impl Report {
    fn new(check: &str, params: Value, failures: Vec<String>, summary: String) -> Report {
        let pass = failures.is_empty();
        let detail = if pass {
            summary
        } else {
            let shown: Vec<&str> = failures.iter().take(3).map(|s| s.as_str()).collect();
            format!("{} failure(s); first: {}", failures.len(), shown.join("; "))
        };
        Report { check: check.to_string(), params, pass, detail }
    }

    /// Merges several reports into one under `check`.
    pub fn all(check: &str, params: Value, parts: Vec<Report>) -> Report {
        let failed: Vec<&Report> = parts.iter().filter(|r| !r.pass).collect();
        let detail = if failed.is_empty() {
            format!("{} checks", parts.len())
        } else {
            failed.iter().map(|r| format!("{} {}: {}", r.check, r.params, r.detail)).collect::<Vec<_>>().join("; ")
        };
        Report { check: check.to_string(), params, pass: failed.is_empty(), detail }
    }
}

/// Partitions whose diagram fits in `outer`.
pub fn shapes_within(outer: &str) -> Vec<Partition> {
    outer.parse::<Partition>().expect("valid shape").sub_shapes().into_iter().filter(|l| !l.is_empty()).collect()
}

fn row_class_key(f: &Filling) -> Vec<Vec<u32>> {
    f.rows()
        .iter()
        .map(|r| {
            let mut r = r.clone();
            r.sort_unstable();
            r
        })
        .collect()
}

fn add_monomial(p: &mut QtPoly, qe: usize, te: usize) {
    p.add_term(qe as i64, te as i64, 1.into());
}

/// Within every row-equivalence class, `(maj, eta)` is distributed like
/// `(maj, quinv)` for all sixteen statistics.
pub fn sixteen_statistics(lam: &Partition, alphabet: u32) -> Report {
    let stats = EtaStatistic::all();
    let mut classes: HashMap<Vec<Vec<u32>>, (QtPoly, Vec<QtPoly>)> = HashMap::new();
    for f in enumerate_fillings(lam, alphabet) {
        let m = maj(&f);
        let entry = classes.entry(row_class_key(&f)).or_insert_with(|| (QtPoly::zero(), vec![QtPoly::zero(); 16]));
        add_monomial(&mut entry.0, m, quinv(&f));
        for (slot, &s) in entry.1.iter_mut().zip(&stats) {
            add_monomial(slot, m, eta(&f, s, alphabet).expect("alphabet covers entries"));
        }
    }
    let mut failures = Vec::new();
    for (key, (base, per_stat)) in &classes {
        for (p, s) in per_stat.iter().zip(&stats) {
            if p != base {
                failures.push(format!("{s} on class {key:?}: {p} vs {base}"));
            }
        }
    }
    Report::new(
        "sixteen-statistics",
        json!({"shape": lam.to_string(), "alphabet": alphabet}),
        failures,
        format!("{} classes x 16 statistics", classes.len()),
    )
}

/// On rectangles, `(inv, quinv)` is jointly symmetric within each
/// row-equivalence class at fixed `maj`. A non-rectangular shape is checked
/// on the rectangle formed by its columns of height `restrict_to`.
pub fn joint_symmetry(lam: &Partition, alphabet: u32, restrict_to: Option<usize>) -> Report {
    let rect = restrict_to.map(|h| {
        rect_ranges(lam).into_iter().find(|r| r.height == h && r.width > 0).expect("rectangle of that height")
    });
    let mut hist: HashMap<(Vec<Vec<u32>>, usize), BTreeMap<(usize, usize), usize>> = HashMap::new();
    for f in enumerate_fillings(lam, alphabet) {
        let g = match &rect {
            Some(r) => f.block(1, r.height, r.start, r.width),
            None => f,
        };
        *hist.entry((row_class_key(&g), maj(&g))).or_default().entry((inv(&g), quinv(&g))).or_default() += 1;
    }
    let mut failures = Vec::new();
    for ((key, m), h) in &hist {
        for (&(a, b), &n) in h {
            if h.get(&(b, a)).copied().unwrap_or(0) != n {
                failures.push(format!("class {key:?}, maj {m}: ({a},{b}) x{n}"));
            }
        }
    }
    Report::new(
        "joint-symmetry",
        json!({"shape": lam.to_string(), "alphabet": alphabet, "restrict_to_height": restrict_to}),
        failures,
        format!("{} (class, maj) cells", hist.len()),
    )
}

/// `gamma` for every set: a bijection on the fillings, row-equivalent, fixing
/// each rectangle's top row and per-row descent counts, and carrying
/// `(maj, quinv)` to `(maj, eta)`.
pub fn gamma_transport(lam: &Partition, alphabet: u32) -> Report {
    let all: Vec<Filling> = enumerate_fillings(lam, alphabet).collect();
    let rects: Vec<_> = rect_ranges(lam).into_iter().filter(|r| r.width > 0).collect();
    let failures: Vec<String> = QuadrupleSet::all()
        .collect::<Vec<_>>()
        .par_iter()
        .flat_map(|&set| {
            let stat = EtaStatistic::new(set, false);
            let mut failures = Vec::new();
            let mut images = BTreeSet::new();
            for sigma in &all {
                let g = match gamma(sigma, set) {
                    Ok(g) => g,
                    Err(e) => {
                        failures.push(format!("{set} {sigma:?}: {e}"));
                        continue;
                    }
                };
                if row_class_key(&g) != row_class_key(sigma) {
                    failures.push(format!("{set} {sigma:?}: rows changed"));
                }
                for r in &rects {
                    if (0..r.width).any(|d| g.get(r.height, r.start + d) != sigma.get(r.height, r.start + d)) {
                        failures.push(format!("{set} {sigma:?}: top row of a rectangle moved"));
                    }
                    for row in 1..r.height {
                        if descents_between(&g, row, r.start, r.width) != descents_between(sigma, row, r.start, r.width)
                        {
                            failures.push(format!("{set} {sigma:?}: descents between rows {row}, {}", row + 1));
                        }
                    }
                }
                let lhs = (maj(&g), eta(&g, stat, alphabet).unwrap());
                let rhs = (maj(sigma), quinv(sigma));
                if lhs != rhs {
                    failures.push(format!("{set} {sigma:?}: (maj, eta) {lhs:?} vs (maj, quinv) {rhs:?}"));
                }
                images.insert(g);
            }
            if images.len() != all.len() {
                failures.push(format!("{set}: {} images for {} fillings", images.len(), all.len()));
            }
            failures
        })
        .collect();
    Report::new(
        "gamma-transport",
        json!({"shape": lam.to_string(), "alphabet": alphabet}),
        failures,
        format!("{} fillings x 8 sets", all.len()),
    )
}

/// The printed two-row `gamma` example.
pub fn gamma_worked_example() -> Report {
    let (tau, image, value, m) = golden::gamma_two_row();
    let set = QuadrupleSet::new(2).unwrap();
    let mut failures = Vec::new();
    match gamma(&tau, set) {
        Ok(g) => {
            if g != image {
                failures.push(format!("gamma gave {}", g.to_text().replace('\n', " / ")));
            }
            let e = eta(&g, EtaStatistic::new(set, false), 8).unwrap();
            if quinv(&tau) != value || e != value || maj(&g) != m {
                failures.push(format!("quinv {} eta {} maj {}", quinv(&tau), e, maj(&g)));
            }
        }
        Err(e) => failures.push(e.to_string()),
    }
    Report::new("gamma-worked-example", json!({}), failures, format!("quinv = eta = {value}, maj = {m}"))
}

/// The fibers of `canonicalize` are exactly the families `G(sigma)`, and
/// they cover every filling once.
pub fn partition_property(lam: &Partition, alphabet: u32, mode: Mode) -> Report {
    let mut fibers: BTreeMap<Filling, BTreeSet<Filling>> = BTreeMap::new();
    let mut failures = Vec::new();
    let mut total = 0;
    for tau in enumerate_fillings(lam, alphabet) {
        total += 1;
        let (sigma, _) = canonicalize(&tau, mode);
        fibers.entry(sigma).or_default().insert(tau);
    }
    let canon: BTreeSet<Filling> = enumerate_canonical(lam, alphabet, mode).into_iter().collect();
    if canon.len() != fibers.len() {
        failures.push(format!("{} canonical tableaux but {} fibers", canon.len(), fibers.len()));
    }
    for (sigma, fiber) in &fibers {
        if !canon.contains(sigma) {
            failures.push(format!("{sigma:?} is not canonical"));
            continue;
        }
        let fam = generate_family(sigma, mode).expect("canonical");
        let set: BTreeSet<Filling> = fam.iter().cloned().collect();
        if set.len() != fam.len() || &set != fiber {
            failures.push(format!("family of {sigma:?} differs from its fiber"));
        }
    }
    Report::new(
        "partition-property",
        json!({"shape": lam.to_string(), "alphabet": alphabet, "mode": mode.to_string()}),
        failures,
        format!("{total} fillings in {} families", fibers.len()),
    )
}

/// `sum_{tau in G(sigma)} q^maj t^eta = q^maj(sigma) t^eta(sigma) d(sigma)`
/// for every admissible pair; dual statistics are read on the
/// complemented, flipped filling.
pub fn family_sums(lam: &Partition, alphabet: u32) -> Report {
    let failures: Vec<String> = admissible_pairs()
        .par_iter()
        .flat_map(|&(mode, stat)| {
            let image = |f: &Filling| if stat.dual { complement_flip(f, alphabet).unwrap() } else { f.clone() };
            let mut failures = Vec::new();
            for sigma in enumerate_canonical(lam, alphabet, mode) {
                let d = d_coeff(&sigma, mode).unwrap();
                let s = image(&sigma);
                let want = d.shift(maj(&s) as i64, eta(&s, stat, alphabet).unwrap() as i64);
                let mut got = QtPoly::zero();
                for tau in generate_family(&sigma, mode).unwrap() {
                    let t = image(&tau);
                    add_monomial(&mut got, maj(&t), eta(&t, stat, alphabet).unwrap());
                }
                if got != want {
                    failures.push(format!("{mode} {stat} {sigma:?}: {got} vs {want}"));
                }
            }
            failures
        })
        .collect();
    Report::new(
        "family-sums",
        json!({"shape": lam.to_string(), "alphabet": alphabet}),
        failures,
        format!("{} admissible pairs", admissible_pairs().len()),
    )
}

/// The compact sums equal the brute-force sums for every admissible pair.
pub fn compact_formula(lam: &Partition, alphabet: u32) -> Report {
    let mut failures = Vec::new();
    for (mode, stat) in admissible_pairs() {
        let brute = htilde_brute_force(lam, alphabet, Stat::Eta(stat)).unwrap();
        let compact = compact_htilde(lam, alphabet, mode, stat).unwrap();
        if brute != compact {
            failures.push(format!("{mode} {stat}"));
        }
    }
    Report::new(
        "compact-formula",
        json!({"shape": lam.to_string(), "alphabet": alphabet}),
        failures,
        format!("{} admissible pairs", admissible_pairs().len()),
    )
}

/// The four formulas for `P_{lambda mu}` agree and have no negative
/// exponents, for all `|lambda| = |mu| = size`.
pub fn formulas_agree(size: usize) -> Report {
    let shapes = Partition::all_of(size);
    let pairs: Vec<(Partition, Partition)> =
        shapes.iter().flat_map(|l| shapes.iter().map(move |m| (l.clone(), m.clone()))).collect();
    let failures: Vec<String> = pairs
        .par_iter()
        .filter_map(|(lam, mu)| {
            let p1 = p_lambda_mu(lam, mu, 1).unwrap();
            if !p1.is_zero() && !p1.in_natural_qt() {
                return Some(format!("{lam} {mu}: negative exponents"));
            }
            (2..=4)
                .find(|&f| p_lambda_mu(lam, mu, f).unwrap() != p1)
                .map(|f| format!("{lam} {mu}: formula {f} differs from formula 1"))
        })
        .collect();
    Report::new("formulas-agree", json!({"size": size}), failures, format!("{} (lambda, mu) pairs", pairs.len()))
}

/// The monomial expansion equals the brute-force `(maj, inv)` sum.
pub fn monomial_expansion(size: usize) -> Report {
    let mut failures = Vec::new();
    for lam in Partition::all_of(size) {
        let brute = htilde_brute_force(&lam, size as u32, Stat::Inv).unwrap();
        for f in 1..=4 {
            if htilde_monomial(&lam, size, f).unwrap() != brute {
                failures.push(format!("{lam} formula {f}"));
            }
        }
    }
    Report::new("monomial-expansion", json!({"size": size}), failures, "all shapes, formulas 1-4".into())
}

fn sorted_strings(v: &[QtPoly]) -> Vec<String> {
    let mut out: Vec<String> = v.iter().map(|p| p.to_string()).collect();
    out.sort();
    out
}

/// Summands and systems for `lambda = (3,2)`, `mu = (4,1)` under the first two
/// formulas, in printed order.
pub fn printed_summands_3_2() -> Report {
    let mut failures = Vec::new();
    let (lam, mu, first, second) = golden::summands_3_2();
    for (formula, want) in [(1, first), (2, second)] {
        let got = p_summands(&lam, &mu, formula).unwrap();
        let systems: Vec<String> = got.iter().map(|(s, _)| s.to_string()).collect();
        if systems != golden::systems_3_2() {
            failures.push(format!("systems for {lam}, {mu}: {systems:?}"));
        }
        let values: Vec<QtPoly> = got.into_iter().map(|(_, p)| p).collect();
        if values != want {
            failures.push(format!("formula {formula}: {values:?}"));
        }
    }
    Report::new(
        "printed-summands",
        json!({"shape": lam.to_string(), "mu": mu.to_string(), "formulas": [1, 2]}),
        failures,
        "3 + 3 summands match in order".into(),
    )
}

/// Summands of `P(1/q, 1/t)` for `lambda = mu = (4,2)` under the last two
/// formulas, as multisets.
pub fn printed_summands_4_2() -> Report {
    let mut failures = Vec::new();
    let (lam, third, fourth) = golden::summands_4_2();
    for (formula, want) in [(3, third), (4, fourth)] {
        let got = p_summands(&lam, &lam, formula).unwrap();
        let systems: BTreeSet<String> = got.iter().map(|(s, _)| s.to_string()).collect();
        let printed: BTreeSet<String> = golden::systems_4_2().into_iter().map(String::from).collect();
        if systems != printed {
            failures.push(format!("systems: {systems:?}"));
        }
        let values: Vec<QtPoly> = got.iter().map(|(_, p)| p.substitute_q_inverse().substitute_t_inverse()).collect();
        if sorted_strings(&values) != sorted_strings(&want) {
            failures.push(format!("formula {formula}: {values:?}"));
        }
    }
    Report::new(
        "printed-summands",
        json!({"shape": lam.to_string(), "mu": lam.to_string(), "formulas": [3, 4]}),
        failures,
        "6 + 6 summands match as multisets".into(),
    )
}

/// Printed values of `n(lambda)`.
pub fn printed_n_values() -> Report {
    let failures = golden::n_values()
        .into_iter()
        .filter(|(lam, n)| lam.n_stat() != *n)
        .map(|(lam, _)| format!("n({lam}) = {}", lam.n_stat()))
        .collect();
    Report::new("n-values", json!({}), failures, "n(4,2) = 2, n(2,2,1,1) = 7".into())
}

/// All printed summands, systems and `n(lambda)` values.
pub fn printed_numerics() -> Report {
    Report::all("printed-numerics", json!({}), vec![printed_summands_3_2(), printed_summands_4_2(), printed_n_values()])
}

/// `eta_S` and `eta` on the three-row worked tableau.
pub fn eta_worked_example() -> Report {
    let (f, set, eta_s_value, eta_value) = golden::eta_tableau();
    let got_s = crate::statistics::eta_s(&f, set);
    let got = eta(&f, EtaStatistic::new(set, false), 8).unwrap();
    let failures = if (got_s, got) == (eta_s_value, eta_value) {
        Vec::new()
    } else {
        vec![format!("eta_S = {got_s}, eta = {got}")]
    };
    Report::new(
        "eta-worked-example",
        json!({"set": set.to_string()}),
        failures,
        format!("eta_S = {eta_s_value}, eta = {eta_value}"),
    )
}

/// The `(5,5,5)` filling canonicalizes to the printed tableau through the
/// printed `delta` moves.
pub fn canonicalize_worked_example() -> Report {
    let (tau, sigma) = golden::canonicalize_three_rows();
    let (got, trace) = canonicalize(&tau, Mode::Canonical);
    let mut failures = Vec::new();
    if got != sigma {
        failures.push(format!("canonical form {}", got.to_text().replace('\n', " / ")));
    }
    let moves: Vec<(usize, usize)> = trace.ops.iter().map(|op| (op.col, op.row)).collect();
    if moves != golden::canonicalize_three_rows_moves() {
        failures.push(format!("moves {moves:?}"));
    }
    Report::new("canonicalize-worked-example", json!({}), failures, format!("{} delta moves", moves.len()))
}

/// Runs the worked example `id` (a name or alias).
pub fn example(id: &str) -> Option<Report> {
    let report = match golden::resolve_example(id)? {
        "eta-on-a-three-row-tableau" => eta_worked_example(),
        "gamma-two-row" => gamma_worked_example(),
        "canonicalize-three-rows" => canonicalize_worked_example(),
        "formulas-one-two-at-3-2" => printed_summands_3_2(),
        "formulas-three-four-at-4-2" => printed_summands_4_2(),
        _ => return None,
    };
    Some(report)
}

fn random_filling(rng: &mut ChaCha8Rng) -> Filling {
    let rows = rng.gen_range(1..=4);
    let mut parts: Vec<usize> = (0..rows).map(|_| rng.gen_range(1..=6)).collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    let alphabet = rng.gen_range(1..=6);
    let body = parts.iter().map(|&p| (0..p).map(|_| rng.gen_range(1..=alphabet)).collect()).collect();
    Filling::from_rows(body).expect("random rows form a partition")
}

/// `rho_i^r` and `delta_i^r` are involutions on random valid inputs.
pub fn involutions(samples: usize, seed: u64) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let mut done = 0;
    while done < samples {
        let f = random_filling(&mut rng);
        let pairs: Vec<usize> = (1..f.width()).filter(|&i| f.height(i) == f.height(i + 1)).collect();
        if pairs.is_empty() {
            continue;
        }
        let i = pairs[rng.gen_range(0..pairs.len())];
        let r = rng.gen_range(1..=f.height(i));
        for (name, op) in [("rho", rho_mut as fn(&mut Filling, usize, usize)), ("delta", delta_mut)] {
            let mut g = f.clone();
            op(&mut g, i, r);
            op(&mut g, i, r);
            if g != f {
                failures.push(format!("{name}_{i}^{r} on {f:?}"));
            }
        }
        done += 1;
    }
    Report::new("involutions", json!({"samples": samples, "seed": seed}), failures, format!("{samples} inputs"))
}

fn braid_holds(f: &Filling, op: fn(&mut Filling, usize, usize), i: usize, r: usize) -> bool {
    let mut a = f.clone();
    let mut b = f.clone();
    for c in [i, i + 1, i] {
        op(&mut a, c, r);
    }
    for c in [i + 1, i, i + 1] {
        op(&mut b, c, r);
    }
    a == b
}

/// Rectangular fillings of the given width, one to `height` rows, with every
/// `(i, r)` at which a braid relation can be applied.
fn braid_cases(width: usize, height: usize, alphabet: u32) -> impl Iterator<Item = (Filling, usize, usize)> {
    (1..=height).flat_map(move |h| {
        let lam = Partition::new(vec![width; h]).expect("rectangle");
        let positions: Vec<(usize, usize)> =
            (1..width.saturating_sub(1)).flat_map(|i| (1..=h).map(move |r| (i, r))).collect();
        enumerate_fillings(&lam, alphabet)
            .flat_map(move |f| positions.clone().into_iter().map(move |(i, r)| (f.clone(), i, r)))
    })
}

/// `delta_i^r delta_{i+1}^r delta_i^r = delta_{i+1}^r delta_i^r delta_{i+1}^r`
/// on every rectangle of the given width and at most `height` rows.
pub fn delta_braid(width: usize, height: usize, alphabet: u32) -> Report {
    let mut failures = Vec::new();
    let mut count = 0;
    for (f, i, r) in braid_cases(width, height, alphabet) {
        count += 1;
        if !braid_holds(&f, delta_mut, i, r) {
            failures.push(format!("i = {i}, r = {r} on {f:?}"));
        }
    }
    Report::new(
        "delta-braid",
        json!({"width": width, "height": height, "alphabet": alphabet}),
        failures,
        format!("{count} (filling, i, r) cases"),
    )
}

/// Searches for a filling on which `rho` breaks the braid relation; the check
/// passes when one is found.
pub fn rho_braid_counterexample(width: usize, height: usize, alphabet: u32) -> Report {
    let found = braid_cases(width, height, alphabet).find(|(f, i, r)| !braid_holds(f, rho_mut, *i, *r));
    let (failures, detail) = match &found {
        Some((f, i, r)) => {
            (Vec::new(), format!("rho fails at i = {i}, r = {r} on {}", f.to_text().replace('\n', " / ")))
        }
        None => (vec!["no counterexample".to_string()], String::new()),
    };
    Report::new(
        "rho-braid-counterexample",
        json!({"width": width, "height": height, "alphabet": alphabet}),
        failures,
        detail,
    )
}

/// `L_p` identities on every neutral block of every canonical tableau.
pub fn length_identities(lam: &Partition, alphabet: u32) -> Report {
    let rects: Vec<_> = rect_ranges(lam).into_iter().filter(|r| r.width > 0).collect();
    let mut failures = Vec::new();
    let mut blocks = 0;
    for full in enumerate_canonical(lam, alphabet, Mode::Canonical) {
        for rect in rects.iter().map(|rc| full.block(1, rc.height, rc.start, rc.width)) {
            for r in 1..=rect.num_rows() {
                for b in extract_blocks(&rect, r).into_iter().filter(|b| b.kind == BlockKind::Neutral) {
                    blocks += 1;
                    let a = b.upper_neighbor[0];
                    let clamped = alpha(&b).expect("neutral");
                    let multinomial = multiplicity_multinomial(&clamped);
                    if length_generating_function(&clamped) != multinomial {
                        failures.push(format!("length sum of {clamped:?}"));
                    }
                    if clamped_length_sum(&b.entries, a) != multinomial {
                        failures.push(format!("clamped length sum of {:?} under {a}", b.entries));
                    }
                    if a > 0 {
                        for w in crate::diagrams::distinct_permutations(&b.entries) {
                            if length_from(&b.entries, &w).unwrap() != lessdot_inv(&w, a - 1, alphabet) {
                                failures.push(format!("L_p({w:?}) for p = {:?} under {a}", b.entries));
                            }
                        }
                    }
                }
            }
        }
    }
    Report::new(
        "length-identities",
        json!({"shape": lam.to_string(), "alphabet": alphabet}),
        failures,
        format!("{blocks} neutral blocks"),
    )
}

/// The closed forms for `maj`, the non-`S2` quadruples and the non-`quinv`
/// triples against direct counts on canonical tableaux.
pub fn closed_forms(lam: &Partition, alphabet: u32) -> Report {
    use crate::statistics::eta_s_between;
    let set = QuadrupleSet::new(2).unwrap();
    let stat = EtaStatistic::new(set, false);
    let rects: Vec<_> = rect_ranges(lam).into_iter().filter(|r| r.width > 0).collect();
    let mut failures = Vec::new();
    let mut count = 0;
    for sigma in enumerate_canonical(lam, alphabet, Mode::Canonical) {
        count += 1;
        let data = NuSData::of(&sigma, alphabet, Mode::Canonical).unwrap();
        let mut pairs = 0i64;
        let mut maj_total = 0;
        for rect in &rects {
            let j = rect.height;
            for i in 1..=j {
                let s = &data.s[j - 1][i - 1];
                let desc = if i < j { descents_between(&sigma, i, rect.start, rect.width) } else { 0 };
                if pair_maj_closed(s, i, j) != (j - i) * desc {
                    failures.push(format!("maj of rows {i}, {} in {sigma:?}", i + 1));
                }
                maj_total += pair_maj_closed(s, i, j);
                let w = rect.width as i64;
                let direct = w * (w - 1) / 2 - eta_s_between(&sigma, set, i, rect.start, rect.width) as i64;
                if pair_eta_bar_closed(s, &data.nu[j - 1][i - 1]) != direct {
                    failures.push(format!("eta bar of rows {i}, {} in {sigma:?}", i + 1));
                }
                pairs += direct;
            }
        }
        if maj_total != maj(&sigma) {
            failures.push(format!("maj of {sigma:?}"));
        }
        let eta_bar = lam.conjugate().n_stat() as i64 - eta(&sigma, stat, alphabet).unwrap() as i64;
        if quinv_bar_closed(&data, lam) != eta_bar - pairs {
            failures.push(format!("quinv bar of {sigma:?}"));
        }
    }
    Report::new(
        "closed-forms",
        json!({"shape": lam.to_string(), "alphabet": alphabet}),
        failures,
        format!("{count} canonical tableaux"),
    )
}

/// For sets differing only in `a2`, `(maj, eta_i)` and `(maj, eta_j)` have the
/// same distribution over every family `G(sigma)`.
pub fn a2_distribution(lam: &Partition, alphabet: u32) -> Report {
    let mut failures = Vec::new();
    let canon = enumerate_canonical(lam, alphabet, Mode::Canonical);
    for sigma in &canon {
        let fam = generate_family(sigma, Mode::Canonical).unwrap();
        for (si, sj) in a2_pairs() {
            let dist = |s: QuadrupleSet| {
                let mut p = QtPoly::zero();
                for tau in &fam {
                    add_monomial(&mut p, maj(tau), eta(tau, EtaStatistic::new(s, false), alphabet).unwrap());
                }
                p
            };
            if dist(si) != dist(sj) {
                failures.push(format!("{si}/{sj} over the family of {sigma:?}"));
            }
        }
    }
    Report::new(
        "a2-distribution",
        json!({"shape": lam.to_string(), "alphabet": alphabet}),
        failures,
        format!("{} families x {} set pairs", canon.len(), a2_pairs().len()),
    )
}

/// Two-row rectangles with non-descent columns and a weakly decreasing top row.
pub fn g_domain(width: usize, alphabet: u32) -> Vec<Filling> {
    let lam = Partition::new(vec![width; 2]).expect("rectangle");
    enumerate_fillings(&lam, alphabet)
        .filter(|f| {
            (1..=width).all(|c| f.get(2, c) <= f.get(1, c)) && (1..width).all(|c| f.get(2, c) >= f.get(2, c + 1))
        })
        .collect()
}

/// `g` is a bijection of its domain, keeps rows, carries `(maj, eta_i)` to
/// `(maj, eta_j)` and is undone by its reverse.
pub fn g_transport(width: usize, alphabet: u32) -> Report {
    let domain = g_domain(width, alphabet);
    let members: BTreeSet<&Filling> = domain.iter().collect();
    let mut failures = Vec::new();
    for (si, sj) in a2_pairs() {
        let (ei, ej) = (EtaStatistic::new(si, false), EtaStatistic::new(sj, false));
        let mut images = BTreeSet::new();
        for sigma in &domain {
            let g = g_bijection(sigma, si, sj).unwrap();
            if !members.contains(&g) || row_class_key(&g) != row_class_key(sigma) {
                failures.push(format!("{si}->{sj}: {sigma:?} leaves the domain"));
                continue;
            }
            let lhs = (maj(sigma), eta(sigma, ei, alphabet).unwrap());
            let rhs = (maj(&g), eta(&g, ej, alphabet).unwrap());
            if lhs != rhs {
                failures.push(format!("{si}->{sj}: {sigma:?} {lhs:?} vs {rhs:?}"));
            }
            if g_bijection(&g, sj, si).ok().as_ref() != Some(sigma) {
                failures.push(format!("{si}->{sj}: reverse does not undo {sigma:?}"));
            }
            images.insert(g);
        }
        if images.len() != domain.len() {
            failures.push(format!("{si}->{sj}: not injective"));
        }
    }
    Report::new(
        "g-transport",
        json!({"width": width, "alphabet": alphabet}),
        failures,
        format!("{} tableaux x {} set pairs", domain.len(), a2_pairs().len()),
    )
}

// Acceptance criteria, at the sizes they are stated for.

fn shape(s: &str) -> Partition {
    s.parse().expect("valid shape")
}

fn shapes_up_to(n: usize) -> Vec<Partition> {
    (1..=n).flat_map(Partition::all_of).collect()
}

fn criterion_sixteen_statistics() -> Report {
    let parts = shapes_up_to(5).iter().map(|l| sixteen_statistics(l, 3)).collect();
    Report::all("sixteen statistics agree with quinv", json!({"max_size": 5, "alphabet": 3}), parts)
}

fn criterion_joint_symmetry() -> Report {
    let parts = vec![
        joint_symmetry(&shape("2,2"), 3, None),
        joint_symmetry(&shape("3,3"), 3, None),
        joint_symmetry(&shape("3,2"), 3, Some(2)),
    ];
    Report::all("joint symmetry of inv and quinv", json!({}), parts)
}

fn criterion_gamma_transport() -> Report {
    let mut parts: Vec<Report> = ["2,2", "3,2", "2,2,1"].iter().map(|s| gamma_transport(&shape(s), 3)).collect();
    parts.push(gamma_worked_example());
    Report::all("gamma transports quinv to eta", json!({"alphabet": 3}), parts)
}

fn criterion_compact_formula() -> Report {
    let mut parts = Vec::new();
    for lam in shapes_within("3,3") {
        for n in 1..=4 {
            for mode in [Mode::Canonical, Mode::Dual] {
                parts.push(partition_property(&lam, n, mode));
            }
            parts.push(family_sums(&lam, n));
            parts.push(compact_formula(&lam, n));
        }
    }
    Report::all("canonical families and the compact formula", json!({"outer": "3,3", "max_alphabet": 4}), parts)
}

fn criterion_monomial_formulas() -> Report {
    let mut parts: Vec<Report> = (1..=6).map(formulas_agree).collect();
    parts.extend((1..=5).map(monomial_expansion));
    Report::all("monomial formulas", json!({"formulas_up_to": 6, "brute_force_up_to": 5}), parts)
}

fn criterion_flip_relations() -> Report {
    let parts = vec![involutions(10_000, 0x5eed), delta_braid(3, 3, 3), rho_braid_counterexample(3, 3, 3)];
    Report::all("flip involutions and braid relations", json!({}), parts)
}

fn criterion_length_identities() -> Report {
    let mut parts = Vec::new();
    for lam in shapes_within("3,3") {
        for n in 1..=4 {
            parts.push(length_identities(&lam, n));
            parts.push(closed_forms(&lam, n));
        }
    }
    Report::all("length identities and closed forms", json!({"outer": "3,3", "max_alphabet": 4}), parts)
}

fn criterion_a2_distribution() -> Report {
    let mut parts = Vec::new();
    for lam in shapes_within("3,3") {
        for n in 1..=4 {
            parts.push(a2_distribution(&lam, n));
        }
    }
    for width in 1..=4 {
        for n in 1..=4 {
            parts.push(g_transport(width, n));
        }
    }
    Report::all("a2 swaps preserve the distribution", json!({"outer": "3,3", "max_alphabet": 4, "max_width": 4}), parts)
}

/// The nine acceptance criteria, in order.
pub const ACCEPTANCE: [(&str, fn() -> Report); 9] = [
    ("sixteen statistics agree with quinv", criterion_sixteen_statistics),
    ("joint symmetry of inv and quinv on rectangles", criterion_joint_symmetry),
    ("gamma transports quinv to eta", criterion_gamma_transport),
    ("canonical families and the compact formula", criterion_compact_formula),
    ("monomial formulas agree with the brute-force sum", criterion_monomial_formulas),
    ("printed summands and n-values", printed_numerics),
    ("flip involutions and braid relations", criterion_flip_relations),
    ("length identities and closed forms", criterion_length_identities),
    ("a2 swaps preserve the distribution", criterion_a2_distribution),
];

/// Runs every acceptance criterion.
pub fn acceptance() -> Vec<Report> {
    ACCEPTANCE.iter().map(|(_, run)| run()).collect()
}
