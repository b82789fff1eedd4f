//! `maclab`: compute modified Macdonald polynomials, run the verification
//! checks and replay the worked examples.
//!
//! Exit codes: 0 success, 1 a check failed, 2 bad input, 3 inadmissible
//! `(mode, statistic)` pair.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use maclab_core::canonical::{canonicalize, compact_htilde, d_coeff_in, generate_family, is_canonical_in};
use maclab_core::flips::{g_bijection, gamma};
use maclab_core::golden::EXAMPLES;
use maclab_core::statistics::{eta, is_admissible, maj, quinv};
use maclab_core::verify::{self, Report, ACCEPTANCE};
use maclab_core::{monomial, Error, EtaStatistic, Filling, Mode, Partition, QuadrupleSet, Stat};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "maclab", version, about = "Exact combinatorics of modified Macdonald polynomials")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Output::Text)]
    output: Output,
    /// Refuse enumerations over more than this many fillings.
    #[arg(long, global = true, default_value_t = 10_000_000)]
    max_fillings: u128,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Via {
    /// Sum of q^maj t^stat over all fillings.
    Hhl,
    /// Sum over canonical tableaux weighted by d.
    Compact,
    /// One of the four monomial expansion formulas.
    Monomial,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the modified Macdonald polynomial of a shape, or one coefficient.
    Compute(ComputeArgs),
    /// Run verification checks.
    Verify(VerifyArgs),
    /// Recompute a worked example and compare with the printed values.
    Example {
        /// Example name or alias; omit to list them.
        id: Option<String>,
    },
    /// Canonicalize a filling and describe its family.
    Canonicalize {
        /// Rows top to bottom, separated by `/`.
        #[arg(long)]
        filling: String,
        #[arg(long, default_value = "canonical")]
        mode: String,
        /// Alphabet size; defaults to the largest entry.
        #[arg(long)]
        alphabet: Option<u32>,
    },
    /// Apply gamma for a quadruple set, or g from one set to another.
    Gamma {
        /// Rows top to bottom, separated by `/`.
        #[arg(long)]
        filling: String,
        #[arg(long, default_value = "S2")]
        set: String,
        /// Target set; applies g instead of gamma.
        #[arg(long)]
        to: Option<String>,
        #[arg(long)]
        alphabet: Option<u32>,
    },
}

#[derive(Args)]
struct ComputeArgs {
    #[arg(long)]
    shape: String,
    #[arg(long, value_enum, default_value_t = Via::Hhl)]
    via: Via,
    /// Alphabet size N; defaults to |shape|.
    #[arg(long)]
    alphabet: Option<u32>,
    /// inv, quinv or S1..S8 (suffix `*` for the dual statistic).
    #[arg(long)]
    stat: Option<String>,
    /// Use the dual statistic.
    #[arg(long)]
    dual: bool,
    /// canonical or dual; used with --via compact.
    #[arg(long, default_value = "canonical")]
    mode: String,
    /// Monomial index; with --via monomial, prints only that coefficient.
    #[arg(long)]
    mu: Option<String>,
    /// Which of the four monomial formulas to use.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=4))]
    formula: u8,
}

#[derive(Args)]
struct VerifyArgs {
    /// The nine acceptance criteria.
    #[arg(long)]
    acceptance: bool,
    /// All sixteen eta statistics against quinv on --shape.
    #[arg(long)]
    all_etas: bool,
    /// Joint symmetry of (inv, quinv) on --shape.
    #[arg(long)]
    joint: bool,
    /// gamma for all eight sets on --shape.
    #[arg(long)]
    gamma: bool,
    /// Partition property, family sums and compact formula on --shape.
    #[arg(long)]
    compact: bool,
    /// delta braid relation and a rho counterexample on --width x --height.
    #[arg(long)]
    braid: bool,
    /// rho and delta are involutions on --samples random inputs.
    #[arg(long)]
    involutions: bool,
    /// The four monomial formulas agree for all shapes of --size.
    #[arg(long)]
    formulas: bool,
    /// Monomial expansion against the brute-force sum for shapes of --size.
    #[arg(long)]
    monomial: bool,
    /// Length identities and closed forms on --shape.
    #[arg(long)]
    lengths: bool,
    /// Distribution equality for a2 swaps on --shape, and g at --width.
    #[arg(long)]
    a2: bool,
    #[arg(long)]
    shape: Option<String>,
    #[arg(long, default_value_t = 3)]
    alphabet: u32,
    #[arg(long, default_value_t = 3)]
    width: usize,
    #[arg(long, default_value_t = 3)]
    height: usize,
    #[arg(long, default_value_t = 4)]
    size: usize,
    /// For --joint: restrict to the rectangle of this height.
    #[arg(long)]
    restrict_height: Option<usize>,
    #[arg(long, default_value_t = 10_000)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

/// A failure that ends the run with a specific exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = if matches!(e, Error::Inadmissible(_)) { 3 } else { 2 };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

type Outcome = Result<(String, Value, bool), Failure>;

fn parse_shape(s: &str) -> Result<Partition, Failure> {
    Ok(s.parse::<Partition>()?)
}

fn parse_filling(s: &str) -> Result<Filling, Failure> {
    Ok(Filling::parse_text(s)?)
}

fn check_size(cap: u128, lam: &Partition, alphabet: u32) -> Result<(), Failure> {
    let count = (alphabet as u128).checked_pow(lam.size() as u32);
    match count {
        Some(n) if n <= cap => Ok(()),
        _ => Err(usage(format!(
            "{alphabet}^{} fillings of shape {lam} exceed the cap of {cap}; raise --max-fillings to proceed",
            lam.size()
        ))),
    }
}

fn compute(a: &ComputeArgs, cap: u128) -> Outcome {
    let lam = parse_shape(&a.shape)?;
    let alphabet = a.alphabet.unwrap_or(lam.size() as u32);
    let via = match a.via {
        Via::Hhl => "hhl",
        Via::Compact => "compact",
        Via::Monomial => "monomial",
    };
    let mut params = json!({"shape": lam.to_string(), "via": via});
    match a.via {
        Via::Hhl => {
            let stat = Stat::parse(a.stat.as_deref().unwrap_or("inv"), a.dual)?;
            check_size(cap, &lam, alphabet)?;
            let h = monomial::htilde_brute_force(&lam, alphabet, stat)?;
            params["alphabet"] = json!(alphabet);
            params["stat"] = json!(stat.to_string());
            Ok((h.to_string(), json!({"params": params, "result": h}), true))
        }
        Via::Compact => {
            let mode: Mode = a.mode.parse()?;
            let stat = match Stat::parse(a.stat.as_deref().unwrap_or("S2"), a.dual)? {
                Stat::Eta(e) => e,
                other => return Err(Error::Inadmissible(format!("{other} has no compact formula")).into()),
            };
            if !is_admissible(mode, stat) {
                return Err(Error::Inadmissible(format!("{stat} with {mode} tableaux")).into());
            }
            check_size(cap, &lam, alphabet)?;
            let h = compact_htilde(&lam, alphabet, mode, stat)?;
            params["alphabet"] = json!(alphabet);
            params["stat"] = json!(stat.to_string());
            params["mode"] = json!(mode.to_string());
            Ok((h.to_string(), json!({"params": params, "result": h}), true))
        }
        Via::Monomial => {
            params["formula"] = json!(a.formula);
            match &a.mu {
                Some(mu) => {
                    let mu = parse_shape(mu)?;
                    let p = monomial::p_lambda_mu(&lam, &mu, a.formula)?;
                    params["mu"] = json!(mu.to_string());
                    Ok((format!("{p}\n"), json!({"params": params, "result": p}), true))
                }
                None => {
                    let parts = a.alphabet.map_or(lam.size(), |n| n as usize);
                    let h = monomial::htilde_monomial(&lam, parts, a.formula)?;
                    params["max_parts"] = json!(parts);
                    Ok((h.to_string(), json!({"params": params, "result": h}), true))
                }
            }
        }
    }
}

fn verify_cmd(a: &VerifyArgs, cap: u128) -> Outcome {
    let mut reports: Vec<Report> = Vec::new();
    let shape = || -> Result<Partition, Failure> {
        let s = a.shape.as_deref().ok_or_else(|| usage("this check needs --shape"))?;
        let lam = parse_shape(s)?;
        check_size(cap, &lam, a.alphabet)?;
        Ok(lam)
    };
    if a.acceptance {
        for (name, run) in ACCEPTANCE {
            let mut r = run();
            r.check = name.to_string();
            reports.push(r);
        }
    }
    if a.all_etas {
        reports.push(verify::sixteen_statistics(&shape()?, a.alphabet));
    }
    if a.joint {
        reports.push(verify::joint_symmetry(&shape()?, a.alphabet, a.restrict_height));
    }
    if a.gamma {
        reports.push(verify::gamma_transport(&shape()?, a.alphabet));
    }
    if a.compact {
        let lam = shape()?;
        for mode in [Mode::Canonical, Mode::Dual] {
            reports.push(verify::partition_property(&lam, a.alphabet, mode));
        }
        reports.push(verify::family_sums(&lam, a.alphabet));
        reports.push(verify::compact_formula(&lam, a.alphabet));
    }
    if a.braid {
        let rect = Partition::new(vec![a.width; a.height])?;
        check_size(cap, &rect, a.alphabet)?;
        reports.push(verify::delta_braid(a.width, a.height, a.alphabet));
        reports.push(verify::rho_braid_counterexample(a.width, a.height, a.alphabet));
    }
    if a.involutions {
        reports.push(verify::involutions(a.samples, a.seed));
    }
    if a.formulas {
        reports.push(verify::formulas_agree(a.size));
    }
    if a.monomial {
        let lam = Partition::new(vec![a.size])?;
        check_size(cap, &lam, a.size as u32)?;
        reports.push(verify::monomial_expansion(a.size));
    }
    if a.lengths {
        let lam = shape()?;
        reports.push(verify::length_identities(&lam, a.alphabet));
        reports.push(verify::closed_forms(&lam, a.alphabet));
    }
    if a.a2 {
        if a.shape.is_some() {
            reports.push(verify::a2_distribution(&shape()?, a.alphabet));
        }
        let rect = Partition::new(vec![a.width; 2])?;
        check_size(cap, &rect, a.alphabet)?;
        reports.push(verify::g_transport(a.width, a.alphabet));
    }
    if reports.is_empty() {
        return Err(usage("no check selected; see `maclab verify --help`"));
    }
    let pass = reports.iter().all(|r| r.pass);
    let text = reports
        .iter()
        .map(|r| format!("{} {} {} ({})\n", if r.pass { "PASS" } else { "FAIL" }, r.check, r.params, r.detail))
        .collect();
    Ok((text, serde_json::to_value(&reports).expect("reports serialize"), pass))
}

fn example_cmd(id: Option<&str>) -> Outcome {
    let Some(id) = id else {
        let text = EXAMPLES.iter().map(|(name, alias)| format!("{name} (alias {alias})\n")).collect();
        let list: Vec<Value> = EXAMPLES.iter().map(|(n, a)| json!({"name": n, "alias": a})).collect();
        return Ok((text, Value::Array(list), true));
    };
    let report = verify::example(id).ok_or_else(|| usage(format!("unknown example {id:?}")))?;
    let text = format!("{} {} ({})\n", if report.pass { "PASS" } else { "FAIL" }, report.check, report.detail);
    let pass = report.pass;
    Ok((text, serde_json::to_value(&report).expect("report serializes"), pass))
}

fn canonicalize_cmd(filling: &str, mode: &str, alphabet: Option<u32>) -> Outcome {
    let tau = parse_filling(filling)?;
    let mode: Mode = mode.parse()?;
    let alphabet = alphabet.unwrap_or(tau.max_entry());
    if tau.max_entry() > alphabet {
        return Err(Error::AlphabetTooSmall { alphabet, max: tau.max_entry() }.into());
    }
    let (sigma, trace) = canonicalize(&tau, mode);
    debug_assert!(is_canonical_in(&sigma, mode));
    let family = generate_family(&sigma, mode)?;
    let d = d_coeff_in(&sigma, alphabet, mode)?;
    let moves: Vec<String> = trace.ops.iter().map(|op| format!("delta_{}^{}", op.col, op.row)).collect();
    let text = format!(
        "canonical form:\n{sigma}\nmoves: {}\nfamily size: {}\nd: {d}\n",
        if moves.is_empty() { "none".to_string() } else { moves.join(", ") },
        family.len()
    );
    let value = json!({
        "input": tau,
        "mode": mode.to_string(),
        "canonical": sigma,
        "ops": trace.ops,
        "family_size": family.len(),
        "d": d,
    });
    Ok((text, value, true))
}

fn gamma_cmd(filling: &str, set: &str, to: Option<&str>, alphabet: Option<u32>) -> Outcome {
    let sigma = parse_filling(filling)?;
    let set: QuadrupleSet = set.parse()?;
    let alphabet = alphabet.unwrap_or(sigma.max_entry());
    let (image, from_stat, target) = match to {
        Some(t) => {
            let t: QuadrupleSet = t.parse()?;
            let from = eta(&sigma, EtaStatistic::new(set, false), alphabet)?;
            (g_bijection(&sigma, set, t)?, from, t)
        }
        None => (gamma(&sigma, set)?, quinv(&sigma), set),
    };
    let image_eta = eta(&image, EtaStatistic::new(target, false), alphabet)?;
    let from_name = if to.is_some() { format!("eta_{set}") } else { "quinv".to_string() };
    let text = format!(
        "image:\n{image}\nmaj {} -> {}, {from_name} {from_stat} -> eta_{target} {image_eta}\n",
        maj(&sigma),
        maj(&image)
    );
    let value = json!({
        "input": sigma,
        "image": image,
        "maj": [maj(&sigma), maj(&image)],
        "from": {"stat": from_name, "value": from_stat},
        "to": {"stat": format!("eta_{target}"), "value": image_eta},
    });
    Ok((text, value, true))
}

fn configure_threads() -> Result<(), Failure> {
    if let Ok(v) = std::env::var("MACLAB_THREADS") {
        let n: usize = v.parse().map_err(|_| usage(format!("MACLAB_THREADS must be a number, got {v:?}")))?;
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| usage(e.to_string()))?;
    }
    Ok(())
}

fn run(cli: &Cli) -> Outcome {
    configure_threads()?;
    match &cli.command {
        Command::Compute(a) => compute(a, cli.max_fillings),
        Command::Verify(a) => verify_cmd(a, cli.max_fillings),
        Command::Example { id } => example_cmd(id.as_deref()),
        Command::Canonicalize { filling, mode, alphabet } => canonicalize_cmd(filling, mode, *alphabet),
        Command::Gamma { filling, set, to, alphabet } => gamma_cmd(filling, set, to.as_deref(), *alphabet),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((text, value, pass)) => {
            match cli.output {
                Output::Text => print!("{text}"),
                Output::Json => println!("{}", serde_json::to_string_pretty(&value).expect("json")),
            }
            ExitCode::from(if pass { 0 } else { 1 })
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
