//! Command-line front end. [`dispatch`] parses arguments and returns the
//! exit status together with everything that would be printed.
//!
//! Exit status: 0 success, 1 invalid input, 2 failed internal check,
//! 3 a conjecture check disagreed.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::action::{apply, burnside_orbit_count_rational, ExtendedPF, ExtendedSpace, Permutation};
use crate::character::{character_vector, character_vector_rational, chi, chi_rational, CharacterVector};
use crate::classify::{character_classes, classify};
use crate::error::{Error, Result};
use crate::numth::{partitions_of, Partition};
use crate::orbits::{orbits_c1, orbits_cn, orbits_rational_c1, OrbitReport};
use crate::parking::{enumerate_pf, format_word, parse_word, ParkingRule};
use crate::report::{character_json, symfun_json};
use crate::slimgraph::{build_vn, sigma_character, verify_conjecture, verify_table};
use crate::symfun::{convert, frobenius, is_h_positive, multiplicity, Basis};

/// Environment variable holding the number of worker threads.
pub const WORKERS_ENV: &str = "EXTPARK_WORKERS";

/// Brute-force paths refuse larger `n` unless `--allow-big` is given.
const BRUTE_BOUND: usize = 8;
const BRUTE_BOUND_BIG: usize = 10;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_ASSERTION: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "extpark", version, about = "Extended parking-function modules of the symmetric group")]
pub struct Cli {
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Permit sizes beyond the default resource bounds.
    #[arg(long, global = true)]
    pub allow_big: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Family {
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub c: Option<u32>,
    #[arg(long)]
    pub a: Option<usize>,
    #[arg(long)]
    pub b: Option<u32>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List PF_n, PF_{a,b}, or an extended set when --c is given.
    Enumerate {
        #[command(flatten)]
        family: Family,
    },
    /// Apply a permutation to an element of the extended set.
    Act {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        c: u32,
        /// One-line notation, e.g. "1432" or "1,4,3,2".
        #[arg(long)]
        perm: String,
        #[arg(long)]
        input: String,
    },
    /// Character values, from the closed form.
    Char {
        #[command(flatten)]
        family: Family,
        /// A single cycle type, e.g. "3,3".
        #[arg(long)]
        lambda: Option<String>,
        /// Also count fixed points directly and compare.
        #[arg(long)]
        oracle: bool,
    },
    /// Frobenius characteristic in the p, h or s basis.
    Frob {
        #[command(flatten)]
        family: Family,
        #[arg(long, default_value = "p")]
        basis: String,
    },
    /// Orbit count of the extended set.
    Orbits {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        c: u32,
        #[arg(long)]
        oracle: bool,
        /// Print the orbits themselves.
        #[arg(long)]
        list: bool,
    },
    /// Orbit count of the rational extended set with c = 1.
    OrbitsRational {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
        #[arg(long)]
        oracle: bool,
    },
    /// Isomorphism classes among the modules for c in [n].
    Classify {
        #[arg(long)]
        n: u64,
    },
    /// The slim-graph polynomial span.
    Slim {
        #[arg(long)]
        n: usize,
        #[arg(value_enum)]
        action: SlimAction,
    },
    /// Formula against brute force for every n up to --max-n.
    Selftest {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SlimAction {
    Dim,
    Char,
    VerifyConjecture,
    VerifyTable,
}

/// What a subcommand produced: text or JSON, and whether a conjecture
/// check disagreed.
struct Outcome {
    text: String,
    json: Value,
    mismatch: bool,
}

impl Outcome {
    fn new(text: String, json: Value) -> Self {
        Outcome { text, json, mismatch: false }
    }
}

/// Reads the worker count from the environment and configures the global
/// thread pool. Has no effect once the pool exists.
pub fn configure_workers() -> Result<()> {
    let Ok(raw) = std::env::var(WORKERS_ENV) else {
        return Ok(());
    };
    let workers: usize = raw
        .trim()
        .parse()
        .map_err(|_| Error::invalid(format!("{WORKERS_ENV} must be a positive integer, got {raw:?}")))?;
    if workers == 0 {
        return Err(Error::invalid(format!("{WORKERS_ENV} must be positive")));
    }
    let _ = rayon::ThreadPoolBuilder::new().num_threads(workers).build_global();
    Ok(())
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Assertion(_) => EXIT_ASSERTION,
        Error::InvalidParameter(_) | Error::Parse(_) | Error::ResourceBound(_) => EXIT_INVALID,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn dispatch<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            return (code, e.render().to_string());
        }
    };
    match run(&cli) {
        Ok(out) => {
            let mut text = if cli.json {
                serde_json::to_string_pretty(&out.json).expect("JSON values always serialize")
            } else {
                out.text.trim_end().to_string()
            };
            text.push('\n');
            (if out.mismatch { EXIT_MISMATCH } else { EXIT_OK }, text)
        }
        Err(e) => (exit_code(&e), format!("error: {e}\n")),
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    let big = cli.allow_big;
    match &cli.command {
        Command::Enumerate { family } => run_enumerate(family, big),
        Command::Act { n, c, perm, input } => run_act(*n, *c, perm, input),
        Command::Char { family, lambda, oracle } => run_char(family, lambda.as_deref(), *oracle, big),
        Command::Frob { family, basis } => run_frob(family, basis),
        Command::Orbits { n, c, oracle, list } => run_orbits(*n, *c, *oracle, *list, big),
        Command::OrbitsRational { a, b, oracle } => run_orbits_rational(*a, *b, *oracle, big),
        Command::Classify { n } => run_classify(*n),
        Command::Slim { n, action } => run_slim(*n, *action, big),
        Command::Selftest { max_n } => run_selftest(*max_n),
    }
}

fn brute_bound(n: usize, allow_big: bool) -> Result<()> {
    let bound = if allow_big { BRUTE_BOUND_BIG } else { BRUTE_BOUND };
    if n > bound {
        return Err(Error::ResourceBound(format!(
            "enumeration is limited to n <= {bound}{}",
            if allow_big { "" } else { " without --allow-big" }
        )));
    }
    Ok(())
}

fn require<T: Copy>(v: Option<T>, name: &str) -> Result<T> {
    v.ok_or_else(|| Error::invalid(format!("--{name} is required")))
}

/// Either `(n, c)` or `(a, b)` with `c` defaulting to 1.
enum Chosen {
    Classical { n: usize, c: u32 },
    Rational { a: usize, b: u32, c: u32 },
}

fn choose(f: &Family) -> Result<Chosen> {
    match (f.n, f.a, f.b) {
        (Some(n), None, None) => Ok(Chosen::Classical { n, c: require(f.c, "c")? }),
        (None, Some(a), Some(b)) => Ok(Chosen::Rational { a, b, c: f.c.unwrap_or(1) }),
        _ => Err(Error::invalid("give either --n (with --c) or both --a and --b")),
    }
}

fn words_json(words: &[Vec<u32>]) -> Value {
    Value::Array(words.iter().map(|w| json!(w)).collect())
}

fn run_enumerate(f: &Family, big: bool) -> Result<Outcome> {
    let words: Vec<Vec<u32>> = match (f.n, f.c, f.a, f.b) {
        (Some(n), None, None, None) => {
            brute_bound(n, big)?;
            enumerate_pf(n).into_iter().map(|p| p.into_coords()).collect()
        }
        (Some(n), Some(c), None, None) => {
            brute_bound(n, big)?;
            ExtendedSpace::classical(n, c)?.elements().iter().map(|x| x.coords().to_vec()).collect()
        }
        (None, None, Some(a), Some(b)) => {
            brute_bound(a, big)?;
            ParkingRule::rational(a, b)?.enumerate().into_iter().map(|p| p.into_coords()).collect()
        }
        (None, Some(c), Some(a), Some(b)) => {
            brute_bound(a + 1, big)?;
            ExtendedSpace::rational(a, b, c)?.elements().iter().map(|x| x.coords().to_vec()).collect()
        }
        _ => return Err(Error::invalid("give --n [--c] or --a --b [--c]")),
    };
    let text = words.iter().map(|w| format_word(w) + "\n").collect();
    let json = json!({ "count": words.len(), "elements": words_json(&words) });
    Ok(Outcome::new(text, json))
}

fn run_act(n: usize, c: u32, perm: &str, input: &str) -> Result<Outcome> {
    let pi = Permutation::parse(perm)?;
    if pi.degree() != n {
        return Err(Error::invalid(format!("permutation {perm} does not have degree {n}")));
    }
    let coords = parse_word(input)?;
    if coords.len() != n {
        return Err(Error::invalid(format!("input {input} does not have length {n}")));
    }
    let x = ExtendedPF::new(coords, n as u32, c)?;
    let y = apply(&pi, &x)?;
    let json = json!({ "perm": pi.to_string(), "input": x.coords(), "output": y.coords() });
    Ok(Outcome::new(format!("{y}\n"), json))
}

fn formula_vector(chosen: &Chosen) -> Result<CharacterVector> {
    match *chosen {
        Chosen::Classical { n, c } => character_vector(n, c),
        Chosen::Rational { a, b, c } => {
            if c != 1 {
                return Err(Error::invalid("the rational closed form covers c = 1 only"));
            }
            character_vector_rational(a, b as usize)
        }
    }
}

fn oracle_space(chosen: &Chosen, big: bool) -> Result<ExtendedSpace> {
    match *chosen {
        Chosen::Classical { n, c } => {
            brute_bound(n, big)?;
            ExtendedSpace::classical(n, c)
        }
        Chosen::Rational { a, b, c } => {
            brute_bound(a + 1, big)?;
            ExtendedSpace::rational(a, b, c)
        }
    }
}

fn run_char(f: &Family, lambda: Option<&str>, oracle: bool, big: bool) -> Result<Outcome> {
    let chosen = choose(f)?;
    let space = if oracle { Some(oracle_space(&chosen, big)?) } else { None };
    if let Some(text) = lambda {
        let lambda = Partition::parse(text)?;
        let value = match chosen {
            Chosen::Classical { n, c } => chi(n, c, &lambda)?,
            Chosen::Rational { a, b, .. } => chi_rational(a, b as usize, &lambda)?,
        };
        let mut out = Outcome::new(format!("{value}\n"), json!({ "lambda": lambda.key(), "value": value.to_string() }));
        if let Some(space) = space {
            let brute = space.character_at(&lambda)?;
            check_oracle(&value, &brute, &lambda.key())?;
            out.json["oracle"] = Value::String(brute.to_string());
            out.text.push_str(&format!("oracle: {brute}\n"));
        }
        return Ok(out);
    }
    let vector = formula_vector(&chosen)?;
    let mut text = String::new();
    for (l, v) in vector.iter() {
        let _ = writeln!(text, "{} {v}", l.key());
    }
    let mut json = character_json(&vector);
    if let Some(space) = space {
        let brute = space.character()?;
        for (l, v) in vector.iter() {
            check_oracle(v, &brute[l], &l.key())?;
        }
        let oracle: Map<String, Value> = brute.iter().map(|(l, v)| (l.key(), Value::String(v.to_string()))).collect();
        json = json!({ "formula": json, "oracle": oracle, "agrees": true });
        text.push_str("oracle: agrees\n");
    }
    Ok(Outcome::new(text, json))
}

fn check_oracle(formula: &BigInt, brute: &BigInt, at: &str) -> Result<()> {
    if formula != brute {
        return Err(Error::assertion(format!("at {at} the formula gives {formula} but direct counting gives {brute}")));
    }
    Ok(())
}

fn run_frob(f: &Family, basis: &str) -> Result<Outcome> {
    let chosen = choose(f)?;
    let target = Basis::parse(basis)?;
    let frob = convert(&frobenius(&formula_vector(&chosen)?), target)?;
    let mut json = symfun_json(&frob);
    let mut text = format!("{frob}\n");
    let mut mismatch = false;
    if target == Basis::H {
        let positive = is_h_positive(&frob)?;
        json["h_positive"] = Value::Bool(positive);
        let _ = writeln!(text, "h-positive: {}", if positive { "yes" } else { "no" });
        // the positivity conjecture concerns c = 1
        let c = match chosen {
            Chosen::Classical { c, .. } | Chosen::Rational { c, .. } => c,
        };
        mismatch = c == 1 && !positive;
    }
    Ok(Outcome { text, json, mismatch })
}

/// Orbits of `τ_{n,c}`, by the closed forms for `c ∈ {1, n}` and by the
/// trivial multiplicity of the character otherwise.
pub fn orbit_formula(n: usize, c: u32) -> Result<BigInt> {
    if n == 0 || c == 0 || c as usize > n {
        return Err(Error::invalid(format!("need 1 <= c <= n, got n = {n}, c = {c}")));
    }
    if c as usize == n {
        orbits_cn(n as u64)
    } else if c == 1 {
        orbits_c1(n as u64)
    } else {
        multiplicity(&frobenius(&character_vector(n, c)?), &Partition::row(n))
    }
}

fn report_json(r: &OrbitReport) -> Value {
    serde_json::to_value(r).expect("orbit reports serialize")
}

fn run_orbits(n: usize, c: u32, oracle: bool, list: bool, big: bool) -> Result<Outcome> {
    let formula = orbit_formula(n, c)?;
    let space = if oracle || list {
        brute_bound(n, big)?;
        Some(ExtendedSpace::classical(n, c)?)
    } else {
        None
    };
    let oracle_count = match (&space, oracle) {
        (Some(s), true) => Some(s.burnside_orbit_count()?),
        _ => None,
    };
    let report = OrbitReport { n: Some(n as u64), a: None, b: None, c: c as u64, formula_count: formula, oracle_count };
    if !report.agrees() {
        return Err(Error::assertion(format!(
            "orbit formula gives {} but Burnside gives {}",
            report.formula_count,
            report.oracle_count.as_ref().expect("present when disagreeing")
        )));
    }
    let mut text = format!("{}\n", report.formula_count);
    let mut json = report_json(&report);
    if let Some(o) = &report.oracle_count {
        let _ = writeln!(text, "oracle: {o}");
    }
    if list {
        let orbits = space.expect("built for --list").orbit_decomposition()?;
        let words: Vec<Vec<String>> = orbits.iter().map(|o| o.iter().map(|x| x.to_string()).collect()).collect();
        for orbit in &words {
            let _ = writeln!(text, "{}", orbit.join(" "));
        }
        json["orbits"] = json!(words);
    }
    Ok(Outcome::new(text, json))
}

fn run_orbits_rational(a: u64, b: u64, oracle: bool, big: bool) -> Result<Outcome> {
    let formula = orbits_rational_c1(a, b)?;
    let oracle_count = if oracle {
        brute_bound(a as usize + 1, big)?;
        Some(burnside_orbit_count_rational(a as usize, b as u32, 1)?)
    } else {
        None
    };
    let report = OrbitReport { n: None, a: Some(a), b: Some(b), c: 1, formula_count: formula, oracle_count };
    if !report.agrees() {
        return Err(Error::assertion("rational orbit formula disagrees with Burnside"));
    }
    let mut text = format!("{}\n", report.formula_count);
    if let Some(o) = &report.oracle_count {
        let _ = writeln!(text, "oracle: {o}");
    }
    Ok(Outcome::new(text, report_json(&report)))
}

fn run_classify(n: u64) -> Result<Outcome> {
    let cl = classify(n)?;
    let mut classes = Map::new();
    let mut text = String::new();
    for (k, members) in cl.classes() {
        let list: Vec<String> = members.iter().map(|c| c.to_string()).collect();
        let _ = writeln!(text, "{k}: {}", list.join(" "));
        classes.insert(k.to_string(), json!(members));
    }
    let _ = writeln!(text, "count: {}", cl.class_count);
    Ok(Outcome::new(text, json!({ "classes": classes, "count": cl.class_count })))
}

fn run_slim(n: usize, action: SlimAction, big: bool) -> Result<Outcome> {
    match action {
        SlimAction::Dim => {
            let basis = build_vn(n, big)?;
            let graded: Map<String, Value> = basis
                .graded_dimensions()
                .into_iter()
                .map(|(d, k)| (d.to_string(), Value::String(k.to_string())))
                .collect();
            let text = format!("{}\n", basis.dimension());
            let json = json!({
                "n": n,
                "dimension": basis.dimension().to_string(),
                "generators": basis.generator_count(),
                "graded": graded,
            });
            Ok(Outcome::new(text, json))
        }
        SlimAction::Char => {
            let basis = build_vn(n, big)?;
            let mut traces = Map::new();
            let mut text = String::new();
            for lambda in partitions_of(n) {
                let t = sigma_character(&basis, &lambda)?;
                let _ = writeln!(text, "{} {t}", lambda.key());
                traces.insert(lambda.key(), Value::String(t.to_string()));
            }
            let json = json!({ "n": n, "dimension": basis.dimension().to_string(), "traces": traces });
            Ok(Outcome::new(text, json))
        }
        SlimAction::VerifyConjecture => {
            let report = verify_conjecture(n, big)?;
            let mut text = format!("dimension {}\n", report.dimension);
            for c in &report.classes {
                let _ = writeln!(text, "{} sigma {} chi {} {}", c.lambda, c.sigma, c.chi, if c.agree { "ok" } else { "DIFFER" });
            }
            let _ = writeln!(text, "{}", if report.pass { "pass" } else { "FAIL" });
            Ok(Outcome { text, mismatch: !report.pass, json: serde_json::to_value(&report).expect("serializable") })
        }
        SlimAction::VerifyTable => {
            let report = verify_table(n)?;
            let mut text = format!("c = {}\n", report.c);
            for r in &report.rows {
                let _ = writeln!(
                    text,
                    "{} {} set:{} span:{}",
                    r.word,
                    r.polynomial,
                    if r.in_extended_set { "yes" } else { "no" },
                    if r.in_span { "yes" } else { "no" }
                );
            }
            let _ = writeln!(text, "one per orbit: {}", if report.one_per_orbit { "yes" } else { "no" });
            if let Some(eq) = report.equivariant {
                let _ = writeln!(text, "equivariant: {}", if eq { "yes" } else { "no" });
            }
            let _ = writeln!(text, "{}", if report.pass { "pass" } else { "FAIL" });
            Ok(Outcome { text, mismatch: !report.pass, json: serde_json::to_value(&report).expect("serializable") })
        }
    }
}

/// One named self-test outcome.
fn selftest_checks(max_n: usize) -> Result<Vec<(String, bool)>> {
    let mut checks = Vec::new();
    for n in 1..=max_n {
        let mut chars_ok = true;
        let mut orbits_ok = true;
        for c in 1..=n as u32 {
            let space = ExtendedSpace::classical(n, c)?;
            let brute = space.character()?;
            chars_ok &= character_vector(n, c)?.values() == &brute;
            orbits_ok &= orbit_formula(n, c)? == space.burnside_orbit_count()?;
        }
        checks.push((format!("characters n={n}"), chars_ok));
        checks.push((format!("orbit counts n={n}"), orbits_ok));
        let mut fibers: Vec<Vec<u64>> = classify(n as u64)?.classes().into_values().collect();
        let mut by_char = character_classes(n as u64)?;
        fibers.sort();
        by_char.sort();
        checks.push((format!("classification n={n}"), fibers == by_char));
    }
    for (a, b) in [(2usize, 3u32), (3, 2), (3, 4), (5, 2), (5, 3), (5, 6)] {
        if a + 1 > max_n {
            continue;
        }
        let space = ExtendedSpace::rational(a, b, 1)?;
        let ok = character_vector_rational(a, b as usize)?.values() == &space.character()?
            && orbits_rational_c1(a as u64, b as u64)? == space.burnside_orbit_count()?;
        checks.push((format!("rational a={a} b={b}"), ok));
    }
    for n in 3..=max_n.min(5) {
        checks.push((format!("slim-graph span n={n}"), verify_conjecture(n, false)?.pass));
    }
    Ok(checks)
}

fn run_selftest(max_n: usize) -> Result<Outcome> {
    if max_n == 0 || max_n > 7 {
        return Err(Error::invalid("--max-n must lie in [1, 7]"));
    }
    let checks = selftest_checks(max_n)?;
    let pass = checks.iter().all(|(_, ok)| *ok);
    let mut text = String::new();
    for (name, ok) in &checks {
        let _ = writeln!(text, "{} {name}", if *ok { "ok  " } else { "FAIL" });
    }
    let json = json!({
        "checks": checks.iter().map(|(name, ok)| json!({ "name": name, "pass": ok })).collect::<Vec<_>>(),
        "pass": pass,
    });
    if !pass {
        return Err(Error::assertion(format!("self-test failed\n{text}")));
    }
    Ok(Outcome::new(text, json))
}
