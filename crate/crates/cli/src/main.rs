use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use atkin_twists::arith::{class_number, reduced_forms, Discriminant};
use atkin_twists::deficiency::classify;
use atkin_twists::elliptic::Level;
use atkin_twists::localsolve::{c17_model, local_search, solvable_real};
use atkin_twists::lseries::{
    analytic_rank_with, terms_needed, BaseTable, RankVerdict, DEFAULT_TAU,
};
use atkin_twists::survey::{
    conjecture_count, run_survey, verify_examples, StratumSelection, SurveyConfig,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "atkin-twists",
    version,
    about = "Prime twists of X_0(N): ranks, local points, census"
)]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Census of new primes with a valid twist, optionally with rank verdicts.
    Survey {
        #[arg(long)]
        bound: u64,
        #[arg(long, value_enum, default_value = "both")]
        stratum: StratumArg,
        #[arg(long)]
        ranks: bool,
        #[arg(long, default_value_t = DEFAULT_TAU)]
        tau: f64,
        /// Write the census CSV here.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Write the full JSON report here.
        #[arg(long)]
        json_out: Option<PathBuf>,
        /// Base trace cache file.
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Analytic rank of C(N,p).
    Rank {
        #[arg(long)]
        level: u64,
        #[arg(long)]
        prime: u64,
        #[arg(long, default_value_t = DEFAULT_TAU)]
        tau: f64,
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Local points on a quartic model at a prime or at infinity.
    Local {
        #[arg(long, value_enum)]
        quartic: QuarticArg,
        #[arg(long)]
        prime: u64,
        /// A prime, or `inf`.
        #[arg(long)]
        at: String,
        /// Include the explored residue classes.
        #[arg(long)]
        certificate: bool,
    },
    /// Deficient places of C(N,p).
    Deficiency {
        #[arg(long)]
        level: u64,
        #[arg(long)]
        prime: u64,
    },
    /// Check the points on C(11,4079) and C(19,5591).
    VerifyExamples,
    /// Class number of a negative discriminant.
    Classno {
        #[arg(long, allow_hyphen_values = true)]
        disc: i64,
        /// List the reduced forms.
        #[arg(long)]
        forms: bool,
    },
    /// Primes p ≡ m (mod M) up to X with 3 ∤ h(−3p).
    Conjecture {
        #[arg(long)]
        bound: u64,
        #[arg(long)]
        residue: u64,
        #[arg(long)]
        modulus: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum StratumArg {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum QuarticArg {
    C17,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn emit<T: Serialize>(json: bool, value: &T, text: impl FnOnce() -> String) -> Result<()> {
    if json {
        println!("{}", serde_json::to_string_pretty(value)?);
    } else {
        print!("{}", text());
    }
    Ok(())
}

/// Returns `Ok(false)` when a verification ran but failed.
fn run(cli: Cli) -> Result<bool> {
    let json = cli.json;
    match cli.command {
        Command::Survey {
            bound,
            stratum,
            ranks,
            tau,
            csv,
            json_out,
            cache,
        } => {
            let stratum = match stratum {
                StratumArg::A => StratumSelection::A,
                StratumArg::B => StratumSelection::B,
                StratumArg::Both => StratumSelection::Both,
            };
            let config = SurveyConfig {
                bound,
                stratum,
                ranks,
                tau,
                csv,
                json: json_out,
                cache,
            };
            let s = run_survey(&config)?;
            emit(json, &s, || {
                let mut out = format!(
                    "bound {bound}: stratum A {} records, stratum B {} records",
                    s.stratum_a, s.stratum_b
                );
                if let Some(r) = s.realized {
                    out += &format!(", {r} realized");
                }
                out.push('\n');
                for r in &s.records {
                    let levels: Vec<String> = r.levels.iter().map(|l| l.to_string()).collect();
                    let verdict = r.chosen_verdict().map_or("pending", |v| v.estimate.label());
                    let chosen = r
                        .chosen_n
                        .map(|n| n.to_string())
                        .unwrap_or_else(|| "-".into());
                    out += &format!(
                        "{:>7}  {} mod 4  N in {{{}}}  chosen {chosen}  sign {:+}  {verdict}\n",
                        r.p,
                        r.mod4,
                        levels.join(","),
                        r.sign
                    );
                }
                out
            })?;
            Ok(true)
        }
        Command::Rank {
            level,
            prime,
            tau,
            cache,
        } => {
            let lv = Level::try_from(level)?;
            let limit = terms_needed(lv, prime)? as u64;
            let base = match cache {
                Some(path) => BaseTable::load_or_compute(&path, limit)?,
                None => BaseTable::compute(limit),
            };
            let v = analytic_rank_with(&base, level, prime, tau)?;
            emit(json, &v, || rank_text(&v))?;
            Ok(true)
        }
        Command::Local {
            quartic: QuarticArg::C17,
            prime,
            at,
            certificate,
        } => {
            let model = c17_model(prime)?;
            if at == "inf" || at == "real" {
                let solvable = solvable_real(&model);
                let report = json!({ "model": model, "place": "inf", "solvable": solvable });
                emit(json, &report, || {
                    format!("{model}\nover R: {}\n", yes_no(solvable))
                })?;
                return Ok(true);
            }
            let l: u64 = at
                .parse()
                .with_context(|| format!("--at {at}: expected a prime or `inf`"))?;
            let mut search = local_search(&model, l)?;
            let nodes = search.nodes.len();
            if !certificate {
                search.nodes.clear();
            }
            let report = json!({ "model": model, "place": l, "search": search });
            emit(json, &report, || {
                let mut out = format!("{model}\nover Q_{l}: {}\n", yes_no(search.solvable));
                out += &format!(
                    "residue classes visited: {nodes}, max depth {} (bound {})\n",
                    search.max_depth, search.depth_bound
                );
                if let Some(k) = search.obstruction_depth {
                    out += &format!("no primitive solution modulo {l}^{k}\n");
                }
                for n in &search.nodes {
                    out += &format!(
                        "  {:?} {} + {l}^{} Z: {:?}\n",
                        n.chart, n.residue, n.depth, n.outcome
                    );
                }
                out
            })?;
            Ok(true)
        }
        Command::Deficiency { level, prime } => {
            let r = classify(level, prime)?;
            emit(json, &r, || {
                let mut out = format!("C({level},{prime}), genus {}\n", r.genus);
                for (place, status) in &r.statuses {
                    out += &format!("  {place:>7}: {status} ({})\n", r.provenance[place]);
                }
                out
            })?;
            Ok(true)
        }
        Command::VerifyExamples => {
            let checks = verify_examples()?;
            let ok = checks.iter().all(|c| c.passed());
            emit(json, &checks, || {
                let mut out = String::new();
                for c in &checks {
                    out += &format!(
                        "C({},{}): twist defined {}, isomorphic {}, on curve {}, nontorsion {} => {}\n",
                        c.n,
                        c.p,
                        c.twist_defined,
                        c.isomorphic,
                        c.on_curve,
                        c.nontorsion,
                        if c.passed() { "PASS" } else { "FAIL" }
                    );
                }
                out
            })?;
            Ok(ok)
        }
        Command::Classno { disc, forms } => {
            let d = Discriminant::new(disc)?;
            if disc > 0 {
                bail!("only negative discriminants are supported");
            }
            let h = class_number(d)?;
            let list = if forms { reduced_forms(d)? } else { Vec::new() };
            let report = json!({ "discriminant": disc, "class_number": h, "forms": list });
            emit(json, &report, || {
                let mut out = format!("h({disc}) = {h}\n");
                for (a, b, c) in &list {
                    out += &format!("  ({a}, {b}, {c})\n");
                }
                out
            })?;
            Ok(true)
        }
        Command::Conjecture {
            bound,
            residue,
            modulus,
        } => {
            let f = conjecture_count(bound, residue, modulus)?;
            let report =
                json!({ "bound": bound, "residue": residue, "modulus": modulus, "count": f });
            emit(json, &report, || {
                format!("F({bound}) = {f} primes p = {residue} mod {modulus} with 3 not dividing h(-3p)\n")
            })?;
            Ok(true)
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "points exist"
    } else {
        "no points"
    }
}

fn rank_text(v: &RankVerdict) -> String {
    format!(
        "C({},{}): sign {:+}, L(1) = {:.12e}, L'(1) = {:.12e}, {} terms\nestimate: {}\n",
        v.level,
        v.p,
        v.sign,
        v.l_value,
        v.l_prime_value,
        v.nmax_used,
        v.estimate.label()
    )
}
