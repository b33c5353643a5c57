//! `girthlap` command-line front end.
//!
//! Exit codes: 0 success or match, 1 violation or mismatch, 2 usage error.

use std::io::{self, BufRead};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use girthlap::enumerate::{EnumConfig, DEFAULT_ENUM_BOUND};
use girthlap::interval::{Bindings, IntervalTemplate};
use girthlap::spectra::{charpoly, eigenvalues_numeric, ExactSpectrum};
use girthlap::verify::{
    check_girth_bound, classify_girth3, exhaustive_equality_search, exhaustive_thr, lemma_suite,
    Girth3Statistic, TheoremReport,
};
use girthlap::{emit_graph6, make, parse_graph6, FamilySpec, Graph};

#[derive(Parser)]
#[command(
    name = "girthlap",
    version,
    about = "Laplacian spectra and girth bounds of small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Where the graph comes from. With neither flag, newline-delimited graph6
/// is read from stdin.
#[derive(Args, Clone)]
struct Target {
    /// Graph in graph6 format.
    #[arg(long, conflicts_with = "family")]
    g6: Option<String>,
    /// Named family, e.g. "K(2,3)" or "Y(7,3)".
    #[arg(long)]
    family: Option<String>,
    /// Print JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Laplacian eigenvalues, largest first, to 12 significant digits.
    Spectrum(Target),
    /// Coefficients of det(xI - L), highest degree first.
    Charpoly(Target),
    /// Girth, or "none" for a forest.
    Girth(Target),
    /// Number of Laplacian eigenvalues in an interval, with multiplicity.
    Count {
        /// Interval such as "[4,5]", "(1/2,3]" or "[n-g-k+4,n]".
        #[arg(long)]
        interval: String,
        /// Value bound to `k` in the interval.
        #[arg(long)]
        k: Option<i64>,
        #[command(flatten)]
        target: Target,
    },
    /// Build a named family member.
    Family {
        /// Family text, e.g. "K(2,3)".
        spec: String,
        /// Print graph6 only.
        #[arg(long)]
        emit: bool,
        #[arg(long)]
        json: bool,
    },
    /// Check one graph against a theorem.
    Verify {
        #[command(subcommand)]
        which: VerifyCommand,
    },
    /// Check a theorem over every connected graph of one order.
    Sweep {
        #[command(subcommand)]
        which: SweepCommand,
    },
    /// Run the lemma suite over connected graphs up to an order.
    Lemmas {
        #[arg(long, default_value_t = 6)]
        nmax: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// m_G[n-g-k+4, n] <= n-g for girth g >= 4.
    Gen {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        target: Target,
    },
    /// Girth-3 classification labels for m_G(n) and m_G[n-1, n].
    Thr(Target),
}

#[derive(Args)]
struct SweepOpts {
    #[arg(long)]
    n: usize,
    /// Worker threads; defaults to all cores.
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum SweepCommand {
    Gen {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        opts: SweepOpts,
    },
    Thr {
        #[command(flatten)]
        opts: SweepOpts,
    },
}

/// A failure that maps to exit code 2.
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

type Outcome = Result<bool, Usage>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Usage(msg)) => {
            eprintln!("girthlap: {msg}");
            ExitCode::from(2)
        }
    }
}

fn graphs(target: &Target) -> Result<Vec<Graph>, Usage> {
    if let Some(text) = &target.g6 {
        return Ok(vec![parse_graph6(text)?]);
    }
    if let Some(text) = &target.family {
        return Ok(vec![make(&text.parse::<FamilySpec>()?)?]);
    }
    let mut out = Vec::new();
    for (i, line) in io::stdin().lock().lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        out.push(parse_graph6(&line).map_err(|e| Usage(format!("stdin line {}: {e}", i + 1)))?);
    }
    if out.is_empty() {
        return Err(Usage(
            "no graph given: use --g6, --family or graph6 on stdin".into(),
        ));
    }
    Ok(out)
}

fn print_json<T: Serialize>(value: &T) -> Result<(), Usage> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

/// Applies `f` to every target graph, printing text lines or a JSON value
/// (an array in batch mode).
fn each<T: Serialize>(
    target: &Target,
    f: impl Fn(&Graph) -> Result<(T, String, bool), Usage>,
) -> Outcome {
    let gs = graphs(target)?;
    let mut all_ok = true;
    let mut values = Vec::new();
    for g in &gs {
        let (value, text, ok) = f(g)?;
        all_ok &= ok;
        if target.json {
            values.push(value);
        } else {
            println!("{text}");
        }
    }
    if target.json {
        if values.len() == 1 {
            print_json(&values[0])?;
        } else {
            print_json(&values)?;
        }
    }
    Ok(all_ok)
}

#[derive(Serialize)]
struct SpectrumOut {
    graph6: String,
    eigenvalues: Vec<String>,
}

#[derive(Serialize)]
struct CharpolyOut {
    graph6: String,
    /// Ascending.
    coefficients: girthlap::IntegerPolynomial,
    text: String,
}

#[derive(Serialize)]
struct GirthOut {
    graph6: String,
    girth: Option<usize>,
}

#[derive(Serialize)]
struct CountOut {
    graph6: String,
    interval: String,
    count: usize,
}

#[derive(Serialize)]
struct FamilyOut {
    family: String,
    graph6: String,
    order: usize,
    size: usize,
    girth: Option<usize>,
}

#[derive(Serialize)]
struct ThrOut {
    graph6: String,
    mult_n: girthlap::verify::ClassificationLabel,
    top_interval: girthlap::verify::ClassificationLabel,
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Spectrum(t) => each(&t, |g| {
            let values = eigenvalues_numeric(g).to_decimal_strings();
            let text = values.join(" ");
            Ok((
                SpectrumOut {
                    graph6: emit_graph6(g),
                    eigenvalues: values,
                },
                text,
                true,
            ))
        }),
        Command::Charpoly(t) => each(&t, |g| {
            let p = charpoly(g)?;
            let text = p.to_string();
            Ok((
                CharpolyOut {
                    graph6: emit_graph6(g),
                    coefficients: p,
                    text: text.clone(),
                },
                text,
                true,
            ))
        }),
        Command::Girth(t) => each(&t, |g| {
            let girth = g.girth();
            let text = girth.map_or("none".to_string(), |x| x.to_string());
            Ok((
                GirthOut {
                    graph6: emit_graph6(g),
                    girth,
                },
                text,
                true,
            ))
        }),
        Command::Count {
            interval,
            k,
            target,
        } => {
            let template = IntervalTemplate::parse(&interval)?;
            each(&target, |g| {
                let girth = g.girth().map(|x| x as i64);
                if template.mentions('g') && girth.is_none() {
                    return Err(Usage(
                        "interval mentions g but the graph is a forest".into(),
                    ));
                }
                let bindings = Bindings {
                    n: Some(g.order() as i64),
                    g: girth,
                    k,
                };
                let spec = template.resolve(&bindings)?;
                let count = ExactSpectrum::new(g)?.count(&spec)?;
                let out = CountOut {
                    graph6: emit_graph6(g),
                    interval: spec.to_string(),
                    count,
                };
                Ok((out, count.to_string(), true))
            })
        }
        Command::Family { spec, emit, json } => {
            let spec: FamilySpec = spec.parse()?;
            let g = make(&spec)?;
            let out = FamilyOut {
                family: spec.to_string(),
                graph6: emit_graph6(&g),
                order: g.order(),
                size: g.edges().len(),
                girth: g.girth(),
            };
            if json {
                print_json(&out)?;
            } else if emit {
                println!("{}", out.graph6);
            } else {
                let girth = out.girth.map_or("none".to_string(), |x| x.to_string());
                println!(
                    "{} {} order={} size={} girth={girth}",
                    out.family, out.graph6, out.order, out.size
                );
            }
            Ok(true)
        }
        Command::Verify {
            which: VerifyCommand::Gen { k, target },
        } => each(&target, |g| {
            let c = check_girth_bound(g, k)?;
            let text = format!(
                "{} n={} g={} k={} m{}={} bound={} holds={} equality={}",
                emit_graph6(g),
                c.n,
                c.girth,
                c.k,
                c.interval,
                c.count,
                c.bound,
                c.holds,
                c.is_equality
            );
            let ok = c.holds;
            Ok((c, text, ok))
        }),
        Command::Verify {
            which: VerifyCommand::Thr(target),
        } => each(&target, |g| {
            let mult_n = classify_girth3(g, Girth3Statistic::MultN)?;
            let top_interval = classify_girth3(g, Girth3Statistic::TopInterval)?;
            let text = format!(
                "{} m_G(n)={} {:?}{:?} m_G[n-1,n]={} {:?}{:?}",
                emit_graph6(g),
                mult_n.value,
                mult_n.label,
                mult_n.witness_params,
                top_interval.value,
                top_interval.label,
                top_interval.witness_params
            );
            Ok((
                ThrOut {
                    graph6: emit_graph6(g),
                    mult_n,
                    top_interval,
                },
                text,
                true,
            ))
        }),
        Command::Sweep { which } => sweep(which),
        Command::Lemmas { nmax, json } => {
            let r = lemma_suite(nmax, EnumConfig::with_bound(nmax.max(DEFAULT_ENUM_BOUND)))?;
            if json {
                print_json(&r)?;
            } else {
                for l in &r.lemmas {
                    let verdict = if l.passed { "pass" } else { "FAIL" };
                    println!(
                        "{verdict} {} cases={} counterexamples={}",
                        l.lemma,
                        l.cases_checked,
                        l.counterexamples.len()
                    );
                    for c in &l.counterexamples {
                        println!("    {c}");
                    }
                }
                println!("passed: {}", r.passed);
            }
            Ok(r.passed)
        }
    }
}

fn sweep(which: SweepCommand) -> Outcome {
    let opts = match &which {
        SweepCommand::Gen { opts, .. } | SweepCommand::Thr { opts } => opts,
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = opts.jobs {
        if jobs == 0 {
            return Err(Usage("--jobs must be at least 1".into()));
        }
        pool = pool.num_threads(jobs);
    }
    let pool = pool.build()?;
    let config = EnumConfig::with_bound(opts.n.max(DEFAULT_ENUM_BOUND));
    let report: TheoremReport = pool.install(|| match &which {
        SweepCommand::Gen { k, opts } => exhaustive_equality_search(opts.n, *k, config),
        SweepCommand::Thr { opts } => exhaustive_thr(opts.n, config),
    })?;
    if opts.json {
        print_json(&report)?;
    } else {
        print_report(&report);
    }
    Ok(report.matched)
}

fn print_report(r: &TheoremReport) {
    let id = serde_json::to_value(r.theorem_id).unwrap_or_default();
    let mut params = format!("n={}", r.params.n);
    if let Some(k) = r.params.k {
        params += &format!(" k={k}");
    }
    println!("theorem: {} {params}", id.as_str().unwrap_or("?"));
    println!("graphs checked: {}", r.graphs_checked);
    println!("violations: {}", r.violations.len());
    for v in &r.violations {
        println!("    {v}");
    }
    println!("equality witnesses: {}", r.equality_witnesses.join(" "));
    if r.expected_open {
        println!("expected witnesses: open");
    } else {
        println!("expected witnesses: {}", r.expected_witnesses.join(" "));
    }
    for c in &r.checks {
        println!(
            "{} = {}: found {} missing [{}] unexpected [{}] match={}",
            c.statistic,
            c.value,
            c.found.len(),
            c.missing.join(" "),
            c.unexpected.join(" "),
            c.matched
        );
    }
    println!("match: {}", r.matched);
}
