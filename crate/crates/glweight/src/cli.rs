//! The `glweight` command line.
//!
//! Exit codes: 0 success, 1 oracle failures, 2 unparseable input,
//! 3 internal error.

use std::io::Write;
use std::path::PathBuf;

use anyhow::{anyhow, Result};
use clap::{Parser, Subcommand, ValueEnum};
use glweight_core::hc::{casimir_hc_images, gl11_casimir_in_c1_c2, is_supersymmetric};
use glweight_core::poly::substitute_c0;
use glweight_core::uea::DEFAULT_BUDGET;
use glweight_core::{ChordDiagram, Evaluator, Namespace, Permutation, ReductionPolicy, Signature};
use serde::Serialize;

use crate::fixture::compute_table;
use crate::format::{parse_diagram, parse_perm, poly_to_json, DiagramJson, PermJson, SignJson, TermJson};
use crate::memo::SharedMemo;
use crate::oracle::{run_oracle, Verdict};

#[derive(Parser, Debug)]
#[command(
    name = "glweight",
    version,
    about = "Universal GL weight system on permutations and chord diagrams"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Append-only memo file shared between runs.
    #[arg(long, global = true, value_name = "PATH")]
    pub cache: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate the weight system on one permutation or chord diagram.
    Eval {
        /// Cycle notation `(1 3 2)`, one-line `3 1 2`, or `{"k":3,"images":[3,1,2]}`.
        #[arg(long, conflicts_with = "diagram", required_unless_present = "diagram")]
        perm: Option<String>,
        /// Chord list `[[1,3],[2,4]]` or `{"n":2,"pairs":[[1,3],[2,4]]}`.
        #[arg(long)]
        diagram: Option<String>,
        /// Substitute C0 = m - n.
        #[arg(long, value_name = "M,N", value_parser = parse_mn)]
        mn: Option<Signature>,
    },
    /// Tabulate every permutation up to a given length.
    Table {
        #[arg(long, default_value_t = 4)]
        k_max: usize,
        /// Largest accepted k_max.
        #[arg(long, default_value_t = 6)]
        limit: usize,
    },
    /// Compare the recurrence with brute-force sums in U(gl(m|n)).
    Oracle {
        #[arg(long, default_value_t = 3)]
        k_max: usize,
        /// Superalgebra signature; repeat for several.
        #[arg(long, value_name = "M,N", value_parser = parse_mn, default_values = ["1,1"])]
        mn: Vec<Signature>,
        /// Check a single permutation instead of all of S_k, k <= k_max.
        #[arg(long)]
        perm: Option<String>,
        /// Largest number of index tuples a single sum may visit.
        #[arg(long, default_value_t = DEFAULT_BUDGET, value_parser = parse_budget)]
        budget: u128,
    },
    /// Harish–Chandra images of the Casimir elements.
    Hc {
        #[arg(long, value_name = "M,N", value_parser = parse_mn)]
        mn: Signature,
        /// Highest Casimir index.
        #[arg(long, default_value_t = 8)]
        order: usize,
    },
    /// Summarize a memo file.
    CacheInfo,
}

fn parse_mn(s: &str) -> std::result::Result<Signature, String> {
    let (m, n) = s.split_once(',').ok_or_else(|| format!("expected M,N but got `{s}`"))?;
    let m: usize = m.trim().parse().map_err(|_| format!("bad M in `{s}`"))?;
    let n: usize = n.trim().parse().map_err(|_| format!("bad N in `{s}`"))?;
    if m + n > 256 {
        return Err("m + n must be at most 256".into());
    }
    Ok(Signature::new(m, n))
}

fn parse_budget(s: &str) -> std::result::Result<u128, String> {
    let b: u128 = s.parse().map_err(|_| format!("bad budget `{s}`"))?;
    if b == 0 {
        return Err("budget must be positive".into());
    }
    Ok(b)
}

/// Failure classes, mapped to exit codes.
#[derive(Debug)]
pub enum Failure {
    Input(anyhow::Error),
    Internal(anyhow::Error),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Input(_) => 2,
            Failure::Internal(_) => 3,
        }
    }
}

trait InputContext<T> {
    fn input(self) -> std::result::Result<T, Failure>;
}

impl<T> InputContext<T> for Result<T> {
    fn input(self) -> std::result::Result<T, Failure> {
        self.map_err(Failure::Input)
    }
}

fn internal<T>(r: Result<T>) -> std::result::Result<T, Failure> {
    r.map_err(Failure::Internal)
}

fn open_memo(cache: &Option<PathBuf>) -> Result<SharedMemo> {
    match cache {
        Some(p) => SharedMemo::open(p),
        None => Ok(SharedMemo::in_memory()),
    }
}

fn json_line(out: &mut dyn Write, value: &impl Serialize) -> Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

#[derive(Serialize)]
struct EvalJson {
    perm: PermJson,
    diagram: Option<DiagramJson>,
    mn: Option<[usize; 2]>,
    text: String,
    value: Vec<TermJson>,
}

fn cmd_eval(
    cli: &Cli,
    perm: &Option<String>,
    diagram: &Option<String>,
    mn: Option<Signature>,
    out: &mut dyn Write,
) -> std::result::Result<i32, Failure> {
    let (sigma, diagram): (Permutation, Option<ChordDiagram>) = match (perm, diagram) {
        (Some(p), _) => (parse_perm(p).input()?, None),
        (None, Some(d)) => {
            let d = parse_diagram(d).input()?;
            (d.to_involution(), Some(d))
        }
        (None, None) => return Err(Failure::Input(anyhow!("one of --perm or --diagram is required"))),
    };
    let memo = internal(open_memo(&cli.cache))?;
    let mut value = Evaluator::new(&memo, ReductionPolicy::Leftmost).evaluate(&sigma);
    if !value.is_integral() {
        return Err(Failure::Internal(anyhow!("non-integral coefficient in {value}")));
    }
    if let Some(sig) = mn {
        value = substitute_c0(
            &value,
            &glweight_core::Rational::from_integer(sig.supertrace_dim().into()),
        );
    }
    internal(memo.flush())?;
    internal((|| match cli.format {
        Format::Text => Ok(writeln!(out, "{value}")?),
        Format::Json => json_line(
            out,
            &EvalJson {
                perm: PermJson::from(&sigma),
                diagram: diagram.as_ref().map(DiagramJson::from),
                mn: mn.map(|s| [s.m, s.n]),
                text: value.to_string(),
                value: poly_to_json(&value)?,
            },
        ),
    })())?;
    Ok(0)
}

#[derive(Serialize)]
struct TableJson {
    k: usize,
    sigma: Vec<usize>,
    cycles: String,
    sign: SignJson,
    text: String,
    value: Vec<TermJson>,
}

fn cmd_table(cli: &Cli, k_max: usize, limit: usize, out: &mut dyn Write) -> std::result::Result<i32, Failure> {
    if k_max > limit {
        return Err(Failure::Input(anyhow!(
            "k_max = {k_max} exceeds the limit {limit}; raise --limit to allow it"
        )));
    }
    let memo = internal(open_memo(&cli.cache))?;
    let rows = compute_table(k_max, &memo);
    internal(memo.flush())?;
    internal((|| {
        match cli.format {
            Format::Text => {
                writeln!(out, "k\tsigma\tf\tvalue")?;
                for r in &rows {
                    writeln!(
                        out,
                        "{}\t{}\t{}\t{}",
                        r.sigma.len(),
                        r.sigma.cycle_notation(),
                        r.sign,
                        r.value
                    )?;
                }
            }
            Format::Json => {
                let rows = rows
                    .iter()
                    .map(|r| {
                        Ok(TableJson {
                            k: r.sigma.len(),
                            sigma: r.sigma.images_one_based(),
                            cycles: r.sigma.cycle_notation(),
                            sign: SignJson::from(&r.sign),
                            text: r.value.to_string(),
                            value: poly_to_json(&r.value)?,
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                json_line(out, &rows)?;
            }
        }
        Ok(())
    })())?;
    Ok(0)
}

#[derive(Serialize)]
struct OracleCaseJson {
    m: usize,
    n: usize,
    sigma: PermJson,
    verdict: String,
}

#[derive(Serialize)]
struct OracleJson {
    cases: Vec<OracleCaseJson>,
    passed: usize,
    failed: usize,
    skipped: usize,
}

fn cmd_oracle(
    cli: &Cli,
    k_max: usize,
    sigs: &[Signature],
    perm: &Option<String>,
    budget: u128,
    out: &mut dyn Write,
) -> std::result::Result<i32, Failure> {
    let perms: Vec<Permutation> = match perm {
        Some(p) => vec![parse_perm(p).input()?],
        None => (1..=k_max).flat_map(Permutation::all).collect(),
    };
    let memo = internal(open_memo(&cli.cache))?;
    let report = run_oracle(&perms, sigs, budget, &memo);
    internal(memo.flush())?;
    let count = |pred: fn(&Verdict) -> bool| report.iter().filter(|c| pred(&c.verdict)).count();
    let passed = count(|v| *v == Verdict::Pass);
    let failed = count(|v| *v == Verdict::Fail);
    let skipped = count(|v| matches!(v, Verdict::Skipped(_)));
    internal((|| {
        match cli.format {
            Format::Text => {
                for c in &report {
                    writeln!(out, "{}\t{}\t{}", c.verdict, c.sig, c.sigma)?;
                }
                writeln!(out, "summary: {passed} passed, {failed} failed, {skipped} skipped")?;
            }
            Format::Json => json_line(
                out,
                &OracleJson {
                    cases: report
                        .iter()
                        .map(|c| OracleCaseJson {
                            m: c.sig.m,
                            n: c.sig.n,
                            sigma: PermJson::from(&c.sigma),
                            verdict: c.verdict.to_string(),
                        })
                        .collect(),
                    passed,
                    failed,
                    skipped,
                },
            )?,
        }
        Ok(())
    })())?;
    Ok(if failed == 0 { 0 } else { 1 })
}

#[derive(Serialize)]
struct ImageJson {
    k: usize,
    text: String,
    value: Vec<TermJson>,
    supersymmetric: bool,
}

#[derive(Serialize)]
struct Gl11Json {
    k: usize,
    text: String,
    numerator: Vec<TermJson>,
    c1_power: u32,
}

#[derive(Serialize)]
struct HcJson {
    m: usize,
    n: usize,
    order: usize,
    images: Vec<ImageJson>,
    gl11: Vec<Gl11Json>,
}

fn cmd_hc(cli: &Cli, sig: Signature, order: usize, out: &mut dyn Write) -> std::result::Result<i32, Failure> {
    let images = casimir_hc_images(sig, order);
    let gl11 = if (sig.m, sig.n) == (1, 1) {
        internal(
            (3..=order)
                .map(|k| Ok((k, gl11_casimir_in_c1_c2(k)?)))
                .collect::<Result<Vec<_>>>(),
        )?
    } else {
        Vec::new()
    };
    internal((|| {
        match cli.format {
            Format::Text => {
                writeln!(out, "{sig}, Casimir images in x_i = E_ii + r_i")?;
                for (k, p) in images.iter().enumerate() {
                    let tag = if is_supersymmetric(p, sig) {
                        "supersymmetric"
                    } else {
                        "NOT supersymmetric"
                    };
                    writeln!(out, "phi(C{k}) = {}\t[{tag}]", p.display(Namespace::Shifted))?;
                }
                for (k, r) in &gl11 {
                    writeln!(out, "C{k} = {r}")?;
                }
            }
            Format::Json => {
                let images = images
                    .iter()
                    .enumerate()
                    .map(|(k, p)| {
                        Ok(ImageJson {
                            k,
                            text: p.display(Namespace::Shifted).to_string(),
                            value: poly_to_json(p)?,
                            supersymmetric: is_supersymmetric(p, sig),
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                let gl11 = gl11
                    .iter()
                    .map(|(k, r)| {
                        Ok(Gl11Json {
                            k: *k,
                            text: r.to_string(),
                            numerator: poly_to_json(&r.numerator)?,
                            c1_power: r.c1_power,
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                json_line(
                    out,
                    &HcJson {
                        m: sig.m,
                        n: sig.n,
                        order,
                        images,
                        gl11,
                    },
                )?;
            }
        }
        Ok(())
    })())?;
    Ok(0)
}

#[derive(Serialize)]
struct CacheInfoJson {
    path: String,
    records: usize,
    malformed_lines: usize,
    distinct_keys: usize,
    max_k: usize,
}

fn cmd_cache_info(cli: &Cli, out: &mut dyn Write) -> std::result::Result<i32, Failure> {
    let Some(path) = &cli.cache else {
        return Err(Failure::Input(anyhow!("cache-info needs --cache PATH")));
    };
    if !path.exists() {
        return Err(Failure::Input(anyhow!("no cache file at {}", path.display())));
    }
    let memo = internal(SharedMemo::open(path))?;
    let s = memo.stats();
    internal((|| {
        match cli.format {
            Format::Text => {
                writeln!(out, "path: {}", path.display())?;
                writeln!(out, "records: {}", s.records)?;
                writeln!(out, "malformed lines: {}", s.malformed_lines)?;
                writeln!(out, "distinct keys: {}", s.distinct_keys)?;
                writeln!(out, "largest k: {}", s.max_k)?;
            }
            Format::Json => json_line(
                out,
                &CacheInfoJson {
                    path: path.display().to_string(),
                    records: s.records,
                    malformed_lines: s.malformed_lines,
                    distinct_keys: s.distinct_keys,
                    max_k: s.max_k,
                },
            )?,
        }
        Ok(())
    })())?;
    Ok(0)
}

/// Runs a parsed command, writing results to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> std::result::Result<i32, Failure> {
    match &cli.command {
        Command::Eval { perm, diagram, mn } => cmd_eval(cli, perm, diagram, *mn, out),
        Command::Table { k_max, limit } => cmd_table(cli, *k_max, *limit, out),
        Command::Oracle {
            k_max,
            mn,
            perm,
            budget,
        } => cmd_oracle(cli, *k_max, mn, perm, *budget, out),
        Command::Hc { mn, order } => cmd_hc(cli, *mn, *order, out),
        Command::CacheInfo => cmd_cache_info(cli, out),
    }
}

/// Entry point for the binary; returns the process exit code.
pub fn main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let stdout = std::io::stdout();
    let result = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| run(&cli, &mut stdout.lock())));
    match result {
        Ok(Ok(code)) => code,
        Ok(Err(f)) => {
            let (Failure::Input(e) | Failure::Internal(e)) = &f;
            eprintln!("error: {e:#}");
            f.exit_code()
        }
        Err(_) => 3,
    }
}
