//! Command-line front end: configs, brackets, structure-constant tables,
//! derivation and cocycle tools, and seeded property suites.
//!
//! Exit codes: 0 when everything checked passes, 1 on a property failure,
//! 2 on a usage, parse or configuration error.

pub mod opspec;
pub mod suite;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use contact_lie::bracket::bracket_basis;
use contact_lie::cohomology::{
    check_cocycle, trivialize, verify_on_window, Cocycle, FiniteFunctional, Functional, Trivialization,
};
use contact_lie::derivations::{check_derivation, DecomposeError, Decomposer};
use contact_lie::literal::{format_basis, format_element, parse_element};
use contact_lie::rational::{format_q, parse_q};
use contact_lie::window::{window, Sampler};
use contact_lie::{bracket, bracket_operator, AlgebraConfig, BasisIndex};

#[derive(Debug, Parser)]
#[command(name = "contact-lie", version, about = "Exact computations in contact Lie algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct ConfigArg {
    /// Algebra configuration file (`ell:`, `j0:` and `gamma:` lines).
    #[arg(long, value_name = "PATH")]
    pub config: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a configuration and print it in canonical form.
    CheckConfig(ConfigArg),
    /// Bracket of two elements.
    Bracket {
        #[command(flatten)]
        config: ConfigArg,
        lhs: String,
        rhs: String,
        /// Also compute the bracket from the differential-operator form and
        /// require both to agree.
        #[arg(long)]
        oracle: bool,
    },
    /// Commutative product of two elements.
    Mul {
        #[command(flatten)]
        config: ConfigArg,
        lhs: String,
        rhs: String,
    },
    /// Structure constants on all pairs of a window, as CSV.
    Table {
        #[command(flatten)]
        config: ConfigArg,
        #[arg(long, default_value_t = 1)]
        radius: u32,
        /// Output file; stdout when omitted.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Seeded property suites; the report goes to stdout, timing to stderr.
    Suite {
        #[command(flatten)]
        config: ConfigArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 300)]
        samples: usize,
        /// Test hook: replace the constant 2 of the bracket used by the
        /// Jacobi property.
        #[arg(long, hide = true, value_name = "RATIONAL")]
        corrupt_constant: Option<String>,
    },
    /// Derivation tools.
    #[command(subcommand)]
    Deriv(DerivCommand),
    /// 2-cocycle tools.
    #[command(subcommand)]
    Cocycle(CocycleCommand),
}

#[derive(Debug, Subcommand)]
pub enum DerivCommand {
    /// Check the derivation law on random basis pairs.
    Check {
        #[command(flatten)]
        config: ConfigArg,
        /// Operator spec, e.g. `2*ad(1*x[0,1,1]) + dt(1') + dmu(0 1 -1)`.
        spec: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 500)]
        samples: usize,
    },
    /// Split an operator into outer, diagonal and inner parts on a window.
    Decompose {
        #[command(flatten)]
        config: ConfigArg,
        spec: String,
        /// Window radius used to match the operator.
        #[arg(long, default_value_t = 4)]
        radius: u32,
        /// Radius of the allowed support of the inner part.
        #[arg(long, default_value_t = 3)]
        inner_radius: u32,
    },
}

#[derive(Debug, Subcommand)]
pub enum CocycleCommand {
    /// Check skew-symmetry and the cyclic identity on random triples.
    Check {
        #[command(flatten)]
        config: ConfigArg,
        /// File of `basis basis value` lines.
        table: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 500)]
        samples: usize,
    },
    /// Construct f with ψ(u, v) = f([u, v]) and print it on a window.
    Trivialize {
        #[command(flatten)]
        config: ConfigArg,
        /// A table file, or `coboundary <functional file>`.
        #[arg(required = true, num_args = 1..=2)]
        psi: Vec<String>,
        #[arg(long, default_value_t = 2)]
        radius: u32,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Verify ψ(u, v) = f([u, v]) on all pairs of a window.
    Verify {
        #[command(flatten)]
        config: ConfigArg,
        #[arg(required = true, num_args = 1..=2)]
        psi: Vec<String>,
        /// Functional file of `basis value` lines.
        #[arg(long, value_name = "PATH")]
        functional: PathBuf,
        #[arg(long, default_value_t = 2)]
        radius: u32,
    },
}

/// Result of a command that ran to completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    PropertyFailure,
}

impl Status {
    fn from_failed(failed: bool) -> Self {
        if failed {
            Status::PropertyFailure
        } else {
            Status::Pass
        }
    }

    pub fn code(self) -> u8 {
        match self {
            Status::Pass => 0,
            Status::PropertyFailure => 1,
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

pub fn load_config(path: &Path) -> Result<Arc<AlgebraConfig>> {
    let text = read(path)?;
    let cfg = AlgebraConfig::parse(&text).with_context(|| format!("config {}", path.display()))?;
    Ok(Arc::new(cfg))
}

fn load_psi(cfg: &Arc<AlgebraConfig>, spec: &[String]) -> Result<Cocycle> {
    match spec {
        [path] => {
            let text = read(Path::new(path))?;
            Ok(Cocycle::parse_table(cfg, &text).with_context(|| format!("table {path}"))?)
        }
        [kw, path] if kw == "coboundary" => {
            let g = load_functional(cfg, Path::new(path))?;
            Ok(Cocycle::coboundary(Arc::new(g)))
        }
        _ => bail!("expected a table file or `coboundary <functional file>`"),
    }
}

fn load_functional(cfg: &Arc<AlgebraConfig>, path: &Path) -> Result<FiniteFunctional> {
    let text = read(path)?;
    FiniteFunctional::parse(cfg, &text).with_context(|| format!("functional {}", path.display()))
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

/// Structure-constant rows `(lhs, rhs, result, coefficient)` for all ordered
/// pairs of the window, sorted by the literals. A vanishing bracket gives a
/// single row with result `0`.
pub fn table_rows(cfg: &Arc<AlgebraConfig>, radius: u32) -> Vec<[String; 4]> {
    let w = window(cfg, radius);
    let mut rows = Vec::new();
    for a in &w {
        for b in &w {
            let (la, lb) = (format_basis(a), format_basis(b));
            let r = bracket_basis(cfg, a, b);
            if r.is_zero() {
                rows.push([la.clone(), lb.clone(), "0".into(), "0".into()]);
            }
            for (idx, c) in r.terms() {
                rows.push([la.clone(), lb.clone(), format_basis(idx), format_q(c)]);
            }
        }
    }
    rows.sort();
    rows
}

pub fn table_csv(cfg: &Arc<AlgebraConfig>, radius: u32) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["lhs_index", "rhs_index", "result_term_index", "coefficient"])?;
    for row in table_rows(cfg, radius) {
        w.write_record(&row)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

fn functional_text(f: &Trivialization, cfg: &Arc<AlgebraConfig>, radius: u32) -> String {
    let w: Vec<BasisIndex> = window(cfg, radius);
    let g = FiniteFunctional::materialize(f, &w);
    format!("# method: {}\n# window radius: {radius}\n{}", f.method(), g.to_text())
}

pub fn run(cli: Cli) -> Result<Status> {
    match cli.command {
        Command::CheckConfig(c) => {
            let cfg = load_config(&c.config)?;
            print!("{}", cfg.to_text());
            println!(
                "# valid: rank {}, {} index slots",
                cfg.gamma().rank(),
                cfg.dim()
            );
            Ok(Status::Pass)
        }
        Command::Bracket { config, lhs, rhs, oracle } => {
            let cfg = load_config(&config.config)?;
            let u = parse_element(&cfg, &lhs).context("lhs")?;
            let v = parse_element(&cfg, &rhs).context("rhs")?;
            let r = bracket(&u, &v)?;
            println!("{}", format_element(&r));
            if oracle {
                let o = bracket_operator(&u, &v)?;
                if o != r {
                    eprintln!("oracle mismatch: operator form gives {}", format_element(&o));
                    return Ok(Status::PropertyFailure);
                }
            }
            Ok(Status::Pass)
        }
        Command::Mul { config, lhs, rhs } => {
            let cfg = load_config(&config.config)?;
            let u = parse_element(&cfg, &lhs).context("lhs")?;
            let v = parse_element(&cfg, &rhs).context("rhs")?;
            println!("{}", format_element(&u.multiply(&v)?));
            Ok(Status::Pass)
        }
        Command::Table { config, radius, out } => {
            let cfg = load_config(&config.config)?;
            emit(&out, &table_csv(&cfg, radius)?)?;
            Ok(Status::Pass)
        }
        Command::Suite {
            config,
            seed,
            samples,
            corrupt_constant,
        } => {
            let cfg = load_config(&config.config)?;
            let mut opts = suite::SuiteOptions::new(seed, samples);
            if let Some(c) = corrupt_constant {
                opts.jacobi_constant = parse_q(&c).with_context(|| format!("bad rational {c:?}"))?;
            }
            let start = Instant::now();
            let report = suite::run_suite(&cfg, &opts);
            print!("{}", report.render());
            eprintln!("duration: {:.3}s", start.elapsed().as_secs_f64());
            Ok(Status::from_failed(report.failed()))
        }
        Command::Deriv(DerivCommand::Check {
            config,
            spec,
            seed,
            samples,
        }) => {
            let cfg = load_config(&config.config)?;
            let op = opspec::parse_operator(&cfg, &spec)?;
            let mut s = Sampler::new(seed);
            let pairs: Vec<_> = (0..samples).map(|_| (s.basis(&cfg), s.basis(&cfg))).collect();
            let r = check_derivation(&op, &pairs);
            println!("derivation-law: {}/{} {}", r.checked - r.failures, r.checked, verdict(r.passed()));
            if let Some(f) = &r.first_failure {
                println!(
                    "  witness: ({}, {}): D[u,v] = {} but [Du,v]+[u,Dv] = {}",
                    format_basis(&f.u),
                    format_basis(&f.v),
                    format_element(&f.lhs),
                    format_element(&f.rhs)
                );
            }
            Ok(Status::from_failed(!r.passed()))
        }
        Command::Deriv(DerivCommand::Decompose {
            config,
            spec,
            radius,
            inner_radius,
        }) => {
            let cfg = load_config(&config.config)?;
            let op = opspec::parse_operator(&cfg, &spec)?;
            let inner = window(&cfg, inner_radius);
            let outcome = Decomposer::new(&cfg, window(&cfg, radius), &inner).and_then(|d| d.decompose(&op));
            match outcome {
                Ok(dec) => {
                    for (p, c) in &dec.outer {
                        println!("dt({}): {}", cfg.shape().label(*p), format_q(c));
                    }
                    println!("dmu: {}", dec.mu);
                    println!("ad: {}", format_element(&dec.inner));
                    Ok(Status::Pass)
                }
                Err(e @ DecomposeError::Ambiguous { .. }) => bail!("{e}"),
                Err(e @ DecomposeError::Residual { .. }) => {
                    println!("residual: {e}");
                    Ok(Status::PropertyFailure)
                }
            }
        }
        Command::Cocycle(CocycleCommand::Check {
            config,
            table,
            seed,
            samples,
        }) => {
            let cfg = load_config(&config.config)?;
            let psi = Cocycle::parse_table(&cfg, &read(&table)?).with_context(|| format!("table {}", table.display()))?;
            let mut pool: Vec<BasisIndex> = psi.table_indices().to_vec();
            pool.extend(window(&cfg, 1));
            let mut s = Sampler::new(seed);
            let triples: Vec<_> = (0..samples)
                .map(|_| (s.pick(&pool).clone(), s.pick(&pool).clone(), s.pick(&pool).clone()))
                .collect();
            let r = check_cocycle(&psi, &triples);
            println!("pairs: {} triples: {} {}", r.pairs_checked, r.triples_checked, verdict(r.passed()));
            if let Some(w) = r.witness() {
                println!("  witness: {w}");
            }
            Ok(Status::from_failed(!r.passed()))
        }
        Command::Cocycle(CocycleCommand::Trivialize {
            config,
            psi,
            radius,
            out,
        }) => {
            let cfg = load_config(&config.config)?;
            let psi = load_psi(&cfg, &psi)?;
            let f = trivialize(&psi)?;
            emit(&out, &functional_text(&f, &cfg, radius))?;
            Ok(Status::Pass)
        }
        Command::Cocycle(CocycleCommand::Verify {
            config,
            psi,
            functional,
            radius,
        }) => {
            let cfg = load_config(&config.config)?;
            let psi = load_psi(&cfg, &psi)?;
            let f = load_functional(&cfg, &functional)?;
            let r = verify_on_window(&psi, &f as &dyn Functional, radius);
            println!(
                "pairs: {} points: {} {}",
                r.pairs_checked,
                r.points_checked,
                verdict(r.passed())
            );
            if let Some(w) = r.witness() {
                println!("  witness: {w}");
            }
            Ok(Status::from_failed(!r.passed()))
        }
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}
