//! Command-line front end: ad-hoc element and polynomial queries,
//! poset/Hasse export, and the named verification suites.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or
//! configuration error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use coxkl_core::coxeter::Side;
use coxkl_core::hat::{HatCtx, HatSystem};
use coxkl_core::kl::{kl_p, kl_q, r_poly, TableKind};
use coxkl_core::springer::{enumerate_v, VCtx};

use coxkl::formats::{
    laurent_full_json, load_hat_config, load_system, qpoly_json, save_cache, table_with_cache,
};
use coxkl::grammar;
use coxkl::report::SuiteReport;
use coxkl::suites::{run_suite, SuiteOptions, SUITE_NAMES};
use coxkl::{CliError, Result};

#[derive(Parser)]
#[command(name = "coxkl", version, about = "Coxeter group orbit-poset combinatorics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Element arithmetic over a Coxeter system file.
    Element {
        #[command(subcommand)]
        cmd: ElementCmd,
    },
    /// Polynomial families.
    Poly {
        #[command(subcommand)]
        cmd: PolyCmd,
    },
    /// Poset queries and Hasse-diagram export.
    Poset {
        #[command(subcommand)]
        cmd: PosetCmd,
    },
    /// Named verification suites.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct SystemArg {
    /// Coxeter system spec file (JSON).
    #[arg(long)]
    system: PathBuf,
}

#[derive(Args)]
struct BaseArgs {
    /// Base Coxeter system spec file (JSON).
    #[arg(long = "W")]
    w_system: PathBuf,
    /// Hat configuration file, or `default`.
    #[arg(long)]
    hat: Option<String>,
}

#[derive(Subcommand)]
enum ElementCmd {
    /// Canonical form of a word.
    Reduce {
        #[command(flatten)]
        system: SystemArg,
        #[arg(long)]
        word: String,
    },
    /// Product of two elements.
    Mul {
        #[command(flatten)]
        system: SystemArg,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Length of an element.
    Length {
        #[command(flatten)]
        system: SystemArg,
        #[arg(long)]
        word: String,
    },
    /// Descent set of an element.
    Descents {
        #[command(flatten)]
        system: SystemArg,
        #[arg(long)]
        word: String,
        #[arg(long, value_enum, default_value_t = SideArg::Left)]
        side: SideArg,
    },
    /// Bruhat order comparison.
    BruhatLeq {
        #[command(flatten)]
        system: SystemArg,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

#[derive(Subcommand)]
enum PolyCmd {
    /// Classical normalized R-polynomial (in Z[abar]).
    R {
        #[command(flatten)]
        system: SystemArg,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        /// On-disk memo cache (JSON lines) for the classical table.
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Kazhdan-Lusztig polynomial P(q).
    P {
        #[command(flatten)]
        system: SystemArg,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Inverse Kazhdan-Lusztig polynomial Q(q).
    Q {
        #[command(flatten)]
        system: SystemArg,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Orbit-poset polynomial b of a pair of triples `[I;a;b]`.
    B {
        #[command(flatten)]
        base: BaseArgs,
        #[arg(long)]
        w: String,
        #[arg(long)]
        v: String,
    },
    /// Orbit-poset Kazhdan-Lusztig analogue c(q).
    C {
        #[command(flatten)]
        base: BaseArgs,
        #[arg(long)]
        w: String,
        #[arg(long)]
        v: String,
    },
    /// Inverse of the c-family.
    Cinv {
        #[command(flatten)]
        base: BaseArgs,
        #[arg(long)]
        w: String,
        #[arg(long)]
        v: String,
    },
    /// Twisted R-polynomial of two extended-group elements (words in
    /// the hat generators, theta generators named `t_<gen>`).
    Ra {
        #[command(flatten)]
        base: BaseArgs,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Twisted Kazhdan-Lusztig polynomial P_A(q).
    Pa {
        #[command(flatten)]
        base: BaseArgs,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
}

#[derive(Subcommand)]
enum PosetCmd {
    /// Elements of the closed interval [w, v].
    Interval {
        #[command(flatten)]
        base: BaseArgs,
        #[arg(long)]
        w: String,
        #[arg(long)]
        v: String,
    },
    /// Hasse diagram in DOT form; the full poset when no pair is given.
    Hasse {
        #[command(flatten)]
        base: BaseArgs,
        #[arg(long)]
        w: Option<String>,
        #[arg(long)]
        v: Option<String>,
    },
    /// Moebius function of the interval [w, v].
    Mobius {
        #[command(flatten)]
        base: BaseArgs,
        #[arg(long)]
        w: String,
        #[arg(long)]
        v: String,
    },
    /// Graph edges inside the interval [w, v].
    Edges {
        #[command(flatten)]
        base: BaseArgs,
        #[arg(long)]
        w: String,
        #[arg(long)]
        v: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name, or `all`.
    suite: String,
    #[command(flatten)]
    base: BaseArgs,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    report: ReportFormat,
    /// Include cases tagged slow.
    #[arg(long)]
    slow: bool,
    /// Seed for the deterministic samplers.
    #[arg(long, default_value_t = 0xC0C0_CAFE)]
    seed: u64,
}

const LIMIT: usize = 2_000_000;

fn run_element(cmd: ElementCmd) -> Result<String> {
    match cmd {
        ElementCmd::Reduce { system, word } => {
            let sys = load_system(&system.system)?;
            let x = grammar::parse_word(&sys, &word)?;
            Ok(grammar::format_word(&sys, &x))
        }
        ElementCmd::Mul { system, x, y } => {
            let sys = load_system(&system.system)?;
            let a = grammar::parse_word(&sys, &x)?;
            let b = grammar::parse_word(&sys, &y)?;
            Ok(grammar::format_word(&sys, &sys.mul(&a, &b)?))
        }
        ElementCmd::Length { system, word } => {
            let sys = load_system(&system.system)?;
            Ok(grammar::parse_word(&sys, &word)?.length().to_string())
        }
        ElementCmd::Descents { system, word, side } => {
            let sys = load_system(&system.system)?;
            let x = grammar::parse_word(&sys, &word)?;
            let side = match side {
                SideArg::Left => Side::Left,
                SideArg::Right => Side::Right,
            };
            Ok(sys.format_genset(sys.descents(&x, side)))
        }
        ElementCmd::BruhatLeq { system, x, y } => {
            let sys = load_system(&system.system)?;
            let a = grammar::parse_word(&sys, &x)?;
            let b = grammar::parse_word(&sys, &y)?;
            Ok(sys.bruhat_leq(&a, &b)?.to_string())
        }
    }
}

fn run_poly(cmd: PolyCmd) -> Result<String> {
    match cmd {
        PolyCmd::R { system, x, y, cache } => {
            let sys = load_system(&system.system)?;
            let a = grammar::parse_word(&sys, &x)?;
            let b = grammar::parse_word(&sys, &y)?;
            let mut tbl = table_with_cache(&sys, TableKind::RTilde, cache.as_deref())?;
            let p = r_poly(&sys, &mut tbl, &a, &b)?;
            if let Some(path) = cache.as_deref() {
                save_cache(path, &sys, &tbl)?;
            }
            Ok(laurent_full_json(&p).to_string())
        }
        PolyCmd::P { system, x, y, cache } => {
            let sys = load_system(&system.system)?;
            let a = grammar::parse_word(&sys, &x)?;
            let b = grammar::parse_word(&sys, &y)?;
            let mut tbl = table_with_cache(&sys, TableKind::RTilde, cache.as_deref())?;
            let p = kl_p(&sys, &mut tbl, &a, &b)?;
            if let Some(path) = cache.as_deref() {
                save_cache(path, &sys, &tbl)?;
            }
            Ok(qpoly_json(&p).to_string())
        }
        PolyCmd::Q { system, x, y, cache } => {
            let sys = load_system(&system.system)?;
            let a = grammar::parse_word(&sys, &x)?;
            let b = grammar::parse_word(&sys, &y)?;
            let mut tbl = table_with_cache(&sys, TableKind::RTilde, cache.as_deref())?;
            let p = kl_q(&sys, &mut tbl, &a, &b)?;
            if let Some(path) = cache.as_deref() {
                save_cache(path, &sys, &tbl)?;
            }
            Ok(qpoly_json(&p).to_string())
        }
        PolyCmd::B { base, w, v } => {
            let sys = load_system(&base.w_system)?;
            let mut vctx = VCtx::new(&sys);
            let w = grammar::parse_velement(&sys, &w)?;
            let v = grammar::parse_velement(&sys, &v)?;
            Ok(laurent_full_json(&vctx.b_poly(&w, &v)?).to_string())
        }
        PolyCmd::C { base, w, v } => {
            let sys = load_system(&base.w_system)?;
            let mut vctx = VCtx::new(&sys);
            let w = grammar::parse_velement(&sys, &w)?;
            let v = grammar::parse_velement(&sys, &v)?;
            Ok(qpoly_json(&vctx.c_poly(&w, &v)?).to_string())
        }
        PolyCmd::Cinv { base, w, v } => {
            let sys = load_system(&base.w_system)?;
            let mut vctx = VCtx::new(&sys);
            let w = grammar::parse_velement(&sys, &w)?;
            let v = grammar::parse_velement(&sys, &v)?;
            Ok(qpoly_json(&vctx.c_inv_poly(&w, &v)?).to_string())
        }
        PolyCmd::Ra { base, x, y } => {
            let (_, hs) = load_hat(&base)?;
            let mut hctx = HatCtx::new(&hs);
            let a = hs.omega_decompose(&grammar::parse_word(&hs.hat, &x)?)?;
            let b = hs.omega_decompose(&grammar::parse_word(&hs.hat, &y)?)?;
            Ok(laurent_full_json(&hctx.r_a(&a, &b)?).to_string())
        }
        PolyCmd::Pa { base, x, y } => {
            let (_, hs) = load_hat(&base)?;
            let mut hctx = HatCtx::new(&hs);
            let a = hs.omega_decompose(&grammar::parse_word(&hs.hat, &x)?)?;
            let b = hs.omega_decompose(&grammar::parse_word(&hs.hat, &y)?)?;
            Ok(qpoly_json(&hctx.p_a(&a, &b)?).to_string())
        }
    }
}

fn load_hat(base: &BaseArgs) -> Result<(coxkl_core::CoxeterSystem, HatSystem)> {
    let sys = load_system(&base.w_system)?;
    let cfg = load_hat_config(base.hat.as_deref())?;
    let hs = HatSystem::build(&sys, &cfg)?;
    Ok((sys, hs))
}

fn run_poset(cmd: PosetCmd) -> Result<String> {
    match cmd {
        PosetCmd::Interval { base, w, v } => {
            let sys = load_system(&base.w_system)?;
            let mut vctx = VCtx::new(&sys);
            let w = grammar::parse_velement(&sys, &w)?;
            let v = grammar::parse_velement(&sys, &v)?;
            let interval = vctx.v_interval(&w, &v)?;
            Ok(interval
                .iter()
                .map(|z| grammar::format_velement(&sys, z))
                .collect::<Vec<_>>()
                .join("\n"))
        }
        PosetCmd::Hasse { base, w, v } => {
            let sys = load_system(&base.w_system)?;
            let mut vctx = VCtx::new(&sys);
            let nodes = match (w, v) {
                (Some(w), Some(v)) => {
                    let w = grammar::parse_velement(&sys, &w)?;
                    let v = grammar::parse_velement(&sys, &v)?;
                    vctx.v_interval(&w, &v)?
                }
                (None, None) => enumerate_v(&sys, LIMIT)?,
                _ => return Err(CliError("give both --w and --v, or neither".into())),
            };
            let covers = vctx.covers(&nodes)?;
            Ok(coxkl::dot::hasse_dot(&sys, &nodes, &covers))
        }
        PosetCmd::Mobius { base, w, v } => {
            let sys = load_system(&base.w_system)?;
            let mut vctx = VCtx::new(&sys);
            let w = grammar::parse_velement(&sys, &w)?;
            let v = grammar::parse_velement(&sys, &v)?;
            if !vctx.v_leq(&w, &v)? {
                return Err(CliError("pair is not comparable".into()));
            }
            Ok(vctx.mobius(&w, &v)?.to_string())
        }
        PosetCmd::Edges { base, w, v } => {
            let sys = load_system(&base.w_system)?;
            let mut vctx = VCtx::new(&sys);
            let w = grammar::parse_velement(&sys, &w)?;
            let v = grammar::parse_velement(&sys, &v)?;
            let interval = vctx.v_interval(&w, &v)?;
            let mut out = Vec::new();
            for a in &interval {
                for b in &interval {
                    if a != b && vctx.v_graph_edge(a, b)? {
                        out.push(format!(
                            "{} -> {}",
                            grammar::format_velement(&sys, a),
                            grammar::format_velement(&sys, b)
                        ));
                    }
                }
            }
            Ok(out.join("\n"))
        }
    }
}

fn run_verify(args: VerifyArgs) -> Result<(String, bool)> {
    let sys = load_system(&args.base.w_system)?;
    let cfg = load_hat_config(args.base.hat.as_deref())?;
    let opts = SuiteOptions { slow: args.slow, seed: args.seed };
    let names: Vec<&str> = if args.suite == "all" {
        SUITE_NAMES.to_vec()
    } else {
        vec![args.suite.as_str()]
    };
    let mut reports: Vec<SuiteReport> = Vec::new();
    for name in names {
        reports.push(run_suite(name, &sys, &cfg, &opts)?);
    }
    let ok = reports.iter().all(|r| r.passed());
    let text = match args.report {
        ReportFormat::Json => serde_json::to_string_pretty(&reports)?,
        ReportFormat::Text => reports.iter().map(|r| r.render_text()).collect::<Vec<_>>().join(""),
    };
    Ok((text, ok))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result: Result<(String, bool)> = match cli.command {
        Command::Element { cmd } => run_element(cmd).map(|s| (s, true)),
        Command::Poly { cmd } => run_poly(cmd).map(|s| (s, true)),
        Command::Poset { cmd } => run_poset(cmd).map(|s| (s, true)),
        Command::Verify(args) => run_verify(args),
    };
    match result {
        Ok((text, ok)) => {
            println!("{text}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
