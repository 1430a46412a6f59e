//! Argument parsing and command dispatch.
//!
//! Exit status: 0 on success, 1 on bad input, 2 when a gin cannot be
//! certified or `--verify` finds a discrepancy.

use std::path::PathBuf;
use std::time::{Duration, Instant};

use axial_core::asymptotics::{fit_eventual_linear, power_sequence, InvariantSelector};
use axial_core::gin::{gin_rev_with, GinOptions, GinResult};
use axial_core::groebner::{buchberger, ideal_power};
use axial_core::invariants::{annihilator_table, equivalence_report, ReportOptions};
use axial_core::oracle::{
    colon_dimensions_by_linear_algebra, default_t_max, hilbert_by_linear_algebra, macaulay_initial_ideal,
};
use axial_core::{Error, Field, FieldSpec, PolyRing, Polynomial, PrimeField, Rationals};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::format::{parse_ideal, poly_text, IdealFile};
use crate::report::{AlphaDoc, BettiDoc, GbDoc, GinDoc, InvariantsDoc, PowersDoc};

#[derive(Debug, Parser)]
#[command(name = "axial", version, about = "Generic initial ideals and the invariants read off them")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reduced grevlex Gröbner basis.
    Gb(CommonArgs),
    /// Generic initial ideal with certification data.
    Gin(CommonArgs),
    /// Axial constants, sectional regularity and the identities between them.
    Invariants(CommonArgs),
    /// Generic annihilator numbers.
    Annihilators(CommonArgs),
    /// Graded Betti numbers of R/gin(I).
    Betti(CommonArgs),
    /// An invariant along the powers of I, with a linear fit.
    Powers(PowersArgs),
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Ideal file.
    pub input: PathBuf,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Random changes of coordinates per round.
    #[arg(long, default_value_t = 2)]
    pub trials: usize,
    #[arg(long)]
    pub json: bool,
    /// Cross-check against brute-force linear algebra.
    #[arg(long)]
    pub verify: bool,
    /// Truncation degree for --verify.
    #[arg(long)]
    pub t_max: Option<u32>,
}

#[derive(Debug, Args)]
pub struct PowersArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[arg(long, default_value_t = 6)]
    pub n_max: u64,
    /// `regularity`, `sreg:<i>`, `axial:<i>` or `reduction:<s>`.
    #[arg(long, default_value = "regularity")]
    pub invariant: InvariantSelector,
    /// Stop starting new powers after this many seconds.
    #[arg(long)]
    pub budget_secs: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Gb,
    Gin,
    Invariants,
    Annihilators,
    Betti,
    Powers,
}

/// Everything one invocation needs.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: CommandKind,
    pub input: PathBuf,
    pub seed: u64,
    pub trials: usize,
    pub json: bool,
    pub verify: bool,
    pub n_max: u64,
    pub invariant: InvariantSelector,
    pub t_max: Option<u32>,
    pub budget: Option<Duration>,
}

impl From<Cli> for RunConfig {
    fn from(cli: Cli) -> Self {
        let (command, common, extra) = match cli.command {
            Command::Gb(c) => (CommandKind::Gb, c, None),
            Command::Gin(c) => (CommandKind::Gin, c, None),
            Command::Invariants(c) => (CommandKind::Invariants, c, None),
            Command::Annihilators(c) => (CommandKind::Annihilators, c, None),
            Command::Betti(c) => (CommandKind::Betti, c, None),
            Command::Powers(p) => (CommandKind::Powers, p.common, Some((p.n_max, p.invariant, p.budget_secs))),
        };
        let (n_max, invariant, budget) = extra.unwrap_or((6, InvariantSelector::Regularity, None));
        RunConfig {
            command,
            input: common.input,
            seed: common.seed,
            trials: common.trials,
            json: common.json,
            verify: common.verify,
            n_max,
            invariant,
            t_max: common.t_max,
            budget: budget.filter(|s| s.is_finite() && *s >= 0.0).map(Duration::from_secs_f64),
        }
    }
}

/// Exit status and the text for each stream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Uncertified(_)
            | Error::NotAlmostRegular(_)
            | Error::NotBorelFixed
            | Error::NoInvertibleDraw(_)
            | Error::Internal(_) => 2,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// What a command produced before the exit status is decided.
#[derive(Default)]
struct Produced {
    stdout: String,
    notes: Vec<String>,
    uncertified: bool,
    discrepancies: Vec<String>,
}

pub fn run(cfg: &RunConfig) -> Outcome {
    let text = match std::fs::read_to_string(&cfg.input) {
        Ok(t) => t,
        Err(e) => return failed(1, format!("cannot read {}: {e}", cfg.input.display())),
    };
    let file = match parse_ideal(&text) {
        Ok(f) => f,
        Err(e) => return failed(1, format!("{}: {e}", cfg.input.display())),
    };
    let result = match file.field {
        FieldSpec::Rational => execute(Rationals, &file, cfg),
        FieldSpec::Prime(p) => match PrimeField::new(p) {
            Ok(f) => execute(f, &file, cfg),
            Err(e) => Err(e.into()),
        },
    };
    match result {
        Err(f) => failed(f.code, f.message),
        Ok(p) => {
            let mut stderr = String::new();
            for n in &p.notes {
                stderr.push_str(&format!("{n}\n"));
            }
            if p.uncertified {
                stderr.push_str("error: the generic initial ideal could not be certified\n");
            }
            if !p.discrepancies.is_empty() {
                stderr.push_str("verify: discrepancies found\n");
                for d in &p.discrepancies {
                    stderr.push_str(&format!("  {d}\n"));
                }
            }
            let code = if p.uncertified || !p.discrepancies.is_empty() { 2 } else { 0 };
            Outcome {
                code,
                stdout: p.stdout,
                stderr,
            }
        }
    }
}

fn failed(code: i32, message: String) -> Outcome {
    Outcome {
        code,
        stdout: String::new(),
        stderr: format!("error: {message}\n"),
    }
}

fn render<T: Serialize>(json: bool, doc: &T, text: impl FnOnce(&T) -> String) -> String {
    if json {
        let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
        s.push('\n');
        s
    } else {
        text(doc)
    }
}

fn execute<F: Field>(field: F, file: &IdealFile, cfg: &RunConfig) -> Result<Produced, Failure> {
    let ring = PolyRing::new(field, file.nvars());
    let gens = file.polys(&ring);
    let vars = &file.vars;
    let opts = GinOptions {
        trials: cfg.trials,
        ..GinOptions::default()
    };
    let t_max = cfg.t_max.unwrap_or_else(|| default_t_max(&gens));
    let mut out = Produced::default();

    match cfg.command {
        CommandKind::Gb => {
            let gb = buchberger(&ring, &gens)?;
            let doc = GbDoc {
                basis: gb.basis().iter().map(|g| poly_text(ring.field(), g, vars)).collect(),
                initial: gb.initial().gens().iter().map(|m| crate::format::monomial_text(m, vars)).collect(),
            };
            out.stdout = render(cfg.json, &doc, GbDoc::text);
            if cfg.verify {
                let mac = macaulay_initial_ideal(&ring, &gens, t_max)?;
                let eng = gb.initial().truncated(t_max);
                if mac != eng {
                    out.discrepancies.push(format!("initial ideal up to degree {t_max}: oracle {mac}, engine {eng}"));
                }
            }
        }
        CommandKind::Gin | CommandKind::Betti | CommandKind::Annihilators => {
            let gin = gin_rev_with(&ring, &gens, cfg.seed, &opts)?;
            out.uncertified = !gin.certified;
            out.stdout = match cfg.command {
                CommandKind::Gin => render(cfg.json, &GinDoc::new(&gin, vars), GinDoc::text),
                CommandKind::Betti => {
                    let table = gin.ideal.ek_betti()?;
                    render(cfg.json, &BettiDoc::new(&gin.ideal, &table, vars), BettiDoc::text)
                }
                _ => render(cfg.json, &AlphaDoc::new(&annihilator_table(&gin.ideal)?), AlphaDoc::text),
            };
            if cfg.verify {
                let colons = cfg.command == CommandKind::Annihilators;
                out.discrepancies = verify_gin(&ring, &gens, &gin, t_max, colons)?;
            }
        }
        CommandKind::Invariants => {
            let ropts = ReportOptions {
                seed: cfg.seed,
                gin: opts,
                ..ReportOptions::default()
            };
            let report = equivalence_report(&ring, &gens, &ropts)?;
            out.uncertified = !report.gin.certified;
            out.stdout = render(cfg.json, &InvariantsDoc::new(&report, vars), InvariantsDoc::text);
            if cfg.verify {
                out.discrepancies = verify_gin(&ring, &gens, &report.gin, t_max, true)?;
            }
        }
        CommandKind::Powers => {
            let start = Instant::now();
            let budget = cfg.budget;
            let mut proceed = |_n: u64| budget.is_none_or(|b| start.elapsed() < b);
            let seq = power_sequence(&ring, &gens, cfg.invariant, cfg.n_max, cfg.seed, &opts, &mut proceed)?;
            let fit = fit_eventual_linear(&seq.points).map_err(|e| e.to_string());
            out.stdout = render(cfg.json, &PowersDoc::new(&seq, fit), PowersDoc::text);
            if cfg.verify {
                for &(n, _) in &seq.points {
                    let power = ideal_power(&ring, &gens, n as u32)?;
                    let t = cfg.t_max.unwrap_or_else(|| default_t_max(&power));
                    let oracle = hilbert_by_linear_algebra(&ring, &power, t)?;
                    let gb = buchberger(&ring, &power)?;
                    let engine = gb.initial().hilbert_series()?.values(t);
                    if oracle != engine {
                        out.discrepancies.push(format!("H(R/I^{n}): oracle {oracle:?}, engine {engine:?}"));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Checks H(γ·I + (x_{i+1},…,x_d)) = H(gin + (x_{i+1},…,x_d)) for every i,
/// using the first agreeing change, and optionally every annihilator entry
/// against kernel dimensions of x_i on the sections.
fn verify_gin<F: Field>(
    ring: &PolyRing<F>,
    gens: &[Polynomial<F::Elem>],
    gin: &GinResult<F::Elem>,
    t_max: u32,
    colons: bool,
) -> Result<Vec<String>, Failure> {
    let mut found = Vec::new();
    let Some(trial) = gin.trials.iter().find(|t| t.agrees) else {
        found.push("no agreeing change of coordinates to verify with".to_string());
        return Ok(found);
    };
    let d = ring.nvars();
    let moved = gens
        .iter()
        .map(|g| ring.apply_change(g, &trial.change))
        .collect::<Result<Vec<_>, _>>()?;
    let section = |i: usize| -> (PolyRing<F>, Vec<Polynomial<F::Elem>>) {
        (ring.with_nvars(i), moved.iter().map(|g| ring.restrict_to_leading_vars(g, i)).collect())
    };
    for i in 0..=d {
        let (sub, sec) = section(i);
        let oracle = hilbert_by_linear_algebra(&sub, &sec, t_max)?;
        let engine = gin.ideal.adjoin_trailing_variables(i)?.hilbert_series()?.values(t_max);
        if oracle != engine {
            found.push(format!("H after cutting to x1..x{i}: oracle {oracle:?}, gin {engine:?}"));
        }
    }
    if colons {
        let alpha = annihilator_table(&gin.ideal)?;
        for i in 0..d {
            let (sub, sec) = section(d - i);
            let dims = colon_dimensions_by_linear_algebra(&sub, &sec, d - i, t_max)?;
            for (j, &dim) in (0..t_max).zip(&dims) {
                if dim != alpha.get(i, j) {
                    found.push(format!("alpha({i},{j}): table {}, oracle {dim}", alpha.get(i, j)));
                }
            }
        }
    }
    Ok(found)
}
