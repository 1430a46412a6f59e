//! JSON documents and text tables for each subcommand.
//!
//! ∞ is `null` in JSON and `inf` in text.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use axial_core::asymptotics::{LinearFit, PowerSequence};
use axial_core::gin::GinResult;
use axial_core::invariants::{AnnihilatorTable, InvariantReport};
use axial_core::monideal::BettiTable;
use axial_core::{ExtNat, MonomialIdeal};
use serde::{Deserialize, Serialize};

use crate::format::monomial_text;

fn ext(v: ExtNat) -> Option<u64> {
    v.finite()
}

fn ext_text(v: Option<u64>) -> String {
    v.map_or_else(|| "inf".to_string(), |v| v.to_string())
}

fn ideal_strings(j: &MonomialIdeal, vars: &[String]) -> Vec<String> {
    j.gens().iter().map(|m| monomial_text(m, vars)).collect()
}

fn ideal_text(gens: &[String]) -> String {
    format!("({})", gens.join(", "))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GbDoc {
    pub basis: Vec<String>,
    pub initial: Vec<String>,
}

impl GbDoc {
    pub fn text(&self) -> String {
        let mut out = String::from("basis:\n");
        for g in &self.basis {
            let _ = writeln!(out, "  {g}");
        }
        let _ = writeln!(out, "initial: {}", ideal_text(&self.initial));
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialDoc {
    pub seed: u64,
    pub bound: u64,
    pub agrees: bool,
    pub initial: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GinDoc {
    pub gin: Vec<String>,
    pub certified: bool,
    pub borel_fixed: bool,
    pub strongly_stable: bool,
    pub small_field: bool,
    pub bound: u64,
    pub trials: Vec<TrialDoc>,
    pub diagnostics: Vec<String>,
}

impl GinDoc {
    pub fn new<C>(g: &GinResult<C>, vars: &[String]) -> Self {
        GinDoc {
            gin: ideal_strings(&g.ideal, vars),
            certified: g.certified,
            borel_fixed: g.borel_fixed,
            strongly_stable: g.strongly_stable,
            small_field: g.small_field,
            bound: g.bound,
            trials: g
                .trials
                .iter()
                .map(|t| TrialDoc {
                    seed: t.seed,
                    bound: t.bound,
                    agrees: t.agrees,
                    initial: ideal_strings(&t.initial, vars),
                })
                .collect(),
            diagnostics: g.diagnostics.clone(),
        }
    }

    pub fn text(&self) -> String {
        let yes = |b: bool| if b { "yes" } else { "no" };
        let mut out = String::new();
        let _ = writeln!(out, "gin: {}", ideal_text(&self.gin));
        let agreeing = self.trials.iter().filter(|t| t.agrees).count();
        let _ = writeln!(
            out,
            "certified: {} ({agreeing} of {} trials agree, bound {})",
            yes(self.certified),
            self.trials.len(),
            self.bound
        );
        let _ = writeln!(out, "borel-fixed: {}", yes(self.borel_fixed));
        let _ = writeln!(out, "strongly stable: {}", yes(self.strongly_stable));
        for d in &self.diagnostics {
            let _ = writeln!(out, "note: {d}");
        }
        out
    }
}

/// `[i, j, value, mark]` with mark one of `extremal`, `coextremal`, `both`.
pub type AlphaEntry = (usize, u32, u64, Option<String>);

pub fn alpha_entries(t: &AnnihilatorTable) -> Vec<AlphaEntry> {
    t.entries()
        .map(|((i, j), v)| (i, j, v, t.mark(i, j).map(|m| m.as_str().to_string())))
        .collect()
}

fn short_mark(mark: &str) -> &'static str {
    match mark {
        "extremal" => "[e]",
        "coextremal" => "[c]",
        _ => "[ec]",
    }
}

/// Rows are twists j, columns indices i; zeros print as `.`.
fn grid(corner: &str, columns: usize, cells: &BTreeMap<(usize, u32), String>) -> String {
    let Some(rows) = cells.keys().map(|k| k.1).max() else {
        return "no entries\n".to_string();
    };
    let mut table: Vec<Vec<String>> = Vec::new();
    let mut header = vec![corner.to_string()];
    header.extend((0..columns).map(|i| i.to_string()));
    table.push(header);
    for j in 0..=rows {
        let mut row = vec![format!("{j}:")];
        row.extend((0..columns).map(|i| cells.get(&(i, j)).cloned().unwrap_or_else(|| ".".into())));
        table.push(row);
    }
    let widths: Vec<usize> = (0..=columns)
        .map(|c| table.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in &table {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .enumerate()
            .map(|(c, (s, &w))| if c == 0 { format!("{s:<w$}") } else { format!("{s:>w$}") })
            .collect();
        let _ = writeln!(out, "{}", line.join("  ").trim_end());
    }
    out
}

/// The annihilator table with [e]/[c]/[ec] marks.
pub fn alpha_text(nvars: usize, entries: &[AlphaEntry]) -> String {
    let cells = entries
        .iter()
        .map(|(i, j, v, m)| ((*i, *j), format!("{v}{}", m.as_deref().map_or("", short_mark))))
        .collect();
    grid("alpha", nvars, &cells)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaDoc {
    pub nvars: usize,
    pub alpha: Vec<AlphaEntry>,
}

impl AlphaDoc {
    pub fn new(t: &AnnihilatorTable) -> Self {
        AlphaDoc {
            nvars: t.nvars(),
            alpha: alpha_entries(t),
        }
    }

    pub fn text(&self) -> String {
        alpha_text(self.nvars, &self.alpha)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiDoc {
    pub gin: Vec<String>,
    /// `[i, j, β_{i,i+j}]`.
    pub betti: Vec<(usize, u32, u64)>,
    pub nvars: usize,
    pub regularity: u32,
}

impl BettiDoc {
    pub fn new(gin: &MonomialIdeal, t: &BettiTable, vars: &[String]) -> Self {
        BettiDoc {
            gin: ideal_strings(gin, vars),
            betti: t.entries().map(|((i, j), v)| (i, j, v)).collect(),
            nvars: gin.nvars(),
            regularity: t.regularity(),
        }
    }

    pub fn text(&self) -> String {
        let cells = self.betti.iter().map(|&(i, j, v)| ((i, j), v.to_string())).collect();
        let mut out = format!("Betti numbers of R/gin(I), gin = {}\n", ideal_text(&self.gin));
        out.push_str(&grid("beta", self.nvars + 1, &cells));
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RouteDoc {
    pub i: usize,
    pub annihilator: u32,
    pub gin_omega: Option<u32>,
    pub random_section: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictDoc {
    pub label: String,
    pub applicable: bool,
    pub holds: bool,
    /// `[index, left, right, holds]`.
    pub checks: Vec<(usize, Option<u64>, Option<u64>, bool)>,
}

fn statement(key: &str) -> &str {
    match key {
        "axial_eq_sreg" => "a_i = sreg_i for i <= height",
        "sreg_eq_omega" => "sreg_i = partial degree bound of gin",
        "axial_eq_reduction" => "a_i = r_(d-i) + 1",
        "finiteness_window" => "a_i finite exactly for i <= height",
        "monotone" => "a_i and sreg_i nondecreasing",
        "initial_degree" => "a_1 = initial degree",
        "last_axial_eq_reg" => "a_height = reg(I)",
        "top_sreg_eq_reg" => "sreg_d = reg(I)",
        "routes_agree" => "all sreg routes agree",
        other => other,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsDoc {
    pub field: String,
    pub gin: GinDoc,
    pub axial: Vec<Option<u64>>,
    pub sreg: Vec<u32>,
    pub omega: Vec<u32>,
    pub reduction: BTreeMap<String, Option<u64>>,
    pub regularity: u32,
    pub height: usize,
    pub initial_degree: u32,
    pub alpha: Vec<AlphaEntry>,
    pub routes: Vec<RouteDoc>,
    pub verdicts: BTreeMap<String, VerdictDoc>,
    pub diagnostics: Vec<String>,
}

impl InvariantsDoc {
    pub fn new<C>(r: &InvariantReport<C>, vars: &[String]) -> Self {
        InvariantsDoc {
            field: r.field.to_string(),
            gin: GinDoc::new(&r.gin, vars),
            axial: r.axial.iter().map(|&v| ext(v)).collect(),
            sreg: r.sreg.clone(),
            omega: r.omega.clone(),
            reduction: r.reduction.iter().map(|(s, &v)| (s.to_string(), ext(v))).collect(),
            regularity: r.regularity,
            height: r.height,
            initial_degree: r.initial_degree,
            alpha: alpha_entries(&r.alpha),
            routes: r
                .routes
                .iter()
                .map(|x| RouteDoc {
                    i: x.i,
                    annihilator: x.annihilator,
                    gin_omega: x.gin_omega,
                    random_section: x.random_section,
                })
                .collect(),
            verdicts: r
                .verdicts
                .iter()
                .map(|v| {
                    let doc = VerdictDoc {
                        label: v.kind.label().to_string(),
                        applicable: v.applicable,
                        holds: v.holds(),
                        checks: v.checks.iter().map(|c| (c.index, ext(c.left), ext(c.right), c.holds)).collect(),
                    };
                    (v.kind.key().to_string(), doc)
                })
                .collect(),
            diagnostics: r.diagnostics.clone(),
        }
    }

    pub fn text(&self) -> String {
        let list = |v: &mut dyn Iterator<Item = String>| v.collect::<Vec<_>>().join(", ");
        let mut out = self.gin.text();
        let _ = writeln!(out, "axial constants a_i: {}", list(&mut self.axial.iter().map(|&v| ext_text(v))));
        let _ = writeln!(out, "sectional regularity sreg_i: {}", list(&mut self.sreg.iter().map(u32::to_string)));
        let _ = writeln!(out, "partial degree bounds: {}", list(&mut self.omega.iter().map(u32::to_string)));
        let mut reduction: Vec<(usize, Option<u64>)> =
            self.reduction.iter().map(|(s, &v)| (s.parse().unwrap_or(0), v)).collect();
        reduction.sort();
        let _ = writeln!(
            out,
            "reduction numbers r_s: {}",
            if reduction.is_empty() {
                "none".to_string()
            } else {
                list(&mut reduction.iter().map(|(s, v)| format!("r_{s} = {}", ext_text(*v))))
            }
        );
        let _ = writeln!(out, "regularity: {}", self.regularity);
        let _ = writeln!(out, "height: {}", self.height);
        let _ = writeln!(out, "initial degree: {}", self.initial_degree);
        out.push('\n');
        out.push_str(&alpha_text(self.axial.len(), &self.alpha));
        out.push('\n');
        for r in &self.routes {
            let opt = |v: Option<u32>| v.map_or_else(|| "-".to_string(), |v| v.to_string());
            let _ = writeln!(
                out,
                "sreg_{}: annihilator {}, gin {}, random section {}",
                r.i,
                r.annihilator,
                opt(r.gin_omega),
                opt(r.random_section)
            );
        }
        out.push('\n');
        let mut verdicts: Vec<(&String, &VerdictDoc)> = self.verdicts.iter().collect();
        verdicts.sort_by(|a, b| a.1.label.cmp(&b.1.label));
        for (key, v) in verdicts {
            let status = match (v.applicable, v.holds) {
                (false, _) => "n/a",
                (true, true) => "holds",
                (true, false) => "fails",
            };
            let _ = writeln!(out, "{} {}: {status}", v.label, statement(key));
            for c in v.checks.iter().filter(|c| !c.3) {
                let _ = writeln!(out, "    i = {}: {} vs {}", c.0, ext_text(c.1), ext_text(c.2));
            }
        }
        for d in &self.diagnostics {
            if !self.gin.diagnostics.contains(d) {
                let _ = writeln!(out, "note: {d}");
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowersDoc {
    pub invariant: String,
    pub i: Option<usize>,
    pub points: Vec<(u64, Option<u64>)>,
    pub slope: Option<i64>,
    pub intercept: Option<i64>,
    pub stable_from: Option<u64>,
    pub status: String,
    pub truncated: bool,
    pub diagnostics: Vec<String>,
}

impl PowersDoc {
    /// `fit` is `None` when the sequence could not be fitted; the reason
    /// goes to the diagnostics.
    pub fn new(seq: &PowerSequence, fit: Result<LinearFit, String>) -> Self {
        let mut diagnostics = seq.diagnostics.clone();
        let (slope, intercept, stable_from, status) = match fit {
            Ok(f) => (Some(f.slope), Some(f.intercept), Some(f.stable_from), f.status.as_str().to_string()),
            Err(e) => {
                diagnostics.push(e);
                (None, None, None, "unfitted".to_string())
            }
        };
        PowersDoc {
            invariant: seq.invariant.name().to_string(),
            i: seq.invariant.index(),
            points: seq.points.iter().map(|&(n, v)| (n, ext(v))).collect(),
            slope,
            intercept,
            stable_from,
            status,
            truncated: seq.truncated,
            diagnostics,
        }
    }

    pub fn text(&self) -> String {
        let name = match self.i {
            Some(i) => format!("{}_{i}", self.invariant),
            None => self.invariant.clone(),
        };
        let mut out = String::new();
        for &(n, v) in &self.points {
            let _ = writeln!(out, "n = {n}: {name}(I^{n}) = {}", ext_text(v));
        }
        match (self.slope, self.intercept, self.stable_from) {
            (Some(a), Some(b), Some(n0)) => {
                let sign = if b < 0 { '-' } else { '+' };
                let _ = writeln!(out, "fit: {a}*n {sign} {} from n = {n0} ({})", b.abs(), self.status);
            }
            _ => {
                let _ = writeln!(out, "fit: {}", self.status);
            }
        }
        for d in &self.diagnostics {
            let _ = writeln!(out, "note: {d}");
        }
        out
    }
}
