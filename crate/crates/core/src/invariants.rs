//! Axial constants, sectional regularity, generic annihilator numbers,
//! s-reduction numbers and regularity, and a report checking that they
//! determine each other.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::field::{Field, FieldSpec};
use crate::gin::{
    gin_rev_with, hilbert_series_of, is_borel_fixed, is_strongly_stable, random_change, GinOptions,
    GinResult,
};
use crate::groebner::{buchberger_with, BuchbergerOptions};
use crate::monideal::{HilbertSeries, MonomialIdeal};
use crate::poly::{PolyRing, Polynomial};
use crate::seed;
use crate::{Error, ExtNat, Result};

/// a_i = least j with x_iʲ ∈ gin, for i = 1…d.
pub fn axial_constants(gin: &MonomialIdeal) -> Result<Vec<ExtNat>> {
    (1..=gin.nvars()).map(|i| gin.pure_power_degree(i)).collect()
}

/// Extremal/coextremal marks of an annihilator entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mark {
    Extremal,
    Coextremal,
    Both,
}

impl Mark {
    pub fn as_str(self) -> &'static str {
        match self {
            Mark::Extremal => "extremal",
            Mark::Coextremal => "coextremal",
            Mark::Both => "both",
        }
    }

    /// `e`, `c` or `ec`.
    pub fn short(self) -> &'static str {
        match self {
            Mark::Extremal => "e",
            Mark::Coextremal => "c",
            Mark::Both => "ec",
        }
    }
}

/// The generic annihilator numbers α_{i,j}, 0 ≤ i < d, stored sparsely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnihilatorTable {
    nvars: usize,
    entries: BTreeMap<(usize, u32), u64>,
    extremal: BTreeSet<(usize, u32)>,
    coextremal: BTreeSet<(usize, u32)>,
}

impl AnnihilatorTable {
    /// Builds the table from its nonzero entries and derives the flags.
    pub fn from_entries(nvars: usize, entries: BTreeMap<(usize, u32), u64>) -> Self {
        let entries: BTreeMap<_, _> = entries.into_iter().filter(|(_, v)| *v > 0).collect();
        let others = |&(i, j): &(usize, u32), pred: &dyn Fn(usize, u32) -> bool| {
            entries.keys().any(|&(s, t)| (s, t) != (i, j) && pred(s, t))
        };
        let extremal = entries
            .keys()
            .filter(|k| !others(k, &|s, t| s <= k.0 && t >= k.1))
            .copied()
            .collect();
        let coextremal = entries
            .keys()
            .filter(|k| !others(k, &|s, t| s >= k.0 && t >= k.1))
            .copied()
            .collect();
        AnnihilatorTable {
            nvars,
            entries,
            extremal,
            coextremal,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn get(&self, i: usize, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Nonzero entries ((i, j), α_{i,j}) in (i, j) order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, u32), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn max_twist(&self) -> Option<u32> {
        self.entries.keys().map(|k| k.1).max()
    }

    pub fn is_extremal(&self, i: usize, j: u32) -> bool {
        self.extremal.contains(&(i, j))
    }

    pub fn is_coextremal(&self, i: usize, j: u32) -> bool {
        self.coextremal.contains(&(i, j))
    }

    pub fn extremal(&self) -> Vec<(usize, u32)> {
        self.extremal.iter().copied().collect()
    }

    pub fn coextremal(&self) -> Vec<(usize, u32)> {
        self.coextremal.iter().copied().collect()
    }

    pub fn mark(&self, i: usize, j: u32) -> Option<Mark> {
        match (self.is_extremal(i, j), self.is_coextremal(i, j)) {
            (true, true) => Some(Mark::Both),
            (true, false) => Some(Mark::Extremal),
            (false, true) => Some(Mark::Coextremal),
            (false, false) => None,
        }
    }

    /// Annihilator-route sectional regularity:
    /// sreg_i = max{j : α_{t,j} ≠ 0, t ≥ d − i} + 1, and sreg_0 = 1.
    pub fn sreg(&self, i: usize) -> Result<u32> {
        if i > self.nvars {
            return Err(Error::VariableIndex {
                index: i,
                nvars: self.nvars,
            });
        }
        if i == 0 {
            return Ok(1);
        }
        self.entries
            .keys()
            .filter(|&&(t, _)| t >= self.nvars - i)
            .map(|&(_, j)| j + 1)
            .max()
            .ok_or(Error::ZeroIdeal("sectional regularity"))
    }
}

/// α_{i,j} = dim (0 :_{R/K} x_{d−i})_j with K = gin + (x_{d−i+1},…,x_d),
/// read off the Hilbert series of R/K and R/(K : x_{d−i}).
pub fn annihilator_table(gin: &MonomialIdeal) -> Result<AnnihilatorTable> {
    let d = gin.nvars();
    if gin.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let mut entries = BTreeMap::new();
    for i in 0..d {
        let k = gin.adjoin_trailing_variables(d - i)?;
        let colon = k.colon_by_variable(d - i)?;
        let diff = k
            .hilbert_series()?
            .difference_polynomial(&colon.hilbert_series()?)
            .ok_or(Error::NotAlmostRegular(d - i))?;
        for (j, &v) in diff.iter().enumerate() {
            if v < 0 {
                return Err(Error::Internal(alloc::format!(
                    "negative annihilator number at ({i}, {j})"
                )));
            }
            if v > 0 {
                entries.insert((i, j as u32), v as u64);
            }
        }
    }
    Ok(AnnihilatorTable::from_entries(d, entries))
}

/// r_s(R/gin): the last nonzero degree of R/(gin + (x_{d−s+1},…,x_d)), or ∞
/// when that quotient has positive dimension. The trailing variables are
/// general linear forms for a gin. For strongly stable gins this is
/// (least j with x_{d−s}ʲ ∈ gin) − 1.
pub fn reduction_number(gin: &MonomialIdeal, s: usize) -> Result<ExtNat> {
    let d = gin.nvars();
    if s > d {
        return Err(Error::VariableIndex { index: s, nvars: d });
    }
    if gin.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let k = gin.adjoin_trailing_variables(d - s)?;
    let h = k.hilbert_series()?;
    Ok(match h.difference_polynomial(&HilbertSeries::new(d, Vec::new())) {
        Some(values) => ExtNat::Finite(values.len().saturating_sub(1) as u64),
        None => ExtNat::Infinite,
    })
}

/// r_s for s = 1…d−1.
pub fn reduction_numbers(gin: &MonomialIdeal) -> Result<BTreeMap<usize, ExtNat>> {
    (1..gin.nvars()).map(|s| Ok((s, reduction_number(gin, s)?))).collect()
}

/// reg(I) from its gin: the top generator degree when the gin is strongly
/// stable, the annihilator route otherwise.
pub fn regularity_of_gin(gin: &MonomialIdeal) -> Result<u32> {
    if gin.is_zero() {
        return Err(Error::ZeroIdeal("regularity"));
    }
    if is_strongly_stable(gin) {
        return Ok(gin.max_degree().expect("nonzero"));
    }
    annihilator_table(gin)?.sreg(gin.nvars())
}

/// gin-omega route: sreg_i = ω_i(gin), valid for strongly stable gins.
pub fn sreg_gin_omega(gin: &MonomialIdeal, i: usize) -> Result<u32> {
    if !is_strongly_stable(gin) {
        return Err(Error::NotStronglyStable);
    }
    if i == 0 {
        return Ok(1);
    }
    gin.partial_degree_bound(i)
}

/// Ways of computing sreg_i.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    GinOmega,
    RandomSection,
    Annihilator,
}

/// Outcome of the random-section route for one i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectionValue {
    pub i: usize,
    pub value: u32,
    /// The common initial ideal of the sections, in i variables.
    pub initial: MonomialIdeal,
    pub seeds: Vec<u64>,
}

/// Random-section route: reg of I + (ℓ_{i+1},…,ℓ_d) for general linear forms,
/// realized as γ·I with x_{i+1},…,x_d set to 0. The section is again in
/// general coordinates, so its grevlex initial ideal is its gin; draws must
/// agree, with the same escalation policy as the gin itself.
pub fn sreg_random_section<F: Field>(
    ring: &PolyRing<F>,
    gens: &[Polynomial<F::Elem>],
    i: usize,
    base_seed: u64,
    opts: &GinOptions,
) -> Result<SectionValue> {
    let d = ring.nvars();
    if i == 0 || i > d {
        return Err(Error::VariableIndex { index: i, nvars: d });
    }
    let field = ring.field();
    let spec = field.spec();
    let sub = ring.with_nvars(i);
    let lead = BuchbergerOptions {
        leading_only: true,
        ..BuchbergerOptions::default()
    };
    let mut bound = opts.bound;
    for round in 0..=opts.max_escalations {
        let mut seeds = Vec::new();
        let mut initials = Vec::new();
        for k in 0..opts.trials.max(2) {
            let s = seed::derive(base_seed, (1 << 32) | ((i as u64) << 8) | u64::from(round), k as u64);
            let change = random_change(d, field, s, bound)?;
            let section = gens
                .iter()
                .map(|g| Ok(ring.restrict_to_leading_vars(&ring.apply_change(g, &change)?, i)))
                .collect::<Result<Vec<_>>>()?;
            initials.push(buchberger_with(&sub, &section, &lead)?.initial().clone());
            seeds.push(s);
        }
        let first = initials[0].clone();
        if initials.iter().all(|j| *j == first) && is_borel_fixed(&first, spec) {
            let value = regularity_of_gin(&first)?;
            return Ok(SectionValue {
                i,
                value,
                initial: first,
                seeds,
            });
        }
        bound = bound.saturating_mul(2);
    }
    Err(Error::Uncertified(alloc::format!(
        "random sections for i = {i} did not agree"
    )))
}

/// sreg_i by the chosen route, for 1 ≤ i ≤ d.
pub fn sectional_regularity<F: Field>(
    ring: &PolyRing<F>,
    gens: &[Polynomial<F::Elem>],
    gin: &MonomialIdeal,
    i: usize,
    route: Route,
    seed: u64,
) -> Result<u32> {
    match route {
        Route::GinOmega => sreg_gin_omega(gin, i),
        Route::Annihilator => annihilator_table(gin)?.sreg(i),
        Route::RandomSection => {
            if i == 0 {
                return Ok(1);
            }
            Ok(sreg_random_section(ring, gens, i, seed, &GinOptions::default())?.value)
        }
    }
}

/// Everything that can be read off a gin alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GinAnalysis {
    pub axial: Vec<ExtNat>,
    /// Annihilator route, i = 1…d.
    pub sreg: Vec<u32>,
    pub omega: Vec<u32>,
    pub reduction: BTreeMap<usize, ExtNat>,
    pub regularity: u32,
    pub alpha: AnnihilatorTable,
    pub strongly_stable: bool,
}

pub fn analyze_gin(gin: &MonomialIdeal) -> Result<GinAnalysis> {
    if gin.is_zero() {
        return Err(Error::ZeroIdeal("invariants"));
    }
    let d = gin.nvars();
    let alpha = annihilator_table(gin)?;
    Ok(GinAnalysis {
        axial: axial_constants(gin)?,
        sreg: (1..=d).map(|i| alpha.sreg(i)).collect::<Result<_>>()?,
        omega: (1..=d).map(|i| gin.partial_degree_bound(i)).collect::<Result<_>>()?,
        reduction: reduction_numbers(gin)?,
        regularity: regularity_of_gin(gin)?,
        strongly_stable: is_strongly_stable(gin),
        alpha,
    })
}

/// The identities compared by the report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum VerdictKind {
    /// a_i = sreg_i for i ≤ ht(I).
    AxialIsSreg,
    /// sreg_i = ω_i(gin).
    SregIsOmega,
    /// a_i = r_{d−i} + 1.
    AxialIsReduction,
    /// a_i < ∞ exactly for i ≤ ht(I).
    FinitenessWindow,
    /// sreg nondecreasing, and a nondecreasing on its finite range.
    Monotone,
    /// a_1 is the least degree of a nonzero element of I.
    InitialDegree,
    /// a_c = reg(I) when no gin generator involves x_{c+1},…,x_d.
    LastAxialIsRegularity,
    /// sreg_d = reg(I).
    TopSregIsRegularity,
    /// All applicable sreg routes agree.
    RoutesAgree,
}

impl VerdictKind {
    pub const ALL: [VerdictKind; 9] = [
        VerdictKind::AxialIsSreg,
        VerdictKind::SregIsOmega,
        VerdictKind::AxialIsReduction,
        VerdictKind::FinitenessWindow,
        VerdictKind::Monotone,
        VerdictKind::InitialDegree,
        VerdictKind::LastAxialIsRegularity,
        VerdictKind::TopSregIsRegularity,
        VerdictKind::RoutesAgree,
    ];

    pub fn key(self) -> &'static str {
        match self {
            VerdictKind::AxialIsSreg => "axial_eq_sreg",
            VerdictKind::SregIsOmega => "sreg_eq_omega",
            VerdictKind::AxialIsReduction => "axial_eq_reduction",
            VerdictKind::FinitenessWindow => "finiteness_window",
            VerdictKind::Monotone => "monotone",
            VerdictKind::InitialDegree => "initial_degree",
            VerdictKind::LastAxialIsRegularity => "last_axial_eq_reg",
            VerdictKind::TopSregIsRegularity => "top_sreg_eq_reg",
            VerdictKind::RoutesAgree => "routes_agree",
        }
    }

    /// Short label used in text output, `(a)` … `(g)`.
    pub fn label(self) -> &'static str {
        match self {
            VerdictKind::AxialIsSreg => "(a)",
            VerdictKind::SregIsOmega => "(b)",
            VerdictKind::AxialIsReduction => "(c)",
            VerdictKind::FinitenessWindow => "(d)",
            VerdictKind::Monotone => "(e)",
            VerdictKind::InitialDegree => "(f)",
            VerdictKind::LastAxialIsRegularity => "(g)",
            VerdictKind::TopSregIsRegularity => "(h)",
            VerdictKind::RoutesAgree => "(r)",
        }
    }
}

impl fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

/// One compared pair of values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub index: usize,
    pub left: ExtNat,
    pub right: ExtNat,
    pub holds: bool,
}

impl Check {
    fn eq(index: usize, left: ExtNat, right: ExtNat) -> Self {
        Check {
            index,
            left,
            right,
            holds: left == right,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub kind: VerdictKind,
    /// False when the identity does not apply to this input.
    pub applicable: bool,
    pub checks: Vec<Check>,
}

impl Verdict {
    fn new(kind: VerdictKind, checks: Vec<Check>) -> Self {
        Verdict {
            kind,
            applicable: true,
            checks,
        }
    }

    /// Vacuously true when not applicable.
    pub fn holds(&self) -> bool {
        !self.applicable || self.checks.iter().all(|c| c.holds)
    }

    /// Whether the check at `index` holds (true if there is none).
    pub fn holds_at(&self, index: usize) -> bool {
        self.checks.iter().filter(|c| c.index == index).all(|c| c.holds)
    }
}

/// sreg_i by every route that applies, i = 1…d.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RouteValues {
    pub i: usize,
    pub annihilator: u32,
    /// Only for strongly stable gins.
    pub gin_omega: Option<u32>,
    pub random_section: Option<u32>,
}

impl RouteValues {
    pub fn agree(&self) -> bool {
        [self.gin_omega, self.random_section]
            .iter()
            .flatten()
            .all(|&v| v == self.annihilator)
    }
}

#[derive(Debug, Clone)]
pub struct ReportOptions {
    pub seed: u64,
    pub gin: GinOptions,
    /// Also run the random-section route (one Gröbner basis per draw and i).
    pub random_section: bool,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            seed: 0,
            gin: GinOptions::default(),
            random_section: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport<C> {
    pub field: FieldSpec,
    pub nvars: usize,
    pub gin: GinResult<C>,
    pub axial: Vec<ExtNat>,
    pub sreg: Vec<u32>,
    pub omega: Vec<u32>,
    pub reduction: BTreeMap<usize, ExtNat>,
    pub regularity: u32,
    pub height: usize,
    pub initial_degree: u32,
    pub alpha: AnnihilatorTable,
    pub routes: Vec<RouteValues>,
    pub verdicts: Vec<Verdict>,
    pub diagnostics: Vec<String>,
}

impl<C> InvariantReport<C> {
    pub fn verdict(&self, kind: VerdictKind) -> &Verdict {
        self.verdicts.iter().find(|v| v.kind == kind).expect("all verdicts present")
    }

    pub fn all_hold(&self) -> bool {
        self.verdicts.iter().all(Verdict::holds)
    }
}

fn ideal_shape<F: Field>(gens: &[Polynomial<F::Elem>]) -> Result<u32> {
    let degs = gens.iter().filter_map(|g| g.degree());
    match degs.min() {
        None => Err(Error::ZeroIdeal("invariants")),
        Some(0) => Err(Error::UnitIdeal),
        Some(m) => Ok(m),
    }
}

/// Computes the gin and every invariant, then checks the identities.
pub fn equivalence_report<F: Field>(
    ring: &PolyRing<F>,
    gens: &[Polynomial<F::Elem>],
    opts: &ReportOptions,
) -> Result<InvariantReport<F::Elem>> {
    ideal_shape::<F>(gens)?;
    let gin = gin_rev_with(ring, gens, opts.seed, &opts.gin)?;
    report_from_gin(ring, gens, gin, opts)
}

/// [`equivalence_report`] with a gin computed elsewhere.
pub fn report_from_gin<F: Field>(
    ring: &PolyRing<F>,
    gens: &[Polynomial<F::Elem>],
    gin: GinResult<F::Elem>,
    opts: &ReportOptions,
) -> Result<InvariantReport<F::Elem>> {
    let initial_degree = ideal_shape::<F>(gens)?;
    let d = ring.nvars();
    let a = analyze_gin(&gin.ideal)?;
    let mut diagnostics = gin.diagnostics.clone();

    // Height from the original coordinates, independent of the gin.
    let dim = hilbert_series_of(ring, gens)?
        .krull_dimension()
        .ok_or(Error::UnitIdeal)?;
    let height = d - dim;

    let mut routes = Vec::with_capacity(d);
    for i in 1..=d {
        let random_section = if opts.random_section {
            match sreg_random_section(ring, gens, i, opts.seed, &opts.gin) {
                Ok(v) => Some(v.value),
                Err(Error::Uncertified(msg)) => {
                    diagnostics.push(msg);
                    None
                }
                Err(e) => return Err(e),
            }
        } else {
            None
        };
        routes.push(RouteValues {
            i,
            annihilator: a.sreg[i - 1],
            gin_omega: a.strongly_stable.then(|| a.omega[i - 1]),
            random_section,
        });
    }

    let fin = |v: u32| ExtNat::Finite(u64::from(v));
    let axial = |i: usize| a.axial[i - 1];
    let sreg = |i: usize| fin(a.sreg[i - 1]);
    let mut verdicts = Vec::new();

    verdicts.push(Verdict::new(
        VerdictKind::AxialIsSreg,
        (1..=height).map(|i| Check::eq(i, axial(i), sreg(i))).collect(),
    ));
    verdicts.push(Verdict::new(
        VerdictKind::SregIsOmega,
        (1..=d).map(|i| Check::eq(i, sreg(i), fin(a.omega[i - 1]))).collect(),
    ));
    verdicts.push(Verdict::new(
        VerdictKind::AxialIsReduction,
        (1..=d)
            .map(|i| Ok(Check::eq(i, axial(i), reduction_number(&gin.ideal, d - i)? + 1)))
            .collect::<Result<_>>()?,
    ));
    verdicts.push(Verdict::new(
        VerdictKind::FinitenessWindow,
        (1..=d)
            .map(|i| Check {
                index: i,
                left: axial(i),
                right: ExtNat::Finite(height as u64),
                holds: axial(i).is_finite() == (i <= height),
            })
            .collect(),
    ));
    let mut mono = Vec::new();
    for i in 1..d {
        mono.push(Check {
            index: i,
            left: sreg(i),
            right: sreg(i + 1),
            holds: sreg(i) <= sreg(i + 1),
        });
        if axial(i + 1).is_finite() {
            mono.push(Check {
                index: i,
                left: axial(i),
                right: axial(i + 1),
                holds: axial(i) <= axial(i + 1),
            });
        }
    }
    verdicts.push(Verdict::new(VerdictKind::Monotone, mono));
    verdicts.push(Verdict::new(
        VerdictKind::InitialDegree,
        alloc::vec![Check::eq(1, axial(1), fin(initial_degree))],
    ));
    let free_tail = height > 0 && gin.ideal.gens().iter().all(|u| u.max_index() <= height);
    verdicts.push(Verdict {
        kind: VerdictKind::LastAxialIsRegularity,
        applicable: free_tail,
        checks: if free_tail {
            alloc::vec![Check::eq(height, axial(height), fin(a.regularity))]
        } else {
            Vec::new()
        },
    });
    verdicts.push(Verdict::new(
        VerdictKind::TopSregIsRegularity,
        alloc::vec![Check::eq(d, sreg(d), fin(a.regularity))],
    ));
    verdicts.push(Verdict::new(
        VerdictKind::RoutesAgree,
        routes
            .iter()
            .flat_map(|r| {
                [r.gin_omega, r.random_section]
                    .into_iter()
                    .flatten()
                    .map(move |v| Check::eq(r.i, fin(r.annihilator), fin(v)))
            })
            .collect(),
    ));

    Ok(InvariantReport {
        field: ring.field().spec(),
        nvars: d,
        axial: a.axial,
        sreg: a.sreg,
        omega: a.omega,
        reduction: a.reduction,
        regularity: a.regularity,
        height,
        initial_degree,
        alpha: a.alpha,
        routes,
        verdicts,
        diagnostics,
        gin,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::monomial::Monomial;
    use alloc::vec;

    fn mi(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|e| Monomial::new(e)).collect())
    }

    fn f(v: u64) -> ExtNat {
        ExtNat::Finite(v)
    }

    #[test]
    fn principal_linear_ideal() {
        let j = mi(2, &[&[1, 0]]);
        let t = annihilator_table(&j).unwrap();
        assert_eq!(t.entries().collect::<Vec<_>>(), vec![((1, 0), 1)]);
        assert_eq!(t.mark(1, 0), Some(Mark::Both));
        assert_eq!(reduction_numbers(&j).unwrap().get(&1), Some(&f(0)));
        assert_eq!(regularity_of_gin(&j).unwrap(), 1);
        assert_eq!(t.sreg(0).unwrap(), 1);
    }

    #[test]
    fn square_of_maximal_ideal() {
        let j = mi(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        let t = annihilator_table(&j).unwrap();
        assert_eq!(t.entries().collect::<Vec<_>>(), vec![((0, 1), 2), ((1, 1), 1)]);
        assert_eq!(t.sreg(1).unwrap(), 2);
        assert_eq!(t.sreg(2).unwrap(), 2);
    }

    #[test]
    fn cube_in_characteristic_three() {
        let j = mi(3, &[&[3, 0, 0], &[0, 3, 0], &[0, 0, 3]]);
        let a = analyze_gin(&j).unwrap();
        assert_eq!(a.axial, vec![f(3), f(3), f(3)]);
        assert_eq!(a.sreg, vec![3, 5, 7]);
        assert_eq!(a.omega, vec![3, 3, 3]);
        assert_eq!(reduction_number(&j, 0).unwrap(), f(6));
        assert_eq!(a.reduction.get(&1), Some(&f(4)));
        assert_eq!(a.reduction.get(&2), Some(&f(2)));
        assert_eq!(a.regularity, 7);
        assert!(sreg_gin_omega(&j, 2).is_err());
    }

    #[test]
    fn not_almost_regular() {
        // x₂ kills the whole line x₁ᵏ modulo (x₁x₂).
        let j = mi(2, &[&[1, 1]]);
        assert_eq!(annihilator_table(&j), Err(Error::NotAlmostRegular(2)));
    }

    #[test]
    fn report_for_complete_intersection() {
        let ring = PolyRing::new(Rationals, 2);
        let x2 = ring.monomial(Monomial::new(&[2, 0]));
        let y2 = ring.monomial(Monomial::new(&[0, 2]));
        let gens = vec![ring.sub(&x2, &y2), ring.monomial(Monomial::new(&[1, 1]))];
        let r = equivalence_report(&ring, &gens, &ReportOptions::default()).unwrap();
        assert_eq!(r.axial, vec![f(2), f(3)]);
        assert_eq!(r.height, 2);
        assert_eq!(r.regularity, 3);
        assert_eq!(r.sreg, vec![2, 3]);
        assert!(r.all_hold(), "{:?}", r.verdicts);
        assert!(r.routes.iter().all(|v| v.random_section == Some(v.annihilator)));
    }

    #[test]
    fn report_in_small_characteristic() {
        let ring = PolyRing::new(PrimeField::new(3).unwrap(), 3);
        let gens: Vec<_> = (0..3).map(|k| ring.monomial(Monomial::var_power(3, k, 3))).collect();
        let r = equivalence_report(&ring, &gens, &ReportOptions::default()).unwrap();
        let b = r.verdict(VerdictKind::SregIsOmega);
        assert!(b.holds_at(1) && !b.holds_at(2) && !b.holds_at(3));
        // a_i = p while r_{d−i} + 1 = (p − 1)i + 1.
        let c = r.verdict(VerdictKind::AxialIsReduction);
        assert!(c.holds_at(1) && !c.holds_at(2) && !c.holds_at(3));
        let sreg: Vec<_> = (1..=3).map(|i| reduction_number(&r.gin.ideal, 3 - i).unwrap() + 1).collect();
        assert_eq!(sreg, vec![f(3), f(5), f(7)]);
        assert!(r.verdict(VerdictKind::RoutesAgree).holds());
        assert_eq!(r.axial, vec![f(3); 3]);
    }

    #[test]
    fn zero_and_unit_rejected() {
        let ring = PolyRing::new(Rationals, 2);
        assert!(equivalence_report(&ring, &[], &ReportOptions::default()).is_err());
        assert_eq!(
            equivalence_report(&ring, &[ring.one()], &ReportOptions::default()).unwrap_err(),
            Error::UnitIdeal
        );
    }
}
