//! Invariants along the powers Iⁿ and detection of eventually linear growth.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::field::Field;
use crate::gin::{gin_rev_with, GinOptions};
use crate::groebner::ideal_power;
use crate::invariants::{annihilator_table, reduction_number, regularity_of_gin};
use crate::monideal::MonomialIdeal;
use crate::poly::{PolyRing, Polynomial};
use crate::seed;
use crate::{Error, ExtNat, Result};

/// Which invariant to follow along the powers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvariantSelector {
    Axial(usize),
    Sreg(usize),
    Regularity,
    Reduction(usize),
}

impl InvariantSelector {
    pub fn name(self) -> &'static str {
        match self {
            InvariantSelector::Axial(_) => "axial",
            InvariantSelector::Sreg(_) => "sreg",
            InvariantSelector::Regularity => "regularity",
            InvariantSelector::Reduction(_) => "reduction",
        }
    }

    /// The index i (or s), if the invariant has one.
    pub fn index(self) -> Option<usize> {
        match self {
            InvariantSelector::Axial(i) | InvariantSelector::Sreg(i) | InvariantSelector::Reduction(i) => {
                Some(i)
            }
            InvariantSelector::Regularity => None,
        }
    }

    fn check(self, d: usize) -> Result<()> {
        let ok = match self {
            InvariantSelector::Axial(i) | InvariantSelector::Sreg(i) => (1..=d).contains(&i),
            InvariantSelector::Reduction(s) => s < d,
            InvariantSelector::Regularity => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::VariableIndex {
                index: self.index().unwrap_or(0),
                nvars: d,
            })
        }
    }

    /// Evaluates the invariant on a gin.
    pub fn evaluate(self, gin: &MonomialIdeal) -> Result<ExtNat> {
        self.check(gin.nvars())?;
        match self {
            InvariantSelector::Axial(i) => gin.pure_power_degree(i),
            InvariantSelector::Sreg(i) => Ok(u64::from(annihilator_table(gin)?.sreg(i)?).into()),
            InvariantSelector::Regularity => Ok(u64::from(regularity_of_gin(gin)?).into()),
            InvariantSelector::Reduction(s) => reduction_number(gin, s),
        }
    }
}

/// Renders as `sreg:2`, `axial:1`, `reduction:0` or `regularity`.
impl fmt::Display for InvariantSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.index() {
            Some(i) => write!(f, "{}:{i}", self.name()),
            None => f.write_str(self.name()),
        }
    }
}

impl FromStr for InvariantSelector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(alloc::format!("unknown invariant `{s}`"));
        let (name, index) = match s.split_once(':') {
            Some((n, i)) => (n.trim(), Some(i.trim().parse::<usize>().map_err(|_| bad())?)),
            None => (s.trim(), None),
        };
        match (name, index) {
            ("axial" | "a", Some(i)) => Ok(InvariantSelector::Axial(i)),
            ("sreg", Some(i)) => Ok(InvariantSelector::Sreg(i)),
            ("reduction" | "r", Some(i)) => Ok(InvariantSelector::Reduction(i)),
            ("regularity" | "reg", None) => Ok(InvariantSelector::Regularity),
            _ => Err(bad()),
        }
    }
}

/// Values of an invariant at n = 1, 2, … .
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSequence {
    pub invariant: InvariantSelector,
    pub points: Vec<(u64, ExtNat)>,
    /// Set when the sequence stopped before n_max.
    pub truncated: bool,
    pub diagnostics: Vec<String>,
}

/// Computes the invariant on Iⁿ for n = 1…n_max, each with a fresh gin.
///
/// `proceed(n)` is asked before each power; returning false truncates the
/// sequence (the caller uses this for time budgets). An uncertified gin also
/// truncates, with a diagnostic.
pub fn power_sequence<F: Field>(
    ring: &PolyRing<F>,
    gens: &[Polynomial<F::Elem>],
    invariant: InvariantSelector,
    n_max: u64,
    base_seed: u64,
    opts: &GinOptions,
    proceed: &mut dyn FnMut(u64) -> bool,
) -> Result<PowerSequence> {
    if n_max == 0 {
        return Err(Error::InvalidParameter(String::from("n_max must be at least 1")));
    }
    invariant.check(ring.nvars())?;
    let mut out = PowerSequence {
        invariant,
        points: Vec::new(),
        truncated: false,
        diagnostics: Vec::new(),
    };
    for n in 1..=n_max {
        if !proceed(n) {
            out.truncated = true;
            out.diagnostics.push(alloc::format!("stopped before n = {n}"));
            break;
        }
        let power = ideal_power(ring, gens, n as u32)?;
        let gin = gin_rev_with(ring, &power, seed::derive(base_seed, 2, n), opts)?;
        if !gin.certified {
            out.truncated = true;
            out.diagnostics.push(alloc::format!("gin of I^{n} not certified"));
            out.diagnostics.extend(gin.diagnostics);
            break;
        }
        let value = invariant.evaluate(&gin.ideal)?;
        if let Some(&(_, prev)) = out.points.last() {
            if value < prev {
                out.diagnostics.push(alloc::format!(
                    "{invariant} decreases from {prev} to {value} at n = {n}"
                ));
            }
        }
        out.points.push((n, value));
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FitStatus {
    Stabilized,
    Unstabilized,
}

impl FitStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            FitStatus::Stabilized => "stabilized",
            FitStatus::Unstabilized => "unstabilized",
        }
    }
}

/// value(n) = slope·n + intercept on the window from `stable_from` on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearFit {
    pub slope: i64,
    pub intercept: i64,
    pub stable_from: u64,
    pub window: Vec<(u64, u64)>,
    pub status: FitStatus,
}

impl LinearFit {
    pub fn is_stabilized(&self) -> bool {
        self.status == FitStatus::Stabilized
    }
}

/// Minimum number of trailing points on one line to call a fit stabilized.
pub const STABLE_POINTS: usize = 3;

/// Finds the longest suffix of the sequence lying on one line. The fit is
/// stabilized when that suffix has at least three points.
pub fn fit_eventual_linear(seq: &[(u64, ExtNat)]) -> Result<LinearFit> {
    let mut pts = Vec::with_capacity(seq.len());
    for &(n, v) in seq {
        match v.finite() {
            Some(v) => pts.push((n, v)),
            None => return Err(Error::InfiniteAlongPowers(n)),
        }
    }
    if pts.len() < 2 {
        return Err(Error::SequenceTooShort);
    }
    if pts.windows(2).any(|w| w[1].0 <= w[0].0) {
        return Err(Error::InvalidParameter(
            "sample points must be strictly increasing in n".to_string(),
        ));
    }
    let slope_between = |a: (u64, u64), b: (u64, u64)| -> Option<i64> {
        let dv = b.1 as i64 - a.1 as i64;
        let dn = (b.0 - a.0) as i64;
        (dv % dn == 0).then_some(dv / dn)
    };
    let last = pts.len() - 1;
    let slope = slope_between(pts[last - 1], pts[last]);
    let mut start = last - 1;
    if slope.is_some() {
        while start > 0 && slope_between(pts[start - 1], pts[start]) == slope {
            start -= 1;
        }
    } else {
        start = last;
    }
    let stabilized = slope.is_some() && last - start + 1 >= STABLE_POINTS;
    // Without an integral slope, report the secant through the last two points
    // rounded toward zero; the status says it is not a fit.
    let slope = slope.unwrap_or_else(|| {
        (pts[last].1 as i64 - pts[last - 1].1 as i64) / (pts[last].0 - pts[last - 1].0) as i64
    });
    let intercept = pts[last].1 as i64 - slope * pts[last].0 as i64;
    Ok(LinearFit {
        slope,
        intercept,
        stable_from: pts[start].0,
        window: pts,
        status: if stabilized {
            FitStatus::Stabilized
        } else {
            FitStatus::Unstabilized
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::monomial::Monomial;
    use alloc::vec;

    fn seq(v: &[u64]) -> Vec<(u64, ExtNat)> {
        v.iter().enumerate().map(|(k, &x)| (k as u64 + 1, ExtNat::Finite(x))).collect()
    }

    #[test]
    fn constant_difference() {
        let f = fit_eventual_linear(&seq(&[2, 4, 6, 8, 10])).unwrap();
        assert_eq!((f.slope, f.intercept, f.stable_from), (2, 0, 1));
        assert!(f.is_stabilized());
    }

    #[test]
    fn short_window() {
        let f = fit_eventual_linear(&seq(&[3, 5])).unwrap();
        assert_eq!(f.status, FitStatus::Unstabilized);
        assert_eq!(f.slope, 2);
    }

    #[test]
    fn late_start() {
        // Sampled at n = 1…5 the line 3n − 1 starts at n = 2.
        let f = fit_eventual_linear(&seq(&[4, 5, 8, 11, 14])).unwrap();
        assert_eq!((f.slope, f.intercept, f.stable_from), (3, -1, 2));
        assert!(f.is_stabilized());
        // Sampled at n = 0…4 the same values give intercept 2.
        let shifted: Vec<_> = [4u64, 5, 8, 11, 14]
            .iter()
            .enumerate()
            .map(|(k, &x)| (k as u64, ExtNat::Finite(x)))
            .collect();
        let g = fit_eventual_linear(&shifted).unwrap();
        assert_eq!((g.slope, g.intercept, g.stable_from), (3, 2, 1));
    }

    #[test]
    fn errors() {
        assert_eq!(fit_eventual_linear(&seq(&[1])), Err(Error::SequenceTooShort));
        let with_inf = vec![(1, ExtNat::Finite(1)), (2, ExtNat::Infinite)];
        assert_eq!(fit_eventual_linear(&with_inf), Err(Error::InfiniteAlongPowers(2)));
    }

    #[test]
    fn selectors_parse_and_print() {
        for s in ["sreg:2", "axial:1", "reduction:0", "regularity"] {
            assert_eq!(s.parse::<InvariantSelector>().unwrap().to_string(), s);
        }
        assert!("sreg".parse::<InvariantSelector>().is_err());
        assert!("foo:1".parse::<InvariantSelector>().is_err());
    }

    #[test]
    fn powers_of_a_strongly_stable_ideal() {
        let ring = PolyRing::new(Rationals, 2);
        let gens = vec![
            ring.monomial(Monomial::new(&[2, 0])),
            ring.monomial(Monomial::new(&[1, 1])),
        ];
        let opts = GinOptions::default();
        let s = power_sequence(&ring, &gens, InvariantSelector::Sreg(2), 4, 0, &opts, &mut |_| true).unwrap();
        let values: Vec<_> = s.points.iter().map(|p| p.1).collect();
        assert_eq!(values, seq(&[2, 4, 6, 8]).into_iter().map(|p| p.1).collect::<Vec<_>>());
        let cut = power_sequence(&ring, &gens, InvariantSelector::Regularity, 4, 0, &opts, &mut |n| n < 3)
            .unwrap();
        assert!(cut.truncated);
        assert_eq!(cut.points.len(), 2);
        assert!(power_sequence(&ring, &gens, InvariantSelector::Axial(3), 2, 0, &opts, &mut |_| true).is_err());
    }
}
