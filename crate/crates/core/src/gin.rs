//! Reverse-lexicographic generic initial ideals, computed by random changes of
//! coordinates and certified by agreement of independent draws.

use alloc::string::String;
use alloc::vec::Vec;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::field::{Field, FieldSpec};
use crate::groebner::{buchberger_with, BuchbergerOptions};
use crate::monideal::{HilbertSeries, MonomialIdeal};
use crate::monomial::MonomialOrder;
use crate::poly::{LinearChange, PolyRing, Polynomial};
use crate::seed;
use crate::{Error, Result};

/// Default coefficient bound for random changes over ℚ.
pub const DEFAULT_BOUND: u64 = 10_000;
/// How many times the bound is doubled after a disagreement.
pub const MAX_ESCALATIONS: u32 = 3;
/// Prime fields below this size get the small-field flag.
pub const SMALL_FIELD: u64 = 100;
const MAX_DRAWS: usize = 100;

/// Strong stability: for every generator u, every x_j | u and every i < j,
/// (u/x_j)·x_i lies in J.
pub fn is_strongly_stable(j: &MonomialIdeal) -> bool {
    j.gens().iter().all(|u| {
        (1..u.nvars()).all(|jj| {
            let a = u.exp(jj);
            a == 0 || (0..jj).all(|ii| j.contains(&u.with_exp(jj, a - 1).with_exp(ii, u.exp(ii) + 1)))
        })
    })
}

/// Borel-fixedness. In characteristic 0 this is strong stability; in
/// characteristic p the exchange (x_i/x_j)^t·u is required only for the t
/// whose base-p digits are dominated by those of the exponent of x_j in u.
pub fn is_borel_fixed(j: &MonomialIdeal, field: FieldSpec) -> bool {
    let p = match field {
        FieldSpec::Rational => return is_strongly_stable(j),
        FieldSpec::Prime(p) => p,
    };
    j.gens().iter().all(|u| {
        (1..u.nvars()).all(|jj| {
            let a = u.exp(jj);
            (1..=a).filter(|&t| digits_dominated(t as u64, a as u64, p)).all(|t| {
                (0..jj).all(|ii| j.contains(&u.with_exp(jj, a - t).with_exp(ii, u.exp(ii) + t)))
            })
        })
    })
}

/// Whether every base-`p` digit of `t` is at most the matching digit of `a`,
/// i.e. C(a, t) ≢ 0 mod p.
fn digits_dominated(mut t: u64, mut a: u64, p: u64) -> bool {
    while t > 0 {
        if t % p > a % p {
            return false;
        }
        t /= p;
        a /= p;
    }
    true
}

/// An invertible d×d matrix drawn deterministically from `seed`. Over ℚ the
/// entries are nonzero integers in [−bound, bound]; over 𝔽ₚ they are uniform.
pub fn random_change<F: Field>(
    d: usize,
    field: &F,
    seed: u64,
    bound: u64,
) -> Result<LinearChange<F::Elem>> {
    if bound < 2 {
        return Err(Error::InvalidParameter(alloc::format!(
            "coefficient bound {bound} below 2"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_DRAWS {
        let matrix = (0..d)
            .map(|_| (0..d).map(|_| field.random_entry(&mut rng, bound)).collect())
            .collect();
        match LinearChange::new(field, matrix, seed) {
            Ok(change) => return Ok(change),
            Err(Error::Singular) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::NoInvertibleDraw(MAX_DRAWS))
}

/// Parameters of [`gin_rev_with`].
#[derive(Debug, Clone)]
pub struct GinOptions {
    /// Independent draws per round; at least 2.
    pub trials: usize,
    /// Initial coefficient bound over ℚ.
    pub bound: u64,
    /// Rounds with a doubled bound after a failed round.
    pub max_escalations: u32,
}

impl Default for GinOptions {
    fn default() -> Self {
        GinOptions {
            trials: 2,
            bound: DEFAULT_BOUND,
            max_escalations: MAX_ESCALATIONS,
        }
    }
}

/// One random change and the initial ideal it produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trial<C> {
    pub seed: u64,
    pub bound: u64,
    pub change: LinearChange<C>,
    pub initial: MonomialIdeal,
    /// Whether this trial agrees with the returned ideal.
    pub agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GinResult<C> {
    pub ideal: MonomialIdeal,
    pub trials: Vec<Trial<C>>,
    pub certified: bool,
    pub borel_fixed: bool,
    pub strongly_stable: bool,
    /// Set over 𝔽ₚ with p < 100, where random changes may all be special.
    pub small_field: bool,
    /// Bound used in the last round.
    pub bound: u64,
    pub diagnostics: Vec<String>,
}

/// The Hilbert series of R/I, from a Gröbner basis in the given coordinates.
pub fn hilbert_series_of<F: Field>(
    ring: &PolyRing<F>,
    gens: &[Polynomial<F::Elem>],
) -> Result<HilbertSeries> {
    let opts = BuchbergerOptions {
        leading_only: true,
        ..BuchbergerOptions::default()
    };
    buchberger_with(&grevlex(ring), gens, &opts)?.initial().hilbert_series()
}

fn grevlex<F: Field>(ring: &PolyRing<F>) -> PolyRing<F> {
    PolyRing::with_order(ring.field().clone(), ring.nvars(), MonomialOrder::Grevlex)
}

/// in_grevlex(γ·I) for one change γ, given the Hilbert series of R/I.
pub fn initial_after_change<F: Field>(
    ring: &PolyRing<F>,
    gens: &[Polynomial<F::Elem>],
    change: &LinearChange<F::Elem>,
    hilbert: Option<&HilbertSeries>,
) -> Result<MonomialIdeal> {
    let ring = grevlex(ring);
    let moved = gens
        .iter()
        .map(|g| ring.apply_change(g, change))
        .collect::<Result<Vec<_>>>()?;
    let opts = BuchbergerOptions {
        hilbert: hilbert.cloned(),
        leading_only: true,
        ..BuchbergerOptions::default()
    };
    Ok(buchberger_with(&ring, &moved, &opts)?.initial().clone())
}

/// gin_rev(I) with default options and `trials` draws per round.
pub fn gin_rev<F: Field>(
    ring: &PolyRing<F>,
    gens: &[Polynomial<F::Elem>],
    seed: u64,
    trials: usize,
) -> Result<GinResult<F::Elem>> {
    let opts = GinOptions {
        trials,
        ..GinOptions::default()
    };
    gin_rev_with(ring, gens, seed, &opts)
}

/// gin_rev(I): the common grevlex initial ideal of γ·I over independent
/// random γ. A round succeeds when all its draws agree and the result is
/// Borel-fixed; otherwise the bound doubles and a fresh round is drawn. If
/// every round fails the first draw of the last round is returned,
/// uncertified.
pub fn gin_rev_with<F: Field>(
    ring: &PolyRing<F>,
    gens: &[Polynomial<F::Elem>],
    seed: u64,
    opts: &GinOptions,
) -> Result<GinResult<F::Elem>> {
    if opts.trials < 2 {
        return Err(Error::InvalidParameter(alloc::format!(
            "gin needs at least 2 trials, got {}",
            opts.trials
        )));
    }
    let field = ring.field();
    let spec = field.spec();
    let d = ring.nvars();
    let small_field = matches!(spec, FieldSpec::Prime(p) if p < SMALL_FIELD);
    let mut diagnostics = Vec::new();
    if small_field {
        diagnostics.push(alloc::format!(
            "warning: small field {spec}; genericity of random changes is not assured"
        ));
    }
    let hilbert = hilbert_series_of(ring, gens)?;

    let mut bound = opts.bound;
    let mut all_trials = Vec::new();
    let mut last: Option<MonomialIdeal> = None;
    for round in 0..=opts.max_escalations {
        let mut results: Vec<Trial<F::Elem>> = Vec::with_capacity(opts.trials);
        for k in 0..opts.trials {
            let s = seed::derive(seed, round as u64, k as u64);
            let change = random_change(d, field, s, bound)?;
            let initial = initial_after_change(ring, gens, &change, Some(&hilbert))?;
            results.push(Trial {
                seed: s,
                bound,
                change,
                initial,
                agrees: false,
            });
        }
        let candidate = results[0].initial.clone();
        for t in &mut results {
            t.agrees = t.initial == candidate;
        }
        let agree = results.iter().all(|t| t.agrees);
        let borel_fixed = is_borel_fixed(&candidate, spec);
        all_trials.extend(results);
        if agree && borel_fixed {
            let strongly_stable = is_strongly_stable(&candidate);
            if spec == FieldSpec::Rational && !strongly_stable {
                return Err(Error::Internal(alloc::format!(
                    "certified characteristic-0 gin {candidate} is not strongly stable"
                )));
            }
            return Ok(GinResult {
                ideal: candidate,
                trials: all_trials,
                certified: true,
                borel_fixed,
                strongly_stable,
                small_field,
                bound,
                diagnostics,
            });
        }
        diagnostics.push(if agree {
            alloc::format!("round {round} (bound {bound}): common initial ideal not Borel-fixed")
        } else {
            alloc::format!("round {round} (bound {bound}): initial ideals disagree")
        });
        last = Some(candidate);
        if round < opts.max_escalations {
            bound = bound.saturating_mul(2);
        }
    }
    let ideal = last.expect("at least one round");
    diagnostics.push(String::from("gin not certified"));
    Ok(GinResult {
        borel_fixed: is_borel_fixed(&ideal, spec),
        strongly_stable: is_strongly_stable(&ideal),
        ideal,
        trials: all_trials,
        certified: false,
        small_field,
        bound,
        diagnostics,
    })
}
