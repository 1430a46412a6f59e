//! Fixtures shared by the integration tests.
#![allow(dead_code)]

use axial_core::monomial::monomials_of_degree;
use axial_core::{Field, Monomial, MonomialIdeal, PolyRing, Polynomial, Rationals};
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type QPoly = Polynomial<BigRational>;

pub fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::new(n, gens.iter().map(|e| Monomial::new(e)).collect())
}

/// A strongly stable ideal with a rich annihilator table:
/// x₁·(x₁,…,x₆) + (x₂³, x₂²x₃, x₂x₃³, x₂x₃²x₄, x₃⁵).
pub fn six_variable_ideal() -> MonomialIdeal {
    ideal(
        6,
        &[
            &[2, 0, 0, 0, 0, 0],
            &[1, 1, 0, 0, 0, 0],
            &[1, 0, 1, 0, 0, 0],
            &[1, 0, 0, 1, 0, 0],
            &[1, 0, 0, 0, 1, 0],
            &[1, 0, 0, 0, 0, 1],
            &[0, 3, 0, 0, 0, 0],
            &[0, 2, 1, 0, 0, 0],
            &[0, 1, 3, 0, 0, 0],
            &[0, 1, 2, 1, 0, 0],
            &[0, 0, 5, 0, 0, 0],
        ],
    )
}

pub fn as_polys<F: Field>(ring: &PolyRing<F>, j: &MonomialIdeal) -> Vec<Polynomial<F::Elem>> {
    j.gens().iter().map(|m| ring.monomial(m.clone())).collect()
}

/// A seeded pseudo-random homogeneous ideal over ℚ: d ∈ {3, 4}, one to three
/// generators of degree one to three, two to four terms with coefficients
/// in [−5, 5].
pub fn random_ideal(seed: u64) -> (PolyRing<Rationals>, Vec<QPoly>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = rng.gen_range(3..=4);
    let ring = PolyRing::new(Rationals, d);
    let count = rng.gen_range(1..=3);
    let mut gens = Vec::new();
    while gens.len() < count {
        let deg = rng.gen_range(1..=3);
        let mons = monomials_of_degree(d, deg);
        let nterms = rng.gen_range(2..=4).min(mons.len());
        let terms = (0..nterms).map(|_| {
            let m = mons[rng.gen_range(0..mons.len())].clone();
            let mut c = 0;
            while c == 0 {
                c = rng.gen_range(-5..=5);
            }
            (Rationals.from_i64(c), m)
        });
        let g = ring.from_terms(terms);
        if !g.is_zero() {
            gens.push(g);
        }
    }
    (ring, gens)
}

/// The seeded suite used by the property checks.
pub fn suite(size: u64) -> Vec<(PolyRing<Rationals>, Vec<QPoly>)> {
    (0..size).map(|k| random_ideal(0x5EED_0000 + k)).collect()
}
