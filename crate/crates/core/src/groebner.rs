//! Division, Buchberger's algorithm for homogeneous ideals, reduced Gröbner
//! bases, ideal powers and Hilbert functions.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::field::Field;
use crate::monideal::{HilbertSeries, MonomialIdeal};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{PolyRing, Polynomial};
use crate::{Error, Result};

/// A Gröbner basis together with its initial ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis<C> {
    order: MonomialOrder,
    basis: Vec<Polynomial<C>>,
    initial: MonomialIdeal,
    reduced: bool,
}

impl<C> GroebnerBasis<C> {
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn basis(&self) -> &[Polynomial<C>] {
        &self.basis
    }

    pub fn initial(&self) -> &MonomialIdeal {
        &self.initial
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// H(R/I)(t), read off the initial ideal.
    pub fn hilbert_function(&self, t: u32) -> Result<u64> {
        self.initial.hilbert_function(t)
    }
}

pub fn initial_ideal<C>(gb: &GroebnerBasis<C>) -> MonomialIdeal {
    gb.initial.clone()
}

pub fn hilbert_function<C>(gb: &GroebnerBasis<C>, t: u32) -> Result<u64> {
    gb.hilbert_function(t)
}

/// Knobs for [`buchberger_with`].
#[derive(Debug, Clone, Default)]
pub struct BuchbergerOptions {
    /// Ignore S-pairs and generators above this degree. The result is then a
    /// Gröbner basis only up to the cap.
    pub degree_cap: Option<u32>,
    /// The known Hilbert series of R/I. Lets the algorithm skip S-pairs in
    /// degrees where the leading ideal is already complete, and stop once it
    /// is complete everywhere.
    pub hilbert: Option<HilbertSeries>,
    /// Skip the final interreduction; the basis is then only minimal-free
    /// Gröbner, but the initial ideal is exact.
    pub leading_only: bool,
}

/// Remainder of `f` on division by `divisors`; divisors are tried in list
/// order at every step.
pub fn normal_form<F: Field>(
    ring: &PolyRing<F>,
    f: &Polynomial<F::Elem>,
    divisors: &[Polynomial<F::Elem>],
) -> Polynomial<F::Elem> {
    let fld = ring.field();
    let divisors: Vec<&Polynomial<F::Elem>> = divisors.iter().filter(|g| !g.is_zero()).collect();
    let mut rest = f.clone();
    let mut remainder: Vec<(F::Elem, Monomial)> = Vec::new();
    while let Some((c, m)) = rest.leading().cloned() {
        let hit = divisors.iter().find_map(|g| {
            let (gc, gm) = g.leading().expect("nonzero divisor");
            gm.quotient_of(&m).map(|q| (q, gc, *g))
        });
        match hit {
            Some((q, gc, g)) => {
                let factor = fld.div(&c, gc).expect("nonzero leading coefficient");
                rest = ring.sub_mul_term(&rest, &factor, &q, g);
            }
            None => {
                remainder.push((c, m));
                rest.drop_leading();
            }
        }
    }
    ring.from_terms(remainder)
}

/// Reduces the leading term until it is not divisible by any leading
/// monomial of `basis`. Basis elements are monic.
fn top_reduce<F: Field>(
    ring: &PolyRing<F>,
    mut f: Polynomial<F::Elem>,
    basis: &[Polynomial<F::Elem>],
    lms: &[Monomial],
) -> Polynomial<F::Elem> {
    loop {
        let Some((c, m)) = f.leading() else { return f };
        let Some((k, q)) = lms.iter().enumerate().find_map(|(k, lm)| lm.quotient_of(m).map(|q| (k, q)))
        else {
            return f;
        };
        let c = c.clone();
        f = ring.sub_mul_term(&f, &c, &q, &basis[k]);
    }
}

pub fn s_polynomial<F: Field>(
    ring: &PolyRing<F>,
    f: &Polynomial<F::Elem>,
    g: &Polynomial<F::Elem>,
) -> Polynomial<F::Elem> {
    let fld = ring.field();
    let (Some((fc, fm)), Some((gc, gm))) = (f.leading(), g.leading()) else {
        return Polynomial::zero();
    };
    let l = fm.lcm(gm);
    let uf = fm.quotient_of(&l).expect("lcm divisible");
    let ug = gm.quotient_of(&l).expect("lcm divisible");
    let fi = fld.inv(fc).expect("nonzero");
    let gi = fld.inv(gc).expect("nonzero");
    let a = ring.sub_mul_term(&Polynomial::zero(), &fld.neg(&fi), &uf, f);
    ring.sub_mul_term(&a, &gi, &ug, g)
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Reduced Gröbner basis of a homogeneous ideal in the ring's order.
pub fn buchberger<F: Field>(
    ring: &PolyRing<F>,
    gens: &[Polynomial<F::Elem>],
) -> Result<GroebnerBasis<F::Elem>> {
    buchberger_with(ring, gens, &BuchbergerOptions::default())
}

/// Buchberger's algorithm, degree by degree with the normal selection
/// strategy and the Gebauer–Möller criteria.
pub fn buchberger_with<F: Field>(
    ring: &PolyRing<F>,
    gens: &[Polynomial<F::Elem>],
    opts: &BuchbergerOptions,
) -> Result<GroebnerBasis<F::Elem>> {
    let ord = ring.order();
    let mut pending: Vec<(u32, usize, Polynomial<F::Elem>)> = Vec::new();
    for (k, g) in gens.iter().enumerate() {
        if let Some((_, m)) = g.terms().iter().find(|(_, m)| m.nvars() != ring.nvars()) {
            return Err(Error::DimensionMismatch {
                expected: ring.nvars(),
                found: m.nvars(),
            });
        }
        if !g.is_homogeneous() {
            return Err(Error::Inhomogeneous(k));
        }
        if let Some(deg) = g.degree() {
            pending.push((deg, k, ring.monic(g)));
        }
    }
    pending.sort_by_key(|(deg, k, _)| (*deg, *k));
    pending.reverse();

    let mut basis: Vec<Polynomial<F::Elem>> = Vec::new();
    let mut lms: Vec<Monomial> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    loop {
        let next_pair = pairs.iter().map(|p| p.lcm.degree()).min();
        let next_gen = pending.last().map(|(d, _, _)| *d);
        let t = match (next_pair, next_gen) {
            (None, None) => break,
            (Some(a), None) | (None, Some(a)) => a,
            (Some(a), Some(b)) => a.min(b),
        };
        if opts.degree_cap.is_some_and(|cap| t > cap) {
            break;
        }

        let mut need: Option<u64> = None;
        if let Some(expected) = &opts.hilbert {
            let current = MonomialIdeal::new(ring.nvars(), lms.clone()).hilbert_series()?;
            if current == *expected {
                break;
            }
            let have = current.value_at(t);
            let want = expected.value_at(t);
            if have < want {
                return Err(Error::Internal(alloc::format!(
                    "leading ideal exceeds the expected Hilbert function in degree {t}"
                )));
            }
            need = Some(have - want);
        }

        let mut todo: Vec<Polynomial<F::Elem>> = Vec::new();
        while pending.last().is_some_and(|(d, _, _)| *d == t) {
            todo.push(pending.pop().expect("checked").2);
        }
        let mut current_pairs: Vec<Pair> = Vec::new();
        pairs.retain(|p| {
            if p.lcm.degree() == t {
                current_pairs.push(p.clone());
                false
            } else {
                true
            }
        });
        current_pairs.sort_by(|a, b| ord.cmp(&a.lcm, &b.lcm).then((a.i, a.j).cmp(&(b.i, b.j))));

        let mut candidates = todo.into_iter().map(Ok).chain(current_pairs.into_iter().map(Err));
        while need != Some(0) {
            let Some(cand) = candidates.next() else { break };
            let f = match cand {
                Ok(g) => g,
                Err(p) => s_polynomial(ring, &basis[p.i], &basis[p.j]),
            };
            let h = top_reduce(ring, f, &basis, &lms);
            if h.is_zero() {
                continue;
            }
            let h = ring.monic(&h);
            let lm = h.leading_monomial().expect("nonzero").clone();
            update_pairs(&mut pairs, &lms, &lm);
            lms.push(lm);
            basis.push(h);
            if let Some(n) = need.as_mut() {
                *n -= 1;
            }
        }
    }

    let initial = MonomialIdeal::new(ring.nvars(), lms.clone());
    if opts.leading_only {
        return Ok(GroebnerBasis {
            order: ord,
            basis,
            initial,
            reduced: false,
        });
    }
    let basis = interreduce(ring, basis);
    Ok(GroebnerBasis {
        order: ord,
        basis,
        initial,
        reduced: true,
    })
}

/// Gebauer–Möller update for a new leading monomial `h`, which will get
/// index `lms.len()`.
fn update_pairs(pairs: &mut Vec<Pair>, lms: &[Monomial], h: &Monomial) {
    let n = lms.len();
    // Old pairs whose lcm is strictly divisible by h through both sides.
    pairs.retain(|p| {
        !(h.divides(&p.lcm) && lms[p.i].lcm(h) != p.lcm && lms[p.j].lcm(h) != p.lcm)
    });
    let fresh: Vec<(usize, Monomial, bool)> = lms
        .iter()
        .enumerate()
        .map(|(k, m)| (k, m.lcm(h), m.is_coprime(h)))
        .collect();
    let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
    for (idx, (k, l, coprime)) in fresh.iter().enumerate() {
        // Chain criterion: a strictly smaller lcm among the new pairs.
        let dominated = fresh
            .iter()
            .any(|(_, l2, _)| l2 != l && l2.divides(l));
        if dominated {
            continue;
        }
        // Among equal lcms keep the first, unless one of them is coprime.
        let twins: Vec<&(usize, Monomial, bool)> = fresh.iter().filter(|(_, l2, _)| l2 == l).collect();
        if twins.iter().any(|t| t.2) {
            continue;
        }
        if fresh[..idx].iter().any(|(_, l2, _)| l2 == l) {
            continue;
        }
        debug_assert!(!coprime);
        kept.push((*k, l.clone(), *coprime));
    }
    pairs.extend(kept.into_iter().map(|(k, lcm, _)| Pair { i: k, j: n, lcm }));
}

/// Minimal, monic, fully tail-reduced basis sorted by ascending degree and
/// descending order within a degree.
fn interreduce<F: Field>(ring: &PolyRing<F>, basis: Vec<Polynomial<F::Elem>>) -> Vec<Polynomial<F::Elem>> {
    let lms: Vec<Monomial> = basis.iter().map(|g| g.leading_monomial().expect("nonzero").clone()).collect();
    let mut minimal: Vec<Polynomial<F::Elem>> = basis
        .iter()
        .enumerate()
        .filter(|(k, _)| {
            !lms.iter()
                .enumerate()
                .any(|(j, m)| j != *k && m.divides(&lms[*k]) && (m != &lms[*k] || j < *k))
        })
        .map(|(_, g)| g.clone())
        .collect();
    let ord = ring.order();
    minimal.sort_by(|a, b| {
        let (ma, mb) = (a.leading_monomial().unwrap(), b.leading_monomial().unwrap());
        ma.degree().cmp(&mb.degree()).then_with(|| ord.cmp(mb, ma))
    });
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Polynomial<F::Elem>> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != k)
            .map(|(_, g)| g.clone())
            .collect();
        let g = &minimal[k];
        let (c, m) = g.leading().expect("nonzero").clone();
        let tail = ring.from_terms(g.terms().iter().skip(1).cloned());
        let tail = normal_form(ring, &tail, &others);
        let mut terms = alloc::vec![(c, m)];
        terms.extend(tail.into_terms());
        out.push(ring.monic(&ring.from_terms(terms)));
    }
    out
}

/// Checks Buchberger's criterion: every S-polynomial reduces to zero.
pub fn is_groebner_basis<F: Field>(ring: &PolyRing<F>, basis: &[Polynomial<F::Elem>]) -> bool {
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let s = s_polynomial(ring, &basis[i], &basis[j]);
            if !normal_form(ring, &s, basis).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Generators of Iⁿ: all n-fold products of the generators, deduplicated.
pub fn ideal_power<F: Field>(
    ring: &PolyRing<F>,
    gens: &[Polynomial<F::Elem>],
    n: u32,
) -> Result<Vec<Polynomial<F::Elem>>> {
    if n == 0 {
        return Err(Error::ZeroPower);
    }
    let gens: Vec<&Polynomial<F::Elem>> = gens.iter().filter(|g| !g.is_zero()).collect();
    let mut out: Vec<Polynomial<F::Elem>> = Vec::new();
    if gens.is_empty() {
        return Ok(out);
    }
    // Nondecreasing index tuples enumerate multisets of size n.
    let mut idx = alloc::vec![0usize; n as usize];
    loop {
        let mut prod = ring.one();
        for &k in &idx {
            prod = ring.mul(&prod, gens[k])?;
        }
        if !prod.is_zero() && !out.contains(&prod) {
            out.push(prod);
        }
        let Some(pos) = idx.iter().rposition(|&k| k + 1 < gens.len()) else {
            break;
        };
        let v = idx[pos] + 1;
        for slot in &mut idx[pos..] {
            *slot = v;
        }
    }
    Ok(out)
}

/// Compares leading monomials; used to sort bases for display.
pub fn cmp_by_leading<C>(ord: MonomialOrder, a: &Polynomial<C>, b: &Polynomial<C>) -> Ordering {
    match (a.leading_monomial(), b.leading_monomial()) {
        (Some(x), Some(y)) => ord.cmp(x, y),
        (None, None) => Ordering::Equal,
        (None, _) => Ordering::Less,
        (_, None) => Ordering::Greater,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use alloc::vec;
    use num_rational::BigRational;
    use proptest::prelude::*;

    type Q = BigRational;

    fn ring(n: usize) -> PolyRing<Rationals> {
        PolyRing::new(Rationals, n)
    }

    fn p(r: &PolyRing<Rationals>, terms: &[(i64, &[u32])]) -> Polynomial<Q> {
        r.from_terms(terms.iter().map(|(c, e)| (Rationals.from_i64(*c), Monomial::new(e))))
    }

    fn ci(r: &PolyRing<Rationals>) -> Vec<Polynomial<Q>> {
        vec![p(r, &[(1, &[2, 0]), (-1, &[0, 2])]), p(r, &[(1, &[1, 1])])]
    }

    #[test]
    fn normal_form_examples() {
        let r = ring(2);
        let x2y = p(&r, &[(1, &[2, 1])]);
        assert!(normal_form(&r, &x2y, &[p(&r, &[(1, &[2, 0])])]).is_zero());
        let f = p(&r, &[(1, &[2, 0]), (-1, &[0, 2])]);
        assert_eq!(normal_form(&r, &f, &[p(&r, &[(1, &[1, 1])])]), f);
        assert_eq!(normal_form(&r, &x2y, &ci(&r)), p(&r, &[(1, &[0, 3])]));
    }

    #[test]
    fn complete_intersection_basis() {
        let r = ring(2);
        let gb = buchberger(&r, &ci(&r)).unwrap();
        let mut expected = ci(&r);
        expected.push(p(&r, &[(1, &[0, 3])]));
        assert_eq!(gb.basis(), expected.as_slice());
        assert_eq!(
            gb.initial(),
            &MonomialIdeal::new(2, vec![Monomial::new(&[2, 0]), Monomial::new(&[1, 1]), Monomial::new(&[0, 3])])
        );
        assert_eq!((0..5).map(|t| gb.hilbert_function(t).unwrap()).collect::<Vec<_>>(), vec![1, 2, 1, 0, 0]);
        assert!(is_groebner_basis(&r, gb.basis()));
    }

    #[test]
    fn trivial_bases() {
        let r = ring(2);
        let mono = vec![p(&r, &[(1, &[2, 0])]), p(&r, &[(1, &[1, 1])]), p(&r, &[(1, &[2, 1])])];
        let gb = buchberger(&r, &mono).unwrap();
        assert_eq!(gb.basis(), &mono[..2]);
        let lin = vec![p(&r, &[(1, &[1, 0]), (1, &[0, 1])])];
        let gb = buchberger(&r, &lin).unwrap();
        assert_eq!(gb.basis(), lin.as_slice());
        assert_eq!(gb.initial(), &MonomialIdeal::new(2, vec![Monomial::new(&[1, 0])]));
        assert_eq!(gb.hilbert_function(7).unwrap(), 1);
        let empty = buchberger(&r, &[]).unwrap();
        assert!(empty.basis().is_empty());
        assert_eq!(empty.hilbert_function(3).unwrap(), 4);
        let bad = vec![p(&r, &[(1, &[2, 0]), (1, &[0, 1])])];
        assert_eq!(buchberger(&r, &bad), Err(Error::Inhomogeneous(0)));
    }

    #[test]
    fn powers() {
        let r = ring(2);
        let i = vec![p(&r, &[(1, &[2, 0])]), p(&r, &[(1, &[1, 1])])];
        let sq = ideal_power(&r, &i, 2).unwrap();
        assert_eq!(
            sq,
            vec![p(&r, &[(1, &[4, 0])]), p(&r, &[(1, &[3, 1])]), p(&r, &[(1, &[2, 2])])]
        );
        assert_eq!(ideal_power(&r, &i, 1).unwrap(), i);
        let lin = p(&r, &[(1, &[1, 0]), (1, &[0, 1])]);
        assert_eq!(ideal_power(&r, core::slice::from_ref(&lin), 3).unwrap(), vec![r.pow(&lin, 3)]);
        assert_eq!(ideal_power(&r, &i, 0), Err(Error::ZeroPower));
    }

    #[test]
    fn hilbert_driven_agrees_with_plain() {
        let r = ring(3);
        let gens = vec![
            p(&r, &[(1, &[2, 0, 0]), (3, &[0, 1, 1]), (-2, &[0, 0, 2])]),
            p(&r, &[(1, &[1, 1, 0]), (1, &[0, 2, 0]), (5, &[1, 0, 1])]),
        ];
        let plain = buchberger(&r, &gens).unwrap();
        let hs = plain.initial().hilbert_series().unwrap();
        let driven = buchberger_with(
            &r,
            &gens,
            &BuchbergerOptions {
                hilbert: Some(hs),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(plain, driven);
    }

    #[test]
    fn works_over_prime_fields() {
        let f = PrimeField::new(3).unwrap();
        let r = PolyRing::new(f, 2);
        let g = vec![
            r.from_terms([(1, Monomial::new(&[2, 0])), (2, Monomial::new(&[0, 2]))]),
            r.from_terms([(1, Monomial::new(&[1, 1]))]),
        ];
        let gb = buchberger(&r, &g).unwrap();
        assert!(is_groebner_basis(&r, gb.basis()));
        assert_eq!(gb.initial().gens().len(), 3);
    }

    fn arb_gens() -> impl Strategy<Value = Vec<Vec<(i64, [u32; 3])>>> {
        // Homogeneous of degree 2: pick coefficients on the six quadrics.
        proptest::collection::vec(proptest::collection::vec(-3i64..=3, 6), 1..4).prop_map(|gens| {
            let quads = [[2, 0, 0], [1, 1, 0], [1, 0, 1], [0, 2, 0], [0, 1, 1], [0, 0, 2]];
            gens.into_iter()
                .map(|cs| cs.into_iter().zip(quads).collect())
                .collect()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn reduced_basis_is_canonical(gens in arb_gens()) {
            let r = ring(3);
            let polys: Vec<_> = gens.iter()
                .map(|g| r.from_terms(g.iter().map(|(c, e)| (Rationals.from_i64(*c), Monomial::new(e)))))
                .collect();
            let gb = buchberger(&r, &polys).unwrap();
            prop_assert!(is_groebner_basis(&r, gb.basis()));
            let mut rev = polys.clone();
            rev.reverse();
            let other = buchberger(&r, &rev).unwrap();
            prop_assert_eq!(other.basis(), gb.basis());
            for g in &polys {
                prop_assert!(normal_form(&r, g, gb.basis()).is_zero());
            }
        }
    }
}
