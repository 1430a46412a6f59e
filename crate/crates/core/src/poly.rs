//! Graded polynomial rings k[x₁,…,x_d], their elements, and linear changes
//! of coordinates.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::field::Field;
use crate::monomial::{Monomial, MonomialOrder};
use crate::{Error, Result};

/// A polynomial as a list of terms, strictly descending in the order of the
/// ring that built it, with no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial<C> {
    terms: Vec<(C, Monomial)>,
}

impl<C> Polynomial<C> {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(C, Monomial)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(C, Monomial)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Leading term, i.e. the first stored term.
    pub fn leading(&self) -> Option<&(C, Monomial)> {
        self.terms.first()
    }

    /// Removes the leading term.
    pub fn drop_leading(&mut self) {
        if !self.terms.is_empty() {
            self.terms.remove(0);
        }
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(_, m)| m)
    }

    /// Largest total degree of a term.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(_, m)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((_, m)) => self.terms.iter().all(|(_, n)| n.degree() == m.degree()),
        }
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter().map(|(_, m)| m)
    }
}

/// Renders with `x1, x2, …` names, e.g. `x1^2 - 3/2*x2^2`.
impl<C: fmt::Display> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (c, m)) in self.terms.iter().enumerate() {
            let s = alloc::format!("{c}");
            let (neg, mag) = match s.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, s.as_str()),
            };
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                f.write_str(mag)?;
            } else if mag == "1" {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

/// k[x₁,…,x_d] with a fixed monomial order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRing<F> {
    field: F,
    nvars: usize,
    order: MonomialOrder,
}

impl<F: Field> PolyRing<F> {
    /// Ring with the default (grevlex) order.
    pub fn new(field: F, nvars: usize) -> Self {
        PolyRing {
            field,
            nvars,
            order: MonomialOrder::Grevlex,
        }
    }

    pub fn with_order(field: F, nvars: usize, order: MonomialOrder) -> Self {
        PolyRing { field, nvars, order }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// Same field and order, different number of variables.
    pub fn with_nvars(&self, nvars: usize) -> Self {
        PolyRing {
            field: self.field.clone(),
            nvars,
            order: self.order,
        }
    }

    pub fn one(&self) -> Polynomial<F::Elem> {
        self.monomial(Monomial::one(self.nvars))
    }

    pub fn monomial(&self, m: Monomial) -> Polynomial<F::Elem> {
        debug_assert_eq!(m.nvars(), self.nvars);
        Polynomial {
            terms: alloc::vec![(self.field.one(), m)],
        }
    }

    /// The variable with 0-based index `idx`.
    pub fn variable(&self, idx: usize) -> Polynomial<F::Elem> {
        self.monomial(Monomial::var_power(self.nvars, idx, 1))
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges equal
    /// monomials and drops zero coefficients.
    pub fn from_terms<I>(&self, terms: I) -> Polynomial<F::Elem>
    where
        I: IntoIterator<Item = (F::Elem, Monomial)>,
    {
        let mut terms: Vec<_> = terms.into_iter().collect();
        terms.sort_by(|a, b| self.order.cmp(&b.1, &a.1));
        let mut out: Vec<(F::Elem, Monomial)> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            match out.last_mut() {
                Some((acc, last)) if *last == m => *acc = self.field.add(acc, &c),
                _ => out.push((c, m)),
            }
        }
        out.retain(|(c, _)| !self.field.is_zero(c));
        Polynomial { terms: out }
    }

    fn check(&self, f: &Polynomial<F::Elem>) -> Result<()> {
        match f.terms.iter().find(|(_, m)| m.nvars() != self.nvars) {
            Some((_, m)) => Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: m.nvars(),
            }),
            None => Ok(()),
        }
    }

    pub fn add(&self, f: &Polynomial<F::Elem>, g: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        self.combine(f, &self.field.one(), None, g)
    }

    pub fn sub(&self, f: &Polynomial<F::Elem>, g: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        self.combine(f, &self.field.neg(&self.field.one()), None, g)
    }

    pub fn neg(&self, f: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        Polynomial {
            terms: f.terms.iter().map(|(c, m)| (self.field.neg(c), m.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &F::Elem, f: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        if self.field.is_zero(c) {
            return Polynomial::zero();
        }
        Polynomial {
            terms: f.terms.iter().map(|(a, m)| (self.field.mul(a, c), m.clone())).collect(),
        }
    }

    /// `f − c·m·g` by a single merge pass.
    pub fn sub_mul_term(
        &self,
        f: &Polynomial<F::Elem>,
        c: &F::Elem,
        m: &Monomial,
        g: &Polynomial<F::Elem>,
    ) -> Polynomial<F::Elem> {
        self.combine(f, &self.field.neg(c), Some(m), g)
    }

    /// `f + c·m·g`.
    fn combine(
        &self,
        f: &Polynomial<F::Elem>,
        c: &F::Elem,
        m: Option<&Monomial>,
        g: &Polynomial<F::Elem>,
    ) -> Polynomial<F::Elem> {
        let fld = &self.field;
        let mut out = Vec::with_capacity(f.terms.len() + g.terms.len());
        let mut fi = f.terms.iter().peekable();
        let mut gi = g.terms.iter().map(|(b, n)| {
            let n = match m {
                Some(m) => n.mul(m),
                None => n.clone(),
            };
            (b, n)
        });
        let mut gnext = gi.next();
        loop {
            match (fi.peek(), &gnext) {
                (None, None) => break,
                (Some(_), None) => {
                    out.extend(fi.by_ref().cloned());
                    break;
                }
                (None, Some((b, n))) => {
                    out.push((fld.mul(b, c), n.clone()));
                    gnext = gi.next();
                }
                (Some((a, fm)), Some((b, n))) => match self.order.cmp(fm, n) {
                    Ordering::Greater => {
                        out.push((a.clone(), fm.clone()));
                        fi.next();
                    }
                    Ordering::Less => {
                        out.push((fld.mul(b, c), n.clone()));
                        gnext = gi.next();
                    }
                    Ordering::Equal => {
                        let s = fld.add(a, &fld.mul(b, c));
                        if !fld.is_zero(&s) {
                            out.push((s, fm.clone()));
                        }
                        fi.next();
                        gnext = gi.next();
                    }
                },
            }
        }
        Polynomial { terms: out }
    }

    pub fn mul(
        &self,
        f: &Polynomial<F::Elem>,
        g: &Polynomial<F::Elem>,
    ) -> Result<Polynomial<F::Elem>> {
        self.check(f)?;
        self.check(g)?;
        Ok(self.mul_unchecked(f, g))
    }

    fn mul_unchecked(&self, f: &Polynomial<F::Elem>, g: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        let (small, large) = if f.len() <= g.len() { (f, g) } else { (g, f) };
        let mut acc = Polynomial::zero();
        for (c, m) in &small.terms {
            acc = self.combine(&acc, c, Some(m), large);
        }
        acc
    }

    pub fn pow(&self, f: &Polynomial<F::Elem>, n: u32) -> Polynomial<F::Elem> {
        let mut acc = self.one();
        let mut base = f.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul_unchecked(&acc, &base);
            }
            n >>= 1;
            if n > 0 {
                base = self.mul_unchecked(&base, &base);
            }
        }
        acc
    }

    pub fn leading_term<'a>(
        &self,
        f: &'a Polynomial<F::Elem>,
    ) -> Result<(&'a F::Elem, &'a Monomial)> {
        f.leading().map(|(c, m)| (c, m)).ok_or(Error::ZeroPolynomial)
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self, f: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        match f.leading() {
            None => Polynomial::zero(),
            Some((c, _)) if self.field.is_one(c) => f.clone(),
            Some((c, _)) => {
                let inv = self.field.inv(c).expect("nonzero leading coefficient");
                self.scale(&inv, f)
            }
        }
    }

    /// Re-sorts `f` for this ring's order (used when moving between orders).
    pub fn reorder(&self, f: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        self.from_terms(f.terms.iter().cloned())
    }

    /// Substitutes 0 for x_{i+1},…,x_d and returns the result in the ring
    /// with the first `i` variables.
    pub fn restrict_to_leading_vars(&self, f: &Polynomial<F::Elem>, i: usize) -> Polynomial<F::Elem> {
        let terms: Vec<_> = f
            .terms
            .iter()
            .filter(|(_, m)| m.exps()[i..].iter().all(|&e| e == 0))
            .map(|(c, m)| (c.clone(), m.resized(i)))
            .collect();
        // Dropping trailing zero exponents preserves the relative order.
        Polynomial { terms }
    }

    /// Applies x_i ↦ Σ_j g_{ij} x_j.
    pub fn apply_change(
        &self,
        f: &Polynomial<F::Elem>,
        change: &LinearChange<F::Elem>,
    ) -> Result<Polynomial<F::Elem>> {
        self.check(f)?;
        if change.dim() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: change.dim(),
            });
        }
        let images: Vec<Polynomial<F::Elem>> = change
            .matrix
            .iter()
            .map(|row| {
                self.from_terms(
                    row.iter()
                        .enumerate()
                        .map(|(j, g)| (g.clone(), Monomial::var_power(self.nvars, j, 1))),
                )
            })
            .collect();
        let mut powers: Vec<Vec<Polynomial<F::Elem>>> =
            (0..self.nvars).map(|_| alloc::vec![self.one()]).collect();
        let mut acc = Polynomial::zero();
        for (c, m) in &f.terms {
            let mut term = Polynomial {
                terms: alloc::vec![(c.clone(), Monomial::one(self.nvars))],
            };
            for (idx, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[idx].len() <= e as usize {
                    let next = self.mul_unchecked(powers[idx].last().unwrap(), &images[idx]);
                    powers[idx].push(next);
                }
                term = self.mul_unchecked(&term, &powers[idx][e as usize]);
            }
            acc = self.add(&acc, &term);
        }
        Ok(acc)
    }
}

/// An invertible d×d matrix g acting by x_i ↦ Σ_j g_{ij} x_j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearChange<C> {
    matrix: Vec<Vec<C>>,
    seed: u64,
}

impl<C: Clone> LinearChange<C> {
    /// Checks squareness and invertibility.
    pub fn new<F: Field<Elem = C>>(field: &F, matrix: Vec<Vec<C>>, seed: u64) -> Result<Self> {
        let d = matrix.len();
        if let Some(row) = matrix.iter().find(|r| r.len() != d) {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: row.len(),
            });
        }
        let change = LinearChange { matrix, seed };
        if field.is_zero(&change.determinant(field)) {
            return Err(Error::Singular);
        }
        Ok(change)
    }

    pub fn identity<F: Field<Elem = C>>(field: &F, d: usize) -> Self {
        let matrix = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| if i == j { field.one() } else { field.zero() })
                    .collect()
            })
            .collect();
        LinearChange { matrix, seed: 0 }
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn matrix(&self) -> &[Vec<C>] {
        &self.matrix
    }

    pub fn determinant<F: Field<Elem = C>>(&self, field: &F) -> C {
        let mut a = self.matrix.clone();
        let d = a.len();
        let mut det = field.one();
        for col in 0..d {
            let Some(p) = (col..d).find(|&r| !field.is_zero(&a[r][col])) else {
                return field.zero();
            };
            if p != col {
                a.swap(p, col);
                det = field.neg(&det);
            }
            det = field.mul(&det, &a[col][col]);
            let inv = field.inv(&a[col][col]).expect("nonzero pivot");
            for r in col + 1..d {
                if field.is_zero(&a[r][col]) {
                    continue;
                }
                let factor = field.mul(&a[r][col], &inv);
                for k in col..d {
                    let t = field.mul(&factor, &a[col][k]);
                    a[r][k] = field.sub(&a[r][k], &t);
                }
            }
        }
        det
    }

    pub fn inverse<F: Field<Elem = C>>(&self, field: &F) -> Result<Self> {
        let d = self.dim();
        let mut a: Vec<Vec<C>> = self
            .matrix
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let mut r = row.clone();
                r.extend((0..d).map(|j| if i == j { field.one() } else { field.zero() }));
                r
            })
            .collect();
        for col in 0..d {
            let p = (col..d)
                .find(|&r| !field.is_zero(&a[r][col]))
                .ok_or(Error::Singular)?;
            a.swap(p, col);
            let inv = field.inv(&a[col][col]).expect("nonzero pivot");
            for k in 0..2 * d {
                a[col][k] = field.mul(&a[col][k], &inv);
            }
            for r in 0..d {
                if r == col || field.is_zero(&a[r][col]) {
                    continue;
                }
                let factor = a[r][col].clone();
                for k in 0..2 * d {
                    let t = field.mul(&factor, &a[col][k]);
                    a[r][k] = field.sub(&a[r][k], &t);
                }
            }
        }
        Ok(LinearChange {
            matrix: a.into_iter().map(|r| r[d..].to_vec()).collect(),
            seed: self.seed,
        })
    }
}
