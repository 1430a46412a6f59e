//! Monomials x₁^{a₁}⋯x_d^{a_d} and monomial orders with x₁ > x₂ > … > x_d.

use core::cmp::Ordering;
use core::fmt;

use smallvec::SmallVec;

use crate::{Error, Result};

type Exponents = SmallVec<[u32; 8]>;

/// Exponent vector with cached total degree. Indexing is 0-based.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exponents,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: &[u32]) -> Self {
        Monomial {
            exps: SmallVec::from_slice(exps),
            degree: exps.iter().sum(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
            degree: 0,
        }
    }

    /// The variable with 0-based index `idx`, raised to `exp`.
    pub fn var_power(nvars: usize, idx: usize, exp: u32) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[idx] = exp;
        m.degree = exp;
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, idx: usize) -> u32 {
        self.exps[idx]
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
            degree: self.degree + other.degree,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            exps: other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect(),
            degree: other.degree - self.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Exponents = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Sum of the exponents of the first `i` variables.
    pub fn partial_degree(&self, i: usize) -> u32 {
        self.exps[..i].iter().sum()
    }

    /// 1-based index of the largest variable index dividing the monomial;
    /// 0 for the unit monomial.
    pub fn max_index(&self) -> usize {
        self.exps.iter().rposition(|&e| e > 0).map_or(0, |p| p + 1)
    }

    /// Index (0-based) of the single variable when the monomial is a pure power.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut support = self.exps.iter().enumerate().filter(|(_, &e)| e > 0);
        let (idx, _) = support.next()?;
        support.next().is_none().then_some(idx)
    }

    pub fn with_exp(&self, idx: usize, exp: u32) -> Monomial {
        let mut m = self.clone();
        m.degree = m.degree - m.exps[idx] + exp;
        m.exps[idx] = exp;
        m
    }

    /// The restriction to the first `n` variables, padded with zeros when
    /// growing.
    pub fn resized(&self, n: usize) -> Monomial {
        let mut exps: Exponents = self.exps.iter().copied().take(n).collect();
        exps.resize(n, 0);
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Renders as `x1^2*x3`, or `1`.
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (idx, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", idx + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Monomial orders, always with x₁ > x₂ > … > x_d.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic: higher degree wins; on ties the monomial
    /// with the smaller exponent at the largest differing index is greater.
    #[default]
    Grevlex,
    Lex,
    Grlex,
}

impl MonomialOrder {
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Grevlex => a.degree.cmp(&b.degree).then_with(|| {
                for (x, y) in a.exps.iter().zip(&b.exps).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
            MonomialOrder::Lex => a.exps.as_slice().cmp(b.exps.as_slice()),
            MonomialOrder::Grlex => a
                .degree
                .cmp(&b.degree)
                .then_with(|| a.exps.as_slice().cmp(b.exps.as_slice())),
        }
    }

    /// Checked comparison.
    pub fn compare(self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != b.nvars() {
            return Err(Error::DimensionMismatch {
                expected: a.nvars(),
                found: b.nvars(),
            });
        }
        Ok(self.cmp(a, b))
    }
}

/// All monomials of degree `t` in `nvars` variables, in descending grevlex.
pub fn monomials_of_degree(nvars: usize, t: u32) -> alloc::vec::Vec<Monomial> {
    let mut out = alloc::vec::Vec::new();
    if nvars == 0 {
        if t == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    let mut exps = alloc::vec![0u32; nvars];
    fill(&mut exps, 0, t, &mut out);
    out.sort_by(|a, b| MonomialOrder::Grevlex.cmp(b, a));
    out
}

fn fill(exps: &mut [u32], idx: usize, left: u32, out: &mut alloc::vec::Vec<Monomial>) {
    if idx + 1 == exps.len() {
        exps[idx] = left;
        out.push(Monomial::new(exps));
        return;
    }
    for e in (0..=left).rev() {
        exps[idx] = e;
        fill(exps, idx + 1, left - e, out);
    }
    exps[idx] = 0;
}

/// Binomial coefficient C(n, k), 0 when k > n.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}
