//! Monomial ideals and their combinatorics: minimal generators, colons by a
//! variable, Hilbert series, partial degrees, pure powers, and the
//! Eliahou–Kervaire Betti numbers of strongly stable ideals.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::gin::is_strongly_stable;
use crate::monomial::{binomial, Monomial, MonomialOrder};
use crate::{Error, ExtNat, Result};

const MAX_RECURSION_DEPTH: usize = 20_000;

/// A monomial ideal given by its minimal generators, sorted by ascending
/// degree and descending grevlex within a degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

/// Divisibility-minimal subset of `gens`, canonically sorted.
pub fn minimalize(nvars: usize, gens: Vec<Monomial>) -> MonomialIdeal {
    MonomialIdeal::new(nvars, gens)
}

fn minimal_generators(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| MonomialOrder::Grevlex.cmp(b, a)));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> Self {
        debug_assert!(gens.iter().all(|g| g.nvars() == nvars));
        MonomialIdeal {
            nvars,
            gens: minimal_generators(gens),
        }
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            gens: Vec::new(),
        }
    }

    /// (x₁,…,x_d).
    pub fn maximal(nvars: usize) -> Self {
        MonomialIdeal::new(nvars, (0..nvars).map(|i| Monomial::var_power(nvars, i, 1)).collect())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.gens.iter().map(Monomial::degree).max()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.gens.iter().map(Monomial::degree).min()
    }

    fn check_var(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.nvars {
            Err(Error::VariableIndex {
                index: i,
                nvars: self.nvars,
            })
        } else {
            Ok(())
        }
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        MonomialIdeal::new(self.nvars, gens)
    }

    /// Generators of degree at most `t`.
    pub fn truncated(&self, t: u32) -> MonomialIdeal {
        MonomialIdeal {
            nvars: self.nvars,
            gens: self.gens.iter().filter(|g| g.degree() <= t).cloned().collect(),
        }
    }

    /// (J : x_i), 1-based `i`.
    pub fn colon_by_variable(&self, i: usize) -> Result<MonomialIdeal> {
        self.check_var(i)?;
        Ok(self.colon_unchecked(i - 1))
    }

    fn colon_unchecked(&self, idx: usize) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .map(|u| match u.exp(idx) {
                0 => u.clone(),
                e => u.with_exp(idx, e - 1),
            })
            .collect();
        MonomialIdeal::new(self.nvars, gens)
    }

    /// J + (x_{i+1},…,x_d) for 0 ≤ i ≤ d.
    pub fn adjoin_trailing_variables(&self, i: usize) -> Result<MonomialIdeal> {
        if i > self.nvars {
            return Err(Error::VariableIndex {
                index: i,
                nvars: self.nvars,
            });
        }
        let mut gens: Vec<Monomial> = self
            .gens
            .iter()
            .filter(|g| g.exps()[i..].iter().all(|&e| e == 0))
            .cloned()
            .collect();
        gens.extend((i..self.nvars).map(|idx| Monomial::var_power(self.nvars, idx, 1)));
        Ok(MonomialIdeal::new(self.nvars, gens))
    }

    /// Generators free of x_{i+1},…,x_d, viewed in k[x₁,…,x_i].
    pub fn restrict_to_leading_vars(&self, i: usize) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .filter(|g| g.exps()[i..].iter().all(|&e| e == 0))
            .map(|g| g.resized(i))
            .collect();
        MonomialIdeal::new(i, gens)
    }

    /// The same generators in a ring with `n ≥ nvars` variables.
    pub fn extended(&self, n: usize) -> MonomialIdeal {
        debug_assert!(n >= self.nvars);
        MonomialIdeal {
            nvars: n,
            gens: self.gens.iter().map(|g| g.resized(n)).collect(),
        }
    }

    pub fn hilbert_series(&self) -> Result<HilbertSeries> {
        let numerator = hilbert_numerator(self.nvars, self.gens.clone(), 0)?;
        Ok(HilbertSeries::new(self.nvars, numerator))
    }

    /// H(R/J)(t).
    pub fn hilbert_function(&self, t: u32) -> Result<u64> {
        Ok(self.hilbert_series()?.value_at(t))
    }

    /// ω_i(J): the largest i-th partial degree of a minimal generator.
    pub fn partial_degree_bound(&self, i: usize) -> Result<u32> {
        self.check_var(i)?;
        self.gens
            .iter()
            .map(|g| g.partial_degree(i))
            .max()
            .ok_or(Error::ZeroIdeal("partial degree bound"))
    }

    /// Least j with x_iʲ ∈ J, or ∞.
    pub fn pure_power_degree(&self, i: usize) -> Result<ExtNat> {
        self.check_var(i)?;
        let idx = i - 1;
        if self.is_unit() {
            return Ok(ExtNat::Finite(0));
        }
        Ok(self
            .gens
            .iter()
            .filter(|g| g.pure_power_var() == Some(idx))
            .map(|g| u64::from(g.degree()))
            .min()
            .into())
    }

    /// Number of variables with a pure power in J. For Borel-fixed J this is
    /// the height, and the variables are exactly x₁,…,x_c.
    pub fn stable_height(&self) -> Result<usize> {
        let finite: Vec<bool> = (1..=self.nvars)
            .map(|i| self.pure_power_degree(i).map(ExtNat::is_finite))
            .collect::<Result<_>>()?;
        let c = finite.iter().take_while(|&&f| f).count();
        if finite[c..].iter().any(|&f| f) {
            return Err(Error::NotBorelFixed);
        }
        Ok(c)
    }

    /// Graded Betti numbers of R/J from the Eliahou–Kervaire resolution.
    pub fn ek_betti(&self) -> Result<BettiTable> {
        if !is_strongly_stable(self) {
            return Err(Error::NotStronglyStable);
        }
        let mut table = BettiTable::default();
        table.add(0, 0, 1);
        for u in &self.gens {
            let top = u.max_index() as u64;
            let twist = u.degree().checked_sub(1).ok_or(Error::UnitIdeal)?;
            for i in 1..=top {
                table.add(i as usize, twist, binomial(top - 1, i - 1));
            }
        }
        Ok(table)
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

/// Numerator of the Hilbert series of k[x₁..x_n]/(gens) over (1−t)ⁿ.
///
/// Splits on a variable x occurring in the most generators:
/// num(J) = num(J + (x)) + t·num(J : x).
fn hilbert_numerator(nvars: usize, gens: Vec<Monomial>, depth: usize) -> Result<Vec<i64>> {
    if depth > MAX_RECURSION_DEPTH {
        return Err(Error::RecursionDepth(MAX_RECURSION_DEPTH));
    }
    let gens = minimal_generators(gens);
    if gens.is_empty() {
        return Ok(vec![1]);
    }
    if gens.iter().any(Monomial::is_one) {
        return Ok(Vec::new());
    }
    let mut counts = vec![0usize; nvars];
    for g in &gens {
        for (idx, &e) in g.exps().iter().enumerate() {
            if e > 0 {
                counts[idx] += 1;
            }
        }
    }
    let (pivot, &best) = counts
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
        .expect("nonzero number of variables");
    if best <= 1 {
        // Pairwise coprime generators form a regular sequence.
        let mut num = vec![1i64];
        for g in &gens {
            num = poly_mul(&num, &one_minus_t_pow(g.degree()));
        }
        return Ok(num);
    }
    let mut with_var: Vec<Monomial> = gens.iter().filter(|g| g.exp(pivot) == 0).cloned().collect();
    with_var.push(Monomial::var_power(nvars, pivot, 1));
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|u| match u.exp(pivot) {
            0 => u.clone(),
            e => u.with_exp(pivot, e - 1),
        })
        .collect();
    let a = hilbert_numerator(nvars, with_var, depth + 1)?;
    let b = hilbert_numerator(nvars, colon, depth + 1)?;
    let mut shifted = vec![0i64];
    shifted.extend(b);
    Ok(poly_add(&a, &shifted))
}

fn one_minus_t_pow(k: u32) -> Vec<i64> {
    let mut v = vec![0i64; k as usize + 1];
    v[0] += 1;
    v[k as usize] -= 1;
    v
}

pub(crate) fn poly_add(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len().max(b.len())];
    for (k, v) in a.iter().enumerate() {
        out[k] += v;
    }
    for (k, v) in b.iter().enumerate() {
        out[k] += v;
    }
    trim(out)
}

pub(crate) fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Hilbert series numerator(t) / (1 − t)ⁿ of a graded quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    nvars: usize,
    numerator: Vec<i64>,
}

impl HilbertSeries {
    pub fn new(nvars: usize, numerator: Vec<i64>) -> Self {
        HilbertSeries {
            nvars,
            numerator: trim(numerator),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Coefficients of the numerator, constant term first.
    pub fn numerator(&self) -> &[i64] {
        &self.numerator
    }

    /// Coefficient of tᵗ in the power series expansion.
    pub fn value_at(&self, t: u32) -> u64 {
        let n = self.nvars as u64;
        let mut acc: i128 = 0;
        for (k, &c) in self.numerator.iter().enumerate() {
            let k = k as u64;
            if k > u64::from(t) {
                break;
            }
            let shift = u64::from(t) - k;
            let count = if n == 0 {
                u64::from(shift == 0)
            } else {
                binomial(shift + n - 1, n - 1)
            };
            acc += c as i128 * count as i128;
        }
        debug_assert!(acc >= 0, "negative Hilbert function value");
        acc.max(0) as u64
    }

    /// H(0), …, H(t_max).
    pub fn values(&self, t_max: u32) -> Vec<u64> {
        (0..=t_max).map(|t| self.value_at(t)).collect()
    }

    /// Krull dimension: the order of the pole at t = 1. `None` for the zero
    /// module.
    pub fn krull_dimension(&self) -> Option<usize> {
        if self.numerator.is_empty() {
            return None;
        }
        let mut num = self.numerator.clone();
        let mut k = 0;
        while k < self.nvars && num.iter().sum::<i64>() == 0 {
            num = divide_by_one_minus_t(&num)?;
            k += 1;
        }
        Some(self.nvars - k)
    }

    /// The series difference self − other as a polynomial, when it is one
    /// (i.e. the difference has finite length).
    pub fn difference_polynomial(&self, other: &HilbertSeries) -> Option<Vec<i64>> {
        debug_assert_eq!(self.nvars, other.nvars);
        let neg: Vec<i64> = other.numerator.iter().map(|c| -c).collect();
        let mut num = poly_add(&self.numerator, &neg);
        for _ in 0..self.nvars {
            if num.is_empty() {
                break;
            }
            num = divide_by_one_minus_t(&num)?;
        }
        Some(num)
    }
}

/// Exact division by (1 − t); `None` when 1 is not a root.
fn divide_by_one_minus_t(num: &[i64]) -> Option<Vec<i64>> {
    if num.is_empty() {
        return Some(Vec::new());
    }
    if num.iter().sum::<i64>() != 0 {
        return None;
    }
    // q_k = Σ_{i≤k} num_i
    let mut q = Vec::with_capacity(num.len() - 1);
    let mut acc = 0i64;
    for &c in &num[..num.len() - 1] {
        acc += c;
        q.push(acc);
    }
    Some(trim(q))
}

/// Graded Betti numbers β_{i,i+j}(R/J), keyed by (i, j).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, u32), u64>,
}

impl BettiTable {
    fn add(&mut self, i: usize, j: u32, v: u64) {
        if v > 0 {
            *self.entries.entry((i, j)).or_insert(0) += v;
        }
    }

    /// β_{i,i+j}.
    pub fn get(&self, i: usize, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, u32), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn max_index(&self) -> usize {
        self.entries.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn max_twist(&self) -> u32 {
        self.entries.keys().map(|k| k.1).max().unwrap_or(0)
    }

    /// reg(R/J) = max j with β_{i,i+j} ≠ 0.
    pub fn regularity(&self) -> u32 {
        self.max_twist()
    }

    /// Σ (−1)ⁱ β_{i,i+j} t^{i+j}.
    pub fn euler_numerator(&self) -> Vec<i64> {
        let mut out = Vec::new();
        for (&(i, j), &v) in &self.entries {
            let pos = i + j as usize;
            if out.len() <= pos {
                out.resize(pos + 1, 0);
            }
            let sign = if i % 2 == 0 { 1 } else { -1 };
            out[pos] += sign * v as i64;
        }
        trim(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e)
    }

    fn ideal(nvars: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(nvars, gens.iter().map(|e| m(e)).collect())
    }

    fn six_variable_ideal() -> MonomialIdeal {
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

    #[test]
    fn minimalize_examples() {
        let j = ideal(2, &[&[2, 0], &[2, 1], &[1, 1]]);
        assert_eq!(j, ideal(2, &[&[2, 0], &[1, 1]]));
        assert_eq!(j.gens().len(), 2);
        assert!(minimalize(2, Vec::new()).is_zero());
        let p = ideal(2, &[&[4, 0], &[3, 1], &[2, 2]]);
        assert_eq!(p.gens().len(), 3);
    }

    #[test]
    fn colon_examples() {
        let j = ideal(2, &[&[2, 0], &[1, 1]]);
        assert_eq!(j.colon_by_variable(2).unwrap(), ideal(2, &[&[1, 0]]));
        let e = six_variable_ideal();
        assert_eq!(e.colon_by_variable(6).unwrap(), e.sum(&ideal(6, &[&[1, 0, 0, 0, 0, 0]])));
        let x1 = ideal(2, &[&[1, 0]]);
        assert_eq!(x1.colon_by_variable(2).unwrap(), x1);
        assert!(x1.colon_by_variable(3).is_err());
    }

    #[test]
    fn adjoin_examples() {
        let j = ideal(2, &[&[2, 0], &[1, 1]]);
        assert_eq!(j.adjoin_trailing_variables(1).unwrap(), ideal(2, &[&[2, 0], &[0, 1]]));
        assert_eq!(j.adjoin_trailing_variables(2).unwrap(), j);
        assert_eq!(j.adjoin_trailing_variables(0).unwrap(), MonomialIdeal::maximal(2));
        let e = six_variable_ideal().adjoin_trailing_variables(2).unwrap();
        let expected = ideal(
            6,
            &[
                &[2, 0, 0, 0, 0, 0],
                &[1, 1, 0, 0, 0, 0],
                &[0, 3, 0, 0, 0, 0],
                &[0, 0, 1, 0, 0, 0],
                &[0, 0, 0, 1, 0, 0],
                &[0, 0, 0, 0, 1, 0],
                &[0, 0, 0, 0, 0, 1],
            ],
        );
        assert_eq!(e, expected);
    }

    #[test]
    fn hilbert_series_examples() {
        assert_eq!(ideal(2, &[&[1, 0]]).hilbert_series().unwrap().numerator(), &[1, -1]);
        let sq = ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        let hs = sq.hilbert_series().unwrap();
        assert_eq!(hs.numerator(), &[1, 0, -3, 2]);
        assert_eq!(hs.values(4), vec![1, 2, 0, 0, 0]);
        assert_eq!(MonomialIdeal::zero(3).hilbert_series().unwrap().numerator(), &[1]);
        assert_eq!(MonomialIdeal::zero(3).hilbert_function(4).unwrap(), binomial(6, 2));
    }

    /// Brute force: count monomials of degree t outside J.
    fn standard_count(j: &MonomialIdeal, t: u32) -> u64 {
        crate::monomial::monomials_of_degree(j.nvars(), t)
            .iter()
            .filter(|u| !j.contains(u))
            .count() as u64
    }

    #[test]
    fn hilbert_series_matches_enumeration() {
        let cases = [
            six_variable_ideal(),
            ideal(3, &[&[3, 0, 0], &[0, 3, 0], &[0, 0, 3]]),
            ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[2, 0, 1]]),
            ideal(4, &[&[1, 0, 0, 2], &[0, 2, 1, 0], &[1, 1, 1, 1]]),
        ];
        for j in &cases {
            let hs = j.hilbert_series().unwrap();
            for t in 0..9 {
                assert_eq!(hs.value_at(t), standard_count(j, t), "{j} at {t}");
            }
        }
    }

    #[test]
    fn partial_degrees_and_pure_powers() {
        let e = six_variable_ideal();
        let omega: Vec<u32> = (1..=6).map(|i| e.partial_degree_bound(i).unwrap()).collect();
        assert_eq!(omega, vec![2, 3, 5, 5, 5, 5]);
        assert_eq!(e.pure_power_degree(3).unwrap(), ExtNat::Finite(5));
        assert_eq!(e.pure_power_degree(4).unwrap(), ExtNat::Infinite);
        assert_eq!(ideal(2, &[&[1, 0]]).pure_power_degree(1).unwrap(), ExtNat::Finite(1));
        assert_eq!(e.stable_height().unwrap(), 3);
        assert_eq!(ideal(2, &[&[1, 0]]).stable_height().unwrap(), 1);
        assert_eq!(ideal(2, &[&[0, 1]]).stable_height(), Err(Error::NotBorelFixed));
        assert!(MonomialIdeal::zero(2).partial_degree_bound(1).is_err());
        // (x1^n, …, x_d^n, x1^{n-1} x2^2) with n = 3
        let p2 = ideal(3, &[&[3, 0, 0], &[0, 3, 0], &[0, 0, 3], &[2, 2, 0]]);
        assert_eq!(p2.partial_degree_bound(2).unwrap(), 4);
        assert_eq!(p2.partial_degree_bound(3).unwrap(), 4);
        assert_eq!(p2.stable_height().unwrap(), 3);
    }

    #[test]
    fn eliahou_kervaire_example_table() {
        let b = six_variable_ideal().ek_betti().unwrap();
        let row = |j: u32| -> Vec<u64> { (1..=6).map(|i| b.get(i, j)).collect() };
        assert_eq!(b.get(0, 0), 1);
        assert_eq!(row(1), vec![6, 15, 20, 15, 6, 1]);
        assert_eq!(row(2), vec![2, 3, 1, 0, 0, 0]);
        assert_eq!(row(3), vec![2, 5, 4, 1, 0, 0]);
        assert_eq!(row(4), vec![1, 2, 1, 0, 0, 0]);
        assert_eq!(b.max_twist(), 4);
        let sq = ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]).ek_betti().unwrap();
        assert_eq!((sq.get(1, 1), sq.get(2, 1)), (3, 2));
        let x1 = ideal(2, &[&[1, 0]]).ek_betti().unwrap();
        assert_eq!(x1.entries().count(), 2);
        assert_eq!(x1.get(1, 0), 1);
        assert!(ideal(2, &[&[0, 1]]).ek_betti().is_err());
    }

    #[test]
    fn euler_characteristic_matches_hilbert_numerator() {
        for j in [six_variable_ideal(), ideal(2, &[&[2, 0], &[1, 1], &[0, 2]])] {
            let b = j.ek_betti().unwrap();
            assert_eq!(b.euler_numerator(), j.hilbert_series().unwrap().numerator());
        }
    }

    #[test]
    fn krull_dimension_and_differences() {
        let e = six_variable_ideal();
        assert_eq!(e.hilbert_series().unwrap().krull_dimension(), Some(3));
        let art = ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        assert_eq!(art.hilbert_series().unwrap().krull_dimension(), Some(0));
        let a = ideal(2, &[&[1, 1]]).hilbert_series().unwrap();
        let b = ideal(2, &[&[1, 0]]).hilbert_series().unwrap();
        // (x1 x2 : x2)/(x1 x2) = x1 k[x1] is not of finite length
        assert_eq!(a.difference_polynomial(&b), None);
        let c = ideal(2, &[&[2, 0], &[0, 1]]).hilbert_series().unwrap();
        let d = ideal(2, &[&[1, 0], &[0, 1]]).hilbert_series().unwrap();
        assert_eq!(c.difference_polynomial(&d), Some(vec![0, 1]));
    }
}
