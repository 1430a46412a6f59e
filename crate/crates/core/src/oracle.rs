//! Brute-force linear algebra on graded pieces. Everything here works from
//! the definitions (I_t is spanned by monomial multiples of generators) and
//! shares no code with the Gröbner engine, so it can be used to check it.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::field::Field;
use crate::monideal::{minimalize, MonomialIdeal};
use crate::monomial::{monomials_of_degree, Monomial};
use crate::poly::{PolyRing, Polynomial};
use crate::{Error, Result};

/// A sparse row: (column, nonzero entry), sorted by column.
type Row<S> = Vec<(usize, S)>;

/// Exact row arithmetic. Over ℚ rows are kept as primitive integer vectors
/// and combined fraction-free; over 𝔽ₚ pivots are monic.
trait Arith {
    type S: Clone;

    /// Converts one coefficient list (sharing a row) into scalars.
    fn row_from<F: Field>(&self, field: &F, row: Vec<(usize, F::Elem)>) -> Row<Self::S>;
    /// Eliminates the entry of `row` at the pivot column of `pivot`.
    fn eliminate(&self, row: &Row<Self::S>, pivot: &Row<Self::S>) -> Row<Self::S>;
    /// Canonical scaling of a nonzero row.
    fn normalize(&self, row: Row<Self::S>) -> Row<Self::S>;
}

struct Integers;

impl Arith for Integers {
    type S = BigInt;

    fn row_from<F: Field>(&self, field: &F, row: Vec<(usize, F::Elem)>) -> Row<BigInt> {
        let q: Vec<_> = row.into_iter().map(|(k, c)| (k, field.to_rational(&c))).collect();
        let den = q.iter().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let row = q.into_iter().map(|(k, c)| (k, c.numer() * (&den / c.denom()))).collect();
        self.normalize(row)
    }

    fn eliminate(&self, row: &Row<BigInt>, pivot: &Row<BigInt>) -> Row<BigInt> {
        let col = pivot[0].0;
        let c = &row.iter().find(|e| e.0 == col).expect("entry at pivot column").1;
        let lead = &pivot[0].1;
        let g = c.gcd(lead);
        let (a, b) = (lead / &g, c / &g);
        let out = merge(row, pivot, |x| &a * x, |y| -(&b * y), |x, y| &a * x - &b * y, |v| v.is_zero());
        self.normalize(out)
    }

    fn normalize(&self, mut row: Row<BigInt>) -> Row<BigInt> {
        let mut g = BigInt::zero();
        for (_, v) in &row {
            g = g.gcd(v);
            if g.is_one() {
                break;
            }
        }
        if !g.is_zero() && !g.is_one() {
            for e in &mut row {
                e.1 = &e.1 / &g;
            }
        }
        if row.first().is_some_and(|e| e.1.is_negative()) {
            for e in &mut row {
                e.1 = -&e.1;
            }
        }
        row
    }
}

struct ModP(u64);

impl ModP {
    fn mul(&self, a: u64, b: u64) -> u64 {
        if self.0 <= 1 << 32 {
            a * b % self.0
        } else {
            ((a as u128 * b as u128) % self.0 as u128) as u64
        }
    }

    fn inv(&self, a: u64) -> u64 {
        // Fermat; p is prime and a ≠ 0.
        let (mut base, mut e, mut acc) = (a, self.0 - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }
}

impl Arith for ModP {
    type S = u64;

    fn row_from<F: Field>(&self, field: &F, row: Vec<(usize, F::Elem)>) -> Row<u64> {
        let p = BigInt::from(self.0);
        let row = row
            .into_iter()
            .filter_map(|(k, c)| {
                let q = field.to_rational(&c);
                let v = (q.numer() * BigInt::from(self.inv(u64::try_from(q.denom().mod_floor(&p)).ok()?)))
                    .mod_floor(&p);
                let v = u64::try_from(v).ok()?;
                (v != 0).then_some((k, v))
            })
            .collect();
        self.normalize(row)
    }

    fn eliminate(&self, row: &Row<u64>, pivot: &Row<u64>) -> Row<u64> {
        let col = pivot[0].0;
        let c = row.iter().find(|e| e.0 == col).expect("entry at pivot column").1;
        let p = self.0;
        let neg = |y: &u64| (p - self.mul(c, *y)) % p;
        merge(row, pivot, |x| *x, neg, |x, y| (x + neg(y)) % p, |v| *v == 0)
    }

    fn normalize(&self, row: Row<u64>) -> Row<u64> {
        match row.first() {
            Some(&(_, lead)) if lead != 1 => {
                let inv = self.inv(lead);
                row.into_iter().map(|(k, v)| (k, self.mul(v, inv))).collect()
            }
            _ => row,
        }
    }
}

/// Merges two sorted sparse rows entrywise, dropping zeros.
fn merge<S>(
    a: &Row<S>,
    b: &Row<S>,
    only_a: impl Fn(&S) -> S,
    only_b: impl Fn(&S) -> S,
    both: impl Fn(&S, &S) -> S,
    is_zero: impl Fn(&S) -> bool,
) -> Row<S> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map_or(usize::MAX, |e| e.0);
        let cb = b.get(j).map_or(usize::MAX, |e| e.0);
        if ca < cb {
            out.push((ca, only_a(&a[i].1)));
            i += 1;
        } else if cb < ca {
            out.push((cb, only_b(&b[j].1)));
            j += 1;
        } else {
            let v = both(&a[i].1, &b[j].1);
            if !is_zero(&v) {
                out.push((ca, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Echelon rows keyed by pivot column.
struct Echelon<A: Arith> {
    arith: A,
    rows: BTreeMap<usize, Row<A::S>>,
}

impl<A: Arith> Echelon<A> {
    fn new(arith: A) -> Self {
        Echelon {
            arith,
            rows: BTreeMap::new(),
        }
    }

    /// Reduces `row` left to right until its leading column is free.
    fn reduce(&self, mut row: Row<A::S>) -> Row<A::S> {
        // Entries left of the current leading column are never touched again,
        // so it is enough to clear pivots in order of appearance.
        let mut k = 0;
        while k < row.len() {
            match self.rows.get(&row[k].0) {
                Some(pivot) => row = self.arith.eliminate(&row, pivot),
                None => k += 1,
            }
        }
        row
    }

    /// Clears pivot columns from the front only, until the leading column is
    /// free. Enough for echelon form and much cheaper than a full reduction.
    fn reduce_leading(&self, mut row: Row<A::S>) -> Row<A::S> {
        while let Some(pivot) = row.first().and_then(|e| self.rows.get(&e.0)) {
            row = self.arith.eliminate(&row, pivot);
        }
        row
    }

    /// Clears each pivot column from the rows above it, leaving reduced
    /// echelon form up to the scaling of the pivots.
    fn back_substitute(&mut self) {
        let cols: Vec<usize> = self.rows.keys().rev().copied().collect();
        for c in cols {
            let mut row = self.rows.remove(&c).expect("pivot row");
            // Only pivots right of c remain to be cleared, and their rows
            // are already reduced.
            let tail = self.reduce(row.split_off(1));
            row.extend(tail);
            self.rows.insert(c, row);
        }
    }

    /// Adds a row; returns whether the rank grew.
    fn insert(&mut self, row: Row<A::S>) -> bool {
        let row = self.reduce_leading(row);
        if row.is_empty() {
            return false;
        }
        let row = self.arith.normalize(row);
        self.rows.insert(row[0].0, row);
        true
    }
}

/// The degree-t piece I_t in row-echelon form. Columns are the monomials of
/// degree t in descending grevlex, so the pivot columns are the monomials of
/// in(I)_t.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MacaulayBlock {
    degree: u32,
    basis: Vec<Monomial>,
    pivots: Vec<usize>,
}

impl MacaulayBlock {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Monomial basis of R_t, descending.
    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// dim (R/I)_t.
    pub fn corank(&self) -> usize {
        self.basis.len() - self.pivots.len()
    }

    /// Monomials of in(I)_t.
    pub fn pivots(&self) -> Vec<Monomial> {
        self.pivots.iter().map(|&c| self.basis[c].clone()).collect()
    }

    /// Columns that are not pivots: a basis of (R/I)_t.
    pub fn standard_columns(&self) -> Vec<usize> {
        let mut p = self.pivots.iter().peekable();
        (0..self.basis.len())
            .filter(|c| {
                if p.peek() == Some(&c) {
                    p.next();
                    false
                } else {
                    true
                }
            })
            .collect()
    }
}

fn column_index(basis: &[Monomial]) -> BTreeMap<Vec<u32>, usize> {
    basis.iter().enumerate().map(|(k, m)| (m.exps().to_vec(), k)).collect()
}

fn check_gens<F: Field>(ring: &PolyRing<F>, gens: &[Polynomial<F::Elem>]) -> Result<()> {
    for (k, g) in gens.iter().enumerate() {
        if let Some(m) = g.monomials().find(|m| m.nvars() != ring.nvars()) {
            return Err(Error::DimensionMismatch {
                expected: ring.nvars(),
                found: m.nvars(),
            });
        }
        if !g.is_homogeneous() {
            return Err(Error::Inhomogeneous(k));
        }
    }
    Ok(())
}

/// Rows of the Macaulay matrix in degree t: {m·g : deg m = t − deg g}.
fn generator_rows<F: Field>(
    ring: &PolyRing<F>,
    gens: &[Polynomial<F::Elem>],
    index: &BTreeMap<Vec<u32>, usize>,
    t: u32,
) -> Vec<Row<F::Elem>> {
    let field = ring.field();
    let mut rows = Vec::new();
    for g in gens {
        let Some(deg) = g.degree() else { continue };
        if deg > t {
            continue;
        }
        for m in monomials_of_degree(ring.nvars(), t - deg) {
            let mut row: Vec<_> = g
                .terms()
                .iter()
                .filter(|(c, _)| !field.is_zero(c))
                .map(|(c, u)| (index[u.mul(&m).exps()], c.clone()))
                .collect();
            row.sort_by_key(|e| e.0);
            rows.push(row);
        }
    }
    rows
}

fn echelon_pivots<F: Field, A: Arith>(field: &F, arith: A, rows: Vec<Row<F::Elem>>, ncols: usize) -> Vec<usize> {
    let mut ech = Echelon::new(arith);
    for row in rows {
        if ech.rows.len() == ncols {
            break;
        }
        let row = ech.arith.row_from(field, row);
        ech.insert(row);
    }
    ech.rows.keys().copied().collect()
}

/// Pivot columns of the row space: the columns outside the span of the
/// columns before them.
fn pivots<F: Field>(field: &F, rows: Vec<Row<F::Elem>>, ncols: usize) -> Vec<usize> {
    match field.characteristic() {
        0 => {
            let rows: Vec<_> = rows.into_iter().map(|r| Integers.row_from(field, r)).collect();
            certified_pivots(&rows, ncols).unwrap_or_else(|| {
                let mut ech = Echelon::new(Integers);
                for row in rows {
                    ech.insert(row);
                }
                ech.rows.keys().copied().collect()
            })
        }
        p => echelon_pivots(field, ModP(p), rows, ncols),
    }
}

/// Gives up on the modular route after this many primes.
const MAX_PRIMES: usize = 2000;

/// Pivots of an integer matrix from elimination modulo word-size primes.
///
/// The rank mod p never exceeds the rank over ℚ. For the upper bound the
/// kernel of the reduced echelon form, one vector per free column, is lifted
/// by CRT and rational reconstruction and checked exactly against every row.
/// A verified vector for free column f expresses f through earlier columns,
/// so f is free over ℚ as well and the pivot sets agree. Returns `None` if
/// the lift does not settle within `MAX_PRIMES` primes.
fn certified_pivots(rows: &[Row<BigInt>], ncols: usize) -> Option<Vec<usize>> {
    let mut primes = (3..1u64 << 31).rev().step_by(2).filter(|&n| crate::field::is_prime(n));
    let mut best: Option<Vec<usize>> = None;
    let mut lift = Vec::new();
    let mut modulus = BigInt::one();
    let (mut used, mut next_check) = (0usize, 1usize);
    for _ in 0..MAX_PRIMES {
        let p = primes.next()?;
        let arith = ModP(p);
        let mut ech = Echelon::new(ModP(p));
        let pbig = BigInt::from(p);
        for row in rows {
            if ech.rows.len() == ncols {
                break;
            }
            let row = row
                .iter()
                .filter_map(|(k, v)| {
                    let v = u64::try_from(v.mod_floor(&pbig)).expect("reduced below p");
                    (v != 0).then_some((*k, v))
                })
                .collect();
            let row = arith.normalize(row);
            ech.insert(row);
        }
        let piv: Vec<usize> = ech.rows.keys().copied().collect();
        if piv.len() == ncols {
            return Some(piv);
        }
        // More pivots, or the same number further left, means p was unlucky
        // for the previous choice.
        let better = match &best {
            None => true,
            Some(b) => piv.len() > b.len() || (piv.len() == b.len() && piv < *b),
        };
        if better {
            best = Some(piv.clone());
            lift.clear();
            modulus = BigInt::one();
            used = 0;
            next_check = 1;
        } else if best.as_ref() != Some(&piv) {
            continue;
        }
        ech.back_substitute();
        let residues = kernel_entries(&ech.rows, &piv, ncols);
        crt_step(&mut lift, &mut modulus, &residues, p);
        used += 1;
        if used >= next_check {
            next_check = used + used.div_ceil(4);
            if let Some(kernel) = reconstruct(&lift, &modulus) {
                if verify_kernel(rows, &piv, ncols, &kernel) {
                    return Some(piv);
                }
            }
        }
    }
    None
}

/// Free columns in increasing order.
fn free_columns(piv: &[usize], ncols: usize) -> Vec<usize> {
    let mut p = piv.iter().peekable();
    (0..ncols)
        .filter(|c| {
            if p.peek() == Some(&c) {
                p.next();
                false
            } else {
                true
            }
        })
        .collect()
}

/// Entries R[c][f] of the reduced echelon form for each free column f and
/// each pivot c < f, in a fixed order.
fn kernel_entries(rref: &BTreeMap<usize, Row<u64>>, piv: &[usize], ncols: usize) -> Vec<u64> {
    let mut out = Vec::new();
    for f in free_columns(piv, ncols) {
        for c in piv.iter().take_while(|&&c| c < f) {
            let row = &rref[c];
            out.push(row.binary_search_by_key(&f, |e| e.0).map_or(0, |k| row[k].1));
        }
    }
    out
}

fn crt_step(lift: &mut Vec<BigInt>, modulus: &mut BigInt, residues: &[u64], p: u64) {
    let arith = ModP(p);
    let pbig = BigInt::from(p);
    if lift.is_empty() {
        *lift = residues.iter().map(|&r| BigInt::from(r)).collect();
        *modulus = pbig;
        return;
    }
    let m_mod_p = u64::try_from(modulus.mod_floor(&pbig)).expect("below p");
    let m_inv = arith.inv(m_mod_p);
    for (v, &r) in lift.iter_mut().zip(residues) {
        let v_mod_p = u64::try_from(v.mod_floor(&pbig)).expect("below p");
        let k = arith.mul((r + p - v_mod_p) % p, m_inv);
        if k != 0 {
            *v += &*modulus * BigInt::from(k);
        }
    }
    *modulus *= pbig;
}

/// a/b ≡ u (mod m) with |a|, b ≤ √(m/2), if such a fraction exists.
fn rational_reconstruction(u: &BigInt, m: &BigInt) -> Option<(BigInt, BigInt)> {
    let bound = num_integer::Roots::sqrt(&(m / 2));
    let (mut r0, mut r1) = (m.clone(), u.clone());
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        (r0, r1, t0, t1) = (r1, r2, t1, t2);
    }
    if t1.abs() > bound || !r1.gcd(&t1).is_one() {
        return None;
    }
    Some(if t1.is_negative() { (-r1, -t1) } else { (r1, t1) })
}

/// Integer numerators and the common denominator of the lifted entries.
fn reconstruct(lift: &[BigInt], modulus: &BigInt) -> Option<(Vec<BigInt>, BigInt)> {
    let mut den = BigInt::one();
    let mut fracs = Vec::with_capacity(lift.len());
    for v in lift {
        // Scaling by the denominator so far keeps the new one small.
        let (a, b) = rational_reconstruction(&(v * &den).mod_floor(modulus), modulus)?;
        den *= &b;
        fracs.push((a, b));
    }
    // Entry k is a_k / (b_1⋯b_k), so its numerator over den is
    // a_k·b_{k+1}⋯b_n.
    let mut nums = Vec::with_capacity(fracs.len());
    let mut factor = BigInt::one();
    for (a, b) in fracs.into_iter().rev() {
        nums.push(a * &factor);
        factor *= b;
    }
    nums.reverse();
    Some((nums, den))
}

/// Checks M·z = 0 exactly for the kernel vector z of every free column,
/// scaled to integers: z_f = den and z_c = −den·R[c][f].
fn verify_kernel(rows: &[Row<BigInt>], piv: &[usize], ncols: usize, kernel: &(Vec<BigInt>, BigInt)) -> bool {
    let (nums, den) = kernel;
    let mut nums = nums.iter();
    for f in free_columns(piv, ncols) {
        let mut z: BTreeMap<usize, BigInt> = BTreeMap::new();
        z.insert(f, den.clone());
        for &c in piv.iter().take_while(|&&c| c < f) {
            let v = nums.next().expect("one entry per pivot before f");
            if !v.is_zero() {
                z.insert(c, -v);
            }
        }
        let orthogonal = rows.iter().all(|row| {
            row.iter()
                .filter_map(|(k, v)| z.get(k).map(|w| v * w))
                .fold(BigInt::zero(), |acc, x| acc + x)
                .is_zero()
        });
        if !orthogonal {
            return false;
        }
    }
    true
}

fn block<F: Field>(ring: &PolyRing<F>, gens: &[Polynomial<F::Elem>], t: u32) -> MacaulayBlock {
    let basis = monomials_of_degree(ring.nvars(), t);
    let rows = generator_rows(ring, gens, &column_index(&basis), t);
    let pivots = pivots(ring.field(), rows, basis.len());
    MacaulayBlock { degree: t, basis, pivots }
}

/// Row-reduces the span of {m·g : g a generator, deg m = t − deg g}.
pub fn macaulay_block<F: Field>(
    ring: &PolyRing<F>,
    gens: &[Polynomial<F::Elem>],
    t: u32,
) -> Result<MacaulayBlock> {
    check_gens(ring, gens)?;
    Ok(block(ring, gens, t))
}

/// H(R/I)(t) for t = 0…t_max as dim R_t − rank I_t.
pub fn hilbert_by_linear_algebra<F: Field>(
    ring: &PolyRing<F>,
    gens: &[Polynomial<F::Elem>],
    t_max: u32,
) -> Result<Vec<u64>> {
    (0..=t_max)
        .map(|t| macaulay_block(ring, gens, t).map(|b| b.corank() as u64))
        .collect()
}

/// in_grevlex(I) truncated at degree t_max, from the pivots of each block.
pub fn macaulay_initial_ideal<F: Field>(
    ring: &PolyRing<F>,
    gens: &[Polynomial<F::Elem>],
    t_max: u32,
) -> Result<MonomialIdeal> {
    let mut all = Vec::new();
    for t in 0..=t_max {
        all.extend(macaulay_block(ring, gens, t)?.pivots());
    }
    Ok(minimalize(ring.nvars(), all))
}

/// Kernel dimensions of x_i on (R/I)_j for j in `degrees`.
///
/// The standard monomials of degree j are a basis of (R/I)_j. Appending
/// their x_i-multiples as unit rows to the Macaulay matrix of degree j+1
/// raises its rank by the rank of multiplication by x_i.
fn colons<F: Field>(
    ring: &PolyRing<F>,
    gens: &[Polynomial<F::Elem>],
    i: usize,
    degrees: core::ops::Range<u32>,
) -> Vec<u64> {
    let field = ring.field();
    let xi = Monomial::var_power(ring.nvars(), i - 1, 1);
    let mut low = block(ring, gens, degrees.start);
    let mut out = Vec::new();
    for j in degrees {
        let high = block(ring, gens, j + 1);
        let index = column_index(&high.basis);
        let standard = low.standard_columns();
        let mut rows: Vec<Row<F::Elem>> = standard
            .iter()
            .map(|&c| alloc::vec![(index[low.basis[c].mul(&xi).exps()], field.one())])
            .collect();
        rows.extend(generator_rows(ring, gens, &index, j + 1));
        let image = pivots(field, rows, high.basis.len()).len() - high.rank();
        out.push((standard.len() - image) as u64);
        low = high;
    }
    out
}

fn check_variable(i: usize, d: usize) -> Result<()> {
    if i == 0 || i > d {
        return Err(Error::VariableIndex { index: i, nvars: d });
    }
    Ok(())
}

/// dim_k {v ∈ (R/I)_j : x_i·v = 0}, with `i` 1-based, as the kernel of
/// multiplication (R/I)_j → (R/I)_{j+1}.
pub fn colon_dimension_by_linear_algebra<F: Field>(
    ring: &PolyRing<F>,
    gens: &[Polynomial<F::Elem>],
    i: usize,
    j: u32,
    t_max: u32,
) -> Result<u64> {
    check_variable(i, ring.nvars())?;
    if j >= t_max {
        return Err(Error::InvalidParameter(alloc::format!(
            "degree {j} needs t_max above it, got {t_max}"
        )));
    }
    check_gens(ring, gens)?;
    Ok(colons(ring, gens, i, j..j + 1)[0])
}

/// The same kernel dimensions for every j < t_max at once.
pub fn colon_dimensions_by_linear_algebra<F: Field>(
    ring: &PolyRing<F>,
    gens: &[Polynomial<F::Elem>],
    i: usize,
    t_max: u32,
) -> Result<Vec<u64>> {
    check_variable(i, ring.nvars())?;
    check_gens(ring, gens)?;
    Ok(colons(ring, gens, i, 0..t_max))
}

/// The default truncation degree: max(10, 2·max generator degree + 2).
pub fn default_t_max<C>(gens: &[Polynomial<C>]) -> u32 {
    let maxdeg = gens.iter().filter_map(|g| g.degree()).max().unwrap_or(0);
    (2 * maxdeg + 2).max(10)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::monomial::binomial;
    use alloc::vec;

    fn ci(ring: &PolyRing<Rationals>) -> Vec<Polynomial<num_rational::BigRational>> {
        let x2 = ring.monomial(Monomial::new(&[2, 0]));
        let y2 = ring.monomial(Monomial::new(&[0, 2]));
        vec![ring.sub(&x2, &y2), ring.monomial(Monomial::new(&[1, 1]))]
    }

    #[test]
    fn hilbert_of_complete_intersection() {
        let ring = PolyRing::new(Rationals, 2);
        assert_eq!(hilbert_by_linear_algebra(&ring, &ci(&ring), 4).unwrap(), vec![1, 2, 1, 0, 0]);
    }

    #[test]
    fn hilbert_of_zero_ideal() {
        let ring = PolyRing::new(Rationals, 3);
        let h = hilbert_by_linear_algebra(&ring, &[], 5).unwrap();
        for (t, v) in h.iter().enumerate() {
            assert_eq!(*v, binomial(t as u64 + 2, 2));
        }
    }

    #[test]
    fn hilbert_of_square_of_maximal_ideal() {
        let ring = PolyRing::new(PrimeField::new(5).unwrap(), 2);
        let gens: Vec<_> = [[2, 0], [1, 1], [0, 2]]
            .iter()
            .map(|e| ring.monomial(Monomial::new(e)))
            .collect();
        assert_eq!(hilbert_by_linear_algebra(&ring, &gens, 4).unwrap(), vec![1, 2, 0, 0, 0]);
    }

    #[test]
    fn initial_ideals() {
        let ring = PolyRing::new(Rationals, 2);
        let expected = MonomialIdeal::new(
            2,
            vec![Monomial::new(&[2, 0]), Monomial::new(&[1, 1]), Monomial::new(&[0, 3])],
        );
        assert_eq!(macaulay_initial_ideal(&ring, &ci(&ring), 3).unwrap(), expected);
        let lin = vec![ring.add(&ring.variable(0), &ring.variable(1))];
        assert_eq!(
            macaulay_initial_ideal(&ring, &lin, 2).unwrap(),
            MonomialIdeal::new(2, vec![Monomial::new(&[1, 0])])
        );
    }

    #[test]
    fn colon_dimensions() {
        let ring = PolyRing::new(Rationals, 2);
        let sq: Vec<_> = [[2, 0], [1, 1], [0, 2]]
            .iter()
            .map(|e| ring.monomial(Monomial::new(e)))
            .collect();
        assert_eq!(colon_dimension_by_linear_algebra(&ring, &sq, 2, 1, 4).unwrap(), 2);
        let x1 = vec![ring.variable(0)];
        assert_eq!(colon_dimension_by_linear_algebra(&ring, &x1, 2, 0, 4).unwrap(), 0);
        assert!(colon_dimension_by_linear_algebra(&ring, &x1, 3, 0, 4).is_err());
        assert!(colon_dimension_by_linear_algebra(&ring, &x1, 2, 4, 4).is_err());
        let all = colon_dimensions_by_linear_algebra(&ring, &sq, 2, 4).unwrap();
        let one_by_one: Vec<_> =
            (0..4).map(|j| colon_dimension_by_linear_algebra(&ring, &sq, 2, j, 4).unwrap()).collect();
        assert_eq!(all, one_by_one);
        assert_eq!(all, vec![0, 2, 0, 0]);
    }

    fn exact_pivots(rows: &[Row<BigInt>]) -> Vec<usize> {
        let mut ech = Echelon::new(Integers);
        for row in rows {
            ech.insert(Integers.normalize(row.clone()));
        }
        ech.rows.keys().copied().collect()
    }

    #[test]
    fn unlucky_prime_is_discarded() {
        // The first prime tried divides the leading entry.
        let p = BigInt::from((1u64 << 31) - 1);
        let rows = vec![vec![(0, p.clone()), (1, BigInt::one())], vec![(1, p.clone()), (2, p)]];
        assert_eq!(certified_pivots(&rows, 3), Some(vec![0, 1]));
        assert_eq!(exact_pivots(&rows), vec![0, 1]);
    }

    #[test]
    fn large_kernel_entries_need_many_primes() {
        let a = BigInt::from(3u8).pow(150u32);
        let b: BigInt = BigInt::from(2u8).pow(230u32) + 1;
        let rows = vec![
            vec![(0, a.clone()), (2, b.clone())],
            vec![(0, b.clone()), (1, a.clone()), (3, BigInt::from(7))],
            vec![(1, a + &b), (2, BigInt::from(5)), (3, b)],
        ];
        let got = certified_pivots(&rows, 4).unwrap();
        assert_eq!(got, exact_pivots(&rows));
        assert_eq!(got, vec![0, 1, 2]);
    }

    #[test]
    fn reconstruction_recovers_small_fractions() {
        let m = BigInt::from(1_000_003u64) * BigInt::from(999_983u64);
        let x = (BigInt::from(-37) * BigInt::from(412).modinv(&m).unwrap()).mod_floor(&m);
        assert_eq!(rational_reconstruction(&x, &m), Some((BigInt::from(-37), BigInt::from(412))));
        assert_eq!(rational_reconstruction(&BigInt::from(5), &m), Some((BigInt::from(5), BigInt::one())));
    }

    #[test]
    fn default_truncation() {
        let ring = PolyRing::new(Rationals, 2);
        assert_eq!(default_t_max(&ci(&ring)), 10);
        let big = vec![ring.monomial(Monomial::new(&[3, 3]))];
        assert_eq!(default_t_max(&big), 14);
    }
}
