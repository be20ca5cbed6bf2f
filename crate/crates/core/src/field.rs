//! Exact fields and dense exact linear algebra.
//!
//! Two kinds of field are supported: the rationals, backed by
//! arbitrary-precision integers, and prime fields `F_p` with `p < 2^31`.
//! Nothing in this crate touches floating point.
//!
//! Row reduction pivots on the first nonzero entry, scanning columns
//! left-to-right and rows top-to-bottom, so every certificate produced from
//! it is reproducible.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

const MAX_PRIME: u64 = 1 << 31;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("invalid field `{0}` (expected `Q` or `Fp:<p>`)")]
    InvalidField(String),
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("scalar belongs to {found}, expected {expected}")]
    FieldMismatch { expected: FieldSpec, found: FieldSpec },
    #[error("cannot parse scalar `{0}`")]
    ParseScalar(String),
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
}

/// An exact field: `Q` or `F_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u32),
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self, FieldError> {
        if p >= MAX_PRIME || !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(FieldSpec::PrimeField(p as u32))
    }

    /// 0 for the rationals, `p` for `F_p`.
    pub fn characteristic(&self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => *p,
        }
    }

    /// Number of elements, or `None` for an infinite field.
    pub fn size(&self) -> Option<u64> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::PrimeField(p) => Some(u64::from(*p)),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.size().is_some()
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match *self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::PrimeField(p) => Scalar::Residue {
                value: n.rem_euclid(i64::from(p)) as u32,
                modulus: p,
            },
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match *self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(n.clone())),
            FieldSpec::PrimeField(p) => {
                let m = BigInt::from(p);
                let r = ((n % &m) + &m) % &m;
                Scalar::Residue {
                    value: r.to_u32().expect("residue below modulus"),
                    modulus: p,
                }
            }
        }
    }

    pub fn rational(&self, num: i64, den: i64) -> Option<Scalar> {
        if den == 0 {
            return None;
        }
        self.from_i64(num).checked_div(&self.from_i64(den))
    }

    /// All elements of a finite field, in residue order.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        match *self {
            FieldSpec::Rationals => None,
            FieldSpec::PrimeField(p) => Some((0..p).map(|value| Scalar::Residue { value, modulus: p }).collect()),
        }
    }

    pub fn contains(&self, s: &Scalar) -> bool {
        s.field() == *self
    }

    /// Parses a scalar in this field. Accepts integers, fractions (`3/2`) and
    /// residues written either bare (`4`) or as `4 mod 5`.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar, FieldError> {
        let bad = || FieldError::ParseScalar(text.to_string());
        let t = text.trim();
        let body = match (self, t.split_once(" mod ")) {
            (FieldSpec::PrimeField(p), Some((v, m))) => {
                if m.trim().parse::<u32>().map_err(|_| bad())? != *p {
                    return Err(bad());
                }
                v.trim()
            }
            (FieldSpec::Rationals, Some(_)) => return Err(bad()),
            (_, None) => t,
        };
        let (num, den) = match body.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (body, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        self.from_bigint(&num)
            .checked_div(&self.from_bigint(&den))
            .ok_or_else(bad)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "Q" {
            return Ok(FieldSpec::Rationals);
        }
        let p = s
            .strip_prefix("Fp:")
            .and_then(|p| p.parse::<u64>().ok())
            .ok_or_else(|| FieldError::InvalidField(s.to_string()))?;
        FieldSpec::prime(p)
    }
}

/// An exact field element. Rationals are kept in lowest terms with a positive
/// denominator; residues are always reduced into `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u32, modulus: u32 },
}

fn mod_inverse(a: u32, p: u32) -> Option<u32> {
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (i64::from(p), i64::from(a));
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    if r != 1 {
        return None;
    }
    Some(t.rem_euclid(i64::from(p)) as u32)
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Residue { modulus, .. } => FieldSpec::PrimeField(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    pub fn inverse(&self) -> Option<Scalar> {
        match self {
            Scalar::Rational(q) if q.is_zero() => None,
            Scalar::Rational(q) => Some(Scalar::Rational(q.recip())),
            Scalar::Residue { value, modulus } => mod_inverse(*value, *modulus).map(|value| Scalar::Residue {
                value,
                modulus: *modulus,
            }),
        }
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Option<Scalar> {
        rhs.inverse().map(|inv| self * &inv)
    }

    /// The residue of a prime-field element.
    pub fn residue(&self) -> Option<u32> {
        match self {
            Scalar::Residue { value, .. } => Some(*value),
            Scalar::Rational(_) => None,
        }
    }

    fn expect_same(&self, rhs: &Scalar) {
        if self.field() != rhs.field() {
            panic!("scalar field mismatch: {} vs {}", self.field(), rhs.field());
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Residue { value, modulus } => write!(f, "{value} mod {modulus}"),
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;

    fn add(self, rhs: &Scalar) -> Scalar {
        self.expect_same(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Residue { value: a, modulus }, Scalar::Residue { value: b, .. }) => Scalar::Residue {
                value: ((u64::from(*a) + u64::from(*b)) % u64::from(*modulus)) as u32,
                modulus: *modulus,
            },
            _ => unreachable!(),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;

    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &Scalar) -> Scalar {
        self.expect_same(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Residue { value: a, modulus }, Scalar::Residue { value: b, .. }) => Scalar::Residue {
                value: ((u64::from(*a) * u64::from(*b)) % u64::from(*modulus)) as u32,
                modulus: *modulus,
            },
            _ => unreachable!(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Lowest-terms check used by the arithmetic property tests.
pub fn is_normalized(s: &Scalar) -> bool {
    match s {
        Scalar::Rational(q) => q.denom().is_positive() && num_integer::Integer::gcd(q.numer(), q.denom()).is_one(),
        Scalar::Residue { value, modulus } => value < modulus,
    }
}

/// `a + k * b`, entrywise.
pub fn axpy(a: &mut [Scalar], k: &Scalar, b: &[Scalar]) {
    if k.is_zero() {
        return;
    }
    for (x, y) in a.iter_mut().zip(b) {
        if !y.is_zero() {
            *x = &*x + &(k * y);
        }
    }
}

/// `sum_j coeffs[j] * vectors[j]`.
pub fn linear_combination(field: FieldSpec, len: usize, coeffs: &[Scalar], vectors: &[Vec<Scalar>]) -> Vec<Scalar> {
    let mut out = vec![field.zero(); len];
    for (c, v) in coeffs.iter().zip(vectors) {
        axpy(&mut out, c, v);
    }
    out
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// Dense row-major matrix over one field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn new(field: FieldSpec, rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self, FieldError> {
        if entries.len() != rows * cols {
            return Err(FieldError::DimensionMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        if let Some(bad) = entries.iter().find(|s| s.field() != field) {
            return Err(FieldError::FieldMismatch {
                expected: field,
                found: bad.field(),
            });
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from rows; `cols` is needed when `rows` is empty.
    pub fn from_rows(field: FieldSpec, cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Self, FieldError> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(FieldError::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Matrix::new(field, n, cols, entries)
    }

    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
            .collect();
        Matrix::from_rows(field, cols, data).expect("rectangular integer matrix")
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        assert_eq!(v.field(), self.field, "scalar field mismatch");
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.entries[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix, FieldError> {
        if self.cols != rhs.rows {
            return Err(FieldError::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let idx = i * rhs.cols + j;
                        out.entries[idx] = &out.entries[idx] + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product `M v`.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(self.field.zero(), |acc, (a, b)| &acc + &(a * b))
            })
            .collect()
    }

    pub fn trace(&self) -> Result<Scalar, FieldError> {
        if self.rows != self.cols {
            return Err(FieldError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok((0..self.rows).fold(self.field.zero(), |acc, i| &acc + self.get(i, i)))
    }

    /// Reduced row echelon form and the ordered pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for col in 0..m.cols {
            if lead == m.rows {
                break;
            }
            let Some(pr) = (lead..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(pr, lead);
            let inv = m.get(lead, col).inverse().expect("nonzero pivot");
            for c in col..m.cols {
                let idx = lead * m.cols + c;
                m.entries[idx] = &m.entries[idx] * &inv;
            }
            for r in 0..m.rows {
                if r == lead {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let sub = &factor * m.get(lead, c);
                    let idx = r * m.cols + c;
                    m.entries[idx] = &m.entries[idx] - &sub;
                }
            }
            pivots.push(col);
            lead += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : M x = 0}`, one vector per free column in increasing
    /// column order.
    pub fn null_space(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![self.field.zero(); self.cols];
                v[fc] = self.field.one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -r.get(row, fc);
                }
                v
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

/// Decides whether `v` lies in the span of `basis`. On success returns
/// coefficients `c` with `sum_j c_j basis_j = v` exactly; free variables are
/// set to zero, so the certificate is deterministic.
pub fn in_span(field: FieldSpec, v: &[Scalar], basis: &[Vec<Scalar>]) -> Result<Option<Vec<Scalar>>, FieldError> {
    let n = v.len();
    for b in basis {
        if b.len() != n {
            return Err(FieldError::DimensionMismatch {
                expected: n,
                found: b.len(),
            });
        }
    }
    for s in v.iter().chain(basis.iter().flatten()) {
        if s.field() != field {
            return Err(FieldError::FieldMismatch {
                expected: field,
                found: s.field(),
            });
        }
    }
    let k = basis.len();
    // Augmented system [b_1 ... b_k | v], one row per coordinate.
    let mut aug = Matrix::zeros(field, n, k + 1);
    for (j, b) in basis.iter().enumerate() {
        for (i, x) in b.iter().enumerate() {
            aug.entries[i * (k + 1) + j] = x.clone();
        }
    }
    for (i, x) in v.iter().enumerate() {
        aug.entries[i * (k + 1) + k] = x.clone();
    }
    let (r, pivots) = aug.rref();
    if pivots.last() == Some(&k) {
        return Ok(None);
    }
    let mut coeffs = vec![field.zero(); k];
    for (row, &pc) in pivots.iter().enumerate() {
        coeffs[pc] = r.get(row, k).clone();
    }
    Ok(Some(coeffs))
}

/// A subspace of `K^n` held as the nonzero rows of an RREF matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    field: FieldSpec,
    ambient_dim: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace {
            field,
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn span(field: FieldSpec, ambient_dim: usize, vectors: Vec<Vec<Scalar>>) -> Result<Self, FieldError> {
        let m = Matrix::from_rows(field, ambient_dim, vectors)?;
        let (r, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Ok(Subspace {
            field,
            ambient_dim,
            basis,
            pivots,
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if v.len() != self.ambient_dim {
            return None;
        }
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let back = linear_combination(self.field, self.ambient_dim, &coords, &self.basis);
        (back == v).then_some(coords)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    /// Adds `v`, returning whether the dimension grew.
    pub fn insert(&mut self, v: Vec<Scalar>) -> bool {
        if self.contains(&v) {
            return false;
        }
        let mut rows = std::mem::take(&mut self.basis);
        rows.push(v);
        *self = Subspace::span(self.field, self.ambient_dim, rows).expect("consistent dims");
        true
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }
}

/// Reduces an integer to a prime-field residue or keeps it rational; used to
/// check that field reductions commute with integer preimages.
pub fn reduce_integer(field: FieldSpec, n: i64) -> Scalar {
    field.from_i64(n)
}

/// Numerator of a rational scalar as an `i64`, if it is an integer that fits.
pub fn as_small_integer(s: &Scalar) -> Option<i64> {
    match s {
        Scalar::Rational(q) if q.denom().is_one() => q.numer().to_i64(),
        Scalar::Residue { value, .. } => Some(i64::from(*value)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn f(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    fn ints(field: FieldSpec, xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| field.from_i64(x)).collect()
    }

    #[test]
    fn field_strings() {
        assert_eq!("Q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert_eq!("Fp:2".parse::<FieldSpec>().unwrap(), FieldSpec::PrimeField(2));
        assert_eq!(FieldSpec::PrimeField(5).to_string(), "Fp:5");
        assert!(matches!("Fp:4".parse::<FieldSpec>(), Err(FieldError::NotPrime(4))));
        assert!(matches!("Fp:1".parse::<FieldSpec>(), Err(FieldError::NotPrime(1))));
        assert!("Fp:2147483659".parse::<FieldSpec>().is_err());
        assert!("R".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn scalar_display_and_parse() {
        let h = q().rational(3, 2).unwrap();
        assert_eq!(h.to_string(), "3/2");
        assert_eq!(q().parse_scalar("3/2").unwrap(), h);
        assert_eq!(q().parse_scalar("-6/4").unwrap(), q().rational(-3, 2).unwrap());
        let r = f(5).from_i64(4);
        assert_eq!(r.to_string(), "4 mod 5");
        assert_eq!(f(5).parse_scalar("4 mod 5").unwrap(), r);
        assert_eq!(f(5).parse_scalar("-1").unwrap(), r);
        assert!(f(5).parse_scalar("4 mod 7").is_err());
        assert!(q().parse_scalar("1/0").is_err());
    }

    #[test]
    fn residue_inverses() {
        let p = f(101);
        for a in 1..101 {
            let x = p.from_i64(a);
            assert!((&x * &x.inverse().unwrap()).is_one());
        }
        assert!(p.zero().inverse().is_none());
    }

    #[test]
    fn rref_examples() {
        let m = Matrix::from_i64(q(), &[&[1, 2], &[2, 4]]);
        let (r, piv) = m.rref();
        assert_eq!(r, Matrix::from_i64(q(), &[&[1, 2], &[0, 0]]));
        assert_eq!(piv, vec![0]);

        for field in [q(), f(2), f(3)] {
            let id = Matrix::identity(field, 2);
            assert_eq!(id.rref(), (id.clone(), vec![0, 1]));
        }

        let m = Matrix::from_i64(f(2), &[&[1, 1], &[1, 1]]);
        let (r, piv) = m.rref();
        assert_eq!(r, Matrix::from_i64(f(2), &[&[1, 1], &[0, 0]]));
        assert_eq!(piv, vec![0]);

        let empty = Matrix::zeros(q(), 0, 0);
        assert_eq!(empty.rref(), (empty.clone(), vec![]));
    }

    #[test]
    fn in_span_examples() {
        let v = ints(q(), &[1, 1]);
        assert_eq!(in_span(q(), &v, &[ints(q(), &[1, -1])]).unwrap(), None);
        assert_eq!(in_span(q(), &v, &[ints(q(), &[1, 1])]).unwrap(), Some(ints(q(), &[1])));
        let v2 = ints(f(2), &[1, 1]);
        assert_eq!(
            in_span(f(2), &v2, &[ints(f(2), &[1, -1])]).unwrap(),
            Some(ints(f(2), &[1]))
        );
        assert!(matches!(
            in_span(q(), &v, &[ints(q(), &[1])]),
            Err(FieldError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn null_space_is_annihilated() {
        let m = Matrix::from_i64(q(), &[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        let ns = m.null_space();
        assert_eq!(ns.len(), 1);
        assert!(is_zero_vector(&m.apply(&ns[0])));
    }

    #[test]
    fn subspace_coordinates_round_trip() {
        let s = Subspace::span(q(), 3, vec![ints(q(), &[1, 1, 0]), ints(q(), &[0, 1, 1])]).unwrap();
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&ints(q(), &[1, 2, 1])));
        assert!(!s.contains(&ints(q(), &[1, 0, 0])));
    }

    #[test]
    fn trace_requires_square() {
        let m = Matrix::zeros(q(), 2, 3);
        assert!(matches!(m.trace(), Err(FieldError::NotSquare { .. })));
    }
}
