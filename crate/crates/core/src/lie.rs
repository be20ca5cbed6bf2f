//! An independent Lie-simplicity oracle over prime fields.
//!
//! Lie ideals of `L` are exactly the subspaces invariant under every adjoint
//! operator `ad_x`, so `L` is simple iff it is nonabelian and its adjoint
//! module is irreducible. Irreducibility is decided with Norton's criterion:
//! pick `theta` in the (unital) algebra generated by the `ad_x` with nonzero
//! null space `N`. The module is irreducible iff every nonzero `v` in `N`
//! spins up to the whole space and one nonzero `w` in the null space of
//! `theta^T` spins up to the whole dual space under the transposed
//! operators. A failing spin-up is itself a proper ideal (or, on the dual
//! side, its annihilator is one).
//!
//! Over the rationals the oracle refuses: invariant-subspace search over an
//! infinite field is not a finite enumeration.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::field::{is_zero_vector, FieldSpec, Matrix, Scalar, Subspace};
use crate::groupoid::FiniteGroupoid;
use crate::steinberg::{lie_simplicity_verdict, SteinbergAlgebra};
use crate::verdict::LieVerdict;

/// Seed used when callers do not supply one.
pub const DEFAULT_SEED: u64 = 0x5EED_1E5A;

/// Norton search gives up after this many random algebra elements.
const NORTON_ATTEMPTS: usize = 64;
/// Largest number of one-dimensional subspaces of a null space we are
/// willing to spin up individually.
const NULL_SPACE_LINES_LIMIT: u64 = 4096;
/// Exhaustive fallback runs when `dim <= 6` or `p^dim <= 10^6`.
const EXHAUSTIVE_MAX_DIM: usize = 6;
const EXHAUSTIVE_MAX_POINTS: u64 = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("structure constants violate antisymmetry at basis pair ({0}, {1})")]
    Antisymmetry(usize, usize),
    #[error("structure constants violate the Jacobi identity at basis triple ({0}, {1}, {2})")]
    Jacobi(usize, usize, usize),
    #[error("structure constant tensor has the wrong shape")]
    Shape,
    #[error("ideal closure of the zero vector requested")]
    ZeroVector,
    #[error("simplicity oracle needs a prime field, got {0}")]
    UnsupportedField(FieldSpec),
    #[error("Norton search found no usable element and the exhaustive fallback is out of range")]
    Inconclusive,
    #[error("cross-check precondition failed: {0}")]
    Precondition(String),
    #[error("theorem verdict {theorem} disagrees with oracle verdict {oracle} over F_{p}")]
    Disagreement { theorem: String, oracle: String, p: u32 },
    #[error("commutator {0} is not in [A, A]")]
    NotClosed(usize),
}

/// A finite-dimensional associative algebra given by structure constants:
/// `e_i e_j = table[i * dim + j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssociativeAlgebra {
    field: FieldSpec,
    dim: usize,
    table: Vec<Vec<Scalar>>,
}

impl AssociativeAlgebra {
    pub fn from_fn(field: FieldSpec, dim: usize, f: impl Fn(usize, usize) -> Vec<Scalar>) -> Self {
        let table = (0..dim * dim).map(|k| f(k / dim, k % dim)).collect();
        AssociativeAlgebra { field, dim, table }
    }

    /// `M_d(K)` in the matrix-unit basis, `E_ij` at index `i * d + j`.
    pub fn matrix_algebra(field: FieldSpec, d: usize) -> Self {
        AssociativeAlgebra::from_fn(field, d * d, |a, b| {
            let mut v = vec![field.zero(); d * d];
            let (i, j, k, l) = (a / d, a % d, b / d, b % d);
            if j == k {
                v[i * d + l] = field.one();
            }
            v
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim];
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let k = a * b;
                for (o, c) in out.iter_mut().zip(&self.table[i * self.dim + j]) {
                    if !c.is_zero() {
                        *o = &*o + &(&k * c);
                    }
                }
            }
        }
        out
    }

    pub fn commutator(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let xy = self.multiply(x, y);
        let yx = self.multiply(y, x);
        xy.iter().zip(&yx).map(|(a, b)| a - b).collect()
    }

    fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim];
        v[i] = self.field.one();
        v
    }
}

/// A Lie algebra given by structure constants `[e_i, e_j] = bracket[i * dim + j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    field: FieldSpec,
    dim: usize,
    bracket: Vec<Vec<Scalar>>,
}

impl LieAlgebra {
    /// Validates antisymmetry and the Jacobi identity on all basis pairs and
    /// triples.
    pub fn new(field: FieldSpec, dim: usize, bracket: Vec<Vec<Scalar>>) -> Result<Self, LieError> {
        if bracket.len() != dim * dim
            || bracket
                .iter()
                .any(|v| v.len() != dim || v.iter().any(|s| s.field() != field))
        {
            return Err(LieError::Shape);
        }
        let l = LieAlgebra { field, dim, bracket };
        for i in 0..dim {
            for j in i..dim {
                let sum: Vec<Scalar> = l
                    .constants(i, j)
                    .iter()
                    .zip(l.constants(j, i))
                    .map(|(a, b)| a + b)
                    .collect();
                let bad = if i == j {
                    !is_zero_vector(l.constants(i, i))
                } else {
                    !is_zero_vector(&sum)
                };
                if bad {
                    return Err(LieError::Antisymmetry(i, j));
                }
            }
        }
        let basis: Vec<Vec<Scalar>> = (0..dim).map(|i| l.basis_vector(i)).collect();
        for i in 0..dim {
            for j in (i + 1)..dim {
                let ij = l.bracket(&basis[i], &basis[j]);
                for k in (j + 1)..dim {
                    let jk = l.bracket(&basis[j], &basis[k]);
                    let ki = l.bracket(&basis[k], &basis[i]);
                    let total: Vec<Scalar> = l
                        .bracket(&basis[i], &jk)
                        .iter()
                        .zip(l.bracket(&basis[j], &ki))
                        .zip(l.bracket(&basis[k], &ij))
                        .map(|((a, b), c)| &(a + &b) + &c)
                        .collect();
                    if !is_zero_vector(&total) {
                        return Err(LieError::Jacobi(i, j, k));
                    }
                }
            }
        }
        Ok(l)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constants(&self, i: usize, j: usize) -> &[Scalar] {
        &self.bracket[i * self.dim + j]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim];
        v[i] = self.field.one();
        v
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim];
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let k = a * b;
                for (o, c) in out.iter_mut().zip(self.constants(i, j)) {
                    if !c.is_zero() {
                        *o = &*o + &(&k * c);
                    }
                }
            }
        }
        out
    }

    /// Matrix of `ad_{e_i}`; column `j` is `[e_i, e_j]`.
    pub fn ad(&self, i: usize) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.dim, self.dim);
        for j in 0..self.dim {
            for (r, c) in self.constants(i, j).iter().enumerate() {
                m.set(r, j, c.clone());
            }
        }
        m
    }

    pub fn is_abelian(&self) -> bool {
        self.bracket.iter().all(|v| is_zero_vector(v))
    }

    /// Whether `s` is closed under bracketing with every basis element.
    pub fn is_ideal(&self, s: &Subspace) -> bool {
        (0..self.dim).all(|i| {
            let e = self.basis_vector(i);
            s.basis().iter().all(|w| s.contains(&self.bracket(&e, w)))
        })
    }
}

/// `[A, A]` with its induced bracket, together with its basis inside `A`.
#[derive(Debug, Clone)]
pub struct CommutatorLie {
    pub algebra: LieAlgebra,
    pub embedding: Subspace,
}

/// The Lie algebra on `[A, A]` with bracket `xy - yx`.
pub fn lie_from_algebra(a: &AssociativeAlgebra) -> Result<CommutatorLie, LieError> {
    let n = a.dim();
    let mut gens = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let c = a.commutator(&a.basis_vector(i), &a.basis_vector(j));
            if !is_zero_vector(&c) {
                gens.push(c);
            }
        }
    }
    let span = Subspace::span(a.field(), n, gens).map_err(|_| LieError::Shape)?;
    let m = span.dim();
    let mut bracket = Vec::with_capacity(m * m);
    for x in span.basis() {
        for y in span.basis() {
            let c = a.commutator(x, y);
            let coords = span.coordinates(&c).ok_or(LieError::NotClosed(bracket.len()))?;
            bracket.push(coords);
        }
    }
    Ok(CommutatorLie {
        algebra: LieAlgebra::new(a.field(), m, bracket)?,
        embedding: span,
    })
}

/// One step of an ideal closure: bracketing ambient basis element
/// `generator` with `source` produced the new vector `result`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureStep {
    pub generator: usize,
    pub source: Vec<Scalar>,
    pub result: Vec<Scalar>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieIdealWitness {
    pub ideal: Subspace,
    pub trace: Vec<ClosureStep>,
}

impl LieIdealWitness {
    pub fn dim(&self) -> usize {
        self.ideal.dim()
    }
}

/// Smallest ideal containing `v`.
pub fn ideal_closure(l: &LieAlgebra, v: &[Scalar]) -> Result<LieIdealWitness, LieError> {
    if v.len() != l.dim() {
        return Err(LieError::Shape);
    }
    if is_zero_vector(v) {
        return Err(LieError::ZeroVector);
    }
    let mut ideal = Subspace::span(l.field(), l.dim(), vec![v.to_vec()]).expect("dims");
    let mut trace = Vec::new();
    let mut queue = vec![v.to_vec()];
    while let Some(w) = queue.pop() {
        for i in 0..l.dim() {
            if ideal.is_full() {
                break;
            }
            let u = l.bracket(&l.basis_vector(i), &w);
            if ideal.insert(u.clone()) {
                trace.push(ClosureStep {
                    generator: i,
                    source: w.clone(),
                    result: u.clone(),
                });
                queue.push(u);
            }
        }
    }
    Ok(LieIdealWitness { ideal, trace })
}

/// Smallest subspace containing `v` and invariant under every operator.
pub fn spin(field: FieldSpec, v: &[Scalar], ops: &[Matrix]) -> Subspace {
    let n = v.len();
    let mut span = Subspace::span(field, n, vec![v.to_vec()]).expect("dims");
    let mut queue = vec![v.to_vec()];
    while let Some(w) = queue.pop() {
        for op in ops {
            if span.is_full() {
                return span;
            }
            let u = op.apply(&w);
            if span.insert(u.clone()) {
                queue.push(u);
            }
        }
    }
    span
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LieSimplicity {
    Simple,
    /// `[L, L] = 0`.
    Abelian,
    ProperIdeal(LieIdealWitness),
}

impl LieSimplicity {
    pub fn is_simple(&self) -> bool {
        matches!(self, LieSimplicity::Simple)
    }

    pub fn label(&self) -> &'static str {
        match self {
            LieSimplicity::Simple => "Simple",
            LieSimplicity::Abelian => "NotSimple (abelian)",
            LieSimplicity::ProperIdeal(_) => "NotSimple (proper ideal)",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleMethod {
    /// Norton first, exhaustive fallback when in range.
    Auto,
    Norton,
    Exhaustive,
}

fn exhaustive_in_range(p: u64, dim: usize) -> bool {
    dim <= EXHAUSTIVE_MAX_DIM
        || u32::try_from(dim)
            .ok()
            .and_then(|d| p.checked_pow(d))
            .is_some_and(|n| n <= EXHAUSTIVE_MAX_POINTS)
}

/// Representatives of the one-dimensional subspaces of the span of
/// `basis`: first nonzero coordinate (in `basis` order) equal to one.
fn projective_points(field: FieldSpec, basis: &[Vec<Scalar>]) -> impl Iterator<Item = Vec<Scalar>> + '_ {
    let p = field.size().expect("finite field");
    let k = basis.len();
    let n = basis.first().map_or(0, Vec::len);
    (0..k).flat_map(move |lead| {
        let tail = k - lead - 1;
        (0..p.pow(tail as u32)).map(move |mut code| {
            let mut v = basis[lead].clone();
            for b in &basis[lead + 1..] {
                let c = field.from_i64((code % p) as i64);
                code /= p;
                crate::field::axpy(&mut v, &c, b);
            }
            debug_assert_eq!(v.len(), n);
            v
        })
    })
}

fn exhaustive(l: &LieAlgebra) -> LieSimplicity {
    let n = l.dim();
    let basis: Vec<Vec<Scalar>> = (0..n).map(|i| l.basis_vector(i)).collect();
    for v in projective_points(l.field(), &basis) {
        let w = ideal_closure(l, &v).expect("nonzero representative");
        if w.dim() < n {
            return LieSimplicity::ProperIdeal(w);
        }
    }
    LieSimplicity::Simple
}

fn random_scalar(field: FieldSpec, rng: &mut ChaCha8Rng) -> Scalar {
    let p = field.size().expect("finite field");
    field.from_i64(rng.gen_range(0..p) as i64)
}

fn matrix_sum(a: &Matrix, b: &Matrix, k: &Scalar) -> Matrix {
    let entries = a.entries().iter().zip(b.entries()).map(|(x, y)| x + &(k * y)).collect();
    Matrix::new(a.field(), a.rows(), a.cols(), entries).expect("same shape")
}

fn lines_in(p: u64, k: usize) -> u64 {
    // (p^k - 1) / (p - 1), saturating
    let mut total: u64 = 0;
    let mut pow: u64 = 1;
    for _ in 0..k {
        total = total.saturating_add(pow);
        pow = pow.saturating_mul(p);
    }
    total
}

/// Norton's irreducibility criterion on the adjoint module. `None` when no
/// usable element was found.
fn norton(l: &LieAlgebra, seed: u64) -> Option<LieSimplicity> {
    let field = l.field();
    let p = field.size().expect("finite field");
    let n = l.dim();
    let gens: Vec<Matrix> = (0..n)
        .map(|i| l.ad(i))
        .filter(|m| !is_zero_vector(m.entries()))
        .collect();
    let gens_t: Vec<Matrix> = gens.iter().map(Matrix::transpose).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let id = Matrix::identity(field, n);

    for _ in 0..NORTON_ATTEMPTS {
        // Random element of the enveloping algebra: a combination of the
        // generators and of products of pairs of them.
        let mut a = Matrix::zeros(field, n, n);
        for g in &gens {
            a = matrix_sum(&a, g, &random_scalar(field, &mut rng));
        }
        for _ in 0..2 {
            let x = &gens[rng.gen_range(0..gens.len())];
            let y = &gens[rng.gen_range(0..gens.len())];
            let xy = x.mul(y).expect("square");
            a = matrix_sum(&a, &xy, &random_scalar(field, &mut rng));
        }
        // Candidates theta = a - lambda I; the adjoint of a random x is
        // always singular, so include it too.
        let mut candidates: Vec<Matrix> = Vec::new();
        if p <= 64 {
            for lambda in 0..p {
                candidates.push(matrix_sum(&a, &id, &(-field.from_i64(lambda as i64))));
            }
        } else {
            candidates.push(a.clone());
        }
        let x: Vec<Scalar> = (0..n).map(|_| random_scalar(field, &mut rng)).collect();
        let mut adx = Matrix::zeros(field, n, n);
        for (i, c) in x.iter().enumerate() {
            adx = matrix_sum(&adx, &l.ad(i), c);
        }
        candidates.push(adx);

        let best = candidates
            .into_iter()
            .map(|theta| {
                let ns = theta.null_space();
                (ns.len(), theta, ns)
            })
            .filter(|(k, _, _)| *k > 0 && lines_in(p, *k) <= NULL_SPACE_LINES_LIMIT)
            .min_by_key(|(k, _, _)| *k);
        let Some((_, theta, null)) = best else {
            continue;
        };

        for v in projective_points(field, &null) {
            let w = ideal_closure(l, &v).expect("nonzero null vector");
            if w.dim() < n {
                return Some(LieSimplicity::ProperIdeal(w));
            }
        }
        let dual_null = theta.transpose().null_space();
        let w = dual_null.first().expect("theta^T singular when theta is");
        let dual = spin(field, w, &gens_t);
        if dual.is_full() {
            return Some(LieSimplicity::Simple);
        }
        // The annihilator of a proper dual submodule is a proper ideal.
        let ann_rows = Matrix::from_rows(field, n, dual.basis().to_vec()).expect("dims");
        let ideal = Subspace::span(field, n, ann_rows.null_space()).expect("dims");
        debug_assert!(l.is_ideal(&ideal));
        return Some(LieSimplicity::ProperIdeal(LieIdealWitness {
            ideal,
            trace: Vec::new(),
        }));
    }
    None
}

pub fn is_simple_finite_field(l: &LieAlgebra, seed: u64) -> Result<LieSimplicity, LieError> {
    is_simple_finite_field_with(l, OracleMethod::Auto, seed)
}

pub fn is_simple_finite_field_with(l: &LieAlgebra, method: OracleMethod, seed: u64) -> Result<LieSimplicity, LieError> {
    let Some(p) = l.field().size() else {
        return Err(LieError::UnsupportedField(l.field()));
    };
    if l.is_abelian() {
        return Ok(LieSimplicity::Abelian);
    }
    match method {
        OracleMethod::Exhaustive => Ok(exhaustive(l)),
        OracleMethod::Norton => norton(l, seed).ok_or(LieError::Inconclusive),
        OracleMethod::Auto => match norton(l, seed) {
            Some(r) => Ok(r),
            None if exhaustive_in_range(p, l.dim()) => Ok(exhaustive(l)),
            None => Err(LieError::Inconclusive),
        },
    }
}

/// Theorem verdict against oracle verdict for one groupoid over `F_p`.
#[derive(Debug, Clone)]
pub struct CrossCheckReport {
    pub p: u32,
    pub theorem: LieVerdict,
    pub oracle: LieSimplicity,
    pub lie_dim: usize,
    pub agree: bool,
}

impl CrossCheckReport {
    /// Ideal witness in ambient arrow coordinates, if the oracle found one.
    pub fn witness(&self) -> Option<&LieIdealWitness> {
        match &self.oracle {
            LieSimplicity::ProperIdeal(w) => Some(w),
            _ => None,
        }
    }
}

pub fn cross_check_groupoid(g: &FiniteGroupoid, p: u32, seed: u64) -> Result<CrossCheckReport, LieError> {
    let field = FieldSpec::prime(u64::from(p)).map_err(|e| LieError::Precondition(e.to_string()))?;
    if let Err(a) = g.is_effective() {
        return Err(LieError::Precondition(format!(
            "groupoid not effective (witness `{}`)",
            g.arrow(a).name
        )));
    }
    if g.is_minimal().is_err() {
        return Err(LieError::Precondition("groupoid not minimal".into()));
    }
    let theorem = lie_simplicity_verdict(g, field);
    let lie = lie_from_algebra(&SteinbergAlgebra::new(g, field).to_associative())?;
    let oracle = is_simple_finite_field(&lie.algebra, seed)?;
    let agree = theorem.is_simple() == oracle.is_simple();
    if !agree {
        return Err(LieError::Disagreement {
            theorem: theorem.label().to_string(),
            oracle: oracle.label().to_string(),
            p,
        });
    }
    Ok(CrossCheckReport {
        p,
        theorem,
        oracle,
        lie_dim: lie.algebra.dim(),
        agree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    fn sl2(field: FieldSpec) -> LieAlgebra {
        lie_from_algebra(&AssociativeAlgebra::matrix_algebra(field, 2))
            .unwrap()
            .algebra
    }

    /// `(e, h, f)` coordinates in the echelon basis of `sl_2` inside `M_2`.
    fn sl2_element(field: FieldSpec, l: &CommutatorLie, m: [i64; 4]) -> Vec<Scalar> {
        let v: Vec<Scalar> = m.iter().map(|&x| field.from_i64(x)).collect();
        l.embedding.coordinates(&v).unwrap()
    }

    #[test]
    fn sl2_from_matrices() {
        let q = FieldSpec::Rationals;
        let l = lie_from_algebra(&AssociativeAlgebra::matrix_algebra(q, 2)).unwrap();
        assert_eq!(l.algebra.dim(), 3);
        let e = sl2_element(q, &l, [0, 1, 0, 0]);
        let f = sl2_element(q, &l, [0, 0, 1, 0]);
        let h = sl2_element(q, &l, [1, 0, 0, -1]);
        let two_e: Vec<Scalar> = e.iter().map(|x| x * &q.from_i64(2)).collect();
        assert_eq!(l.algebra.bracket(&h, &e), two_e);
        assert_eq!(l.algebra.bracket(&e, &f), h);
    }

    #[test]
    fn commutative_algebra_gives_zero_lie() {
        let z2 = FiniteGroupoid::cyclic(2);
        let a = SteinbergAlgebra::new(&z2, FieldSpec::Rationals).to_associative();
        assert_eq!(lie_from_algebra(&a).unwrap().algebra.dim(), 0);
    }

    #[test]
    fn validation_rejects_bad_constants() {
        let q = FieldSpec::Rationals;
        let mut consts = vec![vec![q.zero(); 2]; 4];
        consts[1] = vec![q.one(), q.zero()]; // [e0, e1] = e0 but [e1, e0] = 0
        assert_eq!(LieAlgebra::new(q, 2, consts), Err(LieError::Antisymmetry(0, 1)));

        // [x, y] = z, [y, z] = x, [z, x] = x is antisymmetric but not Jacobi.
        let v = |a: i64, b: i64, c: i64| vec![q.from_i64(a), q.from_i64(b), q.from_i64(c)];
        let mut b = vec![v(0, 0, 0); 9];
        b[1] = v(0, 0, 1);
        b[3] = v(0, 0, -1);
        b[5] = v(1, 0, 0);
        b[7] = v(-1, 0, 0);
        b[6] = v(1, 0, 0);
        b[2] = v(-1, 0, 0);
        assert_eq!(LieAlgebra::new(q, 3, b), Err(LieError::Jacobi(0, 1, 2)));
    }

    #[test]
    fn closure_examples() {
        let q = FieldSpec::Rationals;
        let l = lie_from_algebra(&AssociativeAlgebra::matrix_algebra(q, 2)).unwrap();
        let e = sl2_element(q, &l, [0, 1, 0, 0]);
        assert_eq!(ideal_closure(&l.algebra, &e).unwrap().dim(), 3);

        let f2 = fp(2);
        let l2 = lie_from_algebra(&AssociativeAlgebra::matrix_algebra(f2, 2)).unwrap();
        let h = sl2_element(f2, &l2, [1, 0, 0, 1]);
        let w = ideal_closure(&l2.algebra, &h).unwrap();
        assert_eq!(w.dim(), 1);
        assert!(l2.algebra.is_ideal(&w.ideal));

        let ab = LieAlgebra::new(q, 2, vec![vec![q.zero(); 2]; 4]).unwrap();
        assert_eq!(ideal_closure(&ab, &[q.one(), q.one()]).unwrap().dim(), 1);
        assert_eq!(ideal_closure(&ab, &[q.zero(), q.zero()]), Err(LieError::ZeroVector));
    }

    #[test]
    fn simplicity_examples() {
        assert_eq!(
            is_simple_finite_field(&sl2(fp(3)), DEFAULT_SEED).unwrap(),
            LieSimplicity::Simple
        );
        match is_simple_finite_field(&sl2(fp(2)), DEFAULT_SEED).unwrap() {
            LieSimplicity::ProperIdeal(w) => assert_eq!(w.dim(), 1),
            other => panic!("{other:?}"),
        }
        let f = fp(5);
        let ab = LieAlgebra::new(f, 1, vec![vec![f.zero()]]).unwrap();
        assert_eq!(
            is_simple_finite_field(&ab, DEFAULT_SEED).unwrap(),
            LieSimplicity::Abelian
        );
        assert_eq!(
            is_simple_finite_field(&sl2(FieldSpec::Rationals), DEFAULT_SEED),
            Err(LieError::UnsupportedField(FieldSpec::Rationals))
        );
    }

    #[test]
    fn cross_check_examples() {
        let p2 = FiniteGroupoid::pair(2);
        let p3 = FiniteGroupoid::pair(3);
        let r = cross_check_groupoid(&p2, 2, DEFAULT_SEED).unwrap();
        assert!(r.agree && !r.theorem.is_simple());
        let r = cross_check_groupoid(&p3, 2, DEFAULT_SEED).unwrap();
        assert!(r.agree && r.theorem.is_simple());
        let r = cross_check_groupoid(&p2, 3, DEFAULT_SEED).unwrap();
        assert!(r.agree && r.theorem.is_simple());
        assert!(matches!(
            cross_check_groupoid(&FiniteGroupoid::cyclic(2), 3, DEFAULT_SEED),
            Err(LieError::Precondition(_))
        ));
    }
}
