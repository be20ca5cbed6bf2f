//! The convolution algebra `A_K(G)` of a finite groupoid.
//!
//! With the discrete topology every function `G -> K` is locally constant
//! and compactly supported, so `A_K(G)` is the space of arrow-indexed
//! vectors under convolution `(f * g)(c) = sum_{c = ab} f(a) g(b)`. The unit
//! space is compact, the algebra is unital with identity the indicator of
//! the unit space, and the arrow indicators `1_a` form a basis with
//! `1_a * 1_b = 1_{ab}` (or 0 when `a, b` are not composable).
//!
//! Verdicts:
//! * simple iff the groupoid is effective and minimal;
//! * for simple `A`, the center is `K * 1`;
//! * for simple nontrivial `A`, `[A, A]` is a simple Lie algebra iff the
//!   identity is not in `[A, A]`. No special case is made for
//!   four-dimensional algebras in characteristic 2: the identity criterion
//!   already covers `M_2(K)` there.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::field::{in_span, linear_combination, FieldError, FieldSpec, Matrix, Scalar, Subspace};
use crate::groupoid::FiniteGroupoid;
use crate::lie::AssociativeAlgebra;
use crate::verdict::{CenterVerdict, LieVerdict};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SteinbergError {
    #[error("element does not belong to this algebra: {0}")]
    Mismatch(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(
        "center computations disagree: class functions give dimension {class_functions}, commutant gives {commutant}"
    )]
    CenterMismatch { class_functions: usize, commutant: usize },
    #[error("trace criterion and commutator span disagree on a {0}x{0} matrix")]
    TraceMismatch(usize),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
}

/// A function on arrows; coordinates are indexed by arrow.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    field: FieldSpec,
    coeffs: Vec<Scalar>,
}

impl AlgebraElement {
    pub fn new(field: FieldSpec, coeffs: Vec<Scalar>) -> Result<Self, FieldError> {
        if let Some(bad) = coeffs.iter().find(|c| c.field() != field) {
            return Err(FieldError::FieldMismatch {
                expected: field,
                found: bad.field(),
            });
        }
        Ok(AlgebraElement { field, coeffs })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn get(&self, arrow: usize) -> &Scalar {
        &self.coeffs[arrow]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    pub fn support(&self) -> BTreeSet<usize> {
        (0..self.coeffs.len()).filter(|&a| !self.coeffs[a].is_zero()).collect()
    }

    pub fn sub(&self, other: &AlgebraElement) -> AlgebraElement {
        AlgebraElement {
            field: self.field,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        AlgebraElement {
            field: self.field,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, k: &Scalar) -> AlgebraElement {
        AlgebraElement {
            field: self.field,
            coeffs: self.coeffs.iter().map(|a| a * k).collect(),
        }
    }
}

/// Why a function fails to be a class function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassViolation {
    /// `f(a) != 0` but `src(a) != rng(a)`.
    OffIsotropy(usize),
    /// `src(a) = rng(a) = src(b)` but `f(a) != f(b a b^-1)`.
    NotConjugationInvariant { alpha: usize, beta: usize },
}

#[derive(Debug, Clone, Copy)]
pub struct SteinbergAlgebra<'g> {
    groupoid: &'g FiniteGroupoid,
    field: FieldSpec,
}

impl<'g> SteinbergAlgebra<'g> {
    pub fn new(groupoid: &'g FiniteGroupoid, field: FieldSpec) -> Self {
        SteinbergAlgebra { groupoid, field }
    }

    pub fn groupoid(&self) -> &'g FiniteGroupoid {
        self.groupoid
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.groupoid.arrow_count()
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement {
            field: self.field,
            coeffs: vec![self.field.zero(); self.dim()],
        }
    }

    pub fn indicator(&self, arrows: impl IntoIterator<Item = usize>) -> AlgebraElement {
        let mut f = self.zero();
        for a in arrows {
            f.coeffs[a] = self.field.one();
        }
        f
    }

    pub fn identity(&self) -> AlgebraElement {
        self.indicator(self.groupoid.unit_space().arrows().iter().copied())
    }

    pub fn element(&self, coeffs: Vec<Scalar>) -> Result<AlgebraElement, SteinbergError> {
        if coeffs.len() != self.dim() {
            return Err(SteinbergError::Mismatch(format!(
                "expected {} coefficients, got {}",
                self.dim(),
                coeffs.len()
            )));
        }
        Ok(AlgebraElement::new(self.field, coeffs)?)
    }

    /// Parses `{"arrow": "coeff"}`; missing arrows are zero.
    pub fn element_from_map(&self, map: &BTreeMap<String, String>) -> Result<AlgebraElement, SteinbergError> {
        let mut f = self.zero();
        for (name, value) in map {
            let a = self
                .groupoid
                .arrow_id(name)
                .ok_or_else(|| SteinbergError::UnknownArrow(name.clone()))?;
            f.coeffs[a] = self.field.parse_scalar(value)?;
        }
        Ok(f)
    }

    /// Nonzero coefficients as `{"arrow": "coeff"}`.
    pub fn element_to_map(&self, f: &AlgebraElement) -> BTreeMap<String, String> {
        f.support()
            .into_iter()
            .map(|a| (self.groupoid.arrow(a).name.clone(), f.coeffs[a].to_string()))
            .collect()
    }

    fn check(&self, f: &AlgebraElement) -> Result<(), SteinbergError> {
        if f.field != self.field {
            return Err(SteinbergError::Mismatch(format!(
                "element over {}, algebra over {}",
                f.field, self.field
            )));
        }
        if f.coeffs.len() != self.dim() {
            return Err(SteinbergError::Mismatch(format!(
                "element has {} coordinates, groupoid has {} arrows",
                f.coeffs.len(),
                self.dim()
            )));
        }
        Ok(())
    }

    pub fn convolve(&self, f: &AlgebraElement, g: &AlgebraElement) -> Result<AlgebraElement, SteinbergError> {
        self.check(f)?;
        self.check(g)?;
        let mut out = self.zero();
        for a in f.support() {
            for b in g.support() {
                if let Some(c) = self.groupoid.compose(a, b) {
                    out.coeffs[c] = &out.coeffs[c] + &(&f.coeffs[a] * &g.coeffs[b]);
                }
            }
        }
        Ok(out)
    }

    pub fn commutator(&self, f: &AlgebraElement, g: &AlgebraElement) -> Result<AlgebraElement, SteinbergError> {
        Ok(self.convolve(f, g)?.sub(&self.convolve(g, f)?))
    }

    pub fn class_function_violation(&self, f: &AlgebraElement) -> Option<ClassViolation> {
        let g = self.groupoid;
        for a in f.support() {
            if g.src(a) != g.rng(a) {
                return Some(ClassViolation::OffIsotropy(a));
            }
        }
        for alpha in 0..g.arrow_count() {
            if g.src(alpha) != g.rng(alpha) {
                continue;
            }
            for beta in 0..g.arrow_count() {
                if g.src(beta) != g.src(alpha) {
                    continue;
                }
                let conj = g.conjugate(beta, alpha).expect("composable by construction");
                if f.coeffs[alpha] != f.coeffs[conj] {
                    return Some(ClassViolation::NotConjugationInvariant { alpha, beta });
                }
            }
        }
        None
    }

    pub fn is_class_function(&self, f: &AlgebraElement) -> bool {
        self.class_function_violation(f).is_none()
    }

    /// Class functions, as the solution space of the linear conditions
    /// `f(a) = 0` off isotropy and `f(a) = f(b a b^-1)`.
    pub fn center_by_class_functions(&self) -> Subspace {
        let g = self.groupoid;
        let n = self.dim();
        let mut rows = Vec::new();
        for alpha in 0..n {
            if g.src(alpha) != g.rng(alpha) {
                let mut r = vec![self.field.zero(); n];
                r[alpha] = self.field.one();
                rows.push(r);
                continue;
            }
            for beta in 0..n {
                if g.src(beta) != g.src(alpha) {
                    continue;
                }
                let conj = g.conjugate(beta, alpha).expect("composable by construction");
                if conj != alpha {
                    let mut r = vec![self.field.zero(); n];
                    r[alpha] = self.field.one();
                    r[conj] = -self.field.one();
                    rows.push(r);
                }
            }
        }
        self.solution_space(rows)
    }

    /// Elements commuting with every arrow indicator.
    #[allow(clippy::needless_range_loop)]
    pub fn center_by_commutant(&self) -> Subspace {
        let g = self.groupoid;
        let n = self.dim();
        let mut rows = Vec::new();
        for a in 0..n {
            // Row for coordinate c of x * 1_a - 1_a * x, as a function of x.
            let mut block = vec![vec![self.field.zero(); n]; n];
            for x in 0..n {
                if let Some(c) = g.compose(x, a) {
                    block[c][x] = &block[c][x] + &self.field.one();
                }
                if let Some(c) = g.compose(a, x) {
                    block[c][x] = &block[c][x] - &self.field.one();
                }
            }
            rows.extend(block);
        }
        self.solution_space(rows)
    }

    fn solution_space(&self, rows: Vec<Vec<Scalar>>) -> Subspace {
        let n = self.dim();
        let m = Matrix::from_rows(self.field, n, rows).expect("rows have arrow length");
        Subspace::span(self.field, n, m.null_space()).expect("null space vectors have arrow length")
    }

    /// The center, computed both as class functions and as the commutant of
    /// the arrow indicators. The two must coincide.
    pub fn center_basis(&self) -> Result<Subspace, SteinbergError> {
        let by_class = self.center_by_class_functions();
        let by_commutant = self.center_by_commutant();
        if by_class != by_commutant {
            return Err(SteinbergError::CenterMismatch {
                class_functions: by_class.dim(),
                commutant: by_commutant.dim(),
            });
        }
        Ok(by_class)
    }

    /// `[A, A]`, spanned by `[1_a, 1_b] = 1_{ab} - 1_{ba}` over arrow pairs.
    /// Bilinearity makes this the span of all commutators.
    pub fn commutator_subspace(&self) -> Subspace {
        let g = self.groupoid;
        let n = self.dim();
        let mut gens = Vec::new();
        for a in 0..n {
            for b in (a + 1)..n {
                let mut v = vec![self.field.zero(); n];
                if let Some(c) = g.compose(a, b) {
                    v[c] = &v[c] + &self.field.one();
                }
                if let Some(c) = g.compose(b, a) {
                    v[c] = &v[c] - &self.field.one();
                }
                if v.iter().any(|x| !x.is_zero()) {
                    gens.push(v);
                }
            }
        }
        Subspace::span(self.field, n, gens).expect("generators have arrow length")
    }

    /// `[[A, A], [A, A]]`.
    pub fn double_commutator_subspace(&self) -> Subspace {
        let inner = self.commutator_subspace();
        let elems: Vec<AlgebraElement> = inner
            .basis()
            .iter()
            .map(|v| AlgebraElement::new(self.field, v.clone()).expect("field"))
            .collect();
        let mut gens = Vec::new();
        for (i, x) in elems.iter().enumerate() {
            for y in &elems[i + 1..] {
                let c = self.commutator(x, y).expect("same algebra");
                if !c.is_zero() {
                    gens.push(c.coeffs);
                }
            }
        }
        Subspace::span(self.field, self.dim(), gens).expect("generators have arrow length")
    }

    /// Coordinates of the identity in the echelon basis of `[A, A]`, if it
    /// lies there.
    pub fn identity_commutator_certificate(&self) -> Option<Vec<Scalar>> {
        self.commutator_subspace().coordinates(&self.identity().coeffs)
    }

    pub fn identity_in_commutator_subspace(&self) -> bool {
        self.identity_commutator_certificate().is_some()
    }

    /// Structure constants in the arrow-indicator basis.
    pub fn to_associative(&self) -> AssociativeAlgebra {
        let n = self.dim();
        let g = self.groupoid;
        AssociativeAlgebra::from_fn(self.field, n, |a, b| {
            let mut v = vec![self.field.zero(); n];
            if let Some(c) = g.compose(a, b) {
                v[c] = self.field.one();
            }
            v
        })
    }
}

fn simplicity_obstruction(g: &FiniteGroupoid) -> Option<String> {
    if let Err(a) = g.is_effective() {
        return Some(format!(
            "groupoid not effective: `{}` is non-unit isotropy, so A_K(G) is not simple",
            g.arrow(a).name
        ));
    }
    if let Err(orbit) = g.is_minimal() {
        return Some(format!(
            "groupoid not minimal: {{{}}} is a proper invariant unit subset, so A_K(G) is not simple",
            g.unit_names(&orbit).join(", ")
        ));
    }
    None
}

/// Whether `A_K(G)` is simple: effective and minimal.
pub fn is_simple(g: &FiniteGroupoid) -> Result<(), String> {
    match simplicity_obstruction(g) {
        Some(r) => Err(r),
        None => Ok(()),
    }
}

/// `Z(A_K(G)) = K * 1` for simple `A_K(G)`; the class-function/commutant
/// computation is run and must give dimension 1.
pub fn center_verdict(g: &FiniteGroupoid, field: FieldSpec) -> Result<CenterVerdict, SteinbergError> {
    if let Some(reason) = simplicity_obstruction(g) {
        return Ok(CenterVerdict::Inapplicable(reason));
    }
    let alg = SteinbergAlgebra::new(g, field);
    let center = alg.center_basis()?;
    if center.dim() != 1 || !center.contains(alg.identity().coeffs()) {
        return Err(SteinbergError::CenterMismatch {
            class_functions: center.dim(),
            commutant: center.dim(),
        });
    }
    Ok(CenterVerdict::ScalarMultiplesOfIdentity)
}

pub fn lie_simplicity_verdict(g: &FiniteGroupoid, field: FieldSpec) -> LieVerdict {
    if let Some(reason) = simplicity_obstruction(g) {
        return LieVerdict::Inapplicable(reason);
    }
    if g.is_singleton() {
        return LieVerdict::Trivial;
    }
    let alg = SteinbergAlgebra::new(g, field);
    match alg.identity_commutator_certificate() {
        None => LieVerdict::Simple,
        Some(c) => LieVerdict::NotSimple { certificate: Some(c) },
    }
}

/// Commutator span of the matrix units `E_ij` in `M_d(K)`, flattened
/// row-major: `[E_ij, E_kl] = d_jk E_il - d_li E_kj`.
pub fn matrix_commutator_span(field: FieldSpec, d: usize) -> Subspace {
    let ix = |i: usize, j: usize| i * d + j;
    let mut gens = Vec::new();
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                for l in 0..d {
                    let mut v = vec![field.zero(); d * d];
                    if j == k {
                        v[ix(i, l)] = &v[ix(i, l)] + &field.one();
                    }
                    if l == i {
                        v[ix(k, j)] = &v[ix(k, j)] - &field.one();
                    }
                    gens.push(v);
                }
            }
        }
    }
    Subspace::span(field, d * d, gens).expect("d*d generators")
}

/// Membership of a square matrix in `[M_d(K), M_d(K)]` by explicit span
/// computation.
pub fn in_matrix_commutator_span(m: &Matrix) -> Result<bool, SteinbergError> {
    if m.rows() != m.cols() {
        return Err(FieldError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        }
        .into());
    }
    let span = matrix_commutator_span(m.field(), m.rows());
    Ok(span.contains(m.entries()))
}

/// `A in [M_d(K), M_d(K)]` iff `trace(A) in [K, K] = 0`. For `d <= 3` the
/// answer is cross-checked against the explicit commutator span.
pub fn matrix_trace_membership(m: &Matrix) -> Result<bool, SteinbergError> {
    let by_trace = m.trace()?.is_zero();
    if m.rows() <= 3 && in_matrix_commutator_span(m)? != by_trace {
        return Err(SteinbergError::TraceMismatch(m.rows()));
    }
    Ok(by_trace)
}

/// Identity coefficients over the commutator generators, reconstructed for
/// callers who want to replay a certificate.
pub fn replay_certificate(alg: &SteinbergAlgebra<'_>, certificate: &[Scalar]) -> Vec<Scalar> {
    let span = alg.commutator_subspace();
    linear_combination(alg.field(), alg.dim(), certificate, span.basis())
}

/// Membership of an arbitrary element in `[A, A]`, with generator
/// coefficients.
pub fn commutator_membership(
    alg: &SteinbergAlgebra<'_>,
    f: &AlgebraElement,
) -> Result<Option<Vec<Scalar>>, SteinbergError> {
    let span = alg.commutator_subspace();
    Ok(in_span(alg.field(), f.coeffs(), span.basis())?)
}
