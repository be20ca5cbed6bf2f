//! B-vectors, commutator membership of vertex combinations, and the Lie
//! simplicity and center verdicts for Leavitt path algebras with finitely
//! many vertices.
//!
//! For a regular vertex `v_i`, `B_i = (a_ij)_j - e_i` where `a_ij` counts
//! edges with range `v_i` and source `v_j`; for any other vertex `B_i = 0`.
//! A combination `sum k_i v_i` lies in `[L, L]` iff `(k_i)` is in the span of
//! the B-vectors, so for a nontrivial simple `L_K(E)` the Lie algebra
//! `[L, L]` is simple iff the all-ones vector is not in that span.
//!
//! Graphs with infinitely many vertices are not representable here. For
//! those the Lie algebra of a simple `L_K(E)` is always simple and the
//! center is zero, with no computation needed.

use crate::field::{in_span, FieldError, FieldSpec, Scalar};
use crate::graph::Graph;
use crate::verdict::{CenterVerdict, LieVerdict};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BVector {
    pub owner: usize,
    pub entries: Vec<Scalar>,
}

/// Integer rows `(a_ij) - e_i` for regular vertices, `None` otherwise.
/// Computed once and reduced into each field.
pub fn b_vector_integers(g: &Graph) -> Vec<Option<Vec<i64>>> {
    let n = g.vertex_count();
    (0..n)
        .map(|i| {
            if !g.is_regular(i) {
                return None;
            }
            let mut row = vec![0i64; n];
            for &e in g.in_edges(i) {
                row[g.edge(e).src] += 1;
            }
            row[i] -= 1;
            Some(row)
        })
        .collect()
}

pub fn b_vectors(g: &Graph, field: FieldSpec) -> Vec<BVector> {
    let n = g.vertex_count();
    b_vector_integers(g)
        .into_iter()
        .enumerate()
        .map(|(owner, row)| BVector {
            owner,
            entries: match row {
                Some(r) => r.iter().map(|&x| field.from_i64(x)).collect(),
                None => vec![field.zero(); n],
            },
        })
        .collect()
}

/// Whether `sum coeffs[i] v_i` lies in `[L_K(E), L_K(E)]`, with span
/// coefficients over the B-vectors as certificate.
pub fn vertex_combo_in_commutator(
    g: &Graph,
    field: FieldSpec,
    coeffs: &[Scalar],
) -> Result<Option<Vec<Scalar>>, FieldError> {
    if coeffs.len() != g.vertex_count() {
        return Err(FieldError::DimensionMismatch {
            expected: g.vertex_count(),
            found: coeffs.len(),
        });
    }
    let basis: Vec<Vec<Scalar>> = b_vectors(g, field).into_iter().map(|b| b.entries).collect();
    in_span(field, coeffs, &basis)
}

/// `L_K(E) = K`: one vertex and no edges.
pub fn is_trivial(g: &Graph) -> bool {
    g.vertex_count() == 1 && g.edge_count() == 0 && !g.has_infinite_bundles()
}

pub fn lpa_lie_simple(g: &Graph, field: FieldSpec) -> LieVerdict {
    let simplicity = g.lpa_is_simple();
    if !simplicity.is_simple() {
        return LieVerdict::Inapplicable(format!("L_K(E) is {}", simplicity.describe(g)));
    }
    if is_trivial(g) {
        return LieVerdict::Trivial;
    }
    let ones = vec![field.one(); g.vertex_count()];
    match vertex_combo_in_commutator(g, field, &ones).expect("dimensions agree") {
        None => LieVerdict::Simple,
        Some(c) => LieVerdict::NotSimple { certificate: Some(c) },
    }
}

pub fn lpa_center(g: &Graph) -> CenterVerdict {
    let simplicity = g.lpa_is_simple();
    if !simplicity.is_simple() {
        return CenterVerdict::Inapplicable(format!("L_K(E) is {}", simplicity.describe(g)));
    }
    // Every representable graph has finitely many vertices, so L_K(E) is
    // unital and central.
    CenterVerdict::ScalarMultiplesOfIdentity
}
