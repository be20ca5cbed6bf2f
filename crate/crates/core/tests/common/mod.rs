//! Brute-force oracles shared by the property tests and the acceptance suite.
//! They read only raw edge lists so they share no logic with the library.

#![allow(dead_code)]

use simplie::field::{linear_combination, FieldSpec, Scalar};
use simplie::graph::Graph;

/// Whether the vertex set `mask` is hereditary and saturated, straight from
/// the definitions.
pub fn is_hs_brute(g: &Graph, mask: u64) -> bool {
    let inside = |v: usize| mask >> v & 1 == 1;
    let hereditary = g.edges().iter().all(|e| !inside(e.rng) || inside(e.src))
        && g.infinite_bundles().iter().all(|&(s, r)| !inside(r) || inside(s));
    if !hereditary {
        return false;
    }
    (0..g.vertex_count()).all(|v| {
        if inside(v) {
            return true;
        }
        let ins: Vec<_> = g.edges().iter().filter(|e| e.rng == v).collect();
        let bundle = g.infinite_bundles().iter().any(|&(_, r)| r == v);
        let regular = !ins.is_empty() && !bundle;
        !(regular && ins.iter().all(|e| inside(e.src)))
    })
}

/// All hereditary saturated subsets other than the empty and full sets.
pub fn nontrivial_hs_brute(g: &Graph) -> Vec<u64> {
    let n = g.vertex_count();
    let full = (1u64 << n) - 1;
    (1..full).filter(|&m| is_hs_brute(g, m)).collect()
}

/// Simple cycles as edge lists in walk order, each reported once from its
/// smallest vertex.
pub fn simple_cycles_brute(g: &Graph) -> Vec<Vec<usize>> {
    fn dfs(
        g: &Graph,
        start: usize,
        cur: usize,
        visited: &mut Vec<bool>,
        path: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        for (i, e) in g.edges().iter().enumerate() {
            if e.src != cur {
                continue;
            }
            if e.rng == start {
                let mut c = path.clone();
                c.push(i);
                out.push(c);
            } else if e.rng > start && !visited[e.rng] {
                visited[e.rng] = true;
                path.push(i);
                dfs(g, start, e.rng, visited, path, out);
                path.pop();
                visited[e.rng] = false;
            }
        }
    }
    let mut out = Vec::new();
    for v in 0..g.vertex_count() {
        let mut visited = vec![false; g.vertex_count()];
        visited[v] = true;
        dfs(g, v, v, &mut visited, &mut Vec::new(), &mut out);
    }
    out
}

/// A cycle has no entry when each of its vertices receives exactly its own
/// cycle edge.
pub fn cycle_has_entry_brute(g: &Graph, cycle: &[usize]) -> bool {
    cycle.iter().any(|&c| {
        let v = g.edges()[c].rng;
        g.edges().iter().filter(|e| e.rng == v).count() > 1 || g.infinite_bundles().iter().any(|&(_, r)| r == v)
    })
}

pub fn every_cycle_has_entry_brute(g: &Graph) -> bool {
    simple_cycles_brute(g).iter().all(|c| cycle_has_entry_brute(g, c))
}

/// Membership in a span by trying every coefficient vector over `F_p`.
pub fn in_span_brute(field: FieldSpec, v: &[Scalar], basis: &[Vec<Scalar>]) -> bool {
    let p = field.size().expect("finite field") as i64;
    let k = basis.len();
    let total = (p as u64).pow(k as u32);
    (0..total).any(|mut code| {
        let coeffs: Vec<Scalar> = (0..k)
            .map(|_| {
                let c = field.from_i64((code % p as u64) as i64);
                code /= p as u64;
                c
            })
            .collect();
        linear_combination(field, v.len(), &coeffs, basis) == v
    })
}

/// A graph on `n` vertices from raw `(src, rng)` pairs.
pub fn graph_from_pairs(n: usize, edges: &[(usize, usize)], bundles: &[(usize, usize)]) -> Graph {
    Graph::new(
        (0..n).map(|v| format!("v{v}")).collect(),
        edges
            .iter()
            .enumerate()
            .map(|(i, &(s, r))| (format!("e{i}"), format!("v{s}"), format!("v{r}")))
            .collect(),
        bundles
            .iter()
            .map(|&(s, r)| (format!("v{s}"), format!("v{r}")))
            .collect(),
    )
    .expect("valid graph")
}
