//! Named example graphs, groupoids and self-similar actions used by the
//! tests, the acceptance suite and the CLI oracle grid.

use crate::graph::Graph;
use crate::groupoid::FiniteGroupoid;
use crate::selfsimilar::{Group, SelfSimilarAction};

fn graph(vertices: &[&str], edges: &[(&str, &str, &str)], bundles: &[(&str, &str)]) -> Graph {
    Graph::new(
        vertices.iter().map(|v| v.to_string()).collect(),
        edges
            .iter()
            .map(|(n, s, r)| (n.to_string(), s.to_string(), r.to_string()))
            .collect(),
        bundles.iter().map(|(s, r)| (s.to_string(), r.to_string())).collect(),
    )
    .expect("fixture graph")
}

/// `R_n`: one vertex `v` with loops `e1 .. en`.
pub fn rose(n: usize) -> Graph {
    let names: Vec<String> = (1..=n).map(|i| format!("e{i}")).collect();
    let edges: Vec<(&str, &str, &str)> = names.iter().map(|e| (e.as_str(), "v", "v")).collect();
    graph(&["v"], &edges, &[])
}

/// One vertex with infinitely many loops.
pub fn rose_infinite() -> Graph {
    graph(&["v"], &[], &[("v", "v")])
}

/// `u --e--> v`.
pub fn line2() -> Graph {
    graph(&["u", "v"], &[("e", "u", "v")], &[])
}

/// `u --e--> v --f--> w`.
pub fn line3() -> Graph {
    graph(&["u", "v", "w"], &[("e", "u", "v"), ("f", "v", "w")], &[])
}

/// Two vertices, no edges.
pub fn isolated_pair() -> Graph {
    graph(&["u", "w"], &[], &[])
}

/// One vertex, no edges.
pub fn point() -> Graph {
    graph(&["v"], &[], &[])
}

/// Loop `a` at `v`, `f: v -> w`, `b: w -> v`.
pub fn e3() -> Graph {
    graph(&["v", "w"], &[("a", "v", "v"), ("f", "v", "w"), ("b", "w", "v")], &[])
}

/// Two disjoint single-loop components at `u` and `w`.
pub fn two_loops() -> Graph {
    graph(&["u", "w"], &[("c", "u", "u"), ("d", "w", "w")], &[])
}

/// `R_2` with loops named `a`, `b`.
pub fn rose2_ab() -> Graph {
    graph(&["v"], &[("a", "v", "v"), ("b", "v", "v")], &[])
}

pub fn graph_corpus() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = (1..=4).map(|n| (format!("R_{n}"), rose(n))).collect();
    out.extend([
        ("R_inf".to_string(), rose_infinite()),
        ("E2".to_string(), line2()),
        ("E3_line".to_string(), line3()),
        ("E3".to_string(), e3()),
        ("two_loops".to_string(), two_loops()),
        ("isolated_pair".to_string(), isolated_pair()),
        ("point".to_string(), point()),
        (
            "cycle3".to_string(),
            graph(
                &["x", "y", "z"],
                &[("p", "x", "y"), ("q", "y", "z"), ("r", "z", "x")],
                &[],
            ),
        ),
        (
            "cycle3_entry".to_string(),
            graph(
                &["x", "y", "z"],
                &[("p", "x", "y"), ("q", "y", "z"), ("r", "z", "x"), ("t", "y", "y")],
                &[],
            ),
        ),
        (
            "cycle_to_sink".to_string(),
            graph(
                &["x", "y", "z"],
                &[("p", "x", "y"), ("q", "y", "x"), ("t", "y", "z")],
                &[],
            ),
        ),
        (
            "double_edge".to_string(),
            graph(&["u", "v"], &[("e", "u", "v"), ("f", "u", "v"), ("g", "v", "u")], &[]),
        ),
        (
            "complete3".to_string(),
            graph(
                &["x", "y", "z"],
                &[
                    ("xx", "x", "x"),
                    ("xy", "x", "y"),
                    ("yz", "y", "z"),
                    ("zx", "z", "x"),
                    ("yy", "y", "y"),
                ],
                &[],
            ),
        ),
        (
            "bundle_into_sink".to_string(),
            graph(&["u", "v"], &[("e", "u", "u")], &[("u", "v")]),
        ),
        (
            "bundle_cycle".to_string(),
            graph(&["u", "v"], &[("e", "u", "v")], &[("v", "u")]),
        ),
        (
            "star4".to_string(),
            graph(
                &["c", "l1", "l2", "l3"],
                &[("a1", "c", "l1"), ("a2", "c", "l2"), ("a3", "c", "l3")],
                &[],
            ),
        ),
        (
            "hs_chain".to_string(),
            graph(
                &["a", "b", "c", "d"],
                &[
                    ("ab", "a", "b"),
                    ("bb", "b", "b"),
                    ("bc", "b", "c"),
                    ("cd", "c", "d"),
                    ("dd", "d", "d"),
                    ("dc", "d", "c"),
                ],
                &[],
            ),
        ),
        (
            "ring8".to_string(),
            graph(
                &["r0", "r1", "r2", "r3", "r4", "r5", "r6", "r7"],
                &[
                    ("t0", "r0", "r1"),
                    ("t1", "r1", "r2"),
                    ("t2", "r2", "r3"),
                    ("t3", "r3", "r4"),
                    ("t4", "r4", "r5"),
                    ("t5", "r5", "r6"),
                    ("t6", "r6", "r7"),
                    ("t7", "r7", "r0"),
                    ("c0", "r0", "r4"),
                    ("c1", "r2", "r6"),
                ],
                &[],
            ),
        ),
    ]);
    out
}

/// Graphs with no sources and no infinite bundles, the ones a self-similar
/// action can live on.
pub fn action_graph_corpus() -> Vec<(String, Graph)> {
    graph_corpus()
        .into_iter()
        .filter(|(_, g)| g.has_no_sources() && !g.has_infinite_bundles())
        .collect()
}

/// Transformation groupoid of `Z/k` acting on `points` points by `x -> x + g`
/// modulo `orbit`, with points past `orbit` fixed.
fn rotation_groupoid(k: usize, points: usize, orbit: usize) -> FiniteGroupoid {
    let mul: Vec<Vec<usize>> = (0..k).map(|a| (0..k).map(|b| (a + b) % k).collect()).collect();
    let act: Vec<Vec<usize>> = (0..k)
        .map(|g| {
            (0..points)
                .map(|x| if x < orbit { (x + g) % orbit } else { x })
                .collect()
        })
        .collect();
    FiniteGroupoid::transformation(&mul, 0, &act, points).expect("transformation groupoid")
}

pub fn groupoid_corpus() -> Vec<(String, FiniteGroupoid)> {
    let mut out: Vec<(String, FiniteGroupoid)> = (1..=4).map(|n| (format!("P_{n}"), FiniteGroupoid::pair(n))).collect();
    out.extend([
        ("Z2".to_string(), FiniteGroupoid::cyclic(2)),
        ("Z3".to_string(), FiniteGroupoid::cyclic(3)),
        ("Z3_on_Z3".to_string(), rotation_groupoid(3, 3, 3)),
        ("Z4_on_Z4".to_string(), rotation_groupoid(4, 4, 4)),
        ("Z2_on_3_points".to_string(), rotation_groupoid(2, 3, 2)),
        (
            "P_2xP_2".to_string(),
            FiniteGroupoid::pair(2).product(&FiniteGroupoid::pair(2)),
        ),
        (
            "P_2xZ2".to_string(),
            FiniteGroupoid::pair(2).product(&FiniteGroupoid::cyclic(2)),
        ),
        (
            "P_2+P_1".to_string(),
            FiniteGroupoid::pair(2).disjoint_union(&FiniteGroupoid::pair(1)),
        ),
        (
            "P_2+P_2".to_string(),
            FiniteGroupoid::pair(2).disjoint_union(&FiniteGroupoid::pair(2)),
        ),
    ]);
    out
}

pub fn effective_minimal_groupoids() -> Vec<(String, FiniteGroupoid)> {
    groupoid_corpus()
        .into_iter()
        .filter(|(_, g)| g.is_effective().is_ok() && g.is_minimal().is_ok())
        .collect()
}

fn z2_action(edge_action: Vec<Vec<usize>>, cocycle: Vec<Vec<usize>>) -> SelfSimilarAction {
    SelfSimilarAction::new(
        rose2_ab(),
        Group::cyclic(2),
        vec![vec![0], vec![0]],
        edge_action,
        cocycle,
    )
    .expect("fixture action")
}

/// `Z/2` on `R_2`: `s` swaps `a` and `b`, trivial cocycle.
pub fn swap() -> SelfSimilarAction {
    z2_action(vec![vec![0, 1], vec![1, 0]], vec![vec![0, 0], vec![0, 0]])
}

/// Trivial `Z/2` action on `R_2`, trivial cocycle.
pub fn triv2() -> SelfSimilarAction {
    z2_action(vec![vec![0, 1], vec![0, 1]], vec![vec![0, 0], vec![0, 0]])
}

/// `s` fixes `a` and `b`; `phi(s, a) = s`, `phi(s, b) = 1`.
pub fn nhaus() -> SelfSimilarAction {
    z2_action(vec![vec![0, 1], vec![0, 1]], vec![vec![0, 0], vec![1, 0]])
}

/// `Z/2` swapping the components of [`two_loops`]; the cocycle must carry
/// `s` along so that `phi(s, e)` still moves the vertices.
pub fn swap_components() -> SelfSimilarAction {
    SelfSimilarAction::new(
        two_loops(),
        Group::cyclic(2),
        vec![vec![0, 1], vec![1, 0]],
        vec![vec![0, 1], vec![1, 0]],
        vec![vec![0, 0], vec![1, 1]],
    )
    .expect("fixture action")
}

/// `Z/3` rotating the loops of `R_3`, trivial cocycle.
pub fn rotate3() -> SelfSimilarAction {
    SelfSimilarAction::new(
        rose(3),
        Group::cyclic(3),
        vec![vec![0]; 3],
        (0..3).map(|g| (0..3).map(|e| (e + g) % 3).collect()).collect(),
        vec![vec![0; 3]; 3],
    )
    .expect("fixture action")
}

/// Every fixture action, the trivial-group actions on
/// [`action_graph_corpus`] included.
pub fn action_corpus() -> Vec<(String, SelfSimilarAction)> {
    let mut out = vec![
        ("SWAP".to_string(), swap()),
        ("TRIV2".to_string(), triv2()),
        ("NHAUS".to_string(), nhaus()),
        ("swap_components".to_string(), swap_components()),
        ("rotate3".to_string(), rotate3()),
    ];
    out.extend(action_graph_corpus().into_iter().map(|(name, g)| {
        (
            format!("trivial on {name}"),
            SelfSimilarAction::trivial(g).expect("trivial action"),
        )
    }));
    out
}
