//! Directed graphs with source/range maps, and the simplicity criterion for
//! their Leavitt path algebras.
//!
//! Conventions follow the Raeburn orientation: `r^{-1}(v)` is the set of
//! edges whose *range* is `v`, and a path `e_1 ... e_n` satisfies
//! `s(e_i) = r(e_{i+1})`, so it starts at `s(e_n)` and ends at `r(e_1)`.
//! Hereditary sets are closed under `r(e) in H => s(e) in H`.
//!
//! Infinitely many parallel edges between two vertices are recorded as an
//! *infinite bundle*. A vertex targeted by a bundle is an infinite receiver:
//! it is never regular, so saturation never fires there, and it always has
//! more than one incoming edge.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph has no vertices")]
    EmptyVertexList,
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate edge name `{0}`")]
    DuplicateEdge(String),
    #[error("edge `{edge}` references undeclared vertex `{vertex}`")]
    UnknownEndpoint { edge: String, vertex: String },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("malformed graph document: {0}")]
    Malformed(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeDoc {
    pub name: String,
    pub src: String,
    pub rng: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BundleDoc {
    pub src: String,
    pub rng: String,
}

/// On-disk form of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDoc {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub edges: Vec<EdgeDoc>,
    #[serde(default)]
    pub infinite_bundles: Vec<BundleDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Edge {
    pub name: String,
    pub src: usize,
    pub rng: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VertexClass {
    Source,
    Regular,
    InfiniteReceiver,
}

/// A set of vertex indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSubset(pub BTreeSet<usize>);

impl VertexSubset {
    pub fn empty() -> Self {
        VertexSubset(BTreeSet::new())
    }

    pub fn singleton(v: usize) -> Self {
        VertexSubset(BTreeSet::from([v]))
    }

    pub fn full(n: usize) -> Self {
        VertexSubset((0..n).collect())
    }

    pub fn from_mask(mask: u64, n: usize) -> Self {
        VertexSubset((0..n).filter(|i| mask >> i & 1 == 1).collect())
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_subset(&self, other: &VertexSubset) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }
}

/// Number of edges into a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InDegree {
    Finite(usize),
    Infinite,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    infinite_bundles: Vec<(usize, usize)>,
    vertex_index: HashMap<String, usize>,
    in_edges: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from names. Vertex order is kept as given; it is the
    /// indexing contract for B-vectors and certificates.
    pub fn new(
        vertices: Vec<String>,
        edges: Vec<(String, String, String)>,
        infinite_bundles: Vec<(String, String)>,
    ) -> Result<Self, GraphError> {
        Graph::from_doc(&GraphDoc {
            vertices,
            edges: edges
                .into_iter()
                .map(|(name, src, rng)| EdgeDoc { name, src, rng })
                .collect(),
            infinite_bundles: infinite_bundles
                .into_iter()
                .map(|(src, rng)| BundleDoc { src, rng })
                .collect(),
        })
    }

    pub fn from_doc(doc: &GraphDoc) -> Result<Self, GraphError> {
        if doc.vertices.is_empty() {
            return Err(GraphError::EmptyVertexList);
        }
        let mut vertex_index = HashMap::new();
        for (i, v) in doc.vertices.iter().enumerate() {
            if vertex_index.insert(v.clone(), i).is_some() {
                return Err(GraphError::DuplicateVertex(v.clone()));
            }
        }
        let lookup = |edge: &str, v: &str| {
            vertex_index.get(v).copied().ok_or_else(|| GraphError::UnknownEndpoint {
                edge: edge.to_string(),
                vertex: v.to_string(),
            })
        };
        let mut names = BTreeSet::new();
        let mut edges = Vec::with_capacity(doc.edges.len());
        for e in &doc.edges {
            if !names.insert(e.name.clone()) {
                return Err(GraphError::DuplicateEdge(e.name.clone()));
            }
            edges.push(Edge {
                name: e.name.clone(),
                src: lookup(&e.name, &e.src)?,
                rng: lookup(&e.name, &e.rng)?,
            });
        }
        let mut bundles = BTreeSet::new();
        for b in &doc.infinite_bundles {
            let label = format!("bundle {}->{}", b.src, b.rng);
            bundles.insert((lookup(&label, &b.src)?, lookup(&label, &b.rng)?));
        }
        let mut in_edges = vec![Vec::new(); doc.vertices.len()];
        for (i, e) in edges.iter().enumerate() {
            in_edges[e.rng].push(i);
        }
        Ok(Graph {
            vertices: doc.vertices.clone(),
            edges,
            infinite_bundles: bundles.into_iter().collect(),
            vertex_index,
            in_edges,
        })
    }

    pub fn to_doc(&self) -> GraphDoc {
        GraphDoc {
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeDoc {
                    name: e.name.clone(),
                    src: self.vertices[e.src].clone(),
                    rng: self.vertices[e.rng].clone(),
                })
                .collect(),
            infinite_bundles: self
                .infinite_bundles
                .iter()
                .map(|&(s, r)| BundleDoc {
                    src: self.vertices[s].clone(),
                    rng: self.vertices[r].clone(),
                })
                .collect(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &Edge {
        &self.edges[i]
    }

    pub fn infinite_bundles(&self) -> &[(usize, usize)] {
        &self.infinite_bundles
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_id(&self, name: &str) -> Result<usize, GraphError> {
        self.vertex_index
            .get(name)
            .copied()
            .ok_or_else(|| GraphError::UnknownVertex(name.to_string()))
    }

    pub fn edge_id(&self, name: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.name == name)
    }

    /// Finite edges with range `v`.
    pub fn in_edges(&self, v: usize) -> &[usize] {
        &self.in_edges[v]
    }

    pub fn receives_bundle(&self, v: usize) -> bool {
        self.infinite_bundles.iter().any(|&(_, r)| r == v)
    }

    pub fn in_degree(&self, v: usize) -> InDegree {
        if self.receives_bundle(v) {
            InDegree::Infinite
        } else {
            InDegree::Finite(self.in_edges[v].len())
        }
    }

    pub fn has_infinite_bundles(&self) -> bool {
        !self.infinite_bundles.is_empty()
    }

    /// Vertices `u` with some (finite or infinite) edge `u -> v`, i.e. the
    /// sources of `r^{-1}(v)`.
    pub fn sources_into(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.in_edges[v].iter().map(|&e| self.edges[e].src).chain(
            self.infinite_bundles
                .iter()
                .filter(move |&&(_, r)| r == v)
                .map(|&(s, _)| s),
        )
    }

    pub fn classify(&self, v: usize) -> VertexClass {
        match self.in_degree(v) {
            InDegree::Infinite => VertexClass::InfiniteReceiver,
            InDegree::Finite(0) => VertexClass::Source,
            InDegree::Finite(_) => VertexClass::Regular,
        }
    }

    pub fn classify_vertex(&self, name: &str) -> Result<VertexClass, GraphError> {
        Ok(self.classify(self.vertex_id(name)?))
    }

    pub fn is_regular(&self, v: usize) -> bool {
        self.classify(v) == VertexClass::Regular
    }

    /// Whether every vertex receives at least one edge (no sources).
    pub fn has_no_sources(&self) -> bool {
        (0..self.vertex_count()).all(|v| self.classify(v) != VertexClass::Source)
    }

    /// Forward adjacency in the `s -> r` direction: `v -> r(e)` for edges
    /// with `s(e) = v`, bundles included.
    pub fn successors(&self) -> Vec<BTreeSet<usize>> {
        let mut out = vec![BTreeSet::new(); self.vertex_count()];
        for e in &self.edges {
            out[e.src].insert(e.rng);
        }
        for &(s, r) in &self.infinite_bundles {
            out[s].insert(r);
        }
        out
    }

    pub fn is_hereditary(&self, h: &VertexSubset) -> bool {
        self.edges
            .iter()
            .map(|e| (e.src, e.rng))
            .chain(self.infinite_bundles.iter().copied())
            .all(|(s, r)| !h.contains(r) || h.contains(s))
    }

    pub fn is_saturated(&self, h: &VertexSubset) -> bool {
        (0..self.vertex_count())
            .all(|v| h.contains(v) || !self.is_regular(v) || !self.sources_into(v).all(|u| h.contains(u)))
    }

    /// Smallest hereditary and saturated superset of `h`.
    pub fn hs_closure(&self, h: &VertexSubset) -> VertexSubset {
        let n = self.vertex_count();
        let mut member = vec![false; n];
        for v in h.iter() {
            member[v] = true;
        }
        loop {
            let mut changed = false;
            for e in &self.edges {
                if member[e.rng] && !member[e.src] {
                    member[e.src] = true;
                    changed = true;
                }
            }
            for &(s, r) in &self.infinite_bundles {
                if member[r] && !member[s] {
                    member[s] = true;
                    changed = true;
                }
            }
            for v in 0..n {
                if !member[v] && self.is_regular(v) && self.sources_into(v).all(|u| member[u]) {
                    member[v] = true;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        VertexSubset((0..n).filter(|&v| member[v]).collect())
    }

    /// `Ok(())` when the only hereditary saturated subsets are `{}` and
    /// `E^0`; otherwise a proper nonempty one.
    pub fn only_trivial_hs(&self) -> Result<(), VertexSubset> {
        let n = self.vertex_count();
        for v in 0..n {
            let c = self.hs_closure(&VertexSubset::singleton(v));
            if c.len() != n {
                return Err(c);
            }
        }
        Ok(())
    }

    /// `Ok(())` when every cycle has an entry; otherwise a cycle with none,
    /// as edge indices `e_1 ... e_n` with `s(e_i) = r(e_{i+1})`.
    ///
    /// A cycle has no entry exactly when each of its vertices has in-degree
    /// one, so the search runs on the functional graph `v -> s(e_v)` over
    /// the in-degree-one vertices.
    pub fn every_cycle_has_entry(&self) -> Result<(), Vec<usize>> {
        let n = self.vertex_count();
        let unique_in = |v: usize| match self.in_degree(v) {
            InDegree::Finite(1) => Some(self.in_edges[v][0]),
            _ => None,
        };
        // 0 = unvisited, 1 = on current walk, 2 = done
        let mut state = vec![0u8; n];
        for start in 0..n {
            if state[start] != 0 {
                continue;
            }
            let mut walk = Vec::new();
            let mut v = start;
            loop {
                if state[v] == 2 {
                    break;
                }
                if state[v] == 1 {
                    let pos = walk.iter().position(|&(w, _)| w == v).expect("on walk");
                    return Err(walk[pos..].iter().map(|&(_, e)| e).collect());
                }
                let Some(e) = unique_in(v) else {
                    break;
                };
                state[v] = 1;
                walk.push((v, e));
                v = self.edges[e].src;
            }
            for (w, _) in walk {
                state[w] = 2;
            }
            state[start] = 2;
        }
        Ok(())
    }

    /// Whether `path` (edge indices) is a cycle: `s(e_i) = r(e_{i+1})`,
    /// closed, with distinct sources.
    pub fn is_cycle(&self, path: &[usize]) -> bool {
        if path.is_empty() {
            return false;
        }
        let ok_links = path.windows(2).all(|w| self.edges[w[0]].src == self.edges[w[1]].rng);
        let closed = self.edges[*path.last().unwrap()].src == self.edges[path[0]].rng;
        let srcs: BTreeSet<usize> = path.iter().map(|&e| self.edges[e].src).collect();
        ok_links && closed && srcs.len() == path.len()
    }

    pub fn lpa_is_simple(&self) -> LpaSimplicity {
        if let Err(w) = self.only_trivial_hs() {
            return LpaSimplicity::NotSimple(NotSimpleReason::NontrivialHereditarySaturated(w));
        }
        if let Err(c) = self.every_cycle_has_entry() {
            return LpaSimplicity::NotSimple(NotSimpleReason::CycleWithoutEntry(c));
        }
        LpaSimplicity::Simple
    }

    pub fn edge_names(&self, path: &[usize]) -> Vec<String> {
        path.iter().map(|&e| self.edges[e].name.clone()).collect()
    }

    pub fn subset_names(&self, h: &VertexSubset) -> Vec<String> {
        h.iter().map(|v| self.vertices[v].clone()).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotSimpleReason {
    NontrivialHereditarySaturated(VertexSubset),
    CycleWithoutEntry(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpaSimplicity {
    Simple,
    NotSimple(NotSimpleReason),
}

impl LpaSimplicity {
    pub fn is_simple(&self) -> bool {
        matches!(self, LpaSimplicity::Simple)
    }

    pub fn describe(&self, g: &Graph) -> String {
        match self {
            LpaSimplicity::Simple => "simple".to_string(),
            LpaSimplicity::NotSimple(NotSimpleReason::NontrivialHereditarySaturated(h)) => format!(
                "not simple: proper nonempty hereditary saturated subset {{{}}}",
                g.subset_names(h).join(", ")
            ),
            LpaSimplicity::NotSimple(NotSimpleReason::CycleWithoutEntry(c)) => {
                format!("not simple: cycle without entry {}", g.edge_names(c).join(""))
            }
        }
    }
}
