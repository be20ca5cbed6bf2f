//! Self-similar actions `(G, E, sigma, phi)` of a finite group on a finite
//! graph with no sources, the path action, the inverse semigroup `S_{G,E}`,
//! and the finite criteria for Hausdorffness, simplicity and the center of
//! the associated Exel-Pardo algebra.
//!
//! Paths follow the graph convention `e_1 ... e_n` with `s(e_i) = r(e_{i+1})`.
//! The group acts letter by letter from the range end:
//! `g . (e mu) = (g . e)(phi(g, e) . mu)`, and `phi(g, e mu) = phi(phi(g, e), mu)`.
//! On vertices `phi(g, v) = g`.
//!
//! Strongly fixed paths are read off a restriction automaton whose states
//! are pairs `(h, w)`: from `(h, w)` an edge `e` into `w` with `h . e = e`
//! moves to `(phi(h, e), s(e))`. There are at most `|G| |E^0|` states, so
//! every question below is a finite graph search.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::FieldSpec;
use crate::graph::{Graph, GraphDoc, GraphError, VertexClass};
use crate::lpa::lpa_lie_simple;
use crate::verdict::{CenterVerdict, LieVerdict};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SelfSimilarError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("vertex `{0}` receives no edges; the graph must have no sources")]
    HasSources(String),
    #[error("infinite edge bundles are not supported for self-similar actions")]
    InfiniteBundles,
    #[error("group table invalid: {0}")]
    Group(String),
    #[error("unknown group element `{0}`")]
    UnknownElement(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("cocycle key `{0}` is not of the form (g,e)")]
    BadCocycleKey(String),
    #[error("{kind} action of `{g}` is not a permutation")]
    NotPermutation { g: String, kind: &'static str },
    #[error("{kind} action is not a homomorphism at ({g}, {h})")]
    NotHomomorphism { g: String, h: String, kind: &'static str },
    #[error("action of `{g}` does not commute with {map} at edge `{e}`")]
    NotGraphMap { g: String, e: String, map: &'static str },
    #[error("cocycle law phi(gh, x) = phi(g, h.x) phi(h, x) fails at (g, h, x) = ({g}, {h}, {x})")]
    CocycleLaw { g: String, h: String, x: String },
    #[error("phi(g, e) . v = g . v fails at (g, e, v) = ({g}, {e}, {v})")]
    Compatibility { g: String, e: String, v: String },
    #[error("malformed path: {0}")]
    MalformedPath(String),
    #[error("malformed triple: {0}")]
    MalformedTriple(String),
    #[error("action is not Hausdorff: infinitely many minimal strongly fixed paths for `{g}` at `{v}`")]
    NonHausdorff { g: String, v: String },
}

/// A finite group by multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Group {
    elements: Vec<String>,
    mul: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

impl Group {
    pub fn new(
        elements: Vec<String>,
        mul: impl Fn(usize, usize) -> usize,
        identity: usize,
    ) -> Result<Self, SelfSimilarError> {
        let n = elements.len();
        if n == 0 || identity >= n {
            return Err(SelfSimilarError::Group("empty group or identity out of range".into()));
        }
        let table: Vec<usize> = (0..n * n).map(|k| mul(k / n, k % n)).collect();
        if table.iter().any(|&x| x >= n) {
            return Err(SelfSimilarError::Group("product out of range".into()));
        }
        let m = |a: usize, b: usize| table[a * n + b];
        for a in 0..n {
            if m(identity, a) != a || m(a, identity) != a {
                return Err(SelfSimilarError::Group(format!(
                    "`{}` is not a two-sided identity for `{}`",
                    elements[identity], elements[a]
                )));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        return Err(SelfSimilarError::Group(format!(
                            "not associative at ({}, {}, {})",
                            elements[a], elements[b], elements[c]
                        )));
                    }
                }
            }
        }
        let mut inverse = Vec::with_capacity(n);
        for (a, name) in elements.iter().enumerate() {
            match (0..n).find(|&b| m(a, b) == identity && m(b, a) == identity) {
                Some(b) => inverse.push(b),
                None => {
                    return Err(SelfSimilarError::Group(format!("`{name}` has no inverse")));
                }
            }
        }
        Ok(Group {
            elements,
            mul: table,
            identity,
            inverse,
        })
    }

    pub fn trivial() -> Self {
        Group::new(vec!["1".into()], |_, _| 0, 0).expect("trivial group")
    }

    /// `Z/n` with elements `1, s, s2, ...`.
    pub fn cyclic(n: usize) -> Self {
        let names = (0..n)
            .map(|k| match k {
                0 => "1".to_string(),
                1 => "s".to_string(),
                _ => format!("s{k}"),
            })
            .collect();
        Group::new(names, |a, b| (a + b) % n, 0).expect("cyclic group")
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn name(&self, g: usize) -> &str {
        &self.elements[g]
    }

    pub fn id(&self, name: &str) -> Result<usize, SelfSimilarError> {
        self.elements
            .iter()
            .position(|x| x == name)
            .ok_or_else(|| SelfSimilarError::UnknownElement(name.to_string()))
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order() + b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDoc {
    pub elements: Vec<String>,
    pub mul: Vec<Vec<String>>,
    pub identity: String,
}

/// `{"graph", "group", "vertex_action", "edge_action", "cocycle"}`. Missing
/// permutation entries and cocycle values default to the identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionDoc {
    pub graph: GraphDoc,
    pub group: GroupDoc,
    #[serde(default)]
    pub vertex_action: BTreeMap<String, BTreeMap<String, String>>,
    #[serde(default)]
    pub edge_action: BTreeMap<String, BTreeMap<String, String>>,
    #[serde(default)]
    pub cocycle: BTreeMap<String, String>,
}

/// A finite path `e_1 ... e_n` ending at `range = r(e_1)`; a vertex when
/// `edges` is empty.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    pub range: usize,
    pub edges: Vec<usize>,
}

impl Path {
    pub fn vertex(v: usize) -> Self {
        Path {
            range: v,
            edges: Vec::new(),
        }
    }

    pub fn from_edges(g: &Graph, edges: Vec<usize>) -> Result<Self, SelfSimilarError> {
        let Some(&first) = edges.first() else {
            return Err(SelfSimilarError::MalformedPath("empty edge list".into()));
        };
        if edges.iter().any(|&e| e >= g.edge_count()) {
            return Err(SelfSimilarError::MalformedPath("edge index out of range".into()));
        }
        for w in edges.windows(2) {
            if g.edge(w[0]).src != g.edge(w[1]).rng {
                return Err(SelfSimilarError::MalformedPath(format!(
                    "s({}) != r({})",
                    g.edge(w[0]).name,
                    g.edge(w[1]).name
                )));
            }
        }
        Ok(Path {
            range: g.edge(first).rng,
            edges,
        })
    }

    pub fn from_names(g: &Graph, names: &[&str]) -> Result<Self, SelfSimilarError> {
        let edges = names
            .iter()
            .map(|n| g.edge_id(n).ok_or_else(|| SelfSimilarError::UnknownEdge(n.to_string())))
            .collect::<Result<_, _>>()?;
        Path::from_edges(g, edges)
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn source(&self, g: &Graph) -> usize {
        self.edges.last().map_or(self.range, |&e| g.edge(e).src)
    }

    /// `self` followed by `rest`; needs `s(self) = r(rest)`.
    pub fn concat(&self, g: &Graph, rest: &Path) -> Option<Path> {
        if self.source(g) != rest.range {
            return None;
        }
        let mut edges = self.edges.clone();
        edges.extend(&rest.edges);
        Some(Path {
            range: self.range,
            edges,
        })
    }

    /// `rest` with `self = prefix rest`.
    pub fn strip_prefix(&self, g: &Graph, prefix: &Path) -> Option<Path> {
        if prefix.range != self.range || !self.edges.starts_with(&prefix.edges) {
            return None;
        }
        Some(Path {
            range: prefix.source(g),
            edges: self.edges[prefix.len()..].to_vec(),
        })
    }

    pub fn describe(&self, g: &Graph) -> String {
        if self.edges.is_empty() {
            g.vertex_name(self.range).to_string()
        } else {
            g.edge_names(&self.edges).join("")
        }
    }

    pub fn names(&self, g: &Graph) -> Vec<String> {
        if self.edges.is_empty() {
            vec![g.vertex_name(self.range).to_string()]
        } else {
            g.edge_names(&self.edges)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelfSimilarAction {
    graph: Graph,
    group: Group,
    /// `vertex_action[g][v] = g . v`
    vertex_action: Vec<Vec<usize>>,
    /// `edge_action[g][e] = g . e`
    edge_action: Vec<Vec<usize>>,
    /// `cocycle[g][e] = phi(g, e)`
    cocycle: Vec<Vec<usize>>,
}

/// Element of `S_{G,E}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SgeElement {
    Zero,
    Triple { alpha: Path, g: usize, beta: Path },
}

/// `(g, gamma)` with `gamma` an entry-free G-circuit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GCircuit {
    pub g: usize,
    pub path: Path,
}

/// `stem cycle^k exit` is minimal strongly fixed for every `k >= 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PumpingWitness {
    pub range: usize,
    pub stem: Vec<usize>,
    pub cycle: Vec<usize>,
    pub exit: Vec<usize>,
}

impl PumpingWitness {
    pub fn path(&self, k: usize) -> Path {
        let mut edges = self.stem.clone();
        for _ in 0..k {
            edges.extend(&self.cycle);
        }
        edges.extend(&self.exit);
        Path {
            range: self.range,
            edges,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StronglyFixed {
    Finite(Vec<Path>),
    Infinite(PumpingWitness),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonHausdorffWitness {
    pub g: usize,
    pub v: usize,
    pub family: PumpingWitness,
}

/// Weak transitivity fails: no vertex of `cycle` reaches the orbit of `vertex`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitivityWitness {
    pub cycle: Path,
    pub vertex: usize,
}

/// States `(h, w)` reachable from a start state; `states[0]` is the start.
#[derive(Debug, Clone)]
pub struct RestrictionAutomaton {
    pub states: Vec<(usize, usize)>,
    /// Per state: `(edge, target state)` for fixed edges.
    pub transitions: Vec<Vec<(usize, usize)>>,
    /// Per state: edges into `w` moved by `h`.
    pub broken: Vec<Vec<usize>>,
    identity: usize,
}

impl RestrictionAutomaton {
    pub fn is_identity_state(&self, i: usize) -> bool {
        self.states[i].0 == self.identity
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    /// States reachable from the start without passing through an identity
    /// state (the start included when it is not one).
    fn non_identity_part(&self) -> Vec<bool> {
        let mut seen = vec![false; self.len()];
        if self.is_identity_state(0) {
            return seen;
        }
        seen[0] = true;
        let mut stack = vec![0];
        while let Some(i) = stack.pop() {
            for &(_, j) in &self.transitions[i] {
                if !self.is_identity_state(j) && !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen
    }
}

/// Finite criteria for simplicity, the center and Lie simplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpReport {
    pub hausdorff: bool,
    pub weakly_transitive: Result<(), TransitivityWitness>,
    pub entry_free_circuits: Vec<GCircuit>,
    /// `(g, v)` with `g` fixing `Z(v)` pointwise but not slack at `v`.
    pub slack_failures: Vec<(usize, usize)>,
    pub simple: bool,
    pub unital: bool,
    pub center: CenterVerdict,
    pub lie: LieVerdict,
}

fn parse_cocycle_key(key: &str) -> Option<(&str, &str)> {
    let inner = key.trim().strip_prefix('(')?.strip_suffix(')')?;
    let (g, e) = inner.split_once(',')?;
    Some((g.trim(), e.trim()))
}

fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter().all(|&x| x < p.len() && !std::mem::replace(&mut seen[x], true))
}

impl SelfSimilarAction {
    pub fn new(
        graph: Graph,
        group: Group,
        vertex_action: Vec<Vec<usize>>,
        edge_action: Vec<Vec<usize>>,
        cocycle: Vec<Vec<usize>>,
    ) -> Result<Self, SelfSimilarError> {
        let a = SelfSimilarAction {
            graph,
            group,
            vertex_action,
            edge_action,
            cocycle,
        };
        a.validate()?;
        Ok(a)
    }

    /// Trivial action of the trivial group.
    pub fn trivial(graph: Graph) -> Result<Self, SelfSimilarError> {
        let n = graph.vertex_count();
        let m = graph.edge_count();
        SelfSimilarAction::new(
            graph,
            Group::trivial(),
            vec![(0..n).collect()],
            vec![(0..m).collect()],
            vec![vec![0; m]],
        )
    }

    pub fn from_doc(doc: &ActionDoc) -> Result<Self, SelfSimilarError> {
        let graph = Graph::from_doc(&doc.graph)?;
        let names = doc.group.elements.clone();
        let index = |s: &str| -> Result<usize, SelfSimilarError> {
            names
                .iter()
                .position(|x| x == s)
                .ok_or_else(|| SelfSimilarError::UnknownElement(s.to_string()))
        };
        let n = names.len();
        if doc.group.mul.len() != n || doc.group.mul.iter().any(|r| r.len() != n) {
            return Err(SelfSimilarError::Group(format!(
                "multiplication table must be {n} x {n}"
            )));
        }
        let mut table = vec![0; n * n];
        for (i, row) in doc.group.mul.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                table[i * n + j] = index(x)?;
            }
        }
        let identity = index(&doc.group.identity)?;
        let group = Group::new(names.clone(), |a, b| table[a * n + b], identity)?;

        let vid = |s: &str| {
            graph
                .vertex_id(s)
                .map_err(|_| SelfSimilarError::UnknownVertex(s.to_string()))
        };
        let eid = |s: &str| {
            graph
                .edge_id(s)
                .ok_or_else(|| SelfSimilarError::UnknownEdge(s.to_string()))
        };

        let mut vertex_action = vec![(0..graph.vertex_count()).collect::<Vec<_>>(); n];
        for (g, perm) in &doc.vertex_action {
            let g = index(g)?;
            for (x, y) in perm {
                vertex_action[g][vid(x)?] = vid(y)?;
            }
        }
        let mut edge_action = vec![(0..graph.edge_count()).collect::<Vec<_>>(); n];
        for (g, perm) in &doc.edge_action {
            let g = index(g)?;
            for (x, y) in perm {
                edge_action[g][eid(x)?] = eid(y)?;
            }
        }
        let mut cocycle = vec![vec![identity; graph.edge_count()]; n];
        for (key, h) in &doc.cocycle {
            let (g, e) = parse_cocycle_key(key).ok_or_else(|| SelfSimilarError::BadCocycleKey(key.clone()))?;
            cocycle[index(g)?][eid(e)?] = index(h)?;
        }
        SelfSimilarAction::new(graph, group, vertex_action, edge_action, cocycle)
    }

    pub fn to_doc(&self) -> ActionDoc {
        let gname = |g: usize| self.group.name(g).to_string();
        let mut vertex_action = BTreeMap::new();
        let mut edge_action = BTreeMap::new();
        let mut cocycle = BTreeMap::new();
        for g in 0..self.group.order() {
            let vp: BTreeMap<String, String> = (0..self.graph.vertex_count())
                .filter(|&v| self.vertex_action[g][v] != v)
                .map(|v| {
                    (
                        self.graph.vertex_name(v).to_string(),
                        self.graph.vertex_name(self.vertex_action[g][v]).to_string(),
                    )
                })
                .collect();
            if !vp.is_empty() {
                vertex_action.insert(gname(g), vp);
            }
            let ep: BTreeMap<String, String> = (0..self.graph.edge_count())
                .filter(|&e| self.edge_action[g][e] != e)
                .map(|e| {
                    (
                        self.graph.edge(e).name.clone(),
                        self.graph.edge(self.edge_action[g][e]).name.clone(),
                    )
                })
                .collect();
            if !ep.is_empty() {
                edge_action.insert(gname(g), ep);
            }
            for e in 0..self.graph.edge_count() {
                if self.cocycle[g][e] != self.group.identity() {
                    cocycle.insert(
                        format!("({},{})", gname(g), self.graph.edge(e).name),
                        gname(self.cocycle[g][e]),
                    );
                }
            }
        }
        let n = self.group.order();
        ActionDoc {
            graph: self.graph.to_doc(),
            group: GroupDoc {
                elements: self.group.elements().to_vec(),
                mul: (0..n)
                    .map(|a| (0..n).map(|b| gname(self.group.mul(a, b))).collect())
                    .collect(),
                identity: gname(self.group.identity()),
            },
            vertex_action,
            edge_action,
            cocycle,
        }
    }

    /// Exhaustive check of every axiom; reports the first violation.
    pub fn validate(&self) -> Result<(), SelfSimilarError> {
        let g = &self.graph;
        let grp = &self.group;
        let n = grp.order();
        if g.has_infinite_bundles() {
            return Err(SelfSimilarError::InfiniteBundles);
        }
        if let Some(v) = (0..g.vertex_count()).find(|&v| g.classify(v) == VertexClass::Source) {
            return Err(SelfSimilarError::HasSources(g.vertex_name(v).to_string()));
        }
        let shape_ok = self.vertex_action.len() == n
            && self.edge_action.len() == n
            && self.cocycle.len() == n
            && self.vertex_action.iter().all(|p| p.len() == g.vertex_count())
            && self.edge_action.iter().all(|p| p.len() == g.edge_count())
            && self
                .cocycle
                .iter()
                .all(|c| c.len() == g.edge_count() && c.iter().all(|&x| x < n));
        if !shape_ok {
            return Err(SelfSimilarError::Group("action tables have the wrong shape".into()));
        }
        for x in 0..n {
            for (kind, perm) in [("vertex", &self.vertex_action[x]), ("edge", &self.edge_action[x])] {
                if !is_permutation(perm) {
                    return Err(SelfSimilarError::NotPermutation {
                        g: grp.name(x).to_string(),
                        kind,
                    });
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                let xy = grp.mul(x, y);
                let hom = |table: &Vec<Vec<usize>>| (0..table[0].len()).all(|i| table[xy][i] == table[x][table[y][i]]);
                for (kind, table) in [("vertex", &self.vertex_action), ("edge", &self.edge_action)] {
                    if !table[0].is_empty() && !hom(table) {
                        return Err(SelfSimilarError::NotHomomorphism {
                            g: grp.name(x).to_string(),
                            h: grp.name(y).to_string(),
                            kind,
                        });
                    }
                }
            }
        }
        for x in 0..n {
            for e in 0..g.edge_count() {
                let ge = g.edge(self.edge_action[x][e]);
                let edge = g.edge(e);
                for (map, ok) in [
                    ("r", ge.rng == self.vertex_action[x][edge.rng]),
                    ("s", ge.src == self.vertex_action[x][edge.src]),
                ] {
                    if !ok {
                        return Err(SelfSimilarError::NotGraphMap {
                            g: grp.name(x).to_string(),
                            e: edge.name.clone(),
                            map,
                        });
                    }
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for e in 0..g.edge_count() {
                    let lhs = self.cocycle[grp.mul(x, y)][e];
                    let rhs = grp.mul(self.cocycle[x][self.edge_action[y][e]], self.cocycle[y][e]);
                    if lhs != rhs {
                        return Err(SelfSimilarError::CocycleLaw {
                            g: grp.name(x).to_string(),
                            h: grp.name(y).to_string(),
                            x: g.edge(e).name.clone(),
                        });
                    }
                }
            }
        }
        for x in 0..n {
            for e in 0..g.edge_count() {
                let c = self.cocycle[x][e];
                if let Some(v) = (0..g.vertex_count()).find(|&v| self.vertex_action[c][v] != self.vertex_action[x][v]) {
                    return Err(SelfSimilarError::Compatibility {
                        g: grp.name(x).to_string(),
                        e: g.edge(e).name.clone(),
                        v: g.vertex_name(v).to_string(),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn act_vertex(&self, g: usize, v: usize) -> usize {
        self.vertex_action[g][v]
    }

    pub fn act_edge(&self, g: usize, e: usize) -> usize {
        self.edge_action[g][e]
    }

    pub fn phi(&self, g: usize, e: usize) -> usize {
        self.cocycle[g][e]
    }

    fn check_path(&self, p: &Path) -> Result<(), SelfSimilarError> {
        if p.range >= self.graph.vertex_count() {
            return Err(SelfSimilarError::MalformedPath("vertex index out of range".into()));
        }
        if !p.edges.is_empty() {
            let q = Path::from_edges(&self.graph, p.edges.clone())?;
            if q.range != p.range {
                return Err(SelfSimilarError::MalformedPath(
                    "range does not match first edge".into(),
                ));
            }
        }
        Ok(())
    }

    /// `(g . path, phi(g, path))`.
    pub fn act_on_path(&self, g: usize, path: &Path) -> Result<(Path, usize), SelfSimilarError> {
        self.check_path(path)?;
        if g >= self.group.order() {
            return Err(SelfSimilarError::UnknownElement(format!("#{g}")));
        }
        let mut state = g;
        let mut edges = Vec::with_capacity(path.len());
        for &e in &path.edges {
            edges.push(self.act_edge(state, e));
            state = self.phi(state, e);
        }
        Ok((
            Path {
                range: self.act_vertex(g, path.range),
                edges,
            },
            state,
        ))
    }

    pub fn triple(&self, alpha: Path, g: usize, beta: Path) -> Result<SgeElement, SelfSimilarError> {
        self.check_path(&alpha)?;
        self.check_path(&beta)?;
        if g >= self.group.order() {
            return Err(SelfSimilarError::MalformedTriple("group element out of range".into()));
        }
        if alpha.source(&self.graph) != self.act_vertex(g, beta.source(&self.graph)) {
            return Err(SelfSimilarError::MalformedTriple("s(alpha) != g . s(beta)".into()));
        }
        Ok(SgeElement::Triple { alpha, g, beta })
    }

    fn check_element(&self, x: &SgeElement) -> Result<(), SelfSimilarError> {
        match x {
            SgeElement::Zero => Ok(()),
            SgeElement::Triple { alpha, g, beta } => self.triple(alpha.clone(), *g, beta.clone()).map(|_| ()),
        }
    }

    pub fn sge_multiply(&self, x: &SgeElement, y: &SgeElement) -> Result<SgeElement, SelfSimilarError> {
        self.check_element(x)?;
        self.check_element(y)?;
        let (
            SgeElement::Triple { alpha, g, beta },
            SgeElement::Triple {
                alpha: gamma,
                g: h,
                beta: delta,
            },
        ) = (x, y)
        else {
            return Ok(SgeElement::Zero);
        };
        let gr = &self.graph;
        let grp = &self.group;
        if let Some(eps) = gamma.strip_prefix(gr, beta) {
            let (g_eps, phi) = self.act_on_path(*g, &eps)?;
            let phi = if eps.is_empty() { *g } else { phi };
            let alpha2 = alpha.concat(gr, &g_eps).expect("s(alpha) = g . r(eps)");
            return self.triple(alpha2, grp.mul(phi, *h), delta.clone());
        }
        if let Some(eps) = beta.strip_prefix(gr, gamma) {
            let hinv = grp.inverse(*h);
            let (h_eps, phi) = self.act_on_path(hinv, &eps)?;
            let phi = if eps.is_empty() { hinv } else { phi };
            let delta2 = delta.concat(gr, &h_eps).expect("s(delta) = h^-1 . r(eps)");
            return self.triple(alpha.clone(), grp.mul(*g, grp.inverse(phi)), delta2);
        }
        Ok(SgeElement::Zero)
    }

    /// `(alpha, g, beta)* = (beta, g^-1, alpha)`.
    pub fn sge_star(&self, x: &SgeElement) -> SgeElement {
        match x {
            SgeElement::Zero => SgeElement::Zero,
            SgeElement::Triple { alpha, g, beta } => SgeElement::Triple {
                alpha: beta.clone(),
                g: self.group.inverse(*g),
                beta: alpha.clone(),
            },
        }
    }

    /// All paths with range `v` and length at most `max_len`, shortest first.
    pub fn paths_into(&self, v: usize, max_len: usize) -> Vec<Path> {
        let mut out = vec![Path::vertex(v)];
        let mut frontier = vec![Path::vertex(v)];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for p in &frontier {
                for &e in self.graph.in_edges(p.source(&self.graph)) {
                    let mut q = p.clone();
                    q.edges.push(e);
                    next.push(q);
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    /// `g . alpha = alpha` and `phi(g, alpha) = e_G`; on vertices only `e_G`
    /// strongly fixes.
    pub fn is_strongly_fixed(&self, g: usize, path: &Path) -> Result<bool, SelfSimilarError> {
        if path.is_empty() {
            self.check_path(path)?;
            return Ok(g == self.group.identity());
        }
        let (image, phi) = self.act_on_path(g, path)?;
        Ok(&image == path && phi == self.group.identity())
    }

    pub fn automaton(&self, g: usize, v: usize) -> RestrictionAutomaton {
        let gr = &self.graph;
        let mut index: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let mut states = vec![(g, v)];
        index.insert((g, v), 0);
        let mut transitions = Vec::new();
        let mut broken = Vec::new();
        let mut i = 0;
        while i < states.len() {
            let (h, w) = states[i];
            let mut t = Vec::new();
            let mut b = Vec::new();
            for &e in gr.in_edges(w) {
                if self.act_edge(h, e) != e {
                    b.push(e);
                    continue;
                }
                let target = (self.phi(h, e), gr.edge(e).src);
                let j = *index.entry(target).or_insert_with(|| {
                    states.push(target);
                    states.len() - 1
                });
                t.push((e, j));
            }
            transitions.push(t);
            broken.push(b);
            i += 1;
        }
        RestrictionAutomaton {
            states,
            transitions,
            broken,
            identity: self.group.identity(),
        }
    }

    pub fn default_depth_bound(&self) -> usize {
        self.group.order() * self.graph.vertex_count() + 1
    }

    /// Minimal strongly fixed paths for `g` with range `v`.
    pub fn minimal_strongly_fixed(&self, g: usize, v: usize, depth_bound: Option<usize>) -> StronglyFixed {
        if g == self.group.identity() {
            return StronglyFixed::Finite(vec![Path::vertex(v)]);
        }
        let aut = self.automaton(g, v);
        let inside = aut.non_identity_part();
        let exits: Vec<bool> = (0..aut.len())
            .map(|i| inside[i] && aut.transitions[i].iter().any(|&(_, j)| aut.is_identity_state(j)))
            .collect();
        // States inside that can still reach an exit.
        let mut live = exits.clone();
        loop {
            let mut changed = false;
            for i in 0..aut.len() {
                if inside[i] && !live[i] && aut.transitions[i].iter().any(|&(_, j)| inside[j] && live[j]) {
                    live[i] = true;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        let usable = |i: usize| inside[i] && live[i];
        let step = |i: usize| aut.transitions[i].iter().filter(move |&&(_, j)| usable(j));

        for c in (0..aut.len()).filter(|&c| usable(c)) {
            if let Some(cycle) = bfs_path(&aut, &step, c, |j| j == c, true) {
                let stem = bfs_path(&aut, &step, 0, |j| j == c, false).expect("c reachable");
                let exit_state = bfs_path_state(&aut, &step, c, |j| exits[j]);
                let (mut exit, last) = exit_state.expect("c is live");
                let &(e, _) = aut.transitions[last]
                    .iter()
                    .find(|&&(_, j)| aut.is_identity_state(j))
                    .expect("exit state");
                exit.push(e);
                return StronglyFixed::Infinite(PumpingWitness {
                    range: v,
                    stem,
                    cycle,
                    exit,
                });
            }
        }

        let bound = depth_bound.unwrap_or_else(|| self.default_depth_bound());
        let mut out = Vec::new();
        let mut stack: Vec<(usize, Vec<usize>)> = vec![(0, Vec::new())];
        while let Some((i, prefix)) = stack.pop() {
            if prefix.len() >= bound {
                continue;
            }
            for &(e, j) in &aut.transitions[i] {
                let mut p = prefix.clone();
                p.push(e);
                if aut.is_identity_state(j) {
                    out.push(Path { range: v, edges: p });
                } else if usable(j) {
                    stack.push((j, p));
                }
            }
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.edges.cmp(&b.edges)));
        StronglyFixed::Finite(out)
    }

    pub fn is_hausdorff(&self) -> Result<(), NonHausdorffWitness> {
        for g in 0..self.group.order() {
            for v in 0..self.graph.vertex_count() {
                if let StronglyFixed::Infinite(family) = self.minimal_strongly_fixed(g, v, None) {
                    return Err(NonHausdorffWitness { g, v, family });
                }
            }
        }
        Ok(())
    }

    /// Entry-free G-circuits, one per `(g, first edge)`: the first closing
    /// of the unique-in-edge chain started at that edge.
    pub fn circuits_with_no_entry(&self, length_bound: Option<usize>) -> Vec<GCircuit> {
        let gr = &self.graph;
        let bound = length_bound.unwrap_or(gr.edge_count() + 1);
        let mut out = Vec::new();
        for g in 0..self.group.order() {
            for first in 0..gr.edge_count() {
                let target = self.act_edge(g, first);
                let mut edges = vec![first];
                while edges.len() <= bound {
                    let ins = gr.in_edges(gr.edge(*edges.last().expect("nonempty")).src);
                    if ins.len() != 1 {
                        break;
                    }
                    if ins[0] == target {
                        out.push(GCircuit {
                            g,
                            path: Path {
                                range: gr.edge(first).rng,
                                edges: edges.clone(),
                            },
                        });
                        break;
                    }
                    if edges.len() == bound {
                        break;
                    }
                    edges.push(ins[0]);
                }
            }
        }
        out
    }

    /// Every directed cycle reaches (along `s -> r`) the orbit of every vertex.
    pub fn weakly_g_transitive(&self) -> Result<(), TransitivityWitness> {
        let gr = &self.graph;
        let n = gr.vertex_count();
        let succ = gr.successors();
        let reach: Vec<BTreeSet<usize>> = (0..n)
            .map(|u| {
                let mut seen = BTreeSet::from([u]);
                let mut stack = vec![u];
                while let Some(x) = stack.pop() {
                    for &y in &succ[x] {
                        if seen.insert(y) {
                            stack.push(y);
                        }
                    }
                }
                seen
            })
            .collect();
        let orbit = |v: usize| -> BTreeSet<usize> { (0..self.group.order()).map(|g| self.act_vertex(g, v)).collect() };
        for (u, reach_u) in reach.iter().enumerate() {
            let Some(cycle) = self.cycle_through(u) else {
                continue;
            };
            for v in 0..n {
                if reach_u.is_disjoint(&orbit(v)) {
                    return Err(TransitivityWitness { cycle, vertex: v });
                }
            }
        }
        Ok(())
    }

    /// A cycle through `u`, as a path, if one exists.
    fn cycle_through(&self, u: usize) -> Option<Path> {
        let gr = &self.graph;
        // BFS in the s -> r direction, remembering the edge used.
        let mut prev: BTreeMap<usize, usize> = BTreeMap::new();
        let mut queue = VecDeque::new();
        for (e, edge) in gr.edges().iter().enumerate() {
            if edge.src == u && !prev.contains_key(&edge.rng) {
                prev.insert(edge.rng, e);
                queue.push_back(edge.rng);
            }
        }
        while let Some(x) = queue.pop_front() {
            if x == u {
                break;
            }
            for (e, edge) in gr.edges().iter().enumerate() {
                if edge.src == x && !prev.contains_key(&edge.rng) {
                    prev.insert(edge.rng, e);
                    queue.push_back(edge.rng);
                }
            }
        }
        let mut edges = Vec::new();
        let mut x = u;
        loop {
            let &e = prev.get(&x)?;
            edges.push(e);
            x = gr.edge(e).src;
            if x == u {
                break;
            }
        }
        // Collected from the range end already: r(edges[0]) = u.
        Some(Path { range: u, edges })
    }

    pub fn fixes_cylinder_pointwise(&self, g: usize, v: usize) -> bool {
        self.automaton(g, v).broken.iter().all(Vec::is_empty)
    }

    /// The least `n` such that every path of length at least `n` with range
    /// `v` is strongly fixed by `g`, if there is one.
    pub fn is_slack(&self, g: usize, v: usize) -> Option<usize> {
        if g == self.group.identity() {
            return Some(0);
        }
        let aut = self.automaton(g, v);
        let inside = aut.non_identity_part();
        if (0..aut.len()).any(|i| inside[i] && !aut.broken[i].is_empty()) {
            return None;
        }
        // Longest path in the non-identity part; a cycle there means none.
        let mut depth: Vec<Option<usize>> = vec![None; aut.len()];
        let mut on_stack = vec![false; aut.len()];
        fn longest(
            i: usize,
            aut: &RestrictionAutomaton,
            inside: &[bool],
            depth: &mut Vec<Option<usize>>,
            on_stack: &mut Vec<bool>,
        ) -> Option<usize> {
            if let Some(d) = depth[i] {
                return Some(d);
            }
            if on_stack[i] {
                return None;
            }
            on_stack[i] = true;
            let mut best = 0;
            for &(_, j) in &aut.transitions[i] {
                if inside[j] {
                    best = best.max(1 + longest(j, aut, inside, depth, on_stack)?);
                }
            }
            on_stack[i] = false;
            depth[i] = Some(best);
            Some(best)
        }
        longest(0, &aut, &inside, &mut depth, &mut on_stack).map(|l| l + 1)
    }

    pub fn ep_verdict(&self, field: FieldSpec) -> Result<EpReport, SelfSimilarError> {
        if let Err(w) = self.is_hausdorff() {
            return Err(SelfSimilarError::NonHausdorff {
                g: self.group.name(w.g).to_string(),
                v: self.graph.vertex_name(w.v).to_string(),
            });
        }
        let weakly_transitive = self.weakly_g_transitive();
        let entry_free_circuits = self.circuits_with_no_entry(None);
        let mut slack_failures = Vec::new();
        for g in 0..self.group.order() {
            for v in 0..self.graph.vertex_count() {
                if self.fixes_cylinder_pointwise(g, v) && self.is_slack(g, v).is_none() {
                    slack_failures.push((g, v));
                }
            }
        }
        let simple = weakly_transitive.is_ok() && entry_free_circuits.is_empty() && slack_failures.is_empty();
        let (center, lie) = if !simple {
            let why = "L_K(G, E) is not simple".to_string();
            (CenterVerdict::Inapplicable(why.clone()), LieVerdict::Inapplicable(why))
        } else if self.group.is_trivial() {
            (
                CenterVerdict::ScalarMultiplesOfIdentity,
                lpa_lie_simple(&self.graph, field),
            )
        } else {
            (
                CenterVerdict::ScalarMultiplesOfIdentity,
                LieVerdict::Undecided(
                    "simple iff the identity is not a sum of commutators; no finite membership test for a nontrivial group".into(),
                ),
            )
        };
        Ok(EpReport {
            hausdorff: true,
            weakly_transitive,
            entry_free_circuits,
            slack_failures,
            simple,
            unital: true,
            center,
            lie,
        })
    }
}

/// Shortest edge sequence from `from` along `step` to a state satisfying
/// `done`. With `nonempty`, at least one edge is taken.
fn bfs_path<'a, I>(
    aut: &RestrictionAutomaton,
    step: &impl Fn(usize) -> I,
    from: usize,
    done: impl Fn(usize) -> bool,
    nonempty: bool,
) -> Option<Vec<usize>>
where
    I: Iterator<Item = &'a (usize, usize)>,
{
    if !nonempty && done(from) {
        return Some(Vec::new());
    }
    let mut prev: Vec<Option<(usize, usize)>> = vec![None; aut.len()];
    let mut queue = VecDeque::from([from]);
    let mut seen = vec![false; aut.len()];
    while let Some(i) = queue.pop_front() {
        for &(e, j) in step(i) {
            if done(j) {
                let mut edges = vec![e];
                let mut k = i;
                while k != from {
                    let (pe, pk) = prev[k].expect("bfs tree");
                    edges.push(pe);
                    k = pk;
                }
                edges.reverse();
                return Some(edges);
            }
            if !seen[j] && j != from {
                seen[j] = true;
                prev[j] = Some((e, i));
                queue.push_back(j);
            }
        }
    }
    None
}

/// Shortest edge sequence from `from` to a state satisfying `done`, with that state.
fn bfs_path_state<'a, I>(
    aut: &RestrictionAutomaton,
    step: &impl Fn(usize) -> I,
    from: usize,
    done: impl Fn(usize) -> bool,
) -> Option<(Vec<usize>, usize)>
where
    I: Iterator<Item = &'a (usize, usize)>,
{
    if done(from) {
        return Some((Vec::new(), from));
    }
    let mut prev: Vec<Option<(usize, usize)>> = vec![None; aut.len()];
    let mut seen = vec![false; aut.len()];
    seen[from] = true;
    let mut queue = VecDeque::from([from]);
    while let Some(i) = queue.pop_front() {
        for &(e, j) in step(i) {
            if seen[j] {
                continue;
            }
            seen[j] = true;
            prev[j] = Some((e, i));
            if done(j) {
                let mut edges = Vec::new();
                let mut k = j;
                while k != from {
                    let (pe, pk) = prev[k].expect("bfs tree");
                    edges.push(pe);
                    k = pk;
                }
                edges.reverse();
                return Some((edges, j));
            }
            queue.push_back(j);
        }
    }
    None
}
