//! Finite groupoids.
//!
//! A finite groupoid is given the discrete topology. Every Hausdorff topology
//! on a finite set is discrete, so every subset is compact open and every
//! subset on which source and range are injective is a compact open
//! bisection. The groupoid is therefore automatically ample and Hausdorff,
//! and the interior of a set is the set itself. This is what makes
//! effectiveness, minimality and the convolution algebra decidable here.
//!
//! Composition `a . b` is defined exactly when `src(a) = rng(b)`.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupoidError {
    #[error("groupoid has no units")]
    NoUnits,
    #[error("duplicate name `{0}`")]
    DuplicateName(String),
    #[error("unknown unit `{0}`")]
    UnknownUnit(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("axiom `{axiom}` violated by [{}]", arrows.join(", "))]
    Axiom { axiom: &'static str, arrows: Vec<String> },
    #[error("not a bisection: {0}")]
    NotABisection(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowDoc {
    pub name: String,
    pub src: String,
    pub rng: String,
}

/// On-disk form of a finite groupoid. Identity arrows may be omitted; for
/// each unit without one, an arrow named after the unit is used if present,
/// otherwise one is created. Compositions and inverses involving identity
/// arrows are filled in when not listed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupoidDoc {
    pub units: Vec<String>,
    pub arrows: Vec<ArrowDoc>,
    #[serde(default)]
    pub compose: Vec<[String; 3]>,
    #[serde(default)]
    pub inverse: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub identities: Option<Vec<[String; 2]>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub src: usize,
    pub rng: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroupoid {
    units: Vec<String>,
    arrows: Vec<Arrow>,
    compose: Vec<Option<usize>>,
    inverse: Vec<usize>,
    identity: Vec<usize>,
}

/// A set of arrows on which source and range are injective.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bisection(BTreeSet<usize>);

impl Bisection {
    pub fn arrows(&self) -> &BTreeSet<usize> {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }
}

fn axiom(axiom: &'static str, g: &FiniteGroupoid, arrows: &[usize]) -> GroupoidError {
    GroupoidError::Axiom {
        axiom,
        arrows: arrows.iter().map(|&a| g.arrows[a].name.clone()).collect(),
    }
}

impl FiniteGroupoid {
    /// Assembles a groupoid from index tables and validates it.
    pub fn from_tables(
        units: Vec<String>,
        arrows: Vec<Arrow>,
        compose: impl Fn(usize, usize) -> Option<usize>,
        inverse: Vec<usize>,
        identity: Vec<usize>,
    ) -> Result<Self, GroupoidError> {
        let n = arrows.len();
        let mut table = vec![None; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = compose(a, b);
            }
        }
        let g = FiniteGroupoid {
            units,
            arrows,
            compose: table,
            inverse,
            identity,
        };
        g.validate()?;
        Ok(g)
    }

    pub fn from_doc(doc: &GroupoidDoc) -> Result<Self, GroupoidError> {
        if doc.units.is_empty() {
            return Err(GroupoidError::NoUnits);
        }
        let mut unit_ix = HashMap::new();
        for (i, u) in doc.units.iter().enumerate() {
            if unit_ix.insert(u.as_str(), i).is_some() {
                return Err(GroupoidError::DuplicateName(u.clone()));
            }
        }
        let unit = |name: &str| {
            unit_ix
                .get(name)
                .copied()
                .ok_or_else(|| GroupoidError::UnknownUnit(name.to_string()))
        };
        let mut arrows = Vec::new();
        let mut arrow_ix: HashMap<String, usize> = HashMap::new();
        for a in &doc.arrows {
            if arrow_ix.insert(a.name.clone(), arrows.len()).is_some() {
                return Err(GroupoidError::DuplicateName(a.name.clone()));
            }
            arrows.push(Arrow {
                name: a.name.clone(),
                src: unit(&a.src)?,
                rng: unit(&a.rng)?,
            });
        }
        let arrow = |ix: &HashMap<String, usize>, name: &str| {
            ix.get(name)
                .copied()
                .ok_or_else(|| GroupoidError::UnknownArrow(name.to_string()))
        };

        let mut identity = vec![usize::MAX; doc.units.len()];
        if let Some(ids) = &doc.identities {
            for [u, a] in ids {
                identity[unit(u)?] = arrow(&arrow_ix, a)?;
            }
        }
        for (u, name) in doc.units.iter().enumerate() {
            if identity[u] != usize::MAX {
                continue;
            }
            identity[u] = match arrow_ix.get(name) {
                Some(&a) => a,
                None => {
                    arrow_ix.insert(name.clone(), arrows.len());
                    arrows.push(Arrow {
                        name: name.clone(),
                        src: u,
                        rng: u,
                    });
                    arrows.len() - 1
                }
            };
        }

        let n = arrows.len();
        let mut compose = vec![None; n * n];
        for [a, b, c] in &doc.compose {
            let (a, b, c) = (arrow(&arrow_ix, a)?, arrow(&arrow_ix, b)?, arrow(&arrow_ix, c)?);
            compose[a * n + b] = Some(c);
        }
        let mut inverse = vec![usize::MAX; n];
        for [a, b] in &doc.inverse {
            inverse[arrow(&arrow_ix, a)?] = arrow(&arrow_ix, b)?;
        }
        let is_identity: BTreeSet<usize> = identity.iter().copied().collect();
        for (a, arr) in arrows.iter().enumerate() {
            let (left, right) = (identity[arr.rng], identity[arr.src]);
            compose[left * n + a].get_or_insert(a);
            compose[a * n + right].get_or_insert(a);
            if is_identity.contains(&a) && inverse[a] == usize::MAX {
                inverse[a] = a;
            }
        }
        if let Some(a) = inverse.iter().position(|&x| x == usize::MAX) {
            return Err(GroupoidError::Axiom {
                axiom: "every arrow has an inverse",
                arrows: vec![arrows[a].name.clone()],
            });
        }
        let g = FiniteGroupoid {
            units: doc.units.clone(),
            arrows,
            compose,
            inverse,
            identity,
        };
        g.validate()?;
        Ok(g)
    }

    pub fn to_doc(&self) -> GroupoidDoc {
        let name = |a: usize| self.arrows[a].name.clone();
        let n = self.arrows.len();
        let mut compose = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if let Some(c) = self.compose[a * n + b] {
                    compose.push([name(a), name(b), name(c)]);
                }
            }
        }
        GroupoidDoc {
            units: self.units.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| ArrowDoc {
                    name: a.name.clone(),
                    src: self.units[a.src].clone(),
                    rng: self.units[a.rng].clone(),
                })
                .collect(),
            compose,
            inverse: (0..n).map(|a| [name(a), name(self.inverse[a])]).collect(),
            identities: Some(
                self.identity
                    .iter()
                    .enumerate()
                    .map(|(u, &a)| [self.units[u].clone(), name(a)])
                    .collect(),
            ),
        }
    }

    /// Exhaustive check of the groupoid axioms.
    pub fn validate(&self) -> Result<(), GroupoidError> {
        let n = self.arrows.len();
        let m = self.units.len();
        if m == 0 {
            return Err(GroupoidError::NoUnits);
        }
        if self.identity.len() != m || self.inverse.len() != n || self.compose.len() != n * n {
            return Err(GroupoidError::Axiom {
                axiom: "table sizes",
                arrows: vec![],
            });
        }
        if self
            .identity
            .iter()
            .chain(&self.inverse)
            .chain(self.compose.iter().flatten())
            .any(|&x| x >= n)
        {
            return Err(GroupoidError::Axiom {
                axiom: "table entries name declared arrows",
                arrows: vec![],
            });
        }
        for (u, &id) in self.identity.iter().enumerate() {
            let a = &self.arrows[id];
            if a.src != u || a.rng != u {
                return Err(axiom("identity arrow of u has source and range u", self, &[id]));
            }
            if self.inverse[id] != id {
                return Err(axiom("identity arrows are self-inverse", self, &[id]));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let composable = self.arrows[a].src == self.arrows[b].rng;
                match (composable, self.compose[a * n + b]) {
                    (true, None) => return Err(axiom("composite defined when src(a) = rng(b)", self, &[a, b])),
                    (false, Some(_)) => {
                        return Err(axiom("composite defined only when src(a) = rng(b)", self, &[a, b]))
                    }
                    (true, Some(c)) => {
                        if self.arrows[c].src != self.arrows[b].src || self.arrows[c].rng != self.arrows[a].rng {
                            return Err(axiom("src(ab) = src(b) and rng(ab) = rng(a)", self, &[a, b, c]));
                        }
                    }
                    (false, None) => {}
                }
            }
        }
        for a in 0..n {
            let arr = &self.arrows[a];
            if self.compose[self.identity[arr.rng] * n + a] != Some(a)
                || self.compose[a * n + self.identity[arr.src]] != Some(a)
            {
                return Err(axiom("identity laws", self, &[a]));
            }
            let inv = self.inverse[a];
            let ia = &self.arrows[inv];
            if ia.src != arr.rng || ia.rng != arr.src {
                return Err(axiom("inverse swaps source and range", self, &[a, inv]));
            }
            if self.compose[a * n + inv] != Some(self.identity[arr.rng])
                || self.compose[inv * n + a] != Some(self.identity[arr.src])
            {
                return Err(axiom("a a^-1 = id_rng(a) and a^-1 a = id_src(a)", self, &[a, inv]));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let Some(ab) = self.compose[a * n + b] else {
                    continue;
                };
                for c in 0..n {
                    let Some(bc) = self.compose[b * n + c] else {
                        continue;
                    };
                    if self.compose[ab * n + c] != self.compose[a * n + bc] {
                        return Err(axiom("associativity", self, &[a, b, c]));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn units(&self) -> &[String] {
        &self.units
    }

    pub fn unit_count(&self) -> usize {
        self.units.len()
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }

    pub fn arrow_id(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn src(&self, a: usize) -> usize {
        self.arrows[a].src
    }

    pub fn rng(&self, a: usize) -> usize {
        self.arrows[a].rng
    }

    pub fn compose(&self, a: usize, b: usize) -> Option<usize> {
        self.compose[a * self.arrows.len() + b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// Identity arrow at unit `u`.
    pub fn unit_arrow(&self, u: usize) -> usize {
        self.identity[u]
    }

    pub fn is_identity_arrow(&self, a: usize) -> bool {
        self.identity[self.arrows[a].src] == a
    }

    pub fn is_singleton(&self) -> bool {
        self.arrows.len() == 1
    }

    /// `b a b^{-1}` for `src(a) = rng(a) = src(b)`.
    pub fn conjugate(&self, b: usize, a: usize) -> Option<usize> {
        let ab = self.compose(a, self.inverse(b))?;
        self.compose(b, ab)
    }

    /// Isotropy arrows other than identities; the groupoid is effective
    /// exactly when there are none. Returns the first such arrow.
    pub fn is_effective(&self) -> Result<(), usize> {
        match (0..self.arrows.len()).find(|&a| self.src(a) == self.rng(a) && !self.is_identity_arrow(a)) {
            Some(a) => Err(a),
            None => Ok(()),
        }
    }

    /// Orbits of the unit space, each sorted, listed by least unit.
    pub fn orbits(&self) -> Vec<BTreeSet<usize>> {
        let m = self.units.len();
        let mut parent: Vec<usize> = (0..m).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for a in &self.arrows {
            let (x, y) = (find(&mut parent, a.src), find(&mut parent, a.rng));
            if x != y {
                parent[x.max(y)] = x.min(y);
            }
        }
        let mut classes: Vec<BTreeSet<usize>> = Vec::new();
        let mut root_slot = HashMap::new();
        for u in 0..m {
            let r = find(&mut parent, u);
            let slot = *root_slot.entry(r).or_insert_with(|| {
                classes.push(BTreeSet::new());
                classes.len() - 1
            });
            classes[slot].insert(u);
        }
        classes
    }

    /// A single orbit; otherwise the orbit of the first unit, which is a
    /// proper nonempty invariant subset.
    pub fn is_minimal(&self) -> Result<(), BTreeSet<usize>> {
        let mut orbits = self.orbits();
        if orbits.len() == 1 {
            Ok(())
        } else {
            Err(orbits.swap_remove(0))
        }
    }

    /// `s(a) in D => r(a) in D` for every arrow.
    pub fn is_invariant(&self, units: &BTreeSet<usize>) -> bool {
        self.arrows
            .iter()
            .all(|a| !units.contains(&a.src) || units.contains(&a.rng))
    }

    pub fn bisection(&self, arrows: impl IntoIterator<Item = usize>) -> Result<Bisection, GroupoidError> {
        let set: BTreeSet<usize> = arrows.into_iter().collect();
        if let Some(&a) = set.iter().find(|&&a| a >= self.arrows.len()) {
            return Err(GroupoidError::NotABisection(format!("arrow index {a} out of range")));
        }
        let srcs: BTreeSet<usize> = set.iter().map(|&a| self.src(a)).collect();
        let rngs: BTreeSet<usize> = set.iter().map(|&a| self.rng(a)).collect();
        if srcs.len() != set.len() {
            return Err(GroupoidError::NotABisection(format!(
                "source not injective on {{{}}}",
                self.names(&set)
            )));
        }
        if rngs.len() != set.len() {
            return Err(GroupoidError::NotABisection(format!(
                "range not injective on {{{}}}",
                self.names(&set)
            )));
        }
        Ok(Bisection(set))
    }

    pub fn unit_space(&self) -> Bisection {
        Bisection(self.identity.iter().copied().collect())
    }

    /// `UV = {ab : a in U, b in V, src(a) = rng(b)}`.
    pub fn bisection_product(&self, u: &Bisection, v: &Bisection) -> Result<Bisection, GroupoidError> {
        self.bisection(u.0.iter().copied())?;
        self.bisection(v.0.iter().copied())?;
        let mut out = BTreeSet::new();
        for &a in &u.0 {
            for &b in &v.0 {
                if let Some(c) = self.compose(a, b) {
                    out.insert(c);
                }
            }
        }
        self.bisection(out)
    }

    pub fn bisection_inverse(&self, u: &Bisection) -> Result<Bisection, GroupoidError> {
        self.bisection(u.0.iter().copied())?;
        Ok(Bisection(u.0.iter().map(|&a| self.inverse(a)).collect()))
    }

    /// All bisections, by brute force over arrow subsets (`n <= 20`).
    pub fn all_bisections(&self) -> Vec<Bisection> {
        let n = self.arrows.len();
        assert!(n <= 20, "bisection enumeration limited to 20 arrows");
        (0u32..1 << n)
            .filter_map(|mask| self.bisection((0..n).filter(|i| mask >> i & 1 == 1)).ok())
            .collect()
    }

    pub fn names(&self, arrows: &BTreeSet<usize>) -> String {
        arrows
            .iter()
            .map(|&a| self.arrows[a].name.as_str())
            .collect::<Vec<_>>()
            .join(", ")
    }

    pub fn unit_names(&self, units: &BTreeSet<usize>) -> Vec<String> {
        units.iter().map(|&u| self.units[u].clone()).collect()
    }

    /// Same groupoid with arrows renamed by `rename`.
    pub fn renamed(&self, rename: impl Fn(&str) -> String) -> FiniteGroupoid {
        let mut g = self.clone();
        for a in &mut g.arrows {
            a.name = rename(&a.name);
        }
        g
    }

    // --- builders ---

    /// Pair groupoid on `n` units: arrows `g_ij : u_j -> u_i`.
    pub fn pair(n: usize) -> FiniteGroupoid {
        assert!(n >= 1);
        let units: Vec<String> = (1..=n).map(|i| format!("u{i}")).collect();
        let label = |i: usize, j: usize| {
            if n < 10 {
                format!("g{}{}", i + 1, j + 1)
            } else {
                format!("g{}_{}", i + 1, j + 1)
            }
        };
        let ix = |i: usize, j: usize| i * n + j;
        let arrows = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| Arrow {
                name: label(i, j),
                src: j,
                rng: i,
            })
            .collect();
        FiniteGroupoid::from_tables(
            units,
            arrows,
            |a, b| {
                let (i, j) = (a / n, a % n);
                let (k, l) = (b / n, b % n);
                (j == k).then_some(ix(i, l))
            },
            (0..n * n).map(|a| ix(a % n, a / n)).collect(),
            (0..n).map(|i| ix(i, i)).collect(),
        )
        .expect("pair groupoid axioms")
    }

    /// A group as a one-unit groupoid. `mul[a][b]` is the product `ab`.
    pub fn group(
        elements: Vec<String>,
        mul: Vec<Vec<usize>>,
        identity: usize,
    ) -> Result<FiniteGroupoid, GroupoidError> {
        let n = elements.len();
        let inverse = (0..n)
            .map(|a| {
                (0..n).find(|&b| mul[a][b] == identity).ok_or(GroupoidError::Axiom {
                    axiom: "every group element has an inverse",
                    arrows: vec![elements[a].clone()],
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        let arrows = elements
            .into_iter()
            .map(|name| Arrow { name, src: 0, rng: 0 })
            .collect();
        FiniteGroupoid::from_tables(
            vec!["*".into()],
            arrows,
            |a, b| Some(mul[a][b]),
            inverse,
            vec![identity],
        )
    }

    /// Cyclic group `Z/n` as a one-unit groupoid with elements `e, s, s2, ...`.
    pub fn cyclic(n: usize) -> FiniteGroupoid {
        let names = (0..n)
            .map(|k| match k {
                0 => "e".to_string(),
                1 => "s".to_string(),
                _ => format!("s{k}"),
            })
            .collect();
        let mul = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroupoid::group(names, mul, 0).expect("cyclic group axioms")
    }

    pub fn singleton() -> FiniteGroupoid {
        FiniteGroupoid::pair(1)
    }

    /// Transformation groupoid of a group acting on `points` points.
    /// `act[g][x]` is `g . x`; arrows `(g, x) : x -> g . x`.
    pub fn transformation(
        group_mul: &[Vec<usize>],
        identity: usize,
        act: &[Vec<usize>],
        points: usize,
    ) -> Result<FiniteGroupoid, GroupoidError> {
        let k = group_mul.len();
        let units = (0..points).map(|x| format!("x{x}")).collect();
        let ix = |g: usize, x: usize| g * points + x;
        let arrows = (0..k)
            .flat_map(|g| (0..points).map(move |x| (g, x)))
            .map(|(g, x)| Arrow {
                name: format!("({g},x{x})"),
                src: x,
                rng: act[g][x],
            })
            .collect();
        let ginv: Vec<usize> = (0..k)
            .map(|g| (0..k).find(|&h| group_mul[g][h] == identity).expect("group inverse"))
            .collect();
        FiniteGroupoid::from_tables(
            units,
            arrows,
            |a, b| {
                let (g, x) = (a / points, a % points);
                let (h, y) = (b / points, b % points);
                (act[h][y] == x).then(|| ix(group_mul[g][h], y))
            },
            (0..k * points)
                .map(|a| {
                    let (g, x) = (a / points, a % points);
                    ix(ginv[g], act[g][x])
                })
                .collect(),
            (0..points).map(|x| ix(identity, x)).collect(),
        )
    }

    /// Disjoint union; names of the right operand get a `'` suffix.
    pub fn disjoint_union(&self, other: &FiniteGroupoid) -> FiniteGroupoid {
        let (m, n) = (self.units.len(), self.arrows.len());
        let units = self
            .units
            .iter()
            .cloned()
            .chain(other.units.iter().map(|u| format!("{u}'")))
            .collect();
        let arrows = self
            .arrows
            .iter()
            .cloned()
            .chain(other.arrows.iter().map(|a| Arrow {
                name: format!("{}'", a.name),
                src: a.src + m,
                rng: a.rng + m,
            }))
            .collect();
        FiniteGroupoid::from_tables(
            units,
            arrows,
            |a, b| match (a < n, b < n) {
                (true, true) => self.compose(a, b),
                (false, false) => other.compose(a - n, b - n).map(|c| c + n),
                _ => None,
            },
            self.inverse
                .iter()
                .copied()
                .chain(other.inverse.iter().map(|&a| a + n))
                .collect(),
            self.identity
                .iter()
                .copied()
                .chain(other.identity.iter().map(|&a| a + n))
                .collect(),
        )
        .expect("disjoint union of groupoids")
    }

    /// Product groupoid `G x H`; arrow `(a, b)` has index `a * |H| + b`.
    pub fn product(&self, other: &FiniteGroupoid) -> FiniteGroupoid {
        let (hn, hm) = (other.arrows.len(), other.units.len());
        let units = self
            .units
            .iter()
            .flat_map(|u| other.units.iter().map(move |v| format!("{u}*{v}")))
            .collect();
        let arrows = self
            .arrows
            .iter()
            .flat_map(|a| {
                other.arrows.iter().map(move |b| Arrow {
                    name: format!("{}*{}", a.name, b.name),
                    src: a.src * hm + b.src,
                    rng: a.rng * hm + b.rng,
                })
            })
            .collect();
        FiniteGroupoid::from_tables(
            units,
            arrows,
            |x, y| {
                let c = self.compose(x / hn, y / hn)?;
                let d = other.compose(x % hn, y % hn)?;
                Some(c * hn + d)
            },
            (0..self.arrows.len() * hn)
                .map(|x| self.inverse(x / hn) * hn + other.inverse(x % hn))
                .collect(),
            (0..self.units.len() * hm)
                .map(|u| self.identity[u / hm] * hn + other.identity[u % hm])
                .collect(),
        )
        .expect("product of groupoids")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(g: &FiniteGroupoid, names: &[&str]) -> Bisection {
        g.bisection(names.iter().map(|n| g.arrow_id(n).unwrap())).unwrap()
    }

    #[test]
    fn builders_validate() {
        for n in 1..=4 {
            FiniteGroupoid::pair(n).validate().unwrap();
        }
        FiniteGroupoid::cyclic(2).validate().unwrap();
        FiniteGroupoid::singleton().validate().unwrap();
    }

    #[test]
    fn doc_with_inferred_identities() {
        let doc: GroupoidDoc = serde_json::from_str(
            r#"{"units":["u1","u2"],
                "arrows":[{"name":"g12","src":"u2","rng":"u1"},{"name":"g21","src":"u1","rng":"u2"}],
                "compose":[["g12","g21","u1"],["g21","g12","u2"]],
                "inverse":[["g12","g21"],["g21","g12"]]}"#,
        )
        .unwrap();
        let g = FiniteGroupoid::from_doc(&doc).unwrap();
        assert_eq!(g.arrow_count(), 4);
        assert!(g.is_effective().is_ok());
        assert!(g.is_minimal().is_ok());
        let back = FiniteGroupoid::from_doc(&g.to_doc()).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn bad_composite_endpoints_rejected() {
        let mut doc = FiniteGroupoid::pair(2).to_doc();
        for triple in &mut doc.compose {
            if triple[0] == "g12" && triple[1] == "g21" {
                triple[2] = "g22".into();
            }
        }
        let err = FiniteGroupoid::from_doc(&doc).unwrap_err();
        assert!(matches!(err, GroupoidError::Axiom { .. }), "{err}");
    }

    #[test]
    fn composite_on_non_composable_pair_rejected() {
        let mut doc = FiniteGroupoid::pair(2).to_doc();
        doc.compose.push(["g12".into(), "g12".into(), "g11".into()]);
        let err = FiniteGroupoid::from_doc(&doc).unwrap_err();
        assert_eq!(
            err,
            GroupoidError::Axiom {
                axiom: "composite defined only when src(a) = rng(b)",
                arrows: vec!["g12".into(), "g12".into()],
            }
        );
    }

    #[test]
    fn effectiveness() {
        assert!(FiniteGroupoid::pair(2).is_effective().is_ok());
        let z2 = FiniteGroupoid::cyclic(2);
        assert_eq!(z2.is_effective().map_err(|a| z2.arrow(a).name.clone()), Err("s".into()));
        assert!(FiniteGroupoid::singleton().is_effective().is_ok());
    }

    #[test]
    fn minimality() {
        assert!(FiniteGroupoid::pair(2).is_minimal().is_ok());
        let two = FiniteGroupoid::singleton().disjoint_union(&FiniteGroupoid::singleton());
        let w = two.is_minimal().unwrap_err();
        assert_eq!(two.unit_names(&w), vec!["u1"]);
        assert!(two.is_invariant(&w));
        assert!(FiniteGroupoid::singleton().is_minimal().is_ok());
    }

    #[test]
    fn bisection_examples() {
        let p2 = FiniteGroupoid::pair(2);
        let prod = p2.bisection_product(&set(&p2, &["g12"]), &set(&p2, &["g21"])).unwrap();
        assert_eq!(prod, set(&p2, &["g11"]));
        let empty = p2.bisection([]).unwrap();
        assert!(p2.bisection_product(&set(&p2, &["g12"]), &empty).unwrap().is_empty());
        let u = set(&p2, &["g12", "g21"]);
        assert_eq!(p2.bisection_product(&p2.unit_space(), &u).unwrap(), u);

        assert_eq!(p2.bisection_inverse(&set(&p2, &["g12"])).unwrap(), set(&p2, &["g21"]));
        assert_eq!(p2.bisection_inverse(&p2.unit_space()).unwrap(), p2.unit_space());
        let bad = [p2.arrow_id("g11").unwrap(), p2.arrow_id("g12").unwrap()];
        assert!(matches!(p2.bisection(bad), Err(GroupoidError::NotABisection(_))));
        assert!(p2.bisection_inverse(&Bisection(bad.into_iter().collect())).is_err());
    }

    #[test]
    fn transformation_groupoid_of_free_transitive_action_is_pair_like() {
        let mul: Vec<Vec<usize>> = (0..3).map(|a| (0..3).map(|b| (a + b) % 3).collect()).collect();
        let g = FiniteGroupoid::transformation(&mul, 0, &mul, 3).unwrap();
        assert!(g.is_effective().is_ok());
        assert!(g.is_minimal().is_ok());
        assert_eq!(g.arrow_count(), 9);
    }
}
