//! Example factory: graded symmetric inverse monoids, pair groupoids,
//! groups as one-object groupoids, graph inverse semigroups and
//! distributive completions.
//!
//! Partial bijections compose left to right: `(φψ)(x) = ψ(φ(x))`, and a
//! partial bijection has degree `α` when `deg(φ(x)) = deg(x)·α` on its
//! domain. With these conventions the slice `{(xᵢ, yᵢ)}` of a pair groupoid
//! corresponds to the map `xᵢ ↦ yᵢ` as a graded isomorphism for any group.

mod completion;
mod graph;

pub use completion::{distributive_completion, fc_gr, Completion, IdealSemigroup, DEFAULT_MAX_IDEALS};
pub use graph::{graph_inverse_semigroup, FiniteGraph, GraphEdge};

use crate::error::{Error, Result};
use crate::grading::{AnyGroup, GradedGroup, GroupDoc, TableGroup, ToGroupDoc};
use crate::groupoid::{FiniteGradedGroupoid, GroupoidTables};
use crate::invsemi::GradedInverseSemigroup;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};

/// Default bound on the number of points of a symmetric inverse monoid.
pub const DEFAULT_MAX_POINTS: usize = 5;

/// A finite set with a degree for every point, in sorted point order.
#[derive(Debug, Clone, PartialEq)]
pub struct GradedSet<G: GradedGroup> {
    points: Vec<String>,
    deg: Vec<G::Elem>,
    group: G,
}

impl<G: GradedGroup> GradedSet<G> {
    pub fn new(points: Vec<(String, G::Elem)>, group: G) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::input("a graded set needs at least one point"));
        }
        let mut points = points;
        points.sort_by(|a, b| a.0.cmp(&b.0));
        for w in points.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::input(format!("duplicate point {}", w[0].0)));
            }
        }
        for (p, d) in &points {
            if p.is_empty() || p.contains([',', '(', ')', '{', '}', ' ']) || p.contains("->") {
                return Err(Error::input(format!("point name {p:?} is not allowed")));
            }
            if !group.contains(d) {
                return Err(Error::input(format!("degree of {p} is not a group element")));
            }
        }
        let (points, deg) = points.into_iter().unzip();
        Ok(Self { points, deg, group })
    }

    /// Every point of degree `ε`.
    pub fn trivial(points: &[&str], group: G) -> Result<Self> {
        let e = group.identity();
        Self::new(points.iter().map(|p| (p.to_string(), e.clone())).collect(), group)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn deg(&self, x: usize) -> &G::Elem {
        &self.deg[x]
    }

    pub fn group(&self) -> &G {
        &self.group
    }

    /// Whether all points share one degree.
    pub fn is_trivial(&self) -> bool {
        self.deg.windows(2).all(|w| w[0] == w[1])
    }

    pub fn to_doc(&self) -> GradedSetDoc
    where
        G: ToGroupDoc,
    {
        GradedSetDoc {
            points: self
                .points
                .iter()
                .zip(&self.deg)
                .map(|(p, d)| (p.clone(), self.group.format(d)))
                .collect(),
            group: self.group.to_doc(),
        }
    }
}

impl GradedSet<AnyGroup> {
    pub fn from_doc(doc: &GradedSetDoc) -> Result<Self> {
        let group = AnyGroup::from_doc(&doc.group)?;
        let points = doc
            .points
            .iter()
            .map(|(p, d)| Ok((p.clone(), group.parse(d)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(points, group)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GradedSetDoc {
    pub points: BTreeMap<String, String>,
    pub group: GroupDoc,
}

/// Name of a partial bijection given as `map[x] = Some(y)`.
pub fn partial_bijection_name<G: GradedGroup>(x: &GradedSet<G>, map: &[Option<usize>]) -> String {
    let parts: Vec<String> = map
        .iter()
        .enumerate()
        .filter_map(|(a, b)| b.map(|b| format!("{}->{}", x.points[a], x.points[b])))
        .collect();
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(",")
    }
}

fn partial_bijections(n: usize) -> Vec<Vec<Option<usize>>> {
    fn go(x: usize, n: usize, used: &mut [bool], cur: &mut Vec<Option<usize>>, out: &mut Vec<Vec<Option<usize>>>) {
        if x == n {
            out.push(cur.clone());
            return;
        }
        cur.push(None);
        go(x + 1, n, used, cur, out);
        cur.pop();
        for y in 0..n {
            if !used[y] {
                used[y] = true;
                cur.push(Some(y));
                go(x + 1, n, used, cur, out);
                cur.pop();
                used[y] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(0, n, &mut vec![false; n], &mut Vec::new(), &mut out);
    out
}

/// `I^gr(X)`: partial bijections of constant degree shift, plus the empty
/// map as zero.
pub fn graded_symmetric_inverse_monoid<G: GradedGroup>(
    x: &GradedSet<G>,
    max_points: usize,
) -> Result<GradedInverseSemigroup<G>> {
    let n = x.len();
    if n > max_points {
        return Err(Error::resource("points of a symmetric inverse monoid", max_points));
    }
    let group = &x.group;
    let shift = |a: usize, b: usize| group.product(&group.inverse(&x.deg[a]), &x.deg[b]);
    let mut maps = Vec::new();
    let mut degs = Vec::new();
    for m in partial_bijections(n) {
        let mut pairs = m.iter().enumerate().filter_map(|(a, b)| b.map(|b| (a, b)));
        match pairs.next() {
            None => {
                maps.push(m);
                degs.push(None);
            }
            Some((a, b)) => {
                let alpha = shift(a, b);
                if pairs.all(|(a, b)| shift(a, b) == alpha) {
                    maps.push(m);
                    degs.push(Some(alpha));
                }
            }
        }
    }
    let index: HashMap<&[Option<usize>], usize> =
        maps.iter().enumerate().map(|(i, m)| (m.as_slice(), i)).collect();
    let zero = index[vec![None; n].as_slice()];
    let compose = |f: &[Option<usize>], g: &[Option<usize>]| -> Vec<Option<usize>> {
        f.iter().map(|a| a.and_then(|a| g[a])).collect()
    };
    let invert = |f: &[Option<usize>]| -> Vec<Option<usize>> {
        let mut out = vec![None; n];
        for (a, b) in f.iter().enumerate() {
            if let Some(b) = b {
                out[*b] = Some(a);
            }
        }
        out
    };
    let mul = maps
        .iter()
        .map(|f| maps.iter().map(|g| index[compose(f, g).as_slice()]).collect())
        .collect();
    let inv = maps.iter().map(|f| index[invert(f).as_slice()]).collect();
    let names = maps.iter().map(|m| partial_bijection_name(x, m)).collect();
    GradedInverseSemigroup::new_unchecked(names, zero, mul, inv, group.clone(), degs)
}

/// `I(X)` on the given points, trivially graded by `group`.
pub fn symmetric_inverse_monoid<G: GradedGroup>(
    points: &[&str],
    group: G,
    max_points: usize,
) -> Result<GradedInverseSemigroup<G>> {
    graded_symmetric_inverse_monoid(&GradedSet::trivial(points, group)?, max_points)
}

/// Name of the pair-groupoid morphism `(x, y)`.
pub fn pair_name(x: &str, y: &str) -> String {
    format!("({x},{y})")
}

/// `X × X` with `d(x,y) = y`, `r(x,y) = x` and `(x,y)` of degree
/// `deg(x)⁻¹deg(y)`.
pub fn pair_groupoid<G: GradedGroup>(x: &GradedSet<G>) -> Result<FiniteGradedGroupoid<G>> {
    let n = x.len();
    let id = |a: usize, b: usize| a * n + b;
    let group = &x.group;
    let mut t = GroupoidTables {
        names: Vec::with_capacity(n * n),
        d: Vec::with_capacity(n * n),
        r: Vec::with_capacity(n * n),
        comp: vec![vec![None; n * n]; n * n],
        inv: Vec::with_capacity(n * n),
        deg: Vec::with_capacity(n * n),
    };
    for a in 0..n {
        for b in 0..n {
            t.names.push(pair_name(&x.points[a], &x.points[b]));
            t.d.push(id(b, b));
            t.r.push(id(a, a));
            t.inv.push(id(b, a));
            t.deg.push(group.product(&group.inverse(&x.deg[a]), &x.deg[b]));
            for c in 0..n {
                t.comp[id(a, b)][id(b, c)] = Some(id(a, c));
            }
        }
    }
    FiniteGradedGroupoid::new(t, group.clone())
}

/// A finite group as a one-object groupoid graded by itself.
pub fn group_groupoid(group: &TableGroup) -> Result<FiniteGradedGroupoid<TableGroup>> {
    let n = group.order();
    let e = group.identity();
    let t = GroupoidTables {
        names: group.names().to_vec(),
        d: vec![e; n],
        r: vec![e; n],
        comp: (0..n)
            .map(|a| (0..n).map(|b| Some(group.product(&a, &b))).collect())
            .collect(),
        inv: (0..n).map(|a| group.inverse(&a)).collect(),
        deg: (0..n).collect(),
    };
    FiniteGradedGroupoid::new(t, group.clone())
}
