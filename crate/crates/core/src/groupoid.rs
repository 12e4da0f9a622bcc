//! Finite graded groupoids with the discrete topology.
//!
//! Morphisms are indexed in the sorted order of their identifiers. Objects
//! are identified with their unit morphisms, so `d` and `r` take values in
//! morphism indices.

use crate::error::{Error, Result};
use crate::grading::{AnyGroup, GradedGroup, GroupDoc, ToGroupDoc};
use crate::report::Report;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

/// Default bound on the number of slices an enumeration may produce.
pub const DEFAULT_MAX_SLICES: usize = 20_000;

/// Default bound on the number of groupoid morphisms accepted from input.
pub const DEFAULT_MAX_MORPHISMS: usize = 256;

#[derive(Debug, Clone, PartialEq)]
pub struct FiniteGradedGroupoid<G: GradedGroup> {
    names: Vec<String>,
    index: HashMap<String, usize>,
    d: Vec<usize>,
    r: Vec<usize>,
    comp: Vec<Option<usize>>,
    inv: Vec<usize>,
    group: G,
    deg: Vec<G::Elem>,
}

/// Tables describing a groupoid before canonical reindexing.
#[derive(Debug, Clone)]
pub struct GroupoidTables<E> {
    pub names: Vec<String>,
    pub d: Vec<usize>,
    pub r: Vec<usize>,
    /// `comp[x][y]` is `x·y` when defined.
    pub comp: Vec<Vec<Option<usize>>>,
    pub inv: Vec<usize>,
    pub deg: Vec<E>,
}

impl<G: GradedGroup> FiniteGradedGroupoid<G> {
    /// Builds and validates a graded groupoid.
    pub fn new(tables: GroupoidTables<G::Elem>, group: G) -> Result<Self> {
        let g = Self::new_unchecked(tables, group)?;
        let report = g.validate();
        if !report.is_valid() {
            return Err(Error::input(format!("not a graded groupoid: {report}")));
        }
        Ok(g)
    }

    /// Builds a groupoid after shape checks only.
    pub fn new_unchecked(tables: GroupoidTables<G::Elem>, group: G) -> Result<Self> {
        let GroupoidTables {
            names,
            d,
            r,
            comp,
            inv,
            deg,
        } = tables;
        let n = names.len();
        if d.len() != n || r.len() != n || inv.len() != n || deg.len() != n {
            return Err(Error::input("groupoid tables have inconsistent lengths"));
        }
        if comp.len() != n || comp.iter().any(|row| row.len() != n) {
            return Err(Error::input("composition table is not square"));
        }
        let in_range = |x: &usize| *x < n;
        if !d.iter().chain(&r).chain(&inv).all(in_range)
            || !comp.iter().flatten().flatten().all(in_range)
        {
            return Err(Error::input("table entry out of range"));
        }
        if let Some(x) = deg.iter().position(|a| !group.contains(a)) {
            return Err(Error::input(format!(
                "degree of {} is not a group element",
                names[x]
            )));
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| names[a].cmp(&names[b]));
        let mut pos = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            pos[old] = new;
        }
        let mut index = HashMap::with_capacity(n);
        for (new, &old) in order.iter().enumerate() {
            if index.insert(names[old].clone(), new).is_some() {
                return Err(Error::input(format!("duplicate morphism {}", names[old])));
            }
        }
        let mut flat = vec![None; n * n];
        for (x, row) in comp.iter().enumerate() {
            for (y, z) in row.iter().enumerate() {
                flat[pos[x] * n + pos[y]] = z.map(|z| pos[z]);
            }
        }
        Ok(Self {
            names: order.iter().map(|&o| names[o].clone()).collect(),
            index,
            d: order.iter().map(|&o| pos[d[o]]).collect(),
            r: order.iter().map(|&o| pos[r[o]]).collect(),
            comp: flat,
            inv: order.iter().map(|&o| pos[inv[o]]).collect(),
            deg: order.iter().map(|&o| deg[o].clone()).collect(),
            group,
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::input(format!("unknown morphism {name}")))
    }

    pub fn morphisms(&self) -> std::ops::Range<usize> {
        0..self.len()
    }

    /// The unit space, in canonical order.
    pub fn objects(&self) -> Vec<usize> {
        self.morphisms().filter(|&x| self.is_unit(x)).collect()
    }

    pub fn is_unit(&self, x: usize) -> bool {
        self.d[x] == x
    }

    pub fn group(&self) -> &G {
        &self.group
    }

    pub fn d(&self, x: usize) -> usize {
        self.d[x]
    }

    pub fn r(&self, x: usize) -> usize {
        self.r[x]
    }

    pub fn comp(&self, x: usize, y: usize) -> Option<usize> {
        self.comp[x * self.len() + y]
    }

    pub fn inv(&self, x: usize) -> usize {
        self.inv[x]
    }

    pub fn deg(&self, x: usize) -> &G::Elem {
        &self.deg[x]
    }

    /// Checks the groupoid and grading axioms.
    pub fn validate(&self) -> Report {
        let mut report = Report::new();
        let name = |x: usize| self.names[x].clone();
        for x in self.morphisms() {
            let (d, r) = (self.d[x], self.r[x]);
            if !self.is_unit(d) || self.r[d] != d || !self.is_unit(r) || self.r[r] != r {
                report.push("domain-range-are-units", [name(x)]);
            }
        }
        if !report.is_valid() {
            return report;
        }
        for x in self.morphisms() {
            for y in self.morphisms() {
                let composable = self.d[x] == self.r[y];
                match self.comp(x, y) {
                    Some(_) if !composable => report.push("composable-iff-matching", [name(x), name(y)]),
                    None if composable => report.push("composable-iff-matching", [name(x), name(y)]),
                    Some(z) => {
                        if self.d[z] != self.d[y] || self.r[z] != self.r[x] {
                            report.push("composite-endpoints", [name(x), name(y)]);
                        }
                        let expected = self.group.product(&self.deg[x], &self.deg[y]);
                        if self.deg[z] != expected {
                            report.push("degree-functorial", [name(x), name(y)]);
                        }
                    }
                    None => {}
                }
            }
        }
        if !report.is_valid() {
            return report;
        }
        for x in self.morphisms() {
            for y in self.morphisms() {
                let Some(xy) = self.comp(x, y) else { continue };
                for z in self.morphisms() {
                    let Some(yz) = self.comp(y, z) else { continue };
                    if self.comp(xy, z) != self.comp(x, yz) {
                        report.push("associative", [name(x), name(y), name(z)]);
                    }
                }
            }
        }
        for x in self.morphisms() {
            let i = self.inv[x];
            if self.comp(x, i) != Some(self.r[x]) || self.comp(i, x) != Some(self.d[x]) {
                report.push("inverse", [name(x)]);
            }
            if self.comp(self.r[x], x) != Some(x) || self.comp(x, self.d[x]) != Some(x) {
                report.push("units-are-identities", [name(x)]);
            }
            if self.is_unit(x) && !self.group.is_identity(&self.deg[x]) {
                report.push("unit-degree", [name(x)]);
            }
        }
        report.note("discrete topology: every singleton is a compact open slice, so the groupoid is étale, ample and Hausdorff");
        report
    }

    /// Whether `d` and `r` are injective on `set`.
    pub fn is_slice(&self, set: &[usize]) -> bool {
        let mut ds = vec![false; self.len()];
        let mut rs = vec![false; self.len()];
        for &x in set {
            if std::mem::replace(&mut ds[self.d[x]], true) || std::mem::replace(&mut rs[self.r[x]], true) {
                return false;
            }
        }
        true
    }

    /// Whether all members share a degree; the empty set qualifies.
    pub fn is_homogeneous(&self, set: &[usize]) -> bool {
        set.windows(2).all(|w| self.deg[w[0]] == self.deg[w[1]])
    }

    /// The common degree of a nonempty homogeneous set.
    pub fn homogeneous_degree_of(&self, set: &[usize]) -> Option<&G::Elem> {
        let first = set.first()?;
        self.is_homogeneous(set).then(|| &self.deg[*first])
    }

    fn require_slice(&self, set: &[usize]) -> Result<()> {
        if set.iter().any(|&x| x >= self.len()) {
            return Err(Error::input("slice member out of range"));
        }
        if !self.is_slice(set) {
            let names: Vec<&str> = set.iter().map(|&x| self.name(x)).collect();
            return Err(Error::precondition(format!("{{{}}} is not a slice", names.join(","))));
        }
        Ok(())
    }

    /// `XY = {xy | d(x) = r(y)}`, sorted.
    pub fn slice_product(&self, x: &[usize], y: &[usize]) -> Result<Vec<usize>> {
        self.require_slice(x)?;
        self.require_slice(y)?;
        let mut out: Vec<usize> = x
            .iter()
            .flat_map(|&a| y.iter().filter_map(move |&b| self.comp(a, b)))
            .collect();
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    pub fn slice_inverse(&self, x: &[usize]) -> Result<Vec<usize>> {
        self.require_slice(x)?;
        let mut out: Vec<usize> = x.iter().map(|&a| self.inv[a]).collect();
        out.sort_unstable();
        Ok(out)
    }

    /// All slices (homogeneous ones only, if asked), sorted by size and then
    /// lexicographically. Fails once more than `guard` slices are found.
    pub fn enumerate_slices(&self, homogeneous_only: bool, guard: usize) -> Result<Vec<Vec<usize>>> {
        let mut out = vec![Vec::new()];
        let mut current = Vec::new();
        let mut used_d = vec![false; self.len()];
        let mut used_r = vec![false; self.len()];
        let mut st = SliceSearch {
            g: self,
            homogeneous_only,
            guard,
            out: &mut out,
            current: &mut current,
            used_d: &mut used_d,
            used_r: &mut used_r,
        };
        st.extend(0)?;
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(out)
    }

    /// The subgroupoid of morphisms of degree `ε`.
    pub fn epsilon_part(&self) -> Self {
        let keep: Vec<usize> = self
            .morphisms()
            .filter(|&x| self.group.is_identity(&self.deg[x]))
            .collect();
        self.restrict(&keep)
    }

    /// The full subgroupoid on `keep`, which must be closed under the
    /// structure maps.
    fn restrict(&self, keep: &[usize]) -> Self {
        let pos: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let tables = GroupoidTables {
            names: keep.iter().map(|&x| self.names[x].clone()).collect(),
            d: keep.iter().map(|&x| pos[&self.d[x]]).collect(),
            r: keep.iter().map(|&x| pos[&self.r[x]]).collect(),
            comp: keep
                .iter()
                .map(|&x| keep.iter().map(|&y| self.comp(x, y).map(|z| pos[&z])).collect())
                .collect(),
            inv: keep.iter().map(|&x| pos[&self.inv[x]]).collect(),
            deg: keep.iter().map(|&x| self.deg[x].clone()).collect(),
        };
        Self::new_unchecked(tables, self.group.clone()).expect("restriction of a valid groupoid")
    }

    /// Disjoint union of groupoids over one group. A morphism `x` of part
    /// `i` is named `i/x`.
    pub fn disjoint_union(parts: &[&Self]) -> Result<Self> {
        let Some(first) = parts.first() else {
            return Err(Error::precondition("disjoint union of no groupoids"));
        };
        if parts.iter().any(|p| p.group != first.group) {
            return Err(Error::precondition("groupoids are graded by different groups"));
        }
        let total: usize = parts.iter().map(|p| p.len()).sum();
        let mut tables = GroupoidTables {
            names: Vec::with_capacity(total),
            d: Vec::with_capacity(total),
            r: Vec::with_capacity(total),
            comp: Vec::with_capacity(total),
            inv: Vec::with_capacity(total),
            deg: Vec::with_capacity(total),
        };
        let mut offset = 0;
        for (i, p) in parts.iter().enumerate() {
            for x in p.morphisms() {
                tables.names.push(format!("{i}/{}", p.names[x]));
                tables.d.push(offset + p.d[x]);
                tables.r.push(offset + p.r[x]);
                tables.inv.push(offset + p.inv[x]);
                tables.deg.push(p.deg[x].clone());
                let mut row = vec![None; total];
                for y in p.morphisms() {
                    row[offset + y] = p.comp(x, y).map(|z| offset + z);
                }
                tables.comp.push(row);
            }
            offset += p.len();
        }
        Self::new(tables, first.group.clone())
    }

    pub fn to_doc(&self) -> GroupoidDoc
    where
        G: ToGroupDoc,
    {
        let by_name = |v: &[usize]| -> BTreeMap<String, String> {
            self.morphisms()
                .map(|x| (self.names[x].clone(), self.names[v[x]].clone()))
                .collect()
        };
        let mut comp = Vec::new();
        for x in self.morphisms() {
            for y in self.morphisms() {
                if let Some(z) = self.comp(x, y) {
                    comp.push([self.names[x].clone(), self.names[y].clone(), self.names[z].clone()]);
                }
            }
        }
        GroupoidDoc {
            morphisms: self.names.clone(),
            objects: self.objects().into_iter().map(|x| self.names[x].clone()).collect(),
            d: by_name(&self.d),
            r: by_name(&self.r),
            comp,
            inv: by_name(&self.inv),
            group: self.group.to_doc(),
            deg: self
                .morphisms()
                .map(|x| (self.names[x].clone(), self.group.format(&self.deg[x])))
                .collect(),
        }
    }

    /// Graphviz rendering: objects as nodes, non-unit morphisms as edges
    /// from domain to range labelled `name:degree`.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph groupoid {\n");
        for u in self.objects() {
            let _ = writeln!(out, "  {:?};", self.names[u]);
        }
        for x in self.morphisms().filter(|&x| !self.is_unit(x)) {
            let _ = writeln!(
                out,
                "  {:?} -> {:?} [label={:?}];",
                self.names[self.d[x]],
                self.names[self.r[x]],
                format!("{}:{}", self.names[x], self.group.format(&self.deg[x]))
            );
        }
        out.push_str("}\n");
        out
    }
}

struct SliceSearch<'s, G: GradedGroup> {
    g: &'s FiniteGradedGroupoid<G>,
    homogeneous_only: bool,
    guard: usize,
    out: &'s mut Vec<Vec<usize>>,
    current: &'s mut Vec<usize>,
    used_d: &'s mut Vec<bool>,
    used_r: &'s mut Vec<bool>,
}

impl<G: GradedGroup> SliceSearch<'_, G> {
    fn extend(&mut self, from: usize) -> Result<()> {
        let g = self.g;
        for x in from..g.len() {
            if self.used_d[g.d[x]] || self.used_r[g.r[x]] {
                continue;
            }
            if self.homogeneous_only {
                if let Some(&first) = self.current.first() {
                    if g.deg[first] != g.deg[x] {
                        continue;
                    }
                }
            }
            self.current.push(x);
            if self.out.len() >= self.guard {
                return Err(Error::resource("slices", self.guard));
            }
            self.out.push(self.current.clone());
            self.used_d[g.d[x]] = true;
            self.used_r[g.r[x]] = true;
            self.extend(x + 1)?;
            self.used_d[g.d[x]] = false;
            self.used_r[g.r[x]] = false;
            self.current.pop();
        }
        Ok(())
    }
}

impl FiniteGradedGroupoid<AnyGroup> {
    /// Loads and validates a groupoid from its JSON form.
    pub fn from_doc(doc: &GroupoidDoc, max_morphisms: usize) -> Result<Self> {
        let g = Self::from_doc_unchecked(doc, max_morphisms)?;
        let report = g.validate();
        if !report.is_valid() {
            return Err(Error::input(format!("not a graded groupoid: {report}")));
        }
        Ok(g)
    }

    /// Loads a groupoid after shape checks only.
    pub fn from_doc_unchecked(doc: &GroupoidDoc, max_morphisms: usize) -> Result<Self> {
        let n = doc.morphisms.len();
        if n > max_morphisms {
            return Err(Error::resource("groupoid morphisms", max_morphisms));
        }
        let group = AnyGroup::from_doc(&doc.group)?;
        let idx: HashMap<&str, usize> = doc
            .morphisms
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i))
            .collect();
        let find = |s: &str| {
            idx.get(s)
                .copied()
                .ok_or_else(|| Error::input(format!("unknown morphism {s}")))
        };
        let table = |m: &BTreeMap<String, String>, what: &str| -> Result<Vec<usize>> {
            doc.morphisms
                .iter()
                .map(|x| {
                    let v = m
                        .get(x)
                        .ok_or_else(|| Error::input(format!("{what} missing for {x}")))?;
                    find(v)
                })
                .collect()
        };
        let d = table(&doc.d, "domain")?;
        let r = table(&doc.r, "range")?;
        let inv = table(&doc.inv, "inverse")?;
        let mut comp = vec![vec![None; n]; n];
        for [x, y, z] in &doc.comp {
            let (x, y) = (find(x)?, find(y)?);
            if comp[x][y].replace(find(z)?).is_some() {
                return Err(Error::input(format!(
                    "composite of {} and {} given twice",
                    doc.morphisms[x], doc.morphisms[y]
                )));
            }
        }
        let deg = doc
            .morphisms
            .iter()
            .map(|x| {
                let v = doc
                    .deg
                    .get(x)
                    .ok_or_else(|| Error::input(format!("degree missing for {x}")))?;
                group.parse(v)
            })
            .collect::<Result<Vec<_>>>()?;
        let mut objects: Vec<usize> = doc.objects.iter().map(|o| find(o)).collect::<Result<_>>()?;
        objects.sort_unstable();
        let g = Self::new_unchecked(
            GroupoidTables {
                names: doc.morphisms.clone(),
                d,
                r,
                comp,
                inv,
                deg,
            },
            group,
        )?;
        let mut expected: Vec<usize> = g
            .objects()
            .into_iter()
            .map(|u| idx[g.name(u)])
            .collect();
        expected.sort_unstable();
        if objects != expected {
            return Err(Error::input("listed objects differ from the unit space"));
        }
        Ok(g)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupoidDoc {
    pub morphisms: Vec<String>,
    pub objects: Vec<String>,
    pub d: BTreeMap<String, String>,
    pub r: BTreeMap<String, String>,
    pub comp: Vec<[String; 3]>,
    pub inv: BTreeMap<String, String>,
    pub group: GroupDoc,
    pub deg: BTreeMap<String, String>,
}

/// A functor between graded groupoids over the same group.
#[derive(Debug, Clone)]
pub struct GroupoidMorphism<'a, G: GradedGroup> {
    pub source: &'a FiniteGradedGroupoid<G>,
    pub target: &'a FiniteGradedGroupoid<G>,
    pub map: Vec<usize>,
}

impl<'a, G: GradedGroup> GroupoidMorphism<'a, G> {
    pub fn new(
        source: &'a FiniteGradedGroupoid<G>,
        target: &'a FiniteGradedGroupoid<G>,
        map: Vec<usize>,
    ) -> Result<Self> {
        if map.len() != source.len() || map.iter().any(|&x| x >= target.len()) {
            return Err(Error::input("functor table does not fit its source and target"));
        }
        Ok(Self { source, target, map })
    }

    pub fn identity(g: &'a FiniteGradedGroupoid<G>) -> Self {
        Self {
            source: g,
            target: g,
            map: g.morphisms().collect(),
        }
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &GroupoidMorphism<'a, G>) -> Result<Self> {
        if self.target != other.source {
            return Err(Error::precondition("functors are not composable"));
        }
        Ok(Self {
            source: self.source,
            target: other.target,
            map: self.map.iter().map(|&x| other.map[x]).collect(),
        })
    }

    /// Checks that the map is a degree-preserving covering functor.
    pub fn validate(&self) -> Report {
        let (g, h, f) = (self.source, self.target, &self.map);
        let mut report = Report::new();
        if g.group != h.group {
            report.push("same-group", Vec::<String>::new());
            return report;
        }
        for x in g.morphisms() {
            if h.d[f[x]] != f[g.d[x]] || h.r[f[x]] != f[g.r[x]] {
                report.push("functorial", [g.name(x)]);
            }
            if g.deg[x] != h.deg[f[x]] {
                report.push("degree-preserving", [g.name(x)]);
            }
            for y in g.morphisms() {
                if let Some(xy) = g.comp(x, y) {
                    if h.comp(f[x], f[y]) != Some(f[xy]) {
                        report.push("functorial", [g.name(x), g.name(y)]);
                    }
                }
            }
        }
        for x in g.morphisms() {
            for y in x + 1..g.len() {
                if f[x] == f[y] && g.d[x] == g.d[y] {
                    report.push("star-injective", [g.name(x), g.name(y)]);
                }
            }
        }
        for u in g.objects() {
            for z in h.morphisms().filter(|&z| h.d[z] == f[u]) {
                if !g.morphisms().any(|x| g.d[x] == u && f[x] == z) {
                    report.push("star-surjective", [g.name(u), h.name(z)]);
                }
            }
        }
        report.note("discrete topology: continuity and properness hold automatically");
        report
    }

    /// Whether the functor is a bijective covering functor.
    pub fn is_isomorphism(&self) -> bool {
        let mut seen = vec![false; self.target.len()];
        self.map.len() == self.target.len()
            && self.map.iter().all(|&x| !std::mem::replace(&mut seen[x], true))
            && self.validate().is_valid()
    }
}
