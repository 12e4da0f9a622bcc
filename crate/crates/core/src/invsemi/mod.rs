//! Finite graded inverse semigroups with zero.
//!
//! A semigroup is stored as a total Cayley table over element indices, with
//! the zero filling undefined products. Elements are kept in the sorted
//! order of their identifiers, so index order is the canonical order used
//! by every enumeration in the crate.
//!
//! Apart from [`GradedInverseSemigroup::validate`], methods assume the table
//! is a valid inverse semigroup; construct through
//! [`GradedInverseSemigroup::new`] to have that checked.

mod boolean;
mod morphism;

pub use boolean::{BooleanReport, Quotient};
pub use morphism::SemigroupMorphism;

use crate::error::{Error, Result};
use crate::grading::{AnyGroup, GradedGroup, GroupDoc, ToGroupDoc};
use crate::order::FinitePoset;
use crate::report::Report;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

/// Default bound on the number of semigroup elements.
pub const DEFAULT_MAX_ELEMENTS: usize = 512;

/// Witnesses recorded per axiom before a report is truncated.
const MAX_WITNESSES: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Compatibility {
    /// `s⁻¹t = 0 = st⁻¹`. Orthogonal pairs are also compatible.
    Orthogonal,
    /// `s⁻¹t` and `st⁻¹` are idempotent, and not both zero.
    Compatible,
    Incompatible,
}

impl Compatibility {
    pub fn is_compatible(self) -> bool {
        self != Compatibility::Incompatible
    }
}

#[derive(Debug, Clone)]
pub struct GradedInverseSemigroup<G: GradedGroup> {
    names: Vec<String>,
    index: HashMap<String, usize>,
    zero: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
    group: G,
    deg: Vec<Option<G::Elem>>,
    order: OnceLock<Result<FinitePoset>>,
    meets: OnceLock<Vec<Option<usize>>>,
    joins: OnceLock<Vec<Option<usize>>>,
    idempotent_order: OnceLock<(FinitePoset, Vec<usize>)>,
}

impl<G: GradedGroup> PartialEq for GradedInverseSemigroup<G> {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
            && self.zero == other.zero
            && self.mul == other.mul
            && self.inv == other.inv
            && self.group == other.group
            && self.deg == other.deg
    }
}

impl<G: GradedGroup> GradedInverseSemigroup<G> {
    /// Builds and validates a graded inverse semigroup. `deg` must be `None`
    /// exactly at the zero.
    pub fn new(
        names: Vec<String>,
        zero: usize,
        mul: Vec<Vec<usize>>,
        inv: Vec<usize>,
        group: G,
        deg: Vec<Option<G::Elem>>,
    ) -> Result<Self> {
        let s = Self::new_unchecked(names, zero, mul, inv, group, deg)?;
        let report = s.validate();
        if !report.is_valid() {
            return Err(Error::input(format!("not a graded inverse semigroup: {report}")));
        }
        Ok(s)
    }

    /// Builds the table after shape checks only; use [`validate`](Self::validate)
    /// to check the axioms.
    pub fn new_unchecked(
        names: Vec<String>,
        zero: usize,
        mul: Vec<Vec<usize>>,
        inv: Vec<usize>,
        group: G,
        deg: Vec<Option<G::Elem>>,
    ) -> Result<Self> {
        let n = names.len();
        if n == 0 || zero >= n {
            return Err(Error::input("semigroup needs a zero element"));
        }
        if mul.len() != n || mul.iter().any(|row| row.len() != n) {
            return Err(Error::input("multiplication table is not square"));
        }
        if inv.len() != n || deg.len() != n {
            return Err(Error::input("inverse or degree table has the wrong length"));
        }
        if mul.iter().flatten().chain(&inv).any(|&x| x >= n) {
            return Err(Error::input("table entry out of range"));
        }
        for (i, d) in deg.iter().enumerate() {
            match d {
                None if i != zero => {
                    return Err(Error::input(format!("missing degree for {}", names[i])))
                }
                Some(_) if i == zero => {
                    return Err(Error::input("the zero carries no degree"))
                }
                Some(a) if !group.contains(a) => {
                    return Err(Error::input(format!(
                        "degree of {} is not a group element",
                        names[i]
                    )))
                }
                _ => {}
            }
        }
        // canonical order: sorted identifiers
        let mut perm: Vec<usize> = (0..n).collect();
        perm.sort_by(|&a, &b| names[a].cmp(&names[b]));
        let mut pos = vec![0; n];
        for (new, &old) in perm.iter().enumerate() {
            pos[old] = new;
        }
        let sorted: Vec<String> = perm.iter().map(|&o| names[o].clone()).collect();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::input("duplicate element name"));
        }
        let mut flat = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                flat[pos[a] * n + pos[b]] = pos[mul[a][b]];
            }
        }
        let mut new_inv = vec![0; n];
        let mut new_deg = vec![None; n];
        for old in 0..n {
            new_inv[pos[old]] = pos[inv[old]];
            new_deg[pos[old]] = deg[old].clone();
        }
        let index = sorted
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        Ok(Self {
            names: sorted,
            index,
            zero: pos[zero],
            mul: flat,
            inv: new_inv,
            group,
            deg: new_deg,
            order: OnceLock::new(),
            meets: OnceLock::new(),
            joins: OnceLock::new(),
            idempotent_order: OnceLock::new(),
        })
    }

    /// A semigroup in which every nonzero element has the identity degree.
    pub fn trivially_graded(
        names: Vec<String>,
        zero: usize,
        mul: Vec<Vec<usize>>,
        inv: Vec<usize>,
        group: G,
    ) -> Result<Self> {
        let deg = (0..names.len())
            .map(|i| (i != zero).then(|| group.identity()))
            .collect();
        Self::new(names, zero, mul, inv, group, deg)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, s: usize) -> &str {
        &self.names[s]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::input(format!("unknown element {name:?}")))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.len()
    }

    pub fn nonzero(&self) -> impl Iterator<Item = usize> + '_ {
        self.elements().filter(move |&s| s != self.zero)
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn group(&self) -> &G {
        &self.group
    }

    pub fn mul(&self, s: usize, t: usize) -> usize {
        self.mul[s * self.len() + t]
    }

    pub fn inv(&self, s: usize) -> usize {
        self.inv[s]
    }

    /// Degree of a nonzero element; the zero has none.
    pub fn deg(&self, s: usize) -> Option<&G::Elem> {
        self.deg[s].as_ref()
    }

    pub fn degree_name(&self, s: usize) -> Option<String> {
        self.deg(s).map(|d| self.group.format(d))
    }

    /// Whether the nonzero members of `set` share a degree.
    pub fn is_homogeneous(&self, set: &[usize]) -> bool {
        let mut degs = set.iter().filter_map(|&s| self.deg(s));
        match degs.next() {
            None => true,
            Some(first) => degs.all(|d| d == first),
        }
    }

    /// Whether every nonzero element has the identity degree.
    pub fn is_trivially_graded(&self) -> bool {
        self.nonzero()
            .all(|s| self.group.is_identity(self.deg(s).expect("nonzero")))
    }

    pub fn is_idempotent(&self, s: usize) -> bool {
        self.mul(s, s) == s
    }

    pub fn idempotents(&self) -> Vec<usize> {
        self.elements().filter(|&s| self.is_idempotent(s)).collect()
    }

    /// `s⁻¹s`
    pub fn domain(&self, s: usize) -> usize {
        self.mul(self.inv(s), s)
    }

    /// `ss⁻¹`
    pub fn range(&self, s: usize) -> usize {
        self.mul(s, self.inv(s))
    }

    fn names_of(&self, xs: &[usize]) -> Vec<String> {
        xs.iter().map(|&x| self.names[x].clone()).collect()
    }

    /// Checks every inverse-semigroup and grading axiom, recording witnesses.
    pub fn validate(&self) -> Report {
        let mut report = Report::new();
        let n = self.len();
        let z = self.zero;
        let mut count: BTreeMap<&'static str, usize> = BTreeMap::new();
        let mut push = |report: &mut Report, axiom: &'static str, w: Vec<String>| {
            let c = count.entry(axiom).or_default();
            *c += 1;
            if *c <= MAX_WITNESSES {
                report.push(axiom, w);
            }
        };
        for s in 0..n {
            if self.mul(z, s) != z || self.mul(s, z) != z {
                push(&mut report, "zero-absorbs", self.names_of(&[s]));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        push(&mut report, "associativity", self.names_of(&[a, b, c]));
                    }
                }
            }
        }
        for s in 0..n {
            let t = self.inv(s);
            if self.mul(self.mul(s, t), s) != s || self.mul(self.mul(t, s), t) != t {
                push(&mut report, "inverse", self.names_of(&[s, t]));
            }
            for u in 0..n {
                if u != t && self.mul(self.mul(s, u), s) == s && self.mul(self.mul(u, s), u) == u
                {
                    push(&mut report, "inverse-uniqueness", self.names_of(&[s, t, u]));
                }
            }
        }
        let idem = self.idempotents();
        for &e in &idem {
            for &f in &idem {
                if e < f && self.mul(e, f) != self.mul(f, e) {
                    push(&mut report, "idempotents-commute", self.names_of(&[e, f]));
                }
            }
        }
        for s in 0..n {
            let Some(ds) = self.deg(s) else { continue };
            if self.is_idempotent(s) && !self.group.is_identity(ds) {
                push(&mut report, "degree-idempotent", self.names_of(&[s]));
            }
            if let Some(di) = self.deg(self.inv(s)) {
                if *di != self.group.inverse(ds) {
                    push(&mut report, "degree-inverse", self.names_of(&[s]));
                }
            }
            for t in 0..n {
                let st = self.mul(s, t);
                if st == z {
                    continue;
                }
                let (Some(dt), Some(dst)) = (self.deg(t), self.deg(st)) else {
                    continue;
                };
                if *dst != self.group.product(ds, dt) {
                    push(&mut report, "degree-multiplicative", self.names_of(&[s, t]));
                }
            }
        }
        for (axiom, c) in count {
            if c > MAX_WITNESSES {
                report.note(format!("{axiom}: {c} failures, first {MAX_WITNESSES} listed"));
            }
        }
        report
    }

    /// The natural partial order: `s <= t` iff `s = tu` for an idempotent `u`.
    pub fn natural_order(&self) -> Result<&FinitePoset> {
        self.order
            .get_or_init(|| {
                let idem = self.idempotents();
                FinitePoset::from_relation(self.names.clone(), self.zero, |s, t| {
                    idem.iter().any(|&u| self.mul(t, u) == s)
                })
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    pub(crate) fn order(&self) -> &FinitePoset {
        self.natural_order()
            .expect("natural order of an invalid inverse semigroup")
    }

    pub fn leq(&self, s: usize, t: usize) -> bool {
        self.order().leq(s, t)
    }

    /// `E(S)` with the induced order, and the semigroup index of each of its
    /// elements.
    pub fn idempotent_order(&self) -> &(FinitePoset, Vec<usize>) {
        self.idempotent_order.get_or_init(|| {
            self.order()
                .subposet(&self.idempotents())
                .expect("zero is idempotent")
        })
    }

    pub fn compatibility(&self, s: usize, t: usize) -> Compatibility {
        let a = self.mul(self.inv(s), t);
        let b = self.mul(s, self.inv(t));
        if a == self.zero && b == self.zero {
            Compatibility::Orthogonal
        } else if self.is_idempotent(a) && self.is_idempotent(b) {
            Compatibility::Compatible
        } else {
            Compatibility::Incompatible
        }
    }

    pub fn is_compatible_set(&self, set: &[usize]) -> bool {
        set.iter().enumerate().all(|(i, &s)| {
            set[i + 1..]
                .iter()
                .all(|&t| self.compatibility(s, t).is_compatible())
        })
    }

    fn meet_table(&self) -> &[Option<usize>] {
        self.meets.get_or_init(|| {
            let n = self.len();
            let order = self.order();
            let mut table = vec![None; n * n];
            for s in 0..n {
                for t in s..n {
                    let m = order.meet(s, t);
                    table[s * n + t] = m;
                    table[t * n + s] = m;
                }
            }
            table
        })
    }

    /// Greatest lower bound in the natural order.
    pub fn meet(&self, s: usize, t: usize) -> Option<usize> {
        self.meet_table()[s * self.len() + t]
    }

    /// Whether every pair of elements has a meet.
    pub fn is_meet_semigroup(&self) -> bool {
        self.meet_table().iter().all(Option::is_some)
    }

    fn join_table(&self) -> &[Option<usize>] {
        self.joins.get_or_init(|| {
            let n = self.len();
            let order = self.order();
            let mut table = vec![None; n * n];
            for s in 0..n {
                for t in s..n {
                    let j = order.join(s, t);
                    table[s * n + t] = j;
                    table[t * n + s] = j;
                }
            }
            table
        })
    }

    /// Least upper bound of `set` in the natural order, with no precondition.
    pub fn join(&self, set: &[usize]) -> Option<usize> {
        match *set {
            [s] => Some(s),
            [s, t] => self.join_table()[s * self.len() + t],
            _ => self.order().lub(set),
        }
    }

    /// Join of a nonempty compatible homogeneous set.
    pub fn join_compatible(&self, set: &[usize]) -> Result<Option<usize>> {
        if set.is_empty() {
            return Err(Error::precondition("join of an empty set"));
        }
        if !self.is_compatible_set(set) {
            return Err(Error::precondition(format!(
                "set {{{}}} is not compatible",
                self.names_of(set).join(", ")
            )));
        }
        if !self.is_homogeneous(set) {
            return Err(Error::precondition(format!(
                "set {{{}}} is not homogeneous",
                self.names_of(set).join(", ")
            )));
        }
        Ok(self.join(set))
    }

    /// Elements of degree `ε` together with the zero, as a subsemigroup.
    pub fn epsilon_part(&self) -> Vec<usize> {
        self.elements()
            .filter(|&s| self.deg(s).is_none_or(|d| self.group.is_identity(d)))
            .collect()
    }

    /// The subsemigroup on `members`, which must be closed under products
    /// and inverses and contain the zero. Returns the new semigroup and, for
    /// each of its elements, the index it had here.
    pub fn subsemigroup(&self, members: &[usize]) -> Result<(Self, Vec<usize>)> {
        let mut members = members.to_vec();
        members.sort_unstable();
        members.dedup();
        let pos: HashMap<usize, usize> = members.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let find = |x: usize| {
            pos.get(&x)
                .copied()
                .ok_or_else(|| Error::precondition(format!("subset not closed at {}", self.names[x])))
        };
        let zero = find(self.zero)?;
        let mut mul = Vec::with_capacity(members.len());
        for &a in &members {
            mul.push(
                members
                    .iter()
                    .map(|&b| find(self.mul(a, b)))
                    .collect::<Result<Vec<_>>>()?,
            );
        }
        let inv = members
            .iter()
            .map(|&a| find(self.inv(a)))
            .collect::<Result<Vec<_>>>()?;
        let names = members.iter().map(|&m| self.names[m].clone()).collect();
        let deg = members.iter().map(|&m| self.deg[m].clone()).collect();
        // members are sorted and names are sorted, so indices line up
        let sub = Self::new_unchecked(names, zero, mul, inv, self.group.clone(), deg)?;
        Ok((sub, members))
    }

    /// Same table with every nonzero degree replaced by the identity.
    pub fn with_trivial_grading(&self) -> Self {
        let mut out = self.clone();
        out.deg = self
            .elements()
            .map(|s| (s != self.zero).then(|| self.group.identity()))
            .collect();
        out
    }

    /// Whether `f` (indexed by this semigroup) is an isomorphism onto `other`
    /// preserving products, inverses and degrees.
    pub fn is_isomorphism_to(&self, other: &Self, f: &[usize]) -> bool {
        let n = self.len();
        if other.len() != n || f.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &x in f {
            if x >= n || seen[x] {
                return false;
            }
            seen[x] = true;
        }
        self.elements().all(|s| {
            self.deg(s) == other.deg(f[s])
                && other.inv(f[s]) == f[self.inv(s)]
                && self.elements().all(|t| f[self.mul(s, t)] == other.mul(f[s], f[t]))
        })
    }

    pub fn to_doc(&self) -> SemigroupDoc
    where
        G: ToGroupDoc,
    {
        let n = self.len();
        SemigroupDoc {
            elements: self.names.clone(),
            zero: self.names[self.zero].clone(),
            mul: (0..n)
                .map(|a| (0..n).map(|b| self.names[self.mul(a, b)].clone()).collect())
                .collect(),
            inv: self.inv.iter().map(|&i| self.names[i].clone()).collect(),
            group: self.group.to_doc(),
            deg: self
                .elements()
                .filter_map(|s| self.degree_name(s).map(|d| (self.names[s].clone(), d)))
                .collect(),
        }
    }
}

impl GradedInverseSemigroup<AnyGroup> {
    /// Loads and validates a semigroup from its JSON form.
    pub fn from_doc(doc: &SemigroupDoc, max_elements: usize) -> Result<Self> {
        let s = Self::from_doc_unchecked(doc, max_elements)?;
        let report = s.validate();
        if !report.is_valid() {
            return Err(Error::input(format!("not a graded inverse semigroup: {report}")));
        }
        Ok(s)
    }

    /// Loads a semigroup after shape checks only.
    pub fn from_doc_unchecked(doc: &SemigroupDoc, max_elements: usize) -> Result<Self> {
        let n = doc.elements.len();
        if n > max_elements {
            return Err(Error::resource("semigroup elements", max_elements));
        }
        let group = AnyGroup::from_doc(&doc.group)?;
        let idx: HashMap<&str, usize> = doc
            .elements
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i))
            .collect();
        let find = |s: &String| {
            idx.get(s.as_str())
                .copied()
                .ok_or_else(|| Error::input(format!("unknown element {s:?}")))
        };
        let zero = find(&doc.zero)?;
        if doc.mul.len() != n {
            return Err(Error::input("multiplication table has the wrong number of rows"));
        }
        let mul = doc
            .mul
            .iter()
            .map(|row| row.iter().map(find).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let inv = doc.inv.iter().map(find).collect::<Result<Vec<_>>>()?;
        let mut deg = vec![None; n];
        for (s, d) in &doc.deg {
            deg[find(s)?] = Some(group.parse(d)?);
        }
        Self::new_unchecked(doc.elements.clone(), zero, mul, inv, group, deg)
    }
}

/// JSON form of a graded inverse semigroup. Identifiers are sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupDoc {
    pub elements: Vec<String>,
    pub zero: String,
    pub mul: Vec<Vec<String>>,
    pub inv: Vec<String>,
    pub group: GroupDoc,
    pub deg: BTreeMap<String, String>,
}
