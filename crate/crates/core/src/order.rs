//! Finite posets with a bottom element.
//!
//! Posets are stored as explicit relation tables. Subsets of a poset are
//! passed around as sorted index vectors; index order is the canonical order
//! of the poset (for [`FinitePoset::new`] this is the sorted order of the
//! identifiers).

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    names: Vec<String>,
    leq: Vec<Vec<bool>>,
    bottom: usize,
    index: HashMap<String, usize>,
    down_count: Vec<usize>,
    up_count: Vec<usize>,
}

/// A filter together with its least member.
///
/// Every finite filter has a least member: a finite downward directed set
/// contains a lower bound for all of its members.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FilterSet {
    pub members: Vec<usize>,
    pub minimum: usize,
}

impl FilterSet {
    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }
}

impl FinitePoset {
    /// Builds a poset from identifiers and the list of all related pairs
    /// `(a, b)` meaning `a <= b`. Identifiers are sorted canonically.
    pub fn new(elements: Vec<String>, pairs: &[(String, String)], bottom: &str) -> Result<Self> {
        let mut names = elements;
        names.sort();
        if names.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::input("duplicate poset element"));
        }
        let index: HashMap<String, usize> = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i))
            .collect();
        let n = names.len();
        let mut leq = vec![vec![false; n]; n];
        for (a, b) in pairs {
            let ia = *index
                .get(a)
                .ok_or_else(|| Error::input(format!("unknown element {a:?}")))?;
            let ib = *index
                .get(b)
                .ok_or_else(|| Error::input(format!("unknown element {b:?}")))?;
            leq[ia][ib] = true;
        }
        let bottom = *index
            .get(bottom)
            .ok_or_else(|| Error::input(format!("unknown bottom {bottom:?}")))?;
        Self::from_table(names, leq, bottom)
    }

    /// Builds a poset from a relation given as a predicate on indices. Index
    /// order is kept as given.
    pub fn from_relation(
        names: Vec<String>,
        bottom: usize,
        leq: impl Fn(usize, usize) -> bool,
    ) -> Result<Self> {
        let n = names.len();
        let table = (0..n).map(|a| (0..n).map(|b| leq(a, b)).collect()).collect();
        Self::from_table(names, table, bottom)
    }

    fn from_table(names: Vec<String>, leq: Vec<Vec<bool>>, bottom: usize) -> Result<Self> {
        let n = names.len();
        if bottom >= n {
            return Err(Error::input("bottom element out of range"));
        }
        let index: HashMap<String, usize> = names
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        if index.len() != n {
            return Err(Error::input("duplicate poset element"));
        }
        for a in 0..n {
            if !leq[a][a] {
                return Err(Error::input(format!("not reflexive at {}", names[a])));
            }
            if !leq[bottom][a] {
                return Err(Error::input(format!(
                    "bottom {} is not below {}",
                    names[bottom], names[a]
                )));
            }
            for b in 0..n {
                if a != b && leq[a][b] && leq[b][a] {
                    return Err(Error::input(format!(
                        "not antisymmetric at ({}, {})",
                        names[a], names[b]
                    )));
                }
                if !leq[a][b] {
                    continue;
                }
                for c in 0..n {
                    if leq[b][c] && !leq[a][c] {
                        return Err(Error::input(format!(
                            "not transitive at ({}, {}, {})",
                            names[a], names[b], names[c]
                        )));
                    }
                }
            }
        }
        let down_count = (0..n).map(|x| (0..n).filter(|&y| leq[y][x]).count()).collect();
        let up_count = (0..n).map(|x| (0..n).filter(|&y| leq[x][y]).count()).collect();
        Ok(Self {
            names,
            leq,
            bottom,
            index,
            down_count,
            up_count,
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

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::input(format!("unknown element {name:?}")))
    }

    /// Resolves a list of identifiers to a sorted index set.
    pub fn subset(&self, names: &[&str]) -> Result<Vec<usize>> {
        let mut out = names
            .iter()
            .map(|n| self.index_of(n))
            .collect::<Result<Vec<_>>>()?;
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    pub fn subset_names(&self, set: &[usize]) -> Vec<String> {
        set.iter().map(|&i| self.names[i].clone()).collect()
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    /// All related pairs, in canonical order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|&(a, b)| self.leq[a][b])
            .collect()
    }

    pub fn upward_closure(&self, set: &[usize]) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| set.iter().any(|&y| self.leq[y][x]))
            .collect()
    }

    pub fn downward_closure(&self, set: &[usize]) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| set.iter().any(|&y| self.leq[x][y]))
            .collect()
    }

    /// Filters require a nonempty, upward closed set avoiding the bottom in
    /// which every pair has a lower bound inside the set. For a finite set
    /// that is the same as containing a lower bound of all its members.
    pub fn is_filter(&self, set: &[usize]) -> bool {
        if set.is_empty() || set.contains(&self.bottom) {
            return false;
        }
        if self.upward_closure(set).len() != set.len() {
            return false;
        }
        set.iter().any(|&z| set.iter().all(|&x| self.leq[z][x]))
    }

    /// Maximal filters, found by testing every candidate filter and keeping
    /// those that are not strictly contained in another.
    pub fn ultrafilters(&self) -> Vec<FilterSet> {
        let filters: Vec<FilterSet> = (0..self.len())
            .map(|x| (x, self.upward_closure(&[x])))
            .filter(|(_, up)| self.is_filter(up))
            .map(|(x, members)| FilterSet {
                members,
                minimum: x,
            })
            .collect();
        let mut out: Vec<FilterSet> = filters
            .iter()
            .filter(|f| {
                !filters.iter().any(|g| {
                    g.members.len() > f.members.len()
                        && f.members.iter().all(|m| g.contains(*m))
                })
            })
            .cloned()
            .collect();
        out.sort_by_key(|f| f.minimum);
        out
    }

    /// Whether `set` is a maximal filter.
    pub fn is_ultrafilter(&self, set: &[usize]) -> bool {
        if !self.is_filter(set) {
            return false;
        }
        // a strictly larger filter would contain {z}^ for some z below set's minimum
        (0..self.len()).all(|z| {
            if set.contains(&z) {
                return true;
            }
            let up = self.upward_closure(&[z]);
            !(self.is_filter(&up) && set.iter().all(|m| up.contains(m)))
        })
    }

    fn lower_bounds(&self, set: &[usize]) -> Vec<usize> {
        (0..self.len())
            .filter(|&z| set.iter().all(|&x| self.leq[z][x]))
            .collect()
    }

    fn upper_bounds(&self, set: &[usize]) -> Vec<usize> {
        (0..self.len())
            .filter(|&z| set.iter().all(|&x| self.leq[x][z]))
            .collect()
    }

    /// Greatest lower bound of `set`, if it exists.
    pub fn glb(&self, set: &[usize]) -> Option<usize> {
        let lower = self.lower_bounds(set);
        let &m = lower.iter().max_by_key(|&&l| self.down_count[l])?;
        lower.iter().all(|&l| self.leq[l][m]).then_some(m)
    }

    /// Least upper bound of `set`, if it exists.
    pub fn lub(&self, set: &[usize]) -> Option<usize> {
        let upper = self.upper_bounds(set);
        let &m = upper.iter().max_by_key(|&&u| self.up_count[u])?;
        upper.iter().all(|&u| self.leq[m][u]).then_some(m)
    }

    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        self.glb(&[a, b])
    }

    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        self.lub(&[a, b])
    }

    pub fn top(&self) -> Option<usize> {
        (0..self.len()).find(|&t| (0..self.len()).all(|x| self.leq[x][t]))
    }

    /// Whether all binary meets and joins exist.
    pub fn is_lattice(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| (a..n).all(|b| self.meet(a, b).is_some() && self.join(a, b).is_some()))
    }

    /// Whether the poset is a lattice satisfying both distributive laws.
    pub fn is_distributive(&self) -> bool {
        let Some((meet, join)) = self.lattice_tables() else {
            return false;
        };
        let n = self.len();
        let m = |a: usize, b: usize| meet[a * n + b];
        let j = |a: usize, b: usize| join[a * n + b];
        (0..n).all(|x| {
            (0..n).all(|y| {
                (0..n).all(|z| m(x, j(y, z)) == j(m(x, y), m(x, z)) && j(x, m(y, z)) == m(j(x, y), j(x, z)))
            })
        })
    }

    /// Meet and join tables, row-major, when the poset is a lattice.
    fn lattice_tables(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let n = self.len();
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for a in 0..n {
            for b in a..n {
                let (m, j) = (self.meet(a, b)?, self.join(a, b)?);
                meet[a * n + b] = m;
                meet[b * n + a] = m;
                join[a * n + b] = j;
                join[b * n + a] = j;
            }
        }
        Some((meet, join))
    }

    /// Complement of `x` relative to the bottom and top, if one exists.
    pub fn complement(&self, x: usize) -> Option<usize> {
        let top = self.top()?;
        (0..self.len()).find(|&y| {
            self.meet(x, y) == Some(self.bottom) && self.join(x, y) == Some(top)
        })
    }

    pub fn is_boolean_algebra(&self) -> bool {
        let Some(top) = self.top() else {
            return false;
        };
        let n = self.len();
        let Some((meet, join)) = self.lattice_tables() else {
            return false;
        };
        self.is_distributive()
            && (0..n).all(|x| (0..n).any(|y| meet[x * n + y] == self.bottom && join[x * n + y] == top))
    }

    /// The induced subposet on `members`, which must contain the bottom.
    pub fn subposet(&self, members: &[usize]) -> Result<(FinitePoset, Vec<usize>)> {
        let mut members = members.to_vec();
        members.sort_unstable();
        members.dedup();
        let bottom = members
            .iter()
            .position(|&m| m == self.bottom)
            .ok_or_else(|| Error::precondition("subposet must contain the bottom"))?;
        let names = members.iter().map(|&m| self.names[m].clone()).collect();
        let sub = FinitePoset::from_relation(names, bottom, |a, b| {
            self.leq[members[a]][members[b]]
        })?;
        Ok((sub, members))
    }

    /// The principal order ideal `{x}` downward, as a subposet.
    pub fn principal_ideal(&self, x: usize) -> (FinitePoset, Vec<usize>) {
        let down = self.downward_closure(&[x]);
        self.subposet(&down).expect("ideal contains bottom")
    }

    pub fn to_doc(&self) -> PosetDoc {
        PosetDoc {
            elements: self.names.clone(),
            bottom: self.names[self.bottom].clone(),
            leq: self
                .pairs()
                .into_iter()
                .map(|(a, b)| [self.names[a].clone(), self.names[b].clone()])
                .collect(),
        }
    }

    pub fn from_doc(doc: &PosetDoc) -> Result<Self> {
        let pairs: Vec<(String, String)> = doc
            .leq
            .iter()
            .map(|[a, b]| (a.clone(), b.clone()))
            .collect();
        Self::new(doc.elements.clone(), &pairs, &doc.bottom)
    }
}

/// JSON form of a poset: every related pair is listed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetDoc {
    pub elements: Vec<String>,
    pub bottom: String,
    pub leq: Vec<[String; 2]>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(names: &[&str]) -> FinitePoset {
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        FinitePoset::from_relation(names, 0, |a, b| a <= b).unwrap()
    }

    /// {0, p, q, 1}: the power set of a 2-element set.
    fn square() -> FinitePoset {
        let rel = [
            ("0", "p"),
            ("0", "q"),
            ("0", "1"),
            ("p", "1"),
            ("q", "1"),
            ("0", "0"),
            ("p", "p"),
            ("q", "q"),
            ("1", "1"),
        ];
        let pairs: Vec<_> = rel
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect();
        let els = ["0", "p", "q", "1"].iter().map(|s| s.to_string()).collect();
        FinitePoset::new(els, &pairs, "0").unwrap()
    }

    fn diamond_m3() -> FinitePoset {
        let names = ["0", "a", "b", "c", "1"].map(String::from).to_vec();
        FinitePoset::from_relation(names, 0, |x, y| x == y || x == 0 || y == 4).unwrap()
    }

    #[test]
    fn upward_closure_examples() {
        let c = chain(&["0", "a", "b"]);
        assert_eq!(c.upward_closure(&[1]), vec![1, 2]);
        assert!(c.upward_closure(&[]).is_empty());
        let sq = square();
        let p = sq.subset(&["p"]).unwrap();
        let up = sq.upward_closure(&p);
        assert_eq!(sq.subset_names(&up), vec!["1", "p"]);
    }

    #[test]
    fn filter_examples() {
        let sq = square();
        assert!(sq.is_filter(&sq.subset(&["p", "1"]).unwrap()));
        assert!(!sq.is_filter(&sq.subset(&["p", "q", "1"]).unwrap()));
        assert!(!sq.is_filter(&sq.subset(&["0", "1"]).unwrap()));
        assert!(!sq.is_filter(&[]));
    }

    #[test]
    fn ultrafilter_examples() {
        let sq = square();
        let uf: Vec<Vec<String>> = sq
            .ultrafilters()
            .iter()
            .map(|f| sq.subset_names(&f.members))
            .collect();
        assert_eq!(uf, vec![vec!["1", "p"], vec!["1", "q"]]);
        let two = chain(&["0", "a"]);
        let uf = two.ultrafilters();
        assert_eq!(uf.len(), 1);
        assert_eq!(uf[0].members, vec![1]);
        assert!(chain(&["0"]).ultrafilters().is_empty());
    }

    #[test]
    fn boolean_algebra_examples() {
        assert!(square().is_boolean_algebra());
        assert!(!chain(&["0", "a", "1"]).is_boolean_algebra());
        assert_eq!(chain(&["0", "a", "1"]).complement(1), None);
        let m3 = diamond_m3();
        assert!(m3.is_lattice());
        assert!(!m3.is_distributive());
        assert!(!m3.is_boolean_algebra());
        assert!(chain(&["0"]).is_boolean_algebra());
    }

    #[test]
    fn rejects_invalid_relations() {
        let names = ["0", "a", "b"].map(String::from).to_vec();
        // not transitive: 0<=a, a<=b but not 0<=b is also a bottom failure;
        // use a<=b, b<=a for antisymmetry instead
        let err = FinitePoset::from_relation(names.clone(), 0, |x, y| x == y || x == 0 || (x > 0 && y > 0));
        assert!(err.is_err());
        let err = FinitePoset::from_relation(names.clone(), 0, |x, y| x == 0 || (x == 1 && y == 2));
        assert!(err.is_err(), "missing reflexivity");
        let four = ["0", "a", "b", "c"].map(String::from).to_vec();
        let err = FinitePoset::from_relation(four, 0, |x, y| {
            x == y || x == 0 || (x == 1 && y == 2) || (x == 2 && y == 3)
        });
        assert!(matches!(err, Err(Error::Input(m)) if m.contains("transitive")));
    }

    #[test]
    fn unknown_identifier_is_input_error() {
        assert!(matches!(square().subset(&["zz"]), Err(Error::Input(_))));
    }

    #[test]
    fn json_round_trip() {
        let sq = square();
        let text = serde_json::to_string(&sq.to_doc()).unwrap();
        let back = FinitePoset::from_doc(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back, sq);
    }

    #[test]
    fn principal_ideal_of_square_top() {
        let sq = square();
        let top = sq.top().unwrap();
        let (ideal, members) = sq.principal_ideal(top);
        assert_eq!(members.len(), 4);
        assert!(ideal.is_boolean_algebra());
    }
}
