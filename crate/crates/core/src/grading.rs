//! Grading groups.
//!
//! Everything else in the crate is generic over [`GradedGroup`]; nothing
//! assumes the group is abelian. Two realizations are provided: free abelian
//! groups of integer vectors and finite groups given by a Cayley table.
//! [`AnyGroup`] wraps both for data loaded at run time.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt::Debug;
use std::hash::Hash;

pub trait GradedGroup: Clone + Debug + PartialEq {
    type Elem: Clone + Debug + Eq + Ord + Hash;

    fn identity(&self) -> Self::Elem;
    fn product(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inverse(&self, a: &Self::Elem) -> Self::Elem;
    /// Whether `a` is an element of this group.
    fn contains(&self, a: &Self::Elem) -> bool;
    fn format(&self, a: &Self::Elem) -> String;
    fn parse(&self, s: &str) -> Result<Self::Elem>;

    fn is_identity(&self, a: &Self::Elem) -> bool {
        *a == self.identity()
    }
}

/// Result of [`group_element_ops`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementOps<E> {
    pub product: E,
    pub inverse: E,
    pub is_identity: bool,
}

/// Product `ab`, inverse of `a`, and whether `a` is the identity, after
/// checking both arguments belong to `group`.
pub fn group_element_ops<G: GradedGroup>(
    group: &G,
    a: &G::Elem,
    b: &G::Elem,
) -> Result<ElementOps<G::Elem>> {
    for x in [a, b] {
        if !group.contains(x) {
            return Err(Error::input(format!("{x:?} is not a group element")));
        }
    }
    Ok(ElementOps {
        product: group.product(a, b),
        inverse: group.inverse(a),
        is_identity: group.is_identity(a),
    })
}

/// The free abelian group of integer vectors of a fixed rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntVectorGroup {
    pub rank: usize,
}

impl IntVectorGroup {
    pub fn new(rank: usize) -> Self {
        Self { rank }
    }

    /// The rank-one group of integers.
    pub fn integers() -> Self {
        Self { rank: 1 }
    }
}

impl GradedGroup for IntVectorGroup {
    type Elem = Vec<i64>;

    fn identity(&self) -> Vec<i64> {
        vec![0; self.rank]
    }

    fn product(&self, a: &Vec<i64>, b: &Vec<i64>) -> Vec<i64> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    fn inverse(&self, a: &Vec<i64>) -> Vec<i64> {
        a.iter().map(|x| -x).collect()
    }

    fn contains(&self, a: &Vec<i64>) -> bool {
        a.len() == self.rank
    }

    fn format(&self, a: &Vec<i64>) -> String {
        a.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    fn parse(&self, s: &str) -> Result<Vec<i64>> {
        let v = if self.rank == 0 && s.trim().is_empty() {
            Vec::new()
        } else {
            s.split(',')
                .map(|p| {
                    p.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::input(format!("bad integer {p:?} in {s:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        if v.len() != self.rank {
            return Err(Error::input(format!(
                "{s:?} does not have rank {}",
                self.rank
            )));
        }
        Ok(v)
    }
}

/// A finite group given by its Cayley table. Elements are table indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableGroup {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

/// Checks that a square table defines a group: closure, associativity, a
/// two-sided identity and two-sided inverses, all exhaustively.
pub fn validate_table_group(table: &[Vec<usize>]) -> Result<bool> {
    let n = table.len();
    if table.iter().any(|row| row.len() != n) {
        return Err(Error::input("Cayley table is not square"));
    }
    if n == 0 || table.iter().flatten().any(|&x| x >= n) {
        return Ok(false);
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Ok(false);
                }
            }
        }
    }
    let Some(e) = (0..n).find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a)) else {
        return Ok(false);
    };
    Ok((0..n).all(|a| (0..n).any(|b| table[a][b] == e && table[b][a] == e)))
}

impl TableGroup {
    pub fn new(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        if names.len() != table.len() {
            return Err(Error::input("Cayley table size does not match element list"));
        }
        let mut sorted = names.clone();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::input("duplicate group element name"));
        }
        if !validate_table_group(&table)? {
            return Err(Error::input("Cayley table does not define a group"));
        }
        let n = names.len();
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a))
            .expect("validated");
        let inverses = (0..n)
            .map(|a| (0..n).find(|&b| table[a][b] == identity).expect("validated"))
            .collect();
        Ok(Self {
            names,
            table,
            identity,
            inverses,
        })
    }

    /// The cyclic group of order `n`, elements named `0..n`.
    pub fn cyclic(n: usize) -> Self {
        let names = (0..n).map(|i| i.to_string()).collect();
        let table = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        Self::new(names, table).expect("cyclic group")
    }

    /// The symmetric group on three letters, elements named by one-line
    /// notation of the permutation.
    pub fn symmetric3() -> Self {
        let perms: Vec<[usize; 3]> = vec![
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let names = perms
            .iter()
            .map(|p| p.iter().map(|i| (b'a' + *i as u8) as char).collect())
            .collect();
        let table = perms
            .iter()
            .map(|p| {
                perms
                    .iter()
                    .map(|q| {
                        // (pq)(i) = p(q(i))
                        let c = [p[q[0]], p[q[1]], p[q[2]]];
                        perms.iter().position(|r| *r == c).unwrap()
                    })
                    .collect()
            })
            .collect();
        Self::new(names, table).expect("symmetric group")
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.order()
    }
}

impl GradedGroup for TableGroup {
    type Elem = usize;

    fn identity(&self) -> usize {
        self.identity
    }

    fn product(&self, a: &usize, b: &usize) -> usize {
        self.table[*a][*b]
    }

    fn inverse(&self, a: &usize) -> usize {
        self.inverses[*a]
    }

    fn contains(&self, a: &usize) -> bool {
        *a < self.order()
    }

    fn format(&self, a: &usize) -> String {
        self.names[*a].clone()
    }

    fn parse(&self, s: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == s)
            .ok_or_else(|| Error::input(format!("unknown group element {s:?}")))
    }
}

/// Either realization, chosen at run time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyGroup {
    IntVector(IntVectorGroup),
    Table(TableGroup),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AnyElem {
    Vector(Vec<i64>),
    Table(usize),
}

impl GradedGroup for AnyGroup {
    type Elem = AnyElem;

    fn identity(&self) -> AnyElem {
        match self {
            AnyGroup::IntVector(g) => AnyElem::Vector(g.identity()),
            AnyGroup::Table(g) => AnyElem::Table(g.identity()),
        }
    }

    fn product(&self, a: &AnyElem, b: &AnyElem) -> AnyElem {
        match (self, a, b) {
            (AnyGroup::IntVector(g), AnyElem::Vector(x), AnyElem::Vector(y)) => {
                AnyElem::Vector(g.product(x, y))
            }
            (AnyGroup::Table(g), AnyElem::Table(x), AnyElem::Table(y)) => {
                AnyElem::Table(g.product(x, y))
            }
            _ => panic!("group element of the wrong kind"),
        }
    }

    fn inverse(&self, a: &AnyElem) -> AnyElem {
        match (self, a) {
            (AnyGroup::IntVector(g), AnyElem::Vector(x)) => AnyElem::Vector(g.inverse(x)),
            (AnyGroup::Table(g), AnyElem::Table(x)) => AnyElem::Table(g.inverse(x)),
            _ => panic!("group element of the wrong kind"),
        }
    }

    fn contains(&self, a: &AnyElem) -> bool {
        match (self, a) {
            (AnyGroup::IntVector(g), AnyElem::Vector(x)) => g.contains(x),
            (AnyGroup::Table(g), AnyElem::Table(x)) => g.contains(x),
            _ => false,
        }
    }

    fn format(&self, a: &AnyElem) -> String {
        match (self, a) {
            (AnyGroup::IntVector(g), AnyElem::Vector(x)) => g.format(x),
            (AnyGroup::Table(g), AnyElem::Table(x)) => g.format(x),
            _ => format!("{a:?}"),
        }
    }

    fn parse(&self, s: &str) -> Result<AnyElem> {
        match self {
            AnyGroup::IntVector(g) => g.parse(s).map(AnyElem::Vector),
            AnyGroup::Table(g) => g.parse(s).map(AnyElem::Table),
        }
    }
}

impl From<IntVectorGroup> for AnyGroup {
    fn from(g: IntVectorGroup) -> Self {
        AnyGroup::IntVector(g)
    }
}

impl From<TableGroup> for AnyGroup {
    fn from(g: TableGroup) -> Self {
        AnyGroup::Table(g)
    }
}

/// JSON form of a grading group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GroupDoc {
    IntVector {
        rank: usize,
    },
    Table {
        elements: Vec<String>,
        identity: String,
        table: Vec<Vec<String>>,
    },
}

impl AnyGroup {
    pub fn from_doc(doc: &GroupDoc) -> Result<Self> {
        match doc {
            GroupDoc::IntVector { rank } => Ok(IntVectorGroup::new(*rank).into()),
            GroupDoc::Table {
                elements,
                identity,
                table,
            } => {
                let idx = |s: &String| {
                    elements
                        .iter()
                        .position(|e| e == s)
                        .ok_or_else(|| Error::input(format!("unknown group element {s:?}")))
                };
                let rows = table
                    .iter()
                    .map(|row| row.iter().map(idx).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                let g = TableGroup::new(elements.clone(), rows)?;
                if g.names[g.identity] != *identity {
                    return Err(Error::input(format!(
                        "declared identity {identity:?} is not the identity of the table"
                    )));
                }
                Ok(g.into())
            }
        }
    }
}

/// Serializable form of a group, shared by both realizations.
pub trait ToGroupDoc {
    fn to_doc(&self) -> GroupDoc;
}

impl ToGroupDoc for IntVectorGroup {
    fn to_doc(&self) -> GroupDoc {
        GroupDoc::IntVector { rank: self.rank }
    }
}

impl ToGroupDoc for TableGroup {
    fn to_doc(&self) -> GroupDoc {
        GroupDoc::Table {
            elements: self.names.clone(),
            identity: self.names[self.identity].clone(),
            table: self
                .table
                .iter()
                .map(|row| row.iter().map(|&x| self.names[x].clone()).collect())
                .collect(),
        }
    }
}

impl ToGroupDoc for AnyGroup {
    fn to_doc(&self) -> GroupDoc {
        match self {
            AnyGroup::IntVector(g) => g.to_doc(),
            AnyGroup::Table(g) => g.to_doc(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn z2_and_s3_tables() {
        let z2 = TableGroup::cyclic(2);
        assert!(validate_table_group(z2.table()).unwrap());
        let s3 = TableGroup::symmetric3();
        assert_eq!(s3.order(), 6);
        assert!(validate_table_group(s3.table()).unwrap());
        // S3 is not abelian
        let ab = (0..6).any(|a| (0..6).any(|b| s3.product(&a, &b) != s3.product(&b, &a)));
        assert!(ab);
    }

    #[test]
    fn repeated_row_entry_is_not_a_group() {
        let table = vec![vec![0, 1, 2], vec![1, 1, 0], vec![2, 0, 1]];
        assert!(!validate_table_group(&table).unwrap());
    }

    #[test]
    fn ragged_table_is_input_error() {
        let table = vec![vec![0, 1], vec![1]];
        assert!(matches!(validate_table_group(&table), Err(Error::Input(_))));
    }

    #[test]
    fn element_ops() {
        let z = IntVectorGroup::integers();
        let ops = group_element_ops(&z, &vec![2], &vec![-3]).unwrap();
        assert_eq!(ops.product, vec![-1]);
        assert_eq!(z.inverse(&z.identity()), z.identity());
        let z2 = TableGroup::cyclic(2);
        let g = z2.parse("1").unwrap();
        assert!(z2.is_identity(&z2.product(&g, &g)));
        assert!(group_element_ops(&z, &vec![1, 2], &vec![0]).is_err());
        assert!(group_element_ops(&z2, &5, &0).is_err());
    }

    #[test]
    fn json_docs() {
        let g: AnyGroup = TableGroup::symmetric3().into();
        let text = serde_json::to_string(&g.to_doc()).unwrap();
        assert!(text.contains("\"kind\":\"table\""));
        let back = AnyGroup::from_doc(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back, g);
        let doc: GroupDoc = serde_json::from_str(r#"{"kind":"int-vector","rank":2}"#).unwrap();
        let g = AnyGroup::from_doc(&doc).unwrap();
        assert_eq!(g.parse("1,-2").unwrap(), AnyElem::Vector(vec![1, -2]));
        assert_eq!(g.format(&AnyElem::Vector(vec![3, 0])), "3,0");
    }

    fn small_groups() -> Vec<TableGroup> {
        let mut v: Vec<TableGroup> = (1..=8).map(TableGroup::cyclic).collect();
        v.push(TableGroup::symmetric3());
        v
    }

    #[test]
    fn small_table_groups_are_groups_with_unique_inverses() {
        for g in small_groups() {
            let n = g.order();
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        assert_eq!(
                            g.product(&g.product(&a, &b), &c),
                            g.product(&a, &g.product(&b, &c))
                        );
                    }
                }
                let inverses = (0..n)
                    .filter(|b| g.product(&a, b) == g.identity())
                    .count();
                assert_eq!(inverses, 1);
                assert!(g.is_identity(&g.product(&g.inverse(&a), &a)));
            }
        }
    }

    proptest! {
        #[test]
        fn int_vectors_commute_and_negate(a in prop::collection::vec(-50i64..50, 3),
                                          b in prop::collection::vec(-50i64..50, 3)) {
            let g = IntVectorGroup::new(3);
            prop_assert_eq!(g.product(&a, &b), g.product(&b, &a));
            prop_assert_eq!(g.inverse(&a), a.iter().map(|x| -x).collect::<Vec<_>>());
            prop_assert!(g.is_identity(&g.product(&a, &g.inverse(&a))));
            prop_assert_eq!(g.parse(&g.format(&a)).unwrap(), a);
        }
    }
}
