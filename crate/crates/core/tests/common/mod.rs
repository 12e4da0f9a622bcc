#![allow(dead_code)]

use gstone::constructions::{
    distributive_completion, graded_symmetric_inverse_monoid, graph_inverse_semigroup, group_groupoid,
    pair_groupoid, pair_name, FiniteGraph, GradedSet, DEFAULT_MAX_IDEALS, DEFAULT_MAX_POINTS,
};
use gstone::grading::GradedGroup;
use gstone::groupoid::{FiniteGradedGroupoid, GroupoidMorphism};
use gstone::invsemi::DEFAULT_MAX_ELEMENTS;
use gstone::{GradedInverseSemigroup, IntVectorGroup, TableGroup};

pub type Semigroup = GradedInverseSemigroup<IntVectorGroup>;
pub type Groupoid = FiniteGradedGroupoid<IntVectorGroup>;

pub const POINTS: [&str; 4] = ["a", "b", "c", "d"];

pub fn zset(degs: &[i64]) -> GradedSet<IntVectorGroup> {
    GradedSet::new(
        degs.iter().zip(POINTS).map(|(d, p)| (p.to_string(), vec![*d])).collect(),
        IntVectorGroup::integers(),
    )
    .unwrap()
}

pub fn igr(degs: &[i64]) -> Semigroup {
    graded_symmetric_inverse_monoid(&zset(degs), DEFAULT_MAX_POINTS).unwrap()
}

/// Small acyclic graphs whose inverse semigroups are not graded-Boolean.
pub fn graphs() -> Vec<(&'static str, FiniteGraph)> {
    vec![
        ("edge", FiniteGraph::new(&["v", "w"], &[("e", "v", "w")]).unwrap()),
        ("chain", FiniteGraph::new(&["u", "v", "w"], &[("e", "u", "v"), ("f", "v", "w")]).unwrap()),
        ("sink", FiniteGraph::new(&["u", "v", "w"], &[("e", "u", "w"), ("f", "v", "w")]).unwrap()),
        ("parallel", FiniteGraph::new(&["v", "w"], &[("e", "v", "w"), ("f", "v", "w")]).unwrap()),
        (
            "triangle",
            FiniteGraph::new(&["u", "v", "w"], &[("e", "u", "v"), ("f", "u", "w"), ("g", "v", "w")]).unwrap(),
        ),
    ]
}

pub fn graph_semigroups() -> Vec<(String, Semigroup)> {
    graphs()
        .into_iter()
        .map(|(name, g)| (format!("graph IS of {name}"), graph_inverse_semigroup(&g, DEFAULT_MAX_ELEMENTS).unwrap()))
        .collect()
}

/// Graded-Boolean semigroups covering every family used by the checks.
pub fn semigroup_battery() -> Vec<(String, Semigroup)> {
    let mut out = Vec::new();
    for degs in [&[0][..], &[0, 1], &[0, 0, 1], &[0, 1, 2], &[0, 0, 0], &[1, -1, 1]] {
        out.push((format!("I^gr{degs:?}"), igr(degs)));
    }
    for degs in [&[0, 0, 1][..], &[0, 1, 1]] {
        out.push((format!("S_ε of I^gr{degs:?}"), igr(degs).restrict_epsilon()));
    }
    for (name, s) in graph_semigroups() {
        let d = distributive_completion(&s, true, DEFAULT_MAX_IDEALS).unwrap().semigroup;
        assert!(d.len() <= 60, "{name} completes to {} elements", d.len());
        out.push((format!("D^gr({name})"), d));
    }
    out
}

pub fn pair_battery() -> Vec<(String, Groupoid)> {
    [&[0][..], &[0, 0], &[0, 1], &[0, 0, 1], &[0, 1, 2]]
        .into_iter()
        .map(|degs| (format!("pair groupoid {degs:?}"), pair_groupoid(&zset(degs)).unwrap()))
        .collect()
}

pub fn group_battery() -> Vec<(String, FiniteGradedGroupoid<TableGroup>)> {
    let mut out: Vec<_> = [2, 3, 4, 5, 8]
        .into_iter()
        .map(|n| (format!("Z/{n}"), group_groupoid(&TableGroup::cyclic(n)).unwrap()))
        .collect();
    out.push(("S3".to_string(), group_groupoid(&TableGroup::symmetric3()).unwrap()));
    out
}

/// Two disjoint copies of `g`.
pub fn doubled<G: GradedGroup>(g: &FiniteGradedGroupoid<G>) -> FiniteGradedGroupoid<G> {
    FiniteGradedGroupoid::disjoint_union(&[g, g]).unwrap()
}

/// The covering functor folding two copies of `g` onto `g`.
pub fn fold<'a, G: GradedGroup>(
    two: &'a FiniteGradedGroupoid<G>,
    g: &'a FiniteGradedGroupoid<G>,
) -> GroupoidMorphism<'a, G> {
    let map = two
        .morphisms()
        .map(|m| g.index_of(two.name(m).split_once('/').unwrap().1).unwrap())
        .collect();
    GroupoidMorphism::new(two, g, map).unwrap()
}

/// The automorphism of two copies of `g` exchanging them.
pub fn exchange<G: GradedGroup>(two: &FiniteGradedGroupoid<G>) -> GroupoidMorphism<'_, G> {
    let map = two
        .morphisms()
        .map(|m| {
            let (copy, x) = two.name(m).split_once('/').unwrap();
            let other = if copy == "0" { "1" } else { "0" };
            two.index_of(&format!("{other}/{x}")).unwrap()
        })
        .collect();
    GroupoidMorphism::new(two, two, map).unwrap()
}

/// The automorphism of a pair groupoid induced by a permutation of points.
pub fn permute_points<'a>(g: &'a Groupoid, perm: &[usize]) -> GroupoidMorphism<'a, IntVectorGroup> {
    let n = perm.len();
    let mut map = vec![0; g.len()];
    for x in 0..n {
        for y in 0..n {
            let from = g.index_of(&pair_name(POINTS[x], POINTS[y])).unwrap();
            map[from] = g.index_of(&pair_name(POINTS[perm[x]], POINTS[perm[y]])).unwrap();
        }
    }
    GroupoidMorphism::new(g, g, map).unwrap()
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn factorial(n: u64) -> u64 {
    (1..=n).product()
}
