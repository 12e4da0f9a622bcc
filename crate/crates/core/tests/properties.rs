//! Randomized invariants.

mod common;

use common::*;
use gstone::constructions::{graded_symmetric_inverse_monoid, pair_groupoid, DEFAULT_MAX_POINTS};
use gstone::duality::{check_roundtrip_gp, check_roundtrip_sg, pair_slice_identification, slice_semigroup};
use gstone::grading::GradedGroup;
use gstone::groupoid::DEFAULT_MAX_SLICES;
use gstone::invsemi::DEFAULT_MAX_ELEMENTS;
use gstone::ring::{rational, EnvelopingRing, Field, PrimeField, Rationals};
use gstone::{FinitePoset, GradedInverseSemigroup, IntVectorGroup, TableGroup};
use proptest::prelude::*;

/// A poset on `0..n` with bottom `0`, from strictly upper triangular
/// relation bits closed under transitivity.
#[allow(clippy::needless_range_loop)]
fn poset_from_bits(n: usize, bits: &[bool]) -> FinitePoset {
    let mut leq = vec![vec![false; n]; n];
    let mut k = 0;
    for a in 0..n {
        leq[0][a] = true;
        leq[a][a] = true;
        for b in a + 1..n {
            if a > 0 && bits[k % bits.len()] {
                leq[a][b] = true;
            }
            k += 1;
        }
    }
    for m in 0..n {
        for a in 0..n {
            for b in 0..n {
                if leq[a][m] && leq[m][b] {
                    leq[a][b] = true;
                }
            }
        }
    }
    FinitePoset::from_relation((0..n).map(|i| format!("x{i}")).collect(), 0, |a, b| leq[a][b]).unwrap()
}

fn poset() -> impl Strategy<Value = FinitePoset> {
    (2usize..10, prop::collection::vec(any::<bool>(), 1..45)).prop_map(|(n, bits)| poset_from_bits(n, &bits))
}

fn degrees() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-2i64..=2, 1..=3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn upward_closure_is_idempotent(p in poset(), picks in prop::collection::vec(any::<prop::sample::Index>(), 0..4)) {
        let set: Vec<usize> = picks.iter().map(|i| i.index(p.len())).collect();
        let up = p.upward_closure(&set);
        prop_assert_eq!(p.upward_closure(&up), up.clone());
        prop_assert!(set.iter().all(|x| up.contains(x)));
        let down = p.downward_closure(&set);
        prop_assert_eq!(p.downward_closure(&down), down);
    }

    #[test]
    fn ultrafilters_are_maximal_filters(p in poset()) {
        let ultra = p.ultrafilters();
        for u in &ultra {
            prop_assert!(p.is_filter(&u.members));
            prop_assert!(p.is_ultrafilter(&u.members));
            prop_assert_eq!(p.upward_closure(&[u.minimum]), u.members.clone());
        }
        let atoms = (0..p.len())
            .filter(|&m| m != p.bottom() && (0..p.len()).all(|y| y == p.bottom() || y == m || !p.leq(y, m)))
            .count();
        prop_assert_eq!(ultra.len(), atoms);
    }

    #[test]
    fn integer_vectors_form_a_group(a in prop::collection::vec(-50i64..50, 2), b in prop::collection::vec(-50i64..50, 2), c in prop::collection::vec(-50i64..50, 2)) {
        let g = IntVectorGroup::new(2);
        prop_assert_eq!(g.product(&g.product(&a, &b), &c), g.product(&a, &g.product(&b, &c)));
        prop_assert_eq!(g.product(&a, &g.identity()), a.clone());
        prop_assert!(g.is_identity(&g.product(&a, &g.inverse(&a))));
        prop_assert_eq!(g.parse(&g.format(&a)).unwrap(), a);
    }

    #[test]
    fn table_groups_form_groups(n in 1usize..9, a in 0usize..64, b in 0usize..64, c in 0usize..64) {
        for g in [TableGroup::cyclic(n), TableGroup::symmetric3()] {
            let k = g.order();
            let (a, b, c) = (a % k, b % k, c % k);
            prop_assert_eq!(g.product(&g.product(&a, &b), &c), g.product(&a, &g.product(&b, &c)));
            prop_assert_eq!(g.product(&g.identity(), &a), a);
            prop_assert!(g.is_identity(&g.product(&g.inverse(&a), &a)));
        }
    }

    #[test]
    fn pair_groupoid_slices_are_the_graded_monoid(degs in degrees()) {
        let x = zset(&degs);
        let pair = pair_groupoid(&x).unwrap();
        let slices = slice_semigroup(&pair, true, DEFAULT_MAX_SLICES).unwrap();
        let s = graded_symmetric_inverse_monoid(&x, DEFAULT_MAX_POINTS).unwrap();
        let f = pair_slice_identification(&x, &pair, &slices, &s).unwrap();
        prop_assert!(slices.semigroup.is_isomorphism_to(&s, &f));
    }

    #[test]
    fn graded_monoids_survive_both_roundtrips(degs in degrees()) {
        let s = igr(&degs);
        prop_assert!(s.is_graded_boolean().is_graded_boolean());
        prop_assert!(check_roundtrip_sg("igr", &s, DEFAULT_MAX_SLICES).unwrap().iso);
        let g = pair_groupoid(&zset(&degs)).unwrap();
        prop_assert!(check_roundtrip_gp("pair", &g, DEFAULT_MAX_SLICES).unwrap().iso);
    }

    #[test]
    fn json_documents_roundtrip(degs in degrees()) {
        let s = igr(&degs);
        let doc = s.to_doc();
        let text = serde_json::to_string(&doc).unwrap();
        let back = GradedInverseSemigroup::from_doc(&serde_json::from_str(&text).unwrap(), DEFAULT_MAX_ELEMENTS).unwrap();
        prop_assert_eq!(back.to_doc(), doc);
    }

    #[test]
    fn normal_form_is_idempotent_and_linear(
        degs in degrees(),
        xs in prop::collection::vec((0usize..64, -5i64..=5, 1i64..=4), 0..6),
        ys in prop::collection::vec((0usize..64, -5i64..=5, 1i64..=4), 0..6),
        p in prop::sample::select(vec![2u32, 3, 5, 97]),
    ) {
        let s = igr(&degs);
        let ring = EnvelopingRing::new(Rationals, &s, true).unwrap();
        let alg = ring.algebra();
        let n = alg.dim();
        let element = |v: &[(usize, i64, i64)]| {
            alg.combination(v.iter().map(|&(i, a, b)| (alg.basis()[i % n], rational(a, b))))
        };
        let (x, y) = (element(&xs), element(&ys));
        let nx = ring.normal_form(&x);
        prop_assert_eq!(ring.normal_form(&nx), nx.clone());
        let ny = ring.normal_form(&y);
        prop_assert_eq!(ring.normal_form(&alg.add(&x, &y)), alg.add(&nx, &ny));
        prop_assert_eq!(ring.normal_form(&alg.scale(&rational(3, 2), &x)), alg.scale(&rational(3, 2), &nx));
        prop_assert_eq!(ring.mul(&nx, &ny), ring.mul(&x, &y));

        let field = PrimeField::new(p).unwrap();
        let ring = EnvelopingRing::new(field, &s, true).unwrap();
        let alg = ring.algebra();
        let element = |v: &[(usize, i64, i64)]| {
            alg.combination(v.iter().map(|&(i, a, _)| (alg.basis()[i % n], gstone::ring::from_int(&field, a))))
        };
        let (x, y) = (element(&xs), element(&ys));
        let (nx, ny) = (ring.normal_form(&x), ring.normal_form(&y));
        prop_assert_eq!(ring.normal_form(&nx), nx.clone());
        prop_assert_eq!(ring.normal_form(&alg.add(&x, &y)), alg.add(&nx, &ny));
        prop_assert_eq!(field.name(), format!("F_{p}"));
    }
}
