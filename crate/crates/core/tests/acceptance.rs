//! End-to-end acceptance run. Prints one PASS or FAIL line per check and
//! exits nonzero if any check fails.

mod common;

use common::*;
use gstone::constructions::{symmetric_inverse_monoid, DEFAULT_MAX_POINTS};
use gstone::duality::{
    check_contravariance, check_naturality_gp, check_naturality_sg, check_roundtrip_gp, check_roundtrip_sg,
    dualize_gp_morphism, pair_slice_identification, slice_semigroup, ultrafilter_groupoid,
};
use gstone::grading::GradedGroup;
use gstone::groupoid::{FiniteGradedGroupoid, GroupoidMorphism, DEFAULT_MAX_SLICES};
use gstone::lemmas::{groupoid_lemmas, lemma_suite, random_instance};
use gstone::ring::{phi_psi_iso_check, EnvelopingRing, PrimeField, Rationals};
use gstone::{FinitePoset, IntVectorGroup, TableGroup};
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

type Outcome = Result<String, String>;
type Check = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn pair_groupoid_example() -> Outcome {
    let gradings: [&[i64]; 5] = [&[1], &[0, 1], &[1, 0], &[0, 0, 1], &[0, 1, 2]];
    for degs in gradings {
        let x = zset(degs);
        let pair = gstone::constructions::pair_groupoid(&x).map_err(|e| e.to_string())?;
        let slices = slice_semigroup(&pair, true, DEFAULT_MAX_SLICES).map_err(|e| e.to_string())?;
        let s = igr(degs);
        let f = pair_slice_identification(&x, &pair, &slices, &s).map_err(|e| e.to_string())?;
        ensure(slices.semigroup.is_isomorphism_to(&s, &f), || {
            format!("canonical map is not an isomorphism for degrees {degs:?}")
        })?;
        for a in slices.semigroup.elements() {
            ensure(slices.semigroup.deg(a) == s.deg(f[a]), || {
                format!("degree mismatch at {} for {degs:?}", slices.semigroup.name(a))
            })?;
        }
    }
    Ok(format!("{} gradings on 1 to 3 points", gradings.len()))
}

fn covering_checks<G: GradedGroup>(
    name: &str,
    two: &FiniteGradedGroupoid<G>,
    g: &FiniteGradedGroupoid<G>,
    auto: &GroupoidMorphism<'_, G>,
) -> Result<usize, String> {
    let err = |e: gstone::Error| format!("{name}: {e}");
    let f = fold(two, g);
    let x = exchange(two);
    let mut checked = 0;
    for m in [&f, &x, auto] {
        ensure(m.validate().is_valid(), || format!("{name}: test functor is not a covering functor"))?;
        let r = check_naturality_gp(m, DEFAULT_MAX_SLICES).map_err(err)?;
        ensure(r.is_valid(), || format!("{name}: μ not natural: {r}"))?;
        let (ss, st) = (
            slice_semigroup(m.source, true, DEFAULT_MAX_SLICES).map_err(err)?,
            slice_semigroup(m.target, true, DEFAULT_MAX_SLICES).map_err(err)?,
        );
        let dual = dualize_gp_morphism(m, &ss, &st).map_err(err)?;
        let r = check_naturality_sg(&dual, DEFAULT_MAX_SLICES).map_err(err)?;
        ensure(r.is_valid(), || format!("{name}: ν not natural: {r}"))?;
        checked += 2;
    }
    for (a, b) in [(&x, &f), (&f, auto)] {
        let r = check_contravariance(a, b, DEFAULT_MAX_SLICES).map_err(err)?;
        ensure(r.is_valid(), || format!("{name}: functors not contravariant: {r}"))?;
        checked += 1;
    }
    Ok(checked)
}

fn duality_roundtrips() -> Outcome {
    let mut count = 0;
    for (name, s) in semigroup_battery() {
        let r = check_roundtrip_sg(&name, &s, DEFAULT_MAX_SLICES).map_err(|e| e.to_string())?;
        ensure(r.iso, || format!("{name}: {:?}", r.witness))?;
        count += 1;
    }
    for (name, g) in pair_battery() {
        let r = check_roundtrip_gp(&name, &g, DEFAULT_MAX_SLICES).map_err(|e| e.to_string())?;
        ensure(r.iso, || format!("{name}: {:?}", r.witness))?;
        count += 1;
    }
    for (name, g) in group_battery() {
        let r = check_roundtrip_gp(&name, &g, DEFAULT_MAX_SLICES).map_err(|e| e.to_string())?;
        ensure(r.iso, || format!("{name}: {:?}", r.witness))?;
        count += 1;
    }

    let mut squares = 0;
    let g = gstone::constructions::pair_groupoid(&zset(&[0, 1])).unwrap();
    let two = doubled(&g);
    squares += covering_checks("pair groupoid [0, 1]", &two, &g, &GroupoidMorphism::identity(&g))?;
    let g = gstone::constructions::pair_groupoid(&zset(&[0, 0, 1])).unwrap();
    let two = doubled(&g);
    let swap = permute_points(&g, &[1, 0, 2]);
    squares += covering_checks("pair groupoid [0, 0, 1]", &two, &g, &swap)?;
    let g = gstone::constructions::group_groupoid(&TableGroup::cyclic(3)).unwrap();
    let two = doubled(&g);
    squares += covering_checks("Z/3", &two, &g, &GroupoidMorphism::identity(&g))?;
    Ok(format!("{count} roundtrips, {squares} naturality and functoriality checks"))
}

fn graded_dichotomy() -> Outcome {
    let graded = igr(&[0, 0, 1]).is_graded_boolean();
    ensure(graded.is_graded_boolean() && !graded.is_boolean(), || {
        format!(
            "degrees [0, 0, 1]: graded {}, non-graded {}",
            graded.is_graded_boolean(),
            graded.is_boolean()
        )
    })?;
    let trivial = igr(&[0, 0, 0]).is_graded_boolean();
    ensure(trivial.is_graded_boolean() && trivial.is_boolean(), || {
        "trivial grading is not Boolean".to_string()
    })?;
    Ok("nontrivial: true/false, trivial: true/true".to_string())
}

fn lemma_checks() -> Outcome {
    let mut cases = 0;
    for (name, s) in semigroup_battery() {
        let r = lemma_suite(&s, DEFAULT_MAX_SLICES).map_err(|e| e.to_string())?;
        ensure(r.is_valid() && r.skipped.is_empty(), || format!("{name}: {r:?}"))?;
        cases += r.checks.iter().map(|c| c.cases).sum::<usize>();
    }
    for seed in 0..12 {
        let (name, s) = random_instance(seed).map_err(|e| e.to_string())?;
        let r = lemma_suite(&s, DEFAULT_MAX_SLICES).map_err(|e| e.to_string())?;
        ensure(r.is_valid(), || format!("seed {seed} ({name}): {r:?}"))?;
        cases += r.checks.iter().map(|c| c.cases).sum::<usize>();
    }
    for (name, g) in pair_battery() {
        let r = groupoid_lemmas(&g, DEFAULT_MAX_SLICES).map_err(|e| e.to_string())?;
        ensure(r.is_valid(), || format!("{name}: {r:?}"))?;
        cases += r.checks.iter().map(|c| c.cases).sum::<usize>();
    }
    for (name, g) in group_battery() {
        let r = groupoid_lemmas(&g, DEFAULT_MAX_SLICES).map_err(|e| e.to_string())?;
        ensure(r.is_valid(), || format!("{name}: {r:?}"))?;
        cases += r.checks.iter().map(|c| c.cases).sum::<usize>();
    }
    Ok(format!("{cases} cases, zero violations"))
}

fn separativity() -> Outcome {
    let mut count = 0;
    for (name, s) in semigroup_battery() {
        ensure(s.is_graded_boolean().is_graded_boolean(), || format!("{name} is not graded-Boolean"))?;
        ensure(s.is_separative().map_err(|e| e.to_string())?, || format!("{name} is not separative"))?;
        count += 1;
    }
    for (name, s) in semigroup_battery().into_iter().chain(graph_semigroups()) {
        let q = s.quotient_by_biarrow().map_err(|e| format!("{name}: {e}"))?;
        ensure(q.semigroup.is_separative().map_err(|e| e.to_string())?, || {
            format!("S/↔ of {name} is not separative")
        })?;
        count += 1;
    }
    Ok(format!("{count} checks"))
}

/// Maximal filters found by searching every candidate `{x}↑`, the only
/// filters a finite poset has, and discarding those strictly contained in
/// another.
fn maximal_filters(p: &FinitePoset) -> BTreeSet<Vec<usize>> {
    let n = p.len();
    let filters: Vec<Vec<usize>> = (0..n)
        .filter(|&x| x != p.bottom())
        .map(|x| (0..n).filter(|&y| p.leq(x, y)).collect())
        .collect();
    let subset = |a: &Vec<usize>, b: &Vec<usize>| a.iter().all(|x| b.contains(x));
    filters
        .iter()
        .filter(|f| !filters.iter().any(|g| g.len() > f.len() && subset(f, g)))
        .cloned()
        .collect()
}

#[allow(clippy::needless_range_loop)]
fn random_poset(rng: &mut ChaCha8Rng, n: usize) -> FinitePoset {
    let density = rng.gen_range(0.02..0.3);
    let mut leq = vec![vec![false; n]; n];
    for a in 0..n {
        leq[0][a] = true;
        leq[a][a] = true;
        for b in a + 1..n {
            if a > 0 && rng.gen_bool(density) {
                leq[a][b] = true;
            }
        }
    }
    for k in 0..n {
        for a in 0..n {
            if leq[a][k] {
                for b in 0..n {
                    if leq[k][b] {
                        leq[a][b] = true;
                    }
                }
            }
        }
    }
    let names = (0..n).map(|i| format!("p{i:03}")).collect();
    FinitePoset::from_relation(names, 0, |a, b| leq[a][b]).unwrap()
}

fn ultrafilter_oracle() -> Outcome {
    let mut posets: Vec<(String, FinitePoset)> = Vec::new();
    for (name, s) in semigroup_battery().into_iter().chain(graph_semigroups()) {
        posets.push((format!("natural order of {name}"), s.natural_order().unwrap().clone()));
        posets.push((format!("idempotents of {name}"), s.idempotent_order().0.clone()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for i in 0..40 {
        let n = rng.gen_range(2..=200);
        posets.push((format!("random poset {i} on {n} elements"), random_poset(&mut rng, n)));
    }
    for (name, p) in &posets {
        ensure(p.len() <= 200, || format!("{name} is too large"))?;
        let computed: BTreeSet<Vec<usize>> = p.ultrafilters().into_iter().map(|u| u.members).collect();
        let minimal: BTreeSet<Vec<usize>> = (0..p.len())
            .filter(|&m| m != p.bottom() && (0..p.len()).all(|y| y == p.bottom() || y == m || !p.leq(y, m)))
            .map(|m| (0..p.len()).filter(|&y| p.leq(m, y)).collect())
            .collect();
        ensure(computed == minimal, || format!("{name}: ultrafilters differ from principal filters at atoms"))?;
        ensure(computed == maximal_filters(p), || format!("{name}: ultrafilters differ from maximal filters"))?;
    }
    Ok(format!("{} posets up to 200 elements", posets.len()))
}

/// Rank over ℚ of the relators closed under multiplication by basis
/// elements on either side, computed from the semigroup tables alone.
fn relator_rank(s: &gstone::GradedInverseSemigroup<IntVectorGroup>) -> usize {
    let basis: Vec<usize> = s.nonzero().collect();
    let col = |x: usize| basis.iter().position(|&b| b == x);
    let mut vectors: Vec<Vec<i64>> = Vec::new();
    let mut push_product = |coeffs: &[(usize, i64)], l: Option<usize>, r: Option<usize>| {
        let mut v = vec![0i64; basis.len()];
        for &(x, c) in coeffs {
            let y = l.map_or(x, |l| s.mul(l, x));
            let y = r.map_or(y, |r| s.mul(y, r));
            if let Some(j) = col(y) {
                v[j] += c;
            }
        }
        vectors.push(v);
    };
    let sides: Vec<Option<usize>> = std::iter::once(None).chain(basis.iter().map(|&b| Some(b))).collect();
    for &u in &basis {
        for &v in &basis {
            let orthogonal = u != v && s.mul(s.inv(u), v) == s.zero() && s.mul(u, s.inv(v)) == s.zero();
            if !orthogonal {
                continue;
            }
            let upper: Vec<usize> = basis.iter().copied().filter(|&w| s.leq(u, w) && s.leq(v, w)).collect();
            let Some(&join) = upper.iter().find(|&&w| upper.iter().all(|&z| s.leq(w, z))) else {
                continue;
            };
            for &l in &sides {
                for &r in &sides {
                    push_product(&[(u, 1), (v, 1), (join, -1)], l, r);
                }
            }
        }
    }
    let mut rows: Vec<Vec<BigRational>> = vectors
        .into_iter()
        .map(|v| v.into_iter().map(|x| BigRational::from_integer(x.into())).collect())
        .collect();
    let mut rank = 0;
    for c in 0..basis.len() {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        for i in 0..rows.len() {
            if i != rank && !rows[i][c].is_zero() {
                let factor = &rows[i][c] / &pivot;
                let pivot_row = rows[rank].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                    *x -= &factor * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn ring_isomorphism() -> Outcome {
    let mut details = Vec::new();
    for degs in [&[0, 1][..], &[0, 0, 1], &[0, 0]] {
        let g = gstone::constructions::pair_groupoid(&zset(degs)).unwrap();
        let q = phi_psi_iso_check(Rationals, &g, DEFAULT_MAX_SLICES).map_err(|e| e.to_string())?;
        let f2 = phi_psi_iso_check(PrimeField::new(2).unwrap(), &g, DEFAULT_MAX_SLICES).map_err(|e| e.to_string())?;
        for r in [&q, &f2] {
            ensure(r.iso && r.dim_graded == r.dim_nongraded, || format!("pair groupoid {degs:?}: {r:?}"))?;
            ensure(r.dim_graded == degs.len() * degs.len(), || format!("pair groupoid {degs:?}: {r:?}"))?;
        }
        details.push(format!("{degs:?}: {}", q.dim_graded));
    }
    let z2 = gstone::constructions::group_groupoid(&TableGroup::cyclic(2)).unwrap();
    for r in [
        phi_psi_iso_check(Rationals, &z2, DEFAULT_MAX_SLICES).map_err(|e| e.to_string())?,
        phi_psi_iso_check(PrimeField::new(2).unwrap(), &z2, DEFAULT_MAX_SLICES).map_err(|e| e.to_string())?,
    ] {
        ensure(r.iso && r.dim_graded == 2, || format!("Z/2: {r:?}"))?;
    }

    let trivial = gstone::constructions::pair_groupoid(&zset(&[0, 0])).unwrap();
    let s = slice_semigroup(&trivial, false, DEFAULT_MAX_SLICES).unwrap().semigroup;
    let ring = EnvelopingRing::new(Rationals, &s, false).map_err(|e| e.to_string())?;
    let oracle = s.len() - 1 - relator_rank(&s);
    ensure(ring.dim() == 4 && oracle == 4, || {
        format!("trivially graded 2-point ring: dim {} vs oracle {oracle}", ring.dim())
    })?;
    Ok(format!("dims {}; Z/2: 2; rank oracle agrees", details.join(", ")))
}

fn counting() -> Outcome {
    for n in 1..=4u64 {
        let points: Vec<&str> = POINTS[..n as usize].to_vec();
        let s = symmetric_inverse_monoid(&points, IntVectorGroup::integers(), DEFAULT_MAX_POINTS)
            .map_err(|e| e.to_string())?;
        let expected: u64 = (0..=n).map(|k| binomial(n, k).pow(2) * factorial(k)).sum();
        ensure(s.len() as u64 == expected, || format!("|I(X)| = {} for n = {n}, expected {expected}", s.len()))?;
    }
    for degs in [&[0][..], &[0, 1], &[0, 0, 1], &[0, 1, 2]] {
        let g = ultrafilter_groupoid(&igr(degs)).map_err(|e| e.to_string())?;
        ensure(g.groupoid.len() == degs.len() * degs.len(), || {
            format!("|G(I^gr(X))| = {} for degrees {degs:?}", g.groupoid.len())
        })?;
    }
    Ok("|I(X)| = 2, 7, 34, 209 and |G(I^gr(X))| = |X|²".to_string())
}

fn main() -> ExitCode {
    let checks: [Check; 8] = [
        ("slice semigroup of the graded pair groupoid is I^gr(X)", pair_groupoid_example),
        ("duality roundtrips, naturality and contravariance", duality_roundtrips),
        ("graded versus non-graded Boolean verdicts on three points", graded_dichotomy),
        ("lemma suite on every battery instance", lemma_checks),
        ("separativity of graded-Boolean instances and of S/↔", separativity),
        ("ultrafilters equal principal filters at atoms", ultrafilter_oracle),
        ("enveloping rings of all and of homogeneous slices agree", ring_isomorphism),
        ("counting cross-checks", counting),
    ];
    let mut failed = 0;
    for (name, check) in checks {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS  {name}: {detail} [{elapsed:.2?}]"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why} [{elapsed:.2?}]");
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance check(s) failed");
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
