//! Exhaustive checks of the structural lemmas on a single instance.
//!
//! Every check quantifies over all elements, pairs, filters or ultrafilters
//! of the instance and records each counterexample it meets.

use crate::constructions::{
    distributive_completion, graded_symmetric_inverse_monoid, graph_inverse_semigroup, FiniteGraph,
    GradedSet, DEFAULT_MAX_IDEALS, DEFAULT_MAX_POINTS,
};
use crate::duality::{slice_semigroup, ultrafilter_groupoid};
use crate::error::Result;
use crate::grading::{AnyElem, AnyGroup, GradedGroup, IntVectorGroup};
use crate::groupoid::FiniteGradedGroupoid;
use crate::invsemi::{GradedInverseSemigroup, DEFAULT_MAX_ELEMENTS};
use crate::report::Violation;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Violations are recorded up to this many per check.
const MAX_RECORDED: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaCheck {
    pub name: String,
    /// Number of cases the check quantified over.
    pub cases: usize,
    pub failures: usize,
    pub violations: Vec<Violation>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub checks: Vec<LemmaCheck>,
    /// Checks that did not apply to this instance, with the reason.
    pub skipped: Vec<String>,
}

impl LemmaReport {
    pub fn is_valid(&self) -> bool {
        self.checks.iter().all(|c| c.failures == 0)
    }

    pub fn check(&self, name: &str) -> Option<&LemmaCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    fn begin(&mut self, name: &str) -> Recorder<'_> {
        self.checks.push(LemmaCheck {
            name: name.to_string(),
            cases: 0,
            failures: 0,
            violations: Vec::new(),
        });
        Recorder {
            check: self.checks.last_mut().expect("just pushed"),
        }
    }
}

struct Recorder<'a> {
    check: &'a mut LemmaCheck,
}

impl Recorder<'_> {
    fn case<I, S>(&mut self, ok: bool, witness: I)
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.check.cases += 1;
        if !ok {
            self.check.failures += 1;
            if self.check.violations.len() < MAX_RECORDED {
                self.check.violations.push(Violation {
                    axiom: self.check.name.clone(),
                    witness: witness.into_iter().map(Into::into).collect(),
                });
            }
        }
    }
}

/// Runs every applicable check on `s`. Checks that need `s` to be
/// graded-Boolean are skipped, with a note, when it is not.
pub fn lemma_suite<G: GradedGroup>(s: &GradedInverseSemigroup<G>, max_slices: usize) -> Result<LemmaReport> {
    let mut report = LemmaReport::default();
    let order = s.natural_order()?;
    let name = |x: usize| s.name(x).to_string();

    let mut rec = report.begin("compatible-pair-degree");
    for a in s.nonzero() {
        for b in s.nonzero() {
            if s.compatibility(a, b) == crate::invsemi::Compatibility::Compatible {
                rec.case(s.deg(a) == s.deg(b), [name(a), name(b)]);
            }
        }
    }

    let mut rec = report.begin("filter-degree-constancy");
    for m in s.nonzero() {
        let up = order.upward_closure(&[m]);
        if order.is_filter(&up) {
            rec.case(up.iter().all(|&x| s.deg(x) == s.deg(m)), [name(m)]);
        }
    }

    let mut rec = report.begin("homogeneous-bound-degree");
    for a in s.nonzero() {
        for b in s.nonzero().filter(|&b| s.deg(b) == s.deg(a)) {
            for bound in [s.meet(a, b), s.join(&[a, b])].into_iter().flatten() {
                rec.case(bound == s.zero() || s.deg(bound) == s.deg(a), [name(a), name(b)]);
            }
        }
    }

    if !s.is_graded_boolean().is_graded_boolean() {
        report
            .skipped
            .push("graded-Boolean checks: the semigroup is not graded-Boolean".to_string());
        return Ok(report);
    }

    let mut rec = report.begin("relative-complement");
    for t in s.elements() {
        for a in s.elements().filter(|&a| s.leq(a, t)) {
            let ok = match s.relative_complement(a, t) {
                Ok(c) => {
                    s.leq(c, t)
                        && s.compatibility(a, c) == crate::invsemi::Compatibility::Orthogonal
                        && s.join(&[a, c]) == Some(t)
                }
                Err(_) => false,
            };
            rec.case(ok, [name(a), name(t)]);
        }
    }

    let mut rec = report.begin("separation");
    for a in s.elements() {
        for t in s.elements().filter(|&t| !s.leq(a, t)) {
            let found = s
                .nonzero()
                .any(|r| s.leq(r, a) && s.meet(r, t) == Some(s.zero()));
            rec.case(found, [name(a), name(t)]);
        }
    }

    let ultrafilters = order.ultrafilters();
    let mut rec = report.begin("ultrafilter-primality");
    for x in &ultrafilters {
        for a in s.nonzero() {
            for b in s.nonzero().filter(|&b| b > a) {
                if let Ok(Some(j)) = s.join_compatible(&[a, b]) {
                    if x.contains(j) {
                        rec.case(x.contains(a) || x.contains(b), [name(x.minimum), name(a), name(b)]);
                    }
                }
            }
        }
    }

    let mut rec = report.begin("translated-ultrafilter");
    for x in &ultrafilters {
        for a in s.elements().filter(|&a| x.contains(s.domain(a))) {
            let sx: Vec<usize> = x.members.iter().map(|&m| s.mul(a, m)).collect();
            let up = order.upward_closure(&sx);
            rec.case(order.is_ultrafilter(&up), [name(x.minimum), name(a)]);
        }
    }

    let dual = ultrafilter_groupoid(s)?;
    let g = &dual.groupoid;
    let y: Vec<Vec<usize>> = s.elements().map(|a| dual.containing(a)).collect();
    let union = |a: &[usize], b: &[usize]| {
        let mut u: Vec<usize> = a.iter().chain(b).copied().collect();
        u.sort_unstable();
        u.dedup();
        u
    };

    let mut rec = report.begin("Y-meet");
    for a in s.elements() {
        for b in s.elements() {
            let inter: Vec<usize> = y[a].iter().copied().filter(|x| y[b].contains(x)).collect();
            let ok = s.meet(a, b).is_some_and(|m| y[m] == inter);
            rec.case(ok, [name(a), name(b)]);
        }
    }

    let mut rec = report.begin("Y-slice");
    for a in s.elements() {
        rec.case(g.is_slice(&y[a]), [name(a)]);
    }

    let mut rec = report.begin("Y-inverse");
    for a in s.elements() {
        rec.case(g.slice_inverse(&y[a]).ok().as_ref() == Some(&y[s.inv(a)]), [name(a)]);
    }

    let mut rec = report.begin("Y-product");
    for a in s.elements() {
        for b in s.elements() {
            let ok = g.slice_product(&y[a], &y[b]).ok().as_ref() == Some(&y[s.mul(a, b)]);
            rec.case(ok, [name(a), name(b)]);
        }
    }

    let mut rec = report.begin("Y-order");
    for a in s.elements() {
        for b in s.elements() {
            let subset = y[a].iter().all(|x| y[b].contains(x));
            rec.case(subset == s.leq(a, b), [name(a), name(b)]);
        }
    }

    let mut rec = report.begin("Y-join");
    for a in s.elements() {
        for b in s.elements() {
            if let Some(j) = s.join(&[a, b]) {
                rec.case(y[j] == union(&y[a], &y[b]), [name(a), name(b)]);
            }
        }
    }

    let mut rec = report.begin("Y-cover");
    for slice in g.enumerate_slices(true, max_slices)?.into_iter().filter(|z| !z.is_empty()) {
        let alpha = g.deg(slice[0]);
        let parts: Vec<usize> = s
            .nonzero()
            .filter(|&a| s.deg(a) == Some(alpha) && y[a].iter().all(|x| slice.contains(x)))
            .collect();
        let covered = parts.iter().fold(Vec::new(), |acc, &a| union(&acc, &y[a]));
        let names: Vec<String> = slice.iter().map(|&x| g.name(x).to_string()).collect();
        rec.case(covered == slice && s.is_compatible_set(&parts), names);
    }

    let mut rec = report.begin("epsilon-groupoid");
    let eps = ultrafilter_groupoid(&s.restrict_epsilon())?;
    let g_eps = g.epsilon_part();
    rec.case(
        same_structure(&eps.groupoid, &g_eps),
        Vec::<String>::new(),
    );

    let groupoid_side = groupoid_lemmas(g, max_slices)?;
    report.checks.extend(groupoid_side.checks);
    Ok(report)
}

/// Whether two groupoids with the same morphism names have the same tables.
fn same_structure<G: GradedGroup>(g: &FiniteGradedGroupoid<G>, h: &FiniteGradedGroupoid<G>) -> bool {
    g.names() == h.names()
        && g.morphisms().all(|x| {
            g.d(x) == h.d(x)
                && g.r(x) == h.r(x)
                && g.inv(x) == h.inv(x)
                && g.deg(x) == h.deg(x)
                && g.morphisms().all(|y| g.comp(x, y) == h.comp(x, y))
        })
}

/// Checks on a groupoid: slices multiply as a graded semigroup, and every
/// ultrafilter of `S^gr(G)` is `𝒳_y` for exactly one `y`.
pub fn groupoid_lemmas<G: GradedGroup>(g: &FiniteGradedGroupoid<G>, max_slices: usize) -> Result<LemmaReport> {
    let mut report = LemmaReport::default();
    let slices = slice_semigroup(g, true, max_slices)?;
    let ss = &slices.semigroup;

    let mut rec = report.begin("slice-semigroup-valid");
    let validity = ss.validate();
    rec.case(validity.is_valid(), validity.violations.iter().map(|v| v.axiom.clone()));

    let mut rec = report.begin("slice-order-is-inclusion");
    for a in ss.elements() {
        for b in ss.elements() {
            let subset = slices.slices[a].iter().all(|x| slices.slices[b].contains(x));
            rec.case(subset == ss.leq(a, b), [ss.name(a), ss.name(b)]);
        }
    }

    let x_sets: Vec<Vec<usize>> = g.morphisms().map(|x| slices.containing(x)).collect();
    let mut rec = report.begin("X-uniqueness");
    for u in ss.natural_order()?.ultrafilters() {
        let matches = x_sets.iter().filter(|x| **x == u.members).count();
        rec.case(matches == 1, [ss.name(u.minimum)]);
    }
    Ok(report)
}

/// A small random graded-Boolean instance, reproducible from `seed`: either
/// a graded symmetric inverse monoid or the graded completion of a random
/// acyclic graph's inverse semigroup.
pub fn random_instance(seed: u64) -> Result<(String, GradedInverseSemigroup<AnyGroup>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let group = AnyGroup::from(IntVectorGroup::integers());
    if rng.gen_bool(0.5) {
        let n = rng.gen_range(1..=3);
        let points = (0..n)
            .map(|i| {
                let d = rng.gen_range(-1..=1);
                (format!("x{i}"), AnyElem::Vector(vec![d]))
            })
            .collect();
        let x = GradedSet::new(points, group)?;
        let degs: Vec<String> = (0..n).map(|i| x.group().format(x.deg(i))).collect();
        let s = graded_symmetric_inverse_monoid(&x, DEFAULT_MAX_POINTS)?;
        Ok((format!("I^gr of {n} points with degrees [{}]", degs.join(", ")), s))
    } else {
        let n = rng.gen_range(2..=3);
        let vertices: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let copies = if n == 2 { rng.gen_range(1..=2) } else { rng.gen_range(0..=1) };
                for k in 0..copies {
                    edges.push((format!("e{a}{b}{}", "'".repeat(k)), vertices[a].clone(), vertices[b].clone()));
                }
            }
        }
        let vref: Vec<&str> = vertices.iter().map(String::as_str).collect();
        let eref: Vec<(&str, &str, &str)> = edges
            .iter()
            .map(|(e, a, b)| (e.as_str(), a.as_str(), b.as_str()))
            .collect();
        let graph = FiniteGraph::new(&vref, &eref)?;
        let s = graph_inverse_semigroup(&graph, DEFAULT_MAX_ELEMENTS)?;
        let d = distributive_completion(&s, true, DEFAULT_MAX_IDEALS)?.semigroup;
        let any = GradedInverseSemigroup::from_doc(&d.to_doc(), DEFAULT_MAX_ELEMENTS)?;
        let described: Vec<String> = edges.iter().map(|(e, a, b)| format!("{e}:{a}->{b}")).collect();
        Ok((
            format!("D^gr of the graph on {n} vertices with edges [{}]", described.join(", ")),
            any,
        ))
    }
}
