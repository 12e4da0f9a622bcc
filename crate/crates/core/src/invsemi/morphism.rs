use super::GradedInverseSemigroup;
use crate::error::{Error, Result};
use crate::grading::GradedGroup;
use crate::report::Report;

/// An element map between two graded inverse semigroups over the same group.
#[derive(Debug, Clone)]
pub struct SemigroupMorphism<'a, G: GradedGroup> {
    pub source: &'a GradedInverseSemigroup<G>,
    pub target: &'a GradedInverseSemigroup<G>,
    /// `map[s]` is the image of source element `s`.
    pub map: Vec<usize>,
}

impl<'a, G: GradedGroup> SemigroupMorphism<'a, G> {
    pub fn new(
        source: &'a GradedInverseSemigroup<G>,
        target: &'a GradedInverseSemigroup<G>,
        map: Vec<usize>,
    ) -> Result<Self> {
        if map.len() != source.len() || map.iter().any(|&x| x >= target.len()) {
            return Err(Error::input("morphism table does not fit its source and target"));
        }
        Ok(Self { source, target, map })
    }

    pub fn identity(s: &'a GradedInverseSemigroup<G>) -> Self {
        Self {
            source: s,
            target: s,
            map: s.elements().collect(),
        }
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &SemigroupMorphism<'a, G>) -> Result<Self> {
        if self.target != other.source {
            return Err(Error::precondition("morphisms are not composable"));
        }
        Ok(Self {
            source: self.source,
            target: other.target,
            map: self.map.iter().map(|&x| other.map[x]).collect(),
        })
    }

    pub fn apply(&self, s: usize) -> usize {
        self.map[s]
    }

    /// Checks the conditions for a morphism of graded-Boolean inverse
    /// ∧-semigroups. Preservation of general joins is recorded as a note.
    pub fn validate(&self) -> Report {
        let (s, t, f) = (self.source, self.target, &self.map);
        let mut report = Report::new();
        if s.group() != t.group() {
            report.push("same-group", Vec::<String>::new());
            return report;
        }
        if f[s.zero()] != t.zero() {
            report.push("zero-preserving", [s.name(s.zero())]);
        }
        for a in s.elements() {
            if f[a] != t.zero() && s.deg(a) != t.deg(f[a]) {
                report.push("degree-preserving", [s.name(a)]);
            }
            for b in s.elements() {
                if f[s.mul(a, b)] != t.mul(f[a], f[b]) {
                    report.push("multiplicative", [s.name(a), s.name(b)]);
                }
                match (s.meet(a, b), t.meet(f[a], f[b])) {
                    (Some(m), Some(n)) if f[m] == n => {}
                    _ => report.push("meet-preserving", [s.name(a), s.name(b)]),
                }
            }
        }
        if !report.is_valid() {
            return report;
        }
        self.check_proper(&mut report);
        self.check_idempotent_lattice(&mut report);
        if let Some((a, b)) = self.first_unpreserved_join() {
            report.note(format!(
                "join of {} and {} is not preserved (informational)",
                s.name(a),
                s.name(b)
            ));
        }
        report
    }

    fn check_proper(&self, report: &mut Report) {
        let (s, t) = (self.source, self.target);
        let sorder = s.order();
        for y in t.order().ultrafilters() {
            let pre: Vec<usize> = s
                .elements()
                .filter(|&a| y.contains(self.map[a]))
                .collect();
            if !sorder.is_ultrafilter(&pre) {
                report.push("proper", [format!("{}↑", t.name(y.minimum))]);
            }
        }
    }

    fn check_idempotent_lattice(&self, report: &mut Report) {
        let (s, t, f) = (self.source, self.target, &self.map);
        let (sp, smem) = s.idempotent_order();
        let (tp, tmem) = t.idempotent_order();
        let tpos = |x: usize| tmem.binary_search(&x).ok();
        for i in 0..smem.len() {
            for j in 0..smem.len() {
                let Some(join) = sp.join(i, j) else { continue };
                let (Some(fi), Some(fj)) = (tpos(f[smem[i]]), tpos(f[smem[j]])) else {
                    continue;
                };
                if tp.join(fi, fj).map(|x| tmem[x]) != Some(f[smem[join]]) {
                    report.push("idempotent-join", [s.name(smem[i]), s.name(smem[j])]);
                }
            }
        }
        for (i, &e) in smem.iter().enumerate() {
            let (ideal, members) = sp.principal_ideal(i);
            let Some(fe) = tpos(f[e]) else { continue };
            let (tideal, tmembers) = tp.principal_ideal(fe);
            for x in 0..ideal.len() {
                let Some(c) = ideal.complement(x) else { continue };
                let img = |k: usize| tpos(f[smem[members[k]]]).and_then(|p| tmembers.binary_search(&p).ok());
                let ok = match (img(x), img(c)) {
                    (Some(fx), Some(fc)) => tideal.complement(fx) == Some(fc),
                    _ => false,
                };
                if !ok {
                    report.push(
                        "complement-preserving",
                        [s.name(smem[members[x]]), s.name(e)],
                    );
                }
            }
        }
    }

    fn first_unpreserved_join(&self) -> Option<(usize, usize)> {
        let (s, t, f) = (self.source, self.target, &self.map);
        for a in s.nonzero() {
            for b in a + 1..s.len() {
                if let Some(j) = s.join(&[a, b]) {
                    if t.join(&[f[a], f[b]]) != Some(f[j]) {
                        return Some((a, b));
                    }
                }
            }
        }
        None
    }

    /// Whether the map is a bijection that is an isomorphism of graded
    /// inverse semigroups and of natural orders.
    pub fn is_isomorphism(&self) -> bool {
        let (s, t) = (self.source, self.target);
        s.is_isomorphism_to(t, &self.map)
            && s
                .elements()
                .all(|a| s.elements().all(|b| s.leq(a, b) == t.leq(self.map[a], self.map[b])))
    }
}
