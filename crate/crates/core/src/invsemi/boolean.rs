use super::GradedInverseSemigroup;
use crate::error::{Error, Result};
use crate::grading::GradedGroup;
use crate::report::Report;
use serde::Serialize;

/// Outcome of the graded-Boolean check, with the non-graded verdict
/// computed alongside.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BooleanReport {
    /// Existence of all binary meets.
    pub meets: Report,
    /// `E(S)` is a distributive lattice whose principal
    /// ideals are Boolean algebras. Shared by both verdicts.
    pub idempotents: Report,
    /// Joins and distributivity over homogeneous compatible sets.
    pub graded: Report,
    /// Joins and distributivity over all compatible sets.
    pub nongraded: Report,
}

impl BooleanReport {
    pub fn is_graded_boolean(&self) -> bool {
        self.meets.is_valid() && self.idempotents.is_valid() && self.graded.is_valid()
    }

    pub fn is_boolean(&self) -> bool {
        self.meets.is_valid() && self.idempotents.is_valid() && self.nongraded.is_valid()
    }
}

/// `S/↔` together with the class of every element of `S`.
#[derive(Debug, Clone)]
pub struct Quotient<G: GradedGroup> {
    pub semigroup: GradedInverseSemigroup<G>,
    /// `class_of[s]` is the quotient element containing `s`.
    pub class_of: Vec<usize>,
    /// Members of each quotient element, in canonical order.
    pub classes: Vec<Vec<usize>>,
}

impl<G: GradedGroup> GradedInverseSemigroup<G> {
    /// Joins of compatible sets of size at most 3 and distributivity over
    /// compatible pairs, once restricted to homogeneous sets and once not;
    /// plus the lattice conditions on the idempotents.
    pub fn is_graded_boolean(&self) -> BooleanReport {
        let mut meets = Report::new();
        for s in self.elements() {
            for t in s + 1..self.len() {
                if self.meet(s, t).is_none() {
                    meets.push("meet-exists", [self.name(s), self.name(t)]);
                }
            }
        }
        BooleanReport {
            idempotents: self.check_idempotent_lattice(),
            graded: self.check_joins(true),
            nongraded: self.check_joins(false),
            meets,
        }
    }

    fn check_idempotent_lattice(&self) -> Report {
        let mut report = Report::new();
        let (eposet, members) = self.idempotent_order();
        if !eposet.is_lattice() {
            report.push("idempotent-lattice", Vec::<String>::new());
            return report;
        }
        if !eposet.is_distributive() {
            report.push("idempotent-distributive", Vec::<String>::new());
        }
        for (i, &e) in members.iter().enumerate() {
            let (ideal, _) = eposet.principal_ideal(i);
            if !ideal.is_boolean_algebra() {
                report.push("principal-ideal-boolean", [self.name(e)]);
            }
        }
        report
    }

    fn check_joins(&self, graded: bool) -> Report {
        let mut report = Report::new();
        let nz: Vec<usize> = self.nonzero().collect();
        let admissible = |set: &[usize]| {
            self.is_compatible_set(set) && (!graded || self.is_homogeneous(set))
        };
        let mut pairs = Vec::new();
        for (i, &s) in nz.iter().enumerate() {
            for &t in &nz[i + 1..] {
                if admissible(&[s, t]) {
                    pairs.push((s, t));
                }
            }
        }
        for &(s, t) in &pairs {
            if self.join(&[s, t]).is_none() {
                report.push("join-exists", [self.name(s), self.name(t)]);
            }
        }
        for (i, &s) in nz.iter().enumerate() {
            for (j, &t) in nz.iter().enumerate().skip(i + 1) {
                if !admissible(&[s, t]) {
                    continue;
                }
                for &u in &nz[j + 1..] {
                    if admissible(&[s, t, u]) && self.join(&[s, t, u]).is_none() {
                        report.push("join-exists", [self.name(s), self.name(t), self.name(u)]);
                    }
                }
            }
        }
        for &(s1, s2) in &pairs {
            let Some(j) = self.join(&[s1, s2]) else { continue };
            for s in self.elements() {
                let right = self.join(&[self.mul(s1, s), self.mul(s2, s)]);
                if right != Some(self.mul(j, s)) {
                    report.push("distributes-right", [self.name(s1), self.name(s2), self.name(s)]);
                }
                let left = self.join(&[self.mul(s, s1), self.mul(s, s2)]);
                if left != Some(self.mul(s, j)) {
                    report.push("distributes-left", [self.name(s1), self.name(s2), self.name(s)]);
                }
            }
        }
        report
    }

    /// `t \ s` for `s <= t`: the complement `e` of `s⁻¹s` in the principal
    /// ideal of `t⁻¹t` inside `E(S)`, multiplied onto `t`.
    pub fn relative_complement(&self, s: usize, t: usize) -> Result<usize> {
        if !self.leq(s, t) {
            return Err(Error::precondition(format!(
                "{} is not below {}",
                self.name(s),
                self.name(t)
            )));
        }
        if t == self.zero() {
            return Ok(self.zero());
        }
        let (eposet, members) = self.idempotent_order();
        let epos = |x: usize| members.binary_search(&x).expect("idempotent");
        let (ideal, ideal_members) = eposet.principal_ideal(epos(self.domain(t)));
        let local = ideal_members
            .binary_search(&epos(self.domain(s)))
            .expect("domain of s lies below domain of t");
        let c = ideal.complement(local).ok_or_else(|| {
            Error::precondition(format!(
                "no complement of {} below {}: not graded-Boolean",
                self.name(self.domain(s)),
                self.name(self.domain(t))
            ))
        })?;
        let e = members[ideal_members[c]];
        Ok(self.mul(t, e))
    }

    /// `s → t`: every nonzero `r <= s` meets `t` nontrivially.
    pub fn arrow(&self, s: usize, t: usize) -> Result<bool> {
        for r in self.nonzero() {
            if !self.leq(r, s) {
                continue;
            }
            match self.meet(r, t) {
                None => {
                    return Err(Error::precondition(format!(
                        "{} and {} have no meet",
                        self.name(r),
                        self.name(t)
                    )))
                }
                Some(m) if m == self.zero() => return Ok(false),
                Some(_) => {}
            }
        }
        Ok(true)
    }

    fn arrow_table(&self) -> Result<Vec<Vec<bool>>> {
        self.elements()
            .map(|s| self.elements().map(|t| self.arrow(s, t)).collect())
            .collect()
    }

    /// Whether `s → t` holds exactly when `s <= t`.
    pub fn is_separative(&self) -> Result<bool> {
        let arrows = self.arrow_table()?;
        Ok(self
            .elements()
            .all(|s| self.elements().all(|t| arrows[s][t] == self.leq(s, t))))
    }

    /// The quotient by `s ↔ t` (`s → t` and `t → s`).
    pub fn quotient_by_biarrow(&self) -> Result<Quotient<G>> {
        let arrows = self.arrow_table()?;
        let n = self.len();
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for s in 0..n {
            if class_of[s] != usize::MAX {
                continue;
            }
            let members: Vec<usize> = (s..n)
                .filter(|&t| arrows[s][t] && arrows[t][s])
                .collect();
            for &m in &members {
                class_of[m] = classes.len();
            }
            classes.push(members);
        }
        let names: Vec<String> = classes
            .iter()
            .map(|c| {
                if c.len() == 1 {
                    self.name(c[0]).to_string()
                } else {
                    let parts: Vec<&str> = c.iter().map(|&m| self.name(m)).collect();
                    format!("[{}]", parts.join("|"))
                }
            })
            .collect();
        let k = classes.len();
        let mut mul = vec![vec![0; k]; k];
        for a in 0..k {
            for b in 0..k {
                let target = class_of[self.mul(classes[a][0], classes[b][0])];
                for &x in &classes[a] {
                    for &y in &classes[b] {
                        if class_of[self.mul(x, y)] != target {
                            return Err(Error::precondition(format!(
                                "↔ is not a congruence at ({}, {})",
                                self.name(x),
                                self.name(y)
                            )));
                        }
                    }
                }
                mul[a][b] = target;
            }
        }
        let inv = classes.iter().map(|c| class_of[self.inv(c[0])]).collect();
        let zero = class_of[self.zero()];
        let mut deg = Vec::with_capacity(k);
        for (i, c) in classes.iter().enumerate() {
            if i == zero {
                if c.len() != 1 {
                    return Err(Error::precondition("↔ is not 0-restricted"));
                }
                deg.push(None);
                continue;
            }
            let d = self.deg(c[0]).cloned();
            if c.iter().any(|&m| self.deg(m).cloned() != d) {
                return Err(Error::precondition(format!(
                    "class {} is not homogeneous",
                    names[i]
                )));
            }
            deg.push(d);
        }
        let semigroup = GradedInverseSemigroup::new(
            names,
            zero,
            mul,
            inv,
            self.group().clone(),
            deg,
        )?;
        // the quotient sorted its elements by name; re-index our classes
        let remap: Vec<usize> = classes
            .iter()
            .map(|c| {
                let name = if c.len() == 1 {
                    self.name(c[0]).to_string()
                } else {
                    let parts: Vec<&str> = c.iter().map(|&m| self.name(m)).collect();
                    format!("[{}]", parts.join("|"))
                };
                semigroup.index_of(&name).expect("class name")
            })
            .collect();
        let class_of = class_of.into_iter().map(|c| remap[c]).collect();
        let mut sorted = vec![Vec::new(); k];
        for (i, c) in classes.into_iter().enumerate() {
            sorted[remap[i]] = c;
        }
        Ok(Quotient {
            semigroup,
            class_of,
            classes: sorted,
        })
    }

    /// `S_ε ∪ {0}` as a trivially graded inverse semigroup.
    pub fn restrict_epsilon(&self) -> Self {
        let (sub, _) = self
            .subsemigroup(&self.epsilon_part())
            .expect("S_ε is a subsemigroup");
        sub
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::{chain3, names, two_element};
    use super::*;
    use crate::grading::IntVectorGroup;

    #[test]
    fn chain_fails_principal_ideal_condition() {
        let s = chain3();
        let r = s.is_graded_boolean();
        assert!(r.meets.is_valid());
        assert!(r.idempotents.fails("principal-ideal-boolean"));
        assert!(!r.is_graded_boolean());
        assert!(!r.is_boolean());
    }

    #[test]
    fn two_element_is_boolean_and_separative() {
        let s = two_element();
        let r = s.is_graded_boolean();
        assert!(r.is_graded_boolean() && r.is_boolean());
        assert!(s.is_separative().unwrap());
        let e = s.index_of("e").unwrap();
        assert_eq!(s.relative_complement(e, e).unwrap(), s.zero());
        assert_eq!(s.relative_complement(s.zero(), e).unwrap(), e);
        assert!(s.arrow(s.zero(), e).unwrap());
    }

    #[test]
    fn chain_quotient_collapses_e_and_f() {
        // in 0 < e < f every nonzero r <= f meets e, so e ↔ f
        let s = chain3();
        assert!(!s.is_separative().unwrap());
        let q = s.quotient_by_biarrow().unwrap();
        assert_eq!(q.semigroup.len(), 2);
        assert_eq!(q.classes[q.class_of[s.zero()]], vec![s.zero()]);
        assert!(q.semigroup.is_separative().unwrap());
    }

    #[test]
    fn relative_complement_requires_order() {
        let s = chain3();
        let (e, f) = (s.index_of("e").unwrap(), s.index_of("f").unwrap());
        assert!(matches!(s.relative_complement(f, e), Err(Error::Precondition(_))));
        // f has no complement of e below it
        assert!(matches!(s.relative_complement(e, f), Err(Error::Precondition(_))));
    }

    #[test]
    fn restrict_epsilon_of_trivial_grading_is_identity() {
        let s = chain3();
        assert_eq!(s.restrict_epsilon(), s);
        let g = GradedInverseSemigroup::new(
            names(&["0", "e"]),
            0,
            vec![vec![0, 0], vec![0, 1]],
            vec![0, 1],
            IntVectorGroup::integers(),
            vec![None, Some(vec![0])],
        )
        .unwrap();
        assert_eq!(g.restrict_epsilon().len(), 2);
    }
}
