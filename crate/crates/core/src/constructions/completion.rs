use crate::error::{Error, Result};
use crate::grading::GradedGroup;
use crate::invsemi::{GradedInverseSemigroup, Quotient};
use std::collections::HashMap;

/// Default bound on the number of compatible order ideals enumerated.
pub const DEFAULT_MAX_IDEALS: usize = 20_000;

/// Compatible order ideals of a semigroup under subset multiplication.
#[derive(Debug, Clone)]
pub struct IdealSemigroup<G: GradedGroup> {
    pub semigroup: GradedInverseSemigroup<G>,
    /// `ideals[i]` lists the members of element `i`, as sorted indices into
    /// the underlying semigroup.
    pub ideals: Vec<Vec<usize>>,
}

/// A distributive completion with the intermediate objects it was built from.
#[derive(Debug, Clone)]
pub struct Completion<G: GradedGroup> {
    pub semigroup: GradedInverseSemigroup<G>,
    /// The separative quotient `S/↔`.
    pub quotient: Quotient<G>,
    /// The ideals of `S/↔` the completion is a quotient of.
    pub ideals: IdealSemigroup<G>,
    /// `class_of[i]` is the completion element containing ideal `i`.
    pub class_of: Vec<usize>,
    /// Ideal indices making up each completion element.
    pub classes: Vec<Vec<usize>>,
}

impl<G: GradedGroup> Completion<G> {
    /// The map `s ↦ [{[s]}↓]` from the original semigroup.
    pub fn principal_map(&self) -> Vec<usize> {
        let q = &self.quotient.semigroup;
        let lookup: HashMap<&[usize], usize> = self
            .ideals
            .ideals
            .iter()
            .enumerate()
            .map(|(i, m)| (m.as_slice(), i))
            .collect();
        self.quotient
            .class_of
            .iter()
            .map(|&c| {
                let down: Vec<usize> = q.elements().filter(|&x| q.leq(x, c)).collect();
                self.class_of[lookup[down.as_slice()]]
            })
            .collect()
    }
}

fn ideal_name<G: GradedGroup>(s: &GradedInverseSemigroup<G>, members: &[usize]) -> String {
    let gens: Vec<&str> = members
        .iter()
        .copied()
        .filter(|&a| a != s.zero() && !members.iter().any(|&b| b != a && s.leq(a, b)))
        .map(|a| s.name(a))
        .collect();
    format!("<{}>", gens.join("; "))
}

/// `FC(S)`, or `FC^gr(S)` when `graded`: all compatible order ideals of
/// `s` (homogeneous ones only, if graded). Nonzero ideals carry the degree
/// of their members when graded and `ε` otherwise.
pub fn fc_gr<G: GradedGroup>(
    s: &GradedInverseSemigroup<G>,
    graded: bool,
    max_ideals: usize,
) -> Result<IdealSemigroup<G>> {
    let order = s.natural_order()?;
    let mut by_height: Vec<usize> = s.nonzero().collect();
    let height = |x: usize| s.elements().filter(|&y| order.leq(y, x)).count();
    by_height.sort_by_key(|&x| (height(x), x));
    let mut ideals = Vec::new();
    let mut included = vec![false; s.len()];
    included[s.zero()] = true;
    let mut current = vec![s.zero()];
    enumerate_ideals(s, graded, &by_height, 0, &mut included, &mut current, &mut ideals, max_ideals)?;
    for ideal in &mut ideals {
        ideal.sort_unstable();
    }
    ideals.sort();
    let lookup: HashMap<&[usize], usize> = ideals.iter().enumerate().map(|(i, m)| (m.as_slice(), i)).collect();
    let find = |mut set: Vec<usize>| -> Result<usize> {
        set.sort_unstable();
        set.dedup();
        lookup
            .get(set.as_slice())
            .copied()
            .ok_or_else(|| Error::precondition("ideals are not closed under multiplication"))
    };
    let mut mul = Vec::with_capacity(ideals.len());
    for a in &ideals {
        let row = ideals
            .iter()
            .map(|b| find(a.iter().flat_map(|&x| b.iter().map(move |&y| s.mul(x, y))).collect()))
            .collect::<Result<Vec<_>>>()?;
        mul.push(row);
    }
    let inv = ideals
        .iter()
        .map(|a| find(a.iter().map(|&x| s.inv(x)).collect()))
        .collect::<Result<Vec<_>>>()?;
    let zero = lookup[[s.zero()].as_slice()];
    let deg = ideals
        .iter()
        .map(|a| {
            let x = a.iter().copied().find(|&x| x != s.zero())?;
            Some(if graded {
                s.deg(x).expect("nonzero").clone()
            } else {
                s.group().identity()
            })
        })
        .collect();
    let names: Vec<String> = ideals.iter().map(|a| ideal_name(s, a)).collect();
    let semigroup =
        GradedInverseSemigroup::new_unchecked(names.clone(), zero, mul, inv, s.group().clone(), deg)?;
    let mut sorted = vec![Vec::new(); ideals.len()];
    for (i, a) in ideals.into_iter().enumerate() {
        sorted[semigroup.index_of(&names[i])?] = a;
    }
    Ok(IdealSemigroup {
        semigroup,
        ideals: sorted,
    })
}

#[allow(clippy::too_many_arguments)]
fn enumerate_ideals<G: GradedGroup>(
    s: &GradedInverseSemigroup<G>,
    graded: bool,
    order: &[usize],
    from: usize,
    included: &mut [bool],
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    max: usize,
) -> Result<()> {
    if from == order.len() {
        if out.len() >= max {
            return Err(Error::resource("compatible order ideals", max));
        }
        out.push(current.clone());
        return Ok(());
    }
    let x = order[from];
    enumerate_ideals(s, graded, order, from + 1, included, current, out, max)?;
    let below_ok = s.elements().all(|y| y == x || !s.leq(y, x) || included[y]);
    let fits = current.iter().all(|&y| {
        y == s.zero() || (s.compatibility(x, y).is_compatible() && (!graded || s.deg(x) == s.deg(y)))
    });
    if below_ok && fits {
        included[x] = true;
        current.push(x);
        enumerate_ideals(s, graded, order, from + 1, included, current, out, max)?;
        current.pop();
        included[x] = false;
    }
    Ok(())
}

/// Whether `a → b` for order ideals: every nonzero `r ∈ a` meets some
/// member of `b` nontrivially.
fn ideal_arrow<G: GradedGroup>(s: &GradedInverseSemigroup<G>, a: &[usize], b: &[usize]) -> Result<bool> {
    for &r in a.iter().filter(|&&r| r != s.zero()) {
        let mut hit = false;
        for &t in b {
            let m = s.meet(r, t).ok_or_else(|| {
                Error::precondition(format!("{} and {} have no meet", s.name(r), s.name(t)))
            })?;
            if m != s.zero() {
                hit = true;
                break;
            }
        }
        if !hit {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `D^gr(S) = FC^gr(S/↔)/≡`, or `D(S)` with trivial grading when not
/// `graded`. Each completion element is named after its largest ideal.
pub fn distributive_completion<G: GradedGroup>(
    s: &GradedInverseSemigroup<G>,
    graded: bool,
    max_ideals: usize,
) -> Result<Completion<G>> {
    let quotient = s.quotient_by_biarrow()?;
    let q = &quotient.semigroup;
    let fc = fc_gr(q, graded, max_ideals)?;
    let k = fc.ideals.len();
    let arrows = fc
        .ideals
        .iter()
        .map(|a| fc.ideals.iter().map(|b| ideal_arrow(q, a, b)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let mut class_of = vec![usize::MAX; k];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..k {
        if class_of[i] != usize::MAX {
            continue;
        }
        let members: Vec<usize> = (i..k).filter(|&j| arrows[i][j] && arrows[j][i]).collect();
        for &m in &members {
            class_of[m] = classes.len();
        }
        classes.push(members);
    }
    let fs = &fc.semigroup;
    let rep = |c: &[usize]| -> usize {
        *c.iter()
            .max_by(|&&a, &&b| {
                fc.ideals[a]
                    .len()
                    .cmp(&fc.ideals[b].len())
                    .then_with(|| fc.ideals[b].cmp(&fc.ideals[a]))
            })
            .expect("nonempty class")
    };
    let n = classes.len();
    let mut mul = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            let target = class_of[fs.mul(classes[a][0], classes[b][0])];
            for &x in &classes[a] {
                for &y in &classes[b] {
                    if class_of[fs.mul(x, y)] != target {
                        return Err(Error::precondition(format!(
                            "≡ is not a congruence at ({}, {})",
                            fs.name(x),
                            fs.name(y)
                        )));
                    }
                }
            }
            mul[a][b] = target;
        }
    }
    let inv = classes.iter().map(|c| class_of[fs.inv(c[0])]).collect();
    let zero = class_of[fs.zero()];
    let mut deg = Vec::with_capacity(n);
    for (i, c) in classes.iter().enumerate() {
        if i == zero {
            if c.len() != 1 {
                return Err(Error::precondition("≡ identifies a nonzero ideal with zero"));
            }
            deg.push(None);
            continue;
        }
        let d = fs.deg(c[0]).cloned();
        if c.iter().any(|&m| fs.deg(m).cloned() != d) {
            return Err(Error::precondition("≡ class is not homogeneous"));
        }
        deg.push(d);
    }
    let names: Vec<String> = classes.iter().map(|c| fs.name(rep(c)).to_string()).collect();
    let semigroup = GradedInverseSemigroup::new_unchecked(names.clone(), zero, mul, inv, s.group().clone(), deg)?;
    let remap = names
        .iter()
        .map(|nm| semigroup.index_of(nm))
        .collect::<Result<Vec<_>>>()?;
    let class_of = class_of.into_iter().map(|c| remap[c]).collect();
    let mut sorted = vec![Vec::new(); n];
    for (i, c) in classes.into_iter().enumerate() {
        sorted[remap[i]] = c;
    }
    Ok(Completion {
        semigroup,
        quotient,
        ideals: fc,
        class_of,
        classes: sorted,
    })
}
