//! The functors `G(−)` and `S^gr(−)`, their action on morphisms, and the
//! natural isomorphisms `μ` and `ν`.

use crate::constructions::{pair_name, partial_bijection_name, GradedSet};
use crate::error::{Error, Result};
use crate::grading::GradedGroup;
use crate::groupoid::{FiniteGradedGroupoid, GroupoidMorphism, GroupoidTables};
use crate::invsemi::{GradedInverseSemigroup, SemigroupMorphism};
use crate::order::FilterSet;
use crate::report::Report;
use serde::Serialize;
use std::collections::HashMap;

/// `G(S)`: the groupoid of ultrafilters of `S`.
#[derive(Debug, Clone)]
pub struct UltrafilterGroupoid<G: GradedGroup> {
    pub groupoid: FiniteGradedGroupoid<G>,
    /// `ultrafilters[x]` is the ultrafilter behind morphism `x`.
    pub ultrafilters: Vec<FilterSet>,
    /// Set when `S` is not graded-Boolean; the construction still runs.
    pub warnings: Report,
}

impl<G: GradedGroup> UltrafilterGroupoid<G> {
    /// The morphism whose ultrafilter has exactly these members.
    pub fn find(&self, members: &[usize]) -> Option<usize> {
        self.ultrafilters.iter().position(|u| u.members == members)
    }

    /// `𝒴_s`: the morphisms whose ultrafilter contains `s`.
    pub fn containing(&self, s: usize) -> Vec<usize> {
        (0..self.ultrafilters.len())
            .filter(|&x| self.ultrafilters[x].contains(s))
            .collect()
    }
}

/// `S^gr(G)` (or `S(G)`): slices under slice multiplication.
#[derive(Debug, Clone)]
pub struct SliceSemigroup<G: GradedGroup> {
    pub semigroup: GradedInverseSemigroup<G>,
    /// `slices[i]` lists the groupoid morphisms of element `i`.
    pub slices: Vec<Vec<usize>>,
    lookup: HashMap<Vec<usize>, usize>,
}

impl<G: GradedGroup> SliceSemigroup<G> {
    /// The element whose slice is `set`, given sorted.
    pub fn find(&self, set: &[usize]) -> Option<usize> {
        self.lookup.get(set).copied()
    }

    /// `𝒳_x`: the elements whose slice contains `x`.
    pub fn containing(&self, x: usize) -> Vec<usize> {
        (0..self.slices.len())
            .filter(|&i| self.slices[i].binary_search(&x).is_ok())
            .collect()
    }
}

fn upward<G: GradedGroup>(s: &GradedInverseSemigroup<G>, set: impl IntoIterator<Item = usize>) -> Vec<usize> {
    let seed: Vec<usize> = set.into_iter().collect();
    s.natural_order()
        .expect("valid semigroup")
        .upward_closure(&seed)
}

/// Builds `G(S)`. Morphisms are named `U(m)` after the minimum `m` of their
/// ultrafilter.
pub fn ultrafilter_groupoid<G: GradedGroup>(s: &GradedInverseSemigroup<G>) -> Result<UltrafilterGroupoid<G>> {
    let report = s.validate();
    if !report.is_valid() {
        return Err(Error::input(format!("not a graded inverse semigroup: {report}")));
    }
    let mut warnings = Report::new();
    let boolean = s.is_graded_boolean();
    if !boolean.is_graded_boolean() {
        warnings.note("semigroup is not graded-Boolean; the ultrafilter groupoid is built regardless");
    }
    let ufs = s.natural_order()?.ultrafilters();
    let n = ufs.len();
    let lookup: HashMap<&[usize], usize> = ufs.iter().enumerate().map(|(i, u)| (u.members.as_slice(), i)).collect();
    let find = |set: Vec<usize>, what: &str| -> Result<usize> {
        lookup.get(set.as_slice()).copied().ok_or_else(|| {
            Error::precondition(format!("{what} is not an ultrafilter"))
        })
    };
    let product = |a: &FilterSet, b: &FilterSet| {
        upward(s, a.members.iter().flat_map(|&x| b.members.iter().map(move |&y| s.mul(x, y))))
    };
    let inv = ufs
        .iter()
        .map(|u| {
            let mut m: Vec<usize> = u.members.iter().map(|&x| s.inv(x)).collect();
            m.sort_unstable();
            find(m, "inverse")
        })
        .collect::<Result<Vec<_>>>()?;
    let d = (0..n)
        .map(|x| find(product(&ufs[inv[x]], &ufs[x]), "X⁻¹·X"))
        .collect::<Result<Vec<_>>>()?;
    let r = (0..n)
        .map(|x| find(product(&ufs[x], &ufs[inv[x]]), "X·X⁻¹"))
        .collect::<Result<Vec<_>>>()?;
    let mut comp = vec![vec![None; n]; n];
    for x in 0..n {
        for y in 0..n {
            if d[x] == r[y] {
                comp[x][y] = Some(find(product(&ufs[x], &ufs[y]), "(XY)↑")?);
            }
        }
    }
    let deg = ufs
        .iter()
        .map(|u| s.deg(u.minimum).expect("ultrafilters avoid zero").clone())
        .collect();
    let names: Vec<String> = ufs.iter().map(|u| format!("U({})", s.name(u.minimum))).collect();
    let groupoid = FiniteGradedGroupoid::new(
        GroupoidTables {
            names: names.clone(),
            d,
            r,
            comp,
            inv,
            deg,
        },
        s.group().clone(),
    )?;
    let mut ultrafilters = vec![None; n];
    for (i, u) in ufs.into_iter().enumerate() {
        ultrafilters[groupoid.index_of(&names[i])?] = Some(u);
    }
    Ok(UltrafilterGroupoid {
        groupoid,
        ultrafilters: ultrafilters.into_iter().map(|u| u.expect("all placed")).collect(),
        warnings,
    })
}

/// Name of the slice-semigroup element for `slice`.
pub fn slice_name<G: GradedGroup>(g: &FiniteGradedGroupoid<G>, slice: &[usize]) -> String {
    let names: Vec<&str> = slice.iter().map(|&x| g.name(x)).collect();
    format!("{{{}}}", names.join(","))
}

/// Builds `S^gr(G)` from the homogeneous slices, or `S(G)` with trivial
/// grading from all slices when `graded` is false.
pub fn slice_semigroup<G: GradedGroup>(
    g: &FiniteGradedGroupoid<G>,
    graded: bool,
    max_slices: usize,
) -> Result<SliceSemigroup<G>> {
    let slices = g.enumerate_slices(graded, max_slices)?;
    let lookup: HashMap<&[usize], usize> = slices.iter().enumerate().map(|(i, x)| (x.as_slice(), i)).collect();
    let find = |x: Vec<usize>| lookup[x.as_slice()];
    let mul = slices
        .iter()
        .map(|a| {
            slices
                .iter()
                .map(|b| Ok(find(g.slice_product(a, b)?)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let inv = slices
        .iter()
        .map(|a| Ok(find(g.slice_inverse(a)?)))
        .collect::<Result<Vec<_>>>()?;
    let deg = slices
        .iter()
        .map(|a| {
            let first = a.first()?;
            Some(if graded {
                g.deg(*first).clone()
            } else {
                g.group().identity()
            })
        })
        .collect();
    let names: Vec<String> = slices.iter().map(|x| slice_name(g, x)).collect();
    let zero = find(Vec::new());
    let semigroup = GradedInverseSemigroup::new_unchecked(names.clone(), zero, mul, inv, g.group().clone(), deg)?;
    let mut sorted = vec![Vec::new(); slices.len()];
    for (i, x) in slices.into_iter().enumerate() {
        sorted[semigroup.index_of(&names[i])?] = x;
    }
    let lookup = sorted.iter().enumerate().map(|(i, x)| (x.clone(), i)).collect();
    Ok(SliceSemigroup {
        semigroup,
        slices: sorted,
        lookup,
    })
}

/// `G(f)`: maps each ultrafilter of the target to its preimage.
pub fn dualize_sg_morphism<'a, G: GradedGroup>(
    f: &SemigroupMorphism<'_, G>,
    source_dual: &'a UltrafilterGroupoid<G>,
    target_dual: &'a UltrafilterGroupoid<G>,
) -> Result<GroupoidMorphism<'a, G>> {
    let report = f.validate();
    if !report.is_valid() {
        return Err(Error::precondition(format!("not a graded-Boolean morphism: {report}")));
    }
    let map = target_dual
        .ultrafilters
        .iter()
        .map(|y| {
            let pre: Vec<usize> = f.source.elements().filter(|&s| y.contains(f.apply(s))).collect();
            source_dual
                .find(&pre)
                .ok_or_else(|| Error::precondition("preimage of an ultrafilter is not an ultrafilter"))
        })
        .collect::<Result<Vec<_>>>()?;
    GroupoidMorphism::new(&target_dual.groupoid, &source_dual.groupoid, map)
}

/// `S^gr(f)`: maps each slice of the target to its preimage.
pub fn dualize_gp_morphism<'a, G: GradedGroup>(
    f: &GroupoidMorphism<'_, G>,
    source_dual: &'a SliceSemigroup<G>,
    target_dual: &'a SliceSemigroup<G>,
) -> Result<SemigroupMorphism<'a, G>> {
    let report = f.validate();
    if !report.is_valid() {
        return Err(Error::precondition(format!("not a graded covering functor: {report}")));
    }
    let map = target_dual
        .slices
        .iter()
        .map(|y| {
            let pre: Vec<usize> = f
                .source
                .morphisms()
                .filter(|&x| y.binary_search(&f.map[x]).is_ok())
                .collect();
            source_dual
                .find(&pre)
                .ok_or_else(|| Error::precondition("preimage of a slice is not a homogeneous slice"))
        })
        .collect::<Result<Vec<_>>>()?;
    SemigroupMorphism::new(&target_dual.semigroup, &source_dual.semigroup, map)
}

/// `μ: G → G(S^gr(G))`, `x ↦ 𝒳_x`.
pub fn mu<'a, G: GradedGroup>(
    g: &'a FiniteGradedGroupoid<G>,
    slices: &SliceSemigroup<G>,
    bidual: &'a UltrafilterGroupoid<G>,
) -> Result<GroupoidMorphism<'a, G>> {
    let map = g
        .morphisms()
        .map(|x| {
            bidual
                .find(&slices.containing(x))
                .ok_or_else(|| Error::precondition(format!("𝒳 of {} is not an ultrafilter", g.name(x))))
        })
        .collect::<Result<Vec<_>>>()?;
    GroupoidMorphism::new(g, &bidual.groupoid, map)
}

/// `ν: S → S^gr(G(S))`, `s ↦ 𝒴_s`.
pub fn nu<'a, G: GradedGroup>(
    s: &'a GradedInverseSemigroup<G>,
    dual: &UltrafilterGroupoid<G>,
    bidual: &'a SliceSemigroup<G>,
) -> Result<SemigroupMorphism<'a, G>> {
    let map = s
        .elements()
        .map(|a| {
            bidual
                .find(&dual.containing(a))
                .ok_or_else(|| Error::precondition(format!("𝒴 of {} is not a homogeneous slice", s.name(a))))
        })
        .collect::<Result<Vec<_>>>()?;
    SemigroupMorphism::new(s, &bidual.semigroup, map)
}

/// Outcome of a roundtrip check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RoundtripReport {
    pub instance: String,
    pub direction: String,
    pub iso: bool,
    pub witness: Option<String>,
}

/// Builds `S^gr(G(S))` and checks that `ν` is an isomorphism.
pub fn check_roundtrip_sg<G: GradedGroup>(
    instance: &str,
    s: &GradedInverseSemigroup<G>,
    max_slices: usize,
) -> Result<RoundtripReport> {
    let dual = ultrafilter_groupoid(s)?;
    let bidual = slice_semigroup(&dual.groupoid, true, max_slices)?;
    let witness = match nu(s, &dual, &bidual) {
        Err(e) => Some(e.to_string()),
        Ok(n) => {
            let report = n.validate();
            if !report.is_valid() {
                Some(report.to_string())
            } else if !n.is_isomorphism() {
                Some(format!("|S| = {}, |S^gr(G(S))| = {}", s.len(), bidual.semigroup.len()))
            } else {
                None
            }
        }
    };
    Ok(RoundtripReport {
        instance: instance.to_string(),
        direction: "sg→gp→sg".to_string(),
        iso: witness.is_none(),
        witness,
    })
}

/// Builds `G(S^gr(G))` and checks that `μ` is an isomorphism.
pub fn check_roundtrip_gp<G: GradedGroup>(
    instance: &str,
    g: &FiniteGradedGroupoid<G>,
    max_slices: usize,
) -> Result<RoundtripReport> {
    let slices = slice_semigroup(g, true, max_slices)?;
    let bidual = ultrafilter_groupoid(&slices.semigroup)?;
    let witness = match mu(g, &slices, &bidual) {
        Err(e) => Some(e.to_string()),
        Ok(m) => {
            let report = m.validate();
            if !report.is_valid() {
                Some(report.to_string())
            } else if !m.is_isomorphism() {
                Some(format!("|G| = {}, |G(S^gr(G))| = {}", g.len(), bidual.groupoid.len()))
            } else {
                None
            }
        }
    };
    Ok(RoundtripReport {
        instance: instance.to_string(),
        direction: "gp→sg→gp".to_string(),
        iso: witness.is_none(),
        witness,
    })
}

/// Checks `ν_T ∘ f = S^gr(G(f)) ∘ ν_S` for a morphism `f: S → T`.
pub fn check_naturality_sg<G: GradedGroup>(f: &SemigroupMorphism<'_, G>, max_slices: usize) -> Result<Report> {
    let (gs, gt) = (ultrafilter_groupoid(f.source)?, ultrafilter_groupoid(f.target)?);
    let (ss, st) = (
        slice_semigroup(&gs.groupoid, true, max_slices)?,
        slice_semigroup(&gt.groupoid, true, max_slices)?,
    );
    let (nu_s, nu_t) = (nu(f.source, &gs, &ss)?, nu(f.target, &gt, &st)?);
    let gf = dualize_sg_morphism(f, &gs, &gt)?;
    let sgf = dualize_gp_morphism(&gf, &st, &ss)?;
    let mut report = Report::new();
    for a in f.source.elements() {
        if nu_t.apply(f.apply(a)) != sgf.apply(nu_s.apply(a)) {
            report.push("naturality-of-nu", [f.source.name(a)]);
        }
    }
    Ok(report)
}

/// Checks `μ_H ∘ f = G(S^gr(f)) ∘ μ_G` for a covering functor `f: G → H`.
pub fn check_naturality_gp<G: GradedGroup>(f: &GroupoidMorphism<'_, G>, max_slices: usize) -> Result<Report> {
    let (sg, sh) = (
        slice_semigroup(f.source, true, max_slices)?,
        slice_semigroup(f.target, true, max_slices)?,
    );
    let (gg, gh) = (ultrafilter_groupoid(&sg.semigroup)?, ultrafilter_groupoid(&sh.semigroup)?);
    let (mu_g, mu_h) = (mu(f.source, &sg, &gg)?, mu(f.target, &sh, &gh)?);
    let sf = dualize_gp_morphism(f, &sg, &sh)?;
    let gsf = dualize_sg_morphism(&sf, &gh, &gg)?;
    let mut report = Report::new();
    for x in f.source.morphisms() {
        if mu_h.map[f.map[x]] != gsf.map[mu_g.map[x]] {
            report.push("naturality-of-mu", [f.source.name(x)]);
        }
    }
    Ok(report)
}

/// Checks that `S^gr` sends identities to identities and `g ∘ f` to
/// `S^gr(f) ∘ S^gr(g)`, and likewise that `G` does so on the dual
/// semigroup morphisms.
pub fn check_contravariance<G: GradedGroup>(
    f: &GroupoidMorphism<'_, G>,
    g: &GroupoidMorphism<'_, G>,
    max_slices: usize,
) -> Result<Report> {
    let gf = f.then(g)?;
    let sa = slice_semigroup(f.source, true, max_slices)?;
    let sb = slice_semigroup(f.target, true, max_slices)?;
    let sc = slice_semigroup(g.target, true, max_slices)?;
    let s_f = dualize_gp_morphism(f, &sa, &sb)?;
    let s_g = dualize_gp_morphism(g, &sb, &sc)?;
    let s_gf = dualize_gp_morphism(&gf, &sa, &sc)?;
    let mut report = Report::new();
    if s_g.then(&s_f)?.map != s_gf.map {
        report.push("slice-functor-contravariant", Vec::<String>::new());
    }
    let id = dualize_gp_morphism(&GroupoidMorphism::identity(f.source), &sa, &sa)?;
    if id.map != SemigroupMorphism::identity(&sa.semigroup).map {
        report.push("slice-functor-identity", Vec::<String>::new());
    }
    let (ua, ub, uc) = (
        ultrafilter_groupoid(&sa.semigroup)?,
        ultrafilter_groupoid(&sb.semigroup)?,
        ultrafilter_groupoid(&sc.semigroup)?,
    );
    let g_sf = dualize_sg_morphism(&s_f, &ub, &ua)?;
    let g_sg = dualize_sg_morphism(&s_g, &uc, &ub)?;
    let g_sgf = dualize_sg_morphism(&s_gf, &uc, &ua)?;
    if g_sf.then(&g_sg)?.map != g_sgf.map {
        report.push("ultrafilter-functor-contravariant", Vec::<String>::new());
    }
    let id = dualize_sg_morphism(&SemigroupMorphism::identity(&sa.semigroup), &ua, &ua)?;
    if id.map != GroupoidMorphism::identity(&ua.groupoid).map {
        report.push("ultrafilter-functor-identity", Vec::<String>::new());
    }
    Ok(report)
}

/// The identification of `S^gr(X × X)` with `I^gr(X)` sending the slice
/// `{(xᵢ, yᵢ)}` to the partial bijection `xᵢ ↦ yᵢ`.
pub fn pair_slice_identification<G: GradedGroup>(
    x: &GradedSet<G>,
    pair: &FiniteGradedGroupoid<G>,
    slices: &SliceSemigroup<G>,
    igr: &GradedInverseSemigroup<G>,
) -> Result<Vec<usize>> {
    let n = x.len();
    let mut ends = vec![(0, 0); pair.len()];
    for a in 0..n {
        for b in 0..n {
            ends[pair.index_of(&pair_name(&x.points()[a], &x.points()[b]))?] = (a, b);
        }
    }
    slices
        .slices
        .iter()
        .map(|slice| {
            let mut map = vec![None; n];
            for &m in slice {
                let (a, b) = ends[m];
                map[a] = Some(b);
            }
            igr.index_of(&partial_bijection_name(x, &map))
        })
        .collect()
}
