//! Naturality of the unit maps along a covering functor that folds two
//! copies of a groupoid onto one, and along its dual semigroup morphism.

use gstone::constructions::{pair_groupoid, GradedSet};
use gstone::duality::{check_contravariance, check_naturality_gp, check_naturality_sg, dualize_gp_morphism, slice_semigroup};
use gstone::groupoid::{FiniteGradedGroupoid, GroupoidMorphism, DEFAULT_MAX_SLICES};
use gstone::IntVectorGroup;

fn main() -> gstone::Result<()> {
    let x = GradedSet::new(vec![("a".into(), vec![0]), ("b".into(), vec![1])], IntVectorGroup::integers())?;
    let g = pair_groupoid(&x)?;
    let two = FiniteGradedGroupoid::disjoint_union(&[&g, &g])?;
    let map = two
        .morphisms()
        .map(|m| g.index_of(two.name(m).split_once('/').expect("tagged name").1))
        .collect::<gstone::Result<Vec<_>>>()?;
    let fold = GroupoidMorphism::new(&two, &g, map)?;
    println!("fold is a covering functor: {}", fold.validate().is_valid());
    println!("naturality of μ: {}", check_naturality_gp(&fold, DEFAULT_MAX_SLICES)?);

    let s_two = slice_semigroup(&two, true, DEFAULT_MAX_SLICES)?;
    let s_g = slice_semigroup(&g, true, DEFAULT_MAX_SLICES)?;
    let dual = dualize_gp_morphism(&fold, &s_two, &s_g)?;
    println!(
        "S^gr(fold): {} → {} elements, {}",
        dual.source.len(),
        dual.target.len(),
        dual.validate()
    );
    println!("naturality of ν: {}", check_naturality_sg(&dual, DEFAULT_MAX_SLICES)?);

    let id = GroupoidMorphism::identity(&g);
    println!("contravariance: {}", check_contravariance(&fold, &id, DEFAULT_MAX_SLICES)?);
    Ok(())
}
