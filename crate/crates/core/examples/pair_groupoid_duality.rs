//! The slice semigroup of a graded pair groupoid is the graded symmetric
//! inverse monoid, and both roundtrips are isomorphisms.

use gstone::constructions::{graded_symmetric_inverse_monoid, pair_groupoid, GradedSet, DEFAULT_MAX_POINTS};
use gstone::duality::{
    check_roundtrip_gp, check_roundtrip_sg, pair_slice_identification, slice_semigroup, ultrafilter_groupoid,
};
use gstone::groupoid::DEFAULT_MAX_SLICES;
use gstone::IntVectorGroup;

fn main() -> gstone::Result<()> {
    let x = GradedSet::new(
        vec![("a".into(), vec![0]), ("b".into(), vec![1]), ("c".into(), vec![2])],
        IntVectorGroup::integers(),
    )?;
    let pair = pair_groupoid(&x)?;
    let slices = slice_semigroup(&pair, true, DEFAULT_MAX_SLICES)?;
    let igr = graded_symmetric_inverse_monoid(&x, DEFAULT_MAX_POINTS)?;
    let f = pair_slice_identification(&x, &pair, &slices, &igr)?;
    println!(
        "|S^gr(X × X)| = {}, |I^gr(X)| = {}, canonical map is an isomorphism: {}",
        slices.semigroup.len(),
        igr.len(),
        slices.semigroup.is_isomorphism_to(&igr, &f)
    );

    let dual = ultrafilter_groupoid(&igr)?;
    println!("G(I^gr(X)) has {} morphisms:", dual.groupoid.len());
    for m in dual.groupoid.morphisms() {
        println!("  {} of degree {}", dual.groupoid.name(m), dual.groupoid.deg(m)[0]);
    }

    for r in [
        check_roundtrip_sg("I^gr(X)", &igr, DEFAULT_MAX_SLICES)?,
        check_roundtrip_gp("X × X", &pair, DEFAULT_MAX_SLICES)?,
    ] {
        println!("{} {}: iso = {}", r.instance, r.direction, r.iso);
    }
    Ok(())
}
