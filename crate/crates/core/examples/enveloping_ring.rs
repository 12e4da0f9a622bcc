//! Enveloping rings of all slices and of homogeneous slices agree.

use gstone::constructions::{group_groupoid, pair_groupoid, GradedSet};
use gstone::groupoid::DEFAULT_MAX_SLICES;
use gstone::ring::{phi_psi_iso_check, EnvelopingRing, PrimeField, Rationals};
use gstone::{IntVectorGroup, TableGroup};

fn main() -> gstone::Result<()> {
    let x = GradedSet::new(vec![("a".into(), vec![0]), ("b".into(), vec![1])], IntVectorGroup::integers())?;
    let pair = pair_groupoid(&x)?;
    let f2 = PrimeField::new(2)?;
    for report in [
        phi_psi_iso_check(Rationals, &pair, DEFAULT_MAX_SLICES)?,
        phi_psi_iso_check(f2, &pair, DEFAULT_MAX_SLICES)?,
    ] {
        println!(
            "pair groupoid over {}: dims {} and {}, iso = {}",
            report.field, report.dim_nongraded, report.dim_graded, report.iso
        );
    }

    let z2 = group_groupoid(&TableGroup::cyclic(2))?;
    let report = phi_psi_iso_check(Rationals, &z2, DEFAULT_MAX_SLICES)?;
    println!("Z/2 over Q: dim {}, iso = {}", report.dim_graded, report.iso);

    let slices = gstone::duality::slice_semigroup(&pair, true, DEFAULT_MAX_SLICES)?;
    let ring = EnvelopingRing::new(Rationals, &slices.semigroup, true)?;
    println!(
        "F[S^gr] has dimension {}; {} relators generate an ideal of rank {}",
        ring.algebra().dim(),
        ring.relators().len(),
        ring.ideal_rank()
    );
    Ok(())
}
