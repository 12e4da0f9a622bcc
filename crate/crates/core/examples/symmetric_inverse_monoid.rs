//! The graded symmetric inverse monoid of a three point set, with a
//! nontrivial and a trivial grading.

use gstone::constructions::{graded_symmetric_inverse_monoid, GradedSet, DEFAULT_MAX_POINTS};
use gstone::IntVectorGroup;

fn main() -> gstone::Result<()> {
    let z = IntVectorGroup::integers();
    let nontrivial = GradedSet::new(
        vec![("a".into(), vec![0]), ("b".into(), vec![0]), ("c".into(), vec![1])],
        z,
    )?;
    let trivial = GradedSet::trivial(&["a", "b", "c"], z)?;

    for (label, x) in [("degrees 0,0,1", nontrivial), ("trivial grading", trivial)] {
        let s = graded_symmetric_inverse_monoid(&x, DEFAULT_MAX_POINTS)?;
        let verdict = s.is_graded_boolean();
        println!(
            "{label}: {} elements, graded-Boolean {}, Boolean {}",
            s.len(),
            verdict.is_graded_boolean(),
            verdict.is_boolean()
        );
        if let Some(v) = verdict.nongraded.violations.first() {
            println!(
                "  {} violations of the ungraded conditions, first: {} at ({})",
                verdict.nongraded.violations.len(),
                v.axiom,
                v.witness.join(", ")
            );
        }
        let ab = s.index_of("a->b,b->a")?;
        println!("  deg(a->b,b->a) = {}", s.degree_name(ab).unwrap_or_default());
    }
    Ok(())
}
