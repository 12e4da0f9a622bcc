//! Runs the property checks on a handful of seeded random instances.

use gstone::groupoid::DEFAULT_MAX_SLICES;
use gstone::lemmas::{lemma_suite, random_instance};

fn main() -> gstone::Result<()> {
    for seed in 0..6 {
        let (name, s) = random_instance(seed)?;
        let report = lemma_suite(&s, DEFAULT_MAX_SLICES)?;
        let cases: usize = report.checks.iter().map(|c| c.cases).sum();
        println!(
            "seed {seed}: {name} ({} elements): {} checks over {cases} cases, valid = {}",
            s.len(),
            report.checks.len(),
            report.is_valid()
        );
        for reason in &report.skipped {
            println!("  skipped: {reason}");
        }
    }
    Ok(())
}
