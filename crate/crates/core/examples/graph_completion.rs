//! A graph inverse semigroup is not graded-Boolean, but its distributive
//! completion is, and the completion survives the roundtrip.

use gstone::constructions::{distributive_completion, graph_inverse_semigroup, FiniteGraph, DEFAULT_MAX_IDEALS};
use gstone::duality::check_roundtrip_sg;
use gstone::groupoid::DEFAULT_MAX_SLICES;
use gstone::invsemi::DEFAULT_MAX_ELEMENTS;

fn main() -> gstone::Result<()> {
    let graph = FiniteGraph::new(&["u", "v", "w"], &[("e", "u", "w"), ("f", "v", "w")])?;
    let s = graph_inverse_semigroup(&graph, DEFAULT_MAX_ELEMENTS)?;
    println!("{} elements: {}", s.len(), s.names().join(" "));
    println!(
        "graded-Boolean: {}, separative: {}",
        s.is_graded_boolean().is_graded_boolean(),
        s.is_separative()?
    );

    let d = distributive_completion(&s, true, DEFAULT_MAX_IDEALS)?;
    println!(
        "D^gr(S): {} elements from {} compatible ideals, graded-Boolean: {}",
        d.semigroup.len(),
        d.ideals.ideals.len(),
        d.semigroup.is_graded_boolean().is_graded_boolean()
    );
    let embed = d.principal_map();
    for a in s.nonzero() {
        println!("  {} ↦ {}", s.name(a), d.semigroup.name(embed[a]));
    }
    let r = check_roundtrip_sg("D^gr(S)", &d.semigroup, DEFAULT_MAX_SLICES)?;
    println!("roundtrip {}: iso = {}", r.direction, r.iso);
    Ok(())
}
