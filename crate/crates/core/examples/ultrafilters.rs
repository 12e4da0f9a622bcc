//! Filters and ultrafilters of a small poset with a bottom element: the
//! subsets of {a, b, c} that do not contain both b and c, under inclusion.

use gstone::FinitePoset;

fn main() -> gstone::Result<()> {
    let masks: Vec<u8> = (0u8..8).filter(|m| m & 0b110 != 0b110).collect();
    let name = |m: u8| {
        let s: String = "abc".chars().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, c)| c).collect();
        if s.is_empty() { "∅".to_string() } else { s }
    };
    let poset = FinitePoset::from_relation(masks.iter().map(|&m| name(m)).collect(), 0, |x, y| {
        masks[x] & !masks[y] == 0
    })?;

    println!("lattice: {}, distributive: {}", poset.is_lattice(), poset.is_distributive());
    for u in poset.ultrafilters() {
        println!(
            "ultrafilter generated by {}: {{{}}}",
            poset.name(u.minimum),
            poset.subset_names(&u.members).join(", ")
        );
    }

    let up = poset.upward_closure(&poset.subset(&["ab"])?);
    println!("{{ab}}↑ = {{{}}}, an ultrafilter: {}", poset.subset_names(&up).join(", "), poset.is_ultrafilter(&up));
    Ok(())
}
