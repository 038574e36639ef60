//! Orbits of a dimension vector ordered by degeneration, with DOT output.

use dynkin_tangent::{
    DegenerationPoset, DimVector, DynkinGraph, DynkinQuiver, DynkinType, MeshCategory,
};

fn main() -> dynkin_tangent::Result<()> {
    let cat = MeshCategory::new(DynkinQuiver::with_default_orientation(DynkinGraph::build(
        DynkinType::A,
        3,
    )?));
    let poset = DegenerationPoset::build(&cat, &DimVector(vec![1, 2, 1]))?;
    poset.validate()?;
    for (i, o) in poset.orbits.iter().enumerate() {
        let summands: Vec<String> = o
            .multiset
            .iter()
            .map(|(v, k)| format!("v({},{})^{k}", v.p, cat.graph().label(v.a)))
            .collect();
        println!(
            "{i}: codim {}  {}",
            o.codimension(&cat),
            summands.join(" + ")
        );
    }
    for (lo, hi) in poset.covers() {
        println!("O_{lo} < O_{hi}");
    }
    print!("{}", poset.to_dot(&cat));
    Ok(())
}
