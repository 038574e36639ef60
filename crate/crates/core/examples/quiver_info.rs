//! Dynkin data: `n_Δ`, the involution `φ_Δ`, maximal roots and root counts.

use dynkin_tangent::{DynkinGraph, DynkinType};

fn main() -> dynkin_tangent::Result<()> {
    for (ty, n) in [
        (DynkinType::A, 4),
        (DynkinType::D, 6),
        (DynkinType::E, 6),
        (DynkinType::E, 8),
    ] {
        let g = DynkinGraph::build(ty, n)?;
        let phi: Vec<&str> = g.phi().iter().map(|&b| g.label(b)).collect();
        println!(
            "{}: n_delta {}, {} positive roots, maximal root {}, phi {:?}",
            g.name(),
            g.delta_number(),
            g.positive_roots().len(),
            g.maximal_root(),
            phi
        );
    }
    Ok(())
}
