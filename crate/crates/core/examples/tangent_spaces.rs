//! `T_N O_N ⊆ T_N C_M` for every pair of orbits of a D4 dimension vector.

use dynkin_tangent::tangent::{tangent_to_cm, tangent_to_orbit};
use dynkin_tangent::{
    DegenerationPoset, DimVector, DynkinGraph, DynkinQuiver, DynkinType, PrimeField, RepContext,
};

fn main() -> dynkin_tangent::Result<()> {
    let q = DynkinQuiver::with_default_orientation(DynkinGraph::build(DynkinType::D, 4)?);
    let ctx = RepContext::for_quiver(q, PrimeField::default(), 2);
    let poset = DegenerationPoset::build(ctx.cat(), &DimVector(vec![1, 1, 2, 1]))?;
    for (mi, m) in poset.orbits.iter().enumerate() {
        for (ni, n) in poset.orbits.iter().enumerate() {
            if !poset.leq[ni][mi] {
                continue;
            }
            let point = ctx.realize_sum(&n.multiset)?;
            let t = tangent_to_cm(&ctx, m, &point)?;
            let t_orbit = tangent_to_orbit(&point)?;
            println!(
                "M={mi} N={ni}: dim T_N O_N = {}, dim T_N C_M = {}",
                t_orbit.dim(),
                t.dim()
            );
        }
    }
    Ok(())
}
