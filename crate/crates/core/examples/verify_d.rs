//! Certifies `T_N Ō_M = T_N C_M` for a type D quiver over small dimension
//! vectors. Usage: `verify_d [rank] [max_coord]`.

use dynkin_tangent::tangent::{dimension_vectors_up_to, verify_theorem, VerifyOptions};
use dynkin_tangent::{DynkinGraph, DynkinQuiver, DynkinType, PrimeField, RepContext};

fn main() -> dynkin_tangent::Result<()> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let rank = args.first().copied().unwrap_or(4);
    let max_coord = args.get(1).copied().unwrap_or(1) as i64;
    let quiver = DynkinQuiver::with_default_orientation(DynkinGraph::build(DynkinType::D, rank)?);
    let ctx = RepContext::for_quiver(quiver, PrimeField::default(), 7);
    let dims = dimension_vectors_up_to(rank, max_coord, None);
    let report = verify_theorem(&ctx, &dims, &VerifyOptions::default())?;
    let s = &report.summary;
    println!(
        "D{rank} orientation {}: {} dimension vectors, {} pairs, {} vectors, {} certified",
        ctx.quiver().orientation_string(),
        s.dimension_vectors,
        s.instances,
        s.vectors,
        s.certified
    );
    println!(
        "orbit leaves {}, curve leaves {}, descent nodes {} in {} pairs, max depth {}",
        s.orbit_leaves, s.curve_leaves, s.descent_nodes, s.instances_with_descent, s.max_depth
    );
    println!("verdict: {:?}", report.verdict);
    for (inst, f) in report.findings().take(5) {
        println!("  {:?} {:?}", inst.dimv, f);
    }
    Ok(())
}
