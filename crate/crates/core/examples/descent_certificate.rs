//! A tangent vector of a D5 rank scheme whose certificate needs a descent
//! to a point of a larger orbit.

use dynkin_tangent::tangent::{
    certify_tangent, random_conjugate, tangent_to_cm, CertNode, DescentBudget,
};
use dynkin_tangent::{
    Cocycle, DynkinGraph, DynkinQuiver, DynkinType, ObjectMultiset, Orbit, PrimeField, RepContext,
};

fn main() -> dynkin_tangent::Result<()> {
    let q = DynkinQuiver::with_default_orientation(DynkinGraph::build(DynkinType::D, 5)?);
    let ctx = RepContext::for_quiver(q, PrimeField::default(), 7);
    let z = ctx.cat().zdelta();
    let m: ObjectMultiset = [z.vertex_by_label(2, "b0")?, z.vertex_by_label(4, "b0")?]
        .into_iter()
        .collect();
    let n: ObjectMultiset = [(0, "b0"), (3, "c'"), (3, "c''"), (6, "b0")]
        .iter()
        .map(|&(p, l)| z.vertex_by_label(p, l))
        .collect::<dynkin_tangent::Result<_>>()?;
    let m = Orbit::new(ctx.cat(), m);
    let point = random_conjugate(&ctx, &ctx.realize_sum(&n)?, 1)?;
    let t = tangent_to_cm(&ctx, &m, &point)?;
    let mut rng = ctx.rng(4);
    let vector = t
        .basis()
        .iter()
        .fold(Cocycle::zero(&point, &point), |acc, b| {
            acc.add(&b.scale(ctx.field().random(&mut rng)))
        });
    let cert =
        certify_tangent(&ctx, &m, &point, &vector, &DescentBudget::default()).expect("certified");
    cert.replay(&ctx, &m)?;
    println!(
        "depth {}, {} descent nodes",
        cert.root.depth(),
        cert.root.descent_nodes()
    );
    for node in &cert.root.nodes {
        if let CertNode::Descent { p, q, step, .. } = node {
            println!(
                "block ({p},{q}) pulled back along summand {}: orbit dimension {} -> {}",
                step.r, step.orbit_dim_before, step.orbit_dim_after
            );
        }
    }
    println!(
        "{}",
        serde_json::to_string_pretty(&cert.root.to_json(&ctx)).expect("serializable")
    );
    Ok(())
}
