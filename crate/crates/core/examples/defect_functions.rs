//! `δ_{M,N}` from mesh pairings and from matrices, and `δ_σ` of an
//! extension that reaches the value 2 on a D5 quiver.

use dynkin_tangent::degeneration::{delta_mn_matrix, delta_sigma};
use dynkin_tangent::reps::{cocycle_space_dim, Cocycle};
use dynkin_tangent::{
    DynkinGraph, DynkinQuiver, DynkinType, ObjectMultiset, PrimeField, RepContext,
};

fn main() -> dynkin_tangent::Result<()> {
    let q = DynkinQuiver::with_default_orientation(DynkinGraph::build(DynkinType::D, 5)?);
    let ctx = RepContext::for_quiver(q, PrimeField::default(), 3);
    let z = ctx.cat().zdelta();
    let g = ctx.cat().graph();
    let m: ObjectMultiset = [z.vertex_by_label(2, "b0")?, z.vertex_by_label(4, "b0")?]
        .into_iter()
        .collect();
    let n: ObjectMultiset = [(0, "b0"), (3, "c'"), (3, "c''"), (6, "b0")]
        .iter()
        .map(|&(p, l)| z.vertex_by_label(p, l))
        .collect::<dynkin_tangent::Result<_>>()?;
    let combinatorial = ctx.cat().delta_pair(&m, &n)?;
    let matrix = delta_mn_matrix(&ctx, &ctx.realize_sum(&m)?, &ctx.realize_sum(&n)?)?;
    assert_eq!(combinatorial, matrix);
    for (mesh, value) in combinatorial.iter() {
        println!("delta_MN(m({},{})) = {value}", mesh.p, g.label(mesh.a));
    }
    let u = ctx.realize(z.vertex_by_label(0, "b0")?)?;
    let v = ctx.realize(z.vertex_by_label(6, "b0")?)?;
    let mut rng = ctx.rng(1);
    let coords: Vec<u32> = (0..cocycle_space_dim(&v, &u))
        .map(|_| ctx.field().random(&mut rng))
        .collect();
    let ds = delta_sigma(&ctx, &u, &Cocycle::from_vec(&v, &u, &coords), &v)?;
    for (mesh, value) in ds.iter() {
        println!("delta_sigma(m({},{})) = {value}", mesh.p, g.label(mesh.a));
    }
    Ok(())
}
