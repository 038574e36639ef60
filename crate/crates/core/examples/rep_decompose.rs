//! Decomposes a representation given by matrices into indecomposables and
//! builds the block-diagonal model with an explicit isomorphism.

use dynkin_tangent::reps::MatrixRep;
use dynkin_tangent::tangent::random_conjugate;
use dynkin_tangent::{
    DynkinGraph, DynkinQuiver, DynkinType, ObjectMultiset, PrimeField, RepContext,
};

fn main() -> dynkin_tangent::Result<()> {
    let q = DynkinQuiver::with_default_orientation(DynkinGraph::build(DynkinType::D, 4)?);
    let ctx = RepContext::for_quiver(q, PrimeField::default(), 5);
    let vs = ctx.cat().gamma().vertices();
    let target: ObjectMultiset = [vs[1], vs[3], vs[3], vs[6]].into_iter().collect();
    let n = random_conjugate(&ctx, &ctx.realize_sum(&target)?, 9)?;
    let json = serde_json::to_string(&n.to_json()).expect("serializable");
    println!("{json}");
    let back = MatrixRep::from_json(&serde_json::from_str(&json).expect("valid"), ctx.field())?;
    let dec = ctx.decomposition(&back)?;
    assert_eq!(dec.multiset, target);
    assert!(dec.iso.is_morphism(&dec.model, &back) && dec.iso.is_iso());
    for (v, k) in dec.multiset.iter() {
        println!(
            "v({},{}) x{k} dimv {}",
            v.p,
            ctx.cat().graph().label(v.a),
            ctx.cat().dimension_vector_of(v)?
        );
    }
    Ok(())
}
