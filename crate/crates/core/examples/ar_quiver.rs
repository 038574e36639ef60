//! The AR quiver of a D5 quiver inside `ZΔ`, printed row by row and as DOT.

use dynkin_tangent::mesh::gamma_to_dot;
use dynkin_tangent::{DynkinGraph, DynkinQuiver, DynkinType, MeshCategory};

fn main() -> dynkin_tangent::Result<()> {
    let q = DynkinQuiver::parse_orientation(DynkinGraph::build(DynkinType::D, 5)?, "b0>c',b1>b0")?;
    let cat = MeshCategory::new(q);
    println!("orientation {}", cat.quiver().orientation_string());
    for &v in cat.gamma().vertices() {
        let tag = if cat.gamma().is_projective(v) {
            " projective"
        } else if cat.gamma().is_injective(v) {
            " injective"
        } else {
            ""
        };
        println!(
            "v({},{}) {}{tag}",
            v.p,
            cat.graph().label(v.a),
            cat.dimension_vector_of(v)?
        );
    }
    println!("{} meshes in the window", cat.gamma().meshes().len());
    let dot = gamma_to_dot(&cat);
    println!("DOT output has {} lines", dot.lines().count());
    Ok(())
}
