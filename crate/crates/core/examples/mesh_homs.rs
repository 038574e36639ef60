//! Hom dimensions in the mesh category of `ZΔ` for D6, and the defect of
//! the triangle `A → 0 → A[1] → A[1]` for `A = v_{3,b1}`.

use dynkin_tangent::mesh::Functor;
use dynkin_tangent::{DynkinGraph, DynkinType, ZDelta};

fn main() -> dynkin_tangent::Result<()> {
    let z = ZDelta::new(DynkinGraph::build(DynkinType::D, 6)?);
    let g = z.graph().clone();
    let a = z.vertex_by_label(3, "b1")?;
    let shifted = z.act(a, Functor::Shift(1));
    println!(
        "A = v(3,b1), A[1] = v({},{})",
        shifted.p,
        g.label(shifted.a)
    );
    for b in 0..g.rank() {
        let row: Vec<String> = (0..=15)
            .map(|q| {
                if !z.is_vertex_position(q - 1, b) {
                    return " ".into();
                }
                match z.hom_dim(a, z.vertex(q - 1, b).expect("vertex")) {
                    0 => ".".into(),
                    d => d.to_string(),
                }
            })
            .collect();
        println!("{:>4} {}", g.label(b), row.join(""));
    }
    Ok(())
}
