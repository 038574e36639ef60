//! Recovers the summands of a module from hom dimensions alone and checks
//! the sectional-path identity for a pair of orbits.

use dynkin_tangent::degeneration::enumerate_orbits;
use dynkin_tangent::{DimVector, DynkinGraph, DynkinQuiver, DynkinType, MeshCategory};

fn main() -> dynkin_tangent::Result<()> {
    let cat = MeshCategory::new(DynkinQuiver::with_default_orientation(DynkinGraph::build(
        DynkinType::D,
        4,
    )?));
    let orbits = enumerate_orbits(&cat, &DimVector(vec![1, 1, 2, 1]))?;
    let (m, n) = (&orbits[orbits.len() - 1].multiset, &orbits[0].multiset);
    for &v in cat.gamma().vertices() {
        assert_eq!(cat.multiplicity(n, v), n.get(v) as i64);
        assert_eq!(cat.multiplicity_right(n, v), n.get(v) as i64);
    }
    let summands: Vec<String> = n
        .iter()
        .map(|(v, k)| format!("v({},{})^{k}", v.p, cat.graph().label(v.a)))
        .collect();
    println!(
        "{} orbits of (1,1,2,1); multiplicities recovered for {}",
        orbits.len(),
        summands.join(" + ")
    );
    let path = [
        cat.zdelta().vertex_by_label(1, "c'")?,
        cat.zdelta().vertex_by_label(2, "b0")?,
        cat.zdelta().vertex_by_label(3, "c")?,
    ];
    let (lhs, rhs) = cat.sectional_delta_identity(m, n, &path)?;
    println!("sectional identity along c' -> b0 -> c: {lhs} = {rhs}");
    Ok(())
}
