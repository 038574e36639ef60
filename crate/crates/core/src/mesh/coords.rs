//! The `φ/ψ` coordinates on `ZD_n` and the regions they cut out.

use crate::dynkin::{DynkinGraph, DynkinType};
use crate::error::{Error, Result};
use crate::mesh::zdelta::{Mesh, ZDelta, ZVertex};

/// `(p + dist(c,a), p − dist(c,a))` for a point `(p, a)` of `Z × D_n`.
pub fn phi_psi(graph: &DynkinGraph, p: i64, a: usize) -> Result<(i64, i64)> {
    let c = tail(graph)?;
    let d = graph.distance(c, a) as i64;
    Ok((p + d, p - d))
}

pub fn vertex_coords(graph: &DynkinGraph, v: ZVertex) -> Result<(i64, i64)> {
    phi_psi(graph, v.p, v.a)
}

pub fn mesh_coords(graph: &DynkinGraph, m: Mesh) -> Result<(i64, i64)> {
    phi_psi(graph, m.p, m.a)
}

fn tail(graph: &DynkinGraph) -> Result<usize> {
    if graph.ty() != DynkinType::D {
        return Err(Error::NotTypeD);
    }
    Ok(graph.rank() - 1)
}

/// Meshes `m` with `φ(m) ≥ φ(m0)` and `ψ(m) ≤ ψ(m0)` whose position lies in
/// `[lo, hi]`. Cones are unbounded, so callers supply the range.
pub fn cone_meshes(zdelta: &ZDelta, m0: Mesh, lo: i64, hi: i64) -> Result<Vec<Mesh>> {
    let graph = zdelta.graph();
    let (phi0, psi0) = mesh_coords(graph, m0)?;
    let mut out = Vec::new();
    for p in lo..=hi {
        for a in 0..graph.rank() {
            if zdelta.is_vertex_position(p, a) {
                continue;
            }
            let (phi, psi) = phi_psi(graph, p, a)?;
            if phi >= phi0 && psi <= psi0 {
                out.push(Mesh::new(p, a));
            }
        }
    }
    Ok(out)
}

/// Vertices `v` with `φ(v) > φ(m0)` and `ψ(v) < ψ(m0)`. This region is
/// finite: it lies in `ψ0 − dist < p < φ0 + dist` row by row.
pub fn region_vertices(zdelta: &ZDelta, m0: Mesh) -> Result<Vec<ZVertex>> {
    let graph = zdelta.graph();
    let (phi0, psi0) = mesh_coords(graph, m0)?;
    let c = tail(graph)?;
    let mut out = Vec::new();
    for a in 0..graph.rank() {
        let d = graph.distance(c, a) as i64;
        for p in (phi0 - d + 1)..(psi0 + d) {
            if zdelta.is_vertex_position(p, a) {
                out.push(ZVertex::new(p, a));
            }
        }
    }
    out.sort();
    Ok(out)
}
