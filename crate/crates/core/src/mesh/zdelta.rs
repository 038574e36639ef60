//! The translation quiver `ZΔ` and dimensions of morphism spaces in its
//! mesh category.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dynkin::DynkinGraph;
use crate::error::{Error, Result};

/// A vertex `v_{p,a}` of `ZΔ`. Only positions in the vertex parity class
/// are meaningful; use [`ZDelta::vertex`] to construct checked values.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ZVertex {
    pub p: i64,
    pub a: usize,
}

/// A mesh `m_{p,a}`, running from `v_{p-1,a}` to `v_{p+1,a}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Mesh {
    pub p: i64,
    pub a: usize,
}

impl ZVertex {
    pub const fn new(p: i64, a: usize) -> Self {
        ZVertex { p, a }
    }

    /// The mesh whose right end is this vertex.
    pub fn mesh_ending_here(self) -> Mesh {
        Mesh {
            p: self.p - 1,
            a: self.a,
        }
    }

    /// The mesh whose left end is this vertex.
    pub fn mesh_starting_here(self) -> Mesh {
        Mesh {
            p: self.p + 1,
            a: self.a,
        }
    }
}

impl Mesh {
    pub const fn new(p: i64, a: usize) -> Self {
        Mesh { p, a }
    }

    pub fn left(self) -> ZVertex {
        ZVertex {
            p: self.p - 1,
            a: self.a,
        }
    }

    pub fn right(self) -> ZVertex {
        ZVertex {
            p: self.p + 1,
            a: self.a,
        }
    }
}

impl fmt::Display for ZVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v({},{})", self.p, self.a)
    }
}

/// Auto-equivalences of the derived category acting on `ZΔ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Functor {
    /// `τ^k`
    Tau(i64),
    /// `ν^k`
    Nu(i64),
    /// `[i]`
    Shift(i64),
}

/// `ZΔ` for a fixed Dynkin graph, with the full table of hom dimensions.
///
/// The dimension `[v_{p,a}, v_{q,b}]` depends only on `(a, q - p, b)`, and
/// vanishes unless `0 ≤ q - p ≤ n_Δ - 2`, so the table is finite. It is
/// filled once, bottom-up in `q - p`, by the mesh recursion.
#[derive(Clone, Debug)]
pub struct ZDelta {
    graph: DynkinGraph,
    phi: Vec<usize>,
    n_delta: i64,
    width: usize,
    table: Vec<i64>,
}

impl ZDelta {
    pub fn new(graph: DynkinGraph) -> Self {
        let n = graph.rank();
        let n_delta = graph.delta_number();
        let width = (n_delta - 1) as usize;
        let mut table = vec![0i64; n * width * n];
        let idx = |a: usize, k: usize, b: usize| (a * width + k) * n + b;
        for a in 0..n {
            table[idx(a, 0, a)] = 1;
            for k in 1..width {
                for b in 0..n {
                    if !(k + graph.distance(a, b)).is_multiple_of(2) {
                        continue;
                    }
                    let mut h: i64 = graph
                        .neighbors(b)
                        .iter()
                        .map(|&c| table[idx(a, k - 1, c)])
                        .sum();
                    if k >= 2 {
                        h -= table[idx(a, k - 2, b)];
                    }
                    table[idx(a, k, b)] = h;
                }
            }
        }
        let phi = graph.phi();
        ZDelta {
            graph,
            phi,
            n_delta,
            width,
            table,
        }
    }

    pub fn graph(&self) -> &DynkinGraph {
        &self.graph
    }

    pub fn n_delta(&self) -> i64 {
        self.n_delta
    }

    pub fn phi(&self) -> &[usize] {
        &self.phi
    }

    /// Whether `(p, a)` lies in the vertex class `(Z×Δ₀)^v`.
    pub fn is_vertex_position(&self, p: i64, a: usize) -> bool {
        (p + self.graph.distance(a, self.graph.base_vertex()) as i64).rem_euclid(2) == 0
    }

    pub fn vertex(&self, p: i64, a: usize) -> Result<ZVertex> {
        if a >= self.graph.rank() {
            return Err(Error::UnknownVertex(a.to_string()));
        }
        if !self.is_vertex_position(p, a) {
            return Err(Error::Parity {
                p,
                label: self.graph.label(a).into(),
                kind: "vertex",
            });
        }
        Ok(ZVertex { p, a })
    }

    pub fn mesh(&self, p: i64, a: usize) -> Result<Mesh> {
        if a >= self.graph.rank() {
            return Err(Error::UnknownVertex(a.to_string()));
        }
        if self.is_vertex_position(p, a) {
            return Err(Error::Parity {
                p,
                label: self.graph.label(a).into(),
                kind: "mesh",
            });
        }
        Ok(Mesh { p, a })
    }

    /// Parses a label and checks parity.
    pub fn vertex_by_label(&self, p: i64, label: &str) -> Result<ZVertex> {
        self.vertex(p, self.graph.index_of(label)?)
    }

    pub fn mesh_by_label(&self, p: i64, label: &str) -> Result<Mesh> {
        self.mesh(p, self.graph.index_of(label)?)
    }

    /// The middle vertices `v_{p,b}`, `b ∈ a⁻`, of a mesh.
    pub fn mesh_middle(&self, m: Mesh) -> impl Iterator<Item = ZVertex> + '_ {
        self.graph
            .neighbors(m.a)
            .iter()
            .map(move |&b| ZVertex { p: m.p, a: b })
    }

    /// `dim Hom(v, w)` in the mesh category.
    pub fn hom_dim(&self, v: ZVertex, w: ZVertex) -> i64 {
        let k = w.p - v.p;
        if k < 0 || k >= self.width as i64 {
            return 0;
        }
        let n = self.graph.rank();
        self.table[(v.a * self.width + k as usize) * n + w.a]
    }

    /// The raw recursion value at `q - p = k`, without the vanishing
    /// cut-off. Used to check that the recursion closes at `k = n_Δ - 1`.
    pub fn recursion_value(&self, a: usize, k: usize, b: usize) -> i64 {
        let n = self.graph.rank();
        let at = |k: usize, b: usize| {
            if k < self.width {
                self.table[(a * self.width + k) * n + b]
            } else {
                0
            }
        };
        let mut h: i64 = self.graph.neighbors(b).iter().map(|&c| at(k - 1, c)).sum();
        if k >= 2 {
            h -= at(k - 2, b);
        }
        h
    }

    pub fn tau(&self, v: ZVertex) -> ZVertex {
        ZVertex { p: v.p - 2, a: v.a }
    }

    pub fn nu(&self, v: ZVertex) -> ZVertex {
        ZVertex {
            p: v.p + self.n_delta - 2,
            a: self.phi[v.a],
        }
    }

    pub fn nu_inv(&self, v: ZVertex) -> ZVertex {
        ZVertex {
            p: v.p - self.n_delta + 2,
            a: self.phi[v.a],
        }
    }

    /// `v[i]`.
    pub fn shift(&self, v: ZVertex, i: i64) -> ZVertex {
        let a = if i.rem_euclid(2) == 1 {
            self.phi[v.a]
        } else {
            v.a
        };
        ZVertex {
            p: v.p + i * self.n_delta,
            a,
        }
    }

    pub fn act(&self, v: ZVertex, functor: Functor) -> ZVertex {
        match functor {
            Functor::Tau(k) => ZVertex {
                p: v.p - 2 * k,
                a: v.a,
            },
            Functor::Nu(k) => {
                let a = if k.rem_euclid(2) == 1 {
                    self.phi[v.a]
                } else {
                    v.a
                };
                ZVertex {
                    p: v.p + k * (self.n_delta - 2),
                    a,
                }
            }
            Functor::Shift(i) => self.shift(v, i),
        }
    }

    /// The truncated Euler pairing `⟨x, y⟩ = Σ_{j≥0} (-1)^j [x[j], y]`.
    pub fn pairing(&self, x: ZVertex, y: ZVertex) -> i64 {
        let mut total = 0;
        let mut j = 0;
        loop {
            let xj = self.shift(x, j);
            if xj.p > y.p {
                return total;
            }
            let h = self.hom_dim(xj, y);
            total += if j % 2 == 0 { h } else { -h };
            j += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynkin::DynkinType;

    fn zd(ty: DynkinType, n: usize) -> ZDelta {
        ZDelta::new(DynkinGraph::build(ty, n).unwrap())
    }

    #[test]
    fn parity_classes() {
        let z = zd(DynkinType::D, 6);
        assert!(z.vertex_by_label(0, "b0").is_ok());
        assert!(z.vertex_by_label(3, "b1").is_ok());
        assert!(z.vertex_by_label(3, "b0").is_err());
        assert!(z.mesh_by_label(7, "b0").is_ok());
        assert!(z.mesh_by_label(6, "c").is_ok());
        assert!(z.mesh_by_label(6, "b0").is_err());
    }

    #[test]
    fn functor_examples() {
        let d6 = zd(DynkinType::D, 6);
        let c = d6.graph().index_of("c").unwrap();
        assert_eq!(d6.tau(ZVertex::new(5, c)), ZVertex::new(3, c));
        let b1 = d6.graph().index_of("b1").unwrap();
        assert_eq!(d6.shift(ZVertex::new(3, b1), 1), ZVertex::new(13, b1));

        let d5 = zd(DynkinType::D, 5);
        let c1 = d5.graph().index_of("c'").unwrap();
        let c2 = d5.graph().index_of("c''").unwrap();
        assert_eq!(d5.nu(ZVertex::new(0, c1)), ZVertex::new(6, c2));
        let v = ZVertex::new(0, c1);
        assert_eq!(d5.nu_inv(d5.nu(v)), v);
        // τ = ν ∘ [-1]
        assert_eq!(d5.act(d5.shift(v, -1), Functor::Nu(1)), d5.tau(v));
        assert_eq!(d5.act(v, Functor::Tau(3)), ZVertex::new(-6, c1));
        assert_eq!(d5.act(v, Functor::Shift(2)), ZVertex::new(16, c1));
    }

    #[test]
    fn identity_and_d6_values() {
        let z = zd(DynkinType::D, 6);
        let g = z.graph().clone();
        let v = |p, l: &str| z.vertex_by_label(p, l).unwrap();
        for a in 0..6 {
            let p = if z.is_vertex_position(0, a) { 0 } else { 1 };
            assert_eq!(z.hom_dim(ZVertex::new(p, a), ZVertex::new(p, a)), 1);
        }
        assert_eq!(z.hom_dim(v(3, "b1"), v(6, "b0")), 2);
        assert_eq!(z.hom_dim(v(3, "b1"), v(5, "c")), 1);
        assert_eq!(z.hom_dim(v(3, "b1"), v(9, "c")), 1);
        assert_eq!(z.hom_dim(v(3, "b1"), v(7, "c")), 0);
        assert_eq!(g.rank(), 6);
    }

    #[test]
    fn recursion_closes_at_n_delta_minus_one() {
        for z in [
            zd(DynkinType::A, 5),
            zd(DynkinType::D, 7),
            zd(DynkinType::E, 6),
            zd(DynkinType::E, 8),
        ] {
            let n = z.graph().rank();
            let k = (z.n_delta() - 1) as usize;
            for a in 0..n {
                for b in 0..n {
                    if (k + z.graph().distance(a, b)).is_multiple_of(2) {
                        assert_eq!(
                            z.recursion_value(a, k, b),
                            0,
                            "{} a={a} b={b}",
                            z.graph().name()
                        );
                    }
                }
            }
        }
    }
}
