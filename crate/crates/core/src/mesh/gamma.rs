//! The Auslander-Reiten quiver `Γ_Q` embedded in `ZΔ`.

use std::collections::{HashMap, VecDeque};

use crate::dynkin::{DimVector, DynkinQuiver};
use crate::mesh::zdelta::{Mesh, ZDelta, ZVertex};

/// The window of `ZΔ` between the projective slice and its `ν`-image.
///
/// `P_a = v_{p_a, a}` with `p_{b0} = 0` at the base vertex and
/// `p_a = p_b + 1` for every arrow `a → b`. Row `x` of the window is
/// `p_x ≤ q ≤ p_{φ(x)} + n_Δ - 2`.
#[derive(Clone, Debug)]
pub struct GammaWindow {
    proj_pos: Vec<i64>,
    upper: Vec<i64>,
    vertices: Vec<ZVertex>,
    index: HashMap<ZVertex, usize>,
    meshes: Vec<Mesh>,
}

impl GammaWindow {
    pub fn new(quiver: &DynkinQuiver, zdelta: &ZDelta) -> Self {
        let graph = quiver.graph();
        let n = graph.rank();
        let base = graph.base_vertex();
        let mut proj_pos: Vec<Option<i64>> = vec![None; n];
        proj_pos[base] = Some(0);
        let mut queue = VecDeque::from([base]);
        while let Some(u) = queue.pop_front() {
            let pu = proj_pos[u].unwrap();
            for &(s, t) in quiver.arrows() {
                let (w, pw) = if s == u {
                    (t, pu - 1)
                } else if t == u {
                    (s, pu + 1)
                } else {
                    continue;
                };
                if proj_pos[w].is_none() {
                    proj_pos[w] = Some(pw);
                    queue.push_back(w);
                }
            }
        }
        let proj_pos: Vec<i64> = proj_pos.into_iter().map(Option::unwrap).collect();
        let phi = zdelta.phi();
        let upper: Vec<i64> = (0..n)
            .map(|x| proj_pos[phi[x]] + zdelta.n_delta() - 2)
            .collect();

        let mut vertices = Vec::new();
        for x in 0..n {
            let mut q = proj_pos[x];
            while q <= upper[x] {
                vertices.push(ZVertex::new(q, x));
                q += 2;
            }
        }
        vertices.sort();
        let index = vertices
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i))
            .collect::<HashMap<_, _>>();
        let meshes = vertices
            .iter()
            .filter(|v| index.contains_key(&ZVertex::new(v.p + 2, v.a)))
            .map(|v| Mesh::new(v.p + 1, v.a))
            .collect();
        GammaWindow {
            proj_pos,
            upper,
            vertices,
            index,
            meshes,
        }
    }

    /// Positions `p_a` of the indecomposable projectives.
    pub fn projective_positions(&self) -> &[i64] {
        &self.proj_pos
    }

    pub fn projective(&self, a: usize) -> ZVertex {
        ZVertex::new(self.proj_pos[a], a)
    }

    /// `I_x`, the injective at row `x` of the window.
    pub fn injective_at_row(&self, x: usize) -> ZVertex {
        ZVertex::new(self.upper[x], x)
    }

    /// Vertices sorted by `(p, a)`.
    pub fn vertices(&self) -> &[ZVertex] {
        &self.vertices
    }

    pub fn meshes(&self) -> &[Mesh] {
        &self.meshes
    }

    pub fn contains(&self, v: ZVertex) -> bool {
        self.index.contains_key(&v)
    }

    pub fn position(&self, v: ZVertex) -> Option<usize> {
        self.index.get(&v).copied()
    }

    pub fn contains_mesh(&self, m: Mesh) -> bool {
        self.contains(m.left()) && self.contains(m.right())
    }

    /// The `i` with `v ∈ Γ_Q[i]`.
    pub fn shift_index(&self, zdelta: &ZDelta, v: ZVertex) -> i64 {
        let guess = (v.p - self.proj_pos[v.a]).div_euclid(zdelta.n_delta());
        for i in [guess, guess - 1, guess + 1, guess - 2, guess + 2] {
            if self.contains(zdelta.shift(v, -i)) {
                return i;
            }
        }
        unreachable!("shifted windows cover ZΔ")
    }

    pub fn is_projective(&self, v: ZVertex) -> bool {
        v.p == self.proj_pos[v.a]
    }

    pub fn is_injective(&self, v: ZVertex) -> bool {
        v.p == self.upper[v.a]
    }
}

/// Dimension vectors of the window vertices, by Yoneda: coordinate `a`
/// of `dimv v` is `[P_a, v]`.
pub(crate) fn window_dimension_vectors(
    quiver: &DynkinQuiver,
    zdelta: &ZDelta,
    gamma: &GammaWindow,
) -> Vec<DimVector> {
    let n = quiver.num_vertices();
    gamma
        .vertices()
        .iter()
        .map(|&v| {
            DimVector(
                (0..n)
                    .map(|a| zdelta.hom_dim(gamma.projective(a), v))
                    .collect(),
            )
        })
        .collect()
}
