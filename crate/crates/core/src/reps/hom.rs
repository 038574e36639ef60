//! Hom spaces, coboundaries and extension dimensions via the map
//! `η_{V,U}(h) = (h_{tα} V_α − U_α h_{sα})_α`.

use crate::error::Result;
use crate::linalg::{Matrix, Subspace};
use crate::reps::{Cocycle, MatrixRep, Morphism};

fn hom_offsets(v: &MatrixRep, u: &MatrixRep) -> (Vec<usize>, usize) {
    let mut offs = Vec::with_capacity(v.dims.len());
    let mut at = 0;
    for (&dv, &du) in v.dims.iter().zip(&u.dims) {
        offs.push(at);
        at += du * dv;
    }
    (offs, at)
}

/// `dim Z¹(V, U) = Σ_α dim U_{tα} · dim V_{sα}`.
pub fn cocycle_space_dim(v: &MatrixRep, u: &MatrixRep) -> usize {
    v.quiver
        .arrows()
        .iter()
        .map(|&(s, t)| u.dims[t] * v.dims[s])
        .sum()
}

/// The matrix of `η_{V,U}`. Columns index `⊕_a Hom(V_a, U_a)` vertex by
/// vertex, rows index `Z¹(V, U)` arrow by arrow, both row-major.
pub fn eta_matrix(v: &MatrixRep, u: &MatrixRep) -> Result<Matrix> {
    v.check_compatible(u)?;
    let field = v.field;
    let (hoff, hdim) = hom_offsets(v, u);
    let zdim = cocycle_space_dim(v, u);
    let mut eta = Matrix::zeros(field, zdim, hdim);
    let mut row0 = 0;
    for (i, &(s, t)) in v.quiver.arrows().iter().enumerate() {
        let (ut, us, vt, vs) = (u.dims[t], u.dims[s], v.dims[t], v.dims[s]);
        let va = &v.maps[i];
        let ua = &u.maps[i];
        for r in 0..ut {
            for c in 0..vs {
                let row = row0 + r * vs + c;
                // (h_t V_α)[r][c] = Σ_k h_t[r][k] V_α[k][c]
                for k in 0..vt {
                    let x = va.get(k, c);
                    if x != 0 {
                        let col = hoff[t] + r * vt + k;
                        eta.set(row, col, field.add(eta.get(row, col), x));
                    }
                }
                // (U_α h_s)[r][c] = Σ_k U_α[r][k] h_s[k][c]
                for k in 0..us {
                    let x = ua.get(r, k);
                    if x != 0 {
                        let col = hoff[s] + k * vs + c;
                        eta.set(row, col, field.sub(eta.get(row, col), x));
                    }
                }
            }
        }
        row0 += ut * vs;
    }
    Ok(eta)
}

fn morphism_from_vec(v: &MatrixRep, u: &MatrixRep, x: &[u32]) -> Morphism {
    let (hoff, _) = hom_offsets(v, u);
    Morphism {
        maps: (0..v.dims.len())
            .map(|a| {
                let (r, c) = (u.dims[a], v.dims[a]);
                Matrix::from_flat(v.field, r, c, x[hoff[a]..hoff[a] + r * c].to_vec())
            })
            .collect(),
    }
}

fn morphism_to_vec(h: &Morphism) -> Vec<u32> {
    h.maps
        .iter()
        .flat_map(|m| m.data().iter().copied())
        .collect()
}

/// A basis of `Hom(M, N) = ker η_{M,N}`.
pub fn hom_space(m: &MatrixRep, n: &MatrixRep) -> Result<Vec<Morphism>> {
    let eta = eta_matrix(m, n)?;
    Ok(eta
        .nullspace()
        .iter()
        .map(|x| morphism_from_vec(m, n, x))
        .collect())
}

/// `[M, N]`.
pub fn hom_dim(m: &MatrixRep, n: &MatrixRep) -> Result<usize> {
    let eta = eta_matrix(m, n)?;
    Ok(eta.cols() - eta.rank())
}

/// `dim Ext¹(M, N) = [M, N] − b_Q(dimv M, dimv N)`.
pub fn ext1_dim(m: &MatrixRep, n: &MatrixRep) -> Result<i64> {
    let euler = m.quiver.euler_form(&m.dimv(), &n.dimv())?;
    Ok(hom_dim(m, n)? as i64 - euler)
}

/// `η_{V,U}(h)`.
pub fn apply_eta(v: &MatrixRep, u: &MatrixRep, h: &Morphism) -> Result<Cocycle> {
    let eta = eta_matrix(v, u)?;
    Ok(Cocycle::from_vec(v, u, &eta.mul_vec(&morphism_to_vec(h))))
}

/// A basis of `B¹(V, U) = im η_{V,U}`.
pub fn coboundary_space(v: &MatrixRep, u: &MatrixRep) -> Result<Vec<Cocycle>> {
    let eta = eta_matrix(v, u)?;
    Ok(eta
        .column_space()
        .iter()
        .map(|x| Cocycle::from_vec(v, u, x))
        .collect())
}

/// Linear forms on `Z¹(V, U)` whose common kernel is `B¹(V, U)`: a basis of
/// the left null space of `η_{V,U}`.
pub fn coboundary_annihilator(v: &MatrixRep, u: &MatrixRep) -> Result<Vec<Vec<u32>>> {
    Ok(eta_matrix(v, u)?.transpose().nullspace())
}

/// `B¹(V, U)` prepared for repeated membership tests.
#[derive(Clone, Debug)]
pub struct Coboundaries {
    space: Subspace,
}

impl Coboundaries {
    pub fn new(v: &MatrixRep, u: &MatrixRep) -> Result<Self> {
        let eta = eta_matrix(v, u)?;
        let cols = eta.column_space();
        Ok(Coboundaries {
            space: Subspace::spanned_by(v.field, eta.rows(), cols.iter()),
        })
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn contains(&self, z: &Cocycle) -> bool {
        self.space.contains(&z.to_vec())
    }

    pub fn subspace(&self) -> &Subspace {
        &self.space
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::dynkin::{DynkinGraph, DynkinQuiver, DynkinType};
    use crate::linalg::PrimeField;

    fn a2() -> Arc<DynkinQuiver> {
        Arc::new(DynkinQuiver::with_default_orientation(
            DynkinGraph::build(DynkinType::A, 2).unwrap(),
        ))
    }

    #[test]
    fn simples() {
        let q = a2();
        let f = PrimeField::default();
        let sa = MatrixRep::simple(q.clone(), f, 0);
        let sb = MatrixRep::simple(q.clone(), f, 1);
        assert_eq!(hom_dim(&sa, &sa).unwrap(), 1);
        assert_eq!(hom_dim(&sa, &sb).unwrap(), 0);
        // one arrow a -> b: Ext¹(S_a, S_b) = 1
        assert_eq!(ext1_dim(&sa, &sb).unwrap(), 1);
        assert_eq!(ext1_dim(&sb, &sa).unwrap(), 0);
        assert_eq!(coboundary_space(&sa, &sb).unwrap().len(), 0);
        let mut z = Cocycle::zero(&sa, &sb);
        z.maps[0].set(0, 0, 1);
        assert!(!Coboundaries::new(&sa, &sb).unwrap().contains(&z));
    }

    #[test]
    fn hom_basis_elements_are_morphisms() {
        let q = a2();
        let f = PrimeField::default();
        let x = MatrixRep::new(q.clone(), f, vec![1, 1], vec![Matrix::identity(f, 1)]).unwrap();
        let sb = MatrixRep::simple(q.clone(), f, 1);
        let basis = hom_space(&sb, &x).unwrap();
        assert_eq!(basis.len(), 1);
        assert!(basis[0].is_morphism(&sb, &x));
        assert_eq!(hom_dim(&x, &sb).unwrap(), 0);
        assert_eq!(hom_dim(&x, &x).unwrap(), 1);
        // the coboundary of the identity vanishes
        assert!(apply_eta(&x, &x, &Morphism::identity(&x))
            .unwrap()
            .is_zero());
    }
}
