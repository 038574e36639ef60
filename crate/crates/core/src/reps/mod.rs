//! Explicit representations over `F_p`: one matrix per arrow.

mod hom;
mod realize;

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::dynkin::{DimVector, DynkinQuiver, QuiverJson};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, PrimeField};

pub use hom::{
    apply_eta, coboundary_annihilator, coboundary_space, cocycle_space_dim, eta_matrix, ext1_dim,
    hom_dim, hom_space, Coboundaries,
};
pub use realize::{Decomposition, RepContext, DEFAULT_REALIZE_ATTEMPTS};

/// A representation: `maps[i]` is the matrix of arrow `i`, of shape
/// `d_t × d_s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixRep {
    quiver: Arc<DynkinQuiver>,
    field: PrimeField,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl MatrixRep {
    pub fn new(
        quiver: Arc<DynkinQuiver>,
        field: PrimeField,
        dims: Vec<usize>,
        maps: Vec<Matrix>,
    ) -> Result<Self> {
        if dims.len() != quiver.num_vertices() {
            return Err(Error::IndexMismatch {
                expected: quiver.num_vertices(),
                got: dims.len(),
            });
        }
        if maps.len() != quiver.arrows().len() {
            return Err(Error::Shape(format!(
                "expected {} arrow matrices, got {}",
                quiver.arrows().len(),
                maps.len()
            )));
        }
        for (i, (&(s, t), m)) in quiver.arrows().iter().zip(&maps).enumerate() {
            if (m.rows(), m.cols()) != (dims[t], dims[s]) || m.field() != field {
                return Err(Error::Shape(format!(
                    "arrow {i} needs a {}x{} matrix, got {}x{}",
                    dims[t],
                    dims[s],
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(MatrixRep {
            quiver,
            field,
            dims,
            maps,
        })
    }

    pub fn zero(quiver: Arc<DynkinQuiver>, field: PrimeField, dims: Vec<usize>) -> Result<Self> {
        let maps = quiver
            .arrows()
            .iter()
            .map(|&(s, t)| Matrix::zeros(field, dims[t], dims[s]))
            .collect();
        Self::new(quiver, field, dims, maps)
    }

    pub fn simple(quiver: Arc<DynkinQuiver>, field: PrimeField, a: usize) -> Self {
        let mut dims = vec![0; quiver.num_vertices()];
        dims[a] = 1;
        Self::zero(quiver, field, dims).expect("simple shapes")
    }

    pub fn quiver(&self) -> &Arc<DynkinQuiver> {
        &self.quiver
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dimv(&self) -> DimVector {
        DimVector(self.dims.iter().map(|&d| d as i64).collect())
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn map(&self, arrow: usize) -> &Matrix {
        &self.maps[arrow]
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn check_compatible(&self, other: &MatrixRep) -> Result<()> {
        if !(Arc::ptr_eq(&self.quiver, &other.quiver) || self.quiver == other.quiver)
            || self.field != other.field
        {
            return Err(Error::QuiverMismatch);
        }
        Ok(())
    }

    /// `N + Z` for a cocycle `Z ∈ Z¹(N, N)`, i.e. the point `N_α + Z_α`.
    pub fn add_cocycle(&self, z: &Cocycle) -> Result<MatrixRep> {
        z.check_shape(self, self)?;
        let maps = self
            .maps
            .iter()
            .zip(&z.maps)
            .map(|(a, b)| a.add(b))
            .collect();
        MatrixRep::new(self.quiver.clone(), self.field, self.dims.clone(), maps)
    }

    pub fn to_json(&self) -> RepJson {
        let g = self.quiver.graph();
        RepJson {
            quiver: self.quiver.to_json(),
            dims: self
                .dims
                .iter()
                .enumerate()
                .map(|(a, &d)| (g.label(a).to_string(), d))
                .collect(),
            matrices: self
                .quiver
                .arrows()
                .iter()
                .zip(&self.maps)
                .map(|(&(s, t), m)| {
                    let rows = (0..m.rows())
                        .map(|i| m.row(i).iter().map(|&x| self.field.signed(x)).collect())
                        .collect();
                    (format!("{}>{}", g.label(s), g.label(t)), rows)
                })
                .collect(),
        }
    }

    pub fn from_json(json: &RepJson, field: PrimeField) -> Result<Self> {
        let quiver = Arc::new(DynkinQuiver::from_json(&json.quiver)?);
        Self::from_json_with(quiver, json, field)
    }

    /// Loads a representation against an already shared quiver, which must
    /// match the one recorded in the file.
    pub fn from_json_with(
        quiver: Arc<DynkinQuiver>,
        json: &RepJson,
        field: PrimeField,
    ) -> Result<Self> {
        if DynkinQuiver::from_json(&json.quiver)? != *quiver {
            return Err(Error::QuiverMismatch);
        }
        let g = quiver.graph();
        let mut dims = vec![0; g.rank()];
        for (label, &d) in &json.dims {
            dims[g.index_of(label)?] = d;
        }
        let mut maps = Vec::with_capacity(quiver.arrows().len());
        for &(s, t) in quiver.arrows() {
            let key = format!("{}>{}", g.label(s), g.label(t));
            let m = match json.matrices.get(&key) {
                Some(rows) if dims[t] == 0 || dims[s] == 0 => {
                    if rows.iter().any(|r| !r.is_empty()) {
                        return Err(Error::Shape(format!(
                            "arrow {key} has entries but an empty end"
                        )));
                    }
                    Matrix::zeros(field, dims[t], dims[s])
                }
                Some(rows) => Matrix::from_rows(field, dims[t], dims[s], rows).map_err(|_| {
                    Error::Shape(format!(
                        "arrow {key} needs a {}x{} matrix",
                        dims[t], dims[s]
                    ))
                })?,
                None if dims[t] == 0 || dims[s] == 0 => Matrix::zeros(field, dims[t], dims[s]),
                None => return Err(Error::Shape(format!("missing matrix for arrow {key}"))),
            };
            maps.push(m);
        }
        for key in json.matrices.keys() {
            let ok = quiver
                .arrows()
                .iter()
                .any(|&(s, t)| *key == format!("{}>{}", g.label(s), g.label(t)));
            if !ok {
                return Err(Error::Orientation(format!(
                    "`{key}` is not an arrow of the quiver"
                )));
            }
        }
        MatrixRep::new(quiver, field, dims, maps)
    }
}

/// File format `{quiver, dims:{a:d}, matrices:{"s>t":[[..]]}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepJson {
    pub quiver: QuiverJson,
    pub dims: BTreeMap<String, usize>,
    pub matrices: BTreeMap<String, Vec<Vec<i64>>>,
}

/// A morphism `f: M → N`: `maps[a]` has shape `N_a × M_a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub maps: Vec<Matrix>,
}

impl Morphism {
    pub fn identity(m: &MatrixRep) -> Self {
        Morphism {
            maps: m
                .dims
                .iter()
                .map(|&d| Matrix::identity(m.field, d))
                .collect(),
        }
    }

    pub fn zero(from: &MatrixRep, to: &MatrixRep) -> Self {
        Morphism {
            maps: from
                .dims
                .iter()
                .zip(&to.dims)
                .map(|(&s, &t)| Matrix::zeros(from.field, t, s))
                .collect(),
        }
    }

    /// Whether `f_t M_α = N_α f_s` for every arrow.
    pub fn is_morphism(&self, from: &MatrixRep, to: &MatrixRep) -> bool {
        from.quiver
            .arrows()
            .iter()
            .enumerate()
            .all(|(i, &(s, t))| self.maps[t].mul(&from.maps[i]) == to.maps[i].mul(&self.maps[s]))
    }

    pub fn compose(&self, first: &Morphism) -> Morphism {
        Morphism {
            maps: self
                .maps
                .iter()
                .zip(&first.maps)
                .map(|(g, f)| g.mul(f))
                .collect(),
        }
    }

    pub fn inverse(&self) -> Option<Morphism> {
        self.maps
            .iter()
            .map(Matrix::inverse)
            .collect::<Option<Vec<_>>>()
            .map(|maps| Morphism { maps })
    }

    pub fn is_iso(&self) -> bool {
        self.maps
            .iter()
            .all(|m| m.is_square() && m.inverse().is_some())
    }

    pub fn add(&self, other: &Morphism) -> Morphism {
        Morphism {
            maps: self
                .maps
                .iter()
                .zip(&other.maps)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: u32) -> Morphism {
        Morphism {
            maps: self.maps.iter().map(|a| a.scale(c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(Matrix::is_zero)
    }
}

/// An element `Z ∈ Z¹(V, U)`: `maps[α]` has shape `U_t × V_s`. It encodes
/// the extension `0 → U → W(U,Z,V) → V → 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle {
    pub maps: Vec<Matrix>,
}

impl Cocycle {
    pub fn zero(v: &MatrixRep, u: &MatrixRep) -> Self {
        let maps = v
            .quiver
            .arrows()
            .iter()
            .map(|&(s, t)| Matrix::zeros(v.field, u.dims[t], v.dims[s]))
            .collect();
        Cocycle { maps }
    }

    pub fn check_shape(&self, v: &MatrixRep, u: &MatrixRep) -> Result<()> {
        v.check_compatible(u)?;
        let ok = self.maps.len() == v.quiver.arrows().len()
            && v.quiver
                .arrows()
                .iter()
                .zip(&self.maps)
                .all(|(&(s, t), m)| (m.rows(), m.cols()) == (u.dims[t], v.dims[s]));
        if ok {
            Ok(())
        } else {
            Err(Error::Shape("cocycle does not match its end terms".into()))
        }
    }

    /// Coordinates: arrows in order, each matrix row-major.
    pub fn to_vec(&self) -> Vec<u32> {
        self.maps
            .iter()
            .flat_map(|m| m.data().iter().copied())
            .collect()
    }

    pub fn from_vec(v: &MatrixRep, u: &MatrixRep, coords: &[u32]) -> Self {
        let mut at = 0;
        let maps = v
            .quiver
            .arrows()
            .iter()
            .map(|&(s, t)| {
                let (r, c) = (u.dims[t], v.dims[s]);
                let m = Matrix::from_flat(v.field, r, c, coords[at..at + r * c].to_vec());
                at += r * c;
                m
            })
            .collect();
        assert_eq!(at, coords.len(), "cocycle coordinate length");
        Cocycle { maps }
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(Matrix::is_zero)
    }

    pub fn add(&self, other: &Cocycle) -> Cocycle {
        Cocycle {
            maps: self
                .maps
                .iter()
                .zip(&other.maps)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Cocycle) -> Cocycle {
        Cocycle {
            maps: self
                .maps
                .iter()
                .zip(&other.maps)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: u32) -> Cocycle {
        Cocycle {
            maps: self.maps.iter().map(|a| a.scale(c)).collect(),
        }
    }

    /// Pullback `Z ∘ h` along `h: V' → V`, with matrices `Z_α h_{sα}`.
    pub fn pullback(&self, quiver: &DynkinQuiver, h: &Morphism) -> Cocycle {
        Cocycle {
            maps: quiver
                .arrows()
                .iter()
                .zip(&self.maps)
                .map(|(&(s, _), z)| z.mul(&h.maps[s]))
                .collect(),
        }
    }

    /// Pushout `h' ∘ Z` along `h': U → U'`, with matrices `h'_{tα} Z_α`.
    pub fn pushout(&self, quiver: &DynkinQuiver, h: &Morphism) -> Cocycle {
        Cocycle {
            maps: quiver
                .arrows()
                .iter()
                .zip(&self.maps)
                .map(|(&(_, t), z)| h.maps[t].mul(z))
                .collect(),
        }
    }

    /// `g_t⁻¹ Z_α g'_s` for isomorphisms `g: U' → U` and `g': V' → V`,
    /// moving `Z ∈ Z¹(V, U)` to `Z¹(V', U')`.
    pub fn transport(&self, quiver: &DynkinQuiver, g_u_inv: &Morphism, g_v: &Morphism) -> Cocycle {
        self.pullback(quiver, g_v).pushout(quiver, g_u_inv)
    }
}

/// Block-diagonal direct sum. Returns the sum together with, for every
/// summand, its offset inside each vertex space.
pub fn direct_sum_with_offsets(
    quiver: Arc<DynkinQuiver>,
    field: PrimeField,
    parts: &[&MatrixRep],
) -> Result<(MatrixRep, Vec<Vec<usize>>)> {
    let n = quiver.num_vertices();
    for p in parts {
        if !(Arc::ptr_eq(&p.quiver, &quiver) || *p.quiver == *quiver) || p.field != field {
            return Err(Error::QuiverMismatch);
        }
    }
    let mut dims = vec![0; n];
    let mut offsets = Vec::with_capacity(parts.len());
    for p in parts {
        offsets.push(dims.clone());
        for (d, pd) in dims.iter_mut().zip(&p.dims) {
            *d += pd;
        }
    }
    let mut maps: Vec<Matrix> = quiver
        .arrows()
        .iter()
        .map(|&(s, t)| Matrix::zeros(field, dims[t], dims[s]))
        .collect();
    for (p, off) in parts.iter().zip(&offsets) {
        for (i, &(s, t)) in quiver.arrows().iter().enumerate() {
            maps[i].put_block(off[t], off[s], &p.maps[i]);
        }
    }
    Ok((MatrixRep::new(quiver, field, dims, maps)?, offsets))
}

pub fn direct_sum(
    quiver: Arc<DynkinQuiver>,
    field: PrimeField,
    parts: &[&MatrixRep],
) -> Result<MatrixRep> {
    Ok(direct_sum_with_offsets(quiver, field, parts)?.0)
}

/// `W(U, Z, V)` with matrices `[[U_α, Z_α], [0, V_α]]`.
pub fn middle_term(u: &MatrixRep, z: &Cocycle, v: &MatrixRep) -> Result<MatrixRep> {
    z.check_shape(v, u)?;
    let dims: Vec<usize> = u.dims.iter().zip(&v.dims).map(|(a, b)| a + b).collect();
    let maps = u
        .quiver
        .arrows()
        .iter()
        .enumerate()
        .map(|(i, &(s, t))| {
            let mut m = Matrix::zeros(u.field, dims[t], dims[s]);
            m.put_block(0, 0, &u.maps[i]);
            m.put_block(0, u.dims[s], &z.maps[i]);
            m.put_block(u.dims[t], u.dims[s], &v.maps[i]);
            m
        })
        .collect();
    MatrixRep::new(u.quiver.clone(), u.field, dims, maps)
}
