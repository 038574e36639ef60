//! Concrete models of the indecomposables in `Γ_Q`, Krull-Schmidt
//! decomposition, and block coordinates for arbitrary representations.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::dynkin::{DimVector, DynkinQuiver};
use crate::error::{Error, Result};
use crate::linalg::{combine, Matrix, PrimeField};
use crate::mesh::{MeshCategory, ObjectMultiset, ZVertex};
use crate::reps::hom::{hom_dim, hom_space};
use crate::reps::{direct_sum_with_offsets, Cocycle, MatrixRep, Morphism};

pub const DEFAULT_REALIZE_ATTEMPTS: usize = 64;

/// SplitMix64 finalizer, used to derive independent deterministic streams.
pub(crate) fn mix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

pub(crate) fn fingerprint(rep: &MatrixRep) -> u64 {
    let mut h = mix(rep.total_dim() as u64);
    for &d in rep.dims() {
        h = mix(h ^ d as u64);
    }
    for m in rep.maps() {
        for &x in m.data() {
            h = mix(h ^ x as u64);
        }
    }
    h
}

/// Shared state for matrix-level work on one quiver: the mesh category, the
/// field, the seed, and a fill-once cache of realized indecomposables.
#[derive(Debug)]
pub struct RepContext {
    cat: Arc<MeshCategory>,
    quiver: Arc<DynkinQuiver>,
    field: PrimeField,
    seed: u64,
    attempts: usize,
    models: RwLock<HashMap<ZVertex, Arc<MatrixRep>>>,
}

impl RepContext {
    pub fn new(cat: Arc<MeshCategory>, field: PrimeField, seed: u64) -> Self {
        let quiver = Arc::new(cat.quiver().clone());
        RepContext {
            cat,
            quiver,
            field,
            seed,
            attempts: DEFAULT_REALIZE_ATTEMPTS,
            models: RwLock::default(),
        }
    }

    pub fn with_attempts(mut self, attempts: usize) -> Self {
        self.attempts = attempts;
        self
    }

    pub fn for_quiver(quiver: DynkinQuiver, field: PrimeField, seed: u64) -> Self {
        Self::new(Arc::new(MeshCategory::new(quiver)), field, seed)
    }

    pub fn cat(&self) -> &MeshCategory {
        &self.cat
    }

    pub fn cat_arc(&self) -> &Arc<MeshCategory> {
        &self.cat
    }

    pub fn quiver(&self) -> &Arc<DynkinQuiver> {
        &self.quiver
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn attempts(&self) -> usize {
        self.attempts
    }

    /// A generator determined by the context seed and `tag`.
    pub fn rng(&self, tag: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(mix(self.seed ^ mix(tag)))
    }

    pub fn zero_rep(&self, dims: Vec<usize>) -> MatrixRep {
        MatrixRep::zero(self.quiver.clone(), self.field, dims).expect("zero representation shapes")
    }

    /// A representation isomorphic to the indecomposable at `v ∈ Γ_Q`.
    ///
    /// Random matrices of the right shape are drawn until the endomorphism
    /// ring is one-dimensional. That certifies indecomposability, and a
    /// Dynkin indecomposable is determined by its dimension vector.
    pub fn realize(&self, v: ZVertex) -> Result<Arc<MatrixRep>> {
        if let Some(m) = self.models.read().unwrap().get(&v) {
            return Ok(m.clone());
        }
        let dimv = self.cat.dimension_vector_of(v)?;
        let dims: Vec<usize> = dimv.iter().map(|&d| d as usize).collect();
        let mut rng = self.rng(mix(v.p as u64) ^ v.a as u64);
        let mut found = None;
        for _ in 0..self.attempts.max(1) {
            let maps = self
                .quiver
                .arrows()
                .iter()
                .map(|&(s, t)| Matrix::random(self.field, dims[t], dims[s], &mut rng))
                .collect();
            let rep = MatrixRep::new(self.quiver.clone(), self.field, dims.clone(), maps)?;
            if hom_dim(&rep, &rep)? == 1 {
                found = Some(Arc::new(rep));
                break;
            }
        }
        let rep = found.ok_or_else(|| Error::RealizationFailed {
            p: v.p,
            label: self.cat.graph().label(v.a).to_string(),
            attempts: self.attempts,
        })?;
        self.models
            .write()
            .unwrap()
            .entry(v)
            .or_insert_with(|| rep.clone());
        Ok(self.models.read().unwrap()[&v].clone())
    }

    /// Block-diagonal model of a multiset, summands in vertex order.
    pub fn realize_multiset(
        &self,
        m: &ObjectMultiset,
    ) -> Result<(MatrixRep, Vec<ZVertex>, Vec<Vec<usize>>)> {
        let summands = m.summands();
        let parts = summands
            .iter()
            .map(|&v| self.realize(v))
            .collect::<Result<Vec<_>>>()?;
        let refs: Vec<&MatrixRep> = parts.iter().map(|p| p.as_ref()).collect();
        let (rep, offsets) = direct_sum_with_offsets(self.quiver.clone(), self.field, &refs)?;
        Ok((rep, summands, offsets))
    }

    pub fn realize_sum(&self, m: &ObjectMultiset) -> Result<MatrixRep> {
        Ok(self.realize_multiset(m)?.0)
    }

    /// `[X, N]` for every `X ∈ Γ_Q`, in window order.
    pub fn hom_profile(&self, n: &MatrixRep) -> Result<Vec<i64>> {
        self.cat
            .gamma()
            .vertices()
            .iter()
            .map(|&x| Ok(hom_dim(self.realize(x)?.as_ref(), n)? as i64))
            .collect()
    }

    /// `[N, X]` for every `X ∈ Γ_Q`, in window order.
    pub fn hom_profile_right(&self, n: &MatrixRep) -> Result<Vec<i64>> {
        self.cat
            .gamma()
            .vertices()
            .iter()
            .map(|&x| Ok(hom_dim(n, self.realize(x)?.as_ref())? as i64))
            .collect()
    }

    /// Multiplicities of the indecomposable summands of `N`, read off from
    /// `[X, N]` through the mesh multiplicity formula.
    pub fn decompose(&self, n: &MatrixRep) -> Result<ObjectMultiset> {
        let profile = self.hom_profile(n)?;
        self.multiset_from_profile(&profile, &n.dimv())
    }

    pub(crate) fn multiset_from_profile(
        &self,
        profile: &[i64],
        dimv: &DimVector,
    ) -> Result<ObjectMultiset> {
        let gamma = self.cat.gamma();
        let pairing = |u: ZVertex| gamma.position(u).map_or(0, |i| profile[i]);
        let mut out = ObjectMultiset::new();
        for &v in gamma.vertices() {
            let middle: i64 = self
                .cat
                .graph()
                .neighbors(v.a)
                .iter()
                .map(|&b| pairing(ZVertex::new(v.p + 1, b)))
                .sum();
            let mult = pairing(v) - middle + pairing(ZVertex::new(v.p + 2, v.a));
            if mult < 0 {
                return Err(Error::Inconsistency(format!(
                    "negative multiplicity {mult} at {v}"
                )));
            }
            out.insert(v, mult as u32);
        }
        if self.cat.multiset_dimv(&out) != *dimv {
            return Err(Error::Inconsistency(
                "decomposition does not add up to the dimension vector".into(),
            ));
        }
        Ok(out)
    }

    /// Decomposes `N` and finds an explicit isomorphism from the
    /// block-diagonal model onto `N`.
    pub fn decomposition(&self, n: &MatrixRep) -> Result<Decomposition> {
        let multiset = self.decompose(n)?;
        let (model, summands, offsets) = self.realize_multiset(&multiset)?;
        let iso = self.find_iso(&model, n)?;
        let iso_inv = iso.inverse().expect("checked invertible");
        let parts = summands
            .iter()
            .map(|&v| self.realize(v))
            .collect::<Result<Vec<_>>>()?;
        Ok(Decomposition {
            multiset,
            summands,
            parts,
            model,
            offsets,
            iso,
            iso_inv,
        })
    }

    /// An isomorphism `B → N`, found as a random combination of a basis of
    /// `Hom(B, N)`; isomorphisms form a dense open subset when `B ≅ N`.
    pub fn find_iso(&self, b: &MatrixRep, n: &MatrixRep) -> Result<Morphism> {
        if b.dims() != n.dims() {
            return Err(Error::DimensionMismatch(b.dimv().0, n.dimv().0));
        }
        let basis = hom_space(b, n)?;
        let flat: Vec<Vec<u32>> = basis
            .iter()
            .map(|h| {
                h.maps
                    .iter()
                    .flat_map(|m| m.data().iter().copied())
                    .collect()
            })
            .collect();
        let len: usize = b.dims().iter().map(|d| d * d).sum();
        let mut rng = self.rng(fingerprint(n) ^ mix(fingerprint(b)));
        for _ in 0..self.attempts.max(1) {
            let coeffs: Vec<u32> = (0..basis.len())
                .map(|_| self.field.random(&mut rng))
                .collect();
            let x = combine(self.field, &coeffs, &flat, len);
            let mut at = 0;
            let maps = b
                .dims()
                .iter()
                .map(|&d| {
                    let m = Matrix::from_flat(self.field, d, d, x[at..at + d * d].to_vec());
                    at += d * d;
                    m
                })
                .collect();
            let g = Morphism { maps };
            if g.is_iso() {
                return Ok(g);
            }
        }
        Err(Error::IsoSearchFailed(self.attempts))
    }
}

/// `N ≅ B = ⊕ N^s` with explicit block coordinates.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub multiset: ObjectMultiset,
    /// Summand vertices, in block order.
    pub summands: Vec<ZVertex>,
    pub parts: Vec<Arc<MatrixRep>>,
    /// The block-diagonal model `B`.
    pub model: MatrixRep,
    /// Offset of summand `s` inside vertex space `a` is `offsets[s][a]`.
    pub offsets: Vec<Vec<usize>>,
    /// `g: B → N`.
    pub iso: Morphism,
    pub iso_inv: Morphism,
}

impl Decomposition {
    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    /// Moves `Z ∈ Z¹(N, N)` to block coordinates: `g_t⁻¹ Z_α g_s`.
    pub fn to_model(&self, quiver: &DynkinQuiver, z: &Cocycle) -> Cocycle {
        z.transport(quiver, &self.iso_inv, &self.iso)
    }

    /// Moves a cocycle on `B` back to `N`: `g_t Z_α g_s⁻¹`.
    pub fn from_model(&self, quiver: &DynkinQuiver, z: &Cocycle) -> Cocycle {
        z.transport(quiver, &self.iso, &self.iso_inv)
    }

    /// The block `Z^{p,q} ∈ Z¹(N^q, N^p)` of a cocycle on `B`.
    pub fn block(&self, quiver: &DynkinQuiver, z: &Cocycle, p: usize, q: usize) -> Cocycle {
        let (np, nq) = (&self.parts[p], &self.parts[q]);
        Cocycle {
            maps: quiver
                .arrows()
                .iter()
                .zip(&z.maps)
                .map(|(&(s, t), m)| {
                    m.block(
                        self.offsets[p][t],
                        self.offsets[q][s],
                        np.dims()[t],
                        nq.dims()[s],
                    )
                })
                .collect(),
        }
    }

    /// Zero-padded embedding `Ẑ^{p,q}` of a block into `Z¹(B, B)`.
    pub fn embed(&self, quiver: &DynkinQuiver, block: &Cocycle, p: usize, q: usize) -> Cocycle {
        let mut out = Cocycle::zero(&self.model, &self.model);
        for ((&(s, t), m), b) in quiver
            .arrows()
            .iter()
            .zip(out.maps.iter_mut())
            .zip(&block.maps)
        {
            m.put_block(self.offsets[p][t], self.offsets[q][s], b);
        }
        out
    }
}
