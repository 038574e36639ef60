//! Direct sums of indecomposables, integer functions on meshes, and the
//! pairing-based formulas for multiplicities and defects.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::dynkin::{DimVector, DynkinGraph, DynkinQuiver};
use crate::error::{Error, Result};
use crate::mesh::gamma::{window_dimension_vectors, GammaWindow};
use crate::mesh::zdelta::{Mesh, ZDelta, ZVertex};

/// A finitely supported multiset of `ZΔ` vertices, read as the direct sum
/// `⊕ v^{mult(v)}` in the derived category.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ObjectMultiset(BTreeMap<ZVertex, u32>);

impl ObjectMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(v: ZVertex) -> Self {
        let mut m = Self::new();
        m.insert(v, 1);
        m
    }

    pub fn insert(&mut self, v: ZVertex, k: u32) {
        if k > 0 {
            *self.0.entry(v).or_insert(0) += k;
        }
    }

    pub fn get(&self, v: ZVertex) -> u32 {
        self.0.get(&v).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (ZVertex, u32)> + '_ {
        self.0.iter().map(|(&v, &k)| (v, k))
    }

    /// Distinct summands.
    pub fn support(&self) -> impl Iterator<Item = ZVertex> + '_ {
        self.0.keys().copied()
    }

    /// Summands with repetition, in vertex order.
    pub fn summands(&self) -> Vec<ZVertex> {
        self.iter()
            .flat_map(|(v, k)| std::iter::repeat_n(v, k as usize))
            .collect()
    }

    pub fn total(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self, other: &ObjectMultiset) -> ObjectMultiset {
        let mut out = self.clone();
        for (v, k) in other.iter() {
            out.insert(v, k);
        }
        out
    }

    pub fn to_json(&self, graph: &DynkinGraph) -> Vec<SummandJson> {
        self.iter()
            .map(|(v, mult)| SummandJson {
                p: v.p,
                a: graph.label(v.a).to_string(),
                mult,
            })
            .collect()
    }

    pub fn from_json(zdelta: &ZDelta, entries: &[SummandJson]) -> Result<Self> {
        let mut m = Self::new();
        for e in entries {
            m.insert(zdelta.vertex_by_label(e.p, &e.a)?, e.mult);
        }
        Ok(m)
    }
}

impl FromIterator<ZVertex> for ObjectMultiset {
    fn from_iter<I: IntoIterator<Item = ZVertex>>(iter: I) -> Self {
        let mut m = Self::new();
        for v in iter {
            m.insert(v, 1);
        }
        m
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummandJson {
    pub p: i64,
    pub a: String,
    pub mult: u32,
}

/// A finitely supported function `(ZΔ)_2 → Z`. Only nonzero values are
/// stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MeshFunction(BTreeMap<Mesh, i64>);

impl MeshFunction {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, m: Mesh) -> i64 {
        self.0.get(&m).copied().unwrap_or(0)
    }

    pub fn set(&mut self, m: Mesh, value: i64) {
        if value == 0 {
            self.0.remove(&m);
        } else {
            self.0.insert(m, value);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (Mesh, i64)> + '_ {
        self.0.iter().map(|(&m, &v)| (m, v))
    }

    /// Meshes with a positive value.
    pub fn support(&self) -> Vec<Mesh> {
        self.iter()
            .filter(|&(_, v)| v > 0)
            .map(|(m, _)| m)
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.values().all(|&v| v >= 0)
    }

    pub fn max_value(&self) -> i64 {
        self.0.values().copied().max().unwrap_or(0).max(0)
    }

    /// Pointwise `self ≤ other`.
    pub fn le(&self, other: &MeshFunction) -> bool {
        self.sub(other).0.values().all(|&v| v <= 0)
    }

    /// `supp(self) ⊆ supp(other)`.
    pub fn support_within(&self, other: &MeshFunction) -> bool {
        self.iter().all(|(m, v)| v <= 0 || other.get(m) > 0)
    }

    pub fn sub(&self, other: &MeshFunction) -> MeshFunction {
        let mut out = self.clone();
        for (m, v) in other.iter() {
            out.set(m, out.get(m) - v);
        }
        out
    }

    pub fn neg(&self) -> MeshFunction {
        MeshFunction(self.0.iter().map(|(&m, &v)| (m, -v)).collect())
    }

    pub fn to_json(&self, graph: &DynkinGraph) -> Vec<MeshValueJson> {
        self.iter()
            .map(|(m, value)| MeshValueJson {
                p: m.p,
                a: graph.label(m.a).to_string(),
                value,
            })
            .collect()
    }

    pub fn from_json(zdelta: &ZDelta, entries: &[MeshValueJson]) -> Result<Self> {
        let mut f = Self::new();
        for e in entries {
            let m = zdelta.mesh_by_label(e.p, &e.a)?;
            f.set(m, f.get(m) + e.value);
        }
        Ok(f)
    }
}

impl FromIterator<(Mesh, i64)> for MeshFunction {
    fn from_iter<I: IntoIterator<Item = (Mesh, i64)>>(iter: I) -> Self {
        let mut f = MeshFunction::new();
        for (m, v) in iter {
            f.set(m, f.get(m) + v);
        }
        f
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeshValueJson {
    pub p: i64,
    pub a: String,
    pub value: i64,
}

/// A Dynkin quiver together with `ZΔ`, its hom table and the embedded
/// AR quiver. Immutable after construction and shared across threads.
#[derive(Clone, Debug)]
pub struct MeshCategory {
    quiver: DynkinQuiver,
    zdelta: ZDelta,
    gamma: GammaWindow,
    dimvs: Vec<DimVector>,
}

impl MeshCategory {
    pub fn new(quiver: DynkinQuiver) -> Self {
        let zdelta = ZDelta::new(quiver.graph().clone());
        let gamma = GammaWindow::new(&quiver, &zdelta);
        let dimvs = window_dimension_vectors(&quiver, &zdelta, &gamma);
        MeshCategory {
            quiver,
            zdelta,
            gamma,
            dimvs,
        }
    }

    pub fn quiver(&self) -> &DynkinQuiver {
        &self.quiver
    }

    pub fn graph(&self) -> &DynkinGraph {
        self.quiver.graph()
    }

    pub fn zdelta(&self) -> &ZDelta {
        &self.zdelta
    }

    pub fn gamma(&self) -> &GammaWindow {
        &self.gamma
    }

    pub fn hom_dim(&self, v: ZVertex, w: ZVertex) -> i64 {
        self.zdelta.hom_dim(v, w)
    }

    /// Dimension vector of a module vertex.
    pub fn dimension_vector_of(&self, v: ZVertex) -> Result<DimVector> {
        self.gamma
            .position(v)
            .map(|i| self.dimvs[i].clone())
            .ok_or_else(|| Error::OutsideWindow {
                p: v.p,
                label: self.graph().label(v.a).to_string(),
            })
    }

    /// Dimension vector in the Grothendieck group: `(-1)^i dimv` on `Γ_Q[i]`.
    pub fn derived_dimension_vector(&self, v: ZVertex) -> DimVector {
        let i = self.gamma.shift_index(&self.zdelta, v);
        let base = self.zdelta.shift(v, -i);
        let d = &self.dimvs[self.gamma.position(base).unwrap()];
        if i.rem_euclid(2) == 0 {
            d.clone()
        } else {
            -d
        }
    }

    pub fn multiset_dimv(&self, m: &ObjectMultiset) -> DimVector {
        let mut d = DimVector::zero(self.quiver.num_vertices());
        for (v, k) in m.iter() {
            d += &(k as i64 * &self.derived_dimension_vector(v));
        }
        d
    }

    /// Whether every summand is a module (lies in `Γ_Q`).
    pub fn is_module_level(&self, m: &ObjectMultiset) -> bool {
        m.support().all(|v| self.gamma.contains(v))
    }

    /// `⟨u, M⟩ = Σ_{i≤0} (-1)^i [u, M]^i`. For a module `M` this is
    /// `[u, M]` when `u ∈ Γ_Q` and vanishes when `u ∈ Γ_Q[i]`, `i ≥ 1`.
    pub fn pairing(&self, u: ZVertex, m: &ObjectMultiset) -> i64 {
        m.iter()
            .map(|(w, k)| k as i64 * self.zdelta.pairing(u, w))
            .sum()
    }

    /// `⟨M, u⟩`.
    pub fn pairing_right(&self, m: &ObjectMultiset, u: ZVertex) -> i64 {
        m.iter()
            .map(|(w, k)| {
                let mut total = 0;
                let mut j = 0;
                loop {
                    let uj = self.zdelta.shift(u, -j);
                    if uj.p < w.p {
                        break;
                    }
                    let h = self.zdelta.hom_dim(w, uj);
                    total += if j % 2 == 0 { h } else { -h };
                    j += 1;
                }
                k as i64 * total
            })
            .sum()
    }

    /// `[u, M]`, summed over summands.
    pub fn hom_to(&self, u: ZVertex, m: &ObjectMultiset) -> i64 {
        m.iter().map(|(w, k)| k as i64 * self.hom_dim(u, w)).sum()
    }

    /// `[M, u]`.
    pub fn hom_from(&self, m: &ObjectMultiset, u: ZVertex) -> i64 {
        m.iter().map(|(w, k)| k as i64 * self.hom_dim(w, u)).sum()
    }

    /// `[M, N]`.
    pub fn hom_between(&self, m: &ObjectMultiset, n: &ObjectMultiset) -> i64 {
        m.iter().map(|(v, k)| k as i64 * self.hom_to(v, n)).sum()
    }

    /// Multiplicity of `v` in `M` recovered from pairings alone:
    /// `⟨v,M⟩ − Σ_{b∈a⁻} ⟨v_{p+1,b},M⟩ + ⟨v_{p+2,a},M⟩`.
    pub fn multiplicity(&self, m: &ObjectMultiset, v: ZVertex) -> i64 {
        let middle: i64 = self
            .graph()
            .neighbors(v.a)
            .iter()
            .map(|&b| self.pairing(ZVertex::new(v.p + 1, b), m))
            .sum();
        self.pairing(v, m) - middle + self.pairing(ZVertex::new(v.p + 2, v.a), m)
    }

    /// The dual formula `⟨M,v_{p-2,a}⟩ − Σ ⟨M,v_{p-1,b}⟩ + ⟨M,v⟩`.
    pub fn multiplicity_right(&self, m: &ObjectMultiset, v: ZVertex) -> i64 {
        let middle: i64 = self
            .graph()
            .neighbors(v.a)
            .iter()
            .map(|&b| self.pairing_right(m, ZVertex::new(v.p - 1, b)))
            .sum();
        self.pairing_right(m, ZVertex::new(v.p - 2, v.a)) - middle + self.pairing_right(m, v)
    }

    fn check_same_dimv(&self, m: &ObjectMultiset, n: &ObjectMultiset) -> Result<()> {
        let (dm, dn) = (self.multiset_dimv(m), self.multiset_dimv(n));
        if dm != dn {
            return Err(Error::DimensionMismatch(dm.0, dn.0));
        }
        Ok(())
    }

    /// `δ_{M,N}(m_{p,a}) = ⟨v_{p+1,a},N⟩ − ⟨v_{p+1,a},M⟩`, cross-checked
    /// against `⟨N,v_{p-1,a}⟩ − ⟨M,v_{p-1,a}⟩` on every mesh.
    pub fn delta_pair(&self, m: &ObjectMultiset, n: &ObjectMultiset) -> Result<MeshFunction> {
        self.check_same_dimv(m, n)?;
        let positions: Vec<i64> = m.support().chain(n.support()).map(|v| v.p).collect();
        let (Some(&lo), Some(&hi)) = (positions.iter().min(), positions.iter().max()) else {
            return Ok(MeshFunction::new());
        };
        let mut out = MeshFunction::new();
        for q in lo - 2..=hi + 2 {
            for a in 0..self.graph().rank() {
                if !self.zdelta.is_vertex_position(q, a) {
                    continue;
                }
                let right_end = ZVertex::new(q, a);
                let left_end = ZVertex::new(q - 2, a);
                let lhs = self.pairing(right_end, n) - self.pairing(right_end, m);
                let rhs = self.pairing_right(n, left_end) - self.pairing_right(m, left_end);
                if lhs != rhs {
                    return Err(Error::Inconsistency(format!(
                        "left and right defect formulas disagree at mesh ({}, {}): {lhs} vs {rhs}",
                        q - 1,
                        self.graph().label(a)
                    )));
                }
                out.set(Mesh::new(q - 1, a), lhs);
            }
        }
        Ok(out)
    }

    /// Both sides of the sectional-path identity
    /// `Σ_i (mult_{v_i}(N) − mult_{v_i}(M)) = δ(m_{p-1,a_p}) − Σ_{(j,b)∈C} δ(m_{j,b}) + δ(m_{q+1,a_q})`.
    pub fn sectional_delta_identity(
        &self,
        m: &ObjectMultiset,
        n: &ObjectMultiset,
        path: &[ZVertex],
    ) -> Result<(i64, i64)> {
        self.check_sectional(path)?;
        let delta = self.delta_pair(m, n)?;
        let lhs: i64 = path
            .iter()
            .map(|&v| n.get(v) as i64 - m.get(v) as i64)
            .sum();
        let (first, last) = (path[0], path[path.len() - 1]);
        let on_path: Vec<usize> = path.iter().map(|v| v.a).collect();
        let mut rhs =
            delta.get(Mesh::new(first.p - 1, first.a)) + delta.get(Mesh::new(last.p + 1, last.a));
        for v in path {
            for &b in self.graph().neighbors(v.a) {
                if !on_path.contains(&b) {
                    rhs -= delta.get(Mesh::new(v.p, b));
                }
            }
        }
        Ok((lhs, rhs))
    }

    /// Validates a sectional path: consecutive vertices joined by arrows of
    /// `ZΔ`, underlying labels pairwise distinct.
    pub fn check_sectional(&self, path: &[ZVertex]) -> Result<()> {
        if path.is_empty() {
            return Err(Error::NotSectional("empty path".into()));
        }
        for v in path {
            self.zdelta.vertex(v.p, v.a)?;
        }
        for w in path.windows(2) {
            if w[1].p != w[0].p + 1 || self.graph().distance(w[0].a, w[1].a) != 1 {
                return Err(Error::NotSectional(format!(
                    "{} -> {} is not an arrow",
                    w[0], w[1]
                )));
            }
        }
        let mut labels: Vec<usize> = path.iter().map(|v| v.a).collect();
        labels.sort_unstable();
        labels.dedup();
        if labels.len() != path.len() {
            return Err(Error::NotSectional("a vertex of Δ repeats".into()));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynkin::DynkinType;

    fn a2() -> MeshCategory {
        MeshCategory::new(DynkinQuiver::with_default_orientation(
            DynkinGraph::build(DynkinType::A, 2).unwrap(),
        ))
    }

    #[test]
    fn a2_window() {
        let cat = a2();
        let gamma = cat.gamma();
        assert_eq!(gamma.vertices().len(), 3);
        assert_eq!(gamma.meshes().len(), 1);
        // arrow a -> b gives p_a = p_b + 1
        let pp = gamma.projective_positions();
        assert_eq!(pp[0], pp[1] + 1);
        let dims: Vec<_> = gamma
            .vertices()
            .iter()
            .map(|&v| cat.dimension_vector_of(v).unwrap().0)
            .collect();
        assert!(dims.contains(&vec![1, 1]));
        assert!(dims.contains(&vec![1, 0]));
        assert!(dims.contains(&vec![0, 1]));
    }

    #[test]
    fn a2_delta_on_unique_mesh() {
        let cat = a2();
        let vs = cat.gamma().vertices().to_vec();
        let by_dim = |d: Vec<i64>| {
            *vs.iter()
                .find(|&&v| cat.dimension_vector_of(v).unwrap().0 == d)
                .unwrap()
        };
        let x = by_dim(vec![1, 1]);
        let sa = by_dim(vec![1, 0]);
        let sb = by_dim(vec![0, 1]);
        let m = ObjectMultiset::single(x);
        let n: ObjectMultiset = [sa, sb].into_iter().collect();
        let delta = cat.delta_pair(&m, &n).unwrap();
        let mesh = cat.gamma().meshes()[0];
        assert_eq!(delta.iter().collect::<Vec<_>>(), vec![(mesh, 1)]);
        assert!(cat.delta_pair(&m, &m).unwrap().is_zero());
        assert!(matches!(
            cat.delta_pair(&m, &ObjectMultiset::single(sa)),
            Err(Error::DimensionMismatch(..))
        ));
    }

    #[test]
    fn mesh_function_ops() {
        let m1 = Mesh::new(1, 0);
        let m2 = Mesh::new(3, 0);
        let f: MeshFunction = [(m1, 2), (m2, 1)].into_iter().collect();
        let g: MeshFunction = [(m1, 1)].into_iter().collect();
        assert!(g.le(&f));
        assert!(!f.le(&g));
        assert!(g.support_within(&f));
        assert_eq!(f.sub(&g).get(m1), 1);
        assert_eq!(f.sub(&f), MeshFunction::new());
        assert_eq!(f.neg().get(m2), -1);
        assert_eq!(f.max_value(), 2);
    }

    #[test]
    fn sectional_validation() {
        let cat = MeshCategory::new(DynkinQuiver::with_default_orientation(
            DynkinGraph::build(DynkinType::D, 5).unwrap(),
        ));
        let z = cat.zdelta();
        let v = |p, l: &str| z.vertex_by_label(p, l).unwrap();
        assert!(cat
            .check_sectional(&[v(1, "c'"), v(2, "b0"), v(3, "b1")])
            .is_ok());
        assert!(cat
            .check_sectional(&[v(1, "c'"), v(2, "b0"), v(3, "c'")])
            .is_err());
        assert!(cat.check_sectional(&[v(1, "c'"), v(5, "b1")]).is_err());
    }
}
