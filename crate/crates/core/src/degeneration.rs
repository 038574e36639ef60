//! Orbits of a dimension vector, the degeneration order, rank-scheme
//! membership, and defect functions of explicit exact sequences.

use std::fmt::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dynkin::DimVector;
use crate::error::{Error, Result};
use crate::mesh::{MeshCategory, MeshFunction, ObjectMultiset, SummandJson};
use crate::reps::{middle_term, Cocycle, MatrixRep, RepContext};

/// A `GL_d`-orbit, identified with the multiset of its indecomposable
/// summands.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Orbit {
    pub multiset: ObjectMultiset,
    pub dimv: DimVector,
    /// `[M, M]`.
    pub self_hom: i64,
    /// `Σ d_a² − [M, M]`.
    pub dimension: i64,
}

impl Orbit {
    pub fn new(cat: &MeshCategory, multiset: ObjectMultiset) -> Self {
        let dimv = cat.multiset_dimv(&multiset);
        let self_hom = cat.hom_between(&multiset, &multiset);
        let dimension = dimv.iter().map(|d| d * d).sum::<i64>() - self_hom;
        Orbit {
            multiset,
            dimv,
            self_hom,
            dimension,
        }
    }

    /// `[M, M] − b_Q(d, d) = dim Ext¹(M, M)`.
    pub fn codimension(&self, cat: &MeshCategory) -> i64 {
        self.self_hom
            - cat
                .quiver()
                .euler_form(&self.dimv, &self.dimv)
                .expect("matching length")
    }
}

/// All orbits of dimension vector `d`, as multisets of `Γ_Q` vertices.
/// Vertices are taken in window order and multiplicities chosen greedily
/// from the largest down, so the list is duplicate-free and deterministic.
pub fn enumerate_orbits(cat: &MeshCategory, d: &DimVector) -> Result<Vec<Orbit>> {
    let n = cat.quiver().num_vertices();
    if d.len() != n {
        return Err(Error::IndexMismatch {
            expected: n,
            got: d.len(),
        });
    }
    if !d.is_nonnegative() {
        return Err(Error::Shape(format!(
            "dimension vector {d} has a negative entry"
        )));
    }
    let verts = cat.gamma().vertices().to_vec();
    let dims: Vec<DimVector> = verts
        .iter()
        .map(|&v| cat.dimension_vector_of(v).unwrap())
        .collect();
    let mut out = Vec::new();
    let mut chosen = vec![0u32; verts.len()];
    rec(&dims, 0, d.clone(), &mut chosen, &mut |ch| {
        let m = verts.iter().zip(ch).filter(|(_, &k)| k > 0).fold(
            ObjectMultiset::new(),
            |mut m, (&v, &k)| {
                m.insert(v, k);
                m
            },
        );
        out.push(Orbit::new(cat, m));
    });
    Ok(out)
}

fn rec(
    dims: &[DimVector],
    i: usize,
    rest: DimVector,
    chosen: &mut [u32],
    emit: &mut dyn FnMut(&[u32]),
) {
    if rest.is_zero() {
        emit(chosen);
        return;
    }
    if i == dims.len() {
        return;
    }
    let root = &dims[i];
    let max = (0..rest.len())
        .filter(|&a| root[a] > 0)
        .map(|a| rest[a] / root[a])
        .min()
        .unwrap_or(0);
    for k in (0..=max).rev() {
        chosen[i] = k as u32;
        let r = &rest - &(k * root);
        rec(dims, i + 1, r, chosen, emit);
    }
    chosen[i] = 0;
}

fn check_dims(m: &Orbit, n: &Orbit) -> Result<()> {
    if m.dimv != n.dimv {
        return Err(Error::DimensionMismatch(m.dimv.0.clone(), n.dimv.0.clone()));
    }
    Ok(())
}

/// Whether `M` degenerates to `N`: `[X, N] ≥ [X, M]` for every
/// indecomposable `X`. The dual condition `[N, X] ≥ [M, X]` is evaluated as
/// well and must agree.
pub fn degenerates(cat: &MeshCategory, m: &Orbit, n: &Orbit) -> Result<bool> {
    check_dims(m, n)?;
    let xs = cat.gamma().vertices();
    let left = xs
        .iter()
        .all(|&x| cat.hom_to(x, &n.multiset) >= cat.hom_to(x, &m.multiset));
    let right = xs
        .iter()
        .all(|&x| cat.hom_from(&n.multiset, x) >= cat.hom_from(&m.multiset, x));
    if left != right {
        return Err(Error::Inconsistency(format!(
            "left and right hom orders disagree for {:?} vs {:?}",
            m.multiset, n.multiset
        )));
    }
    Ok(left)
}

/// Whether `N` is a point of the rank scheme `C_M`: `δ_{M,N} ≥ 0`.
pub fn is_in_cm(cat: &MeshCategory, m: &Orbit, n: &Orbit) -> Result<bool> {
    check_dims(m, n)?;
    let delta = cat.delta_pair(&m.multiset, &n.multiset)?;
    if let Some((mesh, _)) = delta
        .iter()
        .find(|(mesh, _)| !cat.gamma().contains_mesh(*mesh))
    {
        return Err(Error::Inconsistency(format!(
            "module-level defect nonzero outside Γ_Q at {mesh:?}"
        )));
    }
    Ok(delta.is_nonnegative())
}

/// The degeneration order on the orbits of one dimension vector.
#[derive(Clone, Debug)]
pub struct DegenerationPoset {
    pub orbits: Vec<Orbit>,
    /// `leq[i][j]`: `O_i ⊆ closure(O_j)`, i.e. `M_j` degenerates to `M_i`.
    pub leq: Vec<Vec<bool>>,
}

impl DegenerationPoset {
    pub fn build(cat: &MeshCategory, d: &DimVector) -> Result<Self> {
        let orbits = enumerate_orbits(cat, d)?;
        let k = orbits.len();
        let cells: Vec<bool> = (0..k * k)
            .into_par_iter()
            .map(|c| degenerates(cat, &orbits[c % k], &orbits[c / k]))
            .collect::<Result<_>>()?;
        let leq = (0..k).map(|i| cells[i * k..(i + 1) * k].to_vec()).collect();
        Ok(DegenerationPoset { orbits, leq })
    }

    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    /// Checks reflexivity, antisymmetry and transitivity.
    pub fn validate(&self) -> Result<()> {
        let k = self.len();
        for i in 0..k {
            if !self.leq[i][i] {
                return Err(Error::Inconsistency(format!(
                    "orbit {i} is not related to itself"
                )));
            }
            for j in 0..k {
                if i != j && self.leq[i][j] && self.leq[j][i] {
                    return Err(Error::Inconsistency(format!(
                        "orbits {i} and {j} are mutually related"
                    )));
                }
                if self.leq[i][j] {
                    for l in 0..k {
                        if self.leq[j][l] && !self.leq[i][l] {
                            return Err(Error::Inconsistency(format!(
                                "transitivity fails at {i} ≤ {j} ≤ {l}"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Maximal elements.
    pub fn maximal(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&j| (0..self.len()).all(|l| l == j || !self.leq[j][l]))
            .collect()
    }

    /// Cover relations `(i, j)` with `i < j` and nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let k = self.len();
        let mut out = Vec::new();
        for i in 0..k {
            for j in 0..k {
                if i != j
                    && self.leq[i][j]
                    && !(0..k).any(|l| l != i && l != j && self.leq[i][l] && self.leq[l][j])
                {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn to_json(&self, cat: &MeshCategory) -> PosetJson {
        let k = self.len();
        PosetJson {
            schema_version: crate::SCHEMA_VERSION,
            order: "window-order root multiplicities, largest first".into(),
            orbits: self
                .orbits
                .iter()
                .map(|o| o.multiset.to_json(cat.graph()))
                .collect(),
            dimensions: self.orbits.iter().map(|o| o.dimension).collect(),
            leq: (0..k)
                .flat_map(|i| (0..k).map(move |j| (i, j)))
                .filter(|&(i, j)| self.leq[i][j])
                .map(|(i, j)| [i, j])
                .collect(),
        }
    }

    /// Hasse diagram in Graphviz format, larger orbits on top.
    pub fn to_dot(&self, cat: &MeshCategory) -> String {
        let g = cat.graph();
        let mut out = String::from(
            "digraph degenerations {\n  rankdir=BT;\n  node [shape=box, fontsize=10];\n",
        );
        for (i, o) in self.orbits.iter().enumerate() {
            let label: Vec<String> = o
                .multiset
                .iter()
                .map(|(v, k)| {
                    if k > 1 {
                        format!("v({},{})^{k}", v.p, g.label(v.a))
                    } else {
                        format!("v({},{})", v.p, g.label(v.a))
                    }
                })
                .collect();
            let _ = writeln!(
                out,
                "  o{i} [label=\"{}\\ndim {}\"];",
                label.join(" + "),
                o.dimension
            );
        }
        for (i, j) in self.covers() {
            let _ = writeln!(out, "  o{i} -> o{j};");
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub schema_version: u32,
    pub order: String,
    pub orbits: Vec<Vec<SummandJson>>,
    pub dimensions: Vec<i64>,
    pub leq: Vec<[usize; 2]>,
}

/// `δ_σ` for `σ: 0 → U → W(U,Z,V) → V → 0`:
/// `[v_{p+1,a}, U ⊕ V] − [v_{p+1,a}, W]` on every mesh of `Γ_Q`.
pub fn delta_sigma(
    ctx: &RepContext,
    u: &MatrixRep,
    z: &Cocycle,
    v: &MatrixRep,
) -> Result<MeshFunction> {
    let w = middle_term(u, z, v)?;
    let pu = ctx.hom_profile(u)?;
    let pv = ctx.hom_profile(v)?;
    let pw = ctx.hom_profile(&w)?;
    Ok(profile_delta(ctx.cat(), |i| pu[i] + pv[i] - pw[i]))
}

/// `δ_{M,N}(m_{p,a}) = [v_{p+1,a}, N] − [v_{p+1,a}, M]` evaluated with
/// matrix hom spaces.
pub fn delta_mn_matrix(ctx: &RepContext, m: &MatrixRep, n: &MatrixRep) -> Result<MeshFunction> {
    m.check_compatible(n)?;
    if m.dims() != n.dims() {
        return Err(Error::DimensionMismatch(m.dimv().0, n.dimv().0));
    }
    let pm = ctx.hom_profile(m)?;
    let pn = ctx.hom_profile(n)?;
    Ok(profile_delta(ctx.cat(), |i| pn[i] - pm[i]))
}

/// Builds a mesh function from per-vertex values, read at the right end of
/// each mesh of `Γ_Q`.
pub(crate) fn profile_delta(cat: &MeshCategory, value: impl Fn(usize) -> i64) -> MeshFunction {
    cat.gamma()
        .meshes()
        .iter()
        .map(|&m| {
            (
                m,
                value(cat.gamma().position(m.right()).expect("mesh in window")),
            )
        })
        .collect()
}
