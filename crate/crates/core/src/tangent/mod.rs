//! Tangent spaces to orbits and rank schemes, and the certification of
//! tangent vectors by curves and descent.

mod certify;
mod verify;

pub use certify::{
    certify_tangent, curve_certificate, descent_step, CertNode, CertificateJson, CurveLeaf,
    DescentBudget, DescentCertificate, DescentStep, Finding, NodeJson, TangentCertificate,
};
pub use verify::{
    dimension_vectors_up_to, random_conjugate, verify_pair, verify_theorem, CertificateSummary,
    InstanceReport, Report, Timings, Verdict, VerifyOptions,
};

use crate::degeneration::{is_in_cm, Orbit};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::mesh::{MeshFunction, ObjectMultiset};
use crate::reps::{
    coboundary_annihilator, coboundary_space, cocycle_space_dim, hom_dim, hom_space, middle_term,
    Cocycle, Decomposition, MatrixRep, RepContext,
};

/// A linear subspace of `Z¹(N, N)`.
#[derive(Clone, Debug)]
pub struct TangentSpace {
    basis: Vec<Cocycle>,
    space: Subspace,
}

impl TangentSpace {
    fn from_vectors(n: &MatrixRep, vectors: &[Vec<u32>]) -> Self {
        let space = Subspace::spanned_by(n.field(), cocycle_space_dim(n, n), vectors.iter());
        let basis = space
            .basis()
            .iter()
            .map(|x| Cocycle::from_vec(n, n, x))
            .collect();
        TangentSpace { basis, space }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.space.ambient()
    }

    pub fn basis(&self) -> &[Cocycle] {
        &self.basis
    }

    pub fn contains(&self, z: &Cocycle) -> bool {
        self.space.contains(&z.to_vec())
    }

    pub fn is_within(&self, other: &TangentSpace) -> bool {
        self.space.is_within(&other.space)
    }
}

/// `T_N O_N = B¹(N, N)`.
pub fn tangent_to_orbit(n: &MatrixRep) -> Result<TangentSpace> {
    let vecs: Vec<Vec<u32>> = coboundary_space(n, n)?
        .iter()
        .map(Cocycle::to_vec)
        .collect();
    Ok(TangentSpace::from_vectors(n, &vecs))
}

/// The orbit of a representation, recovered by decomposition.
pub fn orbit_of(ctx: &RepContext, n: &MatrixRep) -> Result<Orbit> {
    Ok(Orbit::new(ctx.cat(), ctx.decompose(n)?))
}

fn require_in_cm(ctx: &RepContext, m: &Orbit, n: &MatrixRep) -> Result<(Orbit, MeshFunction)> {
    let on = orbit_of(ctx, n)?;
    if !is_in_cm(ctx.cat(), m, &on)? {
        return Err(Error::NotInRankScheme);
    }
    let delta = ctx.cat().delta_pair(&m.multiset, &on.multiset)?;
    Ok((on, delta))
}

/// The matrix of `Z ↦ Z ∘ f` from `Z¹(N, N)` to `Z¹(X, N)` for `f: X → N`.
fn pullback_matrix(
    ctx: &RepContext,
    x: &MatrixRep,
    n: &MatrixRep,
    f: &crate::reps::Morphism,
) -> Matrix {
    let field = n.field();
    let arrows = ctx.quiver().arrows();
    let mut out = Matrix::zeros(field, cocycle_space_dim(x, n), cocycle_space_dim(n, n));
    let (mut row0, mut col0) = (0, 0);
    for &(s, t) in arrows {
        let (nt, ns, xs) = (n.dims()[t], n.dims()[s], x.dims()[s]);
        let fs = &f.maps[s];
        // (Z_α f_s)[i][j] = Σ_k Z_α[i][k] f_s[k][j]
        for i in 0..nt {
            for j in 0..xs {
                for k in 0..ns {
                    out.set(row0 + i * xs + j, col0 + i * ns + k, fs.get(k, j));
                }
            }
        }
        row0 += nt * xs;
        col0 += nt * ns;
    }
    out
}

/// `T_N C_M`: cocycles `Z` with `Z ∘ f ∈ B¹(X, N)` for every
/// `X = v_{p+1,a}` with `m_{p,a} ∈ (Γ_Q)_2`, `δ_{M,N}(m_{p,a}) = 0`, and
/// every `f ∈ Hom(X, N)`.
pub fn tangent_to_cm(ctx: &RepContext, m: &Orbit, n: &MatrixRep) -> Result<TangentSpace> {
    let (_, delta) = require_in_cm(ctx, m, n)?;
    let zdim = cocycle_space_dim(n, n);
    let mut rows: Vec<Matrix> = Vec::new();
    for &mesh in ctx.cat().gamma().meshes() {
        if delta.get(mesh) != 0 {
            continue;
        }
        let x = ctx.realize(mesh.right())?;
        let homs = hom_space(&x, n)?;
        if homs.is_empty() {
            continue;
        }
        let ann = coboundary_annihilator(&x, n)?;
        if ann.is_empty() {
            continue;
        }
        let ann = Matrix::from_flat(n.field(), ann.len(), ann[0].len(), ann.concat());
        for f in &homs {
            rows.push(ann.mul(&pullback_matrix(ctx, &x, n, f)));
        }
    }
    let refs: Vec<&Matrix> = rows.iter().collect();
    let system = Matrix::vstack(n.field(), zdim, &refs);
    let space = TangentSpace::from_vectors(n, &system.nullspace());
    if !tangent_to_orbit(n)?.is_within(&space) {
        return Err(Error::Inconsistency(
            "B¹(N,N) is not contained in T_N C_M".into(),
        ));
    }
    Ok(space)
}

/// Evaluates both hom characterizations of `Z ∈ T_N C_M` on
/// `W = W(N, Z, N)`: `[X, W] = 2[X, N]` whenever `[X, N] = [X, M]`, and
/// `[W, X] = 2[N, X]` whenever `[N, X] = [M, X]`, over all `X ∈ Γ_Q`. The two
/// must agree.
pub fn tangent_condition_direct(
    ctx: &RepContext,
    m: &Orbit,
    n: &MatrixRep,
    z: &Cocycle,
) -> Result<bool> {
    require_in_cm(ctx, m, n)?;
    let w = middle_term(n, z, n)?;
    let cat = ctx.cat();
    let mut left = true;
    let mut right = true;
    for &xv in cat.gamma().vertices() {
        let x = ctx.realize(xv)?;
        let xn = hom_dim(&x, n)? as i64;
        if left && xn == cat.hom_to(xv, &m.multiset) && hom_dim(&x, &w)? as i64 != 2 * xn {
            left = false;
        }
        let nx = hom_dim(n, &x)? as i64;
        if right && nx == cat.hom_from(&m.multiset, xv) && hom_dim(&w, &x)? as i64 != 2 * nx {
            right = false;
        }
    }
    if left != right {
        return Err(Error::Inconsistency(
            "left and right tangent conditions disagree".into(),
        ));
    }
    Ok(left)
}

/// One block `Z^{p,q} ∈ Z¹(N^q, N^p)` of a cocycle on `⊕ N^s`, with its
/// zero-padded embedding.
#[derive(Clone, Debug)]
pub struct ComponentCocycle {
    pub p: usize,
    pub q: usize,
    pub block: Cocycle,
    pub embedded: Cocycle,
}

/// Splits a cocycle given in block coordinates into all its blocks.
pub fn split_components(
    ctx: &RepContext,
    dec: &Decomposition,
    z: &Cocycle,
) -> Result<Vec<ComponentCocycle>> {
    z.check_shape(&dec.model, &dec.model)?;
    let q = ctx.quiver();
    let mut out = Vec::new();
    for p in 0..dec.len() {
        for s in 0..dec.len() {
            let block = dec.block(q, z, p, s);
            let embedded = dec.embed(q, &block, p, s);
            out.push(ComponentCocycle {
                p,
                q: s,
                block,
                embedded,
            });
        }
    }
    let total = out
        .iter()
        .fold(Cocycle::zero(&dec.model, &dec.model), |acc, c| {
            acc.add(&c.embedded)
        });
    if total != *z {
        return Err(Error::Inconsistency(
            "blocks do not sum back to the cocycle".into(),
        ));
    }
    Ok(out)
}

/// The multiset behind an orbit, for callers that only have `N`.
pub fn multiset_of(ctx: &RepContext, n: &MatrixRep) -> Result<ObjectMultiset> {
    ctx.decompose(n)
}
