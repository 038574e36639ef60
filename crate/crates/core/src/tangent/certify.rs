//! Certificates that a vector of `T_N C_M` is tangent to the orbit closure.
//!
//! A vector is split into blocks `Z^{p,q}` along `N = ⊕ N^s`. Each block is
//! a coboundary, or is realised by a curve `N + t·Ẑ^{p,q}` inside the
//! closure, or is handled at a point `L = N + Ŷ^{p,r}` of a strictly larger
//! orbit, where the argument recurses.

use serde::{Deserialize, Serialize};

use crate::degeneration::{delta_mn_matrix, delta_sigma, is_in_cm, Orbit};
use crate::dynkin::DynkinType;
use crate::error::{Error, Result};
use crate::linalg::{combine, Matrix};
use crate::mesh::coords::{mesh_coords, region_vertices};
use crate::mesh::{Mesh, MeshFunction, ZVertex};
use crate::reps::{
    direct_sum, hom_dim, hom_space, Coboundaries, Cocycle, Decomposition, MatrixRep, Morphism,
    RepContext,
};
use crate::tangent::{split_components, tangent_condition_direct, tangent_to_cm, ComponentCocycle};

/// Limits on the descent search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescentBudget {
    /// Homomorphisms `h` tried over one certification.
    pub max_candidates: usize,
    /// Random combinations tried per summand after the basis elements.
    pub random_combos: usize,
}

impl Default for DescentBudget {
    fn default() -> Self {
        DescentBudget {
            max_candidates: 10_000,
            random_combos: 8,
        }
    }
}

/// Why a vector could not be certified.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Finding {
    /// The descent search ran through every planned candidate.
    CounterexampleCandidate { detail: String },
    /// The candidate budget ran out before the search finished.
    BudgetExhausted { detail: String },
    /// A library-level consistency check failed.
    InternalError { detail: String },
}

impl From<Error> for Finding {
    fn from(e: Error) -> Self {
        Finding::InternalError {
            detail: e.to_string(),
        }
    }
}

/// The curve leaf: `δ_{σ(N^p, Z^{p,q}, N^q)} ≤ δ_{M,N}`.
#[derive(Clone, Debug)]
pub struct CurveLeaf {
    pub p: usize,
    pub q: usize,
    pub delta_sigma: MeshFunction,
    pub delta_mn: MeshFunction,
}

/// A successful descent from `N` to `L = N + Ŷ^{p,r}`.
#[derive(Clone, Debug)]
pub struct DescentStep {
    pub r: usize,
    /// `h: N^r → N^q`.
    pub h: Morphism,
    /// `Y^{p,r} = Z^{p,q} ∘ h`.
    pub y: Cocycle,
    pub delta_sigma_y: MeshFunction,
    /// `L` in the block coordinates of `N`.
    pub point: MatrixRep,
    pub orbit_dim_before: i64,
    pub orbit_dim_after: i64,
}

#[derive(Clone, Debug)]
pub enum CertNode {
    /// The block (or, with `None`, the whole vector) is a coboundary.
    LeafOrbit {
        block: Option<(usize, usize)>,
    },
    LeafCurve(CurveLeaf),
    Descent {
        p: usize,
        q: usize,
        step: DescentStep,
        /// Isomorphism from the block model of `L` onto `L`.
        iso: Morphism,
        sub: Box<DescentCertificate>,
    },
}

/// Certification data at one point, in block coordinates.
#[derive(Clone, Debug)]
pub struct DescentCertificate {
    pub summands: Vec<ZVertex>,
    /// `⊕ N^s`, block diagonal.
    pub model: MatrixRep,
    pub offsets: Vec<Vec<usize>>,
    /// The vector being certified, on `model`.
    pub vector: Cocycle,
    pub nodes: Vec<CertNode>,
}

/// A certificate for `Z` at an arbitrary point `N`.
#[derive(Clone, Debug)]
pub struct TangentCertificate {
    pub point: MatrixRep,
    pub vector: Cocycle,
    /// `g: B → N` from the block model.
    pub iso: Morphism,
    pub root: DescentCertificate,
}

impl DescentCertificate {
    /// Number of points visited along the deepest branch.
    pub fn depth(&self) -> usize {
        1 + self
            .nodes
            .iter()
            .map(|n| match n {
                CertNode::Descent { sub, .. } => sub.depth(),
                _ => 0,
            })
            .max()
            .unwrap_or(0)
    }

    pub fn count(&self, f: &dyn Fn(&CertNode) -> bool) -> usize {
        self.nodes
            .iter()
            .map(|n| {
                let below = if let CertNode::Descent { sub, .. } = n {
                    sub.count(f)
                } else {
                    0
                };
                usize::from(f(n)) + below
            })
            .sum()
    }

    pub fn descent_nodes(&self) -> usize {
        self.count(&|n| matches!(n, CertNode::Descent { .. }))
    }

    pub fn curve_leaves(&self) -> usize {
        self.count(&|n| matches!(n, CertNode::LeafCurve(_)))
    }

    pub fn orbit_leaves(&self) -> usize {
        self.count(&|n| matches!(n, CertNode::LeafOrbit { .. }))
    }

    pub fn to_json(&self, ctx: &RepContext) -> CertificateJson {
        let g = ctx.cat().graph();
        CertificateJson {
            summands: self
                .summands
                .iter()
                .map(|v| (v.p, g.label(v.a).to_string()))
                .collect(),
            nodes: self
                .nodes
                .iter()
                .map(|n| match n {
                    CertNode::LeafOrbit { block } => NodeJson::LeafOrbit { block: *block },
                    CertNode::LeafCurve(leaf) => NodeJson::LeafCurve {
                        p: leaf.p,
                        q: leaf.q,
                        delta_sigma_max: leaf.delta_sigma.max_value(),
                    },
                    CertNode::Descent {
                        p, q, step, sub, ..
                    } => NodeJson::Descent {
                        p: *p,
                        q: *q,
                        r: step.r,
                        orbit_dim_before: step.orbit_dim_before,
                        orbit_dim_after: step.orbit_dim_after,
                        sub: Box::new(sub.to_json(ctx)),
                    },
                })
                .collect(),
        }
    }
}

/// Serialized certificate tree, without matrices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub summands: Vec<(i64, String)>,
    pub nodes: Vec<NodeJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum NodeJson {
    LeafOrbit {
        block: Option<(usize, usize)>,
    },
    LeafCurve {
        p: usize,
        q: usize,
        delta_sigma_max: i64,
    },
    Descent {
        p: usize,
        q: usize,
        r: usize,
        orbit_dim_before: i64,
        orbit_dim_after: i64,
        sub: Box<CertificateJson>,
    },
}

/// The curve test for a block with `p ≠ q`. Returns `None` when the
/// inequality fails.
pub fn curve_certificate(
    ctx: &RepContext,
    dec: &Decomposition,
    delta_mn: &MeshFunction,
    comp: &ComponentCocycle,
) -> Result<Option<CurveLeaf>> {
    let ds = delta_sigma(ctx, &dec.parts[comp.p], &comp.block, &dec.parts[comp.q])?;
    Ok(ds.le(delta_mn).then(|| CurveLeaf {
        p: comp.p,
        q: comp.q,
        delta_sigma: ds,
        delta_mn: delta_mn.clone(),
    }))
}

/// Candidate summands `r`, those in the region cut out by the first
/// violating mesh coming first.
fn candidate_order(
    ctx: &RepContext,
    dec: &Decomposition,
    ds: &MeshFunction,
    delta_mn: &MeshFunction,
    p: usize,
    q: usize,
) -> Vec<usize> {
    let rest: Vec<usize> = (0..dec.len()).filter(|&r| r != p && r != q).collect();
    let graph = ctx.cat().graph();
    if graph.ty() != DynkinType::D {
        return rest;
    }
    let violating: Vec<Mesh> = ds
        .iter()
        .filter(|&(m, v)| delta_mn.get(m) < v)
        .map(|(m, _)| m)
        .collect();
    let Some(m0) = violating
        .into_iter()
        .min_by_key(|&m| (mesh_coords(graph, m).map(|c| c.1).unwrap_or(i64::MAX), m))
    else {
        return rest;
    };
    let region = region_vertices(ctx.cat().zdelta(), m0).unwrap_or_default();
    let (mut first, second): (Vec<usize>, Vec<usize>) = rest
        .into_iter()
        .partition(|&r| region.contains(&dec.summands[r]));
    first.extend(second);
    first
}

/// Searches for `r ∉ {p, q}` and `h: N^r → N^q` such that `Y = Z^{p,q} ∘ h`
/// is not a coboundary, `δ_{σ(N^p,Y,N^r)} ≤ δ_{M,N}`, and
/// `supp(δ_σ − δ_{σ'}) ⊆ supp(δ_{M,N} − δ_{σ'})`. The resulting point
/// `L = N + Ŷ` is checked to lie in `C_M`, to have a larger orbit, and to
/// have `Ẑ^{p,q}` tangent to `C_M`.
#[allow(clippy::too_many_arguments)]
pub fn descent_step(
    ctx: &RepContext,
    m: &Orbit,
    dec: &Decomposition,
    delta_mn: &MeshFunction,
    comp: &ComponentCocycle,
    ds: &MeshFunction,
    budget: &DescentBudget,
    used: &mut usize,
) -> std::result::Result<Option<DescentStep>, Finding> {
    let (p, q) = (comp.p, comp.q);
    let cat = ctx.cat();
    let quiver = ctx.quiver();
    let n_orbit = Orbit::new(cat, dec.multiset.clone());
    let np = &dec.parts[p];
    let nq = &dec.parts[q];
    for r in candidate_order(ctx, dec, ds, delta_mn, p, q) {
        let nr = &dec.parts[r];
        let basis = hom_space(nr, nq)?;
        if basis.is_empty() {
            continue;
        }
        let cob = Coboundaries::new(nr, np)?;
        let flat: Vec<Vec<u32>> = basis.iter().map(flatten).collect();
        let len = flat[0].len();
        let mut rng =
            ctx.rng(((p as u64) << 40) ^ ((q as u64) << 20) ^ r as u64 ^ (*used as u64) << 48);
        let mut candidates: Vec<Morphism> = basis.clone();
        for _ in 0..budget.random_combos {
            let coeffs: Vec<u32> = (0..basis.len())
                .map(|_| ctx.field().random(&mut rng))
                .collect();
            candidates.push(unflatten(
                &combine(ctx.field(), &coeffs, &flat, len),
                nr,
                nq,
            ));
        }
        for h in candidates {
            if *used >= budget.max_candidates {
                return Err(Finding::BudgetExhausted {
                    detail: format!(
                        "descent budget of {} candidates used up at block ({p},{q})",
                        budget.max_candidates
                    ),
                });
            }
            *used += 1;
            let y = comp.block.pullback(quiver, &h);
            if cob.contains(&y) {
                continue;
            }
            let dy = delta_sigma(ctx, np, &y, nr)?;
            if !dy.le(delta_mn) {
                continue;
            }
            if !ds.sub(&dy).support_within(&delta_mn.sub(&dy)) {
                continue;
            }
            let point = dec.model.add_cocycle(&dec.embed(quiver, &y, p, r))?;
            let l_orbit = Orbit::new(cat, ctx.decompose(&point)?);
            if !is_in_cm(cat, m, &l_orbit)? {
                return Err(
                    Error::Inconsistency("descent point left the rank scheme".into()).into(),
                );
            }
            if l_orbit.dimension <= n_orbit.dimension {
                return Err(Error::Inconsistency(
                    "descent point does not enlarge the orbit".into(),
                )
                .into());
            }
            if !tangent_to_cm(ctx, m, &point)?.contains(&comp.embedded) {
                return Err(Error::Inconsistency(
                    "block is not tangent to C_M at the descent point".into(),
                )
                .into());
            }
            return Ok(Some(DescentStep {
                r,
                h,
                y,
                delta_sigma_y: dy,
                point,
                orbit_dim_before: n_orbit.dimension,
                orbit_dim_after: l_orbit.dimension,
            }));
        }
    }
    Ok(None)
}

fn flatten(h: &Morphism) -> Vec<u32> {
    h.maps
        .iter()
        .flat_map(|m| m.data().iter().copied())
        .collect()
}

fn unflatten(x: &[u32], from: &MatrixRep, to: &MatrixRep) -> Morphism {
    let mut at = 0;
    Morphism {
        maps: from
            .dims()
            .iter()
            .zip(to.dims())
            .map(|(&c, &r)| {
                let m = Matrix::from_flat(from.field(), r, c, x[at..at + r * c].to_vec());
                at += r * c;
                m
            })
            .collect(),
    }
}

fn certify_at(
    ctx: &RepContext,
    m: &Orbit,
    dec: &Decomposition,
    z: &Cocycle,
    budget: &DescentBudget,
    used: &mut usize,
) -> std::result::Result<DescentCertificate, Finding> {
    let cat = ctx.cat();
    let delta_mn = cat.delta_pair(&m.multiset, &dec.multiset)?;
    let mut nodes = Vec::new();
    if Coboundaries::new(&dec.model, &dec.model)?.contains(z) {
        nodes.push(CertNode::LeafOrbit { block: None });
    } else {
        for comp in split_components(ctx, dec, z)? {
            if comp.block.is_zero() {
                continue;
            }
            let (p, q) = (comp.p, comp.q);
            if Coboundaries::new(&dec.parts[q], &dec.parts[p])?.contains(&comp.block) {
                nodes.push(CertNode::LeafOrbit {
                    block: Some((p, q)),
                });
                continue;
            }
            if p == q {
                return Err(Error::Inconsistency(format!(
                    "diagonal block ({p},{p}) is not a coboundary"
                ))
                .into());
            }
            if let Some(leaf) = curve_certificate(ctx, dec, &delta_mn, &comp)? {
                nodes.push(CertNode::LeafCurve(leaf));
                continue;
            }
            let ds = delta_sigma(ctx, &dec.parts[p], &comp.block, &dec.parts[q])?;
            if !ds.support_within(&delta_mn) {
                return Err(Error::Inconsistency(format!(
                    "block ({p},{q}) leaves the support of δ_MN"
                ))
                .into());
            }
            let Some(step) = descent_step(ctx, m, dec, &delta_mn, &comp, &ds, budget, used)? else {
                return Err(Finding::CounterexampleCandidate {
                    detail: format!(
                        "no descent for block ({p},{q}) of N = {:?} below M = {:?}",
                        dec.multiset, m.multiset
                    ),
                });
            };
            let sub_dec = ctx.decomposition(&step.point)?;
            let sub_z = sub_dec.to_model(ctx.quiver(), &comp.embedded);
            let sub = certify_at(ctx, m, &sub_dec, &sub_z, budget, used)?;
            nodes.push(CertNode::Descent {
                p,
                q,
                step,
                iso: sub_dec.iso.clone(),
                sub: Box::new(sub),
            });
        }
    }
    Ok(DescentCertificate {
        summands: dec.summands.clone(),
        model: dec.model.clone(),
        offsets: dec.offsets.clone(),
        vector: z.clone(),
        nodes,
    })
}

/// Certifies `Z ∈ T_N C_M` as tangent to the orbit closure of `M`.
pub fn certify_tangent(
    ctx: &RepContext,
    m: &Orbit,
    n: &MatrixRep,
    z: &Cocycle,
    budget: &DescentBudget,
) -> std::result::Result<TangentCertificate, Finding> {
    if !tangent_condition_direct(ctx, m, n, z)? {
        return Err(Error::Inconsistency("vector is not tangent to C_M".into()).into());
    }
    let dec = ctx.decomposition(n)?;
    let zb = dec.to_model(ctx.quiver(), z);
    let mut used = 0;
    let root = certify_at(ctx, m, &dec, &zb, budget, &mut used)?;
    Ok(TangentCertificate {
        point: n.clone(),
        vector: z.clone(),
        iso: dec.iso.clone(),
        root,
    })
}

impl TangentCertificate {
    /// Re-checks every node from the stored matrices.
    pub fn replay(&self, ctx: &RepContext, m: &Orbit) -> Result<()> {
        if !self.iso.is_morphism(&self.root.model, &self.point) || !self.iso.is_iso() {
            return Err(Error::Inconsistency("root isomorphism is invalid".into()));
        }
        let inv = self.iso.inverse().expect("checked");
        if self.vector.transport(ctx.quiver(), &inv, &self.iso) != self.root.vector {
            return Err(Error::Inconsistency(
                "root vector does not match the point".into(),
            ));
        }
        let m_rep = ctx.realize_sum(&m.multiset)?;
        replay_at(ctx, m, &m_rep, &self.root)
    }
}

fn replay_at(
    ctx: &RepContext,
    m: &Orbit,
    m_rep: &MatrixRep,
    cert: &DescentCertificate,
) -> Result<()> {
    let fail = |what: &str| Err(Error::Inconsistency(format!("replay: {what}")));
    let quiver = ctx.quiver();
    let parts = cert
        .summands
        .iter()
        .map(|&v| ctx.realize(v))
        .collect::<Result<Vec<_>>>()?;
    for part in &parts {
        if hom_dim(part, part)? != 1 {
            return fail("a summand is not a brick");
        }
    }
    let refs: Vec<&MatrixRep> = parts.iter().map(|p| p.as_ref()).collect();
    if direct_sum(quiver.clone(), ctx.field(), &refs)? != cert.model {
        return fail("model is not the direct sum of its summands");
    }
    if !tangent_condition_direct(ctx, m, &cert.model, &cert.vector)? {
        return fail("vector is not tangent to C_M");
    }
    let dec = Decomposition {
        multiset: cert.summands.iter().copied().collect(),
        summands: cert.summands.clone(),
        parts: parts.clone(),
        model: cert.model.clone(),
        offsets: cert.offsets.clone(),
        iso: Morphism::identity(&cert.model),
        iso_inv: Morphism::identity(&cert.model),
    };
    let delta_mn = delta_mn_matrix(ctx, m_rep, &cert.model)?;
    if let [CertNode::LeafOrbit { block: None }] = cert.nodes.as_slice() {
        return if Coboundaries::new(&cert.model, &cert.model)?.contains(&cert.vector) {
            Ok(())
        } else {
            fail("whole vector is not a coboundary")
        };
    }
    let comps = split_components(ctx, &dec, &cert.vector)?;
    let mut covered = vec![false; comps.len()];
    let k = dec.len();
    for node in &cert.nodes {
        let (p, q) = match node {
            CertNode::LeafOrbit { block: Some(b) } => *b,
            CertNode::LeafCurve(leaf) => (leaf.p, leaf.q),
            CertNode::Descent { p, q, .. } => (*p, *q),
            CertNode::LeafOrbit { block: None } => return fail("misplaced whole-vector leaf"),
        };
        if p >= k || q >= k || covered[p * k + q] {
            return fail("block index repeated or out of range");
        }
        covered[p * k + q] = true;
        let comp = &comps[p * k + q];
        match node {
            CertNode::LeafOrbit { .. } => {
                if !Coboundaries::new(&parts[q], &parts[p])?.contains(&comp.block) {
                    return fail("orbit leaf block is not a coboundary");
                }
            }
            CertNode::LeafCurve(leaf) => {
                let ds = delta_sigma(ctx, &parts[p], &comp.block, &parts[q])?;
                if p == q
                    || ds != leaf.delta_sigma
                    || delta_mn != leaf.delta_mn
                    || !ds.le(&delta_mn)
                {
                    return fail("curve leaf inequality");
                }
            }
            CertNode::Descent { step, iso, sub, .. } => {
                let r = step.r;
                if r == p || r == q || r >= k {
                    return fail("descent index");
                }
                if !step.h.is_morphism(&parts[r], &parts[q])
                    || comp.block.pullback(quiver, &step.h) != step.y
                {
                    return fail("descent homomorphism");
                }
                if Coboundaries::new(&parts[r], &parts[p])?.contains(&step.y) {
                    return fail("descent sequence splits");
                }
                let ds = delta_sigma(ctx, &parts[p], &comp.block, &parts[q])?;
                let dy = delta_sigma(ctx, &parts[p], &step.y, &parts[r])?;
                if !dy.le(&delta_mn)
                    || !ds.sub(&dy).support_within(&delta_mn.sub(&dy))
                    || ds.le(&delta_mn)
                {
                    return fail("descent defect conditions");
                }
                let point = cert.model.add_cocycle(&dec.embed(quiver, &step.y, p, r))?;
                if point != step.point || !delta_mn_matrix(ctx, m_rep, &point)?.is_nonnegative() {
                    return fail("descent point");
                }
                if hom_dim(&point, &point)? >= hom_dim(&cert.model, &cert.model)? {
                    return fail("descent does not enlarge the orbit");
                }
                if !iso.is_morphism(&sub.model, &point) || !iso.is_iso() {
                    return fail("descent isomorphism");
                }
                let inv = iso.inverse().expect("checked");
                if comp.embedded.transport(quiver, &inv, iso) != sub.vector {
                    return fail("descent vector transport");
                }
                replay_at(ctx, m, m_rep, sub)?;
            }
        }
    }
    for (i, comp) in comps.iter().enumerate() {
        if !covered[i] && !comp.block.is_zero() {
            return fail("uncovered nonzero block");
        }
    }
    Ok(())
}
