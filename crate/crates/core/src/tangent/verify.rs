//! Exhaustive verification of `T_N Ō_M = T_N C_M` over families of
//! dimension vectors.

use std::time::Instant;

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::degeneration::{degenerates, DegenerationPoset, Orbit};
use crate::dynkin::{DimVector, DynkinType, QuiverJson};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::mesh::SummandJson;
use crate::reps::{Cocycle, MatrixRep, RepContext};
use crate::tangent::certify::{certify_tangent, CertificateJson, DescentBudget, Finding};
use crate::tangent::{tangent_to_cm, tangent_to_orbit};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerifyOptions {
    pub budget: DescentBudget,
    /// Move `N` by a random base change before certifying.
    pub conjugate: bool,
    /// Re-check every certificate from its stored matrices.
    pub replay: bool,
    /// Keep the certificate trees of instances with a descent node.
    pub keep_descent_trees: bool,
    /// Random vectors of `T_N C_M` certified on top of the basis.
    pub random_vectors: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            budget: DescentBudget::default(),
            conjugate: true,
            replay: true,
            keep_descent_trees: true,
            random_vectors: 0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Verified,
    CounterexampleCandidate,
    BudgetExhausted,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Verified => 0,
            _ => 2,
        }
    }
}

/// One pair `N ≤_deg M`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InstanceReport {
    pub dimv: Vec<i64>,
    pub m: Vec<SummandJson>,
    pub n: Vec<SummandJson>,
    pub tangent_cm_dim: usize,
    pub tangent_orbit_dim: usize,
    /// Random vectors certified in addition to the basis.
    pub random_vectors: usize,
    /// Vectors certified: the basis of `T_N C_M` then any random extras.
    pub certified: usize,
    pub max_depth: usize,
    pub descent_nodes: usize,
    pub curve_leaves: usize,
    pub orbit_leaves: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub finding: Option<Finding>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub descent_trees: Vec<CertificateJson>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateSummary {
    pub dimension_vectors: usize,
    pub instances: usize,
    pub vectors: usize,
    pub certified: usize,
    pub descent_nodes: usize,
    pub instances_with_descent: usize,
    pub curve_leaves: usize,
    pub orbit_leaves: usize,
    pub max_depth: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Timings {
    pub total_ms: u128,
    pub per_dimension_vector_ms: Vec<(Vec<i64>, u128)>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub quiver: QuiverJson,
    pub characteristic: u32,
    pub seed: u64,
    /// Set for type E, where no proof of the statement is known.
    pub experimental: bool,
    pub verdict: Verdict,
    pub summary: CertificateSummary,
    pub instances: Vec<InstanceReport>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timings: Option<Timings>,
}

impl Report {
    /// JSON without timings, stable across runs with the same seed.
    pub fn deterministic_json(&self) -> String {
        let mut r = self.clone();
        r.timings = None;
        serde_json::to_string_pretty(&r).expect("report serializes")
    }

    pub fn findings(&self) -> impl Iterator<Item = (&InstanceReport, &Finding)> {
        self.instances
            .iter()
            .filter_map(|i| i.finding.as_ref().map(|f| (i, f)))
    }
}

/// All nonzero dimension vectors with coordinates at most `max_coord` and
/// total at most `max_total`.
pub fn dimension_vectors_up_to(n: usize, max_coord: i64, max_total: Option<i64>) -> Vec<DimVector> {
    let mut out = Vec::new();
    let mut cur = vec![0i64; n];
    loop {
        let total: i64 = cur.iter().sum();
        if total > 0 && max_total.is_none_or(|t| total <= t) {
            out.push(DimVector(cur.clone()));
        }
        let mut i = 0;
        while i < n && cur[i] == max_coord {
            cur[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
        cur[i] += 1;
    }
    out.sort_by(|a, b| a.total().cmp(&b.total()).then_with(|| a.0.cmp(&b.0)));
    out
}

/// `g · N` for random invertible `g`.
pub fn random_conjugate(ctx: &RepContext, n: &MatrixRep, tag: u64) -> Result<MatrixRep> {
    let field = n.field();
    let mut rng = ctx.rng(tag);
    let gs: Vec<(Matrix, Matrix)> = n
        .dims()
        .iter()
        .map(|&d| loop {
            let g = Matrix::random(field, d, d, &mut rng);
            if let Some(inv) = g.inverse() {
                break (g, inv);
            }
            let _: u32 = rng.gen();
        })
        .collect();
    let maps = ctx
        .quiver()
        .arrows()
        .iter()
        .zip(n.maps())
        .map(|(&(s, t), a)| gs[t].0.mul(a).mul(&gs[s].1))
        .collect();
    MatrixRep::new(ctx.quiver().clone(), field, n.dims().to_vec(), maps)
}

fn certify_instance(
    ctx: &RepContext,
    m: &Orbit,
    n: &Orbit,
    tag: u64,
    opts: &VerifyOptions,
) -> Result<InstanceReport> {
    let graph = ctx.cat().graph();
    let mut point = ctx.realize_sum(&n.multiset)?;
    if opts.conjugate {
        point = random_conjugate(ctx, &point, tag)?;
    }
    let t = tangent_to_cm(ctx, m, &point)?;
    let t_orbit = tangent_to_orbit(&point)?;
    let mut rep = InstanceReport {
        dimv: n.dimv.0.clone(),
        m: m.multiset.to_json(graph),
        n: n.multiset.to_json(graph),
        tangent_cm_dim: t.dim(),
        tangent_orbit_dim: t_orbit.dim(),
        random_vectors: 0,
        certified: 0,
        max_depth: 0,
        descent_nodes: 0,
        curve_leaves: 0,
        orbit_leaves: 0,
        finding: None,
        descent_trees: Vec::new(),
    };
    let mut rng = ctx.rng(tag ^ 0x5eed);
    let mut vectors: Vec<Cocycle> = t.basis().to_vec();
    if !t.basis().is_empty() {
        rep.random_vectors = opts.random_vectors;
        for _ in 0..opts.random_vectors {
            vectors.push(
                t.basis()
                    .iter()
                    .fold(Cocycle::zero(&point, &point), |acc, b| {
                        acc.add(&b.scale(ctx.field().random(&mut rng)))
                    }),
            );
        }
    }
    for z in &vectors {
        let cert = match certify_tangent(ctx, m, &point, z, &opts.budget) {
            Ok(c) => c,
            Err(f) => {
                rep.finding = Some(f);
                break;
            }
        };
        if opts.replay {
            if let Err(e) = cert.replay(ctx, m) {
                rep.finding = Some(e.into());
                break;
            }
        }
        rep.certified += 1;
        rep.max_depth = rep.max_depth.max(cert.root.depth());
        let d = cert.root.descent_nodes();
        rep.descent_nodes += d;
        rep.curve_leaves += cert.root.curve_leaves();
        rep.orbit_leaves += cert.root.orbit_leaves();
        if d > 0 && opts.keep_descent_trees {
            rep.descent_trees.push(cert.root.to_json(ctx));
        }
    }
    Ok(rep)
}

/// Certifies every basis vector of `T_N C_M` for every pair `N ≤_deg M` of
/// orbits in each dimension vector of `dims`.
pub fn verify_theorem(
    ctx: &RepContext,
    dims: &[DimVector],
    opts: &VerifyOptions,
) -> Result<Report> {
    let start = Instant::now();
    let cat = ctx.cat();
    let mut instances = Vec::new();
    let mut per_dim = Vec::new();
    for (di, d) in dims.iter().enumerate() {
        let t0 = Instant::now();
        let poset = DegenerationPoset::build(cat, d)?;
        let k = poset.len();
        let pairs: Vec<(usize, usize)> = (0..k)
            .flat_map(|mi| (0..k).map(move |ni| (mi, ni)))
            .filter(|&(mi, ni)| poset.leq[ni][mi])
            .collect();
        let reports = pairs
            .par_iter()
            .map(|&(mi, ni)| {
                let tag = ((di as u64) << 42) ^ ((mi as u64) << 21) ^ ni as u64;
                certify_instance(ctx, &poset.orbits[mi], &poset.orbits[ni], tag, opts)
            })
            .collect::<Result<Vec<_>>>()?;
        per_dim.push((d.0.clone(), t0.elapsed().as_millis()));
        instances.extend(reports);
    }
    Ok(assemble(
        ctx,
        dims.len(),
        instances,
        Timings {
            total_ms: start.elapsed().as_millis(),
            per_dimension_vector_ms: per_dim,
        },
    ))
}

/// Certifies `T_N C_M` for one pair of orbits with `N ≤_deg M`.
pub fn verify_pair(ctx: &RepContext, m: &Orbit, n: &Orbit, opts: &VerifyOptions) -> Result<Report> {
    let start = Instant::now();
    if !degenerates(ctx.cat(), m, n)? {
        return Err(Error::NotADegeneration);
    }
    let inst = certify_instance(ctx, m, n, 0, opts)?;
    let ms = start.elapsed().as_millis();
    Ok(assemble(
        ctx,
        1,
        vec![inst],
        Timings {
            total_ms: ms,
            per_dimension_vector_ms: vec![(n.dimv.0.clone(), ms)],
        },
    ))
}

fn assemble(
    ctx: &RepContext,
    dims: usize,
    instances: Vec<InstanceReport>,
    timings: Timings,
) -> Report {
    let mut summary = CertificateSummary {
        dimension_vectors: dims,
        ..Default::default()
    };
    let mut verdict = Verdict::Verified;
    for i in &instances {
        summary.instances += 1;
        summary.vectors += i.tangent_cm_dim + i.random_vectors;
        summary.certified += i.certified;
        summary.descent_nodes += i.descent_nodes;
        summary.instances_with_descent += usize::from(i.descent_nodes > 0);
        summary.curve_leaves += i.curve_leaves;
        summary.orbit_leaves += i.orbit_leaves;
        summary.max_depth = summary.max_depth.max(i.max_depth);
        match &i.finding {
            Some(Finding::BudgetExhausted { .. }) if verdict == Verdict::Verified => {
                verdict = Verdict::BudgetExhausted
            }
            Some(Finding::CounterexampleCandidate { .. } | Finding::InternalError { .. }) => {
                verdict = Verdict::CounterexampleCandidate
            }
            _ => {}
        }
    }
    Report {
        schema_version: crate::SCHEMA_VERSION,
        quiver: ctx.quiver().to_json(),
        characteristic: ctx.field().characteristic(),
        seed: ctx.seed(),
        experimental: ctx.cat().graph().ty() == DynkinType::E,
        verdict,
        summary,
        instances,
        timings: Some(timings),
    }
}
