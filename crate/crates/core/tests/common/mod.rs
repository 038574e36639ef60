//! Checks shared by the acceptance harness and the topic test files. Each
//! check returns `Ok(detail)` or `Err(reason)`.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use dynkin_tangent::degeneration::{degenerates, delta_sigma, enumerate_orbits};
use dynkin_tangent::mesh::coords::cone_meshes;
use dynkin_tangent::reps::{
    coboundary_space, cocycle_space_dim, hom_dim, hom_space, middle_term, Coboundaries,
};
use dynkin_tangent::tangent::{
    dimension_vectors_up_to, orbit_of, random_conjugate, tangent_condition_direct, tangent_to_cm,
    verify_theorem, Report, Verdict, VerifyOptions,
};
use dynkin_tangent::{
    Cocycle, DegenerationPoset, DimVector, DynkinGraph, DynkinQuiver, DynkinType, MatrixRep, Mesh,
    MeshCategory, MeshFunction, Morphism, ObjectMultiset, Orbit, PrimeField, RepContext, ZDelta,
    ZVertex,
};

pub type Outcome = Result<String, String>;

pub fn graph(ty: DynkinType, n: usize) -> DynkinGraph {
    DynkinGraph::build(ty, n).expect("valid Dynkin graph")
}

pub fn ctx(ty: DynkinType, n: usize, seed: u64) -> RepContext {
    RepContext::for_quiver(
        DynkinQuiver::with_default_orientation(graph(ty, n)),
        PrimeField::default(),
        seed,
    )
}

pub fn ctx_for(q: DynkinQuiver, seed: u64) -> RepContext {
    RepContext::for_quiver(q, PrimeField::default(), seed)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: dynkin_tangent::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// Graphs used by the property checks.
pub const SHAPES: [(DynkinType, usize); 13] = [
    (DynkinType::A, 3),
    (DynkinType::A, 4),
    (DynkinType::A, 5),
    (DynkinType::A, 7),
    (DynkinType::D, 4),
    (DynkinType::D, 5),
    (DynkinType::D, 6),
    (DynkinType::D, 7),
    (DynkinType::D, 8),
    (DynkinType::E, 6),
    (DynkinType::E, 7),
    (DynkinType::E, 8),
    (DynkinType::A, 1),
];

pub fn zdeltas() -> &'static [ZDelta] {
    static Z: OnceLock<Vec<ZDelta>> = OnceLock::new();
    Z.get_or_init(|| {
        SHAPES
            .iter()
            .map(|&(t, n)| ZDelta::new(graph(t, n)))
            .collect()
    })
}

pub fn categories() -> &'static [MeshCategory] {
    static C: OnceLock<Vec<MeshCategory>> = OnceLock::new();
    C.get_or_init(|| {
        SHAPES
            .iter()
            .map(|&(t, n)| MeshCategory::new(DynkinQuiver::with_default_orientation(graph(t, n))))
            .collect()
    })
}

/// The vertex at `(p, a)` or, off parity, at `(p + 1, a)`.
pub fn snap(z: &ZDelta, p: i64, a: usize) -> ZVertex {
    let a = a % z.graph().rank();
    let p = if z.is_vertex_position(p, a) { p } else { p + 1 };
    z.vertex(p, a).expect("vertex on parity class")
}

/// A sectional path from `start`, steering by `choices` until they run out
/// or the walk reaches a leaf.
pub fn sectional_walk(z: &ZDelta, start: ZVertex, choices: &[usize]) -> Vec<ZVertex> {
    let g = z.graph();
    let mut path = vec![start];
    for &c in choices {
        let cur = *path.last().expect("nonempty");
        let prev = (path.len() > 1).then(|| path[path.len() - 2].a);
        let options: Vec<usize> = g
            .neighbors(cur.a)
            .iter()
            .copied()
            .filter(|&b| Some(b) != prev)
            .collect();
        if options.is_empty() {
            break;
        }
        path.push(ZVertex {
            p: cur.p + 1,
            a: options[c % options.len()],
        });
    }
    path
}

// Criterion 1

/// `δ_σ(m_{q,b}) = [v_{3,b1}, v_{q-1,b}]` on D6, nonzero entries by label.
pub fn d6_expected() -> BTreeMap<(i64, &'static str), i64> {
    let mut e = BTreeMap::new();
    for q in [6, 8, 10] {
        e.insert((q, "c'"), 1);
        e.insert((q, "c''"), 1);
    }
    for (q, v) in [(5, 1), (7, 2), (9, 2), (11, 1)] {
        e.insert((q, "b0"), v);
    }
    for (q, v) in [(4, 1), (6, 1), (8, 2), (10, 1), (12, 1)] {
        e.insert((q, "b1"), v);
    }
    for q in [5, 7, 9, 11] {
        e.insert((q, "b2"), 1);
    }
    for q in [6, 10] {
        e.insert((q, "c"), 1);
    }
    e
}

pub fn criterion_1() -> Outcome {
    let z = ZDelta::new(graph(DynkinType::D, 6));
    ensure(z.n_delta() == 10, || format!("n_delta {}", z.n_delta()))?;
    let g = z.graph();
    let a = lib(z.vertex_by_label(3, "b1"))?;
    let a1 = z.shift(a, 1);
    ensure(a1 == lib(z.vertex_by_label(13, "b1"))?, || {
        format!("A[1] = {a1}")
    })?;
    let expected = d6_expected();
    let mut nonzero = 0;
    for q in -10..=26 {
        for b in 0..g.rank() {
            if !z.is_vertex_position(q - 1, b) {
                continue;
            }
            let left = z.hom_dim(a, lib(z.vertex(q - 1, b))?);
            let right = z.hom_dim(lib(z.vertex(q + 1, b))?, a1);
            let want = expected.get(&(q, g.label(b))).copied().unwrap_or(0);
            ensure(left == want && right == want, || {
                format!(
                    "m({q},{}): [A,v_(q-1)] = {left}, [v_(q+1),A[1]] = {right}, expected {want}",
                    g.label(b)
                )
            })?;
            nonzero += usize::from(want != 0);
        }
    }
    ensure(nonzero == expected.len(), || {
        format!("{nonzero} of {} expected meshes visited", expected.len())
    })?;
    Ok(format!(
        "{nonzero} nonzero entries, three of value 2, zero elsewhere"
    ))
}

// Criterion 2

pub fn criterion_2() -> Outcome {
    let n_delta = [
        (DynkinType::A, 3, 4),
        (DynkinType::A, 4, 5),
        (DynkinType::D, 4, 6),
        (DynkinType::D, 5, 8),
        (DynkinType::D, 6, 10),
        (DynkinType::E, 6, 12),
        (DynkinType::E, 7, 18),
        (DynkinType::E, 8, 30),
    ];
    for (t, n, want) in n_delta {
        let g = graph(t, n);
        ensure(g.delta_number() == want, || {
            format!("{}: n_delta {}", g.name(), g.delta_number())
        })?;
    }
    let counts = [
        (DynkinType::A, 3, 6),
        (DynkinType::D, 4, 12),
        (DynkinType::D, 5, 20),
        (DynkinType::E, 6, 36),
        (DynkinType::E, 7, 63),
        (DynkinType::E, 8, 120),
    ];
    for (t, n, want) in counts {
        let g = graph(t, n);
        let got = g.positive_roots().len() as i64;
        ensure(
            got == want && got == n as i64 * g.delta_number() / 2,
            || format!("{}: {got} roots", g.name()),
        )?;
    }
    let maximal = [
        (DynkinType::A, 4, vec![1, 1, 1, 1]),
        (DynkinType::D, 4, vec![1, 1, 2, 1]),
        (DynkinType::D, 5, vec![1, 1, 2, 2, 1]),
        (DynkinType::D, 6, vec![1, 1, 2, 2, 2, 1]),
        (DynkinType::E, 6, vec![1, 2, 3, 2, 2, 1]),
        (DynkinType::E, 7, vec![2, 3, 4, 2, 3, 2, 1]),
        (DynkinType::E, 8, vec![2, 4, 6, 3, 5, 4, 3, 2]),
    ];
    for (t, n, want) in maximal {
        let g = graph(t, n);
        let h = g.maximal_root();
        ensure(h.0 == want, || format!("{}: maximal root {h}", g.name()))?;
        let roots = g.positive_roots();
        ensure(roots.contains(&h) && roots.iter().all(|r| r.le(&h)), || {
            format!("{}: maximal root does not dominate all roots", g.name())
        })?;
    }
    Ok("n_delta, root counts and maximal roots match for A, D, E".into())
}

// Criterion 3

pub fn mesh_matrix_agreement(q: DynkinQuiver) -> Result<usize, String> {
    let c = ctx_for(q, 3);
    let vs = c.cat().gamma().vertices().to_vec();
    let reps: Vec<Arc<MatrixRep>> = vs
        .iter()
        .map(|&v| c.realize(v))
        .collect::<dynkin_tangent::Result<_>>()
        .map_err(|e| e.to_string())?;
    for (i, &v) in vs.iter().enumerate() {
        for (j, &w) in vs.iter().enumerate() {
            let mesh = c.cat().hom_dim(v, w);
            let matrix = lib(hom_dim(&reps[i], &reps[j]))? as i64;
            ensure(mesh == matrix, || {
                format!(
                    "{} {}: [{v},{w}] mesh {mesh}, matrix {matrix}",
                    c.cat().graph().name(),
                    c.quiver().orientation_string()
                )
            })?;
        }
    }
    Ok(vs.len() * vs.len())
}

pub fn criterion_3() -> Outcome {
    let mut quivers = DynkinQuiver::all_orientations(&graph(DynkinType::A, 4));
    quivers.extend(DynkinQuiver::all_orientations(&graph(DynkinType::D, 4)));
    quivers.push(lib(DynkinQuiver::parse_orientation(
        graph(DynkinType::D, 5),
        "b0>c',b1>b0",
    ))?);
    let n = quivers.len();
    let mut pairs = 0;
    for q in quivers {
        pairs += mesh_matrix_agreement(q)?;
    }
    Ok(format!(
        "{n} quivers, {pairs} ordered pairs agree at p = {}",
        PrimeField::default().characteristic()
    ))
}

// Criterion 4

pub fn check_serre(z: &ZDelta, x: ZVertex, y: ZVertex) -> Result<(), String> {
    let g = z.graph();
    let nu = z.nu(x);
    let phi = g.phi();
    ensure(nu.p == x.p + z.n_delta() - 2 && nu.a == phi[x.a], || {
        format!("{}: nu {x} = {nu}", g.name())
    })?;
    let (l, r) = (z.hom_dim(x, y), z.hom_dim(y, nu));
    ensure(l == r, || {
        format!("{}: [{x},{y}] = {l} but [{y},nu {x}] = {r}", g.name())
    })
}

pub fn check_window(z: &ZDelta, x: ZVertex, y: ZVertex) -> Result<(), String> {
    let g = z.graph();
    if z.hom_dim(x, y) == 0 {
        return Ok(());
    }
    let lo = x.p + g.distance(x.a, y.a) as i64;
    let hi = x.p + z.n_delta() - 2 - g.distance(y.a, g.phi()[x.a]) as i64;
    ensure(lo <= y.p && y.p <= hi, || {
        format!("{}: [{x},{y}] > 0 outside window [{lo},{hi}]", g.name())
    })
}

pub fn check_cap(z: &ZDelta, x: ZVertex, y: ZVertex) -> Result<(), String> {
    let g = z.graph();
    let h = g.maximal_root();
    let d = z.hom_dim(x, y);
    ensure(d <= h.0[x.a].min(h.0[y.a]), || {
        format!("{}: [{x},{y}] = {d} exceeds the maximal root", g.name())
    })?;
    if g.ty() == DynkinType::D {
        let cap = if g.is_branch_end(x.a) || g.is_branch_end(y.a) {
            1
        } else {
            2
        };
        ensure(d <= cap, || {
            format!("{}: [{x},{y}] = {d} exceeds {cap}", g.name())
        })?;
    }
    Ok(())
}

pub fn check_sectional_hom(z: &ZDelta, start: ZVertex, choices: &[usize]) -> Result<(), String> {
    let path = sectional_walk(z, start, choices);
    for &v in &path {
        let d = z.hom_dim(start, v);
        ensure(d == 1, || {
            format!("{}: sectional [{start},{v}] = {d}", z.graph().name())
        })?;
    }
    Ok(())
}

pub fn multiset_from(cat: &MeshCategory, picks: &[usize]) -> ObjectMultiset {
    let vs = cat.gamma().vertices();
    picks.iter().map(|&i| vs[i % vs.len()]).collect()
}

pub fn check_multiplicities(cat: &MeshCategory, picks: &[usize]) -> Result<(), String> {
    let m = multiset_from(cat, picks);
    for &v in cat.gamma().vertices() {
        let (l, r, want) = (
            cat.multiplicity(&m, v),
            cat.multiplicity_right(&m, v),
            m.get(v) as i64,
        );
        ensure(l == want && r == want, || {
            format!(
                "{}: mult {v} = {l}/{r}, expected {want}",
                cat.graph().name()
            )
        })?;
    }
    Ok(())
}

/// Compares two orbits of the dimension vector of a random module along a
/// random sectional path.
pub fn check_sectional_sum(
    cat: &MeshCategory,
    picks: &[usize],
    orbit_picks: (usize, usize),
    start: usize,
    choices: &[usize],
) -> Result<(), String> {
    let d = cat.multiset_dimv(&multiset_from(cat, picks));
    let orbits = lib(enumerate_orbits(cat, &d))?;
    let m = &orbits[orbit_picks.0 % orbits.len()].multiset;
    let n = &orbits[orbit_picks.1 % orbits.len()].multiset;
    let vs = cat.gamma().vertices();
    let path = sectional_walk(cat.zdelta(), vs[start % vs.len()], choices);
    let (lhs, rhs) = lib(cat.sectional_delta_identity(m, n, &path))?;
    ensure(lhs == rhs, || {
        format!(
            "{}: sectional identity {lhs} != {rhs} on {d}",
            cat.graph().name()
        )
    })
}

pub fn criterion_4(cases: u32) -> Outcome {
    use proptest::prelude::*;
    use proptest::test_runner::{Config, TestRunner};

    let zs = zdeltas();
    let cats = categories();
    let k = zs.len();
    let run =
        |name: &str, f: &dyn Fn(&mut TestRunner) -> Result<(), String>| -> Result<(), String> {
            let mut runner = TestRunner::new(Config {
                cases,
                failure_persistence: None,
                ..Config::default()
            });
            f(&mut runner).map_err(|e| format!("{name}: {e}"))
        };
    let pair = (0..k, -30i64..30, 0usize..8, -30i64..30, 0usize..8);
    run("serre", &|r| {
        r.run(&pair, |(i, p, a, q, b)| {
            let z = &zs[i];
            check_serre(z, snap(z, p, a), snap(z, q, b)).map_err(TestCaseError::fail)
        })
        .map_err(|e| e.to_string())
    })?;
    run("window", &|r| {
        r.run(&(0..k, 0usize..8, -6i64..34, 0usize..8), |(i, a, q, b)| {
            let z = &zs[i];
            check_window(z, snap(z, 0, a), snap(z, q, b)).map_err(TestCaseError::fail)
        })
        .map_err(|e| e.to_string())
    })?;
    run("cap", &|r| {
        r.run(&(0..k, 0usize..8, -6i64..34, 0usize..8), |(i, a, q, b)| {
            let z = &zs[i];
            check_cap(z, snap(z, 0, a), snap(z, q, b)).map_err(TestCaseError::fail)
        })
        .map_err(|e| e.to_string())
    })?;
    run("sectional", &|r| {
        r.run(
            &(
                0..k,
                -10i64..10,
                0usize..8,
                proptest::collection::vec(0usize..3, 0..8),
            ),
            |(i, p, a, ch)| {
                let z = &zs[i];
                check_sectional_hom(z, snap(z, p, a), &ch).map_err(TestCaseError::fail)
            },
        )
        .map_err(|e| e.to_string())
    })?;
    run("multiplicity", &|r| {
        r.run(
            &(0..k, proptest::collection::vec(0usize..200, 1..7)),
            |(i, picks)| check_multiplicities(&cats[i], &picks).map_err(TestCaseError::fail),
        )
        .map_err(|e| e.to_string())
    })?;
    run("sectional sum", &|r| {
        r.run(
            &(
                0..6usize,
                proptest::collection::vec(0usize..200, 1..4),
                (0usize..64, 0usize..64),
                0usize..200,
                proptest::collection::vec(0usize..3, 0..6),
            ),
            |(i, picks, op, start, ch)| {
                check_sectional_sum(&cats[i], &picks, op, start, &ch).map_err(TestCaseError::fail)
            },
        )
        .map_err(|e| e.to_string())
    })?;
    Ok(format!("6 properties, {cases} cases each"))
}

// Criterion 5

pub fn random_module(c: &RepContext, rng: &mut ChaCha8Rng, max_summands: usize) -> ObjectMultiset {
    let vs = c.cat().gamma().vertices();
    let k = rng.gen_range(1..=max_summands);
    (0..k).map(|_| vs[rng.gen_range(0..vs.len())]).collect()
}

pub fn check_voigt(c: &RepContext, n: &MatrixRep) -> Result<(), String> {
    let z1 = cocycle_space_dim(n, n) as i64;
    let b1 = lib(Coboundaries::new(n, n))?.dim() as i64;
    let end = lib(hom_dim(n, n))? as i64;
    let d = n.dimv();
    let euler = lib(c.quiver().euler_form(&d, &d))?;
    ensure(z1 - b1 == end - euler, || {
        format!("{d}: {z1} - {b1} != {end} - {euler}")
    })
}

pub fn criterion_5(per_type: usize) -> Outcome {
    let mut total = 0;
    for (t, n) in [(DynkinType::D, 4), (DynkinType::A, 4)] {
        let c = ctx(t, n, 5);
        let mut rng = c.rng(55);
        for i in 0..per_type {
            let m = random_module(&c, &mut rng, 5);
            let point = lib(random_conjugate(&c, &lib(c.realize_sum(&m))?, i as u64))?;
            check_voigt(&c, &point)?;
            total += 1;
        }
    }
    Ok(format!("{total} random representations over D4 and A4"))
}

// Criterion 6

pub fn random_cocycle(
    c: &RepContext,
    v: &MatrixRep,
    u: &MatrixRep,
    rng: &mut ChaCha8Rng,
) -> Cocycle {
    let coords: Vec<u32> = (0..cocycle_space_dim(v, u))
        .map(|_| c.field().random(rng))
        .collect();
    Cocycle::from_vec(v, u, &coords)
}

pub fn random_coboundary(
    c: &RepContext,
    v: &MatrixRep,
    u: &MatrixRep,
    rng: &mut ChaCha8Rng,
) -> Result<Cocycle, String> {
    let basis = lib(coboundary_space(v, u))?;
    Ok(basis.iter().fold(Cocycle::zero(v, u), |acc, b| {
        acc.add(&b.scale(c.field().random(rng)))
    }))
}

pub fn random_morphism(
    c: &RepContext,
    from: &MatrixRep,
    to: &MatrixRep,
    rng: &mut ChaCha8Rng,
) -> Result<Morphism, String> {
    let basis = lib(hom_space(from, to))?;
    Ok(basis.iter().fold(Morphism::zero(from, to), |acc, h| {
        acc.add(&h.scale(c.field().random(rng)))
    }))
}

/// `δ_σ = 0` exactly for coboundaries.
pub fn check_zero_iff_coboundary(
    c: &RepContext,
    rng: &mut ChaCha8Rng,
    boundary: bool,
) -> Result<bool, String> {
    let u = lib(c.realize_sum(&random_module(c, rng, 3)))?;
    let v = lib(c.realize_sum(&random_module(c, rng, 3)))?;
    let z = if boundary {
        random_coboundary(c, &v, &u, rng)?
    } else {
        random_cocycle(c, &v, &u, rng)
    };
    let split = lib(Coboundaries::new(&v, &u))?.contains(&z);
    let ds = lib(delta_sigma(c, &u, &z, &v))?;
    ensure(ds.is_nonnegative(), || "negative defect".into())?;
    ensure(ds.is_zero() == split, || {
        format!("delta zero {} but coboundary {split}", ds.is_zero())
    })?;
    Ok(split)
}

/// `δ_{σh} ≤ δ_σ` for the pullback along `h: X → V`.
pub fn check_pullback_monotone(c: &RepContext, rng: &mut ChaCha8Rng) -> Result<(), String> {
    let u = lib(c.realize_sum(&random_module(c, rng, 3)))?;
    let v = lib(c.realize_sum(&random_module(c, rng, 3)))?;
    let x = lib(c.realize_sum(&random_module(c, rng, 3)))?;
    let z = random_cocycle(c, &v, &u, rng);
    let h = random_morphism(c, &x, &v, rng)?;
    let pulled = z.pullback(c.quiver(), &h);
    let (big, small) = (
        lib(delta_sigma(c, &u, &z, &v))?,
        lib(delta_sigma(c, &u, &pulled, &x))?,
    );
    ensure(small.le(&big), || "pullback increased the defect".into())
}

/// Each AR sequence ending in a non-projective `X ∈ Γ_Q` has defect equal to
/// the indicator of the mesh ending at `X`.
pub fn check_ar_indicator(c: &RepContext) -> Result<usize, String> {
    let cat = c.cat();
    let mut rng = c.rng(66);
    let mut seen = 0;
    for &xv in cat.gamma().vertices() {
        let tv = cat.zdelta().tau(xv);
        if !cat.gamma().contains(tv) {
            continue;
        }
        let (x, t) = (lib(c.realize(xv))?, lib(c.realize(tv))?);
        let z = random_cocycle(c, &x, &t, &mut rng);
        ensure(!lib(Coboundaries::new(&x, &t))?.contains(&z), || {
            format!("Ext({xv}, tau {xv}) vanishes")
        })?;
        let ds = lib(delta_sigma(c, &t, &z, &x))?;
        let mesh = Mesh::new(xv.p - 1, xv.a);
        let mut want = MeshFunction::new();
        want.set(mesh, 1);
        ensure(ds.sub(&want).is_zero(), || {
            format!(
                "{}: AR defect at {xv} is not an indicator",
                cat.graph().name()
            )
        })?;
        seen += 1;
    }
    Ok(seen)
}

/// On every sequence `0 → U → W → V → 0` of indecomposables whose defect
/// takes the value 2 at `m0`, the defect equals `h_a` on the cone
/// `φ ≥ φ(m0)`, `ψ ≤ ψ(m0)` inside `Γ_Q`.
pub fn check_cones(c: &RepContext) -> Result<(usize, usize), String> {
    let cat = c.cat();
    let h = cat.graph().maximal_root();
    let vs = cat.gamma().vertices().to_vec();
    let (lo, hi) = (
        vs.iter().map(|v| v.p).min().unwrap_or(0),
        vs.iter().map(|v| v.p).max().unwrap_or(0),
    );
    let mut rng = c.rng(77);
    let (mut sequences, mut cones) = (0, 0);
    for &uv in &vs {
        for &vv in &vs {
            let (u, v) = (lib(c.realize(uv))?, lib(c.realize(vv))?);
            if cocycle_space_dim(&v, &u) == 0 {
                continue;
            }
            let z = random_cocycle(c, &v, &u, &mut rng);
            let ds = lib(delta_sigma(c, &u, &z, &v))?;
            let twos: Vec<Mesh> = ds.iter().filter(|&(_, x)| x == 2).map(|(m, _)| m).collect();
            if twos.is_empty() {
                continue;
            }
            sequences += 1;
            for m0 in twos {
                for m in lib(cone_meshes(cat.zdelta(), m0, lo, hi))? {
                    if !cat.gamma().contains_mesh(m) {
                        continue;
                    }
                    ensure(ds.get(m) == h.0[m.a], || {
                        format!(
                            "{}: {uv} -> {vv}, value 2 at ({},{}) but {} at ({},{})",
                            cat.graph().name(),
                            m0.p,
                            m0.a,
                            ds.get(m),
                            m.p,
                            m.a
                        )
                    })?;
                }
                cones += 1;
            }
        }
    }
    Ok((sequences, cones))
}

pub fn criterion_6(samples: usize) -> Outcome {
    let mut splits = 0;
    let mut ar = 0;
    for (t, n) in [(DynkinType::A, 4), (DynkinType::D, 4), (DynkinType::D, 5)] {
        let c = ctx(t, n, 6);
        let mut rng = c.rng(61);
        for i in 0..samples {
            splits += usize::from(check_zero_iff_coboundary(&c, &mut rng, i % 2 == 0)?);
            check_pullback_monotone(&c, &mut rng)?;
        }
    }
    for (t, n) in [
        (DynkinType::A, 4),
        (DynkinType::D, 4),
        (DynkinType::D, 5),
        (DynkinType::D, 6),
        (DynkinType::E, 6),
    ] {
        ar += check_ar_indicator(&ctx(t, n, 6))?;
    }
    for q in DynkinQuiver::all_orientations(&graph(DynkinType::D, 4)) {
        ar += check_ar_indicator(&ctx_for(q, 6))?;
    }
    let mut sequences = 0;
    let mut cones = 0;
    for (t, n) in [(DynkinType::D, 5), (DynkinType::D, 6)] {
        let (s, k) = check_cones(&ctx(t, n, 6))?;
        sequences += s;
        cones += k;
    }
    ensure(sequences > 0, || {
        "no D5/D6 sequence reached the value 2".into()
    })?;
    ensure(splits < 3 * samples, || {
        "every sampled sequence split".into()
    })?;
    Ok(format!(
        "{} split/non-split samples ({splits} split), {ar} AR sequences, {sequences} D5/D6 sequences with a 2 ({cones} cones)",
        3 * samples
    ))
}

// Criterion 7

pub fn check_posets(t: DynkinType, n: usize, max_total: i64) -> Result<(usize, usize), String> {
    let cat = MeshCategory::new(DynkinQuiver::with_default_orientation(graph(t, n)));
    let mut orbits = 0;
    let dims = dimension_vectors_up_to(n, max_total, Some(max_total));
    for d in &dims {
        let poset = lib(DegenerationPoset::build(&cat, d))?;
        lib(poset.validate())?;
        for i in 0..poset.len() {
            for j in 0..poset.len() {
                ensure(i == j || !(poset.leq[i][j] && poset.leq[j][i]), || {
                    format!("{d}: order not antisymmetric")
                })?;
            }
        }
        let top = poset.maximal();
        ensure(top.len() == 1, || {
            format!("{d}: {} maximal orbits", top.len())
        })?;
        ensure(poset.orbits[top[0]].codimension(&cat) == 0, || {
            format!("{d}: top orbit not open")
        })?;
        ensure((0..poset.len()).all(|i| poset.leq[i][top[0]]), || {
            format!("{d}: top is not above everything")
        })?;
        orbits += poset.len();
    }
    Ok((dims.len(), orbits))
}

/// `U ⊕ V` lies in the orbit closure of every middle term `W(U, Z, V)`.
pub fn check_middle_terms(samples: usize) -> Result<usize, String> {
    let shapes = [(DynkinType::A, 3), (DynkinType::A, 4), (DynkinType::D, 4)];
    for i in 0..samples {
        let (t, n) = shapes[i % shapes.len()];
        let c = ctx(t, n, 7);
        let mut rng = c.rng(700 + i as u64);
        let (um, vm) = (
            random_module(&c, &mut rng, 3),
            random_module(&c, &mut rng, 3),
        );
        let (u, v) = (lib(c.realize_sum(&um))?, lib(c.realize_sum(&vm))?);
        let z = random_cocycle(&c, &v, &u, &mut rng);
        let w = lib(middle_term(&u, &z, &v))?;
        let ow = lib(orbit_of(&c, &w))?;
        let split = Orbit::new(c.cat(), um.sum(&vm));
        ensure(lib(degenerates(c.cat(), &ow, &split))?, || {
            format!(
                "{}: U + V is not a degeneration of W",
                c.cat().graph().name()
            )
        })?;
    }
    Ok(samples)
}

pub fn criterion_7(max_total: i64, samples: usize) -> Outcome {
    let mut dims = 0;
    let mut orbits = 0;
    for (t, n) in [(DynkinType::A, 3), (DynkinType::A, 4), (DynkinType::D, 4)] {
        let (d, o) = check_posets(t, n, max_total)?;
        dims += d;
        orbits += o;
    }
    check_middle_terms(samples)?;
    Ok(format!(
        "{dims} dimension vectors, {orbits} orbits, {samples} middle terms"
    ))
}

// Criterion 8

#[derive(Default)]
pub struct TangentAgreement {
    pub pairs: usize,
    pub accepted: usize,
    pub rejected: usize,
}

pub fn check_tangent_agreement(
    c: &RepContext,
    d: &DimVector,
    extra: usize,
    out: &mut TangentAgreement,
) -> Result<(), String> {
    let poset = lib(DegenerationPoset::build(c.cat(), d))?;
    for (mi, m) in poset.orbits.iter().enumerate() {
        for (ni, n) in poset.orbits.iter().enumerate() {
            if !poset.leq[ni][mi] {
                continue;
            }
            let tag = ((mi as u64) << 20) ^ ni as u64;
            let point = lib(random_conjugate(c, &lib(c.realize_sum(&n.multiset))?, tag))?;
            let t = lib(tangent_to_cm(c, m, &point))?;
            let mut rng = c.rng(tag ^ 0x88);
            let mut vectors: Vec<Cocycle> = t.basis().to_vec();
            for i in 0..extra {
                if i % 2 == 0 {
                    vectors.push(random_cocycle(c, &point, &point, &mut rng));
                } else {
                    vectors.push(
                        t.basis()
                            .iter()
                            .fold(Cocycle::zero(&point, &point), |acc, b| {
                                acc.add(&b.scale(c.field().random(&mut rng)))
                            }),
                    );
                }
            }
            for z in &vectors {
                let direct = lib(tangent_condition_direct(c, m, &point, z))?;
                ensure(direct == t.contains(z), || {
                    format!("{d}: kernel and direct test disagree ({direct})")
                })?;
                if direct {
                    out.accepted += 1;
                } else {
                    out.rejected += 1;
                }
            }
            out.pairs += 1;
        }
    }
    Ok(())
}

pub fn criterion_8(max_total: i64, extra: usize) -> Outcome {
    let c = ctx(DynkinType::D, 4, 8);
    let mut agg = TangentAgreement::default();
    for d in dimension_vectors_up_to(4, max_total, Some(max_total)) {
        check_tangent_agreement(&c, &d, extra, &mut agg)?;
    }
    ensure(agg.rejected > 0, || {
        "no vector outside T_N C_M was tested".into()
    })?;
    Ok(format!(
        "{} pairs, {} vectors accepted, {} rejected, left and right tests agree",
        agg.pairs, agg.accepted, agg.rejected
    ))
}

// Criteria 9 and 10

pub fn summarize(r: &Report) -> String {
    let s = &r.summary;
    format!(
        "{} dimension vectors, {} pairs, {}/{} vectors certified, {} descent nodes, max depth {}",
        s.dimension_vectors, s.instances, s.certified, s.vectors, s.descent_nodes, s.max_depth
    )
}

pub fn criterion_9() -> Outcome {
    let d4 = ctx(DynkinType::D, 4, 9);
    let r4 = lib(verify_theorem(
        &d4,
        &dimension_vectors_up_to(4, 2, None),
        &VerifyOptions::default(),
    ))?;
    let d5 = ctx(DynkinType::D, 5, 9);
    let r5 = lib(verify_theorem(
        &d5,
        &[d5.cat().graph().maximal_root()],
        &VerifyOptions::default(),
    ))?;
    let detail = format!(
        "D4: {}; D5 maximal root: {}",
        summarize(&r4),
        summarize(&r5)
    );
    for r in [&r4, &r5] {
        ensure(r.verdict == Verdict::Verified, || {
            format!("verdict {:?}; {detail}", r.verdict)
        })?;
        ensure(r.summary.certified == r.summary.vectors, || {
            format!("uncertified vectors; {detail}")
        })?;
    }
    let descents = r4.summary.descent_nodes + r5.summary.descent_nodes;
    ensure(descents > 0, || {
        format!("no certificate contains a descent node; {detail}")
    })?;
    Ok(detail)
}

pub fn criterion_10(max_coord: i64, random_vectors: usize) -> Outcome {
    let opts = VerifyOptions {
        random_vectors,
        ..VerifyOptions::default()
    };
    let mut parts = Vec::new();
    for n in [3, 4] {
        let c = ctx(DynkinType::A, n, 10);
        let r = lib(verify_theorem(
            &c,
            &dimension_vectors_up_to(n, max_coord, None),
            &opts,
        ))?;
        ensure(r.verdict == Verdict::Verified, || {
            format!("A{n}: verdict {:?}", r.verdict)
        })?;
        ensure(r.summary.descent_nodes == 0, || {
            format!("A{n}: {} descent nodes", r.summary.descent_nodes)
        })?;
        ensure(r.summary.max_depth <= 1, || {
            format!("A{n}: depth {}", r.summary.max_depth)
        })?;
        parts.push(format!("A{n}: {}", summarize(&r)));
    }
    Ok(parts.join("; "))
}
