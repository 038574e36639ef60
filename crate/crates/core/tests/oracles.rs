mod common;

use dynkin_tangent::{DynkinQuiver, DynkinType, ZDelta};

#[test]
fn d6_defect_fixture() {
    common::criterion_1().unwrap();
}

#[test]
fn d6_fixture_has_three_twos() {
    let twos: Vec<_> = common::d6_expected()
        .into_iter()
        .filter(|&(_, v)| v == 2)
        .map(|(k, _)| k)
        .collect();
    assert_eq!(twos, vec![(7, "b0"), (8, "b1"), (9, "b0")]);
}

#[test]
fn root_and_constant_tables() {
    common::criterion_2().unwrap();
}

#[test]
fn a4_orientations_mesh_equals_matrix() {
    for q in DynkinQuiver::all_orientations(&common::graph(DynkinType::A, 4)) {
        common::mesh_matrix_agreement(q).unwrap();
    }
}

#[test]
fn d4_orientations_mesh_equals_matrix() {
    let qs = DynkinQuiver::all_orientations(&common::graph(DynkinType::D, 4));
    assert_eq!(qs.len(), 8);
    for q in qs {
        assert_eq!(common::mesh_matrix_agreement(q).unwrap(), 144);
    }
}

#[test]
fn d5_and_e6_mesh_equals_matrix() {
    let d5 =
        DynkinQuiver::parse_orientation(common::graph(DynkinType::D, 5), "b0>c',b1>b0").unwrap();
    assert_eq!(common::mesh_matrix_agreement(d5).unwrap(), 400);
    let e6 = DynkinQuiver::with_default_orientation(common::graph(DynkinType::E, 6));
    assert_eq!(common::mesh_matrix_agreement(e6).unwrap(), 36 * 36);
}

#[test]
fn gamma_window_has_one_vertex_per_positive_root() {
    for &(t, n) in &common::SHAPES {
        let g = common::graph(t, n);
        for q in DynkinQuiver::all_orientations(&g).into_iter().take(4) {
            let cat = dynkin_tangent::MeshCategory::new(q);
            let mut dims: Vec<_> = cat
                .gamma()
                .vertices()
                .iter()
                .map(|&v| cat.dimension_vector_of(v).unwrap())
                .collect();
            let mut roots = g.positive_roots();
            dims.sort();
            roots.sort();
            assert_eq!(dims, roots, "{}", g.name());
        }
    }
}

#[test]
fn zdelta_functors_compose() {
    for z in common::zdeltas() {
        let v = common::snap(z, 1, 0);
        assert_eq!(z.nu_inv(z.nu(v)), v);
        let tau_inv = z.vertex(v.p + 2, v.a).unwrap();
        assert_eq!(z.tau(tau_inv), v);
        assert_eq!(z.shift(v, 1), z.nu(tau_inv), "{}", z.graph().name());
        assert_eq!(z.hom_dim(v, v), 1);
    }
}

#[test]
fn hom_dims_are_translation_invariant() {
    let z = ZDelta::new(common::graph(DynkinType::E, 7));
    let (a, b) = (common::snap(&z, 0, 2), common::snap(&z, 5, 4));
    assert_eq!(z.hom_dim(a, b), z.hom_dim(z.tau(a), z.tau(b)));
}
