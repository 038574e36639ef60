mod common;

use proptest::prelude::*;

const K: usize = common::SHAPES.len();

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn serre_symmetry(i in 0..K, p in -30i64..30, a in 0usize..8, q in -30i64..30, b in 0usize..8) {
        let z = &common::zdeltas()[i];
        common::check_serre(z, common::snap(z, p, a), common::snap(z, q, b)).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn window_bound(i in 0..K, a in 0usize..8, q in -6i64..34, b in 0usize..8) {
        let z = &common::zdeltas()[i];
        common::check_window(z, common::snap(z, 0, a), common::snap(z, q, b)).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn hom_cap(i in 0..K, a in 0usize..8, q in -6i64..34, b in 0usize..8) {
        let z = &common::zdeltas()[i];
        common::check_cap(z, common::snap(z, 0, a), common::snap(z, q, b)).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn sectional_paths_have_hom_one(i in 0..K, p in -10i64..10, a in 0usize..8, ch in proptest::collection::vec(0usize..3, 0..8)) {
        let z = &common::zdeltas()[i];
        common::check_sectional_hom(z, common::snap(z, p, a), &ch).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn multiplicities_from_pairings(i in 0..K, picks in proptest::collection::vec(0usize..200, 1..7)) {
        common::check_multiplicities(&common::categories()[i], &picks).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn sectional_defect_identity(
        i in 0..6usize,
        picks in proptest::collection::vec(0usize..200, 1..4),
        op in (0usize..64, 0usize..64),
        start in 0usize..200,
        ch in proptest::collection::vec(0usize..3, 0..6),
    ) {
        common::check_sectional_sum(&common::categories()[i], &picks, op, start, &ch).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn phi_is_an_involution_fixing_hom_profiles(i in 0..K, a in 0usize..8, q in -6i64..34, b in 0usize..8) {
        let z = &common::zdeltas()[i];
        let phi = z.graph().phi();
        let (x, y) = (common::snap(z, 0, a), common::snap(z, q, b));
        prop_assert_eq!(phi[phi[x.a]], x.a);
        prop_assert_eq!(z.hom_dim(x, y), z.hom_dim(z.shift(x, 1), z.shift(y, 1)));
    }
}

#[test]
fn invariant_criterion() {
    common::criterion_4(200).unwrap();
}
