use proptest::prelude::*;
use stlie_core::cyclic::{hc1_dim, kahler_hc1_char0};
use stlie_core::homology::{h2_dim, Uce};
use stlie_core::presets::{group_algebra, matrix_algebra, named_group, poly_quotient};
use stlie_core::ring::Algebra;
use stlie_core::sl::build_sl;
use stlie_core::steinberg::{lift_generators, offending_span, recenter};
use stlie_linalg::{Field, PrimeField, Rationals};

fn gf(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

/// Monic polynomial over `F_p` from low-order coefficients.
fn poly_ring(p: u64, low: &[i64]) -> Algebra<PrimeField> {
    let f = gf(p);
    let mut c: Vec<u32> = low.iter().map(|&v| f.from_i64(v)).collect();
    c.push(f.one());
    poly_quotient(f, &c).unwrap()
}

fn small_rings() -> impl Strategy<Value = Algebra<PrimeField>> {
    prop_oneof![
        (prop::sample::select(vec![2u64, 3, 5]), prop::collection::vec(-2i64..=2, 1..=3))
            .prop_map(|(p, low)| poly_ring(p, &low)),
        prop::sample::select(vec![2u64, 3]).prop_map(|p| matrix_algebra(gf(p), 2).unwrap()),
        prop::sample::select(vec![2u64, 3]).prop_map(|p| {
            let (labels, table) = named_group("S3").unwrap();
            group_algebra(gf(p), labels, &table).unwrap()
        }),
    ]
}

fn permutation(len: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..len).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn ideals_are_two_sided_and_quotients_commutative(r in small_rings()) {
        prop_assert_eq!(r.left_commutator_ideal(), r.right_commutator_ideal());
        for m in [2u64, 3] {
            let q = r.quotient_rm(m).unwrap();
            prop_assert!(q.is_commutative());
            prop_assert!(r.is_two_sided_ideal(q.ideal()));
            prop_assert!(r.commutator_subspace().is_subspace_of(q.ideal()));
            prop_assert_eq!(q.dim() + q.ideal().dim(), r.dim());
        }
    }

    #[test]
    fn invariants_survive_rebasing((r, perm) in small_rings().prop_flat_map(|r| {
        let k = r.dim() - 1;
        (Just(r), permutation(k))
    })) {
        let s = r.rebased(&perm).unwrap();
        prop_assert_eq!(hc1_dim(&r).unwrap(), hc1_dim(&s).unwrap());
        prop_assert_eq!(r.commutator_subspace().dim(), s.commutator_subspace().dim());
        for m in [2u64, 3] {
            prop_assert_eq!(r.quotient_rm(m).unwrap().dim(), s.quotient_rm(m).unwrap().dim());
        }
    }

    #[test]
    fn hc1_oracles_agree_over_the_rationals(low in prop::collection::vec(-3i64..=3, 1..=3)) {
        let mut c: Vec<_> = low.iter().map(|&v| Rationals.from_i64(v)).collect();
        c.push(Rationals.one());
        let r = poly_quotient(Rationals, &c).unwrap();
        prop_assert_eq!(kahler_hc1_char0(&r).unwrap(), hc1_dim(&r).unwrap());
    }

    #[test]
    fn uce_witness_holds_for_any_seed(seed in any::<u64>(), p in prop::sample::select(vec![2u64, 3, 5])) {
        let sl = build_sl(&poly_ring(p, &[0, 0]), 3).unwrap();
        let uce = Uce::new(sl.lie()).unwrap();
        prop_assert!(uce.well_definedness_witness(seed, 5).is_ok());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    /// Beyond the fixed suite: quadratic quotients of F_2[x] and F_3[x]
    /// (fields, products and dual numbers alike).
    #[test]
    fn second_homology_decomposes(
        p in prop::sample::select(vec![2u64, 3]),
        low in prop::collection::vec(0i64..3, 2..=2),
        n in 3usize..=5,
    ) {
        let r = poly_ring(p, &low);
        let sl = build_sl(&r, n).unwrap();
        let uce = Uce::new(sl.lie()).unwrap();
        let extra = match n {
            3 => 6 * r.quotient_rm(3).unwrap().dim(),
            4 => 6 * r.quotient_rm(2).unwrap().dim(),
            _ => 0,
        };
        let hc1 = hc1_dim(&r).unwrap();
        prop_assert_eq!(uce.h2_of_base(), extra + hc1);
        prop_assert_eq!(h2_dim(sl.lie()).unwrap(), extra + hc1);
        let lifts = recenter(&uce, &sl, &lift_generators(&uce, &sl).unwrap()).unwrap();
        prop_assert_eq!(offending_span(&uce, &lifts).unwrap().dim(), extra);
    }
}
