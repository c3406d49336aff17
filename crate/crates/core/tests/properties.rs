//! Property tests for the invariants that hold across whole input families.

use std::collections::BTreeMap;

use proptest::prelude::*;

use flagbundle_core::bundles::BundleVector;
use flagbundle_core::kt_cyt::{astheno_locus, astheno_residual};
use flagbundle_core::parabolic::ParabolicDatum;
use flagbundle_core::rootsystem::{positive_roots, LieType, Rational, Weight};
use flagbundle_core::scalar::C;
use flagbundle_core::typea_reps::{composite_norm_sq, GroupElement};

fn w6() -> ParabolicDatum {
    ParabolicDatum::parse("A2/{}").unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bundle_lattice_is_a_group(
        a in proptest::collection::vec(-20i64..=20, 2),
        b in proptest::collection::vec(-20i64..=20, 2),
        c in proptest::collection::vec(-20i64..=20, 2),
    ) {
        let p = w6();
        let qa = BundleVector::new(p.clone(), a).unwrap();
        let qb = BundleVector::new(p.clone(), b).unwrap();
        let qc = BundleVector::new(p.clone(), c).unwrap();
        // commutativity and associativity
        prop_assert_eq!(qa.add(&qb).unwrap(), qb.add(&qa).unwrap());
        prop_assert_eq!(
            qa.add(&qb).unwrap().add(&qc).unwrap(),
            qa.add(&qb.add(&qc).unwrap()).unwrap()
        );
        // inverses
        prop_assert!(qa.add(&qa.neg()).unwrap().is_trivial());
        // identity
        let zero = BundleVector::trivial(p);
        prop_assert_eq!(qa.add(&zero).unwrap(), qa);
    }

    #[test]
    fn weight_root_basis_round_trip(
        name in prop::sample::select(vec!["A2", "A4", "B3", "C3", "D4", "G2", "F4"]),
        coeffs in proptest::collection::vec(-9i64..=9, 2..=4),
    ) {
        let sys = positive_roots(&LieType::parse(name).unwrap());
        let rank = sys.rank();
        let mut w = vec![Rational::from_integer(0); rank];
        for (i, slot) in w.iter_mut().enumerate() {
            *slot = Rational::from_integer(coeffs[i % coeffs.len()]);
        }
        let weight = Weight { coeffs: w.clone() };
        // round trip through the simple-root basis is the identity
        let root_coords = sys.weight_to_root_basis(&weight);
        let back: Vec<Rational> = (0..rank)
            .map(|i| {
                (0..rank).fold(Rational::from_integer(0), |acc, j| {
                    acc + Rational::from_integer(sys.cartan.entry(i, j)) * root_coords[j]
                })
            })
            .collect();
        prop_assert_eq!(back, w);
    }

    #[test]
    fn astheno_circle_points_solve_condition(
        m1 in 1i64..=6,
        m2 in 2i64..=6,
        t in 0.0f64..std::f64::consts::TAU,
    ) {
        let locus = astheno_locus(m1, m2);
        let center = locus.center_a.unwrap();
        let r2 = locus.radius_sq.unwrap();
        prop_assume!(r2 > Rational::from_integer(0));
        let c = *center.numer() as f64 / *center.denom() as f64;
        let r = (*r2.numer() as f64 / *r2.denom() as f64).sqrt();
        let (a, b) = (c + r * t.cos(), r * t.sin());
        prop_assume!(b.abs() > 1e-12);
        prop_assert!(astheno_residual(m1, m2, a, b).abs() < 1e-9);
    }

    #[test]
    fn composite_norm_is_multiplicative_in_exponents(
        re in proptest::collection::vec(-1.0f64..1.0, 3),
        im in proptest::collection::vec(-1.0f64..1.0, 3),
        e1 in 0.5f64..2.0,
        e2 in 0.5f64..2.0,
    ) {
        // SL(3) unipotent section
        let g = GroupElement::<f64>::unipotent_lower(
            3,
            &[
                ((1, 0), C::new(re[0], im[0])),
                ((2, 0), C::new(re[1], im[1])),
                ((2, 1), C::new(re[2], im[2])),
            ],
        );
        let exps = |a: f64, b: f64| -> BTreeMap<usize, f64> {
            [(1usize, a), (2usize, b)].into_iter().collect()
        };
        let p1 = composite_norm_sq(&g, &exps(e1, 0.0)).unwrap();
        let p2 = composite_norm_sq(&g, &exps(0.0, e2)).unwrap();
        let p12 = composite_norm_sq(&g, &exps(e1, e2)).unwrap();
        prop_assert!((p12 - p1 * p2).abs() <= 1e-12 * p12.max(1.0));
    }

    #[test]
    fn delta_p_vanishes_on_theta(
        rank in 2usize..=4,
        mask in 0u32..16,
    ) {
        let t = LieType::parse(&format!("A{rank}")).unwrap();
        let sys = positive_roots(&t);
        let theta: Vec<usize> = (0..rank).filter(|i| mask & (1 << i) != 0).collect();
        prop_assume!(theta.len() < rank);
        let p = ParabolicDatum::new(sys, theta).unwrap();
        let (_, w) = p.delta_p();
        for &i in &p.theta {
            prop_assert_eq!(w.coeffs[i], Rational::from_integer(0));
        }
        for &i in &p.complement() {
            prop_assert!(w.coeffs[i] > Rational::from_integer(0));
        }
    }
}
