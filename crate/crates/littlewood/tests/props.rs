//! Property tests for the algebraic kernels.

use num_bigint::BigInt;
use proptest::prelude::*;

use littlewood::counts::{enumerate_tuples, Boundary, PythTuple, Region};
use littlewood::family::{even_odd_split, Family, FamilySeed, LittlewoodCode};
use littlewood::poly::{is_perfect_square, IntPolynomial};

fn arb_poly(max_degree: usize, bound: i64) -> impl Strategy<Value = IntPolynomial> {
    prop::collection::vec(-bound..=bound, 1..=max_degree + 1)
        .prop_map(|coeffs| IntPolynomial::from_coeffs_i64(&coeffs))
}

fn arb_nonzero_poly(max_degree: usize, bound: i64) -> impl Strategy<Value = IntPolynomial> {
    arb_poly(max_degree, bound).prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn resultant_is_multiplicative(
        f in arb_nonzero_poly(4, 5),
        g in arb_nonzero_poly(3, 5),
        h in arb_nonzero_poly(3, 5),
    ) {
        let lhs = f.resultant(&g.mul(&h)).unwrap();
        let rhs = f.resultant(&g).unwrap() * f.resultant(&h).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn resultant_swap_sign(f in arb_nonzero_poly(5, 6), g in arb_nonzero_poly(5, 6)) {
        let (df, dg) = (f.degree().unwrap(), g.degree().unwrap());
        let ab = f.resultant(&g).unwrap();
        let ba = g.resultant(&f).unwrap();
        let expect = if (df * dg) % 2 == 1 { -ba } else { ba };
        prop_assert_eq!(ab, expect);
    }

    #[test]
    fn resultant_routes_agree(f in arb_nonzero_poly(6, 7), g in arb_nonzero_poly(6, 7)) {
        prop_assert_eq!(f.resultant(&g).unwrap(), f.resultant_sylvester(&g).unwrap());
    }

    #[test]
    fn squares_are_recognized(x in 0u64..=1_000_000_000) {
        let b = BigInt::from(x);
        prop_assert!(is_perfect_square(&(&b * &b)));
        if x >= 1 {
            // x^2 + 1 sits strictly between consecutive squares.
            prop_assert!(!is_perfect_square(&(&b * &b + BigInt::from(1))));
        }
    }

    #[test]
    fn even_odd_split_recombines(p in arb_poly(9, 9)) {
        let (fe, fo) = even_odd_split(&p);
        // f(x) = f_e(x^2) + x f_o(x^2) at a few points pins the identity.
        for x in [-3i64, -1, 0, 2, 5] {
            let x = BigInt::from(x);
            let x2 = &x * &x;
            let lhs = p.evaluate(&x);
            let rhs = fe.evaluate(&x2) + &x * fo.evaluate(&x2);
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn littlewood_code_round_trips(degree in 0u64..=20, raw in any::<u64>()) {
        let mask = (raw | (1 << degree)) & ((1u64 << (degree + 1)) - 1);
        let code = LittlewoodCode::new(degree, mask).unwrap();
        let p = code.to_polynomial();
        prop_assert_eq!(LittlewoodCode::from_polynomial(&p).unwrap(), code);
    }

    #[test]
    fn family_members_are_littlewood(
        raw in any::<u64>(),
        half_degree in 1u64..=16,
        skew in any::<bool>(),
    ) {
        let family = if skew { Family::Skew } else { Family::Reciprocal };
        let mask = raw & ((1u64 << half_degree) - 1);
        let seed = FamilySeed::from_mask(family, 2 * half_degree, mask, true).unwrap();
        let f = seed.build();
        prop_assert_eq!(f.degree(), Some(2 * half_degree as usize));
        let code = LittlewoodCode::from_polynomial(&f);
        prop_assert!(code.is_ok(), "family member must have +-1 coefficients");
        prop_assert!(code.unwrap().is_monic());
    }

    #[test]
    fn enumerated_tuples_are_valid_and_ordered(bound in 0u64..=400, open in any::<bool>()) {
        for region in [Region::B, Region::D] {
            let boundary = if open { Boundary::Open } else { Boundary::Closed };
            let tuples: Vec<PythTuple> = enumerate_tuples(region, bound, boundary).collect();
            for t in &tuples {
                prop_assert!(PythTuple::new(t.k, t.r, t.s).is_ok());
                let held = match region {
                    Region::B => t.circle_norm(),
                    Region::D => t.leg().max(t.twice_area()),
                };
                match boundary {
                    Boundary::Closed => prop_assert!(held <= bound),
                    Boundary::Open => prop_assert!(held < bound),
                }
                // The Pythagorean identity itself.
                let a = t.leg() as u128;
                let b = t.twice_area() as u128;
                let c = t.circle_norm() as u128;
                prop_assert_eq!(a * a + b * b, c * c);
            }
            let keys: Vec<(u64, u64, u64)> = tuples.iter().map(|t| (t.k, t.r, t.s)).collect();
            let mut sorted = keys.clone();
            sorted.sort_unstable();
            sorted.dedup();
            prop_assert_eq!(&keys, &sorted, "stream must be strictly ordered by (k, r, s)");
        }
    }
}
