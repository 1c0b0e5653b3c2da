use num_bigint::BigInt;
use proptest::prelude::*;
use tutte_core::poly::{vanishing_bound, MPoly, Monomial, Var};

fn xy_poly(max_x: u32) -> impl Strategy<Value = MPoly> {
    prop::collection::vec((0..=max_x, 0u32..=2, -4i64..=4), 1..5).prop_map(|ts| {
        MPoly::from_terms(ts.into_iter().map(|(a, b, k)| {
            (
                Monomial::var(Var::X, a).mul(Monomial::var(Var::Y, b)),
                BigInt::from(k),
            )
        }))
    })
}

/// z - x^e (c + x h(x, y)) with c a nonzero constant: a root of valuation e.
fn root_factor() -> impl Strategy<Value = (MPoly, u32)> {
    (0u32..6, prop_oneof![-3i64..=-1, 1i64..=3], xy_poly(2)).prop_map(|(e, c, h)| {
        let unit = &MPoly::constant(c) + &(&MPoly::var(Var::X) * &h);
        (
            &MPoly::var(Var::Z) - &(&MPoly::var_pow(Var::X, e) * &unit),
            e,
        )
    })
}

fn one_plus_x_times(h: &MPoly) -> MPoly {
    &MPoly::one() + &(&MPoly::var(Var::X) * h)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn bounds_every_root(fs in prop::collection::vec(root_factor(), 1..4), extra in xy_poly(3)) {
        let mut m = MPoly::one();
        for (f, _) in &fs {
            m = &m * f;
        }
        // A cofactor with no root of its own in z.
        if !extra.is_zero() && extra.min_degree(Var::X) == 0 {
            m = &m * &extra;
        }
        let b = vanishing_bound(&m, Var::Z).unwrap();
        let top = fs.iter().map(|(_, e)| *e as usize).max().unwrap();
        prop_assert!(b >= top, "bound {} below root valuation {}", b, top);
    }

    #[test]
    fn invariant_under_units(f in root_factor(), g in root_factor(), h in xy_poly(2), k in 0u32..4, c in 1i64..5) {
        let m = &f.0 * &g.0;
        let b = vanishing_bound(&m, Var::Z).unwrap();
        let scaled = m.scale(&BigInt::from(-c));
        prop_assert_eq!(vanishing_bound(&scaled, Var::Z).unwrap(), b);
        let shifted = &m * &MPoly::var_pow(Var::X, k);
        prop_assert_eq!(vanishing_bound(&shifted, Var::Z).unwrap(), b);
        let unit = &m * &one_plus_x_times(&h);
        prop_assert_eq!(vanishing_bound(&unit, Var::Z).unwrap(), b);
        let with_zero_root = &m * &MPoly::var_pow(Var::Z, k);
        prop_assert_eq!(vanishing_bound(&with_zero_root, Var::Z).unwrap(), b);
    }

    #[test]
    fn exact_for_two_roots(e1 in 0u32..6, e2 in 0u32..6) {
        let z = MPoly::var(Var::Z);
        let m = &(&z - &MPoly::var_pow(Var::X, e1)) * &(&z - &MPoly::var_pow(Var::X, e2).scale(&BigInt::from(2)));
        prop_assert_eq!(vanishing_bound(&m, Var::Z).unwrap(), e1.max(e2) as usize);
    }
}
