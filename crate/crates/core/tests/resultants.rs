use num_bigint::BigInt;
use proptest::prelude::*;
use tutte_core::poly::resultant::resultant_by_sylvester;
use tutte_core::poly::{resultant, MPoly, Monomial, Var};

fn poly_in(vars: [Var; 3], max: [u32; 3]) -> impl Strategy<Value = MPoly> {
    prop::collection::vec((0..=max[0], 0..=max[1], 0..=max[2], -6i64..=6), 1..7).prop_map(
        move |ts| {
            MPoly::from_terms(ts.into_iter().map(|(a, b, c, k)| {
                (
                    Monomial::var(vars[0], a)
                        .mul(Monomial::var(vars[1], b))
                        .mul(Monomial::var(vars[2], c)),
                    BigInt::from(k),
                )
            }))
        },
    )
}

fn with_main_var() -> impl Strategy<Value = MPoly> {
    poly_in([Var::F, Var::X, Var::Y], [3, 2, 1]).prop_filter("needs f", |p| p.degree(Var::F) > 0)
}

/// Determinant by cofactor expansion along the first row.
fn laplace(m: &[Vec<MPoly>]) -> MPoly {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = MPoly::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<MPoly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, c)| c.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * &laplace(&minor);
        acc = if j % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    acc
}

fn sylvester_matrix(a: &MPoly, b: &MPoly, v: Var) -> Vec<Vec<MPoly>> {
    let (ca, cb) = (a.coefficients(v), b.coefficients(v));
    let (m, n) = (ca.len() - 1, cb.len() - 1);
    let size = m + n;
    let mut rows = Vec::new();
    for i in 0..n {
        let mut row = vec![MPoly::zero(); size];
        for (k, c) in ca.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![MPoly::zero(); size];
        for (k, c) in cb.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    rows
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn three_ways_agree(a in with_main_var(), b in with_main_var()) {
        let r = resultant(&a, &b, Var::F).unwrap();
        prop_assert_eq!(&r, &resultant_by_sylvester(&a, &b, Var::F).unwrap());
        prop_assert_eq!(&r, &laplace(&sylvester_matrix(&a, &b, Var::F)));
    }

    #[test]
    fn swap_sign(a in with_main_var(), b in with_main_var()) {
        let r = resultant(&a, &b, Var::F).unwrap();
        let s = resultant(&b, &a, Var::F).unwrap();
        if (a.degree(Var::F) * b.degree(Var::F)) % 2 == 1 {
            prop_assert_eq!(r, -&s);
        } else {
            prop_assert_eq!(r, s);
        }
    }

    #[test]
    fn common_factor_vanishes(u in with_main_var(), w in with_main_var(), s in poly_in([Var::X, Var::Y, Var::G], [2, 1, 0])) {
        let root = &MPoly::var(Var::F) - &s;
        let r = resultant(&(&root * &u), &(&root * &w), Var::F).unwrap();
        prop_assert!(r.is_zero());
    }

    #[test]
    fn multiplicative(a in with_main_var(), b in with_main_var(), c in with_main_var()) {
        let ab = resultant(&(&a * &b), &c, Var::F).unwrap();
        let prod = &resultant(&a, &c, Var::F).unwrap() * &resultant(&b, &c, Var::F).unwrap();
        prop_assert_eq!(ab, prod);
    }
}
