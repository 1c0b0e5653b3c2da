use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use tutte_core::evalrec::{tutte_closed_form, unroll};
use tutte_core::guess::AlgEq;
use tutte_core::holonomic::{algebraic_series, algeq_to_ode, generate, minimize_rec, ode_to_rec};
use tutte_core::parse::parse_poly;
use tutte_core::poly::{MPoly, Monomial, QSeries, Var};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn factorial(n: u64) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

fn sqrt_one_minus_x(n: usize) -> Vec<BigRational> {
    // binom(1/2, k) (-1)^k
    (0..n as i64)
        .map(|k| {
            (0..k).fold(BigRational::one(), |acc, i| {
                acc * (rat(1, 2) - rat(i, 1)) / rat(i + 1, 1)
            }) * rat(if k % 2 == 0 { 1 } else { -1 }, 1)
        })
        .collect()
}

fn catalan(n: usize) -> Vec<BigRational> {
    (0..n as u64)
        .map(|k| BigRational::new(factorial(2 * k), factorial(k) * factorial(k + 1)))
        .collect()
}

fn tutte(n: usize) -> Vec<BigRational> {
    (0..n as i64)
        .map(|k| {
            tutte_closed_form(k)
                .unwrap()
                .value
                .parse::<BigInt>()
                .unwrap()
                .into()
        })
        .collect()
}

fn chain(p: &str, oracle: &[BigRational]) {
    let eq = AlgEq::new(parse_poly(p).unwrap(), QSeries::new(oracle[..12].to_vec())).unwrap();
    let ode = algeq_to_ode(&eq).unwrap();
    assert!(ode.apply(oracle).iter().all(Zero::is_zero), "{ode} on {p}");
    let rec = ode_to_rec(&ode, &QSeries::new(oracle.to_vec())).unwrap();
    assert_eq!(generate(&rec, oracle.len()).unwrap(), oracle, "{rec}");
    assert_eq!(
        algebraic_series(&eq, oracle.len()).unwrap().coeffs(),
        oracle
    );
}

#[test]
fn geometric_chain() {
    chain("(1-x)*f - 1", &vec![BigRational::one(); 60]);
}

#[test]
fn square_root_chain() {
    chain("f^2 - (1-x)", &sqrt_one_minus_x(60));
}

#[test]
fn catalan_chain() {
    chain("x*f^2 - f + 1", &catalan(60));
}

fn tutte_rec() -> (tutte_core::holonomic::PRec, QSeries) {
    let p1 = "f^4*x^3 + 3*f^3*x^2 + 8*f^2*x^2 + 3*f^2*x - 20*f*x + f + 16*x - 1";
    let eq = AlgEq::new(parse_poly(p1).unwrap(), QSeries::new(tutte(31))).unwrap();
    let data = QSeries::new(tutte(301));
    let ode = algeq_to_ode(&eq).unwrap();
    (ode_to_rec(&ode, &data).unwrap(), data)
}

#[test]
fn tutte_recurrence() {
    let (rec, data) = tutte_rec();
    assert_eq!(generate(&rec, 301).unwrap(), data.coeffs());
    let min = minimize_rec(&rec, &data, 5).unwrap().unwrap();
    assert_eq!((min.order(), min.degree()), (1, 3));
    assert_eq!(generate(&min, 301).unwrap(), data.coeffs());
    // 3(n+2)(3n+4)(3n+5) a(n+1) = 8(2n+1)(4n+3)(4n+5) a(n)
    let expected_lead = parse_poly("3*(x+2)*(3*x+4)*(3*x+5)").unwrap();
    let expected_tail = parse_poly("-8*(2*x+1)*(4*x+3)*(4*x+5)").unwrap();
    let as_poly = |c: &Vec<BigInt>| {
        MPoly::from_terms(
            c.iter()
                .enumerate()
                .map(|(i, a)| (Monomial::var(Var::X, i as u32), a.clone())),
        )
    };
    assert_eq!(as_poly(&min.coeffs[1]), expected_lead);
    assert_eq!(as_poly(&min.coeffs[0]), expected_tail);
    assert_eq!(minimize_rec(&rec, &data, 1).unwrap(), None);
    for n in [1u64, 2, 3, 4, 50, 200] {
        assert_eq!(
            unroll(&min, n).unwrap(),
            tutte_closed_form(n as i64).unwrap()
        );
    }
}

fn low_degree() -> impl Strategy<Value = (MPoly, i64)> {
    (prop::collection::vec(-3i64..=3, 9), -1i64..=1).prop_filter_map("simple root", |(cs, c0)| {
        let at0: i64 = (1..3).map(|i| cs[3 * i] * c0.pow(i as u32)).sum();
        let dp0: i64 = (1..3)
            .map(|i| i as i64 * cs[3 * i] * c0.pow(i as u32 - 1))
            .sum();
        if dp0 == 0 {
            return None;
        }
        let terms = cs
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != 0)
            .map(|(k, &c)| {
                (
                    Monomial::var(Var::F, (k / 3) as u32)
                        .mul(Monomial::var(Var::X, (k % 3) as u32)),
                    BigInt::from(c),
                )
            })
            .chain([(Monomial::ONE, BigInt::from(-at0))]);
        Some((MPoly::from_terms(terms), c0))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_chain_regenerates_series((p, c0) in low_degree()) {
        let seed = AlgEq::new(p, QSeries::from_ints([c0])).unwrap();
        let s = algebraic_series(&seed, 60).unwrap();
        let eq = AlgEq::new(seed.p.clone(), s.prefix(20)).unwrap();
        let ode = algeq_to_ode(&eq).unwrap();
        prop_assert!(ode.apply(s.coeffs()).iter().all(Zero::is_zero));
        let rec = ode_to_rec(&ode, &s).unwrap();
        prop_assert_eq!(generate(&rec, 60).unwrap(), s.coeffs());
    }
}
