//! Rational roots of integer polynomials by p-adic lifting.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::modp;
use super::upoly::{self, UPoly};

fn inverse_mod(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.mod_floor(m).extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

/// Integer roots of a monic squarefree polynomial.
fn integer_roots_monic(b: &[BigInt]) -> Vec<BigInt> {
    let d = b.len() - 1;
    let bound = b[..d].iter().map(|c| c.abs()).max().unwrap_or_default() + 1;
    let db = upoly::derivative(b);
    let start = 10_007u64.max(d as u64 + 1);
    let p = modp::primes_from(start, 64)
        .into_iter()
        .find(|&p| {
            let bp = modp::from_ints(b, p);
            let dp = modp::from_ints(&db, p);
            modp::gcd(&bp, &dp, p).len() == 1
        })
        .expect("a squarefree integer polynomial stays squarefree modulo most primes");
    let bp = modp::from_ints(b, p);
    let target = &bound * 2 + 1;
    let mut out = Vec::new();
    for r0 in 0..p {
        if modp::eval(&bp, r0, p) != 0 {
            continue;
        }
        let mut r = BigInt::from(r0);
        let mut m = BigInt::from(p);
        while m <= target {
            m = &m * &m;
            let f = upoly::eval(b, &r).mod_floor(&m);
            let fp = upoly::eval(&db, &r);
            r = (&r - f * inverse_mod(&fp, &m)).mod_floor(&m);
        }
        let half = &m / 2;
        let t = if r > half { r - &m } else { r };
        if upoly::eval(b, &t).is_zero() {
            out.push(t);
        }
    }
    out
}

/// Distinct rational roots, sorted ascending.
pub fn rational_roots(a: &[BigInt]) -> Vec<BigRational> {
    let a = upoly::trimmed(a.to_vec());
    if a.len() <= 1 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let k = a.iter().position(|c| !c.is_zero()).unwrap();
    if k > 0 {
        out.push(BigRational::zero());
    }
    let a: UPoly = a[k..].to_vec();
    if a.len() > 1 {
        let g = upoly::gcd(&a, &upoly::derivative(&a));
        let sq = upoly::primitive(&upoly::div_exact(&a, &g).expect("gcd divides"));
        let d = sq.len() - 1;
        if d == 1 {
            out.push(BigRational::new(-sq[0].clone(), sq[1].clone()));
        } else {
            let lc = sq[d].clone();
            // b(t) = lc^(d-1) a(t / lc) is monic with integer coefficients.
            let b: UPoly = (0..=d)
                .map(|i| {
                    if i == d {
                        BigInt::one()
                    } else {
                        &sq[i] * num_traits::pow(lc.clone(), d - 1 - i)
                    }
                })
                .collect();
            for t in integer_roots_monic(&b) {
                out.push(BigRational::new(t, lc.clone()));
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Distinct nonnegative integer roots, sorted ascending.
pub fn nonneg_integer_roots(a: &[BigInt]) -> Vec<u64> {
    rational_roots(a)
        .into_iter()
        .filter(|r| r.is_integer() && !r.is_negative())
        .map(|r| u64::try_from(r.to_integer()).expect("root fits in u64"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> UPoly {
        upoly::trimmed(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn mixed_roots() {
        // (2t - 3)(t + 5) t^2 (t^2 + 1)
        let a = upoly::mul(
            &upoly::mul(&p(&[-3, 2]), &p(&[5, 1])),
            &upoly::mul(&p(&[0, 0, 1]), &p(&[1, 0, 1])),
        );
        assert_eq!(rational_roots(&a), vec![q(-5, 1), q(0, 1), q(3, 2)]);
    }

    #[test]
    fn repeated_and_large_roots() {
        let big: BigInt = num_traits::pow(BigInt::from(10), 30) + 7;
        let lin = vec![-big.clone(), BigInt::from(3)];
        let a = upoly::mul(&upoly::mul(&lin, &lin), &p(&[1, -1, 1]));
        assert_eq!(rational_roots(&a), vec![BigRational::new(big, 3.into())]);
    }

    #[test]
    fn nonnegative_integer_filter() {
        let a = upoly::mul(&upoly::mul(&p(&[-4, 1]), &p(&[3, 1])), &p(&[-1, 2]));
        assert_eq!(nonneg_integer_roots(&a), vec![4]);
        assert!(rational_roots(&p(&[1, 0, 1])).is_empty());
        assert!(rational_roots(&p(&[7])).is_empty());
    }
}
