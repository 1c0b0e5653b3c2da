//! Resultants and subresultant remainder sequences for dense univariate
//! polynomials over any [`Ring`] with exact division.

use super::mpoly::MPoly;
use super::ring::Ring;
use super::var::Var;
use crate::error::{Error, Result};

fn trim<R: Ring>(a: &mut Vec<R>) {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) a mod b`.
pub fn prem<R: Ring>(a: &[R], b: &[R]) -> Vec<R> {
    let db = b.len() - 1;
    let mut r = a.to_vec();
    trim(&mut r);
    if r.len() <= db {
        return r;
    }
    let lc = &b[db];
    let mut e = (r.len() - db) as u32;
    while r.len() > db {
        let top = r.pop().unwrap();
        let dr = r.len();
        for c in r.iter_mut() {
            *c = c.mul(lc);
        }
        if !top.is_zero() {
            for (i, bc) in b[..db].iter().enumerate() {
                let t = top.mul(bc);
                r[dr - db + i] = r[dr - db + i].sub(&t);
            }
        }
        e -= 1;
        trim(&mut r);
    }
    if e > 0 {
        let f = lc.pow(e);
        for c in r.iter_mut() {
            *c = c.mul(&f);
        }
    }
    r
}

fn div_all<R: Ring>(a: &mut [R], d: &R) {
    if d.is_one() {
        return;
    }
    for c in a.iter_mut() {
        *c = c.exact_div(d).expect("subresultant division must be exact");
    }
}

/// Outcome of running the subresultant sequence to its end.
struct PrsEnd<R> {
    /// Last nonzero remainder (similar to the gcd).
    last: Vec<R>,
    /// The resultant, zero when the inputs share a factor.
    resultant: R,
}

fn subresultant_prs<R: Ring>(a: &[R], b: &[R]) -> PrsEnd<R> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    if a.is_empty() || b.is_empty() {
        let last = if a.is_empty() { b } else { a };
        return PrsEnd {
            last,
            resultant: R::zero(),
        };
    }
    let mut sign_neg = false;
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
        if (a.len() - 1) % 2 == 1 && (b.len() - 1) % 2 == 1 {
            sign_neg = true;
        }
    }
    let finish = |v: R, neg: bool| if neg { v.neg() } else { v };
    if b.len() == 1 {
        let r = b[0].pow((a.len() - 1) as u32);
        return PrsEnd {
            last: b,
            resultant: finish(r, sign_neg),
        };
    }
    let mut g = R::one();
    let mut h = R::one();
    loop {
        let da = a.len() - 1;
        let db = b.len() - 1;
        let delta = (da - db) as u32;
        if da % 2 == 1 && db % 2 == 1 {
            sign_neg = !sign_neg;
        }
        let mut r = prem(&a, &b);
        a = b;
        if r.is_empty() {
            return PrsEnd {
                last: a,
                resultant: R::zero(),
            };
        }
        let d = g.mul(&h.pow(delta));
        div_all(&mut r, &d);
        b = r;
        g = a[a.len() - 1].clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => g
                .pow(delta)
                .exact_div(&h.pow(delta - 1))
                .expect("exact h update"),
        };
        if b.len() == 1 {
            let da = (a.len() - 1) as u32;
            let t = b[0]
                .pow(da)
                .exact_div(&h.pow(da - 1))
                .expect("exact final division");
            return PrsEnd {
                last: b,
                resultant: finish(t, sign_neg),
            };
        }
    }
}

/// Resultant of dense polynomials (ascending coefficients) by the
/// subresultant algorithm. Zero if either input is zero.
pub fn resultant_dense<R: Ring>(a: &[R], b: &[R]) -> R {
    subresultant_prs(a, b).resultant
}

/// Last nonzero element of the subresultant sequence; over a UFD its
/// primitive part is the gcd.
pub fn last_subresultant<R: Ring>(a: &[R], b: &[R]) -> Vec<R> {
    subresultant_prs(a, b).last
}

/// Sylvester matrix of `a` (degree m) and `b` (degree n): n rows of `a`
/// coefficients followed by m rows of `b`, highest power first.
pub fn sylvester<R: Ring>(a: &[R], b: &[R]) -> Vec<Vec<R>> {
    let m = a.len() - 1;
    let n = b.len() - 1;
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![R::zero(); size];
        for (k, c) in a.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![R::zero(); size];
        for (k, c) in b.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// Determinant by Bareiss fraction-free elimination.
pub fn det_bareiss<R: Ring>(mut m: Vec<Vec<R>>) -> R {
    let n = m.len();
    if n == 0 {
        return R::one();
    }
    let mut neg = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return R::zero();
            };
            m.swap(k, p);
            neg = !neg;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = v.exact_div(&prev).expect("Bareiss division must be exact");
            }
            m[i][k] = R::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if neg {
        d.neg()
    } else {
        d
    }
}

/// Resultant as the Sylvester determinant (Bareiss). Slower; used as an
/// independent cross-check.
pub fn resultant_sylvester<R: Ring>(a: &[R], b: &[R]) -> R {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    if a.is_empty() || b.is_empty() {
        return R::zero();
    }
    if a.len() == 1 && b.len() == 1 {
        return R::one();
    }
    det_bareiss(sylvester(&a, &b))
}

/// Resultant of two polynomials with respect to `v`.
pub fn resultant(a: &MPoly, b: &MPoly, v: Var) -> Result<MPoly> {
    if a.degree(v) == 0 || b.degree(v) == 0 {
        return Err(Error::InvalidElimination(v));
    }
    Ok(resultant_dense(&a.coefficients(v), &b.coefficients(v)))
}

/// Same as [`resultant`] but through the Sylvester determinant.
pub fn resultant_by_sylvester(a: &MPoly, b: &MPoly, v: Var) -> Result<MPoly> {
    if a.degree(v) == 0 || b.degree(v) == 0 {
        return Err(Error::InvalidElimination(v));
    }
    Ok(resultant_sylvester(&a.coefficients(v), &b.coefficients(v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn v(x: Var) -> MPoly {
        MPoly::var(x)
    }

    #[test]
    fn linear_eliminations() {
        let (g, x, y, psi) = (v(Var::G), v(Var::X), v(Var::Y), v(Var::Psi));
        let r = resultant(&(&g - &x), &(&psi - &g), Var::G).unwrap();
        assert_eq!(r.normalize_sign(), &psi - &x);
        let r = resultant(&(&(&g * &g) - &x), &(&g - &y), Var::G).unwrap();
        let expected = &(&y * &y) - &x;
        assert!(r == expected || r == -&expected, "{r}");
    }

    #[test]
    fn degree_zero_is_rejected() {
        let r = resultant(&v(Var::X), &v(Var::G), Var::G);
        assert_eq!(r, Err(Error::InvalidElimination(Var::G)));
    }

    #[test]
    fn integer_cross_check() {
        let a: Vec<BigInt> = [3, -1, 4, 1, -5].iter().map(|&c| BigInt::from(c)).collect();
        let b: Vec<BigInt> = [2, 7, 0, -1].iter().map(|&c| BigInt::from(c)).collect();
        assert_eq!(resultant_dense(&a, &b), resultant_sylvester(&a, &b));
        assert_eq!(resultant_dense(&b, &a), resultant_sylvester(&b, &a));
    }

    #[test]
    fn common_factor_gives_zero() {
        let a: Vec<BigInt> = [-1, 0, 1].iter().map(|&c| BigInt::from(c)).collect();
        let b: Vec<BigInt> = [1, 1].iter().map(|&c| BigInt::from(c)).collect();
        assert_eq!(resultant_dense(&a, &b), BigInt::from(0));
        assert_eq!(last_subresultant(&a, &b).len(), 2);
    }
}
