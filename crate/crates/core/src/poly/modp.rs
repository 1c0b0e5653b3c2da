//! Word-size prime field helpers used for fast negative tests (coprimality,
//! rank deficiency). Results derived here are never trusted as final
//! answers: a modular "yes" always leads to an exact computation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// The `count` largest primes below 2^31.
pub fn primes(count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut n = (1u64 << 31) - 1;
    while out.len() < count {
        if is_prime(n) {
            out.push(n);
        }
        n -= 2;
    }
    out
}

/// The `count` smallest primes at or above `start`.
pub fn primes_from(start: u64, count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut n = start.max(3) | 1;
    while out.len() < count {
        if is_prime(n) {
            out.push(n);
        }
        n += 2;
    }
    out
}

#[inline]
pub fn mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
pub fn add(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub fn sub(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub fn pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, a, p);
        }
        a = mul(a, a, p);
        e >>= 1;
    }
    acc
}

pub fn inv(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow(a, p - 2, p)
}

pub fn reduce(c: &BigInt, p: u64) -> u64 {
    c.mod_floor(&BigInt::from(p))
        .to_u64()
        .expect("residue fits in u64")
}

/// Dense polynomial over F_p, ascending coefficients, no trailing zeros.
pub type PolyP = Vec<u64>;

pub fn trim(a: &mut PolyP) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

pub fn from_ints(a: &[BigInt], p: u64) -> PolyP {
    let mut out: PolyP = a.iter().map(|c| reduce(c, p)).collect();
    trim(&mut out);
    out
}

pub fn eval(a: &[u64], x: u64, p: u64) -> u64 {
    a.iter().rev().fold(0, |acc, &c| add(mul(acc, x, p), c, p))
}

pub fn derivative(a: &[u64], p: u64) -> PolyP {
    let mut out: PolyP = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| mul(c, i as u64 % p, p))
        .collect();
    trim(&mut out);
    out
}

pub fn poly_mul(a: &[u64], b: &[u64], p: u64) -> PolyP {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = add(out[i + j], mul(x, y, p), p);
        }
    }
    trim(&mut out);
    out
}

/// Remainder of `a` modulo `b` (b nonzero).
pub fn rem(a: &[u64], b: &[u64], p: u64) -> PolyP {
    let mut r: PolyP = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let inv_lc = inv(b[db], p);
    while r.len() > db {
        let dr = r.len() - 1;
        let q = mul(r[dr], inv_lc, p);
        if q != 0 {
            for (i, &bc) in b.iter().enumerate() {
                let k = dr - db + i;
                r[k] = sub(r[k], mul(q, bc, p), p);
            }
        }
        r.pop();
        trim(&mut r);
    }
    r
}

/// Monic gcd over F_p.
pub fn gcd(a: &[u64], b: &[u64], p: u64) -> PolyP {
    let mut x: PolyP = a.to_vec();
    let mut y: PolyP = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    if let Some(&lc) = x.last() {
        let il = inv(lc, p);
        for c in x.iter_mut() {
            *c = mul(*c, il, p);
        }
    }
    x
}

/// Rank of a matrix over F_p (destroys nothing; works on a copy).
pub fn rank(rows: &[Vec<u64>], ncols: usize, p: u64) -> usize {
    let mut m: Vec<Vec<u64>> = rows.to_vec();
    let mut r = 0;
    for c in 0..ncols {
        let Some(piv) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, piv);
        let il = inv(m[r][c], p);
        for k in c..ncols {
            m[r][k] = mul(m[r][k], il, p);
        }
        for i in 0..m.len() {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for k in c..ncols {
                    let t = mul(f, m[r][k], p);
                    m[i][k] = sub(m[i][k], t, p);
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_generation() {
        let ps = primes(3);
        assert_eq!(ps[0], 2147483647);
        assert!(ps.iter().all(|&p| is_prime(p)));
        assert_eq!(primes_from(10, 3), vec![11, 13, 17]);
    }

    #[test]
    fn gcd_mod_p() {
        let p = 101;
        // (x+1)(x+2) and (x+1)(x+3)
        let a = poly_mul(&[1, 1], &[2, 1], p);
        let b = poly_mul(&[1, 1], &[3, 1], p);
        assert_eq!(gcd(&a, &b, p), vec![1, 1]);
    }

    #[test]
    fn rank_mod_p() {
        let rows = vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]];
        assert_eq!(rank(&rows, 3, 7), 2);
    }
}
