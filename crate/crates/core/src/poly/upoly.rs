//! Dense univariate polynomials over Z, stored as ascending coefficient
//! vectors without trailing zeros (the zero polynomial is empty).

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::modp;

pub type UPoly = Vec<BigInt>;

pub fn trim(a: &mut UPoly) {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
}

pub fn trimmed(mut a: UPoly) -> UPoly {
    trim(&mut a);
    a
}

pub fn constant(c: impl Into<BigInt>) -> UPoly {
    trimmed(vec![c.into()])
}

pub fn one() -> UPoly {
    vec![BigInt::one()]
}

/// Degree, or `None` for zero.
pub fn degree(a: &[BigInt]) -> Option<usize> {
    a.len().checked_sub(1)
}

pub fn is_one(a: &[BigInt]) -> bool {
    a.len() == 1 && a[0].is_one()
}

pub fn add(a: &[BigInt], b: &[BigInt]) -> UPoly {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, c) in out.iter_mut().zip(short) {
        *o += c;
    }
    trimmed(out)
}

pub fn sub(a: &[BigInt], b: &[BigInt]) -> UPoly {
    let mut out = a.to_vec();
    if out.len() < b.len() {
        out.resize(b.len(), BigInt::zero());
    }
    for (o, c) in out.iter_mut().zip(b) {
        *o -= c;
    }
    trimmed(out)
}

pub fn neg(a: &[BigInt]) -> UPoly {
    a.iter().map(|c| -c).collect()
}

pub fn scale(a: &[BigInt], c: &BigInt) -> UPoly {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|x| x * c).collect()
}

pub fn div_scalar_exact(a: &[BigInt], c: &BigInt) -> UPoly {
    a.iter()
        .map(|x| {
            let (q, r) = x.div_rem(c);
            debug_assert!(r.is_zero());
            q
        })
        .collect()
}

/// Multiplies by `t^k`.
pub fn shift_up(a: &[BigInt], k: usize) -> UPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); k];
    out.extend_from_slice(a);
    out
}

fn max_bits(a: &[BigInt]) -> u64 {
    a.iter().map(|c| c.bits()).max().unwrap_or(0)
}

fn schoolbook(a: &[BigInt], b: &[BigInt]) -> UPoly {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trimmed(out)
}

/// Packs signed coefficients into one integer at base 2^(32 w).
fn pack(a: &[BigInt], w: usize) -> BigInt {
    let mut pos = vec![0u32; a.len() * w];
    let mut neg = vec![0u32; a.len() * w];
    let mut any_neg = false;
    for (i, c) in a.iter().enumerate() {
        let (sign, digits) = c.to_u32_digits();
        let dst = if sign == Sign::Minus {
            any_neg = true;
            &mut neg
        } else {
            &mut pos
        };
        dst[i * w..i * w + digits.len()].copy_from_slice(&digits);
    }
    let p = BigInt::from_biguint(Sign::Plus, BigUint::new(pos));
    if any_neg {
        p - BigInt::from_biguint(Sign::Plus, BigUint::new(neg))
    } else {
        p
    }
}

fn unpack(r: BigInt, w: usize, len: usize) -> UPoly {
    let negative = r.is_negative();
    let digits = r.magnitude().to_u32_digits();
    let half = BigInt::one() << (32 * w - 1);
    let full = BigInt::one() << (32 * w);
    let mut out = Vec::with_capacity(len);
    let mut carry = false;
    for i in 0..len {
        let lo = (i * w).min(digits.len());
        let hi = ((i + 1) * w).min(digits.len());
        let mut c = BigInt::from_biguint(Sign::Plus, BigUint::from_slice(&digits[lo..hi]));
        if carry {
            c += 1;
        }
        if c >= half {
            c -= &full;
            carry = true;
        } else {
            carry = false;
        }
        out.push(if negative { -c } else { c });
    }
    trimmed(out)
}

/// Product via Kronecker substitution for large inputs, schoolbook otherwise.
pub fn mul(a: &[BigInt], b: &[BigInt]) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    if a.len().min(b.len()) < 12 {
        return schoolbook(a, b);
    }
    let bound =
        max_bits(a) + max_bits(b) + 64 - (a.len().min(b.len()) as u64).leading_zeros() as u64 + 2;
    let w = bound.div_ceil(32) as usize;
    let r = pack(a, w) * pack(b, w);
    unpack(r, w, a.len() + b.len() - 1)
}

pub fn pow(a: &[BigInt], e: u32) -> UPoly {
    let mut acc = one();
    let mut base = a.to_vec();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(&acc, &base);
        }
        e >>= 1;
        if e > 0 {
            base = mul(&base, &base);
        }
    }
    acc
}

/// Truncated product modulo `t^n`.
pub fn mul_trunc(a: &[BigInt], b: &[BigInt], n: usize) -> UPoly {
    let a = &a[..a.len().min(n)];
    let b = &b[..b.len().min(n)];
    let mut p = mul(a, b);
    p.truncate(n);
    trimmed(p)
}

pub fn derivative(a: &[BigInt]) -> UPoly {
    trimmed(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect(),
    )
}

pub fn eval(a: &[BigInt], x: &BigInt) -> BigInt {
    a.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

pub fn eval_rat(a: &[BigInt], x: &BigRational) -> BigRational {
    a.iter().rev().fold(BigRational::zero(), |acc, c| {
        acc * x + BigRational::from_integer(c.clone())
    })
}

/// Positive gcd of the coefficients (0 for the zero polynomial).
pub fn content(a: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Primitive part with positive leading coefficient.
pub fn primitive(a: &[BigInt]) -> UPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let mut c = content(a);
    if a.last().unwrap().is_negative() {
        c = -c;
    }
    div_scalar_exact(a, &c)
}

/// Exact quotient over Z, `None` if `b` does not divide `a`.
pub fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<UPoly> {
    assert!(!b.is_empty(), "division by the zero polynomial");
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let db = b.len() - 1;
    let lc = &b[db];
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    for k in (0..q.len()).rev() {
        let top = r[k + db].clone();
        if top.is_zero() {
            continue;
        }
        let (qk, rem) = top.div_rem(lc);
        if !rem.is_zero() {
            return None;
        }
        for (i, bc) in b.iter().enumerate() {
            r[k + i] -= &qk * bc;
        }
        q[k] = qk;
    }
    if r.iter().any(|c| !c.is_zero()) {
        return None;
    }
    Some(trimmed(q))
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) a mod b.
pub fn prem(a: &[BigInt], b: &[BigInt]) -> UPoly {
    let db = b.len() - 1;
    let mut r = a.to_vec();
    if r.len() <= db {
        return r;
    }
    let lc = &b[db];
    let mut e = r.len() - db;
    while r.len() > db {
        let top = r.pop().unwrap();
        let dr = r.len();
        for c in r.iter_mut() {
            *c *= lc;
        }
        if !top.is_zero() {
            for (i, bc) in b[..db].iter().enumerate() {
                r[dr - db + i] -= &top * bc;
            }
        }
        e -= 1;
        trim(&mut r);
        // r may have shrunk by more than one degree; the exponent of lc
        // still has to reach deg a - deg b + 1 in total.
        if r.len() <= db {
            break;
        }
    }
    let lcp = num_traits::pow(lc.clone(), e);
    trimmed(scale(&r, &lcp))
}

/// Quick test: `Some(true)` proves gcd(a, b) is a constant.
fn coprime_mod_p(a: &[BigInt], b: &[BigInt]) -> bool {
    for p in modp::primes(2) {
        let (ap, bp) = (modp::from_ints(a, p), modp::from_ints(b, p));
        if ap.len() != a.len() || bp.len() != b.len() {
            continue;
        }
        if modp::gcd(&ap, &bp, p).len() == 1 {
            return true;
        }
    }
    false
}

fn inf_norm(a: &[BigInt]) -> BigInt {
    a.iter().map(|c| c.abs()).max().unwrap_or_default()
}

/// Heuristic gcd of primitive polynomials (Char, Geddes, Gonnet). A returned
/// value has been verified by exact division and is the true primitive gcd.
fn gcd_heu(a: &[BigInt], b: &[BigInt]) -> Option<UPoly> {
    let mut xi: BigInt = BigInt::from(2) * std::cmp::min(inf_norm(a), inf_norm(b)) + 29;
    let dmax = a.len().max(b.len()) as u64;
    for _ in 0..6 {
        if xi.bits() * dmax > 400_000 {
            return None;
        }
        let h = eval(a, &xi).gcd(&eval(b, &xi));
        let mut g = Vec::new();
        let mut rest = h;
        let half = &xi / 2;
        while !rest.is_zero() {
            let mut c = rest.mod_floor(&xi);
            if c > half {
                c -= &xi;
            }
            rest = (rest - &c) / &xi;
            g.push(c);
        }
        let g = primitive(&trimmed(g));
        if !g.is_empty() && div_exact(a, &g).is_some() && div_exact(b, &g).is_some() {
            return Some(g);
        }
        xi = xi * 73794 / 27011;
    }
    None
}

fn gcd_prs(a: &[BigInt], b: &[BigInt]) -> UPoly {
    let (mut x, mut y) = if a.len() >= b.len() {
        (a.to_vec(), b.to_vec())
    } else {
        (b.to_vec(), a.to_vec())
    };
    while !y.is_empty() {
        let r = prem(&x, &y);
        x = y;
        y = primitive(&r);
    }
    primitive(&x)
}

/// Greatest common divisor over Z, normalized with positive leading
/// coefficient. gcd(0, 0) = 0.
pub fn gcd(a: &[BigInt], b: &[BigInt]) -> UPoly {
    if a.is_empty() {
        return primitive_with_content(b);
    }
    if b.is_empty() {
        return primitive_with_content(a);
    }
    let c = content(a).gcd(&content(b));
    let (pa, pb) = (primitive(a), primitive(b));
    let g = if pa.len() == 1 || pb.len() == 1 || coprime_mod_p(&pa, &pb) {
        one()
    } else if pa == pb {
        pa
    } else {
        gcd_heu(&pa, &pb).unwrap_or_else(|| gcd_prs(&pa, &pb))
    };
    scale(&g, &c)
}

fn primitive_with_content(a: &[BigInt]) -> UPoly {
    if a.last().is_some_and(|c| c.is_negative()) {
        neg(a)
    } else {
        a.to_vec()
    }
}

/// Substitutes `t -> t + s`.
pub fn taylor_shift(a: &[BigInt], s: &BigInt) -> UPoly {
    let mut out: UPoly = Vec::new();
    let lin = vec![s.clone(), BigInt::one()];
    for c in a.iter().rev() {
        out = mul(&out, &lin);
        if out.is_empty() {
            out.push(c.clone());
        } else {
            out[0] += c;
        }
        trim(&mut out);
    }
    out
}

/// Product of (t + k) for k in lo..hi, i.e. a rising factorial in t.
pub fn rising(lo: i64, hi: i64) -> UPoly {
    let mut out = one();
    for k in lo..hi {
        out = mul(&out, &[BigInt::from(k), BigInt::one()]);
    }
    out
}

/// Renders with variable name `v`, highest power first.
pub fn to_string(a: &[BigInt], v: &str) -> String {
    if a.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (i, c) in a.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let first = s.is_empty();
        let abs = c.abs();
        if c.is_negative() {
            s.push_str(if first { "-" } else { " - " });
        } else if !first {
            s.push_str(" + ");
        }
        match i {
            0 => s.push_str(&abs.to_string()),
            _ => {
                if !abs.is_one() {
                    s.push_str(&abs.to_string());
                    s.push('*');
                }
                s.push_str(v);
                if i > 1 {
                    s.push('^');
                    s.push_str(&i.to_string());
                }
            }
        }
    }
    s
}
