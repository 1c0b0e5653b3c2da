//! Multivariate gcd over Z by recursive content extraction and subresultant
//! sequences, with a modular coprimality shortcut.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::modp::{self, PolyP};
use super::mpoly::MPoly;
use super::resultant::last_subresultant;
use super::var::{Monomial, Var, NVARS};
use crate::error::{Error, Result};

/// Deterministic evaluation points for the variables other than the main one.
const POINTS: [[u64; NVARS]; 2] = [
    [
        911_382_323,
        972_663_749,
        1_040_392_587,
        1_103_515_245,
        1_217_431_841,
        1_378_943_263,
    ],
    [
        715_225_739,
        604_462_909,
        897_581_057,
        1_500_450_271,
        1_773_233_167,
        1_299_709_051,
    ],
];

/// Reduces modulo `p` and evaluates every variable except `v` at `point`,
/// returning a dense polynomial in `v`.
pub fn specialize_mod_p(a: &MPoly, v: Var, point: &[u64; NVARS], p: u64) -> PolyP {
    let mut out = vec![0u64; a.degree(v) as usize + 1];
    for (m, c) in a.terms() {
        let mut t = modp::reduce(c, p);
        for w in Var::ALL {
            let e = m.exp(w);
            if w != v && e > 0 {
                t = modp::mul(t, modp::pow(point[w.index()] % p, e as u64, p), p);
            }
        }
        let k = m.exp(v) as usize;
        out[k] = modp::add(out[k], t, p);
    }
    modp::trim(&mut out);
    out
}

/// `true` proves that `a` and `b` have no common factor of positive degree
/// in `v`. `false` is inconclusive.
pub fn coprime_in(a: &MPoly, b: &MPoly, v: Var) -> bool {
    let (da, db) = (a.degree(v) as usize, b.degree(v) as usize);
    for (p, point) in modp::primes(2).into_iter().zip(POINTS.iter()) {
        let ap = specialize_mod_p(a, v, point, p);
        let bp = specialize_mod_p(b, v, point, p);
        if ap.len() != da + 1 || bp.len() != db + 1 {
            continue;
        }
        if modp::gcd(&ap, &bp, p).len() == 1 {
            return true;
        }
    }
    false
}

/// Squarefreeness test in `v` by specialization; `true` is a proof.
pub fn squarefree_mod_p(a: &MPoly, v: Var) -> bool {
    let d = a.degree(v) as usize;
    for (p, point) in modp::primes(2).into_iter().zip(POINTS.iter()) {
        let ap = specialize_mod_p(a, v, point, p);
        if ap.len() != d + 1 || (d as u64) >= p {
            continue;
        }
        let dp = modp::derivative(&ap, p);
        if modp::gcd(&ap, &dp, p).len() == 1 {
            return true;
        }
    }
    false
}

/// Content of `a` with respect to `v`: the gcd of its coefficients in `v`,
/// sign-normalized. The content of zero is zero.
pub fn content_in(a: &MPoly, v: Var) -> MPoly {
    let mut coeffs: Vec<MPoly> = a
        .coefficients(v)
        .into_iter()
        .filter(|c| !c.is_zero())
        .collect();
    coeffs.sort_by_key(|c| c.len());
    let mut g = MPoly::zero();
    for c in &coeffs {
        g = gcd(&g, c);
        if g.is_constant() && g.constant_value().is_some_and(|k| k.is_one()) {
            break;
        }
    }
    g
}

/// Primitive part with respect to `v` (content removed, sign normalized).
pub fn primitive_in(a: &MPoly, v: Var) -> MPoly {
    if a.is_zero() {
        return MPoly::zero();
    }
    let c = content_in(a, v);
    a.exact_div(&c).expect("content divides").normalize_sign()
}

/// Greatest common divisor over Z, with positive lex-leading coefficient.
/// gcd(0, 0) = 0.
pub fn gcd(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_zero() {
        return b.normalize_sign();
    }
    if b.is_zero() {
        return a.normalize_sign();
    }
    let mono = a.monomial_content().gcd(b.monomial_content());
    let a = a.div_monomial(a.monomial_content());
    let b = b.div_monomial(b.monomial_content());
    let icont = a.integer_content().gcd(&b.integer_content());
    let core = gcd_primitive_free(&a, &b);
    let scaled = core.scale(&icont);
    scaled.mul_monomial(mono, &BigInt::one()).normalize_sign()
}

/// gcd of polynomials with no monomial content; the integer content of the
/// result is left to the caller.
fn gcd_primitive_free(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_constant() || b.is_constant() {
        return MPoly::one();
    }
    if a == b || *a == -b {
        return a.div_int_exact(&a.integer_content()).normalize_sign();
    }
    // Main variable: present in at least one input, preferring variables
    // present in both with the smallest degree.
    let shared: Vec<Var> = Var::ALL
        .into_iter()
        .filter(|&v| a.contains(v) && b.contains(v))
        .collect();
    let v = match shared.iter().min_by_key(|&&v| a.degree(v).max(b.degree(v))) {
        Some(&v) => v,
        None => {
            // Disjoint variable sets: any common factor is a constant.
            return MPoly::one();
        }
    };
    for w in Var::ALL {
        if a.contains(w) != b.contains(w) {
            // A factor of both cannot involve w; reduce the one containing it.
            let (with, without) = if a.contains(w) { (a, b) } else { (b, a) };
            let c = content_in(with, w);
            return strip_int(&gcd(&c, without));
        }
    }
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let cg = strip_int(&gcd(&ca, &cb));
    let pa = a.exact_div(&ca).expect("content divides");
    let pb = b.exact_div(&cb).expect("content divides");
    if pa.degree(v) == 0 || pb.degree(v) == 0 || coprime_in(&pa, &pb, v) {
        return cg;
    }
    let last = last_subresultant(&pa.coefficients(v), &pb.coefficients(v));
    let g = MPoly::from_coefficients(v, &last);
    let g = if g.degree(v) == 0 {
        MPoly::one()
    } else {
        primitive_in(&g, v)
    };
    strip_int(&(&cg * &g))
}

fn strip_int(a: &MPoly) -> MPoly {
    let c = a.integer_content();
    if c.is_zero() {
        return a.clone();
    }
    a.div_int_exact(&c).normalize_sign()
}

/// Removes content with respect to `v` and repeated factors in `v`; a power
/// of `v` dividing the input is kept with multiplicity one. The sign is
/// fixed so that the lex-smallest term of the leading coefficient in `v` is
/// positive.
pub fn squarefree_primitive(a: &MPoly, v: Var) -> Result<MPoly> {
    if a.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let k = a.min_degree(v);
    let stripped = a.div_monomial(Monomial::var(v, k));
    let pp = if stripped.degree(v) == 0 {
        MPoly::one()
    } else {
        primitive_in(&stripped, v)
    };
    let sqf = if pp.degree(v) <= 1 || squarefree_mod_p(&pp, v) {
        pp
    } else {
        let g = gcd(&pp, &pp.derivative(v));
        if g.degree(v) == 0 {
            pp
        } else {
            pp.exact_div(&g).expect("gcd divides")
        }
    };
    let out = if k > 0 {
        sqf.mul_monomial(Monomial::var(v, 1), &BigInt::one())
    } else {
        sqf
    };
    let out = strip_int(&out);
    Ok(out.normalize_sign_trailing(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: Var) -> MPoly {
        MPoly::var(x)
    }
    fn c(k: i64) -> MPoly {
        MPoly::constant(k)
    }

    #[test]
    fn gcd_of_products() {
        let (x, y, psi) = (v(Var::X), v(Var::Y), v(Var::Psi));
        let common = &(&psi * &x) - &(&y + &c(1));
        let a = &common * &(&psi + &x);
        let b = &(&common * &common) * &(&y - &c(3));
        assert_eq!(gcd(&a, &b), common.normalize_sign());
        assert_eq!(gcd(&(&psi + &c(1)), &(&psi + &c(2))), c(1));
        assert_eq!(gcd(&c(6), &c(4)), c(2));
        assert_eq!(
            gcd(
                &(&x * &y).scale(&BigInt::from(4)),
                &(&x * &x).scale(&BigInt::from(6))
            ),
            x.scale(&BigInt::from(2))
        );
    }

    #[test]
    fn squarefree_examples() {
        let (f, x) = (v(Var::F), v(Var::X));
        let fm1 = &f - &c(1);
        assert_eq!(
            squarefree_primitive(&(&fm1 * &fm1).scale(&BigInt::from(4)), Var::F).unwrap(),
            fm1
        );
        let d = &(&f * &f) - &(&x * &x);
        assert_eq!(
            squarefree_primitive(&d.scale(&BigInt::from(6)), Var::F).unwrap(),
            d
        );
        let e = &(&f * &f) - &x;
        assert_eq!(
            squarefree_primitive(&(&e * &e).scale(&BigInt::from(2)), Var::F).unwrap(),
            e
        );
        assert_eq!(
            squarefree_primitive(&MPoly::zero(), Var::F),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn sign_convention() {
        let (f, x) = (v(Var::F), v(Var::X));
        // -( (1-x) f - 1 ) normalizes back to (1-x) f - 1.
        let p = &(&(&c(1) - &x) * &f) - &c(1);
        assert_eq!(squarefree_primitive(&-&p, Var::F).unwrap(), p);
    }

    #[test]
    fn content_wrt_variable() {
        let (psi, x) = (v(Var::Psi), v(Var::X));
        let p = &(&x * &x).pow(1) * &(&psi + &x);
        assert_eq!(content_in(&p, Var::Psi), &x * &x);
        assert_eq!(squarefree_primitive(&p, Var::Psi).unwrap(), &psi + &x);
    }
}
