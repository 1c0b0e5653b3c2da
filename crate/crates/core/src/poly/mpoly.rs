use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::ring;
use super::var::{Monomial, Var, NVARS};

/// Sparse multivariate polynomial with arbitrary-precision integer
/// coefficients over the fixed alphabet [`Var`].
///
/// Terms are kept sorted by strictly decreasing monomial (lex order, see
/// [`Var`]) with no zero coefficients, so structural equality is
/// mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MPoly {
    terms: Vec<(Monomial, BigInt)>,
}

impl MPoly {
    pub fn zero() -> MPoly {
        MPoly { terms: Vec::new() }
    }

    pub fn one() -> MPoly {
        MPoly::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> MPoly {
        let c = c.into();
        if c.is_zero() {
            MPoly::zero()
        } else {
            MPoly {
                terms: vec![(Monomial::ONE, c)],
            }
        }
    }

    pub fn var(v: Var) -> MPoly {
        MPoly {
            terms: vec![(Monomial::var(v, 1), BigInt::one())],
        }
    }

    pub fn var_pow(v: Var, e: u32) -> MPoly {
        MPoly {
            terms: vec![(Monomial::var(v, e), BigInt::one())],
        }
    }

    pub fn term(c: impl Into<BigInt>, m: Monomial) -> MPoly {
        let c = c.into();
        if c.is_zero() {
            MPoly::zero()
        } else {
            MPoly {
                terms: vec![(m, c)],
            }
        }
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero)
    /// terms.
    pub fn from_terms<I>(terms: I) -> MPoly
    where
        I: IntoIterator<Item = (Monomial, BigInt)>,
    {
        let mut map: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (m, c) in terms {
            *map.entry(m).or_insert_with(BigInt::zero) += c;
        }
        let terms = map
            .into_iter()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        MPoly { terms }
    }

    /// Trusted constructor: terms already strictly decreasing and nonzero.
    fn from_sorted(terms: Vec<(Monomial, BigInt)>) -> MPoly {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        MPoly { terms }
    }

    pub fn terms(&self) -> &[(Monomial, BigInt)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == Monomial::ONE)
    }

    pub fn constant_value(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(m, c)] if *m == Monomial::ONE => Some(c.clone()),
            _ => None,
        }
    }

    /// Coefficient of the lex-greatest term.
    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|(m, _)| *m)
    }

    pub fn contains(&self, v: Var) -> bool {
        self.terms.iter().any(|(m, _)| m.exp(v) > 0)
    }

    pub fn vars(&self) -> Vec<Var> {
        Var::ALL.into_iter().filter(|&v| self.contains(v)).collect()
    }

    /// Degree in `v`; the zero polynomial has degree 0.
    pub fn degree(&self, v: Var) -> u32 {
        self.terms.iter().map(|(m, _)| m.exp(v)).max().unwrap_or(0)
    }

    /// Least exponent of `v` over all terms (0 for the zero polynomial).
    pub fn min_degree(&self, v: Var) -> u32 {
        self.terms.iter().map(|(m, _)| m.exp(v)).min().unwrap_or(0)
    }

    pub fn max_degrees(&self) -> [u32; NVARS] {
        let mut out = [0; NVARS];
        for (m, _) in &self.terms {
            for v in Var::ALL {
                out[v.index()] = out[v.index()].max(m.exp(v));
            }
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly::from_sorted(self.terms.iter().map(|(m, a)| (*m, a * c)).collect())
    }

    pub fn mul_monomial(&self, mono: Monomial, c: &BigInt) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        let degs = self.max_degrees();
        for v in Var::ALL {
            assert!(
                degs[v.index()] + mono.exp(v) <= 0xffff,
                "degree overflow in {v}"
            );
        }
        MPoly::from_sorted(
            self.terms
                .iter()
                .map(|(m, a)| (m.mul(mono), a * c))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> MPoly {
        ring::Ring::pow(self, e)
    }

    /// Coefficients with respect to `v`, indexed by the power of `v`.
    pub fn coefficients(&self, v: Var) -> Vec<MPoly> {
        if self.is_zero() {
            return Vec::new();
        }
        let d = self.degree(v) as usize;
        let mut buckets: Vec<Vec<(Monomial, BigInt)>> = vec![Vec::new(); d + 1];
        for (m, c) in &self.terms {
            let e = m.exp(v);
            buckets[e as usize].push((m.with_exp(v, 0), c.clone()));
        }
        buckets
            .into_iter()
            .map(|mut ts| {
                // Removing one variable from a lex-sorted list can break the
                // order only across different powers of `v`, which are now
                // separated into buckets; inside a bucket order is kept.
                ts.sort_by(|a, b| b.0.cmp(&a.0));
                MPoly::from_sorted(ts)
            })
            .collect()
    }

    /// Inverse of [`MPoly::coefficients`].
    pub fn from_coefficients(v: Var, coeffs: &[MPoly]) -> MPoly {
        let mut terms = Vec::new();
        for (i, c) in coeffs.iter().enumerate() {
            for (m, a) in &c.terms {
                debug_assert_eq!(m.exp(v), 0);
                terms.push((m.with_exp(v, i as u32), a.clone()));
            }
        }
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        MPoly::from_sorted(terms)
    }

    /// Leading coefficient with respect to `v` (a polynomial free of `v`).
    pub fn lead_coeff_in(&self, v: Var) -> MPoly {
        let d = self.degree(v);
        let mut ts: Vec<(Monomial, BigInt)> = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(v) == d)
            .map(|(m, c)| (m.with_exp(v, 0), c.clone()))
            .collect();
        ts.sort_by(|a, b| b.0.cmp(&a.0));
        MPoly::from_sorted(ts)
    }

    pub fn derivative(&self, v: Var) -> MPoly {
        let terms: Vec<_> = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(v) > 0)
            .map(|(m, c)| {
                let e = m.exp(v);
                (m.with_exp(v, e - 1), c * BigInt::from(e))
            })
            .collect();
        // Lowering one exponent by one keeps relative lex order among terms
        // that all contain `v`.
        MPoly::from_sorted(terms)
    }

    /// Substitutes the polynomial `value` for `v`.
    pub fn substitute(&self, v: Var, value: &MPoly) -> MPoly {
        if !self.contains(v) {
            return self.clone();
        }
        let coeffs = self.coefficients(v);
        let mut acc = MPoly::zero();
        for c in coeffs.iter().rev() {
            acc = &(&acc * value) + c;
        }
        acc
    }

    /// Sets `v` to an integer value.
    pub fn eval_int(&self, v: Var, value: &BigInt) -> MPoly {
        if !self.contains(v) {
            return self.clone();
        }
        if value.is_zero() {
            let ts = self
                .terms
                .iter()
                .filter(|(m, _)| m.exp(v) == 0)
                .cloned()
                .collect();
            return MPoly::from_sorted(ts);
        }
        let d = self.degree(v) as usize;
        let mut pows = Vec::with_capacity(d + 1);
        pows.push(BigInt::one());
        for i in 1..=d {
            let p = &pows[i - 1] * value;
            pows.push(p);
        }
        MPoly::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (m.with_exp(v, 0), c * &pows[m.exp(v) as usize])),
        )
    }

    /// Renames variable `from` to `to`; `to` must not already occur.
    pub fn rename(&self, from: Var, to: Var) -> MPoly {
        if from == to || !self.contains(from) {
            return self.clone();
        }
        assert!(!self.contains(to), "rename target {to} already occurs");
        MPoly::from_terms(self.terms.iter().map(|(m, c)| {
            let e = m.exp(from);
            (m.with_exp(from, 0).with_exp(to, e), c.clone())
        }))
    }

    /// Positive gcd of all integer coefficients (0 for the zero polynomial).
    pub fn integer_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides every coefficient by `c`, which must divide all of them.
    pub fn div_int_exact(&self, c: &BigInt) -> MPoly {
        if c.is_one() {
            return self.clone();
        }
        MPoly::from_sorted(
            self.terms
                .iter()
                .map(|(m, a)| {
                    let (q, r) = a.div_rem(c);
                    debug_assert!(r.is_zero(), "inexact integer division");
                    (*m, q)
                })
                .collect(),
        )
    }

    /// Greatest common monomial divisor of all terms.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        match it.next() {
            None => Monomial::ONE,
            Some((m0, _)) => it.fold(*m0, |acc, (m, _)| acc.gcd(*m)),
        }
    }

    pub fn div_monomial(&self, mono: Monomial) -> MPoly {
        if mono == Monomial::ONE {
            return self.clone();
        }
        MPoly::from_sorted(
            self.terms
                .iter()
                .map(|(m, c)| {
                    debug_assert!(mono.divides(*m));
                    (mono.div_of(*m), c.clone())
                })
                .collect(),
        )
    }

    /// Flips the sign so that the lex-leading coefficient is positive.
    pub fn normalize_sign(&self) -> MPoly {
        match self.leading_coeff() {
            Some(c) if c.is_negative() => -self,
            _ => self.clone(),
        }
    }

    /// Flips the sign so that, among the terms of highest degree in `v`,
    /// the lex-smallest one has a positive coefficient. For `(1-x)f - 1` this
    /// keeps the `+f` term positive.
    pub fn normalize_sign_trailing(&self, v: Var) -> MPoly {
        let d = self.degree(v);
        let trailing = self.terms.iter().rev().find(|(m, _)| m.exp(v) == d);
        match trailing {
            Some((_, c)) if c.is_negative() => -self,
            _ => self.clone(),
        }
    }

    /// Exact division; `None` if `divisor` does not divide `self` over Z.
    pub fn exact_div(&self, divisor: &MPoly) -> Option<MPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(MPoly::zero());
        }
        let (lm, lc) = &divisor.terms[0];
        if divisor.terms.len() == 1 {
            let mut out = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                if !lm.divides(*m) {
                    return None;
                }
                let (q, r) = c.div_rem(lc);
                if !r.is_zero() {
                    return None;
                }
                out.push((lm.div_of(*m), q));
            }
            return Some(MPoly::from_sorted(out));
        }
        // Cheap degree filter before the real work.
        let (da, db) = (self.max_degrees(), divisor.max_degrees());
        if (0..NVARS).any(|i| db[i] > da[i]) {
            return None;
        }
        let mut rem: BTreeMap<Monomial, BigInt> = self.terms.iter().cloned().collect();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            if !lm.divides(m) {
                return None;
            }
            let (q, r) = c.div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            let qm = lm.div_of(m);
            for (bm, bc) in &divisor.terms[1..] {
                let key = qm.mul(*bm);
                let prod = &q * bc;
                match rem.entry(key) {
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        *e.get_mut() -= prod;
                        if e.get().is_zero() {
                            e.remove();
                        }
                    }
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(-prod);
                    }
                }
            }
            quot.push((qm, q));
        }
        Some(MPoly::from_sorted(quot))
    }

    fn mul_impl(&self, other: &MPoly) -> MPoly {
        if self.is_zero() || other.is_zero() {
            return MPoly::zero();
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_monomial(*m, c);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_monomial(*m, c);
        }
        let (da, db) = (self.max_degrees(), other.max_degrees());
        for v in Var::ALL {
            assert!(
                da[v.index()] + db[v.index()] <= 0xffff,
                "degree overflow in {v}"
            );
        }
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc: HashMap<Monomial, BigInt> =
            HashMap::with_capacity(small.terms.len() * large.terms.len() / 2 + 1);
        for (ma, ca) in &small.terms {
            for (mb, cb) in &large.terms {
                let prod = ca * cb;
                match acc.entry(ma.mul(*mb)) {
                    std::collections::hash_map::Entry::Occupied(mut e) => *e.get_mut() += prod,
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(prod);
                    }
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        MPoly::from_sorted(terms)
    }

    fn add_impl(&self, other: &MPoly, negate_other: bool) -> MPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let c = if negate_other {
                        -&b[j].1
                    } else {
                        b[j].1.clone()
                    };
                    out.push((b[j].0, c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate_other {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let c = if negate_other { -&t.1 } else { t.1.clone() };
            out.push((t.0, c));
        }
        MPoly::from_sorted(out)
    }
}

impl ring::Ring for MPoly {
    fn zero() -> Self {
        MPoly::zero()
    }
    fn one() -> Self {
        MPoly::one()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        self.add_impl(other, false)
    }
    fn sub(&self, other: &Self) -> Self {
        self.add_impl(other, true)
    }
    fn mul(&self, other: &Self) -> Self {
        self.mul_impl(other)
    }
    fn neg(&self) -> Self {
        MPoly::from_sorted(self.terms.iter().map(|(m, c)| (*m, -c)).collect())
    }
    fn exact_div(&self, other: &Self) -> Option<Self> {
        MPoly::exact_div(self, other)
    }
}

impl<'a> Add<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        self.add_impl(rhs, false)
    }
}

impl<'a> Sub<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        self.add_impl(rhs, true)
    }
}

impl<'a> Mul<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        self.mul_impl(rhs)
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        ring::Ring::neg(self)
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        ring::Ring::neg(&self)
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(self, rhs: MPoly) -> MPoly {
        &self + &rhs
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(self, rhs: MPoly) -> MPoly {
        &self - &rhs
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        &self * &rhs
    }
}

impl From<i64> for MPoly {
    fn from(c: i64) -> MPoly {
        MPoly::constant(c)
    }
}

impl From<Var> for MPoly {
    fn from(v: Var) -> MPoly {
        MPoly::var(v)
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: Monomial) -> fmt::Result {
    let mut first = true;
    for v in Var::ALL {
        let e = m.exp(v);
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "{v}")?;
        } else {
            write!(f, "{v}^{e}")?;
        }
    }
    Ok(())
}

/// Canonical text form, e.g. `psi^2*y^2 + psi*g*x*y - g*x + y`. The output
/// is accepted back by the equation parser.
impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if *m == Monomial::ONE {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, *m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> MPoly {
        MPoly::var(Var::X)
    }
    fn y() -> MPoly {
        MPoly::var(Var::Y)
    }

    #[test]
    fn canonical_form_is_construction_order_independent() {
        let a = &(&x() + &y()) * &(&x() - &y());
        let b = &(&x() * &x()) - &(&y() * &y());
        assert_eq!(a, b);
        let c = MPoly::from_terms(vec![
            (Monomial::var(Var::Y, 2), BigInt::from(-1)),
            (Monomial::var(Var::X, 2), BigInt::from(1)),
            (Monomial::var(Var::X, 1), BigInt::from(0)),
        ]);
        assert_eq!(a, c);
    }

    #[test]
    fn subtraction_to_zero_is_empty() {
        let p = &(&x() * &y()) + &MPoly::constant(3);
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn exact_division_roundtrip_and_failure() {
        let a = &(&x() + &y()).pow(3) * &(&x() - &MPoly::constant(2));
        let b = (&x() + &y()).pow(2);
        let q = a.exact_div(&b).unwrap();
        assert_eq!(&q * &b, a);
        assert!(a.exact_div(&(&x() + &MPoly::constant(7))).is_none());
        assert!(MPoly::constant(3).exact_div(&MPoly::constant(2)).is_none());
    }

    #[test]
    fn coefficients_roundtrip() {
        let p = &(&x() * &y()).pow(2) + &(&MPoly::var(Var::Psi) * &x());
        let cs = p.coefficients(Var::X);
        assert_eq!(cs.len(), 3);
        assert_eq!(MPoly::from_coefficients(Var::X, &cs), p);
    }

    #[test]
    fn substitute_and_eval() {
        let p = &(&x() * &x()) - &y();
        let s = p.substitute(Var::X, &(&y() + &MPoly::one()));
        assert_eq!(s, &(&(&y() * &y()) + &y()) + &MPoly::one());
        assert_eq!(
            p.eval_int(Var::X, &BigInt::from(3)),
            &MPoly::constant(9) - &y()
        );
    }

    #[test]
    fn display_is_readable() {
        let p = &(&MPoly::constant(-2) * &x()) + &MPoly::constant(5);
        assert_eq!(p.to_string(), "-2*x + 5");
    }
}
