use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ring;
use super::upoly::{self, UPoly};

/// Univariate rational function over Q in reduced integer form.
///
/// Canonical form: numerator and denominator are integer polynomials with
/// no common factor of positive degree, no common integer content, and the
/// denominator has a positive leading coefficient. Zero is `0/1`. Equality
/// is therefore structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: UPoly,
    den: UPoly,
}

impl RatFunc {
    pub fn zero() -> RatFunc {
        RatFunc {
            num: Vec::new(),
            den: upoly::one(),
        }
    }

    pub fn one() -> RatFunc {
        RatFunc {
            num: upoly::one(),
            den: upoly::one(),
        }
    }

    pub fn from_int(c: impl Into<BigInt>) -> RatFunc {
        RatFunc {
            num: upoly::constant(c),
            den: upoly::one(),
        }
    }

    pub fn from_rational(c: &BigRational) -> RatFunc {
        RatFunc::from_parts_reduced(
            upoly::constant(c.numer().clone()),
            upoly::constant(c.denom().clone()),
        )
    }

    pub fn from_poly(p: UPoly) -> RatFunc {
        let p = upoly::trimmed(p);
        RatFunc {
            num: p,
            den: upoly::one(),
        }
    }

    /// The variable itself.
    pub fn t() -> RatFunc {
        RatFunc::from_poly(vec![BigInt::zero(), BigInt::one()])
    }

    /// Builds `num/den`, reducing fully. Panics on a zero denominator.
    pub fn new(num: UPoly, den: UPoly) -> RatFunc {
        let num = upoly::trimmed(num);
        let den = upoly::trimmed(den);
        assert!(!den.is_empty(), "zero denominator");
        if num.is_empty() {
            return RatFunc::zero();
        }
        let g = upoly::gcd(&num, &den);
        if upoly::is_one(&g) {
            return RatFunc::from_parts_reduced(num, den);
        }
        let num = upoly::div_exact(&num, &g).expect("gcd divides numerator");
        let den = upoly::div_exact(&den, &g).expect("gcd divides denominator");
        RatFunc::from_parts_reduced(num, den)
    }

    /// Normalizes content and sign, assuming no common factor of positive
    /// degree.
    fn from_parts_reduced(num: UPoly, den: UPoly) -> RatFunc {
        if num.is_empty() {
            return RatFunc::zero();
        }
        let mut c = upoly::content(&num).gcd(&upoly::content(&den));
        if den.last().unwrap().is_negative() {
            c = -c;
        }
        if c.is_one() {
            return RatFunc { num, den };
        }
        RatFunc {
            num: upoly::div_scalar_exact(&num, &c),
            den: upoly::div_scalar_exact(&den, &c),
        }
    }

    pub fn num(&self) -> &UPoly {
        &self.num
    }

    pub fn den(&self) -> &UPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.len() == 1
    }

    /// Denominator does not vanish at 0.
    pub fn is_regular_at_zero(&self) -> bool {
        !self.den[0].is_zero()
    }

    /// Value at 0, `None` at a pole.
    pub fn value_at_zero(&self) -> Option<BigRational> {
        if !self.is_regular_at_zero() {
            return None;
        }
        let n = self.num.first().cloned().unwrap_or_default();
        Some(BigRational::new(n, self.den[0].clone()))
    }

    pub fn eval(&self, t: &BigRational) -> Option<BigRational> {
        let d = upoly::eval_rat(&self.den, t);
        if d.is_zero() {
            return None;
        }
        Some(upoly::eval_rat(&self.num, t) / d)
    }

    /// Order of vanishing at 0 of the numerator minus that of the
    /// denominator; `None` for zero.
    pub fn valuation(&self) -> Option<i64> {
        let v = |p: &UPoly| p.iter().position(|c| !c.is_zero()).unwrap_or(0) as i64;
        if self.is_zero() {
            return None;
        }
        Some(v(&self.num) - v(&self.den))
    }

    /// First `n` Taylor coefficients at 0; requires regularity.
    pub fn taylor(&self, n: usize) -> Option<Vec<BigRational>> {
        if !self.is_regular_at_zero() {
            return None;
        }
        let d0 = BigRational::from_integer(self.den[0].clone());
        let mut out: Vec<BigRational> = Vec::with_capacity(n);
        for j in 0..n {
            let mut acc = BigRational::from_integer(self.num.get(j).cloned().unwrap_or_default());
            for i in 1..=j.min(self.den.len() - 1) {
                if !self.den[i].is_zero() {
                    acc -= BigRational::from_integer(self.den[i].clone()) * &out[j - i];
                }
            }
            out.push(acc / &d0);
        }
        Some(out)
    }

    pub fn scale_rational(&self, c: &BigRational) -> RatFunc {
        if c.is_zero() || self.is_zero() {
            return RatFunc::zero();
        }
        RatFunc::from_parts_reduced(
            upoly::scale(&self.num, c.numer()),
            upoly::scale(&self.den, c.denom()),
        )
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return RatFunc::new(upoly::add(&self.num, &other.num), self.den.clone());
        }
        if self.is_polynomial() && other.is_polynomial() {
            let n = upoly::add(
                &upoly::scale(&self.num, &other.den[0]),
                &upoly::scale(&other.num, &self.den[0]),
            );
            let d = upoly::scale(&self.den, &other.den[0]);
            return RatFunc::from_parts_reduced(upoly::trimmed(n), d);
        }
        let g = upoly::gcd(&self.den, &other.den);
        if g.len() == 1 {
            let n = upoly::add(
                &upoly::mul(&self.num, &other.den),
                &upoly::mul(&other.num, &self.den),
            );
            let n = upoly::trimmed(n);
            return RatFunc::from_parts_reduced(n, upoly::mul(&self.den, &other.den));
        }
        let b1 = upoly::div_exact(&self.den, &g).unwrap();
        let d1 = upoly::div_exact(&other.den, &g).unwrap();
        let t = upoly::add(&upoly::mul(&self.num, &d1), &upoly::mul(&other.num, &b1));
        if t.is_empty() {
            return RatFunc::zero();
        }
        let g2 = upoly::gcd(&t, &g);
        let (t, gr) = if g2.len() == 1 {
            (t, g)
        } else {
            (
                upoly::div_exact(&t, &g2).unwrap(),
                upoly::div_exact(&g, &g2).unwrap(),
            )
        };
        RatFunc::from_parts_reduced(t, upoly::mul(&upoly::mul(&b1, &d1), &gr))
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: upoly::neg(&self.num),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero();
        }
        let reduce = |n: &UPoly, d: &UPoly| -> (UPoly, UPoly) {
            if d.len() == 1 || n.len() == 1 {
                return (n.clone(), d.clone());
            }
            let g = upoly::gcd(n, d);
            if g.len() == 1 {
                (n.clone(), d.clone())
            } else {
                (
                    upoly::div_exact(n, &g).unwrap(),
                    upoly::div_exact(d, &g).unwrap(),
                )
            }
        };
        let (a, d) = reduce(&self.num, &other.den);
        let (c, b) = reduce(&other.num, &self.den);
        RatFunc::from_parts_reduced(upoly::mul(&a, &c), upoly::mul(&b, &d))
    }

    pub fn inv(&self) -> Option<RatFunc> {
        if self.is_zero() {
            return None;
        }
        Some(RatFunc::from_parts_reduced(
            self.den.clone(),
            self.num.clone(),
        ))
    }

    pub fn div(&self, other: &RatFunc) -> Option<RatFunc> {
        Some(self.mul(&other.inv()?))
    }

    pub fn derivative(&self) -> RatFunc {
        if self.is_polynomial() {
            return RatFunc::from_parts_reduced(upoly::derivative(&self.num), self.den.clone());
        }
        let n = upoly::sub(
            &upoly::mul(&upoly::derivative(&self.num), &self.den),
            &upoly::mul(&self.num, &upoly::derivative(&self.den)),
        );
        RatFunc::new(n, upoly::mul(&self.den, &self.den))
    }

    /// Substitutes t + s for t.
    pub fn shift(&self, s: &BigInt) -> RatFunc {
        RatFunc::from_parts_reduced(
            upoly::taylor_shift(&self.num, s),
            upoly::taylor_shift(&self.den, s),
        )
    }

    pub fn pow(&self, e: u32) -> RatFunc {
        RatFunc {
            num: upoly::pow(&self.num, e),
            den: upoly::pow(&self.den, e),
        }
        .renormalize_sign()
    }

    fn renormalize_sign(self) -> RatFunc {
        if self.num.is_empty() {
            return RatFunc::zero();
        }
        RatFunc::from_parts_reduced(self.num, self.den)
    }

    /// Renders with the variable named `v`.
    pub fn to_string_in(&self, v: &str) -> String {
        let n = upoly::to_string(&self.num, v);
        if upoly::is_one(&self.den) {
            return n;
        }
        let wrap = |s: String, p: &UPoly| {
            if p.iter().filter(|c| !c.is_zero()).count() > 1 {
                format!("({s})")
            } else {
                s
            }
        };
        format!(
            "{}/{}",
            wrap(n, &self.num),
            wrap(upoly::to_string(&self.den, v), &self.den)
        )
    }
}

impl ring::Ring for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn is_zero(&self) -> bool {
        self.num.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        RatFunc::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        RatFunc::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        RatFunc::mul(self, other)
    }
    fn neg(&self) -> Self {
        RatFunc::neg(self)
    }
    fn exact_div(&self, other: &Self) -> Option<Self> {
        self.div(other)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("y"))
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> UPoly {
        upoly::trimmed(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn canonical_form() {
        let a = RatFunc::new(p(&[2, -2]), p(&[-4, 4]));
        assert_eq!(
            a,
            RatFunc::from_rational(&BigRational::new((-1).into(), 2.into()))
        );
        let b = RatFunc::new(p(&[1, 1]), p(&[1, 0, -1]));
        assert_eq!(b, RatFunc::new(p(&[1]), p(&[1, -1])));
        assert_eq!(b.den(), &p(&[-1, 1]));
    }

    #[test]
    fn field_identities() {
        let a = RatFunc::new(p(&[1, 2]), p(&[1, -1]));
        let b = RatFunc::new(p(&[3]), p(&[1, -1, 0, 2]));
        let s = a.add(&b);
        assert_eq!(s.sub(&b), a);
        let m = a.mul(&b);
        assert_eq!(m.div(&b).unwrap(), a);
        assert_eq!(a.sub(&a), RatFunc::zero());
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(
            RatFunc::from_rational(&half).add(&RatFunc::from_rational(&half)),
            RatFunc::one()
        );
    }

    #[test]
    fn regularity_and_taylor() {
        let g = RatFunc::new(p(&[1]), p(&[1, -1]));
        assert_eq!(g.value_at_zero(), Some(BigRational::one()));
        let t = g.taylor(4).unwrap();
        assert!(t.iter().all(|c| c.is_one()));
        let pole = RatFunc::new(p(&[1]), p(&[0, 1]));
        assert!(!pole.is_regular_at_zero());
        assert_eq!(pole.value_at_zero(), None);
        let y_over = RatFunc::new(p(&[0, 1]), p(&[1, 1]));
        assert_eq!(y_over.value_at_zero(), Some(BigRational::zero()));
    }

    #[test]
    fn calculus() {
        let a = RatFunc::new(p(&[1]), p(&[1, -1]));
        assert_eq!(a.derivative(), a.mul(&a));
        assert_eq!(
            RatFunc::from_poly(p(&[0, 0, 1])).derivative(),
            RatFunc::from_poly(p(&[0, 2]))
        );
        assert_eq!(a.shift(&BigInt::one()), RatFunc::new(p(&[1]), p(&[0, -1])));
    }

    #[test]
    fn rendering() {
        assert_eq!(RatFunc::new(p(&[1]), p(&[1, -1])).to_string(), "-1/(y - 1)");
        assert_eq!(RatFunc::from_poly(p(&[0, 0, 3])).to_string(), "3*y^2");
    }
}
