//! Exact evaluation of P-recursive sequences.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::holonomic::PRec;
use crate::poly::upoly;

/// An exact term of a sequence.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SequenceValue {
    pub index: u64,
    /// `p` or `p/q` in lowest terms.
    pub value: String,
    /// Decimal digits of the numerator, sign excluded.
    pub digits: usize,
}

impl SequenceValue {
    pub fn new(index: u64, v: &BigRational) -> SequenceValue {
        let value = if v.is_integer() {
            v.numer().to_string()
        } else {
            v.to_string()
        };
        let digits = v.numer().magnitude().to_string().len();
        SequenceValue {
            index,
            value,
            digits,
        }
    }

    pub fn is_integer(&self) -> bool {
        !self.value.contains('/')
    }
}

/// a(G) from the recurrence and its initial values.
pub fn unroll(r: &PRec, g: u64) -> Result<SequenceValue> {
    let g = usize::try_from(g).map_err(|_| Error::InvalidIndex(i64::MAX))?;
    let s = r.order();
    if g < r.initials.len() {
        return Ok(SequenceValue::new(g as u64, &r.initials[g]));
    }
    // Numerators over one running denominator keep the loop gcd-free.
    let mut window: Vec<BigRational> = r.initials[r.initials.len() - s..].to_vec();
    let l = window.iter().fold(BigInt::one(), |acc, c| {
        num_integer::lcm(acc, c.denom().clone())
    });
    let mut nums: Vec<BigInt> = window
        .drain(..)
        .map(|c| (c * BigRational::from_integer(l.clone())).to_integer())
        .collect();
    let mut den = l;
    for k in r.initials.len()..=g {
        let n = k - s;
        let nn = BigInt::from(n);
        let lead = upoly::eval(r.leading(), &nn);
        if lead.is_zero() || r.exceptional.contains(&(n as u64)) {
            return Err(Error::MissingInitials(k));
        }
        let mut acc = BigInt::zero();
        for t in 0..s {
            let q = upoly::eval(&r.coeffs[t], &nn);
            if !q.is_zero() {
                acc += q * &nums[t];
            }
        }
        // a(k) = -acc / (den * lead); bring the window to the new denominator.
        for x in nums.iter_mut() {
            *x *= &lead;
        }
        den *= &lead;
        if lead < BigInt::zero() {
            for x in nums.iter_mut() {
                *x = -&*x;
            }
            den = -den;
            acc = -acc;
        }
        nums.remove(0);
        nums.push(-acc);
        if k % 64 == 0 {
            let g = nums
                .iter()
                .fold(den.clone(), |g, x| num_integer::Integer::gcd(&g, x));
            if !g.is_one() {
                den /= &g;
                for x in nums.iter_mut() {
                    *x /= &g;
                }
            }
        }
    }
    let v = BigRational::new(nums.pop().unwrap(), den);
    Ok(SequenceValue::new(g as u64, &v))
}

/// Closed form for the Tutte counts: 1 at n = 0, otherwise
/// 2 (3n+3)(3n+4)...(4n+1) / (n+1)!, the product being empty at n = 1.
pub fn tutte_closed_form(n: i64) -> Result<SequenceValue> {
    if n < 0 {
        return Err(Error::InvalidIndex(n));
    }
    if n == 0 {
        return Ok(SequenceValue::new(0, &BigRational::one()));
    }
    let num: BigInt = (3 * n + 3..=4 * n + 1)
        .map(BigInt::from)
        .product::<BigInt>()
        * 2;
    let den: BigInt = (1..=n + 1).map(BigInt::from).product();
    Ok(SequenceValue::new(n as u64, &BigRational::new(num, den)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::holonomic::RecOrigin;
    use crate::poly::UPoly;

    fn rec(coeffs: Vec<UPoly>, initials: Vec<BigRational>) -> PRec {
        PRec {
            coeffs,
            initials,
            exceptional: vec![],
            origin: RecOrigin::Ode,
        }
    }

    fn int(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    #[test]
    fn constant_and_factorial() {
        let one = rec(vec![vec![(-1).into()], vec![1.into()]], vec![int(1)]);
        assert_eq!(unroll(&one, 1000).unwrap().value, "1");
        let fact = rec(
            vec![vec![(-1).into()], vec![1.into(), 1.into()]],
            vec![int(1)],
        );
        assert_eq!(unroll(&fact, 5).unwrap().value, "1/120");
    }

    #[test]
    fn tutte_values() {
        let r = rec(
            vec![
                upoly::trimmed([-120, -496, -640, -256].map(BigInt::from).to_vec()),
                upoly::trimmed([120, 222, 135, 27].map(BigInt::from).to_vec()),
            ],
            vec![int(1)],
        );
        assert_eq!(unroll(&r, 4).unwrap().value, "68");
        for n in 0..=120 {
            assert_eq!(unroll(&r, n).unwrap(), tutte_closed_form(n as i64).unwrap());
        }
        let doubled = PRec {
            initials: vec![int(2)],
            ..r.clone()
        };
        let a = unroll(&r, 150).unwrap().value.parse::<BigInt>().unwrap();
        let b = unroll(&doubled, 150)
            .unwrap()
            .value
            .parse::<BigInt>()
            .unwrap();
        assert_eq!(b, a * 2);
    }

    #[test]
    fn closed_form_small() {
        let v: Vec<String> = (0..=4)
            .map(|n| tutte_closed_form(n).unwrap().value)
            .collect();
        assert_eq!(v, ["1", "1", "3", "13", "68"]);
        assert_eq!(tutte_closed_form(-1), Err(Error::InvalidIndex(-1)));
    }

    #[test]
    fn singular_index_needs_initials() {
        // (n - 2) a(n + 1) = a(n): a(3) cannot be computed.
        let r = PRec {
            coeffs: vec![vec![(-1).into()], vec![(-2).into(), 1.into()]],
            initials: vec![int(1), int(-1), int(1)],
            exceptional: vec![],
            origin: RecOrigin::Ode,
        };
        assert_eq!(unroll(&r, 3), Err(Error::MissingInitials(3)));
        let covered = PRec {
            initials: vec![int(1), int(-1), int(1), int(7)],
            exceptional: vec![2],
            ..r
        };
        assert_eq!(unroll(&covered, 4).unwrap().value, "7");
    }
}
