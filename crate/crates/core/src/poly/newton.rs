use super::mpoly::MPoly;
use super::var::{Monomial, Var};
use crate::error::{Error, Result};

/// x-valuation of each coefficient of `m` in `z` (`None` for zero ones),
/// after removing the largest power of `z` dividing `m`.
pub fn valuations(m: &MPoly, z: Var) -> Vec<Option<u32>> {
    let k = m.min_degree(z);
    let stripped = m.div_monomial(Monomial::var(z, k));
    stripped
        .coefficients(z)
        .iter()
        .map(|c| (!c.is_zero()).then(|| c.min_degree(Var::X)))
        .collect()
}

/// Upper bound on the x-valuation of any nonzero power series root of `m`
/// in `z`: the largest finite slope of the lower Newton polygon of the
/// points (i, val_x(m_i)), rounded down. Powers of `z` are factored out
/// first since they only contribute the root 0.
pub fn vanishing_bound(m: &MPoly, z: Var) -> Result<usize> {
    if m.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let vals = valuations(m, z);
    let v0 = vals[0].expect("constant coefficient is nonzero after stripping z") as i64;
    let mut best: i64 = 0;
    for (i, v) in vals.iter().enumerate().skip(1) {
        if let Some(v) = v {
            let slope = (v0 - *v as i64).div_euclid(i as i64);
            best = best.max(slope);
        }
    }
    Ok(best as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> MPoly {
        MPoly::var(Var::Z)
    }
    fn xp(e: u32) -> MPoly {
        MPoly::var_pow(Var::X, e)
    }

    #[test]
    fn examples() {
        assert_eq!(vanishing_bound(&(&z() * &(&z() - &xp(3))), Var::Z), Ok(3));
        assert_eq!(vanishing_bound(&(&z() * &(&z() - &xp(1))), Var::Z), Ok(1));
        assert_eq!(
            vanishing_bound(&(&(&z() - &xp(2)) * &(&z() - &xp(5))), Var::Z),
            Ok(5)
        );
        assert_eq!(
            vanishing_bound(&MPoly::zero(), Var::Z),
            Err(Error::ZeroPolynomial)
        );
        assert_eq!(vanishing_bound(&z(), Var::Z), Ok(0));
    }

    #[test]
    fn fractional_slopes_round_down() {
        // z^2 - x^3: roots of valuation 3/2, none of them power series.
        let m = &(&z() * &z()) - &xp(3);
        assert_eq!(vanishing_bound(&m, Var::Z), Ok(1));
    }
}
