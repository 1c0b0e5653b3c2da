//! Guessing a polynomial equation P(f, x) = 0 satisfied by a power series
//! from finitely many of its coefficients.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::series::eval_fx;
use crate::poly::upoly;
use crate::poly::{squarefree_primitive, MPoly, Monomial, QSeries, Var};

/// A polynomial equation in f and x together with the series branch it
/// was fitted to.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgEq {
    pub p: MPoly,
    pub branch: QSeries,
    pub deg_f: u32,
    pub deg_x: u32,
    /// dP/df does not vanish at (branch[0], 0), so the branch is the unique
    /// series root with that constant term.
    pub hensel: bool,
}

impl AlgEq {
    /// Wraps `p` (any polynomial in f, x) after normalizing it; checks that
    /// it annihilates `branch`.
    pub fn new(p: MPoly, branch: QSeries) -> Result<AlgEq> {
        if p.vars().iter().any(|v| *v != Var::F && *v != Var::X) || p.degree(Var::F) == 0 {
            return Err(Error::InvalidEquation(format!(
                "not a polynomial in f and x: {p}"
            )));
        }
        let p = squarefree_primitive(&p, Var::F)?;
        let n = branch.len();
        if let Some(k) = first_nonzero(&eval_fx(&p, Var::F, branch.coeffs(), n)) {
            return Err(Error::RefutedGuess(k));
        }
        let hensel = branch.coeffs().first().is_some_and(|c0| {
            let d = p.derivative(Var::F).eval_int(Var::X, &BigInt::zero());
            !eval_fx(&d, Var::F, std::slice::from_ref(c0), 1)[0].is_zero()
        });
        Ok(AlgEq {
            deg_f: p.degree(Var::F),
            deg_x: p.degree(Var::X),
            p,
            branch,
            hensel,
        })
    }

    /// Series-root order of P at the branch: valuation of dP/df along it.
    pub fn hensel_slack(&self) -> Option<usize> {
        let d = self.p.derivative(Var::F);
        first_nonzero(&eval_fx(
            &d,
            Var::F,
            self.branch.coeffs(),
            self.branch.len(),
        ))
    }
}

pub(crate) fn first_nonzero(s: &[BigRational]) -> Option<usize> {
    s.iter().position(|c| !c.is_zero())
}

/// Guesses an equation of degree at most `max_f` in f and `max_x` in x.
/// Supports are tried in order of degree in f, then degree in x; a support
/// is admissible only if the number of series terms exceeds the number of
/// unknowns by at least `margin`. `Ok(None)` means no admissible support
/// fits.
pub fn guess_algeq(s: &QSeries, max_f: u32, max_x: u32, margin: usize) -> Result<Option<AlgEq>> {
    if max_f < 1 {
        return Err(Error::InvalidBounds(
            "the degree in f must be at least 1".into(),
        ));
    }
    if margin < 4 {
        return Err(Error::InvalidBounds("the margin must be at least 4".into()));
    }
    let len = s.len();
    let d = s
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let t: Vec<BigInt> = s
        .coeffs()
        .iter()
        .map(|c| (c * BigRational::from_integer(d.clone())).to_integer())
        .collect();
    let mut pows: Vec<Vec<BigInt>> = vec![upoly::constant(1)];
    for df in 1..=max_f as usize {
        pows.push(upoly::mul_trunc(&pows[df - 1], &t, len));
        for dx in 0..=max_x as usize {
            let unknowns = (df + 1) * (dx + 1);
            if len < unknowns + margin {
                break;
            }
            if let Some(eq) = try_support(s, &pows, &d, df, dx) {
                return Ok(Some(eq));
            }
        }
    }
    Ok(None)
}

fn try_support(
    s: &QSeries,
    pows: &[Vec<BigInt>],
    d: &BigInt,
    df: usize,
    dx: usize,
) -> Option<AlgEq> {
    let len = s.len();
    let cols: Vec<(usize, usize)> = (0..=df)
        .flat_map(|i| (0..=dx).map(move |j| (i, j)))
        .collect();
    let dpow: Vec<BigInt> = (0..=df).map(|e| num_traits::pow(d.clone(), e)).collect();
    let rows: Vec<Vec<BigInt>> = (0..len)
        .map(|k| {
            cols.iter()
                .map(|&(i, j)| {
                    if k < j {
                        return BigInt::zero();
                    }
                    let c = pows[i].get(k - j).cloned().unwrap_or_default();
                    c * &dpow[df - i]
                })
                .collect()
        })
        .collect();
    let mut basis = linalg::nullspace(&rows, cols.len());
    basis.sort_by_key(|v| v.iter().map(|c| c.abs()).max().unwrap_or_default());
    for v in basis {
        let p = MPoly::from_terms(cols.iter().zip(&v).filter(|(_, c)| !c.is_zero()).map(
            |(&(i, j), c)| {
                (
                    Monomial::var(Var::F, i as u32).mul(Monomial::var(Var::X, j as u32)),
                    c.clone(),
                )
            },
        ));
        if p.degree(Var::F) == 0 {
            continue;
        }
        if let Ok(eq) = AlgEq::new(p, s.clone()) {
            return Some(eq);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fx(s: &str) -> MPoly {
        crate::parse::parse_poly(s).unwrap()
    }

    #[test]
    fn geometric() {
        let s = QSeries::from_ints([1; 8]);
        let eq = guess_algeq(&s, 1, 1, 4).unwrap().unwrap();
        assert_eq!(eq.p, fx("(1-x)*f - 1"));
        assert!(eq.hensel);
    }

    #[test]
    fn catalan() {
        let s = QSeries::from_ints([1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]);
        let eq = guess_algeq(&s, 2, 1, 4).unwrap().unwrap();
        assert_eq!(eq.p, fx("x*f^2 - f + 1"));
        assert_eq!((eq.deg_f, eq.deg_x), (2, 1));
    }

    #[test]
    fn too_short_fails() {
        let s = QSeries::from_ints([1, 1, 3, 13]);
        assert_eq!(guess_algeq(&s, 4, 4, 6).unwrap(), None);
    }

    #[test]
    fn bad_bounds() {
        let s = QSeries::from_ints([1; 8]);
        assert!(matches!(
            guess_algeq(&s, 0, 1, 6),
            Err(Error::InvalidBounds(_))
        ));
        assert!(matches!(
            guess_algeq(&s, 1, 1, 3),
            Err(Error::InvalidBounds(_))
        ));
    }

    #[test]
    fn rational_coefficients() {
        // 1/(1 - x/2)
        let s = QSeries::new(
            (0..10)
                .map(|k| BigRational::new(1.into(), BigInt::from(2).pow(k)))
                .collect(),
        );
        let eq = guess_algeq(&s, 1, 1, 6).unwrap().unwrap();
        assert_eq!(eq.p, fx("(2-x)*f - 2"));
    }
}
