//! Truncated power series in x.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::mpoly::MPoly;
use super::ratfunc::RatFunc;
use super::upoly::{self, UPoly};
use super::var::Var;
use crate::error::{Error, Result};

/// Series in x truncated at order K (K+1 stored coefficients), each a
/// rational function of y regular at y=0.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SeriesX {
    coeffs: Vec<RatFunc>,
}

impl SeriesX {
    /// Fails with `PoleAtYZero(k)` on the first coefficient singular at y=0.
    pub fn new(coeffs: Vec<RatFunc>) -> Result<SeriesX> {
        assert!(
            !coeffs.is_empty(),
            "a truncated series stores at least one coefficient"
        );
        if let Some(k) = coeffs.iter().position(|c| !c.is_regular_at_zero()) {
            return Err(Error::PoleAtYZero(k));
        }
        Ok(SeriesX { coeffs })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[RatFunc] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &RatFunc {
        &self.coeffs[k]
    }

    pub fn truncate(&self, k: usize) -> SeriesX {
        SeriesX {
            coeffs: self.coeffs[..=k.min(self.order())].to_vec(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(RatFunc::is_zero)
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }
}

/// Series in x truncated at order K with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct QSeries {
    coeffs: Vec<BigRational>,
}

impl QSeries {
    pub fn new(coeffs: Vec<BigRational>) -> QSeries {
        assert!(
            !coeffs.is_empty(),
            "a truncated series stores at least one coefficient"
        );
        QSeries { coeffs }
    }

    pub fn from_ints<I: IntoIterator<Item = i64>>(it: I) -> QSeries {
        QSeries::new(
            it.into_iter()
                .map(|c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn from_bigints(it: &[BigInt]) -> QSeries {
        QSeries::new(
            it.iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn prefix(&self, n: usize) -> QSeries {
        QSeries {
            coeffs: self.coeffs[..n.min(self.len())].to_vec(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> QSeries {
        QSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Integer values if every coefficient is integral.
    pub fn as_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }
}

/// Truncated product of rational series, `n` coefficients.
pub fn qmul(a: &[BigRational], b: &[BigRational], n: usize) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); n];
    for (i, x) in a.iter().enumerate().take(n) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// Evaluates a polynomial in {f, x} at a rational series (f -> s), exactly,
/// returning the first `n` coefficients of the result. Integer arithmetic
/// after clearing one common denominator.
pub fn eval_fx(p: &MPoly, f: Var, s: &[BigRational], n: usize) -> Vec<BigRational> {
    let d = s.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let si: Vec<BigInt> = s
        .iter()
        .take(n)
        .map(|c| (c * BigRational::from_integer(d.clone())).to_integer())
        .collect();
    let coeffs = p.coefficients(f);
    let top = coeffs.len().saturating_sub(1) as u32;
    // P(s) = sum_i c_i(x) (si/d)^i = D^{-top} sum_i c_i(x) si^i d^{top-i}
    let mut acc: Vec<BigInt> = Vec::new();
    for (i, c) in coeffs.iter().enumerate().rev() {
        acc = upoly::mul_trunc(&acc, &si, n);
        let cx = poly_in_x(c, n);
        let dpow = num_traits::pow(d.clone(), (top - i as u32) as usize);
        acc = upoly::add(&acc, &upoly::scale(&cx, &dpow));
    }
    let scale = BigRational::new(BigInt::one(), num_traits::pow(d, top as usize));
    (0..n)
        .map(|k| BigRational::from_integer(acc.get(k).cloned().unwrap_or_default()) * &scale)
        .collect()
}

/// Dense coefficients in x (truncated to `n`) of a polynomial in x alone.
fn poly_in_x(c: &MPoly, n: usize) -> UPoly {
    let mut out = vec![BigInt::zero(); (c.degree(Var::X) as usize + 1).min(n)];
    for (m, a) in c.terms() {
        let e = m.exp(Var::X) as usize;
        debug_assert_eq!(
            m.total_degree() as usize,
            e,
            "expected a polynomial in x only"
        );
        if e < n {
            out[e] += a;
        }
    }
    upoly::trimmed(out)
}

/// Truncated series in x with coefficients in Z[y] over one shared
/// denominator in Z[y]. Used for bulk evaluation without per-coefficient
/// gcds.
#[derive(Clone, Debug)]
pub struct CommonDen {
    pub num: Vec<UPoly>,
    pub den: UPoly,
}

impl CommonDen {
    pub fn from_series(s: &SeriesX, n: usize) -> CommonDen {
        let mut den = upoly::one();
        for c in s.coeffs().iter().take(n) {
            let g = upoly::gcd(&den, c.den());
            let q = upoly::div_exact(c.den(), &g).unwrap();
            den = upoly::mul(&den, &q);
        }
        let num = s
            .coeffs()
            .iter()
            .take(n)
            .map(|c| upoly::mul(c.num(), &upoly::div_exact(&den, c.den()).unwrap()))
            .collect();
        CommonDen { num, den }
    }

    pub fn from_rationals(s: &[BigRational], n: usize) -> CommonDen {
        let d = s
            .iter()
            .take(n)
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = s
            .iter()
            .take(n)
            .map(|c| upoly::constant((c * BigRational::from_integer(d.clone())).to_integer()))
            .collect();
        CommonDen {
            num,
            den: upoly::constant(d),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|c| c.is_empty())
    }

    pub fn first_nonzero(&self) -> Option<usize> {
        self.num.iter().position(|c| !c.is_empty())
    }

    pub fn to_series(&self) -> Result<SeriesX> {
        SeriesX::new(
            self.num
                .iter()
                .map(|c| RatFunc::new(c.clone(), self.den.clone()))
                .collect(),
        )
    }
}

fn series_mul_num(a: &[UPoly], b: &[UPoly], n: usize) -> Vec<UPoly> {
    let mut out: Vec<UPoly> = vec![Vec::new(); n];
    for (k, slot) in out.iter_mut().enumerate() {
        let mut acc: UPoly = Vec::new();
        for i in 0..=k {
            if i < a.len() && k - i < b.len() && !a[i].is_empty() && !b[k - i].is_empty() {
                acc = upoly::add(&acc, &upoly::mul(&a[i], &b[k - i]));
            }
        }
        *slot = acc;
    }
    out
}

/// Multiplies a series numerator by a polynomial c(x, y) (no other
/// variables), truncating to `n` coefficients.
fn mul_by_xy(c: &MPoly, s: &[UPoly], n: usize) -> Vec<UPoly> {
    let mut out: Vec<UPoly> = vec![Vec::new(); n];
    for (xe, cy) in c.coefficients(Var::X).iter().enumerate() {
        if cy.is_zero() {
            continue;
        }
        let ypoly = poly_in_y(cy);
        for k in xe..n {
            if let Some(sk) = s.get(k - xe) {
                if !sk.is_empty() {
                    out[k] = upoly::add(&out[k], &upoly::mul(&ypoly, sk));
                }
            }
        }
    }
    out
}

fn poly_in_y(c: &MPoly) -> UPoly {
    let mut out = vec![BigInt::zero(); c.degree(Var::Y) as usize + 1];
    for (m, a) in c.terms() {
        out[m.exp(Var::Y) as usize] += a;
    }
    upoly::trimmed(out)
}

/// Evaluates `q` (in psi, g, x, y) at psi -> `psi`, g -> `g`, keeping `n`
/// coefficients in x, over one common denominator.
pub fn eval_common(q: &MPoly, psi: &CommonDen, g: &CommonDen, n: usize) -> CommonDen {
    let a_top = q.degree(Var::Psi);
    let b_top = q.degree(Var::G);
    let by_psi = q.coefficients(Var::Psi);
    // g-part: G_a = sum_b q_ab(x,y) Ng^b Dg^(b_top-b)
    let mut g_pows: Vec<Vec<UPoly>> = Vec::with_capacity(b_top as usize + 1);
    g_pows.push(unit_series(n));
    for b in 1..=b_top as usize {
        let next = series_mul_num(&g_pows[b - 1], &g.num, n);
        g_pows.push(next);
    }
    let dg_pows: Vec<UPoly> = (0..=b_top).map(|e| upoly::pow(&g.den, e)).collect();
    let g_part = |qa: &MPoly| -> Vec<UPoly> {
        let mut acc: Vec<UPoly> = vec![Vec::new(); n];
        for (b, qab) in qa.coefficients(Var::G).iter().enumerate() {
            if qab.is_zero() {
                continue;
            }
            let scaled: Vec<UPoly> = g_pows[b]
                .iter()
                .map(|c| upoly::mul(c, &dg_pows[b_top as usize - b]))
                .collect();
            let t = mul_by_xy(qab, &scaled, n);
            for (o, c) in acc.iter_mut().zip(t) {
                *o = upoly::add(o, &c);
            }
        }
        acc
    };
    let dpsi_pows: Vec<UPoly> = (0..=a_top).map(|e| upoly::pow(&psi.den, e)).collect();
    let mut acc: Vec<UPoly> = vec![Vec::new(); n];
    for a in (0..by_psi.len()).rev() {
        acc = series_mul_num(&acc, &psi.num, n);
        if by_psi[a].is_zero() {
            continue;
        }
        let ga = g_part(&by_psi[a]);
        let dp = &dpsi_pows[a_top as usize - a];
        for (o, c) in acc.iter_mut().zip(ga) {
            *o = upoly::add(o, &upoly::mul(&c, dp));
        }
    }
    let den = upoly::mul(&upoly::pow(&psi.den, a_top), &upoly::pow(&g.den, b_top));
    CommonDen { num: acc, den }
}

fn unit_series(n: usize) -> Vec<UPoly> {
    let mut s = vec![Vec::new(); n];
    if n > 0 {
        s[0] = upoly::one();
    }
    s
}

/// Truncation to order K of `q` with psi -> `psi` and g -> `g`.
pub fn series_eval(q: &MPoly, psi: &SeriesX, g: &QSeries, k: usize) -> Result<SeriesX> {
    assert!(
        psi.order() >= k && g.order() >= k,
        "inputs shorter than the requested order"
    );
    let n = k + 1;
    let p = CommonDen::from_series(psi, n);
    let gg = CommonDen::from_rationals(g.coeffs(), n);
    eval_common(q, &p, &gg, n).to_series()
}

/// Same as [`series_eval`] for polynomials without g.
pub fn series_eval_psi(q: &MPoly, psi: &SeriesX, k: usize) -> Result<SeriesX> {
    let g = QSeries::new(vec![BigRational::zero(); k + 1]);
    series_eval(q, psi, &g, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(k: i64) -> MPoly {
        MPoly::constant(k)
    }

    #[test]
    fn square_of_one_plus_x() {
        let psi = SeriesX::new(vec![RatFunc::one(), RatFunc::one()]).unwrap();
        let g = QSeries::from_ints([1, 1]);
        let q = &MPoly::var(Var::Psi) * &MPoly::var(Var::Psi);
        let r = series_eval(&q, &psi, &g, 1).unwrap();
        assert_eq!(r.coeffs(), &[RatFunc::one(), RatFunc::from_int(2)]);
    }

    #[test]
    fn inverse_check() {
        // (1 - x)(1 + x + x^2) mod x^3 = 1
        let s = QSeries::from_ints([1, 1, 1]);
        let p = &c(1) - &MPoly::var(Var::X);
        let q = &p * &MPoly::var(Var::F);
        let r = eval_fx(&q, Var::F, s.coeffs(), 3);
        assert_eq!(r, QSeries::from_ints([1, 0, 0]).coeffs());
    }

    #[test]
    fn poles_are_rejected() {
        let bad = RatFunc::new(vec![BigInt::one()], vec![BigInt::zero(), BigInt::one()]);
        assert_eq!(
            SeriesX::new(vec![RatFunc::one(), bad]),
            Err(Error::PoleAtYZero(1))
        );
    }

    #[test]
    fn mixed_evaluation_with_denominators() {
        // psi = 1 + x/(1-y), g = 1 + x: psi*g + x*y*psi
        let c1 = RatFunc::new(vec![BigInt::one()], vec![BigInt::one(), -BigInt::one()]);
        let psi = SeriesX::new(vec![RatFunc::one(), c1.clone(), RatFunc::zero()]).unwrap();
        let g = QSeries::from_ints([1, 1, 0]);
        let (vp, vg, vx, vy) = (
            MPoly::var(Var::Psi),
            MPoly::var(Var::G),
            MPoly::var(Var::X),
            MPoly::var(Var::Y),
        );
        let q = &(&vp * &vg) + &(&(&vx * &vy) * &vp);
        let r = series_eval(&q, &psi, &g, 2).unwrap();
        let y = RatFunc::t();
        let e1 = c1.add(&RatFunc::one()).add(&y);
        let e2 = c1.add(&y.mul(&c1));
        assert_eq!(r.coeffs(), &[RatFunc::one(), e1, e2]);
    }
}
