//! Functional equations `Q(psi(x,y), psi(x,0), x, y) = 0`: well-posedness,
//! order-by-order expansion in x, and specialization to y = 0.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::gcd::squarefree_primitive;
use crate::poly::roots::rational_roots;
use crate::poly::series::qmul;
use crate::poly::upoly::{self, UPoly};
use crate::poly::{MPoly, QSeries, RatFunc, SeriesX, Var};

/// A validated functional equation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FuncEq {
    q: MPoly,
}

impl FuncEq {
    /// `q` must be nonzero, use only psi, g, x, y, and involve psi.
    pub fn new(q: MPoly) -> Result<FuncEq> {
        if q.is_zero() {
            return Err(Error::InvalidEquation("the zero polynomial".into()));
        }
        for v in [Var::F, Var::Z] {
            if q.contains(v) {
                return Err(Error::InvalidEquation(format!(
                    "variable {v} is not allowed"
                )));
            }
        }
        if !q.contains(Var::Psi) {
            return Err(Error::InvalidEquation("psi does not occur".into()));
        }
        Ok(FuncEq { q })
    }

    pub fn q(&self) -> &MPoly {
        &self.q
    }
}

impl fmt::Display for FuncEq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.q.fmt(f)
    }
}

/// Witness data showing the equation determines a unique series.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WellPosedness {
    /// The unique admissible order-0 coefficient.
    pub c0: RatFunc,
    /// dQ/dpsi at (c0, c0(0), x=0).
    pub kernel_a: RatFunc,
    /// dQ/dg at the same point.
    pub kernel_b: RatFunc,
    /// Order of vanishing of `kernel_a` at y = 0 (0 or 1).
    pub kernel_valuation: u32,
}

fn r(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Polynomial in y as a dense integer vector; panics on other variables.
fn dense_y(p: &MPoly) -> UPoly {
    let mut out = vec![BigInt::zero(); p.degree(Var::Y) as usize + 1];
    for (m, c) in p.terms() {
        debug_assert_eq!(m.total_degree(), m.exp(Var::Y));
        out[m.exp(Var::Y) as usize] += c;
    }
    upoly::trimmed(out)
}

/// Substitutes a rational constant for `v` and clears the denominator.
fn subst_rational(p: &MPoly, v: Var, val: &BigRational) -> MPoly {
    let d = p.degree(v);
    let (num, den) = (MPoly::constant(val.numer().clone()), val.denom().clone());
    let coeffs = p.coefficients(v);
    let mut acc = MPoly::zero();
    for (i, c) in coeffs.iter().enumerate() {
        let scale = num_traits::pow(den.clone(), (d as usize) - i);
        acc = &acc + &(&c.scale(&scale) * &num.pow(i as u32));
    }
    acc
}

/// Evaluates a polynomial in {psi, y} at psi = `c` (a rational function in y).
fn eval_at_ratfunc(p: &MPoly, c: &RatFunc) -> RatFunc {
    let coeffs = p.coefficients(Var::Psi);
    let mut acc = RatFunc::zero();
    for coef in coeffs.iter().rev() {
        acc = acc.mul(c).add(&RatFunc::from_poly(dense_y(coef)));
    }
    acc
}

/// Padé reconstruction: a rational function p/q with deg p <= m, deg q <= n
/// agreeing with `s` (at least m + n + 1 terms) to the given length, if any.
fn pade(s: &[BigRational], m: usize, n: usize) -> Vec<RatFunc> {
    let get = |i: i64| {
        if i < 0 {
            BigRational::zero()
        } else {
            s[i as usize].clone()
        }
    };
    let mut rows = Vec::new();
    for k in (m + 1)..=(m + n) {
        let row: Vec<BigRational> = (0..=n).map(|j| get(k as i64 - j as i64)).collect();
        let l = row.iter().fold(BigInt::one(), |acc, c| {
            num_integer::Integer::lcm(&acc, c.denom())
        });
        rows.push(
            row.iter()
                .map(|c| (c * BigRational::from_integer(l.clone())).to_integer())
                .collect(),
        );
    }
    let basis = if rows.is_empty() {
        vec![vec![BigInt::one()]]
    } else {
        linalg::nullspace(&rows, n + 1)
    };
    let mut out = Vec::new();
    for qv in basis {
        let qr: Vec<BigRational> = qv
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let pr = qmul(s, &qr, m + 1);
        let l = pr.iter().fold(BigInt::one(), |acc, c| {
            num_integer::Integer::lcm(&acc, c.denom())
        });
        let p: UPoly = pr
            .iter()
            .map(|c| (c * BigRational::from_integer(l.clone())).to_integer())
            .collect();
        let q: UPoly = qv.iter().map(|c| c * &l).collect();
        let q = upoly::trimmed(q);
        if !q.is_empty() {
            out.push(RatFunc::new(p, q));
        }
    }
    out
}

/// Power-series root in y of `t` (in psi, y) starting at the simple root
/// `r0` of t(psi, 0), to `len` terms.
fn lift_simple_root(t: &MPoly, r0: &BigRational, len: usize) -> Vec<BigRational> {
    let coeffs: Vec<Vec<BigRational>> = t
        .coefficients(Var::Psi)
        .iter()
        .map(|c| {
            let d = dense_y(c);
            (0..len)
                .map(|i| BigRational::from_integer(d.get(i).cloned().unwrap_or_default()))
                .collect()
        })
        .collect();
    let deriv0: BigRational = coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| &c[0] * r(i as i64) * num_traits::pow(r0.clone(), i - 1))
        .fold(BigRational::zero(), |a, b| a + b);
    let mut s = vec![BigRational::zero(); len];
    s[0] = r0.clone();
    for k in 1..len {
        // value of t at the current truncation, coefficient k
        let mut acc = vec![BigRational::zero(); k + 1];
        for c in coeffs.iter().rev() {
            acc = qmul(&acc, &s[..=k], k + 1);
            for (a, b) in acc.iter_mut().zip(c) {
                *a += b;
            }
        }
        s[k] = -&acc[k] / &deriv0;
    }
    s
}

/// All rational-function roots of `t` (a polynomial in psi and y) that are
/// regular at y = 0.
fn regular_rational_roots(t: &MPoly, depth: u32) -> Result<Vec<RatFunc>> {
    if depth > 32 || t.degree(Var::Psi) == 0 {
        return Ok(Vec::new());
    }
    let t = squarefree_primitive(t, Var::Psi)?;
    let mut out = Vec::new();
    let mut t = t;
    if t.min_degree(Var::Psi) > 0 {
        out.push(RatFunc::zero());
        t = t.div_monomial(crate::poly::Monomial::var(Var::Psi, 1));
        if t.degree(Var::Psi) == 0 {
            return Ok(out);
        }
    }
    let coeffs = t.coefficients(Var::Psi);
    let at0: UPoly = upoly::trimmed(
        coeffs
            .iter()
            .map(|c| dense_y(c).first().cloned().unwrap_or_default())
            .collect(),
    );
    let d_at0 = upoly::derivative(&at0);
    let m = dense_y(&coeffs[0]).len().saturating_sub(1);
    let n = dense_y(coeffs.last().unwrap()).len().saturating_sub(1);
    for r0 in rational_roots(&at0) {
        if !upoly::eval_rat(&d_at0, &r0).is_zero() {
            let s = lift_simple_root(&t, &r0, m + n + 2);
            for cand in pade(&s, m, n) {
                if cand.is_regular_at_zero() && eval_at_ratfunc(&t, &cand).is_zero() {
                    out.push(cand);
                    break;
                }
            }
        } else {
            // psi = r0 + y u
            let lin = &MPoly::constant(r0.numer().clone())
                + &(&MPoly::var(Var::Y) * &MPoly::var(Var::Psi)).scale(r0.denom());
            let d = t.degree(Var::Psi) as usize;
            let mut acc = MPoly::zero();
            for (i, c) in t.coefficients(Var::Psi).iter().enumerate() {
                let sc = num_traits::pow(r0.denom().clone(), d - i);
                acc = &acc + &(&c.scale(&sc) * &lin.pow(i as u32));
            }
            let y = RatFunc::t();
            let base = RatFunc::from_rational(&r0);
            for u in regular_rational_roots(&acc, depth + 1)? {
                out.push(base.add(&y.mul(&u)));
            }
        }
    }
    out.sort_by_key(|c| c.to_string());
    out.dedup();
    Ok(out)
}

/// Order-0 candidate branches: rational-function roots c(y) regular at 0
/// with Q(c(y), c(0), 0, y) = 0.
fn order_zero_branches(q: &MPoly) -> Result<Vec<RatFunc>> {
    let q0 = q.eval_int(Var::X, &BigInt::zero());
    if q0.is_zero() {
        return Err(Error::AmbiguousBranch(usize::MAX));
    }
    // Lowest power of y in q0 determines c(0) through h(t) = H(t, t).
    let by_y = q0.coefficients(Var::Y);
    let h_low = by_y.iter().find(|c| !c.is_zero()).unwrap();
    let h = h_low
        .rename(Var::G, Var::X)
        .substitute(Var::Psi, &MPoly::var(Var::X));
    let h_dense: UPoly = {
        let mut out = vec![BigInt::zero(); h.degree(Var::X) as usize + 1];
        for (m, c) in h.terms() {
            out[m.exp(Var::X) as usize] += c;
        }
        upoly::trimmed(out)
    };
    if h_dense.is_empty() {
        return Err(Error::AmbiguousBranch(usize::MAX));
    }
    let mut found = Vec::new();
    for g0 in rational_roots(&h_dense) {
        let t = subst_rational(&q0, Var::G, &g0);
        if t.is_zero() {
            return Err(Error::AmbiguousBranch(usize::MAX));
        }
        for c in regular_rational_roots(&t, 0)? {
            if c.value_at_zero().as_ref() == Some(&g0) {
                found.push(c);
            }
        }
    }
    found.sort_by_key(|c| c.to_string());
    found.dedup();
    Ok(found)
}

fn kernel_at(q: &MPoly, v: Var, c0: &RatFunc) -> RatFunc {
    let d = q.derivative(v).eval_int(Var::X, &BigInt::zero());
    let g0 = c0.value_at_zero().expect("regular");
    let t = subst_rational(&d, Var::G, &g0);
    let scale = num_traits::pow(g0.denom().clone(), d.degree(Var::G) as usize);
    eval_at_ratfunc(&t, c0).scale_rational(&BigRational::new(BigInt::one(), scale))
}

/// Taylor coefficients of `a` at y = 0, indices 0 and 1.
fn taylor01(a: &RatFunc) -> (BigRational, BigRational) {
    let t = a.taylor(2).expect("regular at 0");
    (t[0].clone(), t[1].clone())
}

/// Checks that the equation determines a unique series (see [`expand_series`]
/// for the per-order conditions).
pub fn check_well_posed(eq: &FuncEq) -> Result<WellPosedness> {
    let branches = order_zero_branches(eq.q())?;
    let c0 = match branches.len() {
        0 => return Err(Error::NoSeriesBranch),
        1 => branches.into_iter().next().unwrap(),
        n => return Err(Error::AmbiguousBranch(n)),
    };
    let kernel_a = kernel_at(eq.q(), Var::Psi, &c0);
    let kernel_b = if eq.q().contains(Var::G) {
        kernel_at(eq.q(), Var::G, &c0)
    } else {
        RatFunc::zero()
    };
    if kernel_a.is_zero() {
        return Err(Error::DegenerateKernel(1));
    }
    let valuation = kernel_a.valuation().unwrap();
    if !kernel_a.is_regular_at_zero() || valuation > 1 {
        return Err(Error::DegenerateKernel(1));
    }
    let (a0, a1) = taylor01(&kernel_a);
    let (b0, b1) = taylor01(&kernel_b);
    let solvable = if valuation == 0 {
        !(&a0 + &b0).is_zero()
    } else {
        !b0.is_zero() || !(&a1 + &b1).is_zero()
    };
    if !solvable {
        return Err(Error::DegenerateKernel(1));
    }
    Ok(WellPosedness {
        c0,
        kernel_a,
        kernel_b,
        kernel_valuation: valuation as u32,
    })
}

/// Incremental order-by-order solver. Holds power tables so that extending
/// the expansion never recomputes earlier orders.
#[derive(Clone, Debug)]
pub struct Expander {
    wp: WellPosedness,
    /// Terms of Q grouped as ((psi power, g power, x power), coefficient in y).
    terms: Vec<((usize, usize, usize), RatFunc)>,
    psi: Vec<RatFunc>,
    g: Vec<BigRational>,
    psi_pows: Vec<Vec<RatFunc>>,
    g_pows: Vec<Vec<BigRational>>,
    prods: BTreeMap<(usize, usize), Vec<RatFunc>>,
    a01: (BigRational, BigRational),
    b01: (BigRational, BigRational),
}

impl Expander {
    pub fn new(eq: &FuncEq) -> Result<Expander> {
        let wp = check_well_posed(eq)?;
        let q = eq.q();
        let mut grouped: BTreeMap<(usize, usize, usize), MPoly> = BTreeMap::new();
        for (m, c) in q.terms() {
            let key = (
                m.exp(Var::Psi) as usize,
                m.exp(Var::G) as usize,
                m.exp(Var::X) as usize,
            );
            let mono = crate::poly::Monomial::var(Var::Y, m.exp(Var::Y));
            let e = grouped.entry(key).or_insert_with(MPoly::zero);
            *e = &*e + &MPoly::term(c.clone(), mono);
        }
        let terms: Vec<_> = grouped
            .into_iter()
            .map(|(k, p)| (k, RatFunc::from_poly(dense_y(&p))))
            .collect();
        let amax = q.degree(Var::Psi) as usize;
        let bmax = q.degree(Var::G) as usize;
        let c0 = wp.c0.clone();
        let g0 = c0.value_at_zero().unwrap();
        let psi_pows: Vec<Vec<RatFunc>> = (0..=amax).map(|a| vec![c0.pow(a as u32)]).collect();
        let g_pows: Vec<Vec<BigRational>> = (0..=bmax)
            .map(|b| vec![num_traits::pow(g0.clone(), b)])
            .collect();
        let mut prods = BTreeMap::new();
        for ((a, b, _), _) in &terms {
            prods
                .entry((*a, *b))
                .or_insert_with(|| vec![psi_pows[*a][0].scale_rational(&g_pows[*b][0])]);
        }
        let a01 = taylor01(&wp.kernel_a);
        let b01 = taylor01(&wp.kernel_b);
        Ok(Expander {
            wp,
            terms,
            psi: vec![c0],
            g: vec![g0],
            psi_pows,
            g_pows,
            prods,
            a01,
            b01,
        })
    }

    pub fn well_posedness(&self) -> &WellPosedness {
        &self.wp
    }

    pub fn order(&self) -> usize {
        self.psi.len() - 1
    }

    pub fn series(&self) -> SeriesX {
        SeriesX::new(self.psi.clone()).expect("coefficients are checked regular")
    }

    pub fn g_series(&self) -> QSeries {
        QSeries::new(self.g.clone())
    }

    /// Coefficient k of psi^a for every a, with the unknown c_k set to 0.
    fn psi_partials(&self, k: usize) -> Vec<RatFunc> {
        let amax = self.psi_pows.len() - 1;
        let mut out = vec![RatFunc::zero(); amax + 1];
        for a in 2..=amax {
            let prev = &self.psi_pows[a - 1];
            let mut acc = out[a - 1].mul(&self.psi[0]);
            for i in 1..k {
                if !prev[i].is_zero() && !self.psi[k - i].is_zero() {
                    acc = acc.add(&prev[i].mul(&self.psi[k - i]));
                }
            }
            out[a] = acc;
        }
        out
    }

    fn g_partials(&self, k: usize) -> Vec<BigRational> {
        let bmax = self.g_pows.len() - 1;
        let mut out = vec![BigRational::zero(); bmax + 1];
        for b in 2..=bmax {
            let prev = &self.g_pows[b - 1];
            let mut acc = &out[b - 1] * &self.g[0];
            for i in 1..k {
                acc += &prev[i] * &self.g[k - i];
            }
            out[b] = acc;
        }
        out
    }

    /// Extends the expansion through order `k`.
    pub fn extend_to(&mut self, k: usize) -> Result<()> {
        while self.order() < k {
            self.step()?;
        }
        Ok(())
    }

    fn step(&mut self) -> Result<()> {
        let k = self.order() + 1;
        let amax = self.psi_pows.len() - 1;
        let bmax = self.g_pows.len() - 1;
        let pp = self.psi_partials(k);
        let gp = self.g_partials(k);
        let mut nk = RatFunc::zero();
        for ((a, b, j), coef) in &self.terms {
            if *j > k {
                continue;
            }
            let m = k - j;
            let val = if *j > 0 {
                self.prods[&(*a, *b)][m].clone()
            } else {
                // coefficient k of psi^a g^b with the partial top entries
                let pa = &self.psi_pows[*a];
                let gb = &self.g_pows[*b];
                let mut acc = pp[*a]
                    .scale_rational(&gb[0])
                    .add(&pa[0].scale_rational(&gp[*b]));
                for i in 1..k {
                    if !gb[k - i].is_zero() {
                        acc = acc.add(&pa[i].scale_rational(&gb[k - i]));
                    }
                }
                acc
            };
            if !val.is_zero() {
                nk = nk.add(&coef.mul(&val));
            }
        }
        let gk = self.solve_g(k, &nk)?;
        let a = &self.wp.kernel_a;
        let numer = self.wp.kernel_b.scale_rational(&gk).add(&nk);
        let ck = numer.div(a).expect("kernel is nonzero").neg();
        if !ck.is_regular_at_zero() {
            return Err(Error::PoleAtYZero(k));
        }
        if ck.value_at_zero().as_ref() != Some(&gk) {
            return Err(Error::DegenerateKernel(k));
        }
        // Complete the power tables.
        let c0 = self.psi[0].clone();
        self.psi.push(ck.clone());
        self.g.push(gk.clone());
        for a in 1..=amax {
            let lin = c0.pow(a as u32 - 1).mul(&ck).scale_rational(&r(a as i64));
            let full = pp[a].add(&lin);
            self.psi_pows[a].push(full);
        }
        self.psi_pows[0].push(RatFunc::zero());
        let g0 = self.g[0].clone();
        for b in 1..=bmax {
            let lin = num_traits::pow(g0.clone(), b - 1) * &gk * r(b as i64);
            let full = &gp[b] + lin;
            self.g_pows[b].push(full);
        }
        self.g_pows[0].push(BigRational::zero());
        let keys: Vec<(usize, usize)> = self.prods.keys().cloned().collect();
        for (a, b) in keys {
            let mut acc = RatFunc::zero();
            for i in 0..=k {
                let gv = &self.g_pows[b][k - i];
                if !gv.is_zero() {
                    acc = acc.add(&self.psi_pows[a][i].scale_rational(gv));
                }
            }
            self.prods.get_mut(&(a, b)).unwrap().push(acc);
        }
        Ok(())
    }

    /// Determines g_k = c_k(0) from A c_k + B g_k + N_k = 0.
    fn solve_g(&self, k: usize, nk: &RatFunc) -> Result<BigRational> {
        let (a0, a1) = &self.a01;
        let (b0, b1) = &self.b01;
        if !nk.is_regular_at_zero() {
            return Err(Error::PoleAtYZero(k));
        }
        let (n0, n1) = taylor01(nk);
        if self.wp.kernel_valuation == 0 {
            let s = a0 + b0;
            if s.is_zero() {
                return Err(Error::DegenerateKernel(k));
            }
            return Ok(-n0 / s);
        }
        let s1 = a1 + b1;
        if !b0.is_zero() {
            let g = -&n0 / b0;
            if !(&s1 * &g + &n1).is_zero() {
                return Err(Error::DegenerateKernel(k));
            }
            Ok(g)
        } else if !n0.is_zero() {
            Err(Error::PoleAtYZero(k))
        } else if !s1.is_zero() {
            Ok(-n1 / s1)
        } else {
            Err(Error::DegenerateKernel(k))
        }
    }
}

/// The first K+1 coefficients of the unique series solution.
pub fn expand_series(eq: &FuncEq, k: usize) -> Result<SeriesX> {
    let mut e = Expander::new(eq)?;
    e.extend_to(k)?;
    Ok(e.series())
}

/// Values at y = 0 of the coefficients.
pub fn specialize_y0(s: &SeriesX) -> Result<QSeries> {
    specialize_coeffs(s.coeffs())
}

/// Same as [`specialize_y0`] on a raw coefficient list, which may contain
/// poles.
pub fn specialize_coeffs(cs: &[RatFunc]) -> Result<QSeries> {
    let vals: Result<Vec<BigRational>> = cs
        .iter()
        .enumerate()
        .map(|(k, c)| c.value_at_zero().ok_or(Error::PoleAtYZero(k)))
        .collect();
    Ok(QSeries::new(vals?))
}

/// Coefficient of y^m in each coefficient of `s`.
pub fn column(s: &SeriesX, m: usize) -> QSeries {
    QSeries::new(
        s.coeffs()
            .iter()
            .map(|c| c.taylor(m + 1).expect("regular")[m].clone())
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::series_eval;

    fn v(x: Var) -> MPoly {
        MPoly::var(x)
    }
    fn c(k: i64) -> MPoly {
        MPoly::constant(k)
    }

    pub(crate) fn tutte() -> FuncEq {
        let (psi, g, x, y) = (v(Var::Psi), v(Var::G), v(Var::X), v(Var::Y));
        let lin = &(&(&x + &(&(&x * &g) * &y)) - &y) - &(&y * &y);
        let q = &(&(&(&y * &y) * &(&psi * &psi)) + &(&lin * &psi)) + &(&y - &(&x * &g));
        FuncEq::new(q).unwrap()
    }

    fn ratp(cs: &[i64]) -> RatFunc {
        RatFunc::from_poly(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn tutte_well_posed() {
        let wp = check_well_posed(&tutte()).unwrap();
        assert_eq!(wp.c0, RatFunc::one());
        assert_eq!(wp.kernel_a, ratp(&[0, -1, 1]));
        assert_eq!(wp.kernel_valuation, 1);
        assert!(wp.kernel_b.is_zero());
    }

    #[test]
    fn tutte_order_one() {
        let s = expand_series(&tutte(), 1).unwrap();
        let c1 = RatFunc::new(vec![1.into()], vec![1.into(), (-1).into()]);
        assert_eq!(s.coeffs(), &[RatFunc::one(), c1]);
        assert_eq!(specialize_y0(&s).unwrap(), QSeries::from_ints([1, 1]));
    }

    #[test]
    fn tutte_counts() {
        let s = expand_series(&tutte(), 9).unwrap();
        let g = specialize_y0(&s).unwrap();
        assert_eq!(
            g,
            QSeries::from_ints([1, 1, 3, 13, 68, 399, 2530, 16965, 118668, 857956])
        );
        let z = series_eval(tutte().q(), &s, &g, 9).unwrap();
        assert!(z.is_zero());
    }

    #[test]
    fn geometric_in_y() {
        let (psi, x, y) = (v(Var::Psi), v(Var::X), v(Var::Y));
        let eq = FuncEq::new(&(&psi - &c(1)) - &(&(&x * &y) * &psi)).unwrap();
        let s = expand_series(&eq, 3).unwrap();
        assert_eq!(
            s.coeffs(),
            &[
                ratp(&[1]),
                ratp(&[0, 1]),
                ratp(&[0, 0, 1]),
                ratp(&[0, 0, 0, 1])
            ]
        );
    }

    #[test]
    fn coupled_linear() {
        let (psi, g, x) = (v(Var::Psi), v(Var::G), v(Var::X));
        let eq = FuncEq::new(&(&psi - &c(1)) - &(&x * &(&psi + &g))).unwrap();
        let wp = check_well_posed(&eq).unwrap();
        assert_eq!(
            (wp.c0.clone(), wp.kernel_a.clone(), wp.kernel_valuation),
            (RatFunc::one(), RatFunc::one(), 0)
        );
        let s = expand_series(&eq, 2).unwrap();
        assert_eq!(s.coeffs(), &[ratp(&[1]), ratp(&[2]), ratp(&[4])]);
    }

    #[test]
    fn ambiguous_and_pole() {
        let psi = v(Var::Psi);
        let eq = FuncEq::new(&(&psi * &psi) - &psi).unwrap();
        assert!(matches!(
            check_well_posed(&eq),
            Err(Error::AmbiguousBranch(2))
        ));
        let (x, y) = (v(Var::X), v(Var::Y));
        let pole = FuncEq::new(&(&(&y * &psi) - &y) - &x).unwrap();
        assert!(check_well_posed(&pole).is_ok());
        assert_eq!(expand_series(&pole, 2), Err(Error::PoleAtYZero(1)));
    }

    #[test]
    fn specialization() {
        let y_over = RatFunc::new(vec![0.into(), 1.into()], vec![1.into(), 1.into()]);
        assert_eq!(
            specialize_coeffs(&[y_over]).unwrap(),
            QSeries::from_ints([0])
        );
        let pole = RatFunc::new(vec![1.into()], vec![0.into(), 1.into()]);
        assert_eq!(
            specialize_coeffs(&[RatFunc::one(), pole]),
            Err(Error::PoleAtYZero(1))
        );
    }

    #[test]
    fn prefix_stability() {
        let a = expand_series(&tutte(), 6).unwrap();
        let b = expand_series(&tutte(), 7).unwrap();
        assert_eq!(a.coeffs(), &b.coeffs()[..7]);
    }
}
