//! Elimination of g and a posteriori certification of a guessed equation.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::funceq::{Expander, FuncEq, WellPosedness};
use crate::guess::{first_nonzero, AlgEq};
use crate::linalg;
use crate::poly::series::series_eval_psi;
use crate::poly::series::{eval_fx, CommonDen};
use crate::poly::upoly::{self, UPoly};
use crate::poly::{resultant, series_eval, squarefree_primitive, vanishing_bound};
use crate::poly::{MPoly, Monomial, SeriesX, Var};

/// Largest linear ansatz tried when looking for a proper factor.
const FACTOR_ANSATZ_LIMIT: usize = 160;

/// A polynomial equation P(psi, x, y) = 0 and the series it was checked on.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BivarAlgEq {
    pub p: MPoly,
    pub branch: SeriesX,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CertStatus {
    Proven,
    /// First order (power of x) at which a check failed.
    Refuted(usize),
}

/// Record of a certification attempt.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Certificate {
    /// Annihilator of the defect, in z, x, y. `None` if the guess was
    /// refuted before it was needed.
    pub annihilator: Option<MPoly>,
    /// Newton polygon bound for nonzero series roots of the annihilator.
    pub bound: Option<usize>,
    /// Hensel slacks of P1 at g and of P2 at psi.
    pub slack: (usize, usize),
    /// Every identity was checked modulo x^(checked_order + 1).
    pub checked_order: usize,
    pub kernel: WellPosedness,
    pub status: CertStatus,
}

impl Certificate {
    pub fn is_proven(&self) -> bool {
        self.status == CertStatus::Proven
    }

    /// `Err(RefutedGuess)` unless proven.
    pub fn into_result(self) -> Result<Certificate> {
        match self.status {
            CertStatus::Proven => Ok(self),
            CertStatus::Refuted(k) => Err(Error::RefutedGuess(k)),
        }
    }
}

/// Eliminates g between Q and P1(g, x), keeping a factor that vanishes on
/// the witness.
pub fn eliminate_g(eq: &FuncEq, p1: &AlgEq, witness: &SeriesX) -> Result<BivarAlgEq> {
    let q = eq.q();
    let raw = if q.contains(Var::G) {
        let r = resultant(q, &p1.p.rename(Var::F, Var::G), Var::G)?;
        if r.is_zero() {
            return Err(Error::ResultantVanishes);
        }
        r
    } else {
        q.clone()
    };
    if raw.degree(Var::Psi) == 0 {
        return Err(Error::ResultantVanishes);
    }
    let p = squarefree_primitive(&raw, Var::Psi)?;
    let p = select_factor(&p, witness)?;
    Ok(BivarAlgEq {
        p,
        branch: witness.clone(),
    })
}

fn annihilates(p: &MPoly, s: &SeriesX) -> bool {
    series_eval_psi(p, s, s.order()).is_ok_and(|r| r.is_zero())
}

/// Returns a factor of `p` (squarefree in psi) of least degree in psi that
/// the linear ansatz can find and that annihilates `witness`; falls back to
/// `p` itself.
pub fn select_factor(p: &MPoly, witness: &SeriesX) -> Result<MPoly> {
    let dp = p.degree(Var::Psi) as usize;
    let (dx, dy) = (p.degree(Var::X) as usize, p.degree(Var::Y) as usize);
    let n = witness.order() + 1;
    let cd = CommonDen::from_series(witness, n);
    for da in 1..dp {
        if (da + 1) * (dx + 1) * (dy + 1) > FACTOR_ANSATZ_LIMIT {
            break;
        }
        if let Some(f) = ansatz_factor(p, &cd, n, da, dx, dy, witness) {
            return Ok(f);
        }
    }
    if annihilates(p, witness) {
        Ok(p.clone())
    } else {
        Err(Error::NoVanishingFactor)
    }
}

fn trunc_mul(a: &[UPoly], b: &[UPoly], n: usize) -> Vec<UPoly> {
    let mut out = vec![UPoly::new(); n];
    for (i, x) in a.iter().enumerate().take(n) {
        if x.is_empty() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n - i) {
            if !y.is_empty() {
                out[i + j] = upoly::add(&out[i + j], &upoly::mul(x, y));
            }
        }
    }
    out
}

fn ansatz_factor(
    p: &MPoly,
    cd: &CommonDen,
    n: usize,
    da: usize,
    dx: usize,
    dy: usize,
    witness: &SeriesX,
) -> Option<MPoly> {
    let cols: Vec<(usize, usize, usize)> = (0..=da)
        .flat_map(|a| (0..=dx).flat_map(move |b| (0..=dy).map(move |c| (a, b, c))))
        .collect();
    // An empty nullspace on a prefix of the equations is final; otherwise
    // use more orders in x until all are in.
    let mut used = n.min(dx + 4);
    loop {
        let rows = ansatz_rows(cd, used, da, dy, &cols);
        if used < n {
            if linalg::rank_mod_p(&rows, cols.len()) == cols.len() {
                return None;
            }
        } else {
            let basis = linalg::nullspace(&rows, cols.len());
            return if basis.is_empty() {
                None
            } else {
                pick_factor(p, &cols, basis, witness)
            };
        }
        used = n.min(2 * used);
    }
}

fn ansatz_rows(
    cd: &CommonDen,
    n: usize,
    da: usize,
    dy: usize,
    cols: &[(usize, usize, usize)],
) -> Vec<Vec<BigInt>> {
    // sum k_abc psi^a x^b y^c = 0 with psi = num/den becomes
    // sum k_abc num^a den^(da-a) x^b y^c = 0
    let mut num_pows = vec![{
        let mut one = vec![UPoly::new(); n];
        one[0] = upoly::one();
        one
    }];
    for a in 1..=da {
        num_pows.push(trunc_mul(&num_pows[a - 1], &cd.num[..n], n));
    }
    let t: Vec<Vec<UPoly>> = (0..=da)
        .map(|a| {
            let dpow = upoly::pow(&cd.den, (da - a) as u32);
            num_pows[a].iter().map(|c| upoly::mul(c, &dpow)).collect()
        })
        .collect();
    let ymax = t.iter().flatten().map(|c| c.len()).max().unwrap_or(0) + dy;
    let mut rows = Vec::new();
    for k in 0..n {
        for m in 0..ymax {
            let row: Vec<BigInt> = cols
                .iter()
                .map(|&(a, b, c)| {
                    if k < b || m < c {
                        return BigInt::zero();
                    }
                    t[a][k - b].get(m - c).cloned().unwrap_or_default()
                })
                .collect();
            if row.iter().any(|c| !c.is_zero()) {
                rows.push(row);
            }
        }
    }
    rows
}

fn pick_factor(
    p: &MPoly,
    cols: &[(usize, usize, usize)],
    basis: Vec<Vec<BigInt>>,
    witness: &SeriesX,
) -> Option<MPoly> {
    for v in basis {
        let f = MPoly::from_terms(cols.iter().zip(&v).filter(|(_, c)| !c.is_zero()).map(
            |(&(a, b, c), k)| {
                let m = Monomial::var(Var::Psi, a as u32)
                    .mul(Monomial::var(Var::X, b as u32))
                    .mul(Monomial::var(Var::Y, c as u32));
                (m, k.clone())
            },
        ));
        if f.degree(Var::Psi) == 0 {
            continue;
        }
        let f = squarefree_primitive(&f, Var::Psi).ok()?;
        if f.degree(Var::Psi) < p.degree(Var::Psi)
            && p.exact_div(&f).is_some()
            && annihilates(&f, witness)
        {
            return Some(f);
        }
    }
    None
}

/// M(z, x, y), squarefree and primitive in z, vanishing at z = Q(psi, g, x, y)
/// for every root psi of P2 and root g of P1.
pub fn defect_annihilator(eq: &FuncEq, p1: &AlgEq, p2: &BivarAlgEq) -> Result<MPoly> {
    let q = eq.q();
    let zq = &MPoly::var(Var::Z) - q;
    let p1g = p1.p.rename(Var::F, Var::G);
    let elim_g = |a: &MPoly| {
        if a.contains(Var::G) {
            resultant(a, &p1g, Var::G)
        } else {
            Ok(a.clone())
        }
    };
    let elim_psi = |a: &MPoly| {
        if a.contains(Var::Psi) {
            resultant(&p2.p, a, Var::Psi)
        } else {
            Ok(a.clone())
        }
    };
    let mut m = elim_psi(&elim_g(&zq)?)?;
    if m.is_zero() {
        m = elim_g(&elim_psi(&zq)?)?;
    }
    if m.is_zero() {
        return Err(Error::ZeroAnnihilator);
    }
    squarefree_primitive(&m, Var::Z)
}

/// Certifies `p1` and `p2` against the functional equation, expanding the
/// series solution as far as the argument requires.
pub fn certify(eq: &FuncEq, p1: &AlgEq, p2: &BivarAlgEq) -> Result<Certificate> {
    let mut exp = Expander::new(eq)?;
    certify_with(&mut exp, eq, p1, p2)
}

/// Same as [`certify`], reusing (and extending) an existing expansion.
pub fn certify_with(
    exp: &mut Expander,
    eq: &FuncEq,
    p1: &AlgEq,
    p2: &BivarAlgEq,
) -> Result<Certificate> {
    let k = p2.branch.order().max(p1.branch.order());
    exp.extend_to(k)?;
    let refuted = |order: usize, exp: &Expander| Certificate {
        annihilator: None,
        bound: None,
        slack: (0, 0),
        checked_order: order,
        kernel: exp.well_posedness().clone(),
        status: CertStatus::Refuted(order),
    };
    if let Some(bad) = check_orders(exp, p1, p2, k)? {
        return Ok(refuted(bad, exp));
    }
    let m = defect_annihilator(eq, p1, p2)?;
    let b = vanishing_bound(&m, Var::Z)?;
    let (s1, s2) = slacks(exp, p1, p2, k)?;
    let s = s1.max(s2);
    let n = k.max(b + s).max(2 * s);
    exp.extend_to(n)?;
    if n > k {
        if let Some(bad) = check_orders(exp, p1, p2, n)? {
            let mut c = refuted(bad, exp);
            c.annihilator = Some(m);
            c.bound = Some(b);
            return Ok(c);
        }
    }
    let psi = exp.series();
    let defect = series_eval(eq.q(), &psi, &exp.g_series(), n)?;
    assert!(
        defect.is_zero(),
        "the expansion does not satisfy its own equation"
    );
    Ok(Certificate {
        annihilator: Some(m),
        bound: Some(b),
        slack: (s1, s2),
        checked_order: n,
        kernel: exp.well_posedness().clone(),
        status: CertStatus::Proven,
    })
}

/// First order below `n + 1` where P1(g) or P2(psi) fails to vanish.
fn check_orders(exp: &Expander, p1: &AlgEq, p2: &BivarAlgEq, n: usize) -> Result<Option<usize>> {
    let g = exp.g_series();
    let e1 = first_nonzero(&eval_fx(&p1.p, Var::F, &g.coeffs()[..=n], n + 1));
    // Only orders below a failure of P1 can change the answer.
    let m = e1.unwrap_or(n);
    let psi = exp.series().truncate(m);
    let e2 = series_eval_psi(&p2.p, &psi, m)?.valuation();
    Ok(match (e1, e2) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, b) => a.or(b),
    })
}

/// Valuations of dP1/df at g and dP2/dpsi at psi, expanding further when
/// the known terms all vanish.
fn slacks(exp: &mut Expander, p1: &AlgEq, p2: &BivarAlgEq, k: usize) -> Result<(usize, usize)> {
    let d1 = p1.p.derivative(Var::F);
    let d2 = p2.p.derivative(Var::Psi);
    let ceiling = 4 * k.max(64);
    let mut s1 = None;
    let mut s2 = None;
    let mut n = 1;
    while s1.is_none() || s2.is_none() {
        if n > ceiling {
            return Err(Error::ResourceCeiling(format!(
                "derivative of the guess vanishes through order {ceiling}"
            )));
        }
        exp.extend_to(n)?;
        if s1.is_none() {
            let g = exp.g_series();
            s1 = first_nonzero(&eval_fx(&d1, Var::F, &g.coeffs()[..=n], n + 1));
        }
        if s2.is_none() {
            s2 = series_eval_psi(&d2, &exp.series().truncate(n), n)?.valuation();
        }
        n *= 2;
    }
    Ok((s1.unwrap(), s2.unwrap()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_equation, parse_poly};
    use crate::poly::{QSeries, RatFunc};

    fn series_of(cs: &[i64]) -> SeriesX {
        SeriesX::new(cs.iter().map(|&c| RatFunc::from_int(c)).collect()).unwrap()
    }

    #[test]
    fn toy_linear_chain() {
        let eq = parse_equation("psi - g - x*y").unwrap();
        // psi(x,0) = g holds for every g, so the equation alone is not well-posed.
        assert_eq!(
            crate::funceq::check_well_posed(&eq),
            Err(Error::AmbiguousBranch(usize::MAX))
        );
        let p1 = AlgEq::new(
            parse_poly("(1-x)*f - 1").unwrap(),
            QSeries::from_ints([1; 12]),
        )
        .unwrap();
        let mut cs: Vec<RatFunc> = vec![RatFunc::one(); 12];
        cs[1] = RatFunc::from_poly(vec![1.into(), 1.into()]);
        let w = SeriesX::new(cs).unwrap();
        let p2 = eliminate_g(&eq, &p1, &w).unwrap();
        assert_eq!(
            p2.p,
            parse_poly("(1-x)*(psi - x*y) - 1")
                .unwrap()
                .normalize_sign_trailing(Var::Psi)
        );
        let m = defect_annihilator(&eq, &p1, &p2).unwrap();
        assert!(m.min_degree(Var::Z) > 0, "{m}");
    }

    #[test]
    fn factor_selection() {
        let p = parse_poly("(psi - x)*(psi + 1)").unwrap();
        let w = series_of(&[0, 1, 0, 0, 0, 0]);
        assert_eq!(
            select_factor(&p, &w).unwrap(),
            parse_poly("psi - x").unwrap()
        );
        let bad = series_of(&[5, 1, 0, 0]);
        assert_eq!(select_factor(&p, &bad), Err(Error::NoVanishingFactor));
    }

    #[test]
    fn coupled_linear_is_proven() {
        let eq = parse_equation("psi - 1 - x*(psi + g)").unwrap();
        let mut exp = Expander::new(&eq).unwrap();
        exp.extend_to(12).unwrap();
        let g = exp.g_series();
        let p1 = crate::guess::guess_algeq(&g, 2, 2, 6).unwrap().unwrap();
        assert_eq!(p1.p, parse_poly("(1-2*x)*f - 1").unwrap());
        let p2 = eliminate_g(&eq, &p1, &exp.series()).unwrap();
        let cert = certify_with(&mut exp, &eq, &p1, &p2).unwrap();
        assert!(cert.is_proven());
        assert!(cert.checked_order >= cert.bound.unwrap());
    }
}
