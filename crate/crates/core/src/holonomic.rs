//! Algebraic equation to linear ODE to P-recurrence, and recurrence
//! minimization.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::guess::{first_nonzero, AlgEq};
use crate::linalg;
use crate::poly::roots::nonneg_integer_roots;
use crate::poly::series::eval_fx;
use crate::poly::upoly::{self, UPoly};
use crate::poly::{MPoly, QSeries, RatFunc, Var};

/// `sum_i coeffs[i](x) * f^(i)(x) = 0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinODE {
    pub coeffs: Vec<UPoly>,
}

impl LinODE {
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Applies the operator to a truncated series. Only the first
    /// `len - order` coefficients of the result are meaningful.
    pub fn apply(&self, s: &[BigRational]) -> Vec<BigRational> {
        let n = s.len().saturating_sub(self.order());
        let mut out = vec![BigRational::zero(); n];
        let mut d: Vec<BigRational> = s.to_vec();
        for p in &self.coeffs {
            for (j, c) in p.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let c = BigRational::from_integer(c.clone());
                for k in j..n {
                    out[k] += &c * &d[k - j];
                }
            }
            d = (1..d.len())
                .map(|k| &d[k] * BigRational::from_integer(k.into()))
                .collect();
        }
        out
    }
}

fn derivative_name(i: usize) -> String {
    match i {
        0 => "f".into(),
        1 => "f'".into(),
        2 => "f''".into(),
        _ => format!("f^({i})"),
    }
}

fn signed_terms(terms: Vec<(UPoly, String)>, var: &str) -> String {
    let mut out = String::new();
    for (p, what) in terms {
        if p.is_empty() {
            continue;
        }
        let monomials = p.iter().filter(|c| !c.is_zero()).count();
        let (neg, p) = if monomials == 1 && p.last().unwrap().is_negative() {
            (true, upoly::neg(&p))
        } else {
            (false, p)
        };
        let body = upoly::to_string(&p, var);
        let factor = if upoly::is_one(&p) {
            what
        } else if monomials > 1 {
            format!("({body})*{what}")
        } else {
            format!("{body}*{what}")
        };
        if out.is_empty() {
            out = if neg { format!("-{factor}") } else { factor };
        } else {
            out += if neg { " - " } else { " + " };
            out += &factor;
        }
    }
    out
}

impl fmt::Display for LinODE {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .map(|(i, p)| (p.clone(), derivative_name(i)))
            .collect();
        write!(f, "{} = 0", signed_terms(terms, "x"))
    }
}

/// Which computation produced a recurrence.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RecOrigin {
    /// Coefficient extraction from the ODE of a certified algebraic equation.
    Ode,
    /// Fitted to data and checked against a proven recurrence.
    Minimized { proven: bool },
}

/// `sum_t coeffs[t](n) * a(n + t) = 0` for every n >= 0 outside
/// `exceptional`, with enough initial values to start unrolling.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PRec {
    pub coeffs: Vec<UPoly>,
    pub initials: Vec<BigRational>,
    /// Indices n where the relation may not be used to compute a(n + s).
    pub exceptional: Vec<u64>,
    pub origin: RecOrigin,
}

impl PRec {
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn degree(&self) -> usize {
        self.coeffs
            .iter()
            .filter_map(|p| upoly::degree(p))
            .max()
            .unwrap_or(0)
    }

    pub fn complexity(&self) -> usize {
        self.order() + self.degree()
    }

    pub fn leading(&self) -> &UPoly {
        self.coeffs.last().unwrap()
    }

    /// Number of initial values needed: every exceptional index n needs
    /// a(n + s) given.
    pub fn initials_needed(&self) -> usize {
        self.order() + self.exceptional.iter().max().map_or(0, |&m| m as usize + 1)
    }

    /// Value of the left-hand side at n.
    pub fn residual(&self, a: &[BigRational], n: usize) -> BigRational {
        let nn = BigRational::from_integer(n.into());
        self.coeffs
            .iter()
            .enumerate()
            .map(|(t, q)| upoly::eval_rat(q, &nn) * &a[n + t])
            .fold(BigRational::zero(), |x, y| x + y)
    }
}

impl fmt::Display for PRec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = |t: usize| {
            if t == 0 {
                "a(n)".to_string()
            } else {
                format!("a(n + {t})")
            }
        };
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .map(|(t, p)| (p.clone(), name(t)))
            .collect();
        write!(f, "{} = 0", signed_terms(terms, "n"))
    }
}

// Arithmetic in Q(x)[f] / (P), elements as coefficient vectors of length d.

fn poly_trim(a: &mut Vec<RatFunc>) {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
}

fn poly_mul(a: &[RatFunc], b: &[RatFunc]) -> Vec<RatFunc> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![RatFunc::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] = out[i + j].add(&x.mul(y));
            }
        }
    }
    poly_trim(&mut out);
    out
}

fn poly_sub(a: &[RatFunc], b: &[RatFunc]) -> Vec<RatFunc> {
    let n = a.len().max(b.len());
    let z = RatFunc::zero();
    let mut out: Vec<RatFunc> = (0..n)
        .map(|i| a.get(i).unwrap_or(&z).sub(b.get(i).unwrap_or(&z)))
        .collect();
    poly_trim(&mut out);
    out
}

/// Quotient and remainder over the field Q(x).
fn poly_divrem(a: &[RatFunc], b: &[RatFunc]) -> (Vec<RatFunc>, Vec<RatFunc>) {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let db = b.len() - 1;
    let inv = b[db].inv().expect("nonzero divisor");
    let mut q = vec![RatFunc::zero(); r.len().saturating_sub(db)];
    while r.len() > db {
        let k = r.len() - 1 - db;
        let c = r.last().unwrap().mul(&inv);
        for (i, bc) in b.iter().enumerate() {
            r[k + i] = r[k + i].sub(&c.mul(bc));
        }
        q[k] = c;
        r.pop();
        poly_trim(&mut r);
    }
    (q, r)
}

struct Residue {
    modulus: Vec<RatFunc>,
}

impl Residue {
    fn reduce(&self, a: &[RatFunc]) -> Vec<RatFunc> {
        let d = self.modulus.len() - 1;
        let mut r = poly_divrem(a, &self.modulus).1;
        r.resize(d, RatFunc::zero());
        r
    }

    fn mul(&self, a: &[RatFunc], b: &[RatFunc]) -> Vec<RatFunc> {
        self.reduce(&poly_mul(a, b))
    }

    /// Inverse via the extended Euclidean algorithm.
    fn inverse(&self, a: &[RatFunc]) -> Option<Vec<RatFunc>> {
        let (mut r0, mut r1) = (self.modulus.clone(), a.to_vec());
        poly_trim(&mut r1);
        let (mut s0, mut s1) = (Vec::new(), vec![RatFunc::one()]);
        while !r1.is_empty() {
            let (q, r) = poly_divrem(&r0, &r1);
            let s = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        if r0.len() != 1 {
            return None;
        }
        let c = r0[0].inv()?;
        Some(self.reduce(&s0.iter().map(|x| x.mul(&c)).collect::<Vec<_>>()))
    }
}

fn upoly_from_x(p: &MPoly) -> UPoly {
    let mut out = vec![BigInt::zero(); p.degree(Var::X) as usize + 1];
    for (m, c) in p.terms() {
        out[m.exp(Var::X) as usize] += c;
    }
    upoly::trimmed(out)
}

fn ratfunc_coeffs(p: &MPoly, v: Var) -> Vec<RatFunc> {
    p.coefficients(v)
        .iter()
        .map(|c| RatFunc::from_poly(upoly_from_x(c)))
        .collect()
}

/// Clears denominators and content; the lowest nonzero coefficient of the
/// last entry becomes positive.
fn clear_denominators(v: &[RatFunc]) -> Vec<UPoly> {
    let l = v.iter().fold(upoly::one(), |acc, c| {
        let g = upoly::gcd(&acc, c.den());
        upoly::mul(&acc, &upoly::div_exact(c.den(), &g).unwrap())
    });
    let mut out: Vec<UPoly> = v
        .iter()
        .map(|c| upoly::mul(c.num(), &upoly::div_exact(&l, c.den()).unwrap()))
        .collect();
    let content = out
        .iter()
        .fold(BigInt::zero(), |g, p| g.gcd(&upoly::content(p)));
    let sign_ref = out
        .iter()
        .rev()
        .find(|p| !p.is_empty())
        .and_then(|p| p.iter().find(|c| !c.is_zero()))
        .cloned();
    let mut div = content;
    if sign_ref.is_some_and(|c| c.is_negative()) {
        div = -div;
    }
    for p in out.iter_mut() {
        *p = upoly::div_scalar_exact(p, &div);
    }
    out
}

/// Linear ODE satisfied by every root of `p`, checked on the branch.
pub fn algeq_to_ode(p: &AlgEq) -> Result<LinODE> {
    let coeffs = ratfunc_coeffs(&p.p, Var::F);
    let d = coeffs.len() - 1;
    let lc_inv = coeffs[d].inv().ok_or(Error::NonSquarefree)?;
    let monic: Vec<RatFunc> = coeffs.iter().map(|c| c.mul(&lc_inv)).collect();
    let ring = Residue { modulus: monic };
    let pf = ring.reduce(&ratfunc_coeffs(&p.p.derivative(Var::F), Var::F));
    let px = ring.reduce(&ratfunc_coeffs(&p.p.derivative(Var::X), Var::F));
    let inv_pf = ring.inverse(&pf).ok_or(Error::NonSquarefree)?;
    let fprime: Vec<RatFunc> = ring.mul(&px, &inv_pf).iter().map(|c| c.neg()).collect();
    let derive = |e: &[RatFunc]| -> Vec<RatFunc> {
        let mut out: Vec<RatFunc> = e.iter().map(|c| c.derivative()).collect();
        let de: Vec<RatFunc> = (1..e.len())
            .map(|j| e[j].scale_rational(&BigRational::from_integer(j.into())))
            .collect();
        let chain = ring.mul(&de, &fprime);
        for (o, c) in out.iter_mut().zip(chain) {
            *o = o.add(&c);
        }
        out
    };
    let f = ring.reduce(&[RatFunc::zero(), RatFunc::one()]);
    let mut derivs = vec![f];
    loop {
        let r = derivs.len() - 1;
        let rows: Vec<Vec<RatFunc>> = (0..d)
            .map(|i| derivs.iter().map(|v| v[i].clone()).collect())
            .collect();
        let ns = linalg::nullspace_ratfunc(&rows, r + 1);
        if let Some(v) = ns.into_iter().next() {
            let ode = LinODE {
                coeffs: clear_denominators(&v[..=r]),
            };
            let applied = ode.apply(p.branch.coeffs());
            if let Some(k) = first_nonzero(&applied) {
                return Err(Error::RefutedGuess(k));
            }
            return Ok(ode);
        }
        assert!(
            r < d,
            "derivatives of an element of a rank-{d} space stay dependent"
        );
        let next = derive(&derivs[r]);
        derivs.push(next);
    }
}

/// Falling factorial m (m - 1) ... (m - i + 1) as a polynomial in n, for
/// m = n + c.
fn falling(c: i64, i: usize) -> UPoly {
    let mut out = upoly::one();
    for k in 0..i as i64 {
        out = upoly::mul(&out, &[BigInt::from(c - k), BigInt::one()]);
    }
    out
}

/// Recurrence for the coefficients of any series solution of `l`; the
/// first terms of `data` become the initial values.
pub fn ode_to_rec(l: &LinODE, data: &QSeries) -> Result<PRec> {
    // x^j f^(i) contributes (n - j + i)_(i) a(n + i - j).
    let mut by_shift: std::collections::BTreeMap<i64, UPoly> = Default::default();
    for (i, p) in l.coeffs.iter().enumerate() {
        for (j, c) in p.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let t = i as i64 - j as i64;
            let term = upoly::scale(&falling(t, i), c);
            let e = by_shift.entry(t).or_default();
            *e = upoly::add(e, &term);
        }
    }
    by_shift.retain(|_, p| !p.is_empty());
    let lo = *by_shift.keys().next().ok_or(Error::ZeroPolynomial)?;
    let hi = *by_shift.keys().last().unwrap();
    // Substitute n -> n - lo so the lowest shift is a(n).
    let mut coeffs: Vec<UPoly> = (lo..=hi)
        .map(|t| {
            by_shift
                .get(&t)
                .map_or_else(Vec::new, |p| upoly::taylor_shift(p, &BigInt::from(-lo)))
        })
        .collect();
    let common = coeffs.iter().fold(UPoly::new(), |g, p| {
        if g.is_empty() {
            upoly::primitive(p)
        } else {
            upoly::gcd(&g, p)
        }
    });
    let mut exceptional: Vec<u64> = Vec::new();
    if upoly::degree(&common).unwrap_or(0) > 0 {
        exceptional.extend(nonneg_integer_roots(&common));
        coeffs = coeffs
            .iter()
            .map(|p| {
                if p.is_empty() {
                    Vec::new()
                } else {
                    upoly::div_exact(p, &common).unwrap()
                }
            })
            .collect();
    }
    finish_rec(coeffs, exceptional, data, RecOrigin::Ode)
}

fn finish_rec(
    mut coeffs: Vec<UPoly>,
    mut exceptional: Vec<u64>,
    data: &QSeries,
    origin: RecOrigin,
) -> Result<PRec> {
    let content = coeffs
        .iter()
        .fold(BigInt::zero(), |g, p| g.gcd(&upoly::content(p)));
    let top = coeffs.last().unwrap().last().unwrap().clone();
    let div = if top.is_negative() { -content } else { content };
    for p in coeffs.iter_mut() {
        *p = upoly::div_scalar_exact(p, &div);
    }
    exceptional.extend(nonneg_integer_roots(coeffs.last().unwrap()));
    exceptional.sort_unstable();
    exceptional.dedup();
    let mut rec = PRec {
        coeffs,
        initials: Vec::new(),
        exceptional,
        origin,
    };
    let need = rec.initials_needed();
    if data.len() < need {
        return Err(Error::InsufficientData {
            needed: need,
            available: data.len(),
        });
    }
    rec.initials = data.coeffs()[..need].to_vec();
    Ok(rec)
}

/// Terms a(0..len) generated by the recurrence.
pub fn generate(r: &PRec, len: usize) -> Result<Vec<BigRational>> {
    let s = r.order();
    let mut a: Vec<BigRational> = r.initials.iter().take(len).cloned().collect();
    while a.len() < len {
        let k = a.len();
        let n = k - s;
        let nn = BigInt::from(n);
        let lead = upoly::eval(r.leading(), &nn);
        if lead.is_zero() || r.exceptional.contains(&(n as u64)) {
            return Err(Error::MissingInitials(k));
        }
        let mut acc = BigRational::zero();
        for t in 0..s {
            let q = upoly::eval(&r.coeffs[t], &nn);
            if !q.is_zero() {
                acc += BigRational::from_integer(q) * &a[n + t];
            }
        }
        a.push(-acc / BigRational::from_integer(lead));
    }
    Ok(a)
}

/// Terms the minimizer needs for a candidate of order `s2`.
pub fn window(r: &PRec, s2: usize) -> usize {
    r.initials_needed()
        + r.exceptional.iter().max().map_or(0, |&m| m as usize + 1)
        + r.order()
        + s2
        + 8
}

fn candidate_len(r: &PRec, s2: usize, d2: usize) -> usize {
    (window(r, s2) + 1).max((s2 + 1) * (d2 + 1) + s2 + 8)
}

/// Number of terms [`minimize_rec`] may consume for a given cap.
pub fn minimize_data_len(r: &PRec, max_c: usize) -> usize {
    (1..=max_c)
        .flat_map(|c| (1..=c).map(move |s2| (s2, c - s2)))
        .map(|(s2, d2)| candidate_len(r, s2, d2))
        .max()
        .unwrap_or(0)
}

/// Searches for a recurrence of complexity (order + degree) at most
/// `max_c` that the sequence of `r` satisfies. Candidates are fitted on
/// `data` and must hold over the window given by [`window`]; the result
/// records whether the exact operator check also succeeded.
pub fn minimize_rec(r: &PRec, data: &QSeries, max_c: usize) -> Result<Option<PRec>> {
    for c in 1..=max_c {
        for s2 in 1..=c {
            let d2 = c - s2;
            let need = candidate_len(r, s2, d2);
            if data.len() < need {
                return Err(Error::InsufficientData {
                    needed: need,
                    available: data.len(),
                });
            }
            let seq = generate(r, need)?;
            if seq[..] != data.coeffs()[..need] {
                return Err(Error::RefutedGuess(
                    first_nonzero(
                        &seq.iter()
                            .zip(data.coeffs())
                            .map(|(a, b)| a - b)
                            .collect::<Vec<_>>(),
                    )
                    .unwrap_or(0),
                ));
            }
            let Some(coeffs) = fit(&seq, s2, d2) else {
                continue;
            };
            let proven = operator_check(r, &coeffs, &seq)?;
            let mut cand = finish_rec(
                coeffs,
                Vec::new(),
                &QSeries::new(seq.clone()),
                RecOrigin::Minimized { proven },
            )?;
            if cand.complexity() > max_c {
                continue;
            }
            cand.initials = seq[..cand.initials_needed()].to_vec();
            return Ok(Some(cand));
        }
    }
    Ok(None)
}

/// Fits an order-`s` degree-`d` recurrence to every relation available in
/// `seq`. Needs at least as many equations as unknowns plus four.
fn fit(seq: &[BigRational], s: usize, d: usize) -> Option<Vec<UPoly>> {
    let unknowns = (s + 1) * (d + 1);
    let eqs = seq.len() - s;
    if eqs < unknowns + 4 {
        return None;
    }
    let rows: Vec<Vec<BigInt>> = (0..eqs)
        .map(|n| {
            let row: Vec<BigRational> = (0..=s)
                .flat_map(|t| {
                    let a = seq[n + t].clone();
                    (0..=d)
                        .map(move |e| &a * BigRational::from_integer(BigInt::from(n).pow(e as u32)))
                })
                .collect();
            let l = row.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
            row.iter()
                .map(|c| (c * BigRational::from_integer(l.clone())).to_integer())
                .collect()
        })
        .collect();
    let basis = linalg::nullspace(&rows, unknowns);
    let v = basis.into_iter().next()?;
    let coeffs: Vec<UPoly> = (0..=s)
        .map(|t| upoly::trimmed(v[t * (d + 1)..(t + 1) * (d + 1)].to_vec()))
        .collect();
    if coeffs.last().unwrap().is_empty() || coeffs[0].is_empty() {
        return None;
    }
    Some(coeffs)
}

// Operators sum_t c_t(n) S^t with S c(n) = c(n + 1) S, coefficients in Q(n).

type Op = Vec<RatFunc>;

fn op_trim(a: &mut Op) {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
}

/// Right remainder of `a` modulo `l` (order s, leading coefficient l[s]):
/// a = Q l + R with ord R < s. Records every denominator introduced.
fn op_rem(a: &Op, l: &Op, dens: &mut Vec<UPoly>) -> Op {
    let s = l.len() - 1;
    let mut r = a.clone();
    op_trim(&mut r);
    while r.len() > s {
        let k = r.len() - 1;
        let shift = BigInt::from((k - s) as i64);
        let lead = l[s].shift(&shift);
        dens.push(lead.num().clone());
        let c = r[k].div(&lead).unwrap();
        for (t, lt) in l.iter().enumerate() {
            let idx = t + k - s;
            r[idx] = r[idx].sub(&c.mul(&lt.shift(&shift)));
        }
        r.pop();
        op_trim(&mut r);
    }
    r
}

/// S * a.
fn op_shift_left(a: &Op) -> Op {
    let one = BigInt::one();
    std::iter::once(RatFunc::zero())
        .chain(a.iter().map(|c| c.shift(&one)))
        .collect()
}

/// Proves that the sequence annihilated by `r` also satisfies `cand`: the
/// residual u = cand(a) lies in the span of a, S a, ..., S^(s-1) a over
/// Q(n), which yields an operator of order at most s killing u; u then
/// vanishes identically once it vanishes on a long enough prefix.
fn operator_check(r: &PRec, cand: &[UPoly], seq: &[BigRational]) -> Result<bool> {
    let s = r.order();
    let l: Op = r
        .coeffs
        .iter()
        .map(|p| RatFunc::from_poly(p.clone()))
        .collect();
    let c: Op = cand.iter().map(|p| RatFunc::from_poly(p.clone())).collect();
    let mut dens: Vec<UPoly> = Vec::new();
    let mut rems: Vec<Op> = Vec::new();
    let mut cur = c.clone();
    for _ in 0..=s {
        let mut rem = op_rem(&cur, &l, &mut dens);
        rem.resize(s, RatFunc::zero());
        for x in &rem {
            dens.push(x.den().clone());
        }
        rems.push(rem);
        cur = op_shift_left(&cur);
    }
    // Find the first dependence among the remainders.
    let mut ann: Option<Vec<RatFunc>> = None;
    for k in 0..=s {
        let rows: Vec<Vec<RatFunc>> = (0..s)
            .map(|i| rems[..=k].iter().map(|v| v[i].clone()).collect())
            .collect();
        if let Some(v) = linalg::nullspace_ratfunc(&rows, k + 1).into_iter().next() {
            ann = Some(v);
            break;
        }
    }
    let ann = ann.expect("s + 1 vectors in a space of dimension s are dependent");
    let ann = clear_denominators(&ann);
    let order = ann.len() - 1;
    dens.push(ann[order].clone());
    // Bad indices: r may fail at its exceptional indices; the reduction
    // divides by values that vanish at roots of the recorded polynomials.
    let mut bad: u64 = r.exceptional.iter().max().map_or(0, |&m| m + 1);
    for d in &dens {
        if upoly::degree(d).unwrap_or(0) > 0 {
            if let Some(&m) = nonneg_integer_roots(d).iter().max() {
                bad = bad.max(m + 1);
            }
        }
    }
    // The reduction uses relations of r at shifts up to the candidate order
    // plus s, so those must hold for every index involved as well.
    let check_to = bad as usize + order + s + cand.len();
    let need = check_to + cand.len();
    let seq = if seq.len() < need {
        generate(r, need)?
    } else {
        seq.to_vec()
    };
    let cand_rec = PRec {
        coeffs: cand.to_vec(),
        initials: Vec::new(),
        exceptional: Vec::new(),
        origin: RecOrigin::Ode,
    };
    Ok((0..=check_to).all(|n| cand_rec.residual(&seq, n).is_zero()))
}

/// Extends the branch of an algebraic equation to `n` terms by Newton
/// iteration. The branch must already determine the root.
pub fn algebraic_series(p: &AlgEq, n: usize) -> Result<QSeries> {
    let mut f: Vec<BigRational> = p.branch.coeffs().to_vec();
    if f.len() >= n {
        return Ok(QSeries::new(f[..n].to_vec()));
    }
    let s = p.hensel_slack().ok_or(Error::InsufficientData {
        needed: 2 * p.branch.len(),
        available: p.branch.len(),
    })?;
    if f.len() <= 2 * s {
        return Err(Error::InsufficientData {
            needed: 2 * s + 1,
            available: f.len(),
        });
    }
    let dp = p.p.derivative(Var::F);
    while f.len() < n {
        let m = f.len();
        let target = (2 * m - 2 * s).min(n).max(m + 1);
        let prec = target + s;
        f.resize(prec, BigRational::zero());
        let num = eval_fx(&p.p, Var::F, &f, prec);
        let den = eval_fx(&dp, Var::F, &f, prec);
        if num[..s].iter().chain(&den[..s]).any(|c| !c.is_zero()) {
            return Err(Error::RefutedGuess(0));
        }
        let corr = qdiv(&num[s..], &den[s..], target);
        f.truncate(target);
        for (a, c) in f.iter_mut().zip(corr) {
            *a -= c;
        }
    }
    Ok(QSeries::new(f))
}

/// a / b as truncated series, b[0] != 0.
fn qdiv(a: &[BigRational], b: &[BigRational], n: usize) -> Vec<BigRational> {
    let inv0 = BigRational::one() / &b[0];
    let mut q: Vec<BigRational> = Vec::with_capacity(n);
    for k in 0..n {
        let mut acc = a.get(k).cloned().unwrap_or_default();
        for i in 1..=k.min(b.len() - 1) {
            acc -= &b[i] * &q[k - i];
        }
        q.push(acc * &inv0);
    }
    q
}
