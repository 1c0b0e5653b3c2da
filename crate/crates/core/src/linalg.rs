//! Exact linear algebra over Z and Q.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::poly::modp;
use crate::poly::RatFunc;

fn row_content(row: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in row {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn make_primitive(row: &mut [BigInt]) {
    let g = row_content(row);
    if !g.is_zero() && !g.is_one() {
        for c in row.iter_mut() {
            *c /= &g;
        }
    }
}

/// Rank modulo a word-size prime; a lower bound for the rank over Q.
pub fn rank_mod_p(rows: &[Vec<BigInt>], ncols: usize) -> usize {
    let p = modp::primes(1)[0];
    let m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|c| modp::reduce(c, p)).collect())
        .collect();
    modp::rank(&m, ncols, p)
}

/// Reduced echelon form by fraction-free elimination: every pivot column is
/// zero outside its pivot row, rows are primitive. Returns pivot columns.
pub fn echelon(rows: &mut Vec<Vec<BigInt>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(piv) = (r..rows.len())
            .filter(|&i| !rows[i][c].is_zero())
            .min_by_key(|&i| rows[i][c].bits())
        else {
            continue;
        };
        rows.swap(r, piv);
        make_primitive(&mut rows[r]);
        let (head, tail) = rows.split_at_mut(r);
        let (prow, rest) = tail.split_first_mut().unwrap();
        for other in head.iter_mut().chain(rest.iter_mut()) {
            if other[c].is_zero() {
                continue;
            }
            let g = prow[c].gcd(&other[c]);
            let a = &prow[c] / &g;
            let b = &other[c] / &g;
            for k in 0..ncols {
                if prow[k].is_zero() && other[k].is_zero() {
                    continue;
                }
                other[k] = &other[k] * &a - &prow[k] * &b;
            }
            make_primitive(other);
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Basis of the right nullspace over Q as primitive integer vectors, one
/// per free column in increasing column order. Each vector has a positive
/// entry in its free column and zeros in all other free columns.
pub fn nullspace(rows: &[Vec<BigInt>], ncols: usize) -> Vec<Vec<BigInt>> {
    if rows.len() >= ncols && rank_mod_p(rows, ncols) == ncols {
        return Vec::new();
    }
    let mut m = rows.to_vec();
    let pivots = echelon(&mut m, ncols);
    let mut out = Vec::new();
    let mut is_pivot = vec![None; ncols];
    for (r, &c) in pivots.iter().enumerate() {
        is_pivot[c] = Some(r);
    }
    for f in 0..ncols {
        if is_pivot[f].is_some() {
            continue;
        }
        // x_f = L, x_pc = -L * m[r][f] / m[r][pc]
        let l = pivots
            .iter()
            .enumerate()
            .fold(BigInt::one(), |acc, (r, &c)| {
                if m[r][f].is_zero() {
                    acc
                } else {
                    acc.lcm(&m[r][c])
                }
            });
        let mut v = vec![BigInt::zero(); ncols];
        v[f] = l.abs();
        for (r, &c) in pivots.iter().enumerate() {
            if !m[r][f].is_zero() {
                v[c] = -(&v[f] * &m[r][f]) / &m[r][c];
            }
        }
        make_primitive(&mut v);
        out.push(v);
    }
    out
}

/// Nullspace over Q(t) for small dense matrices of rational functions.
/// Returns one basis vector per free column, normalized with a 1 in that
/// column.
pub fn nullspace_ratfunc(rows: &[Vec<RatFunc>], ncols: usize) -> Vec<Vec<RatFunc>> {
    let mut m = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(piv) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, piv);
        let inv = m[r][c].inv().unwrap();
        for k in 0..ncols {
            m[r][k] = m[r][k].mul(&inv);
        }
        for i in 0..m.len() {
            if i == r || m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone();
            for k in 0..ncols {
                if !m[r][k].is_zero() {
                    m[i][k] = m[i][k].sub(&f.mul(&m[r][k]));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut out = Vec::new();
    for f in 0..ncols {
        if pivots.contains(&f) {
            continue;
        }
        let mut v = vec![RatFunc::zero(); ncols];
        v[f] = RatFunc::one();
        for (r, &c) in pivots.iter().enumerate() {
            v[c] = m[r][f].neg();
        }
        out.push(v);
    }
    out
}

/// Solves a square or overdetermined consistent system over Q; `None` if
/// inconsistent or not uniquely solvable.
pub fn solve_unique(rows: &[Vec<BigRational>], rhs: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = rows.first()?.len();
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            r.iter()
                .cloned()
                .chain(std::iter::once(b.clone()))
                .collect()
        })
        .collect();
    let mut r = 0;
    for c in 0..n {
        let piv = (r..m.len()).find(|&i| !m[i][c].is_zero())?;
        m.swap(r, piv);
        let inv = BigRational::one() / &m[r][c];
        for k in c..=n {
            m[r][k] = &m[r][k] * &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for k in c..=n {
                    let t = &f * &m[r][k];
                    m[i][k] -= t;
                }
            }
        }
        r += 1;
    }
    if m[r..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }
    Some(m[..n].iter().map(|row| row[n].clone()).collect())
}
