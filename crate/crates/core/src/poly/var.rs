use std::fmt;

use serde::{Deserialize, Serialize};

/// The fixed variable alphabet. The declaration order is the lexicographic
/// order used for canonical term ordering: `f` is most significant, then `z`,
/// `psi`, `g`, `x`, `y`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Var {
    F,
    Z,
    Psi,
    G,
    X,
    Y,
}

pub const NVARS: usize = 6;

impl Var {
    pub const ALL: [Var; NVARS] = [Var::F, Var::Z, Var::Psi, Var::G, Var::X, Var::Y];

    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::F => "f",
            Var::Z => "z",
            Var::Psi => "psi",
            Var::G => "g",
            Var::X => "x",
            Var::Y => "y",
        }
    }

    pub fn from_name(name: &str) -> Option<Var> {
        Var::ALL.iter().copied().find(|v| v.name() == name)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

const BITS: u32 = 16;
const FIELD: u128 = 0xffff;

/// Exponent vector packed into a `u128`, 16 bits per variable with `Var::F`
/// in the most significant field, so integer comparison is lex order.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(u128);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    #[inline]
    fn shift(v: Var) -> u32 {
        (NVARS as u32 - 1 - v.index() as u32) * BITS
    }

    pub fn var(v: Var, e: u32) -> Monomial {
        assert!(
            e <= FIELD as u32,
            "exponent {e} exceeds the monomial field width"
        );
        Monomial((e as u128) << Self::shift(v))
    }

    pub fn from_exponents(exps: &[u32; NVARS]) -> Monomial {
        let mut m = 0u128;
        for (i, &e) in exps.iter().enumerate() {
            assert!(
                e <= FIELD as u32,
                "exponent {e} exceeds the monomial field width"
            );
            m |= (e as u128) << ((NVARS as u32 - 1 - i as u32) * BITS);
        }
        Monomial(m)
    }

    #[inline]
    pub fn exp(self, v: Var) -> u32 {
        ((self.0 >> Self::shift(v)) & FIELD) as u32
    }

    pub fn exponents(self) -> [u32; NVARS] {
        let mut out = [0; NVARS];
        for v in Var::ALL {
            out[v.index()] = self.exp(v);
        }
        out
    }

    pub fn total_degree(self) -> u32 {
        Var::ALL.iter().map(|&v| self.exp(v)).sum()
    }

    /// Product of monomials. Callers guarantee that no exponent overflows.
    #[inline]
    pub fn mul(self, other: Monomial) -> Monomial {
        Monomial(self.0 + other.0)
    }

    #[inline]
    pub fn divides(self, other: Monomial) -> bool {
        Var::ALL.iter().all(|&v| self.exp(v) <= other.exp(v))
    }

    /// `other / self`, assuming `self` divides `other`.
    #[inline]
    pub fn div_of(self, other: Monomial) -> Monomial {
        Monomial(other.0 - self.0)
    }

    pub fn with_exp(self, v: Var, e: u32) -> Monomial {
        assert!(e <= FIELD as u32);
        let s = Self::shift(v);
        Monomial((self.0 & !(FIELD << s)) | ((e as u128) << s))
    }

    pub fn gcd(self, other: Monomial) -> Monomial {
        let mut m = Monomial::ONE;
        for v in Var::ALL {
            m = m.with_exp(v, self.exp(v).min(other.exp(v)));
        }
        m
    }
}
