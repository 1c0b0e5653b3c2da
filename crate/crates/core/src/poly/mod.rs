//! Exact arithmetic foundation: multivariate and univariate polynomials,
//! rational functions, truncated series, resultants and valuations.

pub mod gcd;
pub mod modp;
pub mod mpoly;
pub mod newton;
pub mod ratfunc;
pub mod resultant;
pub mod ring;
pub mod roots;
pub mod series;
pub mod upoly;
pub mod var;

pub use gcd::{gcd, squarefree_primitive};
pub use mpoly::MPoly;
pub use newton::vanishing_bound;
pub use ratfunc::RatFunc;
pub use resultant::resultant;
pub use ring::Ring;
pub use series::{series_eval, QSeries, SeriesX};
pub use upoly::UPoly;
pub use var::{Monomial, Var};
