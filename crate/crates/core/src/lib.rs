//! Exact guess-and-check solver for polynomial functional equations
//! `Q(psi(x,y), psi(x,0), x, y) = 0` with one catalytic variable `y`.

pub mod certify;
pub mod error;
pub mod evalrec;
pub mod funceq;
pub mod guess;
pub mod holonomic;
pub mod linalg;
pub mod parse;
pub mod pipeline;
pub mod poly;
pub mod report;

pub use error::{Error, Result};
pub use pipeline::{run_pipeline, PipelineConfig, Stage, StageError};
pub use poly::{MPoly, QSeries, RatFunc, SeriesX, Var};
pub use report::{render_report, Format, Report};
