//! End-to-end driver: parse, expand, guess, certify, convert, evaluate.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use crate::certify::{certify_with, eliminate_g, BivarAlgEq, Certificate};
use crate::error::{Error, Result};
use crate::evalrec::{unroll, SequenceValue};
use crate::funceq::{column, Expander, FuncEq};
use crate::guess::{guess_algeq, AlgEq};
use crate::holonomic::{
    algebraic_series, algeq_to_ode, generate, minimize_data_len, minimize_rec, ode_to_rec, LinODE,
    PRec,
};
use crate::parse::parse_equation;
use crate::poly::QSeries;
use crate::report::Report;

/// Largest truncation order the driver will expand to.
pub const MAX_GUESS_ORDER: usize = 256;
pub const GUESS_MARGIN: usize = 6;
/// Below this index the evaluated value is cross-checked against the
/// series.
const CROSS_CHECK: u64 = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PipelineConfig {
    pub equation: String,
    /// Initial truncation order K for guessing.
    pub guess_order: usize,
    /// Cap on order + degree for the minimized recurrence.
    pub max_complexity: usize,
    pub eval_at: u64,
    /// Coefficient of y^m to expand and guess alongside.
    pub column: usize,
    pub prove: bool,
    /// Degree bound in f and in x for the guessed equation.
    pub max_degree: u32,
}

impl PipelineConfig {
    pub fn new(equation: impl Into<String>) -> PipelineConfig {
        PipelineConfig {
            equation: equation.into(),
            guess_order: 24,
            max_complexity: 8,
            eval_at: 1000,
            column: 0,
            prove: true,
            max_degree: 16,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.guess_order < 8 {
            return Err(Error::InvalidBounds(
                "the guess order must be at least 8".into(),
            ));
        }
        if self.guess_order > MAX_GUESS_ORDER {
            return Err(Error::InvalidBounds(format!(
                "the guess order must be at most {MAX_GUESS_ORDER}"
            )));
        }
        if self.max_complexity < 1 {
            return Err(Error::InvalidBounds(
                "the maximal complexity must be at least 1".into(),
            ));
        }
        if self.max_degree < 1 {
            return Err(Error::InvalidBounds(
                "the degree ceiling must be at least 1".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stage {
    Config,
    Parse,
    WellPosedness,
    Expansion,
    Guess,
    Elimination,
    Certification,
    Ode,
    Recurrence,
    Minimization,
    Evaluation,
    Column,
}

impl Stage {
    pub fn name(self) -> &'static str {
        match self {
            Stage::Config => "config",
            Stage::Parse => "parse",
            Stage::WellPosedness => "well-posedness",
            Stage::Expansion => "expansion",
            Stage::Guess => "guess",
            Stage::Elimination => "elimination",
            Stage::Certification => "certification",
            Stage::Ode => "ode",
            Stage::Recurrence => "recurrence",
            Stage::Minimization => "minimization",
            Stage::Evaluation => "evaluation",
            Stage::Column => "column",
        }
    }
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{stage}: {error}")]
pub struct StageError {
    pub stage: Stage,
    pub error: Error,
}

trait AtStage<T> {
    fn at(self, stage: Stage) -> std::result::Result<T, StageError>;
}

impl<T> AtStage<T> for Result<T> {
    fn at(self, stage: Stage) -> std::result::Result<T, StageError> {
        self.map_err(|error| StageError { stage, error })
    }
}

/// Everything the driver computed, before rendering.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub equation: FuncEq,
    pub guess_order: usize,
    pub p1: AlgEq,
    pub p2: BivarAlgEq,
    pub certificate: Option<Certificate>,
    pub ode: LinODE,
    pub recurrence: PRec,
    pub minimized: Option<PRec>,
    /// Certified prefix of g used downstream.
    pub series: QSeries,
    pub value: SequenceValue,
    pub column: Option<(QSeries, Option<AlgEq>)>,
    pub timings_ms: BTreeMap<String, u64>,
}

impl Outcome {
    pub fn is_proven(&self) -> bool {
        self.certificate.as_ref().is_some_and(|c| c.is_proven())
    }
}

struct Clock(BTreeMap<String, u64>, Instant);

impl Clock {
    fn lap(&mut self, stage: Stage) {
        let ms = self.1.elapsed().as_millis() as u64;
        *self.0.entry(stage.name().into()).or_default() += ms;
        self.1 = Instant::now();
    }
}

/// Runs the pipeline and assembles the report.
pub fn run_pipeline(cfg: &PipelineConfig) -> std::result::Result<Report, StageError> {
    let out = solve(cfg)?;
    Ok(Report::from_outcome(&out, cfg))
}

/// The pipeline without rendering. A refuted guess is retried with twice
/// the truncation order, up to [`MAX_GUESS_ORDER`].
pub fn solve(cfg: &PipelineConfig) -> std::result::Result<Outcome, StageError> {
    cfg.validate().at(Stage::Config)?;
    let mut clock = Clock(BTreeMap::new(), Instant::now());
    let eq = parse_equation(&cfg.equation).at(Stage::Parse)?;
    clock.lap(Stage::Parse);
    let mut exp = Expander::new(&eq).at(Stage::WellPosedness)?;
    clock.lap(Stage::WellPosedness);
    let mut k = cfg.guess_order;
    let (p1, p2, certificate) = loop {
        exp.extend_to(k).at(Stage::Expansion)?;
        clock.lap(Stage::Expansion);
        let attempt = guess_algeq(
            &exp.g_series(),
            cfg.max_degree,
            cfg.max_degree,
            GUESS_MARGIN,
        )
        .at(Stage::Guess)?;
        clock.lap(Stage::Guess);
        let found = match attempt {
            None => None,
            Some(p1) => match eliminate_g(&eq, &p1, &exp.series()) {
                Ok(p2) => Some((p1, p2)),
                Err(Error::NoVanishingFactor | Error::RefutedGuess(_)) => None,
                Err(e) => {
                    return Err(StageError {
                        stage: Stage::Elimination,
                        error: e,
                    })
                }
            },
        };
        clock.lap(Stage::Elimination);
        if let Some((p1, p2)) = found {
            if !cfg.prove {
                break (p1, p2, None);
            }
            let cert = certify_with(&mut exp, &eq, &p1, &p2).at(Stage::Certification)?;
            clock.lap(Stage::Certification);
            if cert.is_proven() {
                break (p1, p2, Some(cert));
            }
        }
        if 2 * k > MAX_GUESS_ORDER {
            return Err(StageError {
                stage: Stage::Guess,
                error: Error::ResourceCeiling(format!(
                    "no certified equation of degree at most {} up to order {k}",
                    cfg.max_degree
                )),
            });
        }
        k *= 2;
    };

    let ode = algeq_to_ode(&p1).at(Stage::Ode)?;
    clock.lap(Stage::Ode);
    let mut len = (k + 1).max(CROSS_CHECK as usize + 1);
    let mut series = algebraic_series(&p1, len).at(Stage::Recurrence)?;
    let recurrence = match ode_to_rec(&ode, &series) {
        Err(Error::InsufficientData { needed, .. }) => {
            series = algebraic_series(&p1, needed).at(Stage::Recurrence)?;
            ode_to_rec(&ode, &series)
        }
        r => r,
    }
    .at(Stage::Recurrence)?;
    len = len.max(minimize_data_len(&recurrence, cfg.max_complexity));
    if series.len() < len {
        series = algebraic_series(&p1, len).at(Stage::Recurrence)?;
    }
    let regenerated = generate(&recurrence, series.len()).at(Stage::Recurrence)?;
    if let Some(i) = regenerated
        .iter()
        .zip(series.coeffs())
        .position(|(a, b)| a != b)
    {
        return Err(StageError {
            stage: Stage::Recurrence,
            error: Error::RefutedGuess(i),
        });
    }
    clock.lap(Stage::Recurrence);
    let minimized =
        minimize_rec(&recurrence, &series, cfg.max_complexity).at(Stage::Minimization)?;
    clock.lap(Stage::Minimization);

    let value = unroll(&recurrence, cfg.eval_at).at(Stage::Evaluation)?;
    if cfg.eval_at <= CROSS_CHECK {
        let direct = SequenceValue::new(cfg.eval_at, &series.coeffs()[cfg.eval_at as usize]);
        if direct != value {
            return Err(StageError {
                stage: Stage::Evaluation,
                error: Error::RefutedGuess(cfg.eval_at as usize),
            });
        }
    }
    clock.lap(Stage::Evaluation);

    let column = if cfg.column > 0 {
        let col = column(&exp.series().truncate(k), cfg.column);
        let guessed =
            guess_algeq(&col, cfg.max_degree, cfg.max_degree, GUESS_MARGIN).at(Stage::Column)?;
        clock.lap(Stage::Column);
        Some((col, guessed))
    } else {
        None
    };

    Ok(Outcome {
        equation: eq,
        guess_order: k,
        p1,
        p2,
        certificate,
        ode,
        recurrence,
        minimized,
        series,
        value,
        column,
        timings_ms: clock.0,
    })
}

/// Coefficients of y^m in psi(x, y), orders 0..=k.
pub fn column_series(eq: &FuncEq, m: usize, k: usize) -> Result<QSeries> {
    let mut exp = Expander::new(eq)?;
    exp.extend_to(k)?;
    Ok(column(&exp.series(), m))
}
