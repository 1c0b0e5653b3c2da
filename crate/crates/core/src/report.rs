//! The generated report and its text, markdown and JSON renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::evalrec::SequenceValue;
use crate::guess::AlgEq;
use crate::holonomic::{LinODE, PRec, RecOrigin};
use crate::pipeline::{Outcome, PipelineConfig};
use crate::poly::upoly::{self, UPoly};
use crate::poly::{MPoly, Var};

/// Values longer than this many digits are abbreviated in text output.
pub const INLINE_DIGITS: usize = 40;

pub const NOTE_NOT_DISPLAYED: &str = "no recurrence with order+degree \u{2264} MaxC";
pub const NOTE_GUESSED: &str = "guessed, not certified";

/// Coefficients as nested arrays, outermost index the power of `vars[0]`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Nested {
    Coeff(String),
    Array(Vec<Nested>),
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PolyData {
    pub vars: Vec<String>,
    pub coeffs: Nested,
}

impl PolyData {
    pub fn from_mpoly(p: &MPoly, vars: &[Var]) -> PolyData {
        fn nest(p: &MPoly, vars: &[Var]) -> Nested {
            match vars.split_first() {
                None => Nested::Coeff(p.constant_value().unwrap_or_default().to_string()),
                Some((v, rest)) => {
                    Nested::Array(p.coefficients(*v).iter().map(|c| nest(c, rest)).collect())
                }
            }
        }
        PolyData {
            vars: vars.iter().map(|v| v.name().to_string()).collect(),
            coeffs: nest(p, vars),
        }
    }

    pub fn to_mpoly(&self) -> Result<MPoly> {
        fn unnest(n: &Nested, vars: &[Var]) -> Result<MPoly> {
            let bad = || Error::InvalidEquation("malformed coefficient array".into());
            match (n, vars.split_first()) {
                (Nested::Coeff(c), None) => {
                    Ok(MPoly::constant(c.parse::<BigInt>().map_err(|_| bad())?))
                }
                (Nested::Array(items), Some((v, rest))) => {
                    let cs = items
                        .iter()
                        .map(|i| unnest(i, rest))
                        .collect::<Result<Vec<_>>>()?;
                    Ok(MPoly::from_coefficients(*v, &cs))
                }
                _ => Err(bad()),
            }
        }
        let vars = self
            .vars
            .iter()
            .map(|n| Var::from_name(n).ok_or_else(|| Error::UnknownVariable(n.clone())))
            .collect::<Result<Vec<_>>>()?;
        unnest(&self.coeffs, &vars)
    }

    pub fn text(&self) -> String {
        self.to_mpoly()
            .map(|p| p.to_string())
            .unwrap_or_else(|e| e.to_string())
    }
}

fn upoly_strings(p: &UPoly) -> Vec<String> {
    p.iter().map(|c| c.to_string()).collect()
}

fn upoly_parse(v: &[String]) -> UPoly {
    upoly::trimmed(
        v.iter()
            .map(|c| c.parse::<BigInt>().unwrap_or_default())
            .collect(),
    )
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct OdeData {
    pub var: String,
    /// `coeffs[i][j]` multiplies x^j f^(i).
    pub coeffs: Vec<Vec<String>>,
    pub text: String,
}

impl OdeData {
    fn new(l: &LinODE) -> OdeData {
        OdeData {
            var: "x".into(),
            coeffs: l.coeffs.iter().map(upoly_strings).collect(),
            text: l.to_string(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RecData {
    pub var: String,
    /// `coeffs[t][j]` multiplies n^j a(n + t).
    pub coeffs: Vec<Vec<String>>,
    pub initials: Vec<String>,
    pub exceptional: Vec<u64>,
    pub order: usize,
    pub degree: usize,
    /// `derived`, `minimized` or `minimized-window`.
    pub origin: String,
    pub text: String,
}

impl RecData {
    fn new(r: &PRec) -> RecData {
        let origin = match r.origin {
            RecOrigin::Ode => "derived",
            RecOrigin::Minimized { proven: true } => "minimized",
            RecOrigin::Minimized { proven: false } => "minimized-window",
        };
        RecData {
            var: "n".into(),
            coeffs: r.coeffs.iter().map(upoly_strings).collect(),
            initials: r.initials.iter().map(|c| c.to_string()).collect(),
            exceptional: r.exceptional.clone(),
            order: r.order(),
            degree: r.degree(),
            origin: origin.into(),
            text: r.to_string(),
        }
    }

    pub fn coeff_polys(&self) -> Vec<UPoly> {
        self.coeffs.iter().map(|c| upoly_parse(c)).collect()
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CertificateData {
    pub status: String,
    pub bound: Option<usize>,
    pub checked_order: usize,
    pub annihilator_support: Option<usize>,
    pub hensel_slack: [usize; 2],
    pub kernel: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ValueData {
    pub index: u64,
    /// Digit count when the value is an integer.
    pub integer_digits: Option<usize>,
    pub decimal_string: String,
}

impl ValueData {
    fn new(v: &SequenceValue) -> ValueData {
        ValueData {
            index: v.index,
            integer_digits: v.is_integer().then_some(v.digits),
            decimal_string: v.value.clone(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ColumnData {
    pub m: usize,
    pub series: Vec<String>,
    pub equation: Option<PolyData>,
    pub note: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Report {
    pub equation: String,
    /// `proven` or `conjectural`.
    pub status: String,
    pub guess_order: usize,
    pub max_complexity: usize,
    pub p1: PolyData,
    pub p2: PolyData,
    pub certificate: Option<CertificateData>,
    pub ode: OdeData,
    pub recurrence: RecData,
    pub minimized_recurrence: Option<RecData>,
    pub series: Vec<String>,
    pub value: ValueData,
    pub column: Option<ColumnData>,
    pub timings_ms: BTreeMap<String, u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Format {
    Text,
    Markdown,
    Json,
}

impl Report {
    pub fn from_outcome(o: &Outcome, cfg: &PipelineConfig) -> Report {
        let certificate = o.certificate.as_ref().map(|c| CertificateData {
            status: if c.is_proven() {
                "proven".into()
            } else {
                "refuted".into()
            },
            bound: c.bound,
            checked_order: c.checked_order,
            annihilator_support: c.annihilator.as_ref().map(|m| m.len()),
            hensel_slack: [c.slack.0, c.slack.1],
            kernel: format!(
                "c0 = {}, dQ/dpsi = {}, dQ/dg = {}",
                c.kernel.c0.to_string_in("y"),
                c.kernel.kernel_a.to_string_in("y"),
                c.kernel.kernel_b.to_string_in("y")
            ),
        });
        let column = o
            .column
            .as_ref()
            .map(|(s, eq): &(_, Option<AlgEq>)| ColumnData {
                m: cfg.column,
                series: s.coeffs().iter().map(|c| c.to_string()).collect(),
                equation: eq
                    .as_ref()
                    .map(|e| PolyData::from_mpoly(&e.p, &[Var::F, Var::X])),
                note: NOTE_GUESSED.into(),
            });
        Report {
            equation: o.equation.to_string(),
            status: if o.is_proven() {
                "proven".into()
            } else {
                "conjectural".into()
            },
            guess_order: o.guess_order,
            max_complexity: cfg.max_complexity,
            p1: PolyData::from_mpoly(&o.p1.p, &[Var::F, Var::X]),
            p2: PolyData::from_mpoly(&o.p2.p, &[Var::Psi, Var::X, Var::Y]),
            certificate,
            ode: OdeData::new(&o.ode),
            recurrence: RecData::new(&o.recurrence),
            minimized_recurrence: o.minimized.as_ref().map(RecData::new),
            series: o
                .series
                .coeffs()
                .iter()
                .take(o.guess_order + 1)
                .map(|c| c.to_string())
                .collect(),
            value: ValueData::new(&o.value),
            column,
            timings_ms: o.timings_ms.clone(),
        }
    }

    pub fn is_proven(&self) -> bool {
        self.status == "proven"
    }

    /// Copy with the timing fields cleared, for comparisons.
    pub fn without_timings(&self) -> Report {
        Report {
            timings_ms: BTreeMap::new(),
            ..self.clone()
        }
    }

    pub fn from_json(text: &str) -> serde_json::Result<Report> {
        serde_json::from_str(text)
    }
}

pub fn render_report(r: &Report, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(r).expect("serializable") + "\n",
        Format::Text => render_doc(r, false),
        Format::Markdown => render_doc(r, true),
    }
}

fn render_doc(r: &Report, md: bool) -> String {
    let mut out = String::new();
    let conj = !r.is_proven();
    let tag = if conj { " [conjectural]" } else { "" };
    let code = |s: &str| if md { format!("`{s}`") } else { s.to_string() };
    let block = |out: &mut String, s: &str| {
        if md {
            let _ = writeln!(out, "```\n{s}\n```");
        } else {
            let _ = writeln!(out, "    {s}");
        }
    };
    let heading = |out: &mut String, s: &str| {
        if md {
            let _ = writeln!(out, "\n## {s}\n");
        } else {
            let _ = writeln!(out, "\n{s}\n{}", "-".repeat(s.chars().count()));
        }
    };

    if md {
        let _ = writeln!(
            out,
            "# Solving a functional equation with one catalytic variable\n"
        );
    } else {
        let _ = writeln!(
            out,
            "Solving a functional equation with one catalytic variable\n"
        );
    }
    let _ = writeln!(out, "Let psi(x, y) be the power series solution of");
    block(&mut out, &format!("{} = 0", r.equation));
    let _ = writeln!(out, "with g(x) = psi(x, 0). Status: {}.", r.status);
    let prefix: Vec<&str> = r.series.iter().take(10).map(String::as_str).collect();
    let _ = writeln!(
        out,
        "The coefficients of g begin {}.",
        code(&prefix.join(", "))
    );

    heading(
        &mut out,
        &format!("1. The algebraic equation satisfied by g(x){tag}"),
    );
    let how = if conj {
        format!("Guessed from {} terms; not proved.", r.guess_order + 1)
    } else {
        format!(
            "Guessed from {} terms, then proved (see the appendix).",
            r.guess_order + 1
        )
    };
    let _ = writeln!(out, "{how} With f = g(x):");
    block(&mut out, &format!("{} = 0", r.p1.text()));

    heading(
        &mut out,
        &format!("2. The algebraic equation satisfied by psi(x, y){tag}"),
    );
    block(&mut out, &format!("{} = 0", r.p2.text()));

    heading(
        &mut out,
        &format!("3. The linear recurrence for a(n) = [x^n] g(x){tag}"),
    );
    match &r.minimized_recurrence {
        Some(m) => {
            let _ = writeln!(out, "Order {}, degree {}:", m.order, m.degree);
            block(&mut out, &m.text);
            let range = match m.initials.len() {
                1 => "a(0)".to_string(),
                n => format!("a(0..{})", n - 1),
            };
            let _ = writeln!(out, "with {range} = {}.", m.initials.join(", "));
            if m.origin == "minimized-window" {
                let _ = writeln!(
                    out,
                    "Checked against the derived recurrence on a finite window only."
                );
            }
        }
        None => {
            let _ = writeln!(out, "{} (MaxC = {}).", NOTE_NOT_DISPLAYED, r.max_complexity);
        }
    }
    let _ = writeln!(out, "\nDerived from the differential equation");
    block(&mut out, &r.ode.text);
    let _ = writeln!(
        out,
        "by coefficient extraction (order {}, degree {}):",
        r.recurrence.order, r.recurrence.degree
    );
    block(&mut out, &r.recurrence.text);

    heading(
        &mut out,
        &format!("4. The exact value of a({}){tag}", r.value.index),
    );
    let v = &r.value;
    let long = v.decimal_string.len() > INLINE_DIGITS;
    if long {
        let _ = writeln!(
            out,
            "a({}) is an integer with {} digits, starting {}... (full value in the appendix).",
            v.index,
            v.integer_digits.unwrap_or(v.decimal_string.len()),
            &v.decimal_string[..20]
        );
    } else {
        block(&mut out, &format!("a({}) = {}", v.index, v.decimal_string));
    }

    if let Some(c) = &r.column {
        heading(&mut out, &format!("Coefficient of y^{} ({})", c.m, c.note));
        let prefix: Vec<&str> = c.series.iter().take(10).map(String::as_str).collect();
        let _ = writeln!(out, "Series begins {}.", code(&prefix.join(", ")));
        match &c.equation {
            Some(p) => block(&mut out, &format!("{} = 0", p.text())),
            None => {
                let _ = writeln!(out, "No equation found within the degree ceiling.");
            }
        }
    }

    heading(&mut out, "Appendix: certificate");
    match &r.certificate {
        Some(c) => {
            let _ = writeln!(out, "status: {}", c.status);
            let _ = writeln!(out, "kernel at order 0: {}", c.kernel);
            if let Some(s) = c.annihilator_support {
                let _ = writeln!(out, "defect annihilator: {s} terms");
            }
            if let Some(b) = c.bound {
                let _ = writeln!(out, "valuation bound B: {b}");
            }
            let _ = writeln!(
                out,
                "Hensel slacks: {}, {}",
                c.hensel_slack[0], c.hensel_slack[1]
            );
            let _ = writeln!(out, "identities checked modulo x^{}", c.checked_order + 1);
        }
        None => {
            let _ = writeln!(
                out,
                "Certification was skipped; every result above is conjectural."
            );
        }
    }
    if long {
        heading(&mut out, &format!("Appendix: a({})", v.index));
        for chunk in v.decimal_string.as_bytes().chunks(70) {
            let _ = writeln!(out, "{}", std::str::from_utf8(chunk).unwrap());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    #[test]
    fn nested_round_trip() {
        let p = parse_poly("3*psi^2*y - x*y^2 + 7").unwrap();
        let d = PolyData::from_mpoly(&p, &[Var::Psi, Var::X, Var::Y]);
        assert_eq!(d.to_mpoly().unwrap(), p);
        let json = serde_json::to_string(&d).unwrap();
        assert_eq!(serde_json::from_str::<PolyData>(&json).unwrap(), d);
        assert!(json.starts_with(r#"{"vars":["psi","x","y"],"coeffs":[[["7"]"#));
    }
}
