use num_bigint::BigInt;
use tutte_core::funceq::FuncEq;
use tutte_core::parse::parse_equation;
use tutte_core::pipeline::{column_series, solve};
use tutte_core::report::{render_report, Format, Report, NOTE_NOT_DISPLAYED};
use tutte_core::{run_pipeline, Error, PipelineConfig, Stage};

const MOTZKIN: &str = "y*psi - y - x*y*psi - x*y^2*psi - x*psi + x*g";

/// Coefficient table of psi for psi = 1 + x (psi + g): fixed-point
/// iteration on truncated polynomials in x (rows) and y (columns).
fn brute_force_linear(n: usize) -> Vec<BigInt> {
    let mut psi = vec![BigInt::from(0); n + 1];
    for _ in 0..=n {
        let g = psi.clone();
        let mut next = vec![BigInt::from(0); n + 1];
        next[0] = BigInt::from(1);
        for k in 0..n {
            next[k + 1] = &psi[k] + &g[k];
        }
        psi = next;
    }
    psi
}

/// Motzkin paths counted directly: a(n) = sum over up/level/down steps
/// staying at height >= 0 and ending at 0.
fn motzkin(n: usize) -> Vec<BigInt> {
    let mut out = Vec::new();
    let mut heights = vec![BigInt::from(1)];
    for _ in 0..=n {
        out.push(heights[0].clone());
        let mut next = vec![BigInt::from(0); heights.len() + 1];
        for (h, c) in heights.iter().enumerate() {
            next[h + 1] += c;
            next[h] += c;
            if h > 0 {
                next[h - 1] += c;
            }
        }
        heights = next;
    }
    out
}

fn cfg(eq: &str, g: u64) -> PipelineConfig {
    PipelineConfig {
        eval_at: g,
        ..PipelineConfig::new(eq)
    }
}

#[test]
fn linear_equation_value() {
    let r = run_pipeline(&cfg("psi - 1 - x*(psi + g)", 10)).unwrap();
    assert!(r.is_proven());
    assert_eq!(r.value.decimal_string, "1024");
    assert_eq!(
        r.value.decimal_string,
        brute_force_linear(10)[10].to_string()
    );
    assert_eq!(r.p1.text(), "-2*f*x + f - 1");
}

#[test]
fn motzkin_end_to_end() {
    let oracle = motzkin(64);
    let out = solve(&cfg(MOTZKIN, 64)).unwrap();
    assert!(out.is_proven());
    assert_eq!(out.value.value, oracle[64].to_string());
    for (a, b) in out.series.coeffs().iter().zip(&oracle) {
        assert_eq!(a, &b.clone().into());
    }
    let min = out.minimized.unwrap();
    assert_eq!((min.order(), min.degree()), (2, 1));
}

#[test]
fn stage_attribution() {
    let run = |e: &str| run_pipeline(&PipelineConfig::new(e)).unwrap_err();
    let amb = run("psi^2 - psi");
    assert_eq!(
        (amb.stage, amb.error),
        (Stage::WellPosedness, Error::AmbiguousBranch(2))
    );
    let pole = run("y*psi - y - x");
    assert_eq!(
        (pole.stage, pole.error),
        (Stage::Expansion, Error::PoleAtYZero(1))
    );
    let unknown = run("psi + z");
    assert_eq!(
        (unknown.stage, unknown.error),
        (Stage::Parse, Error::UnknownVariable("z".into()))
    );
    let bad = run_pipeline(&PipelineConfig {
        guess_order: 4,
        ..PipelineConfig::new("psi - 1")
    })
    .unwrap_err();
    assert_eq!(bad.stage, Stage::Config);
}

#[test]
fn report_round_trip_and_determinism() {
    let c = PipelineConfig {
        column: 1,
        ..cfg(MOTZKIN, 200)
    };
    let a = run_pipeline(&c).unwrap();
    let json = render_report(&a, Format::Json);
    assert_eq!(Report::from_json(&json).unwrap(), a);
    let b = run_pipeline(&c).unwrap();
    assert_eq!(
        render_report(&a.without_timings(), Format::Json),
        render_report(&b.without_timings(), Format::Json)
    );
    let echo = parse_equation(&a.equation).unwrap();
    assert_eq!(echo, parse_equation(MOTZKIN).unwrap());
    let col = a.column.as_ref().unwrap();
    assert_eq!(col.note, "guessed, not certified");
    assert_eq!(col.series[..5], ["0", "1", "2", "5", "12"]);
}

#[test]
fn renderings() {
    let r = run_pipeline(&cfg(MOTZKIN, 500)).unwrap();
    let text = render_report(&r, Format::Text);
    for needle in [
        "1. The algebraic",
        "2. The algebraic",
        "3. The linear recurrence",
        "4. The exact value",
        "Appendix: a(500)",
    ] {
        assert!(text.contains(needle), "missing {needle}");
    }
    assert!(text.contains(&r.value.decimal_string[..70]));
    let md = render_report(&r, Format::Markdown);
    assert!(md.starts_with("# "));
    assert!(md.contains("## 3. The linear recurrence"));
    let capped = run_pipeline(&PipelineConfig {
        max_complexity: 1,
        ..cfg(MOTZKIN, 5)
    })
    .unwrap();
    assert!(capped.minimized_recurrence.is_none());
    assert!(render_report(&capped, Format::Text).contains(NOTE_NOT_DISPLAYED));
}

#[test]
fn no_prove_is_conjectural() {
    let r = run_pipeline(&PipelineConfig {
        prove: false,
        ..cfg(MOTZKIN, 10)
    })
    .unwrap();
    assert_eq!(r.status, "conjectural");
    assert!(r.certificate.is_none());
    assert!(render_report(&r, Format::Text).contains("[conjectural]"));
}

#[test]
fn tutte_columns() {
    let eq: FuncEq = parse_equation("y**2*psi**2+(x+x*g*y-y-y**2)*psi+y-x*g").unwrap();
    let c0 = column_series(&eq, 0, 4).unwrap();
    let ints: Vec<String> = c0.coeffs().iter().map(|c| c.to_string()).collect();
    assert_eq!(ints, ["1", "1", "3", "13", "68"]);
    // c_1(y) = 1/(1 - y)
    let c1 = column_series(&eq, 1, 4).unwrap();
    assert_eq!(c1.coeffs()[1].to_string(), "1");
    let c5 = column_series(&eq, 5, 1).unwrap();
    assert_eq!(c5.coeffs()[0].to_string(), "0");
}
