use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;
use tutte_core::evalrec::unroll;
use tutte_core::funceq::Expander;
use tutte_core::guess::guess_algeq;
use tutte_core::holonomic::{algeq_to_ode, ode_to_rec};
use tutte_core::parse::{parse_equation, parse_poly};
use tutte_core::poly::{resultant, series_eval, Var};

const TUTTE: &str = "y^2*psi^2 + (x+x*g*y-y-y^2)*psi + y - x*g";

fn kernels(c: &mut Criterion) {
    let eq = parse_equation(TUTTE).unwrap();
    let mut exp = Expander::new(&eq).unwrap();
    exp.extend_to(30).unwrap();
    let g = exp.g_series();
    let psi = exp.series();
    let p1 = guess_algeq(&g, 16, 16, 6).unwrap().unwrap();

    c.bench_function("expand_tutte_20", |b| {
        b.iter(|| {
            let mut e = Expander::new(&eq).unwrap();
            e.extend_to(black_box(20)).unwrap();
            e.order()
        })
    });
    c.bench_function("series_eval_q_30", |b| {
        b.iter(|| series_eval(eq.q(), &psi, &g, black_box(30)).unwrap())
    });
    c.bench_function("guess_p1_30", |b| {
        b.iter(|| guess_algeq(black_box(&g), 16, 16, 6).unwrap())
    });
    let q = eq.q().rename(Var::G, Var::F);
    c.bench_function("resultant_q_p1", |b| {
        b.iter(|| resultant(black_box(&q), &p1.p, Var::F).unwrap())
    });
    let ode = algeq_to_ode(&p1).unwrap();
    let rec = ode_to_rec(&ode, &g).unwrap();
    c.bench_function("algeq_to_ode_tutte", |b| {
        b.iter(|| algeq_to_ode(black_box(&p1)).unwrap())
    });
    c.bench_function("unroll_1000", |b| {
        b.iter(|| unroll(black_box(&rec), 1000).unwrap())
    });
    let cat = parse_poly("x*f^2 - f + 1").unwrap();
    c.bench_function("parse_catalan", |b| {
        b.iter(|| parse_poly(black_box("x*f^2 - f + 1")).unwrap() == cat)
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = kernels
}
criterion_main!(benches);
