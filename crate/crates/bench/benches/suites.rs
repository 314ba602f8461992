use criterion::{criterion_group, criterion_main, Criterion};

use contracta_core::liealg::{catalog_lie_contractions, contract_lie};
use contracta_core::racah::{s9_model, verify_s9_model, wilson_phi, WilsonParams};
use contracta_core::scalar::Scalar;

fn bench_model_residual(c: &mut Criterion) {
    let b1 = Scalar::from_ratio(1, 3);
    let b2 = Scalar::from_ratio(1, 5);
    let b3 = Scalar::from_ratio(2, 7);
    c.bench_function("model structure equations m=2", |b| {
        b.iter(|| {
            let model = s9_model(&b1, &b2, &b3, 2);
            assert!(verify_s9_model(&model).is_empty());
        })
    });
}

fn bench_lie_catalog(c: &mut Criterion) {
    let families = catalog_lie_contractions();
    c.bench_function("lie contraction catalog", |b| {
        b.iter(|| {
            for f in &families {
                contract_lie(f).unwrap();
            }
        })
    });
}

fn bench_wilson_eval(c: &mut Criterion) {
    let p = WilsonParams::from_b(
        &Scalar::from_ratio(1, 3),
        &Scalar::from_ratio(1, 5),
        &Scalar::from_ratio(2, 7),
        4,
    );
    let t = Scalar::from_ratio(3, 7);
    c.bench_function("wilson polynomial n=4", |b| {
        b.iter(|| wilson_phi(&p, 4, &t).unwrap())
    });
}

criterion_group!(benches, bench_model_residual, bench_lie_catalog, bench_wilson_eval);
criterion_main!(benches);
