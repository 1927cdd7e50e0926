use criterion::{criterion_group, criterion_main, Criterion};
use pform_core::clifford6::{build_gamma6, verify_identity6, Identity6};
use pform_core::engine::{check_closure, graded_bracket_on, load_model, ChargeKind};
use pform_core::kinematics::{assemble_system, nullspace_basis, KinematicsModel};
use pform_core::sigma4::{build_sigma4, verify_identity4, Identity4};
use std::hint::black_box;

fn bench_representations(c: &mut Criterion) {
    c.bench_function("build_gamma6", |b| {
        b.iter(|| black_box(build_gamma6(1).unwrap()))
    });
    c.bench_function("build_sigma4", |b| {
        b.iter(|| black_box(build_sigma4().unwrap()))
    });
}

fn bench_identities(c: &mut Criterion) {
    let rep6 = build_gamma6(1).unwrap();
    c.bench_function("verify_tr4", |b| {
        b.iter(|| black_box(verify_identity6(&rep6, Identity6::Tr4)))
    });
    c.bench_function("verify_tr6", |b| {
        b.iter(|| black_box(verify_identity6(&rep6, Identity6::Tr6)))
    });
    let rep4 = build_sigma4().unwrap();
    c.bench_function("verify_ftr4", |b| {
        b.iter(|| black_box(verify_identity4(&rep4, Identity4::FTr4)))
    });
}

fn bench_engine(c: &mut Criterion) {
    let toy = load_model("6d-toy-rigid", 1).unwrap();
    c.bench_function("closure_toy_rigid6", |b| {
        b.iter(|| black_box(check_closure(&toy).unwrap()))
    });
    let onshell = load_model("6d-tensor-onshell", 1).unwrap();
    c.bench_function("bracket_qq_on_two_form", |b| {
        b.iter(|| {
            black_box(graded_bracket_on(&onshell, ChargeKind::Q, ChargeKind::Q, "B").unwrap())
        })
    });
}

fn bench_kinematics(c: &mut Criterion) {
    c.bench_function("master6_degree2_nullspace", |b| {
        b.iter(|| {
            let sys = assemble_system(KinematicsModel::Master6, 2).unwrap();
            black_box(nullspace_basis(&sys).dimension())
        })
    });
    c.bench_function("killing4_degree3_nullspace", |b| {
        b.iter(|| {
            let sys = assemble_system(KinematicsModel::Killing4, 3).unwrap();
            black_box(nullspace_basis(&sys).dimension())
        })
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = bench_representations, bench_identities, bench_engine, bench_kinematics
}
criterion_main!(benches);
