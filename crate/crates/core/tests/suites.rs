//! Full-registry runs against the builtin models. Every identity instance
//! must pass on its declared validity window; failures print the register
//! table for diagnosis.

use gwv_core::models;
use gwv_core::registry::{run_suite, RunOptions, Suite};

fn run(model: &str, suite: Suite, trunc_t: i64, d_max: i64, k_max: i64) {
    let m = models::builtin(model, trunc_t, d_max).unwrap();
    let report = run_suite(
        &m,
        &RunOptions {
            suite,
            k_max,
            ..Default::default()
        },
    );
    assert!(
        report.all_pass(),
        "{} failed on {}:\n{}",
        suite.name(),
        model,
        report.to_table()
    );
}

#[test]
fn point_all_suites() {
    run("point", Suite::All, 8, 0, 3);
}

#[test]
fn line_axioms() {
    run("p1", Suite::Axioms, 8, 3, 3);
}

#[test]
fn line_core() {
    run("p1", Suite::Core, 8, 3, 3);
}

#[test]
fn line_derivations() {
    run("p1", Suite::Derivations, 8, 3, 3);
}

#[test]
fn line_applications() {
    run("p1", Suite::Applications, 8, 3, 3);
}

#[test]
fn line_appendix() {
    run("p1", Suite::Appendix, 8, 3, 3);
}

#[test]
fn line_classical_all() {
    run("p1-classical", Suite::All, 8, 0, 3);
}

#[test]
fn plane_axioms() {
    run("p2", Suite::Axioms, 8, 3, 3);
}

#[test]
fn plane_core() {
    run("p2", Suite::Core, 8, 3, 3);
}

#[test]
fn plane_derivations() {
    run("p2", Suite::Derivations, 8, 3, 3);
}

#[test]
fn plane_applications() {
    run("p2", Suite::Applications, 8, 3, 3);
}

#[test]
fn plane_appendix() {
    run("p2", Suite::Appendix, 8, 3, 3);
}

#[test]
fn plane_classical_all() {
    run("p2-classical", Suite::All, 8, 0, 3);
}
