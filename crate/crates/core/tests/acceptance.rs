//! Full verification suite: runs every numbered check and prints one
//! pass/fail line per check. The same checks back the CLI `check`
//! subcommand.

use trigspline::check;

fn run_and_assert(id: usize) {
    let reports = check::run(&[id]);
    assert_eq!(reports.len(), 1);
    let report = &reports[0];
    println!("{}", report.summary());
    for d in &report.details {
        println!("    {d}");
    }
    assert!(
        report.passed,
        "{} failed:\n{}",
        report.summary(),
        report.details.join("\n")
    );
}

#[test]
fn check_1_determinant_table() {
    run_and_assert(1);
}

#[test]
fn check_2_interpolation() {
    run_and_assert(2);
}

#[test]
fn check_3_representation_equivalence() {
    run_and_assert(3);
}

#[test]
fn check_4_polynomial_coincidence() {
    run_and_assert(4);
}

#[test]
fn check_5_unit_integral() {
    run_and_assert(5);
}

#[test]
fn check_6_cardinal_delta() {
    run_and_assert(6);
}

#[test]
fn check_7_boundary_zeros() {
    run_and_assert(7);
}

#[test]
fn check_8_derivative_consistency() {
    run_and_assert(8);
}

#[test]
fn check_9_kernel_reference() {
    run_and_assert(9);
}
