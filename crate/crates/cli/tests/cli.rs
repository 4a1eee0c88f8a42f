//! End-to-end runs of the binary against the checked-in fixtures: JSON
//! output on stdout, diagnostics on stderr, exit codes as documented.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    let mut path = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    path.push("tests/fixtures");
    path.push(name);
    path.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_projang"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(output: &Output) -> Value {
    assert!(
        !output.stdout.is_empty(),
        "no stdout; stderr: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    serde_json::from_slice(&output.stdout).expect("stdout is JSON")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

#[test]
fn angles_of_identical_subspaces_are_zero() {
    let out = run(&["angles", &fixture("plane_z.json"), &fixture("plane_z.json")]);
    assert_eq!(exit_code(&out), 0);
    let json = stdout_json(&out);
    let angles = json["principal_angles"].as_array().unwrap();
    assert_eq!(angles.len(), 2);
    for a in angles {
        assert!(a.as_f64().unwrap().abs() < 1e-7);
    }
}

#[test]
fn angles_of_orthogonal_lines_reach_a_right_angle() {
    let out = run(&["angles", &fixture("line_x.json"), &fixture("line_y.json")]);
    assert_eq!(exit_code(&out), 0);
    let json = stdout_json(&out);
    let angle = json["principal_angles"][0].as_f64().unwrap();
    assert!((angle - std::f64::consts::FRAC_PI_2).abs() < 1e-12);
    assert!((json["friedrichs_sine"].as_f64().unwrap() - 1.0).abs() < 1e-12);
}

#[test]
fn angles_agree_for_the_two_candidate_planes() {
    let with_s4 = stdout_json(&run(&["angles", &fixture("s4.json"), &fixture("s1.json")]));
    let with_s4p = stdout_json(&run(&["angles", &fixture("s4prime.json"), &fixture("s1.json")]));
    let a = with_s4["principal_angles"].as_array().unwrap();
    let b = with_s4p["principal_angles"].as_array().unwrap();
    assert_eq!(a.len(), b.len());
    for (x, y) in a.iter().zip(b) {
        assert!((x.as_f64().unwrap() - y.as_f64().unwrap()).abs() <= 1e-9);
    }
}

#[test]
fn angles_error_paths() {
    let out = run(&["angles", &fixture("bad_length.json"), &fixture("line_x.json")]);
    assert_eq!(exit_code(&out), 2);
    assert!(out.stdout.is_empty());

    let out = run(&["angles", &fixture("zero_col.json"), &fixture("line_x.json")]);
    assert_eq!(exit_code(&out), 3);
}

#[test]
fn iterate_covers_both_coupled_verdicts() {
    let base: Vec<String> = vec![
        fixture("r4_range1.json"),
        fixture("r4_kernel1.json"),
    ];
    let plus = run(&[
        "iterate",
        &base[0],
        &base[1],
        &fixture("r4_range2_plus.json"),
        &fixture("r4_kernel2.json"),
    ]);
    assert_eq!(exit_code(&plus), 0);
    let json = stdout_json(&plus);
    assert_eq!(json["verdict"], "converges");
    assert!(json["numeric_rho"].as_f64().unwrap().abs() <= 1e-9);
    assert!(json["predicted_rho"].as_f64().unwrap().abs() <= 1e-9);

    let minus = run(&[
        "iterate",
        &base[0],
        &base[1],
        &fixture("r4_range2_minus.json"),
        &fixture("r4_kernel2.json"),
    ]);
    assert_eq!(exit_code(&minus), 0);
    let json = stdout_json(&minus);
    assert_eq!(json["verdict"], "diverges");
    assert!((json["numeric_rho"].as_f64().unwrap() - 2.0).abs() <= 1e-9);
    assert!((json["predicted_rho"].as_f64().unwrap() - 2.0).abs() <= 1e-9);
}

#[test]
fn iterate_settles_annihilating_pair_in_one_step() {
    // im P2 = ker P1.
    let out = run(&[
        "iterate",
        &fixture("line_x.json"),
        &fixture("line_y.json"),
        &fixture("line_y.json"),
        &fixture("line_x.json"),
    ]);
    assert_eq!(exit_code(&out), 0);
    let json = stdout_json(&out);
    assert_eq!(json["verdict"], "converges");
    assert_eq!(json["steps"], 1);
    let limit = json["limit"]["data"].as_array().unwrap();
    assert!(limit.iter().all(|x| x.as_f64().unwrap() == 0.0));
}

#[test]
fn iterate_rejects_non_complementary_pair() {
    let out = run(&[
        "iterate",
        &fixture("line_x.json"),
        &fixture("line_x.json"),
        &fixture("line_y.json"),
        &fixture("line_x.json"),
    ]);
    assert_eq!(exit_code(&out), 3);
}

#[test]
fn oppenheim_candidate_values() {
    let out = run(&[
        "oppenheim",
        &fixture("p1_paper.json"),
        &fixture("p2_paper.json"),
        "--norm",
        "l1",
        "--p12",
        &fixture("p12.json"),
    ]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_json(&out)["cos"].as_f64().unwrap(), 1.0);

    let out = run(&[
        "oppenheim",
        &fixture("p1_paper.json"),
        &fixture("p2_paper.json"),
        "--norm",
        "l1",
        "--p12",
        &fixture("p12prime.json"),
    ]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout_json(&out)["cos"].as_f64().unwrap(), 2.0);
}

#[test]
fn oppenheim_error_paths() {
    let out = run(&[
        "oppenheim",
        &fixture("p1_paper.json"),
        &fixture("p2_paper.json"),
        "--norm",
        "l1",
        "--p12",
        &fixture("p12zero.json"),
    ]);
    assert_eq!(exit_code(&out), 5);

    let out = run(&[
        "oppenheim",
        &fixture("share_range_1.json"),
        &fixture("share_range_2.json"),
        "--norm",
        "euclidean",
    ]);
    assert_eq!(exit_code(&out), 4);
}

#[test]
fn oppenheim_infimum_on_a_rigid_family() {
    // Distinct orthogonal lines: the zero map is the only candidate and
    // the cosine is cos(π/4).
    let out = run(&[
        "oppenheim",
        &fixture("orth_x.json"),
        &fixture("orth_diag.json"),
        "--norm",
        "euclidean",
    ]);
    assert_eq!(exit_code(&out), 0);
    let json = stdout_json(&out);
    assert_eq!(json["free_dim"], 0);
    assert_eq!(json["intersection_dim"], 0);
    let cos = json["inf_cos"].as_f64().unwrap();
    assert!((cos - 0.5f64.sqrt()).abs() <= 1e-9, "cos {cos}");
}

#[test]
fn gallery_runs_clean_and_deterministic() {
    let first = run(&["gallery"]);
    assert_eq!(exit_code(&first), 0);
    let reports = stdout_json(&first);
    assert_eq!(reports.as_array().unwrap().len(), 5);

    let second = run(&["gallery"]);
    assert_eq!(first.stdout, second.stdout, "gallery output not byte-identical");

    let only = run(&["gallery", "--only", "r4"]);
    assert_eq!(exit_code(&only), 0);
    let reports = stdout_json(&only);
    assert_eq!(reports.as_array().unwrap().len(), 1);
    assert_eq!(reports[0]["example_id"], "r4");

    let unknown = run(&["gallery", "--only", "r5"]);
    assert_eq!(exit_code(&unknown), 2);
}
