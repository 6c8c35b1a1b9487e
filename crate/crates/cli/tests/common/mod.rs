#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

pub fn fixtures_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the binary with the fixtures directory as working directory.
pub fn liaison(args: &[&str]) -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_liaison"))
        .args(args)
        .current_dir(fixtures_dir())
        .output()
        .expect("spawn liaison");
    Outcome {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
    }
}

/// Golden cases: file stem, arguments, expected exit status.
pub const CASES: &[(&str, &[&str], i32)] = &[
    ("classify_line", &["char", "classify", "line_gamma.json"], 0),
    ("classify_gap", &["char", "classify", "gap_fn.json"], 0),
    (
        "gamma_skew_free",
        &[
            "char",
            "gamma",
            "--free-resolution",
            "skew_free_resolution.json",
        ],
        0,
    ),
    (
        "gamma_line_free",
        &[
            "char",
            "gamma",
            "--free-resolution",
            "line_free_resolution.json",
        ],
        0,
    ),
    (
        "gamma_line_n_data",
        &["char", "gamma", "--n-data", "line_n_data.json"],
        0,
    ),
    (
        "dominate_skew_deg10",
        &[
            "dominate",
            "--gamma",
            "skew_gamma.json",
            "--sigma",
            "skew_deg10_gamma.json",
            "--height",
            "1",
        ],
        0,
    ),
    (
        "dominate_reversed",
        &[
            "dominate",
            "--gamma",
            "skew_deg10_gamma.json",
            "--sigma",
            "skew_gamma.json",
            "--height",
            "1",
        ],
        1,
    ),
    (
        "eta_skew_deg10",
        &[
            "eta",
            "--gamma",
            "skew_gamma.json",
            "--sigma",
            "skew_deg10_gamma.json",
            "--height",
            "1",
        ],
        0,
    ),
    (
        "theta_skew_deg10",
        &[
            "theta",
            "--gamma",
            "skew_gamma.json",
            "--sigma",
            "skew_deg10_gamma.json",
            "--height",
            "1",
        ],
        0,
    ),
    (
        "invariants_skew_deg10",
        &[
            "model",
            "invariants",
            "--class",
            "two-skew-lines",
            "--height",
            "1",
            "--theta",
            "theta_8.json",
        ],
        0,
    ),
    (
        "invariants_height6",
        &[
            "model",
            "invariants",
            "--class",
            "skew_class.json",
            "--height",
            "6",
        ],
        0,
    ),
    (
        "double_link_skew_deg10",
        &[
            "double-link",
            "--model",
            "skew_minimal.json",
            "--type",
            "8,1",
            "--kind",
            "elementary",
        ],
        0,
    ),
    (
        "link_skew_deg10",
        &["link", "--model", "skew_deg10_model.json", "--degrees", "3,8"],
        0,
    ),
    (
        "t1_bound_skew_deg10",
        &["t1-bound", "--model", "skew_deg10_model.json"],
        0,
    ),
    (
        "t1_bound_quadric",
        &["t1-bound", "--model", "quadric_type42.json"],
        0,
    ),
    (
        "integral_quadric_21_strict",
        &[
            "integral-check",
            "--model",
            "quadric_type21.json",
            "--variant",
            "strict-s0",
        ],
        1,
    ),
    (
        "integral_quadric_21_combined",
        &[
            "integral-check",
            "--model",
            "quadric_type21.json",
            "--variant",
            "combined-s1",
        ],
        0,
    ),
    (
        "integral_quadric_42_strict",
        &[
            "integral-check",
            "--model",
            "quadric_type42.json",
            "--variant",
            "strict-s0",
        ],
        0,
    ),
    (
        "integral_quadric_42_combined",
        &[
            "integral-check",
            "--model",
            "quadric_type42.json",
            "--variant",
            "combined-s1",
        ],
        0,
    ),
    (
        "integral_skew_deg10_strict",
        &[
            "integral-check",
            "--model",
            "skew_deg10_model.json",
            "--variant",
            "strict-s0",
        ],
        1,
    ),
    (
        "decompose_lr_skew_deg10",
        &[
            "decompose",
            "lr",
            "--from",
            "skew_minimal.json",
            "--to",
            "skew_deg10_model.json",
        ],
        0,
    ),
    (
        "decompose_integral_quadric",
        &[
            "decompose",
            "integral",
            "--from",
            "quadric_type42.json",
            "--to",
            "quadric_target.json",
        ],
        0,
    ),
    (
        "enumerate_skew_h1",
        &[
            "enumerate",
            "--class",
            "two-skew-lines",
            "--height",
            "1",
            "--window",
            "0,4",
        ],
        0,
    ),
    (
        "enumerate_skew_h2_count",
        &[
            "enumerate",
            "--class",
            "two-skew-lines",
            "--height",
            "2",
            "--window",
            "0,9",
            "--count-only",
        ],
        0,
    ),
    (
        "poset_skew",
        &[
            "poset",
            "--class",
            "two-skew-lines",
            "--max-height",
            "2",
            "--window",
            "0,5",
            "--format",
            "dot",
        ],
        0,
    ),
    (
        "hilbert_skew_at2",
        &["hilbert", "--gamma", "skew_gamma.json", "--at", "2"],
        0,
    ),
    (
        "hilbert_skew_polynomial",
        &["hilbert", "--gamma", "skew_gamma.json", "--polynomial"],
        0,
    ),
    (
        "hilbert_skew_degree_genus",
        &["hilbert", "--gamma", "skew_gamma.json", "--degree-genus"],
        0,
    ),
    (
        "hilbert_line_degree_genus",
        &["hilbert", "--gamma", "line_gamma.json", "--degree-genus"],
        0,
    ),
    (
        "verify_theta_small",
        &[
            "verify",
            "--claim",
            "theta-bijection",
            "--window",
            "0,3",
            "--max-abs",
            "2",
            "--max-height",
            "2",
        ],
        0,
    ),
];

/// Checks a case against its golden file and for byte stability across two
/// runs. Returns a description of the first mismatch.
pub fn check_case(name: &str, args: &[&str], code: i32) -> Result<(), String> {
    let first = liaison(args);
    if first.code != code {
        return Err(format!(
            "{name}: exit {} (expected {code}); stderr: {}",
            first.code, first.stderr
        ));
    }
    let second = liaison(args);
    if second.stdout != first.stdout {
        return Err(format!("{name}: output differs between runs"));
    }
    let path = golden_dir().join(format!("{name}.out"));
    if std::env::var_os("UPDATE_GOLDENS").is_some() {
        std::fs::write(&path, &first.stdout).map_err(|e| e.to_string())?;
    }
    let want = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if want != first.stdout {
        return Err(format!(
            "{name}: output differs from {}\n got: {}\nwant: {}",
            path.display(),
            first.stdout,
            want
        ));
    }
    Ok(())
}
