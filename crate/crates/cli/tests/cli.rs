use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_torus-quant")).args(args).env_remove("QUANT_SEED").output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn matrix(v: &Value) -> Vec<Vec<(f64, f64)>> {
    v["matrix"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r.as_array().unwrap().iter().map(|z| (z[0].as_f64().unwrap(), z[1].as_f64().unwrap())).collect())
        .collect()
}

fn close(m: &[Vec<(f64, f64)>], want: impl Fn(usize, usize) -> (f64, f64)) {
    for (i, row) in m.iter().enumerate() {
        for (j, &(re, im)) in row.iter().enumerate() {
            let (wr, wi) = want(i, j);
            assert!((re - wr).hypot(im - wi) < 1e-12, "entry ({i},{j}) = {re}+{im}i, want {wr}+{wi}i");
        }
    }
}

#[test]
fn basis_of_coordinate_line() {
    let v = json(&["basis", "--lagrangian", "1 0"]);
    assert_eq!(v["w"], serde_json::json!([[1, 0]]));
    assert_eq!(v["wperp"], serde_json::json!([[0, 1]]));
}

#[test]
fn basis_invariants_hold() {
    let v = json(&["basis", "--g", "2", "--lagrangian", "1 0 0 0; 0 1 0 1"]);
    for key in ["symplectic", "unimodular", "spans_lagrangian"] {
        assert_eq!(v["invariants"][key], true, "{key}");
    }
    let v = json(&["basis", "--lagrangian", "1,2"]);
    assert_eq!(v["invariants"]["symplectic"], true);
}

#[test]
fn malformed_rows_exit_with_input_error() {
    let out = run(&["basis", "--lagrangian", "1 2 3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["kind"], "DimensionMismatch");

    let out = run(&["basis", "--lagrangian", "1 x"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["bks", "--k", "3", "--lagrangian", "1 0", "--lagrangian", "0 1"]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["kind"], "OddModulus");
}

#[test]
fn fourier_example() {
    let v = json(&["bks", "--lagrangian", "1 0", "--lagrangian", "0 1"]);
    let s = 0.5f64.sqrt();
    close(&matrix(&v), |i, j| if i * j % 2 == 1 { (-s, 0.0) } else { (s, 0.0) });
    assert_eq!(v["meta"]["labels"], serde_json::json!([[0], [1]]));
    assert_eq!(v["meta"]["exact_available"], true);
}

#[test]
fn same_polarization_gives_identity() {
    let v = json(&["bks", "--g", "2", "--k", "4", "--lagrangian", "1 0 1 0; 0 1 0 1", "--lagrangian", "1 0 1 0; 0 1 0 1"]);
    close(&matrix(&v), |i, j| if i == j { (1.0, 0.0) } else { (0.0, 0.0) });
}

#[test]
fn lift_shift_rotates_by_quarter_turn() {
    let base = ["bks", "--lagrangian", "1 0", "--lagrangian", "0 1", "--base", "1 0", "--lift", "0"];
    let a = matrix(&json(&[&base[..], &["1"]].concat()));
    let b = matrix(&json(&[&base[..], &["3"]].concat()));
    // raising λ₂ by 2 multiplies by −i
    close(&b, |i, j| {
        let (re, im) = a[i][j];
        (im, -re)
    });
}

#[test]
fn maslov_example() {
    let ls = ["--lagrangian", "1 0", "--lagrangian", "1 1", "--lagrangian", "0 1"];
    assert_eq!(json(&[&["maslov"][..], &ls].concat())["tau"], 1);
    let rev = ["maslov", "--lagrangian", "0 1", "--lagrangian", "1 1", "--lagrangian", "1 0"];
    assert_eq!(json(&rev)["tau"], -1);
    let v = json(&[&["maslov"][..], &ls, &["--base", "1 0", "--lift", "0", "1", "1"]].concat());
    assert_eq!(v["mu"]["modulus"], 8);
    assert_eq!(v["mu"]["pairs"].as_array().unwrap().len(), 3);
}

#[test]
fn generator_matrices() {
    let k = 4usize;
    let cis = |t: f64| ((std::f64::consts::PI * t).cos(), (std::f64::consts::PI * t).sin());
    let beta = matrix(&json(&["rep", "--k", "4", "--generator", "beta", "--block", "1"]));
    close(&beta, |i, j| if i == j { cis((i * i) as f64 / k as f64) } else { (0.0, 0.0) });

    let gamma = matrix(&json(&["rep", "--k", "4", "--generator", "gamma"]));
    close(&gamma, |i, j| {
        let (c, s) = cis(2.0 * (i * j) as f64 / k as f64);
        (c / 2.0, s / 2.0)
    });

    let s = matrix(&json(&["rep", "--k", "4", "--generator", "gamma-epsilon", "--mp"]));
    close(&s, |i, j| {
        let (c, s) = cis(5.0 / 4.0 + 2.0 * (i * j) as f64 / k as f64);
        (c / 2.0, s / 2.0)
    });

    let eps = matrix(&json(&["rep", "--k", "4", "--generator", "epsilon", "--mp"]));
    close(&eps, |i, j| if i == j { (-1.0, 0.0) } else { (0.0, 0.0) });

    // n = (1, 0) acts diagonally by e^{2πiq/k}, n = (0, 1) shifts q ↦ q + 1
    let diag = matrix(&json(&["rep", "--k", "4", "--generator", "heisenberg", "--n", "1 0"]));
    close(&diag, |i, j| if i == j { cis(2.0 * i as f64 / k as f64) } else { (0.0, 0.0) });
    let shift = matrix(&json(&["rep", "--k", "4", "--generator", "heisenberg", "--n", "0 1"]));
    close(&shift, |i, j| if i == (j + 1) % k { (1.0, 0.0) } else { (0.0, 0.0) });
}

#[test]
fn verify_suite_passes() {
    let out = run(&["verify", "--suite", "gauss"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["reports"][0]["suite"], "gauss");
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(2));
}

#[test]
fn seed_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_torus-quant"))
        .args(["verify", "--suite", "gauss", "--seed", "1"])
        .env("QUANT_SEED", "7")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["seed"], 7);
}

#[test]
fn json_is_deterministic_and_round_trips() {
    let args = ["bks", "--g", "2", "--k", "4", "--lagrangian", "1 0 0 0; 0 1 0 0", "--lagrangian", "1 0 1 1; 0 1 1 2"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    let again: Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
    for (x, y) in matrix(&v).iter().flatten().zip(matrix(&again).iter().flatten()) {
        assert_eq!(x.0.to_bits(), y.0.to_bits());
        assert_eq!(x.1.to_bits(), y.1.to_bits());
    }
}
