//! Command-line behavior: exit codes, flag forms, env fallback, and the
//! file-based orbit/forms workflows.

use std::process::{Command, Output};

fn orbit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orbit"))
        .args(args)
        .env_remove("ORBIT_SEED")
        .output()
        .expect("binary runs")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn usage_errors_exit_2() {
    let out = orbit(&["check", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(2));

    let out = orbit(&["gen", "--kind", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));

    let out = orbit(&["orbit", "--gamma", "0", "/nonexistent.json"]);
    assert_eq!(out.status.code(), Some(2));

    let out = orbit(&["orbit", "/nonexistent.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn generated_elements_parse_and_validate() {
    let dir = std::env::temp_dir().join("orbit-cli-test-gen");
    std::fs::create_dir_all(&dir).unwrap();

    for kind in ["sp-algebra", "symplectic", "siegel-point"] {
        let path = dir.join(format!("{kind}.json"));
        let out = orbit(&[
            "gen",
            "--kind",
            kind,
            "--n",
            "2",
            "--seed",
            "11",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
        let text = std::fs::read_to_string(&path).unwrap();
        // parse through the validating deserializers and confirm the
        // round-trip is byte-identical
        match kind {
            "sp-algebra" => {
                let e: orbit_core::symplectic::SpAlgebraElement =
                    serde_json::from_str(&text).unwrap();
                let back = serde_json::to_string_pretty(&e).unwrap() + "\n";
                assert_eq!(back, text);
            }
            "symplectic" => {
                let e: orbit_core::symplectic::SymplecticElement =
                    serde_json::from_str(&text).unwrap();
                let back = serde_json::to_string_pretty(&e).unwrap() + "\n";
                assert_eq!(back, text);
            }
            _ => {
                let e: orbit_core::siegel::SiegelPoint = serde_json::from_str(&text).unwrap();
                let back = serde_json::to_string_pretty(&e).unwrap() + "\n";
                assert_eq!(back, text);
            }
        }
    }
}

#[test]
fn orbit_command_maps_identity_to_base_point() {
    let dir = std::env::temp_dir().join("orbit-cli-test-orbit");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("identity.json");
    let identity = orbit_core::symplectic::SymplecticElement::identity(2);
    std::fs::write(&path, serde_json::to_string(&identity).unwrap()).unwrap();

    let out = orbit(&["orbit", "--gamma", "1.5", path.to_str().unwrap()]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(value["gamma"][0], 1.5);
    assert_eq!(value["gamma"][1], 0.0);
    // mu of the identity is the zero operator
    for block in ["pp", "pm", "mp", "mm"] {
        for entry in value["mu"][block]["entries"].as_array().unwrap() {
            assert_eq!(entry[0].as_f64().unwrap(), 0.0);
            assert_eq!(entry[1].as_f64().unwrap(), 0.0);
        }
    }
}

#[test]
fn orbit_command_hyperbolic_scalar() {
    let dir = std::env::temp_dir().join("orbit-cli-test-hyper");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("hyperbolic.json");
    let t = 0.4f64;
    std::fs::write(
        &path,
        format!(
            r#"{{"n":1,
                "g":{{"rows":1,"cols":1,"entries":[[{},0.0]]}},
                "h":{{"rows":1,"cols":1,"entries":[[{},0.0]]}}}}"#,
            t.cosh(),
            t.sinh()
        ),
    )
    .unwrap();

    let gamma = 2.0;
    let out = orbit(&["orbit", "--gamma", "2.0", path.to_str().unwrap()]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    // -gamma * sigma(a) for the hyperbolic element:
    // pp = -gamma*i(cosh 2t - 1), pm = gamma*i sinh 2t
    let ch = (2.0 * t).cosh();
    let sh = (2.0 * t).sinh();
    let pp = value["mu"]["pp"]["entries"][0].as_array().unwrap();
    assert!((pp[0].as_f64().unwrap()).abs() < 1e-12);
    assert!((pp[1].as_f64().unwrap() + gamma * (ch - 1.0)).abs() < 1e-12);
    let pm = value["mu"]["pm"]["entries"][0].as_array().unwrap();
    assert!((pm[1].as_f64().unwrap() - gamma * sh).abs() < 1e-12);
}

#[test]
fn orbit_command_rejects_non_members() {
    let dir = std::env::temp_dir().join("orbit-cli-test-badmember");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    std::fs::write(
        &path,
        r#"{"n":1,
            "g":{"rows":1,"cols":1,"entries":[[2.0,0.0]]},
            "h":{"rows":1,"cols":1,"entries":[[0.0,0.0]]}}"#,
    )
    .unwrap();
    let out = orbit(&["orbit", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("membership"));
}

#[test]
fn forms_degenerate_pair_is_flagged() {
    let dir = std::env::temp_dir().join("orbit-cli-test-forms");
    std::fs::create_dir_all(&dir).unwrap();
    let a_path = dir.join("a.json");
    std::fs::write(
        &a_path,
        r#"{"n":1,
            "a1":{"rows":1,"cols":1,"entries":[[0.0,0.0]]},
            "a2":{"rows":1,"cols":1,"entries":[[1.0,0.0]]}}"#,
    )
    .unwrap();

    let out = orbit(&["forms", a_path.to_str().unwrap(), a_path.to_str().unwrap()]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(value["degenerate"], serde_json::json!(true));
    assert_eq!(value["omega_d"].as_f64().unwrap(), 0.0);
    assert!(value["ratio"].is_null());
}

#[test]
fn forms_scale_linearly_in_gamma() {
    let dir = std::env::temp_dir().join("orbit-cli-test-forms-gamma");
    std::fs::create_dir_all(&dir).unwrap();
    let a_path = dir.join("a.json");
    let b_path = dir.join("b.json");
    std::fs::write(
        &a_path,
        r#"{"n":1,
            "a1":{"rows":1,"cols":1,"entries":[[0.0,0.0]]},
            "a2":{"rows":1,"cols":1,"entries":[[1.0,0.0]]}}"#,
    )
    .unwrap();
    std::fs::write(
        &b_path,
        r#"{"n":1,
            "a1":{"rows":1,"cols":1,"entries":[[0.0,0.0]]},
            "a2":{"rows":1,"cols":1,"entries":[[0.0,1.0]]}}"#,
    )
    .unwrap();

    let run = |gamma: &str| {
        let out = orbit(&[
            "forms",
            "--gamma",
            gamma,
            a_path.to_str().unwrap(),
            b_path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
        serde_json::from_str::<serde_json::Value>(&stdout_str(&out)).unwrap()
    };
    let one = run("1.0");
    let two = run("2.0");
    assert_eq!(one["omega_hat"].as_f64().unwrap(), 4.0);
    assert_eq!(one["kks"].as_f64().unwrap(), 4.0);
    assert_eq!(one["omega_d"].as_f64().unwrap(), -1.0);
    assert_eq!(one["ratio"].as_f64().unwrap(), -4.0);
    assert_eq!(two["omega_hat"].as_f64().unwrap(), 8.0);
    assert_eq!(two["kks"].as_f64().unwrap(), 8.0);
    // the disc form does not see gamma
    assert_eq!(two["omega_d"].as_f64().unwrap(), -1.0);
}

#[test]
fn tolerance_overrides_both_flag_forms() {
    // an absurdly tight tolerance must fail the check, in both spellings
    let out = orbit(&[
        "check",
        "--suite",
        "symplectic",
        "--trials",
        "3",
        "--tol",
        "closure=1e-20",
    ]);
    assert_eq!(out.status.code(), Some(1));

    let out = orbit(&[
        "check",
        "--suite",
        "symplectic",
        "--trials",
        "3",
        "--tol.closure",
        "1e-20",
    ]);
    assert_eq!(out.status.code(), Some(1));

    // unknown names are usage errors
    let out = orbit(&[
        "check",
        "--suite",
        "symplectic",
        "--trials",
        "3",
        "--tol",
        "no_such_check=1e-9",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn env_seed_fallback() {
    let with_env = |seed: &str| {
        Command::new(env!("CARGO_BIN_EXE_orbit"))
            .args(["gen", "--kind", "symplectic", "--n", "2"])
            .env("ORBIT_SEED", seed)
            .output()
            .expect("binary runs")
    };
    let a = with_env("123");
    let b = with_env("123");
    let c = with_env("124");
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_ne!(a.stdout, c.stdout);

    // explicit flag wins over the environment
    let flagged = Command::new(env!("CARGO_BIN_EXE_orbit"))
        .args(["gen", "--kind", "symplectic", "--n", "2", "--seed", "124"])
        .env("ORBIT_SEED", "123")
        .output()
        .expect("binary runs");
    assert_eq!(flagged.stdout, c.stdout);
}

#[test]
fn report_schema_and_reproducibility() {
    let run = || {
        let out = orbit(&[
            "check",
            "--suite",
            "polarized",
            "--trials",
            "2",
            "--seed",
            "9",
        ]);
        assert!(out.status.success());
        stdout_str(&out)
    };
    let first = run();
    let second = run();
    assert_eq!(first, second, "fixed-seed reports must be byte-identical");

    let value: serde_json::Value = serde_json::from_str(&first).unwrap();
    assert_eq!(value["suite"], "polarized");
    assert!(value["version"].is_string());
    assert_eq!(value["config"]["trials"], 2);
    assert_eq!(value["config"]["seed"], 9);
    let checks = value["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    for chk in checks {
        assert!(chk["name"].is_string());
        assert!(chk["max_residual"].is_number());
        assert!(chk["tolerance"].is_number());
        assert!(chk["pass"].is_boolean());
        let pass = chk["pass"].as_bool().unwrap();
        let resid = chk["max_residual"].as_f64().unwrap();
        let tol = chk["tolerance"].as_f64().unwrap();
        assert_eq!(pass, resid <= tol);
    }
}
