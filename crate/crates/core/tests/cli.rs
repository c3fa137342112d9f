use std::path::Path;
use std::process::{Command, Output};

use compensating_media::media;
use compensating_media::output::read_csv_numbers;

fn compmedia(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_compmedia")).args(args).output().expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    compmedia(args).status.code().expect("exit code")
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn verify_exit_codes() {
    assert_eq!(code(&["verify", "--case", "d1"]), 0);
    assert_eq!(code(&["verify", "--case", "d3", "--rel-tol", "1e-10"]), 0);
    assert_eq!(code(&["verify", "--case", "d1", "--span", "0,10"]), 2);
    assert_eq!(code(&["verify", "--case", "d1", "--span", "-1,1"]), 2);
    assert_eq!(code(&["verify", "--case", "d3", "--span", "0,4"]), 2);
    assert_eq!(code(&["verify", "--case", "d1", "--points", "1"]), 2);
    assert_eq!(code(&["verify", "--rel-tol", "0.1"]), 2);
    assert_eq!(code(&["verify", "--case", "d2"]), 2);
}

#[test]
fn negative_span_verifies() {
    assert_eq!(code(&["verify", "--case", "d1", "--span", "-10,-0.2"]), 0);
}

#[test]
fn verify_report_lists_checks() {
    let out = compmedia(&["verify", "--case", "d3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["columns"], serde_json::json!(["check", "max_residual", "tolerance", "passed"]));
    let rows = doc["rows"].as_array().unwrap();
    assert!(rows.len() > 10);
    assert!(rows.iter().all(|r| r[3] == serde_json::Value::Bool(true)));
}

#[test]
fn solve_spans() {
    let dir = tempfile::tempdir().unwrap();
    for (case, span) in [("d3", None), ("d1", Some("0.5,3"))] {
        let p = dir.path().join(format!("solve_{case}.csv"));
        let mut args = vec!["solve", "--case", case, "--output", path_str(&p)];
        if let Some(s) = span {
            args.extend(["--span", s]);
        }
        assert_eq!(code(&args), 0);
        let (cols, rows) = read_csv_numbers(&std::fs::read_to_string(&p).unwrap()).unwrap();
        assert_eq!(cols, ["coord", "psi_numeric", "psi_analytic", "abs_error"]);
        let worst = rows.iter().map(|r| r[3]).fold(0.0, f64::max);
        assert!(worst <= 1e-7, "{case}: {worst}");
    }
    assert_eq!(code(&["solve", "--case", "d1", "--span", "2,2"]), 2);
}

#[test]
fn figures_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    for id in ["1", "2", "3", "4", "5"] {
        let a = dir.path().join(format!("a{id}.csv"));
        let b = dir.path().join(format!("b{id}.csv"));
        assert_eq!(code(&["figure", "--id", id, "--output", path_str(&a)]), 0);
        assert_eq!(code(&["figure", "--id", id, "--output", path_str(&b)]), 0);
        assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap(), "figure {id}");
    }
    assert_eq!(code(&["figure", "--id", "0"]), 2);
    assert_eq!(code(&["figure"]), 2);
}

#[test]
fn figure_spot_values() {
    let fig3 = compmedia(&["figure", "--id", "3"]);
    let (_, rows3) = read_csv_numbers(std::str::from_utf8(&fig3.stdout).unwrap()).unwrap();
    assert_eq!(rows3[0][0], 0.0);
    assert!((rows3[0][1] - 0.55032121).abs() < 1e-8);
    let fig4 = compmedia(&["figure", "--id", "4"]);
    let (cols, rows4) = read_csv_numbers(std::str::from_utf8(&fig4.stdout).unwrap()).unwrap();
    assert_eq!(cols, ["x", "y", "psi"]);
    let centre = rows4.iter().find(|r| r[0] == 0.0 && r[1] == 0.0).unwrap();
    assert_eq!(centre[2], rows3[0][1]);
    // 2/π is not on the default grid; a custom three-node axis hits it
    let s = format!("{},{}", -2.0 / std::f64::consts::PI, 2.0 / std::f64::consts::PI);
    let fig1 = compmedia(&["figure", "--id", "1", "--span", &s, "--points", "3"]);
    let (_, rows1) = read_csv_numbers(std::str::from_utf8(&fig1.stdout).unwrap()).unwrap();
    assert!((rows1[2][1] - std::f64::consts::FRAC_2_PI).abs() < 1e-15);
}

#[test]
fn figures_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for id in ["1", "2", "3", "4", "5"] {
        let p = dir.path().join(format!("f{id}.csv"));
        assert_eq!(code(&["figure", "--id", id, "--output", path_str(&p)]), 0);
        let (_, rows) = read_csv_numbers(&std::fs::read_to_string(&p).unwrap()).unwrap();
        for r in rows {
            let (stored, exact) = match id {
                "1" => (r[1], media::psi_1d(r[0], 1.0)),
                "2" => (r[2], media::psi_1d(r[0] * r[1], 1.0)),
                "3" => (r[1], media::psi_3d(r[0], 1.0).unwrap()),
                "4" => (r[2], media::psi_3d(r[0].hypot(r[1]), 1.0).unwrap()),
                _ => (r[2], media::psi_3d(r[0] * r[1], 1.0).unwrap()),
            };
            assert!((stored - exact).abs() <= 1e-15 * exact.abs().max(f64::MIN_POSITIVE), "fig{id} {r:?}");
        }
    }
}

#[test]
fn provenance_header() {
    let out = compmedia(&["figure", "--id", "1", "--mass", "2", "--energy", "8"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("# version: "));
    assert_eq!(lines.next().unwrap(), "# command: figure --id 1 --case d1 --rel-tol 1e-10 --abs-tol 1e-12 --mass 2 --energy 8");
    let header = text.lines().find(|l| !l.starts_with('#')).unwrap();
    assert_eq!(header, "x,x_phys,psi");
    assert!(!text.contains('\r'));
}

#[test]
fn report_constants() {
    let out = compmedia(&["report", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let rows = doc["rows"].as_array().unwrap();
    let get = |k: &str| rows.iter().find(|r| r[0] == k).unwrap()[1].as_f64().unwrap();
    assert!((get("first_node_3d") - 1.997707100060420984).abs() < 1e-12);
    assert!((get("envelope_constant_3d") - 0.9510983344623723804).abs() < 1e-12);
}
