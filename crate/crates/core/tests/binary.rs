use std::process::Command;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_multicurve"));
    c.env_remove("MULTICURVE_CACHE_DIR");
    c
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn series_json_is_byte_identical_across_runs() {
    let args = [
        "--format",
        "json",
        "series",
        "--g",
        "1",
        "--n",
        "1",
        "--which",
        "Z",
        "--max-deg",
        "7",
    ];
    let (code, a, _) = run(&args);
    let (_, b, _) = run(&args);
    assert_eq!(code, 0);
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(
        v["coeffs"],
        serde_json::json!(["1", "2", "4", "6", "8", "10", "12", "14"])
    );
    assert_eq!(v["symmetry"]["pass"], true);
    assert_eq!(v["surface"]["m"], 2);
}

#[test]
fn csv_has_one_row_per_degree() {
    let (code, out, _) = run(&[
        "--format",
        "csv",
        "series",
        "--g",
        "0",
        "--n",
        "3",
        "--max-deg",
        "5",
    ]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 7);
    assert_eq!(lines[1], "Zgn,0,1");
    assert_eq!(lines[6], "Zgn,5,0");
}

#[test]
fn count_reports_agreement() {
    let (code, out, _) = run(&[
        "--format",
        "json",
        "count",
        "--g",
        "0",
        "--n",
        "4",
        "--max-len",
        "4",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["rows"][2]["all"], "9");
    assert_eq!(v["rows"][2]["c_direct"], "3");
    assert_eq!(v["rows"][2]["agree"], true);
}

#[test]
fn errors_exit_nonzero() {
    let (code, _, err) = run(&["series", "--g", "0", "--n", "2"]);
    assert_eq!(code, 2);
    assert!(err.contains("S_{0,2}"), "{err}");
    let (code, _, _) = run(&["series", "--m", "2", "--g", "1", "--n", "1"]);
    assert_eq!(code, 2);
    let (code, _, err) = run(&["verify", "identities", "--prime", "15"]);
    assert_eq!(code, 2);
    assert!(err.contains("15"), "{err}");
}

#[test]
fn cache_directory_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin()
        .env("MULTICURVE_CACHE_DIR", dir.path())
        .args(["count", "--g", "1", "--n", "1", "--max-len", "3"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let mut files: Vec<String> = std::fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    files.sort();
    assert_eq!(
        files,
        [
            "v1_g1_n1_r0.json",
            "v1_g1_n1_r1.json",
            "v1_g1_n1_r2.json",
            "v1_g1_n1_r3.json"
        ]
    );
    let again = bin()
        .env("MULTICURVE_CACHE_DIR", dir.path())
        .args(["count", "--g", "1", "--n", "1", "--max-len", "3"])
        .output()
        .unwrap();
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn verify_suites_pass() {
    for args in [
        vec!["verify", "symmetry", "--m-max", "6"],
        vec!["verify", "euler", "--m-max", "8", "--trials", "20"],
        vec!["verify", "duality", "--m-max", "6"],
        vec![
            "verify",
            "basis",
            "--m",
            "2",
            "--r",
            "3",
            "--samples",
            "40",
            "--seed",
            "7",
        ],
        vec!["verify", "identities", "--trials", "200"],
        vec!["verify", "collapse", "--m-max", "3", "--r-max", "6"],
    ] {
        let (code, out, err) = run(&args);
        assert_eq!(code, 0, "{args:?}\n{out}\n{err}");
        assert!(out.lines().last().unwrap().starts_with("PASS"), "{out}");
    }
}
