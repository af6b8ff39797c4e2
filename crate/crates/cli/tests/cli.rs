use std::collections::HashSet;
use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn treewalk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_treewalk"))
        .args(args)
        .output()
        .expect("spawn treewalk")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn fixture(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name);
    fs::read_to_string(path).unwrap()
}

fn scratch_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("treewalk-{tag}-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    for name in [
        "catalan.csv",
        "borel.csv",
        "polynomials.csv",
        "return_weights.csv",
    ] {
        fs::write(dir.join(name), fixture(name)).unwrap();
    }
    dir
}

#[test]
fn triangle_csv_matches_fixtures_byte_for_byte() {
    for kind in ["catalan", "borel"] {
        let out = treewalk(&["triangle", kind, "--rows", "7", "--format", "csv"]);
        assert!(out.status.success());
        assert_eq!(stdout(&out), fixture(&format!("{kind}.csv")));
    }
}

#[test]
fn triangle_plain_output() {
    let out = treewalk(&["triangle", "borel", "--rows", "0"]);
    assert_eq!(stdout(&out), "1\n");
    let out = treewalk(&["triangle", "borel", "--rows", "7"]);
    let last = stdout(&out).lines().last().unwrap().to_string();
    let fields: Vec<&str> = last.split_whitespace().collect();
    assert_eq!(
        fields,
        ["1430", "8008", "19656", "27300", "23100", "11880", "3432", "429"]
    );
    let out = treewalk(&["triangle", "catalan", "--rows", "2"]);
    assert_eq!(stdout(&out), "1\n1 1\n1 2 2\n");
}

#[test]
fn json_round_trips() {
    let cases: [&[&str]; 4] = [
        &["triangle", "catalan", "--rows", "9", "--format", "json"],
        &[
            "walks",
            "--n",
            "7",
            "--delta",
            "4",
            "--method",
            "all",
            "--format",
            "json",
            "--rational",
        ],
        &["poly", "--n", "6", "--format", "json"],
        &["stable", "--n", "6", "--format", "json"],
    ];
    for args in cases {
        let text = stdout(&treewalk(args));
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(value.to_string() + "\n", text, "{args:?}");
    }
}

#[test]
fn json_integers_are_strings() {
    let text = stdout(&treewalk(&[
        "triangle", "borel", "--rows", "1", "--format", "json",
    ]));
    assert_eq!(text, "[[\"1\"],[\"2\",\"1\"]]\n");
    let text = stdout(&treewalk(&["poly", "--n", "2", "--format", "json"]));
    assert_eq!(
        text,
        "{\"coefficients\":[\"2\",\"-1\",\"0\"],\"degree\":2}\n"
    );
}

#[test]
fn walks_methods() {
    let out = treewalk(&[
        "walks", "--n", "2", "--delta", "3", "--method", "all", "--format", "csv",
    ]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "components,15\ncatalan,15\nborel,15\ngf,15\noracle,15\n"
    );
    assert_eq!(
        stdout(&treewalk(&["walks", "--n", "1", "--delta", "5"])),
        "5\n"
    );
    assert_eq!(
        stdout(&treewalk(&["walks", "--n", "6", "--delta", "2"])),
        "924\n"
    );
    let out = treewalk(&["walks", "--n", "30", "--delta", "9", "--method", "all"]);
    assert!(out.status.success());
    let values: HashSet<String> = stdout(&out)
        .lines()
        .map(|l| l.split_whitespace().nth(1).unwrap().to_string())
        .collect();
    assert_eq!(values.len(), 1);
}

#[test]
fn rational_intermediates() {
    let out = treewalk(&[
        "walks",
        "--n",
        "2",
        "--delta",
        "3",
        "--method",
        "gf",
        "--rational",
    ]);
    assert_eq!(
        stdout(&out),
        "15\nsqrt: 1 0 -4 0 -8 0\ndenominator: 4 0 -12 0 -24 0\nreciprocal: 1/4 0 3/4 0 15/4 0\nseries: 1 0 3 0 15 0\n"
    );
}

#[test]
fn polynomial_rendering() {
    assert_eq!(
        stdout(&treewalk(&["poly", "--n", "5"])),
        "42δ⁵ − 120δ⁴ + 135δ³ − 70δ² + 14δ\n"
    );
    assert_eq!(stdout(&treewalk(&["poly", "--n", "1"])), "δ\n");
    assert_eq!(
        stdout(&treewalk(&["poly", "--n", "4", "--ascii"])),
        "14d^4 - 28d^3 + 20d^2 - 5d\n"
    );
    assert_eq!(
        stdout(&treewalk(&["poly", "--n", "3", "--format", "csv"])),
        "5,-6,2,0\n"
    );
}

#[test]
fn stable_output() {
    let out = treewalk(&["stable", "--n", "4", "--format", "csv"]);
    assert_eq!(stdout(&out), "1\n1\n1,1\n2,2,1\n5,5,3,1\n");
    let out = treewalk(&[
        "stable",
        "--n",
        "4",
        "--method",
        "enumerated",
        "--format",
        "csv",
    ]);
    assert_eq!(stdout(&out), "1\n1\n1,1\n2,2,1\n5,5,3,1\n");
    let out = treewalk(&[
        "stable",
        "--n",
        "5",
        "--method",
        "enumerated",
        "--enum-cap",
        "4",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exit_codes() {
    let usage: [&[&str]; 7] = [
        &["triangle", "pascal"],
        &["walks", "--n", "0", "--delta", "3"],
        &["walks", "--n", "3", "--delta", "0"],
        &["walks", "--n", "3", "--delta", "1", "--method", "gf"],
        &["poly", "--n", "7", "--check-fixture"],
        &["verify", "--max-n", "0"],
        &["frobnicate"],
    ];
    for args in usage {
        assert_eq!(treewalk(args).status.code(), Some(2), "{args:?}");
    }
    assert_eq!(
        treewalk(&["walks", "--n", "3", "--delta", "1", "--method", "all"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        treewalk(&["triangle", "catalan", "--check-fixture"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        treewalk(&["verify", "--max-n", "1", "--max-delta", "1"])
            .status
            .code(),
        Some(0)
    );
}

#[test]
fn deterministic_output() {
    let args = ["verify", "--max-n", "8", "--max-delta", "4"];
    let a = treewalk(&args);
    let b = treewalk(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn corrupted_triangle_fixture_is_located() {
    let dir = scratch_dir("triangle");
    let corrupted = fixture("catalan.csv").replace("1,5,14,28,42,42", "1,5,14,29,42,42");
    fs::write(dir.join("catalan.csv"), corrupted).unwrap();
    let dir_arg = dir.to_str().unwrap();

    let out = treewalk(&[
        "triangle",
        "catalan",
        "--check-fixture",
        "--fixture-dir",
        dir_arg,
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("catalan.csv row 5 col 3: fixture 29, computed 28"));

    let out = treewalk(&[
        "verify",
        "--max-n",
        "3",
        "--max-delta",
        "2",
        "--fixture-dir",
        dir_arg,
    ]);
    assert_eq!(out.status.code(), Some(1));
    let report = stdout(&out);
    assert!(report.contains("FAIL  bundled fixtures"));
    assert!(report.contains("catalan.csv row 5 col 3"));
    assert!(report.contains("7/8 checks passed"));
    fs::remove_dir_all(dir).unwrap();
}

#[test]
fn corrupted_polynomial_fixture_is_located() {
    let dir = scratch_dir("poly");
    let corrupted = fixture("polynomials.csv").replace("4,14,-28,20,-5", "4,14,-28,21,-5");
    fs::write(dir.join("polynomials.csv"), corrupted).unwrap();
    let weights = fixture("return_weights.csv").replace("5,3,9", "5,3,8");
    fs::write(dir.join("return_weights.csv"), weights).unwrap();
    let dir_arg = dir.to_str().unwrap();

    let out = treewalk(&[
        "poly",
        "--n",
        "4",
        "--check-fixture",
        "--fixture-dir",
        dir_arg,
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), "14δ⁴ − 28δ³ + 20δ² − 5δ\n");
    assert!(stderr(&out)
        .contains("polynomials.csv n=4 coefficient of delta^2: fixture 21, computed 20"));

    let out = treewalk(&[
        "poly",
        "--n",
        "5",
        "--check-fixture",
        "--fixture-dir",
        dir_arg,
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("return_weights.csv n=5 k=3"));

    let out = treewalk(&[
        "poly",
        "--n",
        "3",
        "--check-fixture",
        "--fixture-dir",
        dir_arg,
    ]);
    assert_eq!(out.status.code(), Some(0));
    fs::remove_dir_all(dir).unwrap();
}

#[test]
fn missing_fixture_dir_is_usage_error() {
    let out = treewalk(&[
        "triangle",
        "borel",
        "--check-fixture",
        "--fixture-dir",
        "/nonexistent/treewalk",
    ]);
    assert_eq!(out.status.code(), Some(2));
}
