use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_mirror-integrality"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

/// `delta^2 - t (delta + 1)`: its mirror map has a 7 in a denominator.
fn write_toy(dir: &Path) -> String {
    let path = dir.join("toy.json");
    std::fs::write(
        &path,
        r#"{"name": "toy", "rank": 2, "delta_coefficients": [[0, -1], [0, -1], [1]]}"#,
    )
    .unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn quintic_report_passes() {
    let out = run(&[
        "report",
        "--fixture",
        "quintic",
        "--order",
        "50",
        "--prime-bound",
        "14",
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let report = json(&out);
    assert_eq!(report["operator"], "quintic");
    assert_eq!(report["order"], 50);
    assert_eq!(report["consistent"], true);
    assert_eq!(report["n_observed"], "1");
    assert_eq!(report["certified_primes"], serde_json::json!([7, 11, 13]));
    assert_eq!(report["certificates"].as_array().unwrap().len(), 9);
    assert!(report["n_violations"].as_array().unwrap().is_empty());
}

#[test]
fn quintic_certify_prime_seven() {
    let out = run(&["certify", "--fixture", "quintic", "--primes", "7"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let doc = json(&out);
    let certs = doc["certificates"].as_array().unwrap();
    let kinds: Vec<&str> = certs.iter().map(|c| c["kind"].as_str().unwrap()).collect();
    assert_eq!(kinds, ["dwork", "ksv", "gauge"]);
    // envelope fields in their documented order
    let text = stdout(&out);
    let first = &text[text.find("\"kind\"").unwrap()..];
    let positions: Vec<usize> = ["kind", "prime", "order", "verdict", "witness", "failure"]
        .iter()
        .map(|k| first.find(&format!("\"{k}\"")).unwrap())
        .collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]), "{positions:?}");
    for c in certs {
        assert_eq!(c["prime"], 7);
        assert_eq!(c["verdict"], "pass");
        assert!(c["failure"].is_null());
    }
}

#[test]
fn missing_operator_is_an_error() {
    let out = run(&["mirror-map", "--operator", "missing.json"]);
    assert_eq!(code(&out), 2);
    let err = stderr(&out);
    assert!(err.contains("MalformedSpec"), "{err}");
    assert!(err.contains("picard_fuchs::load_operator"), "{err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn failing_certificate_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let toy = write_toy(dir.path());
    let out = run(&[
        "certify",
        "--operator",
        &toy,
        "--primes",
        "7",
        "--order",
        "12",
        "--max-degree",
        "3",
    ]);
    assert_eq!(code(&out), 1, "{}", stderr(&out));
    let doc = json(&out);
    let dwork = &doc["certificates"][0];
    assert_eq!(dwork["verdict"], "fail");
    assert_eq!(dwork["failure"]["index"], 7);
    assert_eq!(dwork["failure"]["valuation"], -1);

    // the report skips the prime instead of certifying it
    let out = run(&[
        "report",
        "--operator",
        &toy,
        "--order",
        "12",
        "--max-degree",
        "3",
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let report = json(&out);
    assert_eq!(
        report["mirror_map_support"],
        serde_json::json!([2, 3, 5, 7])
    );
    assert_eq!(report["order"], 12);
}

#[test]
fn repeated_runs_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    for format in ["json", "csv", "text"] {
        let a = dir.path().join(format!("a.{format}"));
        let b = dir.path().join(format!("b.{format}"));
        for path in [&a, &b] {
            let out = run(&[
                "report",
                "--fixture",
                "quintic",
                "--order",
                "40",
                "--prime-bound",
                "20",
                "--format",
                format,
                "--out",
                path.to_str().unwrap(),
            ]);
            assert_eq!(code(&out), 0, "{}", stderr(&out));
            assert!(out.stdout.is_empty());
        }
        let (a, b) = (std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
        assert!(!a.is_empty());
        assert_eq!(a, b, "format {format}");
    }
}

#[test]
fn instanton_csv_table() {
    let out = run(&[
        "instantons",
        "--fixture",
        "quintic",
        "--max-degree",
        "3",
        "--format",
        "csv",
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert_eq!(
        stdout(&out),
        "d,n_d,denominator_primes\n1,2875/1,\n2,609250/1,\n3,317206375/1,\n"
    );

    let out = run(&["instantons", "--fixture", "quintic", "--max-degree", "3"]);
    let doc = json(&out);
    assert_eq!(doc["n0"], "5/1");
    let ds: Vec<u64> = doc["instantons"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["d"].as_u64().unwrap())
        .collect();
    assert_eq!(ds, [1, 2, 3]);
}

#[test]
fn text_report_has_n_observed() {
    let out = run(&[
        "report",
        "--fixture",
        "quintic",
        "--order",
        "30",
        "--max-degree",
        "8",
        "--format",
        "text",
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.lines().any(|l| l == "N_observed: 1"), "{text}");
    assert!(text.contains("consistent: true"));
}

#[test]
fn mirror_map_and_solve_documents() {
    let out = run(&[
        "mirror-map",
        "--fixture",
        "quintic",
        "--order",
        "5",
        "--max-degree",
        "2",
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let doc = json(&out);
    assert_eq!(doc["q_of_t"]["valuation"], 1);
    assert_eq!(doc["q_of_t"]["coefficients"][1], "770/1");
    assert_eq!(doc["t_of_q"]["coefficients"][1], "-770/1");

    let out = run(&[
        "solve",
        "--fixture",
        "quintic",
        "--order",
        "4",
        "--max-degree",
        "2",
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let doc = json(&out);
    assert_eq!(doc["pure_parts"].as_array().unwrap().len(), 4);
    assert_eq!(doc["pure_parts"][0]["coefficients"][1], "120/1");
    assert_eq!(doc["monodromy"]["ranks"]["nilpotent"], true);

    let out = run(&[
        "yukawa",
        "--fixture",
        "quintic",
        "--order",
        "3",
        "--max-degree",
        "2",
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert_eq!(json(&out)["y_q"]["coefficients"][1], "2875/1");
}

#[test]
fn configuration_errors() {
    let cases: [(&[&str], &str); 5] = [
        (
            &[
                "report",
                "--fixture",
                "quintic",
                "--order",
                "10",
                "--max-degree",
                "10",
            ],
            "InvalidConfig",
        ),
        (
            &["report", "--fixture", "quintic", "--prime-bound", "5"],
            "InvalidConfig",
        ),
        (&["report", "--fixture", "nonesuch"], "UnknownFixture"),
        (
            &[
                "yukawa",
                "--fixture",
                "hyp3-half",
                "--order",
                "8",
                "--max-degree",
                "2",
            ],
            "NotRankFour",
        ),
        (
            &["certify", "--fixture", "quintic", "--primes", "9"],
            "NotPrime",
        ),
    ];
    for (args, kind) in cases {
        let out = run(args);
        assert_eq!(code(&out), 2, "{args:?}");
        assert!(stderr(&out).contains(kind), "{args:?}: {}", stderr(&out));
    }
    // argument-level errors share the error exit code
    let out = run(&[
        "report",
        "--fixture",
        "quintic",
        "--primes",
        "7",
        "--prime-bound",
        "20",
    ]);
    assert_eq!(code(&out), 2);
    let out = run(&["report"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn inconsistent_report_exits_one() {
    // quintic with a_0 perturbed: instanton numbers pick up 2 and 3 in their
    // denominators, which the declared N = 5 does not allow
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("perturbed.json");
    std::fs::write(
        &path,
        r#"{"name": "perturbed", "rank": 4,
            "delta_coefficients": [[0, -121], [0, -1250], [0, -4375], [0, -6250], [1, -3125]],
            "n0": 5, "N": 5}"#,
    )
    .unwrap();
    let out = run(&[
        "report",
        "--operator",
        path.to_str().unwrap(),
        "--order",
        "10",
        "--max-degree",
        "4",
        "--prime-bound",
        "13",
    ]);
    assert_eq!(code(&out), 1, "{}", stderr(&out));
    let report = json(&out);
    assert_eq!(report["consistent"], false);
    let degrees: Vec<u64> = report["n_violations"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v["degree"].as_u64().unwrap())
        .collect();
    assert_eq!(degrees, [2, 3, 4]);
    assert_eq!(report["n_violations"][0]["primes"], serde_json::json!([2]));
}
