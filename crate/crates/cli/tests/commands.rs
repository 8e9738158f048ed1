use std::path::PathBuf;
use std::process::{Command, Output};

use stardecomp::graph6::{encode_graph6, parse_graph6};
use stardecomp::{brute_force_decompose, verify_certificate, Certificate, Graph};
use stardecomp_cli::corpus::parse_corpus;
use stardecomp_cli::oracle::{default_decider, oracle_compare};
use stardecomp_cli::Options;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/tests/data")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stardecomp"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn records(text: &str) -> Vec<serde_json::Value> {
    text.lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn check_examples() {
    let k4 = run(&["check", "C~"]);
    assert_eq!(k4.status.code(), Some(0));
    assert!(stdout(&k4).contains("s12: no (order not divisible by 8)"));

    let q3 = run(&["check", "GsXP_[", "--emit-cert"]);
    let text = stdout(&q3);
    assert!(text.contains("s12: yes"));
    let cert_line = text
        .lines()
        .find_map(|l| l.strip_prefix("certificate: "))
        .unwrap();
    let cert = Certificate::from_json(cert_line).unwrap();
    assert_eq!(cert.stars.len(), 3);
    verify_certificate(&parse_graph6("GsXP_[").unwrap(), &cert, 3).unwrap();

    let petersen = encode_graph6(&Graph::petersen()).unwrap();
    assert!(stdout(&run(&["check", &petersen])).contains("s12: no"));
}

#[test]
fn check_json_carries_version() {
    let out = run(&["check", "GsXP_[", "--json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["v"], 1);
    assert_eq!(v["decision"], "yes");
    assert_eq!(v["necessary"]["size_ok"], true);
}

#[test]
fn check_exit_codes() {
    assert_eq!(run(&["check", "G?"]).status.code(), Some(2));
    assert_eq!(run(&["check", "not graph6"]).status.code(), Some(2));
    let g16 = encode_graph6(&stardecomp::random_cubic(16, 1).unwrap()).unwrap();
    let capped = Command::new(env!("CARGO_BIN_EXE_stardecomp"))
        .args(["check", &g16])
        .env("STARDECOMP_SCALE_MAX", "8")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(3));
}

#[test]
fn check_regular_degree_four() {
    let k5 = encode_graph6(&Graph::complete(5)).unwrap();
    let out = stdout(&run(&["check", &k5, "--r", "4"]));
    let expected = brute_force_decompose(&Graph::complete(5), 4)
        .unwrap()
        .is_some();
    assert!(
        out.contains(if expected { "s13: yes" } else { "s13: no" }),
        "{out}"
    );
}

#[test]
fn survey_order_is_stable_across_worker_counts() {
    let src = "random:n=16,count=40,seed=9";
    let one = stdout(&run(&["survey", src, "--jobs", "1"]));
    let many = stdout(&run(&["survey", src, "--jobs", "8"]));
    let strip = |t: &str| {
        records(t)
            .into_iter()
            .map(|mut r| {
                r.as_object_mut().unwrap().remove("elapsed_ms");
                r
            })
            .collect::<Vec<_>>()
    };
    assert_eq!(strip(&one), strip(&many));
    let idx: Vec<u64> = records(&one)
        .iter()
        .map(|r| r["index"].as_u64().unwrap())
        .collect();
    assert_eq!(idx, (1..=40).collect::<Vec<_>>());
}

#[test]
fn survey_yes_count_matches_backtracking() {
    let path = data("cubic_connected_8.g6");
    let out = run(&["survey", path.to_str().unwrap()]);
    let recs = records(&stdout(&out));
    assert_eq!(recs.len(), 5);
    let yes = recs.iter().filter(|r| r["s12"] == "yes").count();
    let text = std::fs::read_to_string(&path).unwrap();
    let oracle_yes = text
        .lines()
        .filter(|l| {
            brute_force_decompose(&parse_graph6(l).unwrap(), 3)
                .unwrap()
                .is_some()
        })
        .count();
    assert_eq!(yes, oracle_yes);
    assert!(recs.iter().all(|r| r["v"] == 1));
    assert!(String::from_utf8_lossy(&out.stderr).contains(&format!("yes={yes}")));
}

#[test]
fn survey_empty_and_malformed_input() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.g6");
    std::fs::write(&empty, "").unwrap();
    let out = run(&["survey", empty.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).is_empty());
    assert!(
        String::from_utf8_lossy(&out.stderr).contains("records=0 yes=0 no=0 skipped=0 errors=0")
    );

    let mixed = dir.path().join("mixed.g6");
    std::fs::write(&mixed, "GsXP_[\nG?\nC~\n").unwrap();
    let recs = records(&stdout(&run(&["survey", mixed.to_str().unwrap()])));
    assert_eq!(recs.len(), 3);
    assert_eq!(recs[0]["s12"], "yes");
    assert!(recs[1]["error"].is_string());
    assert_eq!(recs[2]["s12"], "no");
    assert!(recs[0].get("error").is_none() || recs[0]["error"].is_null());
}

#[test]
fn survey_writes_certificate_sidecars() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("run/survey.jsonl");
    let catalog = data("cubic_connected_8.g6");
    let status = run(&[
        "survey",
        catalog.to_str().unwrap(),
        "--emit-cert",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(status.status.code(), Some(0));
    let recs = records(&std::fs::read_to_string(&out_path).unwrap());
    let graphs: Vec<Graph> = std::fs::read_to_string(&catalog)
        .unwrap()
        .lines()
        .map(|l| parse_graph6(l).unwrap())
        .collect();
    for (rec, g) in recs.iter().zip(&graphs) {
        let index = rec["index"].as_u64().unwrap();
        match rec["s12"].as_str().unwrap() {
            "yes" => {
                let path = PathBuf::from(rec["certificate_path"].as_str().unwrap());
                assert_eq!(
                    path.file_name().unwrap().to_str().unwrap(),
                    format!("{index}.cert.json")
                );
                let cert = Certificate::from_json(&std::fs::read_to_string(path).unwrap()).unwrap();
                verify_certificate(g, &cert, 3).unwrap();
            }
            _ => assert!(rec["certificate_path"].is_null()),
        }
    }
}

#[test]
fn survey_records_non_cubic_as_skipped() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("noncubic.g6");
    std::fs::write(
        &path,
        format!("{}\n", encode_graph6(&Graph::cycle(8)).unwrap()),
    )
    .unwrap();
    let recs = records(&stdout(&run(&["survey", path.to_str().unwrap()])));
    assert_eq!(recs[0]["s12"], "skipped");
    assert!(recs[0]["reason"].is_string());
}

#[test]
fn oracle_compare_catalog_passes() {
    let out = run(&[
        "oracle-compare",
        data("cubic_connected_8.g6").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("5 compared, 5 agreed"));
}

#[test]
fn oracle_compare_skips_non_cubic_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("noncubic.g6");
    let lines = [Graph::cycle(8), Graph::complete(5), Graph::path(4)]
        .iter()
        .map(|g| encode_graph6(g).unwrap())
        .collect::<Vec<_>>()
        .join("\n");
    std::fs::write(&path, lines).unwrap();
    let out = run(&["oracle-compare", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.matches("skipped line").count(), 3);
    assert!(text.contains("0 compared"));
}

#[test]
fn oracle_compare_catches_a_mutated_decider() {
    let text = std::fs::read_to_string(data("cubic_connected_8.g6")).unwrap();
    let lines = parse_corpus(&text);
    let honest = default_decider(Default::default());
    let flipped = |g: &Graph| honest(g).map(|c| if c.is_some() { None } else { c });
    let report = oracle_compare(&lines, 28, &Options::default(), flipped).unwrap();
    assert_eq!(report.exit_code(), 1);
    assert!(!report.mismatches.is_empty());
    let row = serde_json::to_value(&report.mismatches[0]).unwrap();
    assert_eq!(row["decide"]["decomposable"], false);
    assert_eq!(row["oracle"]["decomposable"], true);
}

#[test]
fn hunt_bipartite_order_8_finds_nothing() {
    let out = run(&[
        "hunt",
        data("bipartite_cubic_8.g6").to_str().unwrap(),
        "--bipartite",
        "--order-mod-8",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("none found in corpus"));
}

#[test]
fn hunt_connectivity_filter_excludes_bridged_graphs() {
    let path = data("cubic_connected_10.g6");
    let text = std::fs::read_to_string(&path).unwrap();
    let bridged: Vec<&str> = text
        .lines()
        .filter(|l| parse_graph6(l).unwrap().vertex_connectivity() == 1)
        .collect();
    assert!(!bridged.is_empty());
    let all = stdout(&run(&["hunt", path.to_str().unwrap()]));
    for g in &bridged {
        assert!(all.contains(&format!("\"graph6\":\"{g}\"")));
    }
    let filtered = stdout(&run(&[
        "hunt",
        path.to_str().unwrap(),
        "--min-connectivity",
        "2",
    ]));
    for g in &bridged {
        assert!(!filtered.contains(&format!("\"graph6\":\"{g}\"")));
    }
}

#[test]
fn hunt_hits_are_reconfirmed() {
    let out = run(&[
        "hunt",
        "random:n=16,count=300,seed=1",
        "--alpha-equals-3n8",
        "--triangle-free",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for line in text.lines().filter(|l| l.starts_with('{')) {
        let hit: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(hit["confirmed"], true);
        let g = parse_graph6(hit["graph6"].as_str().unwrap()).unwrap();
        assert!(brute_force_decompose(&g, 3).unwrap().is_none());
    }
    assert!(text.contains("hunt: examined=300"));
}

#[test]
fn bad_generator_spec_is_an_error() {
    let out = run(&["survey", "random:n=16,count=x"]);
    assert_ne!(out.status.code(), Some(0));
}
