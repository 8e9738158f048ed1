use stardecomp::graph6::parse_graph6;
use stardecomp::{verify_certificate, Certificate, DoubleStar};
use stardecomp_web::{center_set_report_value, decompose_report, random_cubic_value};

fn certificate(order: usize, stars: &serde_json::Value) -> Certificate {
    Certificate {
        order,
        r: 3,
        stars: serde_json::from_value::<Vec<DoubleStar>>(stars.clone()).unwrap(),
    }
}

#[test]
fn cube_decomposes_and_draws() {
    let v = decompose_report("GsXP_[");
    assert_eq!(v["ok"], true);
    assert_eq!(v["decomposable"], true);
    assert_eq!(v["verified"], true);
    assert_eq!(v["graph"]["layout"].as_array().unwrap().len(), 8);
    assert_eq!(v["graph"]["edges"].as_array().unwrap().len(), 12);
    let g = parse_graph6("GsXP_[").unwrap();
    verify_certificate(&g, &certificate(8, &v["stars"]), 3).unwrap();
    assert_eq!(v["paths"].as_array().unwrap().len(), 4);
}

#[test]
fn refusals_and_errors() {
    let k4 = decompose_report("C~");
    assert_eq!(k4["decomposable"], false);
    assert!(k4["reason"].as_str().unwrap().contains("order 4"));
    assert_eq!(decompose_report("G?")["ok"], false);
    assert_eq!(decompose_report("C]")["ok"], false);
    let big = random_cubic_value(32, 1);
    assert_eq!(
        decompose_report(big["graph6"].as_str().unwrap())["ok"],
        false
    );
}

#[test]
fn center_sets() {
    let ok = center_set_report_value("GsXP_[", "0, 4 5");
    assert_eq!(ok["ok"], true);
    let good = decompose_report("GsXP_[");
    let centers: Vec<String> = good["stars"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["center"].to_string())
        .collect();
    let chosen = center_set_report_value("GsXP_[", &centers.join(","));
    assert_eq!(chosen["decomposable"], true);
    assert_eq!(chosen["necessary_all"], true);

    let adjacent = center_set_report_value("GsXP_[", "0,1,2");
    assert_eq!(adjacent["decomposable"], false);
    assert!(
        adjacent["aux"]["error"].is_string() || adjacent["necessary"]["independent_ok"] == false
    );
    assert_eq!(center_set_report_value("GsXP_[", "9")["ok"], false);
    assert_eq!(center_set_report_value("GsXP_[", "a")["ok"], false);
}

#[test]
fn random_graphs_are_seeded() {
    let a = random_cubic_value(16, 3);
    assert_eq!(a, random_cubic_value(16, 3));
    assert!(parse_graph6(a["graph6"].as_str().unwrap())
        .unwrap()
        .is_cubic());
    assert_eq!(random_cubic_value(7, 0)["ok"], false);
}
