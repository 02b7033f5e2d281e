use domkit_web::{certify_graph, check_bounds, compute_parameter, family_graph, parse_graph};
use serde_json::Value;

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

fn flat(doc: &Value) -> (usize, Vec<u32>) {
    let g = &doc["graph"];
    let edges = g["edges"]
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|e| [e[0].as_u64().unwrap() as u32, e[1].as_u64().unwrap() as u32])
        .collect();
    (g["n"].as_u64().unwrap() as usize, edges)
}

#[test]
fn figure3_parameters() {
    let doc = parse(family_graph(r#"{"family":"figure3"}"#));
    assert_eq!(doc["expected"]["double_domination"], 6);
    let (n, edges) = flat(&doc);
    let r = parse(compute_parameter(n, &edges, "x2"));
    assert_eq!(r["value"], 6);
    assert_eq!(r["witness"], serde_json::json!([0, 1, 2, 5, 6, 7]));
    assert_eq!(parse(compute_parameter(n, &edges, "γ₂"))["value"], 4);
}

#[test]
fn certify_and_bounds() {
    let doc = parse(family_graph(r#"{"family":"h","t":4,"r":2}"#));
    let (n, edges) = flat(&doc);
    let cert = parse(certify_graph(n, &edges, "beta-gamma"));
    assert_eq!(cert["valid"], true);
    assert_eq!(cert["size_bound"], 8);
    let checks = parse(check_bounds(n, &edges));
    let rows = checks["checks"].as_array().unwrap();
    assert_eq!(rows.len(), 11);
    assert!(rows.iter().all(|r| r["violated"] == false));
}

#[test]
fn errors_are_json() {
    let isolated = parse(compute_parameter(3, &[0, 1], "x2"));
    assert!(isolated["error"]
        .as_str()
        .unwrap()
        .contains("isolated vertex"));
    assert!(parse(compute_parameter(3, &[0, 1, 2], "x2"))["error"].is_string());
    assert!(parse(compute_parameter(3, &[0, 5], "gamma"))["error"].is_string());
    assert!(
        parse(certify_graph(4, &[0, 1, 0, 2, 0, 3], "total-gamma"))["error"]
            .as_str()
            .unwrap()
            .contains("not claw-free")
    );
    assert!(parse(family_graph(r#"{"family":"h","t":2,"r":2}"#))["error"].is_string());
    assert!(parse(parse_graph("B!"))["error"].is_string());
}

#[test]
fn parses_both_formats() {
    let a = parse(parse_graph("Bw"));
    let b = parse(parse_graph("# triangle\n3 3\n0 1\n0 2\n1 2\n"));
    assert_eq!(a, b);
    assert_eq!(a["graph"]["n"], 3);
}
