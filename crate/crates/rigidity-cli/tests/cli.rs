//! End-to-end tests of the rigidity-lab binary: JSON output, exit codes,
//! cap handling, file input, and the search command.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_rigidity-lab"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json_of(out: &Output) -> serde_json::Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

#[test]
fn betti_cube_tuple() {
    let v = json_of(&run(&["betti", "cube(3)"]));
    assert_eq!(v["tuple"], serde_json::json!([3, 0]));
    assert_eq!(v["sigma"], 6);
}

#[test]
fn betti_dodecahedron_has_no_minus2_8_entry() {
    let v = json_of(&run(&["betti", "dodecahedron"]));
    let entries = v["entries"].as_array().unwrap();
    assert!(entries
        .iter()
        .all(|e| !(e[0] == serde_json::json!(2) && e[1] == serde_json::json!(8))));
    assert_eq!(v["m"], 12);
}

#[test]
fn classify_vertex_cut_of_cube() {
    let v = json_of(&run(&["classify", "vc(cube(3))"]));
    assert_eq!(v["vertex_cut_of_product"], true);
    assert_eq!(v["witness"]["factor_dims"], serde_json::json!([1, 1, 1]));
    assert_eq!(v["product_of_simplices"], serde_json::Value::Null);
}

#[test]
fn compare_detects_equal_betti_non_isomorphic() {
    // two combinatorially different triple cuts of the tetrahedron
    let v = json_of(&run(&[
        "compare",
        "vc(vc(vc(simplex(3),0),0),0)",
        "vc(vc(vc(simplex(3),0),4),0)",
    ]));
    assert_eq!(v["betti_equal"], true);
    assert_eq!(v["tuple_equal"], true);
    assert_eq!(v["isomorphic"], false);
    assert_eq!(v["equal_betti_non_isomorphic"], true);

    let v = json_of(&run(&["compare", "cube(3)", "vc(cube(3))"]));
    assert_eq!(v["betti_equal"], false);
    assert_eq!(v["isomorphic"], false);
}

#[test]
fn compare_relabeled_cube_is_isomorphic() {
    let dir = std::env::temp_dir().join("rigidity-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("relabeled-cube.json");
    // the cube complex with vertices renamed
    std::fs::write(
        &path,
        r#"{"name":"relabeled cube","vertices":6,"facets":
           [[5,1,0],[5,1,3],[5,4,0],[5,4,3],[2,1,0],[2,1,3],[2,4,0],[2,4,3]]}"#,
    )
    .unwrap();
    let v = json_of(&run(&["compare", "cube(3)", path.to_str().unwrap()]));
    assert_eq!(v["betti_equal"], true);
    assert_eq!(v["isomorphic"], true);
    assert!(v["bijection"].is_array());
}

#[test]
fn build_emits_normalized_complex_json() {
    let v = json_of(&run(&["build", "product(simplex(2),simplex(1))"]));
    assert_eq!(v["vertices"], 5);
    assert_eq!(v["name"], "product(simplex(2),simplex(1))");
    let facets = v["facets"].as_array().unwrap();
    assert_eq!(facets.len(), 6);
    // facets sorted lexicographically, members sorted
    assert_eq!(facets[0], serde_json::json!([0, 1, 3]));
}

#[test]
fn exit_codes() {
    // 1: parse errors
    let out = run(&["betti", "frobnicate(2)"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("parse error"));

    // 2: validation errors (a path complex is not a pseudomanifold)
    let dir = std::env::temp_dir().join("rigidity-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("path.json");
    std::fs::write(&path, r#"{"vertices":3,"facets":[[0,1],[1,2]]}"#).unwrap();
    let out = run(&["betti", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    // 3: cap exceeded
    let out = run(&["betti", "cube(3)", "--cap", "5"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn cap_env_var_and_flag_precedence() {
    let out = bin()
        .args(["betti", "cube(3)"])
        .env("RIGIDITY_CAP", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3), "env cap applies");

    let out = bin()
        .args(["betti", "cube(3)", "--cap", "10"])
        .env("RIGIDITY_CAP", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "flag overrides env");
}

#[test]
fn search_finds_the_edge_truncated_pentagonal_prism() {
    let v = json_of(&run(&[
        "search",
        "--target",
        "4:4,5:4",
        "--base",
        "product(polygon(5),simplex(1))",
        "--depth",
        "1",
    ]));
    let hits = v.as_array().unwrap();
    assert!(!hits.is_empty());
    assert_eq!(hits[0]["tuple"], serde_json::json!([10, 16, 5, 0]));

    let v = json_of(&run(&["search", "--target", "3:100", "--base", "cube(3)", "--depth", "1"]));
    assert_eq!(v.as_array().unwrap().len(), 0);
}

#[test]
fn text_format_renders() {
    let out = run(&["betti", "cube(3)", "--format", "text"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("tuple"));
    assert!(text.contains("(3,0)"));

    let out = run(&["invariants", "vc(cube(3))", "--format", "text"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("3^1 4^3 5^3"));
    assert!(text.contains("triangle-free: false"));
}

#[test]
fn deterministic_output() {
    let a = run(&["invariants", "vc(product(polygon(5),simplex(1)))"]);
    let b = run(&["invariants", "vc(product(polygon(5),simplex(1)))"]);
    assert_eq!(a.stdout, b.stdout, "byte-identical across runs");
}

#[test]
fn tables_command_passes() {
    let out = run(&["tables", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("19/19 constructible rows matched"));
}
