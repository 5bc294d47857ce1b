use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use maxsemi::{Bounds, FiniteSemigroup, Permutation, Transformation};
use maxsemi_cli::{InputSpec, ResultDocument};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn maxsemi(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_maxsemi"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(text) = stdin {
            pipe.write_all(text.as_bytes()).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn document(args: &[&str], stdin: Option<&str>) -> ResultDocument {
    let out = maxsemi(args, stdin);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    ResultDocument::from_json(&String::from_utf8(out.stdout).unwrap()).unwrap()
}

#[test]
fn rzms_example_document() {
    let doc = document(&["maximal", &data("rzms_s4.json")], None);
    assert_eq!(doc.schema, 1);
    assert_eq!(doc.size, 865);
    let counts = doc.counts.unwrap();
    assert_eq!(doc.maximal.as_ref().unwrap().len(), 32);
    assert_eq!(counts["R3"] + counts["R4"], 9);
    assert_eq!(counts["R5"], 14);
    assert_eq!(counts["R6"], 9);
}

#[test]
fn rzms_example_as_semigroup() {
    let doc = document(&["maximal", "--as-semigroup", &data("rzms_s4.json")], None);
    let counts = doc.counts.unwrap();
    assert_eq!(doc.maximal.unwrap().len(), 32);
    assert_eq!(counts["MAX-R3"] + counts["MAX-R4"], 9);
    assert_eq!(counts["MAX-R5"], 14);
    assert_eq!(counts["MAX-R6"], 9);
}

#[test]
fn w_document_contains_six_results_from_first_class() {
    let doc = document(&["maximal", "--verify", &data("w.json")], None);
    assert_eq!(doc.verified, Some(true));
    let first = doc.j_classes.iter().find(|c| c.representative == "1 3 4 1 5 5 5").unwrap();
    let from_first: Vec<_> = doc
        .maximal
        .as_ref()
        .unwrap()
        .iter()
        .filter(|m| m.j_class == Some(first.id))
        .collect();
    assert_eq!(from_first.len(), 6);
    for kind in ["S3", "S4", "S5"] {
        assert_eq!(from_first.iter().filter(|m| m.kind == kind).count(), 2, "{kind}");
    }
}

#[test]
fn generators_regenerate_stated_sizes() {
    let doc = document(&["maximal", &data("w.json")], None);
    for m in doc.maximal.unwrap() {
        let gens: Vec<Transformation> = m.generators.iter().map(|g| Transformation::parse(g).unwrap()).collect();
        let e = FiniteSemigroup::from_transformations(&gens, &Bounds::default()).unwrap();
        assert_eq!(e.semigroup.size(), m.size, "{}", m.kind);
        assert_eq!(m.size + m.removed, doc.size);
    }
}

#[test]
fn rzms_generators_regenerate_stated_sizes() {
    let doc = document(&["maximal", "--types", "R5,R6", &data("rzms_s4.json")], None);
    let spec = InputSpec::parse(&std::fs::read_to_string(data("rzms_s4.json")).unwrap()).unwrap();
    let r = spec.rzms().unwrap().unwrap();
    let by_label: std::collections::HashMap<String, usize> = (0..r.size()).map(|c| (r.label(c), c)).collect();
    let results = doc.maximal.unwrap();
    assert_eq!(results.len(), 23);
    for m in results {
        let gens: Vec<usize> = m.generators.iter().map(|g| by_label[g]).collect();
        assert_eq!(r.closure(&gens).len(), m.size, "{}", m.kind);
    }
}

#[test]
fn analyze_reports_w_structure() {
    let doc = document(&["analyze", &data("w.json")], None);
    assert!(doc.maximal.is_none());
    let first = doc.j_classes.iter().find(|c| c.representative == "1 3 4 1 5 5 5").unwrap();
    assert_eq!((first.l_classes, first.r_classes, first.regular), (4, 6, true));
}

#[test]
fn analyze_one_element() {
    let doc = document(&["analyze"], Some(r#"{"kind":"cayley_table","table":[[1]]}"#));
    assert_eq!(doc.size, 1);
    assert_eq!(doc.j_classes.len(), 1);
    assert!(doc.j_classes[0].regular);
}

#[test]
fn analyze_rzms_size() {
    assert_eq!(document(&["analyze", &data("rzms_s4.json")], None).size, 865);
}

#[test]
fn documents_round_trip_and_are_deterministic() {
    for args in [
        vec!["maximal", "--verify"],
        vec!["analyze"],
    ] {
        for input in ["w.json", "rzms_s4.json", "brandt_s3_2.json"] {
            let mut full = args.clone();
            let path = data(input);
            full.push(&path);
            let first = maxsemi(&full, None);
            let second = maxsemi(&full, None);
            assert!(first.status.success());
            assert_eq!(first.stdout, second.stdout, "{input}");
            let text = String::from_utf8(first.stdout).unwrap();
            let doc = ResultDocument::from_json(&text).unwrap();
            assert_eq!(doc.to_json(), text);
            assert_eq!(ResultDocument::from_json(&doc.to_json()).unwrap(), doc);
        }
    }
}

#[test]
fn timings_are_opt_in() {
    let plain = document(&["maximal", &data("brandt_s3_2.json")], None);
    assert!(plain.timings_ms.is_none());
    let timed = document(&["maximal", "--timings", &data("brandt_s3_2.json")], None);
    assert!(timed.timings_ms.unwrap().contains_key("search"));
}

#[test]
fn brandt_counts_through_cli() {
    let doc = document(&["maximal", "--types", "r6", &data("brandt_s3_2.json")], None);
    assert_eq!(doc.maximal.unwrap().len(), 11);
}

#[test]
fn type_filter_on_transformations() {
    let doc = document(&["maximal", "--types", "S3,S5", &data("w.json")], None);
    let kinds: std::collections::BTreeSet<String> = doc.maximal.unwrap().into_iter().map(|m| m.kind).collect();
    assert_eq!(kinds, ["S3", "S5"].iter().map(|s| s.to_string()).collect());
}

#[test]
fn malformed_cycle_is_input_error() {
    let input = r#"{"kind":"rzms","rows":1,"cols":1,"group":["(1 2"],"matrix":[["()"]]}"#;
    let out = maxsemi(&["maximal"], Some(input));
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("column"), "{err}");
}

#[test]
fn malformed_json_reports_line_and_column() {
    let out = maxsemi(&["analyze"], Some("{\n  \"kind\": \"cayley_table\",\n  \"table\": [[1]\n"));
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line") && err.contains("column"), "{err}");
}

#[test]
fn non_associative_table_is_input_error() {
    let out = maxsemi(&["analyze"], Some(r#"{"kind":"cayley_table","table":[[2,1],[1,1]]}"#));
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn non_regular_matrix_is_input_error() {
    let input = r#"{"kind":"rzms","rows":2,"cols":1,"group":[],"matrix":[["()","0"],["0","0"]]}"#;
    assert_eq!(maxsemi(&["maximal"], Some(input)).status.code(), Some(1));
}

#[test]
fn capacity_error_exit_code() {
    let out = maxsemi(&["analyze", "--bound-elements", "100", &data("w.json")], None);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("bound is 100"), "{err}");
}

#[test]
fn unknown_type_is_input_error() {
    assert_eq!(maxsemi(&["maximal", "--types", "S9", &data("w.json")], None).status.code(), Some(1));
}

#[test]
fn dot_errors() {
    assert_eq!(maxsemi(&["dot", "--graph", "delta", &data("w.json")], None).status.code(), Some(1));
    assert_eq!(
        maxsemi(&["dot", "--graph", "delta", "--jclass", "99", &data("w.json")], None).status.code(),
        Some(1)
    );
    assert_eq!(maxsemi(&["dot", "--graph", "gh", &data("w.json")], None).status.code(), Some(1));
    // Class 2 of W is a non-regular singleton.
    assert_eq!(
        maxsemi(&["dot", "--graph", "theta", "--jclass", "2", &data("w.json")], None).status.code(),
        Some(1)
    );
}

#[test]
fn gamma_goldens() {
    let golden = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden");
    for (graph, file) in [("gamma-l", "w_gamma_l.dot"), ("gamma-r", "w_gamma_r.dot")] {
        let out = maxsemi(&["dot", "--graph", graph, "--jclass", "1", &data("w.json")], None);
        assert!(out.status.success());
        assert_eq!(String::from_utf8(out.stdout).unwrap(), std::fs::read_to_string(golden.join(file)).unwrap());
    }
}

#[test]
fn gh_of_principal_factor_matches_rzms_input() {
    // The 865-element semigroup has one non-zero J-class; its principal
    // factor has the same Graham-Houghton graph up to relabelling.
    let doc = document(&["analyze", &data("rzms_s4.json")], None);
    let top = doc.j_classes.iter().find(|c| c.size == 864).unwrap();
    let out = maxsemi(&["dot", "--graph", "gh", "--jclass", &top.id.to_string(), &data("rzms_s4.json")], None);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.contains(" -- ")).count(), 11);
}

#[test]
fn cycle_notation_in_witnesses_parses() {
    let doc = document(&["maximal", "--types", "R6", &data("rzms_s4.json")], None);
    for m in doc.maximal.unwrap() {
        for c in m.witness["cosets"].as_array().unwrap() {
            Permutation::parse(c.as_str().unwrap(), 4).unwrap();
        }
    }
}
