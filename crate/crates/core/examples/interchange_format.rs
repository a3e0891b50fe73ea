//! Reads documents with parameters and shorthand entries, reports input
//! errors with their location, and writes the normalized form back out.

use std::collections::BTreeMap;

use poisson_workbench::document::{parse_document, parse_document_with, to_json};
use poisson_workbench::exact::rat;

const SHORTHAND: &str = r#"{
  "kind": "algebra",
  "algebra_kind": "almost-poisson",
  "dim": 2,
  "params": {"t": "1/2"},
  "product": [[1, 1, 1, "1"]],
  "bracket": [[1, 2, 2, "t"]]
}"#;

fn main() -> poisson_workbench::Result<()> {
    let doc = parse_document(SHORTHAND)?;
    println!("normalized:\n{}", to_json(&doc));

    let overrides: BTreeMap<_, _> = [("t".to_string(), rat(3))].into_iter().collect();
    println!("with t = 3:\n{}", to_json(&parse_document_with(SHORTHAND, &overrides)?));

    for bad in [
        r#"{"kind": "algebra", "algebra_kind": "almost-poisson", "dim": 2, "product": [[1, 2, 1, 1], [2, 1, 1, 2]], "bracket": []}"#,
        r#"{"kind": "algebra", "algebra_kind": "almost-poisson", "dim": 2, "product": [], "bracket": [[1, 1, 2, 1]]}"#,
        r#"{"kind": "algebra", "algebra_kind": "assoc", "dim": 2, "product": [], "colour": "red"}"#,
        r#"{"kind": "algebra", "dim": 2,"#,
    ] {
        println!("rejected: {}", parse_document(bad).unwrap_err());
    }
    Ok(())
}
