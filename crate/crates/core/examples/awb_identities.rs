//! Checks the two-dimensional algebra with bracket and a few members of the
//! parametric family, then shows where a broken variant fails.

use std::collections::BTreeMap;

use poisson_workbench::algebra::{check_awb, check_opposite_bracket, AlgebraData, AwbVariant};
use poisson_workbench::document::Document;
use poisson_workbench::exact::rat;
use poisson_workbench::fixtures;

fn algebra(doc: Document) -> AlgebraData {
    match doc {
        Document::Algebra(a) => a,
        other => panic!("expected an algebra, got {}", other.kind_name()),
    }
}

fn main() -> poisson_workbench::Result<()> {
    let awb = algebra(fixtures::load("awb2d")?);
    println!("awb2d, left biderivation: {}", check_awb(&awb, AwbVariant::Left)?);
    println!("awb2d, opposite bracket:  {}", check_opposite_bracket(&awb)?);

    for values in [[1, 1, 1, 1], [2, 3, 5, 7], [1, -1, 0, 4]] {
        let params: BTreeMap<_, _> = ["alpha", "beta", "gamma", "nu"]
            .into_iter()
            .zip(values)
            .map(|(k, v)| (k.to_string(), rat(v)))
            .collect();
        let a = algebra(fixtures::load_with("awb2d-parametric", &params)?);
        println!("parametric {values:?}: {}", check_awb(&a, AwbVariant::Left)?);
    }

    let broken = algebra(fixtures::load("awb2d-broken")?);
    println!("awb2d-broken: {}", check_awb(&broken, AwbVariant::Left)?);
    Ok(())
}
