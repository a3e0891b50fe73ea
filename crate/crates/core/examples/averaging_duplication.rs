//! Duplicates an almost Poisson algebra into an algebra with bracket through a
//! relative averaging operator, and compares the three averaging criteria.

use poisson_workbench::algebra::{check_almost_poisson, check_awb, AwbVariant};
use poisson_workbench::document::{to_json, Document};
use poisson_workbench::fixtures;
use poisson_workbench::operators::{
    check_nijenhuis_awb, check_relative_averaging, graph_subalgebra_check, induced_awb, nijenhuis_from_operator,
};

fn main() -> poisson_workbench::Result<()> {
    for name in ["avg-3d", "avg-3d-broken"] {
        let Document::Operator(op) = fixtures::load(name)? else { unreachable!() };
        println!("== {name}");
        println!("base almost Poisson: {}", check_almost_poisson(op.rep().base())?.passed());
        println!("averaging:     {}", check_relative_averaging(&op)?);
        let (n, hemi) = nijenhuis_from_operator(&op)?;
        println!("nijenhuis:     {}", check_nijenhuis_awb(&n, &hemi)?.passed());
        println!("graph closure: {}", graph_subalgebra_check(&op)?.passed());
        match induced_awb(&op) {
            Ok(awb) => {
                println!("induced algebra with bracket:\n{}", to_json(&Document::from(awb.clone())));
                println!("left biderivation: {}", check_awb(&awb, AwbVariant::Left)?);
            }
            Err(e) => println!("no duplication: {e}"),
        }
    }
    Ok(())
}
