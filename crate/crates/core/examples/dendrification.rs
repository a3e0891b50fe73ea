//! Splits an almost Poisson algebra along a weighted Rota-Baxter operator and
//! recovers it from the associated algebra.

use poisson_workbench::algebra::check_almost_poisson;
use poisson_workbench::document::{to_json, Document};
use poisson_workbench::fixtures;
use poisson_workbench::operators::{associated_ap, check_homomorphism, check_tridendriform, check_weighted_rrb, dendrify};

fn main() -> poisson_workbench::Result<()> {
    for name in ["rb-identity-lie2d", "rb-projection-3d"] {
        let Document::Operator(op) = fixtures::load(name)? else { unreachable!() };
        println!("== {name}");
        println!("rota-baxter:   {}", check_weighted_rrb(&op)?);
        let t = dendrify(&op)?;
        println!("tridendriform: {}", check_tridendriform(&t)?);
        let assoc = associated_ap(&t)?;
        println!("associated almost Poisson: {}", check_almost_poisson(&assoc)?);
        println!("operator is a homomorphism: {}", check_homomorphism(op.map(), &assoc, op.rep().base())?);
        if name == "rb-projection-3d" {
            println!("{}", to_json(&Document::from(t)));
        }
    }
    Ok(())
}
