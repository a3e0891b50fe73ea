//! The three equivalent descriptions of a D-bialgebra: the compatibility
//! conditions, the matched pair of dual maps and the Manin triple on the
//! double.

use poisson_workbench::bialgebra::{
    build_double, build_dual_maps, check_dbialgebra, check_manin_triple, equivalence_report, Split,
};
use poisson_workbench::document::{to_json, Document};
use poisson_workbench::fixtures;
use poisson_workbench::matched_pair::check_matched_pair_ap;

fn main() -> poisson_workbench::Result<()> {
    for name in ["zero-cobracket-2d", "bialgebra-2d", "bialgebra-2d-broken"] {
        let Document::Bialgebra(b) = fixtures::load(name)? else { unreachable!() };
        let eq = equivalence_report(&b)?;
        println!("{name}: verdicts {:?}, agree {}", eq.verdicts(), eq.agree());
    }

    let Document::Bialgebra(b) = fixtures::load("bialgebra-2d")? else { unreachable!() };
    println!("\ncompatibility: {}", check_dbialgebra(&b)?);
    let mp = build_dual_maps(&b)?;
    println!("matched pair:  {}", check_matched_pair_ap(&mp)?);
    let (double, form) = build_double(&b)?;
    println!("manin triple:  {}", check_manin_triple(&double, &Split::standard(2), &form)?);
    println!("\ndouble:\n{}", to_json(&Document::from(double)));
    Ok(())
}
