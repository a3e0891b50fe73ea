//! Coalgebras and their dual algebras, and dual representations.

use poisson_workbench::algebra::check_almost_poisson;
use poisson_workbench::bialgebra::{check_coalgebra, dualize_coalgebra, encode_as_coalgebra};
use poisson_workbench::document::Document;
use poisson_workbench::fixtures;
use poisson_workbench::representation::{check_ap_rep, dual_rep, RepresentationData};

fn main() -> poisson_workbench::Result<()> {
    for name in ["coalgebra-1d", "coalgebra-noncocomm-2d"] {
        let Document::Coalgebra(c) = fixtures::load(name)? else { unreachable!() };
        let dual = dualize_coalgebra(&c);
        println!("{name}: coalgebra {}, dual algebra {}", check_coalgebra(&c).passed(), check_almost_poisson(&dual)?.passed());
        println!("  encoding the dual recovers it: {}", encode_as_coalgebra(&dual) == c);
    }

    let Document::Algebra(a) = fixtures::load("ap3d-coupled")? else { unreachable!() };
    let adjoint = RepresentationData::adjoint(&a)?;
    let coadjoint = dual_rep(&adjoint)?;
    println!("coadjoint rep: {}", check_ap_rep(&coadjoint)?);
    println!("double dual is the adjoint: {}", dual_rep(&coadjoint)? == adjoint);
    Ok(())
}
