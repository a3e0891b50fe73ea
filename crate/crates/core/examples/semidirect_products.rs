//! Semi-direct products from representations: a valid action yields an
//! almost Poisson algebra, a perturbed one does not.

use poisson_workbench::algebra::{check_almost_poisson, check_awb, AwbVariant};
use poisson_workbench::document::Document;
use poisson_workbench::fixtures;
use poisson_workbench::representation::{
    awb_semidirect, check_ap_rep, check_awb_rep, dual_rep, semidirect_ap, Actions, RepresentationData,
};

fn main() -> poisson_workbench::Result<()> {
    let Document::Algebra(lie) = fixtures::load("lie2d")? else { unreachable!() };
    let adjoint = RepresentationData::adjoint(&lie)?;
    let coadjoint = dual_rep(&adjoint)?;
    for (label, rep) in [("adjoint", &adjoint), ("coadjoint", &coadjoint)] {
        println!("{label}: rep {}, semidirect {}", check_ap_rep(rep)?.passed(), check_almost_poisson(&semidirect_ap(rep)?)?.passed());
    }

    // μ(e1)² = E11 while e1·e1 = 0
    let Actions::AlmostPoisson { mut mu, rho } = adjoint.actions().clone() else { unreachable!() };
    mu[0].set(0, 0, poisson_workbench::exact::rat(1));
    let perturbed = RepresentationData::new(lie, 2, Actions::AlmostPoisson { mu, rho })?;
    println!("perturbed rep: {}", check_ap_rep(&perturbed)?);
    println!("its semidirect product: {}", check_almost_poisson(&semidirect_ap(&perturbed)?)?);

    let Document::Algebra(awb) = fixtures::load("awb2d")? else { unreachable!() };
    let regular = RepresentationData::awb_regular(&awb)?;
    println!(
        "awb regular rep {}, semidirect {}",
        check_awb_rep(&regular)?.passed(),
        check_awb(&awb_semidirect(&regular)?, AwbVariant::Left)?.passed()
    );
    Ok(())
}
