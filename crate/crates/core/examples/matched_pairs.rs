//! Matched pairs of almost Poisson algebras and their bowtie algebras.

use poisson_workbench::algebra::check_almost_poisson;
use poisson_workbench::document::Document;
use poisson_workbench::fixtures;
use poisson_workbench::matched_pair::{block_swap, bowtie, check_matched_pair_ap, MatchedPairData};

fn main() -> poisson_workbench::Result<()> {
    let Document::Algebra(lie) = fixtures::load("lie2d")? else { unreachable!() };
    let Document::Algebra(coupled) = fixtures::load("ap3d-coupled")? else { unreachable!() };
    let trivial = MatchedPairData::trivial(lie, coupled, true)?;
    println!("trivial actions: {}", check_matched_pair_ap(&trivial)?);
    println!("direct product:  {}", check_almost_poisson(&bowtie(&trivial)?)?);

    let Document::MatchedPair(dual) = fixtures::load("matched-pair-dual-2d")? else { unreachable!() };
    let joined = bowtie(&dual)?;
    println!("dual maps: {}, bowtie {}", check_matched_pair_ap(&dual)?, check_almost_poisson(&joined)?);
    let swapped = bowtie(&dual.swapped())?;
    println!("block swap gives the swapped bowtie: {}", joined.permuted(&block_swap(2, 2))? == swapped);
    Ok(())
}
