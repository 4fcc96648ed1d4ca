//! Dendriform Hopf compatibility of the half-shuffles with reduced
//! deconcatenation, and the bialgebra identity for the full quantum shuffle.

use std::sync::Arc;

use braidalg::gallery;
use braidalg::products::{Deconcat, QShuffleSplit, QuantumShuffle, ReducedDeconcat, Side};
use braidalg::structures::{check_bialgebra_compat, check_dendriform_hopf, check_ronco_term_match, Scope};
use braidalg::TensorSpace;

fn main() -> braidalg::Result<()> {
    for (name, sigma) in gallery::braidings(2) {
        let space = TensorSpace::new(2, 5);
        let qs = Arc::new(QuantumShuffle::new(sigma.clone(), space)?);
        let prec = QShuffleSplit::new(qs.clone(), Side::Left);
        let succ = QShuffleSplit::new(qs.clone(), Side::Right);
        let pairs = Scope::new(space, 2, 1, 5);
        let dha = check_dendriform_hopf(&prec, &succ, &ReducedDeconcat, &sigma, &pairs)?;
        let bi = check_bialgebra_compat(&*qs, &Deconcat, &sigma, &Scope::new(space, 2, 0, 4))?;
        println!(
            "{name:<16} dendriform-hopf {:?} ({} pairs), bialgebra {:?}",
            dha.status, dha.counts.checked, bi.status
        );
    }

    // for the flip the braided identities match the unbraided ones term by term
    let sigma = gallery::flip(2);
    let space = TensorSpace::new(2, 4);
    let qs = Arc::new(QuantumShuffle::new(sigma.clone(), space)?);
    let prec = QShuffleSplit::new(qs.clone(), Side::Left);
    let succ = QShuffleSplit::new(qs, Side::Right);
    let r = check_ronco_term_match(&prec, &succ, &ReducedDeconcat, &sigma, &Scope::new(space, 2, 1, 4))?;
    println!("flip term match: {:?}", r.status);
    Ok(())
}
