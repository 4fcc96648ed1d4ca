//! Free extensions: a braided algebra map into a Rota-Baxter algebra extends
//! to the mixable shuffle algebra, and a braided linear map into a dendriform
//! algebra extends to the half-shuffle algebra.

use braidalg::braiding::Braiding;
use braidalg::gallery;
use braidalg::structures::{RbContext, Scope};
use braidalg::universal::{DendriformContext, DendriformExtension, RbExtension};
use braidalg::{Element, LinComb, Scalar, TensorSpace, Word};

fn main() -> braidalg::Result<()> {
    // identity on the dual numbers extends to the identity of the mixable algebra
    let alg = gallery::dual_numbers(Scalar::one());
    let target = RbContext::mixable(alg.clone(), Scalar::one(), 4)?;
    let phi = vec![LinComb::basis(Word::letter(0)), LinComb::basis(Word::letter(1))];
    let ext = RbExtension::new(alg, Scalar::one(), 4, target, phi)?;
    let r = ext.verify(&Scope::new(ext.source().space(), 2, 1, 3))?;
    println!("rb extension: {:?} on {} pairs", r.status, r.counts.checked);
    let image = Element::from_terms(TensorSpace::new(2, 4), ext.word(&Word::one_based(&[1, 2, 1]))?)?;
    println!("image of e1|e2|e1: {image}");

    // the line x -> e1 + e2 into the half-shuffle algebra of the plane
    let target = DendriformContext::quantum_shuffle(gallery::flip(2), 3)?;
    let psi = vec![LinComb::basis(Word::letter(0)).add(&LinComb::basis(Word::letter(1)))];
    let ext = DendriformExtension::new(Braiding::flip(1), 3, target, psi)?;
    let r = ext.verify(&Scope::new(ext.source().space(), 2, 1, 3))?;
    println!("dendriform extension: {:?}", r.status);
    let image = Element::from_terms(TensorSpace::new(2, 3), ext.word(&Word::one_based(&[1, 1]))?)?;
    println!("image of e1|e1: {image}");
    Ok(())
}
