//! Braid lifts T^σ_w of permutations, reduced-word independence and the
//! block braidings β_{ij}.

use braidalg::braiding::{chi, shuffle_set, Permutation};
use braidalg::gallery;
use braidalg::{TensorSpace, Word};

fn main() -> braidalg::Result<()> {
    let sigma = gallery::diag_q(2);
    println!("YBE holds: {}", sigma.check_ybe());

    let w = Permutation::from_images(&[3, 1, 4, 2])?;
    println!(
        "w = {w}, length {}, reduced words {:?}",
        w.length(),
        w.all_reduced_words()
    );
    let word = Word::one_based(&[1, 2, 1, 2]);
    println!(
        "T_w({word}) = {}",
        braidalg::Element::from_terms(TensorSpace::new(2, 4), sigma.lift_word(&w, &word)?)?
    );

    println!("|S(2,2)| = {}", shuffle_set(2, 2).len());
    println!("chi(2,1) = {}", chi(2, 1));

    let space = TensorSpace::new(2, 3);
    let beta = sigma.beta_ij(1, 2, space)?;
    let x = braidalg::Element::parse(space, "e1|e2|e2")?;
    println!("beta_12(e1|e2|e2) = {}", beta.apply(&x)?);
    Ok(())
}
