//! Quantum shuffle products over a diagonal braiding, checked against the
//! braid-lift sum over shuffle permutations.

use braidalg::gallery;
use braidalg::products::{qshuffle_oracle, Bilinear, QuantumShuffle};
use braidalg::{Element, TensorSpace};

fn main() -> braidalg::Result<()> {
    let sigma = gallery::diag_q(2);
    let space = TensorSpace::new(2, 5);
    let qs = QuantumShuffle::new(sigma.clone(), space)?;

    for (l, r) in [("e1", "e2"), ("e1|e2", "e1"), ("e1|e1", "e1"), ("e1|e2", "e2|e1")] {
        let x = Element::parse(space, l)?;
        let y = Element::parse(space, r)?;
        let z = qs.apply(&x, &y)?;
        assert_eq!(z, qshuffle_oracle(&sigma, &x, &y)?);
        println!("({l}) * ({r}) = {z}");
    }

    // one letter: the coefficients are Gaussian binomials
    let line = TensorSpace::new(1, 5);
    let qs1 = QuantumShuffle::new(gallery::diag_q(1), line)?;
    let x = Element::parse(line, "e1|e1")?;
    let y = Element::parse(line, "e1|e1|e1")?;
    println!("e1^2 * e1^3 = {}", qs1.apply(&x, &y)?);
    Ok(())
}
