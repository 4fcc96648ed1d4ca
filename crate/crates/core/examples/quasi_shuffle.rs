//! Quantum quasi-shuffle and mixable shuffle products of weight λ on the
//! dual numbers, and their flip specializations.

use braidalg::gallery;
use braidalg::products::{Bilinear, ClassicalMixable, QuantumMixable, QuantumQuasiShuffle, QuasiShuffle};
use braidalg::{Element, Scalar, TensorSpace};

fn main() -> braidalg::Result<()> {
    let space = TensorSpace::new(2, 4);
    let x = Element::parse(space, "e1|e2")?;
    let y = Element::parse(space, "e2|e1")?;

    for lambda in [Scalar::zero(), Scalar::one(), Scalar::q()] {
        let qqs = QuantumQuasiShuffle::new(gallery::dual_numbers(Scalar::q()), lambda.clone(), space)?;
        let mix = QuantumMixable::new(gallery::dual_numbers(Scalar::q()), lambda.clone(), space)?;
        println!("lambda = {lambda}");
        println!("  quasi-shuffle: {}", qqs.apply(&x, &y)?);
        println!("  mixable:       {}", mix.apply(&x, &y)?);
    }

    // with the flip braiding both agree with their classical counterparts
    let lambda = Scalar::int(-1);
    let flip = gallery::dual_numbers(Scalar::one());
    let quantum = QuantumQuasiShuffle::new(flip.clone(), lambda.clone(), space)?;
    let classical = QuasiShuffle::new(flip.clone(), lambda.clone(), space)?;
    assert_eq!(quantum.apply(&x, &y)?, classical.apply(&x, &y)?);
    let qm = QuantumMixable::new(flip.clone(), lambda.clone(), space)?;
    let cm = ClassicalMixable::new(flip, lambda, space)?;
    assert_eq!(qm.apply(&x, &y)?, cm.apply(&x, &y)?);
    println!("flip specializations agree");
    Ok(())
}
