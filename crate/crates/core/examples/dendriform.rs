//! The half-shuffles ≺_σ and ≻_σ on the tensor algebra: dendriform axioms,
//! braided compatibility and, for symmetric braidings, commutativity.

use std::sync::Arc;

use braidalg::gallery;
use braidalg::products::{Bilinear, QShuffleSplit, QuantumShuffle, Side};
use braidalg::structures::{check_braided_dendriform, check_commutative_dendriform, check_dendriform, Scope};
use braidalg::{Element, TensorSpace};

fn main() -> braidalg::Result<()> {
    for (name, sigma) in gallery::braidings(2) {
        let space = TensorSpace::new(2, 4);
        let qs = Arc::new(QuantumShuffle::new(sigma.clone(), space)?);
        let prec = QShuffleSplit::new(qs.clone(), Side::Left);
        let succ = QShuffleSplit::new(qs, Side::Right);
        let triples = Scope::new(space, 3, 1, 4);
        let d = check_dendriform(&prec, &succ, &triples)?;
        let b = check_braided_dendriform(&prec, &succ, &sigma, &triples)?;
        print!("{name:<16} dendriform {:?}  braided {:?}", d.status, b.status);
        if sigma.is_symmetric() {
            let c = check_commutative_dendriform(&prec, &succ, &sigma, &Scope::new(space, 2, 1, 4))?;
            print!("  commutative {:?}", c.status);
        }
        println!();
    }

    let space = TensorSpace::new(2, 3);
    let qs = Arc::new(QuantumShuffle::new(gallery::diag_q(2), space)?);
    let (x, y) = (Element::parse(space, "e1|e2")?, Element::parse(space, "e2")?);
    println!(
        "e1|e2 < e2 = {}",
        QShuffleSplit::new(qs.clone(), Side::Left).apply(&x, &y)?
    );
    println!("e1|e2 > e2 = {}", QShuffleSplit::new(qs, Side::Right).apply(&x, &y)?);
    Ok(())
}
