//! Graded dimensions of quantum symmetric algebras: tensor algebra modulo
//! the kernels of the quantum symmetrizers.

use braidalg::gallery;
use braidalg::universal::quantum_symmetric_basis;

fn main() -> braidalg::Result<()> {
    let cases = [
        ("flip, d=2", gallery::flip(2)),
        ("negated flip, d=2", gallery::neg_flip(2)),
        ("q * flip, d=2", gallery::q_flip(2)),
        ("diagonal q, d=2", gallery::diag_q(2)),
        ("negated flip, d=3", gallery::neg_flip(3)),
    ];
    for (name, sigma) in cases {
        let basis = quantum_symmetric_basis(&sigma, 5)?;
        println!("{name:<18} {:?}", basis.dims());
    }

    let ext = quantum_symmetric_basis(&gallery::neg_flip(2), 3)?;
    let reps: Vec<String> = ext.reps(2).iter().map(|w| w.to_string()).collect();
    println!("exterior algebra, grade 2 basis: {}", reps.join(", "));
    Ok(())
}
