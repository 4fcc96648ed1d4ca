//! Universal constructions: quantum symmetric algebras, the extensions that
//! make `ш_σ(A)` and `T⁺_σ(V)` free objects, and the enveloping Rota-Baxter
//! algebra of a braided dendriform algebra.

mod enveloping;
mod extension;
mod symmetric;

pub use enveloping::{verify_enveloping_universal, DendriformData, EnvelopingRb};
pub use extension::{DendriformContext, DendriformExtension, RbExtension};
pub use symmetric::{quantum_symmetric_basis, QuotientBasis};

use crate::tensor::Word;

/// Basis of `ш⁰(A) ⊂ ш(Ā)`: nonempty words whose last letter is not the
/// adjoined unit, graded by the sum of letter weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sha0 {
    unit: u8,
    weights: Vec<usize>,
}

impl Sha0 {
    /// `weights[a]` is the weight of letter `a`, including the unit.
    pub fn new(unit: u8, weights: Vec<usize>) -> Self {
        debug_assert!(weights.iter().all(|&w| w > 0));
        Sha0 { unit, weights }
    }

    pub fn unit(&self) -> u8 {
        self.unit
    }

    pub fn weight(&self, w: &Word) -> usize {
        w.letters().iter().map(|&a| self.weights[a as usize]).sum()
    }

    pub fn contains(&self, w: &Word) -> bool {
        w.last().is_some_and(|l| l != self.unit)
    }

    /// All basis words of weight `1..=max`, in canonical word order.
    pub fn basis(&self, max: usize) -> Vec<Word> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        self.fill(&mut cur, 0, max, &mut out);
        out.sort();
        out
    }

    fn fill(&self, cur: &mut Vec<u8>, weight: usize, max: usize, out: &mut Vec<Word>) {
        if cur.last().is_some_and(|&l| l != self.unit) {
            out.push(Word::from_letters(cur));
        }
        for (a, &wa) in self.weights.iter().enumerate() {
            if weight + wa <= max {
                cur.push(a as u8);
                self.fill(cur, weight + wa, max, out);
                cur.pop();
            }
        }
    }
}
