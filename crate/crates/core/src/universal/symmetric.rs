use crate::braiding::Braiding;
use crate::error::{Error, Result};
use crate::linalg::{kernel, Echelon};
use crate::scalar::Scalar;
use crate::tensor::{words_of_grade, LinComb, TensorSpace, Word};

/// A graded quotient of `T(V)` by a homogeneous ideal, with representatives
/// chosen greedily in canonical word order.
#[derive(Clone, Debug)]
pub struct QuotientBasis {
    space: TensorSpace,
    ideal: Echelon<Word>,
    reps: Vec<Vec<Word>>,
}

impl QuotientBasis {
    /// Quotient by the span `ideal` of homogeneous elements of grade `≤ cap`.
    pub fn new(space: TensorSpace, ideal: Echelon<Word>) -> Self {
        let reps = (0..=space.cap)
            .map(|n| words_of_grade(space.dim, n).filter(|w| !ideal.is_pivot(w)).collect())
            .collect();
        QuotientBasis { space, ideal, reps }
    }

    pub fn space(&self) -> TensorSpace {
        self.space
    }

    /// Representatives of grade `n`.
    pub fn reps(&self, n: usize) -> &[Word] {
        self.reps.get(n).map_or(&[], Vec::as_slice)
    }

    /// Dimension of each graded piece `0..=cap`.
    pub fn dims(&self) -> Vec<usize> {
        self.reps.iter().map(Vec::len).collect()
    }

    pub fn ideal(&self) -> &Echelon<Word> {
        &self.ideal
    }

    /// Projection along the ideal onto the span of representatives.
    pub fn reduce(&self, x: &LinComb<Word>) -> Result<LinComb<Word>> {
        for w in x.keys() {
            self.space.check_word(w)?;
        }
        Ok(self.ideal.reduce(x))
    }

    pub fn reduce_word(&self, w: &Word) -> Result<LinComb<Word>> {
        self.reduce(&LinComb::basis(w.clone()))
    }
}

/// `S(V) = T_σ(V)/(ker(σ+id))` through grade `cap`.
pub fn quantum_symmetric_basis(s: &Braiding, cap: usize) -> Result<QuotientBasis> {
    if !s.check_ybe() {
        return Err(Error::UnverifiedBraiding("quantum symmetric algebra"));
    }
    let d = s.dim();
    let space = TensorSpace::new(d, cap);
    let mut ideal = Echelon::new();
    if cap < 2 {
        return Ok(QuotientBasis::new(space, ideal));
    }
    let pairs: Vec<Word> = words_of_grade(d, 2).collect();
    let mut layer = kernel(&pairs, |w| {
        let l = w.letters();
        let mut image = s.apply_pair(l[0], l[1]).clone();
        image.add_term(w.clone(), Scalar::one());
        image
    });
    for k in &layer {
        ideal.insert(k);
    }
    for _ in 3..=cap {
        let mut next = Echelon::new();
        for v in &layer {
            for a in 0..d {
                let letter = Word::letter(a);
                let left: LinComb<Word> = v.iter().map(|(w, c)| (letter.concat(w), c.clone())).collect();
                let right: LinComb<Word> = v.iter().map(|(w, c)| (w.concat(&letter), c.clone())).collect();
                next.insert(&left);
                next.insert(&right);
            }
        }
        layer = next.rows().cloned().collect();
        for k in &layer {
            ideal.insert(k);
        }
    }
    Ok(QuotientBasis::new(space, ideal))
}
