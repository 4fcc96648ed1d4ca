use super::{add_prepended, Bilinear, Memo};
use crate::braiding::{shuffle_set, Braiding};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tensor::{Element, LinComb, TensorSpace, Word};

/// Which half of a dendriform splitting.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// `≺`
    Left,
    /// `≻`
    Right,
}

/// Concatenation of words.
#[derive(Clone, Copy, Debug)]
pub struct Concat {
    pub space: TensorSpace,
}

impl Bilinear for Concat {
    fn space(&self) -> TensorSpace {
        self.space
    }
    fn words(&self, u: &Word, v: &Word) -> Result<LinComb<Word>> {
        self.space.check_grade(u.grade() + v.grade())?;
        Ok(LinComb::basis(u.concat(v)))
    }
}

/// The classical shuffle `u⧢v = u₁⊗(u′⧢v) + v₁⊗(u⧢v′)`.
pub struct Shuffle {
    space: TensorSpace,
    memo: Memo,
}

impl Shuffle {
    pub fn new(space: TensorSpace) -> Self {
        Shuffle {
            space,
            memo: Memo::default(),
        }
    }
}

impl Bilinear for Shuffle {
    fn space(&self) -> TensorSpace {
        self.space
    }

    fn words(&self, u: &Word, v: &Word) -> Result<LinComb<Word>> {
        if u.is_empty() {
            return Ok(LinComb::basis(v.clone()));
        }
        if v.is_empty() {
            return Ok(LinComb::basis(u.clone()));
        }
        self.space.check_grade(u.grade() + v.grade())?;
        self.memo.get_or(u, v, || {
            let mut out = LinComb::new();
            let one = Scalar::one();
            add_prepended(&mut out, u.letters()[0], &self.words(&u.tail(), v)?, &one);
            add_prepended(&mut out, v.letters()[0], &self.words(u, &v.tail())?, &one);
            Ok(out)
        })
    }
}

/// Loday's splitting of the classical shuffle on `T⁺(V)`.
pub struct LodaySplit {
    shuffle: std::sync::Arc<Shuffle>,
    side: Side,
}

impl LodaySplit {
    pub fn new(shuffle: std::sync::Arc<Shuffle>, side: Side) -> Self {
        LodaySplit { shuffle, side }
    }
}

impl Bilinear for LodaySplit {
    fn space(&self) -> TensorSpace {
        self.shuffle.space()
    }

    fn words(&self, u: &Word, v: &Word) -> Result<LinComb<Word>> {
        if u.is_empty() || v.is_empty() {
            return Err(Error::GradeZeroInput("dendriform splitting"));
        }
        self.space().check_grade(u.grade() + v.grade())?;
        let mut out = LinComb::new();
        match self.side {
            Side::Left => add_prepended(
                &mut out,
                u.letters()[0],
                &self.shuffle.words(&u.tail(), v)?,
                &Scalar::one(),
            ),
            Side::Right => add_prepended(
                &mut out,
                v.letters()[0],
                &self.shuffle.words(u, &v.tail())?,
                &Scalar::one(),
            ),
        }
        Ok(out)
    }
}

/// The quantum shuffle product `⧢_σ`, evaluated by its recursion.
pub struct QuantumShuffle {
    sigma: Braiding,
    space: TensorSpace,
    memo: Memo,
}

impl QuantumShuffle {
    pub fn new(sigma: Braiding, space: TensorSpace) -> Result<Self> {
        if !sigma.check_ybe() {
            return Err(Error::UnverifiedBraiding("quantum shuffle"));
        }
        if sigma.dim() != space.dim {
            return Err(Error::DimensionMismatch(format!(
                "braiding of dimension {} on a space of dimension {}",
                sigma.dim(),
                space.dim
            )));
        }
        Ok(QuantumShuffle {
            sigma,
            space,
            memo: Memo::default(),
        })
    }

    pub fn sigma(&self) -> &Braiding {
        &self.sigma
    }

    /// `u ≺_σ v = (id⊗⧢_σ)(u⊗v)`: the first letter of `u` stays in front.
    pub fn left(&self, u: &Word, v: &Word) -> Result<LinComb<Word>> {
        let mut out = LinComb::new();
        add_prepended(&mut out, u.letters()[0], &self.words(&u.tail(), v)?, &Scalar::one());
        Ok(out)
    }

    /// `u ≻_σ v = (id⊗⧢_σ)(β_{m,1}⊗id)(u⊗v)`: the first letter of `v` is braided in front.
    pub fn right(&self, u: &Word, v: &Word) -> Result<LinComb<Word>> {
        let mut out = LinComb::new();
        let (head, rest) = v.split_at(1);
        for ((x, u2), c) in self.sigma.beta_pair(u, &head)?.iter() {
            add_prepended(&mut out, x.letters()[0], &self.words(u2, &rest)?, c);
        }
        Ok(out)
    }
}

impl Bilinear for QuantumShuffle {
    fn space(&self) -> TensorSpace {
        self.space
    }

    fn words(&self, u: &Word, v: &Word) -> Result<LinComb<Word>> {
        if u.is_empty() {
            return Ok(LinComb::basis(v.clone()));
        }
        if v.is_empty() {
            return Ok(LinComb::basis(u.clone()));
        }
        self.space.check_grade(u.grade() + v.grade())?;
        self.memo.get_or(u, v, || Ok(self.left(u, v)?.add(&self.right(u, v)?)))
    }
}

/// `≺_σ` or `≻_σ` on `T⁺_σ(V)`.
pub struct QShuffleSplit {
    shuffle: std::sync::Arc<QuantumShuffle>,
    side: Side,
}

impl QShuffleSplit {
    pub fn new(shuffle: std::sync::Arc<QuantumShuffle>, side: Side) -> Self {
        QShuffleSplit { shuffle, side }
    }
}

impl Bilinear for QShuffleSplit {
    fn space(&self) -> TensorSpace {
        self.shuffle.space
    }

    fn words(&self, u: &Word, v: &Word) -> Result<LinComb<Word>> {
        if u.is_empty() || v.is_empty() {
            return Err(Error::GradeZeroInput("dendriform splitting"));
        }
        self.shuffle.space.check_grade(u.grade() + v.grade())?;
        match self.side {
            Side::Left => self.shuffle.left(u, v),
            Side::Right => self.shuffle.right(u, v),
        }
    }
}

/// Reference evaluation `u⧢_σv = Σ_{w∈𝔖_{m,n}} T^σ_w(u⊗v)`.
pub fn qshuffle_oracle(sigma: &Braiding, x: &Element, y: &Element) -> Result<Element> {
    let space = x.space();
    let mut out = LinComb::new();
    for (u, a) in x.terms().iter() {
        for (v, b) in y.terms().iter() {
            space.check_grade(u.grade() + v.grade())?;
            let uv = u.concat(v);
            for w in shuffle_set(u.grade(), v.grade()) {
                out.add_scaled(&sigma.lift_word(&w, &uv)?, &(a * b));
            }
        }
    }
    Element::from_terms(space, out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const SP: TensorSpace = TensorSpace { dim: 2, cap: 6 };

    fn el(t: &str) -> Element {
        Element::parse(SP, t).unwrap()
    }

    fn diag_q() -> Braiding {
        Braiding::diagonal(&vec![vec![Scalar::q(); 2]; 2]).unwrap()
    }

    #[test]
    fn classical_shuffle_examples() {
        let sh = Shuffle::new(SP);
        assert_eq!(sh.apply(&el("e1"), &el("e2")).unwrap(), el("e1|e2 + e2|e1"));
        assert_eq!(sh.apply(&el("e1|e1"), &el("e1")).unwrap(), el("3*e1|e1|e1"));
        assert_eq!(sh.apply(&el("e1|e2"), &el("1")).unwrap(), el("e1|e2"));
    }

    #[test]
    fn quantum_shuffle_examples() {
        let qs = QuantumShuffle::new(diag_q(), SP).unwrap();
        assert_eq!(qs.apply(&el("e1"), &el("e2")).unwrap(), el("e1|e2 + q*e2|e1"));
        assert_eq!(qs.apply(&el("1"), &el("e2|e1")).unwrap(), el("e2|e1"));
        assert_eq!(qs.apply(&el("e1"), &el("e1")).unwrap(), el("(1+q)*e1|e1"));
        let oracle = qshuffle_oracle(&diag_q(), &el("e1|e1"), &el("e2")).unwrap();
        assert_eq!(oracle, el("e1|e1|e2 + q*e1|e2|e1 + q^2*e2|e1|e1"));
        assert_eq!(qs.apply(&el("e1|e1"), &el("e2")).unwrap(), oracle);
    }

    #[test]
    fn flip_quantum_shuffle_is_classical() {
        let qs = QuantumShuffle::new(Braiding::flip(2), SP).unwrap();
        let sh = Shuffle::new(SP);
        for u in crate::tensor::words_up_to(2, 0, 3) {
            for v in crate::tensor::words_up_to(2, 0, 3) {
                assert_eq!(qs.words(&u, &v).unwrap(), sh.words(&u, &v).unwrap());
            }
        }
    }

    #[test]
    fn splittings_add_up() {
        let qs = std::sync::Arc::new(QuantumShuffle::new(diag_q(), SP).unwrap());
        let l = QShuffleSplit::new(qs.clone(), Side::Left);
        let r = QShuffleSplit::new(qs.clone(), Side::Right);
        assert_eq!(l.apply(&el("e1"), &el("e2")).unwrap(), el("e1|e2"));
        assert_eq!(r.apply(&el("e1"), &el("e2")).unwrap(), el("q*e2|e1"));
        let (x, y) = (el("e1|e2"), el("e2|e2 + e1"));
        assert_eq!(
            l.apply(&x, &y).unwrap().add(&r.apply(&x, &y).unwrap()).unwrap(),
            qs.apply(&x, &y).unwrap()
        );
        assert_eq!(
            l.apply(&el("1"), &y),
            Err(Error::GradeZeroInput("dendriform splitting"))
        );
    }

    #[test]
    fn overflow_is_reported() {
        let small = TensorSpace::new(2, 2);
        let qs = QuantumShuffle::new(diag_q(), small).unwrap();
        let x = Element::parse(small, "e1|e2").unwrap();
        assert_eq!(
            qs.apply(&x, &Element::parse(small, "e1").unwrap()),
            Err(Error::TruncationOverflow { grade: 3, cap: 2 })
        );
    }
}
