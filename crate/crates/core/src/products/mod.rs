//! Products on tensor words: concatenation, classical and quantum shuffles,
//! quasi-shuffles, mixable products, the Rota-Baxter operator `P` and the
//! dendriform splittings.

mod quasi;
mod rb;
mod shuffle;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

pub use quasi::{ClassicalMixable, QuantumMixable, QuantumQuasiShuffle, QuasiShuffle};
pub use rb::{Identity, RbOperator, RbSplit, ScaledOp, SumProduct, ZeroOp};
pub use shuffle::{qshuffle_oracle, Concat, LodaySplit, QShuffleSplit, QuantumShuffle, Shuffle, Side};

use crate::braiding::Braiding;
use crate::error::Result;
use crate::scalar::Scalar;
use crate::tensor::{deconcat_reduced_word, deconcat_word, Element, LinComb, TensorSpace, Word};

/// A bilinear product given on basis words.
pub trait Bilinear: Send + Sync {
    fn space(&self) -> TensorSpace;

    fn words(&self, u: &Word, v: &Word) -> Result<LinComb<Word>>;

    fn apply(&self, x: &Element, y: &Element) -> Result<Element> {
        let mut out = LinComb::new();
        for (u, a) in x.terms().iter() {
            for (v, b) in y.terms().iter() {
                out.add_scaled(&self.words(u, v)?, &(a * b));
            }
        }
        Element::from_terms(self.space(), out)
    }

    /// Bilinear extension to combinations of words.
    fn combos(&self, x: &LinComb<Word>, y: &LinComb<Word>) -> Result<LinComb<Word>> {
        let mut out = LinComb::new();
        for (u, a) in x.iter() {
            for (v, b) in y.iter() {
                out.add_scaled(&self.words(u, v)?, &(a * b));
            }
        }
        Ok(out)
    }
}

/// A linear operator given on basis words.
pub trait LinearOp: Send + Sync {
    fn word(&self, w: &Word) -> Result<LinComb<Word>>;

    fn combo(&self, x: &LinComb<Word>) -> Result<LinComb<Word>> {
        x.map_linear(|w| self.word(w))
    }
}

/// A map `T⊗T → T⊗T` on pairs of words, typically the braiding `β`.
pub trait PairMap: Send + Sync {
    fn pair(&self, u: &Word, v: &Word) -> Result<LinComb<(Word, Word)>>;
}

impl PairMap for Braiding {
    fn pair(&self, u: &Word, v: &Word) -> Result<LinComb<(Word, Word)>> {
        self.beta_pair(u, v)
    }
}

/// The classical flip on pairs of words.
#[derive(Clone, Copy, Debug, Default)]
pub struct Flip;

impl PairMap for Flip {
    fn pair(&self, u: &Word, v: &Word) -> Result<LinComb<(Word, Word)>> {
        Ok(LinComb::basis((v.clone(), u.clone())))
    }
}

/// A coproduct-like map `T → T⊗T` on basis words.
pub trait Coproduct: Send + Sync {
    fn split(&self, w: &Word) -> Result<LinComb<(Word, Word)>>;
}

/// Deconcatenation `Δ`, all cuts of a word.
#[derive(Clone, Copy, Debug, Default)]
pub struct Deconcat;

impl Coproduct for Deconcat {
    fn split(&self, w: &Word) -> Result<LinComb<(Word, Word)>> {
        Ok(deconcat_word(w).into_iter().map(|p| (p, Scalar::one())).collect())
    }
}

/// Reduced deconcatenation `Δ̄`, interior cuts only, on positive grades.
#[derive(Clone, Copy, Debug, Default)]
pub struct ReducedDeconcat;

impl Coproduct for ReducedDeconcat {
    fn split(&self, w: &Word) -> Result<LinComb<(Word, Word)>> {
        Ok(deconcat_reduced_word(w)?
            .into_iter()
            .map(|p| (p, Scalar::one()))
            .collect())
    }
}

macro_rules! forward {
    ($($ptr:ident),*) => {$(
        impl<T: Bilinear + ?Sized> Bilinear for $ptr<T> {
            fn space(&self) -> TensorSpace {
                (**self).space()
            }
            fn words(&self, u: &Word, v: &Word) -> Result<LinComb<Word>> {
                (**self).words(u, v)
            }
        }
        impl<T: LinearOp + ?Sized> LinearOp for $ptr<T> {
            fn word(&self, w: &Word) -> Result<LinComb<Word>> {
                (**self).word(w)
            }
        }
        impl<T: PairMap + ?Sized> PairMap for $ptr<T> {
            fn pair(&self, u: &Word, v: &Word) -> Result<LinComb<(Word, Word)>> {
                (**self).pair(u, v)
            }
        }
    )*};
}

forward!(Arc, Box);

/// A product defined by a closure, for ad hoc and deliberately broken splits.
pub struct FnProduct<F> {
    space: TensorSpace,
    f: F,
}

impl<F> FnProduct<F>
where
    F: Fn(&Word, &Word) -> Result<LinComb<Word>> + Send + Sync,
{
    pub fn new(space: TensorSpace, f: F) -> Self {
        FnProduct { space, f }
    }
}

impl<F> Bilinear for FnProduct<F>
where
    F: Fn(&Word, &Word) -> Result<LinComb<Word>> + Send + Sync,
{
    fn space(&self) -> TensorSpace {
        self.space
    }
    fn words(&self, u: &Word, v: &Word) -> Result<LinComb<Word>> {
        (self.f)(u, v)
    }
}

/// A linear operator defined by a closure.
pub struct FnOp<F>(pub F);

impl<F> LinearOp for FnOp<F>
where
    F: Fn(&Word) -> Result<LinComb<Word>> + Send + Sync,
{
    fn word(&self, w: &Word) -> Result<LinComb<Word>> {
        (self.0)(w)
    }
}

/// Thread-safe memo table for recursive products.
#[derive(Default)]
pub(crate) struct Memo(Mutex<HashMap<(Word, Word), LinComb<Word>>>);

impl Memo {
    pub(crate) fn get_or(
        &self,
        u: &Word,
        v: &Word,
        f: impl FnOnce() -> Result<LinComb<Word>>,
    ) -> Result<LinComb<Word>> {
        let key = (u.clone(), v.clone());
        if let Some(hit) = self.0.lock().expect("memo").get(&key) {
            return Ok(hit.clone());
        }
        let value = f()?;
        self.0.lock().expect("memo").insert(key, value.clone());
        Ok(value)
    }
}

/// Adds `c · (letter ⊗ w)` for every term `w` of `tail`.
pub(crate) fn add_prepended(out: &mut LinComb<Word>, letter: u8, tail: &LinComb<Word>, c: &Scalar) {
    for (w, d) in tail.iter() {
        out.add_term(w.prepend(letter), c * d);
    }
}
