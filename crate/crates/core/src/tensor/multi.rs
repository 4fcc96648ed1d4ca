use std::fmt;

use super::element::{fmt_term, join_terms};
use super::{Element, LinComb, TensorSpace, Word};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Key of a multi-slot tensor: one word per tensor factor.
pub type Slots = Vec<Word>;

/// An element of `T(V)^{⊗r}`, used to state identities on several slots.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor {
    space: TensorSpace,
    arity: usize,
    terms: LinComb<Slots>,
}

impl Tensor {
    pub fn zero(space: TensorSpace, arity: usize) -> Self {
        Tensor {
            space,
            arity,
            terms: LinComb::new(),
        }
    }

    pub fn basis(space: TensorSpace, slots: Slots) -> Self {
        let arity = slots.len();
        Tensor {
            space,
            arity,
            terms: LinComb::basis(slots),
        }
    }

    /// Pure tensor `x1 ⊗ … ⊗ xr` of elements.
    pub fn pure(factors: &[&Element]) -> Result<Self> {
        let space = factors
            .first()
            .map(|e| e.space())
            .ok_or_else(|| Error::InvalidInput("empty tensor product".into()))?;
        let mut terms: LinComb<Slots> = LinComb::basis(Vec::new());
        for f in factors {
            if f.space() != space {
                return Err(Error::DimensionMismatch("tensor factors in different spaces".into()));
            }
            let mut next = LinComb::new();
            for (slots, a) in terms.iter() {
                for (w, b) in f.terms().iter() {
                    let mut s = slots.clone();
                    s.push(w.clone());
                    next.add_term(s, a * b);
                }
            }
            terms = next;
        }
        Ok(Tensor {
            space,
            arity: factors.len(),
            terms,
        })
    }

    /// One-slot tensor from a combination of words.
    pub fn from_words(space: TensorSpace, terms: &LinComb<Word>) -> Self {
        let terms = terms.iter().map(|(w, c)| (vec![w.clone()], c.clone())).collect();
        Tensor { space, arity: 1, terms }
    }

    /// Two-slot tensor from a combination of word pairs.
    pub fn from_pairs(space: TensorSpace, terms: &LinComb<(Word, Word)>) -> Self {
        let terms = terms
            .iter()
            .map(|((l, r), c)| (vec![l.clone(), r.clone()], c.clone()))
            .collect();
        Tensor { space, arity: 2, terms }
    }

    pub fn from_element(e: &Element) -> Self {
        let terms = e.terms().iter().map(|(w, c)| (vec![w.clone()], c.clone())).collect();
        Tensor {
            space: e.space(),
            arity: 1,
            terms,
        }
    }

    pub fn to_element(&self) -> Result<Element> {
        if self.arity != 1 {
            return Err(Error::DimensionMismatch(format!(
                "expected one slot, found {}",
                self.arity
            )));
        }
        let terms = self.terms.iter().map(|(s, c)| (s[0].clone(), c.clone())).collect();
        Element::from_terms(self.space, terms)
    }

    pub fn space(&self) -> TensorSpace {
        self.space
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> &LinComb<Slots> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn add_term(&mut self, slots: Slots, c: Scalar) {
        debug_assert_eq!(slots.len(), self.arity);
        self.terms.add_term(slots, c);
    }

    fn compatible(&self, other: &Tensor) -> Result<()> {
        if self.space != other.space || self.arity != other.arity {
            return Err(Error::DimensionMismatch(format!(
                "tensor of arity {} vs arity {}",
                self.arity, other.arity
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Tensor) -> Result<Tensor> {
        self.compatible(other)?;
        Ok(Tensor {
            terms: self.terms.add(&other.terms),
            ..self.clone()
        })
    }

    pub fn sub(&self, other: &Tensor) -> Result<Tensor> {
        self.compatible(other)?;
        Ok(Tensor {
            terms: self.terms.sub(&other.terms),
            ..self.clone()
        })
    }

    pub fn scale(&self, c: &Scalar) -> Tensor {
        Tensor {
            terms: self.terms.scale(c),
            ..self.clone()
        }
    }

    fn check_slot(&self, k: usize, width: usize) -> Result<()> {
        if k + width > self.arity {
            return Err(Error::IndexOutOfRange(format!(
                "slots {}..{} of a {}-fold tensor",
                k + 1,
                k + width,
                self.arity
            )));
        }
        Ok(())
    }

    /// Applies a linear map to slot `k`.
    pub fn map_slot(&self, k: usize, mut f: impl FnMut(&Word) -> Result<LinComb<Word>>) -> Result<Tensor> {
        self.check_slot(k, 1)?;
        let mut out = Tensor::zero(self.space, self.arity);
        for (slots, c) in self.terms.iter() {
            for (w, d) in f(&slots[k])?.iter() {
                self.space.check_word(w)?;
                let mut s = slots.clone();
                s[k] = w.clone();
                out.terms.add_term(s, c * d);
            }
        }
        Ok(out)
    }

    /// Multiplies slots `k` and `k+1` with a bilinear product.
    pub fn merge(&self, k: usize, mut f: impl FnMut(&Word, &Word) -> Result<LinComb<Word>>) -> Result<Tensor> {
        self.check_slot(k, 2)?;
        let mut out = Tensor::zero(self.space, self.arity - 1);
        for (slots, c) in self.terms.iter() {
            for (w, d) in f(&slots[k], &slots[k + 1])?.iter() {
                self.space.check_word(w)?;
                let mut s = Vec::with_capacity(self.arity - 1);
                s.extend_from_slice(&slots[..k]);
                s.push(w.clone());
                s.extend_from_slice(&slots[k + 2..]);
                out.terms.add_term(s, c * d);
            }
        }
        Ok(out)
    }

    /// Applies a map `T⊗T → T⊗T` (typically a braiding) to slots `k, k+1`.
    pub fn braid(&self, k: usize, mut f: impl FnMut(&Word, &Word) -> Result<LinComb<(Word, Word)>>) -> Result<Tensor> {
        self.check_slot(k, 2)?;
        let mut out = Tensor::zero(self.space, self.arity);
        for (slots, c) in self.terms.iter() {
            for ((l, r), d) in f(&slots[k], &slots[k + 1])?.iter() {
                let mut s = slots.clone();
                s[k] = l.clone();
                s[k + 1] = r.clone();
                out.terms.add_term(s, c * d);
            }
        }
        Ok(out)
    }

    /// Applies a coproduct-like map `T → T⊗T` to slot `k`.
    pub fn split(&self, k: usize, mut f: impl FnMut(&Word) -> Result<LinComb<(Word, Word)>>) -> Result<Tensor> {
        self.check_slot(k, 1)?;
        let mut out = Tensor::zero(self.space, self.arity + 1);
        for (slots, c) in self.terms.iter() {
            for ((l, r), d) in f(&slots[k])?.iter() {
                let mut s = Vec::with_capacity(self.arity + 1);
                s.extend_from_slice(&slots[..k]);
                s.push(l.clone());
                s.push(r.clone());
                s.extend_from_slice(&slots[k + 1..]);
                out.terms.add_term(s, c * d);
            }
        }
        Ok(out)
    }

    /// Swaps slots `k, k+1` without any scalar, the classical flip.
    pub fn flip(&self, k: usize) -> Result<Tensor> {
        self.braid(k, |a, b| Ok(LinComb::basis((b.clone(), a.clone()))))
    }
}

impl fmt::Display for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms.iter().map(|(slots, c)| {
            let body = slots.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(" ⊗ ");
            fmt_term(c, &format!("({body})"))
        });
        f.write_str(&join_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SP: TensorSpace = TensorSpace { dim: 2, cap: 4 };

    fn el(t: &str) -> Element {
        Element::parse(SP, t).unwrap()
    }

    #[test]
    fn pure_and_merge_concat() {
        let t = Tensor::pure(&[&el("e1 + e2"), &el("2*e1")]).unwrap();
        assert_eq!(t.to_string(), "2*(e1 ⊗ e1) + 2*(e2 ⊗ e1)");
        let m = t.merge(0, |a, b| Ok(LinComb::basis(a.concat(b)))).unwrap();
        assert_eq!(m.to_element().unwrap(), el("2*e1|e1 + 2*e2|e1"));
    }

    #[test]
    fn split_then_merge_counts_cuts() {
        let x = el("e1|e2|e1");
        let d = Tensor::from_element(&x)
            .split(0, |w| {
                Ok(super::super::element::deconcat_word(w)
                    .into_iter()
                    .map(|p| (p, Scalar::one()))
                    .collect())
            })
            .unwrap();
        let back = d.merge(0, |a, b| Ok(LinComb::basis(a.concat(b)))).unwrap();
        assert_eq!(back.to_element().unwrap(), x.scale(&Scalar::int(4)));
    }

    #[test]
    fn flip_and_bounds() {
        let t = Tensor::pure(&[&el("e1"), &el("e2"), &el("1")]).unwrap();
        assert_eq!(t.flip(1).unwrap().to_string(), "(e1 ⊗ 1 ⊗ e2)");
        assert!(matches!(t.flip(2), Err(Error::IndexOutOfRange(_))));
        assert!(matches!(t.to_element(), Err(Error::DimensionMismatch(_))));
    }
}
