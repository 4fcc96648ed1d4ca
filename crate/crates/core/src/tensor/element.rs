use std::fmt;

use serde::Serialize;

use super::{LinComb, Tensor, Word};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Ambient truncated tensor space: `dim` generators, grades `0..=cap`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TensorSpace {
    pub dim: usize,
    pub cap: usize,
}

impl TensorSpace {
    pub fn new(dim: usize, cap: usize) -> Self {
        TensorSpace { dim, cap }
    }

    pub fn check_grade(&self, grade: usize) -> Result<()> {
        if grade > self.cap {
            Err(Error::TruncationOverflow { grade, cap: self.cap })
        } else {
            Ok(())
        }
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        w.check_dim(self.dim)?;
        self.check_grade(w.grade())
    }

    fn same(&self, other: &TensorSpace) -> Result<()> {
        if self != other {
            return Err(Error::DimensionMismatch(format!(
                "(dim {}, cap {}) vs (dim {}, cap {})",
                self.dim, self.cap, other.dim, other.cap
            )));
        }
        Ok(())
    }
}

/// A degree-truncated element of `T(V)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    space: TensorSpace,
    terms: LinComb<Word>,
}

impl Element {
    pub fn zero(space: TensorSpace) -> Self {
        Element {
            space,
            terms: LinComb::new(),
        }
    }

    pub fn basis(space: TensorSpace, w: Word) -> Result<Self> {
        space.check_word(&w)?;
        Ok(Element {
            space,
            terms: LinComb::basis(w),
        })
    }

    /// Wraps a combination after validating every word.
    pub fn from_terms(space: TensorSpace, terms: LinComb<Word>) -> Result<Self> {
        for w in terms.keys() {
            space.check_word(w)?;
        }
        Ok(Element { space, terms })
    }

    pub fn space(&self) -> TensorSpace {
        self.space
    }

    pub fn terms(&self) -> &LinComb<Word> {
        &self.terms
    }

    pub fn into_terms(self) -> LinComb<Word> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.coeff(w)
    }

    pub fn max_grade(&self) -> Option<usize> {
        self.terms.last().map(|(w, _)| w.grade())
    }

    pub fn min_grade(&self) -> Option<usize> {
        self.terms.keys().next().map(|w| w.grade())
    }

    pub fn add(&self, other: &Element) -> Result<Element> {
        self.space.same(&other.space)?;
        Ok(Element {
            space: self.space,
            terms: self.terms.add(&other.terms),
        })
    }

    pub fn sub(&self, other: &Element) -> Result<Element> {
        self.space.same(&other.space)?;
        Ok(Element {
            space: self.space,
            terms: self.terms.sub(&other.terms),
        })
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        Element {
            space: self.space,
            terms: self.terms.scale(c),
        }
    }

    /// Concatenation product, the bilinear extension of `u, v ↦ u⊗v`.
    pub fn concat(&self, other: &Element) -> Result<Element> {
        self.space.same(&other.space)?;
        let mut out = LinComb::new();
        for (u, a) in self.terms.iter() {
            for (v, b) in other.terms.iter() {
                self.space.check_grade(u.grade() + v.grade())?;
                out.add_term(u.concat(v), a * b);
            }
        }
        Ok(Element {
            space: self.space,
            terms: out,
        })
    }

    /// Deconcatenation `Δ`, including the two extreme cuts.
    pub fn deconcat(&self) -> Tensor {
        let mut out = Tensor::zero(self.space, 2);
        for (w, c) in self.terms.iter() {
            for (l, r) in deconcat_word(w) {
                out.add_term(vec![l, r], c.clone());
            }
        }
        out
    }

    /// Reduced deconcatenation `Δ̄` on positive grades (interior cuts only).
    pub fn deconcat_reduced(&self) -> Result<Tensor> {
        let mut out = Tensor::zero(self.space, 2);
        for (w, c) in self.terms.iter() {
            for (l, r) in deconcat_reduced_word(w)? {
                out.add_term(vec![l, r], c.clone());
            }
        }
        Ok(out)
    }

    /// Counit `ε`: the coefficient of the empty word.
    pub fn counit(&self) -> Scalar {
        self.terms.coeff(&Word::empty())
    }

    /// Parses `c1*W1 + c2*W2` where words are `1` or `e1|e2|…`.
    pub fn parse(space: TensorSpace, text: &str) -> Result<Element> {
        let mut terms = LinComb::new();
        for (negative, term) in split_signed_terms(text)? {
            let (coeff, word) = parse_term(term)?;
            space.check_word(&word)?;
            let coeff = if negative { -coeff } else { coeff };
            terms.add_term(word, coeff);
        }
        Ok(Element { space, terms })
    }
}

pub(crate) fn deconcat_word(w: &Word) -> Vec<(Word, Word)> {
    (0..=w.grade()).map(|i| w.split_at(i)).collect()
}

pub(crate) fn deconcat_reduced_word(w: &Word) -> Result<Vec<(Word, Word)>> {
    if w.is_empty() {
        return Err(Error::GradeZeroInput("reduced deconcatenation"));
    }
    Ok((1..w.grade()).map(|i| w.split_at(i)).collect())
}

fn split_signed_terms(text: &str) -> Result<Vec<(bool, &str)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let mut negative = false;
    let mut prev: Option<u8> = None;
    for (i, &b) in bytes.iter().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'+' | b'-' if depth == 0 => {
                let unary = matches!(prev, None | Some(b'*' | b'/' | b'^' | b'(' | b'+' | b'-'));
                if !unary {
                    out.push((negative, text[start..i].trim()));
                    negative = b == b'-';
                    start = i + 1;
                } else if prev.is_none() {
                    negative = b == b'-';
                    start = i + 1;
                }
            }
            _ => {}
        }
        if !b.is_ascii_whitespace() {
            prev = Some(b);
        }
    }
    if depth != 0 {
        return Err(Error::Parse {
            pos: text.len(),
            msg: "unbalanced parentheses".into(),
        });
    }
    let last = text[start..].trim();
    if last.is_empty() {
        return Err(Error::Parse {
            pos: text.len(),
            msg: "empty term".into(),
        });
    }
    out.push((negative, last));
    if out.len() == 1 && out[0].1 == "0" {
        return Ok(Vec::new());
    }
    Ok(out)
}

fn parse_term(term: &str) -> Result<(Scalar, Word)> {
    let bytes = term.as_bytes();
    let mut depth = 0i32;
    let mut split = None;
    for (i, &b) in bytes.iter().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'*' if depth == 0 => split = Some(i),
            _ => {}
        }
    }
    match split {
        Some(i) => Ok((Scalar::parse(&term[..i])?, Word::parse(&term[i + 1..])?)),
        None => match Word::parse(term) {
            Ok(w) => Ok((Scalar::one(), w)),
            Err(_) => Ok((Scalar::parse(term)?, Word::empty())),
        },
    }
}

/// `c*w` with the coefficient parenthesised when it is a compound expression.
pub(crate) fn fmt_term(c: &Scalar, body: &str) -> String {
    if c.is_one() {
        return body.to_string();
    }
    if (-c).is_one() {
        return format!("-{body}");
    }
    let s = c.to_string();
    if s[1..].contains(['+', '-']) {
        format!("({s})*{body}")
    } else {
        format!("{s}*{body}")
    }
}

pub(crate) fn join_terms(terms: impl Iterator<Item = String>) -> String {
    let mut out = String::new();
    for t in terms {
        if out.is_empty() {
            out = t;
        } else if let Some(rest) = t.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&t);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_terms(self.terms.iter().map(|(w, c)| fmt_term(c, &w.to_string()))))
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
    fn add_and_scale() {
        assert_eq!(el("e1").add(&el("e1")).unwrap(), el("2*e1"));
        assert!(el("e1|e2").add(&el("e1|e2").scale(&Scalar::int(-1))).unwrap().is_zero());
        assert_eq!(el("q*e1|e1").scale(&Scalar::q()), el("q^2*e1|e1"));
        let other = Element::zero(TensorSpace::new(3, 4));
        assert!(matches!(el("e1").add(&other), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn concat_examples() {
        assert_eq!(el("e1").concat(&el("e2")).unwrap(), el("e1|e2"));
        assert_eq!(el("1").concat(&el("e2|e1")).unwrap(), el("e2|e1"));
        assert_eq!(el("e1 + e2").concat(&el("e1")).unwrap(), el("e1|e1 + e2|e1"));
        let small = TensorSpace::new(2, 2);
        let x = Element::parse(small, "e1|e2").unwrap();
        assert_eq!(
            x.concat(&Element::parse(small, "e1").unwrap()),
            Err(Error::TruncationOverflow { grade: 3, cap: 2 })
        );
    }

    #[test]
    fn deconcat_examples() {
        let d = el("e1|e2").deconcat();
        assert_eq!(d.to_string(), "(1 ⊗ e1|e2) + (e1 ⊗ e2) + (e1|e2 ⊗ 1)");
        assert_eq!(el("1").deconcat().to_string(), "(1 ⊗ 1)");
        assert_eq!(el("e1").deconcat().to_string(), "(1 ⊗ e1) + (e1 ⊗ 1)");
    }

    #[test]
    fn reduced_deconcat_examples() {
        assert!(el("e1").deconcat_reduced().unwrap().is_zero());
        assert_eq!(el("e1|e2").deconcat_reduced().unwrap().to_string(), "(e1 ⊗ e2)");
        assert_eq!(
            el("e1|e1|e2").deconcat_reduced().unwrap().to_string(),
            "(e1 ⊗ e1|e2) + (e1|e1 ⊗ e2)"
        );
        assert_eq!(
            el("1 + e1").deconcat_reduced(),
            Err(Error::GradeZeroInput("reduced deconcatenation"))
        );
    }

    #[test]
    fn counit_examples() {
        assert_eq!(el("1").counit(), Scalar::one());
        assert_eq!(el("e1|e2").counit(), Scalar::zero());
        assert_eq!(el("3*1 + e1").counit(), Scalar::int(3));
    }

    #[test]
    fn text_format() {
        let x = el("e1|e2 + q*e2|e1 - 2*e1 + (q+1)*e2|e2 + q^-1*e1|e1");
        assert_eq!(x.to_string(), "-2*e1 + 1/q*e1|e1 + e1|e2 + q*e2|e1 + (q+1)*e2|e2");
        assert_eq!(Element::parse(SP, &x.to_string()).unwrap(), x);
        assert!(el("0").is_zero());
        assert_eq!(el("0").to_string(), "0");
        assert_eq!(el("-e1 - e2"), el("e1 + e2").scale(&Scalar::int(-1)));
    }
}
