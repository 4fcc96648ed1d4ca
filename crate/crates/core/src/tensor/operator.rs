use std::collections::{BTreeMap, BTreeSet};

use super::{words_of_grade, Element, LinComb, TensorSpace, Word};
use crate::error::{Error, Result};

/// Sparse linear map on a truncated tensor space, stored column by column.
///
/// The domain is a set of source grades; every word of those grades has a
/// column, with absent columns meaning zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedOperator {
    space: TensorSpace,
    grades: BTreeSet<usize>,
    columns: BTreeMap<Word, LinComb<Word>>,
}

impl GradedOperator {
    /// Tabulates `f` on every word of the given source grades.
    pub fn from_fn(
        space: TensorSpace,
        grades: impl IntoIterator<Item = usize>,
        mut f: impl FnMut(&Word) -> Result<LinComb<Word>>,
    ) -> Result<Self> {
        let grades: BTreeSet<usize> = grades.into_iter().collect();
        let mut columns = BTreeMap::new();
        for &n in &grades {
            space.check_grade(n)?;
            for w in words_of_grade(space.dim, n) {
                let image = f(&w)?;
                for v in image.keys() {
                    space.check_word(v)?;
                }
                if !image.is_zero() {
                    columns.insert(w, image);
                }
            }
        }
        Ok(GradedOperator { space, grades, columns })
    }

    pub fn identity(space: TensorSpace, grades: impl IntoIterator<Item = usize>) -> Result<Self> {
        Self::from_fn(space, grades, |w| Ok(LinComb::basis(w.clone())))
    }

    pub fn space(&self) -> TensorSpace {
        self.space
    }

    pub fn grades(&self) -> impl Iterator<Item = usize> + '_ {
        self.grades.iter().copied()
    }

    /// Nonzero `(source grade, target grade)` blocks.
    pub fn blocks(&self) -> BTreeSet<(usize, usize)> {
        self.columns
            .iter()
            .flat_map(|(w, img)| img.keys().map(move |v| (w.grade(), v.grade())))
            .collect()
    }

    pub fn apply_word(&self, w: &Word) -> Result<LinComb<Word>> {
        if !self.grades.contains(&w.grade()) {
            return Err(Error::DimensionMismatch(format!(
                "operator not defined on grade {}",
                w.grade()
            )));
        }
        w.check_dim(self.space.dim)?;
        Ok(self.columns.get(w).cloned().unwrap_or_default())
    }

    pub fn apply(&self, x: &Element) -> Result<Element> {
        let terms = x.terms().map_linear(|w| self.apply_word(w))?;
        Element::from_terms(self.space, terms)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &GradedOperator) -> Result<GradedOperator> {
        GradedOperator::from_fn(other.space, other.grades.iter().copied(), |w| {
            other.apply_word(w)?.map_linear(|v| self.apply_word(v))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    #[test]
    fn identity_and_composition() {
        let sp = TensorSpace::new(2, 3);
        let id = GradedOperator::identity(sp, [2]).unwrap();
        let rev = GradedOperator::from_fn(sp, [2], |w| {
            let l = w.letters();
            Ok(LinComb::single(Word::from_letters(&[l[1], l[0]]), Scalar::int(2)))
        })
        .unwrap();
        assert_eq!(rev.compose(&id).unwrap(), rev);
        let x = Element::parse(sp, "e1|e2").unwrap();
        let twice = rev.compose(&rev).unwrap().apply(&x).unwrap();
        assert_eq!(twice, x.scale(&Scalar::int(4)));
        assert_eq!(rev.blocks(), BTreeSet::from([(2, 2)]));
        assert!(rev.apply(&Element::parse(sp, "e1").unwrap()).is_err());
    }
}
