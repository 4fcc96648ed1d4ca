use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// A basis tensor `e_{i1} ⊗ … ⊗ e_{in}`; letters are stored zero-based.
///
/// Ordered by length first, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(SmallVec<[u8; 8]>);

impl Word {
    pub fn empty() -> Self {
        Word(SmallVec::new())
    }

    pub fn letter(i: usize) -> Self {
        Word(SmallVec::from_slice(&[i as u8]))
    }

    pub fn from_letters(letters: &[u8]) -> Self {
        Word(SmallVec::from_slice(letters))
    }

    /// Builds a word from one-based indices, `Word::one_based(&[1, 2])` is `e1|e2`.
    pub fn one_based(letters: &[usize]) -> Self {
        Word(letters.iter().map(|&l| (l - 1) as u8).collect())
    }

    pub fn grade(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn first(&self) -> Option<u8> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<u8> {
        self.0.last().copied()
    }

    /// Word without its first letter.
    pub fn tail(&self) -> Word {
        Word(SmallVec::from_slice(self.0.get(1..).unwrap_or(&[])))
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn prepend(&self, letter: u8) -> Word {
        let mut v = SmallVec::with_capacity(self.0.len() + 1);
        v.push(letter);
        v.extend_from_slice(&self.0);
        Word(v)
    }

    pub fn split_at(&self, k: usize) -> (Word, Word) {
        (Word::from_letters(&self.0[..k]), Word::from_letters(&self.0[k..]))
    }

    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word::from_letters(&self.0[from..to])
    }

    pub fn max_letter(&self) -> Option<u8> {
        self.0.iter().copied().max()
    }

    /// Position of this word among all words of its grade over `dim` letters.
    pub fn rank(&self, dim: usize) -> usize {
        self.0.iter().fold(0, |acc, &l| acc * dim + l as usize)
    }

    /// Inverse of [`Word::rank`].
    pub fn unrank(mut rank: usize, grade: usize, dim: usize) -> Word {
        let mut v: SmallVec<[u8; 8]> = SmallVec::from_elem(0, grade);
        for slot in v.iter_mut().rev() {
            *slot = (rank % dim) as u8;
            rank /= dim;
        }
        Word(v)
    }

    pub fn check_dim(&self, dim: usize) -> Result<()> {
        match self.max_letter() {
            Some(l) if l as usize >= dim => Err(Error::DimensionMismatch(format!(
                "letter e{} outside dimension {dim}",
                l as usize + 1
            ))),
            _ => Ok(()),
        }
    }

    /// Parses `1` (empty word) or `e1|e2|…`.
    pub fn parse(text: &str) -> Result<Word> {
        let t = text.trim();
        if t == "1" {
            return Ok(Word::empty());
        }
        let mut letters = SmallVec::new();
        for part in t.split('|') {
            let part = part.trim();
            let idx = part
                .strip_prefix('e')
                .and_then(|n| n.parse::<usize>().ok())
                .filter(|&n| (1..=255).contains(&n))
                .ok_or_else(|| Error::Parse {
                    pos: 0,
                    msg: format!("bad word letter `{part}` in `{t}`"),
                })?;
            letters.push((idx - 1) as u8);
        }
        Ok(Word(letters))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            write!(f, "e{}", *l as usize + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All words of grade `n` over `dim` letters, in canonical order.
pub fn words_of_grade(dim: usize, n: usize) -> impl Iterator<Item = Word> {
    let count = dim.checked_pow(n as u32).expect("word space too large");
    (0..count).map(move |r| Word::unrank(r, n, dim))
}

/// All words with grade in `lo..=hi`, in canonical order.
pub fn words_up_to(dim: usize, lo: usize, hi: usize) -> Vec<Word> {
    (lo..=hi).flat_map(|n| words_of_grade(dim, n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_is_length_then_lex() {
        let a = Word::parse("e2").unwrap();
        let b = Word::parse("e1|e1").unwrap();
        assert!(a < b);
        assert!(Word::empty() < a);
        assert!(Word::parse("e1|e2").unwrap() < Word::parse("e2|e1").unwrap());
    }

    #[test]
    fn text_roundtrip_and_rank() {
        let w = Word::parse("e1|e3|e2").unwrap();
        assert_eq!(w.to_string(), "e1|e3|e2");
        assert_eq!(Word::unrank(w.rank(3), 3, 3), w);
        assert_eq!(Word::parse("1").unwrap(), Word::empty());
        assert!(Word::parse("e0").is_err());
        assert!(Word::parse("x1").is_err());
    }

    #[test]
    fn enumeration_is_sorted() {
        let ws = words_up_to(2, 0, 3);
        assert_eq!(ws.len(), 1 + 2 + 4 + 8);
        assert!(ws.windows(2).all(|p| p[0] < p[1]));
    }
}
