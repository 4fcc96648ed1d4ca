//! Braided vector spaces: the operator `σ`, Yang-Baxter and symmetry checks,
//! braid lifts `T^σ_w`, block braidings `β_{ij}` and shuffle combinatorics.

mod perm;

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

pub use perm::{
    chi, shuffle_decomposition_failures, shuffle_decomposition_holds, shuffle_set, tau_kn, Permutation,
    ShuffleRefinement,
};

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::{Field, Scalar};
use crate::tensor::{words_of_grade, GradedOperator, LinComb, TensorSpace, Word};

type LiftCache = Arc<Mutex<HashMap<(Permutation, Word), LinComb<Word>>>>;

/// A failed identity: its name, the input word and both sides.
pub type IdentityWitness = (&'static str, Word, LinComb<Word>, LinComb<Word>);

/// One entry `σ(e_i⊗e_j) ∋ c·e_k⊗e_l`, zero-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub l: usize,
    pub c: Scalar,
}

/// The operator `σ` on `V⊗V` as a sparse `d²×d²` matrix.
#[derive(Clone, Debug)]
pub struct Braiding {
    dim: usize,
    field: Field,
    table: Vec<LinComb<Word>>,
    ybe: OnceLock<bool>,
    symmetric: OnceLock<bool>,
    cache: LiftCache,
}

impl PartialEq for Braiding {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.table == other.table
    }
}

fn pair(a: usize, b: usize) -> Word {
    Word::from_letters(&[a as u8, b as u8])
}

impl Braiding {
    fn build(dim: usize, table: Vec<LinComb<Word>>) -> Result<Self> {
        let field = if table.iter().flat_map(|c| c.iter()).all(|(_, s)| s.is_rational()) {
            Field::Rational
        } else {
            Field::RationalFunction
        };
        let b = Braiding {
            dim,
            field,
            table,
            ybe: OnceLock::new(),
            symmetric: OnceLock::new(),
            cache: LiftCache::default(),
        };
        let columns = words_of_grade(dim, 2).map(|w| b.apply_pair(w.letters()[0], w.letters()[1]).clone());
        if linalg::rank(columns) != dim * dim {
            return Err(Error::SingularMatrix);
        }
        Ok(b)
    }

    /// The usual flip `τ(x⊗y) = y⊗x`; both flags hold by construction.
    pub fn flip(dim: usize) -> Self {
        Self::scaled_flip(dim, Scalar::one()).expect("flip is invertible")
    }

    /// `c·τ`; the flags are preset only for `c = 1`.
    pub fn scaled_flip(dim: usize, c: Scalar) -> Result<Self> {
        let table = (0..dim)
            .flat_map(|i| (0..dim).map(move |j| (i, j)))
            .map(|(i, j)| LinComb::single(pair(j, i), c.clone()))
            .collect();
        let b = Self::build(dim, table)?;
        if c.is_one() {
            b.ybe.set(true).ok();
            b.symmetric.set(true).ok();
        }
        Ok(b)
    }

    /// `σ(e_i⊗e_j) = q_{ij}·e_j⊗e_i`.
    pub fn diagonal(table: &[Vec<Scalar>]) -> Result<Self> {
        let dim = table.len();
        let mut out = Vec::with_capacity(dim * dim);
        for (i, row) in table.iter().enumerate() {
            if row.len() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "diagonal table row {} has {} entries",
                    i + 1,
                    row.len()
                )));
            }
            for (j, q) in row.iter().enumerate() {
                if q.is_zero() {
                    return Err(Error::ZeroDiagonalEntry { i: i + 1, j: j + 1 });
                }
                out.push(LinComb::single(pair(j, i), q.clone()));
            }
        }
        Self::build(dim, out)
    }

    /// `σ(e_i⊗e_j) = g(e_j)⊗g(e_i)` for an invertible `g` with columns
    /// `g(e_j) = Σ_i g[i][j]·e_i`; symmetric exactly when `g² = id`.
    pub fn twisted_flip(g: &[Vec<Scalar>]) -> Result<Self> {
        let dim = g.len();
        if g.iter().any(|row| row.len() != dim) {
            return Err(Error::DimensionMismatch("twist matrix is not square".into()));
        }
        let mut table = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let mut out = LinComb::new();
                for k in 0..dim {
                    for l in 0..dim {
                        out.add_term(pair(k, l), &g[k][j] * &g[l][i]);
                    }
                }
                table.push(out);
            }
        }
        Self::build(dim, table)
    }

    pub fn explicit(dim: usize, entries: &[SigmaEntry]) -> Result<Self> {
        let mut table = vec![LinComb::new(); dim * dim];
        for e in entries {
            if [e.i, e.j, e.k, e.l].iter().any(|&x| x >= dim) {
                return Err(Error::IndexOutOfRange(format!(
                    "sigma entry ({}, {}, {}, {}) in dimension {dim}",
                    e.i + 1,
                    e.j + 1,
                    e.k + 1,
                    e.l + 1
                )));
            }
            table[e.i * dim + e.j].add_term(pair(e.k, e.l), e.c.clone());
        }
        Self::build(dim, table)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn entries(&self) -> Vec<SigmaEntry> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for (w, c) in self.apply_pair(i as u8, j as u8).iter() {
                    let l = w.letters();
                    out.push(SigmaEntry {
                        i,
                        j,
                        k: l[0] as usize,
                        l: l[1] as usize,
                        c: c.clone(),
                    });
                }
            }
        }
        out
    }

    /// `σ(e_a⊗e_b)` as a combination of two-letter words.
    pub fn apply_pair(&self, a: u8, b: u8) -> &LinComb<Word> {
        &self.table[a as usize * self.dim + b as usize]
    }

    /// `σ_{pos+1}` applied to a combination of words (zero-based position).
    pub fn apply_at(&self, x: &LinComb<Word>, pos: usize) -> LinComb<Word> {
        let mut out = LinComb::new();
        for (w, c) in x.iter() {
            let l = w.letters();
            for (p, d) in self.apply_pair(l[pos], l[pos + 1]).iter() {
                let mut letters = l.to_vec();
                letters[pos] = p.letters()[0];
                letters[pos + 1] = p.letters()[1];
                out.add_term(Word::from_letters(&letters), c * d);
            }
        }
        out
    }

    fn apply_sequence(&self, w: &Word, positions: &[usize]) -> LinComb<Word> {
        positions
            .iter()
            .fold(LinComb::basis(w.clone()), |acc, &p| self.apply_at(&acc, p - 1))
    }

    /// First basis word on which the two Yang-Baxter composites differ.
    pub fn ybe_witness(&self) -> Option<(Word, LinComb<Word>, LinComb<Word>)> {
        words_of_grade(self.dim, 3).find_map(|w| {
            let lhs = self.apply_sequence(&w, &[1, 2, 1]);
            let rhs = self.apply_sequence(&w, &[2, 1, 2]);
            (lhs != rhs).then_some((w, lhs, rhs))
        })
    }

    /// `(σ⊗id)(id⊗σ)(σ⊗id) = (id⊗σ)(σ⊗id)(id⊗σ)` on all `d³` words.
    pub fn check_ybe(&self) -> bool {
        *self.ybe.get_or_init(|| self.ybe_witness().is_none())
    }

    pub fn ybe_verified(&self) -> bool {
        self.ybe.get() == Some(&true)
    }

    /// `σ² = id`.
    pub fn check_symmetric(&self) -> bool {
        *self.symmetric.get_or_init(|| {
            words_of_grade(self.dim, 2).all(|w| self.apply_sequence(&w, &[1, 1]) == LinComb::basis(w.clone()))
        })
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric.get() == Some(&true)
    }

    fn require_ybe(&self) -> Result<()> {
        if self.check_ybe() {
            Ok(())
        } else {
            Err(Error::UnverifiedBraiding("the braid relation fails"))
        }
    }

    /// `σ_i = id^{⊗(i−1)}⊗σ⊗id^{⊗(n−i−1)}` on `V^{⊗n}` (one-based `i`).
    pub fn sigma_i(&self, i: usize, n: usize, space: TensorSpace) -> Result<GradedOperator> {
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange(format!("sigma_{i} on grade {n}")));
        }
        GradedOperator::from_fn(space, [n], |w| Ok(self.apply_at(&LinComb::basis(w.clone()), i - 1)))
    }

    /// `T^σ_w` on one basis word, memoized.
    pub fn lift_word(&self, perm: &Permutation, w: &Word) -> Result<LinComb<Word>> {
        if perm.len() != w.grade() {
            return Err(Error::DimensionMismatch(format!(
                "permutation of {} letters on a word of grade {}",
                perm.len(),
                w.grade()
            )));
        }
        self.require_ybe()?;
        w.check_dim(self.dim)?;
        let key = (perm.clone(), w.clone());
        if let Some(hit) = self.cache.lock().expect("lift cache").get(&key) {
            return Ok(hit.clone());
        }
        let value = self.apply_sequence(w, &perm.reduced_word());
        self.cache.lock().expect("lift cache").insert(key, value.clone());
        Ok(value)
    }

    /// `T^σ_w` along a caller-chosen reduced word, bypassing the cache.
    pub fn lift_word_along(&self, positions: &[usize], w: &Word) -> LinComb<Word> {
        self.apply_sequence(w, positions)
    }

    /// `T^σ_w` on `V^{⊗n}`.
    pub fn braid_lift(&self, perm: &Permutation, space: TensorSpace) -> Result<GradedOperator> {
        self.require_ybe()?;
        GradedOperator::from_fn(space, [perm.len()], |w| self.lift_word(perm, w))
    }

    /// `β_{ij}(u⊗v)` for words of grades `i` and `j`, split back into a pair.
    pub fn beta_pair(&self, u: &Word, v: &Word) -> Result<LinComb<(Word, Word)>> {
        if u.is_empty() || v.is_empty() {
            return Ok(LinComb::basis((v.clone(), u.clone())));
        }
        let (i, j) = (u.grade(), v.grade());
        let image = self.lift_word(&chi(i, j), &u.concat(v))?;
        Ok(image.into_iter().map(|(w, c)| (w.split_at(j), c)).collect())
    }

    /// `β_{ij}` applied to a word of grade `i+j`, result as concatenated words.
    pub fn beta_word(&self, i: usize, j: usize, w: &Word) -> Result<LinComb<Word>> {
        if w.grade() != i + j {
            return Err(Error::DimensionMismatch(format!(
                "beta_{i}{j} on a word of grade {}",
                w.grade()
            )));
        }
        if i == 0 || j == 0 {
            return Ok(LinComb::basis(w.clone()));
        }
        self.lift_word(&chi(i, j), w)
    }

    /// `β_{ij}` as a graded operator on grade `i+j`.
    pub fn beta_ij(&self, i: usize, j: usize, space: TensorSpace) -> Result<GradedOperator> {
        space.check_grade(i + j)?;
        GradedOperator::from_fn(space, [i + j], |w| self.beta_word(i, j, w))
    }

    /// Both factorizations of `β_{m+n,k}` and `β_{m,n+k}` on every word.
    pub fn verify_beta_identities(&self, m: usize, n: usize, k: usize, cap: usize) -> Result<bool> {
        Ok(self.beta_identity_witness(m, n, k, cap)?.is_none())
    }

    /// The first word on which a factorization of `β` fails, with the
    /// identity's name and both sides.
    pub fn beta_identity_witness(&self, m: usize, n: usize, k: usize, cap: usize) -> Result<Option<IdentityWitness>> {
        TensorSpace::new(self.dim, cap).check_grade(m + n + k)?;
        for w in words_of_grade(self.dim, m + n + k) {
            // β_{m+n,k} = (β_{mk}⊗id^{⊗n})(id^{⊗m}⊗β_{nk})
            let direct = self.beta_word(m + n, k, &w)?;
            let step = self.on_block(&LinComb::basis(w.clone()), m, n + k, |x| self.beta_word(n, k, x))?;
            let split = self.on_block_prefix(&step, m + k, |x| self.beta_word(m, k, x))?;
            if direct != split {
                return Ok(Some(("beta-left", w, direct, split)));
            }
            // β_{m,n+k} = (id^{⊗n}⊗β_{mk})(β_{mn}⊗id^{⊗k})
            let direct = self.beta_word(m, n + k, &w)?;
            let step = self.on_block_prefix(&LinComb::basis(w.clone()), m + n, |x| self.beta_word(m, n, x))?;
            let split = self.on_block(&step, n, m + k, |x| self.beta_word(m, k, x))?;
            if direct != split {
                return Ok(Some(("beta-right", w, direct, split)));
            }
        }
        Ok(None)
    }

    /// Applies `f` to the letters `from..from+len` of every word.
    fn on_block(
        &self,
        x: &LinComb<Word>,
        from: usize,
        len: usize,
        f: impl Fn(&Word) -> Result<LinComb<Word>>,
    ) -> Result<LinComb<Word>> {
        x.map_linear(|w| {
            let (head, rest) = w.split_at(from);
            let (mid, tail) = rest.split_at(len);
            Ok(f(&mid)?
                .into_iter()
                .map(|(v, c)| (head.concat(&v).concat(&tail), c))
                .collect())
        })
    }

    fn on_block_prefix(
        &self,
        x: &LinComb<Word>,
        len: usize,
        f: impl Fn(&Word) -> Result<LinComb<Word>>,
    ) -> Result<LinComb<Word>> {
        self.on_block(x, 0, len, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    fn w(t: &str) -> Word {
        Word::parse(t).unwrap()
    }

    fn all_q(dim: usize) -> Braiding {
        Braiding::diagonal(&vec![vec![Scalar::q(); dim]; dim]).unwrap()
    }

    fn symmetric_diag() -> Braiding {
        let q = Scalar::q();
        Braiding::diagonal(&[vec![Scalar::one(), q.clone()], vec![q.inv().unwrap(), Scalar::int(-1)]]).unwrap()
    }

    #[test]
    fn constructors() {
        let f = Braiding::flip(2);
        assert_eq!(f.apply_pair(0, 1), &LinComb::basis(w("e2|e1")));
        assert!(f.ybe_verified() && f.is_symmetric());
        let d = all_q(2);
        assert_eq!(d.apply_pair(0, 1), &LinComb::single(w("e2|e1"), Scalar::q()));
        let two = Braiding::scaled_flip(2, Scalar::int(2)).unwrap();
        assert!(!two.ybe_verified());
        assert!(two.check_ybe());
        assert!(two.ybe_verified());
        assert_eq!(Braiding::scaled_flip(2, Scalar::zero()), Err(Error::SingularMatrix));
        let zero = vec![vec![Scalar::one(), Scalar::zero()], vec![Scalar::one(), Scalar::one()]];
        assert_eq!(Braiding::diagonal(&zero), Err(Error::ZeroDiagonalEntry { i: 1, j: 2 }));
    }

    #[test]
    fn ybe_checks() {
        assert!(Braiding::flip(3).check_ybe());
        assert!(all_q(3).check_ybe());
        assert!(symmetric_diag().check_ybe());
        // flip with σ(e1⊗e1) rescaled to 2 is a diagonal braiding, so the braid relation holds
        let mut entries = Braiding::flip(2).entries();
        entries[0].c = Scalar::int(2);
        let rescaled = Braiding::explicit(2, &entries).unwrap();
        assert!(rescaled.check_ybe());
        // σ(e1⊗e2) = e2⊗e1 + e1⊗e2 breaks it
        let mut entries = Braiding::flip(2).entries();
        entries.push(SigmaEntry {
            i: 0,
            j: 1,
            k: 0,
            l: 1,
            c: Scalar::one(),
        });
        let broken = Braiding::explicit(2, &entries).unwrap();
        assert!(!broken.check_ybe());
        assert!(broken.ybe_witness().is_some());
        assert_eq!(
            broken.lift_word(&Permutation::identity(2), &w("e1|e2")),
            Err(Error::UnverifiedBraiding("the braid relation fails"))
        );
    }

    #[test]
    fn symmetry_checks() {
        assert!(Braiding::flip(2).check_symmetric());
        assert!(symmetric_diag().check_symmetric());
        assert!(!all_q(2).check_symmetric());
        assert!(Braiding::scaled_flip(2, Scalar::int(-1)).unwrap().check_symmetric());
    }

    #[test]
    fn sigma_i_examples() {
        let sp = TensorSpace::new(2, 3);
        let f = Braiding::flip(2);
        let s2 = f.sigma_i(2, 3, sp).unwrap();
        assert_eq!(s2.apply_word(&w("e1|e1|e2")).unwrap(), LinComb::basis(w("e1|e2|e1")));
        let d = all_q(2);
        let s1 = d.sigma_i(1, 3, sp).unwrap();
        assert_eq!(
            s1.apply_word(&w("e1|e2|e1")).unwrap(),
            LinComb::single(w("e2|e1|e1"), Scalar::q())
        );
        assert!(matches!(d.sigma_i(3, 3, sp), Err(Error::IndexOutOfRange(_))));
    }

    #[test]
    fn braid_lift_examples() {
        let d = all_q(2);
        let w121 = Permutation::transposition(1, 3)
            .unwrap()
            .compose(&Permutation::transposition(2, 3).unwrap())
            .compose(&Permutation::transposition(1, 3).unwrap());
        let q3 = Scalar::q().pow(3).unwrap();
        assert_eq!(
            d.lift_word(&w121, &w("e1|e1|e2")).unwrap(),
            LinComb::single(w("e2|e1|e1"), q3)
        );
        assert_eq!(
            d.lift_word(&Permutation::identity(3), &w("e1|e2|e2")).unwrap(),
            LinComb::basis(w("e1|e2|e2"))
        );
        // flip lifts are the permutation action v_{w⁻¹(1)} ⊗ … ⊗ v_{w⁻¹(n)}
        let f = Braiding::flip(3);
        for perm in (0..4usize).permutations(4) {
            let p = Permutation::from_images(&perm.iter().map(|i| i + 1).collect::<Vec<_>>()).unwrap();
            let word = w("e1|e2|e3|e1");
            let inv = p.inverse();
            let expected: Vec<u8> = (1..=4).map(|i| word.letters()[inv.apply(i) - 1]).collect();
            assert_eq!(
                f.lift_word(&p, &word).unwrap(),
                LinComb::basis(Word::from_letters(&expected))
            );
        }
    }

    #[test]
    fn beta_examples() {
        let sp = TensorSpace::new(2, 4);
        let f = Braiding::flip(2);
        assert_eq!(
            f.beta_word(2, 1, &w("e1|e2|e1")).unwrap(),
            LinComb::basis(w("e1|e1|e2"))
        );
        assert_eq!(
            f.beta_word(0, 3, &w("e1|e2|e1")).unwrap(),
            LinComb::basis(w("e1|e2|e1"))
        );
        let d = all_q(2);
        assert_eq!(d.beta_ij(1, 1, sp).unwrap(), d.sigma_i(1, 2, sp).unwrap());
        assert!(matches!(d.beta_ij(3, 2, sp), Err(Error::TruncationOverflow { .. })));
        let pairs = d.beta_pair(&w("e1|e1"), &w("e2")).unwrap();
        assert_eq!(
            pairs,
            LinComb::single((w("e2"), w("e1|e1")), Scalar::q().pow(2).unwrap())
        );
    }

    #[test]
    fn beta_identities_small() {
        assert!(Braiding::flip(2).verify_beta_identities(1, 1, 1, 5).unwrap());
        assert!(all_q(2).verify_beta_identities(0, 2, 1, 5).unwrap());
        assert!(all_q(2).verify_beta_identities(2, 1, 1, 5).unwrap());
        assert!(matches!(
            all_q(2).verify_beta_identities(2, 2, 2, 5),
            Err(Error::TruncationOverflow { .. })
        ));
    }

    #[test]
    fn reduced_word_independence() {
        for b in [all_q(2), symmetric_diag(), Braiding::flip(2)] {
            for perm in (0..4usize).permutations(4) {
                let p = Permutation::from_images(&perm.iter().map(|i| i + 1).collect::<Vec<_>>()).unwrap();
                for word in words_of_grade(2, 4) {
                    let reference = b.lift_word(&p, &word).unwrap();
                    for rw in p.all_reduced_words() {
                        assert_eq!(b.lift_word_along(&rw, &word), reference);
                    }
                }
            }
        }
    }
}
