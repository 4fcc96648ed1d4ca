//! Finite-dimensional braided algebras given by structure constants, their
//! axiom checks and the augmentation `Ā = A ⊕ 𝕜`.

use std::sync::OnceLock;

use crate::braiding::{Braiding, SigmaEntry};
use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};
use crate::tensor::{words_of_grade, LinComb, Word};

/// A product of two basis vectors, or a marker that it lies beyond the
/// truncation of a graded algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MuEntry {
    Value(LinComb<u8>),
    Overflow { grade: usize, cap: usize },
}

/// One structure constant `e_i·e_j ∋ c·e_k`, zero-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuConstant {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c: Scalar,
}

/// A basis tuple on which an identity fails, with both sides printed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomWitness {
    pub input: Word,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug)]
pub struct BraidedAlgebra {
    dim: usize,
    mu: Vec<MuEntry>,
    unit: Option<LinComb<u8>>,
    sigma: Braiding,
    associative: OnceLock<bool>,
    braided: OnceLock<bool>,
    commutative: OnceLock<bool>,
}

fn fmt_vec(v: &LinComb<Word>) -> String {
    crate::tensor::join_terms(v.iter().map(|(w, c)| crate::tensor::fmt_term(c, &w.to_string())))
}

fn letters_to_words(v: &LinComb<u8>) -> LinComb<Word> {
    v.iter().map(|(&l, c)| (Word::letter(l as usize), c.clone())).collect()
}

impl BraidedAlgebra {
    pub fn new(sigma: Braiding, constants: &[MuConstant], unit: Option<Vec<Scalar>>) -> Result<Self> {
        let dim = sigma.dim();
        let mut mu = vec![LinComb::new(); dim * dim];
        for m in constants {
            if m.i >= dim || m.j >= dim || m.k >= dim {
                return Err(Error::IndexOutOfRange(format!(
                    "structure constant ({}, {}, {}) in dimension {dim}",
                    m.i + 1,
                    m.j + 1,
                    m.k + 1
                )));
            }
            mu[m.i * dim + m.j].add_term(m.k as u8, m.c.clone());
        }
        Self::from_table(sigma, mu.into_iter().map(MuEntry::Value).collect(), unit)
    }

    /// Builds from a row-major `d×d` table of products.
    pub fn from_table(sigma: Braiding, mu: Vec<MuEntry>, unit: Option<Vec<Scalar>>) -> Result<Self> {
        let dim = sigma.dim();
        if mu.len() != dim * dim {
            return Err(Error::DimensionMismatch(format!(
                "{} products for dimension {dim}",
                mu.len()
            )));
        }
        let unit = match unit {
            Some(u) if u.len() != dim => {
                return Err(Error::DimensionMismatch(format!(
                    "unit of length {} in dimension {dim}",
                    u.len()
                )))
            }
            Some(u) => Some(
                u.into_iter()
                    .enumerate()
                    .map(|(i, c)| (i as u8, c))
                    .collect::<LinComb<u8>>(),
            ),
            None => None,
        };
        let alg = BraidedAlgebra {
            dim,
            mu,
            unit,
            sigma,
            associative: OnceLock::new(),
            braided: OnceLock::new(),
            commutative: OnceLock::new(),
        };
        if let Some(u) = &alg.unit {
            for a in 0..dim as u8 {
                let e = LinComb::basis(a);
                if alg.mul_vec(u, &e)? != e || alg.mul_vec(&e, u)? != e {
                    return Err(Error::IncompatibleAlgebra(format!("unit fails on e{}", a + 1)));
                }
            }
        }
        Ok(alg)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn sigma(&self) -> &Braiding {
        &self.sigma
    }

    pub fn field(&self) -> Field {
        let mu_q = self.mu.iter().any(|m| match m {
            MuEntry::Value(v) => v.iter().any(|(_, c)| !c.is_rational()),
            MuEntry::Overflow { .. } => false,
        });
        if mu_q {
            Field::RationalFunction
        } else {
            self.sigma.field()
        }
    }

    pub fn unit(&self) -> Option<&LinComb<u8>> {
        self.unit.as_ref()
    }

    /// Index of the unit when it is a basis vector.
    pub fn unit_letter(&self) -> Option<u8> {
        let u = self.unit.as_ref()?;
        match (u.len(), u.iter().next()) {
            (1, Some((&l, c))) if c.is_one() => Some(l),
            _ => None,
        }
    }

    pub fn constants(&self) -> Vec<MuConstant> {
        let mut out = Vec::new();
        for (idx, m) in self.mu.iter().enumerate() {
            if let MuEntry::Value(v) = m {
                for (&k, c) in v.iter() {
                    out.push(MuConstant {
                        i: idx / self.dim,
                        j: idx % self.dim,
                        k: k as usize,
                        c: c.clone(),
                    });
                }
            }
        }
        out
    }

    pub fn mul(&self, a: u8, b: u8) -> Result<&LinComb<u8>> {
        match &self.mu[a as usize * self.dim + b as usize] {
            MuEntry::Value(v) => Ok(v),
            MuEntry::Overflow { grade, cap } => Err(Error::TruncationOverflow {
                grade: *grade,
                cap: *cap,
            }),
        }
    }

    pub fn mul_vec(&self, x: &LinComb<u8>, y: &LinComb<u8>) -> Result<LinComb<u8>> {
        let mut out = LinComb::new();
        for (&a, c) in x.iter() {
            for (&b, d) in y.iter() {
                out.add_scaled(self.mul(a, b)?, &(c * d));
            }
        }
        Ok(out)
    }

    /// `μ` on letters `pos, pos+1` of every word.
    pub fn mul_at(&self, x: &LinComb<Word>, pos: usize) -> Result<LinComb<Word>> {
        x.map_linear(|w| {
            let l = w.letters();
            let prod = self.mul(l[pos], l[pos + 1])?;
            Ok(prod
                .iter()
                .map(|(&k, c)| {
                    let mut letters = l[..pos].to_vec();
                    letters.push(k);
                    letters.extend_from_slice(&l[pos + 2..]);
                    (Word::from_letters(&letters), c.clone())
                })
                .collect())
        })
    }

    fn first_failure(
        &self,
        grade: usize,
        mut sides: impl FnMut(&Word) -> Result<(LinComb<Word>, LinComb<Word>)>,
    ) -> Result<Option<AxiomWitness>> {
        for w in words_of_grade(self.dim, grade) {
            match sides(&w) {
                Ok((l, r)) if l != r => {
                    return Ok(Some(AxiomWitness {
                        input: w,
                        lhs: fmt_vec(&l),
                        rhs: fmt_vec(&r),
                    }))
                }
                Ok(_) | Err(Error::TruncationOverflow { .. }) => {}
                Err(e) => return Err(e),
            }
        }
        Ok(None)
    }

    /// `(xy)z = x(yz)` on all basis triples; truncated products are skipped.
    pub fn associativity_witness(&self) -> Option<AxiomWitness> {
        self.first_failure(3, |w| {
            let x = LinComb::basis(w.clone());
            let l = self.mul_at(&self.mul_at(&x, 0)?, 0)?;
            let r = self.mul_at(&self.mul_at(&x, 1)?, 0)?;
            Ok((l, r))
        })
        .expect("only overflow errors arise")
    }

    pub fn check_associativity(&self) -> bool {
        *self.associative.get_or_init(|| self.associativity_witness().is_none())
    }

    /// `(id⊗μ)σ₁σ₂ = σ(μ⊗id)` and `(μ⊗id)σ₂σ₁ = σ(id⊗μ)`.
    pub fn braided_algebra_witness(&self) -> Result<Option<AxiomWitness>> {
        if !self.sigma.check_ybe() {
            return Err(Error::UnverifiedBraiding("braided algebra check"));
        }
        let s = &self.sigma;
        let first = self.first_failure(3, |w| {
            let x = LinComb::basis(w.clone());
            let l = self.mul_at(&s.apply_at(&s.apply_at(&x, 1), 0), 1)?;
            let r = s.apply_at(&self.mul_at(&x, 0)?, 0);
            Ok((l, r))
        })?;
        if first.is_some() {
            return Ok(first);
        }
        self.first_failure(3, |w| {
            let x = LinComb::basis(w.clone());
            let l = self.mul_at(&s.apply_at(&s.apply_at(&x, 0), 1), 0)?;
            let r = s.apply_at(&self.mul_at(&x, 1)?, 0);
            Ok((l, r))
        })
    }

    pub fn check_braided_algebra(&self) -> Result<bool> {
        if let Some(&v) = self.braided.get() {
            return Ok(v);
        }
        let ok = self.braided_algebra_witness()?.is_none();
        Ok(*self.braided.get_or_init(|| ok))
    }

    /// `σ(a⊗1_A) = 1_A⊗a` and `σ(1_A⊗a) = a⊗1_A` for every basis `a`.
    pub fn unital_braided_witness(&self) -> Result<Option<AxiomWitness>> {
        let u = self.unit.as_ref().ok_or(Error::NoUnit)?;
        let pair = |x: &LinComb<u8>, y: &LinComb<u8>| -> LinComb<Word> {
            let mut out = LinComb::new();
            for (&a, c) in x.iter() {
                for (&b, d) in y.iter() {
                    out.add_term(Word::from_letters(&[a, b]), c * d);
                }
            }
            out
        };
        for a in 0..self.dim as u8 {
            let e = LinComb::basis(a);
            for (l, r) in [(pair(&e, u), pair(u, &e)), (pair(u, &e), pair(&e, u))] {
                let lhs = self.sigma_vec(&l);
                if lhs != r {
                    let input = Word::from_letters(&[a]);
                    return Ok(Some(AxiomWitness {
                        input,
                        lhs: fmt_vec(&lhs),
                        rhs: fmt_vec(&r),
                    }));
                }
            }
        }
        Ok(None)
    }

    pub fn check_unital_braided(&self) -> Result<bool> {
        Ok(self.unital_braided_witness()?.is_none())
    }

    fn sigma_vec(&self, x: &LinComb<Word>) -> LinComb<Word> {
        self.sigma.apply_at(x, 0)
    }

    /// `μσ = μ` on all basis pairs.
    pub fn commutativity_witness(&self) -> Option<AxiomWitness> {
        self.first_failure(2, |w| {
            let x = LinComb::basis(w.clone());
            Ok((self.mul_at(&self.sigma_vec(&x), 0)?, self.mul_at(&x, 0)?))
        })
        .expect("only overflow errors arise")
    }

    pub fn check_commutative(&self) -> bool {
        *self.commutative.get_or_init(|| self.commutativity_witness().is_none())
    }

    /// `Ā = A ⊕ 𝕜` with the unit last and the induced braiding
    /// `σ̄((a,x)⊗(b,y)) = σ(a⊗b) + (0,y)⊗(a,x) + (b,0)⊗(0,x)`.
    pub fn augment(&self) -> Result<BraidedAlgebra> {
        if !self.sigma.check_ybe() {
            return Err(Error::UnverifiedBraiding("augmentation"));
        }
        let d = self.dim;
        let one = d as u8;
        let mut entries: Vec<SigmaEntry> = self.sigma.entries();
        for a in 0..d {
            entries.push(SigmaEntry {
                i: a,
                j: d,
                k: d,
                l: a,
                c: Scalar::one(),
            });
            entries.push(SigmaEntry {
                i: d,
                j: a,
                k: a,
                l: d,
                c: Scalar::one(),
            });
        }
        entries.push(SigmaEntry {
            i: d,
            j: d,
            k: d,
            l: d,
            c: Scalar::one(),
        });
        let sigma = Braiding::explicit(d + 1, &entries)?;
        let mut mu = Vec::with_capacity((d + 1) * (d + 1));
        for a in 0..=d {
            for b in 0..=d {
                mu.push(if a == d {
                    MuEntry::Value(LinComb::basis(b as u8))
                } else if b == d {
                    MuEntry::Value(LinComb::basis(a as u8))
                } else {
                    self.mu[a * d + b].clone()
                });
            }
        }
        let mut unit = vec![Scalar::zero(); d + 1];
        unit[one as usize] = Scalar::one();
        let out = BraidedAlgebra::from_table(sigma, mu, Some(unit))?;
        if !out.sigma.check_ybe() {
            return Err(Error::UnverifiedBraiding("augmented braiding"));
        }
        Ok(out)
    }

    /// Embeds a combination of letters as grade-one words.
    pub fn as_words(v: &LinComb<u8>) -> LinComb<Word> {
        letters_to_words(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(i: usize, j: usize, k: usize, c: i64) -> MuConstant {
        MuConstant {
            i,
            j,
            k,
            c: Scalar::int(c),
        }
    }

    fn one_dim(sigma_c: Scalar, square: i64) -> BraidedAlgebra {
        let s = Braiding::scaled_flip(1, sigma_c).unwrap();
        let mu = if square == 0 { vec![] } else { vec![k(0, 0, 0, square)] };
        BraidedAlgebra::new(s, &mu, None).unwrap()
    }

    #[test]
    fn associativity_examples() {
        assert!(one_dim(Scalar::one(), 1).check_associativity());
        let dual = one_dim(Scalar::one(), 0).augment().unwrap();
        assert!(dual.check_associativity());
        // e1e1 = e2, e2e1 = e1: (e1e1)e1 = e1 but e1(e1e1) = 0
        let odd = BraidedAlgebra::new(Braiding::flip(2), &[k(0, 0, 1, 1), k(1, 0, 0, 1)], None).unwrap();
        let w = odd.associativity_witness().unwrap();
        assert_eq!(w.input.to_string(), "e1|e1|e1");
        assert_eq!((w.lhs.as_str(), w.rhs.as_str()), ("e1", "0"));
    }

    #[test]
    fn braided_algebra_examples() {
        let comm = BraidedAlgebra::new(Braiding::flip(2), &[k(0, 0, 1, 1)], None).unwrap();
        assert!(comm.check_braided_algebra().unwrap());
        let qdual = one_dim(Scalar::q(), 0).augment().unwrap();
        assert!(qdual.check_braided_algebra().unwrap());
        // x·x = x with σ(x⊗x) = 2x⊗x breaks (ba1)
        let bad = one_dim(Scalar::int(2), 1);
        let w = bad.braided_algebra_witness().unwrap().unwrap();
        assert_eq!(w.input.to_string(), "e1|e1|e1");
        assert_eq!((w.lhs.as_str(), w.rhs.as_str()), ("4*e1|e1", "2*e1|e1"));
    }

    #[test]
    fn unital_and_commutative_examples() {
        let dual = one_dim(Scalar::int(-1), 0).augment().unwrap();
        assert!(dual.check_unital_braided().unwrap());
        assert!(dual.check_commutative());
        assert_eq!(one_dim(Scalar::one(), 0).check_unital_braided(), Err(Error::NoUnit));
        // unit row scaled by q
        let q = Scalar::q();
        let s = Braiding::diagonal(&[vec![q.clone(), q.clone()], vec![q.clone(), q.clone()]]).unwrap();
        let a = BraidedAlgebra::new(
            s,
            &[k(0, 1, 0, 1), k(1, 0, 0, 1), k(1, 1, 1, 1)],
            Some(vec![Scalar::zero(), Scalar::one()]),
        )
        .unwrap();
        assert!(!a.check_unital_braided().unwrap());
        let noncomm = BraidedAlgebra::new(Braiding::flip(2), &[k(0, 1, 0, 1)], None).unwrap();
        assert!(!noncomm.check_commutative());
    }

    #[test]
    fn augmentation() {
        let a = one_dim(Scalar::one(), 0);
        let bar = a.augment().unwrap();
        assert_eq!(bar.dim(), 2);
        assert_eq!(bar.unit_letter(), Some(1));
        assert_eq!(
            bar.sigma().apply_pair(0, 1),
            &LinComb::basis(Word::from_letters(&[1, 0]))
        );
        assert_eq!(
            bar.sigma().apply_pair(1, 1),
            &LinComb::basis(Word::from_letters(&[1, 1]))
        );
        assert_eq!(bar.sigma(), &Braiding::flip(2));
        assert!(bar.sigma().check_symmetric());
        assert!(!one_dim(Scalar::q(), 0).augment().unwrap().sigma().check_symmetric());
    }
}
