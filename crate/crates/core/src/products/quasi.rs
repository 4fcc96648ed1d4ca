use super::{add_prepended, Bilinear, Memo};
use crate::algebra::BraidedAlgebra;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tensor::{LinComb, TensorSpace, Word};

fn check_dims(alg: &BraidedAlgebra, space: TensorSpace) -> Result<()> {
    if alg.dim() != space.dim {
        return Err(Error::DimensionMismatch(format!(
            "algebra of dimension {} on words over {} letters",
            alg.dim(),
            space.dim
        )));
    }
    Ok(())
}

/// `Σ c·(k ⊗ w)` over the letters `k` of a vector of `A`.
fn prefix(v: &LinComb<u8>, w: &Word) -> LinComb<Word> {
    v.iter().map(|(&k, c)| (w.prepend(k), c.clone())).collect()
}

/// The classical quasi-shuffle on `T(A)` for a commutative algebra `A`:
/// `a*b = a₁⊗(a′*b) + b₁⊗(a*b′) + λ(a₁b₁)⊗(a′*b′)`.
pub struct QuasiShuffle {
    alg: BraidedAlgebra,
    lambda: Scalar,
    space: TensorSpace,
    memo: Memo,
}

impl QuasiShuffle {
    pub fn new(alg: BraidedAlgebra, lambda: Scalar, space: TensorSpace) -> Result<Self> {
        check_dims(&alg, space)?;
        for a in 0..alg.dim() as u8 {
            for b in 0..a {
                if alg.mul(a, b)? != alg.mul(b, a)? {
                    return Err(Error::IncompatibleAlgebra(format!(
                        "e{}·e{} differs from e{}·e{}",
                        a + 1,
                        b + 1,
                        b + 1,
                        a + 1
                    )));
                }
            }
        }
        Ok(QuasiShuffle {
            alg,
            lambda,
            space,
            memo: Memo::default(),
        })
    }
}

impl Bilinear for QuasiShuffle {
    fn space(&self) -> TensorSpace {
        self.space
    }

    fn words(&self, a: &Word, b: &Word) -> Result<LinComb<Word>> {
        if a.is_empty() {
            return Ok(LinComb::basis(b.clone()));
        }
        if b.is_empty() {
            return Ok(LinComb::basis(a.clone()));
        }
        self.space.check_grade(a.grade() + b.grade())?;
        self.memo.get_or(a, b, || {
            let (a1, b1) = (a.letters()[0], b.letters()[0]);
            let mut out = LinComb::new();
            let one = Scalar::one();
            add_prepended(&mut out, a1, &self.words(&a.tail(), b)?, &one);
            add_prepended(&mut out, b1, &self.words(a, &b.tail())?, &one);
            if !self.lambda.is_zero() {
                let rest = self.words(&a.tail(), &b.tail())?;
                for (&k, c) in self.alg.mul(a1, b1)?.iter() {
                    add_prepended(&mut out, k, &rest, &(c * &self.lambda));
                }
            }
            Ok(out)
        })
    }
}

/// The classical mixable shuffle `⋄_λ` on `ш(A) = ⊕_{i≥1} A^{⊗i}`,
/// by its own three-case recursion.
pub struct ClassicalMixable {
    alg: BraidedAlgebra,
    unit: LinComb<u8>,
    lambda: Scalar,
    space: TensorSpace,
    memo: Memo,
}

impl ClassicalMixable {
    pub fn new(alg: BraidedAlgebra, lambda: Scalar, space: TensorSpace) -> Result<Self> {
        check_dims(&alg, space)?;
        let unit = alg.unit().cloned().ok_or(Error::NoUnit)?;
        Ok(ClassicalMixable {
            alg,
            unit,
            lambda,
            space,
            memo: Memo::default(),
        })
    }

    fn combo(&self, x: &LinComb<Word>, y: &LinComb<Word>) -> Result<LinComb<Word>> {
        self.combos(x, y)
    }
}

impl Bilinear for ClassicalMixable {
    fn space(&self) -> TensorSpace {
        self.space
    }

    fn words(&self, a: &Word, b: &Word) -> Result<LinComb<Word>> {
        if a.is_empty() || b.is_empty() {
            return Err(Error::GradeZeroInput("mixable product"));
        }
        self.space.check_grade(a.grade() + b.grade() - 1)?;
        self.memo.get_or(a, b, || {
            let a0b0 = self.alg.mul(a.letters()[0], b.letters()[0])?;
            let (ta, tb) = (a.tail(), b.tail());
            let mut out = LinComb::new();
            let inner = match (ta.is_empty(), tb.is_empty()) {
                (true, _) => LinComb::basis(tb),
                (false, true) => LinComb::basis(ta),
                (false, false) => {
                    let mut inner = self.combo(&LinComb::basis(ta.clone()), &prefix(&self.unit, &tb))?;
                    inner.add_scaled(
                        &self.combo(&prefix(&self.unit, &ta), &LinComb::basis(tb.clone()))?,
                        &Scalar::one(),
                    );
                    if !self.lambda.is_zero() {
                        inner.add_scaled(&self.words(&ta, &tb)?, &self.lambda);
                    }
                    inner
                }
            };
            for (&k, c) in a0b0.iter() {
                add_prepended(&mut out, k, &inner, c);
            }
            Ok(out)
        })
    }
}

/// The quantum quasi-shuffle `*_{σ,λ}` on `T(A)`:
/// `a*b = a₁⊗(a′*b) + (id⊗*)(β_{i,1}⊗id)(a⊗b) + λ(μ⊗*)(id⊗β_{i−1,1}⊗id)(a⊗b)`.
pub struct QuantumQuasiShuffle {
    alg: BraidedAlgebra,
    lambda: Scalar,
    space: TensorSpace,
    memo: Memo,
}

impl QuantumQuasiShuffle {
    pub fn new(alg: BraidedAlgebra, lambda: Scalar, space: TensorSpace) -> Result<Self> {
        check_dims(&alg, space)?;
        if !alg.check_associativity() {
            return Err(Error::IncompatibleAlgebra("product is not associative".into()));
        }
        if !alg.check_braided_algebra()? {
            return Err(Error::IncompatibleAlgebra("product and braiding violate (ba1)".into()));
        }
        Ok(QuantumQuasiShuffle {
            alg,
            lambda,
            space,
            memo: Memo::default(),
        })
    }

    pub fn algebra(&self) -> &BraidedAlgebra {
        &self.alg
    }

    pub fn lambda(&self) -> &Scalar {
        &self.lambda
    }
}

impl Bilinear for QuantumQuasiShuffle {
    fn space(&self) -> TensorSpace {
        self.space
    }

    fn words(&self, a: &Word, b: &Word) -> Result<LinComb<Word>> {
        if a.is_empty() {
            return Ok(LinComb::basis(b.clone()));
        }
        if b.is_empty() {
            return Ok(LinComb::basis(a.clone()));
        }
        self.space.check_grade(a.grade() + b.grade())?;
        self.memo.get_or(a, b, || {
            let sigma = self.alg.sigma();
            let (b1, rest) = b.split_at(1);
            let mut out = LinComb::new();
            add_prepended(&mut out, a.letters()[0], &self.words(&a.tail(), b)?, &Scalar::one());
            for ((x, a2), c) in sigma.beta_pair(a, &b1)?.iter() {
                add_prepended(&mut out, x.letters()[0], &self.words(a2, &rest)?, c);
            }
            if !self.lambda.is_zero() {
                let a1 = a.letters()[0];
                for ((y, a3), c) in sigma.beta_pair(&a.tail(), &b1)?.iter() {
                    let tail = self.words(a3, &rest)?;
                    for (&k, d) in self.alg.mul(a1, y.letters()[0])?.iter() {
                        add_prepended(&mut out, k, &tail, &(&(c * d) * &self.lambda));
                    }
                }
            }
            Ok(out)
        })
    }
}

/// The product `⋄_{σ,λ}` of `ш_σ(A) = A⊗ш⁺_σ(A)`:
/// `(a₀⊗a′)⋄(b₀⊗b′) = (μ⊗*_{σ,λ})(id⊗β_{m,1}⊗id)(a⊗b)`.
pub struct QuantumMixable {
    qqs: QuantumQuasiShuffle,
}

impl QuantumMixable {
    pub fn new(alg: BraidedAlgebra, lambda: Scalar, space: TensorSpace) -> Result<Self> {
        Ok(QuantumMixable {
            qqs: QuantumQuasiShuffle::new(alg, lambda, space)?,
        })
    }

    pub fn algebra(&self) -> &BraidedAlgebra {
        &self.qqs.alg
    }

    pub fn lambda(&self) -> &Scalar {
        &self.qqs.lambda
    }

    pub fn quasi_shuffle(&self) -> &QuantumQuasiShuffle {
        &self.qqs
    }
}

impl Bilinear for QuantumMixable {
    fn space(&self) -> TensorSpace {
        self.qqs.space
    }

    fn words(&self, a: &Word, b: &Word) -> Result<LinComb<Word>> {
        if a.is_empty() || b.is_empty() {
            return Err(Error::GradeZeroInput("mixable product"));
        }
        self.qqs.space.check_grade(a.grade() + b.grade() - 1)?;
        let alg = &self.qqs.alg;
        let (b0, rest) = b.split_at(1);
        let a0 = a.letters()[0];
        let mut out = LinComb::new();
        for ((y, a2), c) in alg.sigma().beta_pair(&a.tail(), &b0)?.iter() {
            let tail = self.qqs.words(a2, &rest)?;
            for (&k, d) in alg.mul(a0, y.letters()[0])?.iter() {
                add_prepended(&mut out, k, &tail, &(c * d));
            }
        }
        Ok(out)
    }
}
