use std::sync::Arc;

use crate::algebra::BraidedAlgebra;
use crate::error::{Error, Result};
use crate::products::{Bilinear, LinearOp, PairMap, QShuffleSplit, QuantumMixable, QuantumShuffle, RbOperator, Side};
use crate::structures::{run_check, run_labeled, CheckReport, RbContext, Scope};
use crate::tensor::{LinComb, Tensor, TensorSpace, Word};

fn pair_image(
    f: impl Fn(&Word) -> Result<LinComb<Word>>,
    terms: &LinComb<(Word, Word)>,
    space: TensorSpace,
) -> Result<Tensor> {
    let mut out = Tensor::zero(space, 2);
    for ((u, v), c) in terms.iter() {
        let (fu, fv) = (f(u)?, f(v)?);
        for (x, a) in fu.iter() {
            for (y, b) in fv.iter() {
                out.add_term(vec![x.clone(), y.clone()], &(a * b) * c);
            }
        }
    }
    Ok(out)
}

fn letter_images(images: &[LinComb<Word>], w: &Word) -> Result<LinComb<Word>> {
    images
        .get(w.letters()[0] as usize)
        .cloned()
        .ok_or_else(|| Error::IndexOutOfRange(format!("no image for {w}")))
}

/// The extension `φ̄ : ш_σ(A) → R` of a braided algebra map `φ : A → R`,
/// `φ̄(a₀⊗a′) = φ(a₀)·P_R(φ̄(a′))`.
///
/// In the nonunital variant the source is `ш⁰_σ(A) ⊂ ш_σ(Ā)` and the adjoined
/// unit letter acts as the identity: `φ̄(1̄⊗a′) = P_R(φ̄(a′))`.
pub struct RbExtension {
    source: RbContext,
    alg: BraidedAlgebra,
    target: RbContext,
    phi: Vec<LinComb<Word>>,
    adjoined_unit: Option<u8>,
}

impl RbExtension {
    /// Unital case: `phi[a]` is the image of the letter `a` of `A`.
    pub fn new(
        alg: BraidedAlgebra,
        lambda: crate::scalar::Scalar,
        cap: usize,
        target: RbContext,
        phi: Vec<LinComb<Word>>,
    ) -> Result<Self> {
        let source = RbContext::mixable(alg.clone(), lambda, cap)?;
        let ext = RbExtension {
            source,
            alg,
            target,
            phi,
            adjoined_unit: None,
        };
        ext.check_morphism()?;
        Ok(ext)
    }

    /// Nonunital case over the augmentation `Ā` of `alg`; `phi` covers the
    /// letters of `alg` only.
    pub fn nonunital(
        alg: &BraidedAlgebra,
        lambda: crate::scalar::Scalar,
        cap: usize,
        target: RbContext,
        phi: Vec<LinComb<Word>>,
    ) -> Result<Self> {
        let ext = Self::nonunital_unchecked(alg.augment()?, lambda, cap, target, phi)?;
        ext.check_morphism()?;
        Ok(ext)
    }

    /// Nonunital case from an already augmented algebra, skipping the
    /// morphism precondition.
    pub(crate) fn nonunital_unchecked(
        augmented: BraidedAlgebra,
        lambda: crate::scalar::Scalar,
        cap: usize,
        target: RbContext,
        phi: Vec<LinComb<Word>>,
    ) -> Result<Self> {
        let unit = augmented.unit_letter().ok_or(Error::NoUnit)?;
        let space = TensorSpace::new(augmented.dim(), cap);
        let source = RbContext {
            product: Arc::new(QuantumMixable::new(augmented.clone(), lambda.clone(), space)?),
            op: Arc::new(RbOperator::new(LinComb::basis(unit), space)),
            lambda,
            sigma: Arc::new(augmented.sigma().clone()),
        };
        Ok(RbExtension {
            source,
            alg: augmented,
            target,
            phi,
            adjoined_unit: Some(unit),
        })
    }

    pub fn source(&self) -> &RbContext {
        &self.source
    }

    pub fn target(&self) -> &RbContext {
        &self.target
    }

    fn source_letters(&self) -> Vec<u8> {
        (0..self.alg.dim() as u8)
            .filter(|&a| Some(a) != self.adjoined_unit)
            .collect()
    }

    /// Braiding equivariance and multiplicativity of `φ` on letters.
    fn check_morphism(&self) -> Result<()> {
        let letters = self.source_letters();
        let space = self.target.space();
        let phi = |w: &Word| letter_images(&self.phi, w);
        for &a in &letters {
            for &b in &letters {
                let (u, v) = (Word::letter(a as usize), Word::letter(b as usize));
                let sigma: LinComb<(Word, Word)> = self
                    .alg
                    .sigma()
                    .apply_pair(a, b)
                    .iter()
                    .map(|(w, c)| (w.split_at(1), c.clone()))
                    .collect();
                let lhs = pair_image(phi, &sigma, space)?;
                let mut rhs = Tensor::zero(space, 2);
                for (x, p) in phi(&u)?.iter() {
                    for (y, q) in phi(&v)?.iter() {
                        for ((l, r), c) in self.target.sigma.pair(x, y)?.iter() {
                            rhs.add_term(vec![l.clone(), r.clone()], &(p * q) * c);
                        }
                    }
                }
                if lhs != rhs {
                    return Err(Error::IncompatibleMorphism(format!(
                        "braiding on {u} ⊗ {v}: {lhs} vs {rhs}"
                    )));
                }
                let prod = match self.alg.mul(a, b) {
                    Ok(p) => p,
                    Err(e) if e.is_overflow() => continue,
                    Err(e) => return Err(e),
                };
                let lhs = BraidedAlgebra::as_words(prod).map_linear(|w| phi(w))?;
                let rhs = self.target.product.combos(&phi(&u)?, &phi(&v)?)?;
                if lhs != rhs {
                    return Err(Error::IncompatibleMorphism(format!("product of {u} and {v}")));
                }
            }
        }
        Ok(())
    }

    /// `φ̄` on one word.
    pub fn word(&self, w: &Word) -> Result<LinComb<Word>> {
        let first = w.first().ok_or(Error::GradeZeroInput("Rota-Baxter extension"))?;
        if w.grade() == 1 {
            return letter_images(&self.phi, w);
        }
        let tail = self.target.op.combo(&self.word(&w.tail())?)?;
        if Some(first) == self.adjoined_unit {
            return Ok(tail);
        }
        self.target
            .product
            .combos(&letter_images(&self.phi, &w.slice(0, 1))?, &tail)
    }

    pub fn combo(&self, x: &LinComb<Word>) -> Result<LinComb<Word>> {
        x.map_linear(|w| self.word(w))
    }

    /// Words of the source within `scope` that the map is defined on.
    fn in_domain(&self, w: &Word) -> bool {
        match self.adjoined_unit {
            Some(u) => w.last() != Some(u),
            None => true,
        }
    }

    /// `φ̄P = P_Rφ̄`, `(φ̄⊗φ̄)β = τ(φ̄⊗φ̄)` and `φ̄(a⋄b) = φ̄(a)φ̄(b)`.
    pub fn verify(&self, scope: &Scope) -> Result<CheckReport> {
        let tspace = self.target.space();
        let words: Vec<Vec<Word>> = Scope {
            arity: 1,
            ..scope.clone()
        }
        .tuples()
        .into_iter()
        .filter(|t| self.in_domain(&t[0]))
        .collect();
        let label = |t: &Vec<Word>| t[0].to_string();
        let op = run_labeled("rb-extension-operator", scope, &words, label, |t| {
            let lhs = self.combo(&self.source.op.word(&t[0])?)?;
            let rhs = self.target.op.combo(&self.word(&t[0])?)?;
            Ok(vec![(
                "operator",
                Tensor::from_words(tspace, &lhs),
                Tensor::from_words(tspace, &rhs),
            )])
        })?;
        let pairs: Vec<Vec<Word>> = scope
            .tuples()
            .into_iter()
            .filter(|t| t.iter().all(|w| self.in_domain(w)))
            .collect();
        let show = |t: &Vec<Word>| t.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(" ⊗ ");
        let rest = run_labeled("rb-extension", scope, &pairs, show, |t| {
            let (u, v) = (&t[0], &t[1]);
            let f = |w: &Word| self.word(w);
            let lhs = pair_image(f, &self.source.sigma.pair(u, v)?, tspace)?;
            let mut rhs = Tensor::zero(tspace, 2);
            for (x, p) in self.word(u)?.iter() {
                for (y, q) in self.word(v)?.iter() {
                    for ((l, r), c) in self.target.sigma.pair(x, y)?.iter() {
                        rhs.add_term(vec![l.clone(), r.clone()], &(p * q) * c);
                    }
                }
            }
            let prod = self.combo(&self.source.product.words(u, v)?)?;
            let split = self.target.product.combos(&self.word(u)?, &self.word(v)?)?;
            Ok(vec![
                ("braiding", lhs, rhs),
                (
                    "product",
                    Tensor::from_words(tspace, &prod),
                    Tensor::from_words(tspace, &split),
                ),
            ])
        })?;
        CheckReport::merge("rb-extension", vec![rest, op])
    }
}

/// A braided dendriform target: the two operations and its braiding.
#[derive(Clone)]
pub struct DendriformContext {
    pub prec: Arc<dyn Bilinear>,
    pub succ: Arc<dyn Bilinear>,
    pub sigma: Arc<dyn PairMap>,
}

impl DendriformContext {
    /// `(T⁺_σ(V), ≺_σ, ≻_σ, β)`.
    pub fn quantum_shuffle(sigma: crate::braiding::Braiding, cap: usize) -> Result<Self> {
        let qs = Arc::new(QuantumShuffle::new(sigma.clone(), TensorSpace::new(sigma.dim(), cap))?);
        Ok(DendriformContext {
            prec: Arc::new(QShuffleSplit::new(qs.clone(), Side::Left)),
            succ: Arc::new(QShuffleSplit::new(qs, Side::Right)),
            sigma: Arc::new(sigma),
        })
    }

    pub fn space(&self) -> TensorSpace {
        self.prec.space()
    }
}

/// The extension `ψ̄ : T⁺_σ(V) → D` of a braided map `ψ : V → D`,
/// `ψ̄(u₁⊗u′) = ψ(u₁) ≺ ψ̄(u′)`.
pub struct DendriformExtension {
    source: DendriformContext,
    target: DendriformContext,
    psi: Vec<LinComb<Word>>,
}

impl DendriformExtension {
    pub fn new(
        sigma: crate::braiding::Braiding,
        cap: usize,
        target: DendriformContext,
        psi: Vec<LinComb<Word>>,
    ) -> Result<Self> {
        if psi.len() != sigma.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} images for dimension {}",
                psi.len(),
                sigma.dim()
            )));
        }
        let source = DendriformContext::quantum_shuffle(sigma.clone(), cap)?;
        let ext = DendriformExtension { source, target, psi };
        let tspace = ext.target.space();
        for a in 0..sigma.dim() {
            for b in 0..sigma.dim() {
                let (u, v) = (Word::letter(a), Word::letter(b));
                let lhs = pair_image(|w| ext.word(w), &sigma.beta_pair(&u, &v)?, tspace)?;
                let rhs = ext.target_braid(&u, &v)?;
                if lhs != rhs {
                    return Err(Error::IncompatibleMorphism(format!(
                        "braiding on {u} ⊗ {v}: {lhs} vs {rhs}"
                    )));
                }
            }
        }
        Ok(ext)
    }

    pub fn source(&self) -> &DendriformContext {
        &self.source
    }

    fn target_braid(&self, u: &Word, v: &Word) -> Result<Tensor> {
        let mut out = Tensor::zero(self.target.space(), 2);
        for (x, p) in self.word(u)?.iter() {
            for (y, q) in self.word(v)?.iter() {
                for ((l, r), c) in self.target.sigma.pair(x, y)?.iter() {
                    out.add_term(vec![l.clone(), r.clone()], &(p * q) * c);
                }
            }
        }
        Ok(out)
    }

    /// `ψ̄` on one word.
    pub fn word(&self, w: &Word) -> Result<LinComb<Word>> {
        if w.is_empty() {
            return Err(Error::GradeZeroInput("dendriform extension"));
        }
        let head = letter_images(&self.psi, w)?;
        if w.grade() == 1 {
            return Ok(head);
        }
        self.target.prec.combos(&head, &self.word(&w.tail())?)
    }

    pub fn combo(&self, x: &LinComb<Word>) -> Result<LinComb<Word>> {
        x.map_linear(|w| self.word(w))
    }

    /// `ψ̄(u≺v) = ψ̄u≺ψ̄v`, the same for `≻`, and `(ψ̄⊗ψ̄)β = τ(ψ̄⊗ψ̄)`.
    pub fn verify(&self, scope: &Scope) -> Result<CheckReport> {
        let tspace = self.target.space();
        run_check("dendriform-extension", scope, |t| {
            let (u, v) = (&t[0], &t[1]);
            let mut out = Vec::with_capacity(3);
            for (name, src, dst) in [
                ("prec", &self.source.prec, &self.target.prec),
                ("succ", &self.source.succ, &self.target.succ),
            ] {
                let lhs = self.combo(&src.words(u, v)?)?;
                let rhs = dst.combos(&self.word(u)?, &self.word(v)?)?;
                out.push((name, Tensor::from_words(tspace, &lhs), Tensor::from_words(tspace, &rhs)));
            }
            let lhs = pair_image(|w| self.word(w), &self.source.sigma.pair(u, v)?, tspace)?;
            out.push(("braiding", lhs, self.target_braid(u, v)?));
            Ok(out)
        })
    }
}
