use std::sync::Arc;

use super::{Bilinear, LinearOp, Side};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tensor::{LinComb, TensorSpace, Word};

/// `P(x₀⊗⋯⊗xₙ) = 1_A⊗x₀⊗⋯⊗xₙ` on `ш_σ(A)`.
#[derive(Clone, Debug)]
pub struct RbOperator {
    unit: LinComb<u8>,
    space: TensorSpace,
}

impl RbOperator {
    pub fn new(unit: LinComb<u8>, space: TensorSpace) -> Self {
        RbOperator { unit, space }
    }
}

impl LinearOp for RbOperator {
    fn word(&self, w: &Word) -> Result<LinComb<Word>> {
        self.space.check_grade(w.grade() + 1)?;
        Ok(self.unit.iter().map(|(&k, c)| (w.prepend(k), c.clone())).collect())
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Identity;

impl LinearOp for Identity {
    fn word(&self, w: &Word) -> Result<LinComb<Word>> {
        Ok(LinComb::basis(w.clone()))
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ZeroOp;

impl LinearOp for ZeroOp {
    fn word(&self, _: &Word) -> Result<LinComb<Word>> {
        Ok(LinComb::new())
    }
}

/// `c·id`.
#[derive(Clone, Debug)]
pub struct ScaledOp(pub Scalar);

impl LinearOp for ScaledOp {
    fn word(&self, w: &Word) -> Result<LinComb<Word>> {
        Ok(LinComb::single(w.clone(), self.0.clone()))
    }
}

/// `≺_P = ⋄(id⊗P + λ·id⊗id)` and `≻_P = ⋄(P⊗id)`.
pub struct RbSplit {
    product: Arc<dyn Bilinear>,
    op: Arc<dyn LinearOp>,
    lambda: Scalar,
    side: Side,
}

impl RbSplit {
    pub fn new(product: Arc<dyn Bilinear>, op: Arc<dyn LinearOp>, lambda: Scalar, side: Side) -> Self {
        RbSplit {
            product,
            op,
            lambda,
            side,
        }
    }
}

impl Bilinear for RbSplit {
    fn space(&self) -> TensorSpace {
        self.product.space()
    }

    fn words(&self, u: &Word, v: &Word) -> Result<LinComb<Word>> {
        let single = |w: &Word| LinComb::basis(w.clone());
        match self.side {
            Side::Left => {
                let mut out = self.product.combos(&single(u), &self.op.word(v)?)?;
                if !self.lambda.is_zero() {
                    out.add_scaled(&self.product.words(u, v)?, &self.lambda);
                }
                Ok(out)
            }
            Side::Right => self.product.combos(&self.op.word(u)?, &single(v)),
        }
    }
}

/// `x ⋆ y = x ≺ y + x ≻ y`.
pub struct SumProduct {
    left: Arc<dyn Bilinear>,
    right: Arc<dyn Bilinear>,
}

impl SumProduct {
    pub fn new(left: Arc<dyn Bilinear>, right: Arc<dyn Bilinear>) -> Result<Self> {
        if left.space() != right.space() {
            return Err(Error::DimensionMismatch("summands on different spaces".into()));
        }
        Ok(SumProduct { left, right })
    }
}

impl Bilinear for SumProduct {
    fn space(&self) -> TensorSpace {
        self.left.space()
    }

    fn words(&self, u: &Word, v: &Word) -> Result<LinComb<Word>> {
        Ok(self.left.words(u, v)?.add(&self.right.words(u, v)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::BraidedAlgebra;
    use crate::braiding::Braiding;
    use crate::products::QuantumMixable;
    use crate::tensor::Element;

    fn sp() -> TensorSpace {
        TensorSpace::new(2, 4)
    }

    fn el(t: &str) -> Element {
        Element::parse(sp(), t).unwrap()
    }

    #[test]
    fn rb_operator_examples() {
        let p = RbOperator::new(LinComb::basis(1), sp());
        assert_eq!(p.combo(el("e1").terms()).unwrap(), el("e2|e1").into_terms());
        assert_eq!(p.combo(el("e2").terms()).unwrap(), el("e2|e2").into_terms());
        assert_eq!(p.combo(el("2*e1|e2").terms()).unwrap(), el("2*e2|e1|e2").into_terms());
        assert!(matches!(
            p.word(&Word::parse("e1|e1|e1|e1").unwrap()),
            Err(Error::TruncationOverflow { .. })
        ));
    }

    #[test]
    fn rb_split_examples() {
        let dual = BraidedAlgebra::new(Braiding::flip(1), &[], None)
            .unwrap()
            .augment()
            .unwrap();
        let m: Arc<dyn Bilinear> = Arc::new(QuantumMixable::new(dual, Scalar::zero(), sp()).unwrap());
        let p: Arc<dyn LinearOp> = Arc::new(RbOperator::new(LinComb::basis(1), sp()));
        let prec = RbSplit::new(m.clone(), p.clone(), Scalar::zero(), Side::Left);
        let succ = RbSplit::new(m.clone(), p.clone(), Scalar::zero(), Side::Right);
        // x ≻_P y = (1⊗x)⋄y and x ≺_P y = x⋄(1⊗y)
        assert_eq!(succ.apply(&el("e1"), &el("e1")).unwrap(), el("e1|e1"));
        assert_eq!(prec.apply(&el("e1"), &el("e1")).unwrap(), el("e1|e1"));
        let star = SumProduct::new(Arc::new(prec), Arc::new(succ)).unwrap();
        assert_eq!(star.apply(&el("e1"), &el("e1")).unwrap(), el("2*e1|e1"));
    }
}
