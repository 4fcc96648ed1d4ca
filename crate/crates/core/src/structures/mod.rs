//! Exhaustive axiom checks on declared scopes of basis tuples.
//!
//! Each check states its identity on the multi-slot [`Tensor`] engine and
//! reports the first failing tuple in canonical order.

mod report;

use std::sync::Arc;

pub use report::{run_check, run_facts, run_labeled, CheckReport, Counts, Lcg, Sample, Scope, Sides, Status, Witness};

use crate::algebra::BraidedAlgebra;
use crate::error::{Error, Result};
use crate::products::{Bilinear, Coproduct, LinearOp, PairMap, QuantumMixable, RbOperator, RbSplit, Side};
use crate::scalar::Scalar;
use crate::tensor::{LinComb, Tensor, TensorSpace, Word};

/// Slot-wise application of products, operators, braidings and coproducts.
trait SlotOps: Sized {
    fn op(&self, k: usize, p: &dyn LinearOp) -> Result<Self>;
    fn mul(&self, k: usize, m: &dyn Bilinear) -> Result<Self>;
    fn br(&self, k: usize, s: &dyn PairMap) -> Result<Self>;
    fn co(&self, k: usize, d: &dyn Coproduct) -> Result<Self>;
}

impl SlotOps for Tensor {
    fn op(&self, k: usize, p: &dyn LinearOp) -> Result<Tensor> {
        self.map_slot(k, |w| p.word(w))
    }
    fn mul(&self, k: usize, m: &dyn Bilinear) -> Result<Tensor> {
        self.merge(k, |a, b| m.words(a, b))
    }
    fn br(&self, k: usize, s: &dyn PairMap) -> Result<Tensor> {
        self.braid(k, |a, b| s.pair(a, b))
    }
    fn co(&self, k: usize, d: &dyn Coproduct) -> Result<Tensor> {
        self.split(k, |w| d.split(w))
    }
}

/// `x ⋆ y = x ≺ y + x ≻ y` on borrowed operations.
struct Star<'a>(&'a dyn Bilinear, &'a dyn Bilinear);

impl Bilinear for Star<'_> {
    fn space(&self) -> TensorSpace {
        self.0.space()
    }
    fn words(&self, u: &Word, v: &Word) -> Result<LinComb<Word>> {
        Ok(self.0.words(u, v)?.add(&self.1.words(u, v)?))
    }
}

fn space_of(scope: &Scope) -> TensorSpace {
    TensorSpace::new(scope.dim, scope.cap)
}

fn tuple(space: TensorSpace, t: &[Word]) -> Tensor {
    Tensor::basis(space, t.to_vec())
}

fn sum(terms: Vec<Tensor>) -> Result<Tensor> {
    let mut it = terms.into_iter();
    let first = it.next().ok_or_else(|| Error::InvalidInput("empty sum".into()))?;
    it.try_fold(first, |acc, t| acc.add(&t))
}

/// `P(x)P(y) = P(xP(y)) + P(P(x)y) + λP(xy)`.
pub fn check_rota_baxter(m: &dyn Bilinear, p: &dyn LinearOp, lambda: &Scalar, scope: &Scope) -> Result<CheckReport> {
    let space = m.space();
    run_check("rota-baxter", scope, |t| {
        let t = tuple(space, t);
        let lhs = t.op(0, p)?.op(1, p)?.mul(0, m)?;
        let mut rhs = t
            .op(1, p)?
            .mul(0, m)?
            .op(0, p)?
            .add(&t.op(0, p)?.mul(0, m)?.op(0, p)?)?;
        if !lambda.is_zero() {
            rhs = rhs.add(&t.mul(0, m)?.op(0, p)?.scale(lambda))?;
        }
        Ok(vec![("rota-baxter", lhs, rhs)])
    })
}

/// `σ(P⊗P) = (P⊗P)σ`.
pub fn check_braided_rb(sigma: &dyn PairMap, p: &dyn LinearOp, scope: &Scope) -> Result<CheckReport> {
    let space = space_of(scope);
    run_check("braided-rb", scope, |t| {
        let t = tuple(space, t);
        let lhs = t.op(0, p)?.op(1, p)?.br(0, sigma)?;
        let rhs = t.br(0, sigma)?.op(0, p)?.op(1, p)?;
        Ok(vec![("braided-rb", lhs, rhs)])
    })
}

/// Right: `σ(P⊗id) = (id⊗P)σ`. Left: `σ(id⊗P) = (P⊗id)σ`.
pub fn check_weak_rb(sigma: &dyn PairMap, p: &dyn LinearOp, side: Side, scope: &Scope) -> Result<CheckReport> {
    let space = space_of(scope);
    let (name, before, after) = match side {
        Side::Right => ("weak-rb-right", 0, 1),
        Side::Left => ("weak-rb-left", 1, 0),
    };
    run_check(name, scope, |t| {
        let t = tuple(space, t);
        let lhs = t.op(before, p)?.br(0, sigma)?;
        let rhs = t.br(0, sigma)?.op(after, p)?;
        Ok(vec![(name, lhs, rhs)])
    })
}

/// The three dendriform axioms on triples.
pub fn check_dendriform(prec: &dyn Bilinear, succ: &dyn Bilinear, scope: &Scope) -> Result<CheckReport> {
    let space = prec.space();
    let star = Star(prec, succ);
    run_check("dendriform", scope, |t| {
        let t = tuple(space, t);
        Ok(vec![
            ("prec", t.mul(0, prec)?.mul(0, prec)?, t.mul(1, &star)?.mul(0, prec)?),
            ("ps", t.mul(0, succ)?.mul(0, prec)?, t.mul(1, prec)?.mul(0, succ)?),
            ("succ", t.mul(1, succ)?.mul(0, succ)?, t.mul(0, &star)?.mul(0, succ)?),
        ])
    })
}

/// `σ(id⊗∘) = (∘⊗id)σ₂σ₁` and `σ(∘⊗id) = (id⊗∘)σ₁σ₂` for `∘ ∈ {≺, ≻}`.
pub fn check_braided_dendriform(
    prec: &dyn Bilinear,
    succ: &dyn Bilinear,
    sigma: &dyn PairMap,
    scope: &Scope,
) -> Result<CheckReport> {
    let space = prec.space();
    run_check("braided-dendriform", scope, |t| {
        let t = tuple(space, t);
        let mut out = Vec::with_capacity(4);
        for (names, op) in [(["bda1-right", "bda1-left"], prec), (["bda2-right", "bda2-left"], succ)] {
            out.push((
                names[0],
                t.mul(1, op)?.br(0, sigma)?,
                t.br(0, sigma)?.br(1, sigma)?.mul(0, op)?,
            ));
            out.push((
                names[1],
                t.mul(0, op)?.br(0, sigma)?,
                t.br(1, sigma)?.br(0, sigma)?.mul(1, op)?,
            ));
        }
        Ok(out)
    })
}

/// `≺σ = ≻` and `≻σ = ≺`.
pub fn check_commutative_dendriform(
    prec: &dyn Bilinear,
    succ: &dyn Bilinear,
    sigma: &dyn PairMap,
    scope: &Scope,
) -> Result<CheckReport> {
    let space = prec.space();
    run_check("commutative-dendriform", scope, |t| {
        let t = tuple(space, t);
        let swapped = t.br(0, sigma)?;
        Ok(vec![
            ("prec-sigma", swapped.mul(0, prec)?, t.mul(0, succ)?),
            ("succ-sigma", swapped.mul(0, succ)?, t.mul(0, prec)?),
        ])
    })
}

/// The five summands of the right-hand side of (dha1) for `Side::Left` or
/// (dha2) for `Side::Right`, on the basis pair `x ⊗ y`, in the order of the
/// unbraided identities.
pub fn dha_summands(
    side: Side,
    prec: &dyn Bilinear,
    succ: &dyn Bilinear,
    cop: &dyn Coproduct,
    sigma: &dyn PairMap,
    x: &Word,
    y: &Word,
) -> Result<Vec<Tensor>> {
    let t = Tensor::basis(prec.space(), vec![x.clone(), y.clone()]);
    let star = Star(prec, succ);
    let op = match side {
        Side::Left => prec,
        Side::Right => succ,
    };
    let both = t.co(1, cop)?.co(0, cop)?.br(1, sigma)?.mul(0, op)?.mul(1, &star)?;
    let left_cut = t.co(0, cop)?.br(1, sigma)?.mul(0, op)?;
    let right_cut = t.co(1, cop)?.mul(0, op)?;
    Ok(match side {
        Side::Left => vec![both, left_cut, t.co(0, cop)?.mul(1, &star)?, right_cut, t],
        Side::Right => vec![
            both,
            left_cut,
            t.co(1, cop)?.br(0, sigma)?.mul(1, &star)?,
            right_cut,
            t.br(0, sigma)?,
        ],
    })
}

/// The five summands of the unbraided dendriform Hopf identities, evaluated
/// with explicit sums over the cuts `Δ̃(a) = Σ a′⊗a″`.
pub fn ronco_summands(
    side: Side,
    prec: &dyn Bilinear,
    succ: &dyn Bilinear,
    cop: &dyn Coproduct,
    a: &Word,
    b: &Word,
) -> Result<Vec<Tensor>> {
    let space = prec.space();
    let star = Star(prec, succ);
    let op = match side {
        Side::Left => prec,
        Side::Right => succ,
    };
    let (da, db) = (cop.split(a)?, cop.split(b)?);
    let mut s = vec![Tensor::zero(space, 2); 5];
    let put = |t: &mut Tensor, l: LinComb<Word>, r: LinComb<Word>, c: &Scalar| {
        for (u, x) in l.iter() {
            for (v, y) in r.iter() {
                t.add_term(vec![u.clone(), v.clone()], &(x * y) * c);
            }
        }
    };
    let one = |w: &Word| LinComb::basis(w.clone());
    for ((a1, a2), c) in da.iter() {
        for ((b1, b2), d) in db.iter() {
            put(&mut s[0], op.words(a1, b1)?, star.words(a2, b2)?, &(c * d));
        }
        put(&mut s[1], op.words(a1, b)?, one(a2), c);
    }
    for ((b1, b2), d) in db.iter() {
        put(&mut s[3], op.words(a, b1)?, one(b2), d);
    }
    match side {
        Side::Left => {
            for ((a1, a2), c) in da.iter() {
                put(&mut s[2], one(a1), star.words(a2, b)?, c);
            }
            s[4].add_term(vec![a.clone(), b.clone()], Scalar::one());
        }
        Side::Right => {
            for ((b1, b2), d) in db.iter() {
                put(&mut s[2], one(b1), star.words(a, b2)?, d);
            }
            s[4].add_term(vec![b.clone(), a.clone()], Scalar::one());
        }
    }
    Ok(s)
}

/// (dha1) and (dha2) on pairs.
pub fn check_dendriform_hopf(
    prec: &dyn Bilinear,
    succ: &dyn Bilinear,
    cop: &dyn Coproduct,
    sigma: &dyn PairMap,
    scope: &Scope,
) -> Result<CheckReport> {
    let space = prec.space();
    run_check("dendriform-hopf", scope, |t| {
        let pair = tuple(space, t);
        let mut out = Vec::with_capacity(2);
        for (name, side, op) in [("dha1", Side::Left, prec), ("dha2", Side::Right, succ)] {
            let lhs = pair.mul(0, op)?.co(0, cop)?;
            let rhs = sum(dha_summands(side, prec, succ, cop, sigma, &t[0], &t[1])?)?;
            out.push((name, lhs, rhs));
        }
        Ok(out)
    })
}

/// Summand-by-summand agreement of the braided identities, with `sigma`
/// expected to be a flip, and the unbraided ones.
pub fn check_ronco_term_match(
    prec: &dyn Bilinear,
    succ: &dyn Bilinear,
    cop: &dyn Coproduct,
    sigma: &dyn PairMap,
    scope: &Scope,
) -> Result<CheckReport> {
    const NAMES: [[&str; 5]; 2] = [
        ["dha1-term1", "dha1-term2", "dha1-term3", "dha1-term4", "dha1-term5"],
        ["dha2-term1", "dha2-term2", "dha2-term3", "dha2-term4", "dha2-term5"],
    ];
    run_check("ronco-term-match", scope, |t| {
        let mut out = Vec::with_capacity(10);
        for (names, side) in NAMES.iter().zip([Side::Left, Side::Right]) {
            let braided = dha_summands(side, prec, succ, cop, sigma, &t[0], &t[1])?;
            let classical = ronco_summands(side, prec, succ, cop, &t[0], &t[1])?;
            for ((name, l), r) in names.iter().zip(braided).zip(classical) {
                out.push((*name, l, r));
            }
        }
        Ok(out)
    })
}

/// `Δ∘m = (m⊗m)β₂(Δ⊗Δ)`.
pub fn check_bialgebra_compat(
    m: &dyn Bilinear,
    cop: &dyn Coproduct,
    beta: &dyn PairMap,
    scope: &Scope,
) -> Result<CheckReport> {
    let space = m.space();
    run_check("bialgebra-compat", scope, |t| {
        let t = tuple(space, t);
        let lhs = t.mul(0, m)?.co(0, cop)?;
        let rhs = t.co(1, cop)?.co(0, cop)?.br(1, beta)?.mul(0, m)?.mul(1, m)?;
        Ok(vec![("bialgebra-compat", lhs, rhs)])
    })
}

/// `m∘β = m`.
pub fn check_braided_commutative(m: &dyn Bilinear, beta: &dyn PairMap, scope: &Scope) -> Result<CheckReport> {
    let space = m.space();
    run_check("braided-commutative", scope, |t| {
        let t = tuple(space, t);
        Ok(vec![("braided-commutative", t.br(0, beta)?.mul(0, m)?, t.mul(0, m)?)])
    })
}

/// `β² = id`.
pub fn check_involutive(beta: &dyn PairMap, scope: &Scope) -> Result<CheckReport> {
    let space = space_of(scope);
    run_check("involutive", scope, |t| {
        let t = tuple(space, t);
        Ok(vec![("involutive", t.br(0, beta)?.br(0, beta)?, t)])
    })
}

/// `(xy)z = x(yz)`.
pub fn check_associative(m: &dyn Bilinear, scope: &Scope) -> Result<CheckReport> {
    let space = m.space();
    run_check("associativity", scope, |t| {
        let t = tuple(space, t);
        Ok(vec![(
            "associativity",
            t.mul(0, m)?.mul(0, m)?,
            t.mul(1, m)?.mul(0, m)?,
        )])
    })
}

/// A Rota-Baxter context: product, operator, weight and braiding on the
/// same carrier.
#[derive(Clone)]
pub struct RbContext {
    pub product: Arc<dyn Bilinear>,
    pub op: Arc<dyn LinearOp>,
    pub lambda: Scalar,
    pub sigma: Arc<dyn PairMap>,
}

impl RbContext {
    /// `(ш_σ(A), ⋄_{σ,λ}, P, β)` for a unital braided algebra `A`.
    pub fn mixable(alg: BraidedAlgebra, lambda: Scalar, cap: usize) -> Result<Self> {
        let unit = alg.unit().cloned().ok_or(Error::NoUnit)?;
        let space = TensorSpace::new(alg.dim(), cap);
        let sigma = Arc::new(alg.sigma().clone());
        let product = QuantumMixable::new(alg, lambda.clone(), space)?;
        Ok(RbContext {
            product: Arc::new(product),
            op: Arc::new(RbOperator::new(unit, space)),
            lambda,
            sigma,
        })
    }

    pub fn space(&self) -> TensorSpace {
        self.product.space()
    }

    /// Rota-Baxter identity, `σ(P⊗P) = (P⊗P)σ` and both weak conditions.
    pub fn strong_checks(&self, scope: &Scope) -> Result<Vec<CheckReport>> {
        Ok(vec![
            check_rota_baxter(&*self.product, &*self.op, &self.lambda, scope)?,
            check_braided_rb(&*self.sigma, &*self.op, scope)?,
            check_weak_rb(&*self.sigma, &*self.op, Side::Left, scope)?,
            check_weak_rb(&*self.sigma, &*self.op, Side::Right, scope)?,
        ])
    }

    /// `(≺_P, ≻_P)`.
    pub fn dendriform(&self) -> (RbSplit, RbSplit) {
        let split = |side| RbSplit::new(self.product.clone(), self.op.clone(), self.lambda.clone(), side);
        (split(Side::Left), split(Side::Right))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braiding::Braiding;
    use crate::products::{
        Concat, Deconcat, Flip, FnOp, FnProduct, Identity, QShuffleSplit, QuantumShuffle, ReducedDeconcat, ScaledOp,
        ZeroOp,
    };

    fn diag_q(d: usize) -> Braiding {
        Braiding::diagonal(&vec![vec![Scalar::q(); d]; d]).unwrap()
    }

    fn symmetric_diag() -> Braiding {
        let q = Scalar::q();
        Braiding::diagonal(&[vec![Scalar::one(), q.clone()], vec![q.inv().unwrap(), Scalar::int(-1)]]).unwrap()
    }

    fn dual(c: Scalar) -> BraidedAlgebra {
        let s = Braiding::scaled_flip(1, c).unwrap();
        BraidedAlgebra::new(s, &[], None).unwrap().augment().unwrap()
    }

    fn splits(s: &Braiding, cap: usize) -> (QShuffleSplit, QShuffleSplit, Arc<QuantumShuffle>) {
        let qs = Arc::new(QuantumShuffle::new(s.clone(), TensorSpace::new(s.dim(), cap)).unwrap());
        (
            QShuffleSplit::new(qs.clone(), Side::Left),
            QShuffleSplit::new(qs.clone(), Side::Right),
            qs,
        )
    }

    #[test]
    fn mixable_algebra_is_strongly_braided_rota_baxter() {
        for lambda in [Scalar::zero(), Scalar::one(), Scalar::int(-1)] {
            let ctx = RbContext::mixable(dual(Scalar::q()), lambda, 6).unwrap();
            let scope = Scope::new(ctx.space(), 2, 1, 4);
            for r in ctx.strong_checks(&scope).unwrap() {
                assert!(r.passed(), "{r:?}");
                assert_eq!(r.counts.checked, 2 * 2 + 2 * 4 * 2 + 4 * 4 + 2 * 8 * 2);
            }
        }
    }

    #[test]
    fn trivial_rota_baxter_operators() {
        let space = TensorSpace::new(2, 4);
        let scope = Scope::new(space, 2, 0, 3);
        let concat = Concat { space };
        assert!(check_rota_baxter(&concat, &Identity, &Scalar::int(-1), &scope)
            .unwrap()
            .passed());
        assert!(check_rota_baxter(&concat, &ZeroOp, &Scalar::zero(), &scope)
            .unwrap()
            .passed());
        let r = check_rota_baxter(&concat, &Identity, &Scalar::one(), &scope).unwrap();
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.witnesses[0].input, "1 ⊗ 1");
    }

    #[test]
    fn weak_rb_examples() {
        let s = diag_q(2);
        let scope = Scope::new(TensorSpace::new(2, 4), 2, 0, 3);
        for side in [Side::Left, Side::Right] {
            assert!(check_weak_rb(&s, &ScaledOp(Scalar::q()), side, &scope)
                .unwrap()
                .passed());
            assert!(check_braided_rb(&s, &Identity, &scope).unwrap().passed());
        }
        // doubling letters is not natural for a q-diagonal braiding
        let double = FnOp(|w: &Word| {
            Ok(if w.grade() == 1 {
                LinComb::basis(w.concat(w))
            } else {
                LinComb::new()
            })
        });
        let r = check_weak_rb(&s, &double, Side::Right, &scope).unwrap();
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.witnesses[0].input, "e1 ⊗ e1");
        assert_eq!(r.witnesses[0].lhs, "q^2*(e1 ⊗ e1|e1)");
        assert_eq!(r.witnesses[0].rhs, "q*(e1 ⊗ e1|e1)");
    }

    #[test]
    fn quantum_shuffle_split_is_braided_dendriform() {
        let s = diag_q(2);
        let (prec, succ, _) = splits(&s, 5);
        let space = TensorSpace::new(2, 5);
        assert!(check_dendriform(&prec, &succ, &Scope::new(space, 3, 1, 5))
            .unwrap()
            .passed());
        assert!(check_braided_dendriform(&prec, &succ, &s, &Scope::new(space, 3, 1, 4))
            .unwrap()
            .passed());
        let r = check_dendriform(&succ, &prec, &Scope::new(space, 3, 1, 3)).unwrap();
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.witnesses[0].input, "e1 ⊗ e1 ⊗ e1");
        let (o, l) = (Scalar::zero(), Scalar::one());
        let other = Braiding::twisted_flip(&[vec![l.clone(), l.clone()], vec![o, l]]).unwrap();
        let (prec, succ, _) = splits(&symmetric_diag(), 5);
        let r = check_braided_dendriform(&prec, &succ, &other, &Scope::new(space, 3, 1, 3)).unwrap();
        assert_eq!(r.status, Status::Fail);
    }

    #[test]
    fn commutativity_needs_a_symmetric_braiding() {
        let space = TensorSpace::new(2, 4);
        let scope = Scope::new(space, 2, 1, 4);
        let s = symmetric_diag();
        let (prec, succ, _) = splits(&s, 4);
        assert!(check_commutative_dendriform(&prec, &succ, &s, &scope).unwrap().passed());
        let s = diag_q(2);
        let (prec, succ, _) = splits(&s, 4);
        let r = check_commutative_dendriform(&prec, &succ, &s, &scope).unwrap();
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.witnesses[0].input, "e1 ⊗ e1");
    }

    #[test]
    fn dendriform_hopf_and_bialgebra() {
        let space = TensorSpace::new(2, 5);
        for s in [diag_q(2), Braiding::flip(2)] {
            let (prec, succ, qs) = splits(&s, 5);
            let r = check_dendriform_hopf(&prec, &succ, &ReducedDeconcat, &s, &Scope::new(space, 2, 1, 5)).unwrap();
            assert!(r.passed(), "{r:?}");
            assert!(check_bialgebra_compat(&*qs, &Deconcat, &s, &Scope::new(space, 2, 0, 4))
                .unwrap()
                .passed());
        }
        let (prec, succ, _) = splits(&Braiding::flip(2), 5);
        let r = check_ronco_term_match(&prec, &succ, &ReducedDeconcat, &Flip, &Scope::new(space, 2, 1, 5)).unwrap();
        assert!(r.passed(), "{r:?}");
        let r = check_bialgebra_compat(&Concat { space }, &Deconcat, &Flip, &Scope::new(space, 2, 0, 2)).unwrap();
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.witnesses[0].input, "e1 ⊗ e1");
    }

    #[test]
    fn dha_on_letters() {
        let s = diag_q(2);
        let (prec, succ, _) = splits(&s, 4);
        let (x, y) = (Word::letter(0), Word::letter(1));
        let one = dha_summands(Side::Left, &prec, &succ, &ReducedDeconcat, &s, &x, &y).unwrap();
        assert!(one[..4].iter().all(Tensor::is_zero));
        assert_eq!(one[4].to_string(), "(e1 ⊗ e2)");
        let two = dha_summands(Side::Right, &prec, &succ, &ReducedDeconcat, &s, &x, &y).unwrap();
        assert_eq!(two[4].to_string(), "q*(e2 ⊗ e1)");
    }

    #[test]
    fn overflow_is_inconclusive() {
        let s = diag_q(1);
        let (prec, succ, _) = splits(&s, 3);
        let r = check_dendriform(&prec, &succ, &Scope::new(TensorSpace::new(1, 3), 3, 1, 4)).unwrap();
        assert_eq!(r.status, Status::Inconclusive);
        assert_eq!(r.counts.inconclusive, 3);
        assert_eq!(r.counts.passed, 1);
    }

    #[test]
    fn sbrd_pipeline_and_commutativity() {
        let ctx = RbContext::mixable(dual(Scalar::int(-1)), Scalar::zero(), 6).unwrap();
        let (prec, succ) = ctx.dendriform();
        let space = ctx.space();
        assert!(check_dendriform(&prec, &succ, &Scope::new(space, 3, 1, 4))
            .unwrap()
            .passed());
        assert!(
            check_braided_dendriform(&prec, &succ, &*ctx.sigma, &Scope::new(space, 3, 1, 4))
                .unwrap()
                .passed()
        );
        let pairs = Scope::new(space, 2, 1, 4);
        assert!(check_commutative_dendriform(&prec, &succ, &*ctx.sigma, &pairs)
            .unwrap()
            .passed());
        assert!(check_braided_commutative(&*ctx.product, &*ctx.sigma, &pairs)
            .unwrap()
            .passed());
        assert!(check_involutive(&*ctx.sigma, &pairs).unwrap().passed());
        assert!(check_associative(&*ctx.product, &Scope::new(space, 3, 1, 5))
            .unwrap()
            .passed());
        let bad = FnProduct::new(space, |u: &Word, v: &Word| {
            Ok(LinComb::single(u.concat(v), Scalar::int(u.grade() as i64 + 1)))
        });
        assert!(!check_associative(&bad, &Scope::new(space, 3, 1, 3)).unwrap().passed());
    }
}
