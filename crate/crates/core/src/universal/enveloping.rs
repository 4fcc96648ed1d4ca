use std::collections::{BTreeMap, VecDeque};
use std::sync::Arc;

use super::extension::RbExtension;
use super::symmetric::{quantum_symmetric_basis, QuotientBasis};
use super::Sha0;
use crate::algebra::{BraidedAlgebra, MuEntry};
use crate::braiding::{Braiding, SigmaEntry};
use crate::error::{Error, Result};
use crate::linalg::Echelon;
use crate::products::{Bilinear, FnProduct, LinearOp, PairMap, QuantumMixable, RbOperator};
use crate::scalar::Scalar;
use crate::structures::{
    check_braided_dendriform, check_dendriform, run_labeled, CheckReport, RbContext, Scope, Sides,
};
use crate::tensor::{fmt_term, join_terms, LinComb, Tensor, TensorSpace, Word};

/// A finite-dimensional braided dendriform algebra `(D, ≺, ≻, σ)` given by
/// structure constants, with positive letter weights for truncation.
#[derive(Clone, Debug)]
pub struct DendriformData {
    sigma: Braiding,
    prec: Vec<LinComb<u8>>,
    succ: Vec<LinComb<u8>>,
    weights: Vec<usize>,
}

impl DendriformData {
    /// `prec` and `succ` are row-major `d×d` tables of products of letters.
    pub fn new(sigma: Braiding, prec: Vec<LinComb<u8>>, succ: Vec<LinComb<u8>>) -> Result<Self> {
        let d = sigma.dim();
        for table in [&prec, &succ] {
            if table.len() != d * d {
                return Err(Error::DimensionMismatch(format!(
                    "{} products for dimension {d}",
                    table.len()
                )));
            }
            if let Some(&k) = table.iter().flat_map(|v| v.keys()).find(|&&k| k as usize >= d) {
                return Err(Error::IndexOutOfRange(format!("letter {} in dimension {d}", k + 1)));
            }
        }
        Ok(DendriformData {
            sigma,
            prec,
            succ,
            weights: vec![1; d],
        })
    }

    /// All products zero.
    pub fn zero(sigma: Braiding) -> Self {
        let n = sigma.dim() * sigma.dim();
        DendriformData::new(sigma, vec![LinComb::new(); n], vec![LinComb::new(); n]).expect("zero tables fit")
    }

    /// The line with the flip; its only Zinbiel structure is zero.
    pub fn zinbiel_line() -> Self {
        DendriformData::zero(Braiding::flip(1))
    }

    /// Two letters `x, y` with `x≺x = x≻x = y`, weights 1 and 2, and the flip.
    pub fn zinbiel_plane() -> Self {
        let mut prec = vec![LinComb::new(); 4];
        prec[0] = LinComb::basis(1);
        DendriformData::new(Braiding::flip(2), prec.clone(), prec)
            .and_then(|d| d.with_weights(vec![1, 2]))
            .expect("valid datum")
    }

    pub fn with_weights(mut self, weights: Vec<usize>) -> Result<Self> {
        if weights.len() != self.dim() || weights.contains(&0) {
            return Err(Error::InvalidInput(
                "letter weights must be positive, one per letter".into(),
            ));
        }
        self.weights = weights;
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.sigma.dim()
    }

    pub fn sigma(&self) -> &Braiding {
        &self.sigma
    }

    pub fn weights(&self) -> &[usize] {
        &self.weights
    }

    pub fn prec(&self, a: usize, b: usize) -> &LinComb<u8> {
        &self.prec[a * self.dim() + b]
    }

    pub fn succ(&self, a: usize, b: usize) -> &LinComb<u8> {
        &self.succ[a * self.dim() + b]
    }

    fn word_weight(&self, w: &Word) -> usize {
        w.letters().iter().map(|&a| self.weights[a as usize]).sum()
    }

    /// `σ` must preserve letter weights so that symmetric letters have one.
    fn check_weighted_braiding(&self) -> Result<()> {
        for e in self.sigma.entries() {
            if self.weights[e.i] + self.weights[e.j] != self.weights[e.k] + self.weights[e.l] {
                return Err(Error::InvalidInput(format!(
                    "braiding entry ({},{}) mixes weights",
                    e.i + 1,
                    e.j + 1
                )));
            }
        }
        Ok(())
    }

    fn product(&self, succ: bool) -> impl Bilinear + '_ {
        let table = if succ { &self.succ } else { &self.prec };
        let d = self.dim();
        FnProduct::new(TensorSpace::new(d, 1), move |u: &Word, v: &Word| {
            if u.grade() != 1 || v.grade() != 1 {
                return Err(Error::TruncationOverflow {
                    grade: u.grade() + v.grade(),
                    cap: 1,
                });
            }
            let (a, b) = (u.letters()[0] as usize, v.letters()[0] as usize);
            Ok(BraidedAlgebra::as_words(&table[a * d + b]))
        })
    }

    /// The dendriform axioms and their braided compatibilities on letters.
    pub fn axioms(&self) -> Result<CheckReport> {
        let (prec, succ) = (self.product(false), self.product(true));
        let scope = Scope::new(TensorSpace::new(self.dim(), 1), 3, 1, 3);
        let den = check_dendriform(&prec, &succ, &scope)?;
        let braided = check_braided_dendriform(&prec, &succ, &self.sigma, &scope)?;
        CheckReport::merge("dendriform-datum", vec![den, braided])
    }
}

/// Wraps a product, operator or braiding on `ш⁰` and projects its values
/// along the ideal onto the chosen representatives.
struct Reduced<T> {
    inner: T,
    ideal: Arc<Echelon<Word>>,
}

impl<T: Bilinear> Bilinear for Reduced<T> {
    fn space(&self) -> TensorSpace {
        self.inner.space()
    }

    fn words(&self, u: &Word, v: &Word) -> Result<LinComb<Word>> {
        Ok(self.ideal.reduce(&self.inner.words(u, v)?))
    }
}

impl<T: LinearOp> LinearOp for Reduced<T> {
    fn word(&self, w: &Word) -> Result<LinComb<Word>> {
        Ok(self.ideal.reduce(&self.inner.word(w)?))
    }
}

impl<T: PairMap> PairMap for Reduced<T> {
    fn pair(&self, u: &Word, v: &Word) -> Result<LinComb<(Word, Word)>> {
        reduce_pairs(&self.ideal, &self.inner.pair(u, v)?)
    }
}

fn reduce_pairs(ideal: &Echelon<Word>, x: &LinComb<(Word, Word)>) -> Result<LinComb<(Word, Word)>> {
    let mut out = LinComb::new();
    for ((l, r), c) in x.iter() {
        let (rl, rr) = (
            ideal.reduce(&LinComb::basis(l.clone())),
            ideal.reduce(&LinComb::basis(r.clone())),
        );
        for (a, p) in rl.iter() {
            for (b, q) in rr.iter() {
                out.add_term((a.clone(), b.clone()), &(c * p) * q);
            }
        }
    }
    Ok(out)
}

fn fmt_combo(x: &LinComb<Word>) -> String {
    join_terms(x.iter().map(|(w, c)| fmt_term(c, &w.to_string())))
}

/// Where an element of the ideal came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Provenance {
    Generator,
    Closure,
}

/// The enveloping commutative Rota-Baxter algebra of weight zero of a
/// braided dendriform algebra `D` with symmetric braiding:
/// `U = ш⁰_σ(S(D)) / J`, where `S(D)` is the quantum symmetric algebra and
/// `J` is the Rota-Baxter ideal generated by `x≺y − x⋄P(y)` and
/// `x≻y − P(x)⋄y`, all truncated at total letter weight `cap`.
///
/// Letters of `ш⁰` are the representatives of `S(D)` in grades `1..`, in
/// canonical order, followed by the adjoined unit.
pub struct EnvelopingRb {
    data: DendriformData,
    cap: usize,
    sym: QuotientBasis,
    letters: Vec<Word>,
    index: BTreeMap<Word, u8>,
    algebra: BraidedAlgebra,
    sha: Sha0,
    space: TensorSpace,
    product: Arc<QuantumMixable>,
    op: Arc<RbOperator>,
    basis: Vec<Word>,
    ideal: Arc<Echelon<Word>>,
    elements: Vec<(Provenance, LinComb<Word>)>,
    reps: Vec<Vec<Word>>,
    truncation_limited: bool,
}

impl EnvelopingRb {
    pub fn new(data: DendriformData, cap: usize) -> Result<Self> {
        let sigma = data.sigma().clone();
        if !sigma.check_ybe() {
            return Err(Error::UnverifiedBraiding("enveloping Rota-Baxter algebra"));
        }
        if !sigma.check_symmetric() {
            return Err(Error::NonSymmetricBraiding);
        }
        data.check_weighted_braiding()?;
        let sym = quantum_symmetric_basis(&sigma, cap)?;
        let letters: Vec<Word> = (1..=cap)
            .flat_map(|n| sym.reps(n).iter().cloned())
            .filter(|w| data.word_weight(w) <= cap)
            .collect();
        if letters.len() >= u8::MAX as usize {
            return Err(Error::InvalidInput(format!(
                "{} symmetric letters exceed the alphabet",
                letters.len()
            )));
        }
        let index: BTreeMap<Word, u8> = letters.iter().enumerate().map(|(i, w)| (w.clone(), i as u8)).collect();
        let n = letters.len();
        let to_letters = |x: &LinComb<Word>| -> Result<LinComb<u8>> {
            sym.reduce(x)?
                .iter()
                .map(|(w, c)| {
                    index
                        .get(w)
                        .map(|&i| (i, c.clone()))
                        .ok_or_else(|| Error::InvalidInput(format!("{w} is not a symmetric letter")))
                })
                .collect()
        };

        let mut entries = Vec::new();
        for (i, si) in letters.iter().enumerate() {
            for (j, sj) in letters.iter().enumerate() {
                for ((l, r), c) in sigma.beta_pair(si, sj)?.iter() {
                    let (rl, rr) = (
                        to_letters(&LinComb::basis(l.clone()))?,
                        to_letters(&LinComb::basis(r.clone()))?,
                    );
                    for ((&k, p), (&m, q)) in itertools::iproduct!(rl.iter(), rr.iter()) {
                        entries.push(SigmaEntry {
                            i,
                            j,
                            k: k as usize,
                            l: m as usize,
                            c: &(c * p) * q,
                        });
                    }
                }
            }
        }
        let sigma_s = Braiding::explicit(n, &merge_entries(entries))?;
        let mut mu = Vec::with_capacity(n * n);
        for (si, sj) in itertools::iproduct!(&letters, &letters) {
            let w = si.concat(sj);
            let weight = data.word_weight(&w);
            mu.push(if weight > cap {
                MuEntry::Overflow { grade: weight, cap }
            } else {
                MuEntry::Value(to_letters(&LinComb::basis(w))?)
            });
        }
        let algebra = BraidedAlgebra::from_table(sigma_s, mu, None)?.augment()?;
        let unit = n as u8;
        let mut weights: Vec<usize> = letters.iter().map(|w| data.word_weight(w)).collect();
        weights.push(1);
        let sha = Sha0::new(unit, weights);
        let space = TensorSpace::new(n + 1, cap);
        let product = Arc::new(QuantumMixable::new(algebra.clone(), Scalar::zero(), space)?);
        let op = Arc::new(RbOperator::new(LinComb::basis(unit), space));
        let basis = sha.basis(cap);

        let mut u = EnvelopingRb {
            data,
            cap,
            sym,
            letters,
            index,
            algebra,
            sha,
            space,
            product,
            op,
            basis,
            ideal: Arc::new(Echelon::new()),
            elements: Vec::new(),
            reps: Vec::new(),
            truncation_limited: false,
        };
        u.close()?;
        Ok(u)
    }

    /// Generates `J` and closes it under `⋄` with basis words and under `P`.
    ///
    /// Weights are not additive under `⋄`, since the unit letter merges, so
    /// products are evaluated term by term and kept only when every term lies
    /// within the cap. A dropped product with a nonzero part within the cap
    /// marks the instance truncation-limited.
    fn close(&mut self) -> Result<()> {
        let mut queue: VecDeque<(Provenance, LinComb<Word>)> = VecDeque::new();
        for (a, b) in self
            .letter_pairs()
            .iter()
            .map(|t| (t[0].letters()[0] as usize, t[1].letters()[0] as usize))
        {
            let (x, y) = (self.rho(a)?, self.rho(b)?);
            for (table, rhs) in [
                (self.data.prec(a, b), self.product.combos(&x, &self.op.combo(&y)?)?),
                (self.data.succ(a, b), self.product.combos(&self.op.combo(&x)?, &y)?),
            ] {
                match self.rho_combo(table) {
                    Ok(lhs) => queue.push_back((Provenance::Generator, lhs.sub(&rhs))),
                    Err(e) if e.is_overflow() => self.truncation_limited = true,
                    Err(e) => return Err(e),
                }
            }
        }
        let mut ideal = Echelon::new();
        let mut limited = false;
        while let Some((prov, e)) = queue.pop_front() {
            if e.is_zero() || !ideal.insert(&e) {
                continue;
            }
            let low = self.min_weight(&e);
            let mut next = Vec::new();
            if low < self.cap {
                next.push(self.truncated(&e, &mut limited, |u| self.op.word(u))?);
            }
            for b in self.basis.iter().filter(|b| low + self.sha.weight(b) <= self.cap + 1) {
                next.push(self.truncated(&e, &mut limited, |u| self.product.words(u, b))?);
                next.push(self.truncated(&e, &mut limited, |u| self.product.words(b, u))?);
            }
            for x in next.into_iter().flatten() {
                queue.push_back((Provenance::Closure, x));
            }
            self.elements.push((prov, e));
        }
        self.truncation_limited |= limited;
        self.reps = vec![Vec::new(); self.cap + 1];
        for w in self.basis.iter().filter(|w| !ideal.is_pivot(w)) {
            self.reps[self.sha.weight(w)].push(w.clone());
        }
        self.ideal = Arc::new(ideal);
        Ok(())
    }

    /// `Σ c·f(u)` over the terms of `e`, or `None` when some term leaves the
    /// cap; flags the instance if the part within the cap is nonzero.
    fn truncated(
        &self,
        e: &LinComb<Word>,
        limited: &mut bool,
        f: impl Fn(&Word) -> Result<LinComb<Word>>,
    ) -> Result<Option<LinComb<Word>>> {
        let (mut kept, mut lost) = (LinComb::new(), false);
        for (u, c) in e.iter() {
            match f(u) {
                Ok(x) => {
                    for (w, d) in x.iter() {
                        if self.sha.weight(w) <= self.cap {
                            kept.add_term(w.clone(), c * d);
                        } else {
                            lost = true;
                        }
                    }
                }
                Err(err) if err.is_overflow() => lost = true,
                Err(err) => return Err(err),
            }
        }
        if !lost {
            return Ok(Some(kept));
        }
        *limited |= !kept.is_zero();
        Ok(None)
    }

    fn min_weight(&self, x: &LinComb<Word>) -> usize {
        x.keys().map(|w| self.sha.weight(w)).min().unwrap_or(0)
    }

    pub fn data(&self) -> &DendriformData {
        &self.data
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn space(&self) -> TensorSpace {
        self.space
    }

    /// The quantum symmetric algebra `S(D)`.
    pub fn symmetric(&self) -> &QuotientBasis {
        &self.sym
    }

    /// The `S(D)` representative behind letter `i`; the unit is past the end.
    pub fn letter(&self, i: usize) -> Option<&Word> {
        self.letters.get(i)
    }

    pub fn unit_letter(&self) -> u8 {
        self.sha.unit()
    }

    /// The augmented braided algebra `S(D)⁺ ⊕ 𝕜` the words are built from.
    pub fn algebra(&self) -> &BraidedAlgebra {
        &self.algebra
    }

    pub fn weight(&self, w: &Word) -> usize {
        self.sha.weight(w)
    }

    /// Basis of `ш⁰` through the weight cap.
    pub fn sha0_basis(&self) -> &[Word] {
        &self.basis
    }

    pub fn ideal(&self) -> &Echelon<Word> {
        &self.ideal
    }

    /// Representatives of weight `n`.
    pub fn reps(&self, n: usize) -> &[Word] {
        self.reps.get(n).map_or(&[], Vec::as_slice)
    }

    /// Quotient dimensions in weights `1..=cap`.
    pub fn dims(&self) -> Vec<usize> {
        self.reps.iter().skip(1).map(Vec::len).collect()
    }

    /// Whether some closure product overflowed the truncation.
    pub fn truncation_limited(&self) -> bool {
        self.truncation_limited
    }

    pub fn reduce(&self, x: &LinComb<Word>) -> LinComb<Word> {
        self.ideal.reduce(x)
    }

    pub fn mul(&self, x: &LinComb<Word>, y: &LinComb<Word>) -> Result<LinComb<Word>> {
        Ok(self.reduce(&self.product.combos(x, y)?))
    }

    pub fn p(&self, x: &LinComb<Word>) -> Result<LinComb<Word>> {
        Ok(self.reduce(&self.op.combo(x)?))
    }

    /// `ρ(e_a)`, the letter `a` of `D` as a grade-one symmetric letter.
    pub fn rho(&self, a: usize) -> Result<LinComb<Word>> {
        let w = Word::letter(a);
        self.index
            .get(&w)
            .map(|&i| LinComb::basis(Word::from_letters(&[i])))
            .ok_or(Error::TruncationOverflow {
                grade: self.data.weights.get(a).copied().unwrap_or(0),
                cap: self.cap,
            })
    }

    pub fn rho_combo(&self, x: &LinComb<u8>) -> Result<LinComb<Word>> {
        x.map_linear(|&a| self.rho(a as usize))
    }

    fn letter_pairs(&self) -> Vec<Vec<Word>> {
        let d = self.data.dim();
        itertools::iproduct!(0..d, 0..d)
            .filter(|&(a, b)| self.data.weights[a] + self.data.weights[b] <= self.cap)
            .map(|(a, b)| vec![Word::letter(a), Word::letter(b)])
            .collect()
    }

    fn pair_scope(&self) -> Scope {
        Scope::new(TensorSpace::new(self.data.dim(), 1), 2, 1, 2)
    }

    /// `ρ(x≺y) = ρ(x)⋄P(ρ(y))` and `ρ(x≻y) = P(ρ(x))⋄ρ(y)` in `U`.
    pub fn relations(&self) -> Result<CheckReport> {
        let label = |t: &Vec<Word>| format!("{} ⊗ {}", t[0], t[1]);
        run_labeled(
            "enveloping-relations",
            &self.pair_scope(),
            &self.letter_pairs(),
            label,
            |t| {
                let (a, b) = (t[0].letters()[0] as usize, t[1].letters()[0] as usize);
                let (x, y) = (self.rho(a)?, self.rho(b)?);
                let sides: Vec<Sides> = vec![
                    (
                        "prec",
                        self.one_slot(&self.reduce(&self.rho_combo(self.data.prec(a, b))?)),
                        self.one_slot(&self.mul(&x, &self.p(&y)?)?),
                    ),
                    (
                        "succ",
                        self.one_slot(&self.reduce(&self.rho_combo(self.data.succ(a, b))?)),
                        self.one_slot(&self.mul(&self.p(&x)?, &y)?),
                    ),
                ];
                Ok(sides)
            },
        )
    }

    fn one_slot(&self, x: &LinComb<Word>) -> Tensor {
        Tensor::from_words(self.space, x)
    }

    /// `(π⊗π)β(j⊗a) = 0 = (π⊗π)β(a⊗j)` for `j ∈ J` and basis words `a`.
    pub fn beta_stability(&self) -> Result<CheckReport> {
        let items: Vec<(usize, &Word)> = self
            .elements
            .iter()
            .enumerate()
            .flat_map(|(i, (_, e))| {
                let low = self.min_weight(e);
                self.basis
                    .iter()
                    .filter(move |b| low + self.sha.weight(b) <= self.cap)
                    .map(move |b| (i, b))
            })
            .collect();
        let label = |&(i, b): &(usize, &Word)| format!("{} ⊗ {b}", fmt_combo(&self.elements[i].1));
        let scope = Scope::new(self.space, 2, 1, self.cap);
        let sigma = self.algebra.sigma();
        run_labeled("enveloping-beta-stability", &scope, &items, label, |&(i, b)| {
            let j = &self.elements[i].1;
            let mut left = LinComb::new();
            let mut right = LinComb::new();
            for (w, c) in j.iter() {
                left.add_scaled(&sigma.beta_pair(w, b)?, c);
                right.add_scaled(&sigma.beta_pair(b, w)?, c);
            }
            let zero = Tensor::zero(self.space, 2);
            Ok(vec![
                (
                    "beta-right",
                    Tensor::from_pairs(self.space, &reduce_pairs(&self.ideal, &left)?),
                    zero.clone(),
                ),
                (
                    "beta-left",
                    Tensor::from_pairs(self.space, &reduce_pairs(&self.ideal, &right)?),
                    zero,
                ),
            ])
        })
    }

    /// `U` as a Rota-Baxter context whose operations reduce to representatives.
    pub fn as_context(&self) -> RbContext {
        RbContext {
            product: Arc::new(Reduced {
                inner: self.product.clone(),
                ideal: self.ideal.clone(),
            }),
            op: Arc::new(Reduced {
                inner: self.op.clone(),
                ideal: self.ideal.clone(),
            }),
            lambda: Scalar::zero(),
            sigma: Arc::new(Reduced {
                inner: self.algebra.sigma().clone(),
                ideal: self.ideal.clone(),
            }),
        }
    }
}

fn merge_entries(entries: Vec<SigmaEntry>) -> Vec<SigmaEntry> {
    let mut acc: BTreeMap<(usize, usize, usize, usize), Scalar> = BTreeMap::new();
    for e in entries {
        let slot = acc.entry((e.i, e.j, e.k, e.l)).or_insert_with(Scalar::zero);
        *slot = &*slot + &e.c;
    }
    acc.into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|((i, j, k, l), c)| SigmaEntry { i, j, k, l, c })
        .collect()
}

/// Checks the universal property of `u` against a map `f : D → R` into a
/// commutative Rota-Baxter algebra of weight zero, given by `f[a] = f(e_a)`.
///
/// The induced map sends a symmetric letter to the product of the images of
/// its letters and extends to `ш⁰` as the free Rota-Baxter extension. The
/// report covers `f̂(J) = 0`, `f̂ρ = f` and that `f` respects `≺` and `≻`.
pub fn verify_enveloping_universal(u: &EnvelopingRb, f: &[LinComb<Word>], target: &RbContext) -> Result<CheckReport> {
    let d = u.data.dim();
    if f.len() != d {
        return Err(Error::DimensionMismatch(format!(
            "{} images for dimension {d}",
            f.len()
        )));
    }
    let images = u
        .letters
        .iter()
        .map(|s| {
            let mut acc = f[s.letters()[0] as usize].clone();
            for &a in &s.letters()[1..] {
                acc = target.product.combos(&acc, &f[a as usize])?;
            }
            Ok(acc)
        })
        .collect::<Result<Vec<_>>>()?;
    let ext = RbExtension::nonunital_unchecked(u.algebra.clone(), Scalar::zero(), u.cap, target.clone(), images)?;
    let tspace = target.space();
    let one = |x: &LinComb<Word>| Tensor::from_words(tspace, x);

    let kernel_label = |&(p, ref e): &(Provenance, LinComb<Word>)| {
        let tag = if p == Provenance::Generator {
            "generator"
        } else {
            "closure"
        };
        format!("{tag}: {}", fmt_combo(e))
    };
    let kernel = run_labeled(
        "kernel",
        &Scope::new(u.space, 1, 1, u.cap),
        &u.elements,
        kernel_label,
        |(p, e)| {
            let id = if *p == Provenance::Generator {
                "kernel-generator"
            } else {
                "kernel-closure"
            };
            Ok(vec![(id, one(&ext.combo(e)?), Tensor::zero(tspace, 1))])
        },
    )?;

    let letters: Vec<usize> = (0..d).filter(|&a| u.data.weights[a] <= u.cap).collect();
    let fact_label = |&a: &usize| Word::letter(a).to_string();
    let factor = run_labeled("factorization", &u.pair_scope(), &letters, fact_label, |&a| {
        Ok(vec![("factorization", one(&ext.combo(&u.rho(a)?)?), one(&f[a]))])
    })?;

    let (tprec, tsucc) = target.dendriform();
    let image = |x: &LinComb<u8>| x.map_linear(|&k| Ok::<_, Error>(f[k as usize].clone()));
    let pair_label = |t: &Vec<Word>| format!("{} ⊗ {}", t[0], t[1]);
    let morph = run_labeled(
        "dendriform-morphism",
        &u.pair_scope(),
        &u.letter_pairs(),
        pair_label,
        |t| {
            let (a, b) = (t[0].letters()[0] as usize, t[1].letters()[0] as usize);
            Ok(vec![
                (
                    "morphism-prec",
                    one(&image(u.data.prec(a, b))?),
                    one(&tprec.combos(&f[a], &f[b])?),
                ),
                (
                    "morphism-succ",
                    one(&image(u.data.succ(a, b))?),
                    one(&tsucc.combos(&f[a], &f[b])?),
                ),
            ])
        },
    )?;
    CheckReport::merge("enveloping-universal", vec![kernel, factor, morph])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::BraidedAlgebra;

    fn line(cap: usize) -> EnvelopingRb {
        EnvelopingRb::new(DendriformData::zinbiel_line(), cap).unwrap()
    }

    fn w(letters: &[u8]) -> Word {
        Word::from_letters(letters)
    }

    #[test]
    fn line_at_cap_three() {
        // letters x, x², x³ and the unit 1̄
        let u = line(3);
        assert_eq!(u.sha0_basis().len(), 12);
        assert_eq!(u.ideal().rank(), 4);
        assert_eq!(u.dims(), vec![1, 2, 5]);
        for j in [w(&[0, 0]), w(&[1, 0]), w(&[3, 0, 0]), w(&[0, 0, 0])] {
            assert!(u.ideal().contains(&LinComb::basis(j.clone())), "{j}");
        }
        assert!(!u.truncation_limited());
        assert!(u.relations().unwrap().passed());
        assert!(u.beta_stability().unwrap().passed());
    }

    #[test]
    fn datum_axioms() {
        assert!(DendriformData::zinbiel_line().axioms().unwrap().passed());
        assert!(DendriformData::zinbiel_plane().axioms().unwrap().passed());
        let mut bad = vec![LinComb::new(); 1];
        bad[0] = LinComb::basis(0);
        let d = DendriformData::new(Braiding::flip(1), bad.clone(), bad).unwrap();
        assert!(!d.axioms().unwrap().passed());
    }

    #[test]
    fn plane_relation_identifies_square() {
        let u = EnvelopingRb::new(DendriformData::zinbiel_plane(), 4).unwrap();
        let x = u.rho(0).unwrap();
        let y = u.rho(1).unwrap();
        assert_eq!(u.mul(&x, &u.p(&x).unwrap()).unwrap(), y);
        assert!(u.relations().unwrap().passed());
        assert!(u.beta_stability().unwrap().passed());
    }

    #[test]
    fn rejects_non_symmetric_braiding() {
        let s = Braiding::scaled_flip(1, Scalar::q()).unwrap();
        assert!(matches!(
            EnvelopingRb::new(DendriformData::zero(s), 3),
            Err(Error::NonSymmetricBraiding)
        ));
    }

    #[test]
    fn universal_property_samples() {
        let u = line(3);
        let own = u.as_context();
        let rho = vec![u.rho(0).unwrap()];
        let r = verify_enveloping_universal(&u, &rho, &own).unwrap();
        assert!(r.passed(), "{r:?}");
        let zero = vec![LinComb::new()];
        assert!(verify_enveloping_universal(&u, &zero, &own).unwrap().passed());
        // x ↦ t in ш of the dual numbers is not a dendriform map
        let dual = BraidedAlgebra::new(Braiding::flip(1), &[], None)
            .unwrap()
            .augment()
            .unwrap();
        let target = RbContext::mixable(dual, Scalar::zero(), 3).unwrap();
        let r = verify_enveloping_universal(&u, &[LinComb::basis(Word::letter(0))], &target).unwrap();
        assert!(!r.passed());
        assert!(r.witnesses.iter().any(|w| w.identity == "kernel-generator"));
        assert!(r.witnesses.iter().any(|w| w.identity == "morphism-prec"));
    }
}
