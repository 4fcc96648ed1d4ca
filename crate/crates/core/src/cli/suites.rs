//! Named verification suites and their deterministic JSON reports.

use std::path::PathBuf;
use std::sync::Arc;

use itertools::{iproduct, Itertools};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::algebra::{AxiomWitness, BraidedAlgebra, MuConstant};
use crate::braiding::{shuffle_decomposition_holds, shuffle_set, Braiding, Permutation, ShuffleRefinement};
use crate::error::{Error, Result};
use crate::gallery;
use crate::io::InputJson;
use crate::products::{
    qshuffle_oracle, Bilinear, ClassicalMixable, Deconcat, Flip, LodaySplit, QShuffleSplit, QuantumMixable,
    QuantumQuasiShuffle, QuantumShuffle, QuasiShuffle, ReducedDeconcat, ScaledOp, Shuffle, Side,
};
use crate::scalar::Scalar;
use crate::structures::{
    check_bialgebra_compat, check_braided_commutative, check_braided_dendriform, check_commutative_dendriform,
    check_dendriform, check_dendriform_hopf, check_involutive, check_ronco_term_match, run_check, run_facts,
    CheckReport, Counts, RbContext, Scope, Status, Witness,
};
use crate::tensor::{words_of_grade, words_up_to, Element, LinComb, Tensor, TensorSpace, Word};
use crate::universal::{
    verify_enveloping_universal, DendriformContext, DendriformData, DendriformExtension, EnvelopingRb, RbExtension,
    Sha0,
};

/// The registered suites, one per verified statement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Ybe,
    BraidedAlgebra,
    Wrbr,
    Fbcr,
    Fbcr1,
    Sbrd,
    Bshd,
    Bcd,
    Fbcd,
    Bdha,
    Berba,
    BetaIdentities,
    ShuffleDecompositions,
    Specializations,
}

impl Suite {
    pub const ALL: [Suite; 14] = [
        Suite::Ybe,
        Suite::BraidedAlgebra,
        Suite::Wrbr,
        Suite::Fbcr,
        Suite::Fbcr1,
        Suite::Sbrd,
        Suite::Bshd,
        Suite::Bcd,
        Suite::Fbcd,
        Suite::Bdha,
        Suite::Berba,
        Suite::BetaIdentities,
        Suite::ShuffleDecompositions,
        Suite::Specializations,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Ybe => "ybe",
            Suite::BraidedAlgebra => "braided-algebra",
            Suite::Wrbr => "wrbr",
            Suite::Fbcr => "fbcr",
            Suite::Fbcr1 => "fbcr1",
            Suite::Sbrd => "sbrd",
            Suite::Bshd => "bshd",
            Suite::Bcd => "bcd",
            Suite::Fbcd => "fbcd",
            Suite::Bdha => "bdha",
            Suite::Berba => "berba",
            Suite::BetaIdentities => "beta-identities",
            Suite::ShuffleDecompositions => "shuffle-decompositions",
            Suite::Specializations => "specializations",
        }
    }

    /// The degree bound used when `--max-degree` is absent, or `None` for
    /// suites with no graded scope.
    pub fn default_degree(self) -> Option<usize> {
        match self {
            Suite::BraidedAlgebra => None,
            Suite::Fbcd => Some(3),
            Suite::Bcd | Suite::Bdha | Suite::BetaIdentities => Some(5),
            Suite::ShuffleDecompositions | Suite::Specializations => Some(6),
            _ => Some(4),
        }
    }
}

/// Everything that determines a suite run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub input: Option<PathBuf>,
    pub max_degree: Option<usize>,
    pub weight: Option<String>,
    pub seed: u64,
    pub sample: Option<usize>,
}

impl SuiteConfig {
    pub fn new(suite: Suite) -> Self {
        SuiteConfig {
            suite,
            input: None,
            max_degree: None,
            weight: None,
            seed: 0,
            sample: None,
        }
    }

    pub fn with_input(mut self, path: impl Into<PathBuf>) -> Self {
        self.input = Some(path.into());
        self
    }

    pub fn with_degree(mut self, n: usize) -> Self {
        self.max_degree = Some(n);
        self
    }

    pub fn with_weight(mut self, w: impl Into<String>) -> Self {
        self.weight = Some(w.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

/// The effective configuration as recorded in a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub input: Option<InputDigest>,
    pub max_degree: Option<usize>,
    pub weight: Option<String>,
    pub seed: u64,
    pub sample: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Expect {
    Pass,
    Fail,
}

/// One check of a suite. Negative controls expect the inner report to fail
/// and pass exactly when it does.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteCheck {
    pub instance: String,
    pub expect: Expect,
    pub verdict: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    pub report: CheckReport,
}

impl SuiteCheck {
    /// `instance/name`, unique within a report.
    pub fn key(&self) -> String {
        format!("{}/{}", self.instance, self.report.name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub tool: String,
    pub version: String,
    pub suite: Suite,
    pub config: ConfigEcho,
    pub status: Status,
    pub counts: Counts,
    pub checks: Vec<SuiteCheck>,
}

impl SuiteReport {
    /// 0 pass, 1 failure, 3 inconclusive.
    pub fn exit_code(&self) -> u8 {
        match self.status {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Inconclusive => 3,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn check(&self, key: &str) -> Option<&SuiteCheck> {
        self.checks.iter().find(|c| c.key() == key)
    }
}

/// Runs a suite. Errors are input errors: unreadable or malformed files and
/// inputs that violate a construction's preconditions.
pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    if cfg.max_degree == Some(0) {
        return Err(Error::InvalidInput("--max-degree must be at least 1".into()));
    }
    let (input, digest) = match &cfg.input {
        Some(path) => {
            let bytes = std::fs::read(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            let text = String::from_utf8(bytes.clone()).map_err(|e| Error::Parse {
                pos: e.utf8_error().valid_up_to(),
                msg: "input is not UTF-8".into(),
            })?;
            let digest = InputDigest {
                path: path.display().to_string(),
                sha256: hex::encode(Sha256::digest(&bytes)),
            };
            (Some(InputJson::parse(&text)?), Some(digest))
        }
        None => (None, None),
    };
    let degree = cfg.max_degree.or(cfg.suite.default_degree());
    let weights = match &cfg.weight {
        Some(w) => vec![Scalar::parse(w)?],
        None => vec![Scalar::zero(), Scalar::one(), Scalar::int(-1)],
    };
    let ctx = Ctx {
        input,
        degree: degree.unwrap_or(1),
        weights,
        seed: cfg.seed,
        sample: cfg.sample,
    };
    let mut out = Checks::default();
    match cfg.suite {
        Suite::Ybe => ybe(&ctx, &mut out)?,
        Suite::BraidedAlgebra => braided_algebra(&ctx, &mut out)?,
        Suite::Wrbr => wrbr(&ctx, &mut out)?,
        Suite::Fbcr => fbcr(&ctx, &mut out)?,
        Suite::Fbcr1 => fbcr1(&ctx, &mut out)?,
        Suite::Sbrd => sbrd(&ctx, &mut out)?,
        Suite::Bshd => bshd(&ctx, &mut out)?,
        Suite::Bcd => bcd(&ctx, &mut out)?,
        Suite::Fbcd => fbcd(&ctx, &mut out)?,
        Suite::Bdha => bdha(&ctx, &mut out)?,
        Suite::Berba => berba(&ctx, &mut out)?,
        Suite::BetaIdentities => beta_identities(&ctx, &mut out)?,
        Suite::ShuffleDecompositions => shuffle_decompositions(&ctx, &mut out)?,
        Suite::Specializations => specializations(&ctx, &mut out)?,
    }
    let checks = out.0;
    let mut counts = Counts::default();
    let mut status = Status::Pass;
    for c in &checks {
        counts.checked += 1;
        match c.verdict {
            Status::Pass => counts.passed += 1,
            Status::Fail => counts.failed += 1,
            Status::Inconclusive => counts.inconclusive += 1,
        }
        status = status.merge(c.verdict);
    }
    Ok(SuiteReport {
        tool: env!("CARGO_PKG_NAME").to_string(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        suite: cfg.suite,
        config: ConfigEcho {
            input: digest,
            max_degree: degree,
            weight: cfg.weight.clone(),
            seed: cfg.seed,
            sample: cfg.sample,
        },
        status,
        counts,
        checks,
    })
}

struct Ctx {
    input: Option<InputJson>,
    degree: usize,
    weights: Vec<Scalar>,
    seed: u64,
    sample: Option<usize>,
}

impl Ctx {
    fn scope(&self, space: TensorSpace, arity: usize, min: usize, max: usize) -> Scope {
        let s = Scope::new(space, arity, min, max);
        match self.sample {
            Some(n) => s.sampled(self.seed, n),
            None => s,
        }
    }

    fn gallery(&self) -> bool {
        self.input.is_none()
    }

    fn braidings(&self, dims: &[usize]) -> Result<Vec<(String, Braiding)>> {
        if let Some(j) = &self.input {
            return Ok(vec![("input".into(), j.braiding()?)]);
        }
        Ok(dims
            .iter()
            .flat_map(|&d| {
                gallery::braidings(d)
                    .into_iter()
                    .map(move |(n, s)| (format!("{n}/d={d}"), s))
            })
            .collect())
    }

    /// The input algebra, augmented when it has no unit, or the dual numbers
    /// over each one-dimensional gallery braiding.
    fn unital_algebras(&self) -> Result<Vec<(String, BraidedAlgebra)>> {
        if let Some(j) = &self.input {
            let a = j.algebra()?;
            let a = if a.unit().is_some() { a } else { a.augment()? };
            return Ok(vec![("input".into(), a)]);
        }
        Ok(gallery::dual_number_gallery()
            .into_iter()
            .map(|(n, a)| (format!("dual-numbers/{n}"), a))
            .collect())
    }
}

#[derive(Default)]
struct Checks(Vec<SuiteCheck>);

impl Checks {
    fn push(&mut self, instance: String, expect: Expect, report: CheckReport, detail: Option<String>) {
        let verdict = match (expect, report.status) {
            (Expect::Pass, s) => s,
            (Expect::Fail, Status::Fail) => Status::Pass,
            (Expect::Fail, Status::Pass) => Status::Fail,
            (Expect::Fail, Status::Inconclusive) => Status::Inconclusive,
        };
        self.0.push(SuiteCheck {
            instance,
            expect,
            verdict,
            detail,
            report,
        });
    }

    fn add(&mut self, instance: impl Into<String>, report: CheckReport) {
        self.push(instance.into(), Expect::Pass, report, None);
    }

    fn note(&mut self, instance: impl Into<String>, report: CheckReport, detail: String) {
        self.push(instance.into(), Expect::Pass, report, Some(detail));
    }

    fn negative(&mut self, instance: impl AsRef<str>, report: CheckReport) {
        self.push(format!("negative/{}", instance.as_ref()), Expect::Fail, report, None);
    }
}

fn show(x: &LinComb<Word>) -> String {
    match Element::from_terms(TensorSpace::new(256, 64), x.clone()) {
        Ok(e) => e.to_string(),
        Err(_) => format!("{} terms", x.len()),
    }
}

fn witness(identity: &str, input: impl ToString, lhs: String, rhs: String) -> Witness {
    Witness {
        identity: identity.to_string(),
        input: input.to_string(),
        lhs,
        rhs,
    }
}

fn axiom(identity: &str, w: AxiomWitness) -> Witness {
    witness(identity, w.input, w.lhs, w.rhs)
}

fn letters(d: usize) -> Vec<LinComb<Word>> {
    (0..d).map(|a| LinComb::basis(Word::letter(a))).collect()
}

fn lambda_tag(name: &str, l: &Scalar) -> String {
    format!("{name}/lambda={l}")
}

/// `φ̄∘j = φ` on every letter of the source.
fn restriction(
    name: &str,
    scope: Scope,
    f: impl Fn(&Word) -> Result<LinComb<Word>>,
    phi: &[LinComb<Word>],
) -> Result<CheckReport> {
    for (a, image) in phi.iter().enumerate() {
        let got = f(&Word::letter(a))?;
        if &got != image {
            let w = witness("restriction", Word::letter(a), show(&got), show(image));
            return Ok(CheckReport::fact(name, scope, Some(w)));
        }
    }
    Ok(CheckReport::fact(name, scope, None))
}

fn ybe(ctx: &Ctx, out: &mut Checks) -> Result<()> {
    let mut list = ctx.braidings(&[1, 2, 3])?;
    if ctx.gallery() {
        list.push(("q-flip/d=2".into(), gallery::q_flip(2)));
        list.push(("twisted-swap".into(), gallery::twisted_swap()));
        list.push(("rescaled-flip".into(), gallery::rescaled_flip()));
    }
    for (name, s) in &list {
        let fact = ybe_fact(s);
        let holds = fact.passed();
        out.add(name, fact);
        if holds {
            out.add(name, reduced_words(s, ctx)?);
        }
    }
    if ctx.gallery() {
        out.negative("broken", ybe_fact(&gallery::broken()));
    }
    Ok(())
}

fn ybe_fact(s: &Braiding) -> CheckReport {
    let w = s.ybe_witness().map(|(w, l, r)| witness("ybe", w, show(&l), show(&r)));
    CheckReport::fact("ybe", Scope::new(TensorSpace::new(s.dim(), 3), 1, 3, 3), w)
}

/// Every reduced word of every `w ∈ 𝔖_n` gives the same `T^σ_w`.
fn reduced_words(s: &Braiding, ctx: &Ctx) -> Result<CheckReport> {
    let n = ctx.degree;
    let perms: Vec<Permutation> = (1..=n)
        .permutations(n)
        .map(|p| Permutation::from_images(&p))
        .collect::<Result<_>>()?;
    let scope = Scope::new(TensorSpace::new(s.dim(), n), 1, n, n);
    run_facts(
        "reduced-word-independence",
        &scope,
        &perms,
        |p| p.to_string(),
        |p| {
            let reduced = p.all_reduced_words();
            for w in words_of_grade(s.dim(), n) {
                let first = s.lift_word_along(&reduced[0], &w);
                for r in &reduced[1..] {
                    let other = s.lift_word_along(r, &w);
                    if other != first {
                        let input = format!("{p} on {w} along {r:?}");
                        return Ok(Some(witness("reduced-word", input, show(&first), show(&other))));
                    }
                }
            }
            Ok(None)
        },
    )
}

fn braided_algebra(ctx: &Ctx, out: &mut Checks) -> Result<()> {
    let list = match &ctx.input {
        Some(j) => vec![("input".to_string(), j.algebra()?)],
        None => {
            let mut v: Vec<(String, BraidedAlgebra)> = gallery::dual_number_gallery()
                .into_iter()
                .map(|(n, a)| (format!("dual-numbers/{n}"), a))
                .collect();
            v.push(("truncated-poly/n=4/c=q".into(), gallery::truncated_poly(4, Scalar::q())));
            v.push((
                "truncated-poly/n=3/c=-1".into(),
                gallery::truncated_poly(3, Scalar::int(-1)),
            ));
            v
        }
    };
    for (name, a) in &list {
        for r in algebra_axioms(a)? {
            out.add(name, r);
        }
    }
    if ctx.gallery() {
        // x·x = x² with σ = q·flip on both letters: (ba1) picks up q against q²
        let mu = [MuConstant {
            i: 0,
            j: 0,
            k: 1,
            c: Scalar::one(),
        }];
        let bad = BraidedAlgebra::new(gallery::diag_q(2), &mu, None)?;
        let r = algebra_axioms(&bad)?
            .into_iter()
            .find(|r| r.name == "ba1")
            .expect("ba1 is always checked");
        out.negative("poly-diag-q", r);
    }
    Ok(())
}

fn algebra_axioms(a: &BraidedAlgebra) -> Result<Vec<CheckReport>> {
    let space = TensorSpace::new(a.dim(), 3);
    let mut v = vec![
        CheckReport::fact(
            "associativity",
            Scope::new(space, 3, 1, 3),
            a.associativity_witness().map(|w| axiom("associativity", w)),
        ),
        CheckReport::fact(
            "ba1",
            Scope::new(space, 3, 1, 3),
            a.braided_algebra_witness()?.map(|w| axiom("ba1", w)),
        ),
    ];
    if a.unit().is_some() {
        v.push(CheckReport::fact(
            "ba2",
            Scope::new(space, 1, 1, 1),
            a.unital_braided_witness()?.map(|w| axiom("ba2", w)),
        ));
    }
    Ok(v)
}

fn wrbr(ctx: &Ctx, out: &mut Checks) -> Result<()> {
    for (name, a) in ctx.unital_algebras()? {
        for l in &ctx.weights {
            let c = RbContext::mixable(a.clone(), l.clone(), ctx.degree + 1)?;
            let scope = ctx.scope(c.space(), 2, 1, ctx.degree);
            for r in c.strong_checks(&scope)? {
                out.add(lambda_tag(&name, l), r);
            }
        }
    }
    Ok(())
}

fn fbcr(ctx: &Ctx, out: &mut Checks) -> Result<()> {
    let ext_degree = ctx.degree.min(3);
    for (name, a) in ctx.unital_algebras()? {
        let applies = a.sigma().check_symmetric() && a.check_commutative();
        if !applies && !ctx.gallery() {
            return Err(Error::NonSymmetricBraiding);
        }
        for l in &ctx.weights {
            let inst = lambda_tag(&name, l);
            let c = RbContext::mixable(a.clone(), l.clone(), ctx.degree + 1)?;
            let scope = ctx.scope(c.space(), 2, 1, ctx.degree);
            let comm = check_braided_commutative(&*c.product, &*c.sigma, &scope)?;
            if !applies {
                out.negative(inst, comm);
                continue;
            }
            out.add(&inst, comm);
            out.add(&inst, check_involutive(&*c.sigma, &scope)?);
            let phi = letters(a.dim());
            let ext = RbExtension::new(a.clone(), l.clone(), ctx.degree + 1, c.clone(), phi.clone())?;
            let escope = ctx.scope(c.space(), 2, 1, ext_degree);
            out.add(format!("{inst}/identity"), ext.verify(&escope)?);
            out.add(
                format!("{inst}/identity"),
                restriction("restriction", escope, |w| ext.word(w), &phi)?,
            );
        }
    }
    if ctx.gallery() {
        // x ↦ e1 + e2 from the dual numbers into a square-zero plane
        for c in [Scalar::one(), Scalar::int(-1)] {
            let source = gallery::dual_numbers(c.clone());
            let target_alg = gallery::square_zero(Braiding::scaled_flip(2, c.clone())?);
            for l in &ctx.weights {
                let target = RbContext::mixable(target_alg.clone(), l.clone(), ctx.degree + 1)?;
                let x = LinComb::basis(Word::letter(0)).add(&LinComb::basis(Word::letter(1)));
                let phi = vec![x, LinComb::basis(Word::letter(2))];
                let ext = RbExtension::new(source.clone(), l.clone(), ctx.degree + 1, target, phi.clone())?;
                let inst = lambda_tag(&format!("dual-into-square-zero/c={c}"), l);
                let escope = ctx.scope(TensorSpace::new(2, ctx.degree + 1), 2, 1, ext_degree);
                out.add(&inst, ext.verify(&escope)?);
                out.add(&inst, restriction("restriction", escope, |w| ext.word(w), &phi)?);
            }
        }
    }
    Ok(())
}

fn fbcr1(ctx: &Ctx, out: &mut Checks) -> Result<()> {
    let list = match &ctx.input {
        Some(j) => vec![("input".to_string(), j.algebra()?)],
        None => {
            let poly = [MuConstant {
                i: 0,
                j: 0,
                k: 1,
                c: Scalar::one(),
            }];
            vec![
                (
                    "square-zero/flip/d=1".into(),
                    BraidedAlgebra::new(gallery::flip(1), &[], None)?,
                ),
                (
                    "square-zero/neg-flip/d=1".into(),
                    BraidedAlgebra::new(gallery::neg_flip(1), &[], None)?,
                ),
                (
                    "square-zero/flip/d=2".into(),
                    BraidedAlgebra::new(gallery::flip(2), &[], None)?,
                ),
                ("x-x2/flip".into(), BraidedAlgebra::new(gallery::flip(2), &poly, None)?),
            ]
        }
    };
    let ext_degree = ctx.degree.min(3);
    for (name, a) in &list {
        if !a.sigma().check_symmetric() {
            return Err(Error::NonSymmetricBraiding);
        }
        if !a.check_commutative() {
            return Err(Error::IncompatibleAlgebra(
                "the algebra is not braided commutative".into(),
            ));
        }
        let bar = a.augment()?;
        let sha = Sha0::new(bar.unit_letter().ok_or(Error::NoUnit)?, vec![1; bar.dim()]);
        for l in &ctx.weights {
            let inst = lambda_tag(name, l);
            let c = RbContext::mixable(bar.clone(), l.clone(), ctx.degree + 1)?;
            let scope = ctx.scope(c.space(), 2, 1, ctx.degree);
            let outside = |x: &LinComb<Word>, input: String| {
                x.keys()
                    .find(|w| !sha.contains(w))
                    .map(|w| witness("sha0-closure", input, w.to_string(), "0".into()))
            };
            let pairs: Vec<Vec<Word>> = scope
                .tuples()
                .into_iter()
                .filter(|t| t.iter().all(|w| sha.contains(w)))
                .collect();
            let label = |t: &Vec<Word>| format!("{} ⊗ {}", t[0], t[1]);
            out.add(
                &inst,
                run_facts("sha0-product-closure", &scope, &pairs, label, |t| {
                    Ok(outside(&c.product.words(&t[0], &t[1])?, label(t)))
                })?,
            );
            let words: Vec<Word> = sha.basis(ctx.degree);
            let wscope = Scope::new(c.space(), 1, 1, ctx.degree);
            out.add(
                &inst,
                run_facts(
                    "sha0-operator-closure",
                    &wscope,
                    &words,
                    |w| w.to_string(),
                    |w| Ok(outside(&c.op.word(w)?, w.to_string())),
                )?,
            );
            let phi = letters(a.dim());
            let ext = RbExtension::nonunital(a, l.clone(), ctx.degree + 1, c.clone(), phi.clone())?;
            let escope = ctx.scope(c.space(), 2, 1, ext_degree);
            out.add(format!("{inst}/inclusion"), ext.verify(&escope)?);
            out.add(
                format!("{inst}/inclusion"),
                restriction("restriction", escope, |w| ext.word(w), &phi)?,
            );
        }
    }
    Ok(())
}

/// `(≺_P, ≻_P)` checks on a context already known to be strongly braided.
fn dendriform_pipeline(ctx: &Ctx, out: &mut Checks, inst: &str, c: &RbContext, commutative: bool) -> Result<()> {
    let (p, s) = c.dendriform();
    let triples = ctx.scope(c.space(), 3, 1, ctx.degree);
    out.add(inst, check_dendriform(&p, &s, &triples)?);
    out.add(inst, check_braided_dendriform(&p, &s, &*c.sigma, &triples)?);
    if commutative && c.lambda.is_zero() {
        let pairs = ctx.scope(c.space(), 2, 1, ctx.degree);
        out.add(inst, check_commutative_dendriform(&p, &s, &*c.sigma, &pairs)?);
    }
    Ok(())
}

fn sbrd(ctx: &Ctx, out: &mut Checks) -> Result<()> {
    for (name, a) in ctx.unital_algebras()? {
        let commutative = a.sigma().check_symmetric() && a.check_commutative();
        for l in &ctx.weights {
            let base = RbContext::mixable(a.clone(), l.clone(), ctx.degree + 1)?;
            // P = −λ·id is a Rota-Baxter operator of weight λ on any algebra
            let scalar = RbContext {
                op: Arc::new(ScaledOp(-l)),
                ..base.clone()
            };
            for (tag, c) in [("P", base), ("minus-lambda-id", scalar)] {
                let inst = format!("{}/{tag}", lambda_tag(&name, l));
                let pairs = ctx.scope(c.space(), 2, 1, ctx.degree);
                let strong = CheckReport::merge("strongly-braided-rb", c.strong_checks(&pairs)?)?;
                let verified = strong.passed();
                out.add(&inst, strong);
                if verified {
                    dendriform_pipeline(ctx, out, &inst, &c, commutative)?;
                }
            }
        }
    }
    Ok(())
}

fn bshd(ctx: &Ctx, out: &mut Checks) -> Result<()> {
    let mut list = ctx.unital_algebras()?;
    if ctx.gallery() {
        for (tag, c) in [("1", Scalar::one()), ("-1", Scalar::int(-1)), ("q", Scalar::q())] {
            list.push((format!("truncated-poly/n=3/c={tag}"), gallery::truncated_poly(3, c)));
        }
    }
    for (name, a) in list {
        let commutative = a.sigma().check_symmetric() && a.check_commutative();
        for l in &ctx.weights {
            let c = RbContext::mixable(a.clone(), l.clone(), ctx.degree + 1)?;
            dendriform_pipeline(ctx, out, &lambda_tag(&name, l), &c, commutative)?;
        }
    }
    Ok(())
}

fn bcd(ctx: &Ctx, out: &mut Checks) -> Result<()> {
    let n = ctx.degree;
    for (name, s) in ctx.braidings(&[1, 2, 3])? {
        let d = DendriformContext::quantum_shuffle(s.clone(), n)?;
        let space = d.space();
        out.add(&name, check_dendriform(&*d.prec, &*d.succ, &ctx.scope(space, 3, 1, n))?);
        out.add(
            &name,
            check_braided_dendriform(&*d.prec, &*d.succ, &s, &ctx.scope(space, 3, 1, n.min(4)))?,
        );
        if s.check_symmetric() {
            out.add(
                &name,
                check_commutative_dendriform(&*d.prec, &*d.succ, &s, &ctx.scope(space, 2, 1, n))?,
            );
        }
    }
    if ctx.gallery() {
        for dim in [1, 2] {
            let space = TensorSpace::new(dim, n);
            let sh = Arc::new(Shuffle::new(space));
            let (lp, ls) = (
                LodaySplit::new(sh.clone(), Side::Left),
                LodaySplit::new(sh, Side::Right),
            );
            let inst = format!("loday/d={dim}");
            out.add(&inst, check_dendriform(&lp, &ls, &ctx.scope(space, 3, 1, n))?);
            let flip = DendriformContext::quantum_shuffle(Braiding::flip(dim), n)?;
            let agree = run_check("loday-flip-agreement", &ctx.scope(space, 2, 1, n), |t| {
                let mut v = Vec::with_capacity(2);
                for (id, a, b) in [("prec", &lp as &dyn Bilinear, &*flip.prec), ("succ", &ls, &*flip.succ)] {
                    let (x, y) = (a.words(&t[0], &t[1])?, b.words(&t[0], &t[1])?);
                    v.push((id, Tensor::from_words(space, &x), Tensor::from_words(space, &y)));
                }
                Ok(v)
            })?;
            out.add(&inst, agree);
        }
        // ≺ from one braiding and ≻ from another
        let m = n.min(4);
        let space = TensorSpace::new(2, m);
        let twisted = Arc::new(QuantumShuffle::new(gallery::twisted_swap(), space)?);
        let plain = Arc::new(QuantumShuffle::new(Braiding::flip(2), space)?);
        let (p, s) = (
            QShuffleSplit::new(twisted, Side::Left),
            QShuffleSplit::new(plain, Side::Right),
        );
        out.negative("cross-wired", check_dendriform(&p, &s, &ctx.scope(space, 3, 1, m))?);
    }
    Ok(())
}

fn fbcd(ctx: &Ctx, out: &mut Checks) -> Result<()> {
    let n = ctx.degree;
    for (name, s) in ctx.braidings(&[1, 2])? {
        let d = s.dim();
        let target = DendriformContext::quantum_shuffle(s.clone(), n)?;
        let psi = letters(d);
        let ext = DendriformExtension::new(s.clone(), n, target, psi.clone())?;
        let space = TensorSpace::new(d, n);
        let inst = format!("{name}/identity");
        out.add(&inst, ext.verify(&ctx.scope(space, 2, 1, n))?);
        out.add(
            &inst,
            restriction("restriction", Scope::new(space, 1, 1, 1), |w| ext.word(w), &psi)?,
        );
        let words = words_up_to(d, 1, n);
        out.add(
            &inst,
            run_facts(
                "identity-extension",
                &Scope::new(space, 1, 1, n),
                &words,
                |w| w.to_string(),
                |w| {
                    let got = ext.word(w)?;
                    let want = LinComb::basis(w.clone());
                    Ok((got != want).then(|| witness("identity-extension", w, show(&got), show(&want))))
                },
            )?,
        );
    }
    if ctx.gallery() {
        let space = TensorSpace::new(1, n);
        // the line into the plane along the diagonal
        let target = DendriformContext::quantum_shuffle(Braiding::flip(2), n)?;
        let psi = vec![LinComb::basis(Word::letter(0)).add(&LinComb::basis(Word::letter(1)))];
        let ext = DendriformExtension::new(Braiding::flip(1), n, target, psi.clone())?;
        out.add("line-into-plane", ext.verify(&ctx.scope(space, 2, 1, n))?);
        out.add(
            "line-into-plane",
            restriction("restriction", Scope::new(space, 1, 1, 1), |w| ext.word(w), &psi)?,
        );
        // the line into ш of the dual numbers with (≺_P, ≻_P)
        let rb = RbContext::mixable(gallery::dual_numbers(Scalar::one()), Scalar::zero(), n + 1)?;
        let (p, s) = rb.dendriform();
        let target = DendriformContext {
            prec: Arc::new(p),
            succ: Arc::new(s),
            sigma: rb.sigma.clone(),
        };
        let psi = letters(1);
        let ext = DendriformExtension::new(Braiding::flip(1), n, target, psi.clone())?;
        out.add("line-into-sha", ext.verify(&ctx.scope(space, 2, 1, n))?);
        out.add(
            "line-into-sha",
            restriction("restriction", Scope::new(space, 1, 1, 1), |w| ext.word(w), &psi)?,
        );
    }
    Ok(())
}

fn bdha(ctx: &Ctx, out: &mut Checks) -> Result<()> {
    let n = ctx.degree;
    for (name, s) in ctx.braidings(&[1, 2, 3])? {
        let space = TensorSpace::new(s.dim(), n);
        let qs = Arc::new(QuantumShuffle::new(s.clone(), space)?);
        let (p, su) = (
            QShuffleSplit::new(qs.clone(), Side::Left),
            QShuffleSplit::new(qs.clone(), Side::Right),
        );
        let pairs = ctx.scope(space, 2, 1, n);
        out.add(&name, check_dendriform_hopf(&p, &su, &ReducedDeconcat, &s, &pairs)?);
        if s == Braiding::flip(s.dim()) {
            out.add(&name, check_ronco_term_match(&p, &su, &ReducedDeconcat, &Flip, &pairs)?);
        }
        out.add(
            &name,
            check_bialgebra_compat(&*qs, &Deconcat, &s, &ctx.scope(space, 2, 0, n.min(4)))?,
        );
    }
    Ok(())
}

fn berba(ctx: &Ctx, out: &mut Checks) -> Result<()> {
    let list = match &ctx.input {
        Some(j) => vec![("input".to_string(), j.dendriform()?)],
        None => vec![
            ("zinbiel-line".to_string(), DendriformData::zinbiel_line()),
            ("zinbiel-plane".to_string(), DendriformData::zinbiel_plane()),
        ],
    };
    let top = ctx.degree;
    for (name, data) in list {
        out.add(&name, data.axioms()?);
        let mut previous: Option<(usize, Vec<usize>)> = None;
        for cap in top.min(3)..=top {
            let u = EnvelopingRb::new(data.clone(), cap)?;
            let inst = format!("{name}/cap={cap}");
            let dims = u.dims();
            let detail = format!(
                "dims {dims:?}, ideal rank {}, truncation-limited {}",
                u.ideal().rank(),
                u.truncation_limited()
            );
            out.note(&inst, u.relations()?, detail);
            out.add(&inst, u.beta_stability()?);
            let own = u.as_context();
            let rho = (0..data.dim()).map(|a| u.rho(a)).collect::<Result<Vec<_>>>()?;
            out.add(format!("{inst}/f=rho"), verify_enveloping_universal(&u, &rho, &own)?);
            let zero = vec![LinComb::new(); data.dim()];
            out.add(format!("{inst}/f=0"), verify_enveloping_universal(&u, &zero, &own)?);
            if let Some((prev_cap, prev)) = &previous {
                let same = dims[..prev.len()] == prev[..];
                let w = (!same).then(|| {
                    witness(
                        "dims-stable",
                        format!("cap {prev_cap} against cap {cap}"),
                        format!("{prev:?}"),
                        format!("{:?}", &dims[..prev.len()]),
                    )
                });
                out.add(
                    &inst,
                    CheckReport::fact("dims-stable", Scope::new(u.space(), 1, 1, cap), w),
                );
            }
            if ctx.gallery() && data.dim() == 1 {
                // x ↦ t in ш of the dual numbers does not respect ≺
                let target = RbContext::mixable(gallery::dual_numbers(Scalar::one()), Scalar::zero(), cap)?;
                let f = letters(1);
                out.negative(format!("{inst}/f=t"), verify_enveloping_universal(&u, &f, &target)?);
            }
            previous = Some((cap, dims));
        }
    }
    Ok(())
}

fn beta_identities(ctx: &Ctx, out: &mut Checks) -> Result<()> {
    let n = ctx.degree;
    let triples: Vec<(usize, usize, usize)> = iproduct!(0..=n, 0..=n, 0..=n)
        .filter(|(m, k, l)| m + k + l <= n)
        .collect();
    for (name, s) in ctx.braidings(&[1, 2, 3])? {
        let scope = Scope::new(TensorSpace::new(s.dim(), n), 3, 0, n);
        let label = |&(m, k, l): &(usize, usize, usize)| format!("m={m} n={k} k={l}");
        out.add(
            &name,
            run_facts("beta-identities", &scope, &triples, label, |&(m, k, l)| {
                Ok(s.beta_identity_witness(m, k, l, n)?
                    .map(|(id, w, a, b)| witness(id, w, show(&a), show(&b))))
            })?,
        );
    }
    Ok(())
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn shuffle_decompositions(ctx: &Ctx, out: &mut Checks) -> Result<()> {
    let n = ctx.degree;
    let scope = Scope::new(TensorSpace::new(1, n + 2), 2, 0, n + 2);
    let pairs: Vec<(usize, usize)> = iproduct!(0..=n + 2, 0..=n + 2)
        .filter(|(i, j)| i + j <= n + 2)
        .collect();
    out.add(
        "shuffle-sets",
        run_facts(
            "cardinality",
            &scope,
            &pairs,
            |(i, j)| format!("i={i} j={j}"),
            |&(i, j)| {
                let set = shuffle_set(i, j);
                let want = binomial(i + j, i);
                let ok = set.len() == want && set.iter().all(|w| w.is_shuffle(i));
                Ok((!ok).then(|| {
                    witness(
                        "cardinality",
                        format!("i={i} j={j}"),
                        set.len().to_string(),
                        want.to_string(),
                    )
                }))
            },
        )?,
    );
    let scope = Scope::new(TensorSpace::new(1, n), 3, 0, n);
    let all: Vec<(usize, usize, usize)> = (0..=n)
        .flat_map(|m| iproduct!(0..=m, 0..=m).map(move |(k, l)| (m, k, l)))
        .collect();
    for (tag, which) in [
        ("full", ShuffleRefinement::Full),
        ("first", ShuffleRefinement::First),
        ("second", ShuffleRefinement::Second),
    ] {
        let check = |name: &str, items: &[(usize, usize, usize)]| {
            run_facts(
                name,
                &scope,
                items,
                |(m, k, l)| format!("n={m} k={k} l={l}"),
                |&(m, k, l)| {
                    let ok = shuffle_decomposition_holds(m, k, l, which);
                    Ok((!ok).then(|| witness(name, format!("n={m} k={k} l={l}"), "unequal".into(), "equal".into())))
                },
            )
        };
        out.add("all-k-l", check(&format!("decomposition-{tag}"), &all)?);
        if which != ShuffleRefinement::Full {
            let proper: Vec<_> = all
                .iter()
                .copied()
                .filter(|&(m, k, l)| non_degenerate(which, m, k, l))
                .collect();
            out.add("non-degenerate", check(&format!("decomposition-{tag}"), &proper)?);
        }
    }
    Ok(())
}

/// Triples where the refined shuffle set and every refined block on the
/// right are nonempty.
fn non_degenerate(which: ShuffleRefinement, n: usize, k: usize, l: usize) -> bool {
    match which {
        ShuffleRefinement::Full => true,
        ShuffleRefinement::First => k >= 1 && l >= 1,
        ShuffleRefinement::Second => k < n && l >= 1,
    }
}

fn specializations(ctx: &Ctx, out: &mut Checks) -> Result<()> {
    let n = ctx.degree;
    let small = n.min(4);
    let braidings = match &ctx.input {
        Some(j) if j.mu.is_some() || j.unit.is_some() => Vec::new(),
        _ => ctx.braidings(&[1, 2, 3])?,
    };
    for (name, s) in braidings {
        let space = TensorSpace::new(s.dim(), n);
        let qs = QuantumShuffle::new(s.clone(), space)?;
        out.add(
            &name,
            run_check("oracle-equivalence", &ctx.scope(space, 2, 0, n), |t| {
                let (x, y) = (
                    Element::basis(space, t[0].clone())?,
                    Element::basis(space, t[1].clone())?,
                );
                let rec = qs.apply(&x, &y)?;
                let oracle = qshuffle_oracle(&s, &x, &y)?;
                Ok(vec![(
                    "oracle",
                    Tensor::from_element(&rec),
                    Tensor::from_element(&oracle),
                )])
            })?,
        );
    }
    let algebras = match &ctx.input {
        Some(j) if j.mu.is_none() && j.unit.is_none() => Vec::new(),
        _ => ctx.unital_algebras()?,
    };
    for (name, a) in algebras {
        let space = TensorSpace::new(a.dim(), small + 1);
        let qqs = QuantumQuasiShuffle::new(a.clone(), Scalar::zero(), space)?;
        let qs = QuantumShuffle::new(a.sigma().clone(), space)?;
        out.add(
            &name,
            equal_products("qqs-lambda-zero", &ctx.scope(space, 2, 0, small), &qqs, &qs)?,
        );
        if a.sigma() != &Braiding::flip(a.dim()) {
            continue;
        }
        for l in &ctx.weights {
            let inst = lambda_tag(&name, l);
            let quantum = QuantumMixable::new(a.clone(), l.clone(), space)?;
            let classical = ClassicalMixable::new(a.clone(), l.clone(), space)?;
            out.add(
                &inst,
                equal_products("mixable-flip", &ctx.scope(space, 2, 1, small), &quantum, &classical)?,
            );
            let qq = QuantumQuasiShuffle::new(a.clone(), l.clone(), space)?;
            let cq = QuasiShuffle::new(a.clone(), l.clone(), space)?;
            out.add(
                &inst,
                equal_products("quasi-shuffle-flip", &ctx.scope(space, 2, 0, small), &qq, &cq)?,
            );
        }
    }
    Ok(())
}

fn equal_products(name: &'static str, scope: &Scope, a: &dyn Bilinear, b: &dyn Bilinear) -> Result<CheckReport> {
    let space = a.space();
    run_check(name, scope, |t| {
        let (x, y) = (a.words(&t[0], &t[1])?, b.words(&t[0], &t[1])?);
        Ok(vec![(
            name,
            Tensor::from_words(space, &x),
            Tensor::from_words(space, &y),
        )])
    })
}
