use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tensor::{words_up_to, Tensor, TensorSpace, Word};

const MAX_WITNESSES: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl Status {
    /// Combines statuses: any failure wins, then any inconclusive entry.
    pub fn merge(self, other: Status) -> Status {
        match (self, other) {
            (Status::Fail, _) | (_, Status::Fail) => Status::Fail,
            (Status::Inconclusive, _) | (_, Status::Inconclusive) => Status::Inconclusive,
            _ => Status::Pass,
        }
    }
}

/// Seeded subsample of an exhaustive scope.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sample {
    pub seed: u64,
    pub count: usize,
}

/// The basis tuples a check ranges over: `arity` words over `dim` letters,
/// each of grade at least `min_grade`, with total grade at most `max_total`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Scope {
    pub dim: usize,
    pub cap: usize,
    pub arity: usize,
    pub min_grade: usize,
    pub max_total: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sample: Option<Sample>,
}

impl Scope {
    pub fn new(space: TensorSpace, arity: usize, min_grade: usize, max_total: usize) -> Self {
        Scope {
            dim: space.dim,
            cap: space.cap,
            arity,
            min_grade,
            max_total,
            sample: None,
        }
    }

    pub fn sampled(mut self, seed: u64, count: usize) -> Self {
        self.sample = Some(Sample { seed, count });
        self
    }

    /// All tuples in canonical order, or the seeded subsample of them.
    pub fn tuples(&self) -> Vec<Vec<Word>> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(self.arity);
        self.fill(&mut cur, 0, &mut out);
        match self.sample {
            Some(s) if s.count < out.len() => {
                let mut idx = lcg_choose(out.len(), s.count, s.seed);
                idx.sort_unstable();
                idx.into_iter().map(|i| out[i].clone()).collect()
            }
            _ => out,
        }
    }

    fn fill(&self, cur: &mut Vec<Word>, used: usize, out: &mut Vec<Vec<Word>>) {
        if cur.len() == self.arity {
            out.push(cur.clone());
            return;
        }
        let remaining = self.arity - cur.len() - 1;
        let reserve = used + remaining * self.min_grade;
        if reserve + self.min_grade > self.max_total {
            return;
        }
        for w in words_up_to(self.dim, self.min_grade, self.max_total - reserve) {
            let g = w.grade();
            cur.push(w);
            self.fill(cur, used + g, out);
            cur.pop();
        }
    }
}

/// Knuth's MMIX linear congruential generator.
#[derive(Clone, Copy, Debug)]
pub struct Lcg(u64);

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Lcg(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.0
    }

    pub fn below(&mut self, n: usize) -> usize {
        ((self.next_u64() >> 33) % n as u64) as usize
    }
}

/// `count` distinct indices below `n` by a partial Fisher-Yates shuffle.
fn lcg_choose(n: usize, count: usize, seed: u64) -> Vec<usize> {
    let mut rng = Lcg::new(seed);
    let mut idx: Vec<usize> = (0..n).collect();
    for i in 0..count {
        let j = i + rng.below(n - i);
        idx.swap(i, j);
    }
    idx.truncate(count);
    idx
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub identity: String,
    pub input: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub checked: usize,
    pub passed: usize,
    pub failed: usize,
    pub inconclusive: usize,
}

/// Outcome of an exhaustive identity check on a declared scope.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub status: Status,
    pub scope: Scope,
    pub witnesses: Vec<Witness>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub overflow: Vec<String>,
    pub counts: Counts,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    fn derive_status(&self) -> Status {
        if self.counts.failed > 0 {
            Status::Fail
        } else if self.counts.inconclusive > 0 {
            Status::Inconclusive
        } else {
            Status::Pass
        }
    }

    /// Concatenates several reports under one name, keeping the first scope.
    pub fn merge(name: impl Into<String>, parts: Vec<CheckReport>) -> Result<CheckReport> {
        let mut it = parts.into_iter();
        let mut out = it
            .next()
            .ok_or_else(|| Error::InvalidInput("no reports to merge".into()))?;
        out.name = name.into();
        for r in it {
            out.counts.checked += r.counts.checked;
            out.counts.passed += r.counts.passed;
            out.counts.failed += r.counts.failed;
            out.counts.inconclusive += r.counts.inconclusive;
            let room = MAX_WITNESSES.saturating_sub(out.witnesses.len());
            out.witnesses.extend(r.witnesses.into_iter().take(room));
            let room = MAX_WITNESSES.saturating_sub(out.overflow.len());
            out.overflow.extend(r.overflow.into_iter().take(room));
        }
        out.status = out.derive_status();
        Ok(out)
    }

    /// A report for a single yes/no fact with no tuple scope.
    pub fn fact(name: impl Into<String>, scope: Scope, witness: Option<Witness>) -> Self {
        let failed = witness.is_some() as usize;
        CheckReport {
            name: name.into(),
            status: if failed == 1 { Status::Fail } else { Status::Pass },
            scope,
            witnesses: witness.into_iter().collect(),
            overflow: Vec::new(),
            counts: Counts {
                checked: 1,
                passed: 1 - failed,
                failed,
                inconclusive: 0,
            },
        }
    }
}

/// One identity evaluated on one tuple: its name and both sides.
pub type Sides = (&'static str, Tensor, Tensor);

pub(crate) fn show(t: &Tensor) -> String {
    match t.to_element() {
        Ok(e) => e.to_string(),
        Err(_) => t.to_string(),
    }
}

pub(crate) fn show_input(tuple: &[Word]) -> String {
    tuple.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(" ⊗ ")
}

enum Outcome {
    Pass,
    Fail(Vec<Witness>),
    Overflow,
}

/// Evaluates `f` on every tuple of `scope` in parallel and merges the results
/// in canonical tuple order. Truncation overflow makes a tuple inconclusive;
/// any other error aborts the check.
pub fn run_check<F>(name: &str, scope: &Scope, f: F) -> Result<CheckReport>
where
    F: Fn(&[Word]) -> Result<Vec<Sides>> + Sync,
{
    run_labeled(name, scope, &scope.tuples(), |t| show_input(t), |t| f(t))
}

/// [`run_check`] over an explicit list of items with their own labels.
pub fn run_labeled<T, L, F>(name: &str, scope: &Scope, items: &[T], label: L, f: F) -> Result<CheckReport>
where
    T: Sync,
    L: Fn(&T) -> String + Sync,
    F: Fn(&T) -> Result<Vec<Sides>> + Sync,
{
    evaluate(name, scope, items, &label, |t| {
        let bad: Vec<Witness> = f(t)?
            .into_iter()
            .filter(|(_, l, r)| l != r)
            .map(|(id, l, r)| Witness {
                identity: id.to_string(),
                input: label(t),
                lhs: show(&l),
                rhs: show(&r),
            })
            .collect();
        Ok(if bad.is_empty() {
            Outcome::Pass
        } else {
            Outcome::Fail(bad)
        })
    })
}

/// Like [`run_labeled`] for checks that produce their own witness.
pub fn run_facts<T, L, F>(name: &str, scope: &Scope, items: &[T], label: L, f: F) -> Result<CheckReport>
where
    T: Sync,
    L: Fn(&T) -> String + Sync,
    F: Fn(&T) -> Result<Option<Witness>> + Sync,
{
    evaluate(name, scope, items, &label, |t| {
        Ok(f(t)?.map_or(Outcome::Pass, |w| Outcome::Fail(vec![w])))
    })
}

fn evaluate<T, L, F>(name: &str, scope: &Scope, items: &[T], label: &L, f: F) -> Result<CheckReport>
where
    T: Sync,
    L: Fn(&T) -> String + Sync,
    F: Fn(&T) -> Result<Outcome> + Sync,
{
    let outcomes: Vec<Result<Outcome>> = items
        .par_iter()
        .map(|t| match f(t) {
            Err(Error::TruncationOverflow { .. }) => Ok(Outcome::Overflow),
            other => other,
        })
        .collect();
    let mut report = CheckReport {
        name: name.to_string(),
        status: Status::Pass,
        scope: scope.clone(),
        witnesses: Vec::new(),
        overflow: Vec::new(),
        counts: Counts::default(),
    };
    for (t, outcome) in items.iter().zip(outcomes) {
        report.counts.checked += 1;
        match outcome? {
            Outcome::Pass => report.counts.passed += 1,
            Outcome::Fail(ws) => {
                report.counts.failed += 1;
                let room = MAX_WITNESSES.saturating_sub(report.witnesses.len());
                report.witnesses.extend(ws.into_iter().take(room));
            }
            Outcome::Overflow => {
                report.counts.inconclusive += 1;
                if report.overflow.len() < MAX_WITNESSES {
                    report.overflow.push(label(t));
                }
            }
        }
    }
    report.status = report.derive_status();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scope_enumeration() {
        let s = Scope::new(TensorSpace::new(2, 4), 2, 1, 3);
        let ts = s.tuples();
        // grade pairs (1,1),(1,2),(2,1): 4 + 8 + 8
        assert_eq!(ts.len(), 20);
        assert!(ts.windows(2).all(|p| p[0] < p[1]));
        let t3 = Scope::new(TensorSpace::new(1, 5), 3, 0, 2).tuples();
        assert_eq!(t3.len(), 10);
    }

    #[test]
    fn sampling_is_deterministic() {
        let s = Scope::new(TensorSpace::new(2, 5), 2, 1, 4).sampled(7, 10);
        let a = s.tuples();
        assert_eq!(a.len(), 10);
        assert_eq!(a, s.tuples());
        assert_ne!(a, Scope::new(TensorSpace::new(2, 5), 2, 1, 4).sampled(8, 10).tuples());
    }

    #[test]
    fn status_merge() {
        assert_eq!(Status::Pass.merge(Status::Inconclusive), Status::Inconclusive);
        assert_eq!(Status::Inconclusive.merge(Status::Fail), Status::Fail);
        assert_eq!(Status::Pass.merge(Status::Pass), Status::Pass);
    }
}
