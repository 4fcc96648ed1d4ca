//! Exact sparse Gaussian elimination over [`Scalar`] with pivots on the
//! largest key, so the earliest keys survive as quotient representatives.

use std::collections::BTreeMap;

use crate::scalar::Scalar;
use crate::tensor::LinComb;

/// Incrementally built echelon basis of a subspace.
#[derive(Clone, Debug)]
pub struct Echelon<K: Ord + Clone> {
    rows: BTreeMap<K, LinComb<K>>,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Echelon { rows: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.rows.keys()
    }

    pub fn is_pivot(&self, k: &K) -> bool {
        self.rows.contains_key(k)
    }

    pub fn rows(&self) -> impl Iterator<Item = &LinComb<K>> {
        self.rows.values()
    }

    /// Normal form of `v` modulo the subspace; supported on non-pivot keys.
    pub fn reduce(&self, v: &LinComb<K>) -> LinComb<K> {
        let mut v = v.clone();
        let mut bound: Option<K> = None;
        loop {
            let next = v
                .keys()
                .rev()
                .filter(|k| bound.as_ref().is_none_or(|b| *k < b))
                .find(|k| self.rows.contains_key(*k))
                .cloned();
            let Some(k) = next else { return v };
            let c = v.coeff(&k);
            v.add_scaled(&self.rows[&k], &-c);
            bound = Some(k);
        }
    }

    pub fn contains(&self, v: &LinComb<K>) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span; returns false when it was already contained.
    pub fn insert(&mut self, v: &LinComb<K>) -> bool {
        let r = self.reduce(v);
        let Some((pivot, lead)) = r.last() else { return false };
        let pivot = pivot.clone();
        let inv = lead.inv().expect("nonzero pivot");
        self.rows.insert(pivot, r.scale(&inv));
        true
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Aug<K, J> {
    Track(K),
    Image(J),
}

/// Basis of the kernel of the linear map sending each `source` key to `f(key)`.
pub fn kernel<K: Ord + Clone, J: Ord + Clone>(sources: &[K], mut f: impl FnMut(&K) -> LinComb<J>) -> Vec<LinComb<K>> {
    let mut ech: Echelon<Aug<K, J>> = Echelon::new();
    for k in sources {
        let mut row: LinComb<Aug<K, J>> = f(k).into_iter().map(|(j, c)| (Aug::Image(j), c)).collect();
        row.add_term(Aug::Track(k.clone()), Scalar::one());
        ech.insert(&row);
    }
    ech.rows()
        .filter(|r| matches!(r.last(), Some((Aug::Track(_), _))))
        .map(|r| {
            r.iter()
                .map(|(k, c)| match k {
                    Aug::Track(k) => (k.clone(), c.clone()),
                    Aug::Image(_) => unreachable!("pivot is the largest key"),
                })
                .collect()
        })
        .collect()
}

/// Rank of a family of vectors.
pub fn rank<K: Ord + Clone>(vectors: impl IntoIterator<Item = LinComb<K>>) -> usize {
    let mut ech = Echelon::new();
    for v in vectors {
        ech.insert(&v);
    }
    ech.rank()
}
