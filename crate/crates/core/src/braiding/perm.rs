use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};

/// A permutation of `{1..n}`, stored zero-based.
///
/// Acting on tensors, the factor in position `p` moves to position `w(p)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n as u8).collect())
    }

    /// Builds from one-based images `w(1), …, w(n)`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in images {
            if i == 0 || i > n || std::mem::replace(&mut seen[i - 1], true) {
                return Err(Error::InvalidInput(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Permutation(images.iter().map(|&i| (i - 1) as u8).collect()))
    }

    /// The adjacent transposition `s_i` of `𝔖_n` (one-based `i`).
    pub fn transposition(i: usize, n: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange(format!("s_{i} in S_{n}")));
        }
        let mut p = Self::identity(n);
        p.0.swap(i - 1, i);
        Ok(p)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// One-based image `w(p)`.
    pub fn apply(&self, p: usize) -> usize {
        self.0[p - 1] as usize + 1
    }

    pub fn images(&self) -> Vec<usize> {
        self.0.iter().map(|&i| i as usize + 1).collect()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.0.len()];
        for (p, &w) in self.0.iter().enumerate() {
            inv[w as usize] = p as u8;
        }
        Permutation(inv)
    }

    /// `self ∘ other`, applying `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len(), "composing permutations of different size");
        Permutation(other.0.iter().map(|&p| self.0[p as usize]).collect())
    }

    /// Block product `u × v` acting on `{1..|u|}` and `{|u|+1..}`.
    pub fn cross(&self, other: &Permutation) -> Permutation {
        let shift = self.len() as u8;
        Permutation(
            self.0
                .iter()
                .copied()
                .chain(other.0.iter().map(|&p| p + shift))
                .collect(),
        )
    }

    pub fn length(&self) -> usize {
        self.0.iter().array_combinations().filter(|[a, b]| a > b).count()
    }

    /// A reduced word in application order: `T_w = σ_{i_l} ⋯ σ_{i_1}` is
    /// evaluated by applying `σ_{i_1}` first. Positions are one-based.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.0.clone();
        let mut out = Vec::with_capacity(self.length());
        while let Some(i) = (0..w.len().saturating_sub(1)).find(|&i| w[i] > w[i + 1]) {
            w.swap(i, i + 1);
            out.push(i + 1);
        }
        out
    }

    /// Every reduced word, each in application order.
    pub fn all_reduced_words(&self) -> Vec<Vec<usize>> {
        let descents: Vec<usize> = (0..self.len().saturating_sub(1))
            .filter(|&i| self.0[i] > self.0[i + 1])
            .collect();
        if descents.is_empty() {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for i in descents {
            let mut shorter = self.0.clone();
            shorter.swap(i, i + 1);
            for mut rest in Permutation(shorter).all_reduced_words() {
                rest.insert(0, i + 1);
                out.push(rest);
            }
        }
        out
    }

    fn increasing_on(&self, from: usize, to: usize) -> bool {
        self.0[from..to].windows(2).all(|p| p[0] < p[1])
    }

    /// Membership in the shuffle set `𝔖_{i,j}`.
    pub fn is_shuffle(&self, i: usize) -> bool {
        i <= self.len() && self.increasing_on(0, i) && self.increasing_on(i, self.len())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.images().iter().join(" "))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// `χ_{ij}`: moves the last `j` factors in front of the first `i`.
pub fn chi(i: usize, j: usize) -> Permutation {
    Permutation((0..i).map(|p| (p + j) as u8).chain((0..j).map(|p| p as u8)).collect())
}

/// Shuffle set `𝔖_{i,j}`: permutations increasing on `1..i` and `i+1..i+j`.
pub fn shuffle_set(i: usize, j: usize) -> Vec<Permutation> {
    let n = i + j;
    (0..n as u8)
        .combinations(i)
        .map(|first| {
            let rest = (0..n as u8).filter(|p| !first.contains(p));
            Permutation(first.iter().copied().chain(rest).collect())
        })
        .collect()
}

/// `τ_{kn}^{ij}` from the three-case formula.
pub fn tau_kn(k: usize, n: usize, i: usize, j: usize) -> Result<Permutation> {
    if k > n || i > k || j > n - k {
        return Err(Error::IndexOutOfRange(format!("tau with k={k}, n={n}, i={i}, j={j}")));
    }
    let images: Vec<usize> = (1..=n)
        .map(|p| {
            if p <= i || p > k + j {
                p
            } else if p <= k {
                p + j
            } else {
                p - k + i
            }
        })
        .collect();
    Permutation::from_images(&images)
}

/// Which refinement of the shuffle-set decomposition to test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShuffleRefinement {
    /// `𝔖_{k,n−k}` itself.
    Full,
    /// Shuffles with `w(1) = 1`.
    First,
    /// Shuffles with `w(k+1) = 1`.
    Second,
}

impl ShuffleRefinement {
    fn admits(self, w: &Permutation, k: usize) -> bool {
        match self {
            ShuffleRefinement::Full => true,
            ShuffleRefinement::First => !w.is_empty() && w.0[0] == 0,
            ShuffleRefinement::Second => k < w.len() && w.0[k] == 0,
        }
    }
}

/// Checks `𝔖^•_{k,n−k} = ⋃_{i+j=l} (𝔖^•_{ij} × 𝔖_{k−i,n−k−j}) τ_{kn}^{ij}`
/// as an exact, disjoint set equality.
pub fn shuffle_decomposition_holds(n: usize, k: usize, l: usize, which: ShuffleRefinement) -> bool {
    if k > n || l > n {
        return false;
    }
    let mut lhs: Vec<Permutation> = shuffle_set(k, n - k)
        .into_iter()
        .filter(|w| which.admits(w, k))
        .collect();
    let mut rhs = Vec::new();
    for i in 0..=k.min(l) {
        let j = l - i;
        if j > n - k {
            continue;
        }
        match which {
            ShuffleRefinement::First if i == 0 => continue,
            ShuffleRefinement::Second if j == 0 => continue,
            _ => {}
        }
        let tau = tau_kn(k, n, i, j).expect("indices in range");
        for u in shuffle_set(i, j).into_iter().filter(|u| which.admits(u, i)) {
            for v in shuffle_set(k - i, n - k - j) {
                rhs.push(u.cross(&v).compose(&tau));
            }
        }
    }
    let count = rhs.len();
    lhs.sort();
    rhs.sort();
    rhs.dedup();
    count == rhs.len() && lhs == rhs
}

/// `(n, k, l)` triples with `n ≤ max_n` where a decomposition fails.
pub fn shuffle_decomposition_failures(max_n: usize, which: ShuffleRefinement) -> Vec<(usize, usize, usize)> {
    (0..=max_n)
        .flat_map(|n| (0..=n).flat_map(move |k| (0..=n).map(move |l| (n, k, l))))
        .filter(|&(n, k, l)| !shuffle_decomposition_holds(n, k, l, which))
        .collect()
}
