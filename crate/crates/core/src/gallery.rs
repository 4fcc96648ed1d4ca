//! Named braidings and algebras used by the suites, examples and tests.

use crate::algebra::{BraidedAlgebra, MuConstant};
use crate::braiding::{Braiding, SigmaEntry};
use crate::scalar::Scalar;

/// The classical flip.
pub fn flip(d: usize) -> Braiding {
    Braiding::flip(d)
}

/// `−τ`.
pub fn neg_flip(d: usize) -> Braiding {
    Braiding::scaled_flip(d, Scalar::int(-1)).expect("invertible")
}

/// `σ(e_i⊗e_j) = q·e_j⊗e_i` for all `i, j`; not symmetric.
pub fn diag_q(d: usize) -> Braiding {
    Braiding::diagonal(&vec![vec![Scalar::q(); d]; d]).expect("nonzero entries")
}

/// Diagonal with `q_{ij} = q` above the diagonal, `q⁻¹` below and
/// alternating signs `1, −1, 1, …` on it, so `q_{ij}q_{ji} = 1`.
pub fn symmetric_diag(d: usize) -> Braiding {
    let q = Scalar::q();
    let qi = q.inv().expect("q is invertible");
    let table: Vec<Vec<Scalar>> = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| match i.cmp(&j) {
                    std::cmp::Ordering::Less => q.clone(),
                    std::cmp::Ordering::Greater => qi.clone(),
                    std::cmp::Ordering::Equal => Scalar::int(if i % 2 == 0 { 1 } else { -1 }),
                })
                .collect()
        })
        .collect();
    Braiding::diagonal(&table).expect("nonzero entries")
}

/// `q·τ`, a braiding with `ker(σ+id) = 0`.
pub fn q_flip(d: usize) -> Braiding {
    Braiding::scaled_flip(d, Scalar::q()).expect("invertible")
}

/// `σ(e_i⊗e_j) = g(e_j)⊗g(e_i)` with `g` swapping `e1` and `e2`; symmetric
/// and not diagonal.
pub fn twisted_swap() -> Braiding {
    let (o, z) = (Scalar::one(), Scalar::zero());
    Braiding::twisted_flip(&[vec![z.clone(), o.clone()], vec![o, z]]).expect("invertible")
}

/// The flip on two letters with `σ(e1⊗e1)` rescaled to 2.
pub fn rescaled_flip() -> Braiding {
    let mut entries = Braiding::flip(2).entries();
    entries[0].c = Scalar::int(2);
    Braiding::explicit(2, &entries).expect("invertible")
}

/// An invertible operator violating the braid relation:
/// `σ(e1⊗e2) = e2⊗e1 + e1⊗e2`, flip elsewhere.
pub fn broken() -> Braiding {
    let mut entries = Braiding::flip(2).entries();
    entries.push(SigmaEntry {
        i: 0,
        j: 1,
        k: 0,
        l: 1,
        c: Scalar::one(),
    });
    Braiding::explicit(2, &entries).expect("invertible")
}

/// Gallery braidings of dimension `d`, by name.
pub fn braidings(d: usize) -> Vec<(&'static str, Braiding)> {
    vec![
        ("flip", flip(d)),
        ("diag-q", diag_q(d)),
        ("symmetric-diag", symmetric_diag(d)),
        ("neg-flip", neg_flip(d)),
    ]
}

/// Looks up a named braiding.
pub fn braiding(name: &str, d: usize) -> Option<Braiding> {
    Some(match name {
        "flip" => flip(d),
        "neg-flip" => neg_flip(d),
        "diag-q" => diag_q(d),
        "symmetric-diag" => symmetric_diag(d),
        "q-flip" => q_flip(d),
        "twisted-swap" => twisted_swap(),
        "rescaled-flip" => rescaled_flip(),
        "broken" => broken(),
        _ => return None,
    })
}

/// `𝕜[x]/(x²)` with `σ(x⊗x) = c·x⊗x`, unit last.
pub fn dual_numbers(c: Scalar) -> BraidedAlgebra {
    let line = Braiding::scaled_flip(1, c).expect("nonzero scalar");
    BraidedAlgebra::new(line, &[], None)
        .and_then(|a| a.augment())
        .expect("augmentation of a line")
}

/// Dual numbers over each one-dimensional gallery braiding.
pub fn dual_number_gallery() -> Vec<(&'static str, BraidedAlgebra)> {
    vec![
        ("flip", dual_numbers(Scalar::one())),
        ("diag-q", dual_numbers(Scalar::q())),
        ("neg-flip", dual_numbers(Scalar::int(-1))),
    ]
}

/// `𝕜[x]/(xⁿ)` on `x, …, x^{n−1}` with `σ(x^a⊗x^b) = c^{ab}·x^b⊗x^a`, unit last.
pub fn truncated_poly(n: usize, c: Scalar) -> BraidedAlgebra {
    let d = n - 1;
    let table: Vec<Vec<Scalar>> = (1..=d)
        .map(|a| {
            (1..=d)
                .map(|b| c.pow((a * b) as i32).expect("nonzero scalar"))
                .collect()
        })
        .collect();
    let sigma = Braiding::diagonal(&table).expect("nonzero entries");
    let mu: Vec<MuConstant> = itertools::iproduct!(1..=d, 1..=d)
        .filter(|(a, b)| a + b <= d)
        .map(|(a, b)| MuConstant {
            i: a - 1,
            j: b - 1,
            k: a + b - 1,
            c: Scalar::one(),
        })
        .collect();
    BraidedAlgebra::new(sigma, &mu, None)
        .and_then(|a| a.augment())
        .expect("augmentation")
}

/// Zero product on `d` letters with braiding `s`, augmented.
pub fn square_zero(s: Braiding) -> BraidedAlgebra {
    BraidedAlgebra::new(s, &[], None)
        .and_then(|a| a.augment())
        .expect("augmentation")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags() {
        for (name, s) in braidings(3) {
            assert!(s.check_ybe(), "{name}");
        }
        assert!(symmetric_diag(3).check_symmetric());
        assert!(!diag_q(2).check_symmetric());
        assert!(twisted_swap().check_ybe() && twisted_swap().check_symmetric());
        assert!(!broken().check_ybe());
        assert!(rescaled_flip().check_ybe());
    }

    #[test]
    fn algebras_are_braided() {
        for (name, a) in dual_number_gallery() {
            assert!(a.check_associativity() && a.check_braided_algebra().unwrap(), "{name}");
            assert!(a.check_commutative(), "{name}");
        }
        let p = truncated_poly(4, Scalar::q());
        assert!(p.check_associativity() && p.check_braided_algebra().unwrap());
        assert!(!p.check_commutative());
        assert!(truncated_poly(4, Scalar::one()).check_commutative());
    }
}
