use std::sync::Arc;

use proptest::prelude::*;

use braidalg::braiding::Braiding;
use braidalg::io::{braiding_json, to_pretty, InputJson};
use braidalg::products::{Bilinear, PairMap, QShuffleSplit, QuantumShuffle, Shuffle, Side};
use braidalg::{Element, LinComb, Scalar, TensorSpace, Word};

const CAP: usize = 6;

fn rational() -> impl Strategy<Value = Scalar> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| Scalar::ratio(n, d))
}

fn nonzero() -> impl Strategy<Value = Scalar> {
    rational().prop_filter("nonzero", |s| !s.is_zero())
}

/// Rational functions `a q^k + b` over ℚ(q).
fn scalar() -> impl Strategy<Value = Scalar> {
    (rational(), 0i32..3, rational()).prop_map(|(a, k, b)| a * Scalar::q().pow(k).unwrap() + b)
}

fn word(dim: usize, max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..dim as u8, 0..=max).prop_map(|l| Word::from_letters(&l))
}

fn diagonal(dim: usize) -> impl Strategy<Value = (Vec<Vec<Scalar>>, Braiding)> {
    prop::collection::vec(prop::collection::vec(nonzero(), dim), dim).prop_map(|t| {
        let s = Braiding::diagonal(&t).unwrap();
        (t, s)
    })
}

/// Diagonal tables with `q_ij q_ji = 1`.
fn symmetric_diagonal(dim: usize) -> impl Strategy<Value = Braiding> {
    prop::collection::vec(nonzero(), dim * dim).prop_map(move |v| {
        let mut t = vec![vec![Scalar::one(); dim]; dim];
        for i in 0..dim {
            t[i][i] = if v[i * dim + i].is_negative_leading() {
                Scalar::int(-1)
            } else {
                Scalar::one()
            };
            for j in i + 1..dim {
                t[i][j] = v[i * dim + j].clone();
                t[j][i] = v[i * dim + j].inv().unwrap();
            }
        }
        Braiding::diagonal(&t).unwrap()
    })
}

fn basis(space: TensorSpace, w: &Word) -> Element {
    Element::basis(space, w.clone()).unwrap()
}

proptest! {
    #[test]
    fn scalar_text_roundtrip(a in scalar()) {
        prop_assert_eq!(Scalar::parse(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn scalar_field_laws(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn word_text_roundtrip(w in word(3, 6)) {
        prop_assert_eq!(Word::parse(&w.to_string()).unwrap(), w);
    }

    #[test]
    fn diagonal_braidings_satisfy_ybe((_, s) in diagonal(2)) {
        prop_assert!(s.check_ybe());
    }

    #[test]
    fn quantum_shuffle_is_associative((_, s) in diagonal(2), u in word(2, 2), v in word(2, 2), w in word(2, 2)) {
        let space = TensorSpace::new(2, CAP);
        let qs = QuantumShuffle::new(s, space).unwrap();
        let (x, y, z) = (basis(space, &u), basis(space, &v), basis(space, &w));
        let left = qs.apply(&qs.apply(&x, &y).unwrap(), &z).unwrap();
        let right = qs.apply(&x, &qs.apply(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn empty_word_is_the_unit((_, s) in diagonal(2), u in word(2, 4)) {
        let space = TensorSpace::new(2, CAP);
        let qs = QuantumShuffle::new(s, space).unwrap();
        let (one, x) = (basis(space, &Word::empty()), basis(space, &u));
        prop_assert_eq!(qs.apply(&one, &x).unwrap(), x.clone());
        prop_assert_eq!(qs.apply(&x, &one).unwrap(), x);
    }

    #[test]
    fn split_halves_sum_to_shuffle((_, s) in diagonal(2), u in word(2, 3), v in word(2, 3)) {
        prop_assume!(!u.is_empty() && !v.is_empty());
        let space = TensorSpace::new(2, CAP);
        let qs = Arc::new(QuantumShuffle::new(s, space).unwrap());
        let prec = QShuffleSplit::new(qs.clone(), Side::Left);
        let succ = QShuffleSplit::new(qs.clone(), Side::Right);
        let sum = prec.words(&u, &v).unwrap().add(&succ.words(&u, &v).unwrap());
        prop_assert_eq!(sum, qs.words(&u, &v).unwrap());
    }

    #[test]
    fn flip_shuffle_is_classical(u in word(3, 3), v in word(3, 3)) {
        let space = TensorSpace::new(3, CAP);
        let qs = QuantumShuffle::new(Braiding::flip(3), space).unwrap();
        prop_assert_eq!(qs.words(&u, &v).unwrap(), Shuffle::new(space).words(&u, &v).unwrap());
    }

    #[test]
    fn symmetric_beta_is_involutive(s in symmetric_diagonal(2), u in word(2, 3), v in word(2, 3)) {
        prop_assert!(s.check_symmetric());
        let once = s.pair(&u, &v).unwrap();
        let mut twice = LinComb::new();
        for ((a, b), c) in once.iter() {
            twice.add_scaled(&s.pair(a, b).unwrap(), c);
        }
        prop_assert_eq!(twice, LinComb::basis((u, v)));
    }

    #[test]
    fn braiding_json_roundtrip((_, s) in diagonal(2)) {
        let text = to_pretty(&braiding_json(&s));
        let back = InputJson::parse(&text).unwrap().braiding().unwrap();
        prop_assert_eq!(back.entries(), s.entries());
    }
}
