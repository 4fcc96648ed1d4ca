//! Truncated tensor algebra `T(V)`: words, sparse elements, multi-slot
//! tensors and graded operators.

mod element;
mod lincomb;
mod multi;
mod operator;
mod word;

pub(crate) use element::{deconcat_reduced_word, deconcat_word};
#[allow(unused_imports)]
pub(crate) use element::{fmt_term, join_terms};
pub use element::{Element, TensorSpace};
pub use lincomb::LinComb;
pub use multi::{Slots, Tensor};
pub use operator::GradedOperator;
pub use word::{words_of_grade, words_up_to, Word};
