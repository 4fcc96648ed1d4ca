//! Exact computer algebra for braided tensor algebras: quantum shuffles,
//! quantum quasi-shuffles, braided Rota-Baxter and dendriform structures.

pub mod algebra;
pub mod braiding;
pub mod cli;
pub mod error;
pub mod gallery;
pub mod io;
pub mod linalg;
pub mod products;
pub mod scalar;
pub mod structures;
pub mod tensor;
pub mod universal;

pub use error::{Error, Result};
pub use scalar::{Field, Scalar};
pub use tensor::{Element, LinComb, Tensor, TensorSpace, Word};
