//! Exact linear algebra oracle for the Duflo-Serganova functor on `q(n)`.
//!
//! The algebras `q(n)`, `sq(n)`, `pq(n)`, `psq(n)` and explicit modules over them are
//! built over a generic [`Field`]; `DS_x` is then computed directly as `ker x / im x` on
//! the kernel of `x^2`. The results are compared against the combinatorial engine in
//! `queer-core`.

pub mod algebra;
pub mod classify;
pub mod ds;
pub mod error;
pub mod field;
pub mod grothendieck;
pub mod hinich;
pub mod matrix;
pub mod module;
pub mod poly;
pub mod simple;
pub mod sparse;
pub mod supermatrix;
pub mod zigzag;

pub use error::{Error, Result};
pub use field::{Field, Q};
pub use module::GModule;
pub use supermatrix::{build_x, build_x_default, QElem};
