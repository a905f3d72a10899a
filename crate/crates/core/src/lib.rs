//! Weight diagrams, arc diagrams and the Duflo–Serganova functor on simple
//! `q(n)`-modules, computed combinatorially.

pub mod arcs;
pub mod decompose;
pub mod depth;
pub mod diagram;
pub mod enumerate;
pub mod error;
pub mod identities;
pub mod render;
pub mod weight;
pub mod xspec;

/// Exact rational used for weight coordinates.
pub type Rat = num_rational::Rational64;

pub use arcs::{g_value, shrink, Arc, ArcDiagram, ArcKind};
pub use diagram::{CoreDiagram, Grid, SuccOrder, Symbol, WeightDiagram};
pub use error::{Error, Result};
pub use weight::{CliffordData, Integrality, Weight};
pub use decompose::{
    decompose, multiplicity, necessary_condition, shrink_reduce, smult, vanishing_predicate,
    Entry, GradedDecomposition, Parity,
};
pub use render::render_ascii;
pub use xspec::{XKind, XSpec};
pub use depth::{depth, DepthResult};
