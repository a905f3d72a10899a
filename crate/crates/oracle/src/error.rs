use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("x^2 does not act semisimply on the module")]
    NonSemisimpleSquare,
    #[error("no highest weight vector of weight {0} in the tensor range")]
    WeightNotFoundInTensorRange(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("the subspace is not a submodule")]
    NotSubmodule,
    #[error("bad index set: {0}")]
    BadIndexSet(String),
    #[error("element does not lie in the algebra")]
    NotInAlgebra,
    #[error("no simple quotient after {0} rounds")]
    IterationCap(usize),
    #[error(transparent)]
    Core(#[from] queer_core::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
