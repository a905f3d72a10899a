//! `q(n)`, `sq(n)` and their quotients `pq(n)`, `psq(n)` by the centre `C T_{Id,0}`.
//!
//! Elements are carried as matrix representatives; coordinates in a quotient are read off
//! after adding `T_{Id,0}` as an extra generator, so brackets are taken in `q(n)` and then
//! projected.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::module::GModule;
use crate::sparse::{from_dense, Echelon, SVec, SpMat};
use crate::supermatrix::{q_basis, BasisElem, QElem};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraKind {
    Q,
    SQ,
    PQ,
    PSQ,
}

impl AlgebraKind {
    pub fn all() -> [AlgebraKind; 4] {
        [AlgebraKind::Q, AlgebraKind::SQ, AlgebraKind::PQ, AlgebraKind::PSQ]
    }

    pub fn is_quotient(self) -> bool {
        matches!(self, AlgebraKind::PQ | AlgebraKind::PSQ)
    }

    pub fn is_special(self) -> bool {
        matches!(self, AlgebraKind::SQ | AlgebraKind::PSQ)
    }

    /// `(even | odd)` dimension for rank `n`.
    pub fn sdim(self, n: usize) -> (usize, usize) {
        let m = n * n;
        match self {
            AlgebraKind::Q => (m, m),
            AlgebraKind::SQ => (m, m.saturating_sub(1)),
            AlgebraKind::PQ => (m.saturating_sub(1), m),
            AlgebraKind::PSQ => (m.saturating_sub(1), m.saturating_sub(1)),
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "q" => Some(AlgebraKind::Q),
            "sq" => Some(AlgebraKind::SQ),
            "pq" => Some(AlgebraKind::PQ),
            "psq" => Some(AlgebraKind::PSQ),
            _ => None,
        }
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AlgebraKind::Q => "q",
            AlgebraKind::SQ => "sq",
            AlgebraKind::PQ => "pq",
            AlgebraKind::PSQ => "psq",
        })
    }
}

#[derive(Debug, Clone)]
pub struct LieSuperalgebra<F> {
    pub kind: AlgebraKind,
    pub n: usize,
    /// Representatives in `q(n)`.
    pub basis: Vec<QElem<F>>,
    pub labels: Vec<String>,
    pub parity: Vec<bool>,
    pub weights: Vec<Vec<i64>>,
    /// Generators: the basis, then `T_{Id,0}` for quotients.
    solver: Echelon<F>,
}

impl<F: Field> LieSuperalgebra<F> {
    pub fn new(kind: AlgebraKind, n: usize) -> Self {
        assert!(n >= 1);
        let mut basis = Vec::new();
        let mut labels = Vec::new();
        let mut parity = Vec::new();
        let mut weights = Vec::new();
        let last = n - 1;
        for b in q_basis(n) {
            let diag = b.i == b.j;
            if !b.odd && kind.is_quotient() && diag && b.i == last {
                continue;
            }
            if b.odd && kind.is_special() && diag {
                if b.i == last {
                    continue;
                }
                basis.push(QElem::f(n, b.i, b.i).add(&QElem::f(n, last, last).scale(&-F::one())));
                labels.push(format!("F{}{}-F{n}{n}", b.i + 1, b.i + 1));
            } else {
                basis.push(b.to_elem(n));
                labels.push(b.label());
            }
            parity.push(b.odd);
            weights.push(b.weight(n));
        }
        let mut solver = Echelon::new();
        for x in &basis {
            let added = solver.insert(from_dense(&x.to_flat()));
            debug_assert!(added);
        }
        if kind.is_quotient() {
            solver.insert(from_dense(&QElem::<F>::identity(n).to_flat()));
        }
        LieSuperalgebra { kind, n, basis, labels, parity, weights, solver }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn sdim(&self) -> (usize, usize) {
        let odd = self.parity.iter().filter(|&&p| p).count();
        (self.dim() - odd, odd)
    }

    /// Coordinates of the class of `x` (sparse), or `None` if `x` is not in the algebra.
    pub fn coords(&self, x: &QElem<F>) -> Option<SVec<F>> {
        let c = self.solver.coords(&from_dense(&x.to_flat()))?;
        Some(c.into_iter().filter(|(i, _)| *i < self.dim()).collect())
    }

    pub fn element(&self, coords: &SVec<F>) -> QElem<F> {
        coords.iter().fold(QElem::zero(self.n), |acc, (i, a)| acc.add(&self.basis[*i].scale(a)))
    }

    pub fn bracket_coords(&self, a: &SVec<F>, b: &SVec<F>) -> SVec<F> {
        self.coords(&self.element(a).bracket(&self.element(b))).expect("the algebra is closed under brackets")
    }

    /// `c[i][j]` = coordinates of `[b_i, b_j]`.
    pub fn structure_constants(&self) -> Result<Vec<Vec<SVec<F>>>> {
        let mut out = Vec::with_capacity(self.dim());
        for x in &self.basis {
            let mut row = Vec::with_capacity(self.dim());
            for y in &self.basis {
                row.push(self.coords(&x.bracket(y)).ok_or(Error::NotInAlgebra)?);
            }
            out.push(row);
        }
        Ok(out)
    }

    /// Super Jacobi `[a,[b,c]] = [[a,b],c] + (-1)^{|a||b|} [b,[a,c]]` on all basis triples,
    /// computed from the structure constants alone.
    pub fn check_jacobi(&self) -> Result<bool> {
        let c = self.structure_constants()?;
        let d = self.dim();
        let br = |i: usize, v: &SVec<F>| -> SVec<F> {
            v.iter().fold(Vec::new(), |acc, (k, a)| crate::sparse::axpy(&acc, a, &c[i][*k]))
        };
        let br_left = |v: &SVec<F>, j: usize| -> SVec<F> {
            v.iter().fold(Vec::new(), |acc, (k, a)| crate::sparse::axpy(&acc, a, &c[*k][j]))
        };
        for a in 0..d {
            for b in 0..d {
                let sign = if self.parity[a] && self.parity[b] { -F::one() } else { F::one() };
                for cc in 0..d {
                    let lhs = br(a, &c[b][cc]);
                    let rhs = crate::sparse::axpy(&br_left(&c[a][b], cc), &sign, &br(b, &c[a][cc]));
                    if lhs != rhs {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// The algebra as a `q(n)`-module under the adjoint action.
    pub fn adjoint_module(&self) -> GModule<F> {
        let n = self.n;
        let action = q_basis(n)
            .into_iter()
            .map(|x: BasisElem| {
                let xe = x.to_elem::<F>(n);
                let columns = self.basis.iter().map(|b| self.coords(&xe.bracket(b)).expect("ideal")).collect();
                SpMat { rows: self.dim(), columns }
            })
            .collect();
        GModule { n, labels: self.labels.clone(), parity: self.parity.clone(), weights: self.weights.clone(), action }
    }
}
