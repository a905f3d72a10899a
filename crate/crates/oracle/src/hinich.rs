//! The six-term sequence `0 -> Y -> DS_x(M_1) -> DS_x(N) -> DS_x(M_2) -> Pi Y -> 0` for a
//! submodule `M_1 \subset N`, `M_2 = N / M_1`, checked by ranks.
//!
//! Everything happens inside `N_0 = ker x^2`, where `x` squares to zero; the quotient is
//! handled as `N_0 / (M_1 \cap N_0)`.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;
use crate::module::GModule;
use crate::sparse::{to_dense, Echelon};
use crate::supermatrix::QElem;

/// A subspace of `F^len`, by a basis.
#[derive(Debug, Clone)]
struct Space<F> {
    len: usize,
    basis: Vec<Vec<F>>,
}

impl<F: Field> Space<F> {
    fn span(len: usize, vs: Vec<Vec<F>>) -> Self {
        if vs.is_empty() {
            return Space { len, basis: vs };
        }
        Space { len, basis: Matrix::from_columns(len, &vs).image() }
    }

    fn whole(len: usize) -> Self {
        Space { len, basis: (0..len).map(|i| to_dense(&vec![(i, F::one())], len)).collect() }
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }

    fn sum(&self, o: &Self) -> Self {
        Space::span(self.len, self.basis.iter().chain(&o.basis).cloned().collect())
    }

    fn map(&self, m: &Matrix<F>) -> Self {
        Space::span(self.len, self.basis.iter().map(|v| m.mul_vec(v)).collect())
    }

    /// `{ v in self : m v in t }`.
    fn preimage(&self, m: &Matrix<F>, t: &Self) -> Self {
        if self.basis.is_empty() {
            return self.clone();
        }
        let k = self.dim();
        let mut cols: Vec<Vec<F>> = self.basis.iter().map(|v| m.mul_vec(v)).collect();
        cols.extend(t.basis.iter().cloned());
        let ker = Matrix::from_columns(self.len, &cols).kernel();
        let vs = ker.iter().map(|c| combine(&self.basis, &c[..k])).collect();
        Space::span(self.len, vs)
    }

    fn intersect(&self, o: &Self) -> Self {
        self.preimage(&Matrix::identity(self.len), o)
    }

    fn contains(&self, o: &Self) -> bool {
        self.sum(o).dim() == self.dim()
    }

    /// Dimension of the part of parity `p`, for a graded subspace.
    fn parity_dim(&self, parity: &[bool], p: bool) -> usize {
        let vs: Vec<Vec<F>> = self
            .basis
            .iter()
            .map(|v| v.iter().enumerate().map(|(i, a)| if parity[i] == p { a.clone() } else { F::zero() }).collect())
            .collect();
        Space::span(self.len, vs).dim()
    }
}

fn combine<F: Field>(basis: &[Vec<F>], c: &[F]) -> Vec<F> {
    let len = basis.first().map_or(0, Vec::len);
    let mut out = vec![F::zero(); len];
    for (v, a) in basis.iter().zip(c) {
        for (o, x) in out.iter_mut().zip(v) {
            *o += a.clone() * x.clone();
        }
    }
    out
}

/// `top / bottom`.
#[derive(Debug, Clone)]
struct Sub<F> {
    top: Space<F>,
    bottom: Space<F>,
}

impl<F: Field> Sub<F> {
    fn sdim(&self, parity: &[bool]) -> (usize, usize) {
        let d = |p| self.top.parity_dim(parity, p) - self.bottom.parity_dim(parity, p);
        (d(false), d(true))
    }

    fn dim(&self) -> usize {
        self.top.dim() - self.bottom.dim()
    }

    /// Rank of the map to `to` induced by `m`.
    fn rank_to(&self, m: &Matrix<F>, to: &Sub<F>) -> usize {
        self.top.map(m).sum(&to.bottom).dim() - to.bottom.dim()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HinichReport {
    pub y: (usize, usize),
    pub ds_sub: (usize, usize),
    pub ds_total: (usize, usize),
    pub ds_quotient: (usize, usize),
    /// Exactness at `Y`, `DS_x(M_1)`, `DS_x(N)`, `DS_x(M_2)`, `Pi Y`.
    pub exact: [bool; 5],
}

impl HinichReport {
    pub fn holds(&self) -> bool {
        self.exact.iter().all(|&e| e)
    }
}

/// Checks the sequence for the submodule of `n` spanned by `sub`.
pub fn hinich_check<F: Field>(n: &GModule<F>, sub: &Echelon<F>, x: &QElem<F>) -> Result<HinichReport> {
    if !n.is_submodule(sub) {
        return Err(Error::NotSubmodule);
    }
    if x.parity() != Some(true) && !x.is_zero() {
        return Err(Error::HypothesisViolated("x must be odd".into()));
    }
    let d = n.dim();
    let xm = n.act(x).to_dense();
    let x2 = xm.mul(&xm);
    if x2.kernel().len() != x2.mul(&x2).kernel().len() {
        return Err(Error::NonSemisimpleSquare);
    }
    let whole = Space::whole(d);
    let n0 = Space::span(d, x2.kernel());
    let m1 = Space::span(d, sub.basis().iter().map(|v| to_dense(v, d)).collect());
    let m0 = m1.intersect(&n0);
    let zero = Space::span(d, Vec::new());

    let ker_x = whole.preimage(&xm, &zero);
    let k_n = ker_x.clone();
    let i_n = n0.map(&xm);
    let k_1 = ker_x.intersect(&m0);
    let i_1 = m0.map(&xm);
    let k_2 = n0.preimage(&xm, &m0).sum(&m0);
    let i_2 = i_n.sum(&m0);
    // Y = (M_1^x \cap [x,N]) / (M_1^x \cap [x,M_1]), computed in N itself.
    let m1x = m1.intersect(&ker_x);
    let y = Sub { top: m1x.intersect(&whole.map(&xm)), bottom: m1x.intersect(&m1.map(&xm)) };

    let ds1 = Sub { top: k_1, bottom: i_1 };
    let dsn = Sub { top: k_n, bottom: i_n };
    let ds2 = Sub { top: k_2, bottom: i_2 };
    let id = Matrix::identity(d);

    let r_iota = y.rank_to(&id, &ds1);
    let r_alpha = ds1.rank_to(&id, &dsn);
    let r_beta = dsn.rank_to(&id, &ds2);
    let r_delta = ds2.rank_to(&xm, &y);
    let zero_after = |a: &Sub<F>, f: &Matrix<F>, g: &Matrix<F>, c: &Sub<F>| c.bottom.contains(&a.top.map(f).map(g));
    let exact = [
        r_iota == y.dim(),
        ds1.dim() - r_alpha == r_iota && zero_after(&y, &id, &id, &dsn),
        dsn.dim() - r_beta == r_alpha && zero_after(&ds1, &id, &id, &ds2),
        ds2.dim() - r_delta == r_beta && zero_after(&dsn, &id, &xm, &y),
        r_delta == y.dim(),
    ];
    let par = &n.parity;
    Ok(HinichReport { y: y.sdim(par), ds_sub: ds1.sdim(par), ds_total: dsn.sdim(par), ds_quotient: ds2.sdim(par), exact })
}
