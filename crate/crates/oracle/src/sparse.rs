//! Sparse vectors, column-sparse matrices and an incremental echelon basis.

use std::collections::BTreeMap;

use crate::field::Field;
use crate::matrix::Matrix;

/// Sorted `(index, value)` pairs with no zero values.
pub type SVec<F> = Vec<(usize, F)>;

pub fn unit<F: Field>(i: usize) -> SVec<F> {
    vec![(i, F::one())]
}

/// `y + a x`.
pub fn axpy<F: Field>(y: &SVec<F>, a: &F, x: &SVec<F>) -> SVec<F> {
    if a.is_zero() {
        return y.clone();
    }
    let mut out = Vec::with_capacity(y.len() + x.len());
    let (mut i, mut j) = (0, 0);
    while i < y.len() || j < x.len() {
        if j == x.len() || (i < y.len() && y[i].0 < x[j].0) {
            out.push(y[i].clone());
            i += 1;
        } else if i == y.len() || x[j].0 < y[i].0 {
            out.push((x[j].0, a.clone() * x[j].1.clone()));
            j += 1;
        } else {
            let v = y[i].1.clone() + a.clone() * x[j].1.clone();
            if !v.is_zero() {
                out.push((y[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn scale<F: Field>(x: &SVec<F>, a: &F) -> SVec<F> {
    if a.is_zero() {
        return Vec::new();
    }
    x.iter().map(|(i, v)| (*i, v.clone() * a.clone())).collect()
}

pub fn get<F: Field>(x: &SVec<F>, i: usize) -> F {
    x.binary_search_by_key(&i, |e| e.0).map_or_else(|_| F::zero(), |p| x[p].1.clone())
}

/// Builds a sparse vector from unsorted terms, summing repeats.
pub fn collect<F: Field>(terms: impl IntoIterator<Item = (usize, F)>) -> SVec<F> {
    let mut acc: BTreeMap<usize, F> = BTreeMap::new();
    for (i, v) in terms {
        *acc.entry(i).or_insert_with(F::zero) += v;
    }
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

pub fn to_dense<F: Field>(x: &SVec<F>, len: usize) -> Vec<F> {
    let mut v = vec![F::zero(); len];
    for (i, a) in x {
        v[*i] = a.clone();
    }
    v
}

pub fn from_dense<F: Field>(v: &[F]) -> SVec<F> {
    v.iter().enumerate().filter(|(_, a)| !a.is_zero()).map(|(i, a)| (i, a.clone())).collect()
}

/// Column-sparse matrix: `columns[j]` is the image of the `j`-th basis vector.
#[derive(Debug, Clone, PartialEq)]
pub struct SpMat<F> {
    pub rows: usize,
    pub columns: Vec<SVec<F>>,
}

impl<F: Field> SpMat<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SpMat { rows, columns: vec![Vec::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        SpMat { rows: n, columns: (0..n).map(unit).collect() }
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn apply(&self, v: &SVec<F>) -> SVec<F> {
        let mut out = Vec::new();
        for (j, a) in v {
            out = axpy(&out, a, &self.columns[*j]);
        }
        out
    }

    /// `self * other`.
    pub fn compose(&self, other: &SpMat<F>) -> SpMat<F> {
        SpMat { rows: self.rows, columns: other.columns.iter().map(|c| self.apply(c)).collect() }
    }

    pub fn add_scaled(&self, a: &F, other: &SpMat<F>) -> SpMat<F> {
        let columns = self.columns.iter().zip(&other.columns).map(|(x, y)| axpy(x, a, y)).collect();
        SpMat { rows: self.rows, columns }
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn to_dense(&self) -> Matrix<F> {
        let mut m = Matrix::zeros(self.rows, self.cols());
        for (j, c) in self.columns.iter().enumerate() {
            for (i, a) in c {
                m[(*i, j)] = a.clone();
            }
        }
        m
    }

    pub fn from_dense(m: &Matrix<F>) -> Self {
        SpMat { rows: m.rows(), columns: (0..m.cols()).map(|j| from_dense(&m.column(j))).collect() }
    }

    /// Rows `rows` and columns `cols`, reindexed.
    pub fn block(&self, rows: &[usize], cols: &[usize]) -> Matrix<F> {
        let pos: BTreeMap<usize, usize> = rows.iter().enumerate().map(|(k, &r)| (r, k)).collect();
        let mut m = Matrix::zeros(rows.len(), cols.len());
        for (k, &c) in cols.iter().enumerate() {
            for (i, a) in &self.columns[c] {
                if let Some(&r) = pos.get(i) {
                    m[(r, k)] = a.clone();
                }
            }
        }
        m
    }
}

#[derive(Debug, Clone)]
struct Row<F> {
    v: SVec<F>,
    /// The row as a combination of the accepted generators.
    comb: SVec<F>,
}

/// An echelon basis built one vector at a time. Each row has leading index equal to its
/// pivot (entry 1) and is reduced against the rows with smaller pivots.
#[derive(Debug, Clone, Default)]
pub struct Echelon<F> {
    rows: BTreeMap<usize, Row<F>>,
    gens: Vec<SVec<F>>,
}

impl<F: Field> Echelon<F> {
    pub fn new() -> Self {
        Echelon { rows: BTreeMap::new(), gens: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// The accepted generators, in insertion order: a basis of the span.
    pub fn basis(&self) -> &[SVec<F>] {
        &self.gens
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// `v` minus its projection onto the span along the non-pivot coordinates, and the
    /// combination of generators that was subtracted.
    pub fn reduce(&self, v: &SVec<F>) -> (SVec<F>, SVec<F>) {
        let mut v = v.clone();
        let mut comb = Vec::new();
        for (p, row) in &self.rows {
            let c = get(&v, *p);
            if !c.is_zero() {
                let m = -c.clone();
                v = axpy(&v, &m, &row.v);
                comb = axpy(&comb, &c, &row.comb);
            }
        }
        (v, comb)
    }

    pub fn contains(&self, v: &SVec<F>) -> bool {
        self.reduce(v).0.is_empty()
    }

    /// Coordinates of `v` in [`Echelon::basis`], if `v` lies in the span.
    pub fn coords(&self, v: &SVec<F>) -> Option<SVec<F>> {
        let (r, c) = self.reduce(v);
        r.is_empty().then_some(c)
    }

    /// Adds `v` if it is independent; returns whether it was added.
    pub fn insert(&mut self, v: SVec<F>) -> bool {
        let (r, comb) = self.reduce(&v);
        let Some((p, lead)) = r.first().cloned() else { return false };
        let k = self.gens.len();
        let inv = F::one() / lead;
        // r = v - sum comb_i g_i, so r / lead = (e_k - comb) / lead in generator terms.
        let comb = axpy(&unit(k), &-F::one(), &comb);
        self.rows.insert(p, Row { v: scale(&r, &inv), comb: scale(&comb, &inv) });
        self.gens.push(v);
        true
    }

    pub fn from_vectors(vs: impl IntoIterator<Item = SVec<F>>) -> Self {
        let mut e = Echelon::new();
        for v in vs {
            e.insert(v);
        }
        e
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Q;

    fn q(x: i64) -> Q {
        Q::from_i64(x)
    }

    #[test]
    fn vector_ops() {
        let a = vec![(0, q(1)), (3, q(2))];
        let b = vec![(1, q(5)), (3, q(-1))];
        assert_eq!(axpy(&a, &q(2), &b), vec![(0, q(1)), (1, q(10))]);
        assert_eq!(collect(vec![(2, q(1)), (0, q(3)), (2, q(-1))]), vec![(0, q(3))]);
        assert_eq!(get(&a, 3), q(2));
        assert_eq!(get(&a, 2), q(0));
    }

    #[test]
    fn echelon_coordinates() {
        let mut e = Echelon::new();
        assert!(e.insert(vec![(1, q(2)), (2, q(1))]));
        assert!(e.insert(vec![(0, q(1)), (1, q(1))]));
        assert!(!e.insert(vec![(0, q(2)), (1, q(6)), (2, q(2))]));
        let v = vec![(0, q(3)), (1, q(-1)), (2, q(-2))];
        let c = e.coords(&v).unwrap();
        let rebuilt = c.iter().fold(Vec::new(), |acc, (i, a)| axpy(&acc, a, &e.basis()[*i]));
        assert_eq!(rebuilt, v);
        assert!(e.coords(&unit(2)).is_none());
        assert_eq!(e.dim(), 2);
    }

    #[test]
    fn matrices() {
        let m = SpMat { rows: 2, columns: vec![vec![(1, q(1))], vec![]] };
        assert!(m.compose(&m).is_zero());
        assert_eq!(SpMat::from_dense(&m.to_dense()), m);
        assert_eq!(m.apply(&unit(0)), unit(1));
    }
}
