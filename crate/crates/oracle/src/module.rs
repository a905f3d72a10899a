//! Finite dimensional `q(n)`-modules with a weight basis.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;
use crate::sparse::{axpy, from_dense, get, unit, Echelon, SVec, SpMat};
use crate::supermatrix::{q_basis, BasisElem, QElem};

/// A module over `q(n)`: one sparse matrix per basis element of [`q_basis`]. Every basis
/// vector is homogeneous and a weight vector for the even Cartan subalgebra.
#[derive(Debug, Clone, PartialEq)]
pub struct GModule<F> {
    pub n: usize,
    pub labels: Vec<String>,
    /// `true` for odd basis vectors.
    pub parity: Vec<bool>,
    pub weights: Vec<Vec<i64>>,
    pub action: Vec<SpMat<F>>,
}

/// `(weight, parity)` of a basis vector.
pub type Class = (Vec<i64>, bool);

impl<F: Field> GModule<F> {
    pub fn dim(&self) -> usize {
        self.parity.len()
    }

    /// `(even | odd)` dimensions.
    pub fn sdim(&self) -> (usize, usize) {
        let odd = self.parity.iter().filter(|&&p| p).count();
        (self.dim() - odd, odd)
    }

    pub fn rho(&self, b: BasisElem) -> &SpMat<F> {
        &self.action[b.index(self.n)]
    }

    /// The action of an arbitrary element.
    pub fn act(&self, x: &QElem<F>) -> SpMat<F> {
        let mut out = SpMat::zeros(self.dim(), self.dim());
        for (k, c) in x.to_flat().iter().enumerate() {
            if !c.is_zero() {
                out = out.add_scaled(c, &self.action[k]);
            }
        }
        out
    }

    pub fn class(&self, i: usize) -> Class {
        (self.weights[i].clone(), self.parity[i])
    }

    pub fn classes(&self) -> BTreeMap<Class, Vec<usize>> {
        let mut out: BTreeMap<Class, Vec<usize>> = BTreeMap::new();
        for i in 0..self.dim() {
            out.entry(self.class(i)).or_default().push(i);
        }
        out
    }

    /// Weight -> `(even, odd)` multiplicities.
    pub fn character(&self) -> BTreeMap<Vec<i64>, (usize, usize)> {
        let mut out: BTreeMap<Vec<i64>, (usize, usize)> = BTreeMap::new();
        for i in 0..self.dim() {
            let e = out.entry(self.weights[i].clone()).or_default();
            if self.parity[i] {
                e.1 += 1;
            } else {
                e.0 += 1;
            }
        }
        out
    }

    /// Weight -> `even - odd`, zero entries dropped.
    pub fn supercharacter(&self) -> BTreeMap<Vec<i64>, i64> {
        self.character()
            .into_iter()
            .map(|(w, (e, o))| (w, e as i64 - o as i64))
            .filter(|(_, s)| *s != 0)
            .collect()
    }

    pub fn trivial(n: usize) -> Self {
        GModule {
            n,
            labels: vec!["1".into()],
            parity: vec![false],
            weights: vec![vec![0; n]],
            action: vec![SpMat::zeros(1, 1); 2 * n * n],
        }
    }

    /// `C^{n|n}` with even `v_1..v_n` and odd `v_{n+1}..v_{2n}`.
    pub fn standard(n: usize) -> Self {
        let dim = 2 * n;
        let mut action = Vec::new();
        for b in q_basis(n) {
            let mut m = SpMat::zeros(dim, dim);
            if b.odd {
                m.columns[n + b.j] = unit(b.i);
                m.columns[b.j] = unit(n + b.i);
            } else {
                m.columns[b.j] = unit(b.i);
                m.columns[n + b.j] = unit(n + b.i);
            }
            action.push(m);
        }
        let weights = (0..dim)
            .map(|k| {
                let mut w = vec![0; n];
                w[k % n] = 1;
                w
            })
            .collect();
        GModule {
            n,
            labels: (1..=dim).map(|k| format!("v{k}")).collect(),
            parity: (0..dim).map(|k| k >= n).collect(),
            weights,
            action,
        }
    }

    /// The dual module: `(X f)(v) = -(-1)^{|X||f|} f(X v)`.
    pub fn dual(&self) -> Self {
        let d = self.dim();
        let action = q_basis(self.n)
            .into_iter()
            .map(|b| {
                let src = self.rho(b);
                let mut cols: Vec<Vec<(usize, F)>> = vec![Vec::new(); d];
                for (k, col) in src.columns.iter().enumerate() {
                    for (j, v) in col {
                        let neg = !(b.odd && self.parity[*j]);
                        let v = if neg { -v.clone() } else { v.clone() };
                        cols[*j].push((k, v));
                    }
                }
                SpMat { rows: d, columns: cols.into_iter().map(|mut c| { c.sort_by_key(|e| e.0); c }).collect() }
            })
            .collect();
        GModule {
            n: self.n,
            labels: self.labels.iter().map(|l| format!("{l}*")).collect(),
            parity: self.parity.clone(),
            weights: self.weights.iter().map(|w| w.iter().map(|x| -x).collect()).collect(),
            action,
        }
    }

    /// `M (x) N` with basis `m_a (x) n_b` at index `a * dim N + b`.
    pub fn tensor(&self, other: &GModule<F>) -> Self {
        assert_eq!(self.n, other.n);
        let (dm, dn) = (self.dim(), other.dim());
        let mut labels = Vec::with_capacity(dm * dn);
        let mut parity = Vec::with_capacity(dm * dn);
        let mut weights = Vec::with_capacity(dm * dn);
        for a in 0..dm {
            for b in 0..dn {
                labels.push(format!("{}.{}", self.labels[a], other.labels[b]));
                parity.push(self.parity[a] ^ other.parity[b]);
                weights.push(self.weights[a].iter().zip(&other.weights[b]).map(|(x, y)| x + y).collect());
            }
        }
        let action = q_basis(self.n)
            .into_iter()
            .map(|x| {
                let (l, r) = (self.rho(x), other.rho(x));
                let mut columns = Vec::with_capacity(dm * dn);
                for a in 0..dm {
                    let sign = if x.odd && self.parity[a] { -F::one() } else { F::one() };
                    for b in 0..dn {
                        let mut col: SVec<F> = l.columns[a].iter().map(|(i, v)| (i * dn + b, v.clone())).collect();
                        let right: SVec<F> = r.columns[b].iter().map(|(j, v)| (a * dn + j, v.clone())).collect();
                        col.sort_by_key(|e| e.0);
                        col = axpy(&col, &sign, &right);
                        columns.push(col);
                    }
                }
                SpMat { rows: dm * dn, columns }
            })
            .collect();
        GModule { n: self.n, labels, parity, weights, action }
    }

    /// Checks that the matrices realize the bracket, odd elements flip parity and every
    /// basis element shifts weights by its root.
    pub fn check_axioms(&self) -> std::result::Result<(), String> {
        let n = self.n;
        let basis = q_basis(n);
        for &x in &basis {
            let wx = x.weight(n);
            for (j, col) in self.rho(x).columns.iter().enumerate() {
                for (i, _) in col {
                    if self.parity[*i] != (self.parity[j] ^ x.odd) {
                        return Err(format!("{} breaks parity at {j}", x.label()));
                    }
                    let expect: Vec<i64> = self.weights[j].iter().zip(&wx).map(|(a, b)| a + b).collect();
                    if self.weights[*i] != expect {
                        return Err(format!("{} breaks weights at {j}", x.label()));
                    }
                }
            }
            if !x.odd && x.i == x.j {
                for j in 0..self.dim() {
                    let expect = if self.weights[j][x.i] == 0 {
                        Vec::new()
                    } else {
                        vec![(j, F::from_i64(self.weights[j][x.i]))]
                    };
                    if self.rho(x).columns[j] != expect {
                        return Err(format!("{} is not diagonal with the weight at {j}", x.label()));
                    }
                }
            }
        }
        for &x in &basis {
            for &y in &basis {
                let lhs = self.act(&x.to_elem::<F>(n).bracket(&y.to_elem(n)));
                let (rx, ry) = (self.rho(x), self.rho(y));
                let sign = if x.odd && y.odd { F::one() } else { -F::one() };
                let rhs = rx.compose(ry).add_scaled(&sign, &ry.compose(rx));
                if lhs != rhs {
                    return Err(format!("bracket [{}, {}] is not respected", x.label(), y.label()));
                }
            }
        }
        Ok(())
    }

    /// Splits a vector into its `(weight, parity)` components.
    pub fn homogeneous_parts(&self, v: &SVec<F>) -> Vec<SVec<F>> {
        let mut parts: BTreeMap<Class, SVec<F>> = BTreeMap::new();
        for (i, a) in v {
            parts.entry(self.class(*i)).or_default().push((*i, a.clone()));
        }
        parts.into_values().collect()
    }

    /// The submodule generated by `gens`, as an echelon basis of homogeneous vectors.
    pub fn generate(&self, gens: &[SVec<F>]) -> Echelon<F> {
        let mut ech = Echelon::new();
        let mut queue = Vec::new();
        for g in gens {
            for p in self.homogeneous_parts(g) {
                if ech.insert(p.clone()) {
                    queue.push(p);
                }
            }
        }
        while let Some(v) = queue.pop() {
            for m in &self.action {
                let w = m.apply(&v);
                if !w.is_empty() && ech.insert(w.clone()) {
                    queue.push(w);
                }
            }
        }
        ech
    }

    pub fn is_submodule(&self, s: &Echelon<F>) -> bool {
        s.basis().iter().all(|b| self.action.iter().all(|m| s.contains(&m.apply(b))))
    }

    /// The submodule spanned by `s`, whose generators must be homogeneous.
    pub fn submodule(&self, s: &Echelon<F>) -> Result<Self> {
        let basis = s.basis();
        let mut parity = Vec::new();
        let mut weights = Vec::new();
        for b in basis {
            let Some((i, _)) = b.first() else { return Err(Error::NotSubmodule) };
            if b.iter().any(|(k, _)| self.class(*k) != self.class(*i)) {
                return Err(Error::NotSubmodule);
            }
            parity.push(self.parity[*i]);
            weights.push(self.weights[*i].clone());
        }
        let mut action = Vec::new();
        for m in &self.action {
            let mut columns = Vec::new();
            for b in basis {
                columns.push(s.coords(&m.apply(b)).ok_or(Error::NotSubmodule)?);
            }
            action.push(SpMat { rows: basis.len(), columns });
        }
        Ok(GModule { n: self.n, labels: (0..basis.len()).map(|k| format!("b{k}")).collect(), parity, weights, action })
    }

    /// `M / S`, with the standard basis vectors off the pivots of `s` as basis.
    pub fn quotient(&self, s: &Echelon<F>) -> Result<Self> {
        if !self.is_submodule(s) {
            return Err(Error::NotSubmodule);
        }
        let pivots: std::collections::BTreeSet<usize> = s.pivots().collect();
        let keep: Vec<usize> = (0..self.dim()).filter(|i| !pivots.contains(i)).collect();
        let mut pos = vec![usize::MAX; self.dim()];
        for (k, &i) in keep.iter().enumerate() {
            pos[i] = k;
        }
        let action = self
            .action
            .iter()
            .map(|m| {
                let columns = keep
                    .iter()
                    .map(|&i| {
                        let (r, _) = s.reduce(&m.columns[i]);
                        r.into_iter().map(|(k, a)| (pos[k], a)).collect()
                    })
                    .collect();
                SpMat { rows: keep.len(), columns }
            })
            .collect();
        Ok(GModule {
            n: self.n,
            labels: keep.iter().map(|&i| self.labels[i].clone()).collect(),
            parity: keep.iter().map(|&i| self.parity[i]).collect(),
            weights: keep.iter().map(|&i| self.weights[i].clone()).collect(),
            action,
        })
    }

    /// Raising operators `E_ij`, `F_ij` with `i < j`.
    pub fn raising(&self) -> Vec<BasisElem> {
        q_basis(self.n).into_iter().filter(|b| b.i < b.j).collect()
    }

    /// Vectors in the span of `idx` (one class) killed by all raising operators.
    pub fn singular_in(&self, idx: &[usize]) -> Vec<SVec<F>> {
        let mut rows: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let mut entries = Vec::new();
        for (t, b) in self.raising().into_iter().enumerate() {
            for (c, &i) in idx.iter().enumerate() {
                for (r, a) in &self.rho(b).columns[i] {
                    let n = rows.len();
                    let row = *rows.entry((t, *r)).or_insert(n);
                    entries.push((row, c, a.clone()));
                }
            }
        }
        let mut m = Matrix::zeros(rows.len(), idx.len());
        for (r, c, a) in entries {
            m[(r, c)] += a;
        }
        m.kernel()
            .into_iter()
            .map(|k| from_dense(&k).into_iter().map(|(c, a)| (idx[c], a)).collect())
            .collect()
    }

    /// All singular vectors, grouped by class.
    pub fn singular_vectors(&self) -> BTreeMap<Class, Vec<SVec<F>>> {
        self.classes()
            .into_iter()
            .map(|(c, idx)| (c, self.singular_in(&idx)))
            .filter(|(_, v)| !v.is_empty())
            .collect()
    }

    /// Applies a module map given on basis vectors to a combination.
    pub fn combine(basis: &[SVec<F>], coords: &SVec<F>) -> SVec<F> {
        coords.iter().fold(Vec::new(), |acc, (i, a)| axpy(&acc, a, &basis[*i]))
    }

    /// The coefficient of basis vector `i` in `v`.
    pub fn coeff(v: &SVec<F>, i: usize) -> F {
        get(v, i)
    }
}
