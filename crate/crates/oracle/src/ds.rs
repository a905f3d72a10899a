//! `DS_x(M) = ker(x | M^{x^2}) / im(x | M^{x^2})` by direct linear algebra.
//!
//! The basis of `M` is split into blocks that `x` preserves (connected components of the
//! support of `x`). Inside a block the kernel and image are computed per parity, and per
//! degree of a grading element `h` when one is given. The result is a module over
//! `q(K)`, `K` the indices untouched by `x`, with the induced action.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;
use crate::module::GModule;
use crate::poly::minimal_polynomial;
use crate::sparse::{from_dense, to_dense, Echelon, SVec, SpMat};
use crate::supermatrix::{q_basis, BasisElem, QElem};

/// One `(parity, degree)` class of one block.
#[derive(Debug, Clone)]
struct Piece<F> {
    /// Basis indices of `M` in this piece.
    idx: Vec<usize>,
    /// Left inverse of `[image | reps]` in piece coordinates.
    solver: Matrix<F>,
    frame: Matrix<F>,
    image_dim: usize,
    /// Global indices in `DS_x(M)` of the representatives.
    ds_ids: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct Ds<F> {
    /// Indices of `q(n)` untouched by `x`, so `g_x = q(kept)`.
    pub kept: Vec<usize>,
    /// `DS_x(M)` as a `q(kept.len())`-module.
    pub module: GModule<F>,
    /// Representatives in `M` of the basis of `DS_x(M)`.
    pub reps: Vec<SVec<F>>,
    /// `h`-degree of each basis vector, for graded computations.
    pub h: Option<Vec<i64>>,
    pieces: Vec<Piece<F>>,
    /// `(piece, position)` of each basis index of `M`.
    location: Vec<(usize, usize)>,
}

impl<F: Field> Ds<F> {
    pub fn sdim(&self) -> (usize, usize) {
        self.module.sdim()
    }

    /// The class in `DS_x(M)` of a vector of `ker x`; `None` if `v` is not a cycle.
    pub fn project(&self, v: &SVec<F>) -> Option<SVec<F>> {
        let mut parts: BTreeMap<usize, Vec<F>> = BTreeMap::new();
        for (i, a) in v {
            let (p, pos) = self.location[*i];
            if p == usize::MAX {
                return None;
            }
            parts.entry(p).or_insert_with(|| vec![F::zero(); self.pieces[p].idx.len()])[pos] = a.clone();
        }
        let mut out = Vec::new();
        for (p, part) in parts {
            let piece = &self.pieces[p];
            let c = piece.solver.mul_vec(&part);
            if piece.frame.mul_vec(&c) != part {
                return None;
            }
            for (k, a) in c.into_iter().enumerate().skip(piece.image_dim) {
                if !a.is_zero() {
                    out.push((piece.ds_ids[k - piece.image_dim], a));
                }
            }
        }
        out.sort_by_key(|e| e.0);
        Some(out)
    }
}

/// `h = sum_p h_{a_p}` for `x = sum_p T_{0, E_{a_p b_p}}` with all `a_p, b_p` distinct.
pub fn nilpotent_grading<F: Field>(x: &QElem<F>) -> Option<Vec<i64>> {
    let n = x.n();
    if !x.a.is_zero() {
        return None;
    }
    let mut h = vec![0; n];
    let mut used = vec![false; n];
    for i in 0..n {
        for j in 0..n {
            let v = &x.b[(i, j)];
            if v.is_zero() {
                continue;
            }
            if i == j || used[i] || used[j] {
                return None;
            }
            used[i] = true;
            used[j] = true;
            h[i] = 1;
        }
    }
    Some(h)
}

fn blocks<F: Field>(x: &SpMat<F>) -> Vec<Vec<usize>> {
    let d = x.cols();
    let mut parent: Vec<usize> = (0..d).collect();
    fn find(p: &mut [usize], mut i: usize) -> usize {
        while p[i] != i {
            p[i] = p[p[i]];
            i = p[i];
        }
        i
    }
    for (j, col) in x.columns.iter().enumerate() {
        for (i, _) in col {
            let (a, b) = (find(&mut parent, *i), find(&mut parent, j));
            parent[a] = b;
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..d {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(i);
    }
    let mut out: Vec<Vec<usize>> = groups.into_values().collect();
    out.sort();
    out
}

/// Computes `DS_x(M)`. With `grading = Some(h)` the element `sum h_i E_ii` must satisfy
/// `[h, x] = x`, and the result records `h`-degrees.
pub fn ds_module<F: Field>(m: &GModule<F>, x: &QElem<F>, grading: Option<&[i64]>) -> Result<Ds<F>> {
    let n = m.n;
    if x.n() != n {
        return Err(Error::HypothesisViolated(format!("x lives in q({}) but the module is over q({n})", x.n())));
    }
    if x.parity() != Some(true) && !x.is_zero() {
        return Err(Error::HypothesisViolated("x must be odd".into()));
    }
    if let Some(h) = grading {
        let he = (0..n).fold(QElem::zero(n), |acc, i| acc.add(&QElem::e(n, i, i).scale(&F::from_i64(h[i]))));
        if he.bracket(x) != *x {
            return Err(Error::HypothesisViolated("[h, x] != x".into()));
        }
    }
    let kept = x.untouched_indices();
    let xm = m.act(x);
    let degree = |i: usize| -> i64 { grading.map_or(0, |h| h.iter().zip(&m.weights[i]).map(|(a, b)| a * b).sum()) };

    let mut pieces: Vec<Piece<F>> = Vec::new();
    let mut location = vec![(usize::MAX, 0); m.dim()];
    let mut reps: Vec<SVec<F>> = Vec::new();
    let mut parity = Vec::new();
    let mut weights = Vec::new();
    let mut degrees = Vec::new();

    for block in blocks(&xm) {
        let xb = xm.block(&block, &block);
        let x2 = xb.mul(&xb);
        if !x2.is_zero() && !minimal_polynomial(&x2).is_squarefree() {
            return Err(Error::NonSemisimpleSquare);
        }
        let mut classes: BTreeMap<(bool, i64), Vec<usize>> = BTreeMap::new();
        for (pos, &i) in block.iter().enumerate() {
            classes.entry((m.parity[i], degree(i))).or_default().push(pos);
        }
        for (&(par, deg), cols) in &classes {
            let z = xb.select_columns(cols).kernel();
            let src_key = (!par, if grading.is_some() { deg - 1 } else { deg });
            let mut image = Echelon::new();
            if let Some(src) = classes.get(&src_key) {
                let k2 = x2.select_columns(src).kernel();
                let xs = xb.select_columns(src);
                for v in k2 {
                    let w = xs.mul_vec(&v);
                    let part: Vec<F> = cols.iter().map(|&c| w[c].clone()).collect();
                    image.insert(from_dense(&part));
                }
            }
            let image_dim = image.dim();
            let mut frame_cols: Vec<SVec<F>> = image.basis().to_vec();
            let mut ech = image;
            for v in z {
                let sv = from_dense(&v);
                if ech.insert(sv.clone()) {
                    frame_cols.push(sv);
                }
            }
            let frame = Matrix::from_columns(cols.len(), &frame_cols.iter().map(|c| to_dense(c, cols.len())).collect::<Vec<_>>());
            let solver = frame.left_inverse().expect("independent columns");
            let idx: Vec<usize> = cols.iter().map(|&c| block[c]).collect();
            let p = pieces.len();
            for (pos, &i) in idx.iter().enumerate() {
                location[i] = (p, pos);
            }
            let mut ds_ids = Vec::new();
            for r in &frame_cols[image_dim..] {
                ds_ids.push(reps.len());
                let first = idx[r[0].0];
                reps.push(r.iter().map(|(c, a)| (idx[*c], a.clone())).collect());
                parity.push(par);
                weights.push(kept.iter().map(|&k| m.weights[first][k]).collect::<Vec<i64>>());
                degrees.push(deg);
            }
            pieces.push(Piece { idx, solver, frame, image_dim, ds_ids });
        }
    }
    let k = kept.len();
    let mut ds = Ds {
        kept: kept.clone(),
        module: GModule { n: k, labels: Vec::new(), parity, weights, action: Vec::new() },
        reps,
        h: grading.map(|_| degrees),
        pieces,
        location,
    };
    let action = q_basis(k)
        .into_iter()
        .map(|b| {
            let big = BasisElem { odd: b.odd, i: kept[b.i], j: kept[b.j] };
            let rho = m.rho(big);
            let columns = ds
                .reps
                .iter()
                .map(|r| ds.project(&rho.apply(r)).ok_or_else(|| Error::HypothesisViolated("g_x does not preserve ker x".into())))
                .collect::<Result<Vec<_>>>()?;
            Ok(SpMat { rows: ds.reps.len(), columns })
        })
        .collect::<Result<Vec<_>>>()?;
    ds.module.labels = (0..ds.reps.len()).map(|i| format!("d{i}")).collect();
    ds.module.action = action;
    Ok(ds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Q;
    use crate::supermatrix::{build_x, build_x_default};
    use queer_core::{Rat, XSpec};

    #[test]
    fn standard_module_drops_rank() {
        for n in 2..=4 {
            let v = GModule::<Q>::standard(n);
            let x = build_x_default::<Q>(&XSpec::nilpotent(), n).unwrap();
            let ds = ds_module(&v, &x, None).unwrap();
            assert_eq!(ds.sdim(), (n - 2, n - 2));
            ds.module.check_axioms().unwrap();
            let c = build_x_default::<Q>(&XSpec::c_r(1), n).unwrap();
            assert_eq!(ds_module(&v, &c, None).unwrap().sdim(), (n - 1, n - 1));
        }
    }

    #[test]
    fn zero_x_is_identity() {
        let v = GModule::<Q>::standard(2);
        let t = v.tensor(&v.dual());
        let ds = ds_module(&t, &QElem::zero(2), None).unwrap();
        assert_eq!(ds.sdim(), t.sdim());
        assert_eq!(ds.module.supercharacter(), t.supercharacter());
    }

    #[test]
    fn projection_rejects_non_cycles() {
        let v = GModule::<Q>::standard(2);
        let x = build_x::<Q>(&XSpec::nilpotent(), 2, &[0, 1]).unwrap();
        let ds = ds_module(&v, &x, nilpotent_grading(&x).as_deref()).unwrap();
        assert_eq!(ds.sdim(), (0, 0));
        let xm = v.act(&x);
        let non_cycle = (0..4).find(|&i| !xm.columns[i].is_empty()).unwrap();
        assert!(ds.project(&vec![(non_cycle, Q::from_i64(1))]).is_none());
    }

    #[test]
    fn non_semisimple_square_is_rejected() {
        // x = F_12 + F_23 has x^2 = E_13, which is nilpotent and nonzero.
        let x = QElem::<Q>::f(3, 0, 1).add(&QElem::f(3, 1, 2));
        let v = GModule::<Q>::standard(3);
        assert!(matches!(ds_module(&v, &x, None), Err(Error::NonSemisimpleSquare)));
        let v = GModule::<Q>::standard(2);
        let ok = XSpec::semisimple(&[Rat::from_integer(1), Rat::from_integer(-1)]).unwrap();
        assert!(ds_module(&v, &build_x_default::<Q>(&ok, 2).unwrap(), None).is_ok());
    }
}
