//! Modules over two anticommuting odd square-zero operators `x, y`, graded so that `x` and
//! `y` shift an integer degree by different amounts.
//!
//! The indecomposables are, up to parity change, the zigzags `V_s^+`, `V_s^-` with basis
//! `v_1, ..., v_s`, `p(v_{i+1}) = p(v_i) + 1`, edges alternating between `y v_{i+1} = v_i`
//! and `x v_i = v_{i+1}` (`V^+` starts with a `y` edge, `V^-` with an `x` edge), and the
//! free module `M_4` spanned by `u, xu, yu, xyu`.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;
use crate::sparse::{from_dense, to_dense, Echelon};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Shape {
    /// `V_s^+` (`plus = true`) or `V_s^-`; `V_1^+ = V_1^-` is always written with `plus`.
    Zigzag { len: usize, plus: bool },
    Free,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Summand {
    pub shape: Shape,
    /// Parity shift: `v_1` (or `u`) is odd.
    pub shifted: bool,
    /// Degree of `v_1` (or `u`).
    pub degree: i64,
}

impl fmt::Display for Summand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pi = if self.shifted { "Pi " } else { "" };
        match self.shape {
            Shape::Zigzag { len, plus } => write!(f, "{pi}V_{len}^{}@{}", if plus { '+' } else { '-' }, self.degree),
            Shape::Free => write!(f, "{pi}M4@{}", self.degree),
        }
    }
}

impl Summand {
    pub fn dim(&self) -> usize {
        match self.shape {
            Shape::Zigzag { len, .. } => len,
            Shape::Free => 4,
        }
    }
}

/// `N` with odd operators `x`, `y` and a degree per basis vector.
#[derive(Debug, Clone)]
pub struct Bimodule<F> {
    pub parity: Vec<bool>,
    pub degree: Vec<i64>,
    pub x: Matrix<F>,
    pub y: Matrix<F>,
    /// Degree shifts of `x` and `y`.
    pub cx: i64,
    pub cy: i64,
}

impl<F: Field> Bimodule<F> {
    pub fn dim(&self) -> usize {
        self.parity.len()
    }

    /// Direct sum of the given summands in their model bases.
    pub fn assemble(summands: &[Summand], cx: i64, cy: i64) -> Self {
        let d: usize = summands.iter().map(Summand::dim).sum();
        let mut b = Bimodule { parity: Vec::new(), degree: Vec::new(), x: Matrix::zeros(d, d), y: Matrix::zeros(d, d), cx, cy };
        for s in summands {
            let o = b.parity.len();
            match s.shape {
                Shape::Zigzag { len, plus } => {
                    let mut deg = s.degree;
                    for i in 0..len {
                        b.parity.push(s.shifted ^ (i % 2 == 1));
                        b.degree.push(deg);
                        if i + 1 == len {
                            break;
                        }
                        // Edge between v_{i+1} and v_{i+2} (1-based): y first for V^+.
                        let y_edge = (i % 2 == 0) == plus;
                        if y_edge {
                            b.y[(o + i, o + i + 1)] = F::one();
                            deg -= cy;
                        } else {
                            b.x[(o + i + 1, o + i)] = F::one();
                            deg += cx;
                        }
                    }
                }
                Shape::Free => {
                    let (u, xu, yu, xyu) = (o, o + 1, o + 2, o + 3);
                    b.parity.extend([s.shifted, !s.shifted, !s.shifted, s.shifted]);
                    b.degree.extend([s.degree, s.degree + cx, s.degree + cy, s.degree + cx + cy]);
                    b.x[(xu, u)] = F::one();
                    b.x[(xyu, yu)] = F::one();
                    b.y[(yu, u)] = F::one();
                    b.y[(xyu, xu)] = -F::one();
                }
            }
        }
        b
    }

    /// Conjugates by a random invertible map that preserves degree and parity.
    pub fn scramble<R: Rng>(&self, rng: &mut R) -> Self {
        let d = self.dim();
        let mut g = Matrix::<F>::zeros(d, d);
        let mut classes: BTreeMap<(i64, bool), Vec<usize>> = BTreeMap::new();
        for i in 0..d {
            classes.entry((self.degree[i], self.parity[i])).or_default().push(i);
        }
        for idx in classes.values() {
            loop {
                let k = idx.len();
                let mut block = Matrix::<F>::zeros(k, k);
                for r in 0..k {
                    for c in 0..k {
                        block[(r, c)] = F::from_i64(rng.gen_range(-2..=2));
                    }
                }
                if block.rank() == k {
                    for r in 0..k {
                        for c in 0..k {
                            g[(idx[r], idx[c])] = block[(r, c)].clone();
                        }
                    }
                    break;
                }
            }
        }
        let gi = g.left_inverse().expect("invertible by construction");
        Bimodule { x: g.mul(&self.x).mul(&gi), y: g.mul(&self.y).mul(&gi), ..self.clone() }
    }

    pub fn check_hypotheses(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::HypothesisViolated(m.into()));
        if self.cx == self.cy {
            return bad("x and y must shift the degree by different amounts");
        }
        if !self.x.mul(&self.x).is_zero() || !self.y.mul(&self.y).is_zero() {
            return bad("x^2 and y^2 must vanish");
        }
        if !self.x.mul(&self.y).add(&self.y.mul(&self.x)).is_zero() {
            return bad("x and y must anticommute");
        }
        for (m, c) in [(&self.x, self.cx), (&self.y, self.cy)] {
            for r in 0..self.dim() {
                for col in 0..self.dim() {
                    if !m[(r, col)].is_zero() && (self.parity[r] == self.parity[col] || self.degree[r] != self.degree[col] + c) {
                        return bad("operators must be odd and homogeneous");
                    }
                }
            }
        }
        Ok(())
    }
}

/// `(even | odd)` dimension of `ker z / im z` for a square-zero odd `z`.
pub fn homology_sdim<F: Field>(z: &Matrix<F>, parity: &[bool]) -> (usize, usize) {
    let mut out = [0usize; 2];
    for p in [false, true] {
        let cols: Vec<usize> = (0..parity.len()).filter(|&i| parity[i] == p).collect();
        let src: Vec<usize> = (0..parity.len()).filter(|&i| parity[i] != p).collect();
        let ker = z.select_columns(&cols).kernel().len();
        let im = z.select_columns(&src).rank();
        out[usize::from(p)] = ker - im;
    }
    (out[0], out[1])
}

/// `dim DS_{x+y}(N)`.
pub fn ds_sum<F: Field>(n: &Bimodule<F>) -> (usize, usize) {
    homology_sdim(&n.x.add(&n.y), &n.parity)
}

/// `dim DS_xbar(DS_y(N))`.
pub fn ds_composite<F: Field>(n: &Bimodule<F>) -> (usize, usize) {
    let d = n.dim();
    // Homogeneous cycles of y, then a complement of the boundaries inside them.
    let mut frame_cols: Vec<Vec<F>> = Vec::new();
    let mut reps = Vec::new();
    let mut ech = Echelon::new();
    for p in [false, true] {
        let src: Vec<usize> = (0..d).filter(|&i| n.parity[i] != p).collect();
        for v in n.y.select_columns(&src).image() {
            if ech.insert(from_dense(&v)) {
                frame_cols.push(v);
            }
        }
    }
    let image_dim = frame_cols.len();
    let mut rep_parity = Vec::new();
    for p in [false, true] {
        let cols: Vec<usize> = (0..d).filter(|&i| n.parity[i] == p).collect();
        for k in n.y.select_columns(&cols).kernel() {
            let mut v = vec![F::zero(); d];
            for (c, a) in cols.iter().zip(k) {
                v[*c] = a;
            }
            if ech.insert(from_dense(&v)) {
                frame_cols.push(v.clone());
                reps.push(v);
                rep_parity.push(p);
            }
        }
    }
    if reps.is_empty() {
        return (0, 0);
    }
    let frame = Matrix::from_columns(d, &frame_cols);
    let solver = frame.left_inverse().expect("independent");
    let mut xbar = Matrix::zeros(reps.len(), reps.len());
    for (j, r) in reps.iter().enumerate() {
        let c = solver.mul_vec(&n.x.mul_vec(r));
        for i in 0..reps.len() {
            xbar[(i, j)] = c[image_dim + i].clone();
        }
    }
    homology_sdim(&xbar, &rep_parity)
}

pub fn image_intersection_dim<F: Field>(n: &Bimodule<F>) -> usize {
    let xi = n.x.image();
    let yi = n.y.image();
    let sum = Matrix::from_columns(n.dim(), &xi.iter().chain(&yi).cloned().collect::<Vec<_>>()).rank();
    xi.len() + yi.len() - sum
}

/// The summands predicted for `DS_{x+y}`: `(1|0)` (or `(0|1)`) for odd-length zigzags,
/// nothing for even-length zigzags and for `M_4`.
pub fn predicted_ds_sum(summands: &[Summand]) -> (usize, usize) {
    let mut out = (0, 0);
    for s in summands {
        if let Shape::Zigzag { len, .. } = s.shape {
            if len % 2 == 1 {
                if s.shifted {
                    out.1 += 1;
                } else {
                    out.0 += 1;
                }
            }
        }
    }
    out
}

fn rank_of<F: Field>(cols: &[Vec<F>], len: usize) -> usize {
    if cols.is_empty() {
        0
    } else {
        Matrix::from_columns(len, cols).rank()
    }
}

/// A node of the bipartite quiver: the part of `N'` outside (`top`) or inside the image.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct Node {
    top: bool,
    degree: i64,
    odd: bool,
}

struct Quiver<F> {
    nodes: Vec<Node>,
    dims: Vec<usize>,
    /// `(source, target, is_x, matrix target x source)`.
    arrows: Vec<(usize, usize, bool, Matrix<F>)>,
}

impl<F: Field> Quiver<F> {
    /// `dim` of the image of `lim -> colim` over the nodes `path[i..=j]`.
    fn interval_rank(&self, path: &[usize], steps: &[usize], i: usize, j: usize) -> usize {
        let nodes = &path[i..=j];
        let offsets: Vec<usize> = nodes.iter().scan(0, |acc, &v| { let o = *acc; *acc += self.dims[v]; Some(o) }).collect();
        let total: usize = nodes.iter().map(|&v| self.dims[v]).sum();
        let at = |v: usize| -> usize { offsets[nodes.iter().position(|&w| w == v).expect("on path")] };
        // Constraints A v_s - v_t = 0 and relations e_s w - e_t A w.
        let mut constraint_rows: Vec<Vec<F>> = Vec::new();
        let mut relations: Vec<Vec<F>> = Vec::new();
        for &a in &steps[i..j] {
            let (s, t, _, m) = &self.arrows[a];
            let (os, ot) = (at(*s), at(*t));
            for r in 0..self.dims[*t] {
                let mut row = vec![F::zero(); total];
                for c in 0..self.dims[*s] {
                    row[os + c] = m[(r, c)].clone();
                }
                row[ot + r] -= F::one();
                constraint_rows.push(row);
            }
            for c in 0..self.dims[*s] {
                let mut v = vec![F::zero(); total];
                v[os + c] = F::one();
                for r in 0..self.dims[*t] {
                    v[ot + r] -= m[(r, c)].clone();
                }
                relations.push(v);
            }
        }
        let lim: Vec<Vec<F>> = if constraint_rows.is_empty() {
            (0..total).map(|k| to_dense(&vec![(k, F::one())], total)).collect()
        } else {
            Matrix::from_rows(constraint_rows).kernel()
        };
        let o = offsets[0];
        let first: Vec<Vec<F>> = lim
            .iter()
            .map(|f| {
                let mut v = vec![F::zero(); total];
                for k in 0..self.dims[nodes[0]] {
                    v[o + k] = f[o + k].clone();
                }
                v
            })
            .collect();
        let base = rank_of(&relations, total);
        let both: Vec<Vec<F>> = relations.iter().chain(&first).cloned().collect();
        rank_of(&both, total) - base
    }
}

/// Recovers the summands of `N`.
pub fn zigzag_decompose<F: Field>(n: &Bimodule<F>) -> Result<Vec<Summand>> {
    n.check_hypotheses()?;
    let d = n.dim();
    let mut out = Vec::new();

    // Free summands: generators u with xy u spanning im(xy).
    let xy = n.x.mul(&n.y);
    let mut free = Echelon::new();
    let mut gens = Vec::new();
    let mut img = Echelon::new();
    for i in 0..d {
        let col = from_dense(&xy.column(i));
        if !col.is_empty() && img.insert(col) {
            gens.push(i);
        }
    }
    for &u in &gens {
        let e = to_dense(&vec![(u, F::one())], d);
        let xu = n.x.mul_vec(&e);
        let yu = n.y.mul_vec(&e);
        let xyu = n.x.mul_vec(&yu);
        for v in [e, xu, yu, xyu] {
            free.insert(from_dense(&v));
        }
        out.push(Summand { shape: Shape::Free, shifted: n.parity[u], degree: n.degree[u] });
    }
    let pivots: std::collections::BTreeSet<usize> = free.pivots().collect();
    let keep: Vec<usize> = (0..d).filter(|i| !pivots.contains(i)).collect();
    let dq = keep.len();
    let project = |v: &[F]| -> Vec<F> {
        let (r, _) = free.reduce(&from_dense(v));
        let full = to_dense(&r, d);
        keep.iter().map(|&i| full[i].clone()).collect()
    };
    let lift = |k: usize| -> Vec<F> { to_dense(&vec![(keep[k], F::one())], d) };
    let xq = Matrix::from_columns(dq, &(0..dq).map(|k| project(&n.x.mul_vec(&lift(k)))).collect::<Vec<_>>());
    let yq = Matrix::from_columns(dq, &(0..dq).map(|k| project(&n.y.mul_vec(&lift(k)))).collect::<Vec<_>>());
    let parity: Vec<bool> = keep.iter().map(|&i| n.parity[i]).collect();
    let degree: Vec<i64> = keep.iter().map(|&i| n.degree[i]).collect();
    if !xq.mul(&yq).is_zero() {
        return Err(Error::HypothesisViolated("xy does not vanish after removing free summands".into()));
    }

    // Split N' = U + W per (degree, parity), W = xN' + yN'.
    let mut classes: BTreeMap<(i64, bool), Vec<usize>> = BTreeMap::new();
    for i in 0..dq {
        classes.entry((degree[i], parity[i])).or_default().push(i);
    }
    let mut w_all: Vec<Vec<F>> = xq.image();
    w_all.extend(yq.image());
    let mut nodes = Vec::new();
    let mut bases: Vec<Vec<Vec<F>>> = Vec::new();
    let mut w_solvers: BTreeMap<(i64, bool), (usize, Matrix<F>, Matrix<F>)> = BTreeMap::new();
    for (&(deg, odd), idx) in &classes {
        let mut ech = Echelon::new();
        let mut w_basis = Vec::new();
        for v in &w_all {
            let part: Vec<F> = (0..dq).map(|i| if idx.contains(&i) { v[i].clone() } else { F::zero() }).collect();
            if !from_dense(&part).is_empty() && ech.insert(from_dense(&part)) {
                w_basis.push(part);
            }
        }
        let mut u_basis = Vec::new();
        for &i in idx {
            let e = to_dense(&vec![(i, F::one())], dq);
            if ech.insert(from_dense(&e)) {
                u_basis.push(e);
            }
        }
        if !w_basis.is_empty() {
            let frame = Matrix::from_columns(dq, &w_basis);
            w_solvers.insert((deg, odd), (nodes.len(), frame.left_inverse().expect("independent"), frame));
            nodes.push(Node { top: false, degree: deg, odd });
            bases.push(w_basis);
        }
        if !u_basis.is_empty() {
            nodes.push(Node { top: true, degree: deg, odd });
            bases.push(u_basis);
        }
    }
    let dims: Vec<usize> = bases.iter().map(Vec::len).collect();
    let mut arrows = Vec::new();
    for (s, node) in nodes.iter().enumerate() {
        if !node.top {
            continue;
        }
        for (is_x, op, shift) in [(true, &xq, n.cx), (false, &yq, n.cy)] {
            let key = (node.degree + shift, !node.odd);
            let images: Vec<Vec<F>> = bases[s].iter().map(|v| op.mul_vec(v)).collect();
            if images.iter().all(|v| v.iter().all(|a| a.is_zero())) {
                continue;
            }
            let (t, solver, _) = w_solvers.get(&key).ok_or_else(|| Error::HypothesisViolated("image outside W".into()))?;
            let cols: Vec<Vec<F>> = images.iter().map(|v| solver.mul_vec(v)).collect();
            arrows.push((s, *t, is_x, Matrix::from_columns(dims[*t], &cols)));
        }
    }
    let quiver = Quiver { nodes, dims, arrows };

    // Walk the components, which are paths.
    let k = quiver.nodes.len();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); k];
    for (a, (s, t, _, _)) in quiver.arrows.iter().enumerate() {
        adj[*s].push(a);
        adj[*t].push(a);
    }
    if adj.iter().any(|v| v.len() > 2) {
        return Err(Error::HypothesisViolated("quiver node of valence above two".into()));
    }
    let mut seen = vec![false; k];
    let mut order: Vec<usize> = (0..k).filter(|&v| adj[v].len() < 2).collect();
    order.extend((0..k).filter(|&v| adj[v].len() == 2));
    for start in order {
        if seen[start] {
            continue;
        }
        if adj[start].len() == 2 {
            return Err(Error::HypothesisViolated("cyclic quiver component".into()));
        }
        let mut path = vec![start];
        let mut steps = Vec::new();
        seen[start] = true;
        let mut cur = start;
        let mut via = usize::MAX;
        while let Some(&a) = adj[cur].iter().find(|&&a| a != via) {
            let (s, t, _, _) = &quiver.arrows[a];
            let next = if *s == cur { *t } else { *s };
            steps.push(a);
            path.push(next);
            seen[next] = true;
            via = a;
            cur = next;
        }
        let len = path.len();
        let rk = |i: isize, j: usize| -> i64 {
            if i < 0 || j >= len {
                0
            } else {
                quiver.interval_rank(&path, &steps, i as usize, j) as i64
            }
        };
        for i in 0..len {
            for j in i..len {
                let m = rk(i as isize, j) - rk(i as isize - 1, j) - rk(i as isize, j + 1) + rk(i as isize - 1, j + 1);
                if m < 0 {
                    return Err(Error::HypothesisViolated("negative interval multiplicity".into()));
                }
                for _ in 0..m {
                    out.push(interval_summand(&quiver, &path, &steps, i, j));
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

fn interval_summand<F: Field>(q: &Quiver<F>, path: &[usize], steps: &[usize], i: usize, j: usize) -> Summand {
    let node = |v: usize| q.nodes[path[v]];
    if i == j {
        let nd = node(i);
        return Summand { shape: Shape::Zigzag { len: 1, plus: true }, shifted: nd.odd, degree: nd.degree };
    }
    // v_1 is the source of an x edge or the target of a y edge.
    let fits = |end: usize, step: usize| -> Option<bool> {
        let (_, _, is_x, _) = &q.arrows[steps[step]];
        let top = node(end).top;
        if *is_x == top {
            Some(!*is_x)
        } else {
            None
        }
    };
    let (v1, plus) = match fits(i, i) {
        Some(plus) => (i, plus),
        None => (j, fits(j, j - 1).expect("one end starts the zigzag")),
    };
    let nd = node(v1);
    Summand { shape: Shape::Zigzag { len: j - i + 1, plus }, shifted: nd.odd, degree: nd.degree }
}

/// A random direct sum: up to `max_summands` pieces, zigzags of length at most `max_len`.
pub fn random_summands<R: Rng>(rng: &mut R, max_summands: usize, max_len: usize) -> (Vec<Summand>, i64, i64) {
    let cx = rng.gen_range(-3..=3);
    let cy = loop {
        let c = rng.gen_range(-3..=3);
        if c != cx {
            break c;
        }
    };
    let count = rng.gen_range(1..=max_summands);
    let mut s: Vec<Summand> = (0..count)
        .map(|_| {
            let shape = if rng.gen_bool(0.2) {
                Shape::Free
            } else {
                let len = rng.gen_range(1..=max_len);
                Shape::Zigzag { len, plus: len == 1 || rng.gen_bool(0.5) }
            };
            Summand { shape, shifted: rng.gen_bool(0.5), degree: rng.gen_range(-3..=3) }
        })
        .collect();
    s.sort();
    (s, cx, cy)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Q;

    fn z(len: usize, plus: bool) -> Summand {
        Summand { shape: Shape::Zigzag { len, plus }, shifted: false, degree: 0 }
    }

    #[test]
    fn table_examples() {
        let v3 = Bimodule::<Q>::assemble(&[z(3, true)], 1, 2);
        v3.check_hypotheses().unwrap();
        assert_eq!(ds_sum(&v3), (1, 0));
        let v2m = Bimodule::<Q>::assemble(&[z(2, false)], 1, 2);
        assert_eq!(ds_sum(&v2m), (0, 0));
        assert_eq!(ds_composite(&v2m), (0, 0));
        assert_eq!(homology_sdim(&v2m.y, &v2m.parity), (1, 1));
        let v4m = Bimodule::<Q>::assemble(&[z(4, false)], 1, 2);
        assert_eq!(ds_composite(&v4m), (1, 1));
        assert_eq!(ds_sum(&v4m), (0, 0));
    }

    #[test]
    fn decompose_models() {
        let s = vec![
            z(1, true),
            z(2, true),
            z(2, false),
            z(5, false),
            Summand { shape: Shape::Free, shifted: true, degree: 1 },
        ];
        let mut s = s;
        s.sort();
        let n = Bimodule::<Q>::assemble(&s, 2, -1);
        assert_eq!(zigzag_decompose(&n).unwrap(), s);
    }

    #[test]
    fn hypotheses() {
        let mut n = Bimodule::<Q>::assemble(&[z(3, true)], 1, 1);
        assert!(zigzag_decompose(&n).is_err());
        n.cy = 2;
        n.x[(0, 0)] = Q::from_i64(1);
        assert!(matches!(n.check_hypotheses(), Err(Error::HypothesisViolated(_))));
    }
}
