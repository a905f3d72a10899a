//! Elements `T_{A,B} = [[A, B], [B, A]]` of `q(n)` and the odd elements `x`.
//!
//! Indices are 0-based throughout the oracle.

use queer_core::XSpec;

use crate::error::{Error, Result};
use crate::field::{from_rat, Field};
use crate::matrix::Matrix;

#[derive(Clone, PartialEq)]
pub struct QElem<F> {
    pub a: Matrix<F>,
    pub b: Matrix<F>,
}

impl<F: std::fmt::Debug> std::fmt::Debug for QElem<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "T(A = {:?}, B = {:?})", self.a, self.b)
    }
}

impl<F: Field> QElem<F> {
    pub fn zero(n: usize) -> Self {
        QElem { a: Matrix::zeros(n, n), b: Matrix::zeros(n, n) }
    }

    pub fn n(&self) -> usize {
        self.a.rows()
    }

    /// `T_{E_ij, 0}`.
    pub fn e(n: usize, i: usize, j: usize) -> Self {
        let mut x = Self::zero(n);
        x.a[(i, j)] = F::one();
        x
    }

    /// `T_{0, E_ij}`.
    pub fn f(n: usize, i: usize, j: usize) -> Self {
        let mut x = Self::zero(n);
        x.b[(i, j)] = F::one();
        x
    }

    /// `H_i = T_{0, E_ii}`.
    pub fn h_odd(n: usize, i: usize) -> Self {
        Self::f(n, i, i)
    }

    /// `T_{Id, 0}`, central in `q(n)`.
    pub fn identity(n: usize) -> Self {
        QElem { a: Matrix::identity(n), b: Matrix::zeros(n, n) }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// `Some(false)` for even, `Some(true)` for odd, `None` when mixed; zero counts as even.
    pub fn parity(&self) -> Option<bool> {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => Some(false),
            (true, false) => Some(true),
            _ => None,
        }
    }

    pub fn even_part(&self) -> Self {
        QElem { a: self.a.clone(), b: Matrix::zeros(self.n(), self.n()) }
    }

    pub fn odd_part(&self) -> Self {
        QElem { a: Matrix::zeros(self.n(), self.n()), b: self.b.clone() }
    }

    pub fn add(&self, o: &Self) -> Self {
        QElem { a: self.a.add(&o.a), b: self.b.add(&o.b) }
    }

    pub fn scale(&self, s: &F) -> Self {
        QElem { a: self.a.scale(s), b: self.b.scale(s) }
    }

    /// `T_{A,B} T_{C,D} = T_{AC+BD, AD+BC}`.
    pub fn mul(&self, o: &Self) -> Self {
        QElem { a: self.a.mul(&o.a).add(&self.b.mul(&o.b)), b: self.a.mul(&o.b).add(&self.b.mul(&o.a)) }
    }

    /// The super bracket, extended bilinearly from homogeneous parts.
    pub fn bracket(&self, o: &Self) -> Self {
        let mut out = Self::zero(self.n());
        for (u, pu) in [(self.even_part(), false), (self.odd_part(), true)] {
            for (v, pv) in [(o.even_part(), false), (o.odd_part(), true)] {
                if u.is_zero() || v.is_zero() {
                    continue;
                }
                let sign = if pu && pv { F::one() } else { -F::one() };
                out = out.add(&u.mul(&v)).add(&v.mul(&u).scale(&sign));
            }
        }
        out
    }

    /// Coordinates in the standard basis of [`q_basis`].
    pub fn to_flat(&self) -> Vec<F> {
        let n = self.n();
        (0..n).flat_map(|r| self.a.row(r).to_vec()).chain((0..n).flat_map(|r| self.b.row(r).to_vec())).collect()
    }

    pub fn from_flat(n: usize, v: &[F]) -> Self {
        assert_eq!(v.len(), 2 * n * n);
        let mut x = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                x.a[(i, j)] = v[i * n + j].clone();
                x.b[(i, j)] = v[n * n + i * n + j].clone();
            }
        }
        x
    }

    /// Rows and columns `idx` only.
    pub fn restrict(&self, idx: &[usize]) -> Self {
        QElem { a: self.a.select_rows(idx).select_columns(idx), b: self.b.select_rows(idx).select_columns(idx) }
    }

    /// Places `self` (of size `idx.len()`) on rows and columns `idx` of a size `n` element.
    pub fn embed(&self, n: usize, idx: &[usize]) -> Self {
        let mut x = Self::zero(n);
        for (p, &i) in idx.iter().enumerate() {
            for (q, &j) in idx.iter().enumerate() {
                x.a[(i, j)] = self.a[(p, q)].clone();
                x.b[(i, j)] = self.b[(p, q)].clone();
            }
        }
        x
    }

    /// Indices whose row and column vanish in both blocks.
    pub fn untouched_indices(&self) -> Vec<usize> {
        let n = self.n();
        (0..n)
            .filter(|&k| {
                (0..n).all(|t| {
                    self.a[(k, t)].is_zero() && self.a[(t, k)].is_zero() && self.b[(k, t)].is_zero() && self.b[(t, k)].is_zero()
                })
            })
            .collect()
    }
}

/// A basis element of `q(n)`: `E_ij` (even) or `F_ij` (odd).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisElem {
    pub odd: bool,
    pub i: usize,
    pub j: usize,
}

impl BasisElem {
    /// Position in the standard ordering: all `E_ij` row-major, then all `F_ij`.
    pub fn index(self, n: usize) -> usize {
        usize::from(self.odd) * n * n + self.i * n + self.j
    }

    pub fn from_index(n: usize, k: usize) -> Self {
        let (odd, r) = (k >= n * n, k % (n * n));
        BasisElem { odd, i: r / n, j: r % n }
    }

    pub fn to_elem<F: Field>(self, n: usize) -> QElem<F> {
        if self.odd {
            QElem::f(n, self.i, self.j)
        } else {
            QElem::e(n, self.i, self.j)
        }
    }

    /// Weight `eps_i - eps_j`.
    pub fn weight(self, n: usize) -> Vec<i64> {
        let mut w = vec![0; n];
        w[self.i] += 1;
        w[self.j] -= 1;
        w
    }

    pub fn label(self) -> String {
        format!("{}{}{}", if self.odd { "F" } else { "E" }, self.i + 1, self.j + 1)
    }
}

pub fn q_basis(n: usize) -> Vec<BasisElem> {
    (0..2 * n * n).map(|k| BasisElem::from_index(n, k)).collect()
}

/// The element `x = sum_p T_{0, E_{j_{2p-1} j_{2p}}} + sum_t c_t H_{j_t}` on the index list
/// `j`: nilpotent pairs first, then one index per semisimple coefficient.
pub fn build_x<F: Field>(spec: &XSpec, n: usize, j: &[usize]) -> Result<QElem<F>> {
    if j.len() != spec.support_size() {
        return Err(Error::BadIndexSet(format!("need {} indices, got {}", spec.support_size(), j.len())));
    }
    let mut seen = vec![false; n];
    for &k in j {
        if k >= n || std::mem::replace(&mut seen[k], true) {
            return Err(Error::BadIndexSet(format!("index {k} repeated or out of range for n = {n}")));
        }
    }
    let mut x = QElem::zero(n);
    let p = spec.nil_pairs();
    for t in 0..p {
        x.b[(j[2 * t], j[2 * t + 1])] = F::one();
    }
    for (t, c) in spec.ss_coeffs().iter().enumerate() {
        let k = j[2 * p + t];
        x.b[(k, k)] = from_rat(c);
    }
    Ok(x)
}

/// [`build_x`] on the first indices.
pub fn build_x_default<F: Field>(spec: &XSpec, n: usize) -> Result<QElem<F>> {
    let j: Vec<usize> = (0..spec.support_size()).collect();
    build_x(spec, n, &j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Q;
    use num_traits::Zero;
    use queer_core::Rat;

    #[test]
    fn brackets() {
        let n = 2;
        let h1 = QElem::<Q>::h_odd(n, 0);
        // [H_1, H_1] = 2 T_{E_11, 0}
        assert_eq!(h1.bracket(&h1), QElem::e(n, 0, 0).scale(&Q::from_i64(2)));
        let x = QElem::<Q>::f(n, 0, 1);
        assert!(x.bracket(&x).is_zero());
        let e = QElem::<Q>::e(n, 0, 1);
        assert_eq!(QElem::e(n, 0, 0).bracket(&e), e);
        assert_eq!(QElem::<Q>::identity(n).bracket(&x), QElem::zero(n));
    }

    #[test]
    fn x_shapes() {
        let c = build_x_default::<Q>(&XSpec::c_r(2), 3).unwrap();
        assert_eq!(c, QElem::h_odd(3, 0).add(&QElem::h_odd(3, 1)));
        let nil = build_x::<Q>(&XSpec::nilpotent(), 3, &[1, 2]).unwrap();
        assert_eq!(nil, QElem::f(3, 1, 2));
        assert_eq!(nil.untouched_indices(), vec![0]);
        let ss = XSpec::semisimple(&[Rat::from_integer(1), Rat::from_integer(-1)]).unwrap();
        let s = build_x_default::<Q>(&ss, 2).unwrap();
        assert!(s.bracket(&s).b.is_zero());
        assert!(s.bracket(&s).a[(0, 1)].is_zero());
        assert!(matches!(build_x::<Q>(&XSpec::nilpotent(), 3, &[1]), Err(Error::BadIndexSet(_))));
        assert!(matches!(build_x::<Q>(&XSpec::nilpotent(), 3, &[1, 1]), Err(Error::BadIndexSet(_))));
        assert!(matches!(build_x::<Q>(&XSpec::nilpotent(), 2, &[1, 2]), Err(Error::BadIndexSet(_))));
    }

    #[test]
    fn basis_indexing() {
        for k in 0..18 {
            assert_eq!(BasisElem::from_index(3, k).index(3), k);
        }
        let y: QElem<Q> = BasisElem { odd: true, i: 1, j: 0 }.to_elem(2);
        assert_eq!(QElem::from_flat(2, &y.to_flat()), y);
    }
}
