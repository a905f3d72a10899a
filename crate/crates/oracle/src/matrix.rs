//! Dense matrices with exact Gaussian elimination.

use std::fmt;

use crate::field::Field;

#[derive(Clone, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: fmt::Debug> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| format!("{:?}", self[(r, c)])).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        Ok(())
    }
}

impl<F> std::ops::Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (r, c): (usize, usize)) -> &F {
        &self.data[r * self.cols + c]
    }
}

impl<F> std::ops::IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut F {
        &mut self.data[r * self.cols + c]
    }
}

/// Reduced row echelon form together with its pivot columns.
pub struct Rref<F> {
    pub matrix: Matrix<F>,
    pub pivots: Vec<usize>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Matrix { rows: rows.len(), cols, data: rows.into_iter().flatten().collect() }
    }

    /// The matrix whose columns are the given vectors of length `rows`.
    pub fn from_columns(rows: usize, cols: &[Vec<F>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (c, v) in cols.iter().enumerate() {
            assert_eq!(v.len(), rows);
            for (r, x) in v.iter().enumerate() {
                m[(r, c)] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<F> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix<F>) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = F::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a.clone() * b.clone();
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix<F>) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.clone() + b.clone()).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &F) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a.clone() * s.clone()).collect() }
    }

    /// Columns `cols` of `self`, in that order.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut m = Self::zeros(self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                m[(r, j)] = self[(r, c)].clone();
            }
        }
        m
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let mut m = Self::zeros(rows.len(), self.cols);
        for (i, &r) in rows.iter().enumerate() {
            for c in 0..self.cols {
                m[(i, c)] = self[(r, c)].clone();
            }
        }
        m
    }

    pub fn rref(&self) -> Rref<F> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else { continue };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = F::one() / m[(r, c)].clone();
            for j in c..m.cols {
                let v = m[(r, j)].clone() * inv.clone();
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    if !m[(r, j)].is_zero() {
                        let v = m[(i, j)].clone() - f.clone() * m[(r, j)].clone();
                        m[(i, j)] = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// A basis of the null space.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let Rref { matrix, pivots } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![F::zero(); self.cols];
                v[f] = F::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -matrix[(i, f)].clone();
                }
                v
            })
            .collect()
    }

    /// A basis of the column space, taken from the columns themselves.
    pub fn image(&self) -> Vec<Vec<F>> {
        self.rref().pivots.iter().map(|&c| self.column(c)).collect()
    }

    /// Some `v` with `self * v = b`.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug[(r, c)] = self[(r, c)].clone();
            }
            aug[(r, self.cols)] = b[r].clone();
        }
        let Rref { matrix, pivots } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut v = vec![F::zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = matrix[(i, self.cols)].clone();
        }
        Some(v)
    }

    /// A left inverse `L` with `L * self = I`, when the columns are independent.
    pub fn left_inverse(&self) -> Option<Matrix<F>> {
        let n = self.cols;
        let mut aug = Self::zeros(self.rows, n + self.rows);
        for r in 0..self.rows {
            for c in 0..n {
                aug[(r, c)] = self[(r, c)].clone();
            }
            aug[(r, n + r)] = F::one();
        }
        let Rref { matrix, pivots } = aug.rref();
        if n > 0 && (pivots.len() < n || pivots[n - 1] != n - 1) {
            return None;
        }
        let mut l = Self::zeros(n, self.rows);
        for i in 0..n {
            for j in 0..self.rows {
                l[(i, j)] = matrix[(i, n + j)].clone();
            }
        }
        Some(l)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Q;
    use num_traits::Zero;

    fn m(rows: &[&[i64]]) -> Matrix<Q> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Q::from_i64(x)).collect()).collect())
    }

    #[test]
    fn rank_kernel_solve() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let k = a.kernel();
        assert_eq!(k.len(), 1);
        assert!(a.mul_vec(&k[0]).iter().all(Q::is_zero));
        let b = a.mul_vec(&[Q::from_i64(1), Q::from_i64(1), Q::from_i64(1)]);
        let x = a.solve(&b).unwrap();
        assert_eq!(a.mul_vec(&x), b);
        assert!(a.solve(&[Q::from_i64(1), Q::from_i64(0), Q::from_i64(0)]).is_none());
        assert_eq!(a.image().len(), 2);
    }

    #[test]
    fn left_inverse() {
        let a = m(&[&[1, 0], &[1, 1], &[0, 2]]);
        let l = a.left_inverse().unwrap();
        assert_eq!(l.mul(&a), Matrix::identity(2));
        assert!(m(&[&[1, 2], &[2, 4]]).left_inverse().is_none());
    }

    #[test]
    fn products() {
        let a = m(&[&[0, 1], &[0, 0]]);
        assert!(a.mul(&a).is_zero());
        assert_eq!(a.transpose().mul(&a), m(&[&[0, 0], &[0, 1]]));
    }
}
