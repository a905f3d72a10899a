//! Univariate polynomials, enough for minimal polynomials and a squarefree test.

use crate::field::Field;
use crate::matrix::Matrix;

/// Coefficients from the constant term up, with no trailing zeros.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly<F>(pub Vec<F>);

impl<F: Field> Poly<F> {
    pub fn new(mut c: Vec<F>) -> Self {
        while c.last().is_some_and(F::is_zero) {
            c.pop();
        }
        Poly(c)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn derivative(&self) -> Self {
        Poly::new(self.0.iter().enumerate().skip(1).map(|(i, c)| c.clone() * F::from_i64(i as i64)).collect())
    }

    pub fn rem(&self, d: &Poly<F>) -> Self {
        let dd = d.degree().expect("division by zero polynomial");
        let lead = d.0[dd].clone();
        let mut r = self.0.clone();
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1;
            let f = r[k].clone() / lead.clone();
            for (i, c) in d.0.iter().enumerate() {
                let v = r[k - dd + i].clone() - f.clone() * c.clone();
                r[k - dd + i] = v;
            }
            r.pop();
            while r.last().is_some_and(F::is_zero) {
                r.pop();
            }
        }
        Poly::new(r)
    }

    pub fn gcd(&self, other: &Poly<F>) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }

    /// No repeated roots over the algebraic closure.
    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }
}

/// The monic minimal polynomial of a square matrix: the first linear dependency among
/// `I, A, A^2, ...`.
pub fn minimal_polynomial<F: Field>(a: &Matrix<F>) -> Poly<F> {
    let n = a.rows();
    assert_eq!(n, a.cols());
    if n == 0 {
        return Poly(vec![F::one()]);
    }
    let flat = |m: &Matrix<F>| -> Vec<F> { (0..n).flat_map(|r| m.row(r).to_vec()).collect() };
    let mut powers = vec![flat(&Matrix::identity(n))];
    let mut cur = Matrix::identity(n);
    loop {
        cur = cur.mul(a);
        let target = flat(&cur);
        let basis = Matrix::from_columns(n * n, &powers);
        if let Some(c) = basis.solve(&target) {
            let mut coeffs: Vec<F> = c.into_iter().map(|x| -x).collect();
            coeffs.push(F::one());
            return Poly::new(coeffs);
        }
        powers.push(target);
    }
}
