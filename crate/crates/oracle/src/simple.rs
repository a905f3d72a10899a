//! Simple modules `L(lambda)` of `q(n)`, `n <= 3`, cut out of `V^{(x)a} (x) V*^{(x)b}`.
//!
//! A highest weight vector of weight `lambda` is chosen so that it generates an irreducible
//! module over the Clifford algebra of the odd Cartan elements: it is killed by `H_z` for
//! every zero coordinate `z`, and is an eigenvector of `H_a H_b` for paired nonzero
//! coordinates. The cyclic module it generates is then divided by the submodules generated
//! by singular vectors of other weights until none are left.

use queer_core::Weight;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;
use crate::module::GModule;
use crate::sparse::{from_dense, to_dense, SVec};
use crate::supermatrix::BasisElem;

/// Rounds of "divide by lower singular vectors" before giving up.
pub const MAX_ROUNDS: usize = 10;
/// Largest `|lambda_i|` accepted.
pub const MAX_COORD: i64 = 4;
/// Largest tensor power `a + b` tried.
pub const MAX_FACTORS: usize = 6;

fn integral_coords(l: &Weight) -> Result<Vec<i64>> {
    l.coords()
        .iter()
        .map(|c| {
            if c.is_integer() && c.to_integer().abs() <= MAX_COORD {
                Ok(c.to_integer())
            } else {
                Err(Error::WeightNotFoundInTensorRange(l.to_string()))
            }
        })
        .collect()
}

pub fn tensor_space<F: Field>(n: usize, a: usize, b: usize) -> GModule<F> {
    let v = GModule::<F>::standard(n);
    let d = v.dual();
    let mut t = GModule::<F>::trivial(n);
    for _ in 0..a {
        t = t.tensor(&v);
    }
    for _ in 0..b {
        t = t.tensor(&d);
    }
    t
}

/// Solves for the matrix of `op` on the span of `basis`, which `op` must preserve.
fn restrict<F: Field>(basis: &[Vec<F>], images: &[Vec<F>]) -> Option<Matrix<F>> {
    let len = basis.first().map_or(0, Vec::len);
    let frame = Matrix::from_columns(len, basis);
    let cols: Option<Vec<Vec<F>>> = images.iter().map(|w| frame.solve(w)).collect();
    Some(Matrix::from_columns(basis.len(), &cols?))
}

fn apply_dense<F: Field>(m: &GModule<F>, b: BasisElem, v: &[F]) -> Vec<F> {
    to_dense(&m.rho(b).apply(&from_dense(v)), m.dim())
}

/// A homogeneous highest weight vector of weight `lambda` generating an irreducible
/// Clifford module, if `t` has one.
fn clifford_vector<F: Field>(t: &GModule<F>, lam: &[i64]) -> Option<SVec<F>> {
    let n = t.n;
    let classes = t.classes();
    let zeros: Vec<usize> = (0..n).filter(|&i| lam[i] == 0).collect();
    let nonzero: Vec<usize> = (0..n).filter(|&i| lam[i] != 0).collect();
    let pairs = rational_pairing::<F>(&nonzero, lam)?;
    for parity in [false, true] {
        let Some(idx) = classes.get(&(lam.to_vec(), parity)) else { continue };
        let mut space: Vec<Vec<F>> = t.singular_in(idx).iter().map(|v| to_dense(v, t.dim())).collect();
        for &z in &zeros {
            if space.is_empty() {
                break;
            }
            let hz = BasisElem { odd: true, i: z, j: z };
            let imgs: Vec<Vec<F>> = space.iter().map(|v| apply_dense(t, hz, v)).collect();
            let k = Matrix::from_columns(t.dim(), &imgs).kernel();
            space = k.iter().map(|c| combine(&space, c)).collect();
        }
        for (a, b) in &pairs {
            if space.is_empty() {
                break;
            }
            let e = F::from_i64(-lam[*a] * lam[*b]).sqrt_exact()?;
            let (ha, hb) = (BasisElem { odd: true, i: *a, j: *a }, BasisElem { odd: true, i: *b, j: *b });
            let imgs: Vec<Vec<F>> = space.iter().map(|v| apply_dense(t, ha, &apply_dense(t, hb, v))).collect();
            let p = restrict(&space, &imgs)?;
            let shifted = p.add(&Matrix::identity(space.len()).scale(&-e.clone()));
            let k = shifted.kernel();
            space = k.iter().map(|c| combine(&space, c)).collect();
        }
        if let Some(v) = space.first() {
            return Some(from_dense(v));
        }
    }
    None
}

/// Pairs of nonzero coordinates with `-lambda_a lambda_b` a square in `F`, leaving at most
/// one coordinate unpaired.
fn rational_pairing<F: Field>(nonzero: &[usize], lam: &[i64]) -> Option<Vec<(usize, usize)>> {
    if nonzero.len() < 2 {
        return Some(Vec::new());
    }
    let first = nonzero[0];
    let rest = &nonzero[1..];
    for (k, &b) in rest.iter().enumerate() {
        if F::from_i64(-lam[first] * lam[b]).sqrt_exact().is_none() {
            continue;
        }
        let others: Vec<usize> = rest.iter().enumerate().filter(|(t, _)| *t != k).map(|(_, &v)| v).collect();
        if let Some(mut p) = rational_pairing::<F>(&others, lam) {
            p.push((first, b));
            return Some(p);
        }
    }
    if nonzero.len() % 2 == 1 {
        return rational_pairing::<F>(rest, lam);
    }
    None
}

fn combine<F: Field>(basis: &[Vec<F>], c: &[F]) -> Vec<F> {
    let len = basis.first().map_or(0, Vec::len);
    let mut out = vec![F::zero(); len];
    for (v, a) in basis.iter().zip(c) {
        if a.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            *o += a.clone() * x.clone();
        }
    }
    out
}

/// Divides by the submodules generated by singular vectors of weight other than `lam`.
pub fn simple_quotient<F: Field>(mut m: GModule<F>, lam: &[i64]) -> Result<GModule<F>> {
    for _ in 0..MAX_ROUNDS {
        let lower: Vec<SVec<F>> = m
            .singular_vectors()
            .into_iter()
            .filter(|((w, _), _)| w.as_slice() != lam)
            .flat_map(|(_, vs)| vs)
            .collect();
        if lower.is_empty() {
            return Ok(m);
        }
        let s = m.generate(&lower);
        m = m.quotient(&s)?;
    }
    Err(Error::IterationCap(MAX_ROUNDS))
}

/// Singular vectors of weights other than `lam`; empty for a simple highest weight module.
pub fn lower_singular_count<F: Field>(m: &GModule<F>, lam: &[i64]) -> usize {
    m.singular_vectors().iter().filter(|((w, _), _)| w.as_slice() != lam).map(|(_, v)| v.len()).sum()
}

pub fn construct_simple<F: Field>(lam: &Weight) -> Result<GModule<F>> {
    let n = lam.n();
    if n == 0 || n > 3 || !lam.is_dominant() {
        return Err(Error::WeightNotFoundInTensorRange(lam.to_string()));
    }
    let l = integral_coords(lam)?;
    let pos: usize = l.iter().filter(|&&c| c > 0).map(|&c| c as usize).sum();
    let neg: usize = l.iter().filter(|&&c| c < 0).map(|&c| (-c) as usize).sum();
    let mut found = None;
    for extra in 0.. {
        let (a, b) = (pos + extra, neg + extra);
        if a + b > MAX_FACTORS {
            break;
        }
        let t = tensor_space::<F>(n, a, b);
        if let Some(v) = clifford_vector(&t, &l) {
            found = Some((t, v));
            break;
        }
    }
    let (t, v) = found.ok_or_else(|| Error::WeightNotFoundInTensorRange(lam.to_string()))?;
    let cyclic = t.generate(&[v]);
    let w = t.submodule(&cyclic)?;
    let simple = simple_quotient(w, &l)?;
    let top = simple.classes().iter().filter(|((w, _), _)| w == &l).map(|(_, i)| i.len()).sum::<usize>();
    if top as u64 != lam.clifford_dim().clifford_dim {
        return Err(Error::HypothesisViolated(format!("top of L({lam}) has dimension {top}")));
    }
    Ok(GModule { labels: (0..simple.dim()).map(|i| format!("l{i}")).collect(), ..simple })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Q;

    fn w(c: &[i64]) -> Weight {
        Weight::from_ints(c)
    }

    #[test]
    fn small_simples() {
        let triv = construct_simple::<Q>(&w(&[0, 0])).unwrap();
        assert_eq!(triv.sdim(), (1, 0));
        let std = construct_simple::<Q>(&w(&[1, 0])).unwrap();
        assert_eq!(std.sdim(), (2, 2));
        let l = construct_simple::<Q>(&w(&[1, -1])).unwrap();
        l.check_axioms().unwrap();
        assert_eq!(l.character()[&vec![1, -1]].0 + l.character()[&vec![1, -1]].1, 2);
        assert_eq!(lower_singular_count(&l, &[1, -1]), 0);
    }

    #[test]
    fn out_of_range() {
        assert!(matches!(construct_simple::<Q>(&w(&[5, 0])), Err(Error::WeightNotFoundInTensorRange(_))));
        assert!(construct_simple::<Q>(&Weight::parse("(1/2,-1/2)").unwrap()).is_err());
    }
}
