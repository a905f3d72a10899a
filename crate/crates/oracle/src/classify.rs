//! `DS_x` of the queer-type algebras: the induced bracket on `DS_x(g)` and its
//! identification.

use std::fmt;

use num_traits::Zero;
use queer_core::{Rat, XSpec};

use crate::algebra::{AlgebraKind, LieSuperalgebra};
use crate::ds::{ds_module, Ds};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::sparse::{axpy, SVec};
use crate::supermatrix::{q_basis, QElem};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlgebraClass {
    Zero,
    /// `C`, dimension `(1|0)`.
    Even1,
    /// `Pi C`, dimension `(0|1)`.
    Odd1,
    /// Abelian of dimension `(1|1)`.
    Abelian11,
    /// `q(1)`: dimension `(1|1)` with `[o, o] != 0`.
    Q1,
    /// A copy of `kind(m)` for `m >= 2`.
    Model { kind: AlgebraKind, m: usize },
}

impl AlgebraClass {
    /// `kind(m)` written in the small classes where they apply.
    pub fn model(kind: AlgebraKind, m: usize) -> Self {
        match (kind, m) {
            (AlgebraKind::Q, 1) => AlgebraClass::Q1,
            (AlgebraKind::SQ, 1) => AlgebraClass::Even1,
            (AlgebraKind::PQ, 1) => AlgebraClass::Odd1,
            (_, 0) | (AlgebraKind::PSQ, 1) => AlgebraClass::Zero,
            _ => AlgebraClass::Model { kind, m },
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "0" => AlgebraClass::Zero,
            "C" => AlgebraClass::Even1,
            "PiC" => AlgebraClass::Odd1,
            "C(1|1)" => AlgebraClass::Abelian11,
            "q(1)" => AlgebraClass::Q1,
            _ => {
                let (k, m) = s.strip_suffix(')')?.split_once('(')?;
                AlgebraClass::model(AlgebraKind::parse(k)?, m.parse().ok()?)
            }
        })
    }
}

impl fmt::Display for AlgebraClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraClass::Zero => f.write_str("0"),
            AlgebraClass::Even1 => f.write_str("C"),
            AlgebraClass::Odd1 => f.write_str("PiC"),
            AlgebraClass::Abelian11 => f.write_str("C(1|1)"),
            AlgebraClass::Q1 => f.write_str("q(1)"),
            AlgebraClass::Model { kind, m } => write!(f, "{kind}({m})"),
        }
    }
}

/// The case analysis for `DS_x(kind(n))` with `x` of the given shape.
pub fn predict(kind: AlgebraKind, n: usize, x: &XSpec) -> Result<AlgebraClass> {
    let r = x.support_size();
    if r > n {
        return Err(Error::BadIndexSet(format!("x needs {r} indices but n = {n}")));
    }
    if r < n {
        return Ok(AlgebraClass::model(kind, n - r));
    }
    Ok(match kind {
        AlgebraKind::Q => AlgebraClass::Zero,
        AlgebraKind::SQ => AlgebraClass::Even1,
        AlgebraKind::PQ => AlgebraClass::Odd1,
        AlgebraKind::PSQ if n == 1 => AlgebraClass::Zero,
        AlgebraKind::PSQ => {
            if !x.p1().is_zero() {
                AlgebraClass::Zero
            } else if x.p3().is_zero() {
                AlgebraClass::Abelian11
            } else {
                AlgebraClass::Q1
            }
        }
    })
}

/// The same case analysis for semisimple `x` of full rank, phrased through the
/// eigenvalues of `B`: `sum_i prod_{j != i} c_j` and the same sum of cubes.
pub fn predict_psq_symmetric(c: &[Rat]) -> AlgebraClass {
    let e = |pow: i32| -> Rat {
        (0..c.len())
            .map(|i| c.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, v)| v.pow(pow)).product::<Rat>())
            .sum()
    };
    if !e(1).is_zero() {
        AlgebraClass::Zero
    } else if e(3).is_zero() {
        AlgebraClass::Abelian11
    } else {
        AlgebraClass::Q1
    }
}

#[derive(Debug, Clone)]
pub struct AdjointReport {
    pub kind: AlgebraKind,
    pub n: usize,
    pub sdim: (usize, usize),
    pub abelian: bool,
    /// For `(1|1)` results: whether the odd generator squares to a nonzero element.
    pub odd_square_nonzero: Option<bool>,
    pub class: Option<AlgebraClass>,
    /// For `|K| > 0`: the canonical map from `q(K)` or `sq(K)` is onto `DS_x(g)` with the
    /// expected kernel and respects brackets.
    pub embedding_verified: Option<bool>,
    /// `[x, q(K)] = 0`.
    pub centralizes: bool,
}

/// `DS_x` of a queer-type algebra with its induced bracket.
pub struct DsAlgebra<F> {
    pub ds: Ds<F>,
    pub parity: Vec<bool>,
    /// `brackets[a][b]` = class of `[r_a, r_b]`.
    pub brackets: Vec<Vec<SVec<F>>>,
}

impl<F: Field> DsAlgebra<F> {
    pub fn is_abelian(&self) -> bool {
        self.brackets.iter().flatten().all(Vec::is_empty)
    }

    pub fn bracket(&self, u: &SVec<F>, v: &SVec<F>) -> SVec<F> {
        let mut out = Vec::new();
        for (a, s) in u {
            for (b, t) in v {
                out = axpy(&out, &(s.clone() * t.clone()), &self.brackets[*a][*b]);
            }
        }
        out
    }
}

pub fn ds_algebra<F: Field>(g: &LieSuperalgebra<F>, x: &QElem<F>) -> Result<DsAlgebra<F>> {
    let adj = g.adjoint_module();
    let ds = ds_module(&adj, x, None)?;
    let reps: Vec<QElem<F>> = ds.reps.iter().map(|r| g.element(r)).collect();
    let mut brackets = Vec::with_capacity(reps.len());
    for a in &reps {
        let mut row = Vec::with_capacity(reps.len());
        for b in &reps {
            let c = g.coords(&a.bracket(b)).ok_or(Error::NotInAlgebra)?;
            row.push(ds.project(&c).ok_or_else(|| Error::HypothesisViolated("bracket of cycles is not a cycle".into()))?);
        }
        brackets.push(row);
    }
    Ok(DsAlgebra { parity: ds.module.parity.clone(), ds, brackets })
}

fn classify_small<F: Field>(d: &DsAlgebra<F>) -> (Option<AlgebraClass>, Option<bool>) {
    match d.ds.sdim() {
        (0, 0) => (Some(AlgebraClass::Zero), None),
        (1, 0) => (Some(AlgebraClass::Even1), None),
        (0, 1) => (Some(AlgebraClass::Odd1), None),
        (1, 1) => {
            let o = d.parity.iter().position(|&p| p).expect("one odd vector");
            let sq = !d.brackets[o][o].is_empty();
            let class = if d.is_abelian() {
                Some(AlgebraClass::Abelian11)
            } else if sq && d.brackets.iter().enumerate().all(|(a, row)| row.iter().enumerate().all(|(b, v)| v.is_empty() || (a == o && b == o))) {
                Some(AlgebraClass::Q1)
            } else {
                None
            };
            (class, Some(sq))
        }
        _ => (None, None),
    }
}

/// Checks that `q(K)` (or `sq(K)` for the special kinds), placed on the indices `K`, maps
/// onto `DS_x(g)` with kernel `C T_{Id_K}` for the quotients and `0` otherwise, and that
/// the map respects brackets.
fn verify_embedding<F: Field>(g: &LieSuperalgebra<F>, d: &DsAlgebra<F>) -> Result<bool> {
    let k = &d.ds.kept;
    let m = k.len();
    let model_kind = if g.kind.is_special() { AlgebraKind::SQ } else { AlgebraKind::Q };
    let model = LieSuperalgebra::<F>::new(model_kind, m);
    let image = |y: &QElem<F>| -> Result<SVec<F>> {
        let c = g.coords(&y.embed(g.n, k)).ok_or(Error::NotInAlgebra)?;
        d.ds.project(&c).ok_or_else(|| Error::HypothesisViolated("q(K) is not made of cycles".into()))
    };
    let images: Vec<SVec<F>> = model.basis.iter().map(&image).collect::<Result<_>>()?;
    let rank = crate::sparse::Echelon::from_vectors(images.iter().cloned()).dim();
    let expected_kernel = usize::from(g.kind.is_quotient());
    if rank != d.ds.module.dim() || model.dim() - rank != expected_kernel {
        return Ok(false);
    }
    if g.kind.is_quotient() && !image(&QElem::identity(m))?.is_empty() {
        return Ok(false);
    }
    for (a, ya) in model.basis.iter().enumerate() {
        for (b, yb) in model.basis.iter().enumerate() {
            if image(&ya.bracket(yb))? != d.bracket(&images[a], &images[b]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn ds_adjoint<F: Field>(g: &LieSuperalgebra<F>, x: &QElem<F>) -> Result<AdjointReport> {
    let d = ds_algebra(g, x)?;
    let n = g.n;
    let kept = d.ds.kept.clone();
    let centralizes = q_basis(kept.len()).into_iter().all(|b| x.bracket(&b.to_elem::<F>(kept.len()).embed(n, &kept)).is_zero());
    let (mut class, odd_square_nonzero) = classify_small(&d);
    let embedding_verified = if kept.is_empty() { None } else { Some(verify_embedding(g, &d)?) };
    if class.is_none() && embedding_verified == Some(true) {
        class = Some(AlgebraClass::model(g.kind, kept.len()));
    }
    Ok(AdjointReport {
        kind: g.kind,
        n,
        sdim: d.ds.sdim(),
        abelian: d.is_abelian(),
        odd_square_nonzero,
        class,
        embedding_verified,
        centralizes,
    })
}
