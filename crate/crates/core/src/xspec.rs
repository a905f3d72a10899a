//! Odd elements `x = x_nil + x_ss` up to conjugacy.

use std::fmt;

use num_traits::{Inv, One, Zero};

use crate::error::{Error, Result};
use crate::weight::{fmt_rat, parse_rational};
use crate::Rat;

/// `nil_pairs` rank-one nilpotent summands plus `sum c_j H_{i_j}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct XSpec {
    nil_pairs: usize,
    ss_coeffs: Vec<Rat>,
}

/// The cases the combinatorial engine can decompose.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum XKind {
    Zero,
    RankHalf,
    Nilpotent,
    SemisimpleTraceZero,
    SemisimpleTraceNonzero,
    /// `C_r` with `r >= 3` (smaller `C_r` fall under the rank one cases).
    Cr(usize),
    Unsupported,
}

impl XSpec {
    pub fn new(nil_pairs: usize, ss_coeffs: Vec<Rat>) -> Result<Self> {
        if ss_coeffs.iter().any(Zero::is_zero) {
            return Err(Error::InvalidXSpec("semisimple coefficients must be nonzero".into()));
        }
        Ok(XSpec { nil_pairs, ss_coeffs })
    }

    pub fn zero() -> Self {
        XSpec { nil_pairs: 0, ss_coeffs: Vec::new() }
    }

    /// A rank one nilpotent element, conjugate to a root vector.
    pub fn nilpotent() -> Self {
        XSpec { nil_pairs: 1, ss_coeffs: Vec::new() }
    }

    pub fn semisimple(coeffs: &[Rat]) -> Result<Self> {
        XSpec::new(0, coeffs.to_vec())
    }

    pub fn rank_half(c: Rat) -> Result<Self> {
        XSpec::new(0, vec![c])
    }

    /// `C_r = T_{0, E_11 + ... + E_rr}`.
    pub fn c_r(r: usize) -> Self {
        XSpec { nil_pairs: 0, ss_coeffs: vec![Rat::one(); r] }
    }

    pub fn nil_pairs(&self) -> usize {
        self.nil_pairs
    }

    pub fn ss_coeffs(&self) -> &[Rat] {
        &self.ss_coeffs
    }

    pub fn rank(&self) -> Rat {
        Rat::from_integer(self.nil_pairs as i64) + Rat::new(self.ss_coeffs.len() as i64, 2)
    }

    /// `2 * rank`: the number of indices `x` occupies.
    pub fn support_size(&self) -> usize {
        2 * self.nil_pairs + self.ss_coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.nil_pairs == 0 && self.ss_coeffs.is_empty()
    }

    pub fn trace(&self) -> Rat {
        self.ss_coeffs.iter().sum()
    }

    pub fn p1(&self) -> Rat {
        self.ss_coeffs.iter().map(|c| c.inv()).sum()
    }

    pub fn p3(&self) -> Rat {
        self.ss_coeffs.iter().map(|c| (c * c * c).inv()).sum()
    }

    /// `Some(r)` when `x = C_r`.
    pub fn as_c_r(&self) -> Option<usize> {
        (self.nil_pairs == 0 && self.ss_coeffs.iter().all(One::is_one))
            .then_some(self.ss_coeffs.len())
    }

    pub fn kind(&self) -> XKind {
        match (self.nil_pairs, self.ss_coeffs.len()) {
            (0, 0) => XKind::Zero,
            (0, 1) => XKind::RankHalf,
            (1, 0) => XKind::Nilpotent,
            (0, 2) if self.trace().is_zero() => XKind::SemisimpleTraceZero,
            (0, 2) => XKind::SemisimpleTraceNonzero,
            _ => match self.as_c_r() {
                Some(r) => XKind::Cr(r),
                None => XKind::Unsupported,
            },
        }
    }

    /// Parses a comma separated coefficient list such as `1,-1/2`.
    pub fn parse_coeffs(s: &str) -> Result<Vec<Rat>> {
        s.split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| parse_rational(t.trim()))
            .collect()
    }
}

impl fmt::Display for XSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs: Vec<String> = self.ss_coeffs.iter().map(fmt_rat).collect();
        write!(f, "nil={} c=({})", self.nil_pairs, cs.join(","))
    }
}
