//! Weights of the Cartan subalgebra of `q(n)` and their elementary invariants.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::Rat;

/// Integrality class of a weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Integrality {
    Integral,
    HalfIntegral,
    Other,
}

/// Data of the Clifford module `C_lambda` sitting in the top of `L(lambda)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CliffordData {
    pub nonzero_count: usize,
    pub clifford_dim: u64,
}

/// A weight `lambda = (lambda_1, ..., lambda_n)` with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    coords: Vec<Rat>,
}

impl Weight {
    pub fn new(coords: Vec<Rat>) -> Self {
        Weight { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight { coords: coords.iter().map(|&c| Rat::from_integer(c)).collect() }
    }

    /// The weight of `q(0)`.
    pub fn empty() -> Self {
        Weight { coords: Vec::new() }
    }

    /// Parses `(4,1,0,-1,-4)`; halves are written `5/2`.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("weight must be parenthesised: {s:?}")))?;
        if inner.trim().is_empty() {
            return Ok(Weight::empty());
        }
        let coords = inner
            .split(',')
            .map(|tok| parse_rational(tok.trim()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Weight { coords })
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.windows(2).all(|w| {
            let d = w[0] - w[1];
            d.is_integer() && !d.is_negative() && (!d.is_zero() || w[0].is_zero())
        })
    }

    pub fn integrality_class(&self) -> Integrality {
        if self.coords.iter().all(|c| c.is_integer()) {
            Integrality::Integral
        } else if self.coords.iter().all(|c| *c.denom() == 2) {
            Integrality::HalfIntegral
        } else {
            Integrality::Other
        }
    }

    pub fn zero_count(&self) -> usize {
        self.coords.iter().filter(|c| c.is_zero()).count()
    }

    pub fn nonzero_count(&self) -> usize {
        self.n() - self.zero_count()
    }

    /// Number of disjoint pairs `lambda_i + lambda_j = 0` with `lambda_i != 0`.
    pub fn opposite_pairs(&self) -> usize {
        let mult = self.multiplicities();
        mult.iter()
            .filter(|(v, _)| v.is_positive())
            .map(|(v, &m)| m.min(mult.get(&-*v).copied().unwrap_or(0)))
            .sum()
    }

    /// Matched pairs plus half the number of zeros.
    pub fn atypicality(&self) -> Rat {
        Rat::from_integer(self.opposite_pairs() as i64) + Rat::new(self.zero_count() as i64, 2)
    }

    pub fn is_typical(&self) -> bool {
        self.atypicality().is_zero()
    }

    /// Coordinates left after deleting zeros and a maximal set of opposite pairs, in
    /// non-increasing order.
    pub fn core(&self) -> Vec<Rat> {
        let mult = self.multiplicities();
        let mut out = Vec::new();
        for (v, &m) in mult.iter().rev() {
            if v.is_zero() {
                continue;
            }
            let opp = mult.get(&-*v).copied().unwrap_or(0);
            out.extend(std::iter::repeat(*v).take(m.saturating_sub(opp)));
        }
        out
    }

    pub fn clifford_dim(&self) -> CliffordData {
        let k = self.nonzero_count();
        CliffordData { nonzero_count: k, clifford_dim: 1u64 << ((k + 1) / 2) }
    }

    /// `self > other` in the order `lambda - nu in N Delta^+`.
    pub fn dominance_order(&self, other: &Weight) -> bool {
        if self.n() != other.n() || self == other {
            return false;
        }
        let mut partial = Rat::zero();
        for (a, b) in self.coords.iter().zip(&other.coords) {
            partial += a - b;
            if partial.is_negative() || !partial.is_integer() {
                return false;
            }
        }
        partial.is_zero()
    }

    /// The weight with `k` zero coordinates removed (`None` if there are fewer zeros).
    pub fn remove_zeros(&self, k: usize) -> Option<Weight> {
        if self.zero_count() < k {
            return None;
        }
        let mut left = k;
        let coords = self
            .coords
            .iter()
            .filter(|c| {
                if c.is_zero() && left > 0 {
                    left -= 1;
                    false
                } else {
                    true
                }
            })
            .copied()
            .collect();
        Some(Weight { coords })
    }

    fn multiplicities(&self) -> BTreeMap<Rat, usize> {
        let mut m = BTreeMap::new();
        for c in &self.coords {
            *m.entry(*c).or_insert(0) += 1;
        }
        m
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", fmt_rat(c))?;
        }
        write!(f, ")")
    }
}

/// `3/2`, `-1`, `0`.
pub fn fmt_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(tok: &str) -> Result<Rat> {
    let bad = || Error::Parse(format!("not a rational number: {tok:?}"));
    match tok.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            if q == 0 {
                return Err(bad());
            }
            Ok(Rat::new(p, q))
        }
        None => tok.parse::<i64>().map(Rat::from_integer).map_err(|_| bad()),
    }
}

/// `2r` for a rational `r` in `1/2 Z`.
pub(crate) fn doubled(r: &Rat) -> Option<i64> {
    let d = r * Rat::from_integer(2);
    d.is_integer().then(|| d.to_integer())
}

pub(crate) fn half(k: i64) -> Rat {
    Rat::new(k, 2)
}
