//! The scalar field. Everything in the oracle is generic over [`Field`]; the exact
//! rationals [`Q`] are the field used in practice.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::Ratio;
use num_traits::{Num, NumAssign, Signed};

pub type Q = Ratio<BigInt>;

pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display + Num + NumAssign + std::ops::Neg<Output = Self> + Send + Sync + 'static {
    fn from_i64(v: i64) -> Self;

    fn from_ratio(numer: i64, denom: i64) -> Self {
        Self::from_i64(numer) / Self::from_i64(denom)
    }

    /// An exact square root, if there is one in the field.
    fn sqrt_exact(&self) -> Option<Self>;

    /// `"3/2"`, `"-1"`, `"0"`.
    fn to_exact_string(&self) -> String;

    fn parse_exact(s: &str) -> Option<Self>;
}

fn ratio_sqrt<T>(r: &Ratio<T>) -> Option<Ratio<T>>
where
    T: Clone + num_integer::Integer + Signed + Roots,
{
    if r.is_negative() {
        return None;
    }
    let (p, q) = (r.numer().clone(), r.denom().clone());
    let (sp, sq) = (p.sqrt(), q.sqrt());
    (sp.clone() * sp.clone() == p && sq.clone() * sq.clone() == q).then(|| Ratio::new(sp, sq))
}

fn parse_ratio<T>(s: &str) -> Option<Ratio<T>>
where
    T: Clone + num_integer::Integer + std::str::FromStr,
{
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let q: T = q.trim().parse().ok()?;
            let p: T = p.trim().parse().ok()?;
            (!q.is_zero()).then(|| Ratio::new(p, q))
        }
        None => Some(Ratio::from_integer(s.parse().ok()?)),
    }
}

impl Field for Q {
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(BigInt::from(v))
    }

    fn sqrt_exact(&self) -> Option<Self> {
        ratio_sqrt(self)
    }

    fn to_exact_string(&self) -> String {
        self.to_string()
    }

    fn parse_exact(s: &str) -> Option<Self> {
        parse_ratio(s)
    }
}

impl Field for Ratio<i64> {
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(v)
    }

    fn sqrt_exact(&self) -> Option<Self> {
        ratio_sqrt(self)
    }

    fn to_exact_string(&self) -> String {
        self.to_string()
    }

    fn parse_exact(s: &str) -> Option<Self> {
        parse_ratio(s)
    }
}

/// Converts a combinatorial coefficient into the oracle field.
pub fn from_rat<F: Field>(r: &queer_core::Rat) -> F {
    F::from_ratio(*r.numer(), *r.denom())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_roots() {
        let q = Q::parse_exact("9/4").unwrap();
        assert_eq!(q.sqrt_exact().unwrap().to_exact_string(), "3/2");
        assert!(Q::from_i64(2).sqrt_exact().is_none());
        assert!(Q::from_i64(-1).sqrt_exact().is_none());
        assert_eq!(Ratio::<i64>::from_i64(16).sqrt_exact(), Some(Ratio::from_integer(4)));
    }

    #[test]
    fn strings() {
        assert_eq!(Q::parse_exact("-6/4").unwrap().to_exact_string(), "-3/2");
        assert_eq!(Q::parse_exact(" 5 ").unwrap(), Q::from_i64(5));
        assert!(Q::parse_exact("1/0").is_none());
        assert!(Q::parse_exact("x").is_none());
    }
}
