//! `depth(L(lambda))`: the largest total rank of a chain of nonvanishing `DS` steps.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::decompose::decompose;
use crate::error::Result;
use crate::weight::Weight;
use crate::xspec::XSpec;
use crate::Rat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DepthResult {
    pub depth: Rat,
    /// Each step applies `x` to the previous weight and keeps the factor `L(nu)`.
    pub witness_chain: Vec<(XSpec, Weight)>,
}

/// The moves searched: rank one half, the three rank one classes, and `C_r`, `r >= 3`.
pub fn moves(lambda: &Weight) -> Vec<XSpec> {
    let n = lambda.n();
    let one = Rat::one();
    let mut out = Vec::new();
    if n >= 1 {
        out.push(XSpec::c_r(1));
    }
    if n >= 2 {
        out.push(XSpec::nilpotent());
        out.push(XSpec::semisimple(&[one, -one]).expect("nonzero"));
        out.push(XSpec::c_r(2));
    }
    for r in 3..=lambda.zero_count() {
        out.push(XSpec::c_r(r));
    }
    out
}

pub fn depth(lambda: &Weight) -> Result<DepthResult> {
    let mut memo = HashMap::new();
    search(lambda, &mut memo)?;
    let mut chain = Vec::new();
    let mut cur = lambda.clone();
    while let Some((_, Some((x, nu)))) = memo.get(&cur) {
        chain.push((x.clone(), nu.clone()));
        cur = nu.clone();
    }
    Ok(DepthResult { depth: memo[lambda].0, witness_chain: chain })
}

type Memo = HashMap<Weight, (Rat, Option<(XSpec, Weight)>)>;

fn search(lambda: &Weight, memo: &mut Memo) -> Result<Rat> {
    if let Some((d, _)) = memo.get(lambda) {
        return Ok(*d);
    }
    let mut best = (Rat::zero(), None);
    for x in moves(lambda) {
        for e in decompose(lambda, &x)?.entries {
            let d = x.rank() + search(&e.nu, memo)?;
            if d > best.0 {
                best = (d, Some((x.clone(), e.nu)));
            }
        }
    }
    let d = best.0;
    memo.insert(lambda.clone(), best);
    Ok(d)
}
