//! `DS_x(L(lambda))` for `x` of rank at most one and for `x = C_r`, plus the general-rank
//! tools: the necessary arc condition, signed multiplicities and shrink reduction.

use std::collections::HashSet;
use std::fmt;

use num_traits::Zero;

use crate::arcs::{g_value, shrink, ArcDiagram, ArcKind};
use crate::diagram::{Grid, Symbol, WeightDiagram};
use crate::error::{Error, Result};
use crate::weight::{doubled, Integrality, Weight};
use crate::xspec::{XKind, XSpec};
use crate::Rat;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    /// `L(nu)` and `Pi L(nu)` occur together.
    Balanced,
    Single,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Balanced => "balanced",
            Parity::Single => "single",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub nu: Weight,
    pub mult: u32,
    pub parity: Parity,
    /// Eigenvalues of the grading element, one per copy; only for nilpotent `x`.
    pub h: Option<Vec<Rat>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedDecomposition {
    pub lambda: Weight,
    pub x: XSpec,
    /// Sorted by `nu`, largest first.
    pub entries: Vec<Entry>,
}

impl GradedDecomposition {
    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn multiplicity(&self, nu: &Weight) -> u32 {
        self.entries.iter().filter(|e| &e.nu == nu).map(|e| e.mult).sum()
    }
}

/// `[DS_x(L(lambda))]` with gradings where defined.
pub fn decompose(lambda: &Weight, x: &XSpec) -> Result<GradedDecomposition> {
    if !lambda.is_dominant() {
        return Err(Error::NonDominant(lambda.to_string()));
    }
    let kind = x.kind();
    if kind == XKind::Unsupported {
        return Err(Error::UnsupportedRank(x.rank().to_string()));
    }
    if 2 * x.nil_pairs() + x.ss_coeffs().len() > lambda.n() {
        return Err(Error::InvalidXSpec(format!("{x} does not fit in q({})", lambda.n())));
    }
    let mut entries = Vec::new();
    let single = |nu: Weight| Entry { nu, mult: 1, parity: Parity::Single, h: None };
    match kind {
        XKind::Zero => entries.push(single(lambda.clone())),
        XKind::RankHalf => entries.extend(lambda.remove_zeros(1).map(single)),
        XKind::Cr(r) => entries.extend(lambda.remove_zeros(r).map(single)),
        XKind::Nilpotent | XKind::SemisimpleTraceZero | XKind::SemisimpleTraceNonzero => {
            entries = rank_one(lambda, kind)?;
        }
        XKind::Unsupported => unreachable!(),
    }
    entries.sort_by(|a, b| b.nu.cmp(&a.nu).then(b.h.cmp(&a.h)));
    Ok(GradedDecomposition { lambda: lambda.clone(), x: x.clone(), entries })
}

fn rank_one(lambda: &Weight, kind: XKind) -> Result<Vec<Entry>> {
    let grid = match lambda.integrality_class() {
        Integrality::Integral => Grid::Integral,
        Integrality::HalfIntegral => Grid::HalfIntegral,
        // Such weights are typical.
        Integrality::Other => return Ok(Vec::new()),
    };
    if grid == Grid::HalfIntegral && kind != XKind::Nilpotent {
        return Ok(Vec::new());
    }
    let d = WeightDiagram::from_weight(lambda)?;
    let arcs = ArcDiagram::build(&d);
    let mut out = Vec::new();
    if kind != XKind::SemisimpleTraceNonzero {
        for arc in arcs.maximal_full_arcs() {
            let nu = arcs.remove_maximal_arc(&arc)?.base().to_weight();
            let h = (kind == XKind::Nilpotent).then(|| {
                let g = g_value(&d, arc.left);
                vec![g, -g]
            });
            out.push(Entry { nu, mult: 2, parity: Parity::Balanced, h });
        }
    }
    if let Some(nu) = lambda.remove_zeros(2) {
        let h = (kind == XKind::Nilpotent).then(|| vec![Rat::zero()]);
        out.push(Entry { nu, mult: 1, parity: Parity::Single, h });
    }
    Ok(out)
}

/// `m_x(lambda; nu)`.
pub fn multiplicity(lambda: &Weight, nu: &Weight, x: &XSpec) -> Result<u32> {
    Ok(decompose(lambda, x)?.multiplicity(nu))
}

/// `Arc(nu)` arises from `Arc(lambda)` by removing maximal arcs of total weight `s`
/// (full arcs weigh one, half arcs one half), and the cores agree.
pub fn necessary_condition(lambda: &Weight, nu: &Weight, s: Rat) -> Result<bool> {
    let steps = doubled_rank(lambda, nu, s)?;
    if lambda.core() != nu.core() {
        return Ok(false);
    }
    if steps == 0 {
        return Ok(lambda == nu);
    }
    let (dl, dn) = diagrams_of(lambda, nu)?;
    if dl.grid() != dn.grid() {
        return Ok(false);
    }
    let mut seen = HashSet::new();
    Ok(removal_search(&ArcDiagram::build(&dl), &dn, steps, &mut seen))
}

/// Both diagrams, the empty weight being placed on the grid of `lambda`.
fn diagrams_of(lambda: &Weight, nu: &Weight) -> Result<(WeightDiagram, WeightDiagram)> {
    let dl = WeightDiagram::from_weight(lambda)?;
    let dn = if nu.n() == 0 { WeightDiagram::empty(dl.grid()) } else { WeightDiagram::from_weight(nu)? };
    Ok((dl, dn))
}

/// `budget` counts half units.
fn removal_search(
    cur: &ArcDiagram,
    target: &WeightDiagram,
    budget: usize,
    seen: &mut HashSet<(WeightDiagram, usize)>,
) -> bool {
    if budget == 0 {
        return cur.base() == target;
    }
    if !seen.insert((cur.base().clone(), budget)) {
        return false;
    }
    let mut maximal = cur.maximal_arcs();
    maximal.sort_by(|a, b| b.right.cmp(&a.right));
    for arc in maximal {
        let cost = match arc.kind {
            ArcKind::Full => 2,
            ArcKind::Half => 1,
        };
        if cost > budget {
            continue;
        }
        let next = cur.remove_maximal_arc(&arc).expect("maximal arcs are removable");
        if removal_search(&next, target, budget - cost, seen) {
            return true;
        }
    }
    false
}

/// Checks `nu` lives in `q(n - 2s)` and returns `2s`.
fn doubled_rank(lambda: &Weight, nu: &Weight, s: Rat) -> Result<usize> {
    let two_s = doubled(&s)
        .filter(|&t| t >= 0)
        .ok_or_else(|| Error::InvalidXSpec(format!("rank {s} is not in N/2")))?;
    let expected = lambda.n() as i64 - two_s;
    if expected < 0 || nu.n() as i64 != expected {
        return Err(Error::DimensionMismatch { expected, got: nu.n() });
    }
    Ok(two_s as usize)
}

/// Signed multiplicity of `L(nu)` in `DS_x(L(lambda))` for `x` of rank `s`: nonzero
/// exactly when `nu` is `lambda` with `2s` zeros removed. The sign is reported as `+1`.
pub fn smult(lambda: &Weight, nu: &Weight, s: Rat) -> Result<i8> {
    let two_s = doubled_rank(lambda, nu, s)?;
    Ok(if lambda.remove_zeros(two_s).as_ref() == Some(nu) { 1 } else { 0 })
}

/// The core-free weight `lambda'` of `q(2s)` with `m_x(lambda; nu) = dim DS_x(L(lambda'))`:
/// shrink `howl(lambda)` along every arc of `howl(nu)`, innermost first.
pub fn shrink_reduce(lambda: &Weight, nu: &Weight) -> Result<Weight> {
    if lambda.core() != nu.core() {
        return Err(Error::CoreMismatch);
    }
    let (dl, dn) = diagrams_of(lambda, nu)?;
    if dl.grid() != dn.grid() || !ArcDiagram::build(&dn).is_subset_of(&ArcDiagram::build(&dl)) {
        return Err(Error::ArcNotSubset);
    }
    let (mut f, mut g) = (dl.howl(), dn.howl());
    loop {
        let arcs = ArcDiagram::build(&g);
        let Some(inner) = arcs.arcs().iter().find(|a| a.is_minimal_shape()) else {
            break;
        };
        let a = inner.left;
        f = shrink(&f, a).map_err(|_| Error::ArcNotSubset)?;
        g = shrink(&g, a)?;
    }
    debug_assert!(g.is_empty());
    Ok(f.to_weight())
}

/// `DS_x(L(lambda)) = 0` for every nonzero `x` of integral rank.
pub fn vanishing_predicate(lambda: &Weight) -> bool {
    if lambda.zero_count() != 1 || !lambda.is_dominant() {
        return false;
    }
    match ArcDiagram::from_weight(lambda) {
        Ok(a) => a.maximal_arcs().len() == 1,
        Err(_) => false,
    }
}

/// Pairs of distinct composition factors that the arc criterion for `Ext^1` would link:
/// an arc `(a;b)` of `Arc(mu)` with `x` at `b` in `diag(nu)`. Always empty for
/// decompositions of simples.
pub fn isotypicality_violations(dec: &GradedDecomposition) -> Vec<(Weight, Weight)> {
    let diags: Vec<(Weight, WeightDiagram)> = dec
        .entries
        .iter()
        .filter_map(|e| WeightDiagram::from_weight(&e.nu).ok().map(|d| (e.nu.clone(), d)))
        .collect();
    let mut out = Vec::new();
    for (mu, dm) in &diags {
        let am = ArcDiagram::build(dm);
        for (nu, dn) in &diags {
            if mu == nu {
                continue;
            }
            if am.arcs().iter().any(|a| dn.symbol(a.right) == Symbol::Times) {
                out.push((mu.clone(), nu.clone()));
            }
        }
    }
    out
}
