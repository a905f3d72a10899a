//! Diagram identities that the multiplicities `m_x(f; g)` must satisfy: moving `x` or
//! `o` past a core symbol, the cancellation rules, the wedge rule and the reduction to
//! core-free diagrams.
//!
//! Here `f / g` is `[DS_x(L(f)) : L(g)]` with the rank of `x` fixed by the sizes, and
//! every class of odd element of that rank is tried.

use std::collections::HashMap;

use num_traits::One;

use crate::arcs::ArcDiagram;
use crate::decompose::decompose;
use crate::diagram::{Grid, Symbol, WeightDiagram};
use crate::xspec::{XKind, XSpec};
use crate::Rat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub identity: &'static str,
    pub f: WeightDiagram,
    pub g: WeightDiagram,
    pub x: XSpec,
    pub lhs: u32,
    pub rhs: u32,
}

#[derive(Debug, Clone, Default)]
pub struct IdentityReport {
    /// Identity instances evaluated.
    pub checked: usize,
    pub violations: Vec<Violation>,
}

/// Odd elements of rank `d / 2`, one per class the engine decomposes.
fn odd_elements(d: usize) -> Vec<XSpec> {
    let one = Rat::one();
    match d {
        0 => vec![XSpec::zero()],
        1 => vec![XSpec::c_r(1)],
        2 => vec![
            XSpec::nilpotent(),
            XSpec::semisimple(&[one, -one]).expect("nonzero"),
            XSpec::c_r(2),
        ],
        _ => Vec::new(),
    }
}

/// Decompositions keyed by diagram; factors are stored as diagrams on the grid of `f`.
#[derive(Default)]
struct Mult {
    cache: HashMap<WeightDiagram, [Option<HashMap<WeightDiagram, u32>>; 5]>,
}

impl Mult {
    fn get(&mut self, f: &WeightDiagram, g: &WeightDiagram, x: &XSpec) -> u32 {
        if f.size() != g.size() + x.support_size() || (f.grid() != g.grid() && g.size() > 0) {
            return 0;
        }
        let i = spec_index(x);
        if self.cache.get(f).is_none_or(|slots| slots[i].is_none()) {
            let table = decompose(&f.to_weight(), x)
                .expect("rank at most one")
                .entries
                .into_iter()
                .map(|e| {
                    let d = if e.nu.n() == 0 {
                        WeightDiagram::empty(f.grid())
                    } else {
                        WeightDiagram::from_weight(&e.nu).expect("dominant")
                    };
                    (d, e.mult)
                })
                .collect();
            self.cache.entry(f.clone()).or_default()[i] = Some(table);
        }
        let table = self.cache[f][i].as_ref().expect("filled above");
        if g.size() == 0 {
            table.get(&WeightDiagram::empty(f.grid())).copied().unwrap_or(0)
        } else {
            table.get(g).copied().unwrap_or(0)
        }
    }
}

fn spec_index(x: &XSpec) -> usize {
    match x.kind() {
        XKind::Zero => 0,
        XKind::RankHalf => 1,
        XKind::Nilpotent => 2,
        XKind::SemisimpleTraceZero => 3,
        XKind::SemisimpleTraceNonzero => 4,
        k => panic!("not a rank one class: {k:?}"),
    }
}

struct Checker {
    mult: Mult,
    report: IdentityReport,
}

impl Checker {
    #[allow(clippy::too_many_arguments)]
    fn equal(
        &mut self,
        identity: &'static str,
        f: &WeightDiagram,
        g: &WeightDiagram,
        f2: &WeightDiagram,
        g2: &WeightDiagram,
        x: &XSpec,
    ) {
        let lhs = self.mult.get(f, g, x);
        let rhs = self.mult.get(f2, g2, x);
        self.record(identity, f, g, x, lhs, rhs);
    }

    fn zero(&mut self, identity: &'static str, f: &WeightDiagram, g: &WeightDiagram, x: &XSpec) {
        let lhs = self.mult.get(f, g, x);
        self.record(identity, f, g, x, lhs, 0);
    }

    fn record(&mut self, identity: &'static str, f: &WeightDiagram, g: &WeightDiagram, x: &XSpec, lhs: u32, rhs: u32) {
        self.report.checked += 1;
        if lhs != rhs {
            self.report.violations.push(Violation {
                identity,
                f: f.clone(),
                g: g.clone(),
                x: x.clone(),
                lhs,
                rhs,
            });
        }
    }
}

fn swap(d: &WeightDiagram, p: usize) -> WeightDiagram {
    d.with_symbol(p, d.symbol(p + 1)).with_symbol(p + 1, d.symbol(p))
}

fn pair(d: &WeightDiagram, p: usize, a: Symbol, b: Symbol) -> WeightDiagram {
    d.with_symbol(p, a).with_symbol(p + 1, b)
}

fn is_star(s: Symbol) -> bool {
    matches!(s, Symbol::Empty | Symbol::Times)
}

/// Rightmost slot touched by `d` or by one of its arcs.
fn reach(d: &WeightDiagram) -> usize {
    ArcDiagram::build(d).arcs().iter().map(|a| a.right).max().unwrap_or(0).max(d.len())
}

struct Info {
    stable: bool,
    core: WeightDiagram,
    howl: WeightDiagram,
}

/// Checks every identity on every pair `(f, g)` of the family with `0 <= |f| - |g| <= 2`.
/// The left diagrams are split across threads.
pub fn check_cancellation_identities(family: &[WeightDiagram]) -> IdentityReport {
    let info: Vec<Info> = family
        .iter()
        .map(|d| Info { stable: d.is_stable(), core: d.core_diagram(), howl: d.howl() })
        .collect();
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get()).min(16);
    let chunk = family.len().div_ceil(threads).max(1);
    let parts: Vec<IdentityReport> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..family.len())
            .step_by(chunk)
            .map(|start| {
                let (family, info) = (&family, &info);
                scope.spawn(move || check_range(family, info, start..(start + chunk).min(family.len())))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("checker thread panicked")).collect()
    });
    let mut out = IdentityReport::default();
    for p in parts {
        out.checked += p.checked;
        out.violations.extend(p.violations);
    }
    out
}

fn check_range(family: &[WeightDiagram], info: &[Info], range: std::ops::Range<usize>) -> IdentityReport {
    use Symbol::{Empty, Gt, Lt, Times};
    let mut c = Checker { mult: Mult::default(), report: IdentityReport::default() };
    let specs: Vec<Vec<XSpec>> = (0..=2).map(odd_elements).collect();
    for (f, fi) in family[range.clone()].iter().zip(&info[range]) {
        for (g, gi) in family.iter().zip(info) {
            let Some(d) = f.size().checked_sub(g.size()) else { continue };
            if d > 2 || (f.grid() != g.grid() && g.size() > 0) {
                continue;
            }
            let top = f.len().max(g.len()) + 1;
            for x in &specs[d] {
                for p in 1..=top {
                    let (a, b) = (f.symbol(p), f.symbol(p + 1));
                    let (s, t) = (g.symbol(p), g.symbol(p + 1));
                    for core in [Gt, Lt] {
                        if a == core && s == core && is_star(b) && is_star(t) {
                            c.equal("swap", f, g, &swap(f, p), &swap(g, p), x);
                        }
                        if b == core && t == core && is_star(a) && is_star(s) {
                            c.equal("swap", f, g, &swap(f, p), &swap(g, p), x);
                        }
                    }
                    if (s, t) == (Times, Empty) {
                        if a == Empty && is_star(b) {
                            c.zero("empty-over-times", f, g, x);
                        }
                        if (a, b) == (Times, Times) {
                            c.zero("double-times", f, g, x);
                        }
                        if (a, b) == (Times, Empty) {
                            c.equal("times-to-core", f, g, &pair(f, p, Lt, Gt), &pair(g, p, Lt, Gt), x);
                        }
                    }
                    if (a, b) == (Lt, Gt) && (s, t) == (Lt, Gt) {
                        c.equal("times-to-core", f, g, &pair(f, p, Times, Empty), &pair(g, p, Times, Empty), x);
                    }
                }
                if f.grid() == Grid::Integral && g.grid() == Grid::Integral {
                    wedge_rules(&mut c, f, g, x);
                }
                if fi.stable && gi.stable && fi.core == gi.core {
                    if !fi.core.is_empty() {
                        c.equal("howl", f, g, &fi.howl, &gi.howl, x);
                    } else if f.grid() == g.grid() {
                        add_core(&mut c, f, g, x);
                    }
                }
            }
        }
    }
    c.report
}

fn wedge_rules(c: &mut Checker, f: &WeightDiagram, g: &WeightDiagram, x: &XSpec) {
    use Symbol::{Empty, Gt, Times};
    let (a, s) = (f.symbol(1), g.symbol(1));
    if a == Times && s == Empty && g.wedges() >= 1 {
        c.zero("wedge-times", f, g, x);
    }
    if f.wedges() >= 1 && g.wedges() >= 1 && a == Empty && s == Empty {
        let f2 = f.with_wedges(f.wedges() - 1).with_symbol(1, Gt);
        let g2 = g.with_wedges(g.wedges() - 1).with_symbol(1, Gt);
        c.equal("wedge-to-core", f, g, &f2, &g2, x);
    }
    if a == Gt && s == Gt {
        let f2 = f.with_wedges(f.wedges() + 1).with_symbol(1, Empty);
        let g2 = g.with_wedges(g.wedges() + 1).with_symbol(1, Empty);
        c.equal("wedge-to-core", f, g, &f2, &g2, x);
    }
}

/// Glue a common core to the right of a core-free pair; the pair stays stable.
fn add_core(c: &mut Checker, f: &WeightDiagram, g: &WeightDiagram, x: &XSpec) {
    use Symbol::{Empty, Gt, Lt};
    let start = reach(f).max(reach(g)) + 2;
    for core in [&[Gt][..], &[Lt], &[Gt, Lt], &[Lt, Gt], &[Gt, Empty, Lt]] {
        let (mut f2, mut g2) = (f.clone(), g.clone());
        for (i, &s) in core.iter().enumerate() {
            f2 = f2.with_symbol(start + i, s);
            g2 = g2.with_symbol(start + i, s);
        }
        c.equal("howl", &f2, &g2, f, g, x);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::diagrams;

    fn d(s: &str) -> WeightDiagram {
        WeightDiagram::parse(s).unwrap()
    }

    #[test]
    fn small_family_is_consistent() {
        let mut fam = diagrams(Grid::Integral, 4, 4);
        fam.extend(diagrams(Grid::HalfIntegral, 4, 4));
        let r = check_cancellation_identities(&fam);
        assert!(r.checked > 1000);
        assert!(r.violations.is_empty(), "{:?}", &r.violations[..r.violations.len().min(5)]);
    }

    #[test]
    fn detects_a_wrong_value() {
        let mut c = Checker { mult: Mult::default(), report: IdentityReport::default() };
        let (f, g) = (d("int: x"), d("int:"));
        c.zero("probe", &f, &g, &XSpec::nilpotent());
        assert_eq!(c.report.violations.len(), 1);
        assert_eq!(c.report.violations[0].lhs, 2);
    }
}
