//! Arc diagrams over weight diagrams.

use std::fmt;

use crate::diagram::{Grid, Symbol, WeightDiagram};
use crate::error::{Error, Result};
use crate::weight::{fmt_rat, half, Weight};
use crate::Rat;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ArcKind {
    Full,
    Half,
}

/// An arc between two slots; `left == 0` is the wedge position and marks a half arc.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arc {
    pub left: usize,
    pub right: usize,
    pub kind: ArcKind,
}

impl Arc {
    pub fn full(left: usize, right: usize) -> Self {
        Arc { left, right, kind: ArcKind::Full }
    }

    pub fn half(right: usize) -> Self {
        Arc { left: 0, right, kind: ArcKind::Half }
    }

    /// `self > other`: `other` lies strictly under `self`. Half arcs are nested by their
    /// right ends.
    pub fn covers(&self, other: &Arc) -> bool {
        if self.left == 0 && other.left == 0 {
            return self.right > other.right;
        }
        self.left < other.left && other.right < self.right
    }

    pub fn is_minimal_shape(&self) -> bool {
        self.right == self.left + 1
    }

    /// `arc(a;b)` with grid positions.
    pub fn label(&self, grid: Grid) -> String {
        let pos = |k: usize| -> Rat {
            match (grid, k) {
                (_, 0) => Rat::from_integer(0),
                (Grid::Integral, k) => Rat::from_integer(k as i64),
                (Grid::HalfIntegral, k) => half(2 * k as i64 - 1),
            }
        };
        format!("({};{})", fmt_rat(&pos(self.left)), fmt_rat(&pos(self.right)))
    }
}

/// The unique arc diagram `Arc(f)` of a weight diagram `f`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArcDiagram {
    base: WeightDiagram,
    arcs: Vec<Arc>,
}

impl ArcDiagram {
    /// Right-to-left over the `x`, each claiming the nearest unclaimed empty slot to its
    /// right; then the wedges claim the nearest remaining empty slots, innermost first.
    pub fn build(d: &WeightDiagram) -> Self {
        let mut claimed = vec![false; d.len() + 2 * d.size() + 2];
        let mut arcs = Vec::new();
        let claim = |from: usize, claimed: &mut Vec<bool>| -> usize {
            let mut k = from + 1;
            loop {
                if k >= claimed.len() {
                    claimed.resize(k + 1, false);
                }
                if d.symbol(k) == Symbol::Empty && !claimed[k] {
                    claimed[k] = true;
                    return k;
                }
                k += 1;
            }
        };
        for t in d.times_slots().into_iter().rev() {
            let r = claim(t, &mut claimed);
            arcs.push(Arc::full(t, r));
        }
        for _ in 0..d.wedges() {
            let r = claim(0, &mut claimed);
            arcs.push(Arc::half(r));
        }
        arcs.sort();
        let a = ArcDiagram { base: d.clone(), arcs };
        debug_assert!(a.validate().is_ok(), "{:?}", a.validate());
        a
    }

    pub fn from_weight(w: &Weight) -> Result<Self> {
        Ok(Self::build(&WeightDiagram::from_weight(w)?))
    }

    pub fn base(&self) -> &WeightDiagram {
        &self.base
    }

    /// Arcs sorted by `(left, right)`.
    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn contains(&self, a: &Arc) -> bool {
        self.arcs.binary_search(a).is_ok()
    }

    pub fn is_right_end(&self, k: usize) -> bool {
        self.arcs.iter().any(|a| a.right == k)
    }

    /// Slot `k >= 1` is empty and no arc ends there.
    pub fn is_free(&self, k: usize) -> bool {
        k >= 1 && self.base.symbol(k) == Symbol::Empty && !self.is_right_end(k)
    }

    /// Free slots in `1..=up_to`.
    pub fn free_slots(&self, up_to: usize) -> Vec<usize> {
        (1..=up_to).filter(|&k| self.is_free(k)).collect()
    }

    /// Arcs not covered by any other arc, sorted.
    pub fn maximal_arcs(&self) -> Vec<Arc> {
        self.arcs
            .iter()
            .filter(|a| !self.arcs.iter().any(|b| b.covers(a)))
            .copied()
            .collect()
    }

    pub fn maximal_full_arcs(&self) -> Vec<Arc> {
        self.maximal_arcs().into_iter().filter(|a| a.kind == ArcKind::Full).collect()
    }

    /// The outermost half arc, if any.
    pub fn outer_half_arc(&self) -> Option<Arc> {
        self.arcs.iter().filter(|a| a.kind == ArcKind::Half).max_by_key(|a| a.right).copied()
    }

    /// Erase the `x` (or one wedge) at the left end of a maximal arc and rebuild.
    pub fn remove_maximal_arc(&self, arc: &Arc) -> Result<ArcDiagram> {
        if !self.maximal_arcs().contains(arc) {
            return Err(Error::NotMaximal(arc.label(self.base.grid())));
        }
        let mut d = self.base.clone();
        match arc.kind {
            ArcKind::Full => d.set(arc.left, Symbol::Empty),
            ArcKind::Half => d.set_wedges(d.wedges() - 1),
        }
        Ok(ArcDiagram::build(&d))
    }

    /// Remove the outermost half arc.
    pub fn remove_half_arc(&self) -> Result<ArcDiagram> {
        let a = self.outer_half_arc().ok_or_else(|| Error::NotMaximal("(0;-)".into()))?;
        self.remove_maximal_arc(&a)
    }

    /// Every arc of `self` is an arc of `big`.
    pub fn is_subset_of(&self, big: &ArcDiagram) -> bool {
        self.arcs.iter().all(|a| big.contains(a))
    }

    /// Check the defining properties of an arc diagram.
    pub fn validate(&self) -> std::result::Result<(), String> {
        let d = &self.base;
        for a in &self.arcs {
            if a.right <= a.left {
                return Err(format!("degenerate arc {a:?}"));
            }
            if d.symbol(a.right) != Symbol::Empty {
                return Err(format!("arc {a:?} ends on a symbol"));
            }
            let left_ok = match a.kind {
                ArcKind::Half => a.left == 0 && d.grid() == Grid::Integral,
                ArcKind::Full => a.left > 0 && d.symbol(a.left) == Symbol::Times,
            };
            if !left_ok {
                return Err(format!("arc {a:?} has a bad left end"));
            }
            for k in a.left + 1..a.right {
                if self.is_free(k) {
                    return Err(format!("free slot {k} under {a:?}"));
                }
            }
        }
        for (i, a) in self.arcs.iter().enumerate() {
            for b in &self.arcs[i + 1..] {
                let (p, q) = if a.left <= b.left { (a, b) } else { (b, a) };
                let nested = p.left == 0 && q.left == 0 || q.right < p.right;
                let disjoint = p.right < q.left;
                if !(nested || disjoint) || p.right == q.right {
                    return Err(format!("arcs {p:?} and {q:?} intersect"));
                }
            }
        }
        let times = d.times_slots();
        let full = self.arcs.iter().filter(|a| a.kind == ArcKind::Full).count();
        let halfs = self.arcs.len() - full;
        if full != times.len() || halfs != d.wedges() {
            return Err("each x and each wedge must start exactly one arc".into());
        }
        for t in times {
            if self.arcs.iter().filter(|a| a.left == t).count() != 1 {
                return Err(format!("x at slot {t} starts no arc or several"));
            }
        }
        Ok(())
    }
}

impl fmt::Display for ArcDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self
            .arcs
            .iter()
            .map(|a| {
                let kind = match a.kind {
                    ArcKind::Full => "full",
                    ArcKind::Half => "half",
                };
                format!("{} {kind}", a.label(self.base.grid()))
            })
            .collect();
        write!(f, "{}", labels.join(", "))
    }
}

/// `shr_a`: delete the slots of the minimal arc at `a` (`a = 0`: one wedge and slot 1).
pub fn shrink(d: &WeightDiagram, a: usize) -> Result<WeightDiagram> {
    let arcs = ArcDiagram::build(d);
    let want = if a == 0 { Arc::half(1) } else { Arc::full(a, a + 1) };
    if !arcs.contains(&want) {
        return Err(Error::NoMinimalArcAt(want.label(d.grid())));
    }
    let mut out = d.clone();
    if a == 0 {
        out.set_wedges(out.wedges() - 1);
        out.delete_slot(1);
    } else {
        out.delete_slot(a + 1);
        out.delete_slot(a);
    }
    Ok(out)
}

/// `g(lambda, k)`: one (integral) or one half (half-integral) plus the number of free
/// nonzero slots strictly left of the `x` at slot `k`.
pub fn g_value(d: &WeightDiagram, k: usize) -> Rat {
    let arcs = ArcDiagram::build(d);
    let ell = arcs.free_slots(k.saturating_sub(1)).len() as i64;
    match d.grid() {
        Grid::Integral => Rat::from_integer(ell + 1),
        Grid::HalfIntegral => Rat::from_integer(ell) + half(1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> WeightDiagram {
        WeightDiagram::parse(s).unwrap()
    }

    fn w(s: &str) -> Weight {
        Weight::parse(s).unwrap()
    }

    #[test]
    fn integral_figure() {
        let a = ArcDiagram::from_weight(&w("(7,4,1,0,0,-1,-7)")).unwrap();
        assert_eq!(a.base(), &d("int: ^2 x o o > o o x o"));
        assert_eq!(a.arcs(), &[Arc::half(3), Arc::half(5), Arc::full(1, 2), Arc::full(7, 8)]);
        assert_eq!(a.maximal_arcs(), vec![Arc::half(5), Arc::full(7, 8)]);
    }

    #[test]
    fn half_integral_figure() {
        let a = ArcDiagram::from_weight(&w("(5/2,1/2,-1/2,-3/2,-5/2)")).unwrap();
        assert_eq!(a.base(), &d("half: x < x"));
        assert_eq!(a.arcs(), &[Arc::full(1, 5), Arc::full(3, 4)]);
        assert_eq!(a.maximal_arcs(), vec![Arc::full(1, 5)]);
        assert_eq!(a.arcs()[0].label(Grid::HalfIntegral), "(1/2;9/2)");
    }

    #[test]
    fn empty_has_no_arcs() {
        let a = ArcDiagram::build(&d("int: > o <"));
        assert!(a.arcs().is_empty());
        assert!(a.maximal_arcs().is_empty());
        assert_eq!(ArcDiagram::build(&d("int:")).free_slots(3), vec![1, 2, 3]);
    }

    #[test]
    fn free_positions() {
        let a = ArcDiagram::build(&d("int: ^2 x o x"));
        assert_eq!(a.arcs(), &[Arc::half(5), Arc::half(6), Arc::full(1, 2), Arc::full(3, 4)]);
        assert_eq!(a.free_slots(9), vec![7, 8, 9]);
        assert_eq!(a.maximal_arcs(), vec![Arc::half(6)]);
        let h = ArcDiagram::build(&d("half: x o o x"));
        assert_eq!(h.arcs(), &[Arc::full(1, 2), Arc::full(4, 5)]);
        assert_eq!(h.free_slots(6), vec![3, 6]);
    }

    #[test]
    fn removal() {
        let a = ArcDiagram::from_weight(&w("(7,4,1,0,0,-1,-7)")).unwrap();
        let r = a.remove_maximal_arc(&Arc::full(7, 8)).unwrap();
        assert_eq!(r.base().to_weight(), w("(4,1,0,0,-1)"));
        assert!(r.is_subset_of(&a));
        let h = a.remove_maximal_arc(&Arc::half(5)).unwrap();
        assert_eq!(h.base().wedges(), 1);
        assert!(h.is_subset_of(&a));
        assert!(matches!(a.remove_maximal_arc(&Arc::full(1, 2)), Err(Error::NotMaximal(_))));
        assert!(a.is_subset_of(&a));
    }

    #[test]
    fn subset_counterexample() {
        let small = ArcDiagram::build(&d("int: ^2 o o x"));
        let big = ArcDiagram::build(&d("int: ^4 o x x o x"));
        assert!(small.contains(&Arc::half(2)));
        assert!(!big.contains(&Arc::half(2)));
        assert!(!small.is_subset_of(&big));
    }

    #[test]
    fn shrinking() {
        assert_eq!(shrink(&d("int: ^2 o x x o x"), 3).unwrap(), d("int: ^2 o x x"));
        assert_eq!(shrink(&d("int: ^3 o x o x"), 0).unwrap(), d("int: ^2 x o x"));
        assert!(matches!(shrink(&d("int: ^2 o x x o x"), 2), Err(Error::NoMinimalArcAt(_))));
    }

    #[test]
    fn grading_values() {
        let h = d("half: x o o x");
        assert_eq!(g_value(&h, 4), Rat::new(3, 2));
        assert_eq!(g_value(&h, 1), Rat::new(1, 2));
        let i = d("int: ^2 x o x");
        assert_eq!(g_value(&i, 3), Rat::from_integer(1));
        assert_eq!(g_value(&i, 1), Rat::from_integer(1));
        let l = WeightDiagram::from_weight(&w("(7,4,2,0,-2,-4,-7)")).unwrap();
        assert_eq!(g_value(&l, 2), Rat::from_integer(1));
        assert_eq!(g_value(&l, 4), Rat::from_integer(1));
        assert_eq!(g_value(&l, 7), Rat::from_integer(2));
    }
}
