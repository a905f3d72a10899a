//! Weight diagrams, core diagrams, `howl` and stabilization.
//!
//! A diagram lives on the nonnegative integral ray or on `1/2 + N`. Positions are
//! stored as *slots* `1, 2, 3, ...`: slot `k` is position `k` on the integral grid and
//! position `k - 1/2` on the half-integral grid. The zero position of the integral grid
//! carries the wedge stack and is addressed as slot `0`.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::arcs::ArcDiagram;
use crate::error::{Error, Result};
use crate::weight::{doubled, half, Integrality, Weight};
use crate::Rat;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Grid {
    Integral,
    HalfIntegral,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    Empty,
    Gt,
    Lt,
    Times,
}

impl Symbol {
    pub fn is_core(self) -> bool {
        matches!(self, Symbol::Gt | Symbol::Lt)
    }

    fn ascii(self) -> char {
        match self {
            Symbol::Empty => 'o',
            Symbol::Gt => '>',
            Symbol::Lt => '<',
            Symbol::Times => 'x',
        }
    }

    fn glyph(self) -> char {
        match self {
            Symbol::Empty => '∘',
            Symbol::Gt => '>',
            Symbol::Lt => '<',
            Symbol::Times => '×',
        }
    }
}

/// Outcome of [`WeightDiagram::succ_compare`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuccOrder {
    Greater,
    Less,
    Equal,
    Incomparable,
}

/// A weight diagram. Trailing empty slots are never stored, so structural equality is
/// diagram equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightDiagram {
    grid: Grid,
    wedges: usize,
    slots: Vec<Symbol>,
}

/// A diagram containing only `>` and `<`.
pub type CoreDiagram = WeightDiagram;

impl WeightDiagram {
    pub fn new(grid: Grid, wedges: usize, slots: Vec<Symbol>) -> Result<Self> {
        if grid == Grid::HalfIntegral && wedges > 0 {
            return Err(Error::Parse("the half-integral grid has no zero position".into()));
        }
        let mut d = WeightDiagram { grid, wedges, slots };
        d.trim();
        Ok(d)
    }

    /// The empty diagram on `grid`.
    pub fn empty(grid: Grid) -> Self {
        WeightDiagram { grid, wedges: 0, slots: Vec::new() }
    }

    pub fn from_weight(w: &Weight) -> Result<Self> {
        if !w.is_dominant() {
            return Err(Error::NonDominant(w.to_string()));
        }
        let grid = match w.integrality_class() {
            Integrality::Integral => Grid::Integral,
            Integrality::HalfIntegral => Grid::HalfIntegral,
            Integrality::Other => return Err(Error::MixedIntegrality(w.to_string())),
        };
        let mut d = WeightDiagram::empty(grid);
        for c in w.coords() {
            if c.is_zero() {
                d.wedges += 1;
                continue;
            }
            let slot = value_to_slot(grid, &c.abs());
            let add = if c.is_positive() { Symbol::Gt } else { Symbol::Lt };
            let cur = d.symbol(slot);
            let new = match (cur, add) {
                (Symbol::Empty, s) => s,
                (Symbol::Gt, Symbol::Lt) | (Symbol::Lt, Symbol::Gt) => Symbol::Times,
                _ => unreachable!("dominant weights have distinct nonzero coordinates"),
            };
            d.set(slot, new);
        }
        Ok(d)
    }

    pub fn to_weight(&self) -> Weight {
        let mut coords: Vec<Rat> = vec![Rat::zero(); self.wedges];
        for (k, s) in self.iter_slots() {
            let v = self.slot_value(k);
            match s {
                Symbol::Gt => coords.push(v),
                Symbol::Lt => coords.push(-v),
                Symbol::Times => {
                    coords.push(v);
                    coords.push(-v);
                }
                Symbol::Empty => {}
            }
        }
        coords.sort_by(|a, b| b.cmp(a));
        Weight::new(coords)
    }

    pub fn grid(&self) -> Grid {
        self.grid
    }

    pub fn wedges(&self) -> usize {
        self.wedges
    }

    /// One past the last occupied slot.
    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.wedges == 0 && self.slots.is_empty()
    }

    /// Symbol at slot `k >= 1`; slots beyond the stored range are empty.
    pub fn symbol(&self, k: usize) -> Symbol {
        assert!(k >= 1, "slot 0 is the wedge position");
        self.slots.get(k - 1).copied().unwrap_or(Symbol::Empty)
    }

    /// `(slot, symbol)` for the stored slots.
    pub fn iter_slots(&self) -> impl Iterator<Item = (usize, Symbol)> + '_ {
        self.slots.iter().enumerate().map(|(i, s)| (i + 1, *s))
    }

    /// Coordinate value of slot `k`.
    pub fn slot_value(&self, k: usize) -> Rat {
        match self.grid {
            Grid::Integral => Rat::from_integer(k as i64),
            Grid::HalfIntegral => half(2 * k as i64 - 1),
        }
    }

    /// `2 * position` of slot `k` (slot 0 is position 0).
    pub fn doubled_position(&self, k: usize) -> i64 {
        if k == 0 {
            return 0;
        }
        doubled(&self.slot_value(k)).expect("positions lie in 1/2 Z")
    }

    /// Slot holding the position `pos`, if `pos` lies on this grid.
    pub fn slot_of(&self, pos: &Rat) -> Option<usize> {
        if pos.is_zero() {
            return (self.grid == Grid::Integral).then_some(0);
        }
        if pos.is_negative() {
            return None;
        }
        let d = doubled(pos)?;
        match self.grid {
            Grid::Integral if d % 2 == 0 => Some((d / 2) as usize),
            Grid::HalfIntegral if d % 2 != 0 => Some(((d + 1) / 2) as usize),
            _ => None,
        }
    }

    /// The rank `n` of the weight: `x` counts twice, wedges and core symbols once.
    pub fn size(&self) -> usize {
        self.wedges
            + self
                .slots
                .iter()
                .map(|s| match s {
                    Symbol::Empty => 0,
                    Symbol::Times => 2,
                    _ => 1,
                })
                .sum::<usize>()
    }

    pub fn times_slots(&self) -> Vec<usize> {
        self.iter_slots().filter(|(_, s)| *s == Symbol::Times).map(|(k, _)| k).collect()
    }

    pub fn core_slots(&self) -> Vec<usize> {
        self.iter_slots().filter(|(_, s)| s.is_core()).map(|(k, _)| k).collect()
    }

    /// Number of `x` plus half the wedges.
    pub fn atypicality(&self) -> Rat {
        Rat::from_integer(self.times_slots().len() as i64) + Rat::new(self.wedges as i64, 2)
    }

    pub fn with_symbol(&self, k: usize, s: Symbol) -> Self {
        let mut d = self.clone();
        d.set(k, s);
        d
    }

    pub fn with_wedges(&self, r: usize) -> Self {
        assert!(self.grid == Grid::Integral || r == 0);
        let mut d = self.clone();
        d.wedges = r;
        d
    }

    /// Erase every `x` and the wedge stack.
    pub fn core_diagram(&self) -> CoreDiagram {
        let slots = self
            .slots
            .iter()
            .map(|s| if s.is_core() { *s } else { Symbol::Empty })
            .collect();
        let mut d = WeightDiagram { grid: self.grid, wedges: 0, slots };
        d.trim();
        d
    }

    /// Delete the core slots and close up the gaps.
    pub fn howl(&self) -> Self {
        let slots = self.slots.iter().filter(|s| !s.is_core()).copied().collect();
        let mut d = WeightDiagram { grid: self.grid, wedges: self.wedges, slots };
        d.trim();
        d
    }

    /// Every `x` precedes every core symbol.
    pub fn is_stable(&self) -> bool {
        match (self.times_slots().last(), self.core_slots().first()) {
            (Some(t), Some(c)) => t < c,
            _ => true,
        }
    }

    /// A stable diagram with the same howl and the same ordered core symbols.
    ///
    /// Stable input is returned unchanged. Otherwise the howl keeps its slots and the
    /// core symbols are placed on consecutive slots starting two past the rightmost arc
    /// end of `Arc(howl)`.
    pub fn stabilize(&self) -> Self {
        if self.is_stable() {
            return self.clone();
        }
        let h = self.howl();
        let arcs = ArcDiagram::build(&h);
        let reach = arcs.arcs().iter().map(|a| a.right).max().unwrap_or(0).max(h.len());
        let mut d = h;
        for (i, k) in self.core_slots().into_iter().enumerate() {
            d.set(reach + 2 + i, self.symbol(k));
        }
        d
    }

    /// Lexicographic comparison of the descending `x` coordinates, padded by zeros.
    pub fn succ_compare(&self, other: &Self) -> Result<SuccOrder> {
        if self.core_diagram() != other.core_diagram() {
            return Err(Error::CoreMismatch);
        }
        if self.atypicality() != other.atypicality() {
            return Ok(SuccOrder::Incomparable);
        }
        let seq = |d: &Self| -> Vec<Rat> {
            d.times_slots().into_iter().rev().map(|k| d.slot_value(k)).collect()
        };
        let (a, b) = (seq(self), seq(other));
        let len = a.len().max(b.len());
        for i in 0..len {
            let x = a.get(i).copied().unwrap_or_default();
            let y = b.get(i).copied().unwrap_or_default();
            match x.cmp(&y) {
                Ordering::Greater => return Ok(SuccOrder::Greater),
                Ordering::Less => return Ok(SuccOrder::Less),
                Ordering::Equal => {}
            }
        }
        Ok(SuccOrder::Equal)
    }

    /// Parses `int: ^2 o x < o >` or `half: x o x`. The symbols after the optional wedge
    /// count are slots `1, 2, ...`; position 0 is never written.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let (grid, rest) = if let Some(r) = s.strip_prefix("int:") {
            (Grid::Integral, r)
        } else if let Some(r) = s.strip_prefix("half:") {
            (Grid::HalfIntegral, r)
        } else {
            return Err(Error::Parse(format!("diagram needs an `int:` or `half:` header: {s:?}")));
        };
        let mut chars = rest.chars().filter(|c| !c.is_whitespace()).peekable();
        let mut wedges = 0;
        if chars.peek() == Some(&'^') {
            chars.next();
            let mut digits = String::new();
            while let Some(c) = chars.peek().copied().filter(char::is_ascii_digit) {
                digits.push(c);
                chars.next();
            }
            wedges = digits
                .parse()
                .map_err(|_| Error::Parse(format!("wedge count missing after `^` in {s:?}")))?;
        }
        let slots = chars
            .map(|c| match c {
                'o' | '.' | '∘' => Ok(Symbol::Empty),
                '>' => Ok(Symbol::Gt),
                '<' => Ok(Symbol::Lt),
                'x' | '×' => Ok(Symbol::Times),
                other => Err(Error::Parse(format!("unknown diagram symbol {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        WeightDiagram::new(grid, wedges, slots)
    }

    /// Unicode rendering in the style `∧²∘×<∘>`. On the integral grid the first glyph is
    /// position 0, so a diagram without wedges starts with `∘`.
    pub fn glyphs(&self) -> String {
        let mut out = String::new();
        if self.wedges > 0 {
            out.push('∧');
            if self.wedges > 1 {
                out.push_str(&superscript(self.wedges));
            }
        } else if self.grid == Grid::Integral {
            out.push('∘');
        }
        out.extend(self.slots.iter().map(|s| s.glyph()));
        out
    }

    pub(crate) fn set(&mut self, k: usize, s: Symbol) {
        assert!(k >= 1);
        if self.slots.len() < k {
            self.slots.resize(k, Symbol::Empty);
        }
        self.slots[k - 1] = s;
        self.trim();
    }

    /// Remove slot `k`, shifting later slots left by one.
    pub(crate) fn delete_slot(&mut self, k: usize) {
        if k <= self.slots.len() {
            self.slots.remove(k - 1);
        }
        self.trim();
    }

    pub(crate) fn set_wedges(&mut self, r: usize) {
        self.wedges = r;
    }

    fn trim(&mut self) {
        while self.slots.last() == Some(&Symbol::Empty) {
            self.slots.pop();
        }
    }
}

impl fmt::Display for WeightDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let head = match self.grid {
            Grid::Integral => "int:",
            Grid::HalfIntegral => "half:",
        };
        write!(f, "{head}")?;
        if self.wedges > 0 {
            write!(f, " ^{}", self.wedges)?;
        }
        for s in &self.slots {
            write!(f, " {}", s.ascii())?;
        }
        Ok(())
    }
}

fn value_to_slot(grid: Grid, v: &Rat) -> usize {
    match grid {
        Grid::Integral => v.to_integer() as usize,
        Grid::HalfIntegral => ((doubled(v).expect("half-integral") + 1) / 2) as usize,
    }
}

fn superscript(k: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    k.to_string().chars().map(|c| DIGITS[c.to_digit(10).unwrap() as usize]).collect()
}
