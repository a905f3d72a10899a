//! Finite families of dominant weights and diagrams for exhaustive checks.

use crate::diagram::{Grid, Symbol, WeightDiagram};
use crate::weight::Weight;

const SYMBOLS: [Symbol; 4] = [Symbol::Empty, Symbol::Gt, Symbol::Lt, Symbol::Times];

/// Every diagram on `grid` of size at most `max_size` whose symbols sit in slots
/// `1..=max_slot`.
pub fn diagrams(grid: Grid, max_size: usize, max_slot: usize) -> Vec<WeightDiagram> {
    let mut out = Vec::new();
    let max_wedges = if grid == Grid::Integral { max_size } else { 0 };
    let mut slots = Vec::with_capacity(max_slot);
    for r in 0..=max_wedges {
        fill(grid, r, max_size - r, max_slot, &mut slots, &mut out);
    }
    out
}

fn fill(
    grid: Grid,
    wedges: usize,
    budget: usize,
    max_slot: usize,
    slots: &mut Vec<Symbol>,
    out: &mut Vec<WeightDiagram>,
) {
    if slots.len() == max_slot {
        out.push(WeightDiagram::new(grid, wedges, slots.clone()).expect("valid by construction"));
        return;
    }
    for s in SYMBOLS {
        let cost = match s {
            Symbol::Empty => 0,
            Symbol::Times => 2,
            _ => 1,
        };
        if cost <= budget {
            slots.push(s);
            fill(grid, wedges, budget - cost, max_slot, slots, out);
            slots.pop();
        }
    }
}

/// Dominant weights of `q(n)` with `|lambda_i| <= bound`, integral ones first.
pub fn dominant_weights(n: usize, bound: usize, half_integral: bool) -> Vec<Weight> {
    let mut grids = vec![Grid::Integral];
    if half_integral {
        grids.push(Grid::HalfIntegral);
    }
    grids
        .into_iter()
        .flat_map(|g| diagrams(g, n, bound))
        .filter(|d| d.size() == n && !(d.size() == 0 && d.grid() == Grid::HalfIntegral))
        .map(|d| d.to_weight())
        .collect()
}
