//! ASCII pictures of arc diagrams.
//!
//! Every position takes three columns. The bottom row carries the symbols (`^r` or `o`
//! at position 0), and each arc is drawn on the row given by its nesting height, so inner
//! arcs sit lower. Full arcs look like `(-----)`, half arcs like `(- - -)`.

use crate::arcs::{Arc, ArcDiagram, ArcKind};
use crate::diagram::{Grid, Symbol};

const WIDTH: usize = 3;

pub fn render_ascii(a: &ArcDiagram) -> String {
    let d = a.base();
    let last = a.arcs().iter().map(|x| x.right).max().unwrap_or(0).max(d.len());
    let cols = WIDTH * (last + 1);

    let heights: Vec<usize> = a.arcs().iter().map(|x| height(x, a.arcs())).collect();
    let rows = heights.iter().copied().max().unwrap_or(0);
    let mut grid = vec![vec![' '; cols]; rows];
    for (arc, &h) in a.arcs().iter().zip(&heights) {
        let row = &mut grid[rows - h];
        let (l, r) = (col(arc.left), col(arc.right));
        row[l] = '(';
        row[r] = ')';
        for (i, c) in row.iter_mut().enumerate().take(r).skip(l + 1) {
            *c = match arc.kind {
                ArcKind::Full => '-',
                ArcKind::Half if (i - l) % 2 == 1 => '-',
                ArcKind::Half => ' ',
            };
        }
    }

    let mut symbols = vec![' '; cols];
    let zero = match d.grid() {
        Grid::Integral if d.wedges() > 0 => format!("^{}", d.wedges()),
        Grid::Integral => "o".to_string(),
        Grid::HalfIntegral => " ".to_string(),
    };
    for (i, c) in zero.chars().enumerate() {
        if i < symbols.len() {
            symbols[i] = c;
        } else {
            symbols.push(c);
        }
    }
    for k in 1..=last {
        symbols[col(k)] = match d.symbol(k) {
            Symbol::Empty => 'o',
            Symbol::Gt => '>',
            Symbol::Lt => '<',
            Symbol::Times => 'x',
        };
    }

    let mut out = String::new();
    for line in grid.iter().chain(std::iter::once(&symbols)) {
        let s: String = line.iter().collect();
        out.push_str(s.trim_end());
        out.push('\n');
    }
    out
}

fn col(k: usize) -> usize {
    WIDTH * k
}

/// One more than the tallest arc nested under `a`.
fn height(a: &Arc, all: &[Arc]) -> usize {
    1 + all.iter().filter(|b| a.covers(b)).map(|b| height(b, all)).max().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::WeightDiagram;

    #[test]
    fn figure_layout() {
        let a = ArcDiagram::build(&WeightDiagram::parse("int: ^2 x o o > o o x o").unwrap());
        let pic = render_ascii(&a);
        let expected = "\
(- - - - - - - )
(- - - - )
   (--)              (--)
^2 x  o  o  >  o  o  x  o
";
        assert_eq!(pic, expected);
    }

    #[test]
    fn empty_diagram() {
        let a = ArcDiagram::build(&WeightDiagram::parse("int:").unwrap());
        assert_eq!(render_ascii(&a), "o\n");
    }

    #[test]
    fn half_grid() {
        let a = ArcDiagram::build(&WeightDiagram::parse("half: x < x").unwrap());
        let pic = render_ascii(&a);
        assert_eq!(pic.lines().count(), 3);
        assert!(pic.lines().last().unwrap().trim_start().starts_with('x'));
    }
}
