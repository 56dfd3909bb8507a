use std::fmt;

use crate::diagrams::{Cell, Shape};
use crate::error::{TableauError, Violation};

use super::{check_rows, parse_symbols};

/// Content of a cell of an alternative tableau.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Empty,
    Left,
    Up,
}

impl Symbol {
    pub fn as_char(self) -> char {
        match self {
            Symbol::Empty => '.',
            Symbol::Left => 'L',
            Symbol::Up => 'U',
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            '.' => Some(Symbol::Empty),
            'L' => Some(Symbol::Left),
            'U' => Some(Symbol::Up),
            _ => None,
        }
    }

    /// The arrow seen in the mirror across the main diagonal.
    pub fn reflect(self) -> Self {
        match self {
            Symbol::Empty => Symbol::Empty,
            Symbol::Left => Symbol::Up,
            Symbol::Up => Symbol::Left,
        }
    }
}

/// An alternative tableau: a partial filling with left and up arrows.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AlternativeTableau {
    shape: Shape,
    rows: Vec<Vec<Symbol>>,
}

impl AlternativeTableau {
    pub fn new(shape: Shape, rows: Vec<Vec<Symbol>>) -> Result<Self, TableauError> {
        check_rows(shape.rows(), &rows)?;
        let t = AlternativeTableau { shape, rows };
        t.validate()?;
        Ok(t)
    }

    pub(crate) fn new_unchecked(shape: Shape, rows: Vec<Vec<Symbol>>) -> Self {
        AlternativeTableau { shape, rows }
    }

    /// An arrow-free filling of `shape`.
    pub fn empty(shape: Shape) -> Self {
        let rows = shape.rows().iter().map(|&l| vec![Symbol::Empty; l]).collect();
        AlternativeTableau { shape, rows }
    }

    /// Parses a row-major string over `.`, `L`, `U`.
    pub fn from_filling(shape: Shape, filling: &str) -> Result<Self, TableauError> {
        let rows = parse_symbols(shape.rows(), filling, Symbol::from_char)?;
        Self::new(shape, rows)
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<Symbol>] {
        &self.rows
    }

    pub fn get(&self, cell: Cell) -> Symbol {
        self.rows[cell.row - 1][cell.col - 1]
    }

    /// Arrow cells in row-major order.
    pub fn arrows(&self) -> Vec<(Cell, Symbol)> {
        self.shape
            .cells()
            .map(|c| (c, self.get(c)))
            .filter(|&(_, s)| s != Symbol::Empty)
            .collect()
    }

    pub fn validate(&self) -> Result<(), Violation> {
        let mut col_first: Vec<Option<Cell>> = vec![None; self.shape.cols()];
        for (i, row) in self.rows.iter().enumerate() {
            let mut row_first: Option<Cell> = None;
            for (j, &s) in row.iter().enumerate() {
                let cell = Cell::new(i + 1, j + 1);
                match (s, row_first, col_first[j]) {
                    (Symbol::Left, Some(pointed), _) | (Symbol::Up, _, Some(pointed)) => {
                        return Err(Violation::PointedCellFilled { arrow: cell, pointed });
                    }
                    _ => {}
                }
                if s != Symbol::Empty {
                    row_first.get_or_insert(cell);
                    col_first[j].get_or_insert(cell);
                }
            }
        }
        Ok(())
    }

    /// Mirror image across the main diagonal, arrows turned accordingly.
    pub fn reflect(&self) -> AlternativeTableau {
        let shape = self.shape.transpose();
        let rows = (1..=shape.k())
            .map(|i| (1..=shape.row_len(i)).map(|j| self.get(Cell::new(j, i)).reflect()).collect())
            .collect();
        AlternativeTableau { shape, rows }
    }

    pub fn is_symmetric(&self) -> bool {
        self.shape.is_diagonally_symmetric() && self.reflect() == *self
    }

    pub fn filling_string(&self) -> String {
        self.rows.iter().flatten().map(|s| s.as_char()).collect()
    }

    /// `<` and `^` for arrows, `.` for empty cells.
    pub fn render_ascii(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            out.extend(row.iter().map(|s| match s {
                Symbol::Empty => '.',
                Symbol::Left => '<',
                Symbol::Up => '^',
            }));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for AlternativeTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_ascii())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arrow_pointing_at_arrow_is_invalid() {
        let shape = Shape::new(4, vec![2, 2]).unwrap();
        assert_eq!(
            AlternativeTableau::from_filling(shape.clone(), "UL..").unwrap_err(),
            TableauError::Invalid(Violation::PointedCellFilled { arrow: Cell::new(1, 2), pointed: Cell::new(1, 1) })
        );
        assert_eq!(
            AlternativeTableau::from_filling(shape.clone(), "L.U.").unwrap_err(),
            TableauError::Invalid(Violation::PointedCellFilled { arrow: Cell::new(2, 1), pointed: Cell::new(1, 1) })
        );
        assert!(AlternativeTableau::from_filling(shape, "LUUL").is_err());
    }

    #[test]
    fn arrows_may_share_lines_when_not_pointing() {
        let shape = Shape::new(4, vec![2, 2]).unwrap();
        assert!(AlternativeTableau::from_filling(shape.clone(), "LU..").is_ok());
        assert!(AlternativeTableau::from_filling(shape.clone(), "U.L.").is_ok());
        assert!(AlternativeTableau::from_filling(shape, "L..U").is_ok());
    }

    #[test]
    fn figure_two_symmetric_tableau() {
        let shape = Shape::new(8, vec![3, 3, 2, 0]).unwrap();
        let t = AlternativeTableau::from_filling(shape, ".LUU..L.").unwrap();
        assert!(t.is_symmetric());
        assert_eq!(t.reflect(), t);
        assert_eq!(t.arrows().len(), 4);
    }

    #[test]
    fn reflect_swaps_arrows() {
        let shape = Shape::new(3, vec![2]).unwrap();
        let t = AlternativeTableau::from_filling(shape, "L.").unwrap();
        let r = t.reflect();
        assert_eq!(r.shape().rows(), &[1, 1]);
        assert_eq!(r.filling_string(), "U.");
        assert!(!t.is_symmetric());
    }
}
