use std::fmt;

use crate::diagrams::{Cell, Shape};
use crate::error::{StructuralError, TableauError, Violation};

use super::{check_rows, parse_symbols, CornerRecord, NocClass};

/// A tree-like tableau: a pointed filling of a diagram without empty rows or
/// columns. Its size is its number of points, one less than its length.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TreeLikeTableau {
    shape: Shape,
    rows: Vec<Vec<bool>>,
}

/// Point counts on the border of a tree-like tableau.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct WeightStats {
    /// Non-root points in the first row.
    pub top: usize,
    /// Non-root points in the first column.
    pub left: usize,
}

/// Weights of a symmetric tree-like tableau.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymmetricStats {
    pub left_star: i64,
    pub top_star: i64,
    pub diag: usize,
}

impl TreeLikeTableau {
    pub fn new(shape: Shape, rows: Vec<Vec<bool>>) -> Result<Self, TableauError> {
        check_rows(shape.rows(), &rows)?;
        let t = TreeLikeTableau { shape, rows };
        t.validate()?;
        Ok(t)
    }

    pub(crate) fn new_unchecked(shape: Shape, rows: Vec<Vec<bool>>) -> Self {
        TreeLikeTableau { shape, rows }
    }

    pub fn from_dots(shape: Shape, dots: &[Cell]) -> Result<Self, TableauError> {
        let mut rows: Vec<Vec<bool>> = shape.rows().iter().map(|&l| vec![false; l]).collect();
        for d in dots {
            if !shape.contains(*d) {
                return Err(StructuralError::CellOutside(*d).into());
            }
            rows[d.row - 1][d.col - 1] = true;
        }
        Self::new(shape, rows)
    }

    /// Parses a row-major string over `.` and `D`.
    pub fn from_filling(shape: Shape, filling: &str) -> Result<Self, TableauError> {
        let rows = parse_symbols(shape.rows(), filling, |c| match c {
            '.' => Some(false),
            'D' => Some(true),
            _ => None,
        })?;
        Self::new(shape, rows)
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<bool>] {
        &self.rows
    }

    pub fn get(&self, cell: Cell) -> bool {
        self.shape.contains(cell) && self.rows[cell.row - 1][cell.col - 1]
    }

    pub fn dots(&self) -> Vec<Cell> {
        self.shape.cells().filter(|&c| self.get(c)).collect()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().flatten().filter(|&&b| b).count()
    }

    pub fn num_rows(&self) -> usize {
        self.shape.k()
    }

    pub fn num_cols(&self) -> usize {
        self.shape.cols()
    }

    pub fn validate(&self) -> Result<(), Violation> {
        if !self.get(Cell::new(1, 1)) {
            return Err(Violation::MissingRoot);
        }
        let mut col_has = vec![false; self.shape.cols()];
        for (i, row) in self.rows.iter().enumerate() {
            let mut row_has = false;
            for (j, &dot) in row.iter().enumerate() {
                if dot && (i, j) != (0, 0) {
                    let cell = Cell::new(i + 1, j + 1);
                    match (col_has[j], row_has) {
                        (true, true) => return Err(Violation::TwoParents(cell)),
                        (false, false) => return Err(Violation::NoParent(cell)),
                        _ => {}
                    }
                }
                row_has |= dot;
                col_has[j] |= dot;
            }
            if !row_has {
                return Err(Violation::EmptyRow { row: i + 1 });
            }
        }
        match col_has.iter().position(|&b| !b) {
            Some(j) => Err(Violation::EmptyColumn { col: j + 1 }),
            None => Ok(()),
        }
    }

    pub fn filling_string(&self) -> String {
        self.rows.iter().flatten().map(|&b| if b { 'D' } else { '.' }).collect()
    }

    /// Mirror image across the main diagonal.
    pub fn transpose(&self) -> TreeLikeTableau {
        let shape = self.shape.transpose();
        let rows = (1..=shape.k())
            .map(|i| (1..=shape.row_len(i)).map(|j| self.get(Cell::new(j, i))).collect())
            .collect();
        TreeLikeTableau { shape, rows }
    }

    pub fn is_symmetric(&self) -> bool {
        self.shape.is_diagonally_symmetric() && self.transpose() == *self
    }

    pub fn weight_stats(&self) -> WeightStats {
        let top = self.rows[0].iter().skip(1).filter(|&&b| b).count();
        let left = self.rows.iter().skip(1).filter(|r| r[0]).count();
        WeightStats { top, left }
    }

    /// `left - 1`, defined on symmetric tableaux only; it is `-1` for the
    /// single root point.
    pub fn left_star(&self) -> Result<i64, TableauError> {
        if !self.is_symmetric() {
            return Err(TableauError::NotSymmetric("left*"));
        }
        Ok(self.weight_stats().left as i64 - 1)
    }

    /// Number of non-root diagonal cells `(i, i)` whose row has a point
    /// strictly left of the diagonal. Symmetric tableaux only.
    ///
    /// A non-root point can never sit on the diagonal of a symmetric
    /// tableau (its parent above and its parent on the left would mirror
    /// each other), so the diagonal is described by the cells instead: row
    /// `i` is filled either left of `(i, i)` or, by symmetry, only below it.
    pub fn diag(&self) -> Result<usize, TableauError> {
        if !self.is_symmetric() {
            return Err(TableauError::NotSymmetric("diag"));
        }
        Ok((2..=self.shape.durfee_size())
            .filter(|&i| (1..i).any(|j| self.get(Cell::new(i, j))))
            .count())
    }

    /// `(left*, top*, diag)` of a symmetric tableau, with `top* = top - 1`.
    pub fn symmetric_stats(&self) -> Result<SymmetricStats, TableauError> {
        let left_star = self.left_star()?;
        let w = self.weight_stats();
        Ok(SymmetricStats { left_star, top_star: w.top as i64 - 1, diag: self.diag()? })
    }

    pub fn corner_records(&self) -> Vec<CornerRecord> {
        self.shape
            .corners()
            .into_iter()
            .map(|cell| {
                let occupied = self.get(cell);
                let noc_class = if occupied { NocClass::NotApplicable } else { self.noc_class(cell) };
                CornerRecord { cell, occupied, noc_class }
            })
            .collect()
    }

    fn noc_class(&self, corner: Cell) -> NocClass {
        let column_ok = (2..corner.row).all(|i| !self.get(Cell::new(i, corner.col)));
        let row_ok = (2..corner.col).all(|j| !self.get(Cell::new(corner.row, j)));
        match (column_ok, row_ok) {
            (true, true) => NocClass::AB,
            (true, false) => NocClass::A1,
            (false, true) => NocClass::OneB,
            (false, false) => NocClass::OneOne,
        }
    }

    /// `o` for points, `.` for empty cells.
    pub fn render_ascii(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            out.extend(row.iter().map(|&b| if b { 'o' } else { '.' }));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for TreeLikeTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_ascii())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tlt(n: usize, rows: Vec<usize>, filling: &str) -> Result<TreeLikeTableau, TableauError> {
        TreeLikeTableau::from_filling(Shape::new(n, rows).unwrap(), filling)
    }

    #[test]
    fn single_point() {
        let t = tlt(2, vec![1], "D").unwrap();
        assert_eq!(t.size(), 1);
        assert_eq!(t.weight_stats(), WeightStats { top: 0, left: 0 });
        let recs = t.corner_records();
        assert_eq!(recs.len(), 1);
        assert!(recs[0].occupied);
        assert!(t.is_symmetric());
        assert_eq!(t.left_star().unwrap(), -1);
        assert_eq!(t.diag().unwrap(), 0);
    }

    #[test]
    fn horizontal_domino() {
        let t = tlt(3, vec![2], "DD").unwrap();
        assert_eq!(t.weight_stats(), WeightStats { top: 1, left: 0 });
        assert_eq!(t.left_star(), Err(TableauError::NotSymmetric("left*")));
        assert_eq!(t.diag(), Err(TableauError::NotSymmetric("diag")));
    }

    #[test]
    fn xor_rule() {
        assert_eq!(
            tlt(4, vec![2, 2], "DDDD").unwrap_err(),
            TableauError::Invalid(Violation::TwoParents(Cell::new(2, 2)))
        );
        assert_eq!(
            tlt(4, vec![2, 2], "D..D").unwrap_err(),
            TableauError::Invalid(Violation::NoParent(Cell::new(2, 2)))
        );
        assert_eq!(tlt(3, vec![1, 1], "D.").unwrap_err(), TableauError::Invalid(Violation::EmptyRow { row: 2 }));
        assert_eq!(tlt(3, vec![2], ".D").unwrap_err(), TableauError::Invalid(Violation::MissingRoot));
        assert!(tlt(4, vec![2, 2], "DDD.").is_ok());
    }

    #[test]
    fn noc_classes() {
        let t = tlt(6, vec![3, 3, 3], "DDDD..D..").unwrap();
        let recs = t.corner_records();
        assert_eq!(recs.len(), 1);
        assert!(!recs[0].occupied);
        assert_eq!(recs[0].noc_class, NocClass::AB);
        let t = tlt(6, vec![3, 3, 3], "DDDD...D.").unwrap();
        assert_eq!(t.corner_records()[0].noc_class, NocClass::A1);
        assert_eq!(t.transpose().corner_records()[0].noc_class, NocClass::OneB);
        let t = tlt(6, vec![3, 3, 3], "DDDD....D").unwrap();
        assert!(t.corner_records()[0].occupied);
        assert_eq!(t.corner_records()[0].noc_class, NocClass::NotApplicable);
    }

    #[test]
    fn size_three_symmetric_diag() {
        // the two symmetric tableaux of size 3 split 1 + z
        let hook = tlt(4, vec![2, 1], "DDD").unwrap();
        let square = tlt(4, vec![2, 2], "DDD.").unwrap();
        assert_eq!(hook.diag().unwrap(), 0);
        assert_eq!(square.diag().unwrap(), 1);
        let s = square.symmetric_stats().unwrap();
        assert_eq!((s.left_star, s.top_star), (0, 0));
    }

    #[test]
    fn transpose_round_trip() {
        let t = tlt(6, vec![3, 3, 3], "DDDD...D.").unwrap();
        let tt = t.transpose();
        assert!(tt.validate().is_ok());
        assert_eq!(tt.transpose(), t);
        assert_eq!(tt.weight_stats(), WeightStats { top: 1, left: 2 });
        assert_eq!(t.render_ascii(), "ooo\no..\n.o.\n");
    }
}
