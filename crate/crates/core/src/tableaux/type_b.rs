use std::fmt;

use crate::diagrams::{Cell, ShiftedShape};
use crate::error::{TableauError, Violation};

use super::permutation::{markers, validate_zero_one, PtMarkers};
use super::{check_rows, parse_symbols};

/// A type B permutation tableau. Rows cover the whole shifted diagram,
/// staircase rows first.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TypeBPermutationTableau {
    shape: ShiftedShape,
    rows: Vec<Vec<bool>>,
}

impl TypeBPermutationTableau {
    pub fn new(shape: ShiftedShape, rows: Vec<Vec<bool>>) -> Result<Self, TableauError> {
        check_rows(&shape.row_lengths(), &rows)?;
        let t = TypeBPermutationTableau { shape, rows };
        t.validate()?;
        Ok(t)
    }

    pub(crate) fn new_unchecked(shape: ShiftedShape, rows: Vec<Vec<bool>>) -> Self {
        TypeBPermutationTableau { shape, rows }
    }

    pub fn from_filling(shape: ShiftedShape, filling: &str) -> Result<Self, TableauError> {
        let rows = parse_symbols(&shape.row_lengths(), filling, |c| match c {
            '0' => Some(false),
            '1' => Some(true),
            _ => None,
        })?;
        Self::new(shape, rows)
    }

    pub fn shape(&self) -> &ShiftedShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<bool>] {
        &self.rows
    }

    pub fn get(&self, cell: Cell) -> bool {
        self.rows[cell.row - 1][cell.col - 1]
    }

    pub fn validate(&self) -> Result<(), Violation> {
        validate_zero_one(&self.rows, self.shape.staircase_rows(), |c| self.shape.is_diagonal(c))
    }

    pub fn filling_string(&self) -> String {
        self.rows.iter().flatten().map(|&b| if b { '1' } else { '0' }).collect()
    }

    /// Markers with diagonal zeros counted as restricted.
    pub fn markers(&self) -> PtMarkers {
        markers(&self.rows, |c| self.shape.is_diagonal(c))
    }

    /// Staircase rows are prefixed with `+`, base rows with a space.
    pub fn render_ascii(&self) -> String {
        let m = self.shape.staircase_rows();
        let mut out = String::new();
        for (i, row) in self.rows.iter().enumerate() {
            out.push(if i < m { '+' } else { ' ' });
            out.extend(row.iter().map(|&b| if b { '1' } else { '0' }));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for TypeBPermutationTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_ascii())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::Shape;

    fn shifted(n: usize, rows: Vec<usize>) -> ShiftedShape {
        ShiftedShape::new(Shape::new(n, rows).unwrap())
    }

    #[test]
    fn length_one() {
        let s = shifted(1, vec![]);
        assert!(TypeBPermutationTableau::from_filling(s.clone(), "1").is_ok());
        assert_eq!(
            TypeBPermutationTableau::from_filling(s, "0").unwrap_err(),
            TableauError::Invalid(Violation::ColumnWithoutOne { col: 1 })
        );
        assert!(TypeBPermutationTableau::from_filling(shifted(1, vec![0]), "").is_ok());
    }

    #[test]
    fn diagonal_zero_rule() {
        // staircase rows "1" and "1 0": the diagonal 0 has a 1 on its left
        let s = shifted(2, vec![]);
        assert_eq!(
            TypeBPermutationTableau::from_filling(s.clone(), "110").unwrap_err(),
            TableauError::Invalid(Violation::DiagonalZero(Cell::new(2, 2)))
        );
        let t = TypeBPermutationTableau::from_filling(s, "101").unwrap();
        assert_eq!(t.markers().restricted_zeros.into_iter().collect::<Vec<_>>(), vec![Cell::new(2, 1)]);
    }

    #[test]
    fn diagonal_zeros_are_restricted() {
        let s = shifted(2, vec![1]);
        let t = TypeBPermutationTableau::from_filling(s, "01").unwrap();
        let m = t.markers();
        assert_eq!(m.restricted_zeros.into_iter().collect::<Vec<_>>(), vec![Cell::new(1, 1)]);
        assert_eq!(m.rightmost_restricted_zeros.into_iter().collect::<Vec<_>>(), vec![Cell::new(1, 1)]);
        assert_eq!(m.topmost_ones.into_iter().collect::<Vec<_>>(), vec![Cell::new(2, 1)]);
    }

    #[test]
    fn figure_seven_tableau() {
        let s = shifted(7, vec![3, 1, 0]);
        let t = TypeBPermutationTableau::from_filling(s, "00100000110111").unwrap();
        assert_eq!(t.render_ascii(), "+0\n+01\n+000\n+0011\n 011\n 1\n \n");
    }
}
