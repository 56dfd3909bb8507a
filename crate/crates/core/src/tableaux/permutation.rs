use std::collections::BTreeSet;
use std::fmt;

use crate::diagrams::{Cell, Shape};
use crate::error::{TableauError, Violation};

use super::{check_rows, parse_symbols};

/// A permutation tableau: a 0/1 filling of a diagram without empty columns.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PermutationTableau {
    shape: Shape,
    rows: Vec<Vec<bool>>,
}

/// Cells of a permutation tableau singled out by the bijections to
/// alternative tableaux.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PtMarkers {
    pub topmost_ones: BTreeSet<Cell>,
    pub restricted_zeros: BTreeSet<Cell>,
    pub rightmost_restricted_zeros: BTreeSet<Cell>,
}

impl PermutationTableau {
    pub fn new(shape: Shape, rows: Vec<Vec<bool>>) -> Result<Self, TableauError> {
        check_rows(shape.rows(), &rows)?;
        let t = PermutationTableau { shape, rows };
        t.validate()?;
        Ok(t)
    }

    pub(crate) fn new_unchecked(shape: Shape, rows: Vec<Vec<bool>>) -> Self {
        PermutationTableau { shape, rows }
    }

    /// Parses a row-major `0`/`1` string.
    pub fn from_filling(shape: Shape, filling: &str) -> Result<Self, TableauError> {
        let rows = parse_symbols(shape.rows(), filling, |c| match c {
            '0' => Some(false),
            '1' => Some(true),
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
        self.rows[cell.row - 1][cell.col - 1]
    }

    /// First broken rule, if any.
    pub fn validate(&self) -> Result<(), Violation> {
        validate_zero_one(&self.rows, self.shape.cols(), |_| false)
    }

    pub fn filling_string(&self) -> String {
        self.rows.iter().flatten().map(|&b| if b { '1' } else { '0' }).collect()
    }

    pub fn markers(&self) -> PtMarkers {
        markers(&self.rows, |_| false)
    }

    pub fn render_ascii(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            out.extend(row.iter().map(|&b| if b { '1' } else { '0' }));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for PermutationTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_ascii())
    }
}

/// Shared rules of plain and type B permutation tableaux over a 0/1 grid
/// whose rows are left-justified. `is_diagonal` flags cells under the extra
/// type B rule.
pub(crate) fn validate_zero_one(
    rows: &[Vec<bool>],
    width: usize,
    is_diagonal: impl Fn(Cell) -> bool,
) -> Result<(), Violation> {
    let mut col_has_one = vec![false; width];
    for (i, row) in rows.iter().enumerate() {
        let mut row_has_one = false;
        for (j, &v) in row.iter().enumerate() {
            let cell = Cell::new(i + 1, j + 1);
            if v {
                row_has_one = true;
                col_has_one[j] = true;
            } else if is_diagonal(cell) && row_has_one {
                return Err(Violation::DiagonalZero(cell));
            } else if row_has_one && col_has_one[j] {
                return Err(Violation::ForbiddenZero(cell));
            }
        }
    }
    match col_has_one.iter().position(|&b| !b) {
        Some(j) => Err(Violation::ColumnWithoutOne { col: j + 1 }),
        None => Ok(()),
    }
}

pub(crate) fn markers(rows: &[Vec<bool>], is_diagonal: impl Fn(Cell) -> bool) -> PtMarkers {
    let width = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut seen_one = vec![false; width];
    let mut m = PtMarkers::default();
    for (i, row) in rows.iter().enumerate() {
        let mut rightmost = None;
        for (j, &v) in row.iter().enumerate() {
            let cell = Cell::new(i + 1, j + 1);
            if v {
                if !seen_one[j] {
                    m.topmost_ones.insert(cell);
                }
                seen_one[j] = true;
            } else if seen_one[j] || is_diagonal(cell) {
                m.restricted_zeros.insert(cell);
                rightmost = Some(cell);
            }
        }
        m.rightmost_restricted_zeros.extend(rightmost);
    }
    m
}
