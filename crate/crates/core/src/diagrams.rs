//! Plain and shifted `(k, n)`-diagrams.
//!
//! A [`Shape`] is a left-justified Young diagram sitting in a `k × (n - k)`
//! rectangle. Rows are indexed from the top and columns from the left, both
//! 1-based. The South-East border of the rectangle, read from the North-East
//! corner to the South-West corner, is a lattice path of `n` unit steps; step
//! `i` carries the label `i`. A row is labelled by its vertical border step and
//! a column by its horizontal border step.
//!
//! A [`ShiftedShape`] adds a staircase above the base diagram: column `j`
//! receives `n - k + 1 - j` extra cells, so that in full-diagram coordinates
//! the staircase occupies the cells `(i, j)` with `j <= i <= n - k`, and the
//! diagonal cells are exactly the `(j, j)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::ShapeError;

/// A cell position, 1-based, `(row from top, column from left)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    pub const fn transpose(self) -> Self {
        Cell { row: self.col, col: self.row }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// One step of the South-East border path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    /// A vertical step; it labels a row.
    South,
    /// A horizontal step; it labels a column.
    West,
}

/// A `(k, n)`-diagram.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Shape {
    n: usize,
    rows: Vec<usize>,
}

impl Shape {
    /// Builds a shape of length `n` with the given row lengths (`k = rows.len()`).
    pub fn new(n: usize, rows: Vec<usize>) -> Result<Self, ShapeError> {
        let k = rows.len();
        if k > n {
            return Err(ShapeError::TooManyRows { n, k });
        }
        let width = n - k;
        for (i, pair) in rows.windows(2).enumerate() {
            if pair[1] > pair[0] {
                return Err(ShapeError::NotWeaklyDecreasing { row: i + 2 });
            }
        }
        if let Some(&first) = rows.first() {
            if first > width {
                return Err(ShapeError::RowTooLong { row: 1, len: first, width });
            }
        }
        Ok(Shape { n, rows })
    }

    /// The empty diagram of length 0.
    pub fn empty() -> Self {
        Shape { n: 0, rows: Vec::new() }
    }

    /// A full `rows × cols` rectangle.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        Shape { n: rows + cols, rows: vec![cols; rows] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of rows.
    pub fn k(&self) -> usize {
        self.rows.len()
    }

    /// Number of columns, `n - k`.
    pub fn cols(&self) -> usize {
        self.n - self.rows.len()
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// Length of row `i` (1-based).
    pub fn row_len(&self, i: usize) -> usize {
        self.rows[i - 1]
    }

    /// Height of column `j` (1-based).
    pub fn col_len(&self, j: usize) -> usize {
        self.rows.iter().take_while(|&&l| l >= j).count()
    }

    pub fn num_cells(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.row <= self.k() && cell.col >= 1 && cell.col <= self.rows[cell.row - 1]
    }

    /// All cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, &l)| (1..=l).map(move |j| Cell::new(i + 1, j)))
    }

    pub fn has_empty_row(&self) -> bool {
        self.rows.contains(&0)
    }

    pub fn has_empty_column(&self) -> bool {
        self.cols() > 0 && self.rows.first().copied().unwrap_or(0) < self.cols()
    }

    /// Walks the South-East border and labels rows and columns.
    pub fn border_labeling(&self) -> BorderLabeling {
        let k = self.k();
        let mut steps = Vec::with_capacity(self.n);
        let mut row_labels = vec![0; k];
        let mut col_labels = vec![0; self.cols()];
        let (mut r, mut c) = (0usize, self.cols());
        for label in 1..=self.n {
            if r < k && self.rows[r] == c {
                steps.push(Step::South);
                row_labels[r] = label;
                r += 1;
            } else {
                steps.push(Step::West);
                col_labels[c - 1] = label;
                c -= 1;
            }
        }
        BorderLabeling { steps, row_labels, col_labels, added_row_labels: Vec::new() }
    }

    /// Corners in top-to-bottom order: cells whose bottom and right edges are
    /// both border edges.
    pub fn corners(&self) -> Vec<Cell> {
        let k = self.k();
        (0..k)
            .filter(|&i| self.rows[i] > 0 && (i + 1 == k || self.rows[i + 1] < self.rows[i]))
            .map(|i| Cell::new(i + 1, self.rows[i]))
            .collect()
    }

    pub fn is_corner(&self, cell: Cell) -> bool {
        self.contains(cell)
            && cell.col == self.rows[cell.row - 1]
            && (cell.row == self.k() || self.rows[cell.row] < cell.col)
    }

    /// Reflection across the main diagonal: a `(n - k, n)`-diagram whose rows
    /// are the columns of `self`.
    pub fn transpose(&self) -> Shape {
        let rows = (1..=self.cols()).map(|j| self.col_len(j)).collect();
        Shape { n: self.n, rows }
    }

    pub fn is_diagonally_symmetric(&self) -> bool {
        self.k() == self.cols() && self.transpose() == *self
    }

    /// Side of the largest square `(1..=d) × (1..=d)` inside the diagram.
    pub fn durfee_size(&self) -> usize {
        self.rows.iter().enumerate().take_while(|&(i, &l)| l > i).count()
    }

    pub fn to_record(&self) -> ShapeRecord {
        ShapeRecord { n: self.n, rows: self.rows.clone(), shifted: false }
    }

    /// One text row per diagram row, `#` per cell.
    pub fn render_ascii(&self) -> String {
        let mut out = String::new();
        for &l in &self.rows {
            out.push_str(&"#".repeat(l));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} rows={:?}", self.n, self.rows)
    }
}

/// Row, column and step labels of a diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BorderLabeling {
    /// `steps[i - 1]` is the direction of the step labelled `i`.
    pub steps: Vec<Step>,
    /// `row_labels[i - 1]` labels row `i` of the base diagram.
    pub row_labels: Vec<usize>,
    /// `col_labels[j - 1]` labels column `j`.
    pub col_labels: Vec<usize>,
    /// For a shifted diagram, the negative labels of the staircase rows, top
    /// to bottom. Empty for a plain diagram.
    pub added_row_labels: Vec<i64>,
}

impl BorderLabeling {
    pub fn row_label_set(&self) -> std::collections::BTreeSet<usize> {
        self.row_labels.iter().copied().collect()
    }

    pub fn col_label_set(&self) -> std::collections::BTreeSet<usize> {
        self.col_labels.iter().copied().collect()
    }
}

/// A shifted `(k, n)`-diagram. Cell coordinates refer to the full diagram,
/// staircase rows first.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ShiftedShape {
    base: Shape,
}

impl ShiftedShape {
    pub fn new(base: Shape) -> Self {
        ShiftedShape { base }
    }

    pub fn base(&self) -> &Shape {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    /// Number of staircase rows (= number of base columns).
    pub fn staircase_rows(&self) -> usize {
        self.base.cols()
    }

    /// Total number of rows, staircase included.
    pub fn num_rows(&self) -> usize {
        self.base.cols() + self.base.k()
    }

    pub fn row_len(&self, i: usize) -> usize {
        let m = self.staircase_rows();
        if i <= m {
            i
        } else {
            self.base.row_len(i - m)
        }
    }

    pub fn row_lengths(&self) -> Vec<usize> {
        (1..=self.num_rows()).map(|i| self.row_len(i)).collect()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.row <= self.num_rows() && cell.col >= 1 && cell.col <= self.row_len(cell.row)
    }

    pub fn is_diagonal(&self, cell: Cell) -> bool {
        cell.row == cell.col && cell.row <= self.staircase_rows()
    }

    pub fn diagonal_cells(&self) -> Vec<Cell> {
        (1..=self.staircase_rows()).map(|j| Cell::new(j, j)).collect()
    }

    pub fn num_cells(&self) -> usize {
        let m = self.staircase_rows();
        m * (m + 1) / 2 + self.base.num_cells()
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (1..=self.num_rows()).flat_map(move |i| (1..=self.row_len(i)).map(move |j| Cell::new(i, j)))
    }

    /// The labelling is the base border's; staircase row `j` takes the
    /// negated label of column `j`.
    pub fn border_labeling(&self) -> BorderLabeling {
        let mut labeling = self.base.border_labeling();
        labeling.added_row_labels = labeling.col_labels.iter().map(|&l| -(l as i64)).collect();
        labeling
    }

    /// Corners of the shifted diagram: those of the base, moved below the
    /// staircase.
    pub fn corners(&self) -> Vec<Cell> {
        let m = self.staircase_rows();
        self.base.corners().into_iter().map(|c| Cell::new(c.row + m, c.col)).collect()
    }

    /// The self-conjugate diagram obtained by gluing the shifted diagram to
    /// its mirror image across the diagonal.
    pub fn symmetric_closure(&self) -> Shape {
        let m = self.staircase_rows();
        let base_t = self.base.transpose();
        let mut rows: Vec<usize> = (1..=m).map(|i| m + base_t.row_len(i)).collect();
        rows.extend_from_slice(self.base.rows());
        Shape { n: 2 * self.n(), rows }
    }

    /// Inverse of [`ShiftedShape::symmetric_closure`].
    pub fn from_symmetric(shape: &Shape) -> Option<ShiftedShape> {
        if !shape.is_diagonally_symmetric() || !shape.n().is_multiple_of(2) {
            return None;
        }
        let m = shape.durfee_size();
        let half = shape.n() / 2;
        let base = Shape::new(half, shape.rows()[m..].to_vec()).ok()?;
        let shifted = ShiftedShape::new(base);
        (shifted.symmetric_closure() == *shape).then_some(shifted)
    }

    pub fn to_record(&self) -> ShapeRecord {
        ShapeRecord { n: self.n(), rows: self.base.rows().to_vec(), shifted: true }
    }

    /// Staircase cells are prefixed with `+`, diagonal cells drawn as `*`.
    pub fn render_ascii(&self) -> String {
        let m = self.staircase_rows();
        let mut out = String::new();
        for i in 1..=self.num_rows() {
            if i <= m {
                out.push('+');
                out.push_str(&"#".repeat(i - 1));
                out.push('*');
            } else {
                out.push(' ');
                out.push_str(&"#".repeat(self.row_len(i)));
            }
            out.push('\n');
        }
        out
    }
}

/// JSON shape record: `{"n": int, "rows": [int...], "shifted": bool}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeRecord {
    pub n: usize,
    pub rows: Vec<usize>,
    pub shifted: bool,
}

impl ShapeRecord {
    pub fn to_shape(&self) -> Result<Shape, ShapeError> {
        Shape::new(self.n, self.rows.clone())
    }
}

/// Which diagrams [`enumerate_shapes`] admits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShapeConstraint {
    Unconstrained,
    /// Permutation tableaux.
    NoEmptyColumns,
    /// Tree-like tableaux.
    NoEmptyRowsOrColumns,
}

/// All diagrams of length `n` admitted by `constraint`, ordered by `k`
/// ascending and then lexicographically on the row lengths.
pub fn enumerate_shapes(n: usize, constraint: ShapeConstraint) -> Vec<Shape> {
    let mut out = Vec::new();
    for k in 0..=n {
        let width = n - k;
        let mut rows = Vec::with_capacity(k);
        push_partitions(n, k, width, constraint, &mut rows, &mut out);
    }
    out
}

fn push_partitions(
    n: usize,
    k: usize,
    width: usize,
    constraint: ShapeConstraint,
    rows: &mut Vec<usize>,
    out: &mut Vec<Shape>,
) {
    if rows.len() == k {
        let shape = Shape { n, rows: rows.clone() };
        let ok = match constraint {
            ShapeConstraint::Unconstrained => true,
            ShapeConstraint::NoEmptyColumns => !shape.has_empty_column(),
            ShapeConstraint::NoEmptyRowsOrColumns => !shape.has_empty_column() && !shape.has_empty_row(),
        };
        if ok {
            out.push(shape);
        }
        return;
    }
    let max = rows.last().copied().unwrap_or(width);
    let min = match constraint {
        ShapeConstraint::NoEmptyRowsOrColumns => 1,
        _ => 0,
    };
    let min = if rows.is_empty() && constraint != ShapeConstraint::Unconstrained { width.max(min) } else { min };
    if min > max {
        return;
    }
    for l in min..=max {
        rows.push(l);
        push_partitions(n, k, width, constraint, rows, out);
        rows.pop();
    }
}
