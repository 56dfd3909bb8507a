//! Cutting a tree-like tableau along the bottom and right edges of a corner.
//!
//! With the corner in row `r` and column `s`, the cells below row `r` form
//! the bottom part, the cells right of column `s` the right part, and the
//! `r × s` rectangle in the top-left the middle part. A tableau of size 0
//! has no cells and is represented by `None`.

use crate::diagrams::{Cell, Shape};
use crate::error::{BijectionError, TableauError};
use crate::tableaux::TreeLikeTableau;

use super::nat::NonAmbiguousTree;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CornerTriplet {
    left: Option<TreeLikeTableau>,
    right: Option<TreeLikeTableau>,
    nat: NonAmbiguousTree,
}

fn size_of(t: &Option<TreeLikeTableau>) -> usize {
    t.as_ref().map_or(0, TreeLikeTableau::size)
}

impl CornerTriplet {
    /// The tree must be as tall as the right tableau has points in its first
    /// column and as wide as the left one has points in its first row.
    pub fn new(
        left: Option<TreeLikeTableau>,
        right: Option<TreeLikeTableau>,
        nat: NonAmbiguousTree,
    ) -> Result<Self, BijectionError> {
        for t in left.iter().chain(&right) {
            t.validate().map_err(TableauError::from)?;
        }
        let height = right.as_ref().map_or(0, |t| t.weight_stats().left + 1);
        let width = left.as_ref().map_or(0, |t| t.weight_stats().top + 1);
        if (nat.height(), nat.width()) != (height, width) {
            return Err(BijectionError::Triplet(format!(
                "tree is {}×{}, the tableaux ask for {height}×{width}",
                nat.height(),
                nat.width()
            )));
        }
        Ok(CornerTriplet { left, right, nat })
    }

    /// `T_l`.
    pub fn left(&self) -> Option<&TreeLikeTableau> {
        self.left.as_ref()
    }

    /// `T_r`.
    pub fn right(&self) -> Option<&TreeLikeTableau> {
        self.right.as_ref()
    }

    pub fn nat(&self) -> &NonAmbiguousTree {
        &self.nat
    }

    pub fn n_left(&self) -> usize {
        size_of(&self.left)
    }

    pub fn n_right(&self) -> usize {
        size_of(&self.right)
    }

    /// Size of the glued tableau, `n_l + n_r + 1`.
    pub fn n(&self) -> usize {
        self.n_left() + self.n_right() + 1
    }
}

pub fn corner_cut(t: &TreeLikeTableau, corner: Cell) -> Result<CornerTriplet, BijectionError> {
    t.validate().map_err(TableauError::from)?;
    let shape = t.shape();
    if !shape.is_corner(corner) {
        return Err(BijectionError::NotACorner(corner));
    }
    let (r, s) = (corner.row, corner.col);
    let m_row = |i: usize| (1..=s).any(|j| t.get(Cell::new(i, j)));
    let m_col = |j: usize| (1..=r).any(|i| t.get(Cell::new(i, j)));

    let left = (s > 1)
        .then(|| {
            let mut lens = vec![s - 1];
            lens.extend_from_slice(&shape.rows()[r..]);
            let mut rows = vec![(1..s).map(m_col).collect::<Vec<bool>>()];
            rows.extend(t.rows()[r..].iter().cloned());
            build(lens, rows)
        })
        .transpose()?;
    let right = (r > 1)
        .then(|| {
            let lens: Vec<usize> = (1..r).map(|i| 1 + shape.row_len(i) - s).collect();
            let rows = (1..r)
                .map(|i| std::iter::once(m_row(i)).chain(t.rows()[i - 1][s..].iter().copied()).collect())
                .collect();
            build(lens, rows)
        })
        .transpose()?;
    let keep_rows: Vec<usize> = (1..=r).filter(|&i| m_row(i)).collect();
    let keep_cols: Vec<usize> = (1..=s).filter(|&j| m_col(j)).collect();
    let rows = keep_rows.iter().map(|&i| keep_cols.iter().map(|&j| t.get(Cell::new(i, j))).collect()).collect();
    let nat = NonAmbiguousTree::new(build(vec![keep_cols.len(); keep_rows.len()], rows)?)?;
    CornerTriplet::new(left, right, nat)
}

fn build(lens: Vec<usize>, rows: Vec<Vec<bool>>) -> Result<TreeLikeTableau, TableauError> {
    let n = lens.len() + lens.first().copied().unwrap_or(0);
    let shape = Shape::new(n, lens).map_err(crate::error::StructuralError::from)?;
    TreeLikeTableau::new(shape, rows)
}

/// Inverse of [`corner_cut`]. The rows and columns of the middle part that
/// the tree does not fill are read off the first column of `T_r` and the
/// first row of `T_l`.
pub fn corner_glue(triplet: &CornerTriplet) -> Result<(TreeLikeTableau, Cell), BijectionError> {
    let left = triplet.left();
    let right = triplet.right();
    let r = right.map_or(1, |t| t.num_rows() + 1);
    let s = left.map_or(1, |t| t.num_cols() + 1);
    let m_rows: Vec<usize> = (1..=r).filter(|&i| i == 1 || i == r || right.is_some_and(|t| t.get(Cell::new(i, 1)))).collect();
    let m_cols: Vec<usize> = (1..=s).filter(|&j| j == 1 || j == s || left.is_some_and(|t| t.get(Cell::new(1, j)))).collect();
    let nat = triplet.nat().tlt();
    if (m_rows.len(), m_cols.len()) != (nat.num_rows(), nat.num_cols()) {
        return Err(BijectionError::Triplet("tree does not fit the middle part".into()));
    }
    let mut lens: Vec<usize> = (1..r).map(|i| s + right.map_or(0, |t| t.shape().row_len(i) - 1)).collect();
    lens.push(s);
    if let Some(t) = left {
        lens.extend_from_slice(&t.shape().rows()[1..]);
    }
    let mut grid: Vec<Vec<bool>> = lens.iter().map(|&l| vec![false; l]).collect();
    for (a, &i) in m_rows.iter().enumerate() {
        for (b, &j) in m_cols.iter().enumerate() {
            grid[i - 1][j - 1] = nat.get(Cell::new(a + 1, b + 1));
        }
    }
    if let Some(t) = right {
        for i in 1..r {
            grid[i - 1][s..].copy_from_slice(&t.rows()[i - 1][1..]);
        }
    }
    if let Some(t) = left {
        for (k, row) in t.rows()[1..].iter().enumerate() {
            grid[r + k].copy_from_slice(row);
        }
    }
    let glued = build(lens, grid)?;
    let corner = Cell::new(r, s);
    if !glued.shape().is_corner(corner) {
        return Err(BijectionError::NotACorner(corner));
    }
    Ok((glued, corner))
}
