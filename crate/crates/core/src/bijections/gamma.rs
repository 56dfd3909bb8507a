//! Permutation tableaux of length `n` and alternative tableaux of length
//! `n - 1`.

use std::collections::BTreeSet;

use crate::diagrams::{Cell, Shape};
use crate::error::{BijectionError, TableauError};
use crate::tableaux::{AlternativeTableau, PermutationTableau, Symbol};

/// Topmost 1s become up arrows, rightmost restricted 0s left arrows; the
/// rest is erased and the first row removed.
pub fn gamma(pt: &PermutationTableau) -> Result<AlternativeTableau, BijectionError> {
    pt.validate().map_err(TableauError::from)?;
    let shape = pt.shape();
    if shape.k() == 0 {
        return Err(BijectionError::Domain("permutation tableau of length 0".into()));
    }
    let target = Shape::new(shape.n() - 1, shape.rows()[1..].to_vec()).expect("rows below the first");
    let markers = pt.markers();
    let rows = (2..=shape.k())
        .map(|i| {
            (1..=shape.row_len(i))
                .map(|j| arrow_at(Cell::new(i, j), &markers.topmost_ones, &markers.rightmost_restricted_zeros))
                .collect()
        })
        .collect();
    Ok(AlternativeTableau::new(target, rows)?)
}

pub(crate) fn arrow_at(cell: Cell, ups: &BTreeSet<Cell>, lefts: &BTreeSet<Cell>) -> Symbol {
    if ups.contains(&cell) {
        Symbol::Up
    } else if lefts.contains(&cell) {
        Symbol::Left
    } else {
        Symbol::Empty
    }
}

/// Adds a first row, turns arrows into 1s and 0s, puts a 1 on top of every
/// column without one, and completes the filling.
pub fn gamma_inv(a: &AlternativeTableau) -> Result<PermutationTableau, BijectionError> {
    a.validate().map_err(TableauError::from)?;
    let shape = a.shape();
    let mut lens = vec![shape.cols()];
    lens.extend_from_slice(shape.rows());
    let target = Shape::new(shape.n() + 1, lens.clone()).expect("diagram with one more row");
    let mut placed: Vec<Vec<Option<bool>>> = lens.iter().map(|&l| vec![None; l]).collect();
    for (c, s) in a.arrows() {
        placed[c.row][c.col - 1] = Some(s == Symbol::Up);
    }
    for j in 0..shape.cols() {
        if !placed.iter().any(|row| row.get(j) == Some(&Some(true))) {
            placed[0][j] = Some(true);
        }
    }
    Ok(PermutationTableau::new(target, complete(&placed))?)
}

/// Empty cells left of a placed 0 or above a placed 1 become 0, the others 1.
pub(crate) fn complete(placed: &[Vec<Option<bool>>]) -> Vec<Vec<bool>> {
    placed
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, &cell)| {
                    cell.unwrap_or_else(|| {
                        let zero_right = row[j + 1..].contains(&Some(false));
                        let one_below = placed[i + 1..].iter().any(|r| r.get(j) == Some(&Some(true)));
                        !(zero_right || one_below)
                    })
                })
                .collect()
        })
        .collect()
}
