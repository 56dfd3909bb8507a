//! Tree-like tableaux of size `n` and alternative tableaux of length `n - 1`.

use crate::diagrams::{Cell, Shape};
use crate::error::{BijectionError, TableauError};
use crate::tableaux::{AlternativeTableau, Symbol, TreeLikeTableau};

/// Turns every non-root point into an arrow towards its missing parent, then
/// drops the first row and the first column.
pub fn alpha(t: &TreeLikeTableau) -> Result<AlternativeTableau, BijectionError> {
    t.validate().map_err(TableauError::from)?;
    let shape = t.shape();
    let rows: Vec<usize> = shape.rows()[1..].iter().map(|&l| l - 1).collect();
    let target = Shape::new(shape.n() - 2, rows).expect("inner diagram of a tree-like tableau");
    let mut rows: Vec<Vec<Symbol>> = target.rows().iter().map(|&l| vec![Symbol::Empty; l]).collect();
    for cell in t.dots() {
        if cell.row == 1 || cell.col == 1 {
            continue;
        }
        let has_left = (1..cell.col).any(|j| t.get(Cell::new(cell.row, j)));
        rows[cell.row - 2][cell.col - 2] = if has_left { Symbol::Up } else { Symbol::Left };
    }
    Ok(AlternativeTableau::new(target, rows)?)
}

/// Rebuilds the tree-like tableau: every arrow becomes a point, and the new
/// first row and column receive the points the arrows ask for.
pub fn alpha_inv(a: &AlternativeTableau) -> Result<TreeLikeTableau, BijectionError> {
    a.validate().map_err(TableauError::from)?;
    let shape = a.shape();
    let mut rows = vec![shape.cols() + 1];
    rows.extend(shape.rows().iter().map(|&l| l + 1));
    let target = Shape::new(shape.n() + 2, rows).expect("diagram with one more row and column");
    let mut dots = vec![Cell::new(1, 1)];
    for i in 1..=shape.k() {
        let first = (1..=shape.row_len(i)).map(|j| a.get(Cell::new(i, j))).find(|&s| s != Symbol::Empty);
        if first != Some(Symbol::Left) {
            dots.push(Cell::new(i + 1, 1));
        }
    }
    for j in 1..=shape.cols() {
        let first = (1..=shape.col_len(j)).map(|i| a.get(Cell::new(i, j))).find(|&s| s != Symbol::Empty);
        if first != Some(Symbol::Up) {
            dots.push(Cell::new(1, j + 1));
        }
    }
    dots.extend(a.arrows().into_iter().map(|(c, _)| Cell::new(c.row + 1, c.col + 1)));
    Ok(TreeLikeTableau::from_dots(target, &dots)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::{alternative_tableaux, symmetric_tree_like_tableaux, tree_like_tableaux, GenOptions};

    #[test]
    fn size_one_goes_to_empty_tableau() {
        let t = TreeLikeTableau::from_filling(Shape::new(2, vec![1]).unwrap(), "D").unwrap();
        let a = alpha(&t).unwrap();
        assert_eq!(a.shape().n(), 0);
        assert_eq!(alpha_inv(&a).unwrap(), t);
    }

    #[test]
    fn round_trips_small() {
        let opts = GenOptions::default();
        for n in 1..=5 {
            let tlts = tree_like_tableaux(n, &opts).unwrap();
            let mut images: Vec<_> = tlts.iter().map(|t| alpha(t).unwrap()).collect();
            for (t, a) in tlts.iter().zip(&images) {
                assert_eq!(&alpha_inv(a).unwrap(), t);
            }
            images.sort();
            let mut ats = alternative_tableaux(n - 1, &opts).unwrap();
            ats.sort();
            assert_eq!(images, ats);
        }
    }

    #[test]
    fn symmetric_stays_symmetric() {
        for n in 0..=3 {
            for t in symmetric_tree_like_tableaux(n, &GenOptions::default()).unwrap() {
                assert!(alpha(&t).unwrap().is_symmetric());
            }
        }
    }
}
