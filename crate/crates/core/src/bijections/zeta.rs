//! Type B permutation tableaux of length `n` and symmetric alternative
//! tableaux of length `2n`.
//!
//! The alternative representation keeps the arrows of a type B tableau on
//! its off-diagonal cells, in full shifted-diagram coordinates. Those
//! coordinates are also the coordinates of the lower half of the symmetric
//! closure, so the reflection only has to copy each arrow across the
//! diagonal.

use crate::diagrams::{Cell, ShiftedShape};
use crate::error::{BijectionError, TableauError};
use crate::tableaux::{AlternativeTableau, Symbol, TypeBPermutationTableau};

use super::gamma::{arrow_at, complete};

/// Arrows on the off-diagonal cells `(i, j)`, `j < i`, of a shifted diagram.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AltRep {
    shape: ShiftedShape,
    arrows: Vec<(Cell, Symbol)>,
}

impl AltRep {
    /// Arrows must sit on distinct off-diagonal cells.
    pub fn new(shape: ShiftedShape, mut arrows: Vec<(Cell, Symbol)>) -> Result<Self, BijectionError> {
        arrows.sort();
        for w in arrows.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(BijectionError::Domain(format!("two arrows in {}", w[0].0)));
            }
        }
        for &(c, s) in &arrows {
            if s == Symbol::Empty || !shape.contains(c) || c.col >= c.row {
                return Err(BijectionError::Domain(format!("no off-diagonal arrow can sit in {c}")));
            }
        }
        Ok(AltRep { shape, arrows })
    }

    pub fn shape(&self) -> &ShiftedShape {
        &self.shape
    }

    /// Arrows in row-major order.
    pub fn arrows(&self) -> &[(Cell, Symbol)] {
        &self.arrows
    }
}

/// Replaces topmost 1s and rightmost restricted 0s by arrows, erases the
/// rest, and cuts off the diagonal together with its arrows.
pub fn altrep(t: &TypeBPermutationTableau) -> Result<AltRep, BijectionError> {
    t.validate().map_err(TableauError::from)?;
    let m = t.markers();
    let arrows = t
        .shape()
        .cells()
        .filter(|c| c.col < c.row)
        .map(|c| (c, arrow_at(c, &m.topmost_ones, &m.rightmost_restricted_zeros)))
        .filter(|&(_, s)| s != Symbol::Empty)
        .collect();
    AltRep::new(t.shape().clone(), arrows)
}

/// Puts the arrows back, restores the diagonal (a 0 exactly when its column
/// holds an up arrow) and completes the filling.
pub fn altrep_inv(r: &AltRep) -> Result<TypeBPermutationTableau, BijectionError> {
    let shape = r.shape();
    let mut placed: Vec<Vec<Option<bool>>> = shape.row_lengths().iter().map(|&l| vec![None; l]).collect();
    for &(c, s) in r.arrows() {
        placed[c.row - 1][c.col - 1] = Some(s == Symbol::Up);
    }
    for d in shape.diagonal_cells() {
        let up_below = r.arrows().iter().any(|&(c, s)| s == Symbol::Up && c.col == d.col);
        placed[d.row - 1][d.col - 1] = Some(!up_below);
    }
    Ok(TypeBPermutationTableau::new(shape.clone(), complete(&placed))?)
}

/// Copies each arrow to its mirror cell, turned by a quarter.
pub fn reflect_f(r: &AltRep) -> Result<AlternativeTableau, BijectionError> {
    let closure = r.shape().symmetric_closure();
    let mut rows: Vec<Vec<Symbol>> = closure.rows().iter().map(|&l| vec![Symbol::Empty; l]).collect();
    for &(c, s) in r.arrows() {
        rows[c.row - 1][c.col - 1] = s;
        rows[c.col - 1][c.row - 1] = s.reflect();
    }
    Ok(AlternativeTableau::new(closure, rows)?)
}

/// Keeps the lower half of a symmetric alternative tableau.
pub fn reflect_f_inv(a: &AlternativeTableau) -> Result<AltRep, BijectionError> {
    if !a.is_symmetric() {
        return Err(TableauError::NotSymmetric("reflect_f_inv").into());
    }
    let shape = ShiftedShape::from_symmetric(a.shape())
        .ok_or_else(|| BijectionError::Domain("diagram is not the closure of a shifted diagram".into()))?;
    let arrows = a.arrows().into_iter().filter(|(c, _)| c.col < c.row).collect();
    AltRep::new(shape, arrows)
}

pub fn zeta(t: &TypeBPermutationTableau) -> Result<AlternativeTableau, BijectionError> {
    reflect_f(&altrep(t)?)
}

pub fn zeta_inv(a: &AlternativeTableau) -> Result<TypeBPermutationTableau, BijectionError> {
    altrep_inv(&reflect_f_inv(a)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::Shape;
    use crate::tableaux::{symmetric_alternative_tableaux, type_b_permutation_tableaux, GenOptions};

    fn figure_seven() -> TypeBPermutationTableau {
        let shape = ShiftedShape::new(Shape::new(7, vec![3, 1, 0]).unwrap());
        TypeBPermutationTableau::from_filling(shape, "00100000110111").unwrap()
    }

    #[test]
    fn figure_seven_representation() {
        let r = altrep(&figure_seven()).unwrap();
        let expected =
            vec![(Cell::new(4, 2), Symbol::Left), (Cell::new(4, 3), Symbol::Up), (Cell::new(6, 1), Symbol::Up)];
        assert_eq!(r.arrows(), expected.as_slice());
        assert_eq!(altrep_inv(&r).unwrap(), figure_seven());
    }

    #[test]
    fn diagonal_is_empty_after_reflection() {
        let a = zeta(&figure_seven()).unwrap();
        assert!(a.is_symmetric());
        assert_eq!(a.shape().n(), 14);
        for i in 1..=a.shape().durfee_size() {
            assert_eq!(a.get(Cell::new(i, i)), Symbol::Empty);
        }
        assert_eq!(zeta_inv(&a).unwrap(), figure_seven());
    }

    #[test]
    fn round_trips_small() {
        let opts = GenOptions::default();
        for n in 1..=4 {
            let ptbs = type_b_permutation_tableaux(n, &opts).unwrap();
            let mut images: Vec<_> = ptbs.iter().map(|t| zeta(t).unwrap()).collect();
            for (t, a) in ptbs.iter().zip(&images) {
                assert_eq!(&zeta_inv(a).unwrap(), t);
            }
            images.sort();
            let mut ats = symmetric_alternative_tableaux(n, &opts).unwrap();
            ats.sort();
            assert_eq!(images, ats);
        }
    }
}
