//! The six tableau families, their validation, exhaustive generation and
//! corner statistics.
//!
//! Families are indexed by a parameter `n` whose meaning depends on the
//! family, see [`Family::length`].

mod alternative;
mod generate;
mod permutation;
mod tree_like;
mod type_b;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::diagrams::{Cell, ShapeRecord, ShiftedShape};
use crate::error::{StructuralError, TableauError, Violation};

pub use alternative::{AlternativeTableau, Symbol};
pub use generate::{
    alternative_tableaux, generate_all, permutation_tableaux, symmetric_alternative_tableaux,
    symmetric_tree_like_tableaux, tree_like_fillings, tree_like_tableaux, type_b_permutation_tableaux, Bounds,
    GenOptions,
};
pub use permutation::{PermutationTableau, PtMarkers};
pub use tree_like::{SymmetricStats, TreeLikeTableau, WeightStats};
pub use type_b::TypeBPermutationTableau;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// Permutation tableaux of length `n`.
    Pt,
    /// Alternative tableaux of length `n`.
    At,
    /// Tree-like tableaux of size `n`.
    Tlt,
    /// Type B permutation tableaux of length `n`.
    Ptb,
    /// Symmetric alternative tableaux of length `2n`.
    AtSym,
    /// Symmetric tree-like tableaux of size `2n + 1`.
    TltSym,
}

impl Family {
    pub const ALL: [Family; 6] = [Family::Pt, Family::At, Family::Tlt, Family::Ptb, Family::AtSym, Family::TltSym];

    pub fn name(self) -> &'static str {
        match self {
            Family::Pt => "pt",
            Family::At => "at",
            Family::Tlt => "tlt",
            Family::Ptb => "ptb",
            Family::AtSym => "atsym",
            Family::TltSym => "tltsym",
        }
    }

    /// Length of the diagrams of the family with parameter `n`.
    pub fn length(self, n: usize) -> usize {
        match self {
            Family::Pt | Family::At | Family::Ptb => n,
            Family::Tlt => n + 1,
            Family::AtSym => 2 * n,
            Family::TltSym => 2 * n + 2,
        }
    }

    /// Number of points of a tree-like tableau of the family.
    pub fn size(self, n: usize) -> Option<usize> {
        match self {
            Family::Tlt => Some(n),
            Family::TltSym => Some(2 * n + 1),
            _ => None,
        }
    }

    pub fn is_symmetric(self) -> bool {
        matches!(self, Family::AtSym | Family::TltSym)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown family {s:?}; expected one of pt, at, tlt, ptb, atsym, tltsym"))
    }
}

/// Classes of non-occupied corners of tree-like tableaux. The column
/// condition asks for no point above the corner outside the first row, the
/// row condition for no point to its left outside the first column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum NocClass {
    /// Both conditions.
    AB,
    /// Column condition only.
    A1,
    /// Row condition only.
    OneB,
    /// Neither.
    OneOne,
    /// Occupied corner, or not a tree-like tableau.
    NotApplicable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CornerRecord {
    pub cell: Cell,
    pub occupied: bool,
    pub noc_class: NocClass,
}

/// A tableau of any family.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Tableau {
    Pt(PermutationTableau),
    At(AlternativeTableau),
    Tlt(TreeLikeTableau),
    Ptb(TypeBPermutationTableau),
    AtSym(AlternativeTableau),
    TltSym(TreeLikeTableau),
}

/// Serialized form: `{"family", "shape": {"n", "rows", "shifted"}, "filling"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauRecord {
    pub family: String,
    pub shape: ShapeRecord,
    pub filling: String,
}

impl Tableau {
    pub fn family(&self) -> Family {
        match self {
            Tableau::Pt(_) => Family::Pt,
            Tableau::At(_) => Family::At,
            Tableau::Tlt(_) => Family::Tlt,
            Tableau::Ptb(_) => Family::Ptb,
            Tableau::AtSym(_) => Family::AtSym,
            Tableau::TltSym(_) => Family::TltSym,
        }
    }

    pub fn shape_record(&self) -> ShapeRecord {
        match self {
            Tableau::Pt(t) => t.shape().to_record(),
            Tableau::At(t) | Tableau::AtSym(t) => t.shape().to_record(),
            Tableau::Tlt(t) | Tableau::TltSym(t) => t.shape().to_record(),
            Tableau::Ptb(t) => t.shape().to_record(),
        }
    }

    pub fn filling_string(&self) -> String {
        match self {
            Tableau::Pt(t) => t.filling_string(),
            Tableau::At(t) | Tableau::AtSym(t) => t.filling_string(),
            Tableau::Tlt(t) | Tableau::TltSym(t) => t.filling_string(),
            Tableau::Ptb(t) => t.filling_string(),
        }
    }

    pub fn render_ascii(&self) -> String {
        match self {
            Tableau::Pt(t) => t.render_ascii(),
            Tableau::At(t) | Tableau::AtSym(t) => t.render_ascii(),
            Tableau::Tlt(t) | Tableau::TltSym(t) => t.render_ascii(),
            Tableau::Ptb(t) => t.render_ascii(),
        }
    }

    pub fn to_record(&self) -> TableauRecord {
        TableauRecord {
            family: self.family().name().to_string(),
            shape: self.shape_record(),
            filling: self.filling_string(),
        }
    }

    /// Parses and validates a record, including the symmetry of the
    /// symmetric families.
    pub fn from_record(record: &TableauRecord) -> Result<Tableau, TableauError> {
        let family: Family = record
            .family
            .parse()
            .map_err(|_| StructuralError::UnknownFamily(record.family.clone()))?;
        let shape = record.shape.to_shape().map_err(StructuralError::from)?;
        let filling = record.filling.as_str();
        let t = match (family, record.shape.shifted) {
            (Family::Ptb, true) => Tableau::Ptb(TypeBPermutationTableau::from_filling(ShiftedShape::new(shape), filling)?),
            (Family::Pt, false) => {
                if shape.has_empty_column() {
                    let col = shape.rows().first().copied().unwrap_or(0) + 1;
                    return Err(Violation::ColumnWithoutOne { col }.into());
                }
                Tableau::Pt(PermutationTableau::from_filling(shape, filling)?)
            }
            (Family::At, false) => Tableau::At(AlternativeTableau::from_filling(shape, filling)?),
            (Family::AtSym, false) => {
                let t = AlternativeTableau::from_filling(shape, filling)?;
                if !t.is_symmetric() {
                    return Err(Violation::NotSymmetric.into());
                }
                Tableau::AtSym(t)
            }
            (Family::Tlt, false) => Tableau::Tlt(TreeLikeTableau::from_filling(shape, filling)?),
            (Family::TltSym, false) => {
                let t = TreeLikeTableau::from_filling(shape, filling)?;
                if !t.is_symmetric() {
                    return Err(Violation::NotSymmetric.into());
                }
                Tableau::TltSym(t)
            }
            (family, shifted) => {
                let kind = if shifted { "shifted" } else { "plain" };
                return Err(StructuralError::ShapeKind { family: family.name().to_string(), kind }.into());
            }
        };
        Ok(t)
    }

    /// One record per corner of the diagram. Every corner of a permutation
    /// tableau is filled, hence occupied.
    pub fn corner_records(&self) -> Vec<CornerRecord> {
        let filled = |cell| CornerRecord { cell, occupied: true, noc_class: NocClass::NotApplicable };
        match self {
            Tableau::Pt(t) => t.shape().corners().into_iter().map(filled).collect(),
            Tableau::Ptb(t) => t.shape().corners().into_iter().map(filled).collect(),
            Tableau::At(t) | Tableau::AtSym(t) => t
                .shape()
                .corners()
                .into_iter()
                .map(|cell| CornerRecord {
                    cell,
                    occupied: t.get(cell) != Symbol::Empty,
                    noc_class: NocClass::NotApplicable,
                })
                .collect(),
            Tableau::Tlt(t) | Tableau::TltSym(t) => t.corner_records(),
        }
    }

    pub fn num_corners(&self) -> usize {
        self.corner_records().len()
    }

    pub fn is_symmetric(&self) -> bool {
        match self {
            Tableau::At(t) | Tableau::AtSym(t) => t.is_symmetric(),
            Tableau::Tlt(t) | Tableau::TltSym(t) => t.is_symmetric(),
            Tableau::Pt(_) | Tableau::Ptb(_) => false,
        }
    }
}

/// Keeps the alternative and tree-like tableaux that are unchanged by the
/// reflection across the main diagonal, retagged as symmetric.
pub fn filter_symmetric(tableaux: impl IntoIterator<Item = Tableau>) -> Vec<Tableau> {
    tableaux
        .into_iter()
        .filter(Tableau::is_symmetric)
        .filter_map(|t| match t {
            Tableau::At(a) | Tableau::AtSym(a) => Some(Tableau::AtSym(a)),
            Tableau::Tlt(a) | Tableau::TltSym(a) => Some(Tableau::TltSym(a)),
            _ => None,
        })
        .collect()
}

/// Checks a serialized candidate against the rules of its family.
pub fn validate(record: &TableauRecord) -> Result<(), TableauError> {
    Tableau::from_record(record).map(|_| ())
}

pub(crate) fn check_rows<T>(lens: &[usize], rows: &[Vec<T>]) -> Result<(), StructuralError> {
    if rows.len() != lens.len() {
        return Err(StructuralError::RowCount { expected: lens.len(), got: rows.len() });
    }
    for (i, (row, &len)) in rows.iter().zip(lens).enumerate() {
        if row.len() != len {
            return Err(StructuralError::RowLength { row: i + 1, expected: len, got: row.len() });
        }
    }
    Ok(())
}

pub(crate) fn parse_symbols<T>(
    lens: &[usize],
    filling: &str,
    parse: impl Fn(char) -> Option<T>,
) -> Result<Vec<Vec<T>>, StructuralError> {
    let symbols: Vec<char> = filling.chars().collect();
    let expected: usize = lens.iter().sum();
    if symbols.len() != expected {
        return Err(StructuralError::SymbolCount { expected, got: symbols.len() });
    }
    let mut it = symbols.into_iter();
    lens.iter()
        .map(|&len| {
            it.by_ref()
                .take(len)
                .map(|c| parse(c).ok_or(StructuralError::Symbol(c)))
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::Shape;

    #[test]
    fn record_round_trip() {
        let shape = Shape::new(8, vec![4, 3, 3, 0]).unwrap();
        let t = Tableau::Pt(PermutationTableau::from_filling(shape, "0101111001").unwrap());
        let rec = t.to_record();
        let json = serde_json::to_string(&rec).unwrap();
        assert_eq!(
            json,
            r#"{"family":"pt","shape":{"n":8,"rows":[4,3,3,0],"shifted":false},"filling":"0101111001"}"#
        );
        let back: TableauRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(Tableau::from_record(&back).unwrap(), t);
    }

    #[test]
    fn symmetric_families_reject_asymmetric_fillings() {
        let rec = TableauRecord {
            family: "tltsym".into(),
            shape: ShapeRecord { n: 3, rows: vec![2], shifted: false },
            filling: "DD".into(),
        };
        assert_eq!(validate(&rec), Err(TableauError::Invalid(Violation::NotSymmetric)));
        let rec = TableauRecord { family: "tlt".into(), ..rec };
        assert!(validate(&rec).is_ok());
    }

    #[test]
    fn pt_record_with_empty_column_is_invalid() {
        let rec = TableauRecord {
            family: "pt".into(),
            shape: ShapeRecord { n: 3, rows: vec![1], shifted: false },
            filling: "1".into(),
        };
        assert!(matches!(validate(&rec), Err(TableauError::Invalid(Violation::ColumnWithoutOne { col: 2 }))));
    }

    #[test]
    fn family_names_parse() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("nope".parse::<Family>().is_err());
    }
}
