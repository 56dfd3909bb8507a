use thiserror::Error;

use crate::diagrams::Cell;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShapeError {
    #[error("{k} rows do not fit a diagram of length {n}")]
    TooManyRows { n: usize, k: usize },
    #[error("row {row} is longer than the row above it")]
    NotWeaklyDecreasing { row: usize },
    #[error("row {row} has {len} cells but only {width} columns are available")]
    RowTooLong { row: usize, len: usize, width: usize },
}

/// The filling does not cover the cells of its diagram.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructuralError {
    #[error("filling has {got} rows, diagram has {expected}")]
    RowCount { expected: usize, got: usize },
    #[error("filling row {row} has {got} cells, diagram row has {expected}")]
    RowLength { row: usize, expected: usize, got: usize },
    #[error("serialized filling has {got} symbols, diagram has {expected} cells")]
    SymbolCount { expected: usize, got: usize },
    #[error("unknown symbol {0:?} in serialized filling")]
    Symbol(char),
    #[error("cell {0} lies outside the diagram")]
    CellOutside(Cell),
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("family {family} does not use {kind} diagrams")]
    ShapeKind { family: String, kind: &'static str },
    #[error(transparent)]
    Shape(#[from] ShapeError),
}

/// First rule of a tableau family broken by a candidate filling.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("column {col} has no 1")]
    ColumnWithoutOne { col: usize },
    #[error("0 at {0} has a 1 above it and a 1 to its left")]
    ForbiddenZero(Cell),
    #[error("diagonal 0 at {0} has a 1 to its left")]
    DiagonalZero(Cell),
    #[error("cell {pointed} is pointed at by the arrow in {arrow} but is not empty")]
    PointedCellFilled { arrow: Cell, pointed: Cell },
    #[error("root cell (1,1) has no point")]
    MissingRoot,
    #[error("point at {0} has a point above and a point to its left")]
    TwoParents(Cell),
    #[error("point at {0} has neither a point above nor a point to its left")]
    NoParent(Cell),
    #[error("row {row} has no point")]
    EmptyRow { row: usize },
    #[error("column {col} has no point")]
    EmptyColumn { col: usize },
    #[error("tableau is not symmetric with respect to its main diagonal")]
    NotSymmetric,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error(transparent)]
    Structural(#[from] StructuralError),
    #[error("invalid tableau: {0}")]
    Invalid(#[from] Violation),
    #[error("{family} with parameter {n} exceeds the enumeration bound {limit}; raise the bound explicitly")]
    BoundExceeded { family: &'static str, n: usize, limit: usize },
    #[error("{0} is only defined on symmetric tree-like tableaux")]
    NotSymmetric(&'static str),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("word is not a permutation of 1..={n}")]
    NotAPermutation { n: usize },
    #[error("absolute values do not form a permutation of 1..={n}")]
    NotASignedPermutation { n: usize },
    #[error("index {i} out of range for n = {n}")]
    IndexOutOfRange { n: usize, i: usize },
    #[error("run size {r} out of range for n = {n}")]
    RunSizeOutOfRange { n: usize, r: usize },
    #[error("cannot parse permutation: {0}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error(transparent)]
    Tableau(#[from] TableauError),
    #[error(transparent)]
    Permutation(#[from] PermError),
    #[error("cell {0} is not a corner")]
    NotACorner(Cell),
    #[error("malformed pointed word: {0}")]
    MalformedWord(String),
    #[error("triplet invariant violated: {0}")]
    Triplet(String),
    #[error("position {0} is not a run of size 1")]
    NotASingletonRun(usize),
    #[error("no tableau of the requested kind: {0}")]
    Domain(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("closed form division is not exact: {0}")]
    InexactDivision(String),
    #[error(transparent)]
    Tableau(#[from] TableauError),
    #[error(transparent)]
    Permutation(#[from] PermError),
}
