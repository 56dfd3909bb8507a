//! Closed forms, polynomial analogues and conjecture evaluators, all in
//! exact arithmetic.

mod analogues;
mod closed;
mod conjectures;
mod poly;

use num_bigint::BigInt;
use serde::Serializer;

pub use analogues::{
    eulerian_ab, eulerian_at_one, eulerian_derivative_closed, eulerian_poly, eulerian_table, lemma_checks,
    noc_partition_closed, noc_partition_sums, symmetric_sums, t_ab, tsym_x, tsym_xyz, weight, weighted_sums,
    NocPartition, SymmetricSums, WeightedSums,
};
pub use closed::{
    closed_corner_count, closed_noc, closed_occupied, closed_tableau_count, displacement_totals, enumerated_corner_count, enumerated_totals,
    runs_closed, CornerTotals, Corollary, CorollaryCheck, DisplacementTotals,
};
pub use conjectures::{
    conjecture_ab, conjecture_x, corners_ab_expanded, expected_x, expected_x_closed, noc_ab_conjectured,
    noc_x_conjectured, x_reference_table, AbConjecture, ExpectedX, Verdict, XConjecture,
};
pub use poly::{BivarPoly, Poly, RationalValue, TrivarPoly, UnivarPoly};

/// Big integers go to JSON as decimal strings.
pub fn ser_bigint<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}
