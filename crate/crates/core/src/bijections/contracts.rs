//! Label contracts of the bijections from permutation tableaux to
//! permutations, checked as multiset identities.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::TableauError;
use crate::permstats::{all_permutations, all_signed_permutations};
use crate::tableaux::{permutation_tableaux, type_b_permutation_tableaux, GenOptions};

pub type SetMultiset = BTreeMap<BTreeSet<usize>, u64>;

fn tally(sets: impl IntoIterator<Item = BTreeSet<usize>>) -> SetMultiset {
    let mut out = SetMultiset::new();
    for s in sets {
        *out.entry(s).or_default() += 1;
    }
    out
}

/// Column-label sets of the permutation tableaux of length `n`.
pub fn pt_column_label_sets(n: usize, opts: &GenOptions) -> Result<SetMultiset, TableauError> {
    let pts = permutation_tableaux(n, opts)?;
    Ok(tally(pts.iter().map(|t| t.shape().border_labeling().col_label_set())))
}

/// Descent sets of the permutations of `n`.
pub fn descent_sets(n: usize) -> SetMultiset {
    tally(all_permutations(n).iter().map(|p| p.descents()))
}

/// Column-label sets of the type B permutation tableaux of length `n`.
pub fn ptb_column_label_sets(n: usize, opts: &GenOptions) -> Result<SetMultiset, TableauError> {
    let ptbs = type_b_permutation_tableaux(n, opts)?;
    Ok(tally(ptbs.iter().map(|t| t.shape().border_labeling().col_label_set())))
}

/// Absolute values of the signed descents of the signed permutations of `n`.
pub fn signed_descent_sets(n: usize) -> SetMultiset {
    tally(all_signed_permutations(n).iter().map(|p| p.descent_labels()))
}

pub fn phi_contract_check(n: usize, opts: &GenOptions) -> Result<bool, TableauError> {
    Ok(pt_column_label_sets(n, opts)? == descent_sets(n))
}

pub fn xi_contract_check(n: usize, opts: &GenOptions) -> Result<bool, TableauError> {
    Ok(ptb_column_label_sets(n, opts)? == signed_descent_sets(n))
}
