//! Whole-domain checks of the tableau bijections against independently
//! enumerated codomains.

use std::collections::HashSet;
use std::hash::Hash;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::BijectionError;
use crate::tableaux::{
    alternative_tableaux, permutation_tableaux, symmetric_alternative_tableaux, symmetric_tree_like_tableaux,
    tree_like_tableaux, type_b_permutation_tableaux, AlternativeTableau, GenOptions,
};

use super::{alpha, alpha_inv, gamma, gamma_inv, zeta, zeta_inv};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RoundTripReport {
    pub domain: usize,
    pub codomain: usize,
    pub injective: bool,
    pub onto: bool,
    pub inverse_ok: bool,
    /// Filling of the first element whose image or preimage misbehaves.
    pub counterexample: Option<String>,
}

impl RoundTripReport {
    pub fn passed(&self) -> bool {
        self.injective && self.onto && self.inverse_ok && self.domain == self.codomain
    }
}

fn check<D, C, F, G>(domain: Vec<D>, codomain: Vec<C>, f: F, g: G, show: impl Fn(&D) -> String, opts: &GenOptions) -> RoundTripReport
where
    D: PartialEq + Sync,
    C: Eq + Hash + Send + Sync,
    F: Fn(&D) -> Result<C, BijectionError> + Sync,
    G: Fn(&C) -> Result<D, BijectionError> + Sync,
{
    let step = |d: &D| -> (Option<C>, bool) {
        match f(d) {
            Ok(c) => {
                let back = g(&c).is_ok_and(|e| e == *d);
                (Some(c), back)
            }
            Err(_) => (None, false),
        }
    };
    let images: Vec<(Option<C>, bool)> =
        if opts.parallel { domain.par_iter().map(step).collect() } else { domain.iter().map(step).collect() };
    let mut seen = HashSet::new();
    let mut counterexample = None;
    let mut inverse_ok = true;
    let mut injective = true;
    for (d, (image, back)) in domain.iter().zip(images) {
        let fresh = match image {
            Some(c) => seen.insert(c),
            None => false,
        };
        inverse_ok &= back;
        injective &= fresh;
        if (!fresh || !back) && counterexample.is_none() {
            counterexample = Some(show(d));
        }
    }
    let expected: HashSet<C> = codomain.into_iter().collect();
    RoundTripReport {
        domain: domain.len(),
        codomain: expected.len(),
        injective,
        onto: seen == expected,
        inverse_ok,
        counterexample,
    }
}

/// Tree-like tableaux of size `n` onto alternative tableaux of length `n - 1`.
pub fn check_alpha(n: usize, opts: &GenOptions) -> Result<RoundTripReport, BijectionError> {
    if n == 0 {
        return Err(BijectionError::Domain("size 0".into()));
    }
    let dom = tree_like_tableaux(n, opts)?;
    let cod = alternative_tableaux(n - 1, opts)?;
    Ok(check(dom, cod, alpha, alpha_inv, |t| t.filling_string(), opts))
}

/// Symmetric tree-like tableaux of size `2n + 1` onto symmetric
/// alternative tableaux of length `2n`.
pub fn check_alpha_sym(n: usize, opts: &GenOptions) -> Result<RoundTripReport, BijectionError> {
    let dom = symmetric_tree_like_tableaux(n, opts)?;
    let cod = symmetric_alternative_tableaux(n, opts)?;
    Ok(check(dom, cod, alpha, alpha_inv, |t| t.filling_string(), opts))
}

/// Permutation tableaux of length `n` onto alternative tableaux of length
/// `n - 1`.
pub fn check_gamma(n: usize, opts: &GenOptions) -> Result<RoundTripReport, BijectionError> {
    if n == 0 {
        return Err(BijectionError::Domain("size 0".into()));
    }
    let dom = permutation_tableaux(n, opts)?;
    let cod = alternative_tableaux(n - 1, opts)?;
    Ok(check(dom, cod, gamma, gamma_inv, |t| t.filling_string(), opts))
}

/// Type B permutation tableaux of length `n` onto symmetric alternative
/// tableaux of length `2n`.
pub fn check_zeta(n: usize, opts: &GenOptions) -> Result<RoundTripReport, BijectionError> {
    let dom = type_b_permutation_tableaux(n, opts)?;
    let cod: Vec<AlternativeTableau> = symmetric_alternative_tableaux(n, opts)?;
    Ok(check(dom, cod, zeta, zeta_inv, |t| t.filling_string(), opts))
}
