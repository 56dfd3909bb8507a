//! Default parameter ceilings for enumeration, and how they are raised.

use std::io::Write;

use tableau_corners::tableaux::{Bounds, Family, GenOptions};

pub const MAX_N_ENV: &str = "TABLEAUX_MAX_N";

/// Largest `n` enumerated without an explicit override.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DeskBounds {
    /// Permutation and alternative tableaux of length `n`, tree-like
    /// tableaux of size `n`.
    pub type_a: usize,
    /// Type B permutation tableaux of length `n`, symmetric alternative
    /// tableaux of length `2n`, symmetric tree-like tableaux of size `2n+1`.
    pub type_b: usize,
    pub corners_runs: usize,
    /// Permutations scanned for run counts.
    pub runs: usize,
    /// Largest `h + w` of non-ambiguous trees.
    pub nat: usize,
}

impl Default for DeskBounds {
    fn default() -> Self {
        DeskBounds { type_a: 8, type_b: 5, corners_runs: 6, runs: 9, nat: 5 }
    }
}

impl DeskBounds {
    /// The defaults, with every ceiling set to `TABLEAUX_MAX_N` when that
    /// variable holds a number.
    pub fn from_env(err: &mut dyn Write) -> DeskBounds {
        let value = std::env::var(MAX_N_ENV).ok();
        match value.as_deref().map(str::trim).map(str::parse::<usize>) {
            None => DeskBounds::default(),
            Some(Ok(k)) => {
                if k > DeskBounds::default().type_b {
                    let _ = writeln!(err, "warning: {MAX_N_ENV}={k} raises the enumeration bounds; runs may be slow");
                }
                DeskBounds { type_a: k, type_b: k, corners_runs: k, runs: k, nat: k }
            }
            Some(Err(_)) => {
                let _ = writeln!(err, "warning: ignoring {MAX_N_ENV}={:?}, not a number", value.unwrap_or_default());
                DeskBounds::default()
            }
        }
    }

    pub fn family_cap(&self, family: Family) -> usize {
        match family {
            Family::Pt | Family::At | Family::Tlt => self.type_a,
            Family::Ptb | Family::AtSym | Family::TltSym => self.type_b,
        }
    }

    /// Generator options admitting everything up to the ceilings.
    pub fn gen_options(&self, parallel: bool) -> GenOptions {
        GenOptions {
            bounds: Bounds {
                type_a_length: self.type_a.max(self.corners_runs) + 1,
                type_b: self.type_b,
                sym_tlt_size: 2 * self.type_b + 1,
            },
            parallel,
        }
    }

    /// Raises the ceilings so that `family` with parameter `n` fits.
    pub fn admit(&mut self, family: Family, n: usize) {
        match family {
            Family::Pt | Family::At | Family::Tlt => self.type_a = self.type_a.max(n),
            Family::Ptb | Family::AtSym | Family::TltSym => self.type_b = self.type_b.max(n),
        }
    }
}

/// Caps `requested` at `cap`, or keeps it with a warning when clamping is
/// disabled.
pub fn clamp(requested: usize, cap: usize, no_clamp: bool, what: &str, err: &mut dyn Write) -> usize {
    if requested <= cap {
        return requested;
    }
    if no_clamp {
        let _ = writeln!(err, "warning: {what} n = {requested} is above the default bound {cap}; enumeration may be slow");
        requested
    } else {
        let _ = writeln!(err, "note: {what} clamped from n = {requested} to n = {cap}; pass --no-clamp to go further");
        cap
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clamping() {
        let mut err = Vec::new();
        assert_eq!(clamp(3, 5, false, "x", &mut err), 3);
        assert!(err.is_empty());
        assert_eq!(clamp(7, 5, false, "x", &mut err), 5);
        assert_eq!(clamp(7, 5, true, "x", &mut err), 7);
        let text = String::from_utf8(err).unwrap();
        assert!(text.contains("note:") && text.contains("warning:"));
    }

    #[test]
    fn options_cover_the_ceilings() {
        let b = DeskBounds::default();
        let opts = b.gen_options(false);
        assert_eq!(opts.bounds.type_a_length, 9);
        assert_eq!(opts.bounds.sym_tlt_size, 11);
    }
}
