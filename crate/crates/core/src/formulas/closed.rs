//! Closed forms for corner counts and their enumerated counterparts.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::FormulaError;
use crate::permstats::all_permutations;
use crate::tableaux::{generate_all, Family, GenOptions, Tableau};

pub(crate) fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

pub(crate) fn pow2(n: usize) -> BigInt {
    BigInt::one() << n
}

pub(crate) fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

pub(crate) fn exact_div(num: BigInt, den: BigInt, what: impl FnOnce() -> String) -> Result<BigInt, FormulaError> {
    if den.is_zero() || !(&num % &den).is_zero() {
        return Err(FormulaError::InexactDivision(format!("{} ({num} / {den})", what())));
    }
    Ok(num / den)
}

fn out_of_range(what: String) -> FormulaError {
    FormulaError::OutOfRange(what)
}

/// Total number of corners over the family with parameter `n`, in the
/// parametrisation of [`Family`]: `At` with `n` is the set of alternative
/// tableaux of length `n`, hence `n = 0` is accepted there.
pub fn closed_corner_count(family: Family, n: usize) -> Result<BigInt, FormulaError> {
    let min = if family == Family::At { 0 } else { 1 };
    if n < min {
        return Err(out_of_range(format!("{family} needs n >= {min}, got {n}")));
    }
    let i = |v: usize| BigInt::from(v);
    let sq = |v: usize| BigInt::from(v * v);
    let what = || format!("corners of {family} at n = {n}");
    match family {
        Family::Pt if n == 1 => Ok(BigInt::zero()),
        Family::Pt => exact_div(factorial(n - 1) * (sq(n) + 4 * i(n) - 6), i(6), what),
        Family::At if n == 0 => Ok(BigInt::zero()),
        Family::At => {
            let m = n + 1;
            exact_div(factorial(m - 1) * (sq(m) + 4 * i(m) - 12), i(6), what)
        }
        Family::Tlt if n == 1 => Ok(BigInt::one()),
        Family::Tlt => exact_div(factorial(n) * (n + 4), i(6), what),
        Family::Ptb if n == 1 => Ok(BigInt::zero()),
        Family::Ptb => exact_div(pow2(n - 1) * factorial(n - 1) * (4 * sq(n) + 7 * i(n) - 12), i(12), what),
        Family::AtSym if n == 1 => Ok(BigInt::one()),
        Family::AtSym => exact_div(pow2(n) * factorial(n - 1) * (4 * sq(n) + 13 * i(n) - 12), i(12), what),
        Family::TltSym if n == 1 => Ok(i(3)),
        Family::TltSym => exact_div(pow2(n) * factorial(n) * (4 * n + 13), i(12), what),
    }
}

fn tree_like_only(family: Family, what: &str) -> Result<(), FormulaError> {
    match family {
        Family::Tlt | Family::TltSym => Ok(()),
        _ => Err(out_of_range(format!("{what} is defined on tlt and tltsym only, got {family}"))),
    }
}

/// Number of tableaux in the family with parameter `n`.
pub fn closed_tableau_count(family: Family, n: usize) -> BigInt {
    match family {
        Family::Pt | Family::Tlt => factorial(n),
        Family::At => factorial(n + 1),
        Family::Ptb | Family::AtSym | Family::TltSym => pow2(n) * factorial(n),
    }
}

/// Occupied corners over the tree-like tableaux of size `n`, or of size
/// `2n + 1` for the symmetric family.
pub fn closed_occupied(family: Family, n: usize) -> Result<BigInt, FormulaError> {
    tree_like_only(family, "occupied")?;
    if n == 0 {
        return Err(out_of_range("occupied needs n >= 1".into()));
    }
    Ok(match family {
        Family::TltSym => pow2(n) * factorial(n),
        _ => factorial(n),
    })
}

/// Non-occupied corners. The symmetric formula is not integral at `n = 1`,
/// where the value is `3 - 2`.
pub fn closed_noc(family: Family, n: usize) -> Result<BigInt, FormulaError> {
    tree_like_only(family, "noc")?;
    if n == 0 {
        return Err(out_of_range("noc needs n >= 1".into()));
    }
    let what = || format!("noc of {family} at n = {n}");
    match family {
        Family::Tlt if n <= 2 => Ok(BigInt::zero()),
        Family::Tlt => exact_div(factorial(n) * (n - 2), BigInt::from(6), what),
        _ if n == 1 => Ok(BigInt::one()),
        _ => exact_div(pow2(n) * factorial(n) * (4 * n + 1), BigInt::from(12), what),
    }
}

/// Number of ascending runs of size `r` over all permutations of `n`.
pub fn runs_closed(n: usize, r: usize) -> Result<BigInt, FormulaError> {
    if r == 0 || r >= n {
        return Err(out_of_range(format!("runs need 0 < r < n, got n = {n}, r = {r}")));
    }
    let (nb, rb) = (BigInt::from(n), BigInt::from(r));
    let bracket = &nb * (&rb * (&rb + 1) - 1) - &rb * (&rb - 2) * (&rb + 2) + 1;
    exact_div(factorial(n) * bracket, factorial(r + 2), || format!("runs at n = {n}, r = {r}"))
}

/// Corner statistics summed over an enumerated family.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CornerTotals {
    pub tableaux: u64,
    pub corners: u64,
    pub occupied: u64,
    pub noc: u64,
}

impl std::ops::Add for CornerTotals {
    type Output = CornerTotals;

    fn add(self, o: CornerTotals) -> CornerTotals {
        CornerTotals {
            tableaux: self.tableaux + o.tableaux,
            corners: self.corners + o.corners,
            occupied: self.occupied + o.occupied,
            noc: self.noc + o.noc,
        }
    }
}

fn totals_of(t: &Tableau) -> CornerTotals {
    let records = t.corner_records();
    let occupied = records.iter().filter(|r| r.occupied).count() as u64;
    CornerTotals { tableaux: 1, corners: records.len() as u64, occupied, noc: records.len() as u64 - occupied }
}

/// Totals over `generate_all(family, n)`. Occupancy of a corner of an
/// alternative tableau means a nonempty cell; permutation tableaux are full.
pub fn enumerated_totals(family: Family, n: usize, opts: &GenOptions) -> Result<CornerTotals, FormulaError> {
    let all = generate_all(family, n, opts)?;
    Ok(if opts.parallel {
        all.par_iter().map(totals_of).reduce(CornerTotals::default, |x, y| x + y)
    } else {
        all.iter().map(totals_of).fold(CornerTotals::default(), |x, y| x + y)
    })
}

pub fn enumerated_corner_count(family: Family, n: usize, opts: &GenOptions) -> Result<BigInt, FormulaError> {
    Ok(enumerated_totals(family, n, opts)?.corners.into())
}

/// The corner-count identities between families that the bijections give.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Corollary {
    /// `c(T_n) = c(AT_{n-1}) + 2(n-1)!` for `n >= 2`.
    TltAt,
    /// `c(T^sym_{2n+1}) = c(AT^sym_{2n}) + 2^n (n-1)!` for `n >= 1`.
    SymTltSymAt,
    /// `c(AT_{n-1}) = c(PT_n) - (n-1)!` for `n >= 2`.
    AtPt,
    /// `c(AT^sym_{2n}) = 2 c(PT^B_n) + 2^{n-1} n!` for `n >= 1`.
    SymAtPtb,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorollaryCheck {
    pub n: usize,
    #[serde(serialize_with = "crate::formulas::ser_bigint")]
    pub lhs: BigInt,
    #[serde(serialize_with = "crate::formulas::ser_bigint")]
    pub rhs: BigInt,
    pub holds: bool,
}

impl Corollary {
    pub const ALL: [Corollary; 4] = [Corollary::TltAt, Corollary::SymTltSymAt, Corollary::AtPt, Corollary::SymAtPtb];

    pub fn min_n(self) -> usize {
        match self {
            Corollary::TltAt | Corollary::AtPt => 2,
            Corollary::SymTltSymAt | Corollary::SymAtPtb => 1,
        }
    }

    /// Both sides from enumerated corner counts.
    pub fn check(self, n: usize, opts: &GenOptions) -> Result<CorollaryCheck, FormulaError> {
        if n < self.min_n() {
            return Err(out_of_range(format!("{self:?} needs n >= {}", self.min_n())));
        }
        let c = |family, m| enumerated_corner_count(family, m, opts);
        let (lhs, rhs) = match self {
            Corollary::TltAt => (c(Family::Tlt, n)?, c(Family::At, n - 1)? + 2 * factorial(n - 1)),
            Corollary::SymTltSymAt => (c(Family::TltSym, n)?, c(Family::AtSym, n)? + pow2(n) * factorial(n - 1)),
            Corollary::AtPt => (c(Family::At, n - 1)?, c(Family::Pt, n)? - factorial(n - 1)),
            Corollary::SymAtPtb => (c(Family::AtSym, n)?, 2 * c(Family::Ptb, n)? + pow2(n - 1) * factorial(n)),
        };
        let holds = lhs == rhs;
        Ok(CorollaryCheck { n, lhs, rhs, holds })
    }
}

/// Sums over the permutations of `m` of the statistics that share their
/// totals with non-occupied corners.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DisplacementTotals {
    pub positive_displacement: u64,
    /// Sum of `π_i - i` over the excedances `π_i > i`.
    pub excedance_sum: u64,
    pub double_descents: u64,
}

pub fn displacement_totals(m: usize) -> DisplacementTotals {
    let mut out = DisplacementTotals::default();
    for p in all_permutations(m) {
        let stats = p.aux_stats();
        out.positive_displacement += stats.positive_displacement as u64;
        out.double_descents += stats.double_descents as u64;
        out.excedance_sum += p.word().iter().enumerate().filter(|&(i, &v)| v > i + 1).map(|(i, &v)| (v - i - 1) as u64).sum::<u64>();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn family_sizes_match_enumeration() {
        let opts = GenOptions::default();
        for family in Family::ALL {
            for n in 0..=4 {
                if family == Family::Tlt && n == 0 {
                    continue;
                }
                let Ok(all) = generate_all(family, n, &opts) else { continue };
                assert_eq!(closed_tableau_count(family, n), BigInt::from(all.len()), "{family} {n}");
            }
        }
    }

    #[test]
    fn small_values() {
        assert_eq!(closed_corner_count(Family::Tlt, 1).unwrap(), big(1));
        assert_eq!(closed_corner_count(Family::TltSym, 1).unwrap(), big(3));
        assert_eq!(closed_corner_count(Family::Tlt, 3).unwrap(), big(7));
        assert_eq!(closed_corner_count(Family::At, 0).unwrap(), big(0));
        assert_eq!(closed_corner_count(Family::AtSym, 1).unwrap(), big(1));
        assert_eq!(closed_corner_count(Family::Ptb, 1).unwrap(), big(0));
        assert!(closed_corner_count(Family::Pt, 0).is_err());
        assert_eq!(closed_occupied(Family::Tlt, 4).unwrap(), big(24));
        assert_eq!(closed_noc(Family::Tlt, 2).unwrap(), big(0));
        assert_eq!(closed_noc(Family::Tlt, 4).unwrap(), big(8));
        assert_eq!(closed_noc(Family::TltSym, 1).unwrap(), big(1));
        assert!(closed_noc(Family::Pt, 3).is_err());
    }

    #[test]
    fn occupied_plus_noc_is_corners() {
        for n in 1..=20 {
            for f in [Family::Tlt, Family::TltSym] {
                let sum = closed_occupied(f, n).unwrap() + closed_noc(f, n).unwrap();
                assert_eq!(sum, closed_corner_count(f, n).unwrap(), "{f} {n}");
            }
        }
    }

    #[test]
    fn runs() {
        assert_eq!(runs_closed(3, 1).unwrap(), big(7));
        assert_eq!(runs_closed(5, 1).unwrap(), big(180));
        assert!(runs_closed(3, 3).is_err());
        assert!(runs_closed(3, 0).is_err());
        for n in 2..=30 {
            assert_eq!(runs_closed(n, 1).unwrap(), closed_corner_count(Family::Tlt, n).unwrap());
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), big(10));
        assert_eq!(binomial(2, 3), big(0));
        assert_eq!(binomial(4, 0), big(1));
    }

    #[test]
    fn displacement_small() {
        let t = displacement_totals(3);
        assert_eq!((t.positive_displacement, t.excedance_sum), (8, 8));
        assert_eq!(displacement_totals(4).double_descents, 8);
    }
}
