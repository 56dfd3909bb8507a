//! Permutations, signed permutations and the statistics read off them.
//!
//! Descents and ascents use the sentinel `π(n+1) = n+1` and are returned as
//! sets of *values*, so that they can be compared directly with row and
//! column labels of tableaux. Runs use the sentinels `σ(0) = n+1` and
//! `σ(n+1) = 0`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::PermError;

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self, PermError> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n || seen[v] {
                return Err(PermError::NotAPermutation { n });
            }
            seen[v] = true;
        }
        Ok(Permutation(word))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn word(&self) -> &[usize] {
        &self.0
    }

    pub fn into_word(self) -> Vec<usize> {
        self.0
    }

    /// `π(i)` for `1 <= i <= n`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    /// Values `π(i)` with `π(i) > π(i+1)`, where `π(n+1) = n+1`.
    pub fn descents(&self) -> BTreeSet<usize> {
        let n = self.len();
        (0..n)
            .filter(|&i| self.0[i] > self.0.get(i + 1).copied().unwrap_or(n + 1))
            .map(|i| self.0[i])
            .collect()
    }

    pub fn ascents(&self) -> BTreeSet<usize> {
        let n = self.len();
        (0..n)
            .filter(|&i| self.0[i] < self.0.get(i + 1).copied().unwrap_or(n + 1))
            .map(|i| self.0[i])
            .collect()
    }

    /// Whether value `i` is an ascent and value `i + 1` a descent.
    pub fn ascent_then_descent(&self, i: usize) -> bool {
        let n = self.len();
        let pos = self.positions();
        let next = |v: usize| self.0.get(pos[v] + 1).copied().unwrap_or(n + 1);
        i < next(i) && i + 1 > next(i + 1)
    }

    /// `positions()[v]` is the 0-based index of value `v`.
    fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.len() + 1];
        for (i, &v) in self.0.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    pub fn run_decomposition(&self) -> RunDecomposition {
        let mut runs = Vec::new();
        let mut start = 0;
        for i in 1..=self.len() {
            if i == self.len() || self.0[i] < self.0[i - 1] {
                runs.push(Run { start: start + 1, len: i - start });
                start = i;
            }
        }
        RunDecomposition { runs }
    }

    /// 1-based positions `k` with `σ(k-1) > σ(k) > σ(k+1)`.
    pub fn singleton_runs(&self) -> Vec<usize> {
        let n = self.len();
        (1..=n)
            .filter(|&k| {
                let prev = if k == 1 { n + 1 } else { self.0[k - 2] };
                let next = if k == n { 0 } else { self.0[k] };
                prev > self.0[k - 1] && self.0[k - 1] > next
            })
            .collect()
    }

    pub fn aux_stats(&self) -> AuxStats {
        let w = &self.0;
        let n = w.len();
        let double_descents = (0..n.saturating_sub(2)).filter(|&i| w[i] > w[i + 1] && w[i + 1] > w[i + 2]).count();
        let excedances = (0..n.saturating_sub(1)).filter(|&i| w[i] > i + 1).count();
        let positive_displacement = w.iter().enumerate().map(|(i, &v)| v.saturating_sub(i + 1)).sum();
        AuxStats { double_descents, excedances, positive_displacement }
    }

    /// Disjoint cycles, each written with its largest element first, ordered
    /// by increasing maximum.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n + 1];
        let mut cycles = Vec::new();
        for start in (1..=n).rev() {
            if seen[start] {
                continue;
            }
            // values visited from the maximum of a cycle are all smaller, so
            // scanning downward always starts a cycle at its maximum
            let mut cycle = vec![start];
            seen[start] = true;
            let mut v = self.at(start);
            while v != start {
                seen[v] = true;
                cycle.push(v);
                v = self.at(v);
            }
            cycles.push(cycle);
        }
        cycles.reverse();
        cycles
    }

    pub fn num_cycles(&self) -> usize {
        self.cycles().len()
    }

    /// Builds the permutation from disjoint cycles covering `1..=n`.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self, PermError> {
        let mut word = vec![0; n];
        for cycle in cycles {
            for (i, &v) in cycle.iter().enumerate() {
                let next = cycle[(i + 1) % cycle.len()];
                if v == 0 || v > n || word[v - 1] != 0 {
                    return Err(PermError::NotAPermutation { n });
                }
                word[v - 1] = next;
            }
        }
        Permutation::new(word)
    }

    pub fn left_to_right_maxima(&self) -> usize {
        let mut max = 0;
        self.0
            .iter()
            .filter(|&&v| {
                let record = v > max;
                max = max.max(v);
                record
            })
            .count()
    }

    /// Inverse of [`foata`]: split the word before each left-to-right maximum.
    pub fn foata_inverse(&self) -> Vec<Vec<usize>> {
        split_at_records(&self.0)
    }
}

/// Concatenates cycles ordered by increasing maximum, each written with its
/// maximum first.
pub fn foata(cycles: &[Vec<usize>]) -> Permutation {
    let mut normalized: Vec<Vec<usize>> = cycles.iter().map(|c| max_first(c)).collect();
    normalized.sort_by_key(|c| c[0]);
    Permutation(normalized.concat())
}

/// Rotates a cycle so that its largest element comes first.
pub fn max_first(cycle: &[usize]) -> Vec<usize> {
    let at = cycle.iter().enumerate().max_by_key(|&(_, &v)| v).map(|(i, _)| i).unwrap_or(0);
    cycle[at..].iter().chain(&cycle[..at]).copied().collect()
}

/// Splits a word before every left-to-right maximum.
pub fn split_at_records(word: &[usize]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut max = 0;
    for &v in word {
        if v > max {
            max = v;
            out.push(vec![v]);
        } else if let Some(last) = out.last_mut() {
            last.push(v);
        }
    }
    out
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let word = parse_word(s)?
            .into_iter()
            .map(|v| usize::try_from(v).map_err(|_| PermError::Parse(s.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Permutation::new(word)
    }
}

fn parse_word(s: &str) -> Result<Vec<i64>, PermError> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| PermError::Parse(s.to_string())))
        .collect()
}

/// A signed permutation `σ(1)…σ(n)`; `σ(-i) = -σ(i)` is implicit.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedPermutation(Vec<i64>);

impl SignedPermutation {
    pub fn new(word: Vec<i64>) -> Result<Self, PermError> {
        let n = word.len();
        let abs: Vec<usize> = word.iter().map(|v| v.unsigned_abs() as usize).collect();
        Permutation::new(abs).map_err(|_| PermError::NotASignedPermutation { n })?;
        Ok(SignedPermutation(word))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn word(&self) -> &[i64] {
        &self.0
    }

    fn is_descent_at(&self, i: usize) -> bool {
        let n = self.len() as i64;
        let v = self.0[i];
        let next = self.0.get(i + 1).map(|x| x.abs()).unwrap_or(n + 1);
        v < 0 || v > next
    }

    /// Entries `σ(i)` with `σ(i) < 0` or `σ(i) > |σ(i+1)|`, `σ(n+1) = n+1`.
    pub fn signed_descents(&self) -> BTreeSet<i64> {
        (0..self.len()).filter(|&i| self.is_descent_at(i)).map(|i| self.0[i]).collect()
    }

    pub fn signed_ascents(&self) -> BTreeSet<i64> {
        (0..self.len()).filter(|&i| !self.is_descent_at(i)).map(|i| self.0[i]).collect()
    }

    /// Absolute values of the signed descents.
    pub fn descent_labels(&self) -> BTreeSet<usize> {
        self.signed_descents().into_iter().map(|v| v.unsigned_abs() as usize).collect()
    }

    /// Whether `i` is a signed ascent and `i + 1` a signed descent.
    pub fn ascent_then_descent(&self, i: usize) -> bool {
        let pos_of = |v: usize| self.0.iter().position(|x| x.unsigned_abs() as usize == v).unwrap();
        let (a, b) = (pos_of(i), pos_of(i + 1));
        !self.is_descent_at(a) && self.is_descent_at(b)
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for SignedPermutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SignedPermutation::new(parse_word(s)?)
    }
}

/// A maximal ascending run, 1-based start position.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Run {
    pub start: usize,
    pub len: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunDecomposition {
    pub runs: Vec<Run>,
}

impl RunDecomposition {
    pub fn count_of_size(&self, r: usize) -> usize {
        self.runs.iter().filter(|run| run.len == r).count()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct AuxStats {
    pub double_descents: usize,
    pub excedances: usize,
    pub positive_displacement: usize,
}

/// All permutations of `1..=n` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut word: Vec<usize> = (1..=n).collect();
    let mut out = vec![Permutation(word.clone())];
    while next_permutation(&mut word) {
        out.push(Permutation(word.clone()));
    }
    out
}

fn next_permutation(w: &mut [usize]) -> bool {
    if w.len() < 2 {
        return false;
    }
    let Some(i) = (0..w.len() - 1).rev().find(|&i| w[i] < w[i + 1]) else {
        return false;
    };
    let j = (i + 1..w.len()).rev().find(|&j| w[j] > w[i]).unwrap();
    w.swap(i, j);
    w[i + 1..].reverse();
    true
}

/// All signed permutations, lexicographic on the absolute word and then on
/// the sign mask (bit `i` set = entry `i` negative).
pub fn all_signed_permutations(n: usize) -> Vec<SignedPermutation> {
    let mut out = Vec::with_capacity((1usize << n) * all_permutations(n).len());
    for p in all_permutations(n) {
        for mask in 0u32..(1 << n) {
            let word = p
                .0
                .iter()
                .enumerate()
                .map(|(i, &v)| if mask >> i & 1 == 1 { -(v as i64) } else { v as i64 })
                .collect();
            out.push(SignedPermutation(word));
        }
    }
    out
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

fn check_index(n: usize, i: usize) -> Result<(), PermError> {
    if n < 2 || i == 0 || i >= n {
        return Err(PermError::IndexOutOfRange { n, i });
    }
    Ok(())
}

/// `|A_i|`: permutations of `n` where `i` is an ascent and `i + 1` a descent.
pub fn count_ai(n: usize, i: usize) -> Result<u128, PermError> {
    check_index(n, i)?;
    Ok(all_permutations(n).iter().filter(|p| p.ascent_then_descent(i)).count() as u128)
}

/// `(i-1)(n-2)! + (n-i)(n-2)! + (n-i)(i-1)(n-2)!`.
pub fn closed_ai(n: usize, i: usize) -> Result<u128, PermError> {
    check_index(n, i)?;
    let f = factorial(n - 2);
    let (i, n) = (i as u128, n as u128);
    Ok((i - 1) * f + (n - i) * f + (n - i) * (i - 1) * f)
}

/// `|B_i|` over signed permutations.
pub fn count_bi(n: usize, i: usize) -> Result<u128, PermError> {
    check_index(n, i)?;
    Ok(all_signed_permutations(n).iter().filter(|s| s.ascent_then_descent(i)).count() as u128)
}

/// `2^{n-2}[(n-1)! + (n-i)(n-1)! + (i-1)(n-2)! + (n-i)(n-2)! + (n-i)(i-1)(n-2)!]`.
pub fn closed_bi(n: usize, i: usize) -> Result<u128, PermError> {
    check_index(n, i)?;
    let f1 = factorial(n - 1);
    let f2 = factorial(n - 2);
    let pow = 1u128 << (n - 2);
    let (i, n) = (i as u128, n as u128);
    Ok(pow * (f1 + (n - i) * f1 + (i - 1) * f2 + (n - i) * f2 + (n - i) * (i - 1) * f2))
}

/// Total number of ascending runs of size `r` over all permutations of `n`.
pub fn count_runs_of_size(n: usize, r: usize) -> Result<u128, PermError> {
    if r == 0 || r > n {
        return Err(PermError::RunSizeOutOfRange { n, r });
    }
    Ok(all_permutations(n).iter().map(|p| p.run_decomposition().count_of_size(r) as u128).sum())
}

/// Permutations of `n` with exactly `k` cycles, in lexicographic order.
pub fn permutations_with_cycles(n: usize, k: usize) -> Vec<Permutation> {
    all_permutations(n).into_iter().filter(|p| p.num_cycles() == k).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn descent_examples() {
        assert_eq!(perm("5,7,6,3,1,2,8,4").descents(), BTreeSet::from([7, 6, 3, 8]));
        assert!(Permutation::identity(6).descents().is_empty());
        assert_eq!(perm("2,1").descents(), BTreeSet::from([2]));
    }

    #[test]
    fn signed_descent_examples() {
        let s: SignedPermutation = "3,-1,-4,2,6,5,7".parse().unwrap();
        assert_eq!(s.signed_descents(), BTreeSet::from([-1, -4, 3, 6]));
        let id: SignedPermutation = "1,2,3".parse().unwrap();
        assert!(id.signed_descents().is_empty());
        let neg: SignedPermutation = "-1".parse().unwrap();
        assert_eq!(neg.signed_descents(), BTreeSet::from([-1]));
    }

    #[test]
    fn ascents_and_descents_partition() {
        for n in 0..7 {
            for p in all_permutations(n) {
                let d = p.descents();
                let a = p.ascents();
                assert!(d.is_disjoint(&a));
                assert_eq!(d.len() + a.len(), n);
            }
        }
        for n in 0..5 {
            for s in all_signed_permutations(n) {
                let d = s.signed_descents();
                let a = s.signed_ascents();
                assert!(d.is_disjoint(&a));
                assert_eq!(d.len() + a.len(), n);
            }
        }
    }

    #[test]
    fn ai_examples() {
        // S_3: 213 and 321 have 1 as ascent, 2 as descent
        assert_eq!(count_ai(3, 1).unwrap(), 2);
        assert_eq!(closed_ai(3, 1).unwrap(), 2);
        assert_eq!(count_ai(3, 2).unwrap(), 3);
        assert_eq!(closed_ai(3, 2).unwrap(), 3);
        let total: u128 = (1..4).map(|i| closed_ai(4, i).unwrap()).sum();
        let brute: u128 = (1..4).map(|i| count_ai(4, i).unwrap()).sum();
        assert_eq!(total, 26);
        assert_eq!(brute, 26);
        assert!(count_ai(3, 3).is_err());
        assert!(closed_ai(1, 1).is_err());
    }

    #[test]
    fn ai_closed_form_matches_brute_force() {
        for n in 2..=7 {
            for i in 1..n {
                assert_eq!(count_ai(n, i).unwrap(), closed_ai(n, i).unwrap(), "n={n} i={i}");
            }
        }
    }

    #[test]
    fn bi_examples() {
        assert_eq!(closed_bi(2, 1).unwrap(), 3);
        assert_eq!(count_bi(2, 1).unwrap(), 3);
        assert_eq!(count_bi(3, 2).unwrap(), closed_bi(3, 2).unwrap());
        assert_eq!(all_signed_permutations(3).len(), 48);
    }

    #[test]
    fn bi_closed_form_matches_brute_force() {
        for n in 2..=5 {
            for i in 1..n {
                assert_eq!(count_bi(n, i).unwrap(), closed_bi(n, i).unwrap(), "n={n} i={i}");
            }
        }
    }

    #[test]
    fn run_examples() {
        assert_eq!(count_runs_of_size(3, 1).unwrap(), 7);
        let rd = perm("1,2,3").run_decomposition();
        assert_eq!(rd.runs, vec![Run { start: 1, len: 3 }]);
        assert_eq!(rd.count_of_size(1), 0);
        assert_eq!(perm("3,2,1").singleton_runs(), vec![1, 2, 3]);
        assert_eq!(perm("1").singleton_runs(), vec![1]);
    }

    #[test]
    fn runs_cover_all_positions() {
        for n in 1..=6 {
            let total: u128 = (1..=n).map(|r| r as u128 * count_runs_of_size(n, r).unwrap()).sum();
            assert_eq!(total, n as u128 * factorial(n));
        }
    }

    #[test]
    fn aux_stat_examples() {
        let total: usize = all_permutations(3).iter().map(|p| p.aux_stats().positive_displacement).sum();
        assert_eq!(total, 8);
        assert_eq!(perm("3,2,1").aux_stats().double_descents, 1);
        let id = Permutation::identity(5).aux_stats();
        assert_eq!((id.positive_displacement, id.excedances), (0, 0));
    }

    #[test]
    fn foata_worked_cycles() {
        let cycles = vec![vec![6], vec![7, 5, 2, 3], vec![9, 1, 8, 4]];
        let p = Permutation::from_cycles(9, &cycles).unwrap();
        assert_eq!(p.cycles(), cycles);
        assert_eq!(foata(&p.cycles()).word(), &[6, 7, 5, 2, 3, 9, 1, 8, 4]);
        let id = Permutation::identity(4);
        assert_eq!(id.cycles().len(), 4);
        assert_eq!(foata(&id.cycles()), id);
    }

    #[test]
    fn foata_round_trip_and_statistic() {
        for n in 0..=6 {
            let mut images = BTreeSet::new();
            for p in all_permutations(n) {
                let c = p.cycles();
                let w = foata(&c);
                assert_eq!(w.foata_inverse(), c);
                assert_eq!(w.left_to_right_maxima(), c.len());
                images.insert(w);
            }
            assert_eq!(images.len() as u128, factorial(n));
        }
    }

    #[test]
    fn stirling_cycle_numbers() {
        assert_eq!(permutations_with_cycles(4, 2).len(), 11);
        assert_eq!(permutations_with_cycles(5, 1).len(), 24);
    }

    #[test]
    fn double_descents_match_noc_counts() {
        // m!(m-2)/6 for m = 3..=7
        for m in 3..=7usize {
            let total: usize = all_permutations(m).iter().map(|p| p.aux_stats().double_descents).sum();
            assert_eq!(total as u128, factorial(m) * (m as u128 - 2) / 6);
        }
    }

    #[test]
    fn parse_and_display() {
        let p = perm("3,1,2");
        assert_eq!(p.to_string(), "3,1,2");
        assert!("1,1".parse::<Permutation>().is_err());
        assert!("1,x".parse::<Permutation>().is_err());
        let s: SignedPermutation = "-2,1".parse().unwrap();
        assert_eq!(s.to_string(), "-2,1");
        assert!("-2,2".parse::<SignedPermutation>().is_err());
    }
}
