//! Corners of tree-like tableaux and runs of size 1 in permutations.
//!
//! A triplet `(T_l, T_r, nat)` becomes a permutation of `n = n_l + n_r + 1`
//! whose entry `n_l + 1` forms a run of size 1. The cycles of the
//! permutation attached to `T_l` (first-row points) are indexed by the
//! pointed letters and those attached to `T_r` (first-column points) by the
//! unpointed ones, so the word is read from the transposed tree, whose
//! height is the number of cycles on the left.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::diagrams::Cell;
use crate::error::BijectionError;
use crate::permstats::{all_permutations, split_at_records, Permutation};
use crate::tableaux::{tree_like_tableaux, GenOptions, TreeLikeTableau};

use super::cut::{corner_cut, corner_glue, CornerTriplet};
use super::cycleperm::{cycleperm_to_tlt, tlt_to_cycleperm, Axis};
use super::nat::{nat_to_word, word_star, word_star_inv, word_to_nat, Letter, PointedWord};

/// The data a run of size 1 decomposes into: the permutations below and
/// above the run value, and the pointed word that interleaves their cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunParts {
    pub left: Permutation,
    pub right: Permutation,
    pub word: PointedWord,
}

/// Substitutes `n_l + 1` for the pointed 0, the `i`-th cycle of `left` for
/// the pointed `i` and the `i`-th cycle of `right`, shifted by `n_l + 1`, for
/// the unpointed `i`, after swapping the blocks of the word when needed.
/// Returns the permutation and the 1-based position of the run.
pub fn assemble_run(parts: &RunParts) -> Result<(Permutation, usize), BijectionError> {
    let v = parts.left.len() + 1;
    let lc = parts.left.cycles();
    let rc: Vec<Vec<usize>> = parts.right.cycles().into_iter().map(|c| c.iter().map(|x| x + v).collect()).collect();
    if (parts.word.height(), parts.word.width()) != (lc.len(), rc.len()) {
        return Err(BijectionError::Triplet(format!(
            "word has {} pointed and {} unpointed letters for {} and {} cycles",
            parts.word.height(),
            parts.word.width(),
            lc.len(),
            rc.len()
        )));
    }
    let mut word = Vec::with_capacity(v + parts.right.len());
    for letter in word_star(&parts.word) {
        match letter {
            Letter::Pointed(0) => word.push(v),
            Letter::Pointed(i) => word.extend_from_slice(&lc[i - 1]),
            Letter::Unpointed(i) => word.extend_from_slice(&rc[i - 1]),
        }
    }
    let k = word.iter().position(|&x| x == v).expect("run value present") + 1;
    let pi = Permutation::new(word)?;
    if !pi.singleton_runs().contains(&k) {
        return Err(BijectionError::NotASingletonRun(k));
    }
    Ok((pi, k))
}

/// Inverse of [`assemble_run`]: every maximal stretch of values on one side
/// of the run value is cut before its left-to-right maxima into cycles.
pub fn split_run(pi: &Permutation, k: usize) -> Result<RunParts, BijectionError> {
    if !pi.singleton_runs().contains(&k) {
        return Err(BijectionError::NotASingletonRun(k));
    }
    let w = pi.word();
    let v = w[k - 1];
    // `None` marks the run value itself
    let mut pieces: Vec<Option<(bool, Vec<usize>)>> = Vec::new();
    let cut = |segment: &[usize], pieces: &mut Vec<_>| {
        for stretch in segment.chunk_by(|a, b| (*a < v) == (*b < v)) {
            let below = stretch[0] < v;
            pieces.extend(split_at_records(stretch).into_iter().map(|c| Some((below, c))));
        }
    };
    cut(&w[..k - 1], &mut pieces);
    pieces.push(None);
    cut(&w[k..], &mut pieces);

    let side = |below: bool| -> Vec<&Vec<usize>> {
        let mut cs: Vec<&Vec<usize>> = pieces.iter().flatten().filter(|(b, _)| *b == below).map(|(_, c)| c).collect();
        cs.sort_by_key(|c| c[0]);
        cs
    };
    let (lc, rc) = (side(true), side(false));
    let index = |cs: &[&Vec<usize>], max: usize| cs.iter().position(|c| c[0] == max).expect("cycle present") + 1;
    let letters: Vec<Letter> = pieces
        .iter()
        .map(|p| match p {
            None => Letter::Pointed(0),
            Some((true, c)) => Letter::Pointed(index(&lc, c[0])),
            Some((false, c)) => Letter::Unpointed(index(&rc, c[0])),
        })
        .collect();
    let lcycles: Vec<Vec<usize>> = lc.iter().map(|c| c.to_vec()).collect();
    let rcycles: Vec<Vec<usize>> = rc.iter().map(|c| c.iter().map(|x| x - v).collect()).collect();
    Ok(RunParts {
        left: Permutation::from_cycles(v - 1, &lcycles)?,
        right: Permutation::from_cycles(w.len() - v, &rcycles)?,
        word: word_star_inv(&letters)?,
    })
}

pub fn triplet_to_run(triplet: &CornerTriplet) -> Result<(Permutation, usize), BijectionError> {
    let perm = |t: Option<&TreeLikeTableau>, axis| match t {
        Some(t) => tlt_to_cycleperm(t, axis),
        None => Ok(Permutation::identity(0)),
    };
    let parts = RunParts {
        left: perm(triplet.left(), Axis::FirstRow)?,
        right: perm(triplet.right(), Axis::FirstColumn)?,
        word: nat_to_word(&triplet.nat().transpose())?,
    };
    assemble_run(&parts)
}

pub fn run_to_triplet(pi: &Permutation, k: usize) -> Result<CornerTriplet, BijectionError> {
    let parts = split_run(pi, k)?;
    let tlt = |p: &Permutation, axis| (!p.is_empty()).then(|| cycleperm_to_tlt(p, axis)).transpose();
    CornerTriplet::new(
        tlt(&parts.left, Axis::FirstRow)?,
        tlt(&parts.right, Axis::FirstColumn)?,
        word_to_nat(&parts.word)?.transpose(),
    )
}

/// One corner and the run of size 1 it is sent to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CornerRun {
    pub tableau: TreeLikeTableau,
    pub corner: Cell,
    pub permutation: Permutation,
    /// 1-based position of the run.
    pub position: usize,
}

pub fn corner_to_run(t: &TreeLikeTableau, corner: Cell) -> Result<(Permutation, usize), BijectionError> {
    triplet_to_run(&corner_cut(t, corner)?)
}

pub fn run_to_corner(pi: &Permutation, k: usize) -> Result<(TreeLikeTableau, Cell), BijectionError> {
    corner_glue(&run_to_triplet(pi, k)?)
}

/// Every corner of every tree-like tableau of size `n` with its image, in
/// tableau generation order and then corner order.
pub fn corners_to_runs(n: usize, opts: &GenOptions) -> Result<Vec<CornerRun>, BijectionError> {
    let tlts = tree_like_tableaux(n, opts)?;
    let per_tableau = |t: &TreeLikeTableau| -> Result<Vec<CornerRun>, BijectionError> {
        t.shape()
            .corners()
            .into_iter()
            .map(|corner| {
                let (permutation, position) = corner_to_run(t, corner)?;
                Ok(CornerRun { tableau: t.clone(), corner, permutation, position })
            })
            .collect()
    };
    let chunks: Vec<Vec<CornerRun>> = if opts.parallel {
        tlts.par_iter().map(per_tableau).collect::<Result<_, _>>()?
    } else {
        tlts.iter().map(per_tableau).collect::<Result<_, _>>()?
    };
    Ok(chunks.into_iter().flatten().collect())
}

/// All pairs `(π, k)` with a run of size 1 at position `k`.
pub fn singleton_run_pairs(n: usize) -> Vec<(Permutation, usize)> {
    all_permutations(n).into_iter().flat_map(|p| p.singleton_runs().into_iter().map(move |k| (p.clone(), k))).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CornersRunsReport {
    pub corners: usize,
    pub runs: usize,
    pub injective: bool,
    pub onto: bool,
    pub inverse_ok: bool,
    /// First corner whose image collides with another one or whose inverse
    /// fails, serialized as a tableau filling and a cell.
    pub counterexample: Option<String>,
}

impl CornersRunsReport {
    pub fn passed(&self) -> bool {
        self.injective && self.onto && self.inverse_ok && self.corners == self.runs
    }
}

pub fn verify_corners_runs(n: usize, opts: &GenOptions) -> Result<CornersRunsReport, BijectionError> {
    let images = corners_to_runs(n, opts)?;
    let expected: HashSet<(Permutation, usize)> = singleton_run_pairs(n).into_iter().collect();
    let mut seen = HashSet::new();
    let mut counterexample = None;
    let mut inverse_ok = true;
    for cr in &images {
        let key = (cr.permutation.clone(), cr.position);
        let back = run_to_corner(&cr.permutation, cr.position);
        let fresh = seen.insert(key);
        let inverts = back.as_ref().is_ok_and(|(t, c)| *t == cr.tableau && *c == cr.corner);
        inverse_ok &= inverts;
        if (!fresh || !inverts) && counterexample.is_none() {
            counterexample = Some(format!("{} {}", cr.tableau.filling_string(), cr.corner));
        }
    }
    Ok(CornersRunsReport {
        corners: images.len(),
        runs: expected.len(),
        injective: seen.len() == images.len(),
        onto: seen == expected,
        inverse_ok,
        counterexample,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        Permutation::new(s.split_whitespace().map(|x| x.parse().unwrap()).collect()).unwrap()
    }

    fn cycles(n: usize, cs: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, &cs.iter().map(|c| c.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn first_worked_example() {
        let parts = RunParts {
            left: cycles(9, &[&[6], &[7, 5, 2, 3], &[9, 1, 8, 4]]),
            right: cycles(9, &[&[4, 2, 3], &[5], &[7, 1, 6], &[9, 8]]),
            word: "2 3 -2 -3 1 4 0 -1".parse().unwrap(),
        };
        let (pi, k) = assemble_run(&parts).unwrap();
        assert_eq!(pi, perm("15 17 11 16 7 5 2 3 9 1 8 4 14 12 13 19 18 10 6"));
        assert_eq!((k, pi.at(k)), (18, 10));
        assert_eq!(split_run(&pi, k).unwrap(), parts);
    }

    #[test]
    fn swapped_worked_example() {
        let parts = RunParts {
            left: cycles(9, &[&[6], &[7, 5, 2, 3], &[9, 1, 8, 4]]),
            right: cycles(9, &[&[4, 2, 3], &[5], &[7, 1, 6], &[9, 8]]),
            word: "-1 4 0 1 2 -2 3 -3".parse().unwrap(),
        };
        let (pi, k) = assemble_run(&parts).unwrap();
        assert_eq!(pi, perm("6 19 18 10 7 5 2 3 14 12 13 15 9 1 8 4 17 11 16"));
        assert_eq!(k, 4);
        assert_eq!(split_run(&pi, k).unwrap(), parts);
    }

    #[test]
    fn inverse_worked_example() {
        let parts = split_run(&perm("4 2 6 11 9 12 8 3 7 1 5 10"), 7).unwrap();
        assert_eq!(parts.left, cycles(7, &[&[3], &[4, 2], &[6], &[7, 1, 5]]));
        assert_eq!(parts.right, cycles(4, &[&[2], &[3, 1], &[4]]));
        assert_eq!(parts.word.to_string(), "-2 -3 2 3 0 1 -1 -4");
    }

    #[test]
    fn size_one() {
        let t = TreeLikeTableau::from_filling(crate::diagrams::Shape::rectangle(1, 1), "D").unwrap();
        assert_eq!(corner_to_run(&t, Cell::new(1, 1)).unwrap(), (perm("1"), 1));
    }

    #[test]
    fn three_has_seven() {
        let report = verify_corners_runs(3, &GenOptions::default()).unwrap();
        assert_eq!((report.corners, report.runs), (7, 7));
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn bijective_up_to_five() {
        for n in 1..=5 {
            let report = verify_corners_runs(n, &GenOptions::default()).unwrap();
            assert!(report.passed(), "n = {n}: {report:?}");
        }
    }
}
