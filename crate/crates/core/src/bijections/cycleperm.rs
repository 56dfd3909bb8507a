//! Tree-like tableaux of size `n` with `k` points on an axis and
//! permutations of `n` with `k` cycles.
//!
//! Within each class the tableaux are taken in generation order and the
//! permutations in lexicographic order, and the `i`-th of one goes to the
//! `i`-th of the other. Tables are built once per `(n, axis)` and cached.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::diagrams::Cell;
use crate::error::{BijectionError, TableauError};
use crate::permstats::{all_permutations, Permutation};
use crate::tableaux::{tree_like_tableaux, GenOptions, TreeLikeTableau};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axis {
    FirstColumn,
    FirstRow,
}

/// Points in the first column or first row, root included.
pub fn axis_count(t: &TreeLikeTableau, axis: Axis) -> usize {
    match axis {
        Axis::FirstColumn => (1..=t.num_rows()).filter(|&i| t.get(Cell::new(i, 1))).count(),
        Axis::FirstRow => (1..=t.num_cols()).filter(|&j| t.get(Cell::new(1, j))).count(),
    }
}

struct CycleTable {
    forward: HashMap<TreeLikeTableau, Permutation>,
    backward: HashMap<Permutation, TreeLikeTableau>,
}

type Cache<K, V> = OnceLock<Mutex<HashMap<K, Arc<V>>>>;

fn table(n: usize, axis: Axis) -> Result<Arc<CycleTable>, BijectionError> {
    static TABLES: Cache<(usize, Axis), CycleTable> = OnceLock::new();
    let mut tables = TABLES.get_or_init(Default::default).lock().unwrap_or_else(|e| e.into_inner());
    if let Some(t) = tables.get(&(n, axis)) {
        return Ok(t.clone());
    }
    let mut tlts: Vec<Vec<TreeLikeTableau>> = vec![Vec::new(); n + 1];
    for t in tree_like_tableaux(n, &GenOptions::default())? {
        let k = axis_count(&t, axis);
        tlts[k].push(t);
    }
    let mut perms: Vec<Vec<Permutation>> = vec![Vec::new(); n + 1];
    for p in all_permutations(n) {
        let k = p.num_cycles();
        perms[k].push(p);
    }
    let mut forward = HashMap::new();
    let mut backward = HashMap::new();
    for (k, (ts, ps)) in tlts.into_iter().zip(perms).enumerate() {
        if ts.len() != ps.len() {
            return Err(BijectionError::Domain(format!(
                "{} tableaux but {} permutations with {k} cycles",
                ts.len(),
                ps.len()
            )));
        }
        for (t, p) in ts.into_iter().zip(ps) {
            backward.insert(p.clone(), t.clone());
            forward.insert(t, p);
        }
    }
    let table = Arc::new(CycleTable { forward, backward });
    tables.insert((n, axis), table.clone());
    Ok(table)
}

pub fn tlt_to_cycleperm(t: &TreeLikeTableau, axis: Axis) -> Result<Permutation, BijectionError> {
    let table = table(t.size(), axis)?;
    table.forward.get(t).cloned().ok_or_else(|| match t.validate() {
        Err(v) => TableauError::Invalid(v).into(),
        Ok(()) => BijectionError::Domain("tableau missing from the enumeration".into()),
    })
}

pub fn cycleperm_to_tlt(p: &Permutation, axis: Axis) -> Result<TreeLikeTableau, BijectionError> {
    let table = table(p.len(), axis)?;
    table.backward.get(p).cloned().ok_or_else(|| BijectionError::Domain(format!("no tableau for {p}")))
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;
    use crate::diagrams::Shape;

    #[test]
    fn size_one() {
        let t = TreeLikeTableau::from_filling(Shape::rectangle(1, 1), "D").unwrap();
        assert_eq!(tlt_to_cycleperm(&t, Axis::FirstColumn).unwrap().to_string(), "1");
    }

    #[test]
    fn two_cycles_in_size_four() {
        let opts = GenOptions::default();
        let tlts = tree_like_tableaux(4, &opts).unwrap();
        assert_eq!(tlts.iter().filter(|t| axis_count(t, Axis::FirstColumn) == 2).count(), 11);
        assert_eq!(all_permutations(4).iter().filter(|p| p.num_cycles() == 2).count(), 11);
    }

    #[test]
    fn injective_and_statistic_preserving() {
        for axis in [Axis::FirstColumn, Axis::FirstRow] {
            let mut seen = HashSet::new();
            for t in tree_like_tableaux(5, &GenOptions::default()).unwrap() {
                let p = tlt_to_cycleperm(&t, axis).unwrap();
                assert_eq!(p.num_cycles(), axis_count(&t, axis));
                assert_eq!(cycleperm_to_tlt(&p, axis).unwrap(), t);
                assert!(seen.insert(p));
            }
            assert_eq!(seen.len(), 120);
        }
    }
}
