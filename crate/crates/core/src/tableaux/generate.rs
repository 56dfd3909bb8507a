//! Exhaustive generation by row-major backtracking with early pruning.
//!
//! Every rule of every family only looks at cells above or to the left of
//! the cell being filled, so a partial filling can be rejected as soon as a
//! cell is placed. Symmetric families are generated on the lower half of the
//! diagram (cells `(i, j)` with `j <= i`) and mirrored.

use rayon::prelude::*;

use crate::diagrams::{enumerate_shapes, Shape, ShapeConstraint, ShiftedShape};
use crate::error::TableauError;

use super::{
    AlternativeTableau, Family, PermutationTableau, Symbol, Tableau, TreeLikeTableau, TypeBPermutationTableau,
};

/// Largest parameters accepted by the generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    /// Maximal diagram length for permutation, alternative and tree-like
    /// tableaux.
    pub type_a_length: usize,
    /// Maximal `n` for type B permutation tableaux and symmetric alternative
    /// tableaux of length `2n`.
    pub type_b: usize,
    /// Maximal size of symmetric tree-like tableaux.
    pub sym_tlt_size: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { type_a_length: 9, type_b: 7, sym_tlt_size: 11 }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GenOptions {
    pub bounds: Bounds,
    /// Spread shapes over the rayon thread pool. The output order does not
    /// depend on this flag.
    pub parallel: bool,
}

impl GenOptions {
    pub fn parallel() -> Self {
        GenOptions { parallel: true, ..Default::default() }
    }

    fn check(&self, family: Family, n: usize) -> Result<(), TableauError> {
        let (value, limit) = match family {
            Family::Pt | Family::At | Family::Tlt => (family.length(n), self.bounds.type_a_length),
            Family::Ptb | Family::AtSym => (n, self.bounds.type_b),
            Family::TltSym => (2 * n + 1, self.bounds.sym_tlt_size),
        };
        if value > limit {
            return Err(TableauError::BoundExceeded { family: family.name(), n, limit });
        }
        Ok(())
    }
}

/// Every tableau of the family with parameter `n`, ordered by shape
/// (number of rows, then row lengths) and then by serialized filling.
pub fn generate_all(family: Family, n: usize, opts: &GenOptions) -> Result<Vec<Tableau>, TableauError> {
    Ok(match family {
        Family::Pt => permutation_tableaux(n, opts)?.into_iter().map(Tableau::Pt).collect(),
        Family::At => alternative_tableaux(n, opts)?.into_iter().map(Tableau::At).collect(),
        Family::Tlt => tree_like_tableaux(n, opts)?.into_iter().map(Tableau::Tlt).collect(),
        Family::Ptb => type_b_permutation_tableaux(n, opts)?.into_iter().map(Tableau::Ptb).collect(),
        Family::AtSym => symmetric_alternative_tableaux(n, opts)?.into_iter().map(Tableau::AtSym).collect(),
        Family::TltSym => symmetric_tree_like_tableaux(n, opts)?.into_iter().map(Tableau::TltSym).collect(),
    })
}

fn per_shape<S, T, F>(shapes: Vec<S>, parallel: bool, f: F) -> Vec<T>
where
    S: Sync,
    T: Send,
    F: Fn(&S) -> Vec<T> + Sync + Send,
{
    if parallel {
        shapes.par_iter().map(&f).collect::<Vec<_>>().into_iter().flatten().collect()
    } else {
        shapes.iter().flat_map(f).collect()
    }
}

/// Permutation tableaux of length `n`.
pub fn permutation_tableaux(n: usize, opts: &GenOptions) -> Result<Vec<PermutationTableau>, TableauError> {
    opts.check(Family::Pt, n)?;
    let shapes = enumerate_shapes(n, ShapeConstraint::NoEmptyColumns);
    Ok(per_shape(shapes, opts.parallel, |shape| {
        let diag = vec![vec![false; shape.cols()]; shape.k()];
        zero_one_fillings(shape.rows(), &diag)
            .into_iter()
            .map(|rows| PermutationTableau::new_unchecked(shape.clone(), rows))
            .collect()
    }))
}

/// Type B permutation tableaux of length `n`.
pub fn type_b_permutation_tableaux(n: usize, opts: &GenOptions) -> Result<Vec<TypeBPermutationTableau>, TableauError> {
    opts.check(Family::Ptb, n)?;
    let shapes: Vec<ShiftedShape> =
        enumerate_shapes(n, ShapeConstraint::Unconstrained).into_iter().map(ShiftedShape::new).collect();
    Ok(per_shape(shapes, opts.parallel, |shape| {
        let lens = shape.row_lengths();
        let diag: Vec<Vec<bool>> = lens
            .iter()
            .enumerate()
            .map(|(i, &l)| (0..l).map(|j| i == j && i < shape.staircase_rows()).collect())
            .collect();
        zero_one_fillings(&lens, &diag)
            .into_iter()
            .map(|rows| TypeBPermutationTableau::new_unchecked(shape.clone(), rows))
            .collect()
    }))
}

/// Alternative tableaux of length `n`.
pub fn alternative_tableaux(n: usize, opts: &GenOptions) -> Result<Vec<AlternativeTableau>, TableauError> {
    opts.check(Family::At, n)?;
    let shapes = enumerate_shapes(n, ShapeConstraint::Unconstrained);
    Ok(per_shape(shapes, opts.parallel, |shape| {
        let mut search = ArrowSearch::new(shape);
        search.run(0, 0, false);
        search.out.into_iter().map(|rows| AlternativeTableau::new_unchecked(shape.clone(), rows)).collect()
    }))
}

/// Tree-like tableaux of size `n`.
pub fn tree_like_tableaux(n: usize, opts: &GenOptions) -> Result<Vec<TreeLikeTableau>, TableauError> {
    opts.check(Family::Tlt, n)?;
    if n == 0 {
        return Ok(Vec::new());
    }
    let shapes = enumerate_shapes(n + 1, ShapeConstraint::NoEmptyRowsOrColumns);
    Ok(per_shape(shapes, opts.parallel, |shape| {
        let mut search = PointSearch::new(shape);
        search.run(0, 0, false);
        search.out.into_iter().map(|rows| TreeLikeTableau::new_unchecked(shape.clone(), rows)).collect()
    }))
}

/// Tree-like fillings of one fixed diagram, ordered by serialized filling.
pub fn tree_like_fillings(shape: &Shape) -> Vec<TreeLikeTableau> {
    if shape.num_cells() == 0 {
        return Vec::new();
    }
    let mut search = PointSearch::new(shape);
    search.run(0, 0, false);
    let mut out: Vec<TreeLikeTableau> =
        search.out.into_iter().map(|rows| TreeLikeTableau::new_unchecked(shape.clone(), rows)).collect();
    out.sort_by_cached_key(TreeLikeTableau::filling_string);
    out
}

/// Self-conjugate diagrams of length `2n`, in canonical shape order.
fn symmetric_shapes(n: usize, constraint: ShapeConstraint) -> Vec<Shape> {
    let mut shapes: Vec<Shape> = enumerate_shapes(n, ShapeConstraint::Unconstrained)
        .into_iter()
        .map(|base| ShiftedShape::new(base).symmetric_closure())
        .filter(|s| constraint != ShapeConstraint::NoEmptyRowsOrColumns || !s.has_empty_row())
        .collect();
    shapes.sort_by(|a, b| (a.k(), a.rows()).cmp(&(b.k(), b.rows())));
    shapes
}

/// Symmetric alternative tableaux of length `2n`.
pub fn symmetric_alternative_tableaux(
    n: usize,
    opts: &GenOptions,
) -> Result<Vec<AlternativeTableau>, TableauError> {
    opts.check(Family::AtSym, n)?;
    let shapes = symmetric_shapes(n, ShapeConstraint::Unconstrained);
    Ok(per_shape(shapes, opts.parallel, |shape| {
        let mut search = SymArrowSearch::new(shape);
        search.run(0, 0, false);
        let mut out: Vec<AlternativeTableau> = search
            .out
            .into_iter()
            .map(|lower| {
                let rows = mirror(shape, &lower, Symbol::reflect);
                AlternativeTableau::new_unchecked(shape.clone(), rows)
            })
            .collect();
        out.sort_by_cached_key(AlternativeTableau::filling_string);
        out
    }))
}

/// Symmetric tree-like tableaux of size `2n + 1`.
pub fn symmetric_tree_like_tableaux(n: usize, opts: &GenOptions) -> Result<Vec<TreeLikeTableau>, TableauError> {
    opts.check(Family::TltSym, n)?;
    let shapes = symmetric_shapes(n + 1, ShapeConstraint::NoEmptyRowsOrColumns);
    Ok(per_shape(shapes, opts.parallel, |shape| {
        let mut search = SymPointSearch::new(shape);
        search.run(0, 0, false);
        let mut out: Vec<TreeLikeTableau> = search
            .out
            .into_iter()
            .map(|lower| TreeLikeTableau::new_unchecked(shape.clone(), mirror(shape, &lower, |b| b)))
            .collect();
        out.sort_by_cached_key(TreeLikeTableau::filling_string);
        out
    }))
}

/// Lower-half row lengths of a self-conjugate shape (0-based row `i` keeps
/// columns `0..=i`).
fn lower_lens(shape: &Shape) -> Vec<usize> {
    shape.rows().iter().enumerate().map(|(i, &l)| l.min(i + 1)).collect()
}

fn mirror<T: Copy>(shape: &Shape, lower: &[Vec<T>], reflect: impl Fn(T) -> T) -> Vec<Vec<T>> {
    shape
        .rows()
        .iter()
        .enumerate()
        .map(|(i, &l)| (0..l).map(|j| if j <= i { lower[i][j] } else { reflect(lower[j][i]) }).collect())
        .collect()
}

fn column_bottoms(lens: &[usize]) -> Vec<usize> {
    let width = lens.iter().copied().max().unwrap_or(0);
    (0..width).map(|j| lens.iter().rposition(|&l| l > j).unwrap_or(0)).collect()
}

/// 0/1 fillings obeying the permutation tableau rules; `diag[i][j]` marks
/// cells where a 0 may not have a 1 on its left.
fn zero_one_fillings(lens: &[usize], diag: &[Vec<bool>]) -> Vec<Vec<Vec<bool>>> {
    struct Search<'a> {
        lens: &'a [usize],
        diag: &'a [Vec<bool>],
        bottoms: Vec<usize>,
        grid: Vec<Vec<bool>>,
        col_ones: Vec<u32>,
        out: Vec<Vec<Vec<bool>>>,
    }

    impl Search<'_> {
        fn run(&mut self, i: usize, j: usize, row_one: bool) {
            if i == self.lens.len() {
                self.out.push(self.grid.clone());
                return;
            }
            if j == self.lens[i] {
                return self.run(i + 1, 0, false);
            }
            let col_one = self.col_ones[j] > 0;
            // a 0
            if !(row_one && (col_one || self.diag[i][j])) && !(self.bottoms[j] == i && !col_one) {
                self.grid[i][j] = false;
                self.run(i, j + 1, row_one);
            }
            self.grid[i][j] = true;
            self.col_ones[j] += 1;
            self.run(i, j + 1, true);
            self.col_ones[j] -= 1;
            self.grid[i][j] = false;
        }
    }

    let width = lens.iter().copied().max().unwrap_or(0);
    let mut s = Search {
        lens,
        diag,
        bottoms: column_bottoms(lens),
        grid: lens.iter().map(|&l| vec![false; l]).collect(),
        col_ones: vec![0; width],
        out: Vec::new(),
    };
    s.run(0, 0, false);
    s.out
}

struct ArrowSearch {
    lens: Vec<usize>,
    grid: Vec<Vec<Symbol>>,
    col_used: Vec<u32>,
    out: Vec<Vec<Vec<Symbol>>>,
}

impl ArrowSearch {
    fn new(shape: &Shape) -> Self {
        ArrowSearch {
            lens: shape.rows().to_vec(),
            grid: shape.rows().iter().map(|&l| vec![Symbol::Empty; l]).collect(),
            col_used: vec![0; shape.cols()],
            out: Vec::new(),
        }
    }

    fn run(&mut self, i: usize, j: usize, row_used: bool) {
        if i == self.lens.len() {
            self.out.push(self.grid.clone());
            return;
        }
        if j == self.lens[i] {
            return self.run(i + 1, 0, false);
        }
        self.run(i, j + 1, row_used);
        for s in [Symbol::Left, Symbol::Up] {
            let allowed = match s {
                Symbol::Left => !row_used,
                _ => self.col_used[j] == 0,
            };
            if allowed {
                self.grid[i][j] = s;
                self.col_used[j] += 1;
                self.run(i, j + 1, true);
                self.col_used[j] -= 1;
                self.grid[i][j] = Symbol::Empty;
            }
        }
    }
}

struct PointSearch {
    lens: Vec<usize>,
    bottoms: Vec<usize>,
    grid: Vec<Vec<bool>>,
    col_dots: Vec<u32>,
    out: Vec<Vec<Vec<bool>>>,
}

impl PointSearch {
    fn new(shape: &Shape) -> Self {
        PointSearch {
            lens: shape.rows().to_vec(),
            bottoms: column_bottoms(shape.rows()),
            grid: shape.rows().iter().map(|&l| vec![false; l]).collect(),
            col_dots: vec![0; shape.cols()],
            out: Vec::new(),
        }
    }

    fn run(&mut self, i: usize, j: usize, row_dot: bool) {
        if i == self.lens.len() {
            self.out.push(self.grid.clone());
            return;
        }
        if j == self.lens[i] {
            if row_dot {
                self.run(i + 1, 0, false);
            }
            return;
        }
        let col_dot = self.col_dots[j] > 0;
        let root = i == 0 && j == 0;
        if !root && !(self.bottoms[j] == i && !col_dot) {
            self.run(i, j + 1, row_dot);
        }
        if root || col_dot != row_dot {
            self.grid[i][j] = true;
            self.col_dots[j] += 1;
            self.run(i, j + 1, true);
            self.col_dots[j] -= 1;
            self.grid[i][j] = false;
        }
    }
}

/// Lower-half search for symmetric alternative tableaux. The diagonal stays
/// empty. An up arrow at `(i, j)` points at lower cells of column `j` and,
/// through the mirror, at the lower cells of row `j`.
struct SymArrowSearch {
    lens: Vec<usize>,
    grid: Vec<Vec<Symbol>>,
    col_used: Vec<u32>,
    row_used: Vec<bool>,
    out: Vec<Vec<Vec<Symbol>>>,
}

impl SymArrowSearch {
    fn new(shape: &Shape) -> Self {
        let lens = lower_lens(shape);
        SymArrowSearch {
            grid: lens.iter().map(|&l| vec![Symbol::Empty; l]).collect(),
            col_used: vec![0; shape.cols()],
            row_used: vec![false; shape.k()],
            lens,
            out: Vec::new(),
        }
    }

    fn run(&mut self, i: usize, j: usize, row_used: bool) {
        if i == self.lens.len() {
            self.out.push(self.grid.clone());
            return;
        }
        if j == self.lens[i] {
            self.row_used[i] = row_used;
            return self.run(i + 1, 0, false);
        }
        self.run(i, j + 1, row_used);
        if i == j {
            return;
        }
        for s in [Symbol::Left, Symbol::Up] {
            let allowed = match s {
                Symbol::Left => !row_used,
                _ => self.col_used[j] == 0 && !self.row_used[j],
            };
            if allowed {
                self.grid[i][j] = s;
                self.col_used[j] += 1;
                self.run(i, j + 1, true);
                self.col_used[j] -= 1;
                self.grid[i][j] = Symbol::Empty;
            }
        }
    }
}

/// Lower-half search for symmetric tree-like tableaux. A point at `(i, j)`
/// has a point above it if column `j` has one in the lower half or row `j`
/// has one left of the diagonal. Non-root diagonal cells stay empty since
/// their two parents would mirror each other.
struct SymPointSearch {
    lens: Vec<usize>,
    grid: Vec<Vec<bool>>,
    col_dots: Vec<u32>,
    row_dot: Vec<bool>,
    out: Vec<Vec<Vec<bool>>>,
}

impl SymPointSearch {
    fn new(shape: &Shape) -> Self {
        let lens = lower_lens(shape);
        SymPointSearch {
            grid: lens.iter().map(|&l| vec![false; l]).collect(),
            col_dots: vec![0; shape.cols()],
            row_dot: vec![false; shape.k()],
            lens,
            out: Vec::new(),
        }
    }

    fn run(&mut self, i: usize, j: usize, row_dot: bool) {
        if i == self.lens.len() {
            // row i of the full tableau is lower row i plus lower column i
            if (0..self.lens.len()).all(|r| self.row_dot[r] || self.col_dots.get(r).is_some_and(|&c| c > 0)) {
                self.out.push(self.grid.clone());
            }
            return;
        }
        if j == self.lens[i] {
            self.row_dot[i] = row_dot;
            return self.run(i + 1, 0, false);
        }
        if i == 0 && j == 0 {
            self.grid[0][0] = true;
            self.col_dots[0] += 1;
            self.run(0, 1, false);
            self.col_dots[0] -= 1;
            self.grid[0][0] = false;
            return;
        }
        self.run(i, j + 1, row_dot);
        if i == j {
            return;
        }
        let above = self.col_dots[j] > 0 || self.row_dot[j];
        if above != row_dot {
            self.grid[i][j] = true;
            self.col_dots[j] += 1;
            self.run(i, j + 1, true);
            self.col_dots[j] -= 1;
            self.grid[i][j] = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factorial(n: usize) -> usize {
        (1..=n).product()
    }

    #[test]
    fn type_a_cardinalities() {
        let opts = GenOptions::default();
        for n in 0..=7 {
            assert_eq!(permutation_tableaux(n, &opts).unwrap().len(), factorial(n), "pt {n}");
            assert_eq!(alternative_tableaux(n, &opts).unwrap().len(), factorial(n + 1), "at {n}");
        }
        for n in 1..=7 {
            assert_eq!(tree_like_tableaux(n, &opts).unwrap().len(), factorial(n), "tlt {n}");
        }
        assert_eq!(tree_like_tableaux(3, &opts).unwrap().len(), 6);
    }

    #[test]
    fn type_b_cardinalities() {
        let opts = GenOptions::default();
        for n in 0..=5 {
            let expected = (1 << n) * factorial(n);
            assert_eq!(type_b_permutation_tableaux(n, &opts).unwrap().len(), expected, "ptb {n}");
            assert_eq!(symmetric_alternative_tableaux(n, &opts).unwrap().len(), expected, "atsym {n}");
            assert_eq!(symmetric_tree_like_tableaux(n, &opts).unwrap().len(), expected, "tltsym {n}");
        }
        assert_eq!(type_b_permutation_tableaux(1, &opts).unwrap().len(), 2);
        assert_eq!(symmetric_tree_like_tableaux(1, &opts).unwrap().len(), 2);
    }

    #[test]
    fn generated_tableaux_validate() {
        let opts = GenOptions::default();
        for n in 0..=5 {
            for t in permutation_tableaux(n, &opts).unwrap() {
                assert_eq!(t.validate(), Ok(()));
            }
            for t in alternative_tableaux(n, &opts).unwrap() {
                assert_eq!(t.validate(), Ok(()));
            }
            for t in type_b_permutation_tableaux(n, &opts).unwrap() {
                assert_eq!(t.validate(), Ok(()));
            }
            for t in symmetric_alternative_tableaux(n, &opts).unwrap() {
                assert_eq!(t.validate(), Ok(()));
                assert!(t.is_symmetric());
            }
            for t in tree_like_tableaux(n + 1, &opts).unwrap() {
                assert_eq!(t.validate(), Ok(()));
                assert_eq!(t.size() + 1, t.shape().n());
            }
            for t in symmetric_tree_like_tableaux(n, &opts).unwrap() {
                assert_eq!(t.validate(), Ok(()));
                assert!(t.is_symmetric());
                assert_eq!(t.size(), 2 * n + 1);
            }
        }
    }

    #[test]
    fn canonical_order_is_strict() {
        let opts = GenOptions::default();
        for family in Family::ALL {
            let all = generate_all(family, 4, &opts).unwrap();
            let keys: Vec<_> = all
                .iter()
                .map(|t| {
                    let s = t.shape_record();
                    (s.rows.len(), s.rows, t.filling_string())
                })
                .collect();
            assert!(keys.windows(2).all(|w| w[0] < w[1]), "{family}");
        }
    }

    #[test]
    fn parallel_matches_sequential() {
        for family in Family::ALL {
            let seq = generate_all(family, 4, &GenOptions::default()).unwrap();
            let par = generate_all(family, 4, &GenOptions::parallel()).unwrap();
            assert_eq!(seq, par, "{family}");
        }
    }

    #[test]
    fn bounds_are_enforced() {
        let opts = GenOptions::default();
        assert!(matches!(
            permutation_tableaux(10, &opts),
            Err(TableauError::BoundExceeded { family: "pt", n: 10, limit: 9 })
        ));
        assert!(tree_like_tableaux(9, &opts).is_err());
        assert!(type_b_permutation_tableaux(8, &opts).is_err());
        assert!(symmetric_tree_like_tableaux(6, &opts).is_err());
        let wide = GenOptions { bounds: Bounds { type_a_length: 2, ..Bounds::default() }, parallel: false };
        assert!(permutation_tableaux(3, &wide).is_err());
        assert_eq!(permutation_tableaux(2, &wide).unwrap().len(), 2);
    }
}
