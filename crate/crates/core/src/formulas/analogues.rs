//! Weighted analogues: `w(T) = a^top b^left` on tree-like tableaux and
//! `x^{left*}` on symmetric ones, as products and as enumerated sums.

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::FormulaError;
use crate::tableaux::{symmetric_tree_like_tableaux, tree_like_tableaux, GenOptions, NocClass, TreeLikeTableau};

use super::closed::{binomial, pow2};
use super::poly::{BivarPoly, TrivarPoly, UnivarPoly};

/// `(a+b)(a+b+1)...(a+b+n-2)`, and 1 for `n <= 1`.
pub fn t_ab(n: usize) -> BivarPoly {
    let s = &BivarPoly::a() + &BivarPoly::b();
    BivarPoly::product((0..n.saturating_sub(1)).map(|i| &s + &BivarPoly::constant(i as i64)))
}

fn half_size(size: usize) -> Result<usize, FormulaError> {
    if size.is_multiple_of(2) {
        return Err(FormulaError::OutOfRange(format!("symmetric size must be odd, got {size}")));
    }
    Ok(size / 2)
}

/// `2^n (x+1)...(x+n-1)` for the size `2n + 1`.
pub fn tsym_x(two_n_plus_1: usize) -> Result<UnivarPoly, FormulaError> {
    let n = half_size(two_n_plus_1)?;
    let prod = UnivarPoly::product((1..n).map(|i| UnivarPoly::from_coeffs(&[i as i64, 1])));
    Ok(prod.scale(&pow2(n)))
}

/// `(1+z)^n (x+y)(x+y+1)...(x+y+n-2)` for the size `2n + 1`.
pub fn tsym_xyz(two_n_plus_1: usize) -> Result<TrivarPoly, FormulaError> {
    let n = half_size(two_n_plus_1)?;
    let s = &TrivarPoly::var(0) + &TrivarPoly::var(1);
    let prod = TrivarPoly::product((0..n.saturating_sub(1)).map(|i| &s + &TrivarPoly::constant(i as i64)));
    let one_z = &TrivarPoly::one() + &TrivarPoly::var(2);
    Ok(&one_z.pow(n as u32) * &prod)
}

/// The table `A(m, k)` for `1 <= m <= n`, built from `A(1, 1) = 1` by
/// `A(m+1, k) = (a-1+k) A(m, k) + (b+m+1-k) A(m, k-1)`. Row `m` has
/// entries for `k = 0..=m`, with `A(m, 0) = 0`.
pub fn eulerian_table(n: usize) -> Vec<Vec<BivarPoly>> {
    let mut table = vec![vec![BivarPoly::zero()], vec![BivarPoly::zero(), BivarPoly::one()]];
    for m in 1..n {
        let prev = &table[m];
        let get = |k: usize| prev.get(k).cloned().unwrap_or_default();
        let row = (0..=m + 1)
            .map(|k| {
                if k == 0 {
                    return BivarPoly::zero();
                }
                let c1 = &BivarPoly::a() + &BivarPoly::constant(k as i64 - 1);
                let c2 = &BivarPoly::b() + &BivarPoly::constant(m as i64 + 1 - k as i64);
                &(&c1 * &get(k)) + &(&c2 * &get(k - 1))
            })
            .collect();
        table.push(row);
    }
    table.truncate(n.max(1) + 1);
    table
}

/// `A(n, k)` for `1 <= k <= n`.
pub fn eulerian_ab(n: usize, k: usize) -> Result<BivarPoly, FormulaError> {
    if n == 0 || k == 0 || k > n {
        return Err(FormulaError::OutOfRange(format!("A(n, k) needs 1 <= k <= n, got n = {n}, k = {k}")));
    }
    Ok(eulerian_table(n)[n][k].clone())
}

/// Coefficients of `A_n(t) = Σ_k A(n, k) t^k`, indexed by `k`.
pub fn eulerian_poly(n: usize) -> Result<Vec<BivarPoly>, FormulaError> {
    if n == 0 {
        return Err(FormulaError::OutOfRange("A_n(t) needs n >= 1".into()));
    }
    Ok(eulerian_table(n).swap_remove(n))
}

/// `A_n(1)` and `A_n'(1)`.
pub fn eulerian_at_one(n: usize) -> Result<(BivarPoly, BivarPoly), FormulaError> {
    let coeffs = eulerian_poly(n)?;
    let value = coeffs.iter().cloned().sum();
    let derivative = coeffs.iter().enumerate().map(|(k, c)| c.scale(&BigInt::from(k))).sum();
    Ok((value, derivative))
}

/// `A_n'(1)` in closed form: `(a + bn + C(n,2) - 1) T_{n-1}(a, b)`.
pub fn eulerian_derivative_closed(n: usize) -> BivarPoly {
    let lin = &(&BivarPoly::a() + &BivarPoly::b().scale(&BigInt::from(n))) + &BivarPoly::constant(binomial(n, 2) - 1);
    &lin * &t_ab(n - 1)
}

/// Both identities on `A_n(1)` and `A_n'(1)`, for `n >= 2`.
pub fn lemma_checks(n: usize) -> Result<bool, FormulaError> {
    if n < 2 {
        return Err(FormulaError::OutOfRange(format!("the identities need n >= 2, got {n}")));
    }
    let (value, derivative) = eulerian_at_one(n)?;
    Ok(value == t_ab(n) && derivative == eulerian_derivative_closed(n))
}

pub fn weight(t: &TreeLikeTableau) -> BivarPoly {
    let w = t.weight_stats();
    BivarPoly::monomial([w.top as u32, w.left as u32], 1)
}

/// Sums of `w(T)` over the tree-like tableaux of one size, weighted by
/// the corner statistics and by the classes of non-occupied corners.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightedSums {
    /// `Σ w(T)`.
    pub total: BivarPoly,
    /// `Σ c(T) w(T)`.
    pub corners: BivarPoly,
    pub occupied: BivarPoly,
    pub noc: BivarPoly,
    pub noc_parts: NocPartition,
    /// `Σ w(T)` split by number of rows, indexed by that number.
    pub by_rows: Vec<BivarPoly>,
}

/// Weighted sums over the four classes of non-occupied corners.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NocPartition {
    pub ab: BivarPoly,
    pub a1: BivarPoly,
    pub one_b: BivarPoly,
    pub one_one: BivarPoly,
}

impl WeightedSums {
    fn of(t: &TreeLikeTableau) -> WeightedSums {
        let w = weight(t);
        let mut out = WeightedSums { total: w.clone(), ..Default::default() };
        out.by_rows = vec![BivarPoly::zero(); t.num_rows() + 1];
        out.by_rows[t.num_rows()] = w.clone();
        for r in t.corner_records() {
            out.corners = &out.corners + &w;
            if r.occupied {
                out.occupied = &out.occupied + &w;
                continue;
            }
            out.noc = &out.noc + &w;
            let slot = match r.noc_class {
                NocClass::AB => &mut out.noc_parts.ab,
                NocClass::A1 => &mut out.noc_parts.a1,
                NocClass::OneB => &mut out.noc_parts.one_b,
                NocClass::OneOne | NocClass::NotApplicable => &mut out.noc_parts.one_one,
            };
            *slot = &*slot + &w;
        }
        out
    }

    fn merge(mut self, o: WeightedSums) -> WeightedSums {
        self.total = &self.total + &o.total;
        self.corners = &self.corners + &o.corners;
        self.occupied = &self.occupied + &o.occupied;
        self.noc = &self.noc + &o.noc;
        self.noc_parts.ab = &self.noc_parts.ab + &o.noc_parts.ab;
        self.noc_parts.a1 = &self.noc_parts.a1 + &o.noc_parts.a1;
        self.noc_parts.one_b = &self.noc_parts.one_b + &o.noc_parts.one_b;
        self.noc_parts.one_one = &self.noc_parts.one_one + &o.noc_parts.one_one;
        if self.by_rows.len() < o.by_rows.len() {
            self.by_rows.resize(o.by_rows.len(), BivarPoly::zero());
        }
        for (k, p) in o.by_rows.into_iter().enumerate() {
            self.by_rows[k] = &self.by_rows[k] + &p;
        }
        self
    }
}

/// One pass over the tree-like tableaux of size `n`.
pub fn weighted_sums(n: usize, opts: &GenOptions) -> Result<WeightedSums, FormulaError> {
    let tlts = tree_like_tableaux(n, opts)?;
    Ok(if opts.parallel {
        tlts.par_iter().map(WeightedSums::of).reduce(WeightedSums::default, WeightedSums::merge)
    } else {
        tlts.iter().map(WeightedSums::of).fold(WeightedSums::default(), WeightedSums::merge)
    })
}

/// The class sums by enumeration, for `n >= 3`.
pub fn noc_partition_sums(n: usize, opts: &GenOptions) -> Result<NocPartition, FormulaError> {
    if n < 3 {
        return Err(FormulaError::OutOfRange(format!("class sums need n >= 3, got {n}")));
    }
    Ok(weighted_sums(n, opts)?.noc_parts)
}

/// Closed forms of the first three class sums: `(n-2) ab T_{n-2}`,
/// `C(n-2,2) a T_{n-2}` and `C(n-2,2) b T_{n-2}`.
pub fn noc_partition_closed(n: usize) -> Result<(BivarPoly, BivarPoly, BivarPoly), FormulaError> {
    if n < 3 {
        return Err(FormulaError::OutOfRange(format!("class sums need n >= 3, got {n}")));
    }
    let t = t_ab(n - 2);
    let ab = &BivarPoly::monomial([1, 1], n as i64 - 2) * &t;
    let c = binomial(n - 2, 2);
    let a1 = &BivarPoly::a().scale(&c) * &t;
    let one_b = &BivarPoly::b().scale(&c) * &t;
    Ok((ab, a1, one_b))
}

/// Sums over the symmetric tree-like tableaux of size `2n + 1`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymmetricSums {
    /// `Σ x^{left*}`.
    pub total: UnivarPoly,
    pub occupied: UnivarPoly,
    /// `Σ noc(T) x^{left*}`.
    pub noc: UnivarPoly,
    /// `Σ x^{left*} z^{diag}`, with `y` absent.
    pub xz: TrivarPoly,
    /// `Σ x^{left*} y^{top-1} z^{diag}`.
    pub xyz: TrivarPoly,
}

impl SymmetricSums {
    fn of(t: &TreeLikeTableau) -> Result<SymmetricSums, FormulaError> {
        let s = t.symmetric_stats()?;
        let (l, top, d) = (s.left_star as u32, s.top_star as u32, s.diag as u32);
        let x = UnivarPoly::monomial([l], 1);
        let records = t.corner_records();
        let occ = records.iter().filter(|r| r.occupied).count() as i64;
        let noc = records.len() as i64 - occ;
        Ok(SymmetricSums {
            total: x.clone(),
            occupied: x.scale(&BigInt::from(occ)),
            noc: x.scale(&BigInt::from(noc)),
            xz: TrivarPoly::monomial([l, 0, d], 1),
            xyz: TrivarPoly::monomial([l, top, d], 1),
        })
    }

    fn merge(self, o: SymmetricSums) -> SymmetricSums {
        SymmetricSums {
            total: &self.total + &o.total,
            occupied: &self.occupied + &o.occupied,
            noc: &self.noc + &o.noc,
            xz: &self.xz + &o.xz,
            xyz: &self.xyz + &o.xyz,
        }
    }
}

/// One pass over the symmetric tree-like tableaux of size `2n + 1`,
/// `n >= 1` (the single root has `left* = -1`).
pub fn symmetric_sums(n: usize, opts: &GenOptions) -> Result<SymmetricSums, FormulaError> {
    if n == 0 {
        return Err(FormulaError::OutOfRange("symmetric sums need n >= 1".into()));
    }
    let tlts = symmetric_tree_like_tableaux(n, opts)?;
    let parts: Vec<SymmetricSums> = if opts.parallel {
        tlts.par_iter().map(SymmetricSums::of).collect::<Result<_, _>>()?
    } else {
        tlts.iter().map(SymmetricSums::of).collect::<Result<_, _>>()?
    };
    Ok(parts.into_iter().fold(SymmetricSums::default(), SymmetricSums::merge))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products() {
        assert_eq!(t_ab(1), BivarPoly::one());
        assert_eq!(t_ab(0), BivarPoly::one());
        assert_eq!(t_ab(3).to_string(), "a^2 + 2*a*b + b^2 + a + b");
        assert_eq!(tsym_x(1).unwrap(), UnivarPoly::one());
        assert_eq!(tsym_x(3).unwrap(), UnivarPoly::constant(2));
        assert_eq!(tsym_x(7).unwrap(), UnivarPoly::from_coeffs(&[16, 24, 8]));
        assert!(tsym_x(4).is_err());
        assert_eq!(tsym_xyz(3).unwrap().to_string(), "z + 1");
    }

    #[test]
    fn eulerian_values() {
        assert_eq!(eulerian_poly(1).unwrap(), vec![BivarPoly::zero(), BivarPoly::one()]);
        let one = |p: BivarPoly| p.eval_ones();
        assert_eq!(one(eulerian_ab(4, 2).unwrap()), BigInt::from(11));
        let (_, d2) = eulerian_at_one(2).unwrap();
        assert_eq!(d2, &BivarPoly::a() + &BivarPoly::b().scale(&BigInt::from(2)));
        assert!(eulerian_ab(3, 4).is_err());
        assert!(eulerian_ab(3, 0).is_err());
    }

    /// The (x,z) projection holds; the full (x,y,z) product does not, since
    /// top and left coincide on symmetric tableaux.
    #[test]
    fn symmetric_sums_against_products() {
        let opts = GenOptions::default();
        for n in 1..=4 {
            let s = symmetric_sums(n, &opts).unwrap();
            let full = tsym_xyz(2 * n + 1).unwrap();
            assert_eq!(full.specialize(1, &BigInt::from(1)), s.xz, "n = {n}");
            assert_eq!(s.total, tsym_x(2 * n + 1).unwrap(), "n = {n}");
            if n >= 2 {
                assert_ne!(full, s.xyz, "n = {n}");
            }
        }
    }

    #[test]
    fn lemma_small() {
        for n in 2..=9 {
            assert!(lemma_checks(n).unwrap(), "n = {n}");
        }
        assert!(lemma_checks(1).is_err());
    }

    #[test]
    fn class_sums_small() {
        let opts = GenOptions::default();
        let parts = noc_partition_sums(3, &opts).unwrap();
        assert_eq!(parts.ab, BivarPoly::monomial([1, 1], 1));
        let parts = noc_partition_sums(4, &opts).unwrap();
        assert_eq!(parts.a1, &BivarPoly::a() * &(&BivarPoly::a() + &BivarPoly::b()));
        assert!(noc_partition_sums(2, &opts).is_err());
    }

    #[test]
    fn rows_match_eulerian() {
        for n in 1..=5 {
            let ws = weighted_sums(n, &GenOptions::default()).unwrap();
            let table = eulerian_poly(n).unwrap();
            for (k, expected) in table.iter().enumerate().skip(1) {
                assert_eq!(&ws.by_rows.get(k).cloned().unwrap_or_default(), expected, "n = {n}, k = {k}");
            }
        }
    }
}
