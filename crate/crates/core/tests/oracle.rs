//! Brute-force oracle: every shape, every filling, filtered by the defining
//! rules written out here from scratch, against the library's generators
//! and closed forms.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use tableau_corners::formulas::{closed_corner_count, closed_noc, closed_occupied};
use tableau_corners::tableaux::{generate_all, Family, GenOptions};

/// Weakly decreasing `k`-tuples with entries in `0..=width`.
fn shapes(k: usize, width: usize) -> Vec<Vec<usize>> {
    fn go(k: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == k {
            out.push(prefix.clone());
            return;
        }
        for v in 0..=max {
            prefix.push(v);
            go(k, v, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(k, width, &mut Vec::new(), &mut out);
    out
}

/// All fillings of `rows` over `alphabet`, as grids.
fn fillings(rows: &[usize], alphabet: &[char]) -> Vec<Vec<Vec<char>>> {
    let cells: usize = rows.iter().sum();
    let mut out = Vec::new();
    let total = alphabet.len().pow(cells as u32);
    for mut code in 0..total {
        let grid = rows
            .iter()
            .map(|&len| {
                (0..len)
                    .map(|_| {
                        let c = alphabet[code % alphabet.len()];
                        code /= alphabet.len();
                        c
                    })
                    .collect()
            })
            .collect();
        out.push(grid);
    }
    out
}

fn column(grid: &[Vec<char>], j: usize) -> Vec<char> {
    grid.iter().filter(|r| r.len() > j).map(|r| r[j]).collect()
}

fn permutation_ok(grid: &[Vec<char>], cols: usize) -> bool {
    let every_column = (0..cols).all(|j| column(grid, j).contains(&'1'));
    let le = grid.iter().enumerate().all(|(i, row)| {
        row.iter().enumerate().all(|(j, &c)| {
            let left = row[..j].contains(&'1');
            let above = (0..i).any(|r| grid[r][j] == '1');
            c == '1' || !(left && above)
        })
    });
    every_column && le
}

fn alternative_ok(grid: &[Vec<char>]) -> bool {
    grid.iter().enumerate().all(|(i, row)| {
        row.iter().enumerate().all(|(j, &c)| match c {
            'L' => row[..j].iter().all(|&x| x == '.'),
            'U' => (0..i).all(|r| grid[r][j] == '.'),
            _ => true,
        })
    })
}

fn tree_like_ok(grid: &[Vec<char>], cols: usize) -> bool {
    if grid.is_empty() || grid[0].first() != Some(&'D') {
        return false;
    }
    let rows_ok = grid.iter().all(|r| r.contains(&'D'));
    let cols_ok = (0..cols).all(|j| column(grid, j).contains(&'D'));
    let parents = grid.iter().enumerate().all(|(i, row)| {
        row.iter().enumerate().all(|(j, &c)| {
            if c != 'D' || (i, j) == (0, 0) {
                return true;
            }
            let left = row[..j].contains(&'D');
            let above = (0..i).any(|r| grid[r][j] == 'D');
            left != above
        })
    });
    rows_ok && cols_ok && parents
}

/// The last cell of each row that is longer than the row below it.
fn corners(rows: &[usize]) -> Vec<(usize, usize)> {
    (0..rows.len()).filter(|&i| rows[i] > 0 && rows.get(i + 1).copied().unwrap_or(0) < rows[i]).map(|i| (i, rows[i] - 1)).collect()
}

type Record = (Vec<usize>, String);

struct Brute {
    tableaux: BTreeSet<Record>,
    corners: usize,
    occupied: usize,
}

fn brute(family: Family, n: usize) -> Brute {
    let length = family.length(n);
    let mut tableaux = BTreeSet::new();
    let (mut corner_total, mut occupied) = (0, 0);
    for k in 0..=length {
        let width = length - k;
        for rows in shapes(k, width) {
            let alphabet: &[char] = match family {
                Family::Pt => &['0', '1'],
                Family::At => &['.', 'L', 'U'],
                _ => &['.', 'D'],
            };
            if family == Family::Tlt && (rows.contains(&0) || rows.first() != Some(&width)) {
                continue;
            }
            if family == Family::Pt && rows.first().copied().unwrap_or(0) != width {
                continue;
            }
            for grid in fillings(&rows, alphabet) {
                let ok = match family {
                    Family::Pt => permutation_ok(&grid, width),
                    Family::At => alternative_ok(&grid),
                    _ => tree_like_ok(&grid, width),
                };
                if !ok {
                    continue;
                }
                for (i, j) in corners(&rows) {
                    corner_total += 1;
                    if !matches!(grid[i][j], '.' | '0') {
                        occupied += 1;
                    }
                }
                let filling: String = grid.iter().flatten().collect();
                tableaux.insert((rows.clone(), filling));
            }
        }
    }
    Brute { tableaux, corners: corner_total, occupied }
}

fn library(family: Family, n: usize) -> BTreeSet<Record> {
    generate_all(family, n, &GenOptions::default())
        .unwrap()
        .iter()
        .map(|t| {
            let r = t.to_record();
            (r.shape.rows, r.filling)
        })
        .collect()
}

#[test]
fn generators_match_the_definitions() {
    for (family, max) in [(Family::Pt, 5), (Family::At, 4), (Family::Tlt, 5)] {
        for n in 1..=max {
            let b = brute(family, n);
            assert_eq!(b.tableaux, library(family, n), "{family} n={n}");
        }
    }
}

#[test]
fn closed_forms_match_brute_force() {
    for (family, max) in [(Family::Pt, 5), (Family::At, 4), (Family::Tlt, 5)] {
        for n in 1..=max {
            let b = brute(family, n);
            assert_eq!(closed_corner_count(family, n).unwrap(), BigInt::from(b.corners), "{family} n={n}");
            if family == Family::Tlt {
                assert_eq!(closed_occupied(family, n).unwrap(), BigInt::from(b.occupied), "occupied n={n}");
                assert_eq!(closed_noc(family, n).unwrap(), BigInt::from(b.corners - b.occupied), "noc n={n}");
            }
        }
    }
}

#[test]
fn family_sizes() {
    let fact = |n: usize| (1..=n).product::<usize>();
    for n in 1..=5 {
        assert_eq!(brute(Family::Pt, n).tableaux.len(), fact(n));
        assert_eq!(brute(Family::Tlt, n).tableaux.len(), fact(n));
    }
    for n in 0..=4 {
        assert_eq!(brute(Family::At, n).tableaux.len(), fact(n + 1));
    }
}
