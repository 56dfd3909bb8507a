//! Non-ambiguous trees and their pointed words.
//!
//! A non-ambiguous tree of height `h` and width `w` is a tree-like tableau
//! filling an `(h + 1) × (w + 1)` rectangle. Its word is a permutation of the
//! pointed letters `0..=h` and the unpointed letters `1..=w` that ends with a
//! pointed letter and increases along every pair of neighbours of the same
//! kind.
//!
//! Encoding. For each `(h, w)` the trees are listed by serialized filling and
//! the pairs `(u, v)` of two-coloured words (red letters `1..=h`, blue
//! letters `1..=w`, each used once, same-colour neighbours decreasing, `u`
//! empty or ending red, `v` empty or ending blue) are listed in their derived
//! order; the `i`-th tree goes to the `i`-th pair. A pair becomes the word
//! `v' 0̇ u'`, where red `i` is relabelled pointed `h - i + 1` and blue `i`
//! unpointed `w - i + 1`. Tables are built once per `(h, w)` and cached.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use crate::diagrams::Shape;
use crate::error::BijectionError;
use crate::tableaux::{tree_like_fillings, TreeLikeTableau};

/// Largest `h + w` for which the encoding tables are built.
pub const MAX_NAT_ORDER: usize = 9;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NonAmbiguousTree {
    tlt: TreeLikeTableau,
}

impl NonAmbiguousTree {
    pub fn new(tlt: TreeLikeTableau) -> Result<Self, BijectionError> {
        let shape = tlt.shape();
        if shape.k() == 0 || shape.rows().iter().any(|&l| l != shape.cols()) {
            return Err(BijectionError::Domain("a non-ambiguous tree fills a rectangle".into()));
        }
        Ok(NonAmbiguousTree { tlt })
    }

    /// The single point.
    pub fn trivial() -> Self {
        let tlt = TreeLikeTableau::from_filling(Shape::rectangle(1, 1), "D").expect("one point");
        NonAmbiguousTree { tlt }
    }

    pub fn height(&self) -> usize {
        self.tlt.num_rows() - 1
    }

    pub fn width(&self) -> usize {
        self.tlt.num_cols() - 1
    }

    pub fn tlt(&self) -> &TreeLikeTableau {
        &self.tlt
    }

    pub fn into_tlt(self) -> TreeLikeTableau {
        self.tlt
    }

    pub fn transpose(&self) -> Self {
        NonAmbiguousTree { tlt: self.tlt.transpose() }
    }
}

/// Every non-ambiguous tree of height `h` and width `w`, by filling.
pub fn all_nats(h: usize, w: usize) -> Vec<NonAmbiguousTree> {
    tree_like_fillings(&Shape::rectangle(h + 1, w + 1)).into_iter().map(|tlt| NonAmbiguousTree { tlt }).collect()
}

/// A letter of a pointed word. Serialized as `-i` when pointed (so the
/// pointed `0` is `0`) and as `i` otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Pointed(usize),
    Unpointed(usize),
}

impl Letter {
    pub fn is_pointed(self) -> bool {
        matches!(self, Letter::Pointed(_))
    }

    pub fn value(self) -> usize {
        match self {
            Letter::Pointed(v) | Letter::Unpointed(v) => v,
        }
    }

    pub fn to_i64(self) -> i64 {
        match self {
            Letter::Pointed(v) => -(v as i64),
            Letter::Unpointed(v) => v as i64,
        }
    }

    pub fn from_i64(x: i64) -> Self {
        if x <= 0 {
            Letter::Pointed(x.unsigned_abs() as usize)
        } else {
            Letter::Unpointed(x as usize)
        }
    }
}

/// Space-separated serialization of a letter sequence.
pub fn format_letters(letters: &[Letter]) -> String {
    letters.iter().map(|l| l.to_i64().to_string()).collect::<Vec<_>>().join(" ")
}

pub fn parse_letters(s: &str) -> Result<Vec<Letter>, BijectionError> {
    s.split_whitespace()
        .map(|t| t.parse::<i64>().map(Letter::from_i64).map_err(|_| BijectionError::MalformedWord(s.to_string())))
        .collect()
}

/// Maximal blocks of letters of the same kind.
pub fn maximal_runs(letters: &[Letter]) -> Vec<&[Letter]> {
    letters.chunk_by(|a, b| a.is_pointed() == b.is_pointed()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PointedWord {
    letters: Vec<Letter>,
}

impl PointedWord {
    pub fn new(letters: Vec<Letter>) -> Result<Self, BijectionError> {
        let bad = |why: &str| Err(BijectionError::MalformedWord(format!("{}: {why}", format_letters(&letters))));
        let mut pointed: Vec<usize> = letters.iter().filter(|l| l.is_pointed()).map(|l| l.value()).collect();
        let mut plain: Vec<usize> = letters.iter().filter(|l| !l.is_pointed()).map(|l| l.value()).collect();
        pointed.sort_unstable();
        plain.sort_unstable();
        if !pointed.iter().copied().eq(0..pointed.len()) || !plain.iter().copied().eq(1..=plain.len()) {
            return bad("letters are not 0..=h pointed and 1..=w unpointed");
        }
        if !letters.last().is_some_and(|l| l.is_pointed()) {
            return bad("last letter is not pointed");
        }
        if letters.windows(2).any(|p| p[0].is_pointed() == p[1].is_pointed() && p[0].value() > p[1].value()) {
            return bad("neighbours of the same kind decrease");
        }
        Ok(PointedWord { letters })
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn height(&self) -> usize {
        self.letters.iter().filter(|l| l.is_pointed()).count() - 1
    }

    pub fn width(&self) -> usize {
        self.letters.iter().filter(|l| !l.is_pointed()).count()
    }
}

impl fmt::Display for PointedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_letters(&self.letters))
    }
}

impl FromStr for PointedWord {
    type Err = BijectionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PointedWord::new(parse_letters(s)?)
    }
}

/// Every valid pointed word over `0..=h` pointed and `1..=w` unpointed.
pub fn all_words(h: usize, w: usize) -> Vec<PointedWord> {
    fn extend(
        prefix: &mut Vec<Letter>,
        pointed: &mut Vec<bool>,
        plain: &mut Vec<bool>,
        left: usize,
        out: &mut Vec<PointedWord>,
    ) {
        if left == 0 {
            if prefix.last().is_some_and(|l| l.is_pointed()) {
                out.push(PointedWord { letters: prefix.clone() });
            }
            return;
        }
        let last = prefix.last().copied();
        let fits = |cand: Letter| match last {
            Some(l) if l.is_pointed() == cand.is_pointed() => l.value() < cand.value(),
            _ => true,
        };
        for v in 0..pointed.len() {
            if !pointed[v] && fits(Letter::Pointed(v)) {
                pointed[v] = true;
                prefix.push(Letter::Pointed(v));
                extend(prefix, pointed, plain, left - 1, out);
                prefix.pop();
                pointed[v] = false;
            }
        }
        for v in 1..plain.len() {
            if !plain[v] && fits(Letter::Unpointed(v)) {
                plain[v] = true;
                prefix.push(Letter::Unpointed(v));
                extend(prefix, pointed, plain, left - 1, out);
                prefix.pop();
                plain[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), &mut vec![false; h + 1], &mut vec![false; w + 1], h + w + 1, &mut out);
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Colored {
    Red(usize),
    Blue(usize),
}

/// The pair of two-coloured words behind a pointed word.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UvPair {
    pub u: Vec<Colored>,
    pub v: Vec<Colored>,
}

impl UvPair {
    pub fn from_word(word: &PointedWord) -> UvPair {
        let (h, w) = (word.height(), word.width());
        let color = |l: &Letter| match *l {
            Letter::Pointed(i) => Colored::Red(h - i + 1),
            Letter::Unpointed(i) => Colored::Blue(w - i + 1),
        };
        let zero = word.letters.iter().position(|&l| l == Letter::Pointed(0)).expect("pointed 0 is present");
        UvPair { v: word.letters[..zero].iter().map(color).collect(), u: word.letters[zero + 1..].iter().map(color).collect() }
    }

    pub fn to_word(&self, h: usize, w: usize) -> Result<PointedWord, BijectionError> {
        let letter = |c: &Colored| match *c {
            Colored::Red(i) if (1..=h).contains(&i) => Ok(Letter::Pointed(h + 1 - i)),
            Colored::Blue(i) if (1..=w).contains(&i) => Ok(Letter::Unpointed(w + 1 - i)),
            _ => Err(BijectionError::MalformedWord(format!("{c:?} out of range"))),
        };
        let mut letters = self.v.iter().map(letter).collect::<Result<Vec<_>, _>>()?;
        letters.push(Letter::Pointed(0));
        for c in &self.u {
            letters.push(letter(c)?);
        }
        PointedWord::new(letters)
    }
}

struct NatTable {
    nats: Vec<NonAmbiguousTree>,
    pairs: Vec<UvPair>,
    nat_rank: HashMap<NonAmbiguousTree, usize>,
    pair_rank: HashMap<UvPair, usize>,
}

type Cache<K, V> = OnceLock<Mutex<HashMap<K, Arc<V>>>>;

fn nat_table(h: usize, w: usize) -> Result<Arc<NatTable>, BijectionError> {
    if h + w > MAX_NAT_ORDER {
        return Err(BijectionError::Domain(format!("h + w = {} exceeds {MAX_NAT_ORDER}", h + w)));
    }
    static TABLES: Cache<(usize, usize), NatTable> = OnceLock::new();
    let mut tables = TABLES.get_or_init(Default::default).lock().unwrap_or_else(|e| e.into_inner());
    if let Some(t) = tables.get(&(h, w)) {
        return Ok(t.clone());
    }
    let nats = all_nats(h, w);
    let mut pairs: Vec<UvPair> = all_words(h, w).iter().map(UvPair::from_word).collect();
    pairs.sort();
    if nats.len() != pairs.len() {
        return Err(BijectionError::Domain(format!(
            "{} trees but {} words for h = {h}, w = {w}",
            nats.len(),
            pairs.len()
        )));
    }
    let nat_rank = nats.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
    let pair_rank = pairs.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let table = Arc::new(NatTable { nats, pairs, nat_rank, pair_rank });
    tables.insert((h, w), table.clone());
    Ok(table)
}

pub fn nat_to_uv(nat: &NonAmbiguousTree) -> Result<UvPair, BijectionError> {
    let table = nat_table(nat.height(), nat.width())?;
    let rank = table.nat_rank.get(nat).ok_or_else(|| BijectionError::Domain("invalid non-ambiguous tree".into()))?;
    Ok(table.pairs[*rank].clone())
}

pub fn uv_to_nat(pair: &UvPair, h: usize, w: usize) -> Result<NonAmbiguousTree, BijectionError> {
    let table = nat_table(h, w)?;
    let rank = table.pair_rank.get(pair).ok_or_else(|| BijectionError::MalformedWord(format!("{pair:?}")))?;
    Ok(table.nats[*rank].clone())
}

pub fn nat_to_word(nat: &NonAmbiguousTree) -> Result<PointedWord, BijectionError> {
    nat_to_uv(nat)?.to_word(nat.height(), nat.width())
}

pub fn word_to_nat(word: &PointedWord) -> Result<NonAmbiguousTree, BijectionError> {
    uv_to_nat(&UvPair::from_word(word), word.height(), word.width())
}

/// Swaps the blocks after the pointed 0 pairwise when that 0 is followed by
/// an unpointed letter; otherwise returns the word unchanged. The result of
/// a swap ends with an unpointed letter, which is how the inverse tells the
/// two cases apart.
pub fn word_star(m: &PointedWord) -> Vec<Letter> {
    let zero = m.letters.iter().position(|&l| l == Letter::Pointed(0)).expect("pointed 0 is present");
    let rest = &m.letters[zero + 1..];
    if rest.first().is_none_or(|l| l.is_pointed()) {
        return m.letters.clone();
    }
    let mut out = m.letters[..=zero].to_vec();
    for pair in maximal_runs(rest).chunks(2) {
        out.extend_from_slice(pair[1]);
        out.extend_from_slice(pair[0]);
    }
    out
}

pub fn word_star_inv(letters: &[Letter]) -> Result<PointedWord, BijectionError> {
    if letters.last().is_some_and(|l| l.is_pointed()) {
        let m = PointedWord::new(letters.to_vec())?;
        return if word_star(&m) == letters {
            Ok(m)
        } else {
            Err(BijectionError::MalformedWord(format!("{} is not in the image", format_letters(letters))))
        };
    }
    let zero = letters
        .iter()
        .position(|&l| l == Letter::Pointed(0))
        .ok_or_else(|| BijectionError::MalformedWord(format_letters(letters)))?;
    let runs = maximal_runs(&letters[zero + 1..]);
    if !runs.len().is_multiple_of(2) || !runs[0][0].is_pointed() {
        return Err(BijectionError::MalformedWord(format!("{} is not in the image", format_letters(letters))));
    }
    let mut out = letters[..=zero].to_vec();
    for pair in runs.chunks(2) {
        out.extend_from_slice(pair[1]);
        out.extend_from_slice(pair[0]);
    }
    let m = PointedWord::new(out)?;
    if word_star(&m) != letters {
        return Err(BijectionError::MalformedWord(format!("{} is not in the image", format_letters(letters))));
    }
    Ok(m)
}
