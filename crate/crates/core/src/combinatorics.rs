//! Subsets, permutations, cycle types, two-row tableaux and tabloids.
//!
//! Everything here is 1-based: the population is `[n] = {1, ..., n}`.
//! Subsets are stored as bitmasks, so the degree is capped at
//! [`MAX_DEGREE`]. The canonical order on `l`-subsets is lexicographic on
//! the sorted element lists; [`Subset::lex_rank`] is the position of a
//! subset in [`enumerate_subsets`] and is the indexing contract for
//! [`ModuleVector`](crate::algebra::ModuleVector).

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};

/// Largest supported population size.
pub const MAX_DEGREE: usize = 63;

/// Default bound on `n` for anything that walks all of `S_n`.
pub const DEFAULT_PERMUTATION_CEILING: usize = 9;

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    if n <= MAX_DEGREE {
        return binomial_table()[n][k];
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

fn binomial_table() -> &'static [[u64; MAX_DEGREE + 1]; MAX_DEGREE + 1] {
    static TABLE: OnceLock<[[u64; MAX_DEGREE + 1]; MAX_DEGREE + 1]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = [[0u64; MAX_DEGREE + 1]; MAX_DEGREE + 1];
        for n in 0..=MAX_DEGREE {
            t[n][0] = 1;
            for k in 1..=n {
                t[n][k] = t[n - 1][k - 1] + if k < n { t[n - 1][k] } else { 0 };
            }
        }
        t
    })
}

fn check_degree(n: usize) -> Result<()> {
    if n == 0 || n > MAX_DEGREE {
        return Err(Error::domain(format!(
            "population size must lie in 1..={MAX_DEGREE}, got {n}"
        )));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Subset
// ---------------------------------------------------------------------------

/// A subset of `[n]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Subset {
    n: u8,
    mask: u64,
}

impl Subset {
    /// Builds a subset from arbitrary-order, 1-based elements.
    pub fn new(n: usize, elements: &[usize]) -> Result<Self> {
        check_degree(n)?;
        let mut mask = 0u64;
        for &e in elements {
            if e == 0 || e > n {
                return Err(Error::domain(format!("element {e} is not in [1..{n}]")));
            }
            let bit = 1u64 << (e - 1);
            if mask & bit != 0 {
                return Err(Error::domain(format!("element {e} repeated")));
            }
            mask |= bit;
        }
        Ok(Subset { n: n as u8, mask })
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, &[])
    }

    /// Caller guarantees `mask` only has bits below `n`.
    pub(crate) fn from_mask(n: usize, mask: u64) -> Self {
        debug_assert!(n <= MAX_DEGREE && mask >> n == 0);
        Subset { n: n as u8, mask }
    }

    /// Parses the text form `"1,4,7"`; `""` and `"{}"` denote the empty set.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() || text == "{}" {
            return Self::empty(n);
        }
        let elements = text
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::domain(format!("bad subset element {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, &elements)
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains(&self, e: usize) -> bool {
        e >= 1 && e <= self.n() && self.mask & (1 << (e - 1)) != 0
    }

    /// Elements in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let mut rest = self.mask;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let tz = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(tz + 1)
            }
        })
    }

    pub fn elements(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn complement(&self) -> Subset {
        let all = (1u64 << self.n) - 1;
        Subset::from_mask(self.n(), all & !self.mask)
    }

    pub fn union(&self, other: &Subset) -> Subset {
        debug_assert_eq!(self.n, other.n);
        Subset::from_mask(self.n(), self.mask | other.mask)
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.mask & !other.mask == 0
    }

    pub fn is_disjoint(&self, other: &Subset) -> bool {
        self.mask & other.mask == 0
    }

    /// All `k`-element subsets of `self`, in canonical order.
    pub fn subsets_of_size(&self, k: usize) -> Vec<Subset> {
        let elems = self.elements();
        combinations(&elems, k)
            .into_iter()
            .map(|c| {
                let mask = c.iter().fold(0u64, |m, &e| m | 1 << (e - 1));
                Subset::from_mask(self.n(), mask)
            })
            .collect()
    }

    /// Position of this subset in `enumerate_subsets(n, self.len())`.
    pub fn lex_rank(&self) -> usize {
        let n = self.n();
        let l = self.len();
        let mut rank = 0u64;
        let mut prev = 0usize;
        for (i, c) in self.iter().enumerate() {
            for v in prev + 1..c {
                rank += binomial(n - v, l - i - 1);
            }
            prev = c;
        }
        rank as usize
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("{}");
        }
        let mut first = true;
        for e in self.iter() {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}/{}", self.elements().iter().map(|e| e.to_string()).collect::<Vec<_>>().join(","), self.n)
    }
}

/// `k`-combinations of `items` in lexicographic order of positions.
fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let len = items.len();
    if k > len {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(binomial(len, k) as usize);
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        // advance the rightmost index that can still move
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + len - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// All `l`-subsets of `[n]` in canonical (lexicographic) order.
pub fn enumerate_subsets(n: usize, l: usize) -> Result<Vec<Subset>> {
    check_degree(n)?;
    if l > n {
        return Err(Error::domain(format!("subset size {l} exceeds n = {n}")));
    }
    Ok(Subset::from_mask(n, (1 << n) - 1).subsets_of_size(l))
}

/// `{x(j) : j in s}`.
pub fn apply_perm_to_subset(x: &Permutation, s: &Subset) -> Result<Subset> {
    if x.degree() != s.n() {
        return Err(Error::domain(format!(
            "permutation of degree {} applied to a subset of [{}]",
            x.degree(),
            s.n()
        )));
    }
    Ok(x.apply_to_subset(s))
}

// ---------------------------------------------------------------------------
// Permutation
// ---------------------------------------------------------------------------

/// A bijection of `[n]`. Composition follows `(xy)(a) = x(y(a))`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    // 0-based images
    images: Vec<u8>,
}

impl Permutation {
    /// Builds `x` from its 1-based images `[x(1), ..., x(n)]`.
    pub fn new(images: &[usize]) -> Result<Self> {
        let n = images.len();
        check_degree(n)?;
        let mut seen = vec![false; n];
        for &v in images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::domain(format!(
                    "{images:?} is not a rearrangement of 1..={n}"
                )));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|&v| (v - 1) as u8).collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_DEGREE);
        Permutation {
            images: (0..n as u8).collect(),
        }
    }

    /// The transposition swapping `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        Self::from_cycles(n, &[&[a, b]])
    }

    /// Product of disjoint cycles, e.g. `from_cycles(5, &[&[1, 2, 3]])`
    /// maps 1→2→3→1.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        check_degree(n)?;
        let mut images: Vec<usize> = (1..=n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a == 0 || a > n || touched[a - 1] {
                    return Err(Error::domain(format!("bad cycle {cycle:?} on [{n}]")));
                }
                touched[a - 1] = true;
                images[a - 1] = cycle[(k + 1) % cycle.len()];
            }
        }
        Self::new(&images)
    }

    /// Uniformly random permutation.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let mut p = Self::identity(n);
        p.images.shuffle(rng);
        p
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `x(a)` for 1-based `a`.
    pub fn apply(&self, a: usize) -> usize {
        self.images[a - 1] as usize + 1
    }

    /// 1-based images.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize + 1).collect()
    }

    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: other.images.iter().map(|&v| self.images[v as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.degree()];
        for (a, &v) in self.images.iter().enumerate() {
            inv[v as usize] = a as u8;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(a, &v)| a == v as usize)
    }

    pub fn fixed_points(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|(a, &v)| *a == v as usize)
            .count()
    }

    /// Image of a subset; panics on degree mismatch.
    pub fn apply_to_subset(&self, s: &Subset) -> Subset {
        assert_eq!(self.degree(), s.n(), "degree mismatch");
        let mut mask = 0u64;
        let mut rest = s.mask();
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            mask |= 1 << self.images[i];
        }
        Subset::from_mask(s.n(), mask)
    }

    /// Cycle lengths in descending order.
    pub fn cycle_type(&self) -> CycleType {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut parts = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut a = start;
            while !seen[a] {
                seen[a] = true;
                a = self.images[a] as usize;
                len += 1;
            }
            parts.push(len);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CycleType { parts }
    }

    /// Number of `l`-subsets fixed setwise by `self`.
    pub fn fixed_subset_count(&self, l: usize) -> u64 {
        self.cycle_type().fixed_subset_count(l)
    }
}

impl std::ops::Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

/// Cycle notation, fixed points omitted; the identity prints as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut any = false;
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            any = true;
            f.write_str("(")?;
            let mut a = start;
            let mut first = true;
            while !seen[a] {
                seen[a] = true;
                if !first {
                    f.write_str(" ")?;
                }
                write!(f, "{}", a + 1)?;
                first = false;
                a = self.images[a] as usize;
            }
            f.write_str(")")?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

/// Lexicographic walk over `S_n`.
pub struct Permutations {
    next: Option<Vec<u8>>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let len = succ.len();
        if len >= 2 {
            if let Some(i) = (0..len - 1).rev().find(|&i| succ[i] < succ[i + 1]) {
                let j = (i + 1..len).rev().find(|&j| succ[j] > succ[i]).unwrap();
                succ.swap(i, j);
                succ[i + 1..].reverse();
                self.next = Some(succ);
            }
        }
        Some(Permutation { images: current })
    }
}

/// Every element of `S_n` exactly once, lexicographic in one-line notation.
/// Refuses `n > ceiling`.
pub fn enumerate_permutations(n: usize, ceiling: usize) -> Result<Permutations> {
    check_degree(n)?;
    if n > ceiling {
        return Err(Error::Ceiling { n, ceiling });
    }
    Ok(Permutations {
        next: Some((0..n as u8).collect()),
    })
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

// ---------------------------------------------------------------------------
// CycleType
// ---------------------------------------------------------------------------

/// A partition of `n`, parts in descending order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CycleType {
    parts: Vec<usize>,
}

impl CycleType {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::domain("cycle type needs positive parts"));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(CycleType { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// All partitions of `n`, ordered lexicographically ascending on the
    /// descending part lists: `1^n` first, `(n)` last.
    pub fn all(n: usize) -> Vec<CycleType> {
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<CycleType>) {
            if rest == 0 {
                out.push(CycleType { parts: cur.clone() });
                return;
            }
            for p in 1..=max.min(rest) {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Size of the conjugacy class, `n! / (prod parts * prod multiplicities!)`.
    pub fn class_size(&self) -> u128 {
        let mut denom: u128 = 1;
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let mult = self.parts[i..].iter().take_while(|&&q| q == p).count();
            denom *= (p as u128).pow(mult as u32) * factorial(mult);
            i += mult;
        }
        factorial(self.n()) / denom
    }

    /// A permutation with this cycle type, cycles laid out on consecutive
    /// integers.
    pub fn representative(&self) -> Permutation {
        let n = self.n();
        let mut images = Vec::with_capacity(n);
        let mut start = 1;
        for &p in &self.parts {
            for k in 0..p {
                images.push(start + (k + 1) % p);
            }
            start += p;
        }
        Permutation::new(&images).expect("valid layout")
    }

    /// Coefficient of `z^l` in `prod over cycles (1 + z^len)`: a subset is
    /// fixed exactly when it is a union of whole cycles.
    pub fn fixed_subset_count(&self, l: usize) -> u64 {
        let n = self.n();
        if l > n {
            return 0;
        }
        let mut poly = vec![0u64; n + 1];
        poly[0] = 1;
        let mut deg = 0;
        for &p in &self.parts {
            for k in (0..=deg).rev() {
                poly[k + p] += poly[k];
            }
            deg += p;
        }
        poly[l]
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join("-"))
    }
}

impl FromStr for CycleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .trim()
            .split('-')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::domain(format!("bad cycle type {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        CycleType::new(parts)
    }
}

// ---------------------------------------------------------------------------
// Tableaux and tabloids
// ---------------------------------------------------------------------------

/// A column of a two-row tableau.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Column {
    Pair(usize, usize),
    Single(usize),
}

/// A two-row tableau of shape `(n - m, m)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tableau {
    top: Vec<usize>,
    bottom: Vec<usize>,
}

impl Tableau {
    pub fn new(top: Vec<usize>, bottom: Vec<usize>) -> Result<Self> {
        let n = top.len() + bottom.len();
        check_degree(n)?;
        let m = bottom.len();
        if m == 0 || m > top.len() {
            return Err(Error::domain(format!(
                "tableau shape ({}, {m}) needs 1 <= m <= n/2",
                top.len()
            )));
        }
        let all: Vec<usize> = top.iter().chain(&bottom).copied().collect();
        Subset::new(n, &all)
            .map_err(|_| Error::domain(format!("tableau entries {all:?} are not a rearrangement of 1..={n}")))?;
        Ok(Tableau { top, bottom })
    }

    pub fn top(&self) -> &[usize] {
        &self.top
    }

    pub fn bottom(&self) -> &[usize] {
        &self.bottom
    }

    pub fn n(&self) -> usize {
        self.top.len() + self.bottom.len()
    }

    pub fn m(&self) -> usize {
        self.bottom.len()
    }

    /// `m` pairs `(top[k], bottom[k])` followed by the singletons of the
    /// top row's tail.
    pub fn columns(&self) -> Vec<Column> {
        let m = self.m();
        let mut cols: Vec<Column> = (0..m).map(|k| Column::Pair(self.top[k], self.bottom[k])).collect();
        cols.extend(self.top[m..].iter().map(|&e| Column::Single(e)));
        cols
    }

    pub fn tabloid(&self) -> Tabloid {
        Tabloid {
            bottom: Subset::new(self.n(), &self.bottom).expect("validated"),
        }
    }

    /// Entrywise image `x t`.
    pub fn act(&self, x: &Permutation) -> Result<Tableau> {
        if x.degree() != self.n() {
            return Err(Error::domain("degree mismatch acting on tableau"));
        }
        Ok(Tableau {
            top: self.top.iter().map(|&a| x.apply(a)).collect(),
            bottom: self.bottom.iter().map(|&a| x.apply(a)).collect(),
        })
    }

    /// Rows and columns strictly increasing.
    pub fn is_standard(&self) -> bool {
        self.top.windows(2).all(|w| w[0] < w[1])
            && self.bottom.windows(2).all(|w| w[0] < w[1])
            && self.top.iter().zip(&self.bottom).all(|(a, b)| a < b)
    }
}

/// Convenience wrapper around [`Tableau::columns`].
pub fn columns(t: &Tableau) -> Vec<Column> {
    t.columns()
}

/// Convenience wrapper around [`Tableau::tabloid`].
pub fn tabloid_of(t: &Tableau) -> Tabloid {
    t.tabloid()
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |r: &[usize]| r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "{};{}", row(&self.top), row(&self.bottom))
    }
}

impl FromStr for Tableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (top, bottom) = s
            .split_once(';')
            .ok_or_else(|| Error::domain(format!("tableau {s:?} needs two ';'-separated rows")))?;
        let row = |r: &str| {
            r.split(',')
                .filter(|t| !t.trim().is_empty())
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::domain(format!("bad tableau entry {t:?}")))
                })
                .collect::<Result<Vec<_>>>()
        };
        Tableau::new(row(top)?, row(bottom)?)
    }
}

/// A row-unordered tableau, identified with its bottom block.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Tabloid {
    bottom: Subset,
}

impl Tabloid {
    pub fn new(bottom: Subset) -> Result<Self> {
        let m = bottom.len();
        if m == 0 || 2 * m > bottom.n() {
            return Err(Error::domain(format!(
                "tabloid bottom block of size {m} needs 1 <= m <= n/2"
            )));
        }
        Ok(Tabloid { bottom })
    }

    pub fn bottom_block(&self) -> Subset {
        self.bottom
    }

    pub fn top_block(&self) -> Subset {
        self.bottom.complement()
    }
}

/// Standard tableaux of shape `(n - l, l)`, ordered by bottom row.
pub fn standard_tableaux(n: usize, l: usize) -> Result<Vec<Tableau>> {
    check_degree(n)?;
    if l == 0 || 2 * l > n {
        return Err(Error::domain(format!("shape ({}, {l}) needs 1 <= l <= n/2", n.saturating_sub(l))));
    }
    Ok(enumerate_subsets(n, l)?
        .into_iter()
        .filter_map(|b| {
            let t = Tableau {
                top: b.complement().elements(),
                bottom: b.elements(),
            };
            t.is_standard().then_some(t)
        })
        .collect())
}

/// Number of standard tableaux of shape `(n - l, l)` by enumeration;
/// `l = 0` is the one-row shape and counts 1.
pub fn standard_tableau_count(n: usize, l: usize) -> Result<u64> {
    check_degree(n)?;
    if 2 * l > n {
        return Err(Error::domain(format!("l = {l} exceeds n/2 for n = {n}")));
    }
    if l == 0 {
        return Ok(1);
    }
    Ok(standard_tableaux(n, l)?.len() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: usize, e: &[usize]) -> Subset {
        Subset::new(n, e).unwrap()
    }

    #[test]
    fn subsets_small_cases() {
        assert_eq!(
            enumerate_subsets(3, 2).unwrap(),
            vec![s(3, &[1, 2]), s(3, &[1, 3]), s(3, &[2, 3])]
        );
        assert_eq!(enumerate_subsets(5, 0).unwrap(), vec![Subset::empty(5).unwrap()]);
        assert_eq!(enumerate_subsets(5, 2).unwrap().len(), 10);
        assert!(enumerate_subsets(3, 4).is_err());
    }

    #[test]
    fn lex_rank_matches_enumeration() {
        for n in 1..=9 {
            for l in 0..=n {
                let subs = enumerate_subsets(n, l).unwrap();
                assert_eq!(subs.len() as u64, binomial(n, l));
                for (i, x) in subs.iter().enumerate() {
                    assert_eq!(x.lex_rank(), i);
                }
                assert!(subs.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }

    #[test]
    fn subset_text_form() {
        let x = Subset::parse(9, "1,4,7").unwrap();
        assert_eq!(x.to_string(), "1,4,7");
        assert_eq!(Subset::parse(9, " 7, 1 ,4").unwrap(), x);
        assert!(Subset::parse(5, "1,1").is_err());
        assert!(Subset::parse(5, "0").is_err());
        assert!(Subset::parse(5, "6").is_err());
        assert!(Subset::parse(5, "{}").unwrap().is_empty());
    }

    #[test]
    fn perm_on_subsets() {
        let id = Permutation::identity(5);
        assert_eq!(apply_perm_to_subset(&id, &s(5, &[2, 4])).unwrap(), s(5, &[2, 4]));
        let c = Permutation::from_cycles(5, &[&[1, 2, 3]]).unwrap();
        assert_eq!(apply_perm_to_subset(&c, &s(5, &[1, 3])).unwrap(), s(5, &[1, 2]));
        let t = Permutation::transposition(5, 4, 5).unwrap();
        assert_eq!(apply_perm_to_subset(&t, &s(5, &[4, 5])).unwrap(), s(5, &[4, 5]));
        assert!(apply_perm_to_subset(&t, &s(4, &[1])).is_err());
    }

    #[test]
    fn permutation_validation_and_display() {
        assert!(Permutation::new(&[1, 1, 2]).is_err());
        assert!(Permutation::new(&[1, 4, 2]).is_err());
        let x = Permutation::from_cycles(5, &[&[1, 2, 3], &[4, 5]]).unwrap();
        assert_eq!(x.images(), vec![2, 3, 1, 5, 4]);
        assert_eq!(x.to_string(), "(1 2 3)(4 5)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
        assert!(x.compose(&x.inverse()).is_identity());
    }

    #[test]
    fn composition_convention() {
        // (xy)(a) = x(y(a))
        let x = Permutation::transposition(3, 1, 2).unwrap();
        let y = Permutation::transposition(3, 2, 3).unwrap();
        let xy = &x * &y;
        for a in 1..=3 {
            assert_eq!(xy.apply(a), x.apply(y.apply(a)));
        }
        assert_eq!(xy.apply(3), 1);
    }

    #[test]
    fn cycle_types() {
        assert_eq!(Permutation::identity(4).cycle_type().parts(), &[1, 1, 1, 1]);
        let x = Permutation::from_cycles(4, &[&[1, 2], &[3, 4]]).unwrap();
        assert_eq!(x.cycle_type().parts(), &[2, 2]);
        let x = Permutation::from_cycles(4, &[&[1, 2, 3, 4]]).unwrap();
        assert_eq!(x.cycle_type().parts(), &[4]);
        let ct: CycleType = "3-2-1-1".parse().unwrap();
        assert_eq!(ct.to_string(), "3-2-1-1");
        assert_eq!(ct.n(), 7);
        assert_eq!(ct.representative().cycle_type(), ct);
    }

    fn brute_fixed(x: &Permutation, l: usize) -> u64 {
        enumerate_subsets(x.degree(), l)
            .unwrap()
            .iter()
            .filter(|s| x.apply_to_subset(s) == **s)
            .count() as u64
    }

    #[test]
    fn fixed_subset_examples() {
        assert_eq!(Permutation::identity(4).fixed_subset_count(2), 6);
        let x = Permutation::from_cycles(4, &[&[1, 2], &[3, 4]]).unwrap();
        assert_eq!(x.fixed_subset_count(2), 2);
        let x = Permutation::from_cycles(4, &[&[1, 2, 3]]).unwrap();
        assert_eq!(x.fixed_subset_count(2), 0);
        assert_eq!(x.fixed_subset_count(1), x.fixed_points() as u64);
    }

    #[test]
    fn fixed_subset_polynomial_matches_scanning() {
        for n in 1..=6 {
            for x in enumerate_permutations(n, 9).unwrap() {
                for l in 0..=n {
                    assert_eq!(x.fixed_subset_count(l), brute_fixed(&x, l), "{x} l={l}");
                }
            }
        }
    }

    #[test]
    fn class_sizes_match_enumeration() {
        for n in 1..=6 {
            let mut counts = std::collections::HashMap::new();
            for x in enumerate_permutations(n, 9).unwrap() {
                *counts.entry(x.cycle_type()).or_insert(0u128) += 1;
            }
            let all = CycleType::all(n);
            assert_eq!(all.len(), counts.len());
            for ct in all {
                assert_eq!(ct.class_size(), counts[&ct], "{ct}");
            }
        }
        let sizes: Vec<u128> = CycleType::all(4).iter().map(|c| c.class_size()).collect();
        assert_eq!(sizes, vec![1, 6, 3, 8, 6]);
    }

    #[test]
    fn permutations_enumeration() {
        assert_eq!(enumerate_permutations(3, 9).unwrap().count(), 6);
        let one: Vec<_> = enumerate_permutations(1, 9).unwrap().collect();
        assert_eq!(one, vec![Permutation::identity(1)]);
        let five: std::collections::HashSet<_> = enumerate_permutations(5, 9).unwrap().collect();
        assert_eq!(five.len(), 120);
        assert!(matches!(
            enumerate_permutations(10, DEFAULT_PERMUTATION_CEILING),
            Err(Error::Ceiling { n: 10, ceiling: 9 })
        ));
        assert_eq!(enumerate_permutations(10, 10).unwrap().take(3).count(), 3);
    }

    #[test]
    fn tableau_columns_and_tabloid() {
        let t: Tableau = "2,1,3;5,4".parse().unwrap();
        assert_eq!(
            t.columns(),
            vec![Column::Pair(2, 5), Column::Pair(1, 4), Column::Single(3)]
        );
        assert_eq!(t.tabloid().bottom_block(), s(5, &[4, 5]));
        assert_eq!(t.tabloid().top_block(), s(5, &[1, 2, 3]));
        assert_eq!(t.to_string(), "2,1,3;5,4");

        let t = Tableau::new(vec![1, 2, 3, 4], vec![5, 6]).unwrap();
        assert_eq!(
            columns(&t),
            vec![Column::Pair(1, 5), Column::Pair(2, 6), Column::Single(3), Column::Single(4)]
        );
        assert_eq!(tabloid_of(&t).bottom_block(), s(6, &[5, 6]));

        let t = Tableau::new(vec![1], vec![2]).unwrap();
        assert_eq!(t.columns(), vec![Column::Pair(1, 2)]);

        let shuffled = Tableau::new(vec![4, 3, 1, 2], vec![6, 5]).unwrap();
        assert_eq!(shuffled.tabloid(), tabloid_of(&Tableau::new(vec![1, 2, 3, 4], vec![5, 6]).unwrap()));
    }

    #[test]
    fn tableau_validation() {
        assert!(Tableau::new(vec![1], vec![2, 3]).is_err());
        assert!(Tableau::new(vec![1, 2], vec![]).is_err());
        assert!(Tableau::new(vec![1, 2], vec![2]).is_err());
        assert!(Tableau::new(vec![1, 5], vec![2]).is_err());
        assert!("1,2,3".parse::<Tableau>().is_err());
        assert!(Tabloid::new(s(4, &[1, 2, 3])).is_err());
    }

    #[test]
    fn standard_counts() {
        for n in 1..=12 {
            assert_eq!(standard_tableau_count(n, 0).unwrap(), 1);
            if n >= 2 {
                assert_eq!(standard_tableau_count(n, 1).unwrap(), n as u64 - 1);
            }
            for l in 1..=n / 2 {
                let expect = binomial(n, l) - binomial(n, l - 1);
                assert_eq!(standard_tableau_count(n, l).unwrap(), expect, "n={n} l={l}");
            }
        }
        assert_eq!(standard_tableau_count(4, 2).unwrap(), 2);
        assert!(standard_tableau_count(4, 3).is_err());
        let all = standard_tableaux(4, 2).unwrap();
        assert_eq!(all[0].to_string(), "1,3;2,4");
        assert_eq!(all[1].to_string(), "1,2;3,4");
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 2), 15);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(12, 6), 924);
        assert_eq!(binomial(63, 31), 916312070471295267);
    }
}
