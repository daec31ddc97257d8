//! Irreducible characters of `S_n` for the two-row shapes `(n - l, l)`.
//!
//! The permutation character of `M^(n-l,l)` counts fixed `l`-subsets and
//! splits as `chi^(n) + chi^(n-1,1) + ... + chi^(n-l,l)`, so each two-row
//! character is a difference of consecutive fixed-subset counts.

use std::fmt::Write as _;

use crate::combinatorics::{binomial, factorial, CycleType, Permutation};
use crate::error::{Error, Result};

fn check_two_row(n: usize, l: usize) -> Result<()> {
    if n == 0 || 2 * l > n {
        return Err(Error::domain(format!("shape ({}, {l}) needs 0 <= l <= n/2", n.saturating_sub(l))));
    }
    Ok(())
}

/// `chi^(n-l,l)` on the class of the given cycle type.
pub fn two_row_character_of_type(ct: &CycleType, l: usize) -> Result<i64> {
    check_two_row(ct.n(), l)?;
    if l == 0 {
        return Ok(1);
    }
    Ok(ct.fixed_subset_count(l) as i64 - ct.fixed_subset_count(l - 1) as i64)
}

/// `chi^(n-l,l)(x)`.
pub fn two_row_character(x: &Permutation, l: usize) -> Result<i64> {
    two_row_character_of_type(&x.cycle_type(), l)
}

/// `C(n,l) - C(n,l-1)`, the degree of `chi^(n-l,l)`.
pub fn dimension(n: usize, l: usize) -> Result<u64> {
    check_two_row(n, l)?;
    Ok(if l == 0 {
        1
    } else {
        binomial(n, l) - binomial(n, l - 1)
    })
}

/// One conjugacy class of `S_n` with its two-row character values.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CharacterRow {
    pub cycle_type: CycleType,
    pub class_size: u128,
    /// `values[l] = chi^(n-l,l)` on this class.
    pub values: Vec<i64>,
}

/// Two-row characters of `S_n` for `l = 0..=max_l`, one row per partition
/// of `n` (lexicographic ascending, `1^n` first).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CharacterTable {
    pub n: usize,
    pub max_l: usize,
    pub rows: Vec<CharacterRow>,
}

/// Class sizes are exact in `u128` up to this degree.
pub const MAX_TABLE_DEGREE: usize = 34;

pub fn character_table(n: usize, max_l: usize) -> Result<CharacterTable> {
    check_two_row(n, max_l)?;
    if n > MAX_TABLE_DEGREE {
        return Err(Error::domain(format!("character tables are limited to n <= {MAX_TABLE_DEGREE}")));
    }
    let rows = CycleType::all(n)
        .into_iter()
        .map(|ct| {
            let values = (0..=max_l)
                .map(|l| two_row_character_of_type(&ct, l))
                .collect::<Result<Vec<_>>>()?;
            Ok(CharacterRow {
                class_size: ct.class_size(),
                cycle_type: ct,
                values,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CharacterTable { n, max_l, rows })
}

impl CharacterTable {
    /// `sum over classes of class_size * chi_i * chi_j`.
    pub fn column_pairing(&self, i: usize, j: usize) -> i128 {
        self.rows
            .iter()
            .map(|r| r.class_size as i128 * r.values[i] as i128 * r.values[j] as i128)
            .sum()
    }

    /// First orthogonality: the pairing is `n!` on the diagonal and zero off it.
    pub fn is_orthonormal(&self) -> bool {
        let order = factorial(self.n) as i128;
        (0..=self.max_l).all(|i| {
            (0..=self.max_l).all(|j| self.column_pairing(i, j) == if i == j { order } else { 0 })
        })
    }

    /// CSV with header `cycle_type,class_size,chi_0,...,chi_maxl`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("cycle_type,class_size");
        for l in 0..=self.max_l {
            write!(out, ",chi_{l}").unwrap();
        }
        out.push('\n');
        for row in &self.rows {
            write!(out, "{},{}", row.cycle_type, row.class_size).unwrap();
            for v in &row.values {
                write!(out, ",{v}").unwrap();
            }
            out.push('\n');
        }
        out
    }
}
