//! Two-row Specht modules inside `M^(n-l,l)`.
//!
//! The polytabloid of a tableau `t` is `κ_t 1_{bottom(t)}`, where
//! `κ_t = (Id - (i_1 j_1)) ... (Id - (i_m j_m))` runs over the paired
//! columns of `t`. Polytabloids of standard tableaux form a basis.

use crate::algebra::{act, indicator, ModuleVector};
use crate::combinatorics::{standard_tableaux, Column, Permutation, Tableau};
use crate::error::{Error, Result};
use crate::hoeffding::u_statistic_lift;

/// The column antisymmetrizer `κ_t` of a tableau, one transposition per
/// two-cell column.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ColumnOperator {
    n: usize,
    pairs: Vec<(usize, usize)>,
}

impl ColumnOperator {
    pub fn new(n: usize, pairs: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        for &(a, b) in &pairs {
            for e in [a, b] {
                if e == 0 || e > n || seen[e] {
                    return Err(Error::domain(format!(
                        "column pairs {pairs:?} must use distinct entries of [1..{n}]"
                    )));
                }
                seen[e] = true;
            }
        }
        Ok(ColumnOperator { n, pairs })
    }

    pub fn of_tableau(t: &Tableau) -> Self {
        let pairs = t
            .columns()
            .into_iter()
            .filter_map(|c| match c {
                Column::Pair(a, b) => Some((a, b)),
                Column::Single(_) => None,
            })
            .collect();
        ColumnOperator { n: t.n(), pairs }
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Applies each `Id - (a b)` in turn, left to right.
    pub fn apply(&self, f: &ModuleVector) -> Result<ModuleVector> {
        if f.n() != self.n {
            return Err(Error::domain("column operator applied on the wrong degree"));
        }
        let mut out = f.clone();
        for &(a, b) in &self.pairs {
            let swap = Permutation::transposition(self.n, a, b)?;
            out = out.sub(&act(&swap, &out)?)?;
        }
        Ok(out)
    }
}

pub fn polytabloid(t: &Tableau) -> ModuleVector {
    let base = indicator(&t.tabloid().bottom_block());
    ColumnOperator::of_tableau(t)
        .apply(&base)
        .expect("operator built from the same tableau")
}

/// Polytabloids of the standard tableaux of shape `(n - l, l)`, ordered by
/// bottom row.
pub fn specht_basis(n: usize, l: usize) -> Result<Vec<ModuleVector>> {
    Ok(standard_tableaux(n, l)?.iter().map(polytabloid).collect())
}

/// The U-statistic lift of an element of `M^(n-l,l)` into `M^(n-m,m)`.
pub fn lift_to_hoeffding(v: &ModuleVector, m: usize) -> Result<ModuleVector> {
    u_statistic_lift(v, m)
}
