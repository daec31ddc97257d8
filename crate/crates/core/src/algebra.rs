//! Exact rational vectors indexed by the `l`-subsets of `[n]`, i.e. elements
//! of the permutation module `M^(n-l,l)`, together with the `S_n` action,
//! the uniform-average inner product and exact rank computations.
//!
//! All scalars are rational. Two-row characters are integer valued and the
//! Hoeffding coefficients are rational, so nothing in scope needs complex
//! numbers and the conjugation in the inner product is the identity.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinatorics::{binomial, enumerate_subsets, Permutation, Subset};
use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn integer(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// A total function from the `l`-subsets of `[n]` to the rationals, stored
/// densely in canonical subset order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ModuleVector {
    n: usize,
    l: usize,
    values: Vec<Rational>,
}

impl ModuleVector {
    pub fn zero(n: usize, l: usize) -> Result<Self> {
        Self::constant(n, l, Rational::zero())
    }

    pub fn constant(n: usize, l: usize, c: Rational) -> Result<Self> {
        check_shape(n, l)?;
        Ok(ModuleVector {
            n,
            l,
            values: vec![c; binomial(n, l) as usize],
        })
    }

    /// Values in canonical subset order.
    pub fn from_values(n: usize, l: usize, values: Vec<Rational>) -> Result<Self> {
        check_shape(n, l)?;
        let expected = binomial(n, l) as usize;
        if values.len() != expected {
            return Err(Error::domain(format!(
                "M^({},{l}) has {expected} coordinates, got {}",
                n - l,
                values.len()
            )));
        }
        Ok(ModuleVector { n, l, values })
    }

    pub fn from_fn(n: usize, l: usize, mut f: impl FnMut(&Subset) -> Rational) -> Result<Self> {
        let values = enumerate_subsets(n, l)?.iter().map(&mut f).collect();
        Ok(ModuleVector { n, l, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Rational> {
        self.values
    }

    /// Coordinates in canonical order.
    pub fn subsets(&self) -> Vec<Subset> {
        enumerate_subsets(self.n, self.l).expect("shape validated on construction")
    }

    pub fn get(&self, s: &Subset) -> &Rational {
        assert!(s.n() == self.n && s.len() == self.l, "subset {s} outside M^({},{})", self.n - self.l, self.l);
        &self.values[s.lex_rank()]
    }

    pub fn set(&mut self, s: &Subset, v: Rational) {
        assert!(s.n() == self.n && s.len() == self.l, "subset {s} outside M^({},{})", self.n - self.l, self.l);
        let i = s.lex_rank();
        self.values[i] = v;
    }

    pub fn iter(&self) -> impl Iterator<Item = (Subset, &Rational)> {
        self.subsets().into_iter().zip(self.values.iter())
    }

    pub fn same_shape(&self, other: &ModuleVector) -> bool {
        self.n == other.n && self.l == other.l
    }

    fn check_same_shape(&self, other: &ModuleVector) -> Result<()> {
        if !self.same_shape(other) {
            return Err(Error::domain(format!(
                "shape mismatch: (n={}, l={}) vs (n={}, l={})",
                self.n, self.l, other.n, other.l
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &ModuleVector) -> Result<ModuleVector> {
        self.check_same_shape(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &ModuleVector) -> Result<ModuleVector> {
        self.check_same_shape(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    pub fn scale(&self, c: &Rational) -> ModuleVector {
        ModuleVector {
            n: self.n,
            l: self.l,
            values: self.values.iter().map(|v| v * c).collect(),
        }
    }

    pub fn add_assign(&mut self, other: &ModuleVector) -> Result<()> {
        self.check_same_shape(other)?;
        for (a, b) in self.values.iter_mut().zip(&other.values) {
            *a += b;
        }
        Ok(())
    }

    fn zip_with(&self, other: &ModuleVector, op: impl Fn(&Rational, &Rational) -> Rational) -> ModuleVector {
        ModuleVector {
            n: self.n,
            l: self.l,
            values: self.values.iter().zip(&other.values).map(|(a, b)| op(a, b)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    /// Uniform average of the entries, `E[f(X_(l))]`.
    pub fn mean(&self) -> Rational {
        let total: Rational = self.values.iter().sum();
        total / integer(self.values.len() as i64)
    }

    /// Number of non-zero coordinates.
    pub fn support_size(&self) -> usize {
        self.values.iter().filter(|v| !v.is_zero()).count()
    }
}

fn check_shape(n: usize, l: usize) -> Result<()> {
    if l > n {
        return Err(Error::domain(format!("subset size {l} exceeds n = {n}")));
    }
    // validates n as a side effect
    Subset::empty(n)?;
    Ok(())
}

/// The indicator `1_s` in `M^(n-|s|,|s|)`.
pub fn indicator(s: &Subset) -> ModuleVector {
    let mut v = ModuleVector::zero(s.n(), s.len()).expect("subset has a valid shape");
    v.set(s, Rational::one());
    v
}

/// `(x f)(K) = f(x^{-1} K)`; equivalently `x 1_J = 1_{xJ}`.
pub fn act(x: &Permutation, f: &ModuleVector) -> Result<ModuleVector> {
    if x.degree() != f.n {
        return Err(Error::domain(format!(
            "permutation of degree {} acting on M^({},{})",
            x.degree(),
            f.n - f.l,
            f.l
        )));
    }
    let mut out = vec![Rational::zero(); f.values.len()];
    for (s, v) in f.subsets().iter().zip(&f.values) {
        out[x.apply_to_subset(s).lex_rank()] = v.clone();
    }
    Ok(ModuleVector {
        n: f.n,
        l: f.l,
        values: out,
    })
}

/// `<f, g> = C(n,l)^{-1} * sum_K f(K) g(K)`.
pub fn inner_product(f: &ModuleVector, g: &ModuleVector) -> Result<Rational> {
    f.check_same_shape(g)?;
    let total: Rational = f.values.iter().zip(&g.values).map(|(a, b)| a * b).sum();
    Ok(total / integer(f.values.len() as i64))
}

/// Dimension of the linear span, by exact Gaussian elimination. Columns are
/// scanned in canonical subset order and the pivot is the first remaining
/// vector with a non-zero entry in that column.
pub fn rank_of_span(vectors: &[ModuleVector]) -> Result<usize> {
    let Some(first) = vectors.first() else {
        return Ok(0);
    };
    for v in vectors {
        first.check_same_shape(v)?;
    }
    Ok(row_rank(vectors.iter().map(|v| v.values.clone()).collect()))
}

/// Row rank of a rational matrix.
pub(crate) fn row_rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot = &head[rank];
        for row in tail.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let factor = &row[c] / &pivot[c];
            for k in c..cols {
                if !pivot[k].is_zero() {
                    row[k] -= &factor * &pivot[k];
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Matrix of pairwise inner products.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GramMatrix {
    entries: Vec<Vec<Rational>>,
}

impl GramMatrix {
    pub fn new(vectors: &[ModuleVector]) -> Result<Self> {
        let mut entries = vec![vec![Rational::zero(); vectors.len()]; vectors.len()];
        for i in 0..vectors.len() {
            for j in i..vectors.len() {
                let ip = inner_product(&vectors[i], &vectors[j])?;
                entries[j][i] = ip.clone();
                entries[i][j] = ip;
            }
        }
        Ok(GramMatrix { entries })
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i][j]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.size()).all(|i| (0..i).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    /// Equals the rank of the span, since the inner product is positive
    /// definite.
    pub fn rank(&self) -> usize {
        row_rank(self.entries.clone())
    }
}
