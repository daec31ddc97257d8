//! Hoeffding decomposition of symmetric statistics of `m` draws without
//! replacement from `[n]`.
//!
//! A symmetric statistic is a function `h` on the `m`-subsets of `[n]`,
//! evaluated at the random set `{X(1), ..., X(m)}`. Its projection on the
//! `l`-th symmetric Hoeffding space is the U-statistic of a completely
//! degenerate kernel of order `l`, obtained from conditional expectations
//! through a Möbius-type inversion with the weights of [`CoefficientTable`].
//!
//! The module also carries the brute-force isotypic projector, which sums a
//! two-row character over all of `S_n`. The two routes are computed
//! independently so that one can check the other.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::algebra::{integer, ModuleVector, Rational};
use crate::characters::{dimension, two_row_character};
use crate::combinatorics::{binomial, enumerate_permutations, enumerate_subsets, factorial, Subset};
use crate::error::{Error, Result};

/// Default bound on `n` for the character-sum projector.
pub const DEFAULT_ORACLE_CEILING: usize = 8;

fn check_order(n: usize, m: usize) -> Result<()> {
    if m == 0 || 2 * m > n {
        return Err(Error::domain(format!(
            "sample size m = {m} must satisfy 1 <= m <= n/2 (n = {n})"
        )));
    }
    Ok(())
}

/// The rational weights driving the kernel formula, for `1 <= j <= l <= m`.
///
/// `scale(l, j) = prod_{r=j}^{l-1} (n - r) / (n - r - j)` and
/// `mobius(l, j) = -sum_{i=j}^{l-1} C(l-j, i-j) scale(l, i) mobius(i, j)`,
/// both with unit diagonal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoefficientTable {
    n: usize,
    m: usize,
    scale: Vec<Vec<Rational>>,
    mobius: Vec<Vec<Rational>>,
}

impl CoefficientTable {
    pub fn new(n: usize, m: usize) -> Result<Self> {
        check_order(n, m)?;
        let mut scale = vec![vec![Rational::zero(); m + 1]; m + 1];
        let mut mobius = vec![vec![Rational::zero(); m + 1]; m + 1];
        for l in 1..=m {
            scale[l][l] = integer(1);
            mobius[l][l] = integer(1);
            for j in 1..l {
                // n - r - j >= n - 2m + 1 > 0
                scale[l][j] = (j..l)
                    .map(|r| crate::algebra::rational((n - r) as i64, (n - r - j) as i64))
                    .product();
            }
        }
        for l in 2..=m {
            for j in 1..l {
                let mut acc = Rational::zero();
                for i in j..l {
                    acc += integer(binomial(l - j, i - j) as i64) * &scale[l][i] * &mobius[i][j];
                }
                mobius[l][j] = -acc;
            }
        }
        Ok(CoefficientTable { n, m, scale, mobius })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn scale(&self, l: usize, j: usize) -> &Rational {
        assert!(1 <= j && j <= l && l <= self.m, "index ({l},{j}) out of range");
        &self.scale[l][j]
    }

    pub fn mobius(&self, l: usize, j: usize) -> &Rational {
        assert!(1 <= j && j <= l && l <= self.m, "index ({l},{j}) out of range");
        &self.mobius[l][j]
    }
}

pub fn coefficient_table(n: usize, m: usize) -> Result<CoefficientTable> {
    CoefficientTable::new(n, m)
}

/// `E[h(X_(m)) | {X(1), ..., X(a)} = assigned]`: the average of
/// `h(assigned ∪ S)` over the `(m - a)`-subsets `S` of the complement.
pub fn conditional_expectation(h: &ModuleVector, assigned: &Subset) -> Result<Rational> {
    let (n, m) = (h.n(), h.l());
    if assigned.n() != n || assigned.len() > m {
        return Err(Error::domain(format!(
            "cannot condition a statistic of {m} draws from [{n}] on {assigned:?}"
        )));
    }
    let rest = assigned.complement();
    let completions = rest.subsets_of_size(m - assigned.len());
    let total: Rational = completions.iter().map(|s| h.get(&assigned.union(s)).clone()).sum();
    Ok(total / integer(completions.len() as i64))
}

/// Integer numerators of `values` over their least common denominator.
fn common_denominator(values: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let denom = values.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let numers = values
        .iter()
        .map(|v| v.numer() * (&denom / v.denom()))
        .collect();
    (numers, denom)
}

/// Calls `visit` on every sub-mask of `mask`, the empty one included.
fn for_each_submask(mask: u64, mut visit: impl FnMut(u64)) {
    let mut sub = mask;
    loop {
        visit(sub);
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & mask;
    }
}

/// Superset sums of `h` for every subset of size `a <= m`, kept as integer
/// numerators over one common denominator. Dividing the sum at `A` by the
/// denominator and by `C(n - a, m - a)` gives `E[h | A]`.
struct ConditionalMeans {
    n: usize,
    m: usize,
    // sums[a][rank of a-subset]
    sums: Vec<Vec<BigInt>>,
    denom: BigInt,
    mean: Rational,
}

impl ConditionalMeans {
    fn new(h: &ModuleVector) -> Self {
        let (n, m) = (h.n(), h.l());
        let (numers, denom) = common_denominator(h.values());
        let mut sums: Vec<Vec<BigInt>> = (0..=m)
            .map(|a| vec![BigInt::zero(); binomial(n, a) as usize])
            .collect();
        for (k, v) in h.subsets().iter().zip(&numers) {
            if v.is_zero() {
                continue;
            }
            for_each_submask(k.mask(), |sub| {
                let s = Subset::from_mask(n, sub);
                sums[s.len()][s.lex_rank()] += v;
            });
        }
        let mean = Rational::new(sums[0][0].clone(), &denom * BigInt::from(binomial(n, m)));
        ConditionalMeans { n, m, sums, denom, mean }
    }

    #[cfg(test)]
    fn conditional(&self, a: &Subset) -> Rational {
        let count = BigInt::from(binomial(self.n - a.len(), self.m - a.len()));
        Rational::new(self.sums[a.len()][a.lex_rank()].clone(), &self.denom * count)
    }

    /// `phi(J) = scale(m,l) sum_a mobius(l,a) sum_{A ⊆ J, |A| = a} (E[h|A] - E[h])`.
    ///
    /// The inner sums are accumulated as integers; the centering term
    /// contributes `C(l,a) E[h]` per `a` and is subtracted once.
    fn kernel(&self, coeffs: &CoefficientTable, l: usize) -> ModuleVector {
        let (n, m) = (self.n, self.m);
        let lead = coeffs.scale(m, l);
        // weight on the integer sum over a-subsets of J
        let weights: Vec<Rational> = (0..=l)
            .map(|a| {
                if a == 0 {
                    return Rational::zero();
                }
                let count = &self.denom * BigInt::from(binomial(n - a, m - a));
                lead * coeffs.mobius(l, a) / Rational::from_integer(count)
            })
            .collect();
        let offset: Rational = (1..=l)
            .map(|a| lead * coeffs.mobius(l, a) * integer(binomial(l, a) as i64) * &self.mean)
            .sum();
        let mut by_size = vec![BigInt::zero(); l + 1];
        ModuleVector::from_fn(n, l, |j| {
            by_size.iter_mut().for_each(|t| t.set_zero());
            for_each_submask(j.mask(), |sub| {
                if sub != 0 {
                    let s = Subset::from_mask(n, sub);
                    by_size[s.len()] += &self.sums[s.len()][s.lex_rank()];
                }
            });
            let mut acc = -offset.clone();
            for a in 1..=l {
                if !by_size[a].is_zero() {
                    acc += &weights[a] * &by_size[a];
                }
            }
            acc
        })
        .expect("shape already validated")
    }
}

fn check_statistic(h: &ModuleVector) -> Result<()> {
    check_order(h.n(), h.l())
}

/// The completely degenerate kernel of order `l` whose U-statistic is the
/// projection of `h` on the `l`-th Hoeffding space.
pub fn hoeffding_kernel(h: &ModuleVector, l: usize) -> Result<ModuleVector> {
    check_statistic(h)?;
    let (n, m) = (h.n(), h.l());
    if l == 0 || l > m {
        return Err(Error::domain(format!("kernel order {l} must lie in 1..={m}")));
    }
    let coeffs = CoefficientTable::new(n, m)?;
    Ok(ConditionalMeans::new(h).kernel(&coeffs, l))
}

/// `f(K) = sum over l-subsets J of K of phi(J)`.
pub fn u_statistic_lift(phi: &ModuleVector, m: usize) -> Result<ModuleVector> {
    let (n, l) = (phi.n(), phi.l());
    if l > m || m > n {
        return Err(Error::domain(format!("cannot lift order {l} to sample size {m} on [{n}]")));
    }
    let (numers, denom) = common_denominator(phi.values());
    let denom = Rational::from_integer(denom);
    let mut total = BigInt::zero();
    ModuleVector::from_fn(n, m, |k| {
        total.set_zero();
        for_each_submask(k.mask(), |sub| {
            if sub.count_ones() as usize == l {
                total += &numers[Subset::from_mask(n, sub).lex_rank()];
            }
        });
        Rational::from_integer(total.clone()) / &denom
    })
}

/// Orthogonal projection of `h` on the `l`-th symmetric Hoeffding space;
/// `l = 0` gives the constant mean.
pub fn project(h: &ModuleVector, l: usize) -> Result<ModuleVector> {
    check_statistic(h)?;
    let (n, m) = (h.n(), h.l());
    if l > m {
        return Err(Error::domain(format!("projection order {l} exceeds m = {m}")));
    }
    if l == 0 {
        return ModuleVector::constant(n, m, h.mean());
    }
    u_statistic_lift(&hoeffding_kernel(h, l)?, m)
}

/// Value at the single subset `k` of the projection of `h` on the `l`-th
/// Hoeffding space, evaluated straight from the double-sum formula with
/// freshly computed conditional expectations (no kernel vector is built).
pub fn projection_at(h: &ModuleVector, l: usize, k: &Subset) -> Result<Rational> {
    check_statistic(h)?;
    let (n, m) = (h.n(), h.l());
    if l == 0 || l > m || k.n() != n || k.len() != m {
        return Err(Error::domain(format!("bad evaluation point {k:?} at order {l}")));
    }
    let coeffs = CoefficientTable::new(n, m)?;
    let mean = conditional_expectation(h, &Subset::empty(n)?)?;
    let mut total = Rational::zero();
    for i in k.subsets_of_size(l) {
        for a in 1..=l {
            for s in i.subsets_of_size(a) {
                let centered = conditional_expectation(h, &s)? - &mean;
                total += coeffs.scale(m, l) * coeffs.mobius(l, a) * centered;
            }
        }
    }
    Ok(total)
}

/// `phi` is completely degenerate when, for every `(l-1)`-subset `A`,
/// `sum_{j not in A} phi(A ∪ {j}) = 0`. For `l = 0` this asks `phi = 0`.
pub fn is_completely_degenerate(phi: &ModuleVector) -> bool {
    let (n, l) = (phi.n(), phi.l());
    if l == 0 {
        return phi.is_zero();
    }
    enumerate_subsets(n, l - 1).expect("shape valid").iter().all(|a| {
        let total: Rational = a
            .complement()
            .iter()
            .map(|j| phi.get(&a.union(&Subset::from_mask(n, 1 << (j - 1)))).clone())
            .sum();
        total.is_zero()
    })
}

/// Mean, kernels and components of a symmetric statistic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HoeffdingDecomposition {
    pub n: usize,
    pub m: usize,
    pub mean: Rational,
    /// `kernels[l - 1]` has order `l`, for `l = 1..=m`.
    pub kernels: Vec<ModuleVector>,
    /// `components[l]` is the projection on the `l`-th space, `l = 0..=m`.
    pub components: Vec<ModuleVector>,
}

impl HoeffdingDecomposition {
    pub fn kernel(&self, l: usize) -> &ModuleVector {
        &self.kernels[l - 1]
    }

    pub fn component(&self, l: usize) -> &ModuleVector {
        &self.components[l]
    }

    /// Sum of all components.
    pub fn reconstruct(&self) -> ModuleVector {
        let mut total = self.components[0].clone();
        for c in &self.components[1..] {
            total.add_assign(c).expect("components share a shape");
        }
        total
    }
}

/// Full decomposition: one pass of conditional expectations, then every
/// kernel and its lift.
pub fn decompose(h: &ModuleVector) -> Result<HoeffdingDecomposition> {
    check_statistic(h)?;
    let (n, m) = (h.n(), h.l());
    let coeffs = CoefficientTable::new(n, m)?;
    let means = ConditionalMeans::new(h);
    let kernels: Vec<ModuleVector> = (1..=m).map(|l| means.kernel(&coeffs, l)).collect();
    let mut components = vec![ModuleVector::constant(n, m, means.mean.clone())?];
    for k in &kernels {
        components.push(u_statistic_lift(k, m)?);
    }
    Ok(HoeffdingDecomposition {
        n,
        m,
        mean: means.mean,
        kernels,
        components,
    })
}

/// The isotypic projector for the shape `(n - l, l)` on `M^(n-m,m)`,
/// `f ↦ (D/n!) sum_{x in S_n} chi(x) f(x^{-1} ·)`, assembled by a literal
/// walk over `S_n`. Character weights are accumulated as integers per
/// (output subset, input subset) pair and applied to `f` afterwards.
#[derive(Clone, Debug)]
pub struct IsotypicProjector {
    n: usize,
    m: usize,
    l: usize,
    // weights[L][K] = sum of chi(x) over x with x^{-1} L = K
    weights: Vec<Vec<i64>>,
    factor: Rational,
}

impl IsotypicProjector {
    pub fn new(n: usize, m: usize, l: usize, ceiling: usize) -> Result<Self> {
        if l > m {
            return Err(Error::domain(format!("projector order {l} exceeds m = {m}")));
        }
        Ok(Self::all(n, m, ceiling)?.swap_remove(l))
    }

    /// Projectors for `l = 0..=m`, sharing one walk over `S_n`.
    pub fn all(n: usize, m: usize, ceiling: usize) -> Result<Vec<Self>> {
        check_order(n, m)?;
        let perms = enumerate_permutations(n, ceiling)?;
        let subsets = enumerate_subsets(n, m)?;
        let size = subsets.len();
        let mut weights = vec![vec![vec![0i64; size]; size]; m + 1];
        for x in perms {
            let chis: Vec<i64> = (0..=m).map(|l| two_row_character(&x, l)).collect::<Result<_>>()?;
            let xinv = x.inverse();
            for (li, target) in subsets.iter().enumerate() {
                let ki = xinv.apply_to_subset(target).lex_rank();
                for (l, chi) in chis.iter().enumerate() {
                    weights[l][li][ki] += chi;
                }
            }
        }
        let order = factorial(n) as i64;
        weights
            .into_iter()
            .enumerate()
            .map(|(l, w)| {
                Ok(IsotypicProjector {
                    n,
                    m,
                    l,
                    weights: w,
                    factor: crate::algebra::rational(dimension(n, l)? as i64, order),
                })
            })
            .collect()
    }

    pub fn order(&self) -> usize {
        self.l
    }

    pub fn apply(&self, f: &ModuleVector) -> Result<ModuleVector> {
        if f.n() != self.n || f.l() != self.m {
            return Err(Error::domain("projector applied to a vector of the wrong shape"));
        }
        let values = self
            .weights
            .iter()
            .map(|row| {
                let mut acc = Rational::zero();
                for (w, v) in row.iter().zip(f.values()) {
                    if *w != 0 && !v.is_zero() {
                        acc += integer(*w) * v;
                    }
                }
                acc * &self.factor
            })
            .collect();
        ModuleVector::from_values(self.n, self.m, values)
    }
}

/// Isotypic component of `f` for the shape `(n - l, l)` by summation over
/// `S_n`. Refuses `n > ceiling`.
pub fn character_projection_oracle(f: &ModuleVector, l: usize, ceiling: usize) -> Result<ModuleVector> {
    check_statistic(f)?;
    if l > f.l() {
        return Err(Error::domain(format!("projection order {l} exceeds m = {}", f.l())));
    }
    IsotypicProjector::new(f.n(), f.l(), l, ceiling)?.apply(f)
}
