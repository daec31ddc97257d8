//! Verification suites.
//!
//! Each suite takes a [`RunConfig`], generates its inputs deterministically
//! from the seed and returns a [`VerificationReport`]. Identical configs give
//! byte-identical reports.
//!
//! Random vectors come from ChaCha8 seeded with a 64-bit value
//! (`rand_chacha::ChaCha8Rng::seed_from_u64`); each entry draws a numerator
//! uniform in `[-9, 9]` and then a denominator uniform in `[1, 9]`, visiting
//! subsets in canonical order.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{act, indicator, inner_product, integer, rank_of_span, rational, ModuleVector, Rational};
use crate::characters::dimension;
use crate::combinatorics::{
    enumerate_permutations, enumerate_subsets, factorial, standard_tableau_count, standard_tableaux, Permutation,
    Subset, Tableau,
};
use crate::error::{Error, Result};
use crate::format::{format_rational, write_module_vector};
use crate::hoeffding::{
    decompose, is_completely_degenerate, project, projection_at, IsotypicProjector, DEFAULT_ORACLE_CEILING,
};
use crate::specht::{lift_to_hoeffding, polytabloid, specht_basis};

/// Parameters shared by all suites.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub n: usize,
    pub m: usize,
    pub seed: u64,
    pub trials: usize,
    /// Largest `n` for which sums over `S_n` are attempted.
    pub ceiling: usize,
}

impl RunConfig {
    pub fn new(n: usize, m: usize, seed: u64, trials: usize) -> Result<Self> {
        if m == 0 || 2 * m > n {
            return Err(Error::domain(format!("need 1 <= m <= n/2, got n = {n}, m = {m}")));
        }
        Subset::empty(n)?;
        Ok(RunConfig {
            n,
            m,
            seed,
            trials,
            ceiling: DEFAULT_ORACLE_CEILING,
        })
    }

    pub fn with_ceiling(mut self, ceiling: usize) -> Self {
        self.ceiling = ceiling;
        self
    }

    /// Seed of the `t`-th trial vector; trial 0 uses the base seed.
    pub fn trial_seed(&self, t: usize) -> u64 {
        self.seed ^ (t as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)
    }

    fn trial_vector(&self, t: usize) -> ModuleVector {
        random_module_vector(self.n, self.m, self.trial_seed(t)).expect("config validated")
    }

    fn check_ceiling(&self) -> Result<()> {
        if self.n > self.ceiling {
            return Err(Error::Ceiling {
                n: self.n,
                ceiling: self.ceiling,
            });
        }
        Ok(())
    }
}

/// Seeded pseudorandom element of `M^(n-m,m)`; see the module docs for the
/// generator.
pub fn random_module_vector(n: usize, m: usize, seed: u64) -> Result<ModuleVector> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    ModuleVector::from_fn(n, m, |_| {
        let num = rng.gen_range(-9..=9);
        let den = rng.gen_range(1..=9);
        rational(num, den)
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub instance: String,
    pub passed: bool,
    /// Offending input, serialized, when the check failed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub n: usize,
    pub m: usize,
    pub seed: u64,
    pub trials: usize,
    pub checks: Vec<CheckResult>,
    /// Informational lines that are not assertions.
    pub notes: Vec<String>,
}

impl VerificationReport {
    fn new(suite: &str, cfg: &RunConfig) -> Self {
        VerificationReport {
            suite: suite.to_string(),
            n: cfg.n,
            m: cfg.m,
            seed: cfg.seed,
            trials: cfg.trials,
            checks: Vec::new(),
            notes: Vec::new(),
        }
    }

    /// Records a check; `detail` is only evaluated on failure.
    pub fn record(&mut self, name: &str, instance: impl Into<String>, passed: bool, detail: impl FnOnce() -> String) {
        self.checks.push(CheckResult {
            name: name.to_string(),
            instance: instance.into(),
            passed,
            detail: (!passed).then(detail),
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// One line per check name with pass counts, then failure details and
    /// notes.
    pub fn render(&self) -> String {
        let mut out = format!(
            "suite {} (n = {}, m = {}, seed = {}, trials = {})\n",
            self.suite, self.n, self.m, self.seed, self.trials
        );
        let mut names: Vec<&str> = Vec::new();
        for c in &self.checks {
            if !names.contains(&c.name.as_str()) {
                names.push(&c.name);
            }
        }
        for name in names {
            let (ok, total) = self
                .checks
                .iter()
                .filter(|c| c.name == name)
                .fold((0, 0), |(ok, t), c| (ok + c.passed as usize, t + 1));
            let tag = if ok == total { "PASS" } else { "FAIL" };
            writeln!(out, "  {tag} {name} ({ok}/{total})").unwrap();
        }
        for c in self.failures() {
            writeln!(out, "  failure {} [{}]", c.name, c.instance).unwrap();
            if let Some(d) = &c.detail {
                for line in d.lines() {
                    writeln!(out, "    {line}").unwrap();
                }
            }
        }
        for note in &self.notes {
            writeln!(out, "  note: {note}").unwrap();
        }
        writeln!(out, "  result: {}", if self.passed() { "PASS" } else { "FAIL" }).unwrap();
        out
    }
}

fn trial_inputs(cfg: &RunConfig) -> Vec<(String, ModuleVector)> {
    (0..cfg.trials)
        .map(|t| (format!("trial {t} (seed {})", cfg.trial_seed(t)), cfg.trial_vector(t)))
        .collect()
}

/// Reconstruction, orthogonality, idempotence, kernel degeneracy and the
/// covariance expansion, on seeded random inputs, every indicator and a
/// constant.
pub fn verify_decomposition(cfg: &RunConfig) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("decomp", cfg);
    let (n, m) = (cfg.n, cfg.m);

    let mut inputs = trial_inputs(cfg);
    for s in enumerate_subsets(n, m)? {
        inputs.push((format!("indicator {s}"), indicator(&s)));
    }
    let constant = ModuleVector::constant(n, m, rational(5, 3))?;
    inputs.push(("constant 5/3".to_string(), constant.clone()));

    let d = decompose(&constant)?;
    report.record("constant input has no higher components", "constant 5/3", d.components[1..].iter().all(ModuleVector::is_zero), || {
        write_module_vector(&constant)
    });

    for (idx, (label, h)) in inputs.iter().enumerate() {
        // covariance partner: the next input, cyclically
        let partner = &inputs[(idx + 1) % inputs.len()].1;
        let dh = decompose(h)?;
        let df = decompose(partner)?;
        let shown = || write_module_vector(h);

        report.record("reconstruction", label.clone(), dh.reconstruct() == *h, shown);

        let mut orthogonal = true;
        for i in 0..=m {
            for j in 0..=m {
                if i != j {
                    orthogonal &= inner_product(dh.component(i), dh.component(j))?.is_zero();
                    orthogonal &= inner_product(dh.component(i), df.component(j))?.is_zero();
                }
            }
        }
        report.record("component orthogonality", label.clone(), orthogonal, shown);

        let degenerate = dh.kernels.iter().all(is_completely_degenerate);
        report.record("kernel degeneracy", label.clone(), degenerate, shown);

        let mut idempotent = true;
        for l in 0..=m {
            let again = decompose(dh.component(l))?;
            for j in 0..=m {
                idempotent &= if j == l {
                    again.component(j) == dh.component(l)
                } else {
                    again.component(j).is_zero()
                };
            }
        }
        report.record("projection idempotence", label.clone(), idempotent, shown);

        let lhs = inner_product(h, partner)?;
        let mut rhs = &dh.mean * &df.mean;
        for l in 1..=m {
            rhs += inner_product(dh.component(l), df.component(l))?;
        }
        report.record("covariance expansion", label.clone(), lhs == rhs, || {
            format!(
                "E[hf] = {} but expansion gives {}\nh:\n{}f:\n{}",
                format_rational(&lhs),
                format_rational(&rhs),
                write_module_vector(h),
                write_module_vector(partner)
            )
        });
    }
    Ok(report)
}

/// Weight matrix of `f ↦ (n-1)/n! * sum_x (fix(x) - 1) f(x ·)`, built from
/// fixed-point counts alone.
fn fixed_point_operator(n: usize, m: usize, ceiling: usize) -> Result<Vec<Vec<i64>>> {
    let subsets = enumerate_subsets(n, m)?;
    let mut w = vec![vec![0i64; subsets.len()]; subsets.len()];
    for x in enumerate_permutations(n, ceiling)? {
        let chi = x.fixed_points() as i64 - 1;
        if chi == 0 {
            continue;
        }
        for (i, k) in subsets.iter().enumerate() {
            w[i][x.apply_to_subset(k).lex_rank()] += chi;
        }
    }
    Ok(w)
}

fn apply_weights(w: &[Vec<i64>], f: &ModuleVector, factor: &Rational) -> ModuleVector {
    let values = w
        .iter()
        .map(|row| {
            let mut acc = Rational::zero();
            for (c, v) in row.iter().zip(f.values()) {
                if *c != 0 {
                    acc += integer(*c) * v;
                }
            }
            acc * factor
        })
        .collect();
    ModuleVector::from_values(f.n(), f.l(), values).expect("same shape")
}

/// The character-sum projection agrees with the kernel route, pointwise and
/// as vectors, and its image has the Specht dimension.
pub fn verify_equivalence(cfg: &RunConfig) -> Result<VerificationReport> {
    cfg.check_ceiling()?;
    let mut report = VerificationReport::new("equiv", cfg);
    let (n, m) = (cfg.n, cfg.m);
    let projectors = IsotypicProjector::all(n, m, cfg.ceiling)?;
    let subsets = enumerate_subsets(n, m)?;

    // (n-1)/n! sum_x (fix(x)-1) f(x i) = prod_{r=1}^{m-1} (n-r)/(n-r-1) sum_s E[f - Ef | X(1) = i_s]
    let fix_ops = fixed_point_operator(n, m, cfg.ceiling)?;
    let fix_factor = rational(n as i64 - 1, factorial(n) as i64);
    let ratio: Rational = (1..m).map(|r| rational((n - r) as i64, (n - r - 1) as i64)).product();

    for (label, f) in trial_inputs(cfg) {
        let shown = || write_module_vector(&f);
        for p in &projectors {
            let l = p.order();
            let oracle = p.apply(&f)?;
            let kernel_route = project(&f, l)?;
            report.record(&format!("oracle = project, l = {l}"), label.clone(), oracle == kernel_route, shown);
            if l >= 1 {
                let mut pointwise = true;
                for k in &subsets {
                    pointwise &= projection_at(&f, l, k)? == *oracle.get(k);
                }
                report.record(&format!("pointwise double sum = oracle, l = {l}"), label.clone(), pointwise, shown);
            }
        }

        let lhs = apply_weights(&fix_ops, &f, &fix_factor);
        let mean = f.mean();
        let rhs = ModuleVector::from_fn(n, m, |k| {
            let total: Rational = k
                .subsets_of_size(1)
                .iter()
                .map(|s| crate::hoeffding::conditional_expectation(&f, s).expect("valid") - &mean)
                .sum();
            &ratio * total
        })?;
        report.record("fixed-point formula for l = 1", label.clone(), lhs == rhs, shown);
        report.record(
            "fixed-point formula matches projection, l = 1",
            label.clone(),
            lhs == project(&f, 1)?,
            shown,
        );
    }

    for l in 0..=m {
        let image: Vec<ModuleVector> = subsets.iter().map(|s| project(&indicator(s), l)).collect::<Result<_>>()?;
        let rank = rank_of_span(&image)?;
        let dim = dimension(n, l)? as usize;
        report.record(&format!("rank of projection image, l = {l}"), format!("n = {n}"), rank == dim, || {
            format!("rank {rank}, expected {dim}")
        });
    }
    Ok(report)
}

/// Orthogonality between a degree-`j` and a degree-`l` Hoeffding component
/// survives shifting one argument to an index set overlapping `[m]` in `r`
/// places.
pub fn verify_shift_orthogonality(cfg: &RunConfig) -> Result<VerificationReport> {
    cfg.check_ceiling()?;
    let mut report = VerificationReport::new("shift", cfg);
    let (n, m) = (cfg.n, cfg.m);
    if m < 2 {
        report
            .notes
            .push("m = 1 has a single non-trivial Hoeffding space; nothing to check".to_string());
        return Ok(report);
    }
    let subsets = enumerate_subsets(n, m)?;
    let base: Vec<usize> = (1..=m).collect();
    let base = Subset::new(n, &base)?;

    // overlap r -> (shifted set, pair counts #{x : x[m] = K, x k = K'})
    let mut shifts = Vec::new();
    for r in 0..=m {
        if 2 * m - r > n {
            continue;
        }
        // y = (r+1, m+1)(r+2, m+2)...(m, 2m-r)
        let mut y = Permutation::identity(n);
        for (a, b) in (r + 1..=m).zip(m + 1..=2 * m - r) {
            y = &y * &Permutation::transposition(n, a, b)?;
        }
        let shifted = y.apply_to_subset(&base);
        let expect: Vec<usize> = (1..=r).chain(m + 1..=2 * m - r).collect();
        report.record("shifted index set", format!("r = {r}"), shifted == Subset::new(n, &expect)?, || {
            format!("y[m] = {shifted}")
        });
        let mut counts = vec![vec![0i64; subsets.len()]; subsets.len()];
        for x in enumerate_permutations(n, cfg.ceiling)? {
            counts[x.apply_to_subset(&base).lex_rank()][x.apply_to_subset(&shifted).lex_rank()] += 1;
        }
        shifts.push((r, counts));
    }
    let order = integer(factorial(n) as i64);
    let shifted_mean = |f: &ModuleVector, h: &ModuleVector, counts: &[Vec<i64>]| -> Rational {
        let mut acc = Rational::zero();
        for (i, row) in counts.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if *c != 0 {
                    acc += integer(*c) * &f.values()[i] * &h.values()[j];
                }
            }
        }
        acc / &order
    };

    let mut controls_nonzero = 0usize;
    let mut controls = 0usize;
    for t in 0..cfg.trials {
        let raw_f = cfg.trial_vector(2 * t);
        let raw_h = cfg.trial_vector(2 * t + 1);
        let label = format!("trial {t}");
        let dh = decompose(&raw_h)?;
        let df = decompose(&raw_f)?;
        for j in 1..=m {
            for l in 1..=m {
                let f = df.component(j);
                let h = dh.component(l);
                for (r, counts) in &shifts {
                    let value = shifted_mean(f, h, counts);
                    if j == l {
                        // not claimed; tracked as a control
                        controls += 1;
                        controls_nonzero += !value.is_zero() as usize;
                        continue;
                    }
                    report.record(
                        &format!("E[f(X) h(X')] = 0, (j, l) = ({j}, {l}), r = {r}"),
                        label.clone(),
                        value.is_zero(),
                        || {
                            format!(
                                "value {}\nf:\n{}h:\n{}",
                                format_rational(&value),
                                write_module_vector(&raw_f),
                                write_module_vector(&raw_h)
                            )
                        },
                    );
                }
            }
        }
    }
    report.notes.push(format!(
        "control j = l (not asserted): {controls_nonzero} of {controls} shifted averages are non-zero"
    ));
    Ok(report)
}

/// Polytabloids, Specht ranks, equivariance and the span identity between
/// lifted Specht modules and Hoeffding spaces.
pub fn verify_specht(cfg: &RunConfig) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("specht", cfg);
    let (n, m) = (cfg.n, cfg.m);

    let t = Tableau::new(vec![1, 2, 3, 4], vec![5, 6])?;
    let mut expect = ModuleVector::zero(6, 2)?;
    for (s, v) in [(&[5, 6], 1), (&[1, 6], -1), (&[2, 5], -1), (&[1, 2], 1)] {
        expect.set(&Subset::new(6, s)?, integer(v));
    }
    let got = polytabloid(&t);
    report.record("worked polytabloid (1,2,3,4;5,6)", "n = 6", got == expect, || write_module_vector(&got));

    let mut shapes: Vec<(usize, usize)> = vec![(4, 2), (6, 2), (6, 3), (8, 2)];
    shapes.extend((1..=n / 2).map(|l| (n, l)));
    shapes.sort_unstable();
    shapes.dedup();
    for (sn, l) in shapes {
        let rank = rank_of_span(&specht_basis(sn, l)?)?;
        let dim = dimension(sn, l)? as usize;
        let tableaux = standard_tableau_count(sn, l)? as usize;
        report.record("Specht basis rank", format!("({sn}, {l})"), rank == dim && dim == tableaux, || {
            format!("rank {rank}, dimension {dim}, standard tableaux {tableaux}")
        });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for t in 0..cfg.trials {
        let l = rng.gen_range(1..=m);
        let tableaux = standard_tableaux(n, l)?;
        let tab = &tableaux[rng.gen_range(0..tableaux.len())];
        let x = Permutation::random(n, &mut rng);
        let v = polytabloid(tab);
        let instance = format!("trial {t}: x = {x}, t = {tab}");
        let moved = act(&x, &v)?;
        report.record("polytabloid equivariance", instance.clone(), moved == polytabloid(&tab.act(&x)?), String::new);
        report.record(
            "lift equivariance",
            instance,
            lift_to_hoeffding(&moved, m)? == act(&x, &lift_to_hoeffding(&v, m)?)?,
            String::new,
        );
    }

    let indicators: Vec<ModuleVector> = enumerate_subsets(n, m)?.iter().map(indicator).collect();
    for l in 1..=m {
        let dim = dimension(n, l)? as usize;
        let lifted: Vec<ModuleVector> =
            specht_basis(n, l)?.iter().map(|v| lift_to_hoeffding(v, m)).collect::<Result<_>>()?;
        let image: Vec<ModuleVector> = indicators.iter().map(|e| project(e, l)).collect::<Result<_>>()?;

        let mut in_space = true;
        for v in &lifted {
            let d = decompose(v)?;
            for j in 0..=m {
                in_space &= if j == l { d.component(j) == v } else { d.component(j).is_zero() };
            }
        }
        report.record("lifted Specht vectors lie in the Hoeffding space", format!("l = {l}"), in_space, String::new);

        let r_lifted = rank_of_span(&lifted)?;
        let r_image = rank_of_span(&image)?;
        let union: Vec<ModuleVector> = lifted.iter().chain(&image).cloned().collect();
        let r_union = rank_of_span(&union)?;
        report.record(
            "span(lifted Specht basis) = image of projection",
            format!("l = {l}"),
            r_lifted == dim && r_image == dim && r_union == dim,
            || format!("ranks: lifted {r_lifted}, image {r_image}, union {r_union}, dimension {dim}"),
        );
    }
    Ok(report)
}

/// Which suites to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Decomposition,
    Equivalence,
    Shift,
    Specht,
}

impl std::str::FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "all" => Suite::All,
            "decomp" => Suite::Decomposition,
            "equiv" => Suite::Equivalence,
            "shift" => Suite::Shift,
            "specht" => Suite::Specht,
            other => return Err(Error::domain(format!("unknown suite {other:?}"))),
        })
    }
}

/// Runs the selected suites. With [`Suite::All`], suites that need a walk
/// over `S_n` are skipped (with a note) when `n` exceeds the ceiling.
pub fn run_suites(cfg: &RunConfig, suite: Suite) -> Result<Vec<VerificationReport>> {
    Ok(match suite {
        Suite::Decomposition => vec![verify_decomposition(cfg)?],
        Suite::Equivalence => vec![verify_equivalence(cfg)?],
        Suite::Shift => vec![verify_shift_orthogonality(cfg)?],
        Suite::Specht => vec![verify_specht(cfg)?],
        Suite::All => {
            let mut out = vec![verify_decomposition(cfg)?];
            if cfg.n <= cfg.ceiling {
                out.push(verify_equivalence(cfg)?);
                out.push(verify_shift_orthogonality(cfg)?);
            } else {
                let mut skipped = VerificationReport::new("equiv+shift", cfg);
                skipped
                    .notes
                    .push(format!("skipped: n = {} exceeds the brute-force ceiling {}", cfg.n, cfg.ceiling));
                out.push(skipped);
            }
            out.push(verify_specht(cfg)?);
            out
        }
    })
}

/// Wall-clock comparison of the kernel route and the character-sum route on
/// one seeded input.
#[derive(Clone, Debug)]
pub struct BenchReport {
    pub n: usize,
    pub m: usize,
    pub kernel: Duration,
    /// `None` when `n` exceeds the ceiling.
    pub oracle: Option<Duration>,
    /// Whether the two routes produced identical components.
    pub agree: Option<bool>,
}

impl BenchReport {
    /// Kernel route strictly faster; only asserted for `n >= 7`, `m >= 2`
    /// when the oracle ran.
    pub fn kernel_faster(&self) -> Option<bool> {
        match self.oracle {
            Some(o) if self.n >= 7 && self.m >= 2 => Some(self.kernel < o),
            _ => None,
        }
    }
}

pub fn bench(n: usize, m: usize, seed: u64, ceiling: usize) -> Result<BenchReport> {
    let cfg = RunConfig::new(n, m, seed, 1)?;
    let h = cfg.trial_vector(0);

    let start = Instant::now();
    let d = decompose(&h)?;
    let kernel = start.elapsed();

    let (oracle, agree) = if n <= ceiling {
        let start = Instant::now();
        let comps: Vec<ModuleVector> = IsotypicProjector::all(n, m, ceiling)?
            .iter()
            .map(|p| p.apply(&h))
            .collect::<Result<_>>()?;
        let elapsed = start.elapsed();
        (Some(elapsed), Some(comps == d.components))
    } else {
        (None, None)
    };
    Ok(BenchReport {
        n,
        m,
        kernel,
        oracle,
        agree,
    })
}
