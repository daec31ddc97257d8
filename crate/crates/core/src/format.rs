//! Text formats.
//!
//! A module vector file holds an `n` and an `l` header followed by one
//! record per subset:
//!
//! ```text
//! n = 6
//! l = 2
//! 1,3 = -7/3
//! 5,6 = 2
//! ```
//!
//! Omitted subsets are zero, `#` starts a comment line. A decomposition file
//! holds `n`, `m` and `mean` headers followed by `[kernel l]` sections
//! (`l = 1..=m`) and `[component l]` sections (`l = 0..=m`), each in module
//! vector format.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::{ModuleVector, Rational};
use crate::combinatorics::Subset;
use crate::error::{Error, Result};
use crate::hoeffding::HoeffdingDecomposition;

pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(text: &str) -> std::result::Result<Rational, String> {
    let text = text.trim();
    let int = |t: &str| t.trim().parse::<BigInt>().map_err(|_| format!("bad integer {t:?}"));
    match text.split_once('/') {
        Some((p, q)) => {
            let q = int(q)?;
            if q.is_zero() {
                return Err(format!("zero denominator in {text:?}"));
            }
            Ok(Rational::new(int(p)?, q))
        }
        None => Ok(Rational::from_integer(int(text)?)),
    }
}

/// Module vector text, zero entries omitted.
pub fn write_module_vector(v: &ModuleVector) -> String {
    let mut out = format!("n = {}\nl = {}\n", v.n(), v.l());
    for (s, value) in v.iter() {
        if !value.is_zero() {
            writeln!(out, "{s} = {}", format_rational(value)).unwrap();
        }
    }
    out
}

pub fn parse_module_vector(text: &str) -> Result<ModuleVector> {
    let lines: Vec<(usize, &str)> = text.lines().enumerate().map(|(i, l)| (i + 1, l)).collect();
    parse_vector_lines(&lines, lines.last().map_or(1, |l| l.0))
}

fn content(line: &str) -> Option<&str> {
    let t = line.trim();
    (!t.is_empty() && !t.starts_with('#')).then_some(t)
}

fn header<'a>(line_no: usize, text: &'a str, key: &str) -> Result<&'a str> {
    match text.split_once('=') {
        Some((k, v)) if k.trim() == key => Ok(v.trim()),
        _ => Err(Error::parse(line_no, format!("expected header `{key} = ...`, found {text:?}"))),
    }
}

fn header_usize(line_no: usize, text: &str, key: &str) -> Result<usize> {
    let v = header(line_no, text, key)?;
    v.parse()
        .map_err(|_| Error::parse(line_no, format!("`{key}` must be a non-negative integer, found {v:?}")))
}

fn parse_vector_lines(lines: &[(usize, &str)], end_line: usize) -> Result<ModuleVector> {
    let mut it = lines.iter().filter_map(|&(no, l)| content(l).map(|c| (no, c)));
    let (no, first) = it.next().ok_or_else(|| Error::parse(end_line, "missing `n` header"))?;
    let n = header_usize(no, first, "n")?;
    let (no, second) = it.next().ok_or_else(|| Error::parse(end_line, "missing `l` header"))?;
    let l = header_usize(no, second, "l")?;
    let mut v = ModuleVector::zero(n, l).map_err(|e| Error::parse(no, e.to_string()))?;
    let mut seen = std::collections::HashSet::new();
    for (no, rec) in it {
        let (lhs, rhs) = rec
            .split_once('=')
            .ok_or_else(|| Error::parse(no, format!("expected `subset = value`, found {rec:?}")))?;
        let s = Subset::parse(n, lhs).map_err(|e| Error::parse(no, e.to_string()))?;
        if s.len() != l {
            return Err(Error::parse(no, format!("subset {s} has size {}, expected {l}", s.len())));
        }
        if !seen.insert(s) {
            return Err(Error::parse(no, format!("subset {s} listed twice")));
        }
        let value = parse_rational(rhs).map_err(|e| Error::parse(no, e))?;
        v.set(&s, value);
    }
    Ok(v)
}

pub fn write_decomposition(d: &HoeffdingDecomposition) -> String {
    let mut out = format!(
        "# hoeffding decomposition\nn = {}\nm = {}\nmean = {}\n",
        d.n,
        d.m,
        format_rational(&d.mean)
    );
    for (i, k) in d.kernels.iter().enumerate() {
        write!(out, "\n[kernel {}]\n{}", i + 1, write_module_vector(k)).unwrap();
    }
    for (l, c) in d.components.iter().enumerate() {
        write!(out, "\n[component {l}]\n{}", write_module_vector(c)).unwrap();
    }
    out
}

pub fn parse_decomposition(text: &str) -> Result<HoeffdingDecomposition> {
    let lines: Vec<(usize, &str)> = text.lines().enumerate().map(|(i, l)| (i + 1, l)).collect();
    let end_line = lines.last().map_or(1, |l| l.0);

    // split at section headers
    let mut preamble: Vec<(usize, &str)> = Vec::new();
    let mut sections: Vec<(usize, String, Vec<(usize, &str)>)> = Vec::new();
    for &(no, line) in &lines {
        let t = line.trim();
        if t.starts_with('[') {
            let name = t
                .strip_prefix('[')
                .and_then(|r| r.strip_suffix(']'))
                .ok_or_else(|| Error::parse(no, format!("malformed section header {t:?}")))?;
            sections.push((no, name.trim().to_string(), Vec::new()));
        } else if let Some(sec) = sections.last_mut() {
            sec.2.push((no, line));
        } else {
            preamble.push((no, line));
        }
    }

    let mut it = preamble.iter().filter_map(|&(no, l)| content(l).map(|c| (no, c)));
    let mut next = |key: &str| {
        it.next()
            .ok_or_else(|| Error::parse(end_line, format!("missing `{key}` header")))
            .and_then(|(no, t)| header(no, t, key).map(|v| (no, v.to_string())))
    };
    let (no, n) = next("n")?;
    let n: usize = n.parse().map_err(|_| Error::parse(no, "bad `n`"))?;
    let (no, m) = next("m")?;
    let m: usize = m.parse().map_err(|_| Error::parse(no, "bad `m`"))?;
    let (no, mean) = next("mean")?;
    let mean = parse_rational(&mean).map_err(|e| Error::parse(no, e))?;

    let mut kernels: Vec<Option<ModuleVector>> = vec![None; m];
    let mut components: Vec<Option<ModuleVector>> = vec![None; m + 1];
    for (no, name, body) in &sections {
        let (kind, idx) = name
            .split_once(' ')
            .ok_or_else(|| Error::parse(*no, format!("unknown section [{name}]")))?;
        let idx: usize = idx
            .trim()
            .parse()
            .map_err(|_| Error::parse(*no, format!("bad section index in [{name}]")))?;
        let slot = match kind {
            "kernel" if (1..=m).contains(&idx) => &mut kernels[idx - 1],
            "component" if idx <= m => &mut components[idx],
            _ => return Err(Error::parse(*no, format!("unexpected section [{name}]"))),
        };
        if slot.is_some() {
            return Err(Error::parse(*no, format!("section [{name}] repeated")));
        }
        let v = parse_vector_lines(body, *no)?;
        let expected_l = if kind == "kernel" { idx } else { m };
        if v.n() != n || v.l() != expected_l {
            return Err(Error::parse(
                *no,
                format!("section [{name}] must have n = {n}, l = {expected_l}"),
            ));
        }
        *slot = Some(v);
    }
    let collect = |v: Vec<Option<ModuleVector>>, kind: &str, offset: usize| {
        v.into_iter()
            .enumerate()
            .map(|(i, x)| x.ok_or_else(|| Error::parse(end_line, format!("missing section [{kind} {}]", i + offset))))
            .collect::<Result<Vec<_>>>()
    };
    Ok(HoeffdingDecomposition {
        n,
        m,
        mean,
        kernels: collect(kernels, "kernel", 1)?,
        components: collect(components, "component", 0)?,
    })
}
