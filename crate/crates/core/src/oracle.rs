//! Bigraded dimensions of `W(Λ) ≅ A / A_Λ` straight from the ideal
//! generators, with no use of the recursions or the multisum.
//!
//! `A = C[y_(-1), y_(-2), ...]` is graded by charge (number of variables)
//! and weight (sum of indices), so a monomial is a partition. For level
//! `k` and `Λ = (k-i)Λ0 + iΛ1` the ideal is generated by
//!
//! * `r_(-w) = sum y_(-i_1) ... y_(-i_(k+1))` over ordered positive tuples
//!   with `i_1 + ... + i_(k+1) = w`, for every `w >= k + 1`,
//! * `y_(-1)^e` with `e = k + 1 - i`.
//!
//! The degree-`(m, w)` piece of the ideal is spanned by monomial multiples
//! of the generators; its dimension is an exact integer rank.

use std::borrow::Cow;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::series::{BiSeries, Coefficient};

/// `y_(-j_1) ... y_(-j_m)`, stored as the weakly decreasing list of `j`s.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct YMonomial {
    parts: Vec<usize>,
}

impl YMonomial {
    /// Sorts `parts`; returns `None` if any index is zero.
    pub fn new(mut parts: Vec<usize>) -> Option<Self> {
        if parts.contains(&0) {
            return None;
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Some(YMonomial { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn charge(&self) -> usize {
        self.parts.len()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn times(&self, other: &YMonomial) -> YMonomial {
        let mut parts = Vec::with_capacity(self.parts.len() + other.parts.len());
        parts.extend_from_slice(&self.parts);
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        YMonomial { parts }
    }
}

impl fmt::Display for YMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "1");
        }
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for &p in &self.parts {
            *counts.entry(p).or_default() += 1;
        }
        let mut first = true;
        for (p, c) in counts {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "y{p}")?;
            if c > 1 {
                write!(f, "^{c}")?;
            }
        }
        Ok(())
    }
}

/// Partitions of `w` into exactly `m` parts, lexicographically decreasing.
pub fn partitions_exact(w: usize, m: usize) -> Vec<YMonomial> {
    fn go(
        remaining: usize,
        slots: usize,
        max: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<YMonomial>,
    ) {
        if slots == 0 {
            if remaining == 0 {
                out.push(YMonomial { parts: cur.clone() });
            }
            return;
        }
        // each remaining slot needs at least 1
        if remaining < slots {
            return;
        }
        let top = max.min(remaining - (slots - 1));
        for p in (1..=top).rev() {
            if p * slots < remaining {
                break;
            }
            cur.push(p);
            go(remaining - p, slots - 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(w, m, w, &mut Vec::with_capacity(m), &mut out);
    out
}

fn factorial(n: usize) -> Coefficient {
    (1..=n).fold(Coefficient::one(), |acc, j| acc * j)
}

/// `r_(-w)` at level `k`: one entry per partition of `w` into `k + 1`
/// parts, weighted by the number of orderings of that partition.
pub fn r_polynomial(k: usize, w: usize) -> Result<Vec<(YMonomial, Coefficient)>> {
    if w < k + 1 {
        return Err(Error::WeightTooSmall { w, min: k + 1 });
    }
    let total = factorial(k + 1);
    Ok(partitions_exact(w, k + 1)
        .into_iter()
        .map(|mono| {
            let mut denom = Coefficient::one();
            for run in mono.parts.chunk_by(|a, b| a == b) {
                denom *= factorial(run.len());
            }
            let mult = &total / denom;
            (mono, mult)
        })
        .collect())
}

/// Generators of the ideal `A_Λ` for `Λ = (k + 1 - e)Λ0 + (e - 1)Λ1`.
#[derive(Clone, Debug)]
pub struct GeneratorSet {
    k: usize,
    e: usize,
    include_y_power: bool,
    r_polys: BTreeMap<usize, Vec<(YMonomial, Coefficient)>>,
}

impl GeneratorSet {
    /// Materializes `r_(-w)` for `k + 1 <= w <= w_max`.
    pub fn new(k: usize, e: usize, w_max: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroLevel);
        }
        if e == 0 || e > k + 1 {
            return Err(Error::InvalidExponent { k, e });
        }
        let r_polys = (k + 1..=w_max)
            .map(|w| r_polynomial(k, w).map(|p| (w, p)))
            .collect::<Result<_>>()?;
        Ok(GeneratorSet {
            k,
            e,
            include_y_power: true,
            r_polys,
        })
    }

    /// Drops the `y_(-1)^e` generator, leaving only the `r_(-w)`.
    pub fn without_y_power(mut self) -> Self {
        self.include_y_power = false;
        self
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn r_poly(&self, w: usize) -> Result<Cow<'_, [(YMonomial, Coefficient)]>> {
        match self.r_polys.get(&w) {
            Some(p) => Ok(Cow::Borrowed(p)),
            None => r_polynomial(self.k, w).map(Cow::Owned),
        }
    }
}

/// Dimension of the degree-`(m, w)` piece of the ideal.
pub fn ideal_span_dimension(gens: &GeneratorSet, m: usize, w: usize) -> usize {
    let basis = partitions_exact(w, m);
    if basis.is_empty() {
        return 0;
    }
    let index: HashMap<&YMonomial, usize> = basis.iter().enumerate().map(|(i, b)| (b, i)).collect();
    let mut rows: Vec<Vec<Coefficient>> = Vec::new();

    let g_charge = gens.k + 1;
    if m >= g_charge {
        for gw in g_charge..=w {
            let cofactors = partitions_exact(w - gw, m - g_charge);
            if cofactors.is_empty() {
                continue;
            }
            let poly = gens.r_poly(gw).expect("gw >= k + 1");
            for mu in &cofactors {
                let mut row = vec![Coefficient::zero(); basis.len()];
                for (mono, c) in poly.iter() {
                    row[index[&mu.times(mono)]] += c;
                }
                rows.push(row);
            }
        }
    }
    if gens.include_y_power && m >= gens.e && w >= gens.e {
        let power = YMonomial {
            parts: vec![1; gens.e],
        };
        for mu in partitions_exact(w - gens.e, m - gens.e) {
            let mut row = vec![Coefficient::zero(); basis.len()];
            row[index[&mu.times(&power)]] += 1;
            rows.push(row);
        }
    }
    exact_rank(rows)
}

/// `p(w, m) - dim(ideal piece)`.
pub fn quotient_dimension(gens: &GeneratorSet, m: usize, w: usize) -> usize {
    partitions_exact(w, m).len() - ideal_span_dimension(gens, m, w)
}

/// Rank of an integer matrix by fraction-free elimination. After each
/// elimination step rows are divided by their content to keep entries small.
pub fn exact_rank(mut rows: Vec<Vec<Coefficient>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let prow = &head[rank];
        let p = &prow[col];
        for row in tail.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, y) in row.iter_mut().zip(prow.iter()).skip(col) {
                *x = &*x * p - &factor * y;
            }
            remove_content(row);
        }
        rank += 1;
    }
    rank
}

fn remove_content(row: &mut [Coefficient]) {
    let g = row.iter().fold(Coefficient::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// Exact quotient dimensions `dim(m, w)` for `m <= m_max`, `w <= w_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionTable {
    pub k: usize,
    pub e: usize,
    entries: Vec<Vec<u64>>,
}

impl DimensionTable {
    pub fn m_max(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn w_max(&self) -> usize {
        self.entries[0].len() - 1
    }

    pub fn dim(&self, m: usize, w: usize) -> u64 {
        self.entries[m][w]
    }

    /// `sum dim(m, w) x^m q^w`.
    pub fn to_series(&self) -> BiSeries {
        let mut s = BiSeries::zero(self.m_max(), self.w_max());
        for (m, row) in self.entries.iter().enumerate() {
            for (w, &d) in row.iter().enumerate() {
                *s.at_mut(m, w) = d.into();
            }
        }
        s
    }

    /// Header `m\tw\tdim`, then one line per cell in `(m, w)` order.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("m\tw\tdim\n");
        for (m, row) in self.entries.iter().enumerate() {
            for (w, d) in row.iter().enumerate() {
                out.push_str(&format!("{m}\t{w}\t{d}\n"));
            }
        }
        out
    }
}

/// The bigraded Hilbert series of `A / A_Λ` on the window `(m_max, w_max)`.
/// Its series image equals the normalized character `F_(e-1)`.
pub fn hilbert_table(k: usize, e: usize, m_max: usize, w_max: usize) -> Result<DimensionTable> {
    let gens = GeneratorSet::new(k, e, w_max)?;
    Ok(table_for(&gens, m_max, w_max))
}

/// Same as [`hilbert_table`] for an arbitrary generator set.
pub fn table_for(gens: &GeneratorSet, m_max: usize, w_max: usize) -> DimensionTable {
    let entries = (0..=m_max)
        .map(|m| {
            (0..=w_max)
                .map(|w| {
                    if m == 0 {
                        u64::from(w == 0)
                    } else if w < m {
                        0
                    } else {
                        quotient_dimension(gens, m, w) as u64
                    }
                })
                .collect()
        })
        .collect();
    DimensionTable {
        k: gens.k,
        e: gens.e,
        entries,
    }
}
