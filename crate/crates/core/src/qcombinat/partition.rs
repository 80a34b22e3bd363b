use std::fmt;

use crate::error::{Error, Result};
use crate::series::Coefficient;

/// A partition `b_1 >= b_2 >= ... >= b_s > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Returns `None` unless the parts are positive and weakly decreasing.
    pub fn new(parts: Vec<usize>) -> Option<Self> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        ok.then_some(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn charge(&self) -> usize {
        self.parts.len()
    }

    pub fn satisfies(&self, cond: GordonCondition) -> bool {
        let ones = self.parts.iter().filter(|&&p| p == 1).count();
        let span = cond.l - 1;
        ones < cond.t && self.parts.windows(span + 1).all(|w| w[0] >= w[span] + 2)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.parts)
    }
}

/// Gordon's parameters: difference two at distance `l - 1`, at most `t - 1`
/// parts equal to one. The level is `k = l - 1` and the weight index is
/// `i = t - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GordonCondition {
    l: usize,
    t: usize,
}

impl GordonCondition {
    pub fn new(l: usize, t: usize) -> Result<Self> {
        if l < 2 || t < 1 || t > l {
            return Err(Error::InvalidGordon { l, t });
        }
        Ok(GordonCondition { l, t })
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn level(&self) -> usize {
        self.l - 1
    }

    pub fn index(&self) -> usize {
        self.t - 1
    }

    pub fn modulus(&self) -> usize {
        2 * self.l + 1
    }

    /// Whether `part` avoids the residues `0, ±t` modulo `2l + 1`.
    pub fn allows_part(&self, part: usize) -> bool {
        let r = part % self.modulus();
        r != 0 && r != self.t && r != self.modulus() - self.t
    }
}

/// Counts Gordon partitions of `n` by number of parts; entry `m` of the
/// result is the count with exactly `m` parts.
pub fn gordon_counts_by_charge(cond: GordonCondition, n: usize) -> Vec<u64> {
    let mut counts = vec![0u64; n + 1];
    let mut stack = Vec::with_capacity(n);
    descend(cond, n, n, 0, &mut stack, &mut counts);
    counts
}

// Parts are chosen in decreasing order; the condition is prefix-closed, so
// any violation prunes the whole subtree.
fn descend(
    cond: GordonCondition,
    remaining: usize,
    max_part: usize,
    ones: usize,
    stack: &mut Vec<usize>,
    counts: &mut [u64],
) {
    if remaining == 0 {
        counts[stack.len()] += 1;
        return;
    }
    let span = cond.l - 1;
    let ceiling = stack
        .len()
        .checked_sub(span)
        .map(|pos| stack[pos].saturating_sub(2))
        .unwrap_or(usize::MAX);
    let top = max_part.min(remaining).min(ceiling);
    for p in (1..=top).rev() {
        let ones = ones + usize::from(p == 1);
        if ones >= cond.t {
            continue;
        }
        stack.push(p);
        descend(cond, remaining - p, p, ones, stack, counts);
        stack.pop();
    }
}

pub fn count_gordon_partitions(cond: GordonCondition, n: usize) -> Coefficient {
    gordon_counts_by_charge(cond, n).iter().sum::<u64>().into()
}

/// Gordon partitions of `n` with exactly `m` parts.
pub fn count_gordon_partitions_refined(cond: GordonCondition, n: usize, m: usize) -> Coefficient {
    if m > n {
        return Coefficient::from(0);
    }
    gordon_counts_by_charge(cond, n)[m].into()
}

/// Partitions of `n` into parts not congruent to `0, ±t` modulo `2l + 1`.
pub fn count_congruence_partitions(cond: GordonCondition, n: usize) -> Coefficient {
    let allowed: Vec<usize> = (1..=n).rev().filter(|&p| cond.allows_part(p)).collect();
    fn go(allowed: &[usize], remaining: usize) -> u64 {
        if remaining == 0 {
            return 1;
        }
        let mut total = 0;
        for (idx, &p) in allowed.iter().enumerate() {
            if p <= remaining {
                total += go(&allowed[idx..], remaining - p);
            }
        }
        total
    }
    go(&allowed, n).into()
}

#[cfg(test)]
mod tests {
    use super::*;

    // All partitions of n, generated without any pruning.
    fn all_partitions(n: usize) -> Vec<Vec<usize>> {
        fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if n == 0 {
                out.push(cur.clone());
                return;
            }
            for p in (1..=n.min(max)).rev() {
                cur.push(p);
                go(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    fn brute_gordon(l: usize, t: usize, n: usize, m: Option<usize>) -> u64 {
        all_partitions(n)
            .into_iter()
            .filter(|p| m.is_none_or(|m| p.len() == m))
            .filter(|p| p.iter().filter(|&&x| x == 1).count() < t)
            .filter(|p| (0..p.len()).all(|j| j + l > p.len() || p[j] - p[j + l - 1] >= 2))
            .count() as u64
    }

    fn brute_congruence(l: usize, t: usize, n: usize) -> u64 {
        let md = 2 * l + 1;
        all_partitions(n)
            .into_iter()
            .filter(|p| {
                p.iter()
                    .all(|&x| x % md != 0 && x % md != t && x % md != md - t)
            })
            .count() as u64
    }

    fn cond(l: usize, t: usize) -> GordonCondition {
        GordonCondition::new(l, t).unwrap()
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(GordonCondition::new(1, 1).is_err());
        assert!(GordonCondition::new(2, 0).is_err());
        assert!(GordonCondition::new(2, 3).is_err());
        assert!(GordonCondition::new(3, 3).is_ok());
    }

    #[test]
    fn partition_type() {
        assert!(Partition::new(vec![3, 1, 1]).is_some());
        assert!(Partition::new(vec![1, 3]).is_none());
        assert!(Partition::new(vec![2, 0]).is_none());
        let p = Partition::new(vec![5, 3, 1]).unwrap();
        assert_eq!((p.weight(), p.charge()), (9, 3));
        assert!(!Partition::new(vec![4, 2, 1]).unwrap().satisfies(cond(2, 2)));
        assert!(p.satisfies(cond(2, 2)));
        assert!(!p.satisfies(cond(2, 1)));
        assert!(Partition::empty().satisfies(cond(2, 1)));
    }

    #[test]
    fn small_counts() {
        assert_eq!(brute_gordon(2, 2, 4, None), 2);
        assert_eq!(brute_gordon(3, 1, 3, None), 1);
        assert_eq!(brute_gordon(2, 2, 4, Some(2)), 1);
        assert_eq!(brute_congruence(2, 2, 4), 2);
        assert_eq!(brute_congruence(2, 1, 4), 1);

        for l in 2..5 {
            for t in 1..=l {
                assert_eq!(count_gordon_partitions(cond(l, t), 0), 1.into());
                assert_eq!(count_congruence_partitions(cond(l, t), 0), 1.into());
            }
        }
        assert_eq!(count_gordon_partitions(cond(2, 2), 4), 2.into());
        assert_eq!(count_gordon_partitions(cond(3, 1), 3), 1.into());
        assert_eq!(count_gordon_partitions_refined(cond(2, 2), 4, 2), 1.into());
        assert_eq!(count_gordon_partitions_refined(cond(2, 2), 0, 0), 1.into());
        assert_eq!(count_gordon_partitions_refined(cond(2, 2), 5, 0), 0.into());
        assert_eq!(count_gordon_partitions_refined(cond(2, 2), 3, 9), 0.into());
        assert_eq!(count_congruence_partitions(cond(2, 2), 4), 2.into());
        assert_eq!(count_congruence_partitions(cond(2, 1), 4), 1.into());
    }

    #[test]
    fn pruned_enumeration_matches_brute_force() {
        for l in 2..5 {
            for t in 1..=l {
                for n in 0..=16 {
                    let by_charge = gordon_counts_by_charge(cond(l, t), n);
                    for (m, &c) in by_charge.iter().enumerate() {
                        assert_eq!(c, brute_gordon(l, t, n, Some(m)), "l={l} t={t} n={n} m={m}");
                    }
                    assert_eq!(
                        count_congruence_partitions(cond(l, t), n),
                        brute_congruence(l, t, n).into(),
                        "l={l} t={t} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn gordon_identities_small_range() {
        for l in 2..=4 {
            for t in 1..=l {
                for n in 0..=30 {
                    assert_eq!(
                        count_gordon_partitions(cond(l, t), n),
                        count_congruence_partitions(cond(l, t), n),
                        "l={l} t={t} n={n}"
                    );
                }
            }
        }
    }
}
