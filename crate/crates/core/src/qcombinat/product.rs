use crate::series::BiSeries;

use super::GordonCondition;

/// `(q)_n = (1 - q)(1 - q^2)...(1 - q^n)` truncated at `q^N`.
pub fn pochhammer(n: usize, q_order: usize) -> BiSeries {
    (1..=n.min(q_order)).fold(BiSeries::one(0, q_order), |acc, j| {
        acc * BiSeries::one_minus_q_power(j, 0, q_order)
    })
}

/// `1 / (q)_n`: partitions into parts of size at most `n`.
pub fn inverse_pochhammer(n: usize, q_order: usize) -> BiSeries {
    (1..=n.min(q_order)).fold(BiSeries::one(0, q_order), |acc, j| {
        acc.div_one_minus_q_power(j).expect("j >= 1")
    })
}

/// `prod 1/(1 - q^i)` over `i` not congruent to `0, ±t` modulo `2l + 1`.
pub fn gordon_product(cond: GordonCondition, q_order: usize) -> BiSeries {
    (1..=q_order)
        .filter(|&i| cond.allows_part(i))
        .fold(BiSeries::one(0, q_order), |acc, i| {
            acc.div_one_minus_q_power(i).expect("i >= 1")
        })
}
