//! q-Pochhammer symbols, the Gordon product side, the Andrews–Gordon
//! multisum and partition counts under Gordon's conditions.

mod multisum;
mod partition;
mod product;

pub use multisum::{andrews_gordon_multisum, lossless_q_window, min_weight_for_charge};
pub use partition::{
    count_congruence_partitions, count_gordon_partitions, count_gordon_partitions_refined,
    gordon_counts_by_charge, GordonCondition, Partition,
};
pub use product::{gordon_product, inverse_pochhammer, pochhammer};
