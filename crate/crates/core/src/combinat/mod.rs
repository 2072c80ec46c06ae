//! Partitions, permutations, set partitions, Stirling numbers and the small
//! amount of number theory the character formulas need.

mod closure;
mod numtheory;
mod partition;
mod perm;
mod setpart;
mod stirling;

pub use closure::{cyclic_group_classes, subgroup_closure, SubgroupClasses};
pub use numtheory::{divisors, euler_phi, mobius, number_theory};
pub use partition::{centralizer_order, class_size, partitions, CycleType};
pub use perm::Permutation;
pub use setpart::{fixed_partitions, set_partitions, SetPartition};
pub use stirling::{binomial, factorial, stirling, stirling_second_explicit, StirlingKind};
