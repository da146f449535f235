//! The double cover S̃_n realized inside a real Clifford algebra, with
//! conjugacy classes, canonical representatives, z-signs and element orders.

mod class;
mod element;
mod perm;

pub use class::{
    canonical_rep, canonical_word, class_epsilon, class_of, class_size, classes, epsilon, group_order, label_rep,
    label_word, order, power_class, power_map, splits_in_a, splits_in_s, AltTag, ClassLabel, Group,
};
pub use element::{CoverElement, Word};
pub use perm::Perm;

pub type EpsilonSign = crate::partitions::Sign;

#[cfg(test)]
mod tests;
