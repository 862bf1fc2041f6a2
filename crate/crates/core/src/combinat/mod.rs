//! Partitions, Weyl groups, ρ-vectors and classical character numerators.

pub mod characters;
pub mod labels;
pub mod partitions;
pub mod weyl;

pub use characters::{c_lambda, char_numerator, weyl_denominator, CharKind, LaurentPoly};
pub use labels::{highest_weight_label, Algebra, WeightLabel};
pub use partitions::{
    gen_partitions, partitions, partitions_by_energy, partitions_of, strict_partitions,
    strict_partitions_by_energy, GenPartition, Length, Partition, StrictPartition,
};
pub use weyl::{k_vector, weyl_group, RhoVector, WeylElement, WeylType, MAX_RANK};
