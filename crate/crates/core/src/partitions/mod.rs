//! Integer partitions, boundary profiles, horizontal strips, hooks and orders.

mod order;
mod partition;
mod profile;
mod strips;

pub use order::{order_compare, Comparison, PartitionOrder};
pub use partition::{partitions_of, partitions_up_to, subpartitions, Partition};
pub use profile::{partition_of_profile, profile_of, BoxCoords, HookStats, Profile};
pub use strips::{
    for_each_strip_down, for_each_strip_up, is_horizontal_strip, is_strip, strip_neighbors, Direction,
    StripBound, StripKind,
};
