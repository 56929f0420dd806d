//! Growth-diagram correspondences: Fomin's local rules, Robinson's correspondence,
//! block permutations, the RSK and Burge pipelines and the Burge strip rule.

mod blocks;
mod burge;
mod fomin;
mod pipeline;
mod robinson;
mod tableaux;

pub use blocks::{block_decode, block_encode, Flavor, IntegerMatrix};
pub use burge::{burge_down, burge_up};
pub use fomin::{fomin_forward, fomin_reverse};
pub use pipeline::{correspondence_forward, correspondence_reverse, TableauPair};
pub use robinson::{
    robinson_forward, robinson_reverse, PartialPermutation, PartitionChain, RobinsonPair, RobinsonPreimage,
};
pub use tableaux::{tableau_counts, Tableau};
