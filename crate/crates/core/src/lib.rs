//! Bijection between `(s, s+2)`-core partitions with distinct parts (`s`
//! odd) and lattice paths of length `s` ending at a positive height, plus
//! the brute-force oracles used to check it.
//!
//! The pipeline runs partition -> beta-set -> order ideal of the gap poset
//! `P(s, s+2)` -> balanced ideal of the strip poset -> lattice path, and
//! every step is invertible.

pub mod bijection;
pub mod error;
pub mod gap_poset;
pub mod oracle;
pub mod partition;
pub mod render;

pub use bijection::{
    backward, forward, from_path, partition_to_path, path_to_partition, to_path, trace_partition,
    BalancedIdeal, LatticePath, SideTag, Step, Trace,
};
pub use error::{Error, Result};
pub use gap_poset::{CoprimePair, GapIdeal, PlaneCoord, DEFAULT_POSET_LIMIT};
pub use oracle::CountReport;
pub use partition::{BetaSet, Partition};
