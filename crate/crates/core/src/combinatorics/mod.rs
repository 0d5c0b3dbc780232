//! Partitions, compositions, orders, tableaux and bricks.

pub mod bricks;
mod composition;
mod partition;
mod perm;
pub mod reduction;
mod tableau;

pub use composition::{compare_order, distinct_permutations, lower_set, rank_function, Composition, Order};
pub use partition::Partition;
pub use perm::Perm;
pub use tableau::{enumerate_rsyt, rsyt_from_contents, Tableau};
