//! Eccentricities, centers and certificates of distance-hereditary graphs.
//!
//! The main entry points are [`pruning::is_distance_hereditary`],
//! [`ecc_exact::all_eccentricities`] (exact, one pass over a layered
//! pruning sequence) and [`graph::all_pairs_ecc_oracle`], the BFS ground
//! truth everything else is tested against.

pub mod audit;
pub mod builders;
pub mod center;
pub mod certificates;
pub mod ecc_exact;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod io;
pub mod pruning;

pub use error::{Error, Result};
pub use graph::{all_pairs_ecc_oracle, bfs, DistanceMatrix, DistanceRow, EccTable, Graph};
