//! Exact construction and cross-validation of Ward-number triangles.
//!
//! Nine triangle families are provided: Ward numbers of both kinds,
//! Ward-Lah numbers, and their "varied" and "binomial" rescalings. Each can
//! be built by several independent strategies (triangular recurrence,
//! closed form, partition transformation, rescaling of a base family,
//! alternating Lah sum), and [`identities`] verifies the recurrences,
//! generating functions and row-sum relations they satisfy.
//!
//! ```
//! use ward_core::{triangle, Strategy, TriangleKind};
//!
//! let t = triangle(TriangleKind::Ward2, 3, Strategy::Recurrence).unwrap();
//! assert_eq!(t.get(3, 2), 10.into());
//! ```
//!
//! All arithmetic is exact. With the default `parallel` feature, per-entry
//! work and identity checks run on the rayon pool.

pub mod arith;
mod error;
pub mod exec;
pub mod identities;
pub mod partition;
pub mod triangle;

pub use arith::{Integer, Rational};
pub use error::Error;
pub use exec::Execution;
pub use identities::{CheckReport, PowerSeries};
pub use partition::{enumerate_partitions, partition_transform, ArgumentSequence, Partition};
pub use triangle::{build, triangle, value, Strategy, Triangle, TriangleCache, TriangleKind};
