//! Exact topological invariants of Fano threefolds presented as weighted
//! complete intersections, and of the Calabi-Yau threefolds that double
//! cover their Fano-Enriques quotients.
//!
//! The computation runs in two independent directions. [`varieties`]
//! expands total Chern classes as truncated power series over `Q`;
//! [`covers`] applies closed formulas for the double cover. [`catalog`]
//! ties both to the four families of Picard number one.

pub mod catalog;
pub mod covers;
pub mod exactnum;
pub mod varieties;

pub use catalog::{builtin_families, table1, FanoRecord, Table1Row};
pub use covers::{cover_invariants, CoverError, CoverInvariants, FanoInput};
pub use exactnum::{Rational, SeriesError, TruncSeries};
pub use varieties::{IntrinsicInvariants, ModelError, WciModel};
