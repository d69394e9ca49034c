//! Exact enumeration of labeled directed-graph families.
//!
//! The engine works with truncated formal power series whose coefficients
//! are integer polynomials in an edge marker `w` and a feature marker `u`.
//! Two coefficient conventions coexist: the exponential generating function
//! (EGF) and the graphic generating function (GGF), whose product encodes
//! the arrow product of digraph families. The [`catalog`] module composes
//! these operations into closed forms for DAGs, strongly connected
//! digraphs, digraphs with restricted SCCs and initially connected
//! digraphs, and the [`oracle`] module validates every formula against
//! exhaustive small-n enumeration.

pub mod binomial;
pub mod catalog;
pub mod cli;
pub mod coeff;
pub mod error;
pub mod oracle;
pub mod selftest;
pub mod series;
pub mod table;

pub use coeff::{CoeffMode, CoeffPoly};
pub use error::{Error, Result};
pub use series::{Series, SeriesKind};
pub use table::{FamilyTable, TableRow};
