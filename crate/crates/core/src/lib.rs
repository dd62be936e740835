//! Exact homological algebra for connected Nakayama algebras.
//!
//! An algebra is a [`KupischSeries`]; its indecomposable modules are the
//! interval modules `M(i, l)`. Projective, injective and Gorenstein
//! projective dimensions, dominant dimension and Ext dimensions are computed
//! combinatorially on isomorphism classes, and [`oracle`] recomputes the
//! basic quantities from explicit matrix representations over a prime field.

pub mod algebra;
pub mod classifier;
pub mod crosscheck;
pub mod error;
pub mod extended;
pub mod homology;
pub mod module;
pub mod notation;
pub mod oracle;
pub mod precluster;
pub mod sweep;

pub use algebra::{KupischSeries, Shape};
pub use error::{Error, Result};
pub use extended::ExtendedNat;
pub use homology::{Gorenstein, Resolution, ResolutionKind};
pub use module::{IntervalModule, ModuleSum};
