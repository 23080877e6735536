//! Combinatorial model of higher cluster categories of type D.
//!
//! The indecomposable objects of the m-cluster category of type `D_n` are
//! modelled by m-arcs of a regular 2N-gon, `N = mn - m + 1`, taken up to the
//! 180° rotation, plus diameters in two colours. For odd m this crate
//! decides which arc sets are Ptolemy diagrams, computes the perpendicular
//! sets that realize torsion pairs, and enumerates rigid sets and
//! (m+2)-angulations. A second, punctured N-gon model is provided together
//! with the isomorphism of translation quivers between the two.

pub mod angulation;
pub mod arcset;
pub mod cli;
pub mod context;
pub mod error;
pub mod homcalc;
pub mod model;
pub mod polygon;
pub mod ptolemy;
pub mod punctured;
pub mod quiver;

pub use arcset::{ArcSet, BitSet};
pub use context::Model;
pub use error::{Error, Result};
pub use model::ModelParams;
pub use polygon::{ArcUniverse, Chord, Color, PairedArc};
pub use ptolemy::{Strategy, TorsionPair, Violation};
pub use punctured::{Tag, TaggedArc};
pub use quiver::{ExportFormat, TranslationQuiver};
