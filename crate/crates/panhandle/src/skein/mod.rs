//! Independent HOMFLY-PT evaluation of link diagrams by the skein relation.

pub mod braid;
pub mod diagram;
pub mod engine;

pub use braid::{reverse_cable_braid, BraidWord};
pub use diagram::{Crossing, Edge, PlanarDiagram};
pub use engine::{clear_memo, crossing_budget, homfly, homfly_with, SkeinOptions, DEFAULT_MAX_CROSSINGS};
