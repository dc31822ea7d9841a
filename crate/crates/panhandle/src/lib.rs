//! Exact colored HOMFLY-PT invariants of torus links, reverse 2-cable
//! polynomials and their panhandle structure, a skein-relation oracle, and
//! grid-diagram invariants.

pub mod adams;
pub mod bracket;
pub mod cable;
pub mod coeff;
pub mod composite;
pub mod conventions;
pub mod error;
pub mod grid;
pub mod laurent;
pub mod reference;
pub mod rosso_jones;
pub mod skein;
pub mod verify;
pub mod young;
pub mod zv;

pub use adams::AdamsExpansion;
pub use bracket::{Bracket, BracketForm, BracketKind, Fraction};
pub use cable::{FramingVector, PanhandleDecomposition};
pub use composite::CompositeRep;
pub use coeff::{Integer, Rational};
pub use error::{Error, Result};
pub use grid::GridDiagram;
pub use laurent::{Exp, Laurent1, Laurent2, LaurentPoly1, LaurentPoly2};
pub use rosso_jones::TorusParams;
pub use young::Partition;
pub use zv::ZVTable;
