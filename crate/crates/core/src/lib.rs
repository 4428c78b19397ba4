//! Tournaments, exact path-length spectra and verification campaigns for
//! path-extension properties of regular tournaments with deleted vertices.

pub mod checks;
pub mod configuration;
pub mod constructions;
pub mod error;
pub mod facts;
pub mod format;
pub mod generators;
pub mod gshape;
pub mod labeled;
pub mod spectrum;
pub mod tournament;
pub mod verify;
pub mod vertex_set;

pub use error::{Error, Result};
pub use labeled::LabeledTournament;
pub use spectrum::{LengthSet, PathSpectrum};
pub use tournament::{DegreeSummary, Tournament, MAX_ORDER};
pub use vertex_set::VertexSet;
