//! Index-type invariants of virtual knots computed from signed Gauss codes.
//!
//! The pipeline is: parse a [`GaussCode`], label its arcs, read off crossing
//! indices and n-writhes, smooth every crossing against the orientation, and
//! assemble the two-variable L and F polynomial families into an
//! [`InvariantBundle`].

pub mod cli;
pub mod codec;
pub mod corpus;
pub mod invariants;
pub mod laurent;
pub mod lfpoly;
pub mod moves;
pub mod report;
pub mod transforms;

use thiserror::Error;

pub use codec::{CodecError, Crossing, GaussCode, Pass, Sign, Strand};
pub use invariants::{ArcLabeling, IndexedCrossing, WritheTable};
pub use laurent::LaurentPoly2;
pub use lfpoly::{CosmeticVerdict, InvariantBundle, Verdict, Witness};
pub use moves::{MoveKind, MoveSite};
pub use transforms::SmoothedDiagram;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Codec(#[from] CodecError),
    #[error("no crossing labeled {0}")]
    UnknownCrossing(u32),
    #[error("move site does not apply: {0}")]
    InvalidSite(String),
    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
}

impl Error {
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Codec(e) => e.kind(),
            Error::UnknownCrossing(_) => "UnknownCrossing",
            Error::InvalidSite(_) => "InvalidSite",
            Error::UnknownFixture(_) => "UnknownFixture",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
