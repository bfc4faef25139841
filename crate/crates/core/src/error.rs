use thiserror::Error;

use crate::algebra::VertexId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Kupisch series: {0}")]
    InvalidKupisch(String),

    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),

    #[error("operation needs a nonzero algebra")]
    ZeroAlgebra,

    #[error("P{0} is not projective-injective")]
    NotProjectiveInjective(VertexId),

    #[error("module or vertex does not belong to this algebra: {0}")]
    DifferentAlgebra(String),

    #[error("algebra is not a connected cyclic Nakayama algebra")]
    NotCyclicConnected,

    #[error("algebra is not a connected linear Nakayama algebra")]
    NotLinear,

    #[error("algebra is not laid out on the positions 1..n of a polygon")]
    NotPolygonal,

    #[error("module is not tau-tilting")]
    NotTauTilting,

    #[error("value outside the domain of the map: {0}")]
    NotInDomain(String),

    #[error("arc {arc} is longer than the Loewy length {loewy} of its terminal projective")]
    ArcTooLong { arc: String, loewy: u32 },

    #[error("indecomposable module is not tau-rigid: {0}")]
    NotTauRigid(String),

    #[error("every projective needs Loewy length at least {needed}, found {found}")]
    LoewyTooSmall { needed: u32, found: u32 },

    #[error("arc {0} is not part of the triangulation")]
    ArcNotPresent(String),

    #[error("algebra too large: {0}")]
    TooLarge(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("verification mismatch:\n{0}")]
    Mismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
