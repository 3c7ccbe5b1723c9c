//! Error type shared by all engine operations.

use crate::coeff::CoeffRing;
use crate::ring::{Generator, RingSpec};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Scalars from two different coefficient rings were combined.
    #[error("coefficient ring mismatch: {left} vs {right}")]
    CoeffRingMismatch { left: CoeffRing, right: CoeffRing },

    /// Classes over two different rings were combined.
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: RingSpec, right: RingSpec },

    /// The requested ring violates a [`RingSpec`] invariant.
    #[error("invalid ring: {0}")]
    InvalidRing(String),

    /// A monomial uses a generator the ring does not have.
    #[error("unknown generator {generator} in {ring}")]
    UnknownGenerator { generator: Generator, ring: RingSpec },

    /// An operation requiring a homogeneous class received a mixed-degree one.
    #[error("class is not homogeneous")]
    NotHomogeneous,

    /// Indexed class families start at index 1.
    #[error("index must be at least 1, got {0}")]
    IndexOutOfRange(u32),

    /// There is no ring one fiber dimension below d = 0.
    #[error("no fiber ring below dimension 0")]
    NoFiberRing,

    /// A bounding manifold must have dimension at least 1.
    #[error("invalid bounding dimension {dim_w}; expected dim W >= 1")]
    InvalidBoundingDimension { dim_w: u32 },

    /// The class lives at a different fiber dimension than requested.
    #[error("dimension mismatch: expected a class at d = {expected}, got d = {found}")]
    DimensionMismatch { expected: u32, found: u32 },
}
