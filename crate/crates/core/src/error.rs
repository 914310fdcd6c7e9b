//! Error type shared by all modules.

use thiserror::Error;

/// Errors produced by the simulation core.
#[derive(Debug, Error)]
pub enum Error {
    /// Operands act on registers of different sizes.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// A dense construction was requested beyond the supported register size.
    #[error("register of {qubits} qubits exceeds the {limit}-qubit limit for {what}")]
    ResourceLimit {
        qubits: usize,
        limit: usize,
        what: &'static str,
    },

    /// Rotation generated by the identity string is a global phase, not a gate.
    #[error("identity Pauli string cannot generate a rotation")]
    IdentityRotation,

    /// Index out of the valid grid range.
    #[error("index {index} out of range for size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    /// Initial profile has no mass to embed.
    #[error("initial profile is identically zero")]
    ZeroProfile,

    /// The norm-factor radicand went non-positive; the time step is too large.
    #[error("norm radicand {radicand} is not positive; reduce the time step below {dt}")]
    StepTooLarge { radicand: f64, dt: f64 },

    /// Initial-state fit did not reach the acceptance threshold.
    #[error("initial-state fit reached infidelity {achieved:.3e}, above the accept threshold {accept:.3e}")]
    FitFailure { achieved: f64, accept: f64 },

    /// No pool candidate reduces the McLachlan distance.
    #[error("ansatz growth stagnated: no candidate improves D = {distance:.6e} by more than {min_gain:.1e}")]
    Stagnation { distance: f64, min_gain: f64 },

    /// Operator failed a Hermiticity / symmetry validation.
    #[error("operator validation failed: {0}")]
    OperatorStructure(String),

    /// Empty operator pool where at least one generator is required.
    #[error("operator pool is empty")]
    EmptyPool,

    /// Invalid run configuration.
    #[error("configuration error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
