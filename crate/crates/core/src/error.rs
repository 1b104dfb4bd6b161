use thiserror::Error;

/// Errors surfaced by the approximation pipeline.
#[derive(Debug, Error)]
pub enum Error {
    /// An iterative factorization (SVD, eigenvalue QR) did not converge
    /// within its iteration budget.
    #[error("{op}: iteration budget exhausted without convergence")]
    IterationFailure { op: &'static str },

    /// A dimension hypothesis failed, typically the `2 * ind <= n` condition
    /// required for an orthonormal complement to exist.
    #[error("{context}: {detail}")]
    Dimension {
        context: &'static str,
        detail: String,
    },

    /// Re-orthogonalization could not produce enough independent complement
    /// directions.
    #[error("orthonormal complement: only {found} of {wanted} independent directions found")]
    Rank { wanted: usize, found: usize },

    /// Snapshot data unusable for fitting (zero columns, vanishing leading
    /// singular value).
    #[error("degenerate snapshot data: {0}")]
    DegenerateData(String),

    /// No (transient, period) pair satisfies the recurrence test within the
    /// sample; the sample is too short or the tolerance too small.
    #[error("no eventual period found within {snapshots} snapshots at epsilon {epsilon:e}")]
    NoPeriodFound { snapshots: usize, epsilon: f64 },

    /// The implicit-step matrix of a discretized system is numerically
    /// singular.
    #[error("singular system matrix: sigma_min {sigma_min:e} <= {threshold:e}")]
    SingularSystem { sigma_min: f64, threshold: f64 },

    /// Invalid run configuration.
    #[error("invalid configuration: {0}")]
    Config(String),

    /// Malformed on-disk artifact (snapshot or model file).
    #[error("malformed file: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
