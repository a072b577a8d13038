use thiserror::Error;

/// Errors produced by the numeric layers of the library.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Expression text could not be parsed. `offset` is the byte offset of
    /// the first offending character.
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// Evaluation left the domain of a subexpression (division by zero,
    /// log/sqrt at the origin, complex atan2, ...).
    #[error("domain error in `{subexpr}`: {message}")]
    Domain { subexpr: String, message: String },

    /// Attempt to invert a bicomplex zero divisor (or zero itself).
    #[error("bicomplex zero divisor is not invertible")]
    ZeroDivisor,

    /// A generating pair is degenerate at the given point:
    /// Vec(conj(F) G) vanishes, so characteristic coefficients and the
    /// adjoint pair do not exist there.
    #[error("degenerate generating pair at ({x}, {y}): {detail}")]
    DegeneratePair { x: f64, y: f64, detail: String },

    /// An antiderivative operator was applied to a field that is not a
    /// gradient of the requested kind; the compatibility residual exceeded
    /// the tolerance at a checked point.
    #[error("compatibility residual {residual:.3e} exceeds {tol:.3e} at ({x}, {y})")]
    Compatibility {
        residual: f64,
        tol: f64,
        x: f64,
        y: f64,
    },

    /// The supplied (rho, s, S) data does not satisfy Condition S:
    /// laplacian(rho) - s(rho) |grad rho|^2 is not zero on the sample grid.
    #[error("Condition S residual {residual:.3e} exceeds {tol:.3e} at ({x}, {y})")]
    ConditionSViolation {
        residual: f64,
        tol: f64,
        x: f64,
        y: f64,
    },

    /// phi = k e^{-S} rho_z vanishes or leaves the configured magnitude
    /// window somewhere on the sample grid, so the generating sequence
    /// cannot be built there.
    #[error("phi degenerate at ({x}, {y}): |phi| = {magnitude:.3e}")]
    PhiDegenerate { x: f64, y: f64, magnitude: f64 },

    /// Taylor coefficients were requested for a field whose Vekua residual
    /// at the center is too large to be pseudoanalytic.
    #[error("field is not pseudoanalytic near the center: residual {residual:.3e} exceeds {tol:.3e}")]
    NotPseudoanalytic { residual: f64, tol: f64 },

    /// Adaptive panel doubling hit the panel cap without the result
    /// stabilizing to the requested relative tolerance.
    #[error("quadrature did not converge within {max_panels} panels (last change {last_change:.3e})")]
    QuadratureNonConvergence { max_panels: u32, last_change: f64 },

    /// A coefficient field violated a boundedness precondition
    /// (p, u0 or f too close to zero, or unbounded) on the working grid.
    #[error("coefficient `{name}` out of bounds at ({x}, {y}): |value| = {magnitude:.3e}")]
    CoefficientOutOfBounds {
        name: &'static str,
        x: f64,
        y: f64,
        magnitude: f64,
    },

    /// A PDE-solution precondition failed: the defining residual of the
    /// input field exceeded the tolerance at a sampled point.
    #[error("`{name}` does not solve its equation: residual {residual:.3e} exceeds {tol:.3e} at ({x}, {y})")]
    NotASolution {
        name: &'static str,
        residual: f64,
        tol: f64,
        x: f64,
        y: f64,
    },

    /// Invalid problem geometry (center outside the domain, domain not
    /// star-shaped with respect to the center, M < N, ...).
    #[error("invalid problem setup: {0}")]
    InvalidProblem(String),
}

pub type Result<T> = std::result::Result<T, Error>;
