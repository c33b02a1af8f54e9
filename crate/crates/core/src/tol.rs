//! Central tolerance ladder.
//!
//! The constants are graded by how much floating-point work sits between the
//! exact identity and its computed residual: plain block algebra stays near
//! machine precision, anything routed through a matrix inverse or exponential
//! picks up condition-number growth, and finite-difference probes are limited
//! by the step size.

/// Relative backward-error target of the matrix exponential kernel.
pub const EXP_BACKWARD: f64 = 1e-12;

/// Positive-definiteness threshold factor; the effective eigenvalue gate is
/// this factor times the operator norm of the tested matrix.
pub const PD_DEFAULT_FACTOR: f64 = 1e-10;

/// Relative Hermiticity gate used by the functional calculus.
pub const HERMITICITY_REL: f64 = 1e-10;

/// Eigenvalues of `Z*Z` must stay below `1 - ARTANH_BOUNDARY` before the
/// artanh-based calculus is applied; closer to the boundary is an error,
/// never a silent clamp.
pub const ARTANH_BOUNDARY: f64 = 1e-8;

/// Slack for eigenvalues of numerically positive-semidefinite inputs:
/// eigenvalues in `[-PSD_SLACK, 0)` are treated as zero, anything below is a
/// domain error.
pub const PSD_SLACK: f64 = 1e-10;

/// Default absolute Frobenius tolerance on group / algebra membership
/// residuals.
pub const MEMBERSHIP: f64 = 1e-9;

/// Membership residual expected from the structurally exact random
/// generators.
pub const GENERATED_MEMBERSHIP: f64 = 1e-12;

/// Exact block algebra (conjugation, transposition, traces without
/// inverses).
pub const TIGHT: f64 = 1e-12;

/// Plain algebraic identities: products and traces, no inversion.
pub const ALGEBRAIC: f64 = 1e-10;

/// Cocycle-type identities involving one inverse or exponential.
pub const COCYCLE: f64 = 1e-9;

/// Identities routed through chains of inverses (compositions, similarity
/// transports, Möbius action laws).
pub const INVERSE_CHAIN: f64 = 1e-8;

/// Relative tolerance for metric / Kähler-form invariance under the group
/// action.
pub const METRIC_INVARIANCE_REL: f64 = 1e-7;

/// Tolerance for agreement with central finite differences.
pub const FD_TOL: f64 = 1e-6;

/// Step used by central finite differences.
pub const FD_STEP: f64 = 1e-5;

/// Condition-number ceiling past which an operator is treated as singular.
pub const COND_LIMIT: f64 = 1e12;

/// Absolute ceiling on the imaginary part of quantities that are real on the
/// symplectic algebra (Schwinger pairings, the KKS form).
pub const REALITY: f64 = 1e-12;

/// Residual allowed when a block-diagonal unitary is required to fix the
/// orbit base point exactly.
pub const ISOTROPY_FIX: f64 = 1e-10;

/// Minimum displacement of the base point demanded from elements outside the
/// isotropy subgroup.
pub const NON_ISOTROPY_MOVE: f64 = 1e-6;

/// Scalar golden values derived by hand must reproduce to this accuracy.
pub const GOLDEN: f64 = 1e-12;
