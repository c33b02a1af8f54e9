//! Numerical realization, at finite matrix truncation, of the restricted
//! symplectic group acting on the Siegel disc, together with the Schwinger
//! central extension of its Lie algebra and the coadjoint orbits of that
//! extension.
//!
//! The ambient space is a polarized complex space `H = H+ ⊕ H-` where both
//! summands are truncated to dimension `n`.  Operators are stored as 2x2
//! block matrices relative to the polarization.  The main players:
//!
//! - [`symplectic`]: the group `Sp` of block operators `[[g, h], [h̄, ḡ]]`
//!   with `g*g − hᵀh̄ = 1`, `g*h = hᵀḡ`, and its Lie algebra.
//! - [`siegel`]: the disc of symmetric `Z` with `1 − ZZ̄ ≻ 0`, the Möbius
//!   action `Z ↦ (gZ+h)(h̄Z+ḡ)⁻¹`, the invariant Hermitian metric and its
//!   Kähler form.
//! - [`coadjoint`]: the Schwinger cocycle `s(A,B) = Tr(A[d,B])`, the group
//!   1-cocycle `σ(a) = ada⁻¹ − d`, adjoint/coadjoint actions of the
//!   centrally extended group, the orbit through `(0, γ)` and the
//!   Kirillov–Kostant–Souriau form on it.
//!
//! Everything is pure and deterministic; random generation is explicitly
//! seeded so every test trial is reproducible.

pub mod coadjoint;
pub mod error;
pub mod json;
pub mod kernel;
pub mod polarized;
pub mod siegel;
pub mod symplectic;
pub mod tol;

pub use error::{CoreError, Result};
pub use kernel::{CMatrix, CVector};
pub use num_complex::Complex64;
