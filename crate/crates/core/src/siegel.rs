//! The Siegel disc at truncation `n`: symmetric operators `Z: H- -> H+` with
//! `1 − ZZ̄ ≻ 0`, carrying the transitive Möbius action
//! `ρ_a(Z) = (gZ + h)(h̄Z + ḡ)⁻¹` of the symplectic group.
//!
//! The invariant Hermitian metric is computed intrinsically from the point:
//! with `G = (1 − ZZ̄)⁻¹`,
//!
//! ```text
//! h(Z)(U, V) = Tr( conj(G V) · G U ),
//! ```
//!
//! which avoids choosing a group representative for the coset.  The Kähler
//! form is its imaginary part; at the origin `h(0)(U, V) = Tr(V̄ U)` and
//! `ω(0)(U, V) = Im Tr(V̄ U)`.
//!
//! Transitivity is realized by `B_Z = Z · artanh(|Z|)/|Z|` (as a function of
//! `Z*Z` through the Hermitian calculus) and `g_Z = exp [[0, B_Z], [B̄_Z, 0]]`,
//! which maps the origin to `Z`.

use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};
use crate::json;
use crate::kernel::{self, c, CMatrix};
use crate::symplectic::{exp_to_group, SpAlgebraElement, SymplecticElement};
use crate::tol;

/// Point of the Siegel disc: symmetric `Z` with `1 − ZZ̄ ≻ 0`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "SiegelPointJson", into = "SiegelPointJson")]
pub struct SiegelPoint {
    pub n: usize,
    pub z: CMatrix,
}

#[derive(Clone, Serialize, Deserialize)]
pub struct SiegelPointJson {
    pub n: usize,
    #[serde(with = "json::matrix")]
    pub z: CMatrix,
}

impl From<SiegelPoint> for SiegelPointJson {
    fn from(p: SiegelPoint) -> Self {
        SiegelPointJson { n: p.n, z: p.z }
    }
}

impl TryFrom<SiegelPointJson> for SiegelPoint {
    type Error = CoreError;

    fn try_from(r: SiegelPointJson) -> Result<Self> {
        let p = SiegelPoint::new(r.z, tol::MEMBERSHIP)?;
        if p.n != r.n {
            return Err(CoreError::Dimension(format!(
                "declared n = {} does not match a {}x{} matrix",
                r.n, p.n, p.n
            )));
        }
        Ok(p)
    }
}

/// Tangent vector to the disc: a symmetric matrix.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "SiegelTangentJson", into = "SiegelTangentJson")]
pub struct SiegelTangent {
    pub n: usize,
    pub v: CMatrix,
}

#[derive(Clone, Serialize, Deserialize)]
pub struct SiegelTangentJson {
    pub n: usize,
    #[serde(with = "json::matrix")]
    pub v: CMatrix,
}

impl From<SiegelTangent> for SiegelTangentJson {
    fn from(t: SiegelTangent) -> Self {
        SiegelTangentJson { n: t.n, v: t.v }
    }
}

impl TryFrom<SiegelTangentJson> for SiegelTangent {
    type Error = CoreError;

    fn try_from(r: SiegelTangentJson) -> Result<Self> {
        let t = SiegelTangent::new(r.v, tol::MEMBERSHIP)?;
        if t.n != r.n {
            return Err(CoreError::Dimension(format!(
                "declared n = {} does not match a {}x{} matrix",
                r.n, t.n, t.n
            )));
        }
        Ok(t)
    }
}

impl SiegelTangent {
    pub fn new(v: CMatrix, tolerance: f64) -> Result<Self> {
        kernel::ensure_square(&v)?;
        kernel::ensure_finite(&v)?;
        let residual = (&v - v.transpose()).norm();
        if residual > tolerance {
            return Err(CoreError::Membership {
                kind: "symmetric tangent",
                residual,
                tol: tolerance,
            });
        }
        Ok(SiegelTangent { n: v.nrows(), v })
    }

    pub fn zero(n: usize) -> Self {
        SiegelTangent {
            n,
            v: CMatrix::zeros(n, n),
        }
    }
}

/// Diagnostics returned by the membership test.
#[derive(Clone, Copy, Debug)]
pub struct SiegelDiagnostics {
    pub contained: bool,
    /// `‖Z − Zᵀ‖_F`
    pub symmetry_residual: f64,
    /// Smallest eigenvalue of the Hermitian part of `1 − ZZ̄`.
    pub min_eigenvalue: f64,
}

/// Membership test with diagnostics: symmetry and positivity of `1 − ZZ̄`.
pub fn siegel_contains(z: &CMatrix, tolerance: f64) -> Result<SiegelDiagnostics> {
    kernel::ensure_square(z)?;
    kernel::ensure_finite(z)?;
    let n = z.nrows();
    let symmetry_residual = (z - z.transpose()).norm();
    let gap = CMatrix::identity(n, n) - z * z.conjugate();
    let min_eigenvalue = kernel::min_eigenvalue(&gap);
    Ok(SiegelDiagnostics {
        contained: symmetry_residual <= tolerance * z.norm().max(1.0) && min_eigenvalue > tolerance,
        symmetry_residual,
        min_eigenvalue,
    })
}

impl SiegelPoint {
    /// Validating constructor: symmetry, `1 − ZZ̄ ≻ 0` and the equivalent
    /// dual gap `1 − Z*Z ≻ 0` are all enforced.
    pub fn new(z: CMatrix, tolerance: f64) -> Result<Self> {
        let diag = siegel_contains(&z, tolerance)?;
        if !diag.contained {
            return Err(CoreError::Membership {
                kind: "Siegel disc",
                residual: diag.symmetry_residual.max(-diag.min_eigenvalue),
                tol: tolerance,
            });
        }
        let n = z.nrows();
        let dual_gap = CMatrix::identity(n, n) - z.adjoint() * &z;
        if !kernel::is_positive_definite(&dual_gap, tolerance)? {
            return Err(CoreError::Membership {
                kind: "Siegel disc (dual gap)",
                residual: -kernel::min_eigenvalue(&dual_gap),
                tol: tolerance,
            });
        }
        Ok(SiegelPoint { n, z })
    }

    pub fn zero(n: usize) -> Self {
        SiegelPoint {
            n,
            z: CMatrix::zeros(n, n),
        }
    }
}

/// Möbius action `ρ_a(Z) = (gZ + h)(h̄Z + ḡ)⁻¹`.
///
/// The resolvent `h̄Z + ḡ` is invertible for group members and disc points;
/// a condition number past the ceiling therefore signals an internal
/// inconsistency rather than a domain error.
pub fn mobius_act(a: &SymplecticElement, z: &SiegelPoint) -> Result<SiegelPoint> {
    if a.n != z.n {
        return Err(CoreError::Dimension(format!(
            "group element of size {} acting on a point of size {}",
            a.n, z.n
        )));
    }
    let w = a.h.conjugate() * &z.z + a.g.conjugate();
    let winv = kernel::invert_checked(&w)
        .map_err(|e| CoreError::Internal(format!("resolvent h̄Z + ḡ not invertible: {e}")))?;
    let num = &a.g * &z.z + &a.h;
    SiegelPoint::new(num * winv, tol::MEMBERSHIP)
}

/// Derivative of the Möbius action at `Z` in the direction `U`:
/// `g U W⁻¹ − (gZ + h) W⁻¹ h̄ U W⁻¹` with `W = h̄Z + ḡ`.
pub fn mobius_tangent(
    a: &SymplecticElement,
    z: &SiegelPoint,
    u: &SiegelTangent,
) -> Result<SiegelTangent> {
    if a.n != z.n || a.n != u.n {
        return Err(CoreError::Dimension(
            "mismatched sizes in the tangent action".into(),
        ));
    }
    let hbar = a.h.conjugate();
    let w = &hbar * &z.z + a.g.conjugate();
    let winv = kernel::invert_checked(&w)
        .map_err(|e| CoreError::Internal(format!("resolvent h̄Z + ḡ not invertible: {e}")))?;
    let num = &a.g * &z.z + &a.h;
    let pushed = &a.g * &u.v * &winv - num * &winv * hbar * &u.v * &winv;
    SiegelTangent::new(pushed, tol::INVERSE_CHAIN)
}

fn artanh_over_sqrt(x: f64) -> Option<f64> {
    if x < -tol::PSD_SLACK {
        return None;
    }
    let x = x.max(0.0);
    if x >= 1.0 - tol::ARTANH_BOUNDARY {
        return None;
    }
    if x < 1e-6 {
        // series artanh(sqrt x)/sqrt x = sum x^k/(2k+1); truncation error
        // below x^4/9 < 1e-25 on this branch
        Some(1.0 + x / 3.0 + x * x / 5.0 + x * x * x / 7.0)
    } else {
        let s = x.sqrt();
        Some(s.atanh() / s)
    }
}

/// Group element mapping the origin to `Z`: the exponential of the
/// off-diagonal algebra element built from `B_Z = Z · f(Z*Z)` with
/// `f(x) = artanh(√x)/√x`.
pub fn transitive_element(z: &SiegelPoint) -> Result<SymplecticElement> {
    let norm = kernel::op_norm(&z.z);
    if norm > 1.0 - tol::ARTANH_BOUNDARY {
        return Err(CoreError::SpectrumDomain {
            eigenvalue: norm * norm,
        });
    }
    let zsz = z.z.adjoint() * &z.z;
    let f_of = kernel::herm_funcalc(&zsz, artanh_over_sqrt)?;
    let bz = &z.z * f_of;
    let sym_residual = (&bz - bz.transpose()).norm();
    if sym_residual > tol::COCYCLE * bz.norm().max(1.0) {
        return Err(CoreError::Internal(format!(
            "B_Z lost symmetry: residual {sym_residual:.3e}"
        )));
    }
    // exact symmetrization so the algebra membership gate sees residual zero
    let bz = (&bz + bz.transpose()) * c(0.5, 0.0);
    let alg = SpAlgebraElement::new(CMatrix::zeros(z.n, z.n), bz, tol::MEMBERSHIP)?;
    exp_to_group(&alg)
}

/// Invariant Hermitian metric, computed intrinsically through
/// `G = (1 − ZZ̄)⁻¹`.
pub fn siegel_metric(z: &SiegelPoint, u: &SiegelTangent, v: &SiegelTangent) -> Result<Complex64> {
    if z.n != u.n || z.n != v.n {
        return Err(CoreError::Dimension(
            "mismatched sizes in the metric evaluation".into(),
        ));
    }
    let gap = CMatrix::identity(z.n, z.n) - &z.z * z.z.conjugate();
    let g = kernel::invert_checked(&gap)?;
    let gu = &g * &u.v;
    let gv = &g * &v.v;
    Ok((gv.conjugate() * gu).trace())
}

/// Kähler two-form: the imaginary part of the Hermitian metric.
pub fn siegel_kahler(z: &SiegelPoint, u: &SiegelTangent, v: &SiegelTangent) -> Result<f64> {
    Ok(siegel_metric(z, u, v)?.im)
}

/// Random disc point `Z = 0.9 · S / (‖S‖ + 1)` with `S` random symmetric;
/// strictly contained with margin by construction.
pub fn random_point(n: usize, rng: &mut impl Rng) -> SiegelPoint {
    let g = kernel::random_gaussian(n, n, 1.0, rng);
    let s = (&g + g.transpose()) * c(0.5, 0.0);
    let z = &s * c(0.9 / (kernel::op_norm(&s) + 1.0), 0.0);
    SiegelPoint::new(z, tol::MEMBERSHIP).expect("scaled symmetric matrix lies in the disc")
}

/// Random symmetric tangent of unit Frobenius norm.
pub fn random_tangent(n: usize, rng: &mut impl Rng) -> SiegelTangent {
    let g = kernel::random_gaussian(n, n, 1.0, rng);
    let mut s = (&g + g.transpose()) * c(0.5, 0.0);
    let norm = s.norm();
    if norm > 0.0 {
        s *= c(1.0 / norm, 0.0);
    }
    SiegelTangent::new(s, tol::TIGHT).expect("symmetrization is exact")
}

/// Random symmetric point with a prescribed operator norm, used to probe the
/// disc near its boundary.
pub fn random_point_with_norm(n: usize, op_norm: f64, rng: &mut impl Rng) -> SiegelPoint {
    let g = kernel::random_gaussian(n, n, 1.0, rng);
    let s = (&g + g.transpose()) * c(0.5, 0.0);
    let z = &s * c(op_norm / kernel::op_norm(&s), 0.0);
    SiegelPoint::new(z, tol::MEMBERSHIP).expect("rescaled symmetric matrix lies in the disc")
}
