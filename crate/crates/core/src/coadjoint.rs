//! The central extension of the restricted algebra and group, and the
//! coadjoint orbit through `(0, γ)`.
//!
//! The extended bracket is `[(A, λ), (B, ν)] = ([A, B], s(A, B))` with the
//! Schwinger cocycle `s(A, B) = Tr(A[d, B])`.  The group 1-cocycle
//! `σ(a) = a d a⁻¹ − d` twists the coadjoint action into the affine form
//!
//! ```text
//! Ad*(μ, γ) = (a⁻¹ μ a − γ σ(a⁻¹), γ),
//! ad*_(A,λ)(μ, γ) = ([μ, A] − γ [d, A], 0).
//! ```
//!
//! At finite truncation the extension trivializes, so extended group
//! elements carry an explicit central phase; every action formula depends
//! only on the underlying operator, exactly as the formulas above do.
//!
//! The orbit through `(0, γ)`, `γ ≠ 0`, is parametrized by cosets of the
//! unitary isotropy subgroup via `a ↦ (−γ σ(a), γ)`; since `σ(au) = σ(a)`
//! for block-diagonal unitary `u`, the parametrization is constant on the
//! cosets `a · U(H+)`.  The Kirillov–Kostant–Souriau form evaluates on
//! algebra directions as `−γ Tr(A[d, B])`, and in the `(A₂, B₂)` block
//! coordinates as `−2iγ Tr(Ā₂B₂ − B̄₂A₂)`; the latter equals `−4γ` times the
//! Kähler form of the disc at the origin.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};
use crate::json;
use crate::kernel::{self, c};
use crate::polarized::{
    commutator_with_d, d_operator, pairing, BlockOperator, Polarization, PredualElement,
};
use crate::siegel::{siegel_kahler, SiegelPoint, SiegelTangent};
use crate::symplectic::{SpAlgebraElement, SymplecticElement};
use crate::tol;

/// Element `(A, λ)` of the centrally extended algebra.
#[derive(Clone, Debug)]
pub struct ExtendedAlgebraElement {
    pub op: BlockOperator,
    pub lambda: Complex64,
}

impl ExtendedAlgebraElement {
    pub fn new(op: BlockOperator, lambda: Complex64) -> Self {
        ExtendedAlgebraElement { op, lambda }
    }

    pub fn central(n: usize, lambda: Complex64) -> Self {
        ExtendedAlgebraElement {
            op: BlockOperator::zeros(n),
            lambda,
        }
    }
}

/// Element `(μ, γ)` of the extended predual; orbit points live here.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "ExtendedPredualJson", into = "ExtendedPredualJson")]
pub struct ExtendedPredual {
    pub mu: PredualElement,
    pub gamma: Complex64,
}

#[derive(Clone, Serialize, Deserialize)]
pub struct ExtendedPredualJson {
    pub mu: BlockOperator,
    #[serde(with = "json::complex")]
    pub gamma: Complex64,
}

impl From<ExtendedPredual> for ExtendedPredualJson {
    fn from(m: ExtendedPredual) -> Self {
        ExtendedPredualJson {
            mu: m.mu.0,
            gamma: m.gamma,
        }
    }
}

impl TryFrom<ExtendedPredualJson> for ExtendedPredual {
    type Error = CoreError;

    fn try_from(r: ExtendedPredualJson) -> Result<Self> {
        Ok(ExtendedPredual {
            mu: PredualElement(r.mu),
            gamma: r.gamma,
        })
    }
}

impl ExtendedPredual {
    pub fn new(mu: PredualElement, gamma: Complex64) -> Self {
        ExtendedPredual { mu, gamma }
    }

    /// The base point `(0, γ)`.
    pub fn base_point(n: usize, gamma: Complex64) -> Self {
        ExtendedPredual {
            mu: PredualElement::zeros(n),
            gamma,
        }
    }

    /// Frobenius distance between the operator parts plus the central gap.
    pub fn distance(&self, other: &ExtendedPredual) -> Result<f64> {
        let block = self.mu.0.sub(&other.mu.0)?.hs_norm();
        Ok(block + (self.gamma - other.gamma).norm())
    }
}

/// Element of the trivialized central extension of the group: an invertible
/// block operator together with a nonzero central phase.
#[derive(Clone, Debug)]
pub struct ExtendedGroupElement {
    pub a: BlockOperator,
    pub phase: Complex64,
}

impl ExtendedGroupElement {
    pub fn new(a: BlockOperator, phase: Complex64) -> Result<Self> {
        if phase.norm() == 0.0 {
            return Err(CoreError::Internal(
                "central phase of an extended group element must be nonzero".into(),
            ));
        }
        Ok(ExtendedGroupElement { a, phase })
    }

    pub fn from_symplectic(a: &SymplecticElement, phase: Complex64) -> Result<Self> {
        Self::new(a.block_operator(), phase)
    }

    pub fn identity(n: usize) -> Self {
        ExtendedGroupElement {
            a: BlockOperator::identity(n),
            phase: c(1.0, 0.0),
        }
    }

    /// Componentwise product; the trivialized extension multiplies phases
    /// independently of the operator parts.
    pub fn mul(&self, other: &ExtendedGroupElement) -> Result<ExtendedGroupElement> {
        Ok(ExtendedGroupElement {
            a: self.a.mul(&other.a)?,
            phase: self.phase * other.phase,
        })
    }
}

fn full_trace(b: &BlockOperator) -> Complex64 {
    b.pp.trace() + b.mm.trace()
}

/// Schwinger cocycle `s(A, B) = Tr(A[d, B])`.
///
/// Both the trace form and the block closed form
/// `2i Tr(A₋₊B₊₋ − A₊₋B₋₊)` are evaluated and cross-checked.
pub fn schwinger(a: &BlockOperator, b: &BlockOperator) -> Result<Complex64> {
    if a.n != b.n {
        return Err(CoreError::Dimension(format!(
            "Schwinger term on sizes {} and {}",
            a.n, b.n
        )));
    }
    let trace_form = full_trace(&a.mul(&commutator_with_d(b))?);
    let block_form = c(0.0, 2.0) * ((&a.mp * &b.pm).trace() - (&a.pm * &b.mp).trace());
    let gap = (trace_form - block_form).norm();
    if gap > 1e-10 * trace_form.norm().max(1.0) {
        return Err(CoreError::Internal(format!(
            "Schwinger evaluation paths disagree by {gap:.3e}"
        )));
    }
    Ok(trace_form)
}

/// Extended bracket `[(A, λ), (B, ν)] = ([A, B], s(A, B))`; the central
/// coordinates of the inputs do not enter.
pub fn extended_bracket(
    x: &ExtendedAlgebraElement,
    y: &ExtendedAlgebraElement,
) -> Result<ExtendedAlgebraElement> {
    Ok(ExtendedAlgebraElement {
        op: x.op.commutator(&y.op)?,
        lambda: schwinger(&x.op, &y.op)?,
    })
}

/// Group 1-cocycle `σ(a) = a d a⁻¹ − d`.
pub fn sigma_cocycle(a: &BlockOperator) -> Result<PredualElement> {
    let full = a.to_full();
    let ainv = kernel::invert_checked(&full)?;
    let d = d_operator(Polarization::new(a.n)?).to_full();
    let sigma = &full * &d * ainv - d;
    Ok(PredualElement(BlockOperator::from_full(&sigma)?))
}

/// `σ` of a symplectic element through its real-form block operator.
pub fn sigma_of_symplectic(a: &SymplecticElement) -> Result<PredualElement> {
    sigma_cocycle(&a.block_operator())
}

fn sigma_of_inverse(a: &BlockOperator) -> Result<PredualElement> {
    let full = a.to_full();
    let ainv = kernel::invert_checked(&full)?;
    let d = d_operator(Polarization::new(a.n)?).to_full();
    let sigma = &ainv * &d * full - d;
    Ok(PredualElement(BlockOperator::from_full(&sigma)?))
}

/// Adjoint action of the extended group:
/// `Ad(B, ν) = (a B a⁻¹, ν − Tr(σ(a⁻¹) B))`.  Depends only on the operator
/// part of `G`.
pub fn extended_adjoint(
    g: &ExtendedGroupElement,
    x: &ExtendedAlgebraElement,
) -> Result<ExtendedAlgebraElement> {
    let full = g.a.to_full();
    let ainv = kernel::invert_checked(&full)?;
    let bfull = x.op.to_full();
    let conjugated = BlockOperator::from_full(&(&full * bfull * &ainv))?;
    let sigma_inv = sigma_of_inverse(&g.a)?;
    let correction = full_trace(&sigma_inv.0.mul(&x.op)?);
    Ok(ExtendedAlgebraElement {
        op: conjugated,
        lambda: x.lambda - correction,
    })
}

/// Coadjoint action `Ad*(μ, γ) = (a⁻¹ μ a − γ σ(a⁻¹), γ)`.
///
/// Satisfies `⟨Ad* m, X⟩ = ⟨m, Ad X⟩` and composes contravariantly:
/// `Ad*_{G₁G₂} = Ad*_{G₂} ∘ Ad*_{G₁}`.
pub fn coadjoint(g: &ExtendedGroupElement, m: &ExtendedPredual) -> Result<ExtendedPredual> {
    let full = g.a.to_full();
    let ainv = kernel::invert_checked(&full)?;
    let mu_full = m.mu.0.to_full();
    let transported = BlockOperator::from_full(&(&ainv * mu_full * &full))?;
    let sigma_inv = sigma_of_inverse(&g.a)?;
    let new_mu = transported.sub(&sigma_inv.0.scale(m.gamma))?;
    Ok(ExtendedPredual {
        mu: PredualElement(new_mu),
        gamma: m.gamma,
    })
}

/// Infinitesimal coadjoint action
/// `ad*_(A,λ)(μ, γ) = ([μ, A] − γ [d, A], 0)`; independent of `λ`.
pub fn ad_star(x: &ExtendedAlgebraElement, m: &ExtendedPredual) -> Result<ExtendedPredual> {
    let bracket = m.mu.0.commutator(&x.op)?;
    let twist = commutator_with_d(&x.op).scale(m.gamma);
    Ok(ExtendedPredual {
        mu: PredualElement(bracket.sub(&twist)?),
        gamma: c(0.0, 0.0),
    })
}

/// Affine coadjoint action of the underlying group,
/// `a · μ = a μ a⁻¹ − γ σ(a)`; satisfies `(ab) · μ = a · (b · μ)`.
pub fn affine_action(
    a: &BlockOperator,
    mu: &PredualElement,
    gamma: Complex64,
) -> Result<PredualElement> {
    let full = a.to_full();
    let ainv = kernel::invert_checked(&full)?;
    let transported = BlockOperator::from_full(&(&full * mu.0.to_full() * &ainv))?;
    let sigma = sigma_cocycle(a)?;
    Ok(PredualElement(transported.sub(&sigma.0.scale(gamma))?))
}

/// Orbit parametrization `a ↦ (−γ σ(a), γ)` for real `γ ≠ 0`.
///
/// Constant on cosets `a · u` for block-diagonal unitary `u`, since such `u`
/// commutes with `d`.
pub fn orbit_point(a: &SymplecticElement, gamma: f64) -> Result<ExtendedPredual> {
    if gamma == 0.0 {
        return Err(CoreError::GammaZero);
    }
    let sigma = sigma_of_symplectic(a)?;
    Ok(ExtendedPredual {
        mu: PredualElement(sigma.0.scale(c(-gamma, 0.0))),
        gamma: c(gamma, 0.0),
    })
}

fn require_real_sp(value: Complex64, what: &str) -> Result<f64> {
    if value.im.abs() > tol::REALITY.max(1e-14 * value.re.abs()) {
        return Err(CoreError::Internal(format!(
            "{what} should be real on the symplectic algebra, got imaginary part {:.3e}",
            value.im
        )));
    }
    Ok(value.re)
}

/// Kirillov–Kostant–Souriau form at the base point, on the orbit directions
/// generated by `A` and `B`: `−γ Tr(A[d, B])`.  Real for symplectic inputs,
/// and only the off-diagonal blocks contribute.
pub fn kks_form(a: &SpAlgebraElement, b: &SpAlgebraElement, gamma: f64) -> Result<f64> {
    if gamma == 0.0 {
        return Err(CoreError::GammaZero);
    }
    let s = schwinger(&a.block_operator(), &b.block_operator())?;
    require_real_sp(s * c(-gamma, 0.0), "the KKS form")
}

/// The same form in block coordinates: `−2iγ Tr(Ā₂B₂ − B̄₂A₂)`.
pub fn pullback_form(a: &SpAlgebraElement, b: &SpAlgebraElement, gamma: f64) -> Result<f64> {
    if a.n != b.n {
        return Err(CoreError::Dimension(format!(
            "pullback form on sizes {} and {}",
            a.n, b.n
        )));
    }
    let t = (a.a2.conjugate() * &b.a2).trace() - (b.a2.conjugate() * &a.a2).trace();
    require_real_sp(c(0.0, -2.0 * gamma) * t, "the pullback form")
}

/// Joint evaluation of the disc Kähler form and the orbit form on matching
/// directions, with the proportionality residual against `−4γ`.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct SymplectoCheck {
    pub omega_d: f64,
    pub omega_hat: f64,
    pub kks: f64,
    pub ratio: Option<f64>,
    pub residual: f64,
    pub conclusive: bool,
}

/// Compare the Kähler form of the disc at the origin (tangent directions
/// `A₂`, `B₂`) with the orbit form on the matching algebra directions.  The
/// two are proportional with constant `−4γ`.
pub fn symplecto_check(
    a: &SpAlgebraElement,
    b: &SpAlgebraElement,
    gamma: f64,
) -> Result<SymplectoCheck> {
    if gamma == 0.0 {
        return Err(CoreError::GammaZero);
    }
    let u = SiegelTangent::new(a.a2.clone(), tol::MEMBERSHIP)?;
    let v = SiegelTangent::new(b.a2.clone(), tol::MEMBERSHIP)?;
    let omega_d = siegel_kahler(&SiegelPoint::zero(a.n), &u, &v)?;
    let omega_hat = pullback_form(a, b, gamma)?;
    let kks = kks_form(a, b, gamma)?;
    let constant = -4.0 * gamma;
    let residual = (omega_hat - constant * omega_d).abs();
    let conclusive = omega_d.abs() > 1e-12;
    Ok(SymplectoCheck {
        omega_d,
        omega_hat,
        kks,
        ratio: conclusive.then(|| omega_hat / omega_d),
        residual,
        conclusive,
    })
}

/// Duality pairing of an extended predual element against an extended
/// algebra element.
pub fn extended_pairing(m: &ExtendedPredual, x: &ExtendedAlgebraElement) -> Result<Complex64> {
    pairing((&m.mu, m.gamma), (&x.op, x.lambda))
}
