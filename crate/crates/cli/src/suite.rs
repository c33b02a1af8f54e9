//! Randomized invariant suites behind `orbit check`.
//!
//! Every check draws `trials` independent instances (trial `t` reseeds the
//! RNG with `seed + t`, so runs are reproducible and order-independent) and
//! records the worst residual against its tolerance.  With
//! `--inject-violation`, one designated check per suite receives a corrupted
//! input on trial 0 and must fail.

use std::collections::BTreeMap;

use serde::Serialize;

use orbit_core::coadjoint::{
    ad_star, affine_action, coadjoint, extended_adjoint, extended_pairing, kks_form, orbit_point,
    pullback_form, schwinger, sigma_of_symplectic, symplecto_check, ExtendedAlgebraElement,
    ExtendedGroupElement, ExtendedPredual,
};
use orbit_core::kernel::{self, c, rng_from_seed, CMatrix};
use orbit_core::polarized::{restricted_trace, trace_pairing, BlockOperator, PredualElement};
use orbit_core::siegel::{
    mobius_act, mobius_tangent, random_point, random_tangent, siegel_kahler, siegel_metric,
    transitive_element, SiegelPoint,
};
use orbit_core::symplectic::{
    exp_to_group, is_symplectic, omega_eval, random_isotropy, random_sp_algebra, random_symplectic,
    symplectic_inverse,
};
use orbit_core::tol;

type Rng = kernel::SeededRng;

/// Residual assigned to a trial that errored out; finite so it survives JSON.
const FAILED_TRIAL: f64 = 1e300;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteId {
    Polarized,
    Symplectic,
    Siegel,
    Coadjoint,
}

#[derive(Clone)]
pub struct SuiteConfig {
    pub n: usize,
    pub gamma: f64,
    pub seed: u64,
    pub trials: usize,
    pub inject_violation: bool,
    pub tol_overrides: BTreeMap<String, f64>,
}

#[derive(Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub trials: usize,
    pub max_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

struct Check {
    name: &'static str,
    tolerance: f64,
    injectable: bool,
    run: fn(&mut Rng, usize, f64, bool) -> f64,
}

fn scale_for(n: usize) -> f64 {
    0.5 / (n as f64).sqrt()
}

fn or_failed(r: orbit_core::Result<f64>) -> f64 {
    r.unwrap_or(FAILED_TRIAL)
}

fn random_block(n: usize, rng: &mut Rng) -> BlockOperator {
    BlockOperator::new(
        n,
        kernel::random_gaussian(n, n, 1.0, rng),
        kernel::random_gaussian(n, n, 1.0, rng),
        kernel::random_gaussian(n, n, 1.0, rng),
        kernel::random_gaussian(n, n, 1.0, rng),
    )
    .expect("generated blocks are square")
}

// ── polarized ───────────────────────────────────────────────────────

fn chk_conj_multiplicative(rng: &mut Rng, n: usize, _gamma: f64, _inject: bool) -> f64 {
    let a = random_block(n, rng);
    let b = random_block(n, rng);
    or_failed((|| {
        let lhs = orbit_core::polarized::conj_op(&a.mul(&b)?);
        let rhs = orbit_core::polarized::conj_op(&a).mul(&orbit_core::polarized::conj_op(&b))?;
        lhs.sub(&rhs).map(|d| d.hs_norm())
    })())
}

fn chk_conj_involution(rng: &mut Rng, n: usize, _gamma: f64, _inject: bool) -> f64 {
    let a = random_block(n, rng);
    let twice = orbit_core::polarized::conj_op(&orbit_core::polarized::conj_op(&a));
    or_failed(twice.sub(&a).map(|d| d.hs_norm()))
}

fn chk_transpose_reversal(rng: &mut Rng, n: usize, _gamma: f64, _inject: bool) -> f64 {
    let h = kernel::random_gaussian(n, n, 1.0, rng);
    let k = kernel::random_gaussian(n, n, 1.0, rng);
    let lhs = orbit_core::polarized::transpose_op(&(&h * &k));
    let rhs = orbit_core::polarized::transpose_op(&k) * orbit_core::polarized::transpose_op(&h);
    (lhs - rhs).norm()
}

fn chk_trace_cyclic(rng: &mut Rng, n: usize, _gamma: f64, _inject: bool) -> f64 {
    let mu = PredualElement(random_block(n, rng));
    let a = random_block(n, rng);
    or_failed((|| {
        let lhs = trace_pairing(&mu, &a)?;
        let rhs = restricted_trace(&PredualElement(a.mul(&mu.0)?));
        Ok((lhs - rhs).norm())
    })())
}

fn chk_trace_similarity(rng: &mut Rng, n: usize, _gamma: f64, _inject: bool) -> f64 {
    let mu = PredualElement(random_block(n, rng));
    let g = random_symplectic(n, scale_for(n), rng).block_operator();
    or_failed((|| {
        let ginv = BlockOperator::from_full(&kernel::invert_checked(&g.to_full())?)?;
        let moved = g.mul(&mu.0)?.mul(&ginv)?;
        let lhs = restricted_trace(&PredualElement(moved));
        let rhs = restricted_trace(&mu);
        Ok((lhs - rhs).norm() / rhs.norm().max(1.0))
    })())
}

fn chk_pairing_nondegenerate(rng: &mut Rng, n: usize, _gamma: f64, inject: bool) -> f64 {
    // a corrupted (zero) predual element must be flagged as degenerate
    let mu = if inject {
        PredualElement::zeros(n)
    } else {
        PredualElement(random_block(n, rng))
    };
    let mut best: f64 = 0.0;
    for block in 0..4 {
        for i in 0..n {
            for j in 0..n {
                let mut unit = BlockOperator::zeros(n);
                let m = CMatrix::from_fn(n, n, |r, cc| {
                    if r == i && cc == j {
                        c(1.0, 0.0)
                    } else {
                        c(0.0, 0.0)
                    }
                });
                match block {
                    0 => unit.pp = m,
                    1 => unit.pm = m,
                    2 => unit.mp = m,
                    _ => unit.mm = m,
                }
                if let Ok(p) = trace_pairing(&mu, &unit) {
                    best = best.max(p.norm());
                }
            }
        }
    }
    if best > 1e-9 {
        0.0
    } else {
        1.0
    }
}

// ── symplectic ──────────────────────────────────────────────────────

fn chk_closure(rng: &mut Rng, n: usize, _gamma: f64, inject: bool) -> f64 {
    let a = random_symplectic(n, scale_for(n), rng);
    let b = random_symplectic(n, scale_for(n), rng);
    or_failed((|| {
        let mut ab = a.compose(&b)?;
        if inject {
            ab.g[(0, 0)] += c(1e-3, 0.0);
        }
        Ok(is_symplectic(&ab.g, &ab.h, tol::COCYCLE)?.max_residual())
    })())
}

fn chk_omega_invariance(rng: &mut Rng, n: usize, _gamma: f64, _inject: bool) -> f64 {
    let a = random_symplectic(n, scale_for(n), rng);
    let full = a.to_full();
    let u = kernel::random_vector(2 * n, 1.0, rng);
    let v = kernel::random_vector(2 * n, 1.0, rng);
    or_failed((|| {
        let lhs = omega_eval(&(&full * &u), &(&full * &v))?;
        let rhs = omega_eval(&u, &v)?;
        Ok((lhs - rhs).norm())
    })())
}

fn chk_derived_identities(rng: &mut Rng, n: usize, _gamma: f64, _inject: bool) -> f64 {
    let a = random_symplectic(n, scale_for(n), rng);
    let id = CMatrix::identity(n, n);
    let r1 = (&a.g * a.g.adjoint() - &a.h * a.h.adjoint() - id).norm();
    let r2 = (&a.g * a.h.transpose() - &a.h * a.g.transpose()).norm();
    r1.max(r2)
}

fn chk_g_invertible(rng: &mut Rng, n: usize, _gamma: f64, _inject: bool) -> f64 {
    let a = random_symplectic(n, scale_for(n), rng);
    let cond = kernel::cond_number(&a.g);
    if cond.is_finite() {
        cond / tol::COND_LIMIT
    } else {
        FAILED_TRIAL
    }
}

fn chk_inverse_consistency(rng: &mut Rng, n: usize, _gamma: f64, _inject: bool) -> f64 {
    let a = random_symplectic(n, scale_for(n), rng);
    or_failed((|| {
        let ainv = symplectic_inverse(&a)?;
        let member = is_symplectic(&ainv.g, &ainv.h, tol::COCYCLE)?.max_residual();
        let prod = a.compose(&ainv)?;
        let unit = (prod.to_full() - CMatrix::identity(2 * n, 2 * n)).norm();
        Ok(member.max(unit))
    })())
}

fn chk_exp_inverse(rng: &mut Rng, n: usize, _gamma: f64, _inject: bool) -> f64 {
    let alg = random_sp_algebra(n, scale_for(n), rng);
    or_failed((|| {
        let e = exp_to_group(&alg)?;
        let einv = exp_to_group(&alg.neg())?;
        let prod = e.compose(&einv)?;
        Ok((prod.to_full() - CMatrix::identity(2 * n, 2 * n)).norm())
    })())
}

// ── siegel ──────────────────────────────────────────────────────────

fn chk_action_law(rng: &mut Rng, n: usize, _gamma: f64, _inject: bool) -> f64 {
    let a = random_symplectic(n, scale_for(n), rng);
    let b = random_symplectic(n, scale_for(n), rng);
    let z = random_point(n, rng);
    or_failed((|| {
        let lhs = mobius_act(&a.compose(&b)?, &z)?;
        let rhs = mobius_act(&a, &mobius_act(&b, &z)?)?;
        Ok((lhs.z - rhs.z).norm())
    })())
}

fn chk_isotropy_fixes_zero(rng: &mut Rng, n: usize, _gamma: f64, _inject: bool) -> f64 {
    let u = random_isotropy(n, rng);
    or_failed(mobius_act(&u, &SiegelPoint::zero(n)).map(|p| p.z.norm()))
}

fn chk_transitivity(rng: &mut Rng, n: usize, _gamma: f64, inject: bool) -> f64 {
    let mut z = random_point(n, rng).z;
    if inject {
        // push the candidate outside the disc (and, for n > 1, off the
        // symmetric subspace)
        if n > 1 {
            z[(0, 1)] += c(2.0, 0.0);
        } else {
            z[(0, 0)] = c(1.5, 0.0);
        }
    }
    or_failed((|| {
        let z = SiegelPoint::new(z, tol::MEMBERSHIP)?;
        let gz = transitive_element(&z)?;
        let back = mobius_act(&gz, &SiegelPoint::zero(n))?;
        Ok((back.z - z.z).norm())
    })())
}

fn chk_pushforward_fd(rng: &mut Rng, n: usize, _gamma: f64, _inject: bool) -> f64 {
    let a = random_symplectic(n, scale_for(n), rng);
    let z = random_point(n, rng);
    let u = random_tangent(n, rng);
    or_failed((|| {
        let pushed = mobius_tangent(&a, &z, &u)?;
        let eps = tol::FD_STEP;
        let zp = SiegelPoint::new(&z.z + &u.v * c(eps, 0.0), 1e-6)?;
        let zm = SiegelPoint::new(&z.z - &u.v * c(eps, 0.0), 1e-6)?;
        let fd = (mobius_act(&a, &zp)?.z - mobius_act(&a, &zm)?.z) * c(1.0 / (2.0 * eps), 0.0);
        Ok((pushed.v - fd).norm())
    })())
}

fn invariance_residual(rng: &mut Rng, n: usize, kahler_only: bool) -> orbit_core::Result<f64> {
    let a = random_symplectic(n, scale_for(n), rng);
    let z = random_point(n, rng);
    let u = random_tangent(n, rng);
    let v = random_tangent(n, rng);
    let zp = mobius_act(&a, &z)?;
    let up = mobius_tangent(&a, &z, &u)?;
    let vp = mobius_tangent(&a, &z, &v)?;
    if kahler_only {
        let before = siegel_kahler(&z, &u, &v)?;
        let after = siegel_kahler(&zp, &up, &vp)?;
        Ok((after - before).abs() / before.abs().max(1.0))
    } else {
        let before = siegel_metric(&z, &u, &v)?;
        let after = siegel_metric(&zp, &up, &vp)?;
        Ok((after - before).norm() / before.norm().max(1.0))
    }
}

fn chk_metric_invariance(rng: &mut Rng, n: usize, _gamma: f64, _inject: bool) -> f64 {
    or_failed(invariance_residual(rng, n, false))
}

fn chk_kahler_invariance(rng: &mut Rng, n: usize, _gamma: f64, _inject: bool) -> f64 {
    or_failed(invariance_residual(rng, n, true))
}

fn chk_metric_positivity(rng: &mut Rng, n: usize, _gamma: f64, _inject: bool) -> f64 {
    let z = random_point(n, rng);
    let u = random_tangent(n, rng);
    or_failed((|| {
        let h = siegel_metric(&z, &u, &u)?;
        let imag = h.im.abs();
        let positive = if h.re > 0.0 { 0.0 } else { 1.0 };
        Ok(imag.max(positive))
    })())
}

fn chk_gap_transpose(rng: &mut Rng, n: usize, _gamma: f64, _inject: bool) -> f64 {
    let z = random_point(n, rng);
    let id = CMatrix::identity(n, n);
    let lhs = (&id - &z.z * z.z.conjugate()).transpose();
    let rhs = &id - z.z.adjoint() * &z.z;
    (lhs - rhs).norm()
}

fn chk_transitive_membership(rng: &mut Rng, n: usize, _gamma: f64, _inject: bool) -> f64 {
    let z = random_point(n, rng);
    or_failed(transitive_element(&z).map(|gz| gz.membership_residual()))
}

// ── coadjoint ───────────────────────────────────────────────────────

fn chk_schwinger_antisymmetry(rng: &mut Rng, n: usize, _gamma: f64, _inject: bool) -> f64 {
    let a = random_block(n, rng);
    let b = random_block(n, rng);
    or_failed((|| Ok((schwinger(&a, &b)? + schwinger(&b, &a)?).norm()))())
}

fn chk_cocycle_identity(rng: &mut Rng, n: usize, _gamma: f64, _inject: bool) -> f64 {
    let a = random_block(n, rng);
    let b = random_block(n, rng);
    let cc = random_block(n, rng);
    or_failed((|| {
        let cyc = schwinger(&a.commutator(&b)?, &cc)?
            + schwinger(&b.commutator(&cc)?, &a)?
            + schwinger(&cc.commutator(&a)?, &b)?;
        Ok(cyc.norm())
    })())
}

fn chk_extended_jacobi(rng: &mut Rng, n: usize, _gamma: f64, _inject: bool) -> f64 {
    let x = ExtendedAlgebraElement::new(random_block(n, rng), c(0.4, -0.2));
    let y = ExtendedAlgebraElement::new(random_block(n, rng), c(-1.0, 0.8));
    let z = ExtendedAlgebraElement::new(random_block(n, rng), c(0.1, 2.0));
    or_failed((|| {
        let j1 = orbit_core::coadjoint::extended_bracket(
            &x,
            &orbit_core::coadjoint::extended_bracket(&y, &z)?,
        )?;
        let j2 = orbit_core::coadjoint::extended_bracket(
            &y,
            &orbit_core::coadjoint::extended_bracket(&z, &x)?,
        )?;
        let j3 = orbit_core::coadjoint::extended_bracket(
            &z,
            &orbit_core::coadjoint::extended_bracket(&x, &y)?,
        )?;
        let ops = j1.op.add(&j2.op)?.add(&j3.op)?;
        Ok(ops.hs_norm() + (j1.lambda + j2.lambda + j3.lambda).norm())
    })())
}

fn chk_sigma_cocycle_law(rng: &mut Rng, n: usize, _gamma: f64, _inject: bool) -> f64 {
    let a = random_symplectic(n, scale_for(n), rng);
    let b = random_symplectic(n, scale_for(n), rng);
    or_failed((|| {
        let lhs = sigma_of_symplectic(&a.compose(&b)?)?;
        let afull = a.block_operator();
        let ainv = BlockOperator::from_full(&kernel::invert_checked(&afull.to_full())?)?;
        let rhs = afull
            .mul(&sigma_of_symplectic(&b)?.0)?
            .mul(&ainv)?
            .add(&sigma_of_symplectic(&a)?.0)?;
        lhs.0.sub(&rhs).map(|d| d.hs_norm())
    })())
}

fn chk_coadjoint_composition(rng: &mut Rng, n: usize, gamma: f64, _inject: bool) -> f64 {
    let g1 = ExtendedGroupElement::from_symplectic(
        &random_symplectic(n, scale_for(n), rng),
        c(1.0, 0.0),
    );
    let g2 = ExtendedGroupElement::from_symplectic(
        &random_symplectic(n, scale_for(n), rng),
        c(1.0, 0.0),
    );
    let m = ExtendedPredual::new(
        PredualElement(random_sp_algebra(n, 1.0, rng).block_operator()),
        c(gamma, 0.0),
    );
    or_failed((|| {
        let (g1, g2) = (g1?, g2?);
        let product = coadjoint(&g1.mul(&g2)?, &m)?;
        let contra = coadjoint(&g2, &coadjoint(&g1, &m)?)?;
        product.distance(&contra)
    })())
}

fn chk_duality(rng: &mut Rng, n: usize, gamma: f64, _inject: bool) -> f64 {
    let g = ExtendedGroupElement::from_symplectic(
        &random_symplectic(n, scale_for(n), rng),
        c(1.0, 0.0),
    );
    let m = ExtendedPredual::new(
        PredualElement(random_sp_algebra(n, 1.0, rng).block_operator()),
        c(gamma, 0.0),
    );
    let x =
        ExtendedAlgebraElement::new(random_sp_algebra(n, 1.0, rng).block_operator(), c(0.3, 0.5));
    or_failed((|| {
        let g = g?;
        let lhs = extended_pairing(&coadjoint(&g, &m)?, &x)?;
        let rhs = extended_pairing(&m, &extended_adjoint(&g, &x)?)?;
        Ok((lhs - rhs).norm())
    })())
}

fn chk_ad_star_derivative(rng: &mut Rng, n: usize, gamma: f64, _inject: bool) -> f64 {
    let alg = random_sp_algebra(n, scale_for(n), rng);
    let m = ExtendedPredual::new(
        PredualElement(random_sp_algebra(n, 1.0, rng).block_operator()),
        c(gamma, 0.0),
    );
    let x = ExtendedAlgebraElement::new(alg.block_operator(), c(0.0, 0.0));
    or_failed((|| {
        let inf = ad_star(&x, &m)?;
        let eps = tol::FD_STEP;
        let gp =
            ExtendedGroupElement::from_symplectic(&exp_to_group(&alg.scale(eps))?, c(1.0, 0.0))?;
        let gm =
            ExtendedGroupElement::from_symplectic(&exp_to_group(&alg.scale(-eps))?, c(1.0, 0.0))?;
        let fd = coadjoint(&gp, &m)?
            .mu
            .0
            .sub(&coadjoint(&gm, &m)?.mu.0)?
            .scale(c(1.0 / (2.0 * eps), 0.0));
        inf.mu.0.sub(&fd).map(|d| d.hs_norm())
    })())
}

fn chk_kks_reality(rng: &mut Rng, n: usize, _gamma: f64, inject: bool) -> f64 {
    let a = random_sp_algebra(n, 1.0, rng);
    let b = random_sp_algebra(n, 1.0, rng);
    let mut a_block = a.block_operator();
    if inject {
        // break the real form: mp is no longer the conjugate of pm
        a_block.mp[(0, 0)] += c(0.0, 1e-3);
    }
    or_failed((|| {
        let s = schwinger(&a_block, &b.block_operator())?;
        Ok(s.im.abs())
    })())
}

fn chk_pullback_vs_kks(rng: &mut Rng, n: usize, gamma: f64, _inject: bool) -> f64 {
    let a = random_sp_algebra(n, 1.0, rng);
    let b = random_sp_algebra(n, 1.0, rng);
    or_failed((|| {
        let k = kks_form(&a, &b, gamma)?;
        let p = pullback_form(&a, &b, gamma)?;
        Ok((k - p).abs())
    })())
}

fn chk_symplecto_proportionality(rng: &mut Rng, n: usize, gamma: f64, _inject: bool) -> f64 {
    let a = random_sp_algebra(n, 1.0, rng);
    let b = random_sp_algebra(n, 1.0, rng);
    or_failed((|| {
        let chk = symplecto_check(&a, &b, gamma)?;
        Ok(chk.residual / chk.omega_hat.abs().max(1.0))
    })())
}

fn chk_isotropy_fixes_base(rng: &mut Rng, n: usize, gamma: f64, _inject: bool) -> f64 {
    let base = ExtendedPredual::base_point(n, c(gamma, 0.0));
    let u = random_isotropy(n, rng);
    or_failed((|| {
        let g = ExtendedGroupElement::from_symplectic(&u, c(1.0, 0.0))?;
        coadjoint(&g, &base)?.distance(&base)
    })())
}

fn chk_nonisotropy_moves(rng: &mut Rng, n: usize, gamma: f64, _inject: bool) -> f64 {
    let base = ExtendedPredual::base_point(n, c(gamma, 0.0));
    let mut alg = random_sp_algebra(n, scale_for(n), rng);
    for _ in 0..100 {
        if alg.a2.norm() >= 0.05 {
            break;
        }
        alg = random_sp_algebra(n, scale_for(n), rng);
    }
    or_failed((|| {
        let a = exp_to_group(&alg)?;
        let g = ExtendedGroupElement::from_symplectic(&a, c(1.0, 0.0))?;
        let moved = coadjoint(&g, &base)?.distance(&base)?;
        Ok(if moved > tol::NON_ISOTROPY_MOVE {
            0.0
        } else {
            1.0
        })
    })())
}

fn chk_orbit_consistency(rng: &mut Rng, n: usize, gamma: f64, _inject: bool) -> f64 {
    let a = random_symplectic(n, scale_for(n), rng);
    let aprime = random_symplectic(n, scale_for(n), rng);
    or_failed((|| {
        let g = ExtendedGroupElement::from_symplectic(&aprime, c(1.0, 0.0))?;
        let moved = coadjoint(&g, &orbit_point(&a, gamma)?)?;
        let b = symplectic_inverse(&aprime)?.compose(&a)?;
        moved.distance(&orbit_point(&b, gamma)?)
    })())
}

fn chk_orbit_coset_invariance(rng: &mut Rng, n: usize, gamma: f64, _inject: bool) -> f64 {
    let a = random_symplectic(n, scale_for(n), rng);
    let u = random_isotropy(n, rng);
    or_failed((|| {
        let p1 = orbit_point(&a, gamma)?;
        let p2 = orbit_point(&a.compose(&u)?, gamma)?;
        p1.distance(&p2)
    })())
}

fn chk_affine_composition(rng: &mut Rng, n: usize, gamma: f64, _inject: bool) -> f64 {
    let a = random_symplectic(n, scale_for(n), rng).block_operator();
    let b = random_symplectic(n, scale_for(n), rng).block_operator();
    let mu = PredualElement(random_sp_algebra(n, 1.0, rng).block_operator());
    or_failed((|| {
        let lhs = affine_action(&a.mul(&b)?, &mu, c(gamma, 0.0))?;
        let rhs = affine_action(&a, &affine_action(&b, &mu, c(gamma, 0.0))?, c(gamma, 0.0))?;
        lhs.0.sub(&rhs.0).map(|d| d.hs_norm())
    })())
}

fn chk_lambda_independence(rng: &mut Rng, n: usize, gamma: f64, _inject: bool) -> f64 {
    let a = random_symplectic(n, scale_for(n), rng);
    let x_op = random_sp_algebra(n, 1.0, rng).block_operator();
    let m = ExtendedPredual::new(
        PredualElement(random_sp_algebra(n, 1.0, rng).block_operator()),
        c(gamma, 0.0),
    );
    or_failed((|| {
        let g1 = ExtendedGroupElement::from_symplectic(&a, c(1.0, 0.0))?;
        let g2 = ExtendedGroupElement::from_symplectic(&a, c(-2.5, 4.0))?;
        let x1 = ExtendedAlgebraElement::new(x_op.clone(), c(0.0, 0.0));
        let x2 = ExtendedAlgebraElement::new(x_op.clone(), c(31.0, -7.0));
        let ad_gap = extended_adjoint(&g1, &x1)?
            .op
            .sub(&extended_adjoint(&g2, &x1)?.op)?
            .hs_norm();
        let ad_star_gap = ad_star(&x1, &m)?
            .mu
            .0
            .sub(&ad_star(&x2, &m)?.mu.0)?
            .hs_norm();
        let coad_gap = coadjoint(&g1, &m)?.distance(&coadjoint(&g2, &m)?)?;
        Ok(ad_gap.max(ad_star_gap).max(coad_gap))
    })())
}

fn checks(id: SuiteId) -> Vec<Check> {
    match id {
        SuiteId::Polarized => vec![
            Check {
                name: "conj_multiplicative",
                tolerance: tol::TIGHT,
                injectable: false,
                run: chk_conj_multiplicative,
            },
            Check {
                name: "conj_involution",
                tolerance: tol::TIGHT,
                injectable: false,
                run: chk_conj_involution,
            },
            Check {
                name: "transpose_reversal",
                tolerance: tol::TIGHT,
                injectable: false,
                run: chk_transpose_reversal,
            },
            Check {
                name: "trace_cyclic",
                tolerance: tol::ALGEBRAIC,
                injectable: false,
                run: chk_trace_cyclic,
            },
            Check {
                name: "trace_similarity",
                tolerance: tol::INVERSE_CHAIN,
                injectable: false,
                run: chk_trace_similarity,
            },
            Check {
                name: "pairing_nondegenerate",
                tolerance: 0.5,
                injectable: true,
                run: chk_pairing_nondegenerate,
            },
        ],
        SuiteId::Symplectic => vec![
            Check {
                name: "closure",
                tolerance: tol::COCYCLE,
                injectable: true,
                run: chk_closure,
            },
            Check {
                name: "omega_invariance",
                tolerance: tol::COCYCLE,
                injectable: false,
                run: chk_omega_invariance,
            },
            Check {
                name: "derived_identities",
                tolerance: tol::COCYCLE,
                injectable: false,
                run: chk_derived_identities,
            },
            Check {
                name: "g_invertible",
                tolerance: 1.0,
                injectable: false,
                run: chk_g_invertible,
            },
            Check {
                name: "inverse_consistency",
                tolerance: tol::COCYCLE,
                injectable: false,
                run: chk_inverse_consistency,
            },
            Check {
                name: "exp_inverse",
                tolerance: tol::COCYCLE,
                injectable: false,
                run: chk_exp_inverse,
            },
        ],
        SuiteId::Siegel => vec![
            Check {
                name: "action_law",
                tolerance: tol::INVERSE_CHAIN,
                injectable: false,
                run: chk_action_law,
            },
            Check {
                name: "isotropy_fixes_zero",
                tolerance: tol::TIGHT,
                injectable: false,
                run: chk_isotropy_fixes_zero,
            },
            Check {
                name: "transitivity",
                tolerance: tol::INVERSE_CHAIN,
                injectable: true,
                run: chk_transitivity,
            },
            Check {
                name: "pushforward_fd",
                tolerance: tol::FD_TOL,
                injectable: false,
                run: chk_pushforward_fd,
            },
            Check {
                name: "metric_invariance",
                tolerance: tol::METRIC_INVARIANCE_REL,
                injectable: false,
                run: chk_metric_invariance,
            },
            Check {
                name: "kahler_invariance",
                tolerance: tol::METRIC_INVARIANCE_REL,
                injectable: false,
                run: chk_kahler_invariance,
            },
            Check {
                name: "metric_positivity",
                tolerance: tol::ISOTROPY_FIX,
                injectable: false,
                run: chk_metric_positivity,
            },
            Check {
                name: "gap_transpose",
                tolerance: tol::TIGHT,
                injectable: false,
                run: chk_gap_transpose,
            },
            Check {
                name: "transitive_membership",
                tolerance: tol::COCYCLE,
                injectable: false,
                run: chk_transitive_membership,
            },
        ],
        SuiteId::Coadjoint => vec![
            Check {
                name: "schwinger_antisymmetry",
                tolerance: tol::ALGEBRAIC,
                injectable: false,
                run: chk_schwinger_antisymmetry,
            },
            Check {
                name: "cocycle_identity",
                tolerance: tol::COCYCLE,
                injectable: false,
                run: chk_cocycle_identity,
            },
            Check {
                name: "extended_jacobi",
                tolerance: tol::COCYCLE,
                injectable: false,
                run: chk_extended_jacobi,
            },
            Check {
                name: "sigma_cocycle_law",
                tolerance: tol::COCYCLE,
                injectable: false,
                run: chk_sigma_cocycle_law,
            },
            Check {
                name: "coadjoint_composition",
                tolerance: tol::INVERSE_CHAIN,
                injectable: false,
                run: chk_coadjoint_composition,
            },
            Check {
                name: "duality",
                tolerance: tol::COCYCLE,
                injectable: false,
                run: chk_duality,
            },
            Check {
                name: "ad_star_derivative",
                tolerance: tol::FD_TOL,
                injectable: false,
                run: chk_ad_star_derivative,
            },
            Check {
                name: "kks_reality",
                tolerance: tol::REALITY,
                injectable: true,
                run: chk_kks_reality,
            },
            Check {
                name: "pullback_vs_kks",
                tolerance: tol::ALGEBRAIC,
                injectable: false,
                run: chk_pullback_vs_kks,
            },
            Check {
                name: "symplecto_proportionality",
                tolerance: tol::COCYCLE,
                injectable: false,
                run: chk_symplecto_proportionality,
            },
            Check {
                name: "isotropy_fixes_base",
                tolerance: tol::ISOTROPY_FIX,
                injectable: false,
                run: chk_isotropy_fixes_base,
            },
            Check {
                name: "nonisotropy_moves",
                tolerance: 0.5,
                injectable: false,
                run: chk_nonisotropy_moves,
            },
            Check {
                name: "orbit_consistency",
                tolerance: tol::INVERSE_CHAIN,
                injectable: false,
                run: chk_orbit_consistency,
            },
            Check {
                name: "orbit_coset_invariance",
                tolerance: tol::COCYCLE,
                injectable: false,
                run: chk_orbit_coset_invariance,
            },
            Check {
                name: "affine_composition",
                tolerance: tol::INVERSE_CHAIN,
                injectable: false,
                run: chk_affine_composition,
            },
            Check {
                name: "lambda_independence",
                tolerance: 1e-15,
                injectable: false,
                run: chk_lambda_independence,
            },
        ],
    }
}

pub fn check_names(id: SuiteId) -> Vec<&'static str> {
    checks(id).iter().map(|c| c.name).collect()
}

pub fn run_suite(id: SuiteId, cfg: &SuiteConfig) -> Vec<CheckOutcome> {
    checks(id)
        .iter()
        .map(|check| {
            let mut max_residual: f64 = 0.0;
            for trial in 0..cfg.trials {
                let mut rng = rng_from_seed(cfg.seed.wrapping_add(trial as u64));
                let inject = cfg.inject_violation && check.injectable && trial == 0;
                let residual = (check.run)(&mut rng, cfg.n, cfg.gamma, inject);
                max_residual = max_residual.max(residual.min(FAILED_TRIAL));
            }
            let tolerance = cfg
                .tol_overrides
                .get(check.name)
                .copied()
                .unwrap_or(check.tolerance);
            CheckOutcome {
                name: check.name.to_string(),
                trials: cfg.trials,
                max_residual,
                tolerance,
                pass: max_residual <= tolerance,
            }
        })
        .collect()
}
