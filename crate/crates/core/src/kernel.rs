//! Dense complex linear-algebra kernels on which all operator modules are
//! built: matrix exponential, Hermitian functional calculus, norms,
//! positive-definiteness tests and checked inversion.
//!
//! All functions are pure; random generation takes an explicit RNG so every
//! caller controls reproducibility.

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{CoreError, Result};
use crate::tol;

/// Dense complex matrix, the universal carrier type of the crate.
pub type CMatrix = DMatrix<Complex64>;
/// Dense complex vector.
pub type CVector = DVector<Complex64>;

pub use rand_chacha::ChaCha8Rng as SeededRng;

/// Shorthand complex constructor.
#[inline]
pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// The imaginary unit.
pub const IM: Complex64 = Complex64 { re: 0.0, im: 1.0 };

pub fn ensure_square(a: &CMatrix) -> Result<()> {
    if a.nrows() != a.ncols() {
        return Err(CoreError::NonSquare {
            rows: a.nrows(),
            cols: a.ncols(),
        });
    }
    Ok(())
}

pub fn ensure_finite(a: &CMatrix) -> Result<()> {
    for z in a.iter() {
        if !z.re.is_finite() || !z.im.is_finite() {
            return Err(CoreError::NumericRange(format!(
                "non-finite entry {z} in a {}x{} matrix",
                a.nrows(),
                a.ncols()
            )));
        }
    }
    Ok(())
}

/// Frobenius norm; the finite-dimensional Hilbert–Schmidt norm.
pub fn hs_norm(a: &CMatrix) -> f64 {
    a.norm()
}

/// Largest singular value.
pub fn op_norm(a: &CMatrix) -> f64 {
    if a.is_empty() {
        return 0.0;
    }
    a.clone().svd(false, false).singular_values.max()
}

/// Ratio of extreme singular values; `inf` when the smallest vanishes.
pub fn cond_number(a: &CMatrix) -> f64 {
    let sv = a.clone().svd(false, false).singular_values;
    let smax = sv.max();
    let smin = sv.min();
    if smin == 0.0 {
        f64::INFINITY
    } else {
        smax / smin
    }
}

/// Inverse guarded by the condition-number ceiling.
pub fn invert_checked(a: &CMatrix) -> Result<CMatrix> {
    ensure_square(a)?;
    let cond = cond_number(a);
    if !cond.is_finite() || cond > tol::COND_LIMIT {
        return Err(CoreError::Singular {
            cond,
            limit: tol::COND_LIMIT,
        });
    }
    a.clone()
        .try_inverse()
        .ok_or_else(|| CoreError::Internal("LU inversion failed below condition ceiling".into()))
}

/// Hermitian part `(A + A*)/2`.
pub fn hermitian_part(a: &CMatrix) -> CMatrix {
    (a + a.adjoint()) * c(0.5, 0.0)
}

/// Frobenius distance from `A` to its own adjoint.
pub fn hermiticity_residual(a: &CMatrix) -> f64 {
    (a - a.adjoint()).norm()
}

// ── Matrix exponential ──────────────────────────────────────────────

// Scaling-and-squaring with diagonal Padé approximants, orders chosen by
// the 1-norm thresholds of Higham's method.

fn one_norm(a: &CMatrix) -> f64 {
    (0..a.ncols())
        .map(|j| a.column(j).iter().map(|z| z.norm()).sum::<f64>())
        .fold(0.0, f64::max)
}

fn pade_uv(a: &CMatrix, b: &[f64]) -> (CMatrix, CMatrix) {
    let n = a.nrows();
    let id = CMatrix::identity(n, n);
    let a2 = a * a;
    let mut even = &id * c(b[0], 0.0);
    let mut odd = &id * c(b[1], 0.0);
    let mut pow = id;
    for k in (2..b.len()).step_by(2) {
        pow = &pow * &a2;
        even += &pow * c(b[k], 0.0);
        if k + 1 < b.len() {
            odd += &pow * c(b[k + 1], 0.0);
        }
    }
    (a * odd, even)
}

fn pade13_uv(a: &CMatrix) -> (CMatrix, CMatrix) {
    const B: [f64; 14] = [
        64764752532480000.0,
        32382376266240000.0,
        7771770303897600.0,
        1187353796428800.0,
        129060195264000.0,
        10559470521600.0,
        670442572800.0,
        33522128640.0,
        1323241920.0,
        40840800.0,
        960960.0,
        16380.0,
        182.0,
        1.0,
    ];
    let n = a.nrows();
    let id = CMatrix::identity(n, n);
    let a2 = a * a;
    let a4 = &a2 * &a2;
    let a6 = &a4 * &a2;

    let w = &a6 * c(B[13], 0.0) + &a4 * c(B[11], 0.0) + &a2 * c(B[9], 0.0);
    let u_inner =
        &a6 * w + &a6 * c(B[7], 0.0) + &a4 * c(B[5], 0.0) + &a2 * c(B[3], 0.0) + &id * c(B[1], 0.0);
    let u = a * u_inner;

    let w2 = &a6 * c(B[12], 0.0) + &a4 * c(B[10], 0.0) + &a2 * c(B[8], 0.0);
    let v =
        &a6 * w2 + &a6 * c(B[6], 0.0) + &a4 * c(B[4], 0.0) + &a2 * c(B[2], 0.0) + id * c(B[0], 0.0);
    (u, v)
}

/// Matrix exponential of a square complex matrix.
///
/// Fails on non-square input and when the result leaves the representable
/// floating-point range.
pub fn mat_exp(a: &CMatrix) -> Result<CMatrix> {
    ensure_square(a)?;
    ensure_finite(a)?;

    const B3: [f64; 4] = [120.0, 60.0, 12.0, 1.0];
    const B5: [f64; 6] = [30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0];
    const B7: [f64; 8] = [
        17297280.0, 8648640.0, 1995840.0, 277200.0, 25200.0, 1512.0, 56.0, 1.0,
    ];
    const B9: [f64; 10] = [
        17643225600.0,
        8821612800.0,
        2075673600.0,
        302702400.0,
        30270240.0,
        2162160.0,
        110880.0,
        3960.0,
        90.0,
        1.0,
    ];
    const THETA13: f64 = 5.371920351148152;

    let norm = one_norm(a);
    let (u, v, squarings) = if norm < 1.495_585_217_958_292e-2 {
        let (u, v) = pade_uv(a, &B3);
        (u, v, 0u32)
    } else if norm < 2.539_398_330_063_23e-1 {
        let (u, v) = pade_uv(a, &B5);
        (u, v, 0)
    } else if norm < 9.504_178_996_162_932e-1 {
        let (u, v) = pade_uv(a, &B7);
        (u, v, 0)
    } else if norm < 2.097_847_961_257_068 {
        let (u, v) = pade_uv(a, &B9);
        (u, v, 0)
    } else {
        let s = (norm / THETA13).log2().ceil().max(0.0) as u32;
        let scaled = a * c(2f64.powi(-(s as i32)), 0.0);
        let (u, v) = pade13_uv(&scaled);
        (u, v, s)
    };

    let numer = &v + &u;
    let denom = &v - &u;
    let mut r = denom
        .lu()
        .solve(&numer)
        .ok_or_else(|| CoreError::Internal("Padé denominator is singular".into()))?;
    for _ in 0..squarings {
        r = &r * &r;
    }
    ensure_finite(&r).map_err(|_| {
        CoreError::NumericRange("matrix exponential overflowed the double range".into())
    })?;
    Ok(r)
}

// ── Hermitian spectral calculus ─────────────────────────────────────

fn hermiticity_gate(a: &CMatrix, rel_tol: f64) -> Result<()> {
    let residual = hermiticity_residual(a);
    let gate = rel_tol * a.norm().max(1.0);
    if residual > gate {
        return Err(CoreError::NotHermitian {
            residual,
            tol: gate,
        });
    }
    Ok(())
}

/// True iff the smallest eigenvalue of the Hermitian part of `A` exceeds
/// `threshold`.  The input must be Hermitian within `threshold`
/// (relative Frobenius) to begin with.
pub fn is_positive_definite(a: &CMatrix, threshold: f64) -> Result<bool> {
    ensure_square(a)?;
    ensure_finite(a)?;
    let residual = hermiticity_residual(a);
    if residual > threshold * a.norm() {
        return Err(CoreError::NotHermitian {
            residual,
            tol: threshold * a.norm(),
        });
    }
    Ok(min_eigenvalue(a) > threshold)
}

/// [`is_positive_definite`] with the default gate `PD_DEFAULT_FACTOR · ‖A‖`.
pub fn is_positive_definite_default(a: &CMatrix) -> Result<bool> {
    is_positive_definite(
        a,
        tol::PD_DEFAULT_FACTOR * op_norm(a).max(f64::MIN_POSITIVE),
    )
}

/// Smallest eigenvalue of the Hermitian part.
pub fn min_eigenvalue(a: &CMatrix) -> f64 {
    let eig = SymmetricEigen::new(hermitian_part(a));
    eig.eigenvalues.min()
}

/// Apply a scalar function to a Hermitian matrix through its unitary
/// eigendecomposition, `f(A) = U f(Λ) U*`.
///
/// The function reports its own domain: returning `None` for an eigenvalue
/// aborts with a spectrum-domain error instead of clamping.
pub fn herm_funcalc(a: &CMatrix, f: impl Fn(f64) -> Option<f64>) -> Result<CMatrix> {
    ensure_square(a)?;
    ensure_finite(a)?;
    hermiticity_gate(a, tol::HERMITICITY_REL)?;
    let eig = SymmetricEigen::new(hermitian_part(a));
    let mapped: Vec<Complex64> = eig
        .eigenvalues
        .iter()
        .map(|&l| {
            f(l).map(|y| c(y, 0.0))
                .ok_or(CoreError::SpectrumDomain { eigenvalue: l })
        })
        .collect::<Result<_>>()?;
    let diag = CMatrix::from_diagonal(&CVector::from_vec(mapped));
    Ok(&eig.eigenvectors * diag * eig.eigenvectors.adjoint())
}

// ── Seeded random generation ────────────────────────────────────────

/// The crate-wide reproducible RNG.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Matrix with i.i.d. complex Gaussian entries scaled by `scale`.
pub fn random_gaussian(rows: usize, cols: usize, scale: f64, rng: &mut impl Rng) -> CMatrix {
    CMatrix::from_fn(rows, cols, |_, _| {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        c(re * scale, im * scale)
    })
}

/// Haar-ish random unitary: the Q factor of a complex Gaussian matrix.
pub fn random_unitary(n: usize, rng: &mut impl Rng) -> CMatrix {
    let g = random_gaussian(n, n, 1.0, rng);
    g.qr().q()
}

/// Random vector with i.i.d. complex Gaussian entries.
pub fn random_vector(len: usize, scale: f64, rng: &mut impl Rng) -> CVector {
    CVector::from_fn(len, |_, _| {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        c(re * scale, im * scale)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cm(rows: usize, cols: usize, data: &[Complex64]) -> CMatrix {
        CMatrix::from_row_slice(rows, cols, data)
    }

    #[test]
    fn exp_of_zero_is_identity() {
        let z = CMatrix::zeros(2, 2);
        let e = mat_exp(&z).unwrap();
        assert_eq!(e, CMatrix::identity(2, 2));
    }

    #[test]
    fn exp_hyperbolic_closed_form() {
        // exp([[0, t], [t, 0]]) = [[cosh t, sinh t], [sinh t, cosh t]]
        let t = 0.7;
        let a = cm(2, 2, &[c(0.0, 0.0), c(t, 0.0), c(t, 0.0), c(0.0, 0.0)]);
        let e = mat_exp(&a).unwrap();
        let expected = cm(
            2,
            2,
            &[
                c(t.cosh(), 0.0),
                c(t.sinh(), 0.0),
                c(t.sinh(), 0.0),
                c(t.cosh(), 0.0),
            ],
        );
        assert!((e - expected).norm() < 1e-13);
    }

    #[test]
    fn exp_diagonal_closed_form() {
        let l = 2.0f64.ln();
        let a = CMatrix::from_diagonal(&CVector::from_vec(vec![c(l, 0.0), c(-l, 0.0)]));
        let e = mat_exp(&a).unwrap();
        let expected = CMatrix::from_diagonal(&CVector::from_vec(vec![c(2.0, 0.0), c(0.5, 0.0)]));
        assert!((e - expected).norm() < 1e-13);
    }

    #[test]
    fn exp_rejects_non_square() {
        let a = CMatrix::zeros(2, 3);
        assert!(matches!(mat_exp(&a), Err(CoreError::NonSquare { .. })));
    }

    #[test]
    fn exp_reports_overflow() {
        let a = cm(1, 1, &[c(1e4, 0.0)]);
        assert!(matches!(mat_exp(&a), Err(CoreError::NumericRange(_))));
    }

    #[test]
    fn exp_rejects_non_finite_input() {
        let a = cm(1, 1, &[c(f64::NAN, 0.0)]);
        assert!(matches!(mat_exp(&a), Err(CoreError::NumericRange(_))));
    }

    #[test]
    fn pd_examples() {
        let id = CMatrix::identity(2, 2);
        assert!(is_positive_definite_default(&id).unwrap());
        // eigenvalues {3, -1}
        let a = cm(2, 2, &[c(1.0, 0.0), c(2.0, 0.0), c(2.0, 0.0), c(1.0, 0.0)]);
        assert!(!is_positive_definite_default(&a).unwrap());
        let half = &id * c(0.5, 0.0);
        assert!(is_positive_definite_default(&half).unwrap());
    }

    #[test]
    fn pd_rejects_non_hermitian() {
        let a = cm(2, 2, &[c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
        assert!(matches!(
            is_positive_definite_default(&a),
            Err(CoreError::NotHermitian { .. })
        ));
    }

    #[test]
    fn funcalc_identity_function() {
        let a = CMatrix::from_diagonal(&CVector::from_vec(vec![c(0.25, 0.0), c(0.04, 0.0)]));
        let r = herm_funcalc(&a, Some).unwrap();
        assert!((r - a).norm() < 1e-14);
    }

    #[test]
    fn funcalc_artanh_scalar() {
        let a = cm(1, 1, &[c(0.25, 0.0)]);
        let r = herm_funcalc(&a, |x| Some(x.sqrt().atanh() / x.sqrt())).unwrap();
        let expected = 0.5f64.atanh() / 0.5;
        assert!((r[(0, 0)].re - expected).abs() < 1e-14);
        assert!((expected - 1.0986122886681098).abs() < 1e-12);
    }

    #[test]
    fn funcalc_sqrt_diagonal() {
        let a = CMatrix::from_diagonal(&CVector::from_vec(vec![c(2.0, 0.0), c(8.0, 0.0)]));
        let r = herm_funcalc(&a, |x| Some(x.sqrt())).unwrap();
        let expected = CMatrix::from_diagonal(&CVector::from_vec(vec![
            c(2.0f64.sqrt(), 0.0),
            c(2.0 * 2.0f64.sqrt(), 0.0),
        ]));
        assert!((r - expected).norm() < 1e-13);
    }

    #[test]
    fn funcalc_domain_error() {
        let a = cm(1, 1, &[c(1.0, 0.0)]);
        let r = herm_funcalc(&a, |x| {
            if x >= 1.0 - tol::ARTANH_BOUNDARY {
                None
            } else {
                Some(x.sqrt().atanh() / x.sqrt())
            }
        });
        assert!(matches!(r, Err(CoreError::SpectrumDomain { .. })));
    }

    #[test]
    fn funcalc_polynomial_matches_direct_evaluation() {
        let mut rng = rng_from_seed(11);
        for _ in 0..20 {
            let g = random_gaussian(4, 4, 1.0, &mut rng);
            let a = hermitian_part(&g);
            let by_calc = herm_funcalc(&a, |x| Some(x * x - 3.0 * x + 1.0)).unwrap();
            let direct = &a * &a - &a * c(3.0, 0.0) + CMatrix::identity(4, 4);
            let rel = (by_calc - &direct).norm() / direct.norm().max(1.0);
            assert!(rel < 1e-10, "relative deviation {rel}");
        }
    }

    #[test]
    fn norms_examples() {
        assert_eq!(hs_norm(&CMatrix::zeros(3, 3)), 0.0);
        assert!((hs_norm(&CMatrix::identity(3, 3)) - 3.0f64.sqrt()).abs() < 1e-15);
        let a = cm(1, 2, &[c(3.0, 0.0), c(4.0, 0.0)]);
        assert!((hs_norm(&a) - 5.0).abs() < 1e-15);

        assert!((op_norm(&CMatrix::identity(4, 4)) - 1.0).abs() < 1e-12);
        let d = CMatrix::from_diagonal(&CVector::from_vec(vec![c(2.0, 0.0), c(-3.0, 0.0)]));
        assert!((op_norm(&d) - 3.0).abs() < 1e-12);
        let shift = cm(2, 2, &[c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
        assert!((op_norm(&shift) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn invert_checked_rejects_singular() {
        let a = CMatrix::zeros(2, 2);
        assert!(matches!(
            invert_checked(&a),
            Err(CoreError::Singular { .. })
        ));
    }

    #[test]
    fn seeded_rng_is_reproducible() {
        let mut r1 = rng_from_seed(7);
        let mut r2 = rng_from_seed(7);
        let a = random_gaussian(3, 3, 1.0, &mut r1);
        let b = random_gaussian(3, 3, 1.0, &mut r2);
        assert_eq!(a, b);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn exp_inverse_property(seed in 0u64..1_000, n in 1usize..5) {
            let mut rng = rng_from_seed(seed);
            let mut a = random_gaussian(n, n, 0.6, &mut rng);
            let norm = op_norm(&a);
            if norm > 2.0 {
                a *= c(2.0 / norm, 0.0);
            }
            let e = mat_exp(&a).unwrap();
            let einv = mat_exp(&(-&a)).unwrap();
            let resid = (&e * &einv - CMatrix::identity(n, n)).norm();
            prop_assert!(resid < 1e-10, "residual {}", resid);
        }

        #[test]
        fn funcalc_exp_matches_mat_exp(seed in 0u64..1_000, n in 1usize..5) {
            let mut rng = rng_from_seed(seed);
            let a = hermitian_part(&random_gaussian(n, n, 0.7, &mut rng));
            let via_calc = herm_funcalc(&a, |x| Some(x.exp())).unwrap();
            let via_exp = mat_exp(&a).unwrap();
            prop_assert!((via_calc - via_exp).norm() < 1e-9);
        }

        #[test]
        fn hs_norm_unitary_invariance(seed in 0u64..1_000, n in 1usize..6) {
            let mut rng = rng_from_seed(seed);
            let a = random_gaussian(n, n, 1.0, &mut rng);
            let u = random_unitary(n, &mut rng);
            let v = random_unitary(n, &mut rng);
            let diff = (hs_norm(&(&u * &a * &v)) - hs_norm(&a)).abs();
            prop_assert!(diff < 1e-10, "difference {}", diff);
        }

        #[test]
        fn pd_congruence(seed in 0u64..1_000, n in 1usize..5) {
            let mut rng = rng_from_seed(seed);
            // well-conditioned positive definite A = M*M + I/2
            let m = random_gaussian(n, n, 0.5, &mut rng);
            let a = m.adjoint() * &m + CMatrix::identity(n, n) * c(0.5, 0.0);
            prop_assert!(is_positive_definite_default(&a).unwrap());
            // well-conditioned injective B: unitary + small perturbation
            let b = random_unitary(n, &mut rng) + random_gaussian(n, n, 0.05, &mut rng);
            let congruent = b.adjoint() * &a * &b;
            prop_assert!(is_positive_definite_default(&congruent).unwrap());
        }
    }
}
