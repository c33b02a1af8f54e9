//! The polarized space `H = H+ ⊕ H-` at truncation `n` and the block calculus
//! on it.
//!
//! The basis convention fixes everything concretely: an orthonormal basis
//! `{f_1..f_n}` of `H+` is chosen and complex conjugation maps `f_k` to the
//! k-th basis vector of `H-`.  Conjugation of an operator is then entrywise
//! conjugation with the block roles swapped across the anti-diagonal, and the
//! operator transpose `hᵀ = (h̄)*` collapses to the plain matrix transpose.
//! The polarization operator is `d = i(p+ − p−)`, the complex structure in
//! its eigenbasis.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};
use crate::json;
use crate::kernel::{self, c, CMatrix, IM};

/// Orthogonal splitting `H = H+ ⊕ H-` with both summands of dimension `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Polarization {
    n: usize,
}

impl Polarization {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(CoreError::Dimension(
                "polarization dimension must be at least 1".into(),
            ));
        }
        Ok(Polarization { n })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }
}

/// Operator on `H` stored as four `n x n` blocks relative to the
/// polarization:
///
/// ```text
/// a = [ pp  pm ]      pp: H+ -> H+,  pm: H- -> H+,
///     [ mp  mm ]      mp: H+ -> H-,  mm: H- -> H-.
/// ```
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "BlockOperatorJson", into = "BlockOperatorJson")]
pub struct BlockOperator {
    pub n: usize,
    pub pp: CMatrix,
    pub pm: CMatrix,
    pub mp: CMatrix,
    pub mm: CMatrix,
}

#[derive(Clone, Serialize, Deserialize)]
pub struct BlockOperatorJson {
    pub n: usize,
    #[serde(with = "json::matrix")]
    pub pp: CMatrix,
    #[serde(with = "json::matrix")]
    pub pm: CMatrix,
    #[serde(with = "json::matrix")]
    pub mp: CMatrix,
    #[serde(with = "json::matrix")]
    pub mm: CMatrix,
}

impl From<BlockOperator> for BlockOperatorJson {
    fn from(b: BlockOperator) -> Self {
        BlockOperatorJson {
            n: b.n,
            pp: b.pp,
            pm: b.pm,
            mp: b.mp,
            mm: b.mm,
        }
    }
}

impl TryFrom<BlockOperatorJson> for BlockOperator {
    type Error = CoreError;

    fn try_from(r: BlockOperatorJson) -> Result<Self> {
        BlockOperator::new(r.n, r.pp, r.pm, r.mp, r.mm)
    }
}

impl BlockOperator {
    pub fn new(n: usize, pp: CMatrix, pm: CMatrix, mp: CMatrix, mm: CMatrix) -> Result<Self> {
        if n == 0 {
            return Err(CoreError::Dimension("block dimension must be >= 1".into()));
        }
        for (name, m) in [("pp", &pp), ("pm", &pm), ("mp", &mp), ("mm", &mm)] {
            if m.nrows() != n || m.ncols() != n {
                return Err(CoreError::Dimension(format!(
                    "block {name} is {}x{}, expected {n}x{n}",
                    m.nrows(),
                    m.ncols()
                )));
            }
            kernel::ensure_finite(m)?;
        }
        Ok(BlockOperator { n, pp, pm, mp, mm })
    }

    pub fn zeros(n: usize) -> Self {
        let z = CMatrix::zeros(n, n);
        BlockOperator {
            n,
            pp: z.clone(),
            pm: z.clone(),
            mp: z.clone(),
            mm: z,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut b = Self::zeros(n);
        b.pp = CMatrix::identity(n, n);
        b.mm = CMatrix::identity(n, n);
        b
    }

    /// Assemble the full `2n x 2n` matrix.
    pub fn to_full(&self) -> CMatrix {
        let n = self.n;
        let mut full = CMatrix::zeros(2 * n, 2 * n);
        full.view_mut((0, 0), (n, n)).copy_from(&self.pp);
        full.view_mut((0, n), (n, n)).copy_from(&self.pm);
        full.view_mut((n, 0), (n, n)).copy_from(&self.mp);
        full.view_mut((n, n), (n, n)).copy_from(&self.mm);
        full
    }

    /// Split a full `2n x 2n` matrix into blocks.
    pub fn from_full(full: &CMatrix) -> Result<Self> {
        kernel::ensure_square(full)?;
        if !full.nrows().is_multiple_of(2) || full.nrows() == 0 {
            return Err(CoreError::Dimension(format!(
                "full operator must have even positive size, got {}",
                full.nrows()
            )));
        }
        let n = full.nrows() / 2;
        Ok(BlockOperator {
            n,
            pp: full.view((0, 0), (n, n)).into(),
            pm: full.view((0, n), (n, n)).into(),
            mp: full.view((n, 0), (n, n)).into(),
            mm: full.view((n, n), (n, n)).into(),
        })
    }

    pub fn mul(&self, other: &BlockOperator) -> Result<BlockOperator> {
        self.check_dims(other)?;
        Ok(BlockOperator {
            n: self.n,
            pp: &self.pp * &other.pp + &self.pm * &other.mp,
            pm: &self.pp * &other.pm + &self.pm * &other.mm,
            mp: &self.mp * &other.pp + &self.mm * &other.mp,
            mm: &self.mp * &other.pm + &self.mm * &other.mm,
        })
    }

    pub fn add(&self, other: &BlockOperator) -> Result<BlockOperator> {
        self.check_dims(other)?;
        Ok(BlockOperator {
            n: self.n,
            pp: &self.pp + &other.pp,
            pm: &self.pm + &other.pm,
            mp: &self.mp + &other.mp,
            mm: &self.mm + &other.mm,
        })
    }

    pub fn sub(&self, other: &BlockOperator) -> Result<BlockOperator> {
        self.check_dims(other)?;
        Ok(BlockOperator {
            n: self.n,
            pp: &self.pp - &other.pp,
            pm: &self.pm - &other.pm,
            mp: &self.mp - &other.mp,
            mm: &self.mm - &other.mm,
        })
    }

    pub fn scale(&self, z: Complex64) -> BlockOperator {
        BlockOperator {
            n: self.n,
            pp: &self.pp * z,
            pm: &self.pm * z,
            mp: &self.mp * z,
            mm: &self.mm * z,
        }
    }

    pub fn neg(&self) -> BlockOperator {
        self.scale(c(-1.0, 0.0))
    }

    /// Adjoint of the full operator, in blocks.
    pub fn adjoint(&self) -> BlockOperator {
        BlockOperator {
            n: self.n,
            pp: self.pp.adjoint(),
            pm: self.mp.adjoint(),
            mp: self.pm.adjoint(),
            mm: self.mm.adjoint(),
        }
    }

    pub fn commutator(&self, other: &BlockOperator) -> Result<BlockOperator> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    pub fn hs_norm(&self) -> f64 {
        (self.pp.norm_squared()
            + self.pm.norm_squared()
            + self.mp.norm_squared()
            + self.mm.norm_squared())
        .sqrt()
    }

    pub fn op_norm(&self) -> f64 {
        kernel::op_norm(&self.to_full())
    }

    fn check_dims(&self, other: &BlockOperator) -> Result<()> {
        if self.n != other.n {
            return Err(CoreError::Dimension(format!(
                "block operators on different polarizations: {} vs {}",
                self.n, other.n
            )));
        }
        Ok(())
    }
}

/// Element of the predual: structurally a block operator, kept as a distinct
/// type so dual and predual roles cannot be confused in signatures.  At
/// finite truncation the trace-class condition on the diagonal blocks is
/// automatic.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PredualElement(pub BlockOperator);

impl PredualElement {
    pub fn zeros(n: usize) -> Self {
        PredualElement(BlockOperator::zeros(n))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.0.n
    }
}

/// Conjugate operator `ā`, defined by `ā(u) = conj(a(conj u))`: entrywise
/// conjugation with the block roles swapped across the anti-diagonal.  Fixed
/// points are exactly the operators commuting with the real structure.
pub fn conj_op(a: &BlockOperator) -> BlockOperator {
    BlockOperator {
        n: a.n,
        pp: a.mm.conjugate(),
        pm: a.mp.conjugate(),
        mp: a.pm.conjugate(),
        mm: a.pp.conjugate(),
    }
}

/// Operator transpose `hᵀ = (h̄)*` of a single block; in the chosen basis
/// this is the plain matrix transpose.
pub fn transpose_op(h: &CMatrix) -> CMatrix {
    h.transpose()
}

/// The operator `d = i(p+ − p−)`, block-diagonal `(iI, −iI)`.  Squares to
/// `−1`; this is the complex structure in its eigenbasis.
pub fn d_operator(pol: Polarization) -> BlockOperator {
    let n = pol.n();
    let mut b = BlockOperator::zeros(n);
    b.pp = CMatrix::identity(n, n) * IM;
    b.mm = CMatrix::identity(n, n) * (-IM);
    b
}

/// Commutator `[d, A] = dA − Ad`: kills the diagonal blocks and scales the
/// off-diagonal ones to `2i·A(+-)` and `−2i·A(-+)`.
pub fn commutator_with_d(a: &BlockOperator) -> BlockOperator {
    let two_i = c(0.0, 2.0);
    BlockOperator {
        n: a.n,
        pp: CMatrix::zeros(a.n, a.n),
        pm: &a.pm * two_i,
        mp: &a.mp * (-two_i),
        mm: CMatrix::zeros(a.n, a.n),
    }
}

/// Diagnostic norm `‖A‖ + ‖[d,A]‖₂`; always finite at finite truncation.
pub fn restricted_norm(a: &BlockOperator) -> f64 {
    a.op_norm() + commutator_with_d(a).hs_norm()
}

/// Restricted trace: the sum of the traces of the two diagonal blocks.
pub fn restricted_trace(mu: &PredualElement) -> Complex64 {
    mu.0.pp.trace() + mu.0.mm.trace()
}

fn restricted_trace_block(a: &BlockOperator) -> Complex64 {
    a.pp.trace() + a.mm.trace()
}

/// Restricted trace of a product, `Tr_res(μ B)`, without the central parts.
pub fn trace_pairing(mu: &PredualElement, b: &BlockOperator) -> Result<Complex64> {
    Ok(restricted_trace_block(&mu.0.mul(b)?))
}

/// Duality pairing `⟨(μ, γ), (B, b)⟩ = Tr_res(μB) + γ b` between the extended
/// predual and the extended algebra.
pub fn pairing(
    mu_gamma: (&PredualElement, Complex64),
    b_b: (&BlockOperator, Complex64),
) -> Result<Complex64> {
    let (mu, gamma) = mu_gamma;
    let (b, bc) = b_b;
    Ok(trace_pairing(mu, b)? + gamma * bc)
}
