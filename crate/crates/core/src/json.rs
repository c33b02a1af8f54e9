//! JSON wire formats.
//!
//! Matrices travel as `{"rows": r, "cols": c, "entries": [[re, im], ...]}`
//! with entries in row-major order; complex scalars as `[re, im]`.  All
//! deserializers validate shape and finiteness.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};
use crate::kernel::CMatrix;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<[f64; 2]>,
}

pub fn matrix_to_json(m: &CMatrix) -> MatrixJson {
    let mut entries = Vec::with_capacity(m.nrows() * m.ncols());
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            let z = m[(i, j)];
            entries.push([z.re, z.im]);
        }
    }
    MatrixJson {
        rows: m.nrows(),
        cols: m.ncols(),
        entries,
    }
}

pub fn matrix_from_json(repr: &MatrixJson) -> Result<CMatrix> {
    if repr.entries.len() != repr.rows * repr.cols {
        return Err(CoreError::Dimension(format!(
            "matrix JSON declares {}x{} but carries {} entries",
            repr.rows,
            repr.cols,
            repr.entries.len()
        )));
    }
    for e in &repr.entries {
        if !e[0].is_finite() || !e[1].is_finite() {
            return Err(CoreError::NumericRange(
                "matrix JSON contains a non-finite entry".into(),
            ));
        }
    }
    Ok(CMatrix::from_fn(repr.rows, repr.cols, |i, j| {
        let e = repr.entries[i * repr.cols + j];
        Complex64::new(e[0], e[1])
    }))
}

/// Serde adapter for `CMatrix` fields (`#[serde(with = "crate::json::matrix")]`).
pub mod matrix {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(m: &CMatrix, s: S) -> std::result::Result<S::Ok, S::Error> {
        matrix_to_json(m).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<CMatrix, D::Error> {
        let repr = MatrixJson::deserialize(d)?;
        matrix_from_json(&repr).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for complex scalars as `[re, im]`.
pub mod complex {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(z: &Complex64, s: S) -> std::result::Result<S::Ok, S::Error> {
        [z.re, z.im].serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Complex64, D::Error> {
        let pair = <[f64; 2]>::deserialize(d)?;
        if !pair[0].is_finite() || !pair[1].is_finite() {
            return Err(serde::de::Error::custom("non-finite complex scalar"));
        }
        Ok(Complex64::new(pair[0], pair[1]))
    }
}
