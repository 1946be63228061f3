//! Reduction of an order-`n` determinant to a single 2×2 determinant built
//! from four corner minors, divided by the interior minor:
//!
//! ```text
//! |A| = (|C|·|F| − |D|·|E|) / |B|,   |B| ≠ 0
//! ```
//!
//! * `B`: rows and columns `2..n−1` (the interior)
//! * `C`: drop the last row and the last column (upper left)
//! * `D`: drop the last row and the first column (upper right)
//! * `E`: drop the first row and the last column (lower left)
//! * `F`: drop the first row and the first column (lower right)

use num_traits::Zero;

use super::{det2, det_bareiss, det_small, DetError};
use crate::matrix::{ExactMatrix, Scalar};

/// Largest order accepted by [`det_salihu_recursive`]; its cost grows like
/// `T(n) = 4·T(n−1) + T(n−2)`.
pub const MAX_RECURSIVE_SALIHU_ORDER: usize = 10;

/// The five sub-determinants of one reduction step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SalihuMinors {
    /// `|B|`, the interior minor.
    pub interior: Scalar,
    /// `|C|`, last row and last column removed.
    pub upper_left: Scalar,
    /// `|D|`, last row and first column removed.
    pub upper_right: Scalar,
    /// `|E|`, first row and last column removed.
    pub lower_left: Scalar,
    /// `|F|`, first row and first column removed.
    pub lower_right: Scalar,
}

impl SalihuMinors {
    /// `|C|·|F| − |D|·|E|`, which equals `|B|·|A|`.
    pub fn cross(&self) -> Scalar {
        det2(
            &self.upper_left,
            &self.upper_right,
            &self.lower_left,
            &self.lower_right,
        )
    }

    /// `|A|`, or `None` when the interior minor vanishes.
    pub fn determinant(&self) -> Option<Scalar> {
        if self.interior.is_zero() {
            None
        } else {
            Some(self.cross() / &self.interior)
        }
    }
}

struct CornerMatrices {
    interior: ExactMatrix,
    upper_left: ExactMatrix,
    upper_right: ExactMatrix,
    lower_left: ExactMatrix,
    lower_right: ExactMatrix,
}

fn corner_matrices(m: &ExactMatrix) -> Option<CornerMatrices> {
    let n = m.order();
    if n < 3 {
        return None;
    }
    let first: Vec<usize> = (0..n - 1).collect();
    let last: Vec<usize> = (1..n).collect();
    let inner: Vec<usize> = (1..n - 1).collect();
    Some(CornerMatrices {
        interior: m.submatrix(&inner, &inner)?,
        upper_left: m.submatrix(&first, &first)?,
        upper_right: m.submatrix(&first, &last)?,
        lower_left: m.submatrix(&last, &first)?,
        lower_right: m.submatrix(&last, &last)?,
    })
}

fn evaluate(c: &CornerMatrices, det: impl Fn(&ExactMatrix) -> Scalar) -> SalihuMinors {
    SalihuMinors {
        interior: det(&c.interior),
        upper_left: det(&c.upper_left),
        upper_right: det(&c.upper_right),
        lower_left: det(&c.lower_left),
        lower_right: det(&c.lower_right),
    }
}

/// The five minors of `m`, each evaluated with Bareiss. `None` for order < 3.
pub fn salihu_minors(m: &ExactMatrix) -> Option<SalihuMinors> {
    corner_matrices(m).map(|c| evaluate(&c, det_bareiss))
}

/// Determinant by one corner-minor reduction step.
///
/// Orders 1 and 2 are evaluated directly. The five sub-determinants come
/// from [`det_bareiss`]. A zero interior minor sends the whole matrix to
/// Bareiss.
pub fn det_salihu(m: &ExactMatrix) -> Scalar {
    if let Some(d) = det_small(m) {
        return d;
    }
    salihu_minors(m)
        .and_then(|minors| minors.determinant())
        .unwrap_or_else(|| det_bareiss(m))
}

/// Fully recursive reduction: every sub-determinant is itself reduced the
/// same way down to order 2. Exponential; refused above
/// [`MAX_RECURSIVE_SALIHU_ORDER`].
pub fn det_salihu_recursive(m: &ExactMatrix) -> Result<Scalar, DetError> {
    if m.order() > MAX_RECURSIVE_SALIHU_ORDER {
        return Err(DetError::OrderTooLarge {
            order: m.order(),
            limit: MAX_RECURSIVE_SALIHU_ORDER,
        });
    }
    Ok(recurse(m))
}

fn recurse(m: &ExactMatrix) -> Scalar {
    if let Some(d) = det_small(m) {
        return d;
    }
    let corners = corner_matrices(m).expect("order ≥ 3");
    let interior = recurse(&corners.interior);
    if interior.is_zero() {
        return det_bareiss(m);
    }
    let minors = SalihuMinors {
        interior,
        upper_left: recurse(&corners.upper_left),
        upper_right: recurse(&corners.upper_right),
        lower_left: recurse(&corners.lower_left),
        lower_right: recurse(&corners.lower_right),
    };
    minors.determinant().expect("interior checked nonzero")
}
