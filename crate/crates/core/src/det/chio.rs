use num_traits::{One, Zero};

use super::{det2, det_small};
use crate::matrix::{ExactMatrix, Scalar};

/// Determinant by repeated Chio pivotal condensation.
///
/// One step replaces the order-`n` matrix `A` by the order-`(n−1)` matrix of
/// 2×2 minors `[[a11, a1j], [ai1, aij]]`, with
/// `|A| = |minors| / a11^(n−2)`. The divisor is distributed over the step:
/// each minor is divided by `a11` as it is formed, so `|minors / a11|` equals
/// `|minors| / a11^(n−1)` and exactly one factor `a11` moves to the running
/// product. Entries stay ratios of minors of the input instead of doubling
/// in size at every step.
///
/// A zero leading entry is replaced by swapping in the first lower row whose
/// leading entry is nonzero (negating the running sign). A zero first column
/// means the determinant is zero.
pub fn det_chio(m: &ExactMatrix) -> Scalar {
    if let Some(d) = det_small(m) {
        return d;
    }
    let mut a: Vec<Vec<Scalar>> = m.rows().map(|r| r.to_vec()).collect();
    let mut factor = Scalar::one();

    while a.len() > 2 {
        if a[0][0].is_zero() {
            match a.iter().position(|row| !row[0].is_zero()) {
                Some(i) => {
                    a.swap(0, i);
                    factor = -factor;
                }
                None => return Scalar::zero(),
            }
        }
        let n = a.len();
        let pivot = a[0][0].clone();
        let condensed: Vec<Vec<Scalar>> = (1..n)
            .map(|i| {
                (1..n)
                    .map(|j| det2(&a[0][0], &a[0][j], &a[i][0], &a[i][j]) / &pivot)
                    .collect()
            })
            .collect();
        factor *= pivot;
        a = condensed;
    }
    factor * det2(&a[0][0], &a[0][1], &a[1][0], &a[1][1])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> Scalar {
        Scalar::from_integer(v.into())
    }

    #[test]
    fn base_case_is_direct() {
        let m = ExactMatrix::from_i64_rows(&[[2, -1], [-1, 2]]).unwrap();
        assert_eq!(det_chio(&m), int(3));
    }

    #[test]
    fn three_by_three() {
        let m = ExactMatrix::from_i64_rows(&[[1, 2, 3], [4, 5, 6], [7, 8, 10]]).unwrap();
        assert_eq!(det_chio(&m), int(-3));
    }

    #[test]
    fn zero_leading_entry_swaps_rows() {
        // a11 = 0, row 2 supplies the pivot; cofactor value is 2
        let m = ExactMatrix::from_i64_rows(&[[0, 1, 1], [1, 0, 1], [1, 1, 0]]).unwrap();
        assert_eq!(det_chio(&m), int(2));
    }

    #[test]
    fn zero_first_column_short_circuits() {
        let m = ExactMatrix::from_i64_rows(&[[0, 1, 2], [0, 3, 4], [0, 5, 7]]).unwrap();
        assert_eq!(det_chio(&m), int(0));
    }

    #[test]
    fn pivot_vanishes_after_condensation() {
        // after one step the leading entry of the condensed matrix is zero
        let m =
            ExactMatrix::from_i64_rows(&[[1, 2, 3, 4], [2, 4, 1, 0], [3, 7, 2, 1], [1, 0, 0, 5]])
                .unwrap();
        assert_eq!(det_chio(&m), crate::det::det_cofactor(&m));
    }
}
