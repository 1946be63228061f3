use num_traits::Zero;

use super::{det2, det_bareiss};
use crate::matrix::{ExactMatrix, Scalar};

/// Result of running pure Dodgson condensation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DodgsonOutcome {
    Determinant(Scalar),
    /// A divisor needed to form layer `layer` (the order of that layer) was zero.
    ZeroInterior {
        layer: usize,
    },
}

/// Dodgson condensation without any fallback.
///
/// Layer `r−1` is built from layer `r` by taking every connected 2×2 minor
/// and dividing it by the matching interior entry of layer `r+1`. The input
/// is layer `n`; the implicit layer `n+1` is all ones. Every entry of every
/// layer is a connected minor of the input, so the divisions are exact.
pub fn dodgson_condense(m: &ExactMatrix) -> DodgsonOutcome {
    let mut current: Vec<Vec<Scalar>> = m.rows().map(|r| r.to_vec()).collect();
    let mut previous: Option<Vec<Vec<Scalar>>> = None;

    while current.len() > 1 {
        let r = current.len();
        if let Some(prev) = &previous {
            let interior_zero = prev[1..r]
                .iter()
                .any(|row| row[1..r].iter().any(Zero::is_zero));
            if interior_zero {
                return DodgsonOutcome::ZeroInterior { layer: r - 1 };
            }
        }
        let next: Vec<Vec<Scalar>> = (0..r - 1)
            .map(|i| {
                (0..r - 1)
                    .map(|j| {
                        let minor = det2(
                            &current[i][j],
                            &current[i][j + 1],
                            &current[i + 1][j],
                            &current[i + 1][j + 1],
                        );
                        match &previous {
                            Some(prev) => minor / &prev[i + 1][j + 1],
                            None => minor,
                        }
                    })
                    .collect()
            })
            .collect();
        previous = Some(std::mem::replace(&mut current, next));
    }
    DodgsonOutcome::Determinant(current.swap_remove(0).swap_remove(0))
}

/// Determinant by Dodgson condensation, delegating the whole matrix to
/// [`det_bareiss`] when a required interior divisor is zero.
pub fn det_dodgson(m: &ExactMatrix) -> Scalar {
    match dodgson_condense(m) {
        DodgsonOutcome::Determinant(d) => d,
        DodgsonOutcome::ZeroInterior { .. } => det_bareiss(m),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn int(v: i64) -> Scalar {
        Scalar::from_integer(v.into())
    }

    #[test]
    fn identity() {
        let m = ExactMatrix::identity(3).unwrap();
        assert_eq!(
            dodgson_condense(&m),
            DodgsonOutcome::Determinant(Scalar::one())
        );
    }

    #[test]
    fn three_by_three_without_delegation() {
        let m = ExactMatrix::from_i64_rows(&[[1, 2, 3], [4, 5, 6], [7, 8, 10]]).unwrap();
        assert_eq!(dodgson_condense(&m), DodgsonOutcome::Determinant(int(-3)));
        assert_eq!(det_dodgson(&m), int(-3));
    }

    #[test]
    fn zero_center_delegates() {
        let m = ExactMatrix::from_i64_rows(&[[0, 1, 1], [1, 0, 1], [1, 1, 0]]).unwrap();
        assert_eq!(
            dodgson_condense(&m),
            DodgsonOutcome::ZeroInterior { layer: 1 }
        );
        assert_eq!(det_dodgson(&m), int(2));
    }

    #[test]
    fn small_orders() {
        assert_eq!(
            det_dodgson(&ExactMatrix::from_i64_rows(&[[-4]]).unwrap()),
            int(-4)
        );
        assert_eq!(
            det_dodgson(&ExactMatrix::from_i64_rows(&[[0, 1], [1, 0]]).unwrap()),
            int(-1)
        );
    }

    #[test]
    fn four_by_four_matches_cofactor() {
        let m =
            ExactMatrix::from_i64_rows(&[[2, 1, 0, 3], [1, 3, 2, 1], [0, 2, 5, 1], [4, 1, 1, 2]])
                .unwrap();
        assert!(matches!(
            dodgson_condense(&m),
            DodgsonOutcome::Determinant(_)
        ));
        assert_eq!(det_dodgson(&m), crate::det::det_cofactor(&m));
    }
}
