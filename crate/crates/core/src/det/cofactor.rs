use num_traits::Zero;

use crate::matrix::{ExactMatrix, Scalar};

/// Determinant by recursive Laplace expansion along the first remaining row.
///
/// Zero entries are skipped, which keeps sparse Laplacians cheap, but the
/// worst case is still `order!` terms. Use it as an oracle for order ≤ 8.
pub fn det_cofactor(m: &ExactMatrix) -> Scalar {
    let cols: Vec<usize> = (0..m.order()).collect();
    expand(m, 0, &cols)
}

fn expand(m: &ExactMatrix, row: usize, cols: &[usize]) -> Scalar {
    match cols {
        [c] => return m[(row, *c)].clone(),
        [a, b] => return &m[(row, *a)] * &m[(row + 1, *b)] - &m[(row, *b)] * &m[(row + 1, *a)],
        _ => {}
    }
    let mut total = Scalar::zero();
    let mut rest = Vec::with_capacity(cols.len() - 1);
    for (pos, &c) in cols.iter().enumerate() {
        let entry = &m[(row, c)];
        if entry.is_zero() {
            continue;
        }
        rest.clear();
        rest.extend(cols.iter().copied().filter(|&x| x != c));
        let term = entry * expand(m, row + 1, &rest);
        if pos % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> Scalar {
        Scalar::from_integer(v.into())
    }

    #[test]
    fn small_cases() {
        assert_eq!(
            det_cofactor(&ExactMatrix::from_i64_rows(&[[5]]).unwrap()),
            int(5)
        );
        assert_eq!(
            det_cofactor(&ExactMatrix::from_i64_rows(&[[1, 2], [3, 4]]).unwrap()),
            int(-2)
        );
        assert_eq!(
            det_cofactor(&ExactMatrix::from_i64_rows(&[[1, 2, 3], [4, 5, 6], [7, 8, 10]]).unwrap()),
            int(-3)
        );
    }

    #[test]
    fn sign_alternation_on_permutation_matrix() {
        // cyclic shift of 4 elements is an odd permutation
        let m =
            ExactMatrix::from_i64_rows(&[[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0]])
                .unwrap();
        assert_eq!(det_cofactor(&m), int(-1));
    }
}
