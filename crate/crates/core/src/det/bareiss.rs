use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::matrix::{ExactMatrix, Scalar};

/// Determinant by Bareiss fraction-free elimination.
///
/// Rational input is first brought to integers by scaling each row with the
/// lcm of its denominators; the product of those scales is divided out at the
/// end. All elimination work therefore happens on integers.
pub fn det_bareiss(m: &ExactMatrix) -> Scalar {
    let mut scale = BigInt::one();
    let rows = m
        .rows()
        .map(|row| {
            let lcm = row.iter().fold(BigInt::one(), |acc, e| acc.lcm(e.denom()));
            let ints = row.iter().map(|e| e.numer() * (&lcm / e.denom())).collect();
            scale *= &lcm;
            ints
        })
        .collect();
    Scalar::new(det_bareiss_integer(rows), scale)
}

/// Bareiss elimination on a square integer matrix.
///
/// Each update `(a_ij·a_kk − a_ik·a_kj) / prev_pivot` is an exact division;
/// debug builds assert a zero remainder, which is the fraction-free property.
/// A zero pivot is replaced by swapping in a lower row with a nonzero entry
/// in the pivot column, flipping the sign.
pub fn det_bareiss_integer(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    assert!(
        n > 0 && a.iter().all(|r| r.len() == n),
        "square non-empty matrix required"
    );

    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        let (upper, lower) = a.split_at_mut(k + 1);
        let pivot_row = &upper[k];
        let pivot = &pivot_row[k];
        for row in lower.iter_mut() {
            let lead = std::mem::take(&mut row[k]);
            for j in k + 1..n {
                let numer = &row[j] * pivot - &lead * &pivot_row[j];
                let (q, r) = numer.div_rem(&prev);
                debug_assert!(r.is_zero(), "Bareiss division left remainder {r}");
                row[j] = q;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}
