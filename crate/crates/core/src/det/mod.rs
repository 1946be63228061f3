//! Exact determinant engines.
//!
//! Five interchangeable algorithms share one contract: given an
//! [`ExactMatrix`], return its exact determinant as a [`Scalar`]. Every engine
//! is total. The condensation engines handle vanishing pivots or divisors
//! themselves (row swap for Chio, delegation to Bareiss for Dodgson and
//! Salihu), so callers never need to know which path ran.

mod bareiss;
mod chio;
mod cofactor;
mod dodgson;
mod salihu;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::matrix::{ExactMatrix, Scalar};

pub use bareiss::{det_bareiss, det_bareiss_integer};
pub use chio::det_chio;
pub use cofactor::det_cofactor;
pub use dodgson::{det_dodgson, dodgson_condense, DodgsonOutcome};
pub use salihu::{
    det_salihu, det_salihu_recursive, salihu_minors, SalihuMinors, MAX_RECURSIVE_SALIHU_ORDER,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DetError {
    #[error("unknown engine `{0}` (expected cofactor, bareiss, chio, dodgson or salihu)")]
    UnknownEngine(String),
    #[error("order {order} exceeds the limit of {limit} for this mode")]
    OrderTooLarge { order: usize, limit: usize },
}

/// Selects a determinant algorithm.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EngineKind {
    /// Recursive first-row Laplace expansion. Factorial cost; an oracle for small orders.
    Cofactor,
    /// Fraction-free elimination over the integers.
    Bareiss,
    /// Chio pivotal condensation.
    Chio,
    /// Dodgson condensation.
    Dodgson,
    /// One-step corner-minor reduction to a 2×2 determinant.
    Salihu,
}

impl EngineKind {
    pub const ALL: [EngineKind; 5] = [
        EngineKind::Cofactor,
        EngineKind::Bareiss,
        EngineKind::Chio,
        EngineKind::Dodgson,
        EngineKind::Salihu,
    ];

    /// Engines that stay polynomial in the matrix order.
    pub const POLYNOMIAL: [EngineKind; 4] = [
        EngineKind::Bareiss,
        EngineKind::Chio,
        EngineKind::Dodgson,
        EngineKind::Salihu,
    ];

    pub fn name(self) -> &'static str {
        match self {
            EngineKind::Cofactor => "cofactor",
            EngineKind::Bareiss => "bareiss",
            EngineKind::Chio => "chio",
            EngineKind::Dodgson => "dodgson",
            EngineKind::Salihu => "salihu",
        }
    }

    pub fn function(self) -> fn(&ExactMatrix) -> Scalar {
        match self {
            EngineKind::Cofactor => det_cofactor,
            EngineKind::Bareiss => det_bareiss,
            EngineKind::Chio => det_chio,
            EngineKind::Dodgson => det_dodgson,
            EngineKind::Salihu => det_salihu,
        }
    }
}

impl fmt::Display for EngineKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EngineKind {
    type Err = DetError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        EngineKind::ALL
            .into_iter()
            .find(|e| e.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| DetError::UnknownEngine(s.to_string()))
    }
}

/// Determinant of `m` using the selected engine.
pub fn det(m: &ExactMatrix, engine: EngineKind) -> Scalar {
    (engine.function())(m)
}

/// `ad - bc` for the 2×2 block with the given corner entries.
pub(crate) fn det2(a: &Scalar, b: &Scalar, c: &Scalar, d: &Scalar) -> Scalar {
    a * d - b * c
}

/// Shared base case for orders 1 and 2; `None` for larger matrices.
pub(crate) fn det_small(m: &ExactMatrix) -> Option<Scalar> {
    match m.order() {
        1 => Some(m[(0, 0)].clone()),
        2 => Some(det2(&m[(0, 0)], &m[(0, 1)], &m[(1, 0)], &m[(1, 1)])),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn engine_names_round_trip() {
        for e in EngineKind::ALL {
            assert_eq!(e.name().parse::<EngineKind>().unwrap(), e);
        }
        assert_eq!("Salihu".parse::<EngineKind>().unwrap(), EngineKind::Salihu);
        assert!(matches!(
            "gauss".parse::<EngineKind>(),
            Err(DetError::UnknownEngine(_))
        ));
    }

    #[test]
    fn identity_is_one_for_every_engine() {
        let m = ExactMatrix::identity(3).unwrap();
        for e in EngineKind::ALL {
            assert_eq!(det(&m, e), Scalar::one(), "{e}");
        }
    }

    #[test]
    fn path_block_is_three_for_every_engine() {
        let m = ExactMatrix::from_i64_rows(&[[2, -1], [-1, 2]]).unwrap();
        for e in EngineKind::ALL {
            assert_eq!(det(&m, e), Scalar::from_integer(3.into()), "{e}");
        }
    }
}
