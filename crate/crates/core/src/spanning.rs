//! Spanning-tree counts: the matrix-tree theorem over any determinant engine,
//! closed forms for the friendship families, a brute-force oracle, and
//! spanning-tree entropy.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::det::{det, EngineKind};
use crate::graph::{friendship_graph, Graph, GraphError};
use crate::matrix::Scalar;
use crate::union_find::UnionFind;

/// τ(G), the number of spanning trees.
pub type TreeCount = BigUint;

/// Default edge cap for [`tau_bruteforce`]. `C(24, 12)` is about 2.7 million.
pub const DEFAULT_BRUTE_FORCE_EDGE_CAP: usize = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpanningError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("internal error: {engine} returned non-integral cofactor {value}")]
    NonIntegralDeterminant { engine: EngineKind, value: Scalar },
    #[error("internal error: {engine} returned negative cofactor {value}")]
    NegativeDeterminant { engine: EngineKind, value: Scalar },
    #[error("graph has {edges} edges, over the brute-force cap of {cap}; use the matrix-tree count instead")]
    EdgeCapExceeded { edges: usize, cap: usize },
    #[error("unknown family `{0}` (expected friendship or subdivided)")]
    UnknownFamily(String),
}

/// τ(G) via the cofactor of the Laplacian at vertex 0.
pub fn tau(g: &Graph, engine: EngineKind) -> Result<TreeCount, SpanningError> {
    tau_with_drop(g, engine, 0)
}

/// τ(G) via the cofactor that deletes row and column `drop`.
pub fn tau_with_drop(
    g: &Graph,
    engine: EngineKind,
    drop: usize,
) -> Result<TreeCount, SpanningError> {
    match g.vertex_count() {
        0 => return Err(SpanningError::EmptyGraph),
        1 => {
            if drop != 0 {
                return Err(GraphError::VertexOutOfRange { vertex: drop, n: 1 }.into());
            }
            return Ok(TreeCount::one());
        }
        _ => {}
    }
    let value = det(&g.reduced_laplacian(drop)?, engine);
    if !value.is_integer() {
        return Err(SpanningError::NonIntegralDeterminant { engine, value });
    }
    let (sign, magnitude) = value.to_integer().into_parts();
    if sign == Sign::Minus {
        return Err(SpanningError::NegativeDeterminant { engine, value });
    }
    Ok(magnitude)
}

fn require_positive(k: usize) -> Result<(), SpanningError> {
    if k == 0 {
        return Err(GraphError::InvalidParameter {
            name: "k",
            value: 0,
            min: 1,
        }
        .into());
    }
    Ok(())
}

/// `3^k`.
pub fn tau_closed_friendship(k: usize) -> Result<TreeCount, SpanningError> {
    require_positive(k)?;
    Ok(TreeCount::from(3u32).pow(k as u32))
}

/// `6^k`.
pub fn tau_closed_subdivided_friendship(k: usize) -> Result<TreeCount, SpanningError> {
    require_positive(k)?;
    Ok(TreeCount::from(6u32).pow(k as u32))
}

/// Counts spanning trees by enumerating edge subsets, capped at
/// [`DEFAULT_BRUTE_FORCE_EDGE_CAP`] edges.
pub fn tau_bruteforce(g: &Graph) -> Result<TreeCount, SpanningError> {
    tau_bruteforce_capped(g, DEFAULT_BRUTE_FORCE_EDGE_CAP)
}

/// Counts the `(n−1)`-edge subsets that form a forest; with `n−1` edges on
/// `n` vertices an acyclic subset is exactly a spanning tree. Subsets are
/// grown edge by edge and a branch is cut as soon as an edge would close a
/// cycle or too few edges remain.
pub fn tau_bruteforce_capped(g: &Graph, cap: usize) -> Result<TreeCount, SpanningError> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(SpanningError::EmptyGraph);
    }
    if g.edge_count() > cap {
        return Err(SpanningError::EdgeCapExceeded {
            edges: g.edge_count(),
            cap,
        });
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    Ok(TreeCount::from(count_forests(
        &edges,
        n - 1,
        &UnionFind::new(n),
    )))
}

fn count_forests(edges: &[(usize, usize)], needed: usize, uf: &UnionFind) -> u64 {
    if needed == 0 {
        return 1;
    }
    if edges.len() < needed {
        return 0;
    }
    let (u, v) = edges[0];
    let rest = &edges[1..];
    let mut with = uf.clone();
    let taken = if with.union(u, v) {
        count_forests(rest, needed - 1, &with)
    } else {
        0
    };
    taken + count_forests(rest, needed, uf)
}

/// Natural log of a big integer as `ln(top 64 bits) + shift·ln 2`, so values
/// far beyond `f64::MAX` still have a finite logarithm. `−∞` for zero.
pub fn ln_big(x: &BigUint) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits();
    let shift = bits.saturating_sub(64);
    let top = (x >> shift).to_u64().expect("at most 64 bits remain");
    (top as f64).ln() + shift as f64 * std::f64::consts::LN_2
}

/// `ln(τ)/n` for a single graph, or `None` when the graph is disconnected.
pub fn graph_entropy(g: &Graph, engine: EngineKind) -> Result<Option<f64>, SpanningError> {
    let t = tau(g, engine)?;
    if t.is_zero() {
        return Ok(None);
    }
    Ok(Some(ln_big(&t) / g.vertex_count() as f64))
}

/// The two graph families with closed-form spanning-tree counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `k` triangles sharing a hub.
    Friendship,
    /// The subdivision of the friendship graph.
    SubdividedFriendship,
}

impl Family {
    pub const ALL: [Family; 2] = [Family::Friendship, Family::SubdividedFriendship];

    pub fn name(self) -> &'static str {
        match self {
            Family::Friendship => "friendship",
            Family::SubdividedFriendship => "subdivided",
        }
    }

    pub fn graph(self, k: usize) -> Result<Graph, SpanningError> {
        let g = friendship_graph(k)?;
        Ok(match self {
            Family::Friendship => g,
            Family::SubdividedFriendship => g.subdivide(),
        })
    }

    /// `2k+1` or `5k+1`.
    pub fn vertex_count(self, k: usize) -> usize {
        match self {
            Family::Friendship => 2 * k + 1,
            Family::SubdividedFriendship => 5 * k + 1,
        }
    }

    /// The base `b` in `τ = b^k`.
    pub fn tau_base(self) -> u32 {
        match self {
            Family::Friendship => 3,
            Family::SubdividedFriendship => 6,
        }
    }

    pub fn closed_form(self, k: usize) -> Result<TreeCount, SpanningError> {
        match self {
            Family::Friendship => tau_closed_friendship(k),
            Family::SubdividedFriendship => tau_closed_subdivided_friendship(k),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = SpanningError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "friendship" => Ok(Family::Friendship),
            "subdivided" | "subdivided-friendship" | "subdivided_friendship" => {
                Ok(Family::SubdividedFriendship)
            }
            _ => Err(SpanningError::UnknownFamily(s.to_string())),
        }
    }
}

/// `ln(τ)/n` for one member of a family.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EntropyEstimate {
    pub family: Family,
    pub k: usize,
    pub n: usize,
    pub value: f64,
}

impl EntropyEstimate {
    pub fn gap(&self) -> f64 {
        (self.value - entropy_limit(self.family)).abs()
    }
}

/// `(k·ln b)/n` from the closed form `τ = b^k`.
pub fn entropy_estimate(family: Family, k: usize) -> Result<EntropyEstimate, SpanningError> {
    require_positive(k)?;
    let n = family.vertex_count(k);
    let value = k as f64 * f64::from(family.tau_base()).ln() / n as f64;
    Ok(EntropyEstimate {
        family,
        k,
        n,
        value,
    })
}

/// `lim ln(τ)/n` as `k → ∞`: `ln(3)/2` and `ln(6)/5`.
pub fn entropy_limit(family: Family) -> f64 {
    match family {
        Family::Friendship => 3f64.ln() / 2.0,
        Family::SubdividedFriendship => 6f64.ln() / 5.0,
    }
}

/// Number of decimal digits of `x` (1 for zero).
pub fn decimal_digits(x: &TreeCount) -> usize {
    x.to_str_radix(10).len()
}

/// Converts a known-integral scalar into a tree count, if non-negative.
pub fn scalar_to_tree_count(value: &Scalar) -> Option<TreeCount> {
    if !value.is_integer() {
        return None;
    }
    let int: BigInt = value.to_integer();
    int.to_biguint()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph};

    fn tc(v: u64) -> TreeCount {
        TreeCount::from(v)
    }

    #[test]
    fn friendship_one_every_engine() {
        let g = friendship_graph(1).unwrap();
        for e in EngineKind::ALL {
            assert_eq!(tau(&g, e).unwrap(), tc(3), "{e}");
        }
    }

    #[test]
    fn subdivided_triangle_every_engine() {
        let g = friendship_graph(1).unwrap().subdivide();
        for e in EngineKind::ALL {
            assert_eq!(tau(&g, e).unwrap(), tc(6), "{e}");
        }
    }

    #[test]
    fn k4_matches_cayley() {
        let g = complete_graph(4).unwrap();
        for e in EngineKind::ALL {
            assert_eq!(tau(&g, e).unwrap(), tc(16));
        }
        assert_eq!(tau_bruteforce(&g).unwrap(), tc(16));
    }

    #[test]
    fn disconnected_graph_has_no_trees() {
        let t = friendship_graph(1).unwrap();
        let g = t.disjoint_union(&t);
        for e in EngineKind::ALL {
            assert_eq!(tau(&g, e).unwrap(), tc(0));
        }
        assert_eq!(tau_bruteforce(&g).unwrap(), tc(0));
        assert_eq!(graph_entropy(&g, EngineKind::Bareiss).unwrap(), None);
    }

    #[test]
    fn single_vertex() {
        let g = Graph::empty(1);
        assert_eq!(tau(&g, EngineKind::Chio).unwrap(), tc(1));
        assert_eq!(tau_bruteforce(&g).unwrap(), tc(1));
        assert_eq!(
            tau(&Graph::empty(0), EngineKind::Chio),
            Err(SpanningError::EmptyGraph)
        );
    }

    #[test]
    fn drop_choice_is_validated() {
        let g = cycle_graph(5).unwrap();
        assert_eq!(tau_with_drop(&g, EngineKind::Bareiss, 4).unwrap(), tc(5));
        assert!(matches!(
            tau_with_drop(&g, EngineKind::Bareiss, 5),
            Err(SpanningError::Graph(GraphError::VertexOutOfRange { .. }))
        ));
    }

    #[test]
    fn closed_forms() {
        assert_eq!(tau_closed_friendship(1).unwrap(), tc(3));
        assert_eq!(tau_closed_friendship(4).unwrap(), tc(81));
        assert_eq!(decimal_digits(&tau_closed_friendship(100).unwrap()), 48);
        assert_eq!(
            tau_closed_friendship(100).unwrap().to_string(),
            "515377520732011331036461129765621272702107522001"
        );
        assert_eq!(tau_closed_subdivided_friendship(1).unwrap(), tc(6));
        assert_eq!(tau_closed_subdivided_friendship(3).unwrap(), tc(216));
        assert_eq!(
            tau_closed_subdivided_friendship(50).unwrap(),
            TreeCount::from(6u32).pow(50u32)
        );
        assert!(tau_closed_friendship(0).is_err());
        assert!(tau_closed_subdivided_friendship(0).is_err());
    }

    #[test]
    fn bruteforce_small_cases() {
        assert_eq!(
            tau_bruteforce(&friendship_graph(1).unwrap()).unwrap(),
            tc(3)
        );
        assert_eq!(tau_bruteforce(&cycle_graph(6).unwrap()).unwrap(), tc(6));
        assert_eq!(
            tau_bruteforce(&friendship_graph(2).unwrap()).unwrap(),
            tc(9)
        );
    }

    #[test]
    fn bruteforce_cap() {
        let g = complete_graph(8).unwrap();
        assert_eq!(
            tau_bruteforce(&g),
            Err(SpanningError::EdgeCapExceeded { edges: 28, cap: 24 })
        );
        assert_eq!(tau_bruteforce_capped(&g, 28).unwrap(), tc(8u64.pow(6)));
    }

    #[test]
    fn entropy_values() {
        let f1 = entropy_estimate(Family::Friendship, 1).unwrap();
        assert_eq!(f1.n, 3);
        assert!((f1.value - 0.366_204_096_222_703).abs() < 1e-12);
        let f5 = entropy_estimate(Family::Friendship, 5).unwrap();
        assert!((f5.value - 5.0 * 3f64.ln() / 11.0).abs() < 1e-15);
        assert!((entropy_limit(Family::Friendship) - 0.549_306_144_334_054_8).abs() < 1e-15);
        assert!(
            (entropy_limit(Family::SubdividedFriendship) - 0.358_351_893_845_611).abs() < 1e-14
        );
        assert!(entropy_estimate(Family::SubdividedFriendship, 0).is_err());
    }

    #[test]
    fn ln_big_handles_huge_values() {
        assert_eq!(ln_big(&tc(1)), 0.0);
        let t = tau_closed_friendship(2000).unwrap();
        let expected = 2000.0 * 3f64.ln();
        assert!((ln_big(&t) - expected).abs() / expected < 1e-14);
    }

    #[test]
    fn family_parsing() {
        assert_eq!("friendship".parse::<Family>().unwrap(), Family::Friendship);
        assert_eq!(
            "subdivided".parse::<Family>().unwrap(),
            Family::SubdividedFriendship
        );
        assert!("cycle".parse::<Family>().is_err());
    }

    #[test]
    fn scalar_conversion() {
        assert_eq!(
            scalar_to_tree_count(&Scalar::from_integer(7.into())),
            Some(tc(7))
        );
        assert_eq!(
            scalar_to_tree_count(&Scalar::from_integer((-7).into())),
            None
        );
        assert_eq!(scalar_to_tree_count(&Scalar::new(1.into(), 2.into())), None);
    }
}
