//! Simple undirected graphs, the family generators, subdivision, and
//! Laplacian construction.

mod edgelist;
mod generators;

use std::collections::BTreeSet;

use num_traits::One;
use thiserror::Error;

use crate::matrix::{ExactMatrix, Scalar};
use crate::union_find::UnionFind;

pub use edgelist::{parse_edge_list, serialize_edge_list, EdgeListError};
pub use generators::{complete_graph, cycle_graph, friendship_graph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("{name} must be at least {min}, got {value}")]
    InvalidParameter {
        name: &'static str,
        value: usize,
        min: usize,
    },
    #[error("a graph with a single vertex has no cofactor to delete")]
    NoCofactor,
}

/// Simple finite undirected graph on vertices `0..n`.
///
/// Edges are stored normalized as `(u, v)` with `u < v`, so iteration is
/// always in sorted order. Values are immutable once built.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, out-of-range endpoints and
    /// repeated edges (in either orientation).
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(GraphError::VertexOutOfRange { vertex, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let e = (u.min(v), u.max(v));
            if !set.insert(e) {
                return Err(GraphError::DuplicateEdge(e.0, e.1));
            }
        }
        Ok(Self { n, edges: set })
    }

    pub fn empty(n: usize) -> Self {
        Self {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl ExactSizeIterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for (u, v) in self.edges() {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges().filter(|&(a, b)| a == v || b == v).count()
    }

    pub fn component_count(&self) -> usize {
        let mut uf = UnionFind::new(self.n);
        for (u, v) in self.edges() {
            uf.union(u, v);
        }
        uf.count()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Places `other` beside `self`, shifting its vertices by `self.n`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges().map(|(u, v)| (u + shift, v + shift)))
            .collect();
        Graph {
            n: self.n + other.n,
            edges,
        }
    }

    /// The subdivision: every edge `{u, v}` becomes a path `u — w — v`
    /// through a fresh vertex `w`. Fresh vertices are numbered `n, n+1, …`
    /// following the sorted order of the original edges.
    pub fn subdivide(&self) -> Graph {
        let mut edges = BTreeSet::new();
        for (i, (u, v)) in self.edges().enumerate() {
            let w = self.n + i;
            edges.insert((u, w));
            edges.insert((v, w));
        }
        Graph {
            n: self.n + self.edges.len(),
            edges,
        }
    }

    /// `L = D − A` over exact rationals.
    ///
    /// # Panics
    /// On the empty graph (no vertices), since matrices have order ≥ 1.
    pub fn laplacian(&self) -> ExactMatrix {
        let mut l = ExactMatrix::zeros(self.n).expect("laplacian needs at least one vertex");
        for (u, v) in self.edges() {
            l[(u, v)] = -Scalar::one();
            l[(v, u)] = -Scalar::one();
            l[(u, u)] += Scalar::one();
            l[(v, v)] += Scalar::one();
        }
        l
    }

    /// Laplacian with row and column `drop` deleted.
    pub fn reduced_laplacian(&self, drop: usize) -> Result<ExactMatrix, GraphError> {
        if drop >= self.n {
            return Err(GraphError::VertexOutOfRange {
                vertex: drop,
                n: self.n,
            });
        }
        if self.n == 1 {
            return Err(GraphError::NoCofactor);
        }
        let mut m = ExactMatrix::zeros(self.n - 1).expect("n ≥ 2");
        let index = |v: usize| if v < drop { v } else { v - 1 };
        for (u, v) in self.edges() {
            for w in [u, v] {
                if w != drop {
                    m[(index(w), index(w))] += Scalar::one();
                }
            }
            if u != drop && v != drop {
                m[(index(u), index(v))] = -Scalar::one();
                m[(index(v), index(u))] = -Scalar::one();
            }
        }
        Ok(m)
    }
}

/// Free-function form of [`Graph::subdivide`].
pub fn subdivide(g: &Graph) -> Graph {
    g.subdivide()
}

/// Free-function form of [`Graph::laplacian`].
pub fn laplacian(g: &Graph) -> ExactMatrix {
    g.laplacian()
}

/// Free-function form of [`Graph::reduced_laplacian`].
pub fn reduced_laplacian(g: &Graph, drop: usize) -> Result<ExactMatrix, GraphError> {
    g.reduced_laplacian(drop)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> Scalar {
        Scalar::from_integer(v.into())
    }

    fn triangle() -> Graph {
        Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn construction_rejects_invalid_edges() {
        assert_eq!(Graph::new(2, [(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            Graph::new(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        );
        assert_eq!(
            Graph::new(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
    }

    #[test]
    fn triangle_laplacian() {
        let expected =
            ExactMatrix::from_i64_rows(&[[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]).unwrap();
        assert_eq!(triangle().laplacian(), expected);
    }

    #[test]
    fn triangle_reduced_laplacian() {
        let expected = ExactMatrix::from_i64_rows(&[[2, -1], [-1, 2]]).unwrap();
        assert_eq!(triangle().reduced_laplacian(0).unwrap(), expected);
    }

    #[test]
    fn reduced_laplacian_matches_minor() {
        let g = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 3)]).unwrap();
        let l = g.laplacian();
        for d in 0..5 {
            assert_eq!(g.reduced_laplacian(d).unwrap(), l.minor(d, d).unwrap());
        }
    }

    #[test]
    fn reduced_laplacian_errors() {
        assert_eq!(
            triangle().reduced_laplacian(3),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(
            Graph::empty(1).reduced_laplacian(0),
            Err(GraphError::NoCofactor)
        );
    }

    #[test]
    fn subdividing_an_edge_gives_a_path() {
        let k2 = Graph::new(2, [(0, 1)]).unwrap();
        let s = k2.subdivide();
        assert_eq!(s, Graph::new(3, [(0, 2), (1, 2)]).unwrap());
        assert_eq!(s.degrees(), vec![1, 1, 2]);
    }

    #[test]
    fn subdivision_numbering_follows_sorted_edges() {
        let s = triangle().subdivide();
        // sorted edges: (0,1) -> 3, (0,2) -> 4, (1,2) -> 5
        assert_eq!(
            s.edges().collect::<Vec<_>>(),
            vec![(0, 3), (0, 4), (1, 3), (1, 5), (2, 4), (2, 5)]
        );
    }

    #[test]
    fn laplacian_diagonal_is_degree() {
        let g = triangle().disjoint_union(&Graph::new(2, [(0, 1)]).unwrap());
        let l = g.laplacian();
        for (v, d) in g.degrees().into_iter().enumerate() {
            assert_eq!(l[(v, v)], int(d as i64));
        }
        assert_eq!(g.component_count(), 2);
        assert_eq!(g.degree(0), 2);
    }
}
