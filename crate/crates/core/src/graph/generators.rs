use super::{Graph, GraphError};

/// The friendship graph: `k` triangles sharing the hub vertex 0.
///
/// Non-hub vertices `1..=2k` are paired cyclically: triangle 0 owns `{1, 2k}`
/// and triangle `i ≥ 1` owns `{2i, 2i+1}`. With this labeling the first and
/// last rows of the hub cofactor belong to one triangle, so the interior of
/// that cofactor is the block diagonal of the remaining `k−1` triangles.
pub fn friendship_graph(k: usize) -> Result<Graph, GraphError> {
    if k == 0 {
        return Err(GraphError::InvalidParameter {
            name: "k",
            value: 0,
            min: 1,
        });
    }
    let n = 2 * k + 1;
    let edges = (0..k).flat_map(|i| {
        let (a, b) = if i == 0 {
            (1, 2 * k)
        } else {
            (2 * i, 2 * i + 1)
        };
        [(0, a), (0, b), (a, b)]
    });
    Graph::new(n, edges)
}

/// The cycle `0 — 1 — … — (n−1) — 0`.
pub fn cycle_graph(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidParameter {
            name: "n",
            value: n,
            min: 3,
        });
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// The complete graph `K_n`.
pub fn complete_graph(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::InvalidParameter {
            name: "n",
            value: 0,
            min: 1,
        });
    }
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn friendship_sizes() {
        for k in 1..=20 {
            let g = friendship_graph(k).unwrap();
            assert_eq!(g.vertex_count(), 2 * k + 1);
            assert_eq!(g.edge_count(), 3 * k);
            let deg = g.degrees();
            assert_eq!(deg[0], 2 * k);
            assert!(deg[1..].iter().all(|&d| d == 2));
        }
    }

    #[test]
    fn friendship_one_is_the_triangle() {
        let g = friendship_graph(1).unwrap();
        assert_eq!(g, Graph::new(3, [(0, 1), (0, 2), (1, 2)]).unwrap());
        assert_eq!(g, cycle_graph(3).unwrap());
        assert_eq!(g, complete_graph(3).unwrap());
    }

    #[test]
    fn friendship_three_degree_sequence() {
        let g = friendship_graph(3).unwrap();
        assert_eq!(g.vertex_count(), 7);
        assert_eq!(g.edge_count(), 9);
        assert_eq!(g.degrees(), vec![6, 2, 2, 2, 2, 2, 2]);
    }

    #[test]
    fn friendship_two_labeling() {
        let g = friendship_graph(2).unwrap();
        assert_eq!(
            g.edges().collect::<Vec<_>>(),
            vec![(0, 1), (0, 2), (0, 3), (0, 4), (1, 4), (2, 3)]
        );
    }

    #[test]
    fn rejects_small_parameters() {
        assert!(friendship_graph(0).is_err());
        assert!(cycle_graph(2).is_err());
        assert!(complete_graph(0).is_err());
    }

    #[test]
    fn cycle_and_complete_sizes() {
        let c4 = cycle_graph(4).unwrap();
        assert_eq!(c4.edge_count(), 4);
        assert_eq!(c4.degrees(), vec![2; 4]);
        assert_eq!(complete_graph(4).unwrap().edge_count(), 6);
        let k1 = complete_graph(1).unwrap();
        assert_eq!((k1.vertex_count(), k1.edge_count()), (1, 0));
    }
}
