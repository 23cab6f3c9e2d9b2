//! Small hypergraphs shared by the unit tests.

use crate::hypergraph::WeightedHypergraph;

/// One 3-edge `{0, 1, 2}` with weight 2. 1-regular, uniform weight.
pub fn single_edge() -> WeightedHypergraph<f64> {
    WeightedHypergraph::new(3, 3, vec![(vec![0, 1, 2], 2.0)]).unwrap()
}

/// Loose path with edges `{0, 1, 2}` (weight 1) and `{2, 3, 4}` (weight 2).
/// Degrees (1, 1, 2, 1, 1), vertex weights (1, 1, 3, 2, 2).
pub fn two_edge_path() -> WeightedHypergraph<f64> {
    WeightedHypergraph::new(5, 3, vec![(vec![0, 1, 2], 1.0), (vec![2, 3, 4], 2.0)]).unwrap()
}

/// Complete 3-uniform hypergraph on 4 vertices, unit weights. 3-regular.
pub fn complete4() -> WeightedHypergraph<f64> {
    WeightedHypergraph::new(
        4,
        3,
        vec![
            (vec![0, 1, 2], 1.0),
            (vec![0, 1, 3], 1.0),
            (vec![0, 2, 3], 1.0),
            (vec![1, 2, 3], 1.0),
        ],
    )
    .unwrap()
}

/// One 4-edge `{0, 1, 2, 3}` with unit weight.
pub fn single_edge4() -> WeightedHypergraph<f64> {
    WeightedHypergraph::new(4, 4, vec![(vec![0, 1, 2, 3], 1.0)]).unwrap()
}
