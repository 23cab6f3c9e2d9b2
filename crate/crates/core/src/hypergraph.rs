//! k-uniform weighted hypergraphs.
//!
//! A hypergraph `G = (V, E, W)` here has vertex set `V = {0, .., n - 1}`,
//! every edge is a set of exactly `k` distinct vertices, and every edge
//! carries a strictly positive weight. The structure is simple (no repeated
//! vertex inside an edge, no two edges with the same vertex set) and has no
//! isolated vertices.
//!
//! All of that is checked once in [`WeightedHypergraph::new`]; afterwards the
//! graph is immutable and queries can rely on the invariants.
//!
//! Notation used throughout the crate, all derived by [`WeightedHypergraph::stats`]:
//!
//! * `d(v)`, the degree, is the number of edges containing `v`,
//! * `w_v`, the vertex weight, is the sum of the weights of those edges,
//! * `Delta` is the maximum degree, `W0` the maximum edge weight,
//! * `alpha` and `delta` are the maximum and minimum vertex weights.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::error::{Error, ValidationError};
use crate::scalar::Scalar;

/// An edge: a sorted list of `k` distinct vertices plus a positive weight.
#[derive(Debug, Clone, PartialEq)]
pub struct Edge<T> {
    vertices: Vec<usize>,
    weight: T,
}

impl<T: Scalar> Edge<T> {
    /// The vertex set, strictly increasing.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn weight(&self) -> T {
        self.weight
    }

    /// Membership test via binary search on the sorted vertex list.
    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }
}

/// A validated k-uniform weighted hypergraph.
///
/// Construction sorts each edge's vertex list, so edge identity is the vertex
/// set. The order of the edges themselves is preserved from the input, which
/// keeps generator output and file round trips deterministic.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedHypergraph<T> {
    n: usize,
    k: usize,
    edges: Vec<Edge<T>>,
    /// For each vertex, the indices of its incident edges, ascending.
    incidence: Vec<Vec<usize>>,
}

/// Per-vertex and aggregate statistics.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HypergraphStats<T> {
    /// `d(v)` for each vertex.
    pub degrees: Vec<usize>,
    /// `w_v`, the sum of incident edge weights, for each vertex.
    pub vertex_weights: Vec<T>,
    /// `Delta`, the maximum degree.
    pub max_degree: usize,
    /// `W0`, the largest edge weight.
    pub max_edge_weight: T,
    /// `alpha`, the largest vertex weight.
    pub alpha: T,
    /// `delta`, the smallest vertex weight.
    pub delta: T,
    /// Sum of all edge weights. Vertex weights sum to `k` times this value.
    pub total_edge_weight: T,
}

/// Whether all degrees agree and whether all edge weights agree.
///
/// `r` and `common_weight` are present exactly when the matching flag is set.
/// Weight comparison is exact, uniformity means identical values.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RegularityInfo<T> {
    pub is_regular: bool,
    pub r: Option<usize>,
    pub is_uniform_weight: bool,
    pub common_weight: Option<T>,
}

impl<T: Scalar> WeightedHypergraph<T> {
    /// Validates a raw description and builds the hypergraph.
    ///
    /// Each entry of `edges` is a list of vertex indices plus a weight. The
    /// vertex lists may come in any order; they are sorted here. Accepts any
    /// `k >= 2`, although the eigenpair constructions and bound checks in the
    /// rest of the crate require `k >= 3`.
    pub fn new(n: usize, k: usize, edges: Vec<(Vec<usize>, T)>) -> Result<Self, ValidationError> {
        if k < 2 {
            return Err(ValidationError::UnsupportedEdgeSize { k });
        }
        if n == 0 {
            return Err(ValidationError::NoVertices);
        }

        let mut built = Vec::with_capacity(edges.len());
        let mut seen: HashMap<Vec<usize>, usize> = HashMap::with_capacity(edges.len());
        for (idx, (mut vs, w)) in edges.into_iter().enumerate() {
            if vs.len() != k {
                return Err(ValidationError::NonUniformEdge {
                    edge: idx,
                    got: vs.len(),
                    k,
                });
            }
            vs.sort_unstable();
            for pair in vs.windows(2) {
                if pair[0] == pair[1] {
                    return Err(ValidationError::RepeatedVertexInEdge {
                        edge: idx,
                        vertex: pair[0],
                    });
                }
            }
            if let Some(&v) = vs.iter().find(|&&v| v >= n) {
                return Err(ValidationError::VertexIndexOutOfRange {
                    edge: idx,
                    vertex: v,
                    n,
                });
            }
            if !(w.is_finite() && w > T::zero()) {
                return Err(ValidationError::NonPositiveWeight { edge: idx });
            }
            if let Some(&first) = seen.get(&vs) {
                return Err(ValidationError::DuplicateEdge { first, second: idx });
            }
            seen.insert(vs.clone(), idx);
            built.push(Edge {
                vertices: vs,
                weight: w,
            });
        }

        let mut incidence = vec![Vec::new(); n];
        for (idx, e) in built.iter().enumerate() {
            for &v in &e.vertices {
                incidence[v].push(idx);
            }
        }
        if let Some(v) = incidence.iter().position(Vec::is_empty) {
            return Err(ValidationError::IsolatedVertex { vertex: v });
        }

        Ok(WeightedHypergraph {
            n,
            k,
            edges: built,
            incidence,
        })
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Edge size. Every edge has exactly `k` vertices.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge<T>] {
        &self.edges
    }

    /// Indices of the edges containing `v`, ascending.
    pub fn incident_edges(&self, v: usize) -> Result<&[usize], Error> {
        self.check_vertex(v)?;
        Ok(&self.incidence[v])
    }

    fn check_vertex(&self, v: usize) -> Result<(), Error> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        Ok(())
    }

    /// Degrees, vertex weights and their extremes.
    ///
    /// Vertex weights are accumulated in ascending edge index order, the same
    /// order the tensor contraction in [`crate::tensor::apply`] uses, so the
    /// two agree to the last bit.
    pub fn stats(&self) -> HypergraphStats<T> {
        let degrees: Vec<usize> = self.incidence.iter().map(Vec::len).collect();
        let vertex_weights: Vec<T> = self
            .incidence
            .iter()
            .map(|inc| inc.iter().map(|&e| self.edges[e].weight).sum())
            .collect();
        let max_degree = degrees.iter().copied().max().unwrap_or(0);
        let max_edge_weight = self.edges.iter().map(|e| e.weight).fold(T::zero(), T::max);
        let alpha = vertex_weights.iter().copied().fold(T::zero(), T::max);
        let delta = vertex_weights.iter().copied().fold(T::infinity(), T::min);
        let total_edge_weight = self.edges.iter().map(|e| e.weight).sum();
        HypergraphStats {
            degrees,
            vertex_weights,
            max_degree,
            max_edge_weight,
            alpha,
            delta,
            total_edge_weight,
        }
    }

    /// True when every pair of vertices is linked by a chain of overlapping
    /// edges. Breadth-first search over the incidence lists.
    pub fn is_connected(&self) -> bool {
        let mut visited = vec![false; self.n];
        let mut edge_done = vec![false; self.edges.len()];
        let mut queue = std::collections::VecDeque::new();
        visited[0] = true;
        queue.push_back(0usize);
        let mut count = 1usize;
        while let Some(v) = queue.pop_front() {
            for &ei in &self.incidence[v] {
                if edge_done[ei] {
                    continue;
                }
                edge_done[ei] = true;
                for &u in &self.edges[ei].vertices {
                    if !visited[u] {
                        visited[u] = true;
                        count += 1;
                        queue.push_back(u);
                    }
                }
            }
        }
        count == self.n
    }

    /// The open neighborhood `N(u)`: vertices other than `u` sharing an edge
    /// with `u`.
    pub fn neighbors(&self, u: usize) -> Result<BTreeSet<usize>, Error> {
        self.check_vertex(u)?;
        let mut out = BTreeSet::new();
        for &ei in &self.incidence[u] {
            for &v in &self.edges[ei].vertices {
                if v != u {
                    out.insert(v);
                }
            }
        }
        Ok(out)
    }

    /// The codegree `e(u, v)`: how many edges contain both vertices.
    pub fn codegree(&self, u: usize, v: usize) -> Result<usize, Error> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SameVertex);
        }
        Ok(self.incidence[u]
            .iter()
            .filter(|&&ei| self.edges[ei].contains(v))
            .count())
    }

    /// Indices of the edges meeting the vertex set `x` in exactly `t`
    /// vertices, ascending. Requires `1 <= t <= k` and a nonempty set.
    pub fn edges_meeting(&self, x: &BTreeSet<usize>, t: usize) -> Result<Vec<usize>, Error> {
        if x.is_empty() {
            return Err(Error::EmptySet);
        }
        if let Some(&v) = x.iter().find(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        if t < 1 || t > self.k {
            return Err(Error::IntersectionSizeOutOfRange { t, k: self.k });
        }
        Ok(self
            .edges
            .iter()
            .enumerate()
            .filter(|(_, e)| e.vertices.iter().filter(|v| x.contains(v)).count() == t)
            .map(|(i, _)| i)
            .collect())
    }

    /// Degree regularity and edge weight uniformity.
    pub fn regularity(&self) -> RegularityInfo<T> {
        let d0 = self.incidence[0].len();
        let is_regular = self.incidence.iter().all(|inc| inc.len() == d0);
        let w0 = self.edges[0].weight;
        let is_uniform_weight = self.edges.iter().all(|e| e.weight == w0);
        RegularityInfo {
            is_regular,
            r: is_regular.then_some(d0),
            is_uniform_weight,
            common_weight: is_uniform_weight.then_some(w0),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{complete4, single_edge, two_edge_path};

    #[test]
    fn single_edge_stats() {
        let g = single_edge();
        let s = g.stats();
        assert_eq!((g.n(), g.k(), g.m()), (3, 3, 1));
        assert_eq!(s.degrees, vec![1, 1, 1]);
        assert_eq!(s.vertex_weights, vec![2.0, 2.0, 2.0]);
        assert_eq!(s.max_degree, 1);
        assert_eq!(s.max_edge_weight, 2.0);
        assert_eq!((s.alpha, s.delta), (2.0, 2.0));
        assert_eq!(s.total_edge_weight, 2.0);
    }

    #[test]
    fn two_edge_path_stats() {
        let g = two_edge_path();
        let s = g.stats();
        assert_eq!(s.degrees, vec![1, 1, 2, 1, 1]);
        assert_eq!(s.vertex_weights, vec![1.0, 1.0, 3.0, 2.0, 2.0]);
        assert_eq!(s.max_degree, 2);
        assert_eq!(s.max_edge_weight, 2.0);
        assert_eq!((s.alpha, s.delta), (3.0, 1.0));
        assert_eq!(s.total_edge_weight, 3.0);
    }

    #[test]
    fn complete4_is_three_regular() {
        let g = complete4();
        let s = g.stats();
        assert_eq!(g.m(), 4);
        assert!(s.degrees.iter().all(|&d| d == 3));
        assert!(s.vertex_weights.iter().all(|&w| w == 3.0));
        let reg = g.regularity();
        assert_eq!(reg.r, Some(3));
        assert_eq!(reg.common_weight, Some(1.0));
    }

    #[test]
    fn vertex_weight_identity() {
        for g in [single_edge(), two_edge_path(), complete4()] {
            let s = g.stats();
            let lhs: f64 = s.vertex_weights.iter().sum();
            let rhs = g.k() as f64 * s.total_edge_weight;
            assert!((lhs - rhs).abs() <= 1e-12 * rhs.abs());
        }
    }

    #[test]
    fn edge_vertex_lists_are_sorted_on_input() {
        let g = WeightedHypergraph::new(3, 3, vec![(vec![2, 0, 1], 1.0)]).unwrap();
        assert_eq!(g.edges()[0].vertices(), &[0, 1, 2]);
    }

    #[test]
    fn validation_rejects_bad_inputs() {
        use ValidationError::*;
        let e = WeightedHypergraph::<f64>::new(3, 1, vec![]).unwrap_err();
        assert_eq!(e, UnsupportedEdgeSize { k: 1 });
        let e = WeightedHypergraph::<f64>::new(0, 3, vec![]).unwrap_err();
        assert_eq!(e, NoVertices);
        let e = WeightedHypergraph::new(4, 3, vec![(vec![0, 1], 1.0)]).unwrap_err();
        assert_eq!(
            e,
            NonUniformEdge {
                edge: 0,
                got: 2,
                k: 3
            }
        );
        let e = WeightedHypergraph::new(4, 3, vec![(vec![0, 1, 1], 1.0)]).unwrap_err();
        assert_eq!(e, RepeatedVertexInEdge { edge: 0, vertex: 1 });
        let e = WeightedHypergraph::new(3, 3, vec![(vec![0, 1, 4], 1.0)]).unwrap_err();
        assert_eq!(
            e,
            VertexIndexOutOfRange {
                edge: 0,
                vertex: 4,
                n: 3
            }
        );
        let e = WeightedHypergraph::new(3, 3, vec![(vec![0, 1, 2], 0.0)]).unwrap_err();
        assert_eq!(e, NonPositiveWeight { edge: 0 });
        let e = WeightedHypergraph::new(3, 3, vec![(vec![0, 1, 2], f64::NAN)]).unwrap_err();
        assert_eq!(e, NonPositiveWeight { edge: 0 });
        let e = WeightedHypergraph::new(3, 3, vec![(vec![0, 1, 2], 1.0), (vec![2, 1, 0], 2.0)])
            .unwrap_err();
        assert_eq!(
            e,
            DuplicateEdge {
                first: 0,
                second: 1
            }
        );
        let e = WeightedHypergraph::new(4, 3, vec![(vec![0, 1, 2], 1.0)]).unwrap_err();
        assert_eq!(e, IsolatedVertex { vertex: 3 });
    }

    #[test]
    fn k_equal_two_is_accepted() {
        let g = WeightedHypergraph::new(2, 2, vec![(vec![0, 1], 0.5)]).unwrap();
        assert_eq!(g.k(), 2);
        assert!(g.is_connected());
    }

    #[test]
    fn connectivity() {
        assert!(single_edge().is_connected());
        assert!(two_edge_path().is_connected());
        let disjoint =
            WeightedHypergraph::new(6, 3, vec![(vec![0, 1, 2], 1.0), (vec![3, 4, 5], 1.0)])
                .unwrap();
        assert!(!disjoint.is_connected());
    }

    #[test]
    fn neighborhoods() {
        let g = two_edge_path();
        assert_eq!(g.neighbors(2).unwrap(), BTreeSet::from([0, 1, 3, 4]));
        assert_eq!(g.neighbors(0).unwrap(), BTreeSet::from([1, 2]));
        assert!(matches!(
            g.neighbors(9),
            Err(Error::VertexOutOfRange { vertex: 9, n: 5 })
        ));
    }

    #[test]
    fn codegrees() {
        let g = two_edge_path();
        assert_eq!(g.codegree(0, 1).unwrap(), 1);
        assert_eq!(g.codegree(0, 3).unwrap(), 0);
        assert!(matches!(g.codegree(1, 1), Err(Error::SameVertex)));
        let c = complete4();
        // every pair lies in the two triples completed by the other vertices
        for u in 0..4 {
            for v in 0..4 {
                if u != v {
                    assert_eq!(c.codegree(u, v).unwrap(), 2);
                }
            }
        }
    }

    #[test]
    fn edges_meeting_counts_intersections() {
        let g = two_edge_path();
        let x = BTreeSet::from([2]);
        assert_eq!(g.edges_meeting(&x, 1).unwrap(), vec![0, 1]);
        let c = complete4();
        let x = BTreeSet::from([0, 1]);
        assert_eq!(c.edges_meeting(&x, 2).unwrap(), vec![0, 1]);
        assert_eq!(c.edges_meeting(&x, 1).unwrap(), vec![2, 3]);
        assert!(matches!(
            c.edges_meeting(&BTreeSet::new(), 1),
            Err(Error::EmptySet)
        ));
        assert!(matches!(
            c.edges_meeting(&x, 0),
            Err(Error::IntersectionSizeOutOfRange { t: 0, k: 3 })
        ));
        assert!(matches!(
            c.edges_meeting(&x, 4),
            Err(Error::IntersectionSizeOutOfRange { t: 4, k: 3 })
        ));
    }

    #[test]
    fn edges_meeting_partitions_the_touching_edges() {
        let g = complete4();
        let x = BTreeSet::from([1, 3]);
        let total: usize = (1..=3).map(|t| g.edges_meeting(&x, t).unwrap().len()).sum();
        let touching = g
            .edges()
            .iter()
            .filter(|e| e.vertices().iter().any(|v| x.contains(v)))
            .count();
        assert_eq!(total, touching);
    }

    #[test]
    fn regularity_on_irregular_graph() {
        let reg = two_edge_path().regularity();
        assert!(!reg.is_regular);
        assert_eq!(reg.r, None);
        assert!(!reg.is_uniform_weight);
        assert_eq!(reg.common_weight, None);
    }
}
