//! The four tensors attached to a hypergraph, applied implicitly.
//!
//! For a k-uniform hypergraph on n vertices each tensor is symmetric of order
//! k and dimension n:
//!
//! * adjacency `A`: entry `w(e) / (k-1)!` at every permutation of every edge,
//! * degree `D`: vertex weight `w_i` at the diagonal positions `(i, .., i)`,
//! * Laplacian `L = D - A`,
//! * signless Laplacian `Q = D + A`.
//!
//! Nothing here stores `n^k` entries. The primary representation is the
//! hypergraph itself and [`apply`] contracts directly from the edge list:
//!
//! ```text
//! (A x)_i = sum over edges e containing i of  w(e) * prod_{u in e, u != i} x_u
//! (D x)_i = w_i * x_i^(k-1)
//! ```
//!
//! with `L` and `Q` combining the two. [`materialize`] builds the dense entry
//! array for cross checks on small instances and refuses anything above a
//! configurable cap.

use serde::ser::{Serialize, SerializeSeq, SerializeStruct, Serializer};

use crate::error::Error;
use crate::hypergraph::WeightedHypergraph;
use crate::scalar::Scalar;

/// Selects one of the tensors attached to a hypergraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum TensorKind {
    #[serde(rename = "A")]
    Adjacency,
    #[serde(rename = "D")]
    Degree,
    #[serde(rename = "L")]
    Laplacian,
    #[serde(rename = "Q")]
    SignlessLaplacian,
}

impl TensorKind {
    /// Single letter code used in file output and CLI arguments.
    pub fn code(self) -> &'static str {
        match self {
            TensorKind::Adjacency => "A",
            TensorKind::Degree => "D",
            TensorKind::Laplacian => "L",
            TensorKind::SignlessLaplacian => "Q",
        }
    }

    /// Sign of the adjacency part: -1 for `L`, +1 for `A` and `Q`, 0 for `D`.
    fn adjacency_sign<T: Scalar>(self) -> T {
        match self {
            TensorKind::Adjacency | TensorKind::SignlessLaplacian => T::one(),
            TensorKind::Laplacian => -T::one(),
            TensorKind::Degree => T::zero(),
        }
    }

    /// Whether the diagonal carries the vertex weights.
    fn has_degree_part(self) -> bool {
        !matches!(self, TensorKind::Adjacency)
    }
}

impl std::fmt::Display for TensorKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            TensorKind::Adjacency => "adjacency",
            TensorKind::Degree => "degree",
            TensorKind::Laplacian => "laplacian",
            TensorKind::SignlessLaplacian => "signless-laplacian",
        };
        f.write_str(name)
    }
}

impl std::str::FromStr for TensorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "a" | "adjacency" => Ok(TensorKind::Adjacency),
            "d" | "degree" => Ok(TensorKind::Degree),
            "l" | "laplacian" => Ok(TensorKind::Laplacian),
            "q" | "signless" | "signless-laplacian" => Ok(TensorKind::SignlessLaplacian),
            other => Err(Error::InvalidFormat(format!(
                "unknown tensor '{other}', expected one of A, D, L, Q"
            ))),
        }
    }
}

/// Contracts the chosen tensor with `x` along all but the first index,
/// returning the vector with components `(T x)_i`.
///
/// Runs in `O(sum over edges of k)` time using prefix and suffix products per
/// edge, never touching a dense representation.
pub fn apply<T: Scalar>(
    g: &WeightedHypergraph<T>,
    kind: TensorKind,
    x: &[T],
) -> Result<Vec<T>, Error> {
    check_dimension(g, x)?;
    let n = g.n();
    let km1 = (g.k() - 1) as i32;

    let mut out = vec![T::zero(); n];
    if kind.has_degree_part() {
        let stats = g.stats();
        for i in 0..n {
            out[i] = stats.vertex_weights[i] * x[i].powi(km1);
        }
    }
    let sign: T = kind.adjacency_sign();
    if sign == T::zero() {
        return Ok(out);
    }

    // The adjacency part goes into its own accumulator and is combined with
    // the degree part in one final operation. Per vertex it adds edge terms
    // in the same ascending order the vertex weights were summed in, so on
    // structural eigenvectors (all ones, coordinate vectors) degree and
    // adjacency parts cancel bitwise, not merely approximately.
    let k = g.k();
    let mut adj = vec![T::zero(); n];
    let mut prefix = vec![T::one(); k + 1];
    let mut suffix = vec![T::one(); k + 1];
    for e in g.edges() {
        let vs = e.vertices();
        for j in 0..k {
            prefix[j + 1] = prefix[j] * x[vs[j]];
        }
        for j in (0..k).rev() {
            suffix[j] = suffix[j + 1] * x[vs[j]];
        }
        let w = e.weight();
        for j in 0..k {
            // product of x over the edge with position j left out
            adj[vs[j]] = adj[vs[j]] + w * (prefix[j] * suffix[j + 1]);
        }
    }
    for i in 0..n {
        out[i] = out[i] + sign * adj[i];
    }
    Ok(out)
}

/// The scalar `x^T (T x) = sum a_{i_1 .. i_k} x_{i_1} .. x_{i_k}`.
///
/// By symmetry the adjacency part collapses to
/// `k * sum over edges of w(e) * prod_{u in e} x_u` and the degree part to
/// `sum_i w_i * x_i^k`, which is how it is computed here.
pub fn quadratic_form<T: Scalar>(
    g: &WeightedHypergraph<T>,
    kind: TensorKind,
    x: &[T],
) -> Result<T, Error> {
    check_dimension(g, x)?;
    let mut total = T::zero();
    if kind.has_degree_part() {
        let stats = g.stats();
        let k = g.k() as i32;
        for (&w, &xi) in stats.vertex_weights.iter().zip(x) {
            total = total + w * xi.powi(k);
        }
    }
    let sign: T = kind.adjacency_sign();
    if sign != T::zero() {
        let mut adj = T::zero();
        for e in g.edges() {
            let prod = e.vertices().iter().fold(T::one(), |acc, &v| acc * x[v]);
            adj = adj + e.weight() * prod;
        }
        total = total + sign * T::from_count(g.k()) * adj;
    }
    Ok(total)
}

fn check_dimension<T: Scalar>(g: &WeightedHypergraph<T>, x: &[T]) -> Result<(), Error> {
    if x.len() != g.n() {
        return Err(Error::DimensionMismatch {
            got: x.len(),
            expected: g.n(),
        });
    }
    Ok(())
}

/// Default cap on dense materialization, in entries.
pub const DEFAULT_DENSE_CAP: u128 = 10_000_000;

/// A dense order-k tensor, row major, used only to cross check the implicit
/// path on small instances.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseTensor<T> {
    n: usize,
    k: usize,
    entries: Vec<T>,
}

impl<T: Scalar> DenseTensor<T> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Row major entry storage of length `n^k`.
    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    fn offset(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.k);
        idx.iter().fold(0, |acc, &i| {
            debug_assert!(i < self.n);
            acc * self.n + i
        })
    }

    /// Entry at a full multi-index of length `k`.
    pub fn entry(&self, idx: &[usize]) -> T {
        self.entries[self.offset(idx)]
    }

    /// Dense contraction along all but the first index, `O(n^k)`.
    pub fn apply(&self, x: &[T]) -> Result<Vec<T>, Error> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch {
                got: x.len(),
                expected: self.n,
            });
        }
        let mut out = vec![T::zero(); self.n];
        let mut idx = vec![0usize; self.k];
        for (flat, &a) in self.entries.iter().enumerate() {
            if a != T::zero() {
                let mut rest = flat;
                for slot in (0..self.k).rev() {
                    idx[slot] = rest % self.n;
                    rest /= self.n;
                }
                let prod = idx[1..].iter().fold(T::one(), |acc, &i| acc * x[i]);
                out[idx[0]] = out[idx[0]] + a * prod;
            }
        }
        Ok(out)
    }

    /// Exact invariance of the entries under one permutation of the index
    /// positions. `perm` must be a permutation of `0..k`.
    pub fn is_symmetric_under(&self, perm: &[usize]) -> bool {
        assert_eq!(perm.len(), self.k);
        let mut idx = vec![0usize; self.k];
        let mut permuted = vec![0usize; self.k];
        for (flat, &a) in self.entries.iter().enumerate() {
            let mut rest = flat;
            for slot in (0..self.k).rev() {
                idx[slot] = rest % self.n;
                rest /= self.n;
            }
            for (slot, &p) in perm.iter().enumerate() {
                permuted[slot] = idx[p];
            }
            if self.entry(&permuted) != a {
                return false;
            }
        }
        true
    }
}

/// Serializes as `{k, n, entries: [{idx, val}, ..]}` keeping only the nonzero
/// entries, in row major index order.
impl<T: Scalar + Serialize> Serialize for DenseTensor<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        struct NonZero<'a, T>(&'a DenseTensor<T>);

        #[derive(serde::Serialize)]
        struct Entry<'a, T> {
            idx: &'a [usize],
            val: T,
        }

        impl<T: Scalar + Serialize> Serialize for NonZero<'_, T> {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let nonzero = self.0.entries.iter().filter(|&&a| a != T::zero()).count();
                let mut seq = serializer.serialize_seq(Some(nonzero))?;
                let mut idx = vec![0usize; self.0.k];
                for (flat, &a) in self.0.entries.iter().enumerate() {
                    if a != T::zero() {
                        let mut rest = flat;
                        for slot in (0..self.0.k).rev() {
                            idx[slot] = rest % self.0.n;
                            rest /= self.0.n;
                        }
                        seq.serialize_element(&Entry { idx: &idx, val: a })?;
                    }
                }
                seq.end()
            }
        }

        let mut s = serializer.serialize_struct("DenseTensor", 3)?;
        s.serialize_field("k", &self.k)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("entries", &NonZero(self))?;
        s.end()
    }
}

/// Materializes the chosen tensor densely, with the default entry cap.
pub fn materialize<T: Scalar>(
    g: &WeightedHypergraph<T>,
    kind: TensorKind,
) -> Result<DenseTensor<T>, Error> {
    materialize_with_cap(g, kind, DEFAULT_DENSE_CAP)
}

/// Materializes the chosen tensor densely, refusing to allocate more than
/// `cap` entries.
pub fn materialize_with_cap<T: Scalar>(
    g: &WeightedHypergraph<T>,
    kind: TensorKind,
    cap: u128,
) -> Result<DenseTensor<T>, Error> {
    let n = g.n();
    let k = g.k();
    let total = (n as u128).checked_pow(k as u32).ok_or(Error::TooLarge {
        entries: u128::MAX,
        cap,
    })?;
    if total > cap {
        return Err(Error::TooLarge {
            entries: total,
            cap,
        });
    }

    let mut entries = vec![T::zero(); total as usize];
    if kind.has_degree_part() {
        let stats = g.stats();
        for (i, &w) in stats.vertex_weights.iter().enumerate() {
            // diagonal offset for (i, i, .., i)
            let mut off = 0usize;
            for _ in 0..k {
                off = off * n + i;
            }
            entries[off] = w;
        }
    }
    let sign: T = kind.adjacency_sign();
    if sign != T::zero() {
        let factorial_km1 = T::from_count((1..k).product());
        for e in g.edges() {
            let value = sign * e.weight() / factorial_km1;
            for perm in permutations(e.vertices()) {
                let off = perm.iter().fold(0usize, |acc, &i| acc * n + i);
                entries[off] = value;
            }
        }
    }
    Ok(DenseTensor { n, k, entries })
}

/// All permutations of `items`, generated with Heap's algorithm.
fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    let mut scratch = items.to_vec();
    let mut out = Vec::new();
    heap_recurse(scratch.len(), &mut scratch, &mut out);
    out
}

fn heap_recurse(len: usize, scratch: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if len <= 1 {
        out.push(scratch.clone());
        return;
    }
    for i in 0..len {
        heap_recurse(len - 1, scratch, out);
        if len.is_multiple_of(2) {
            scratch.swap(i, len - 1);
        } else {
            scratch.swap(0, len - 1);
        }
    }
}

/// The digraph on the vertex set with an arc `(i, j)` whenever the tensor has
/// a positive entry in slice `i` whose remaining indices include `j`.
///
/// For the adjacency and both Laplacian tensors this puts an arc between any
/// two distinct vertices sharing an edge; diagonal entries would only add
/// self arcs, which are dropped since they never affect strong connectivity.
/// For the degree tensor the arc set is empty.
#[derive(Debug, Clone)]
pub struct ComparabilityDigraph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl ComparabilityDigraph {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Out-neighbor lists, each sorted ascending.
    pub fn arcs(&self) -> &[Vec<usize>] {
        &self.adj
    }

    /// Strong connectivity via one breadth-first sweep on the digraph and one
    /// on its reverse.
    pub fn is_strongly_connected(&self) -> bool {
        if self.n == 1 {
            return true;
        }
        let forward = &self.adj;
        let mut reverse = vec![Vec::new(); self.n];
        for (i, outs) in forward.iter().enumerate() {
            for &j in outs {
                reverse[j].push(i);
            }
        }
        reaches_all(forward, self.n) && reaches_all(&reverse, self.n)
    }
}

fn reaches_all(adj: &[Vec<usize>], n: usize) -> bool {
    let mut visited = vec![false; n];
    let mut stack = vec![0usize];
    visited[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &u in &adj[v] {
            if !visited[u] {
                visited[u] = true;
                count += 1;
                stack.push(u);
            }
        }
    }
    count == n
}

/// Builds the comparability digraph of the chosen tensor.
pub fn comparability_digraph<T: Scalar>(
    g: &WeightedHypergraph<T>,
    kind: TensorKind,
) -> ComparabilityDigraph {
    let n = g.n();
    let mut sets = vec![std::collections::BTreeSet::new(); n];
    if kind != TensorKind::Degree {
        for e in g.edges() {
            for &i in e.vertices() {
                for &j in e.vertices() {
                    if i != j {
                        sets[i].insert(j);
                    }
                }
            }
        }
    }
    ComparabilityDigraph {
        n,
        adj: sets.into_iter().map(|s| s.into_iter().collect()).collect(),
    }
}

/// Weak irreducibility of the chosen tensor: strong connectivity of its
/// comparability digraph. For the adjacency and signless Laplacian tensors
/// this holds exactly when the hypergraph is connected.
pub fn is_weakly_irreducible<T: Scalar>(g: &WeightedHypergraph<T>, kind: TensorKind) -> bool {
    comparability_digraph(g, kind).is_strongly_connected()
}
