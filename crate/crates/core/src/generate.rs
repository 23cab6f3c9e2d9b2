//! Deterministic construction of named hypergraph families plus a seeded
//! random family, used throughout the test suites and exposed by the CLI.
//!
//! Everything is a pure function of the spec: the random family uses a
//! ChaCha8 stream seeded from `spec.seed`, so equal specs produce bitwise
//! equal hypergraphs on every platform.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::hypergraph::WeightedHypergraph;
use crate::scalar::Scalar;

/// Retry budget for the connectivity rejection loop.
const CONNECT_ATTEMPTS: usize = 1000;

/// Edge-count ceiling for the complete family and for exhaustive subset
/// enumeration during random sampling.
const MAX_EDGES: u128 = 1_000_000;

/// The structural part of a [`GeneratorSpec`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum Family {
    /// One edge on vertices `0..k`.
    SingleEdge,
    /// All `C(n, k)` edges on `n` vertices.
    Complete { n: usize },
    /// `length` edges in a chain, consecutive edges sharing exactly one
    /// vertex, so `n = length * (k - 1) + 1`.
    LoosePath { length: usize },
    /// `arms` edges all containing vertex 0 and otherwise disjoint.
    #[serde(rename = "hyperstar")]
    HyperStar { arms: usize },
    /// `m` distinct random edges on `n` vertices, resampled until connected.
    RandomConnected { n: usize, m: usize },
}

/// How edge weights are assigned, in ascending edge order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "scheme", rename_all = "kebab-case")]
pub enum WeightScheme {
    /// Every edge gets `value`.
    Uniform { value: f64 },
    /// Independent uniform draws from `[lo, hi]`.
    #[serde(rename = "random-range")]
    Range { lo: f64, hi: f64 },
    /// Explicit per-edge weights; the length must match the edge count.
    List { values: Vec<f64> },
}

/// Full description of one generated hypergraph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    #[serde(flatten)]
    pub family: Family,
    pub k: usize,
    pub weights: WeightScheme,
    #[serde(default)]
    pub seed: u64,
}

/// Builds the hypergraph a spec describes.
///
/// Accepts any `k >= 2`. Weight parameters are given in f64 and cast into
/// the target scalar after all validation and sampling, so the f64 and f32
/// instantiations of one spec agree to f32 precision.
pub fn generate<T: Scalar>(spec: &GeneratorSpec) -> Result<WeightedHypergraph<T>, Error> {
    let k = spec.k;
    if k < 2 {
        return Err(Error::InconsistentParameters(format!(
            "edge size k = {k} is below 2"
        )));
    }
    validate_scheme(&spec.weights)?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);

    let (n, keys) = match spec.family {
        Family::SingleEdge => (k, vec![(0..k).collect::<Vec<_>>()]),
        Family::Complete { n } => {
            if n < k {
                return Err(Error::InconsistentParameters(format!(
                    "complete family needs n >= k, got n = {n}, k = {k}"
                )));
            }
            if binomial(n, k) > MAX_EDGES {
                return Err(Error::InconsistentParameters(format!(
                    "complete family on n = {n}, k = {k} exceeds {MAX_EDGES} edges"
                )));
            }
            (n, combinations(n, k))
        }
        Family::LoosePath { length } => {
            if length < 1 {
                return Err(Error::InconsistentParameters(
                    "loose path needs length >= 1".to_string(),
                ));
            }
            let n = length * (k - 1) + 1;
            let keys = (0..length)
                .map(|i| (i * (k - 1)..i * (k - 1) + k).collect())
                .collect();
            (n, keys)
        }
        Family::HyperStar { arms } => {
            if arms < 1 {
                return Err(Error::InconsistentParameters(
                    "hyperstar needs arms >= 1".to_string(),
                ));
            }
            let n = arms * (k - 1) + 1;
            let keys = (0..arms)
                .map(|i| {
                    let mut e = vec![0];
                    e.extend(1 + i * (k - 1)..1 + (i + 1) * (k - 1));
                    e
                })
                .collect();
            (n, keys)
        }
        Family::RandomConnected { n, m } => {
            return random_edges(spec, n, m, &mut rng);
        }
    };

    let weights = draw_weights(&spec.weights, keys.len(), &mut rng)?;
    let edges = keys.into_iter().zip(weights).collect();
    WeightedHypergraph::new(n, k, edges).map_err(Error::from)
}

/// Convenience wrapper for the random family with a weight range.
pub fn random_connected<T: Scalar>(
    k: usize,
    n: usize,
    m: usize,
    lo: f64,
    hi: f64,
    seed: u64,
) -> Result<WeightedHypergraph<T>, Error> {
    generate(&GeneratorSpec {
        family: Family::RandomConnected { n, m },
        k,
        weights: WeightScheme::Range { lo, hi },
        seed,
    })
}

fn validate_scheme(scheme: &WeightScheme) -> Result<(), Error> {
    let ok = |w: f64| w.is_finite() && w > 0.0;
    match scheme {
        WeightScheme::Uniform { value } => {
            if !ok(*value) {
                return Err(Error::InconsistentParameters(format!(
                    "uniform weight {value} is not positive and finite"
                )));
            }
        }
        WeightScheme::Range { lo, hi } => {
            if !ok(*lo) || !ok(*hi) || lo > hi {
                return Err(Error::InconsistentParameters(format!(
                    "weight range [{lo}, {hi}] is not a positive finite interval"
                )));
            }
        }
        WeightScheme::List { values } => {
            if values.is_empty() || !values.iter().all(|&w| ok(w)) {
                return Err(Error::InconsistentParameters(
                    "weight list must be nonempty with positive finite entries".to_string(),
                ));
            }
        }
    }
    Ok(())
}

fn draw_weights<T: Scalar>(
    scheme: &WeightScheme,
    m: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<T>, Error> {
    match scheme {
        WeightScheme::Uniform { value } => Ok(vec![T::cast(*value); m]),
        WeightScheme::Range { lo, hi } => Ok((0..m)
            .map(|_| T::cast(lo + (hi - lo) * rng.gen::<f64>()))
            .collect()),
        WeightScheme::List { values } => {
            if values.len() != m {
                return Err(Error::InconsistentParameters(format!(
                    "weight list has {} entries for {} edges",
                    values.len(),
                    m
                )));
            }
            Ok(values.iter().map(|&w| T::cast(w)).collect())
        }
    }
}

fn random_edges<T: Scalar>(
    spec: &GeneratorSpec,
    n: usize,
    m: usize,
    rng: &mut ChaCha8Rng,
) -> Result<WeightedHypergraph<T>, Error> {
    let k = spec.k;
    if n < k {
        return Err(Error::InconsistentParameters(format!(
            "random family needs n >= k, got n = {n}, k = {k}"
        )));
    }
    // every edge past the first connects at most k - 1 new vertices
    let needed = (n - 1).div_ceil(k - 1);
    if m < needed {
        return Err(Error::InconsistentParameters(format!(
            "{m} edges cannot connect {n} vertices with k = {k}, need at least {needed}"
        )));
    }
    let total = binomial(n, k);
    if (m as u128) > total {
        return Err(Error::InconsistentParameters(format!(
            "{m} distinct edges requested but only {total} exist"
        )));
    }

    for _ in 0..CONNECT_ATTEMPTS {
        let keys = if total <= MAX_EDGES {
            // small universe: pick m of all subsets by partial shuffle
            let mut all = combinations(n, k);
            for i in 0..m {
                let j = rng.gen_range(i..all.len());
                all.swap(i, j);
            }
            let mut keys: Vec<Vec<usize>> = all.into_iter().take(m).collect();
            keys.sort();
            keys
        } else {
            // huge universe: rejection sampling rarely collides
            let mut set = BTreeSet::new();
            let mut budget = 100 * m + 1000;
            while set.len() < m && budget > 0 {
                set.insert(sample_subset(rng, n, k));
                budget -= 1;
            }
            if set.len() < m {
                continue;
            }
            set.into_iter().collect()
        };

        let weights = draw_weights(&spec.weights, m, rng)?;
        let edges = keys.into_iter().zip(weights).collect();
        match WeightedHypergraph::new(n, k, edges) {
            Ok(g) if g.is_connected() => return Ok(g),
            // isolated vertices or disconnected layouts: sample again
            _ => {}
        }
    }
    Err(Error::ConnectivityUnreachable {
        attempts: CONNECT_ATTEMPTS,
    })
}

/// One uniform k-subset of `0..n`, sorted: a partial Fisher-Yates shuffle of
/// the scratch identity, keeping the first k slots.
fn sample_subset(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Vec<usize> {
    let mut scratch: Vec<usize> = (0..n).collect();
    for i in 0..k {
        let j = rng.gen_range(i..n);
        scratch.swap(i, j);
    }
    let mut out: Vec<usize> = scratch[..k].to_vec();
    out.sort_unstable();
    out
}

/// All k-subsets of `0..n` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        // advance the rightmost index that still has room
        let mut i = k;
        while i > 0 {
            i -= 1;
            if idx[i] != i + n - k {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
            if i == 0 {
                return out;
            }
        }
    }
}

/// `C(n, k)`, saturating at `u128::MAX`.
fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut c: u128 = 1;
    for i in 1..=k {
        let Some(next) = c.checked_mul((n - k + i) as u128) else {
            return u128::MAX;
        };
        c = next / i as u128;
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{complete4, single_edge, two_edge_path};

    fn shape<T: Scalar>(g: &WeightedHypergraph<T>) -> Vec<(Vec<usize>, T)> {
        g.edges()
            .iter()
            .map(|e| (e.vertices().to_vec(), e.weight()))
            .collect()
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 3), 4);
        assert_eq!(binomial(10, 5), 252);
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(200, 100), u128::MAX);
    }

    #[test]
    fn combinations_are_lexicographic_and_complete() {
        let c = combinations(4, 3);
        assert_eq!(
            c,
            vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]
        );
        assert_eq!(combinations(6, 3).len() as u128, binomial(6, 3));
        let mut sorted = combinations(6, 3);
        sorted.sort();
        assert_eq!(sorted, combinations(6, 3));
    }

    #[test]
    fn single_edge_matches_fixture() {
        let g: WeightedHypergraph<f64> = generate(&GeneratorSpec {
            family: Family::SingleEdge,
            k: 3,
            weights: WeightScheme::Uniform { value: 2.0 },
            seed: 0,
        })
        .unwrap();
        assert_eq!(shape(&g), shape(&single_edge()));
    }

    #[test]
    fn complete_matches_fixture_and_is_regular() {
        let g: WeightedHypergraph<f64> = generate(&GeneratorSpec {
            family: Family::Complete { n: 4 },
            k: 3,
            weights: WeightScheme::Uniform { value: 1.0 },
            seed: 0,
        })
        .unwrap();
        assert_eq!(shape(&g), shape(&complete4()));
        let reg = g.regularity();
        assert_eq!(reg.r, Some(3));
        assert_eq!(reg.common_weight, Some(1.0));
    }

    #[test]
    fn loose_path_matches_fixture_via_weight_list() {
        let g: WeightedHypergraph<f64> = generate(&GeneratorSpec {
            family: Family::LoosePath { length: 2 },
            k: 3,
            weights: WeightScheme::List {
                values: vec![1.0, 2.0],
            },
            seed: 0,
        })
        .unwrap();
        assert_eq!(shape(&g), shape(&two_edge_path()));
    }

    #[test]
    fn loose_path_degree_profile() {
        let g: WeightedHypergraph<f64> = generate(&GeneratorSpec {
            family: Family::LoosePath { length: 4 },
            k: 3,
            weights: WeightScheme::Uniform { value: 1.0 },
            seed: 0,
        })
        .unwrap();
        assert_eq!(g.n(), 9);
        let stats = g.stats();
        let junctions = stats.degrees.iter().filter(|&&d| d == 2).count();
        assert_eq!(junctions, 3);
        assert!(stats.degrees.iter().all(|&d| d == 1 || d == 2));
        assert!(g.is_connected());
    }

    #[test]
    fn hyperstar_shape() {
        let g: WeightedHypergraph<f64> = generate(&GeneratorSpec {
            family: Family::HyperStar { arms: 3 },
            k: 4,
            weights: WeightScheme::Uniform { value: 1.5 },
            seed: 0,
        })
        .unwrap();
        assert_eq!(g.n(), 10);
        assert_eq!(g.edges().len(), 3);
        let stats = g.stats();
        assert_eq!(stats.degrees[0], 3);
        assert!(stats.degrees[1..].iter().all(|&d| d == 1));
        assert!(g.is_connected());
        for e in g.edges() {
            assert_eq!(e.vertices()[0], 0);
        }
    }

    #[test]
    fn random_connected_is_deterministic_and_connected() {
        let a: WeightedHypergraph<f64> = random_connected(3, 6, 4, 0.5, 2.0, 7).unwrap();
        let b: WeightedHypergraph<f64> = random_connected(3, 6, 4, 0.5, 2.0, 7).unwrap();
        assert_eq!(shape(&a), shape(&b));
        assert!(a.is_connected());
        assert_eq!(a.edges().len(), 4);
        for e in a.edges() {
            assert!(e.weight() >= 0.5 && e.weight() <= 2.0);
        }

        let c: WeightedHypergraph<f64> = random_connected(3, 6, 4, 0.5, 2.0, 8).unwrap();
        assert_ne!(shape(&a), shape(&c));
    }

    #[test]
    fn random_connected_spans_many_seeds() {
        for seed in 0..25 {
            let g: WeightedHypergraph<f64> = random_connected(4, 9, 5, 1.0, 1.0, seed).unwrap();
            assert!(g.is_connected());
            assert_eq!(g.n(), 9);
        }
    }

    #[test]
    fn parameter_errors() {
        // 2 edges cannot connect 7 vertices when k = 3
        assert!(matches!(
            random_connected::<f64>(3, 7, 2, 1.0, 2.0, 0),
            Err(Error::InconsistentParameters(_))
        ));
        // more edges than C(4, 3) = 4 subsets
        assert!(matches!(
            random_connected::<f64>(3, 4, 5, 1.0, 2.0, 0),
            Err(Error::InconsistentParameters(_))
        ));
        assert!(matches!(
            random_connected::<f64>(3, 2, 1, 1.0, 2.0, 0),
            Err(Error::InconsistentParameters(_))
        ));
        assert!(matches!(
            random_connected::<f64>(3, 6, 4, 0.0, 2.0, 0),
            Err(Error::InconsistentParameters(_))
        ));
        assert!(matches!(
            random_connected::<f64>(3, 6, 4, 2.0, 1.0, 0),
            Err(Error::InconsistentParameters(_))
        ));
        assert!(matches!(
            generate::<f64>(&GeneratorSpec {
                family: Family::LoosePath { length: 0 },
                k: 3,
                weights: WeightScheme::Uniform { value: 1.0 },
                seed: 0,
            }),
            Err(Error::InconsistentParameters(_))
        ));
        assert!(matches!(
            generate::<f64>(&GeneratorSpec {
                family: Family::LoosePath { length: 2 },
                k: 3,
                weights: WeightScheme::List { values: vec![1.0] },
                seed: 0,
            }),
            Err(Error::InconsistentParameters(_))
        ));
        assert!(matches!(
            generate::<f64>(&GeneratorSpec {
                family: Family::SingleEdge,
                k: 1,
                weights: WeightScheme::Uniform { value: 1.0 },
                seed: 0,
            }),
            Err(Error::InconsistentParameters(_))
        ));
        assert!(matches!(
            generate::<f64>(&GeneratorSpec {
                family: Family::Complete { n: 3 },
                k: 4,
                weights: WeightScheme::Uniform { value: 1.0 },
                seed: 0,
            }),
            Err(Error::InconsistentParameters(_))
        ));
    }

    #[test]
    fn spec_json_round_trip() {
        let spec = GeneratorSpec {
            family: Family::RandomConnected { n: 6, m: 4 },
            k: 3,
            weights: WeightScheme::Range { lo: 0.5, hi: 2.0 },
            seed: 7,
        };
        let json = serde_json::to_string(&spec).unwrap();
        assert!(json.contains("\"family\":\"random-connected\""));
        assert!(json.contains("\"scheme\":\"random-range\""));
        let back: GeneratorSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(back, spec);

        let text = r#"{"family":"hyperstar","arms":2,"k":3,
                       "weights":{"scheme":"uniform","value":1.0}}"#;
        let parsed: GeneratorSpec = serde_json::from_str(text).unwrap();
        assert_eq!(parsed.family, Family::HyperStar { arms: 2 });
        assert_eq!(parsed.seed, 0);
    }

    #[test]
    fn f32_instantiation_agrees_with_f64() {
        let spec = GeneratorSpec {
            family: Family::RandomConnected { n: 6, m: 4 },
            k: 3,
            weights: WeightScheme::Range { lo: 0.5, hi: 2.0 },
            seed: 11,
        };
        let g64: WeightedHypergraph<f64> = generate(&spec).unwrap();
        let g32: WeightedHypergraph<f32> = generate(&spec).unwrap();
        for (a, b) in g64.edges().iter().zip(g32.edges()) {
            assert_eq!(a.vertices(), b.vertices());
            assert!((a.weight() as f32 - b.weight()).abs() < 1e-6);
        }
    }
}
