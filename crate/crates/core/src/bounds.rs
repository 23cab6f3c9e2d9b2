//! Eigenvalue bounds and the verdict report.
//!
//! Every inequality and characterization the crate knows about is evaluated
//! against measured spectral data and turned into a [`BoundEntry`]. All the
//! inequalities are proven for connected hypergraphs with `k >= 3`, so any
//! `violated` verdict flags a bug in the implementation, never an interesting
//! hypergraph.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::Error;
use crate::hypergraph::WeightedHypergraph;
use crate::newton::{newton_eigenpair_search, NewtonOptions};
use crate::scalar::Scalar;
use crate::spectral::{
    known_eigenpairs, power_iteration, EigenClass, Eigenpair, PowerIterationOptions,
};
use crate::tensor::TensorKind;

/// Two sided checks (`measured == bound`) pass when the absolute difference
/// stays below this.
pub const EQUALITY_TOL: f64 = 1e-8;
/// Strict inequalities are certified with at least this margin. Floating
/// point cannot distinguish `<` from `<=`, the margin makes the check mean
/// something.
pub const STRICT_MARGIN: f64 = 1e-10;
/// One sided range checks may undershoot by this much before they count as
/// violated, absorbing power iteration and residual noise.
pub const RANGE_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "holds")]
    Holds,
    #[serde(rename = "violated")]
    Violated,
    #[serde(rename = "not-applicable")]
    NotApplicable,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "holds",
            Verdict::Violated => "violated",
            Verdict::NotApplicable => "not-applicable",
        })
    }
}

/// One checked inequality, equality or informational fact.
///
/// `slack` is the margin in the direction of the inequality: `bound -
/// measured` for upper bounds, `measured - bound` for lower bounds, the
/// signed difference `bound - measured` for equalities. Informational and
/// not-applicable entries carry no numbers.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundEntry<T> {
    pub theorem_id: &'static str,
    pub bound: Option<T>,
    pub measured: Option<T>,
    pub verdict: Verdict,
    pub slack: Option<T>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl<T: Scalar> BoundEntry<T> {
    fn upper(theorem_id: &'static str, measured: T, bound: T) -> Self {
        let slack = bound - measured;
        BoundEntry {
            theorem_id,
            bound: Some(bound),
            measured: Some(measured),
            verdict: verdict_of(slack >= -T::cast(RANGE_TOL)),
            slack: Some(slack),
            note: None,
        }
    }

    fn lower(theorem_id: &'static str, measured: T, bound: T) -> Self {
        let slack = measured - bound;
        BoundEntry {
            theorem_id,
            bound: Some(bound),
            measured: Some(measured),
            verdict: verdict_of(slack >= -T::cast(RANGE_TOL)),
            slack: Some(slack),
            note: None,
        }
    }

    fn equality(theorem_id: &'static str, measured: T, bound: T) -> Self {
        let slack = bound - measured;
        BoundEntry {
            theorem_id,
            bound: Some(bound),
            measured: Some(measured),
            verdict: verdict_of(slack.abs() <= T::cast(EQUALITY_TOL)),
            slack: Some(slack),
            note: None,
        }
    }

    fn strict_upper(theorem_id: &'static str, measured: T, bound: T) -> Self {
        let slack = bound - measured;
        BoundEntry {
            theorem_id,
            bound: Some(bound),
            measured: Some(measured),
            verdict: verdict_of(slack >= T::cast(STRICT_MARGIN)),
            slack: Some(slack),
            note: None,
        }
    }

    fn not_applicable(theorem_id: &'static str, note: &str) -> Self {
        BoundEntry {
            theorem_id,
            bound: None,
            measured: None,
            verdict: Verdict::NotApplicable,
            slack: None,
            note: Some(note.to_string()),
        }
    }

    fn informational(theorem_id: &'static str, note: String) -> Self {
        BoundEntry {
            theorem_id,
            bound: None,
            measured: None,
            verdict: Verdict::Holds,
            slack: None,
            note: Some(note),
        }
    }
}

fn verdict_of(holds: bool) -> Verdict {
    if holds {
        Verdict::Holds
    } else {
        Verdict::Violated
    }
}

/// The full verdict list for one hypergraph, in fixed identifier order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport<T> {
    pub entries: Vec<BoundEntry<T>>,
    /// False as soon as one verdict is `violated`; not-applicable entries do
    /// not count against it.
    pub all_hold: bool,
    pub rho_adjacency: T,
    pub rho_signless: T,
}

/// Controls for [`bound_report`].
#[derive(Debug, Clone)]
pub struct BoundReportOptions<T> {
    pub power: PowerIterationOptions<T>,
    /// When set, Newton search results are mixed into the eigenvalue pools,
    /// giving the range checks more material than the structural pairs alone.
    pub oracle: Option<NewtonOptions<T>>,
}

impl<T: Scalar> Default for BoundReportOptions<T> {
    fn default() -> Self {
        BoundReportOptions {
            power: PowerIterationOptions::default(),
            oracle: None,
        }
    }
}

/// One Gershgorin style disk `|lambda - center| <= radius` in the complex
/// plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Disk<T> {
    pub center: T,
    pub radius: T,
}

/// Per-vertex eigenvalue inclusion disks.
///
/// All eigenvalues of the tensor lie in the union: `(0, w_i)` for the
/// adjacency tensor, `(w_i, 0)` for the degree tensor, `(w_i, w_i)` for both
/// Laplacians. Since `w_i <= W0 * max_degree`, the union sits inside the
/// coarse disk of radius `W0 * max_degree` around 0 respectively `W0 *
/// max_degree`.
pub fn gershgorin_disks<T: Scalar>(g: &WeightedHypergraph<T>, kind: TensorKind) -> Vec<Disk<T>> {
    let stats = g.stats();
    stats
        .vertex_weights
        .iter()
        .map(|&w| match kind {
            TensorKind::Adjacency => Disk {
                center: T::zero(),
                radius: w,
            },
            TensorKind::Degree => Disk {
                center: w,
                radius: T::zero(),
            },
            TensorKind::Laplacian | TensorKind::SignlessLaplacian => Disk {
                center: w,
                radius: w,
            },
        })
        .collect()
}

/// The data the neighborhood bound is built from, exposed for inspection.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NeighborhoodBoundInput {
    pub u: usize,
    /// `N(u)`, every vertex sharing an edge with `u`.
    pub neighborhood: BTreeSet<usize>,
    /// `classes[t - 1]` holds the ids of the edges meeting `N(u)` in exactly
    /// `t` vertices, for `t = 1 ..= k`.
    pub classes: Vec<Vec<usize>>,
    /// `e(u, v)` for every neighbor `v`: the number of edges containing both.
    pub codegrees: BTreeMap<usize, usize>,
}

impl NeighborhoodBoundInput {
    pub fn new<T: Scalar>(g: &WeightedHypergraph<T>, u: usize) -> Result<Self, Error> {
        let neighborhood = g.neighbors(u)?;
        let mut classes = Vec::with_capacity(g.k());
        for t in 1..=g.k() {
            classes.push(g.edges_meeting(&neighborhood, t)?);
        }
        let mut codegrees = BTreeMap::new();
        for &v in &neighborhood {
            codegrees.insert(v, g.codegree(u, v)?);
        }
        Ok(NeighborhoodBoundInput {
            u,
            neighborhood,
            classes,
            codegrees,
        })
    }

    /// `sum_t sum_{e in classes[t]} sum_{v in e cap N(u)} e(u, v)`.
    fn triple_sum<T: Scalar>(&self, g: &WeightedHypergraph<T>) -> usize {
        let mut total = 0usize;
        for class in &self.classes {
            for &ei in class {
                for v in g.edges()[ei].vertices() {
                    if let Some(c) = self.codegrees.get(v) {
                        total += c;
                    }
                }
            }
        }
        total
    }
}

/// Upper bound on any H+-eigenvalue whose eigenvector attains its maximum at
/// `u`:
///
/// ```text
/// lambda <= sqrt( W0^2 / (k-1) * sum_t sum_{e in E_t(N(u))} sum_{v in e cap N(u)} e(u, v) )
/// ```
///
/// The bound only binds when `u` is the argmax of the eigenvector, which for
/// the spectral radius means the principal eigenvector. Any vertex is
/// accepted here, out of range ones aside, so the formula can be explored
/// freely.
pub fn neighborhood_bound<T: Scalar>(g: &WeightedHypergraph<T>, u: usize) -> Result<T, Error> {
    let input = NeighborhoodBoundInput::new(g, u)?;
    let total = input.triple_sum(g);
    let w0 = g.stats().max_edge_weight;
    let km1 = T::from_count(g.k() - 1);
    Ok((w0 * w0 / km1 * T::from_count(total)).sqrt())
}

/// Number of eigenvalues of any of the tensors, counted with multiplicity:
/// `n * (k - 1)^(n - 1)`. Exact, hence the big integer.
pub fn eigenvalue_count(n: usize, k: usize) -> BigUint {
    if n == 0 {
        return BigUint::from(0usize);
    }
    BigUint::from(n) * BigUint::from(k - 1).pow((n - 1) as u32)
}

/// Smallest index attaining the maximum component of `x`.
pub fn argmax_vertex<T: Scalar>(x: &[T]) -> usize {
    let mut arg = 0;
    for (i, &c) in x.iter().enumerate() {
        if c > x[arg] {
            arg = i;
        }
    }
    arg
}

/// Runs the power iterations, gathers eigenpairs and checks every bound.
///
/// Requires a connected hypergraph with `k >= 3`; both power iterations must
/// converge, a failed one surfaces as [`Error::MaxIterationsExceeded`].
pub fn bound_report<T: Scalar>(
    g: &WeightedHypergraph<T>,
    opts: &BoundReportOptions<T>,
) -> Result<BoundReport<T>, Error> {
    if g.k() < 3 {
        return Err(Error::EdgeSizeBelowThree { k: g.k() });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }

    let run = |kind: TensorKind| -> Result<_, Error> {
        let r = power_iteration(g, kind, &opts.power)?;
        if !r.converged {
            return Err(Error::MaxIterationsExceeded {
                iterations: r.iterations,
                gap: r.final_gap.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(r)
    };
    let power_a = run(TensorKind::Adjacency)?;
    let power_q = run(TensorKind::SignlessLaplacian)?;
    let rho_a = power_a.rho;
    let rho_q = power_q.rho;

    // eigenvalue pools per tensor: structural pairs, the measured radius,
    // and whatever the oracle digs up
    let pool = |kind: TensorKind| -> Result<Vec<Eigenpair<T>>, Error> {
        let mut pairs = known_eigenpairs(g, kind)?;
        match kind {
            TensorKind::Adjacency => pairs.push(Eigenpair::new(g, kind, rho_a, &power_a.x)?),
            TensorKind::SignlessLaplacian => {
                pairs.push(Eigenpair::new(g, kind, rho_q, &power_q.x)?)
            }
            _ => {}
        }
        if let Some(newton) = &opts.oracle {
            pairs.extend(newton_eigenpair_search(g, kind, newton)?);
        }
        Ok(pairs)
    };
    let pool_a = pool(TensorKind::Adjacency)?;
    let pool_l = pool(TensorKind::Laplacian)?;
    let pool_q = pool(TensorKind::SignlessLaplacian)?;

    let stats = g.stats();
    let reg = g.regularity();
    let regular_uniform = reg.is_regular && reg.is_uniform_weight;
    let w0d = stats.max_edge_weight * T::from_count(stats.max_degree);
    let two = T::cast(2.0);

    let max_abs =
        |pairs: &[Eigenpair<T>]| pairs.iter().fold(T::zero(), |m, p| m.max(p.lambda.abs()));
    let lambda_min =
        |pairs: &[Eigenpair<T>]| pairs.iter().fold(T::infinity(), |m, p| m.min(p.lambda));
    let lambda_max =
        |pairs: &[Eigenpair<T>]| pairs.iter().fold(T::neg_infinity(), |m, p| m.max(p.lambda));
    let plus = |pairs: &[Eigenpair<T>]| -> Vec<Eigenpair<T>> {
        pairs
            .iter()
            .filter(|p| p.class >= EigenClass::HPlus)
            .cloned()
            .collect()
    };
    let plus_l = plus(&pool_l);
    let plus_q = plus(&pool_q);

    let u = argmax_vertex(&power_a.x);
    let nb = neighborhood_bound(g, u)?;

    let mut entries = vec![
        BoundEntry::upper("adjacency-disk", max_abs(&pool_a), w0d),
        BoundEntry::upper(
            "laplacian-disk",
            pool_l
                .iter()
                .fold(T::zero(), |m, p| m.max((p.lambda - w0d).abs())),
            w0d,
        ),
        BoundEntry::upper(
            "signless-disk",
            pool_q
                .iter()
                .fold(T::zero(), |m, p| m.max((p.lambda - w0d).abs())),
            w0d,
        ),
        BoundEntry::lower("laplacian-h-range-lower", lambda_min(&pool_l), T::zero()),
        BoundEntry::upper("laplacian-h-range-upper", lambda_max(&pool_l), two * w0d),
        BoundEntry::lower(
            "laplacian-hplus-range-lower",
            lambda_min(&plus_l),
            T::zero(),
        ),
        BoundEntry::upper(
            "laplacian-hplus-range-upper",
            lambda_max(&plus_l),
            stats.alpha,
        ),
        BoundEntry::equality("laplacian-largest-hplus", lambda_max(&plus_l), stats.alpha),
        BoundEntry::lower("signless-h-range-lower", lambda_min(&pool_q), T::zero()),
        BoundEntry::upper("signless-h-range-upper", lambda_max(&pool_q), two * w0d),
        BoundEntry::lower(
            "signless-hplus-range-lower",
            lambda_min(&plus_q),
            stats.delta,
        ),
        BoundEntry::upper(
            "signless-hplus-range-upper",
            lambda_max(&plus_q),
            two * stats.alpha,
        ),
        BoundEntry::equality("signless-smallest-hplus", lambda_min(&plus_q), stats.delta),
        BoundEntry::lower("signless-rho-lower", rho_q, two * stats.delta),
        BoundEntry::upper("signless-rho-upper", rho_q, two * stats.alpha),
        BoundEntry::lower("adjacency-rho-lower", rho_a, stats.delta),
        BoundEntry::upper("adjacency-rho-upper", rho_a, stats.alpha),
    ];

    if regular_uniform {
        entries.push(BoundEntry::equality(
            "adjacency-regular-equality",
            rho_a,
            w0d,
        ));
        entries.push(BoundEntry::not_applicable(
            "adjacency-strict-inequality",
            "regular with uniform weight, equality case applies",
        ));
        entries.push(BoundEntry::equality(
            "signless-regular-equality",
            rho_q,
            two * w0d,
        ));
        entries.push(BoundEntry::not_applicable(
            "signless-strict-inequality",
            "regular with uniform weight, equality case applies",
        ));
    } else {
        entries.push(BoundEntry::not_applicable(
            "adjacency-regular-equality",
            "not regular with uniform weight",
        ));
        entries.push(BoundEntry::strict_upper(
            "adjacency-strict-inequality",
            rho_a,
            w0d,
        ));
        entries.push(BoundEntry::not_applicable(
            "signless-regular-equality",
            "not regular with uniform weight",
        ));
        entries.push(BoundEntry::strict_upper(
            "signless-strict-inequality",
            rho_q,
            two * w0d,
        ));
    }

    let mut nb_entry = BoundEntry::upper("adjacency-neighborhood", rho_a, nb);
    nb_entry.note = Some(format!("argmax vertex u = {u}"));
    entries.push(nb_entry);

    entries.push(BoundEntry::informational(
        "eigenvalue-count",
        format!(
            "each tensor has {} eigenvalues counted with multiplicity",
            eigenvalue_count(g.n(), g.k())
        ),
    ));

    let all_hold = entries.iter().all(|e| e.verdict != Verdict::Violated);
    Ok(BoundReport {
        entries,
        all_hold,
        rho_adjacency: rho_a,
        rho_signless: rho_q,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{complete4, single_edge, two_edge_path};

    #[test]
    fn neighborhood_bound_frozen_values() {
        // single edge, u = 0: one edge in class t = 2, e(0,1) = e(0,2) = 1,
        // bound = sqrt(4/2 * 2) = 2
        let b = neighborhood_bound(&single_edge(), 0).unwrap();
        assert!((b - 2.0).abs() < 1e-12);

        // path, u = 2: both edges have t = 2, four codegree-1 neighbors,
        // bound = sqrt(4/2 * 4) = sqrt(8)
        let b = neighborhood_bound(&two_edge_path(), 2).unwrap();
        assert!((b - 8.0f64.sqrt()).abs() < 1e-12);

        // complete on 4: three edges with t = 2 contribute 4 each, the
        // opposite edge has t = 3 and contributes 6, bound = sqrt(18/2) = 3
        let b = neighborhood_bound(&complete4(), 0).unwrap();
        assert!((b - 3.0).abs() < 1e-12);

        assert!(matches!(
            neighborhood_bound(&single_edge(), 9),
            Err(Error::VertexOutOfRange { vertex: 9, n: 3 })
        ));
    }

    #[test]
    fn neighborhood_triple_sum_matches_brute_force() {
        for g in [single_edge(), two_edge_path(), complete4()] {
            for u in 0..g.n() {
                let input = NeighborhoodBoundInput::new(&g, u).unwrap();
                let mut brute = 0usize;
                for t in 1..=g.k() {
                    for (ei, e) in g.edges().iter().enumerate() {
                        let cap: Vec<usize> = e
                            .vertices()
                            .iter()
                            .copied()
                            .filter(|v| input.neighborhood.contains(v))
                            .collect();
                        if cap.len() != t {
                            continue;
                        }
                        assert!(input.classes[t - 1].contains(&ei));
                        for v in cap {
                            brute += g.codegree(u, v).unwrap();
                        }
                    }
                }
                assert_eq!(input.triple_sum(&g), brute);
            }
        }
    }

    #[test]
    fn disks() {
        let g = two_edge_path();
        let radii: Vec<f64> = gershgorin_disks(&g, TensorKind::Adjacency)
            .iter()
            .map(|d| d.radius)
            .collect();
        assert_eq!(radii, vec![1.0, 1.0, 3.0, 2.0, 2.0]);
        assert!(gershgorin_disks(&g, TensorKind::Adjacency)
            .iter()
            .all(|d| d.center == 0.0));

        for d in gershgorin_disks(&single_edge(), TensorKind::Laplacian) {
            assert_eq!(
                d,
                Disk {
                    center: 2.0,
                    radius: 2.0
                }
            );
        }
        for d in gershgorin_disks(&complete4(), TensorKind::SignlessLaplacian) {
            assert_eq!(
                d,
                Disk {
                    center: 3.0,
                    radius: 3.0
                }
            );
        }
        for (i, d) in gershgorin_disks(&g, TensorKind::Degree).iter().enumerate() {
            assert_eq!(d.center, g.stats().vertex_weights[i]);
            assert_eq!(d.radius, 0.0);
        }
    }

    #[test]
    fn eigenvalue_counts() {
        assert_eq!(eigenvalue_count(3, 3).to_string(), "12");
        assert_eq!(eigenvalue_count(4, 3).to_string(), "32");
        assert_eq!(eigenvalue_count(5, 3).to_string(), "80");
        assert_eq!(eigenvalue_count(5, 4).to_string(), "405");
        assert_eq!(eigenvalue_count(12, 3).to_string(), "24576");
        // far beyond u64
        assert_eq!(
            eigenvalue_count(50, 6).to_string(),
            "888178419700125232338905334472656250"
        );
    }

    #[test]
    fn report_on_the_complete_hypergraph_is_all_equalities() {
        let rep = bound_report(&complete4(), &BoundReportOptions::default()).unwrap();
        assert!(rep.all_hold);
        assert!((rep.rho_adjacency - 3.0).abs() < 1e-9);
        assert!((rep.rho_signless - 6.0).abs() < 1e-9);
        let by_id = |id: &str| {
            rep.entries
                .iter()
                .find(|e| e.theorem_id == id)
                .unwrap_or_else(|| panic!("missing entry {id}"))
        };
        assert_eq!(by_id("adjacency-regular-equality").verdict, Verdict::Holds);
        assert_eq!(by_id("signless-regular-equality").verdict, Verdict::Holds);
        assert_eq!(
            by_id("signless-strict-inequality").verdict,
            Verdict::NotApplicable
        );
        // neighborhood bound is tight here
        let nb = by_id("adjacency-neighborhood");
        assert!(nb.slack.unwrap().abs() < 1e-9);
    }

    #[test]
    fn report_on_the_path_certifies_strictness() {
        let rep = bound_report(&two_edge_path(), &BoundReportOptions::default()).unwrap();
        assert!(rep.all_hold);
        let by_id = |id: &str| rep.entries.iter().find(|e| e.theorem_id == id).unwrap();
        assert_eq!(
            by_id("adjacency-regular-equality").verdict,
            Verdict::NotApplicable
        );
        let strict = by_id("signless-strict-inequality");
        assert_eq!(strict.verdict, Verdict::Holds);
        // rho(Q) is measurably below 2 * W0 * max_degree = 8
        assert!(strict.slack.unwrap() > 1.0);
    }

    #[test]
    fn report_entry_ids_are_stable() {
        let rep = bound_report(&single_edge(), &BoundReportOptions::default()).unwrap();
        let ids: Vec<&str> = rep.entries.iter().map(|e| e.theorem_id).collect();
        assert_eq!(
            ids,
            vec![
                "adjacency-disk",
                "laplacian-disk",
                "signless-disk",
                "laplacian-h-range-lower",
                "laplacian-h-range-upper",
                "laplacian-hplus-range-lower",
                "laplacian-hplus-range-upper",
                "laplacian-largest-hplus",
                "signless-h-range-lower",
                "signless-h-range-upper",
                "signless-hplus-range-lower",
                "signless-hplus-range-upper",
                "signless-smallest-hplus",
                "signless-rho-lower",
                "signless-rho-upper",
                "adjacency-rho-lower",
                "adjacency-rho-upper",
                "adjacency-regular-equality",
                "adjacency-strict-inequality",
                "signless-regular-equality",
                "signless-strict-inequality",
                "adjacency-neighborhood",
                "eigenvalue-count",
            ]
        );
    }

    #[test]
    fn report_with_oracle_still_holds() {
        let opts = BoundReportOptions {
            oracle: Some(NewtonOptions {
                restarts: 80,
                ..NewtonOptions::default()
            }),
            ..BoundReportOptions::default()
        };
        let rep = bound_report(&single_edge(), &opts).unwrap();
        assert!(rep.all_hold);
    }

    #[test]
    fn report_rejects_bad_inputs() {
        let disconnected =
            WeightedHypergraph::new(6, 3, vec![(vec![0, 1, 2], 1.0), (vec![3, 4, 5], 1.0)])
                .unwrap();
        assert!(matches!(
            bound_report(&disconnected, &BoundReportOptions::default()),
            Err(Error::Disconnected)
        ));

        let pair = WeightedHypergraph::new(2, 2, vec![(vec![0, 1], 1.0)]).unwrap();
        assert!(matches!(
            bound_report(&pair, &BoundReportOptions::default()),
            Err(Error::EdgeSizeBelowThree { k: 2 })
        ));

        let tight = BoundReportOptions {
            power: PowerIterationOptions {
                max_iterations: 2,
                tolerance: 0.0,
                start: None,
            },
            oracle: None,
        };
        assert!(matches!(
            bound_report(&two_edge_path(), &tight),
            Err(Error::MaxIterationsExceeded { .. })
        ));
    }

    #[test]
    fn scaling_weights_scales_every_measured_quantity() {
        let base = two_edge_path();
        for c in [0.5, 2.0, 10.0] {
            let scaled = WeightedHypergraph::new(
                5,
                3,
                base.edges()
                    .iter()
                    .map(|e| (e.vertices().to_vec(), e.weight() * c))
                    .collect(),
            )
            .unwrap();
            let r0 = bound_report(&base, &BoundReportOptions::default()).unwrap();
            let r1 = bound_report(&scaled, &BoundReportOptions::default()).unwrap();
            assert!(r1.all_hold);
            assert!((r1.rho_adjacency - c * r0.rho_adjacency).abs() < 1e-9 * c);
            assert!((r1.rho_signless - c * r0.rho_signless).abs() < 1e-9 * c);
            let nb0 = neighborhood_bound(&base, 2).unwrap();
            let nb1 = neighborhood_bound(&scaled, 2).unwrap();
            assert!((nb1 - c * nb0).abs() < 1e-12 * c.max(1.0));
        }
    }
}
