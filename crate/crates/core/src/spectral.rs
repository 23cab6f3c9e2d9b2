//! H-eigenpairs and spectral radii.
//!
//! A real pair `(lambda, x)` with `x != 0` is an H-eigenpair of an order k
//! tensor `T` when
//!
//! ```text
//! (T x)_i = lambda * x_i^(k-1)    for every i.
//! ```
//!
//! The eigenvalue is classed by the best eigenvector sign pattern exhibited:
//! `H++` when `x` is strictly positive, `H+` when it is nonnegative, plain
//! `H` otherwise. Eigenvectors are kept normalized to unit maximum absolute
//! component; the eigen equations are homogeneous, so this loses nothing.
//!
//! The spectral radius of the adjacency and signless Laplacian tensors of a
//! connected hypergraph comes with a strictly positive eigenvector, unique up
//! to scaling, and is computed by [`power_iteration`]: a shifted higher order
//! power method. With `sigma = max(1, W0 * Delta)` the map
//!
//! ```text
//! y = T x + sigma * x^[k-1],    x' = y^[1/(k-1)] / max(y^[1/(k-1)])
//! ```
//!
//! keeps iterates strictly positive, and for every positive `x` the ratios
//! `y_i / x_i^(k-1)` bracket `rho + sigma`. The iteration stops once the
//! bracket width drops below the tolerance, and the midpoint, minus the
//! shift, is reported as the radius.

use serde::Serialize;

use crate::error::Error;
use crate::hypergraph::WeightedHypergraph;
use crate::scalar::Scalar;
use crate::tensor::{apply, TensorKind};

/// Sign threshold separating the eigenvector classes, applied after unit-max
/// normalization.
pub const CLASSIFY_THRESHOLD: f64 = 1e-9;

/// Default ratio-gap tolerance for [`power_iteration`].
pub const POWER_TOLERANCE: f64 = 1e-10;

/// Default iteration cap for [`power_iteration`].
pub const POWER_MAX_ITERATIONS: usize = 1_000_000;

/// Eigenvector sign class, ordered `H < H+ < H++`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum EigenClass {
    #[serde(rename = "H")]
    H,
    #[serde(rename = "H+")]
    HPlus,
    #[serde(rename = "H++")]
    HPlusPlus,
}

impl std::fmt::Display for EigenClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            EigenClass::H => "H",
            EigenClass::HPlus => "H+",
            EigenClass::HPlusPlus => "H++",
        })
    }
}

/// A verified H-eigenpair of one of the hypergraph tensors.
///
/// `x` is stored normalized to unit maximum absolute component and `residual`
/// is `max_i |(T x)_i - lambda * x_i^(k-1)|` on that normalized vector.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Eigenpair<T> {
    #[serde(rename = "tensor")]
    pub kind: TensorKind,
    pub lambda: T,
    pub class: EigenClass,
    pub residual: T,
    pub x: Vec<T>,
}

impl<T: Scalar> Eigenpair<T> {
    /// Normalizes `x`, measures the residual and classifies the sign pattern.
    /// No residual threshold is applied here; callers decide what to accept.
    pub fn new(
        g: &WeightedHypergraph<T>,
        kind: TensorKind,
        lambda: T,
        x: &[T],
    ) -> Result<Self, Error> {
        let xn = normalize_unit_max(x)?;
        let residual = residual_normalized(g, kind, lambda, &xn)?;
        let class = classify_normalized(&xn, T::cast(CLASSIFY_THRESHOLD));
        Ok(Eigenpair {
            kind,
            lambda,
            class,
            residual,
            x: xn,
        })
    }
}

/// Scales a nonzero vector so its maximum absolute component is one. The
/// scaling factor is positive, so signs are preserved.
pub fn normalize_unit_max<T: Scalar>(x: &[T]) -> Result<Vec<T>, Error> {
    let max = x.iter().fold(T::zero(), |m, &c| m.max(c.abs()));
    if !(max.is_finite() && max > T::zero()) {
        return Err(Error::ZeroVector);
    }
    Ok(x.iter().map(|&c| c / max).collect())
}

/// `max_i |(T x)_i - lambda * x_i^(k-1)|` after unit-max normalization of `x`.
pub fn residual<T: Scalar>(
    g: &WeightedHypergraph<T>,
    kind: TensorKind,
    lambda: T,
    x: &[T],
) -> Result<T, Error> {
    let xn = normalize_unit_max(x)?;
    residual_normalized(g, kind, lambda, &xn)
}

fn residual_normalized<T: Scalar>(
    g: &WeightedHypergraph<T>,
    kind: TensorKind,
    lambda: T,
    xn: &[T],
) -> Result<T, Error> {
    let tx = apply(g, kind, xn)?;
    let km1 = (g.k() - 1) as i32;
    Ok(xn
        .iter()
        .zip(&tx)
        .map(|(&xi, &ti)| (ti - lambda * xi.powi(km1)).abs())
        .fold(T::zero(), T::max))
}

/// Classifies the sign pattern of an eigenvector with the default threshold
/// [`CLASSIFY_THRESHOLD`].
pub fn classify<T: Scalar>(x: &[T]) -> Result<EigenClass, Error> {
    classify_with(x, T::cast(CLASSIFY_THRESHOLD))
}

/// Classifies with an explicit threshold `tau`: after unit-max normalization,
/// `H++` needs every component above `tau`, `H+` every component above
/// `-tau`.
pub fn classify_with<T: Scalar>(x: &[T], tau: T) -> Result<EigenClass, Error> {
    let xn = normalize_unit_max(x)?;
    Ok(classify_normalized(&xn, tau))
}

fn classify_normalized<T: Scalar>(xn: &[T], tau: T) -> EigenClass {
    if xn.iter().all(|&c| c > tau) {
        EigenClass::HPlusPlus
    } else if xn.iter().all(|&c| c >= -tau) {
        EigenClass::HPlus
    } else {
        EigenClass::H
    }
}

/// Controls for [`power_iteration`].
#[derive(Debug, Clone)]
pub struct PowerIterationOptions<T> {
    /// Stop once `max ratio - min ratio` drops below this.
    pub tolerance: T,
    pub max_iterations: usize,
    /// Strictly positive start vector; all ones when absent. The limit is
    /// independent of the start, which is useful for testing exactly that.
    pub start: Option<Vec<T>>,
}

impl<T: Scalar> Default for PowerIterationOptions<T> {
    fn default() -> Self {
        PowerIterationOptions {
            tolerance: T::cast(POWER_TOLERANCE),
            max_iterations: POWER_MAX_ITERATIONS,
            start: None,
        }
    }
}

/// Outcome of [`power_iteration`]. When `converged` is false, `rho` is the
/// best bracket midpoint reached and `final_gap` its width.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PowerIterationResult<T> {
    pub rho: T,
    pub iterations: usize,
    pub converged: bool,
    pub final_gap: T,
    pub x: Vec<T>,
}

/// Spectral radius of the adjacency or signless Laplacian tensor of a
/// connected hypergraph, with its positive eigenvector.
///
/// Only these two tensors are supported: they are the entrywise nonnegative
/// ones, where the ratio bracket argument applies. The Laplacian is rejected
/// with [`Error::UnsupportedTensor`].
pub fn power_iteration<T: Scalar>(
    g: &WeightedHypergraph<T>,
    kind: TensorKind,
    opts: &PowerIterationOptions<T>,
) -> Result<PowerIterationResult<T>, Error> {
    if !matches!(kind, TensorKind::Adjacency | TensorKind::SignlessLaplacian) {
        return Err(Error::UnsupportedTensor);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }

    let n = g.n();
    let km1 = (g.k() - 1) as i32;
    let stats = g.stats();
    let sigma = T::one().max(stats.max_edge_weight * T::from_count(stats.max_degree));
    let two = T::cast(2.0);

    let mut x: Vec<T> = match &opts.start {
        Some(v) => {
            if v.len() != n {
                return Err(Error::DimensionMismatch {
                    got: v.len(),
                    expected: n,
                });
            }
            if !v.iter().all(|&c| c.is_finite() && c > T::zero()) {
                return Err(Error::NonPositiveStart);
            }
            normalize_unit_max(v)?
        }
        None => vec![T::one(); n],
    };

    let root = T::one() / T::from_count(g.k() - 1);
    let max_iterations = opts.max_iterations.max(1);
    let mut lo = T::zero();
    let mut hi = T::zero();
    let mut gap = T::infinity();

    for iteration in 1..=max_iterations {
        let mut y = apply(g, kind, &x)?;
        let mut rmin = T::infinity();
        let mut rmax = T::neg_infinity();
        for i in 0..n {
            let p = x[i].powi(km1);
            y[i] = y[i] + sigma * p;
            let ratio = y[i] / p;
            rmin = rmin.min(ratio);
            rmax = rmax.max(ratio);
        }
        lo = rmin;
        hi = rmax;
        gap = rmax - rmin;
        if gap < opts.tolerance {
            return Ok(PowerIterationResult {
                rho: (rmin + rmax) / two - sigma,
                iterations: iteration,
                converged: true,
                final_gap: gap,
                x,
            });
        }
        for i in 0..n {
            x[i] = y[i].powf(root);
        }
        x = normalize_unit_max(&x)?;
    }

    Ok(PowerIterationResult {
        rho: (lo + hi) / two - sigma,
        iterations: max_iterations,
        converged: false,
        final_gap: gap,
        x,
    })
}

/// The eigenpairs every hypergraph carries by construction, for `k >= 3`.
///
/// * Laplacian: `(0, all ones)` and `(w_i, e_i)` for every vertex `i`, where
///   `e_i` is the i-th coordinate vector.
/// * Signless Laplacian: `(w_i, e_i)` for every vertex.
/// * Adjacency: `(0, e_i)` for every vertex.
///
/// On a regular hypergraph with uniform edge weight (common vertex weight
/// `w = W0 * r`) the all ones vector additionally gives `(2w, 1)` for the
/// signless Laplacian and `(w, 1)` for the adjacency tensor.
pub fn known_eigenpairs<T: Scalar>(
    g: &WeightedHypergraph<T>,
    kind: TensorKind,
) -> Result<Vec<Eigenpair<T>>, Error> {
    if g.k() < 3 {
        return Err(Error::EdgeSizeBelowThree { k: g.k() });
    }
    let n = g.n();
    let stats = g.stats();
    let reg = g.regularity();
    let regular_uniform = reg.is_regular && reg.is_uniform_weight;
    let ones = vec![T::one(); n];
    let coord = |i: usize| {
        let mut v = vec![T::zero(); n];
        v[i] = T::one();
        v
    };

    let mut out = Vec::new();
    match kind {
        TensorKind::Laplacian => {
            out.push(Eigenpair::new(g, kind, T::zero(), &ones)?);
            for i in 0..n {
                out.push(Eigenpair::new(g, kind, stats.vertex_weights[i], &coord(i))?);
            }
        }
        TensorKind::SignlessLaplacian => {
            for i in 0..n {
                out.push(Eigenpair::new(g, kind, stats.vertex_weights[i], &coord(i))?);
            }
            if regular_uniform {
                out.push(Eigenpair::new(g, kind, stats.alpha + stats.alpha, &ones)?);
            }
        }
        TensorKind::Adjacency => {
            for i in 0..n {
                out.push(Eigenpair::new(g, kind, T::zero(), &coord(i))?);
            }
            if regular_uniform {
                out.push(Eigenpair::new(g, kind, stats.alpha, &ones)?);
            }
        }
        TensorKind::Degree => return Err(Error::UnsupportedTensor),
    }
    Ok(out)
}

/// On a regular hypergraph with uniform edge weight, maps a Laplacian
/// H-eigenpair `(lambda, x)` to the signless Laplacian pair
/// `(2 * W0 * r - lambda, x)` and the adjacency pair `(W0 * r - lambda, x)`.
///
/// Returns the two derived pairs in that order. The input must pass the
/// Laplacian residual gate `tolerance`, otherwise [`Error::NotAnEigenpair`].
pub fn shift_relation<T: Scalar>(
    g: &WeightedHypergraph<T>,
    lambda: T,
    x: &[T],
    tolerance: T,
) -> Result<(Eigenpair<T>, Eigenpair<T>), Error> {
    if g.k() < 3 {
        return Err(Error::EdgeSizeBelowThree { k: g.k() });
    }
    let reg = g.regularity();
    if !(reg.is_regular && reg.is_uniform_weight) {
        return Err(Error::NotRegularUniform);
    }
    let r = residual(g, TensorKind::Laplacian, lambda, x)?;
    let within_gate = r < tolerance;
    if !within_gate {
        return Err(Error::NotAnEigenpair {
            residual: r.to_f64().unwrap_or(f64::NAN),
            tolerance: tolerance.to_f64().unwrap_or(f64::NAN),
        });
    }
    // the common vertex weight, summed the same way the contraction sums it
    let wr = g.stats().alpha;
    let q = Eigenpair::new(g, TensorKind::SignlessLaplacian, wr + wr - lambda, x)?;
    let a = Eigenpair::new(g, TensorKind::Adjacency, wr - lambda, x)?;
    Ok((q, a))
}
