//! Newton search for H-eigenpairs on desk scale instances.
//!
//! Stacks the eigen equations with a normalization into the square system
//!
//! ```text
//! F_i(x, lambda) = (T x)_i - lambda * x_i^(k-1)    i = 0 .. n-1
//! F_n(x, lambda) = sum_i x_i^k - 1
//! ```
//!
//! and runs a damped Newton iteration from many seeded random starts. Every
//! candidate that converges is pushed through the residual gate of
//! [`Eigenpair::new`] before it is kept, so the returned list never contains
//! a spurious pair. The converse does not hold: roots can be missed, and
//! eigenvectors with `sum_i x_i^k = 0` are invisible to this normalization.
//! Treat the output as a lower bound on the real H-spectrum.
//!
//! Intended for small `n` (up to about 8); cost grows with `restarts * n^3`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::hypergraph::WeightedHypergraph;
use crate::scalar::Scalar;
use crate::spectral::Eigenpair;
use crate::tensor::{apply, TensorKind};

/// Controls for [`newton_eigenpair_search`]. The defaults match the values
/// used throughout the test suites.
#[derive(Debug, Clone)]
pub struct NewtonOptions<T> {
    /// Number of random starts. Draws come from a ChaCha8 stream seeded with
    /// `seed`, so a (seed, restarts) pair fixes the output exactly.
    pub restarts: usize,
    pub seed: u64,
    /// Newton steps allowed per start.
    pub max_steps: usize,
    /// Keep a converged candidate only if its eigenpair residual is below
    /// this.
    pub accept_residual: T,
    /// Candidates within this eigenvalue distance and ...
    pub lambda_dedup: T,
    /// ... within this eigenvector angle (radians) are merged.
    pub angle_dedup: T,
}

impl<T: Scalar> Default for NewtonOptions<T> {
    fn default() -> Self {
        NewtonOptions {
            restarts: 500,
            seed: 0,
            max_steps: 120,
            accept_residual: T::cast(1e-9),
            lambda_dedup: T::cast(1e-6),
            angle_dedup: T::cast(1e-4),
        }
    }
}

/// Convergence threshold on `max |F|` inside the Newton loop.
const NEWTON_F_TOLERANCE: f64 = 1e-12;

/// Search for H-eigenpairs of the adjacency, Laplacian or signless Laplacian
/// tensor. Output is deduplicated, sorted by eigenvalue and then
/// lexicographically by eigenvector, and deterministic for a fixed seed.
pub fn newton_eigenpair_search<T: Scalar>(
    g: &WeightedHypergraph<T>,
    kind: TensorKind,
    opts: &NewtonOptions<T>,
) -> Result<Vec<Eigenpair<T>>, Error> {
    if kind == TensorKind::Degree {
        return Err(Error::UnsupportedTensor);
    }
    let n = g.n();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut found: Vec<Eigenpair<T>> = Vec::new();

    for s in 0..opts.restarts {
        let x0 = draw_start(&mut rng, n, s);
        let Some((lambda, x)) = polish(g, kind, x0, opts.max_steps) else {
            continue;
        };
        if !lambda.is_finite() || x.iter().any(|c| !c.is_finite()) {
            continue;
        }
        let x = canonical_sign(x);
        let Ok(pair) = Eigenpair::new(g, kind, lambda, &x) else {
            continue;
        };
        if pair.residual > opts.accept_residual {
            continue;
        }
        if !found
            .iter()
            .any(|p| is_duplicate(p, &pair, opts.lambda_dedup, opts.angle_dedup))
        {
            found.push(pair);
        }
    }

    found.sort_by(|a, b| {
        a.lambda
            .partial_cmp(&b.lambda)
            .unwrap()
            .then_with(|| a.x.partial_cmp(&b.x).unwrap())
    });
    Ok(found)
}

/// Stratified random starts: mostly positive vectors, some sign-mixed ones,
/// every fourth start hugging a coordinate axis to give the sparse
/// eigenvectors a basin to fall into.
fn draw_start<T: Scalar>(rng: &mut ChaCha8Rng, n: usize, s: usize) -> Vec<T> {
    let unit = |rng: &mut ChaCha8Rng| T::cast(rng.gen::<f64>());
    match s % 4 {
        1 => (0..n)
            .map(|_| T::cast(2.0) * unit(rng) - T::one())
            .collect(),
        3 => {
            let axis = (s / 4) % n;
            let mut v: Vec<T> = (0..n)
                .map(|_| T::cast(0.05) * (T::cast(2.0) * unit(rng) - T::one()))
                .collect();
            v[axis] = T::one();
            v
        }
        _ => (0..n)
            .map(|_| T::cast(0.05) + T::cast(0.95) * unit(rng))
            .collect(),
    }
}

/// Damped Newton from one start. Returns the converged `(lambda, x)` or None.
fn polish<T: Scalar>(
    g: &WeightedHypergraph<T>,
    kind: TensorKind,
    x0: Vec<T>,
    max_steps: usize,
) -> Option<(T, Vec<T>)> {
    let n = g.n();
    let mut x = x0;
    let mut lambda = initial_lambda(g, kind, &x)?;
    let mut f = eval_f(g, kind, lambda, &x)?;
    let mut fnorm = inf_norm(&f);
    let tol = T::cast(NEWTON_F_TOLERANCE);

    for _ in 0..max_steps {
        if fnorm < tol {
            return Some((lambda, x));
        }
        let jac = jacobian(g, kind, lambda, &x);
        for v in &f {
            if !v.is_finite() {
                return None;
            }
        }
        let rhs: Vec<T> = f.iter().map(|&v| -v).collect();
        let delta = lu_solve(jac, rhs, n + 1)?;

        // backtracking line search on |F|_inf
        let mut t = T::one();
        let mut accepted = false;
        for _ in 0..30 {
            let xt: Vec<T> = (0..n).map(|i| x[i] + t * delta[i]).collect();
            let lt = lambda + t * delta[n];
            if let Some(ft) = eval_f(g, kind, lt, &xt) {
                let fn_new = inf_norm(&ft);
                if fn_new < (T::one() - T::cast(1e-4) * t) * fnorm {
                    x = xt;
                    lambda = lt;
                    f = ft;
                    fnorm = fn_new;
                    accepted = true;
                    break;
                }
            }
            t = t / T::cast(2.0);
        }
        if !accepted {
            return None;
        }
    }
    (fnorm < tol).then_some((lambda, x))
}

fn initial_lambda<T: Scalar>(g: &WeightedHypergraph<T>, kind: TensorKind, x: &[T]) -> Option<T> {
    let tx = apply(g, kind, x).ok()?;
    let km1 = (g.k() - 1) as i32;
    let mut num = T::zero();
    let mut den = T::zero();
    for i in 0..x.len() {
        let p = x[i].powi(km1);
        num = num + p * tx[i];
        den = den + p * p;
    }
    Some(if den > T::zero() { num / den } else { T::one() })
}

fn eval_f<T: Scalar>(
    g: &WeightedHypergraph<T>,
    kind: TensorKind,
    lambda: T,
    x: &[T],
) -> Option<Vec<T>> {
    let n = g.n();
    let k = g.k() as i32;
    let tx = apply(g, kind, x).ok()?;
    let mut f = Vec::with_capacity(n + 1);
    for i in 0..n {
        f.push(tx[i] - lambda * x[i].powi(k - 1));
    }
    let norm: T = x.iter().map(|&c| c.powi(k)).sum();
    f.push(norm - T::one());
    if f.iter().all(|v| v.is_finite()) {
        Some(f)
    } else {
        None
    }
}

/// Dense Jacobian of F, row major, dimension (n + 1)^2.
fn jacobian<T: Scalar>(g: &WeightedHypergraph<T>, kind: TensorKind, lambda: T, x: &[T]) -> Vec<T> {
    let n = g.n();
    let k = g.k();
    let dim = n + 1;
    let km1 = (k - 1) as i32;
    let mut jac = vec![T::zero(); dim * dim];

    // adjacency block: d(T x)_i / d x_j sums w(e) times the product over
    // e minus {i, j}, for every edge containing both
    let sign = match kind {
        TensorKind::Adjacency | TensorKind::SignlessLaplacian => T::one(),
        TensorKind::Laplacian => -T::one(),
        TensorKind::Degree => T::zero(),
    };
    if sign != T::zero() {
        for e in g.edges() {
            let vs = e.vertices();
            let w = sign * e.weight();
            for (a, &i) in vs.iter().enumerate() {
                for (b, &j) in vs.iter().enumerate() {
                    if a == b {
                        continue;
                    }
                    let mut prod = w;
                    for (c, &u) in vs.iter().enumerate() {
                        if c != a && c != b {
                            prod = prod * x[u];
                        }
                    }
                    jac[i * dim + j] = jac[i * dim + j] + prod;
                }
            }
        }
    }

    // degree block and the eigen term, both diagonal in x
    let stats = g.stats();
    let degree_scale = if kind == TensorKind::Adjacency {
        T::zero()
    } else {
        T::one()
    };
    for i in 0..n {
        let d = (degree_scale * stats.vertex_weights[i] - lambda)
            * T::from_count(k - 1)
            * x[i].powi(km1 - 1);
        jac[i * dim + i] = jac[i * dim + i] + d;
        jac[i * dim + n] = -x[i].powi(km1);
    }

    // normalization row
    for j in 0..n {
        jac[n * dim + j] = T::from_count(k) * x[j].powi(km1);
    }
    jac
}

fn inf_norm<T: Scalar>(v: &[T]) -> T {
    v.iter().fold(T::zero(), |m, &c| m.max(c.abs()))
}

/// Gaussian elimination with partial pivoting on a row major square matrix.
fn lu_solve<T: Scalar>(mut a: Vec<T>, mut b: Vec<T>, dim: usize) -> Option<Vec<T>> {
    for col in 0..dim {
        let mut pivot = col;
        let mut best = a[col * dim + col].abs();
        for row in col + 1..dim {
            let cand = a[row * dim + col].abs();
            if cand > best {
                best = cand;
                pivot = row;
            }
        }
        if !(best.is_finite() && best > T::zero()) {
            return None;
        }
        if pivot != col {
            for j in 0..dim {
                a.swap(col * dim + j, pivot * dim + j);
            }
            b.swap(col, pivot);
        }
        let diag = a[col * dim + col];
        for row in col + 1..dim {
            let factor = a[row * dim + col] / diag;
            if factor != T::zero() {
                for j in col..dim {
                    a[row * dim + j] = a[row * dim + j] - factor * a[col * dim + j];
                }
                b[row] = b[row] - factor * b[col];
            }
        }
    }
    let mut out = vec![T::zero(); dim];
    for row in (0..dim).rev() {
        let mut acc = b[row];
        for j in row + 1..dim {
            acc = acc - a[row * dim + j] * out[j];
        }
        out[row] = acc / a[row * dim + row];
    }
    if out.iter().all(|c| c.is_finite()) {
        Some(out)
    } else {
        None
    }
}

/// Flips the sign so the largest magnitude component is positive. For any k
/// a sign flip maps eigenpairs to eigenpairs with the same eigenvalue.
fn canonical_sign<T: Scalar>(mut x: Vec<T>) -> Vec<T> {
    let mut arg = 0;
    let mut best = T::zero();
    for (i, &c) in x.iter().enumerate() {
        if c.abs() > best {
            best = c.abs();
            arg = i;
        }
    }
    if x[arg] < T::zero() {
        for c in &mut x {
            *c = -*c;
        }
    }
    x
}

fn is_duplicate<T: Scalar>(
    a: &Eigenpair<T>,
    b: &Eigenpair<T>,
    lambda_tol: T,
    angle_tol: T,
) -> bool {
    if (a.lambda - b.lambda).abs() > lambda_tol {
        return false;
    }
    let dot: T = a.x.iter().zip(&b.x).map(|(&p, &q)| p * q).sum();
    let na: T = a.x.iter().map(|&p| p * p).sum::<T>().sqrt();
    let nb: T = b.x.iter().map(|&q| q * q).sum::<T>().sqrt();
    let cos = (dot / (na * nb)).min(T::one()).max(-T::one());
    cos.acos() <= angle_tol
}
