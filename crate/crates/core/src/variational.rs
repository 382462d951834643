//! Discretized energy and positive Hofer length on based loops in SU(2), and
//! finite-difference Hessians at the closed one-parameter subgroups.
//!
//! A discrete loop is the broken geodesic through `q_0, …, q_N` with
//! `q_0 = q_N = 1`, each segment traversed in time `1/N`. Distances are in
//! lattice units: the once-around great circle `exp(2πθu)` corresponds to
//! the coroot `ξ = [2]` of A1 and has energy `⟨ξ, ξ⟩ = 2`.

use std::f64::consts::PI;

use nalgebra::{DMatrix, DVector};
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::su2::Su2;

/// Lattice units per radian of arc on the unit 3-sphere.
pub const LATTICE_SCALE: f64 = std::f64::consts::SQRT_2 / (2.0 * PI);

/// Default finite-difference step.
pub const DEFAULT_STEP: f64 = 1e-4;

/// Default relative width of the zero band.
pub const DEFAULT_TOL: f64 = 1e-6;

const UNIT_TOL: f64 = 1e-12;

/// Geodesic distance in lattice units.
pub fn lattice_distance(a: &Su2, b: &Su2) -> f64 {
    LATTICE_SCALE * a.distance(b)
}

#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteLoop {
    points: Vec<Su2>,
}

impl DiscreteLoop {
    /// Validates unit norms and the base point at both ends.
    pub fn new(points: Vec<Su2>) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::InvalidLoop("need at least two points".into()));
        }
        for (i, p) in points.iter().enumerate() {
            if (p.norm() - 1.0).abs() > UNIT_TOL {
                return Err(Error::InvalidLoop(format!(
                    "point {i} has norm {} (not a unit quaternion)",
                    p.norm()
                )));
            }
        }
        for &i in &[0, points.len() - 1] {
            let d = points[i].distance(&Su2::IDENTITY);
            if d > UNIT_TOL {
                return Err(Error::InvalidLoop(format!("endpoint {i} is not the identity")));
            }
        }
        Ok(Self { points })
    }

    /// The loop sitting at the identity.
    pub fn constant(n: usize) -> Self {
        Self {
            points: vec![Su2::IDENTITY; n + 1],
        }
    }

    pub fn points(&self) -> &[Su2] {
        &self.points
    }

    /// Number of segments `N`.
    pub fn resolution(&self) -> usize {
        self.points.len() - 1
    }

    /// Conjugate every point by `g`; the base point is preserved.
    pub fn conjugated(&self, g: &Su2) -> Self {
        let gi = g.conj();
        Self {
            points: self.points.iter().map(|&p| *g * p * gi).collect(),
        }
    }

    /// Random based loop with the interior points drawn independently.
    pub fn random<R: Rng>(n: usize, rng: &mut R) -> Self {
        let mut points = vec![Su2::IDENTITY; n + 1];
        for p in points.iter_mut().take(n).skip(1) {
            *p = loop {
                let v: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-1.0..1.0));
                let q = Su2 { q: v };
                let norm = q.norm();
                if norm > 1e-3 && norm <= 1.0 {
                    break q.normalize();
                }
            };
        }
        Self { points }
    }
}

/// The closed one-parameter subgroup `θ ↦ exp(2πθ m u)` about the first
/// imaginary unit, sampled at `N + 1` points.
pub fn geodesic_loop(m: u32, n: usize) -> Result<DiscreteLoop> {
    geodesic_loop_about(m, n, [1.0, 0.0, 0.0])
}

/// As [`geodesic_loop`] about an arbitrary unit axis.
pub fn geodesic_loop_about(m: u32, n: usize, axis: [f64; 3]) -> Result<DiscreteLoop> {
    if m < 1 {
        return Err(Error::InvalidArgument("winding m must be at least 1".into()));
    }
    if n < 16 {
        return Err(Error::InvalidArgument(format!("resolution N = {n} is below 16")));
    }
    let norm = (axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]).sqrt();
    let u = axis.map(|x| x / norm);
    let mut points: Vec<Su2> = (0..=n)
        .map(|i| {
            let t = 2.0 * PI * m as f64 * i as f64 / n as f64;
            Su2::exp(u.map(|x| x * t))
        })
        .collect();
    points[0] = Su2::IDENTITY;
    points[n] = Su2::IDENTITY;
    DiscreteLoop::new(points)
}

/// `N Σ d(q_i, q_{i+1})²`.
pub fn discrete_energy(l: &DiscreteLoop) -> f64 {
    let n = l.resolution() as f64;
    n * l
        .points
        .windows(2)
        .map(|w| lattice_distance(&w[0], &w[1]).powi(2))
        .sum::<f64>()
}

/// `Σ d(q_i, q_{i+1})`. For loops in SU(2) acting on the unit coadjoint orbit
/// the maximum of the normalized Hamiltonian at each time equals the speed,
/// so the positive Hofer length is the Riemannian length.
pub fn discrete_lplus(l: &DiscreteLoop) -> f64 {
    l.points.windows(2).map(|w| lattice_distance(&w[0], &w[1])).sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Functional {
    Energy,
    Lplus,
}

impl std::str::FromStr for Functional {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "energy" => Ok(Functional::Energy),
            "lplus" => Ok(Functional::Lplus),
            _ => Err(Error::InvalidArgument(format!("unknown functional {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralReport {
    pub functional: Functional,
    pub m: u32,
    pub n: usize,
    pub step: f64,
    /// Dimension of the matrix whose spectrum was classified.
    pub dimension: usize,
    pub negative_count: usize,
    pub zero_count: usize,
    pub min_eigenvalue: f64,
    pub tolerance: f64,
}

/// Perturbed loop: interior point `i` becomes `q_i exp(x_i)`.
struct Perturbed<'a> {
    base: &'a [Su2],
    n: usize,
}

impl<'a> Perturbed<'a> {
    fn point(&self, i: usize, x: &[f64]) -> Su2 {
        if i == 0 || i == self.n {
            return self.base[i];
        }
        let o = 3 * (i - 1);
        self.base[i] * Su2::exp([x[o], x[o + 1], x[o + 2]])
    }

    /// Sum of `g(d_j)` over edges `j ∈ [first, last]`, edge `j` joining points `j` and `j + 1`.
    fn edge_sum(&self, x: &[f64], first: usize, last: usize, g: &impl Fn(f64) -> f64) -> f64 {
        (first..=last.min(self.n - 1))
            .map(|j| g(lattice_distance(&self.point(j, x), &self.point(j + 1, x))))
            .sum()
    }
}

fn edge_weight(functional: Functional, n: usize) -> impl Fn(f64) -> f64 {
    let nf = n as f64;
    move |d| match functional {
        Functional::Energy => nf * d * d,
        Functional::Lplus => d,
    }
}

/// Central second-difference Hessian of a functional in exponential normal
/// coordinates at the interior points. Only entries coupling the same or
/// neighbouring points are nonzero, since the functional is a sum over edges.
pub fn finite_difference_hessian(l: &DiscreteLoop, functional: Functional, h: f64) -> DMatrix<f64> {
    let n = l.resolution();
    let dim = 3 * (n - 1);
    let g = edge_weight(functional, n);
    let pert = Perturbed { base: &l.points, n };
    let mut hess = DMatrix::zeros(dim, dim);
    let mut x = vec![0.0; dim];
    for a in 0..dim {
        let pa = a / 3 + 1;
        let b_end = (3 * (pa + 1)).min(dim);
        for b in a..b_end {
            let pb = b / 3 + 1;
            let (first, last) = (pa - 1, pb);
            let mut f = |da: f64, db: f64| {
                x[a] += da;
                x[b] += db;
                let v = pert.edge_sum(&x, first, last, &g);
                x[a] -= da;
                x[b] -= db;
                v
            };
            let val = if a == b {
                (f(h, 0.0) - 2.0 * f(0.0, 0.0) + f(-h, 0.0)) / (h * h)
            } else {
                (f(h, h) - f(h, -h) - f(-h, h) + f(-h, -h)) / (4.0 * h * h)
            };
            hess[(a, b)] = val;
            hess[(b, a)] = val;
        }
    }
    hess
}

fn symmetric_eigen(m: DMatrix<f64>) -> Result<(DVector<f64>, DMatrix<f64>)> {
    let dim = m.nrows();
    let sym = (&m + m.transpose()) * 0.5;
    let eig = sym
        .try_symmetric_eigen(f64::EPSILON, 100 * dim.max(10))
        .ok_or_else(|| {
            Error::NumericalFailure(format!(
                "symmetric eigensolver did not converge on a {dim}x{dim} matrix"
            ))
        })?;
    Ok((eig.eigenvalues, eig.eigenvectors))
}

struct Classified {
    negative: Vec<usize>,
    zero: usize,
    min: f64,
}

fn classify(values: &DVector<f64>, tol: f64) -> Classified {
    let scale = values.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
    let band = tol * scale;
    let negative = (0..values.len()).filter(|&i| values[i] < -band).collect();
    let zero = values.iter().filter(|v| v.abs() <= band).count();
    let min = values.iter().copied().fold(f64::INFINITY, f64::min);
    Classified { negative, zero, min }
}

/// Energy Hessian at a loop together with its negative eigenvectors.
pub fn energy_unstable_directions(l: &DiscreteLoop, h: f64, tol: f64) -> Result<(DVector<f64>, Vec<DVector<f64>>)> {
    let (values, vectors) = symmetric_eigen(finite_difference_hessian(l, Functional::Energy, h))?;
    let c = classify(&values, tol);
    let dirs = c.negative.iter().map(|&i| vectors.column(i).into_owned()).collect();
    Ok((values, dirs))
}

fn perturbed_lplus(l: &DiscreteLoop, x: &[f64]) -> f64 {
    let n = l.resolution();
    let pert = Perturbed { base: &l.points, n };
    pert.edge_sum(x, 0, n - 1, &|d| d)
}

/// Second differences of `L⁺` on the span of the given directions.
pub fn restricted_lplus_hessian(l: &DiscreteLoop, dirs: &[DVector<f64>], h: f64) -> DMatrix<f64> {
    let k = dirs.len();
    let dim = 3 * (l.resolution() - 1);
    let at = |coef: &[(f64, usize)]| {
        let mut x = vec![0.0; dim];
        for &(c, i) in coef {
            for (xj, dj) in x.iter_mut().zip(dirs[i].iter()) {
                *xj += c * dj;
            }
        }
        perturbed_lplus(l, &x)
    };
    let l0 = at(&[]);
    let mut out = DMatrix::zeros(k, k);
    for i in 0..k {
        out[(i, i)] = (at(&[(h, i)]) - 2.0 * l0 + at(&[(-h, i)])) / (h * h);
        for j in i + 1..k {
            let v = (at(&[(h, i), (h, j)]) - at(&[(h, i), (-h, j)]) - at(&[(-h, i), (h, j)]) + at(&[(-h, i), (-h, j)]))
                / (4.0 * h * h);
            out[(i, j)] = v;
            out[(j, i)] = v;
        }
    }
    out
}

fn check_hessian_args(n: usize, h: f64) -> Result<()> {
    if n < 32 {
        return Err(Error::InvalidArgument(format!("resolution N = {n} is below 32")));
    }
    if !(1e-5..=1e-2).contains(&h) {
        return Err(Error::InvalidArgument(format!("step {h} outside [1e-5, 1e-2]")));
    }
    Ok(())
}

/// Spectrum of a functional's Hessian at an arbitrary based loop.
///
/// For `Energy` the full `3(N-1)`-dimensional Hessian is classified. For
/// `Lplus` only the restriction to the energy-unstable eigenspace is
/// classified; `L⁺` is invariant under reparametrization, so its full
/// Hessian is degenerate in every tangential direction.
pub fn hessian_spectrum_at(
    l: &DiscreteLoop,
    functional: Functional,
    m: u32,
    h: f64,
    tol: f64,
) -> Result<SpectralReport> {
    let n = l.resolution();
    check_hessian_args(n, h)?;
    let (dimension, classified) = match functional {
        Functional::Energy => {
            let (values, _) = symmetric_eigen(finite_difference_hessian(l, Functional::Energy, h))?;
            (values.len(), classify(&values, tol))
        }
        Functional::Lplus => {
            let (_, dirs) = energy_unstable_directions(l, h, tol)?;
            let k = dirs.len();
            if k == 0 {
                (
                    0,
                    Classified {
                        negative: vec![],
                        zero: 0,
                        min: 0.0,
                    },
                )
            } else {
                let (values, _) = symmetric_eigen(restricted_lplus_hessian(l, &dirs, h))?;
                (k, classify(&values, tol))
            }
        }
    };
    Ok(SpectralReport {
        functional,
        m,
        n,
        step: h,
        dimension,
        negative_count: classified.negative.len(),
        zero_count: classified.zero,
        min_eigenvalue: classified.min,
        tolerance: tol,
    })
}

/// Spectrum at the geodesic loop of winding `m`.
pub fn hessian_spectrum(functional: Functional, m: u32, n: usize, h: f64, tol: f64) -> Result<SpectralReport> {
    check_hessian_args(n, h)?;
    let l = geodesic_loop(m, n)?;
    hessian_spectrum_at(&l, functional, m, h, tol)
}

/// Second differences of `L⁺` along each energy-unstable eigendirection
/// separately, at the geodesic of winding `m`.
pub fn lplus_directional_second_differences(m: u32, n: usize, h: f64, tol: f64) -> Result<Vec<f64>> {
    check_hessian_args(n, h)?;
    let l = geodesic_loop(m, n)?;
    let (_, dirs) = energy_unstable_directions(&l, h, tol)?;
    let k = restricted_lplus_hessian(&l, &dirs, h);
    Ok((0..dirs.len()).map(|i| k[(i, i)]).collect())
}

/// `L⁺` over a two-parameter family through the geodesic of winding `m`,
/// sweeping the span of the first two energy-unstable directions out to
/// `radius`. Returns `(|b|, L⁺(h(b)))` pairs; `b = 0` is the geodesic.
pub fn unstable_family_lengths(m: u32, n: usize, radius: f64, rings: usize, spokes: usize) -> Result<Vec<(f64, f64)>> {
    let l = geodesic_loop(m, n)?;
    let (_, dirs) = energy_unstable_directions(&l, DEFAULT_STEP, DEFAULT_TOL)?;
    if dirs.len() < 2 {
        return Err(Error::NumericalFailure(format!(
            "expected at least two unstable directions, found {}",
            dirs.len()
        )));
    }
    let mut out = vec![(0.0, discrete_lplus(&l))];
    for r in 1..=rings {
        let rho = radius * r as f64 / rings as f64;
        for s in 0..spokes {
            let phi = 2.0 * PI * s as f64 / spokes as f64;
            let x: Vec<f64> = dirs[0]
                .iter()
                .zip(dirs[1].iter())
                .map(|(a, b)| rho * (phi.cos() * a + phi.sin() * b))
                .collect();
            out.push((rho, perturbed_lplus(&l, &x)));
        }
    }
    Ok(out)
}
