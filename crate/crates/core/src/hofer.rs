//! Moment-map maximization on coadjoint orbits: positive Hofer norms, Hofer
//! lengths of circle actions, and the normalization of generating
//! Hamiltonians.
//!
//! All lengths are in lattice units: long roots have squared length 2 and
//! loops are parametrized in turns.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::root_system::{sqrt_f64, Coweight, RootSystem};

/// A squared length stored exactly, with its square root for display.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NormReport {
    #[serde(serialize_with = "crate::report::ser_fraction")]
    pub value_squared: BigRational,
    pub value_float: f64,
}

impl NormReport {
    pub fn from_squared(value_squared: BigRational) -> Self {
        assert!(!value_squared.is_negative(), "squared norm must be nonnegative");
        let value_float = sqrt_f64(&value_squared);
        Self {
            value_squared,
            value_float,
        }
    }
}

/// Positive Hofer norm of `η` relative to the orbit through `ξ`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PositiveNorm {
    /// `max_{w ∈ W·ξ} ⟨w, η⟩`, which is `‖ξ‖·‖η‖⁺`.
    #[serde(serialize_with = "crate::report::ser_fraction")]
    pub maximum: BigRational,
    /// `maximum² / ⟨ξ, ξ⟩`.
    pub norm: NormReport,
}

/// Maximum over the Weyl orbit of `ξ` of `⟨·, η⟩`, as an exact rational.
///
/// `H_η(p) = ⟨p, η⟩` is linear and the projection of the coadjoint orbit to
/// the Cartan subalgebra is the convex hull of the Weyl orbit, so the
/// maximum over the orbit is attained at a Weyl-orbit point.
pub fn orbit_maximum(system: &RootSystem, eta: &Coweight, xi: &Coweight) -> Result<BigRational> {
    system.inner(eta, xi)?; // dimension check
    let mut best = i128::MIN;
    system.for_each_in_orbit(xi, |w| best = best.max(system.inner_numer(w, eta.coords())))?;
    Ok(BigRational::new(
        BigInt::from(best),
        BigInt::from(system.gram_denominator()),
    ))
}

/// `‖η‖⁺ = max_{O_ξ} H_η` for the orbit through `ξ/‖ξ‖`.
pub fn positive_norm(system: &RootSystem, eta: &Coweight, xi: &Coweight) -> Result<PositiveNorm> {
    if xi.is_zero() {
        return Err(Error::DegenerateOrbit);
    }
    let maximum = orbit_maximum(system, eta, xi)?;
    let xx = system.inner(xi, xi)?;
    let norm = NormReport::from_squared(&maximum * &maximum / xx);
    Ok(PositiveNorm { maximum, norm })
}

/// Exact test of `(‖η‖⁺)² ≤ ‖η‖²`, i.e. `m² ≤ ⟨ξ,ξ⟩⟨η,η⟩`.
///
/// Cauchy–Schwarz guarantees `true`; `false` signals a bug.
pub fn check_norm_inequality(system: &RootSystem, eta: &Coweight, xi: &Coweight) -> Result<bool> {
    let pn = positive_norm(system, eta, xi)?;
    let rhs = system.inner(xi, xi)? * system.inner(eta, eta)?;
    Ok(&pn.maximum * &pn.maximum <= rhs)
}

/// Positive Hofer length of the loop `θ ↦ exp(2πθξ)` acting on `O_ξ`.
///
/// The circle action is autonomous, so `L⁺` is the maximum of the
/// normalized generating Hamiltonian, which is `‖ξ‖`.
pub fn hofer_length_circle(system: &RootSystem, xi: &Coweight) -> Result<NormReport> {
    if xi.is_zero() {
        return Err(Error::DegenerateOrbit);
    }
    Ok(NormReport::from_squared(system.inner(xi, xi)?))
}

/// `max_b L⁺(h(b))` over a sampled family of loops.
pub fn max_length_measure(lengths: &[f64]) -> Result<f64> {
    lengths.iter().copied().reduce(f64::max).ok_or(Error::EmptyFamily)
}

/// Sum of the orbit, which must vanish since the Lie algebra has no centre.
pub fn orbit_sum(system: &RootSystem, xi: &Coweight) -> Result<Coweight> {
    let orbit = system.weyl_orbit(xi)?;
    let mut sum = vec![0i64; system.rank()];
    for w in &orbit {
        for (s, c) in sum.iter_mut().zip(w.coords()) {
            *s += c;
        }
    }
    Ok(Coweight::new(sum))
}

/// Symmetric product quadrature on the unit 2-sphere: midpoint nodes in
/// `z = cos(polar)` (uniform area measure) and uniform azimuths.
#[derive(Debug, Clone)]
pub struct SphereGrid {
    n_z: usize,
    n_phi: usize,
}

impl Default for SphereGrid {
    fn default() -> Self {
        Self { n_z: 200, n_phi: 400 }
    }
}

impl SphereGrid {
    pub fn new(n_z: usize, n_phi: usize) -> Self {
        assert!(n_z > 0 && n_phi > 0);
        Self { n_z, n_phi }
    }

    fn nodes(&self) -> impl Iterator<Item = [f64; 3]> + '_ {
        let nz = self.n_z;
        let nphi = self.n_phi;
        (0..nz).flat_map(move |i| {
            let z = -1.0 + (2 * i + 1) as f64 / nz as f64;
            let r = (1.0 - z * z).max(0.0).sqrt();
            (0..nphi).map(move |j| {
                let phi = 2.0 * PI * j as f64 / nphi as f64;
                [r * phi.cos(), r * phi.sin(), z]
            })
        })
    }

    fn weight(&self) -> f64 {
        4.0 * PI / (self.n_z * self.n_phi) as f64
    }

    pub fn integrate(&self, f: impl Fn([f64; 3]) -> f64) -> f64 {
        // pair antipodal-in-z rows so that odd integrands cancel term by term
        let w = self.weight();
        let nodes: Vec<[f64; 3]> = self.nodes().collect();
        let mut total = 0.0;
        let half = self.n_z / 2;
        for i in 0..half {
            let lo = &nodes[i * self.n_phi..(i + 1) * self.n_phi];
            let hi = &nodes[(self.n_z - 1 - i) * self.n_phi..(self.n_z - i) * self.n_phi];
            let row: f64 = lo.iter().zip(hi).map(|(&a, &b)| f(a) + f(b)).sum();
            total += row;
        }
        if self.n_z % 2 == 1 {
            let mid = &nodes[half * self.n_phi..(half + 1) * self.n_phi];
            total += mid.iter().map(|&p| f(p)).sum::<f64>();
        }
        total * w
    }

    pub fn max(&self, f: impl Fn([f64; 3]) -> f64) -> f64 {
        self.nodes().map(f).fold(f64::NEG_INFINITY, f64::max)
    }
}

fn height(eta: [f64; 3]) -> impl Fn([f64; 3]) -> f64 {
    move |x| x[0] * eta[0] + x[1] * eta[1] + x[2] * eta[2]
}

/// `∫_{S²} ⟨x, η⟩ dA` on the SU(2) coadjoint orbit; vanishes for every `η`.
pub fn normalization_integral_s2(eta: [f64; 3]) -> f64 {
    SphereGrid::default().integrate(height(eta))
}

/// Grid maximum of `⟨x, η⟩` on the unit sphere (≈ `|η|`).
pub fn s2_grid_max(eta: [f64; 3]) -> f64 {
    SphereGrid::default().max(height(eta))
}
