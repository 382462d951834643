//! Weights of a circle subgroup at the moment-map maximum of its coadjoint
//! orbit, the virtual index `Σ 2(|k_i| - 1)`, and the Riemannian index of the
//! corresponding geodesic loop obtained by counting conjugate points.
//!
//! Loops are parametrized in turns: the circle subgroup is
//! `θ ↦ exp(2πθ ξ)`, `θ ∈ [0, 1]`, and every root acts with the integer
//! frequency `⟨α, ξ⟩`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::root_system::{pair, Coweight, RootSystem};

/// A circle subgroup `θ ↦ exp(2πθ ξ)` of the group with root system `system`.
#[derive(Debug, Clone)]
pub struct CircleSubgroup<'a> {
    system: &'a RootSystem,
    xi: Coweight,
    regular: bool,
}

impl<'a> CircleSubgroup<'a> {
    pub fn new(system: &'a RootSystem, xi: Coweight) -> Result<Self> {
        if xi.rank() != system.rank() {
            return Err(Error::Dimension {
                expected: system.rank(),
                got: xi.rank(),
            });
        }
        if xi.is_zero() {
            return Err(Error::DegenerateSubgroup);
        }
        let regular = system.is_regular(&xi);
        Ok(Self { system, xi, regular })
    }

    pub fn system(&self) -> &'a RootSystem {
        self.system
    }

    pub fn xi(&self) -> &Coweight {
        &self.xi
    }

    /// The centralizer of the subgroup is the maximal torus.
    pub fn is_regular(&self) -> bool {
        self.regular
    }

    /// Nonzero absolute pairings `|⟨α, ξ⟩|` over the positive roots.
    fn frequencies(&self) -> impl Iterator<Item = i64> + '_ {
        self.system
            .positive_roots()
            .iter()
            .map(|r| pair(r, self.xi.coords()).abs())
            .filter(|&v| v != 0)
    }
}

/// Weights of the linearized circle action on the tangent space at the
/// maximum, one per complex dimension. All entries are ≤ -1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct WeightMultiset(Vec<i64>);

impl WeightMultiset {
    /// Validates that every weight is negative and sorts in descending order.
    pub fn new(mut weights: Vec<i64>) -> Result<Self> {
        if weights.iter().any(|&k| k >= 0) {
            return Err(Error::InvalidWeights(weights));
        }
        weights.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self(weights))
    }

    pub fn weights(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Both index computations for one circle subgroup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexReport {
    pub xi: Coweight,
    pub weights: WeightMultiset,
    pub regular: bool,
    pub virtual_index: u64,
    pub riemannian_index: u64,
    pub agree: bool,
}

/// One weight per root with negative pairing.
///
/// At the maximum of `H_ξ` the tangent space of the orbit is spanned by the
/// root spaces on which `ξ` acts nontrivially, and with the sign convention
/// `ω(X_H, ·) = -dH` all those weights are negative. Roots pairing to zero
/// are not tangent directions and are omitted.
pub fn weights_at_max(gamma: &CircleSubgroup<'_>) -> WeightMultiset {
    let xi = gamma.xi.coords();
    let weights: Vec<i64> = gamma
        .system
        .positive_roots()
        .iter()
        .flat_map(|r| {
            let p = pair(r, xi);
            // the root and its negative; exactly one pairs negatively
            [p, -p]
        })
        .filter(|&p| p < 0)
        .collect();
    WeightMultiset::new(weights).expect("weights filtered to be negative")
}

/// `Σ 2(|k_i| - 1)` over the weights.
pub fn virtual_index(w: &WeightMultiset) -> Result<u64> {
    if w.0.iter().any(|&k| k >= 0) {
        return Err(Error::InvalidWeights(w.0.clone()));
    }
    Ok(w.0.iter().map(|&k| 2 * (k.unsigned_abs() - 1)).sum())
}

/// Virtual index computed directly from raw weights, validating them first.
pub fn virtual_index_of(weights: &[i64]) -> Result<u64> {
    virtual_index(&WeightMultiset::new(weights.to_vec())?)
}

/// Morse index of the geodesic loop `exp(2πθξ)` in the group with its
/// bi-invariant metric.
///
/// Along the geodesic, the Jacobi operator on the root space pair of `α`
/// has frequency `v = |⟨α, ξ⟩|`; the interior conjugate times are the
/// `t ∈ (0, 1)` with `v t` a positive integer, each of multiplicity 2.
pub fn riemannian_index_conjugate(gamma: &CircleSubgroup<'_>) -> u64 {
    gamma
        .frequencies()
        .map(|v| {
            let interior = (1..=v).filter(|&j| j < v).count() as u64;
            2 * interior
        })
        .sum()
}

pub fn index_equality_report(gamma: &CircleSubgroup<'_>) -> Result<IndexReport> {
    let weights = weights_at_max(gamma);
    let virtual_index = virtual_index(&weights)?;
    let riemannian_index = riemannian_index_conjugate(gamma);
    Ok(IndexReport {
        xi: gamma.xi.clone(),
        weights,
        regular: gamma.regular,
        virtual_index,
        riemannian_index,
        agree: virtual_index == riemannian_index,
    })
}
