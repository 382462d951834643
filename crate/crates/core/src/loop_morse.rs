//! Morse–Bott data of the energy functional on the based loop group.
//!
//! The critical points of the energy on `ΩG` are the closed one-parameter
//! subgroups `exp(2πθξ)`, `ξ` in the coroot lattice. Their critical
//! manifolds are the conjugacy orbits `G/Z(ξ)`, one per dominant `ξ`, and
//! the Morse–Bott index is the Bott count `Σ_{⟨α,ξ⟩>0} 2(⟨α,ξ⟩ - 1)`.
//! All indices are even, so assembling the strata gives the Poincaré series
//! of `ΩG` with no cancellation.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::root_system::{pair, Coweight, RootSystem};

/// One critical manifold of the energy functional.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriticalStratum {
    pub xi: Coweight,
    pub bott_index: u64,
    pub stratum_poly: Polynomial,
    pub unstable_dim: u64,
    /// `ξ` lies in the coroot lattice, so the subgroup closes up in the
    /// simply connected group and the stratum lies in `ΩG`.
    pub closed: bool,
}

/// Power series with integer coefficients in degrees `0..=cutoff`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TruncatedSeries {
    pub cutoff: usize,
    pub coeffs: Vec<i64>,
}

impl TruncatedSeries {
    pub fn zero(cutoff: usize) -> Self {
        Self {
            cutoff,
            coeffs: vec![0; cutoff + 1],
        }
    }

    /// Add `t^shift · p`, dropping everything above the cutoff.
    pub fn add_shifted(&mut self, p: &Polynomial, shift: usize) {
        for (k, &c) in p.coeffs().iter().enumerate() {
            if let Some(slot) = self.coeffs.get_mut(k + shift) {
                *slot += c;
            }
        }
    }

    pub fn mul_truncated(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let cutoff = self.cutoff.min(other.cutoff);
        let mut out = vec![0; cutoff + 1];
        for (i, &a) in self.coeffs.iter().enumerate().take(cutoff + 1) {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate().take(cutoff + 1 - i) {
                out[i + j] += a * b;
            }
        }
        TruncatedSeries { cutoff, coeffs: out }
    }

    pub fn odd_coefficients_vanish(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(|&c| c == 0)
    }

    pub fn nonnegative(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }
}

fn require_dominant(system: &RootSystem, xi: &Coweight) -> Result<()> {
    if xi.rank() != system.rank() {
        return Err(Error::Dimension {
            expected: system.rank(),
            got: xi.rank(),
        });
    }
    if !xi.is_dominant() {
        return Err(Error::NotDominant(xi.coords().to_vec()));
    }
    Ok(())
}

/// Morse–Bott index of the stratum through `exp(2πθξ)`.
pub fn bott_index(system: &RootSystem, xi: &Coweight) -> Result<u64> {
    require_dominant(system, xi)?;
    Ok(system
        .positive_roots()
        .iter()
        .map(|r| pair(r, xi.coords()))
        .filter(|&p| p > 0)
        .map(|p| 2 * (p as u64 - 1))
        .sum())
}

/// Poincaré polynomial of the adjoint orbit `G/Z(ξ)`, as `W(t) / W_ξ(t)`.
pub fn stratum_poincare(system: &RootSystem, xi: &Coweight) -> Result<Polynomial> {
    require_dominant(system, xi)?;
    let all: Vec<usize> = (0..system.rank()).collect();
    let walls: Vec<usize> = all.iter().copied().filter(|&i| xi.coords()[i] == 0).collect();
    let full = system.weyl_poincare(&all)?;
    let stab = system.weyl_poincare(&walls)?;
    let (quot, rem) = full.div_rem(&stab);
    assert!(rem.is_zero(), "W(t)/W_xi(t) must divide exactly");
    Ok(quot)
}

/// All dominant integral coweights with Bott index at most `cutoff`.
///
/// Each simple root contributes `2(c_i - 1)` on its own, so any stratum of
/// index `≤ D` has `c_i ≤ D/2 + 1`; the box `[0, D/2 + 1]^rank` is complete.
pub fn enumerate_critical_strata(system: &RootSystem, cutoff: usize) -> Result<Vec<CriticalStratum>> {
    if !cutoff.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!("cutoff {cutoff} must be even")));
    }
    let n = system.rank();
    let side = cutoff as i64 / 2 + 2;
    let total = (side as usize).pow(n as u32);
    let mut out = Vec::new();
    for mut idx in 0..total {
        let mut v = vec![0i64; n];
        for c in v.iter_mut() {
            *c = (idx % side as usize) as i64;
            idx /= side as usize;
        }
        let xi = Coweight::new(v);
        let index = bott_index(system, &xi)?;
        if index as usize > cutoff {
            continue;
        }
        out.push(CriticalStratum {
            stratum_poly: stratum_poincare(system, &xi)?,
            bott_index: index,
            unstable_dim: index,
            closed: system.in_coroot_lattice(&xi)?,
            xi,
        });
    }
    out.sort_by(|a, b| a.bott_index.cmp(&b.bott_index).then_with(|| a.xi.cmp(&b.xi)));
    Ok(out)
}

/// `Σ_strata t^{index} P_stratum(t)` over the strata of `ΩG`, truncated at `cutoff`.
pub fn omega_g_series(system: &RootSystem, cutoff: usize) -> Result<TruncatedSeries> {
    let mut series = TruncatedSeries::zero(cutoff);
    for s in enumerate_critical_strata(system, cutoff)? {
        if s.closed {
            series.add_shifted(&s.stratum_poly, s.bott_index as usize);
        }
    }
    Ok(series)
}

/// `Π_i 1/(1 - t^{2 m_i})` over the exponents `m_i`, truncated at `cutoff`.
pub fn transgression_series(exponents: &[u32], cutoff: usize) -> TruncatedSeries {
    let mut acc = TruncatedSeries::zero(cutoff);
    acc.coeffs[0] = 1;
    for &m in exponents {
        let step = 2 * m as usize;
        let mut geo = TruncatedSeries::zero(cutoff);
        for k in (0..=cutoff).step_by(step) {
            geo.coeffs[k] = 1;
        }
        acc = acc.mul_truncated(&geo);
    }
    acc
}

/// Compare the Morse–Bott assembly with the transgression series.
pub fn perfectness_check(system: &RootSystem, cutoff: usize) -> Result<(TruncatedSeries, TruncatedSeries)> {
    let morse = omega_g_series(system, cutoff)?;
    let oracle = transgression_series(&system.exponents(), cutoff);
    Ok((morse, oracle))
}
