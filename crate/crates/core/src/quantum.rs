//! Small quantum homology of CP¹ over the Novikov ring, and the leading-term
//! structure `Ψ = ±[pt]·e^{L⁺} + (lower-energy corrections)`.
//!
//! An element is a finite sum of terms `c · B · ε^s` with `c` rational,
//! `B ∈ {FUND, PT}` and a real energy exponent `s` (lattice units). The
//! product table is `FUND` = unit, `PT * PT = FUND · ε^{area}`. Infinite
//! sums are allowed toward `s → -∞`, so elements dominated by a single
//! term can be inverted by a geometric series.

use std::cmp::Ordering;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Two energy exponents closer than this are treated as equal when merging.
pub const EXPONENT_TOL: f64 = 1e-12;

/// Area of the line class on the unit SU(2) coadjoint orbit in lattice units:
/// the generating Hamiltonian of `ξ = [1]` ranges over `[-1/√2, 1/√2]` and
/// the action rotates the sphere once per turn.
pub const DEFAULT_AREA: f64 = std::f64::consts::SQRT_2;

fn exp_eq(a: f64, b: f64) -> bool {
    (a - b).abs() <= EXPONENT_TOL * a.abs().max(b.abs()).max(1.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Basis {
    #[serde(rename = "FUND")]
    Fund,
    #[serde(rename = "PT")]
    Pt,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::Fund => "FUND",
            Basis::Pt => "PT",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Term {
    #[serde(serialize_with = "crate::report::ser_fraction")]
    pub coeff: BigRational,
    pub basis: Basis,
    #[serde(serialize_with = "crate::report::ser_f64")]
    pub exponent: f64,
}

impl Term {
    pub fn new(coeff: BigRational, basis: Basis, exponent: f64) -> Self {
        Self { coeff, basis, exponent }
    }

    pub fn int(coeff: i64, basis: Basis, exponent: f64) -> Self {
        Self::new(BigRational::from_integer(coeff.into()), basis, exponent)
    }
}

/// Finite sum of terms, kept merged and sorted by `(basis, exponent)`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct QuantumElement {
    terms: Vec<Term>,
}

impl Serialize for QuantumElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.terms.serialize(s)
    }
}

impl QuantumElement {
    pub fn new(terms: Vec<Term>) -> Self {
        let mut terms = terms;
        terms.sort_by(|a, b| {
            a.basis
                .cmp(&b.basis)
                .then(a.exponent.partial_cmp(&b.exponent).unwrap_or(Ordering::Equal))
        });
        let mut merged: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match merged.last_mut() {
                Some(last) if last.basis == t.basis && exp_eq(last.exponent, t.exponent) => {
                    last.coeff += t.coeff;
                }
                _ => merged.push(t),
            }
        }
        merged.retain(|t| !t.coeff.is_zero());
        Self { terms: merged }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn fund() -> Self {
        Self::new(vec![Term::int(1, Basis::Fund, 0.0)])
    }

    pub fn pt() -> Self {
        Self::new(vec![Term::int(1, Basis::Pt, 0.0)])
    }

    pub fn monomial(coeff: i64, basis: Basis, exponent: f64) -> Self {
        Self::new(vec![Term::int(coeff, basis, exponent)])
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &QuantumElement) -> QuantumElement {
        QuantumElement::new(self.terms.iter().chain(&other.terms).cloned().collect())
    }

    pub fn scale(&self, c: &BigRational) -> QuantumElement {
        QuantumElement::new(
            self.terms
                .iter()
                .map(|t| Term::new(&t.coeff * c, t.basis, t.exponent))
                .collect(),
        )
    }

    pub fn sub(&self, other: &QuantumElement) -> QuantumElement {
        self.add(&other.scale(&-BigRational::one()))
    }

    /// Equality up to the exponent merge tolerance.
    pub fn approx_eq(&self, other: &QuantumElement) -> bool {
        self.sub(other).is_zero()
    }
}

/// Quantum homology ring of CP¹ whose line class has symplectic area `area`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cp1Ring {
    area: f64,
}

/// One-variable Novikov series `Σ c_k ε^{s_k}` (the FUND-multiples).
type Lambda = Vec<(BigRational, f64)>;

impl Cp1Ring {
    pub fn new(area: f64) -> Result<Self> {
        if !(area > 0.0 && area.is_finite()) {
            return Err(Error::InvalidArgument(format!("area {area} must be positive")));
        }
        Ok(Self { area })
    }

    pub fn area(&self) -> f64 {
        self.area
    }

    /// Energy valuation of a term; additive under the product.
    fn valuation(&self, t: &Term) -> f64 {
        match t.basis {
            Basis::Fund => t.exponent,
            Basis::Pt => t.exponent + self.area / 2.0,
        }
    }

    pub fn product(&self, a: &QuantumElement, b: &QuantumElement) -> QuantumElement {
        let mut out = Vec::with_capacity(a.terms.len() * b.terms.len());
        for x in &a.terms {
            for y in &b.terms {
                let coeff = &x.coeff * &y.coeff;
                let e = x.exponent + y.exponent;
                let term = match (x.basis, y.basis) {
                    (Basis::Fund, other) | (other, Basis::Fund) => Term::new(coeff, other, e),
                    (Basis::Pt, Basis::Pt) => Term::new(coeff, Basis::Fund, e + self.area),
                };
                out.push(term);
            }
        }
        QuantumElement::new(out)
    }

    /// Split `x = f + g·x'` with `x' = PT·ε^{-area/2}` (so `x'² = 1`) and
    /// `f, g` Novikov series.
    fn split(&self, x: &QuantumElement) -> (Lambda, Lambda) {
        let mut f = Vec::new();
        let mut g = Vec::new();
        for t in &x.terms {
            match t.basis {
                Basis::Fund => f.push((t.coeff.clone(), t.exponent)),
                Basis::Pt => g.push((t.coeff.clone(), t.exponent + self.area / 2.0)),
            }
        }
        (f, g)
    }

    fn lambda_element(&self, s: &Lambda) -> QuantumElement {
        QuantumElement::new(s.iter().map(|(c, e)| Term::new(c.clone(), Basis::Fund, *e)).collect())
    }

    /// `x` is invertible.
    ///
    /// Since `x'² = 1`, the ring splits as two copies of the Novikov field
    /// via `x ↦ (f + g, f - g)`, and `x` is a unit exactly when both
    /// components are nonzero. In particular `PT ± ε^{area/2}·FUND` are zero
    /// divisors. When the test passes, an approximate inverse built from
    /// three correction orders of the geometric series is multiplied back
    /// and the residual is checked to lie strictly below the unit.
    pub fn is_invertible(&self, x: &QuantumElement) -> bool {
        if x.is_zero() {
            return false;
        }
        let (f, g) = self.split(x);
        let fe = self.lambda_element(&f);
        let ge = self.lambda_element(&g);
        if fe.add(&ge).is_zero() || fe.sub(&ge).is_zero() {
            return false;
        }
        match self.inverse(x, 3) {
            Some((inv, bound)) => {
                let residual = self.product(x, &inv).sub(&QuantumElement::fund());
                residual
                    .terms
                    .iter()
                    .all(|t| self.valuation(t) <= bound + EXPONENT_TOL * bound.abs().max(1.0))
            }
            None => false,
        }
    }

    /// Approximate inverse using `orders` correction orders of the geometric
    /// series, together with the valuation bound on `x · inverse - 1`.
    pub fn inverse(&self, x: &QuantumElement, orders: usize) -> Option<(QuantumElement, f64)> {
        let (f, g) = self.split(x);
        let fe = self.lambda_element(&f);
        let ge = self.lambda_element(&g);
        // h = f² - g² lies in the Novikov field; x⁻¹ = (f - g x') h⁻¹
        let h = self.product(&fe, &fe).sub(&self.product(&ge, &ge));
        let lead = h
            .terms
            .iter()
            .max_by(|a, b| a.exponent.partial_cmp(&b.exponent).unwrap_or(Ordering::Equal))?
            .clone();
        let lead_inv = QuantumElement::new(vec![Term::new(lead.coeff.recip(), Basis::Fund, -lead.exponent)]);
        // h = lead (1 + r), every exponent of r negative
        let r = self.product(&lead_inv, &h).sub(&QuantumElement::fund());
        let r_top = r.terms.iter().map(|t| t.exponent).fold(f64::NEG_INFINITY, f64::max);
        let mut series = QuantumElement::fund();
        let mut power = QuantumElement::fund();
        let minus_r = r.scale(&-BigRational::one());
        for _ in 0..orders {
            power = self.product(&power, &minus_r);
            series = series.add(&power);
        }
        let h_inv = self.product(&lead_inv, &series);
        let xprime = QuantumElement::new(vec![Term::int(1, Basis::Pt, -self.area / 2.0)]);
        let conj = fe.sub(&self.product(&ge, &xprime));
        let inv = self.product(&conj, &h_inv);
        let bound = if r.is_zero() {
            f64::NEG_INFINITY
        } else {
            (orders as f64 + 1.0) * r_top
        };
        Some((inv, bound))
    }
}

/// Free-function form of [`Cp1Ring::product`].
pub fn quantum_product(a: &QuantumElement, b: &QuantumElement, area: f64) -> Result<QuantumElement> {
    Ok(Cp1Ring::new(area)?.product(a, b))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LeadingTerm {
    pub sign: i8,
    pub basis: Basis,
    #[serde(serialize_with = "crate::report::ser_f64")]
    pub exponent: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PsiLeadingReport {
    pub leading: LeadingTerm,
    pub corrections: Vec<Term>,
    pub nonzero: bool,
    pub invertible: bool,
}

impl PsiLeadingReport {
    pub fn as_element(&self) -> QuantumElement {
        let mut terms = vec![Term::int(
            self.leading.sign as i64,
            self.leading.basis,
            self.leading.exponent,
        )];
        terms.extend(self.corrections.iter().cloned());
        QuantumElement::new(terms)
    }
}

/// Assemble `±[pt]·ε^{L⁺} + corrections`, enforcing that every correction
/// has energy strictly below `L⁺`.
pub fn psi_leading(ring: &Cp1Ring, l_plus: f64, sign: i8, corrections: Vec<Term>) -> Result<PsiLeadingReport> {
    if sign != 1 && sign != -1 {
        return Err(Error::InvalidArgument(format!("orientation sign {sign} must be ±1")));
    }
    for t in &corrections {
        if t.exponent >= l_plus || exp_eq(t.exponent, l_plus) {
            return Err(Error::EnergyBoundViolation {
                exponent: t.exponent,
                leading: l_plus,
            });
        }
    }
    let mut report = PsiLeadingReport {
        leading: LeadingTerm {
            sign,
            basis: Basis::Pt,
            exponent: l_plus,
        },
        corrections,
        nonzero: false,
        invertible: false,
    };
    let element = report.as_element();
    report.nonzero = element
        .terms()
        .iter()
        .any(|t| t.basis == Basis::Pt && exp_eq(t.exponent, l_plus));
    report.invertible = ring.is_invertible(&element);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    const AREA: f64 = 1.5;

    fn ring() -> Cp1Ring {
        Cp1Ring::new(AREA).unwrap()
    }

    #[test]
    fn fund_is_the_unit() {
        let x = QuantumElement::new(vec![Term::int(3, Basis::Pt, 0.25), Term::int(-2, Basis::Fund, 1.0)]);
        assert_eq!(ring().product(&QuantumElement::fund(), &x), x);
        assert_eq!(ring().product(&x, &QuantumElement::fund()), x);
    }

    #[test]
    fn point_squared() {
        let p = QuantumElement::pt();
        assert_eq!(ring().product(&p, &p), QuantumElement::monomial(1, Basis::Fund, AREA));
    }

    #[test]
    fn associativity_instance() {
        let r = ring();
        let p = QuantumElement::pt();
        let left = r.product(&r.product(&p, &p), &p);
        let right = r.product(&p, &r.product(&p, &p));
        assert_eq!(left, right);
        assert_eq!(left, QuantumElement::monomial(1, Basis::Pt, AREA));
    }

    #[test]
    fn invertibility_examples() {
        let r = ring();
        let s = 2f64.sqrt();
        let x = QuantumElement::monomial(1, Basis::Pt, s);
        assert!(r.is_invertible(&x));
        let (inv, _) = r.inverse(&x, 3).unwrap();
        assert!(inv.approx_eq(&QuantumElement::monomial(1, Basis::Pt, -s - AREA)));
        assert!(r.is_invertible(&QuantumElement::fund()));
        assert!(!r.is_invertible(&QuantumElement::zero()));
    }

    #[test]
    fn zero_divisors_are_not_invertible() {
        let r = ring();
        let z = QuantumElement::new(vec![
            Term::int(1, Basis::Pt, 0.0),
            Term::int(-1, Basis::Fund, AREA / 2.0),
        ]);
        let w = QuantumElement::new(vec![
            Term::int(1, Basis::Pt, 0.0),
            Term::int(1, Basis::Fund, AREA / 2.0),
        ]);
        assert!(r.product(&z, &w).is_zero());
        assert!(!r.is_invertible(&z));
        assert!(!r.is_invertible(&w));
    }

    #[test]
    fn psi_leading_examples() {
        let r = ring();
        let s = 2f64.sqrt();
        let rep = psi_leading(&r, s, 1, vec![]).unwrap();
        assert_eq!(
            rep.leading,
            LeadingTerm {
                sign: 1,
                basis: Basis::Pt,
                exponent: s
            }
        );
        assert!(rep.nonzero && rep.invertible);

        let rep = psi_leading(&r, s, 1, vec![Term::int(1, Basis::Fund, 0.1)]).unwrap();
        assert_eq!(rep.corrections.len(), 1);
        assert!(rep.invertible);

        assert!(matches!(
            psi_leading(&r, s, 1, vec![Term::int(1, Basis::Fund, s)]),
            Err(Error::EnergyBoundViolation { .. })
        ));
        assert!(matches!(
            psi_leading(&r, s, 1, vec![Term::int(1, Basis::Pt, 3.0)]),
            Err(Error::EnergyBoundViolation { .. })
        ));
        assert!(psi_leading(&r, s, 0, vec![]).is_err());
    }

    #[test]
    fn leading_term_with_corrections_inverts_to_three_orders() {
        let r = ring();
        let x = QuantumElement::new(vec![
            Term::int(-1, Basis::Pt, 2.0),
            Term::int(3, Basis::Fund, 0.5),
            Term::int(1, Basis::Pt, -1.0),
        ]);
        assert!(r.is_invertible(&x));
        let (inv, bound) = r.inverse(&x, 3).unwrap();
        assert!(bound < 0.0);
        let residual = r.product(&x, &inv).sub(&QuantumElement::fund());
        assert!(!residual.is_zero());
    }

    #[test]
    fn bad_area_is_rejected() {
        assert!(Cp1Ring::new(0.0).is_err());
        assert!(Cp1Ring::new(f64::NAN).is_err());
    }
}
