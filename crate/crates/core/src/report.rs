//! JSON conventions shared by all reports: exact rationals as `"p/q"`
//! strings and floats rounded to 12 significant digits.

use num_rational::BigRational;
use serde::Serializer;

use crate::root_system::fraction_string;

/// Unit tag for lengths, energies and exponents.
pub const LATTICE_UNITS: &str = "lattice-units";
/// Unit tag for counts, indices and coefficients.
pub const DIMENSIONLESS: &str = "dimensionless";

/// Round to 12 significant digits.
pub fn round12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

pub fn ser_f64<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(round12(*x))
}

pub fn ser_fraction<S: Serializer>(q: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&fraction_string(q))
}
