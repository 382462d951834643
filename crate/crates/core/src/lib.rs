//! Exact and numerical tools for circle subgroups of compact Lie groups
//! acting on their coadjoint orbits.
//!
//! * [`root_system`]: Cartan data, exact coweight inner products, Weyl
//!   orbits and length generating functions for A1–A4, B2–B4, C2–C4, D4, G2, F4.
//! * [`circle_index`]: weights at the moment-map maximum, the virtual index,
//!   and the conjugate-point count of the geodesic loop.
//! * [`hofer`]: positive Hofer norms, Hofer lengths of circle actions,
//!   normalization of generating Hamiltonians.
//! * [`loop_morse`]: Morse–Bott strata of the energy on the based loop
//!   group and the Poincaré series they assemble.
//! * [`variational`]: discretized energy and Hofer length on based loops
//!   in SU(2) and their finite-difference Hessians.
//! * [`quantum`]: quantum homology of CP¹ and the leading-term structure of
//!   the quantum class of a loop.

pub mod circle_index;
pub mod cli;
pub mod error;
pub mod hofer;
pub mod loop_morse;
pub mod poly;
pub mod quantum;
pub mod report;
pub mod root_system;
pub mod su2;
pub mod variational;
pub mod verify;

pub use error::{Error, Result};
pub use root_system::{Coweight, Family, RootSystem, SystemLabel};
