//! Existence of stable, semistable and simple quiver representations,
//! local models of their moduli spaces, and the classification of
//! irreducible torus knot group representations by eigenvalue
//! multiplicities.
//!
//! The core question: given a quiver, an integral weight `theta` and a
//! dimension vector `alpha`, does a theta-(semi)stable representation of
//! dimension `alpha` exist? The answer is computed from the lattice of
//! generic subdimension vectors ([`schofield`]), turned into verdicts by
//! King's numerical criterion ([`stability`]), specialized to simple
//! representations ([`simples`]), and localized around a polystable point
//! via a small interaction quiver ([`stability::local_quiver`]). On top of
//! that sits a complete margin classification for representations of torus
//! knot groups ([`torus_knot`]) and an independent randomized finite-field
//! cross-check ([`oracle`]).
//!
//! ```
//! use quiver_moduli::{
//!     moduli_dimension, is_theta_stable_dim, DimVector, Quiver, Weight,
//! };
//!
//! let quiver = Quiver::kronecker(3).unwrap();
//! let theta = Weight::new(vec![-1, 1]);
//! let alpha = DimVector::new(vec![2, 2]);
//! assert!(is_theta_stable_dim(&quiver, &theta, &alpha).unwrap());
//! assert_eq!(moduli_dimension(&quiver, &theta, &alpha).unwrap(), 5);
//! ```

pub mod cli;
pub mod error;
pub mod modp;
pub mod oracle;
pub mod quiver;
pub mod schofield;
pub mod simples;
pub mod stability;
pub mod torus_knot;

pub use error::{Error, Result};
pub use oracle::{
    default_knot_modulus, oracle_simple_exists, oracle_simple_report,
    oracle_torus_knot_irreducible, oracle_torus_knot_report, OracleReport, OracleVerdict,
    PrimeFieldConfig, SplitMix64,
};
pub use quiver::{DimVector, EulerMatrix, Preset, Quiver, Weight};
pub use schofield::{
    generic_subdims, is_generic_subdim, SubdimTable, DEFAULT_LATTICE_BUDGET,
};
pub use simples::is_simple_dim;
pub use stability::{
    enumerate_stable_dims, is_theta_semistable_dim, is_theta_semistable_with,
    is_theta_stable_dim, is_theta_stable_with, local_quiver, moduli_dimension, stable_via_local,
    stable_via_local_unchecked, Decomposition, LocalQuiverSetting,
};
pub use torus_knot::{
    build_gamma, find_decomposition, torus_knot_obstruction, torus_knot_setting,
    torus_knot_stable, torus_knot_stable_via_gamma, Obstruction, TorusKnotDims,
};
