//! State-quantifying measures on finite-dimensional quantum state spaces.
//!
//! A quantifying measure assigns a "number of states" to a set of states.
//! Classically there are two: the counting measure (each state counts as
//! one) and the Liouville measure (additive volume, zero on single points).
//! This crate computes both baselines on the qubit ray sphere, together
//! with the entropy-based measure
//!
//! ```text
//! mu(U) = 2^S(rho_U),    rho_U = (1/|U|) sum |psi_i><psi_i|
//! ```
//!
//! where `S` is the von Neumann entropy in bits. Unlike the classical
//! baselines, this measure is non-additive, bounded below by one, and
//! non-monotone under set inclusion. The crate provides the linear
//! algebra to evaluate it ([`hilbert`]), the entropy functions and their
//! numeric inverses ([`entropy`]), the three measures over finite sets
//! and spherical caps ([`measures`]), and a set of named, seeded
//! experiments that exercise every quantitative property ([`experiments`]).
//!
//! ```
//! use statequant::hilbert::PureState;
//! use statequant::measures::{bloch_state, quantized_measure, StateSet};
//!
//! let z_plus = PureState::basis_state(2, 0);
//! let z_minus = PureState::basis_state(2, 1);
//! let x_plus = bloch_state(std::f64::consts::FRAC_PI_2, 0.0);
//!
//! // An orthogonal pair counts as two states exactly.
//! let pair = StateSet::new(vec![z_plus.clone(), z_minus.clone()])?;
//! assert!((quantized_measure(&pair)?.value() - 2.0).abs() < 1e-9);
//!
//! // Adding a third state makes the set bigger but the measure smaller.
//! let triple = StateSet::new(vec![z_plus, z_minus, x_plus])?;
//! assert!(quantized_measure(&triple)?.value() < 1.89);
//! # Ok::<(), statequant::Error>(())
//! ```

pub mod entropy;
pub mod experiments;
pub mod hilbert;
pub mod measures;
pub mod random;

mod error;

pub use error::{Error, Result};
