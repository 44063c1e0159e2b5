//! Complex harmonic oscillator model of fractional quantum Hall transport.
//!
//! The two degenerate conjugate states ψ₁ₙ ∝ z̄ⁿe^{−α|z|²} and
//! ψ₂ₙ ∝ zⁿe^{−α|z|²} carry fractional charges n/(2n+1) and n/(2n−1). This
//! crate evaluates the oscillator closed forms, the derived Hall transport
//! quantities, magnetic-field sweeps with plateau structure and the
//! rotation / Aharonov–Bohm phase relations, and checks the closed forms
//! against brute-force polar quadrature.

pub mod constants;
pub mod discrepancy;
pub mod error;
pub mod fraction;
pub mod landau;
pub mod oscillator;
pub mod quadrature;
pub mod special;
pub mod symmetry;
pub mod transport;

pub use constants::{constants_for, MagneticField, PhysicalConstants, UnitSystem};
pub use error::{Error, Result};
pub use fraction::Fraction;
pub use oscillator::{Branch, OscillatorParams, StateLabel};
pub use transport::SampleGeometry;
