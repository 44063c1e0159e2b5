//! The two conjugate state families of the complex harmonic oscillator.
//!
//! With z = r·e^{iθ}, the states are ψ₂ₙ = C zⁿ e^{−α|z|²} and
//! ψ₁ₙ = C z̄ⁿ e^{−α|z|²}, degenerate at energy (n+1)ħω and carrying
//! angular momentum +nħ and −nħ respectively.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::constants::{cyclotron_frequency, MagneticField, PhysicalConstants};
use crate::error::{invalid, require_positive, Result};
use crate::special::{gamma_ratio, ln_factorial};

/// Largest principal quantum number accepted by public operations.
pub const MAX_N: u32 = 1_000_000;

/// Wavefunction values are complex amplitudes.
pub type ComplexAmplitude = Complex64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Branch {
    /// ψ₁ₙ ∝ z̄ⁿ, angular momentum −nħ.
    #[serde(rename = "psi1", alias = "Psi1")]
    Psi1,
    /// ψ₂ₙ ∝ zⁿ, angular momentum +nħ.
    #[serde(rename = "psi2", alias = "Psi2")]
    Psi2,
}

impl Branch {
    pub const BOTH: [Branch; 2] = [Branch::Psi1, Branch::Psi2];

    /// +1 for ψ₂ (counter-rotating phase e^{+inθ}), −1 for ψ₁.
    pub fn phase_sign(self) -> i64 {
        match self {
            Branch::Psi1 => -1,
            Branch::Psi2 => 1,
        }
    }

    pub fn conjugate(self) -> Branch {
        match self {
            Branch::Psi1 => Branch::Psi2,
            Branch::Psi2 => Branch::Psi1,
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::Psi1 => "psi1",
            Branch::Psi2 => "psi2",
        })
    }
}

impl std::str::FromStr for Branch {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "psi1" | "1" => Ok(Branch::Psi1),
            "psi2" | "2" => Ok(Branch::Psi2),
            other => Err(invalid(
                "branch",
                format!("expected psi1 or psi2, got `{other}`"),
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct StateLabel {
    pub branch: Branch,
    pub n: u32,
}

impl StateLabel {
    pub fn new(branch: Branch, n: u32) -> Result<Self> {
        check_n(n)?;
        Ok(Self { branch, n })
    }

    pub fn psi1(n: u32) -> Result<Self> {
        Self::new(Branch::Psi1, n)
    }

    pub fn psi2(n: u32) -> Result<Self> {
        Self::new(Branch::Psi2, n)
    }
}

pub(crate) fn check_n(n: u32) -> Result<u32> {
    if n > MAX_N {
        Err(invalid("n", format!("must be <= {MAX_N}, got {n}")))
    } else {
        Ok(n)
    }
}

/// Mass and angular frequency of the oscillator, with α = mω/2ħ.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OscillatorParams {
    mass: f64,
    omega: f64,
    alpha: f64,
    #[serde(skip)]
    consts: PhysicalConstants,
}

impl OscillatorParams {
    pub fn new(consts: PhysicalConstants, mass: f64, omega: f64) -> Result<Self> {
        let mass = require_positive("mass", mass)?;
        let omega = require_positive("omega", omega)?;
        Ok(Self {
            mass,
            omega,
            alpha: mass * omega / (2.0 * consts.hbar),
            consts,
        })
    }

    /// Electron in a Landau problem: m = mₑ and ω = ω_c(B).
    pub fn landau(consts: PhysicalConstants, field: MagneticField) -> Result<Self> {
        let omega = cyclotron_frequency(&consts, field, consts.m_e)?;
        Self::new(consts, consts.m_e, omega)
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn constants(&self) -> &PhysicalConstants {
        &self.consts
    }

    /// Inverse oscillator length √(mω/ħ) = √(2α).
    pub fn inverse_length(&self) -> f64 {
        (self.mass * self.omega / self.consts.hbar).sqrt()
    }

    /// Oscillator length √(ħ/mω).
    pub fn length(&self) -> f64 {
        (self.consts.hbar / (self.mass * self.omega)).sqrt()
    }
}

/// ln Cₙ with Cₙ² = (2α)^{n+1} / (π n!), so that ∫|ψ|² dx dy = 1.
///
/// The often-quoted (2α)^{n+1}/(2π n!) normalizes to ½ instead; see
/// [`printed_normalization_constant`].
pub fn ln_normalization_constant(n: u32, params: &OscillatorParams) -> Result<f64> {
    check_n(n)?;
    let two_alpha = 2.0 * params.alpha;
    Ok(0.5 * ((n as f64 + 1.0) * two_alpha.ln() - PI.ln() - ln_factorial(n as u64)))
}

/// √((2α)^{n+1}/(2π n!)), which is Cₙ/√2.
pub fn printed_normalization_constant(n: u32, params: &OscillatorParams) -> Result<f64> {
    Ok((ln_normalization_constant(n, params)? - 0.5 * std::f64::consts::LN_2).exp())
}

/// Cₙ, shared by both branches. Overflows to `inf` when ln Cₙ exceeds the
/// f64 range (large n in SI units); use [`ln_normalization_constant`] there.
pub fn normalization_constant(n: u32, params: &OscillatorParams) -> Result<f64> {
    Ok(ln_normalization_constant(n, params)?.exp())
}

/// ψ(r, θ), evaluated in log space for the modulus so that large n or SI
/// scale lengths do not overflow intermediate powers.
pub fn wavefunction(
    label: StateLabel,
    params: &OscillatorParams,
    r: f64,
    theta: f64,
) -> Result<ComplexAmplitude> {
    if !(r.is_finite() && r >= 0.0) {
        return Err(invalid("r", format!("must be finite and >= 0, got {r}")));
    }
    let modulus = radial_amplitude(label.n, params, r)?;
    let phase = label.branch.phase_sign() as f64 * label.n as f64 * theta;
    Ok(Complex64::from_polar(modulus, phase))
}

/// |ψ(r, θ)| = Cₙ rⁿ e^{−αr²}.
pub fn radial_amplitude(n: u32, params: &OscillatorParams, r: f64) -> Result<f64> {
    Ok(ln_radial_amplitude(n, params, r)?.exp())
}

/// ln |ψ(r, θ)|; `-inf` at the origin for n ≥ 1.
pub fn ln_radial_amplitude(n: u32, params: &OscillatorParams, r: f64) -> Result<f64> {
    let ln_c = ln_normalization_constant(n, params)?;
    if n == 0 {
        return Ok(ln_c - params.alpha * r * r);
    }
    if r == 0.0 {
        return Ok(f64::NEG_INFINITY);
    }
    Ok(ln_c + n as f64 * r.ln() - params.alpha * r * r)
}

/// Multiplies a state amplitude by the phase it picks up when the complex
/// coordinate is rotated, z → e^{iθ}z: e^{+inθ} for ψ₂ₙ and e^{−inθ} for ψ₁ₙ.
pub fn rotate_amplitude(
    label: StateLabel,
    amplitude: ComplexAmplitude,
    theta: f64,
) -> ComplexAmplitude {
    let phase = label.branch.phase_sign() as f64 * label.n as f64 * theta;
    amplitude * Complex64::from_polar(1.0, phase)
}

/// Eₙ = (n+1)ħω, identical for both branches.
pub fn energy(n: u32, params: &OscillatorParams) -> Result<f64> {
    check_n(n)?;
    Ok((n as f64 + 1.0) * params.consts.hbar * params.omega)
}

/// L_z eigenvalue in units of ħ: +n for ψ₂ₙ, −n for ψ₁ₙ.
pub fn angular_momentum(label: StateLabel) -> i64 {
    label.branch.phase_sign() * label.n as i64
}

/// L_z eigenvalue in J·s.
pub fn angular_momentum_si(label: StateLabel, consts: &PhysicalConstants) -> f64 {
    angular_momentum(label) as f64 * consts.hbar
}

/// Radius of maximal |ψ|²: √n · √(ħ/mω).
pub fn radial_peak(n: u32, params: &OscillatorParams) -> Result<f64> {
    check_n(n)?;
    Ok((n as f64).sqrt() * params.length())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MomentumComponent {
    /// ⟨p_z⟩
    Pz,
    /// ⟨p_z̄⟩
    PzBar,
}

/// The closed-form momentum expectations
///
/// ψ₂ₙ: ⟨p_z⟩ = −(2n−1)K, ⟨p_z̄⟩ = −(2n+1)K
/// ψ₁ₙ: ⟨p_z⟩ = +(2n+1)K, ⟨p_z̄⟩ = +(2n−1)K
///
/// with K = ħ√(mω/ħ)·Γ(n+½)/Γ(n+1) / 2π. Taken as given; a direct
/// full-plane integral of ψ̄(−iħ∂_z)ψ vanishes by angular symmetry.
pub fn momentum_expectation(
    label: StateLabel,
    component: MomentumComponent,
    params: &OscillatorParams,
) -> Result<f64> {
    let n = check_n(label.n)? as f64;
    let k =
        params.consts.hbar * params.inverse_length() * gamma_ratio(n + 0.5, n + 1.0)? / (2.0 * PI);
    let factor = match (label.branch, component) {
        (Branch::Psi2, MomentumComponent::Pz) => -(2.0 * n - 1.0),
        (Branch::Psi2, MomentumComponent::PzBar) => -(2.0 * n + 1.0),
        (Branch::Psi1, MomentumComponent::Pz) => 2.0 * n + 1.0,
        (Branch::Psi1, MomentumComponent::PzBar) => 2.0 * n - 1.0,
    };
    Ok(factor * k)
}
