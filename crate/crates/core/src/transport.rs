//! Currents, fractional charges, conductivities and the per-sample Hall
//! quantities derived from the oscillator states.
//!
//! Conventions used throughout:
//! - ψ₁ₙ carries e*ₙ = n/(2n+1)·e and σ_xy = n/(2n+1)·e²/h; ψ₂ₙ carries
//!   n/(2n−1) in both places.
//! - Γ(n+½)/Γ(n) is always evaluated as n·Γ(n+½)/Γ(n+1), which makes the
//!   ground-state current vanish instead of hitting the Γ(0) pole.
//! - The flux relation behind σ = N·e*/φ_B is φ_B = N·h/e.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::constants::{MagneticField, PhysicalConstants};
use crate::error::{invalid, require_positive, Error, Result};
use crate::fraction::Fraction;
use crate::oscillator::{check_n, radial_amplitude, Branch, OscillatorParams, StateLabel};
use crate::special::gamma_ratio;

/// A rectangular two-dimensional electron gas sample.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SampleGeometry {
    /// Length L along the current, m.
    pub length: f64,
    /// Width W across the current, m.
    pub width: f64,
    /// Sheet density n_s, 1/m².
    pub sheet_density: f64,
}

impl SampleGeometry {
    pub fn new(length: f64, width: f64, sheet_density: f64) -> Result<Self> {
        Ok(Self {
            length: require_positive("L", length)?,
            width: require_positive("W", width)?,
            sheet_density: require_positive("n_s", sheet_density)?,
        })
    }

    pub fn area(&self) -> f64 {
        self.length * self.width
    }
}

/// Conductivity and resistivity components of a 2D transport tensor.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TransportTensor {
    pub sigma_xx: f64,
    pub sigma_xy: f64,
    pub rho_xx: f64,
    pub rho_xy: f64,
}

/// Exact quantized value with its numeric value attached.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Quantized {
    /// Multiple of the natural unit (e²/h for conductances, h/e² for resistances).
    pub multiple: Fraction,
    pub value: f64,
}

fn nonzero_n(n: u32, what: &'static str) -> Result<u32> {
    if n == 0 {
        return Err(Error::UndefinedAtZero { what });
    }
    check_n(n)
}

/// n·Γ(n+½)/Γ(n+1), i.e. Γ(n+½)/Γ(n) continued to 0 at n = 0.
pub(crate) fn current_gamma_factor(n: u32) -> Result<f64> {
    let n = n as f64;
    Ok(n * gamma_ratio(n + 0.5, n + 1.0)?)
}

/// Γ(n+3/2)/Γ(n+1).
fn voltage_gamma_factor(n: u32) -> Result<f64> {
    let n = n as f64;
    gamma_ratio(n + 1.5, n + 1.0)
}

/// Current density per unit length (J_x, J_y) at polar point (r, θ):
///
/// ψ₂ₙ: J = (neħ/4m)·Cₙ²·r^{2n−1}e^{−2αr²}·(−sin θ, cos θ); ψ₁ₙ is the negative.
pub fn current_density(
    label: StateLabel,
    params: &OscillatorParams,
    r: f64,
    theta: f64,
) -> Result<(f64, f64)> {
    check_n(label.n)?;
    if !(r.is_finite() && r >= 0.0) {
        return Err(invalid("r", format!("must be finite and >= 0, got {r}")));
    }
    if label.n == 0 || r == 0.0 {
        return Ok((0.0, 0.0));
    }
    let n = label.n as f64;
    let c = params.constants();
    // Cₙ² r^{2n−1} e^{−2αr²} = |ψ|² / r
    let amp = radial_amplitude(label.n, params, r)?;
    let magnitude = n * c.e * c.hbar / (4.0 * params.mass()) * amp * amp / r;
    let sign = label.branch.phase_sign() as f64;
    let (s, co) = theta.sin_cos();
    Ok((-sign * magnitude * s, sign * magnitude * co))
}

/// Complex current moment 𝓘 = 𝓘_x + i𝓘_y:
/// ∓(neħ/2πm)·√(mω/ħ)·Γ(n+½)/Γ(n+1), negative for ψ₂ₙ, positive for ψ₁ₙ.
pub fn current_moment(label: StateLabel, params: &OscillatorParams) -> Result<Complex64> {
    check_n(label.n)?;
    let c = params.constants();
    let magnitude = c.e * c.hbar / (2.0 * PI * params.mass())
        * params.inverse_length()
        * current_gamma_factor(label.n)?;
    let sign = -(label.branch.phase_sign() as f64);
    Ok(Complex64::new(sign * magnitude, 0.0))
}

/// n/(2n+1) for ψ₁ₙ and n/(2n−1) for ψ₂ₙ, evaluated for any signed n.
/// Shared by charges, conductivities and filling ratios.
pub(crate) fn branch_fraction(branch: Branch, n: i64) -> Result<Fraction> {
    let den = match branch {
        Branch::Psi1 => 2 * n + 1,
        Branch::Psi2 => 2 * n - 1,
    };
    Fraction::new(n, den)
}

/// Effective quasiparticle charge in units of e.
pub fn fractional_charge(label: StateLabel) -> Result<Fraction> {
    let n = nonzero_n(label.n, "fractional charge")?;
    branch_fraction(label.branch, n as i64)
}

/// The two series (ψ₁: n/(2n+1), ψ₂: n/(2n−1)) for n = 1..=n_max.
pub fn conjugate_series(n_max: u32) -> Result<(Vec<Fraction>, Vec<Fraction>)> {
    if n_max == 0 {
        return Err(invalid("n_max", "must be >= 1"));
    }
    check_n(n_max)?;
    let series = |branch| {
        (1..=n_max as i64)
            .map(|n| branch_fraction(branch, n))
            .collect::<Result<Vec<_>>>()
    };
    Ok((series(Branch::Psi1)?, series(Branch::Psi2)?))
}

/// Hall conductivity in units of e²/h.
pub fn hall_conductivity(label: StateLabel) -> Result<Fraction> {
    let n = nonzero_n(label.n, "Hall conductivity")?;
    branch_fraction(label.branch, n as i64)
}

pub fn hall_conductivity_quantized(
    label: StateLabel,
    consts: &PhysicalConstants,
) -> Result<Quantized> {
    let multiple = hall_conductivity(label)?;
    Ok(Quantized {
        multiple,
        value: multiple.to_f64() * consts.conductance_quantum(),
    })
}

/// σ_xy = N·e*/φ_B with φ_B = N·h/e (N electrons, N flux quanta).
///
/// Equals [`hall_conductivity_quantized`] numerically; kept as a separate
/// path so the flux reading can be checked.
pub fn hall_conductivity_from_flux(
    label: StateLabel,
    electrons: u64,
    consts: &PhysicalConstants,
) -> Result<f64> {
    if electrons == 0 {
        return Err(invalid("N", "must be >= 1"));
    }
    let charge = fractional_charge(label)?.to_f64() * consts.e;
    let flux = electrons as f64 * consts.flux_quantum();
    Ok(electrons as f64 * charge / flux)
}

/// Combined Hall resistance (2n±1)/n · h/e², + for ψ₁ₙ and − for ψ₂ₙ.
pub fn hall_resistance(label: StateLabel, consts: &PhysicalConstants) -> Result<Quantized> {
    let multiple = hall_conductivity(label)?.recip()?;
    Ok(Quantized {
        multiple,
        value: multiple.to_f64() * consts.klitzing(),
    })
}

/// I₀ = eħn_s/(2πm).
pub fn characteristic_current(
    geometry: &SampleGeometry,
    mass: f64,
    consts: &PhysicalConstants,
) -> Result<f64> {
    let mass = require_positive("mass", mass)?;
    Ok(consts.e * consts.hbar * geometry.sheet_density / (2.0 * PI * mass))
}

/// Sample current of the ψ₁ₙ state: I = I₀·W·√(mω/ħ)·Γ(n+½)/Γ(n).
pub fn sheet_current(n: u32, geometry: &SampleGeometry, params: &OscillatorParams) -> Result<f64> {
    check_n(n)?;
    let i0 = characteristic_current(geometry, params.mass(), params.constants())?;
    Ok(i0 * geometry.width * params.inverse_length() * current_gamma_factor(n)?)
}

/// R_xx = (V_x/(I₀W))·√(ħ/mω)·Γ(n)/Γ(n+½).
pub fn longitudinal_resistance(
    n: u32,
    v_x: f64,
    geometry: &SampleGeometry,
    params: &OscillatorParams,
) -> Result<f64> {
    let n = nonzero_n(n, "longitudinal resistance (Γ(0) pole)")?;
    if !(v_x.is_finite() && v_x >= 0.0) {
        return Err(invalid(
            "V_x",
            format!("must be finite and >= 0, got {v_x}"),
        ));
    }
    let i0 = characteristic_current(geometry, params.mass(), params.constants())?;
    Ok(v_x / (i0 * geometry.width) * params.length() / current_gamma_factor(n)?)
}

/// ρ_xx = (W/L)·R_xx.
pub fn longitudinal_resistivity(
    n: u32,
    v_x: f64,
    geometry: &SampleGeometry,
    params: &OscillatorParams,
) -> Result<f64> {
    Ok(geometry.width / geometry.length * longitudinal_resistance(n, v_x, geometry, params)?)
}

/// μ_H = (2n_sħL/(mV_x))·√(ħ/mω)·Γ(n+3/2)/Γ(n+1).
pub fn hall_mobility(
    n: u32,
    v_x: f64,
    geometry: &SampleGeometry,
    params: &OscillatorParams,
) -> Result<f64> {
    check_n(n)?;
    if v_x == 0.0 {
        return Err(invalid(
            "V_x",
            "Hall mobility divides by V_x, which is zero",
        ));
    }
    let v_x = require_positive("V_x", v_x)?;
    let hbar = params.constants().hbar;
    Ok(
        2.0 * geometry.sheet_density * hbar * geometry.length / (params.mass() * v_x)
            * params.length()
            * voltage_gamma_factor(n)?,
    )
}

/// V_H = (2n_sħ²W/(me))·√(mω/ħ)·Γ(n+3/2)/Γ(n+1).
pub fn hall_voltage(n: u32, geometry: &SampleGeometry, params: &OscillatorParams) -> Result<f64> {
    check_n(n)?;
    let c = params.constants();
    Ok(
        2.0 * geometry.sheet_density * c.hbar * c.hbar * geometry.width / (params.mass() * c.e)
            * params.inverse_length()
            * voltage_gamma_factor(n)?,
    )
}

/// Hall field in the two printed forms.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HallField {
    /// V_H / W, the canonical value.
    pub canonical: f64,
    /// (1/τ_s)·√(ħB/e)·Γ(n+3/2)/Γ(n+1).
    pub alternate: f64,
    /// canonical / alternate; 2 when ω = ω_c.
    pub ratio: f64,
    /// τ_s = m/(ħn_s).
    pub tau_s: f64,
}

/// τ_s = m/(ħn_s), equal to e/(2πI₀).
pub fn scattering_time(
    geometry: &SampleGeometry,
    mass: f64,
    consts: &PhysicalConstants,
) -> Result<f64> {
    let mass = require_positive("mass", mass)?;
    Ok(mass / (consts.hbar * geometry.sheet_density))
}

pub fn hall_field(
    n: u32,
    geometry: &SampleGeometry,
    params: &OscillatorParams,
    field: MagneticField,
) -> Result<HallField> {
    let c = params.constants();
    let canonical = hall_voltage(n, geometry, params)? / geometry.width;
    let tau_s = scattering_time(geometry, params.mass(), c)?;
    let alternate = (c.hbar * field.tesla() / c.e).sqrt() * voltage_gamma_factor(n)? / tau_s;
    Ok(HallField {
        canonical,
        alternate,
        ratio: canonical / alternate,
        tau_s,
    })
}

/// ρ = 1/σ for σ = σ_xx + iσ_xy.
pub fn invert_transport(sigma_xx: f64, sigma_xy: f64) -> Result<TransportTensor> {
    let (rho_xx, rho_xy) = complex_inverse(sigma_xx, sigma_xy)?;
    Ok(TransportTensor {
        sigma_xx,
        sigma_xy,
        rho_xx,
        rho_xy,
    })
}

/// σ = 1/ρ for ρ = ρ_xx + iρ_xy.
pub fn invert_resistivity(rho_xx: f64, rho_xy: f64) -> Result<TransportTensor> {
    let (sigma_xx, sigma_xy) = complex_inverse(rho_xx, rho_xy)?;
    Ok(TransportTensor {
        sigma_xx,
        sigma_xy,
        rho_xx,
        rho_xy,
    })
}

fn complex_inverse(re: f64, im: f64) -> Result<(f64, f64)> {
    if !(re.is_finite() && im.is_finite()) {
        return Err(invalid("tensor", "components must be finite"));
    }
    let norm = re * re + im * im;
    if norm == 0.0 {
        return Err(Error::SingularInversion);
    }
    Ok((re / norm, -im / norm))
}
