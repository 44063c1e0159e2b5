//! Landau-level / Fermi-level crossings and magnetic-field sweeps.
//!
//! A level n crosses the Fermi level when n_s·h/(eB) = n + 1. Between
//! crossings the Hall resistance is held at the value of the most recent
//! crossing passed while sweeping upward in B, which produces the plateau
//! staircase. Only n ≥ 1 has a defined combined Hall resistance, so the
//! n = 0 region reuses the n = 1 value; past the n = 0 crossing (negative
//! level index) the resistance is undefined.

use std::f64::consts::PI;

use serde::Serialize;

use crate::constants::{MagneticField, PhysicalConstants};
use crate::error::{invalid, require_positive, Error, Result};
use crate::oscillator::{Branch, OscillatorParams, StateLabel};
use crate::transport::{hall_resistance, longitudinal_resistance, SampleGeometry};

/// |n_cont − round(n_cont)| below this flags a crossing.
pub const CROSSING_TOLERANCE: f64 = 1e-6;

/// Continuous level index n = n_s·h/(eB) − 1 at field B.
pub fn level_index(b: f64, sheet_density: f64, consts: &PhysicalConstants) -> Result<f64> {
    let b = require_positive("B", b)?;
    let n_s = require_positive("n_s", sheet_density)?;
    Ok(n_s * consts.h / (consts.e * b) - 1.0)
}

/// Crossing fields B_n = n_s·h/(e(n+1)) for n = 0..=n_max, strictly decreasing.
pub fn allowed_fields(
    sheet_density: f64,
    n_max: u32,
    consts: &PhysicalConstants,
) -> Result<Vec<f64>> {
    let n_s = require_positive("n_s", sheet_density)?;
    let scale = n_s * consts.h / consts.e;
    Ok((0..=n_max).map(|n| scale / (n as f64 + 1.0)).collect())
}

/// n_B = eB/h, also the number of states per Landau level.
pub fn magnetic_density(field: MagneticField, consts: &PhysicalConstants) -> f64 {
    consts.e * field.tesla() / consts.h
}

/// Whether quantization is possible, n_s > n_B.
pub fn quantization_allowed(
    sheet_density: f64,
    field: MagneticField,
    consts: &PhysicalConstants,
) -> bool {
    sheet_density > magnetic_density(field, consts)
}

/// ΔB = n_s·h/(e·n(n+1)), the gap between the crossings of levels n−1 and n.
pub fn plateau_width(n: u32, sheet_density: f64, consts: &PhysicalConstants) -> Result<f64> {
    if n == 0 {
        return Err(Error::UndefinedAtZero {
            what: "plateau width",
        });
    }
    let n_s = require_positive("n_s", sheet_density)?;
    let n = n as f64;
    Ok(n_s * consts.h / (consts.e * n * (n + 1.0)))
}

/// dR_H/dB = ±1/(e·n_s) · 1/(1 − eB/(n_s h))², + for ψ₁ and − for ψ₂.
pub fn hall_derivative(
    b: f64,
    sheet_density: f64,
    branch: Branch,
    consts: &PhysicalConstants,
) -> Result<f64> {
    let b = require_positive("B", b)?;
    let n_s = require_positive("n_s", sheet_density)?;
    let x = consts.e * b / (n_s * consts.h);
    let gap = 1.0 - x;
    if gap.abs() < 1e-12 {
        return Err(Error::Pole {
            what: "Hall derivative at eB = n_s h",
        });
    }
    let sign = -(branch.phase_sign() as f64);
    Ok(sign / (consts.e * n_s * gap * gap))
}

/// Small-field form exp(−2eB/(n_s h))/(e·n_s).
pub fn hall_derivative_small_field(
    b: f64,
    sheet_density: f64,
    consts: &PhysicalConstants,
) -> Result<f64> {
    let b = require_positive("B", b)?;
    let n_s = require_positive("n_s", sheet_density)?;
    let x = consts.e * b / (n_s * consts.h);
    Ok((-2.0 * x).exp() / (consts.e * n_s))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HallTemperature {
    /// T_H = πħ²n_s/(k_B m), K.
    pub kelvin: f64,
    /// ΔE = k_B·T_H.
    pub delta_e: f64,
    /// Δt = τ_s = m/(ħn_s).
    pub delta_t: f64,
    /// ΔE·Δt / (h/2).
    pub uncertainty_ratio: f64,
}

pub fn hall_temperature(
    sheet_density: f64,
    mass: f64,
    consts: &PhysicalConstants,
) -> Result<HallTemperature> {
    let n_s = require_positive("n_s", sheet_density)?;
    let mass = require_positive("mass", mass)?;
    let kelvin = PI * consts.hbar * consts.hbar * n_s / (consts.k_b * mass);
    let delta_e = consts.k_b * kelvin;
    let delta_t = mass / (consts.hbar * n_s);
    Ok(HallTemperature {
        kelvin,
        delta_e,
        delta_t,
        uncertainty_ratio: delta_e * delta_t / (consts.h / 2.0),
    })
}

/// R_H = h/(i·e²) for integer filling i ≥ 1.
pub fn klitzing_resistance(i: u32, consts: &PhysicalConstants) -> Result<f64> {
    if i == 0 {
        return Err(Error::UndefinedAtZero {
            what: "integer filling resistance",
        });
    }
    Ok(consts.h / (i as f64 * consts.e * consts.e))
}

/// The same resistance indexed by level, h/e² / (n+1).
pub fn klitzing_resistance_for_level(n: u32, consts: &PhysicalConstants) -> f64 {
    consts.klitzing() / (n as f64 + 1.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepConfig {
    pub b_min: f64,
    pub b_max: f64,
    pub steps: usize,
    pub geometry: SampleGeometry,
    pub v_x: f64,
    pub branch: Branch,
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        require_positive("B_min", self.b_min)?;
        require_positive("B_max", self.b_max)?;
        if self.b_min >= self.b_max {
            return Err(invalid(
                "B_max",
                format!("must exceed B_min ({} >= {})", self.b_min, self.b_max),
            ));
        }
        if self.steps < 2 {
            return Err(invalid(
                "steps",
                format!("must be >= 2, got {}", self.steps),
            ));
        }
        SampleGeometry::new(
            self.geometry.length,
            self.geometry.width,
            self.geometry.sheet_density,
        )?;
        if !(self.v_x.is_finite() && self.v_x >= 0.0) {
            return Err(invalid(
                "V_x",
                format!("must be finite and >= 0, got {}", self.v_x),
            ));
        }
        Ok(())
    }

    /// Evenly spaced fields from B_min to B_max inclusive.
    pub fn fields(&self) -> Vec<f64> {
        let last = self.steps - 1;
        let step = (self.b_max - self.b_min) / last as f64;
        (0..self.steps)
            .map(|i| {
                if i == last {
                    self.b_max
                } else {
                    self.b_min + i as f64 * step
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepRecord {
    pub b: f64,
    pub n_cont: f64,
    /// Level of the most recent crossing (ceil of n_cont); `None` past the
    /// n = 0 crossing.
    pub n_int: Option<u32>,
    pub on_crossing: bool,
    pub r_h: Option<f64>,
    /// Longitudinal resistance of the crossing level at crossings, 0 on plateaus, `None` at the
    /// n = 0 crossing or where R_H is undefined.
    pub r_xx: Option<f64>,
    pub sigma_xy: Option<f64>,
    pub filling_i: Option<u32>,
}

/// Evaluates one field point of the staircase model.
pub fn sweep_point(
    config: &SweepConfig,
    b: f64,
    consts: &PhysicalConstants,
) -> Result<SweepRecord> {
    let n_s = config.geometry.sheet_density;
    let n_cont = level_index(b, n_s, consts)?;
    let nearest = n_cont.round();
    let on_crossing = (n_cont - nearest).abs() < CROSSING_TOLERANCE && nearest >= 0.0;
    let held = if on_crossing { nearest } else { n_cont.ceil() };

    if !on_crossing && n_cont < 0.0 {
        return Ok(SweepRecord {
            b,
            n_cont,
            n_int: None,
            on_crossing: false,
            r_h: None,
            r_xx: None,
            sigma_xy: None,
            filling_i: None,
        });
    }
    if held > u32::MAX as f64 {
        return Err(invalid(
            "B",
            format!("level index {n_cont:e} too large at B = {b}"),
        ));
    }
    let n_int = held as u32;
    let level = StateLabel::new(config.branch, n_int.max(1))?;
    let r_h = hall_resistance(level, consts)?.value;

    let r_xx = if !on_crossing {
        Some(0.0)
    } else if n_int == 0 {
        None
    } else {
        let params = OscillatorParams::landau(*consts, MagneticField::new(b)?)?;
        Some(longitudinal_resistance(
            n_int,
            config.v_x,
            &config.geometry,
            &params,
        )?)
    };

    Ok(SweepRecord {
        b,
        n_cont,
        n_int: Some(n_int),
        on_crossing,
        r_h: Some(r_h),
        r_xx,
        sigma_xy: Some(1.0 / r_h),
        filling_i: Some(n_int + 1),
    })
}

/// Runs the sweep over [`SweepConfig::fields`], ordered by increasing B.
pub fn run_sweep(config: &SweepConfig, consts: &PhysicalConstants) -> Result<Vec<SweepRecord>> {
    config.validate()?;
    config
        .fields()
        .into_iter()
        .map(|b| sweep_point(config, b, consts))
        .collect()
}
