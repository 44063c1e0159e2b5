//! Physical constants, unit systems and field-derived length/frequency scales.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, require_positive, Error, Result};

/// Elementary charge, C (CODATA 2018, exact).
pub const ELEMENTARY_CHARGE: f64 = 1.602_176_634e-19;

/// Planck constant, J·s (CODATA 2018, exact).
pub const PLANCK: f64 = 6.626_070_15e-34;

/// Electron mass, kg (CODATA 2018).
pub const ELECTRON_MASS: f64 = 9.109_383_701_5e-31;

/// Boltzmann constant, J/K (CODATA 2018, exact).
pub const BOLTZMANN: f64 = 1.380_649e-23;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum UnitSystem {
    #[default]
    #[serde(alias = "SI")]
    Si,
    #[serde(alias = "Natural")]
    Natural,
}

impl std::str::FromStr for UnitSystem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "si" => Ok(Self::Si),
            "natural" => Ok(Self::Natural),
            other => Err(invalid(
                "units",
                format!("expected `si` or `natural`, got `{other}`"),
            )),
        }
    }
}

/// The constants every other module draws on.
///
/// `hbar` is always derived as `h / 2π` so that the two stay consistent to
/// the last bit; the printed CODATA value of ħ is a truncation of that ratio.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PhysicalConstants {
    pub e: f64,
    pub hbar: f64,
    pub h: f64,
    pub m_e: f64,
    pub k_b: f64,
}

impl PhysicalConstants {
    pub const fn si() -> Self {
        Self {
            e: ELEMENTARY_CHARGE,
            hbar: PLANCK / (2.0 * PI),
            h: PLANCK,
            m_e: ELECTRON_MASS,
            k_b: BOLTZMANN,
        }
    }

    pub const fn natural() -> Self {
        Self {
            e: 1.0,
            hbar: 1.0,
            h: 2.0 * PI,
            m_e: 1.0,
            k_b: 1.0,
        }
    }

    /// von Klitzing constant h/e².
    pub fn klitzing(&self) -> f64 {
        self.h / (self.e * self.e)
    }

    /// Conductance quantum e²/h.
    pub fn conductance_quantum(&self) -> f64 {
        self.e * self.e / self.h
    }

    /// Flux quantum h/e.
    pub fn flux_quantum(&self) -> f64 {
        self.h / self.e
    }
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self::si()
    }
}

pub fn constants_for(system: UnitSystem) -> PhysicalConstants {
    match system {
        UnitSystem::Si => PhysicalConstants::si(),
        UnitSystem::Natural => PhysicalConstants::natural(),
    }
}

/// Magnetic flux density in tesla (or the natural-unit equivalent). Never negative.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
pub struct MagneticField(f64);

impl MagneticField {
    pub fn new(tesla: f64) -> Result<Self> {
        if tesla.is_finite() && tesla >= 0.0 {
            Ok(Self(tesla))
        } else {
            Err(invalid(
                "B",
                format!("must be finite and >= 0, got {tesla}"),
            ))
        }
    }

    pub fn tesla(self) -> f64 {
        self.0
    }
}

/// ω_c = eB/m.
pub fn cyclotron_frequency(
    consts: &PhysicalConstants,
    field: MagneticField,
    mass: f64,
) -> Result<f64> {
    let mass = require_positive("mass", mass)?;
    Ok(consts.e * field.tesla() / mass)
}

/// l_B = √(ħ/eB).
pub fn magnetic_length(consts: &PhysicalConstants, field: MagneticField) -> Result<f64> {
    if field.tesla() == 0.0 {
        return Err(Error::SingularField);
    }
    Ok((consts.hbar / (consts.e * field.tesla())).sqrt())
}
