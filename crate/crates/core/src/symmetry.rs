//! Filling ratios, the n → −n conjugation, the dual map, rotation and
//! reflection angles, Aharonov–Bohm phases and flux quantization.
//!
//! Angles that are rational multiples of π carry that multiple exactly
//! alongside the float value.

use std::f64::consts::PI;

use serde::Serialize;

use crate::constants::PhysicalConstants;
use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::oscillator::{check_n, Branch, StateLabel};
use crate::transport::{branch_fraction, fractional_charge};

/// Integer count of encirclements; may be negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct WindingNumber(pub i64);

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PhaseResult {
    /// Angle in radians.
    pub angle: f64,
    /// angle / π, when the angle is a rational multiple of π.
    pub pi_multiple: Option<Fraction>,
}

impl PhaseResult {
    fn from_pi_multiple(multiple: Fraction) -> Self {
        Self {
            angle: multiple.to_f64() * PI,
            pi_multiple: Some(multiple),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ReflectionResult {
    pub angle: PhaseResult,
    /// N_w/(2N_w+1), the ratio associated with the charge series.
    pub ratio: Fraction,
    /// The quotient of the two angles as defined, 2N_w/(2N_w+1).
    pub angle_ratio: Fraction,
}

fn nonzero(n: u32, what: &'static str) -> Result<i64> {
    if n == 0 {
        return Err(Error::UndefinedAtZero { what });
    }
    Ok(check_n(n)? as i64)
}

/// N/N_L = n/(2n±1); the same fraction as the charge and the conductivity.
pub fn filling_ratio(label: StateLabel) -> Result<Fraction> {
    fractional_charge(label)
}

/// Checks that n → −n maps each branch's fraction onto the other's.
pub fn conjugation_check(n: u32) -> Result<bool> {
    let n = nonzero(n, "conjugation check")?;
    let psi1 = branch_fraction(Branch::Psi1, n)?;
    let psi2 = branch_fraction(Branch::Psi2, n)?;
    Ok(branch_fraction(Branch::Psi2, -n)? == psi1 && branch_fraction(Branch::Psi1, -n)? == psi2)
}

/// n → 1/n scales energy and angular momentum by 1/n.
pub fn dual_transform(n: u32, energy: f64, angular_momentum: f64) -> Result<(f64, f64)> {
    let n = nonzero(n, "dual transform")? as f64;
    Ok((energy / n, angular_momentum / n))
}

/// Conductivity of one branch under the dual map, in units of e²/h:
/// 1/(2+n) for ψ₁ and −1/(2−n) for ψ₂.
pub fn dual_conductivity(branch: Branch, n: u32) -> Result<Fraction> {
    let n = nonzero(n, "dual conductivity")?;
    match branch {
        Branch::Psi1 => Fraction::new(1, 2 + n),
        Branch::Psi2 if n == 2 => Err(Error::Pole {
            what: "dual conductivity of psi2 at n = 2",
        }),
        Branch::Psi2 => Fraction::new(-1, 2 - n),
    }
}

pub fn dual_conductivities(n: u32) -> Result<(Fraction, Fraction)> {
    Ok((
        dual_conductivity(Branch::Psi1, n)?,
        dual_conductivity(Branch::Psi2, n)?,
    ))
}

/// θ₁ = 2πN_w/n, rotations that leave a state unchanged.
pub fn preservation_angles(n: u32, winding: WindingNumber) -> Result<PhaseResult> {
    let n = nonzero(n, "preservation angle")?;
    Ok(PhaseResult::from_pi_multiple(Fraction::new(
        2 * winding.0,
        n,
    )?))
}

/// θ₂ = π(2N_w+1)/n, rotations equivalent to a reflection.
pub fn reflection_angles(n: u32, winding: WindingNumber) -> Result<ReflectionResult> {
    let n = nonzero(n, "reflection angle")?;
    let odd = 2 * winding.0 + 1;
    Ok(ReflectionResult {
        angle: PhaseResult::from_pi_multiple(Fraction::new(odd, n)?),
        ratio: Fraction::new(winding.0, odd)?,
        angle_ratio: Fraction::new(2 * winding.0, odd)?,
    })
}

/// Δφ = q₀φ_B/ħ.
pub fn ab_phase(charge: f64, flux: f64, consts: &PhysicalConstants) -> f64 {
    charge * flux / consts.hbar
}

/// θ = q₀φ_B/(nħ).
pub fn rotation_from_flux(
    charge: f64,
    flux: f64,
    n: u32,
    consts: &PhysicalConstants,
) -> Result<f64> {
    let n = nonzero(n, "rotation angle")? as f64;
    Ok(charge * flux / (n * consts.hbar))
}

/// θ for one flux quantum h/e and q₀ = e*·e: 2π/(2n±1).
pub fn rotation_unit_flux(label: StateLabel, consts: &PhysicalConstants) -> Result<PhaseResult> {
    let charge = fractional_charge(label)?;
    // e*·h/(n·ħ) = 2π·e*/n
    let multiple = charge.checked_mul(Fraction::new(2, label.n as i64)?)?;
    let angle = rotation_from_flux(
        charge.to_f64() * consts.e,
        consts.flux_quantum(),
        label.n,
        consts,
    )?;
    Ok(PhaseResult {
        angle,
        pi_multiple: Some(multiple),
    })
}

/// Constructive-interference flux φ_B = N_w·(2n±1)/n · h/e as a multiple of h/e.
pub fn flux_quantization(label: StateLabel, windings: u32) -> Result<Fraction> {
    if windings == 0 {
        return Err(crate::error::invalid("N_w", "must be >= 1"));
    }
    fractional_charge(label)?.recip()?.scale(windings as i64)
}

pub fn flux_quantization_weber(
    label: StateLabel,
    windings: u32,
    consts: &PhysicalConstants,
) -> Result<f64> {
    Ok(flux_quantization(label, windings)?.to_f64() * consts.flux_quantum())
}

/// e*(ψ₁, n) + e*(ψ₂, n+1), in units of e.
pub fn electron_composition(n: u32) -> Result<Fraction> {
    let n = nonzero(n, "electron composition")?;
    branch_fraction(Branch::Psi1, n)?.checked_add(branch_fraction(Branch::Psi2, n + 1)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(n: i64, d: i64) -> Fraction {
        Fraction::new(n, d).unwrap()
    }

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-14 * b.abs().max(1.0)
    }

    #[test]
    fn filling_ratio_examples() {
        assert_eq!(
            filling_ratio(StateLabel::psi1(2).unwrap()).unwrap(),
            f(2, 5)
        );
        assert_eq!(
            filling_ratio(StateLabel::psi2(4).unwrap()).unwrap(),
            f(4, 7)
        );
        for n in 1..200 {
            for b in Branch::BOTH {
                let label = StateLabel::new(b, n).unwrap();
                assert_eq!(
                    filling_ratio(label).unwrap(),
                    crate::transport::hall_conductivity(label).unwrap()
                );
            }
        }
        assert!(filling_ratio(StateLabel::psi1(0).unwrap()).is_err());
    }

    #[test]
    fn conjugation_examples() {
        assert!(conjugation_check(1).unwrap());
        assert!(conjugation_check(7).unwrap());
        assert_eq!(branch_fraction(Branch::Psi2, -1).unwrap(), f(1, 3));
        assert!(conjugation_check(0).is_err());
    }

    #[test]
    fn dual_examples() {
        assert_eq!(dual_transform(1, 5.0, -3.0).unwrap(), (5.0, -3.0));
        assert_eq!(dual_transform(2, 6.0, 4.0).unwrap(), (3.0, 2.0));
        assert!(dual_transform(0, 1.0, 1.0).is_err());

        assert_eq!(dual_conductivities(1).unwrap(), (f(1, 3), f(-1, 1)));
        assert_eq!(dual_conductivities(4).unwrap(), (f(1, 6), f(1, 2)));
        assert!(matches!(dual_conductivities(2), Err(Error::Pole { .. })));
        assert_eq!(dual_conductivity(Branch::Psi1, 2).unwrap(), f(1, 4));
    }

    #[test]
    fn preservation_examples() {
        let a = preservation_angles(4, WindingNumber(1)).unwrap();
        assert!(close(a.angle, PI / 2.0));
        assert_eq!(a.pi_multiple, Some(f(1, 2)));
        assert_eq!(preservation_angles(3, WindingNumber(0)).unwrap().angle, 0.0);
        assert!(close(
            preservation_angles(1, WindingNumber(1)).unwrap().angle,
            2.0 * PI
        ));
        assert!(close(
            preservation_angles(2, WindingNumber(-1)).unwrap().angle,
            -PI
        ));
    }

    #[test]
    fn reflection_examples() {
        let r = reflection_angles(1, WindingNumber(0)).unwrap();
        assert!(close(r.angle.angle, PI));
        assert_eq!(
            reflection_angles(3, WindingNumber(1)).unwrap().ratio,
            f(1, 3)
        );
        assert_eq!(
            reflection_angles(3, WindingNumber(2)).unwrap().ratio,
            f(2, 5)
        );
        for n in 1..20 {
            for w in 1..20 {
                let t1 = preservation_angles(n, WindingNumber(w)).unwrap();
                let t2 = reflection_angles(n, WindingNumber(w)).unwrap();
                let ratio = t1
                    .pi_multiple
                    .unwrap()
                    .checked_div(t2.angle.pi_multiple.unwrap())
                    .unwrap();
                assert_eq!(ratio, t2.angle_ratio);
                assert_eq!(ratio, t2.ratio.scale(2).unwrap());
                assert_eq!(
                    t2.ratio,
                    filling_ratio(StateLabel::psi1(w as u32).unwrap()).unwrap()
                );
            }
        }
    }

    #[test]
    fn ab_phase_examples() {
        let c = PhysicalConstants::si();
        assert!(close(ab_phase(c.e, c.h / c.e, &c), 2.0 * PI));
        assert_eq!(ab_phase(c.e, 0.0, &c), 0.0);
        assert!(close(ab_phase(c.e / 3.0, c.h / c.e, &c), 2.0 * PI / 3.0));
    }

    #[test]
    fn rotation_examples() {
        let c = PhysicalConstants::si();
        let t = rotation_unit_flux(StateLabel::psi1(1).unwrap(), &c).unwrap();
        assert_eq!(t.pi_multiple, Some(f(2, 3)));
        assert!(close(t.angle, 2.0 * PI / 3.0));
        let t = rotation_unit_flux(StateLabel::psi2(2).unwrap(), &c).unwrap();
        assert_eq!(t.pi_multiple, Some(f(2, 3)));
        assert!(close(t.angle, 2.0 * PI / 3.0));
        assert!(close(
            rotation_from_flux(c.e, c.h / c.e, 1, &c).unwrap(),
            2.0 * PI
        ));
        for n in 1..50u32 {
            for b in Branch::BOTH {
                let t = rotation_unit_flux(StateLabel::new(b, n).unwrap(), &c).unwrap();
                let odd = 2 * n as i64 - b.phase_sign();
                assert_eq!(t.pi_multiple, Some(f(2, odd)));
            }
        }
    }

    #[test]
    fn flux_examples() {
        assert_eq!(
            flux_quantization(StateLabel::psi2(1).unwrap(), 1).unwrap(),
            Fraction::ONE
        );
        assert_eq!(
            flux_quantization(StateLabel::psi1(1).unwrap(), 1).unwrap(),
            f(3, 1)
        );
        assert_eq!(
            flux_quantization(StateLabel::psi1(2).unwrap(), 2).unwrap(),
            f(5, 1)
        );
        assert!(flux_quantization(StateLabel::psi1(2).unwrap(), 0).is_err());
        let c = PhysicalConstants::si();
        let wb = flux_quantization_weber(StateLabel::psi1(1).unwrap(), 1, &c).unwrap();
        assert!(close(wb, 3.0 * c.h / c.e));
    }

    #[test]
    fn composition_examples() {
        assert_eq!(electron_composition(1).unwrap(), Fraction::ONE);
        assert_eq!(electron_composition(3).unwrap(), Fraction::ONE);
        assert_eq!(
            branch_fraction(Branch::Psi1, 3)
                .unwrap()
                .checked_add(branch_fraction(Branch::Psi2, 4).unwrap())
                .unwrap(),
            Fraction::ONE
        );
        assert!(electron_composition(0).is_err());
    }
}
