use anyhow::Result;
use fqhe_core::discrepancy::ledger;
use fqhe_core::landau::run_sweep;
use fqhe_core::oscillator::{
    angular_momentum, energy, momentum_expectation, normalization_constant, radial_peak,
    MomentumComponent,
};
use fqhe_core::quadrature::{
    check_angular_momentum, check_normalization, check_radial_peak,
    probe_current_moment_conventions, OracleReport, QuadratureSpec, MAX_ORACLE_N,
};
use fqhe_core::symmetry::{
    ab_phase, electron_composition, flux_quantization, preservation_angles, reflection_angles,
    WindingNumber,
};
use fqhe_core::transport::{fractional_charge, hall_conductivity_quantized, hall_resistance};
use fqhe_core::{
    Branch, Error, MagneticField, OscillatorParams, PhysicalConstants, StateLabel, UnitSystem,
};

use crate::config::SweepFile;
use crate::table::{Cell, Table};

/// Oscillator used by `states` and `verify`: an electron at ω_c(B) in SI,
/// m = ω = 1 in natural units.
pub fn oscillator(units: UnitSystem, field_tesla: f64) -> Result<OscillatorParams> {
    Ok(match units {
        UnitSystem::Si => {
            OscillatorParams::landau(PhysicalConstants::si(), MagneticField::new(field_tesla)?)?
        }
        UnitSystem::Natural => OscillatorParams::new(PhysicalConstants::natural(), 1.0, 1.0)?,
    })
}

pub fn states(n_max: u32, params: &OscillatorParams) -> Result<Table> {
    let mut t = Table::new(&[
        "branch", "n", "energy_J", "Lz_hbar", "r0_m", "C_n", "pz", "pzbar",
    ]);
    for branch in Branch::BOTH {
        for n in 0..=n_max {
            let label = StateLabel::new(branch, n)?;
            let p = |c| momentum_expectation(label, c, params);
            t.push(vec![
                branch.to_string().into(),
                n.into(),
                energy(n, params)?.into(),
                angular_momentum(label).into(),
                radial_peak(n, params)?.into(),
                normalization_constant(n, params)?.into(),
                p(MomentumComponent::Pz)?.into(),
                p(MomentumComponent::PzBar)?.into(),
            ]);
        }
    }
    Ok(t)
}

/// Both series; the SI columns use SI constants whatever `--units` says.
pub fn series(n_max: u32) -> Result<Table> {
    let si = PhysicalConstants::si();
    let mut t = Table::new(&[
        "n",
        "branch",
        "charge_num",
        "charge_den",
        "sigma_xy_num",
        "sigma_xy_den",
        "sigma_xy_SI_siemens",
        "R_H_ohm",
    ]);
    if n_max == 0 {
        return Err(Error::UndefinedAtZero {
            what: "conjugate series",
        }
        .into());
    }
    for branch in Branch::BOTH {
        for n in 1..=n_max {
            let label = StateLabel::new(branch, n)?;
            let charge = fractional_charge(label)?;
            let sigma = hall_conductivity_quantized(label, &si)?;
            t.push(vec![
                n.into(),
                branch.to_string().into(),
                charge.numerator().into(),
                charge.denominator().into(),
                sigma.multiple.numerator().into(),
                sigma.multiple.denominator().into(),
                sigma.value.into(),
                hall_resistance(label, &si)?.value.into(),
            ]);
        }
    }
    Ok(t)
}

pub fn sweep(file: &SweepFile, units: UnitSystem) -> Result<Table> {
    let config = file.to_sweep()?;
    let consts = fqhe_core::constants_for(file.units.unwrap_or(units));
    let mut t = Table::new(&[
        "B_tesla",
        "n_cont",
        "n_int",
        "on_crossing",
        "R_H_ohm",
        "R_xx_ohm",
        "sigma_xy_S",
        "filling_i",
    ]);
    for r in run_sweep(&config, &consts)? {
        t.push(vec![
            r.b.into(),
            r.n_cont.into(),
            r.n_int.map_or(Cell::Empty, Cell::from),
            r.on_crossing.into(),
            Cell::opt_float(r.r_h),
            Cell::opt_float(r.r_xx),
            Cell::opt_float(r.sigma_xy),
            r.filling_i.map_or(Cell::Empty, Cell::from),
        ]);
    }
    Ok(t)
}

pub fn phases(n_max: u32, nw_max: u32, consts: &PhysicalConstants) -> Result<Table> {
    let mut t = Table::new(&[
        "n",
        "N_w",
        "theta1_rad",
        "theta1_over_pi",
        "theta2_rad",
        "theta2_over_pi",
        "theta_ratio",
        "angle_quotient",
        "ab_phase_psi1_rad",
        "ab_phase_psi2_rad",
        "flux_psi1_h_over_e",
        "flux_psi2_h_over_e",
        "electron_composition",
    ]);
    for n in 1..=n_max {
        for nw in 1..=nw_max {
            let w = WindingNumber(nw as i64);
            let t1 = preservation_angles(n, w)?;
            let t2 = reflection_angles(n, w)?;
            // unit flux h/e through a loop carrying q₀ = e*·e
            let ab = |b| -> Result<f64> {
                let q = fractional_charge(StateLabel::new(b, n)?)?.to_f64() * consts.e;
                Ok(ab_phase(q, consts.flux_quantum(), consts))
            };
            let frac =
                |f: Option<fqhe_core::Fraction>| f.map_or(Cell::Empty, |f| f.to_string().into());
            t.push(vec![
                n.into(),
                nw.into(),
                t1.angle.into(),
                frac(t1.pi_multiple),
                t2.angle.angle.into(),
                frac(t2.angle.pi_multiple),
                t2.ratio.to_string().into(),
                t2.angle_ratio.to_string().into(),
                ab(Branch::Psi1)?.into(),
                ab(Branch::Psi2)?.into(),
                flux_quantization(StateLabel::psi1(n)?, nw)?
                    .to_string()
                    .into(),
                flux_quantization(StateLabel::psi2(n)?, nw)?
                    .to_string()
                    .into(),
                electron_composition(n)?.to_string().into(),
            ]);
        }
    }
    Ok(t)
}

/// Tolerance applied to the radial-peak argmax, independent of `--tolerance`:
/// the maximum is quadratic, so its location is only resolvable to ~√ε.
const PEAK_TOLERANCE: f64 = 1e-6;

/// Number of n values the current-moment probe is reported for.
const PROBE_STATES: u32 = 3;

pub struct VerifyOutcome {
    pub table: Table,
    pub failures: usize,
}

struct Report {
    table: Table,
    failures: usize,
}

impl Report {
    fn line(&mut self, kind: &str, rep: &OracleReport, status: &str, tolerance: Option<f64>) {
        self.table.push(vec![
            kind.into(),
            rep.quantity.as_str().into(),
            rep.convention.as_str().into(),
            status.into(),
            rep.closed_form.into(),
            rep.numeric.into(),
            rep.abs_residual.into(),
            rep.relative_residual().into(),
            Cell::opt_float(tolerance),
        ]);
    }

    fn check(
        &mut self,
        quantity: String,
        result: fqhe_core::Result<OracleReport>,
        tol: f64,
        relative: bool,
    ) {
        match result {
            Ok(rep) => {
                let residual = if relative {
                    rep.relative_residual()
                } else {
                    rep.abs_residual
                };
                let pass = residual < tol;
                if !pass {
                    self.failures += 1;
                }
                self.line(
                    "oracle",
                    &rep,
                    if pass { "pass" } else { "fail" },
                    Some(tol),
                );
            }
            Err(err) => {
                self.failures += 1;
                let numeric = match err {
                    Error::Accuracy { best_estimate, .. } => best_estimate,
                    _ => f64::NAN,
                };
                let rep = OracleReport::new(quantity, f64::NAN, numeric, err.to_string());
                self.line("oracle", &rep, "fail", Some(tol));
            }
        }
    }
}

pub fn verify(n_max: u32, tolerance: f64, params: &OscillatorParams) -> Result<VerifyOutcome> {
    if n_max > MAX_ORACLE_N {
        return Err(anyhow::anyhow!(
            "--n-max must be <= {MAX_ORACLE_N}, got {n_max}"
        ));
    }
    if !(tolerance > 0.0 && tolerance.is_finite()) {
        return Err(anyhow::anyhow!(
            "--tolerance must be finite and > 0, got {tolerance}"
        ));
    }
    // integrate well below the acceptance tolerance
    let quad_tol = (tolerance * 1e-2).clamp(1e-12, 1e-2);
    let mut report = Report {
        table: Table::new(&[
            "kind",
            "quantity",
            "convention",
            "status",
            "closed_form",
            "numeric",
            "abs_residual",
            "relative_residual",
            "tolerance",
        ]),
        failures: 0,
    };

    for branch in Branch::BOTH {
        for n in 0..=n_max {
            let label = StateLabel::new(branch, n)?;
            let spec = QuadratureSpec::for_state(n, params, quad_tol)?;
            report.check(
                format!("normalization {branch} n={n}"),
                check_normalization(label, params, &spec),
                tolerance,
                false,
            );
            // L_z = 0 at n = 0, where only an absolute residual makes sense
            report.check(
                format!("angular_momentum {branch} n={n}"),
                check_angular_momentum(label, params, &spec),
                tolerance,
                n > 0,
            );
            if n > 0 {
                report.check(
                    format!("radial_peak {branch} n={n}"),
                    check_radial_peak(label, params),
                    PEAK_TOLERANCE.max(tolerance),
                    true,
                );
            }
        }
    }

    for branch in Branch::BOTH {
        for n in 1..=n_max.min(PROBE_STATES) {
            let label = StateLabel::new(branch, n)?;
            let spec = QuadratureSpec::for_state(n, params, quad_tol)?;
            match probe_current_moment_conventions(label, params, &spec) {
                Ok(reps) => {
                    for rep in &reps {
                        report.line("probe", rep, "informational", None);
                    }
                }
                Err(err) => {
                    let rep = OracleReport::new(
                        format!("current_moment {branch} n={n}"),
                        f64::NAN,
                        f64::NAN,
                        err.to_string(),
                    );
                    report.line("probe", &rep, "informational", None);
                }
            }
        }
    }

    for entry in ledger(quad_tol)? {
        let rep = OracleReport::new(entry.id, entry.printed, entry.measured, entry.description);
        report.line("ledger", &rep, "informational", None);
    }

    Ok(VerifyOutcome {
        table: report.table,
        failures: report.failures,
    })
}
