//! Brute-force polar quadrature used to cross-check the closed forms.
//!
//! The angular integral is a fixed Gauss–Legendre rule over the θ window;
//! the radial integral is adaptive, bisecting panels until a panel's
//! Gauss–Legendre estimate agrees with the sum over its two halves. The
//! area element r dr dθ is applied here, not by the integrand.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::oscillator::{
    angular_momentum, ln_radial_amplitude, radial_peak, wavefunction, OscillatorParams, StateLabel,
    MAX_N,
};
use crate::transport::{current_density, current_moment};

/// Gauss–Legendre nodes and weights on [−1, 1].
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    /// Roots of Pₙ by Newton iteration from the Tricomi initial guess.
    pub fn new(order: usize) -> Self {
        assert!(order >= 1, "Gauss-Legendre order must be positive");
        let n = order;
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let nf = n as f64;
        for i in 0..n.div_ceil(2) {
            let mut x = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() <= 1e-16 * x.abs().max(1.0) {
                    let (_, d) = legendre_with_derivative(n, x);
                    dp = d;
                    break;
                }
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
        }
        Self { nodes, weights }
    }

    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    /// ∫ₐᵇ f over one panel.
    pub fn integrate<F: FnMut(f64) -> f64>(&self, a: f64, b: f64, mut f: F) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(x, w)| w * f(mid + half * x))
            .sum::<f64>()
            * half
    }
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Quadrature controls.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadratureSpec {
    pub r_max: f64,
    pub radial_points: usize,
    pub angular_points: usize,
    pub tol: f64,
}

const MIN_POINTS: usize = 16;
const INITIAL_PANELS: usize = 8;
const MAX_DEPTH: u32 = 40;
/// Cap on panel bisections per 1D integral.
const MAX_SUBDIVISIONS: usize = 20_000;

impl QuadratureSpec {
    pub fn new(r_max: f64, radial_points: usize, angular_points: usize, tol: f64) -> Result<Self> {
        if !(r_max.is_finite() && r_max > 0.0) {
            return Err(invalid(
                "r_max",
                format!("must be finite and > 0, got {r_max}"),
            ));
        }
        if radial_points < MIN_POINTS {
            return Err(invalid("radial_points", format!("must be >= {MIN_POINTS}")));
        }
        if angular_points < MIN_POINTS {
            return Err(invalid(
                "angular_points",
                format!("must be >= {MIN_POINTS}"),
            ));
        }
        if !(tol > 0.0 && tol <= 1e-2) {
            return Err(invalid("tol", format!("must lie in (0, 1e-2], got {tol}")));
        }
        Ok(Self {
            r_max,
            radial_points,
            angular_points,
            tol,
        })
    }

    /// r_max = √((n + 20)/α). The mass of |ψ|² outside is Γ(n+1, 2n+40)/n!,
    /// below 1e-15 for n <= 50; n + 10 leaves ~2e-8 at n = 7.
    pub fn for_state(n: u32, params: &OscillatorParams, tol: f64) -> Result<Self> {
        Self::new(((n as f64 + 20.0) / params.alpha()).sqrt(), 16, 32, tol)
    }

    pub fn refined(&self) -> Self {
        Self {
            radial_points: 2 * self.radial_points,
            angular_points: 2 * self.angular_points,
            ..*self
        }
    }
}

/// A converged integral with its error estimate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Estimate {
    pub value: f64,
    pub error: f64,
}

/// Adaptive 1D integration of a (value, magnitude) pair over [a, b].
///
/// The magnitude channel sets the absolute error target
/// tol·∫|f|, so integrals that cancel to zero still converge.
fn adaptive<F>(f: F, a: f64, b: f64, rule: &GaussLegendre, tol: f64) -> Result<Estimate>
where
    F: Fn(f64) -> (f64, f64),
{
    let panel = |lo: f64, hi: f64| rule.integrate(lo, hi, |x| f(x).0);
    let magnitude = |lo: f64, hi: f64| rule.integrate(lo, hi, |x| f(x).1);

    let width = (b - a) / INITIAL_PANELS as f64;
    let mut scale = 0.0;
    let mut stack = Vec::with_capacity(64);
    for i in (0..INITIAL_PANELS).rev() {
        let lo = a + i as f64 * width;
        let hi = if i + 1 == INITIAL_PANELS {
            b
        } else {
            lo + width
        };
        scale += magnitude(lo, hi);
        stack.push((lo, hi, panel(lo, hi), 0u32));
    }
    let target = tol * scale.max(f64::MIN_POSITIVE);
    let total_width = b - a;

    let mut value = 0.0;
    let mut error = 0.0;
    let mut converged = true;
    let mut subdivisions = 0usize;
    // depth-first, left to right: deterministic summation order
    while let Some((lo, hi, whole, depth)) = stack.pop() {
        let mid = 0.5 * (lo + hi);
        let left = panel(lo, mid);
        let right = panel(mid, hi);
        let diff = (left + right - whole).abs();
        let local = target * (hi - lo) / total_width;
        if diff <= local || depth >= MAX_DEPTH || subdivisions >= MAX_SUBDIVISIONS {
            if diff > local {
                converged = false;
            }
            value += left + right;
            error += diff;
        } else {
            subdivisions += 1;
            stack.push((mid, hi, right, depth + 1));
            stack.push((lo, mid, left, depth + 1));
        }
    }
    if converged {
        Ok(Estimate { value, error })
    } else {
        Err(Error::Accuracy {
            best_estimate: value,
            error_estimate: error,
        })
    }
}

/// ∫∫ f(r, θ) r dr dθ over r ∈ [0, r_max], θ ∈ [θ_lo, θ_hi].
pub fn integrate_polar_sector<F>(
    integrand: F,
    spec: &QuadratureSpec,
    theta_lo: f64,
    theta_hi: f64,
) -> Result<Estimate>
where
    F: Fn(f64, f64) -> f64,
{
    let radial = GaussLegendre::new(spec.radial_points);
    let angular = GaussLegendre::new(spec.angular_points);
    let ring = |r: f64| {
        let mut abs = 0.0;
        let half = 0.5 * (theta_hi - theta_lo);
        let mid = 0.5 * (theta_hi + theta_lo);
        let mut value = 0.0;
        for (x, w) in angular.nodes.iter().zip(&angular.weights) {
            let v = integrand(r, mid + half * x);
            value += w * v;
            abs += w * v.abs();
        }
        (r * value * half, r * abs * half.abs())
    };
    adaptive(ring, 0.0, spec.r_max, &radial, spec.tol)
}

/// ∫∫ f(r, θ) r dr dθ over the disk of radius r_max.
pub fn integrate_polar<F>(integrand: F, spec: &QuadratureSpec) -> Result<Estimate>
where
    F: Fn(f64, f64) -> f64,
{
    integrate_polar_sector(integrand, spec, 0.0, 2.0 * PI)
}

/// ∫ₐᵇ f(x) dx with the same adaptive scheme.
pub fn integrate_line<F>(f: F, a: f64, b: f64, spec: &QuadratureSpec) -> Result<Estimate>
where
    F: Fn(f64) -> f64,
{
    let rule = GaussLegendre::new(spec.radial_points);
    adaptive(
        |x| {
            let v = f(x);
            (v, v.abs())
        },
        a,
        b,
        &rule,
        spec.tol,
    )
}

/// Closed form versus brute-force number for one quantity.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleReport {
    pub quantity: String,
    pub closed_form: f64,
    pub numeric: f64,
    pub abs_residual: f64,
    pub convention: String,
}

impl OracleReport {
    pub fn new(
        quantity: impl Into<String>,
        closed_form: f64,
        numeric: f64,
        convention: impl Into<String>,
    ) -> Self {
        Self {
            quantity: quantity.into(),
            closed_form,
            numeric,
            abs_residual: (closed_form - numeric).abs(),
            convention: convention.into(),
        }
    }

    /// |closed − numeric| / |closed|, or the absolute residual when the
    /// closed form is zero.
    pub fn relative_residual(&self) -> f64 {
        if self.closed_form == 0.0 {
            self.abs_residual
        } else {
            self.abs_residual / self.closed_form.abs()
        }
    }

    /// numeric / closed form.
    pub fn ratio(&self) -> f64 {
        self.numeric / self.closed_form
    }
}

fn oracle_n(label: StateLabel, max: u32) -> Result<()> {
    if label.n > max {
        return Err(invalid(
            "n",
            format!("oracle checks support n <= {max}, got {}", label.n),
        ));
    }
    Ok(())
}

/// Largest n the integration checks accept.
pub const MAX_ORACLE_N: u32 = 50;

/// ∫|ψ|² dx dy against 1.
pub fn check_normalization(
    label: StateLabel,
    params: &OscillatorParams,
    spec: &QuadratureSpec,
) -> Result<OracleReport> {
    oracle_n(label, MAX_ORACLE_N)?;
    let integral = integrate_polar(
        |r, theta| wavefunction(label, params, r, theta).map_or(f64::NAN, |psi| psi.norm_sqr()),
        spec,
    )?;
    Ok(OracleReport::new(
        format!("normalization {} n={}", label.branch, label.n),
        1.0,
        integral.value,
        "full plane, r dr dθ",
    ))
}

/// ∫ψ̄(−iħ∂_θ)ψ dx dy against ±nħ. The θ-derivative acts analytically on
/// the e^{±inθ} factor.
pub fn check_angular_momentum(
    label: StateLabel,
    params: &OscillatorParams,
    spec: &QuadratureSpec,
) -> Result<OracleReport> {
    oracle_n(label, MAX_ORACLE_N)?;
    let hbar = params.constants().hbar;
    let winding = label.branch.phase_sign() as f64 * label.n as f64;
    let integral = integrate_polar(
        |r, theta| match wavefunction(label, params, r, theta) {
            Ok(psi) => {
                let d_theta = psi * num_complex::Complex64::new(0.0, winding);
                let l_psi = d_theta * num_complex::Complex64::new(0.0, -hbar);
                (psi.conj() * l_psi).re
            }
            Err(_) => f64::NAN,
        },
        spec,
    )?;
    Ok(OracleReport::new(
        format!("angular_momentum {} n={}", label.branch, label.n),
        angular_momentum(label) as f64 * hbar,
        integral.value,
        "full plane, analytic θ-derivative",
    ))
}

/// Golden-section maximum of r ↦ |ψ(r, 0)|² against √(nħ/mω).
pub fn check_radial_peak(label: StateLabel, params: &OscillatorParams) -> Result<OracleReport> {
    if label.n == 0 {
        return Err(Error::UndefinedAtZero {
            what: "radial peak check",
        });
    }
    oracle_n(label, MAX_N)?;
    let r_max = ((label.n as f64 + 20.0) / params.alpha()).sqrt();
    // |ψ|² and ln|ψ|² share the maximizer; the log avoids underflow
    let objective = |r: f64| ln_radial_amplitude(label.n, params, r).unwrap_or(f64::NEG_INFINITY);
    let peak = golden_section_max(objective, 0.0, r_max, 1e-12 * r_max);
    Ok(OracleReport::new(
        format!("radial_peak {} n={}", label.branch, label.n),
        radial_peak(label.n, params)?,
        peak,
        "argmax of |ψ(r, 0)|², golden section",
    ))
}

fn golden_section_max<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64, x_tol: f64) -> f64 {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..300 {
        if (b - a).abs() <= x_tol {
            break;
        }
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    0.5 * (a + b)
}

/// Integrates the printed current densities under three conventions and
/// reports each against the printed current moment. Reports only; no
/// convention is declared correct.
///
/// - full plane: ∫∫ J dx dy over the disk (both components),
/// - half plane: θ ∈ [0, π] (both components),
/// - line: ∫ J_x dy along x = 0, y ∈ [−r_max, r_max].
pub fn probe_current_moment_conventions(
    label: StateLabel,
    params: &OscillatorParams,
    spec: &QuadratureSpec,
) -> Result<Vec<OracleReport>> {
    if label.n == 0 {
        return Err(Error::UndefinedAtZero {
            what: "current moment probe",
        });
    }
    oracle_n(label, MAX_ORACLE_N)?;
    let printed = current_moment(label, params)?;
    let jx = |r: f64, t: f64| current_density(label, params, r, t).map_or(f64::NAN, |j| j.0);
    let jy = |r: f64, t: f64| current_density(label, params, r, t).map_or(f64::NAN, |j| j.1);
    let tag = |q: &str| format!("{q} {} n={}", label.branch, label.n);

    let mut reports = Vec::with_capacity(5);
    for (name, lo, hi) in [("full-plane", 0.0, 2.0 * PI), ("half-plane", 0.0, PI)] {
        let ix = integrate_polar_sector(jx, spec, lo, hi)?;
        let iy = integrate_polar_sector(jy, spec, lo, hi)?;
        reports.push(OracleReport::new(
            tag("current_moment_x"),
            printed.re,
            ix.value,
            name,
        ));
        reports.push(OracleReport::new(
            tag("current_moment_y"),
            printed.im,
            iy.value,
            name,
        ));
    }
    let line = integrate_line(
        |y| {
            let theta = if y >= 0.0 { PI / 2.0 } else { -PI / 2.0 };
            jx(y.abs(), theta)
        },
        -spec.r_max,
        spec.r_max,
        spec,
    )?;
    reports.push(OracleReport::new(
        tag("current_moment_x"),
        printed.re,
        line.value,
        "line x=0",
    ));
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::{MagneticField, PhysicalConstants};

    fn natural() -> OscillatorParams {
        OscillatorParams::new(PhysicalConstants::natural(), 1.0, 1.0).unwrap()
    }

    /// α = 1 in natural units.
    fn alpha_one() -> OscillatorParams {
        OscillatorParams::new(PhysicalConstants::natural(), 2.0, 1.0).unwrap()
    }

    #[test]
    fn gauss_legendre_exact_for_polynomials() {
        for order in [1, 2, 5, 16, 33] {
            let rule = GaussLegendre::new(order);
            let w: f64 = rule.weights.iter().sum();
            assert!((w - 2.0).abs() < 1e-14, "order {order}");
            let deg = 2 * order - 1;
            let got = rule.integrate(0.0, 1.0, |x| x.powi(deg as i32));
            assert!(
                (got - 1.0 / (deg as f64 + 1.0)).abs() < 1e-14,
                "order {order}"
            );
        }
    }

    #[test]
    fn spec_validation() {
        assert!(QuadratureSpec::new(0.0, 16, 16, 1e-8).is_err());
        assert!(QuadratureSpec::new(1.0, 8, 16, 1e-8).is_err());
        assert!(QuadratureSpec::new(1.0, 16, 15, 1e-8).is_err());
        assert!(QuadratureSpec::new(1.0, 16, 16, 0.0).is_err());
        assert!(QuadratureSpec::new(1.0, 16, 16, 0.1).is_err());
        assert!(QuadratureSpec::new(1.0, 16, 16, 1e-2).is_ok());
    }

    #[test]
    fn unit_disk_area() {
        let spec = QuadratureSpec::new(1.0, 16, 16, 1e-12).unwrap();
        let area = integrate_polar(|_, _| 1.0, &spec).unwrap();
        assert!((area.value - PI).abs() < 1e-13);
    }

    #[test]
    fn odd_integrand_vanishes() {
        let spec = QuadratureSpec::new(6.0, 16, 32, 1e-12).unwrap();
        let v = integrate_polar(|r, t| r * (-2.0 * r * r).exp() * t.sin(), &spec).unwrap();
        assert!(v.value.abs() < 1e-12);
    }

    #[test]
    fn gaussian_state_normalized() {
        let p = alpha_one();
        let spec = QuadratureSpec::for_state(0, &p, 1e-12).unwrap();
        let rep = check_normalization(StateLabel::psi2(0).unwrap(), &p, &spec).unwrap();
        assert!(rep.abs_residual < 1e-10, "{rep:?}");
    }

    #[test]
    fn normalization_examples() {
        let p = alpha_one();
        for (label, bound) in [
            (StateLabel::psi1(7).unwrap(), 1e-8),
            (StateLabel::psi2(20).unwrap(), 1e-8),
        ] {
            let spec = QuadratureSpec::for_state(label.n, &p, 1e-12).unwrap();
            let rep = check_normalization(label, &p, &spec).unwrap();
            assert!(rep.abs_residual < bound, "{rep:?}");
        }
        let spec = QuadratureSpec::for_state(51, &p, 1e-12).unwrap();
        assert!(check_normalization(StateLabel::psi1(51).unwrap(), &p, &spec).is_err());
    }

    #[test]
    fn angular_momentum_examples() {
        let p = natural();
        for label in [StateLabel::psi2(3).unwrap(), StateLabel::psi1(3).unwrap()] {
            let spec = QuadratureSpec::for_state(3, &p, 1e-12).unwrap();
            let rep = check_angular_momentum(label, &p, &spec).unwrap();
            assert!(rep.relative_residual() < 1e-8, "{rep:?}");
            assert_eq!(rep.numeric.signum(), label.branch.phase_sign() as f64);
        }
        let spec = QuadratureSpec::for_state(0, &p, 1e-12).unwrap();
        let rep = check_angular_momentum(StateLabel::psi1(0).unwrap(), &p, &spec).unwrap();
        assert!(rep.abs_residual < 1e-12);
    }

    #[test]
    fn radial_peak_examples() {
        // ħ = m = ω = 1: |ψ₁|² ∝ r² e^{−r²}, maximal at r = 1
        let p = natural();
        let rep = check_radial_peak(StateLabel::psi2(1).unwrap(), &p).unwrap();
        assert!((rep.numeric - 1.0).abs() < 1e-6);
        let rep = check_radial_peak(StateLabel::psi1(4).unwrap(), &p).unwrap();
        assert!(rep.relative_residual() < 1e-6);
        assert!((rep.numeric - 2.0).abs() < 2e-6);

        let si = PhysicalConstants::si();
        let b = MagneticField::new(1.0).unwrap();
        let landau = OscillatorParams::landau(si, b).unwrap();
        let lb = crate::constants::magnetic_length(&si, b).unwrap();
        let rep = check_radial_peak(StateLabel::psi2(9).unwrap(), &landau).unwrap();
        assert!((rep.numeric / (3.0 * lb) - 1.0).abs() < 1e-6, "{rep:?}");
        assert!(check_radial_peak(StateLabel::psi2(0).unwrap(), &p).is_err());
    }

    #[test]
    fn current_probe_landscape() {
        let p = natural();
        for label in [StateLabel::psi2(1).unwrap(), StateLabel::psi1(4).unwrap()] {
            let spec = QuadratureSpec::for_state(label.n, &p, 1e-12).unwrap();
            let reps = probe_current_moment_conventions(label, &p, &spec).unwrap();
            assert_eq!(reps.len(), 5);
            let full_x = &reps[0];
            assert_eq!(full_x.convention, "full-plane");
            assert!(full_x.numeric.abs() < 1e-10, "{full_x:?}");
            assert!(reps[1].numeric.abs() < 1e-10);
            // the half plane keeps the functional form, scaled by 1/2
            let half_x = &reps[2];
            assert!((half_x.ratio() - 0.5).abs() < 1e-9, "{half_x:?}");
            assert!(reps[3].numeric.abs() < 1e-10);
            assert!(reps[4].numeric.abs() < 1e-10);
        }
    }

    #[test]
    fn refinement_is_stable() {
        let p = natural();
        let label = StateLabel::psi1(5).unwrap();
        let spec = QuadratureSpec::for_state(5, &p, 1e-10).unwrap();
        let coarse = check_normalization(label, &p, &spec).unwrap();
        let fine = check_normalization(label, &p, &spec.refined()).unwrap();
        assert!((coarse.numeric - fine.numeric).abs() < spec.tol);
    }

    #[test]
    fn non_convergence_reports_best_estimate() {
        let spec = QuadratureSpec::new(1.0, 16, 16, 1e-12).unwrap();
        // sin(1/r³) oscillates without bound near the origin
        let res = integrate_polar(|r, _| (1.0 / (r * r * r)).sin() / r, &spec);
        match res {
            Err(Error::Accuracy { best_estimate, .. }) => assert!(best_estimate.is_finite()),
            other => panic!("expected accuracy error, got {other:?}"),
        }
    }
}
