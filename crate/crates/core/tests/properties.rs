use fqhe_core::constants::{cyclotron_frequency, magnetic_length};
use fqhe_core::landau::{allowed_fields, plateau_width, run_sweep, SweepConfig};
use fqhe_core::oscillator::{
    energy, momentum_expectation, radial_peak, wavefunction, MomentumComponent,
};
use fqhe_core::symmetry::{conjugation_check, electron_composition};
use fqhe_core::transport::{
    fractional_charge, hall_mobility, hall_resistance, hall_voltage, invert_resistivity,
    invert_transport, longitudinal_resistivity, sheet_current,
};
use fqhe_core::{
    Branch, Fraction, MagneticField, OscillatorParams, PhysicalConstants, SampleGeometry,
    StateLabel,
};
use proptest::prelude::*;

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

fn landau(b: f64) -> OscillatorParams {
    OscillatorParams::landau(PhysicalConstants::si(), MagneticField::new(b).unwrap()).unwrap()
}

proptest! {
    #[test]
    fn magnetic_length_identity(b in 1e-3f64..1e3) {
        let c = PhysicalConstants::si();
        let lb = magnetic_length(&c, MagneticField::new(b).unwrap()).unwrap();
        prop_assert!((lb * lb * c.e * b / c.hbar - 1.0).abs() < 1e-12);
    }

    #[test]
    fn cyclotron_frequency_is_linear(b in 1e-3f64..1e3, k in 0.5f64..20.0) {
        let c = PhysicalConstants::si();
        let w1 = cyclotron_frequency(&c, MagneticField::new(b).unwrap(), c.m_e).unwrap();
        let wk = cyclotron_frequency(&c, MagneticField::new(k * b).unwrap(), c.m_e).unwrap();
        prop_assert!(rel(wk, k * w1) < 1e-14);
    }

    #[test]
    fn fractions_reduce_and_round_trip(
        a in -10_000i64..10_000, b in 1i64..10_000,
        c in -10_000i64..10_000, d in 1i64..10_000,
    ) {
        let x = Fraction::new(a, b).unwrap();
        let y = Fraction::new(c, d).unwrap();
        prop_assert_eq!(x.checked_add(y).unwrap().checked_sub(y).unwrap(), x);
        let g = gcd(x.numerator().unsigned_abs(), x.denominator().unsigned_abs());
        prop_assert!(g == 1 || x.is_zero());
        prop_assert!(x.denominator() > 0);
    }

    #[test]
    fn transport_inversion_round_trips(sxx in -1e3f64..1e3, sxy in 1e-3f64..1e3) {
        let rho = invert_transport(sxx, sxy).unwrap();
        let back = invert_resistivity(rho.rho_xx, rho.rho_xy).unwrap();
        prop_assert!((back.sigma_xx - sxx).abs() <= 1e-12 * sxx.abs().max(sxy.abs()));
        prop_assert!(rel(back.sigma_xy, sxy) < 1e-12);
    }

    #[test]
    fn radial_peak_scaling(n in 0u32..100_000, b in 1e-2f64..1e2) {
        let p = landau(b);
        let r = radial_peak(n, &p).unwrap();
        let scaled = r * r * p.mass() * p.omega() / p.constants().hbar;
        if n == 0 {
            prop_assert_eq!(scaled, 0.0);
        } else {
            prop_assert!(rel(scaled, n as f64) < 1e-12);
        }
    }

    #[test]
    fn mobility_identity_is_parameter_independent(
        n in 1u32..=50,
        v_x in 1e-6f64..1e-3,
        length in 1e-5f64..1e-2,
        n_s in 1e14f64..1e17,
        b in 0.1f64..20.0,
    ) {
        let si = PhysicalConstants::si();
        let p = landau(b);
        let g = SampleGeometry::new(length, 1e-4, n_s).unwrap();
        let rho = longitudinal_resistivity(n, v_x, &g, &p).unwrap();
        let mu = hall_mobility(n, v_x, &g, &p).unwrap();
        let rh = hall_resistance(StateLabel::psi1(n).unwrap(), &si).unwrap().value;
        prop_assert!(rel(rho * mu, rh / b) < 1e-12);
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[test]
fn degeneracy_is_bit_identical() {
    let p = landau(1.0);
    for n in 0..=100 {
        let e1 = energy(StateLabel::psi1(n).unwrap().n, &p).unwrap();
        let e2 = energy(StateLabel::psi2(n).unwrap().n, &p).unwrap();
        assert_eq!(e1.to_bits(), e2.to_bits());
        assert!(rel(e1, (n as f64 + 1.0) * p.constants().hbar * p.omega()) < 1e-15);
    }
}

#[test]
fn conjugate_wavefunctions_on_grid() {
    let p = OscillatorParams::new(PhysicalConstants::natural(), 1.0, 1.0).unwrap();
    let mut checked = 0;
    for n in 0..10u32 {
        for i in 0..10 {
            for j in 0..10 {
                let r = 0.3 * i as f64;
                let theta = -3.0 + 0.6 * j as f64;
                let a = wavefunction(StateLabel::psi1(n).unwrap(), &p, r, theta).unwrap();
                let b = wavefunction(StateLabel::psi2(n).unwrap(), &p, r, theta).unwrap();
                assert!((a - b.conj()).norm() < 1e-14, "n={n} r={r} theta={theta}");
                checked += 1;
            }
        }
    }
    assert_eq!(checked, 1000);
}

#[test]
fn momentum_antisymmetry() {
    let p = landau(1.0);
    for n in 0..=50 {
        let get = |b, c| momentum_expectation(StateLabel::new(b, n).unwrap(), c, &p).unwrap();
        let pz1 = get(Branch::Psi1, MomentumComponent::Pz);
        let pzb1 = get(Branch::Psi1, MomentumComponent::PzBar);
        let pz2 = get(Branch::Psi2, MomentumComponent::Pz);
        let pzb2 = get(Branch::Psi2, MomentumComponent::PzBar);
        assert!(rel(pz1, -pzb2) < 1e-14);
        assert!(rel(pzb1, -pz2) < 1e-14);
    }
}

#[test]
fn conjugation_and_composition_to_ten_thousand() {
    for n in 1..=10_000 {
        assert!(conjugation_check(n).unwrap(), "n = {n}");
        assert_eq!(electron_composition(n).unwrap(), Fraction::ONE, "n = {n}");
    }
}

#[test]
fn half_charge_limit() {
    for b in Branch::BOTH {
        let e = fractional_charge(StateLabel::new(b, 500_000).unwrap()).unwrap();
        assert!((e.to_f64() - 0.5).abs() < 1e-6);
    }
}

#[test]
fn hall_voltage_is_current_times_resistance() {
    let si = PhysicalConstants::si();
    let p = landau(3.0);
    let g = SampleGeometry::new(1e-3, 2e-4, 3e15).unwrap();
    for n in 1..=50 {
        let v = hall_voltage(n, &g, &p).unwrap();
        let rh = hall_resistance(StateLabel::psi1(n).unwrap(), &si)
            .unwrap()
            .value;
        assert!(
            rel(v, sheet_current(n, &g, &p).unwrap() * rh) < 1e-12,
            "n = {n}"
        );
    }
}

#[test]
fn plateau_widths_telescope() {
    let c = PhysicalConstants::si();
    let n_s = 1e15;
    assert!(rel(plateau_width(1, n_s, &c).unwrap(), n_s * c.h / (2.0 * c.e)) < 1e-15);
    let fields = allowed_fields(n_s, 100, &c).unwrap();
    for n in 1..=100usize {
        let gap = fields[n - 1] - fields[n];
        assert!(
            rel(gap, plateau_width(n as u32, n_s, &c).unwrap()) < 1e-12,
            "n = {n}"
        );
    }
}

#[test]
fn sweep_is_a_monotone_staircase() {
    let c = PhysicalConstants::si();
    let config = SweepConfig {
        b_min: 0.1,
        b_max: 5.0,
        steps: 500,
        geometry: SampleGeometry::new(1e-3, 1e-4, 1e15).unwrap(),
        v_x: 1e-3,
        branch: Branch::Psi1,
    };
    let records = run_sweep(&config, &c).unwrap();
    assert_eq!(records.len(), 500);
    let levels: Vec<u32> = records.iter().filter_map(|r| r.n_int).collect();
    assert!(levels.windows(2).all(|w| w[0] >= w[1]));
    for r in &records {
        if let (Some(rh), Some(s)) = (r.r_h, r.sigma_xy) {
            assert!(rel(rh * s, 1.0) < 1e-15);
        }
    }
    assert_eq!(records, run_sweep(&config, &c).unwrap());
}
