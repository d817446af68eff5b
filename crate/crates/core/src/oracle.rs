//! First-principles check of the quantum-noise closed forms.
//!
//! The four travelling waves at the membrane (incident E_A, E_B and outgoing
//! E_C, E_D) are represented as quadrature coefficient vectors over the basis
//! {carrier, ℰ_v1, ℰ_v2}, where ℰ_v1/ℰ_v2 are the amplitude/phase vacuum
//! quadratures entering from the output port (unit single-sided spectral
//! density, vanishing cross-correlation). The radiation-pressure force is the
//! momentum-flux difference
//!
//! ```text
//! F = 𝒜 ε₀ [ (|E_C|² − |E_D|²) − (|E_B|² − |E_A|²) ]        (time-averaged)
//! ```
//!
//! evaluated keeping terms linear in the vacuum quadratures: the carrier (DC)
//! terms cancel by membrane symmetry, and terms quadratic in the vacuum modes
//! are dropped (linearization). The beam area 𝒜 and ε₀ cancel in the force
//! and are set to 1; the picture is quasi-static (no sideband-frequency
//! dependence), so recycling poles are outside its scope and are checked
//! analytically instead.
//!
//! The resulting force PSD must reproduce `quantum::rp_force_asd²` without
//! recycling; `verify` runs that comparison plus energy-conservation and
//! fringe-slope checks and reports worst-case errors.

use std::f64::consts::FRAC_1_SQRT_2;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::constants::{HBAR, SPEED_OF_LIGHT};
use crate::error::{Error, Result};
use crate::params::{MembraneParams, OpticsParams, RecyclingParams};
use crate::quantum::{output_power, rp_force_asd, signal_slope, QuantumNoiseInputs};

/// A travelling wave as quadrature coefficients over {carrier, ℰ_v1, ℰ_v2}.
///
/// The common normalization √(ħω₀/(𝒜cε₀))/√2 is carried symbolically (it
/// cancels in every output); the carrier slot holds the amplitude 𝒟 with
/// P₀ = ħω₀𝒟², and the vacuum slots hold plain numbers multiplying the
/// unit-spectral-density quadratures.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureField {
    /// Coefficients of the cos(ω₀t) quadrature.
    pub cos_coeffs: [f64; 3],
    /// Coefficients of the sin(ω₀t) quadrature.
    pub sin_coeffs: [f64; 3],
    /// Carrier angular frequency (rad/s), part of the symbolic normalization.
    pub omega0_rad_s: f64,
}

impl QuadratureField {
    /// Sum of squared coefficients over both quadratures; conserved by
    /// lossless scattering.
    pub fn quadrature_energy(&self) -> f64 {
        self.cos_coeffs
            .iter()
            .chain(&self.sin_coeffs)
            .map(|c| c * c)
            .sum()
    }
}

/// The two fields incident on the membrane for carrier power P₀.
///
/// The output-port vacuum reaches the membrane with perfectly *negative*
/// correlation between the two sides (opposite ℰ_v1, ℰ_v2 signs), which is
/// what couples it to the membrane motion.
pub fn incident_fields(p0_w: f64, optics: &OpticsParams) -> (QuadratureField, QuadratureField) {
    let omega0 = optics.omega0();
    let carrier = (p0_w / (HBAR * omega0)).sqrt();
    let e_a = QuadratureField {
        cos_coeffs: [carrier, FRAC_1_SQRT_2, 0.0],
        sin_coeffs: [0.0, 0.0, FRAC_1_SQRT_2],
        omega0_rad_s: omega0,
    };
    let e_b = QuadratureField {
        cos_coeffs: [carrier, -FRAC_1_SQRT_2, 0.0],
        sin_coeffs: [0.0, 0.0, -FRAC_1_SQRT_2],
        omega0_rad_s: omega0,
    };
    (e_a, e_b)
}

/// Same carrier, but with the vacuum entering from the *input* port: the
/// correlation between the two sides is perfectly positive and the net force
/// must vanish.
pub fn incident_fields_input_port(
    p0_w: f64,
    optics: &OpticsParams,
) -> (QuadratureField, QuadratureField) {
    let (e_a, _) = incident_fields(p0_w, optics);
    (e_a, e_a)
}

/// Scatter the two incident fields off the lossless membrane.
///
/// Transmission is real; reflection carries a π/2 phase shift, rotating the
/// reflected part into the orthogonal quadrature:
///
/// ```text
/// X_C = t·X_B + r·Y_A        Y_C = t·Y_B − r·X_A
/// X_D = t·X_A + r·Y_B        Y_D = t·Y_A − r·X_B
/// ```
pub fn membrane_scatter(
    e_a: &QuadratureField,
    e_b: &QuadratureField,
    r: f64,
    t: f64,
) -> Result<(QuadratureField, QuadratureField)> {
    let closure = r * r + t * t;
    if (closure - 1.0).abs() > 1e-12 {
        return Err(Error::LossyMembrane(closure));
    }
    let combine = |tx: &[f64; 3], ry: &[f64; 3]| -> [f64; 3] {
        [
            t * tx[0] + r * ry[0],
            t * tx[1] + r * ry[1],
            t * tx[2] + r * ry[2],
        ]
    };
    let negate = |x: [f64; 3]| [-x[0], -x[1], -x[2]];
    let e_c = QuadratureField {
        cos_coeffs: combine(&e_b.cos_coeffs, &e_a.sin_coeffs),
        sin_coeffs: combine(&e_b.sin_coeffs, &negate(e_a.cos_coeffs)),
        omega0_rad_s: e_a.omega0_rad_s,
    };
    let e_d = QuadratureField {
        cos_coeffs: combine(&e_a.cos_coeffs, &e_b.sin_coeffs),
        sin_coeffs: combine(&e_a.sin_coeffs, &negate(e_b.cos_coeffs)),
        omega0_rad_s: e_a.omega0_rad_s,
    };
    Ok((e_c, e_d))
}

/// Radiation-pressure force as a linear form over {ℰ_v1, ℰ_v2} (N per unit
/// quadrature), plus the carrier-only residual that must cancel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ForceCoefficients {
    pub v1: f64,
    pub v2: f64,
    /// DC (carrier²) part of the momentum-flux difference; exactly zero for
    /// the symmetric membrane.
    pub dc_residual: f64,
}

/// Evaluate the momentum-flux quadratic form, keeping the carrier×vacuum
/// cross terms (the linearized force) and reporting the carrier² residual.
pub fn rp_force_coefficients(
    e_a: &QuadratureField,
    e_b: &QuadratureField,
    e_c: &QuadratureField,
    e_d: &QuadratureField,
) -> ForceCoefficients {
    let omega0 = e_a.omega0_rad_s;
    // (C − D) − (B − A) over the time-averaged |E|² forms
    let signed =
        |f: &dyn Fn(&QuadratureField) -> f64| -> f64 { (f(e_c) - f(e_d)) - (f(e_b) - f(e_a)) };
    let lin = |slot: usize| {
        signed(&|e: &QuadratureField| {
            e.cos_coeffs[0] * e.cos_coeffs[slot] + e.sin_coeffs[0] * e.sin_coeffs[slot]
        })
    };
    let dc = signed(&|e: &QuadratureField| {
        0.5 * (e.cos_coeffs[0] * e.cos_coeffs[0] + e.sin_coeffs[0] * e.sin_coeffs[0])
    });
    let prefactor = HBAR * omega0 / SPEED_OF_LIGHT;
    ForceCoefficients {
        v1: prefactor * lin(1),
        v2: prefactor * lin(2),
        dc_residual: prefactor * dc,
    }
}

/// Single-sided force PSD (N²/Hz): sum of squared coefficients, since the
/// vacuum quadratures have unit spectral density and no cross-correlation.
pub fn force_psd_from_coefficients(coeffs: &ForceCoefficients) -> f64 {
    coeffs.v1 * coeffs.v1 + coeffs.v2 * coeffs.v2
}

/// Full pipeline: incident fields → membrane scatter → force PSD for carrier
/// power `p0_w` and membrane power reflectance `r2`.
pub fn force_psd_via_fields(p0_w: f64, r2: f64, optics: &OpticsParams) -> Result<f64> {
    let (e_a, e_b) = incident_fields(p0_w, optics);
    let (e_c, e_d) = membrane_scatter(&e_a, &e_b, r2.sqrt(), (1.0 - r2).sqrt())?;
    Ok(force_psd_from_coefficients(&rp_force_coefficients(
        &e_a, &e_b, &e_c, &e_d,
    )))
}

/// Signed fringe slope from a central finite difference of the exact output
/// power at x = 0, step λ·10⁻⁶. Comparator for `quantum::signal_slope`.
pub fn slope_oracle(inputs: &QuantumNoiseInputs) -> f64 {
    let h = inputs.optics.wavelength_m * 1e-6;
    (output_power(h, inputs) - output_power(-h, inputs)) / (2.0 * h)
}

/// One verification check: worst-case error against its tolerance.
#[derive(Debug, Clone)]
pub struct VerifyCheck {
    pub name: &'static str,
    pub worst_error: f64,
    pub tolerance: f64,
}

impl VerifyCheck {
    pub fn passed(&self) -> bool {
        self.worst_error <= self.tolerance
    }
}

/// Report of the full oracle suite.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub checks: Vec<VerifyCheck>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(VerifyCheck::passed)
    }
}

fn closed_form_inputs(p0_w: f64, r2: f64, optics: OpticsParams) -> QuantumNoiseInputs {
    QuantumNoiseInputs::new(
        OpticsParams {
            power_at_bs_w: p0_w,
            ..optics
        },
        MembraneParams {
            reflectance: r2,
            resonance_hz: 75e3,
            effective_mass_kg: 125e-12,
            quality: 1e7,
            temperature_k: 1.0,
        },
        &RecyclingParams {
            r_sr: None,
            r_pr: None,
            arm_length_m: 0.6,
            sr_distance_m: 0.03,
        },
        false,
    )
    .expect("closed-form comparator inputs are valid")
}

fn psd_error(p0_w: f64, r2: f64, optics: &OpticsParams) -> f64 {
    let oracle = force_psd_via_fields(p0_w, r2, optics).expect("lossless by construction");
    let asd = rp_force_asd(&closed_form_inputs(p0_w, r2, *optics));
    let closed = asd * asd;
    if closed == 0.0 {
        oracle.abs()
    } else {
        (oracle - closed).abs() / closed
    }
}

/// Run the full oracle suite with `draws` randomized trials per check.
///
/// Deterministic for a given `(draws, seed)`.
pub fn run_verification(draws: usize, seed: u64) -> VerifyReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let optics = OpticsParams {
        wavelength_m: 1.064e-6,
        power_at_bs_w: 1.0,
        fringe_offset_rad: 0.0,
    };
    let mut checks = Vec::new();

    // closed-form force PSD over the fixed parameter grid
    let mut worst = 0.0f64;
    for i in 0..=10 {
        let r2 = i as f64 / 10.0;
        for p0 in [1e-3, 1.0, 1e3] {
            worst = worst.max(psd_error(p0, r2, &optics));
        }
    }
    checks.push(VerifyCheck {
        name: "force psd vs closed form (grid)",
        worst_error: worst,
        tolerance: 1e-12,
    });

    // and over random draws
    let mut worst = 0.0f64;
    for _ in 0..draws {
        let r2 = rng.gen_range(0.0..=1.0);
        let p0 = 10f64.powf(rng.gen_range(-3.0..3.0));
        worst = worst.max(psd_error(p0, r2, &optics));
    }
    checks.push(VerifyCheck {
        name: "force psd vs closed form (random)",
        worst_error: worst,
        tolerance: 1e-12,
    });

    // energy conservation through the membrane
    let mut worst = 0.0f64;
    for _ in 0..draws {
        let r2: f64 = rng.gen_range(0.0..=1.0);
        let p0 = 10f64.powf(rng.gen_range(-3.0..3.0));
        let (e_a, e_b) = incident_fields(p0, &optics);
        let (e_c, e_d) =
            membrane_scatter(&e_a, &e_b, r2.sqrt(), (1.0 - r2).sqrt()).expect("lossless");
        let before = e_a.quadrature_energy() + e_b.quadrature_energy();
        let after = e_c.quadrature_energy() + e_d.quadrature_energy();
        worst = worst.max((after - before).abs() / before);
    }
    checks.push(VerifyCheck {
        name: "energy conservation through membrane",
        worst_error: worst,
        tolerance: 1e-14,
    });

    // input-port vacuum exerts no force
    let mut worst = 0.0f64;
    for _ in 0..draws {
        let r2: f64 = rng.gen_range(0.0..=1.0);
        let p0 = 10f64.powf(rng.gen_range(-3.0..3.0));
        let (e_a, e_b) = incident_fields_input_port(p0, &optics);
        let (e_c, e_d) =
            membrane_scatter(&e_a, &e_b, r2.sqrt(), (1.0 - r2).sqrt()).expect("lossless");
        let coeffs = rp_force_coefficients(&e_a, &e_b, &e_c, &e_d);
        // normalize by the perfect-mirror coupling at this power
        let scale = 2.0 / SPEED_OF_LIGHT * (2.0 * HBAR * optics.omega0() * p0).sqrt();
        worst = worst.max((coeffs.v1.abs() + coeffs.v2.abs()) / scale);
    }
    checks.push(VerifyCheck {
        name: "input-port vacuum force",
        worst_error: worst,
        tolerance: 1e-14,
    });

    // carrier (DC) momentum flux cancels
    let mut worst = 0.0f64;
    for _ in 0..draws {
        let r2: f64 = rng.gen_range(0.0..=1.0);
        let p0 = 10f64.powf(rng.gen_range(-3.0..3.0));
        let (e_a, e_b) = incident_fields(p0, &optics);
        let (e_c, e_d) =
            membrane_scatter(&e_a, &e_b, r2.sqrt(), (1.0 - r2).sqrt()).expect("lossless");
        let coeffs = rp_force_coefficients(&e_a, &e_b, &e_c, &e_d);
        let scale = 2.0 * p0 / SPEED_OF_LIGHT; // carrier momentum flux
        worst = worst.max(coeffs.dc_residual.abs() / scale);
    }
    checks.push(VerifyCheck {
        name: "carrier force cancellation",
        worst_error: worst,
        tolerance: 1e-14,
    });

    // fringe slope against the analytic derivative
    let mut worst = 0.0f64;
    for _ in 0..draws {
        let phi0 = rng.gen_range(0.01..std::f64::consts::PI - 0.01);
        let r2 = rng.gen_range(0.01..=1.0);
        let p0 = 10f64.powf(rng.gen_range(-3.0..3.0));
        let mut inputs = closed_form_inputs(p0, r2, optics);
        inputs.optics.fringe_offset_rad = phi0;
        let analytic = signal_slope(&inputs);
        let fd = slope_oracle(&inputs).abs();
        worst = worst.max((fd - analytic).abs() / analytic);
    }
    checks.push(VerifyCheck {
        name: "fringe slope finite difference",
        worst_error: worst,
        tolerance: 1e-6,
    });

    VerifyReport { checks }
}
