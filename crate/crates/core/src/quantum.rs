//! Closed-form quantum noise of the membrane displacement readout.
//!
//! Output power of the interferometer as a function of membrane displacement
//! x from the operating point Φ₀:
//!
//! ```text
//! P_out = (r² P / 2) [1 − cos(Φ₀ + (8π/λ) x)]
//! ```
//!
//! where P is the carrier power at the beam splitter. The factor 8π/λ comes
//! from the folded arms: the differential arm length changes by four times
//! the membrane displacement.
//!
//! With signal recycling, signal sidebands and output-port vacuum are
//! amplified by √g_SR inside a one-pole cavity bandwidth f_SR, so the
//! signal-normalized shot noise and the radiation-pressure displacement noise
//! at dark fringe become
//!
//! ```text
//! √G_shot = √( ħcλ / (16π g_SR r² P) ) · √(1 + (f/f_SR)²)
//! √G_rad  = |H(f)| √( 16π ħ g_SR r² P / (cλ) ) / √(1 + (f/f_SR)²)
//! ```
//!
//! Their product is ħ|H(f)| independent of power, recycling, and the cavity
//! pole, which pins the standard quantum limit √(2ħ|H|).
//!
//! Off the dark fringe the shot noise grows by 1/|cos(Φ₀/2)|. The recycled
//! expressions are derived at dark fringe; applying the same factor there is
//! a modeling choice valid for small Φ₀ (see README).

use std::f64::consts::PI;

use crate::constants::{HBAR, SPEED_OF_LIGHT};
use crate::error::{Error, Result};
use crate::mechanics::susceptibility;
use crate::params::{
    derive_recycling, validate_all, MembraneParams, OpticsParams, RecyclingGains, RecyclingParams,
};

/// Validated inputs for the quantum-noise expressions.
///
/// With `sr_enabled = false` the signal-recycling gain is forced to 1 and the
/// cavity pole to +∞, so every `1 + (f/f_SR)²` factor is identically 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuantumNoiseInputs {
    pub optics: OpticsParams,
    pub membrane: MembraneParams,
    pub gains: RecyclingGains,
    pub sr_enabled: bool,
}

impl QuantumNoiseInputs {
    pub fn new(
        optics: OpticsParams,
        membrane: MembraneParams,
        recycling: &RecyclingParams,
        sr_enabled: bool,
    ) -> Result<Self> {
        validate_all(&optics, &membrane, recycling)?;
        let mut gains = derive_recycling(recycling)?;
        if !sr_enabled {
            gains.g_sr = 1.0;
            gains.f_sr_hz = f64::INFINITY;
        }
        Ok(Self {
            optics,
            membrane,
            gains,
            sr_enabled,
        })
    }

    /// Power entering the quantum-noise formulas: g_SR times the power at the
    /// beam splitter (which is already the power-recycled g_PR·P₀).
    pub fn effective_power_w(&self) -> f64 {
        self.gains.g_sr * self.optics.power_at_bs_w
    }

    /// 1 + (f/f_SR)², the squared one-pole response denominator.
    fn pole_term(&self, f_hz: f64) -> f64 {
        let x = f_hz / self.gains.f_sr_hz;
        1.0 + x * x
    }
}

/// Carrier power at the output port (W) for membrane displacement x (m).
///
/// Exact fringe expression, not the small-x Taylor form.
pub fn output_power(displacement_m: f64, inputs: &QuantumNoiseInputs) -> f64 {
    let r2 = inputs.membrane.reflectance;
    let p = inputs.optics.power_at_bs_w;
    let phase =
        inputs.optics.fringe_offset_rad + 8.0 * PI / inputs.optics.wavelength_m * displacement_m;
    0.5 * r2 * p * (1.0 - phase.cos())
}

/// |∂P_out/∂x| at x = 0 (W/m): (r²P/2)(8π/λ)|sin Φ₀|.
///
/// Zero at Φ₀ ∈ {0, π}; the caller decides whether that matters.
pub fn signal_slope(inputs: &QuantumNoiseInputs) -> f64 {
    let r2 = inputs.membrane.reflectance;
    let p = inputs.optics.power_at_bs_w;
    0.5 * r2
        * p
        * (8.0 * PI / inputs.optics.wavelength_m)
        * inputs.optics.fringe_offset_rad.sin().abs()
}

/// Signal-normalized shot noise ASD (m/√Hz).
///
/// Dark-fringe value √(ħcλ/(16π g_SR r² P)), times the one-pole rise
/// √(1 + (f/f_SR)²), times 1/|cos(Φ₀/2)| off the dark fringe.
pub fn shot_asd(f_hz: f64, inputs: &QuantumNoiseInputs) -> Result<f64> {
    let r2 = inputs.membrane.reflectance;
    let p_eff = inputs.effective_power_w();
    if r2 == 0.0 || p_eff == 0.0 {
        return Err(Error::NoSignal);
    }
    let phi0 = inputs.optics.fringe_offset_rad;
    if phi0.abs() == PI {
        return Err(Error::ZeroFringeSlope);
    }
    let dark =
        (HBAR * SPEED_OF_LIGHT * inputs.optics.wavelength_m / (16.0 * PI * r2 * p_eff)).sqrt();
    let fringe = if phi0 == 0.0 {
        1.0
    } else {
        1.0 / (0.5 * phi0).cos().abs()
    };
    Ok(dark * inputs.pole_term(f_hz).sqrt() * fringe)
}

/// Radiation-pressure force ASD (N/√Hz) below the cavity pole:
/// √(16π ħ g_SR r² P / (cλ)).
///
/// The output-port vacuum beats against both the reflected and the
/// transmitted carrier; the quadrature sum of the r² and rt couplings
/// collapses to r²(r² + t²) = r² for the lossless membrane, so a fully
/// transparent membrane feels no back-action.
pub fn rp_force_asd(inputs: &QuantumNoiseInputs) -> f64 {
    let r2 = inputs.membrane.reflectance;
    let p_eff = inputs.effective_power_w();
    (16.0 * PI * HBAR * r2 * p_eff / (SPEED_OF_LIGHT * inputs.optics.wavelength_m)).sqrt()
}

/// Radiation-pressure displacement ASD (m/√Hz):
/// |H(f)| · √G_F / √(1 + (f/f_SR)²).
pub fn rad_asd(f_hz: f64, inputs: &QuantumNoiseInputs) -> f64 {
    susceptibility(f_hz, &inputs.membrane).magnitude() * rp_force_asd(inputs)
        / inputs.pole_term(f_hz).sqrt()
}

/// Standard quantum limit ASD √(2ħ|H(f)|) (m/√Hz).
///
/// Power-independent envelope: min over power of √(G_shot + G_rad) is
/// √(2√(G_shot·G_rad)) = √(2ħ|H|), reached where shot and radiation-pressure
/// noise are equal.
pub fn sql_asd(f_hz: f64, mem: &MembraneParams) -> f64 {
    (2.0 * HBAR * susceptibility(f_hz, mem).magnitude()).sqrt()
}
