//! Interferometer parameter types, validation, and derived recycling
//! quantities.
//!
//! All parameters are immutable plain values in SI units. Validation never
//! mutates and reports *every* violated invariant, named by its config key.

use std::f64::consts::PI;

use crate::constants::SPEED_OF_LIGHT;
use crate::error::{Error, Result, Violation};

/// Membrane oscillator: optical and mechanical properties of the fundamental
/// mode.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MembraneParams {
    /// Power reflectance r² (dimensionless, in [0, 1]).
    pub reflectance: f64,
    /// Fundamental resonant frequency f_mem (Hz).
    pub resonance_hz: f64,
    /// Effective mass of the fundamental mode (kg).
    pub effective_mass_kg: f64,
    /// Mechanical quality factor Q.
    pub quality: f64,
    /// Membrane temperature (K).
    pub temperature_k: f64,
}

impl MembraneParams {
    /// Amplitude reflectance r = √R.
    pub fn amplitude_reflectance(&self) -> f64 {
        self.reflectance.sqrt()
    }

    /// Amplitude transmittance t = √(1 − R); the membrane is modeled lossless,
    /// so r² + t² = 1.
    pub fn amplitude_transmittance(&self) -> f64 {
        (1.0 - self.reflectance).sqrt()
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut v = Vec::new();
        if !(0.0..=1.0).contains(&self.reflectance) || !self.reflectance.is_finite() {
            v.push(Violation::new("membrane.R", "R out of [0, 1]"));
        }
        if self.resonance_hz <= 0.0 || !self.resonance_hz.is_finite() {
            v.push(Violation::new(
                "membrane.f_mem",
                "resonance frequency must be positive",
            ));
        }
        if self.effective_mass_kg <= 0.0 || !self.effective_mass_kg.is_finite() {
            v.push(Violation::new("membrane.m_eff", "mass must be positive"));
        }
        if self.quality <= 0.0 || !self.quality.is_finite() {
            v.push(Violation::new("membrane.Q", "Q must be positive"));
        }
        if self.temperature_k < 0.0 || !self.temperature_k.is_finite() {
            v.push(Violation::new(
                "membrane.T",
                "temperature must be non-negative",
            ));
        }
        v
    }
}

/// Laser and operating-point parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OpticsParams {
    /// Light wavelength λ (m).
    pub wavelength_m: f64,
    /// Carrier power at the beam splitter (W). This is the power-recycled
    /// value g_PR·P₀; the optional power-recycling mirror reflectance is used
    /// only to back out the injected power for reporting.
    pub power_at_bs_w: f64,
    /// Fringe-offset operating point Φ₀ (rad), in [−π, π). 0 is the dark
    /// fringe, where signal-normalized shot noise is minimal.
    pub fringe_offset_rad: f64,
}

impl OpticsParams {
    /// Carrier angular frequency ω₀ = 2πc/λ (rad/s).
    pub fn omega0(&self) -> f64 {
        2.0 * PI * SPEED_OF_LIGHT / self.wavelength_m
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut v = Vec::new();
        if self.wavelength_m <= 0.0 || !self.wavelength_m.is_finite() {
            v.push(Violation::new("lambda", "wavelength must be positive"));
        }
        if self.power_at_bs_w < 0.0 || !self.power_at_bs_w.is_finite() {
            v.push(Violation::new("power_at_bs", "power must be non-negative"));
        }
        if !(-PI..PI).contains(&self.fringe_offset_rad) {
            v.push(Violation::new("phi0", "fringe offset out of [-pi, pi)"));
        }
        v
    }
}

/// Recycling mirrors and interferometer geometry. An absent mirror means no
/// recycling on that port: gain 1 and no cavity pole.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RecyclingParams {
    /// Amplitude reflectance of the signal-recycling mirror, or `None` for no
    /// mirror.
    pub r_sr: Option<f64>,
    /// Amplitude reflectance of the power-recycling mirror, or `None`.
    pub r_pr: Option<f64>,
    /// Michelson arm length L (m).
    pub arm_length_m: f64,
    /// Distance between beam splitter and signal-recycling mirror L_SR (m).
    pub sr_distance_m: f64,
}

impl RecyclingParams {
    pub fn validate(&self) -> Vec<Violation> {
        let mut v = Vec::new();
        if let Some(r) = self.r_sr {
            if !(0.0..1.0).contains(&r) {
                v.push(Violation::new(
                    "recycling.r_SR",
                    "reflectance out of [0, 1) (gain diverges at 1)",
                ));
            }
        }
        if let Some(r) = self.r_pr {
            if !(0.0..1.0).contains(&r) {
                v.push(Violation::new(
                    "recycling.r_PR",
                    "reflectance out of [0, 1) (gain diverges at 1)",
                ));
            }
        }
        if self.arm_length_m <= 0.0 || !self.arm_length_m.is_finite() {
            v.push(Violation::new("geometry.L", "arm length must be positive"));
        }
        if self.sr_distance_m < 0.0 || !self.sr_distance_m.is_finite() {
            v.push(Violation::new(
                "geometry.L_SR",
                "mirror distance must be non-negative",
            ));
        }
        v
    }
}

/// Derived recycling quantities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RecyclingGains {
    /// Power-recycling (energy) gain g_PR = (1 + r_PR)/(1 − r_PR); 1 without a
    /// mirror.
    pub g_pr: f64,
    /// Signal-recycling (energy) gain g_SR = (1 + r_SR)/(1 − r_SR); the
    /// sideband amplitude gain is √g_SR. 1 without a mirror.
    pub g_sr: f64,
    /// Signal-recycling cavity corner frequency
    /// f_SR = c(1 − r_SR)/(4π(L_SR + L)) (Hz); +∞ without a mirror.
    pub f_sr_hz: f64,
}

fn mirror_gain(r: f64) -> f64 {
    (1.0 + r) / (1.0 - r)
}

/// Derive recycling gains and the signal-recycling cavity pole.
///
/// The gain formulas assume the mirror reflectance stays below the
/// interferometer reflectance; internal interferometer loss is not modeled
/// (it bounds the achievable g_SR but the tool treats the gains as exact).
pub fn derive_recycling(rp: &RecyclingParams) -> Result<RecyclingGains> {
    let violations = rp.validate();
    if !violations.is_empty() {
        return Err(Error::Invalid(violations));
    }
    let g_pr = rp.r_pr.map_or(1.0, mirror_gain);
    let (g_sr, f_sr_hz) = match rp.r_sr {
        None => (1.0, f64::INFINITY),
        Some(r) => (
            mirror_gain(r),
            SPEED_OF_LIGHT * (1.0 - r) / (4.0 * PI * (rp.sr_distance_m + rp.arm_length_m)),
        ),
    };
    Ok(RecyclingGains {
        g_pr,
        g_sr,
        f_sr_hz,
    })
}

/// Validate a full parameter set at once, collecting all violations.
pub fn validate_all(
    optics: &OpticsParams,
    membrane: &MembraneParams,
    recycling: &RecyclingParams,
) -> Result<()> {
    let mut v = optics.validate();
    v.extend(membrane.validate());
    v.extend(recycling.validate());
    if v.is_empty() {
        Ok(())
    } else {
        Err(Error::Invalid(v))
    }
}
