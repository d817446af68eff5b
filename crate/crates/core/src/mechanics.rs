//! Mechanical susceptibility of the membrane's fundamental mode and thermal
//! noise under viscous and structural damping.
//!
//! The susceptibility is
//!
//! ```text
//! H(f) = 1 / ( -m (2πf)² + m (2πf_mem)² (1 + i f/(Q f_mem)) )
//! ```
//!
//! with the constant-loss-angle term i·f/(Q·f_mem) used for both damping
//! models; the damping model only changes the thermal *force* spectrum:
//!
//! ```text
//! viscous:     G_F = 4 k_B T m (2π f_mem) / Q              (flat)
//! structural:  G_F = 4 k_B T m (2π f_mem)² / (Q · 2π f)    (1/f)
//! ```
//!
//! The displacement spectra are |H(f)|²·G_F; their ASDs cross exactly at
//! f = f_mem. The off-resonant thermal spectrum of a real membrane is not
//! precisely known, so both models are exposed and the caller chooses.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::constants::BOLTZMANN;
use crate::error::{Error, Result};
use crate::params::MembraneParams;

/// Thermal-noise dissipation model.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DampingModel {
    /// Frequency-independent force spectrum (velocity damping).
    Viscous,
    /// 1/f force spectrum (constant loss angle).
    Structural,
}

/// Complex mechanical response (m/N) at one frequency.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Susceptibility {
    pub frequency_hz: f64,
    pub value: Complex64,
}

impl Susceptibility {
    /// |H(f)|, the magnitude used in all noise expressions.
    pub fn magnitude(&self) -> f64 {
        self.value.norm()
    }
}

/// Mechanical susceptibility of the fundamental mode.
///
/// Finite at resonance for finite Q; the peak response is Q times the DC
/// response.
pub fn susceptibility(f_hz: f64, mem: &MembraneParams) -> Susceptibility {
    let m = mem.effective_mass_kg;
    let omega = 2.0 * PI * f_hz;
    let omega_mem = 2.0 * PI * mem.resonance_hz;
    let denom = Complex64::new(
        -m * omega * omega + m * omega_mem * omega_mem,
        m * omega_mem * omega_mem * f_hz / (mem.quality * mem.resonance_hz),
    );
    Susceptibility {
        frequency_hz: f_hz,
        value: denom.finv(),
    }
}

/// Thermal force ASD (N/√Hz) of the chosen damping model.
///
/// The structural model diverges at DC and is rejected for f = 0.
pub fn thermal_force_asd(f_hz: f64, mem: &MembraneParams, model: DampingModel) -> Result<f64> {
    let omega_mem = 2.0 * PI * mem.resonance_hz;
    let common =
        4.0 * BOLTZMANN * mem.temperature_k * mem.effective_mass_kg * omega_mem / mem.quality;
    match model {
        DampingModel::Viscous => Ok(common.sqrt()),
        DampingModel::Structural => {
            if f_hz <= 0.0 {
                return Err(Error::StructuralDampingAtDc);
            }
            Ok((common * omega_mem / (2.0 * PI * f_hz)).sqrt())
        }
    }
}

/// Thermal displacement ASD (m/√Hz): |H(f)| times the thermal force ASD.
pub fn thermal_displacement_asd(
    f_hz: f64,
    mem: &MembraneParams,
    model: DampingModel,
) -> Result<f64> {
    Ok(susceptibility(f_hz, mem).magnitude() * thermal_force_asd(f_hz, mem, model)?)
}
