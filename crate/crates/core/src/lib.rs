//! Displacement-noise budget of a Michelson-Sagnac interferometer with a
//! translucent membrane oscillator.
//!
//! The interferometer uses a thin, partially reflective membrane as the common
//! end mirror of two folded Michelson arms; light transmitted through the
//! membrane is stored in a Sagnac mode, so power- and signal-recycling remain
//! usable even when the membrane reflectance is far below unity.
//!
//! The library computes, as amplitude spectral densities over a frequency
//! grid:
//!
//! * photon shot noise of the membrane displacement readout,
//! * quantum radiation-pressure (back-action) noise,
//! * thermal noise of the membrane's fundamental mode under viscous and
//!   structural damping,
//! * their quadrature-sum total and the standard quantum limit envelope.
//!
//! Recycling enters through the amplitude gains `g_PR`, `g_SR` and the
//! one-pole cavity response with corner frequency `f_SR`. The [`oracle`]
//! module re-derives the radiation-pressure force spectral density from a
//! quadrature-field propagation of the four fields at the membrane,
//! independently of the closed-form expressions in [`quantum`], and backs the
//! `verify` CLI command.
//!
//! All inputs and outputs are raw SI floats (m, Hz, kg, W, K).

pub mod budget;
pub mod config;
pub mod constants;
pub mod error;
pub mod mechanics;
pub mod oracle;
pub mod output;
pub mod params;
pub mod quantum;
pub mod spectrum;

pub use budget::{
    compute_budget, ratio_at, solve_power, solve_thermal_power, sweep, BudgetOptions, ChannelKind,
    Damping, PowerSolution, SweepRow, ThermalPowerSolution,
};
pub use config::{SystemConfig, TABLE_I_CONFIG};
pub use constants::{PhysicalConstants, BOLTZMANN, CODATA, HBAR, SPEED_OF_LIGHT};
pub use error::{Error, Result, Violation};
pub use mechanics::{
    susceptibility, thermal_displacement_asd, thermal_force_asd, DampingModel, Susceptibility,
};
pub use oracle::{
    force_psd_from_coefficients, incident_fields, membrane_scatter, rp_force_coefficients,
    slope_oracle, ForceCoefficients, QuadratureField,
};
pub use params::{derive_recycling, MembraneParams, OpticsParams, RecyclingGains, RecyclingParams};
pub use quantum::{
    output_power, rad_asd, rp_force_asd, shot_asd, signal_slope, sql_asd, QuantumNoiseInputs,
};
pub use spectrum::{FrequencyGrid, NoiseSpectrum, Series, Spacing, Unit};
