//! CSV and JSON emission of noise spectra.
//!
//! CSV columns are `frequency_hz` followed by the channels in canonical
//! order; every number is written in scientific notation with 9 significant
//! digits. The JSON document carries the same field names as arrays, plus a
//! `params` echo of the run configuration. Both emitters are deterministic.

use std::io::Write;

use serde::Serialize;
use serde_json::{json, Value};

use crate::budget::BudgetOptions;
use crate::config::SystemConfig;
use crate::error::Result;
use crate::params::derive_recycling;
use crate::spectrum::NoiseSpectrum;

/// Write the spectrum as CSV.
pub fn write_csv<W: Write>(mut w: W, spectrum: &NoiseSpectrum) -> Result<()> {
    write!(w, "frequency_hz")?;
    for channel in spectrum.channels() {
        write!(w, ",{}", channel.name)?;
    }
    writeln!(w)?;
    for (i, f) in spectrum.grid().points().iter().enumerate() {
        write!(w, "{f:.8e}")?;
        for channel in spectrum.channels() {
            write!(w, ",{:.8e}", channel.values[i])?;
        }
        writeln!(w)?;
    }
    Ok(())
}

#[derive(Serialize)]
struct BudgetDocument<'a> {
    params: Value,
    frequency_hz: &'a [f64],
    #[serde(skip_serializing_if = "Option::is_none")]
    shot: Option<&'a [f64]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rad: Option<&'a [f64]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    thermal_viscous: Option<&'a [f64]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    thermal_structural: Option<&'a [f64]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    total: Option<&'a [f64]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    sql: Option<&'a [f64]>,
}

/// Echo of every config key plus the run toggles and derived recycling
/// quantities. Non-finite derived values (no pole without a mirror) appear
/// as null.
pub fn params_echo(config: &SystemConfig, options: &BudgetOptions) -> Value {
    let damping = match options.damping {
        crate::budget::Damping::Viscous => "viscous",
        crate::budget::Damping::Structural => "structural",
        crate::budget::Damping::Both => "both",
    };
    let mut echo = json!({
        "lambda": config.optics.wavelength_m,
        "power_at_bs": config.optics.power_at_bs_w,
        "phi0": config.optics.fringe_offset_rad,
        "membrane.R": config.membrane.reflectance,
        "membrane.f_mem": config.membrane.resonance_hz,
        "membrane.m_eff": config.membrane.effective_mass_kg,
        "membrane.Q": config.membrane.quality,
        "membrane.T": config.membrane.temperature_k,
        "recycling.r_SR": config.recycling.r_sr,
        "recycling.r_PR": config.recycling.r_pr,
        "geometry.L": config.recycling.arm_length_m,
        "geometry.L_SR": config.recycling.sr_distance_m,
        "grid.f_min": config.grid.f_min_hz(),
        "grid.f_max": config.grid.f_max_hz(),
        "grid.n_points": config.grid.len(),
        "grid.spacing": config.grid.spacing().as_str(),
        "sr_enabled": options.sr_enabled,
        "damping": damping,
    });
    if let Ok(gains) = derive_recycling(&config.recycling) {
        let g_sr = if options.sr_enabled { gains.g_sr } else { 1.0 };
        let f_sr = if options.sr_enabled {
            gains.f_sr_hz
        } else {
            f64::INFINITY
        };
        echo["derived"] = json!({
            "g_PR": gains.g_pr,
            "g_SR": g_sr,
            "f_SR_hz": f_sr, // null when infinite
            "P0_w": config.optics.power_at_bs_w / gains.g_pr,
        });
    }
    echo
}

/// Write the spectrum as a JSON document with a `params` echo block.
pub fn write_json<W: Write>(
    w: W,
    spectrum: &NoiseSpectrum,
    config: &SystemConfig,
    options: &BudgetOptions,
) -> Result<()> {
    let values = |name: &str| spectrum.channel(name).map(|c| c.values.as_slice());
    let doc = BudgetDocument {
        params: params_echo(config, options),
        frequency_hz: spectrum.grid().points(),
        shot: values("shot"),
        rad: values("rad"),
        thermal_viscous: values("thermal_viscous"),
        thermal_structural: values("thermal_structural"),
        total: values("total"),
        sql: values("sql"),
    };
    serde_json::to_writer_pretty(w, &doc)?;
    Ok(())
}
