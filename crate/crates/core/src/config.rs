//! Plain-text configuration: one `key = value` per line, `#` starts a
//! comment. All values are raw SI floats except `grid.spacing` (`log` or
//! `linear`). Unknown keys and duplicate keys are hard errors.
//!
//! `power_at_bs` is the carrier power at the beam splitter, i.e. already the
//! power-recycled value; `recycling.r_PR` is optional and only backs out the
//! injected power for reporting. The signal-recycling cavity is always
//! modeled tuned to the carrier — there is no detuning key.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::params::{validate_all, MembraneParams, OpticsParams, RecyclingParams};
use crate::spectrum::{FrequencyGrid, Spacing};

/// The complete config key set.
pub const CONFIG_KEYS: [&str; 16] = [
    "lambda",
    "power_at_bs",
    "phi0",
    "membrane.R",
    "membrane.f_mem",
    "membrane.m_eff",
    "membrane.Q",
    "membrane.T",
    "recycling.r_SR",
    "recycling.r_PR",
    "geometry.L",
    "geometry.L_SR",
    "grid.f_min",
    "grid.f_max",
    "grid.n_points",
    "grid.spacing",
];

const REQUIRED_KEYS: [&str; 9] = [
    "lambda",
    "power_at_bs",
    "membrane.R",
    "membrane.f_mem",
    "membrane.m_eff",
    "membrane.Q",
    "membrane.T",
    "geometry.L",
    "geometry.L_SR",
];

/// The bundled design-point preset: 1064 nm light, 1 W at the beam splitter,
/// a 35%-reflective membrane resonating at 75 kHz with 125 ng effective mass,
/// Q = 10⁷ at 1 K, and a 0.998-reflectance signal-recycling mirror 3 cm from
/// the beam splitter on 0.6 m arms.
pub const TABLE_I_CONFIG: &str = "\
# Design-point preset for the membrane noise budget.
# All values are raw SI floats (m, W, rad, Hz, kg, K).
lambda = 1.064e-6
power_at_bs = 1.0
phi0 = 0.0
membrane.R = 0.35
membrane.f_mem = 75e3
membrane.m_eff = 1.25e-10
membrane.Q = 1e7
membrane.T = 1.0
recycling.r_SR = 0.998
geometry.L = 0.6
geometry.L_SR = 0.03
grid.f_min = 1e3
grid.f_max = 1e6
grid.n_points = 1000
grid.spacing = log
";

/// A fully parsed and validated run configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct SystemConfig {
    pub optics: OpticsParams,
    pub membrane: MembraneParams,
    pub recycling: RecyclingParams,
    pub grid: FrequencyGrid,
}

impl SystemConfig {
    /// Parse config text. Every malformed line is an error with its line
    /// number; parameter-invariant violations are collected and reported
    /// together.
    pub fn parse(text: &str) -> Result<Self> {
        let mut seen: BTreeMap<&str, (f64, Option<Spacing>)> = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key_part, value_part) = line.split_once('=').ok_or(Error::Config {
                line: line_no,
                message: "expected `key = value`".into(),
            })?;
            let key = key_part.trim();
            let value = value_part.trim();
            let canonical =
                CONFIG_KEYS
                    .iter()
                    .find(|k| **k == key)
                    .ok_or_else(|| Error::Config {
                        line: line_no,
                        message: format!("unknown key `{key}`"),
                    })?;
            if seen.contains_key(canonical) {
                return Err(Error::Config {
                    line: line_no,
                    message: format!("duplicate key `{key}`"),
                });
            }
            if *canonical == "grid.spacing" {
                let spacing = match value {
                    "log" => Spacing::Log,
                    "linear" => Spacing::Linear,
                    other => {
                        return Err(Error::Config {
                            line: line_no,
                            message: format!(
                                "grid.spacing must be `log` or `linear`, got `{other}`"
                            ),
                        })
                    }
                };
                seen.insert(canonical, (0.0, Some(spacing)));
            } else {
                let number: f64 = value.parse().map_err(|_| Error::Config {
                    line: line_no,
                    message: format!("`{value}` is not a number"),
                })?;
                seen.insert(canonical, (number, None));
            }
        }

        let missing: Vec<&str> = REQUIRED_KEYS
            .iter()
            .filter(|k| !seen.contains_key(**k))
            .copied()
            .collect();
        if !missing.is_empty() {
            return Err(Error::Config {
                line: 0,
                message: format!("missing required keys: {}", missing.join(", ")),
            });
        }

        let num = |key: &str| seen[key].0;
        let opt = |key: &str| seen.get(key).map(|(v, _)| *v);

        let optics = OpticsParams {
            wavelength_m: num("lambda"),
            power_at_bs_w: num("power_at_bs"),
            fringe_offset_rad: opt("phi0").unwrap_or(0.0),
        };
        let membrane = MembraneParams {
            reflectance: num("membrane.R"),
            resonance_hz: num("membrane.f_mem"),
            effective_mass_kg: num("membrane.m_eff"),
            quality: num("membrane.Q"),
            temperature_k: num("membrane.T"),
        };
        let recycling = RecyclingParams {
            r_sr: opt("recycling.r_SR"),
            r_pr: opt("recycling.r_PR"),
            arm_length_m: num("geometry.L"),
            sr_distance_m: num("geometry.L_SR"),
        };
        validate_all(&optics, &membrane, &recycling)?;

        let spacing = seen
            .get("grid.spacing")
            .and_then(|(_, s)| *s)
            .unwrap_or(Spacing::Log);
        let n_points = match opt("grid.n_points") {
            None => 1000,
            Some(x) if x >= 1.0 && x.fract() == 0.0 && x <= 1e7 => x as usize,
            Some(x) => {
                return Err(Error::Config {
                    line: 0,
                    message: format!("grid.n_points must be a positive integer, got {x}"),
                })
            }
        };
        let grid = FrequencyGrid::new(
            opt("grid.f_min").unwrap_or(1e3),
            opt("grid.f_max").unwrap_or(1e6),
            n_points,
            spacing,
        )?;

        Ok(Self {
            optics,
            membrane,
            recycling,
            grid,
        })
    }

    /// The built-in design-point preset, parsed from [`TABLE_I_CONFIG`] so a
    /// round trip through a file is bit-identical.
    pub fn table_i() -> Self {
        Self::parse(TABLE_I_CONFIG).expect("bundled preset is valid")
    }

    /// Set one numeric parameter by config key, revalidating the result.
    /// The config is unchanged when the new value is rejected.
    pub fn set_key(&mut self, key: &str, value: f64) -> Result<()> {
        let mut next = self.clone();
        match key {
            "lambda" => next.optics.wavelength_m = value,
            "power_at_bs" => next.optics.power_at_bs_w = value,
            "phi0" => next.optics.fringe_offset_rad = value,
            "membrane.R" => next.membrane.reflectance = value,
            "membrane.f_mem" => next.membrane.resonance_hz = value,
            "membrane.m_eff" => next.membrane.effective_mass_kg = value,
            "membrane.Q" => next.membrane.quality = value,
            "membrane.T" => next.membrane.temperature_k = value,
            "recycling.r_SR" => next.recycling.r_sr = Some(value),
            "recycling.r_PR" => next.recycling.r_pr = Some(value),
            "geometry.L" => next.recycling.arm_length_m = value,
            "geometry.L_SR" => next.recycling.sr_distance_m = value,
            "grid.f_min" => {
                next.grid = FrequencyGrid::new(
                    value,
                    next.grid.f_max_hz(),
                    next.grid.len(),
                    next.grid.spacing(),
                )?;
            }
            "grid.f_max" => {
                next.grid = FrequencyGrid::new(
                    next.grid.f_min_hz(),
                    value,
                    next.grid.len(),
                    next.grid.spacing(),
                )?;
            }
            "grid.n_points" => {
                if !(value >= 1.0 && value.fract() == 0.0 && value <= 1e7) {
                    return Err(Error::NonNumericParameter(
                        "grid.n_points (must be a positive integer)".into(),
                    ));
                }
                next.grid = FrequencyGrid::new(
                    next.grid.f_min_hz(),
                    next.grid.f_max_hz(),
                    value as usize,
                    next.grid.spacing(),
                )?;
            }
            "grid.spacing" => return Err(Error::NonNumericParameter(key.into())),
            other => return Err(Error::UnknownParameter(other.into())),
        }
        validate_all(&next.optics, &next.membrane, &next.recycling)?;
        *self = next;
        Ok(())
    }
}
