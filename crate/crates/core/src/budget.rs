//! Noise-budget composition over a frequency grid, channel ratios, and the
//! closed-form power solvers.
//!
//! Channels are combined in power: the total ASD is the quadrature sum
//! √(G_shot + G_rad + G_thermal), forced by the statistical independence of
//! the vacuum and thermal baths. All evaluation is deterministic: identical
//! inputs produce bit-identical spectra.

use std::f64::consts::PI;

use crate::constants::{BOLTZMANN, HBAR, SPEED_OF_LIGHT};
use crate::error::{Error, Result, Violation};
use crate::mechanics::{self, DampingModel};
use crate::params::{MembraneParams, OpticsParams, RecyclingParams};
use crate::quantum::{self, QuantumNoiseInputs};
use crate::spectrum::{FrequencyGrid, NoiseSpectrum, Unit};

/// Damping model selection for the budget. `Both` reports the two thermal
/// channels and uses the viscous one (flat below resonance, the more
/// conservative choice there) in the total.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Damping {
    Viscous,
    Structural,
    Both,
}

impl Damping {
    /// The model that enters the `total` channel.
    pub fn for_total(self) -> DampingModel {
        match self {
            Damping::Structural => DampingModel::Structural,
            Damping::Viscous | Damping::Both => DampingModel::Viscous,
        }
    }
}

/// Budget channels, in the canonical emission order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChannelKind {
    Shot,
    Rad,
    ThermalViscous,
    ThermalStructural,
    Total,
    Sql,
}

impl ChannelKind {
    pub const ALL: [ChannelKind; 6] = [
        ChannelKind::Shot,
        ChannelKind::Rad,
        ChannelKind::ThermalViscous,
        ChannelKind::ThermalStructural,
        ChannelKind::Total,
        ChannelKind::Sql,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            ChannelKind::Shot => "shot",
            ChannelKind::Rad => "rad",
            ChannelKind::ThermalViscous => "thermal_viscous",
            ChannelKind::ThermalStructural => "thermal_structural",
            ChannelKind::Total => "total",
            ChannelKind::Sql => "sql",
        }
    }
}

/// What to compute and how.
#[derive(Debug, Clone, PartialEq)]
pub struct BudgetOptions {
    pub sr_enabled: bool,
    pub damping: Damping,
    /// Channels to include; order is irrelevant, emission always follows the
    /// canonical order. Must not be empty.
    pub channels: Vec<ChannelKind>,
}

impl Default for BudgetOptions {
    fn default() -> Self {
        Self {
            sr_enabled: true,
            damping: Damping::Both,
            channels: ChannelKind::ALL.to_vec(),
        }
    }
}

impl BudgetOptions {
    fn validate(&self) -> Result<()> {
        if self.channels.is_empty() {
            return Err(Error::Invalid(vec![Violation::new(
                "channels",
                "at least one channel must be selected",
            )]));
        }
        Ok(())
    }

    fn selected(&self, kind: ChannelKind) -> bool {
        self.channels.contains(&kind)
    }
}

/// One channel value at one frequency.
fn channel_value(
    kind: ChannelKind,
    f_hz: f64,
    inputs: &QuantumNoiseInputs,
    damping: Damping,
) -> Result<f64> {
    match kind {
        ChannelKind::Shot => quantum::shot_asd(f_hz, inputs),
        ChannelKind::Rad => Ok(quantum::rad_asd(f_hz, inputs)),
        ChannelKind::ThermalViscous => {
            mechanics::thermal_displacement_asd(f_hz, &inputs.membrane, DampingModel::Viscous)
        }
        ChannelKind::ThermalStructural => {
            mechanics::thermal_displacement_asd(f_hz, &inputs.membrane, DampingModel::Structural)
        }
        ChannelKind::Total => {
            let shot = quantum::shot_asd(f_hz, inputs)?;
            let rad = quantum::rad_asd(f_hz, inputs);
            let thermal =
                mechanics::thermal_displacement_asd(f_hz, &inputs.membrane, damping.for_total())?;
            Ok((shot * shot + rad * rad + thermal * thermal).sqrt())
        }
        ChannelKind::Sql => Ok(quantum::sql_asd(f_hz, &inputs.membrane)),
    }
}

/// Evaluate the selected channels over the grid.
///
/// Every bin of every emitted channel is finite. A zero-power input makes the
/// shot channel (and therefore the total) an error; radiation pressure drops
/// to zero and the thermal channels are unaffected.
pub fn compute_budget(
    grid: &FrequencyGrid,
    optics: &OpticsParams,
    membrane: &MembraneParams,
    recycling: &RecyclingParams,
    options: &BudgetOptions,
) -> Result<NoiseSpectrum> {
    options.validate()?;
    let inputs = QuantumNoiseInputs::new(*optics, *membrane, recycling, options.sr_enabled)?;
    let mut spectrum = NoiseSpectrum::new(grid.clone());
    for kind in ChannelKind::ALL {
        if !options.selected(kind) {
            continue;
        }
        let values = grid
            .points()
            .iter()
            .map(|&f| channel_value(kind, f, &inputs, options.damping))
            .collect::<Result<Vec<f64>>>()?;
        spectrum.push_channel(kind.name(), Unit::MetersPerSqrtHz, values)?;
    }
    Ok(spectrum)
}

/// ASD ratio of two channels at one frequency.
pub fn ratio_at(
    f_hz: f64,
    numerator: ChannelKind,
    denominator: ChannelKind,
    optics: &OpticsParams,
    membrane: &MembraneParams,
    recycling: &RecyclingParams,
    options: &BudgetOptions,
) -> Result<f64> {
    let inputs = QuantumNoiseInputs::new(*optics, *membrane, recycling, options.sr_enabled)?;
    let num = channel_value(numerator, f_hz, &inputs, options.damping)?;
    let den = channel_value(denominator, f_hz, &inputs, options.damping)?;
    if den == 0.0 {
        return Err(Error::ZeroDenominator(denominator.name()));
    }
    Ok(num / den)
}

/// Result of [`solve_power`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerSolution {
    /// Required effective power g_SR·P at the formula level (W).
    pub effective_power_w: f64,
    /// Required power at the beam splitter, effective power divided by g_SR (W).
    pub power_at_bs_w: f64,
    /// True when f_eval lies at or above the signal-recycling pole, where
    /// recycling no longer buys power.
    pub beyond_pole: bool,
}

/// Effective power for which rad/shot = `target_ratio` at `f_eval_hz`.
///
/// Closed-form inversion of
///
/// ```text
/// ratio(f) = |H(f)| · 16π g_SR r² P / (cλ · (1 + (f/f_SR)²))
/// ```
///
/// which reduces to the DC asymptote for f ≪ f_SR. No iteration.
pub fn solve_power(
    target_ratio: f64,
    f_eval_hz: f64,
    optics: &OpticsParams,
    membrane: &MembraneParams,
    recycling: &RecyclingParams,
    sr_enabled: bool,
) -> Result<PowerSolution> {
    if target_ratio <= 0.0 || !target_ratio.is_finite() {
        return Err(Error::Invalid(vec![Violation::new(
            "target_ratio",
            "must be positive and finite",
        )]));
    }
    let inputs = QuantumNoiseInputs::new(*optics, *membrane, recycling, sr_enabled)?;
    if membrane.reflectance == 0.0 {
        return Err(Error::NoSolution(
            "a fully transparent membrane feels no radiation pressure",
        ));
    }
    let h = mechanics::susceptibility(f_eval_hz, membrane).magnitude();
    let x = f_eval_hz / inputs.gains.f_sr_hz;
    let pole = 1.0 + x * x;
    let effective_power_w = target_ratio * pole * SPEED_OF_LIGHT * optics.wavelength_m
        / (16.0 * PI * membrane.reflectance * h);
    Ok(PowerSolution {
        effective_power_w,
        power_at_bs_w: effective_power_w / inputs.gains.g_sr,
        beyond_pole: f_eval_hz >= inputs.gains.f_sr_hz,
    })
}

/// Result of [`solve_thermal_power`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermalPowerSolution {
    pub effective_power_w: f64,
    pub power_at_bs_w: f64,
    pub beyond_pole: bool,
}

/// Beam-splitter power for which rad/thermal (viscous model) = `margin` at
/// `f_eval_hz`, for a membrane held at the given temperature and Q.
///
/// The susceptibility cancels in the ratio, so the requirement is closed
/// form: rad ∝ √P and thermal ∝ √(T/Q), hence the required power scales as
/// (T/Q)·margin². T = 0 needs no power at all.
#[allow(clippy::too_many_arguments)]
pub fn solve_thermal_power(
    temperature_k: f64,
    quality: f64,
    margin: f64,
    f_eval_hz: f64,
    optics: &OpticsParams,
    membrane: &MembraneParams,
    recycling: &RecyclingParams,
    sr_enabled: bool,
) -> Result<ThermalPowerSolution> {
    let mut violations = Vec::new();
    if temperature_k < 0.0 || !temperature_k.is_finite() {
        violations.push(Violation::new(
            "membrane.T",
            "temperature must be non-negative",
        ));
    }
    if quality <= 0.0 || !quality.is_finite() {
        violations.push(Violation::new("membrane.Q", "Q must be positive"));
    }
    if margin <= 0.0 || !margin.is_finite() {
        violations.push(Violation::new("margin", "must be positive and finite"));
    }
    if !violations.is_empty() {
        return Err(Error::Invalid(violations));
    }
    let inputs = QuantumNoiseInputs::new(*optics, *membrane, recycling, sr_enabled)?;
    if membrane.reflectance == 0.0 {
        return Err(Error::NoSolution(
            "a fully transparent membrane feels no radiation pressure",
        ));
    }
    let omega_mem = 2.0 * PI * membrane.resonance_hz;
    let thermal_force_psd =
        4.0 * BOLTZMANN * temperature_k * membrane.effective_mass_kg * omega_mem / quality;
    let x = f_eval_hz / inputs.gains.f_sr_hz;
    let pole = 1.0 + x * x;
    let effective_power_w =
        margin * margin * pole * thermal_force_psd * SPEED_OF_LIGHT * optics.wavelength_m
            / (16.0 * PI * HBAR * membrane.reflectance);
    Ok(ThermalPowerSolution {
        effective_power_w,
        power_at_bs_w: effective_power_w / inputs.gains.g_sr,
        beyond_pole: f_eval_hz >= inputs.gains.f_sr_hz,
    })
}

/// One row of a parameter sweep, evaluated at a single frequency.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub value: f64,
    pub shot: f64,
    pub rad: f64,
    pub thermal_viscous: f64,
    pub thermal_structural: f64,
    pub rad_over_shot: f64,
    pub rad_over_thermal_viscous: f64,
}

/// Evaluate the noise channels at `f_eval_hz` for each value of one config
/// parameter, in the given order.
pub fn sweep(
    config: &crate::config::SystemConfig,
    param: &str,
    values: &[f64],
    f_eval_hz: f64,
    sr_enabled: bool,
) -> Result<Vec<SweepRow>> {
    let mut rows = Vec::with_capacity(values.len());
    for &value in values {
        let mut varied = config.clone();
        varied.set_key(param, value)?;
        let inputs = QuantumNoiseInputs::new(
            varied.optics,
            varied.membrane,
            &varied.recycling,
            sr_enabled,
        )?;
        let shot = quantum::shot_asd(f_eval_hz, &inputs)?;
        let rad = quantum::rad_asd(f_eval_hz, &inputs);
        let thermal_viscous = mechanics::thermal_displacement_asd(
            f_eval_hz,
            &varied.membrane,
            DampingModel::Viscous,
        )?;
        let thermal_structural = mechanics::thermal_displacement_asd(
            f_eval_hz,
            &varied.membrane,
            DampingModel::Structural,
        )?;
        if thermal_viscous == 0.0 {
            return Err(Error::ZeroDenominator("thermal_viscous"));
        }
        rows.push(SweepRow {
            value,
            shot,
            rad,
            thermal_viscous,
            thermal_structural,
            rad_over_shot: rad / shot,
            rad_over_thermal_viscous: rad / thermal_viscous,
        });
    }
    Ok(rows)
}
