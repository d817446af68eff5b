//! Frequency grids and named spectra of amplitude spectral densities.

use crate::error::{Error, Result, Violation};

/// Grid point spacing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spacing {
    Log,
    Linear,
}

impl Spacing {
    pub fn as_str(&self) -> &'static str {
        match self {
            Spacing::Log => "log",
            Spacing::Linear => "linear",
        }
    }
}

/// A strictly increasing frequency grid (Hz).
#[derive(Debug, Clone, PartialEq)]
pub struct FrequencyGrid {
    f_min_hz: f64,
    f_max_hz: f64,
    n_points: usize,
    spacing: Spacing,
    points: Vec<f64>,
}

impl FrequencyGrid {
    pub fn new(f_min_hz: f64, f_max_hz: f64, n_points: usize, spacing: Spacing) -> Result<Self> {
        let mut v = Vec::new();
        if f_min_hz <= 0.0 || !f_min_hz.is_finite() {
            v.push(Violation::new("grid.f_min", "must be positive"));
        }
        if f_max_hz < f_min_hz || !f_max_hz.is_finite() {
            v.push(Violation::new("grid.f_max", "must be at least grid.f_min"));
        }
        if n_points == 0 {
            v.push(Violation::new("grid.n_points", "must be at least 1"));
        }
        if n_points >= 2 && f_max_hz == f_min_hz {
            v.push(Violation::new(
                "grid.f_max",
                "must exceed grid.f_min for more than one point",
            ));
        }
        if !v.is_empty() {
            return Err(Error::Invalid(v));
        }

        let mut points = Vec::with_capacity(n_points);
        if n_points == 1 {
            points.push(f_min_hz);
        } else {
            let last = (n_points - 1) as f64;
            for i in 0..n_points {
                let frac = i as f64 / last;
                let f = match spacing {
                    Spacing::Log => f_min_hz * (f_max_hz / f_min_hz).powf(frac),
                    Spacing::Linear => f_min_hz + frac * (f_max_hz - f_min_hz),
                };
                points.push(f);
            }
            // pin the endpoints so they are exact regardless of rounding
            points[0] = f_min_hz;
            points[n_points - 1] = f_max_hz;
        }
        debug_assert!(points.windows(2).all(|w| w[0] < w[1]));

        Ok(Self {
            f_min_hz,
            f_max_hz,
            n_points,
            spacing,
            points,
        })
    }

    /// Default budget grid: log-spaced, 1 kHz to 1 MHz, 1000 points.
    pub fn default_log() -> Self {
        Self::new(1e3, 1e6, 1000, Spacing::Log).expect("default grid parameters are valid")
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.n_points
    }

    pub fn is_empty(&self) -> bool {
        false // n_points >= 1 by construction
    }

    pub fn f_min_hz(&self) -> f64 {
        self.f_min_hz
    }

    pub fn f_max_hz(&self) -> f64 {
        self.f_max_hz
    }

    pub fn spacing(&self) -> Spacing {
        self.spacing
    }
}

/// Units of an amplitude spectral density channel.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Unit {
    MetersPerSqrtHz,
    NewtonsPerSqrtHz,
}

impl Unit {
    pub fn as_str(&self) -> &'static str {
        match self {
            Unit::MetersPerSqrtHz => "m/sqrt(Hz)",
            Unit::NewtonsPerSqrtHz => "N/sqrt(Hz)",
        }
    }
}

/// One named channel of ASD values, same length as the grid.
#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    pub name: String,
    pub unit: Unit,
    pub values: Vec<f64>,
}

/// A frequency grid with named ASD channels.
#[derive(Debug, Clone, PartialEq)]
pub struct NoiseSpectrum {
    grid: FrequencyGrid,
    channels: Vec<Series>,
}

impl NoiseSpectrum {
    pub fn new(grid: FrequencyGrid) -> Self {
        Self {
            grid,
            channels: Vec::new(),
        }
    }

    /// Add a channel. Names must be unique, lengths must match the grid, and
    /// every value must be finite and non-negative.
    pub fn push_channel(&mut self, name: &str, unit: Unit, values: Vec<f64>) -> Result<()> {
        let mut v = Vec::new();
        if self.channels.iter().any(|c| c.name == name) {
            v.push(Violation::new(
                "channel",
                format!("duplicate name `{name}`"),
            ));
        }
        if values.len() != self.grid.len() {
            v.push(Violation::new(
                "channel",
                format!(
                    "`{name}` has {} values for a {}-point grid",
                    values.len(),
                    self.grid.len()
                ),
            ));
        }
        if values.iter().any(|x| !x.is_finite() || *x < 0.0) {
            v.push(Violation::new(
                "channel",
                format!("`{name}` contains a negative or non-finite value"),
            ));
        }
        if !v.is_empty() {
            return Err(Error::Invalid(v));
        }
        self.channels.push(Series {
            name: name.to_owned(),
            unit,
            values,
        });
        Ok(())
    }

    pub fn grid(&self) -> &FrequencyGrid {
        &self.grid
    }

    pub fn channels(&self) -> &[Series] {
        &self.channels
    }

    pub fn channel(&self, name: &str) -> Option<&Series> {
        self.channels.iter().find(|c| c.name == name)
    }
}
