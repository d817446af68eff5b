//! Physical constants (CODATA 2018 exact values), compiled in.

/// Reduced Planck constant (J·s).
pub const HBAR: f64 = 1.054571817e-34;
/// Speed of light in vacuum (m/s).
pub const SPEED_OF_LIGHT: f64 = 299792458.0;
/// Boltzmann constant (J/K).
pub const BOLTZMANN: f64 = 1.380649e-23;

/// The constants bundled as a value, for code that wants to pass them around.
///
/// Not user-configurable; the only instance is [`CODATA`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    /// Reduced Planck constant (J·s).
    pub hbar: f64,
    /// Speed of light (m/s).
    pub c: f64,
    /// Boltzmann constant (J/K).
    pub k_b: f64,
}

/// The compiled-in constant set.
pub const CODATA: PhysicalConstants = PhysicalConstants {
    hbar: HBAR,
    c: SPEED_OF_LIGHT,
    k_b: BOLTZMANN,
};
