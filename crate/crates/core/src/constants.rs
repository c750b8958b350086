//! Physical constants and defaults.
//!
//! Internally all Hamiltonians are angular frequencies (rad/s, ħ ≡ 1);
//! ħ and μ₀ only enter when converting geometry to couplings.

/// Reduced Planck constant (J·s).
pub const HBAR: f64 = 1.054_571_817e-34;

/// μ₀ / 4π (T·m/A), SI prefactor of the dipole-dipole interaction.
pub const MU0_OVER_4PI: f64 = 1e-7;

/// Gyromagnetic ratio of ²⁹Si: γ/2π = −8.465 MHz/T.
pub const GAMMA_SI29: f64 = -2.0 * std::f64::consts::PI * 8.465e6;

/// Conventional-cell lattice constant of silicon (nm).
pub const SILICON_LATTICE_CONSTANT_NM: f64 = 0.5431;

/// ²⁹Si Larmor frequency of the reference experiment (Hz); used only
/// for figure-of-merit arithmetic.
pub const CARRIER_FREQUENCY_HZ: f64 = 59.575e6;

/// Natural isotopic abundance of ²⁹Si.
pub const NATURAL_ABUNDANCE: f64 = 0.047;

/// Largest spin count for which dense 2^N matrices are allowed.
pub const MAX_SPINS: usize = 14;
