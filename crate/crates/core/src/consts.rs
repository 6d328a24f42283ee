//! Frozen numerical constants.

/// Euler's constant γ.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_86;

/// 2γ, the limit of Σ (Λ(n) − 1)/n taken with a minus sign.
pub const TWO_GAMMA: f64 = 2.0 * EULER_GAMMA;

/// Mertens' constant H = Σ_{m≥2} Σ_p 1/(m pᵐ).
///
/// Frozen from [`crate::mertens::mertens_h_mobius`]; the test suite
/// recomputes it by both routes.
pub const MERTENS_H: f64 = 0.315_718_452_053_890_1;

/// π²/6 = ζ(2).
pub const PI_SQUARED_OVER_SIX: f64 = std::f64::consts::PI * std::f64::consts::PI / 6.0;
