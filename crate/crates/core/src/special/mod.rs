//! Special-function substrate: Bernoulli numbers, real ζ and prime ζ, the
//! exponential integral, and the Euler–Maclaurin cotangent expansion.

mod bernoulli;
mod cot;
mod expint;
mod zeta;

pub use bernoulli::{
    bernoulli_f64, bernoulli_numbers, gamma_bernoulli_partial_sums, BernoulliCache,
    MAX_BERNOULLI_COUNT,
};
pub use cot::{cot_half_expansion, CotExpansion, MAX_COT_ORDER};
pub use expint::{e1_scaled, ei_scaled, ei_symmetric_combo, exp_integral_ei, EI_SERIES_RADIUS};
pub use zeta::{log_zeta, prime_zeta, zeta_minus_one, zeta_real, ZetaEvaluator};
