//! High precision constants and numeric SMZV evaluation.

pub mod hpreal;
pub mod numeric;
pub mod pipoly;
pub mod zeta;

pub use hpreal::{bits_for_digits, HPReal};
pub use numeric::{det_float, eval_ladder, eval_numeric, mzsv_numeric, mzv_numeric, smzv_ladder, smzv_numeric, Ladder, NumericConfig, TailEstimate};
pub use pipoly::{bernoulli, zeta_even, PiPoly};
pub use zeta::{pi, repeated_zeta, zeta_hp, zeta_int, ZetaCache, ZetaValue};
