//! Residue constants, saddle points and coefficient asymptotics.

pub mod constants;
pub mod estimate;
pub mod lambert;
pub mod residue;
pub mod saddle;

pub use constants::{MathConstants, CONSTANTS};
pub use estimate::{
    coeff_asymptotic, conjectured_log_estimate, kotesovec_ratio, AsymptoticModel, Capability,
    Estimate,
};
pub use lambert::{lambert_w, lambert_w_ln};
pub use residue::{residue_leading, residue_polynomial, Pole, ResiduePolynomial, ResidueRole};
pub use saddle::{log_coeff_asymptotic, weak_saddle_alpha, Index};
