//! Reference values of the transcendental constants used by the residue
//! polynomials.

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MathConstants {
    pub pi: f64,
    /// Euler-Mascheroni constant.
    pub gamma: f64,
    /// First Stieltjes constant.
    pub gamma1: f64,
    pub zeta3: f64,
    /// Derivative of the Riemann zeta function at -1.
    pub zeta_prime_m1: f64,
    pub ln2: f64,
    pub ln2pi: f64,
}

pub const CONSTANTS: MathConstants = MathConstants {
    pi: std::f64::consts::PI,
    gamma: 0.577_215_664_901_532_9,
    gamma1: -0.072_815_845_483_676_72,
    zeta3: 1.202_056_903_159_594_3,
    zeta_prime_m1: -0.165_421_143_700_450_93,
    ln2: std::f64::consts::LN_2,
    ln2pi: 1.837_877_066_409_345_5,
};
