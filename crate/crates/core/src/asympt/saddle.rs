//! Weak saddle points and first-order log-asymptotics.
//!
//! The closed forms carry signed constants such as `(2A)^(1/3) (-3)^(-(i-1)/3)`.
//! The sign of each constant is fixed by the triple, so every expression
//! collapses to a positive real one; the code evaluates that form directly and
//! asserts the sign it relies on.

use std::fmt;

use crate::asympt::lambert::lambert_w_ln;
use crate::asympt::residue::{residue_leading, Pole};
use crate::divisors::{AdmissibleTriple, Form};
use crate::error::{Error, Result};

/// A coefficient index given directly or through its logarithm, so that
/// indices such as `10^(10^5)` can be used.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Index {
    Value(f64),
    Ln(f64),
}

impl Index {
    pub fn from_log10(x: f64) -> Self {
        Index::Ln(x * std::f64::consts::LN_10)
    }

    pub fn ln(self) -> f64 {
        match self {
            Index::Value(n) => n.ln(),
            Index::Ln(l) => l,
        }
    }

    fn require_at_least(self, min: f64) -> Result<f64> {
        let l = self.ln();
        if l.is_nan() || l < min.ln() - 1e-12 {
            return Err(Error::Domain(format!("index {self} is below {min}")));
        }
        Ok(l)
    }
}

impl From<f64> for Index {
    fn from(n: f64) -> Self {
        Index::Value(n)
    }
}

impl From<u64> for Index {
    fn from(n: u64) -> Self {
        Index::Value(n as f64)
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Index::Value(n) => write!(f, "{n}"),
            Index::Ln(l) => write!(f, "exp({l})"),
        }
    }
}

/// The dominant term of the saddle equation in `y = -alpha`:
/// `scale * y^power * e^(rate * y) = n`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SaddleEquation {
    pub scale: f64,
    pub power: u32,
    pub rate: f64,
}

/// Picks the branch from `(i, k, j, form)` and folds the residue sign into
/// `scale`.
pub fn saddle_equation(triple: AdmissibleTriple, form: Form) -> SaddleEquation {
    let (i, j, k) = (triple.i(), triple.j(), triple.k());
    let lead = |pole| residue_leading(triple, form, pole).expect("pole present on this branch");
    let (signed, power, rate) = if i >= 1 {
        (2.0 * lead(Pole::Two) * sign(i - 1), i - 1, 3.0)
    } else if k >= 1 {
        (lead(Pole::One) * sign(k - 1), k - 1, 2.0)
    } else {
        match form {
            Form::P => (f64::from(j + 1) * lead(Pole::Zero) * sign(j + 1), j, 1.0),
            Form::Q => (f64::from(j) * lead(Pole::Zero) * sign(j), j - 1, 1.0),
        }
    };
    assert!(signed > 0.0, "sign cancellation failed for {triple} {form}");
    SaddleEquation {
        scale: signed,
        power,
        rate,
    }
}

fn sign(e: u32) -> f64 {
    if e.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// `alpha(n)` with the weak saddle at `r = exp(-exp(alpha(n)))`.
pub fn weak_saddle_alpha(triple: AdmissibleTriple, form: Form, n: impl Into<Index>) -> Result<f64> {
    let ln_n = n.into().require_at_least(2.0)?;
    let eq = saddle_equation(triple, form);
    let ln_ratio = ln_n - eq.scale.ln();
    let y = if eq.power == 0 {
        ln_ratio / eq.rate
    } else {
        let p = f64::from(eq.power);
        let ln_arg = (eq.rate / p).ln() + ln_ratio / p;
        p / eq.rate * lambert_w_ln(ln_arg)?
    };
    if !y.is_finite() {
        return Err(Error::Domain(format!(
            "saddle point for {triple} {form} is not a finite real"
        )));
    }
    Ok(-y)
}

/// `(constant, log exponent, n exponent)` with
/// `log [z^n] F ~ constant * (ln n)^(log exponent) * n^(n exponent)`.
pub fn log_asymptotic_shape(triple: AdmissibleTriple, form: Form) -> (f64, f64, f64) {
    let (i, j, k) = (triple.i(), triple.j(), triple.k());
    let lead = |pole| residue_leading(triple, form, pole).expect("pole present on this branch");
    let (constant, log_exp, n_exp) = if i >= 1 {
        let a = lead(Pole::Two);
        let inner = 2.0 * a * sign(i - 1) / 3f64.powi(i as i32 - 1);
        (1.5 * inner.cbrt(), f64::from(i - 1) / 3.0, 2.0 / 3.0)
    } else if k >= 1 {
        let b = lead(Pole::One);
        let inner = b * sign(k - 1) / 2f64.powi(k as i32 - 1);
        assert!(inner > 0.0, "sign cancellation failed for {triple} {form}");
        (2.0 * inner.sqrt(), f64::from(k - 1) / 2.0, 0.5)
    } else {
        match form {
            Form::P => (sign(j + 1) * lead(Pole::Zero), f64::from(j + 1), 0.0),
            Form::Q => (sign(j) * lead(Pole::Zero), f64::from(j), 0.0),
        }
    };
    assert!(
        constant.is_finite() && constant > 0.0,
        "sign cancellation failed for {triple} {form}"
    );
    (constant, log_exp, n_exp)
}

/// First-order value of `log [z^n] F(z)`. Needs `n > 1`.
pub fn log_coeff_asymptotic(
    triple: AdmissibleTriple,
    form: Form,
    n: impl Into<Index>,
) -> Result<f64> {
    let n = n.into();
    let ln_n = n.ln();
    if ln_n.is_nan() || ln_n <= 0.0 {
        return Err(Error::Domain(format!("index {n} must exceed 1")));
    }
    let (constant, log_exp, n_exp) = log_asymptotic_shape(triple, form);
    let v = (constant.ln() + log_exp * ln_n.ln() + n_exp * ln_n).exp();
    if !v.is_finite() {
        return Err(Error::Domain(format!(
            "log-asymptotic value for {triple} {form} overflows"
        )));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asympt::constants::CONSTANTS;
    use crate::asympt::lambert::lambert_w;

    fn t(i: u32, j: u32, k: u32) -> AdmissibleTriple {
        AdmissibleTriple::new(i, j, k).unwrap()
    }

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn alpha_examples() {
        let pi2 = CONSTANTS.pi * CONSTANTS.pi;
        let a = weak_saddle_alpha(t(0, 0, 1), Form::P, 100.0).unwrap();
        assert!(rel(a, -0.5 * (600.0 / pi2).ln()) < 1e-14);
        assert!((a + 2.0537).abs() < 1e-4);

        let a = weak_saddle_alpha(t(1, 0, 0), Form::P, 8.0 * CONSTANTS.zeta3).unwrap();
        assert!(rel(a, -(4f64.ln()) / 3.0) < 1e-14);

        for n in [2.0, 10.0, 1e6] {
            let a = weak_saddle_alpha(t(0, 1, 0), Form::Q, n).unwrap();
            assert!(rel(a, (CONSTANTS.ln2 / n).ln()) < 1e-14);
        }
    }

    #[test]
    fn alpha_solves_the_dominant_equation() {
        for triple in AdmissibleTriple::all_up_to(3) {
            for form in [Form::P, Form::Q] {
                let eq = saddle_equation(triple, form);
                for n in [10.0, 1e3, 1e8] {
                    let y = -weak_saddle_alpha(triple, form, n).unwrap();
                    let mut lhs = eq.scale.ln() + eq.rate * y;
                    if eq.power > 0 {
                        lhs += f64::from(eq.power) * y.ln();
                    }
                    assert!(
                        (lhs - f64::ln(n)).abs() < 1e-9 * f64::ln(n),
                        "{triple} {form} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn alpha_branch_with_lambert() {
        // i = 2: y = (1/3) W(3 n / (2A))
        let a2 = residue_leading(t(2, 0, 0), Form::P, Pole::Two).unwrap();
        let n = 500.0;
        let expected = -lambert_w(3.0 * n / (2.0 * a2.abs())).unwrap() / 3.0;
        assert!(rel(weak_saddle_alpha(t(2, 0, 0), Form::P, n).unwrap(), expected) < 1e-13);
    }

    #[test]
    fn alpha_domain() {
        assert!(weak_saddle_alpha(t(0, 1, 0), Form::P, 1.5).is_err());
        assert!(weak_saddle_alpha(t(0, 1, 0), Form::P, Index::Ln(f64::NAN)).is_err());
        assert!(weak_saddle_alpha(t(2, 0, 0), Form::P, Index::from_log10(1e5)).is_ok());
    }

    #[test]
    fn log_asymptotic_examples() {
        let pi = CONSTANTS.pi;
        for n in [3.0, 10.0, 123.0, 1e4, 1e9] {
            let p = log_coeff_asymptotic(t(0, 0, 1), Form::P, n).unwrap();
            assert!(rel(p, pi * (2.0 * n / 3.0).sqrt()) < 1e-12);
            let q = log_coeff_asymptotic(t(0, 0, 1), Form::Q, n).unwrap();
            assert!(rel(q, pi * (n / 3.0).sqrt()) < 1e-12);
            let k = log_coeff_asymptotic(t(0, 1, 0), Form::P, n).unwrap();
            assert!(rel(k, f64::ln(n).powi(2) / 2.0) < 1e-12);
        }
        let e = std::f64::consts::E;
        let v = log_coeff_asymptotic(t(2, 0, 0), Form::P, e).unwrap();
        let expected = 1.5 * (2.0 * CONSTANTS.zeta3 / 3.0).cbrt() * e.powf(2.0 / 3.0);
        assert!(rel(v, expected) < 1e-12);
        assert!(log_coeff_asymptotic(t(0, 1, 0), Form::P, 1.0).is_err());
    }

    #[test]
    fn signed_and_simplified_forms_agree() {
        // (2A/(-3)^(i-1))^(1/3) evaluated as a real cube root of a signed value
        for triple in AdmissibleTriple::all_up_to(3) {
            for form in [Form::P, Form::Q] {
                let (constant, _, _) = log_asymptotic_shape(triple, form);
                let (i, j, k) = (triple.i(), triple.j(), triple.k());
                let signed = if i >= 1 {
                    let a = residue_leading(triple, form, Pole::Two).unwrap();
                    1.5 * (2.0 * a / (-3f64).powi(i as i32 - 1)).cbrt()
                } else if k >= 1 {
                    let b = residue_leading(triple, form, Pole::One).unwrap();
                    2.0 * (b / (-2f64).powi(k as i32 - 1)).sqrt()
                } else {
                    let c = residue_leading(triple, form, Pole::Zero).unwrap();
                    match form {
                        Form::P => (-1f64).powi(j as i32 + 1) * c,
                        Form::Q => (-1f64).powi(j as i32) * c,
                    }
                };
                assert!(constant > 0.0);
                assert!(rel(constant, signed) < 1e-14, "{triple} {form}");
            }
        }
    }

    #[test]
    fn huge_indices() {
        let v = log_coeff_asymptotic(t(0, 1, 0), Form::P, Index::from_log10(1e5)).unwrap();
        let ln_n = 1e5 * std::f64::consts::LN_10;
        assert!(rel(v, ln_n * ln_n / 2.0) < 1e-12);
        assert!(log_coeff_asymptotic(t(0, 0, 1), Form::P, Index::from_log10(1e5)).is_err());
    }
}
