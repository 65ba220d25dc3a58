//! Closed-form coefficient estimates, evaluated in log space.

use std::fmt;

use crate::asympt::constants::CONSTANTS;
use crate::asympt::lambert::lambert_w_ln;
use crate::asympt::residue::{residue_polynomial, Pole};
use crate::asympt::saddle::Index;
use crate::divisors::{AdmissibleTriple, Form};
use crate::error::{Error, Result};

/// Note attached to solvable cases that still lack a closed-form estimate.
pub const SOLVABLE_NOTE: &str = "solvable saddle equation; no closed-form estimate implemented";
/// Note attached to every other triple.
pub const LOG_ONLY_NOTE: &str = "saddle equation has no explicit solution; log-asymptotics only";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Capability {
    FullCoefficient,
    LogOnly(&'static str),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AsymptoticModel {
    pub triple: AdmissibleTriple,
    pub form: Form,
    pub capability: Capability,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum ClosedForm {
    HardyRamanujan,
    DistinctParts,
    Kotesovec,
    DivisorQ,
    DivisorSquaredQ,
}

fn closed_form(triple: AdmissibleTriple, form: Form) -> Option<ClosedForm> {
    match (form, (triple.i(), triple.j(), triple.k())) {
        (Form::P, (0, 0, 1)) => Some(ClosedForm::HardyRamanujan),
        (Form::Q, (0, 0, 1)) => Some(ClosedForm::DistinctParts),
        (Form::P, (0, 1, 0)) => Some(ClosedForm::Kotesovec),
        (Form::Q, (0, 1, 0)) => Some(ClosedForm::DivisorQ),
        (Form::Q, (0, 2, 0)) => Some(ClosedForm::DivisorSquaredQ),
        _ => None,
    }
}

fn saddle_solvable(triple: AdmissibleTriple, form: Form) -> bool {
    let t = (triple.i(), triple.j(), triple.k());
    matches!(t, (1, 0, 0) | (1, 0, 1) | (0, 0, 1) | (0, 1, 0))
        || (form == Form::Q && t == (0, 2, 0))
}

impl AsymptoticModel {
    pub fn new(triple: AdmissibleTriple, form: Form) -> Self {
        let capability = if closed_form(triple, form).is_some() {
            Capability::FullCoefficient
        } else if saddle_solvable(triple, form) {
            Capability::LogOnly(SOLVABLE_NOTE)
        } else {
            Capability::LogOnly(LOG_ONLY_NOTE)
        };
        AsymptoticModel {
            triple,
            form,
            capability,
        }
    }

    pub fn saddle_solvable(&self) -> bool {
        saddle_solvable(self.triple, self.form)
    }
}

/// A positive estimate stored as its natural logarithm.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Estimate {
    pub ln_value: f64,
}

impl Estimate {
    pub fn log10(&self) -> f64 {
        self.ln_value / std::f64::consts::LN_10
    }

    /// `(m, e)` with `value = m * 10^e` and `1 <= m < 10`.
    pub fn mantissa_exponent(&self) -> (f64, i64) {
        let l = self.log10();
        let e = l.floor();
        let m = 10f64.powf(l - e);
        if m >= 10.0 {
            (m / 10.0, e as i64 + 1)
        } else {
            (m, e as i64)
        }
    }

    pub fn value(&self) -> f64 {
        self.ln_value.exp()
    }
}

impl fmt::Display for Estimate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (mut m, mut e) = self.mantissa_exponent();
        if (m * 1e4).round() >= 1e5 {
            m /= 10.0;
            e += 1;
        }
        write!(f, "{m:.4}e{e}")
    }
}

/// `W(e^gamma n)` from `ln n`.
fn kotesovec_w(ln_n: f64) -> Result<f64> {
    lambert_w_ln(CONSTANTS.gamma + ln_n)
}

/// Closed-form estimate of `[z^n] F(z)`; for `(0,1,0)` and form `P` this
/// estimates `p_n / n!`.
pub fn coeff_asymptotic(
    triple: AdmissibleTriple,
    form: Form,
    n: impl Into<Index>,
) -> Result<Estimate> {
    let n = n.into();
    let which = closed_form(triple, form).ok_or(Error::NoClosedForm { triple, form })?;
    let l = n.ln();
    if l.is_nan() || l < 2f64.ln() - 1e-12 {
        return Err(Error::Domain(format!("estimate needs n >= 2, got {n}")));
    }
    let c = CONSTANTS;
    let ln_value = match which {
        ClosedForm::HardyRamanujan => {
            c.pi * (l / 2.0).exp() * (2.0f64 / 3.0).sqrt() - (4.0 * 3f64.sqrt()).ln() - l
        }
        ClosedForm::DistinctParts => {
            c.pi * (l / 2.0).exp() / 3f64.sqrt() - (4.0 * 3f64.powf(0.25)).ln() - 0.75 * l
        }
        ClosedForm::Kotesovec => {
            let poly = residue_polynomial(triple, Form::P, Pole::Zero)?;
            let w = kotesovec_w(l)?;
            let ln_u = w.ln() - l;
            // log(w/n) < 0; the square root takes its magnitude
            (1.0 - c.gamma) * ln_u - 0.5 * (2.0 * c.pi * -ln_u).ln()
                + poly.coefficients[0]
                + w
                + ln_u * ln_u / 2.0
        }
        ClosedForm::DivisorQ => {
            let ln2 = c.ln2;
            let constant =
                (c.gamma - ln2 / 2.0 + 0.5) * ln2 - 0.5 * c.pi.ln() - (ln2 - 0.5) * ln2.ln();
            constant + (ln2 - 1.0) * l
        }
        ClosedForm::DivisorSquaredQ => {
            let poly = residue_polynomial(triple, Form::Q, Pole::Zero)?;
            let (d0, d1, d2) = (
                poly.coefficients[0],
                poly.coefficients[1],
                poly.coefficients[2],
            );
            let ln_x = l - d1 / (2.0 * d2) - (2.0 * d2).ln();
            if ln_x <= 0.0 {
                return Err(Error::Domain(format!(
                    "n = {n} too small for this estimate"
                )));
            }
            let ln_theta = (2.0 * d2).ln() - l + lambert_w_ln(ln_x)?.ln();
            let ln_big_l = (2.0 * d2).ln() - l + ln_x.ln();
            d0 + d1 * ln_theta + d2 * ln_theta * ln_theta - d1
                - (2.0 * c.pi.sqrt()).ln()
                // log of the inner quantity is negative; the square root takes its magnitude
                - 0.5 * (d2 * ln_big_l.abs()).ln()
                + (1.0 - 2.0 * d2) * ln_big_l
        }
    };
    if !ln_value.is_finite() {
        return Err(Error::Domain(format!(
            "estimate for {triple} {form} overflows at n = {n}"
        )));
    }
    Ok(Estimate { ln_value })
}

/// `w_n^2 / ln^2 n` with `w_n = W(e^gamma n)`.
pub fn kotesovec_ratio(n: impl Into<Index>) -> Result<f64> {
    let n = n.into();
    let l = n.ln();
    if l.is_nan() || l < 2f64.ln() - 1e-12 {
        return Err(Error::Domain(format!("ratio needs n >= 2, got {n}")));
    }
    let w = kotesovec_w(l)?;
    Ok((w / l) * (w / l))
}

/// The conjectured growth `(ln 2 / 2) ln^2 n` of `log(p_n / n!)` for `(0,1,0)`.
pub fn conjectured_log_estimate(n: impl Into<Index>) -> f64 {
    let l = n.into().ln();
    CONSTANTS.ln2 / 2.0 * l * l
}
