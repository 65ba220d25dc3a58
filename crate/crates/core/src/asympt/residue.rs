//! Residues of the Mellin transform at the poles `s = 2, 1, 0`.
//!
//! Each residue is a polynomial in `log t`. The closed forms give its leading
//! coefficient for every triple; the full polynomial is known only for a
//! handful of small triples.

use std::fmt;

use crate::asympt::constants::CONSTANTS;
use crate::divisors::{AdmissibleTriple, Form};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pole {
    Two,
    One,
    Zero,
}

impl Pole {
    pub fn value(self) -> u8 {
        match self {
            Pole::Two => 2,
            Pole::One => 1,
            Pole::Zero => 0,
        }
    }
}

impl TryFrom<u8> for Pole {
    type Error = Error;

    fn try_from(s: u8) -> Result<Self> {
        match s {
            2 => Ok(Pole::Two),
            1 => Ok(Pole::One),
            0 => Ok(Pole::Zero),
            _ => Err(Error::Domain(format!("no pole at s = {s}"))),
        }
    }
}

impl fmt::Display for Pole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// Which of the four residue polynomials `a, b, c, d` a value belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResidueRole {
    A,
    B,
    C,
    D,
}

impl ResidueRole {
    pub fn of(form: Form, pole: Pole) -> Self {
        match (pole, form) {
            (Pole::Two, _) => ResidueRole::A,
            (Pole::One, _) => ResidueRole::B,
            (Pole::Zero, Form::P) => ResidueRole::C,
            (Pole::Zero, Form::Q) => ResidueRole::D,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ResiduePolynomial {
    pub pole: Pole,
    pub role: ResidueRole,
    /// Ascending powers of `log t`.
    pub coefficients: Vec<f64>,
}

impl ResiduePolynomial {
    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn leading(&self) -> f64 {
        *self.coefficients.last().expect("nonempty polynomial")
    }

    pub fn eval(&self, z: f64) -> f64 {
        self.coefficients
            .iter()
            .rev()
            .fold(0.0, |acc, &c| acc * z + c)
    }
}

/// Degree of the residue polynomial at `pole`.
pub fn residue_degree(triple: AdmissibleTriple, form: Form, pole: Pole) -> Result<u32> {
    pole_exists(triple, pole)?;
    Ok(match ResidueRole::of(form, pole) {
        ResidueRole::A => triple.i() - 1,
        ResidueRole::B => triple.k() - 1,
        ResidueRole::C => triple.j() + 1,
        ResidueRole::D => triple.j(),
    })
}

fn pole_exists(triple: AdmissibleTriple, pole: Pole) -> Result<()> {
    let present = match pole {
        Pole::Two => triple.i() >= 1,
        Pole::One => triple.k() >= 1,
        Pole::Zero => true,
    };
    if present {
        Ok(())
    } else {
        Err(Error::PoleAbsent {
            triple,
            pole: pole.value(),
        })
    }
}

fn sign(e: u32) -> f64 {
    if e.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

fn factorial(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

/// Leading coefficient `A`, `B`, `C` or `D` of the residue at `pole`.
pub fn residue_leading(triple: AdmissibleTriple, form: Form, pole: Pole) -> Result<f64> {
    pole_exists(triple, pole)?;
    let (i, j, k) = (triple.i(), triple.j(), triple.k());
    let c = CONSTANTS;
    let six = 6f64;
    Ok(match ResidueRole::of(form, pole) {
        ResidueRole::A => {
            let a = sign(i - 1) * c.zeta3.powi((j + 1) as i32) * c.pi.powi(2 * k as i32)
                / (six.powi(k as i32) * factorial(i - 1));
            match form {
                Form::P => a,
                Form::Q => 0.75 * a,
            }
        }
        ResidueRole::B => {
            let b = sign(i + k - 1) * c.pi.powi(2 * (j + 1) as i32)
                / (six.powi((j + 1) as i32) * 2f64.powi(i as i32) * factorial(k - 1));
            match form {
                Form::P => b,
                Form::Q => b / 2.0,
            }
        }
        ResidueRole::C => {
            sign(i + j + k + 1) / (2f64.powi(k as i32) * factorial(j + 1) * 12f64.powi(i as i32))
        }
        ResidueRole::D => {
            c.ln2 * sign(i + j + k) / (2f64.powi(k as i32) * factorial(j) * 12f64.powi(i as i32))
        }
    })
}

/// Triples and forms whose full residue polynomials are known.
pub const TABULATED: [(Form, (u32, u32, u32)); 9] = [
    (Form::P, (1, 0, 0)),
    (Form::P, (1, 0, 1)),
    (Form::P, (0, 0, 1)),
    (Form::P, (0, 1, 0)),
    (Form::Q, (1, 0, 0)),
    (Form::Q, (1, 0, 1)),
    (Form::Q, (0, 0, 1)),
    (Form::Q, (0, 1, 0)),
    (Form::Q, (0, 2, 0)),
];

/// Every tabulated `(triple, form, pole)` whose pole is present.
pub fn tabulated_rows() -> Vec<(AdmissibleTriple, Form, Pole)> {
    let mut rows = Vec::new();
    for (form, (i, j, k)) in TABULATED {
        let t = AdmissibleTriple::new(i, j, k).expect("tabulated triples are admissible");
        for pole in [Pole::Two, Pole::One, Pole::Zero] {
            if pole_exists(t, pole).is_ok() {
                rows.push((t, form, pole));
            }
        }
    }
    rows
}

/// Full residue polynomial for a tabulated triple.
pub fn residue_polynomial(
    triple: AdmissibleTriple,
    form: Form,
    pole: Pole,
) -> Result<ResiduePolynomial> {
    pole_exists(triple, pole)?;
    let c = CONSTANTS;
    let (pi2, ln2) = (c.pi * c.pi, c.ln2);
    let (g, g1) = (c.gamma, c.gamma1);
    let key = (form, (triple.i(), triple.j(), triple.k()), pole);
    let coefficients = match key {
        (Form::P, (1, 0, 0), Pole::Two) => vec![c.zeta3],
        (Form::P, (1, 0, 0), Pole::Zero) => vec![c.zeta_prime_m1, 1.0 / 12.0],
        (Form::P, (1, 0, 1), Pole::Two) => vec![pi2 * c.zeta3 / 6.0],
        (Form::P, (1, 0, 1), Pole::One) => vec![-pi2 / 12.0],
        (Form::P, (1, 0, 1), Pole::Zero) => {
            vec![-c.zeta_prime_m1 / 2.0 + c.ln2pi / 24.0, -1.0 / 24.0]
        }
        (Form::P, (0, 0, 1), Pole::One) => vec![pi2 / 6.0],
        (Form::P, (0, 0, 1), Pole::Zero) => vec![-c.ln2pi / 2.0, 0.5],
        (Form::P, (0, 1, 0), Pole::Zero) => {
            vec![pi2 / 12.0 - g * g / 2.0 - 2.0 * g1, -g, 0.5]
        }
        (Form::Q, (1, 0, 0), Pole::Two) => vec![0.75 * c.zeta3],
        (Form::Q, (1, 0, 0), Pole::Zero) => vec![-ln2 / 12.0],
        (Form::Q, (1, 0, 1), Pole::Two) => vec![pi2 * c.zeta3 / 8.0],
        (Form::Q, (1, 0, 1), Pole::One) => vec![-pi2 / 24.0],
        (Form::Q, (1, 0, 1), Pole::Zero) => vec![ln2 / 24.0],
        (Form::Q, (0, 0, 1), Pole::One) => vec![pi2 / 12.0],
        (Form::Q, (0, 0, 1), Pole::Zero) => vec![-ln2 / 2.0],
        (Form::Q, (0, 1, 0), Pole::Zero) => vec![g * ln2 - ln2 * ln2 / 2.0, -ln2],
        (Form::Q, (0, 2, 0), Pole::Zero) => vec![
            g * g * ln2 / 2.0 + pi2 * ln2 / 12.0 - g * ln2 * ln2 + ln2.powi(3) / 6.0
                - 3.0 * g1 * ln2,
            ln2 * ln2 / 2.0 - 2.0 * g * ln2,
            ln2 / 2.0,
        ],
        _ => {
            return Err(Error::NotTabulated {
                triple,
                form,
                pole: pole.value(),
            })
        }
    };
    Ok(ResiduePolynomial {
        pole,
        role: ResidueRole::of(form, pole),
        coefficients,
    })
}
