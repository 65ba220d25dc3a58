//! Exact coefficient engines.
//!
//! Both `P` and `Q` are `exp(sum_L W(L) z^L / L)` for integer weights `W`
//! (see [`ArithmeticTable::cycle_weights`]). Writing `p_m = m! [z^m] F`,
//! differentiating `F = exp(G)` gives the integer recurrence
//!
//! ```text
//! p_m = sum_{k=1}^{m} W(k) (m-1)!/(m-k)! p_{m-k},   p_0 = 1,
//! ```
//!
//! evaluated here in Horner form so that every step is a big-by-small
//! multiplication. For `j = 0` the ordinary Euler transform recurrence
//! `n F_n = sum_k c_k F_{n-k}` is available as well.

use std::fmt::Display;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::divisors::{pow_rational, AdmissibleTriple, ArithmeticTable, Form};
use crate::error::{Error, Result};

/// Which product a sequence expands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeriesForm {
    P,
    Q,
    /// `P(z, v)`: every cycle of length `n l` carries weight `v^(l+1)`.
    WeightedP(BigRational),
}

impl From<Form> for SeriesForm {
    fn from(f: Form) -> Self {
        match f {
            Form::P => SeriesForm::P,
            Form::Q => SeriesForm::Q,
        }
    }
}

impl std::fmt::Display for SeriesForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SeriesForm::P => f.write_str("P"),
            SeriesForm::Q => f.write_str("Q"),
            SeriesForm::WeightedP(v) => write!(f, "P(v={v})"),
        }
    }
}

/// How `values[n]` relates to the power series `F`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Kind {
    /// `values[n] = n! [z^n] F`.
    #[serde(rename = "egf")]
    EgfNumerator,
    /// `values[n] = [z^n] F`.
    #[serde(rename = "ogf")]
    Ogf,
}

/// Exact coefficients `0..=N` of one series.
#[derive(Clone, Debug, PartialEq)]
pub struct CoeffSequence<T = BigInt> {
    pub triple: AdmissibleTriple,
    pub form: SeriesForm,
    pub kind: Kind,
    pub values: Vec<T>,
}

impl<T> CoeffSequence<T> {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Highest index held.
    pub fn degree(&self) -> usize {
        self.values.len().saturating_sub(1)
    }
}

impl<T: Display> CoeffSequence<T> {
    /// Values on one line separated by single spaces.
    pub fn to_plain(&self) -> String {
        let mut s = self
            .values
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" ");
        s.push('\n');
        s
    }

    /// OEIS b-file text: `index SP value LF` per entry.
    pub fn to_bfile(&self) -> String {
        let mut s = String::new();
        for (n, v) in self.values.iter().enumerate() {
            s.push_str(&format!("{n} {v}\n"));
        }
        s
    }

    pub fn to_tsv(&self) -> String {
        let mut s = String::from("n\tvalue\n");
        for (n, v) in self.values.iter().enumerate() {
            s.push_str(&format!("{n}\t{v}\n"));
        }
        s
    }

    /// JSON document with big values as decimal strings.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct View {
            triple: [u32; 3],
            form: String,
            kind: Kind,
            values: Vec<String>,
        }
        let view = View {
            triple: [self.triple.i(), self.triple.j(), self.triple.k()],
            form: self.form.to_string(),
            kind: self.kind,
            values: self.values.iter().map(ToString::to_string).collect(),
        };
        serde_json::to_string_pretty(&view).expect("plain data always serializes")
    }
}

impl CoeffSequence<BigInt> {
    /// Natural log of `[z^n] F`, or `None` when that coefficient is not positive.
    pub fn ln_coefficient(&self, n: usize) -> Option<f64> {
        let v = self.values.get(n)?;
        if !v.is_positive() {
            return None;
        }
        let ln = ln_bigint(v);
        Some(match self.kind {
            Kind::EgfNumerator => ln - ln_factorial(n),
            Kind::Ogf => ln,
        })
    }
}

/// Natural log of a positive big integer, accurate to f64 precision.
pub fn ln_bigint(x: &BigInt) -> f64 {
    assert!(x.sign() == Sign::Plus, "ln of a non-positive integer");
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().expect("fits in f64").ln();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_f64().expect("64-bit prefix");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// `ln n!` by direct summation.
pub fn ln_factorial(n: usize) -> f64 {
    (2..=n).map(|k| (k as f64).ln()).sum()
}

fn weights(triple: AdmissibleTriple, form: Form, n: usize) -> Result<Vec<BigInt>> {
    ArithmeticTable::for_triple(triple, n.max(1)).cycle_weights(triple, form)
}

/// `p_m = sum_{k=1}^{m} W(k) (m-1)!/(m-k)! p_{m-k}` over the rationals.
///
/// Substituting `t = m - k` the sum is `sum_{t<m} W(m-t) p_t (m-1)!/t!`, which
/// is accumulated as `acc <- acc * t + W(m-t) p_t` for `t = 1..m-1`.
fn exp_recurrence_rational(w: &[BigRational], n: usize) -> Vec<BigRational> {
    let mut p: Vec<BigRational> = Vec::with_capacity(n + 1);
    p.push(BigRational::one());
    for m in 1..=n {
        let mut acc = &w[m] * &p[0];
        for t in 1..m {
            acc = acc * BigRational::from_integer(BigInt::from(t)) + &w[m - t] * &p[t];
        }
        p.push(acc);
    }
    p
}

/// EGF numerators `p_n = n! [z^n] F` of `P` or `Q` for `n = 0..=N`.
pub fn egf_coeffs(triple: AdmissibleTriple, form: Form, n: usize) -> Result<CoeffSequence> {
    let w = weights(triple, form, n)?;
    let mut p: Vec<BigInt> = Vec::with_capacity(n + 1);
    p.push(BigInt::one());
    for m in 1..=n {
        // Same Horner scheme as `exp_recurrence_rational`, in integers.
        let mut acc = &w[m] * &p[0];
        for t in 1..m {
            acc *= t as u64;
            acc += &w[m - t] * &p[t];
        }
        p.push(acc);
    }
    Ok(CoeffSequence {
        triple,
        form: form.into(),
        kind: Kind::EgfNumerator,
        values: p,
    })
}

/// EGF numerators of `P(z, v) = prod_n exp(sum_l v^(l+1) z^(n l)/(n l))^chi(n)`
/// in exact rational arithmetic.
pub fn egf_coeffs_weighted(
    triple: AdmissibleTriple,
    v: &BigRational,
    n: usize,
) -> Result<CoeffSequence<BigRational>> {
    let table = ArithmeticTable::for_triple(triple, n.max(1));
    let chi = table.chi_row(triple)?;
    let powers: Vec<BigRational> = (0..=n as u64 + 1).map(|e| pow_rational(v, e)).collect();
    let mut w = vec![BigRational::zero(); n + 1];
    for (d, chi_d) in chi.iter().enumerate().take(n + 1).skip(1) {
        let c = BigRational::from_integer(chi_d.clone());
        for (l, m) in (d..=n).step_by(d).enumerate() {
            // v^(m/d + 1) with m/d = l + 1
            w[m] += &c * &powers[l + 2];
        }
    }
    let values = exp_recurrence_rational(&w, n);
    Ok(CoeffSequence {
        triple,
        form: SeriesForm::WeightedP(v.clone()),
        kind: Kind::EgfNumerator,
        values,
    })
}

/// Ordinary coefficients of `prod (1 - z^m)^(-psi(m))` (form `P`) or
/// `prod (1 + z^m)^(psi(m))` (form `Q`); requires `j = 0`.
pub fn ogf_coeffs_euler(triple: AdmissibleTriple, form: Form, n: usize) -> Result<CoeffSequence> {
    if triple.j() != 0 {
        return Err(Error::RequiresJZero(triple));
    }
    let table = ArithmeticTable::for_triple(triple, n.max(1));
    // c_k = sum_{d | k} s(k/d) d psi(d)
    let mut c = vec![BigInt::zero(); n + 1];
    for d in 1..=n {
        let dpsi = table.psi(triple, d)? * BigInt::from(d);
        for (l, m) in (d..=n).step_by(d).enumerate() {
            if form == Form::Q && l % 2 == 1 {
                c[m] -= &dpsi;
            } else {
                c[m] += &dpsi;
            }
        }
    }
    let mut f: Vec<BigInt> = Vec::with_capacity(n + 1);
    f.push(BigInt::one());
    for m in 1..=n {
        let mut s = BigInt::zero();
        for k in 1..=m {
            s += &c[k] * &f[m - k];
        }
        let (q, r) = s.div_rem(&BigInt::from(m));
        assert!(
            r.is_zero(),
            "inexact division in Euler transform at n = {m}"
        );
        f.push(q);
    }
    Ok(CoeffSequence {
        triple,
        form: form.into(),
        kind: Kind::Ogf,
        values: f,
    })
}
