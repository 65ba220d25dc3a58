//! Arithmetic kernel: divisor lists, k-fold divisor counts and the
//! triple-dependent weights that feed every coefficient recurrence.
//!
//! The weights come from collapsing the `(i + j + k)`-fold product
//! `prod (1 - z^(n1..ni d1..dj e1..ek))^(-n1..ni / d1..dj)` onto a single
//! index `m = n1..ni d1..dj e1..ek`:
//!
//! * `chi(m)` is the multiplicity of `exp(sum_l z^(m l) / (m l))`, which
//!   turns the product into a cyclic Euler transform (valid for every triple);
//! * `psi(m)` is the exponent of `(1 - z^m)^(-1)` when `j = 0`, which turns
//!   it into an ordinary Euler transform.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Parameters `(i, j, k)` of one product family, with `i + j + k >= 1`.
///
/// `i` counts numerator indices, `j` denominator indices and `k` extra
/// indices in the exponent of each factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct AdmissibleTriple {
    i: u32,
    j: u32,
    k: u32,
}

impl AdmissibleTriple {
    pub fn new(i: u32, j: u32, k: u32) -> Result<Self> {
        if i + j + k == 0 {
            return Err(Error::InadmissibleTriple { i, j, k });
        }
        Ok(Self { i, j, k })
    }

    pub fn i(&self) -> u32 {
        self.i
    }

    pub fn j(&self) -> u32 {
        self.j
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// All admissible triples with every entry at most `max`, in
    /// lexicographic order.
    pub fn all_up_to(max: u32) -> Vec<Self> {
        let mut out = Vec::new();
        for i in 0..=max {
            for j in 0..=max {
                for k in 0..=max {
                    if let Ok(t) = Self::new(i, j, k) {
                        out.push(t);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for AdmissibleTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.i, self.j, self.k)
    }
}

impl FromStr for AdmissibleTriple {
    type Err = Error;

    /// Parses `"I,J,K"` with nonnegative integers.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(Error::TripleSyntax(s.to_string()));
        }
        let mut v = [0u32; 3];
        for (slot, p) in v.iter_mut().zip(&parts) {
            *slot = p
                .parse::<u32>()
                .map_err(|_| Error::TripleSyntax(s.to_string()))?;
        }
        Self::new(v[0], v[1], v[2])
    }
}

/// Which side of the `P`/`Q` pair a weight or series belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Form {
    /// Multiset form, factors `(1 - z^m)^(-e)`.
    P,
    /// Powerset form, factors `(1 + z^m)^e`.
    Q,
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Form::P => f.write_str("P"),
            Form::Q => f.write_str("Q"),
        }
    }
}

impl FromStr for Form {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "P" | "p" => Ok(Form::P),
            "Q" | "q" => Ok(Form::Q),
            other => Err(Error::FormSyntax(other.to_string())),
        }
    }
}

/// Strictly increasing divisors of `n`, by trial division up to `sqrt(n)`.
pub fn divisors_of(n: u64) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

/// Number of ordered `k`-tuples of positive integers with product `n`.
///
/// `tau_0` and `tau_1` are both identically one.
pub fn tau_k(k: u32, n: u64) -> Result<u64> {
    let divs = divisors_of(n)?;
    if k <= 1 {
        return Ok(1);
    }
    // tau_{r+1}(d) = sum_{e | d} tau_r(e), evaluated on the divisor lattice of n.
    let mut row = vec![1u64; divs.len()];
    for _ in 1..k {
        let next: Vec<u64> = divs
            .iter()
            .map(|&d| {
                divs.iter()
                    .zip(&row)
                    .filter(|(&e, _)| d % e == 0)
                    .map(|(_, &v)| v)
                    .sum()
            })
            .collect();
        row = next;
    }
    Ok(*row.last().expect("divisor list is never empty"))
}

/// Divisor lists for every `n <= limit`, filled by a sieve.
#[derive(Clone, Debug)]
pub struct DivisorTable {
    limit: usize,
    lists: Vec<Vec<u32>>,
}

impl DivisorTable {
    pub fn new(limit: usize) -> Self {
        let mut lists: Vec<Vec<u32>> = vec![Vec::new(); limit + 1];
        for d in 1..=limit {
            for m in (d..=limit).step_by(d) {
                lists[m].push(d as u32);
            }
        }
        Self { limit, lists }
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    /// Divisors of `n` in increasing order; falls back to trial division
    /// above the sieve limit.
    pub fn divisors(&self, n: usize) -> Result<Vec<u64>> {
        if n == 0 {
            return Err(Error::ZeroArgument);
        }
        if n <= self.limit {
            Ok(self.lists[n].iter().map(|&d| d as u64).collect())
        } else {
            divisors_of(n as u64)
        }
    }

    fn list(&self, n: usize) -> &[u32] {
        &self.lists[n]
    }
}

/// Sieved divisor lists plus `tau_r` rows for `r <= max_order`, all up to a
/// fixed limit. Immutable after construction.
#[derive(Clone, Debug)]
pub struct ArithmeticTable {
    divisors: DivisorTable,
    // tau[r][n]; index 0 of each row is unused.
    tau: Vec<Vec<u64>>,
}

impl ArithmeticTable {
    pub fn new(limit: usize, max_order: u32) -> Self {
        let divisors = DivisorTable::new(limit);
        let ones = {
            let mut v = vec![1u64; limit + 1];
            v[0] = 0;
            v
        };
        let mut tau = vec![ones.clone(), ones];
        for _ in 2..=max_order.max(1) {
            let prev = tau.last().expect("at least tau_1 present");
            // Dirichlet convolution with the constant function 1.
            let mut next = vec![0u64; limit + 1];
            for d in 1..=limit {
                for m in (d..=limit).step_by(d) {
                    next[m] += prev[m / d];
                }
            }
            tau.push(next);
        }
        Self { divisors, tau }
    }

    /// Table large enough for every weight of `triple` up to `limit`.
    pub fn for_triple(triple: AdmissibleTriple, limit: usize) -> Self {
        let order = triple.i().max(triple.j()).max(triple.k());
        Self::new(limit, order)
    }

    pub fn limit(&self) -> usize {
        self.divisors.limit()
    }

    pub fn divisor_table(&self) -> &DivisorTable {
        &self.divisors
    }

    pub fn tau(&self, k: u32, n: usize) -> u64 {
        self.tau[k.max(1) as usize][n]
    }

    fn check(&self, n: usize, order: u32) -> Result<()> {
        if n == 0 {
            return Err(Error::ZeroArgument);
        }
        if n > self.limit() || order as usize >= self.tau.len() {
            return Err(Error::TableTooSmall {
                n,
                limit: self.limit(),
            });
        }
        Ok(())
    }

    /// Cyclic Euler transform weight `chi(n)` for `triple`.
    pub fn chi(&self, triple: AdmissibleTriple, n: usize) -> Result<BigInt> {
        let (i, j, k) = (triple.i(), triple.j(), triple.k());
        self.check(n, i.max(j).max(k))?;
        let nn = n as u64;
        let t = |r: u32, m: usize| BigInt::from(self.tau(r, m));
        let value = match (i > 0, j > 0, k > 0) {
            (true, false, false) => BigInt::from(nn * nn) * t(i, n),
            (true, false, true) => {
                let s: BigInt = self
                    .divisors
                    .list(n)
                    .iter()
                    .map(|&p| {
                        let p = p as usize;
                        BigInt::from(p) * t(i, p) * t(k, n / p)
                    })
                    .sum();
                s * nn
            }
            (true, true, false) => self
                .divisors
                .list(n)
                .iter()
                .map(|&p| {
                    let p = p as usize;
                    BigInt::from(p * p) * t(i, p) * t(j, n / p)
                })
                .sum(),
            (true, true, true) => {
                let mut s = BigInt::zero();
                for &p in self.divisors.list(n) {
                    let p = p as usize;
                    let rest = n / p;
                    let outer = BigInt::from(p * p) * t(i, p);
                    for &q in self.divisors.list(rest) {
                        let q = q as usize;
                        s += &outer * BigInt::from(q) * t(k, q) * t(j, rest / q);
                    }
                }
                s
            }
            (false, false, true) => BigInt::from(nn) * t(k, n),
            (false, true, true) => self
                .divisors
                .list(n)
                .iter()
                .map(|&p| {
                    let p = p as usize;
                    BigInt::from(p) * t(k, p) * t(j, n / p)
                })
                .sum(),
            (false, true, false) => t(j, n),
            (false, false, false) => unreachable!("admissible triples have i + j + k >= 1"),
        };
        Ok(value)
    }

    /// Ordinary Euler transform exponent `psi(n)`; only defined for `j = 0`.
    pub fn psi(&self, triple: AdmissibleTriple, n: usize) -> Result<BigInt> {
        let (i, j, k) = (triple.i(), triple.j(), triple.k());
        if j != 0 {
            return Err(Error::RequiresJZero(triple));
        }
        self.check(n, i.max(k))?;
        let t = |r: u32, m: usize| BigInt::from(self.tau(r, m));
        let value = match (i > 0, k > 0) {
            (true, false) => BigInt::from(n) * t(i, n),
            (false, true) => t(k, n),
            (true, true) => self
                .divisors
                .list(n)
                .iter()
                .map(|&p| {
                    let p = p as usize;
                    BigInt::from(p) * t(i, p) * t(k, n / p)
                })
                .sum(),
            (false, false) => unreachable!("j = 0 forces i + k >= 1"),
        };
        Ok(value)
    }

    /// `chi(d)` for `d = 1..=limit`, index 0 set to zero.
    pub fn chi_row(&self, triple: AdmissibleTriple) -> Result<Vec<BigInt>> {
        let mut row = vec![BigInt::zero()];
        for d in 1..=self.limit() {
            row.push(self.chi(triple, d)?);
        }
        Ok(row)
    }

    /// Log-series weights `W(L) = sum_{d | L} s(L/d) chi(d)` for `L = 1..=limit`
    /// with `s = 1` for `P` and `s(l) = (-1)^(l+1)` for `Q`. Index 0 is zero.
    pub fn cycle_weights(&self, triple: AdmissibleTriple, form: Form) -> Result<Vec<BigInt>> {
        let chi = self.chi_row(triple)?;
        let limit = self.limit();
        let mut w = vec![BigInt::zero(); limit + 1];
        for (d, c) in chi.iter().enumerate().take(limit + 1).skip(1) {
            for (l, m) in (d..=limit).step_by(d).enumerate() {
                // l + 1 = m / d
                if form == Form::Q && l % 2 == 1 {
                    w[m] -= c;
                } else {
                    w[m] += c;
                }
            }
        }
        Ok(w)
    }
}

/// `chi(n)` without a prebuilt table.
pub fn chi(triple: AdmissibleTriple, n: u64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    ArithmeticTable::for_triple(triple, n as usize).chi(triple, n as usize)
}

/// `psi(n)` without a prebuilt table.
pub fn psi(triple: AdmissibleTriple, n: u64) -> Result<BigInt> {
    if triple.j() != 0 {
        return Err(Error::RequiresJZero(triple));
    }
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    ArithmeticTable::for_triple(triple, n as usize).psi(triple, n as usize)
}

/// Coefficient weight of `z^L / L` in the logarithm of the series.
///
/// `Weight::P` gives `sum_{d|L} chi(d)`, `Weight::Q` gives
/// `sum_{d|L} (-1)^(L/d+1) chi(d)`.
pub fn cycle_weight(triple: AdmissibleTriple, len: u64, form: Form) -> Result<BigInt> {
    let mut total = BigInt::zero();
    for d in divisors_of(len)? {
        let c = chi(triple, d)?;
        if form == Form::Q && (len / d).is_multiple_of(2) {
            total -= c;
        } else {
            total += c;
        }
    }
    Ok(total)
}

/// Weighted variant `sum_{d|L} v^(L/d+1) chi(d)` for a rational weight `v`.
pub fn cycle_weight_weighted(
    triple: AdmissibleTriple,
    len: u64,
    v: &num_rational::BigRational,
) -> Result<num_rational::BigRational> {
    use num_rational::BigRational;
    let mut total = BigRational::zero();
    for d in divisors_of(len)? {
        let c = BigRational::from_integer(chi(triple, d)?);
        total += c * pow_rational(v, len / d + 1);
    }
    Ok(total)
}

pub(crate) fn pow_rational(v: &num_rational::BigRational, e: u64) -> num_rational::BigRational {
    let mut acc = num_rational::BigRational::one();
    for _ in 0..e {
        acc *= v;
    }
    acc
}
