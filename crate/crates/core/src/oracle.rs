//! Brute-force counters used to cross-check the recurrences in `series`.
//!
//! Nothing here shares code with the fast engines beyond the arithmetic
//! weights themselves.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::divisors::{cycle_weight, psi, AdmissibleTriple, Form};
use crate::error::{Error, Result};

/// Default cap on `n` for [`cycle_type_sum`].
pub const CYCLE_ORACLE_BOUND: usize = 40;
/// Cap on `N` for [`product_expand`].
pub const PRODUCT_ORACLE_BOUND: usize = 200;
/// Environment variable that may raise [`CYCLE_ORACLE_BOUND`].
pub const ORACLE_BOUND_ENV: &str = "PARTITION_FORGE_ORACLE_BOUND";

/// Effective cycle-type oracle bound: the env override if it parses and is
/// larger than the default.
pub fn oracle_bound() -> usize {
    std::env::var(ORACLE_BOUND_ENV)
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .map_or(CYCLE_ORACLE_BOUND, |b| b.max(CYCLE_ORACLE_BOUND))
}

/// A partition of `n` read as the cycle type of a permutation in `S_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleType {
    /// Parts in non-increasing order.
    pub parts: Vec<u32>,
}

impl CycleType {
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// `(part, multiplicity)` pairs, largest part first.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, c)) if *q == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `z = prod_m m^(c_m) c_m!`, the centralizer order.
    pub fn centralizer(&self) -> BigInt {
        let mut z = BigInt::one();
        for (m, c) in self.multiplicities() {
            for r in 1..=c {
                z *= BigInt::from(m) * BigInt::from(r);
            }
        }
        z
    }

    /// Number of permutations with this cycle type, `n!/z`.
    pub fn class_size(&self) -> BigInt {
        factorial(self.size() as usize) / self.centralizer()
    }
}

/// Partitions of `n` in reverse lexicographic order, starting from `[n]`.
#[derive(Debug)]
pub struct CycleTypes {
    current: Option<Vec<u32>>,
}

pub fn cycle_types(n: u32) -> CycleTypes {
    CycleTypes {
        current: Some(if n == 0 { Vec::new() } else { vec![n] }),
    }
}

impl Iterator for CycleTypes {
    type Item = CycleType;

    fn next(&mut self) -> Option<CycleType> {
        let parts = self.current.take()?;
        let out = CycleType {
            parts: parts.clone(),
        };
        let mut next = parts;
        let mut rem = 0u32;
        while next.last() == Some(&1) {
            next.pop();
            rem += 1;
        }
        if let Some(x) = next.pop() {
            let y = x - 1;
            rem += 1;
            next.push(y);
            while rem >= y {
                next.push(y);
                rem -= y;
            }
            if rem > 0 {
                next.push(rem);
            }
            self.current = Some(next);
        }
        Some(out)
    }
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `sum_{lambda |- n} (n!/z_lambda) prod_i W(lambda_i)`, i.e. `n! [z^n] F`
/// summed over permutations whose cycles carry weight `W(length)`.
pub fn cycle_type_sum(triple: AdmissibleTriple, form: Form, n: usize) -> Result<BigInt> {
    let bound = oracle_bound();
    if n > bound {
        return Err(Error::OracleBound { n, bound });
    }
    let weights = (1..=n as u64)
        .map(|l| cycle_weight(triple, l, form))
        .collect::<Result<Vec<_>>>()?;
    let mut total = BigInt::zero();
    for ct in cycle_types(n as u32) {
        let mut term = ct.class_size();
        for &p in &ct.parts {
            term *= &weights[p as usize - 1];
        }
        total += term;
    }
    Ok(total)
}

/// Expands `prod_m (1 - z^m)^(-psi(m))` (form `P`) or `prod_m (1 + z^m)^psi(m)`
/// (form `Q`) one factor at a time, truncated at degree `n`.
pub fn product_expand(triple: AdmissibleTriple, form: Form, n: usize) -> Result<Vec<BigInt>> {
    if triple.j() != 0 {
        return Err(Error::RequiresJZero(triple));
    }
    if n > PRODUCT_ORACLE_BOUND {
        return Err(Error::OracleBound {
            n,
            bound: PRODUCT_ORACLE_BOUND,
        });
    }
    let mut a = vec![BigInt::zero(); n + 1];
    a[0] = BigInt::one();
    for m in 1..=n {
        let reps = psi(triple, m as u64)?
            .to_usize()
            .expect("psi fits in usize at oracle sizes");
        for _ in 0..reps {
            match form {
                // multiply by 1/(1 - z^m): running sum with stride m
                Form::P => {
                    for d in m..=n {
                        let prev = a[d - m].clone();
                        a[d] += prev;
                    }
                }
                // multiply by (1 + z^m), high degrees first
                Form::Q => {
                    for d in (m..=n).rev() {
                        let prev = a[d - m].clone();
                        a[d] += prev;
                    }
                }
            }
        }
    }
    Ok(a)
}
