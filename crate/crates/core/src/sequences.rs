//! Fibonacci, harmonic Fibonacci and hyperharmonic Fibonacci numbers.
//!
//! Exact values live in a [`SequenceTable`] of big integers and big
//! rationals; the float view of each entry is projected once from the exact
//! value. For orders past the exact limits a [`FloatSequenceTable`] offers
//! the same lookups in `f64`.
//!
//! Level 0 of the hyperharmonic family is the reciprocal sequence `1/F_n`,
//! each further level is the prefix sum of the previous one, and level 1 is
//! the harmonic Fibonacci sequence.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::scalar::{rational_to_f64, ExactScalar};

/// Largest index offered in exact mode.
pub const EXACT_N_MAX: usize = 64;
/// Largest hyperharmonic level offered in exact mode.
pub const EXACT_K_MAX: usize = 4;

/// `F_n` for `n >= -1`, with `F_{-1} = 1` from running the recurrence backwards.
pub fn fibonacci(n: i64) -> Result<BigInt> {
    if n < -1 {
        return domain(format!("Fibonacci index {n} is below -1"));
    }
    if n == -1 {
        return Ok(BigInt::one());
    }
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    Ok(a)
}

/// Harmonic Fibonacci number `sum_{j=1..n} 1/F_j`; zero for `n = 0`.
pub fn harmonic_fib(n: usize) -> ExactScalar {
    let mut acc = BigRational::zero();
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 1..=n {
        acc += BigRational::new(BigInt::one(), b.clone());
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    acc
}

/// Hyperharmonic Fibonacci number of level `k` at index `n`.
///
/// Level 0 is `1/F_n` (undefined at `n = 0`); for `k >= 1` index 0 is the
/// empty prefix sum, i.e. zero.
pub fn hyperharmonic_fib(n: usize, k: usize) -> Result<ExactScalar> {
    if k == 0 && n == 0 {
        return domain("level-0 hyperharmonic value at n = 0 is 1/F_0, which is undefined");
    }
    // Level k as a column over 0..=n, built from level 0 by repeated prefix sums.
    let mut level: Vec<BigRational> = Vec::with_capacity(n + 1);
    level.push(BigRational::zero());
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 1..=n {
        level.push(BigRational::new(BigInt::one(), b.clone()));
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    for _ in 0..k {
        let mut acc = BigRational::zero();
        for v in level.iter_mut().skip(1) {
            acc += &*v;
            *v = acc.clone();
        }
    }
    Ok(level.swap_remove(n))
}

/// Both sides of `sum_{k=0..n-1} F_{k-1} HF_k = F_n HF_n - n`, evaluated
/// independently in exact arithmetic (`HF` is the harmonic Fibonacci number).
pub fn fib_harmonic_identity(n: usize) -> Result<(ExactScalar, ExactScalar)> {
    if n < 1 {
        return domain("the Fibonacci-harmonic identity needs n >= 1");
    }
    let mut lhs = BigRational::zero();
    for k in 0..n {
        let f = fibonacci(k as i64 - 1)?;
        lhs += BigRational::from_integer(f) * harmonic_fib(k);
    }
    let rhs = BigRational::from_integer(fibonacci(n as i64)?) * harmonic_fib(n)
        - BigRational::from_integer(BigInt::from(n));
    Ok((lhs, rhs))
}

/// Eagerly filled table of exact Fibonacci and hyperharmonic Fibonacci values.
#[derive(Debug, Clone)]
pub struct SequenceTable {
    n_max: usize,
    k_max: usize,
    /// `F_{-1} ..= F_{n_max}`; index `i` holds `F_{i-1}`.
    fib: Vec<BigInt>,
    /// `hyper[k][n]`; `hyper[0][0]` is `None`.
    hyper: Vec<Vec<Option<BigRational>>>,
    hyper_f64: Vec<Vec<f64>>,
}

impl SequenceTable {
    /// Build the table for `0 <= n <= n_max`, `0 <= k <= k_max`.
    pub fn new(n_max: usize, k_max: usize) -> Result<Self> {
        if n_max > EXACT_N_MAX || k_max > EXACT_K_MAX {
            return Err(Error::ExactLimit {
                n: n_max,
                k: k_max,
                n_limit: EXACT_N_MAX,
                k_limit: EXACT_K_MAX,
            });
        }
        let mut fib = Vec::with_capacity(n_max + 2);
        fib.push(BigInt::one());
        fib.push(BigInt::zero());
        for i in 2..n_max + 2 {
            let next = &fib[i - 1] + &fib[i - 2];
            fib.push(next);
        }

        let mut hyper: Vec<Vec<Option<BigRational>>> = Vec::with_capacity(k_max + 1);
        let level0 = (0..=n_max)
            .map(|n| (n > 0).then(|| BigRational::new(BigInt::one(), fib[n + 1].clone())))
            .collect();
        hyper.push(level0);
        for k in 1..=k_max {
            let prev = &hyper[k - 1];
            let mut row = Vec::with_capacity(n_max + 1);
            let mut acc = BigRational::zero();
            row.push(Some(acc.clone()));
            for v in &prev[1..=n_max] {
                acc += v.as_ref().expect("level entries are defined for n >= 1");
                row.push(Some(acc.clone()));
            }
            hyper.push(row);
        }
        let hyper_f64 = hyper
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| v.as_ref().map_or(f64::NAN, rational_to_f64))
                    .collect()
            })
            .collect();
        Ok(Self {
            n_max,
            k_max,
            fib,
            hyper,
            hyper_f64,
        })
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn k_max(&self) -> usize {
        self.k_max
    }

    /// `F_n` for `-1 <= n <= n_max`.
    pub fn fib(&self, n: i64) -> Result<&BigInt> {
        if n < -1 || n > self.n_max as i64 {
            return domain(format!(
                "Fibonacci index {n} outside table range -1..={}",
                self.n_max
            ));
        }
        Ok(&self.fib[(n + 1) as usize])
    }

    /// Hyperharmonic Fibonacci number `n` of level `k`.
    pub fn hyper(&self, n: usize, k: usize) -> Result<&BigRational> {
        self.check_range(n, k)?;
        self.hyper[k][n]
            .as_ref()
            .ok_or_else(|| Error::Domain("level-0 value at n = 0 is undefined (1/F_0)".into()))
    }

    /// Float projection of [`hyper`](Self::hyper).
    pub fn hyper_f64(&self, n: usize, k: usize) -> Result<f64> {
        self.hyper(n, k)?;
        Ok(self.hyper_f64[k][n])
    }

    /// Harmonic Fibonacci number (level 1).
    pub fn harmonic(&self, n: usize) -> Result<&BigRational> {
        self.hyper(n, 1)
    }

    /// `1/F_n` for `n >= 1`.
    pub fn reciprocal(&self, n: usize) -> Result<&BigRational> {
        self.hyper(n, 0)
    }

    fn check_range(&self, n: usize, k: usize) -> Result<()> {
        if n > self.n_max || k > self.k_max {
            return domain(format!(
                "entry (n = {n}, k = {k}) outside table bounds (n <= {}, k <= {})",
                self.n_max, self.k_max
            ));
        }
        Ok(())
    }

    /// Serializable form with big integers as decimal strings.
    pub fn to_json(&self) -> SequenceTableJson {
        SequenceTableJson {
            n_max: self.n_max,
            k_max: self.k_max,
            fib: self.fib[1..].iter().map(|f| f.to_string()).collect(),
            hyper: self
                .hyper
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|v| v.as_ref().map(RationalJson::from))
                        .collect()
                })
                .collect(),
        }
    }
}

/// Decimal-string numerator/denominator pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalJson {
    pub num: String,
    pub den: String,
}

impl From<&BigRational> for RationalJson {
    fn from(q: &BigRational) -> Self {
        Self {
            num: q.numer().to_string(),
            den: q.denom().to_string(),
        }
    }
}

impl TryFrom<&RationalJson> for BigRational {
    type Error = Error;

    fn try_from(j: &RationalJson) -> Result<Self> {
        let num: BigInt = j
            .num
            .parse()
            .map_err(|_| Error::Parse(format!("bad numerator {:?}", j.num)))?;
        let den: BigInt = j
            .den
            .parse()
            .map_err(|_| Error::Parse(format!("bad denominator {:?}", j.den)))?;
        if den.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        Ok(BigRational::new(num, den))
    }
}

/// Wire form of a [`SequenceTable`]. `fib` lists `F_0 ..= F_{n_max}`;
/// `hyper[k][n]` is `null` only at `(k, n) = (0, 0)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceTableJson {
    pub n_max: usize,
    pub k_max: usize,
    pub fib: Vec<String>,
    pub hyper: Vec<Vec<Option<RationalJson>>>,
}

/// Float-only table for orders beyond the exact limits.
///
/// Fibonacci numbers are still produced exactly and each reciprocal is
/// rounded once; the level sums then run in `f64`. `F_n` itself overflows to
/// infinity past `n = 1476`.
#[derive(Debug, Clone)]
pub struct FloatSequenceTable {
    n_max: usize,
    k_max: usize,
    fib: Vec<f64>,
    hyper: Vec<Vec<f64>>,
}

impl FloatSequenceTable {
    pub fn new(n_max: usize, k_max: usize) -> Self {
        let mut fib = Vec::with_capacity(n_max + 2);
        let mut level0 = Vec::with_capacity(n_max + 1);
        level0.push(f64::NAN);
        let (mut a, mut b) = (BigInt::one(), BigInt::zero());
        fib.push(1.0);
        for n in 0..=n_max {
            if n > 0 {
                let next = &a + &b;
                a = std::mem::replace(&mut b, next);
                level0.push(rational_to_f64(&BigRational::new(BigInt::one(), b.clone())));
            }
            fib.push(rational_to_f64(&BigRational::from_integer(b.clone())));
        }
        let mut hyper = vec![level0];
        for k in 1..=k_max {
            let prev = &hyper[k - 1];
            let mut row = Vec::with_capacity(n_max + 1);
            let mut acc = 0.0f64;
            row.push(0.0);
            for v in &prev[1..] {
                acc += v;
                row.push(acc);
            }
            hyper.push(row);
        }
        Self {
            n_max,
            k_max,
            fib,
            hyper,
        }
    }

    pub fn fib(&self, n: i64) -> Result<f64> {
        if n < -1 || n > self.n_max as i64 {
            return domain(format!(
                "Fibonacci index {n} outside table range -1..={}",
                self.n_max
            ));
        }
        Ok(self.fib[(n + 1) as usize])
    }

    pub fn hyper(&self, n: usize, k: usize) -> Result<f64> {
        if n > self.n_max || k > self.k_max {
            return domain(format!("entry (n = {n}, k = {k}) outside table bounds"));
        }
        if n == 0 && k == 0 {
            return domain("level-0 value at n = 0 is undefined (1/F_0)");
        }
        Ok(self.hyper[k][n])
    }
}
