//! The scalar `r` of an r-circulant.
//!
//! The bounds and closed forms only see `|r|^2`, so a [`Multiplier`] carries
//! that value exactly next to the floating-point `r` used to build matrices.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{exact_ratio, rational_to_f64};

#[derive(Debug, Clone, PartialEq)]
pub struct Multiplier {
    value: Complex64,
    modulus_sq: BigRational,
    label: String,
}

impl Multiplier {
    /// `re + im i` with rational parts.
    pub fn rect(re: BigRational, im: BigRational) -> Self {
        let label = rect_label(&re, &im);
        let modulus_sq = &re * &re + &im * &im;
        Self {
            value: Complex64::new(rational_to_f64(&re), rational_to_f64(&im)),
            modulus_sq,
            label,
        }
    }

    pub fn real(re: BigRational) -> Self {
        Self::rect(re, BigRational::zero())
    }

    /// `modulus * exp(i * degrees)`; the modulus is rational, the phase is not
    /// restricted.
    pub fn polar(modulus: BigRational, degrees: f64) -> Result<Self> {
        if modulus.is_negative() {
            return Err(Error::Parse(format!("negative modulus {modulus}")));
        }
        if !degrees.is_finite() {
            return Err(Error::Parse("phase must be finite".into()));
        }
        let theta = degrees.to_radians();
        let m = rational_to_f64(&modulus);
        let value = Complex64::new(m * theta.cos(), m * theta.sin());
        Ok(Self {
            value,
            label: format!("{modulus}@{degrees}"),
            modulus_sq: modulus.pow(2u32),
        })
    }

    pub fn value(&self) -> Complex64 {
        self.value
    }

    pub fn modulus_sq(&self) -> &BigRational {
        &self.modulus_sq
    }

    pub fn modulus(&self) -> f64 {
        rational_to_f64(&self.modulus_sq).sqrt()
    }

    /// `|r| >= 1`, decided exactly.
    pub fn at_least_one(&self) -> bool {
        self.modulus_sq >= BigRational::one()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// `{1/2, 1, 2, i, 1+i}`.
    pub fn standard_grid() -> Vec<Self> {
        ["1/2", "1", "2", "i", "1+i"]
            .iter()
            .map(|s| s.parse().expect("grid literal"))
            .collect()
    }

    /// Moduli `{1/4, 1/2, 1, 2, 4}` times phases `{1, i, (1+i)/sqrt 2}`.
    pub fn sandwich_grid() -> Vec<Self> {
        let moduli = [(1, 4), (1, 2), (1, 1), (2, 1), (4, 1)];
        let mut out = Vec::new();
        for (p, q) in moduli {
            for deg in [0.0, 90.0, 45.0] {
                out.push(Self::polar(exact_ratio(p, q), deg).expect("grid literal"));
            }
        }
        out
    }
}

impl fmt::Display for Multiplier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

fn rect_label(re: &BigRational, im: &BigRational) -> String {
    match (re.is_zero(), im.is_zero()) {
        (_, true) => re.to_string(),
        (true, false) => format!("{im}i"),
        (false, false) if im.is_negative() => format!("{re}-{}i", -im),
        (false, false) => format!("{re}+{im}i"),
    }
}

/// Parse `p/q`, an integer, or a plain decimal into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(p, q));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if (int.is_empty() && frac.is_empty())
        || !int.chars().all(|c| c.is_ascii_digit())
        || !frac.chars().all(|c| c.is_ascii_digit())
    {
        return Err(bad());
    }
    let digits: BigInt = format!("{int}{frac}").parse().map_err(|_| bad())?;
    let scale = BigInt::from(10).pow(frac.len() as u32);
    let q = BigRational::new(digits, scale);
    Ok(if neg { -q } else { q })
}

impl FromStr for Multiplier {
    type Err = Error;

    /// Accepted forms: `2`, `-1/2`, `0.25`, `i`, `-3i`, `1/2i`, `1+i`,
    /// `1/2-3/4i`, and polar `modulus@degrees` such as `2@45`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some((m, deg)) = s.split_once('@') {
            let deg: f64 = deg
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad phase in {s:?}")))?;
            return Self::polar(parse_rational(m)?, deg);
        }
        let Some(body) = s.strip_suffix('i') else {
            return Ok(Self::real(parse_rational(s)?));
        };
        // split the imaginary coefficient off at the last interior sign
        let split = body
            .char_indices()
            .rev()
            .find(|&(i, c)| i > 0 && (c == '+' || c == '-'))
            .map(|(i, _)| i);
        let (re, im) = match split {
            Some(i) => (parse_rational(&body[..i])?, &body[i..]),
            None => (BigRational::zero(), body),
        };
        let im = match im {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            other => parse_rational(other)?,
        };
        Ok(Self::rect(re, im))
    }
}

/// Parse a comma-separated grid.
pub fn parse_grid(s: &str) -> Result<Vec<Multiplier>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(str::parse)
        .collect()
}
