//! Finite-difference calculus on tabulated functions.
//!
//! A [`GridFunction`] is a finite table of values on consecutive integers.
//! The checks here never search for antidifferences; they take a claimed
//! pair and evaluate both sides of the summation rule.

use crate::error::{domain, Result};
use crate::scalar::GridScalar;

/// Values of a function on the integer points `start, start + 1, ..`.
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction<T> {
    start: i64,
    values: Vec<T>,
}

impl<T: GridScalar> GridFunction<T> {
    pub fn new(start: i64, values: Vec<T>) -> Result<Self> {
        if values.is_empty() {
            return domain("grid function needs a nonempty domain");
        }
        Ok(Self { start, values })
    }

    /// Tabulate `f` on the closed interval `[first, last]`.
    pub fn tabulate(first: i64, last: i64, mut f: impl FnMut(i64) -> T) -> Result<Self> {
        if last < first {
            return domain(format!("empty interval [{first}, {last}]"));
        }
        Self::new(first, (first..=last).map(&mut f).collect())
    }

    pub fn first(&self) -> i64 {
        self.start
    }

    pub fn last(&self) -> i64 {
        self.start + self.values.len() as i64 - 1
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn contains(&self, x: i64) -> bool {
        x >= self.first() && x <= self.last()
    }

    pub fn at(&self, x: i64) -> Result<&T> {
        if !self.contains(x) {
            return domain(format!(
                "point {x} outside domain [{}, {}]",
                self.first(),
                self.last()
            ));
        }
        Ok(&self.values[(x - self.start) as usize])
    }
}

/// `(Δf)(x) = f(x+1) - f(x)` on `[first, last - 1]`.
pub fn forward_difference<T: GridScalar>(f: &GridFunction<T>) -> Result<GridFunction<T>> {
    if f.len() < 2 {
        return domain("forward difference needs at least two points");
    }
    let values = f
        .values
        .windows(2)
        .map(|w| w[1].clone() - w[0].clone())
        .collect();
    GridFunction::new(f.start, values)
}

/// Falling power `x (x-1) .. (x-m+1)`; the empty product for `m = 0`.
pub fn falling_factorial<T: GridScalar>(x: &T, m: i64) -> Result<T> {
    if m < 0 {
        return domain(format!("negative falling power {m}"));
    }
    let mut acc = T::one();
    for j in 0..m {
        acc = acc * (x.clone() - T::from_i64(j));
    }
    Ok(acc)
}

/// Check `sum_{x=a..b-1} g(x) = f(b) - f(a)` where `[a, b]` is the domain of `f`.
///
/// `g` must be tabulated on at least `[a, b-1]`.
pub fn telescoping_sum<T: GridScalar>(g: &GridFunction<T>, f: &GridFunction<T>) -> Result<bool> {
    let (a, b) = (f.first(), f.last());
    if b > a && (!g.contains(a) || !g.contains(b - 1)) {
        return domain(format!(
            "g on [{}, {}] does not cover [{a}, {}]",
            g.first(),
            g.last(),
            b - 1
        ));
    }
    let mut sum = T::zero();
    for x in a..b {
        sum = sum + g.at(x)?.clone();
    }
    let rhs = f.at(b)?.clone() - f.at(a)?.clone();
    Ok(sum.agrees_with(&rhs))
}

/// Residual of summation by parts on `[a, b]`:
///
/// `sum_{x=a..b} u(x) Δv(x) - [u v |_a^{b+1} - sum_{x=a..b} v(x+1) Δu(x)]`.
///
/// Both `u` and `v` must be tabulated on `[a, b+1]`. In exact arithmetic the
/// residual is identically zero.
pub fn abel_summation_check<T: GridScalar>(
    u: &GridFunction<T>,
    v: &GridFunction<T>,
    a: i64,
    b: i64,
) -> Result<T> {
    if b < a {
        return domain(format!("empty summation range [{a}, {b}]"));
    }
    for (name, g) in [("u", u), ("v", v)] {
        if !g.contains(a) || !g.contains(b + 1) {
            return domain(format!(
                "{name} on [{}, {}] does not cover [{a}, {}]",
                g.first(),
                g.last(),
                b + 1
            ));
        }
    }
    let mut lhs = T::zero();
    let mut correction = T::zero();
    for x in a..=b {
        let (u0, u1) = (u.at(x)?.clone(), u.at(x + 1)?.clone());
        let (v0, v1) = (v.at(x)?.clone(), v.at(x + 1)?.clone());
        lhs = lhs + u0.clone() * (v1.clone() - v0);
        correction = correction + v1 * (u1 - u0);
    }
    let boundary =
        u.at(b + 1)?.clone() * v.at(b + 1)?.clone() - u.at(a)?.clone() * v.at(a)?.clone();
    Ok(lhs - (boundary - correction))
}
