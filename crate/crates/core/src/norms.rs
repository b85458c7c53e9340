//! Euclidean (Frobenius) and spectral norms by independent routes.
//!
//! * [`frobenius_norm`]: pairwise sum of squared moduli.
//! * [`spectral_norm_circulant`]: largest DFT eigenvalue modulus of a plain
//!   circulant. Circulants are normal, so this is the spectral norm; it never
//!   materializes the matrix.
//! * [`spectral_norm_power`]: power iteration on `A^H A`.
//! * [`spectral_norm_jacobi`]: cyclic Jacobi diagonalization of `A^H A`,
//!   used as the ground-truth oracle for small orders.

use num_complex::Complex;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::matrices::{circulant_eigenvalues, DenseMatrix};
use crate::scalar::{pairwise_sum, Real};

/// Largest order the Jacobi oracle accepts.
pub const JACOBI_MAX_ORDER: usize = 64;
/// Sweep cap for the Jacobi oracle.
pub const JACOBI_MAX_SWEEPS: usize = 100;
pub const DEFAULT_POWER_TOL: f64 = 1e-10;
pub const DEFAULT_POWER_MAX_ITER: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NormMethod {
    Frobenius,
    DftCirculant,
    PowerIteration,
    JacobiOracle,
}

/// One norm computation with its convergence metadata.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NormResult<T> {
    pub value: T,
    pub method: NormMethod,
    /// Iterations (power) or sweeps (Jacobi); zero for direct methods.
    pub iterations: usize,
    /// Final Rayleigh-quotient change (power), off-diagonal mass (Jacobi),
    /// zero for direct methods.
    pub residual: T,
    pub converged: bool,
}

impl<T: Real> NormResult<T> {
    fn direct(value: T, method: NormMethod) -> Self {
        Self {
            value,
            method,
            iterations: 0,
            residual: T::zero(),
            converged: true,
        }
    }
}

fn check_nonempty<T: Real>(a: &DenseMatrix<T>) -> Result<()> {
    if a.is_empty() {
        return domain("norm of an empty matrix");
    }
    Ok(())
}

pub fn frobenius_norm<T: Real>(a: &DenseMatrix<T>) -> Result<NormResult<T>> {
    check_nonempty(a)?;
    let e = a.entries();
    let sq: T = pairwise_sum(e.len(), &|i: usize| e[i].norm_sqr());
    Ok(NormResult::direct(sq.sqrt(), NormMethod::Frobenius))
}

/// Spectral norm of the plain (`r = 1`) circulant with this first row.
pub fn spectral_norm_circulant<T: Real>(first_row: &[Complex<T>]) -> Result<NormResult<T>> {
    let ev = circulant_eigenvalues(first_row)?;
    let max = ev.iter().map(|z| z.norm()).fold(T::zero(), T::max);
    Ok(NormResult::direct(max, NormMethod::DftCirculant))
}

/// Power iteration on `A^H A` (applied as `A^H (A x)`).
///
/// Starts from the normalized vector `(1, 1/2, 1/3, ..)` and stops once the
/// Rayleigh quotient changes by at most `tol` relative to its value. If the
/// result falls below the `‖A‖_E / sqrt(min(m, n))` lower bound the iteration
/// restarts once from the all-ones vector. Running out of iterations yields a
/// result with `converged = false`.
pub fn spectral_norm_power<T: Real>(
    a: &DenseMatrix<T>,
    tol: T,
    max_iter: usize,
) -> Result<NormResult<T>> {
    check_nonempty(a)?;
    if tol.is_nan() || tol <= T::zero() {
        return domain("power iteration tolerance must be positive");
    }
    let n = a.cols();
    let harmonic: Vec<Complex<T>> = (0..n)
        .map(|i| Complex::new(T::one() / T::from_usize(i + 1).unwrap(), T::zero()))
        .collect();
    let first = power_from(a, harmonic, tol, max_iter);

    let frob = frobenius_norm(a)?.value;
    let dim = T::from_usize(a.rows().min(a.cols())).unwrap();
    let floor = frob / dim.sqrt() * (T::one() - T::from_f64(1e-9).unwrap());
    if first.value >= floor {
        return Ok(first);
    }
    let ones = vec![Complex::one(); n];
    let second = power_from(a, ones, tol, max_iter);
    Ok(NormResult {
        iterations: first.iterations + second.iterations,
        ..second
    })
}

fn power_from<T: Real>(
    a: &DenseMatrix<T>,
    start: Vec<Complex<T>>,
    tol: T,
    max_iter: usize,
) -> NormResult<T> {
    let mut x = start;
    normalize(&mut x);
    let mut mu_prev: Option<T> = None;
    let mut residual = T::infinity();
    for it in 1..=max_iter {
        let y = a.apply_adjoint(&a.apply(&x));
        let mu = x
            .iter()
            .zip(&y)
            .fold(T::zero(), |acc, (xi, yi)| acc + (xi.conj() * yi).re)
            .max(T::zero());
        let ny = vec_norm(&y);
        if ny.is_zero() {
            return NormResult {
                value: T::zero(),
                method: NormMethod::PowerIteration,
                iterations: it,
                residual: T::zero(),
                converged: true,
            };
        }
        if let Some(prev) = mu_prev {
            residual = (mu - prev).abs();
            if residual <= tol * mu {
                return NormResult {
                    value: mu.sqrt(),
                    method: NormMethod::PowerIteration,
                    iterations: it,
                    residual,
                    converged: true,
                };
            }
        }
        mu_prev = Some(mu);
        x = y.into_iter().map(|v| v / ny).collect();
    }
    NormResult {
        value: mu_prev.unwrap_or_else(T::zero).sqrt(),
        method: NormMethod::PowerIteration,
        iterations: max_iter,
        residual,
        converged: false,
    }
}

fn vec_norm<T: Real>(x: &[Complex<T>]) -> T {
    x.iter().fold(T::zero(), |acc, z| acc + z.norm_sqr()).sqrt()
}

fn normalize<T: Real>(x: &mut [Complex<T>]) {
    let n = vec_norm(x);
    if n > T::zero() {
        for v in x.iter_mut() {
            *v = *v / n;
        }
    }
}

/// Eigenvalues of a Hermitian matrix from the cyclic Jacobi method.
#[derive(Debug, Clone, PartialEq)]
pub struct JacobiEigen<T> {
    /// Sorted in decreasing order.
    pub eigenvalues: Vec<T>,
    pub sweeps: usize,
    /// Off-diagonal Frobenius mass at exit.
    pub off_diagonal: T,
    pub converged: bool,
}

/// Row-cyclic complex Jacobi on a Hermitian matrix.
///
/// Each rotation first removes the phase of the pivot `h_pq` with a diagonal
/// unitary, then applies the real symmetric rotation that zeroes it. Sweeps
/// stop when the off-diagonal mass drops below `Real::jacobi_tolerance()`
/// times the Frobenius norm.
pub fn hermitian_eigenvalues_jacobi<T: Real>(h: &DenseMatrix<T>) -> Result<JacobiEigen<T>> {
    if !h.is_square() {
        return domain("Jacobi needs a square matrix");
    }
    let n = h.rows();
    let mut a: Vec<Complex<T>> = h.entries().to_vec();
    let total = a.iter().fold(T::zero(), |acc, z| acc + z.norm_sqr()).sqrt();
    let threshold = T::jacobi_tolerance() * total;
    let off = |a: &[Complex<T>]| {
        let mut s = T::zero();
        for p in 0..n {
            for q in 0..n {
                if p != q {
                    s = s + a[p * n + q].norm_sqr();
                }
            }
        }
        s.sqrt()
    };
    let two = T::one() + T::one();

    let mut sweeps = 0;
    let mut off_mass = off(&a);
    while off_mass > threshold && sweeps < JACOBI_MAX_SWEEPS {
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let z = a[p * n + q];
                let g = z.norm();
                if g.is_zero() {
                    continue;
                }
                let phase = z / g;
                let app = a[p * n + p].re;
                let aqq = a[q * n + q].re;
                let theta = (aqq - app) / (two * g);
                let t = if theta.is_infinite() {
                    T::zero()
                } else {
                    let t = T::one() / (theta.abs() + theta.hypot(T::one()));
                    if theta < T::zero() {
                        -t
                    } else {
                        t
                    }
                };
                let c = T::one() / t.hypot(T::one());
                let s = t * c;
                let e = phase.conj();
                let v_pp = Complex::new(c, T::zero());
                let v_pq = Complex::new(s, T::zero());
                let v_qp = e * (-s);
                let v_qq = e * c;
                // A <- A V
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = akp * v_pp + akq * v_qp;
                    a[k * n + q] = akp * v_pq + akq * v_qq;
                }
                // A <- V^H A
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = v_pp.conj() * apk + v_qp.conj() * aqk;
                    a[q * n + k] = v_pq.conj() * apk + v_qq.conj() * aqk;
                }
                a[p * n + p] = Complex::new(app - t * g, T::zero());
                a[q * n + q] = Complex::new(aqq + t * g, T::zero());
                a[p * n + q] = Complex::zero();
                a[q * n + p] = Complex::zero();
            }
        }
        off_mass = off(&a);
    }
    let mut eigenvalues: Vec<T> = (0..n).map(|i| a[i * n + i].re).collect();
    eigenvalues.sort_by(|x, y| y.partial_cmp(x).unwrap_or(std::cmp::Ordering::Equal));
    Ok(JacobiEigen {
        eigenvalues,
        sweeps,
        off_diagonal: off_mass,
        converged: off_mass <= threshold,
    })
}

/// Spectral norm from the Jacobi eigenvalues of `A^H A`; orders above
/// [`JACOBI_MAX_ORDER`] are refused.
pub fn spectral_norm_jacobi<T: Real>(a: &DenseMatrix<T>) -> Result<NormResult<T>> {
    check_nonempty(a)?;
    if !a.is_square() {
        return domain("the Jacobi oracle takes square matrices");
    }
    if a.rows() > JACOBI_MAX_ORDER {
        return Err(Error::OracleScope {
            order: a.rows(),
            limit: JACOBI_MAX_ORDER,
        });
    }
    let eig = hermitian_eigenvalues_jacobi(&a.gram())?;
    let top = eig
        .eigenvalues
        .first()
        .copied()
        .unwrap_or_else(T::zero)
        .max(T::zero());
    Ok(NormResult {
        value: top.sqrt(),
        method: NormMethod::JacobiOracle,
        iterations: eig.sweeps,
        residual: eig.off_diagonal,
        converged: eig.converged,
    })
}

/// Largest row or column 2-norm and the lowest index attaining it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LineNorm<T> {
    pub value: T,
    pub index: usize,
}

fn max_line<T: Real>(count: usize, line: impl Fn(usize) -> T) -> LineNorm<T> {
    let mut best = LineNorm {
        value: T::neg_infinity(),
        index: 0,
    };
    for i in 0..count {
        let v = line(i);
        if v > best.value {
            best = LineNorm { value: v, index: i };
        }
    }
    best
}

/// `r1(A)`: maximum over rows of the row 2-norm.
pub fn row_max_norm<T: Real>(a: &DenseMatrix<T>) -> Result<LineNorm<T>> {
    check_nonempty(a)?;
    Ok(max_line(a.rows(), |i| {
        a.row(i)
            .iter()
            .fold(T::zero(), |acc, z| acc + z.norm_sqr())
            .sqrt()
    }))
}

/// `c1(A)`: maximum over columns of the column 2-norm.
pub fn col_max_norm<T: Real>(a: &DenseMatrix<T>) -> Result<LineNorm<T>> {
    check_nonempty(a)?;
    Ok(max_line(a.cols(), |j| {
        (0..a.rows())
            .fold(T::zero(), |acc, i| acc + a.get(i, j).norm_sqr())
            .sqrt()
    }))
}
