//! Dense complex matrices and the r-circulant constructions.
//!
//! An r-circulant of order `n` with first row `c` has entry `(i, j)` equal to
//! `c[j - i]` on and above the diagonal and `r * c[n + j - i]` below it. With
//! `r = 1` it is an ordinary circulant, whose eigenvalues are the DFT of the
//! first row.

use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::scalar::{pairwise_sum, Real};
use crate::sequences::{FloatSequenceTable, SequenceTable, EXACT_K_MAX, EXACT_N_MAX};

/// Row-major dense complex matrix with finite entries.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<Complex<T>>,
}

impl<T: Real> DenseMatrix<T> {
    pub fn new(rows: usize, cols: usize, entries: Vec<Complex<T>>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Construction(format!(
                "{} entries supplied for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if let Some(pos) = entries
            .iter()
            .position(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::Construction(format!(
                "entry ({}, {}) is not finite",
                pos / cols.max(1),
                pos % cols.max(1)
            )));
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Complex<T>,
    ) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self::new(rows, cols, entries)
    }

    /// Real matrix from nested rows.
    pub fn from_real_rows(rows: &[Vec<T>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Construction("ragged rows".into()));
        }
        let entries = rows
            .iter()
            .flat_map(|r| r.iter().map(|&x| Complex::new(x, T::zero())))
            .collect();
        Self::new(rows.len(), cols, entries)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Complex::zero(); rows * cols],
        }
    }

    pub fn ones(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Complex::one(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = Complex::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Complex<T>] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> Complex<T> {
        self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Complex<T>] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    /// Entrywise product.
    pub fn hadamard(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return domain(format!(
                "Hadamard product of {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            ));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a * b)
            .collect();
        Self::new(self.rows, self.cols, entries)
    }

    pub fn conj_transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).conj());
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return domain(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            ));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out.entries[i * other.cols + j] =
                        out.entries[i * other.cols + j] + a * other.get(l, j);
                }
            }
        }
        Ok(out)
    }

    /// `A^H A`; Hermitian positive semidefinite.
    pub fn gram(&self) -> Self {
        let n = self.cols;
        let mut out = Self::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let mut acc = Complex::zero();
                for k in 0..self.rows {
                    acc = acc + self.get(k, i).conj() * self.get(k, j);
                }
                out.entries[i * n + j] = acc;
                out.entries[j * n + i] = acc.conj();
            }
        }
        for i in 0..n {
            out.entries[i * n + i].im = T::zero();
        }
        out
    }

    /// `y = A x`.
    pub fn apply(&self, x: &[Complex<T>]) -> Vec<Complex<T>> {
        (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                row.iter()
                    .zip(x)
                    .fold(Complex::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// `y = A^H x`.
    pub fn apply_adjoint(&self, x: &[Complex<T>]) -> Vec<Complex<T>> {
        let mut y = vec![Complex::zero(); self.cols];
        for (i, xi) in x.iter().enumerate().take(self.rows) {
            for (j, yj) in y.iter_mut().enumerate() {
                *yj = *yj + self.get(i, j).conj() * xi;
            }
        }
        y
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> Option<T> {
        if self.rows != other.rows || self.cols != other.cols {
            return None;
        }
        Some(
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| (a - b).norm())
                .fold(T::zero(), T::max),
        )
    }

    /// First row, if every row is the previous one rotated right by one.
    pub fn circulant_first_row(&self) -> Option<Vec<Complex<T>>> {
        if !self.is_square() || self.rows == 0 {
            return None;
        }
        let n = self.rows;
        for i in 1..n {
            for j in 0..n {
                if self.get(i, j) != self.get(0, (j + n - i) % n) {
                    return None;
                }
            }
        }
        Some(self.row(0).to_vec())
    }

    pub fn to_json(&self) -> MatrixJson {
        MatrixJson {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .map(|z| [z.re.to_f64_lossy(), z.im.to_f64_lossy()])
                .collect(),
        }
    }

    pub fn from_json(json: &MatrixJson) -> Result<Self> {
        let entries = json
            .entries
            .iter()
            .map(|&[re, im]| {
                let re = T::from_f64(re)
                    .ok_or_else(|| Error::Parse(format!("entry {re} not representable")))?;
                let im = T::from_f64(im)
                    .ok_or_else(|| Error::Parse(format!("entry {im} not representable")))?;
                Ok(Complex::new(re, im))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(json.rows, json.cols, entries)
    }
}

/// Wire form: `{"rows":n,"cols":n,"entries":[[re,im],..]}`, row-major.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<[f64; 2]>,
}

/// Source of the first row of an r-circulant.
#[derive(Debug, Clone, PartialEq)]
pub enum RowKind<T> {
    /// Explicit first row.
    Raw(Vec<Complex<T>>),
    /// Harmonic Fibonacci numbers `HF_0, .., HF_{n-1}`.
    HarmonicFib,
    /// Hyperharmonic Fibonacci numbers of the given level `>= 1`.
    HyperharmonicFib { level: usize },
    /// `F_{s-1} HF_s` for `s = 0, .., n-1`.
    FibTimesHarmonic,
}

/// Recipe for an `n x n` r-circulant; nothing is materialized until built.
#[derive(Debug, Clone, PartialEq)]
pub struct RCirculantSpec<T> {
    pub n: usize,
    pub r: Complex<T>,
    pub kind: RowKind<T>,
}

impl<T: Real> RCirculantSpec<T> {
    pub fn new(n: usize, r: Complex<T>, kind: RowKind<T>) -> Result<Self> {
        let spec = Self { n, r, kind };
        spec.validate()?;
        Ok(spec)
    }

    /// Ordinary circulant (`r = 1`).
    pub fn circulant(n: usize, kind: RowKind<T>) -> Result<Self> {
        Self::new(n, Complex::one(), kind)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::Construction("order must be at least 1".into()));
        }
        if !self.r.re.is_finite() || !self.r.im.is_finite() {
            return Err(Error::Construction("r must be finite".into()));
        }
        match &self.kind {
            RowKind::Raw(row) if row.len() != self.n => Err(Error::Construction(format!(
                "first row has length {} but the order is {}",
                row.len(),
                self.n
            ))),
            RowKind::HyperharmonicFib { level: 0 } => Err(Error::Construction(
                "hyperharmonic level must be at least 1".into(),
            )),
            _ => Ok(()),
        }
    }

    fn level(&self) -> usize {
        match self.kind {
            RowKind::HyperharmonicFib { level } => level,
            _ => 1,
        }
    }

    /// Whether the first row can be produced from the exact table.
    pub fn has_exact_row(&self) -> bool {
        !matches!(self.kind, RowKind::Raw(_))
            && self.n - 1 <= EXACT_N_MAX
            && self.level() <= EXACT_K_MAX
    }

    /// Exact first row for sequence kinds within the exact limits.
    pub fn exact_first_row(&self) -> Result<Option<Vec<BigRational>>> {
        self.validate()?;
        if !self.has_exact_row() {
            return Ok(None);
        }
        let table = SequenceTable::new(self.n - 1, self.level())?;
        self.exact_row_from(&table).map(Some)
    }

    /// Exact first row taken from an existing table.
    pub fn exact_row_from(&self, table: &SequenceTable) -> Result<Vec<BigRational>> {
        (0..self.n)
            .map(|s| match &self.kind {
                RowKind::Raw(_) => domain("raw rows have no exact form"),
                RowKind::HarmonicFib => Ok(table.harmonic(s)?.clone()),
                RowKind::HyperharmonicFib { level } => Ok(table.hyper(s, *level)?.clone()),
                RowKind::FibTimesHarmonic => {
                    Ok(BigRational::from_integer(table.fib(s as i64 - 1)?.clone())
                        * table.harmonic(s)?)
                }
            })
            .collect()
    }

    /// First row in floating point.
    ///
    /// Sequence rows come from the exact table when possible and from the
    /// float table otherwise.
    pub fn first_row(&self) -> Result<Vec<Complex<T>>> {
        self.validate()?;
        if let RowKind::Raw(row) = &self.kind {
            return Ok(row.clone());
        }
        let real: Vec<T> = if let Some(exact) = self.exact_first_row()? {
            exact.iter().map(T::from_rational).collect()
        } else {
            let table = FloatSequenceTable::new(self.n - 1, self.level());
            (0..self.n)
                .map(|s| {
                    let v = match &self.kind {
                        RowKind::Raw(_) => unreachable!(),
                        RowKind::HarmonicFib => table.hyper(s, 1)?,
                        RowKind::HyperharmonicFib { level } => table.hyper(s, *level)?,
                        RowKind::FibTimesHarmonic => {
                            let f = table.fib(s as i64 - 1)?;
                            if f == 0.0 {
                                0.0
                            } else {
                                f * table.hyper(s, 1)?
                            }
                        }
                    };
                    Ok(T::from_f64(v).unwrap_or_else(T::infinity))
                })
                .collect::<Result<_>>()?
        };
        Ok(real
            .into_iter()
            .map(|x| Complex::new(x, T::zero()))
            .collect())
    }
}

/// Materialize an r-circulant from its first row.
pub fn r_circulant_from_row<T: Real>(row: &[Complex<T>], r: Complex<T>) -> Result<DenseMatrix<T>> {
    let n = row.len();
    if n == 0 {
        return Err(Error::Construction("empty first row".into()));
    }
    DenseMatrix::from_fn(n, n, |i, j| {
        if j >= i {
            row[j - i]
        } else {
            r * row[n + j - i]
        }
    })
}

pub fn build_r_circulant<T: Real>(spec: &RCirculantSpec<T>) -> Result<DenseMatrix<T>> {
    let row = spec.first_row()?;
    r_circulant_from_row(&row, spec.r)
}

/// Eigenvalues `λ_j = sum_i c_i w^{j i}`, `w = exp(2πi/n)`, of the circulant
/// with first row `c`, for `j = 0..n` in index order.
///
/// Direct O(n²) evaluation with pairwise accumulation; the twiddle for
/// `w^{j i}` is read from a table of the `n` roots at index `j i mod n`.
pub fn circulant_eigenvalues<T: Real>(first_row: &[Complex<T>]) -> Result<Vec<Complex<T>>> {
    let n = first_row.len();
    if n == 0 {
        return domain("circulant eigenvalues of an empty row");
    }
    let roots = roots_of_unity::<T>(n);
    Ok((0..n)
        .map(|j| pairwise_sum(n, &|i: usize| first_row[i] * roots[(j * i) % n]))
        .collect())
}

fn roots_of_unity<T: Real>(n: usize) -> Vec<Complex<T>> {
    let tau = T::TAU();
    let nf = T::from_usize(n).expect("order fits the float type");
    (0..n)
        .map(|m| {
            let theta = tau * T::from_usize(m).expect("index fits the float type") / nf;
            Complex::new(theta.cos(), theta.sin())
        })
        .collect()
}

/// The two Hadamard factors of the level-`k` hyperharmonic r-circulant.
///
/// `A` carries the r pattern (diagonal `HF_0^(k) = 0`, ones above, `r`
/// below); `B` is the plain circulant of the same sequence. `A ∘ B` is the
/// r-circulant itself.
pub fn hadamard_factors<T: Real>(
    n: usize,
    k: usize,
    r: Complex<T>,
) -> Result<(DenseMatrix<T>, DenseMatrix<T>)> {
    if k < 1 {
        return domain("hyperharmonic level must be at least 1");
    }
    let spec = RCirculantSpec::circulant(n, RowKind::HyperharmonicFib { level: k })?;
    let row = spec.first_row()?;
    let diag = row[0];
    let a = DenseMatrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => diag,
        std::cmp::Ordering::Less => Complex::one(),
        std::cmp::Ordering::Greater => r,
    })?;
    let b = r_circulant_from_row(&row, Complex::one())?;
    Ok((a, b))
}
