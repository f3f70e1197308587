//! Dense exact matrices and vectors over the cyclotomic rings.

use std::fmt;

use crate::cyclotomic::{LocalOmega, LocalZeta, RingTag, Scalar};
use crate::error::{Error, Result};

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

/// Column vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Vector<R>(pub Vec<R>);

pub type OmegaMatrix = Matrix<LocalOmega>;
pub type ZetaMatrix = Matrix<LocalZeta>;

impl<R: Scalar> Matrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![R::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = R::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn diagonal(entries: Vec<R>) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.into_iter().enumerate() {
            m.data[i * n + i] = e;
        }
        m
    }

    /// The permutation matrix with `|i> -> |perm[i]>`.
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = Self::zeros(n, n);
        for (i, &p) in perm.iter().enumerate() {
            m.data[p * n + i] = R::one();
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

    pub fn get(&self, r: usize, c: usize) -> &R {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: R) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[R] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> &[R] {
        &self.data
    }

    pub fn column(&self, c: usize) -> Vector<R> {
        Vector((0..self.rows).map(|r| self.get(r, c).clone()).collect())
    }

    pub fn to_rows(&self) -> Vec<Vec<R>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * rhs.cols + j;
                    out.data[idx] = out.data[idx].add(&a.mul(b));
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} plus {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.add(b)).collect(),
        })
    }

    pub fn mul_vec(&self, v: &Vector<R>) -> Result<Vector<R>> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok(Vector(
            (0..self.rows)
                .map(|i| {
                    self.row(i)
                        .iter()
                        .zip(&v.0)
                        .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                        .fold(R::zero(), |acc, (a, b)| acc.add(&a.mul(b)))
                })
                .collect(),
        ))
    }

    pub fn scale(&self, s: &R) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.mul(s)).collect(),
        }
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.data[c * self.rows + r] = self.get(r, c).conj();
            }
        }
        out
    }

    pub fn kron(&self, rhs: &Self) -> Self {
        let rows = self.rows * rhs.rows;
        let cols = self.cols * rhs.cols;
        let mut out = Self::zeros(rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        let b = rhs.get(k, l);
                        if !b.is_zero() {
                            out.data[(i * rhs.rows + k) * cols + j * rhs.cols + l] = a.mul(b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let x = self.get(r, c);
                    if r == c {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    /// `A A^dagger == I`, exactly.
    pub fn is_unitary(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        let n = self.rows;
        for i in 0..n {
            for j in i..n {
                let dot = self
                    .row(i)
                    .iter()
                    .zip(self.row(j))
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(R::zero(), |acc, (a, b)| acc.add(&a.mul(&b.conj())));
                let ok = if i == j { dot.is_one() } else { dot.is_zero() };
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    /// Left-multiplies by a matrix that acts as `block` on the coordinates
    /// `indices` and as the identity elsewhere, touching only those rows.
    pub fn apply_block_left(&mut self, block: &Matrix<R>, indices: &[usize]) {
        debug_assert_eq!(block.rows, indices.len());
        for c in 0..self.cols {
            let old: Vec<R> = indices.iter().map(|&r| self.get(r, c).clone()).collect();
            if old.iter().all(Scalar::is_zero) {
                continue;
            }
            for (bi, &r) in indices.iter().enumerate() {
                let v = block
                    .row(bi)
                    .iter()
                    .zip(&old)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(R::zero(), |acc, (a, b)| acc.add(&a.mul(b)));
                self.set(r, c, v);
            }
        }
    }

    /// The first position at which two same-shape matrices differ.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        if self.rows != other.rows || self.cols != other.cols {
            return Some((0, 0));
        }
        (0..self.rows)
            .flat_map(|r| (0..self.cols).map(move |c| (r, c)))
            .find(|&(r, c)| self.get(r, c) != other.get(r, c))
    }

    pub fn map<S: Scalar>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map<S: Scalar>(&self, f: impl Fn(&R) -> Option<S>) -> Option<Matrix<S>> {
        Some(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Option<Vec<_>>>()?,
        })
    }
}

impl Matrix<LocalOmega> {
    pub fn to_zeta(&self) -> Matrix<LocalZeta> {
        self.map(LocalZeta::from_local_omega)
    }

    /// Maximum sde over all entries.
    pub fn max_sde(&self) -> u32 {
        self.data.iter().map(LocalOmega::sde).max().unwrap_or(0)
    }
}

impl Matrix<LocalZeta> {
    /// Some(m) when every entry already lies in Z[1/3, w].
    pub fn to_omega(&self) -> Option<Matrix<LocalOmega>> {
        self.try_map(LocalZeta::to_local_omega)
    }
}

impl<R: Scalar> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<R: Scalar> Vector<R> {
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = vec![R::zero(); dim];
        v[i] = R::one();
        Self(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of `x_j conj(x_j)`.
    pub fn norm_sq(&self) -> R {
        self.0
            .iter()
            .fold(R::zero(), |acc, x| acc.add(&x.mul(&x.conj())))
    }

    pub fn is_unit(&self) -> bool {
        self.norm_sq().is_one()
    }

    pub fn kron(&self, rhs: &Self) -> Self {
        Self(
            self.0
                .iter()
                .flat_map(|a| rhs.0.iter().map(move |b| a.mul(b)))
                .collect(),
        )
    }
}

impl Vector<LocalOmega> {
    /// Maximum sde over the entries.
    pub fn sde(&self) -> u32 {
        self.0.iter().map(LocalOmega::sde).max().unwrap_or(0)
    }
}

/// The column sde of `u`; only defined over Z[1/3, w].
pub fn column_sde(u: &AnyVector) -> Result<u32> {
    match u {
        AnyVector::Omega(v) => Ok(v.sde()),
        AnyVector::Zeta(_) => Err(Error::RingMismatch {
            expected: "omega",
            found: "zeta",
        }),
    }
}

/// A matrix whose ring is only known at runtime (file input).
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum AnyMatrix {
    Omega(Matrix<LocalOmega>),
    Zeta(Matrix<LocalZeta>),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum AnyVector {
    Omega(Vector<LocalOmega>),
    Zeta(Vector<LocalZeta>),
}

impl AnyMatrix {
    pub fn ring(&self) -> RingTag {
        match self {
            AnyMatrix::Omega(_) => RingTag::Omega,
            AnyMatrix::Zeta(_) => RingTag::Zeta,
        }
    }

    pub fn rows(&self) -> usize {
        match self {
            AnyMatrix::Omega(m) => m.rows(),
            AnyMatrix::Zeta(m) => m.rows(),
        }
    }

    pub fn is_unitary(&self) -> bool {
        match self {
            AnyMatrix::Omega(m) => m.is_unitary(),
            AnyMatrix::Zeta(m) => m.is_unitary(),
        }
    }

    pub fn mul(&self, rhs: &AnyMatrix) -> Result<AnyMatrix> {
        match (self, rhs) {
            (AnyMatrix::Omega(a), AnyMatrix::Omega(b)) => a.mul(b).map(AnyMatrix::Omega),
            (AnyMatrix::Zeta(a), AnyMatrix::Zeta(b)) => a.mul(b).map(AnyMatrix::Zeta),
            (a, b) => Err(Error::RingMismatch {
                expected: a.ring().name(),
                found: b.ring().name(),
            }),
        }
    }

    pub fn as_omega(&self) -> Result<&Matrix<LocalOmega>> {
        match self {
            AnyMatrix::Omega(m) => Ok(m),
            AnyMatrix::Zeta(_) => Err(Error::RingMismatch {
                expected: "omega",
                found: "zeta",
            }),
        }
    }

    pub fn as_zeta(&self) -> Result<&Matrix<LocalZeta>> {
        match self {
            AnyMatrix::Zeta(m) => Ok(m),
            AnyMatrix::Omega(_) => Err(Error::RingMismatch {
                expected: "zeta",
                found: "omega",
            }),
        }
    }
}
