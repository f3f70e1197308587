//! 1-, 2- and 3-level unitaries.

use std::fmt;

use super::gates::{omega_unit, GateWord};
use crate::cyclotomic::{LocalOmega, Scalar};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, OmegaMatrix};

/// A unitary acting as `base` on the coordinates `indices` (in that order)
/// and as the identity on their orthogonal complement.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LevelMatrix {
    base: OmegaMatrix,
    word: Option<GateWord>,
    indices: Vec<usize>,
}

fn check_indices(indices: &[usize], dim: Option<usize>) -> Result<()> {
    for (i, &j) in indices.iter().enumerate() {
        if let Some(m) = dim {
            if j >= m {
                return Err(Error::IndexOutOfRange { index: j, dim: m });
            }
        }
        if indices[..i].contains(&j) {
            return Err(Error::DuplicateIndex(j));
        }
    }
    Ok(())
}

impl LevelMatrix {
    pub fn new(base: OmegaMatrix, word: Option<GateWord>, indices: Vec<usize>) -> Result<Self> {
        let k = indices.len();
        if !(1..=3).contains(&k) || base.rows() != k || base.cols() != k {
            return Err(Error::DimensionError(format!(
                "{}x{} base with {} indices",
                base.rows(),
                base.cols(),
                k
            )));
        }
        check_indices(&indices, None)?;
        Ok(Self {
            base,
            word,
            indices,
        })
    }

    /// 3-level matrix of type `word`.
    pub fn three(word: GateWord, indices: [usize; 3]) -> Result<Self> {
        let base = word.to_matrix::<LocalOmega>()?;
        Self::new(base, Some(word), indices.to_vec())
    }

    /// 1-level `[w^p]_{[j]}`.
    pub fn phase(p: u8, j: usize) -> Self {
        Self {
            base: Matrix::diagonal(vec![omega_unit(i64::from(p))]),
            word: None,
            indices: vec![j],
        }
    }

    /// 1-level `[-1]_{[j]}`.
    pub fn sign(j: usize) -> Self {
        Self {
            base: Matrix::diagonal(vec![LocalOmega::from_int(-1)]),
            word: None,
            indices: vec![j],
        }
    }

    /// 2-level swap of coordinates `j` and `l`.
    pub fn swap(j: usize, l: usize) -> Result<Self> {
        Self::new(Matrix::permutation(&[1, 0]), None, vec![j, l])
    }

    pub fn level(&self) -> usize {
        self.indices.len()
    }

    pub fn base(&self) -> &OmegaMatrix {
        &self.base
    }

    pub fn word(&self) -> Option<&GateWord> {
        self.word.as_ref()
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn inverse(&self) -> Self {
        Self {
            base: self.base.dagger(),
            word: self.word.as_ref().map(GateWord::inverse),
            indices: self.indices.clone(),
        }
    }

    /// Shifts every index by `offset` (used for `I_{m'} (+) M` padding).
    pub fn shifted(&self, offset: usize) -> Self {
        Self {
            base: self.base.clone(),
            word: self.word.clone(),
            indices: self.indices.iter().map(|j| j + offset).collect(),
        }
    }

    /// The full `m x m` matrix.
    pub fn embed<R: Scalar>(&self, m: usize) -> Result<Matrix<R>> {
        check_indices(&self.indices, Some(m))?;
        let mut out = Matrix::identity(m);
        for (bi, &r) in self.indices.iter().enumerate() {
            for (bj, &c) in self.indices.iter().enumerate() {
                out.set(r, c, R::from_omega(self.base.get(bi, bj)));
            }
        }
        Ok(out)
    }

    /// `target <- self * target` without materializing the full matrix.
    pub fn apply_left(&self, target: &mut OmegaMatrix) -> Result<()> {
        check_indices(&self.indices, Some(target.rows()))?;
        target.apply_block_left(&self.base, &self.indices);
        Ok(())
    }
}

/// Reads the block of `full` at `indices`.
pub fn extract_block<R: Scalar>(full: &Matrix<R>, indices: &[usize]) -> Matrix<R> {
    let rows = indices
        .iter()
        .map(|&r| indices.iter().map(|&c| full.get(r, c).clone()).collect())
        .collect();
    Matrix::from_rows(rows).expect("square block")
}

/// `embed_level` as a free function.
pub fn embed_level<R: Scalar>(l: &LevelMatrix, m: usize) -> Result<Matrix<R>> {
    l.embed(m)
}

impl fmt::Display for LevelMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.indices.iter().map(ToString::to_string).collect();
        match (&self.word, self.level()) {
            (Some(w), _) => write!(f, "({w})_[{}]", idx.join(",")),
            (None, 1) => write!(f, "[{}]_[{}]", self.base.get(0, 0), idx.join(",")),
            (None, _) => write!(f, "{:?}_[{}]", self.base.to_rows(), idx.join(",")),
        }
    }
}
