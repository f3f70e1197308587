//! Multiply-controlled single-qutrit gates and circuits.
//!
//! Wire 0 is the most significant trit of a basis index, so the basis
//! state `|y_0 y_1 ... y_{n-1}>` has index `sum y_w 3^(n-1-w)`.

use std::fmt;

use super::gates::{Atom, GateWord};
use crate::cyclotomic::{LocalZeta, RingTag, Scalar};
use crate::error::{Error, Result};
use crate::linalg::{AnyMatrix, Matrix, OmegaMatrix, ZetaMatrix};

pub fn pow3(n: usize) -> usize {
    3usize.pow(n as u32)
}

/// Digit of wire `w` in basis index `idx` over `n` wires.
pub fn digit(idx: usize, w: usize, n: usize) -> u8 {
    ((idx / pow3(n - 1 - w)) % 3) as u8
}

/// The single-qutrit operation a gate applies to its target.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Base {
    Word(GateWord),
    Omega(OmegaMatrix),
    Zeta(ZetaMatrix),
}

impl Base {
    pub fn matrix<R: Scalar>(&self) -> Result<Matrix<R>> {
        let m = match self {
            Base::Word(w) => w.to_matrix::<R>()?,
            Base::Omega(m) => m.map(R::from_omega),
            Base::Zeta(m) => m.try_map(R::try_from_zeta).ok_or(Error::RingMismatch {
                expected: "zeta",
                found: R::TAG.name(),
            })?,
        };
        if m.rows() != 3 || m.cols() != 3 {
            return Err(Error::DimensionError(format!(
                "gate base must be 3x3, got {}x{}",
                m.rows(),
                m.cols()
            )));
        }
        Ok(m)
    }

    pub fn needs_zeta(&self) -> bool {
        match self {
            Base::Word(w) => w.needs_zeta(),
            Base::Omega(_) => false,
            Base::Zeta(m) => m.to_omega().is_none(),
        }
    }

    pub fn word(&self) -> Option<&GateWord> {
        match self {
            Base::Word(w) => Some(w),
            _ => None,
        }
    }
}

impl From<GateWord> for Base {
    fn from(w: GateWord) -> Self {
        Base::Word(w)
    }
}

/// `controls`-controlled `base` on wire `target`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ControlledGate {
    controls: Vec<(usize, u8)>,
    target: usize,
    base: Base,
}

impl ControlledGate {
    pub fn new(mut controls: Vec<(usize, u8)>, target: usize, base: impl Into<Base>) -> Result<Self> {
        controls.sort_unstable();
        for (i, &(w, v)) in controls.iter().enumerate() {
            if v > 2 {
                return Err(Error::InvalidControls(format!("control value {v} on wire {w}")));
            }
            if w == target {
                return Err(Error::InvalidControls(format!("wire {w} is both control and target")));
            }
            if i > 0 && controls[i - 1].0 == w {
                return Err(Error::InvalidControls(format!("wire {w} controlled twice")));
            }
        }
        Ok(Self {
            controls,
            target,
            base: base.into(),
        })
    }

    /// An unconditional single-qutrit gate.
    pub fn single(target: usize, base: impl Into<Base>) -> Self {
        Self {
            controls: Vec::new(),
            target,
            base: base.into(),
        }
    }

    pub fn controls(&self) -> &[(usize, u8)] {
        &self.controls
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn base(&self) -> &Base {
        &self.base
    }

    pub fn max_wire(&self) -> usize {
        self.controls
            .iter()
            .map(|&(w, _)| w)
            .chain(std::iter::once(self.target))
            .max()
            .unwrap_or(0)
    }

    fn check_wires(&self, n: usize) -> Result<()> {
        let w = self.max_wire();
        if w >= n {
            return Err(Error::WireOutOfRange { wire: w, wires: n });
        }
        Ok(())
    }

    fn controls_match(&self, idx: usize, n: usize) -> bool {
        self.controls.iter().all(|&(w, v)| digit(idx, w, n) == v)
    }

    /// Full `3^n x 3^n` matrix, built from the basis-state action.
    pub fn matrix<R: Scalar>(&self, n: usize) -> Result<Matrix<R>> {
        self.check_wires(n)?;
        let base = self.base.matrix::<R>()?;
        let dim = pow3(n);
        let stride = pow3(n - 1 - self.target);
        let mut out = Matrix::zeros(dim, dim);
        for y in 0..dim {
            if !self.controls_match(y, n) {
                out.set(y, y, R::one());
                continue;
            }
            let yt = digit(y, self.target, n) as usize;
            let low = y - yt * stride;
            for v in 0..3 {
                out.set(low + v * stride, y, base.get(v, yt).clone());
            }
        }
        Ok(out)
    }

    /// `target <- G * target`, touching only the affected rows.
    pub fn apply_left<R: Scalar>(&self, n: usize, target: &mut Matrix<R>) -> Result<()> {
        let base = self.base.matrix::<R>()?;
        self.apply_left_with(&base, n, target)
    }

    fn apply_left_with<R: Scalar>(&self, base: &Matrix<R>, n: usize, target: &mut Matrix<R>) -> Result<()> {
        self.check_wires(n)?;
        let stride = pow3(n - 1 - self.target);
        for idx in 0..pow3(n) {
            if digit(idx, self.target, n) != 0 || !self.controls_match(idx, n) {
                continue;
            }
            target.apply_block_left(base, &[idx, idx + stride, idx + 2 * stride]);
        }
        Ok(())
    }

    /// Permutation of basis indices, for gates whose base is a permutation.
    pub fn permute_index(&self, idx: usize, n: usize, sigma: [u8; 3]) -> usize {
        if !self.controls_match(idx, n) {
            return idx;
        }
        let stride = pow3(n - 1 - self.target);
        let t = digit(idx, self.target, n);
        idx - t as usize * stride + sigma[t as usize] as usize * stride
    }

    pub fn inverse(&self) -> Self {
        let base = match &self.base {
            Base::Word(w) => Base::Word(w.inverse()),
            Base::Omega(m) => Base::Omega(m.dagger()),
            Base::Zeta(m) => Base::Zeta(m.dagger()),
        };
        Self {
            controls: self.controls.clone(),
            target: self.target,
            base,
        }
    }

    pub fn all_controls_two(&self) -> bool {
        self.controls.iter().all(|&(_, v)| v == 2)
    }
}

/// `controlled_matrix` as a free function.
pub fn controlled_matrix<R: Scalar>(g: &ControlledGate, n: usize) -> Result<Matrix<R>> {
    g.matrix(n)
}

/// Rewrites every `|0>`/`|1>` control as a `|2>` control by conjugating the
/// control wire with `X^2` (for 0) or `X` (for 1).
pub fn normalize_controls(g: &ControlledGate) -> Vec<ControlledGate> {
    let shifts: Vec<(usize, u32)> = g
        .controls
        .iter()
        .filter(|&&(_, v)| v != 2)
        .map(|&(w, v)| (w, u32::from(2 - v)))
        .collect();
    if shifts.is_empty() {
        return vec![g.clone()];
    }
    let mut out = Vec::with_capacity(2 * shifts.len() + 1);
    for &(w, e) in &shifts {
        out.push(ControlledGate::single(w, GateWord::pow(Atom::X, e)));
    }
    out.push(ControlledGate {
        controls: g.controls.iter().map(|&(w, _)| (w, 2)).collect(),
        target: g.target,
        base: g.base.clone(),
    });
    for &(w, e) in shifts.iter().rev() {
        out.push(ControlledGate::single(w, GateWord::pow(Atom::X, 3 - e)));
    }
    out
}

/// An ordered gate list; the first gate acts first.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Circuit {
    pub wires: usize,
    pub ancillas: usize,
    pub gates: Vec<ControlledGate>,
}

impl Circuit {
    pub fn new(wires: usize) -> Self {
        Self {
            wires,
            ancillas: 0,
            gates: Vec::new(),
        }
    }

    pub fn push(&mut self, g: ControlledGate) {
        self.gates.push(g);
    }

    pub fn needs_zeta(&self) -> bool {
        self.gates.iter().any(|g| g.base.needs_zeta())
    }

    pub fn ring(&self) -> RingTag {
        if self.needs_zeta() {
            RingTag::Zeta
        } else {
            RingTag::Omega
        }
    }

    /// Exact product `G_last ... G_first`.
    pub fn matrix<R: Scalar>(&self) -> Result<Matrix<R>> {
        let mut acc = Matrix::identity(pow3(self.wires));
        for g in &self.gates {
            g.apply_left(self.wires, &mut acc)?;
        }
        Ok(acc)
    }

    pub fn any_matrix(&self) -> Result<AnyMatrix> {
        Ok(match self.ring() {
            RingTag::Omega => AnyMatrix::Omega(self.matrix()?),
            RingTag::Zeta => AnyMatrix::Zeta(self.matrix::<LocalZeta>()?),
        })
    }

    pub fn controlled_gate_count(&self) -> usize {
        self.gates.iter().filter(|g| !g.controls.is_empty()).count()
    }

    /// One gate per line, for diffing.
    pub fn to_text(&self) -> String {
        let mut s = format!("wires {} ancillas {}\n", self.wires, self.ancillas);
        for g in &self.gates {
            s.push_str(&g.to_string());
            s.push('\n');
        }
        s
    }
}

/// `circuit_matrix` as a free function.
pub fn circuit_matrix<R: Scalar>(c: &Circuit) -> Result<Matrix<R>> {
    c.matrix()
}

impl fmt::Display for ControlledGate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.base {
            Base::Word(w) => write!(f, "{w}")?,
            Base::Omega(_) => write!(f, "<omega matrix>")?,
            Base::Zeta(_) => write!(f, "<zeta matrix>")?,
        }
        write!(f, " @{}", self.target)?;
        if !self.controls.is_empty() {
            let c: Vec<String> = self.controls.iter().map(|(w, v)| format!("{w}={v}")).collect();
            write!(f, " if {}", c.join(","))?;
        }
        Ok(())
    }
}
