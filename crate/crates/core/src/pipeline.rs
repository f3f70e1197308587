//! End-to-end synthesis and verification.
//!
//! `synth_omega` takes a unitary over Z[1/3, w] on `n` wires to a circuit of
//! `|2>`-controlled H/S/X/R words; `synth_zeta` first embeds a Z[1/3, z]
//! unitary on one extra (catalyst) wire and then calls `synth_omega`.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::catalytic::{self, catalyst};
use crate::circuit::controlled::pow3;
use crate::circuit::Circuit;
use crate::cyclotomic::{LocalOmega, LocalZeta, RingTag};
use crate::error::{Error, Result};
use crate::graycode::{lift_level_alphabet, to_controlled};
use crate::linalg::{AnyMatrix, Matrix, OmegaMatrix, ZetaMatrix};
use crate::reducer::decompose_unitary;

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct SynthesisReport {
    pub input_dim: usize,
    pub ring: &'static str,
    pub wires: usize,
    pub level_matrix_count: usize,
    pub gate_count: usize,
    pub controlled_gate_count: usize,
    pub conjugator_count: usize,
    /// Ancillas in the emitted circuit: 1 for the catalyst wire, else 0.
    pub ancillas_used: usize,
    /// Lowering multiply-controlled gates to Clifford+T may take one more
    /// ancilla; that lowering is not performed here.
    pub lowering_ancilla_out_of_scope: bool,
    pub max_sde_seen: u32,
    #[serde(serialize_with = "as_secs")]
    pub wall_time: Duration,
}

impl SynthesisReport {
    /// Ancillas counting the out-of-scope lowering step.
    pub fn ancillas_with_lowering(&self) -> usize {
        self.ancillas_used + usize::from(self.lowering_ancilla_out_of_scope)
    }
}

fn as_secs<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

/// Number of wires `n` with `dim = 3^n`.
pub fn wires_for_dim(dim: usize) -> Result<usize> {
    let mut n = 0;
    let mut p = 1;
    while p < dim {
        p *= 3;
        n += 1;
    }
    if p != dim || n == 0 {
        return Err(Error::DimensionNotPowerOf3(dim));
    }
    Ok(n)
}

/// Synthesizes `I_{3^n - m} (+) U` on the smallest `n` with `3^n >= m`.
pub fn synth_padded(u: &OmegaMatrix) -> Result<(Circuit, SynthesisReport)> {
    let start = Instant::now();
    let m = u.rows();
    if m < 3 {
        return Err(Error::DimensionError(format!("dimension {m} < 3")));
    }
    let dec = decompose_unitary(u)?;
    let mut n = 1;
    while pow3(n) < m {
        n += 1;
    }
    let offset = pow3(n) - m;
    let mut circuit = Circuit::new(n);
    let mut conjugators = 0;
    // U = L_1 ... L_k, so L_k acts first
    for level in dec.levels.iter().rev() {
        let lifted = lift_level_alphabet(level, m)?.shifted(offset);
        let plan = to_controlled(&lifted, n)?;
        conjugators += plan.conjugators.len();
        circuit.gates.extend(plan.expand());
    }
    let report = SynthesisReport {
        input_dim: m,
        ring: RingTag::Omega.name(),
        wires: n,
        level_matrix_count: dec.levels.len(),
        gate_count: circuit.gates.len(),
        controlled_gate_count: circuit.controlled_gate_count(),
        conjugator_count: conjugators,
        ancillas_used: 0,
        lowering_ancilla_out_of_scope: true,
        max_sde_seen: dec.max_sde,
        wall_time: start.elapsed(),
    };
    Ok((circuit, report))
}

pub fn synth_omega(u: &OmegaMatrix) -> Result<(Circuit, SynthesisReport)> {
    if !u.is_square() {
        return Err(Error::NotUnitary);
    }
    wires_for_dim(u.rows())?;
    synth_padded(u)
}

/// The circuit acts on `n + 1` wires, the last being the catalyst, and
/// multiplies out to `Phi(U)`.
pub fn synth_zeta(u: &ZetaMatrix) -> Result<(Circuit, SynthesisReport)> {
    let start = Instant::now();
    if !u.is_square() {
        return Err(Error::NotUnitary);
    }
    wires_for_dim(u.rows())?;
    let emb = catalytic::embed(u)?;
    let (mut circuit, mut report) = synth_omega(&emb.phi)?;
    circuit.ancillas = 1;
    report.input_dim = u.rows();
    report.ring = RingTag::Zeta.name();
    report.ancillas_used = 1;
    report.wall_time = start.elapsed();
    Ok((circuit, report))
}

pub fn synth_any(u: &AnyMatrix) -> Result<(Circuit, SynthesisReport)> {
    match u {
        AnyMatrix::Omega(m) => synth_omega(m),
        AnyMatrix::Zeta(m) => synth_zeta(m),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Match,
    Mismatch(String),
}

impl Verdict {
    pub fn is_match(&self) -> bool {
        *self == Verdict::Match
    }
}

fn compare<R: crate::cyclotomic::Scalar>(found: &Matrix<R>, expected: &Matrix<R>) -> Verdict {
    if found.rows() != expected.rows() || found.cols() != expected.cols() {
        return Verdict::Mismatch(format!(
            "circuit is {}x{}, matrix is {}x{}",
            found.rows(),
            found.cols(),
            expected.rows(),
            expected.cols()
        ));
    }
    match found.first_difference(expected) {
        None => Verdict::Match,
        Some((r, c)) => Verdict::Mismatch(format!(
            "entry ({r}, {c}): circuit gives {}, expected {}",
            found.get(r, c),
            expected.get(r, c)
        )),
    }
}

/// Checks `circuit_matrix(circuit) = expected` exactly.
pub fn verify_direct(circuit: &Circuit, expected: &AnyMatrix) -> Result<Verdict> {
    if pow3(circuit.wires) != expected.rows() {
        return Ok(Verdict::Mismatch(format!(
            "circuit has dimension {}, matrix has {}",
            pow3(circuit.wires),
            expected.rows()
        )));
    }
    Ok(match expected {
        AnyMatrix::Omega(m) if !circuit.needs_zeta() => compare(&circuit.matrix::<LocalOmega>()?, m),
        AnyMatrix::Omega(m) => compare(&circuit.matrix::<LocalZeta>()?, &m.to_zeta()),
        AnyMatrix::Zeta(m) => compare(&circuit.matrix::<LocalZeta>()?, m),
    })
}

/// Checks `C (e_j (x) l) = (U e_j) (x) l` for the catalyst `l` on the last
/// wire of `circuit`.
pub fn verify_catalytic(circuit: &Circuit, u: &ZetaMatrix) -> Result<Verdict> {
    let m = u.rows();
    if pow3(circuit.wires) != 3 * m {
        return Ok(Verdict::Mismatch(format!(
            "circuit has dimension {}, expected {}",
            pow3(circuit.wires),
            3 * m
        )));
    }
    let c = circuit.matrix::<LocalZeta>()?;
    let lam = catalyst();
    let lhs = c.mul(&Matrix::identity(m).kron(&lam))?;
    Ok(compare(&lhs, &u.kron(&lam)))
}
