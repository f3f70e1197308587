//! Seeded random test instances built from generator words.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::circuit::controlled::pow3;
use crate::circuit::{Atom, Circuit, ControlledGate, GateWord, LevelMatrix};
use crate::cyclotomic::{LocalOmega, LocalZeta, RingTag, Scalar};
use crate::error::Result;
use crate::linalg::{AnyMatrix, Matrix, Vector};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `CX |x, y> = |x, y + x>` with control `c` and target `t`.
pub fn cx(c: usize, t: usize) -> [ControlledGate; 2] {
    [1u8, 2].map(|v| {
        ControlledGate::new(vec![(c, v)], t, GateWord::pow(Atom::X, u32::from(v))).expect("distinct wires")
    })
}

/// `length` generators on `n` wires, in time order. The omega ring draws
/// from H, S, X, R (and CX when `n > 1`); zeta adds T and D.
pub fn random_gates(ring: RingTag, n: usize, length: usize, rng: &mut impl Rng) -> Vec<ControlledGate> {
    let mut kinds = vec!["H", "S", "X", "R"];
    if n > 1 {
        kinds.push("CX");
    }
    if ring == RingTag::Zeta {
        kinds.extend(["T", "D"]);
    }
    let mut out = Vec::new();
    for _ in 0..length {
        let w = rng.gen_range(0..n);
        let word = match *kinds.choose(rng).expect("non-empty") {
            "H" => GateWord::atom(Atom::H),
            "S" => GateWord::atom(Atom::S),
            "X" => GateWord::atom(Atom::X),
            "R" => GateWord::atom(Atom::R),
            "T" => GateWord::atom(Atom::T),
            "D" => GateWord::atom(Atom::D([0; 3].map(|_| rng.gen_range(0..9)))),
            _ => {
                let mut t = rng.gen_range(0..n - 1);
                if t >= w {
                    t += 1;
                }
                out.extend(cx(w, t));
                continue;
            }
        };
        out.push(ControlledGate::single(w, word));
    }
    out
}

fn product<R: Scalar>(n: usize, gates: Vec<ControlledGate>) -> Matrix<R> {
    let mut c = Circuit::new(n);
    c.gates = gates;
    c.matrix().expect("generators live in the ring")
}

/// Product of `length` random generators on `n` wires, deterministic in `seed`.
pub fn random_unitary(ring: RingTag, n: usize, length: usize, seed: u64) -> AnyMatrix {
    let mut r = rng(seed);
    let gates = random_gates(ring, n, length, &mut r);
    match ring {
        RingTag::Omega => AnyMatrix::Omega(product::<LocalOmega>(n, gates)),
        RingTag::Zeta => AnyMatrix::Zeta(product::<LocalZeta>(n, gates)),
    }
}

pub fn random_omega(n: usize, length: usize, rng: &mut impl Rng) -> Matrix<LocalOmega> {
    product(n, random_gates(RingTag::Omega, n, length, rng))
}

pub fn random_zeta(n: usize, length: usize, rng: &mut impl Rng) -> Matrix<LocalZeta> {
    product(n, random_gates(RingTag::Zeta, n, length, rng))
}

/// A random column of a random omega-ring unitary.
pub fn random_unit_column(n: usize, length: usize, rng: &mut impl Rng) -> Vector<LocalOmega> {
    let u = random_omega(n, length, rng);
    u.column(rng.gen_range(0..u.cols()))
}

/// A 3-level matrix with a random word over H, S, X, R at distinct random
/// indices below `3^n`.
pub fn random_three_level(n: usize, word_len: usize, rng: &mut impl Rng) -> Result<LevelMatrix> {
    let atoms = [Atom::H, Atom::S, Atom::X, Atom::R];
    let mut word = GateWord::identity();
    for _ in 0..word_len {
        word = word.then(&GateWord::atom(*atoms.choose(rng).expect("non-empty")));
    }
    let idx: Vec<usize> = rand::seq::index::sample(rng, pow3(n), 3).into_vec();
    LevelMatrix::three(word, [idx[0], idx[1], idx[2]])
}
