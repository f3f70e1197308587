//! JSON encodings for ring elements, matrices and circuits.
//!
//! A `LocalOmega` is `{"a", "b", "k"}` meaning `(a + b w) / chi^k`; a
//! `LocalZeta` is `{"c": [c0..c5], "k"}` meaning `(sum c_i z^i) / 3^k`.
//! Big integers are decimal strings.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::circuit::{Base, Circuit, ControlledGate, GateWord};
use crate::cyclotomic::{LocalOmega, LocalZeta, RingTag, ZOmega, ZZeta};
use crate::error::{Error, Result};
use crate::linalg::{AnyMatrix, Matrix};

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(untagged)]
pub enum EntryJson {
    Omega { a: String, b: String, k: u32 },
    Zeta { c: [String; 6], k: u32 },
}

fn big(s: &str) -> Result<BigInt> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("not an integer: {s:?}")))
}

impl From<&LocalOmega> for EntryJson {
    fn from(x: &LocalOmega) -> Self {
        EntryJson::Omega {
            a: x.num().a.to_string(),
            b: x.num().b.to_string(),
            k: x.k(),
        }
    }
}

impl From<&LocalZeta> for EntryJson {
    fn from(x: &LocalZeta) -> Self {
        EntryJson::Zeta {
            c: x.num().coeffs().clone().map(|c| c.to_string()),
            k: x.k(),
        }
    }
}

impl EntryJson {
    pub fn to_omega(&self) -> Result<LocalOmega> {
        match self {
            EntryJson::Omega { a, b, k } => Ok(LocalOmega::new(ZOmega::new(big(a)?, big(b)?), *k)),
            EntryJson::Zeta { .. } => Err(Error::RingMismatch {
                expected: "omega",
                found: "zeta",
            }),
        }
    }

    pub fn to_zeta(&self) -> Result<LocalZeta> {
        match self {
            EntryJson::Zeta { c, k } => {
                let mut coeffs: [BigInt; 6] = Default::default();
                for (dst, s) in coeffs.iter_mut().zip(c) {
                    *dst = big(s)?;
                }
                Ok(LocalZeta::new(ZZeta::new(coeffs), *k))
            }
            EntryJson::Omega { .. } => Err(Error::RingMismatch {
                expected: "zeta",
                found: "omega",
            }),
        }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct MatrixJson {
    pub ring: String,
    pub dim: usize,
    pub entries: Vec<Vec<EntryJson>>,
}

fn ring_from_name(s: &str) -> Result<RingTag> {
    match s {
        "omega" => Ok(RingTag::Omega),
        "zeta" => Ok(RingTag::Zeta),
        other => Err(Error::Parse(format!("unknown ring {other:?}"))),
    }
}

impl From<&AnyMatrix> for MatrixJson {
    fn from(m: &AnyMatrix) -> Self {
        let entries = match m {
            AnyMatrix::Omega(m) => m.to_rows().iter().map(|r| r.iter().map(EntryJson::from).collect()).collect(),
            AnyMatrix::Zeta(m) => m.to_rows().iter().map(|r| r.iter().map(EntryJson::from).collect()).collect(),
        };
        MatrixJson {
            ring: m.ring().name().to_string(),
            dim: m.rows(),
            entries,
        }
    }
}

impl MatrixJson {
    pub fn to_matrix(&self) -> Result<AnyMatrix> {
        if self.entries.len() != self.dim || self.entries.iter().any(|r| r.len() != self.dim) {
            return Err(Error::Parse(format!("entries do not form a {0}x{0} matrix", self.dim)));
        }
        match ring_from_name(&self.ring)? {
            RingTag::Omega => {
                let rows = self
                    .entries
                    .iter()
                    .map(|r| r.iter().map(EntryJson::to_omega).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                Ok(AnyMatrix::Omega(Matrix::from_rows(rows)?))
            }
            RingTag::Zeta => {
                let rows = self
                    .entries
                    .iter()
                    .map(|r| r.iter().map(EntryJson::to_zeta).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                Ok(AnyMatrix::Zeta(Matrix::from_rows(rows)?))
            }
        }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(untagged)]
pub enum BaseJson {
    Word(String),
    Matrix(MatrixJson),
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct GateJson {
    pub controls: Vec<(usize, u8)>,
    pub target: usize,
    pub base: BaseJson,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct CircuitJson {
    pub wires: usize,
    pub ancillas: usize,
    pub gates: Vec<GateJson>,
}

impl From<&Circuit> for CircuitJson {
    fn from(c: &Circuit) -> Self {
        let gates = c
            .gates
            .iter()
            .map(|g| GateJson {
                controls: g.controls().to_vec(),
                target: g.target(),
                base: match g.base() {
                    Base::Word(w) => BaseJson::Word(w.to_string()),
                    Base::Omega(m) => BaseJson::Matrix((&AnyMatrix::Omega(m.clone())).into()),
                    Base::Zeta(m) => BaseJson::Matrix((&AnyMatrix::Zeta(m.clone())).into()),
                },
            })
            .collect();
        CircuitJson {
            wires: c.wires,
            ancillas: c.ancillas,
            gates,
        }
    }
}

impl CircuitJson {
    pub fn to_circuit(&self) -> Result<Circuit> {
        let mut c = Circuit::new(self.wires);
        c.ancillas = self.ancillas;
        for g in &self.gates {
            let base = match &g.base {
                BaseJson::Word(s) => Base::Word(s.parse::<GateWord>()?),
                BaseJson::Matrix(m) => match m.to_matrix()? {
                    AnyMatrix::Omega(m) => Base::Omega(m),
                    AnyMatrix::Zeta(m) => Base::Zeta(m),
                },
            };
            let gate = ControlledGate::new(g.controls.clone(), g.target, base)?;
            if gate.max_wire() >= self.wires {
                return Err(Error::WireOutOfRange {
                    wire: gate.max_wire(),
                    wires: self.wires,
                });
            }
            c.push(gate);
        }
        Ok(c)
    }
}

fn parse_json<T: for<'de> Deserialize<'de>>(s: &str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

pub fn matrix_to_json(m: &AnyMatrix) -> String {
    serde_json::to_string_pretty(&MatrixJson::from(m)).expect("serializable")
}

pub fn matrix_from_json(s: &str) -> Result<AnyMatrix> {
    parse_json::<MatrixJson>(s)?.to_matrix()
}

pub fn circuit_to_json(c: &Circuit) -> String {
    serde_json::to_string_pretty(&CircuitJson::from(c)).expect("serializable")
}

pub fn circuit_from_json(s: &str) -> Result<Circuit> {
    parse_json::<CircuitJson>(s)?.to_circuit()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::Atom;

    #[test]
    fn entry_round_trip() {
        let x = LocalOmega::inv_sqrt_minus3().add(&LocalOmega::from_int(7));
        let j = serde_json::to_string(&EntryJson::from(&x)).unwrap();
        let back: EntryJson = serde_json::from_str(&j).unwrap();
        assert_eq!(back.to_omega().unwrap(), x);

        let z = LocalZeta::zeta_pow(5).add(&LocalZeta::from_local_omega(&LocalOmega::inv_sqrt_minus3()));
        let back: EntryJson = serde_json::from_str(&serde_json::to_string(&EntryJson::from(&z)).unwrap()).unwrap();
        assert_eq!(back.to_zeta().unwrap(), z);
    }

    #[test]
    fn entry_format() {
        let j = serde_json::to_value(EntryJson::from(&LocalOmega::inv_sqrt_minus3())).unwrap();
        assert_eq!(j, serde_json::json!({"a": "-1", "b": "-1", "k": 1}));
    }

    #[test]
    fn matrix_round_trip() {
        let h: Matrix<LocalZeta> = "H.T".parse::<GateWord>().unwrap().to_matrix().unwrap();
        let m = AnyMatrix::Zeta(h);
        assert_eq!(matrix_from_json(&matrix_to_json(&m)).unwrap(), m);
    }

    #[test]
    fn circuit_round_trip() {
        let mut c = Circuit::new(2);
        c.push(ControlledGate::new(vec![(0, 2)], 1, "H.S^2".parse::<GateWord>().unwrap()).unwrap());
        c.push(ControlledGate::single(0, GateWord::atom(Atom::Perm([0, 2, 1]))));
        c.push(ControlledGate::single(1, Base::Omega(Matrix::identity(3))));
        let back = circuit_from_json(&circuit_to_json(&c)).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(matrix_from_json("{"), Err(Error::Parse(_))));
        assert!(matches!(
            matrix_from_json(r#"{"ring":"omega","dim":2,"entries":[[{"a":"1","b":"0","k":0}]]}"#),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            matrix_from_json(r#"{"ring":"omega","dim":1,"entries":[[{"a":"x","b":"0","k":0}]]}"#),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            circuit_from_json(r#"{"wires":1,"ancillas":0,"gates":[{"controls":[],"target":3,"base":"H"}]}"#),
            Err(Error::WireOutOfRange { wire: 3, wires: 1 })
        ));
    }
}
