//! Named single-qutrit gates and words over them.
//!
//! Text syntax: atoms joined by `.`, each optionally raised with `^k`:
//! `H`, `S`, `T`, `R`, `X`, `X[a,b,c]` (the permutation `|i> -> |sigma(i)>`),
//! `D[a,b,c]` (`diag(z^a, z^b, z^c)`), and `w` (the scalar phase `w I`).
//! The word `A.B` denotes the matrix product `A * B`; the empty word is `I`.

use std::fmt;
use std::str::FromStr;

use crate::cyclotomic::{LocalOmega, LocalZeta, Scalar, ZOmega};
use crate::error::{Error, Result};
use crate::linalg::Matrix;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Atom {
    H,
    S,
    T,
    R,
    X,
    /// Permutation gate `X_sigma` with `|i> -> |sigma[i]>`.
    Perm([u8; 3]),
    /// `diag(z^a, z^b, z^c)`.
    D([u8; 3]),
    /// The scalar `w I`.
    OmegaPhase,
}

impl Atom {
    fn order(self) -> Option<u32> {
        match self {
            Atom::H => Some(4),
            Atom::S | Atom::X | Atom::OmegaPhase => Some(3),
            Atom::T => Some(9),
            Atom::R => Some(2),
            Atom::Perm(_) | Atom::D(_) => None,
        }
    }

    fn inverse_base(self) -> Atom {
        match self {
            Atom::Perm(p) => {
                let mut inv = [0u8; 3];
                for (i, &v) in p.iter().enumerate() {
                    inv[v as usize] = i as u8;
                }
                Atom::Perm(inv)
            }
            Atom::D(d) => Atom::D(d.map(|e| (9 - e % 9) % 9)),
            other => other,
        }
    }

    pub fn matrix<R: Scalar>(self) -> Result<Matrix<R>> {
        let o = |p: i64| R::from_omega(&LocalOmega::omega_pow(p));
        let z = |p: i64| {
            R::zeta_pow(p).ok_or(Error::RingMismatch {
                expected: "zeta",
                found: R::TAG.name(),
            })
        };
        let one = R::one();
        Ok(match self {
            Atom::H => {
                let mut rows = vec![vec![one.clone(); 3]; 3];
                for (r, row) in rows.iter_mut().enumerate().skip(1) {
                    for (c, x) in row.iter_mut().enumerate().skip(1) {
                        *x = o((r * c) as i64);
                    }
                }
                Matrix::from_rows(rows)?.scale(&R::from_omega(&LocalOmega::inv_sqrt_minus3()))
            }
            Atom::S => Matrix::diagonal(vec![one.clone(), one, o(1)]),
            Atom::T => Matrix::diagonal(vec![one, z(1)?, z(-1)?]),
            Atom::R => Matrix::diagonal(vec![one.clone(), one, R::from_int(-1)]),
            Atom::X => Matrix::permutation(&[1, 2, 0]),
            Atom::Perm(p) => Matrix::permutation(&p.map(usize::from)),
            Atom::D(d) => Matrix::diagonal(
                d.iter()
                    .map(|&e| z(i64::from(e)))
                    .collect::<Result<Vec<_>>>()?,
            ),
            Atom::OmegaPhase => Matrix::diagonal(vec![o(1); 3]),
        })
    }
}

/// A product of atoms, each with a non-negative exponent.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GateWord(pub Vec<(Atom, u32)>);

impl GateWord {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn atom(a: Atom) -> Self {
        Self(vec![(a, 1)])
    }

    pub fn pow(a: Atom, e: u32) -> Self {
        if e == 0 {
            Self::identity()
        } else {
            Self(vec![(a, e)])
        }
    }

    /// The permutation gate for `sigma`, spelled `X`/`X^2` when cyclic.
    pub fn permutation(sigma: [u8; 3]) -> Self {
        match sigma {
            [0, 1, 2] => Self::identity(),
            [1, 2, 0] => Self::atom(Atom::X),
            [2, 0, 1] => Self::pow(Atom::X, 2),
            p => Self::atom(Atom::Perm(p)),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn then(mut self, other: &GateWord) -> Self {
        self.0.extend(other.0.iter().copied());
        self
    }

    pub fn inverse(&self) -> Self {
        Self(
            self.0
                .iter()
                .rev()
                .filter_map(|&(a, e)| match a.order() {
                    Some(ord) => {
                        let inv = (ord - e % ord) % ord;
                        (inv != 0).then_some((a, inv))
                    }
                    None => Some((a.inverse_base(), e)),
                })
                .collect(),
        )
    }

    /// Exact matrix over `R`. Words with `T`/`D` atoms are evaluated over
    /// Z[1/3, z] first, so e.g. `T^3` still has a matrix over Z[1/3, w].
    pub fn to_matrix<R: Scalar>(&self) -> Result<Matrix<R>> {
        match self.direct_matrix::<R>() {
            Err(Error::RingMismatch { .. }) => self
                .direct_matrix::<LocalZeta>()?
                .try_map(R::try_from_zeta)
                .ok_or(Error::RingMismatch {
                    expected: "zeta",
                    found: R::TAG.name(),
                }),
            other => other,
        }
    }

    fn direct_matrix<R: Scalar>(&self) -> Result<Matrix<R>> {
        let mut acc = Matrix::identity(3);
        for &(a, e) in &self.0 {
            let m = a.matrix::<R>()?;
            for _ in 0..e {
                acc = acc.mul(&m)?;
            }
        }
        Ok(acc)
    }

    /// True when the word has no matrix over Z[1/3, w].
    pub fn needs_zeta(&self) -> bool {
        self.to_matrix::<LocalOmega>().is_err()
    }
}

/// Exact 3x3 matrix of a word; `1/sqrt(-3)` is realized as `w^2 / chi`.
pub fn gate_matrix<R: Scalar>(g: &GateWord) -> Result<Matrix<R>> {
    g.to_matrix()
}

fn fmt_triple(t: &[u8; 3]) -> String {
    format!("[{},{},{}]", t[0], t[1], t[2])
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::H => f.write_str("H"),
            Atom::S => f.write_str("S"),
            Atom::T => f.write_str("T"),
            Atom::R => f.write_str("R"),
            Atom::X => f.write_str("X"),
            Atom::Perm(p) => write!(f, "X{}", fmt_triple(p)),
            Atom::D(d) => write!(f, "D{}", fmt_triple(d)),
            Atom::OmegaPhase => f.write_str("w"),
        }
    }
}

impl fmt::Display for GateWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("I");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(a, e)| if *e == 1 { a.to_string() } else { format!("{a}^{e}") })
            .collect();
        f.write_str(&parts.join("."))
    }
}

fn parse_triple(s: &str) -> Result<[u8; 3]> {
    let inner = s
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected [a,b,c], got {s:?}")))?;
    let vals: Vec<u8> = inner
        .split(',')
        .map(|v| v.trim().parse::<u8>().map_err(|e| Error::Parse(e.to_string())))
        .collect::<Result<_>>()?;
    vals.try_into()
        .map_err(|_| Error::Parse(format!("expected three entries in {s:?}")))
}

impl FromStr for Atom {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "H" => Atom::H,
            "S" => Atom::S,
            "T" => Atom::T,
            "R" => Atom::R,
            "X" => Atom::X,
            "w" => Atom::OmegaPhase,
            _ if s.starts_with("X[") => {
                let p = parse_triple(&s[1..])?;
                let mut seen = [false; 3];
                for &v in &p {
                    if v > 2 || std::mem::replace(&mut seen[v as usize], true) {
                        return Err(Error::Parse(format!("{s:?} is not a permutation")));
                    }
                }
                Atom::Perm(p)
            }
            _ if s.starts_with("D[") => Atom::D(parse_triple(&s[1..])?.map(|e| e % 9)),
            _ => return Err(Error::Parse(format!("unknown gate {s:?}"))),
        })
    }
}

impl FromStr for GateWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "I" {
            return Ok(Self::identity());
        }
        let mut out = Vec::new();
        // split on '.' outside brackets
        let mut depth = 0usize;
        let mut start = 0usize;
        let mut pieces = Vec::new();
        for (i, ch) in s.char_indices() {
            match ch {
                '[' => depth += 1,
                ']' => depth = depth.saturating_sub(1),
                '.' if depth == 0 => {
                    pieces.push(&s[start..i]);
                    start = i + 1;
                }
                _ => {}
            }
        }
        pieces.push(&s[start..]);
        for piece in pieces {
            let piece = piece.trim();
            let (name, exp) = match piece.rsplit_once('^') {
                Some((n, e)) if !e.contains(']') => (
                    n,
                    e.parse::<u32>()
                        .map_err(|err| Error::Parse(format!("bad exponent in {piece:?}: {err}")))?,
                ),
                _ => (piece, 1),
            };
            let atom: Atom = name.parse()?;
            if exp > 0 {
                out.push((atom, exp));
            }
        }
        Ok(Self(out))
    }
}

/// `w^p I` as a 1x1 value, used by the 1-level alphabet.
pub fn omega_unit(p: i64) -> LocalOmega {
    LocalOmega::integral(ZOmega::omega_pow(p))
}
