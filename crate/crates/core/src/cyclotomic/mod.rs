//! Exact cyclotomic arithmetic.

mod omega;
mod zeta;

use std::fmt;

pub use omega::{LocalOmega, ZOmega};
pub use zeta::{LocalZeta, ZZeta};

/// An element of Z/3Z.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Trit(u8);

impl Trit {
    pub fn new(v: u8) -> Self {
        Self(v % 3)
    }

    pub fn value(self) -> u8 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl std::ops::Add for Trit {
    type Output = Trit;
    fn add(self, rhs: Trit) -> Trit {
        Trit::new(self.0 + rhs.0)
    }
}

impl std::ops::Mul for Trit {
    type Output = Trit;
    fn mul(self, rhs: Trit) -> Trit {
        Trit::new(self.0 * rhs.0)
    }
}

impl std::ops::Neg for Trit {
    type Output = Trit;
    fn neg(self) -> Trit {
        Trit::new(3 - self.0)
    }
}

impl fmt::Display for Trit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Which coefficient ring a matrix lives over.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum RingTag {
    Omega,
    Zeta,
}

impl RingTag {
    pub fn name(self) -> &'static str {
        match self {
            RingTag::Omega => "omega",
            RingTag::Zeta => "zeta",
        }
    }
}

impl fmt::Display for RingTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Common interface of the two exact coefficient rings.
pub trait Scalar: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    const TAG: RingTag;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn conj(&self) -> Self;
    fn from_omega(x: &LocalOmega) -> Self;
    /// `z^p`, if representable in this ring.
    fn zeta_pow(p: i64) -> Option<Self>;
    fn try_from_zeta(x: &LocalZeta) -> Option<Self>;
    fn from_int(v: i64) -> Self;
}

impl Scalar for LocalOmega {
    const TAG: RingTag = RingTag::Omega;

    fn zero() -> Self {
        LocalOmega::default()
    }
    fn one() -> Self {
        LocalOmega::from_int(1)
    }
    fn is_zero(&self) -> bool {
        LocalOmega::is_zero(self)
    }
    fn is_one(&self) -> bool {
        LocalOmega::is_one(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        LocalOmega::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        LocalOmega::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        LocalOmega::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        LocalOmega::neg(self)
    }
    fn conj(&self) -> Self {
        LocalOmega::conj(self)
    }
    fn from_omega(x: &LocalOmega) -> Self {
        x.clone()
    }
    fn zeta_pow(p: i64) -> Option<Self> {
        (p.rem_euclid(3) == 0).then(|| LocalOmega::omega_pow(p.div_euclid(3)))
    }
    fn try_from_zeta(x: &LocalZeta) -> Option<Self> {
        x.to_local_omega()
    }
    fn from_int(v: i64) -> Self {
        LocalOmega::from_int(v)
    }
}

impl Scalar for LocalZeta {
    const TAG: RingTag = RingTag::Zeta;

    fn zero() -> Self {
        LocalZeta::default()
    }
    fn one() -> Self {
        LocalZeta::from_int(1)
    }
    fn is_zero(&self) -> bool {
        LocalZeta::is_zero(self)
    }
    fn is_one(&self) -> bool {
        LocalZeta::is_one(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        LocalZeta::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        LocalZeta::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        LocalZeta::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        LocalZeta::neg(self)
    }
    fn conj(&self) -> Self {
        LocalZeta::conj(self)
    }
    fn from_omega(x: &LocalOmega) -> Self {
        LocalZeta::from_local_omega(x)
    }
    fn zeta_pow(p: i64) -> Option<Self> {
        Some(LocalZeta::zeta_pow(p))
    }
    fn try_from_zeta(x: &LocalZeta) -> Option<Self> {
        Some(x.clone())
    }
    fn from_int(v: i64) -> Self {
        LocalZeta::from_int(v)
    }
}

/// Splits an element of Z[1/3, z] as `a0 + a1 z + a2 z^2` over Z[1/3, w].
pub fn zeta_decompose(x: &LocalZeta) -> [LocalOmega; 3] {
    x.decompose()
}
