//! The Eisenstein integers Z[w] and their localization Z[1/3, w].
//!
//! Elements of Z[w] are stored in the basis {1, w}, reduced with
//! w^2 = -1 - w. Localized elements carry a power of chi = 1 - w in the
//! denominator and are kept in reduced form, so equality is structural.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Trit;
use crate::error::{Error, Result};

pub(crate) fn mod3(x: &BigInt) -> u8 {
    let r = (x % 3i32).to_i8().expect("remainder fits");
    r.rem_euclid(3) as u8
}

/// An Eisenstein integer `a + b w`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ZOmega {
    pub a: BigInt,
    pub b: BigInt,
}

impl ZOmega {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        Self {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    pub fn omega() -> Self {
        Self::new(0, 1)
    }

    /// chi = 1 - w, the prime above 3.
    pub fn chi() -> Self {
        Self::new(1, -1)
    }

    /// `w^p` for any integer `p`.
    pub fn omega_pow(p: i64) -> Self {
        match p.rem_euclid(3) {
            0 => Self::one(),
            1 => Self::omega(),
            _ => Self::new(-1, -1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            a: -&self.a,
            b: -&self.b,
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let bb = &self.b * &rhs.b;
        Self {
            a: &self.a * &rhs.a - &bb,
            b: &self.a * &rhs.b + &self.b * &rhs.a - bb,
        }
    }

    /// Complex conjugate; conj(w) = w^2 = -1 - w.
    pub fn conj(&self) -> Self {
        Self {
            a: &self.a - &self.b,
            b: -&self.b,
        }
    }

    /// |x|^2 = a^2 - ab + b^2, always a non-negative integer.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    /// The reduction map `g(w) -> g(1) mod 3`.
    pub fn pmap(&self) -> Trit {
        Trit::new(mod3(&(&self.a + &self.b)))
    }

    /// The formal derivative evaluated at 1, mod 3.
    pub fn pderiv(&self) -> Trit {
        Trit::new(mod3(&self.b))
    }

    pub fn mul_chi(&self) -> Self {
        Self {
            a: &self.a + &self.b,
            b: BigInt::from(2) * &self.b - &self.a,
        }
    }

    /// Exact division by chi. Fails unless `pmap(self) == 0`.
    pub fn div_chi(&self) -> Result<Self> {
        if !self.pmap().is_zero() {
            return Err(Error::NotDivisible);
        }
        Ok(Self {
            a: (BigInt::from(2) * &self.a - &self.b) / 3,
            b: (&self.a + &self.b) / 3,
        })
    }

    pub fn mul_chi_pow(&self, k: u32) -> Self {
        (0..k).fold(self.clone(), |acc, _| acc.mul_chi())
    }

    /// Returns `(sign, p)` when `self == sign * w^p`.
    pub fn as_unit(&self) -> Option<(i8, u8)> {
        let units = [
            (1i8, 0u8, Self::one()),
            (1, 1, Self::omega()),
            (1, 2, Self::omega_pow(2)),
        ];
        for (s, p, u) in units {
            if *self == u {
                return Some((s, p));
            }
            if *self == u.neg() {
                return Some((-s, p));
            }
        }
        None
    }
}

impl From<i64> for ZOmega {
    fn from(v: i64) -> Self {
        Self::new(v, 0)
    }
}

impl fmt::Debug for ZOmega {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ZOmega {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}w", self.b),
            (false, false) => {
                let sign = if self.b.is_negative() { "-" } else { "+" };
                write!(f, "{} {} {}w", self.a, sign, self.b.abs())
            }
        }
    }
}

/// An element `num / chi^k` of Z[1/3, w], always in reduced form:
/// either `k == 0` or `num` is not divisible by chi.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LocalOmega {
    num: ZOmega,
    k: u32,
}

impl LocalOmega {
    pub fn new(mut num: ZOmega, mut k: u32) -> Self {
        if num.is_zero() {
            return Self::default();
        }
        while k > 0 && num.pmap().is_zero() {
            num = num.div_chi().expect("pmap is zero");
            k -= 1;
        }
        Self { num, k }
    }

    pub fn integral(num: ZOmega) -> Self {
        Self { num, k: 0 }
    }

    pub fn from_int(v: i64) -> Self {
        Self::integral(ZOmega::from(v))
    }

    pub fn omega_pow(p: i64) -> Self {
        Self::integral(ZOmega::omega_pow(p))
    }

    /// `num / 3^k` rewritten with chi denominators via 3 = -w^2 chi^2.
    pub fn over_three_pow(num: ZOmega, k: u32) -> Self {
        // 1/3^k = (-1)^k w^k / chi^(2k)
        let mut n = num.mul(&ZOmega::omega_pow(i64::from(k)));
        if k % 2 == 1 {
            n = n.neg();
        }
        Self::new(n, 2 * k)
    }

    /// 1/sqrt(-3) = w^2 / chi.
    pub fn inv_sqrt_minus3() -> Self {
        Self::new(ZOmega::omega_pow(2), 1)
    }

    pub fn num(&self) -> &ZOmega {
        &self.num
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Smallest f with chi^f x in Z[w]; this is `k` because of reduced form.
    pub fn sde(&self) -> u32 {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.k == 0 && self.num.is_one()
    }

    /// chi^f * self, which must be integral for `f >= sde`.
    pub fn scaled_numerator(&self, f: u32) -> Option<ZOmega> {
        (f >= self.k).then(|| self.num.mul_chi_pow(f - self.k))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let k = self.k.max(rhs.k);
        let lhs_num = self.num.mul_chi_pow(k - self.k);
        let rhs_num = rhs.num.mul_chi_pow(k - rhs.k);
        Self::new(lhs_num.add(&rhs_num), k)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            num: self.num.neg(),
            k: self.k,
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::default();
        }
        Self::new(self.num.mul(&rhs.num), self.k + rhs.k)
    }

    /// conj(chi) = -w^2 chi, so conj(num / chi^k) = conj(num) (-w)^k / chi^k.
    pub fn conj(&self) -> Self {
        let mut n = self.num.conj().mul(&ZOmega::omega_pow(i64::from(self.k)));
        if self.k % 2 == 1 {
            n = n.neg();
        }
        Self::new(n, self.k)
    }

    /// Returns `(sign, p)` when `self == sign * w^p`.
    pub fn as_unit(&self) -> Option<(i8, u8)> {
        if self.k != 0 {
            return None;
        }
        self.num.as_unit()
    }
}

impl From<ZOmega> for LocalOmega {
    fn from(num: ZOmega) -> Self {
        Self::integral(num)
    }
}

impl fmt::Debug for LocalOmega {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for LocalOmega {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/chi^{}", self.num, self.k)
        }
    }
}
