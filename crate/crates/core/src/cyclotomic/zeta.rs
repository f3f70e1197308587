//! Z[z] and Z[1/3, z] for z = e^{2 pi i / 9}, in the power basis
//! 1, z, ..., z^5 reduced by z^6 = -1 - z^3.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::omega::{mod3, LocalOmega, ZOmega};

const DEG: usize = 6;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ZZeta {
    c: [BigInt; DEG],
}

/// Folds coefficients of z^6 and above back into degree < 6.
fn reduce(mut coeffs: Vec<BigInt>) -> [BigInt; DEG] {
    for i in (DEG..coeffs.len()).rev() {
        let top = std::mem::take(&mut coeffs[i]);
        if top.is_zero() {
            continue;
        }
        coeffs[i - 6] -= &top;
        coeffs[i - 3] -= &top;
    }
    coeffs.truncate(DEG);
    coeffs.resize(DEG, BigInt::zero());
    coeffs.try_into().expect("length is DEG")
}

impl ZZeta {
    pub fn new(c: [BigInt; DEG]) -> Self {
        Self { c }
    }

    pub fn from_i64s(c: [i64; DEG]) -> Self {
        Self {
            c: c.map(BigInt::from),
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_i64s([1, 0, 0, 0, 0, 0])
    }

    /// `z^p` for any integer `p`.
    pub fn zeta_pow(p: i64) -> Self {
        let mut v = vec![BigInt::zero(); 9];
        v[p.rem_euclid(9) as usize] = BigInt::one();
        Self { c: reduce(v) }
    }

    /// The embedding of Z[w] via w -> z^3.
    pub fn from_omega(x: &ZOmega) -> Self {
        let mut c: [BigInt; DEG] = Default::default();
        c[0] = x.a.clone();
        c[3] = x.b.clone();
        Self { c }
    }

    pub fn coeffs(&self) -> &[BigInt; DEG] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self {
            c: std::array::from_fn(|i| &self.c[i] + &rhs.c[i]),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self {
            c: std::array::from_fn(|i| &self.c[i] - &rhs.c[i]),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            c: std::array::from_fn(|i| -&self.c[i]),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = vec![BigInt::zero(); 2 * DEG - 1];
        for (i, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.c.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        Self { c: reduce(out) }
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        Self {
            c: std::array::from_fn(|i| &self.c[i] * s),
        }
    }

    /// conj(z^i) = z^(9 - i).
    pub fn conj(&self) -> Self {
        let mut v = vec![BigInt::zero(); 9];
        for (i, x) in self.c.iter().enumerate() {
            v[(9 - i) % 9] += x;
        }
        Self { c: reduce(v) }
    }

    fn divisible_by_three(&self) -> bool {
        self.c.iter().all(|x| mod3(x) == 0)
    }

    fn div_three(&self) -> Self {
        Self {
            c: std::array::from_fn(|i| &self.c[i] / 3),
        }
    }
}

impl fmt::Debug for ZZeta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ZZeta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .c
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| match i {
                0 => x.to_string(),
                1 => format!("{x}z"),
                _ => format!("{x}z^{i}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// An element `num / 3^k` of Z[1/3, z], reduced so that `k == 0` or
/// `num` is not in 3 Z[z].
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LocalZeta {
    num: ZZeta,
    k: u32,
}

impl LocalZeta {
    pub fn new(mut num: ZZeta, mut k: u32) -> Self {
        if num.is_zero() {
            return Self::default();
        }
        while k > 0 && num.divisible_by_three() {
            num = num.div_three();
            k -= 1;
        }
        Self { num, k }
    }

    pub fn integral(num: ZZeta) -> Self {
        Self { num, k: 0 }
    }

    pub fn from_int(v: i64) -> Self {
        Self::integral(ZZeta::from_i64s([v, 0, 0, 0, 0, 0]))
    }

    pub fn zeta_pow(p: i64) -> Self {
        Self::integral(ZZeta::zeta_pow(p))
    }

    /// Embeds `num / chi^k` using 1/chi = conj(chi)/3.
    pub fn from_local_omega(x: &LocalOmega) -> Self {
        let chi_bar = ZOmega::chi().conj();
        let num = (0..x.k()).fold(x.num().clone(), |acc, _| acc.mul(&chi_bar));
        Self::new(ZZeta::from_omega(&num), x.k())
    }

    pub fn num(&self) -> &ZZeta {
        &self.num
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.k == 0 && self.num.is_one()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let k = self.k.max(rhs.k);
        let three = BigInt::from(3);
        let lhs = self.num.scale(&num_traits::pow(three.clone(), (k - self.k) as usize));
        let rhs_num = rhs.num.scale(&num_traits::pow(three, (k - rhs.k) as usize));
        Self::new(lhs.add(&rhs_num), k)
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

    pub fn conj(&self) -> Self {
        Self {
            num: self.num.conj(),
            k: self.k,
        }
    }

    /// Splits `x = a0 + a1 z + a2 z^2` with each `a_j` in Z[1/3, w].
    pub fn decompose(&self) -> [LocalOmega; 3] {
        let c = self.num.coeffs();
        std::array::from_fn(|r| {
            LocalOmega::over_three_pow(ZOmega::new(c[r].clone(), c[r + 3].clone()), self.k)
        })
    }

    /// Inverse of [`LocalZeta::decompose`].
    pub fn recompose(parts: &[LocalOmega; 3]) -> Self {
        parts
            .iter()
            .enumerate()
            .fold(Self::default(), |acc, (j, a)| {
                acc.add(&Self::from_local_omega(a).mul(&Self::zeta_pow(j as i64)))
            })
    }

    /// Some(x) when `self` already lies in Z[1/3, w].
    pub fn to_local_omega(&self) -> Option<LocalOmega> {
        let [a0, a1, a2] = self.decompose();
        (a1.is_zero() && a2.is_zero()).then_some(a0)
    }
}

impl From<ZZeta> for LocalZeta {
    fn from(num: ZZeta) -> Self {
        Self::integral(num)
    }
}

impl fmt::Debug for LocalZeta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for LocalZeta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/3^{}", self.num, self.k)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_cubed_is_omega() {
        assert_eq!(
            ZZeta::zeta_pow(3),
            ZZeta::from_omega(&ZOmega::omega())
        );
        assert_eq!(ZZeta::zeta_pow(9), ZZeta::one());
    }

    #[test]
    fn zeta_inverse() {
        assert_eq!(ZZeta::zeta_pow(8).mul(&ZZeta::zeta_pow(1)), ZZeta::one());
        assert_eq!(ZZeta::zeta_pow(2).conj(), ZZeta::zeta_pow(7));
    }

    #[test]
    fn decompose_examples() {
        let [a0, a1, a2] = LocalZeta::zeta_pow(8).decompose();
        assert!(a0.is_zero() && a1.is_zero());
        assert_eq!(a2, LocalOmega::omega_pow(2));

        let w = LocalZeta::from_local_omega(&LocalOmega::omega_pow(1));
        assert_eq!(w.decompose(), [LocalOmega::omega_pow(1), LocalOmega::default(), LocalOmega::default()]);

        let [b0, b1, b2] = LocalZeta::zeta_pow(1).decompose();
        assert!(b0.is_zero() && b2.is_zero() && b1.is_one());
    }

    #[test]
    fn local_omega_embedding_of_third() {
        let third = LocalOmega::over_three_pow(ZOmega::one(), 1);
        let z = LocalZeta::from_local_omega(&third);
        assert_eq!(z, LocalZeta::new(ZZeta::one(), 1));
        assert_eq!(z.to_local_omega(), Some(third));
    }

    #[test]
    fn reduced_form() {
        let x = LocalZeta::new(ZZeta::from_i64s([9, 3, 0, 0, 0, 6]), 2);
        assert_eq!(x.k(), 1);
        assert_eq!(x.num(), &ZZeta::from_i64s([3, 1, 0, 0, 0, 2]));
    }
}
