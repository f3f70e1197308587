#![allow(dead_code)]

use num_complex::Complex64;
use num_traits::ToPrimitive;
use proptest::prelude::*;
use qutrit_synth::cyclotomic::{LocalOmega, LocalZeta, ZOmega, ZZeta};
use qutrit_synth::linalg::Matrix;

pub fn omega_c() -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0)
}

pub fn zeta_c() -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 9.0)
}

/// Floating-point value of `(a + b w) / (1 - w)^k`.
pub fn eval_omega(x: &LocalOmega) -> Complex64 {
    let w = omega_c();
    let a = x.num().a.to_f64().unwrap();
    let b = x.num().b.to_f64().unwrap();
    (Complex64::new(a, 0.0) + w * b) / (Complex64::new(1.0, 0.0) - w).powu(x.k())
}

/// Floating-point value of `(sum c_i z^i) / 3^k`.
pub fn eval_zeta(x: &LocalZeta) -> Complex64 {
    let z = zeta_c();
    let s: Complex64 = x
        .num()
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| z.powu(i as u32) * c.to_f64().unwrap())
        .sum();
    s / 3f64.powi(x.k() as i32)
}

pub fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * (1.0 + b.norm())
}

pub fn zomega() -> impl Strategy<Value = ZOmega> {
    (-50i64..50, -50i64..50).prop_map(|(a, b)| ZOmega::new(a, b))
}

pub fn local_omega() -> impl Strategy<Value = LocalOmega> {
    (zomega(), 0u32..6).prop_map(|(x, k)| LocalOmega::new(x, k))
}

pub fn zzeta() -> impl Strategy<Value = ZZeta> {
    proptest::array::uniform6(-30i64..30).prop_map(ZZeta::from_i64s)
}

pub fn local_zeta() -> impl Strategy<Value = LocalZeta> {
    (zzeta(), 0u32..4).prop_map(|(x, k)| LocalZeta::new(x, k))
}

pub fn omega_matrix(n: usize) -> impl Strategy<Value = Matrix<LocalOmega>> {
    proptest::collection::vec(local_omega(), n * n).prop_map(move |v| {
        Matrix::from_rows(v.chunks(n).map(<[LocalOmega]>::to_vec).collect()).unwrap()
    })
}
