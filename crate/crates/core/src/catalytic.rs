//! Catalytic embedding of unitaries over Z[1/3, z] into unitaries over
//! Z[1/3, w] on one extra qutrit.
//!
//! Write `U = A_0 + z A_1 + z^2 A_2` with `A_j` over Z[1/3, w]; then
//! `Phi(U) = sum A_j (x) L^j`, where `L` is the companion matrix of
//! `x^3 - w`. The catalyst `(z^2, z, 1)` is an eigenvector of `L` with
//! eigenvalue `z`, so `Phi(U) (u (x) l) = (U u) (x) l`. The catalyst is the
//! least significant (last) wire.

use crate::cyclotomic::{zeta_decompose, LocalOmega, LocalZeta, Scalar};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, OmegaMatrix, ZetaMatrix};

/// Companion matrix of `x^d - root`: ones below the diagonal and `root` in
/// the top right corner.
pub fn companion<R: Scalar>(d: usize, root: R) -> Matrix<R> {
    let mut m = Matrix::zeros(d, d);
    for i in 1..d {
        m.set(i, i - 1, R::one());
    }
    m.set(0, d - 1, root);
    m
}

/// `[[0,0,w],[1,0,0],[0,1,0]]`.
pub fn companion_lambda() -> OmegaMatrix {
    companion(3, LocalOmega::omega_pow(1))
}

/// The column `(z^2, z, 1)`.
pub fn catalyst() -> ZetaMatrix {
    Matrix::from_rows(vec![
        vec![LocalZeta::zeta_pow(2)],
        vec![LocalZeta::zeta_pow(1)],
        vec![LocalZeta::one()],
    ])
    .expect("3x1")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingResult {
    pub phi: OmegaMatrix,
    pub catalyst: ZetaMatrix,
}

/// `Phi` without the unitarity check.
pub fn phi(u: &ZetaMatrix) -> OmegaMatrix {
    let m = u.rows();
    let n = u.cols();
    let mut parts = [Matrix::zeros(m, n), Matrix::zeros(m, n), Matrix::zeros(m, n)];
    for r in 0..m {
        for c in 0..n {
            for (a, x) in parts.iter_mut().zip(zeta_decompose(u.get(r, c))) {
                a.set(r, c, x);
            }
        }
    }
    let lambda = companion_lambda();
    let lambda2 = lambda.mul(&lambda).expect("square");
    let mut out = parts[0].kron(&Matrix::identity(3));
    for (a, l) in parts[1..].iter().zip([&lambda, &lambda2]) {
        out = out.add(&a.kron(l)).expect("same shape");
    }
    out
}

pub fn embed(u: &ZetaMatrix) -> Result<EmbeddingResult> {
    if !u.is_square() || !u.is_unitary() {
        return Err(Error::NotUnitary);
    }
    Ok(EmbeddingResult {
        phi: phi(u),
        catalyst: catalyst(),
    })
}

/// Exact check of `Phi(U) (e_j (x) l) = (U e_j) (x) l` for every `j`.
pub fn check_catalyst(u: &ZetaMatrix, phi_u: &OmegaMatrix) -> bool {
    let m = u.rows();
    if phi_u.rows() != 3 * m || phi_u.cols() != 3 * m {
        return false;
    }
    let lam = catalyst();
    let lhs = phi_u.to_zeta().mul(&Matrix::identity(m).kron(&lam));
    let rhs = u.kron(&lam);
    lhs.is_ok_and(|l| l == rhs)
}

/// `Phi(UV) = Phi(U) Phi(V)`, exactly.
pub fn check_homomorphism(u: &ZetaMatrix, v: &ZetaMatrix) -> Result<bool> {
    if u.cols() != v.rows() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} times {}x{}",
            u.rows(),
            u.cols(),
            v.rows(),
            v.cols()
        )));
    }
    Ok(phi(&u.mul(v)?) == phi(u).mul(&phi(v))?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::GateWord;

    fn o(p: i64) -> LocalOmega {
        LocalOmega::omega_pow(p)
    }

    fn word(s: &str) -> ZetaMatrix {
        s.parse::<GateWord>().unwrap().to_matrix().unwrap()
    }

    #[test]
    fn lambda_cubed_is_omega() {
        let l = companion_lambda();
        let l3 = l.mul(&l).unwrap().mul(&l).unwrap();
        assert_eq!(l3, Matrix::identity(3).scale(&o(1)));
        assert!(l.is_unitary());
    }

    #[test]
    fn catalyst_is_eigenvector() {
        let l = companion_lambda().to_zeta();
        let lam = catalyst();
        assert_eq!(l.mul(&lam).unwrap(), lam.scale(&LocalZeta::zeta_pow(1)));
    }

    #[test]
    fn generic_companion_d3_root1() {
        let c: OmegaMatrix = companion(3, LocalOmega::one());
        let v = Matrix::from_rows(vec![vec![o(2)], vec![o(1)], vec![o(0)]]).unwrap();
        assert_eq!(c.mul(&v).unwrap(), v.scale(&o(1)));
    }

    #[test]
    fn embed_examples() {
        assert!(embed(&Matrix::identity(3)).unwrap().phi.is_identity());
        let w = Matrix::identity(3).scale(&LocalZeta::zeta_pow(3));
        assert_eq!(embed(&w).unwrap().phi, Matrix::identity(9).scale(&o(1)));

        let t = word("T");
        let phi_t = embed(&t).unwrap().phi;
        let l = companion_lambda();
        let z = LocalOmega::zero();
        let last = Matrix::from_rows(vec![
            vec![z.clone(), o(0), z.clone()],
            vec![z.clone(), z.clone(), o(0)],
            vec![o(2), z.clone(), z],
        ])
        .unwrap();
        let mut expected = Matrix::zeros(9, 9);
        for (b, block) in [Matrix::identity(3), l, last].iter().enumerate() {
            for r in 0..3 {
                for c in 0..3 {
                    expected.set(3 * b + r, 3 * b + c, block.get(r, c).clone());
                }
            }
        }
        assert_eq!(phi_t, expected);
        assert!(phi_t.is_unitary());
    }

    #[test]
    fn catalyst_property() {
        let t = word("T");
        assert!(check_catalyst(&t, &embed(&t).unwrap().phi));
        assert!(check_catalyst(&Matrix::identity(3), &Matrix::identity(9)));
        assert!(!check_catalyst(&t, &Matrix::identity(9)));
    }

    #[test]
    fn homomorphism() {
        let t = word("T");
        assert!(check_homomorphism(&t, &t).unwrap());
        let u = word("H.T.S.T^4.H");
        assert!(phi(&u).mul(&phi(&u.dagger())).unwrap().is_identity());
        assert!(check_homomorphism(&u, &word("T^2.X.H")).unwrap());
        assert!(matches!(
            check_homomorphism(&t, &Matrix::identity(2)),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn non_unitary_rejected() {
        let m = Matrix::identity(3).scale(&LocalZeta::from_int(2));
        assert_eq!(embed(&m).unwrap_err(), Error::NotUnitary);
    }
}
