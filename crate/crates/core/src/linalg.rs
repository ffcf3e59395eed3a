//! Small fixed-size complex matrix helpers shared by the state, channel and
//! oracle modules.

use nalgebra::{Complex, Matrix2, Matrix4};

use crate::error::{Error, Result};

pub type C64 = Complex<f64>;
pub type Mat2 = Matrix2<C64>;
pub type Mat4 = Matrix4<C64>;

pub(crate) fn c(re: f64, im: f64) -> C64 {
    Complex::new(re, im)
}

pub fn identity2() -> Mat2 {
    Mat2::identity()
}

/// Pauli matrix `σ_k` for `k` in 1..=3; `k = 0` gives the identity.
pub fn pauli(k: usize) -> Mat2 {
    let (o, z, i) = (c(1.0, 0.0), c(0.0, 0.0), c(0.0, 1.0));
    match k {
        0 => Mat2::new(o, z, z, o),
        1 => Mat2::new(z, o, o, z),
        2 => Mat2::new(z, -i, i, z),
        3 => Mat2::new(o, z, z, -o),
        _ => panic!("no Pauli matrix with index {k}"),
    }
}

pub fn kron(a: &Mat2, b: &Mat2) -> Mat4 {
    Mat4::from_fn(|row, col| a[(row / 2, col / 2)] * b[(row % 2, col % 2)])
}

/// `σ_k ⊗ σ_k`.
pub fn pauli_pair(k: usize) -> Mat4 {
    let s = pauli(k);
    kron(&s, &s)
}

/// Eigenvalues of a Hermitian 4×4 matrix in ascending order.
pub fn hermitian_eigenvalues(m: &Mat4) -> Result<[f64; 4]> {
    let ev = m.symmetric_eigenvalues();
    let mut out = [ev[0], ev[1], ev[2], ev[3]];
    if out.iter().any(|x| !x.is_finite()) {
        return Err(Error::NumericalFailure("Hermitian eigensolve produced non-finite values"));
    }
    out.sort_by(f64::total_cmp);
    Ok(out)
}

/// Largest entrywise deviation from Hermiticity.
pub fn hermiticity_defect(m: &Mat4) -> f64 {
    (m - m.adjoint()).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Partial transpose on the second qubit.
pub fn partial_transpose(m: &Mat4) -> Mat4 {
    Mat4::from_fn(|row, col| {
        let (a, b) = (row / 2, row % 2);
        let (ap, bp) = (col / 2, col % 2);
        m[(2 * a + bp, 2 * ap + b)]
    })
}

/// Squared Frobenius (Schatten-2) norm.
pub fn frobenius_sq(m: &Mat4) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pauli_algebra() {
        for k in 1..=3 {
            let s = pauli(k);
            assert!((s * s - identity2()).norm() < 1e-15);
        }
        // σ1 σ2 = i σ3
        assert!((pauli(1) * pauli(2) - pauli(3) * c(0.0, 1.0)).norm() < 1e-15);
    }

    #[test]
    fn kron_layout_matches_basis_order() {
        // |0><1| ⊗ |1><0| maps |10> to |01>: entry (01, 10) = (1, 2)
        let mut a = Mat2::zeros();
        a[(0, 1)] = c(1.0, 0.0);
        let mut b = Mat2::zeros();
        b[(1, 0)] = c(1.0, 0.0);
        let k = kron(&a, &b);
        assert_eq!(k[(1, 2)], c(1.0, 0.0));
        assert_eq!(k.iter().filter(|z| z.norm() > 0.0).count(), 1);
    }

    #[test]
    fn partial_transpose_is_involution() {
        let m = Mat4::from_fn(|r, col| c((r * 4 + col) as f64, (r as f64) - (col as f64)));
        assert_eq!(partial_transpose(&partial_transpose(&m)), m);
        assert_eq!(partial_transpose(&pauli_pair(1)), pauli_pair(1));
        assert_eq!(partial_transpose(&pauli_pair(2)), -pauli_pair(2));
    }
}
