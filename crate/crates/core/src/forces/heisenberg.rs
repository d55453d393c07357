use crate::algebra::{dirac_matrix, Matrix4, MatrixKind, Scalar};
use crate::error::{Error, Result};

/// `−cα·P − βmc² + ε` with constant `P` and `ε`.
pub fn plane_wave_hamiltonian<T: Scalar>(p: &[T; 3], eps: &T, c: &T, mc2: &T) -> Matrix4<T> {
    let mut h = Matrix4::<T>::scalar(eps.clone());
    for (i, pi) in p.iter().enumerate() {
        let a = dirac_matrix::<T>(MatrixKind::alpha(i as u8 + 1).expect("spatial index")).expect("valid kind");
        h = &h - &a.scale(&c.mul_ref(pi));
    }
    let b = dirac_matrix::<T>(MatrixKind::Beta).expect("valid kind");
    &h - &b.scale(mc2)
}

/// `(1/iħ)(OH − HO)`.
pub fn heisenberg_rate<T: Scalar>(o: &Matrix4<T>, h: &Matrix4<T>, hbar: &T) -> Result<Matrix4<T>> {
    let ih = T::imag_unit().mul_ref(hbar);
    let inv = ih.recip().ok_or_else(|| Error::input("ħ must be nonzero"))?;
    Ok((&(o * h) - &(h * o)).scale(&inv))
}
