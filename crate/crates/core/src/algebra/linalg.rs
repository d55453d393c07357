//! Row reduction over a [`Scalar`] field.
//!
//! Exact scalars pivot on any nonzero entry; floats pivot on the largest
//! magnitude and treat entries within [`Scalar::is_zero`] as zero.

use super::matrix::{Matrix4, Vec4};
use super::scalar::Scalar;

/// Reduced row echelon form and the pivot columns.
fn rref<T: Scalar>(m: &Matrix4<T>) -> (Matrix4<T>, Vec<usize>) {
    let mut a = m.entries.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..4 {
        if row == 4 {
            break;
        }
        let candidate = (row..4)
            .filter(|&r| !a[r][col].is_zero())
            .max_by(|&x, &y| a[x][col].magnitude().total_cmp(&a[y][col].magnitude()));
        let Some(p) = candidate else { continue };
        a.swap(row, p);
        let inv = a[row][col].recip().expect("pivot is nonzero");
        a[row] = a[row].clone().map(|x| x.mul_ref(&inv));
        for r in 0..4 {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let pivot_row = a[row].clone();
                for (x, p) in a[r].iter_mut().zip(&pivot_row) {
                    *x = x.sub_ref(&f.mul_ref(p));
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    (Matrix4::new(a), pivots)
}

pub fn rank<T: Scalar>(m: &Matrix4<T>) -> usize {
    rref(m).1.len()
}

/// A basis of `{v : M v = 0}`, one vector per free column.
pub fn null_space<T: Scalar>(m: &Matrix4<T>) -> Vec<Vec4<T>> {
    let (r, pivots) = rref(m);
    (0..4)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v: Vec4<T> = std::array::from_fn(|_| T::zero());
            v[free] = T::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.entries[i][free].clone();
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::ExactComplex;
    use num_complex::Complex64;

    fn c(n: i64) -> ExactComplex {
        ExactComplex::from_i64(n)
    }

    #[test]
    fn identity_has_full_rank() {
        assert_eq!(rank(&Matrix4::<ExactComplex>::identity()), 4);
        assert!(null_space(&Matrix4::<ExactComplex>::identity()).is_empty());
    }

    #[test]
    fn null_vectors_are_annihilated() {
        let m = Matrix4::new([
            [c(1), c(2), c(0), c(1)],
            [c(2), c(4), c(0), c(2)],
            [c(0), c(0), c(1), c(3)],
            [c(1), c(2), c(1), c(4)],
        ]);
        let ns = null_space(&m);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(m.mul_vec(v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn float_rank_ignores_roundoff() {
        let eps = Complex64::new(1e-15, 0.0);
        let one = Complex64::new(1.0, 0.0);
        let z = Complex64::new(0.0, 0.0);
        let m = Matrix4::new([[one, one, z, z], [one, one + eps, z, z], [z, z, z, z], [z, z, z, one]]);
        assert_eq!(rank(&m), 2);
    }
}
