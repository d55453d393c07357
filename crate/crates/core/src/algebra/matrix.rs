use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

use num_complex::Complex64;

use super::scalar::Scalar;

/// 2×2 matrix, used for the Pauli blocks.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix2<T> {
    pub entries: [[T; 2]; 2],
}

impl<T: Scalar> Matrix2<T> {
    pub fn new(entries: [[T; 2]; 2]) -> Self {
        Self { entries }
    }

    pub fn identity() -> Self {
        Self::new([[T::one(), T::zero()], [T::zero(), T::one()]])
    }

    pub fn zero() -> Self {
        Self::new([[T::zero(), T::zero()], [T::zero(), T::zero()]])
    }

    pub fn scale(&self, s: &T) -> Self {
        Self { entries: self.entries.clone().map(|row| row.map(|x| x.mul_ref(s))) }
    }
}

impl<T: Scalar> Mul for &Matrix2<T> {
    type Output = Matrix2<T>;
    fn mul(self, o: &Matrix2<T>) -> Matrix2<T> {
        let e = |r: usize, c: usize| {
            self.entries[r][0].mul_ref(&o.entries[0][c]) + self.entries[r][1].mul_ref(&o.entries[1][c])
        };
        Matrix2::new([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }
}

pub type Vec4<T> = [T; 4];

/// 4×4 matrix stored row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix4<T> {
    pub entries: [[T; 4]; 4],
}

impl<T: Scalar> Matrix4<T> {
    pub fn new(entries: [[T; 4]; 4]) -> Self {
        Self { entries }
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> T) -> Self {
        Self { entries: std::array::from_fn(|r| std::array::from_fn(|c| f(r, c))) }
    }

    pub fn zero() -> Self {
        Self::from_fn(|_, _| T::zero())
    }

    pub fn identity() -> Self {
        Self::from_fn(|r, c| if r == c { T::one() } else { T::zero() })
    }

    pub fn scalar(s: T) -> Self {
        Self::identity().scale(&s)
    }

    pub fn diag(d: [T; 4]) -> Self {
        Self::from_fn(|r, c| if r == c { d[r].clone() } else { T::zero() })
    }

    /// `[[a, b], [c, d]]` in 2×2 blocks.
    pub fn from_blocks(a: &Matrix2<T>, b: &Matrix2<T>, c: &Matrix2<T>, d: &Matrix2<T>) -> Self {
        Self::from_fn(|r, col| {
            let blk = match (r < 2, col < 2) {
                (true, true) => a,
                (true, false) => b,
                (false, true) => c,
                (false, false) => d,
            };
            blk.entries[r % 2][col % 2].clone()
        })
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(|r, c| self.entries[c][r].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|r, c| self.entries[c][r].clone())
    }

    pub fn scale(&self, s: &T) -> Self {
        Self::from_fn(|r, c| self.entries[r][c].mul_ref(s))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(T::is_zero)
    }

    /// Elementwise [`Scalar::matches`].
    pub fn matches(&self, expected: &Self) -> bool {
        self.entries
            .iter()
            .flatten()
            .zip(expected.entries.iter().flatten())
            .all(|(a, b)| a.matches(b))
    }

    pub fn is_hermitian(&self) -> bool {
        self.matches(&self.adjoint())
    }

    pub fn is_anti_hermitian(&self) -> bool {
        self.matches(&-&self.adjoint())
    }

    pub fn is_unitary(&self) -> bool {
        let id = Self::identity();
        (self * &self.adjoint()).matches(&id) && (&self.adjoint() * self).matches(&id)
    }

    pub fn mul_vec(&self, v: &Vec4<T>) -> Vec4<T> {
        std::array::from_fn(|r| {
            (0..4).filter(|&c| !self.entries[r][c].is_zero()).fold(T::zero(), |acc, c| acc + self.entries[r][c].mul_ref(&v[c]))
        })
    }

    /// `row · M` for a row vector.
    pub fn row_mul(&self, row: &Vec4<T>) -> Vec4<T> {
        std::array::from_fn(|c| {
            (0..4).fold(T::zero(), |acc, r| acc + row[r].mul_ref(&self.entries[r][c]))
        })
    }

    /// `row · M · col`.
    pub fn sandwich(&self, row: &Vec4<T>, col: &Vec4<T>) -> T {
        dot(row, &self.mul_vec(col))
    }

    pub fn to_c64(&self) -> Matrix4<Complex64> {
        Matrix4::from_fn(|r, c| self.entries[r][c].to_c64())
    }
}

/// Bilinear (non-conjugating) product of a row and a column.
pub fn dot<T: Scalar>(row: &Vec4<T>, col: &Vec4<T>) -> T {
    row.iter().zip(col).fold(T::zero(), |acc, (a, b)| acc + a.mul_ref(b))
}

impl<T> Index<(usize, usize)> for Matrix4<T> {
    type Output = T;
    fn index(&self, (r, c): (usize, usize)) -> &T {
        &self.entries[r][c]
    }
}

impl<T: Scalar> Mul for &Matrix4<T> {
    type Output = Matrix4<T>;
    fn mul(self, o: &Matrix4<T>) -> Matrix4<T> {
        Matrix4::from_fn(|r, c| {
            (0..4).fold(T::zero(), |acc, k| acc + self.entries[r][k].mul_ref(&o.entries[k][c]))
        })
    }
}

impl<T: Scalar> Add for &Matrix4<T> {
    type Output = Matrix4<T>;
    fn add(self, o: &Matrix4<T>) -> Matrix4<T> {
        Matrix4::from_fn(|r, c| self.entries[r][c].add_ref(&o.entries[r][c]))
    }
}

impl<T: Scalar> Sub for &Matrix4<T> {
    type Output = Matrix4<T>;
    fn sub(self, o: &Matrix4<T>) -> Matrix4<T> {
        Matrix4::from_fn(|r, c| self.entries[r][c].sub_ref(&o.entries[r][c]))
    }
}

impl<T: Scalar> Neg for &Matrix4<T> {
    type Output = Matrix4<T>;
    fn neg(self) -> Matrix4<T> {
        Matrix4::from_fn(|r, c| -self.entries[r][c].clone())
    }
}

impl<T: Scalar> fmt::Display for Matrix4<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.entries.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            write!(f, "[{}]", cells.join(", "))?;
            if i < 3 {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}
