//! The Dirac matrix set in the standard (α, β) representation and the
//! sixteen-element enumeration built from it.
//!
//! Indices follow the α-set convention: `α₀ = 1`, `α₁..α₃` the off-diagonal
//! Pauli blocks, `α₄ ≡ β`. Derived members are always computed from their
//! defining products, never tabulated.

use std::fmt;

use super::matrix::{Matrix2, Matrix4};
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Pauli matrix `σ_index`, with `σ₀` the identity.
pub fn pauli<T: Scalar>(index: usize) -> Result<Matrix2<T>> {
    let (o, z, i) = (T::one(), T::zero(), T::imag_unit());
    Ok(match index {
        0 => Matrix2::identity(),
        1 => Matrix2::new([[z.clone(), o.clone()], [o, z]]),
        2 => Matrix2::new([[z.clone(), -i.clone()], [i, z]]),
        3 => Matrix2::new([[o.clone(), z.clone()], [z, -o]]),
        _ => return Err(Error::input(format!("Pauli index {index} outside 0..=3"))),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MatrixKind {
    Alpha0,
    Alpha1,
    Alpha2,
    Alpha3,
    /// `α₄`.
    Beta,
    /// `α₁α₂α₃α₄`.
    Alpha5,
    /// `α₅α_μ`, μ ∈ 0..=4.
    Pseudovector(u8),
    /// `iα_ν β α_μ` for μ ≠ ν, zero on the diagonal; μ, ν ∈ 0..=3.
    Tensor(u8, u8),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CovariantClass {
    Scalar,
    Vector,
    Pseudoscalar,
    Pseudovector,
    Tensor,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Hermiticity {
    Hermitian,
    AntiHermitian,
    Neither,
}

impl MatrixKind {
    /// `α_μ` for μ ∈ 0..=4.
    pub fn alpha(mu: u8) -> Result<Self> {
        Ok(match mu {
            0 => Self::Alpha0,
            1 => Self::Alpha1,
            2 => Self::Alpha2,
            3 => Self::Alpha3,
            4 => Self::Beta,
            _ => return Err(Error::input(format!("α index {mu} outside 0..=4"))),
        })
    }

    pub fn validate(self) -> Result<Self> {
        match self {
            Self::Pseudovector(mu) if mu > 4 => {
                Err(Error::input(format!("pseudovector index {mu} outside 0..=4")))
            }
            // Pairs that involve β are symmetric under exchange, so the
            // antisymmetric tensor is only built on 0..=3.
            Self::Tensor(mu, nu) if mu > 3 || nu > 3 => Err(Error::input(format!(
                "tensor indices ({mu},{nu}) outside 0..=3"
            ))),
            k => Ok(k),
        }
    }

    pub fn class(self) -> CovariantClass {
        match self {
            Self::Beta => CovariantClass::Scalar,
            Self::Alpha0 | Self::Alpha1 | Self::Alpha2 | Self::Alpha3 => CovariantClass::Vector,
            Self::Alpha5 => CovariantClass::Pseudoscalar,
            Self::Pseudovector(_) => CovariantClass::Pseudovector,
            Self::Tensor(..) => CovariantClass::Tensor,
        }
    }

    /// Every kind materialised by this crate: the scalar, the vector
    /// members, the pseudoscalar, the pseudovector members and the
    /// off-diagonal tensor components.
    pub fn enumerate() -> Vec<MatrixKind> {
        let mut out = vec![
            Self::Beta,
            Self::Alpha0,
            Self::Alpha1,
            Self::Alpha2,
            Self::Alpha3,
            Self::Alpha5,
        ];
        out.extend((0..=4).map(Self::Pseudovector));
        for mu in 0..4 {
            for nu in 0..4 {
                if mu != nu {
                    out.push(Self::Tensor(mu, nu));
                }
            }
        }
        out
    }
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Alpha0 => write!(f, "alpha0"),
            Self::Alpha1 => write!(f, "alpha1"),
            Self::Alpha2 => write!(f, "alpha2"),
            Self::Alpha3 => write!(f, "alpha3"),
            Self::Beta => write!(f, "beta"),
            Self::Alpha5 => write!(f, "alpha5"),
            Self::Pseudovector(mu) => write!(f, "pseudovector({mu})"),
            Self::Tensor(mu, nu) => write!(f, "tensor({mu},{nu})"),
        }
    }
}

fn alpha_spatial<T: Scalar>(k: usize) -> Matrix4<T> {
    let s = pauli::<T>(k).expect("spatial index");
    let z = Matrix2::zero();
    Matrix4::from_blocks(&z, &s, &s, &z)
}

fn beta<T: Scalar>() -> Matrix4<T> {
    let id = Matrix2::<T>::identity();
    let z = Matrix2::zero();
    Matrix4::from_blocks(&id, &z, &z, &id.scale(&-T::one()))
}

/// Exact matrix for `kind`.
pub fn dirac_matrix<T: Scalar>(kind: MatrixKind) -> Result<Matrix4<T>> {
    let kind = kind.validate()?;
    Ok(match kind {
        MatrixKind::Alpha0 => Matrix4::identity(),
        MatrixKind::Alpha1 => alpha_spatial(1),
        MatrixKind::Alpha2 => alpha_spatial(2),
        MatrixKind::Alpha3 => alpha_spatial(3),
        MatrixKind::Beta => beta(),
        MatrixKind::Alpha5 => {
            let a1 = alpha_spatial::<T>(1);
            let a2 = alpha_spatial::<T>(2);
            let a3 = alpha_spatial::<T>(3);
            &(&(&a1 * &a2) * &a3) * &beta()
        }
        MatrixKind::Pseudovector(mu) => {
            let a5 = dirac_matrix::<T>(MatrixKind::Alpha5)?;
            &a5 * &dirac_matrix(MatrixKind::alpha(mu)?)?
        }
        MatrixKind::Tensor(mu, nu) if mu == nu => Matrix4::zero(),
        MatrixKind::Tensor(mu, nu) => {
            let a_mu = dirac_matrix::<T>(MatrixKind::alpha(mu)?)?;
            let a_nu = dirac_matrix::<T>(MatrixKind::alpha(nu)?)?;
            (&(&a_nu * &beta()) * &a_mu).scale(&T::imag_unit())
        }
    })
}

pub fn hermiticity<T: Scalar>(m: &Matrix4<T>) -> Hermiticity {
    if m.is_hermitian() {
        Hermiticity::Hermitian
    } else if m.is_anti_hermitian() {
        Hermiticity::AntiHermitian
    } else {
        Hermiticity::Neither
    }
}

/// `AB + BA`.
pub fn anticommutator<T: Scalar>(a: &Matrix4<T>, b: &Matrix4<T>) -> Matrix4<T> {
    &(a * b) + &(b * a)
}

/// `AB − BA`.
pub fn commutator<T: Scalar>(a: &Matrix4<T>, b: &Matrix4<T>) -> Matrix4<T> {
    &(a * b) - &(b * a)
}

/// `S†·M·S`: the image of `M` in the representation reached through the
/// unitary `S` (with `M = S M′ S†`).
pub fn canonical_conjugate<T: Scalar>(s: &Matrix4<T>, m: &Matrix4<T>) -> Result<Matrix4<T>> {
    if !s.is_unitary() {
        return Err(Error::NotUnitary);
    }
    Ok(&(&s.adjoint() * m) * s)
}

/// The unitary change of basis that mixes components (1,4) and (2,3) at 45°.
pub fn primed_transform<T: Scalar>() -> Matrix4<T> {
    let (o, z) = (T::one(), T::zero());
    let m = -o.clone();
    Matrix4::new([
        [o.clone(), z.clone(), z.clone(), m.clone()],
        [z.clone(), o.clone(), o.clone(), z.clone()],
        [o.clone(), z.clone(), z.clone(), o.clone()],
        [z.clone(), o, m, z],
    ])
    .scale(&T::frac_1_sqrt2())
}

/// Target form of `α′_index` (index 1..=4) in the primed representation:
/// block-diagonal `σ` for the spatial members and `[[0, −iσ_y], [iσ_y, 0]]`
/// for `α′₄`.
pub fn primed_reference<T: Scalar>(index: usize) -> Result<Matrix4<T>> {
    let z = Matrix2::zero();
    Ok(match index {
        1 | 3 => {
            let s = pauli::<T>(index)?;
            Matrix4::from_blocks(&s, &z, &z, &s)
        }
        2 => {
            let s = pauli::<T>(2)?;
            Matrix4::from_blocks(&s, &z, &z, &s.scale(&-T::one()))
        }
        4 => {
            let sy = pauli::<T>(2)?;
            let i = T::imag_unit();
            Matrix4::from_blocks(&z, &sy.scale(&-i.clone()), &sy.scale(&i), &z)
        }
        _ => return Err(Error::input(format!("primed index {index} outside 1..=4"))),
    })
}
