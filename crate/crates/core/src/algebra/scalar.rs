//! Scalars for the matrix apparatus.
//!
//! [`ExactComplex`] lives in Q(√2, i): every quantity the Dirac matrices, the
//! 45° change of basis and rational field amplitudes can produce is
//! representable there, so identities are checked with plain `==`.
//! [`Complex64`] is the double-precision counterpart used by the grid layer
//! and by `float` mode runs.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Absolute / relative tolerance for float-mode comparisons.
pub const FLOAT_TOL: f64 = 1e-12;

pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn rat_to_f64(q: &BigRational) -> f64 {
    // to_f64 on BigRational can overflow for huge numerators; go through
    // the components only when the direct conversion fails.
    q.to_f64().unwrap_or_else(|| {
        let n = q.numer().to_f64().unwrap_or(f64::NAN);
        let d = q.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// `rat + sqrt2·√2` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QSqrt2 {
    pub rat: BigRational,
    pub sqrt2: BigRational,
}

impl QSqrt2 {
    pub fn new(rat: BigRational, sqrt2: BigRational) -> Self {
        Self { rat, sqrt2 }
    }

    pub fn from_rational(q: BigRational) -> Self {
        Self { rat: q, sqrt2: BigRational::zero() }
    }

    pub fn zero() -> Self {
        Self::from_rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.sqrt2.is_zero()
    }

    /// Galois conjugate `rat − sqrt2·√2`.
    pub fn galois(&self) -> Self {
        Self { rat: self.rat.clone(), sqrt2: -self.sqrt2.clone() }
    }

    /// Field norm `rat² − 2·sqrt2²`; zero only for the zero element.
    pub fn norm(&self) -> BigRational {
        &self.rat * &self.rat - ratio(2, 1) * &self.sqrt2 * &self.sqrt2
    }

    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        let g = self.galois();
        Some(Self { rat: g.rat / &n, sqrt2: g.sqrt2 / n })
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        self.sqrt2.is_zero().then_some(&self.rat)
    }

    pub fn to_f64(&self) -> f64 {
        rat_to_f64(&self.rat) + rat_to_f64(&self.sqrt2) * std::f64::consts::SQRT_2
    }

    fn scale(&self, q: &BigRational) -> Self {
        Self { rat: &self.rat * q, sqrt2: &self.sqrt2 * q }
    }
}

impl Add for &QSqrt2 {
    type Output = QSqrt2;
    fn add(self, o: &QSqrt2) -> QSqrt2 {
        QSqrt2 { rat: &self.rat + &o.rat, sqrt2: &self.sqrt2 + &o.sqrt2 }
    }
}

impl Sub for &QSqrt2 {
    type Output = QSqrt2;
    fn sub(self, o: &QSqrt2) -> QSqrt2 {
        QSqrt2 { rat: &self.rat - &o.rat, sqrt2: &self.sqrt2 - &o.sqrt2 }
    }
}

impl Mul for &QSqrt2 {
    type Output = QSqrt2;
    fn mul(self, o: &QSqrt2) -> QSqrt2 {
        if self.sqrt2.is_zero() && o.sqrt2.is_zero() {
            return QSqrt2 { rat: &self.rat * &o.rat, sqrt2: BigRational::zero() };
        }
        let two = ratio(2, 1);
        QSqrt2 {
            rat: &self.rat * &o.rat + two * &self.sqrt2 * &o.sqrt2,
            sqrt2: &self.rat * &o.sqrt2 + &self.sqrt2 * &o.rat,
        }
    }
}

impl Neg for &QSqrt2 {
    type Output = QSqrt2;
    fn neg(self) -> QSqrt2 {
        QSqrt2 { rat: -self.rat.clone(), sqrt2: -self.sqrt2.clone() }
    }
}

fn fmt_rat(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for QSqrt2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rat.is_zero(), self.sqrt2.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rat(&self.rat)),
            (true, false) => write!(f, "{}√2", fmt_rat(&self.sqrt2)),
            (false, false) => {
                let sign = if self.sqrt2.is_negative() { '-' } else { '+' };
                write!(f, "{}{}{}√2", fmt_rat(&self.rat), sign, fmt_rat(&self.sqrt2.abs()))
            }
        }
    }
}

/// `(re_rat + re_sqrt2·√2) + i·(im_rat + im_sqrt2·√2)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactComplex {
    pub re: QSqrt2,
    pub im: QSqrt2,
}

impl ExactComplex {
    pub fn new(re: QSqrt2, im: QSqrt2) -> Self {
        Self { re, im }
    }

    pub fn gaussian(re: BigRational, im: BigRational) -> Self {
        Self { re: QSqrt2::from_rational(re), im: QSqrt2::from_rational(im) }
    }

    pub fn re_rat(&self) -> &BigRational {
        &self.re.rat
    }

    pub fn re_sqrt2(&self) -> &BigRational {
        &self.re.sqrt2
    }

    pub fn im_rat(&self) -> &BigRational {
        &self.im.rat
    }

    pub fn im_sqrt2(&self) -> &BigRational {
        &self.im.sqrt2
    }

    /// The pair `(re, im)` when no √2 component is present.
    pub fn to_gaussian(&self) -> Option<(BigRational, BigRational)> {
        Some((self.re.as_rational()?.clone(), self.im.as_rational()?.clone()))
    }

    pub fn scale_rational(&self, q: &BigRational) -> Self {
        Self { re: self.re.scale(q), im: self.im.scale(q) }
    }
}

impl Add for &ExactComplex {
    type Output = ExactComplex;
    fn add(self, o: &ExactComplex) -> ExactComplex {
        ExactComplex { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl Sub for &ExactComplex {
    type Output = ExactComplex;
    fn sub(self, o: &ExactComplex) -> ExactComplex {
        ExactComplex { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl Mul for &ExactComplex {
    type Output = ExactComplex;
    fn mul(self, o: &ExactComplex) -> ExactComplex {
        if self.is_zero() || o.is_zero() {
            return ExactComplex::zero();
        }
        if self.im.is_zero() && o.im.is_zero() {
            return ExactComplex { re: &self.re * &o.re, im: QSqrt2::zero() };
        }
        ExactComplex {
            re: &(&self.re * &o.re) - &(&self.im * &o.im),
            im: &(&self.re * &o.im) + &(&self.im * &o.re),
        }
    }
}

impl Neg for &ExactComplex {
    type Output = ExactComplex;
    fn neg(self) -> ExactComplex {
        ExactComplex { re: -&self.re, im: -&self.im }
    }
}

macro_rules! owned_ops {
    ($t:ty) => {
        impl Add for $t {
            type Output = $t;
            fn add(self, o: $t) -> $t {
                &self + &o
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, o: $t) -> $t {
                &self - &o
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, o: $t) -> $t {
                &self * &o
            }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
    };
}

owned_ops!(QSqrt2);
owned_ops!(ExactComplex);

impl fmt::Display for ExactComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "({})i", self.im),
            (false, false) => write!(f, "{} + ({})i", self.re, self.im),
        }
    }
}

/// Field operations shared by the exact and the double-precision scalar.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn imag_unit() -> Self;
    fn from_rational(q: &BigRational) -> Self;
    /// 1/√2.
    fn frac_1_sqrt2() -> Self;
    fn conj(&self) -> Self;
    fn recip(&self) -> Option<Self>;
    /// Exact zero test, or `|z| ≤ FLOAT_TOL` for floats.
    fn is_zero(&self) -> bool;
    /// Equality against an expected value: exact, or 1e-12 absolute on a zero
    /// expectation and 1e-12 relative otherwise.
    fn matches(&self, expected: &Self) -> bool;
    fn to_c64(&self) -> Complex64;

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(&ratio(num, den))
    }

    fn from_i64(v: i64) -> Self {
        Self::from_ratio(v, 1)
    }

    fn gaussian(re: &BigRational, im: &BigRational) -> Self {
        Self::from_rational(re) + Self::imag_unit() * Self::from_rational(im)
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self.clone() + rhs.clone()
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self.clone() - rhs.clone()
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self.clone() * rhs.clone()
    }

    fn div_ref(&self, rhs: &Self) -> Option<Self> {
        Some(self.mul_ref(&rhs.recip()?))
    }

    /// Magnitude used for pivoting in elimination.
    fn magnitude(&self) -> f64 {
        self.to_c64().norm()
    }
}

impl Scalar for ExactComplex {
    const EXACT: bool = true;

    fn zero() -> Self {
        Self { re: QSqrt2::zero(), im: QSqrt2::zero() }
    }

    fn one() -> Self {
        Self { re: QSqrt2::one(), im: QSqrt2::zero() }
    }

    fn imag_unit() -> Self {
        Self { re: QSqrt2::zero(), im: QSqrt2::one() }
    }

    fn from_rational(q: &BigRational) -> Self {
        Self { re: QSqrt2::from_rational(q.clone()), im: QSqrt2::zero() }
    }

    fn frac_1_sqrt2() -> Self {
        Self {
            re: QSqrt2::new(BigRational::zero(), ratio(1, 2)),
            im: QSqrt2::zero(),
        }
    }

    fn gaussian(re: &BigRational, im: &BigRational) -> Self {
        ExactComplex::gaussian(re.clone(), im.clone())
    }

    fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -&self.im }
    }

    fn recip(&self) -> Option<Self> {
        // 1/z = z̄ / (re² + im²); the denominator is a nonzero element of
        // Q(√2) whenever z ≠ 0 (it is positive under the real embedding).
        let den = &(&self.re * &self.re) + &(&self.im * &self.im);
        let inv = den.recip()?;
        Some(Self { re: &self.re * &inv, im: -&(&self.im * &inv) })
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn matches(&self, expected: &Self) -> bool {
        self == expected
    }

    fn to_c64(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

impl Scalar for Complex64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }

    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }

    fn imag_unit() -> Self {
        Complex64::new(0.0, 1.0)
    }

    fn from_rational(q: &BigRational) -> Self {
        Complex64::new(rat_to_f64(q), 0.0)
    }

    fn frac_1_sqrt2() -> Self {
        Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0)
    }

    fn gaussian(re: &BigRational, im: &BigRational) -> Self {
        Complex64::new(rat_to_f64(re), rat_to_f64(im))
    }

    fn conj(&self) -> Self {
        Complex64::conj(self)
    }

    fn recip(&self) -> Option<Self> {
        (self.norm() > 0.0).then(|| self.inv())
    }

    fn is_zero(&self) -> bool {
        self.norm() <= FLOAT_TOL
    }

    fn matches(&self, expected: &Self) -> bool {
        let scale = expected.norm();
        let diff = (self - expected).norm();
        if scale <= FLOAT_TOL {
            diff <= FLOAT_TOL
        } else {
            diff <= FLOAT_TOL * scale
        }
    }

    fn to_c64(&self) -> Complex64 {
        *self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        ratio(n, d)
    }

    #[test]
    fn sqrt2_squares_to_two() {
        let r = ExactComplex::frac_1_sqrt2();
        let two_r = &r + &r; // √2
        assert_eq!(&two_r * &two_r, ExactComplex::from_i64(2));
        assert_eq!(&r * &r, ExactComplex::from_ratio(1, 2));
    }

    #[test]
    fn reciprocal_round_trips() {
        let z = ExactComplex::new(QSqrt2::new(q(3, 2), q(-1, 3)), QSqrt2::new(q(1, 1), q(2, 5)));
        let inv = z.recip().unwrap();
        assert_eq!(&z * &inv, ExactComplex::one());
        assert!(ExactComplex::zero().recip().is_none());
    }

    #[test]
    fn gaussian_values_round_trip() {
        let z = ExactComplex::gaussian(q(7, 3), q(-2, 9));
        assert_eq!(z.to_gaussian(), Some((q(7, 3), q(-2, 9))));
        assert!(ExactComplex::frac_1_sqrt2().to_gaussian().is_none());
    }

    #[test]
    fn conjugation_is_involutive_and_multiplicative() {
        let a = ExactComplex::new(QSqrt2::new(q(1, 2), q(1, 1)), QSqrt2::new(q(-3, 1), q(0, 1)));
        let b = ExactComplex::gaussian(q(5, 7), q(4, 1));
        assert_eq!(a.conj().conj(), a);
        assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
    }

    #[test]
    fn float_matching_uses_relative_and_absolute_rules() {
        let big = Complex64::new(1e6, 0.0);
        assert!(Complex64::new(1e6 + 1e-7, 0.0).matches(&big));
        assert!(!Complex64::new(1e6 + 1.0, 0.0).matches(&big));
        assert!(Complex64::new(5e-13, 0.0).matches(&Complex64::new(0.0, 0.0)));
        assert!(!Complex64::new(5e-12, 0.0).matches(&Complex64::new(0.0, 0.0)));
    }

    #[test]
    fn display_is_compact() {
        assert_eq!(ExactComplex::from_ratio(-3, 4).to_string(), "-3/4");
        assert_eq!(ExactComplex::imag_unit().to_string(), "(1)i");
        assert_eq!(ExactComplex::frac_1_sqrt2().to_string(), "1/2√2");
    }
}
