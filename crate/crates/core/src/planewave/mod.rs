//! Plane-wave operator calculus.
//!
//! Every field component is `A·exp(−i(ωt + s·k·ξ))` with `ξ` the coordinate
//! along the propagation axis and `s = ±1`, so `∂/∂t → −iω` and
//! `∂/∂ξ → −i·s·k`. The energy operator `iħ∂/∂t` becomes `ħω` and the
//! momentum operator `−iħ∂/∂ξ` becomes `−s·ħk`. `s = +1` is a wave moving
//! toward the negative axis.

mod systems;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{dirac_matrix, null_space, ratio, Matrix4, MatrixKind, Scalar, Vec4};
use crate::bridge::{
    charge_conjugate, decode_fields, frame, formal_adjoint, to_bispinor, Axis, Bispinor, Direction,
    DirectionFrame, FieldQuad, Rep,
};
use crate::error::{Error, Result};

pub use systems::{
    calibrate_coeff, current_correspondence, current_correspondence_with, dirac_rows, per_axis_residuals,
    CurrentMatch, MaxwellRow, PrintedSystem,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhysicalConstants {
    pub c: BigRational,
    pub hbar: BigRational,
    pub mass: BigRational,
}

impl PhysicalConstants {
    pub fn new(c: BigRational, hbar: BigRational, mass: BigRational) -> Result<Self> {
        if !c.is_positive() || !hbar.is_positive() {
            return Err(Error::input("c and hbar must be positive"));
        }
        if mass.is_negative() {
            return Err(Error::input("mass must be non-negative"));
        }
        Ok(Self { c, hbar, mass })
    }

    /// `c = ħ = 1`.
    pub fn natural(mass: BigRational) -> Result<Self> {
        Self::new(BigRational::one(), BigRational::one(), mass)
    }

    pub fn with_mass(&self, mass: BigRational) -> Result<Self> {
        Self::new(self.c.clone(), self.hbar.clone(), mass)
    }

    /// `ω₀ = mc²/ħ`.
    pub fn rest_frequency(&self) -> BigRational {
        &self.mass * &self.c * &self.c / &self.hbar
    }

    /// `r_c = ħ/(mc)`; undefined for zero mass.
    pub fn compton_length(&self) -> Option<BigRational> {
        (!self.mass.is_zero()).then(|| &self.hbar / (&self.mass * &self.c))
    }

    pub fn rest_energy(&self) -> BigRational {
        &self.mass * &self.c * &self.c
    }

    pub fn is_massless(&self) -> bool {
        self.mass.is_zero()
    }

    /// `(ω, k)` on the massive shell `ω² = c²k² + ω₀²`, parametrised by a
    /// nonzero rational `t`: `ω = ω₀(1+t²)/2t`, `k = ω₀(1−t²)/(2tc)`.
    pub fn massive_shell(&self, t: &BigRational) -> Result<(BigRational, BigRational)> {
        if t.is_zero() {
            return Err(Error::input("shell parameter must be nonzero"));
        }
        let w0 = self.rest_frequency();
        let one = BigRational::one();
        let two_t = BigRational::from_integer(BigInt::from(2)) * t;
        let omega = &w0 * (&one + t * t) / &two_t;
        let k = &w0 * (&one - t * t) / (&two_t * &self.c);
        Ok((omega, k))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PhaseSign {
    /// `exp(−i(ωt + kξ))`.
    Plus,
    /// `exp(−i(ωt − kξ))`.
    Minus,
}

impl PhaseSign {
    pub fn value(self) -> i64 {
        match self {
            PhaseSign::Plus => 1,
            PhaseSign::Minus => -1,
        }
    }

    /// Opposite propagation sense.
    pub fn flipped(self) -> Self {
        match self {
            PhaseSign::Plus => PhaseSign::Minus,
            PhaseSign::Minus => PhaseSign::Plus,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PlaneWaveState<T> {
    pub amplitudes: FieldQuad<T>,
    pub omega: BigRational,
    pub k: BigRational,
    pub phase: PhaseSign,
}

impl<T: Scalar> PlaneWaveState<T> {
    pub fn new(amplitudes: FieldQuad<T>, omega: BigRational, k: BigRational, phase: PhaseSign) -> Self {
        Self { amplitudes, omega, k, phase }
    }

    /// Multiplier of `∂/∂t`: `−iω`.
    pub fn dt_factor(&self) -> T {
        -T::imag_unit() * T::from_rational(&self.omega)
    }

    /// Multiplier of `∂/∂ξ`: `−i·s·k`.
    pub fn ds_factor(&self) -> T {
        -T::imag_unit() * T::from_rational(&(&self.k * BigRational::from_integer(self.phase.value().into())))
    }

    pub fn operator_rep(&self, constants: &PhysicalConstants) -> OperatorRep {
        OperatorRep {
            energy: &constants.hbar * &self.omega,
            momentum: -(&constants.hbar * &self.k) * BigRational::from_integer(self.phase.value().into()),
        }
    }

    pub fn with_amplitudes(&self, amplitudes: FieldQuad<T>) -> Self {
        Self { amplitudes, ..self.clone() }
    }
}

/// Multiplicative images of the energy and momentum operators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorRep {
    /// `ħω`.
    pub energy: BigRational,
    /// `−s·ħk`, the component along the propagation axis.
    pub momentum: BigRational,
}

/// The six bispinor equation forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DiracForm {
    /// `ψ⁺(α₀ε − cα·p) = 0`.
    MasslessRow,
    /// `(α₀ε + cα·p)ψ = 0`.
    MasslessColumn,
    /// `[(α₀ε + cα·p) + βmc²]ψ = 0`.
    MassiveColumnPlus,
    /// `ψ⁺[(α₀ε + cα·p) + βmc²] = 0`.
    MassiveRowPlus,
    /// `[(α₀ε − cα·p) − βmc²]ψ = 0`.
    MassiveColumnMinus,
    /// `ψ⁺[(α₀ε − cα·p) − βmc²] = 0`.
    MassiveRowMinus,
}

impl DiracForm {
    pub const ALL: [DiracForm; 6] = [
        DiracForm::MasslessRow,
        DiracForm::MasslessColumn,
        DiracForm::MassiveColumnPlus,
        DiracForm::MassiveRowPlus,
        DiracForm::MassiveColumnMinus,
        DiracForm::MassiveRowMinus,
    ];

    pub fn equation_tag(self) -> &'static str {
        match self {
            DiracForm::MasslessRow => "Eq 2.10",
            DiracForm::MasslessColumn => "Eq 2.11",
            DiracForm::MassiveColumnPlus => "Eq 2.13'",
            DiracForm::MassiveRowPlus => "Eq 2.13''",
            DiracForm::MassiveColumnMinus => "Eq 2.16",
            DiracForm::MassiveRowMinus => "Eq 2.17",
        }
    }

    pub fn is_row(self) -> bool {
        matches!(self, DiracForm::MasslessRow | DiracForm::MassiveRowPlus | DiracForm::MassiveRowMinus)
    }

    /// Sign in front of `cα·p`.
    pub fn momentum_sign(self) -> i64 {
        match self {
            DiracForm::MasslessRow | DiracForm::MassiveColumnMinus | DiracForm::MassiveRowMinus => -1,
            _ => 1,
        }
    }

    /// Sign in front of `βmc²`; zero for the massless forms.
    pub fn mass_sign(self) -> i64 {
        match self {
            DiracForm::MasslessRow | DiracForm::MasslessColumn => 0,
            DiracForm::MassiveColumnPlus | DiracForm::MassiveRowPlus => 1,
            DiracForm::MassiveColumnMinus | DiracForm::MassiveRowMinus => -1,
        }
    }
}

impl std::str::FromStr for DiracForm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        DiracForm::ALL
            .into_iter()
            .find(|f| f.equation_tag() == s || f.equation_tag().trim_start_matches("Eq ") == s)
            .ok_or_else(|| Error::input(format!("unknown equation form `{s}`")))
    }
}

fn int<T: Scalar>(v: i64) -> T {
    T::from_i64(v)
}

/// The operator of `form` with `ε̂`, `p̂` replaced by their plane-wave
/// images. Only the matrix on the propagation axis (`α₂` in every frame)
/// meets a nonzero momentum.
pub fn plane_wave_matrix<T: Scalar>(
    form: DiracForm,
    omega: &BigRational,
    k: &BigRational,
    phase: PhaseSign,
    constants: &PhysicalConstants,
) -> Matrix4<T> {
    let op = PlaneWaveState::<T>::new(FieldQuad::zero(Axis::Y), omega.clone(), k.clone(), phase)
        .operator_rep(constants);
    let eps = T::from_rational(&op.energy);
    let cp = T::from_rational(&(&constants.c * &op.momentum)) * int(form.momentum_sign());
    let mc2 = T::from_rational(&constants.rest_energy()) * int(form.mass_sign());
    let a0 = dirac_matrix::<T>(MatrixKind::Alpha0).expect("valid kind");
    let a2 = dirac_matrix::<T>(MatrixKind::Alpha2).expect("valid kind");
    let b = dirac_matrix::<T>(MatrixKind::Beta).expect("valid kind");
    &(&a0.scale(&eps) + &a2.scale(&cp)) + &b.scale(&mc2)
}

/// Applies `form` to `psi`: `Mψ` for column forms, `ψ⁺M` for row forms.
pub fn apply_to_bispinor<T: Scalar>(
    form: DiracForm,
    psi: &Bispinor<T>,
    state: &PlaneWaveState<T>,
    constants: &PhysicalConstants,
) -> Result<Vec4<T>> {
    let m = plane_wave_matrix::<T>(form, &state.omega, &state.k, state.phase, constants);
    Ok(if form.is_row() { m.row_mul(&formal_adjoint(psi)?) } else { m.mul_vec(&psi.c) })
}

/// Residual of `form` on the state's fields packed in `frame`.
pub fn apply_dirac<T: Scalar>(
    form: DiracForm,
    state: &PlaneWaveState<T>,
    constants: &PhysicalConstants,
    frame: &DirectionFrame,
) -> Result<Vec4<T>> {
    let psi = to_bispinor(&state.amplitudes, frame)?;
    apply_to_bispinor(form, &psi, state, constants)
}

/// Coefficient multiplying each field value in the packed vector that the
/// form acts on.
pub fn slot_factors<T: Scalar>(rep: Rep, row: bool) -> Result<[T; 4]> {
    let (o, i) = (T::one(), T::imag_unit());
    let mut f = match rep {
        Rep::Standard => [o.clone(), o, i.clone(), i],
        Rep::RetardedConjugated => [o.clone(), -o, i.clone(), -i],
        Rep::Primed => return Err(Error::Precondition("primed bispinors have no field slots".into())),
    };
    if row {
        f[2] = -f[2].clone();
        f[3] = -f[3].clone();
    }
    Ok(f)
}

/// Residual components rescaled to field equations: divided by `iħc` and by
/// the slot factor, so that `(1/c)∂/∂t` appears with unit weight.
pub fn normalized_rows<T: Scalar>(
    form: DiracForm,
    rep: Rep,
    residual: &Vec4<T>,
    constants: &PhysicalConstants,
) -> Result<Vec4<T>> {
    let factors = slot_factors::<T>(rep, form.is_row())?;
    let ihc = T::imag_unit() * T::from_rational(&(&constants.hbar * &constants.c));
    let mut out: Vec4<T> = std::array::from_fn(|_| T::zero());
    for k in 0..4 {
        let d = ihc.mul_ref(&factors[k]);
        out[k] = residual[k].div_ref(&d).expect("nonzero normalisation");
    }
    Ok(out)
}

/// Matrices certifying the Klein–Gordon factorisation.
#[derive(Clone, Debug, PartialEq)]
pub struct KleinGordon<T> {
    /// `(α₀ε)² − ε²·I`.
    pub energy_square: Matrix4<T>,
    /// `c²((α·p)² − p²·I)`.
    pub momentum_square: Matrix4<T>,
    /// `(α₀ε − cα·p)(α₀ε + cα·p)`.
    pub product: Matrix4<T>,
    /// `(ε² − c²p²)·I`.
    pub dispersion: Matrix4<T>,
}

impl<T: Scalar> KleinGordon<T> {
    pub fn holds(&self) -> bool {
        self.energy_square.is_zero() && self.momentum_square.is_zero() && self.product.matches(&self.dispersion)
    }
}

/// Factorisation matrices for energy `eps` and a full momentum vector.
pub fn klein_gordon_general<T: Scalar>(eps: &T, p: &[T; 3], c: &T) -> KleinGordon<T> {
    let a0 = dirac_matrix::<T>(MatrixKind::Alpha0).expect("valid kind");
    let alphas = [MatrixKind::Alpha1, MatrixKind::Alpha2, MatrixKind::Alpha3]
        .map(|k| dirac_matrix::<T>(k).expect("valid kind"));
    let alpha_p = alphas
        .iter()
        .zip(p)
        .fold(Matrix4::zero(), |acc, (a, pi)| &acc + &a.scale(pi));
    let p2 = p.iter().fold(T::zero(), |acc, x| acc + x.mul_ref(x));
    let c2 = c.mul_ref(c);
    let e_term = a0.scale(eps);
    let c_alpha_p = alpha_p.scale(c);
    KleinGordon {
        energy_square: &(&e_term * &e_term) - &Matrix4::scalar(eps.mul_ref(eps)),
        momentum_square: (&(&alpha_p * &alpha_p) - &Matrix4::scalar(p2.clone())).scale(&c2),
        product: &(&e_term - &c_alpha_p) * &(&e_term + &c_alpha_p),
        dispersion: Matrix4::scalar(eps.mul_ref(eps) - c2 * p2),
    }
}

/// Factorisation matrices for a plane wave along its axis.
pub fn klein_gordon_check<T: Scalar>(state: &PlaneWaveState<T>, constants: &PhysicalConstants) -> KleinGordon<T> {
    let op = state.operator_rep(constants);
    let mut p: [T; 3] = std::array::from_fn(|_| T::zero());
    p[state.amplitudes.axis.index()] = T::from_rational(&op.momentum);
    klein_gordon_general(&T::from_rational(&op.energy), &p, &T::from_rational(&constants.c))
}

/// Free Maxwell curl equations on a plane wave, written out from the
/// vector identities: `(1/c)∂E/∂t − ∇×H` then `(1/c)∂H/∂t + ∇×E`, each as
/// x, y, z components.
pub fn free_maxwell_rows<T: Scalar>(state: &PlaneWaveState<T>, c: &BigRational) -> [T; 6] {
    let inv_c = T::from_rational(&c.recip());
    let dt = state.dt_factor();
    let ds = state.ds_factor();
    let axis = state.amplitudes.axis.index();
    let e = state.amplitudes.e_vector();
    let h = state.amplitudes.h_vector();
    // Only the derivative along the propagation axis survives.
    let curl = |f: &[T; 3]| -> [T; 3] {
        let mut grad: [T; 3] = std::array::from_fn(|_| T::zero());
        grad[axis] = ds.clone();
        [
            grad[1].mul_ref(&f[2]) - grad[2].mul_ref(&f[1]),
            grad[2].mul_ref(&f[0]) - grad[0].mul_ref(&f[2]),
            grad[0].mul_ref(&f[1]) - grad[1].mul_ref(&f[0]),
        ]
    };
    let (ce, ch) = (curl(&e), curl(&h));
    std::array::from_fn(|r| {
        let i = r % 3;
        if r < 3 {
            inv_c.mul_ref(&dt).mul_ref(&e[i]) - ch[i].clone()
        } else {
            inv_c.mul_ref(&dt).mul_ref(&h[i]) + ce[i].clone()
        }
    })
}

/// Null space of the plane-wave matrix, decoded back to fields in `frame`.
pub fn decoded_null_space<T: Scalar>(
    form: DiracForm,
    omega: &BigRational,
    k: &BigRational,
    phase: PhaseSign,
    constants: &PhysicalConstants,
    frame: &DirectionFrame,
) -> Result<Vec<FieldQuad<T>>> {
    let m = plane_wave_matrix::<T>(form, omega, k, phase, constants);
    let m = if form.is_row() { m.transpose() } else { m };
    null_space(&m)
        .into_iter()
        .map(|v| {
            // A row solution `r` with `r = ψ⁺ = βψ` carries the same fields as `βr`.
            let c = if form.is_row() {
                [v[0].clone(), v[1].clone(), -v[2].clone(), -v[3].clone()]
            } else {
                v
            };
            decode_fields(&Bispinor {
                c,
                layout: crate::bridge::Layout { axis: frame.axis, direction: frame.direction, rep: Rep::Standard },
            })
        })
        .collect()
}

/// Reference frame of the printed y-wave equations.
pub fn y_frame() -> DirectionFrame {
    frame(Axis::Y, Direction::Negative)
}

/// `ψ` of the state in `frame`, charge conjugated when `rep` asks for it.
pub fn packed<T: Scalar>(state: &PlaneWaveState<T>, frame: &DirectionFrame, rep: Rep) -> Result<Bispinor<T>> {
    let psi = to_bispinor(&state.amplitudes, frame)?;
    match rep {
        Rep::Standard => Ok(psi),
        Rep::RetardedConjugated => charge_conjugate(&psi),
        Rep::Primed => Err(Error::Precondition("plane-wave forms act on unprimed bispinors".into())),
    }
}

/// `ω = ck` with `k = n/d`.
pub fn massless_shell(c: &BigRational, n: i64, d: i64) -> (BigRational, BigRational) {
    let k = ratio(n, d);
    (c * &k, k)
}
