//! Force densities of the field: the symmetric energy-momentum tensor, the
//! spin-tensor force with the spinning-photon substitution, the charged-ring
//! balance and the hydrodynamic (Lamb–Gromeka) form of the motion.
//!
//! Field-level forces are returned multiplied by 4π. The tensor uses the
//! standard Kronecker delta, `δᵢⱼ = 1` for `i = j`.

mod heisenberg;
mod hydro;
mod ring;

use serde::{Deserialize, Serialize};

use crate::algebra::{MatrixKind, Scalar};
use crate::bilinears::bilinear;
use crate::bridge::{cross, Axis, DirectionFrame, FieldQuad};
use crate::error::{Error, Result};
use crate::planewave::PlaneWaveState;

pub use heisenberg::{heisenberg_rate, plane_wave_hamiltonian};
pub use hydro::{
    centripetal_check, curl_error, gaussian_newton_setup, lamb_gromeka_residual, newton_balance,
    rigid_rotation_velocity, to_densities, LambGromeka, NewtonSetup,
};
pub use ring::{ring_force, RingConfig};

/// Energy-momentum tensor in 4π units: `τᵢⱼ = ½δᵢⱼ(E²+H²) − (EᵢEⱼ + HᵢHⱼ)`,
/// `τᵢ₀ = [E×H]ᵢ`, `τ₀₀ = ½(E²+H²)`.
#[derive(Clone, Debug, PartialEq)]
pub struct EMTensor<T> {
    pub spatial: [[T; 3]; 3],
    pub poynting: [T; 3],
    pub energy: T,
}

fn dot<T: Scalar>(a: &[T; 3], b: &[T; 3]) -> T {
    a.iter().zip(b).fold(T::zero(), |s, (x, y)| s + x.mul_ref(y))
}

impl<T: Scalar> EMTensor<T> {
    pub fn from_fields(e: &[T; 3], h: &[T; 3]) -> Self {
        Self::polar(e, h, e, h)
    }

    /// Symmetric bilinear form `τ(F₁, F₂)` with `τ(F, F)` the tensor of `F`.
    pub fn polar(e1: &[T; 3], h1: &[T; 3], e2: &[T; 3], h2: &[T; 3]) -> Self {
        let half = T::from_ratio(1, 2);
        let energy = half.mul_ref(&(dot(e1, e2) + dot(h1, h2)));
        let spatial = std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                let sym = e1[i].mul_ref(&e2[j]) + e2[i].mul_ref(&e1[j]) + h1[i].mul_ref(&h2[j]) + h2[i].mul_ref(&h1[j]);
                let d = if i == j { energy.clone() } else { T::zero() };
                d - half.mul_ref(&sym)
            })
        });
        let (a, b) = (cross(e1, h2), cross(e2, h1));
        let poynting = std::array::from_fn(|i| half.mul_ref(&(a[i].clone() + b[i].clone())));
        Self { spatial, poynting, energy }
    }

    pub fn is_symmetric(&self) -> bool {
        (0..3).all(|i| (0..3).all(|j| self.spatial[i][j].matches(&self.spatial[j][i])))
    }

    pub fn trace(&self) -> T {
        (0..3).fold(T::zero(), |s, i| s + self.spatial[i][i].clone())
    }

    fn add(&self, o: &Self) -> Self {
        Self {
            spatial: std::array::from_fn(|i| std::array::from_fn(|j| self.spatial[i][j].add_ref(&o.spatial[i][j]))),
            poynting: std::array::from_fn(|i| self.poynting[i].add_ref(&o.poynting[i])),
            energy: self.energy.add_ref(&o.energy),
        }
    }
}

/// Fields and their first derivatives in `t` and `y` at one point.
#[derive(Clone, Debug, PartialEq)]
pub struct FieldJet<T> {
    pub e: [T; 3],
    pub h: [T; 3],
    pub e_t: [T; 3],
    pub h_t: [T; 3],
    pub e_y: [T; 3],
    pub h_y: [T; 3],
}

impl<T: Scalar> FieldJet<T> {
    /// Jet of a y-axis plane wave at the phase origin.
    pub fn from_state(state: &PlaneWaveState<T>) -> Result<Self> {
        if state.amplitudes.axis != Axis::Y {
            return Err(Error::Precondition("field jets are taken on y-axis waves".into()));
        }
        let (dt, ds) = (state.dt_factor(), state.ds_factor());
        let (e, h) = (state.amplitudes.e_vector(), state.amplitudes.h_vector());
        let sc = |v: &[T; 3], f: &T| -> [T; 3] { std::array::from_fn(|i| v[i].mul_ref(f)) };
        Ok(Self { e_t: sc(&e, &dt), h_t: sc(&h, &dt), e_y: sc(&e, &ds), h_y: sc(&h, &ds), e, h })
    }

    pub fn zero() -> Self {
        let z = || std::array::from_fn(|_| T::zero());
        Self { e: z(), h: z(), e_t: z(), h_t: z(), e_y: z(), h_y: z() }
    }

    pub fn quad(&self) -> Result<FieldQuad<T>> {
        FieldQuad::from_vectors(Axis::Y, &self.e, &self.h)
    }

    fn is_y_ansatz(&self) -> bool {
        [&self.e, &self.h, &self.e_t, &self.h_t, &self.e_y, &self.h_y].iter().all(|v| v[1].is_zero())
    }

    pub fn tensor(&self) -> EMTensor<T> {
        EMTensor::from_fields(&self.e, &self.h)
    }

    fn tensor_dt(&self) -> EMTensor<T> {
        let p = EMTensor::polar(&self.e, &self.h, &self.e_t, &self.h_t);
        p.add(&p)
    }

    fn tensor_dy(&self) -> EMTensor<T> {
        let p = EMTensor::polar(&self.e, &self.h, &self.e_y, &self.h_y);
        p.add(&p)
    }
}

/// `4π·f` with the tensor it was derived from.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Force4<T> {
    pub x: T,
    pub y: T,
    pub z: T,
    pub t: T,
    pub tensor: TensorSource,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TensorSource {
    Symmetric,
    Spin,
}

impl<T: Scalar> Force4<T> {
    pub fn components(&self) -> [T; 4] {
        [self.x.clone(), self.y.clone(), self.z.clone(), self.t.clone()]
    }

    pub fn is_zero(&self) -> bool {
        self.components().iter().all(Scalar::is_zero)
    }
}

/// `4πf_μ = −[(1/c)∂ₜτ_μ0 + ∂_y τ_μy]` on the y-wave ansatz.
pub fn symmetric_force<T: Scalar>(jet: &FieldJet<T>, c: &T) -> Result<Force4<T>> {
    if !jet.is_y_ansatz() {
        return Err(Error::Precondition("symmetric force needs E_y = H_y = 0 and y-only dependence".into()));
    }
    let inv_c = c.recip().ok_or_else(|| Error::input("c must be nonzero"))?;
    let (dt, dy) = (jet.tensor_dt(), jet.tensor_dy());
    let spatial = |i: usize| -(inv_c.mul_ref(&dt.poynting[i]) + dy.spatial[i][1].clone());
    Ok(Force4 {
        x: spatial(0),
        y: spatial(1),
        z: spatial(2),
        t: -(inv_c.mul_ref(&dt.energy) + dy.poynting[1].clone()),
        tensor: TensorSource::Symmetric,
    })
}

/// The transverse mode that carries a spinning photon.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpinMode {
    /// `(E_x, H_z)`, spinning about z; its force is along x.
    ExHz,
    /// `(E_z, H_x)`, spinning about x; its force is along z.
    EzHx,
}

impl SpinMode {
    pub const ALL: [SpinMode; 2] = [SpinMode::ExHz, SpinMode::EzHx];

    /// Indices into `(e, h)` 3-vectors: `(E component, H component)`.
    fn components(self) -> (usize, usize) {
        match self {
            SpinMode::ExHz => (0, 2),
            SpinMode::EzHx => (2, 0),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Spinning<T> {
    pub mode: SpinMode,
    pub omega: T,
}

/// Both printed bracket lines (each equal to 2π·f), after the optional
/// substitution `∂ₜF → iωF + ∂ₜF` on the two components of the mode.
#[derive(Clone, Debug, PartialEq)]
pub struct SpinForce<T> {
    pub force: Force4<T>,
    /// First line: `(E_x,H_z)` brackets followed by `(E_z,H_x)` brackets.
    pub line1: T,
    /// Second line, printed with the same `f_x` label. Its brackets are the
    /// free Maxwell rows with `∂_y` reversed, so it is not zero on shell.
    pub line2: T,
}

/// Spin-tensor force. The `(E_x,H_z)` brackets of the first printed line
/// give `f_x`, its `(E_z,H_x)` brackets give `f_z`; `f_y = f_0 = 0`.
/// Brackets lacking `1/c` in print carry it here.
pub fn spin_force<T: Scalar>(jet: &FieldJet<T>, c: &T, spinning: Option<&Spinning<T>>) -> Result<SpinForce<T>> {
    let inv_c = c.recip().ok_or_else(|| Error::input("c must be nonzero"))?;
    let (mut e_t, mut h_t) = (jet.e_t.clone(), jet.h_t.clone());
    if let Some(s) = spinning {
        let iw = T::imag_unit().mul_ref(&s.omega);
        let (ie, ih) = s.mode.components();
        e_t[ie] = e_t[ie].add_ref(&iw.mul_ref(&jet.e[ie]));
        h_t[ih] = h_t[ih].add_ref(&iw.mul_ref(&jet.h[ih]));
    }
    let (e, h, e_y, h_y) = (&jet.e, &jet.h, &jet.e_y, &jet.h_y);
    let t = |v: &T| inv_c.mul_ref(v);
    let (x, z) = (0, 2);
    let exhz = e[x].mul_ref(&(t(&h_t[z]) - e_y[x].clone())) + h[z].mul_ref(&(t(&e_t[x]) - h_y[z].clone()));
    let ezhx = h[x].mul_ref(&(t(&e_t[z]) + h_y[x].clone())) + e[z].mul_ref(&(t(&h_t[x]) + e_y[z].clone()));
    let line2 = e[x].mul_ref(&(t(&h_t[x]) - e_y[z].clone())) - h[z].mul_ref(&(t(&e_t[z]) - h_y[x].clone()))
        + h[x].mul_ref(&(t(&e_t[x]) + h_y[z].clone()))
        - e[z].mul_ref(&(t(&h_t[z]) + e_y[x].clone()));
    let two = T::from_i64(2);
    Ok(SpinForce {
        force: Force4 {
            x: two.mul_ref(&exhz),
            y: T::zero(),
            z: two.mul_ref(&ezhx),
            t: T::zero(),
            tensor: TensorSource::Spin,
        },
        line1: exhz + ezhx,
        line2,
    })
}

/// Printed closed forms: `4π·ᶻf_x = 2i(ω/c)E_x(E_x + H_z)` and
/// `4π·ˣf_z = −2i(ω/c)E_z(E_z − H_x)`.
pub fn spinning_closed_form<T: Scalar>(mode: SpinMode, fields: &FieldQuad<T>, omega: &T, c: &T) -> Result<T> {
    let inv_c = c.recip().ok_or_else(|| Error::input("c must be nonzero"))?;
    let (e, h) = (fields.e_vector(), fields.h_vector());
    let k = T::from_i64(2).mul_ref(&T::imag_unit()).mul_ref(omega).mul_ref(&inv_c);
    Ok(match mode {
        SpinMode::ExHz => k.mul_ref(&e[0]).mul_ref(&(e[0].add_ref(&h[2]))),
        SpinMode::EzHx => -k.mul_ref(&e[2]).mul_ref(&(e[2].sub_ref(&h[0]))),
    })
}

/// Spin tensor `ψ⁺α_μν ψ` with indices `0..4`, zero on the diagonal.
#[derive(Clone, Debug, PartialEq)]
pub struct SpinTensor<T> {
    pub components: [[T; 4]; 4],
}

impl<T: Scalar> SpinTensor<T> {
    pub fn from_fields(fields: &FieldQuad<T>, frame: &DirectionFrame) -> Result<Self> {
        let mut components: [[T; 4]; 4] = std::array::from_fn(|_| std::array::from_fn(|_| T::zero()));
        for mu in 0..4u8 {
            for nu in 0..4u8 {
                if mu != nu {
                    components[mu as usize][nu as usize] = bilinear(MatrixKind::Tensor(mu, nu), fields, frame)?;
                }
            }
        }
        Ok(Self { components })
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..4).all(|i| (0..4).all(|j| self.components[i][j].matches(&-self.components[j][i].clone())))
    }
}

/// Spin tensors at every sample point.
pub fn spin_tensor_field<T: Scalar>(samples: &[FieldQuad<T>], frame: &DirectionFrame) -> Result<Vec<SpinTensor<T>>> {
    samples.iter().map(|f| SpinTensor::from_fields(f, frame)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ratio, ExactComplex};
    use crate::planewave::{free_maxwell_rows, PhaseSign};
    use num_complex::Complex64;

    fn q(n: i64) -> ExactComplex {
        ExactComplex::from_i64(n)
    }

    fn on_shell(ex: i64, ez: i64, phase: PhaseSign) -> PlaneWaveState<ExactComplex> {
        let s = phase.value();
        let f = FieldQuad::y(q(ex), q(ez), q(-s * ez), q(s * ex));
        PlaneWaveState::new(f, ratio(3, 1), ratio(3, 1), phase)
    }

    #[test]
    fn linear_photon_feels_no_spin_force() {
        for phase in [PhaseSign::Plus, PhaseSign::Minus] {
            let st = on_shell(2, -5, phase);
            assert!(free_maxwell_rows(&st, &ratio(1, 1)).iter().all(Scalar::is_zero));
            let f = spin_force(&FieldJet::from_state(&st).unwrap(), &q(1), None).unwrap();
            assert!(f.force.is_zero() && f.line1.is_zero());
        }
    }

    #[test]
    fn second_printed_line_does_not_vanish_on_shell() {
        // Its brackets are Maxwell rows with the sign of ∂_y reversed.
        let st = on_shell(2, -5, PhaseSign::Plus);
        let f = spin_force(&FieldJet::from_state(&st).unwrap(), &q(1), None).unwrap();
        assert!(!f.line2.is_zero());
        let pure = on_shell(2, 0, PhaseSign::Plus);
        assert!(spin_force(&FieldJet::from_state(&pure).unwrap(), &q(1), None).unwrap().line2.is_zero());
    }

    #[test]
    fn spinning_pure_modes_match_closed_forms() {
        let c = q(1);
        let w = ExactComplex::from_ratio(7, 2);
        for (mode, st) in [(SpinMode::ExHz, on_shell(3, 0, PhaseSign::Plus)), (SpinMode::EzHx, on_shell(0, 4, PhaseSign::Plus))]
        {
            let jet = FieldJet::from_state(&st).unwrap();
            let f = spin_force(&jet, &c, Some(&Spinning { mode, omega: w.clone() })).unwrap().force;
            let expect = spinning_closed_form(mode, &st.amplitudes, &w, &c).unwrap();
            let got = if mode == SpinMode::ExHz { (&f.x, &f.z) } else { (&f.z, &f.x) };
            assert_eq!(got.0, &expect);
            assert!(got.1.is_zero() && f.y.is_zero() && f.t.is_zero());
        }
    }

    #[test]
    fn closed_form_example_values() {
        let f = FieldQuad::y(q(1), q(0), q(0), q(2));
        assert_eq!(spinning_closed_form(SpinMode::ExHz, &f, &q(1), &q(1)).unwrap(), ExactComplex::gaussian(ratio(0, 1), ratio(6, 1)));
        let g = FieldQuad::y(q(0), q(3), q(3), q(0));
        assert!(spinning_closed_form(SpinMode::EzHx, &g, &q(2), &q(1)).unwrap().is_zero());
    }

    #[test]
    fn symmetric_force_on_free_wave() {
        for phase in [PhaseSign::Plus, PhaseSign::Minus] {
            let st = on_shell(1, 2, phase);
            let f = symmetric_force(&FieldJet::from_state(&st).unwrap(), &q(1)).unwrap();
            assert!(f.x.is_zero() && f.z.is_zero() && f.t.is_zero() && f.y.is_zero());
        }
        assert!(symmetric_force(&FieldJet::<ExactComplex>::zero(), &q(1)).unwrap().is_zero());
    }

    #[test]
    fn symmetric_force_on_real_cos_profile() {
        // E_x = H_z = cos(ωt + ky) with ω = ck, sampled at phase θ.
        let (c, k, th) = (2.0, 1.5, 0.7_f64);
        let r = |x: f64| Complex64::new(x, 0.0);
        let (v, d) = (th.cos(), -th.sin());
        let z = r(0.0);
        let jet = FieldJet {
            e: [r(v), z, z],
            h: [z, z, r(v)],
            e_t: [r(c * k * d), z, z],
            h_t: [z, z, r(c * k * d)],
            e_y: [r(k * d), z, z],
            h_y: [z, z, r(k * d)],
        };
        let f = symmetric_force(&jet, &r(c)).unwrap();
        assert!(f.components().iter().all(|x| x.norm() < 1e-12), "{f:?}");
    }

    #[test]
    fn ansatz_violation_is_rejected() {
        let mut jet = FieldJet::<ExactComplex>::zero();
        jet.e[1] = q(1);
        assert!(matches!(symmetric_force(&jet, &q(1)), Err(Error::Precondition(_))));
    }

    #[test]
    fn tensor_structure() {
        let e = [q(1), q(2), q(-3)];
        let h = [q(4), q(0), q(5)];
        let t = EMTensor::from_fields(&e, &h);
        assert!(t.is_symmetric());
        assert_eq!(t.energy, ExactComplex::from_ratio(55, 2));
        // Trace of the Maxwell stress equals the energy density.
        assert_eq!(t.trace(), t.energy);
    }

    #[test]
    fn spin_tensor_is_antisymmetric() {
        let f = FieldQuad::y(q(2), q(3), q(5), q(7));
        assert!(SpinTensor::from_fields(&f, &crate::planewave::y_frame()).unwrap().is_antisymmetric());
    }
}
