use num_rational::BigRational;

use crate::algebra::{MatrixKind, Scalar};
use crate::bilinears::bilinear;
use crate::error::{Error, Result};
use crate::planewave::{y_frame, PhysicalConstants, PlaneWaveState};

/// Termwise quantum and electromagnetic Lagrangians of a y-axis plane wave.
///
/// Quantum terms: `(1/c)ψ⁺∂ₜψ`, `−ψ⁺α₂∂_ξψ`, `−i(ω₀/c)ψ⁺βψ`; their sum is
/// `ψ⁺Mψ/(iħc)` for the massive column operator `M`.
/// EM terms, scaled by 4π: `∂ₜΣF²`, `2c·[E×H]_y`-flux term, `−iω₀(E²−H²)`.
#[derive(Clone, Debug, PartialEq)]
pub struct LagrangianEval<T> {
    pub quantum: [T; 3],
    pub em: [T; 3],
    /// `−4π(j_E·E − j_H·H)` with `4πj = iω₀F`; equals the third EM term.
    pub current_form: T,
    /// Shared `quantum[i] / em[i]` over the nonzero terms.
    pub coeff: Option<T>,
    pub proportional: bool,
    pub quantum_total: T,
    pub em_total: T,
}

impl<T: Scalar> LagrangianEval<T> {
    pub fn on_shell(&self) -> bool {
        self.quantum_total.is_zero() && self.em_total.is_zero()
    }
}

pub fn lagrangian_eval<T: Scalar>(
    state: &PlaneWaveState<T>,
    constants: &PhysicalConstants,
) -> Result<LagrangianEval<T>> {
    let f = &state.amplitudes;
    if f.axis != crate::bridge::Axis::Y {
        return Err(Error::Precondition("Lagrangian terms are written for y-axis waves".into()));
    }
    let fr = y_frame();
    let c = T::from_rational(&constants.c);
    let w0 = T::from_rational(&constants.rest_frequency());
    let i = T::imag_unit();
    let dt = state.dt_factor();
    let ds = state.ds_factor();
    let inv_c = T::from_rational(&(BigRational::from_integer(1.into()) / &constants.c));

    let psi_psi = bilinear(MatrixKind::Alpha0, f, &fr)?;
    let psi_a2 = bilinear(MatrixKind::Alpha2, f, &fr)?;
    let psi_b = bilinear(MatrixKind::Beta, f, &fr)?;
    let quantum = [
        dt.mul_ref(&psi_psi).mul_ref(&inv_c),
        -ds.mul_ref(&psi_a2),
        -(i.mul_ref(&w0).mul_ref(&inv_c).mul_ref(&psi_b)),
    ];

    let inv = f.invariant_difference();
    let two = T::from_i64(2);
    let em = [
        dt.mul_ref(&f.energy_sum()),
        c.mul_ref(&two).mul_ref(&ds).mul_ref(&f.poynting_axis()),
        -(i.mul_ref(&w0).mul_ref(&inv)),
    ];

    let current = f.map(|x| i.mul_ref(&w0).mul_ref(x));
    let je: T = current.e_vector().iter().zip(f.e_vector().iter()).fold(T::zero(), |a, (j, e)| a + j.mul_ref(e));
    let jh: T = current.h_vector().iter().zip(f.h_vector().iter()).fold(T::zero(), |a, (j, h)| a + j.mul_ref(h));
    let current_form = -(je - jh);

    let (coeff, proportional) = shared_ratio(&quantum, &em);
    let quantum_total = quantum.iter().fold(T::zero(), |a, x| a + x.clone());
    let em_total = em.iter().fold(T::zero(), |a, x| a + x.clone());
    Ok(LagrangianEval { quantum, em, current_form, coeff, proportional, quantum_total, em_total })
}

/// One ratio for every pair; a pair that is zero on both sides is skipped.
fn shared_ratio<T: Scalar>(q: &[T; 3], e: &[T; 3]) -> (Option<T>, bool) {
    let mut coeff: Option<T> = None;
    for (a, b) in q.iter().zip(e) {
        match (a.is_zero(), b.is_zero()) {
            (true, true) => continue,
            (_, true) | (true, _) => return (None, false),
            _ => {}
        }
        let r = a.div_ref(b).expect("nonzero denominator");
        match &coeff {
            None => coeff = Some(r),
            Some(c0) if c0.matches(&r) => {}
            Some(_) => return (coeff, false),
        }
    }
    let ok = coeff.is_some();
    (coeff, ok)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ratio, ExactComplex};
    use crate::bridge::FieldQuad;
    use crate::planewave::{decoded_null_space, DiracForm, PhaseSign};

    fn q(n: i64) -> ExactComplex {
        ExactComplex::from_i64(n)
    }

    #[test]
    fn terms_share_inverse_c() {
        let k = PhysicalConstants::new(ratio(3, 1), ratio(1, 1), ratio(2, 1)).unwrap();
        let s = PlaneWaveState::new(FieldQuad::y(q(1), q(2), q(3), q(5)), ratio(2, 1), ratio(1, 1), PhaseSign::Plus);
        let l = lagrangian_eval(&s, &k).unwrap();
        assert!(l.proportional);
        assert_eq!(l.coeff.unwrap(), ExactComplex::from_ratio(1, 3));
        assert_eq!(l.current_form, l.em[2]);
    }

    #[test]
    fn on_shell_states_vanish_exactly() {
        let k = PhysicalConstants::new(ratio(2, 1), ratio(1, 1), ratio(1, 1)).unwrap();
        for t in [ratio(1, 2), ratio(3, 1), ratio(-2, 5)] {
            let (w, kk) = k.massive_shell(&t).unwrap();
            for phase in [PhaseSign::Plus, PhaseSign::Minus] {
                let sols = decoded_null_space::<ExactComplex>(
                    DiracForm::MassiveColumnPlus,
                    &w,
                    &kk,
                    phase,
                    &k,
                    &y_frame(),
                )
                .unwrap();
                assert!(!sols.is_empty());
                for f in sols {
                    let l = lagrangian_eval(&PlaneWaveState::new(f, w.clone(), kk.clone(), phase), &k).unwrap();
                    assert!(l.quantum_total.is_zero() && l.em_total.is_zero());
                }
            }
        }
    }
}
