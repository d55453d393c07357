//! Bilinear covariants `ψ⁺Âψ` and their electromagnetic closed forms.
//!
//! Closed forms are written for the y-wave layout `(E_x, E_z, iH_x, iH_z)`.
//! In any other frame the same forms apply to the fields in that frame's
//! layout order, so `em_expected_in_frame` repacks before evaluating.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::algebra::{dirac_matrix, Matrix4, MatrixKind, Scalar};
use crate::bridge::{cross, frame, formal_adjoint, to_bispinor, Axis, Direction, DirectionFrame, FieldQuad};
use crate::error::{Error, Result};

/// Row/column labels of the printed tensor table: row `r` holds `μ =
/// TENSOR_LABELS[r]`, column `c` holds `ν = TENSOR_LABELS[c]`.
pub const TENSOR_LABELS: [u8; 4] = [1, 2, 3, 0];

#[derive(Clone, Debug, PartialEq)]
pub struct BilinearResult<T> {
    pub kind: MatrixKind,
    pub value: T,
    pub em_expected: T,
    pub matched: bool,
}

/// Field invariants and densities in Gaussian units from the real parts of
/// a quad.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EMQuantities {
    /// `(E² − H²)/8π`.
    pub lagrangian_invariant: f64,
    /// `(E² + H²)/8π`.
    pub energy_density: f64,
    /// `c/4π · E×H`.
    pub poynting: [f64; 3],
    /// `S/c²`.
    pub momentum_density: [f64; 3],
    pub e_dot_h: f64,
    /// `(E·H)²`.
    pub second_invariant: f64,
}

impl EMQuantities {
    pub fn from_fields<T: Scalar>(fields: &FieldQuad<T>, c: f64) -> Self {
        let re = |v: [T; 3]| v.map(|x| x.to_c64().re);
        let e = re(fields.e_vector());
        let h = re(fields.h_vector());
        let dot = |a: &[f64; 3], b: &[f64; 3]| a.iter().zip(b).map(|(x, y)| x * y).sum::<f64>();
        let (e2, h2, eh) = (dot(&e, &e), dot(&h, &h), dot(&e, &h));
        let exh = cross(&e.map(|x| Complex64::new(x, 0.0)), &h.map(|x| Complex64::new(x, 0.0))).map(|z| z.re);
        let poynting = exh.map(|x| c / (4.0 * PI) * x);
        Self {
            lagrangian_invariant: (e2 - h2) / (8.0 * PI),
            energy_density: (e2 + h2) / (8.0 * PI),
            poynting,
            momentum_density: poynting.map(|s| s / (c * c)),
            e_dot_h: eh,
            second_invariant: eh * eh,
        }
    }
}

/// `ψ⁺·M·ψ` with the formal adjoint.
pub fn bilinear<T: Scalar>(kind: MatrixKind, fields: &FieldQuad<T>, frame: &DirectionFrame) -> Result<T> {
    let psi = to_bispinor(fields, frame)?;
    let m = dirac_matrix::<T>(kind)?;
    Ok(m.sandwich(&formal_adjoint(&psi)?, &psi.c))
}

/// The printed closed form for `kind`, reading the quad's values in
/// `(E_x, E_z, H_x, H_z)` roles.
pub fn em_expected<T: Scalar>(kind: MatrixKind, fields: &FieldQuad<T>) -> Result<T> {
    let [ex, ez, hx, hz] = fields.values();
    closed_form(kind, &ex, &ez, &hx, &hz)
}

/// [`em_expected`] applied to the fields in `frame`'s layout order.
pub fn em_expected_in_frame<T: Scalar>(
    kind: MatrixKind,
    fields: &FieldQuad<T>,
    frame: &DirectionFrame,
) -> Result<T> {
    let v = fields.values();
    let [p1, p2, p3, p4] = match frame.direction {
        Direction::Negative => v,
        Direction::Positive => {
            let [a, b, c, d] = v;
            [b, a, d, c]
        }
    };
    closed_form(kind, &p1, &p2, &p3, &p4)
}

fn closed_form<T: Scalar>(kind: MatrixKind, ex: &T, ez: &T, hx: &T, hz: &T) -> Result<T> {
    let kind = kind.validate()?;
    let sq = |x: &T| x.mul_ref(x);
    let n = |k: i64| T::from_i64(k);
    let i = T::imag_unit();
    // E×H for the y-wave roles; only the y component survives.
    let y_fields = FieldQuad::y(ex.clone(), ez.clone(), hx.clone(), hz.clone());
    let exh = cross(&y_fields.e_vector(), &y_fields.h_vector());
    let e_dot_h = n(2) * (ex.mul_ref(hx) + ez.mul_ref(hz));
    let pair_ez = ex.mul_ref(ez) - hx.mul_ref(hz);
    let mixed_plus = ex.mul_ref(hz) + ez.mul_ref(hx);
    let mixed_diff = ex.mul_ref(hx) - ez.mul_ref(hz);
    Ok(match kind {
        MatrixKind::Beta => sq(ex) + sq(ez) - sq(hx) - sq(hz),
        MatrixKind::Alpha0 => sq(ex) + sq(ez) + sq(hx) + sq(hz),
        MatrixKind::Alpha1 => n(-2) * exh[0].clone(),
        MatrixKind::Alpha2 => n(-2) * exh[1].clone(),
        MatrixKind::Alpha3 => n(-2) * exh[2].clone(),
        MatrixKind::Alpha5 | MatrixKind::Pseudovector(0) => e_dot_h,
        MatrixKind::Pseudovector(1) => n(-2) * i * pair_ez,
        MatrixKind::Pseudovector(2) => T::zero(),
        MatrixKind::Pseudovector(3) => -i * (sq(ex) - sq(ez) - sq(hx) + sq(hz)),
        MatrixKind::Pseudovector(mu) => {
            return Err(Error::UnsupportedKind(format!("pseudovector({mu})")));
        }
        MatrixKind::Tensor(mu, nu) => {
            let pos = |l: u8| TENSOR_LABELS.iter().position(|&x| x == l).expect("validated index");
            let (r, c) = (pos(mu), pos(nu));
            match (r, c) {
                (0, 1) => sq(ex) - sq(ez) + sq(hx) - sq(hz),
                (0, 3) => n(-2) * mixed_plus,
                (1, 0) => -(sq(ex) - sq(ez) - sq(hx) + sq(hz)),
                (1, 2) => n(2) * pair_ez,
                (2, 1) => n(-2) * pair_ez,
                (2, 3) => n(-2) * mixed_diff,
                (3, 0) => n(2) * mixed_plus,
                (3, 2) => n(2) * mixed_diff,
                _ => T::zero(),
            }
        }
    })
}

/// Kinds that have a printed closed form.
pub fn table_kinds() -> Vec<MatrixKind> {
    MatrixKind::enumerate()
        .into_iter()
        .filter(|k| *k != MatrixKind::Pseudovector(4))
        .collect()
}

/// Every closed form against its matrix-computed bilinear.
pub fn verify_table<T: Scalar>(fields: &FieldQuad<T>, frame: &DirectionFrame) -> Result<Vec<BilinearResult<T>>> {
    BilinearTable::new()?.verify(fields, frame)
}

/// Prebuilt matrices for every [`table_kinds`] entry, for repeated checks.
#[derive(Clone, Debug)]
pub struct BilinearTable<T> {
    entries: Vec<(MatrixKind, Matrix4<T>)>,
}

impl<T: Scalar> BilinearTable<T> {
    pub fn new() -> Result<Self> {
        let entries = table_kinds().into_iter().map(|k| Ok((k, dirac_matrix::<T>(k)?))).collect::<Result<_>>()?;
        Ok(Self { entries })
    }

    pub fn kinds(&self) -> impl Iterator<Item = MatrixKind> + '_ {
        self.entries.iter().map(|(k, _)| *k)
    }

    pub fn verify(&self, fields: &FieldQuad<T>, frame: &DirectionFrame) -> Result<Vec<BilinearResult<T>>> {
        let psi = to_bispinor(fields, frame)?;
        let row = formal_adjoint(&psi)?;
        self.entries
            .iter()
            .map(|(kind, m)| {
                let value = m.sandwich(&row, &psi.c);
                let em_expected = em_expected_in_frame(*kind, fields, frame)?;
                let matched = value.matches(&em_expected);
                Ok(BilinearResult { kind: *kind, value, em_expected, matched })
            })
            .collect()
    }
}

/// `ψ⁺α₂ψ` in the negative y-frame.
pub fn momentum_bilinear<T: Scalar>(fields: &FieldQuad<T>) -> Result<T> {
    if fields.axis != Axis::Y {
        return Err(Error::input("momentum bilinear is defined for y-waves"));
    }
    bilinear(MatrixKind::Alpha2, fields, &frame(Axis::Y, Direction::Negative))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ExactComplex;

    type C = ExactComplex;

    fn c(n: i64) -> C {
        C::from_i64(n)
    }

    fn y_neg() -> DirectionFrame {
        frame(Axis::Y, Direction::Negative)
    }

    #[test]
    fn scalar_bilinear_of_pure_electric_field() {
        let q = FieldQuad::y(c(1), c(0), c(0), c(0));
        assert_eq!(bilinear(MatrixKind::Beta, &q, &y_neg()).unwrap(), c(1));
    }

    #[test]
    fn energy_bilinear() {
        let q = FieldQuad::y(c(1), c(0), c(0), c(1));
        assert_eq!(bilinear(MatrixKind::Alpha0, &q, &y_neg()).unwrap(), c(2));
    }

    #[test]
    fn zero_fields_give_zero_everywhere() {
        let q = FieldQuad::<C>::zero(Axis::Y);
        for k in MatrixKind::enumerate() {
            assert!(bilinear(k, &q, &y_neg()).unwrap().is_zero());
        }
    }

    #[test]
    fn pseudoscalar_closed_form() {
        let q = FieldQuad::y(c(1), c(0), c(1), c(0));
        assert_eq!(em_expected(MatrixKind::Alpha5, &q).unwrap(), c(2));
        assert!(em_expected(MatrixKind::Pseudovector(2), &q).unwrap().is_zero());
        assert!(em_expected(MatrixKind::Tensor(0, 2), &q).unwrap().is_zero());
        assert!(matches!(
            em_expected(MatrixKind::Pseudovector(4), &q),
            Err(Error::UnsupportedKind(_))
        ));
    }

    #[test]
    fn null_field_kills_both_invariants() {
        let q = FieldQuad::y(c(1), c(0), c(0), c(1));
        assert!(bilinear(MatrixKind::Beta, &q, &y_neg()).unwrap().is_zero());
        assert!(bilinear(MatrixKind::Alpha5, &q, &y_neg()).unwrap().is_zero());
    }

    #[test]
    fn energy_density_route() {
        let q = FieldQuad::y(c(3), c(-1), c(2), c(5)).map(|x| x.to_c64());
        let p = bilinear(MatrixKind::Alpha0, &q, &y_neg()).unwrap();
        let em = EMQuantities::from_fields(&q, 1.0);
        assert!((p.re - 8.0 * PI * em.energy_density).abs() < 1e-12);
    }

    #[test]
    fn momentum_density_matches_poynting() {
        let cl = 3.0;
        let q = FieldQuad::y(c(3), c(-1), c(2), c(5)).map(|x| x.to_c64());
        let em = EMQuantities::from_fields(&q, cl);
        let b = momentum_bilinear(&q).unwrap().re;
        assert!((-b / (8.0 * PI * cl) - em.momentum_density[1]).abs() < 1e-12);
        assert!((em.poynting[1] - cl * cl * em.momentum_density[1]).abs() < 1e-12);
    }
}
