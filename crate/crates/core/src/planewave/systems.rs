//! Maxwell systems with complex currents and their correspondence with the
//! bispinor forms.
//!
//! A row reads `(1/c)∂F/∂t + σ·∂G/∂ξ = τ·j_F`, where `j_F` is the electric
//! current for an electric `F` and the magnetic current for a magnetic one,
//! and `4π·j_F = iω₀F`.

use num_rational::BigRational;
use num_traits::Zero;

use super::{normalized_rows, packed, DiracForm, PhaseSign, PhysicalConstants, PlaneWaveState};
use crate::algebra::{ExactComplex, Scalar};
use crate::bridge::{frame, Axis, Direction, DirectionFrame, FieldKind, FieldQuad, Rep, Slot};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MaxwellRow {
    pub time: Slot,
    pub space_sign: i64,
    pub space: Slot,
    pub current_sign: i64,
}

impl MaxwellRow {
    pub fn label(&self) -> String {
        let op = if self.space_sign > 0 { '+' } else { '-' };
        let cur = match self.time.kind {
            FieldKind::Electric => "je",
            FieldKind::Magnetic => "jm",
        };
        let rs = if self.current_sign > 0 { "" } else { "-" };
        format!("dt {} {op} ds {} = {rs}{cur}_{}", self.time, self.space, self.time.component)
    }

    /// `(1/c)∂F/∂t + σ·∂G/∂ξ` on a plane wave.
    pub fn lhs<T: Scalar>(&self, state: &PlaneWaveState<T>, c: &BigRational) -> Result<T> {
        let f = state.amplitudes.get(self.time)?;
        let g = state.amplitudes.get(self.space)?;
        let inv_c = T::from_rational(&c.recip());
        Ok(inv_c * state.dt_factor() * f + T::from_i64(self.space_sign) * state.ds_factor() * g)
    }

    /// `4π` times the printed right-hand side: `τ·iω₀F`.
    pub fn printed_current_4pi<T: Scalar>(&self, state: &PlaneWaveState<T>, constants: &PhysicalConstants) -> Result<T> {
        let f = state.amplitudes.get(self.time)?;
        Ok(T::from_i64(self.current_sign) * T::imag_unit() * T::from_rational(&constants.rest_frequency()) * f)
    }
}

/// A four-row Maxwell system tied to the bispinor form it is read from.
#[derive(Clone, Debug, PartialEq)]
pub struct PrintedSystem {
    /// Report tag.
    pub tag: &'static str,
    pub name: String,
    pub axis: Axis,
    pub direction: Direction,
    pub rows: [MaxwellRow; 4],
    pub paired_form: DiracForm,
    /// False for systems built from the row template rather than transcribed.
    pub printed: bool,
}

fn slot(kind: FieldKind, component: Axis) -> Slot {
    Slot { kind, component }
}

fn e(a: Axis) -> Slot {
    slot(FieldKind::Electric, a)
}

fn h(a: Axis) -> Slot {
    slot(FieldKind::Magnetic, a)
}

fn row(time: Slot, space_sign: i64, space: Slot, current_sign: i64) -> MaxwellRow {
    MaxwellRow { time, space_sign, space, current_sign }
}

fn negate_currents(rows: [MaxwellRow; 4]) -> [MaxwellRow; 4] {
    rows.map(|r| MaxwellRow { current_sign: -r.current_sign, ..r })
}

impl PrintedSystem {
    /// Electric rows with `−∂H_z`, `+∂H_x`; currents `−j^e`, `+j^m`.
    pub fn primed_column() -> Self {
        use Axis::{X, Z};
        Self {
            tag: "Eq 2.14'",
            name: "column, + mass".into(),
            axis: Axis::Y,
            direction: Direction::Negative,
            rows: [
                row(e(X), -1, h(Z), -1),
                row(h(Z), -1, e(X), 1),
                row(e(Z), 1, h(X), -1),
                row(h(X), 1, e(Z), 1),
            ],
            paired_form: DiracForm::MassiveColumnPlus,
            printed: true,
        }
    }

    /// Same left-hand sides as [`Self::primed_column`], opposite currents.
    pub fn primed_row() -> Self {
        let base = Self::primed_column();
        Self {
            tag: "Eq 2.14''",
            name: "row, + mass".into(),
            rows: negate_currents(base.rows),
            paired_form: DiracForm::MassiveRowPlus,
            ..base
        }
    }

    /// Electric rows with `+∂H_z`, `−∂H_x`; currents `−j^e`, `+j^m`.
    pub fn minus_column() -> Self {
        use Axis::{X, Z};
        Self {
            tag: "Eq 2.18",
            name: "column, - mass".into(),
            axis: Axis::Y,
            direction: Direction::Negative,
            rows: [
                row(e(X), 1, h(Z), -1),
                row(h(Z), 1, e(X), 1),
                row(e(Z), -1, h(X), -1),
                row(h(X), -1, e(Z), 1),
            ],
            paired_form: DiracForm::MassiveColumnMinus,
            printed: true,
        }
    }

    /// [`Self::minus_column`] with every current reversed.
    pub fn minus_row() -> Self {
        let base = Self::minus_column();
        Self {
            tag: "Eq 2.17",
            name: "row, - mass".into(),
            rows: negate_currents(base.rows),
            paired_form: DiracForm::MassiveRowMinus,
            printed: false,
            ..base
        }
    }

    /// Transcribed per-axis block for a positive-direction wave. The printed
    /// spatial derivative is read as the derivative along the block's own axis.
    pub fn per_axis_printed(axis: Axis) -> Self {
        use Axis::{X, Y, Z};
        let rows = match axis {
            X => [row(e(Y), 1, h(Z), -1), row(h(Z), 1, e(Y), 1), row(e(Z), -1, h(Y), -1), row(h(Y), -1, e(Z), 1)],
            Y => [row(e(Z), 1, h(X), -1), row(h(X), 1, e(Z), 1), row(e(X), -1, h(Z), -1), row(h(Z), -1, e(X), 1)],
            Z => [row(e(X), 1, h(Y), -1), row(h(Y), 1, e(X), 1), row(e(Y), -1, h(X), -1), row(h(X), -1, e(Y), 1)],
        };
        Self {
            tag: "Eq 5.1",
            name: format!("per-axis {axis}+"),
            axis,
            direction: Direction::Positive,
            rows,
            paired_form: DiracForm::MassiveColumnMinus,
            printed: true,
        }
    }

    /// Rows of the minus-mass column form read off the layout `(a, b, c, d)`
    /// of a frame:
    /// `∂a + ∂d = −j_a`, `∂d + ∂a = j_d`, `∂b − ∂c = −j_b`, `∂c − ∂b = j_c`.
    pub fn template(axis: Axis, direction: Direction) -> Self {
        let f = frame(axis, direction);
        let [a, b, c, d] = f.layout;
        Self {
            tag: if direction == Direction::Positive { "Eq 5.1" } else { "Eq 2.18" },
            name: format!("template {axis}{direction}"),
            axis,
            direction,
            rows: [row(a, 1, d, -1), row(d, 1, a, 1), row(b, -1, c, -1), row(c, -1, b, 1)],
            paired_form: DiracForm::MassiveColumnMinus,
            printed: false,
        }
    }

    /// The three transcribed per-axis systems followed by the y-wave systems.
    pub fn catalogue() -> Vec<Self> {
        vec![
            Self::primed_column(),
            Self::primed_row(),
            Self::minus_column(),
            Self::minus_row(),
            Self::per_axis_printed(Axis::X),
            Self::per_axis_printed(Axis::Y),
            Self::per_axis_printed(Axis::Z),
        ]
    }

    pub fn frame(&self) -> DirectionFrame {
        frame(self.axis, self.direction)
    }

    /// Left-hand sides in row order.
    pub fn lhs<T: Scalar>(&self, state: &PlaneWaveState<T>, c: &BigRational) -> Result<[T; 4]> {
        let v: Result<Vec<T>> = self.rows.iter().map(|r| r.lhs(state, c)).collect();
        Ok(v?.try_into().expect("four rows"))
    }
}

/// Outcome of matching the induced currents of a bispinor form with the
/// printed ones.
#[derive(Clone, Debug, PartialEq)]
pub struct CurrentMatch<T> {
    /// `J_induced = coeff·4π·J_printed`, shared by every row.
    pub coeff: T,
    pub rows_match: [bool; 4],
    /// `MaxwellLHS − normalised bispinor row`, in system row order.
    pub induced: [T; 4],
    /// `4π·J_printed`, in system row order.
    pub printed: [T; 4],
}

impl<T: Scalar> CurrentMatch<T> {
    pub fn all_match(&self) -> bool {
        self.rows_match.iter().all(|&b| b)
    }
}

/// Bispinor rows of `form` on the state, normalised and reordered to the
/// system's row order (each row is matched through its time-derivative slot).
fn dirac_rows_in_system_order<T: Scalar>(
    system: &PrintedSystem,
    form: DiracForm,
    rep: Rep,
    state: &PlaneWaveState<T>,
    constants: &PhysicalConstants,
) -> Result<[T; 4]> {
    if state.amplitudes.axis != system.axis {
        return Err(Error::input(format!(
            "state propagates along {} but the system along {}",
            state.amplitudes.axis, system.axis
        )));
    }
    let f = system.frame();
    let psi = packed(state, &f, rep)?;
    let residual = super::apply_to_bispinor(form, &psi, state, constants)?;
    let norm = normalized_rows(form, rep, &residual, constants)?;
    let mut out: Vec<T> = Vec::with_capacity(4);
    for r in &system.rows {
        let k = f
            .layout
            .iter()
            .position(|s| *s == r.time)
            .ok_or_else(|| Error::input(format!("{} is not a slot of frame {}", r.time, f.label())))?;
        out.push(norm[k].clone());
    }
    Ok(out.try_into().expect("four rows"))
}

/// Induced-versus-printed currents for `form` acting on the state packed in
/// the system's frame, optionally charge conjugated.
pub fn current_correspondence_with<T: Scalar>(
    system: &PrintedSystem,
    form: DiracForm,
    rep: Rep,
    state: &PlaneWaveState<T>,
    constants: &PhysicalConstants,
) -> Result<CurrentMatch<T>> {
    if constants.is_massless() {
        return Err(Error::Degenerate("current correspondence needs m > 0".into()));
    }
    if state.amplitudes.is_zero() {
        return Err(Error::Degenerate("all amplitudes vanish".into()));
    }
    let dirac = dirac_rows_in_system_order(system, form, rep, state, constants)?;
    let lhs = system.lhs(state, &constants.c)?;
    let induced: [T; 4] = std::array::from_fn(|j| lhs[j].clone() - dirac[j].clone());
    let printed: Vec<T> = system
        .rows
        .iter()
        .map(|r| r.printed_current_4pi(state, constants))
        .collect::<Result<_>>()?;
    let printed: [T; 4] = printed.try_into().expect("four rows");
    let pivot = printed
        .iter()
        .position(|p| !p.is_zero())
        .ok_or_else(|| Error::Degenerate("no row carries a current".into()))?;
    let coeff = induced[pivot].div_ref(&printed[pivot]).expect("nonzero pivot");
    let rows_match = std::array::from_fn(|j| induced[j].matches(&coeff.mul_ref(&printed[j])));
    Ok(CurrentMatch { coeff, rows_match, induced, printed })
}

/// [`current_correspondence_with`] using the system's own form on `ψ`.
pub fn current_correspondence<T: Scalar>(
    system: &PrintedSystem,
    state: &PlaneWaveState<T>,
    constants: &PhysicalConstants,
) -> Result<CurrentMatch<T>> {
    current_correspondence_with(system, system.paired_form, Rep::Standard, state, constants)
}

/// `MaxwellLHS − coeff·4π·J_printed` per row; with the calibrated `coeff`
/// this equals the normalised bispinor rows.
pub fn per_axis_residuals<T: Scalar>(
    system: &PrintedSystem,
    state: &PlaneWaveState<T>,
    constants: &PhysicalConstants,
    coeff: &T,
) -> Result<[T; 4]> {
    let lhs = system.lhs(state, &constants.c)?;
    let mut out: Vec<T> = Vec::with_capacity(4);
    for (l, r) in lhs.into_iter().zip(&system.rows) {
        out.push(l - coeff.mul_ref(&r.printed_current_4pi(state, constants)?));
    }
    Ok(out.try_into().expect("four rows"))
}

/// Bispinor rows of the system's form in system row order.
pub fn dirac_rows<T: Scalar>(
    system: &PrintedSystem,
    state: &PlaneWaveState<T>,
    constants: &PhysicalConstants,
) -> Result<[T; 4]> {
    dirac_rows_in_system_order(system, system.paired_form, Rep::Standard, state, constants)
}

/// The shared coefficient of a system, fixed once from an exact reference
/// state; it depends only on `c`.
pub fn calibrate_coeff(system: &PrintedSystem, constants: &PhysicalConstants) -> Result<BigRational> {
    let constants = if constants.is_massless() {
        constants.with_mass(crate::algebra::ratio(1, 1))?
    } else {
        constants.clone()
    };
    let amps = FieldQuad::<ExactComplex>::new(
        system.axis,
        ExactComplex::from_i64(1),
        ExactComplex::from_i64(2),
        ExactComplex::from_i64(3),
        ExactComplex::from_i64(5),
    );
    let state = PlaneWaveState::new(amps, crate::algebra::ratio(2, 1), crate::algebra::ratio(1, 1), PhaseSign::Plus);
    let m = current_correspondence(system, &state, &constants)?;
    if !m.all_match() {
        return Err(Error::Degenerate(format!("{} has no shared current coefficient", system.tag)));
    }
    match m.coeff.to_gaussian() {
        Some((re, im)) if im.is_zero() => Ok(re),
        _ => Err(Error::Degenerate(format!("{} coefficient is not real: {}", system.tag, m.coeff))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;
    use num_traits::One;

    type C = ExactComplex;

    fn c(n: i64) -> C {
        C::from_i64(n)
    }

    fn consts() -> PhysicalConstants {
        PhysicalConstants::new(ratio(2, 1), ratio(1, 3), ratio(3, 5)).unwrap()
    }

    fn state(axis: Axis) -> PlaneWaveState<C> {
        PlaneWaveState::new(
            FieldQuad::new(axis, c(1) + C::imag_unit(), c(-2), c(3), C::from_ratio(1, 2)),
            ratio(7, 3),
            ratio(2, 5),
            PhaseSign::Minus,
        )
    }

    fn inv_c(k: &PhysicalConstants) -> BigRational {
        BigRational::one() / &k.c
    }

    #[test]
    fn hermitian_conjugate_pair_flips_current() {
        let k = consts();
        let a = current_correspondence(&PrintedSystem::primed_column(), &state(Axis::Y), &k).unwrap();
        let b = current_correspondence(&PrintedSystem::primed_row(), &state(Axis::Y), &k).unwrap();
        assert!(a.all_match() && b.all_match());
        assert_eq!(a.coeff, -C::from_rational(&inv_c(&k)));
        assert_eq!(b.coeff, -a.coeff);
    }

    #[test]
    fn minus_systems() {
        let k = consts();
        let a = current_correspondence(&PrintedSystem::minus_column(), &state(Axis::Y), &k).unwrap();
        let b = current_correspondence(&PrintedSystem::minus_row(), &state(Axis::Y), &k).unwrap();
        assert!(a.all_match() && b.all_match());
        assert_eq!(a.coeff, C::from_rational(&inv_c(&k)));
        assert_eq!(b.coeff, -a.coeff);
    }

    #[test]
    fn conjugated_minus_form_reads_as_primed_column_system() {
        let k = consts();
        let m = current_correspondence_with(
            &PrintedSystem::primed_column(),
            DiracForm::MassiveColumnMinus,
            Rep::RetardedConjugated,
            &state(Axis::Y),
            &k,
        )
        .unwrap();
        assert!(m.all_match());
        assert_eq!(m.coeff, C::from_rational(&inv_c(&k)));
    }

    #[test]
    fn printed_per_axis_blocks_follow_template() {
        for axis in Axis::ALL {
            assert_eq!(
                PrintedSystem::per_axis_printed(axis).rows,
                PrintedSystem::template(axis, Direction::Positive).rows
            );
        }
        assert_eq!(PrintedSystem::template(Axis::Y, Direction::Negative).rows, PrintedSystem::minus_column().rows);
    }

    #[test]
    fn per_axis_systems_share_the_coefficient() {
        let k = consts();
        for axis in Axis::ALL {
            let sys = PrintedSystem::per_axis_printed(axis);
            let m = current_correspondence(&sys, &state(axis), &k).unwrap();
            assert!(m.all_match(), "{axis}");
            assert_eq!(m.coeff, C::from_rational(&inv_c(&k)));
            let coeff = C::from_rational(&calibrate_coeff(&sys, &k).unwrap());
            let res = per_axis_residuals(&sys, &state(axis), &k, &coeff).unwrap();
            assert_eq!(res, dirac_rows(&sys, &state(axis), &k).unwrap());
        }
    }

    #[test]
    fn zero_mass_is_degenerate_and_reduces_to_free_rows() {
        let k = consts().with_mass(BigRational::zero()).unwrap();
        let sys = PrintedSystem::primed_column();
        assert!(matches!(current_correspondence(&sys, &state(Axis::Y), &k), Err(Error::Degenerate(_))));
        assert_eq!(dirac_rows(&sys, &state(Axis::Y), &k).unwrap(), sys.lhs(&state(Axis::Y), &k.c).unwrap());
    }

    #[test]
    fn zero_state_is_degenerate() {
        let s = state(Axis::Y).with_amplitudes(FieldQuad::zero(Axis::Y));
        assert!(matches!(
            current_correspondence(&PrintedSystem::primed_column(), &s, &consts()),
            Err(Error::Degenerate(_))
        ));
    }
}
