//! Packing of transverse electromagnetic fields into bispinors and back.
//!
//! A [`FieldQuad`] always stores its components in the order used by the
//! negative-direction layout of its axis; the positive-direction layout is
//! the same quad with each (E, H) pair swapped.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{Matrix4, MatrixKind, Scalar, Vec4};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    pub fn index(self) -> usize {
        match self {
            Axis::X => 0,
            Axis::Y => 1,
            Axis::Z => 2,
        }
    }

    /// Transverse components `(a, b)` in negative-layout order.
    pub fn transverse(self) -> (Axis, Axis) {
        match self {
            Axis::Y => (Axis::X, Axis::Z),
            Axis::X => (Axis::Z, Axis::Y),
            Axis::Z => (Axis::Y, Axis::X),
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axis::X => "x",
            Axis::Y => "y",
            Axis::Z => "z",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Negative,
    Positive,
}

impl Direction {
    pub const ALL: [Direction; 2] = [Direction::Negative, Direction::Positive];

    pub fn sign(self) -> i64 {
        match self {
            Direction::Negative => -1,
            Direction::Positive => 1,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Negative => "-",
            Direction::Positive => "+",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rep {
    Standard,
    Primed,
    RetardedConjugated,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Electric,
    Magnetic,
}

/// One field component, e.g. `H_z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Slot {
    pub kind: FieldKind,
    pub component: Axis,
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            FieldKind::Electric => "E",
            FieldKind::Magnetic => "H",
        };
        write!(f, "{k}{}", self.component)
    }
}

/// Transverse fields of a wave travelling along `axis`.
#[derive(Clone, Debug, PartialEq)]
pub struct FieldQuad<T> {
    pub axis: Axis,
    pub e_a: T,
    pub e_b: T,
    pub h_a: T,
    pub h_b: T,
}

impl<T: Scalar> FieldQuad<T> {
    pub fn new(axis: Axis, e_a: T, e_b: T, h_a: T, h_b: T) -> Self {
        Self { axis, e_a, e_b, h_a, h_b }
    }

    /// `(E_x, E_z, H_x, H_z)` of a y-wave.
    pub fn y(ex: T, ez: T, hx: T, hz: T) -> Self {
        Self::new(Axis::Y, ex, ez, hx, hz)
    }

    pub fn zero(axis: Axis) -> Self {
        Self::new(axis, T::zero(), T::zero(), T::zero(), T::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.values().iter().all(Scalar::is_zero)
    }

    /// `[e_a, e_b, h_a, h_b]`.
    pub fn values(&self) -> [T; 4] {
        [self.e_a.clone(), self.e_b.clone(), self.h_a.clone(), self.h_b.clone()]
    }

    pub fn from_values(axis: Axis, v: [T; 4]) -> Self {
        let [e_a, e_b, h_a, h_b] = v;
        Self::new(axis, e_a, e_b, h_a, h_b)
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> FieldQuad<U> {
        FieldQuad::from_values(self.axis, self.values().map(|x| f(&x)))
    }

    /// Slots in `values()` order.
    pub fn slots(axis: Axis) -> [Slot; 4] {
        let (a, b) = axis.transverse();
        let e = |c| Slot { kind: FieldKind::Electric, component: c };
        let h = |c| Slot { kind: FieldKind::Magnetic, component: c };
        [e(a), e(b), h(a), h(b)]
    }

    pub fn get(&self, slot: Slot) -> Result<T> {
        Self::slots(self.axis)
            .iter()
            .position(|s| *s == slot)
            .map(|i| self.values()[i].clone())
            .ok_or_else(|| Error::input(format!("{slot} is longitudinal for a {}-wave", self.axis)))
    }

    pub fn e_vector(&self) -> [T; 3] {
        self.vector(FieldKind::Electric)
    }

    pub fn h_vector(&self) -> [T; 3] {
        self.vector(FieldKind::Magnetic)
    }

    fn vector(&self, kind: FieldKind) -> [T; 3] {
        let mut out: [T; 3] = std::array::from_fn(|_| T::zero());
        for (slot, v) in Self::slots(self.axis).iter().zip(self.values()) {
            if slot.kind == kind {
                out[slot.component.index()] = v;
            }
        }
        out
    }

    /// Builds the quad from full 3-vectors; the longitudinal pair must vanish.
    pub fn from_vectors(axis: Axis, e: &[T; 3], h: &[T; 3]) -> Result<Self> {
        let l = axis.index();
        if !e[l].is_zero() || !h[l].is_zero() {
            return Err(Error::input(format!("longitudinal field component along {axis}")));
        }
        let (a, b) = axis.transverse();
        Ok(Self::new(
            axis,
            e[a.index()].clone(),
            e[b.index()].clone(),
            h[a.index()].clone(),
            h[b.index()].clone(),
        ))
    }

    /// `[E×H]` along the propagation axis.
    pub fn poynting_axis(&self) -> T {
        let e = self.e_vector();
        let h = self.h_vector();
        cross(&e, &h)[self.axis.index()].clone()
    }

    /// `E·E + H·H`.
    pub fn energy_sum(&self) -> T {
        self.values().iter().fold(T::zero(), |acc, v| acc + v.mul_ref(v))
    }

    /// `E·E − H·H`.
    pub fn invariant_difference(&self) -> T {
        let [ea, eb, ha, hb] = self.values();
        ea.mul_ref(&ea) + eb.mul_ref(&eb) - ha.mul_ref(&ha) - hb.mul_ref(&hb)
    }

    /// `E·H`.
    pub fn e_dot_h(&self) -> T {
        self.e_a.mul_ref(&self.h_a) + self.e_b.mul_ref(&self.h_b)
    }
}

pub fn cross<T: Scalar>(a: &[T; 3], b: &[T; 3]) -> [T; 3] {
    [
        a[1].mul_ref(&b[2]) - a[2].mul_ref(&b[1]),
        a[2].mul_ref(&b[0]) - a[0].mul_ref(&b[2]),
        a[0].mul_ref(&b[1]) - a[1].mul_ref(&b[0]),
    ]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Layout {
    pub axis: Axis,
    pub direction: Direction,
    pub rep: Rep,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Bispinor<T> {
    pub c: Vec4<T>,
    pub layout: Layout,
}

impl<T: Scalar> Bispinor<T> {
    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Scalar::is_zero)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DirectionFrame {
    pub axis: Axis,
    pub direction: Direction,
    /// Each of `α₁, α₂, α₃` with the coordinate axis it is attached to.
    pub matrix_triple: [(MatrixKind, Axis); 3],
    /// Field slot feeding each bispinor component; magnetic slots carry a
    /// factor `i` when packed.
    pub layout: [Slot; 4],
}

impl DirectionFrame {
    /// The matrix attached to the propagation axis.
    pub fn propagation_matrix(&self) -> MatrixKind {
        self.matrix_triple
            .iter()
            .find(|(_, a)| *a == self.axis)
            .map(|(k, _)| *k)
            .expect("every frame attaches a matrix to its own axis")
    }

    pub fn label(&self) -> String {
        let slots: Vec<String> = self
            .layout
            .iter()
            .map(|s| match s.kind {
                FieldKind::Electric => s.to_string(),
                FieldKind::Magnetic => format!("i{s}"),
            })
            .collect();
        format!("{}{} ({})", self.axis, self.direction, slots.join(", "))
    }

    /// Position in the quad's `values()` of the field feeding component `i`.
    fn source_index(&self, i: usize) -> usize {
        match self.direction {
            Direction::Negative => i,
            Direction::Positive => [1, 0, 3, 2][i],
        }
    }
}

fn triple(axis: Axis) -> [(MatrixKind, Axis); 3] {
    use MatrixKind::{Alpha1, Alpha2, Alpha3};
    match axis {
        Axis::Y => [(Alpha1, Axis::X), (Alpha2, Axis::Y), (Alpha3, Axis::Z)],
        Axis::X => [(Alpha2, Axis::X), (Alpha3, Axis::Y), (Alpha1, Axis::Z)],
        Axis::Z => [(Alpha2, Axis::Z), (Alpha1, Axis::Y), (Alpha3, Axis::X)],
    }
}

pub fn frame(axis: Axis, direction: Direction) -> DirectionFrame {
    let slots = FieldQuad::<num_complex::Complex64>::slots(axis);
    let mut f = DirectionFrame { axis, direction, matrix_triple: triple(axis), layout: slots };
    f.layout = std::array::from_fn(|i| slots[f.source_index(i)]);
    f
}

/// All six frames, negative direction first for each axis.
pub fn direction_frames() -> Vec<DirectionFrame> {
    [Axis::Y, Axis::X, Axis::Z]
        .iter()
        .flat_map(|&a| Direction::ALL.map(|d| frame(a, d)))
        .collect()
}

pub fn to_bispinor<T: Scalar>(fields: &FieldQuad<T>, frame: &DirectionFrame) -> Result<Bispinor<T>> {
    if fields.axis != frame.axis {
        return Err(Error::input(format!(
            "fields for a {}-wave packed into a {}-frame",
            fields.axis, frame.axis
        )));
    }
    let v = fields.values();
    let i = T::imag_unit();
    let c = std::array::from_fn(|k| {
        let x = v[frame.source_index(k)].clone();
        if k < 2 {
            x
        } else {
            x * i.clone()
        }
    });
    Ok(Bispinor {
        c,
        layout: Layout { axis: frame.axis, direction: frame.direction, rep: Rep::Standard },
    })
}

/// Inverse of [`to_bispinor`], undoing charge conjugation when present.
pub fn decode_fields<T: Scalar>(psi: &Bispinor<T>) -> Result<FieldQuad<T>> {
    let c = match psi.layout.rep {
        Rep::Standard => psi.c.clone(),
        Rep::RetardedConjugated => charge_conjugate(psi)?.c,
        Rep::Primed => return Err(Error::input("decode a primed bispinor via from_primed first")),
    };
    let f = frame(psi.layout.axis, psi.layout.direction);
    let minus_i = -T::imag_unit();
    let mut v: [T; 4] = std::array::from_fn(|_| T::zero());
    for (k, x) in c.into_iter().enumerate() {
        v[f.source_index(k)] = if k < 2 { x } else { x * minus_i.clone() };
    }
    Ok(FieldQuad::from_values(psi.layout.axis, v))
}

/// The formal adjoint row: the explicit `i` on magnetic slots changes sign
/// while the amplitudes are left unconjugated.
pub fn formal_adjoint<T: Scalar>(psi: &Bispinor<T>) -> Result<Vec4<T>> {
    if psi.layout.rep == Rep::Primed {
        return Err(Error::Precondition(
            "primed bispinors take the transported adjoint".into(),
        ));
    }
    let [a, b, c, d] = psi.c.clone();
    Ok([a, b, -c, -d])
}

/// Conjugate transpose of the column.
pub fn hermitian_adjoint<T: Scalar>(psi: &Bispinor<T>) -> Vec4<T> {
    psi.c.clone().map(|x| x.conj())
}

/// Sign flip of components 2 and 4; an involution between the standard and
/// the retarded-conjugated representations.
pub fn charge_conjugate<T: Scalar>(psi: &Bispinor<T>) -> Result<Bispinor<T>> {
    let rep = match psi.layout.rep {
        Rep::Standard => Rep::RetardedConjugated,
        Rep::RetardedConjugated => Rep::Standard,
        Rep::Primed => return Err(Error::Precondition("charge conjugation of a primed bispinor".into())),
    };
    let [a, b, c, d] = psi.c.clone();
    Ok(Bispinor { c: [a, -b, c, -d], layout: Layout { rep, ..psi.layout } })
}

/// `ψ′ = S†ψ`.
pub fn to_primed<T: Scalar>(psi: &Bispinor<T>, s: &Matrix4<T>) -> Result<Bispinor<T>> {
    if !s.is_unitary() {
        return Err(Error::NotUnitary);
    }
    if psi.layout.rep == Rep::Primed {
        return Err(Error::Precondition("bispinor is already primed".into()));
    }
    Ok(Bispinor { c: s.adjoint().mul_vec(&psi.c), layout: Layout { rep: Rep::Primed, ..psi.layout } })
}

/// `ψ = Sψ′`.
pub fn from_primed<T: Scalar>(psi: &Bispinor<T>, s: &Matrix4<T>) -> Result<Bispinor<T>> {
    if !s.is_unitary() {
        return Err(Error::NotUnitary);
    }
    if psi.layout.rep != Rep::Primed {
        return Err(Error::Precondition("bispinor is not primed".into()));
    }
    Ok(Bispinor { c: s.mul_vec(&psi.c), layout: Layout { rep: Rep::Standard, ..psi.layout } })
}

/// The row carried along by `ψ = Sψ′`: `row·S`, so that
/// `(row·S)(S†MS)ψ′ = row·M·ψ`.
pub fn transported_adjoint<T: Scalar>(row: &Vec4<T>, s: &Matrix4<T>) -> Vec4<T> {
    s.row_mul(row)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{dirac_matrix, primed_transform, ExactComplex};

    type C = ExactComplex;

    fn c(n: i64) -> C {
        C::from_i64(n)
    }

    fn ic(n: i64) -> C {
        C::imag_unit() * c(n)
    }

    #[test]
    fn packs_negative_y_layout() {
        let psi = to_bispinor(&FieldQuad::y(c(1), c(2), c(3), c(4)), &frame(Axis::Y, Direction::Negative))
            .unwrap();
        assert_eq!(psi.c, [c(1), c(2), ic(3), ic(4)]);
    }

    #[test]
    fn packs_positive_y_layout() {
        // (Ez, Ex, Hz, Hx) = (1, 2, 3, 4)
        let q = FieldQuad::y(c(2), c(1), c(4), c(3));
        let psi = to_bispinor(&q, &frame(Axis::Y, Direction::Positive)).unwrap();
        assert_eq!(psi.c, [c(1), c(2), ic(3), ic(4)]);
    }

    #[test]
    fn zero_fields_give_zero_bispinor() {
        let psi = to_bispinor(&FieldQuad::<C>::zero(Axis::Z), &frame(Axis::Z, Direction::Positive)).unwrap();
        assert!(psi.is_zero());
    }

    #[test]
    fn axis_mismatch_is_rejected() {
        let q = FieldQuad::y(c(1), c(0), c(0), c(0));
        assert!(to_bispinor(&q, &frame(Axis::X, Direction::Negative)).is_err());
    }

    #[test]
    fn x_frame_layout_matches_transposition() {
        let f = frame(Axis::X, Direction::Negative);
        assert_eq!(f.label(), "x- (Ez, Ey, iHz, iHy)");
        assert_eq!(frame(Axis::Z, Direction::Positive).label(), "z+ (Ex, Ey, iHx, iHy)");
        assert_eq!(f.propagation_matrix(), MatrixKind::Alpha2);
    }

    #[test]
    fn frames_are_distinct() {
        let frames = direction_frames();
        assert_eq!(frames.len(), 6);
        for (i, a) in frames.iter().enumerate() {
            for b in &frames[i + 1..] {
                assert_ne!(a, b);
            }
        }
    }

    #[test]
    fn adjoints_differ_on_complex_amplitudes() {
        let one_plus_i = c(1) + C::imag_unit();
        let q = FieldQuad::y(one_plus_i.clone(), c(0), c(0), c(0));
        let psi = to_bispinor(&q, &frame(Axis::Y, Direction::Negative)).unwrap();
        assert_eq!(formal_adjoint(&psi).unwrap()[0], one_plus_i);
        assert_eq!(hermitian_adjoint(&psi)[0], one_plus_i.conj());
    }

    #[test]
    fn formal_adjoint_flips_magnetic_slots() {
        let psi = to_bispinor(&FieldQuad::y(c(1), c(2), c(3), c(4)), &frame(Axis::Y, Direction::Negative))
            .unwrap();
        assert_eq!(formal_adjoint(&psi).unwrap(), [c(1), c(2), ic(-3), ic(-4)]);
    }

    #[test]
    fn charge_conjugation_is_an_involution() {
        let psi = to_bispinor(&FieldQuad::y(c(1), c(2), c(3), c(4)), &frame(Axis::Y, Direction::Negative))
            .unwrap();
        let ret = charge_conjugate(&psi).unwrap();
        assert_eq!(ret.c, [c(1), c(-2), ic(3), ic(-4)]);
        assert_eq!(ret.layout.rep, Rep::RetardedConjugated);
        assert_eq!(charge_conjugate(&ret).unwrap(), psi);
        assert_eq!(decode_fields(&ret).unwrap(), decode_fields(&psi).unwrap());
    }

    #[test]
    fn primed_round_trip() {
        let s = primed_transform::<C>();
        let psi = to_bispinor(&FieldQuad::y(c(1), c(-2), c(5), c(3)), &frame(Axis::Y, Direction::Negative))
            .unwrap();
        let primed = to_primed(&psi, &s).unwrap();
        assert_eq!(from_primed(&primed, &s).unwrap(), psi);
        let id = to_primed(&psi, &Matrix4::identity()).unwrap();
        assert_eq!(id.c, psi.c);
    }

    #[test]
    fn decode_inverts_packing_in_every_frame() {
        for f in direction_frames() {
            let q = FieldQuad::new(f.axis, c(1), c(-2), c(3), c(7));
            assert_eq!(decode_fields(&to_bispinor(&q, &f).unwrap()).unwrap(), q);
        }
    }

    #[test]
    fn poynting_sign_follows_direction() {
        let a2 = dirac_matrix::<C>(MatrixKind::Alpha2).unwrap();
        for f in direction_frames() {
            let q = FieldQuad::new(f.axis, c(2), c(-3), c(5), c(1));
            let psi = to_bispinor(&q, &f).unwrap();
            let v = a2.sandwich(&formal_adjoint(&psi).unwrap(), &psi.c);
            assert_eq!(v, c(2 * f.direction.sign()) * q.poynting_axis(), "{}", f.label());
        }
    }
}
