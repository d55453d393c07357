//! Structural invariants as properties over random rational inputs.

use nfbridge::algebra::{
    canonical_conjugate, dirac_matrix, dot, primed_transform, ratio, ExactComplex, Matrix4, MatrixKind, Scalar,
};
use nfbridge::bilinears::{bilinear, table_kinds, verify_table};
use nfbridge::bridge::{
    decode_fields, direction_frames, formal_adjoint, to_bispinor, to_primed, transported_adjoint, Axis, FieldQuad,
};
use nfbridge::forces::{heisenberg_rate, plane_wave_hamiltonian, spin_force, symmetric_force, EMTensor, FieldJet};
use nfbridge::gridfields::lagrangian_eval;
use nfbridge::planewave::{
    decoded_null_space, free_maxwell_rows, y_frame, DiracForm, PhaseSign, PhysicalConstants, PlaneWaveState,
};
use nfbridge::report::{Check, Mode, SuiteReport};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

type C = ExactComplex;

fn rat() -> impl Strategy<Value = BigRational> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| ratio(n, d))
}

fn nonzero_rat() -> impl Strategy<Value = BigRational> {
    (1i64..=12, 1i64..=6, any::<bool>()).prop_map(|(n, d, neg)| ratio(if neg { -n } else { n }, d))
}

fn positive_rat() -> impl Strategy<Value = BigRational> {
    (1i64..=12, 1i64..=6).prop_map(|(n, d)| ratio(n, d))
}

fn quad(axis: Axis) -> impl Strategy<Value = FieldQuad<C>> {
    [rat(), rat(), rat(), rat()].prop_map(move |v| FieldQuad::from_values(axis, v.map(|q| C::from_rational(&q))))
}

fn phase() -> impl Strategy<Value = PhaseSign> {
    prop_oneof![Just(PhaseSign::Plus), Just(PhaseSign::Minus)]
}

fn vec3() -> impl Strategy<Value = [C; 3]> {
    [rat(), rat(), rat()].prop_map(|v| v.map(|q| C::from_rational(&q)))
}

fn natural(mass: i64) -> PhysicalConstants {
    PhysicalConstants::natural(ratio(mass, 1)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn packing_round_trips_in_every_frame(v in [rat(), rat(), rat(), rat()]) {
        for fr in direction_frames() {
            let q = FieldQuad::from_values(fr.axis, v.clone().map(|x| C::from_rational(&x)));
            let back = decode_fields(&to_bispinor(&q, &fr).unwrap()).unwrap();
            prop_assert_eq!(back, q);
        }
    }

    #[test]
    fn poynting_bilinear_sign_follows_direction(v in [rat(), rat(), rat(), rat()]) {
        for fr in direction_frames() {
            let q = FieldQuad::from_values(fr.axis, v.clone().map(|x| C::from_rational(&x)));
            let value = bilinear(fr.propagation_matrix(), &q, &fr).unwrap();
            let expect = C::from_i64(2 * fr.direction.sign()) * q.poynting_axis();
            prop_assert_eq!(value, expect, "frame {}", fr.label());
        }
    }

    #[test]
    fn bilinears_survive_the_canonical_transformation(q in quad(Axis::Y)) {
        let fr = y_frame();
        let s = primed_transform::<C>();
        let psi = to_bispinor(&q, &fr).unwrap();
        let row = formal_adjoint(&psi).unwrap();
        let primed = to_primed(&psi, &s).unwrap();
        let moved_row = transported_adjoint(&row, &s);
        for kind in table_kinds() {
            let m = dirac_matrix::<C>(kind).unwrap();
            let m_primed = canonical_conjugate(&s, &m).unwrap();
            prop_assert_eq!(m_primed.sandwich(&moved_row, &primed.c), m.sandwich(&row, &psi.c), "{}", kind);
        }
    }

    #[test]
    fn float_bilinears_track_exact_ones(q in quad(Axis::Y)) {
        let fr = y_frame();
        let qf = q.map(|x| x.to_c64());
        for kind in table_kinds() {
            let exact = bilinear(kind, &q, &fr).unwrap().to_c64();
            let float = bilinear(kind, &qf, &fr).unwrap();
            prop_assert!((exact - float).norm() <= 1e-9 * exact.norm().max(1.0), "{}", kind);
        }
    }

    #[test]
    fn untouched_table_entries_always_match(q in quad(Axis::Y)) {
        for r in verify_table(&q, &y_frame()).unwrap() {
            let printed_off = matches!(r.kind, MatrixKind::Tensor(1, 2) | MatrixKind::Tensor(2, 1)
                | MatrixKind::Tensor(2, 3) | MatrixKind::Tensor(3, 2));
            prop_assert!(r.matched || printed_off, "{}", r.kind);
        }
    }

    #[test]
    fn energy_momentum_tensor_is_symmetric_with_matching_trace(e in vec3(), h in vec3()) {
        let t = EMTensor::from_fields(&e, &h);
        prop_assert!(t.is_symmetric());
        prop_assert_eq!(t.trace(), t.energy.clone());
    }

    #[test]
    fn momentum_is_conserved_and_beta_rate_is_hermitian(
        p in vec3(), eps in rat(), mass in rat(), c in positive_rat(), hbar in positive_rat(),
    ) {
        let (eps, mc2, c, hbar) = (C::from_rational(&eps), C::from_rational(&mass), C::from_rational(&c), C::from_rational(&hbar));
        let h = plane_wave_hamiltonian(&p, &eps, &c, &mc2);
        for pi in &p {
            prop_assert!(heisenberg_rate(&Matrix4::scalar(pi.clone()), &h, &hbar).unwrap().is_zero());
        }
        let beta = dirac_matrix::<C>(MatrixKind::Beta).unwrap();
        let rate = heisenberg_rate(&beta, &h, &hbar).unwrap();
        prop_assert_eq!(rate.adjoint(), rate);
    }

    #[test]
    fn photons_carry_no_force(ex in rat(), ez in rat(), k in nonzero_rat(), ph in phase()) {
        let s = BigRational::from_integer(BigInt::from(ph.value()));
        let f = FieldQuad::y(
            C::from_rational(&ex),
            C::from_rational(&ez),
            C::from_rational(&-(&s * &ez)),
            C::from_rational(&(&s * &ex)),
        );
        let st = PlaneWaveState::new(f, k.clone(), k, ph);
        prop_assert!(free_maxwell_rows(&st, &ratio(1, 1)).iter().all(Scalar::is_zero));
        let jet = FieldJet::from_state(&st).unwrap();
        prop_assert!(symmetric_force(&jet, &C::one()).unwrap().is_zero());
        prop_assert!(spin_force(&jet, &C::one(), None).unwrap().force.is_zero());
    }

    #[test]
    fn lagrangian_terms_share_one_over_c(q in quad(Axis::Y), w in nonzero_rat(), k in rat(), ph in phase()) {
        let k_const = natural(1);
        let l = lagrangian_eval(&PlaneWaveState::new(q, w, k, ph), &k_const).unwrap();
        if let Some(coeff) = &l.coeff {
            prop_assert!(l.proportional);
            prop_assert_eq!(coeff.clone(), C::one());
        }
        prop_assert_eq!(l.current_form.clone(), l.em[2].clone());
    }

    #[test]
    fn on_shell_lagrangian_vanishes(t in nonzero_rat(), ph in phase()) {
        let k_const = natural(1);
        let (omega, k) = k_const.massive_shell(&t).unwrap();
        let sols = decoded_null_space::<C>(DiracForm::MassiveColumnPlus, &omega, &k, ph, &k_const, &y_frame()).unwrap();
        prop_assert!(!sols.is_empty());
        for f in sols {
            let l = lagrangian_eval(&PlaneWaveState::new(f, omega.clone(), k.clone(), ph), &k_const).unwrap();
            prop_assert!(l.on_shell());
        }
    }

    #[test]
    fn reports_round_trip_through_json(
        rows in proptest::collection::vec(("[a-z.]{1,12}", "Eq [0-9.']{1,5}", any::<bool>(), ".{0,20}"), 0..8),
        seed in any::<u64>(),
    ) {
        let checks = rows.into_iter().map(|(id, eq, pass, detail)| Check::new(id, eq, pass, detail)).collect();
        let r = SuiteReport::new("forces", Mode::Float, seed, checks);
        prop_assert_eq!(SuiteReport::from_json(&r.to_json().unwrap()).unwrap(), r);
    }
}

#[test]
fn bilinear_dot_agrees_with_sandwich() {
    let q = FieldQuad::y(C::from_i64(1), C::from_i64(-2), C::from_i64(3), C::from_i64(5));
    let psi = to_bispinor(&q, &y_frame()).unwrap();
    let row = formal_adjoint(&psi).unwrap();
    let m = dirac_matrix::<C>(MatrixKind::Alpha0).unwrap();
    assert_eq!(dot(&row, &m.mul_vec(&psi.c)), q.energy_sum());
}
