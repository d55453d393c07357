use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Check, Scenario};
use crate::algebra::{
    anticommutator, canonical_conjugate, dirac_matrix, dot, hermiticity, pauli, primed_reference, primed_transform,
    ratio, ExactComplex, Hermiticity, Matrix2, Matrix4, MatrixKind, Scalar,
};
use crate::bilinears::{bilinear, table_kinds, BilinearTable};
use crate::bridge::{
    decode_fields, direction_frames, formal_adjoint, to_bispinor, to_primed, transported_adjoint, Axis, FieldQuad, Rep,
};
use crate::error::{Error, Result};
use crate::forces::{
    centripetal_check, curl_error, gaussian_newton_setup, heisenberg_rate, lamb_gromeka_residual, newton_balance,
    plane_wave_hamiltonian, ring_force, spin_force, spinning_closed_form, symmetric_force, to_densities, EMTensor,
    FieldJet, RingConfig, SpinMode, SpinTensor, Spinning,
};
use crate::gridfields::{
    continuity_coefficient, continuity_residual, lagrangian_eval, maxwell_residual, route_equality, sample_planewave,
    ResidualReport, ScalarGrid3, Shape3, VectorGrid3,
};
use crate::planewave::{
    current_correspondence_with, decoded_null_space, free_maxwell_rows, klein_gordon_check,
    klein_gordon_general, massless_shell, y_frame, DiracForm, PhaseSign, PhysicalConstants, PlaneWaveState,
    PrintedSystem,
};

pub(super) const BILINEAR_TRIALS: usize = 1000;
pub(super) const TRIALS: usize = 100;

struct Ctx<'a> {
    scenario: &'a Scenario,
    constants: PhysicalConstants,
    rng: ChaCha8Rng,
}

impl Ctx<'_> {
    /// `n/d` with `n ∈ [−12, 12]`, `d ∈ [1, 6]`.
    fn rat(&mut self) -> BigRational {
        ratio(self.rng.gen_range(-12..=12), self.rng.gen_range(1..=6))
    }

    fn nonzero_rat(&mut self) -> BigRational {
        loop {
            let q = self.rat();
            if !q.is_zero() {
                return q;
            }
        }
    }

    fn phase(&mut self) -> PhaseSign {
        if self.rng.gen_bool(0.5) {
            PhaseSign::Plus
        } else {
            PhaseSign::Minus
        }
    }

    /// Real rational amplitudes, not all zero.
    fn quad<T: Scalar>(&mut self, axis: Axis) -> FieldQuad<T> {
        loop {
            let q = FieldQuad::from_values(axis, std::array::from_fn(|_| T::from_rational(&self.rat())));
            if !q.is_zero() {
                return q;
            }
        }
    }

    fn state<T: Scalar>(&mut self, axis: Axis) -> PlaneWaveState<T> {
        let amplitudes = self.quad(axis);
        let (omega, k) = (self.nonzero_rat(), self.nonzero_rat());
        let phase = self.phase();
        PlaneWaveState::new(amplitudes, omega, k, phase)
    }

    fn c<T: Scalar>(&self) -> T {
        T::from_rational(&self.constants.c)
    }

    fn custom<T: Scalar>(&self) -> Option<FieldQuad<T>> {
        self.scenario.custom_fields().map(|v| FieldQuad::from_values(Axis::Y, v.map(|q| T::from_rational(&q))))
    }
}

pub(super) fn run<T: Scalar>(name: &str, scenario: &Scenario, stream: u64) -> Result<Vec<Check>> {
    let mut rng = ChaCha8Rng::seed_from_u64(scenario.seed);
    rng.set_stream(stream);
    let mut ctx = Ctx { scenario, constants: scenario.constants.to_constants()?, rng };
    match name {
        "algebra" => algebra::<T>(),
        "bilinears" => bilinears::<T>(&mut ctx),
        "directions" => directions::<T>(&mut ctx),
        "canonical" => canonical::<T>(&mut ctx),
        "planewave" => planewave::<T>(&mut ctx),
        "currents" => currents::<T>(&mut ctx),
        "grid" => grid(&mut ctx),
        "conservation" => conservation(&mut ctx),
        "lagrangian" => lagrangian::<T>(&mut ctx),
        "forces" => forces::<T>(&mut ctx),
        "hydro" => hydro::<T>(&mut ctx),
        other => Err(Error::UnknownSuite(other.into())),
    }
}

fn f64_of(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// A check that fails with the error text when the computation errs.
fn guarded(id: &str, eq: &str, f: impl FnOnce() -> Result<(bool, String)>) -> Check {
    match f() {
        Ok((pass, detail)) => Check::new(id, eq, pass, detail),
        Err(e) => Check::new(id, eq, false, format!("error: {e}")),
    }
}

fn small<T: Scalar>(x: &T, tol: f64) -> bool {
    if T::EXACT {
        x.is_zero()
    } else {
        x.to_c64().norm() < tol
    }
}

fn matrix<T: Scalar>(kind: MatrixKind) -> Matrix4<T> {
    dirac_matrix(kind).expect("enumerated kinds are valid")
}

fn algebra<T: Scalar>() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let set = [MatrixKind::Alpha1, MatrixKind::Alpha2, MatrixKind::Alpha3, MatrixKind::Beta];
    let mut bad = Vec::new();
    for (i, a) in set.iter().enumerate() {
        for (j, b) in set.iter().enumerate() {
            let ac = anticommutator(&matrix::<T>(*a), &matrix::<T>(*b));
            let expect = if i == j { Matrix4::scalar(T::from_i64(2)) } else { Matrix4::zero() };
            if !ac.matches(&expect) {
                bad.push(format!("{{{a},{b}}}"));
            }
        }
    }
    out.push(Check::new(
        "algebra.anticommutators",
        "Eq 1.4",
        bad.is_empty(),
        if bad.is_empty() { "{αᵢ,αⱼ} = 2δᵢⱼ over α1, α2, α3, β".into() } else { format!("failed: {}", bad.join(" ")) },
    ));

    let a5 = matrix::<T>(MatrixKind::Alpha5);
    let a5_ok = (&a5 * &a5).matches(&Matrix4::identity())
        && set.iter().all(|k| anticommutator(&a5, &matrix::<T>(*k)).is_zero());
    out.push(Check::new("algebra.alpha5", "Eq 3.1", a5_ok, "α5² = I and α5 anticommutes with α1, α2, α3, β"));

    let mut asym_bad = Vec::new();
    for mu in 0..4u8 {
        for nu in 0..4u8 {
            if mu != nu {
                let s = &matrix::<T>(MatrixKind::Tensor(mu, nu)) + &matrix::<T>(MatrixKind::Tensor(nu, mu));
                if !s.is_zero() {
                    asym_bad.push(format!("({mu},{nu})"));
                }
            }
        }
    }
    out.push(Check::new(
        "algebra.tensor_antisymmetry",
        "Eq 3.1",
        asym_bad.is_empty(),
        if asym_bad.is_empty() { "α_μν = −α_νμ for μ ≠ ν".into() } else { format!("failed: {}", asym_bad.join(" ")) },
    ));

    let mut counts = BTreeMap::new();
    for k in MatrixKind::enumerate() {
        let h = match hermiticity(&matrix::<T>(k)) {
            Hermiticity::Hermitian => "hermitian",
            Hermiticity::AntiHermitian => "anti-hermitian",
            Hermiticity::Neither => "neither",
        };
        *counts.entry(h).or_insert(0usize) += 1;
    }
    out.push(Check::new(
        "algebra.hermiticity",
        "Eq 3.1",
        !counts.contains_key("neither"),
        format!("{counts:?}"),
    ));

    let s: Vec<Matrix2<T>> = (1..=3).map(|i| pauli::<T>(i).expect("pauli index")).collect();
    let i = T::imag_unit();
    let pauli_ok = (0..3).all(|a| (&s[a] * &s[a]) == Matrix2::identity())
        && (0..3).all(|a| (&s[a] * &s[(a + 1) % 3]) == s[(a + 2) % 3].scale(&i));
    out.push(Check::new("algebra.pauli", "Eq 1.4", pauli_ok, "σᵢ² = I and σᵢσⱼ = iσₖ cyclically"));
    Ok(out)
}

fn bilinears<T: Scalar>(ctx: &mut Ctx) -> Result<Vec<Check>> {
    let kinds = table_kinds();
    let mut matched = vec![0usize; kinds.len()];
    let mut first_miss: Vec<Option<String>> = vec![None; kinds.len()];
    let fr = y_frame();
    let table = BilinearTable::<T>::new()?;
    let mut samples: Vec<FieldQuad<T>> = (0..BILINEAR_TRIALS).map(|_| ctx.quad(Axis::Y)).collect();
    samples.extend(ctx.custom());
    for q in &samples {
        for (n, r) in table.verify(q, &fr)?.into_iter().enumerate() {
            if r.matched {
                matched[n] += 1;
            } else if first_miss[n].is_none() {
                first_miss[n] = Some(format!(
                    "first miss at {:?}: matrix {} vs closed form {}",
                    q.values().map(|x| x.to_string()),
                    r.value,
                    r.em_expected
                ));
            }
        }
    }
    Ok(kinds
        .iter()
        .enumerate()
        .map(|(n, k)| {
            let pass = matched[n] == samples.len();
            let mut detail = format!("{}/{} quads match", matched[n], samples.len());
            if let Some(m) = &first_miss[n] {
                detail.push_str("; ");
                detail.push_str(m);
            }
            Check::new(format!("bilinears.{k}"), "Eq 3.1", pass, detail)
        })
        .collect())
}

fn sign_char(sign: i64) -> char {
    if sign > 0 {
        '+'
    } else {
        '-'
    }
}

fn directions<T: Scalar>(ctx: &mut Ctx) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for fr in direction_frames() {
        let tag = format!("{}{}", fr.axis, sign_char(fr.direction.sign()));
        let mut miss = 0usize;
        let mut round_trip = true;
        for _ in 0..TRIALS {
            let q: FieldQuad<T> = ctx.quad(fr.axis);
            let value = bilinear(fr.propagation_matrix(), &q, &fr)?;
            let expect = T::from_i64(2 * fr.direction.sign()).mul_ref(&q.poynting_axis());
            if !value.matches(&expect) {
                miss += 1;
            }
            round_trip &= decode_fields(&to_bispinor(&q, &fr)?)? == q;
        }
        let sign = if fr.direction.sign() > 0 { "+" } else { "−" };
        out.push(Check::new(
            format!("directions.poynting.{tag}"),
            "Eq 5.1",
            miss == 0,
            format!("ψ⁺{}ψ = {sign}2[E×H]_{}: {} of {TRIALS} quads off; frame {}", fr.propagation_matrix(), fr.axis, miss, fr.label()),
        ));
        out.push(Check::new(
            format!("directions.round_trip.{tag}"),
            "Eq 2.12",
            round_trip,
            "decode(pack(F)) = F",
        ));
    }
    for axis in [Axis::X, Axis::Y, Axis::Z] {
        let sys = PrintedSystem::per_axis_printed(axis);
        let id = format!("directions.per_axis.{axis}");
        let states: Vec<PlaneWaveState<T>> = (0..TRIALS).map(|_| ctx.state(axis)).collect();
        out.push(guarded(&id, sys.tag, || shared_coeff(&sys, &states, &ctx.constants)));
    }
    Ok(out)
}

/// Every state matches all four rows with one coefficient.
fn shared_coeff<T: Scalar>(
    sys: &PrintedSystem,
    states: &[PlaneWaveState<T>],
    constants: &PhysicalConstants,
) -> Result<(bool, String)> {
    shared_coeff_with(sys, sys.paired_form, Rep::Standard, states, constants).map(|(ok, _, detail)| (ok, detail))
}

fn shared_coeff_with<T: Scalar>(
    sys: &PrintedSystem,
    form: DiracForm,
    rep: Rep,
    states: &[PlaneWaveState<T>],
    constants: &PhysicalConstants,
) -> Result<(bool, T, String)> {
    let mut coeff: Option<T> = None;
    let (mut row_fail, mut coeff_fail) = (0usize, 0usize);
    for st in states {
        let m = current_correspondence_with(sys, form, rep, st, constants)?;
        if !m.all_match() {
            row_fail += 1;
        }
        match &coeff {
            None => coeff = Some(m.coeff.clone()),
            Some(c0) if m.coeff.matches(c0) => {}
            Some(_) => coeff_fail += 1,
        }
    }
    let coeff = coeff.ok_or_else(|| Error::input("no states"))?;
    let kappa = coeff.to_c64() * (4.0 * std::f64::consts::PI);
    let detail = format!(
        "{} with {form:?}/{rep:?}: coeff = {coeff} (κ = 4π·coeff = {:.12}), {row_fail} states with unmatched rows, {coeff_fail} with a different coeff, over {} states",
        sys.tag,
        kappa.re,
        states.len()
    );
    Ok((row_fail == 0 && coeff_fail == 0, coeff, detail))
}

fn canonical<T: Scalar>(ctx: &mut Ctx) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let s = primed_transform::<T>();
    out.push(Check::new("canonical.unitary", "Eq 5.4", s.is_unitary(), "S S† = I"));

    let set = [MatrixKind::Alpha1, MatrixKind::Alpha2, MatrixKind::Alpha3, MatrixKind::Beta];
    let mut off = Vec::new();
    for (n, k) in set.iter().enumerate() {
        let got = canonical_conjugate(&s, &matrix::<T>(*k))?;
        if !got.matches(&primed_reference::<T>(n + 1)?) {
            off.push(k.to_string());
        }
    }
    out.push(Check::new(
        "canonical.primed_set",
        "Eq 5.2",
        off.is_empty(),
        if off.is_empty() { "S†αS reproduces α′1..α′4".into() } else { format!("differs for {}", off.join(", ")) },
    ));

    let fr = y_frame();
    let r = T::frac_1_sqrt2();
    let i = T::imag_unit();
    let (mut psi_miss, mut inv_miss) = (0usize, 0usize);
    let kinds = MatrixKind::enumerate();
    let primed: Vec<Matrix4<T>> =
        kinds.iter().map(|k| canonical_conjugate(&s, &matrix::<T>(*k)).expect("unitary")).collect();
    for _ in 0..TRIALS {
        let q: FieldQuad<T> = ctx.quad(Axis::Y);
        let psi = to_bispinor(&q, &fr)?;
        let pp = to_primed(&psi, &s)?;
        let (ex, ez, hx, hz) = (q.e_a.clone(), q.e_b.clone(), q.h_a.clone(), q.h_b.clone());
        let expect = [
            ex.clone() + i.mul_ref(&hx),
            ez.clone() + i.mul_ref(&hz),
            ez - i.mul_ref(&hz),
            -ex + i.mul_ref(&hx),
        ]
        .map(|x| r.mul_ref(&x));
        if !(0..4).all(|n| pp.c[n].matches(&expect[n])) {
            psi_miss += 1;
        }
        let row = formal_adjoint(&psi)?;
        let row_p = transported_adjoint(&row, &s);
        for (k, mp) in kinds.iter().zip(&primed) {
            let orig = dot(&matrix::<T>(*k).row_mul(&row), &psi.c);
            let moved = dot(&mp.row_mul(&row_p), &pp.c);
            if !moved.matches(&orig) {
                inv_miss += 1;
            }
        }
    }
    out.push(Check::new(
        "canonical.psi_prime",
        "Eq 5.6",
        psi_miss == 0,
        format!("ψ′ = S†ψ against the printed components: {psi_miss} of {TRIALS} quads off"),
    ));
    out.push(Check::new(
        "canonical.bilinear_invariance",
        "Eq 5.3",
        inv_miss == 0,
        format!("(ψ⁺S)(S†MS)(S†ψ) = ψ⁺Mψ for {} kinds: {inv_miss} mismatches over {TRIALS} quads", kinds.len()),
    ));
    Ok(out)
}

fn planewave<T: Scalar>(ctx: &mut Ctx) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let massless = ctx.constants.with_mass(BigRational::zero())?;
    let fr = y_frame();
    for form in [DiracForm::MasslessColumn, DiracForm::MasslessRow] {
        let (mut dim_bad, mut maxwell_bad, mut off_bad) = (0usize, 0usize, 0usize);
        for _ in 0..TRIALS {
            let (n, d) = (ctx.rng.gen_range(1..=12), ctx.rng.gen_range(1..=6));
            let (omega, k) = massless_shell(&massless.c, n, d);
            let phase = ctx.phase();
            let sols = decoded_null_space::<T>(form, &omega, &k, phase, &massless, &fr)?;
            if sols.len() != 2 {
                dim_bad += 1;
            }
            // Row-form null vectors are the counter-propagating (retarded) wave.
            let wave = if form.is_row() { phase.flipped() } else { phase };
            for f in sols {
                let st = PlaneWaveState::new(f, omega.clone(), k.clone(), wave);
                if !free_maxwell_rows(&st, &massless.c).iter().all(Scalar::is_zero) {
                    maxwell_bad += 1;
                }
            }
            let mut shifted = &omega + ctx.nonzero_rat();
            while shifted == -&omega {
                shifted = &omega + ctx.nonzero_rat();
            }
            if !decoded_null_space::<T>(form, &shifted, &k, phase, &massless, &fr)?.is_empty() {
                off_bad += 1;
            }
        }
        out.push(Check::new(
            format!("planewave.massless.{}", if form.is_row() { "row" } else { "column" }),
            form.equation_tag(),
            dim_bad + maxwell_bad + off_bad == 0,
            format!(
                "on ω = ck: {dim_bad} shells without a 2-dim null space, {maxwell_bad} null vectors violating free Maxwell rows ({}propagating); off shell: {off_bad} nontrivial null spaces; {TRIALS} shells",
                if form.is_row() { "counter-" } else { "co-" }
            ),
        ));
    }

    let mut kg_bad = 0usize;
    for _ in 0..TRIALS {
        let st: PlaneWaveState<T> = ctx.state(Axis::Y);
        if !klein_gordon_check(&st, &ctx.constants).holds() {
            kg_bad += 1;
        }
    }
    out.push(Check::new(
        "planewave.klein_gordon",
        "Eq 2.9",
        kg_bad == 0,
        format!("(α₀ε − cα·p)(α₀ε + cα·p) = (ε² − c²p²)I: {kg_bad} of {TRIALS} (ω,k) pairs off"),
    ));

    let mut gen_bad = 0usize;
    for _ in 0..TRIALS {
        let eps = T::from_rational(&ctx.rat());
        let p = std::array::from_fn(|_| T::from_rational(&ctx.rat()));
        if !klein_gordon_general(&eps, &p, &ctx.c::<T>()).holds() {
            gen_bad += 1;
        }
    }
    out.push(Check::new(
        "planewave.squares",
        "Eq 2.8",
        gen_bad == 0,
        format!("(α₀ε)² = ε², (α·p)² = p² for general p: {gen_bad} of {TRIALS} off"),
    ));
    Ok(out)
}

fn currents<T: Scalar>(ctx: &mut Ctx) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let mut states: Vec<PlaneWaveState<T>> = (0..TRIALS).map(|_| ctx.state(Axis::Y)).collect();
    if let Some(f) = ctx.custom() {
        states.push(PlaneWaveState::new(f, ratio(1, 1), ratio(1, 1), PhaseSign::Plus));
    }
    let k = ctx.constants.clone();
    let systems = [
        PrintedSystem::primed_column(),
        PrintedSystem::primed_row(),
        PrintedSystem::minus_column(),
        PrintedSystem::minus_row(),
    ];
    let mut coeffs: Vec<Option<T>> = Vec::new();
    for sys in &systems {
        let id = format!("currents.{}", sys.name.replace(", ", ".").replace(' ', "_"));
        match shared_coeff_with(sys, sys.paired_form, Rep::Standard, &states, &k) {
            Ok((pass, coeff, detail)) => {
                coeffs.push(Some(coeff));
                out.push(Check::new(id, sys.tag, pass, detail));
            }
            Err(e) => {
                coeffs.push(None);
                out.push(Check::new(id, sys.tag, false, format!("error: {e}")));
            }
        }
    }
    let pair = match (&coeffs[0], &coeffs[1]) {
        (Some(a), Some(b)) => Check::new(
            "currents.hermitian_pair",
            "Eq 2.14''",
            !a.is_zero() && a.matches(&-b.clone()),
            format!("column coeff {a}, row coeff {b}: opposite current directions"),
        ),
        _ => Check::new("currents.hermitian_pair", "Eq 2.14''", false, "coefficients unavailable"),
    };
    out.push(pair);

    let sys = PrintedSystem::primed_column();
    out.push(guarded("currents.retarded_conjugate", "Eq 2.19", || {
        let (pass, coeff, detail) =
            shared_coeff_with(&sys, DiracForm::MassiveColumnMinus, Rep::RetardedConjugated, &states, &k)?;
        let opposite = coeffs[0].as_ref().is_some_and(|a| a.matches(&-coeff.clone()));
        Ok((pass && opposite, format!("{detail}; opposite to the column coeff: {opposite}")))
    }));
    Ok(out)
}

/// An exact massive plane wave solving `system`'s own bispinor form.
fn solving_state(system: &PrintedSystem, constants: &PhysicalConstants) -> Result<PlaneWaveState<ExactComplex>> {
    let constants = if constants.is_massless() { constants.with_mass(ratio(1, 1))? } else { constants.clone() };
    let (omega, k) = constants.massive_shell(&ratio(1, 2))?;
    let sols =
        decoded_null_space::<ExactComplex>(system.paired_form, &omega, &k, PhaseSign::Plus, &constants, &system.frame())?;
    let f = sols.into_iter().next().ok_or_else(|| Error::Degenerate("no plane-wave solution on shell".into()))?;
    Ok(PlaneWaveState::new(f, omega, k, PhaseSign::Plus))
}

fn order_check(id: &str, eq: &str, what: &str, coarse: &ResidualReport, fine: &ResidualReport) -> Check {
    match ResidualReport::richardson(coarse, fine) {
        Ok(r) => {
            let p = r.convergence_order.expect("richardson sets the order");
            Check::new(
                id,
                eq,
                (p - 2.0).abs() <= 0.1,
                format!(
                    "{what}: sup {:.6e} at h = {}, {:.6e} at h = {}; l2 {:.6e}, {:.6e}; order {p:.4}",
                    coarse.sup(),
                    coarse.h,
                    fine.sup(),
                    fine.h,
                    coarse.l2(),
                    fine.l2()
                ),
            )
        }
        Err(e) => Check::new(id, eq, false, format!("error: {e}")),
    }
}

fn grid(ctx: &mut Ctx) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let spec = ctx.scenario.grid.clone();
    let c = f64_of(&ctx.constants.c);
    let constants =
        if ctx.constants.is_massless() { ctx.constants.with_mass(ratio(1, 1))? } else { ctx.constants.clone() };
    for sys in [PrintedSystem::primed_column(), PrintedSystem::minus_column()] {
        let id = format!("grid.maxwell.{}", sys.name.replace(", ", ".").replace(' ', "_"));
        let mut fail = None;
        let reports: Vec<ResidualReport> = [spec.h, spec.h / 2.0]
            .iter()
            .filter_map(|h| {
                let run = || -> Result<ResidualReport> {
                    let st = solving_state(&sys, &constants)?;
                    let g = sample_planewave(&st, &spec.with_h(*h), c)?;
                    maxwell_residual(&sys, &g, &constants)
                };
                run().map_err(|e| fail = Some(e)).ok()
            })
            .collect();
        out.push(match fail {
            Some(e) => Check::new(id, sys.tag, false, format!("error: {e}")),
            None => order_check(&id, sys.tag, "rows with calibrated currents", &reports[0], &reports[1]),
        });
    }
    Ok(out)
}

/// Real traveling wave `E_x = H_z = a`, `E_z = −H_x = b` along +y phase.
fn traveling<T: Scalar>(a: &BigRational, b: &BigRational, k: &BigRational, c: &BigRational) -> PlaneWaveState<T> {
    let f = FieldQuad::y(T::from_rational(a), T::from_rational(b), -T::from_rational(b), T::from_rational(a));
    PlaneWaveState::new(f, c * k, k.clone(), PhaseSign::Plus)
}

fn conservation(ctx: &mut Ctx) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let c = ctx.constants.c.clone();
    let mut nonzero = 0usize;
    for _ in 0..TRIALS {
        let (a, b, k) = (ctx.rat(), ctx.rat(), ctx.nonzero_rat());
        if !continuity_coefficient(&traveling::<ExactComplex>(&a, &b, &k, &c), &c)?.is_zero() {
            nonzero += 1;
        }
    }
    out.push(Check::new(
        "conservation.analytic",
        "Eq 4.2",
        nonzero == 0,
        format!("∂U/∂t + div S coefficient exactly zero on traveling waves: {nonzero} of {TRIALS} nonzero"),
    ));

    let spec = ctx.scenario.grid.clone();
    let cf = f64_of(&c);
    let st = traveling::<ExactComplex>(&ratio(1, 1), &ratio(1, 2), &ratio(6, 1), &c);
    let reports: Result<Vec<ResidualReport>> = [spec.h, spec.h / 2.0]
        .iter()
        .map(|h| continuity_residual(&sample_planewave(&st, &spec.with_h(*h), cf)?, cf))
        .collect();
    out.push(match reports {
        Ok(r) => order_check("conservation.fd_order", "Eq 4.2", "continuity residual", &r[0], &r[1]),
        Err(e) => Check::new("conservation.fd_order", "Eq 4.2", false, format!("error: {e}")),
    });

    out.push(guarded("conservation.routes", "Eq 4.1", || {
        let g = sample_planewave(&st, &spec, cf)?;
        let d = route_equality(&g, cf)?;
        Ok((d < 1e-12, format!("U and S from ψ⁺α₀ψ, −cψ⁺α₂ψ against the field forms: max relative gap {d:.3e}")))
    }));
    Ok(out)
}

fn lagrangian<T: Scalar>(ctx: &mut Ctx) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let k = if ctx.constants.is_massless() { ctx.constants.with_mass(ratio(1, 1))? } else { ctx.constants.clone() };
    let (mut states_checked, mut nonzero, mut worst) = (0usize, 0usize, 0.0_f64);
    for _ in 0..TRIALS / 5 {
        let t = ctx.nonzero_rat();
        let (omega, kk) = k.massive_shell(&t)?;
        let phase = ctx.phase();
        for f in decoded_null_space::<T>(DiracForm::MassiveColumnPlus, &omega, &kk, phase, &k, &y_frame())? {
            let l = lagrangian_eval(&PlaneWaveState::new(f, omega.clone(), kk.clone(), phase), &k)?;
            states_checked += 1;
            worst = worst.max(l.quantum_total.to_c64().norm()).max(l.em_total.to_c64().norm());
            if !(small(&l.quantum_total, 1e-10) && small(&l.em_total, 1e-10)) {
                nonzero += 1;
            }
        }
    }
    out.push(Check::new(
        "lagrangian.on_shell",
        "Eq 6.2",
        nonzero == 0 && states_checked > 0,
        format!("{nonzero} of {states_checked} on-shell states with a nonzero form; largest |L| = {worst:.3e}"),
    ));

    let (mut coeff, mut bad_ratio, mut bad_current) = (None::<T>, 0usize, 0usize);
    for _ in 0..TRIALS {
        let st: PlaneWaveState<T> = ctx.state(Axis::Y);
        let l = lagrangian_eval(&st, &k)?;
        let shared = match (&coeff, &l.coeff) {
            (_, None) => false,
            (None, Some(c)) => {
                coeff = Some(c.clone());
                l.proportional
            }
            (Some(c0), Some(c)) => l.proportional && c.matches(c0),
        };
        if !shared {
            bad_ratio += 1;
        }
        if !l.current_form.matches(&l.em[2]) {
            bad_current += 1;
        }
    }
    let coeff_text = coeff.map(|c| c.to_string()).unwrap_or_else(|| "none".into());
    out.push(Check::new(
        "lagrangian.termwise",
        "Eq 6.3",
        bad_ratio == 0,
        format!("quantum term = coeff·EM term with coeff = {coeff_text} (1/c): {bad_ratio} of {TRIALS} states off"),
    ));
    out.push(Check::new(
        "lagrangian.current_form",
        "Eq 6.4",
        bad_current == 0,
        format!("−4π(j_E·E − j_H·H) equals the mass term: {bad_current} of {TRIALS} states off"),
    ));
    Ok(out)
}

/// On-shell linear photon on the y axis: `E_x = sH_z`, `E_z = −sH_x`.
fn linear_photon<T: Scalar>(ex: &BigRational, ez: &BigRational, k: &BigRational, c: &BigRational, phase: PhaseSign) -> PlaneWaveState<T> {
    let s = BigRational::from_integer(BigInt::from(phase.value()));
    let f = FieldQuad::y(
        T::from_rational(ex),
        T::from_rational(ez),
        T::from_rational(&-(&s * ez)),
        T::from_rational(&(&s * ex)),
    );
    PlaneWaveState::new(f, c * k, k.clone(), phase)
}

fn forces<T: Scalar>(ctx: &mut Ctx) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let c_rat = ctx.constants.c.clone();
    let c: T = ctx.c();

    let (mut spin_bad, mut line2_nonzero, mut sym_bad) = (0usize, 0usize, 0usize);
    for _ in 0..TRIALS {
        let (ex, ez, k) = (ctx.rat(), ctx.rat(), ctx.nonzero_rat());
        let phase = ctx.phase();
        let st = linear_photon::<T>(&ex, &ez, &k, &c_rat, phase);
        let jet = FieldJet::from_state(&st)?;
        let f = spin_force(&jet, &c, None)?;
        if !f.force.is_zero() {
            spin_bad += 1;
        }
        if !f.line2.is_zero() {
            line2_nonzero += 1;
        }
        let sym = symmetric_force(&jet, &c)?;
        if !sym.is_zero() {
            sym_bad += 1;
        }
    }
    out.push(Check::new(
        "forces.spin.linear_photon",
        "Eq 7.14",
        spin_bad == 0,
        format!("spin-tensor force from the (E_x,H_z) and (E_z,H_x) brackets: {spin_bad} of {TRIALS} on-shell photons nonzero"),
    ));
    out.push(Check::new(
        "forces.spin.printed_second_line",
        "Eq 7.14",
        line2_nonzero == 0,
        format!(
            "second printed line (labelled f_x, read as f_z): {line2_nonzero} of {TRIALS} on-shell photons nonzero; its brackets are free Maxwell rows with ∂/∂y reversed"
        ),
    ));
    out.push(Check::new(
        "forces.symmetric.free_wave",
        "Eq 7.21",
        sym_bad == 0,
        format!("symmetric-tensor force (f_x, f_y, f_z, f_0) on free waves: {sym_bad} of {TRIALS} nonzero"),
    ));

    let mut transverse_bad = 0usize;
    for _ in 0..TRIALS {
        let st: PlaneWaveState<T> = ctx.state(Axis::Y);
        let f = symmetric_force(&FieldJet::from_state(&st)?, &c)?;
        if !(f.x.is_zero() && f.z.is_zero()) {
            transverse_bad += 1;
        }
    }
    out.push(Check::new(
        "forces.symmetric.transverse",
        "Eq 7.20",
        transverse_bad == 0,
        format!("f_x = f_z = 0 on arbitrary y-wave jets: {transverse_bad} of {TRIALS} off"),
    ));

    for mode in SpinMode::ALL {
        let (id, eq) = match mode {
            SpinMode::ExHz => ("forces.spinning.ex_hz", "Eq 7.16"),
            SpinMode::EzHx => ("forces.spinning.ez_hx", "Eq 7.17"),
        };
        let mut bad = 0usize;
        for _ in 0..TRIALS {
            let (a, k, w) = (ctx.nonzero_rat(), ctx.nonzero_rat(), ctx.nonzero_rat());
            // The closed forms assume E_x = H_z and E_z = −H_x.
            let phase = PhaseSign::Plus;
            let zero = BigRational::zero();
            let st = match mode {
                SpinMode::ExHz => linear_photon::<T>(&a, &zero, &k, &c_rat, phase),
                SpinMode::EzHx => linear_photon::<T>(&zero, &a, &k, &c_rat, phase),
            };
            let omega = T::from_rational(&w);
            let f = spin_force(&FieldJet::from_state(&st)?, &c, Some(&Spinning { mode, omega: omega.clone() }))?.force;
            let expect = spinning_closed_form(mode, &st.amplitudes, &omega, &c)?;
            let (along, across) = match mode {
                SpinMode::ExHz => (&f.x, &f.z),
                SpinMode::EzHx => (&f.z, &f.x),
            };
            if !(along.matches(&expect) && across.is_zero() && f.y.is_zero() && f.t.is_zero()) {
                bad += 1;
            }
        }
        out.push(Check::new(
            id,
            eq,
            bad == 0,
            format!("4πf after ∂/∂t → iω + ∂/∂t on the {mode:?} mode against the closed form: {bad} of {TRIALS} off"),
        ));
    }

    let one: T = T::one();
    let example = spinning_closed_form(SpinMode::ExHz, &FieldQuad::y(one.clone(), T::zero(), T::zero(), T::from_i64(2)), &one, &one)?;
    let six_i = T::from_i64(6).mul_ref(&T::imag_unit());
    out.push(Check::new(
        "forces.spinning.example",
        "Eq 7.16",
        example.matches(&six_i),
        format!("E_x = 1, H_z = 2, ω = c = 1: 4π·ᶻf_x = {example}"),
    ));

    let ring = ctx.scenario.ring.clone().unwrap_or_default();
    out.push(guarded("forces.ring.balance", "Eq 7.4", || {
        let f = ring_force(&ring)?;
        let expect = ring.rho_e * (ring.e_p - ring.h_p);
        Ok(((f - expect).abs() <= 1e-12 * expect.abs().max(1.0), format!("ρ_e(E_p − H_p) = {f} with E_p = {}, H_p = {}, ρ_e = {}", ring.e_p, ring.h_p, ring.rho_e)))
    }));
    let printed = RingConfig { e_p: 0.5, h_p: 1.0, ..ring.clone() };
    out.push(guarded("forces.ring.inward", "Eq 7.7", || {
        let f = ring_force(&printed)?;
        let expect = -printed.rho_e * printed.e_p;
        Ok((f == expect && f < 0.0, format!("E_p = 1/2, H_p = 1: f = {f}, −ρ_e·E_p = {expect}")))
    }));

    let (mut tensor_bad, mut anti_bad) = (0usize, 0usize);
    for _ in 0..TRIALS {
        let e: [T; 3] = std::array::from_fn(|_| T::from_rational(&ctx.rat()));
        let h: [T; 3] = std::array::from_fn(|_| T::from_rational(&ctx.rat()));
        let t = EMTensor::from_fields(&e, &h);
        let half_sum = T::from_ratio(1, 2).mul_ref(
            &e.iter().chain(h.iter()).fold(T::zero(), |s, x| s + x.mul_ref(x)),
        );
        if !(t.is_symmetric() && t.energy.matches(&half_sum) && t.trace().matches(&t.energy)) {
            tensor_bad += 1;
        }
        let q: FieldQuad<T> = ctx.quad(Axis::Y);
        if !SpinTensor::from_fields(&q, &y_frame())?.is_antisymmetric() {
            anti_bad += 1;
        }
    }
    out.push(Check::new(
        "forces.tensor.symmetry",
        "Eq 7.9",
        tensor_bad == 0,
        format!("τᵢⱼ = τⱼᵢ and τ₀₀ = ½(E²+H²) with δᵢᵢ = 1: {tensor_bad} of {TRIALS} off"),
    ));
    out.push(Check::new(
        "forces.spin_tensor.antisymmetry",
        "Eq 7.12",
        anti_bad == 0,
        format!("ψ⁺α_μνψ = −ψ⁺α_νμψ: {anti_bad} of {TRIALS} quads off"),
    ));
    Ok(out)
}

fn hydro<T: Scalar>(ctx: &mut Ctx) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let h = ctx.scenario.grid.h;
    let omega = 1.0;
    let slab = |h: f64| Shape3::centered_slab(1.0, h);

    out.push(guarded("hydro.curl_ratio", "Eq 8.11", || {
        let (a, b) = (curl_error(&slab(h)?, omega, h)?, curl_error(&slab(h / 2.0)?, omega, h / 2.0)?);
        let r = a / b;
        Ok(((r - 4.0).abs() <= 0.4, format!("|curl v − 2ω| = {a:.6e} at h = {h}, {b:.6e} at h/2; ratio {r:.4}")))
    }));
    out.push(guarded("hydro.centripetal", "Eq 8.12", || {
        let d = centripetal_check(&slab(h)?, omega)?;
        Ok((d < 1e-12, format!("½v×curl v against (v²/r)r̂: max relative deviation {d:.3e}")))
    }));
    let newton = (|| -> Result<(ResidualReport, ResidualReport)> {
        let run = |h: f64| -> Result<ResidualReport> {
            let s = gaussian_newton_setup(&slab(h)?, omega, 1.0, 0.5)?;
            newton_balance(&s.rho, &s.a_n, &s.lamb.lorentz)
        };
        Ok((run(h)?, run(h / 2.0)?))
    })();
    out.push(match newton {
        Ok((a, b)) => order_check("hydro.newton", "Eq 8.13", "ρ·a_n − f_L", &a, &b),
        Err(e) => Check::new("hydro.newton", "Eq 8.13", false, format!("error: {e}")),
    });
    out.push(guarded("hydro.lamb_gromeka_static", "Eq 8.9", || {
        let s = slab(0.25)?;
        let g = VectorGrid3::from_fn(&s, |p| [p[1] * p[2], -p[0], p[0] * p[1]]);
        let u = ScalarGrid3::from_fn(&s, |_| 2.5);
        let v = VectorGrid3::zeros(&s);
        let lg = lamb_gromeka_residual(&g, &VectorGrid3::zeros(&s), &u, &v)?;
        Ok((lg.report.sup() == 0.0, format!("static g, constant U, v = 0: sup {:.3e}", lg.report.sup())))
    }));

    let (mut p_bad, mut beta_bad) = (0usize, 0usize);
    let k = ctx.constants.clone();
    let (c, hbar, mc2): (T, T, T) =
        (T::from_rational(&k.c), T::from_rational(&k.hbar), T::from_rational(&k.rest_energy()));
    let beta = matrix::<T>(MatrixKind::Beta);
    let alphas = [MatrixKind::Alpha1, MatrixKind::Alpha2, MatrixKind::Alpha3].map(matrix::<T>);
    for _ in 0..TRIALS {
        let p: [T; 3] = std::array::from_fn(|_| T::from_rational(&ctx.rat()));
        let eps = T::from_rational(&ctx.rat());
        let ham = plane_wave_hamiltonian(&p, &eps, &c, &mc2);
        for pi in &p {
            if !heisenberg_rate(&Matrix4::scalar(pi.clone()), &ham, &hbar)?.is_zero() {
                p_bad += 1;
            }
        }
        let rate = heisenberg_rate(&beta, &ham, &hbar)?;
        let ap = alphas.iter().zip(&p).fold(Matrix4::zero(), |acc, (a, pi)| &acc + &a.scale(pi));
        let factor = T::from_i64(2).mul_ref(&T::imag_unit()).mul_ref(&c).mul_ref(&hbar.recip().expect("ħ > 0"));
        if !(rate.matches(&(&beta * &ap).scale(&factor)) && rate.is_hermitian()) {
            beta_bad += 1;
        }
    }
    out.push(Check::new(
        "hydro.heisenberg_momentum",
        "Eq 8.2",
        p_bad == 0,
        format!("(1/iħ)[P·I, H] = 0 for constant potentials: {p_bad} nonzero over {TRIALS} Hamiltonians"),
    ));
    out.push(Check::new(
        "hydro.heisenberg_beta",
        "Eq 8.3",
        beta_bad == 0,
        format!("(1/iħ)[β, H] = (2ic/ħ)βα·P and is Hermitian: {beta_bad} of {TRIALS} off"),
    ));

    if let Some(dtau) = ctx.scenario.dtau {
        out.push(guarded("hydro.densities", "Eq 8.7", || {
            let p = [1.0, -2.0, 0.5];
            let g = to_densities(&p, dtau)?;
            let ok = (0..3).all(|i| (g[i] * dtau - p[i]).abs() <= 1e-12 * p[i].abs());
            Ok((ok, format!("g = p/Δτ with Δτ = {dtau}: {g:?}")))
        }));
    }
    Ok(out)
}
