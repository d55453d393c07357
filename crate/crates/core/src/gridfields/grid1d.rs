use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use super::ResidualReport;
use crate::algebra::{ExactComplex, MatrixKind, Scalar};
use crate::bilinears::{bilinear, EMQuantities};
use crate::bridge::{frame, Direction, FieldQuad};
use crate::error::{Error, Result};
use crate::planewave::{calibrate_coeff, PhysicalConstants, PlaneWaveState, PrintedSystem};

/// Lattice parameters: spatial step `h`, time step `dt = dt_ratio·h/c`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct GridSpec {
    pub h: f64,
    pub dt_ratio: f64,
    /// Spatial extent along the propagation axis.
    pub length: f64,
    pub time_steps: usize,
}

impl Default for GridSpec {
    fn default() -> Self {
        // At dt_ratio = 1 the central-difference errors of speed-c waves cancel exactly.
        Self { h: 1.0 / 32.0, dt_ratio: 0.5, length: 1.0, time_steps: 5 }
    }
}

impl GridSpec {
    pub fn with_h(&self, h: f64) -> Self {
        Self { h, ..self.clone() }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.h > 0.0 && self.dt_ratio > 0.0 && self.length > 0.0) || !self.h.is_finite() {
            return Err(Error::input("grid spacings and extent must be positive"));
        }
        Ok(())
    }
}

/// Complex samples of a field quad on a uniform `(t, ξ)` lattice.
#[derive(Clone, Debug, PartialEq)]
pub struct Grid1D {
    pub axis: crate::bridge::Axis,
    pub nt: usize,
    pub ny: usize,
    pub dt: f64,
    pub dy: f64,
    /// Quad components in `FieldQuad::values` order, indexed `it·ny + iy`.
    pub values: [Vec<Complex64>; 4],
}

impl Grid1D {
    pub fn from_fn(
        axis: crate::bridge::Axis,
        nt: usize,
        ny: usize,
        dt: f64,
        dy: f64,
        f: impl Fn(f64, f64) -> [Complex64; 4],
    ) -> Result<Self> {
        if nt < 3 || ny < 3 {
            return Err(Error::GridTooSmall { needed: 3, got: nt.min(ny) });
        }
        if !(dt > 0.0 && dy > 0.0) {
            return Err(Error::input("grid spacings must be positive"));
        }
        let mut values: [Vec<Complex64>; 4] = std::array::from_fn(|_| Vec::with_capacity(nt * ny));
        for it in 0..nt {
            for iy in 0..ny {
                let v = f(it as f64 * dt, iy as f64 * dy);
                for (dst, x) in values.iter_mut().zip(v) {
                    dst.push(x);
                }
            }
        }
        Ok(Self { axis, nt, ny, dt, dy, values })
    }

    pub fn at(&self, comp: usize, it: usize, iy: usize) -> Complex64 {
        self.values[comp][it * self.ny + iy]
    }

    pub fn quad(&self, it: usize, iy: usize) -> FieldQuad<Complex64> {
        FieldQuad::from_values(self.axis, std::array::from_fn(|c| self.at(c, it, iy)))
    }

    fn interior(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..self.nt - 1).flat_map(move |it| (1..self.ny - 1).map(move |iy| (it, iy)))
    }

    fn d_t(&self, comp: usize, it: usize, iy: usize) -> Complex64 {
        (self.at(comp, it + 1, iy) - self.at(comp, it - 1, iy)) / (2.0 * self.dt)
    }

    fn d_y(&self, comp: usize, it: usize, iy: usize) -> Complex64 {
        (self.at(comp, it, iy + 1) - self.at(comp, it, iy - 1)) / (2.0 * self.dy)
    }
}

fn f64_of(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// Analytic samples `A·exp(−i(ωt + s·k·ξ))`.
pub fn sample_planewave<T: Scalar>(state: &PlaneWaveState<T>, spec: &GridSpec, c: f64) -> Result<Grid1D> {
    spec.validate()?;
    let ny = (spec.length / spec.h).round() as usize + 1;
    let amps = state.amplitudes.values().map(|a| a.to_c64());
    let (w, k, s) = (f64_of(&state.omega), f64_of(&state.k), state.phase.value() as f64);
    Grid1D::from_fn(state.amplitudes.axis, spec.time_steps, ny, spec.dt_ratio * spec.h / c, spec.h, |t, y| {
        let phase = Complex64::new(0.0, -(w * t + s * k * y)).exp();
        amps.map(|a| a * phase)
    })
}

/// Residual of each row of `system` with currents scaled by its calibrated
/// coefficient.
pub fn maxwell_residual(system: &PrintedSystem, grid: &Grid1D, constants: &PhysicalConstants) -> Result<ResidualReport> {
    if grid.axis != system.axis {
        return Err(Error::input("grid and system propagate along different axes"));
    }
    let coeff = f64_of(&calibrate_coeff(system, constants)?);
    let w0 = f64_of(&constants.rest_frequency());
    let c = f64_of(&constants.c);
    let slots = FieldQuad::<Complex64>::slots(system.axis);
    let index = |s| slots.iter().position(|x| *x == s).expect("transverse slot");
    let mut report = ResidualReport::new(grid.dy);
    for row in &system.rows {
        let (f, g) = (index(row.time), index(row.space));
        let current = Complex64::new(0.0, coeff * row.current_sign as f64 * w0);
        let mags = grid.interior().map(|(it, iy)| {
            let r = grid.d_t(f, it, iy) / c + row.space_sign as f64 * grid.d_y(g, it, iy)
                - current * grid.at(f, it, iy);
            r.norm()
        });
        report.push_row(row.label(), mags.collect::<Vec<_>>());
    }
    Ok(report)
}

fn real_quad(q: &FieldQuad<Complex64>) -> FieldQuad<Complex64> {
    q.map(|z| Complex64::new(z.re, 0.0))
}

/// `∂U/∂t + div S` on the real part of the sampled fields.
pub fn continuity_residual(grid: &Grid1D, c: f64) -> Result<ResidualReport> {
    let n = grid.nt * grid.ny;
    let mut u = Vec::with_capacity(n);
    let mut s = Vec::with_capacity(n);
    for it in 0..grid.nt {
        for iy in 0..grid.ny {
            let em = EMQuantities::from_fields(&grid.quad(it, iy), c);
            u.push(em.energy_density);
            s.push(em.poynting[grid.axis.index()]);
        }
    }
    let at = |v: &Vec<f64>, it: usize, iy: usize| v[it * grid.ny + iy];
    let mags: Vec<f64> = grid
        .interior()
        .map(|(it, iy)| {
            let du = (at(&u, it + 1, iy) - at(&u, it - 1, iy)) / (2.0 * grid.dt);
            let ds = (at(&s, it, iy + 1) - at(&s, it, iy - 1)) / (2.0 * grid.dy);
            (du + ds).abs()
        })
        .collect();
    let mut report = ResidualReport::new(grid.dy);
    report.push_row("dU/dt + div S", mags);
    Ok(report)
}

/// For real amplitudes `a`, the fields `a·cos φ` with `φ = ωt + s·k·ξ` give
/// `∂U/∂t + div S = −(cos φ sin φ / 4π)·K`; this returns `K` exactly.
pub fn continuity_coefficient(state: &PlaneWaveState<ExactComplex>, c: &BigRational) -> Result<BigRational> {
    let mut real = Vec::with_capacity(4);
    for a in state.amplitudes.values() {
        match a.to_gaussian() {
            Some((re, im)) if im.is_zero() => real.push(re),
            _ => return Err(Error::input("continuity coefficient needs real rational amplitudes")),
        }
    }
    let q = FieldQuad::<ExactComplex>::from_values(
        state.amplitudes.axis,
        std::array::from_fn(|i| ExactComplex::from_rational(&real[i])),
    );
    let sum_sq = real.iter().fold(BigRational::zero(), |acc, x| acc + x * x);
    let p = q.poynting_axis().to_gaussian().expect("rational").0;
    let s = BigRational::from_integer(state.phase.value().into());
    Ok(&state.omega * sum_sq + BigRational::from_integer(2.into()) * c * s * &state.k * p)
}

/// Largest difference between bilinear-derived and field-derived `U` and
/// `S` over every sample of the real snapshot.
pub fn route_equality(grid: &Grid1D, c: f64) -> Result<f64> {
    let f = frame(grid.axis, Direction::Negative);
    let mut worst = 0.0_f64;
    for it in 0..grid.nt {
        for iy in 0..grid.ny {
            let q = real_quad(&grid.quad(it, iy));
            let em = EMQuantities::from_fields(&q, c);
            let u = bilinear(MatrixKind::Alpha0, &q, &f)?.re / (8.0 * PI);
            let s = -c * bilinear(MatrixKind::Alpha2, &q, &f)?.re / (8.0 * PI);
            let scale = 1.0_f64.max(em.energy_density.abs());
            worst = worst
                .max((u - em.energy_density).abs() / scale)
                .max((s - em.poynting[grid.axis.index()]).abs() / scale.max(c));
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;
    use crate::bridge::Axis;
    use crate::planewave::PhaseSign;

    fn wave(ex: i64, hz: i64, phase: PhaseSign) -> PlaneWaveState<ExactComplex> {
        let c = |n| ExactComplex::from_i64(n);
        PlaneWaveState::new(FieldQuad::y(c(ex), c(0), c(0), c(hz)), ratio(6, 1), ratio(6, 1), phase)
    }

    #[test]
    fn sample_at_origin_and_unit_modulus() {
        let s = PlaneWaveState::new(
            FieldQuad::y(ExactComplex::from_i64(1), ExactComplex::zero(), ExactComplex::zero(), ExactComplex::zero()),
            ratio(1, 1),
            ratio(1, 1),
            PhaseSign::Plus,
        );
        let g = sample_planewave(&s, &GridSpec::default(), 1.0).unwrap();
        assert_eq!(g.at(0, 0, 0), Complex64::new(1.0, 0.0));
        assert!(g.values[0].iter().all(|z| (z.norm() - 1.0).abs() < 1e-14));
    }

    #[test]
    fn refinement_keeps_shared_samples() {
        let s = wave(1, 1, PhaseSign::Plus);
        let spec = GridSpec { dt_ratio: 1.0, ..GridSpec::default() };
        let a = sample_planewave(&s, &spec, 1.0).unwrap();
        let b = sample_planewave(&s, &spec.with_h(spec.h / 2.0), 1.0).unwrap();
        for iy in 0..a.ny {
            assert!((a.at(0, 2, iy) - b.at(0, 4, 2 * iy)).norm() < 1e-12);
        }
    }

    #[test]
    fn too_small_grid_is_rejected() {
        let spec = GridSpec { time_steps: 2, ..GridSpec::default() };
        assert!(matches!(
            sample_planewave(&wave(1, 1, PhaseSign::Plus), &spec, 1.0),
            Err(Error::GridTooSmall { .. })
        ));
    }

    #[test]
    fn continuity_coefficient_vanishes_only_for_the_matching_direction() {
        let one = BigRational::from_integer(1.into());
        assert!(continuity_coefficient(&wave(1, 1, PhaseSign::Plus), &one).unwrap().is_zero());
        assert!(!continuity_coefficient(&wave(1, 1, PhaseSign::Minus), &one).unwrap().is_zero());
    }

    #[test]
    fn zero_and_static_fields_have_zero_residual() {
        let k = PhysicalConstants::natural(ratio(0, 1)).unwrap();
        let z = Grid1D::from_fn(Axis::Y, 4, 5, 0.1, 0.1, |_, _| [Complex64::new(0.0, 0.0); 4]).unwrap();
        assert_eq!(maxwell_residual(&PrintedSystem::primed_column(), &z, &k).unwrap().sup(), 0.0);
        let st = Grid1D::from_fn(Axis::Y, 4, 5, 0.1, 0.1, |_, _| {
            [1.0, -2.0, 0.5, 3.0].map(|x| Complex64::new(x, 0.0))
        })
        .unwrap();
        assert_eq!(continuity_residual(&st, 1.0).unwrap().sup(), 0.0);
    }
}
