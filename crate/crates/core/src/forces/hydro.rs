use crate::error::{Error, Result};
use crate::gridfields::{ResidualReport, ScalarGrid3, Shape3, VectorGrid3};

const XYZ: [&str; 3] = ["x", "y", "z"];

/// Rigid rotation `v = ω(−y, x, 0)` about the z axis. With `dt` the velocity
/// is the central time difference of the rotating position,
/// `v = (sin ωdt / dt)(−y, x, 0)`.
pub fn rigid_rotation_velocity(shape: &Shape3, omega: f64, dt: Option<f64>) -> Result<VectorGrid3> {
    let rate = match dt {
        None => omega,
        Some(dt) if dt > 0.0 => (omega * dt).sin() / dt,
        Some(_) => return Err(Error::input("time step must be positive")),
    };
    Ok(VectorGrid3::from_fn(shape, |p| [-rate * p[1], rate * p[0], 0.0]))
}

/// Sup over interior points of `|curl v − (0, 0, 2ω)|` for the
/// time-differenced rigid rotation.
pub fn curl_error(shape: &Shape3, omega: f64, dt: f64) -> Result<f64> {
    let curl = rigid_rotation_velocity(shape, omega, Some(dt))?.curl();
    Ok(shape
        .interior()
        .map(|(i, j, k)| {
            let w = curl.at(i, j, k);
            w[0].abs().max(w[1].abs()).max((w[2] - 2.0 * omega).abs())
        })
        .fold(0.0, f64::max))
}

/// Largest relative deviation of `½ v × curl v` from `(v²/r) r̂` over
/// interior points off the axis.
pub fn centripetal_check(shape: &Shape3, omega: f64) -> Result<f64> {
    let v = rigid_rotation_velocity(shape, omega, None)?;
    let half = VectorGrid3::combine(&[(0.5, &v.cross(&v.curl())?)])?;
    let mut worst = 0.0_f64;
    for (i, j, k) in shape.interior() {
        let p = shape.coords(i, j, k);
        let r = p[0].hypot(p[1]);
        if r < 0.5 * shape.h {
            continue;
        }
        let vv = v.at(i, j, k);
        let mag = (vv[0] * vv[0] + vv[1] * vv[1] + vv[2] * vv[2]) / r;
        let expect = [mag * p[0] / r, mag * p[1] / r, 0.0];
        let got = half.at(i, j, k);
        let dev = (0..3).map(|c| (got[c] - expect[c]).abs()).fold(0.0, f64::max);
        worst = worst.max(dev / mag);
    }
    Ok(worst)
}

#[derive(Clone, Debug, PartialEq)]
pub struct LambGromeka {
    /// `∂g/∂t + grad U − v × curl g`.
    pub residual: VectorGrid3,
    /// `f_L = ∂g/∂t + grad U`.
    pub lorentz: VectorGrid3,
    pub report: ResidualReport,
}

pub fn lamb_gromeka_residual(
    g: &VectorGrid3,
    dg_dt: &VectorGrid3,
    u: &ScalarGrid3,
    v: &VectorGrid3,
) -> Result<LambGromeka> {
    let grad_u = u.gradient();
    let lorentz = VectorGrid3::combine(&[(1.0, dg_dt), (1.0, &grad_u)])?;
    let vortex = v.cross(&g.curl())?;
    let residual = VectorGrid3::combine(&[(1.0, &lorentz), (-1.0, &vortex)])?;
    let report = residual.interior_report(XYZ);
    Ok(LambGromeka { residual, lorentz, report })
}

/// Interior residual of `ρ·a_n − f_L`.
pub fn newton_balance(rho: &ScalarGrid3, a_n: &VectorGrid3, f_l: &VectorGrid3) -> Result<ResidualReport> {
    let lhs = a_n.scaled_by(rho)?;
    Ok(VectorGrid3::combine(&[(1.0, &lhs), (-1.0, f_l)])?.interior_report(XYZ))
}

/// A density, its rigid-rotation acceleration and the Lorentz force of the
/// matching pressure-like potential.
#[derive(Clone, Debug, PartialEq)]
pub struct NewtonSetup {
    pub rho: ScalarGrid3,
    pub a_n: VectorGrid3,
    pub lamb: LambGromeka,
}

/// `ρ = ρ₀e^{−r²/w²}` in rigid rotation, `a_n = ½ v × curl v`, steady
/// `g = ρv` and `U = −½ρ₀ω²w² e^{−r²/w²}`, so that `ρ a_n = grad U`.
pub fn gaussian_newton_setup(shape: &Shape3, omega: f64, rho0: f64, width: f64) -> Result<NewtonSetup> {
    if width.is_nan() || width <= 0.0 {
        return Err(Error::input("Gaussian width must be positive"));
    }
    let bump = move |p: [f64; 3]| (-(p[0] * p[0] + p[1] * p[1]) / (width * width)).exp();
    let rho = ScalarGrid3::from_fn(shape, |p| rho0 * bump(p));
    let u = ScalarGrid3::from_fn(shape, |p| -0.5 * rho0 * omega * omega * width * width * bump(p));
    let v = rigid_rotation_velocity(shape, omega, None)?;
    let a_n = VectorGrid3::combine(&[(0.5, &v.cross(&v.curl())?)])?;
    let g = v.scaled_by(&rho)?;
    let lamb = lamb_gromeka_residual(&g, &VectorGrid3::zeros(shape), &u, &v)?;
    Ok(NewtonSetup { rho, a_n, lamb })
}

/// Momentum per unit volume `Δτ`.
pub fn to_densities(momentum: &[f64; 3], dtau: f64) -> Result<[f64; 3]> {
    if !(dtau > 0.0 && dtau.is_finite()) {
        return Err(Error::input("Δτ must be a positive finite volume"));
    }
    Ok(momentum.map(|p| p / dtau))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn slab(h: f64) -> Shape3 {
        Shape3::centered_slab(1.0, h).unwrap()
    }

    #[test]
    fn exact_rotation_has_exact_curl() {
        let s = slab(0.125);
        let c = rigid_rotation_velocity(&s, 1.5, None).unwrap().curl();
        for (i, j, k) in s.interior() {
            assert!((c.at(i, j, k)[2] - 3.0).abs() < 1e-12);
        }
    }

    #[test]
    fn curl_error_quarters_under_halving() {
        let (a, b) = (curl_error(&slab(1.0 / 16.0), 1.0, 1.0 / 16.0).unwrap(), curl_error(&slab(1.0 / 32.0), 1.0, 1.0 / 32.0).unwrap());
        assert!(((a / b) - 4.0).abs() < 0.4, "{a} {b}");
    }

    #[test]
    fn centripetal_identity() {
        assert!(centripetal_check(&slab(0.125), 2.0).unwrap() < 1e-12);
    }

    #[test]
    fn static_field_and_constant_potential_balance() {
        let s = slab(0.25);
        let g = VectorGrid3::from_fn(&s, |p| [p[1], -p[0], 0.0]);
        let u = ScalarGrid3::from_fn(&s, |_| 3.0);
        let v = VectorGrid3::zeros(&s);
        let lg = lamb_gromeka_residual(&g, &VectorGrid3::zeros(&s), &u, &v).unwrap();
        assert_eq!(lg.report.sup(), 0.0);
    }

    #[test]
    fn newton_residual_is_second_order() {
        let run = |h: f64| {
            let setup = gaussian_newton_setup(&slab(h), 1.0, 1.0, 0.5).unwrap();
            newton_balance(&setup.rho, &setup.a_n, &setup.lamb.lorentz).unwrap()
        };
        let r = ResidualReport::richardson(&run(1.0 / 16.0), &run(1.0 / 32.0)).unwrap();
        assert!((r.convergence_order.unwrap() - 2.0).abs() < 0.1, "{r:?}");
    }

    #[test]
    fn trivial_newton_cases() {
        let s = slab(0.25);
        let rho = ScalarGrid3::from_fn(&s, |p| 1.0 + p[0] * p[0]);
        let a = VectorGrid3::from_fn(&s, |p| [p[1], 2.0, -p[0]]);
        assert_eq!(newton_balance(&rho, &a, &a.scaled_by(&rho).unwrap()).unwrap().sup(), 0.0);
        let zero = ScalarGrid3::from_fn(&s, |_| 0.0);
        let f = VectorGrid3::from_fn(&s, |_| [1.0, 0.0, 0.0]);
        assert_eq!(newton_balance(&zero, &a, &f).unwrap().sup(), 1.0);
    }

    #[test]
    fn densities() {
        assert_eq!(to_densities(&[2.0, 4.0, -6.0], 2.0).unwrap(), [1.0, 2.0, -3.0]);
        assert!(to_densities(&[1.0; 3], 0.0).is_err());
    }
}
