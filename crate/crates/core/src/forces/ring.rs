use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Charged ring carrying the tangential current of a twirled photon.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingConfig {
    pub rho_e: f64,
    pub j_tau: f64,
    pub e_p: f64,
    pub h_p: f64,
    pub r_p: f64,
    pub omega_p: f64,
    pub c: f64,
}

impl Default for RingConfig {
    fn default() -> Self {
        Self { rho_e: 1.0, j_tau: 1.0, e_p: 0.5, h_p: 1.0, r_p: 1.0, omega_p: 1.0, c: 1.0 }
    }
}

impl RingConfig {
    /// `ρ_e·c = j_τ` to 1e-12 relative.
    pub fn validate(&self) -> Result<()> {
        let vals = [self.rho_e, self.j_tau, self.e_p, self.h_p, self.r_p, self.omega_p, self.c];
        if vals.iter().any(|v| !v.is_finite()) {
            return Err(Error::input("ring parameters must be finite"));
        }
        if !(self.c > 0.0 && self.r_p > 0.0) {
            return Err(Error::input("ring radius and c must be positive"));
        }
        let scale = self.j_tau.abs().max((self.rho_e * self.c).abs());
        if (self.rho_e * self.c - self.j_tau).abs() > 1e-12 * scale {
            return Err(Error::Precondition(format!(
                "ρ_e·c = {} differs from j_τ = {}",
                self.rho_e * self.c,
                self.j_tau
            )));
        }
        Ok(())
    }
}

/// Radial force density `ρ_e(E_p − H_p)` along r̂; negative is inward.
pub fn ring_force(config: &RingConfig) -> Result<f64> {
    config.validate()?;
    Ok(config.rho_e * (config.e_p - config.h_p))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_values() {
        assert_eq!(ring_force(&RingConfig::default()).unwrap(), -0.5);
        let eq = RingConfig { e_p: 0.7, h_p: 0.7, ..RingConfig::default() };
        assert_eq!(ring_force(&eq).unwrap(), 0.0);
        let k = RingConfig { rho_e: 2.0, j_tau: 2.0, e_p: 1.0, h_p: 3.0, ..RingConfig::default() };
        assert_eq!(ring_force(&k).unwrap(), -4.0);
    }

    #[test]
    fn doubled_magnetic_field_gives_minus_rho_e() {
        for (rho, e) in [(1.0, 0.5), (3.0, 2.0), (0.25, 8.0)] {
            let cfg = RingConfig { rho_e: rho, j_tau: rho, e_p: e, h_p: 2.0 * e, ..RingConfig::default() };
            assert_eq!(ring_force(&cfg).unwrap(), -rho * e);
        }
    }

    #[test]
    fn current_mismatch_is_rejected() {
        let bad = RingConfig { j_tau: 1.5, ..RingConfig::default() };
        assert!(matches!(ring_force(&bad), Err(Error::Precondition(_))));
    }
}
