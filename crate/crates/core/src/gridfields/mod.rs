//! Finite-difference layer: sampled fields, residual norms and the
//! Lagrangian in its bispinor and field forms.
//!
//! Derivatives are 3-point central differences at interior lattice points;
//! boundary points never enter a norm.

mod grid1d;
mod grid3;
mod lagrangian;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use grid1d::{
    continuity_coefficient, continuity_residual, maxwell_residual, route_equality, sample_planewave, Grid1D,
    GridSpec,
};
pub use grid3::{ScalarGrid3, Shape3, VectorGrid3};
pub use lagrangian::{lagrangian_eval, LagrangianEval};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RowResidual {
    pub label: String,
    pub sup: f64,
    /// Root-mean-square over interior points.
    pub l2: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResidualReport {
    pub rows: Vec<RowResidual>,
    pub h: f64,
    /// `log₂(sup_h / sup_{h/2})`, present only on the finer report of a
    /// Richardson pair.
    pub convergence_order: Option<f64>,
}

impl ResidualReport {
    pub fn new(h: f64) -> Self {
        Self { rows: Vec::new(), h, convergence_order: None }
    }

    /// Adds a row from its interior-point magnitudes.
    pub fn push_row(&mut self, label: impl Into<String>, magnitudes: impl IntoIterator<Item = f64>) {
        let (mut sup, mut sq, mut n) = (0.0_f64, 0.0_f64, 0usize);
        for m in magnitudes {
            sup = sup.max(m);
            sq += m * m;
            n += 1;
        }
        let l2 = if n == 0 { 0.0 } else { (sq / n as f64).sqrt() };
        self.rows.push(RowResidual { label: label.into(), sup, l2 });
    }

    pub fn sup(&self) -> f64 {
        self.rows.iter().map(|r| r.sup).fold(0.0, f64::max)
    }

    pub fn l2(&self) -> f64 {
        self.rows.iter().map(|r| r.l2).fold(0.0, f64::max)
    }

    /// The finer report annotated with the observed order.
    pub fn richardson(coarse: &Self, fine: &Self) -> Result<Self> {
        if ((coarse.h / 2.0 - fine.h) / fine.h).abs() > 1e-9 {
            return Err(Error::input(format!(
                "Richardson pair needs h and h/2, got {} and {}",
                coarse.h, fine.h
            )));
        }
        let labels = |r: &Self| r.rows.iter().map(|x| x.label.clone()).collect::<Vec<_>>();
        if labels(coarse) != labels(fine) {
            return Err(Error::ShapeMismatch("reports have different rows".into()));
        }
        let (sc, sf) = (coarse.sup(), fine.sup());
        if sc <= 0.0 || sf <= 0.0 {
            return Err(Error::Degenerate("zero residual has no convergence order".into()));
        }
        Ok(Self { convergence_order: Some((sc / sf).log2()), ..fine.clone() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn richardson_order_of_quadratic_error() {
        let mut a = ResidualReport::new(0.1);
        a.push_row("r", [0.04, 0.01]);
        let mut b = ResidualReport::new(0.05);
        b.push_row("r", [0.01, 0.002]);
        let r = ResidualReport::richardson(&a, &b).unwrap();
        assert!((r.convergence_order.unwrap() - 2.0).abs() < 1e-12);
        assert!(ResidualReport::richardson(&a, &a).is_err());
    }

    #[test]
    fn norms() {
        let mut a = ResidualReport::new(1.0);
        a.push_row("r", [3.0, 4.0]);
        assert_eq!(a.sup(), 4.0);
        assert!((a.l2() - (12.5_f64).sqrt()).abs() < 1e-15);
        assert_eq!(a.convergence_order, None);
    }
}
