use super::ResidualReport;
use crate::error::{Error, Result};

/// Uniform 3-D lattice with spacing `h`; index `(i·ny + j)·nz + k`.
#[derive(Clone, Debug, PartialEq)]
pub struct Shape3 {
    pub nx: usize,
    pub ny: usize,
    pub nz: usize,
    pub h: f64,
    pub origin: [f64; 3],
}

impl Shape3 {
    pub fn new(n: [usize; 3], h: f64, origin: [f64; 3]) -> Result<Self> {
        let least = n.iter().copied().min().unwrap_or(0);
        if least < 3 {
            return Err(Error::GridTooSmall { needed: 3, got: least });
        }
        if h.is_nan() || h <= 0.0 {
            return Err(Error::input("grid spacing must be positive"));
        }
        Ok(Self { nx: n[0], ny: n[1], nz: n[2], h, origin })
    }

    /// Cube `[−half, half]³` in x and y with three layers in z.
    pub fn centered_slab(half: f64, h: f64) -> Result<Self> {
        let n = (2.0 * half / h).round() as usize + 1;
        Self::new([n, n, 3], h, [-half, -half, -h])
    }

    pub fn len(&self) -> usize {
        self.nx * self.ny * self.nz
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.ny + j) * self.nz + k
    }

    pub fn coords(&self, i: usize, j: usize, k: usize) -> [f64; 3] {
        [
            self.origin[0] + i as f64 * self.h,
            self.origin[1] + j as f64 * self.h,
            self.origin[2] + k as f64 * self.h,
        ]
    }

    pub fn points(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        (0..self.nx).flat_map(move |i| (0..self.ny).flat_map(move |j| (0..self.nz).map(move |k| (i, j, k))))
    }

    pub fn interior(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        (1..self.nx - 1)
            .flat_map(move |i| (1..self.ny - 1).flat_map(move |j| (1..self.nz - 1).map(move |k| (i, j, k))))
    }

    fn same(&self, other: &Shape3) -> Result<()> {
        if self != other {
            return Err(Error::ShapeMismatch(format!(
                "{}×{}×{} (h={}) vs {}×{}×{} (h={})",
                self.nx, self.ny, self.nz, self.h, other.nx, other.ny, other.nz, other.h
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ScalarGrid3 {
    pub shape: Shape3,
    pub values: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct VectorGrid3 {
    pub shape: Shape3,
    pub comps: [Vec<f64>; 3],
}

impl ScalarGrid3 {
    pub fn from_fn(shape: &Shape3, f: impl Fn([f64; 3]) -> f64) -> Self {
        let values = shape.points().map(|(i, j, k)| f(shape.coords(i, j, k))).collect();
        Self { shape: shape.clone(), values }
    }

    pub fn at(&self, i: usize, j: usize, k: usize) -> f64 {
        self.values[self.shape.idx(i, j, k)]
    }

    /// Central-difference gradient; zero on the boundary layer.
    pub fn gradient(&self) -> VectorGrid3 {
        let s = &self.shape;
        let mut out = VectorGrid3::zeros(s);
        let h2 = 2.0 * s.h;
        for (i, j, k) in s.interior() {
            let n = s.idx(i, j, k);
            out.comps[0][n] = (self.at(i + 1, j, k) - self.at(i - 1, j, k)) / h2;
            out.comps[1][n] = (self.at(i, j + 1, k) - self.at(i, j - 1, k)) / h2;
            out.comps[2][n] = (self.at(i, j, k + 1) - self.at(i, j, k - 1)) / h2;
        }
        out
    }
}

impl VectorGrid3 {
    pub fn zeros(shape: &Shape3) -> Self {
        Self { shape: shape.clone(), comps: std::array::from_fn(|_| vec![0.0; shape.len()]) }
    }

    pub fn from_fn(shape: &Shape3, f: impl Fn([f64; 3]) -> [f64; 3]) -> Self {
        let mut out = Self::zeros(shape);
        for (i, j, k) in shape.points() {
            let v = f(shape.coords(i, j, k));
            let n = shape.idx(i, j, k);
            for (comp, x) in out.comps.iter_mut().zip(v) {
                comp[n] = x;
            }
        }
        out
    }

    pub fn at(&self, i: usize, j: usize, k: usize) -> [f64; 3] {
        let n = self.shape.idx(i, j, k);
        [self.comps[0][n], self.comps[1][n], self.comps[2][n]]
    }

    fn d(&self, c: usize, axis: usize, i: usize, j: usize, k: usize) -> f64 {
        let (p, m) = match axis {
            0 => (self.shape.idx(i + 1, j, k), self.shape.idx(i - 1, j, k)),
            1 => (self.shape.idx(i, j + 1, k), self.shape.idx(i, j - 1, k)),
            _ => (self.shape.idx(i, j, k + 1), self.shape.idx(i, j, k - 1)),
        };
        (self.comps[c][p] - self.comps[c][m]) / (2.0 * self.shape.h)
    }

    /// Central-difference curl; zero on the boundary layer.
    pub fn curl(&self) -> VectorGrid3 {
        let mut out = VectorGrid3::zeros(&self.shape);
        for (i, j, k) in self.shape.interior() {
            let n = self.shape.idx(i, j, k);
            out.comps[0][n] = self.d(2, 1, i, j, k) - self.d(1, 2, i, j, k);
            out.comps[1][n] = self.d(0, 2, i, j, k) - self.d(2, 0, i, j, k);
            out.comps[2][n] = self.d(1, 0, i, j, k) - self.d(0, 1, i, j, k);
        }
        out
    }

    /// Pointwise `self × other`.
    pub fn cross(&self, other: &VectorGrid3) -> Result<VectorGrid3> {
        self.shape.same(&other.shape)?;
        let mut out = VectorGrid3::zeros(&self.shape);
        for n in 0..self.shape.len() {
            let a = [self.comps[0][n], self.comps[1][n], self.comps[2][n]];
            let b = [other.comps[0][n], other.comps[1][n], other.comps[2][n]];
            out.comps[0][n] = a[1] * b[2] - a[2] * b[1];
            out.comps[1][n] = a[2] * b[0] - a[0] * b[2];
            out.comps[2][n] = a[0] * b[1] - a[1] * b[0];
        }
        Ok(out)
    }

    /// `Σ wᵢ·fieldᵢ` over matching grids.
    pub fn combine(terms: &[(f64, &VectorGrid3)]) -> Result<VectorGrid3> {
        let first = terms.first().ok_or_else(|| Error::input("no terms to combine"))?;
        let mut out = VectorGrid3::zeros(&first.1.shape);
        for (w, g) in terms {
            out.shape.same(&g.shape)?;
            for c in 0..3 {
                for (o, x) in out.comps[c].iter_mut().zip(&g.comps[c]) {
                    *o += w * x;
                }
            }
        }
        Ok(out)
    }

    /// Pointwise `ρ·self`.
    pub fn scaled_by(&self, rho: &ScalarGrid3) -> Result<VectorGrid3> {
        self.shape.same(&rho.shape)?;
        let mut out = self.clone();
        for c in 0..3 {
            for (o, r) in out.comps[c].iter_mut().zip(&rho.values) {
                *o *= r;
            }
        }
        Ok(out)
    }

    /// Per-component sup and RMS over interior points.
    pub fn interior_report(&self, labels: [&str; 3]) -> ResidualReport {
        let mut r = ResidualReport::new(self.shape.h);
        for (c, label) in labels.iter().enumerate() {
            let mags: Vec<f64> =
                self.shape.interior().map(|(i, j, k)| self.comps[c][self.shape.idx(i, j, k)].abs()).collect();
            r.push_row(*label, mags);
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gradient_of_linear_field_is_exact() {
        let s = Shape3::new([4, 5, 3], 0.25, [0.0; 3]).unwrap();
        let f = ScalarGrid3::from_fn(&s, |p| 2.0 * p[0] - p[1] + 3.0 * p[2]);
        let g = f.gradient();
        for (i, j, k) in s.interior() {
            let v = g.at(i, j, k);
            assert!((v[0] - 2.0).abs() < 1e-12 && (v[1] + 1.0).abs() < 1e-12 && (v[2] - 3.0).abs() < 1e-12);
        }
    }

    #[test]
    fn curl_of_gradient_vanishes_for_quadratics() {
        let s = Shape3::new([5, 5, 5], 0.1, [0.0; 3]).unwrap();
        let g = ScalarGrid3::from_fn(&s, |p| p[0] * p[1] + p[2] * p[2]).gradient();
        // (2,2,2) is the only point whose stencil avoids the zeroed boundary layer.
        assert!(g.curl().at(2, 2, 2).iter().all(|x| x.abs() < 1e-12));
    }

    #[test]
    fn shape_mismatch_is_reported() {
        let a = VectorGrid3::zeros(&Shape3::new([3, 3, 3], 1.0, [0.0; 3]).unwrap());
        let b = VectorGrid3::zeros(&Shape3::new([4, 3, 3], 1.0, [0.0; 3]).unwrap());
        assert!(matches!(a.cross(&b), Err(Error::ShapeMismatch(_))));
        assert!(Shape3::new([2, 3, 3], 1.0, [0.0; 3]).is_err());
    }
}
