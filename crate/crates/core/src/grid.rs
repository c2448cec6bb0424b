//! Structured grids and sampled complex functions, the numeric stand-ins for
//! L2 elements.

use crate::error::{Error, Result};
use num_complex::Complex64;

/// Grid kind tag, used for precondition checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridKind {
    UniformFullLine,
    GradedHalfLine,
}

/// A structured grid: a uniform grid on [-L, L) with N nodes, or a graded
/// half-line mesh `t_j = T (j/M)^gamma`, j = 1..M, clustering algebraically
/// at zero to resolve power singularities.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    kind: GridKind,
    extent: f64,
    points: usize,
    gamma: f64,
    nodes: Vec<f64>,
}

impl Grid {
    /// Uniform full-line grid `x_j = -L + 2Lj/N`, `j = 0..N-1`; N must be a
    /// power of two.
    pub fn uniform(extent_l: f64, n: usize) -> Result<Self> {
        if !n.is_power_of_two() || n < 4 {
            return Err(Error::InvalidArgument(format!(
                "uniform grid needs a power-of-two node count >= 4, got {n}"
            )));
        }
        if !(extent_l > 0.0) || !extent_l.is_finite() {
            return Err(Error::InvalidArgument("extent must be positive".into()));
        }
        let h = 2.0 * extent_l / n as f64;
        let nodes = (0..n).map(|j| -extent_l + h * j as f64).collect();
        Ok(Self {
            kind: GridKind::UniformFullLine,
            extent: extent_l,
            points: n,
            gamma: 1.0,
            nodes,
        })
    }

    /// Graded half-line mesh `t_j = T (j/M)^gamma`, `j = 1..M`.
    pub fn graded(extent_t: f64, m: usize, gamma: f64) -> Result<Self> {
        if m < 8 {
            return Err(Error::InvalidArgument("graded mesh needs at least 8 nodes".into()));
        }
        if !(extent_t > 0.0) || !(gamma >= 1.0) {
            return Err(Error::InvalidArgument(
                "graded mesh needs positive extent and gamma >= 1".into(),
            ));
        }
        let nodes = (1..=m)
            .map(|j| extent_t * (j as f64 / m as f64).powf(gamma))
            .collect();
        Ok(Self {
            kind: GridKind::GradedHalfLine,
            extent: extent_t,
            points: m,
            gamma,
            nodes,
        })
    }

    pub fn kind(&self) -> GridKind {
        self.kind
    }

    /// L for uniform grids, T for graded meshes.
    pub fn extent(&self) -> f64 {
        self.extent
    }

    pub fn len(&self) -> usize {
        self.points
    }

    pub fn is_empty(&self) -> bool {
        self.points == 0
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    /// Uniform spacing; only meaningful for uniform grids.
    pub fn spacing(&self) -> f64 {
        2.0 * self.extent / self.points as f64
    }

    /// Trapezoid quadrature weights for the grid's nodes. The graded mesh
    /// includes the initial panel (0, t_1) with its left half attached to the
    /// first node.
    pub fn quad_weights(&self) -> Vec<f64> {
        match self.kind {
            GridKind::UniformFullLine => vec![self.spacing(); self.points],
            GridKind::GradedHalfLine => {
                let n = self.nodes.len();
                let mut w = vec![0.0; n];
                for j in 0..n - 1 {
                    let d = self.nodes[j + 1] - self.nodes[j];
                    w[j] += d / 2.0;
                    w[j + 1] += d / 2.0;
                }
                w[0] += self.nodes[0] / 2.0;
                w
            }
        }
    }

    pub fn expect_kind(&self, expected: GridKind) -> Result<()> {
        if self.kind != expected {
            return Err(Error::WrongGridKind {
                expected: match expected {
                    GridKind::UniformFullLine => "uniform-fullline",
                    GridKind::GradedHalfLine => "graded-halfline",
                },
                got: match self.kind {
                    GridKind::UniformFullLine => "uniform-fullline",
                    GridKind::GradedHalfLine => "graded-halfline",
                },
            });
        }
        Ok(())
    }
}

/// A sampled complex function on a [`Grid`].
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction {
    grid: Grid,
    values: Vec<Complex64>,
}

impl GridFunction {
    pub fn new(grid: Grid, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::InvalidArgument(format!(
                "value count {} does not match grid size {}",
                values.len(),
                grid.len()
            )));
        }
        Ok(Self { grid, values })
    }

    /// Samples a scalar function on the grid nodes.
    pub fn sample(grid: &Grid, mut f: impl FnMut(f64) -> Complex64) -> Self {
        let values = grid.nodes().iter().map(|&x| f(x)).collect();
        Self {
            grid: grid.clone(),
            values,
        }
    }

    pub fn zeros(grid: &Grid) -> Self {
        Self {
            grid: grid.clone(),
            values: vec![Complex64::new(0.0, 0.0); grid.len()],
        }
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [Complex64] {
        &mut self.values
    }

    pub fn into_values(self) -> Vec<Complex64> {
        self.values
    }

    /// Discrete L2 norm with the grid's quadrature weights.
    pub fn norm(&self) -> f64 {
        let w = self.grid.quad_weights();
        self.values
            .iter()
            .zip(w.iter())
            .map(|(v, wi)| wi * v.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Weighted L2 distance to another grid function on the same grid.
    pub fn distance(&self, other: &GridFunction) -> f64 {
        let w = self.grid.quad_weights();
        self.values
            .iter()
            .zip(other.values.iter())
            .zip(w.iter())
            .map(|((a, b), wi)| wi * (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Pointwise multiplication by a sampled multiplier.
    pub fn multiplied(&self, multiplier: &[Complex64]) -> Result<GridFunction> {
        if multiplier.len() != self.values.len() {
            return Err(Error::InvalidArgument("multiplier length mismatch".into()));
        }
        let values = self
            .values
            .iter()
            .zip(multiplier.iter())
            .map(|(a, m)| a * m)
            .collect();
        Ok(GridFunction {
            grid: self.grid.clone(),
            values,
        })
    }

    pub fn map(&self, f: impl Fn(Complex64) -> Complex64) -> GridFunction {
        GridFunction {
            grid: self.grid.clone(),
            values: self.values.iter().map(|&v| f(v)).collect(),
        }
    }

    pub fn conj(&self) -> GridFunction {
        self.map(|v| v.conj())
    }

    /// a*self + b*other.
    pub fn axpby(&self, a: Complex64, other: &GridFunction, b: Complex64) -> GridFunction {
        let values = self
            .values
            .iter()
            .zip(other.values.iter())
            .map(|(x, y)| a * x + b * y)
            .collect();
        GridFunction {
            grid: self.grid.clone(),
            values,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_nodes() {
        let g = Grid::uniform(2.0, 8).unwrap();
        assert_eq!(g.nodes()[0], -2.0);
        assert_eq!(g.spacing(), 0.5);
        assert_eq!(g.nodes()[7], 1.5);
    }

    #[test]
    fn graded_nodes_cluster_at_zero() {
        let g = Grid::graded(40.0, 4096, 2.0).unwrap();
        let n = g.nodes();
        assert!((n[0] - 40.0 / (4096.0f64 * 4096.0)).abs() < 1e-12);
        assert_eq!(*n.last().unwrap(), 40.0);
        assert!(n.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn norm_of_gaussian() {
        // ||exp(-x^2/2)||_2^2 = sqrt(pi)
        let g = Grid::uniform(20.0, 1 << 12).unwrap();
        let f = GridFunction::sample(&g, |x| Complex64::new((-x * x / 2.0).exp(), 0.0));
        let n2 = f.norm() * f.norm();
        assert!((n2 - std::f64::consts::PI.sqrt()).abs() < 1e-10);
    }

    #[test]
    fn non_power_of_two_rejected() {
        assert!(Grid::uniform(1.0, 100).is_err());
    }
}
