//! Sampled real functions on 1D or radial grids.

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct Grid {
    nodes: Vec<f64>,
}

impl Grid {
    /// Strictly increasing, finite nodes.
    pub fn from_nodes(nodes: Vec<f64>) -> Result<Self> {
        if nodes.iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidGrid("non-finite node".into()));
        }
        if nodes.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::InvalidGrid("nodes must be strictly increasing".into()));
        }
        Ok(Self { nodes })
    }

    pub fn uniform(a: f64, b: f64, n: usize) -> Result<Self> {
        if n < 2 || !(b > a) {
            return Err(Error::InvalidGrid(format!("uniform grid needs n >= 2 and a < b, got [{a}, {b}], n = {n}")));
        }
        let h = (b - a) / (n - 1) as f64;
        let mut nodes: Vec<f64> = (0..n).map(|i| a + h * i as f64).collect();
        nodes[n - 1] = b;
        Self::from_nodes(nodes)
    }

    /// Geometric spacing between `0 < a < b`.
    pub fn log_spaced(a: f64, b: f64, n: usize) -> Result<Self> {
        if !(a > 0.0) {
            return Err(Error::InvalidGrid(format!("log-spaced grid needs a > 0, got {a}")));
        }
        let g = Self::uniform(a.ln(), b.ln(), n)?;
        let mut nodes: Vec<f64> = g.nodes.iter().map(|t| t.exp()).collect();
        nodes[0] = a;
        nodes[n - 1] = b;
        Self::from_nodes(nodes)
    }

    /// Nodes on `[a, b]` placed so that every local spacing is at most
    /// `wavelength(x) / per_wavelength`, with at least `min_nodes` nodes.
    pub fn resolved<W>(a: f64, b: f64, wavelength: W, per_wavelength: usize, min_nodes: usize) -> Result<Self>
    where
        W: Fn(f64) -> f64,
    {
        if !(b > a) {
            return Err(Error::InvalidGrid(format!("empty span [{a}, {b}]")));
        }
        let cap = (b - a) / (min_nodes.max(2) - 1) as f64;
        let mut nodes = vec![a];
        let mut x = a;
        while x < b {
            // the target spacing is evaluated at both ends of the step so that
            // shrinking wavelengths are respected in either direction
            let mut h = cap.min(wavelength(x) / per_wavelength as f64);
            h = h.min(wavelength((x + h).min(b)) / per_wavelength as f64);
            if !(h > 0.0) {
                return Err(Error::InvalidGrid(format!("non-positive spacing at {x}")));
            }
            x = if x + h >= b - 1e-12 * h { b } else { x + h };
            nodes.push(x);
        }
        Self::from_nodes(nodes)
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn start(&self) -> f64 {
        self.nodes[0]
    }

    pub fn end(&self) -> f64 {
        self.nodes[self.nodes.len() - 1]
    }

    /// Largest distance from node `i` to a neighbour.
    pub fn local_spacing(&self, i: usize) -> f64 {
        let left = if i > 0 { self.nodes[i] - self.nodes[i - 1] } else { 0.0 };
        let right = if i + 1 < self.nodes.len() { self.nodes[i + 1] - self.nodes[i] } else { 0.0 };
        left.max(right)
    }
}

/// Real values attached to the nodes of a [`Grid`].
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct ScalarField {
    grid: Grid,
    values: Vec<f64>,
}

impl ScalarField {
    pub fn new(grid: Grid, values: Vec<f64>) -> Result<Self> {
        if grid.len() != values.len() {
            return Err(Error::InvalidGrid(format!(
                "{} values for {} nodes",
                values.len(),
                grid.len()
            )));
        }
        Ok(Self { grid, values })
    }

    pub fn from_fn<F: Fn(f64) -> f64>(grid: Grid, f: F) -> Self {
        let values = grid.nodes().iter().map(|&x| f(x)).collect();
        Self { grid, values }
    }

    pub fn try_from_fn<F: Fn(f64) -> Result<f64>>(grid: Grid, f: F) -> Result<Self> {
        let values = grid.nodes().iter().map(|&x| f(x)).collect::<Result<_>>()?;
        Ok(Self { grid, values })
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn iter(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.grid.nodes().iter().copied().zip(self.values.iter().copied())
    }

    pub fn map<F: Fn(f64, f64) -> f64>(&self, f: F) -> ScalarField {
        let values = self.iter().map(|(x, v)| f(x, v)).collect();
        ScalarField { grid: self.grid.clone(), values }
    }

    /// `max_i |self_i - f(x_i)|`.
    pub fn max_abs_error<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.iter().map(|(x, v)| (v - f(x)).abs()).fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }
}
