//! Derivative backends: analytic jets, Richardson-extrapolated central
//! differences for evaluators, and Fornberg stencils for sampled fields.

use crate::{Error, Result, ScalarField};

/// Default step of the finite-difference backend (dimensionless).
pub const DEFAULT_FD_STEP: f64 = 1e-3;

/// Value with first and second derivative at a point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet {
    pub value: f64,
    pub d1: f64,
    pub d2: f64,
}

impl Jet {
    pub fn new(value: f64, d1: f64, d2: f64) -> Self {
        Self { value, d1, d2 }
    }

    pub fn constant(value: f64) -> Self {
        Self { value, d1: 0.0, d2: 0.0 }
    }
}

/// A twice-differentiable function of one coordinate.
pub trait Profile {
    fn jet(&self, x: f64) -> Result<Jet>;

    fn value(&self, x: f64) -> Result<f64> {
        self.jet(x).map(|j| j.value)
    }
}

impl<P: Profile + ?Sized> Profile for &P {
    fn jet(&self, x: f64) -> Result<Jet> {
        (**self).jet(x)
    }
}

/// Profile with analytically known derivatives.
pub struct ClosedForm<F>(pub F);

impl<F> Profile for ClosedForm<F>
where
    F: Fn(f64) -> Result<Jet>,
{
    fn jet(&self, x: f64) -> Result<Jet> {
        (self.0)(x)
    }
}

/// Profile whose derivatives come from Richardson-extrapolated central differences.
pub struct FiniteDiff<F> {
    f: F,
    step: f64,
}

impl<F> FiniteDiff<F>
where
    F: Fn(f64) -> f64,
{
    pub fn new(f: F) -> Self {
        Self { f, step: DEFAULT_FD_STEP }
    }

    pub fn with_step(f: F, step: f64) -> Self {
        Self { f, step }
    }
}

impl<F> Profile for FiniteDiff<F>
where
    F: Fn(f64) -> f64,
{
    fn jet(&self, x: f64) -> Result<Jet> {
        Ok(Jet {
            value: (self.f)(x),
            d1: richardson_d1(&self.f, x, self.step),
            d2: richardson_d2(&self.f, x, self.step),
        })
    }
}

const RICHARDSON_LEVELS: usize = 3;

/// Neville tableau for a central difference whose error expands in `h²`.
fn richardson<D: Fn(f64) -> f64>(d: D, h: f64) -> f64 {
    let mut table = [0.0; RICHARDSON_LEVELS];
    let mut hk = h;
    for k in 0..RICHARDSON_LEVELS {
        table[k] = d(hk);
        let mut factor = 4.0;
        for j in (0..k).rev() {
            table[j] = table[j + 1] + (table[j + 1] - table[j]) / (factor - 1.0);
            factor *= 4.0;
        }
        // after the inner loop table[0] holds the most extrapolated value
        hk *= 0.5;
    }
    table[0]
}

pub fn richardson_d1<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> f64 {
    richardson(|h| (f(x + h) - f(x - h)) / (2.0 * h), h)
}

pub fn richardson_d2<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> f64 {
    let fx = f(x);
    richardson(|h| (f(x + h) - 2.0 * fx + f(x - h)) / (h * h), h)
}

/// Fornberg's weights for derivatives `0..=max_order` at `x0` on `stencil`.
///
/// Returns `w[m][j]`, the weight of node `j` in the `m`-th derivative.
pub fn fd_weights(x0: f64, stencil: &[f64], max_order: usize) -> Vec<Vec<f64>> {
    let n = stencil.len();
    let mut c = vec![vec![0.0; n]; max_order + 1];
    c[0][0] = 1.0;
    let mut c1 = 1.0;
    let mut c4 = stencil[0] - x0;
    for i in 1..n {
        let mn = i.min(max_order);
        let mut c2 = 1.0;
        let c5 = c4;
        c4 = stencil[i] - x0;
        for j in 0..i {
            let c3 = stencil[i] - stencil[j];
            c2 *= c3;
            if j == i - 1 {
                for k in (1..=mn).rev() {
                    c[k][i] = c1 * (k as f64 * c[k - 1][i - 1] - c5 * c[k][i - 1]) / c2;
                }
                c[0][i] = -c1 * c5 * c[0][i - 1] / c2;
            }
            for k in (1..=mn).rev() {
                c[k][j] = (c4 * c[k][j] - k as f64 * c[k - 1][j]) / c3;
            }
            c[0][j] = c4 * c[0][j] / c3;
        }
        c1 = c2;
    }
    c
}

pub const FIELD_STENCIL: usize = 5;

/// First and second derivatives of a sampled field at every node, from
/// five-point stencils (centred in the interior, shifted at the ends).
pub fn field_derivatives(field: &ScalarField) -> Result<(Vec<f64>, Vec<f64>)> {
    let x = field.grid().nodes();
    let y = field.values();
    let n = x.len();
    if n < FIELD_STENCIL {
        return Err(Error::InsufficientGrid { needed: FIELD_STENCIL, got: n });
    }
    let mut d1 = Vec::with_capacity(n);
    let mut d2 = Vec::with_capacity(n);
    for i in 0..n {
        let lo = i.saturating_sub(FIELD_STENCIL / 2).min(n - FIELD_STENCIL);
        let st = &x[lo..lo + FIELD_STENCIL];
        let w = fd_weights(x[i], st, 2);
        let vals = &y[lo..lo + FIELD_STENCIL];
        d1.push(w[1].iter().zip(vals).map(|(a, b)| a * b).sum());
        d2.push(w[2].iter().zip(vals).map(|(a, b)| a * b).sum());
    }
    Ok((d1, d2))
}
