//! Special functions: Gamma for real arguments and Bessel functions of the
//! first kind of order ±1/6.

pub mod bessel;
mod dd;
pub mod gamma;

pub use bessel::{
    bessel_j, bessel_j_first_zero, bessel_j_prime, bessel_modulus, crossover_discrepancy,
    BesselOrder, SERIES_CROSSOVER,
};
pub use gamma::gamma;
