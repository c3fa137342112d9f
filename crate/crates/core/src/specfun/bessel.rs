//! Bessel functions of the first kind, real order, nonnegative real argument.
//!
//! Below [`SERIES_CROSSOVER`] the ascending series is summed in double-double
//! arithmetic, which absorbs the cancellation between terms of size
//! `~e^z/√z`; above it the Hankel asymptotic expansion is used, truncated at
//! its smallest term.

use std::f64::consts::{FRAC_PI_4, PI};

use super::dd::DD;
use super::gamma::gamma;
use crate::{Error, Result};

/// Switch from the power series to the asymptotic expansion.
///
/// The Hankel expansion's best attainable relative error is roughly
/// `e^{-2z}`, so the crossover must sit well above 10 for 1e-9 agreement
/// across a ±20% band.
pub const SERIES_CROSSOVER: f64 = 20.0;

const SERIES_MAX_TERMS: usize = 200;
const ASYMPTOTIC_MAX_TERMS: usize = 60;

/// Real order of the Bessel functions appearing in the 3D wave.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BesselOrder {
    nu: f64,
}

impl BesselOrder {
    pub const PLUS_SIXTH: BesselOrder = BesselOrder { nu: 1.0 / 6.0 };
    pub const MINUS_SIXTH: BesselOrder = BesselOrder { nu: -1.0 / 6.0 };

    pub fn nu(self) -> f64 {
        self.nu
    }

    /// The opposite order, `-ν`.
    pub fn negated(self) -> BesselOrder {
        BesselOrder { nu: -self.nu }
    }
}

impl TryFrom<f64> for BesselOrder {
    type Error = Error;

    fn try_from(nu: f64) -> Result<Self> {
        if (nu - 1.0 / 6.0).abs() < 1e-15 {
            Ok(Self::PLUS_SIXTH)
        } else if (nu + 1.0 / 6.0).abs() < 1e-15 {
            Ok(Self::MINUS_SIXTH)
        } else {
            Err(Error::Domain { what: "Bessel order (only ±1/6 admitted)", value: nu })
        }
    }
}

/// `J_ν(z)` for `ν = ±1/6`.
pub fn bessel_j(order: BesselOrder, z: f64) -> Result<f64> {
    bessel_j_real(order.nu, z)
}

/// `J'_ν(z) = (J_{ν-1}(z) - J_{ν+1}(z)) / 2`, `z > 0`.
pub fn bessel_j_prime(order: BesselOrder, z: f64) -> Result<f64> {
    bessel_j_prime_real(order.nu, z)
}

/// `√(J_ν² + Y_ν²)`, the non-oscillating modulus of the order-`ν` pair.
///
/// `Y_ν` is formed from `J_{±ν}`; tends to `√(2/(πz))` for large `z`.
pub fn bessel_modulus(order: BesselOrder, z: f64) -> Result<f64> {
    let nu = order.nu;
    let j = bessel_j_real(nu, z)?;
    let jm = bessel_j_real(-nu, z)?;
    let y = (j * (nu * PI).cos() - jm) / (nu * PI).sin();
    Ok(j.hypot(y))
}

/// First positive zero of `J_ν`, bracketed by interlacing with the zeros of
/// `J_{-1/2}`, `J_0` and `J_1` and refined by bisection.
pub fn bessel_j_first_zero(order: BesselOrder) -> Result<f64> {
    let (a, b) = if order.nu > 0.0 {
        (2.405, 3.832)
    } else {
        (PI / 2.0, 2.404)
    };
    crate::roots::bisect(|z| bessel_j(order, z).unwrap_or(f64::NAN), a, b, 0.0, "J_nu")
}

/// `J_ν(z)` for any real `ν`, `z >= 0`.
///
/// Errors for `z < 0` and for `z = 0` with negative non-integer order.
pub fn bessel_j_real(nu: f64, z: f64) -> Result<f64> {
    if !(z >= 0.0) || !z.is_finite() {
        return Err(Error::Domain { what: "Bessel argument", value: z });
    }
    if nu < 0.0 && nu == nu.floor() {
        // J_{-n} = (-1)^n J_n
        let n = -nu;
        let sign = if (n as i64) % 2 == 0 { 1.0 } else { -1.0 };
        return bessel_j_real(n, z).map(|v| sign * v);
    }
    if z == 0.0 {
        return if nu == 0.0 {
            Ok(1.0)
        } else if nu > 0.0 {
            Ok(0.0)
        } else {
            Err(Error::BesselDivergence { nu })
        };
    }
    if z < SERIES_CROSSOVER {
        bessel_j_series(nu, z)
    } else {
        Ok(bessel_j_asymptotic(nu, z))
    }
}

pub(crate) fn bessel_j_prime_real(nu: f64, z: f64) -> Result<f64> {
    if !(z > 0.0) {
        return Err(Error::Domain { what: "Bessel derivative argument", value: z });
    }
    Ok(0.5 * (bessel_j_real(nu - 1.0, z)? - bessel_j_real(nu + 1.0, z)?))
}

/// `Σ_k (-1)^k (z/2)^{2k+ν} / (k! Γ(k+ν+1))`, for non-negative-integer-free
/// `k + ν + 1`.
pub(crate) fn bessel_j_series(nu: f64, z: f64) -> Result<f64> {
    let half = 0.5 * z;
    let lead = half.powf(nu) / gamma(nu + 1.0)?;
    let q = -DD::mul_f64s(half, half);
    let mut term = DD::ONE;
    let mut sum = DD::ONE;
    let mut largest = 1.0_f64;
    for k in 0..SERIES_MAX_TERMS {
        let kp1 = (k + 1) as f64;
        let denom = DD::from_f64(kp1) * DD::add_f64s(kp1, nu);
        term = term * q / denom;
        sum = sum + term;
        largest = largest.max(term.abs());
        let decreasing = half * half < kp1 * (kp1 + nu).abs();
        if decreasing && term.abs() < 1e-34 * largest {
            break;
        }
    }
    Ok(lead * sum.to_f64())
}

/// Hankel expansion `√(2/(πz)) (P cos ω − Q sin ω)`, `ω = z − νπ/2 − π/4`.
pub(crate) fn bessel_j_asymptotic(nu: f64, z: f64) -> f64 {
    let mu = 4.0 * nu * nu;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut term = 1.0_f64;
    let mut prev = f64::INFINITY;
    for k in 1..ASYMPTOTIC_MAX_TERMS {
        let odd = (2 * k - 1) as f64;
        let next = term * (mu - odd * odd) / (8.0 * k as f64 * z);
        if next.abs() >= prev || next == 0.0 {
            break;
        }
        prev = next.abs();
        term = next;
        // a_k / z^k enters P for even k, Q for odd k, with alternating signs
        match k % 4 {
            1 => q += term,
            2 => p -= term,
            3 => q -= term,
            _ => p += term,
        }
    }
    let phase = 0.5 * nu * PI + FRAC_PI_4;
    let (sz, cz) = z.sin_cos();
    let (sp, cp) = phase.sin_cos();
    let cos_w = cz * cp + sz * sp;
    let sin_w = sz * cp - cz * sp;
    (2.0 / (PI * z)).sqrt() * (p * cos_w - q * sin_w)
}

/// Largest discrepancy between the two evaluation routes at `z`, relative to
/// the local amplitude `√(2/(πz))`.
pub fn crossover_discrepancy(order: BesselOrder, z: f64) -> Result<f64> {
    let s = bessel_j_series(order.nu, z)?;
    let a = bessel_j_asymptotic(order.nu, z);
    Ok((s - a).abs() / (2.0 / (PI * z)).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;

    const NU: f64 = 1.0 / 6.0;

    // (z, J_{1/6}(z), J_{-1/6}(z)) at 40 digits
    const REFERENCE: [(f64, f64, f64); 7] = [
        (0.5, 0.810_363_730_323_723_737_977_951_934_853_144_921_864, 1.033_876_045_315_240_802_184_310_523_036_623_839_432),
        (2.0, 0.346_053_212_769_992_081_572_065_010_222_084_798_021_3, 0.080_777_061_901_648_449_921_751_307_512_252_274_433_52),
        (5.0, -0.250_773_584_323_055_897_586_885_310_656_124_628_672_3, -0.090_781_416_444_459_456_073_673_557_601_165_554_906_34),
        (12.0, -0.011_966_811_602_385_175_958_018_287_157_711_884_344_41, 0.104_601_612_376_109_990_402_391_217_928_189_365_555),
        (20.0, 0.177_537_060_806_617_349_583_345_134_794_656_188_932_7, 0.145_051_387_916_468_725_112_344_682_135_631_461_461_4),
        (30.0, -0.113_742_219_785_164_426_032_392_797_757_519_635_745_2, -0.053_004_334_495_730_571_723_751_212_322_317_660_844_73),
        (45.0, 0.118_877_595_930_561_451_942_324_236_748_636_579_801_3, 0.104_851_519_818_624_232_673_454_244_275_331_417_860_2),
    ];

    #[test]
    fn matches_frozen_reference_values() {
        for (z, jp, jm) in REFERENCE {
            let a = bessel_j(BesselOrder::PLUS_SIXTH, z).unwrap();
            let b = bessel_j(BesselOrder::MINUS_SIXTH, z).unwrap();
            assert!((a - jp).abs() <= 1e-10 * jp.abs(), "J_(1/6)({z}) = {a}, want {jp}");
            assert!((b - jm).abs() <= 1e-10 * jm.abs(), "J_(-1/6)({z}) = {b}, want {jm}");
        }
    }

    #[test]
    fn leading_term_near_zero() {
        let g = gamma(1.0 + NU).unwrap();
        for z in [1e-8, 1e-6, 1e-4] {
            let ratio = bessel_j(BesselOrder::PLUS_SIXTH, z).unwrap() / (0.5 * z).powf(NU);
            assert!((ratio * g - 1.0).abs() < 1e-8);
        }
        assert_eq!(bessel_j(BesselOrder::PLUS_SIXTH, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            bessel_j(BesselOrder::MINUS_SIXTH, 0.0),
            Err(Error::BesselDivergence { .. })
        ));
        assert!(matches!(bessel_j(BesselOrder::PLUS_SIXTH, -1.0), Err(Error::Domain { .. })));
        assert!(BesselOrder::try_from(0.5).is_err());
        assert_eq!(BesselOrder::try_from(-1.0 / 6.0).unwrap(), BesselOrder::MINUS_SIXTH);
    }

    #[test]
    fn integer_orders() {
        // J_0(2.404825557695773) is a zero; J_{-1} = -J_1
        assert!(bessel_j_real(0.0, 2.404_825_557_695_773).unwrap().abs() < 1e-14);
        let j1 = bessel_j_real(1.0, 1.3).unwrap();
        assert!((bessel_j_real(-1.0, 1.3).unwrap() + j1).abs() < 1e-16);
        assert_eq!(bessel_j_real(0.0, 0.0).unwrap(), 1.0);
    }

    #[test]
    fn wronskian_at_two() {
        let z = 2.0;
        let w = bessel_j(BesselOrder::PLUS_SIXTH, z).unwrap()
            * bessel_j_prime(BesselOrder::MINUS_SIXTH, z).unwrap()
            - bessel_j_prime(BesselOrder::PLUS_SIXTH, z).unwrap()
                * bessel_j(BesselOrder::MINUS_SIXTH, z).unwrap();
        let want = -1.0 / (2.0 * PI);
        assert!((w - want).abs() < 1e-12);
    }

    #[test]
    fn crossover_band_consistency() {
        for i in 0..=80 {
            let z = 0.8 * SERIES_CROSSOVER + 0.4 * SERIES_CROSSOVER * i as f64 / 80.0;
            for order in [BesselOrder::PLUS_SIXTH, BesselOrder::MINUS_SIXTH] {
                let d = crossover_discrepancy(order, z).unwrap();
                assert!(d < 1e-9, "z = {z}: discrepancy {d:e}");
            }
        }
    }

    #[test]
    fn first_zero_frozen() {
        let j = bessel_j_first_zero(BesselOrder::PLUS_SIXTH).unwrap();
        assert!(j > 2.405 && j < 3.832);
        assert!((j - 2.657_505_577_670_393_3).abs() < 1e-10);
        assert!(bessel_j(BesselOrder::PLUS_SIXTH, j).unwrap().abs() < 1e-9);
        let jm = bessel_j_first_zero(BesselOrder::MINUS_SIXTH).unwrap();
        assert!(bessel_j(BesselOrder::MINUS_SIXTH, jm).unwrap().abs() < 1e-9);
        assert!(jm < j);
    }

    #[test]
    fn modulus_tends_to_envelope() {
        let z = 200.0;
        let m = bessel_modulus(BesselOrder::PLUS_SIXTH, z).unwrap();
        assert!((m / (2.0 / (PI * z)).sqrt() - 1.0).abs() < 1e-5);
    }
}
