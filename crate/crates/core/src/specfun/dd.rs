//! Minimal double-double arithmetic for the Bessel power series.
//!
//! About 106 bits of significand; only the operations the series needs.

use std::ops::{Add, Div, Mul, Neg};

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct DD {
    hi: f64,
    lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl DD {
    pub(crate) const ONE: DD = DD { hi: 1.0, lo: 0.0 };

    pub(crate) fn from_f64(x: f64) -> Self {
        DD { hi: x, lo: 0.0 }
    }

    /// Exact product of two doubles.
    pub(crate) fn mul_f64s(a: f64, b: f64) -> Self {
        let (hi, lo) = two_prod(a, b);
        DD { hi, lo }
    }

    /// Exact sum of two doubles.
    pub(crate) fn add_f64s(a: f64, b: f64) -> Self {
        let (hi, lo) = two_sum(a, b);
        DD { hi, lo }
    }

    pub(crate) fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub(crate) fn abs(self) -> f64 {
        self.hi.abs()
    }
}

impl Add for DD {
    type Output = DD;
    fn add(self, o: DD) -> DD {
        let (s1, s2) = two_sum(self.hi, o.hi);
        let (t1, t2) = two_sum(self.lo, o.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (hi, lo) = quick_two_sum(s1, s2 + t2);
        DD { hi, lo }
    }
}

impl Neg for DD {
    type Output = DD;
    fn neg(self) -> DD {
        DD { hi: -self.hi, lo: -self.lo }
    }
}

impl Mul for DD {
    type Output = DD;
    fn mul(self, o: DD) -> DD {
        let (p, e) = two_prod(self.hi, o.hi);
        let e = e + (self.hi * o.lo + self.lo * o.hi);
        let (hi, lo) = quick_two_sum(p, e);
        DD { hi, lo }
    }
}

impl Div for DD {
    type Output = DD;
    fn div(self, o: DD) -> DD {
        // long division, two correction steps
        let q1 = self.hi / o.hi;
        let r = self + -(o * DD::from_f64(q1));
        let q2 = r.hi / o.hi;
        let r = r + -(o * DD::from_f64(q2));
        let q3 = r.hi / o.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        DD { hi, lo } + DD::from_f64(q3)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn third_times_three_is_one_to_dd_precision() {
        let third = DD::ONE / DD::from_f64(3.0);
        let back = third * DD::from_f64(3.0) + -DD::ONE;
        assert!(back.abs() < 1e-31);
    }

    #[test]
    fn recovers_bits_lost_in_f64_sum() {
        let s = DD::from_f64(1.0) + DD::from_f64(1e-20) + DD::from_f64(-1.0);
        assert!((s.to_f64() - 1e-20).abs() < 1e-35);
        assert_eq!(DD::add_f64s(1.0, 1e-20).lo, 1e-20);
    }
}
