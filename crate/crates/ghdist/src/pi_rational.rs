//! Exact arithmetic on rational multiples of π.
//!
//! Every distance in a regular-polygon vertex space is `q·π` for a rational
//! `q`, and so is every closed-form distance value built from them. Carrying
//! the coefficient as an exact fraction lets the closed-form tables and the
//! explicit-correspondence checks be bit-exact instead of tolerance-based.

use std::cmp::Ordering;
use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// A value `num/den · π`, stored in lowest terms with `den > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PiRational {
    num: i64,
    den: i64,
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl PiRational {
    pub const ZERO: PiRational = PiRational { num: 0, den: 1 };
    pub const PI: PiRational = PiRational { num: 1, den: 1 };

    /// `num/den · π`, reduced. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> PiRational {
        assert!(den != 0, "PiRational denominator must be nonzero");
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd(num, den).max(1);
        PiRational {
            num: sign * num / g,
            den: sign * den / g,
        }
    }

    fn from_i128(num: i128, den: i128) -> PiRational {
        debug_assert!(den > 0);
        let g = {
            let (mut a, mut b) = (num.abs(), den);
            while b != 0 {
                let t = a % b;
                a = b;
                b = t;
            }
            a.max(1)
        };
        let (num, den) = (num / g, den / g);
        assert!(
            num >= i64::MIN as i128 && num <= i64::MAX as i128 && den <= i64::MAX as i128,
            "PiRational overflow"
        );
        PiRational {
            num: num as i64,
            den: den as i64,
        }
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    /// The floating-point value `num·π/den`.
    pub fn value(&self) -> f64 {
        self.num as f64 * PI / self.den as f64
    }

    pub fn abs(self) -> PiRational {
        PiRational {
            num: self.num.abs(),
            den: self.den,
        }
    }

    /// Recover the exact coefficient from a float that is (close to) a
    /// rational multiple of π with denominator at most `max_den`.
    ///
    /// Runs the continued-fraction expansion of `x/π` and accepts the last
    /// convergent with denominator within bounds, provided it reproduces `x`
    /// to near machine precision. Returns `None` for values that are not
    /// π-multiples at that precision (e.g. `1.0`).
    pub fn approx_pi_multiple(x: f64, max_den: i64) -> Option<PiRational> {
        if !x.is_finite() || max_den < 1 {
            return None;
        }
        if x == 0.0 {
            return Some(PiRational::ZERO);
        }
        let target = x / PI;
        // Convergents p/q of the continued fraction of |target|.
        let t = target.abs();
        let (mut p0, mut q0, mut p1, mut q1) = (1i64, 0i64, t.floor() as i64, 1i64);
        let mut frac = t - t.floor();
        for _ in 0..64 {
            if frac.abs() < 1e-15 {
                break;
            }
            let r = 1.0 / frac;
            let a = r.floor();
            if a > max_den as f64 {
                break;
            }
            frac = r - a;
            let a = a as i64;
            let p2 = match a.checked_mul(p1).and_then(|v| v.checked_add(p0)) {
                Some(v) => v,
                None => break,
            };
            let q2 = match a.checked_mul(q1).and_then(|v| v.checked_add(q0)) {
                Some(v) => v,
                None => break,
            };
            if q2 > max_den {
                break;
            }
            (p0, q0, p1, q1) = (p1, q1, p2, q2);
        }
        let cand = PiRational::new(if target < 0.0 { -p1 } else { p1 }, q1);
        let err = (cand.value() - x).abs();
        if err <= 1e-13 * x.abs().max(PI) {
            Some(cand)
        } else {
            None
        }
    }
}

impl Add for PiRational {
    type Output = PiRational;
    fn add(self, rhs: PiRational) -> PiRational {
        let num = self.num as i128 * rhs.den as i128 + rhs.num as i128 * self.den as i128;
        let den = self.den as i128 * rhs.den as i128;
        PiRational::from_i128(num, den)
    }
}

impl Sub for PiRational {
    type Output = PiRational;
    fn sub(self, rhs: PiRational) -> PiRational {
        self + (-rhs)
    }
}

impl Neg for PiRational {
    type Output = PiRational;
    fn neg(self) -> PiRational {
        PiRational {
            num: -self.num,
            den: self.den,
        }
    }
}

impl PartialOrd for PiRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PiRational {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.num as i128 * other.den as i128;
        let rhs = other.num as i128 * self.den as i128;
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for PiRational {
    /// Reduced `aπ/b` form: `0`, `π`, `-π/2`, `2π/3`, `3π`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.num == 0 {
            return write!(f, "0");
        }
        if self.num < 0 {
            write!(f, "-")?;
        }
        let n = self.num.abs();
        if n != 1 {
            write!(f, "{n}")?;
        }
        write!(f, "\u{3c0}")?;
        if self.den != 1 {
            write!(f, "/{}", self.den)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_to_lowest_terms() {
        let q = PiRational::new(4, 6);
        assert_eq!((q.num(), q.den()), (2, 3));
        let q = PiRational::new(3, -6);
        assert_eq!((q.num(), q.den()), (-1, 2));
        assert_eq!(PiRational::new(0, -5), PiRational::ZERO);
    }

    #[test]
    fn arithmetic_and_order() {
        // π/n − π/m for (n, m) = (4, 12) is π/6.
        let d = PiRational::new(1, 4) - PiRational::new(1, 12);
        assert_eq!(d, PiRational::new(1, 6));
        assert!(PiRational::new(1, 3) > PiRational::new(1, 4));
        assert_eq!(PiRational::new(-2, 5).abs(), PiRational::new(2, 5));
    }

    #[test]
    fn display_forms() {
        assert_eq!(PiRational::ZERO.to_string(), "0");
        assert_eq!(PiRational::PI.to_string(), "π");
        assert_eq!(PiRational::new(1, 6).to_string(), "π/6");
        assert_eq!(PiRational::new(2, 3).to_string(), "2π/3");
        assert_eq!(PiRational::new(-1, 2).to_string(), "-π/2");
        assert_eq!(PiRational::new(3, 1).to_string(), "3π");
    }

    #[test]
    fn recovers_exact_multiples() {
        for (num, den) in [(1, 2), (2, 3), (6, 7), (9999, 10000), (-5, 8), (3, 1)] {
            let x = PiRational::new(num, den).value();
            let q = PiRational::approx_pi_multiple(x, 10_000).unwrap();
            assert_eq!(q, PiRational::new(num, den));
            assert_eq!(q.value(), x);
        }
    }

    #[test]
    fn rejects_non_multiples() {
        assert_eq!(PiRational::approx_pi_multiple(1.0, 10_000), None);
        assert_eq!(PiRational::approx_pi_multiple(f64::NAN, 10_000), None);
        assert_eq!(
            PiRational::approx_pi_multiple(0.0, 10_000),
            Some(PiRational::ZERO)
        );
    }
}
