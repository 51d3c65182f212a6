//! Binary fixed-point reals of configurable precision.
//!
//! A [`Fixed`] is `mantissa * 2^-bits`. Every operation rounds to nearest, so
//! each one contributes at most one unit in the last place (`2^-bits`) of
//! error. Two values must share `bits` to be combined.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

pub const DEFAULT_WORKING_BITS: u32 = 128;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixed {
    mantissa: BigInt,
    bits: u32,
}

/// `round(num / den)` for `den > 0`, ties away from zero.
fn div_round(num: BigInt, den: &BigInt) -> BigInt {
    let twice = num * 2;
    let q: BigInt = &twice / den;
    // q = trunc(2n/d); round(n/d) = trunc((q + sign) / 2)
    let adj = if q.is_negative() { q - 1 } else { q + 1 };
    adj / 2
}

impl Fixed {
    pub fn zero(bits: u32) -> Self {
        Fixed {
            mantissa: BigInt::zero(),
            bits,
        }
    }

    pub fn from_mantissa(mantissa: BigInt, bits: u32) -> Self {
        Fixed { mantissa, bits }
    }

    pub fn from_int(n: i64, bits: u32) -> Self {
        Fixed {
            mantissa: BigInt::from(n) << bits,
            bits,
        }
    }

    /// Nearest fixed-point value to `num / den`.
    pub fn from_ratio(num: &BigInt, den: &BigInt, bits: u32) -> Self {
        assert!(den.is_positive(), "denominator must be positive");
        Fixed {
            mantissa: div_round(num.clone() << bits, den),
            bits,
        }
    }

    pub fn from_rational(r: &BigRational, bits: u32) -> Self {
        Self::from_ratio(r.numer(), r.denom(), bits)
    }

    /// Nearest fixed-point value to `sqrt(n)`.
    pub fn sqrt_int(n: u64, bits: u32) -> Self {
        // isqrt(n * 4^(bits+1)) carries one extra bit for rounding.
        let wide = BigInt::from(n) << (2 * (bits + 1));
        let root = wide.sqrt();
        Fixed {
            mantissa: (root + 1) >> 1,
            bits,
        }
    }

    /// `pi` via Machin's formula `16 atan(1/5) - 4 atan(1/239)`.
    pub fn pi(bits: u32) -> Self {
        let guard = 16;
        let work = bits + guard;
        let atan_inv = |x: u64| -> BigInt {
            // atan(1/x) = sum (-1)^k / ((2k+1) x^(2k+1)), each term truncated.
            let one = BigInt::from(1) << work;
            let x2 = BigInt::from(x * x);
            let mut power = one / x;
            let mut sum = BigInt::zero();
            let mut k = 0u64;
            while !power.is_zero() {
                let term = &power / BigInt::from(2 * k + 1);
                if k % 2 == 0 {
                    sum += term;
                } else {
                    sum -= term;
                }
                power /= &x2;
                k += 1;
            }
            sum
        };
        let pi = atan_inv(5) * 16 - atan_inv(239) * 4;
        Fixed {
            mantissa: (pi + (BigInt::from(1) << (guard - 1))) >> guard,
            bits,
        }
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// `2^-bits`.
    pub fn ulp(&self) -> f64 {
        (-(self.bits as f64)).exp2()
    }

    pub fn mul(&self, other: &Fixed) -> Fixed {
        debug_assert_eq!(self.bits, other.bits);
        let prod = &self.mantissa * &other.mantissa;
        Fixed {
            mantissa: div_round(prod, &(BigInt::from(1) << self.bits)),
            bits: self.bits,
        }
    }

    pub fn div(&self, other: &Fixed) -> Fixed {
        debug_assert_eq!(self.bits, other.bits);
        assert!(!other.mantissa.is_zero(), "division by zero");
        let (num, den) = if other.mantissa.is_negative() {
            (-(self.mantissa.clone() << self.bits), -other.mantissa.clone())
        } else {
            (self.mantissa.clone() << self.bits, other.mantissa.clone())
        };
        Fixed {
            mantissa: div_round(num, &den),
            bits: self.bits,
        }
    }

    /// Exact product with an integer.
    pub fn mul_int(&self, k: i64) -> Fixed {
        Fixed {
            mantissa: &self.mantissa * k,
            bits: self.bits,
        }
    }

    pub fn div_int(&self, k: u64) -> Fixed {
        assert!(k > 0, "division by zero");
        Fixed {
            mantissa: div_round(self.mantissa.clone(), &BigInt::from(k)),
            bits: self.bits,
        }
    }

    /// `self * num / den` with a single rounding.
    pub fn mul_ratio(&self, num: u64, den: u64) -> Fixed {
        assert!(den > 0, "division by zero");
        Fixed {
            mantissa: div_round(&self.mantissa * num, &BigInt::from(den)),
            bits: self.bits,
        }
    }

    pub fn add(&self, other: &Fixed) -> Fixed {
        debug_assert_eq!(self.bits, other.bits);
        Fixed {
            mantissa: &self.mantissa + &other.mantissa,
            bits: self.bits,
        }
    }

    pub fn sub(&self, other: &Fixed) -> Fixed {
        debug_assert_eq!(self.bits, other.bits);
        Fixed {
            mantissa: &self.mantissa - &other.mantissa,
            bits: self.bits,
        }
    }

    pub fn abs(&self) -> Fixed {
        Fixed {
            mantissa: self.mantissa.abs(),
            bits: self.bits,
        }
    }

    /// Exact rational value of this fixed-point number.
    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.mantissa.clone(), BigInt::from(1) << self.bits)
    }

    pub fn to_f64(&self) -> f64 {
        // Keep 64 significant fraction bits before converting.
        if self.bits > 64 {
            let shift = self.bits - 64;
            let top = &self.mantissa >> shift;
            top.to_f64().unwrap_or(f64::NAN) * (-64f64).exp2()
        } else {
            self.mantissa.to_f64().unwrap_or(f64::NAN) * (-(self.bits as f64)).exp2()
        }
    }
}

impl PartialOrd for Fixed {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        if self.bits != other.bits {
            return None;
        }
        Some(self.mantissa.cmp(&other.mantissa))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Pow;

    #[test]
    fn pi_digits() {
        // 50 decimal digits of pi.
        let reference: BigRational = "314159265358979323846264338327950288419716939937510"
            .parse::<BigInt>()
            .map(|n| BigRational::new(n, BigInt::from(10).pow(50u32)))
            .unwrap();
        for bits in [64u32, 128, 160] {
            let pi = Fixed::pi(bits).to_rational();
            let err = (pi - &reference).abs();
            let ulp = BigRational::new(BigInt::from(1), BigInt::from(1) << bits);
            assert!(err <= ulp, "bits={bits}");
        }
        assert!((Fixed::pi(53).to_f64() - std::f64::consts::PI).abs() < 1e-15);
    }

    #[test]
    fn sqrt_is_correctly_rounded() {
        for n in [2u64, 3, 5, 8, 12, 13, 200, 1_000_003] {
            let s = Fixed::sqrt_int(n, 100);
            let m = s.mantissa.clone();
            // (m - 1/2)^2 <= n 4^100 <= (m + 1/2)^2
            let target = BigInt::from(n) << 202;
            let lo = Pow::pow(&m * 2u32 - 1u32, 2u32);
            let hi = Pow::pow(&m * 2u32 + 1u32, 2u32);
            assert!(lo <= target && target <= hi, "n={n}");
            assert!((s.to_f64() - (n as f64).sqrt()).abs() < 1e-9);
        }
    }

    #[test]
    fn arithmetic_rounds_to_nearest() {
        let bits = 80;
        let third = Fixed::from_int(1, bits).div(&Fixed::from_int(3, bits));
        let back = third.mul_int(3);
        assert!((back.sub(&Fixed::from_int(1, bits))).mantissa.abs() <= BigInt::from(1));
        let r = Fixed::from_int(7, bits).mul_ratio(5, 9);
        assert!((r.to_f64() - 35.0 / 9.0).abs() < 1e-15);
        let neg = Fixed::from_int(-7, bits).div_int(2);
        assert_eq!(neg.to_f64(), -3.5);
        let q = Fixed::from_int(-1, bits).div(&Fixed::from_int(-4, bits));
        assert_eq!(q.to_f64(), 0.25);
        assert!(Fixed::from_int(1, bits) > Fixed::zero(bits));
        assert_eq!(Fixed::from_int(1, 10).partial_cmp(&Fixed::from_int(1, 11)), None);
    }

    #[test]
    fn to_f64_small_precisions() {
        assert_eq!(Fixed::from_int(3, 4).to_f64(), 3.0);
        assert_eq!(Fixed::from_int(-3, 200).div_int(4).to_f64(), -0.75);
    }
}
