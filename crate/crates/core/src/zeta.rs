//! Special values of Dedekind zeta functions of `Q` and real quadratic fields.
//!
//! Exact values at `s = -1` come from Siegel's divisor-sum formula. The
//! numeric side evaluates `zeta_F(2)` as an Euler product and checks the
//! functional-equation identity
//! `zeta_F(2) = (2 pi)^(2n) 2^(-n) d_F^(-3/2) |zeta_F(-1)|`
//! against the exact value, so every exact value has an independent witness.
//!
//! For a real quadratic field with discriminant `D`, `zeta_F = zeta * L(chi_D)`
//! where `chi_D` is the Kronecker character. Grouped by rational primes the
//! Euler factors are `(1 - p^-2)^-1 (1 - chi_D(p) p^-2)^-1`; the first family
//! multiplies out to `zeta(2) = pi^2/6`, which is used in closed form, and the
//! second is accumulated prime by prime in ascending order.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{factorize, primes_up_to, sigma1};
use crate::error::{Error, Result};
use crate::numberfield::{kronecker_symbol, FieldKind, NumberField};
use crate::numeric::{Fixed, DEFAULT_WORKING_BITS};

/// How a special value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Closed form for `Q` (`zeta(-1) = -1/12`, `zeta(0) = -1/2`).
    Classical,
    /// `(1/60) sum_{b^2 < D, b = D mod 2} sigma_1((D - b^2)/4)`. The sum is
    /// positive, which is the sign of `zeta_F(-1)` for real quadratic `F`.
    SiegelSum,
    /// Recovered from numeric `zeta_F(2)` through the functional equation and
    /// rational reconstruction. Only the absolute value is determined.
    FunctionalEquationOracle,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpecialValue {
    pub value: BigRational,
    pub field: NumberField,
    pub argument: i32,
    pub method: Method,
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `zeta_F(-1)`, signed.
pub fn zeta_minus1(field: &NumberField) -> Result<SpecialValue> {
    let (value, method) = match field.kind() {
        FieldKind::Rationals => (rat(-1, 12), Method::Classical),
        FieldKind::RealQuadratic { .. } => {
            (siegel_sum(field.discriminant()), Method::SiegelSum)
        }
    };
    Ok(SpecialValue {
        value,
        field: *field,
        argument: -1,
        method,
    })
}

/// `|zeta_F(-1)|`.
pub fn zeta_minus1_abs(field: &NumberField) -> Result<BigRational> {
    zeta_minus1(field).map(|z| z.value.abs())
}

/// `zeta(0) = -1/2` for `Q`. For real quadratic fields `zeta_F` vanishes at 0.
pub fn zeta_at_zero(field: &NumberField) -> Result<SpecialValue> {
    match field.kind() {
        FieldKind::Rationals => Ok(SpecialValue {
            value: rat(-1, 2),
            field: *field,
            argument: 0,
            method: Method::Classical,
        }),
        FieldKind::RealQuadratic { .. } => Ok(SpecialValue {
            value: BigRational::zero(),
            field: *field,
            argument: 0,
            method: Method::Classical,
        }),
    }
}

fn siegel_sum(disc: u64) -> BigRational {
    let mut total: u64 = 0;
    let mut b: i64 = (disc % 2) as i64;
    // b runs over 0 or 1 and then steps by 2; negative b mirror positive b.
    while (b * b) < disc as i64 {
        let term = sigma1((disc - (b * b) as u64) / 4);
        total += if b == 0 { term } else { 2 * term };
        b += 2;
    }
    BigRational::new(BigInt::from(total), BigInt::from(60))
}

/// Kronecker character `chi_D` tabulated over one period `0..D`.
fn character_table(disc: u64) -> Vec<i8> {
    (0..disc)
        .map(|a| {
            if a == 0 {
                return 0;
            }
            factorize(a)
                .into_iter()
                .map(|(p, k)| kronecker_symbol(disc as i64, p).pow(k))
                .product()
        })
        .collect()
}

/// Euler product `prod_{p <= bound} (1 - chi_D(p) p^-2)^-1`, ascending primes.
#[derive(Debug, Clone)]
struct LEuler {
    disc: u64,
    value: Fixed,
    bound: u64,
    steps: u64,
}

impl LEuler {
    fn new(disc: u64, bits: u32) -> Self {
        LEuler {
            disc,
            value: Fixed::from_int(1, bits),
            bound: 1,
            steps: 0,
        }
    }

    fn extend_to(&mut self, bound: u64) {
        if bound <= self.bound {
            return;
        }
        for p in primes_up_to(bound) {
            if p <= self.bound {
                continue;
            }
            let chi = kronecker_symbol(self.disc as i64, p);
            if chi == 0 {
                continue;
            }
            let p2 = p * p;
            // (1 - chi/p^2)^-1 = p^2 / (p^2 - chi)
            let den = if chi > 0 { p2 - 1 } else { p2 + 1 };
            self.value = self.value.mul_ratio(p2, den);
            self.steps += 1;
        }
        self.bound = bound;
    }

    /// Accumulated rounding error bound (each factor rounds once).
    fn rounding_error(&self) -> f64 {
        (self.steps as f64 + 1.0) * self.value.ulp()
    }
}

/// `L(2, chi_D)` by summing whole periods of the Dirichlet series.
///
/// For an even primitive character, `sum_a chi(a) = sum_a chi(a) a = 0` over a
/// period, so the block `sum_{a=1}^{D} chi(a) (kD + a)^-2` is bounded by
/// `1/(k^4 D)`. After `K` periods the tail is at most `1/(D (K-1)^3)`.
fn l2_dirichlet_blocks(disc: u64, periods: u64, bits: u32) -> (Fixed, f64) {
    let table = character_table(disc);
    let one = BigInt::one() << bits;
    let mut sum = BigInt::zero();
    let mut terms = 0u64;
    for k in 0..periods {
        for (a, &chi) in table.iter().enumerate().skip(1) {
            if chi == 0 {
                continue;
            }
            let n = k * disc + a as u64;
            let n2 = BigInt::from(n) * n;
            let term = &one / n2;
            if chi > 0 {
                sum += term;
            } else {
                sum -= term;
            }
            terms += 1;
        }
    }
    let fixed = Fixed::from_mantissa(sum, bits);
    let truncation = if periods >= 2 {
        1.0 / (disc as f64 * ((periods - 1) as f64).powi(3))
    } else {
        f64::INFINITY
    };
    let rounding = (terms as f64 + 2.0) * fixed.ulp();
    (fixed, truncation + rounding)
}

/// `zeta(2) = pi^2 / 6`.
fn zeta2_rationals(bits: u32) -> Fixed {
    let pi = Fixed::pi(bits);
    pi.mul(&pi).div_int(6)
}

/// `zeta_F(2)` with the `chi_D` Euler product truncated at `prime_bound`.
///
/// No error certificate is attached; see [`zeta_f2_numeric`] for a value
/// with a proven tolerance.
pub fn zeta_f2_euler(field: &NumberField, prime_bound: u64, bits: u32) -> Fixed {
    let zeta2 = zeta2_rationals(bits);
    match field.kind() {
        FieldKind::Rationals => zeta2,
        FieldKind::RealQuadratic { .. } => {
            let mut l = LEuler::new(field.discriminant(), bits);
            l.extend_to(prime_bound);
            zeta2.mul(&l.value)
        }
    }
}

/// A numeric `zeta_F(2)` with a proven error bound.
#[derive(Debug, Clone)]
pub struct NumericZeta {
    pub value: Fixed,
    /// `|value - zeta_F(2)|` is at most this.
    pub error_bound: f64,
    /// Largest prime in the Euler product.
    pub prime_bound: u64,
    pub working_bits: u32,
}

impl NumericZeta {
    pub fn to_f64(&self) -> f64 {
        self.value.to_f64()
    }
}

pub const MIN_TOLERANCE: f64 = 1e-12;
const MAX_PRIME_BOUND: u64 = 1 << 28;
const START_PRIME_BOUND: u64 = 1 << 12;

/// `zeta_F(2)` to within `tol`, at the default working precision.
pub fn zeta_f2_numeric(field: &NumberField, tol: f64) -> Result<NumericZeta> {
    zeta_f2_numeric_with_precision(field, tol, DEFAULT_WORKING_BITS)
}

/// `zeta_F(2)` to within `tol`.
///
/// The prime bound doubles until the Euler product is certified within
/// `tol/2` by a period-blocked Dirichlet series for `L(2, chi_D)` with a
/// rigorous tail bound. Working precision must carry at least twice the
/// binary digits of `tol`.
pub fn zeta_f2_numeric_with_precision(
    field: &NumberField,
    tol: f64,
    bits: u32,
) -> Result<NumericZeta> {
    if !(tol >= MIN_TOLERANCE) {
        return Err(Error::ToleranceTooTight(tol));
    }
    let target_bits = (-tol.log2()).ceil().max(1.0) as u32;
    if bits < 2 * target_bits {
        return Err(Error::ToleranceTooTight(tol));
    }
    let zeta2 = zeta2_rationals(bits);
    // pi to 1 ulp; squaring and dividing add at most ~8 more.
    let zeta2_err = 16.0 * zeta2.ulp();

    let disc = match field.kind() {
        FieldKind::Rationals => {
            return Ok(NumericZeta {
                value: zeta2,
                error_bound: zeta2_err,
                prime_bound: 1,
                working_bits: bits,
            })
        }
        FieldKind::RealQuadratic { .. } => field.discriminant(),
    };

    // zeta(2) < 1.65 and L(2, chi) < zeta(2) scale errors by at most 2.
    let cert_target = tol / 16.0;
    let periods = ((1.0 / (cert_target * disc as f64)).cbrt().ceil() as u64 + 2).max(2);
    let (l_cert, cert_err) = l2_dirichlet_blocks(disc, periods, bits);

    let mut euler = LEuler::new(disc, bits);
    let mut bound = START_PRIME_BOUND;
    loop {
        euler.extend_to(bound);
        let gap = euler.value.sub(&l_cert).abs().to_f64();
        let l_err = gap + cert_err + euler.rounding_error();
        let l_abs = euler.value.to_f64().abs();
        let error_bound = 2.0 * l_err + l_abs * zeta2_err + 4.0 * zeta2.ulp();
        if error_bound < tol / 2.0 {
            return Ok(NumericZeta {
                value: zeta2.mul(&euler.value),
                error_bound,
                prime_bound: bound,
                working_bits: bits,
            });
        }
        if bound >= MAX_PRIME_BOUND {
            return Err(Error::ToleranceTooTight(tol));
        }
        bound *= 2;
    }
}

/// `(2 pi)^(2n) / (2^n d_F^(3/2))`, the factor converting `|zeta_F(-1)|` to `zeta_F(2)`.
fn functional_equation_factor(field: &NumberField, bits: u32) -> Fixed {
    let n = field.degree();
    let two_pi = Fixed::pi(bits).mul_int(2);
    let mut num = Fixed::from_int(1, bits);
    for _ in 0..2 * n {
        num = num.mul(&two_pi);
    }
    let d = field.discriminant();
    let d_three_halves = Fixed::sqrt_int(d, bits).mul_int(d as i64);
    num.div_int(1 << n).div(&d_three_halves)
}

/// Both sides of the functional-equation identity at `s = 2`.
#[derive(Debug, Clone)]
pub struct FunctionalEquationReport {
    pub field: NumberField,
    pub zeta_minus1: BigRational,
    /// Numeric `zeta_F(2)`.
    pub numeric: f64,
    /// `(2 pi)^(2n) 2^(-n) d_F^(-3/2) |zeta_F(-1)|`.
    pub predicted: f64,
    pub difference: f64,
    pub tol: f64,
    pub passed: bool,
    pub zeta2: NumericZeta,
}

pub fn functional_equation_check(field: &NumberField, tol: f64) -> Result<FunctionalEquationReport> {
    let z = zeta_minus1(field)?;
    functional_equation_check_with(field, &z.value, tol)
}

/// Same check against a caller-supplied `zeta_F(-1)`.
pub fn functional_equation_check_with(
    field: &NumberField,
    zeta_minus1: &BigRational,
    tol: f64,
) -> Result<FunctionalEquationReport> {
    functional_equation_check_at(field, zeta_minus1, tol, DEFAULT_WORKING_BITS)
}

/// As [`functional_equation_check_with`] at `bits` of working precision.
pub fn functional_equation_check_at(
    field: &NumberField,
    zeta_minus1: &BigRational,
    tol: f64,
    bits: u32,
) -> Result<FunctionalEquationReport> {
    let numeric = zeta_f2_numeric_with_precision(field, (tol / 4.0).max(MIN_TOLERANCE), bits)?;
    let predicted = functional_equation_factor(field, bits)
        .mul(&Fixed::from_rational(&zeta_minus1.abs(), bits));
    let difference = numeric.value.sub(&predicted).abs().to_f64();
    Ok(FunctionalEquationReport {
        field: *field,
        zeta_minus1: zeta_minus1.clone(),
        numeric: numeric.to_f64(),
        predicted: predicted.to_f64(),
        difference,
        tol,
        passed: difference < tol,
        zeta2: numeric,
    })
}

/// `|zeta_F(-1)|` recovered from a numeric `zeta_F(2)` through the functional equation.
pub fn zeta_minus1_abs_from_zeta2(field: &NumberField, zeta2: &Fixed) -> Fixed {
    zeta2.div(&functional_equation_factor(field, zeta2.bits()))
}

/// Functional-equation oracle for `|zeta_F(-1)|`, independent of the Siegel sum.
///
/// Returns the raw numeric value and its reconstruction as a rational with
/// denominator at most `max_denominator`.
pub fn zeta_minus1_oracle(
    field: &NumberField,
    prime_bound: u64,
    max_denominator: u64,
    tol: f64,
) -> Result<(f64, SpecialValue)> {
    let bits = DEFAULT_WORKING_BITS;
    let zeta2 = zeta_f2_euler(field, prime_bound, bits);
    let x = zeta_minus1_abs_from_zeta2(field, &zeta2).to_f64();
    let value = rationalize(x, max_denominator, tol)?;
    Ok((
        x,
        SpecialValue {
            value,
            field: *field,
            argument: -1,
            method: Method::FunctionalEquationOracle,
        },
    ))
}

/// The unique `p/q` with `q <= max_denominator` and `|x - p/q| < tol`.
///
/// Candidates come from the continued-fraction convergents of `x`. When
/// `2 tol < 1/max_denominator^2` any qualifying fraction is a convergent and
/// is unique; otherwise every denominator is scanned to settle uniqueness.
pub fn rationalize(x: f64, max_denominator: u64, tol: f64) -> Result<BigRational> {
    assert!(max_denominator >= 1, "max_denominator must be at least 1");
    let no_convergent = || Error::NoConvergent {
        x,
        max_denominator,
        tol,
    };
    let exact_x = BigRational::from_float(x).ok_or_else(no_convergent)?;
    let tol_r = BigRational::from_float(tol).ok_or_else(no_convergent)?;
    let within = |r: &BigRational| (r - &exact_x).abs() < tol_r;

    let max_q = max_denominator as f64;
    if 2.0 * tol * max_q * max_q >= 1.0 {
        let mut found: Option<BigRational> = None;
        for q in 1..=max_denominator {
            let centre = (x * q as f64).round() as i64;
            for p in [centre - 1, centre, centre + 1] {
                let r = rat(p, q as i64);
                if r.denom() != &BigInt::from(q) || !within(&r) {
                    continue;
                }
                match &found {
                    Some(prev) if prev != &r => {
                        return Err(Error::Ambiguous {
                            x,
                            max_denominator,
                            tol,
                        })
                    }
                    _ => found = Some(r),
                }
            }
        }
        return found.ok_or_else(no_convergent);
    }

    let max_q_big = BigInt::from(max_denominator);
    let (mut p0, mut q0) = (BigInt::zero(), BigInt::one());
    let (mut p1, mut q1) = (BigInt::one(), BigInt::zero());
    let mut rest = exact_x.clone();
    loop {
        let a = rest.floor().to_integer();
        let p2 = &a * &p1 + &p0;
        let q2 = &a * &q1 + &q0;
        if q2 > max_q_big {
            break;
        }
        let convergent = BigRational::new(p2.clone(), q2.clone());
        if within(&convergent) {
            return Ok(convergent);
        }
        let frac = &rest - BigRational::from(a);
        if frac.is_zero() {
            break;
        }
        rest = frac.recip();
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
    }
    Err(no_convergent())
}

/// `f64` view of an exact rational.
pub fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}
