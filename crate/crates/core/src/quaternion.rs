//! Quaternion-side data attached to a ramification set S.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::arith::{euler_phi, factorize};
use crate::error::{Error, Result};
use crate::numberfield::{NumberField, SSet};
use crate::zeta::zeta_minus1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuaternionData {
    pub field: NumberField,
    pub s: SSet,
    /// `|S|` is even. Real places are always in S, so D ramifies at each of them.
    pub valid: bool,
}

pub fn validate_ramification(field: &NumberField, s: &SSet) -> QuaternionData {
    QuaternionData {
        field: *field,
        s: s.clone(),
        valid: s.cardinality() % 2 == 0,
    }
}

pub(crate) fn require_even(s: &SSet) -> Result<()> {
    if s.cardinality() % 2 == 1 {
        return Err(Error::OddCardinality(s.cardinality()));
    }
    Ok(())
}

/// `|zeta_D(s) / zeta_F(2s)|` at `s = 0`, from
/// `zeta_D(s) = zeta_F(2s) zeta_F(2s - 1) prod_{v in S_f} (1 - q_v^(1-2s))`.
///
/// Equals `|zeta_F(-1) prod (1 - q_v)|`.
pub fn zeta_d_leading_ratio_at_zero(field: &NumberField, s: &SSet) -> Result<BigRational> {
    require_even(s)?;
    let zeta_shifted = zeta_minus1(field)?.value;
    let local: BigInt = s
        .finite_places()
        .iter()
        .map(|v| BigInt::from(1 - v.residue_cardinality() as i64))
        .product();
    Ok((zeta_shifted * BigRational::from(local)).abs())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExceptionalGroup {
    A4,
    S4,
    A5,
}

impl ExceptionalGroup {
    pub fn order(self) -> u64 {
        match self {
            ExceptionalGroup::A4 => 12,
            ExceptionalGroup::S4 => 24,
            ExceptionalGroup::A5 => 60,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ExceptionalGroup::A4 => "A4",
            ExceptionalGroup::S4 => "S4",
            ExceptionalGroup::A5 => "A5",
        }
    }
}

/// Finite groups that `PD^x(O_S)` could be, by the necessary condition
/// `2 cos(2 pi / m) in F`. A superset: nothing here is an exact order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateReport {
    pub field: NumberField,
    /// Every `m` with `2 cos(2 pi / m) in F`.
    pub cyclic_orders: Vec<u64>,
    /// `2m` for each cyclic `m`.
    pub dihedral_orders: Vec<u64>,
    pub exceptional: Vec<ExceptionalGroup>,
    /// `max(2 max m, 60)`.
    pub bound: u64,
}

/// Squarefree part of a positive integer.
fn squarefree_part(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .filter(|&(_, k)| k % 2 == 1)
        .map(|(p, _)| p)
        .product()
}

/// Whether `2 cos(2 pi / m)` lies in `field`.
///
/// Its conjugates are `2 cos(2 pi k / m)` for `k` coprime to `m` up to
/// `k -> m - k`. With one conjugate it is rational; with two it is a root of
/// an integer quadratic `x^2 - t x + c`, which lies in `Q(sqrt d)` exactly
/// when the squarefree part of `t^2 - 4c` is `d`.
pub fn two_cos_in_field(field: &NumberField, m: u64) -> bool {
    assert!(m >= 1);
    let degree = if m <= 2 { 1 } else { euler_phi(m) / 2 };
    match degree {
        1 => true,
        2 => {
            let conj: Vec<f64> = (1..m)
                .filter(|&k| num_integer::gcd(k, m) == 1 && 2 * k < m)
                .map(|k| 2.0 * (2.0 * std::f64::consts::PI * k as f64 / m as f64).cos())
                .collect();
            debug_assert_eq!(conj.len(), 2);
            let t = (conj[0] + conj[1]).round() as i64;
            let c = (conj[0] * conj[1]).round() as i64;
            let disc = t * t - 4 * c;
            disc > 0 && field.contains_sqrt(squarefree_part(disc as u64))
        }
        _ => false,
    }
}

/// Orders `m` are searched up to this; `phi(m) <= 4` forces `m <= 12`.
const CYCLIC_SEARCH_LIMIT: u64 = 60;

pub fn pdx_candidates(field: &NumberField) -> Result<CandidateReport> {
    let cyclic_orders: Vec<u64> = (1..=CYCLIC_SEARCH_LIMIT)
        .filter(|&m| two_cos_in_field(field, m))
        .collect();
    let dihedral_orders = cyclic_orders.iter().map(|m| 2 * m).collect();
    let mut exceptional = vec![ExceptionalGroup::A4];
    if field.contains_sqrt(2) {
        exceptional.push(ExceptionalGroup::S4);
    }
    if field.contains_sqrt(5) {
        exceptional.push(ExceptionalGroup::A5);
    }
    let max_m = cyclic_orders.iter().copied().max().unwrap_or(1);
    Ok(CandidateReport {
        field: *field,
        cyclic_orders,
        dihedral_orders,
        exceptional,
        bound: (2 * max_m).max(60),
    })
}
