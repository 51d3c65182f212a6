//! Von Neumann dimensions of discrete-series modules over `PGL/PSL/SL(2, O_S)`
//! and over finite groups.
//!
//! The Steinberg dimension over `PGL(2, O_S)` is computed twice, once as
//! covolume times formal degree (Atiyah-Schmid) and once from its closed
//! form; the `PSL` and `SL` values follow by the indices
//! `[PGL : PSL] = 2^|S|` and `[SL : PSL] = 2`. Every module in scope has
//! trivial central character and descends to `PSL`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::covolume::{pgl2_covolume, pgl_psl_index, pow2, residue_product};
use crate::error::{Error, Result};
use crate::formal_degree::{jl_degree_ratio, steinberg_global_degree, LocalDatum, LocalRepDatum};
use crate::numberfield::{NumberField, Place, SSet};
use crate::quaternion::{require_even, zeta_d_leading_ratio_at_zero};
use crate::zeta::zeta_minus1_abs;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupVariant {
    Pgl,
    Psl,
    Sl,
}

impl GroupVariant {
    pub fn name(self) -> &'static str {
        match self {
            GroupVariant::Pgl => "pgl",
            GroupVariant::Psl => "psl",
            GroupVariant::Sl => "sl",
        }
    }
}

impl fmt::Display for GroupVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    ClosedForm,
    CovolumeTimesDegree,
    IndexTransfer,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VnDimension {
    pub group: GroupVariant,
    pub field: NumberField,
    pub s: SSet,
    pub value: BigRational,
    pub route: Route,
}

/// `mu(Gamma \ G) * d(pi)`.
pub fn atiyah_schmid_dim(covolume: &BigRational, formal_degree: &BigRational) -> BigRational {
    debug_assert!(covolume > &BigRational::zero());
    covolume * formal_degree
}

/// `dim_C H / |Gamma|` for a finite group `Gamma`.
pub fn vn_dim_finite_group(dim_c: u64, group_order: u64) -> BigRational {
    assert!(group_order >= 1, "group order must be positive");
    BigRational::new(BigInt::from(dim_c), BigInt::from(group_order))
}

/// `2 |zeta_F(-1)| 2^(-|S|) prod_{v in S_f} (q_v - 1)`.
pub fn steinberg_pgl_closed_form(field: &NumberField, s: &SSet) -> Result<BigRational> {
    Ok(zeta_minus1_abs(field)?
        * pow2(1 - s.cardinality() as i64)
        * residue_product(s, -1))
}

fn steinberg_pgl_via_covolume(field: &NumberField, s: &SSet) -> Result<BigRational> {
    let covolume = pgl2_covolume(field, s)?.value;
    let degree = steinberg_global_degree(field, s)?;
    Ok(atiyah_schmid_dim(&covolume, &degree))
}

fn transfer(pgl: BigRational, s: &SSet, group: GroupVariant) -> BigRational {
    let index = BigRational::from(pgl_psl_index(s.field(), s));
    match group {
        GroupVariant::Pgl => pgl,
        GroupVariant::Psl => pgl * index,
        GroupVariant::Sl => pgl * index / BigInt::from(2),
    }
}

/// Steinberg dimension over the chosen group, returned only if the closed
/// form and the covolume-times-degree route agree exactly.
pub fn steinberg_vn_dim(field: &NumberField, s: &SSet, group: GroupVariant) -> Result<VnDimension> {
    let closed = steinberg_pgl_closed_form(field, s)?;
    let via_covolume = steinberg_pgl_via_covolume(field, s)?;
    if closed != via_covolume {
        return Err(Error::InternalInconsistency(format!(
            "Steinberg PGL dimension for {field}, S = {s}: closed form {closed} != covolume x degree {via_covolume}"
        )));
    }
    let route = match group {
        GroupVariant::Pgl => Route::ClosedForm,
        _ => Route::IndexTransfer,
    };
    Ok(VnDimension {
        group,
        field: *field,
        s: s.clone(),
        value: transfer(closed, s, group),
        route,
    })
}

/// Pairs each place of S with its datum, regardless of input order.
fn match_data<'a>(s: &SSet, local: &'a [LocalRepDatum]) -> Result<Vec<&'a LocalRepDatum>> {
    let places: Vec<Place> = s.places().collect();
    for (index, datum) in local.iter().enumerate() {
        if !places.contains(&datum.place()) {
            return Err(Error::DatumPlaceMismatch {
                index,
                reason: format!("{} is not a place of S = {s}", datum.place()),
            });
        }
        if local[..index].iter().any(|d| d.place() == datum.place()) {
            return Err(Error::DatumPlaceMismatch {
                index,
                reason: format!("second datum for {}", datum.place()),
            });
        }
    }
    places
        .iter()
        .map(|v| {
            local.iter().find(|d| d.place() == *v).ok_or(Error::MissingDatum {
                expected: places.len(),
                got: local.len(),
            })
        })
        .collect()
}

/// Attaches positional data to the places of S (real places first, then
/// finite places in S order).
pub fn local_data_for(s: &SSet, data: &[LocalDatum]) -> Result<Vec<LocalRepDatum>> {
    let places: Vec<Place> = s.places().collect();
    if places.len() != data.len() {
        return Err(Error::MissingDatum {
            expected: places.len(),
            got: data.len(),
        });
    }
    places
        .into_iter()
        .zip(data)
        .enumerate()
        .map(|(index, (place, &datum))| {
            LocalRepDatum::new(place, datum).map_err(|e| match e {
                Error::DatumPlaceMismatch { reason, .. } => Error::DatumPlaceMismatch { index, reason },
                other => other,
            })
        })
        .collect()
}

/// `dim` of `pi_S` = Steinberg dimension times `prod_v dim_C pi'_v`.
pub fn module_vn_dim(
    field: &NumberField,
    s: &SSet,
    group: GroupVariant,
    local: &[LocalRepDatum],
) -> Result<VnDimension> {
    let matched = match_data(s, local)?;
    let steinberg = steinberg_vn_dim(field, s, group)?;
    let ratio: BigInt = matched.iter().map(|d| BigInt::from(jl_degree_ratio(d))).product();
    Ok(VnDimension {
        value: steinberg.value * BigRational::from(ratio),
        ..steinberg
    })
}

/// `dim_{L(SL(2,O_S))} pi_S / dim_C pi'_S = |zeta_F(-1)| prod (q_v - 1)`.
pub fn jl_ratio_sl(field: &NumberField, s: &SSet) -> Result<BigRational> {
    require_even(s)?;
    Ok(zeta_minus1_abs(field)? * residue_product(s, -1))
}

/// `dim_{L(PGL(2,O_S))} pi_S / dim_{L(PD^x(O_S))} pi'_S`
/// `= 2 |zeta_F(-1)| |PD^x(O_S)| 2^(-|S|) prod (q_v - 1)`.
///
/// Without `pd_order` the coefficient of `|PD^x(O_S)|` is returned.
pub fn jl_ratio_pgl(field: &NumberField, s: &SSet, pd_order: Option<u64>) -> Result<BigRational> {
    require_even(s)?;
    let n = BigRational::from(BigInt::from(pd_order.unwrap_or(1)));
    Ok(zeta_minus1_abs(field)? * pow2(1 - s.cardinality() as i64) * residue_product(s, -1) * n)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    Skipped(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub outcome: Outcome,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub field: NumberField,
    pub s: SSet,
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| !matches!(c.outcome, Outcome::Fail(_)))
    }
}

fn compare(lhs: &Result<BigRational>, rhs: &Result<BigRational>) -> Outcome {
    match (lhs, rhs) {
        (Ok(a), Ok(b)) if a == b => Outcome::Pass,
        (Ok(a), Ok(b)) => Outcome::Fail(format!("{a} != {b}")),
        (Err(e), _) | (_, Err(e)) => Outcome::Fail(e.to_string()),
    }
}

/// Runs every cross-route identity for `(F, S)`; failures become report entries.
pub fn check_identities(field: &NumberField, s: &SSet) -> IdentityReport {
    let closed = steinberg_pgl_closed_form(field, s);
    let pgl = steinberg_pgl_via_covolume(field, s);
    let index = BigRational::from(pgl_psl_index(field, s));
    let psl = steinberg_vn_dim(field, s, GroupVariant::Psl).map(|d| d.value);
    let sl = steinberg_vn_dim(field, s, GroupVariant::Sl).map(|d| d.value);

    let mut checks = vec![
        IdentityCheck {
            name: "covolume_times_degree_eq_closed_form",
            outcome: compare(&pgl, &closed),
        },
        IdentityCheck {
            name: "psl_eq_index_times_pgl",
            outcome: compare(&psl, &closed.clone().map(|c| c * &index)),
        },
        IdentityCheck {
            name: "sl_eq_psl_over_two",
            outcome: compare(&sl, &psl.clone().map(|p| p / BigInt::from(2))),
        },
    ];

    if s.cardinality() % 2 == 1 {
        let note = format!("|S| = {} is odd", s.cardinality());
        checks.push(IdentityCheck {
            name: "jl_ratio_sl_eq_zeta_d_route",
            outcome: Outcome::Skipped(note.clone()),
        });
        checks.push(IdentityCheck {
            name: "jl_ratio_sl_eq_pgl_coefficient_transfer",
            outcome: Outcome::Skipped(note),
        });
    } else {
        let ratio_sl = jl_ratio_sl(field, s);
        let zeta_d = zeta_d_leading_ratio_at_zero(field, s);
        let d_outcome = match compare(&ratio_sl, &zeta_d) {
            Outcome::Pass => compare(&ratio_sl, &sl),
            other => other,
        };
        checks.push(IdentityCheck {
            name: "jl_ratio_sl_eq_zeta_d_route",
            outcome: d_outcome,
        });
        let transferred = jl_ratio_pgl(field, s, None).map(|c| c * &index / BigInt::from(2));
        checks.push(IdentityCheck {
            name: "jl_ratio_sl_eq_pgl_coefficient_transfer",
            outcome: compare(&ratio_sl, &transferred),
        });
    }

    IdentityReport {
        field: *field,
        s: s.clone(),
        checks,
    }
}
