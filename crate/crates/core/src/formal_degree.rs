//! Steinberg formal degrees and the local degree/dimension transfer.
//!
//! At finite places the extra factor `2^(-e f)` applies exactly at places of
//! residue characteristic 2, the assignment under which the product over S
//! equals `2^n 2^(-delta_F(2,S)) prod (q_v - 1) / (2 (q_v + 1))`.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::covolume::pow2;
use crate::error::{Error, Result};
use crate::numberfield::{NumberField, Place, SSet};

/// The local datum of a discrete-series factor at one place.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LocalDatum {
    /// Weight `n >= 2` of `D_n^+ + D_n^-` at a real place.
    ArchimedeanWeight(u32),
    /// `dim_C pi'_v >= 1` of the matching representation of `D^x(F_v)`.
    FiniteDim(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LocalRepDatum {
    place: Place,
    datum: LocalDatum,
}

impl LocalRepDatum {
    pub fn new(place: Place, datum: LocalDatum) -> Result<Self> {
        match (place, datum) {
            (Place::Real { .. }, LocalDatum::ArchimedeanWeight(n)) if n < 2 => {
                Err(Error::InvalidDatum(format!("weight {n} < 2")))
            }
            (Place::Finite(_), LocalDatum::FiniteDim(0)) => {
                Err(Error::InvalidDatum("local dimension must be at least 1".into()))
            }
            (Place::Real { .. }, LocalDatum::FiniteDim(_)) => Err(Error::DatumPlaceMismatch {
                index: 0,
                reason: format!("finite-place dimension given at real place {place}"),
            }),
            (Place::Finite(_), LocalDatum::ArchimedeanWeight(_)) => Err(Error::DatumPlaceMismatch {
                index: 0,
                reason: format!("archimedean weight given at finite place {place}"),
            }),
            _ => Ok(LocalRepDatum { place, datum }),
        }
    }

    /// Weight-2 (real) or dimension-1 (finite) datum: the Steinberg factor.
    pub fn steinberg(place: Place) -> Self {
        let datum = match place {
            Place::Real { .. } => LocalDatum::ArchimedeanWeight(2),
            Place::Finite(_) => LocalDatum::FiniteDim(1),
        };
        LocalRepDatum { place, datum }
    }

    pub fn place(&self) -> Place {
        self.place
    }

    pub fn datum(&self) -> LocalDatum {
        self.datum
    }
}

/// `d(St_v)`.
pub fn steinberg_local_degree(v: &Place) -> BigRational {
    match v {
        Place::Real { .. } => BigRational::from(BigInt::from(2)),
        Place::Finite(w) => {
            let q = w.residue_cardinality() as i64;
            let base = BigRational::new(BigInt::from(q - 1), BigInt::from(2 * (q + 1)));
            if w.characteristic() == 2 {
                base * pow2(-(w.local_degree() as i64))
            } else {
                base
            }
        }
    }
}

/// `2^n 2^(-delta_F(2,S)) prod_{v in S_f} (q_v - 1) / (2 (q_v + 1))`.
pub fn steinberg_global_degree_closed_form(field: &NumberField, s: &SSet) -> BigRational {
    let product: BigRational = s
        .finite_places()
        .iter()
        .map(|v| {
            let q = v.residue_cardinality() as i64;
            BigRational::new(BigInt::from(q - 1), BigInt::from(2 * (q + 1)))
        })
        .product();
    pow2(field.degree() as i64 - s.delta_2() as i64) * product
}

/// `d(St_S) = prod_{v in S} d(St_v)`, checked against the closed form.
pub fn steinberg_global_degree(field: &NumberField, s: &SSet) -> Result<BigRational> {
    let product: BigRational = s.places().map(|v| steinberg_local_degree(&v)).product();
    let closed = steinberg_global_degree_closed_form(field, s);
    if product != closed {
        return Err(Error::InternalInconsistency(format!(
            "d(St_S) for {field}, S = {s}: product {product} != closed form {closed}"
        )));
    }
    Ok(product)
}

/// `d(pi_v) / d(St_v) = dim_C pi'_v`.
pub fn jl_degree_ratio(datum: &LocalRepDatum) -> u64 {
    match datum.datum {
        LocalDatum::ArchimedeanWeight(n) => u64::from(n) - 1,
        LocalDatum::FiniteDim(m) => m,
    }
}
