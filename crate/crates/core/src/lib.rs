//! Exact covolumes, Steinberg formal degrees and von Neumann dimensions for
//! S-arithmetic subgroups of `SL(2)` and `PGL(2)` over `Q` and real quadratic
//! fields, and the Jacquet-Langlands dimension ratio `|zeta_D(0) / zeta_F(0)|`.
//!
//! All closed-form outputs are exact [`BigRational`]s. Each headline value
//! has a second, independent derivation that is checked before the value is
//! returned; a disagreement surfaces as [`Error::InternalInconsistency`].

pub mod arith;
pub mod covolume;
pub mod error;
pub mod formal_degree;
pub mod grid;
pub mod numberfield;
pub mod numeric;
pub mod quaternion;
pub mod vndim;
pub mod zeta;

pub use num_rational::BigRational;

pub use covolume::{local_square_class_order, pgl2_covolume, pgl_psl_index, sl2_covolume, Covolume, Group};
pub use error::{Error, Result};
pub use formal_degree::{
    jl_degree_ratio, steinberg_global_degree, steinberg_local_degree, LocalDatum, LocalRepDatum,
};
pub use numberfield::{
    build_s, decompose_prime, kronecker_symbol, parse_field, FieldKind, FinitePlace, NumberField, Place,
    PlaceSelector, SSet,
};
pub use quaternion::{pdx_candidates, validate_ramification, zeta_d_leading_ratio_at_zero, CandidateReport};
pub use vndim::{
    atiyah_schmid_dim, check_identities, jl_ratio_pgl, jl_ratio_sl, module_vn_dim, steinberg_vn_dim,
    vn_dim_finite_group, GroupVariant, IdentityReport, Outcome, VnDimension,
};
pub use zeta::{functional_equation_check, rationalize, zeta_f2_numeric, zeta_minus1, SpecialValue};
