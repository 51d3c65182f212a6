//! Covolumes of `SL(2, O_S)` and `PGL(2, O_S)` in their S-adelic groups.
//!
//! Haar measures are fixed: `SO(2)` has volume 1 at real places and an
//! Iwahori subgroup has volume 1 at finite places, so `SL(2, O_v)` has
//! volume `q_v + 1`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::Result;
use crate::numberfield::{FinitePlace, NumberField, Place, SSet};
use crate::zeta::zeta_minus1_abs;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Group {
    SL2,
    PGL2,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Covolume {
    pub group: Group,
    pub field: NumberField,
    pub s: SSet,
    pub value: BigRational,
}

pub(crate) fn pow2(k: i64) -> BigRational {
    let p = BigInt::one() << k.unsigned_abs();
    if k >= 0 {
        BigRational::from(p)
    } else {
        BigRational::new(BigInt::one(), p)
    }
}

/// `prod_{v in S_f} (q_v + shift)`.
pub(crate) fn residue_product(s: &SSet, shift: i64) -> BigRational {
    s.finite_places()
        .iter()
        .map(|v| BigInt::from(v.residue_cardinality() as i64 + shift))
        .product::<BigInt>()
        .into()
}

/// `|zeta_F(-1)| / 2^n * prod (q_v + 1)`.
pub fn sl2_covolume(field: &NumberField, s: &SSet) -> Result<Covolume> {
    let n = field.degree() as i64;
    let value = zeta_minus1_abs(field)? * pow2(-n) * residue_product(s, 1);
    Ok(Covolume {
        group: Group::SL2,
        field: *field,
        s: s.clone(),
        value,
    })
}

/// `2^(delta_F(2,S) + 1) |zeta_F(-1)| / 2^(2n) * prod (q_v + 1)`.
pub fn pgl2_covolume(field: &NumberField, s: &SSet) -> Result<Covolume> {
    let n = field.degree() as i64;
    let delta = s.delta_2() as i64;
    let value = zeta_minus1_abs(field)? * pow2(delta + 1 - 2 * n) * residue_product(s, 1);
    Ok(Covolume {
        group: Group::PGL2,
        field: *field,
        s: s.clone(),
        value,
    })
}

/// `|PGL(2, O_S) / PSL(2, O_S)| = 2^|S|`.
pub fn pgl_psl_index(_field: &NumberField, s: &SSet) -> BigInt {
    BigInt::one() << s.cardinality()
}

/// `|F_v^* / (F_v^*)^2|` as used in the PGL covolume lemma: 2 at real places,
/// 4 over odd primes and `2^(e f)` over 2.
///
/// The standard count over 2 is `2^(e f + 2)`. This value is reported for
/// auditing only and never enters a covolume.
pub fn local_square_class_order(v: &Place) -> u64 {
    match v {
        Place::Real { .. } => 2,
        Place::Finite(w) => finite_square_class_order(w),
    }
}

fn finite_square_class_order(v: &FinitePlace) -> u64 {
    if v.characteristic() == 2 {
        1 << v.local_degree()
    } else {
        4
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numberfield::{build_s, PlaceSelector};

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn s_of(field: &NumberField, primes: &[u64]) -> SSet {
        let sel: Vec<_> = primes.iter().map(|&p| (p, PlaceSelector::One)).collect();
        build_s(field, &sel).unwrap()
    }

    #[test]
    fn sl2_examples() {
        let q = NumberField::rationals();
        assert_eq!(sl2_covolume(&q, &s_of(&q, &[])).unwrap().value, rat(1, 24));
        assert_eq!(sl2_covolume(&q, &s_of(&q, &[2])).unwrap().value, rat(1, 8));
        let f = NumberField::real_quadratic(5).unwrap();
        assert_eq!(sl2_covolume(&f, &s_of(&f, &[])).unwrap().value, rat(1, 120));
    }

    #[test]
    fn pgl2_examples() {
        let q = NumberField::rationals();
        assert_eq!(pgl2_covolume(&q, &s_of(&q, &[])).unwrap().value, rat(1, 24));
        assert_eq!(pgl2_covolume(&q, &s_of(&q, &[2])).unwrap().value, rat(1, 4));
        assert_eq!(pgl2_covolume(&q, &s_of(&q, &[3])).unwrap().value, rat(1, 6));
        let c = pgl2_covolume(&q, &s_of(&q, &[3])).unwrap();
        assert_eq!(c.group, Group::PGL2);
        assert_eq!(c.s.cardinality(), 2);
    }

    #[test]
    fn index_examples() {
        let q = NumberField::rationals();
        assert_eq!(pgl_psl_index(&q, &s_of(&q, &[])), BigInt::from(2));
        assert_eq!(pgl_psl_index(&q, &s_of(&q, &[2])), BigInt::from(4));
        let f = NumberField::real_quadratic(5).unwrap();
        assert_eq!(pgl_psl_index(&f, &s_of(&f, &[])), BigInt::from(4));
    }

    #[test]
    fn square_class_examples() {
        let q = NumberField::rationals();
        assert_eq!(local_square_class_order(&Place::Real { index: 0 }), 2);
        let v3 = Place::Finite(q.decompose_prime(3).unwrap()[0]);
        assert_eq!(local_square_class_order(&v3), 4);
        let v2 = Place::Finite(q.decompose_prime(2).unwrap()[0]);
        assert_eq!(local_square_class_order(&v2), 2);
        let f = NumberField::real_quadratic(2).unwrap();
        let w2 = Place::Finite(f.decompose_prime(2).unwrap()[0]);
        assert_eq!(local_square_class_order(&w2), 4);
    }

    #[test]
    fn adding_a_place_scales_both_covolumes() {
        for d in [None, Some(2), Some(5), Some(13)] {
            let f = d.map_or(NumberField::rationals(), |d| NumberField::real_quadratic(d).unwrap());
            let base = s_of(&f, &[7]);
            for p in [2u64, 3, 5, 11] {
                let v = f.decompose_prime(p).unwrap()[0];
                let bigger = base.with_place(v).unwrap();
                let q1 = BigRational::from(BigInt::from(v.residue_cardinality() + 1));
                let sl_ratio = sl2_covolume(&f, &bigger).unwrap().value
                    / sl2_covolume(&f, &base).unwrap().value;
                assert_eq!(sl_ratio, q1.clone());
                let two_part = if p == 2 { pow2(v.local_degree() as i64) } else { BigRational::one() };
                let pgl_ratio = pgl2_covolume(&f, &bigger).unwrap().value
                    / pgl2_covolume(&f, &base).unwrap().value;
                assert_eq!(pgl_ratio, q1 * two_part);
            }
        }
    }

    #[test]
    fn pgl_over_sl_ratio() {
        for d in [None, Some(2), Some(3), Some(5)] {
            let f = d.map_or(NumberField::rationals(), |d| NumberField::real_quadratic(d).unwrap());
            for primes in [&[][..], &[2], &[3, 5], &[2, 7, 11]] {
                let s = s_of(&f, primes);
                let ratio = pgl2_covolume(&f, &s).unwrap().value / sl2_covolume(&f, &s).unwrap().value;
                let expected = pow2(s.delta_2() as i64 + 1 - f.degree() as i64);
                assert_eq!(ratio, expected, "{f} {s}");
            }
        }
    }
}
