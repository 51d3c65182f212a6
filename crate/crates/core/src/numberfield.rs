//! Base fields, their places, and S-sets of places.
//!
//! Only `Q` and real quadratic fields `Q(sqrt d)` are supported. A finite
//! place is identified by its residue characteristic `p` and an index
//! distinguishing the two places above a split prime.

use std::fmt;
use std::str::FromStr;

use crate::arith::{is_prime, is_squarefree};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rationals,
    RealQuadratic { d: u64 },
}

/// A totally real base field together with its discriminant and degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NumberField {
    kind: FieldKind,
    discriminant: u64,
    degree: u32,
}

impl NumberField {
    pub fn rationals() -> Self {
        NumberField {
            kind: FieldKind::Rationals,
            discriminant: 1,
            degree: 1,
        }
    }

    /// `Q(sqrt d)` for squarefree `d > 1`.
    pub fn real_quadratic(d: i64) -> Result<Self> {
        if d <= 1 {
            return Err(Error::NotTotallyReal(d));
        }
        let du = d as u64;
        if !is_squarefree(du) {
            return Err(Error::NotSquarefree(d));
        }
        let discriminant = if du % 4 == 1 { du } else { 4 * du };
        Ok(NumberField {
            kind: FieldKind::RealQuadratic { d: du },
            discriminant,
            degree: 2,
        })
    }

    /// The real quadratic field of fundamental discriminant `disc`, if it is one.
    pub fn from_discriminant(disc: u64) -> Option<Self> {
        let d = if disc % 4 == 1 {
            disc
        } else if disc % 4 == 0 && matches!((disc / 4) % 4, 2 | 3) {
            disc / 4
        } else {
            return None;
        };
        Self::real_quadratic(d as i64).ok()
    }

    pub fn kind(&self) -> FieldKind {
        self.kind
    }

    /// The squarefree radicand, `None` for `Q`.
    pub fn radicand(&self) -> Option<u64> {
        match self.kind {
            FieldKind::Rationals => None,
            FieldKind::RealQuadratic { d } => Some(d),
        }
    }

    pub fn discriminant(&self) -> u64 {
        self.discriminant
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_rationals(&self) -> bool {
        self.kind == FieldKind::Rationals
    }

    /// Whether `sqrt m` lies in the field, for squarefree `m >= 1`.
    pub fn contains_sqrt(&self, m: u64) -> bool {
        m == 1 || self.radicand() == Some(m)
    }

    /// Places of the field above the rational prime `p`.
    pub fn decompose_prime(&self, p: u64) -> Result<Vec<FinitePlace>> {
        decompose_prime(self, p)
    }
}

impl fmt::Display for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FieldKind::Rationals => write!(f, "Q"),
            FieldKind::RealQuadratic { d } => write!(f, "Q(sqrt {d})"),
        }
    }
}

impl FromStr for NumberField {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_field(s)
    }
}

/// Parses `Q` or `Q(sqrt <d>)`; whitespace around tokens is ignored.
pub fn parse_field(spec: &str) -> Result<NumberField> {
    let malformed = || Error::MalformedSpec(spec.to_string());
    let s = spec.trim();
    if s == "Q" {
        return Ok(NumberField::rationals());
    }
    let inner = s
        .strip_prefix('Q')
        .map(str::trim_start)
        .and_then(|r| r.strip_prefix('('))
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(malformed)?
        .trim();
    let arg = inner.strip_prefix("sqrt").ok_or_else(malformed)?;
    if !arg.starts_with(char::is_whitespace) {
        return Err(malformed());
    }
    let d: i64 = arg.trim().parse().map_err(|_| malformed())?;
    if d <= 1 {
        return Err(Error::NotTotallyReal(d));
    }
    NumberField::real_quadratic(d)
}

/// Kronecker symbol `(D/p)` for a prime `p`.
///
/// `D` should be a fundamental discriminant or 1. For `p = 2` the value is
/// decided by `D mod 8`.
pub fn kronecker_symbol(disc: i64, p: u64) -> i8 {
    let m = disc.rem_euclid(p as i64) as u64;
    if m == 0 {
        return 0;
    }
    if p == 2 {
        return match disc.rem_euclid(8) {
            1 | 7 => 1,
            _ => -1,
        };
    }
    // Euler's criterion.
    if crate::arith::pow_mod(m, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinitePlace {
    p: u64,
    /// 0, or 1 for the second place above a split prime.
    index: u8,
    e: u32,
    f: u32,
}

impl FinitePlace {
    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn index(&self) -> u8 {
        self.index
    }

    pub fn ramification_index(&self) -> u32 {
        self.e
    }

    pub fn inertia_degree(&self) -> u32 {
        self.f
    }

    /// Cardinality of the residue field, `p^f`.
    pub fn residue_cardinality(&self) -> u64 {
        self.p.pow(self.f)
    }

    /// `e * f`.
    pub fn local_degree(&self) -> u32 {
        self.e * self.f
    }
}

impl fmt::Display for FinitePlace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.p)?;
        if self.index > 0 {
            write!(f, "'")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Place {
    /// The `index`-th real embedding.
    Real { index: u32 },
    Finite(FinitePlace),
}

impl Place {
    pub fn is_real(&self) -> bool {
        matches!(self, Place::Real { .. })
    }

    pub fn as_finite(&self) -> Option<&FinitePlace> {
        match self {
            Place::Real { .. } => None,
            Place::Finite(v) => Some(v),
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Real { index } => write!(f, "inf{index}"),
            Place::Finite(v) => v.fmt(f),
        }
    }
}

pub fn decompose_prime(field: &NumberField, p: u64) -> Result<Vec<FinitePlace>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let place = |index, e, f| FinitePlace { p, index, e, f };
    Ok(match field.kind {
        FieldKind::Rationals => vec![place(0, 1, 1)],
        FieldKind::RealQuadratic { .. } => {
            match kronecker_symbol(field.discriminant as i64, p) {
                0 => vec![place(0, 2, 1)],
                1 => vec![place(0, 1, 1), place(1, 1, 1)],
                _ => vec![place(0, 1, 2)],
            }
        }
    })
}

/// Which places above a prime go into S.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum PlaceSelector {
    /// The first place above `p` (the only one unless `p` splits).
    #[default]
    One,
    /// Both places above a split prime.
    Both,
}

/// A finite set of places containing every archimedean place.
///
/// Finite places are kept sorted by `(p, index)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SSet {
    field: NumberField,
    finite_places: Vec<FinitePlace>,
}

impl SSet {
    /// `S = V_inf`.
    pub fn archimedean(field: &NumberField) -> Self {
        SSet {
            field: *field,
            finite_places: Vec::new(),
        }
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn finite_places(&self) -> &[FinitePlace] {
        &self.finite_places
    }

    pub fn archimedean_count(&self) -> usize {
        self.field.degree as usize
    }

    /// `|S|`.
    pub fn cardinality(&self) -> usize {
        self.archimedean_count() + self.finite_places.len()
    }

    /// All places of S: real places first, then finite places in order.
    pub fn places(&self) -> impl Iterator<Item = Place> + '_ {
        (0..self.field.degree)
            .map(|index| Place::Real { index })
            .chain(self.finite_places.iter().copied().map(Place::Finite))
    }

    /// `delta_F(p, S)`: the sum of `e * f` over places of S above `p`.
    pub fn delta(&self, p: u64) -> u32 {
        self.finite_places
            .iter()
            .filter(|v| v.p == p)
            .map(FinitePlace::local_degree)
            .sum()
    }

    pub fn delta_2(&self) -> u32 {
        self.delta(2)
    }

    /// `S` with one more finite place.
    pub fn with_place(&self, v: FinitePlace) -> Result<SSet> {
        if self.finite_places.contains(&v) {
            return Err(Error::DuplicatePlace(v.p));
        }
        let mut out = self.clone();
        out.finite_places.push(v);
        out.finite_places.sort();
        Ok(out)
    }
}

impl fmt::Display for SSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.places().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Builds S from the archimedean places plus the selected finite places.
pub fn build_s(field: &NumberField, primes: &[(u64, PlaceSelector)]) -> Result<SSet> {
    let mut finite_places = Vec::with_capacity(primes.len());
    for (i, &(p, selector)) in primes.iter().enumerate() {
        if primes[..i].iter().any(|&(q, _)| q == p) {
            return Err(Error::DuplicatePlace(p));
        }
        let above = decompose_prime(field, p)?;
        match selector {
            PlaceSelector::One => finite_places.push(above[0]),
            PlaceSelector::Both if above.len() == 2 => finite_places.extend(above),
            PlaceSelector::Both => {
                return Err(Error::InvalidSelector {
                    prime: p,
                    reason: format!("{p} does not split in {field}"),
                })
            }
        }
    }
    finite_places.sort();
    Ok(SSet {
        field: *field,
        finite_places,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> NumberField {
        NumberField::rationals()
    }

    fn quad(d: i64) -> NumberField {
        NumberField::real_quadratic(d).unwrap()
    }

    fn x_squared_is(disc: u64, p: u64) -> bool {
        (0..p).any(|x| (x * x) % p == disc % p)
    }

    #[test]
    fn parse_examples() {
        let f = parse_field("Q").unwrap();
        assert_eq!((f.discriminant(), f.degree()), (1, 1));
        assert!(f.is_rationals());

        let f = parse_field("Q(sqrt 5)").unwrap();
        assert_eq!(f.kind(), FieldKind::RealQuadratic { d: 5 });
        assert_eq!((f.discriminant(), f.degree()), (5, 2));

        assert_eq!(parse_field("Q(sqrt -1)"), Err(Error::NotTotallyReal(-1)));
        assert_eq!(parse_field("Q(sqrt 1)"), Err(Error::NotTotallyReal(1)));
        assert_eq!(parse_field("Q(sqrt 12)"), Err(Error::NotSquarefree(12)));
        assert_eq!(parse_field("Q(sqrt 2)").unwrap().discriminant(), 8);
        assert_eq!(parse_field(" Q ( sqrt 3 ) ").unwrap().discriminant(), 12);
        for bad in ["", "R", "Q(sqrt)", "Q(sqrt5)", "Q(sqrt 5", "Q(cbrt 2)", "Q(sqrt x)"] {
            assert!(
                matches!(parse_field(bad), Err(Error::MalformedSpec(_))),
                "{bad:?}"
            );
        }
    }

    #[test]
    fn display_round_trips() {
        for s in ["Q", "Q(sqrt 2)", "Q(sqrt 13)"] {
            assert_eq!(parse_field(s).unwrap().to_string(), s);
        }
    }

    #[test]
    fn kronecker_examples() {
        assert_eq!(kronecker_symbol(5, 11), 1);
        assert!((0..11u64).any(|x| x * x % 11 == 5));
        assert_eq!(kronecker_symbol(5, 5), 0);
        assert_eq!(kronecker_symbol(8, 3), -1);
        assert!(!x_squared_is(8, 3));
        assert_eq!(kronecker_symbol(5, 2), -1);
        assert_eq!(kronecker_symbol(17, 2), 1);
        assert_eq!(kronecker_symbol(8, 2), 0);
    }

    #[test]
    fn decompose_examples() {
        let v = decompose_prime(&q(), 7).unwrap();
        assert_eq!(v.len(), 1);
        assert_eq!((v[0].e, v[0].f, v[0].residue_cardinality()), (1, 1, 7));

        let v = decompose_prime(&quad(5), 11).unwrap();
        assert_eq!(v.len(), 2);
        assert!(v.iter().all(|w| (w.e, w.f, w.residue_cardinality()) == (1, 1, 11)));
        assert_ne!(v[0], v[1]);

        let v = decompose_prime(&quad(2), 2).unwrap();
        assert_eq!(v.len(), 1);
        assert_eq!((v[0].e, v[0].f, v[0].residue_cardinality()), (2, 1, 2));

        let v = decompose_prime(&quad(5), 2).unwrap();
        assert_eq!((v[0].e, v[0].f, v[0].residue_cardinality()), (1, 2, 4));

        assert_eq!(decompose_prime(&q(), 9), Err(Error::NotPrime(9)));
    }

    #[test]
    fn fundamental_identity_exhaustive() {
        let fields = [q(), quad(2), quad(3), quad(5), quad(13), quad(7), quad(21)];
        for f in &fields {
            for p in crate::arith::primes_up_to(100) {
                let places = decompose_prime(f, p).unwrap();
                let total: u32 = places.iter().map(FinitePlace::local_degree).sum();
                assert_eq!(total, f.degree(), "{f} p={p}");
                assert!(places.iter().all(|v| v.e >= 1 && v.f >= 1));
            }
        }
    }

    #[test]
    fn splitting_matches_brute_force() {
        for d in [2i64, 3, 5, 13, 6, 7, 10, 33, 37] {
            let f = quad(d);
            let disc = f.discriminant();
            for p in crate::arith::primes_up_to(100).into_iter().skip(1) {
                if disc % p == 0 {
                    continue;
                }
                let splits = decompose_prime(&f, p).unwrap().len() == 2;
                assert_eq!(splits, x_squared_is(disc, p), "D={disc} p={p}");
            }
        }
    }

    #[test]
    fn build_s_examples() {
        let s = build_s(&q(), &[(2, PlaceSelector::One)]).unwrap();
        assert_eq!(s.cardinality(), 2);
        assert_eq!(s.finite_places().len(), 1);
        assert_eq!(s.finite_places()[0].characteristic(), 2);

        let s = build_s(&quad(5), &[]).unwrap();
        assert_eq!(s.cardinality(), 2);
        assert!(s.finite_places().is_empty());

        let s = build_s(&quad(5), &[(11, PlaceSelector::Both)]).unwrap();
        assert_eq!(s.cardinality(), 4);

        let s = build_s(&quad(5), &[(11, PlaceSelector::One)]).unwrap();
        assert_eq!(s.cardinality(), 3);
    }

    #[test]
    fn build_s_errors() {
        assert_eq!(
            build_s(&q(), &[(3, PlaceSelector::One), (3, PlaceSelector::One)]),
            Err(Error::DuplicatePlace(3))
        );
        assert!(matches!(
            build_s(&quad(5), &[(7, PlaceSelector::Both)]),
            Err(Error::InvalidSelector { prime: 7, .. })
        ));
        assert!(matches!(
            build_s(&q(), &[(2, PlaceSelector::Both)]),
            Err(Error::InvalidSelector { .. })
        ));
        assert_eq!(build_s(&q(), &[(4, PlaceSelector::One)]), Err(Error::NotPrime(4)));
        let s = build_s(&q(), &[(3, PlaceSelector::One)]).unwrap();
        let v = s.finite_places()[0];
        assert_eq!(s.with_place(v), Err(Error::DuplicatePlace(3)));
    }

    #[test]
    fn delta_2_examples() {
        let s = build_s(&q(), &[(2, PlaceSelector::One)]).unwrap();
        assert_eq!(s.delta_2(), 1);
        let s = build_s(&q(), &[(3, PlaceSelector::One)]).unwrap();
        assert_eq!(s.delta_2(), 0);
        let s = build_s(&quad(2), &[(2, PlaceSelector::One)]).unwrap();
        assert_eq!(s.delta_2(), 2);
        // 2 is inert in Q(sqrt 5): e = 1, f = 2.
        let s = build_s(&quad(5), &[(2, PlaceSelector::One)]).unwrap();
        assert_eq!(s.delta_2(), 2);
        // 2 splits in Q(sqrt 17).
        let s = build_s(&quad(17), &[(2, PlaceSelector::Both)]).unwrap();
        assert_eq!(s.delta_2(), 2);
    }

    #[test]
    fn places_lists_real_first() {
        let s = build_s(&quad(5), &[(11, PlaceSelector::Both), (2, PlaceSelector::One)]).unwrap();
        let places: Vec<_> = s.places().collect();
        assert_eq!(places.len(), 5);
        assert!(places[0].is_real() && places[1].is_real());
        assert_eq!(places[2].as_finite().unwrap().characteristic(), 2);
        assert_eq!(s.to_string(), "{inf0,inf1,v2,v11,v11'}");
    }
}
