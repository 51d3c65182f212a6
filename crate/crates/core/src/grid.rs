//! The standard test grid of fields and S-sets.

use crate::numberfield::{build_s, NumberField, PlaceSelector, SSet};

/// Radicands of the grid's quadratic fields; `Q` is included separately.
pub const GRID_RADICANDS: [i64; 4] = [2, 3, 5, 13];
pub const GRID_PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];
pub const GRID_MAX_FINITE: usize = 3;

pub fn grid_fields() -> Vec<NumberField> {
    std::iter::once(NumberField::rationals())
        .chain(
            GRID_RADICANDS
                .iter()
                .map(|&d| NumberField::real_quadratic(d).expect("grid radicands are squarefree")),
        )
        .collect()
}

/// Subsets of `primes` of size at most `max_len`, in lexicographic order.
pub fn prime_subsets(primes: &[u64], max_len: usize) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for (i, &p) in primes.iter().enumerate() {
        let extended: Vec<Vec<u64>> = out
            .iter()
            .filter(|s| s.len() < max_len && s.iter().all(|&q| primes[..i].contains(&q)))
            .map(|s| {
                let mut t = s.clone();
                t.push(p);
                t
            })
            .collect();
        out.extend(extended);
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Every `(F, S)` with F in the grid fields and `S_f` a subset of
/// [`GRID_PRIMES`] of size at most [`GRID_MAX_FINITE`], one place per prime.
pub fn standard_grid() -> Vec<(NumberField, SSet)> {
    let subsets = prime_subsets(&GRID_PRIMES, GRID_MAX_FINITE);
    grid_fields()
        .into_iter()
        .flat_map(|f| {
            subsets.iter().map(move |primes| {
                let sel: Vec<_> = primes.iter().map(|&p| (p, PlaceSelector::One)).collect();
                (f, build_s(&f, &sel).expect("grid primes are distinct primes"))
            })
        })
        .collect()
}
