//! Published local h- and gamma-polynomials for the classical cluster
//! subdivisions and the barycentric subdivision, as coefficient lists
//! starting at `x^0`. Used as expected values by the verification suite.

use crate::polynomial::{GammaVector, IntPoly};
use crate::rootsystems::CartanType;

const ELL_A: &[(usize, &[i64])] = &[
    (1, &[0]),
    (2, &[0, 1]),
    (3, &[0, 1, 1]),
    (4, &[0, 1, 4, 1]),
    (5, &[0, 1, 8, 8, 1]),
    (6, &[0, 1, 13, 29, 13, 1]),
    (7, &[0, 1, 19, 73, 73, 19, 1]),
    (8, &[0, 1, 26, 151, 266, 151, 26, 1]),
];

const XI_A: &[(usize, &[i64])] = &[
    (1, &[0]),
    (2, &[0, 1]),
    (3, &[0, 1]),
    (4, &[0, 1, 2]),
    (5, &[0, 1, 5]),
    (6, &[0, 1, 9, 5]),
    (7, &[0, 1, 14, 21]),
    (8, &[0, 1, 20, 56, 14]),
];

const ELL_B: &[(usize, &[i64])] = &[
    (2, &[0, 2]),
    (3, &[0, 3, 3]),
    (4, &[0, 4, 14, 4]),
    (5, &[0, 5, 35, 35, 5]),
    (6, &[0, 6, 69, 146, 69, 6]),
    (7, &[0, 7, 119, 427, 427, 119, 7]),
];

const XI_B: &[(usize, &[i64])] = &[
    (2, &[0, 2]),
    (3, &[0, 3]),
    (4, &[0, 4, 6]),
    (5, &[0, 5, 20]),
    (6, &[0, 6, 45, 20]),
    (7, &[0, 7, 84, 105]),
    (8, &[0, 8, 140, 336, 70]),
];

const ELL_D: &[(usize, &[i64])] = &[
    (4, &[0, 2, 6, 2]),
    (5, &[0, 3, 18, 18, 3]),
    (6, &[0, 4, 40, 80, 40, 4]),
    (7, &[0, 5, 75, 250, 250, 75, 5]),
];

const XI_D: &[(usize, &[i64])] = &[
    (4, &[0, 2, 2]),
    (5, &[0, 3, 9]),
    (6, &[0, 4, 24, 8]),
    (7, &[0, 5, 50, 50]),
    (8, &[0, 6, 90, 180, 30]),
];

const XI_BARYCENTRIC: &[(usize, &[i64])] = &[
    (2, &[0, 1]),
    (3, &[0, 1]),
    (4, &[0, 1, 5]),
    (5, &[0, 1, 18]),
    (6, &[0, 1, 47, 61]),
    (7, &[0, 1, 108, 479]),
    (8, &[0, 1, 233, 2414, 1385]),
    (9, &[0, 1, 486, 9970, 19028]),
];

fn lookup(table: &[(usize, &'static [i64])], n: usize) -> Option<&'static [i64]> {
    table.iter().find(|(m, _)| *m == n).map(|(_, c)| *c)
}

fn ell_table(t: CartanType) -> Option<&'static [i64]> {
    match t {
        CartanType::A(n) => lookup(ELL_A, n),
        CartanType::B(n) => lookup(ELL_B, n),
        CartanType::D(n) => lookup(ELL_D, n),
        _ => None,
    }
}

fn xi_table(t: CartanType) -> Option<&'static [i64]> {
    match t {
        CartanType::A(n) => lookup(XI_A, n),
        CartanType::B(n) => lookup(XI_B, n),
        CartanType::D(n) => lookup(XI_D, n),
        _ => None,
    }
}

/// Published local h-polynomial of a classical type, if tabulated.
pub fn reference_ell(t: CartanType) -> Option<IntPoly> {
    ell_table(t).map(IntPoly::from_i64s)
}

/// Published local gamma-vector of a classical type, if tabulated.
pub fn reference_xi(t: CartanType) -> Option<GammaVector> {
    xi_table(t).map(|c| GammaVector::from_i64s(c, t.rank()).expect("table fits its rank"))
}

/// Published local gamma-vector of the barycentric subdivision, `2 <= n <= 9`.
pub fn reference_barycentric_xi(n: usize) -> Option<GammaVector> {
    lookup(XI_BARYCENTRIC, n).map(|c| GammaVector::from_i64s(c, n).expect("table fits n"))
}

/// Every classical type with a tabulated local h-polynomial.
pub fn tabulated_ell_types() -> Vec<CartanType> {
    let a = ELL_A.iter().map(|(n, _)| CartanType::A(*n));
    let b = ELL_B.iter().map(|(n, _)| CartanType::B(*n));
    let d = ELL_D.iter().map(|(n, _)| CartanType::D(*n));
    a.chain(b).chain(d).collect()
}

/// Every classical type with a tabulated local gamma-vector.
pub fn tabulated_xi_types() -> Vec<CartanType> {
    let a = XI_A.iter().map(|(n, _)| CartanType::A(*n));
    let b = XI_B.iter().map(|(n, _)| CartanType::B(*n));
    let d = XI_D.iter().map(|(n, _)| CartanType::D(*n));
    a.chain(b).chain(d).collect()
}

/// Range of `n` covered by the barycentric table.
pub fn tabulated_barycentric_range() -> std::ops::RangeInclusive<usize> {
    2..=9
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::gamma_compose;

    #[test]
    fn tables_agree_where_both_exist() {
        for t in tabulated_ell_types() {
            let Some(xi) = reference_xi(t) else { continue };
            assert_eq!(gamma_compose(&xi), reference_ell(t).unwrap(), "{t}");
        }
    }

    #[test]
    fn ell_tables_are_symmetric() {
        for t in tabulated_ell_types() {
            assert!(
                reference_ell(t).unwrap().is_symmetric(t.rank()).unwrap(),
                "{t}"
            );
        }
    }

    #[test]
    fn barycentric_range() {
        for n in tabulated_barycentric_range() {
            assert!(reference_barycentric_xi(n).is_some());
        }
        assert!(reference_barycentric_xi(10).is_none());
    }
}
