//! Local h-polynomials and local gamma-vectors of cluster subdivisions and
//! of the barycentric subdivision of a simplex.
//!
//! For the classical types the local h-polynomial is computed from scratch by
//! inclusion-exclusion over all parabolic subsystems,
//!
//! ```text
//! l(x) = sum over J of (-1)^(n - |J|) h(Delta_+(Phi_J), x)
//! ```
//!
//! where the positive-part h-polynomials come from [`crate::rootsystems`].
//! Exceptional types are served from embedded tables that carry both the
//! local h-polynomial and the local gamma-vector, cross-checked on every
//! lookup.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{check_budget, Error, Result};
use crate::permutations::derangement_polynomial;
use crate::polynomial::{
    binomial, exact_div, gamma_compose, gamma_decompose, GammaVector, IntPoly,
};
use crate::rootsystems::{
    decompose_with, dynkin_diagram, h_plus_product, CartanType, ParabolicDecomposition,
};

/// Default ceiling on the rank swept by [`local_h_cluster`]: `2^22` subsets.
pub const DEFAULT_RANK_CAP: usize = 22;

/// Hard ceiling on the barycentric enumeration.
pub const BARYCENTRIC_MAX_N: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Source {
    InclusionExclusion,
    EmbeddedTable,
    ClosedForm,
    /// Brute-force sum over derangements.
    Enumeration,
    /// Product of the local data of two factors.
    Join,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::InclusionExclusion => "computed-inclusion-exclusion",
            Source::EmbeddedTable => "embedded-table",
            Source::ClosedForm => "closed-form",
            Source::Enumeration => "enumeration",
            Source::Join => "join",
        })
    }
}

/// Local h-polynomial together with its local gamma-vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalHResult {
    pub ell: IntPoly,
    pub xi: GammaVector,
    pub source: Source,
}

impl LocalHResult {
    /// Pairs `ell` with its gamma decomposition about `rank`.
    pub fn from_ell(ell: IntPoly, rank: usize, source: Source) -> Result<Self> {
        let xi = gamma_decompose(&ell, rank)?;
        Ok(LocalHResult { ell, xi, source })
    }

    pub fn rank(&self) -> usize {
        self.xi.center()
    }

    /// Symmetry about the rank, vanishing constant term for positive rank,
    /// and agreement of the gamma-vector with the polynomial.
    pub fn satisfies_invariants(&self) -> bool {
        let n = self.rank();
        self.ell.is_symmetric(n).unwrap_or(false)
            && (n == 0 || self.ell.coeff(0).is_zero())
            && gamma_compose(&self.xi) == self.ell
    }
}

/// Local h data of an irreducible type, by inclusion-exclusion for the
/// classical types and from the embedded tables otherwise.
pub fn local_h_cluster(t: CartanType) -> Result<LocalHResult> {
    local_h_cluster_with_cap(t, DEFAULT_RANK_CAP)
}

/// [`local_h_cluster`] with an explicit ceiling on the swept rank.
pub fn local_h_cluster_with_cap(t: CartanType, rank_cap: usize) -> Result<LocalHResult> {
    let t = t.new_checked()?;
    if !t.is_classical() {
        return exceptional(t);
    }
    check_budget("rank", t.rank(), rank_cap.min(63))?;
    let ell = inclusion_exclusion(t)?;
    LocalHResult::from_ell(ell, t.rank(), Source::InclusionExclusion)
}

/// Signed count of subsets per decomposition, then one h-polynomial product
/// per distinct decomposition.
fn inclusion_exclusion(t: CartanType) -> Result<IntPoly> {
    let n = t.rank();
    let adjacency = dynkin_diagram(t)?.neighbor_masks();
    let full = 1u64 << n;
    let chunk = (full / 256).max(1 << 10);
    let chunks: Vec<(u64, u64)> = (0..full)
        .step_by(chunk as usize)
        .map(|lo| (lo, (lo + chunk).min(full)))
        .collect();

    let tally = chunks
        .into_par_iter()
        .map(|(lo, hi)| {
            let mut local: HashMap<ParabolicDecomposition, i64> = HashMap::new();
            for mask in lo..hi {
                let sign = if (n - mask.count_ones() as usize).is_multiple_of(2) {
                    1
                } else {
                    -1
                };
                *local
                    .entry(decompose_with(t, &adjacency, mask))
                    .or_default() += sign;
            }
            local
        })
        .reduce(HashMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_default() += v;
            }
            a
        });

    let mut terms: Vec<_> = tally.into_iter().filter(|(_, c)| *c != 0).collect();
    terms.sort();
    let mut ell = IntPoly::zero();
    for (decomposition, count) in terms {
        ell += &h_plus_product(&decomposition)?.scale(&BigInt::from(count));
    }
    Ok(ell)
}

/// Local data of a join of subdivisions: local h-polynomials multiply, and
/// so do the local gamma-polynomials.
pub fn local_h_join(a: &LocalHResult, b: &LocalHResult) -> LocalHResult {
    LocalHResult {
        ell: &a.ell * &b.ell,
        xi: a.xi.join(&b.xi),
        source: Source::Join,
    }
}

/// Local data for a product of irreducible types.
pub fn local_h_product(types: &[CartanType]) -> Result<LocalHResult> {
    let mut acc = LocalHResult {
        ell: IntPoly::one(),
        xi: GammaVector::from_i64s(&[1], 0)?,
        source: Source::Join,
    };
    for &t in types {
        acc = local_h_join(&acc, &local_h_cluster(t)?);
    }
    Ok(acc)
}

/// Local data of the barycentric subdivision of the simplex on `n` vertices:
/// the derangement polynomial `sum_{w in D_n} x^ex(w)`.
pub fn local_h_barycentric(n: usize) -> Result<LocalHResult> {
    local_h_barycentric_with_cap(n, BARYCENTRIC_MAX_N)
}

pub fn local_h_barycentric_with_cap(n: usize, cap: usize) -> Result<LocalHResult> {
    check_budget("n", n, cap.min(BARYCENTRIC_MAX_N))?;
    LocalHResult::from_ell(derangement_polynomial(n), n, Source::Enumeration)
}

/// `xi_i` from the closed formulas:
///
/// * `A_n`: `1/(n-i+1) C(n,i) C(n-i-1,i-1)`
/// * `B_n`: `C(n,i) C(n-i-1,i-1)`
/// * `D_n`: `(n-2)/i C(2i-2,i-1) C(n-2,2i-2)`
///
/// with `xi_0 = 0`; exceptional types read the embedded table.
pub fn xi_closed_form(t: CartanType, i: usize) -> Result<BigInt> {
    let t = t.new_checked()?;
    let n = t.rank();
    if i > n / 2 {
        return Err(Error::OutOfRange(format!(
            "xi index {i} exceeds {} for {t}",
            n / 2
        )));
    }
    if i == 0 {
        return Ok(BigInt::zero());
    }
    let (n, i) = (n as i64, i as i64);
    Ok(match t {
        CartanType::A(_) => exact_div(binomial(n, i) * binomial(n - i - 1, i - 1), n - i + 1),
        CartanType::B(_) => binomial(n, i) * binomial(n - i - 1, i - 1),
        CartanType::D(_) => exact_div(
            binomial(2 * i - 2, i - 1) * binomial(n - 2, 2 * i - 2) * (n - 2),
            i,
        ),
        _ => exceptional(t)?.xi.xi()[i as usize].clone(),
    })
}

/// Local gamma-vector of `t` assembled from [`xi_closed_form`].
pub fn xi_closed_form_vector(t: CartanType) -> Result<GammaVector> {
    let n = t.rank();
    let xi = (0..=n / 2)
        .map(|i| xi_closed_form(t, i))
        .collect::<Result<Vec<_>>>()?;
    GammaVector::new(xi, n)
}

/// `l_i(D_n) = (n-2)/i C(n-1,i-1) C(n-2,i-1)` for `1 <= i <= n`, zero at `i = 0`.
#[allow(non_snake_case)]
pub fn ell_closed_form_D(n: usize, i: usize) -> Result<BigInt> {
    if n < 4 || i > n {
        return Err(Error::OutOfRange(format!(
            "ell_closed_form_D needs n >= 4 and i <= n, got n={n}, i={i}"
        )));
    }
    if i == 0 {
        return Ok(BigInt::zero());
    }
    let (n, i) = (n as i64, i as i64);
    Ok(exact_div(
        binomial(n - 1, i - 1) * binomial(n - 2, i - 1) * (n - 2),
        i,
    ))
}

/// Local h-polynomial of `D_n` as `(n-2) x C_{n-1}(x)`.
pub fn ell_d_via_narayana(n: usize) -> Result<IntPoly> {
    if n < 4 {
        return Err(Error::OutOfRange(format!("type D needs n >= 4, got {n}")));
    }
    Ok(crate::polynomial::narayana_poly(n - 1)?
        .shift(1)
        .scale(&BigInt::from(n - 2)))
}

/// Embedded local h-polynomials and local gamma-vectors of the exceptional
/// types, coefficients from `x^0` upward.
const EXCEPTIONAL: &[(CartanType, &[i64], &[i64])] = &[
    (CartanType::H3, &[0, 8, 8], &[0, 8]),
    (CartanType::H4, &[0, 42, 124, 42], &[0, 42, 40]),
    (CartanType::F4, &[0, 10, 29, 10], &[0, 10, 9]),
    (CartanType::E6, &[0, 7, 63, 125, 63, 7], &[0, 7, 35, 13]),
    (
        CartanType::E7,
        &[0, 16, 204, 644, 644, 204, 16],
        &[0, 16, 124, 112],
    ),
    (
        CartanType::E8,
        &[0, 44, 748, 3380, 5472, 3380, 748, 44],
        &[0, 44, 484, 784, 120],
    ),
];

/// Table lookup for a non-classical type. `I_2(m)` has `l = xi = (m-2) x`.
fn exceptional(t: CartanType) -> Result<LocalHResult> {
    let (ell, xi) = match t {
        CartanType::I2(m) => {
            let c = BigInt::from(m as i64 - 2);
            (
                IntPoly::monomial(c.clone(), 1),
                GammaVector::new(vec![BigInt::zero(), c], 2)?,
            )
        }
        _ => {
            let &(_, ell, xi) = EXCEPTIONAL
                .iter()
                .find(|(ty, _, _)| *ty == t)
                .ok_or(Error::UnsupportedType(t, "no embedded table"))?;
            (
                IntPoly::from_i64s(ell),
                GammaVector::from_i64s(xi, t.rank())?,
            )
        }
    };
    if gamma_compose(&xi) != ell {
        return Err(Error::Invalid(format!(
            "embedded table for {t} is inconsistent"
        )));
    }
    Ok(LocalHResult {
        ell,
        xi,
        source: Source::EmbeddedTable,
    })
}

/// All exceptional types carried by the embedded tables, in report order.
pub fn exceptional_types() -> Vec<CartanType> {
    let mut types: Vec<_> = EXCEPTIONAL.iter().map(|(t, _, _)| *t).collect();
    types.sort();
    types
}

#[cfg(test)]
mod tests {
    use super::*;
    use CartanType::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn xi(c: &[i64], n: usize) -> GammaVector {
        GammaVector::from_i64s(c, n).unwrap()
    }

    #[test]
    fn cluster_examples() {
        let r = local_h_cluster(A(3)).unwrap();
        assert_eq!(r.ell, p(&[0, 1, 1]));
        assert_eq!(r.source, Source::InclusionExclusion);
        assert_eq!(local_h_cluster(B(2)).unwrap().ell, p(&[0, 2]));
        assert!(local_h_cluster(A(1)).unwrap().ell.is_zero());
        let e7 = local_h_cluster(E7).unwrap();
        assert_eq!(e7.ell, p(&[0, 16, 204, 644, 644, 204, 16]));
        assert_eq!(e7.source, Source::EmbeddedTable);
    }

    #[test]
    fn small_d_types_match_their_aliases() {
        assert_eq!(
            local_h_cluster(D(3)).unwrap().ell,
            local_h_cluster(A(3)).unwrap().ell
        );
        assert!(local_h_cluster(D(2)).unwrap().ell.is_zero());
    }

    #[test]
    fn dihedral_aliases() {
        assert_eq!(
            local_h_cluster(I2(3)).unwrap().ell,
            local_h_cluster(A(2)).unwrap().ell
        );
        assert_eq!(
            local_h_cluster(I2(4)).unwrap().ell,
            local_h_cluster(B(2)).unwrap().ell
        );
        assert_eq!(local_h_cluster(I2(7)).unwrap().xi, xi(&[0, 5], 2));
    }

    #[test]
    fn rank_cap_is_enforced() {
        assert!(matches!(
            local_h_cluster_with_cap(A(10), 8),
            Err(Error::BudgetExceeded {
                what: "rank",
                requested: 10,
                limit: 8
            })
        ));
        assert!(local_h_cluster(A(0)).is_err());
    }

    #[test]
    fn join_examples() {
        let a2 = local_h_cluster(A(2)).unwrap();
        let j = local_h_join(&a2, &a2);
        assert_eq!(j.ell, p(&[0, 0, 1]));
        assert_eq!(j.xi.as_poly(), p(&[0, 0, 1]));
        assert!(j.satisfies_invariants());

        let a1 = local_h_cluster(A(1)).unwrap();
        assert!(local_h_join(&local_h_cluster(E6).unwrap(), &a1)
            .ell
            .is_zero());

        let j = local_h_join(
            &local_h_cluster(B(2)).unwrap(),
            &local_h_cluster(A(3)).unwrap(),
        );
        assert_eq!(j.ell, p(&[0, 0, 2, 2]));
        assert_eq!(j.rank(), 5);
        assert!(j.satisfies_invariants());
    }

    #[test]
    fn barycentric_examples() {
        let r = local_h_barycentric(4).unwrap();
        assert_eq!(r.ell, p(&[0, 1, 7, 1]));
        assert_eq!(r.xi, xi(&[0, 1, 5], 4));
        assert!(local_h_barycentric(1).unwrap().ell.is_zero());
        assert_eq!(local_h_barycentric(6).unwrap().xi, xi(&[0, 1, 47, 61], 6));
        assert_eq!(local_h_barycentric(0).unwrap().ell, IntPoly::one());
        assert!(matches!(
            local_h_barycentric_with_cap(9, 8),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(xi_closed_form(A(6), 2).unwrap(), BigInt::from(9));
        assert_eq!(xi_closed_form(B(5), 2).unwrap(), BigInt::from(20));
        assert_eq!(xi_closed_form(D(6), 3).unwrap(), BigInt::from(8));
        assert_eq!(xi_closed_form(E8, 4).unwrap(), BigInt::from(120));
        assert_eq!(xi_closed_form(I2(9), 1).unwrap(), BigInt::from(7));
        assert_eq!(xi_closed_form(F4, 0).unwrap(), BigInt::zero());
        assert!(xi_closed_form(A(5), 3).is_err());
    }

    #[test]
    fn ell_d_examples() {
        assert_eq!(ell_closed_form_D(5, 2).unwrap(), BigInt::from(18));
        assert_eq!(ell_closed_form_D(4, 0).unwrap(), BigInt::zero());
        assert_eq!(ell_closed_form_D(7, 3).unwrap(), BigInt::from(250));
        assert!(ell_closed_form_D(3, 1).is_err());
        assert!(ell_closed_form_D(5, 6).is_err());
    }

    #[test]
    fn tables_are_self_consistent() {
        for t in exceptional_types().into_iter().chain([I2(3), I2(12)]) {
            let r = local_h_cluster(t).unwrap();
            assert!(r.satisfies_invariants(), "{t}");
            assert!(r.xi.is_nonnegative());
            assert_eq!(r.xi, xi_closed_form_vector(t).unwrap());
        }
    }

    #[test]
    fn classical_pipeline_matches_closed_forms() {
        for n in 1..=10 {
            let r = local_h_cluster(A(n)).unwrap();
            assert!(r.satisfies_invariants());
            assert_eq!(r.xi, xi_closed_form_vector(A(n)).unwrap(), "A{n}");
        }
        for n in 2..=10 {
            let r = local_h_cluster(B(n)).unwrap();
            assert_eq!(r.xi, xi_closed_form_vector(B(n)).unwrap(), "B{n}");
        }
        for n in 4..=10 {
            let r = local_h_cluster(D(n)).unwrap();
            assert_eq!(r.xi, xi_closed_form_vector(D(n)).unwrap(), "D{n}");
            assert_eq!(r.ell, ell_d_via_narayana(n).unwrap(), "D{n}");
            for i in 0..=n {
                assert_eq!(r.ell.coeff(i), ell_closed_form_D(n, i).unwrap());
            }
        }
    }

    #[test]
    fn larger_ranks_stay_tractable() {
        let r = local_h_cluster(A(16)).unwrap();
        assert_eq!(r.xi, xi_closed_form_vector(A(16)).unwrap());
        let r = local_h_cluster(D(16)).unwrap();
        assert_eq!(r.ell, ell_d_via_narayana(16).unwrap());
    }
}
