//! The `verify` subcommand: every identity the library is expected to
//! satisfy, run within the requested budgets.

use std::collections::BTreeSet;

use clap::ValueEnum;
use localh_core::localh::{
    ell_closed_form_D, ell_d_via_narayana, exceptional_types, local_h_barycentric, local_h_cluster,
    local_h_join, xi_closed_form_vector, LocalHResult,
};
use localh_core::noncrossing::{count_nc_a, count_nc_b};
use localh_core::permutations::{
    bary_xi_counts, count_no_singleton_runs, derangement_polynomial, descent_tops, drop_letters,
    enumerate_perms, foata_phi, fss_orbits, is_in_e, orbit_descent_polynomial,
    orbit_representative, Perm,
};
use localh_core::polynomial::series::{
    double_r_poly, r_poly_from_s, verify_catalan_functional_eq, verify_s_generating_function,
    verify_s_identity,
};
use localh_core::polynomial::{binomial, gamma_decompose, narayana_poly};
use localh_core::reference::{
    reference_barycentric_xi, reference_ell, reference_xi, tabulated_ell_types, tabulated_xi_types,
};
use localh_core::{CartanType, Error, GammaVector, IntPoly, Result};
use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::seq::IndexedRandom;
use rand::SeedableRng;
use serde_json::{json, Value};

use crate::output::{Kind, OutputRecord};

/// Largest `--max-n` the suite accepts.
pub const MAX_N: usize = 12;

const NC_A_CAP: usize = 10;
const NC_B_CAP: usize = 6;
const PHI_CAP: usize = 8;
const BARY_CAP: usize = 9;
const CLOSED_FORM_RANK: usize = 10;
const SERIES_ORDER: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Tables,
    Oracles,
    Series,
    All,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn record(&self, suite: Suite, max_n: usize) -> OutputRecord {
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| json!({"name": c.name, "passed": c.passed, "detail": c.detail}))
            .collect();
        OutputRecord::new(Kind::VerifyReport)
            .with("suite", format!("{suite:?}").to_lowercase())
            .with("max_n", max_n)
            .with("checks", checks)
            .with("passed", self.checks.len() - failed)
            .with("failed", failed)
    }
}

struct Runner {
    checks: Vec<Check>,
}

impl Runner {
    /// Runs `body`, which returns `Ok(None)` on success or a description of
    /// the first mismatch.
    fn check(&mut self, name: &str, range: String, body: impl FnOnce() -> Result<Option<String>>) {
        let (passed, detail) = match body() {
            Ok(None) => (true, range),
            Ok(Some(mismatch)) => (false, format!("{range}: {mismatch}")),
            Err(e) => (false, format!("{range}: {e}")),
        };
        self.checks.push(Check {
            name: name.to_string(),
            passed,
            detail,
        });
    }
}

fn first_failure<T>(
    items: impl IntoIterator<Item = T>,
    mut test: impl FnMut(&T) -> Result<Option<String>>,
) -> Result<Option<String>> {
    for item in items {
        if let Some(msg) = test(&item)? {
            return Ok(Some(msg));
        }
    }
    Ok(None)
}

fn mismatch<T: std::fmt::Display>(what: impl std::fmt::Display, got: T, want: T) -> String {
    format!("{what}: got {got}, expected {want}")
}

fn range_text(lo: usize, hi: usize) -> String {
    if lo > hi {
        "skipped: range empty under budget".to_string()
    } else {
        format!("n = {lo}..{hi}")
    }
}

fn counts_poly(counts: impl IntoIterator<Item = u64>) -> IntPoly {
    IntPoly::from_coeffs(counts.into_iter().map(BigInt::from).collect())
}

fn counts_gamma(counts: impl IntoIterator<Item = u64>, n: usize) -> Result<GammaVector> {
    GammaVector::new(
        counts
            .into_iter()
            .take(n / 2 + 1)
            .map(BigInt::from)
            .collect(),
        n,
    )
}

fn classical_types(max_rank: usize) -> Vec<CartanType> {
    let top = max_rank.min(CLOSED_FORM_RANK);
    let a = (1..=top).map(CartanType::A);
    let b = (2..=top).map(CartanType::B);
    let d = (4..=top).map(CartanType::D);
    a.chain(b).chain(d).collect()
}

fn tables(r: &mut Runner, max_n: usize, max_rank: usize) {
    for (family, pick) in [("A", 'A'), ("B", 'B'), ("D", 'D')] {
        let is_family = |t: &CartanType| t.to_string().starts_with(pick) && t.rank() <= max_rank;
        let ell_types: Vec<_> = tabulated_ell_types()
            .into_iter()
            .filter(is_family)
            .collect();
        r.check(
            &format!("type {family} local h matches published table"),
            types_text(&ell_types),
            || {
                first_failure(&ell_types, |&&t| {
                    let got = local_h_cluster(t)?.ell;
                    let want = reference_ell(t).expect("tabulated");
                    Ok((got != want).then(|| mismatch(t, got, want)))
                })
            },
        );
        let xi_types: Vec<_> = tabulated_xi_types().into_iter().filter(is_family).collect();
        r.check(
            &format!("type {family} local gamma matches published table"),
            types_text(&xi_types),
            || {
                first_failure(&xi_types, |&&t| {
                    let got = local_h_cluster(t)?.xi;
                    let want = reference_xi(t).expect("tabulated");
                    Ok((got != want).then(|| mismatch(t, got.as_poly(), want.as_poly())))
                })
            },
        );
    }

    let exceptional: Vec<CartanType> = exceptional_types()
        .into_iter()
        .chain((3..=12).map(CartanType::I2))
        .collect();
    r.check(
        "exceptional local h and gamma tables agree",
        types_text(&exceptional),
        || {
            first_failure(&exceptional, |&&t| {
                let res = local_h_cluster(t)?;
                Ok((!res.satisfies_invariants()).then(|| format!("{t}: inconsistent table entry")))
            })
        },
    );

    let classical = classical_types(max_rank);
    r.check(
        "closed-form gamma matches decomposition of computed local h",
        types_text(&classical),
        || {
            first_failure(&classical, |&&t| {
                let got = local_h_cluster(t)?.xi;
                let want = xi_closed_form_vector(t)?;
                Ok((got != want).then(|| mismatch(t, got.as_poly(), want.as_poly())))
            })
        },
    );

    let d_top = max_rank.min(CLOSED_FORM_RANK);
    r.check(
        "type D local h equals (n-2) x Narayana(n-1)",
        range_text(4, d_top),
        || {
            first_failure(4..=d_top, |&n| {
                let computed = local_h_cluster(CartanType::D(n))?.ell;
                let narayana = ell_d_via_narayana(n)?;
                let closed = IntPoly::from_coeffs(
                    (0..=n)
                        .map(|i| ell_closed_form_D(n, i))
                        .collect::<Result<_>>()?,
                );
                if computed != narayana {
                    return Ok(Some(mismatch(
                        format!("D{n} via Narayana"),
                        narayana,
                        computed,
                    )));
                }
                Ok((computed != closed)
                    .then(|| mismatch(format!("D{n} coefficient formula"), closed, computed)))
            })
        },
    );

    let bary_top = max_n.min(BARY_CAP);
    r.check(
        "barycentric local gamma matches published table",
        range_text(2, bary_top),
        || {
            first_failure(2..=bary_top, |&n| {
                let got = local_h_barycentric(n)?.xi;
                let want = reference_barycentric_xi(n).expect("tabulated");
                Ok(
                    (got != want)
                        .then(|| mismatch(format!("n={n}"), got.as_poly(), want.as_poly())),
                )
            })
        },
    );

    let mut computed: Vec<(String, LocalHResult)> = Vec::new();
    let computed_err = (|| -> Result<()> {
        for t in classical.iter().chain(&exceptional) {
            computed.push((t.to_string(), local_h_cluster(*t)?));
        }
        for n in 1..=bary_top {
            computed.push((format!("barycentric {n}"), local_h_barycentric(n)?));
        }
        Ok(())
    })()
    .err();
    let what = format!("{} results", computed.len());
    r.check(
        "local h is symmetric with zero constant term",
        what.clone(),
        || {
            if let Some(e) = computed_err.clone() {
                return Err(e);
            }
            first_failure(&computed, |(name, res)| {
                Ok((!res.satisfies_invariants()).then(|| format!("{name}: {}", res.ell)))
            })
        },
    );
    r.check("local gamma is nonnegative", what, || {
        first_failure(&computed, |(name, res)| {
            Ok((!res.xi.is_nonnegative()).then(|| format!("{name}: {}", res.xi.as_poly())))
        })
    });
    r.check(
        "local h and gamma multiply under joins",
        "50 seeded random pairs".into(),
        || {
            let mut rng = StdRng::seed_from_u64(0x10ca1);
            first_failure(0..50, |_| {
                let (na, a) = computed.choose(&mut rng).expect("nonempty");
                let (nb, b) = computed.choose(&mut rng).expect("nonempty");
                Ok(join_failure(a, b).map(|m| format!("{na} * {nb}: {m}")))
            })
        },
    );
}

/// Checks one join against the definition: the product of the local h
/// polynomials, decomposed about the summed rank, is the product of the
/// gamma polynomials.
pub fn join_failure(a: &LocalHResult, b: &LocalHResult) -> Option<String> {
    let j = local_h_join(a, b);
    let product = &a.ell * &b.ell;
    if j.ell != product {
        return Some(format!("ell {} != {}", j.ell, product));
    }
    match gamma_decompose(&product, a.rank() + b.rank()) {
        Ok(xi) if xi.as_poly() == &a.xi.as_poly() * &b.xi.as_poly() && xi == j.xi => None,
        Ok(xi) => Some(format!(
            "gamma {} != {} * {}",
            xi.as_poly(),
            a.xi.as_poly(),
            b.xi.as_poly()
        )),
        Err(e) => Some(e.to_string()),
    }
}

fn types_text(types: &[CartanType]) -> String {
    match (types.first(), types.last()) {
        (Some(first), Some(last)) => format!("{first}..{last}"),
        _ => "skipped: range empty under budget".to_string(),
    }
}

fn oracles(r: &mut Runner, max_n: usize) {
    let a_top = max_n.min(NC_A_CAP);
    r.check(
        "type A noncrossing partition counts give local h and gamma",
        range_text(1, a_top),
        || {
            first_failure(1..=a_top, |&n| {
                let counts = count_nc_a(n)?;
                let res = local_h_cluster(CartanType::A(n))?;
                let ell = counts_poly(counts.iter().map(|c| c.singletons_nested));
                let xi = counts_gamma(counts.iter().map(|c| c.no_singleton), n)?;
                if ell != res.ell {
                    return Ok(Some(mismatch(format!("A{n} ell"), ell, res.ell)));
                }
                Ok((xi != res.xi)
                    .then(|| mismatch(format!("A{n} xi"), xi.as_poly(), res.xi.as_poly())))
            })
        },
    );

    let b_top = max_n.min(NC_B_CAP);
    r.check(
        "type B noncrossing partition counts give local h and gamma",
        range_text(2, b_top),
        || {
            first_failure(2..=b_top, |&n| {
                let counts = count_nc_b(n)?;
                let res = local_h_cluster(CartanType::B(n))?;
                let ell = counts_poly(counts.iter().map(|c| c.positive_singletons_nested));
                let xi = counts_gamma(counts.iter().map(|c| c.no_singleton), n)?;
                if ell != res.ell {
                    return Ok(Some(mismatch(format!("B{n} ell"), ell, res.ell)));
                }
                Ok((xi != res.xi)
                    .then(|| mismatch(format!("B{n} xi"), xi.as_poly(), res.xi.as_poly())))
            })
        },
    );
    r.check(
        "type B partitions with k pairs number C(n,k) C(n-1,k-1)",
        range_text(1, b_top),
        || {
            first_failure(1..=b_top, |&n| {
                let counts = count_nc_b(n)?;
                first_failure(0..=n, |&k| {
                    let got = BigInt::from(counts[k].no_zero_block);
                    let want = binomial(n as i64, k as i64) * binomial(n as i64 - 1, k as i64 - 1);
                    Ok((got != want).then(|| mismatch(format!("n={n} k={k}"), got, want)))
                })
            })
        },
    );

    let phi_top = max_n.min(PHI_CAP);
    r.check(
        "phi is a bijection sending derangements onto E_n",
        range_text(1, phi_top),
        || {
            first_failure(1..=phi_top, |&n| {
                let all = enumerate_perms(n)?;
                let images: BTreeSet<Perm> = all.iter().map(foata_phi).collect();
                if images.len() != all.len() {
                    return Ok(Some(format!("n={n}: not injective")));
                }
                let from_derangements: BTreeSet<Perm> = all
                    .iter()
                    .filter(|w| w.is_derangement())
                    .map(foata_phi)
                    .collect();
                let e: BTreeSet<Perm> = all.iter().filter(|w| is_in_e(w)).cloned().collect();
                Ok((from_derangements != e)
                    .then(|| format!("n={n}: image of derangements differs from E_n")))
            })
        },
    );
    r.check(
        "w(a) < a exactly when a is a descent top of phi(w)",
        range_text(1, phi_top),
        || {
            first_failure(1..=phi_top, |&n| {
                first_failure(enumerate_perms(n)?, |w| {
                    Ok((drop_letters(w) != descent_tops(&foata_phi(w)))
                        .then(|| format!("fails at {w}")))
                })
            })
        },
    );
    r.check(
        "each move class has one representative and descent polynomial x^d (1+x)^(n-2d)",
        range_text(1, phi_top),
        || {
            first_failure(1..=phi_top, |&n| {
                first_failure(fss_orbits(n)?, |orbit| {
                    let Some(rep) = orbit_representative(orbit) else {
                        return Ok(Some(format!(
                            "class of {} lacks a unique representative",
                            orbit[0]
                        )));
                    };
                    let d = rep.descent_count();
                    let want =
                        IntPoly::x().pow(d as u32) * IntPoly::one_plus_x().pow((n - 2 * d) as u32);
                    let got = orbit_descent_polynomial(orbit);
                    Ok((got != want).then(|| mismatch(format!("class of {rep}"), got, want)))
                })
            })
        },
    );

    let bary_top = max_n.min(BARY_CAP);
    r.check(
        "run, excedance and descent counts give the barycentric gamma",
        range_text(2, bary_top),
        || {
            first_failure(2..=bary_top, |&n| {
                let counts = bary_xi_counts(n)?;
                if !counts.all_equal() {
                    return Ok(Some(format!("n={n}: interpretations disagree: {counts:?}")));
                }
                let got = counts_gamma(counts.by_runs.iter().copied(), n)?;
                let want = gamma_decompose(&derangement_polynomial(n), n)?;
                Ok(
                    (got != want)
                        .then(|| mismatch(format!("n={n}"), got.as_poly(), want.as_poly())),
                )
            })
        },
    );
    r.check(
        "barycentric gamma sums to permutations without runs of length one",
        range_text(2, bary_top),
        || {
            first_failure(2..=bary_top, |&n| {
                let xi = local_h_barycentric(n)?.xi;
                let got = xi.as_poly().eval_one();
                let want = BigInt::from(count_no_singleton_runs(n)?);
                Ok((got != want).then(|| mismatch(format!("n={n}"), got, want)))
            })
        },
    );
    r.check(
        "derangement polynomial is symmetric",
        range_text(1, bary_top),
        || {
            first_failure(1..=bary_top, |&n| {
                Ok((!derangement_polynomial(n).is_symmetric(n)?).then(|| format!("n={n}")))
            })
        },
    );
}

fn series(r: &mut Runner) {
    r.check(
        "Narayana series satisfies F = x t F^2 + (1+x) t F + t",
        format!("through t^{SERIES_ORDER}"),
        || Ok((!verify_catalan_functional_eq(SERIES_ORDER)).then(|| "series mismatch".to_string())),
    );
    r.check(
        "2 S_n = (n-4) C_(n-1) - (n-4)(1+x) C_(n-2)",
        range_text(4, SERIES_ORDER),
        || {
            first_failure(4..=SERIES_ORDER, |&n| {
                Ok((!verify_s_identity(n)?).then(|| format!("n={n}")))
            })
        },
    );
    r.check(
        "generating function of S_n",
        format!("through t^{SERIES_ORDER}"),
        || Ok((!verify_s_generating_function(SERIES_ORDER)).then(|| "series mismatch".to_string())),
    );
    r.check(
        "h-polynomial of positive type D part agrees with R_n",
        range_text(4, SERIES_ORDER),
        || {
            first_failure(4..=SERIES_ORDER, |&n| {
                let twice_h =
                    localh_core::rootsystems::h_plus(CartanType::D(n))?.scale(&BigInt::from(2));
                let direct = double_r_poly(n)?;
                let via_s = r_poly_from_s(n)?.scale(&BigInt::from(2));
                if direct != twice_h {
                    return Ok(Some(mismatch(format!("n={n} direct"), direct, twice_h)));
                }
                Ok((via_s != twice_h).then(|| mismatch(format!("n={n} via S_n"), via_s, twice_h)))
            })
        },
    );
    r.check(
        "Narayana polynomials have Narayana coefficients",
        range_text(1, SERIES_ORDER),
        || {
            first_failure(1..=SERIES_ORDER, |&n| {
                let p = narayana_poly(n)?;
                first_failure(1..=n, |&k| {
                    let (n, k) = (n as i64, k as i64);
                    let want = binomial(n, k) * binomial(n, k - 1) / n;
                    let got = p.coeff(k as usize - 1);
                    Ok((got != want).then(|| mismatch(format!("n={n} k={k}"), got, want)))
                })
            })
        },
    );
}

/// Runs `suite` with `max_n` bounding every enumeration and `max_rank`
/// bounding the inclusion-exclusion sweeps.
pub fn run_suite(suite: Suite, max_n: usize, max_rank: usize) -> Result<Report> {
    if max_n > MAX_N {
        return Err(Error::BudgetExceeded {
            what: "verify --max-n",
            requested: max_n,
            limit: MAX_N,
        });
    }
    let mut r = Runner { checks: Vec::new() };
    if matches!(suite, Suite::Tables | Suite::All) {
        tables(&mut r, max_n, max_rank);
    }
    if matches!(suite, Suite::Oracles | Suite::All) {
        oracles(&mut r, max_n);
    }
    if matches!(suite, Suite::Series | Suite::All) {
        series(&mut r);
    }
    Ok(Report { checks: r.checks })
}
