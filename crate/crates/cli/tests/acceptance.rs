//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Expected polynomials are transcribed literally here so that they
//! also cross-check the tables embedded in the library.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use localh_cli::output::{Kind, OutputRecord};
use localh_cli::verify::join_failure;
use localh_core::localh::{
    exceptional_types, local_h_barycentric, local_h_cluster, xi_closed_form_vector, LocalHResult,
};
use localh_core::noncrossing::{count_nc_a, count_nc_b};
use localh_core::permutations::{
    bary_xi_counts, count_no_singleton_runs, derangement_polynomial, descent_tops, drop_letters,
    enumerate_perms, foata_phi, fss_move, fss_orbits, is_in_e, orbit_descent_polynomial,
    orbit_representative, Perm,
};
use localh_core::polynomial::series::{
    double_r_poly, verify_catalan_functional_eq, verify_s_identity,
};
use localh_core::polynomial::{binomial, gamma_compose, gamma_decompose, narayana_poly};
use localh_core::rootsystems::h_plus;
use localh_core::{CartanType, GammaVector, IntPoly};
use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::seq::IndexedRandom;
use rand::SeedableRng;

type Outcome = Result<(), String>;
type Table = &'static [(usize, &'static [i64])];
type Criterion = (&'static str, fn() -> Outcome, Option<Duration>);

const ELL_A: Table = &[
    (2, &[0, 1]),
    (3, &[0, 1, 1]),
    (4, &[0, 1, 4, 1]),
    (5, &[0, 1, 8, 8, 1]),
    (6, &[0, 1, 13, 29, 13, 1]),
    (7, &[0, 1, 19, 73, 73, 19, 1]),
    (8, &[0, 1, 26, 151, 266, 151, 26, 1]),
];
const ELL_B: Table = &[
    (2, &[0, 2]),
    (3, &[0, 3, 3]),
    (4, &[0, 4, 14, 4]),
    (5, &[0, 5, 35, 35, 5]),
    (6, &[0, 6, 69, 146, 69, 6]),
    (7, &[0, 7, 119, 427, 427, 119, 7]),
];
const ELL_D: Table = &[
    (4, &[0, 2, 6, 2]),
    (5, &[0, 3, 18, 18, 3]),
    (6, &[0, 4, 40, 80, 40, 4]),
    (7, &[0, 5, 75, 250, 250, 75, 5]),
];
const EXCEPTIONAL: &[(&str, &[i64], &[i64])] = &[
    ("H3", &[0, 8, 8], &[0, 8]),
    ("H4", &[0, 42, 124, 42], &[0, 42, 40]),
    ("F4", &[0, 10, 29, 10], &[0, 10, 9]),
    ("E6", &[0, 7, 63, 125, 63, 7], &[0, 7, 35, 13]),
    ("E7", &[0, 16, 204, 644, 644, 204, 16], &[0, 16, 124, 112]),
    (
        "E8",
        &[0, 44, 748, 3380, 5472, 3380, 748, 44],
        &[0, 44, 484, 784, 120],
    ),
];
const XI_BARYCENTRIC: Table = &[
    (2, &[0, 1]),
    (3, &[0, 1]),
    (4, &[0, 1, 5]),
    (5, &[0, 1, 18]),
    (6, &[0, 1, 47, 61]),
    (7, &[0, 1, 108, 479]),
    (8, &[0, 1, 233, 2414, 1385]),
    (9, &[0, 1, 486, 9970, 19028]),
];

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// Runs the CLI in-process and parses its JSON record.
fn cli_json(args: &[&str]) -> Result<OutputRecord, String> {
    let mut out = Vec::new();
    let mut diag = Vec::new();
    let argv = ["localh"].iter().chain(args).chain(&["--format", "json"]);
    let code = localh_cli::run(argv.copied(), &mut out, &mut diag);
    if code != 0 {
        return Err(format!(
            "{args:?} exited {code}: {}",
            String::from_utf8_lossy(&diag)
        ));
    }
    OutputRecord::from_json(std::str::from_utf8(&out).map_err(err)?.trim()).map_err(err)
}

fn json_poly(r: &OutputRecord, key: &str) -> Result<IntPoly, String> {
    let coeffs = r.payload[key]
        .as_array()
        .ok_or_else(|| format!("{key} is not an array"))?
        .iter()
        .map(|v| match v {
            serde_json::Value::Number(n) => n
                .as_i64()
                .map(BigInt::from)
                .ok_or("non-integer".to_string()),
            serde_json::Value::String(s) => s.parse::<BigInt>().map_err(err),
            other => Err(format!("unexpected coefficient {other}")),
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(IntPoly::from_coeffs(coeffs))
}

fn counts_poly(counts: impl IntoIterator<Item = u64>) -> IntPoly {
    IntPoly::from_coeffs(counts.into_iter().map(BigInt::from).collect())
}

fn counts_gamma(counts: impl IntoIterator<Item = u64>, n: usize) -> Result<GammaVector, String> {
    GammaVector::new(
        counts
            .into_iter()
            .take(n / 2 + 1)
            .map(BigInt::from)
            .collect(),
        n,
    )
    .map_err(err)
}

fn published_tables_reproduced() -> Outcome {
    let families = [
        (CartanType::A as fn(usize) -> CartanType, ELL_A),
        (CartanType::B, ELL_B),
        (CartanType::D, ELL_D),
    ];
    for (make, table) in families {
        for &(n, want) in table {
            let t = make(n);
            let r = cli_json(&["cluster", "--type", &t.to_string()])?;
            ensure(r.kind == Kind::LocalH, || format!("{t}: wrong record kind"))?;
            ensure(
                r.payload["source"] == "computed-inclusion-exclusion",
                || format!("{t}: not computed"),
            )?;
            let got = json_poly(&r, "ell")?;
            ensure(got == IntPoly::from_i64s(want), || {
                format!("{t}: got {got}")
            })?;
        }
    }
    for &(name, ell, xi) in EXCEPTIONAL {
        let r = cli_json(&["cluster", "--type", name, "--gamma"])?;
        let got_ell = json_poly(&r, "ell")?;
        let got_xi = json_poly(&r, "xi")?;
        ensure(got_ell == IntPoly::from_i64s(ell), || {
            format!("{name}: ell {got_ell}")
        })?;
        ensure(got_xi == IntPoly::from_i64s(xi), || {
            format!("{name}: xi {got_xi}")
        })?;
        let t: CartanType = name.parse().map_err(err)?;
        let composed = gamma_compose(&GammaVector::from_i64s(xi, t.rank()).map_err(err)?);
        ensure(composed == got_ell, || {
            format!("{name}: composed xi gives {composed}")
        })?;
    }
    for m in 3..=10 {
        let r = cli_json(&["cluster", "--type", &format!("I2({m})"), "--gamma"])?;
        let want = IntPoly::monomial(m as i64 - 2, 1);
        ensure(
            json_poly(&r, "ell")? == want && json_poly(&r, "xi")? == want,
            || format!("I2({m})"),
        )?;
    }
    Ok(())
}

fn closed_form_gamma() -> Outcome {
    let types = (1..=10)
        .map(CartanType::A)
        .chain((2..=10).map(CartanType::B))
        .chain((4..=10).map(CartanType::D));
    for t in types {
        let computed = local_h_cluster(t).map_err(err)?;
        let decomposed = gamma_decompose(&computed.ell, t.rank()).map_err(err)?;
        let closed = xi_closed_form_vector(t).map_err(err)?;
        ensure(decomposed == closed, || {
            format!("{t}: {} vs {}", decomposed.as_poly(), closed.as_poly())
        })?;
    }
    for n in 2..=7 {
        let brute = counts_gamma(
            count_nc_b(n).map_err(err)?.iter().map(|c| c.no_singleton),
            n,
        )?;
        let closed = xi_closed_form_vector(CartanType::B(n)).map_err(err)?;
        ensure(brute == closed, || {
            format!("B{n} brute {} vs {}", brute.as_poly(), closed.as_poly())
        })?;
    }
    Ok(())
}

fn type_a_oracle() -> Outcome {
    for n in 1..=8 {
        let counts = count_nc_a(n).map_err(err)?;
        let res = local_h_cluster(CartanType::A(n)).map_err(err)?;
        let ell = counts_poly(counts.iter().map(|c| c.singletons_nested));
        let xi = counts_gamma(counts.iter().map(|c| c.no_singleton), n)?;
        ensure(ell == res.ell, || format!("A{n}: ell {ell} vs {}", res.ell))?;
        ensure(xi == res.xi, || {
            format!("A{n}: xi {} vs {}", xi.as_poly(), res.xi.as_poly())
        })?;
    }
    Ok(())
}

fn type_b_oracle() -> Outcome {
    for n in 2..=6 {
        let counts = count_nc_b(n).map_err(err)?;
        let res = local_h_cluster(CartanType::B(n)).map_err(err)?;
        let ell = counts_poly(counts.iter().map(|c| c.positive_singletons_nested));
        let xi = counts_gamma(counts.iter().map(|c| c.no_singleton), n)?;
        ensure(ell == res.ell, || format!("B{n}: ell {ell} vs {}", res.ell))?;
        ensure(xi == res.xi, || {
            format!("B{n}: xi {} vs {}", xi.as_poly(), res.xi.as_poly())
        })?;
        for (k, c) in counts.iter().enumerate() {
            let (n, k) = (n as i64, k as i64);
            let want = binomial(n, k) * binomial(n - 1, k - 1);
            ensure(BigInt::from(c.no_zero_block) == want, || {
                format!("n={n} k={k}: {}", c.no_zero_block)
            })?;
        }
    }
    Ok(())
}

fn type_d_narayana() -> Outcome {
    for n in 4..=10 {
        let computed = local_h_cluster(CartanType::D(n)).map_err(err)?.ell;
        let want = (narayana_poly(n - 1).map_err(err)? * IntPoly::x()).scale(&BigInt::from(n - 2));
        ensure(computed == want, || format!("D{n}: {computed} vs {want}"))?;
    }
    Ok(())
}

fn series_identities() -> Outcome {
    ensure(verify_catalan_functional_eq(12), || {
        "functional equation".into()
    })?;
    for n in 4..=12 {
        ensure(verify_s_identity(n).map_err(err)?, || {
            format!("S identity at n={n}")
        })?;
        let twice_h = h_plus(CartanType::D(n))
            .map_err(err)?
            .scale(&BigInt::from(2));
        ensure(double_r_poly(n).map_err(err)? == twice_h, || {
            format!("R_n at n={n}")
        })?;
    }
    Ok(())
}

fn barycentric_suite() -> Outcome {
    for &(n, want) in XI_BARYCENTRIC {
        let want = GammaVector::from_i64s(want, n).map_err(err)?;
        let xi = gamma_decompose(&derangement_polynomial(n), n).map_err(err)?;
        ensure(xi == want, || format!("n={n}: {}", xi.as_poly()))?;
        let counts = bary_xi_counts(n).map_err(err)?;
        ensure(counts.all_equal(), || format!("n={n}: {counts:?}"))?;
        ensure(
            counts_gamma(counts.by_runs.iter().copied(), n)? == want,
            || format!("n={n}: {counts:?}"),
        )?;
        let total: u64 = counts.by_runs.iter().sum();
        let no_short_runs = count_no_singleton_runs(n).map_err(err)?;
        ensure(total == no_short_runs, || {
            format!("n={n}: sum {total} vs {no_short_runs}")
        })?;
    }
    Ok(())
}

fn bijection_properties() -> Outcome {
    for n in 1..=8 {
        let all = enumerate_perms(n).map_err(err)?;
        let images: BTreeSet<Perm> = all.iter().map(foata_phi).collect();
        ensure(images.len() == all.len(), || {
            format!("n={n}: phi not injective")
        })?;
        let from_derangements: BTreeSet<Perm> = all
            .iter()
            .filter(|w| w.is_derangement())
            .map(foata_phi)
            .collect();
        let e: BTreeSet<Perm> = all.iter().filter(|w| is_in_e(w)).cloned().collect();
        ensure(from_derangements == e, || format!("n={n}: phi(D_n) != E_n"))?;
        for w in &all {
            ensure(drop_letters(w) == descent_tops(&foata_phi(w)), || {
                format!("drop letters of {w}")
            })?;
        }
        let mut covered = 0;
        for orbit in fss_orbits(n).map_err(err)? {
            covered += orbit.len();
            let rep = orbit_representative(&orbit)
                .ok_or_else(|| format!("class of {} has no unique rep", orbit[0]))?;
            let d = rep.descent_count();
            let want = IntPoly::x().pow(d as u32) * IntPoly::one_plus_x().pow((n - 2 * d) as u32);
            ensure(orbit_descent_polynomial(&orbit) == want, || {
                format!("class of {rep}")
            })?;
        }
        ensure(covered == e.len(), || {
            format!("n={n}: classes cover {covered} of {}", e.len())
        })?;
    }
    Ok(())
}

fn structural_invariants() -> Outcome {
    let mut pool: Vec<LocalHResult> = Vec::new();
    let classical = (1..=10)
        .map(CartanType::A)
        .chain((2..=10).map(CartanType::B))
        .chain((4..=10).map(CartanType::D));
    for t in classical
        .chain(exceptional_types())
        .chain((3..=8).map(CartanType::I2))
    {
        pool.push(local_h_cluster(t).map_err(err)?);
    }
    for n in 1..=8 {
        pool.push(local_h_barycentric(n).map_err(err)?);
    }
    for res in &pool {
        ensure(res.satisfies_invariants(), || {
            format!("{} fails symmetry or zero constant term", res.ell)
        })?;
        ensure(res.xi.is_nonnegative(), || {
            format!("negative gamma {}", res.xi.as_poly())
        })?;
    }
    let mut rng = StdRng::seed_from_u64(2024);
    for _ in 0..50 {
        let a = pool.choose(&mut rng).expect("pool is nonempty");
        let b = pool.choose(&mut rng).expect("pool is nonempty");
        if let Some(msg) = join_failure(a, b) {
            return Err(msg);
        }
    }
    Ok(())
}

fn worked_examples() -> Outcome {
    let r = cli_json(&["perm", "phi", "(5 2 4)(6 1)(8)(9 7 3)"])?;
    ensure(r.payload["phi"] == "(5,2,4,6,1,8,9,7,3)", || {
        format!("phi gave {}", r.payload["phi"])
    })?;
    let w: Perm = "(7,3,1,5,6,9,8,2,4)".parse().map_err(err)?;
    let psi4 = fss_move(&w, 4).map_err(err)?;
    ensure(psi4.to_string() == "(7,5,3,1,6,9,8,2,4)", || {
        format!("psi_4 gave {psi4}")
    })?;
    let psi7 = fss_move(&w, 7).map_err(err)?;
    ensure(psi7.to_string() == "(7,3,1,5,6,9,2,4,8)", || {
        format!("psi_7 gave {psi7}")
    })?;
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (
            "cluster output reproduces the published local h tables",
            published_tables_reproduced,
            Some(Duration::from_secs(5)),
        ),
        (
            "closed-form gamma equals decomposed local h",
            closed_form_gamma,
            None,
        ),
        (
            "type A noncrossing counts equal local h and gamma",
            type_a_oracle,
            Some(Duration::from_secs(30)),
        ),
        (
            "type B noncrossing counts equal local h and gamma",
            type_b_oracle,
            Some(Duration::from_secs(60)),
        ),
        (
            "type D local h is (n-2) x Narayana(n-1)",
            type_d_narayana,
            None,
        ),
        ("series identities", series_identities, None),
        (
            "barycentric gamma: table, three interpretations, run count",
            barycentric_suite,
            Some(Duration::from_secs(120)),
        ),
        ("phi and move-class properties", bijection_properties, None),
        (
            "symmetry, nonnegativity and join multiplicativity",
            structural_invariants,
            None,
        ),
        (
            "worked examples for phi and the moves",
            worked_examples,
            None,
        ),
    ];
    let mut failures = 0;
    for (k, (name, body, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut outcome = body();
        let elapsed = start.elapsed();
        if let (Ok(()), Some(limit)) = (&outcome, limit) {
            if elapsed > *limit {
                outcome = Err(format!("took {elapsed:.2?}, limit {limit:?}"));
            }
        }
        match outcome {
            Ok(()) => println!("criterion {:>2}: PASS  {name} ({elapsed:.2?})", k + 1),
            Err(msg) => {
                failures += 1;
                println!(
                    "criterion {:>2}: FAIL  {name} ({elapsed:.2?}): {msg}",
                    k + 1
                );
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failures} criteria failed");
        ExitCode::FAILURE
    }
}
