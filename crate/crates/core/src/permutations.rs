//! Permutation statistics, derangement polynomials, the cycle-word bijection
//! `phi` and the Foata-Schutzenberger-Strehl moves on `E_n`.
//!
//! `E_n` is the set of permutations of `{1..n}` in which every left-to-right
//! maximum is a descent. `phi` sends the derangements onto `E_n`, and the
//! moves partition `E_n` into classes whose descent polynomials are
//! `x^d (1+x)^(n-2d)`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{check_budget, Error, Result};
use crate::polynomial::IntPoly;

/// Largest `n` for the `n!` sweeps.
pub const MAX_N: usize = 10;

/// A permutation of `{1..n}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn new(word: Vec<u32>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            let v = v as usize;
            if v == 0 || v > n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::Invalid(format!("{word:?} is not a permutation")));
            }
        }
        Ok(Perm(word))
    }

    pub fn identity(n: usize) -> Self {
        Perm((1..=n as u32).collect())
    }

    /// Builds the permutation with the given cycles; `n` is the largest entry
    /// and unlisted points are fixed.
    pub fn from_cycles(cycles: &[Vec<u32>]) -> Result<Self> {
        let n = cycles.iter().flatten().copied().max().unwrap_or(0) as usize;
        let mut word: Vec<u32> = (1..=n as u32).collect();
        let mut seen = vec![false; n + 1];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a == 0 || std::mem::replace(&mut seen[a as usize], true) {
                    return Err(Error::Invalid(format!("{a} repeated in cycle notation")));
                }
                word[a as usize - 1] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Perm(word))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn word(&self) -> &[u32] {
        &self.0
    }

    /// `w(i)` for `1 <= i <= n`.
    pub fn at(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = i as u32 + 1;
        }
        Perm(inv)
    }

    /// Cycles, each starting with its largest element, sorted by that element.
    pub fn standard_cycles(&self) -> Vec<Vec<u32>> {
        let n = self.len();
        let mut seen = vec![false; n + 1];
        let mut cycles = Vec::new();
        // walking down from n, the first unseen point is the max of its cycle
        for start in (1..=n as u32).rev() {
            if seen[start as usize] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start as usize] = true;
            let mut a = self.at(start as usize);
            while a != start {
                seen[a as usize] = true;
                cycle.push(a);
                a = self.at(a as usize);
            }
            cycles.push(cycle);
        }
        cycles.reverse();
        cycles
    }

    pub fn is_derangement(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v as usize != i + 1)
    }

    pub fn descent_count(&self) -> usize {
        self.0.windows(2).filter(|w| w[0] > w[1]).count()
    }

    pub fn excedance_count(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .filter(|(i, &v)| v as usize > i + 1)
            .count()
    }

    /// Entry with the sentinels `w_0 = 0` and `w_{n+1} = n + 1`.
    fn sentinel(&self, i: usize) -> u32 {
        if i == 0 {
            0
        } else if i > self.len() {
            self.len() as u32 + 1
        } else {
            self.at(i)
        }
    }

    /// `w_{i-1} < w_i < w_{i+1}` with sentinels, `1 <= i <= n`.
    pub fn is_double_ascent(&self, i: usize) -> bool {
        (1..=self.len()).contains(&i)
            && self.sentinel(i - 1) < self.at(i)
            && self.at(i) < self.sentinel(i + 1)
    }

    /// `w_{i-1} > w_i > w_{i+1}` with sentinels; never true at `1` or `n`.
    pub fn is_double_descent(&self, i: usize) -> bool {
        (1..=self.len()).contains(&i)
            && self.sentinel(i - 1) > self.at(i)
            && self.at(i) > self.sentinel(i + 1)
    }
}

impl fmt::Display for Perm {
    /// `(7,3,1,5,6,9,8,2,4)`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{self}")
    }
}

impl FromStr for Perm {
    type Err = Error;

    /// One-line notation: `(7,3,1,5)`, `7,3,1,5` or `7 3 1 5`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let word = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad entry {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Perm::new(word)
    }
}

/// Parses cycle notation such as `(5 2 4)(6 1)(8)(9 7 3)`; commas are also
/// accepted as separators inside a cycle.
pub fn parse_cycles(s: &str) -> Result<Perm> {
    let mut cycles = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let open = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::Parse(format!("expected '(' in {s:?}")))?;
        let close = open
            .find(')')
            .ok_or_else(|| Error::Parse(format!("unclosed cycle in {s:?}")))?;
        let cycle = open[..close]
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad entry {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if cycle.is_empty() {
            return Err(Error::Parse(format!("empty cycle in {s:?}")));
        }
        cycles.push(cycle);
        rest = open[close + 1..].trim_start();
    }
    let p = Perm::from_cycles(&cycles)?;
    Perm::new(p.0)
}

/// Every statistic used by the barycentric interpretations. Index sets are
/// 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermStats {
    pub descents: BTreeSet<usize>,
    pub excedances: BTreeSet<usize>,
    /// Lengths of the maximal ascending runs, left to right.
    pub run_lengths: Vec<usize>,
    pub double_descents: BTreeSet<usize>,
    pub double_excedances: BTreeSet<usize>,
    pub lr_maxima: BTreeSet<usize>,
    pub fixed_points: BTreeSet<usize>,
}

impl PermStats {
    pub fn runs(&self) -> usize {
        self.run_lengths.len()
    }
}

pub fn stats(w: &Perm) -> PermStats {
    let n = w.len();
    let inv = w.inverse();
    let descents = (1..n).filter(|&i| w.at(i) > w.at(i + 1)).collect();
    let excedances = (1..=n).filter(|&i| w.at(i) as usize > i).collect();
    let double_descents = (2..n)
        .filter(|&i| w.at(i - 1) > w.at(i) && w.at(i) > w.at(i + 1))
        .collect();
    let double_excedances = (1..=n)
        .filter(|&i| w.at(i) as usize > i && i > inv.at(i) as usize)
        .collect();
    let fixed_points = (1..=n).filter(|&i| w.at(i) as usize == i).collect();

    let mut lr_maxima = BTreeSet::new();
    let mut best = 0;
    for i in 1..=n {
        if w.at(i) > best {
            best = w.at(i);
            lr_maxima.insert(i);
        }
    }

    let mut run_lengths = Vec::new();
    let mut len = 0;
    for i in 1..=n {
        len += 1;
        if i == n || w.at(i) > w.at(i + 1) {
            run_lengths.push(len);
            len = 0;
        }
    }

    PermStats {
        descents,
        excedances,
        run_lengths,
        double_descents,
        double_excedances,
        lr_maxima,
        fixed_points,
    }
}

/// The word read off the standard cycle form: cycles start with their
/// largest element and appear in increasing order of it.
pub fn foata_phi(w: &Perm) -> Perm {
    Perm(w.standard_cycles().concat())
}

/// Inverse of [`foata_phi`]: cut the word before every left-to-right maximum.
pub fn foata_phi_inverse(u: &Perm) -> Perm {
    let mut cycles: Vec<Vec<u32>> = Vec::new();
    let mut best = 0;
    for &v in u.word() {
        if v > best {
            best = v;
            cycles.push(Vec::new());
        }
        cycles
            .last_mut()
            .expect("first entry opens a cycle")
            .push(v);
    }
    let mut word: Vec<u32> = (1..=u.len() as u32).collect();
    for c in &cycles {
        for (k, &a) in c.iter().enumerate() {
            word[a as usize - 1] = c[(k + 1) % c.len()];
        }
    }
    Perm(word)
}

/// Letters `a` with `w(a) < a`.
pub fn drop_letters(w: &Perm) -> BTreeSet<usize> {
    (1..=w.len()).filter(|&a| (w.at(a) as usize) < a).collect()
}

/// Letters immediately followed by a smaller letter.
pub fn descent_tops(u: &Perm) -> BTreeSet<usize> {
    u.word()
        .windows(2)
        .filter(|p| p[0] > p[1])
        .map(|p| p[0] as usize)
        .collect()
}

/// Every left-to-right maximum is a descent.
pub fn is_in_e(w: &Perm) -> bool {
    let n = w.len();
    let mut best = 0;
    for j in 1..=n {
        if w.at(j) > best {
            best = w.at(j);
            if j == n || w.at(j) < w.at(j + 1) {
                return false;
            }
        }
    }
    true
}

/// The move `psi_i` on `E_n`.
///
/// At a double ascent `i`, `w_i` moves left to sit between `w_j` and
/// `w_{j+1}` for the largest `j < i` with `w_j > w_i > w_{j+1}`. At a double
/// descent, it moves right to sit between `w_j` and `w_{j+1}` for the
/// smallest `j > i` with `w_j < w_i < w_{j+1}`, reading `w_{n+1} = n + 1`.
pub fn fss_move(w: &Perm, i: usize) -> Result<Perm> {
    if !is_in_e(w) {
        return Err(Error::NotInE(w.to_string()));
    }
    let value = if (1..=w.len()).contains(&i) {
        w.at(i)
    } else {
        0
    };
    let mut word = w.0.clone();
    if w.is_double_ascent(i) {
        let j = (1..i)
            .rev()
            .find(|&j| w.at(j) > value && value > w.at(j + 1))
            .ok_or_else(|| Error::Invalid(format!("no landing slot left of {i} in {w}")))?;
        word.remove(i - 1);
        word.insert(j, value);
    } else if w.is_double_descent(i) {
        let j = (i + 1..=w.len())
            .find(|&j| w.at(j) < value && value < w.sentinel(j + 1))
            .ok_or_else(|| Error::Invalid(format!("no landing slot right of {i} in {w}")))?;
        word.insert(j, value);
        word.remove(i - 1);
    } else {
        return Err(Error::NotMovable {
            perm: w.to_string(),
            index: i,
        });
    }
    Ok(Perm(word))
}

/// The class of `w` under all moves, sorted.
pub fn fss_orbit(w: &Perm) -> Result<Vec<Perm>> {
    if !is_in_e(w) {
        return Err(Error::NotInE(w.to_string()));
    }
    let mut seen = BTreeSet::from([w.clone()]);
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(u) = queue.pop_front() {
        for i in 1..=u.len() {
            if u.is_double_ascent(i) || u.is_double_descent(i) {
                let v = fss_move(&u, i)?;
                if seen.insert(v.clone()) {
                    queue.push_back(v);
                }
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// `E_n` split into move classes, each sorted, in order of first element.
pub fn fss_orbits(n: usize) -> Result<Vec<Vec<Perm>>> {
    let mut seen = BTreeSet::new();
    let mut orbits = Vec::new();
    for w in enumerate_perms(n)?.into_iter().filter(is_in_e) {
        if seen.contains(&w) {
            continue;
        }
        let orbit = fss_orbit(&w)?;
        seen.extend(orbit.iter().cloned());
        orbits.push(orbit);
    }
    Ok(orbits)
}

/// The unique element of a move class without double descents, if unique.
pub fn orbit_representative(orbit: &[Perm]) -> Option<&Perm> {
    let mut reps = orbit
        .iter()
        .filter(|u| (1..=u.len()).all(|i| !u.is_double_descent(i)));
    let first = reps.next()?;
    reps.next().is_none().then_some(first)
}

/// `sum_{u in orbit} x^des(u)`.
pub fn orbit_descent_polynomial(orbit: &[Perm]) -> IntPoly {
    orbit
        .iter()
        .map(|u| IntPoly::monomial(1, u.descent_count()))
        .sum()
}

/// Steps `word` to the next permutation in lexicographic order; returns
/// `false` after the last one.
pub fn next_permutation(word: &mut [u32]) -> bool {
    let Some(i) = word.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = word
        .iter()
        .rposition(|&v| v > word[i])
        .expect("pivot has a successor");
    word.swap(i, j);
    word[i + 1..].reverse();
    true
}

/// All permutations of `{1..n}` in lexicographic order.
pub fn enumerate_perms(n: usize) -> Result<Vec<Perm>> {
    check_budget("n", n, MAX_N)?;
    let mut word: Vec<u32> = (1..=n as u32).collect();
    let mut out = Vec::new();
    loop {
        out.push(Perm(word.clone()));
        if !next_permutation(&mut word) {
            return Ok(out);
        }
    }
}

/// Runs `visit` on every permutation of `{1..n}` sharded by first letter,
/// and merges the per-shard results in letter order.
pub fn par_fold_perms<T, F, G>(n: usize, init: G, visit: F) -> Vec<T>
where
    T: Send,
    G: Fn() -> T + Sync,
    F: Fn(&mut T, &Perm) + Sync,
{
    if n == 0 {
        let mut acc = init();
        visit(&mut acc, &Perm(Vec::new()));
        return vec![acc];
    }
    (1..=n as u32)
        .into_par_iter()
        .map(|first| {
            let mut acc = init();
            let mut rest: Vec<u32> = (1..=n as u32).filter(|&v| v != first).collect();
            let mut w = Perm(Vec::with_capacity(n));
            loop {
                w.0.clear();
                w.0.push(first);
                w.0.extend_from_slice(&rest);
                visit(&mut acc, &w);
                if !next_permutation(&mut rest) {
                    break;
                }
            }
            acc
        })
        .collect()
}

/// `sum_{w in D_n} x^ex(w)`, by depth-first generation of the derangements.
pub fn derangement_polynomial(n: usize) -> IntPoly {
    fn extend(i: usize, n: usize, used: &mut [bool], ex: usize, counts: &mut [u64]) {
        if i > n {
            counts[ex] += 1;
            return;
        }
        for v in 1..=n {
            if v != i && !used[v] {
                used[v] = true;
                extend(i + 1, n, used, ex + usize::from(v > i), counts);
                used[v] = false;
            }
        }
    }
    let mut counts = vec![0u64; n + 1];
    extend(1, n, &mut vec![false; n + 1], 0, &mut counts);
    IntPoly::from_coeffs(counts.into_iter().map(BigInt::from).collect())
}

/// The three barycentric gamma-vector counts, indexed by `i` in `0..=n/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaryXiCounts {
    /// Permutations with `i` ascending runs, none of length one.
    pub by_runs: Vec<u64>,
    /// Derangements with `i` excedances and no double excedance.
    pub by_excedances: Vec<u64>,
    /// Permutations in `E_n` with `i` descents and no double descent.
    pub by_descents: Vec<u64>,
}

impl BaryXiCounts {
    pub fn all_equal(&self) -> bool {
        self.by_runs == self.by_excedances && self.by_excedances == self.by_descents
    }
}

/// Exhaustive counts for the three interpretations of the barycentric local
/// gamma-vector.
pub fn bary_xi_counts(n: usize) -> Result<BaryXiCounts> {
    check_budget("n", n, MAX_N)?;
    let len = n / 2 + 1;
    let zero = || BaryXiCounts {
        by_runs: vec![0; len],
        by_excedances: vec![0; len],
        by_descents: vec![0; len],
    };
    let shards = par_fold_perms(n, zero, |acc, w| {
        let s = stats(w);
        if s.run_lengths.iter().all(|&l| l > 1) {
            // runs of length >= 2 force runs <= n/2
            acc.by_runs[s.runs()] += 1;
        }
        if s.fixed_points.is_empty() && s.double_excedances.is_empty() {
            let k = s.excedances.len();
            if k < len {
                acc.by_excedances[k] += 1;
            } else {
                unreachable!("derangement without double excedance has at most n/2 excedances");
            }
        }
        if s.double_descents.is_empty() && is_in_e(w) {
            acc.by_descents[s.descents.len()] += 1;
        }
    });
    let mut total = zero();
    for shard in shards {
        for i in 0..len {
            total.by_runs[i] += shard.by_runs[i];
            total.by_excedances[i] += shard.by_excedances[i];
            total.by_descents[i] += shard.by_descents[i];
        }
    }
    Ok(total)
}

/// Number of permutations of `{1..n}` with no ascending run of length one.
pub fn count_no_singleton_runs(n: usize) -> Result<u64> {
    check_budget("n", n, MAX_N)?;
    Ok(par_fold_perms(
        n,
        || 0u64,
        |acc, w| {
            if stats(w).run_lengths.iter().all(|&l| l > 1) {
                *acc += 1;
            }
        },
    )
    .into_iter()
    .sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Perm {
        s.parse().unwrap()
    }

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    #[test]
    fn parse_and_display() {
        let p = w("(7,3,1,5,6,9,8,2,4)");
        assert_eq!(p.to_string(), "(7,3,1,5,6,9,8,2,4)");
        assert_eq!(w("2 1"), w("(2,1)"));
        assert!("(1,1)".parse::<Perm>().is_err());
        assert!("(1,3)".parse::<Perm>().is_err());
        assert!("(a)".parse::<Perm>().is_err());
    }

    #[test]
    fn cycles_parse() {
        let p = parse_cycles("(5 2 4)(6 1)(8)(9 7 3)").unwrap();
        assert_eq!(p, w("(6,4,9,5,2,1,3,8,7)"));
        assert_eq!(parse_cycles("(2 1)").unwrap(), w("(2,1)"));
        assert!(parse_cycles("(1 2").is_err());
        assert!(parse_cycles("(1 2)(2 3)").is_err());
        assert!(parse_cycles("()").is_err());
        assert_eq!(parse_cycles("(1 2)(4)").unwrap(), w("(2,1,3,4)"));
    }

    #[test]
    fn stats_of_the_e9_example() {
        let s = stats(&w("(7,3,1,5,6,9,8,2,4)"));
        assert_eq!(s.lr_maxima, set(&[1, 6]));
        assert!(s.descents.contains(&1) && s.descents.contains(&6));
        assert_eq!(s.descents, set(&[1, 2, 6, 7]));
        assert_eq!(s.double_descents, set(&[2, 7]));
        assert_eq!(s.run_lengths, vec![1, 1, 4, 1, 2]);
    }

    #[test]
    fn stats_small() {
        for n in 1..6 {
            let s = stats(&Perm::identity(n));
            assert!(s.descents.is_empty() && s.excedances.is_empty());
            assert_eq!(s.runs(), 1);
        }
        let s = stats(&w("(2,1)"));
        assert_eq!(s.descents, set(&[1]));
        assert_eq!(s.excedances, set(&[1]));
        assert_eq!(s.runs(), 2);
        // 3 -> 1 -> 2: w(2)=3 > 2 > w^-1(2) = 1
        let s = stats(&w("(2,3,1)"));
        assert_eq!(s.double_excedances, set(&[2]));
    }

    #[test]
    fn phi_examples() {
        let p = parse_cycles("(5 2 4)(6 1)(8)(9 7 3)").unwrap();
        assert_eq!(foata_phi(&p), w("(5,2,4,6,1,8,9,7,3)"));
        assert_eq!(foata_phi(&Perm::identity(5)), Perm::identity(5));
        assert_eq!(foata_phi(&w("(2,1)")), w("(2,1)"));
    }

    #[test]
    fn phi_descents_track_letters() {
        // w(a) < a exactly when letter a is followed by a smaller letter
        let p = parse_cycles("(5 2 4)(6 1)(8)(9 7 3)").unwrap();
        let tops = descent_tops(&foata_phi(&p));
        let drops = drop_letters(&p);
        assert_eq!(tops, drops);
        assert_eq!(tops, set(&[5, 6, 7, 9]));
    }

    #[test]
    fn membership_in_e() {
        assert!(is_in_e(&w("(7,3,1,5,6,9,8,2,4)")));
        for n in 1..6 {
            assert!(!is_in_e(&Perm::identity(n)));
        }
        assert!(is_in_e(&w("(2,1)")));
        assert!(!is_in_e(&w("(1)")));
    }

    #[test]
    fn moves_on_the_e9_example() {
        let p = w("(7,3,1,5,6,9,8,2,4)");
        assert_eq!(fss_move(&p, 4).unwrap(), w("(7,5,3,1,6,9,8,2,4)"));
        assert_eq!(fss_move(&p, 7).unwrap(), w("(7,3,1,5,6,9,2,4,8)"));
        assert!(matches!(
            fss_move(&p, 1),
            Err(Error::NotMovable { index: 1, .. })
        ));
        assert!(matches!(fss_move(&p, 0), Err(Error::NotMovable { .. })));
        assert!(matches!(
            fss_move(&Perm::identity(3), 2),
            Err(Error::NotInE(_))
        ));
    }

    #[test]
    fn moves_are_involutive() {
        for n in 2..=7 {
            for u in enumerate_perms(n).unwrap().into_iter().filter(is_in_e) {
                for i in 1..=n {
                    if !(u.is_double_ascent(i) || u.is_double_descent(i)) {
                        continue;
                    }
                    let v = fss_move(&u, i).unwrap();
                    assert!(is_in_e(&v));
                    let moved = u.at(i);
                    let at = v.word().iter().position(|&x| x == moved).unwrap() + 1;
                    assert_eq!(fss_move(&v, at).unwrap(), u, "{u} at {i}");
                }
            }
        }
    }

    #[test]
    fn orbit_small() {
        assert_eq!(fss_orbit(&w("(2,1)")).unwrap(), vec![w("(2,1)")]);
        let orbit = fss_orbit(&w("(7,3,1,5,6,9,8,2,4)")).unwrap();
        let reps: Vec<_> = orbit
            .iter()
            .filter(|u| (1..=u.len()).all(|i| !u.is_double_descent(i)))
            .collect();
        assert_eq!(reps.len(), 1);
        let k = (1..=9).filter(|&i| reps[0].is_double_ascent(i)).count();
        assert_eq!(orbit.len(), 1 << k);
    }

    #[test]
    fn phi_inverse_round_trips() {
        for u in enumerate_perms(6).unwrap() {
            assert_eq!(foata_phi(&foata_phi_inverse(&u)), u);
            assert_eq!(foata_phi_inverse(&foata_phi(&u)), u);
        }
    }

    #[test]
    fn next_permutation_counts() {
        assert_eq!(enumerate_perms(5).unwrap().len(), 120);
        assert_eq!(enumerate_perms(0).unwrap(), vec![Perm::identity(0)]);
        let all = enumerate_perms(4).unwrap();
        assert!(all.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn derangement_polynomials() {
        assert_eq!(derangement_polynomial(0), IntPoly::one());
        assert!(derangement_polynomial(1).is_zero());
        assert_eq!(derangement_polynomial(2), IntPoly::from_i64s(&[0, 1]));
        assert_eq!(derangement_polynomial(4), IntPoly::from_i64s(&[0, 1, 7, 1]));
        for n in 2..=8 {
            let d = derangement_polynomial(n);
            let brute: Vec<Perm> = enumerate_perms(n)
                .unwrap()
                .into_iter()
                .filter(Perm::is_derangement)
                .collect();
            assert_eq!(d.eval_one(), BigInt::from(brute.len()));
            assert!(d.is_symmetric(n).unwrap());
        }
    }

    #[test]
    fn bary_examples() {
        let c = bary_xi_counts(5).unwrap();
        assert!(c.all_equal());
        assert_eq!(c.by_runs, vec![0, 1, 18]);
        assert_eq!(bary_xi_counts(2).unwrap().by_descents, vec![0, 1]);
        assert!(matches!(
            bary_xi_counts(11),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
