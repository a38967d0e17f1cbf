//! Finite root system types, classical Dynkin diagrams and parabolic
//! decompositions, and h-polynomials of positive cluster complexes.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::polynomial::{binomial, exact_div, IntPoly};

/// Cartan-Killing type of an irreducible finite root system.
///
/// The derived ordering sorts A, B, D, E, F, H, I and then by rank, which is
/// the order used for canonical decompositions and report output.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CartanType {
    A(usize),
    B(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    H3,
    H4,
    /// Dihedral type `I_2(m)`, rank 2.
    I2(usize),
}

impl CartanType {
    /// Validates the rank constraints: `A(n>=1)`, `B(n>=2)`, `D(n>=2)`, `I2(m>=3)`.
    pub fn new_checked(self) -> Result<Self> {
        let ok = match self {
            CartanType::A(n) => n >= 1,
            CartanType::B(n) | CartanType::D(n) => n >= 2,
            CartanType::I2(m) => m >= 3,
            _ => true,
        };
        if ok {
            Ok(self)
        } else {
            Err(Error::OutOfRange(format!("{self} is not a valid type")))
        }
    }

    pub fn rank(self) -> usize {
        match self {
            CartanType::A(n) | CartanType::B(n) | CartanType::D(n) => n,
            CartanType::I2(_) => 2,
            CartanType::H3 => 3,
            CartanType::H4 | CartanType::F4 => 4,
            CartanType::E6 => 6,
            CartanType::E7 => 7,
            CartanType::E8 => 8,
        }
    }

    pub fn is_classical(self) -> bool {
        matches!(self, CartanType::A(_) | CartanType::B(_) | CartanType::D(_))
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CartanType::A(n) => write!(f, "A{n}"),
            CartanType::B(n) => write!(f, "B{n}"),
            CartanType::D(n) => write!(f, "D{n}"),
            CartanType::I2(m) => write!(f, "I2({m})"),
            CartanType::H3 => f.write_str("H3"),
            CartanType::H4 => f.write_str("H4"),
            CartanType::F4 => f.write_str("F4"),
            CartanType::E6 => f.write_str("E6"),
            CartanType::E7 => f.write_str("E7"),
            CartanType::E8 => f.write_str("E8"),
        }
    }
}

impl FromStr for CartanType {
    type Err = Error;

    /// Parses `A5`, `b7`, `D6`, `I2(7)`, `H3`, `H4`, `F4`, `E6`, `E7`, `E8`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_uppercase();
        let bad = || Error::Parse(format!("unknown root system type {s:?}"));
        let t = match s.as_str() {
            "H3" => CartanType::H3,
            "H4" => CartanType::H4,
            "F4" => CartanType::F4,
            "E6" => CartanType::E6,
            "E7" => CartanType::E7,
            "E8" => CartanType::E8,
            _ => {
                if let Some(inner) = s.strip_prefix("I2(").and_then(|r| r.strip_suffix(')')) {
                    CartanType::I2(inner.parse().map_err(|_| bad())?)
                } else {
                    let (head, digits) = s.split_at(1.min(s.len()));
                    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                        return Err(bad());
                    }
                    let n: usize = digits.parse().map_err(|_| bad())?;
                    match head {
                        "A" => CartanType::A(n),
                        "B" => CartanType::B(n),
                        "D" => CartanType::D(n),
                        _ => return Err(bad()),
                    }
                }
            }
        };
        t.new_checked()
    }
}

/// Labeled Dynkin diagram of a classical type, on vertices `1..=n`.
///
/// Edges are stored as `(a, b)` with `a < b`; multiplicities are not tracked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DynkinDiagram {
    pub ty: CartanType,
    pub edges: BTreeSet<(usize, usize)>,
}

impl DynkinDiagram {
    pub fn vertices(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.ty.rank()
    }

    /// `masks[v-1]` has bit `w-1` set for each neighbor `w` of `v`.
    pub fn neighbor_masks(&self) -> Vec<u64> {
        let mut masks = vec![0u64; self.ty.rank()];
        for &(a, b) in &self.edges {
            masks[a - 1] |= 1 << (b - 1);
            masks[b - 1] |= 1 << (a - 1);
        }
        masks
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().filter_map(move |&(a, b)| {
            if a == v {
                Some(b)
            } else if b == v {
                Some(a)
            } else {
                None
            }
        })
    }
}

/// The diagram in the fixed labeling: paths `1 - 2 - ... - n` for A and B
/// (the B double edge joins `n-1` and `n`), and for D a path on `1..=n-2`
/// with `n-2` joined to both `n-1` and `n`.
pub fn dynkin_diagram(t: CartanType) -> Result<DynkinDiagram> {
    let edges = match t {
        CartanType::A(n) | CartanType::B(n) => (1..n).map(|i| (i, i + 1)).collect(),
        CartanType::D(n) => {
            let mut e: BTreeSet<_> = (1..n.saturating_sub(2)).map(|i| (i, i + 1)).collect();
            if n >= 3 {
                e.insert((n - 2, n - 1));
                e.insert((n - 2, n));
            }
            e
        }
        _ => {
            return Err(Error::UnsupportedType(
                t,
                "no diagram for exceptional types",
            ))
        }
    };
    Ok(DynkinDiagram { ty: t, edges })
}

/// A product of irreducible types, kept sorted so equal decompositions
/// compare equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParabolicDecomposition {
    components: Vec<CartanType>,
}

impl ParabolicDecomposition {
    pub fn new(mut components: Vec<CartanType>) -> Self {
        components.sort_unstable();
        ParabolicDecomposition { components }
    }

    pub fn empty() -> Self {
        ParabolicDecomposition::default()
    }

    pub fn components(&self) -> &[CartanType] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|t| t.rank()).sum()
    }
}

impl fmt::Display for ParabolicDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return f.write_str("()");
        }
        let parts: Vec<String> = self.components.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" x "))
    }
}

/// Decomposes the parabolic subsystem indexed by `subset` into irreducible
/// components, one per connected component of the induced subdiagram.
///
/// A component is classified by its shape: in type B the component holding
/// vertex `n` is `B(size)` once it has at least two vertices; in type D the
/// component is `D(size)` only when it holds the whole fork `{n-2, n-1, n}`,
/// with the three-vertex fork normalized to `A(3)`. Everything else is a path
/// and therefore type A.
pub fn parabolic_decompose(t: CartanType, subset: &[usize]) -> Result<ParabolicDecomposition> {
    let diagram = dynkin_diagram(t)?;
    let n = t.rank();
    if n > 64 {
        return Err(Error::BudgetExceeded {
            what: "rank",
            requested: n,
            limit: 64,
        });
    }
    let mut mask = 0u64;
    for &v in subset {
        if v == 0 || v > n {
            return Err(Error::VertexOutOfRange { ty: t, vertex: v });
        }
        mask |= 1 << (v - 1);
    }
    Ok(decompose_mask(&diagram, mask))
}

/// Same as [`parabolic_decompose`] with the subset as a bitmask (bit `v-1`
/// for vertex `v`).
pub(crate) fn decompose_mask(diagram: &DynkinDiagram, mask: u64) -> ParabolicDecomposition {
    decompose_with(diagram.ty, &diagram.neighbor_masks(), mask)
}

pub(crate) fn decompose_with(
    t: CartanType,
    adjacency: &[u64],
    mask: u64,
) -> ParabolicDecomposition {
    let n = t.rank();
    let bit = |v: usize| 1u64 << (v - 1);
    let mut rest = mask;
    let mut components = Vec::new();
    while rest != 0 {
        let mut comp = rest & rest.wrapping_neg();
        loop {
            let mut grown = comp;
            let mut bits = comp;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                grown |= adjacency[v] & mask;
                bits &= bits - 1;
            }
            if grown == comp {
                break;
            }
            comp = grown;
        }
        rest &= !comp;
        let size = comp.count_ones() as usize;
        let ty = match t {
            CartanType::B(_) if size >= 2 && comp & bit(n) != 0 => CartanType::B(size),
            CartanType::D(_) if n >= 4 && size >= 4 => {
                let fork = bit(n - 2) | bit(n - 1) | bit(n);
                if comp & fork == fork {
                    CartanType::D(size)
                } else {
                    CartanType::A(size)
                }
            }
            _ => CartanType::A(size),
        };
        components.push(ty);
    }
    ParabolicDecomposition::new(components)
}

/// h-polynomial of the positive part of the cluster complex of an irreducible
/// classical type.
///
/// * `A_n`: `sum 1/(i+1) C(n,i) C(n-1,i) x^i`
/// * `B_n`: `sum C(n,i) C(n-1,i) x^i`
/// * `D_n`: `sum (C(n,i) C(n-2,i) + C(n-2,i-2) C(n-1,i)) x^i`
pub fn h_plus(t: CartanType) -> Result<IntPoly> {
    let coeffs: Vec<BigInt> = match t {
        CartanType::A(n) => {
            let n = n as i64;
            (0..=n)
                .map(|i| exact_div(binomial(n, i) * binomial(n - 1, i), i + 1))
                .collect()
        }
        CartanType::B(n) => {
            let n = n as i64;
            (0..=n)
                .map(|i| binomial(n, i) * binomial(n - 1, i))
                .collect()
        }
        CartanType::D(n) => {
            let n = n as i64;
            (0..=n)
                .map(|i| {
                    binomial(n, i) * binomial(n - 2, i)
                        + binomial(n - 2, i - 2) * binomial(n - 1, i)
                })
                .collect()
        }
        _ => {
            return Err(Error::UnsupportedType(
                t,
                "positive-part h-polynomials are only available for types A, B and D",
            ))
        }
    };
    Ok(IntPoly::from_coeffs(coeffs))
}

/// h-polynomial of a product: the product of the factors' h-polynomials,
/// with the empty product equal to 1.
pub fn h_plus_product(decomposition: &ParabolicDecomposition) -> Result<IntPoly> {
    decomposition
        .components()
        .iter()
        .map(|&t| h_plus(t))
        .collect::<Result<Vec<_>>>()
        .map(|hs| hs.into_iter().product())
}
