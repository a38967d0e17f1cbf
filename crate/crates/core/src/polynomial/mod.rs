//! Exact univariate integer polynomials and the local gamma basis change.
//!
//! Everything here is exact: coefficients are [`BigInt`] and no operation ever
//! rounds. [`IntPoly`] is kept in canonical form (no trailing zero
//! coefficients), so structural equality is polynomial equality.

pub mod series;

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub use series::{verify_catalan_functional_eq, TruncSeries};

/// Polynomial in `x` with arbitrary-precision integer coefficients.
///
/// `coeffs[i]` is the coefficient of `x^i`. The zero polynomial stores no
/// coefficients and has degree `-1`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        IntPoly::monomial(BigInt::one(), 1)
    }

    /// `1 + x`.
    pub fn one_plus_x() -> Self {
        IntPoly::from_i64s(&[1, 1])
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        IntPoly::from_coeffs(vec![c.into()])
    }

    pub fn monomial(c: impl Into<BigInt>, power: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); power + 1];
        coeffs[power] = c.into();
        IntPoly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i`; zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Degree, with `-1` for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficients padded with zeros to exactly `len` entries.
    ///
    /// Panics if the polynomial has more than `len` coefficients.
    pub fn padded(&self, len: usize) -> Vec<BigInt> {
        assert!(
            self.coeffs.len() <= len,
            "degree {} does not fit {len} slots",
            self.degree()
        );
        let mut out = self.coeffs.clone();
        out.resize(len, BigInt::zero());
        out
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn pow(&self, mut e: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, at: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * at + c)
    }

    /// Sum of the coefficients, i.e. the value at `x = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Whether `coeff(i) == coeff(center - i)` for all `0 <= i <= center`.
    pub fn is_symmetric(&self, center: usize) -> Result<bool> {
        if self.degree() > center as isize {
            return Err(Error::DegreeAboveCenter {
                degree: self.degree(),
                center,
            });
        }
        Ok((0..=center / 2).all(|i| self.coeff(i) == self.coeff(center - i)))
    }

    /// Coefficients as `i64`, if they all fit.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(ToPrimitive::to_i64).collect()
    }
}

impl fmt::Display for IntPoly {
    /// Renders as `4x + 14x^2 + 4x^3`; the zero polynomial renders as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            if i == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl<'a> Add<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &'a IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (slot, c) in coeffs.iter_mut().zip(&short.coeffs) {
            *slot += c;
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Add for IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: IntPoly) -> IntPoly {
        &self + &rhs
    }
}

impl AddAssign<&IntPoly> for IntPoly {
    fn add_assign(&mut self, rhs: &IntPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (slot, c) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *slot += c;
        }
        self.trim();
    }
}

impl SubAssign<&IntPoly> for IntPoly {
    fn sub_assign(&mut self, rhs: &IntPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (slot, c) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *slot -= c;
        }
        self.trim();
    }
}

impl<'a> Sub<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &'a IntPoly) -> IntPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for IntPoly {
    type Output = IntPoly;

    fn sub(mut self, rhs: IntPoly) -> IntPoly {
        self -= &rhs;
        self
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<'a> Mul<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &'a IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Mul for IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: IntPoly) -> IntPoly {
        &self * &rhs
    }
}

impl std::iter::Product for IntPoly {
    fn product<I: Iterator<Item = IntPoly>>(iter: I) -> IntPoly {
        iter.fold(IntPoly::one(), |acc, p| &acc * &p)
    }
}

impl std::iter::Sum for IntPoly {
    fn sum<I: Iterator<Item = IntPoly>>(iter: I) -> IntPoly {
        iter.fold(IntPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

pub fn poly_add(a: &IntPoly, b: &IntPoly) -> IntPoly {
    a + b
}

pub fn poly_mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
    a * b
}

pub fn poly_scale(a: &IntPoly, c: &BigInt) -> IntPoly {
    a.scale(c)
}

/// Coefficients of a symmetric polynomial in the basis `x^i (1+x)^(n-2i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GammaVector {
    xi: Vec<BigInt>,
    n: usize,
}

impl GammaVector {
    /// Builds a vector with center `n`. Missing trailing entries are zero.
    pub fn new(mut xi: Vec<BigInt>, n: usize) -> Result<Self> {
        let len = n / 2 + 1;
        if xi.len() > len {
            if xi[len..].iter().any(|c| !c.is_zero()) {
                return Err(Error::Invalid(format!(
                    "gamma vector for center {n} has at most {len} entries, got {}",
                    xi.len()
                )));
            }
            xi.truncate(len);
        }
        xi.resize(len, BigInt::zero());
        Ok(GammaVector { xi, n })
    }

    pub fn from_i64s(xi: &[i64], n: usize) -> Result<Self> {
        GammaVector::new(xi.iter().map(|&c| BigInt::from(c)).collect(), n)
    }

    pub fn zeros(n: usize) -> Self {
        GammaVector {
            xi: vec![BigInt::zero(); n / 2 + 1],
            n,
        }
    }

    pub fn xi(&self) -> &[BigInt] {
        &self.xi
    }

    pub fn center(&self) -> usize {
        self.n
    }

    /// The local gamma polynomial `sum xi_i x^i`.
    pub fn as_poly(&self) -> IntPoly {
        IntPoly::from_coeffs(self.xi.clone())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.xi.iter().all(|c| !c.is_negative())
    }

    /// Gamma vector of a join: gamma polynomials multiply and centers add.
    pub fn join(&self, other: &GammaVector) -> GammaVector {
        let n = self.n + other.n;
        let product = &self.as_poly() * &other.as_poly();
        GammaVector {
            xi: product.padded(n / 2 + 1),
            n,
        }
    }
}

/// Expands `p = sum xi_i x^i (1+x)^(n-2i)` by peeling off the lowest term.
pub fn gamma_decompose(p: &IntPoly, n: usize) -> Result<GammaVector> {
    if !p.is_symmetric(n)? {
        return Err(Error::NotSymmetric { center: n });
    }
    let mut rest = p.clone();
    let mut xi = Vec::with_capacity(n / 2 + 1);
    for i in 0..=n / 2 {
        let c = rest.coeff(i);
        if !c.is_zero() {
            let basis = gamma_basis(i, n);
            rest -= &basis.scale(&c);
        }
        xi.push(c);
    }
    if !rest.is_zero() {
        return Err(Error::GammaRemainder {
            remainder: rest.to_string(),
        });
    }
    Ok(GammaVector { xi, n })
}

/// `sum xi_i x^i (1+x)^(n-2i)`.
pub fn gamma_compose(xi: &GammaVector) -> IntPoly {
    xi.xi
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| gamma_basis(i, xi.n).scale(c))
        .sum()
}

fn gamma_basis(i: usize, n: usize) -> IntPoly {
    IntPoly::one_plus_x().pow((n - 2 * i) as u32).shift(i)
}

/// Binomial coefficient with the combinatorial convention: zero whenever
/// `k < 0`, `k > n`, or `n < 0`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc *= n - j;
        acc /= j + 1;
    }
    acc
}

/// Divides exactly, panicking if the division leaves a remainder.
pub(crate) fn exact_div(num: BigInt, den: impl Into<BigInt>) -> BigInt {
    let den = den.into();
    let (q, r) = num.div_rem(&den);
    assert!(r.is_zero(), "inexact division by {den}");
    q
}

/// Narayana polynomial `C_n(x) = sum_i 1/(i+1) C(n,i) C(n-1,i) x^i`.
pub fn narayana_poly(n: usize) -> Result<IntPoly> {
    if n < 1 {
        return Err(Error::OutOfRange(format!(
            "narayana_poly needs n >= 1, got {n}"
        )));
    }
    let n = n as i64;
    let coeffs = (0..n)
        .map(|i| exact_div(binomial(n, i) * binomial(n - 1, i), i + 1))
        .collect();
    Ok(IntPoly::from_coeffs(coeffs))
}

/// The `n`-th Catalan number `C(2n, n) / (n + 1)`.
pub fn catalan(n: usize) -> BigInt {
    exact_div(binomial(2 * n as i64, n as i64), n as i64 + 1)
}
