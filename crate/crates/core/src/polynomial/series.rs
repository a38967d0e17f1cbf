//! Power series in `t` with polynomial-in-`x` coefficients, truncated at a
//! fixed order.

use std::ops::{Add, Sub};

use num_bigint::BigInt;

use super::{narayana_poly, IntPoly};
use crate::error::{Error, Result};

/// `sum_{k <= order} coeffs[k] t^k`; terms above `order` are discarded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    order: usize,
    coeffs: Vec<IntPoly>,
}

impl TruncSeries {
    pub fn zero(order: usize) -> Self {
        TruncSeries {
            order,
            coeffs: vec![IntPoly::zero(); order + 1],
        }
    }

    /// Builds a series from leading coefficients; extra terms are dropped and
    /// missing ones are zero.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<IntPoly>) -> Self {
        coeffs.resize(order + 1, IntPoly::zero());
        TruncSeries { order, coeffs }
    }

    /// The monomial `c t^k`.
    pub fn monomial(order: usize, c: IntPoly, k: usize) -> Self {
        let mut s = TruncSeries::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn t(order: usize) -> Self {
        TruncSeries::monomial(order, IntPoly::one(), 1)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, k: usize) -> &IntPoly {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[IntPoly] {
        &self.coeffs
    }

    fn check_order(&self, other: &TruncSeries) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }

    /// Cauchy product, truncated.
    pub fn mul(&self, other: &TruncSeries) -> Result<TruncSeries> {
        self.check_order(other)?;
        let mut out = TruncSeries::zero(self.order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=self.order - i].iter().enumerate() {
                out.coeffs[i + j] += &(a * b);
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &TruncSeries) -> Result<TruncSeries> {
        self.check_order(other)?;
        Ok(TruncSeries {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &TruncSeries) -> Result<TruncSeries> {
        self.check_order(other)?;
        Ok(TruncSeries {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Multiplies every coefficient by a polynomial in `x`.
    pub fn scale(&self, c: &IntPoly) -> TruncSeries {
        TruncSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> TruncSeries {
        let mut out = TruncSeries::zero(self.order);
        for i in 0..=self.order.saturating_sub(k) {
            if i + k <= self.order {
                out.coeffs[i + k] = self.coeffs[i].clone();
            }
        }
        out
    }

    /// Formal derivative in `t`. The top slot of the result is zero, since the
    /// truncated input cannot determine it.
    pub fn dt(&self) -> TruncSeries {
        let mut out = TruncSeries::zero(self.order);
        for k in 1..=self.order {
            out.coeffs[k - 1] = self.coeffs[k].scale(&BigInt::from(k));
        }
        out
    }

    /// Equality of the coefficients of `t^0 .. t^upto`.
    pub fn agrees_through(&self, other: &TruncSeries, upto: usize) -> bool {
        (0..=upto.min(self.order).min(other.order)).all(|k| self.coeffs[k] == other.coeffs[k])
    }
}

impl<'a> Add<&'a TruncSeries> for &'a TruncSeries {
    type Output = TruncSeries;

    /// Panics on mismatched orders; use [`TruncSeries::add`] to get an error.
    fn add(self, rhs: &'a TruncSeries) -> TruncSeries {
        TruncSeries::add(self, rhs).expect("series orders differ")
    }
}

impl<'a> Sub<&'a TruncSeries> for &'a TruncSeries {
    type Output = TruncSeries;

    fn sub(self, rhs: &'a TruncSeries) -> TruncSeries {
        TruncSeries::sub(self, rhs).expect("series orders differ")
    }
}

pub fn series_mul(a: &TruncSeries, b: &TruncSeries) -> Result<TruncSeries> {
    a.mul(b)
}

pub fn series_dt(a: &TruncSeries) -> TruncSeries {
    a.dt()
}

/// `F(x, t) = sum_{n >= 1} C_n(x) t^n`, truncated at `order`.
pub fn narayana_series(order: usize) -> TruncSeries {
    let coeffs = std::iter::once(IntPoly::zero())
        .chain((1..=order).map(|n| narayana_poly(n).expect("n >= 1")))
        .collect();
    TruncSeries::from_coeffs(order, coeffs)
}

/// Checks `F = x t F^2 + (1 + x) t F + t` through `t^order`.
pub fn verify_catalan_functional_eq(order: usize) -> bool {
    let f = narayana_series(order);
    let f2 = f.mul(&f).expect("same order");
    let rhs = &(&f2.scale(&IntPoly::x()).shift(1) + &f.scale(&IntPoly::one_plus_x()).shift(1))
        + &TruncSeries::t(order);
    f == rhs
}

/// `S_n(x) = sum_{r=2}^{n-3} (n-r-2) x C_{r-1}(x) C_{n-r-1}(x)`, zero for `n < 5`.
pub fn s_poly(n: usize) -> IntPoly {
    if n < 5 {
        return IntPoly::zero();
    }
    (2..=n - 3)
        .map(|r| {
            let c = &narayana_poly(r - 1).expect("r >= 2")
                * &narayana_poly(n - r - 1).expect("r <= n-3");
            c.shift(1).scale(&BigInt::from(n - r - 2))
        })
        .sum()
}

/// Checks `2 S_n = (n-4) C_{n-1} - (n-4)(1+x) C_{n-2}` for `n >= 4`.
pub fn verify_s_identity(n: usize) -> Result<bool> {
    if n < 4 {
        return Err(Error::OutOfRange(format!(
            "S_n identity needs n >= 4, got {n}"
        )));
    }
    let k = BigInt::from(n - 4);
    let c1 = narayana_poly(n - 1)?;
    let c2 = narayana_poly(n - 2)?;
    let rhs = &c1.scale(&k) - &(&c2 * &IntPoly::one_plus_x()).scale(&k);
    Ok(s_poly(n).scale(&BigInt::from(2)) == rhs)
}

/// `sum_{n >= 4} S_n t^n` built term by term from [`s_poly`].
pub fn s_series(order: usize) -> TruncSeries {
    TruncSeries::from_coeffs(order, (0..=order).map(s_poly).collect())
}

/// Checks both closed forms of the `S_n` generating function through
/// `t^order`:
///
/// * `sum S_n t^n = x t^3 F F_t - x t^2 F^2`
/// * `2 sum S_n t^n = 2(1+x) t^2 F + 2 t^2 - 3 t F + (t^2 - t^3 - x t^3) F_t`
///
/// `F_t` is computed from a series one order longer so its top slot is exact.
pub fn verify_s_generating_function(order: usize) -> bool {
    let long = narayana_series(order + 1);
    let ft = TruncSeries::from_coeffs(order, long.dt().coeffs[..=order].to_vec());
    let f = narayana_series(order);
    let x = IntPoly::x();
    let s = s_series(order);

    let first = &f.mul(&ft).expect("same order").scale(&x).shift(3)
        - &f.mul(&f).expect("same order").scale(&x).shift(2);

    let two = IntPoly::constant(2);
    // t^2 - t^3 - x t^3
    let cubic = TruncSeries::from_coeffs(
        order,
        vec![
            IntPoly::zero(),
            IntPoly::zero(),
            IntPoly::one(),
            IntPoly::from_i64s(&[-1, -1]),
        ],
    );
    let second = &(&(&f.scale(&(&two * &IntPoly::one_plus_x())).shift(2)
        + &TruncSeries::monomial(order, two.clone(), 2))
        - &f.scale(&IntPoly::constant(3)).shift(1))
        + &ft.mul(&cubic).expect("same order");

    first == s && second == s.scale(&two)
}

/// `2 R_n(x) = 2(n-2) x C_{n-1} + n C_{n-1} + (n-2)(x-1) C_{n-2}`, the
/// doubled closed form of the type D positive-part h-polynomial. Doubling
/// keeps the half-integer coefficients integral.
pub fn double_r_poly(n: usize) -> Result<IntPoly> {
    if n < 4 {
        return Err(Error::OutOfRange(format!("R_n needs n >= 4, got {n}")));
    }
    let c1 = narayana_poly(n - 1)?;
    let c2 = narayana_poly(n - 2)?;
    let nb = BigInt::from(n);
    let m2 = BigInt::from(n - 2);
    let x_minus_1 = IntPoly::from_i64s(&[-1, 1]);
    Ok(
        &(&c1.shift(1).scale(&(BigInt::from(2) * &m2)) + &c1.scale(&nb))
            + &(&c2 * &x_minus_1).scale(&m2),
    )
}

/// The unsimplified form
/// `R_n = (n-2) x C_{n-1} + (n-3) x C_{n-2} + S_n - C_{n-2} + 2 C_{n-1}`.
pub fn r_poly_from_s(n: usize) -> Result<IntPoly> {
    if n < 4 {
        return Err(Error::OutOfRange(format!("R_n needs n >= 4, got {n}")));
    }
    let c1 = narayana_poly(n - 1)?;
    let c2 = narayana_poly(n - 2)?;
    Ok(
        &(&(&(&c1.shift(1).scale(&BigInt::from(n - 2))
            + &c2.shift(1).scale(&BigInt::from(n - 3)))
            + &s_poly(n))
            - &c2)
            + &c1.scale(&BigInt::from(2)),
    )
}
