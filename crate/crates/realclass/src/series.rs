//! Truncated formal power series with exact integer coefficients, and the
//! generating functions built from them.
//!
//! Coefficients are arbitrary-precision from the start: q = 9 already
//! overflows 64 bits around order 30. Division goes through the
//! Newton-iterated inverse of a unit series, so there is a single exact
//! code path for every quotient.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::big_pow;

/// Truncation orders above this are refused by the generating-function
/// builders.
pub const SERIES_ORDER_GUARD: usize = 200;

/// An integer power series truncated after `u^N`: exact arithmetic in
/// `Z[[u]] / (u^{N+1})`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntSeries {
    /// Coefficients `c_0 ..= c_N`.
    coeffs: Vec<BigInt>,
}

impl IntSeries {
    pub fn zero(order: usize) -> Self {
        IntSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = IntSeries::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// `c * u^exp` truncated at `order`.
    pub fn monomial(c: BigInt, exp: usize, order: usize) -> Self {
        let mut s = IntSeries::zero(order);
        if exp <= order {
            s.coeffs[exp] = c;
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least c_0");
        IntSeries { coeffs }
    }

    /// The truncation order `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &BigInt {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    fn check_orders(&self, rhs: &IntSeries) -> Result<()> {
        if self.order() != rhs.order() {
            return Err(Error::OrderMismatch(self.order(), rhs.order()));
        }
        Ok(())
    }

    pub fn add(&self, rhs: &IntSeries) -> Result<IntSeries> {
        self.check_orders(rhs)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(IntSeries { coeffs })
    }

    pub fn sub(&self, rhs: &IntSeries) -> Result<IntSeries> {
        self.check_orders(rhs)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(IntSeries { coeffs })
    }

    pub fn mul(&self, rhs: &IntSeries) -> Result<IntSeries> {
        self.check_orders(rhs)?;
        Ok(self.mul_truncated(rhs, self.order()))
    }

    fn mul_truncated(&self, rhs: &IntSeries, order: usize) -> IntSeries {
        let mut coeffs = vec![BigInt::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        IntSeries { coeffs }
    }

    /// Division by a series with constant term 1, via the Newton-iterated
    /// inverse of the divisor.
    pub fn div(&self, rhs: &IntSeries) -> Result<IntSeries> {
        self.check_orders(rhs)?;
        let inv = rhs.unit_inverse()?;
        self.mul(&inv)
    }

    /// Inverse of a series with constant term 1: Newton iteration
    /// `x <- x (2 - b x)` doubles the valid order each round and stays in
    /// exact integers.
    pub fn unit_inverse(&self) -> Result<IntSeries> {
        if !self.coeffs[0].is_one() {
            return Err(Error::NonUnitDivisor);
        }
        let target = self.order();
        let mut inv = IntSeries::one(0);
        let mut prec = 0usize;
        while prec < target {
            prec = (2 * prec + 1).min(target);
            let b = self.truncated(prec);
            let x = inv.truncated(prec);
            let two = IntSeries::monomial(BigInt::from(2), 0, prec);
            let correction = two.sub(&b.mul_truncated(&x, prec))?;
            inv = x.mul_truncated(&correction, prec);
        }
        Ok(inv.truncated(target))
    }

    /// The same series at a lower (or zero-padded higher) truncation order.
    pub fn truncated(&self, order: usize) -> IntSeries {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, BigInt::zero());
        IntSeries { coeffs }
    }

    pub fn pow(&self, e: usize) -> Result<IntSeries> {
        let mut acc = IntSeries::one(self.order());
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Exact halving of every coefficient; an odd coefficient means an
    /// internal bug in the caller.
    fn halved(&self) -> Result<IntSeries> {
        let two = BigInt::from(2);
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_even() {
                return Err(Error::Internal(format!(
                    "coefficient of u^{k} is odd before halving"
                )));
            }
            coeffs.push(c / &two);
        }
        Ok(IntSeries { coeffs })
    }
}

fn check_order_guard(order: usize) -> Result<()> {
    if order > SERIES_ORDER_GUARD {
        return Err(Error::Guard {
            what: "series truncation order",
            requested: order as u128,
            limit: SERIES_ORDER_GUARD as u128,
        });
    }
    Ok(())
}

/// `1 + u^step` truncated at `order`.
fn one_plus_power(step: usize, order: usize) -> IntSeries {
    let mut s = IntSeries::one(order);
    if step <= order {
        s.coeffs[step] = BigInt::one();
    }
    s
}

/// `1 - q u^step` truncated at `order`.
fn one_minus_q_power(q: u64, step: usize, order: usize) -> IntSeries {
    let mut s = IntSeries::one(order);
    if step <= order {
        s.coeffs[step] = -BigInt::from(q);
    }
    s
}

fn e_of(q: u64) -> usize {
    if q % 2 == 0 {
        1
    } else {
        2
    }
}

/// The product `prod_i (1+u^i)^e / (1 - q u^{2i})` truncated at `order`,
/// with `e = gcd(2, q-1)`. The coefficient of `u^n` is the number of real
/// conjugacy classes of both the general linear and the unitary group of
/// rank `n` over `F_q`.
pub fn gen_real_classes(q: u64, order: usize) -> Result<IntSeries> {
    check_order_guard(order)?;
    let e = e_of(q);
    let mut s = IntSeries::one(order);
    for i in 1..=order {
        s = s.mul(&one_plus_power(i, order).pow(e)?)?;
        s = s.div(&one_minus_q_power(q, 2 * i, order))?;
    }
    Ok(s)
}

/// The product `prod_i (1+u^{2i}) / (1 - q u^{2i})` truncated at `order`.
/// For odd `q` the coefficient of `u^n` is the sum, over partitions of `n`
/// with every multiplicity even, of the products of self-reciprocal counts.
pub fn gen_even_types(q: u64, order: usize) -> Result<IntSeries> {
    check_order_guard(order)?;
    let mut s = IntSeries::one(order);
    for i in 1..=order {
        if 2 * i > order {
            break;
        }
        s = s.mul(&one_plus_power(2 * i, order))?;
        s = s.div(&one_minus_q_power(q, 2 * i, order))?;
    }
    Ok(s)
}

/// The half-sum
/// `( prod_i (1+u^i)^e/(1-qu^{2i}) + prod_i (1+u^{ei})/(1-qu^{2i}) ) / 2`:
/// the coefficient of `u^n` is simultaneously the number of real classes of
/// the projective groups and the number of real classes of the full groups
/// that lie in the determinant-one subgroup.
pub fn gen_theorem(q: u64, order: usize) -> Result<IntSeries> {
    check_order_guard(order)?;
    let first = gen_real_classes(q, order)?;
    let e = e_of(q);
    let mut second = IntSeries::one(order);
    for i in 1..=order {
        second = second.mul(&one_plus_power(e * i, order))?;
        second = second.div(&one_minus_q_power(q, 2 * i, order))?;
    }
    first.add(&second)?.halved()
}

/// Left side of the odd-index factor identity: the series
/// `sum_k r_{q,2k} u^{(2i-1)2k}` truncated at `order` (odd `q`).
pub fn odd_factor_lhs(q: u64, i: usize, order: usize) -> IntSeries {
    let mut s = IntSeries::one(order);
    let base = 2 * i - 1;
    let mut k = 1usize;
    while base * 2 * k <= order {
        s.coeffs[base * 2 * k] = big_pow(q, k) + big_pow(q, k - 1);
        k += 1;
    }
    s
}

/// Right side of the odd-index factor identity:
/// `(1 + u^{4i-2}) / (1 - q u^{4i-2})`.
pub fn odd_factor_rhs(q: u64, i: usize, order: usize) -> Result<IntSeries> {
    one_plus_power(4 * i - 2, order).div(&one_minus_q_power(q, 4 * i - 2, order))
}

/// Left side of the alternating factor identity:
/// `1 + sum_k (q^k - q^{k-1}) u^{(2i-1)2k}` truncated at `order` (odd `q`).
pub fn alternating_factor_lhs(q: u64, i: usize, order: usize) -> IntSeries {
    let mut s = IntSeries::one(order);
    let base = 2 * i - 1;
    let mut k = 1usize;
    while base * 2 * k <= order {
        s.coeffs[base * 2 * k] = big_pow(q, k) - big_pow(q, k - 1);
        k += 1;
    }
    s
}

/// Right side of the alternating factor identity:
/// `(1 - u^{4i-2}) / (1 - q u^{4i-2})`.
pub fn alternating_factor_rhs(q: u64, i: usize, order: usize) -> Result<IntSeries> {
    let mut numerator = IntSeries::one(order);
    if 4 * i - 2 <= order {
        numerator.coeffs[4 * i - 2] = -BigInt::one();
    }
    numerator.div(&one_minus_q_power(q, 4 * i - 2, order))
}

/// Both sides of the product collapse
/// `prod_i (1+u^{2i})^2 (1-u^{4i-2}) = prod_i (1+u^{2i})`, built with
/// factors up to index `factors`; the two agree up to order `factors / 2`
/// with a margin against truncation effects.
pub fn square_factor_collapse_sides(
    factors: usize,
    order: usize,
) -> Result<(IntSeries, IntSeries)> {
    check_order_guard(order)?;
    let mut lhs = IntSeries::one(order);
    let mut rhs = IntSeries::one(order);
    for i in 1..=factors {
        lhs = lhs.mul(&one_plus_power(2 * i, order).pow(2)?)?;
        let mut alt = IntSeries::one(order);
        if 4 * i - 2 <= order {
            alt.coeffs[4 * i - 2] = -BigInt::one();
        }
        lhs = lhs.mul(&alt)?;
        rhs = rhs.mul(&one_plus_power(2 * i, order))?;
    }
    Ok((lhs, rhs))
}
