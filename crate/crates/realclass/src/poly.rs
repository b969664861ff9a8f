//! Monic polynomials with nonzero constant term and the operators that
//! drive the class parameterization: the reciprocal `f*`, the twisted
//! conjugate `f~` over a quadratic extension, the `zeta`-reciprocal `f^`,
//! and the scalar action `eta.f`. Closed-form counts of the fixed
//! polynomials live here too, next to the exhaustive enumerators that
//! check them.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::ff::{Field, FieldElement};
use crate::guard;

/// Default cap on enumeration candidates.
pub const POLY_CANDIDATE_GUARD: u128 = 10_000_000;

/// A monic polynomial `t^d + a_{d-1} t^{d-1} + ... + a_0` with `a_0 != 0`.
/// Degree 0 is the constant polynomial 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonicPoly {
    field: Field,
    /// Low coefficients `a_0 .. a_{d-1}`; the leading 1 is implicit.
    coeffs: Vec<FieldElement>,
}

impl MonicPoly {
    pub fn new(field: Field, coeffs: Vec<FieldElement>) -> Result<Self> {
        if coeffs.iter().any(|c| c.field() != &field) {
            return Err(Error::FieldMismatch);
        }
        if let Some(a0) = coeffs.first() {
            if a0.is_zero() {
                return Err(Error::ZeroConstantTerm);
            }
        }
        Ok(MonicPoly { field, coeffs })
    }

    /// The constant polynomial 1.
    pub fn one(field: &Field) -> Self {
        MonicPoly {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    /// The linear polynomial `t - root` (so `root` must be nonzero).
    pub fn linear_with_root(root: &FieldElement) -> Result<Self> {
        MonicPoly::new(root.field().clone(), vec![-root])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    /// Low coefficients `a_0 .. a_{d-1}`.
    pub fn low_coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Coefficient of `t^j` for `0 <= j <= d` (the leading one included).
    pub fn coeff(&self, j: usize) -> FieldElement {
        assert!(j <= self.degree(), "coefficient index out of range");
        if j == self.degree() {
            self.field.one()
        } else {
            self.coeffs[j].clone()
        }
    }

    /// `f(0)`; equals 1 for the constant polynomial.
    pub fn constant_term(&self) -> FieldElement {
        self.coeff(0)
    }

    pub fn evaluate(&self, x: &FieldElement) -> FieldElement {
        let mut value = self.field.one();
        for j in (0..self.degree()).rev() {
            value = &(&value * x) + &self.coeffs[j];
        }
        value
    }

    pub fn mul(&self, rhs: &MonicPoly) -> MonicPoly {
        assert!(self.field == rhs.field, "polynomials over different fields");
        let d = self.degree() + rhs.degree();
        let mut out = vec![self.field.zero(); d + 1];
        for i in 0..=self.degree() {
            let ai = self.coeff(i);
            if ai.is_zero() {
                continue;
            }
            for j in 0..=rhs.degree() {
                out[i + j] = &out[i + j] + &(&ai * &rhs.coeff(j));
            }
        }
        debug_assert!(out[d].is_one());
        out.pop();
        MonicPoly {
            field: self.field.clone(),
            coeffs: out,
        }
    }

    pub fn pow(&self, e: usize) -> MonicPoly {
        let mut acc = MonicPoly::one(&self.field);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// The reciprocal `f*(t) = f(0)^{-1} t^d f(t^{-1})`: roots are the
    /// inverses of the roots of `f`, with multiplicity.
    pub fn reciprocal(&self) -> MonicPoly {
        let d = self.degree();
        if d == 0 {
            return self.clone();
        }
        let a0_inv = self.coeffs[0].inv().expect("constant term is nonzero");
        let mut coeffs = Vec::with_capacity(d);
        coeffs.push(a0_inv.clone());
        for j in 1..d {
            coeffs.push(&self.coeffs[d - j] * &a0_inv);
        }
        MonicPoly {
            field: self.field.clone(),
            coeffs,
        }
    }

    /// The twisted conjugate `f~(t) = f(0)^{-q} t^d f^[q](t^{-1})` over a
    /// field of order `q^2`: roots map to their inverse `q`-th powers.
    pub fn tilde_conjugate(&self, q: u64) -> Result<MonicPoly> {
        if q.checked_mul(q) != Some(self.field.order()) {
            return Err(Error::NotQuadraticExtension {
                q,
                order: self.field.order(),
            });
        }
        let d = self.degree();
        if d == 0 {
            return Ok(self.clone());
        }
        let a0_inv = self.coeffs[0].inv().expect("constant term is nonzero");
        let mut coeffs = Vec::with_capacity(d);
        coeffs.push(a0_inv.pow(q));
        for j in 1..d {
            coeffs.push((&self.coeffs[d - j] * &a0_inv).pow(q));
        }
        Ok(MonicPoly {
            field: self.field.clone(),
            coeffs,
        })
    }

    /// The `zeta`-reciprocal `f^(t) = f(0)^{-1} t^d f(zeta t^{-1})`: roots
    /// map to `zeta` times their inverses.
    pub fn zeta_reciprocal(&self, zeta: &FieldElement) -> Result<MonicPoly> {
        if zeta.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        if zeta.is_zero() {
            return Err(Error::ZeroScalar);
        }
        let d = self.degree();
        if d == 0 {
            return Ok(self.clone());
        }
        let a0_inv = self.coeffs[0].inv().expect("constant term is nonzero");
        let mut coeffs = Vec::with_capacity(d);
        coeffs.push(&zeta.pow(d as u64) * &a0_inv);
        for j in 1..d {
            coeffs.push(&(&self.coeffs[d - j] * &zeta.pow((d - j) as u64)) * &a0_inv);
        }
        Ok(MonicPoly {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn is_self_reciprocal(&self) -> bool {
        *self == self.reciprocal()
    }

    pub fn is_self_conjugate(&self, q: u64) -> Result<bool> {
        Ok(*self == self.tilde_conjugate(q)?)
    }

    pub fn is_zeta_self_reciprocal(&self, zeta: &FieldElement) -> Result<bool> {
        Ok(*self == self.zeta_reciprocal(zeta)?)
    }

    /// Whether `f` is a polynomial in `t^b`: the degree and every exponent
    /// with a nonzero coefficient are multiples of `b`.
    pub fn in_t_power(&self, b: usize) -> bool {
        assert!(b >= 1);
        if self.degree() % b != 0 {
            return false;
        }
        (1..self.degree()).all(|j| j % b == 0 || self.coeffs[j].is_zero())
    }
}

impl fmt::Display for MonicPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        if d == 0 {
            return write!(f, "1");
        }
        write_term(f, &self.field.one(), d, true)?;
        for j in (0..d).rev() {
            if self.coeffs[j].is_zero() {
                continue;
            }
            write!(f, " + ")?;
            write_term(f, &self.coeffs[j], j, false)?;
        }
        Ok(())
    }
}

impl fmt::Debug for MonicPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} over {:?}", self.field)
    }
}

fn write_term(
    f: &mut fmt::Formatter<'_>,
    coeff: &FieldElement,
    exp: usize,
    leading: bool,
) -> fmt::Result {
    let text = coeff.to_string();
    let needs_parens = text.contains('+');
    if exp == 0 {
        return if needs_parens {
            write!(f, "({text})")
        } else {
            write!(f, "{text}")
        };
    }
    if !(leading || coeff.is_one()) {
        if needs_parens || text.contains('x') {
            write!(f, "({text})")?;
        } else {
            write!(f, "{text}")?;
        }
    }
    match exp {
        1 => write!(f, "t"),
        _ => write!(f, "t^{exp}"),
    }
}

/// The scalar action `eta.f(t) = eta^d f(t eta^{-1})`: roots of `f` map to
/// `eta` times themselves.
pub fn eta_act(eta: &FieldElement, f: &MonicPoly) -> Result<MonicPoly> {
    if eta.field() != f.field() {
        return Err(Error::FieldMismatch);
    }
    if eta.is_zero() {
        return Err(Error::ZeroScalar);
    }
    let d = f.degree();
    let coeffs = (0..d)
        .map(|j| &f.low_coeffs()[j] * &eta.pow((d - j) as u64))
        .collect();
    Ok(MonicPoly {
        field: f.field().clone(),
        coeffs,
    })
}

/// Classification flags of one polynomial against the three operators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyClassification {
    pub self_reciprocal: bool,
    /// Only defined over a quadratic extension of `F_q`.
    pub self_conjugate: Option<bool>,
    /// Only computed when a `zeta` is supplied.
    pub zeta_self_reciprocal: Option<bool>,
}

/// Flags for `f` relative to `q` and an optional `zeta`, by literal
/// comparison with the operator outputs.
pub fn classify(f: &MonicPoly, q: u64, zeta: Option<&FieldElement>) -> Result<PolyClassification> {
    let order = f.field().order();
    let self_conjugate = if q == order {
        None
    } else if q.checked_mul(q) == Some(order) {
        Some(f.is_self_conjugate(q)?)
    } else {
        return Err(Error::NotQuadraticExtension { q, order });
    };
    let zeta_self_reciprocal = match zeta {
        Some(z) => Some(f.is_zeta_self_reciprocal(z)?),
        None => None,
    };
    Ok(PolyClassification {
        self_reciprocal: f.is_self_reciprocal(),
        self_conjugate,
        zeta_self_reciprocal,
    })
}

pub(crate) fn big_pow(base: u64, exp: usize) -> BigInt {
    let mut acc = BigInt::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// The number `r_{q,d}` of self-reciprocal monic degree-`d` polynomials
/// with nonzero constant term over `F_q`, by the four-case formula;
/// `r_{q,0} = 1`.
pub fn count_self_reciprocal(q: u64, d: usize) -> BigInt {
    if d == 0 {
        return BigInt::one();
    }
    if q % 2 == 1 {
        if d % 2 == 1 {
            2 * big_pow(q, (d - 1) / 2)
        } else {
            (q + 1) * big_pow(q, d / 2 - 1)
        }
    } else if d % 2 == 1 {
        big_pow(q, (d - 1) / 2)
    } else {
        big_pow(q, d / 2)
    }
}

/// Compact single-expression form of [`count_self_reciprocal`]; the tests
/// require the two to agree.
pub fn count_self_reciprocal_compact(q: u64, d: usize) -> BigInt {
    if d == 0 {
        return BigInt::one();
    }
    let e = if q % 2 == 0 { 1 } else { 2 };
    big_pow(q, d / 2) + (e - 1) * big_pow(q, (d - 1) / 2)
}

/// The polynomial family a `zeta`-self-reciprocal count refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountAmbient {
    /// Polynomials over `F_q` with `zeta` a non-square unit.
    GeneralLinear,
    /// Self-conjugate polynomials over `F_{q^2}` with `zeta` a non-square
    /// norm-one scalar.
    Unitary,
}

/// The number of `zeta`-self-reciprocal polynomials of degree `d` for a
/// non-square `zeta`: `r_{q,d}` in even degree, zero in odd degree. The
/// count is the same for both ambients and for every non-square `zeta`.
pub fn count_zeta_self_reciprocal(q: u64, d: usize, _ambient: CountAmbient) -> Result<BigInt> {
    if q % 2 == 0 {
        return Err(Error::EvenCharacteristic(q));
    }
    if d % 2 == 1 {
        Ok(BigInt::from(0))
    } else {
        Ok(count_self_reciprocal(q, d))
    }
}

/// Predicate selecting which polynomials an enumeration keeps.
#[derive(Clone, Debug)]
pub enum PolyFilter {
    All,
    SelfReciprocal,
    /// Requires the field to be a quadratic extension.
    SelfConjugate,
    ZetaSelfReciprocal(FieldElement),
}

/// All monic degree-`d` polynomials with nonzero constant term over
/// `field` passing `filter`, in lexicographic coefficient order.
pub fn enumerate_polys(field: &Field, d: usize, filter: &PolyFilter) -> Result<Vec<MonicPoly>> {
    if d == 0 {
        return Ok(vec![MonicPoly::one(field)]);
    }
    let order = field.order() as u128;
    let candidates = (order - 1) * order.pow(d as u32 - 1);
    let limit = guard::raised(POLY_CANDIDATE_GUARD, "poly");
    if candidates > limit {
        return Err(Error::Guard {
            what: "enumeration candidates",
            requested: candidates,
            limit,
        });
    }
    let conj_q = match filter {
        PolyFilter::SelfConjugate => {
            let q = subfield_order_of_quadratic(field)?;
            Some(q)
        }
        _ => None,
    };
    if let PolyFilter::ZetaSelfReciprocal(zeta) = filter {
        if zeta.field() != field {
            return Err(Error::FieldMismatch);
        }
        if zeta.is_zero() {
            return Err(Error::ZeroScalar);
        }
    }

    let mut out = Vec::new();
    // mixed-radix counter over (a_0, ..., a_{d-1}); a_0 skips zero
    let mut digits = vec![0u64; d];
    digits[0] = 1;
    loop {
        let coeffs: Vec<FieldElement> = digits
            .iter()
            .map(|&i| field.element_from_index(i))
            .collect();
        let f = MonicPoly {
            field: field.clone(),
            coeffs,
        };
        let keep = match filter {
            PolyFilter::All => true,
            PolyFilter::SelfReciprocal => f.is_self_reciprocal(),
            PolyFilter::SelfConjugate => f.is_self_conjugate(conj_q.unwrap())?,
            PolyFilter::ZetaSelfReciprocal(zeta) => f.is_zeta_self_reciprocal(zeta)?,
        };
        if keep {
            out.push(f);
        }
        // increment, least significant digit last
        let mut pos = d;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < field.order() {
                break;
            }
            digits[pos] = if pos == 0 { return Ok(out) } else { 0 };
        }
    }
}

/// For a field of order `q^2`, returns `q`.
pub fn subfield_order_of_quadratic(field: &Field) -> Result<u64> {
    let k = field.k();
    if k % 2 != 0 {
        return Err(Error::NotQuadraticExtension {
            q: 0,
            order: field.order(),
        });
    }
    let mut q = 1u64;
    for _ in 0..k / 2 {
        q *= field.p();
    }
    Ok(q)
}
