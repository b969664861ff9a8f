//! Exact arithmetic in small finite fields `F_{p^k}`.
//!
//! A [`Field`] is constructed with the lexicographically smallest monic
//! irreducible modulus of the requested degree (coefficients compared from
//! the constant term upward), so element encodings are reproducible across
//! runs. Elements are fully reduced coefficient vectors; the element
//! ordering is lexicographic on those vectors, which fixes every "smallest"
//! choice made downstream (norm-one generator, canonical non-square).
//!
//! The subfield `F_q` of `F_{q^2}` is the fixed set of the `q`-power map;
//! it is never materialized as a second structure.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};

/// Fields larger than this are refused at construction; the census never
/// needs more.
pub const FIELD_ORDER_GUARD: u64 = 1 << 20;

#[derive(Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct FieldRepr {
    p: u64,
    k: u32,
    /// Low coefficients `m_0 .. m_{k-1}` of the monic modulus.
    modulus: Vec<u64>,
    order: u64,
}

/// The finite field `F_{p^k}`. Cheap to clone; equality is structural.
#[derive(Clone)]
pub struct Field(Arc<FieldRepr>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}

impl Eq for Field {}

impl PartialOrd for Field {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Field {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl Hash for Field {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.hash(state);
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.order())
    }
}

impl Field {
    /// Builds `F_{p^k}` with the lexicographically smallest monic
    /// irreducible modulus of degree `k` over `F_p`.
    pub fn new(p: u64, k: u32) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::ZeroDegree);
        }
        let order = checked_pow(p, k)
            .filter(|&o| o <= FIELD_ORDER_GUARD)
            .ok_or(Error::Guard {
                what: "field order",
                requested: saturating_pow_u128(p, k),
                limit: FIELD_ORDER_GUARD as u128,
            })?;
        let modulus = smallest_irreducible(p, k);
        Ok(Field(Arc::new(FieldRepr {
            p,
            k,
            modulus,
            order,
        })))
    }

    /// Builds the field of order `q` for a prime power `q`.
    pub fn of_order(q: u64) -> Result<Field> {
        let (p, m) = prime_power_parts(q)?;
        Field::new(p, m)
    }

    pub fn p(&self) -> u64 {
        self.0.p
    }

    pub fn k(&self) -> u32 {
        self.0.k
    }

    pub fn order(&self) -> u64 {
        self.0.order
    }

    /// Low coefficients of the monic modulus (degree `k` term omitted).
    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            field: self.clone(),
            coeffs: vec![0; self.0.k as usize],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_prime(1)
    }

    /// The element `c mod p` of the prime subfield.
    pub fn from_prime(&self, c: u64) -> FieldElement {
        let mut coeffs = vec![0; self.0.k as usize];
        coeffs[0] = c % self.0.p;
        FieldElement {
            field: self.clone(),
            coeffs,
        }
    }

    /// The element at position `idx` in the lexicographic element ordering.
    pub fn element_from_index(&self, idx: u64) -> FieldElement {
        assert!(idx < self.order(), "element index out of range");
        let k = self.0.k as usize;
        let mut coeffs = vec![0; k];
        let mut rest = idx;
        for (j, c) in coeffs.iter_mut().enumerate() {
            let weight = checked_pow(self.0.p, (k - 1 - j) as u32).unwrap();
            *c = rest / weight;
            rest %= weight;
        }
        FieldElement {
            field: self.clone(),
            coeffs,
        }
    }

    /// Position of `x` in the lexicographic element ordering.
    pub fn element_index(&self, x: &FieldElement) -> u64 {
        assert_eq!(self, &x.field, "element from a different field");
        let k = self.0.k as usize;
        let mut idx = 0;
        for j in 0..k {
            idx = idx * self.0.p + x.coeffs[j];
        }
        idx
    }

    /// All elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.order()).map(move |i| self.element_from_index(i))
    }

    fn reduce(&self, raw: Vec<u64>) -> FieldElement {
        let full_modulus: Vec<u64> = self.0.modulus.iter().copied().chain([1]).collect();
        let rem = pp_rem(&raw, &full_modulus, self.0.p);
        let mut coeffs = vec![0; self.0.k as usize];
        coeffs[..rem.len()].copy_from_slice(&rem);
        FieldElement {
            field: self.clone(),
            coeffs,
        }
    }
}

/// An element of a [`Field`]: a fully reduced coefficient vector.
#[derive(Clone)]
pub struct FieldElement {
    field: Field,
    coeffs: Vec<u64>,
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Reduced coefficients `c_0 .. c_{k-1}`.
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    pub fn pow(&self, mut e: u64) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; fails on zero.
    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(self.field.order() - 2))
    }

    /// Exact division; fails on a zero divisor.
    pub fn div(&self, rhs: &FieldElement) -> Result<FieldElement> {
        Ok(self * &rhs.inv()?)
    }

    /// The `q`-power map, defined when `q` is the order of a subfield.
    pub fn frobenius(&self, q: u64) -> Result<FieldElement> {
        let p = self.field.p();
        let (qp, qm) = prime_power_parts(q).map_err(|_| Error::NotSubfield {
            q,
            order: self.field.order(),
        })?;
        if qp != p || self.field.k() % qm != 0 {
            return Err(Error::NotSubfield {
                q,
                order: self.field.order(),
            });
        }
        Ok(self.pow(q))
    }

    /// Whether the element is fixed by the `q`-power map, i.e. lies in the
    /// subfield of order `q`.
    pub fn lies_in_subfield(&self, q: u64) -> Result<bool> {
        Ok(self.frobenius(q)? == *self)
    }

    /// Multiplicative order; fails on zero.
    pub fn multiplicative_order(&self) -> Result<u64> {
        if self.is_zero() {
            return Err(Error::NotInGroup);
        }
        let m = self.field.order() - 1;
        for d in divisors(m) {
            if self.pow(d).is_one() {
                return Ok(d);
            }
        }
        unreachable!("element order must divide the group order");
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coeffs == other.coeffs
    }
}

impl Eq for FieldElement {}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.field
            .cmp(&other.field)
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.order().hash(state);
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {:?}", self, self.field)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.k() == 1 {
            return write!(f, "{}", self.coeffs[0]);
        }
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for j in (0..self.coeffs.len()).rev() {
            let c = self.coeffs[j];
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match j {
                0 => write!(f, "{c}")?,
                1 => {
                    if c != 1 {
                        write!(f, "{c}")?;
                    }
                    write!(f, "x")?;
                }
                _ => {
                    if c != 1 {
                        write!(f, "{c}")?;
                    }
                    write!(f, "x^{j}")?;
                }
            }
        }
        Ok(())
    }
}

fn require_same_field(a: &FieldElement, b: &FieldElement) {
    assert!(a.field == b.field, "elements belong to different fields");
}

impl Add for &FieldElement {
    type Output = FieldElement;

    fn add(self, rhs: &FieldElement) -> FieldElement {
        require_same_field(self, rhs);
        let p = self.field.p();
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(&a, &b)| (a + b) % p)
            .collect();
        FieldElement {
            field: self.field.clone(),
            coeffs,
        }
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;

    fn sub(self, rhs: &FieldElement) -> FieldElement {
        require_same_field(self, rhs);
        let p = self.field.p();
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(&a, &b)| (a + p - b) % p)
            .collect();
        FieldElement {
            field: self.field.clone(),
            coeffs,
        }
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;

    fn neg(self) -> FieldElement {
        let p = self.field.p();
        let coeffs = self.coeffs.iter().map(|&a| (p - a) % p).collect();
        FieldElement {
            field: self.field.clone(),
            coeffs,
        }
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;

    fn mul(self, rhs: &FieldElement) -> FieldElement {
        require_same_field(self, rhs);
        let raw = pp_mul(&self.coeffs, &rhs.coeffs, self.field.p());
        self.field.reduce(raw)
    }
}

/// The norm-one subgroup `C_{q+1}` of `F_{q^2}^x`: the `q+1` solutions of
/// `x^{q+1} = 1`, with a fixed generator (the smallest element of order
/// exactly `q+1`).
#[derive(Clone, Debug)]
pub struct NormOneGroup {
    q: u64,
    ambient: Field,
    elements: Vec<FieldElement>,
    generator: FieldElement,
}

impl NormOneGroup {
    pub fn q(&self) -> u64 {
        self.q
    }

    /// The ambient field `F_{q^2}`.
    pub fn ambient(&self) -> &Field {
        &self.ambient
    }

    /// All `q+1` members in element order.
    pub fn elements(&self) -> &[FieldElement] {
        &self.elements
    }

    pub fn order(&self) -> u64 {
        self.q + 1
    }

    pub fn generator(&self) -> &FieldElement {
        &self.generator
    }

    pub fn contains(&self, x: &FieldElement) -> bool {
        x.field() == &self.ambient && !x.is_zero() && x.pow(self.q + 1).is_one()
    }

    /// The smallest non-square member; only exists for odd `q`.
    pub fn canonical_nonsquare(&self) -> Result<FieldElement> {
        if self.q % 2 == 0 {
            return Err(Error::EvenCharacteristic(self.q));
        }
        for x in &self.elements {
            if !is_square_in(x, Ambient::NormOne(self))? {
                return Ok(x.clone());
            }
        }
        Err(Error::NoNonSquare(self.q + 1))
    }
}

/// Constructs `C_{q+1}` inside a freshly built `F_{q^2}`.
pub fn norm_one_subgroup(q: u64) -> Result<NormOneGroup> {
    let (p, m) = prime_power_parts(q)?;
    let ambient = Field::new(p, 2 * m)?;
    let elements: Vec<FieldElement> = ambient
        .elements()
        .filter(|x| !x.is_zero() && x.pow(q + 1).is_one())
        .collect();
    if elements.len() as u64 != q + 1 {
        return Err(Error::Internal(format!(
            "norm-one subgroup of F_{} has {} elements, expected {}",
            q * q,
            elements.len(),
            q + 1
        )));
    }
    let generator = elements
        .iter()
        .find(|x| order_in_group(x, q + 1) == q + 1)
        .cloned()
        .ok_or_else(|| Error::Internal("norm-one subgroup has no generator".into()))?;
    Ok(NormOneGroup {
        q,
        ambient,
        elements,
        generator,
    })
}

fn order_in_group(x: &FieldElement, group_order: u64) -> u64 {
    for d in divisors(group_order) {
        if x.pow(d).is_one() {
            return d;
        }
    }
    unreachable!("element order must divide the group order");
}

/// The group an element is tested against in [`is_square_in`].
#[derive(Clone, Copy)]
pub enum Ambient<'a> {
    /// The multiplicative group of the element's own field.
    Units,
    /// A norm-one subgroup `C_{q+1}`.
    NormOne(&'a NormOneGroup),
}

/// Whether `x = y^2` for some `y` in the stated ambient group. Both groups
/// are cyclic, so this reduces to one exponentiation.
pub fn is_square_in(x: &FieldElement, ambient: Ambient<'_>) -> Result<bool> {
    let group_order = match ambient {
        Ambient::Units => {
            if x.is_zero() {
                return Err(Error::NotInGroup);
            }
            x.field().order() - 1
        }
        Ambient::NormOne(group) => {
            if !group.contains(x) {
                return Err(Error::NotInGroup);
            }
            group.order()
        }
    };
    if group_order % 2 == 1 {
        return Ok(true);
    }
    Ok(x.pow(group_order / 2).is_one())
}

/// The smallest non-square in `F_q^x`; only exists for odd `q`.
pub fn canonical_nonsquare_units(field: &Field) -> Result<FieldElement> {
    if field.order() % 2 == 0 {
        return Err(Error::EvenCharacteristic(field.order()));
    }
    for x in field.elements() {
        if !x.is_zero() && !is_square_in(&x, Ambient::Units)? {
            return Ok(x);
        }
    }
    Err(Error::NoNonSquare(field.order() - 1))
}

/// The largest power of 2 dividing `n`.
pub fn two_part(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::NonPositive);
    }
    Ok(1 << n.trailing_zeros())
}

/// Splits a prime power `q = p^m` into `(p, m)`.
pub fn prime_power_parts(q: u64) -> Result<(u64, u32)> {
    if q < 2 {
        return Err(Error::NotPrimePower(q));
    }
    let mut p = 0;
    for cand in 2..=q {
        if cand * cand > q {
            p = q; // q itself is prime
            break;
        }
        if q % cand == 0 {
            p = cand;
            break;
        }
    }
    let mut rest = q;
    let mut m = 0;
    while rest > 1 {
        if rest % p != 0 {
            return Err(Error::NotPrimePower(q));
        }
        rest /= p;
        m += 1;
    }
    Ok((p, m))
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

pub(crate) fn saturating_pow_u128(base: u64, exp: u32) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
    }
    acc
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

// --- dense polynomial helpers over F_p, used for modulus construction ---
// Vectors are low-to-high coefficients; an empty vector is zero.

fn pp_trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn pp_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + ai * bj) % p;
        }
    }
    pp_trim(out)
}

/// Remainder of `a` divided by monic `b`.
fn pp_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let b = pp_trim(b.to_vec());
    debug_assert_eq!(*b.last().unwrap(), 1, "divisor must be monic");
    let mut r = pp_trim(a.to_vec());
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let lead = *r.last().unwrap();
        for (j, &bj) in b.iter().enumerate() {
            r[shift + j] = (r[shift + j] + p - (lead * bj) % p) % p;
        }
        r = pp_trim(r);
    }
    r
}

/// All monic irreducibles over `F_p` of degree 1..=max_d, found by sieving
/// with trial division.
fn monic_irreducibles_fp(p: u64, max_d: u32) -> Vec<Vec<u64>> {
    let mut irreducibles: Vec<Vec<u64>> = Vec::new();
    for d in 1..=max_d {
        let count = checked_pow(p, d).expect("degree bounded by field guard");
        for idx in 0..count {
            let mut poly = index_digits(idx, p, d as usize);
            poly.push(1);
            // reducible iff some irreducible of degree <= d/2 divides it
            let reducible = irreducibles
                .iter()
                .filter(|g| (g.len() - 1) * 2 <= d as usize)
                .any(|g| pp_rem(&poly, g, p).is_empty());
            if !reducible {
                irreducibles.push(poly);
            }
        }
    }
    irreducibles
}

/// Digits of `idx` as coefficients `c_0..c_{len-1}` with `c_0` most
/// significant, matching the lexicographic element ordering.
fn index_digits(idx: u64, p: u64, len: usize) -> Vec<u64> {
    let mut coeffs = vec![0; len];
    let mut rest = idx;
    for (j, c) in coeffs.iter_mut().enumerate() {
        let weight = checked_pow(p, (len - 1 - j) as u32).unwrap();
        *c = rest / weight;
        rest %= weight;
    }
    coeffs
}

/// Low coefficients of the lexicographically smallest monic irreducible of
/// degree `k` over `F_p`.
fn smallest_irreducible(p: u64, k: u32) -> Vec<u64> {
    if k == 1 {
        return vec![0]; // the modulus x; elements are constants
    }
    let small = monic_irreducibles_fp(p, k / 2);
    let count = checked_pow(p, k).expect("order already checked");
    for idx in 0..count {
        let mut cand = index_digits(idx, p, k as usize);
        cand.push(1);
        if cand[0] == 0 {
            continue; // divisible by x
        }
        if small.iter().all(|g| !pp_rem(&cand, g, p).is_empty()) {
            cand.pop();
            return cand;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists");
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_construction() {
        let f3 = Field::new(3, 1).unwrap();
        assert_eq!(f3.order(), 3);
        assert_eq!(f3.p(), 3);
    }

    #[test]
    fn f4_multiplicative_group_has_order_three() {
        let f4 = Field::new(2, 2).unwrap();
        assert_eq!(f4.order(), 4);
        for x in f4.elements().filter(|x| !x.is_zero()) {
            assert!(x.pow(3).is_one());
        }
    }

    #[test]
    fn f9_is_fixed_by_ninth_power() {
        // x^9 = x for all 9 elements, so the field closes under its own
        // Frobenius square.
        let f9 = Field::new(3, 2).unwrap();
        for x in f9.elements() {
            assert_eq!(x.pow(9), x);
        }
        // the constants form the prime subfield
        for c in 0..3 {
            assert!(f9.from_prime(c).lies_in_subfield(3).unwrap());
        }
    }

    #[test]
    fn modulus_is_lex_smallest() {
        // Over F_3 the monic irreducible quadratics are x^2+1, x^2+x+2,
        // x^2+2x+2; comparing (a_0, a_1) the first wins.
        let f9 = Field::new(3, 2).unwrap();
        assert_eq!(f9.modulus(), &[1, 0]);
        // Over F_2 the cubics are x^3+x+1 (1,1,0) and x^3+x^2+1 (1,0,1).
        let f8 = Field::new(2, 3).unwrap();
        assert_eq!(f8.modulus(), &[1, 0, 1]);
    }

    #[test]
    fn prime_field_arith() {
        let f3 = Field::new(3, 1).unwrap();
        let two = f3.from_prime(2);
        assert_eq!(&two + &two, f3.one());
        assert_eq!(two.inv().unwrap(), two);
    }

    #[test]
    fn inverses_exhaustive_f9() {
        let f9 = Field::new(3, 2).unwrap();
        for x in f9.elements().filter(|x| !x.is_zero()) {
            assert!((&x * &x.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let f3 = Field::new(3, 1).unwrap();
        assert_eq!(f3.one().div(&f3.zero()), Err(Error::DivisionByZero));
        assert_eq!(f3.zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    #[should_panic(expected = "different fields")]
    fn mixed_field_arithmetic_panics() {
        let f3 = Field::new(3, 1).unwrap();
        let f5 = Field::new(5, 1).unwrap();
        let _ = &f3.one() + &f5.one();
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Field::new(4, 1), Err(Error::NotPrime(4)));
        assert_eq!(Field::new(3, 0), Err(Error::ZeroDegree));
        assert!(matches!(Field::new(2, 21), Err(Error::Guard { .. })));
    }

    #[test]
    fn frobenius_is_identity_on_prime_field() {
        let f3 = Field::new(3, 1).unwrap();
        for x in f3.elements() {
            assert_eq!(x.frobenius(3).unwrap(), x);
        }
    }

    #[test]
    fn frobenius_is_involution_on_quadratic_extension() {
        let f9 = Field::new(3, 2).unwrap();
        for x in f9.elements() {
            assert_eq!(x.frobenius(3).unwrap().frobenius(3).unwrap(), x);
        }
    }

    #[test]
    fn frobenius_fixed_points_are_the_subfield() {
        let f9 = Field::new(3, 2).unwrap();
        let fixed: Vec<FieldElement> = f9
            .elements()
            .filter(|x| x.frobenius(3).unwrap() == *x)
            .collect();
        assert_eq!(fixed.len(), 3);
        for c in 0..3 {
            assert!(fixed.contains(&f9.from_prime(c)));
        }
    }

    #[test]
    fn frobenius_rejects_non_subfield_orders() {
        let f9 = Field::new(3, 2).unwrap();
        let x = f9.element_from_index(1);
        assert!(matches!(x.frobenius(2), Err(Error::NotSubfield { .. })));
        assert!(matches!(x.frobenius(27), Err(Error::NotSubfield { .. })));
    }

    #[test]
    fn norm_one_subgroup_sizes() {
        assert_eq!(norm_one_subgroup(3).unwrap().elements().len(), 4);
        assert_eq!(norm_one_subgroup(2).unwrap().elements().len(), 3);
        assert_eq!(norm_one_subgroup(5).unwrap().elements().len(), 6);
    }

    #[test]
    fn norm_one_generator_has_full_order() {
        for q in [2u64, 3, 4, 5, 7] {
            let g = norm_one_subgroup(q).unwrap();
            let gen = g.generator();
            assert_eq!(order_in_group(gen, q + 1), q + 1);
            assert!(gen.pow(q + 1).is_one());
        }
    }

    #[test]
    fn norm_one_closed_under_product_and_inverse() {
        let g = norm_one_subgroup(3).unwrap();
        for a in g.elements() {
            assert!(g.contains(&a.inv().unwrap()));
            for b in g.elements() {
                assert!(g.contains(&(a * b)));
            }
        }
    }

    #[test]
    fn squares_of_c6_form_index_two_subgroup() {
        // q = 5: C_6 has 6 members whose squares form the subgroup of order 3.
        let g = norm_one_subgroup(5).unwrap();
        let squares: std::collections::BTreeSet<FieldElement> =
            g.elements().iter().map(|x| x * x).collect();
        assert_eq!(squares.len(), 3);
    }

    #[test]
    fn square_detection_matches_exhaustive_squaring() {
        let g = norm_one_subgroup(3).unwrap();
        let squares: Vec<FieldElement> = g.elements().iter().map(|x| x * x).collect();
        for x in g.elements() {
            let expected = squares.contains(x);
            assert_eq!(is_square_in(x, Ambient::NormOne(&g)).unwrap(), expected);
            // order 4 members are non-squares, order <= 2 members are squares
            let ord = order_in_group(x, 4);
            assert_eq!(expected, ord <= 2);
        }
    }

    #[test]
    fn unit_squares() {
        let f3 = Field::new(3, 1).unwrap();
        assert!(is_square_in(&f3.one(), Ambient::Units).unwrap());
        assert!(!is_square_in(&f3.from_prime(2), Ambient::Units).unwrap());
        assert_eq!(
            is_square_in(&f3.zero(), Ambient::Units),
            Err(Error::NotInGroup)
        );
    }

    #[test]
    fn square_membership_requires_membership() {
        let g = norm_one_subgroup(3).unwrap();
        // an element of F_9 outside C_4
        let outside = g
            .ambient()
            .elements()
            .find(|x| !x.is_zero() && !g.contains(x))
            .unwrap();
        assert_eq!(
            is_square_in(&outside, Ambient::NormOne(&g)),
            Err(Error::NotInGroup)
        );
    }

    #[test]
    fn nonsquare_counts_are_half_for_odd_q() {
        for q in [3u64, 5, 7, 9] {
            let f = Field::of_order(q).unwrap();
            let nonsquares = f
                .elements()
                .filter(|x| !x.is_zero() && !is_square_in(x, Ambient::Units).unwrap())
                .count() as u64;
            assert_eq!(nonsquares, (q - 1) / 2);
        }
        for q in [2u64, 4, 8] {
            let f = Field::of_order(q).unwrap();
            assert!(f.elements().filter(|x| !x.is_zero()).all(|x| is_square_in(
                &x,
                Ambient::Units
            )
            .unwrap()));
            assert!(matches!(
                canonical_nonsquare_units(&f),
                Err(Error::EvenCharacteristic(_))
            ));
        }
    }

    #[test]
    fn canonical_nonsquare_is_smallest() {
        let f3 = Field::new(3, 1).unwrap();
        assert_eq!(canonical_nonsquare_units(&f3).unwrap(), f3.from_prime(2));
        let c4 = norm_one_subgroup(3).unwrap();
        let zeta = c4.canonical_nonsquare().unwrap();
        // every smaller member must be a square
        for x in c4.elements().iter().filter(|x| **x < zeta) {
            assert!(is_square_in(x, Ambient::NormOne(&c4)).unwrap());
        }
        assert!(!is_square_in(&zeta, Ambient::NormOne(&c4)).unwrap());
    }

    #[test]
    fn two_part_values() {
        assert_eq!(two_part(12).unwrap(), 4);
        assert_eq!(two_part(7).unwrap(), 1);
        assert_eq!(two_part(4).unwrap(), 4); // q + 1 for q = 3
        assert_eq!(two_part(0), Err(Error::NonPositive));
    }

    fn prime_powers_up_to(limit: u64) -> Vec<u64> {
        (2..=limit)
            .filter(|&q| prime_power_parts(q).is_ok())
            .collect()
    }

    #[test]
    fn distributivity_every_field_up_to_512() {
        // exhaustive triples for small orders, strided sampling above
        for q in prime_powers_up_to(512) {
            let f = Field::of_order(q).unwrap();
            if q <= 49 {
                for a in f.elements() {
                    for b in f.elements() {
                        for c in f.elements() {
                            assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c), "q={q}");
                        }
                    }
                }
            } else {
                let stride = 17;
                let pick = |i: u64| f.element_from_index((i * stride + 1) % q);
                for i in 0..25 {
                    for j in 0..25 {
                        let (a, b, c) = (pick(i), pick(j), pick(i + j + 3));
                        assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c), "q={q}");
                    }
                }
            }
        }
    }

    #[test]
    fn distributivity_exhaustive_f81() {
        let f = Field::of_order(81).unwrap();
        for a in f.elements() {
            for b in f.elements() {
                for c in f.elements() {
                    assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
                }
            }
        }
    }

    #[test]
    fn unit_group_exponent() {
        // exhaustive for every prime power up to 81
        for q in prime_powers_up_to(81) {
            let f = Field::of_order(q).unwrap();
            for x in f.elements().filter(|x| !x.is_zero()) {
                assert!(x.pow(q - 1).is_one(), "q={q}");
            }
        }
    }

    #[test]
    fn element_index_round_trip() {
        let f = Field::new(3, 2).unwrap();
        for i in 0..f.order() {
            let x = f.element_from_index(i);
            assert_eq!(f.element_index(&x), i);
        }
    }

    #[test]
    fn prime_power_parsing() {
        assert_eq!(prime_power_parts(9).unwrap(), (3, 2));
        assert_eq!(prime_power_parts(8).unwrap(), (2, 3));
        assert_eq!(prime_power_parts(7).unwrap(), (7, 1));
        assert!(prime_power_parts(12).is_err());
        assert!(prime_power_parts(1).is_err());
    }
}
