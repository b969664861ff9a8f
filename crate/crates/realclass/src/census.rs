//! Brute-force census of small classical matrix groups.
//!
//! Enumerates the general linear and unitary groups at desk scale, splits
//! them into conjugacy classes by conjugating representatives with every
//! group element, and recomputes realness, determinant membership,
//! quotient realness, and each class's polynomial-sequence type directly
//! from matrices. Nothing here consults the closed-form counting layer, so
//! the census serves as an independent oracle for it.
//!
//! Matrices are stored as vectors of field-element indices and all hot
//! arithmetic goes through per-field lookup tables. Unitary groups are
//! enumerated by filtering the ambient matrix space on the fixed-point
//! condition of the twisted Frobenius when that space is small enough, and
//! by generator closure (every produced element re-verified) otherwise.

use std::collections::HashMap;

use crate::count::ClassType;
use crate::error::{Error, Result};
use crate::ff::{norm_one_subgroup, prime_power_parts, saturating_pow_u128, Field};
use crate::guard;
use crate::poly::MonicPoly;

/// Default cap on group order.
pub const CENSUS_ELEMENT_GUARD: u128 = 2_000_000;
/// Candidate scans may exceed the element guard by this factor.
const SCAN_FACTOR: u128 = 16;
/// Largest field order for which arithmetic tables are built.
const FIELD_TABLE_CAP: u64 = 2048;

/// Which family of classical groups to enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupKind {
    GeneralLinear,
    Unitary,
}

/// A small classical group: GL(n, q) or U(n, q) (the latter with matrix
/// entries in `F_{q^2}`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub kind: GroupKind,
    pub n: usize,
    pub q: u64,
}

impl std::fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self.kind {
            GroupKind::GeneralLinear => "GL",
            GroupKind::Unitary => "U",
        };
        write!(f, "{}({},{})", name, self.n, self.q)
    }
}

impl GroupSpec {
    pub fn gl(n: usize, q: u64) -> Self {
        GroupSpec {
            kind: GroupKind::GeneralLinear,
            n,
            q,
        }
    }

    pub fn unitary(n: usize, q: u64) -> Self {
        GroupSpec {
            kind: GroupKind::Unitary,
            n,
            q,
        }
    }

    /// The group order from the product formulas.
    pub fn order(&self) -> Result<u128> {
        let q = self.q as u128;
        let n = self.n as u32;
        let overflow = || Error::Guard {
            what: "census group order",
            requested: u128::MAX,
            limit: guard::raised(CENSUS_ELEMENT_GUARD, "census"),
        };
        match self.kind {
            GroupKind::GeneralLinear => {
                // prod_{i=0}^{n-1} (q^n - q^i)
                let qn = q.checked_pow(n).ok_or_else(overflow)?;
                let mut acc: u128 = 1;
                let mut qi: u128 = 1;
                for _ in 0..self.n {
                    acc = acc.checked_mul(qn - qi).ok_or_else(overflow)?;
                    qi = qi.checked_mul(q).ok_or_else(overflow)?;
                }
                Ok(acc)
            }
            GroupKind::Unitary => {
                // q^{n(n-1)/2} prod_{i=1}^{n} (q^i - (-1)^i)
                let mut acc = q
                    .checked_pow((self.n * (self.n - 1) / 2) as u32)
                    .ok_or_else(overflow)?;
                let mut qi: u128 = 1;
                for i in 1..=self.n {
                    qi = qi.checked_mul(q).ok_or_else(overflow)?;
                    let factor = if i % 2 == 0 { qi - 1 } else { qi + 1 };
                    acc = acc.checked_mul(factor).ok_or_else(overflow)?;
                }
                Ok(acc)
            }
        }
    }

    /// Order of the field the matrices live over: `q` or `q^2`.
    pub fn matrix_field_order(&self) -> u64 {
        match self.kind {
            GroupKind::GeneralLinear => self.q,
            GroupKind::Unitary => self.q * self.q,
        }
    }
}

/// Lookup tables for one small field, indexed by element position in the
/// lexicographic element ordering.
pub(crate) struct FieldTable {
    order: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
    /// `x -> x^q` for the twisted transpose; identity in the linear case.
    frob: Vec<u32>,
    one: u32,
}

impl FieldTable {
    fn build(field: &Field, frob_q: u64) -> Result<FieldTable> {
        let order = field.order();
        if order > FIELD_TABLE_CAP {
            return Err(Error::Guard {
                what: "census field order",
                requested: order as u128,
                limit: FIELD_TABLE_CAP as u128,
            });
        }
        let order = order as usize;
        let elements: Vec<_> = field.elements().collect();
        let idx = |x: &crate::ff::FieldElement| field.element_index(x) as u32;
        let mut add = vec![0u32; order * order];
        let mut mul = vec![0u32; order * order];
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                add[i * order + j] = idx(&(a + b));
                mul[i * order + j] = idx(&(a * b));
            }
        }
        let neg = elements.iter().map(|a| idx(&(-a))).collect();
        let inv = elements
            .iter()
            .map(|a| {
                if a.is_zero() {
                    0
                } else {
                    idx(&a.inv().unwrap())
                }
            })
            .collect();
        let frob = elements
            .iter()
            .map(|a| Ok(idx(&a.frobenius(frob_q)?)))
            .collect::<Result<_>>()?;
        Ok(FieldTable {
            order,
            add,
            mul,
            neg,
            inv,
            frob,
            one: idx(&field.one()),
        })
    }

    #[inline]
    fn add(&self, a: u32, b: u32) -> u32 {
        self.add[a as usize * self.order + b as usize]
    }

    #[inline]
    fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.order + b as usize]
    }

    #[inline]
    fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg[b as usize])
    }

    #[inline]
    fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    #[inline]
    fn frob(&self, a: u32) -> u32 {
        self.frob[a as usize]
    }
}

/// A square matrix of field-element indices, row-major. The entry vector
/// doubles as the canonical hash/ordering key.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Mat {
    n: usize,
    e: Vec<u32>,
}

impl Mat {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Row-major element indices; this is the canonical key.
    pub fn entries(&self) -> &[u32] {
        &self.e
    }

    fn zero(n: usize) -> Mat {
        Mat {
            n,
            e: vec![0; n * n],
        }
    }

    fn identity(n: usize, t: &FieldTable) -> Mat {
        let mut m = Mat::zero(n);
        for i in 0..n {
            m.e[i * n + i] = t.one;
        }
        m
    }

    #[inline]
    fn at(&self, i: usize, j: usize) -> u32 {
        self.e[i * self.n + j]
    }
}

fn mat_mul(t: &FieldTable, a: &Mat, b: &Mat) -> Mat {
    let n = a.n;
    let mut out = Mat::zero(n);
    for i in 0..n {
        for k in 0..n {
            let aik = a.at(i, k);
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                let idx = i * n + j;
                out.e[idx] = t.add(out.e[idx], t.mul(aik, b.at(k, j)));
            }
        }
    }
    out
}

fn mat_scalar_mul(t: &FieldTable, s: u32, a: &Mat) -> Mat {
    Mat {
        n: a.n,
        e: a.e.iter().map(|&x| t.mul(s, x)).collect(),
    }
}

/// Gauss-Jordan inverse; `None` when singular.
fn mat_inverse(t: &FieldTable, a: &Mat) -> Option<Mat> {
    let n = a.n;
    let mut left = a.e.clone();
    let mut right = Mat::identity(n, t).e;
    for col in 0..n {
        let pivot_row = (col..n).find(|&r| left[r * n + col] != 0)?;
        if pivot_row != col {
            for j in 0..n {
                left.swap(pivot_row * n + j, col * n + j);
                right.swap(pivot_row * n + j, col * n + j);
            }
        }
        let pivot_inv = t.inv(left[col * n + col]);
        for j in 0..n {
            left[col * n + j] = t.mul(pivot_inv, left[col * n + j]);
            right[col * n + j] = t.mul(pivot_inv, right[col * n + j]);
        }
        for r in 0..n {
            if r == col {
                continue;
            }
            let factor = left[r * n + col];
            if factor == 0 {
                continue;
            }
            for j in 0..n {
                left[r * n + j] = t.sub(left[r * n + j], t.mul(factor, left[col * n + j]));
                right[r * n + j] = t.sub(right[r * n + j], t.mul(factor, right[col * n + j]));
            }
        }
    }
    Some(Mat { n, e: right })
}

fn mat_rank(t: &FieldTable, a: &Mat) -> usize {
    let n = a.n;
    let mut m = a.e.clone();
    let mut rank = 0;
    for col in 0..n {
        let pivot_row = match (rank..n).find(|&r| m[r * n + col] != 0) {
            Some(r) => r,
            None => continue,
        };
        if pivot_row != rank {
            for j in 0..n {
                m.swap(pivot_row * n + j, rank * n + j);
            }
        }
        let pivot_inv = t.inv(m[rank * n + col]);
        for j in 0..n {
            m[rank * n + j] = t.mul(pivot_inv, m[rank * n + j]);
        }
        for r in 0..n {
            if r == rank {
                continue;
            }
            let factor = m[r * n + col];
            if factor == 0 {
                continue;
            }
            for j in 0..n {
                m[r * n + j] = t.sub(m[r * n + j], t.mul(factor, m[rank * n + j]));
            }
        }
        rank += 1;
    }
    rank
}

fn mat_det(t: &FieldTable, a: &Mat) -> u32 {
    let n = a.n;
    let mut m = a.e.clone();
    let mut det = t.one;
    for col in 0..n {
        let pivot_row = match (col..n).find(|&r| m[r * n + col] != 0) {
            Some(r) => r,
            None => return 0,
        };
        if pivot_row != col {
            for j in 0..n {
                m.swap(pivot_row * n + j, col * n + j);
            }
            det = t.mul(det, t.neg[t.one as usize]);
        }
        let pivot = m[col * n + col];
        det = t.mul(det, pivot);
        let pivot_inv = t.inv(pivot);
        for r in col + 1..n {
            let factor = t.mul(m[r * n + col], pivot_inv);
            if factor == 0 {
                continue;
            }
            for j in col..n {
                m[r * n + j] = t.sub(m[r * n + j], t.mul(factor, m[col * n + j]));
            }
        }
    }
    det
}

/// Fixed-point condition of the twisted Frobenius: transpose-conjugate
/// times the matrix is the identity.
fn mat_is_unitary(t: &FieldTable, a: &Mat) -> bool {
    let n = a.n;
    for i in 0..n {
        for j in 0..n {
            let mut acc = 0u32;
            for k in 0..n {
                acc = t.add(acc, t.mul(t.frob(a.at(k, i)), a.at(k, j)));
            }
            let expected = if i == j { t.one } else { 0 };
            if acc != expected {
                return false;
            }
        }
    }
    true
}

/// An enumerated group: every element, its index, and its inverse.
pub struct CensusGroup {
    spec: GroupSpec,
    field: Field,
    table: FieldTable,
    elements: Vec<Mat>,
    index: HashMap<Vec<u32>, u32>,
    inverses: Vec<u32>,
}

impl CensusGroup {
    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    /// The field the matrix entries live in (`F_q` or `F_{q^2}`).
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements in canonical (entry-vector) order.
    pub fn elements(&self) -> &[Mat] {
        &self.elements
    }

    pub fn element(&self, idx: u32) -> &Mat {
        &self.elements[idx as usize]
    }

    pub fn index_of(&self, m: &Mat) -> Option<u32> {
        self.index.get(&m.e).copied()
    }

    pub fn inverse_index(&self, idx: u32) -> u32 {
        self.inverses[idx as usize]
    }
}

struct MatrixScan {
    n: usize,
    order: u64,
    digits: Vec<u64>,
    done: bool,
}

impl MatrixScan {
    fn new(n: usize, order: u64) -> Self {
        MatrixScan {
            n,
            order,
            digits: vec![0; n * n],
            done: false,
        }
    }
}

impl Iterator for MatrixScan {
    type Item = Mat;

    fn next(&mut self) -> Option<Mat> {
        if self.done {
            return None;
        }
        let mat = Mat {
            n: self.n,
            e: self.digits.iter().map(|&d| d as u32).collect(),
        };
        // increment, last digit fastest
        let mut pos = self.digits.len();
        loop {
            if pos == 0 {
                self.done = true;
                break;
            }
            pos -= 1;
            self.digits[pos] += 1;
            if self.digits[pos] < self.order {
                break;
            }
            self.digits[pos] = 0;
        }
        Some(mat)
    }
}

/// Enumerates every element of the group, in canonical order.
pub fn enumerate_group(spec: &GroupSpec) -> Result<CensusGroup> {
    if spec.n == 0 {
        return Err(Error::NonPositive);
    }
    prime_power_parts(spec.q)?;
    let order = spec.order()?;
    let limit = guard::raised(CENSUS_ELEMENT_GUARD, "census");
    if order > limit {
        return Err(Error::Guard {
            what: "census group order",
            requested: order,
            limit,
        });
    }
    let field = Field::of_order(spec.matrix_field_order())?;
    let frob_q = match spec.kind {
        GroupKind::GeneralLinear => spec.matrix_field_order(), // identity map
        GroupKind::Unitary => spec.q,
    };
    let table = FieldTable::build(&field, frob_q)?;

    let candidates = saturating_pow_u128(field.order(), (spec.n * spec.n) as u32);
    let scan_limit = limit.saturating_mul(SCAN_FACTOR);
    let mut elements: Vec<Mat> = match spec.kind {
        GroupKind::GeneralLinear => {
            if candidates > scan_limit {
                return Err(Error::Guard {
                    what: "census scan candidates",
                    requested: candidates,
                    limit: scan_limit,
                });
            }
            MatrixScan::new(spec.n, field.order())
                .filter(|m| mat_rank(&table, m) == spec.n)
                .collect()
        }
        GroupKind::Unitary => {
            if candidates <= scan_limit {
                MatrixScan::new(spec.n, field.order())
                    .filter(|m| mat_is_unitary(&table, m))
                    .collect()
            } else {
                unitary_by_closure(spec, &field, &table, order as usize)?
            }
        }
    };
    elements.sort_unstable();
    if elements.len() as u128 != order {
        return Err(Error::Internal(format!(
            "enumerated {} elements of {:?}, formula gives {}",
            elements.len(),
            spec,
            order
        )));
    }
    // unitarity re-verified on every element regardless of strategy
    if spec.kind == GroupKind::Unitary {
        for m in &elements {
            if !mat_is_unitary(&table, m) {
                return Err(Error::Internal("non-unitary element produced".into()));
            }
        }
    }
    let index: HashMap<Vec<u32>, u32> = elements
        .iter()
        .enumerate()
        .map(|(i, m)| (m.e.clone(), i as u32))
        .collect();
    let inverses = elements
        .iter()
        .map(|m| {
            let inv = mat_inverse(&table, m).expect("group elements are invertible");
            *index.get(&inv.e).expect("inverse stays in the group")
        })
        .collect();
    Ok(CensusGroup {
        spec: *spec,
        field,
        table,
        elements,
        index,
        inverses,
    })
}

/// Closure fallback for unitary groups whose ambient matrix space is too
/// large to scan: start from diagonal, permutation, and embedded rank-2
/// seeds, close under multiplication, and pull further seeds from a
/// deterministic scan until the formula order is reached.
fn unitary_by_closure(
    spec: &GroupSpec,
    field: &Field,
    table: &FieldTable,
    target: usize,
) -> Result<Vec<Mat>> {
    let n = spec.n;
    let norm_one = norm_one_subgroup(spec.q)?;

    let mut seeds: Vec<Mat> = Vec::new();
    // diagonal seeds: one norm-one generator in each slot
    let gen_idx = field.element_index(norm_one.generator()) as u32;
    for i in 0..n {
        let mut m = Mat::identity(n, table);
        m.e[i * n + i] = gen_idx;
        seeds.push(m);
    }
    // adjacent transpositions
    for i in 0..n.saturating_sub(1) {
        let mut m = Mat::identity(n, table);
        m.e[i * n + i] = 0;
        m.e[(i + 1) * n + i + 1] = 0;
        m.e[i * n + i + 1] = table.one;
        m.e[(i + 1) * n + i] = table.one;
        seeds.push(m);
    }
    // rank-2 unitary blocks embedded on the first two coordinates, when the
    // rank-2 matrix space is itself scannable (the table is the same field)
    if n > 2 {
        let block_candidates = saturating_pow_u128(field.order(), 4);
        let scan_limit = guard::raised(CENSUS_ELEMENT_GUARD, "census").saturating_mul(SCAN_FACTOR);
        if block_candidates <= scan_limit {
            for b in MatrixScan::new(2, field.order()).filter(|m| mat_is_unitary(table, m)) {
                let mut m = Mat::identity(n, table);
                for i in 0..2 {
                    for j in 0..2 {
                        m.e[i * n + j] = b.at(i, j);
                    }
                }
                seeds.push(m);
            }
        }
    }

    let mut set: HashMap<Vec<u32>, ()> = HashMap::new();
    let close = |set: &mut HashMap<Vec<u32>, ()>, seeds: &[Mat]| {
        let mut frontier: Vec<Mat> = if set.is_empty() {
            let id = Mat::identity(n, table);
            set.insert(id.e.clone(), ());
            vec![id]
        } else {
            set.keys().map(|e| Mat { n, e: e.clone() }).collect()
        };
        while let Some(g) = frontier.pop() {
            for s in seeds {
                let h = mat_mul(table, &g, s);
                if !set.contains_key(&h.e) {
                    set.insert(h.e.clone(), ());
                    frontier.push(h);
                }
            }
        }
    };
    close(&mut set, &seeds);

    if set.len() < target {
        // deterministic rescue scan: adopt unitary matrices outside the
        // closure as extra generators until the group is complete
        let mut scan = MatrixScan::new(n, field.order());
        while set.len() < target {
            let m = match scan.next() {
                Some(m) => m,
                None => break,
            };
            if set.contains_key(&m.e) || !mat_is_unitary(table, &m) {
                continue;
            }
            seeds.push(m);
            close(&mut set, &seeds);
        }
    }
    if set.len() != target {
        return Err(Error::Internal(format!(
            "closure produced {} elements of {:?}, formula gives {}",
            set.len(),
            spec,
            target
        )));
    }
    Ok(set.into_keys().map(|e| Mat { n, e }).collect())
}

/// The orbit partition of the group under conjugation.
pub struct ClassPartition {
    /// Element index to class id.
    pub class_of: Vec<u32>,
    /// Class id to representative element index (the smallest member).
    pub reps: Vec<u32>,
    pub sizes: Vec<usize>,
}

impl ClassPartition {
    pub fn num_classes(&self) -> usize {
        self.reps.len()
    }
}

/// Splits the group into conjugacy classes by conjugating each unvisited
/// element with every group element. Representatives are the smallest
/// members in canonical order.
pub fn conjugacy_classes(group: &CensusGroup) -> Result<ClassPartition> {
    let len = group.len();
    let mut class_of = vec![u32::MAX; len];
    let mut reps = Vec::new();
    let mut sizes = Vec::new();
    for g_idx in 0..len as u32 {
        if class_of[g_idx as usize] != u32::MAX {
            continue;
        }
        let class_id = reps.len() as u32;
        let g = group.element(g_idx);
        let mut size = 0usize;
        for h_idx in 0..len as u32 {
            let h = group.element(h_idx);
            let h_inv = group.element(group.inverse_index(h_idx));
            let conj = mat_mul(&group.table, &mat_mul(&group.table, h, g), h_inv);
            let c_idx = group
                .index_of(&conj)
                .ok_or_else(|| Error::Internal("conjugate left the group".into()))?;
            if class_of[c_idx as usize] == u32::MAX {
                class_of[c_idx as usize] = class_id;
                size += 1;
            } else if class_of[c_idx as usize] != class_id {
                return Err(Error::Internal("conjugation orbits overlap".into()));
            }
        }
        reps.push(g_idx);
        sizes.push(size);
    }
    if sizes.iter().sum::<usize>() != len {
        return Err(Error::Internal(
            "class sizes do not sum to the group order".into(),
        ));
    }
    Ok(ClassPartition {
        class_of,
        reps,
        sizes,
    })
}

// --- dense polynomials over table-indexed fields (census internal) ---
// Low-to-high coefficient vectors of element indices; empty means zero.

type FPoly = Vec<u32>;

fn fp_trim(mut a: FPoly) -> FPoly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn fp_add(t: &FieldTable, a: &[u32], b: &[u32]) -> FPoly {
    let mut out = vec![0u32; a.len().max(b.len())];
    for (i, slot) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *slot = t.add(x, y);
    }
    fp_trim(out)
}

fn fp_mul(t: &FieldTable, a: &[u32], b: &[u32]) -> FPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = t.add(out[i + j], t.mul(ai, bj));
        }
    }
    fp_trim(out)
}

/// Remainder of `a` modulo a nonzero `b`.
fn fp_rem(t: &FieldTable, a: &[u32], b: &[u32]) -> FPoly {
    let b = fp_trim(b.to_vec());
    let lead_inv = t.inv(*b.last().expect("divisor must be nonzero"));
    let mut r = fp_trim(a.to_vec());
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let factor = t.mul(*r.last().unwrap(), lead_inv);
        for (j, &bj) in b.iter().enumerate() {
            r[shift + j] = t.sub(r[shift + j], t.mul(factor, bj));
        }
        r = fp_trim(r);
    }
    r
}

/// Exact quotient `a / b`; the caller guarantees divisibility.
fn fp_div_exact(t: &FieldTable, a: &[u32], b: &[u32]) -> FPoly {
    let b = fp_trim(b.to_vec());
    let lead_inv = t.inv(*b.last().expect("divisor must be nonzero"));
    let mut r = fp_trim(a.to_vec());
    let mut q = vec![0u32; r.len().saturating_sub(b.len()) + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let factor = t.mul(*r.last().unwrap(), lead_inv);
        q[shift] = factor;
        for (j, &bj) in b.iter().enumerate() {
            r[shift + j] = t.sub(r[shift + j], t.mul(factor, bj));
        }
        r = fp_trim(r);
    }
    assert!(r.is_empty(), "exact division left a remainder");
    fp_trim(q)
}

/// Characteristic polynomial of `m` as det(tI - m), by cofactor expansion
/// over the polynomial ring (fine for census-scale dimensions).
fn charpoly(t: &FieldTable, m: &Mat) -> FPoly {
    let n = m.n;
    let mut rows: Vec<Vec<FPoly>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let constant = t.neg[m.at(i, j) as usize];
            let mut entry: FPoly = vec![constant];
            if i == j {
                entry.push(t.one);
            }
            row.push(fp_trim(entry));
        }
        rows.push(row);
    }
    poly_mat_det(t, &rows)
}

fn poly_mat_det(t: &FieldTable, rows: &[Vec<FPoly>]) -> FPoly {
    let n = rows.len();
    if n == 1 {
        return rows[0][0].clone();
    }
    let mut det: FPoly = Vec::new();
    for j in 0..n {
        if rows[0][j].is_empty() {
            continue;
        }
        let minor: Vec<Vec<FPoly>> = rows[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(k, _)| k != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let mut term = fp_mul(t, &rows[0][j], &poly_mat_det(t, &minor));
        if j % 2 == 1 {
            term = term.iter().map(|&c| t.neg[c as usize]).collect();
        }
        det = fp_add(t, &det, &term);
    }
    det
}

/// All monic irreducibles of degree 1..=max_d over the table's field,
/// sieved by trial division.
fn monic_irreducibles(t: &FieldTable, max_d: usize) -> Vec<FPoly> {
    let order = t.order as u64;
    let mut irreducibles: Vec<FPoly> = Vec::new();
    for d in 1..=max_d {
        let count = saturating_pow_u128(order, d as u32) as u64;
        for idx in 0..count {
            let mut poly: FPoly = Vec::with_capacity(d + 1);
            let mut rest = idx;
            for _ in 0..d {
                poly.push((rest % order) as u32);
                rest /= order;
            }
            poly.push(t.one);
            let reducible = irreducibles
                .iter()
                .filter(|g| (g.len() - 1) * 2 <= d)
                .any(|g| fp_rem(t, &poly, g).is_empty());
            if !reducible {
                irreducibles.push(poly);
            }
        }
    }
    irreducibles
}

/// Factors a monic polynomial into irreducibles with multiplicity by trial
/// division against the sieve table.
fn factor_into_irreducibles(
    t: &FieldTable,
    f: &FPoly,
    irreducibles: &[FPoly],
) -> Result<Vec<(FPoly, usize)>> {
    let mut rest = f.clone();
    let mut out = Vec::new();
    for p in irreducibles {
        if p.len() > rest.len() {
            break;
        }
        let mut mult = 0;
        while rest.len() >= p.len() && fp_rem(t, &rest, p).is_empty() {
            rest = fp_div_exact(t, &rest, p);
            mult += 1;
        }
        if mult > 0 {
            out.push((p.clone(), mult));
        }
    }
    if rest.len() != 1 || rest[0] != t.one {
        return Err(Error::Internal(
            "polynomial did not factor completely".into(),
        ));
    }
    Ok(out)
}

/// Evaluates a polynomial at a matrix (Horner).
fn eval_at_matrix(t: &FieldTable, f: &FPoly, m: &Mat) -> Mat {
    let n = m.n;
    let mut acc = Mat::zero(n);
    for &c in f.iter().rev() {
        acc = mat_mul(t, &acc, m);
        if c != 0 {
            for i in 0..n {
                acc.e[i * n + i] = t.add(acc.e[i * n + i], c);
            }
        }
    }
    acc
}

/// The multiplicity partition of one irreducible `p` in the elementary
/// divisors of `g`, recovered from the kernel dimensions of powers of
/// `p(g)`: the jumps of `dim ker p(g)^k / deg p` form the conjugate
/// partition.
fn multiplicity_partition(t: &FieldTable, g: &Mat, p: &FPoly) -> Result<Vec<usize>> {
    let n = g.n;
    let r = p.len() - 1;
    let base = eval_at_matrix(t, p, g);
    let mut power = base.clone();
    let mut blocks_ge = Vec::new(); // blocks_ge[k-1] = #{parts >= k}
    let mut prev_c = 0usize;
    for _ in 1..=n {
        let dim_kernel = n - mat_rank(t, &power);
        if dim_kernel % r != 0 {
            return Err(Error::Internal(
                "kernel dimension not divisible by the factor degree".into(),
            ));
        }
        let c = dim_kernel / r;
        let jump = c - prev_c;
        if jump == 0 {
            break;
        }
        blocks_ge.push(jump);
        prev_c = c;
        power = mat_mul(t, &power, &base);
    }
    // the part k appears blocks_ge[k-1] - blocks_ge[k] times
    let mut parts = Vec::new();
    for k in (1..=blocks_ge.len()).rev() {
        let here = blocks_ge[k - 1];
        let next = blocks_ge.get(k).copied().unwrap_or(0);
        for _ in 0..(here - next) {
            parts.push(k);
        }
    }
    Ok(parts)
}

fn fpoly_to_monic(field: &Field, t: &FieldTable, f: &FPoly) -> Result<MonicPoly> {
    if f.last() != Some(&t.one) {
        return Err(Error::Internal("expected a monic polynomial".into()));
    }
    let low = f[..f.len() - 1]
        .iter()
        .map(|&i| field.element_from_index(i as u64))
        .collect();
    MonicPoly::new(field.clone(), low)
}

/// The class-parameterizing sequence of one element: factor its
/// characteristic polynomial, read each irreducible's multiplicity
/// partition off kernel dimensions, and reassemble `f_i` as the product of
/// irreducibles whose partitions contain the part `i`.
pub fn class_type_of(group: &CensusGroup, element_index: u32) -> Result<ClassType> {
    let t = &group.table;
    let g = group.element(element_index);
    let n = g.n;
    let cp = charpoly(t, g);
    if cp.len() != n + 1 || cp.last() != Some(&t.one) {
        return Err(Error::Internal(
            "characteristic polynomial is not monic of the right degree".into(),
        ));
    }
    let irreducibles = monic_irreducibles(t, n);
    let factors = factor_into_irreducibles(t, &cp, &irreducibles)?;
    let mut f_entries: Vec<FPoly> = vec![vec![t.one]; n];
    for (p, mult) in &factors {
        let parts = multiplicity_partition(t, g, p)?;
        if parts.iter().sum::<usize>() != *mult {
            return Err(Error::Internal(
                "multiplicity partition does not match the factor multiplicity".into(),
            ));
        }
        for i in 1..=n {
            let m_i = parts.iter().filter(|&&part| part == i).count();
            for _ in 0..m_i {
                f_entries[i - 1] = fp_mul(t, &f_entries[i - 1], p);
            }
        }
    }
    let seq = f_entries
        .iter()
        .map(|f| fpoly_to_monic(&group.field, t, f))
        .collect::<Result<Vec<_>>>()?;
    let class_type = ClassType::new(group.field.clone(), seq)?;
    // the sequence must reproduce the characteristic polynomial
    let rebuilt = class_type.charpoly();
    let expected = fpoly_to_monic(&group.field, t, &cp)?;
    if rebuilt != expected {
        return Err(Error::Internal(format!(
            "type sequence rebuilds {rebuilt} instead of {expected}"
        )));
    }
    Ok(class_type)
}

/// One conjugacy class with its realness and determinant annotations.
pub struct CensusClass {
    pub representative: Mat,
    pub size: usize,
    pub is_real: bool,
    pub det_one: bool,
    pub class_type: ClassType,
}

/// Annotates every class with realness (inverse in the same class),
/// determinant membership, and its polynomial-sequence type.
pub fn annotated_classes(
    group: &CensusGroup,
    classes: &ClassPartition,
) -> Result<Vec<CensusClass>> {
    let mut out = Vec::with_capacity(classes.num_classes());
    for (class_id, &rep_idx) in classes.reps.iter().enumerate() {
        let inv_idx = group.inverse_index(rep_idx);
        let is_real = classes.class_of[inv_idx as usize] == class_id as u32;
        let det = mat_det(&group.table, group.element(rep_idx));
        let class_type = class_type_of(group, rep_idx)?;
        out.push(CensusClass {
            representative: group.element(rep_idx).clone(),
            size: classes.sizes[class_id],
            is_real,
            det_one: det == group.table.one,
            class_type,
        });
    }
    Ok(out)
}

/// Scalar matrices of the center: units of `F_q` in the linear case, the
/// norm-one subgroup in the unitary case, as element indices.
fn central_scalar_indices(group: &CensusGroup) -> Result<Vec<u32>> {
    match group.spec.kind {
        GroupKind::GeneralLinear => Ok((1..group.field.order() as u32).collect()),
        GroupKind::Unitary => {
            let norm_one = norm_one_subgroup(group.spec.q)?;
            Ok(norm_one
                .elements()
                .iter()
                .map(|x| group.field.element_index(x) as u32)
                .collect())
        }
    }
}

/// Classes of the central quotient, as orbits of group classes under
/// scalar multiplication, each flagged real when some scalar carries the
/// inverse of a representative back into its class. The quotient group is
/// never constructed.
pub struct ProjectiveClasses {
    /// Class ids grouped into scalar orbits.
    pub orbits: Vec<Vec<u32>>,
    pub real: Vec<bool>,
}

pub fn projective_classes(
    group: &CensusGroup,
    classes: &ClassPartition,
) -> Result<ProjectiveClasses> {
    let scalars = central_scalar_indices(group)?;
    let num = classes.num_classes();
    // union-find over class ids
    fn find(parent: &mut [u32], mut x: u32) -> u32 {
        while parent[x as usize] != x {
            parent[x as usize] = parent[parent[x as usize] as usize];
            x = parent[x as usize];
        }
        x
    }
    let mut parent: Vec<u32> = (0..num as u32).collect();
    for class_id in 0..num as u32 {
        let rep = group.element(classes.reps[class_id as usize]).clone();
        for &s in &scalars {
            let scaled = mat_scalar_mul(&group.table, s, &rep);
            let target = group
                .index_of(&scaled)
                .ok_or_else(|| Error::Internal("scalar multiple left the group".into()))?;
            let target_class = classes.class_of[target as usize];
            let a = find(&mut parent, class_id);
            let b = find(&mut parent, target_class);
            if a != b {
                parent[a.max(b) as usize] = a.min(b);
            }
        }
    }
    let mut orbit_ids: HashMap<u32, usize> = HashMap::new();
    let mut orbits: Vec<Vec<u32>> = Vec::new();
    for class_id in 0..num as u32 {
        let root = find(&mut parent, class_id);
        let slot = *orbit_ids.entry(root).or_insert_with(|| {
            orbits.push(Vec::new());
            orbits.len() - 1
        });
        orbits[slot].push(class_id);
    }
    // a quotient class is real when some scalar multiple of the inverse of
    // a representative lands back in the representative's class
    let mut real = Vec::with_capacity(orbits.len());
    for orbit in &orbits {
        let class_id = orbit[0];
        let rep_idx = classes.reps[class_id as usize];
        let inv = group.element(group.inverse_index(rep_idx)).clone();
        let mut is_real = false;
        for &s in &scalars {
            let twisted = mat_scalar_mul(&group.table, s, &inv);
            let target = group
                .index_of(&twisted)
                .ok_or_else(|| Error::Internal("scalar multiple left the group".into()))?;
            if classes.class_of[target as usize] == class_id {
                is_real = true;
                break;
            }
        }
        real.push(is_real);
    }
    Ok(ProjectiveClasses { orbits, real })
}

/// Number of real classes of the central quotient.
pub fn projective_real_count(group: &CensusGroup, classes: &ClassPartition) -> Result<usize> {
    let projective = projective_classes(group, classes)?;
    Ok(projective.real.iter().filter(|&&r| r).count())
}

/// The census totals for one group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusReport {
    pub spec: GroupSpec,
    pub group_order: u128,
    pub num_classes: usize,
    pub real_classes: usize,
    pub real_in_det_one: usize,
    pub projective_real: usize,
}

/// Runs the full census for one group and cross-checks every structural
/// invariant: the class equation, distinctness of type sequences, the
/// realness criterion in both directions, and the determinant criterion.
/// Violations are hard errors.
pub fn census_report(spec: &GroupSpec) -> Result<CensusReport> {
    let group = enumerate_group(spec)?;
    let classes = conjugacy_classes(&group)?;
    let annotated = annotated_classes(&group, &classes)?;

    let order = spec.order()?;
    if group.len() as u128 != order {
        return Err(Error::Internal(
            "element count disagrees with the order formula".into(),
        ));
    }
    let mut seen_types = std::collections::BTreeSet::new();
    for class in &annotated {
        if order % class.size as u128 != 0 {
            return Err(Error::Internal(
                "class size does not divide the group order".into(),
            ));
        }
        if !seen_types.insert(class.class_type.clone()) {
            return Err(Error::Internal("two classes share a type sequence".into()));
        }
        // realness criterion, both directions
        if class.is_real != class.class_type.is_real_type() {
            return Err(Error::Internal(format!(
                "realness mismatch for type {:?}",
                class.class_type.type_partition()
            )));
        }
        // determinant criterion against the constant terms
        if class.det_one != class.class_type.has_determinant_one() {
            return Err(Error::Internal("determinant criterion mismatch".into()));
        }
    }

    let real_classes = annotated.iter().filter(|c| c.is_real).count();
    let real_in_det_one = annotated.iter().filter(|c| c.is_real && c.det_one).count();
    let projective_real = projective_real_count(&group, &classes)?;
    Ok(CensusReport {
        spec: *spec,
        group_order: order,
        num_classes: annotated.len(),
        real_classes,
        real_in_det_one,
        projective_real,
    })
}
