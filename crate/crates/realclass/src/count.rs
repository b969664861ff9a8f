//! Closed-form class counts per partition type, their totals, and the
//! scalar-orbit analyzer for explicit polynomial sequences.
//!
//! A conjugacy class of the general linear or unitary group is encoded by
//! a sequence of monic polynomials `(f_1, f_2, ...)` with nonzero constant
//! terms and `sum_i i deg(f_i) = n`; its type is the partition with
//! `m_i = deg(f_i)`. The class is real exactly when every `f_i` is
//! self-reciprocal, lies in the determinant-one subgroup exactly when
//! `prod_i f_i(0)^i = (-1)^n`, and classes of the central quotient
//! correspond to orbits of sequences under the scalar action. The counting
//! functions below evaluate the resulting per-type formulas; the orbit
//! profile computes orbits outright, so the formulas can be tested against
//! it rather than assumed.

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::ff::{Field, FieldElement, NormOneGroup};
use crate::partition::{partitions, Partition};
use crate::poly::{big_pow, count_self_reciprocal, eta_act, MonicPoly};

/// Totals above this rank are refused (partition counts explode).
pub const TOTALS_GUARD: usize = 60;

fn half_exact(x: BigInt) -> BigInt {
    assert!(x.is_even(), "halved count must be even, got {x}");
    x / 2
}

/// Number of real classes of type `nu` in the general linear (equally, the
/// unitary) group: the product of self-reciprocal counts over the parts.
pub fn real_type_count(q: u64, nu: &Partition) -> BigInt {
    nu.multiplicities()
        .values()
        .map(|&m| count_self_reciprocal(q, m))
        .product()
}

/// Number of real classes of type `nu` contained in the determinant-one
/// subgroup. For even `q` every real class qualifies; for odd `q` the
/// two-case form applies.
pub fn sl_type_count(q: u64, nu: &Partition) -> BigInt {
    if q % 2 == 0 {
        return real_type_count(q, nu);
    }
    let mult = nu.multiplicities();
    let odd_part_with_odd_mult = mult.iter().any(|(&i, &m)| i % 2 == 1 && m % 2 == 1);
    if odd_part_with_odd_mult {
        half_exact(real_type_count(q, nu))
    } else {
        // every odd part has even multiplicity; the second product replaces
        // r_{q,m_i} by (q-1) q^{m_i/2 - 1} on odd parts
        let scaled: BigInt = mult
            .iter()
            .map(|(&i, &m)| {
                if i % 2 == 1 {
                    (q - 1) * big_pow(q, m / 2 - 1)
                } else {
                    count_self_reciprocal(q, m)
                }
            })
            .product();
        half_exact(real_type_count(q, nu) + scaled)
    }
}

/// The same count evaluated literally from the three-case form (odd `q`),
/// with the case guards read disjointly: all odd parts absent; some odd
/// part with odd multiplicity; otherwise the `h_nu` case. Must agree with
/// [`sl_type_count`] everywhere.
pub fn sl_type_count_raw(q: u64, nu: &Partition) -> BigInt {
    assert!(q % 2 == 1, "the three-case form applies to odd q only");
    let mult = nu.multiplicities();
    let no_odd_parts = mult.keys().all(|&i| i % 2 == 0);
    if no_odd_parts {
        return real_type_count(q, nu);
    }
    if mult.iter().any(|(&i, &m)| (i * m) % 2 == 1) {
        return half_exact(real_type_count(q, nu));
    }
    // rho counts the odd parts present; h_nu = ((q+1)^rho + (q-1)^rho) / 2
    let rho = mult.keys().filter(|&&i| i % 2 == 1).count();
    let h_nu = half_exact(big_pow(q + 1, rho) + big_pow(q - 1, rho));
    let odd_product: BigInt = mult
        .iter()
        .filter(|(&i, _)| i % 2 == 1)
        .map(|(_, &m)| big_pow(q, m / 2 - 1))
        .product();
    let even_product: BigInt = mult
        .iter()
        .filter(|(&i, _)| i % 2 == 0)
        .map(|(_, &m)| count_self_reciprocal(q, m))
        .product();
    h_nu * odd_product * even_product
}

/// Number of real classes of type `nu` in the projective linear (equally,
/// the projective unitary) group.
pub fn pgl_type_count(q: u64, nu: &Partition) -> BigInt {
    let full = real_type_count(q, nu);
    if q % 2 == 0 {
        return full;
    }
    let some_odd_mult = nu.multiplicities().values().any(|&m| m % 2 == 1);
    if some_odd_mult {
        half_exact(full)
    } else {
        full
    }
}

/// Sum of [`real_type_count`] over all partitions of `n`.
pub fn real_total(q: u64, n: usize) -> Result<BigInt> {
    Ok(partitions(n)?.iter().map(|nu| real_type_count(q, nu)).sum())
}

/// Sum of [`sl_type_count`] over all partitions of `n`.
pub fn sl_total(q: u64, n: usize) -> Result<BigInt> {
    Ok(partitions(n)?.iter().map(|nu| sl_type_count(q, nu)).sum())
}

/// Sum of [`pgl_type_count`] over all partitions of `n`.
pub fn pgl_total(q: u64, n: usize) -> Result<BigInt> {
    Ok(partitions(n)?.iter().map(|nu| pgl_type_count(q, nu)).sum())
}

/// Sum of [`real_type_count`] over the partitions of `n` in which every
/// multiplicity is even.
pub fn even_multiplicity_total(q: u64, n: usize) -> Result<BigInt> {
    Ok(partitions(n)?
        .iter()
        .filter(|nu| nu.multiplicities().values().all(|&m| m % 2 == 0))
        .map(|nu| real_type_count(q, nu))
        .sum())
}

/// Per-type counts attached to one partition in a [`CountReport`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeCounts {
    pub real: BigInt,
    pub sl: BigInt,
    pub pgl: BigInt,
}

/// All six class counts for rank `n` over `F_q`, plus the per-type
/// breakdown in partition-table order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountReport {
    pub q: u64,
    pub n: usize,
    pub gl_real: BigInt,
    pub u_real: BigInt,
    pub in_sl: BigInt,
    pub in_su: BigInt,
    pub pgl_real: BigInt,
    pub pgu_real: BigInt,
    pub per_type: Vec<(Partition, TypeCounts)>,
}

/// Sums the per-type counts over all partitions of `n` and fills in the
/// mirrored unitary quantities. The projective total must equal the
/// determinant-one total; a mismatch is an internal bug, not bad input.
pub fn totals(q: u64, n: usize) -> Result<CountReport> {
    if n > TOTALS_GUARD {
        return Err(Error::Guard {
            what: "totals rank",
            requested: n as u128,
            limit: TOTALS_GUARD as u128,
        });
    }
    let mut per_type = Vec::new();
    let mut gl_real = BigInt::from(0);
    let mut in_sl = BigInt::from(0);
    let mut pgl_real = BigInt::from(0);
    for nu in partitions(n)? {
        let counts = TypeCounts {
            real: real_type_count(q, &nu),
            sl: sl_type_count(q, &nu),
            pgl: pgl_type_count(q, &nu),
        };
        gl_real += &counts.real;
        in_sl += &counts.sl;
        pgl_real += &counts.pgl;
        per_type.push((nu, counts));
    }
    if pgl_real != in_sl {
        return Err(Error::Internal(format!(
            "projective total {pgl_real} != determinant-one total {in_sl} for q={q}, n={n}"
        )));
    }
    Ok(CountReport {
        q,
        n,
        u_real: gl_real.clone(),
        in_su: in_sl.clone(),
        pgu_real: pgl_real.clone(),
        gl_real,
        in_sl,
        pgl_real,
        per_type,
    })
}

/// A class-parameterizing sequence `(f_1, f_2, ...)`; trailing constant
/// entries are trimmed so types are canonical.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ClassType {
    field: Field,
    seq: Vec<MonicPoly>,
}

impl ClassType {
    pub fn new(field: Field, mut seq: Vec<MonicPoly>) -> Result<Self> {
        if seq.iter().any(|f| f.field() != &field) {
            return Err(Error::MixedFields);
        }
        while seq.last().is_some_and(|f| f.degree() == 0) {
            seq.pop();
        }
        Ok(ClassType { field, seq })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// The entries `f_1 .. f_L` (constant entries beyond `f_L` omitted).
    pub fn seq(&self) -> &[MonicPoly] {
        &self.seq
    }

    /// The rank `n = sum_i i deg(f_i)`.
    pub fn n(&self) -> usize {
        self.seq
            .iter()
            .enumerate()
            .map(|(idx, f)| (idx + 1) * f.degree())
            .sum()
    }

    /// The type partition, with the multiplicity of `i` equal to `deg(f_i)`.
    pub fn type_partition(&self) -> Partition {
        let mut mult = std::collections::BTreeMap::new();
        for (idx, f) in self.seq.iter().enumerate() {
            if f.degree() > 0 {
                mult.insert(idx + 1, f.degree());
            }
        }
        Partition::from_multiplicities(&mult).expect("degrees form a valid multiplicity map")
    }

    /// The characteristic polynomial `prod_i f_i(t)^i`.
    pub fn charpoly(&self) -> MonicPoly {
        let mut acc = MonicPoly::one(&self.field);
        for (idx, f) in self.seq.iter().enumerate() {
            acc = acc.mul(&f.pow(idx + 1));
        }
        acc
    }

    /// Whether every entry is self-reciprocal, i.e. the class is real.
    pub fn is_real_type(&self) -> bool {
        self.seq.iter().all(|f| f.is_self_reciprocal())
    }

    /// Whether every entry is `zeta`-self-reciprocal, i.e. the class
    /// consists of elements conjugate to `zeta` times their inverses.
    pub fn is_zeta_real_type(&self, zeta: &FieldElement) -> Result<bool> {
        for f in &self.seq {
            if !f.is_zeta_self_reciprocal(zeta)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether the class lies in the determinant-one subgroup:
    /// `prod_i f_i(0)^i = (-1)^n`.
    pub fn has_determinant_one(&self) -> bool {
        let mut product = self.field.one();
        for (idx, f) in self.seq.iter().enumerate() {
            product = &product * &f.constant_term().pow((idx + 1) as u64);
        }
        let sign = if self.n() % 2 == 0 {
            self.field.one()
        } else {
            -&self.field.one()
        };
        product == sign
    }

    /// The componentwise scalar action on the sequence.
    pub fn acted_on_by(&self, eta: &FieldElement) -> Result<ClassType> {
        let seq = self
            .seq
            .iter()
            .map(|f| eta_act(eta, f))
            .collect::<Result<Vec<_>>>()?;
        ClassType::new(self.field.clone(), seq)
    }
}

/// The scalar group `Z` acting on polynomial sequences: the units of `F_q`
/// for the linear case, the norm-one scalars for the unitary case.
#[derive(Clone, Debug)]
pub enum ScalarGroup {
    Units(Field),
    NormOne(NormOneGroup),
}

impl ScalarGroup {
    pub fn field(&self) -> &Field {
        match self {
            ScalarGroup::Units(f) => f,
            ScalarGroup::NormOne(g) => g.ambient(),
        }
    }

    pub fn elements(&self) -> Vec<FieldElement> {
        match self {
            ScalarGroup::Units(f) => f.elements().filter(|x| !x.is_zero()).collect(),
            ScalarGroup::NormOne(g) => g.elements().to_vec(),
        }
    }
}

/// What one scalar orbit of a sequence contains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitProfile {
    pub orbit_size: usize,
    /// Orbit members with every entry self-reciprocal.
    pub real_members: usize,
    /// Orbit members with every entry `zeta`-self-reciprocal; zero when no
    /// `zeta` is supplied (even `q` has no non-square scalar).
    pub zeta_real_members: usize,
}

/// Computes the full orbit of `seq` under `z` by applying every scalar,
/// then counts the real and `zeta`-real members. The orbit is enumerated
/// outright; no orbit-size shortcut is taken.
pub fn orbit_profile(
    seq: &ClassType,
    zeta: Option<&FieldElement>,
    z: &ScalarGroup,
) -> Result<OrbitProfile> {
    if seq.field() != z.field() {
        return Err(Error::MixedFields);
    }
    if let Some(zeta) = zeta {
        if zeta.field() != seq.field() {
            return Err(Error::MixedFields);
        }
    }
    let mut orbit = std::collections::BTreeSet::new();
    for eta in z.elements() {
        orbit.insert(seq.acted_on_by(&eta)?);
    }
    let mut real_members = 0;
    let mut zeta_real_members = 0;
    for member in &orbit {
        if member.is_real_type() {
            real_members += 1;
        }
        if let Some(zeta) = zeta {
            if member.is_zeta_real_type(zeta)? {
                zeta_real_members += 1;
            }
        }
    }
    // a scalar orbit never carries more than two fixed sequences of
    // either kind
    if real_members > 2 || zeta_real_members > 2 {
        return Err(Error::Internal(format!(
            "orbit holds {real_members} real and {zeta_real_members} twisted-real members"
        )));
    }
    Ok(OrbitProfile {
        orbit_size: orbit.len(),
        real_members,
        zeta_real_members,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::{is_square_in, norm_one_subgroup, two_part, Ambient};
    use crate::poly::{enumerate_polys, PolyFilter};
    use num_traits::One;

    fn nu(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn real_type_values() {
        assert_eq!(real_type_count(3, &nu(&[1, 1])), BigInt::from(4));
        assert_eq!(real_type_count(3, &nu(&[2])), BigInt::from(2));
        assert_eq!(real_type_count(2, &nu(&[1])), BigInt::from(1));
        assert_eq!(real_type_count(3, &Partition::empty()), BigInt::from(1));
    }

    #[test]
    fn sl_type_values() {
        assert_eq!(sl_type_count(3, &nu(&[1, 1])), BigInt::from(3));
        assert_eq!(sl_type_count(3, &nu(&[2])), BigInt::from(2));
        for v in partitions(3).unwrap() {
            assert_eq!(sl_type_count(2, &v), real_type_count(2, &v));
        }
    }

    #[test]
    fn sl_raw_values() {
        assert_eq!(sl_type_count_raw(3, &nu(&[1, 1])), BigInt::from(3));
        assert_eq!(sl_type_count_raw(3, &nu(&[1])), BigInt::from(1));
        assert_eq!(
            sl_type_count_raw(5, &nu(&[2, 2])),
            sl_type_count(5, &nu(&[2, 2]))
        );
    }

    #[test]
    fn sl_raw_agrees_with_revised_form() {
        for q in [3u64, 5, 7] {
            for n in 0..=12 {
                for v in partitions(n).unwrap() {
                    assert_eq!(
                        sl_type_count_raw(q, &v),
                        sl_type_count(q, &v),
                        "q={q} nu={v}"
                    );
                }
            }
        }
    }

    #[test]
    fn pgl_type_values() {
        assert_eq!(pgl_type_count(3, &nu(&[1, 1])), BigInt::from(4));
        assert_eq!(pgl_type_count(3, &nu(&[2])), BigInt::from(1));
        assert_eq!(pgl_type_count(2, &nu(&[1, 1])), BigInt::from(2));
    }

    #[test]
    fn totals_examples() {
        let r = totals(3, 2).unwrap();
        assert_eq!(r.gl_real, BigInt::from(6));
        assert_eq!(r.in_sl, BigInt::from(5));
        assert_eq!(r.pgl_real, BigInt::from(5));
        assert_eq!(r.u_real, r.gl_real);
        assert_eq!(r.in_su, r.in_sl);
        assert_eq!(r.pgu_real, r.pgl_real);

        for q in [2u64, 3, 7] {
            let r = totals(q, 0).unwrap();
            assert_eq!(r.gl_real, BigInt::one());
            assert_eq!(r.in_sl, BigInt::one());
            assert_eq!(r.pgl_real, BigInt::one());
        }

        let r = totals(3, 1).unwrap();
        assert_eq!(r.gl_real, BigInt::from(2));
        assert_eq!(r.in_sl, BigInt::one());
        assert_eq!(r.pgl_real, BigInt::one());
    }

    #[test]
    fn totals_guard() {
        assert!(matches!(totals(3, 61), Err(Error::Guard { .. })));
    }

    #[test]
    fn projective_and_determinant_totals_agree() {
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            for n in 0..=30 {
                assert_eq!(
                    pgl_total(q, n).unwrap(),
                    sl_total(q, n).unwrap(),
                    "q={q} n={n}"
                );
            }
        }
    }

    fn unitary_setup() -> (NormOneGroup, Field, FieldElement) {
        let c4 = norm_one_subgroup(3).unwrap();
        let field = c4.ambient().clone();
        let zeta = c4.canonical_nonsquare().unwrap();
        (c4, field, zeta)
    }

    fn single(field: &Field, f: MonicPoly) -> ClassType {
        ClassType::new(field.clone(), vec![f]).unwrap()
    }

    #[test]
    fn orbit_profile_quadratic_example() {
        // t^2 + 1 is self-reciprocal but not a polynomial in t^4: its orbit
        // carries two real members and no zeta-real ones.
        let (c4, field, zeta) = unitary_setup();
        let f = MonicPoly::new(field.clone(), vec![field.one(), field.zero()]).unwrap();
        assert!(!f.in_t_power(4));
        let profile =
            orbit_profile(&single(&field, f), Some(&zeta), &ScalarGroup::NormOne(c4)).unwrap();
        assert_eq!(profile.real_members, 2);
        assert_eq!(profile.zeta_real_members, 0);
    }

    #[test]
    fn orbit_profile_quartic_example() {
        // t^4 - 1 is a polynomial in t^4: one real and one zeta-real member.
        let (c4, field, zeta) = unitary_setup();
        let minus_one = -&field.one();
        let f = MonicPoly::new(
            field.clone(),
            vec![minus_one, field.zero(), field.zero(), field.zero()],
        )
        .unwrap();
        assert!(f.in_t_power(4));
        let profile =
            orbit_profile(&single(&field, f), Some(&zeta), &ScalarGroup::NormOne(c4)).unwrap();
        assert_eq!(profile.real_members, 1);
        assert_eq!(profile.zeta_real_members, 1);
    }

    #[test]
    fn orbit_profile_odd_degree_example() {
        // sequences containing an odd-degree self-reciprocal entry have two
        // real members and no zeta-real ones
        let (c4, field, zeta) = unitary_setup();
        for f in enumerate_polys(&field, 1, &PolyFilter::SelfConjugate).unwrap() {
            if !f.is_self_reciprocal() {
                continue;
            }
            let profile = orbit_profile(
                &single(&field, f),
                Some(&zeta),
                &ScalarGroup::NormOne(c4.clone()),
            )
            .unwrap();
            assert_eq!(profile.zeta_real_members, 0);
            assert_eq!(profile.real_members, 2);
        }
    }

    #[test]
    fn orbit_trichotomy_for_q3() {
        // every self-reciprocal or zeta-self-reciprocal self-conjugate f of
        // degree <= 4 shows the expected ([f]_T, [f]_S) pattern
        let (c4, field, zeta) = unitary_setup();
        let b = two_part(3 + 1).unwrap() as usize;
        for d in 0..=4usize {
            for f in enumerate_polys(&field, d, &PolyFilter::SelfConjugate).unwrap() {
                let in_t = f.is_self_reciprocal();
                let in_s = f.is_zeta_self_reciprocal(&zeta).unwrap();
                if !in_t && !in_s {
                    continue;
                }
                let profile = orbit_profile(
                    &single(&field, f.clone()),
                    Some(&zeta),
                    &ScalarGroup::NormOne(c4.clone()),
                )
                .unwrap();
                let pattern = (profile.real_members, profile.zeta_real_members);
                if d % 2 == 1 {
                    assert!(in_t && !in_s, "odd degree cannot be zeta-fixed: {f}");
                    assert_eq!(pattern, (2, 0), "odd degree {f}");
                } else if f.in_t_power(b) {
                    assert_eq!(pattern, (1, 1), "t^{b}-polynomial {f}");
                } else if in_t {
                    assert_eq!(pattern, (2, 0), "plain self-reciprocal {f}");
                } else {
                    assert_eq!(pattern, (0, 2), "plain zeta-fixed {f}");
                }
            }
        }
    }

    #[test]
    fn even_q_orbits_have_at_most_one_real_member() {
        for q in [2u64, 4] {
            let group = norm_one_subgroup(q).unwrap();
            let field = group.ambient().clone();
            for d in 0..=3usize {
                for f in enumerate_polys(&field, d, &PolyFilter::SelfConjugate).unwrap() {
                    if !f.is_self_reciprocal() {
                        continue;
                    }
                    let profile = orbit_profile(
                        &single(&field, f),
                        None,
                        &ScalarGroup::NormOne(group.clone()),
                    )
                    .unwrap();
                    assert!(profile.real_members <= 1, "q={q}");
                    assert_eq!(profile.zeta_real_members, 0);
                }
            }
        }
    }

    #[test]
    fn crossing_scalars_square_to_zeta_times_full_two_part() {
        // whenever eta carries a zeta-fixed f to a self-reciprocal one, f is
        // a polynomial in t^{|q+1|_2} and eta^2 = zeta * beta^{-1} with
        // |beta|_2 = |q+1|_2
        let (c4, field, zeta) = unitary_setup();
        let b = two_part(4).unwrap();
        let full_two_part: Vec<FieldElement> = c4
            .elements()
            .iter()
            .filter(|x| {
                let mut ord = 1u64;
                let mut y = (*x).clone();
                while !y.is_one() {
                    y = &y * x;
                    ord += 1;
                }
                two_part(ord).unwrap() == b
            })
            .cloned()
            .collect();
        assert!(!full_two_part.is_empty());
        for d in [2usize, 4] {
            for f in enumerate_polys(&field, d, &PolyFilter::SelfConjugate).unwrap() {
                if !f.is_zeta_self_reciprocal(&zeta).unwrap() {
                    continue;
                }
                for eta in c4.elements() {
                    let moved = eta_act(eta, &f).unwrap();
                    if moved.is_self_reciprocal() {
                        assert!(f.in_t_power(b as usize), "{f}");
                        let eta_sq = eta * eta;
                        let witness = full_two_part
                            .iter()
                            .any(|beta| eta_sq == &zeta * &beta.inv().unwrap());
                        assert!(witness, "eta^2 has no matching beta for {f}");
                    }
                }
            }
        }
    }

    #[test]
    fn class_type_basics() {
        let field = Field::new(3, 1).unwrap();
        // f_1 = 1, f_2 = t - 1: a single size-2 block with eigenvalue 1
        let f2 = MonicPoly::new(field.clone(), vec![-&field.one()]).unwrap();
        let ct = ClassType::new(field.clone(), vec![MonicPoly::one(&field), f2]).unwrap();
        assert_eq!(ct.n(), 2);
        assert_eq!(ct.type_partition(), Partition::new(vec![2]).unwrap());
        let cp = ct.charpoly();
        assert_eq!(cp.degree(), 2);
        assert!(ct.is_real_type());
        assert!(ct.has_determinant_one());
    }

    #[test]
    fn class_type_trims_trailing_constants() {
        let field = Field::new(3, 1).unwrap();
        let f1 = MonicPoly::new(field.clone(), vec![field.one()]).unwrap();
        let ct = ClassType::new(
            field.clone(),
            vec![f1, MonicPoly::one(&field), MonicPoly::one(&field)],
        )
        .unwrap();
        assert_eq!(ct.seq().len(), 1);
        assert_eq!(ct.n(), 1);
    }

    #[test]
    fn determinant_criterion_matches_constant_terms() {
        // n = 1 over F_3: the class of (t - a) has determinant a
        let field = Field::new(3, 1).unwrap();
        for a in field.elements().filter(|x| !x.is_zero()) {
            let f = MonicPoly::linear_with_root(&a).unwrap();
            let ct = ClassType::new(field.clone(), vec![f]).unwrap();
            assert_eq!(ct.has_determinant_one(), a.is_one());
        }
    }

    #[test]
    fn orbit_rejects_mixed_fields() {
        let (c4, _field, _) = unitary_setup();
        let other = Field::new(3, 1).unwrap();
        let f = MonicPoly::new(other.clone(), vec![other.one()]).unwrap();
        let seq = ClassType::new(other, vec![f]).unwrap();
        assert_eq!(
            orbit_profile(&seq, None, &ScalarGroup::NormOne(c4)),
            Err(Error::MixedFields)
        );
    }

    #[test]
    fn units_scalar_group_orbits() {
        // over F_3 the orbit of (t^2 + 1) under the units {1, 2}
        let field = Field::new(3, 1).unwrap();
        let f = MonicPoly::new(field.clone(), vec![field.one(), field.zero()]).unwrap();
        let zeta = crate::ff::canonical_nonsquare_units(&field).unwrap();
        let profile = orbit_profile(
            &single(&field, f),
            Some(&zeta),
            &ScalarGroup::Units(field.clone()),
        )
        .unwrap();
        // 2.f = t^2 + 4 = t^2 + 1, so the orbit is a fixed point
        assert_eq!(profile.orbit_size, 1);
        assert_eq!(profile.real_members, 1);
        // zeta = 2: the zeta-reciprocal is t^2 + zeta^2 = t^2 + 1, fixed too
        assert_eq!(profile.zeta_real_members, 1);
    }

    #[test]
    fn nonsquare_zeta_is_actually_a_nonsquare() {
        let (c4, _, zeta) = unitary_setup();
        assert!(!is_square_in(&zeta, Ambient::NormOne(&c4)).unwrap());
    }
}
