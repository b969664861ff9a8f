//! Integer partitions in part-list and multiplicity form.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// Partitions of n larger than this are refused.
pub const PARTITION_GUARD: usize = 200;

/// A partition of `n`: weakly decreasing positive parts. `n = 0` is the
/// empty partition.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let decreasing = parts.windows(2).all(|w| w[0] >= w[1]);
        if !decreasing || parts.contains(&0) {
            return Err(Error::MalformedPartition);
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Rebuilds a partition from a multiplicity map `i -> m_i`.
    pub fn from_multiplicities(mult: &BTreeMap<usize, usize>) -> Result<Self> {
        if mult.keys().any(|&i| i == 0) {
            return Err(Error::MalformedPartition);
        }
        let mut parts = Vec::new();
        for (&part, &m) in mult.iter().rev() {
            parts.extend(std::iter::repeat_n(part, m));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Sparse multiplicity map: only parts with `m_i > 0` appear.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut mult = BTreeMap::new();
        for &part in &self.parts {
            *mult.entry(part).or_insert(0) += 1;
        }
        mult
    }

    /// The multiplicity of the part `i` (0 when absent).
    pub fn multiplicity(&self, i: usize) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{part}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

/// All partitions of `n` in reverse-lexicographic order, matching standard
/// partition tables: (n) first, (1,...,1) last.
pub fn partitions(n: usize) -> Result<Vec<Partition>> {
    if n > PARTITION_GUARD {
        return Err(Error::Guard {
            what: "partition size",
            requested: n as u128,
            limit: PARTITION_GUARD as u128,
        });
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    descend(n, n, &mut current, &mut out);
    Ok(out)
}

fn descend(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        current.push(part);
        descend(remaining - part, part, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Independent partition-count oracle: Euler's pentagonal-number
    /// recurrence, which never enumerates a partition.
    fn partition_count_oracle(n: usize) -> i64 {
        let mut p = vec![0i64; n + 1];
        p[0] = 1;
        for m in 1..=n {
            let mut total = 0i64;
            let mut k = 1i64;
            loop {
                let g1 = (k * (3 * k - 1) / 2) as usize;
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g1 > m && g2 > m {
                    break;
                }
                let sign = if k % 2 == 0 { -1 } else { 1 };
                if g1 <= m {
                    total += sign * p[m - g1];
                }
                if g2 <= m {
                    total += sign * p[m - g2];
                }
                k += 1;
            }
            p[m] = total;
        }
        p[n]
    }

    #[test]
    fn small_counts() {
        assert_eq!(partitions(4).unwrap().len(), 5);
        assert_eq!(partitions(10).unwrap().len(), 42);
        assert_eq!(partition_count_oracle(10), 42);
    }

    #[test]
    fn zero_gives_empty_partition() {
        let all = partitions(0).unwrap();
        assert_eq!(all, vec![Partition::empty()]);
        assert_eq!(all[0].n(), 0);
    }

    #[test]
    fn counts_match_recurrence_oracle() {
        for n in 0..=50 {
            assert_eq!(
                partitions(n).unwrap().len() as i64,
                partition_count_oracle(n),
                "p({n})"
            );
        }
    }

    #[test]
    fn reverse_lexicographic_order() {
        let parts: Vec<Vec<usize>> = partitions(4)
            .unwrap()
            .into_iter()
            .map(|p| p.parts().to_vec())
            .collect();
        assert_eq!(
            parts,
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
    }

    #[test]
    fn multiplicity_examples() {
        let p = Partition::new(vec![2, 1, 1]).unwrap();
        let m = p.multiplicities();
        assert_eq!(m.get(&1), Some(&2));
        assert_eq!(m.get(&2), Some(&1));
        assert_eq!(p.n(), 4);

        let p = Partition::new(vec![3]).unwrap();
        assert_eq!(p.multiplicities().get(&3), Some(&1));

        let p = Partition::new(vec![2, 2]).unwrap();
        let m = p.multiplicities();
        assert_eq!(m.get(&2), Some(&2));
        assert_eq!(p.multiplicity(1), 0);
        assert_eq!(p.multiplicity(3), 0);
    }

    #[test]
    fn weighted_sum_is_n() {
        for nu in partitions(9).unwrap() {
            let weighted: usize = nu.multiplicities().iter().map(|(i, m)| i * m).sum();
            assert_eq!(weighted, nu.n());
        }
    }

    #[test]
    fn malformed_partitions_rejected() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn guard_rejects_oversized_n() {
        assert!(matches!(partitions(201), Err(Error::Guard { .. })));
    }

    proptest! {
        #[test]
        fn multiplicity_round_trip(n in 0usize..14) {
            for nu in partitions(n).unwrap() {
                let back = Partition::from_multiplicities(&nu.multiplicities()).unwrap();
                prop_assert_eq!(back, nu);
            }
        }
    }
}
