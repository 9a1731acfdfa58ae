//! Integer partitions and bipartitions.
//!
//! Partitions are stored with parts in weakly decreasing order. The
//! enumeration order is reverse-lexicographic: `(n)` first, `(1^n)` last.

use serde::{Deserialize, Serialize};
use std::fmt;

/// A partition of a nonnegative integer into positive parts, weakly decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition from parts, sorting them into canonical order.
    /// Panics if any part is zero.
    pub fn new(parts: impl Into<Vec<u32>>) -> Self {
        let mut parts = parts.into();
        assert!(parts.iter().all(|&x| x > 0), "partition parts must be positive");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// The number being partitioned.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// The conjugate (transpose) partition.
    pub fn transpose(&self) -> Partition {
        if self.0.is_empty() {
            return Partition::empty();
        }
        let cols = self.0[0] as usize;
        let mut out = Vec::with_capacity(cols);
        for j in 0..cols {
            out.push(self.0.iter().filter(|&&p| p as usize > j).count() as u32);
        }
        Partition(out)
    }

    /// gcd of the parts; 0 for the empty partition.
    pub fn gcd_of_parts(&self) -> u32 {
        self.0.iter().fold(0, |g, &p| gcd(g, p))
    }

    /// Number of distinct part sizes.
    pub fn distinct_sizes(&self) -> usize {
        let mut n = 0;
        let mut prev = 0;
        for &p in &self.0 {
            if p != prev {
                n += 1;
                prev = p;
            }
        }
        n
    }

    /// Distinct parts with multiplicities, largest first.
    pub fn grouped(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

pub fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Euler totient.
pub fn totient(n: u32) -> u32 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Largest odd divisor of n (0 for n = 0).
pub fn odd_part(n: u32) -> u32 {
    let mut n = n;
    while n > 0 && n.is_multiple_of(2) {
        n /= 2;
    }
    n
}

/// All partitions of `n`, in reverse-lexicographic order.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    rec(n, n, &mut current, &mut out);
    fn rec(remaining: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition(current.clone()));
            return;
        }
        let top = max.min(remaining);
        for part in (1..=top).rev() {
            current.push(part);
            rec(remaining - part, part, current, out);
            current.pop();
        }
    }
    out
}

/// Partitions of `n` whose parts all lie in `allowed` (used by weighted-sum
/// oracles over odd-part partitions).
pub fn enumerate_partitions_with(n: u32, allow: impl Fn(u32) -> bool + Copy) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    rec(n, n, &mut current, &mut out, allow);
    fn rec(
        remaining: u32,
        max: u32,
        current: &mut Vec<u32>,
        out: &mut Vec<Partition>,
        allow: impl Fn(u32) -> bool + Copy,
    ) {
        if remaining == 0 {
            out.push(Partition(current.clone()));
            return;
        }
        let top = max.min(remaining);
        for part in (1..=top).rev() {
            if !allow(part) {
                continue;
            }
            current.push(part);
            rec(remaining - part, part, current, out, allow);
            current.pop();
        }
    }
    out
}

/// p(n), the number of partitions of n, by the classical recurrence.
pub fn partition_count(n: u32) -> u64 {
    let n = n as usize;
    let mut p = vec![0u64; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut total: i128 = 0;
        let mut k = 1i64;
        loop {
            let g1 = k * (3 * k - 1) / 2;
            let g2 = k * (3 * k + 1) / 2;
            if g1 as usize > m && g2 as usize > m {
                break;
            }
            let sign = if k % 2 == 0 { -1i128 } else { 1i128 };
            if g1 as usize <= m {
                total += sign * p[m - g1 as usize] as i128;
            }
            if g2 as usize <= m {
                total += sign * p[m - g2 as usize] as i128;
            }
            k += 1;
        }
        p[m] = total as u64;
    }
    p[n]
}

/// Number of bipartitions of n: pairs of partitions with total size n.
pub fn bipartition_count(n: u32) -> u64 {
    (0..=n).map(|k| partition_count(k) * partition_count(n - k)).sum()
}

/// All bipartitions of n, ordered by size of the first component
/// (descending), then reverse-lexicographically within components.
pub fn enumerate_bipartitions(n: u32) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for k in (0..=n).rev() {
        for a in enumerate_partitions(k) {
            for b in enumerate_partitions(n - k) {
                out.push((a.clone(), b));
            }
        }
    }
    out
}

/// p(l, k): partitions of l into parts of exactly k different sizes.
pub fn p_distinct_sizes(l: u32, k: u32) -> u64 {
    // dp over part sizes 1..=l; choosing a size contributes one distinct size
    // and any positive multiplicity of it.
    let l = l as usize;
    let k = k as usize;
    if l == 0 {
        return if k == 0 { 1 } else { 0 };
    }
    if k == 0 || k > l {
        return 0;
    }
    // table[j][s] = number of partitions of j into parts of exactly s distinct
    // sizes, all sizes <= current bound.
    let mut table = vec![vec![0u64; k + 1]; l + 1];
    table[0][0] = 1;
    for size in 1..=l {
        // iterate j downward is wrong here since a size may repeat; clone per size
        let prev = table.clone();
        for j in size..=l {
            // use `size` with multiplicity m >= 1
            let mut m = 1;
            while m * size <= j {
                for s in 1..=k {
                    let add = prev[j - m * size][s - 1];
                    table[j][s] += add;
                }
                m += 1;
            }
        }
    }
    table[l][k]
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn partition_counts_match_classical_values() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(4).len(), 5);
        assert_eq!(enumerate_partitions(5).len(), 7);
        assert_eq!(partition_count(0), 1);
        assert_eq!(partition_count(4), 5);
        assert_eq!(partition_count(5), 7);
        assert_eq!(partition_count(50), 204226);
    }

    #[test]
    fn enumeration_is_reverse_lexicographic_and_duplicate_free() {
        let parts = enumerate_partitions(8);
        assert_eq!(parts.len(), partition_count(8) as usize);
        for w in parts.windows(2) {
            assert!(w[0].parts() > w[1].parts(), "{:?} !> {:?}", w[0], w[1]);
        }
        assert_eq!(parts[0], Partition::new(vec![8]));
        assert_eq!(parts.last().unwrap(), &Partition::new(vec![1; 8]));
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(Partition::new(vec![3, 1]).transpose(), Partition::new(vec![2, 1, 1]));
        assert_eq!(Partition::empty().transpose(), Partition::empty());
        assert_eq!(Partition::new(vec![2, 2]).transpose(), Partition::new(vec![2, 2]));
    }

    #[test]
    fn p_distinct_sizes_small_values() {
        assert_eq!(p_distinct_sizes(0, 0), 1);
        assert_eq!(p_distinct_sizes(3, 1), 2); // 3 and 1+1+1
        assert_eq!(p_distinct_sizes(3, 2), 1); // 2+1
        // direct enumeration oracle
        for l in 0..=12u32 {
            for k in 0..=l {
                let direct = enumerate_partitions(l)
                    .iter()
                    .filter(|p| p.distinct_sizes() == k as usize)
                    .count() as u64;
                assert_eq!(p_distinct_sizes(l, k), direct, "p({l},{k})");
            }
        }
    }

    #[test]
    fn bipartition_count_small() {
        assert_eq!(bipartition_count(2), 5);
        assert_eq!(enumerate_bipartitions(2).len(), 5);
        assert_eq!(enumerate_bipartitions(3).len(), bipartition_count(3) as usize);
    }

    #[test]
    fn totient_values() {
        assert_eq!(totient(1), 1);
        assert_eq!(totient(2), 1);
        assert_eq!(totient(3), 2);
        assert_eq!(totient(6), 2);
        assert_eq!(totient(2 * 5), 4);
    }

    proptest! {
        #[test]
        fn transpose_is_an_involution(parts in proptest::collection::vec(1u32..9, 0..8)) {
            let p = Partition::new(parts);
            prop_assert_eq!(p.transpose().transpose(), p.clone());
            prop_assert_eq!(p.transpose().size(), p.size());
        }
    }
}
