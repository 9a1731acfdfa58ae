//! Signed permutations and brute-force subgroup analysis for the
//! hyperoctahedral groups and their type-D subgroups.

use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, VecDeque};

/// A signed permutation of {1..r}: coordinate i maps to +-e_{perm[i]}.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedPerm {
    pub perm: Vec<u8>,
    pub neg: Vec<bool>,
}

impl SignedPerm {
    pub fn identity(rank: usize) -> Self {
        SignedPerm { perm: (0..rank as u8).collect(), neg: vec![false; rank] }
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    /// Image of basis vector i: (index, negated).
    pub fn image(&self, i: usize) -> (usize, bool) {
        (self.perm[i] as usize, self.neg[i])
    }

    /// self applied after other: (self * other)(x) = self(other(x)).
    pub fn compose(&self, other: &SignedPerm) -> SignedPerm {
        let rank = self.rank();
        let mut perm = vec![0u8; rank];
        let mut neg = vec![false; rank];
        for i in 0..rank {
            let (j, s1) = other.image(i);
            let (k, s2) = self.image(j);
            perm[i] = k as u8;
            neg[i] = s1 ^ s2;
        }
        SignedPerm { perm, neg }
    }

    pub fn inverse(&self) -> SignedPerm {
        let rank = self.rank();
        let mut perm = vec![0u8; rank];
        let mut neg = vec![false; rank];
        for i in 0..rank {
            let (j, s) = self.image(i);
            perm[j] = i as u8;
            neg[j] = s;
        }
        SignedPerm { perm, neg }
    }

    pub fn sign_count(&self) -> usize {
        self.neg.iter().filter(|&&b| b).count()
    }

    /// Transposition e_i <-> e_j (the reflection in e_i - e_j).
    pub fn transposition(rank: usize, i: usize, j: usize) -> SignedPerm {
        let mut p = SignedPerm::identity(rank);
        p.perm[i] = j as u8;
        p.perm[j] = i as u8;
        p
    }

    /// The reflection in e_i + e_j: swap with both signs flipped.
    pub fn neg_transposition(rank: usize, i: usize, j: usize) -> SignedPerm {
        let mut p = SignedPerm::transposition(rank, i, j);
        p.neg[i] = true;
        p.neg[j] = true;
        p
    }

    /// The sign flip at coordinate i (reflection in e_i or 2e_i).
    pub fn sign_flip(rank: usize, i: usize) -> SignedPerm {
        let mut p = SignedPerm::identity(rank);
        p.neg[i] = true;
        p
    }

    /// Action on a character of the sign 2-group (a dual F2 vector indexed
    /// by coordinates): characters pull back along the inverse, which for
    /// the coordinate 2-group is the permutation action on positions.
    pub fn act_on_character(&self, chi: &[bool]) -> Vec<bool> {
        let mut out = vec![false; chi.len()];
        for (i, &bit) in chi.iter().enumerate() {
            out[self.perm[i] as usize] = bit;
        }
        out
    }
}

/// Families of little Weyl groups arising here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum WeylFamily {
    /// Full hyperoctahedral group (type B/C): all signed permutations.
    B,
    /// Type D: signed permutations with an even number of sign flips.
    D,
}

/// All elements of the group, enumerated.
pub fn weyl_elements(family: WeylFamily, rank: usize) -> Vec<SignedPerm> {
    let mut perms: Vec<Vec<u8>> = Vec::new();
    let mut items: Vec<u8> = (0..rank as u8).collect();
    permute(&mut items, 0, &mut perms);
    fn permute(items: &mut Vec<u8>, k: usize, out: &mut Vec<Vec<u8>>) {
        if k == items.len() {
            out.push(items.clone());
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            permute(items, k + 1, out);
            items.swap(k, i);
        }
    }
    let mut out = Vec::new();
    for perm in perms {
        for mask in 0..(1u32 << rank) {
            let neg: Vec<bool> = (0..rank).map(|i| mask >> i & 1 == 1).collect();
            let count = neg.iter().filter(|&&b| b).count();
            if family == WeylFamily::D && count % 2 == 1 {
                continue;
            }
            out.push(SignedPerm { perm: perm.clone(), neg });
        }
    }
    out
}

/// Closure of a generating set under composition (BFS).
pub fn subgroup_closure(rank: usize, gens: &[SignedPerm]) -> BTreeSet<SignedPerm> {
    let mut seen: BTreeSet<SignedPerm> = BTreeSet::new();
    let id = SignedPerm::identity(rank);
    seen.insert(id.clone());
    let mut queue: VecDeque<SignedPerm> = VecDeque::new();
    queue.push_back(id);
    while let Some(g) = queue.pop_front() {
        for h in gens {
            let next = h.compose(&g);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen
}

/// A small generating set found greedily from an element list.
pub fn greedy_generators(rank: usize, elements: &BTreeSet<SignedPerm>) -> Vec<SignedPerm> {
    let mut gens: Vec<SignedPerm> = Vec::new();
    let mut span: BTreeSet<SignedPerm> = BTreeSet::new();
    span.insert(SignedPerm::identity(rank));
    for g in elements {
        if !span.contains(g) {
            gens.push(g.clone());
            span = subgroup_closure(rank, &gens);
            if span.len() == elements.len() {
                break;
            }
        }
    }
    gens
}

/// Derived subgroup: normal closure of the commutators of a generating set.
pub fn derived_subgroup(rank: usize, elements: &BTreeSet<SignedPerm>) -> BTreeSet<SignedPerm> {
    let gens = greedy_generators(rank, elements);
    let mut comm_gens: BTreeSet<SignedPerm> = BTreeSet::new();
    for a in &gens {
        for b in &gens {
            let c = a
                .compose(b)
                .compose(&a.inverse())
                .compose(&b.inverse());
            comm_gens.insert(c);
        }
    }
    // normal closure: close under conjugation by group generators and products
    let mut current: Vec<SignedPerm> = comm_gens.into_iter().collect();
    loop {
        let closure = subgroup_closure(rank, &current);
        let mut grew = false;
        let mut extended = current.clone();
        for g in &gens {
            let gi = g.inverse();
            for x in &closure {
                let conj = g.compose(x).compose(&gi);
                if !closure.contains(&conj) {
                    extended.push(conj);
                    grew = true;
                }
            }
        }
        if !grew {
            return closure;
        }
        current = extended;
    }
}

/// Number of strict steps in the derived series before it stabilizes:
/// the derived length for solvable groups, the depth of the perfect core
/// otherwise.
pub fn derived_length(rank: usize, elements: &BTreeSet<SignedPerm>) -> u32 {
    let mut current = elements.clone();
    let mut length = 0;
    loop {
        if current.len() == 1 {
            return length;
        }
        let next = derived_subgroup(rank, &current);
        if next.len() == current.len() {
            return length;
        }
        current = next;
        length += 1;
    }
}

/// Invariant factors d_1 | d_2 | ... of the abelian quotient G/N.
/// N must be normal in G with abelian quotient; both are given by element
/// sets inside a common ambient group.
pub fn quotient_invariants(
    group: &BTreeSet<SignedPerm>,
    normal: &BTreeSet<SignedPerm>,
) -> Vec<u64> {
    assert!(group.len().is_multiple_of(normal.len()));
    let order = (group.len() / normal.len()) as u64;
    if order == 1 {
        return Vec::new();
    }
    // assign coset ids by sweeping the group once
    let mut coset_of: BTreeMap<SignedPerm, usize> = BTreeMap::new();
    let mut reps: Vec<SignedPerm> = Vec::new();
    for g in group {
        if coset_of.contains_key(g) {
            continue;
        }
        let id = reps.len();
        reps.push(g.clone());
        for n in normal {
            coset_of.insert(g.compose(n), id);
        }
    }
    assert_eq!(reps.len() as u64, order);
    let coset = |g: &SignedPerm| *coset_of.get(g).expect("element of the group");
    let id_coset = coset(&SignedPerm::identity(reps[0].rank()));
    // element orders in the quotient
    let mut orders: Vec<u64> = Vec::with_capacity(reps.len());
    for r in &reps {
        let mut acc = r.clone();
        let mut k = 1u64;
        while coset(&acc) != id_coset {
            acc = acc.compose(r);
            k += 1;
            assert!(k <= order);
        }
        orders.push(k);
    }
    // factor the quotient prime by prime via order counting
    let mut prime_powers: Vec<Vec<u64>> = Vec::new(); // per prime: cyclic factors p^j
    let mut n = order;
    let mut p = 2u64;
    while n > 1 {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            // count elements with x^{p^k} trivial, k = 0, 1, ...
            let mut counts = vec![1u64];
            loop {
                let pk = p.pow(counts.len() as u32);
                let c = orders
                    .iter()
                    .filter(|&&o| {
                        let mut q = o;
                        // o divides pk iff o is a p-power <= pk
                        while q % p == 0 {
                            q /= p;
                        }
                        q == 1 && o <= pk
                    })
                    .count() as u64;
                if c == *counts.last().unwrap() {
                    break;
                }
                counts.push(c);
                if counts.len() > 40 {
                    break;
                }
            }
            // rank at level k: log_p(counts[k] / counts[k-1]) cyclic factors of order >= p^k
            let mut factors: Vec<u64> = Vec::new();
            for k in 1..counts.len() {
                let ratio = counts[k] / counts[k - 1];
                let mut rank_k = 0;
                let mut r = ratio;
                while r > 1 {
                    assert!(r % p == 0);
                    r /= p;
                    rank_k += 1;
                }
                // rank_k cyclic factors have order >= p^k; extend the list
                while factors.len() < rank_k {
                    factors.push(1);
                }
                for f in factors.iter_mut().take(rank_k) {
                    *f *= p;
                }
            }
            factors.sort_unstable();
            prime_powers.push(factors);
        }
        p += 1;
    }
    // combine: invariant factors pair the largest prime-power factors together
    let max_len = prime_powers.iter().map(|v| v.len()).max().unwrap_or(0);
    let mut invariants = vec![1u64; max_len];
    for factors in &prime_powers {
        for (i, f) in factors.iter().rev().enumerate() {
            invariants[max_len - 1 - i] *= f;
        }
    }
    invariants.retain(|&d| d > 1);
    invariants
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_orders() {
        assert_eq!(weyl_elements(WeylFamily::B, 3).len(), 48);
        assert_eq!(weyl_elements(WeylFamily::D, 3).len(), 24);
        assert_eq!(weyl_elements(WeylFamily::B, 0).len(), 1);
    }

    #[test]
    fn compose_and_inverse_satisfy_group_laws() {
        let elems = weyl_elements(WeylFamily::B, 3);
        let id = SignedPerm::identity(3);
        for g in elems.iter().take(20) {
            assert_eq!(g.compose(&g.inverse()), id);
            assert_eq!(g.inverse().compose(g), id);
        }
    }

    #[test]
    fn closure_of_type_b_generators_is_whole_group() {
        let rank = 3;
        let gens = vec![
            SignedPerm::transposition(rank, 0, 1),
            SignedPerm::transposition(rank, 1, 2),
            SignedPerm::sign_flip(rank, 2),
        ];
        assert_eq!(subgroup_closure(rank, &gens).len(), 48);
    }

    #[test]
    fn quotient_invariants_of_b2_abelianization() {
        let rank = 2;
        let group: BTreeSet<_> = weyl_elements(WeylFamily::B, rank).into_iter().collect();
        let derived = derived_subgroup(rank, &group);
        // B_2 (dihedral of order 8) has abelianization (Z/2)^2
        assert_eq!(quotient_invariants(&group, &derived), vec![2, 2]);
    }

    #[test]
    fn symmetric_group_abelianization_is_z2() {
        let rank = 3;
        let gens = vec![
            SignedPerm::transposition(rank, 0, 1),
            SignedPerm::transposition(rank, 1, 2),
        ];
        let s3 = subgroup_closure(rank, &gens);
        assert_eq!(s3.len(), 6);
        let derived = derived_subgroup(rank, &s3);
        assert_eq!(derived.len(), 3);
        assert_eq!(quotient_invariants(&s3, &derived), vec![2]);
        assert_eq!(derived_length(rank, &s3), 2);
    }

    #[test]
    fn character_action_permutes_positions() {
        let w = SignedPerm::transposition(3, 0, 1);
        assert_eq!(w.act_on_character(&[true, false, false]), vec![false, true, false]);
        let w = SignedPerm::sign_flip(3, 0);
        assert_eq!(w.act_on_character(&[true, false, true]), vec![true, false, true]);
    }
}
