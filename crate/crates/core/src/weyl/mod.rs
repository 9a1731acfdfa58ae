//! Restricted root data, the component 2-group of the Cartan-subspace
//! centralizer, and brute-force stabilizer computations in the little Weyl
//! group.
//!
//! Everything here is verified by exhaustive group enumeration at small
//! rank. Subgroups are compared by invariants (order, abelianization,
//! reflection count, derived length) rather than abstract isomorphisms.

pub mod group;

use crate::diagram::SymmetricPair;
use crate::error::Error;
use group::{
    derived_length, derived_subgroup, quotient_invariants, subgroup_closure, weyl_elements,
    SignedPerm, WeylFamily,
};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// One positive restricted root with the dimension of its root space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RestrictedRoot {
    /// Coefficients on the coordinate functionals e_1..e_r.
    pub vector: Vec<i32>,
    pub multiplicity: u32,
}

/// A reflection of the little Weyl group together with its delta value and,
/// when delta = 1, the image in the component 2-group of the coroot of the
/// unique positive real root inducing it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReflectionData {
    pub label: String,
    pub element: SignedPerm,
    pub delta: u32,
    pub coroot_image: Option<Vec<bool>>,
}

/// Restricted root datum of a pair: root multiplicities, the reflection
/// table with delta values and coroot images, and the component 2-group I.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RestrictedRootDatum {
    pub pair: SymmetricPair,
    pub rank: u32,
    pub family: WeylFamily,
    pub roots: Vec<RestrictedRoot>,
    pub reflections: Vec<ReflectionData>,
    pub i_rank: u32,
    pub i0_rank: u32,
    /// The character of I through which the component group of K acts.
    pub iota: Vec<bool>,
}

/// Short-root block of a pair: multiplicities of e_i and 2e_i and the
/// coroot image of the sign-flip reflection when its delta is 1.
struct ShortRoots {
    short: u32,
    long: u32,
    flip_coroot: FlipCoroot,
}

enum FlipCoroot {
    /// coroot image is the basis vector b_i
    Basis,
    /// coroot image is the zero vector
    Zero,
    /// coroot image is a fixed vector (rank-1 central cases)
    Fixed(Vec<bool>),
}

fn pair_layout(pair: SymmetricPair) -> (WeylFamily, u32, u32, ShortRoots, u32, u32, Vec<bool>) {
    // (family, rank, multiplicity of e_i +- e_j, short roots, i_rank,
    //  i0_rank, iota)
    match pair {
        SymmetricPair::AiiiSl { p, q } | SymmetricPair::AiiiPgl { p, q } => {
            let r = p.min(q);
            let diff = p.max(q) - r;
            let sl = matches!(pair, SymmetricPair::AiiiSl { .. });
            let (i_rank, i0_rank) = if p == q && p > 0 {
                if sl {
                    (1, 1)
                } else {
                    (1, 0)
                }
            } else {
                (0, 0)
            };
            let flip = if p == q && p > 0 {
                if sl {
                    FlipCoroot::Fixed(vec![true])
                } else {
                    FlipCoroot::Fixed(vec![false])
                }
            } else {
                FlipCoroot::Zero
            };
            let iota = if !sl && p == q && p > 0 && p % 2 == 1 {
                vec![true]
            } else {
                vec![false; i_rank as usize]
            };
            (
                WeylFamily::B,
                r,
                2,
                ShortRoots { short: 2 * diff, long: 1, flip_coroot: flip },
                i_rank,
                i0_rank,
                iota,
            )
        }
        SymmetricPair::Glgl { p, q } => {
            let r = p.min(q);
            let diff = p.max(q) - r;
            (
                WeylFamily::B,
                r,
                2,
                ShortRoots { short: 2 * diff, long: 1, flip_coroot: FlipCoroot::Zero },
                0,
                0,
                Vec::new(),
            )
        }
        SymmetricPair::Bdi { p, q } => {
            let r = p.min(q);
            let diff = p.max(q) - r;
            let family = if diff == 0 { WeylFamily::D } else { WeylFamily::B };
            let iota = if (p + q) % 2 == 1 && r > 0 {
                vec![true; r as usize]
            } else {
                vec![false; r as usize]
            };
            (
                family,
                r,
                1,
                ShortRoots { short: diff, long: 0, flip_coroot: FlipCoroot::Zero },
                r,
                r.saturating_sub(1),
                iota,
            )
        }
        SymmetricPair::Ci { n } => (
            WeylFamily::B,
            n,
            1,
            ShortRoots { short: 0, long: 1, flip_coroot: FlipCoroot::Basis },
            n,
            n,
            vec![false; n as usize],
        ),
        SymmetricPair::Cii { p, q } => {
            let r = p.min(q);
            let diff = p.max(q) - r;
            (
                WeylFamily::B,
                r,
                4,
                ShortRoots { short: 4 * diff, long: 3, flip_coroot: FlipCoroot::Zero },
                0,
                0,
                Vec::new(),
            )
        }
        SymmetricPair::Diii { n } => {
            let m = n / 2;
            let short = if n % 2 == 1 { 4 } else { 0 };
            (
                WeylFamily::B,
                m,
                4,
                ShortRoots { short, long: 1, flip_coroot: FlipCoroot::Zero },
                0,
                0,
                Vec::new(),
            )
        }
    }
}

/// The restricted root datum of the pair.
pub fn restricted_root_datum(pair: SymmetricPair) -> RestrictedRootDatum {
    let (family, rank, pair_mult, short, i_rank, i0_rank, iota) = pair_layout(pair);
    let r = rank as usize;
    let mut roots = Vec::new();
    let mut reflections = Vec::new();
    let basis_vec = |i: usize, c: i32| {
        let mut v = vec![0i32; r];
        v[i] = c;
        v
    };
    let pair_vec = |i: usize, j: usize, cj: i32| {
        let mut v = vec![0i32; r];
        v[i] = 1;
        v[j] = cj;
        v
    };
    for i in 0..r {
        for j in i + 1..r {
            for sign in [-1, 1] {
                roots.push(RestrictedRoot { vector: pair_vec(i, j, sign), multiplicity: pair_mult });
                let coroot_image = if pair_mult == 1 {
                    let mut v = vec![false; i_rank as usize];
                    if i_rank > 0 {
                        v[i] = true;
                        v[j] = true;
                    }
                    Some(v)
                } else {
                    None
                };
                let element = if sign < 0 {
                    SignedPerm::transposition(r, i, j)
                } else {
                    SignedPerm::neg_transposition(r, i, j)
                };
                reflections.push(ReflectionData {
                    label: format!("e{}{}e{}", i + 1, if sign < 0 { '-' } else { '+' }, j + 1),
                    element,
                    delta: pair_mult,
                    coroot_image,
                });
            }
        }
    }
    if family == WeylFamily::B {
        let flip_delta = short.short + short.long;
        for i in 0..r {
            if short.long > 0 {
                roots.push(RestrictedRoot { vector: basis_vec(i, 2), multiplicity: short.long });
            }
            if short.short > 0 {
                roots.push(RestrictedRoot { vector: basis_vec(i, 1), multiplicity: short.short });
            }
            let coroot_image = if flip_delta == 1 {
                Some(match &short.flip_coroot {
                    FlipCoroot::Basis => {
                        let mut v = vec![false; i_rank as usize];
                        v[i] = true;
                        v
                    }
                    FlipCoroot::Zero => vec![false; i_rank as usize],
                    FlipCoroot::Fixed(v) => v.clone(),
                })
            } else {
                None
            };
            reflections.push(ReflectionData {
                label: if short.long > 0 { format!("2e{}", i + 1) } else { format!("e{}", i + 1) },
                element: SignedPerm::sign_flip(r, i),
                delta: flip_delta,
                coroot_image,
            });
        }
    }
    RestrictedRootDatum { pair, rank, family, roots, reflections, i_rank, i0_rank, iota }
}

/// Description of the 2-group I = Z_K(a) / Z_K(a)^0.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IGroup {
    pub rank: u32,
    #[serde(rename = "identityComponentRank")]
    pub identity_component_rank: u32,
    /// Images of the delta = 1 reflection coroots, labeled.
    #[serde(rename = "corootImages")]
    pub coroot_images: Vec<(String, Vec<bool>)>,
    pub iota: Vec<bool>,
}

/// The component 2-group data of the pair.
pub fn i_group(pair: SymmetricPair) -> IGroup {
    let datum = restricted_root_datum(pair);
    let coroot_images = datum
        .reflections
        .iter()
        .filter_map(|refl| refl.coroot_image.as_ref().map(|v| (refl.label.clone(), v.clone())))
        .collect();
    IGroup {
        rank: datum.i_rank,
        identity_component_rank: datum.i0_rank,
        coroot_images,
        iota: datum.iota,
    }
}

/// A character of I as a dual F2 vector over the standard generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ICharacter(pub Vec<bool>);

impl ICharacter {
    /// The standard orbit representative with the first m coordinates set.
    pub fn standard(rank: u32, m: u32) -> Self {
        assert!(m <= rank);
        ICharacter((0..rank).map(|i| i < m).collect())
    }

    pub fn trivial(rank: u32) -> Self {
        ICharacter(vec![false; rank as usize])
    }

    /// True when the character takes the value -1 on the element.
    fn eval(&self, v: &[bool]) -> bool {
        self.0.iter().zip(v).fold(false, |acc, (&a, &b)| acc ^ (a && b))
    }
}

impl std::fmt::Display for ICharacter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for &b in &self.0 {
            write!(f, "{}", if b { 1 } else { 0 })?;
        }
        Ok(())
    }
}

/// The standard orbit representatives chi_0 .. chi_r on the character group
/// of I. For pairs with trivial I this is just the trivial character.
pub fn character_orbit_reps(pair: SymmetricPair) -> Vec<ICharacter> {
    let datum = restricted_root_datum(pair);
    match pair {
        SymmetricPair::Bdi { .. } | SymmetricPair::Ci { .. } => {
            (0..=datum.i_rank).map(|m| ICharacter::standard(datum.i_rank, m)).collect()
        }
        SymmetricPair::AiiiSl { p, q } | SymmetricPair::AiiiPgl { p, q } if p == q && p > 0 => {
            vec![ICharacter::standard(1, 0), ICharacter::standard(1, 1)]
        }
        _ => vec![ICharacter::trivial(datum.i_rank)],
    }
}

/// Orbit decomposition of the full character group under the little Weyl
/// group, by exhaustive action. Returns the orbits as sorted character sets.
pub fn character_orbits(
    pair: SymmetricPair,
    bound: u32,
) -> Result<Vec<BTreeSet<ICharacter>>, Error> {
    let datum = restricted_root_datum(pair);
    if datum.rank > bound {
        return Err(Error::BruteForceBound { rank: datum.rank, bound });
    }
    // The Weyl action permutes the coordinate generators of I; for the
    // rank-1 central cases the action is trivial.
    let permutation_action = datum.i_rank == datum.rank;
    let elems = weyl_elements(datum.family, datum.rank as usize);
    let chars: Vec<ICharacter> = (0..(1u64 << datum.i_rank))
        .map(|mask| ICharacter((0..datum.i_rank).map(|i| mask >> i & 1 == 1).collect()))
        .collect();
    let mut orbits: Vec<BTreeSet<ICharacter>> = Vec::new();
    let mut assigned: BTreeSet<ICharacter> = BTreeSet::new();
    for chi in &chars {
        if assigned.contains(chi) {
            continue;
        }
        let mut orbit = BTreeSet::new();
        if permutation_action {
            for w in &elems {
                orbit.insert(ICharacter(w.act_on_character(&chi.0)));
            }
        } else {
            orbit.insert(chi.clone());
        }
        for c in &orbit {
            assigned.insert(c.clone());
        }
        orbits.push(orbit);
    }
    Ok(orbits)
}

/// The two stabilizer subgroups as element sets: the full stabilizer of the
/// character in the little Weyl group, and the reflection subgroup cut out
/// by the delta/character conditions.
pub fn stabilizer_subgroups(
    pair: SymmetricPair,
    chi: &ICharacter,
    bound: u32,
) -> Result<(BTreeSet<SignedPerm>, BTreeSet<SignedPerm>), Error> {
    let datum = restricted_root_datum(pair);
    if datum.rank > bound {
        return Err(Error::BruteForceBound { rank: datum.rank, bound });
    }
    assert_eq!(chi.0.len() as u32, datum.i_rank, "character rank mismatch");
    let rank = datum.rank as usize;
    let permutation_action = datum.i_rank == datum.rank;
    let elems = weyl_elements(datum.family, rank);
    let stab: BTreeSet<SignedPerm> = elems
        .into_iter()
        .filter(|w| !permutation_action || w.act_on_character(&chi.0) == chi.0)
        .collect();
    // reflection subgroup: delta > 1, or delta = 1 and chi(coroot) = +1
    let gens: Vec<SignedPerm> = datum
        .reflections
        .iter()
        .filter(|refl| {
            if refl.delta > 1 {
                true
            } else {
                let v = refl.coroot_image.as_ref().expect("delta=1 reflection has a real coroot");
                !chi.eval(v)
            }
        })
        .map(|refl| refl.element.clone())
        .collect();
    let w0 = subgroup_closure(rank, &gens);
    debug_assert!(w0.iter().all(|g| stab.contains(g)), "W0 must lie in the stabilizer");
    Ok((stab, w0))
}

/// Invariants of the stabilizer pair for one character.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StabilizerData {
    pub pair: SymmetricPair,
    pub chi: ICharacter,
    #[serde(rename = "stabilizerOrder")]
    pub stabilizer_order: u64,
    #[serde(rename = "w0Order")]
    pub w0_order: u64,
    /// Invariant factors of the quotient.
    pub quotient: Vec<u64>,
    #[serde(rename = "stabilizerReflections")]
    pub stabilizer_reflections: usize,
    #[serde(rename = "w0Reflections")]
    pub w0_reflections: usize,
    #[serde(rename = "stabilizerAbelianization")]
    pub stabilizer_abelianization: Vec<u64>,
    #[serde(rename = "w0Abelianization")]
    pub w0_abelianization: Vec<u64>,
    #[serde(rename = "stabilizerDerivedLength")]
    pub stabilizer_derived_length: u32,
    #[serde(rename = "w0DerivedLength")]
    pub w0_derived_length: u32,
}

/// Computes the stabilizer of the character in the little Weyl group, the
/// reflection subgroup, and their comparison invariants. Checks along the
/// way that the reflection subgroup is normal in the stabilizer.
pub fn stabilizer(
    pair: SymmetricPair,
    chi: &ICharacter,
    bound: u32,
) -> Result<StabilizerData, Error> {
    let datum = restricted_root_datum(pair);
    let (stab, w0) = stabilizer_subgroups(pair, chi, bound)?;
    let rank = datum.rank as usize;
    // normality under a generating set suffices
    for g in group::greedy_generators(rank, &stab) {
        let gi = g.inverse();
        for x in &w0 {
            let conj = g.compose(x).compose(&gi);
            assert!(w0.contains(&conj), "reflection subgroup must be normal in the stabilizer");
        }
    }
    let quotient = quotient_invariants(&stab, &w0);
    let reflections: Vec<&SignedPerm> = datum.reflections.iter().map(|r| &r.element).collect();
    let count_reflections =
        |set: &BTreeSet<SignedPerm>| reflections.iter().filter(|r| set.contains(**r)).count();
    let stab_derived = derived_subgroup(rank, &stab);
    let w0_derived = derived_subgroup(rank, &w0);
    Ok(StabilizerData {
        pair,
        chi: chi.clone(),
        stabilizer_order: stab.len() as u64,
        w0_order: w0.len() as u64,
        quotient,
        stabilizer_reflections: count_reflections(&stab),
        w0_reflections: count_reflections(&w0),
        stabilizer_abelianization: quotient_invariants(&stab, &stab_derived),
        w0_abelianization: quotient_invariants(&w0, &w0_derived),
        stabilizer_derived_length: derived_length(rank, &stab),
        w0_derived_length: derived_length(rank, &w0),
    })
}

/// The stabilizer pair claimed by the small-rank tables, constructed
/// concretely as block subgroups: elements whose permutation part preserves
/// the first m coordinates, with per-family sign-parity conditions. None
/// for pairs without a tabulated claim.
pub fn expected_stabilizer(
    pair: SymmetricPair,
    m: u32,
) -> Option<(BTreeSet<SignedPerm>, BTreeSet<SignedPerm>)> {
    let datum = restricted_root_datum(pair);
    let rank = datum.rank as usize;
    let m = m as usize;
    if m > rank {
        return None;
    }
    let block_preserving = |w: &SignedPerm| (0..rank).all(|i| (i < m) == ((w.perm[i] as usize) < m));
    let first_block_even =
        |w: &SignedPerm| (0..m).filter(|&i| w.neg[i]).count() % 2 == 0;
    let per_block_even = |w: &SignedPerm| {
        first_block_even(w) && (m..rank).filter(|&i| w.neg[i]).count() % 2 == 0
    };
    let elems = weyl_elements(datum.family, rank);
    match pair {
        SymmetricPair::Ci { .. } => {
            // stabilizer: all block-preserving signed permutations; the
            // reflection subgroup flips signs evenly on the first block
            let w: BTreeSet<_> = elems.iter().filter(|g| block_preserving(g)).cloned().collect();
            let w0: BTreeSet<_> =
                w.iter().filter(|g| first_block_even(g)).cloned().collect();
            Some((w, w0))
        }
        SymmetricPair::Bdi { p, q } if p == q => {
            // split even orthogonal: everything inside the type-D group; the
            // reflection subgroup has even signs within each block
            let w: BTreeSet<_> = elems.iter().filter(|g| block_preserving(g)).cloned().collect();
            let w0: BTreeSet<_> = w.iter().filter(|g| per_block_even(g)).cloned().collect();
            Some((w, w0))
        }
        SymmetricPair::Bdi { .. } => {
            // odd or non-split even orthogonal: stabilizer and reflection
            // subgroup coincide with the full block group
            let w: BTreeSet<_> = elems.iter().filter(|g| block_preserving(g)).cloned().collect();
            Some((w.clone(), w))
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_data_match_the_tables() {
        // split orthogonal, odd ambient: type B_2, short multiplicity 1
        let datum = restricted_root_datum(SymmetricPair::Bdi { p: 3, q: 2 });
        assert_eq!(datum.rank, 2);
        assert_eq!(datum.family, WeylFamily::B);
        let short = datum.roots.iter().find(|r| r.vector == vec![1, 0]).unwrap();
        assert_eq!(short.multiplicity, 1);

        // doubled symplectic: multiplicities 4, 3, 4(n-2q)
        let datum = restricted_root_datum(SymmetricPair::Cii { p: 2, q: 1 });
        assert_eq!(datum.rank, 1);
        let long = datum.roots.iter().find(|r| r.vector == vec![2]).unwrap();
        assert_eq!(long.multiplicity, 3);
        let short = datum.roots.iter().find(|r| r.vector == vec![1]).unwrap();
        assert_eq!(short.multiplicity, 4);

        // symplectic split: type C, all multiplicity 1
        let datum = restricted_root_datum(SymmetricPair::Ci { n: 2 });
        assert!(datum.roots.iter().all(|r| r.multiplicity == 1));
        assert_eq!(datum.i_rank, 2);
        assert_eq!(datum.i0_rank, 2);

        // split even orthogonal: type D, no short roots
        let datum = restricted_root_datum(SymmetricPair::Bdi { p: 3, q: 3 });
        assert_eq!(datum.family, WeylFamily::D);
        assert!(datum.roots.iter().all(|r| r.vector.iter().filter(|&&c| c != 0).count() == 2));
    }

    #[test]
    fn i_group_ranks() {
        let g = i_group(SymmetricPair::Cii { p: 2, q: 1 });
        assert_eq!((g.rank, g.identity_component_rank), (0, 0));
        let g = i_group(SymmetricPair::Bdi { p: 3, q: 2 });
        assert_eq!((g.rank, g.identity_component_rank), (2, 1));
        let g = i_group(SymmetricPair::Ci { n: 3 });
        assert_eq!((g.rank, g.identity_component_rank), (3, 3));
        let g = i_group(SymmetricPair::AiiiSl { p: 2, q: 2 });
        assert_eq!((g.rank, g.identity_component_rank), (1, 1));
        let g = i_group(SymmetricPair::AiiiPgl { p: 2, q: 2 });
        assert_eq!((g.rank, g.identity_component_rank), (1, 0));
    }

    #[test]
    fn iota_is_nontrivial_exactly_for_odd_orthogonal_and_odd_half_pgl() {
        let g = i_group(SymmetricPair::Bdi { p: 3, q: 2 });
        assert!(g.iota.iter().any(|&b| b));
        let g = i_group(SymmetricPair::Bdi { p: 3, q: 3 });
        assert!(!g.iota.iter().any(|&b| b));
        let g = i_group(SymmetricPair::AiiiPgl { p: 3, q: 3 });
        assert!(g.iota.iter().any(|&b| b));
        let g = i_group(SymmetricPair::AiiiPgl { p: 2, q: 2 });
        assert!(!g.iota.iter().any(|&b| b));
    }

    #[test]
    fn orbit_counts_match_the_lemma() {
        // split orthogonal: q + 1 orbits
        let orbits = character_orbits(SymmetricPair::Bdi { p: 3, q: 2 }, 7).unwrap();
        assert_eq!(orbits.len(), 3);
        // symplectic split: n + 1 orbits
        let orbits = character_orbits(SymmetricPair::Ci { n: 3 }, 7).unwrap();
        assert_eq!(orbits.len(), 4);
        // the standard representatives hit each orbit exactly once
        let reps = character_orbit_reps(SymmetricPair::Ci { n: 3 });
        assert_eq!(reps.len(), 4);
        for orbit in &orbits {
            assert_eq!(reps.iter().filter(|r| orbit.contains(r)).count(), 1);
        }
        // trivial I: single orbit
        let orbits = character_orbits(SymmetricPair::Cii { p: 2, q: 2 }, 7).unwrap();
        assert_eq!(orbits.len(), 1);
    }

    #[test]
    fn spot_stabilizer_symplectic_split_rank_two() {
        // chi_1 for the rank-2 symplectic split pair: orders 4 and 2
        let chi = ICharacter::standard(2, 1);
        let data = stabilizer(SymmetricPair::Ci { n: 2 }, &chi, 7).unwrap();
        assert_eq!(data.stabilizer_order, 4);
        assert_eq!(data.w0_order, 2);
        assert_eq!(data.quotient, vec![2]);
    }

    #[test]
    fn trivial_character_is_stabilized_by_everything() {
        for pair in [
            SymmetricPair::Ci { n: 3 },
            SymmetricPair::Bdi { p: 4, q: 3 },
            SymmetricPair::Bdi { p: 3, q: 3 },
        ] {
            let datum = restricted_root_datum(pair);
            let chi = ICharacter::trivial(datum.i_rank);
            let data = stabilizer(pair, &chi, 7).unwrap();
            let full = weyl_elements(datum.family, datum.rank as usize).len() as u64;
            assert_eq!(data.stabilizer_order, full, "{pair}");
            assert_eq!(data.w0_order, full, "{pair}");
        }
    }

    #[test]
    fn split_even_orthogonal_quotient_is_z2() {
        // split type D rank 3: chi_m has index-2 reflection subgroup for
        // 1 <= m <= n-1, equality at m = 0 and m = n
        for m in 1..=2 {
            let chi = ICharacter::standard(3, m);
            let data = stabilizer(SymmetricPair::Bdi { p: 3, q: 3 }, &chi, 7).unwrap();
            assert_eq!(data.quotient, vec![2], "m={m}");
        }
        for m in [0, 3] {
            let chi = ICharacter::standard(3, m);
            let data = stabilizer(SymmetricPair::Bdi { p: 3, q: 3 }, &chi, 7).unwrap();
            assert!(data.quotient.is_empty(), "m={m}");
        }
    }

    #[test]
    fn computed_stabilizers_equal_the_tabulated_block_groups() {
        for (pair, ms) in [
            (SymmetricPair::Ci { n: 3 }, 0..=3u32),
            (SymmetricPair::Bdi { p: 3, q: 3 }, 0..=3u32),
            (SymmetricPair::Bdi { p: 4, q: 3 }, 0..=3u32),
            (SymmetricPair::Bdi { p: 5, q: 3 }, 0..=3u32),
        ] {
            for m in ms {
                let chi = ICharacter::standard(restricted_root_datum(pair).i_rank, m);
                let (w, w0) = stabilizer_subgroups(pair, &chi, 7).unwrap();
                let (ew, ew0) = expected_stabilizer(pair, m).unwrap();
                assert_eq!(w, ew, "{pair} m={m}: stabilizer");
                assert_eq!(w0, ew0, "{pair} m={m}: reflection subgroup");
            }
        }
    }

    #[test]
    fn rank_bound_is_enforced() {
        let chi = ICharacter::trivial(8);
        assert!(matches!(
            stabilizer(SymmetricPair::Ci { n: 8 }, &chi, 7),
            Err(Error::BruteForceBound { .. })
        ));
    }

    #[test]
    fn delta_one_reflections_come_from_multiplicity_one_roots_in_split_pairs() {
        for pair in [SymmetricPair::Ci { n: 3 }, SymmetricPair::Bdi { p: 4, q: 3 }] {
            let datum = restricted_root_datum(pair);
            for refl in &datum.reflections {
                if refl.delta == 1 {
                    // every root inducing this reflection has multiplicity 1
                    let total: u32 = datum
                        .roots
                        .iter()
                        .filter(|root| reflection_of(&root.vector) == refl.element)
                        .map(|root| root.multiplicity)
                        .sum();
                    assert_eq!(total, refl.delta, "{pair}: {}", refl.label);
                }
            }
        }

        fn reflection_of(vector: &[i32]) -> SignedPerm {
            let rank = vector.len();
            let support: Vec<usize> =
                (0..rank).filter(|&i| vector[i] != 0).collect();
            match support.as_slice() {
                [i] => SignedPerm::sign_flip(rank, *i),
                [i, j] => {
                    if vector[*i] == vector[*j] || vector[*i] == -vector[*j] && vector[*i] * vector[*j] < 0 {
                        if vector[*i] * vector[*j] > 0 {
                            SignedPerm::neg_transposition(rank, *i, *j)
                        } else {
                            SignedPerm::transposition(rank, *i, *j)
                        }
                    } else {
                        unreachable!()
                    }
                }
                _ => unreachable!(),
            }
        }
    }
}
