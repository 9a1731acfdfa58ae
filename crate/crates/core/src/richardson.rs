//! Richardson-orbit criteria, the allowed-character apparatus for
//! orthogonal-type nilpotent supports, and nilpotent-support counts.
//!
//! For the orthogonal pairs the diagram-side parity conditions admit several
//! candidate readings of the sign convention. A calibration search fixes the
//! reading empirically: the unique candidate under which the summed counts
//! match the closed-form generating functions for all total sizes up to 13.

use crate::diagram::{enumerate_syd, OrbitLabel, SignedYoungDiagram, SymmetricPair};
use crate::error::Error;
use crate::partition::{odd_part, totient, Partition};
use crate::series::product::{biorbital_b_product, biorbital_d_product};
use crate::series::{rat, rat_frac, Rat};
use num::Zero;
use serde::{Deserialize, Serialize};
use std::sync::OnceLock;

/// Candidate readings of the first-row parity condition for odd total size.
/// The paired conditions (consecutive rows must have equal eps+mu parity) are
/// common to all candidates; they differ in the extra constraint placed on
/// the first row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FirstRowRule {
    /// No extra constraint: the first-row parity is already determined by the
    /// signature (q has the parity of eps_1 + mu_1 once the pairs agree).
    PairedOnly,
    /// eps_1 == q mod 2 with `+` mapped to the given bit.
    LiteralQ { plus_bit: u8 },
    /// eps_1 == p mod 2 with `+` mapped to the given bit.
    LiteralP { plus_bit: u8 },
}

pub const CALIBRATION_CANDIDATES: [FirstRowRule; 5] = [
    FirstRowRule::PairedOnly,
    FirstRowRule::LiteralQ { plus_bit: 0 },
    FirstRowRule::LiteralQ { plus_bit: 1 },
    FirstRowRule::LiteralP { plus_bit: 0 },
    FirstRowRule::LiteralP { plus_bit: 1 },
];

/// Rows of an all-odd uniform-sign diagram as (mu_r, eps_r) with length
/// 2 mu_r + 1 and eps_r = 0 for a `+` start, 1 for `-`, listed with
/// multiplicity, lengths descending. None if the diagram has an even part or
/// mixed signs within a length.
fn odd_uniform_rows(d: &SignedYoungDiagram) -> Option<Vec<(u32, u8)>> {
    let mut rows = Vec::new();
    for g in d.groups() {
        if g.len % 2 == 0 {
            return None;
        }
        if g.plus > 0 && g.minus > 0 {
            return None;
        }
        let eps = if g.plus > 0 { 0u8 } else { 1u8 };
        for _ in 0..(g.plus + g.minus) {
            rows.push(((g.len - 1) / 2, eps));
        }
    }
    Some(rows)
}

fn bd_is_richardson_with(d: &SignedYoungDiagram, p: u32, q: u32, rule: FirstRowRule) -> bool {
    let rows = match odd_uniform_rows(d) {
        Some(r) => r,
        None => return false,
    };
    let n_total = p + q;
    if n_total % 2 == 1 {
        // pairs (2,3), (4,5), ... in 1-based indexing
        let mut i = 1;
        while i + 1 < rows.len() {
            let (mu_a, eps_a) = rows[i];
            let (mu_b, eps_b) = rows[i + 1];
            if (mu_a + eps_a as u32) % 2 != (mu_b + eps_b as u32) % 2 {
                return false;
            }
            i += 2;
        }
        match rule {
            FirstRowRule::PairedOnly => true,
            FirstRowRule::LiteralQ { plus_bit } => match rows.first() {
                Some(&(_, eps)) => {
                    let bit = if eps == 0 { plus_bit } else { 1 - plus_bit };
                    bit as u32 % 2 == q % 2
                }
                None => true,
            },
            FirstRowRule::LiteralP { plus_bit } => match rows.first() {
                Some(&(_, eps)) => {
                    let bit = if eps == 0 { plus_bit } else { 1 - plus_bit };
                    bit as u32 % 2 == p % 2
                }
                None => true,
            },
        }
    } else {
        // pairs (1,2), (3,4), ...
        let mut i = 0;
        while i + 1 < rows.len() {
            let (mu_a, eps_a) = rows[i];
            let (mu_b, eps_b) = rows[i + 1];
            if (mu_a + eps_a as u32) % 2 != (mu_b + eps_b as u32) % 2 {
                return false;
            }
            i += 2;
        }
        rows.len() % 2 == 0
    }
}

/// Sum over all signatures (p, N-p) of the nilpotent-support count computed
/// under the given rule, with the rank-zero convention b_{0,0} = 1/2.
fn bd_count_sum(n_total: u32, rule: FirstRowRule) -> Rat {
    if n_total == 0 {
        return rat_frac(1, 2);
    }
    let mut total = Rat::zero();
    for p in 0..=n_total {
        let q = n_total - p;
        for label in enumerate_syd(SymmetricPair::Bdi { p, q }) {
            if label.decoration != crate::diagram::Decoration::None {
                continue; // very even diagrams are never all-odd
            }
            if bd_is_richardson_with(&label.diagram, p, q, rule) {
                let om = omega_of(&label.diagram, p + q);
                total += rat(om.pi_cardinality as i64);
            }
        }
    }
    total
}

/// The calibrated first-row rule: the unique candidate matching the
/// generating-function coefficients for all N <= 13. Cached after the first
/// call.
pub fn calibrated_rule() -> FirstRowRule {
    static RULE: OnceLock<FirstRowRule> = OnceLock::new();
    *RULE.get_or_init(|| {
        let survivors = calibration_survivors(13);
        assert_eq!(
            survivors.len(),
            1,
            "calibration must isolate exactly one sign convention, got {survivors:?}"
        );
        survivors[0]
    })
}

/// All candidates whose summed counts match the closed products for every
/// total size up to `max_n`.
pub fn calibration_survivors(max_n: u32) -> Vec<FirstRowRule> {
    let order = max_n as usize;
    let odd_target = biorbital_b_product().expand1(order).expect("product");
    let even_target = biorbital_d_product().expand1(order).expect("product");
    CALIBRATION_CANDIDATES
        .iter()
        .copied()
        .filter(|&rule| {
            (0..=max_n).all(|n| {
                let target = if n % 2 == 1 {
                    odd_target.coefficient(n as usize).unwrap()
                } else {
                    even_target.coefficient(n as usize).unwrap()
                };
                bd_count_sum(n, rule) == *target
            })
        })
        .collect()
}

fn check_orbit(pair: SymmetricPair, orbit: &OrbitLabel) -> Result<(), Error> {
    if crate::diagram::orbit_is_valid(pair, orbit) {
        Ok(())
    } else {
        Err(Error::InvalidOrbit { pair: pair.to_string(), orbit: orbit.to_string() })
    }
}

/// Internal Richardson test without orbit validation.
pub(crate) fn is_richardson_unchecked(pair: SymmetricPair, orbit: &OrbitLabel) -> bool {
    let d = &orbit.diagram;
    let single_signed = |g: &crate::diagram::RowGroup| g.plus == 0 || g.minus == 0;
    match pair {
        SymmetricPair::AiiiSl { .. } | SymmetricPair::AiiiPgl { .. } | SymmetricPair::Glgl { .. } => {
            d.groups().iter().all(single_signed)
        }
        SymmetricPair::Ci { .. } => {
            d.groups().iter().all(|g| g.len % 2 == 0 && single_signed(g))
        }
        SymmetricPair::Cii { .. } => d.groups().iter().all(|g| {
            if g.len % 2 == 0 {
                g.plus == g.minus && g.plus <= 1
            } else {
                single_signed(g)
            }
        }),
        SymmetricPair::Diii { .. } => d.groups().iter().all(|g| {
            if g.len % 2 == 1 {
                g.plus == g.minus && g.plus <= 1
            } else {
                single_signed(g)
            }
        }),
        SymmetricPair::Bdi { p, q } => bd_is_richardson_with(d, p, q, calibrated_rule()),
    }
}

/// Whether the orbit is a Richardson orbit attached to a theta-stable Borel.
pub fn is_richardson(pair: SymmetricPair, orbit: &OrbitLabel) -> Result<bool, Error> {
    check_orbit(pair, orbit)?;
    Ok(is_richardson_unchecked(pair, orbit))
}

/// The Richardson orbit labels of the pair, in enumeration order.
pub fn syd0(pair: SymmetricPair) -> Vec<OrbitLabel> {
    enumerate_syd(pair).into_iter().filter(|o| is_richardson_unchecked(pair, o)).collect()
}

/// The index set governing allowed characters on an orthogonal
/// Richardson-shaped orbit, with its size and the allowed-character count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmegaData {
    /// 1-based indices into the distinct lengths (largest first).
    pub omega: Vec<u32>,
    pub l: u32,
    pub pi_cardinality: u64,
}

fn omega_of(d: &SignedYoungDiagram, n_total: u32) -> OmegaData {
    let groups = d.groups();
    let s = groups.len();
    if s == 0 {
        return OmegaData { omega: Vec::new(), l: 0, pi_cardinality: 1 };
    }
    let mults: Vec<u32> = groups.iter().map(|g| g.plus + g.minus).collect();
    let mus: Vec<u32> = groups.iter().map(|g| (g.len - 1) / 2).collect();
    let eps: Vec<u8> = groups.iter().map(|g| if g.plus > 0 { 0 } else { 1 }).collect();
    let mut omega = Vec::new();
    for j in 1..=s {
        let suffix: u32 = mults[j - 1..].iter().sum();
        if !suffix.is_multiple_of(2) {
            continue;
        }
        if j >= 2 {
            let gap_ok = mus[j - 2] >= mus[j - 1] + 2;
            let sign_ok = eps[j - 2] == eps[j - 1];
            if !gap_ok && !sign_ok {
                continue;
            }
        }
        omega.push(j as u32);
    }
    let l = omega.len() as u32;
    let pi = if n_total % 2 == 1 { 1u64 << l } else { 1u64 << (l - 1) };
    OmegaData { omega, l, pi_cardinality: pi }
}

/// Omega data for a Richardson-shaped orthogonal diagram (all parts odd,
/// uniform sign within each length).
pub fn omega_data(mu: &OrbitLabel) -> Result<OmegaData, Error> {
    if odd_uniform_rows(&mu.diagram).is_none() {
        return Err(Error::NotRichardsonShaped(mu.to_string()));
    }
    Ok(omega_of(&mu.diagram, mu.diagram.size()))
}

/// Character of the component group of an orthogonal Richardson-shaped
/// orbit: values on the generators delta_r, r = 1 .. s-1, as bits
/// (true = -1).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PiCharacter(pub Vec<bool>);

impl std::fmt::Display for PiCharacter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        for &b in &self.0 {
            write!(f, "{}", if b { 1 } else { 0 })?;
        }
        Ok(())
    }
}

/// All allowed characters: bit r may be set only when r+1 lies in Omega.
pub fn pi_characters(mu: &OrbitLabel) -> Result<Vec<PiCharacter>, Error> {
    let om = omega_data(mu)?;
    let s = mu.diagram.groups().len();
    let free: Vec<usize> =
        (1..s).filter(|&r| om.omega.contains(&(r as u32 + 1))).collect();
    let mut out = Vec::with_capacity(1 << free.len());
    for mask in 0..(1u64 << free.len()) {
        let mut bits = vec![false; s.saturating_sub(1)];
        for (b, &r) in free.iter().enumerate() {
            if mask >> b & 1 == 1 {
                bits[r - 1] = true;
            }
        }
        out.push(PiCharacter(bits));
    }
    debug_assert_eq!(out.len() as u64, om.pi_cardinality);
    Ok(out)
}

/// Nilpotent-support sheaf count for the pair. Rational return type carries
/// the rank-zero convention: the orthogonal pair of size zero counts 1/2.
pub fn nilpotent_support_count(pair: SymmetricPair) -> Rat {
    match pair {
        SymmetricPair::Bdi { p: 0, q: 0 } => rat_frac(1, 2),
        SymmetricPair::Bdi { p, q } => {
            if p % 2 == 1 && q % 2 == 1 {
                return Rat::zero();
            }
            syd0(pair)
                .iter()
                .map(|o| rat(omega_of(&o.diagram, p + q).pi_cardinality as i64))
                .sum()
        }
        SymmetricPair::Ci { .. }
        | SymmetricPair::AiiiPgl { .. }
        | SymmetricPair::Cii { .. }
        | SymmetricPair::Diii { .. }
        | SymmetricPair::Glgl { .. } => rat(syd0(pair).len() as i64),
        SymmetricPair::AiiiSl { .. } => syd0(pair)
            .iter()
            .map(|o| rat(odd_part(o.diagram.gcd_of_lengths().max(1)) as i64))
            .sum(),
    }
}

/// b_{p,q}: nilpotent-support count for the orthogonal pair of signature
/// (p,q), including the b_{0,0} = 1/2 convention.
pub fn bd_nilpotent_count(p: u32, q: u32) -> Rat {
    nilpotent_support_count(SymmetricPair::Bdi { p, q })
}

/// Number of Richardson orbits for the symplectic-split pair of rank n.
pub fn b_c(n: u32) -> u64 {
    syd0(SymmetricPair::Ci { n }).len() as u64
}

/// Nilpotent-support labels for the special linear pair: for each Richardson
/// orbit, one label per odd-order character of its cyclic component group,
/// reported as (orbit, character order m, index among the order-m characters).
pub fn sl_nilpotent_labels(p: u32, q: u32) -> Vec<(OrbitLabel, u32, u32)> {
    let mut out = Vec::new();
    for orbit in syd0(SymmetricPair::AiiiSl { p, q }) {
        let d = orbit.diagram.gcd_of_lengths().max(1);
        for m in 1..=d {
            if d % m == 0 && m % 2 == 1 {
                for idx in 0..totient(m) {
                    out.push((orbit.clone(), m, idx));
                }
            }
        }
    }
    out
}

/// wt weight of a partition into odd parts: written with parts
/// 2 mu_1 + 1 >= ... >= 2 mu_s + 1, each interior consecutive pair
/// contributes 3 when mu_j = mu_{j+1} + 1 and 4 when the gap is at least 2.
/// The pairing offset depends on the parity of the total.
pub fn odd_partition_weight(parts: &Partition) -> u64 {
    debug_assert!(parts.parts().iter().all(|&p| p % 2 == 1));
    let mus: Vec<u32> = parts.parts().iter().map(|&p| (p - 1) / 2).collect();
    let s = mus.len();
    let n: u32 = parts.size();
    // Odd total: compare (mu_1, mu_2), (mu_3, mu_4), ... in 1-based indexing
    // restricted to j <= (s-1)/2, i.e. 0-based pairs (0,1), (2,3), ...
    // Even total: compare (mu_2, mu_3), (mu_4, mu_5), ... i.e. (1,2), (3,4), ...
    let first = if n % 2 == 1 { 1 } else { 2 };
    let mut weight = 1u64;
    let mut idx = first; // 0-based index of the second member of the pair
    while idx < s {
        let a = mus[idx - 1];
        let b = mus[idx];
        if a == b + 1 {
            weight *= 3;
        } else if a >= b + 2 {
            weight *= 4;
        }
        idx += 2;
    }
    weight
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::Decoration;
    use crate::series::rat_string;

    fn plain(s: &str) -> OrbitLabel {
        OrbitLabel::plain(s.parse::<SignedYoungDiagram>().unwrap())
    }

    #[test]
    fn calibration_isolates_the_paired_reading() {
        let survivors = calibration_survivors(13);
        assert_eq!(survivors, vec![FirstRowRule::PairedOnly]);
    }

    #[test]
    fn literal_first_row_readings_fail_at_size_three() {
        // Under any literal reading, the single-row orbits of (3,0) and (2,1)
        // need contradictory parities, so the size-3 total cannot reach 4.
        let odd_target = biorbital_b_product().expand1(3).unwrap();
        let target = odd_target.coefficient(3).unwrap().clone();
        assert_eq!(target, rat(4));
        for rule in [
            FirstRowRule::LiteralQ { plus_bit: 0 },
            FirstRowRule::LiteralQ { plus_bit: 1 },
            FirstRowRule::LiteralP { plus_bit: 0 },
            FirstRowRule::LiteralP { plus_bit: 1 },
        ] {
            assert_ne!(bd_count_sum(3, rule), target, "{rule:?}");
        }
    }

    #[test]
    fn richardson_spot_cases() {
        assert!(is_richardson(SymmetricPair::Bdi { p: 3, q: 0 }, &plain("1+ 1+ 1+")).unwrap());
        assert!(!is_richardson(SymmetricPair::Ci { n: 2 }, &plain("2+ 2-")).unwrap());
        assert!(!is_richardson(SymmetricPair::AiiiSl { p: 1, q: 1 }, &plain("1+ 1-")).unwrap());
        assert!(is_richardson(SymmetricPair::Bdi { p: 2, q: 1 }, &plain("3+")).unwrap());
    }

    #[test]
    fn omega_examples() {
        // 3^2 1 of size 7: both suffix sums odd
        let mu = OrbitLabel::plain(SignedYoungDiagram::new([(3, 2, 0), (1, 1, 0)]));
        let om = omega_data(&mu).unwrap();
        assert!(om.omega.is_empty());
        assert_eq!(om.pi_cardinality, 1);

        // 3^2 1^2 of size 8: Omega = {1,2}, two characters
        let mu = OrbitLabel::plain(SignedYoungDiagram::new([(3, 2, 0), (1, 2, 0)]));
        let om = omega_data(&mu).unwrap();
        assert_eq!(om.omega, vec![1, 2]);
        assert_eq!(om.l, 2);
        assert_eq!(om.pi_cardinality, 2);
        assert_eq!(pi_characters(&mu).unwrap().len(), 2);

        // empty diagram
        let mu = OrbitLabel::plain(SignedYoungDiagram::empty());
        let om = omega_data(&mu).unwrap();
        assert!(om.omega.is_empty());
        assert_eq!(om.pi_cardinality, 1);

        // single-length diagram: empty character vector
        let mu = OrbitLabel::plain(SignedYoungDiagram::new([(3, 1, 0)]));
        let chars = pi_characters(&mu).unwrap();
        assert_eq!(chars, vec![PiCharacter(vec![])]);
    }

    #[test]
    fn omega_rejects_bad_shapes() {
        assert!(omega_data(&plain("2+ 2-")).is_err());
        assert!(omega_data(&plain("3+ 3-")).is_err());
    }

    #[test]
    fn nilpotent_support_counts() {
        assert_eq!(b_c(2), 4);
        assert_eq!(rat_string(&nilpotent_support_count(SymmetricPair::Bdi { p: 3, q: 0 })), "1");
        assert_eq!(rat_string(&nilpotent_support_count(SymmetricPair::Bdi { p: 0, q: 0 })), "1/2");
        assert_eq!(rat_string(&nilpotent_support_count(SymmetricPair::Bdi { p: 2, q: 1 })), "1");
        assert_eq!(rat_string(&nilpotent_support_count(SymmetricPair::Bdi { p: 1, q: 0 })), "1");
    }

    #[test]
    fn sl_nilpotent_label_examples() {
        let labels = sl_nilpotent_labels(1, 1);
        assert_eq!(labels.len(), 2);
        assert!(labels.iter().all(|(_, m, _)| *m == 1));

        // (2,1): the regular orbit 3+ has d = 3: trivial + two order-3 characters
        let labels = sl_nilpotent_labels(2, 1);
        let on_regular: Vec<_> =
            labels.iter().filter(|(o, _, _)| o.diagram.to_string() == "3+").collect();
        assert_eq!(on_regular.len(), 3);

        let labels = sl_nilpotent_labels(1, 0);
        assert_eq!(labels.len(), 1);
    }

    #[test]
    fn syd0_is_a_subset_of_syd() {
        for pair in [
            SymmetricPair::Bdi { p: 4, q: 2 },
            SymmetricPair::Ci { n: 3 },
            SymmetricPair::Cii { p: 2, q: 1 },
            SymmetricPair::Diii { n: 3 },
        ] {
            let all = enumerate_syd(pair);
            for o in syd0(pair) {
                assert!(all.contains(&o));
                assert_eq!(o.decoration, Decoration::None);
            }
        }
    }
}
