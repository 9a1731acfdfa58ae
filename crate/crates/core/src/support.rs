//! The set of nilpotent orbits whose dual strata support character sheaves,
//! and the fundamental-group descriptors of those strata.

use crate::diagram::{Decoration, OrbitLabel, SignedYoungDiagram, SymmetricPair};
use crate::error::Error;
use crate::partition::gcd;
use crate::richardson::syd0;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Index part of a support label. `MK` for the orthogonal and
/// symplectic-split families, `K` for the quotient-linear, doubled
/// symplectic and orthogonal-linear families, `ML` for the special linear
/// family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SupportShape {
    MK { m: u32, k: u32 },
    K { k: u32 },
    ML { m: u32, l: u32 },
}

impl fmt::Display for SupportShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SupportShape::MK { m, k } => write!(f, "m={m},k={k}"),
            SupportShape::K { k } => write!(f, "k={k}"),
            SupportShape::ML { m, l } => write!(f, "m={m},l={l}"),
        }
    }
}

/// A stratum supporting character sheaves: pair, index tuple, residual orbit
/// of the reduced pair, and the I/II decoration for the doubled split
/// orthogonal stratum.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SupportLabel {
    pub pair: SymmetricPair,
    pub shape: SupportShape,
    pub mu: OrbitLabel,
    pub decoration: Decoration,
}

impl fmt::Display for SupportLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; mu={}", self.shape, self.mu)?;
        if self.decoration != Decoration::None {
            write!(f, "; {}", self.decoration)?;
        }
        write!(f, ")")
    }
}

impl SupportLabel {
    /// The signed Young diagram of the orbit underlying this stratum.
    pub fn orbit_diagram(&self) -> SignedYoungDiagram {
        let mut base = SignedYoungDiagram::empty();
        match (self.pair, self.shape) {
            (_, SupportShape::MK { m, k }) => {
                base.add_rows(1, m, m);
                base.add_rows(2, k, k);
            }
            (SymmetricPair::Cii { .. } | SymmetricPair::Diii { .. }, SupportShape::K { k }) => {
                base.add_rows(1, 2 * k, 2 * k);
            }
            (_, SupportShape::K { k }) => {
                base.add_rows(1, k, k);
            }
            (_, SupportShape::ML { m, l }) => {
                base.add_rows(m, l, l);
            }
        }
        base.join(&self.mu.diagram)
    }
}

/// gcd of row lengths of the residual orbit; 0 for the empty diagram.
fn d_mu(mu: &OrbitLabel) -> u32 {
    mu.diagram.gcd_of_lengths()
}

/// The support set of the pair: labels of the strata that carry character
/// sheaves, in a deterministic order.
pub fn support_set(pair: SymmetricPair) -> Vec<SupportLabel> {
    let mut out = Vec::new();
    match pair {
        SymmetricPair::AiiiPgl { p, q } | SymmetricPair::Glgl { p, q } => {
            let r = p.min(q);
            for k in 0..=r {
                let reduced = match pair {
                    SymmetricPair::AiiiPgl { .. } => SymmetricPair::AiiiPgl { p: p - k, q: q - k },
                    _ => SymmetricPair::Glgl { p: p - k, q: q - k },
                };
                for mu in syd0(reduced) {
                    out.push(SupportLabel {
                        pair,
                        shape: SupportShape::K { k },
                        mu,
                        decoration: Decoration::None,
                    });
                }
            }
        }
        SymmetricPair::AiiiSl { p, q } => {
            let n = p + q;
            let r = p.min(q);
            // l = 0: nilpotent supports, one per Richardson orbit.
            for mu in syd0(pair) {
                out.push(SupportLabel {
                    pair,
                    shape: SupportShape::ML { m: 1, l: 0 },
                    mu,
                    decoration: Decoration::None,
                });
            }
            // l > 0, m odd, residual constrained by m | d_mu.
            for m in (1..=r.max(1)).step_by(2) {
                for l in 1..=(r / m) {
                    if m * l > r {
                        break;
                    }
                    let reduced = SymmetricPair::AiiiSl { p: p - m * l, q: q - m * l };
                    for mu in syd0(reduced) {
                        if mu.diagram.is_empty() || d_mu(&mu).is_multiple_of(m) {
                            out.push(SupportLabel {
                                pair,
                                shape: SupportShape::ML { m, l },
                                mu,
                                decoration: Decoration::None,
                            });
                        }
                    }
                }
            }
            // p = q: the full-size strata exist for every m >= 1 with 2ml = n.
            if p == q && n > 0 {
                for m in 1..=p {
                    if p % m == 0 && m % 2 == 0 {
                        let l = p / m;
                        out.push(SupportLabel {
                            pair,
                            shape: SupportShape::ML { m, l },
                            mu: OrbitLabel::plain(SignedYoungDiagram::empty()),
                            decoration: Decoration::None,
                        });
                    }
                }
            }
        }
        SymmetricPair::Bdi { p, q } => {
            let n_total = p + q;
            let r = p.min(q);
            for m in 0..=r {
                if n_total % 2 == 0 && m % 2 != q % 2 {
                    continue;
                }
                for k in 0..=(r - m) / 2 {
                    let reduced = SymmetricPair::Bdi { p: p - m - 2 * k, q: q - m - 2 * k };
                    for mu in syd0(reduced) {
                        let doubled = p == q
                            && p % 2 == 0
                            && m == 0
                            && mu.diagram.is_empty()
                            && k == q / 2;
                        if doubled && k > 0 {
                            for decoration in [Decoration::I, Decoration::II] {
                                out.push(SupportLabel {
                                    pair,
                                    shape: SupportShape::MK { m, k },
                                    mu: mu.clone(),
                                    decoration,
                                });
                            }
                        } else {
                            out.push(SupportLabel {
                                pair,
                                shape: SupportShape::MK { m, k },
                                mu,
                                decoration: Decoration::None,
                            });
                        }
                    }
                }
            }
        }
        SymmetricPair::Ci { n } => {
            for m in 0..=n {
                for k in 0..=(n - m) / 2 {
                    let reduced = SymmetricPair::Ci { n: n - m - 2 * k };
                    for mu in syd0(reduced) {
                        out.push(SupportLabel {
                            pair,
                            shape: SupportShape::MK { m, k },
                            mu,
                            decoration: Decoration::None,
                        });
                    }
                }
            }
        }
        SymmetricPair::Cii { p, q } => {
            let r = p.min(q);
            for k in 0..=r {
                let reduced = SymmetricPair::Cii { p: p - k, q: q - k };
                for mu in syd0(reduced) {
                    out.push(SupportLabel {
                        pair,
                        shape: SupportShape::K { k },
                        mu,
                        decoration: Decoration::None,
                    });
                }
            }
        }
        SymmetricPair::Diii { n } => {
            for k in 0..=n / 2 {
                let reduced = SymmetricPair::Diii { n: n - 2 * k };
                for mu in syd0(reduced) {
                    out.push(SupportLabel {
                        pair,
                        shape: SupportShape::K { k },
                        mu,
                        decoration: Decoration::None,
                    });
                }
            }
        }
    }
    out
}

/// A braid-group factor of a stratum fundamental group: plain type-B or
/// type-D braid groups, or their extensions by the sign 2-group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BraidFamily {
    B,
    D,
    ExtB,
    ExtD,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidFactor {
    pub family: BraidFamily,
    pub rank: u32,
}

/// Formal product type of a stratum fundamental group: braid factors and a
/// finite abelian part given by invariant factors.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct FundGroupDescriptor {
    pub braid: Vec<BraidFactor>,
    pub abelian: Vec<u32>,
}

impl FundGroupDescriptor {
    fn push_braid(&mut self, family: BraidFamily, rank: u32) {
        if rank > 0 {
            self.braid.push(BraidFactor { family, rank });
        }
    }

    fn push_cyclic(&mut self, order: u32) {
        if order > 1 {
            self.abelian.push(order);
        }
    }

    fn push_elementary2(&mut self, rank: u32) {
        for _ in 0..rank {
            self.abelian.push(2);
        }
    }
}

impl fmt::Display for FundGroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        for b in &self.braid {
            let name = match b.family {
                BraidFamily::B => "B",
                BraidFamily::D => "D",
                BraidFamily::ExtB => "~B",
                BraidFamily::ExtD => "~D",
            };
            parts.push(format!("{name}({})", b.rank));
        }
        for &a in &self.abelian {
            parts.push(format!("Z/{a}"));
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" x "))
        }
    }
}

/// Fundamental-group descriptor of the stratum named by a support label.
pub fn fundamental_group_descriptor(support: &SupportLabel) -> Result<FundGroupDescriptor, Error> {
    if !support_set(support.pair).contains(support) {
        return Err(Error::InvalidSupport {
            pair: support.pair.to_string(),
            label: support.to_string(),
        });
    }
    let mut desc = FundGroupDescriptor::default();
    match (support.pair, support.shape) {
        (SymmetricPair::AiiiPgl { .. }, SupportShape::K { k }) => {
            desc.push_braid(BraidFamily::B, k);
            if d_mu(&support.mu).is_multiple_of(2) {
                desc.push_cyclic(2);
            }
        }
        (SymmetricPair::Glgl { .. }, SupportShape::K { k }) => {
            desc.push_braid(BraidFamily::B, k);
        }
        (SymmetricPair::AiiiSl { .. }, SupportShape::ML { m, l }) => {
            desc.push_braid(BraidFamily::B, l);
            let d_check = if support.mu.diagram.is_empty() {
                2 * m
            } else if l == 0 {
                d_mu(&support.mu)
            } else {
                gcd(2 * m, d_mu(&support.mu))
            };
            desc.push_cyclic(d_check.max(1));
        }
        (SymmetricPair::Bdi { .. }, SupportShape::MK { m, k }) => {
            if support.mu.diagram.is_empty() {
                desc.push_braid(BraidFamily::ExtD, m);
                desc.push_braid(BraidFamily::ExtB, k);
            } else {
                desc.push_braid(BraidFamily::ExtB, m);
                desc.push_braid(BraidFamily::ExtB, k);
                desc.push_elementary2(crate::component::bd_r(&support.mu.diagram));
            }
        }
        (SymmetricPair::Ci { .. }, SupportShape::MK { m, k }) => {
            desc.push_braid(BraidFamily::ExtB, m);
            desc.push_braid(BraidFamily::ExtB, k);
            let mut r = 0;
            for g in support.mu.diagram.groups() {
                if g.len % 2 == 0 {
                    if g.plus > 0 {
                        r += 1;
                    }
                    if g.minus > 0 {
                        r += 1;
                    }
                }
            }
            desc.push_elementary2(r);
        }
        (
            SymmetricPair::Cii { .. } | SymmetricPair::Diii { .. },
            SupportShape::K { k },
        ) => {
            desc.push_braid(BraidFamily::B, k);
        }
        _ => unreachable!("shape/pair mismatch in a validated support label"),
    }
    Ok(desc)
}

#[cfg(test)]
mod tests {
    use super::*;
    

    fn syd(s: &str) -> SignedYoungDiagram {
        s.parse().unwrap()
    }

    #[test]
    fn support_cii_1_1() {
        let supports = support_set(SymmetricPair::Cii { p: 1, q: 1 });
        assert_eq!(supports.len(), 2);
        assert_eq!(supports[0].shape, SupportShape::K { k: 0 });
        assert_eq!(supports[0].mu.diagram, syd("2+ 2-"));
        assert_eq!(supports[1].shape, SupportShape::K { k: 1 });
        assert!(supports[1].mu.diagram.is_empty());
    }

    #[test]
    fn support_sl_1_1() {
        let supports = support_set(SymmetricPair::AiiiSl { p: 1, q: 1 });
        assert_eq!(supports.len(), 3);
        let shapes: Vec<String> = supports.iter().map(|s| s.to_string()).collect();
        assert!(shapes.contains(&"(m=1,l=1; mu=0)".to_string()), "{shapes:?}");
        assert!(shapes.contains(&"(m=1,l=0; mu=2+)".to_string()));
        assert!(shapes.contains(&"(m=1,l=0; mu=2-)".to_string()));
    }

    #[test]
    fn support_bdi_3_0() {
        let supports = support_set(SymmetricPair::Bdi { p: 3, q: 0 });
        assert_eq!(supports.len(), 1);
        assert_eq!(supports[0].shape, SupportShape::MK { m: 0, k: 0 });
        assert_eq!(supports[0].mu.diagram, syd("1+ 1+ 1+"));
    }

    #[test]
    fn degenerate_tails_follow_the_reduced_pair_conventions() {
        // orthogonal: q = m + 2k forces mu = 1^{p-q} with plus rows
        let supports = support_set(SymmetricPair::Bdi { p: 5, q: 2 });
        for s in &supports {
            if let SupportShape::MK { m, k } = s.shape {
                if m + 2 * k == 2 {
                    let (sp, sq) = s.mu.diagram.signature();
                    assert_eq!((sp, sq), (3, 0));
                }
            }
        }
        // symplectic-split: n = m + 2k forces mu empty
        let supports = support_set(SymmetricPair::Ci { n: 2 });
        for s in &supports {
            if let SupportShape::MK { m, k } = s.shape {
                if m + 2 * k == 2 {
                    assert!(s.mu.diagram.is_empty());
                }
            }
        }
    }

    #[test]
    fn split_even_orthogonal_zero_stratum_is_doubled() {
        let supports = support_set(SymmetricPair::Bdi { p: 2, q: 2 });
        let doubled: Vec<_> =
            supports.iter().filter(|s| s.decoration != Decoration::None).collect();
        assert_eq!(doubled.len(), 2);
        for s in &doubled {
            assert_eq!(s.shape, SupportShape::MK { m: 0, k: 1 });
            assert!(s.mu.diagram.is_empty());
        }
    }

    #[test]
    fn every_mu_is_richardson_and_every_richardson_orbit_appears() {
        for pair in [
            SymmetricPair::Bdi { p: 4, q: 3 },
            SymmetricPair::Ci { n: 3 },
            SymmetricPair::Cii { p: 2, q: 1 },
            SymmetricPair::Diii { n: 3 },
            SymmetricPair::AiiiPgl { p: 2, q: 2 },
            SymmetricPair::AiiiSl { p: 2, q: 2 },
        ] {
            let supports = support_set(pair);
            for s in &supports {
                let reduced_sig = s.mu.diagram.signature();
                let reduced = match pair {
                    SymmetricPair::Bdi { .. } => {
                        SymmetricPair::Bdi { p: reduced_sig.0, q: reduced_sig.1 }
                    }
                    SymmetricPair::Ci { .. } => SymmetricPair::Ci { n: reduced_sig.0 },
                    SymmetricPair::Cii { .. } => {
                        SymmetricPair::Cii { p: reduced_sig.0 / 2, q: reduced_sig.1 / 2 }
                    }
                    SymmetricPair::Diii { .. } => SymmetricPair::Diii { n: reduced_sig.0 },
                    SymmetricPair::AiiiPgl { .. } => {
                        SymmetricPair::AiiiPgl { p: reduced_sig.0, q: reduced_sig.1 }
                    }
                    SymmetricPair::AiiiSl { .. } => {
                        SymmetricPair::AiiiSl { p: reduced_sig.0, q: reduced_sig.1 }
                    }
                    SymmetricPair::Glgl { .. } => {
                        SymmetricPair::Glgl { p: reduced_sig.0, q: reduced_sig.1 }
                    }
                };
                assert!(
                    crate::richardson::is_richardson_unchecked(reduced, &s.mu),
                    "{pair}: {s}"
                );
            }
            // every Richardson orbit appears at the zero index tuple
            let zero_shape = |s: &SupportLabel| match s.shape {
                SupportShape::MK { m, k } => m == 0 && k == 0,
                SupportShape::K { k } => k == 0,
                SupportShape::ML { l, .. } => l == 0,
            };
            let at_zero: Vec<_> =
                supports.iter().filter(|s| zero_shape(s)).map(|s| s.mu.clone()).collect();
            for o in crate::richardson::syd0(pair) {
                assert!(at_zero.contains(&o), "{pair}: missing {o}");
            }
        }
    }

    #[test]
    fn descriptor_examples() {
        // special linear (1,1), stratum (m=1, l=1, empty): B(1) x Z/2
        let supports = support_set(SymmetricPair::AiiiSl { p: 1, q: 1 });
        let s = supports.iter().find(|s| s.shape == SupportShape::ML { m: 1, l: 1 }).unwrap();
        let d = fundamental_group_descriptor(s).unwrap();
        assert_eq!(d.braid, vec![BraidFactor { family: BraidFamily::B, rank: 1 }]);
        assert_eq!(d.abelian, vec![2]);

        // orthogonal with nonempty mu: extended braid factors and the sign part
        let supports = support_set(SymmetricPair::Bdi { p: 4, q: 3 });
        let s = supports
            .iter()
            .find(|s| s.shape == SupportShape::MK { m: 1, k: 1 } && !s.mu.diagram.is_empty())
            .unwrap();
        let d = fundamental_group_descriptor(s).unwrap();
        assert_eq!(
            d.braid,
            vec![
                BraidFactor { family: BraidFamily::ExtB, rank: 1 },
                BraidFactor { family: BraidFamily::ExtB, rank: 1 }
            ]
        );

        // doubled symplectic, k = 0: trivial descriptor
        let supports = support_set(SymmetricPair::Cii { p: 1, q: 1 });
        let d = fundamental_group_descriptor(&supports[0]).unwrap();
        assert!(d.braid.is_empty() && d.abelian.is_empty());

        // rejection of labels outside the support set
        let bogus = SupportLabel {
            pair: SymmetricPair::Cii { p: 1, q: 1 },
            shape: SupportShape::K { k: 5 },
            mu: OrbitLabel::plain(SignedYoungDiagram::empty()),
            decoration: Decoration::None,
        };
        assert!(fundamental_group_descriptor(&bogus).is_err());
    }
}
