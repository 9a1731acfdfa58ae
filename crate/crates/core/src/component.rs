//! Component groups of centralizers and total orbital-complex counts.

use crate::diagram::{enumerate_syd, OrbitLabel, SymmetricPair};
use crate::error::Error;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Component group of the centralizer of a nilpotent element, canonicalized:
/// `Cyclic(1)` and `Elementary2(0)` are both stored as `Trivial`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ComponentGroup {
    Trivial,
    Cyclic(u32),
    Elementary2(u32),
}

impl ComponentGroup {
    pub fn cyclic(d: u32) -> Self {
        assert!(d >= 1);
        if d == 1 {
            ComponentGroup::Trivial
        } else {
            ComponentGroup::Cyclic(d)
        }
    }

    pub fn elementary2(r: u32) -> Self {
        if r == 0 {
            ComponentGroup::Trivial
        } else {
            ComponentGroup::Elementary2(r)
        }
    }

    /// Number of irreducible characters.
    pub fn character_count(&self) -> u64 {
        match *self {
            ComponentGroup::Trivial => 1,
            ComponentGroup::Cyclic(d) => d as u64,
            ComponentGroup::Elementary2(r) => 1u64 << r,
        }
    }
}

impl fmt::Display for ComponentGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ComponentGroup::Trivial => write!(f, "1"),
            ComponentGroup::Cyclic(d) => write!(f, "Z/{d}"),
            ComponentGroup::Elementary2(r) => write!(f, "(Z/2)^{r}"),
        }
    }
}

fn check_orbit(pair: SymmetricPair, orbit: &OrbitLabel) -> Result<(), Error> {
    if crate::diagram::orbit_is_valid(pair, orbit) {
        Ok(())
    } else {
        Err(Error::InvalidOrbit { pair: pair.to_string(), orbit: orbit.to_string() })
    }
}

/// The exponent r in A_K = (Z/2)^r for orthogonal-type diagrams: one for each
/// odd length with a `+`-starting row, one for each odd length with a
/// `-`-starting row, minus one; zero when there is no odd part.
pub(crate) fn bd_r(diagram: &crate::diagram::SignedYoungDiagram) -> u32 {
    let mut r: i64 = -1;
    let mut has_odd = false;
    for g in diagram.groups() {
        if g.len % 2 == 1 {
            has_odd = true;
            if g.plus > 0 {
                r += 1;
            }
            if g.minus > 0 {
                r += 1;
            }
        }
    }
    if has_odd {
        r as u32
    } else {
        0
    }
}

/// Same count on even lengths, without the -1 (symplectic-split case).
fn c_r(diagram: &crate::diagram::SignedYoungDiagram) -> u32 {
    let mut r = 0;
    for g in diagram.groups() {
        if g.len % 2 == 0 {
            if g.plus > 0 {
                r += 1;
            }
            if g.minus > 0 {
                r += 1;
            }
        }
    }
    r
}

/// Component group A_K(x) for x in the given orbit.
pub fn component_group(pair: SymmetricPair, orbit: &OrbitLabel) -> Result<ComponentGroup, Error> {
    check_orbit(pair, orbit)?;
    let d = &orbit.diagram;
    Ok(match pair {
        SymmetricPair::AiiiSl { .. } => {
            let g = d.gcd_of_lengths();
            ComponentGroup::cyclic(g.max(1))
        }
        SymmetricPair::AiiiPgl { .. } => {
            if !d.is_empty() && d.groups().iter().all(|g| g.plus == g.minus) {
                ComponentGroup::Elementary2(1)
            } else {
                ComponentGroup::Trivial
            }
        }
        SymmetricPair::Bdi { .. } => ComponentGroup::elementary2(bd_r(d)),
        SymmetricPair::Ci { .. } => ComponentGroup::elementary2(c_r(d)),
        SymmetricPair::Cii { .. } | SymmetricPair::Diii { .. } | SymmetricPair::Glgl { .. } => {
            ComponentGroup::Trivial
        }
    })
}

/// |A(g,K)|: total number of orbital complexes, i.e. the sum over orbit
/// labels of the number of irreducible characters of the component group.
/// The very even doubling is already carried by decorated labels.
pub fn orbital_complex_count(pair: SymmetricPair) -> u64 {
    enumerate_syd(pair)
        .iter()
        .map(|o| component_group(pair, o).expect("enumerated orbit").character_count())
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::SignedYoungDiagram;

    fn plain(s: &str) -> OrbitLabel {
        OrbitLabel::plain(s.parse::<SignedYoungDiagram>().unwrap())
    }

    #[test]
    fn sl_component_group_is_gcd_cyclic() {
        // 6^4_+ 4^2_-: gcd(6,4) = 2; signature (16,16)
        let orbit = OrbitLabel::plain(SignedYoungDiagram::new([(6, 4, 0), (4, 0, 2)]));
        let pair = SymmetricPair::AiiiSl { p: 16, q: 16 };
        assert_eq!(component_group(pair, &orbit).unwrap(), ComponentGroup::Cyclic(2));
    }

    #[test]
    fn bd_component_group_counts_odd_sign_groups() {
        let pair = SymmetricPair::Bdi { p: 4, q: 3 };
        assert_eq!(
            component_group(pair, &plain("3+ 3- 1+")).unwrap(),
            ComponentGroup::Elementary2(2)
        );
    }

    #[test]
    fn ci_component_group_no_even_parts_is_trivial() {
        let pair = SymmetricPair::Ci { n: 1 };
        assert_eq!(component_group(pair, &plain("1+ 1-")).unwrap(), ComponentGroup::Trivial);
    }

    #[test]
    fn invalid_orbit_is_rejected() {
        let pair = SymmetricPair::Ci { n: 1 };
        assert!(component_group(pair, &plain("2+ 1-")).is_err());
    }

    #[test]
    fn orbital_complex_counts_spot_values() {
        assert_eq!(orbital_complex_count(SymmetricPair::Bdi { p: 2, q: 1 }), 3);
        assert_eq!(orbital_complex_count(SymmetricPair::Ci { n: 1 }), 5);
        assert_eq!(orbital_complex_count(SymmetricPair::AiiiSl { p: 1, q: 1 }), 5);
        assert_eq!(orbital_complex_count(SymmetricPair::AiiiPgl { p: 1, q: 1 }), 3);
        assert_eq!(orbital_complex_count(SymmetricPair::Bdi { p: 1, q: 1 }), 2);
    }

    #[test]
    fn pgl_component_group_invariant_under_sign_swap() {
        let pair = SymmetricPair::AiiiPgl { p: 3, q: 3 };
        for orbit in enumerate_syd(pair) {
            let swapped = orbit.diagram.sign_swapped();
            let a = component_group(pair, &orbit).unwrap();
            // evaluate the rule directly on the swapped diagram
            let b = if !swapped.is_empty() && swapped.groups().iter().all(|g| g.plus == g.minus) {
                ComponentGroup::Elementary2(1)
            } else {
                ComponentGroup::Trivial
            };
            assert_eq!(a, b, "{orbit}");
        }
    }
}
