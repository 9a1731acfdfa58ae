//! Cross-module consistency sweeps: label counts against orbital counts
//! against closed formulas, bijections, and support-set invariants, over
//! every pair type at moderate rank.

use charlab_core::atlas::{verify_bijection, verify_counts};
use charlab_core::component::orbital_complex_count;
use charlab_core::diagram::SymmetricPair;
use charlab_core::hecke::{full_support_count, CountMode};
use charlab_core::richardson::{bd_nilpotent_count, syd0};
use charlab_core::series::identities::wt_enumerated;
use charlab_core::series::{rat, rat_string};
use charlab_core::support::support_set;

fn all_pairs_up_to(total: u32) -> Vec<SymmetricPair> {
    let mut pairs = Vec::new();
    for p in 0..=total {
        for q in 0..=total - p {
            pairs.push(SymmetricPair::AiiiSl { p, q });
            pairs.push(SymmetricPair::AiiiPgl { p, q });
            pairs.push(SymmetricPair::Bdi { p, q });
            pairs.push(SymmetricPair::Glgl { p, q });
            if 2 * (p + q) <= total {
                pairs.push(SymmetricPair::Cii { p, q });
            }
        }
    }
    for n in 0..=total / 2 {
        pairs.push(SymmetricPair::Ci { n });
        pairs.push(SymmetricPair::Diii { n });
    }
    pairs
}

#[test]
fn label_count_equals_orbital_count_everywhere() {
    for pair in all_pairs_up_to(8) {
        let row = verify_counts(pair);
        assert!(row.ok, "{pair}: {:?}", row.detail);
        assert_eq!(row.orbital, row.char_labels, "{pair}");
    }
}

#[test]
fn explicit_bijections_hold_at_moderate_rank() {
    for pair in all_pairs_up_to(8) {
        match pair {
            SymmetricPair::AiiiPgl { .. }
            | SymmetricPair::Glgl { .. }
            | SymmetricPair::Cii { .. }
            | SymmetricPair::Diii { .. }
            | SymmetricPair::AiiiSl { .. } => {
                let (domain, labels) =
                    verify_bijection(pair).unwrap_or_else(|e| panic!("{pair}: {e}"));
                assert_eq!(domain, labels, "{pair}");
            }
            _ => {}
        }
    }
}

#[test]
fn weighted_diagram_count_matches_orbital_count() {
    // wt(p,q) = 2 A_{p,q} for odd totals, 2 A_{p,q} - 3 p(q/2) for p = q even;
    // the trivial pair is excluded (its formula-side count doubles the
    // single sheaf by convention)
    for p in 0..=14u32 {
        for q in 0..=14 - p {
            if p + q == 0 {
                continue;
            }
            let a = rat(orbital_complex_count(SymmetricPair::Bdi { p, q }) as i64);
            let wt = wt_enumerated(p, q);
            let correction = if p == q && q % 2 == 0 {
                rat(3) * rat(charlab_core::partition::partition_count(q / 2) as i64)
            } else {
                rat(0)
            };
            assert_eq!(wt, rat(2) * a - correction, "wt({p},{q})");
        }
    }
}

#[test]
fn nilpotent_support_counts_are_symmetric_and_integral() {
    for p in 0..=7u32 {
        for q in 0..=7 - p {
            let b = bd_nilpotent_count(p, q);
            assert_eq!(b, bd_nilpotent_count(q, p), "b({p},{q})");
            if (p, q) != (0, 0) {
                assert!(b.is_integer(), "b({p},{q}) = {}", rat_string(&b));
            }
        }
    }
}

#[test]
fn support_sets_are_duplicate_free_with_valid_orbit_diagrams() {
    for pair in all_pairs_up_to(8) {
        let supports = support_set(pair);
        let mut seen = std::collections::BTreeSet::new();
        for s in &supports {
            assert!(seen.insert(s.clone()), "{pair}: duplicate {s}");
            let diagram = s.orbit_diagram();
            assert_eq!(diagram.size(), pair.diagram_size(), "{pair}: {s}");
            assert_eq!(diagram.signature(), pair.diagram_signature(), "{pair}: {s}");
        }
        // the zero-index supports biject with the Richardson orbits
        let zero_count = supports
            .iter()
            .filter(|s| match s.shape {
                charlab_core::support::SupportShape::MK { m, k } => m == 0 && k == 0,
                charlab_core::support::SupportShape::K { k } => k == 0,
                charlab_core::support::SupportShape::ML { l, .. } => l == 0,
            })
            .count();
        assert_eq!(zero_count, syd0(pair).len(), "{pair}");
    }
}

#[test]
fn full_support_formula_and_true_modes_differ_only_at_rank_zero() {
    for pair in all_pairs_up_to(6) {
        let f = full_support_count(pair, CountMode::Formula);
        let t = full_support_count(pair, CountMode::True);
        match pair {
            SymmetricPair::Bdi { p, q } if p == q && p == 0 => {
                assert_eq!(rat_string(&f), "1/2");
                assert_eq!(t, rat(1));
            }
            _ => assert_eq!(f, t, "{pair}"),
        }
    }
}

#[test]
fn character_sheaf_labels_are_pairwise_distinct() {
    use charlab_core::atlas::enumerate_char_labels;
    for pair in all_pairs_up_to(8) {
        let labels = enumerate_char_labels(pair);
        let distinct: std::collections::BTreeSet<_> = labels.iter().collect();
        assert_eq!(distinct.len(), labels.len(), "{pair}");
    }
}

#[test]
fn rank_seven_quotients_are_elementary_two_groups() {
    // one spot check at the default brute-force bound
    use charlab_core::weyl::{stabilizer_subgroups, ICharacter};
    use charlab_core::weyl::group::quotient_invariants;
    let pair = SymmetricPair::Ci { n: 7 };
    let chi = ICharacter::standard(7, 3);
    let (w, w0) = stabilizer_subgroups(pair, &chi, 7).unwrap();
    assert!(w0.iter().all(|g| w.contains(g)));
    assert_eq!(quotient_invariants(&w, &w0), vec![2]);
}
