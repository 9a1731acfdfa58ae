//! The verification suites: each returns one check row per assertion, and
//! the full suite is the exit gate of the tool.

use crate::{CheckResult, RunConfig};
use charlab_core::atlas::{bd_a_prime, verify_bijection, verify_counts};
use charlab_core::component::orbital_complex_count;
use charlab_core::diagram::SymmetricPair;
use charlab_core::hecke::{hecke_d, hecke_e};
use charlab_core::richardson::{b_c, bd_nilpotent_count, calibration_survivors};
use charlab_core::series::identities::{appendix_suite, wt_enumerated};
use charlab_core::series::product::{
    bc_product, corollary_nilp_even_product, corollary_nilp_odd_product, corollary_total_product,
    even_partition_product, wt_two_variable_product,
};
use charlab_core::series::{rat, rat_frac, rat_string};
use charlab_core::weyl::{
    character_orbit_reps, character_orbits, expected_stabilizer, restricted_root_datum,
    stabilizer, stabilizer_subgroups, ICharacter,
};

pub const SUITE_NAMES: [&str; 6] = ["appendixC", "counting", "weyl", "richardson", "atlas", "all"];

/// Runs one named suite.
pub fn run_suite(name: &str, cfg: &RunConfig) -> Option<Vec<CheckResult>> {
    match name {
        "appendixC" => Some(suite_appendix_c(cfg)),
        "counting" => Some(suite_counting(cfg)),
        "weyl" => Some(suite_weyl(cfg)),
        "richardson" => Some(suite_richardson(cfg)),
        "atlas" => Some(suite_atlas(cfg)),
        "all" => {
            // suites run in parallel (everything underneath is pure);
            // report assembly keeps the fixed order
            let runs: [fn(&RunConfig) -> Vec<CheckResult>; 5] = [
                suite_appendix_c,
                suite_counting,
                suite_richardson,
                suite_atlas,
                suite_weyl,
            ];
            let results = std::thread::scope(|scope| {
                let handles: Vec<_> =
                    runs.iter().map(|f| scope.spawn(move || f(cfg))).collect();
                handles.into_iter().map(|h| h.join().expect("suite thread")).collect::<Vec<_>>()
            });
            Some(results.into_iter().flatten().collect())
        }
        _ => None,
    }
}

/// The exact q-series and weighted-count identity suite.
pub fn suite_appendix_c(cfg: &RunConfig) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for report in appendix_suite(cfg.order1, cfg.order2) {
        out.push(CheckResult::of(
            format!("appendixC/{} (order {})", report.identity, report.order),
            report.holds,
            report.first_mismatch.unwrap_or_default(),
        ));
    }
    // spot value: wt(2,1) = 6 both by enumeration and by expansion
    let enumerated = wt_enumerated(2, 1);
    let product = wt_two_variable_product()
        .expand2(3, 3)
        .map(|f| f.coefficient(2, 1).unwrap().clone());
    let ok = enumerated == rat(6) && product.as_ref().map(|c| c == &rat(6)).unwrap_or(false);
    out.push(CheckResult::of(
        "appendixC/spot wt(2,1) = 6",
        ok,
        format!("enumerated {}", rat_string(&enumerated)),
    ));
    out
}

/// Hecke tables, the four-way symplectic-split equality, and the orthogonal
/// convolution identities with their closed forms.
pub fn suite_counting(cfg: &RunConfig) -> Vec<CheckResult> {
    let mut out = Vec::new();

    // d(0..4) and e(0..3) from the truncated expansions
    let d: Vec<u64> = (0..5).map(hecke_d).collect();
    out.push(CheckResult::of(
        "counting/d(0..4) = 1,1,2,3,4",
        d == vec![1, 1, 2, 3, 4],
        format!("{d:?}"),
    ));
    let e: Vec<u64> = (0..4).map(hecke_e).collect();
    out.push(CheckResult::of(
        "counting/e(0..3) = 1,2,2,4",
        e == vec![1, 2, 2, 4],
        format!("{e:?}"),
    ));
    let odd_e: Vec<u32> = (1..=60).filter(|&n| hecke_e(n) % 2 == 1).collect();
    out.push(CheckResult::of(
        "counting/e(n) even for 1 <= n <= 60",
        odd_e.is_empty(),
        format!("odd at {odd_e:?}"),
    ));

    // symplectic-split four-way equality
    let max_n = cfg.atlas_rank_bound.min(12);
    let mut bad = Vec::new();
    for n in 0..=max_n {
        let pair = SymmetricPair::Ci { n };
        let row = verify_counts(pair);
        if !row.ok || row.orbital != row.char_labels {
            bad.push(format!("n={n}: {:?}", row.detail));
        }
    }
    out.push(CheckResult::of(
        format!("counting/symplectic-split four-way equality, n <= {max_n}"),
        bad.is_empty(),
        bad.join("; "),
    ));
    out.push(CheckResult::of(
        "counting/spot |Char(CI(1))| = 5",
        charlab_core::atlas::char_count(SymmetricPair::Ci { n: 1 }) == 5,
        "",
    ));

    // orthogonal pairs: enumeration = convolution formula = label count
    let mut bad = Vec::new();
    for total in 0..=12u32 {
        for p in 0..=total {
            let q = total - p;
            let pair = SymmetricPair::Bdi { p, q };
            let a = orbital_complex_count(pair);
            let a_prime = bd_a_prime(p, q);
            let labels = charlab_core::atlas::char_count(pair);
            if rat(a as i64) != a_prime || a != labels {
                bad.push(format!(
                    "({p},{q}): A={a}, A'={}, labels={labels}",
                    rat_string(&a_prime)
                ));
            }
        }
    }
    out.push(CheckResult::of(
        "counting/orthogonal A = A' = |Char| for p+q <= 12",
        bad.is_empty(),
        bad.join("; "),
    ));
    out.push(CheckResult::of(
        "counting/spot A(2,1) = 3 and A(1,1) = 2",
        orbital_complex_count(SymmetricPair::Bdi { p: 2, q: 1 }) == 3
            && orbital_complex_count(SymmetricPair::Bdi { p: 1, q: 1 }) == 2,
        "",
    ));

    // closed-form coefficients per signature
    let mut bad = Vec::new();
    for q in 0..=8u32 {
        for l in 0..=6u32 {
            let p = q + l;
            if p + q == 0 {
                continue; // the closed forms double the trivial pair
            }
            let pair = SymmetricPair::Bdi { p, q };
            let a = rat(orbital_complex_count(pair) as i64);
            let order = q as usize;
            let base = corollary_total_product(l).expand1(order).expect("product");
            let mut expect = base.coefficient(order).unwrap().clone();
            if l == 0 {
                let corr = even_partition_product().expand1(order).expect("product");
                expect += rat_frac(3, 2) * corr.coefficient(order).unwrap();
            }
            if a != expect {
                bad.push(format!("total ({p},{q}): {} != {}", rat_string(&a), rat_string(&expect)));
            }
            if p % 2 == 0 || q % 2 == 0 {
                let spec = if (p + q) % 2 == 1 {
                    corollary_nilp_odd_product(l)
                } else {
                    corollary_nilp_even_product(l)
                };
                let series = spec.expand1(order).expect("product");
                let expect = series.coefficient(order).unwrap().clone();
                let direct = bd_nilpotent_count(p, q);
                if direct != expect {
                    bad.push(format!(
                        "nilpotent ({p},{q}): {} != {}",
                        rat_string(&direct),
                        rat_string(&expect)
                    ));
                }
            }
        }
    }
    out.push(CheckResult::of(
        "counting/closed-form coefficients, q <= 8, offsets <= 6",
        bad.is_empty(),
        bad.join("; "),
    ));
    out
}

/// Calibration of the orthogonal Richardson parity convention and the
/// nilpotent-support count identities.
pub fn suite_richardson(_cfg: &RunConfig) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let survivors = calibration_survivors(13);
    out.push(CheckResult::of(
        "richardson/calibration has a unique surviving convention, N <= 13",
        survivors.len() == 1,
        format!("{survivors:?}"),
    ));

    let mut bad = Vec::new();
    for total in 0..=14u32 {
        for p in 0..=total {
            let q = total - p;
            if bd_nilpotent_count(p, q) != bd_nilpotent_count(q, p) {
                bad.push(format!("({p},{q})"));
            }
        }
    }
    out.push(CheckResult::of(
        "richardson/b(p,q) = b(q,p) for p+q <= 14",
        bad.is_empty(),
        bad.join("; "),
    ));

    let series = bc_product().expand1(20).expect("product");
    let mut bad = Vec::new();
    for n in 0..=20u32 {
        if rat(b_c(n) as i64) != *series.coefficient(n as usize).unwrap() {
            bad.push(format!("n={n}"));
        }
    }
    out.push(CheckResult::of(
        "richardson/b_C(n) matches its product for n <= 20",
        bad.is_empty(),
        bad.join("; "),
    ));
    out
}

/// Explicit bijection verification over the stated rank ranges.
pub fn suite_atlas(cfg: &RunConfig) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let check_family = |name: &str, pairs: Vec<SymmetricPair>| -> CheckResult {
        let mut bad = Vec::new();
        for pair in pairs {
            match verify_bijection(pair) {
                Ok((domain, labels)) if domain == labels => {}
                Ok((domain, labels)) => bad.push(format!("{pair}: {domain} != {labels}")),
                Err(e) => bad.push(format!("{pair}: {e}")),
            }
        }
        CheckResult::of(name, bad.is_empty(), bad.join("; "))
    };

    let mut pgl = Vec::new();
    for total in 0..=10u32 {
        for p in 0..=total {
            pgl.push(SymmetricPair::AiiiPgl { p, q: total - p });
            pgl.push(SymmetricPair::Glgl { p, q: total - p });
        }
    }
    out.push(check_family("atlas/quotient- and general-linear bijections, ambient <= 10", pgl));

    let mut cd = Vec::new();
    for total in 0..=10u32 {
        for p in 0..=total {
            cd.push(SymmetricPair::Cii { p, q: total - p });
        }
        cd.push(SymmetricPair::Diii { n: total });
    }
    out.push(check_family("atlas/doubled symplectic and orthogonal-linear bijections, rank <= 10", cd));

    let sl_bound = cfg.atlas_rank_bound.min(12);
    let mut sl = Vec::new();
    for total in 0..=sl_bound {
        for p in 0..=total {
            sl.push(SymmetricPair::AiiiSl { p, q: total - p });
        }
    }
    out.push(check_family(
        &format!("atlas/special linear order-partitioned bijections, n <= {sl_bound}"),
        sl,
    ));

    out.push(CheckResult::of(
        "atlas/spot quotient-linear rank one: 3 = 3",
        verify_bijection(SymmetricPair::AiiiPgl { p: 1, q: 1 }) .map(|(d, l)| d == 3 && l == 3).unwrap_or(false),
        "",
    ));
    out.push(CheckResult::of(
        "atlas/spot special linear rank one: 5 = 5",
        verify_bijection(SymmetricPair::AiiiSl { p: 1, q: 1 }).map(|(d, l)| d == 5 && l == 5).unwrap_or(false),
        "",
    ));
    out
}

/// Stabilizer tables, 2-group quotients, and orbit counts at small rank.
pub fn suite_weyl(cfg: &RunConfig) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let bound = cfg.weyl_rank_bound;

    let mut table_pairs: Vec<SymmetricPair> = Vec::new();
    for n in 0..=6u32 {
        table_pairs.push(SymmetricPair::Ci { n });
    }
    for q in 0..=5u32 {
        table_pairs.push(SymmetricPair::Bdi { p: q + 1, q }); // split odd
        table_pairs.push(SymmetricPair::Bdi { p: q + 2, q }); // non-split even
        table_pairs.push(SymmetricPair::Bdi { p: q + 3, q }); // non-split odd
        table_pairs.push(SymmetricPair::Bdi { p: q + 5, q });
    }
    for n in 0..=6u32 {
        table_pairs.push(SymmetricPair::Bdi { p: n, q: n }); // split even
    }

    let mut bad_table = Vec::new();
    let mut bad_quotient = Vec::new();
    for &pair in &table_pairs {
        let datum = restricted_root_datum(pair);
        if datum.rank > bound {
            continue;
        }
        for m in 0..=datum.i_rank {
            let chi = ICharacter::standard(datum.i_rank, m);
            let (w, w0) = match stabilizer_subgroups(pair, &chi, bound) {
                Ok(x) => x,
                Err(e) => {
                    bad_table.push(format!("{pair} m={m}: {e}"));
                    continue;
                }
            };
            if let Some((ew, ew0)) = expected_stabilizer(pair, m) {
                if w != ew || w0 != ew0 {
                    bad_table.push(format!(
                        "{pair} m={m}: ({}, {}) != expected ({}, {})",
                        w.len(),
                        w0.len(),
                        ew.len(),
                        ew0.len()
                    ));
                }
            }
            let quotient = charlab_core::weyl::group::quotient_invariants(&w, &w0);
            if quotient.iter().any(|&d| d != 2) {
                bad_quotient.push(format!("{pair} m={m}: {quotient:?}"));
            }
        }
    }
    out.push(CheckResult::of(
        "weyl/stabilizers equal the tabulated block subgroups",
        bad_table.is_empty(),
        bad_table.join("; "),
    ));
    out.push(CheckResult::of(
        "weyl/quotients are elementary abelian 2-groups",
        bad_quotient.is_empty(),
        bad_quotient.join("; "),
    ));

    // orbit counts and the standard representatives
    let mut bad = Vec::new();
    for &pair in &table_pairs {
        let datum = restricted_root_datum(pair);
        if datum.rank > bound {
            continue;
        }
        let orbits = match character_orbits(pair, bound) {
            Ok(o) => o,
            Err(e) => {
                bad.push(format!("{pair}: {e}"));
                continue;
            }
        };
        let expected = datum.i_rank as usize + 1;
        if orbits.len() != expected {
            bad.push(format!("{pair}: {} orbits, expected {expected}", orbits.len()));
        }
        let reps = character_orbit_reps(pair);
        for orbit in &orbits {
            if reps.iter().filter(|r| orbit.contains(r)).count() != 1 {
                bad.push(format!("{pair}: representatives do not split the orbits"));
            }
        }
    }
    out.push(CheckResult::of(
        "weyl/character orbit counts match the rank-plus-one rule",
        bad.is_empty(),
        bad.join("; "),
    ));

    let spot = stabilizer(SymmetricPair::Ci { n: 2 }, &ICharacter::standard(2, 1), bound)
        .map(|d| d.stabilizer_order == 4 && d.w0_order == 2)
        .unwrap_or(false);
    out.push(CheckResult::of("weyl/spot symplectic-split rank two: orders 4 and 2", spot, ""));
    out
}
