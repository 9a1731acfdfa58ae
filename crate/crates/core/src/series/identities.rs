//! Registry of the combinatorial and q-series identities checked by the
//! verification suite. Each verification expands or enumerates both sides
//! exactly and compares coefficientwise up to the requested order.

use super::product::*;
use super::{rat, rat_frac, Rat, Series1};
use crate::diagram::SymmetricPair;
use crate::error::Error;
use crate::partition::{
    enumerate_partitions_with, p_distinct_sizes,
};
use crate::richardson::odd_partition_weight;
use num::{One, Zero};
use serde::{Deserialize, Serialize};

/// Outcome of one identity verification.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerifyReport {
    pub identity: String,
    pub order: usize,
    pub holds: bool,
    #[serde(rename = "firstMismatch")]
    pub first_mismatch: Option<String>,
}

impl VerifyReport {
    fn ok(identity: &str, order: usize) -> Self {
        VerifyReport { identity: identity.into(), order, holds: true, first_mismatch: None }
    }

    fn fail(identity: &str, order: usize, detail: String) -> Self {
        VerifyReport { identity: identity.into(), order, holds: false, first_mismatch: Some(detail) }
    }
}

pub const IDENTITY_NAMES: [&str; 10] = [
    "C2_wt_product",
    "C3_diagonal",
    "C2b_bn",
    "C2b_cn",
    "Fodd",
    "Feven",
    "qGauss_at_CI_specialization",
    "psi1_specializations",
    "hecke_CI_count",
    "partition_identity_1",
];

/// Weighted count of allowable orthogonal signed Young diagrams of signature
/// (p, q): weight 2^(r+1) for diagrams with an odd part, weight 1 otherwise.
/// (Equivalently, 2^(r+1) for all diagrams minus the very even count
/// p(q/2) when p = q: all-even diagrams have r = 0 and there are p(q/2) of
/// them.)
pub fn wt_enumerated(p: u32, q: u32) -> Rat {
    let mut total = Rat::zero();
    for d in crate::diagram::enumerate_syd_raw(SymmetricPair::Bdi { p, q }) {
        let has_odd = d.groups().iter().any(|g| g.len % 2 == 1);
        let w = if has_odd {
            1u64 << (crate::component::bd_r(&d) + 1)
        } else {
            1
        };
        total += rat(w as i64);
    }
    total
}

/// b_n: weighted sum over partitions of 2n+1 into odd parts.
pub fn bn_enumerated(n: u32) -> u64 {
    enumerate_partitions_with(2 * n + 1, |p| p % 2 == 1)
        .iter()
        .map(odd_partition_weight)
        .sum()
}

/// c_n: weighted sum over partitions of 2n into odd parts (n >= 1; the
/// formula side uses the convention c_0 = 1/4).
pub fn cn_enumerated(n: u32) -> u64 {
    enumerate_partitions_with(2 * n, |p| p % 2 == 1)
        .iter()
        .map(odd_partition_weight)
        .sum()
}

fn check_series(identity: &str, order: usize, lhs: &Series1, rhs: &Series1) -> VerifyReport {
    match lhs.first_mismatch(rhs) {
        None => VerifyReport::ok(identity, order),
        Some(k) => VerifyReport::fail(
            identity,
            order,
            format!(
                "x^{k}: lhs {} != rhs {}",
                super::rat_string(lhs.coefficient(k).unwrap()),
                super::rat_string(rhs.coefficient(k).unwrap())
            ),
        ),
    }
}

fn verify_wt_product(order: usize) -> VerifyReport {
    let name = "C2_wt_product";
    let f = match wt_two_variable_product().expand2(order, order) {
        Ok(f) => f,
        Err(e) => return VerifyReport::fail(name, order, e.to_string()),
    };
    for p in 0..=order {
        for q in 0..=order.saturating_sub(p) {
            let enumerated = wt_enumerated(p as u32, q as u32);
            let product = f.coefficient(p, q).unwrap();
            if &enumerated != product {
                return VerifyReport::fail(
                    name,
                    order,
                    format!(
                        "u^{p} v^{q}: enumeration {} != product {}",
                        super::rat_string(&enumerated),
                        super::rat_string(product)
                    ),
                );
            }
        }
    }
    VerifyReport::ok(name, order)
}

fn verify_diagonals(order: usize) -> VerifyReport {
    let name = "C3_diagonal";
    let max_k = 4usize;
    let nv = order / 2;
    let nu = nv + max_k;
    let f = match wt_two_variable_product().expand2(nu, nv) {
        Ok(f) => f,
        Err(e) => return VerifyReport::fail(name, order, e.to_string()),
    };
    for k in 0..=max_k {
        let lhs = f.diagonal(k, order);
        let rhs = match diagonal_product(k).expand1(order) {
            Ok(s) => s,
            Err(e) => return VerifyReport::fail(name, order, e.to_string()),
        };
        let report = check_series(name, order, &lhs, &rhs);
        if !report.holds {
            return VerifyReport::fail(
                name,
                order,
                format!("diagonal k={k}: {}", report.first_mismatch.unwrap()),
            );
        }
    }
    VerifyReport::ok(name, order)
}

fn verify_bn(order: usize) -> VerifyReport {
    let name = "C2b_bn";
    let rhs = match bn_product().expand1(order) {
        Ok(s) => s,
        Err(e) => return VerifyReport::fail(name, order, e.to_string()),
    };
    let mut n = 0;
    while (2 * n + 1) as usize <= order {
        let lhs = rat(bn_enumerated(n) as i64);
        let r = rhs.coefficient((2 * n + 1) as usize).unwrap();
        if &lhs != r {
            return VerifyReport::fail(
                name,
                order,
                format!("b_{n}: enumeration {} != product {}", lhs, r),
            );
        }
        n += 1;
    }
    VerifyReport::ok(name, order)
}

fn verify_cn(order: usize) -> VerifyReport {
    let name = "C2b_cn";
    let rhs = match cn_product().expand1(order) {
        Ok(s) => s,
        Err(e) => return VerifyReport::fail(name, order, e.to_string()),
    };
    // c_0 is 1/4 by convention on the product side; start at n = 1.
    let mut n = 1;
    while (2 * n) as usize <= order {
        let lhs = rat(cn_enumerated(n) as i64);
        let r = rhs.coefficient((2 * n) as usize).unwrap();
        if &lhs != r {
            return VerifyReport::fail(
                name,
                order,
                format!("c_{n}: enumeration {} != product {}", lhs, r),
            );
        }
        n += 1;
    }
    VerifyReport::ok(name, order)
}

fn verify_fodd(order: usize) -> VerifyReport {
    let name = "Fodd";
    let f = match f_product().expand1(order) {
        Ok(s) => s,
        Err(e) => return VerifyReport::fail(name, order, e.to_string()),
    };
    let lhs = &f - &f.substitute_neg();
    let rhs = match fodd_rhs_product().expand1(order) {
        Ok(s) => s,
        Err(e) => return VerifyReport::fail(name, order, e.to_string()),
    };
    check_series(name, order, &lhs, &rhs)
}

fn verify_feven(order: usize) -> VerifyReport {
    let name = "Feven";
    let f = match f_product().expand1(order) {
        Ok(s) => s,
        Err(e) => return VerifyReport::fail(name, order, e.to_string()),
    };
    let lhs = &f + &f.substitute_neg();
    let rhs = match feven_rhs_product().expand1(order) {
        Ok(s) => s,
        Err(e) => return VerifyReport::fail(name, order, e.to_string()),
    };
    check_series(name, order, &lhs, &rhs)
}

/// Left side of the q-Gauss specialization: the sum over k of
/// (-q^2;q^4)_k^2 / ((q^4;q^4)_k (q^6;q^4)_k) q^{2k}.
fn qgauss_lhs(order: usize) -> Result<Series1, Error> {
    let mut sum = Series1::zero(order);
    let mut numerator = Series1::one(order);
    let mut denominator = Series1::one(order);
    let mut k = 0usize;
    while 2 * k <= order {
        if k > 0 {
            // multiply numerator by (1 + q^{4(k-1)+2})^2
            let e = 4 * (k - 1) + 2;
            let mut step = Series1::one(order);
            step.mul_binomial_factor(e, 1, 2)?;
            numerator = &numerator * &step;
            // denominator gains (1 - q^{4k}) (1 - q^{4(k-1)+6})
            let mut step = Series1::one(order);
            step.mul_binomial_factor(4 * k, -1, 1)?;
            step.mul_binomial_factor(4 * (k - 1) + 6, -1, 1)?;
            denominator = &denominator * &step;
        }
        let term = &(&numerator * &denominator.invert()?).shift(2 * k);
        sum = &sum + term;
        k += 1;
    }
    Ok(sum)
}

fn qgauss_rhs_product() -> ProductSpec {
    // (-q^4;q^4)_inf^2 / ((q^6;q^4)_inf (q^2;q^4)_inf)
    ProductSpec::new()
        .factor(4, 0, 1, 2, 1)
        .factor(4, 2, -1, -1, 1)
        .factor(4, 2, -1, -1, 0)
}

fn verify_qgauss(order: usize) -> VerifyReport {
    let name = "qGauss_at_CI_specialization";
    let lhs = match qgauss_lhs(order) {
        Ok(s) => s,
        Err(e) => return VerifyReport::fail(name, order, e.to_string()),
    };
    let rhs = match qgauss_rhs_product().expand1(order) {
        Ok(s) => s,
        Err(e) => return VerifyReport::fail(name, order, e.to_string()),
    };
    check_series(name, order, &lhs, &rhs)
}

/// Lattice sum over k in a residue class: sum of q^k / (1 + q^{2k}) folded
/// to one side (the k and -k terms agree), with the k = 0 term worth 1/2.
fn lattice_sum(order: usize, even: bool) -> Series1 {
    let mut sum = Series1::zero(order);
    if even {
        sum.set_coeff(0, rat_frac(1, 2));
    }
    let start = if even { 2 } else { 1 };
    let mut k = start;
    while k <= order {
        // 2 q^k (1 - q^{2k} + q^{4k} - ...)
        let mut e = k;
        let mut sign = 1i64;
        while e <= order {
            let c = sum.coefficient(e).unwrap() + rat(2 * sign);
            sum.set_coeff(e, c);
            e += 2 * k;
            sign = -sign;
        }
        k += 2;
    }
    sum
}

fn psi1_odd_rhs() -> ProductSpec {
    // 2q (-q^4;q^4)^2 (q^4;q^4)^2 / ((q^2;q^4)^2 (-q^2;q^4)^2)
    ProductSpec::new()
        .scalar(rat(2))
        .prefactor(&[1])
        .factor(4, 0, 1, 2, 1)
        .factor(4, 0, -1, 2, 1)
        .factor(4, 2, -1, -2, 0)
        .factor(4, 2, 1, -2, 0)
}

fn psi1_even_rhs() -> ProductSpec {
    // (1/2) (-q^2;q^4)^2 (q^4;q^4)^2 / ((q^2;q^4)^2 (-q^4;q^4)^2)
    ProductSpec::new()
        .scalar(rat_frac(1, 2))
        .factor(4, 2, 1, 2, 0)
        .factor(4, 0, -1, 2, 1)
        .factor(4, 2, -1, -2, 0)
        .factor(4, 0, 1, -2, 1)
}

fn verify_psi1(order: usize) -> VerifyReport {
    let name = "psi1_specializations";
    for (even, spec, tag) in [
        (false, psi1_odd_rhs(), "odd"),
        (true, psi1_even_rhs(), "even"),
    ] {
        let lhs = lattice_sum(order, even);
        let rhs = match spec.expand1(order) {
            Ok(s) => s,
            Err(e) => return VerifyReport::fail(name, order, e.to_string()),
        };
        let report = check_series(name, order, &lhs, &rhs);
        if !report.holds {
            return VerifyReport::fail(
                name,
                order,
                format!("{tag} instance: {}", report.first_mismatch.unwrap()),
            );
        }
    }
    VerifyReport::ok(name, order)
}

fn verify_hecke_ci(order: usize) -> VerifyReport {
    let name = "hecke_CI_count";
    let max_n = order.min(14) as u32;
    let rhs = match cardinality_type_c_product().expand1(max_n as usize) {
        Ok(s) => s,
        Err(e) => return VerifyReport::fail(name, order, e.to_string()),
    };
    for n in 0..=max_n {
        let direct = rat(crate::component::orbital_complex_count(SymmetricPair::Ci { n }) as i64);
        let product = rhs.coefficient(n as usize).unwrap();
        if &direct != product {
            return VerifyReport::fail(
                name,
                order,
                format!("n={n}: enumeration {} != coefficient {}", direct, product),
            );
        }
    }
    VerifyReport::ok(name, order)
}

fn verify_partition_identity(order: usize) -> VerifyReport {
    let name = "partition_identity_1";
    let rhs = match bc_product().expand1(order) {
        Ok(s) => s,
        Err(e) => return VerifyReport::fail(name, order, e.to_string()),
    };
    for n in 0..=order as u32 {
        let mut lhs = Rat::zero();
        for k in 0..=n {
            let c = p_distinct_sizes(n, k);
            if c > 0 {
                lhs += rat(c as i64) * rat(1i64 << k.min(62));
            }
        }
        let r = rhs.coefficient(n as usize).unwrap();
        if &lhs != r {
            return VerifyReport::fail(
                name,
                order,
                format!("n={n}: sum {} != coefficient {}", lhs, r),
            );
        }
    }
    VerifyReport::ok(name, order)
}

/// Verifies one named identity to the given order.
pub fn verify_identity(name: &str, order: usize) -> Result<VerifyReport, Error> {
    Ok(match name {
        "C2_wt_product" => verify_wt_product(order),
        "C3_diagonal" => verify_diagonals(order),
        "C2b_bn" => verify_bn(order),
        "C2b_cn" => verify_cn(order),
        "Fodd" => verify_fodd(order),
        "Feven" => verify_feven(order),
        "qGauss_at_CI_specialization" => verify_qgauss(order),
        "psi1_specializations" => verify_psi1(order),
        "hecke_CI_count" => verify_hecke_ci(order),
        "partition_identity_1" => verify_partition_identity(order),
        other => return Err(Error::UnknownIdentity(other.into())),
    })
}

/// Default order for each identity in the full suite: one-variable
/// identities expand to `order1`, the two-variable weighted count to
/// `order2` total degree, the weighted sums to their natural index ranges.
pub fn appendix_suite(order1: usize, order2: usize) -> Vec<VerifyReport> {
    let mut reports = Vec::new();
    let runs: [(&str, usize); 10] = [
        ("C2_wt_product", order2),
        ("C3_diagonal", 24),
        ("C2b_bn", 25),
        ("C2b_cn", 24),
        ("Fodd", order1),
        ("Feven", order1),
        ("qGauss_at_CI_specialization", order1),
        ("psi1_specializations", order1),
        ("hecke_CI_count", 12),
        ("partition_identity_1", order1),
    ];
    for (name, order) in runs {
        reports.push(verify_identity(name, order).expect("registered identity"));
    }
    reports
}

/// Checks that one times anything keeps exactness: used by property tests.
pub fn is_exactly_one(s: &Series1) -> bool {
    s.coefficient(0).map(|c| c.is_one()).unwrap_or(false)
        && (1..=s.order()).all(|k| s.coefficient(k).unwrap().is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rat_string;

    #[test]
    fn wt_spot_value() {
        assert_eq!(wt_enumerated(2, 1), rat(6));
        assert_eq!(wt_enumerated(0, 0), rat(1));
        // wt(1,1): single diagram 1+1- with r=1: weight 4
        assert_eq!(wt_enumerated(1, 1), rat(4));
    }

    #[test]
    fn bn_cn_small_values() {
        assert_eq!(bn_enumerated(0), 1);
        assert_eq!(bn_enumerated(1), 2);
        assert_eq!(bn_enumerated(2), 5);
        assert_eq!(cn_enumerated(1), 1);
    }

    #[test]
    fn wt_product_holds_to_total_degree_eight() {
        let report = verify_identity("C2_wt_product", 8).unwrap();
        assert!(report.holds, "{:?}", report.first_mismatch);
    }

    #[test]
    fn one_variable_identities_hold_to_order_thirty() {
        for name in [
            "Fodd",
            "Feven",
            "qGauss_at_CI_specialization",
            "psi1_specializations",
            "partition_identity_1",
        ] {
            let report = verify_identity(name, 30).unwrap();
            assert!(report.holds, "{name}: {:?}", report.first_mismatch);
        }
    }

    #[test]
    fn weighted_sums_match_products() {
        let report = verify_identity("C2b_bn", 15).unwrap();
        assert!(report.holds, "{:?}", report.first_mismatch);
        let report = verify_identity("C2b_cn", 14).unwrap();
        assert!(report.holds, "{:?}", report.first_mismatch);
    }

    #[test]
    fn diagonals_hold_to_order_twelve() {
        let report = verify_identity("C3_diagonal", 12).unwrap();
        assert!(report.holds, "{:?}", report.first_mismatch);
    }

    #[test]
    fn hecke_ci_count_matches() {
        let report = verify_identity("hecke_CI_count", 8).unwrap();
        assert!(report.holds, "{:?}", report.first_mismatch);
    }

    #[test]
    fn unknown_identity_is_an_error() {
        assert!(verify_identity("nope", 10).is_err());
    }

    #[test]
    fn coefficient_of_u2v_is_six() {
        let f = wt_two_variable_product().expand2(3, 3).unwrap();
        assert_eq!(rat_string(f.coefficient(2, 1).unwrap()), "6");
    }
}
