//! Simple-module counts of the hyperoctahedral Hecke algebras with
//! parameters +-1, and the full-support character-sheaf counts built from
//! them.

use crate::diagram::SymmetricPair;
use crate::partition::{bipartition_count, partition_count};
use crate::series::product::{hecke_d_product, hecke_e_product};
use crate::series::{rat, rat_frac, Rat};
use num::{One, ToPrimitive};
use serde::{Deserialize, Serialize};
use std::sync::OnceLock;

const TABLE_ORDER: usize = 64;

fn d_table() -> &'static Vec<u64> {
    static TABLE: OnceLock<Vec<u64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let s = hecke_d_product().expand1(TABLE_ORDER).expect("product");
        (0..=TABLE_ORDER)
            .map(|k| s.coefficient(k).unwrap().to_integer().to_u64().unwrap())
            .collect()
    })
}

fn e_table() -> &'static Vec<u64> {
    static TABLE: OnceLock<Vec<u64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let s = hecke_e_product().expand1(TABLE_ORDER).expect("product");
        (0..=TABLE_ORDER)
            .map(|k| s.coefficient(k).unwrap().to_integer().to_u64().unwrap())
            .collect()
    })
}

/// d(k): simple modules of the type-B Hecke algebra with parameters (-1,-1).
pub fn hecke_d(k: u32) -> u64 {
    d_table()[k as usize]
}

/// e(k): simple modules of the type-B Hecke algebra with parameters (-1,1).
pub fn hecke_e(k: u32) -> u64 {
    e_table()[k as usize]
}

/// The Hecke algebra families whose simple-module counts appear in the
/// counting formulas, tagged by their two parameters (type B) or the single
/// parameter (type D).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum HeckeFamily {
    B1Neg1 { rank: u32 },
    B11 { rank: u32 },
    BNeg1Neg1 { rank: u32 },
    BNeg11 { rank: u32 },
    DNeg1 { rank: u32 },
}

/// Number of simple modules. Exact rational: the type-D count is e(n)/2,
/// whose integrality is a theorem checked by the test suite, and the rank-0
/// conventions all give 1.
pub fn hecke_count(family: HeckeFamily) -> Rat {
    match family {
        HeckeFamily::B1Neg1 { rank } => rat(partition_count(rank) as i64),
        HeckeFamily::B11 { rank } => rat(bipartition_count(rank) as i64),
        HeckeFamily::BNeg1Neg1 { rank } => rat(hecke_d(rank) as i64),
        HeckeFamily::BNeg11 { rank } => rat(hecke_e(rank) as i64),
        HeckeFamily::DNeg1 { rank } => {
            if rank == 0 {
                Rat::one()
            } else {
                rat(hecke_e(rank) as i64) / rat(2)
            }
        }
    }
}

/// Rank-zero bookkeeping mode: counting formulas consume the 1/2
/// conventions, label enumeration consumes true cardinalities.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountMode {
    Formula,
    True,
}

/// |Theta|: number of full-support character sheaves of the pair.
///
/// For the disconnected quotient pairs with equal parameters the extra
/// component contributes a separate label family which the atlas enumerates
/// explicitly; this count covers the identity-character pool (the special
/// linear pair with p = q is the one case whose extra bipartition pool is
/// folded in here, since its labels share the full-support stratum).
pub fn full_support_count(pair: SymmetricPair, mode: CountMode) -> Rat {
    match pair {
        SymmetricPair::Bdi { p, q } => {
            let r = p.min(q);
            if (p + q) % 2 == 1 {
                let sum: u64 = (0..=r).map(|k| hecke_d(k) * hecke_d(r - k)).sum();
                rat(sum as i64)
            } else if p == q {
                if r == 0 {
                    return match mode {
                        CountMode::Formula => rat_frac(1, 2),
                        CountMode::True => Rat::one(),
                    };
                }
                let sum: u64 = (0..=r).map(|k| hecke_e(k) * hecke_e(r - k)).sum();
                rat(sum as i64) / rat(2)
            } else {
                let sum: u64 = (0..=r).map(|k| hecke_e(k) * hecke_e(r - k)).sum();
                rat(sum as i64)
            }
        }
        SymmetricPair::Ci { n } => {
            let sum: u64 = (0..=n).map(|k| hecke_d(k) * hecke_e(n - k)).sum();
            rat(sum as i64)
        }
        SymmetricPair::AiiiSl { p, q } => {
            let r = p.min(q);
            let mut total = rat(partition_count(r) as i64);
            if p == q {
                total += rat(bipartition_count(r) as i64);
            }
            total
        }
        SymmetricPair::AiiiPgl { p, q } | SymmetricPair::Glgl { p, q } => {
            rat(partition_count(p.min(q)) as i64)
        }
        SymmetricPair::Cii { p, q } => rat(partition_count(p.min(q)) as i64),
        SymmetricPair::Diii { n } => rat(partition_count(n / 2) as i64),
    }
}

/// f_{m+1,m}: full-support count of the odd orthogonal pair of rank m.
pub fn f_odd(m: u32) -> Rat {
    full_support_count(SymmetricPair::Bdi { p: m + 1, q: m }, CountMode::Formula)
}

/// f_{m,m}: full-support count of the split even orthogonal pair, with the
/// formula convention f_{0,0} = 1/2.
pub fn f_even(m: u32, mode: CountMode) -> Rat {
    full_support_count(SymmetricPair::Bdi { p: m, q: m }, mode)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::product::{fullsupp_b_product, fullsupp_d_product};
    use crate::series::rat_string;

    #[test]
    fn hecke_table_spot_values() {
        assert_eq!((0..5).map(hecke_d).collect::<Vec<_>>(), vec![1, 1, 2, 3, 4]);
        assert_eq!((0..4).map(hecke_e).collect::<Vec<_>>(), vec![1, 2, 2, 4]);
        assert_eq!(hecke_count(HeckeFamily::B11 { rank: 2 }), rat(5));
        assert_eq!(hecke_count(HeckeFamily::B1Neg1 { rank: 4 }), rat(5));
        assert_eq!(hecke_count(HeckeFamily::DNeg1 { rank: 0 }), rat(1));
        assert_eq!(hecke_count(HeckeFamily::DNeg1 { rank: 3 }), rat(2));
    }

    #[test]
    fn e_is_even_up_to_sixty() {
        for n in 1..=60 {
            assert_eq!(hecke_e(n) % 2, 0, "e({n})");
        }
    }

    #[test]
    fn full_support_spot_values() {
        assert_eq!(full_support_count(SymmetricPair::Bdi { p: 2, q: 1 }, CountMode::Formula), rat(2));
        assert_eq!(full_support_count(SymmetricPair::Bdi { p: 1, q: 1 }, CountMode::Formula), rat(2));
        assert_eq!(
            rat_string(&full_support_count(SymmetricPair::Bdi { p: 0, q: 0 }, CountMode::Formula)),
            "1/2"
        );
        assert_eq!(full_support_count(SymmetricPair::Bdi { p: 0, q: 0 }, CountMode::True), rat(1));
        // |Theta_1| for the symplectic-split pair: d0 e1 + d1 e0 = 3
        assert_eq!(full_support_count(SymmetricPair::Ci { n: 1 }, CountMode::Formula), rat(3));
        assert_eq!(full_support_count(SymmetricPair::Ci { n: 0 }, CountMode::Formula), rat(1));
    }

    #[test]
    fn convolution_sums_match_closed_products() {
        let b = fullsupp_b_product().expand1(30).unwrap();
        let d = fullsupp_d_product().expand1(30).unwrap();
        for m in 0..=30u32 {
            assert_eq!(&f_odd(m), b.coefficient(m as usize).unwrap(), "f_(m+1,m) at {m}");
            assert_eq!(
                &f_even(m, CountMode::Formula),
                d.coefficient(m as usize).unwrap(),
                "f_(m,m) at {m}"
            );
        }
    }
}
