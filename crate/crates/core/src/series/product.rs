//! Product specifications for the infinite products used throughout the
//! counting formulas, and their truncated expansions.
//!
//! Every product in scope is a rational scalar times a monomial prefactor
//! times factors of the form (1 ± x^(a·k+b))^power over an index k running
//! from some start. A factor family is cut at the first index whose minimal
//! exponent exceeds the truncation order: beyond it every factor is 1 + O(x^N).

use super::{rat, rat_frac, Rat, Series1, Series2};
use crate::error::Error;
use num::One;

/// Exponent of one variable as an affine form step*k + offset in the index k.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AffineExp {
    pub step: i64,
    pub offset: i64,
}

impl AffineExp {
    pub fn new(step: i64, offset: i64) -> Self {
        assert!(step >= 0, "exponent step must be nonnegative");
        AffineExp { step, offset }
    }

    fn at(&self, k: i64) -> i64 {
        self.step * k + self.offset
    }
}

/// One factor family: prod_k (1 + sign x^{e1(k)} [y^{e2(k)}])^power for k
/// from `start` while the exponents stay within the truncation box.
#[derive(Debug, Clone)]
pub struct FactorFamily {
    pub exps: Vec<AffineExp>,
    pub sign: i64,
    pub power: i64,
    pub start: i64,
}

impl FactorFamily {
    pub fn one_var(step: i64, offset: i64, sign: i64, power: i64, start: i64) -> Self {
        FactorFamily { exps: vec![AffineExp::new(step, offset)], sign, power, start }
    }

    pub fn two_var(
        u: (i64, i64),
        v: (i64, i64),
        sign: i64,
        power: i64,
        start: i64,
    ) -> Self {
        FactorFamily {
            exps: vec![AffineExp::new(u.0, u.1), AffineExp::new(v.0, v.1)],
            sign,
            power,
            start,
        }
    }
}

/// A full product: scalar * x^prefactor * prod of factor families.
#[derive(Debug, Clone)]
pub struct ProductSpec {
    pub scalar: Rat,
    pub prefactor: Vec<usize>,
    pub factors: Vec<FactorFamily>,
}

impl ProductSpec {
    pub fn new() -> Self {
        ProductSpec { scalar: Rat::one(), prefactor: Vec::new(), factors: Vec::new() }
    }

    pub fn scalar(mut self, c: Rat) -> Self {
        self.scalar = c;
        self
    }

    pub fn prefactor(mut self, exps: &[usize]) -> Self {
        self.prefactor = exps.to_vec();
        self
    }

    /// Adds prod_{k>=start} (1 + sign x^{step k + offset})^power.
    pub fn factor(mut self, step: i64, offset: i64, sign: i64, power: i64, start: i64) -> Self {
        self.factors.push(FactorFamily::one_var(step, offset, sign, power, start));
        self
    }

    pub fn factor2(
        mut self,
        u: (i64, i64),
        v: (i64, i64),
        sign: i64,
        power: i64,
        start: i64,
    ) -> Self {
        self.factors.push(FactorFamily::two_var(u, v, sign, power, start));
        self
    }

    /// Expand to a one-variable truncated series.
    pub fn expand1(&self, order: usize) -> Result<Series1, Error> {
        let mut s = Series1::constant(order, self.scalar.clone());
        if let Some(&e) = self.prefactor.first() {
            s = s.shift(e);
        }
        for fam in &self.factors {
            assert_eq!(fam.exps.len(), 1, "one-variable expansion of multi-variable spec");
            let exp = fam.exps[0];
            let mut k = fam.start;
            loop {
                let e = exp.at(k);
                assert!(e >= 0, "negative exponent in factor family");
                if e as usize > order {
                    if exp.step == 0 {
                        break; // constant exponent family: single factor
                    }
                    break;
                }
                s.mul_binomial_factor(e as usize, fam.sign, fam.power)?;
                if exp.step == 0 {
                    break;
                }
                k += 1;
            }
        }
        Ok(s)
    }

    /// Expand to a two-variable truncated series.
    pub fn expand2(&self, nu: usize, nv: usize) -> Result<Series2, Error> {
        let mut s = Series2::zero(nu, nv);
        let (pu, pv) = match self.prefactor.as_slice() {
            [] => (0, 0),
            [u] => (*u, 0),
            [u, v, ..] => (*u, *v),
        };
        s.set_coeff(pu, pv, self.scalar.clone());
        for fam in &self.factors {
            assert_eq!(fam.exps.len(), 2, "two-variable expansion of one-variable spec");
            let (eu, ev) = (fam.exps[0], fam.exps[1]);
            let mut k = fam.start;
            loop {
                let a = eu.at(k);
                let b = ev.at(k);
                assert!(a >= 0 && b >= 0, "negative exponent in factor family");
                if a as usize > nu || b as usize > nv {
                    break;
                }
                s.mul_binomial_factor(a as usize, b as usize, fam.sign, fam.power)?;
                if eu.step == 0 && ev.step == 0 {
                    break;
                }
                k += 1;
            }
        }
        Ok(s)
    }
}

impl Default for ProductSpec {
    fn default() -> Self {
        ProductSpec::new()
    }
}

// ---------------------------------------------------------------------------
// Named products used by the counting formulas.
// ---------------------------------------------------------------------------

/// prod (1+x^{2s})(1+x^s): generating function of the d(k) simple-module counts.
pub fn hecke_d_product() -> ProductSpec {
    ProductSpec::new().factor(2, 0, 1, 1, 1).factor(1, 0, 1, 1, 1)
}

/// prod (1+x^{2s-1})(1+x^s): generating function of the e(k) simple-module counts.
pub fn hecke_e_product() -> ProductSpec {
    ProductSpec::new().factor(2, -1, 1, 1, 1).factor(1, 0, 1, 1, 1)
}

/// prod 1/(1-x^s): partition generating function.
pub fn partition_product() -> ProductSpec {
    ProductSpec::new().factor(1, 0, -1, -1, 1)
}

/// prod (1+x^s)/(1-x^s): Richardson-orbit counts b_C(n) for the
/// symplectic-split pair.
pub fn bc_product() -> ProductSpec {
    ProductSpec::new().factor(1, 0, 1, 1, 1).factor(1, 0, -1, -1, 1)
}

/// prod (1+x^s)^3/(1-x^s)^2: total orbital-complex count for the
/// symplectic-split pair.
pub fn cardinality_type_c_product() -> ProductSpec {
    ProductSpec::new().factor(1, 0, 1, 3, 1).factor(1, 0, -1, -2, 1)
}

/// 2x * prod (1+x^{4k})^2 (1+x^{2k})^2: sum over p of the odd-size
/// nilpotent-support counts b_{p, N-p}.
pub fn biorbital_b_product() -> ProductSpec {
    ProductSpec::new()
        .scalar(rat(2))
        .prefactor(&[1])
        .factor(4, 0, 1, 2, 1)
        .factor(2, 0, 1, 2, 1)
}

/// (1/2) prod (1+x^{4k-2})^2 (1+x^{2k})^2: even-size analogue.
pub fn biorbital_d_product() -> ProductSpec {
    ProductSpec::new()
        .scalar(rat_frac(1, 2))
        .factor(4, -2, 1, 2, 1)
        .factor(2, 0, 1, 2, 1)
}

/// x * prod (1+x^{4k})^2 (1+x^{2k})^2: generating function of b_n.
pub fn bn_product() -> ProductSpec {
    ProductSpec::new().prefactor(&[1]).factor(4, 0, 1, 2, 1).factor(2, 0, 1, 2, 1)
}

/// (1/4) prod (1+x^{4k-2})^2 (1+x^{2k})^2: generating function of c_n
/// (with the convention c_0 = 1/4).
pub fn cn_product() -> ProductSpec {
    ProductSpec::new().scalar(rat_frac(1, 4)).factor(4, -2, 1, 2, 1).factor(2, 0, 1, 2, 1)
}

/// prod (1+x^{2k})^2 (1+x^k)^2: generating function of the odd-rank
/// full-support counts f_{m+1,m}.
pub fn fullsupp_b_product() -> ProductSpec {
    ProductSpec::new().factor(2, 0, 1, 2, 1).factor(1, 0, 1, 2, 1)
}

/// (1/2) prod (1+x^{2k-1})^2 (1+x^k)^2: generating function of the
/// even-rank full-support counts f_{m,m} (with f_{0,0} = 1/2).
pub fn fullsupp_d_product() -> ProductSpec {
    ProductSpec::new().scalar(rat_frac(1, 2)).factor(2, -1, 1, 2, 1).factor(1, 0, 1, 2, 1)
}

/// F(x) = prod (1+x^{2m-1})^2 / (1-x^{2m-1})^2.
pub fn f_product() -> ProductSpec {
    ProductSpec::new().factor(2, -1, 1, 2, 1).factor(2, -1, -1, -2, 1)
}

/// 8x prod (1+x^{4k})^4 (1+x^{2k})^4: right side of the odd-part identity
/// for F(x) - F(-x).
pub fn fodd_rhs_product() -> ProductSpec {
    ProductSpec::new()
        .scalar(rat(8))
        .prefactor(&[1])
        .factor(4, 0, 1, 4, 1)
        .factor(2, 0, 1, 4, 1)
}

/// 2 prod (1+x^{4k-2})^4 (1+x^{2k})^4: right side of the even-part identity
/// for F(x) + F(-x).
pub fn feven_rhs_product() -> ProductSpec {
    ProductSpec::new().scalar(rat(2)).factor(4, -2, 1, 4, 1).factor(2, 0, 1, 4, 1)
}

/// The two-variable product generating wt(p,q):
/// prod_k 1/(1-u^{2k}v^{2k}) * prod_{m>=0} (1+u^{m+1}v^m)(1+u^m v^{m+1})
///                                        /((1-u^{m+1}v^m)(1-u^m v^{m+1})).
pub fn wt_two_variable_product() -> ProductSpec {
    ProductSpec::new()
        .factor2((2, 0), (2, 0), -1, -1, 1)
        .factor2((1, 1), (1, 0), 1, 1, 0)
        .factor2((1, 0), (1, 1), 1, 1, 0)
        .factor2((1, 1), (1, 0), -1, -1, 0)
        .factor2((1, 0), (1, 1), -1, -1, 0)
}

/// 2/(1+t^{2k}) * prod (1+t^{2m})/(1-t^{2m})^3: the k-th diagonal of the
/// wt generating function.
pub fn diagonal_product(k: usize) -> ProductSpec {
    let mut spec = ProductSpec::new().scalar(rat(2)).factor(2, 0, 1, 1, 1).factor(2, 0, -1, -3, 1);
    if k > 0 {
        spec = spec.factor(0, 2 * k as i64, 1, -1, 0);
    } else {
        spec = spec.scalar(rat(1)); // 2/(1+t^0) = 1
    }
    spec
}

/// prod (1+x^s)/(1-x^{2s})^2: total orbital-complex count for the
/// orthogonal pair with GL(n) fixed points.
pub fn diii_orbital_product() -> ProductSpec {
    ProductSpec::new().factor(1, 0, 1, 1, 1).factor(2, 0, -1, -2, 1)
}

/// 1/(1+x^l) prod (1+x^s)/(1-x^s)^3: closed form for per-signature totals
/// (offset l = p - q); the very even correction (3/2) prod 1/(1-x^{2s}) is
/// handled by the caller.
pub fn corollary_total_product(l: u32) -> ProductSpec {
    let mut spec = ProductSpec::new().factor(1, 0, 1, 1, 1).factor(1, 0, -1, -3, 1);
    if l > 0 {
        spec = spec.factor(0, l as i64, 1, -1, 0);
    } else {
        spec = spec.scalar(rat_frac(1, 2));
    }
    spec
}

/// prod 1/(1-x^{2s}).
pub fn even_partition_product() -> ProductSpec {
    ProductSpec::new().factor(2, 0, -1, -1, 1)
}

/// 1/(1+x^l) prod (1+x^{2s-1})^2/(1-x^{2s})^2: closed form for the
/// nilpotent-support counts b_{q+l,q}, odd total size.
pub fn corollary_nilp_odd_product(l: u32) -> ProductSpec {
    let mut spec = ProductSpec::new().factor(2, -1, 1, 2, 1).factor(2, 0, -1, -2, 1);
    if l > 0 {
        spec = spec.factor(0, l as i64, 1, -1, 0);
    } else {
        spec = spec.scalar(rat_frac(1, 2));
    }
    spec
}

/// 1/(1+x^l) prod (1+x^{2s})^2/(1-x^{2s})^2: closed form for the
/// nilpotent-support counts b_{q+l,q}, p and q both even.
pub fn corollary_nilp_even_product(l: u32) -> ProductSpec {
    let mut spec = ProductSpec::new().factor(2, 0, 1, 2, 1).factor(2, 0, -1, -2, 1);
    if l > 0 {
        spec = spec.factor(0, l as i64, 1, -1, 0);
    } else {
        spec = spec.scalar(rat_frac(1, 2));
    }
    spec
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hecke_products_spot_values() {
        let d = hecke_d_product().expand1(10).unwrap();
        let expect = [1i64, 1, 2, 3, 4];
        for (k, &v) in expect.iter().enumerate() {
            assert_eq!(*d.coefficient(k).unwrap(), rat(v), "d({k})");
        }
        let e = hecke_e_product().expand1(10).unwrap();
        let expect = [1i64, 2, 2, 4];
        for (k, &v) in expect.iter().enumerate() {
            assert_eq!(*e.coefficient(k).unwrap(), rat(v), "e({k})");
        }
    }

    #[test]
    fn empty_spec_is_one() {
        let s = ProductSpec::new().expand1(5).unwrap();
        assert_eq!(s, Series1::one(5));
    }

    #[test]
    fn partition_product_matches_counts() {
        let s = partition_product().expand1(30).unwrap();
        for n in 0..=30u32 {
            assert_eq!(
                *s.coefficient(n as usize).unwrap(),
                rat(crate::partition::partition_count(n) as i64)
            );
        }
    }

    #[test]
    fn cardinality_c_spot_value() {
        let s = cardinality_type_c_product().expand1(5).unwrap();
        assert_eq!(*s.coefficient(1).unwrap(), rat(5));
    }

    #[test]
    fn expansion_is_independent_of_factor_order() {
        let a = ProductSpec::new()
            .factor(2, 0, 1, 1, 1)
            .factor(1, 0, 1, 1, 1)
            .expand1(20)
            .unwrap();
        let b = ProductSpec::new()
            .factor(1, 0, 1, 1, 1)
            .factor(2, 0, 1, 1, 1)
            .expand1(20)
            .unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn concatenating_specs_multiplies_expansions() {
        use proptest::prelude::*;
        // factors (1 +- x^(step k + offset))^power, always units
        let factor_strategy =
            (1i64..4, 0i64..3, prop_oneof![Just(1i64), Just(-1)], prop_oneof![
                Just(-2i64),
                Just(-1),
                Just(1),
                Just(2)
            ]);
        let spec_strategy = proptest::collection::vec(factor_strategy, 1..4);
        proptest!(|(a in spec_strategy.clone(), b in spec_strategy)| {
            let order = 12;
            let build = |fams: &[(i64, i64, i64, i64)]| {
                let mut spec = ProductSpec::new();
                for &(step, offset, sign, power) in fams {
                    spec = spec.factor(step, offset, sign, power, 1);
                }
                spec
            };
            let sa = build(&a).expand1(order).unwrap();
            let sb = build(&b).expand1(order).unwrap();
            let mut joined = build(&a);
            for fam in build(&b).factors {
                joined.factors.push(fam);
            }
            let sc = joined.expand1(order).unwrap();
            prop_assert_eq!(sc, &sa * &sb);
        });
    }

    #[test]
    fn wt_product_spot_values() {
        let f = wt_two_variable_product().expand2(4, 4).unwrap();
        // wt(2,1) = 6
        assert_eq!(*f.coefficient(2, 1).unwrap(), rat(6));
        // symmetry
        for i in 0..=4 {
            for j in 0..=4 {
                assert_eq!(f.coefficient(i, j).unwrap(), f.coefficient(j, i).unwrap());
            }
        }
    }
}
