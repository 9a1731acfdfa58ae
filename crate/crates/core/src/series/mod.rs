//! Exact truncated formal power series in one and two variables.
//!
//! Coefficients are arbitrary-precision rationals; all arithmetic truncates
//! at the stated order and never reports coefficients beyond it.

pub mod identities;
pub mod product;

use crate::error::Error;
use num::{BigRational, One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exact rational coefficient type.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

pub fn rat_frac(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

/// Renders a rational as `a` or `a/b`.
pub fn rat_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// One-variable truncated series: coefficients of x^0 .. x^order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series1 {
    order: usize,
    coeffs: Vec<Rat>,
}

impl Series1 {
    pub fn zero(order: usize) -> Self {
        Series1 { order, coeffs: vec![Rat::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Series1::zero(order);
        s.coeffs[0] = Rat::one();
        s
    }

    pub fn constant(order: usize, c: Rat) -> Self {
        let mut s = Series1::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// c * x^k, zero if k exceeds the order.
    pub fn monomial(order: usize, k: usize, c: Rat) -> Self {
        let mut s = Series1::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn set_coeff(&mut self, k: usize, c: Rat) {
        if k <= self.order {
            self.coeffs[k] = c;
        }
    }

    pub fn coefficient(&self, k: usize) -> Result<&Rat, Error> {
        self.coeffs.get(k).ok_or(Error::OutOfRange { exponent: k, order: self.order })
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, c: &Rat) -> Series1 {
        Series1 { order: self.order, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Shift by x^k, truncating.
    pub fn shift(&self, k: usize) -> Series1 {
        let mut out = Series1::zero(self.order);
        for i in 0..=self.order.saturating_sub(k) {
            out.coeffs[i + k] = self.coeffs[i].clone();
        }
        out
    }

    /// Formal substitution x -> -x.
    pub fn substitute_neg(&self) -> Series1 {
        let mut out = self.clone();
        for (i, c) in out.coeffs.iter_mut().enumerate() {
            if i % 2 == 1 {
                *c = -c.clone();
            }
        }
        out
    }

    /// Multiplicative inverse; errors if the constant term is zero.
    pub fn invert(&self) -> Result<Series1, Error> {
        if self.coeffs[0].is_zero() {
            return Err(Error::NonUnit);
        }
        let a0 = self.coeffs[0].clone();
        let mut out = Series1::zero(self.order);
        out.coeffs[0] = Rat::one() / &a0;
        for n in 1..=self.order {
            let mut acc = Rat::zero();
            for j in 1..=n {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &out.coeffs[n - j];
                }
            }
            out.coeffs[n] = -acc / &a0;
        }
        Ok(out)
    }

    /// Multiply in place by (1 + sign * x^step)^power, with generalized
    /// binomial coefficients for negative powers. step = 0 scales by
    /// (1+sign)^power and errors when that base is 0 with power < 0.
    pub fn mul_binomial_factor(&mut self, step: usize, sign: i64, power: i64) -> Result<(), Error> {
        assert!(sign == 1 || sign == -1);
        if power == 0 {
            return Ok(());
        }
        if step == 0 {
            let base = rat(1 + sign);
            if base.is_zero() {
                if power < 0 {
                    return Err(Error::NonUnit);
                }
                *self = Series1::zero(self.order);
                return Ok(());
            }
            let mut c = Rat::one();
            let p = power.unsigned_abs();
            for _ in 0..p {
                if power > 0 {
                    c *= &base;
                } else {
                    c /= &base;
                }
            }
            *self = self.scale(&c);
            return Ok(());
        }
        // factor = sum_j C(power, j) sign^j x^(j*step)
        let jmax = self.order / step;
        let mut factor = Series1::zero(self.order);
        let mut c = Rat::one();
        factor.coeffs[0] = c.clone();
        for j in 0..jmax {
            // C(p, j+1) = C(p, j) * (p - j) / (j + 1)
            c = c * rat(power - j as i64) / rat(j as i64 + 1);
            let signed = if sign < 0 && (j + 1) % 2 == 1 { -c.clone() } else { c.clone() };
            factor.coeffs[(j + 1) * step] = signed;
        }
        *self = &*self * &factor;
        Ok(())
    }

    /// First exponent at which the two series differ, if any.
    pub fn first_mismatch(&self, other: &Series1) -> Option<usize> {
        let n = self.order.min(other.order);
        (0..=n).find(|&i| self.coeffs[i] != other.coeffs[i])
    }
}

impl Add for &Series1 {
    type Output = Series1;
    fn add(self, rhs: &Series1) -> Series1 {
        let order = self.order.min(rhs.order);
        let mut out = Series1::zero(order);
        for i in 0..=order {
            out.coeffs[i] = &self.coeffs[i] + &rhs.coeffs[i];
        }
        out
    }
}

impl Sub for &Series1 {
    type Output = Series1;
    fn sub(self, rhs: &Series1) -> Series1 {
        let order = self.order.min(rhs.order);
        let mut out = Series1::zero(order);
        for i in 0..=order {
            out.coeffs[i] = &self.coeffs[i] - &rhs.coeffs[i];
        }
        out
    }
}

impl Mul for &Series1 {
    type Output = Series1;
    fn mul(self, rhs: &Series1) -> Series1 {
        let order = self.order.min(rhs.order);
        let mut out = Series1::zero(order);
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                if !rhs.coeffs[j].is_zero() {
                    out.coeffs[i + j] += &self.coeffs[i] * &rhs.coeffs[j];
                }
            }
        }
        out
    }
}

impl Neg for &Series1 {
    type Output = Series1;
    fn neg(self) -> Series1 {
        Series1 { order: self.order, coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

impl fmt::Display for Series1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            if i == 0 || !a.is_one() {
                write!(f, "{}", rat_string(&a))?;
            }
            if i > 0 {
                if !a.is_one() {
                    write!(f, "*")?;
                }
                write!(f, "x^{i}")?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Two-variable truncated series: coefficients of u^i v^j, i <= nu, j <= nv.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series2 {
    nu: usize,
    nv: usize,
    coeffs: Vec<Rat>, // row-major: index i * (nv+1) + j
}

impl Series2 {
    pub fn zero(nu: usize, nv: usize) -> Self {
        Series2 { nu, nv, coeffs: vec![Rat::zero(); (nu + 1) * (nv + 1)] }
    }

    pub fn one(nu: usize, nv: usize) -> Self {
        let mut s = Series2::zero(nu, nv);
        s.coeffs[0] = Rat::one();
        s
    }

    pub fn orders(&self) -> (usize, usize) {
        (self.nu, self.nv)
    }

    fn idx(&self, i: usize, j: usize) -> usize {
        i * (self.nv + 1) + j
    }

    pub fn set_coeff(&mut self, i: usize, j: usize, c: Rat) {
        if i <= self.nu && j <= self.nv {
            let k = self.idx(i, j);
            self.coeffs[k] = c;
        }
    }

    pub fn coefficient(&self, i: usize, j: usize) -> Result<&Rat, Error> {
        if i > self.nu {
            return Err(Error::OutOfRange { exponent: i, order: self.nu });
        }
        if j > self.nv {
            return Err(Error::OutOfRange { exponent: j, order: self.nv });
        }
        Ok(&self.coeffs[i * (self.nv + 1) + j])
    }

    pub fn mul(&self, rhs: &Series2) -> Series2 {
        assert_eq!((self.nu, self.nv), (rhs.nu, rhs.nv));
        let mut out = Series2::zero(self.nu, self.nv);
        for i in 0..=self.nu {
            for j in 0..=self.nv {
                let a = &self.coeffs[self.idx(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..=self.nu - i {
                    for l in 0..=self.nv - j {
                        let b = &rhs.coeffs[rhs.idx(k, l)];
                        if !b.is_zero() {
                            let t = out.idx(i + k, j + l);
                            out.coeffs[t] += a * b;
                        }
                    }
                }
            }
        }
        out
    }

    /// Multiply in place by (1 + sign * u^eu v^ev)^power.
    pub fn mul_binomial_factor(
        &mut self,
        eu: usize,
        ev: usize,
        sign: i64,
        power: i64,
    ) -> Result<(), Error> {
        assert!(sign == 1 || sign == -1);
        if power == 0 {
            return Ok(());
        }
        if eu == 0 && ev == 0 {
            if sign == -1 {
                if power < 0 {
                    return Err(Error::NonUnit);
                }
                *self = Series2::zero(self.nu, self.nv);
                return Ok(());
            }
            // (1+1)^power
            let mut c = Rat::one();
            for _ in 0..power.unsigned_abs() {
                if power > 0 {
                    c *= rat(2);
                } else {
                    c /= rat(2);
                }
            }
            for x in &mut self.coeffs {
                *x *= &c;
            }
            return Ok(());
        }
        let jmax_u = self.nu.checked_div(eu).unwrap_or(usize::MAX);
        let jmax_v = self.nv.checked_div(ev).unwrap_or(usize::MAX);
        let jmax = jmax_u.min(jmax_v);
        let mut factor = Series2::zero(self.nu, self.nv);
        let mut c = Rat::one();
        factor.coeffs[0] = c.clone();
        for j in 0..jmax {
            c = c * rat(power - j as i64) / rat(j as i64 + 1);
            let signed = if sign < 0 && (j + 1) % 2 == 1 { -c.clone() } else { c.clone() };
            factor.set_coeff((j + 1) * eu, (j + 1) * ev, signed);
        }
        *self = self.mul(&factor);
        Ok(())
    }

    /// The k-th diagonal as a one-variable series in t with wt(p+k, p) at
    /// t^(2p) (the convention used by the diagonal generating functions).
    pub fn diagonal(&self, k: usize, order: usize) -> Series1 {
        let mut out = Series1::zero(order);
        let mut p = 0;
        while 2 * p <= order && p + k <= self.nu && p <= self.nv {
            out.set_coeff(2 * p, self.coeffs[self.idx(p + k, p)].clone());
            p += 1;
        }
        out
    }
}
