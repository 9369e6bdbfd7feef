//! Multivariate power series truncated independently in each variable.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::multipoly::MultiPoly;
use crate::rational::Q;

/// Dense coefficients for exponents `0..=orders[v]` in each variable `v`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries {
    orders: Vec<usize>,
    strides: Vec<usize>,
    data: Vec<Q>,
}

impl TruncatedSeries {
    pub fn zero(orders: &[usize]) -> Self {
        let mut strides = vec![1; orders.len()];
        for v in (0..orders.len().saturating_sub(1)).rev() {
            strides[v] = strides[v + 1] * (orders[v + 1] + 1);
        }
        let size = orders.iter().map(|o| o + 1).product();
        TruncatedSeries {
            orders: orders.to_vec(),
            strides,
            data: vec![Q::zero(); size],
        }
    }

    pub fn one(orders: &[usize]) -> Self {
        let mut s = Self::zero(orders);
        s.data[0] = Q::one();
        s
    }

    /// Truncates a polynomial to the given orders.
    pub fn from_poly(p: &MultiPoly, orders: &[usize]) -> Self {
        assert_eq!(p.nvars(), orders.len());
        let mut s = Self::zero(orders);
        for (m, c) in p.terms() {
            if let Some(i) = s.index(m) {
                s.data[i] = c.clone();
            }
        }
        s
    }

    /// Univariate series from its coefficient list.
    pub fn univariate(coeffs: &[Q], order: usize) -> Self {
        let mut s = Self::zero(&[order]);
        for (k, c) in coeffs.iter().take(order + 1).enumerate() {
            s.data[k] = c.clone();
        }
        s
    }

    pub fn nvars(&self) -> usize {
        self.orders.len()
    }

    pub fn orders(&self) -> &[usize] {
        &self.orders
    }

    fn index(&self, m: &[u32]) -> Option<usize> {
        let mut i = 0;
        for ((&e, &o), &st) in m.iter().zip(&self.orders).zip(&self.strides) {
            if e as usize > o {
                return None;
            }
            i += e as usize * st;
        }
        Some(i)
    }

    fn exponents(&self, mut i: usize) -> Vec<u32> {
        let mut m = vec![0; self.nvars()];
        for v in 0..self.nvars() {
            m[v] = (i / self.strides[v]) as u32;
            i %= self.strides[v];
        }
        m
    }

    /// Coefficient of the given monomial, zero beyond the truncation.
    pub fn coeff(&self, m: &[u32]) -> Q {
        self.index(m).map_or_else(Q::zero, |i| self.data[i].clone())
    }

    pub fn constant_term(&self) -> &Q {
        &self.data[0]
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.orders, o.orders);
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&o.data) {
            *a += b;
        }
        out
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut out = self.clone();
        for a in &mut out.data {
            *a *= c;
        }
        out
    }

    /// Truncated product of two series over the same variables.
    pub fn mul(&self, o: &Self) -> Self {
        let all: Vec<usize> = (0..self.nvars()).collect();
        self.mul_embedded(o, &all)
    }

    /// Multiplies by `small`, whose variable `i` is this series' variable
    /// `slots[i]`. Terms beyond either truncation are dropped.
    pub fn mul_embedded(&self, small: &Self, slots: &[usize]) -> Self {
        assert_eq!(slots.len(), small.nvars());
        let mut out = Self::zero(&self.orders);
        let big_exps: Vec<Vec<u32>> = (0..self.data.len()).map(|i| self.exponents(i)).collect();
        for (a, ca) in small.data.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            let ea = small.exponents(a);
            let mut offset = 0;
            let mut fits = true;
            for (k, &slot) in slots.iter().enumerate() {
                if ea[k] as usize > self.orders[slot] {
                    fits = false;
                    break;
                }
                offset += ea[k] as usize * self.strides[slot];
            }
            if !fits {
                continue;
            }
            for (b, cb) in self.data.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                let room = slots
                    .iter()
                    .enumerate()
                    .all(|(k, &slot)| (big_exps[b][slot] + ea[k]) as usize <= self.orders[slot]);
                if room {
                    out.data[b + offset] += ca * cb;
                }
            }
        }
        out
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    ///
    /// With `P = c (1 - U)`, `U` has no constant term, so `sum U^m` terminates
    /// once `m` exceeds the total truncation degree.
    pub fn invert_unit(&self, name: &str) -> Result<Self> {
        let c = self.data[0].clone();
        if c.is_zero() {
            return Err(Error::NonUnitFactor(name.to_string()));
        }
        let cinv = c.recip();
        let mut u = self.scale(&-cinv.clone());
        u.data[0] = Q::zero();
        let max_m: usize = self.orders.iter().sum();
        let mut acc = Self::one(&self.orders);
        let mut power = Self::one(&self.orders);
        for _ in 0..max_m {
            power = power.mul(&u);
            acc = acc.add(&power);
        }
        Ok(acc.scale(&cinv))
    }

    /// `sum_a self[a] * other[target - a]`, i.e. one coefficient of the product.
    pub fn product_coeff(&self, other: &Self, target: &[u32]) -> Q {
        assert_eq!(self.orders, other.orders);
        let mut acc = Q::zero();
        for (a, ca) in self.data.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            let ea = self.exponents(a);
            if ea.iter().zip(target).any(|(e, t)| e > t) {
                continue;
            }
            let rest: Vec<u32> = target.iter().zip(&ea).map(|(t, e)| t - e).collect();
            acc += ca * other.coeff(&rest);
        }
        acc
    }
}
