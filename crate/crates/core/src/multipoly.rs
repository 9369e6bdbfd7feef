//! Sparse multivariate polynomials over `Q`, plus a dense integer cube used
//! for building determinants and dividing them exactly by linear binomials.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::poly::RationalPoly;
use crate::rational::Q;

/// Exponent tuple; its length is the number of variables.
pub type Monomial = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Q>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Q) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    /// Embeds a univariate polynomial as a polynomial in variable `var`.
    pub fn from_univariate(nvars: usize, var: usize, u: &RationalPoly) -> Self {
        assert!(var < nvars);
        let mut p = Self::zero(nvars);
        for (k, c) in u.coeffs().iter().enumerate() {
            let mut m = vec![0; nvars];
            m[var] = k as u32;
            p.add_term(m, c.clone());
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &[u32]) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Q) {
        debug_assert_eq!(m.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Largest exponent of `var` over all terms.
    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m[var]).max().unwrap_or(0)
    }

    pub fn eval(&self, point: &[Q]) -> Q {
        assert_eq!(point.len(), self.nvars);
        let mut acc = Q::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (e, z) in m.iter().zip(point) {
                if *e > 0 {
                    t *= num_traits::pow(z.clone(), *e as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Sets variable `var` to `value` and removes it from the variable list.
    pub fn substitute(&self, var: usize, value: &Q) -> Self {
        assert!(var < self.nvars);
        let mut out = Self::zero(self.nvars - 1);
        for (m, c) in &self.terms {
            let e = m[var] as usize;
            let w = if e == 0 {
                c.clone()
            } else {
                c * num_traits::pow(value.clone(), e)
            };
            let mut rest = m.clone();
            rest.remove(var);
            out.add_term(rest, w);
        }
        out
    }

    /// Renames variable `i` to `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.nvars);
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut pm = vec![0; self.nvars];
            for (i, &e) in m.iter().enumerate() {
                pm[perm[i]] = e;
            }
            out.add_term(pm, c.clone());
        }
        out
    }

    /// Collapses a one-variable polynomial back to `RationalPoly`.
    pub fn to_univariate(&self) -> RationalPoly {
        assert_eq!(self.nvars, 1);
        let deg = self.degree_in(0) as usize;
        let mut c = vec![Q::zero(); deg + 1];
        for (m, v) in &self.terms {
            c[m[0] as usize] = v.clone();
        }
        RationalPoly::new(c)
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, o: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, o.nvars);
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, o: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, o.nvars);
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, o: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, o.nvars);
        let mut out = MultiPoly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                let m = ma.iter().zip(mb).map(|(a, b)| a + b).collect();
                out.add_term(m, ca * cb);
            }
        }
        out
    }
}

/// Dense integer polynomial in `nvars` variables with every exponent in
/// `0..side`. Row-major, variable 0 most significant.
#[derive(Clone, Debug)]
pub(crate) struct IntCube {
    nvars: usize,
    side: usize,
    data: Vec<BigInt>,
}

impl IntCube {
    pub fn zero(nvars: usize, side: usize) -> Self {
        IntCube {
            nvars,
            side,
            data: vec![BigInt::zero(); side.pow(nvars as u32)],
        }
    }

    pub fn one(side: usize) -> Self {
        IntCube {
            nvars: 0,
            side,
            data: vec![BigInt::one()],
        }
    }

    fn stride(&self, var: usize) -> usize {
        self.side.pow((self.nvars - 1 - var) as u32)
    }

    /// Outer product with a univariate polynomial placed in a new last variable.
    pub fn extend(&self, u: &[BigInt]) -> Self {
        assert!(u.len() <= self.side);
        let mut out = IntCube::zero(self.nvars + 1, self.side);
        for (i, a) in self.data.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (k, b) in u.iter().enumerate() {
                out.data[i * self.side + k] = a * b;
            }
        }
        out
    }

    pub fn add_scaled(&mut self, o: &IntCube, sign: i32) {
        assert_eq!((self.nvars, self.side), (o.nvars, o.side));
        for (a, b) in self.data.iter_mut().zip(&o.data) {
            if sign > 0 {
                *a += b;
            } else {
                *a -= b;
            }
        }
    }

    /// Exact division by `(z_j - z_k)`; `None` when the remainder is nonzero.
    pub fn div_binomial(&self, j: usize, k: usize) -> Option<IntCube> {
        assert!(j != k && j < self.nvars && k < self.nvars);
        let (sj, sk, m) = (self.stride(j), self.stride(k), self.side);
        let exp = |i: usize, s: usize| (i / s) % m;
        let mut quot = IntCube::zero(self.nvars, m);
        // q_{d-1} = p_d + z_k q_d, from the top degree in z_j downward.
        for d in (1..m).rev() {
            for i in 0..self.data.len() {
                if exp(i, sj) != d - 1 {
                    continue;
                }
                let mut v = self.data[i + sj].clone();
                if exp(i, sk) > 0 {
                    v += &quot.data[i + sj - sk];
                }
                quot.data[i] = v;
            }
        }
        for i in 0..self.data.len() {
            // Remainder p_0 + z_k q_0, and any term pushed past the cube edge.
            if exp(i, sj) == 0 {
                let mut r = self.data[i].clone();
                if exp(i, sk) > 0 {
                    r += &quot.data[i - sk];
                }
                if !r.is_zero() {
                    return None;
                }
            }
            if exp(i, sk) == m - 1 && !quot.data[i].is_zero() {
                return None;
            }
        }
        Some(quot)
    }

    pub fn to_multipoly(&self, scale: &Q) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        for (i, c) in self.data.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let m = (0..self.nvars)
                .map(|v| ((i / self.stride(v)) % self.side) as u32)
                .collect();
            out.add_term(m, Q::from_integer(c.clone()) * scale);
        }
        out
    }
}
