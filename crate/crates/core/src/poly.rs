//! Dense univariate polynomials and rational functions over `Q`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::rational::{fmt_q, to_f64, Q};

/// Coefficient vector indexed by degree. Trailing zeros are always trimmed,
/// so the zero polynomial has an empty vector.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct RationalPoly {
    coeffs: Vec<Q>,
}

impl RationalPoly {
    pub fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RationalPoly { coeffs }
    }

    pub fn zero() -> Self {
        RationalPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Q) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    /// `z`
    pub fn x() -> Self {
        Self::new(vec![Q::zero(), Q::one()])
    }

    /// `a + b z`
    pub fn linear(a: Q, b: Q) -> Self {
        Self::new(vec![a, b])
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&v| crate::rational::q(v)).collect())
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Q {
        self.coeffs.get(k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, z: &Q) -> Q {
        self.coeffs
            .iter()
            .rev()
            .fold(Q::zero(), |acc, c| acc * z + c)
    }

    pub fn eval_f64(&self, z: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * z + to_f64(c))
    }

    pub fn scale(&self, c: &Q) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Q::from_integer((k as i64).into()))
                .collect(),
        )
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead = d.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if nd < dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Q::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] / &lead;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }
}

impl fmt::Debug for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(fmt_q).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl<'a> Add<&'a RationalPoly> for &'a RationalPoly {
    type Output = RationalPoly;
    fn add(self, o: &RationalPoly) -> RationalPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        RationalPoly::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }
}

impl<'a> Sub<&'a RationalPoly> for &'a RationalPoly {
    type Output = RationalPoly;
    fn sub(self, o: &RationalPoly) -> RationalPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        RationalPoly::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }
}

impl<'a> Mul<&'a RationalPoly> for &'a RationalPoly {
    type Output = RationalPoly;
    fn mul(self, o: &RationalPoly) -> RationalPoly {
        if self.is_zero() || o.is_zero() {
            return RationalPoly::zero();
        }
        let mut out = vec![Q::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPoly::new(out)
    }
}

impl Neg for &RationalPoly {
    type Output = RationalPoly;
    fn neg(self) -> RationalPoly {
        RationalPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RationalPoly> for RationalPoly {
            type Output = RationalPoly;
            fn $m(self, o: RationalPoly) -> RationalPoly {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// `num / den` with no normalisation beyond what equality needs.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    pub num: RationalPoly,
    pub den: RationalPoly,
}

impl RationalFunction {
    pub fn new(num: RationalPoly, den: RationalPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        RationalFunction { num, den }
    }

    pub fn from_poly(p: RationalPoly) -> Self {
        Self::new(p, RationalPoly::one())
    }

    /// `c / (a + b z)`
    pub fn simple(c: Q, a: Q, b: Q) -> Self {
        Self::new(RationalPoly::constant(c), RationalPoly::linear(a, b))
    }

    pub fn eval(&self, z: &Q) -> Q {
        self.num.eval(z) / self.den.eval(z)
    }

    pub fn eval_f64(&self, z: f64) -> f64 {
        self.num.eval_f64(z) / self.den.eval_f64(z)
    }

    pub fn derivative(&self) -> Self {
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::new(num, &self.den * &self.den)
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, o: &Self) -> bool {
        &self.num * &o.den == &o.num * &self.den
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, o: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &(&self.num * &o.den) + &(&o.num * &self.den),
            &self.den * &o.den,
        )
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, o: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &(&self.num * &o.den) - &(&o.num * &self.den),
            &self.den * &o.den,
        )
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, o: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &o.num, &self.den * &o.den)
    }
}
