//! Exact rational functions: quotients of [`Poly`] in reduced form.

use crate::error::Error;
use crate::poly::{Poly, Rat};
use num_traits::Zero;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Quotient of two polynomials.
///
/// Invariants: the denominator is nonzero and monic, and `gcd(num, den)` is
/// constant, so equality of values is equality of representations.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFn {
    num: Poly,
    den: Poly,
}

impl RationalFn {
    /// Builds `num/den` in reduced form.  Panics if `den` is zero.
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RationalFn {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        let g = num.gcd(&den);
        let mut num = num.exact_div(&g).expect("gcd divides");
        let mut den = den.exact_div(&g).expect("gcd divides");
        let lead = den.leading();
        den = den.scale(&lead.recip());
        num = num.scale(&lead.recip());
        RationalFn { num, den }
    }

    pub fn zero() -> Self {
        RationalFn {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        RationalFn {
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalFn {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: Rat) -> Self {
        RationalFn::from_poly(Poly::constant(c))
    }

    /// The monomial `x` as a rational function.
    pub fn x() -> Self {
        RationalFn::from_poly(Poly::x())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Some(p) iff the reduced denominator is constant.
    pub fn as_poly(&self) -> Option<Poly> {
        self.den.degree().finite().filter(|&d| d == 0)?;
        Some(self.num.scale(&self.den.leading().recip()))
    }

    pub fn is_poly(&self) -> bool {
        self.as_poly().is_some()
    }

    /// Degree of a rational function: `deg num − deg den` (None when zero).
    pub fn degree(&self) -> Option<i64> {
        let n = self.num.degree().finite()? as i64;
        let d = self.den.degree().finite().unwrap() as i64;
        Some(n - d)
    }

    /// Quotient rule, reduced.
    pub fn derivative(&self) -> RationalFn {
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        let den = &self.den * &self.den;
        RationalFn::new(num, den)
    }

    /// Exact evaluation; errors when `x` is a pole.
    pub fn eval(&self, x: &Rat) -> Result<Rat, Error> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::SingularSample { x: x.to_string() });
        }
        Ok(self.num.eval(x) / d)
    }

    pub fn scale(&self, c: &Rat) -> RationalFn {
        if c.is_zero() {
            return RationalFn::zero();
        }
        RationalFn {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }
}

impl Add for &RationalFn {
    type Output = RationalFn;
    fn add(self, rhs: &RationalFn) -> RationalFn {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFn::new(num, &self.den * &rhs.den)
    }
}

impl Sub for &RationalFn {
    type Output = RationalFn;
    fn sub(self, rhs: &RationalFn) -> RationalFn {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        RationalFn::new(num, &self.den * &rhs.den)
    }
}

impl Mul for &RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: &RationalFn) -> RationalFn {
        RationalFn::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RationalFn {
    type Output = RationalFn;
    fn div(self, rhs: &RationalFn) -> RationalFn {
        assert!(!rhs.is_zero(), "division by the zero rational function");
        RationalFn::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_poly() {
            write!(f, "{}", self.as_poly().unwrap())
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
