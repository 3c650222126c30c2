//! High-precision floating-point context.
//!
//! Everything exact lives in [`crate::poly`]; this module owns the few
//! places where transcendentals force floating arithmetic: Gaussian
//! factors, quadrature, complex root refinement.  Precision defaults to 30
//! significant digits and can be overridden with the `XH_PRECISION`
//! environment variable (a decimal digit count).

use crate::poly::{rat_to_f64, Poly, Rat};
use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use std::cell::RefCell;
use std::collections::HashMap;

const RM: RoundingMode = RoundingMode::ToEven;

/// Numeric context: working precision plus cached constants and
/// Gauss–Legendre rules.
pub struct Ctx {
    digits: usize,
    bits: usize,
    cc: RefCell<Consts>,
    gl_cache: RefCell<HashMap<usize, Vec<(BigFloat, BigFloat)>>>,
}

impl Ctx {
    /// A context carrying about `digits` significant decimal digits.
    pub fn new(digits: usize) -> Self {
        let digits = digits.max(15);
        // 64 guard bits absorb the rounding of composite operations
        let bits = (digits as f64 * std::f64::consts::LOG2_10).ceil() as usize + 64;
        Ctx {
            digits,
            bits,
            cc: RefCell::new(Consts::new().expect("constants cache")),
            gl_cache: RefCell::new(HashMap::new()),
        }
    }

    /// Default 30 digits, overridden by `XH_PRECISION`.
    pub fn from_env() -> Self {
        let digits = std::env::var("XH_PRECISION")
            .ok()
            .and_then(|v| v.parse::<usize>().ok())
            .unwrap_or(30);
        Ctx::new(digits)
    }

    pub fn digits(&self) -> usize {
        self.digits
    }

    pub fn bits(&self) -> usize {
        self.bits
    }

    // -- conversions --------------------------------------------------

    pub fn from_f64(&self, x: f64) -> BigFloat {
        BigFloat::from_f64(x, self.bits)
    }

    pub fn from_i64(&self, n: i64) -> BigFloat {
        BigFloat::from_i64(n, self.bits)
    }

    pub fn from_rat(&self, r: &Rat) -> BigFloat {
        let mut cc = self.cc.borrow_mut();
        let n = BigFloat::parse(&r.numer().to_string(), Radix::Dec, self.bits, RM, &mut cc);
        let d = BigFloat::parse(&r.denom().to_string(), Radix::Dec, self.bits, RM, &mut cc);
        n.div(&d, self.bits, RM)
    }

    pub fn to_f64(&self, x: &BigFloat) -> f64 {
        if x.is_zero() {
            return 0.0;
        }
        if x.is_nan() {
            return f64::NAN;
        }
        if x.is_inf_pos() {
            return f64::INFINITY;
        }
        if x.is_inf_neg() {
            return f64::NEG_INFINITY;
        }
        let mut cc = self.cc.borrow_mut();
        let s = x
            .format(Radix::Dec, RM, &mut cc)
            .expect("finite number formats");
        s.parse::<f64>().unwrap_or(f64::NAN)
    }

    // -- arithmetic ---------------------------------------------------

    pub fn add(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.add(b, self.bits, RM)
    }

    pub fn sub(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.sub(b, self.bits, RM)
    }

    pub fn mul(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.mul(b, self.bits, RM)
    }

    pub fn div(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.div(b, self.bits, RM)
    }

    pub fn neg(&self, a: &BigFloat) -> BigFloat {
        a.neg()
    }

    pub fn abs(&self, a: &BigFloat) -> BigFloat {
        a.abs()
    }

    pub fn exp(&self, a: &BigFloat) -> BigFloat {
        let mut cc = self.cc.borrow_mut();
        a.exp(self.bits, RM, &mut cc)
    }

    pub fn sqrt(&self, a: &BigFloat) -> BigFloat {
        a.sqrt(self.bits, RM)
    }

    pub fn pi(&self) -> BigFloat {
        let mut cc = self.cc.borrow_mut();
        cc.pi(self.bits, RM)
    }

    pub fn sqrt_pi(&self) -> BigFloat {
        self.pi().sqrt(self.bits, RM)
    }

    /// Comparison assuming no NaN; total on the values this crate produces.
    pub fn lt(&self, a: &BigFloat, b: &BigFloat) -> bool {
        a.cmp(b).is_some_and(|c| c < 0)
    }

    pub fn le(&self, a: &BigFloat, b: &BigFloat) -> bool {
        a.cmp(b).is_some_and(|c| c <= 0)
    }

    pub fn max(&self, a: BigFloat, b: BigFloat) -> BigFloat {
        if self.lt(&a, &b) {
            b
        } else {
            a
        }
    }

    // -- polynomials --------------------------------------------------

    /// Converts a polynomial's coefficients once for repeated evaluation.
    pub fn lift_poly(&self, p: &Poly) -> LiftedPoly {
        LiftedPoly {
            coeffs: p.coeffs().iter().map(|c| self.from_rat(c)).collect(),
        }
    }

    /// Horner evaluation of a lifted polynomial.
    pub fn eval_lifted(&self, p: &LiftedPoly, x: &BigFloat) -> BigFloat {
        let mut acc = self.from_i64(0);
        for c in p.coeffs.iter().rev() {
            acc = self.add(&self.mul(&acc, x), c);
        }
        acc
    }

    // -- Gauss–Legendre rules ------------------------------------------

    /// Nodes and weights of the `n`-point Gauss–Legendre rule on [−1, 1],
    /// refined by Newton iteration at working precision and cached.
    pub fn gauss_legendre(&self, n: usize) -> Vec<(BigFloat, BigFloat)> {
        if let Some(rule) = self.gl_cache.borrow().get(&n) {
            return rule.clone();
        }
        let rule = self.compute_gauss_legendre(n);
        self.gl_cache.borrow_mut().insert(n, rule.clone());
        rule
    }

    fn legendre_pair(&self, n: usize, x: &BigFloat) -> (BigFloat, BigFloat) {
        // returns (P_n(x), P_{n−1}(x))
        let mut pm = self.from_i64(1);
        let mut p = x.clone();
        for k in 1..n {
            // (k+1) P_{k+1} = (2k+1) x P_k − k P_{k−1}
            let a = self.mul(&self.from_i64(2 * k as i64 + 1), &self.mul(x, &p));
            let b = self.mul(&self.from_i64(k as i64), &pm);
            let next = self.div(&self.sub(&a, &b), &self.from_i64(k as i64 + 1));
            pm = p;
            p = next;
        }
        (p, pm)
    }

    fn compute_gauss_legendre(&self, n: usize) -> Vec<(BigFloat, BigFloat)> {
        let mut rule = Vec::with_capacity(n);
        let one = self.from_i64(1);
        for i in 1..=n {
            // Tricomi-style seed, then Newton at full precision
            let seed = (std::f64::consts::PI * (i as f64 - 0.25) / (n as f64 + 0.5)).cos();
            let mut x = self.from_f64(seed);
            for _ in 0..24 {
                let (pn, pnm1) = self.legendre_pair(n, &x);
                // P′_n = n (x P_n − P_{n−1}) / (x² − 1)
                let x2m1 = self.sub(&self.mul(&x, &x), &one);
                let dp = self.div(
                    &self.mul(
                        &self.from_i64(n as i64),
                        &self.sub(&self.mul(&x, &pn), &pnm1),
                    ),
                    &x2m1,
                );
                let step = self.div(&pn, &dp);
                x = self.sub(&x, &step);
                let small = BigFloat::from_f64(1.0, self.bits).mul(
                    &two_pow(-(self.bits as i64) + 8, self.bits),
                    self.bits,
                    RM,
                );
                if self.le(&step.abs(), &small) {
                    break;
                }
            }
            let (pn, pnm1) = self.legendre_pair(n, &x);
            debug_assert!(self.to_f64(&pn).abs() < 1e-10);
            let x2m1 = self.sub(&self.mul(&x, &x), &one);
            let dp = self.div(
                &self.mul(
                    &self.from_i64(n as i64),
                    &self.sub(&self.mul(&x, &pn), &pnm1),
                ),
                &x2m1,
            );
            // w = 2 / ((1 − x²) P′_n(x)²)
            let w = self.div(
                &self.from_i64(2),
                &self.mul(&self.neg(&x2m1), &self.mul(&dp, &dp)),
            );
            rule.push((x, w));
        }
        rule
    }
}

/// A polynomial with coefficients pre-converted to working precision.
pub struct LiftedPoly {
    coeffs: Vec<BigFloat>,
}

fn two_pow(e: i64, bits: usize) -> BigFloat {
    let mut x = BigFloat::from_i64(1, bits);
    x.set_exponent(x.exponent().unwrap_or(0) + e as i32);
    x
}

// ---------------------------------------------------------------------------
// Complex arithmetic at working precision.

/// Complex number over [`BigFloat`].
#[derive(Clone, Debug)]
pub struct CBig {
    pub re: BigFloat,
    pub im: BigFloat,
}

impl Ctx {
    pub fn c_from_f64(&self, re: f64, im: f64) -> CBig {
        CBig {
            re: self.from_f64(re),
            im: self.from_f64(im),
        }
    }

    pub fn c_add(&self, a: &CBig, b: &CBig) -> CBig {
        CBig {
            re: self.add(&a.re, &b.re),
            im: self.add(&a.im, &b.im),
        }
    }

    pub fn c_sub(&self, a: &CBig, b: &CBig) -> CBig {
        CBig {
            re: self.sub(&a.re, &b.re),
            im: self.sub(&a.im, &b.im),
        }
    }

    pub fn c_mul(&self, a: &CBig, b: &CBig) -> CBig {
        CBig {
            re: self.sub(&self.mul(&a.re, &b.re), &self.mul(&a.im, &b.im)),
            im: self.add(&self.mul(&a.re, &b.im), &self.mul(&a.im, &b.re)),
        }
    }

    pub fn c_div(&self, a: &CBig, b: &CBig) -> CBig {
        let d = self.add(&self.mul(&b.re, &b.re), &self.mul(&b.im, &b.im));
        CBig {
            re: self.div(
                &self.add(&self.mul(&a.re, &b.re), &self.mul(&a.im, &b.im)),
                &d,
            ),
            im: self.div(
                &self.sub(&self.mul(&a.im, &b.re), &self.mul(&a.re, &b.im)),
                &d,
            ),
        }
    }

    pub fn c_abs(&self, a: &CBig) -> BigFloat {
        self.sqrt(&self.add(&self.mul(&a.re, &a.re), &self.mul(&a.im, &a.im)))
    }

    /// Horner evaluation of an exact polynomial at a complex point.
    pub fn c_eval_poly(&self, p: &Poly, z: &CBig) -> CBig {
        let mut acc = self.c_from_f64(0.0, 0.0);
        for c in p.coeffs().iter().rev() {
            acc = self.c_mul(&acc, z);
            acc.re = self.add(&acc.re, &self.from_rat(c));
        }
        acc
    }
}

/// Crude magnitude estimate used in seeds and reports.
pub fn poly_coeff_scale(p: &Poly) -> f64 {
    p.coeffs()
        .iter()
        .map(|c| rat_to_f64(c).abs())
        .fold(0.0, f64::max)
}
