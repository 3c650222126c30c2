//! Exact univariate polynomial arithmetic over the rationals.
//!
//! [`Poly`] is a dense polynomial with arbitrary-precision rational
//! coefficients; every operation is exact.  The module also provides the
//! pieces the rest of the crate is built on: Wronskian determinants through
//! fraction-free Bareiss elimination over an integer lift, Sturm real-root
//! counts, and Yun's squarefree decomposition.

use crate::error::Error;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Arbitrary-precision rational scalar.
pub type Rat = BigRational;

/// Shorthand for an integer-valued [`Rat`].
pub fn rat(n: i64) -> Rat {
    Rat::from(BigInt::from(n))
}

/// Degree of a polynomial; the zero polynomial gets a distinct sentinel
/// rather than an overloaded integer.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Degree {
    NegInf,
    Of(usize),
}

impl Degree {
    /// The degree as a number, if the polynomial is nonzero.
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInf => None,
            Degree::Of(d) => Some(d),
        }
    }
}

/// Dense univariate polynomial with exact rational coefficients.
///
/// Invariant: the coefficient list has no trailing zeros, so the zero
/// polynomial is the empty list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Poly::from_coeffs(vec![Rat::zero(), Rat::one()])
    }

    pub fn constant(c: Rat) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// Builds from coefficients indexed by power of x, trimming trailing
    /// zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Degree {
        if self.coeffs.is_empty() {
            Degree::NegInf
        } else {
            Degree::Of(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Formal derivative d/dx.
    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * rat(k as i64))
            .collect();
        Poly::from_coeffs(coeffs)
    }

    /// Horner evaluation; exact for rational input.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + rat_to_f64(c);
        }
        acc
    }

    /// The reflection `p(−x)`.
    pub fn reflect(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 0 { c.clone() } else { -c.clone() })
            .collect();
        Poly { coeffs }
    }

    /// Even, odd, or neither under `x ↦ −x`.
    pub fn parity(&self) -> Option<Parity> {
        let r = self.reflect();
        if r == *self {
            Some(Parity::Even)
        } else if r == -self {
            Some(Parity::Odd)
        } else {
            None
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division, returning `(quotient, remainder)`.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.coeffs.len() < d.coeffs.len() {
            return (Poly::zero(), self.clone());
        }
        let dd = d.coeffs.len() - 1;
        let lead_inv = d.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); self.coeffs.len() - dd];
        while rem.len() >= d.coeffs.len() {
            let k = rem.len() - 1 - dd;
            let q = rem.last().unwrap() * &lead_inv;
            for i in 0..dd {
                let t = &d.coeffs[i] * &q;
                rem[k + i] -= t;
            }
            rem.pop(); // leading term cancels exactly
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
            quot[k] = q;
        }
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    /// Exact division; the remainder must vanish.
    pub fn exact_div(&self, d: &Poly) -> Result<Poly, Error> {
        let (q, r) = self.div_rem(d);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::Division {
                remainder: r.to_string(),
            })
        }
    }

    /// True iff `d` divides `self` exactly.
    pub fn divisible_by(&self, d: &Poly) -> bool {
        self.div_rem(d).1.is_zero()
    }

    /// Monic greatest common divisor (1 for coprime inputs; gcd with the
    /// zero polynomial is the other argument made monic).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Scales to leading coefficient 1 (zero polynomial unchanged).
    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(&self.leading().recip())
    }

    /// Writes `self = content · primitive` with integer primitive part and
    /// positive content.
    fn integer_lift(&self) -> (IPoly, Rat) {
        if self.is_zero() {
            return (IPoly(Vec::new()), Rat::one());
        }
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let mut content = BigInt::zero();
        for c in &ints {
            content = content.gcd(c);
        }
        if content.is_zero() {
            content = BigInt::one();
        }
        let prim: Vec<BigInt> = ints.iter().map(|c| c / &content).collect();
        (IPoly(prim), Rat::new(content, den))
    }
}

/// Parity of a polynomial under reflection.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}")?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

// JSON schema: {"coeffs": ["4", "0", "8"]} with exact rationals as "p/q".
impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.coeffs.iter().map(rat_to_string).collect();
        strings.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let strings: Vec<String> = Vec::deserialize(d)?;
        let mut coeffs = Vec::with_capacity(strings.len());
        for s in &strings {
            coeffs.push(rat_from_string(s).map_err(D::Error::custom)?);
        }
        Ok(Poly::from_coeffs(coeffs))
    }
}

/// Renders a rational as `p` or `p/q` in base 10.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/q`.
pub fn rat_from_string(s: &str) -> Result<Rat, Error> {
    let parse_int = |t: &str| -> Result<BigInt, Error> {
        t.trim()
            .parse()
            .map_err(|_| Error::NumberParse { input: s.into() })
    };
    match s.split_once('/') {
        None => Ok(Rat::from(parse_int(s)?)),
        Some((n, d)) => {
            let den = parse_int(d)?;
            if den.is_zero() {
                return Err(Error::NumberParse { input: s.into() });
            }
            Ok(Rat::new(parse_int(n)?, den))
        }
    }
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    // good enough for seeds and reporting; exact paths never round-trip this
    let n = r.numer().to_string().parse::<f64>().unwrap_or(f64::NAN);
    let d = r.denom().to_string().parse::<f64>().unwrap_or(f64::NAN);
    n / d
}

// ---------------------------------------------------------------------------
// Integer polynomials: the fraction-free substrate for Bareiss elimination.

#[derive(Clone, PartialEq, Eq)]
struct IPoly(Vec<BigInt>);

impl IPoly {
    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn trim(mut v: Vec<BigInt>) -> IPoly {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
        IPoly(v)
    }

    fn mul(&self, rhs: &IPoly) -> IPoly {
        if self.is_zero() || rhs.is_zero() {
            return IPoly(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IPoly::trim(out)
    }

    fn sub(&self, rhs: &IPoly) -> IPoly {
        let n = self.0.len().max(rhs.0.len());
        let get = |v: &Vec<BigInt>, k: usize| v.get(k).cloned().unwrap_or_else(BigInt::zero);
        IPoly::trim((0..n).map(|k| get(&self.0, k) - get(&rhs.0, k)).collect())
    }

    /// Division known to be exact by the Bareiss invariant.
    fn exact_div(&self, d: &IPoly) -> IPoly {
        assert!(!d.is_zero());
        if self.is_zero() {
            return IPoly(Vec::new());
        }
        let dd = d.0.len() - 1;
        let mut rem = self.0.clone();
        assert!(rem.len() >= d.0.len());
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        while rem.len() >= d.0.len() {
            let k = rem.len() - 1 - dd;
            let (q, r) = rem.last().unwrap().div_rem(&d.0[dd]);
            assert!(r.is_zero(), "fraction-free elimination lost exactness");
            for i in 0..dd {
                let t = &d.0[i] * &q;
                rem[k + i] -= t;
            }
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
            quot[k] = q;
        }
        assert!(rem.is_empty(), "fraction-free elimination lost exactness");
        IPoly(quot)
    }

    fn to_poly(&self) -> Poly {
        Poly::from_coeffs(self.0.iter().map(|c| Rat::from(c.clone())).collect())
    }
}

/// Determinant of a square matrix of polynomials via fraction-free Bareiss
/// elimination over a per-column integer lift.
pub fn poly_det(matrix: &[Vec<Poly>]) -> Poly {
    let n = matrix.len();
    if n == 0 {
        return Poly::one();
    }
    assert!(matrix.iter().all(|row| row.len() == n));

    // clear denominators column by column; each column scaling multiplies
    // the determinant by a known rational
    let mut scale = Rat::one();
    let mut m: Vec<Vec<IPoly>> = vec![vec![IPoly(Vec::new()); n]; n];
    for j in 0..n {
        let mut den = BigInt::one();
        for row in matrix.iter() {
            for c in row[j].coeffs() {
                den = den.lcm(c.denom());
            }
        }
        for (i, row) in matrix.iter().enumerate() {
            let ints: Vec<BigInt> = row[j]
                .coeffs()
                .iter()
                .map(|c| c.numer() * (&den / c.denom()))
                .collect();
            m[i][j] = IPoly::trim(ints);
        }
        scale /= Rat::from(den);
    }

    let mut sign = 1i32;
    let mut prev = IPoly(vec![BigInt::one()]);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return Poly::zero();
            };
            m.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = t.exact_div(&prev);
            }
            m[i][k] = IPoly(Vec::new());
        }
        prev = m[k][k].clone();
    }

    let det = m[n - 1][n - 1].to_poly().scale(&scale);
    if sign < 0 {
        -&det
    } else {
        det
    }
}

/// Wronskian determinant `det [ f_j^{(i)} ]` of the given functions, in the
/// given column order.  The empty Wronskian is 1.
pub fn wronskian(fs: &[Poly]) -> Poly {
    let n = fs.len();
    if n == 0 {
        return Poly::one();
    }
    let mut matrix = Vec::with_capacity(n);
    let mut row: Vec<Poly> = fs.to_vec();
    matrix.push(row.clone());
    for _ in 1..n {
        row = row.iter().map(Poly::derivative).collect();
        matrix.push(row.clone());
    }
    poly_det(&matrix)
}

// ---------------------------------------------------------------------------
// Sturm sequences.

fn sign_changes(signs: impl Iterator<Item = i32>) -> usize {
    let mut count = 0;
    let mut last = 0i32;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Exact count of distinct real roots over the whole real line.
///
/// The input is replaced by its squarefree part; the chain uses integer
/// primitive-part reduction at every step to control coefficient growth.
pub fn sturm_real_root_count(p: &Poly) -> usize {
    assert!(!p.is_zero(), "root count of the zero polynomial");
    if p.coeffs.len() == 1 {
        return 0;
    }
    let sf = p
        .exact_div(&p.gcd(&p.derivative()))
        .expect("gcd divides exactly");
    if sf.coeffs.len() == 1 {
        return 0;
    }

    let (p0, _) = sf.integer_lift();
    let mut chain = vec![p0.clone(), p0.to_poly().derivative().integer_lift().0];
    loop {
        let n = chain.len();
        let rem = chain[n - 2].to_poly().div_rem(&chain[n - 1].to_poly()).1;
        if rem.is_zero() {
            break;
        }
        // primitive part with the sign kept: scaling by a positive constant
        // preserves the Sturm property
        let (prim, _) = rem.integer_lift();
        let neg = IPoly(prim.0.iter().map(|c| -c).collect());
        chain.push(neg);
    }

    let sign_at = |leading: &BigInt| -> i32 {
        if leading.is_zero() {
            0
        } else if leading.is_negative() {
            -1
        } else {
            1
        }
    };
    // at +∞ the sign is that of the leading coefficient; at −∞ it flips
    // with odd degree
    let at_pos = chain
        .iter()
        .map(|q| sign_at(q.0.last().unwrap_or(&BigInt::zero())));
    let at_neg = chain.iter().map(|q| {
        let s = sign_at(q.0.last().unwrap_or(&BigInt::zero()));
        if (q.0.len().max(1) - 1) % 2 == 1 {
            -s
        } else {
            s
        }
    });
    sign_changes(at_neg) - sign_changes(at_pos)
}

// ---------------------------------------------------------------------------
// Squarefree decomposition.

/// Yun's algorithm: returns monic pairwise-coprime squarefree factors with
/// multiplicities, so that the product of `factor^multiplicity` equals the
/// input up to a constant.
pub fn squarefree_decomposition(p: &Poly) -> Vec<(Poly, u32)> {
    assert!(!p.is_zero(), "decomposition of the zero polynomial");
    let f = p.monic();
    if f.coeffs.len() == 1 {
        return Vec::new();
    }
    let df = f.derivative();
    let g = f.gcd(&df);
    if g.coeffs.len() == 1 {
        return vec![(f, 1)];
    }
    let mut a = f.exact_div(&g).expect("gcd divides");
    let mut b = df.exact_div(&g).expect("gcd divides");
    let mut out = Vec::new();
    let mut mult = 1u32;
    loop {
        let c = &b - &a.derivative();
        if c.is_zero() {
            if a.coeffs.len() > 1 {
                out.push((a.monic(), mult));
            }
            break;
        }
        let d = a.gcd(&c);
        if d.coeffs.len() > 1 {
            out.push((d.clone(), mult));
        }
        a = a.exact_div(&d).expect("gcd divides");
        b = c.exact_div(&d).expect("gcd divides");
        if a.coeffs.len() == 1 {
            break;
        }
        mult += 1;
    }
    out
}


#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> Poly {
        Poly::from_integers(coeffs)
    }

    #[test]
    fn derivative_example() {
        // d/dx (4x² − 2) = 8x
        assert_eq!(p(&[-2, 0, 4]).derivative(), p(&[0, 8]));
    }

    #[test]
    fn gcd_examples() {
        // Euclid by hand: gcd(8x²+4, 16x) = 1 (monic)
        assert_eq!(p(&[4, 0, 8]).gcd(&p(&[0, 16])), Poly::one());
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[1, 1])), p(&[1, 1]));
    }

    #[test]
    fn exact_division() {
        assert_eq!(p(&[4, 0, 8]).exact_div(&p(&[1, 0, 2])).unwrap(), p(&[4]));
        let err = p(&[4, 1, 8]).exact_div(&p(&[1, 0, 2])).unwrap_err();
        match err {
            Error::Division { remainder } => assert!(!remainder.is_empty()),
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p(&[4, 0, 8]).eval(&rat(0)), rat(4));
        assert_eq!(p(&[4, 0, 8]).eval(&Rat::new(1.into(), 2.into())), rat(6));
        assert_eq!(Poly::zero().eval(&rat(17)), rat(0));
    }

    #[test]
    fn reflect_examples() {
        assert_eq!(p(&[0, 2]).reflect(), p(&[0, -2]));
        assert_eq!(p(&[4, 0, 8]).reflect(), p(&[4, 0, 8]));
        assert_eq!(p(&[0, 192, 0, 128]).reflect(), p(&[0, -192, 0, -128]));
        assert_eq!(p(&[4, 0, 8]).parity(), Some(Parity::Even));
        assert_eq!(p(&[0, 2]).parity(), Some(Parity::Odd));
        assert_eq!(p(&[1, 1]).parity(), None);
    }

    #[test]
    fn wronskian_examples() {
        // 1×1
        assert_eq!(wronskian(&[p(&[0, 2])]), p(&[0, 2]));
        // 2×2 by hand: 2x·8x − 2·(4x²−2) = 8x² + 4
        assert_eq!(wronskian(&[p(&[0, 2]), p(&[-2, 0, 4])]), p(&[4, 0, 8]));
        // 3×3 against the cofactor oracle
        let fs = [p(&[0, 2]), p(&[-2, 0, 4]), p(&[0, -12, 0, 8])];
        let w = wronskian(&fs);
        assert_eq!(w, p(&[0, 192, 0, 128]));
        assert_eq!(w, naive::wronskian(&fs));
        // empty convention
        assert_eq!(wronskian(&[]), Poly::one());
    }

    #[test]
    fn wronskian_of_dependent_inputs_vanishes() {
        let f = p(&[1, 3, 0, 2]);
        let g = f.scale(&rat(2));
        assert!(wronskian(&[f.clone(), g]).is_zero());
        assert!(wronskian(&[f.clone(), f.derivative(), f.scale(&rat(-5))]).is_zero());
    }

    #[test]
    fn bareiss_matches_cofactor_oracle() {
        // dense matrices with rational entries exercise the lift
        let entries = |seed: i64| {
            let mut v = Vec::new();
            let mut s = seed;
            for _ in 0..4 {
                let mut row = Vec::new();
                for _ in 0..4 {
                    s = (s * 1103515245 + 12345) % 1000;
                    row.push(Poly::from_coeffs(vec![
                        Rat::new(s.into(), 7.into()),
                        rat((s % 5) - 2),
                    ]));
                }
                v.push(row);
            }
            v
        };
        for seed in [1, 2, 3, 9] {
            let m = entries(seed);
            assert_eq!(poly_det(&m), naive::det(&m));
        }
    }

    #[test]
    fn sturm_examples() {
        assert_eq!(sturm_real_root_count(&p(&[-2, 0, 4])), 2);
        assert_eq!(sturm_real_root_count(&p(&[4, 0, 8])), 0);
        assert_eq!(sturm_real_root_count(&p(&[0, 2])), 1);
        // repeated roots count once: (x−1)²(x+2)
        let f = &(&p(&[-1, 1]) * &p(&[-1, 1])) * &p(&[2, 1]);
        assert_eq!(sturm_real_root_count(&f), 2);
        assert_eq!(sturm_real_root_count(&p(&[5])), 0);
    }

    #[test]
    fn squarefree_examples() {
        // (x−1)²(x+2)
        let f = &(&p(&[-1, 1]) * &p(&[-1, 1])) * &p(&[2, 1]);
        assert_eq!(
            squarefree_decomposition(&f),
            vec![(p(&[2, 1]), 1), (p(&[-1, 1]), 2)]
        );
        // squarefree: up to the constant, (x² + 1/2)
        assert_eq!(
            squarefree_decomposition(&p(&[4, 0, 8])),
            vec![(
                Poly::from_coeffs(vec![Rat::new(1.into(), 2.into()), rat(0), rat(1)]),
                1
            )]
        );
        // x³
        assert_eq!(
            squarefree_decomposition(&p(&[0, 0, 0, 1])),
            vec![(p(&[0, 1]), 3)]
        );
    }

    #[test]
    fn squarefree_reconstructs_input() {
        let f = &(&p(&[-3, 1]).pow(3) * &p(&[1, 0, 1]).pow(2)) * &p(&[7, 2]);
        let decomp = squarefree_decomposition(&f);
        let mut prod = Poly::one();
        for (factor, mult) in &decomp {
            prod = &prod * &factor.pow(*mult);
            assert_eq!(factor.gcd(&factor.derivative()), Poly::one());
        }
        // equal up to a constant
        assert_eq!(prod.monic(), f.monic());
        // pairwise coprime
        for i in 0..decomp.len() {
            for j in 0..i {
                assert_eq!(decomp[i].0.gcd(&decomp[j].0), Poly::one());
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let f = Poly::from_coeffs(vec![rat(4), rat(0), Rat::new((-3).into(), 2.into())]);
        let js = serde_json::to_string(&f).unwrap();
        assert_eq!(js, r#"["4","0","-3/2"]"#);
        let back: Poly = serde_json::from_str(&js).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn div_rem_basic() {
        let a = p(&[1, 2, 3, 4]);
        let b = p(&[1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        let (q2, r2) = p(&[1]).div_rem(&p(&[0, 1]));
        assert!(q2.is_zero());
        assert_eq!(r2, p(&[1]));
    }
}
