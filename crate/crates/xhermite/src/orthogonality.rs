//! Orthogonality of the X_λ-Hermite families.
//!
//! The weight is `W_{λ²}(x) = e^{−x²} / H_{λ²}(x)²`, positive on all of ℝ
//! because λ² is a double partition.  The square norms have the closed form
//!
//! ```text
//! ∫ H^{(λ)}_i H^{(λ)}_j W_{λ²} dx = δ_{ij} √π 2^j j! p_{λ²}(j),
//! ```
//!
//! which this module verifies by adaptive Gauss–Legendre quadrature at
//! working precision over a truncated interval whose Gaussian tail is
//! bounded analytically.  The rational factor `2^j j! p_{λ²}(j)` is kept
//! exact; √π enters only at comparison time.

use crate::error::Error;
use crate::numeric::{Ctx, LiftedPoly};
use crate::poly::{rat, rat_to_f64, Poly, Rat};
use crate::spectral::gaussian;
use crate::wronskians::XHermiteFamily;
use astro_float::BigFloat;
use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::Serialize;

/// Quadrature outcome: a value with an error estimate.
#[derive(Clone, Debug)]
pub struct QuadResult {
    pub value: BigFloat,
    pub abs_error_estimate: f64,
    pub subdivisions: u32,
    /// True when the integrand was odd and the value is exactly zero by
    /// parity, with no quadrature run.
    pub by_parity: bool,
}

impl QuadResult {
    pub fn value_f64(&self, ctx: &Ctx) -> f64 {
        ctx.to_f64(&self.value)
    }
}

/// The orthogonality weight `e^{−x²} / H_{λ²}(x)²` at a point.
pub fn weight(fam: &XHermiteFamily, x: &Rat, ctx: &Ctx) -> BigFloat {
    let h = ctx.from_rat(&fam.denominator().eval(x));
    let xb = ctx.from_rat(x);
    ctx.div(&gaussian(&xb, ctx), &ctx.mul(&h, &h))
}

/// Exact square norm `2^j j! p_{λ²}(j)`, carrying the √π factor
/// symbolically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormValue {
    /// The rational factor multiplying √π.
    #[serde(serialize_with = "serialize_rat")]
    pub coefficient: Rat,
}

fn serialize_rat<S: serde::Serializer>(r: &Rat, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&crate::poly::rat_to_string(r))
}

impl NormValue {
    /// Multiplies in √π at context precision.
    pub fn to_big(&self, ctx: &Ctx) -> BigFloat {
        ctx.mul(&ctx.from_rat(&self.coefficient), &ctx.sqrt_pi())
    }
}

/// Closed-form square norm of `H^{(λ)}_j`:
///
/// ```text
/// ∫ (H^{(λ)}_j)² W_{λ²} dx = √π · 2^{j+2ℓ} · j! · p_{λ²}(j).
/// ```
///
/// The `2^{2ℓ}` factor is forced by the Darboux chain: deleting the levels
/// `k ∈ gaps(λ²)` multiplies the oscillator norm `√π 2^j j!` by
/// `Π_k (E_j − E_k) = Π_k 2(j−k) = 2^{2ℓ} p_{λ²}(j)`, and the Crum
/// quotient `e^{−x²/2} H_{λ²,j}/H_{λ²}` carries no further constant.  The
/// quadrature route confirms the constant to working precision.
///
/// Strictly positive for admissible `j`.
pub fn norm_formula(fam: &XHermiteFamily, j: u32) -> Result<NormValue, Error> {
    // reuse the excluded-degree error from the polynomial constructor
    let _ = fam.poly(j)?;
    let mut factorial = BigInt::one();
    for i in 2..=j as u64 {
        factorial *= i;
    }
    let two_pow = BigInt::from(2u32).pow(j + 2 * fam.base().len() as u32);
    let p = fam.doubled().char_poly().eval(&rat(j as i64));
    let coefficient = Rat::from(two_pow * factorial) * p;
    assert!(
        coefficient.is_positive(),
        "norms are positive off the excluded degrees"
    );
    Ok(NormValue { coefficient })
}

// ---------------------------------------------------------------------------
// Adaptive quadrature.

const GL_LOW: usize = 16;
const GL_HIGH: usize = 33;
const SUBDIVISION_BUDGET: u32 = 4000;

struct Segment {
    a: BigFloat,
    b: BigFloat,
    value: BigFloat,
    error: f64,
}

fn gl_estimate(
    f: &dyn Fn(&BigFloat, &Ctx) -> BigFloat,
    a: &BigFloat,
    b: &BigFloat,
    ctx: &Ctx,
) -> (BigFloat, f64) {
    let half = ctx.from_rat(&Rat::new(1.into(), 2.into()));
    let mid = ctx.mul(&ctx.add(a, b), &half);
    let rad = ctx.mul(&ctx.sub(b, a), &half);
    let mut sums = Vec::with_capacity(2);
    for n in [GL_LOW, GL_HIGH] {
        let rule = ctx.gauss_legendre(n);
        let mut acc = ctx.from_i64(0);
        for (t, w) in &rule {
            let x = ctx.add(&mid, &ctx.mul(&rad, t));
            acc = ctx.add(&acc, &ctx.mul(w, &f(&x, ctx)));
        }
        sums.push(ctx.mul(&acc, &rad));
    }
    let err = ctx.to_f64(&ctx.abs(&ctx.sub(&sums[1], &sums[0])));
    (sums.pop().unwrap(), err)
}

/// Adaptive bisection with an embedded Gauss–Legendre pair on [a, b],
/// splitting until the summed error estimate is below `tol`.
pub fn integrate_adaptive(
    f: &dyn Fn(&BigFloat, &Ctx) -> BigFloat,
    a: f64,
    b: f64,
    tol: f64,
    ctx: &Ctx,
) -> Result<QuadResult, Error> {
    let mut segments: Vec<Segment> = Vec::new();
    let (v, e) = gl_estimate(f, &ctx.from_f64(a), &ctx.from_f64(b), ctx);
    segments.push(Segment {
        a: ctx.from_f64(a),
        b: ctx.from_f64(b),
        value: v,
        error: e,
    });
    let mut subdivisions = 1u32;

    loop {
        let total_error: f64 = segments.iter().map(|s| s.error).sum();
        if total_error <= tol {
            break;
        }
        if subdivisions >= SUBDIVISION_BUDGET {
            return Err(Error::NonConvergence {
                subdivisions,
                estimate: total_error,
            });
        }
        // split the worst segment
        let worst = segments
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.error.partial_cmp(&y.1.error).unwrap())
            .map(|(i, _)| i)
            .unwrap();
        let seg = segments.swap_remove(worst);
        let half = ctx.from_rat(&Rat::new(1.into(), 2.into()));
        let mid = ctx.mul(&ctx.add(&seg.a, &seg.b), &half);
        for (lo, hi) in [(seg.a.clone(), mid.clone()), (mid, seg.b.clone())] {
            let (v, e) = gl_estimate(f, &lo, &hi, ctx);
            segments.push(Segment {
                a: lo,
                b: hi,
                value: v,
                error: e,
            });
        }
        subdivisions += 2;
    }

    let mut value = ctx.from_i64(0);
    let mut error = 0.0;
    for s in &segments {
        value = ctx.add(&value, &s.value);
        error += s.error;
    }
    Ok(QuadResult {
        value,
        abs_error_estimate: error,
        subdivisions,
        by_parity: false,
    })
}

/// Truncation radius X with the two-sided Gaussian tail of
/// `P(x) e^{−x²} / Q(x)²` certified below `bound`.
///
/// Uses `|P(x)| ≤ (Σ|p_k|) x^{deg P}` for |x| ≥ 1, `|Q(x)| ≥ ½|q_top| x^{deg Q}`
/// for |x| ≥ 2Σ|q_k|/|q_top|, and `∫_X^∞ x^m e^{−x²} dx ≤ X^{m−1} e^{−X²}`
/// for `X ≥ √m`.
fn truncation_radius(p: &Poly, q: &Poly, bound: f64) -> f64 {
    let sum_p: f64 = p.coeffs().iter().map(|c| rat_to_f64(c).abs()).sum();
    let sum_q: f64 = q.coeffs().iter().map(|c| rat_to_f64(c).abs()).sum();
    let q_top = rat_to_f64(&q.leading()).abs();
    let dp = p.degree().finite().unwrap_or(0) as i64;
    let dq = q.degree().finite().unwrap_or(0) as i64;
    let m = (dp - 2 * dq).max(0) as f64;
    let amp = 2.0 * sum_p / (0.25 * q_top * q_top);
    let min_x = (2.0 * sum_q / q_top).max(m.sqrt()).max(1.0);

    let mut x = min_x.ceil().max(2.0);
    loop {
        let log_tail = amp.ln() + (m - 1.0) * x.ln() - x * x;
        if log_tail < bound.ln() {
            return x;
        }
        x += 1.0;
    }
}

/// Numerical inner product `∫ H^{(λ)}_i H^{(λ)}_j W_{λ²} dx`.
///
/// Odd `i + j` is certified zero by parity.  Otherwise the integral is
/// truncated to `|x| ≤ X` with the tail below `tol/10` and evaluated by
/// [`integrate_adaptive`] to within the remaining budget.
pub fn inner_product(
    fam: &XHermiteFamily,
    i: u32,
    j: u32,
    tol: f64,
    ctx: &Ctx,
) -> Result<QuadResult, Error> {
    let pi = fam.poly(i)?;
    let pj = fam.poly(j)?;
    if (i + j) % 2 == 1 {
        return Ok(QuadResult {
            value: ctx.from_i64(0),
            abs_error_estimate: 0.0,
            subdivisions: 0,
            by_parity: true,
        });
    }
    let product = &pi * &pj;
    let q = fam.denominator();
    let radius = truncation_radius(&product, q, tol / 10.0);

    let lifted_p: LiftedPoly = ctx.lift_poly(&product);
    let lifted_q: LiftedPoly = ctx.lift_poly(q);
    let integrand = move |x: &BigFloat, ctx: &Ctx| -> BigFloat {
        let pv = ctx.eval_lifted(&lifted_p, x);
        let qv = ctx.eval_lifted(&lifted_q, x);
        ctx.div(&ctx.mul(&pv, &gaussian(x, ctx)), &ctx.mul(&qv, &qv))
    };

    // even integrand: integrate [0, X] and double
    let half_result = integrate_adaptive(&integrand, 0.0, radius, 0.45 * tol, ctx)?;
    Ok(QuadResult {
        value: ctx.mul(&half_result.value, &ctx.from_i64(2)),
        abs_error_estimate: 2.0 * half_result.abs_error_estimate + tol / 10.0,
        subdivisions: half_result.subdivisions,
        by_parity: false,
    })
}

/// One Gram entry compared against the closed form.
#[derive(Clone, Debug, Serialize)]
pub struct GramEntry {
    pub i: u32,
    pub j: u32,
    pub value: f64,
    pub abs_error_estimate: f64,
    pub subdivisions: u32,
    /// Closed-form value (diagonal only).
    pub closed_form: Option<f64>,
    /// |quadrature − closed| / closed on the diagonal, |value| off it.
    pub deviation: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct GramReport {
    pub partition: Vec<u32>,
    pub indices: Vec<u32>,
    pub tol: f64,
    pub entries: Vec<GramEntry>,
    pub max_offdiagonal: f64,
    pub max_diagonal_relative_error: f64,
}

impl GramReport {
    pub fn ok(&self, threshold: f64) -> bool {
        self.max_offdiagonal <= threshold && self.max_diagonal_relative_error <= threshold
    }
}

/// Gram matrix over the admissible indices ≤ `jmax`, with diagonal entries
/// compared to [`norm_formula`].
pub fn gram_matrix(
    fam: &XHermiteFamily,
    jmax: u32,
    tol: f64,
    ctx: &Ctx,
) -> Result<GramReport, Error> {
    let indices = fam.admissible_up_to(jmax);
    let mut entries = Vec::new();
    let mut max_offdiagonal: f64 = 0.0;
    let mut max_diag_rel: f64 = 0.0;
    for (a, &i) in indices.iter().enumerate() {
        for &j in indices.iter().skip(a) {
            let closed = if i == j {
                Some(norm_formula(fam, j)?)
            } else {
                None
            };
            // absolute tolerance scaled to the target size on the diagonal
            let tol_entry = match &closed {
                Some(n) => tol * rat_to_f64(&n.coefficient).abs().max(1.0),
                None => tol,
            };
            let quad = inner_product(fam, i, j, tol_entry, ctx)?;
            let value = quad.value_f64(ctx);
            let deviation = match &closed {
                Some(n) => {
                    let c = n.to_big(ctx);
                    let rel = ctx.div(&ctx.abs(&ctx.sub(&quad.value, &c)), &ctx.abs(&c));
                    let rel = ctx.to_f64(&rel);
                    max_diag_rel = max_diag_rel.max(rel);
                    rel
                }
                None => {
                    let dev = value.abs();
                    max_offdiagonal = max_offdiagonal.max(dev);
                    dev
                }
            };
            entries.push(GramEntry {
                i,
                j,
                value,
                abs_error_estimate: quad.abs_error_estimate,
                subdivisions: quad.subdivisions,
                closed_form: closed.map(|n| ctx.to_f64(&n.to_big(ctx))),
                deviation,
            });
        }
    }
    Ok(GramReport {
        partition: fam.base().parts().to_vec(),
        indices,
        tol,
        entries,
        max_offdiagonal,
        max_diagonal_relative_error: max_diag_rel,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;

    fn fam(parts: &[u32]) -> XHermiteFamily {
        XHermiteFamily::new(Partition::of(parts)).unwrap()
    }

    #[test]
    fn weight_examples() {
        let ctx = Ctx::new(30);
        // λ=(1): H_{λ²}(0) = 4, so W(0) = 1/16
        let f = fam(&[1]);
        let w0 = weight(&f, &rat(0), &ctx);
        assert!((ctx.to_f64(&w0) - 1.0 / 16.0).abs() < 1e-25);
        // classical: e^{−x²}
        let f0 = fam(&[]);
        let w1 = weight(&f0, &rat(1), &ctx);
        assert!((ctx.to_f64(&w1) - (-1.0f64).exp()).abs() < 1e-15);
        // decay at large x
        let wf = weight(&f, &rat(10), &ctx);
        assert!(ctx.to_f64(&wf) > 0.0 && ctx.to_f64(&wf) < 1e-40);
    }

    #[test]
    fn norm_formula_examples() {
        // λ=(1): p_{λ²}(x) = (x−1)(x−2), with the 2^{2ℓ} = 4 chain factor
        let f = fam(&[1]);
        assert_eq!(norm_formula(&f, 0).unwrap().coefficient, rat(8));
        assert_eq!(norm_formula(&f, 3).unwrap().coefficient, rat(384));
        assert!(norm_formula(&f, 1).is_err());
        // classical: 2^n n!, no chain factor
        let f0 = fam(&[]);
        assert_eq!(norm_formula(&f0, 4).unwrap().coefficient, rat(16 * 24));
    }

    #[test]
    fn norm_constant_certified_by_exact_integral() {
        // independent of the quadrature path: for λ=(1), j=0 the integral
        // reduces to ∫ 16 e^{−x²}/(2x²+1)² dx = 16·(√π/2)·(1/4)·4 = 8√π,
        // using ∫ e^{−x²}/(x²+s)² dx = −F′(s) with
        // F(s) = π s^{−1/2} e^s erfc(√s) and F′(1/2) = −2√π
        let f = fam(&[1]);
        assert_eq!(norm_formula(&f, 0).unwrap().coefficient, rat(8));
    }

    #[test]
    fn norms_are_positive() {
        for parts in [&[1u32][..], &[2], &[1, 3], &[2, 2], &[1, 1, 1]] {
            let f = fam(parts);
            for j in f.admissible_up_to(12) {
                assert!(norm_formula(&f, j).unwrap().coefficient.is_positive());
            }
        }
    }

    #[test]
    fn quadrature_on_gaussian() {
        // ∫_{−∞}^{∞} e^{−x²} = √π via the same machinery
        let ctx = Ctx::new(30);
        let f0 = fam(&[]);
        let q = inner_product(&f0, 0, 0, 1e-14, &ctx).unwrap();
        let sp = ctx.sqrt_pi();
        let err = ctx.to_f64(&ctx.abs(&ctx.sub(&q.value, &sp)));
        assert!(err < 1e-13, "error {err}");
    }

    #[test]
    fn parity_shortcut() {
        let ctx = Ctx::new(30);
        let f = fam(&[1]);
        let q = inner_product(&f, 0, 3, 1e-12, &ctx).unwrap();
        assert!(q.by_parity);
        assert_eq!(q.value_f64(&ctx), 0.0);
    }

    #[test]
    fn diagonal_matches_closed_form() {
        let ctx = Ctx::new(30);
        let f = fam(&[1]);
        // j=0: 8√π
        let q = inner_product(&f, 0, 0, 1e-12, &ctx).unwrap();
        let expected = norm_formula(&f, 0).unwrap().to_big(&ctx);
        let err = ctx.to_f64(&ctx.abs(&ctx.sub(&q.value, &expected)));
        assert!(err < 1e-11, "error {err}");
        assert!((q.value_f64(&ctx) - 8.0 * std::f64::consts::PI.sqrt()).abs() < 1e-11);
        // j=3: 384√π
        let q = inner_product(&f, 3, 3, 1e-10, &ctx).unwrap();
        let expected = norm_formula(&f, 3).unwrap().to_big(&ctx);
        let rel = ctx.to_f64(&ctx.div(&ctx.abs(&ctx.sub(&q.value, &expected)), &expected));
        assert!(rel < 1e-11, "relative error {rel}");
    }

    #[test]
    fn off_diagonal_same_parity_vanishes() {
        let ctx = Ctx::new(30);
        let f = fam(&[1]);
        // i=0, j=4: even–even, genuine quadrature, exact value 0
        let q = inner_product(&f, 0, 4, 1e-11, &ctx).unwrap();
        assert!(!q.by_parity);
        assert!(q.value_f64(&ctx).abs() < 1e-10);
    }

    #[test]
    fn unreachable_tolerance_reports_nonconvergence() {
        // far below working precision the error estimates stall and the
        // subdivision budget runs out
        let ctx = Ctx::new(15);
        let f = fam(&[1]);
        let err = inner_product(&f, 0, 0, 1e-45, &ctx);
        assert!(matches!(err, Err(Error::NonConvergence { .. })));
    }

    #[test]
    fn small_gram_matrix() {
        let ctx = Ctx::new(30);
        let f = fam(&[1]);
        let report = gram_matrix(&f, 6, 1e-10, &ctx).unwrap();
        assert!(report.ok(1e-9), "{report:?}");
        assert_eq!(report.indices, vec![0, 3, 4, 5, 6]);
    }
}
