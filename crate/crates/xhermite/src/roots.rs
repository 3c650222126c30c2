//! Complex roots of exact polynomials.
//!
//! Seeds come from an Aberth–Ehrlich iteration in `f64`, then each root is
//! polished by Newton's method at working precision against the exact
//! coefficients.  Intended for squarefree inputs; the callers check
//! squarefreeness first.

use crate::numeric::{CBig, Ctx};
use crate::poly::{rat_to_f64, Poly};
use num_complex::Complex64;

fn eval_c64(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        acc = acc * z + c;
    }
    acc
}

/// Aberth–Ehrlich simultaneous iteration in double precision.
fn aberth_f64(p: &Poly) -> Vec<Complex64> {
    let deg = match p.degree().finite() {
        None | Some(0) => return Vec::new(),
        Some(d) => d,
    };
    let lead = rat_to_f64(&p.leading());
    let coeffs: Vec<Complex64> = p
        .coeffs()
        .iter()
        .map(|c| Complex64::new(rat_to_f64(c) / lead, 0.0))
        .collect();
    let dcoeffs: Vec<Complex64> = coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * k as f64)
        .collect();

    // Cauchy bound for the root radius
    let radius = 1.0 + coeffs[..deg].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let mut zs: Vec<Complex64> = (0..deg)
        .map(|i| {
            // spread on a circle, irrational angle offset avoids symmetry locks
            let theta = 2.0 * std::f64::consts::PI * (i as f64 + 0.354) / deg as f64 + 0.7;
            Complex64::from_polar(radius * 0.7, theta)
        })
        .collect();

    for _ in 0..300 {
        let mut moved = 0.0f64;
        for i in 0..deg {
            let z = zs[i];
            let pz = eval_c64(&coeffs, z);
            let dz = eval_c64(&dcoeffs, z);
            if pz.norm() == 0.0 {
                continue;
            }
            let newton = pz / dz;
            let mut repulsion = Complex64::new(0.0, 0.0);
            for (j, w) in zs.iter().enumerate() {
                if j != i {
                    repulsion += (z - w).finv();
                }
            }
            let delta = newton / (Complex64::new(1.0, 0.0) - newton * repulsion);
            zs[i] = z - delta;
            moved = moved.max(delta.norm() / (1.0 + zs[i].norm()));
        }
        if moved < 1e-13 {
            break;
        }
    }
    zs
}

/// All complex roots of a squarefree polynomial, Newton-polished at the
/// context precision, ordered by (re, im) for determinism.
pub fn complex_roots(p: &Poly, ctx: &Ctx) -> Vec<CBig> {
    let seeds = aberth_f64(p);
    let dp = p.derivative();
    let mut roots: Vec<CBig> = seeds
        .into_iter()
        .map(|z| {
            let mut z = ctx.c_from_f64(z.re, z.im);
            // quadratic convergence doubles correct digits each step
            for _ in 0..12 {
                let pz = ctx.c_eval_poly(p, &z);
                let dz = ctx.c_eval_poly(&dp, &z);
                let step = ctx.c_div(&pz, &dz);
                z = ctx.c_sub(&z, &step);
                let scale = ctx.add(&ctx.c_abs(&z), &ctx.from_i64(1));
                let rel = ctx.div(&ctx.c_abs(&step), &scale);
                if ctx.to_f64(&rel) < 10f64.powi(-(ctx.digits() as i32) - 5) {
                    break;
                }
            }
            // clamp values that converged onto an axis
            let tiny = 10f64.powi(-(ctx.digits() as i32));
            let za = ctx.to_f64(&ctx.c_abs(&z)) + 1.0;
            if ctx.to_f64(&z.im.abs()) < tiny * za {
                z.im = ctx.from_i64(0);
            }
            if ctx.to_f64(&z.re.abs()) < tiny * za {
                z.re = ctx.from_i64(0);
            }
            z
        })
        .collect();
    roots.sort_by(|a, b| {
        let (ar, ai) = (ctx.to_f64(&a.re), ctx.to_f64(&a.im));
        let (br, bi) = (ctx.to_f64(&b.re), ctx.to_f64(&b.im));
        ar.partial_cmp(&br)
            .unwrap()
            .then(ai.partial_cmp(&bi).unwrap())
    });
    roots
}
