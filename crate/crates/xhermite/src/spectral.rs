//! Rational extensions of the harmonic oscillator.
//!
//! Each partition produces the potential
//!
//! ```text
//! U_λ = x² − 2 (log H_λ)″ = x² + 2(H_λ′/H_λ)² − 2H_λ″/H_λ,
//! ```
//!
//! which is regular on ℝ exactly when `H_λ` has no real zeros — the
//! Krein–Adler criterion, equivalent to λ being an Adler partition.  Its
//! Schrödinger operator has eigenfunctions `ψ_{λ,k} = e^{−x²/2}
//! H_{λ,k}/H_λ` with eigenvalues `2k − 2ℓ + 1`; the relation is certified
//! exactly at the operator level elsewhere, and re-checked here numerically
//! at sample points to validate the gauge transformation, since the
//! Gaussian factor is transcendental.

use crate::error::Error;
use crate::numeric::Ctx;
use crate::partition::{sweep_partitions, Partition};
use crate::poly::{rat, squarefree_decomposition, sturm_real_root_count, Poly, Rat};
use crate::ratfn::RationalFn;
use crate::subspace::triangular_index;
use crate::wronskians::{h_lambda, h_lambda_j};
use astro_float::BigFloat;
use num_traits::Zero;
use serde::Serialize;

/// A rational extension of the oscillator potential.
#[derive(Clone, Debug)]
pub struct Potential {
    pub partition: Partition,
    /// `x² + 2(H′/H)² − 2H″/H`, reduced.
    pub u: RationalFn,
    /// No poles on the real line; equivalent to λ being Adler.
    pub regular: bool,
}

/// Builds the potential for λ; the empty partition gives exactly `x²`.
pub fn potential(lambda: &Partition) -> Potential {
    let h = h_lambda(lambda);
    let hp = h.derivative();
    let hpp = hp.derivative();
    let x2 = RationalFn::from_poly(Poly::from_integers(&[0, 0, 1]));
    // 2H′² − 2H″H over H²
    let correction = RationalFn::new(
        &(&hp * &hp).scale(&rat(2)) - &(&hpp * &h).scale(&rat(2)),
        &h * &h,
    );
    let u = &x2 + &correction;
    let regular = h.degree().finite() == Some(0) || sturm_real_root_count(&h) == 0;
    // the deformation decays at infinity: deg(U − x²) < 0
    debug_assert!(correction.is_zero() || correction.degree().unwrap() < 0);
    Potential {
        partition: lambda.clone(),
        u,
        regular,
    }
}

/// One row of the regularity sweep.
#[derive(Clone, Debug, Serialize)]
pub struct RegularityEntry {
    pub partition: Vec<u32>,
    pub adler: bool,
    pub real_roots: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct RegularityReport {
    pub max_weight: u32,
    pub entries: Vec<RegularityEntry>,
    /// Structural Adler predicate agrees with the Sturm zero count on every
    /// partition checked.
    pub all_agree: bool,
}

/// Exhaustive Krein–Adler check: for every partition of weight ≤
/// `max_weight` (reduced and with up to two leading zeros), λ is Adler iff
/// `H_λ` has no real zeros.
pub fn regularity_theorem_check(max_weight: u32) -> RegularityReport {
    let mut entries = Vec::new();
    let mut all_agree = true;
    for l in sweep_partitions(max_weight) {
        let adler = l.is_adler();
        let h = h_lambda(&l);
        let real_roots = if h.degree().finite() == Some(0) {
            0
        } else {
            sturm_real_root_count(&h)
        };
        if adler != (real_roots == 0) {
            all_agree = false;
        }
        entries.push(RegularityEntry {
            partition: l.parts().to_vec(),
            adler,
            real_roots,
        });
    }
    RegularityReport {
        max_weight,
        entries,
        all_agree,
    }
}

/// Maximum normalized Schrödinger residual of `ψ_{λ,k}` over the sample
/// points.
///
/// Evaluates `−ψ″ + Uψ − (2k−2ℓ+1)ψ` in high-precision floating arithmetic
/// (the exact rational parts are evaluated exactly, then combined with the
/// Gaussian in floats) and divides by `max |ψ|` over the samples.
pub fn eigenfunction_residual(
    lambda: &Partition,
    k: u32,
    samples: &[Rat],
    ctx: &Ctx,
) -> Result<f64, Error> {
    let pot = potential(lambda);
    if !pot.regular {
        // sample points may sit on a pole; reject irregular potentials up
        // front unless every sample avoids the zeros
        for x in samples {
            if h_lambda(lambda).eval(x).is_zero() {
                return Err(Error::SingularSample { x: x.to_string() });
            }
        }
    }
    if lambda.gaps().contains(k) {
        return Err(Error::IndexInGaps {
            partition: lambda.clone(),
            k,
        });
    }
    let ell = lambda.len() as i64;
    let energy = rat(2 * k as i64 - 2 * ell + 1);
    let g = RationalFn::new(h_lambda_j(lambda, k as i64).poly, h_lambda(lambda));
    let g1 = g.derivative();
    let g2 = g1.derivative();

    let one = ctx.from_i64(1);
    let two = ctx.from_i64(2);
    let mut max_residual = ctx.from_i64(0);
    let mut max_psi = ctx.from_i64(0);
    for x in samples {
        let gv = ctx.from_rat(&g.eval(x)?);
        let g1v = ctx.from_rat(&g1.eval(x)?);
        let g2v = ctx.from_rat(&g2.eval(x)?);
        let uv = ctx.from_rat(&pot.u.eval(x)?);
        let ev = ctx.from_rat(&energy);
        let xv = ctx.from_rat(x);

        // w = e^{−x²/2}; ψ = w·g; ψ″ = w·(g″ − 2x g′ + (x²−1) g)
        let w = ctx.exp(&ctx.neg(&ctx.div(&ctx.mul(&xv, &xv), &two)));
        let psi = ctx.mul(&w, &gv);
        let bracket = ctx.add(
            &ctx.sub(&g2v, &ctx.mul(&two, &ctx.mul(&xv, &g1v))),
            &ctx.mul(&ctx.sub(&ctx.mul(&xv, &xv), &one), &gv),
        );
        let psi2 = ctx.mul(&w, &bracket);
        // −ψ″ + (U − E)ψ
        let residual = ctx.add(&ctx.neg(&psi2), &ctx.mul(&ctx.sub(&uv, &ev), &psi));
        max_residual = ctx.max(max_residual, ctx.abs(&residual));
        max_psi = ctx.max(max_psi, ctx.abs(&psi));
    }
    if ctx.to_f64(&max_psi) == 0.0 {
        return Ok(0.0);
    }
    Ok(ctx.to_f64(&ctx.div(&max_residual, &max_psi)))
}

/// The 21 equispaced sample points in [−5, 5] used by the deterministic
/// residual reports.
pub fn standard_samples() -> Vec<Rat> {
    (0..21)
        .map(|i| Rat::new((-10 + i).into(), 2.into()))
        .collect()
}

/// Indicial data at one root (squarefree factor) of `H_λ`.
#[derive(Clone, Debug, Serialize)]
pub struct IndicialEntry {
    pub factor: Poly,
    pub multiplicity: u32,
    /// m with multiplicity = m(m+1)/2, when it exists.
    pub m: Option<u32>,
    /// The two indicial roots `m(m−1)/2` and `(m+1)(m+2)/2`.
    pub indicial_roots: Option<(u32, u32)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct IndicialReport {
    pub partition: Vec<u32>,
    pub entries: Vec<IndicialEntry>,
    /// Factors whose multiplicity is not triangular, which would contradict
    /// trivial monodromy.
    pub violations: Vec<u32>,
}

/// For each root multiplicity of `H_λ`, solves `n = m(m+1)/2` and reports
/// the indicial roots of the eigenvalue equation at that singularity.
pub fn indicial_check(lambda: &Partition) -> IndicialReport {
    let h = h_lambda(lambda);
    let mut entries = Vec::new();
    let mut violations = Vec::new();
    if h.degree().finite() != Some(0) {
        for (factor, multiplicity) in squarefree_decomposition(&h) {
            let m = triangular_index(multiplicity);
            let indicial_roots = m.map(|m| (m * m.saturating_sub(1) / 2, (m + 1) * (m + 2) / 2));
            if m.is_none() {
                violations.push(multiplicity);
            }
            entries.push(IndicialEntry {
                factor,
                multiplicity,
                m,
                indicial_roots,
            });
        }
    }
    IndicialReport {
        partition: lambda.parts().to_vec(),
        entries,
        violations,
    }
}

/// Weight of the Gaussian ground-state factor at a point, `e^{−x²}`, at
/// context precision.  Shared by the orthogonality module and reports.
pub fn gaussian(x: &BigFloat, ctx: &Ctx) -> BigFloat {
    ctx.exp(&ctx.neg(&ctx.mul(x, x)))
}
