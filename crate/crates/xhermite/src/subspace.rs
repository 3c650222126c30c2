//! The exceptional subspace attached to a partition.
//!
//! `U_λ = span{ H_{λ,j} : j ∉ gaps }` sits inside the space of all
//! polynomials with codimension |λ|.  Membership has a tolerance-free
//! characterization: `p ∈ U_λ` iff `H_λ` divides `2H_λ′(xp − p′) + H_λ″ p`
//! exactly — this is the numerator of the singular part of `T_λ[p]`.  When
//! `H_λ` has simple roots the same subspace is cut out by one first-order
//! constraint `p′(ξ_a) = r_a p(ξ_a)` per root, with
//! `r_a = ξ_a + Σ_{b≠a} 1/(ξ_a − ξ_b)`.

use crate::error::Error;
use crate::numeric::{CBig, Ctx};
use crate::partition::Partition;
use crate::poly::{squarefree_decomposition, Poly, Rat};
use crate::roots::complex_roots;
use crate::wronskians::{h_lambda, missing_degrees};
use num_traits::Zero;
use serde::Serialize;

/// The divisibility expression `2H_λ′(xp − p′) + H_λ″ p`.
fn membership_numerator(h: &Poly, p: &Poly) -> Poly {
    let hp = h.derivative();
    let hpp = hp.derivative();
    let xp_minus_dp = &(&Poly::x() * p) - &p.derivative();
    &(&hp.scale(&crate::poly::rat(2)) * &xp_minus_dp) + &(&hpp * p)
}

/// Exact membership test for `p ∈ U_λ`.
pub fn membership(lambda: &Partition, p: &Poly) -> bool {
    let h = h_lambda(lambda);
    membership_numerator(&h, p).divisible_by(&h)
}

/// Both routes to the codimension of `U_λ`.
#[derive(Clone, Debug, Serialize)]
pub struct CodimReport {
    pub partition: Vec<u32>,
    /// Degrees missing from the family below stabilization; always |λ|.
    pub missing_degree_count: usize,
    /// Rank of the divisibility conditions on polynomials of degree ≤
    /// |λ| + λ_ℓ.
    pub divisibility_rank: usize,
    /// Whether `H_λ` is squarefree.  The two routes agree exactly on
    /// squarefree denominators; at a repeated root the divisibility
    /// conditions degenerate (members share the root, so fewer independent
    /// conditions survive) and the rank drops below |λ|.
    pub squarefree: bool,
}

pub fn codim_report(lambda: &Partition) -> CodimReport {
    let h = h_lambda(lambda);
    let squarefree =
        h.degree().finite() == Some(0) || squarefree_decomposition(&h).iter().all(|&(_, m)| m == 1);
    CodimReport {
        partition: lambda.parts().to_vec(),
        missing_degree_count: missing_degrees(lambda).len(),
        divisibility_rank: constraint_rank(lambda),
        squarefree,
    }
}

/// Codimension of `U_λ` (always |λ|), cross-checked against the rank of the
/// divisibility conditions whenever `H_λ` is squarefree — the regime in
/// which divisibility characterizes membership.
pub fn codimension(lambda: &Partition) -> usize {
    let report = codim_report(lambda);
    assert_eq!(
        report.missing_degree_count,
        lambda.weight() as usize,
        "codimension must equal the weight, {lambda}"
    );
    if report.squarefree {
        assert_eq!(
            report.missing_degree_count, report.divisibility_rank,
            "codimension methods disagree on {lambda}"
        );
    }
    report.missing_degree_count
}

fn constraint_rank(lambda: &Partition) -> usize {
    let h = h_lambda(lambda);
    let Some(dh) = h.degree().finite() else {
        return 0;
    };
    if dh == 0 {
        return 0;
    }
    let top = (lambda.weight() + lambda.parts().last().copied().unwrap_or(0)) as usize;
    // rows: remainder coefficients of the membership numerator on the
    // monomial basis x^t
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(top + 1);
    for t in 0..=top {
        let mut mono = vec![Rat::zero(); t + 1];
        mono[t] = Rat::from_integer(1.into());
        let mono = Poly::from_coeffs(mono);
        let rem = membership_numerator(&h, &mono).div_rem(&h).1;
        rows.push((0..dh).map(|k| rem.coeff(k)).collect());
    }
    rank(rows)
}

/// Row rank by fraction-free Gaussian elimination over the rationals.
fn rank(mut rows: Vec<Vec<Rat>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][c].recip();
        for r in rank + 1..rows.len() {
            if rows[r][c].is_zero() {
                continue;
            }
            let factor = &rows[r][c] * &inv;
            for k in c..cols {
                let t = &rows[rank][k] * &factor;
                rows[r][k] -= t;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// One first-order constraint `p′(ξ) − r p(ξ) = 0` at a simple root of
/// `H_λ`.
#[derive(Clone, Debug)]
pub struct RootConstraint {
    /// Refined root of `H_λ`.
    pub xi: CBig,
    /// `r = ξ + Σ_{b≠a} 1/(ξ − ξ_b)`.
    pub r: CBig,
    /// Always 1 here; repeated roots are rejected.
    pub multiplicity: u32,
}

impl RootConstraint {
    /// `|p′(ξ) − r p(ξ)|`, the constraint residual for a candidate member.
    pub fn residual(&self, p: &Poly, ctx: &Ctx) -> f64 {
        let pd = ctx.c_eval_poly(&p.derivative(), &self.xi);
        let pv = ctx.c_eval_poly(p, &self.xi);
        let lhs = ctx.c_sub(&pd, &ctx.c_mul(&self.r, &pv));
        ctx.to_f64(&ctx.c_abs(&lhs))
    }

    /// Coefficient-magnitude scale of `p` at this root, used to normalize
    /// residuals.
    pub fn scale(&self, p: &Poly, ctx: &Ctx) -> f64 {
        let base = ctx.to_f64(&ctx.c_abs(&self.xi)).abs().max(1.0);
        p.coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| crate::poly::rat_to_f64(c).abs() * base.powi(k as i32))
            .sum::<f64>()
            .max(1.0)
    }
}

/// The |λ| simple-root constraints of `U_λ`.
///
/// `precision` is the requested residual tolerance for the refined roots
/// (the working precision is at least 60 digits); repeated roots are a
/// [`Error::NonSimpleRoots`] carrying the multiplicity profile.
pub fn root_constraints(lambda: &Partition, precision: f64) -> Result<Vec<RootConstraint>, Error> {
    let h = h_lambda(lambda);
    if h.degree().finite() == Some(0) {
        return Ok(Vec::new());
    }
    let decomposition = squarefree_decomposition(&h);
    if decomposition.iter().any(|&(_, m)| m > 1) {
        let profile = decomposition
            .iter()
            .map(|(f, m)| (f.degree().finite().unwrap_or(0), *m))
            .collect();
        return Err(Error::NonSimpleRoots { profile });
    }

    let digits = (-precision.log10()).ceil().max(0.0) as usize + 10;
    let ctx = Ctx::new(digits.max(60));
    let roots = complex_roots(&h, &ctx);
    let constraints = roots
        .iter()
        .map(|xi| {
            let mut sum = ctx.c_from_f64(0.0, 0.0);
            for other in &roots {
                let diff = ctx.c_sub(xi, other);
                if ctx.to_f64(&ctx.c_abs(&diff)) > 1e-20 {
                    sum = ctx.c_add(&sum, &ctx.c_div(&ctx.c_from_f64(1.0, 0.0), &diff));
                }
            }
            RootConstraint {
                xi: xi.clone(),
                r: ctx.c_add(xi, &sum),
                multiplicity: 1,
            }
        })
        .collect();
    Ok(constraints)
}

/// Squarefree structure of `H_λ` and the triangularity of its repeated
/// roots.
#[derive(Clone, Debug, Serialize)]
pub struct PrimitivityReport {
    pub partition: Vec<u32>,
    /// `U_λ` is primitive iff `H_λ` is squarefree.
    pub squarefree: bool,
    pub factors: Vec<FactorReport>,
    /// Repeated factors are all powers of x (no counterexample to the
    /// simple-roots-off-origin conjecture was found).
    pub repeated_only_at_origin: bool,
    /// Every repeated multiplicity is triangular, m(m+1)/2.
    pub multiplicities_triangular: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorReport {
    pub factor: Poly,
    pub multiplicity: u32,
    /// m with multiplicity = m(m+1)/2, when one exists.
    pub triangular_m: Option<u32>,
}

/// Integer m with n = m(m+1)/2, if any.
pub fn triangular_index(n: u32) -> Option<u32> {
    let mut m = 0u32;
    loop {
        let t = m * (m + 1) / 2;
        if t == n {
            return Some(m);
        }
        if t > n {
            return None;
        }
        m += 1;
    }
}

/// Reports whether `H_λ` has simple roots and classifies every repeated
/// factor.
pub fn primitivity_check(lambda: &Partition) -> PrimitivityReport {
    let h = h_lambda(lambda);
    let decomposition = squarefree_decomposition(&h);
    let squarefree = decomposition.iter().all(|&(_, m)| m == 1);
    let mut repeated_only_at_origin = true;
    let mut multiplicities_triangular = true;
    let factors = decomposition
        .into_iter()
        .map(|(factor, multiplicity)| {
            let triangular_m = triangular_index(multiplicity);
            if multiplicity > 1 {
                if factor != Poly::x() {
                    repeated_only_at_origin = false;
                }
                if triangular_m.is_none() {
                    multiplicities_triangular = false;
                }
            }
            FactorReport {
                factor,
                multiplicity,
                triangular_m,
            }
        })
        .collect();
    PrimitivityReport {
        partition: lambda.parts().to_vec(),
        squarefree,
        factors,
        repeated_only_at_origin,
        multiplicities_triangular,
    }
}
