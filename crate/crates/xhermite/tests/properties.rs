//! Property-based invariants of the exact-arithmetic substrate.

use nalgebra::DMatrix;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use xhermite::partition::Partition;
use xhermite::poly::{rat, sturm_real_root_count, wronskian, Poly, Rat};
use xhermite::ratfn::RationalFn;
use xhermite::subspace::membership;
use xhermite::wronskians::h_lambda_j;

fn rat_strategy() -> impl Strategy<Value = Rat> {
    (-1_000_000i64..=1_000_000, 1i64..=1000).prop_map(|(n, d)| Rat::new(n.into(), d.into()))
}

fn poly_strategy(max_degree: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(rat_strategy(), 0..=max_degree + 1).prop_map(Poly::from_coeffs)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly_strategy(20), b in poly_strategy(20), c in poly_strategy(20)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
    }

    #[test]
    fn derivative_is_a_derivation(a in poly_strategy(15), b in poly_strategy(15)) {
        let lhs = (&a * &b).derivative();
        let rhs = &(&a.derivative() * &b) + &(&a * &b.derivative());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn dependent_wronskians_vanish(p in poly_strategy(10), c in -50i64..=50) {
        prop_assume!(!p.is_zero() && c != 0);
        prop_assert!(wronskian(&[p.clone(), p.scale(&rat(c))]).is_zero());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly_strategy(12), b in poly_strategy(12), x in rat_strategy()) {
        prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
        prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
    }

    #[test]
    fn poly_json_round_trip(p in poly_strategy(12)) {
        let js = serde_json::to_string(&p).unwrap();
        let back: Poly = serde_json::from_str(&js).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn rational_fn_field_laws(a in poly_strategy(6), b in poly_strategy(6)) {
        prop_assume!(!b.is_zero());
        let f = RationalFn::new(a.clone(), b.clone());
        prop_assert_eq!(&f - &f, RationalFn::zero());
        if !f.is_zero() {
            prop_assert_eq!(&f / &f, RationalFn::one());
        }
        // derivative of a constant quotient is zero
        let g = RationalFn::new(b.clone(), b);
        prop_assert!(g.derivative().is_zero());
    }

    #[test]
    fn membership_is_linear(c1 in -9i64..=9, c2 in -9i64..=9) {
        let l = Partition::of(&[1, 3]);
        let p = h_lambda_j(&l, 0).poly;
        let q = h_lambda_j(&l, 4).poly;
        let combo = &p.scale(&rat(c1)) + &q.scale(&rat(c2));
        prop_assert!(membership(&l, &combo));
    }

    #[test]
    fn operator_polynomiality_matches_membership(p in poly_strategy(8)) {
        // T_λ[p] is a polynomial exactly when p passes the divisibility
        // test, for primitive and imprimitive λ alike
        for parts in [&[1u32, 1][..], &[2][..], &[1, 2][..], &[1, 3][..]] {
            let l = Partition::of(parts);
            let t = xhermite::operators::t_lambda(&l);
            prop_assert_eq!(t.apply(&p).is_poly(), membership(&l, &p));
        }
    }
}

/// Solving the first-order root constraints numerically recovers exact
/// members: the reduced echelon form of the constraint matrix is rational
/// (the row space annihilates a rational subspace), so rationalizing the
/// canonical nullspace basis and running the exact divisibility test must
/// succeed.
#[test]
fn constraint_nullspace_recovers_exact_members() {
    use xhermite::numeric::{CBig, Ctx};
    use xhermite::subspace::root_constraints;

    let ctx = Ctx::new(60);

    // best rational approximation with a bounded denominator
    let reconstruct = |v: f64| -> Rat {
        if v.abs() < 1e-30 {
            return rat(0);
        }
        let (mut p0, mut q0, mut p1, mut q1) = (1i64, 0i64, v.round() as i64, 1i64);
        let mut frac = v - v.round();
        while frac.abs() > 1e-9 && q1 < 1_000_000 {
            let r = 1.0 / frac;
            let a = r.round();
            frac = r - a;
            let (p2, q2) = (a as i64 * p1 + p0, a as i64 * q1 + q0);
            (p0, q0, p1, q1) = (p1, q1, p2, q2);
        }
        Rat::new(p1.into(), q1.into())
    };

    for (parts, degree) in [(&[1u32, 1][..], 3usize), (&[2][..], 3), (&[1, 1][..], 5)] {
        let l = Partition::of(parts);
        let constraints = root_constraints(&l, 1e-50).unwrap();
        let cols = degree + 1;

        // constraint rows on the ansatz coefficients: p′(ξ) − r p(ξ) = 0
        let mut rows: Vec<Vec<CBig>> = constraints
            .iter()
            .map(|c| {
                (0..cols)
                    .map(|t| {
                        // t ξ^{t−1} − r ξ^t
                        let mut xp = ctx.c_from_f64(1.0, 0.0); // ξ^{t−1} accumulator
                        for _ in 0..t.saturating_sub(1) {
                            xp = ctx.c_mul(&xp, &c.xi);
                        }
                        let dterm = if t == 0 {
                            ctx.c_from_f64(0.0, 0.0)
                        } else {
                            let tt = ctx.c_from_f64(t as f64, 0.0);
                            ctx.c_mul(&tt, &xp)
                        };
                        let xt = if t == 0 {
                            ctx.c_from_f64(1.0, 0.0)
                        } else {
                            ctx.c_mul(&xp, &c.xi)
                        };
                        ctx.c_sub(&dterm, &ctx.c_mul(&c.r, &xt))
                    })
                    .collect()
            })
            .collect();

        // reduced row echelon form over ℂ
        let mut pivots: Vec<usize> = Vec::new();
        let mut rank = 0usize;
        for col in 0..cols {
            let pivot = (rank..rows.len())
                .filter(|&r| ctx.to_f64(&ctx.c_abs(&rows[r][col])) > 1e-30)
                .max_by(|&a, &b| {
                    let na = ctx.to_f64(&ctx.c_abs(&rows[a][col]));
                    let nb = ctx.to_f64(&ctx.c_abs(&rows[b][col]));
                    na.partial_cmp(&nb).unwrap()
                });
            let Some(pivot) = pivot else { continue };
            rows.swap(rank, pivot);
            let inv = ctx.c_div(&ctx.c_from_f64(1.0, 0.0), &rows[rank][col].clone());
            for t in 0..cols {
                rows[rank][t] = ctx.c_mul(&rows[rank][t], &inv);
            }
            for r in 0..rows.len() {
                if r != rank {
                    let factor = rows[r][col].clone();
                    for t in 0..cols {
                        let sub = ctx.c_mul(&factor, &rows[rank][t]);
                        rows[r][t] = ctx.c_sub(&rows[r][t], &sub);
                    }
                }
            }
            pivots.push(col);
            rank += 1;
        }

        // canonical nullspace basis from the free columns, rationalized
        let mut members = 0;
        for free in (0..cols).filter(|c| !pivots.contains(c)) {
            let mut coeffs = vec![rat(0); cols];
            coeffs[free] = rat(1);
            for (r, &pc) in pivots.iter().enumerate() {
                let v = &rows[r][free];
                assert!(
                    ctx.to_f64(&v.im.abs()) < 1e-30,
                    "canonical echelon entries are real"
                );
                coeffs[pc] = -reconstruct(ctx.to_f64(&v.re));
            }
            let candidate = Poly::from_coeffs(coeffs);
            if candidate.is_zero() {
                continue;
            }
            assert!(
                membership(&l, &candidate),
                "{l}: reconstructed {candidate} must pass the exact test"
            );
            members += 1;
        }
        assert_eq!(
            members,
            cols - rank,
            "{l}: one exact member per missing constraint"
        );
        assert_eq!(rank, l.weight() as usize, "{l}: constraints have full rank");
    }
}

/// Sturm counts against companion-matrix eigenvalues on constructed
/// squarefree polynomials with known real-root counts.
#[test]
fn sturm_agrees_with_companion_matrix() {
    let mut rng = ChaCha8Rng::seed_from_u64(271828);
    for _ in 0..60 {
        // distinct integer real roots and complex pairs kept off the axis
        let n_real = rng.random_range(0..=4usize);
        let n_pairs = rng.random_range(0..=3usize);
        if n_real + 2 * n_pairs == 0 {
            continue;
        }
        let mut reals: Vec<i64> = Vec::new();
        while reals.len() < n_real {
            let r = rng.random_range(-6..=6i64);
            if !reals.contains(&r) {
                reals.push(r);
            }
        }
        let mut p = Poly::one();
        for &r in &reals {
            p = &p * &Poly::from_coeffs(vec![rat(-r), rat(1)]);
        }
        for _ in 0..n_pairs {
            let a = rng.random_range(-4..=4i64);
            let b = rng.random_range(1..=4i64);
            // (x − a)² + b²
            p = &p * &Poly::from_coeffs(vec![rat(a * a + b * b), rat(-2 * a), rat(1)]);
        }

        assert_eq!(sturm_real_root_count(&p), n_real, "sturm on {p}");

        // companion matrix of the monic polynomial
        let deg = n_real + 2 * n_pairs;
        let monic = p.monic();
        let mut m = DMatrix::<f64>::zeros(deg, deg);
        for i in 1..deg {
            m[(i, i - 1)] = 1.0;
        }
        for i in 0..deg {
            m[(i, deg - 1)] = -xhermite::poly::rat_to_f64(&monic.coeff(i));
        }
        let eigen = m.complex_eigenvalues();
        // constructed complex roots satisfy |im| ≥ 1, real ones are exact
        // integers, so 1/2 cleanly separates the clusters
        let real_eigen = eigen.iter().filter(|z| z.im.abs() < 0.5).count();
        assert_eq!(real_eigen, n_real, "companion on {p}");
    }
}

/// The Wronskian degree law on gap-indexed Hermite inputs, checked through
/// random strict gap subsets rather than the weight sweep.
#[test]
fn wronskian_degree_matches_partition_weight() {
    let mut rng = ChaCha8Rng::seed_from_u64(1834);
    for _ in 0..40 {
        let mut ks: Vec<u32> = (0..12).filter(|_| rng.random_bool(0.4)).collect();
        ks.dedup();
        if ks.is_empty() {
            continue;
        }
        let gaps = xhermite::partition::GapSequence::new(ks.clone()).unwrap();
        let l = gaps.to_partition();
        let fs: Vec<Poly> = ks
            .iter()
            .map(|&k| xhermite::wronskians::hermite(k as usize))
            .collect();
        let w = wronskian(&fs);
        assert_eq!(
            w.degree().finite().unwrap(),
            l.weight() as usize,
            "gaps {ks:?}"
        );
    }
}
