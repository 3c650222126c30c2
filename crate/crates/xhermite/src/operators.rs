//! Differential operators attached to a partition and exact verification of
//! their identities.
//!
//! `T[y] = y″ − 2x y′` is the classical Hermite operator and
//!
//! ```text
//! T_λ[y] = y″ − 2(x + H_λ′/H_λ) y′ + (H_λ″/H_λ + 2x H_λ′/H_λ) y
//! ```
//!
//! its partition-indexed deformation.  The ℓ-th order maps
//! `A_λ[y] = Wr[H_{k₁},…,H_{k_ℓ},y]` and
//! `B_λ[y] = e^{x²} H_λ^{−ℓ} Wr[Ĥ_{λ,1},…,Ĥ_{λ,ℓ}, e^{−x²}y]`
//! intertwine them:  `(T_λ − 2ℓ)A_λ = A_λ T` and `B_λ(T_λ − 2ℓ) = T B_λ`,
//! which makes every `H_{λ,j}` an eigenpolynomial, `T_λ[H_{λ,j}] =
//! 2(ℓ−j)H_{λ,j}`.
//!
//! `B_λ` is computed entirely in polynomial arithmetic by conjugating the
//! derivatives of the Gaussian column: `d^m/dx^m (e^{−x²}y) = e^{−x²}
//! (D−2x)^m[y]`, so the `e^{−x²}` factor cancels before anything is
//! evaluated.
//!
//! Operator identities are verified pointwise on polynomial test sets, not
//! by composing coefficient algebras: exact equality on a spanning set of
//! degree ≤ N certifies equality on all polynomials of degree ≤ N.

use crate::error::Error;
use crate::partition::{GapSequence, Partition};
use crate::poly::{self, rat, Poly, Rat};
use crate::ratfn::RationalFn;
use crate::report::VerifyReport;
use crate::wronskians::{h_hat, h_lambda, h_lambda_j, hermite, XHermiteFamily};

/// Second-order linear differential operator `p y″ + q y′ + r y` with
/// rational-function coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffOp2 {
    pub p: RationalFn,
    pub q: RationalFn,
    pub r: RationalFn,
}

impl DiffOp2 {
    /// Exact application to a polynomial.
    pub fn apply(&self, y: &Poly) -> RationalFn {
        let y1 = RationalFn::from_poly(y.derivative());
        let y2 = RationalFn::from_poly(y.derivative().derivative());
        let y0 = RationalFn::from_poly(y.clone());
        &(&(&self.p * &y2) + &(&self.q * &y1)) + &(&self.r * &y0)
    }

    /// Exact application to a rational function.
    pub fn apply_rational(&self, f: &RationalFn) -> RationalFn {
        let f1 = f.derivative();
        let f2 = f1.derivative();
        &(&(&self.p * &f2) + &(&self.q * &f1)) + &(&self.r * f)
    }

    /// The operator `self + c` (a constant added to the zero-order term).
    pub fn shifted(&self, c: Rat) -> DiffOp2 {
        DiffOp2 {
            p: self.p.clone(),
            q: self.q.clone(),
            r: &self.r + &RationalFn::constant(c),
        }
    }
}

/// The classical Hermite operator `T[y] = y″ − 2x y′`, with
/// `T[H_n] = −2n H_n`.
pub fn classical_t() -> DiffOp2 {
    DiffOp2 {
        p: RationalFn::one(),
        q: RationalFn::from_poly(Poly::from_integers(&[0, -2])),
        r: RationalFn::zero(),
    }
}

/// `T_λ`, reducing to [`classical_t`] for the empty partition.
pub fn t_lambda(lambda: &Partition) -> DiffOp2 {
    let h = h_lambda(lambda);
    let hp = h.derivative();
    let hpp = hp.derivative();
    let x = Poly::x();
    // q = −2(x + H′/H) = −2(xH + H′)/H
    let q = RationalFn::new((&(&x * &h) + &hp).scale(&rat(-2)), h.clone());
    // r = (H″ + 2xH′)/H
    let r = RationalFn::new(&hpp + &(&x * &hp).scale(&rat(2)), h);
    DiffOp2 {
        p: RationalFn::one(),
        q,
        r,
    }
}

/// `A_λ[y] = Wr[H_{k₁},…,H_{k_ℓ},y]`; in particular `A_λ[H_j] = H_{λ,j}`.
pub fn a_lambda(lambda: &Partition, y: &Poly) -> Poly {
    let mut fs: Vec<Poly> = lambda
        .gaps()
        .values()
        .iter()
        .map(|&k| hermite(k as usize))
        .collect();
    fs.push(y.clone());
    poly::wronskian(&fs)
}

/// `(D − 2x)` applied to a rational function: the Gaussian-conjugated
/// derivative.
fn conjugated_derivative(f: &RationalFn) -> RationalFn {
    &f.derivative() - &(&RationalFn::from_poly(Poly::from_integers(&[0, 2])) * f)
}

/// `B_λ` on a rational function.  Requires λ nonempty.
///
/// The Wronskian is expanded along its last column, whose entries are the
/// conjugated derivatives `(D−2x)^m[f]`; the minors are Wronskian-type
/// polynomial determinants of the deleted families `Ĥ_{λ,i}`.
pub fn b_lambda_rational(lambda: &Partition, f: &RationalFn) -> RationalFn {
    let ell = lambda.len();
    assert!(ell > 0, "B is defined for nonempty partitions");
    let hats: Vec<Poly> = (1..=ell).map(|i| h_hat(lambda, i).unwrap()).collect();

    // derivative table: rows are derivative orders 0..=ℓ of the ℓ deleted
    // Wronskians
    let mut rows: Vec<Vec<Poly>> = Vec::with_capacity(ell + 1);
    rows.push(hats.clone());
    for r in 1..=ell {
        rows.push(rows[r - 1].iter().map(Poly::derivative).collect());
    }

    // conjugated column
    let mut conj: Vec<RationalFn> = Vec::with_capacity(ell + 1);
    conj.push(f.clone());
    for r in 1..=ell {
        conj.push(conjugated_derivative(&conj[r - 1]));
    }

    let mut det = RationalFn::zero();
    for r in 0..=ell {
        if conj[r].is_zero() {
            continue;
        }
        let minor_rows: Vec<Vec<Poly>> = (0..=ell)
            .filter(|&s| s != r)
            .map(|s| rows[s].clone())
            .collect();
        let minor = poly::poly_det(&minor_rows);
        let signed = if (r + ell).is_multiple_of(2) {
            minor
        } else {
            -&minor
        };
        det = &det + &(&conj[r] * &RationalFn::from_poly(signed));
    }

    let h = h_lambda(lambda);
    &det / &RationalFn::from_poly(h.pow(ell as u32))
}

/// `B_λ` on a polynomial.
pub fn b_lambda(lambda: &Partition, y: &Poly) -> RationalFn {
    b_lambda_rational(lambda, &RationalFn::from_poly(y.clone()))
}

/// Which first-order factor of the Darboux step at level `k`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FactorKind {
    A,
    B,
}

/// One first-order intertwining factor of the chain that extends λ by the
/// level `k ∉ gaps`:
///
/// * `A_{λ,k}[y] = Wr[H_{λ,k}, y] / H_λ`
/// * `B_{λ,k}[y] = (H_λ / H_{λ,k}) (y′ − (2x + H_λ′/H_λ) y)`
#[derive(Clone, Debug)]
pub struct FirstOrderFactor {
    pub kind: FactorKind,
    pub lambda: Partition,
    pub k: u32,
}

impl FirstOrderFactor {
    pub fn new(kind: FactorKind, lambda: Partition, k: u32) -> Result<Self, Error> {
        if lambda.gaps().contains(k) {
            return Err(Error::IndexInGaps {
                partition: lambda,
                k,
            });
        }
        Ok(FirstOrderFactor { kind, lambda, k })
    }

    pub fn apply(&self, f: &RationalFn) -> RationalFn {
        let h = h_lambda(&self.lambda);
        let hk = h_lambda_j(&self.lambda, self.k as i64).poly;
        match self.kind {
            FactorKind::A => {
                // Wr[H_{λ,k}, f] / H_λ
                let wr = &(&RationalFn::from_poly(hk.derivative()).scale(&rat(-1)) * f)
                    + &(&RationalFn::from_poly(hk) * &f.derivative());
                &wr / &RationalFn::from_poly(h)
            }
            FactorKind::B => {
                let front = RationalFn::new(h.clone(), hk);
                let x2 = RationalFn::from_poly(Poly::from_integers(&[0, 2]));
                let log_h = RationalFn::new(h.derivative(), h);
                let inner = &f.derivative() - &(&(&x2 + &log_h) * f);
                &front * &inner
            }
        }
    }
}

/// The partition whose gap sequence is `gaps(λ) ∪ {k}`.
pub fn extended_partition(lambda: &Partition, k: u32) -> Result<Partition, Error> {
    let mut ks = lambda.gaps().values().to_vec();
    if ks.contains(&k) {
        return Err(Error::IndexInGaps {
            partition: lambda.clone(),
            k,
        });
    }
    ks.push(k);
    ks.sort_unstable();
    Ok(GapSequence::new(ks)?.to_partition())
}

/// Verifies both intertwining relations on the given test polynomials:
/// `(T_λ − 2ℓ)A_λ[y] = A_λ[T y]` and `B_λ[(T_λ − 2ℓ)y] = T[B_λ y]`.
pub fn verify_intertwining(lambda: &Partition, tests: &[Poly]) -> VerifyReport {
    let mut report = VerifyReport::new(format!("intertwining {lambda}"));
    let ell = lambda.len() as i64;
    let t = classical_t();
    let tl = t_lambda(lambda);
    let tl_shifted = tl.shifted(rat(-2 * ell));

    for (idx, y) in tests.iter().enumerate() {
        let ay = a_lambda(lambda, y);
        let lhs = tl_shifted.apply(&ay);
        let ty = t
            .apply(y)
            .as_poly()
            .expect("T maps polynomials to polynomials");
        let rhs = RationalFn::from_poly(a_lambda(lambda, &ty));
        let diff = &lhs - &rhs;
        report.record(
            format!("(T_λ−2ℓ)A_λ = A_λT on test {idx}"),
            diff.is_zero(),
            || diff.to_string(),
        );

        if !lambda.is_empty() {
            let lhs_b = b_lambda_rational(lambda, &tl_shifted.apply(y));
            let rhs_b = t.apply_rational(&b_lambda(lambda, y));
            let diff_b = &lhs_b - &rhs_b;
            report.record(
                format!("B_λ(T_λ−2ℓ) = TB_λ on test {idx}"),
                diff_b.is_zero(),
                || diff_b.to_string(),
            );
        }
    }
    report
}

/// Verifies the first-order factorization identities at level `k ∉ gaps`:
/// `B_{λ,k}A_{λ,k} = T_λ + 2k − 2ℓ` and `A_{λ,k}B_{λ,k} = T_{λ,k} + 2k −
/// 2ℓ − 2` on the given test polynomials.
pub fn verify_factorizations(
    lambda: &Partition,
    k: u32,
    tests: &[Poly],
) -> Result<VerifyReport, Error> {
    let mut report = VerifyReport::new(format!("factorization {lambda} k={k}"));
    let ell = lambda.len() as i64;
    let a = FirstOrderFactor::new(FactorKind::A, lambda.clone(), k)?;
    let b = FirstOrderFactor::new(FactorKind::B, lambda.clone(), k)?;
    let tl = t_lambda(lambda);
    let extended = extended_partition(lambda, k)?;
    let tlk = t_lambda(&extended);
    let ba_shift = rat(2 * k as i64 - 2 * ell);
    let ab_shift = rat(2 * k as i64 - 2 * ell - 2);

    for (idx, y) in tests.iter().enumerate() {
        let f = RationalFn::from_poly(y.clone());

        let ba = b.apply(&a.apply(&f));
        let rhs = tl.shifted(ba_shift.clone()).apply(y);
        let diff = &ba - &rhs;
        report.record(
            format!("B_k A_k = T_λ + 2k − 2ℓ on test {idx}"),
            diff.is_zero(),
            || diff.to_string(),
        );

        let ab = a.apply(&b.apply(&f));
        let rhs2 = tlk.shifted(ab_shift.clone()).apply(y);
        let diff2 = &ab - &rhs2;
        report.record(
            format!("A_k B_k = T_λk + 2k − 2ℓ − 2 on test {idx}"),
            diff2.is_zero(),
            || diff2.to_string(),
        );
    }
    Ok(report)
}

/// Verifies the eigenvalue relation of the X_λ family:
/// `T_{λ²}[H^{(λ)}_j] = (4ℓ − 2j) H^{(λ)}_j` for every admissible `j ≤
/// jmax`.
pub fn verify_eigen(fam: &XHermiteFamily, jmax: u32) -> VerifyReport {
    let mut report = VerifyReport::new(format!("eigenvalue base {}", fam.base()));
    let ell = fam.base().len() as i64;
    let t = t_lambda(fam.doubled());
    for j in fam.admissible_up_to(jmax) {
        let p = fam.poly(j).expect("admissible index");
        let lhs = t.apply(&p);
        let rhs = RationalFn::from_poly(p.scale(&rat(4 * ell - 2 * j as i64)));
        let diff = &lhs - &rhs;
        report.record(
            format!("T_λ² eigenrelation at j={j}"),
            diff.is_zero(),
            || diff.to_string(),
        );
    }
    report
}

/// Verifies the general eigenvalue relation `T_λ[H_{λ,j}] = 2(ℓ−j)H_{λ,j}`
/// for every `j ≤ jmax` outside the gaps, Adler or not.
pub fn verify_eigen_general(lambda: &Partition, jmax: u32) -> VerifyReport {
    let mut report = VerifyReport::new(format!("general eigenrelation {lambda}"));
    let ell = lambda.len() as i64;
    let t = t_lambda(lambda);
    let gaps = lambda.gaps();
    for j in (0..=jmax).filter(|&j| !gaps.contains(j)) {
        let p = h_lambda_j(lambda, j as i64).poly;
        let lhs = t.apply(&p);
        let rhs = RationalFn::from_poly(p.scale(&rat(2 * (ell - j as i64))));
        let diff = &lhs - &rhs;
        report.record(
            format!("T_λ eigenrelation at j={j}"),
            diff.is_zero(),
            || diff.to_string(),
        );
    }
    report
}

/// Degrees ≤ `jmax` of the classical Hermite test set `{H_j}` used by the
/// verification sweeps.
pub fn hermite_tests(jmax: u32) -> Vec<Poly> {
    (0..=jmax).map(|j| hermite(j as usize)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn p(coeffs: &[i64]) -> Poly {
        Poly::from_integers(coeffs)
    }

    #[test]
    fn classical_t_eigenvalues() {
        let t = classical_t();
        for n in [0usize, 1, 2, 5, 9] {
            let h = hermite(n);
            let lhs = t.apply(&h);
            let rhs = RationalFn::from_poly(h.scale(&rat(-2 * n as i64)));
            assert_eq!(lhs, rhs, "T[H_{n}] = −2n H_{n}");
        }
        assert!(t.apply(&Poly::one()).is_zero());
        assert_eq!(t.apply(&Poly::x()), RationalFn::from_poly(p(&[0, -2])));
    }

    #[test]
    fn t_lambda_empty_is_classical() {
        assert_eq!(t_lambda(&Partition::empty()), classical_t());
    }

    #[test]
    fn t_lambda_coefficients_for_one_one() {
        let t = t_lambda(&Partition::of(&[1, 1]));
        // q = −2(x + 16x/(8x²+4))
        let expected_q = RationalFn::new(
            &Poly::from_integers(&[0, -2]) * &p(&[4, 0, 8]),
            p(&[4, 0, 8]),
        );
        let expected_q = &expected_q + &RationalFn::new(p(&[0, -32]), p(&[4, 0, 8]));
        assert_eq!(t.q, expected_q);
        // r reduces to the constant 4
        assert_eq!(t.r, RationalFn::constant(rat(4)));
        // denominators divide H_λ
        assert!(p(&[4, 0, 8]).divisible_by(t.q.den()));
        assert!(p(&[4, 0, 8]).divisible_by(t.r.den()));
    }

    #[test]
    fn t_lambda_polynomiality() {
        let t = t_lambda(&Partition::of(&[1, 1]));
        // members map to polynomials
        let member = p(&[16]);
        assert!(t.apply(&member).is_poly());
        // x is not in the exceptional subspace: a genuine rational function
        assert!(!t.apply(&Poly::x()).is_poly());
    }

    #[test]
    fn a_lambda_examples() {
        let l = Partition::of(&[1, 1]);
        assert_eq!(a_lambda(&l, &hermite(0)), p(&[16]));
        assert!(a_lambda(&l, &hermite(1)).is_zero());
        let q = p(&[3, 1, 4]);
        assert_eq!(a_lambda(&Partition::empty(), &q), q);
        assert_eq!(a_lambda(&l, &hermite(3)), h_lambda_j(&l, 3).poly);
    }

    #[test]
    fn b_lambda_on_constants() {
        // B_(1)[1] = (D−2x)[1]·1 / (2x) = −1
        let b = b_lambda(&Partition::of(&[1]), &Poly::one());
        assert_eq!(b, RationalFn::constant(rat(-1)));
    }

    #[test]
    fn b_lambda_maps_family_to_classical_span() {
        // B over (1,1) applied to Wr[H₁,H₂,H₃] lands on a multiple of H₃
        let l = Partition::of(&[1, 1]);
        let y = h_lambda_j(&l, 3).poly;
        let image = b_lambda(&l, &y);
        let img = image.as_poly().expect("image is polynomial");
        assert!(img.divisible_by(&hermite(3)));
        assert_eq!(
            img.exact_div(&hermite(3)).unwrap().degree().finite(),
            Some(0)
        );
    }

    #[test]
    fn intertwining_examples() {
        let tests = hermite_tests(8);
        assert!(verify_intertwining(&Partition::of(&[1, 1]), &tests).ok());
        assert!(verify_intertwining(&Partition::empty(), &tests).ok());
        let l = Partition::of(&[1, 1, 3, 3]);
        let tests: Vec<Poly> = (0..=10u32)
            .filter(|&j| !l.gaps().contains(j))
            .map(|j| hermite(j as usize))
            .collect();
        assert!(verify_intertwining(&l, &tests).ok());
    }

    #[test]
    fn factorization_examples() {
        // ℓ = 0: B_i A_i = T + 2i on {H_0..H_6}
        let tests = hermite_tests(6);
        for i in 0..=3u32 {
            let rep = verify_factorizations(&Partition::empty(), i, &tests).unwrap();
            assert!(rep.ok(), "{:?}", rep.failures);
        }
        // λ=(1), k=3 on {H₀,H₃,H₄}
        let tests3 = vec![hermite(0), hermite(3), hermite(4)];
        let rep = verify_factorizations(&Partition::of(&[1]), 3, &tests3).unwrap();
        assert!(rep.ok(), "{:?}", rep.failures);
        // λ=(1,1), k=0 on constants
        let rep = verify_factorizations(&Partition::of(&[1, 1]), 0, &[Poly::one()]).unwrap();
        assert!(rep.ok(), "{:?}", rep.failures);
        // k in the gaps is rejected
        assert!(verify_factorizations(&Partition::of(&[1]), 1, &tests).is_err());
    }

    #[test]
    fn eigen_examples() {
        let fam = XHermiteFamily::new(Partition::of(&[1])).unwrap();
        let rep = verify_eigen(&fam, 6);
        assert!(rep.ok(), "{:?}", rep.failures);
        // eigenvalue spot checks: j=0 → 4ℓ = 4, j=3 → 4−6 = −2
        let t = t_lambda(fam.doubled());
        let p0 = fam.poly(0).unwrap();
        assert_eq!(t.apply(&p0), RationalFn::from_poly(p0.scale(&rat(4))));
        let p3 = fam.poly(3).unwrap();
        assert_eq!(t.apply(&p3), RationalFn::from_poly(p3.scale(&rat(-2))));
        // ℓ=2 family: eigenvalue 8 at j=0
        let fam2 = XHermiteFamily::new(Partition::of(&[1, 3])).unwrap();
        let q0 = fam2.poly(0).unwrap();
        let t2 = t_lambda(fam2.doubled());
        assert_eq!(t2.apply(&q0), RationalFn::from_poly(q0.scale(&rat(8))));
    }

    #[test]
    fn general_eigenrelation_non_adler() {
        // holds whether or not λ is Adler
        for parts in [vec![1u32], vec![2], vec![1, 2], vec![0, 2]] {
            let l = Partition::new(parts).unwrap();
            let rep = verify_eigen_general(&l, 8);
            assert!(rep.ok(), "{l}: {:?}", rep.failures);
        }
    }

    #[test]
    fn intertwining_restatement() {
        // (T_λ−2ℓ)A_λ[H_j] = −2j H_{λ,j}
        let l = Partition::of(&[1, 3]);
        let ell = l.len() as i64;
        let tl = t_lambda(&l).shifted(rat(-2 * ell));
        for j in [0u32, 2, 5, 7] {
            let lhs = tl.apply(&a_lambda(&l, &hermite(j as usize)));
            let rhs =
                RationalFn::from_poly(h_lambda_j(&l, j as i64).poly.scale(&rat(-2 * j as i64)));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn extended_partition_gaps() {
        let l = Partition::of(&[1]);
        let ext = extended_partition(&l, 3).unwrap();
        assert_eq!(ext.gaps().values(), &[1, 3]);
        assert!(extended_partition(&l, 1).is_err());
    }
}
