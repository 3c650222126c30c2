//! The (2ℓ+3)-term recurrence of the Wronskian-Hermite families.
//!
//! For any partition λ of length ℓ the Wronskians `H_{λ,n}` satisfy
//!
//! ```text
//! Σ_{k=0}^{2ℓ+2} B^ℓ_{n,k}(x) · H_{λ,n+k}(x) = 0,       n ≥ −ℓ−1,
//! ```
//!
//! with coefficients depending only on ℓ and n:
//!
//! ```text
//! B^ℓ_{n,k} = Σ_{j=⌈k/2⌉}^{min(k,ℓ+1)} (−1)^k 2^{−j} (n+k+1)_{ℓ+1−j}
//!             C^{ℓ+1}_{2j−k, k−j} H_{2j−k},
//! ```
//!
//! where `C^n_{ij}` is the trinomial coefficient and `(x)_i` the Pochhammer
//! symbol.  The boundary conventions are `H_{λ,n} = 0` for `n < 0` and the
//! tagged zero when `n` hits a gap.  The top coefficient is the constant
//! `2^{−(ℓ+1)}`, so the relation solves forward and regenerates the whole
//! family from the ℓ+1 initial Wronskians — the dual oracle against the
//! determinant route.
//!
//! The recurrence follows from the sharper identity
//!
//! ```text
//! Σ_{j=0}^{ℓ} Σ_{m=0}^{j} A^ℓ_{njm} H_m H_{λ,n+2j−m} = ℓ! · H_{n+ℓ} · H_λ,
//! ```
//!
//! with `A^ℓ_{njm} = (−1)^m 2^{−j} (n+2j−m+1)_{ℓ−j} C^ℓ_{m,j−m}`, which is
//! verified here as well, together with the Wronskian-of-Wronskians and
//! Leibniz identities driving its induction.

use crate::error::Error;
use crate::partition::Partition;
use crate::poly::{rat, Poly, Rat};
use crate::report::VerifyReport;
use crate::wronskians::h_lambda_j;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Trinomial coefficient `C^n_{ij} = n!/(i! j! (n−i−j)!)`, zero whenever
/// any of `i`, `j`, `n−i−j` is negative.
pub fn trinomial(n: i64, i: i64, j: i64) -> BigInt {
    if i < 0 || j < 0 || n - i - j < 0 {
        return BigInt::zero();
    }
    let fact = |m: i64| -> BigInt {
        let mut acc = BigInt::one();
        for v in 2..=m {
            acc *= v;
        }
        acc
    };
    fact(n) / (fact(i) * fact(j) * fact(n - i - j))
}

/// Pochhammer symbol `(x)_i = x(x+1)⋯(x+i−1)`, with `(x)_0 = 1` and zero
/// for negative `i`.
pub fn pochhammer(x: &Rat, i: i64) -> Rat {
    if i < 0 {
        return Rat::zero();
    }
    let mut acc = Rat::one();
    for v in 0..i {
        acc *= x + rat(v);
    }
    acc
}

/// `A^ℓ_{njm} = (−1)^m 2^{−j} (n+2j−m+1)_{ℓ−j} C^ℓ_{m,j−m}`.
pub fn a_coeff(ell: i64, n: i64, j: i64, m: i64) -> Rat {
    let tri = trinomial(ell, m, j - m);
    if tri.is_zero() || ell - j < 0 {
        return Rat::zero();
    }
    let sign = if m % 2 == 0 { 1 } else { -1 };
    let two_pow = Rat::new(BigInt::one(), BigInt::from(2).pow(j as u32));
    let poch = pochhammer(&rat(n + 2 * j - m + 1), ell - j);
    Rat::from(BigInt::from(sign) * tri) * two_pow * poch
}

/// The 2ℓ+3 polynomial coefficients of the recurrence at a given `n`.
#[derive(Clone, Debug)]
pub struct RecCoeffs {
    pub ell: usize,
    pub n: i64,
    /// `b[k] = B^ℓ_{n,k}` for `k = 0..=2ℓ+2`.
    pub b: Vec<Poly>,
}

/// Computes `B^ℓ_{n,k}` for all `k`; requires `n ≥ −ℓ−1`.
pub fn rec_coeffs(ell: usize, n: i64) -> Result<RecCoeffs, Error> {
    let min = -(ell as i64) - 1;
    if n < min {
        return Err(Error::RangeError { n, min });
    }
    let le = ell as i64;
    let mut b = Vec::with_capacity(2 * ell + 3);
    for k in 0..=(2 * le + 2) {
        let mut acc = Poly::zero();
        let j_lo = (k + 1) / 2; // ⌈k/2⌉
        let j_hi = k.min(le + 1);
        for j in j_lo..=j_hi {
            let tri = trinomial(le + 1, 2 * j - k, k - j);
            if tri.is_zero() {
                continue;
            }
            let poch = pochhammer(&rat(n + k + 1), le + 1 - j);
            if poch.is_zero() {
                continue;
            }
            let sign = if k % 2 == 0 { 1 } else { -1 };
            let scale = Rat::from(BigInt::from(sign) * tri)
                * Rat::new(BigInt::one(), BigInt::from(2).pow(j as u32))
                * poch;
            acc = &acc + &crate::wronskians::hermite((2 * j - k) as usize).scale(&scale);
        }
        b.push(acc);
    }
    let coeffs = RecCoeffs { ell, n, b };
    // structural invariants: parity (−1)^k, constant top coefficient 2^{−(ℓ+1)}
    debug_assert!(coeffs.b.iter().enumerate().all(|(k, p)| {
        p.is_zero()
            || p.parity()
                == Some(if k % 2 == 0 {
                    crate::poly::Parity::Even
                } else {
                    crate::poly::Parity::Odd
                })
    }));
    debug_assert_eq!(
        coeffs.b[2 * ell + 2],
        Poly::constant(Rat::new(BigInt::one(), BigInt::from(2).pow(ell as u32 + 1)))
    );
    Ok(coeffs)
}

/// Verifies that the recurrence residual is the exact zero polynomial for
/// every `n ∈ [−ℓ−1, nmax]`.
pub fn verify_recurrence(lambda: &Partition, nmax: i64) -> VerifyReport {
    let mut report = VerifyReport::new(format!("recurrence {lambda}"));
    let ell = lambda.len();
    for n in -(ell as i64) - 1..=nmax {
        let coeffs = rec_coeffs(ell, n).expect("n in range");
        let mut acc = Poly::zero();
        for (k, b) in coeffs.b.iter().enumerate() {
            let h = h_lambda_j(lambda, n + k as i64).poly;
            acc = &acc + &(b * &h);
        }
        report.record(
            format!("recurrence residual at n={n}"),
            acc.is_zero(),
            || acc.to_string(),
        );
    }
    report
}

/// Regenerates `H_{λ,0..=nmax}` by forward-solving the recurrence from the
/// directly computed initial values `H_{λ,0..=ℓ}`.
///
/// The top coefficient is the nonzero constant `2^{−(ℓ+1)}`, so every step
/// is an exact division; gap indices emerge as exact zeros.
pub fn generate_via_recurrence(lambda: &Partition, nmax: usize) -> Vec<Poly> {
    let ell = lambda.len();
    let mut values: Vec<Poly> = (0..=nmax.max(ell))
        .map(|m| {
            if m <= ell {
                h_lambda_j(lambda, m as i64).poly
            } else {
                Poly::zero()
            }
        })
        .collect();

    let top_inv = rat(2i64.pow(ell as u32 + 1));
    for n in -(ell as i64) - 1.. {
        let target = n + 2 * ell as i64 + 2;
        if target as usize > nmax.max(ell) {
            break;
        }
        if target as usize <= ell {
            continue; // already seeded
        }
        let coeffs = rec_coeffs(ell, n).expect("n in range");
        let mut acc = Poly::zero();
        for (k, b) in coeffs.b.iter().enumerate().take(2 * ell + 2) {
            let idx = n + k as i64;
            if idx < 0 {
                continue;
            }
            acc = &acc + &(b * &values[idx as usize]);
        }
        values[target as usize] = (-&acc).scale(&top_inv);
    }
    values.truncate(nmax + 1);
    values
}

/// Verifies the sharper product identity
/// `Σ A^ℓ_{njm} H_m H_{λ,n+2j−m} = ℓ! H_{n+ℓ} H_λ` for `n ∈ [0, nmax]`,
/// plus the Wronskian-of-Wronskians and Leibniz identities on Hermite
/// instances.
pub fn verify_induction_identity(lambda: &Partition, nmax: i64) -> VerifyReport {
    let mut report = VerifyReport::new(format!("induction identity {lambda}"));
    let ell = lambda.len() as i64;
    let h = crate::wronskians::h_lambda(lambda);
    let mut ell_factorial = Rat::one();
    for v in 2..=ell {
        ell_factorial *= rat(v);
    }
    for n in 0..=nmax {
        let mut lhs = Poly::zero();
        for j in 0..=ell {
            for m in 0..=j {
                let a = a_coeff(ell, n, j, m);
                if a.is_zero() {
                    continue;
                }
                let hm = crate::wronskians::hermite(m as usize);
                let hl = h_lambda_j(lambda, n + 2 * j - m).poly;
                lhs = &lhs + &(&hm * &hl).scale(&a);
            }
        }
        let rhs = (&crate::wronskians::hermite((n + ell) as usize) * &h).scale(&ell_factorial);
        let diff = &lhs - &rhs;
        report.record(format!("product identity at n={n}"), diff.is_zero(), || {
            diff.to_string()
        });
    }

    // Wr[Wr[f…,g], Wr[f…,h]] = Wr[f…] · Wr[f…,g,h] on Hermite instances
    let hermite = |n: usize| crate::wronskians::hermite(n);
    let instances: Vec<(Vec<usize>, usize, usize)> = vec![
        (vec![1], 3, 4),
        (vec![1, 2], 3, 5),
        (vec![2], 0, 4),
        (vec![1, 2, 4], 0, 5),
    ];
    for (fs, g, h_idx) in instances {
        let base: Vec<Poly> = fs.iter().map(|&n| hermite(n)).collect();
        let mut with_g = base.clone();
        with_g.push(hermite(g));
        let mut with_h = base.clone();
        with_h.push(hermite(h_idx));
        let mut with_gh = base.clone();
        with_gh.push(hermite(g));
        with_gh.push(hermite(h_idx));
        let lhs = crate::poly::wronskian(&[
            crate::poly::wronskian(&with_g),
            crate::poly::wronskian(&with_h),
        ]);
        let rhs = &crate::poly::wronskian(&base) * &crate::poly::wronskian(&with_gh);
        let diff = &lhs - &rhs;
        report.record(
            format!("Wronskian-of-Wronskians on H{fs:?} g=H{g} h=H{h_idx}"),
            diff.is_zero(),
            || diff.to_string(),
        );
    }

    // Wr[f, gh] = h Wr[f,g] + h′ f g
    for (f, g, h2) in [(1usize, 2usize, 3usize), (2, 4, 1), (3, 0, 5)] {
        let (f, g, h2) = (hermite(f), hermite(g), hermite(h2));
        let lhs = crate::poly::wronskian(&[f.clone(), &g * &h2]);
        let rhs = &(&h2 * &crate::poly::wronskian(&[f.clone(), g.clone()]))
            + &(&h2.derivative() * &(&f * &g));
        let diff = &lhs - &rhs;
        report.record("Leibniz product identity", diff.is_zero(), || {
            diff.to_string()
        });
    }
    report
}
