//! Partitions and gap sequences.
//!
//! A partition here is a weakly increasing tuple of non-negative integers
//! `λ₁ ≤ λ₂ ≤ … ≤ λ_ℓ`; contrary to the usual convention a string of initial
//! zeros is allowed.  Every partition determines a strictly increasing *gap
//! sequence* `k_i = λ_i + i − 1`, the levels deleted from the harmonic
//! oscillator spectrum, and conversely.
//!
//! The doubled partition `λ² = (λ₁,λ₁,…,λ_ℓ,λ_ℓ)` indexes the families that
//! stay regular on the whole real line (Krein–Adler), and the characteristic
//! polynomial `p_λ(x) = Π(x − k_i)` carries both the regularity criterion
//! (`p_λ(n) ≥ 0` on ℕ) and the square norms.

use crate::error::Error;
use crate::poly::{Poly, Rat};
use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Weakly increasing tuple of non-negative integers, initial zeros permitted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u32>,
}

/// Strictly increasing tuple of non-negative integers `k₁ < k₂ < … < k_ℓ`.
///
/// Round-trips with [`Partition`] via `k_i = λ_i + i − 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GapSequence {
    ks: Vec<u32>,
}

impl Partition {
    /// Builds a partition, rejecting tuples that are not weakly increasing.
    pub fn new(parts: Vec<u32>) -> Result<Self, Error> {
        if parts.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::NotWeaklyIncreasing { parts });
        }
        Ok(Partition { parts })
    }

    /// The empty partition: the classical, untransformed case.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Convenience constructor for literals; panics on invalid input.
    pub fn of(parts: &[u32]) -> Self {
        Partition::new(parts.to_vec()).expect("partition literal must be weakly increasing")
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Length ℓ of the tuple.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Weight |λ| = Σ λ_i.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// The gap sequence `k_i = λ_i + i − 1`.
    pub fn gaps(&self) -> GapSequence {
        let ks = self
            .parts
            .iter()
            .enumerate()
            .map(|(i, &p)| p + i as u32)
            .collect();
        GapSequence { ks }
    }

    /// The double partition `(λ₁,λ₁,…,λ_ℓ,λ_ℓ)` of length 2ℓ.
    pub fn double(&self) -> Partition {
        let mut parts = Vec::with_capacity(2 * self.parts.len());
        for &p in &self.parts {
            parts.push(p);
            parts.push(p);
        }
        Partition { parts }
    }

    /// True iff λ starts with a positive part (or is empty).
    pub fn is_reduced(&self) -> bool {
        self.parts.first().is_none_or(|&p| p > 0)
    }

    /// Whether the associated Hermite Wronskian is free of real zeros.
    ///
    /// Two equivalent characterizations are evaluated and asserted equal:
    /// the gap sequence decomposes as an optional initial block `{0,…,b}`
    /// followed by maximal blocks of even length, and the sign test
    /// `p_λ(n) ≥ 0` for every natural number `n` (checked for
    /// `n ≤ k_ℓ + 1`, beyond which every factor of `p_λ` is positive).
    pub fn is_adler(&self) -> bool {
        let structural = self.is_adler_structural();
        let by_sign = self.is_adler_by_sign();
        assert_eq!(
            structural, by_sign,
            "Adler characterizations disagree on {self}"
        );
        structural
    }

    fn is_adler_structural(&self) -> bool {
        let ks = self.gaps().ks;
        let mut runs: Vec<(u32, usize)> = Vec::new(); // (first gap, run length)
        for &k in &ks {
            match runs.last_mut() {
                Some((start, len)) if *start + *len as u32 == k => *len += 1,
                _ => runs.push((k, 1)),
            }
        }
        runs.iter()
            .enumerate()
            .all(|(i, &(start, len))| (i == 0 && start == 0) || len % 2 == 0)
    }

    fn is_adler_by_sign(&self) -> bool {
        let p = self.char_poly();
        let top = self.gaps().ks.last().copied().unwrap_or(0);
        (0..=top + 1).all(|n| !p.eval(&Rat::from(BigInt::from(n))).is_negative())
    }

    /// Strips the leading zero parts: the initial block of consecutive gaps
    /// starting at 0, which only shifts the spectrum.  Errors unless the
    /// partition is Adler.
    pub fn reduced(&self) -> Result<Partition, Error> {
        if !self.is_adler() {
            return Err(Error::NotAdler {
                partition: self.clone(),
            });
        }
        let parts: Vec<u32> = self.parts.iter().copied().filter(|&p| p > 0).collect();
        Ok(Partition { parts })
    }

    /// The monic polynomial `p_λ(x) = (x−k₁)(x−k₂)⋯(x−k_ℓ)` with the gap
    /// sequence as its roots.
    pub fn char_poly(&self) -> Poly {
        let mut p = Poly::one();
        for &k in &self.gaps().ks {
            let factor = Poly::from_coeffs(vec![-Rat::from(BigInt::from(k)), Rat::one()]);
            p = &p * &factor;
        }
        p
    }

    /// The same partition with `zeros` additional leading zero parts.
    pub fn padded(&self, zeros: usize) -> Partition {
        let mut parts = vec![0u32; zeros];
        parts.extend_from_slice(&self.parts);
        Partition { parts }
    }

    /// Parses a comma-separated list such as `1,1,3,3`; the empty string is
    /// the empty partition.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for piece in s.split(',') {
            let p: u32 = piece
                .trim()
                .parse()
                .map_err(|_| Error::PartitionParse { input: s.into() })?;
            parts.push(p);
        }
        Partition::new(parts)
    }
}

impl GapSequence {
    /// Builds a gap sequence, rejecting tuples that are not strictly
    /// increasing.
    pub fn new(ks: Vec<u32>) -> Result<Self, Error> {
        if ks.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NotStrictlyIncreasing { ks });
        }
        Ok(GapSequence { ks })
    }

    pub fn values(&self) -> &[u32] {
        &self.ks
    }

    pub fn len(&self) -> usize {
        self.ks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ks.is_empty()
    }

    pub fn contains(&self, k: u32) -> bool {
        self.ks.binary_search(&k).is_ok()
    }

    /// The inverse of [`Partition::gaps`]: `λ_i = k_i − i + 1`.
    pub fn to_partition(&self) -> Partition {
        let parts: Vec<u32> = self
            .ks
            .iter()
            .enumerate()
            .map(|(i, &k)| {
                // strict increase from k₁ ≥ 0 forces k_i ≥ i − 1
                debug_assert!(k >= i as u32);
                k - i as u32
            })
            .collect();
        debug_assert!(parts.windows(2).all(|w| w[0] <= w[1]));
        Partition { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All reduced partitions (λ₁ ≥ 1, plus the empty partition) of weight ≤ `w`,
/// in a deterministic order.
pub fn reduced_partitions_up_to(w: u32) -> Vec<Partition> {
    let mut out = vec![Partition::empty()];
    let mut stack: Vec<Vec<u32>> = vec![Vec::new()];
    // depth-first over weakly increasing tuples with parts ≥ 1
    while let Some(prefix) = stack.pop() {
        let used: u32 = prefix.iter().sum();
        let min = prefix.last().copied().unwrap_or(1);
        for next in min..=w.saturating_sub(used) {
            let mut tuple = prefix.clone();
            tuple.push(next);
            out.push(Partition {
                parts: tuple.clone(),
            });
            stack.push(tuple);
        }
    }
    out.sort();
    out
}

/// The sweep enumeration used by the exhaustive verifications: every reduced
/// partition of weight ≤ `w`, each with 0, 1 and 2 leading zeros.
pub fn sweep_partitions(w: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    for p in reduced_partitions_up_to(w) {
        for zeros in 0..=2 {
            out.push(p.padded(zeros));
        }
    }
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn gap_sequence_examples() {
        assert_eq!(Partition::of(&[1, 3]).gaps().values(), &[1, 4]);
        assert_eq!(
            Partition::of(&[0, 0, 0, 1, 1, 2, 2]).gaps().values(),
            &[0, 1, 2, 4, 5, 7, 8]
        );
        assert_eq!(Partition::empty().gaps().values(), &[] as &[u32]);
    }

    #[test]
    fn gaps_round_trip() {
        assert_eq!(
            GapSequence::new(vec![1, 2]).unwrap().to_partition(),
            Partition::of(&[1, 1])
        );
        assert_eq!(
            GapSequence::new(vec![1, 2, 5, 6]).unwrap().to_partition(),
            Partition::of(&[1, 1, 3, 3])
        );
        assert_eq!(
            GapSequence::new(vec![0, 1, 2, 4, 5, 7, 8])
                .unwrap()
                .to_partition(),
            Partition::of(&[0, 0, 0, 1, 1, 2, 2])
        );
    }

    #[test]
    fn round_trip_exhaustive() {
        // every weakly increasing tuple with length ≤ 8 and parts ≤ 8
        let mut stack: Vec<Vec<u32>> = vec![Vec::new()];
        let mut count = 0usize;
        while let Some(prefix) = stack.pop() {
            let p = Partition::new(prefix.clone()).unwrap();
            assert_eq!(p.gaps().to_partition(), p);
            count += 1;
            if prefix.len() < 8 {
                let lo = prefix.last().copied().unwrap_or(0);
                for v in lo..=8 {
                    let mut next = prefix.clone();
                    next.push(v);
                    stack.push(next);
                }
            }
        }
        assert_eq!(count, 24310); // C(17, 8) multisets, plus the empty one
    }

    #[test]
    fn double_examples() {
        assert_eq!(
            Partition::of(&[1, 3]).double(),
            Partition::of(&[1, 1, 3, 3])
        );
        assert_eq!(Partition::of(&[1]).double(), Partition::of(&[1, 1]));
        assert_eq!(Partition::empty().double(), Partition::empty());
    }

    #[test]
    fn adler_examples() {
        assert!(Partition::of(&[1, 1, 3, 3]).is_adler());
        assert!(!Partition::of(&[1]).is_adler());
        // gaps (0,1,3,4): initial block {0,1} plus the even block {3,4}
        assert!(Partition::of(&[0, 0, 1, 1]).is_adler());
        assert!(Partition::of(&[0]).is_adler());
        assert!(Partition::of(&[0, 1, 1]).is_adler());
        assert!(!Partition::of(&[2]).is_adler());
        assert!(!Partition::of(&[0, 0, 1, 2, 2]).is_adler());
        assert!(Partition::empty().is_adler());
    }

    #[test]
    fn doubles_are_adler() {
        for p in reduced_partitions_up_to(6) {
            assert!(p.double().is_adler(), "double of {p} must be Adler");
            for zeros in 1..=2 {
                assert!(p.double().padded(zeros).is_adler());
            }
        }
    }

    #[test]
    fn adler_characterizations_agree_up_to_weight_ten() {
        // is_adler itself asserts agreement of both implementations
        for p in sweep_partitions(10) {
            let _ = p.is_adler();
        }
    }

    #[test]
    fn reduced_examples() {
        assert_eq!(
            Partition::of(&[0, 0, 1, 1]).reduced().unwrap(),
            Partition::of(&[1, 1])
        );
        assert_eq!(
            Partition::of(&[1, 1, 3, 3]).reduced().unwrap(),
            Partition::of(&[1, 1, 3, 3])
        );
        assert_eq!(Partition::empty().reduced().unwrap(), Partition::empty());
        assert_eq!(Partition::of(&[0]).reduced().unwrap(), Partition::empty());
        assert!(Partition::of(&[1]).reduced().is_err());
    }

    #[test]
    fn char_poly_examples() {
        // gaps (1,2): (x−1)(x−2) = x² − 3x + 2
        assert_eq!(
            Partition::of(&[1, 1]).char_poly(),
            Poly::from_integers(&[2, -3, 1])
        );
        assert_eq!(Partition::empty().char_poly(), Poly::one());
        // gaps (1,2,5,6)
        let p = Partition::of(&[1, 1, 3, 3]).char_poly();
        let expected = &(&Poly::from_integers(&[-1, 1]) * &Poly::from_integers(&[-2, 1]))
            * &(&Poly::from_integers(&[-5, 1]) * &Poly::from_integers(&[-6, 1]));
        assert_eq!(p, expected);
    }

    #[test]
    fn char_poly_vanishes_exactly_on_gaps() {
        for p in sweep_partitions(6) {
            let cp = p.char_poly();
            let top = p.gaps().values().last().copied().unwrap_or(0);
            for n in 0..=top + 2 {
                let v = cp.eval(&Rat::from(BigInt::from(n)));
                assert_eq!(v.is_zero(), p.gaps().contains(n), "{p} at {n}");
            }
        }
    }

    #[test]
    fn rejects_decreasing_parts() {
        assert!(Partition::new(vec![2, 1]).is_err());
        assert!(Partition::parse("2,1").is_err());
        assert!(GapSequence::new(vec![1, 1]).is_err());
    }

    #[test]
    fn parse_round_trip() {
        let p = Partition::parse("1,1,3,3").unwrap();
        assert_eq!(p, Partition::of(&[1, 1, 3, 3]));
        assert_eq!(Partition::parse("").unwrap(), Partition::empty());
    }
}
