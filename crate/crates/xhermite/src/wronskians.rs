//! Classical Hermite polynomials and the partition-indexed Wronskian
//! families built from them.
//!
//! With gap sequence `k₁ < … < k_ℓ` of a partition λ, the objects are
//!
//! * `H_λ  = Wr[H_{k₁},…,H_{k_ℓ}]`, degree |λ|, parity (−1)^{|λ|};
//! * `H_{λ,j} = Wr[H_{k₁},…,H_{k_ℓ},H_j]`, degree |λ|+j−ℓ, zero exactly
//!   when `j` hits a gap;
//! * the deleted Wronskians `Ĥ_{λ,i}` with the i-th entry removed;
//! * the X_λ-Hermite family `H^{(λ)}_j = H_{λ²,j}` over the doubled
//!   partition, whose weight `e^{−x²}/H_{λ²}²` is regular on ℝ.

use crate::error::Error;
use crate::partition::Partition;
use crate::poly::{self, rat, Poly};
use std::sync::Mutex;

/// Memoized physicists' Hermite polynomials `H_0, H_1, …`.
///
/// `H_0 = 1`, `H_1 = 2x`, `H_{n+1} = 2x·H_n − 2n·H_{n−1}`; extension is
/// internally synchronized, so a shared cache can serve concurrent tasks.
pub struct HermiteCache {
    polys: Mutex<Vec<Poly>>,
}

impl HermiteCache {
    pub fn new() -> Self {
        HermiteCache {
            polys: Mutex::new(vec![Poly::one(), Poly::from_integers(&[0, 2])]),
        }
    }

    /// `H_n`, extending the cache on demand.
    pub fn get(&self, n: usize) -> Poly {
        let mut polys = self.polys.lock().unwrap();
        let two_x = Poly::from_integers(&[0, 2]);
        while polys.len() <= n {
            let m = polys.len() - 1; // next index is m+1
            let next = &(&two_x * &polys[m]) - &polys[m - 1].scale(&rat(2 * m as i64));
            polys.push(next);
        }
        polys[n].clone()
    }
}

impl Default for HermiteCache {
    fn default() -> Self {
        HermiteCache::new()
    }
}

static CACHE: std::sync::LazyLock<HermiteCache> = std::sync::LazyLock::new(HermiteCache::new);

/// The physicists' Hermite polynomial `H_n` from the shared cache.
pub fn hermite(n: usize) -> Poly {
    CACHE.get(n)
}

/// `H_λ`: the Wronskian of the Hermite polynomials with the gap sequence of
/// λ as indices.  The empty partition gives 1.
pub fn h_lambda(lambda: &Partition) -> Poly {
    let fs: Vec<Poly> = lambda
        .gaps()
        .values()
        .iter()
        .map(|&k| hermite(k as usize))
        .collect();
    poly::wronskian(&fs)
}

/// How an `H_{λ,j}` value came about.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IndexStatus {
    /// `j ∉ gaps`, the Wronskian is a genuine degree-(|λ|+j−ℓ) polynomial.
    Proper,
    /// `j` lies in the gap sequence: a repeated column, so the exact zero
    /// polynomial (flagged rather than raised, callers iterate uniformly).
    DependentIndex,
    /// `j < 0`, zero by the boundary convention of the recurrence.
    NegativeIndex,
}

/// `H_{λ,j}` together with its [`IndexStatus`].
#[derive(Clone, Debug)]
pub struct IndexedWronskian {
    pub poly: Poly,
    pub status: IndexStatus,
}

/// `H_{λ,j} = Wr[H_{k₁},…,H_{k_ℓ},H_j]`, with the tagged-zero conventions
/// for `j` in the gaps and for `j < 0`.
pub fn h_lambda_j(lambda: &Partition, j: i64) -> IndexedWronskian {
    if j < 0 {
        return IndexedWronskian {
            poly: Poly::zero(),
            status: IndexStatus::NegativeIndex,
        };
    }
    let gaps = lambda.gaps();
    if gaps.contains(j as u32) {
        return IndexedWronskian {
            poly: Poly::zero(),
            status: IndexStatus::DependentIndex,
        };
    }
    let mut fs: Vec<Poly> = gaps.values().iter().map(|&k| hermite(k as usize)).collect();
    fs.push(hermite(j as usize));
    IndexedWronskian {
        poly: poly::wronskian(&fs),
        status: IndexStatus::Proper,
    }
}

/// `Ĥ_{λ,i}`: the gap-sequence Wronskian with the i-th entry deleted
/// (1-indexed).
pub fn h_hat(lambda: &Partition, i: usize) -> Result<Poly, Error> {
    let ell = lambda.len();
    if i == 0 || i > ell {
        return Err(Error::IndexOutOfRange { i, ell });
    }
    let fs: Vec<Poly> = lambda
        .gaps()
        .values()
        .iter()
        .enumerate()
        .filter(|&(idx, _)| idx + 1 != i)
        .map(|(_, &k)| hermite(k as usize))
        .collect();
    Ok(poly::wronskian(&fs))
}

/// An X_λ-Hermite family: the Wronskian system over the doubled partition
/// λ², which is the orthogonal-polynomial case.
#[derive(Clone, Debug)]
pub struct XHermiteFamily {
    base: Partition,
    doubled: Partition,
    excluded: Vec<u32>,
    denominator: Poly,
}

impl XHermiteFamily {
    /// Builds the family for a reduced base partition (`λ₁ > 0` or empty).
    ///
    /// The excluded degrees are the gap sequence of λ², which always comes
    /// in consecutive pairs; `H_{λ²}` is checked to be free of real zeros.
    pub fn new(base: Partition) -> Result<Self, Error> {
        if !base.is_reduced() {
            return Err(Error::NotReduced { partition: base });
        }
        let doubled = base.double();
        let excluded = doubled.gaps().values().to_vec();
        debug_assert!(excluded
            .chunks(2)
            .all(|pair| pair.len() == 2 && pair[1] == pair[0] + 1));
        let denominator = h_lambda(&doubled);
        assert_eq!(
            poly::sturm_real_root_count(&denominator),
            0,
            "H over a doubled partition must have no real zeros"
        );
        Ok(XHermiteFamily {
            base,
            doubled,
            excluded,
            denominator,
        })
    }

    pub fn base(&self) -> &Partition {
        &self.base
    }

    pub fn doubled(&self) -> &Partition {
        &self.doubled
    }

    /// Excluded degrees `{k₁, k₁+1, …, k_ℓ, k_ℓ+1}`.
    pub fn excluded(&self) -> &[u32] {
        &self.excluded
    }

    /// `H_{λ²}`, the square root of the weight's polynomial part.
    pub fn denominator(&self) -> &Poly {
        &self.denominator
    }

    pub fn admissible(&self, j: u32) -> bool {
        !self.excluded.contains(&j)
    }

    /// Admissible indices up to and including `jmax`.
    pub fn admissible_up_to(&self, jmax: u32) -> Vec<u32> {
        (0..=jmax).filter(|&j| self.admissible(j)).collect()
    }

    /// The X_λ-Hermite polynomial `H^{(λ)}_j = H_{λ²,j}`.
    ///
    /// Degree `2|λ| − 2ℓ + j` and parity `(−1)^j`; excluded `j` is an error
    /// naming the offending gap pair.
    pub fn poly(&self, j: u32) -> Result<Poly, Error> {
        if let Some(pos) = self.excluded.iter().position(|&k| k == j) {
            let pair = pos - pos % 2;
            return Err(Error::ExcludedDegree {
                j,
                k: self.excluded[pair],
                k_plus: self.excluded[pair + 1],
            });
        }
        Ok(h_lambda_j(&self.doubled, j as i64).poly)
    }

    /// `2|λ| − 2ℓ + j`, the degree of `poly(j)`.
    pub fn degree_of(&self, j: u32) -> usize {
        2 * self.base.weight() as usize - 2 * self.base.len() + j as usize
    }
}

/// The set of degrees realized by `H_{λ,j}` for `j ≤ horizon`, `j ∉ gaps`.
///
/// Degrees are read off the computed Wronskians, not from the degree
/// formula.  Below the stabilization degree `|λ| + λ_ℓ` exactly |λ| values
/// are missing.
pub fn degree_sequence(lambda: &Partition, horizon: u32) -> Vec<usize> {
    let mut degs: Vec<usize> = (0..=horizon)
        .filter_map(|j| {
            let w = h_lambda_j(lambda, j as i64);
            w.poly.degree().finite()
        })
        .collect();
    degs.sort_unstable();
    degs.dedup();
    degs
}

/// Missing degrees of the family below its stabilization degree.
pub fn missing_degrees(lambda: &Partition) -> Vec<usize> {
    let top_gap = lambda.gaps().values().last().copied().unwrap_or(0);
    let stabilization = (lambda.weight() + lambda.parts().last().copied().unwrap_or(0)) as usize;
    let present = degree_sequence(lambda, top_gap + 2);
    (0..stabilization)
        .filter(|d| !present.contains(d))
        .collect()
}
