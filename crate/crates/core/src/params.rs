//! Solver precision parameters and deterministic seeding.

use alloc::format;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Error;

/// Tuning parameters for the sampling-based solvers.
///
/// `eps` is kept as an exact rational so that vote biases and dominance
/// factors are computed in integer arithmetic. The chunk and sample counts
/// default to the values `1/eps^2` and `1/eps^3` suggest at `eps = 1/2`, but
/// are decoupled so they can be tuned independently of `eps`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Precision {
    /// Numerator of `eps`.
    pub eps_num: u32,
    /// Denominator of `eps`; `0 < eps <= 1/2` is required.
    pub eps_den: u32,
    /// Chunks per trisection range (`K`).
    pub chunks_per_range: usize,
    /// Sampled rows per chunk, drawn with repetition (`S`).
    pub rows_per_chunk: usize,
    /// Random selection draws when the selection space is too large to
    /// enumerate.
    pub selection_trials: usize,
    /// Enumerate all selections when the joint selection space has at most
    /// this many elements.
    pub exhaustive_limit: usize,
    /// Delegate to the exact fixed-count solver when `min(r, r')` is at or
    /// below this.
    pub small_case: usize,
    /// Cap on the enumerated width of non-dominance intervals.
    pub max_interval_width: usize,
    /// Seed for all randomized selection draws.
    pub seed: u64,
}

impl Default for Precision {
    fn default() -> Self {
        Precision {
            eps_num: 1,
            eps_den: 2,
            chunks_per_range: 4,
            rows_per_chunk: 8,
            selection_trials: 200,
            exhaustive_limit: 64,
            small_case: 4,
            max_interval_width: 4,
            seed: 0,
        }
    }
}

impl Precision {
    /// Parameters derived from `eps = num/den`: `K = ceil(1/eps^2)`,
    /// `S = ceil(1/eps^3)`, other fields at their defaults.
    pub fn from_eps(num: u32, den: u32) -> Result<Self, Error> {
        let mut p = Precision {
            eps_num: num,
            eps_den: den,
            ..Precision::default()
        };
        p.check()?;
        let n = num as u64;
        let d = den as u64;
        p.chunks_per_range = ((d * d).div_ceil(n * n)) as usize;
        p.rows_per_chunk = ((d * d * d).div_ceil(n * n * n)) as usize;
        Ok(p)
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn check(&self) -> Result<(), Error> {
        if self.eps_num == 0 || self.eps_den == 0 || 2 * self.eps_num > self.eps_den {
            return Err(Error::BadPrecision(format!(
                "eps = {}/{} outside (0, 1/2]",
                self.eps_num, self.eps_den
            )));
        }
        if self.chunks_per_range == 0 || self.rows_per_chunk == 0 || self.selection_trials == 0 {
            return Err(Error::BadPrecision(
                "chunks, rows per chunk and trials must be >= 1".into(),
            ));
        }
        Ok(())
    }

    /// The weighted-majority bias `(1 - eps)/(eps - eps^2)`, which reduces to
    /// `1/eps`, as an exact (numerator, denominator) pair.
    pub fn bias(&self) -> (i64, i64) {
        (self.eps_den as i64, self.eps_num as i64)
    }

    /// The dominance factor `1/eps^2` as (numerator, denominator).
    pub fn dominance_factor(&self) -> (u64, u64) {
        (
            self.eps_den as u64 * self.eps_den as u64,
            self.eps_num as u64 * self.eps_num as u64,
        )
    }

    /// `floor((1 - eps) * x)`: the upper-range share of `x` reference rows.
    pub fn upper_quota(&self, x: usize) -> usize {
        let n = self.eps_num as u64;
        let d = self.eps_den as u64;
        ((d - n) * x as u64 / d) as usize
    }

    /// `ceil((eps - eps^2) * x)`: the lower-range share of `x` reference rows.
    pub fn lower_quota(&self, x: usize) -> usize {
        let n = self.eps_num as u64;
        let d = self.eps_den as u64;
        (n * (d - n) * x as u64).div_ceil(d * d) as usize
    }
}

/// Deterministic RNG for a named sub-task of a seeded computation.
///
/// Distinct `tag` values give independent streams; the same `(seed, tag)`
/// always yields the same stream, independent of platform.
pub fn stream(seed: u64, tag: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ tag.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_is_half() {
        let p = Precision::default();
        p.check().unwrap();
        assert_eq!(p.bias(), (2, 1));
        assert_eq!(p.dominance_factor(), (4, 1));
    }

    #[test]
    fn derived_counts() {
        let p = Precision::from_eps(1, 3).unwrap();
        assert_eq!(p.chunks_per_range, 9);
        assert_eq!(p.rows_per_chunk, 27);
        assert!(Precision::from_eps(2, 3).is_err());
    }

    #[test]
    fn quotas_match_hand_counts() {
        let p = Precision::default();
        assert_eq!(p.upper_quota(8), 4);
        assert_eq!(p.lower_quota(8), 2);
        assert_eq!(p.upper_quota(4), 2);
        assert_eq!(p.lower_quota(4), 1);
    }

    #[test]
    fn streams_are_stable() {
        use rand::Rng;
        let mut a = stream(7, 1);
        let mut b = stream(7, 1);
        assert_eq!(a.random::<u64>(), b.random::<u64>());
        let mut c = stream(7, 2);
        assert_ne!(stream(7, 1).random::<u64>(), c.random::<u64>());
    }
}
