//! Constant-time discrete sampling with an alias table (Vose's construction).
//!
//! Request streams draw from catalogs of up to 1e7 items, billions of times
//! per run, so per-draw cost has to be O(1) and cache-friendly: acceptance
//! threshold and alias index live in one entry.

use rand::Rng;

use crate::real::{CompensatedSum, Real};

#[derive(Clone, Debug)]
struct Entry<R> {
    accept: R,
    alias: u32,
}

/// Preprocessed alias table for O(1) draws from a finite discrete
/// distribution. Immutable after construction and safe to share.
#[derive(Clone, Debug)]
pub struct AliasTable<R: Real> {
    entries: Vec<Entry<R>>,
}

impl<R: Real> AliasTable<R> {
    /// Build from non-negative weights (not necessarily normalized). O(n).
    ///
    /// Panics on empty input, non-finite or negative weights, or zero total.
    pub fn new(weights: &[R]) -> Self {
        assert!(!weights.is_empty(), "alias table needs at least one weight");
        assert!(
            weights.len() <= u32::MAX as usize,
            "alias table is limited to u32 indices"
        );
        let mut total = CompensatedSum::new();
        for &w in weights {
            assert!(
                w.is_finite() && w >= R::zero(),
                "weights must be finite and non-negative"
            );
            total.add(w);
        }
        let total = total.value();
        assert!(total > R::zero(), "total weight must be positive");

        let n = weights.len();
        let scale = R::from_usize_lossy(n) / total;
        let mut entries: Vec<Entry<R>> = weights
            .iter()
            .enumerate()
            .map(|(i, &w)| Entry {
                accept: w * scale,
                alias: i as u32,
            })
            .collect();

        let one = R::one();
        let mut small: Vec<u32> = Vec::new();
        let mut large: Vec<u32> = Vec::new();
        for (i, e) in entries.iter().enumerate() {
            if e.accept < one {
                small.push(i as u32);
            } else {
                large.push(i as u32);
            }
        }
        while let (Some(s), Some(l)) = (small.last().copied(), large.last().copied()) {
            small.pop();
            entries[s as usize].alias = l;
            let residual = (entries[l as usize].accept + entries[s as usize].accept) - one;
            entries[l as usize].accept = residual;
            if residual < one {
                large.pop();
                small.push(l);
            }
        }
        // Whatever remains on either stack is a rounding leftover of a
        // full bucket.
        for i in small.into_iter().chain(large) {
            entries[i as usize].accept = one;
        }
        Self { entries }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Draw a bucket index. Consumes exactly two 64-bit words from the
    /// stream, so draw counts are reproducible across table contents.
    #[inline]
    pub fn sample<G: Rng + ?Sized>(&self, rng: &mut G) -> usize {
        let n = self.entries.len() as u128;
        let idx = ((rng.next_u64() as u128 * n) >> 64) as usize;
        let frac = (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
        let entry = &self.entries[idx];
        if R::from_f64_lossy(frac) < entry.accept {
            idx
        } else {
            entry.alias as usize
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn single_bucket_always_zero() {
        let table = AliasTable::new(&[3.5f64]);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..100 {
            assert_eq!(table.sample(&mut rng), 0);
        }
    }

    #[test]
    fn two_bucket_frequencies_within_three_sigma() {
        let table = AliasTable::new(&[2.0f64, 1.0]);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let n = 1_000_000u64;
        let mut hits = 0u64;
        for _ in 0..n {
            if table.sample(&mut rng) == 0 {
                hits += 1;
            }
        }
        let p = 2.0 / 3.0;
        let sigma = (p * (1.0 - p) / n as f64).sqrt();
        let freq = hits as f64 / n as f64;
        assert!(
            (freq - p).abs() < 3.0 * sigma,
            "freq {freq} vs p {p} (3 sigma = {})",
            3.0 * sigma
        );
    }

    #[test]
    fn zero_weight_bucket_never_drawn() {
        let table = AliasTable::new(&[0.5f64, 0.0, 0.5]);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..10_000 {
            assert_ne!(table.sample(&mut rng), 1);
        }
    }

    #[test]
    fn deterministic_for_fixed_seed() {
        let table = AliasTable::new(&[0.1f64, 0.2, 0.3, 0.4]);
        let draws = |seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..64).map(|_| table.sample(&mut rng)).collect::<Vec<_>>()
        };
        assert_eq!(draws(11), draws(11));
        assert_ne!(draws(11), draws(12));
    }

    #[test]
    #[should_panic(expected = "positive")]
    fn rejects_all_zero_weights() {
        let _ = AliasTable::new(&[0.0f64, 0.0]);
    }
}
