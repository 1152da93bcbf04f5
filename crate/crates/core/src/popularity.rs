//! Item popularity catalogs for IRM request streams.
//!
//! A catalog is a normalized, non-increasing probability vector over items
//! `0..M`, plus a preprocessed constant-time sampler. The usual way to build
//! one is [`PopularityModel::zipf`]; explicit catalogs exist for oracle
//! comparisons and tiny hand-built instances.

use rand::Rng;

use crate::error::{Error, Result};
use crate::real::{CompensatedSum, Real};
use crate::sampler::AliasTable;

/// Immutable item popularity catalog. Items are 0-based; probabilities are
/// non-increasing, so item 0 is the most popular.
#[derive(Clone, Debug)]
pub struct PopularityModel<R: Real> {
    /// Zipf exponent, present when built by [`PopularityModel::zipf`].
    alpha: Option<R>,
    /// Zipf normalizing constant c = 1 / sum(i^-alpha), when applicable.
    normalizer: Option<R>,
    probabilities: Vec<R>,
    sampler: AliasTable<R>,
}

impl<R: Real> PopularityModel<R> {
    /// Truncated Zipf catalog: q_i proportional to (i+1)^-alpha for 0-based i.
    pub fn zipf(alpha: R, catalog_size: usize) -> Result<Self> {
        if !alpha.is_finite() || alpha <= R::zero() {
            return Err(Error::parameter(
                "alpha",
                format!("must be finite and positive, got {alpha}"),
            ));
        }
        if catalog_size == 0 {
            return Err(Error::parameter("catalog_size", "must be at least 1"));
        }
        let mut weights = Vec::with_capacity(catalog_size);
        let mut total = CompensatedSum::new();
        for rank in 1..=catalog_size {
            let w = R::from_usize_lossy(rank).powf(-alpha);
            weights.push(w);
            total.add(w);
        }
        let normalizer = total.value().recip();
        let probabilities: Vec<R> = weights.into_iter().map(|w| w * normalizer).collect();
        let sampler = AliasTable::new(&probabilities);
        Ok(Self {
            alpha: Some(alpha),
            normalizer: Some(normalizer),
            probabilities,
            sampler,
        })
    }

    /// Explicit catalog from a non-increasing weight vector; weights are
    /// normalized to sum to one.
    pub fn from_probabilities(weights: &[R]) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::parameter("probabilities", "must be non-empty"));
        }
        let mut total = CompensatedSum::new();
        for (i, &w) in weights.iter().enumerate() {
            if !w.is_finite() || w < R::zero() {
                return Err(Error::parameter(
                    "probabilities",
                    format!("entry {i} must be finite and non-negative, got {w}"),
                ));
            }
            if i > 0 && w > weights[i - 1] {
                return Err(Error::parameter(
                    "probabilities",
                    format!("must be non-increasing, entry {i} exceeds entry {}", i - 1),
                ));
            }
            total.add(w);
        }
        let total = total.value();
        if total <= R::zero() {
            return Err(Error::parameter("probabilities", "total weight must be positive"));
        }
        let probabilities: Vec<R> = weights.iter().map(|&w| w / total).collect();
        let sampler = AliasTable::new(&probabilities);
        Ok(Self {
            alpha: None,
            normalizer: None,
            probabilities,
            sampler,
        })
    }

    /// Number of items M.
    #[inline]
    pub fn len(&self) -> usize {
        self.probabilities.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Zipf exponent, when the catalog was built as a Zipf model.
    pub fn alpha(&self) -> Option<R> {
        self.alpha
    }

    /// Zipf normalizing constant c, when applicable.
    pub fn normalizer(&self) -> Option<R> {
        self.normalizer
    }

    #[inline]
    pub fn probabilities(&self) -> &[R] {
        &self.probabilities
    }

    #[inline]
    pub fn probability(&self, item: usize) -> R {
        self.probabilities[item]
    }

    /// Draw one item index with probability q_i. Constant time; consumes
    /// exactly two 64-bit words from `rng`.
    #[inline]
    pub fn sample<G: Rng + ?Sized>(&self, rng: &mut G) -> usize {
        self.sampler.sample(rng)
    }

    /// Mass of the tail starting at 0-based index `start`:
    /// sum of q_i for i >= start. `tail_mass(0) = 1`, `tail_mass(M) = 0`.
    pub fn tail_mass(&self, start: usize) -> Result<R> {
        if start > self.len() {
            return Err(Error::parameter(
                "start",
                format!("must be at most the catalog size {}, got {start}", self.len()),
            ));
        }
        let mut acc = CompensatedSum::new();
        for &q in &self.probabilities[start..] {
            acc.add(q);
        }
        Ok(acc.value())
    }
}
