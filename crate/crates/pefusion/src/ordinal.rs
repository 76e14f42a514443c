//! Bandt–Pompe ordinal patterns and permutation entropy for 1D sequences.
//!
//! A window of `d` samples taken every `tau` steps is reduced to the
//! permutation that sorts it ascending (ties broken by order of appearance).
//! The Shannon entropy of the pattern distribution over all windows is the
//! permutation entropy; dividing by `log2(d!)` normalizes it into `[0, 1]`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Embedding parameters shared by every permutation-entropy computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrdinalConfig {
    /// Embedding dimension: number of points per pattern, `2 ..= 10`.
    pub d: usize,
    /// Time delay: step between pattern points, `>= 1`.
    pub tau: usize,
}

impl OrdinalConfig {
    pub fn new(d: usize, tau: usize) -> Result<Self> {
        let cfg = Self { d, tau };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.d < 2 {
            return Err(Error::InvalidConfig(format!(
                "embedding dimension d={} must be >= 2",
                self.d
            )));
        }
        if self.d > 10 {
            return Err(Error::InvalidConfig(format!(
                "embedding dimension d={} exceeds 10; d! would overflow the pattern index space",
                self.d
            )));
        }
        if self.tau < 1 {
            return Err(Error::InvalidConfig("delay tau must be >= 1".into()));
        }
        Ok(())
    }

    /// Shortest series that yields at least one window: `(d-1)*tau + 1`.
    pub fn min_series_len(&self) -> usize {
        (self.d - 1) * self.tau + 1
    }

    /// `d!`, the number of distinct ordinal patterns.
    pub fn pattern_count(&self) -> u32 {
        (2..=self.d as u32).product::<u32>().max(1)
    }
}

impl Default for OrdinalConfig {
    fn default() -> Self {
        Self { d: 3, tau: 1 }
    }
}

/// Counts of each ordinal pattern over all windows of one series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternDistribution {
    /// Pattern index (lexicographic rank in `S_d`) to window count.
    pub counts: BTreeMap<u32, u64>,
    /// Number of windows: `N - (d-1)*tau`.
    pub total_windows: u64,
}

/// Raw and normalized permutation entropy of one distribution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntropyValue {
    /// Shannon entropy in base 2, in `[0, log2(d!)]`.
    pub raw_bits: f64,
    /// `raw / log2(d!)`, dimensionless in `[0, 1]`; independent of log base.
    pub normalized: f64,
}

/// Indices that sort `window` ascending, ties broken by position (stable).
fn stable_argsort(window: &[f64]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..window.len()).collect();
    idx.sort_by(|&i, &j| match window[i].partial_cmp(&window[j]) {
        Some(std::cmp::Ordering::Less) => std::cmp::Ordering::Less,
        Some(std::cmp::Ordering::Greater) => std::cmp::Ordering::Greater,
        Some(std::cmp::Ordering::Equal) | None => i.cmp(&j),
    });
    idx
}

/// Lexicographic rank of a permutation of `0..d` (Lehmer code).
fn lexicographic_rank(perm: &[usize]) -> u32 {
    let d = perm.len();
    let mut factorial = 1u32;
    let mut rank = 0u32;
    // Walk from the last position; factorial weights grow as we move left.
    for i in (0..d).rev() {
        let smaller_after = perm[i + 1..].iter().filter(|&&p| p < perm[i]).count() as u32;
        rank += smaller_after * factorial;
        factorial *= (d - i) as u32;
    }
    rank
}

/// Ordinal pattern of a single window: the lexicographic rank of the
/// permutation that sorts it ascending (stable in case of ties).
pub fn ordinal_pattern(window: &[f64], config: &OrdinalConfig) -> Result<u32> {
    config.validate()?;
    if window.len() != config.d {
        return Err(Error::DimensionMismatch {
            expected: config.d,
            actual: window.len(),
        });
    }
    Ok(lexicographic_rank(&stable_argsort(window)))
}

/// Pattern counts over all `N - (d-1)*tau` windows of `series`.
pub fn pattern_distribution(series: &[f64], config: &OrdinalConfig) -> Result<PatternDistribution> {
    config.validate()?;
    let required = config.min_series_len();
    if series.len() < required {
        return Err(Error::InsufficientLength {
            required,
            actual: series.len(),
            d: config.d,
            tau: config.tau,
        });
    }
    let total_windows = series.len() - (config.d - 1) * config.tau;
    let mut counts: BTreeMap<u32, u64> = BTreeMap::new();
    let mut window = vec![0.0; config.d];
    for t in 0..total_windows {
        for (k, slot) in window.iter_mut().enumerate() {
            *slot = series[t + k * config.tau];
        }
        let rank = lexicographic_rank(&stable_argsort(&window));
        *counts.entry(rank).or_insert(0) += 1;
    }
    Ok(PatternDistribution {
        counts,
        total_windows: total_windows as u64,
    })
}

impl PatternDistribution {
    /// Entropy of the distribution; zero-count patterns contribute nothing.
    ///
    /// Computed as `log2(T) - (sum c*log2 c)/T`, which is exactly 0 when a
    /// single pattern holds all the mass.
    pub fn entropy(&self, config: &OrdinalConfig) -> EntropyValue {
        let t = self.total_windows as f64;
        let sum_c_log_c: f64 = self
            .counts
            .values()
            .map(|&c| (c as f64) * (c as f64).log2())
            .sum();
        let raw_bits = if self.counts.len() <= 1 {
            0.0
        } else {
            (t.log2() - sum_c_log_c / t).max(0.0)
        };
        let max_bits = (config.pattern_count() as f64).log2();
        let normalized = (raw_bits / max_bits).clamp(0.0, 1.0);
        EntropyValue {
            raw_bits,
            normalized,
        }
    }
}

/// Permutation entropy of `series`: raw Shannon entropy in bits plus the
/// normalized value `raw / log2(d!)`.
pub fn permutation_entropy(series: &[f64], config: &OrdinalConfig) -> Result<EntropyValue> {
    Ok(pattern_distribution(series, config)?.entropy(config))
}

/// Normalized permutation entropy in `[0, 1]`.
pub fn normalized_pe(series: &[f64], config: &OrdinalConfig) -> Result<f64> {
    Ok(permutation_entropy(series, config)?.normalized)
}

/// Geometric mean of the normalized PE of `series` and of its reversal.
///
/// On tie-free series the reversal maps patterns bijectively and this equals
/// the forward value; stable tie-breaking makes the two directions genuinely
/// different in the presence of ties.
pub fn bidirectional_pe(series: &[f64], config: &OrdinalConfig) -> Result<f64> {
    let forward = normalized_pe(series, config)?;
    let reversed: Vec<f64> = series.iter().rev().copied().collect();
    let backward = normalized_pe(&reversed, config)?;
    Ok((forward * backward).sqrt())
}
