//! Estimator configuration: every constant the algorithm fixes, plus the
//! ones the analysis leaves open, in one serializable struct.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tunable constants for the full estimation pipeline.
///
/// Defaults follow the analysis where it pins a value (`bucket_constant`,
/// `eta`, `prune_fraction`, the smooth cap, the progress factor) and use
/// desk-scale choices where it only gives an order of growth. In
/// particular `inner_iter_constant` defaults to 40 rather than the
/// worst-case proof constant `1e5`, which would make interactive runs
/// infeasible; set it back for proof-scale experiments.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default)]
pub struct EstimatorConfig {
    /// Failure probability, in (0, 1].
    pub delta: f64,
    /// Overrides the bucket count `k` computed from `delta`.
    pub k_override: Option<usize>,
    /// Constant in `k = ⌈bucket_constant · ln(1/δ)⌉`.
    pub bucket_constant: f64,
    /// Descent step size `η`.
    pub eta: f64,
    /// Fraction of bucket means removed by the one-time prune, in [0, 1/2).
    pub prune_fraction: f64,
    /// Smooth-distribution cap is `smooth_cap_numerator / k'`.
    pub smooth_cap_numerator: f64,
    /// Reweighting happens only when the Rayleigh value reaches
    /// `θ² · mwu_progress_factor`.
    pub mwu_progress_factor: f64,
    /// Descent runs `⌈descent_iter_constant · log2(d+1)⌉` iterations.
    pub descent_iter_constant: f64,
    /// Inner solver runs `⌈inner_iter_constant · ln(k'+2) / θ²⌉` iterations.
    pub inner_iter_constant: f64,
    /// Hard cap on inner iterations, preventing blowup as the margin grid
    /// descends toward zero.
    pub inner_iter_max: usize,
    /// Rounding performs `⌈round_trial_constant · ln(max(T_des/δ, e))⌉`
    /// trials before reporting failure.
    pub round_trial_constant: f64,
    /// Power iteration runs `⌈power_iter_constant · ln(d+2)⌉` steps.
    pub power_iter_constant: f64,
    /// Number of geometric grid points probed by the margin search.
    pub margin_search_steps: usize,
    /// Rounding accepts a direction covering this fraction of the rows.
    pub round_accept_fraction: f64,
    /// Gradient sign test keeps the direction when this fraction of rows
    /// lies on its positive side.
    pub grad_accept_fraction: f64,
    /// Fraction guaranteed by the margin certificate; used by diagnostics
    /// and tests, not by the solver's own accept predicate.
    pub certificate_fraction: f64,
    /// Default root seed used by front ends when none is supplied.
    pub rng_seed: u64,
}

impl Default for EstimatorConfig {
    fn default() -> Self {
        Self {
            delta: 0.1,
            k_override: None,
            bucket_constant: 3600.0,
            eta: 1.0 / 8000.0,
            prune_fraction: 0.1,
            smooth_cap_numerator: 4.0,
            mwu_progress_factor: 0.1,
            descent_iter_constant: 4.0,
            inner_iter_constant: 40.0,
            inner_iter_max: 5000,
            round_trial_constant: 10.0,
            power_iter_constant: 8.0,
            margin_search_steps: 20,
            round_accept_fraction: 0.6,
            grad_accept_fraction: 0.5,
            certificate_fraction: 0.45,
            rng_seed: 0,
        }
    }
}

impl EstimatorConfig {
    /// A default configuration at the given failure probability.
    pub fn new(delta: f64) -> Self {
        Self {
            delta,
            ..Self::default()
        }
    }

    /// Checks every field against its documented range.
    pub fn validate(&self) -> Result<()> {
        if !(self.delta > 0.0 && self.delta <= 1.0) {
            return Err(Error::InvalidParameter(format!(
                "delta must lie in (0, 1], got {}",
                self.delta
            )));
        }
        if self.k_override == Some(0) {
            return Err(Error::InvalidParameter("k_override must be positive".into()));
        }
        for (name, v) in [
            ("bucket_constant", self.bucket_constant),
            ("eta", self.eta),
            ("smooth_cap_numerator", self.smooth_cap_numerator),
            ("mwu_progress_factor", self.mwu_progress_factor),
            ("descent_iter_constant", self.descent_iter_constant),
            ("inner_iter_constant", self.inner_iter_constant),
            ("round_trial_constant", self.round_trial_constant),
            ("power_iter_constant", self.power_iter_constant),
        ] {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::InvalidParameter(format!(
                    "{name} must be a positive finite real, got {v}"
                )));
            }
        }
        if !(self.prune_fraction >= 0.0 && self.prune_fraction < 0.5) {
            return Err(Error::InvalidParameter(format!(
                "prune_fraction must lie in [0, 1/2), got {}",
                self.prune_fraction
            )));
        }
        if self.smooth_cap_numerator < 1.0 {
            return Err(Error::InvalidParameter(
                "smooth_cap_numerator below 1 makes the smooth set empty".into(),
            ));
        }
        if self.inner_iter_max == 0 {
            return Err(Error::InvalidParameter("inner_iter_max must be positive".into()));
        }
        for (name, v) in [
            ("round_accept_fraction", self.round_accept_fraction),
            ("grad_accept_fraction", self.grad_accept_fraction),
            ("certificate_fraction", self.certificate_fraction),
        ] {
            if !(v > 0.0 && v <= 1.0) {
                return Err(Error::InvalidParameter(format!(
                    "{name} must lie in (0, 1], got {v}"
                )));
            }
        }
        Ok(())
    }
}

/// Resolves the bucket count `k`.
///
/// Returns `k_override` when set, else `⌈bucket_constant · ln(1/δ)⌉`
/// floored at one so `δ = 1` degenerates to a single bucket. Errors when
/// the data cannot supply `2k` buckets.
pub fn resolve_k(config: &EstimatorConfig, n: usize) -> Result<usize> {
    config.validate()?;
    let k = match config.k_override {
        Some(k) => k,
        None => {
            let raw = (config.bucket_constant * (1.0 / config.delta).ln()).ceil();
            (raw as usize).max(1)
        }
    };
    if 2 * k > n {
        return Err(Error::InsufficientSamples {
            buckets: 2 * k,
            required: 2 * k,
            available: n,
        });
    }
    Ok(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_floors_at_one_for_delta_one() {
        let cfg = EstimatorConfig::new(1.0);
        assert_eq!(resolve_k(&cfg, 10).unwrap(), 1);
    }

    #[test]
    fn k_override_wins() {
        let mut cfg = EstimatorConfig::new(0.5);
        cfg.k_override = Some(50);
        assert_eq!(resolve_k(&cfg, 200).unwrap(), 50);
    }

    #[test]
    fn k_rejects_insufficient_samples() {
        // 3600 * ln(100) ≈ 16578 buckets, far more than 100 samples allow.
        let cfg = EstimatorConfig::new(0.01);
        match resolve_k(&cfg, 100) {
            Err(Error::InsufficientSamples { buckets, .. }) => assert!(buckets > 100),
            other => panic!("expected InsufficientSamples, got {other:?}"),
        }
    }

    #[test]
    fn k_nonincreasing_in_delta() {
        let deltas = [0.9, 0.5, 0.2, 0.1, 0.05];
        let mut last = 0usize;
        for &d in &deltas {
            let cfg = EstimatorConfig::new(d);
            let k = resolve_k(&cfg, usize::MAX / 4).unwrap();
            assert!(k >= last, "k must not decrease as delta shrinks");
            last = k;
        }
    }

    #[test]
    fn validate_catches_bad_fields() {
        let mut cfg = EstimatorConfig::new(0.1);
        cfg.prune_fraction = 0.5;
        assert!(cfg.validate().is_err());
        let mut cfg = EstimatorConfig::new(0.1);
        cfg.eta = 0.0;
        assert!(cfg.validate().is_err());
        let mut cfg = EstimatorConfig::new(0.1);
        cfg.smooth_cap_numerator = 0.5;
        assert!(cfg.validate().is_err());
    }
}
