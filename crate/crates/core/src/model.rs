//! Shared domain types: data sets, bucket means, the sub-gaussian target
//! radius, and the estimation report.

use ndarray::{Array1, Array2, ArrayView1, ArrayView2};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Slack allowed on the unit-norm invariant of scaled bucket means.
pub const SCALED_NORM_SLACK: f64 = 1e-9;

/// A raw sample matrix: `n` rows of dimension `d`, all entries finite.
#[derive(Debug, Clone)]
pub struct DataSet {
    samples: Array2<f64>,
}

impl DataSet {
    pub fn new(samples: Array2<f64>) -> Result<Self> {
        if samples.nrows() == 0 || samples.ncols() == 0 {
            return Err(Error::InvalidParameter(
                "data set must have at least one row and one column".into(),
            ));
        }
        if samples.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidParameter(
                "data set contains non-finite entries".into(),
            ));
        }
        Ok(Self { samples })
    }

    pub fn n(&self) -> usize {
        self.samples.nrows()
    }

    pub fn d(&self) -> usize {
        self.samples.ncols()
    }

    pub fn samples(&self) -> ArrayView2<'_, f64> {
        self.samples.view()
    }

    pub fn row(&self, i: usize) -> ArrayView1<'_, f64> {
        self.samples.row(i)
    }

    pub fn into_inner(self) -> Array2<f64> {
        self.samples
    }
}

/// Group averages of a bucketed data set, possibly centered and rescaled.
///
/// A raw value has neither `center` nor `scale`. After centering at `x` and
/// dividing by `B = max_i ‖Z_i − x‖`, every row has norm at most one and
/// both fields are recorded so margins can be mapped back to raw units.
#[derive(Debug, Clone)]
pub struct BucketMeans {
    means: Array2<f64>,
    center: Option<Array1<f64>>,
    scale: Option<f64>,
}

impl BucketMeans {
    /// Raw bucket means; no centering or scaling applied yet.
    pub fn raw(means: Array2<f64>) -> Result<Self> {
        Self::build(means, None, None)
    }

    /// Bucket means that have been centered at `center` and divided by
    /// `scale`. Rows must have norm at most `1 + 1e-9`.
    pub fn scaled(means: Array2<f64>, center: Option<Array1<f64>>, scale: f64) -> Result<Self> {
        Self::build(means, center, Some(scale))
    }

    fn build(means: Array2<f64>, center: Option<Array1<f64>>, scale: Option<f64>) -> Result<Self> {
        if means.nrows() == 0 || means.ncols() == 0 {
            return Err(Error::InvalidParameter(
                "bucket means must have at least one row and one column".into(),
            ));
        }
        if means.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidParameter(
                "bucket means contain non-finite entries".into(),
            ));
        }
        if let Some(b) = scale {
            if !(b > 0.0) || !b.is_finite() {
                return Err(Error::InvalidParameter(format!(
                    "scale must be a positive finite real, got {b}"
                )));
            }
            for (i, row) in means.rows().into_iter().enumerate() {
                let norm = row.dot(&row).sqrt();
                if norm > 1.0 + SCALED_NORM_SLACK {
                    return Err(Error::InvalidParameter(format!(
                        "scaled row {i} has norm {norm}, exceeding 1"
                    )));
                }
            }
        }
        if let Some(c) = &center {
            if c.len() != means.ncols() {
                return Err(Error::InvalidParameter(
                    "center dimension does not match bucket means".into(),
                ));
            }
        }
        Ok(Self {
            means,
            center,
            scale,
        })
    }

    /// Number of rows `k'`.
    pub fn k_prime(&self) -> usize {
        self.means.nrows()
    }

    /// Ambient dimension of the rows.
    pub fn dim(&self) -> usize {
        self.means.ncols()
    }

    pub fn means(&self) -> ArrayView2<'_, f64> {
        self.means.view()
    }

    pub fn row(&self, i: usize) -> ArrayView1<'_, f64> {
        self.means.row(i)
    }

    pub fn center(&self) -> Option<ArrayView1<'_, f64>> {
        self.center.as_ref().map(|c| c.view())
    }

    pub fn scale(&self) -> Option<f64> {
        self.scale
    }

    pub fn is_scaled(&self) -> bool {
        self.scale.is_some()
    }

    /// True when every row has norm at most `1 + 1e-9`, the precondition of
    /// the inner maximization.
    pub fn is_unit_bounded(&self) -> bool {
        self.means
            .rows()
            .into_iter()
            .all(|r| r.dot(&r).sqrt() <= 1.0 + SCALED_NORM_SLACK)
    }

    /// A raw view of a contiguous row range, dropping center/scale metadata.
    pub fn slice_rows(&self, range: std::ops::Range<usize>) -> Result<BucketMeans> {
        if range.end > self.k_prime() || range.is_empty() {
            return Err(Error::InvalidParameter(format!(
                "row range {range:?} out of bounds for {} rows",
                self.k_prime()
            )));
        }
        let sub = self.means.slice(ndarray::s![range, ..]).to_owned();
        BucketMeans::raw(sub)
    }
}

/// The sub-gaussian error radius `r_δ`, split into its two terms.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SubgaussianRadius {
    /// `√(Tr(Σ)/n)` — the dimension-dependent term.
    pub trace_term: f64,
    /// `√(‖Σ‖·log(1/δ)/n)` — the confidence-dependent term.
    pub operator_term: f64,
    /// Their sum.
    pub r_delta: f64,
}

/// Computes the sub-gaussian radius from covariance summaries.
///
/// `sigma_trace` is `Tr(Σ)` and `sigma_opnorm` is `‖Σ‖`; for a PSD
/// covariance the operator norm never exceeds the trace, and the inputs are
/// rejected otherwise. Natural logarithm throughout.
pub fn compute_r_delta(
    sigma_trace: f64,
    sigma_opnorm: f64,
    n: usize,
    delta: f64,
) -> Result<SubgaussianRadius> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    if !(delta > 0.0 && delta <= 1.0) {
        return Err(Error::InvalidParameter(format!(
            "delta must lie in (0, 1], got {delta}"
        )));
    }
    if !(sigma_trace >= 0.0) || !(sigma_opnorm >= 0.0) {
        return Err(Error::InvalidParameter(
            "covariance summaries must be nonnegative".into(),
        ));
    }
    if sigma_opnorm > sigma_trace {
        return Err(Error::InvalidParameter(format!(
            "operator norm {sigma_opnorm} exceeds trace {sigma_trace}"
        )));
    }
    let nf = n as f64;
    let trace_term = (sigma_trace / nf).sqrt();
    let operator_term = (sigma_opnorm * (1.0 / delta).ln() / nf).sqrt();
    Ok(SubgaussianRadius {
        trace_term,
        operator_term,
        r_delta: trace_term + operator_term,
    })
}

/// One descent iteration's diagnostics.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IterationRecord {
    /// 1-based iteration number.
    pub t: usize,
    /// Distance estimate at the iterate.
    pub d_t: f64,
    /// Gradient estimate (unit vector, ambient coordinates).
    pub g_t: Vec<f64>,
    /// Margin found by the inner maximization, in scaled units.
    pub margin_theta: f64,
    /// True when the margin search exhausted its grid and fell back.
    pub approx_bregman_failed: bool,
}

/// Wall-clock seconds spent in each pipeline phase.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct PhaseTimings {
    pub bucketing_s: f64,
    pub initial_guess_s: f64,
    pub pruning_s: f64,
    pub descent_s: f64,
    pub total_s: f64,
}

/// Final estimate plus the full per-iteration diagnostic trail.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EstimateReport {
    /// The chosen iterate `x_{t*}`.
    pub estimate: Vec<f64>,
    /// The median-of-means initial guess `x_0`.
    pub initial_guess: Vec<f64>,
    /// Per-iteration records, in order.
    pub iterations: Vec<IterationRecord>,
    /// 0-based index into `iterations` of the record with the minimum `d_t`
    /// (first minimum on ties); 0 when no iteration ran.
    pub chosen_iteration: usize,
    /// True when the descent degenerated after the first iteration and
    /// terminated early with the best iterate so far.
    pub degenerate_early: bool,
    /// Per-phase wall times.
    pub wall_times: PhaseTimings,
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use ndarray::array;

    #[test]
    fn r_delta_zero_covariance() {
        let r = compute_r_delta(0.0, 0.0, 10, 0.5).unwrap();
        assert_eq!(r.r_delta, 0.0);
        assert_eq!(r.trace_term, 0.0);
        assert_eq!(r.operator_term, 0.0);
    }

    #[test]
    fn r_delta_isotropic_example() {
        // Unit per-coordinate variance, d = 4, n = 100, delta = e^-1.
        let r = compute_r_delta(4.0, 1.0, 100, (-1.0f64).exp()).unwrap();
        assert_abs_diff_eq!(r.trace_term, 0.2, epsilon = 1e-15);
        assert_abs_diff_eq!(r.operator_term, 0.1, epsilon = 1e-15);
        assert_abs_diff_eq!(r.r_delta, 0.3, epsilon = 1e-15);
    }

    #[test]
    fn r_delta_log_one_vanishes() {
        let r = compute_r_delta(1.0, 1.0, 1, 1.0).unwrap();
        assert_eq!(r.operator_term, 0.0);
        assert_eq!(r.r_delta, 1.0);
    }

    #[test]
    fn r_delta_rejects_bad_inputs() {
        assert!(compute_r_delta(1.0, 1.0, 0, 0.5).is_err());
        assert!(compute_r_delta(1.0, 1.0, 10, 0.0).is_err());
        assert!(compute_r_delta(1.0, 1.0, 10, 1.5).is_err());
        assert!(compute_r_delta(-1.0, 0.0, 10, 0.5).is_err());
        assert!(compute_r_delta(1.0, 2.0, 10, 0.5).is_err());
    }

    #[test]
    fn r_delta_monotonicity() {
        let base = compute_r_delta(4.0, 1.0, 100, 0.1).unwrap().r_delta;
        let more_samples = compute_r_delta(4.0, 1.0, 400, 0.1).unwrap().r_delta;
        let higher_conf = compute_r_delta(4.0, 1.0, 100, 0.01).unwrap().r_delta;
        let bigger_cov = compute_r_delta(8.0, 2.0, 100, 0.1).unwrap().r_delta;
        assert!(more_samples < base);
        assert!(higher_conf > base);
        assert!(bigger_cov > base);
    }

    #[test]
    fn dataset_rejects_nan() {
        let m = array![[0.0, f64::NAN]];
        assert!(DataSet::new(m).is_err());
    }

    #[test]
    fn scaled_bucket_means_enforce_unit_norm() {
        let ok = array![[0.6, 0.8], [0.0, 1.0]];
        assert!(BucketMeans::scaled(ok, None, 2.0).is_ok());
        let bad = array![[1.2, 0.0]];
        assert!(BucketMeans::scaled(bad, None, 2.0).is_err());
    }

    #[test]
    fn slice_rows_drops_metadata() {
        let m = array![[1.0, 0.0], [0.0, 1.0], [0.5, 0.5]];
        let b = BucketMeans::raw(m).unwrap();
        let s = b.slice_rows(1..3).unwrap();
        assert_eq!(s.k_prime(), 2);
        assert_eq!(s.row(0)[1], 1.0);
        assert!(!s.is_scaled());
    }
}
