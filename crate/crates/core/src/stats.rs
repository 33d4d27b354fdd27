//! Small statistics helpers: order-stable summation, mean / standard
//! error accumulation, and a two-sample Kolmogorov–Smirnov statistic.

/// Pairwise (cascade) summation.
///
/// The reduction tree depends only on the slice length, so a sum over
/// values produced in a fixed order is bit-identical no matter how the
/// values were computed (sequentially or by a worker pool).
pub fn pairwise_sum(values: &[f64]) -> f64 {
    if values.len() <= 32 {
        return values.iter().sum();
    }
    let mid = values.len() / 2;
    pairwise_sum(&values[..mid]) + pairwise_sum(&values[mid..])
}

/// Sample mean and standard error of the mean.
///
/// Uses pairwise sums of the values and their squares; returns
/// `(mean, se)` with `se = 0` for fewer than two samples.
pub fn mean_se(values: &[f64]) -> (f64, f64) {
    let n = values.len();
    if n == 0 {
        return (0.0, 0.0);
    }
    let sum = pairwise_sum(values);
    let mean = sum / n as f64;
    if n < 2 {
        return (mean, 0.0);
    }
    let sq: Vec<f64> = values.iter().map(|v| (v - mean) * (v - mean)).collect();
    let var = pairwise_sum(&sq) / (n as f64 - 1.0);
    (mean, (var / n as f64).sqrt().max(0.0))
}

/// Standard error of a binomial fraction `k/n`.
pub fn binomial_se(k: u64, n: u64) -> f64 {
    if n == 0 {
        return 0.0;
    }
    let p = k as f64 / n as f64;
    (p * (1.0 - p) / n as f64).sqrt()
}

/// Two-sample Kolmogorov–Smirnov statistic, scaled by `√(nm/(n+m))`.
///
/// Under the null (both samples drawn independently from one continuous
/// law) the scaled statistic follows the Kolmogorov distribution, whose
/// upper tail is `P(K > c) ≈ 2·exp(-2c²)` for moderate `c`.
pub fn ks_two_sample_scaled(a: &[f64], b: &[f64]) -> f64 {
    let mut xs: Vec<f64> = a.to_vec();
    let mut ys: Vec<f64> = b.to_vec();
    xs.sort_by(|p, q| p.total_cmp(q));
    ys.sort_by(|p, q| p.total_cmp(q));
    let (n, m) = (xs.len(), ys.len());
    if n == 0 || m == 0 {
        return 0.0;
    }
    let (mut i, mut j) = (0usize, 0usize);
    let mut d: f64 = 0.0;
    while i < n && j < m {
        let t = xs[i].min(ys[j]);
        while i < n && xs[i] <= t {
            i += 1;
        }
        while j < m && ys[j] <= t {
            j += 1;
        }
        let gap = (i as f64 / n as f64 - j as f64 / m as f64).abs();
        d = d.max(gap);
    }
    let scale = ((n as f64 * m as f64) / (n + m) as f64).sqrt();
    scale * d
}

/// Critical value of the scaled KS statistic at the two-sided
/// three-sigma-equivalent level `p = 2(1 - Φ(3)) ≈ 0.0027`:
/// solving `2·exp(-2c²) = p` gives `c = √(ln(2/p)/2)`.
pub const KS_THREE_SIGMA_CRITICAL: f64 = 1.8177;
