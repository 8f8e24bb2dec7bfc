//! Small statistics helpers: sample summaries, Kolmogorov-Smirnov tests,
//! and least-squares slopes.

/// Mean and unbiased sample variance.
pub fn mean_variance(samples: &[f64]) -> (f64, f64) {
    let n = samples.len();
    assert!(n >= 1);
    let mean = samples.iter().sum::<f64>() / n as f64;
    if n < 2 {
        return (mean, 0.0);
    }
    let var = samples.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (n - 1) as f64;
    (mean, var)
}

/// One-sample Kolmogorov-Smirnov statistic against a continuous CDF.
/// Sorts the sample buffer in place.
pub fn ks_statistic(samples: &mut [f64], cdf: impl Fn(f64) -> f64) -> f64 {
    let n = samples.len();
    assert!(n >= 1);
    samples.sort_by(f64::total_cmp);
    let nf = n as f64;
    let mut d = 0.0f64;
    for (i, &x) in samples.iter().enumerate() {
        let f = cdf(x);
        let lo = (f - i as f64 / nf).abs();
        let hi = ((i + 1) as f64 / nf - f).abs();
        d = d.max(lo).max(hi);
    }
    d
}

/// Asymptotic p-value for the one-sample KS statistic. `None` when the
/// sample is too small for the statistic to mean anything (n < 2).
pub fn ks_pvalue(d: f64, n: usize) -> Option<f64> {
    if n < 2 {
        return None;
    }
    let en = (n as f64).sqrt();
    Some(ks_q((en + 0.12 + 0.11 / en) * d))
}

/// Kolmogorov distribution tail Q(t) = 2 sum_{k>=1} (-1)^{k-1} e^{-2 k^2 t^2}.
fn ks_q(t: f64) -> f64 {
    if t < 1e-8 {
        return 1.0;
    }
    let mut sum = 0.0;
    let mut sign = 1.0;
    for k in 1..=100 {
        let term = sign * (-2.0 * (k * k) as f64 * t * t).exp();
        sum += term;
        if term.abs() < 1e-16 {
            break;
        }
        sign = -sign;
    }
    (2.0 * sum).clamp(0.0, 1.0)
}

/// Ordinary least-squares slope of y against x.
pub fn ols_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    assert!(points.len() >= 2);
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = points.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    sxy / sxx
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;

    #[test]
    fn ks_accepts_true_distribution() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut samples: Vec<f64> = (0..20_000).map(|_| rng.random::<f64>()).collect();
        let d = ks_statistic(&mut samples, |x| x.clamp(0.0, 1.0));
        let p = ks_pvalue(d, samples.len()).unwrap();
        assert!(p > 0.01, "p = {p}");
    }

    #[test]
    fn ks_rejects_wrong_distribution() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut samples: Vec<f64> = (0..20_000).map(|_| rng.random::<f64>().powi(2)).collect();
        let d = ks_statistic(&mut samples, |x| x.clamp(0.0, 1.0));
        let p = ks_pvalue(d, samples.len()).unwrap();
        assert!(p < 1e-6, "p = {p}");
    }

    #[test]
    fn ks_undefined_for_single_sample() {
        assert!(ks_pvalue(0.3, 1).is_none());
    }

    #[test]
    fn slope_recovers_exact_power_law() {
        let pts: Vec<(f64, f64)> = (1..=8)
            .map(|k| {
                let lambda = 10f64.powi(k);
                (lambda.ln(), (lambda * lambda).ln())
            })
            .collect();
        assert!((ols_slope(&pts) - 2.0).abs() < 1e-12);
    }
}
