//! System configuration shared by both engines.

use thiserror::Error;

/// Receive-filter family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Detector {
    Zf,
    ZfSic,
}

impl Detector {
    pub fn as_str(self) -> &'static str {
        match self {
            Detector::Zf => "zf",
            Detector::ZfSic => "zf_sic",
        }
    }
}

/// Channel knowledge at the receiver: its own link only, or additionally the
/// L nearest interferers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CsirMode {
    Direct,
    Local,
}

impl CsirMode {
    pub fn as_str(self) -> &'static str {
        match self {
            CsirMode::Direct => "direct",
            CsirMode::Local => "local",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("lambda must be positive and finite, got {0}")]
    InvalidLambda(f64),
    #[error("path-loss exponent alpha must satisfy alpha > 2, got {0}")]
    InvalidAlpha(f64),
    #[error("link-distance outer radius must satisfy r_d > 1, got {0}")]
    InvalidRd(f64),
    #[error("n_r must be >= 1")]
    InvalidNr,
    #[error("antenna distribution must have length n_r = {nr}, got {len}")]
    AntennaDistLength { nr: usize, len: usize },
    #[error("antenna distribution entries must be non-negative and sum to 1 (sum deviation {deviation:.3e})")]
    AntennaDistNotProbability { deviation: f64 },
    #[error("direct CSIR requires l_cancel = 0, got {0}")]
    DirectWithCancellation(usize),
    #[error("local CSIR requires a point-mass antenna distribution")]
    LocalNeedsPointMass,
    #[error("local CSIR requires 1 <= L <= floor(n_r/n_t) - 1 = {max}, got {l}")]
    InvalidL { l: usize, max: isize },
}

/// All physical and protocol parameters of one network under study.
#[derive(Debug, Clone, PartialEq)]
pub struct SystemConfig {
    /// Transmitter intensity (m^-2).
    pub lambda: f64,
    /// Path-loss exponent, > 2.
    pub alpha: f64,
    /// Outer radius of the link-distance ring (m); inner radius is 1 m.
    pub r_d: f64,
    /// Receive antennas.
    pub n_r: usize,
    /// Probability of a transmitter having k antennas, k = 1..=n_r.
    pub antenna_dist: Vec<f64>,
    /// Transmit power (dBm).
    pub power_dbm: f64,
    /// Noise variance (dBm).
    pub noise_dbm: f64,
    pub csir_mode: CsirMode,
    /// Number of nearest interferers cancelled under local CSIR.
    pub l_cancel: usize,
    /// Force the noise term to exactly zero.
    pub interference_limited: bool,
}

impl SystemConfig {
    /// Point-mass antenna distribution at `n_t`, direct CSIR. Other fields
    /// mirror the dense-network measurement campaign defaults (alpha 4,
    /// ring radius 50 m, -20 dBm transmit power, -104 dBm noise).
    pub fn fig2_default(lambda: f64, n_t: usize, n_r: usize) -> Self {
        let mut antenna_dist = vec![0.0; n_r];
        antenna_dist[n_t - 1] = 1.0;
        SystemConfig {
            lambda,
            alpha: 4.0,
            r_d: 50.0,
            n_r,
            antenna_dist,
            power_dbm: -20.0,
            noise_dbm: -104.0,
            csir_mode: CsirMode::Direct,
            l_cancel: 0,
            interference_limited: false,
        }
    }

    /// Same physical parameters with the local-CSIR cancellation budget
    /// L = floor(n_r/n_t) - 1.
    pub fn fig3_default(lambda: f64, n_t: usize, n_r: usize) -> Self {
        let mut cfg = Self::fig2_default(lambda, n_t, n_r);
        cfg.csir_mode = CsirMode::Local;
        cfg.l_cancel = n_r / n_t - 1;
        cfg
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if !(self.lambda > 0.0 && self.lambda.is_finite()) {
            return Err(ConfigError::InvalidLambda(self.lambda));
        }
        if !(self.alpha > 2.0 && self.alpha.is_finite()) {
            return Err(ConfigError::InvalidAlpha(self.alpha));
        }
        if !(self.r_d > 1.0 && self.r_d.is_finite()) {
            return Err(ConfigError::InvalidRd(self.r_d));
        }
        if self.n_r < 1 {
            return Err(ConfigError::InvalidNr);
        }
        if self.antenna_dist.len() != self.n_r {
            return Err(ConfigError::AntennaDistLength {
                nr: self.n_r,
                len: self.antenna_dist.len(),
            });
        }
        if self.antenna_dist.iter().any(|&p| !(p >= 0.0)) {
            return Err(ConfigError::AntennaDistNotProbability { deviation: f64::NAN });
        }
        let sum: f64 = self.antenna_dist.iter().sum();
        if (sum - 1.0).abs() > 1e-12 {
            return Err(ConfigError::AntennaDistNotProbability {
                deviation: sum - 1.0,
            });
        }
        match self.csir_mode {
            CsirMode::Direct => {
                if self.l_cancel != 0 {
                    return Err(ConfigError::DirectWithCancellation(self.l_cancel));
                }
            }
            CsirMode::Local => {
                let n_t = self
                    .point_mass_n_t()
                    .ok_or(ConfigError::LocalNeedsPointMass)?;
                let max = self.n_r as isize / n_t as isize - 1;
                if self.l_cancel < 1 || self.l_cancel as isize > max {
                    return Err(ConfigError::InvalidL {
                        l: self.l_cancel,
                        max,
                    });
                }
            }
        }
        Ok(())
    }

    /// The fixed transmit-antenna count when the distribution is a point
    /// mass, i.e. p_{n_t} = 1.
    pub fn point_mass_n_t(&self) -> Option<usize> {
        let mut n_t = None;
        for (i, &p) in self.antenna_dist.iter().enumerate() {
            if p == 1.0 && n_t.is_none() {
                n_t = Some(i + 1);
            } else if p != 0.0 {
                return None;
            }
        }
        n_t
    }

    /// Transmit power in watts.
    pub fn power_watts(&self) -> f64 {
        dbm_to_watts(self.power_dbm)
    }

    /// Noise variance in watts; exactly zero in interference-limited mode.
    pub fn noise_watts(&self) -> f64 {
        if self.interference_limited {
            0.0
        } else {
            dbm_to_watts(self.noise_dbm)
        }
    }

    /// sigma^2 / P, the dimensionless noise-to-power ratio.
    pub fn noise_over_power(&self) -> f64 {
        self.noise_watts() / self.power_watts()
    }

    /// Mean squared link distance E[d^2] = (r_d^2 + 1)/2 for the ring law.
    pub fn mean_square_link_distance(&self) -> f64 {
        (self.r_d * self.r_d + 1.0) / 2.0
    }
}

/// dBm to linear watts: P_W = 10^{(dBm - 30)/10}.
pub fn dbm_to_watts(dbm: f64) -> f64 {
    10f64.powf((dbm - 30.0) / 10.0)
}
