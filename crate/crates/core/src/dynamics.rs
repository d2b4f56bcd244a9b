//! Analytic time evolution of the dressed amplitudes.
//!
//! At resonance the interaction couples |↑,n,n⟩ only to |↓,n+1,n+1⟩, so the
//! state at scaled time T is described per photon-pair index n by the two
//! complex amplitudes
//!
//! ```text
//! F1(n,T) = C_n cos(θ/2) cos(TΩ_n)
//!           + i (C_n/Ω_n) [2ηn cos(θ/2) − (n+1) e^{iφ} sin(θ/2)] sin(TΩ_n)
//! F2(n,T) = C_n e^{iφ} sin(θ/2) cos(TΩ_n)
//!           − i (C_n/Ω_n) [2ηn e^{iφ} sin(θ/2) + (n+1) cos(θ/2)] sin(TΩ_n)
//! ```
//!
//! where F1 multiplies |↑,n,n⟩ and F2 multiplies |↓,n+1,n+1⟩. The overall
//! per-n Kerr phase e^{−2iηTn²} (the mean energy of the n-th block) is *not*
//! stored here: |F1|² and |F2|² do not see it, and the coherence sum in
//! [`crate::observables::bloch_vector`] reinstates the residual
//! e^{2iηT(2n+1)} factors explicitly.
//!
//! Amplitudes are recomputed from scratch at every T; the closed form is
//! exact, so there is no error accumulation across a sweep.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::model::{rabi_frequency, ModelParams, TmsCoefficients};

/// Dressed amplitudes F1(n), F2(n) for n = 0..=N at one scaled time.
#[derive(Debug, Clone, PartialEq)]
pub struct AmplitudeTable {
    t_scaled: f64,
    f1: Vec<Complex64>,
    f2: Vec<Complex64>,
}

impl AmplitudeTable {
    pub fn t_scaled(&self) -> f64 {
        self.t_scaled
    }

    /// Amplitudes of |↑,n,n⟩.
    pub fn f1(&self) -> &[Complex64] {
        &self.f1
    }

    /// Amplitudes of |↓,n+1,n+1⟩.
    pub fn f2(&self) -> &[Complex64] {
        &self.f2
    }

    /// Number of photon-pair indices, N + 1.
    pub fn len(&self) -> usize {
        self.f1.len()
    }

    pub fn is_empty(&self) -> bool {
        self.f1.is_empty()
    }

    /// Σ_n (|F1(n)|² + |F2(n)|²); equals Σ C_n² at every T.
    pub fn norm_sq(&self) -> f64 {
        self.f1
            .iter()
            .zip(&self.f2)
            .map(|(a, b)| a.norm_sqr() + b.norm_sqr())
            .sum()
    }

    /// Largest |F1(n) − other.F1(n)| or |F2(n) − other.F2(n)|.
    pub fn max_abs_diff(&self, other: &AmplitudeTable) -> f64 {
        assert_eq!(self.len(), other.len(), "tables must share a truncation");
        self.f1
            .iter()
            .zip(&other.f1)
            .chain(self.f2.iter().zip(&other.f2))
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub(crate) fn from_parts(t_scaled: f64, f1: Vec<Complex64>, f2: Vec<Complex64>) -> Self {
        debug_assert_eq!(f1.len(), f2.len());
        Self { t_scaled, f1, f2 }
    }
}

/// Evolves the initial state to scaled time `t_scaled`.
///
/// `coeffs` must come from [`crate::model::tms_coefficients`] for the same
/// `params`. At T = 0 this reduces to F1(n) = C_n cos(θ/2) and
/// F2(n) = C_n e^{iφ} sin(θ/2).
pub fn evolve(params: &ModelParams, coeffs: &TmsCoefficients, t_scaled: f64) -> AmplitudeTable {
    debug_assert!(t_scaled.is_finite());
    debug_assert_eq!(coeffs.len(), params.n_trunc() + 1);
    let half = 0.5 * params.theta();
    let cos_half = half.cos();
    let sin_half = half.sin();
    let phase = Complex64::from_polar(1.0, params.phi());
    let eta = params.eta();

    let mut f1 = Vec::with_capacity(coeffs.len());
    let mut f2 = Vec::with_capacity(coeffs.len());
    for n in 0..coeffs.len() {
        let cn = coeffs.get(n);
        let omega = rabi_frequency(n, eta);
        let (sin_t, cos_t) = (t_scaled * omega).sin_cos();
        let kerr = 2.0 * eta * n as f64;
        let ladder = (n + 1) as f64;
        let swing = Complex64::i() * (cn / omega) * sin_t;
        f1.push(
            Complex64::new(cn * cos_half * cos_t, 0.0)
                + swing * (Complex64::new(kerr * cos_half, 0.0) - phase * (ladder * sin_half)),
        );
        f2.push(
            phase * (cn * sin_half * cos_t)
                - swing * (phase * (kerr * sin_half) + Complex64::new(ladder * cos_half, 0.0)),
        );
    }
    AmplitudeTable::from_parts(t_scaled, f1, f2)
}

/// Amplitude table at the revival times T = mπ for η = 0.
///
/// There every component simply acquires the parity sign (−1)^{m(n+1)}, so the
/// table can be written down without evaluating any trigonometry at TΩ_n. It
/// serves as a regression target for [`evolve`] at T = mπ.
///
/// Rejects η ≠ 0, where the revival structure does not hold.
pub fn revival_state(
    params: &ModelParams,
    coeffs: &TmsCoefficients,
    m: i64,
) -> Result<AmplitudeTable> {
    if params.eta() != 0.0 {
        return Err(Error::InvalidParameter {
            name: "eta",
            message: format!("revival construction requires eta = 0, got {}", params.eta()),
        });
    }
    let half = 0.5 * params.theta();
    let cos_half = half.cos();
    let sin_half = half.sin();
    let phase = Complex64::from_polar(1.0, params.phi());
    let t_scaled = m as f64 * std::f64::consts::PI;

    let mut f1 = Vec::with_capacity(coeffs.len());
    let mut f2 = Vec::with_capacity(coeffs.len());
    for n in 0..coeffs.len() {
        let sign = if (m * (n as i64 + 1)).rem_euclid(2) == 0 {
            1.0
        } else {
            -1.0
        };
        let cn = sign * coeffs.get(n);
        f1.push(Complex64::new(cn * cos_half, 0.0));
        f2.push(phase * (cn * sin_half));
    }
    Ok(AmplitudeTable::from_parts(t_scaled, f1, f2))
}

/// Amplitude table under the trapping condition (θ, φ, η) = (π/2, 0, 0).
///
/// Each block starts in an eigenvector of its coupling matrix, so both
/// amplitudes just rotate: F1(n) = F2(n) = C_n e^{−i(n+1)T} / √2. In
/// particular |F1(n)| = |F2(n)| = C_n/√2 and the inversion vanishes for all T.
///
/// Rejects parameters outside the trapping condition.
pub fn trapped_state(
    params: &ModelParams,
    coeffs: &TmsCoefficients,
    t_scaled: f64,
) -> Result<AmplitudeTable> {
    let trapping = params.theta() == std::f64::consts::FRAC_PI_2
        && params.phi() == 0.0
        && params.eta() == 0.0;
    if !trapping {
        return Err(Error::InvalidParameter {
            name: "params",
            message: format!(
                "trapping requires (theta, phi, eta) = (pi/2, 0, 0), got ({}, {}, {})",
                params.theta(),
                params.phi(),
                params.eta()
            ),
        });
    }
    let mut f1 = Vec::with_capacity(coeffs.len());
    let mut f2 = Vec::with_capacity(coeffs.len());
    for n in 0..coeffs.len() {
        let amp = Complex64::from_polar(
            coeffs.get(n) * std::f64::consts::FRAC_1_SQRT_2,
            -((n + 1) as f64) * t_scaled,
        );
        f1.push(amp);
        f2.push(amp);
    }
    Ok(AmplitudeTable::from_parts(t_scaled, f1, f2))
}
