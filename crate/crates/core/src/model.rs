//! Physical parameters, squeezed-vacuum coefficients, and the generalized
//! Rabi frequency of the two-mode Jaynes-Cummings model.
//!
//! The field starts in a two-mode squeezed vacuum Σ_n C_n |n,n⟩ with
//! C_n = (tanh r)ⁿ / cosh r, so every quantity in the library is a sum over
//! the photon-pair index n. The sums are truncated at an index N chosen so
//! that the neglected tail mass Σ_{n>N} C_n² stays below a tolerance.

use crate::error::{Error, Result};

/// Default bound on the neglected tail mass Σ_{n>N} C_n².
pub const DEFAULT_TAIL_TOL: f64 = 1e-12;

/// Hard cap on the Fock truncation index.
pub const TRUNCATION_CAP: usize = 10_000;

/// Physical inputs of a run: squeeze parameter, initial atomic superposition
/// phases, Kerr ratio, and Fock truncation.
///
/// The initial atom is cos(θ/2)|↑⟩ + e^{iφ} sin(θ/2)|↓⟩; the Kerr ratio
/// η = χ/λ measures the dispersive nonlinearity against the atom-field
/// coupling. All values are immutable after construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    r: f64,
    theta: f64,
    phi: f64,
    eta: f64,
    n_trunc: usize,
}

impl ModelParams {
    /// Validates and stores the parameters.
    ///
    /// Requires r ≥ 0, θ ∈ [0, π], φ ∈ [0, 2π), η ≥ 0 and
    /// 1 ≤ n_trunc ≤ [`TRUNCATION_CAP`].
    pub fn new(r: f64, theta: f64, phi: f64, eta: f64, n_trunc: usize) -> Result<Self> {
        let finite = |name: &'static str, v: f64| -> Result<()> {
            if v.is_finite() {
                Ok(())
            } else {
                Err(Error::InvalidParameter {
                    name,
                    message: format!("must be finite, got {v}"),
                })
            }
        };
        finite("r", r)?;
        finite("theta", theta)?;
        finite("phi", phi)?;
        finite("eta", eta)?;
        if r < 0.0 {
            return Err(Error::InvalidParameter {
                name: "r",
                message: format!("squeeze parameter must be >= 0, got {r}"),
            });
        }
        if !(0.0..=std::f64::consts::PI).contains(&theta) {
            return Err(Error::InvalidParameter {
                name: "theta",
                message: format!("polar phase must lie in [0, pi], got {theta}"),
            });
        }
        if !(0.0..std::f64::consts::TAU).contains(&phi) {
            return Err(Error::InvalidParameter {
                name: "phi",
                message: format!("azimuthal phase must lie in [0, 2pi), got {phi}"),
            });
        }
        if eta < 0.0 {
            return Err(Error::InvalidParameter {
                name: "eta",
                message: format!("Kerr ratio must be >= 0, got {eta}"),
            });
        }
        if n_trunc < 1 || n_trunc > TRUNCATION_CAP {
            return Err(Error::InvalidParameter {
                name: "n_trunc",
                message: format!("truncation must lie in 1..={TRUNCATION_CAP}, got {n_trunc}"),
            });
        }
        Ok(Self {
            r,
            theta,
            phi,
            eta,
            n_trunc,
        })
    }

    /// Like [`ModelParams::new`] but picks the truncation via
    /// [`choose_truncation`] so the tail mass stays below `tail_tol`.
    pub fn with_auto_truncation(
        r: f64,
        theta: f64,
        phi: f64,
        eta: f64,
        tail_tol: f64,
    ) -> Result<Self> {
        let n = choose_truncation(r, tail_tol)?;
        Self::new(r, theta, phi, eta, n)
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }

    pub fn n_trunc(&self) -> usize {
        self.n_trunc
    }

    /// Total mean photon number of the squeezed vacuum, 2 sinh²r.
    pub fn mean_photon_number(&self) -> f64 {
        2.0 * self.r.sinh().powi(2)
    }
}

/// Squeeze parameter r that gives per-mode mean photon number sinh²r.
pub fn r_from_sinh2(sinh2r: f64) -> Result<f64> {
    if !sinh2r.is_finite() || sinh2r < 0.0 {
        return Err(Error::InvalidParameter {
            name: "sinh2r",
            message: format!("must be finite and >= 0, got {sinh2r}"),
        });
    }
    Ok(sinh2r.sqrt().asinh())
}

/// Photon-pair coefficients C_n of the two-mode squeezed vacuum,
/// C_n = zⁿ / cosh r with z = tanh r, for n = 0..=N.
///
/// All coefficients are non-negative and Σ C_n² = 1 − z^{2(N+1)}.
#[derive(Debug, Clone, PartialEq)]
pub struct TmsCoefficients {
    c: Vec<f64>,
    z: f64,
}

impl TmsCoefficients {
    pub fn as_slice(&self) -> &[f64] {
        &self.c
    }

    pub fn get(&self, n: usize) -> f64 {
        self.c[n]
    }

    /// Number of stored coefficients, N + 1.
    pub fn len(&self) -> usize {
        self.c.len()
    }

    pub fn is_empty(&self) -> bool {
        self.c.is_empty()
    }

    /// tanh r.
    pub fn z(&self) -> f64 {
        self.z
    }

    pub fn sum_sq(&self) -> f64 {
        self.c.iter().map(|c| c * c).sum()
    }

    /// Neglected probability Σ_{n>N} C_n² = z^{2(N+1)} (geometric tail).
    pub fn tail_mass(&self) -> f64 {
        self.z.powi(2 * self.c.len() as i32)
    }
}

/// Evaluates C_n = (tanh r)ⁿ / cosh r for n = 0..=N.
pub fn tms_coefficients(params: &ModelParams) -> TmsCoefficients {
    let r = params.r();
    let z = r.tanh();
    // 1/cosh r = 2 e^(-r) / (1 + e^(-2r)) stays finite where cosh r overflows.
    let c0 = 2.0 * (-r).exp() / (1.0 + (-2.0 * r).exp());
    let mut c = Vec::with_capacity(params.n_trunc() + 1);
    let mut cn = c0;
    for _ in 0..=params.n_trunc() {
        c.push(cn);
        cn *= z;
    }
    TmsCoefficients { c, z }
}

/// Smallest truncation N ≥ 1 with tail mass z^{2(N+1)} < `tail_tol`.
///
/// Errors with [`Error::CapacityExceeded`] when the squeezing would need
/// more than [`TRUNCATION_CAP`] Fock states.
pub fn choose_truncation(r: f64, tail_tol: f64) -> Result<usize> {
    if !(0.0..1.0).contains(&tail_tol) || tail_tol == 0.0 {
        return Err(Error::InvalidParameter {
            name: "tail_tol",
            message: format!("must lie in (0, 1), got {tail_tol}"),
        });
    }
    if !r.is_finite() || r < 0.0 {
        return Err(Error::InvalidParameter {
            name: "r",
            message: format!("squeeze parameter must be >= 0, got {r}"),
        });
    }
    let z = r.tanh();
    if z == 0.0 {
        return Ok(1);
    }
    // Closed-form estimate from z^(2(N+1)) < tol, then nudge to the exact
    // boundary to absorb rounding in the logs.
    let est = (tail_tol.ln() / (2.0 * z.ln())).ceil() - 1.0;
    let mut n = est.max(1.0) as usize;
    let tail = |n: usize| z.powi(2 * (n as i32 + 1));
    while n > 1 && tail(n - 1) < tail_tol {
        n -= 1;
    }
    while tail(n) >= tail_tol {
        n += 1;
        if n > TRUNCATION_CAP {
            return Err(Error::CapacityExceeded {
                required: n,
                cap: TRUNCATION_CAP,
            });
        }
    }
    if n > TRUNCATION_CAP {
        return Err(Error::CapacityExceeded {
            required: n,
            cap: TRUNCATION_CAP,
        });
    }
    Ok(n)
}

/// Generalized Rabi frequency Ω_n = √(4η²n² + (n+1)²).
///
/// Ω_n ≥ n + 1 with equality iff η = 0 or n = 0, and Ω_n is strictly
/// increasing in n for fixed η ≥ 0.
pub fn rabi_frequency(n: usize, eta: f64) -> f64 {
    let nf = n as f64;
    (2.0 * eta * nf).hypot(nf + 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sinh2_10_params(n_trunc: usize) -> ModelParams {
        let r = r_from_sinh2(10.0).unwrap();
        ModelParams::new(r, 0.0, 0.0, 0.0, n_trunc).unwrap()
    }

    #[test]
    fn vacuum_limit_has_single_coefficient() {
        let params = ModelParams::new(0.0, 0.0, 0.0, 0.0, 4).unwrap();
        let c = tms_coefficients(&params);
        assert_eq!(c.get(0), 1.0);
        for n in 1..=4 {
            assert_eq!(c.get(n), 0.0);
        }
    }

    #[test]
    fn coefficients_normalize_as_truncation_grows() {
        let r = 1.3;
        for (n_trunc, tol) in [(50usize, 1e-3), (200, 1e-9), (400, 1e-12)] {
            let params = ModelParams::new(r, 0.0, 0.0, 0.0, n_trunc).unwrap();
            let c = tms_coefficients(&params);
            assert!((1.0 - c.sum_sq()).abs() < tol, "n_trunc={n_trunc}");
        }
    }

    #[test]
    fn c0_matches_inverse_cosh_at_sinh2_10() {
        // cosh²r = 1 + sinh²r = 11, so C_0 = 1/√11.
        let c = tms_coefficients(&sinh2_10_params(10));
        assert!((c.get(0) - 1.0 / 11.0_f64.sqrt()).abs() < 1e-14);
        assert!((c.get(0) - 0.301511).abs() < 1e-6);
    }

    #[test]
    fn geometric_tail_matches_direct_sum() {
        let params = sinh2_10_params(120);
        let c = tms_coefficients(&params);
        // Independent tail: sum C_n² for n = 121..=3000 term by term.
        let z = params.r().tanh();
        let c0 = 1.0 / params.r().cosh();
        let mut direct = 0.0;
        for n in (121..=3000).rev() {
            let cn = c0 * z.powi(n);
            direct += cn * cn;
        }
        assert!((c.tail_mass() - direct).abs() < 1e-15 * direct.max(1.0));
    }

    #[test]
    fn truncation_at_vacuum_is_one() {
        assert_eq!(choose_truncation(0.0, 1e-12).unwrap(), 1);
        assert_eq!(choose_truncation(0.0, 0.5).unwrap(), 1);
    }

    #[test]
    fn truncation_for_sinh2_10_matches_brute_force() {
        let r = r_from_sinh2(10.0).unwrap();
        let n = choose_truncation(r, 1e-12).unwrap();
        // Brute-force oracle: smallest N whose directly-summed tail mass is
        // below the tolerance.
        let z = r.tanh();
        let c0 = 1.0 / r.cosh();
        let tail_from = |start: usize| -> f64 {
            (start..=6000)
                .rev()
                .map(|k| (c0 * z.powi(k as i32)).powi(2))
                .sum()
        };
        let mut brute = 1;
        while tail_from(brute + 1) >= 1e-12 {
            brute += 1;
        }
        assert_eq!(n, brute);
        assert_eq!(n, 289);
    }

    #[test]
    fn truncation_retains_required_mass() {
        for r in [0.2, 0.9, 1.818, 2.5] {
            let n = choose_truncation(r, 1e-12).unwrap();
            let params = ModelParams::new(r, 0.0, 0.0, 0.0, n).unwrap();
            let c = tms_coefficients(&params);
            assert!(c.sum_sq() >= 1.0 - 1e-12);
            assert!(c.sum_sq() <= 1.0 + 1e-15);
        }
    }

    #[test]
    fn truncation_capacity_error() {
        match choose_truncation(6.0, 1e-12) {
            Err(Error::CapacityExceeded { required, cap }) => {
                assert!(required > cap);
                assert_eq!(cap, TRUNCATION_CAP);
            }
            other => panic!("expected capacity error, got {other:?}"),
        }
    }

    #[test]
    fn rabi_frequency_limits() {
        for n in 0..10 {
            assert_eq!(rabi_frequency(n, 0.0), (n + 1) as f64);
        }
        for eta in [0.0, 0.03, 1.0, 7.5] {
            assert_eq!(rabi_frequency(0, eta), 1.0);
        }
        // 4·0.0009·4 + 9 = 9.0144
        assert!((rabi_frequency(2, 0.03) - 9.0144_f64.sqrt()).abs() < 1e-15);
        assert!((rabi_frequency(2, 0.03) - 3.002399).abs() < 1e-6);
    }

    #[test]
    fn rabi_frequency_is_increasing_and_bounded_below() {
        for eta in [0.0, 0.01, 0.1, 2.0] {
            for n in 0..200 {
                let here = rabi_frequency(n, eta);
                let next = rabi_frequency(n + 1, eta);
                assert!(next > here);
                assert!(here >= (n + 1) as f64);
                if eta > 0.0 && n > 0 {
                    assert!(here > (n + 1) as f64);
                }
            }
        }
    }

    #[test]
    fn mean_photon_number_accessor() {
        let params = sinh2_10_params(289);
        assert!((params.mean_photon_number() - 20.0).abs() < 1e-10);
    }

    #[test]
    fn parameter_validation() {
        assert!(ModelParams::new(-0.1, 0.0, 0.0, 0.0, 5).is_err());
        assert!(ModelParams::new(1.0, -0.1, 0.0, 0.0, 5).is_err());
        assert!(ModelParams::new(1.0, 3.2, 0.0, 0.0, 5).is_err());
        assert!(ModelParams::new(1.0, 0.0, 6.3, 0.0, 5).is_err());
        assert!(ModelParams::new(1.0, 0.0, 0.0, -1.0, 5).is_err());
        assert!(ModelParams::new(1.0, 0.0, 0.0, 0.0, 0).is_err());
        assert!(ModelParams::new(1.0, 0.0, 0.0, 0.0, TRUNCATION_CAP + 1).is_err());
        assert!(ModelParams::new(f64::NAN, 0.0, 0.0, 0.0, 5).is_err());
    }
}
