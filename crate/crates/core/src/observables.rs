//! Reduced atomic state and entanglement diagnostics.
//!
//! Everything here is a function of the Bloch components
//! (ρ_x, ρ_y, ρ_z) = 2(⟨Ŝ_x⟩, ⟨Ŝ_y⟩, ⟨Ŝ_z⟩) of the reduced atomic density
//! matrix ρ̂_a = ½(I + ρ_x σ_x + ρ_y σ_y + ρ_z σ_z).

use num_complex::Complex64;

use crate::dynamics::AmplitudeTable;
use crate::error::{Error, Result};
use crate::model::ModelParams;

/// Bloch components of the reduced atomic state; twice the spin expectation
/// values, so ρ_x² + ρ_y² + ρ_z² ≤ 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochVector {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl BlochVector {
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn norm_sq(&self) -> f64 {
        self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }
}

/// Bloch vector of an amplitude table.
///
/// ρ_z = Σ_n (|F1(n)|² − |F2(n)|²) and
/// ρ_x + iρ_y = 2 Σ_n e^{2iηT(2n+1)} F1*(n+1) F2(n), where the phase factor
/// restores the per-n Kerr phases that the table does not store. The n = N
/// boundary term uses F1(N+1) = 0, which the truncation tolerance justifies.
pub fn bloch_vector(table: &AmplitudeTable, eta: f64) -> BlochVector {
    let f1 = table.f1();
    let f2 = table.f2();
    let t = table.t_scaled();

    let z: f64 = f1
        .iter()
        .zip(f2)
        .map(|(a, b)| a.norm_sqr() - b.norm_sqr())
        .sum();

    let mut coherence = Complex64::new(0.0, 0.0);
    for n in 0..table.len().saturating_sub(1) {
        let kerr = Complex64::from_polar(1.0, 2.0 * eta * t * (2 * n as f64 + 1.0));
        coherence += kerr * f1[n + 1].conj() * f2[n];
    }
    BlochVector::new(2.0 * coherence.re, 2.0 * coherence.im, z)
}

/// Closed-form atomic inversion ⟨Ŝ_z(T)⟩ for η = 0.
///
/// The geometric sums over the squeezed-vacuum weights resum to
///
/// ```text
///            [cos 2T − z²] cos θ + sin θ sin φ sin 2T
/// ⟨Ŝ_z(T)⟩ = -----------------------------------------,   z = tanh r,
///            2 [(1 − z² cos 2T)² + z⁴ sin² 2T] cosh²r
/// ```
///
/// which equals ρ_z/2 from [`bloch_vector`] up to the truncation tail.
/// Rejects η ≠ 0, where no elementary resummation exists.
pub fn inversion_closed_form(params: &ModelParams, t_scaled: f64) -> Result<f64> {
    if params.eta() != 0.0 {
        return Err(Error::InvalidParameter {
            name: "eta",
            message: format!("closed-form inversion requires eta = 0, got {}", params.eta()),
        });
    }
    let z = params.r().tanh();
    let z2 = z * z;
    let (sin2t, cos2t) = (2.0 * t_scaled).sin_cos();
    let numerator =
        (cos2t - z2) * params.theta().cos() + params.theta().sin() * params.phi().sin() * sin2t;
    let resolvent = (1.0 - z2 * cos2t).powi(2) + z2 * z2 * sin2t * sin2t;
    let cosh2 = params.r().cosh().powi(2);
    Ok(numerator / (2.0 * resolvent * cosh2))
}

/// Reduced 2x2 atomic density matrix in the {|↑⟩, |↓⟩} basis.
///
/// Hermitian, unit trace, positive semidefinite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AtomDensityMatrix {
    m: [[Complex64; 2]; 2],
}

impl AtomDensityMatrix {
    pub fn from_entries(m: [[Complex64; 2]; 2]) -> Self {
        Self { m }
    }

    /// ½(I + ρ_x σ_x + ρ_y σ_y + ρ_z σ_z).
    pub fn from_bloch(b: &BlochVector) -> Self {
        Self {
            m: [
                [
                    Complex64::new(0.5 * (1.0 + b.z), 0.0),
                    Complex64::new(0.5 * b.x, -0.5 * b.y),
                ],
                [
                    Complex64::new(0.5 * b.x, 0.5 * b.y),
                    Complex64::new(0.5 * (1.0 - b.z), 0.0),
                ],
            ],
        }
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.m[row][col]
    }

    pub fn trace(&self) -> Complex64 {
        self.m[0][0] + self.m[1][1]
    }

    /// Bloch components read back from the matrix entries.
    pub fn bloch(&self) -> BlochVector {
        BlochVector::new(
            2.0 * self.m[1][0].re,
            2.0 * self.m[1][0].im,
            (self.m[0][0] - self.m[1][1]).re,
        )
    }

    /// Eigenvalues sorted descending, computed from the entries alone.
    pub fn eigenvalues(&self) -> [f64; 2] {
        let mean = 0.5 * (self.m[0][0].re + self.m[1][1].re);
        let radius = (0.5 * (self.m[0][0].re - self.m[1][1].re)).hypot(self.m[0][1].norm());
        [mean + radius, mean - radius]
    }

    pub fn purity(&self) -> f64 {
        let ev = self.eigenvalues();
        ev[0] * ev[0] + ev[1] * ev[1]
    }

    /// Largest deviation from another matrix, entry by entry.
    pub fn max_abs_diff(&self, other: &AtomDensityMatrix) -> f64 {
        let mut worst = 0.0_f64;
        for i in 0..2 {
            for j in 0..2 {
                worst = worst.max((self.m[i][j] - other.m[i][j]).norm());
            }
        }
        worst
    }

    /// Checks hermiticity, unit trace, and positivity within `tol`.
    pub fn validate(&self, tol: f64) -> Result<()> {
        let herm = (self.m[0][1] - self.m[1][0].conj()).norm()
            + self.m[0][0].im.abs()
            + self.m[1][1].im.abs();
        if herm > tol {
            return Err(Error::InvalidParameter {
                name: "density",
                message: format!("matrix is not hermitian within {tol}: deviation {herm}"),
            });
        }
        let trace_err = (self.trace() - Complex64::new(1.0, 0.0)).norm();
        if trace_err > tol {
            return Err(Error::InvalidParameter {
                name: "density",
                message: format!("trace deviates from 1 by {trace_err}"),
            });
        }
        if self.eigenvalues()[1] < -tol {
            return Err(Error::InvalidParameter {
                name: "density",
                message: format!("negative eigenvalue {}", self.eigenvalues()[1]),
            });
        }
        Ok(())
    }
}

/// Reduced atomic density matrix of an amplitude table.
pub fn reduced_density(table: &AmplitudeTable, eta: f64) -> AtomDensityMatrix {
    AtomDensityMatrix::from_bloch(&bloch_vector(table, eta))
}

/// Linear entropy ξ = 1 − Tr ρ̂_a² = (1 − ρ_x² − ρ_y² − ρ_z²)/2.
///
/// Zero for a pure (disentangled) atom, 0.5 at maximal entanglement.
pub fn linear_entropy(b: &BlochVector) -> f64 {
    0.5 * (1.0 - b.norm_sq())
}

/// Von Neumann entropy S = −λ₊ ln λ₊ − λ₋ ln λ₋ with λ± = (1 ± |ρ⃗|)/2,
/// in nats, using the 0·ln 0 = 0 convention.
pub fn von_neumann_entropy(b: &BlochVector) -> f64 {
    let radius = b.norm().min(1.0);
    let plus = 0.5 * (1.0 + radius);
    let minus = 0.5 * (1.0 - radius);
    -x_ln_x(plus) - x_ln_x(minus)
}

pub(crate) fn x_ln_x(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        x * x.ln()
    }
}
