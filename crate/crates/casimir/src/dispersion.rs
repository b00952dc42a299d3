//! Dielectric dispersion models evaluated at imaginary frequency.
//!
//! Every model yields the permittivity ε(iζ) for ζ > 0, which is real,
//! greater than one, and monotonically decreasing — the form entering the
//! Lifshitz reflection coefficients. Supported models:
//!
//! * ideal metal (ε = ∞ at all frequencies, with a choice of TE zero-mode
//!   prescription),
//! * constant ε,
//! * Drude: ε(iζ) = 1 + ω_p²/(ζ(ζ+ν)), optionally with a
//!   temperature-dependent relaxation frequency ν(T) from the
//!   Bloch–Grüneisen resistivity,
//! * plasma: ε(iζ) = 1 + ω_p²/ζ²,
//! * tabulated data (see [`crate::optical`]).
//!
//! All frequencies are in eV; temperatures in kelvin.

use crate::error::{Error, Result};
use crate::optical::SpectralTable;
use crate::quad;

/// Drude-model parameters, both in eV.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DrudeParams {
    /// Plasma frequency ω_p (eV).
    pub omega_p: f64,
    /// Relaxation frequency ν (eV).
    pub nu: f64,
}

impl DrudeParams {
    pub fn new(omega_p: f64, nu: f64) -> Result<Self> {
        if !(omega_p > 0.0) || !(nu > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "Drude parameters must be positive, got omega_p={omega_p}, nu={nu}"
            )));
        }
        Ok(Self { omega_p, nu })
    }

    /// Room-temperature gold: ω_p = 9.0 eV, ν = 35 meV.
    pub fn gold() -> Self {
        Self { omega_p: 9.0, nu: 0.035 }
    }
}

/// Plasma-model parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlasmaParams {
    /// Plasma frequency ω_p (eV).
    pub omega_p: f64,
}

impl PlasmaParams {
    pub fn new(omega_p: f64) -> Result<Self> {
        if !(omega_p > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "plasma frequency must be positive, got {omega_p}"
            )));
        }
        Ok(Self { omega_p })
    }
}

/// Bloch–Grüneisen parameters mapping resistivity to relaxation frequency.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RelaxationParams {
    /// Debye temperature Θ (K).
    pub theta: f64,
    /// Resistivity scale C (Ω·m).
    pub c_bg: f64,
    /// Resistivity-to-frequency constant K (eV·Ω⁻¹·m⁻¹).
    pub k_conv: f64,
    /// Optional residual (impurity) relaxation frequency added to ν(T) (eV).
    pub nu_residual: f64,
}

impl RelaxationParams {
    pub fn new(theta: f64, c_bg: f64, k_conv: f64) -> Result<Self> {
        if !(theta > 0.0) || !(c_bg > 0.0) || !(k_conv > 0.0) {
            return Err(Error::InvalidParameter(
                "Bloch-Gruneisen parameters must be strictly positive".into(),
            ));
        }
        Ok(Self { theta, c_bg, k_conv, nu_residual: 0.0 })
    }

    /// Gold preset: Θ = 175 K, C = 5.32e-8 Ω·m, K = 1.59e6 eV·Ω⁻¹·m⁻¹.
    ///
    /// Calibrated so that ν(295 K) = 35 meV.
    pub fn gold() -> Self {
        Self { theta: 175.0, c_bg: 5.32e-8, k_conv: 1.59e6, nu_residual: 0.0 }
    }
}

/// Treatment of the TE zero mode for an ideal metal.
///
/// Taking ε → ∞ before m → 0 keeps the full TE zero mode (B₀ = 1); the
/// modified ideal metal drops it (B₀ = 0). Physical dispersive models decide
/// this on their own; the ideal metal needs the prescription stated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TeZeroMode {
    /// TE zero mode counted in full, B₀ = 1.
    Full,
    /// TE zero mode excluded, B₀ = 0 (modified ideal metal).
    Excluded,
}

/// A dielectric-dispersion model ε(iζ).
#[derive(Debug, Clone, PartialEq)]
pub enum DispersionModel {
    /// Ideal metal: ε = ∞ for all ζ.
    IdealMetal { te_zero_mode: TeZeroMode },
    /// Frequency-independent ε > 1.
    ConstantEps(f64),
    /// Drude metal; with `relaxation` set, ν = ν(T) from Bloch–Grüneisen.
    Drude {
        params: DrudeParams,
        relaxation: Option<RelaxationParams>,
    },
    /// Collisionless plasma.
    Plasma(PlasmaParams),
    /// Interpolated table of ε(iζ).
    Tabulated(SpectralTable),
}

impl DispersionModel {
    /// Ideal metal with the full TE zero mode.
    pub fn ideal() -> Self {
        Self::IdealMetal { te_zero_mode: TeZeroMode::Full }
    }

    /// Modified ideal metal (TE zero mode excluded).
    pub fn ideal_mim() -> Self {
        Self::IdealMetal { te_zero_mode: TeZeroMode::Excluded }
    }

    pub fn constant(eps: f64) -> Result<Self> {
        if !eps.is_finite() || eps <= 1.0 {
            return Err(Error::InvalidParameter(format!(
                "constant permittivity must be finite and > 1, got {eps}"
            )));
        }
        Ok(Self::ConstantEps(eps))
    }

    /// Gold Drude model with the fixed room-temperature ν.
    pub fn drude_gold() -> Self {
        Self::Drude { params: DrudeParams::gold(), relaxation: None }
    }

    /// Gold Drude model with Bloch–Grüneisen ν(T).
    pub fn drude_gold_bg() -> Self {
        Self::Drude {
            params: DrudeParams::gold(),
            relaxation: Some(RelaxationParams::gold()),
        }
    }

    pub fn plasma(omega_p: f64) -> Result<Self> {
        Ok(Self::Plasma(PlasmaParams::new(omega_p)?))
    }

    /// Evaluate ε(iζ) at imaginary frequency `zeta` (eV) and temperature
    /// `t_kelvin`.
    ///
    /// The ideal metal returns the `f64::INFINITY` sentinel so that callers
    /// branch on the prescription explicitly; it is never approximated by a
    /// large finite number. Temperature only enters through the
    /// Bloch–Grüneisen relaxation frequency.
    pub fn permittivity(&self, zeta: f64, t_kelvin: f64) -> Result<f64> {
        match self {
            Self::IdealMetal { .. } => Ok(f64::INFINITY),
            Self::ConstantEps(eps) => Ok(*eps),
            Self::Drude { params, relaxation } => match relaxation {
                None => eps_drude(zeta, params),
                Some(relax) => {
                    let nu = nu_bloch_gruneisen(t_kelvin, relax)?;
                    eps_drude(zeta, &DrudeParams { omega_p: params.omega_p, nu })
                }
            },
            Self::Plasma(params) => eps_plasma(zeta, params),
            Self::Tabulated(table) => {
                if !(zeta > 0.0) {
                    return Err(Error::Domain(format!(
                        "tabulated permittivity requires zeta > 0, got {zeta}"
                    )));
                }
                Ok(table.interpolate(zeta))
            }
        }
    }

    /// Short, stable label used in CSV output.
    pub fn label(&self) -> String {
        match self {
            Self::IdealMetal { te_zero_mode: TeZeroMode::Full } => "ideal".into(),
            Self::IdealMetal { te_zero_mode: TeZeroMode::Excluded } => "ideal-mim".into(),
            Self::ConstantEps(eps) => format!("const:{eps}"),
            Self::Drude { relaxation: None, params } if *params == DrudeParams::gold() => {
                "drude-gold".into()
            }
            Self::Drude { relaxation: Some(_), params } if *params == DrudeParams::gold() => {
                "drude-gold-bg".into()
            }
            Self::Drude { params, relaxation } => format!(
                "drude:{}:{}{}",
                params.omega_p,
                params.nu,
                if relaxation.is_some() { ":bg" } else { "" }
            ),
            Self::Plasma(p) => format!("plasma:{}", p.omega_p),
            Self::Tabulated(t) => format!("table:{}", t.source()),
        }
    }
}

/// Drude permittivity ε(iζ) = 1 + ω_p²/(ζ(ζ+ν)).
pub fn eps_drude(zeta: f64, params: &DrudeParams) -> Result<f64> {
    if !(zeta > 0.0) {
        return Err(Error::Domain(format!(
            "Drude model requires zeta > 0, got {zeta} (the zero mode is handled by its limit)"
        )));
    }
    Ok(1.0 + params.omega_p * params.omega_p / (zeta * (zeta + params.nu)))
}

/// Plasma permittivity ε(iζ) = 1 + ω_p²/ζ².
pub fn eps_plasma(zeta: f64, params: &PlasmaParams) -> Result<f64> {
    if !(zeta > 0.0) {
        return Err(Error::Domain(format!("plasma model requires zeta > 0, got {zeta}")));
    }
    Ok(1.0 + (params.omega_p / zeta) * (params.omega_p / zeta))
}

/// Bloch–Grüneisen relaxation frequency (eV) at temperature `t_kelvin`.
///
/// ν(T) = K·C·(T/Θ)⁵ ∫₀^{Θ/T} x⁵ eˣ/(eˣ−1)² dx + ν_residual. Goes as T⁵
/// for T ≪ Θ and as T for T ≫ Θ.
pub fn nu_bloch_gruneisen(t_kelvin: f64, params: &RelaxationParams) -> Result<f64> {
    if !(t_kelvin > 0.0) {
        return Err(Error::Domain(format!(
            "Bloch-Gruneisen requires T > 0, got {t_kelvin}"
        )));
    }
    let x_max = params.theta / t_kelvin;
    // Beyond x ~ 60 the integrand is below 1e-20; saves panels at low T.
    let upper = x_max.min(60.0);
    let integral = quad::integrate(bg_integrand, 0.0, upper, 1e-9, 0.0);
    let prefactor = params.k_conv * params.c_bg * (t_kelvin / params.theta).powi(5);
    Ok(prefactor * integral.value + params.nu_residual)
}

/// x⁵ eˣ/(eˣ−1)², evaluated stably for all x ≥ 0.
fn bg_integrand(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    // e^x/(e^x-1)^2 = e^{-x}/(1-e^{-x})^2
    let em = (-x).exp_m1(); // e^{-x} - 1
    x.powi(5) * (-x).exp() / (em * em)
}
