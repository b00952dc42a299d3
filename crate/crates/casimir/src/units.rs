//! Physical constants and unit conversions.
//!
//! Internally everything runs in natural units (`ħ = c = k_B = 1`) with the
//! electronvolt as the base energy scale: frequencies in eV, lengths in
//! eV⁻¹, temperatures in eV. Boundary quantities (gap in μm, temperature in
//! K, pressure in mPa, energies per area in J/m²) are converted exactly here
//! and nowhere else.

/// ħc in eV·nm (CODATA 2018).
pub const HBARC_EV_NM: f64 = 197.326_980_4;

/// Boltzmann constant in eV/K (CODATA 2018, exact).
pub const KB_EV_PER_K: f64 = 8.617_333_262e-5;

/// One electronvolt in joule (CODATA 2018, exact).
pub const EV_J: f64 = 1.602_176_634e-19;

/// Angular-frequency equivalent of 1 eV, in rad/s.
pub const EV_TO_RAD_PER_S: f64 = 1.519_267_447e15;

/// Riemann ζ(3) (Apéry's constant).
pub const ZETA3: f64 = 1.202_056_903_159_594_3;

/// Riemann ζ(4) = π⁴/90.
pub const ZETA4: f64 = 1.082_323_233_711_138_2;

/// Riemann ζ(5).
pub const ZETA5: f64 = 1.036_927_755_143_369_9;

/// Gap width: micrometres to natural units (eV⁻¹).
pub fn um_to_natural(a_um: f64) -> f64 {
    a_um * 1.0e3 / HBARC_EV_NM
}

/// Temperature: kelvin to natural units (eV).
pub fn kelvin_to_ev(t_kelvin: f64) -> f64 {
    t_kelvin * KB_EV_PER_K
}

/// Pressure: natural units (eV⁴) to millipascal.
pub fn pressure_to_mpa(p_natural: f64) -> f64 {
    const M_PER_INV_EV: f64 = HBARC_EV_NM * 1.0e-9;
    p_natural * EV_J / (M_PER_INV_EV * M_PER_INV_EV * M_PER_INV_EV) * 1.0e3
}

/// Energy per unit area: natural units (eV³) to J/m².
pub fn energy_area_to_si(f_natural: f64) -> f64 {
    const M_PER_INV_EV: f64 = HBARC_EV_NM * 1.0e-9;
    f_natural * EV_J / (M_PER_INV_EV * M_PER_INV_EV)
}

/// Entropy per unit area: natural units (eV²) to J/(m²·K).
pub fn entropy_area_to_si(s_natural: f64) -> f64 {
    energy_area_to_si(s_natural) * KB_EV_PER_K
}

/// The dimensionless combination aT from boundary units.
pub fn a_t_product(a_um: f64, t_kelvin: f64) -> f64 {
    um_to_natural(a_um) * kelvin_to_ev(t_kelvin)
}
