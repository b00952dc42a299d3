//! Tabulated optical data and the Kramers–Kronig transform.
//!
//! Measured optical constants come as the complex refractive index
//! n = n′ + i n″ versus real frequency ω. The permittivity along the
//! imaginary frequency axis follows from the Kramers–Kronig relation
//!
//! ```text
//! eps(i zeta) = 1 + (2/pi) ∫ w eps''(w) / (w^2 + zeta^2) dw,   eps'' = 2 n' n''
//! ```
//!
//! which is real, ≥ 1, and monotonically decreasing in ζ. The integral runs
//! over the tabulated range; above the last point an ε″ ∝ ω⁻³ tail fitted to
//! the last decade of data is attached (bounded, integrable, and negligible
//! for ζ well below the cutoff). Precomputed ε(iζ) grids are stored as
//! [`SpectralTable`]s and interpolated log–log linearly in (ζ, ε−1).

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::quad;

/// One row of measured optical constants.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OpticalPoint {
    /// Photon energy (eV).
    pub omega: f64,
    /// Real part of the refractive index.
    pub n_re: f64,
    /// Imaginary part of the refractive index (extinction), ≥ 0.
    pub n_im: f64,
}

/// Ordered table of (ω, n′, n″) with strictly increasing ω.
#[derive(Debug, Clone, PartialEq)]
pub struct OpticalConstantsTable {
    points: Vec<OpticalPoint>,
    source: String,
}

impl OpticalConstantsTable {
    pub fn from_points(points: Vec<OpticalPoint>, source: impl Into<String>) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::InvalidParameter(
                "optical table needs at least 2 rows".into(),
            ));
        }
        for (i, p) in points.iter().enumerate() {
            if !p.omega.is_finite() || !p.n_re.is_finite() || !p.n_im.is_finite() {
                return Err(Error::InvalidParameter(format!(
                    "non-finite optical data in row {i}"
                )));
            }
            if p.omega <= 0.0 {
                return Err(Error::InvalidParameter(format!(
                    "omega must be positive in row {i}, got {}",
                    p.omega
                )));
            }
            if p.n_im < 0.0 || p.n_re < 0.0 {
                return Err(Error::InvalidParameter(format!(
                    "refractive index components must be non-negative in row {i}"
                )));
            }
            if i > 0 && p.omega <= points[i - 1].omega {
                return Err(Error::InvalidParameter(format!(
                    "omega not strictly increasing at row {i}"
                )));
            }
        }
        Ok(Self { points, source: source.into() })
    }

    pub fn points(&self) -> &[OpticalPoint] {
        &self.points
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    /// ε″(ω) = 2 n′ n″ at tabulated row `i`.
    fn eps_imag(&self, i: usize) -> f64 {
        2.0 * self.points[i].n_re * self.points[i].n_im
    }
}

/// Load a CSV of optical constants.
///
/// Format: three numeric columns `omega_ev,n_re,n_im`, one optional header
/// row, `#`-prefixed comment lines allowed. Errors carry the offending line
/// number.
pub fn load_optical_table(path: impl AsRef<Path>) -> Result<OpticalConstantsTable> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Ingest {
        path: path.display().to_string(),
        line: 0,
        msg: format!("cannot read file: {e}"),
    })?;
    let pathstr = path.display().to_string();
    let ingest = |line: usize, msg: String| Error::Ingest { path: pathstr.clone(), line, msg };

    let mut points = Vec::new();
    let mut prev_omega = f64::NEG_INFINITY;
    let mut header_allowed = true;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let cols: Vec<&str> = line.split(',').map(str::trim).collect();
        if cols.len() != 3 {
            return Err(ingest(lineno, format!("expected 3 columns, found {}", cols.len())));
        }
        let parsed: std::result::Result<Vec<f64>, _> =
            cols.iter().map(|c| c.parse::<f64>()).collect();
        let vals = match parsed {
            Ok(v) => v,
            Err(_) if header_allowed => {
                // A single leading header row is tolerated.
                header_allowed = false;
                continue;
            }
            Err(e) => return Err(ingest(lineno, format!("numeric parse failure: {e}"))),
        };
        header_allowed = false;
        let (omega, n_re, n_im) = (vals[0], vals[1], vals[2]);
        if !omega.is_finite() || omega <= 0.0 {
            return Err(ingest(lineno, format!("omega must be finite and positive, got {omega}")));
        }
        if omega <= prev_omega {
            return Err(ingest(
                lineno,
                format!("omega not strictly increasing ({omega} after {prev_omega})"),
            ));
        }
        if n_im < 0.0 {
            return Err(ingest(lineno, format!("negative n_im {n_im}")));
        }
        if n_re < 0.0 || !n_re.is_finite() || !n_im.is_finite() {
            return Err(ingest(lineno, "invalid refractive index".into()));
        }
        prev_omega = omega;
        points.push(OpticalPoint { omega, n_re, n_im });
    }
    if points.len() < 2 {
        return Err(ingest(0, format!("need at least 2 data rows, found {}", points.len())));
    }
    OpticalConstantsTable::from_points(points, pathstr)
}

/// Kramers–Kronig transform of an optical table at imaginary frequency ζ.
///
/// Integrates ω ε″/(ω²+ζ²) segment by segment with ε″ interpolated as a
/// power law between tabulated points, then adds the fitted ω⁻³ tail.
pub fn kramers_kronig(table: &OpticalConstantsTable, zeta: f64) -> Result<f64> {
    if !(zeta > 0.0) {
        return Err(Error::Domain(format!("Kramers-Kronig requires zeta > 0, got {zeta}")));
    }
    let pts = table.points();
    let mut total = 0.0;
    for i in 0..pts.len() - 1 {
        let (w0, w1) = (pts[i].omega, pts[i + 1].omega);
        let (e0, e1) = (table.eps_imag(i), table.eps_imag(i + 1));
        if e0 == 0.0 && e1 == 0.0 {
            continue;
        }
        // Power-law segment model; linear fallback when an endpoint vanishes.
        let integrand: Box<dyn Fn(f64) -> f64> = if e0 > 0.0 && e1 > 0.0 {
            let q = (e1 / e0).ln() / (w1 / w0).ln();
            Box::new(move |w: f64| {
                let eps2 = e0 * (w / w0).powf(q);
                w * eps2 / (w * w + zeta * zeta)
            })
        } else {
            Box::new(move |w: f64| {
                let t = (w - w0) / (w1 - w0);
                let eps2 = e0 + t * (e1 - e0);
                w * eps2 / (w * w + zeta * zeta)
            })
        };
        total += quad::integrate(|w| integrand(w), w0, w1, 1e-9, 0.0).value;
    }
    total += tail_integral(table, zeta);
    Ok(1.0 + std::f64::consts::FRAC_2_PI * total)
}

/// Contribution of the ε″ = c₃ ω⁻³ tail above the last tabulated frequency.
///
/// ∫_W^∞ ω·c₃ω⁻³/(ω²+ζ²) dω = (c₃/ζ²)(1/W − atan(ζ/W)/ζ), evaluated by
/// series for ζ ≪ W where the closed form cancels.
fn tail_integral(table: &OpticalConstantsTable, zeta: f64) -> f64 {
    let pts = table.points();
    let w_max = pts[pts.len() - 1].omega;
    // Fit c3 = <eps'' * w^3> over the last decade of data (log mean).
    let mut log_sum = 0.0;
    let mut n = 0usize;
    for i in 0..pts.len() {
        if pts[i].omega >= w_max / 10.0 {
            let e = table.eps_imag(i);
            if e > 0.0 {
                log_sum += (e * pts[i].omega.powi(3)).ln();
                n += 1;
            }
        }
    }
    if n == 0 {
        return 0.0;
    }
    let c3 = (log_sum / n as f64).exp();
    let x = zeta / w_max;
    if x < 0.5 {
        // (1/W^3) (1/3 - x^2/5 + x^4/7 - ...)
        let x2 = x * x;
        let mut term = 1.0 / 3.0;
        let mut series = term;
        let mut k = 1;
        loop {
            term = x2.powi(k) / (2 * k + 3) as f64 * if k % 2 == 0 { 1.0 } else { -1.0 };
            series += term;
            k += 1;
            if term.abs() < 1e-17 || k > 40 {
                break;
            }
        }
        c3 * series / (w_max * w_max * w_max)
    } else {
        c3 / (zeta * zeta) * (1.0 / w_max - x.atan() / zeta)
    }
}

/// Precompute ε(iζ) on a frequency grid via [`kramers_kronig`].
pub fn build_spectral_table(
    table: &OpticalConstantsTable,
    zeta_grid: &[f64],
) -> Result<SpectralTable> {
    if zeta_grid.is_empty() {
        return Err(Error::InvalidParameter("empty zeta grid".into()));
    }
    for (i, &z) in zeta_grid.iter().enumerate() {
        if !(z > 0.0) {
            return Err(Error::InvalidParameter(format!("grid entry {i} not positive: {z}")));
        }
        if i > 0 && z <= zeta_grid[i - 1] {
            return Err(Error::InvalidParameter(format!(
                "grid not strictly increasing at entry {i}"
            )));
        }
    }
    let entries: Result<Vec<(f64, f64)>> = zeta_grid
        .iter()
        .map(|&z| kramers_kronig(table, z).map(|eps| (z, eps)))
        .collect();
    SpectralTable::new(entries?, table.source())
}

/// Tabulated ε(iζ): strictly increasing ζ, strictly decreasing ε > 1.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralTable {
    entries: Vec<(f64, f64)>,
    source: String,
}

impl SpectralTable {
    pub fn new(entries: Vec<(f64, f64)>, source: impl Into<String>) -> Result<Self> {
        let source = source.into();
        if entries.len() < 2 {
            return Err(Error::InvalidParameter(format!(
                "spectral table '{source}' needs at least 2 entries, got {}",
                entries.len()
            )));
        }
        for (i, &(z, e)) in entries.iter().enumerate() {
            if !(z > 0.0) || !z.is_finite() {
                return Err(Error::InvalidParameter(format!(
                    "spectral table '{source}': zeta must be positive and finite at entry {i}"
                )));
            }
            if !(e > 1.0) || !e.is_finite() {
                return Err(Error::InvalidParameter(format!(
                    "spectral table '{source}': eps must be finite and > 1 at entry {i} (got {e})"
                )));
            }
            if i > 0 {
                if z <= entries[i - 1].0 {
                    return Err(Error::InvalidParameter(format!(
                        "spectral table '{source}': zeta not strictly increasing at entry {i}"
                    )));
                }
                if e >= entries[i - 1].1 {
                    return Err(Error::InvalidParameter(format!(
                        "spectral table '{source}': eps not strictly decreasing at entry {i}"
                    )));
                }
            }
        }
        Ok(Self { entries, source })
    }

    pub fn entries(&self) -> &[(f64, f64)] {
        &self.entries
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    /// ε(iζ) by log–log linear interpolation of ε−1.
    ///
    /// Below the grid the permittivity extrapolates with the Drude form
    /// ε−1 ∝ 1/ζ anchored at the first point; above it with ε−1 ∝ 1/ζ²
    /// anchored at the last. Grid nodes reproduce the stored values exactly.
    /// Total on ζ > 0 (non-positive ζ is a caller bug).
    pub fn interpolate(&self, zeta: f64) -> f64 {
        assert!(zeta > 0.0, "interpolate requires zeta > 0, got {zeta}");
        let n = self.entries.len();
        let (z_first, e_first) = self.entries[0];
        let (z_last, e_last) = self.entries[n - 1];
        if zeta < z_first {
            return 1.0 + (e_first - 1.0) * z_first / zeta;
        }
        if zeta > z_last {
            let r = z_last / zeta;
            return 1.0 + (e_last - 1.0) * r * r;
        }
        match self
            .entries
            .binary_search_by(|probe| probe.0.partial_cmp(&zeta).unwrap())
        {
            Ok(i) => self.entries[i].1,
            Err(i) => {
                let (z0, e0) = self.entries[i - 1];
                let (z1, e1) = self.entries[i];
                let t = (zeta / z0).ln() / (z1 / z0).ln();
                1.0 + ((e0 - 1.0).ln() + t * ((e1 - 1.0) / (e0 - 1.0)).ln()).exp()
            }
        }
    }

    /// Serialize as `zeta_ev,eps` CSV (the caching format).
    pub fn to_csv(&self) -> String {
        let mut out = String::from("zeta_ev,eps\n");
        for &(z, e) in &self.entries {
            let _ = writeln!(out, "{z:.9e},{e:.9e}");
        }
        out
    }

    pub fn write_csv(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path.as_ref(), self.to_csv()).map_err(|e| Error::Ingest {
            path: path.as_ref().display().to_string(),
            line: 0,
            msg: format!("cannot write: {e}"),
        })
    }

    /// Load a `zeta_ev,eps` CSV produced by [`SpectralTable::to_csv`].
    pub fn from_csv(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::Ingest {
            path: path.display().to_string(),
            line: 0,
            msg: format!("cannot read file: {e}"),
        })?;
        let pathstr = path.display().to_string();
        let mut entries = Vec::new();
        let mut header_allowed = true;
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let cols: Vec<&str> = line.split(',').map(str::trim).collect();
            if cols.len() != 2 {
                return Err(Error::Ingest {
                    path: pathstr,
                    line: idx + 1,
                    msg: format!("expected 2 columns, found {}", cols.len()),
                });
            }
            match (cols[0].parse::<f64>(), cols[1].parse::<f64>()) {
                (Ok(z), Ok(e)) => {
                    header_allowed = false;
                    entries.push((z, e));
                }
                _ if header_allowed => {
                    header_allowed = false;
                }
                _ => {
                    return Err(Error::Ingest {
                        path: pathstr,
                        line: idx + 1,
                        msg: "numeric parse failure".into(),
                    })
                }
            }
        }
        Self::new(entries, pathstr)
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::dispersion::{eps_drude, DrudeParams};
    use approx::assert_relative_eq;
    use std::io::Write;

    /// Synthetic gold optical table from the Drude model on a log grid.
    ///
    /// Real-frequency Drude: eps'(w) = 1 - wp^2/(w^2+nu^2),
    /// eps''(w) = wp^2 nu / (w (w^2+nu^2)); n from the principal square root,
    /// so that 2 n' n'' reconstructs eps'' exactly.
    pub(crate) fn synthetic_drude_table(
        w_min: f64,
        w_max: f64,
        per_decade: usize,
    ) -> OpticalConstantsTable {
        let gold = DrudeParams::gold();
        let decades = (w_max / w_min).log10();
        let n = (decades * per_decade as f64).ceil() as usize + 1;
        let mut points = Vec::with_capacity(n);
        for i in 0..n {
            let w = w_min * 10f64.powf(decades * i as f64 / (n - 1) as f64);
            let (wp, nu) = (gold.omega_p, gold.nu);
            let e_re = 1.0 - wp * wp / (w * w + nu * nu);
            let e_im = wp * wp * nu / (w * (w * w + nu * nu));
            let modulus = e_re.hypot(e_im);
            let n_re = ((modulus + e_re) / 2.0).sqrt();
            let n_im = ((modulus - e_re) / 2.0).sqrt();
            points.push(OpticalPoint { omega: w, n_re, n_im });
        }
        OpticalConstantsTable::from_points(points, "drude-synthetic").unwrap()
    }

    #[test]
    fn synthetic_table_reconstructs_eps_imag() {
        let t = synthetic_drude_table(1e-4, 1e3, 16);
        let gold = DrudeParams::gold();
        for (i, p) in t.points().iter().enumerate() {
            let expected =
                gold.omega_p.powi(2) * gold.nu / (p.omega * (p.omega * p.omega + gold.nu * gold.nu));
            assert_relative_eq!(t.eps_imag(i), expected, max_relative = 1e-12);
        }
    }

    #[test]
    fn kramers_kronig_matches_drude_oracle() {
        let t = synthetic_drude_table(1e-7, 1e4, 20);
        let gold = DrudeParams::gold();
        for &zeta in &[1e-3, 1e-2, 0.1, 1.0, 10.0] {
            let kk = kramers_kronig(&t, zeta).unwrap();
            let oracle = eps_drude(zeta, &gold).unwrap();
            assert_relative_eq!(kk, oracle, max_relative = 1e-2);
        }
    }

    #[test]
    fn kramers_kronig_vacuum_and_monotonicity() {
        let points = vec![
            OpticalPoint { omega: 0.1, n_re: 1.0, n_im: 0.0 },
            OpticalPoint { omega: 1.0, n_re: 1.0, n_im: 0.0 },
            OpticalPoint { omega: 10.0, n_re: 1.0, n_im: 0.0 },
        ];
        let vac = OpticalConstantsTable::from_points(points, "vacuum").unwrap();
        assert_eq!(kramers_kronig(&vac, 0.5).unwrap(), 1.0);

        let t = synthetic_drude_table(1e-5, 1e3, 12);
        let mut prev = f64::INFINITY;
        for &zeta in &[1e-3, 1e-2, 0.1, 1.0, 10.0, 100.0] {
            let kk = kramers_kronig(&t, zeta).unwrap();
            assert!(kk < prev && kk >= 1.0);
            prev = kk;
        }
        assert!(kramers_kronig(&t, 0.0).is_err());
    }

    #[test]
    fn build_spectral_table_against_oracle() {
        let t = synthetic_drude_table(1e-7, 1e4, 20);
        let gold = DrudeParams::gold();
        let grid: Vec<f64> = (0..=28).map(|i| 1e-4 * 10f64.powf(0.25 * i as f64)).collect();
        let spectral = build_spectral_table(&t, &grid).unwrap();
        for &(z, e) in spectral.entries() {
            assert_relative_eq!(e, eps_drude(z, &gold).unwrap(), max_relative = 1e-2);
        }
        // Minimal grid and empty grid.
        assert_eq!(build_spectral_table(&t, &[0.1, 1.0]).unwrap().entries().len(), 2);
        assert!(build_spectral_table(&t, &[]).is_err());
    }

    #[test]
    fn interpolation_identities() {
        let entries = vec![(0.1, 101.0), (1.0, 11.0), (10.0, 2.0)];
        let table = SpectralTable::new(entries, "test").unwrap();
        // Nodes reproduce stored values bit for bit.
        assert_eq!(table.interpolate(0.1), 101.0);
        assert_eq!(table.interpolate(1.0), 11.0);
        assert_eq!(table.interpolate(10.0), 2.0);
        // Geometric-mean node: eps-1 is the geometric mean of neighbours.
        let mid = (0.1f64 * 1.0).sqrt();
        let expected = 1.0 + (100.0f64 * 10.0).sqrt();
        assert_relative_eq!(table.interpolate(mid), expected, max_relative = 1e-12);
    }

    #[test]
    fn interpolation_continuous_across_boundaries() {
        let t = synthetic_drude_table(1e-5, 1e3, 12);
        let grid: Vec<f64> = (0..=24).map(|i| 1e-3 * 10f64.powf(0.25 * i as f64)).collect();
        let table = build_spectral_table(&t, &grid).unwrap();
        let eps = 1e-9;
        for &z in &[1e-3, 1e3, 0.05623] {
            let lo = table.interpolate(z * (1.0 - eps));
            let hi = table.interpolate(z * (1.0 + eps));
            assert_relative_eq!(lo, hi, max_relative = 1e-6);
        }
    }

    #[test]
    fn interpolation_off_grid_matches_drude() {
        let t = synthetic_drude_table(1e-7, 1e4, 20);
        let grid: Vec<f64> = (0..=56).map(|i| 1e-4 * 10f64.powf(0.125 * i as f64)).collect();
        let table = build_spectral_table(&t, &grid).unwrap();
        let gold = DrudeParams::gold();
        for &z in &[3.3e-4, 7.7e-3, 0.033, 0.77, 3.3, 33.0] {
            assert_relative_eq!(
                table.interpolate(z),
                eps_drude(z, &gold).unwrap(),
                max_relative = 2e-2
            );
        }
        // Drude-form extrapolation below the grid.
        assert_relative_eq!(
            table.interpolate(1e-5),
            eps_drude(1e-5, &gold).unwrap(),
            max_relative = 3e-2
        );
    }

    #[test]
    fn csv_ingestion_and_validation() {
        let mut good = tempfile::NamedTempFile::new().unwrap();
        writeln!(good, "omega_ev,n_re,n_im").unwrap();
        writeln!(good, "# synthetic rows").unwrap();
        for i in 0..100 {
            let w = 0.1 + i as f64 * 0.05;
            writeln!(good, "{w},{},{}", 1.5 + i as f64 * 1e-3, 0.2).unwrap();
        }
        let table = load_optical_table(good.path()).unwrap();
        assert_eq!(table.points().len(), 100);

        // The stated experimental range ingests fine.
        let mut range = tempfile::NamedTempFile::new().unwrap();
        writeln!(range, "0.1,1.0,0.5\n1.0,0.9,0.3\n10000,0.8,0.01").unwrap();
        assert_eq!(load_optical_table(range.path()).unwrap().points().len(), 3);

        // Out-of-order omega names the offending line.
        let mut bad = tempfile::NamedTempFile::new().unwrap();
        writeln!(bad, "0.1,1.0,0.5\n0.3,1.0,0.4\n0.2,1.0,0.3").unwrap();
        match load_optical_table(bad.path()) {
            Err(Error::Ingest { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected ingest error, got {other:?}"),
        }

        // Negative extinction rejected.
        let mut neg = tempfile::NamedTempFile::new().unwrap();
        writeln!(neg, "0.1,1.0,0.5\n0.3,1.0,-0.1").unwrap();
        match load_optical_table(neg.path()) {
            Err(Error::Ingest { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected ingest error, got {other:?}"),
        }
    }

    #[test]
    fn spectral_csv_round_trip() {
        let entries = vec![(0.1, 101.0), (1.0, 11.0), (10.0, 2.0)];
        let table = SpectralTable::new(entries, "test").unwrap();
        let tmp = tempfile::NamedTempFile::new().unwrap();
        table.write_csv(tmp.path()).unwrap();
        let back = SpectralTable::from_csv(tmp.path()).unwrap();
        for (a, b) in table.entries().iter().zip(back.entries()) {
            assert_relative_eq!(a.0, b.0, max_relative = 1e-12);
            assert_relative_eq!(a.1, b.1, max_relative = 1e-12);
        }
    }
}
