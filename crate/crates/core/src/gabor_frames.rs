//! Gabor frames over a lattice: bounds, canonical dual and tight windows,
//! and the Wexler-Raz duality conditions on the adjoint lattice.

use std::fmt;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::hilbert_module::{janssen_coefficients, rank_one, ModulePair};
use crate::lattice::redundancy;
use crate::numerics::{cg_solve, jacobi_eig, lu_solve, EigenDecomposition, HermitianOperator, CG_TOLERANCE};
use crate::operator::OperatorMatrix;
use crate::phase_space::{inner, tf_shift, tf_shift_adjoint, PhasePoint, Signal, C64};

/// A lower frame bound at or below this is reported as zero (no frame).
pub const FRAME_TOLERANCE: f64 = 1e-10;
pub const WEXLER_RAZ_TOLERANCE: f64 = 1e-8;
/// Eigenvalues below this make `S^{-1/2}` undefined.
pub const SQRT_CLAMP: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct FrameReport {
    pub lower_bound: f64,
    pub upper_bound: f64,
    pub is_frame: bool,
    pub redundancy: Ratio<usize>,
    /// `B / A`, infinite when the system is not a frame.
    pub condition_number: f64,
}

impl fmt::Display for FrameReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "redundancy: {}", self.redundancy)?;
        writeln!(f, "lower_bound: {:.16e}", self.lower_bound)?;
        writeln!(f, "upper_bound: {:.16e}", self.upper_bound)?;
        if self.condition_number.is_finite() {
            writeln!(f, "condition_number: {:.16e}", self.condition_number)?;
        } else {
            writeln!(f, "condition_number: inf")?;
        }
        write!(f, "is_frame: {}", self.is_frame)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct WexlerRazReport {
    /// `(|Lambda| / N) <g, pi(mu) gamma> - [mu = 0]` for every adjoint point.
    pub residuals: Vec<(PhasePoint, C64)>,
    pub max_residual: f64,
    pub passes: bool,
}

/// `S_g f = sum <f, pi(lambda) g> pi(lambda) g`.
pub fn frame_operator(g: &Signal, m: &ModulePair) -> Result<OperatorMatrix> {
    rank_one(g, g, m)
}

fn frame_eigen(g: &Signal, m: &ModulePair) -> Result<EigenDecomposition> {
    let s = frame_operator(g, m)?;
    let s = OperatorMatrix::from_fn(s.dim(), |i, j| 0.5 * (s[(i, j)] + s[(j, i)].conj()));
    jacobi_eig(&s)
}

fn report_from(eig: &EigenDecomposition, m: &ModulePair) -> FrameReport {
    let raw_lower = eig.min();
    let upper_bound = eig.max().max(0.0);
    let is_frame = raw_lower > FRAME_TOLERANCE;
    let lower_bound = if is_frame { raw_lower } else { 0.0 };
    FrameReport {
        lower_bound,
        upper_bound,
        is_frame,
        redundancy: redundancy(m.lattice()),
        condition_number: if is_frame {
            upper_bound / lower_bound
        } else {
            f64::INFINITY
        },
    }
}

/// Optimal frame bounds as the extreme eigenvalues of the frame operator.
pub fn frame_bounds(g: &Signal, m: &ModulePair) -> Result<FrameReport> {
    Ok(report_from(&frame_eigen(g, m)?, m))
}

/// `gamma_0 = S_g^{-1} g`, by conjugate gradients on the frame operator.
pub fn canonical_dual(g: &Signal, m: &ModulePair) -> Result<Signal> {
    let report = frame_bounds(g, m)?;
    if !report.is_frame {
        return Err(Error::NotAFrame {
            lower_bound: report.lower_bound,
        });
    }
    let s = frame_operator(g, m)?;
    let op = HermitianOperator::from_matrix(&s)?;
    cg_solve(&op, g, CG_TOLERANCE)
}

/// `h = S_g^{-1/2} g`, whose frame operator is the identity.
pub fn tight_window(g: &Signal, m: &ModulePair) -> Result<Signal> {
    let eig = frame_eigen(g, m)?;
    let report = report_from(&eig, m);
    if !report.is_frame || eig.min() < SQRT_CLAMP {
        return Err(Error::NotAFrame {
            lower_bound: report.lower_bound,
        });
    }
    eig.map_spectrum(|l| 1.0 / l.sqrt()).apply(g)
}

/// Residuals of the Wexler-Raz condition `(|Lambda| / N) <g, pi(mu) gamma> = [mu = 0]`
/// over the adjoint lattice. Passing is equivalent to `rank_one(gamma, g) = Id`.
pub fn wexler_raz_check(g: &Signal, gamma: &Signal, m: &ModulePair) -> Result<WexlerRazReport> {
    let janssen = janssen_coefficients(g, gamma, m)?;
    Ok(report_from_coefficients(janssen.iter()))
}

fn report_from_coefficients(coeffs: impl Iterator<Item = (PhasePoint, C64)>) -> WexlerRazReport {
    let residuals: Vec<(PhasePoint, C64)> = coeffs
        .map(|(p, c)| {
            let target = if p.is_origin() { 1.0 } else { 0.0 };
            (p, c - target)
        })
        .collect();
    let max_residual = residuals.iter().map(|(_, r)| r.norm()).fold(0.0, f64::max);
    WexlerRazReport {
        residuals,
        max_residual,
        passes: max_residual < WEXLER_RAZ_TOLERANCE,
    }
}

/// Whether `<pi(lambda) gamma, pi(mu) g> = (N / |Lambda|) [lambda = mu]` for all
/// adjoint points `lambda, mu`.
pub fn biorthogonality_check(g: &Signal, gamma: &Signal, m: &ModulePair) -> Result<bool> {
    let len = m.size().get();
    g.check_len(len)?;
    gamma.check_len(len)?;
    let target = 1.0 / m.redundancy();
    let shifted_g: Vec<Signal> = m.adjoint().points().iter().map(|&p| tf_shift(g, p)).collect();
    for (i, &p) in m.adjoint().points().iter().enumerate() {
        let sg = tf_shift(gamma, p);
        for (j, other) in shifted_g.iter().enumerate() {
            let want = if i == j { target } else { 0.0 };
            if (inner(&sg, other)? - want).norm() >= WEXLER_RAZ_TOLERANCE {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `sum_i rank_one(gamma_i, g_i)` for pairs `(g_i, gamma_i)`.
pub fn multiwindow_frame_operator(pairs: &[(Signal, Signal)], m: &ModulePair) -> Result<OperatorMatrix> {
    let (first, rest) = pairs.split_first().ok_or(Error::Empty("window pairs"))?;
    let mut total = rank_one(&first.1, &first.0, m)?;
    for (g, gamma) in rest {
        total = total.add(&rank_one(gamma, g, m)?)?;
    }
    Ok(total)
}

/// Summed Wexler-Raz residuals `(|Lambda| / N) sum_i <g_i, pi(mu) gamma_i> - [mu = 0]`.
pub fn multiwindow_wexler_raz(pairs: &[(Signal, Signal)], m: &ModulePair) -> Result<WexlerRazReport> {
    if pairs.is_empty() {
        return Err(Error::Empty("window pairs"));
    }
    let mut sums = vec![C64::new(0.0, 0.0); m.adjoint().len()];
    for (g, gamma) in pairs {
        for (slot, (_, c)) in sums.iter_mut().zip(janssen_coefficients(g, gamma, m)?.iter()) {
            *slot += c;
        }
    }
    Ok(report_from_coefficients(
        m.adjoint().points().iter().copied().zip(sums),
    ))
}

/// Minimum-norm dual windows `(gamma_1, ..., gamma_k)` for `windows`, from the
/// joint linear Wexler-Raz system `sum_i <pi(mu) gamma_i, g_i> = (N / |Lambda|) [mu = 0]`.
pub fn wexler_raz_duals(windows: &[Signal], m: &ModulePair) -> Result<Vec<Signal>> {
    if windows.is_empty() {
        return Err(Error::Empty("windows"));
    }
    let n = m.size();
    let len = n.get();
    for w in windows {
        w.check_len(len)?;
    }
    // Row for mu: the conjugated entries of pi(mu)^* g_i, windows concatenated.
    let rows: Vec<Vec<C64>> = m
        .adjoint()
        .points()
        .iter()
        .map(|&p| {
            windows
                .iter()
                .flat_map(|g| tf_shift_adjoint(g, p).into_values())
                .map(|z| z.conj())
                .collect()
        })
        .collect();
    let k = rows.len();
    let gram = OperatorMatrix::from_fn(k, |i, j| {
        rows[i].iter().zip(&rows[j]).map(|(a, b)| a * b.conj()).sum()
    });
    let rhs: Vec<C64> = m
        .adjoint()
        .points()
        .iter()
        .map(|p| C64::new(if p.is_origin() { 1.0 / m.redundancy() } else { 0.0 }, 0.0))
        .collect();
    let y = lu_solve(&gram, &rhs)?;
    let mut stacked = vec![C64::new(0.0, 0.0); windows.len() * len];
    for (row, yi) in rows.iter().zip(&y) {
        for (s, a) in stacked.iter_mut().zip(row) {
            *s += a.conj() * yi;
        }
    }
    stacked
        .chunks(len)
        .map(|chunk| Signal::new(chunk.to_vec()))
        .collect()
}
