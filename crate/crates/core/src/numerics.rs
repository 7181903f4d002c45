//! Small dense numerical kernels: conjugate gradients, cyclic complex Jacobi,
//! power iteration and partially pivoted LU.
//!
//! Everything here is single-threaded and deterministic. Random start vectors
//! come from a fixed seed so repeated calls give identical output.

use rand::{RngExt, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

use crate::error::{Error, Result};
use crate::operator::OperatorMatrix;
use crate::phase_space::{inner_unchecked, Signal, C64};

/// Seed for every internally generated probe or start vector.
pub const NUMERICS_SEED: u64 = 0x5EED;

/// Relative residual target for [`cg_solve`] when called from frame code.
pub const CG_TOLERANCE: f64 = 1e-12;
/// Off-diagonal Frobenius threshold (relative to `||M||_F`) for Jacobi.
pub const JACOBI_THRESHOLD: f64 = 1e-13;
pub const JACOBI_MAX_SWEEPS: usize = 40;
/// Pivots below this fraction of the largest entry are treated as zero.
pub const LU_PIVOT_THRESHOLD: f64 = 1e-13;
/// LU growth factors above this are logged.
pub const LU_GROWTH_WARNING: f64 = 1e6;

const HERMITIAN_PROBE_TOL: f64 = 1e-10;
const POWER_MAX_ITERATIONS: usize = 200_000;
const POWER_TOLERANCE: f64 = 1e-13;

fn zero() -> C64 {
    C64::new(0.0, 0.0)
}

fn norm(v: &[C64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub(crate) fn random_vector(rng: &mut Xoshiro256PlusPlus, dim: usize) -> Vec<C64> {
    (0..dim)
        .map(|_| C64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5))
        .collect()
}

type ApplyFn<'a> = dyn Fn(&[C64]) -> Vec<C64> + Send + Sync + 'a;

/// A linear map that has been checked to be self-adjoint on random probes.
pub struct HermitianOperator<'a> {
    dim: usize,
    apply: Box<ApplyFn<'a>>,
}

impl<'a> HermitianOperator<'a> {
    pub fn new(dim: usize, apply: impl Fn(&[C64]) -> Vec<C64> + Send + Sync + 'a) -> Result<Self> {
        let op = HermitianOperator {
            dim,
            apply: Box::new(apply),
        };
        let mut rng = Xoshiro256PlusPlus::seed_from_u64(NUMERICS_SEED);
        let mut deviation = 0.0f64;
        for _ in 0..3 {
            let f = random_vector(&mut rng, dim);
            let g = random_vector(&mut rng, dim);
            let af = op.apply(&f);
            let ag = op.apply(&g);
            if af.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: af.len(),
                });
            }
            let lhs = inner_unchecked(&af, &g);
            let rhs = inner_unchecked(&f, &ag);
            let scale = 1.0f64.max(norm(&af) * norm(&g)).max(norm(&f) * norm(&ag));
            deviation = deviation.max((lhs - rhs).norm() / scale);
        }
        if deviation > HERMITIAN_PROBE_TOL {
            return Err(Error::NotHermitian { deviation });
        }
        Ok(op)
    }

    pub fn from_matrix(m: &'a OperatorMatrix) -> Result<Self> {
        Self::new(m.dim(), move |v| m.apply_slice(v))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn apply(&self, v: &[C64]) -> Vec<C64> {
        (self.apply)(v)
    }
}

impl std::fmt::Debug for HermitianOperator<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("HermitianOperator").field("dim", &self.dim).finish()
    }
}

/// Solves `op x = b` for a Hermitian positive definite `op` by conjugate
/// gradients, stopping at `||op x - b|| <= tol ||b||`.
pub fn cg_solve(op: &HermitianOperator<'_>, b: &Signal, tol: f64) -> Result<Signal> {
    b.check_len(op.dim())?;
    Signal::new(cg_solve_slice(op, b.values(), tol)?)
}

pub(crate) fn cg_solve_slice(op: &HermitianOperator<'_>, b: &[C64], tol: f64) -> Result<Vec<C64>> {
    let dim = op.dim();
    let b_norm = norm(b);
    let mut x = vec![zero(); dim];
    if b_norm == 0.0 {
        return Ok(x);
    }
    let target = tol * b_norm;
    let max_iterations = 10 * dim.max(1);
    let mut r = b.to_vec();
    let mut p = r.clone();
    let mut rs = norm(&r).powi(2);
    let mut iterations = 0;
    while iterations < max_iterations {
        if rs.sqrt() <= target {
            // Recurrence residuals drift; confirm against the true residual
            // and restart from the current iterate if needed.
            let ax = op.apply(&x);
            r = b.iter().zip(&ax).map(|(bi, ai)| bi - ai).collect();
            rs = norm(&r).powi(2);
            if rs.sqrt() <= target {
                return Ok(x);
            }
            p = r.clone();
        }
        let ap = op.apply(&p);
        let curvature = inner_unchecked(&ap, &p).re;
        let p_norm_sqr = norm(&p).powi(2);
        if curvature < -1e-12 * p_norm_sqr || curvature <= 0.0 {
            return Err(Error::NotPositiveDefinite {
                curvature: curvature / p_norm_sqr,
            });
        }
        let alpha = rs / curvature;
        for i in 0..dim {
            x[i] += alpha * p[i];
            r[i] -= alpha * ap[i];
        }
        let rs_new = norm(&r).powi(2);
        let beta = rs_new / rs;
        for i in 0..dim {
            p[i] = r[i] + beta * p[i];
        }
        rs = rs_new;
        iterations += 1;
    }
    let ax = op.apply(&x);
    let residual = norm(&b.iter().zip(&ax).map(|(bi, ai)| bi - ai).collect::<Vec<_>>());
    if residual <= target {
        return Ok(x);
    }
    Err(Error::NonConvergence {
        iterations,
        residual: residual / b_norm,
    })
}

/// Eigendecomposition `M = V diag(values) V^H` of a Hermitian matrix, values
/// ascending, eigenvectors stored as the columns of `vectors`.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub values: Vec<f64>,
    pub vectors: OperatorMatrix,
}

impl EigenDecomposition {
    pub fn min(&self) -> f64 {
        self.values.first().copied().unwrap_or(0.0)
    }

    pub fn max(&self) -> f64 {
        self.values.last().copied().unwrap_or(0.0)
    }

    /// `V diag(f(values)) V^H`.
    pub fn map_spectrum(&self, f: impl Fn(f64) -> f64) -> OperatorMatrix {
        let dim = self.values.len();
        let mut out = OperatorMatrix::zeros(dim);
        for (k, &lambda) in self.values.iter().enumerate() {
            let col = self.vectors.column(k);
            out.add_outer(C64::new(f(lambda), 0.0), &col, &col);
        }
        out
    }

    pub fn reconstruct(&self) -> OperatorMatrix {
        self.map_spectrum(|l| l)
    }
}

/// Cyclic Jacobi eigendecomposition for complex Hermitian matrices.
pub fn jacobi_eig(m: &OperatorMatrix) -> Result<EigenDecomposition> {
    let dim = m.dim();
    let scale = m.frobenius_norm();
    let deviation = m.hermitian_deviation();
    if deviation > HERMITIAN_PROBE_TOL * scale.max(1.0) {
        return Err(Error::NotHermitian { deviation });
    }
    let mut a = m.clone();
    let mut v = OperatorMatrix::identity(dim);
    let threshold = JACOBI_THRESHOLD * scale;

    let off_norm = |a: &OperatorMatrix| -> f64 {
        let mut s = 0.0;
        for i in 0..dim {
            for j in 0..dim {
                if i != j {
                    s += a[(i, j)].norm_sqr();
                }
            }
        }
        s.sqrt()
    };

    let mut sweeps = 0;
    while off_norm(&a) > threshold {
        if sweeps == JACOBI_MAX_SWEEPS {
            return Err(Error::NonConvergence {
                iterations: sweeps,
                residual: off_norm(&a) / scale,
            });
        }
        for p in 0..dim {
            for q in (p + 1)..dim {
                rotate(&mut a, &mut v, p, q);
            }
        }
        sweeps += 1;
    }

    let mut order: Vec<usize> = (0..dim).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let vectors = OperatorMatrix::from_fn(dim, |i, k| v[(i, order[k])]);
    Ok(EigenDecomposition { values, vectors })
}

/// One Jacobi rotation annihilating `a[p][q]`. The 2x2 unitary is
/// `diag(1, e^{-i phi})` (making the pivot real) followed by a real rotation.
fn rotate(a: &mut OperatorMatrix, v: &mut OperatorMatrix, p: usize, q: usize) {
    let b = a[(p, q)];
    let b_abs = b.norm();
    if b_abs == 0.0 {
        return;
    }
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let phase = b.conj() / b_abs;
    let tau = (aqq - app) / (2.0 * b_abs);
    let t = if tau == 0.0 {
        1.0
    } else {
        tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    let jpp = C64::new(c, 0.0);
    let jpq = C64::new(s, 0.0);
    let jqp = -s * phase;
    let jqq = c * phase;
    let dim = a.dim();

    for k in 0..dim {
        let (akp, akq) = (a[(k, p)], a[(k, q)]);
        a[(k, p)] = akp * jpp + akq * jqp;
        a[(k, q)] = akp * jpq + akq * jqq;
    }
    for k in 0..dim {
        let (apk, aqk) = (a[(p, k)], a[(q, k)]);
        a[(p, k)] = jpp.conj() * apk + jqp.conj() * aqk;
        a[(q, k)] = jpq.conj() * apk + jqq.conj() * aqk;
    }
    for k in 0..dim {
        let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
        v[(k, p)] = vkp * jpp + vkq * jqp;
        v[(k, q)] = vkp * jpq + vkq * jqq;
    }
    a[(p, q)] = zero();
    a[(q, p)] = zero();
    a[(p, p)] = C64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = C64::new(a[(q, q)].re, 0.0);
}

/// Smallest and largest eigenvalue of a Hermitian operator by power iteration.
///
/// The dominant magnitude `nu` is found first; the maximum is then the top of
/// `op + nu I` and the minimum comes from `nu I - op`, both of which are
/// positive semidefinite.
pub fn extreme_eigs(op: &HermitianOperator<'_>) -> Result<(f64, f64)> {
    let nu = power_iteration(op.dim(), |v| op.apply(v))?.abs();
    if nu == 0.0 {
        return Ok((0.0, 0.0));
    }
    let shifted_up = power_iteration(op.dim(), |v| {
        let mut out = op.apply(v);
        for (o, x) in out.iter_mut().zip(v) {
            *o += nu * x;
        }
        out
    })?;
    let shifted_down = power_iteration(op.dim(), |v| {
        let out = op.apply(v);
        out.iter().zip(v).map(|(o, x)| nu * x - o).collect()
    })?;
    Ok((nu - shifted_down, shifted_up - nu))
}

/// Rayleigh quotient of the dominant eigenvector.
fn power_iteration(dim: usize, apply: impl Fn(&[C64]) -> Vec<C64>) -> Result<f64> {
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(NUMERICS_SEED);
    let mut v = random_vector(&mut rng, dim);
    let n0 = norm(&v);
    v.iter_mut().for_each(|z| *z /= n0);
    let mut theta = f64::NAN;
    let mut settled = 0;
    for _ in 0..POWER_MAX_ITERATIONS {
        let w = apply(&v);
        let next = inner_unchecked(&w, &v).re;
        let w_norm = norm(&w);
        if w_norm == 0.0 {
            return Ok(0.0);
        }
        if (next - theta).abs() <= POWER_TOLERANCE * next.abs().max(w_norm) {
            settled += 1;
            if settled >= 3 {
                return Ok(next);
            }
        } else {
            settled = 0;
        }
        theta = next;
        v = w.into_iter().map(|z| z / w_norm).collect();
    }
    Err(Error::NonConvergence {
        iterations: POWER_MAX_ITERATIONS,
        residual: f64::NAN,
    })
}

/// `PA = LU` with partial pivoting.
#[derive(Debug, Clone)]
pub struct LuDecomposition {
    dim: usize,
    lu: Vec<C64>,
    perm: Vec<usize>,
    growth_factor: f64,
}

impl LuDecomposition {
    pub fn new(m: &OperatorMatrix) -> Result<Self> {
        let dim = m.dim();
        let mut lu = m.entries().to_vec();
        let mut perm: Vec<usize> = (0..dim).collect();
        let max_in = m.max_abs();
        let threshold = LU_PIVOT_THRESHOLD * max_in;
        for col in 0..dim {
            let (pivot_row, pivot_abs) = (col..dim)
                .map(|r| (r, lu[r * dim + col].norm()))
                .fold((col, -1.0), |best, cur| if cur.1 > best.1 { cur } else { best });
            if pivot_abs <= threshold || pivot_abs == 0.0 {
                return Err(Error::Singular {
                    column: col,
                    pivot: pivot_abs,
                });
            }
            if pivot_row != col {
                for j in 0..dim {
                    lu.swap(col * dim + j, pivot_row * dim + j);
                }
                perm.swap(col, pivot_row);
            }
            let pivot = lu[col * dim + col];
            for r in (col + 1)..dim {
                let factor = lu[r * dim + col] / pivot;
                lu[r * dim + col] = factor;
                if factor == zero() {
                    continue;
                }
                for j in (col + 1)..dim {
                    let u = lu[col * dim + j];
                    lu[r * dim + j] -= factor * u;
                }
            }
        }
        let max_u = (0..dim)
            .flat_map(|i| (i..dim).map(move |j| (i, j)))
            .map(|(i, j)| lu[i * dim + j].norm())
            .fold(0.0, f64::max);
        let growth_factor = if max_in > 0.0 { max_u / max_in } else { 1.0 };
        if growth_factor > LU_GROWTH_WARNING {
            log::warn!("LU growth factor {growth_factor:e} exceeds {LU_GROWTH_WARNING:e}");
        }
        Ok(LuDecomposition {
            dim,
            lu,
            perm,
            growth_factor,
        })
    }

    pub fn growth_factor(&self) -> f64 {
        self.growth_factor
    }

    pub fn solve(&self, b: &[C64]) -> Result<Vec<C64>> {
        let dim = self.dim;
        if b.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: b.len(),
            });
        }
        let mut y: Vec<C64> = self.perm.iter().map(|&p| b[p]).collect();
        for i in 0..dim {
            let row = &self.lu[i * dim..i * dim + i];
            let dot: C64 = row.iter().zip(&y[..i]).map(|(l, v)| l * v).sum();
            y[i] -= dot;
        }
        for i in (0..dim).rev() {
            let row = &self.lu[i * dim + i + 1..(i + 1) * dim];
            let dot: C64 = row.iter().zip(&y[i + 1..]).map(|(u, v)| u * v).sum();
            y[i] = (y[i] - dot) / self.lu[i * dim + i];
        }
        Ok(y)
    }
}

/// Solves `M x = b`, certifying `||M x - b|| <= 1e-10 ||b||` (one step of
/// iterative refinement is applied first).
pub fn lu_solve(m: &OperatorMatrix, b: &[C64]) -> Result<Vec<C64>> {
    let lu = LuDecomposition::new(m)?;
    let mut x = lu.solve(b)?;
    let residual = |x: &[C64]| -> Vec<C64> {
        m.apply_slice(x).iter().zip(b).map(|(ax, bi)| bi - ax).collect()
    };
    let r = residual(&x);
    let correction = lu.solve(&r)?;
    for (xi, ci) in x.iter_mut().zip(&correction) {
        *xi += ci;
    }
    let res = norm(&residual(&x));
    let b_norm = norm(b);
    if res > 1e-10 * b_norm {
        return Err(Error::NotInvertible {
            residual: res / b_norm.max(f64::MIN_POSITIVE),
        });
    }
    Ok(x)
}

/// Dense inverse through LU, column by column.
pub fn inverse(m: &OperatorMatrix) -> Result<OperatorMatrix> {
    let dim = m.dim();
    let lu = LuDecomposition::new(m)?;
    let mut out = OperatorMatrix::zeros(dim);
    for j in 0..dim {
        let mut e = vec![zero(); dim];
        e[j] = C64::new(1.0, 0.0);
        let col = lu.solve(&e)?;
        for (i, z) in col.into_iter().enumerate() {
            out[(i, j)] = z;
        }
    }
    Ok(out)
}

/// Numerical rank of a rectangular matrix given as rows, by Gaussian
/// elimination with full pivoting; entries below `rel_tol * max|entry|` count
/// as zero.
pub fn matrix_rank(rows: &[Vec<C64>], rel_tol: f64) -> usize {
    let mut a: Vec<Vec<C64>> = rows.to_vec();
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let scale = a
        .iter()
        .flatten()
        .map(|z| z.norm())
        .fold(0.0, f64::max);
    if scale == 0.0 {
        return 0;
    }
    let tol = rel_tol * scale;
    let mut rank = 0;
    for _ in 0..nrows.min(ncols) {
        let mut best = (rank, rank, -1.0);
        for (i, row) in a.iter().enumerate().skip(rank) {
            for (j, z) in row.iter().enumerate().skip(rank) {
                if z.norm() > best.2 {
                    best = (i, j, z.norm());
                }
            }
        }
        if best.2 <= tol {
            break;
        }
        a.swap(rank, best.0);
        for row in a.iter_mut() {
            row.swap(rank, best.1);
        }
        let pivot_row = a[rank].clone();
        let pivot = pivot_row[rank];
        for row in a.iter_mut().skip(rank + 1) {
            let factor = row[rank] / pivot;
            for (z, p) in row.iter_mut().zip(&pivot_row).skip(rank) {
                *z -= factor * p;
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phase_space::TorusSize;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    fn random_hermitian(dim: usize, seed: u64) -> OperatorMatrix {
        let mut rng = Xoshiro256PlusPlus::seed_from_u64(seed);
        let raw = OperatorMatrix::from_fn(dim, |_, _| {
            C64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5)
        });
        OperatorMatrix::from_fn(dim, |i, j| raw[(i, j)] + raw[(j, i)].conj())
    }

    #[test]
    fn cg_on_scaled_identity() {
        let n = TorusSize::new(5).unwrap();
        let op = HermitianOperator::new(5, |v| v.iter().map(|z| 2.0 * z).collect()).unwrap();
        let b = Signal::from_fn(n, |t| C64::new(t as f64, -1.0));
        let x = cg_solve(&op, &b, 1e-12).unwrap();
        assert!(x.distance(&b.scale(c(0.5))) < 1e-15);
    }

    #[test]
    fn cg_on_diagonal() {
        let n = TorusSize::new(8).unwrap();
        let op = HermitianOperator::new(8, |v| {
            v.iter().enumerate().map(|(i, z)| z * (i as f64 + 1.0)).collect()
        })
        .unwrap();
        let b = Signal::from_fn(n, |t| C64::new(1.0 + t as f64, 0.5));
        let x = cg_solve(&op, &b, 1e-14).unwrap();
        for t in 0..8 {
            assert!((x[t] - b[t] / (t as f64 + 1.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn cg_rejects_indefinite() {
        let n = TorusSize::new(2).unwrap();
        let op = HermitianOperator::new(2, |v| vec![v[0], -v[1]]).unwrap();
        let b = Signal::new(vec![c(0.0), c(1.0)]).unwrap();
        assert!(matches!(
            cg_solve(&op, &b, 1e-12),
            Err(Error::NotPositiveDefinite { .. })
        ));
        let _ = n;
    }

    #[test]
    fn hermitian_operator_rejects_non_hermitian() {
        let res = HermitianOperator::new(2, |v| vec![v[1], c(0.0)]);
        assert!(matches!(res, Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn jacobi_identity_and_diagonal() {
        let eig = jacobi_eig(&OperatorMatrix::identity(4)).unwrap();
        assert!(eig.values.iter().all(|&v| (v - 1.0).abs() < 1e-15));
        let eig = jacobi_eig(&OperatorMatrix::from_diagonal(&[c(3.0), c(1.0), c(2.0)])).unwrap();
        assert_eq!(eig.values, vec![1.0, 2.0, 3.0]);
    }

    #[test]
    fn jacobi_reconstructs_random_hermitian() {
        for seed in 0..5 {
            let m = random_hermitian(9, seed);
            let eig = jacobi_eig(&m).unwrap();
            let err = eig.reconstruct().sub(&m).unwrap().frobenius_norm();
            assert!(err <= 1e-10 * m.frobenius_norm());
            let vhv = eig.vectors.adjoint().matmul(&eig.vectors).unwrap();
            assert!(vhv.approx_eq(&OperatorMatrix::identity(9), 1e-10));
            assert!(eig.values.windows(2).all(|w| w[0] <= w[1]));
        }
    }

    #[test]
    fn jacobi_rejects_non_hermitian() {
        let m = OperatorMatrix::from_rows(vec![vec![c(1.0), c(2.0)], vec![c(0.0), c(1.0)]]).unwrap();
        assert!(matches!(jacobi_eig(&m), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn extreme_eigs_agree_with_jacobi() {
        assert_eq!(
            extreme_eigs(&HermitianOperator::from_matrix(&OperatorMatrix::identity(3)).unwrap())
                .unwrap(),
            (1.0, 1.0)
        );
        for seed in 10..14 {
            let m = random_hermitian(8, seed);
            let eig = jacobi_eig(&m).unwrap();
            let (lo, hi) = extreme_eigs(&HermitianOperator::from_matrix(&m).unwrap()).unwrap();
            assert!((lo - eig.min()).abs() < 1e-8, "{lo} vs {}", eig.min());
            assert!((hi - eig.max()).abs() < 1e-8, "{hi} vs {}", eig.max());
        }
    }

    #[test]
    fn lu_examples() {
        let id = OperatorMatrix::identity(3);
        let b = vec![c(1.0), C64::new(0.0, 2.0), c(-3.0)];
        assert_eq!(lu_solve(&id, &b).unwrap(), b);

        let m = OperatorMatrix::from_rows(vec![vec![c(1.0), c(1.0)], vec![c(0.0), c(1.0)]]).unwrap();
        let x = lu_solve(&m, &[c(2.0), c(1.0)]).unwrap();
        assert!((x[0] - c(1.0)).norm() < 1e-15 && (x[1] - c(1.0)).norm() < 1e-15);

        let singular = OperatorMatrix::from_rows(vec![vec![c(1.0), c(2.0)], vec![c(2.0), c(4.0)]]).unwrap();
        assert!(matches!(lu_solve(&singular, &[c(1.0), c(1.0)]), Err(Error::Singular { .. })));
    }

    #[test]
    fn lu_random_well_conditioned() {
        let mut rng = Xoshiro256PlusPlus::seed_from_u64(99);
        let m = OperatorMatrix::from_fn(16, |i, j| {
            let diag = if i == j { 8.0 } else { 0.0 };
            C64::new(rng.random::<f64>() - 0.5 + diag, rng.random::<f64>() - 0.5)
        });
        let b = random_vector(&mut rng, 16);
        let x = lu_solve(&m, &b).unwrap();
        let r: Vec<C64> = m.apply_slice(&x).iter().zip(&b).map(|(a, b)| a - b).collect();
        assert!(norm(&r) < 1e-11);
        let lu = LuDecomposition::new(&m).unwrap();
        assert!(lu.growth_factor() < LU_GROWTH_WARNING);
    }

    #[test]
    fn rank_counts_independent_rows() {
        let rows = vec![
            vec![c(1.0), c(0.0), c(1.0)],
            vec![c(2.0), c(0.0), c(2.0)],
            vec![c(0.0), c(1.0), c(0.0)],
        ];
        assert_eq!(matrix_rank(&rows, 1e-12), 2);
        assert_eq!(matrix_rank(&[vec![c(0.0); 3]], 1e-12), 0);
    }
}
