//! The twisted group algebra `l^1(Lambda, beta)`: coefficient maps on a
//! lattice multiplied by twisted convolution, so that
//! `represent(a # b) = represent(a) represent(b)`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::numerics::lu_solve;
pub use crate::operator::OperatorMatrix;
use crate::phase_space::{adjoint_phase, cocycle, PhasePoint, C64};

/// Residual above which an inverse is rejected.
pub const INVERSE_RESIDUAL_TOL: f64 = 1e-8;

/// Complex coefficients indexed by the points of a lattice (canonical order).
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraElement {
    lattice: Arc<Lattice>,
    coeffs: Vec<C64>,
}

impl AlgebraElement {
    pub fn new(lattice: Arc<Lattice>, coeffs: Vec<C64>) -> Result<Self> {
        if coeffs.len() != lattice.len() {
            return Err(Error::DimensionMismatch {
                expected: lattice.len(),
                found: coeffs.len(),
            });
        }
        Ok(AlgebraElement { lattice, coeffs })
    }

    pub fn zero(lattice: Arc<Lattice>) -> Self {
        let len = lattice.len();
        AlgebraElement {
            lattice,
            coeffs: vec![C64::new(0.0, 0.0); len],
        }
    }

    /// The point mass at `p`, which must lie on the lattice.
    pub fn delta(lattice: Arc<Lattice>, p: PhasePoint) -> Result<Self> {
        let idx = lattice
            .index_of(p)
            .ok_or_else(|| Error::InvalidSpec(format!("{p} is not a lattice point")))?;
        let mut out = Self::zero(lattice);
        out.coeffs[idx] = C64::new(1.0, 0.0);
        Ok(out)
    }

    /// The unit `delta_(0,0)`.
    pub fn identity(lattice: Arc<Lattice>) -> Self {
        Self::delta(lattice, PhasePoint::ORIGIN).expect("every lattice contains the origin")
    }

    pub fn from_fn(lattice: Arc<Lattice>, f: impl FnMut(&PhasePoint) -> C64) -> Self {
        let coeffs = lattice.points().iter().map(f).collect();
        AlgebraElement { lattice, coeffs }
    }

    pub fn lattice(&self) -> &Arc<Lattice> {
        &self.lattice
    }

    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    pub fn iter(&self) -> impl Iterator<Item = (PhasePoint, C64)> + '_ {
        self.lattice.points().iter().copied().zip(self.coeffs.iter().copied())
    }

    /// Coefficient at `p`, zero off the lattice.
    pub fn get(&self, p: PhasePoint) -> C64 {
        self.lattice
            .index_of(p)
            .map_or(C64::new(0.0, 0.0), |i| self.coeffs[i])
    }

    pub fn l1_norm(&self) -> f64 {
        self.coeffs.iter().map(|z| z.norm()).sum()
    }

    pub fn scale(&self, c: C64) -> Self {
        AlgebraElement {
            lattice: self.lattice.clone(),
            coeffs: self.coeffs.iter().map(|z| z * c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_lattice(other)?;
        Ok(AlgebraElement {
            lattice: self.lattice.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_lattice(other)?;
        Ok(AlgebraElement {
            lattice: self.lattice.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    /// Largest coefficient-wise deviation; infinite across lattices.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        if self.check_same_lattice(other).is_err() {
            return f64::INFINITY;
        }
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub(crate) fn check_same_lattice(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.lattice, &other.lattice) || *self.lattice == *other.lattice {
            Ok(())
        } else {
            Err(Error::LatticeMismatch)
        }
    }
}

fn convolve_with(
    a: &AlgebraElement,
    b: &AlgebraElement,
    twist: impl Fn(PhasePoint, PhasePoint) -> C64,
) -> Result<AlgebraElement> {
    a.check_same_lattice(b)?;
    let lattice = a.lattice.clone();
    let n = lattice.size();
    let mut out = AlgebraElement::zero(lattice.clone());
    for (i, &lambda) in lattice.points().iter().enumerate() {
        let mut acc = C64::new(0.0, 0.0);
        for (mu, am) in a.iter() {
            if am == C64::new(0.0, 0.0) {
                continue;
            }
            let rest = n.sub(lambda, mu);
            let bm = b.coeffs[lattice.index_of(rest).expect("lattice is a group")];
            acc += am * bm * twist(mu, rest);
        }
        out.coeffs[i] = acc;
    }
    Ok(out)
}

/// `(a # b)(lambda) = sum_mu a(mu) b(lambda - mu) beta(mu, lambda - mu)`.
pub fn twisted_convolve(a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
    let n = a.lattice.size();
    convolve_with(a, b, |p, q| cocycle(n, p, q).value())
}

/// Twisted convolution with the conjugate cocycle. This is the product of the
/// algebra acting on the right through adjoint shifts:
/// `(g b1) b2 = g (b1 #' b2)`.
pub fn twisted_convolve_conj(a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
    let n = a.lattice.size();
    convolve_with(a, b, |p, q| cocycle(n, p, q).value().conj())
}

/// `a*(lambda) = e^{-2 pi i x w / N} conj(a(-lambda))`, so that
/// `represent(a*) = represent(a)^H`.
pub fn involution(a: &AlgebraElement) -> AlgebraElement {
    let n = a.lattice.size();
    AlgebraElement::from_fn(a.lattice.clone(), |&p| {
        adjoint_phase(n, p).value() * a.get(n.neg(p)).conj()
    })
}

/// Involution for the conjugate-cocycle algebra: `b*(mu) = e^{2 pi i x w / N} conj(b(-mu))`.
pub fn involution_conj(b: &AlgebraElement) -> AlgebraElement {
    let n = b.lattice.size();
    AlgebraElement::from_fn(b.lattice.clone(), |&p| {
        adjoint_phase(n, p).value().conj() * b.get(n.neg(p)).conj()
    })
}

/// `sum_lambda a(lambda) pi(lambda)` as an `N x N` matrix.
pub fn represent(a: &AlgebraElement) -> OperatorMatrix {
    let n = a.lattice.size();
    let len = n.get();
    let mut m = OperatorMatrix::zeros(len);
    for (p, c) in a.iter() {
        if c == C64::new(0.0, 0.0) {
            continue;
        }
        for s in 0..len {
            let t = (s + p.x) % len;
            m[(t, s)] += c * n.root((p.w * t) as i64);
        }
    }
    m
}

/// `out(lambda) = trace(pi(lambda)^H M) / N`, the Hilbert-Schmidt projection
/// onto the span of `{pi(lambda)}`.
pub fn extract_coefficients(m: &OperatorMatrix, lattice: &Arc<Lattice>) -> Result<AlgebraElement> {
    let n = lattice.size();
    let len = n.get();
    if m.dim() != len {
        return Err(Error::DimensionMismatch {
            expected: len,
            found: m.dim(),
        });
    }
    Ok(AlgebraElement::from_fn(lattice.clone(), |p| {
        let acc: C64 = (0..len)
            .map(|s| {
                let t = (s + p.x) % len;
                n.root(-((p.w * t) as i64)) * m[(t, s)]
            })
            .sum();
        acc / len as f64
    }))
}

/// Matrix of `b -> a # b` on coefficient vectors:
/// `L[lambda][nu] = a(lambda - nu) beta(lambda - nu, nu)`.
pub fn left_regular_matrix(a: &AlgebraElement) -> OperatorMatrix {
    let lattice = &a.lattice;
    let n = lattice.size();
    let pts = lattice.points();
    OperatorMatrix::from_fn(pts.len(), |i, j| {
        let diff = n.sub(pts[i], pts[j]);
        a.get(diff) * cocycle(n, diff, pts[j]).value()
    })
}

/// Two-sided inverse in the twisted algebra, by a dense solve of the left
/// regular representation.
pub fn invert(a: &AlgebraElement) -> Result<AlgebraElement> {
    let lattice = a.lattice.clone();
    let unit = AlgebraElement::identity(lattice.clone());
    let coeffs = lu_solve(&left_regular_matrix(a), unit.coeffs()).map_err(|err| match err {
        Error::Singular { pivot, .. } => Error::NotInvertible { residual: pivot },
        other => other,
    })?;
    let b = AlgebraElement::new(lattice, coeffs)?;
    let residual = twisted_convolve(a, &b)?
        .max_abs_diff(&unit)
        .max(twisted_convolve(&b, a)?.max_abs_diff(&unit));
    if residual > INVERSE_RESIDUAL_TOL {
        return Err(Error::NotInvertible { residual });
    }
    Ok(b)
}

/// Whether the shifts `{pi(lambda)}` are Hilbert-Schmidt orthonormal after
/// scaling by `N^{-1/2}`, i.e. `trace(pi(lambda)^H pi(mu)) / N = [lambda = mu]`.
pub fn linear_independence_check(lattice: &Lattice) -> bool {
    let n = lattice.size();
    let mats: Vec<OperatorMatrix> = lattice
        .points()
        .iter()
        .map(|&p| OperatorMatrix::tf_shift(n, p))
        .collect();
    let len = n.get() as f64;
    mats.iter().enumerate().all(|(i, a)| {
        mats.iter().enumerate().all(|(j, b)| {
            let gram: C64 = a
                .entries()
                .iter()
                .zip(b.entries())
                .map(|(x, y)| x.conj() * y)
                .sum::<C64>()
                / len;
            let want = if i == j { 1.0 } else { 0.0 };
            (gram - C64::new(want, 0.0)).norm() <= 1e-12
        })
    })
}
