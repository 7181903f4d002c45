//! Signals as a bimodule over the shift algebras of a lattice `Lambda`
//! (acting on the left) and of its adjoint `Lambda^0` (acting on the right).
//!
//! Finite constants, all pinned by brute-force associativity and Poisson
//! checks in the test suite:
//!
//! | quantity | definition |
//! |---|---|
//! | `<f, g>_A(lambda)` | `<f, pi(lambda) g>` |
//! | `a . g` | `sum a(lambda) pi(lambda) g` |
//! | `<f, g>_B(mu)` | `(|Lambda| / N) <pi(mu) g, f>` |
//! | `g . b` | `sum b(mu) pi(mu)^* g` |
//! | Janssen coefficient | `(|Lambda| / N) <g, pi(mu) gamma>` |
//! | FIGA right-hand factor | `N / |Lambda^0|` (equal to `|Lambda| / N`) |
//!
//! With these, `<f, g>_A h = f <g, h>_B` holds exactly.

use std::sync::Arc;

use crate::error::Result;
use crate::lattice::{adjoint_lattice, Lattice};
use crate::numerics::jacobi_eig;
use crate::operator::OperatorMatrix;
use crate::phase_space::{inner, tf_shift, tf_shift_adjoint, PhasePoint, Signal, TorusSize, C64};
use crate::tf_transforms::{gabor_synthesis, stft_sampled};
use crate::twisted_algebra::{represent, AlgebraElement};

/// A lattice together with its cached adjoint.
#[derive(Debug, Clone, PartialEq)]
pub struct ModulePair {
    lattice: Arc<Lattice>,
    adjoint: Arc<Lattice>,
}

impl ModulePair {
    pub fn new(lattice: Lattice) -> Self {
        let adjoint = Arc::new(adjoint_lattice(&lattice));
        ModulePair {
            lattice: Arc::new(lattice),
            adjoint,
        }
    }

    pub fn size(&self) -> TorusSize {
        self.lattice.size()
    }

    pub fn lattice(&self) -> &Arc<Lattice> {
        &self.lattice
    }

    pub fn adjoint(&self) -> &Arc<Lattice> {
        &self.adjoint
    }

    /// `|Lambda| / N`: the Janssen factor and the scale of `<., .>_B`.
    pub fn redundancy(&self) -> f64 {
        self.lattice.len() as f64 / self.size().get() as f64
    }

    fn check(&self, signals: &[&Signal]) -> Result<()> {
        signals
            .iter()
            .try_for_each(|s| s.check_len(self.size().get()))
    }
}

/// The `A`-valued inner product `<f, g>_A(lambda) = <f, pi(lambda) g>`.
pub fn inner_a(f: &Signal, g: &Signal, m: &ModulePair) -> Result<AlgebraElement> {
    stft_sampled(f, g, &m.lattice)
}

/// The `B`-valued inner product `<f, g>_B(mu) = (|Lambda| / N) <pi(mu) g, f>`.
pub fn inner_b(f: &Signal, g: &Signal, m: &ModulePair) -> Result<AlgebraElement> {
    m.check(&[f, g])?;
    let scale = m.redundancy();
    let coeffs = m
        .adjoint
        .points()
        .iter()
        .map(|&p| inner(&tf_shift(g, p), f).map(|z| z * scale))
        .collect::<Result<Vec<_>>>()?;
    AlgebraElement::new(m.adjoint.clone(), coeffs)
}

/// Left action `a . g = sum a(lambda) pi(lambda) g`.
pub fn act_left(a: &AlgebraElement, g: &Signal) -> Result<Signal> {
    gabor_synthesis(a, g)
}

/// Right action `g . b = sum b(mu) pi(mu)^* g`.
pub fn act_right(g: &Signal, b: &AlgebraElement) -> Result<Signal> {
    let n = b.lattice().size();
    g.check_len(n.get())?;
    let mut out = Signal::zeros(n);
    for (p, c) in b.iter() {
        if c != C64::new(0.0, 0.0) {
            out.axpy(c, &tf_shift_adjoint(g, p));
        }
    }
    Ok(out)
}

/// Matrix of the right action `g -> g . b`, i.e. `sum b(mu) pi(mu)^*`.
pub fn represent_right(b: &AlgebraElement) -> OperatorMatrix {
    let n = b.lattice().size();
    let mut m = OperatorMatrix::zeros(n.get());
    for (p, c) in b.iter() {
        if c != C64::new(0.0, 0.0) {
            m.add_scaled(c, &OperatorMatrix::tf_shift(n, p).adjoint());
        }
    }
    m
}

/// Both sides of the fundamental identity of Gabor analysis:
/// `sum_Lambda V_{g1} f1 conj(V_{g2} f2)` and
/// `(N / |Lambda^0|) sum_{Lambda^0} <f1, pi(mu) f2> conj(<g1, pi(mu) g2>)`.
pub fn figa_check(
    f1: &Signal,
    g1: &Signal,
    f2: &Signal,
    g2: &Signal,
    m: &ModulePair,
) -> Result<(C64, C64)> {
    m.check(&[f1, g1, f2, g2])?;
    let lhs = m
        .lattice
        .points()
        .iter()
        .map(|&p| Ok(inner(f1, &tf_shift(g1, p))? * inner(f2, &tf_shift(g2, p))?.conj()))
        .sum::<Result<C64>>()?;
    let sum = m
        .adjoint
        .points()
        .iter()
        .map(|&p| Ok(inner(f1, &tf_shift(f2, p))? * inner(g1, &tf_shift(g2, p))?.conj()))
        .sum::<Result<C64>>()?;
    let factor = m.size().get() as f64 / m.adjoint.len() as f64;
    Ok((lhs, sum * factor))
}

/// Matrix of `h -> sum_lambda <h, pi(lambda) f> pi(lambda) g`: the Gabor frame
/// operator with analysis window `f` and synthesis window `g`.
pub fn rank_one(f: &Signal, g: &Signal, m: &ModulePair) -> Result<OperatorMatrix> {
    m.check(&[f, g])?;
    let mut out = OperatorMatrix::zeros(m.size().get());
    for &p in m.lattice.points() {
        let sf = tf_shift(f, p);
        let sg = tf_shift(g, p);
        out.add_outer(C64::new(1.0, 0.0), sg.values(), sf.values());
    }
    Ok(out)
}

/// Janssen coefficients `J(mu) = (|Lambda| / N) <g, pi(mu) gamma>` on the
/// adjoint lattice; `represent(J) = rank_one(gamma, g)`.
pub fn janssen_coefficients(g: &Signal, gamma: &Signal, m: &ModulePair) -> Result<AlgebraElement> {
    m.check(&[g, gamma])?;
    let scale = m.redundancy();
    let coeffs = m
        .adjoint
        .points()
        .iter()
        .map(|&p| inner(g, &tf_shift(gamma, p)).map(|z| z * scale))
        .collect::<Result<Vec<_>>>()?;
    AlgebraElement::new(m.adjoint.clone(), coeffs)
}

/// `|| <f, g>_A h - f <g, h>_B ||_2`.
pub fn associativity_residual(f: &Signal, g: &Signal, h: &Signal, m: &ModulePair) -> Result<f64> {
    let left = act_left(&inner_a(f, g, m)?, h)?;
    let right = act_right(f, &inner_b(g, h, m)?)?;
    Ok(left.distance(&right))
}

/// The canonical trace: the coefficient at the origin. Serves as both
/// `tau_A` and `tau_B`.
pub fn trace(a: &AlgebraElement) -> C64 {
    a.get(PhasePoint::ORIGIN)
}

pub fn trace_a(a: &AlgebraElement) -> C64 {
    trace(a)
}

pub fn trace_b(b: &AlgebraElement) -> C64 {
    trace(b)
}

/// Both sides of the trace relation between the two module structures:
/// `tau_A(<f, g>_A)` and `(N / |Lambda|) tau_B(<g, f>_B)`.
pub fn noncommutative_poisson(f: &Signal, g: &Signal, m: &ModulePair) -> Result<(C64, C64)> {
    let lhs = trace_a(&inner_a(f, g, m)?);
    let rhs = trace_b(&inner_b(g, f, m)?) / m.redundancy();
    Ok((lhs, rhs))
}

fn hermitian_part(m: &OperatorMatrix) -> OperatorMatrix {
    OperatorMatrix::from_fn(m.dim(), |i, j| 0.5 * (m[(i, j)] + m[(j, i)].conj()))
}

/// Smallest eigenvalue of `represent(<f, f>_A)`.
pub fn positivity_check(f: &Signal, m: &ModulePair) -> Result<f64> {
    let op = hermitian_part(&represent(&inner_a(f, f, m)?));
    Ok(jacobi_eig(&op)?.min())
}

/// Smallest eigenvalue of the right action of `<f, f>_B`.
pub fn positivity_check_b(f: &Signal, m: &ModulePair) -> Result<f64> {
    let op = hermitian_part(&represent_right(&inner_b(f, f, m)?));
    Ok(jacobi_eig(&op)?.min())
}
