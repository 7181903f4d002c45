//! Short-time Fourier transform, lattice sampling and synthesis, the
//! symplectic Fourier transform and the summation identities built on it.
//!
//! Normalizations in the finite model:
//!
//! * STFT: `V_g f(x, w) = <f, pi(x, w) g>`.
//! * Symplectic transform: unnormalized, `F^s(y, eta) = sum F(x, w) e^{2 pi i (y w - x eta)/N}`.
//! * Poisson: `sum_Lambda F = |Lambda^0|^{-1} sum_{Lambda^0} F^s`.
//! * Moyal: `sum |V_g f|^2 = N ||f||^2 ||g||^2`.

use std::ops::{Index, IndexMut};
use std::sync::Arc;

use crate::error::Result;
use crate::lattice::{adjoint_lattice, Lattice};
use crate::phase_space::{inner, tf_shift, PhasePoint, Signal, TorusSize, C64};
pub use crate::twisted_algebra::AlgebraElement as SampledCoefficients;

/// A complex function on `Z_N x Z_N`, stored x-major.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseFunction {
    n: TorusSize,
    values: Vec<C64>,
}

impl PhaseFunction {
    pub fn zeros(n: TorusSize) -> Self {
        PhaseFunction {
            n,
            values: vec![C64::new(0.0, 0.0); n.get() * n.get()],
        }
    }

    pub fn from_fn(n: TorusSize, mut f: impl FnMut(PhasePoint) -> C64) -> Self {
        PhaseFunction {
            n,
            values: n.points().map(&mut f).collect(),
        }
    }

    pub fn size(&self) -> TorusSize {
        self.n
    }

    pub fn values(&self) -> &[C64] {
        &self.values
    }

    pub fn at(&self, p: PhasePoint) -> C64 {
        self[(p.x, p.w)]
    }

    /// Sum over all of phase space, x-major.
    pub fn total(&self) -> C64 {
        self.values.iter().sum()
    }

    pub fn map(&self, f: impl Fn(C64) -> C64) -> PhaseFunction {
        PhaseFunction {
            n: self.n,
            values: self.values.iter().map(|&z| f(z)).collect(),
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

impl Index<(usize, usize)> for PhaseFunction {
    type Output = C64;
    fn index(&self, (x, w): (usize, usize)) -> &C64 {
        &self.values[x * self.n.get() + w]
    }
}

impl IndexMut<(usize, usize)> for PhaseFunction {
    fn index_mut(&mut self, (x, w): (usize, usize)) -> &mut C64 {
        let len = self.n.get();
        &mut self.values[x * len + w]
    }
}

fn root_table(n: TorusSize) -> Vec<C64> {
    (0..n.get() as i64).map(|k| n.root(k)).collect()
}

/// `values[x][w] = sum_t f[t] conj(g[t - x]) e^{-2 pi i w t / N}`.
pub fn stft(f: &Signal, g: &Signal) -> Result<PhaseFunction> {
    g.check_len(f.len())?;
    let n = f.size();
    let len = n.get();
    let roots = root_table(n);
    let mut out = PhaseFunction::zeros(n);
    let mut product = vec![C64::new(0.0, 0.0); len];
    for x in 0..len {
        for (t, slot) in product.iter_mut().enumerate() {
            *slot = f[t] * g[(t + len - x) % len].conj();
        }
        for w in 0..len {
            let mut acc = C64::new(0.0, 0.0);
            for (t, h) in product.iter().enumerate() {
                acc += h * roots[(len - (w * t) % len) % len];
            }
            out[(x, w)] = acc;
        }
    }
    Ok(out)
}

/// The STFT restricted to a lattice, in canonical order.
pub fn stft_sampled(f: &Signal, g: &Signal, lattice: &Arc<Lattice>) -> Result<SampledCoefficients> {
    let len = lattice.size().get();
    f.check_len(len)?;
    g.check_len(len)?;
    let coeffs = lattice
        .points()
        .iter()
        .map(|&p| inner(f, &tf_shift(g, p)))
        .collect::<Result<Vec<_>>>()?;
    SampledCoefficients::new(lattice.clone(), coeffs)
}

/// `sum_lambda a(lambda) pi(lambda) g`, in canonical lattice order.
pub fn gabor_synthesis(a: &SampledCoefficients, g: &Signal) -> Result<Signal> {
    let n = a.lattice().size();
    g.check_len(n.get())?;
    let mut out = Signal::zeros(n);
    for (p, c) in a.iter() {
        if c != C64::new(0.0, 0.0) {
            out.axpy(c, &tf_shift(g, p));
        }
    }
    Ok(out)
}

/// `out[y][eta] = sum_{x,w} F[x][w] e^{2 pi i (y w - x eta) / N}`.
pub fn symplectic_ft(func: &PhaseFunction) -> PhaseFunction {
    let n = func.size();
    let len = n.get();
    let roots = root_table(n);
    let pos = |k: usize| roots[k % len];
    let neg = |k: usize| roots[(len - k % len) % len];
    // partial[x][y] = sum_w F[x][w] e^{2 pi i y w / N}
    let mut partial = vec![C64::new(0.0, 0.0); len * len];
    for x in 0..len {
        for y in 0..len {
            let mut acc = C64::new(0.0, 0.0);
            for w in 0..len {
                acc += func[(x, w)] * pos(y * w);
            }
            partial[x * len + y] = acc;
        }
    }
    let mut out = PhaseFunction::zeros(n);
    for y in 0..len {
        for eta in 0..len {
            let mut acc = C64::new(0.0, 0.0);
            for x in 0..len {
                acc += partial[x * len + y] * neg(x * eta);
            }
            out[(y, eta)] = acc;
        }
    }
    out
}

/// Both sides of Poisson summation over `lattice`:
/// `(sum_Lambda F, |Lambda^0|^{-1} sum_{Lambda^0} F^s)`.
pub fn poisson_sum(func: &PhaseFunction, lattice: &Lattice) -> (C64, C64) {
    let lhs = lattice.points().iter().map(|&p| func.at(p)).sum();
    let adjoint = adjoint_lattice(lattice);
    let transformed = symplectic_ft(func);
    let rhs: C64 = adjoint.points().iter().map(|&p| transformed.at(p)).sum();
    (lhs, rhs / adjoint.len() as f64)
}

/// Both sides of Moyal's formula:
/// `sum V_{g1} f1 conj(V_{g2} f2)` and `N <f1, f2> conj(<g1, g2>)`.
pub fn moyal_check(f1: &Signal, f2: &Signal, g1: &Signal, g2: &Signal) -> Result<(C64, C64)> {
    let v1 = stft(f1, g1)?;
    let v2 = stft(f2, g2)?;
    let lhs = v1
        .values()
        .iter()
        .zip(v2.values())
        .map(|(a, b)| a * b.conj())
        .sum();
    let rhs = f1.len() as f64 * inner(f1, f2)? * inner(g1, g2)?.conj();
    Ok((lhs, rhs))
}

/// `sum_{x,w} |V_phi f(x, w)|` against the periodized Gaussian `phi`.
pub fn s0_norm(f: &Signal) -> f64 {
    let window = periodized_gaussian(f.size());
    stft(f, &window)
        .expect("window built with the signal's length")
        .values()
        .iter()
        .map(|z| z.norm())
        .sum()
}

/// Unit-norm periodization of `e^{-pi t^2 / N}` over `|k| <= 3` periods.
pub fn periodized_gaussian(n: TorusSize) -> Signal {
    let len = n.get() as f64;
    let raw = Signal::from_fn(n, |t| {
        let v: f64 = (-3..=3)
            .map(|k| {
                let s = t as f64 + k as f64 * len;
                (-std::f64::consts::PI * s * s / len).exp()
            })
            .sum();
        C64::new(v, 0.0)
    });
    let norm = raw.norm();
    raw.scale(C64::new(1.0 / norm, 0.0))
}

/// Unit-norm indicator of `{t : min(t, N - t) <= r}` with `r = floor(sqrt(N) / 2)`.
pub fn box_window(n: TorusSize) -> Signal {
    let len = n.get();
    let radius = ((len as f64).sqrt() / 2.0).floor() as usize;
    let raw = Signal::from_fn(n, |t| {
        if t.min(len - t) <= radius {
            C64::new(1.0, 0.0)
        } else {
            C64::new(0.0, 0.0)
        }
    });
    let norm = raw.norm();
    raw.scale(C64::new(1.0 / norm, 0.0))
}
