//! The finite phase space `Z_N x Z_N`.
//!
//! Time-frequency shifts act on signals of length `N` as
//! `pi(x, w) f[t] = e^{2 pi i w t / N} f[t - x]`, i.e. translation first and
//! modulation second. Every phase factor is evaluated from an integer residue
//! `k mod N` through [`TorusSize::root`], so identical residues always give
//! bit-identical phases.

use std::f64::consts::TAU;
use std::ops::{Index, IndexMut};

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;

/// The modulus `N` of the cyclic group `Z_N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusSize(usize);

impl TorusSize {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidTorusSize(n));
        }
        Ok(TorusSize(n))
    }

    #[inline]
    pub fn get(self) -> usize {
        self.0
    }

    /// Reduces any integer to its residue in `0..N`.
    #[inline]
    pub fn reduce(self, k: i64) -> usize {
        k.rem_euclid(self.0 as i64) as usize
    }

    /// `e^{2 pi i k / N}`, computed from `k mod N`.
    #[inline]
    pub fn root(self, k: i64) -> C64 {
        let r = self.reduce(k);
        if r == 0 {
            return C64::new(1.0, 0.0);
        }
        C64::from_polar(1.0, TAU * r as f64 / self.0 as f64)
    }

    pub fn point(self, x: i64, w: i64) -> PhasePoint {
        PhasePoint {
            x: self.reduce(x),
            w: self.reduce(w),
        }
    }

    pub fn add(self, p: PhasePoint, q: PhasePoint) -> PhasePoint {
        PhasePoint {
            x: (p.x + q.x) % self.0,
            w: (p.w + q.w) % self.0,
        }
    }

    pub fn neg(self, p: PhasePoint) -> PhasePoint {
        PhasePoint {
            x: (self.0 - p.x) % self.0,
            w: (self.0 - p.w) % self.0,
        }
    }

    pub fn sub(self, p: PhasePoint, q: PhasePoint) -> PhasePoint {
        self.add(p, self.neg(q))
    }

    /// All `N^2` phase-space points, x-major.
    pub fn points(self) -> impl Iterator<Item = PhasePoint> {
        let n = self.0;
        (0..n).flat_map(move |x| (0..n).map(move |w| PhasePoint { x, w }))
    }
}

/// A point `(x, w)` of `Z_N x Z_N`. The derived ordering is lexicographic,
/// which is the canonical order for lattices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PhasePoint {
    pub x: usize,
    pub w: usize,
}

impl PhasePoint {
    pub const ORIGIN: PhasePoint = PhasePoint { x: 0, w: 0 };

    pub fn new(x: usize, w: usize) -> Self {
        PhasePoint { x, w }
    }

    pub fn is_origin(self) -> bool {
        self.x == 0 && self.w == 0
    }
}

impl std::fmt::Display for PhasePoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.x, self.w)
    }
}

/// A complex number of modulus one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitComplex(C64);

impl UnitComplex {
    pub const ONE: UnitComplex = UnitComplex(C64 { re: 1.0, im: 0.0 });

    pub fn new(value: C64) -> Option<Self> {
        ((value.norm() - 1.0).abs() <= 1e-12).then_some(UnitComplex(value))
    }

    /// `e^{2 pi i k / N}`.
    pub fn root(n: TorusSize, k: i64) -> Self {
        UnitComplex(n.root(k))
    }

    #[inline]
    pub fn value(self) -> C64 {
        self.0
    }

    pub fn conj(self) -> Self {
        UnitComplex(self.0.conj())
    }
}

impl std::ops::Mul for UnitComplex {
    type Output = UnitComplex;
    fn mul(self, rhs: Self) -> Self {
        UnitComplex(self.0 * rhs.0)
    }
}

/// A complex signal on `Z_N`.
#[derive(Debug, Clone, PartialEq)]
pub struct Signal(Vec<C64>);

impl Signal {
    pub fn new(values: Vec<C64>) -> Result<Self> {
        TorusSize::new(values.len())?;
        Ok(Signal(values))
    }

    pub fn zeros(n: TorusSize) -> Self {
        Signal(vec![C64::new(0.0, 0.0); n.get()])
    }

    pub fn ones(n: TorusSize) -> Self {
        Signal(vec![C64::new(1.0, 0.0); n.get()])
    }

    /// The unit impulse at `k`.
    pub fn delta(n: TorusSize, k: usize) -> Self {
        let mut s = Self::zeros(n);
        s.0[k % n.get()] = C64::new(1.0, 0.0);
        s
    }

    pub fn from_fn(n: TorusSize, f: impl FnMut(usize) -> C64) -> Self {
        Signal((0..n.get()).map(f).collect())
    }

    pub fn size(&self) -> TorusSize {
        TorusSize(self.0.len())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[C64] {
        &self.0
    }

    pub fn values_mut(&mut self) -> &mut [C64] {
        &mut self.0
    }

    pub fn into_values(self) -> Vec<C64> {
        self.0
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn scale(&self, c: C64) -> Signal {
        Signal(self.0.iter().map(|z| z * c).collect())
    }

    /// `self + c * other`, in place.
    pub fn axpy(&mut self, c: C64, other: &Signal) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a += c * b;
        }
    }

    pub fn sub(&self, other: &Signal) -> Signal {
        Signal(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// `||self - other||_2`.
    pub fn distance(&self, other: &Signal) -> f64 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub(crate) fn check_len(&self, n: usize) -> Result<()> {
        if self.0.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: self.0.len(),
            });
        }
        Ok(())
    }
}

impl Index<usize> for Signal {
    type Output = C64;
    fn index(&self, i: usize) -> &C64 {
        &self.0[i]
    }
}

impl IndexMut<usize> for Signal {
    fn index_mut(&mut self, i: usize) -> &mut C64 {
        &mut self.0[i]
    }
}

/// `T_x f[t] = f[t - x]`.
pub fn translate(f: &Signal, x: i64) -> Signal {
    let n = f.size();
    let shift = n.reduce(x);
    let len = n.get();
    Signal::from_fn(n, |t| f[(t + len - shift) % len])
}

/// `M_w f[t] = e^{2 pi i w t / N} f[t]`.
pub fn modulate(f: &Signal, w: i64) -> Signal {
    let n = f.size();
    let w = n.reduce(w) as i64;
    Signal::from_fn(n, |t| n.root(w * t as i64) * f[t])
}

/// `pi(lambda) f = M_w T_x f`.
pub fn tf_shift(f: &Signal, lambda: PhasePoint) -> Signal {
    let n = f.size();
    let len = n.get();
    let (x, w) = (lambda.x % len, lambda.w as i64);
    Signal::from_fn(n, |t| n.root(w * t as i64) * f[(t + len - x) % len])
}

/// `pi(lambda)^* f = T_{-x} M_{-w} f`.
pub fn tf_shift_adjoint(f: &Signal, lambda: PhasePoint) -> Signal {
    let n = f.size();
    let len = n.get();
    let (x, w) = (lambda.x % len, lambda.w as i64);
    Signal::from_fn(n, |t| {
        let s = (t + x) % len;
        n.root(-w * s as i64) * f[s]
    })
}

/// The 2-cocycle `beta(X, Y) = e^{-2 pi i X.x Y.w / N}`, defined by
/// `pi(X) pi(Y) = beta(X, Y) pi(X + Y)`.
pub fn cocycle(n: TorusSize, a: PhasePoint, b: PhasePoint) -> UnitComplex {
    UnitComplex::root(n, -((a.x * b.w) as i64))
}

/// The Heisenberg bicharacter `rho(X, Y) = beta(X, Y) / beta(Y, X)`, so that
/// `pi(X) pi(Y) = rho(X, Y) pi(Y) pi(X)`.
pub fn heisenberg_bicharacter(n: TorusSize, a: PhasePoint, b: PhasePoint) -> UnitComplex {
    let k = (b.x * a.w) as i64 - (a.x * b.w) as i64;
    UnitComplex::root(n, k)
}

/// Phase `c` with `pi(lambda)^* = c * pi(-lambda)`, namely `e^{-2 pi i x w / N}`.
pub fn adjoint_phase(n: TorusSize, lambda: PhasePoint) -> UnitComplex {
    UnitComplex::root(n, -((lambda.x * lambda.w) as i64))
}

/// Unitary DFT, `out[w] = N^{-1/2} sum_t f[t] e^{-2 pi i w t / N}`.
pub fn dft(f: &Signal) -> Signal {
    dft_with_sign(f, -1)
}

/// Inverse of [`dft`].
pub fn idft(f: &Signal) -> Signal {
    dft_with_sign(f, 1)
}

fn dft_with_sign(f: &Signal, sign: i64) -> Signal {
    let n = f.size();
    let scale = 1.0 / (n.get() as f64).sqrt();
    Signal::from_fn(n, |w| {
        let acc: C64 = (0..n.get())
            .map(|t| f[t] * n.root(sign * (w * t) as i64))
            .sum();
        acc * scale
    })
}

/// `<f, g> = sum_t f[t] conj(g[t])`, linear in the first argument.
pub fn inner(f: &Signal, g: &Signal) -> Result<C64> {
    g.check_len(f.len())?;
    Ok(inner_unchecked(f.values(), g.values()))
}

#[inline]
pub(crate) fn inner_unchecked(f: &[C64], g: &[C64]) -> C64 {
    f.iter().zip(g).map(|(a, b)| a * b.conj()).sum()
}
