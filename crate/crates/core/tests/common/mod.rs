//! Brute-force reference implementations, written straight from the
//! definitions with dense loops and `f64` trigonometry. Nothing here calls
//! into the library except for plain data types.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::f64::consts::PI;

use ncgabor::{Signal, TorusSize, C64};

pub type Dense = Vec<Vec<C64>>;

pub fn size(n: usize) -> TorusSize {
    TorusSize::new(n).unwrap()
}

pub fn e(k: f64, n: usize) -> C64 {
    C64::from_polar(1.0, 2.0 * PI * k / n as f64)
}

fn md(a: i64, n: usize) -> usize {
    a.rem_euclid(n as i64) as usize
}

/// `pi(x, w)` as a dense matrix: `(pi f)[t] = e^{2 pi i w t / N} f[t - x]`.
pub fn shift_matrix(n: usize, x: usize, w: usize) -> Dense {
    let mut m = vec![vec![C64::new(0.0, 0.0); n]; n];
    for (t, row) in m.iter_mut().enumerate() {
        row[md(t as i64 - x as i64, n)] = e((w * t) as f64, n);
    }
    m
}

pub fn zeros(n: usize) -> Dense {
    vec![vec![C64::new(0.0, 0.0); n]; n]
}

pub fn identity(n: usize) -> Dense {
    let mut m = zeros(n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = C64::new(1.0, 0.0);
    }
    m
}

pub fn matmul(a: &Dense, b: &Dense) -> Dense {
    let n = a.len();
    let mut out = zeros(n);
    for i in 0..n {
        for k in 0..n {
            for j in 0..n {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

pub fn adjoint(a: &Dense) -> Dense {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| a[j][i].conj()).collect()).collect()
}

pub fn scale(a: &Dense, c: C64) -> Dense {
    a.iter().map(|r| r.iter().map(|z| z * c).collect()).collect()
}

pub fn add_into(acc: &mut Dense, a: &Dense, c: C64) {
    for (ra, rb) in acc.iter_mut().zip(a) {
        for (x, y) in ra.iter_mut().zip(rb) {
            *x += c * y;
        }
    }
}

pub fn max_diff(a: &Dense, b: &Dense) -> f64 {
    a.iter()
        .flatten()
        .zip(b.iter().flatten())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

pub fn apply(a: &Dense, v: &[C64]) -> Vec<C64> {
    a.iter().map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum()).collect()
}

pub fn to_dense(m: &ncgabor::OperatorMatrix) -> Dense {
    (0..m.dim()).map(|i| m.row(i).to_vec()).collect()
}

pub fn inner(f: &[C64], g: &[C64]) -> C64 {
    f.iter().zip(g).map(|(a, b)| a * b.conj()).sum()
}

pub fn shifted(n: usize, f: &[C64], x: usize, w: usize) -> Vec<C64> {
    apply(&shift_matrix(n, x, w), f)
}

/// `V_g f(x, w) = sum_t f[t] conj(g[t - x]) e^{-2 pi i w t / N}`, row-major in `x`.
pub fn stft(f: &[C64], g: &[C64]) -> Vec<C64> {
    let n = f.len();
    let mut out = Vec::with_capacity(n * n);
    for x in 0..n {
        for w in 0..n {
            let mut acc = C64::new(0.0, 0.0);
            for t in 0..n {
                acc += f[t] * g[md(t as i64 - x as i64, n)].conj() * e(-((w * t) as f64), n);
            }
            out.push(acc);
        }
    }
    out
}

/// Unitary DFT.
pub fn dft(f: &[C64]) -> Vec<C64> {
    let n = f.len();
    (0..n)
        .map(|k| {
            (0..n).map(|t| f[t] * e(-((k * t) as f64), n)).sum::<C64>() / (n as f64).sqrt()
        })
        .collect()
}

/// Unnormalized symplectic transform
/// `F_s(y, eta) = sum_{x, w} F(x, w) e^{2 pi i (y w - x eta) / N}`.
pub fn symplectic_ft(func: &[C64], n: usize) -> Vec<C64> {
    let mut out = vec![C64::new(0.0, 0.0); n * n];
    for y in 0..n {
        for eta in 0..n {
            let mut acc = C64::new(0.0, 0.0);
            for x in 0..n {
                for w in 0..n {
                    acc += func[x * n + w] * e((y * w) as f64 - (x * eta) as f64, n);
                }
            }
            out[y * n + eta] = acc;
        }
    }
    out
}

pub type Points = Vec<(usize, usize)>;

/// Subgroup generated by two points: `{i a + j b : 0 <= i, j < N}`.
pub fn closure(n: usize, a: (usize, usize), b: (usize, usize)) -> Points {
    let mut hit = vec![false; n * n];
    for i in 0..n {
        for j in 0..n {
            hit[((i * a.0 + j * b.0) % n) * n + (i * a.1 + j * b.1) % n] = true;
        }
    }
    (0..n * n).filter(|&k| hit[k]).map(|k| (k / n, k % n)).collect()
}

/// Every subgroup of `Z_N^2`. Subgroups of a rank-two abelian group need at
/// most two generators, so closing all pairs of points is exhaustive.
pub fn all_subgroups(n: usize) -> BTreeSet<Points> {
    let pts: Vec<_> = (0..n).flat_map(|x| (0..n).map(move |w| (x, w))).collect();
    let mut out = BTreeSet::new();
    for (i, &a) in pts.iter().enumerate() {
        for &b in &pts[i..] {
            out.insert(closure(n, a, b));
        }
    }
    out
}

/// Points `Y` with `pi(Y) pi(L) = pi(L) pi(Y)` for all `L` in the set, checked
/// on dense matrices.
pub fn adjoint_by_matrices(n: usize, points: &[(usize, usize)]) -> Points {
    let mats: Vec<Dense> = points.iter().map(|&(x, w)| shift_matrix(n, x, w)).collect();
    let mut out = Vec::new();
    for y in 0..n {
        for eta in 0..n {
            let s = shift_matrix(n, y, eta);
            if mats
                .iter()
                .all(|m| max_diff(&matmul(&s, m), &matmul(m, &s)) < 1e-9)
            {
                out.push((y, eta));
            }
        }
    }
    out
}

pub fn frame_operator(n: usize, points: &[(usize, usize)], g: &[C64], gamma: &[C64]) -> Dense {
    let mut s = zeros(n);
    for &(x, w) in points {
        let pg = shifted(n, g, x, w);
        let pgamma = shifted(n, gamma, x, w);
        for i in 0..n {
            for j in 0..n {
                s[i][j] += pg[i] * pgamma[j].conj();
            }
        }
    }
    s
}

pub fn points_of(lattice: &ncgabor::Lattice) -> Points {
    lattice.points().iter().map(|p| (p.x, p.w)).collect()
}

pub fn signal(v: Vec<C64>) -> Signal {
    Signal::new(v).unwrap()
}

pub fn rel(a: C64, b: C64) -> f64 {
    (a - b).norm() / 1.0f64.max(a.norm()).max(b.norm())
}

/// Adjoint through the commutator phase `e^{2 pi i (y w - x eta) / N}`,
/// evaluated in floating point.
pub fn adjoint_by_phase(n: usize, points: &[(usize, usize)]) -> Points {
    let mut out = Vec::new();
    for y in 0..n {
        for eta in 0..n {
            let ok = points.iter().all(|&(x, w)| {
                (e((y * w) as f64 - (x * eta) as f64, n) - C64::new(1.0, 0.0)).norm() < 1e-9
            });
            if ok {
                out.push((y, eta));
            }
        }
    }
    out
}

/// Constant `c` minimizing `|| left - c * right ||`.
pub fn fitted_constant(left: &[C64], right: &[C64]) -> C64 {
    let num: C64 = right.iter().zip(left).map(|(r, l)| r.conj() * l).sum();
    let den: f64 = right.iter().map(|r| r.norm_sqr()).sum();
    num / den
}
