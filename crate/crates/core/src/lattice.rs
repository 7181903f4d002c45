//! Subgroups of the finite phase space and their adjoints.
//!
//! Lattices are stored as a lexicographically sorted list of points together
//! with a dense `N x N` index table, so membership and position lookups are
//! O(1). Commutation tests use the integer exponent of the Heisenberg
//! bicharacter, never floating point.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use rand::{Rng, RngExt};

use crate::error::{Error, Result};
use crate::phase_space::{PhasePoint, TorusSize};

/// How a lattice is described before enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LatticeSpec {
    /// The subgroup generated by the listed points (integers reduced mod N).
    Generators(Vec<(i64, i64)>),
    /// `aZ_N x bZ_N`.
    Separable { a: usize, b: usize },
}

impl FromStr for LatticeSpec {
    type Err = Error;

    /// Accepts `sep:a,b` and `gen:(x1,w1);(x2,w2);...` (an empty generator
    /// list gives the trivial subgroup).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |msg: &str| Error::InvalidSpec(format!("{msg}: {s:?}"));
        if let Some(rest) = s.strip_prefix("sep:") {
            let (a, b) = rest.split_once(',').ok_or_else(|| bad("expected sep:a,b"))?;
            let a = a.trim().parse().map_err(|_| bad("bad separable step"))?;
            let b = b.trim().parse().map_err(|_| bad("bad separable step"))?;
            Ok(LatticeSpec::Separable { a, b })
        } else if let Some(rest) = s.strip_prefix("gen:") {
            let mut gens = Vec::new();
            for part in rest.split(';').map(str::trim).filter(|p| !p.is_empty()) {
                let inner = part
                    .strip_prefix('(')
                    .and_then(|p| p.strip_suffix(')'))
                    .ok_or_else(|| bad("generator must look like (x,w)"))?;
                let (x, w) = inner.split_once(',').ok_or_else(|| bad("generator must look like (x,w)"))?;
                let x = x.trim().parse().map_err(|_| bad("bad generator coordinate"))?;
                let w = w.trim().parse().map_err(|_| bad("bad generator coordinate"))?;
                gens.push((x, w));
            }
            Ok(LatticeSpec::Generators(gens))
        } else {
            Err(bad("expected sep: or gen: prefix"))
        }
    }
}

impl fmt::Display for LatticeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeSpec::Separable { a, b } => write!(f, "sep:{a},{b}"),
            LatticeSpec::Generators(gens) => {
                write!(f, "gen:")?;
                for (i, (x, w)) in gens.iter().enumerate() {
                    if i > 0 {
                        write!(f, ";")?;
                    }
                    write!(f, "({x},{w})")?;
                }
                Ok(())
            }
        }
    }
}

/// A sorted set of distinct phase-space points with no group structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    n: TorusSize,
    points: Vec<PhasePoint>,
}

impl PointSet {
    pub fn new(n: TorusSize, points: impl IntoIterator<Item = PhasePoint>) -> Self {
        let set: BTreeSet<PhasePoint> = points
            .into_iter()
            .map(|p| n.point(p.x as i64, p.w as i64))
            .collect();
        PointSet {
            n,
            points: set.into_iter().collect(),
        }
    }

    pub fn size(&self) -> TorusSize {
        self.n
    }

    pub fn points(&self) -> &[PhasePoint] {
        &self.points
    }
}

/// A subgroup of `Z_N x Z_N` in canonical (lexicographic) order.
#[derive(Debug, Clone)]
pub struct Lattice {
    n: TorusSize,
    points: Vec<PhasePoint>,
    index: Vec<Option<usize>>,
}

impl PartialEq for Lattice {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.points == other.points
    }
}

impl Eq for Lattice {}

impl Lattice {
    fn from_sorted(n: TorusSize, points: Vec<PhasePoint>) -> Self {
        let len = n.get();
        let mut index = vec![None; len * len];
        for (i, p) in points.iter().enumerate() {
            index[p.x * len + p.w] = Some(i);
        }
        Lattice { n, points, index }
    }

    /// The smallest subgroup containing `generators`.
    pub fn generated_by(n: TorusSize, generators: &[PhasePoint]) -> Self {
        let len = n.get();
        let gens: Vec<PhasePoint> = generators
            .iter()
            .map(|g| n.point(g.x as i64, g.w as i64))
            .filter(|g| !g.is_origin())
            .collect();
        let mut seen = vec![false; len * len];
        seen[0] = true;
        let mut found = vec![PhasePoint::ORIGIN];
        let mut queue = VecDeque::from([PhasePoint::ORIGIN]);
        while let Some(p) = queue.pop_front() {
            for &g in &gens {
                let q = n.add(p, g);
                let slot = &mut seen[q.x * len + q.w];
                if !*slot {
                    *slot = true;
                    found.push(q);
                    queue.push_back(q);
                }
            }
        }
        found.sort_unstable();
        Self::from_sorted(n, found)
    }

    pub fn full(n: TorusSize) -> Self {
        Self::from_sorted(n, n.points().collect())
    }

    pub fn trivial(n: TorusSize) -> Self {
        Self::from_sorted(n, vec![PhasePoint::ORIGIN])
    }

    pub fn size(&self) -> TorusSize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[PhasePoint] {
        &self.points
    }

    pub fn contains(&self, p: PhasePoint) -> bool {
        self.index_of(p).is_some()
    }

    /// Position of `p` in canonical order.
    pub fn index_of(&self, p: PhasePoint) -> Option<usize> {
        let len = self.n.get();
        if p.x >= len || p.w >= len {
            return None;
        }
        self.index[p.x * len + p.w]
    }

    pub fn is_subset_of(&self, other: &Lattice) -> bool {
        self.n == other.n && self.points.iter().all(|&p| other.contains(p))
    }

    pub fn as_point_set(&self) -> PointSet {
        PointSet {
            n: self.n,
            points: self.points.clone(),
        }
    }

    /// `N^2 / |Lambda|`, which equals the size of the adjoint lattice.
    pub fn covolume(&self) -> usize {
        self.n.get() * self.n.get() / self.len()
    }
}

impl fmt::Display for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Builds a lattice from its description.
pub fn enumerate_lattice(spec: &LatticeSpec, n: TorusSize) -> Result<Lattice> {
    match spec {
        LatticeSpec::Generators(gens) => {
            let gens: Vec<PhasePoint> = gens.iter().map(|&(x, w)| n.point(x, w)).collect();
            Ok(Lattice::generated_by(n, &gens))
        }
        &LatticeSpec::Separable { a, b } => {
            let len = n.get();
            for step in [a, b] {
                if step == 0 || !len.is_multiple_of(step) {
                    return Err(Error::InvalidSpec(format!(
                        "separable step {step} does not divide N={len}"
                    )));
                }
            }
            let points = (0..len)
                .step_by(a)
                .flat_map(|x| (0..len).step_by(b).map(move |w| PhasePoint { x, w }))
                .collect();
            Ok(Lattice::from_sorted(n, points))
        }
    }
}

/// Parses a spec string and enumerates it.
pub fn parse_lattice(spec: &str, n: TorusSize) -> Result<Lattice> {
    enumerate_lattice(&spec.parse()?, n)
}

/// True when `pi(a)` and `pi(b)` commute, i.e. `rho(a, b) = 1`.
#[inline]
pub fn commute(n: TorusSize, a: PhasePoint, b: PhasePoint) -> bool {
    let len = n.get();
    ((b.x * a.w) % len + len - (a.x * b.w) % len).is_multiple_of(len)
}

/// All points `Y` with `rho(Y, a) = 1` for every `a` in the set.
pub fn adjoint_set(set: &PointSet) -> Lattice {
    adjoint_of(set.n, &set.points)
}

/// The adjoint lattice `{Y : rho(Y, lambda) = 1 for all lambda}`.
pub fn adjoint_lattice(lattice: &Lattice) -> Lattice {
    adjoint_of(lattice.n, &lattice.points)
}

fn adjoint_of(n: TorusSize, points: &[PhasePoint]) -> Lattice {
    let found = n
        .points()
        .filter(|&y| points.iter().all(|&a| commute(n, y, a)))
        .collect();
    Lattice::from_sorted(n, found)
}

pub fn is_isotropic(lattice: &Lattice) -> bool {
    let pts = &lattice.points;
    pts.iter()
        .enumerate()
        .all(|(i, &a)| pts[i + 1..].iter().all(|&b| commute(lattice.n, a, b)))
}

/// `|Lambda| / N` as an exact fraction.
pub fn redundancy(lattice: &Lattice) -> Ratio<usize> {
    Ratio::new(lattice.len(), lattice.n.get())
}

/// Every subgroup of `Z_N x Z_N`, each in canonical form, sorted by size and
/// then by point list.
pub fn all_subgroups(n: TorusSize) -> Vec<Lattice> {
    let mut cyclic: Vec<Lattice> = Vec::new();
    let mut seen: HashSet<Vec<PhasePoint>> = HashSet::new();
    let mut generator_of: Vec<PhasePoint> = Vec::new();
    for p in n.points() {
        let l = Lattice::generated_by(n, &[p]);
        if seen.insert(l.points.clone()) {
            cyclic.push(l);
            generator_of.push(p);
        }
    }
    // Every subgroup of Z_N^2 needs at most two generators.
    let mut all: Vec<Lattice> = cyclic.clone();
    for i in 0..generator_of.len() {
        for j in (i + 1)..generator_of.len() {
            if cyclic[j].contains(generator_of[i]) || cyclic[i].contains(generator_of[j]) {
                continue;
            }
            let l = Lattice::generated_by(n, &[generator_of[i], generator_of[j]]);
            if seen.insert(l.points.clone()) {
                all.push(l);
            }
        }
    }
    all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.points.cmp(&b.points)));
    all
}

/// A subgroup generated by one or two random points.
pub fn random_subgroup<R: Rng + ?Sized>(n: TorusSize, rng: &mut R) -> Lattice {
    let len = n.get();
    let count = rng.random_range(1..=2);
    let gens: Vec<PhasePoint> = (0..count)
        .map(|_| PhasePoint::new(rng.random_range(0..len), rng.random_range(0..len)))
        .collect();
    Lattice::generated_by(n, &gens)
}
