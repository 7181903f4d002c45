//! Seeded random inputs for identity checks.

use std::sync::Arc;

use rand::{Rng, RngExt, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

use crate::lattice::Lattice;
use crate::phase_space::{Signal, TorusSize, C64};
use crate::tf_transforms::PhaseFunction;
use crate::twisted_algebra::AlgebraElement;

/// The generator used by every seeded trial.
pub type TrialRng = Xoshiro256PlusPlus;

pub fn trial_rng(seed: u64) -> TrialRng {
    Xoshiro256PlusPlus::seed_from_u64(seed)
}

/// Uniform on the square `[-1, 1] x [-1, 1]`.
pub fn random_complex<R: Rng + ?Sized>(rng: &mut R) -> C64 {
    C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
}

pub fn random_signal<R: Rng + ?Sized>(n: TorusSize, rng: &mut R) -> Signal {
    Signal::from_fn(n, |_| random_complex(rng))
}

pub fn random_phase_function<R: Rng + ?Sized>(n: TorusSize, rng: &mut R) -> PhaseFunction {
    PhaseFunction::from_fn(n, |_| random_complex(rng))
}

pub fn random_element<R: Rng + ?Sized>(lattice: &Arc<Lattice>, rng: &mut R) -> AlgebraElement {
    AlgebraElement::from_fn(lattice.clone(), |_| random_complex(rng))
}
