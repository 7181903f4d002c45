//! Finite Gabor analysis on the cyclic group `Z_N`.
//!
//! Time-frequency shifts `pi(x, w) = M_w T_x` on `C^N` form a projective
//! representation of the phase space `Z_N x Z_N`. Over a lattice (subgroup)
//! `Lambda` they generate a twisted group algebra, and signals become a
//! bimodule over that algebra and the one of the adjoint lattice `Lambda^0`.
//! In this finite model the classical identities (Poisson summation, Moyal,
//! FIGA, Janssen, Wexler-Raz) hold exactly and are checked numerically.
//!
//! ```
//! use ncgabor::{gabor_frames, hilbert_module::ModulePair, lattice, phase_space::TorusSize, tf_transforms};
//!
//! let n = TorusSize::new(12).unwrap();
//! let m = ModulePair::new(lattice::parse_lattice("sep:2,2", n).unwrap());
//! let g = tf_transforms::periodized_gaussian(n);
//! let dual = gabor_frames::canonical_dual(&g, &m).unwrap();
//! assert!(gabor_frames::wexler_raz_check(&g, &dual, &m).unwrap().passes);
//! ```

pub mod cli;
pub mod error;
pub mod gabor_frames;
pub mod hilbert_module;
pub mod io;
pub mod lattice;
pub mod numerics;
pub mod operator;
pub mod phase_space;
pub mod random;
pub mod tf_transforms;
pub mod twisted_algebra;

pub use error::{Error, Result};
pub use hilbert_module::ModulePair;
pub use lattice::{Lattice, LatticeSpec, PointSet};
pub use operator::OperatorMatrix;
pub use phase_space::{PhasePoint, Signal, TorusSize, UnitComplex, C64};
pub use tf_transforms::PhaseFunction;
pub use twisted_algebra::AlgebraElement;
