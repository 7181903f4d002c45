//! Property tests over random sizes, lattices and signals.

mod common;

use std::sync::Arc;

use common::{rel, size};
use ncgabor::gabor_frames::{
    canonical_dual, frame_bounds, frame_operator, tight_window, wexler_raz_check, wexler_raz_duals,
    multiwindow_wexler_raz,
};
use ncgabor::hilbert_module::{
    associativity_residual, figa_check, janssen_coefficients, noncommutative_poisson, rank_one,
};
use ncgabor::io::{format_signal, parse_signal};
use ncgabor::lattice::{adjoint_lattice, is_isotropic, parse_lattice, random_subgroup, LatticeSpec};
use ncgabor::numerics::{cg_solve, jacobi_eig, lu_solve, HermitianOperator};
use ncgabor::phase_space::{dft, idft, inner, tf_shift, translate};
use ncgabor::random::{random_element, random_phase_function, random_signal, trial_rng, TrialRng};
use ncgabor::tf_transforms::{moyal_check, periodized_gaussian, poisson_sum, stft};
use ncgabor::twisted_algebra::{extract_coefficients, represent, twisted_convolve};
use ncgabor::{Lattice, ModulePair, OperatorMatrix, PhasePoint, Signal, TorusSize, C64};
use proptest::prelude::*;

fn setup(n: usize, seed: u64) -> (TorusSize, TrialRng) {
    (size(n), trial_rng(seed))
}

fn unit(s: Signal) -> Signal {
    let norm = s.norm();
    s.scale(C64::new(1.0 / norm, 0.0))
}

fn complex() -> impl Strategy<Value = C64> {
    (-1e3f64..1e3, -1e3f64..1e3).prop_map(|(re, im)| C64::new(re, im))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn translation_is_a_group_action(n in 2usize..16, a in -40i64..40, b in -40i64..40, seed: u64) {
        let (n, mut rng) = setup(n, seed);
        let f = random_signal(n, &mut rng);
        prop_assert_eq!(translate(&translate(&f, a), b), translate(&f, a + b));
    }

    #[test]
    fn shifts_and_dft_are_unitary(n in 2usize..16, x in 0usize..16, w in 0usize..16, seed: u64) {
        let (n, mut rng) = setup(n, seed);
        let f = random_signal(n, &mut rng);
        let g = random_signal(n, &mut rng);
        let p = PhasePoint::new(x % n.get(), w % n.get());
        let before = inner(&f, &g).unwrap();
        prop_assert!(rel(inner(&tf_shift(&f, p), &tf_shift(&g, p)).unwrap(), before) < 1e-12);
        prop_assert!(rel(inner(&dft(&f), &dft(&g)).unwrap(), before) < 1e-12);
        prop_assert!(idft(&dft(&f)).distance(&f) < 1e-12 * f.norm().max(1.0));
        prop_assert_eq!(inner(&g, &f).unwrap(), before.conj());
    }

    #[test]
    fn signal_files_round_trip(values in prop::collection::vec(complex(), 2..20)) {
        let s = Signal::new(values).unwrap();
        prop_assert_eq!(parse_signal(&format_signal(&s)).unwrap(), s);
    }

    #[test]
    fn generated_lattices_are_subgroups(n in 2usize..13, seed: u64) {
        let (n, mut rng) = setup(n, seed);
        let l = random_subgroup(n, &mut rng);
        for &a in l.points() {
            prop_assert!(l.contains(n.neg(a)));
            for &b in l.points() {
                prop_assert!(l.contains(n.add(a, b)));
            }
        }
        prop_assert_eq!(n.get() * n.get() % l.len(), 0);
    }

    #[test]
    fn adjoint_is_an_involution(n in 2usize..13, seed: u64) {
        let (n, mut rng) = setup(n, seed);
        let l = random_subgroup(n, &mut rng);
        let adj = adjoint_lattice(&l);
        prop_assert_eq!(l.len() * adj.len(), n.get() * n.get());
        prop_assert_eq!(&adjoint_lattice(&adj), &l);
        prop_assert_eq!(is_isotropic(&l), l.is_subset_of(&adj));
        prop_assert_eq!(common::points_of(&adj), common::adjoint_by_phase(n.get(), &common::points_of(&l)));
    }

    #[test]
    fn lattice_specs_round_trip(n in 2usize..13, x1 in 0usize..13, w1 in 0usize..13, x2 in 0usize..13, w2 in 0usize..13) {
        let spec = format!("gen:({x1},{w1});({x2},{w2})");
        let parsed: LatticeSpec = spec.parse().unwrap();
        let again: LatticeSpec = parsed.to_string().parse().unwrap();
        prop_assert_eq!(&parsed, &again);
        let n = size(n);
        let l = parse_lattice(&spec, n).unwrap();
        let p = |x: usize, w: usize| PhasePoint::new(x % n.get(), w % n.get());
        prop_assert_eq!(l, Lattice::generated_by(n, &[p(x1, w1), p(x2, w2)]));
    }

    #[test]
    fn moyal_and_covariance(n in 2usize..12, seed: u64) {
        let (n, mut rng) = setup(n, seed);
        let [f1, f2, g1, g2] = std::array::from_fn(|_| random_signal(n, &mut rng));
        let (lhs, rhs) = moyal_check(&f1, &f2, &g1, &g2).unwrap();
        prop_assert!(rel(lhs, rhs) < 1e-10);
        let v = stft(&f1, &g1).unwrap();
        let brute = common::stft(f1.values(), g1.values());
        prop_assert!(v.values().iter().zip(&brute).all(|(a, b)| (a - b).norm() < 1e-10));
    }

    #[test]
    fn poisson_on_random_subgroups(n in 2usize..13, seed: u64) {
        let (n, mut rng) = setup(n, seed);
        let l = random_subgroup(n, &mut rng);
        let (lhs, rhs) = poisson_sum(&random_phase_function(n, &mut rng), &l);
        prop_assert!(rel(lhs, rhs) < 1e-10);
    }

    #[test]
    fn twisted_algebra_laws(n in 2usize..9, seed: u64) {
        let (n, mut rng) = setup(n, seed);
        let l = Arc::new(random_subgroup(n, &mut rng));
        let [a, b, c] = std::array::from_fn(|_| random_element(&l, &mut rng));
        let ab = twisted_convolve(&a, &b).unwrap();
        let lhs = twisted_convolve(&ab, &c).unwrap();
        let rhs = twisted_convolve(&a, &twisted_convolve(&b, &c).unwrap()).unwrap();
        let scale = a.l1_norm() * b.l1_norm() * c.l1_norm();
        prop_assert!(lhs.max_abs_diff(&rhs) < 1e-12 * scale);
        prop_assert!(ab.l1_norm() <= a.l1_norm() * b.l1_norm() * (1.0 + 1e-12));
        let prod = represent(&a).matmul(&represent(&b)).unwrap();
        prop_assert!(represent(&ab).distance(&prod).unwrap() < 1e-12 * scale);
        prop_assert!(extract_coefficients(&represent(&a), &l).unwrap().max_abs_diff(&a) < 1e-12 * a.l1_norm());
    }

    #[test]
    fn module_identities(n in 2usize..10, seed: u64) {
        let (n, mut rng) = setup(n, seed);
        let m = ModulePair::new(random_subgroup(n, &mut rng));
        let [f, g, h, k] = std::array::from_fn(|_| unit(random_signal(n, &mut rng)));
        prop_assert!(associativity_residual(&f, &g, &h, &m).unwrap() < 1e-10);
        let (lhs, rhs) = figa_check(&f, &g, &h, &k, &m).unwrap();
        prop_assert!(rel(lhs, rhs) < 1e-10);
        let (lhs, rhs) = noncommutative_poisson(&f, &g, &m).unwrap();
        prop_assert!(rel(lhs, rhs) < 1e-10);
        let j = represent(&janssen_coefficients(&g, &h, &m).unwrap());
        prop_assert!(j.distance(&rank_one(&h, &g, &m).unwrap()).unwrap() < 1e-10);
    }

    #[test]
    fn frame_operator_trace_and_bounds(n in 2usize..12, seed: u64) {
        let (n, mut rng) = setup(n, seed);
        let m = ModulePair::new(random_subgroup(n, &mut rng));
        let g = random_signal(n, &mut rng);
        let s = frame_operator(&g, &m).unwrap();
        // trace(S) = |Lambda| ||g||^2
        prop_assert!((s.trace().re - m.lattice().len() as f64 * g.norm_sqr()).abs() < 1e-10 * s.trace().re.max(1.0));
        let r = frame_bounds(&g, &m).unwrap();
        prop_assert!(r.lower_bound <= r.upper_bound);
        let mean = s.trace().re / n.get() as f64;
        prop_assert!(r.upper_bound >= mean * (1.0 - 1e-10));
        if r.is_frame {
            prop_assert!(r.lower_bound <= mean * (1.0 + 1e-10));
        }
        if m.lattice().len() < n.get() {
            prop_assert!(!r.is_frame);
        }
    }

    #[test]
    fn duals_of_generic_windows(seed: u64, lattice in prop::sample::select(vec!["sep:2,2", "sep:1,3", "sep:2,3", "gen:(1,2);(0,4)", "sep:3,2"])) {
        let n = size(12);
        let mut rng = trial_rng(seed);
        let m = ModulePair::new(parse_lattice(lattice, n).unwrap());
        let g = random_signal(n, &mut rng);
        let r = frame_bounds(&g, &m).unwrap();
        prop_assume!(r.is_frame && r.condition_number < 1e6);
        let dual = canonical_dual(&g, &m).unwrap();
        prop_assert!(wexler_raz_check(&g, &dual, &m).unwrap().passes);
        let prod = frame_operator(&dual, &m).unwrap().matmul(&frame_operator(&g, &m).unwrap()).unwrap();
        prop_assert!(prod.distance(&OperatorMatrix::identity(12)).unwrap() < 1e-8);
        let h = tight_window(&g, &m).unwrap();
        let sh = frame_operator(&h, &m).unwrap();
        let c = m.redundancy() * h.norm_sqr();
        prop_assert!(sh.distance(&OperatorMatrix::identity(12).scale(C64::new(c, 0.0))).unwrap() < 1e-8);

        let [g1, g2] = std::array::from_fn(|_| random_signal(n, &mut rng));
        let duals = wexler_raz_duals(&[g1.clone(), g2.clone()], &m).unwrap();
        let pairs = vec![(g1, duals[0].clone()), (g2, duals[1].clone())];
        prop_assert!(multiwindow_wexler_raz(&pairs, &m).unwrap().passes);
    }

    #[test]
    fn single_window_minimum_norm_dual_is_canonical(seed: u64) {
        let n = size(12);
        let m = ModulePair::new(parse_lattice("sep:2,2", n).unwrap());
        let mut rng = trial_rng(seed);
        let g = random_signal(n, &mut rng);
        let r = frame_bounds(&g, &m).unwrap();
        prop_assume!(r.is_frame && r.condition_number < 1e6);
        let dual = canonical_dual(&g, &m).unwrap();
        let min_norm = wexler_raz_duals(std::slice::from_ref(&g), &m).unwrap();
        prop_assert!(min_norm[0].distance(&dual) < 1e-8 * dual.norm());
    }

    #[test]
    fn hermitian_solvers(n in 2usize..12, seed: u64) {
        let (n, mut rng) = setup(n, seed);
        let len = n.get();
        let a = OperatorMatrix::from_fn(len, |_, _| ncgabor::random::random_complex(&mut rng));
        // A^H A + I is Hermitian positive definite
        let spd = a.adjoint().matmul(&a).unwrap().add(&OperatorMatrix::identity(len)).unwrap();
        let eig = jacobi_eig(&spd).unwrap();
        prop_assert!(eig.reconstruct().distance(&spd).unwrap() < 1e-10 * spd.frobenius_norm());
        prop_assert!(eig.values.windows(2).all(|w| w[0] <= w[1]));
        prop_assert!(eig.min() >= 1.0 - 1e-10);

        let b = random_signal(n, &mut rng);
        let op = HermitianOperator::from_matrix(&spd).unwrap();
        let x = cg_solve(&op, &b, 1e-12).unwrap();
        prop_assert!(spd.apply(&x).unwrap().distance(&b) < 1e-9 * b.norm());
        let y = lu_solve(&a, b.values()).unwrap();
        let ay = Signal::new(a.apply_slice(&y)).unwrap();
        prop_assert!(ay.distance(&b) <= 1e-9 * b.norm());
    }
}

#[test]
fn gaussian_is_a_frame_on_every_oversampled_separable_lattice() {
    let n = size(12);
    let g = periodized_gaussian(n);
    for a in [1, 2, 3, 4, 6, 12] {
        for b in [1, 2, 3, 4, 6, 12] {
            let l = parse_lattice(&format!("sep:{a},{b}"), n).unwrap();
            let r = frame_bounds(&g, &ModulePair::new(l)).unwrap();
            if a * b > 12 {
                assert!(!r.is_frame, "sep:{a},{b}");
            }
            if a * b <= 6 {
                assert!(r.is_frame, "sep:{a},{b}");
            }
        }
    }
}
