//! Behavioral tests for the reachability procedures: worked examples for
//! each operation plus randomized structural properties. The full-size
//! randomized suites live in the acceptance target.

use reachmod_core::field_oracle::{rstar_classical, Subspace};
use reachmod_core::freemod::{ModuleElement, PolyMatrix, SubmodulePresentation};
use reachmod_core::geocontrol::{verify_reachability_certificate, Clause, StateSubmodule, SystemPair};
use reachmod_core::polyring::{Polynomial, RingSpec};
use reachmod_core::samples::{self, matrix_of, vector_of, InstanceParams, SplitMix64};
use reachmod_core::Context;

#[test]
fn pencil_kernel_of_scalar_integrator() {
    // n = m = 1, A = 0, B = 1: kernel of [y, -1] is spanned by (1, y)
    let ctx = Context::default();
    let ring = RingSpec::rationals(&[]).unwrap();
    let a = PolyMatrix::zero(&ring, 1, 1);
    let b = PolyMatrix::identity(&ring, 1);
    let sys = SystemPair::new(a, b).unwrap();
    let kernel = sys.pencil_kernel(&ctx).unwrap();
    let expected = SubmodulePresentation::new(&ring, 2, vec![vector_of(&ring, &["1", "y"]).unwrap()]);
    assert!(reachmod_core::freemod::module_equal(&kernel, &expected, &ctx).unwrap());
}

#[test]
fn pencil_kernel_with_zero_input_has_zero_state_parts() {
    let ctx = Context::default();
    let ring = RingSpec::rationals(&["t"]).unwrap();
    let a = matrix_of(&ring, &[&["0", "1"], &["t", "0"]]).unwrap();
    let b = PolyMatrix::zero(&ring, 2, 1);
    let sys = SystemPair::new(a, b).unwrap();
    let kernel = sys.pencil_kernel(&ctx).unwrap();
    assert!(!kernel.generators().is_empty());
    for g in kernel.generators() {
        assert!((0..2).all(|i| g.entry(i).is_zero()), "state part must vanish, got {g}");
    }
}

#[test]
fn constrained_kernel_of_zero_m_has_zero_state_parts() {
    let ctx = Context::default();
    let (sys, _) = samples::example_a();
    let zero = StateSubmodule::zero(sys.ring(), 3);
    let cm = sys.constrained_kernel(&zero, &ctx).unwrap();
    for g in cm.generators() {
        assert!((0..3).all(|i| g.entry(i).is_zero()));
    }
}

#[test]
fn minimal_conditioned_contains_input_image_and_is_fixed_point() {
    let ctx = Context::default();
    let (sys, m) = samples::example_a();
    let (mstar, steps) = sys.minimal_conditioned(&m, &ctx).unwrap();
    assert!(mstar.contains_module(&sys.input_image(), &ctx).unwrap());
    // fixed point: M_* = im B + A(M_* ∩ M)
    let recomputed = sys.input_image().sum(&mstar.intersect(&m, &ctx).unwrap().apply(sys.a()));
    assert!(mstar.equals(&recomputed, &ctx).unwrap());
    assert_eq!(steps, 0, "example stabilizes immediately");

    // M = 0 collapses the chain to im B
    let zero = StateSubmodule::zero(sys.ring(), 3);
    let (collapsed, _) = sys.minimal_conditioned(&zero, &ctx).unwrap();
    assert!(collapsed.equals(&sys.input_image(), &ctx).unwrap());
}

#[test]
fn iterative_zero_cases() {
    let ctx = Context::default();
    let (sys, m) = samples::example_a();
    // M = 0 forces W = 0
    let zero = StateSubmodule::zero(sys.ring(), 3);
    let res = sys.max_reachability_iterative(&zero, &ctx).unwrap();
    assert!(res.module.is_zero_module(&ctx).unwrap());
    // B = 0 forces both methods to 0
    let ring = sys.ring().clone();
    let b0 = PolyMatrix::zero(&ring, 3, 2);
    let sys0 = SystemPair::new(sys.a().clone(), b0).unwrap();
    assert!(sys0.max_reachability_iterative(&m, &ctx).unwrap().module.is_zero_module(&ctx).unwrap());
    assert!(sys0.max_reachability_kernel(&m, &ctx).unwrap().module.is_zero_module(&ctx).unwrap());
}

#[test]
fn invariance_predicate_examples() {
    let ctx = Context::default();
    let (sys, _) = samples::example_a();
    // the zero module is trivially invariant
    let zero = StateSubmodule::zero(sys.ring(), 3);
    assert!(sys.is_ab_invariant(&zero, &ctx).unwrap());
    // the computed maximal reachability submodule is invariant by definition
    let (_, m) = samples::example_a();
    let result = sys.max_reachability_kernel(&m, &ctx).unwrap();
    assert!(sys.is_ab_invariant(&result.module, &ctx).unwrap());

    // identity system keeps every submodule invariant
    let ring = RingSpec::rationals(&["t"]).unwrap();
    let id = SystemPair::new(PolyMatrix::identity(&ring, 2), PolyMatrix::zero(&ring, 2, 1)).unwrap();
    let u = StateSubmodule::new(&ring, 2, vec![vector_of(&ring, &["t", "0"]).unwrap()]).unwrap();
    assert!(id.is_ab_invariant(&u, &ctx).unwrap());

    // nilpotent shift moves e2 out of <e2>
    let shift = SystemPair::new(
        matrix_of(&ring, &[&["0", "1"], &["0", "0"]]).unwrap(),
        PolyMatrix::zero(&ring, 2, 1),
    )
    .unwrap();
    let e2 = StateSubmodule::new(&ring, 2, vec![vector_of(&ring, &["0", "1"]).unwrap()]).unwrap();
    assert!(!shift.is_ab_invariant(&e2, &ctx).unwrap());
}

#[test]
fn reachable_module_examples() {
    let ctx = Context::default();
    let ring = RingSpec::rationals(&[]).unwrap();
    // B = 0 gives the zero module
    let sys = SystemPair::new(PolyMatrix::identity(&ring, 2), PolyMatrix::zero(&ring, 2, 1)).unwrap();
    assert!(sys.reachable_module().is_zero_module(&ctx).unwrap());
    // A = 0 gives im B
    let b = matrix_of(&ring, &[&["1"], &["2"]]).unwrap();
    let sys = SystemPair::new(PolyMatrix::zero(&ring, 2, 2), b).unwrap();
    assert!(sys.reachable_module().equals(&sys.input_image(), &ctx).unwrap());
    // classical controllable pair reaches everything
    let a = matrix_of(&ring, &[&["0", "1"], &["0", "0"]]).unwrap();
    let b = matrix_of(&ring, &[&["0"], &["1"]]).unwrap();
    let sys = SystemPair::new(a, b).unwrap();
    let full = StateSubmodule::full(&ring, 2);
    assert!(sys.reachable_module().equals(&full, &ctx).unwrap());
}

#[test]
fn example_b_trajectory_runs_through_m() {
    let ctx = Context::default();
    let (sys, m) = samples::example_b();
    let result = sys.max_reachability_kernel(&m, &ctx).unwrap();
    assert_eq!(result.pieces.len(), 1);
    let piece = &result.pieces[0];
    assert_eq!(piece.trajectory.horizon(), 2);
    for s in &piece.states {
        assert!(m.contains_vector(s, &ctx).unwrap(), "state {s} escapes M");
    }
    // the swept states span exactly the reference module
    let expected = StateSubmodule::new(sys.ring(), 3, samples::example_b_mzero_generators()).unwrap();
    assert!(piece.submodule.equals(&expected, &ctx).unwrap());
}

#[test]
fn certificate_passes_on_examples_and_flags_corruption() {
    let ctx = Context::default();
    for (sys, m) in [samples::example_a(), samples::example_b()] {
        let result = sys.max_reachability_kernel(&m, &ctx).unwrap();
        let report = verify_reachability_certificate(&sys, &m, &result, &ctx).unwrap();
        assert!(report.all_passed(), "failures: {:?}", report.failures().collect::<Vec<_>>());
    }

    // negative control: smuggle a unit vector outside M into a piece
    let (sys, m) = samples::example_a();
    let mut corrupted = sys.max_reachability_kernel(&m, &ctx).unwrap();
    let e1 = ModuleElement::unit(sys.ring(), 3, 0);
    assert!(!m.contains_vector(&e1, &ctx).unwrap());
    corrupted.pieces[0].states.push(e1);
    let report = verify_reachability_certificate(&sys, &m, &corrupted, &ctx).unwrap();
    assert!(!report.all_passed());
    let failed: Vec<_> = report.failures().map(|c| c.clause).collect();
    assert_eq!(failed, vec![Clause::StatesInsideM(0)]);
}

#[test]
fn cross_method_agreement_on_random_instances() {
    let ctx = Context::default();
    let params = InstanceParams::default();
    for seed in 0..12u64 {
        let (sys, m) = samples::random_instance(seed * 101 + 11, &params);
        let kernel = sys.max_reachability_kernel(&m, &ctx).unwrap();
        let chain = sys.max_reachability_iterative(&m, &ctx).unwrap();
        assert!(
            kernel.module.equals(&chain.module, &ctx).unwrap(),
            "methods disagree on seed {seed}"
        );
        assert!(sys.is_ab_invariant(&kernel.module, &ctx).unwrap());
        assert!(m.contains_module(&kernel.module, &ctx).unwrap());
    }
}

#[test]
fn maximality_witnesses_on_examples() {
    let ctx = Context::default();
    for (sys, m) in [samples::example_a(), samples::example_b()] {
        let cm = sys.constrained_kernel(&m, &ctx).unwrap();
        let result = sys.max_reachability_kernel(&m, &ctx).unwrap();
        let mut rng = SplitMix64::new(99);
        let ring = sys.ring().clone();
        // random combinations h of the constrained kernel's generators:
        // the swept submodule of pi(h) must land inside the result
        for _ in 0..8 {
            let mut h = ModuleElement::zero(&ring, cm.rank());
            for g in cm.generators() {
                let c0 = rng.int_in(-2, 2);
                let c1 = rng.int_in(-1, 1);
                let mult = &Polynomial::from_int(&ring, c0)
                    + &Polynomial::variable(&ring, ring.pencil_slot()).scale(&ring.c_from_int(c1));
                h = &h + &g.scale_poly(&mult);
            }
            let f = ModuleElement::new(&ring, h.entries()[..sys.state_dim()].to_vec());
            for (_, v) in f.pencil_coefficient_vectors() {
                assert!(result.module.contains_vector(&v, &ctx).unwrap());
            }
        }
    }
}

#[test]
fn monotone_and_idempotent_on_random_instances() {
    let ctx = Context::default();
    let params = InstanceParams::default();
    for seed in 0..6u64 {
        let (sys, m) = samples::random_instance(seed * 313 + 1, &params);
        // enlarge M by an extra generator
        let mut rng = SplitMix64::new(seed + 5000);
        let ring = sys.ring().clone();
        let n = sys.state_dim();
        let extra = ModuleElement::new(
            &ring,
            (0..n).map(|_| Polynomial::from_int(&ring, rng.int_in(-2, 2))).collect(),
        );
        let mut gens = m.generators().to_vec();
        gens.push(extra);
        let bigger = StateSubmodule::new(&ring, n, gens).unwrap();

        let small = sys.max_reachability_kernel(&m, &ctx).unwrap().module;
        let large = sys.max_reachability_kernel(&bigger, &ctx).unwrap().module;
        assert!(large.contains_module(&small, &ctx).unwrap(), "monotonicity broke on seed {seed}");

        // idempotence: feeding the result back reproduces it
        let replay = sys.max_reachability_kernel(&small, &ctx).unwrap().module;
        assert!(replay.equals(&small, &ctx).unwrap(), "idempotence broke on seed {seed}");
        let replay_chain = sys.max_reachability_iterative(&small, &ctx).unwrap().module;
        assert!(replay_chain.equals(&small, &ctx).unwrap());
    }
}

#[test]
fn full_module_case_equals_reachable_module() {
    let ctx = Context::default();
    let params = InstanceParams::default();
    for seed in 0..6u64 {
        let (sys, _) = samples::random_instance(seed * 71 + 2, &params);
        let full = StateSubmodule::full(sys.ring(), sys.state_dim());
        let result = sys.max_reachability_kernel(&full, &ctx).unwrap();
        assert!(
            result.module.equals(&sys.reachable_module(), &ctx).unwrap(),
            "full-module identity broke on seed {seed}"
        );
    }
}

#[test]
fn three_way_field_agreement_small() {
    let ctx = Context::default();
    for seed in 0..10u64 {
        for prime in [None, Some(32003)] {
            let (sys, m) = samples::random_field_instance(seed * 17 + 3, prime, 4, 2);
            let msub = Subspace::from_state_submodule(&m, &ctx).unwrap();
            let (rstar, steps) = rstar_classical(&sys, &msub).unwrap();
            assert!(steps <= sys.state_dim());
            let kernel = sys.max_reachability_kernel(&m, &ctx).unwrap().module;
            let chain = sys.max_reachability_iterative(&m, &ctx).unwrap().module;
            let rstar_mod = rstar.to_state_submodule();
            assert!(kernel.equals(&chain, &ctx).unwrap(), "seed {seed} {prime:?}");
            assert!(kernel.equals(&rstar_mod, &ctx).unwrap(), "seed {seed} {prime:?}");
        }
    }
}

#[test]
fn prime_field_pipeline_with_variables() {
    // the engine must run over F_p[t] as well
    let ctx = Context::default();
    let ring = RingSpec::prime_field(32003, &["t"]).unwrap();
    let a = matrix_of(&ring, &[&["0", "1"], &["0", "t"]]).unwrap();
    let b = matrix_of(&ring, &[&["1"], &["t"]]).unwrap();
    let sys = SystemPair::new(a, b).unwrap();
    let m = StateSubmodule::full(&ring, 2);
    let kernel = sys.max_reachability_kernel(&m, &ctx).unwrap();
    let chain = sys.max_reachability_iterative(&m, &ctx).unwrap();
    assert!(kernel.module.equals(&chain.module, &ctx).unwrap());
    assert!(kernel.module.equals(&sys.reachable_module(), &ctx).unwrap());
}
