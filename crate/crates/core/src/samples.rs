//! Built-in example systems, their reference results, and deterministic
//! random-instance generators shared by the test suites and benchmarks.

use std::sync::Arc;

use crate::error::Result;
use crate::freemod::{ModuleElement, PolyMatrix};
use crate::geocontrol::{StateSubmodule, SystemPair};
use crate::polyring::{parse_polynomial, RingSpec};

/// Parse a matrix of expression strings (row-major).
pub fn matrix_of(ring: &Arc<RingSpec>, rows: &[&[&str]]) -> Result<PolyMatrix> {
    let mut parsed = Vec::with_capacity(rows.len());
    for row in rows {
        let mut r = Vec::with_capacity(row.len());
        for s in *row {
            r.push(parse_polynomial(s, ring)?);
        }
        parsed.push(r);
    }
    Ok(PolyMatrix::from_rows(ring, parsed))
}

/// Parse a vector of expression strings.
pub fn vector_of(ring: &Arc<RingSpec>, entries: &[&str]) -> Result<ModuleElement> {
    let mut v = Vec::with_capacity(entries.len());
    for s in entries {
        v.push(parse_polynomial(s, ring)?);
    }
    Ok(ModuleElement::new(ring, v))
}

/// Three-state, two-input system over Q[t] with M spanned by (-1,1,0) and
/// (0,0,1).
pub fn example_a() -> (SystemPair, StateSubmodule) {
    let ring = RingSpec::rationals(&["t"]).unwrap();
    let a = matrix_of(&ring, &[&["0", "1", "0"], &["0", "0", "t"], &["0", "0", "0"]]).unwrap();
    let b = matrix_of(&ring, &[&["1", "-t"], &["t", "t"], &["0", "t"]]).unwrap();
    let sys = SystemPair::new(a, b).unwrap();
    let m = StateSubmodule::from_image_matrix(
        &matrix_of(&ring, &[&["-1", "0"], &["1", "0"], &["0", "1"]]).unwrap(),
    )
    .unwrap();
    (sys, m)
}

/// Pencil-kernel basis of [`example_a`]: columns (t,-t,-t,t,-y) and
/// (-t-y,-t*y,0,-y^2,0).
pub fn example_a_kernel_basis() -> Vec<ModuleElement> {
    let ring = example_a().0.ring().clone();
    vec![
        vector_of(&ring, &["t", "-t", "-t", "t", "-y"]).unwrap(),
        vector_of(&ring, &["-t-y", "-t*y", "0", "-y^2", "0"]).unwrap(),
    ]
}

/// The single generator h = (t,-t,-t,t,-y) of the constrained kernel of
/// [`example_a`].
pub fn example_a_reference_h() -> ModuleElement {
    let ring = example_a().0.ring().clone();
    vector_of(&ring, &["t", "-t", "-t", "t", "-y"]).unwrap()
}

/// Generator (t,-t,-t) of the maximal reachability submodule of
/// [`example_a`].
pub fn example_a_mzero_generator() -> ModuleElement {
    let ring = example_a().0.ring().clone();
    vector_of(&ring, &["t", "-t", "-t"]).unwrap()
}

/// Fixed regression datum: the maximal (A,B)-invariant submodule of
/// [`example_a`] is spanned by (1,-1,-1); strictly larger than the
/// maximal reachability submodule.
pub fn example_a_invariant_generator() -> ModuleElement {
    let ring = example_a().0.ring().clone();
    vector_of(&ring, &["1", "-1", "-1"]).unwrap()
}

/// Three-state, two-input system over Q[t,w] with M spanned by (1,0,0)
/// and (0,w,1).
///
/// The entries A(1,3) = -1, A(3,1) = t^3, A(3,3) = 0 are pinned by the
/// reference data: this is the unique y-free A for which the reference
/// kernel element of [`example_b_reference_h`] annihilates [yE - A, -B]
/// exactly (checked in the regression tests, together with the resulting
/// reachability submodule and its closing trajectory).
pub fn example_b() -> (SystemPair, StateSubmodule) {
    let ring = RingSpec::rationals(&["t", "w"]).unwrap();
    let a = matrix_of(
        &ring,
        &[&["0", "0", "-1"], &["w^4", "t", "0"], &["t^3", "t", "0"]],
    )
    .unwrap();
    let b = matrix_of(&ring, &[&["t", "0"], &["0", "0"], &["0", "1"]]).unwrap();
    let sys = SystemPair::new(a, b).unwrap();
    let m = StateSubmodule::from_image_matrix(
        &matrix_of(&ring, &[&["1", "0"], &["0", "w"], &["0", "1"]]).unwrap(),
    )
    .unwrap();
    (sys, m)
}

/// The single generator of the constrained kernel of [`example_b`]:
/// h = (t^2-t*y, -w^4*t, -w^3*t, -w^3+t*y-y^2, (w^4*t^2-t^5)+(-w^3*t+t^4)*y).
pub fn example_b_reference_h() -> ModuleElement {
    let ring = example_b().0.ring().clone();
    vector_of(
        &ring,
        &[
            "t^2 - t*y",
            "-w^4*t",
            "-w^3*t",
            "-w^3 + t*y - y^2",
            "w^4*t^2 - t^5 + (-w^3*t + t^4)*y",
        ],
    )
    .unwrap()
}

/// Generators (-t,0,0) and (t^2,-w^4*t,-w^3*t) of the maximal
/// reachability submodule of [`example_b`].
pub fn example_b_mzero_generators() -> Vec<ModuleElement> {
    let ring = example_b().0.ring().clone();
    vec![
        vector_of(&ring, &["-t", "0", "0"]).unwrap(),
        vector_of(&ring, &["t^2", "-w^4*t", "-w^3*t"]).unwrap(),
    ]
}

/// Tiny deterministic generator (splitmix64); bit-stable across platforms
/// and toolchains, which keeps the randomized suites reproducible.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n.max(1)
    }

    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        lo + self.below((hi - lo + 1) as u64) as i64
    }
}

/// Size limits for randomized instances.
#[derive(Debug, Clone, Copy)]
pub struct InstanceParams {
    pub max_state_dim: usize,
    pub max_input_dim: usize,
    pub max_ring_vars: usize,
    pub coeff_bound: i64,
}

impl Default for InstanceParams {
    fn default() -> Self {
        InstanceParams { max_state_dim: 4, max_input_dim: 2, max_ring_vars: 2, coeff_bound: 2 }
    }
}

fn random_linear_poly(
    rng: &mut SplitMix64,
    ring: &Arc<RingSpec>,
    bound: i64,
) -> crate::polyring::Polynomial {
    use crate::polyring::{Monomial, Polynomial};
    let slots = ring.num_slots();
    let mut acc = Polynomial::zero(ring);
    // roughly half the entries are plain constants
    let want_linear = rng.below(2) == 0;
    let c0 = rng.int_in(-bound, bound);
    if c0 != 0 {
        acc = &acc + &Polynomial::from_int(ring, c0);
    }
    if want_linear {
        for slot in 0..ring.num_ring_vars() {
            let c = rng.int_in(-bound, bound);
            if c != 0 {
                let term = Polynomial::from_term(ring, Monomial::var(slots, slot, 1), ring.c_from_int(c));
                acc = &acc + &term;
            }
        }
    }
    acc
}

/// Deterministic random system and submodule over Q[t1..tl], entries of
/// degree at most one.
pub fn random_instance(seed: u64, params: &InstanceParams) -> (SystemPair, StateSubmodule) {
    let mut rng = SplitMix64::new(seed);
    let nvars = rng.below(params.max_ring_vars as u64 + 1) as usize;
    let names = ["t", "w", "v", "u"];
    let ring = RingSpec::rationals(&names[..nvars]).unwrap();
    let n = 1 + rng.below(params.max_state_dim as u64) as usize;
    let m = 1 + rng.below(params.max_input_dim as u64) as usize;
    let a = PolyMatrix::from_fn(&ring, n, n, |_, _| {
        random_linear_poly(&mut rng, &ring, params.coeff_bound)
    });
    let b = PolyMatrix::from_fn(&ring, n, m, |_, _| {
        random_linear_poly(&mut rng, &ring, params.coeff_bound)
    });
    let sys = SystemPair::new(a, b).unwrap();
    let gens = (0..1 + rng.below(n as u64) as usize)
        .map(|_| {
            let entries = (0..n)
                .map(|_| random_linear_poly(&mut rng, &ring, params.coeff_bound))
                .collect();
            ModuleElement::new(&ring, entries)
        })
        .collect();
    let msub = StateSubmodule::new(&ring, n, gens).unwrap();
    (sys, msub)
}

/// Deterministic random field instance: no ring variables, constant
/// entries, over Q or over F_p.
pub fn random_field_instance(
    seed: u64,
    prime: Option<u64>,
    max_n: usize,
    max_m: usize,
) -> (SystemPair, StateSubmodule) {
    let mut rng = SplitMix64::new(seed);
    let ring = match prime {
        Some(p) => RingSpec::prime_field(p, &[]).unwrap(),
        None => RingSpec::rationals(&[]).unwrap(),
    };
    let n = 1 + rng.below(max_n as u64) as usize;
    let m = 1 + rng.below(max_m as u64) as usize;
    let c = |rng: &mut SplitMix64| crate::polyring::Polynomial::from_int(&ring, rng.int_in(-3, 3));
    let a = PolyMatrix::from_fn(&ring, n, n, |_, _| c(&mut rng));
    let b = PolyMatrix::from_fn(&ring, n, m, |_, _| c(&mut rng));
    let sys = SystemPair::new(a, b).unwrap();
    let gens = (0..1 + rng.below(n as u64) as usize)
        .map(|_| {
            let entries = (0..n).map(|_| c(&mut rng)).collect();
            ModuleElement::new(&ring, entries)
        })
        .collect();
    let msub = StateSubmodule::new(&ring, n, gens).unwrap();
    (sys, msub)
}
