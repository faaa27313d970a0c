//! Buchberger completion for submodules of free modules, with cofactor
//! tracking and canonical reduced bases.

use std::sync::Arc;

use super::element::{ModuleElement, ModuleOrder};
use crate::error::{Error, Result};
use crate::polyring::{Coeff, Monomial, Polynomial, RingSpec};

/// A monic Groebner basis together with the expression of each basis
/// element as an explicit combination of the original generators:
/// `elements[i] == sum_j cofactors[i][j] * gens[j]`.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    pub order: ModuleOrder,
    pub elements: Vec<ModuleElement>,
    pub cofactors: Vec<Vec<Polynomial>>,
}

impl GroebnerBasis {
    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

struct Lead {
    pos: usize,
    mono: Monomial,
    coeff: Coeff,
}

fn lead_of(v: &ModuleElement, ord: ModuleOrder) -> Option<Lead> {
    v.leading(ord).map(|(pos, m, c)| Lead { pos, mono: m.clone(), coeff: c.clone() })
}

/// Full division: repeatedly cancels the order-greatest term of `v` that is
/// divisible by some leading term of `basis`, collecting the quotients.
/// Postcondition: `v == sum_i quotients[i] * basis[i] + remainder`, and no
/// term of the remainder is divisible by any basis leading term.
pub fn normal_form_tracked(
    v: &ModuleElement,
    basis: &[ModuleElement],
    ord: ModuleOrder,
) -> (ModuleElement, Vec<Polynomial>) {
    let ring = Arc::clone(v.ring());
    let leads: Vec<Option<Lead>> = basis.iter().map(|g| lead_of(g, ord)).collect();
    let mut quotients = vec![Polynomial::zero(&ring); basis.len()];
    let mut r = v.clone();
    loop {
        let target = r.max_term_where(ord, |pos, m| {
            leads.iter().any(|l| match l {
                Some(l) => l.pos == pos && l.mono.divides(m),
                None => false,
            })
        });
        let Some((pos, mono, coeff)) = target else { break };
        let gi = leads
            .iter()
            .position(|l| matches!(l, Some(l) if l.pos == pos && l.mono.divides(&mono)))
            .expect("divisor exists by construction");
        let lead = leads[gi].as_ref().unwrap();
        let q_mono = lead.mono.div_into(&mono);
        let factor = ring.c_mul(&coeff, &ring.c_inv(&lead.coeff));
        r = &r - &basis[gi].mul_term(&q_mono, &factor);
        quotients[gi] = &quotients[gi] + &Polynomial::from_term(&ring, q_mono, factor);
    }
    (r, quotients)
}

/// Remainder of `v` modulo `basis` (see [`normal_form_tracked`]).
pub fn normal_form(v: &ModuleElement, basis: &[ModuleElement], ord: ModuleOrder) -> ModuleElement {
    normal_form_tracked(v, basis, ord).0
}

/// Normalize an element for the working basis: over Q, scale to the
/// integer primitive representative with positive structural head
/// (fraction-free arithmetic keeps coefficients small); over a prime
/// field, scale monic. Returns the factor applied, so cofactors can
/// follow.
fn normalize_element(v: ModuleElement, ord: ModuleOrder) -> (ModuleElement, Coeff) {
    use num::bigint::BigInt;
    use num::rational::BigRational;
    use num::{Integer, One, Signed, Zero};

    let ring = Arc::clone(v.ring());
    match ring.mode() {
        crate::polyring::CoeffMode::Prime(_) => {
            let Some((_, _, c)) = v.leading(ord) else {
                return (v, ring.c_one());
            };
            let inv = ring.c_inv(&c.clone());
            (v.scale(&inv), inv)
        }
        crate::polyring::CoeffMode::Rational => {
            let mut num_gcd = BigInt::zero();
            let mut den_lcm = BigInt::one();
            for p in v.entries() {
                for (_, c) in p.terms() {
                    let Coeff::Rat(r) = c else { unreachable!("rational mode") };
                    num_gcd = num_gcd.gcd(r.numer());
                    den_lcm = den_lcm.lcm(r.denom());
                }
            }
            if num_gcd.is_zero() {
                return (v, ring.c_one());
            }
            let mut factor = BigRational::new(den_lcm, num_gcd);
            if let Some((_, _, Coeff::Rat(lc))) = v.leading(ord) {
                if (lc * &factor).is_negative() {
                    factor = -factor;
                }
            }
            let f = Coeff::Rat(factor);
            (v.scale(&f), f)
        }
    }
}

/// One recorded step of a pseudo-reduction, replayable onto cofactors.
enum ReduceStep {
    /// r <- lead_c * r - c * q * basis[gi]
    Cancel { gi: usize, q: Monomial, c: Coeff, lead_c: Coeff },
    /// r <- factor * r
    Scale { factor: Coeff },
}

/// Head pseudo-reduction: cancels leading terms by cross-multiplication,
/// never introducing fractions over Q, stripping content periodically.
/// The remainder is a unit multiple of a head-irreducible form; the step
/// log allows exact cofactor replay for nonzero remainders only.
fn top_pseudo_reduce(
    v: ModuleElement,
    basis: &[ModuleElement],
    leads: &[Lead],
    ord: ModuleOrder,
) -> (ModuleElement, Vec<ReduceStep>) {
    let ring = Arc::clone(v.ring());
    let mut steps = Vec::new();
    let mut r = v;
    let mut since_strip = 0usize;
    while let Some((pos, mono, coeff)) = r.leading(ord).map(|(p, m, c)| (p, m.clone(), c.clone())) {
        let Some(gi) = leads.iter().position(|l| l.pos == pos && l.mono.divides(&mono)) else {
            break;
        };
        let lead = &leads[gi];
        let q = lead.mono.div_into(&mono);
        if !ring.c_is_one(&lead.coeff) {
            r = r.scale(&lead.coeff);
        }
        r = &r - &basis[gi].mul_term(&q, &coeff);
        steps.push(ReduceStep::Cancel { gi, q, c: coeff, lead_c: lead.coeff.clone() });
        since_strip += 1;
        if since_strip >= 8 {
            since_strip = 0;
            let (stripped, factor) = normalize_element(r, ord);
            r = stripped;
            if !ring.c_is_one(&factor) {
                steps.push(ReduceStep::Scale { factor });
            }
        }
    }
    let (stripped, factor) = normalize_element(r, ord);
    if !ring.c_is_one(&factor) {
        steps.push(ReduceStep::Scale { factor });
    }
    (stripped, steps)
}

/// Replay a pseudo-reduction log onto a cofactor row.
fn replay_on_cofactors(
    steps: &[ReduceStep],
    cof: &mut [Polynomial],
    basis_cofs: &[Vec<Polynomial>],
) {
    for step in steps {
        match step {
            ReduceStep::Cancel { gi, q, c, lead_c } => {
                let ring = Arc::clone(cof[0].ring());
                for (g, c_out) in cof.iter_mut().enumerate() {
                    let mut out = c_out.clone();
                    if !ring.c_is_one(lead_c) {
                        out = out.scale(lead_c);
                    }
                    out = &out - &basis_cofs[*gi][g].mul_term(q, c);
                    *c_out = out;
                }
            }
            ReduceStep::Scale { factor } => {
                for c_out in cof.iter_mut() {
                    *c_out = c_out.scale(factor);
                }
            }
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Pair {
    i: usize,
    j: usize,
    pos: usize,
    lcm_degree: u32,
}

fn make_pair(i: usize, j: usize, leads: &[Lead]) -> Option<Pair> {
    let (a, b) = (&leads[i], &leads[j]);
    if a.pos != b.pos {
        return None;
    }
    Some(Pair { i, j, pos: a.pos, lcm_degree: a.mono.lcm(&b.mono).total_degree() })
}

/// Buchberger completion under `ord`. Input zero generators are skipped;
/// cofactor rows always refer to the input indexing. The `spair_cap`
/// bounds processed pairs and turns runaway computations into a
/// resource-exhaustion error rather than a wrong answer.
///
/// Working elements are kept primitive-integral over Q (monic over a
/// prime field); the canonical monic form is produced by [`reduce_basis`].
pub fn buchberger(
    gens: &[ModuleElement],
    ord: ModuleOrder,
    spair_cap: usize,
) -> Result<GroebnerBasis> {
    let ring: Option<&Arc<RingSpec>> = gens.first().map(|g| g.ring());
    let mut basis: Vec<ModuleElement> = Vec::new();
    let mut cofs: Vec<Vec<Polynomial>> = Vec::new();
    let mut leads: Vec<Lead> = Vec::new();

    for (j, g) in gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let ring = ring.unwrap();
        let (norm, factor) = normalize_element(g.clone(), ord);
        let mut cof = vec![Polynomial::zero(ring); gens.len()];
        cof[j] = Polynomial::constant(ring, factor);
        leads.push(lead_of(&norm, ord).unwrap());
        basis.push(norm);
        cofs.push(cof);
    }

    let mut pending: Vec<Pair> = Vec::new();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if let Some(p) = make_pair(i, j, &leads) {
                pending.push(p);
            }
        }
    }

    let mut processed = 0usize;
    let mut zero_reductions = 0usize;
    let stats = std::env::var("REACHMOD_GB_STATS").is_ok();
    while !pending.is_empty() {
        processed += 1;
        if processed > spair_cap {
            return Err(Error::PairCapExhausted(processed - 1));
        }
        if stats && processed % 2000 == 0 {
            eprintln!(
                "gb: pairs={processed} zero={zero_reductions} basis={} pending={}",
                basis.len(),
                pending.len()
            );
        }

        // normal selection: smallest lcm degree, ties broken structurally
        let sel = pending
            .iter()
            .enumerate()
            .min_by_key(|(_, p)| (p.lcm_degree, p.pos, p.i, p.j))
            .map(|(idx, _)| idx)
            .unwrap();
        let pair = pending.remove(sel);
        let (i, j) = (pair.i, pair.j);
        let lcm = leads[i].mono.lcm(&leads[j].mono);

        // product criterion, in its module-sound form: both elements must
        // live entirely in the shared leading position
        let coprime = leads[i].mono.is_coprime_with(&leads[j].mono);
        if coprime
            && basis[i].support() == [pair.pos]
            && basis[j].support() == [pair.pos]
        {
            continue;
        }

        // chain criterion: some k with LT(k) in the same position dividing
        // the lcm, both companion pairs no longer pending
        let chained = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && leads[k].pos == pair.pos
                && leads[k].mono.divides(&lcm)
                && !pending.iter().any(|p| (p.i == i && p.j == k) || (p.i == k && p.j == i))
                && !pending.iter().any(|p| (p.i == j && p.j == k) || (p.i == k && p.j == j))
        });
        if chained {
            continue;
        }

        let qi = leads[i].mono.div_into(&lcm);
        let qj = leads[j].mono.div_into(&lcm);
        let (ci, cj) = (leads[i].coeff.clone(), leads[j].coeff.clone());
        let s = &basis[i].mul_term(&qi, &cj) - &basis[j].mul_term(&qj, &ci);
        let (r, steps) = top_pseudo_reduce(s, &basis, &leads, ord);
        if r.is_zero() {
            zero_reductions += 1;
            continue;
        }

        // cofactors are reconstructed only for surviving remainders
        let mut rcof: Vec<Polynomial> = (0..gens.len())
            .map(|g| &cofs[i][g].mul_term(&qi, &cj) - &cofs[j][g].mul_term(&qj, &ci))
            .collect();
        replay_on_cofactors(&steps, &mut rcof, &cofs);

        let new_idx = basis.len();
        leads.push(lead_of(&r, ord).unwrap());
        basis.push(r);
        cofs.push(rcof);
        for k in 0..new_idx {
            if let Some(p) = make_pair(k, new_idx, &leads) {
                pending.push(p);
            }
        }
    }

    Ok(GroebnerBasis { order: ord, elements: basis, cofactors: cofs })
}

/// Canonicalize a Groebner basis: minimal generators, tails fully reduced,
/// leading coefficients 1, sorted descending by leading term. Two
/// presentations of one submodule yield identical output under one order.
pub fn reduce_basis(gb: GroebnerBasis) -> GroebnerBasis {
    let ord = gb.order;
    let n = gb.elements.len();
    if n == 0 {
        return gb;
    }
    let leads: Vec<Lead> = gb.elements.iter().map(|e| lead_of(e, ord).unwrap()).collect();

    // minimalize, scanning ascending so divisors are seen first
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| ord.cmp_terms((leads[a].pos, &leads[a].mono), (leads[b].pos, &leads[b].mono)));
    let mut kept: Vec<usize> = Vec::new();
    for i in idx {
        let covered = kept.iter().any(|&k| {
            leads[k].pos == leads[i].pos && leads[k].mono.divides(&leads[i].mono)
        });
        if !covered {
            kept.push(i);
        }
    }

    let mut elements: Vec<ModuleElement> = Vec::with_capacity(kept.len());
    let mut cofactors: Vec<Vec<Polynomial>> = Vec::with_capacity(kept.len());
    for &i in &kept {
        // the canonical form is monic
        let inv = {
            let ring = gb.elements[i].ring();
            ring.c_inv(&leads[i].coeff)
        };
        elements.push(gb.elements[i].scale(&inv));
        cofactors.push(gb.cofactors[i].iter().map(|c| c.scale(&inv)).collect());
    }

    // tail reduction; leading terms are pairwise irreducible so they survive
    for i in 0..elements.len() {
        let others: Vec<ModuleElement> = elements
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i)
            .map(|(_, e)| e.clone())
            .collect();
        let (r, quots) = normal_form_tracked(&elements[i], &others, ord);
        let mut cof = cofactors[i].clone();
        for (oi, q) in quots.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            let src = if oi < i { oi } else { oi + 1 };
            for g in 0..cof.len() {
                cof[g] = &cof[g] - &(q * &cofactors[src][g]);
            }
        }
        elements[i] = r;
        cofactors[i] = cof;
    }

    // deterministic ordering: descending leading terms
    let leads: Vec<Lead> = elements.iter().map(|e| lead_of(e, ord).unwrap()).collect();
    let mut order_idx: Vec<usize> = (0..elements.len()).collect();
    order_idx.sort_by(|&a, &b| {
        ord.cmp_terms((leads[b].pos, &leads[b].mono), (leads[a].pos, &leads[a].mono))
    });
    let elements = order_idx.iter().map(|&i| elements[i].clone()).collect();
    let cofactors = order_idx.iter().map(|&i| cofactors[i].clone()).collect();
    GroebnerBasis { order: ord, elements, cofactors }
}

/// Buchberger followed by reduction, plus the always-on self-check that
/// every output element reproduces exactly from its tracked cofactors.
pub fn groebner_checked(
    gens: &[ModuleElement],
    ord: ModuleOrder,
    spair_cap: usize,
) -> Result<GroebnerBasis> {
    let gb = reduce_basis(buchberger(gens, ord, spair_cap)?);
    for (e, cof) in gb.elements.iter().zip(&gb.cofactors) {
        let ring = e.ring();
        let mut acc = ModuleElement::zero(ring, e.rank());
        for (c, g) in cof.iter().zip(gens) {
            if !c.is_zero() {
                acc = &acc + &g.scale_poly(c);
            }
        }
        if &acc != e {
            return Err(Error::SelfCheck(
                "Groebner element does not reproduce from tracked cofactors".into(),
            ));
        }
    }
    Ok(gb)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freemod::element::PositionRule;
    use crate::polyring::{parse_polynomial, MonomialOrder};

    fn ring_t() -> Arc<RingSpec> {
        RingSpec::rationals(&["t"]).unwrap()
    }

    fn ord() -> ModuleOrder {
        ModuleOrder { base: MonomialOrder::Grevlex, rule: PositionRule::TermOverPosition }
    }

    fn elem1(ring: &Arc<RingSpec>, s: &str) -> ModuleElement {
        ModuleElement::new(ring, vec![parse_polynomial(s, ring).unwrap()])
    }

    #[test]
    fn normal_form_trivial_cases() {
        let r = ring_t();
        let g = elem1(&r, "t*y - 1");
        let basis = vec![g.clone()];
        // member reduces to zero
        let v = g.scale_poly(&parse_polynomial("t^2 + y", &r).unwrap());
        assert!(normal_form(&v, &basis, ord()).is_zero());
        // zero stays zero
        let z = ModuleElement::zero(&r, 1);
        assert!(normal_form(&z, &basis, ord()).is_zero());
    }

    #[test]
    fn normal_form_division_example() {
        // t^2*y against {t*y - 1}: t^2*y = t*(t*y - 1) + t
        let r = ring_t();
        let basis = vec![elem1(&r, "t*y - 1")];
        let v = elem1(&r, "t^2*y");
        let (nf, quots) = normal_form_tracked(&v, &basis, ord());
        assert_eq!(nf, elem1(&r, "t"));
        assert_eq!(quots[0], parse_polynomial("t", &r).unwrap());
    }

    #[test]
    fn unit_vector_is_its_own_basis() {
        let r = ring_t();
        let e1 = ModuleElement::unit(&r, 2, 0);
        let gb = groebner_checked(&[e1.clone()], ord(), 1000).unwrap();
        assert_eq!(gb.elements, vec![e1]);
    }

    #[test]
    fn duplicate_ideal_generators() {
        let r = ring_t();
        let gb = groebner_checked(&[elem1(&r, "t"), elem1(&r, "t")], ord(), 1000).unwrap();
        assert_eq!(gb.elements, vec![elem1(&r, "t")]);
    }

    #[test]
    fn unit_ideal_from_ty_minus_one_and_t_squared() {
        // hand computation: t*(t*y-1) = t^2*y - t, so t is in the ideal;
        // then t*y is, so 1 = t*y - (t*y - 1) is: the ideal is (1) and the
        // reduced basis is {1}.
        let r = ring_t();
        let gb =
            groebner_checked(&[elem1(&r, "t*y - 1"), elem1(&r, "t^2")], ord(), 1000).unwrap();
        assert_eq!(gb.elements, vec![elem1(&r, "1")]);
        // inputs reduce to zero against the basis
        for s in ["t*y - 1", "t^2", "t"] {
            assert!(normal_form(&elem1(&r, s), &gb.elements, ord()).is_zero());
        }
    }

    #[test]
    fn reduced_basis_scaling_and_pivoting() {
        let r = ring_t();
        // {2 e1} -> {e1}
        let two_e1 = ModuleElement::unit(&r, 2, 0).scale(&r.c_from_int(2));
        let gb = groebner_checked(&[two_e1], ord(), 1000).unwrap();
        assert_eq!(gb.elements, vec![ModuleElement::unit(&r, 2, 0)]);
        // {e1, e1 + e2} -> {e1, e2}
        let e1 = ModuleElement::unit(&r, 2, 0);
        let e2 = ModuleElement::unit(&r, 2, 1);
        let gb = groebner_checked(&[e1.clone(), &e1 + &e2], ord(), 1000).unwrap();
        let mut got = gb.elements.clone();
        got.sort_by_key(|e| e.support());
        assert_eq!(got, vec![e1, e2]);
    }

    #[test]
    fn product_criterion_not_applied_across_positions() {
        // f = x e1 + e2, g = y e1: the S-vector leaves a y e2 residue that
        // a naive coprimality skip would miss.
        let r = RingSpec::rationals(&["x"]).unwrap();
        let f = ModuleElement::new(
            &r,
            vec![parse_polynomial("x", &r).unwrap(), parse_polynomial("1", &r).unwrap()],
        );
        let g = ModuleElement::new(
            &r,
            vec![parse_polynomial("y", &r).unwrap(), parse_polynomial("0", &r).unwrap()],
        );
        let gb = groebner_checked(&[f, g], ord(), 1000).unwrap();
        // y e2 must be in the span of leading terms
        let probe = ModuleElement::new(
            &r,
            vec![parse_polynomial("0", &r).unwrap(), parse_polynomial("y", &r).unwrap()],
        );
        assert!(normal_form(&probe, &gb.elements, ord()).is_zero());
    }
}
