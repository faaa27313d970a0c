//! Sparse multivariate polynomials with exact coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::monomial::{Monomial, MonomialOrder};
use super::ring::{same_ring, Coeff, RingSpec};

/// A polynomial in the flat ring R[t1..tl, y]. Terms are kept strictly
/// descending under the structural (grevlex) order with no zero
/// coefficients; the zero polynomial has an empty term list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Arc<RingSpec>,
    terms: Vec<(Monomial, Coeff)>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<RingSpec>) -> Self {
        Polynomial { ring: Arc::clone(ring), terms: Vec::new() }
    }

    pub fn constant(ring: &Arc<RingSpec>, c: Coeff) -> Self {
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.push((Monomial::one(ring.num_slots()), c));
        }
        p
    }

    pub fn from_int(ring: &Arc<RingSpec>, n: i64) -> Self {
        Self::constant(ring, ring.c_from_int(n))
    }

    pub fn one(ring: &Arc<RingSpec>) -> Self {
        Self::constant(ring, ring.c_one())
    }

    /// The variable occupying `slot` (use `ring.pencil_slot()` for y).
    pub fn variable(ring: &Arc<RingSpec>, slot: usize) -> Self {
        assert!(slot < ring.num_slots(), "slot {slot} out of range");
        Polynomial {
            ring: Arc::clone(ring),
            terms: vec![(Monomial::var(ring.num_slots(), slot, 1), ring.c_one())],
        }
    }

    pub fn from_term(ring: &Arc<RingSpec>, mono: Monomial, c: Coeff) -> Self {
        assert_eq!(mono.num_slots(), ring.num_slots());
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.push((mono, c));
        }
        p
    }

    /// Build from arbitrary (monomial, coefficient) pairs: sorts, merges
    /// duplicates, drops zeros.
    pub fn from_terms(ring: &Arc<RingSpec>, pairs: Vec<(Monomial, Coeff)>) -> Self {
        let mut acc: BTreeMap<Monomial, Coeff> = BTreeMap::new();
        for (m, c) in pairs {
            assert_eq!(m.num_slots(), ring.num_slots());
            match acc.entry(m) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(c);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let s = ring.c_add(e.get(), &c);
                    if s.is_zero() {
                        e.remove();
                    } else {
                        *e.get_mut() = s;
                    }
                }
            }
        }
        Polynomial {
            ring: Arc::clone(ring),
            terms: acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending structural (grevlex) order.
    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    /// Leading term under the given order. Grevlex hits the stored head;
    /// lex scans.
    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, &Coeff)> {
        match order {
            MonomialOrder::Grevlex => self.terms.first().map(|(m, c)| (m, c)),
            MonomialOrder::Lex => self
                .terms
                .iter()
                .max_by(|(a, _), (b, _)| order.cmp(a, b))
                .map(|(m, c)| (m, c)),
        }
    }

    pub fn coeff_of(&self, mono: &Monomial) -> Option<&Coeff> {
        self.terms.iter().find(|(m, _)| m == mono).map(|(_, c)| c)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.total_degree()).max()
    }

    /// Degree in the pencil variable; `None` for the zero polynomial.
    pub fn pencil_degree(&self) -> Option<u16> {
        self.terms.iter().map(|(m, _)| m.pencil_exp()).max()
    }

    pub fn is_pencil_free(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_pencil_free())
    }

    fn assert_same_ring(&self, other: &Polynomial) {
        assert!(same_ring(&self.ring, &other.ring), "ring mismatch");
    }

    fn add_impl(&self, other: &Polynomial, negate_other: bool) -> Polynomial {
        self.assert_same_ring(other);
        let ring = &self.ring;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match ma.cmp(mb) {
                std::cmp::Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let c = if negate_other { ring.c_neg(cb) } else { cb.clone() };
                    out.push((mb.clone(), c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate_other { ring.c_sub(ca, cb) } else { ring.c_add(ca, cb) };
                    if !c.is_zero() {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        for (mb, cb) in &other.terms[j..] {
            let c = if negate_other { ring.c_neg(cb) } else { cb.clone() };
            out.push((mb.clone(), c));
        }
        Polynomial { ring: Arc::clone(ring), terms: out }
    }

    /// Multiply by a single term. Order is preserved because global
    /// monomial orders are multiplicative.
    pub fn mul_term(&self, mono: &Monomial, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.mul(mono), self.ring.c_mul(k, c)))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        self.mul_term(&Monomial::one(self.ring.num_slots()), c)
    }

    fn mul_impl(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_ring(other);
        let ring = &self.ring;
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(ring);
        }
        let mut acc: BTreeMap<Monomial, Coeff> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ring.c_mul(ca, cb);
                match acc.entry(m) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let s = ring.c_add(e.get(), &c);
                        if s.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = s;
                        }
                    }
                }
            }
        }
        Polynomial { ring: Arc::clone(ring), terms: acc.into_iter().rev().collect() }
    }

    fn neg_impl(&self) -> Polynomial {
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), self.ring.c_neg(c))).collect(),
        }
    }

    /// Decompose along powers of y: returns (degree, y-free coefficient)
    /// pairs in strictly descending degree, zero coefficients omitted.
    /// Reassembling sum(coeff_k * y^k) reproduces the polynomial.
    pub fn pencil_coefficients(&self) -> Vec<(u16, Polynomial)> {
        let mut buckets: BTreeMap<u16, Vec<(Monomial, Coeff)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            buckets
                .entry(m.pencil_exp())
                .or_default()
                .push((m.without_pencil(), c.clone()));
        }
        buckets
            .into_iter()
            .rev()
            .map(|(deg, pairs)| (deg, Polynomial::from_terms(&self.ring, pairs)))
            .collect()
    }

    /// Canonical text form: terms descending under `order`, reduced
    /// fractions, `*` for products, `^` for powers.
    pub fn render(&self, order: MonomialOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms: Vec<&(Monomial, Coeff)> = self.terms.iter().collect();
        if order != MonomialOrder::Grevlex {
            terms.sort_by(|(a, _), (b, _)| order.cmp(b, a).then(std::cmp::Ordering::Equal));
        }
        let ring = &self.ring;
        let mut out = String::new();
        for (idx, (m, c)) in terms.iter().enumerate() {
            let neg = ring.c_is_negative(c);
            let mag = if neg { ring.c_neg(c) } else { (*c).clone() };
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = render_monomial(ring, m);
            if mono.is_empty() {
                out.push_str(&ring.render_coeff(&mag));
            } else if ring.c_is_one(&mag) {
                out.push_str(&mono);
            } else {
                out.push_str(&ring.render_coeff(&mag));
                out.push('*');
                out.push_str(&mono);
            }
        }
        out
    }
}

fn render_monomial(ring: &RingSpec, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for slot in 0..ring.num_slots() {
        let e = m.exps()[slot];
        if e == 0 {
            continue;
        }
        if e == 1 {
            parts.push(ring.slot_name(slot).to_string());
        } else {
            parts.push(format!("{}^{}", ring.slot_name(slot), e));
        }
    }
    parts.join("*")
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(MonomialOrder::Grevlex))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.add_impl(rhs, false)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.add_impl(rhs, true)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.mul_impl(rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.neg_impl()
    }
}
