//! Free-module elements and module term orders.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use crate::polyring::{same_ring, Coeff, Monomial, MonomialOrder, Polynomial, RingSpec};

/// How positions and monomials combine into a total order on module terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PositionRule {
    /// Position decides first; lower index is greater.
    PositionOverTerm,
    /// Monomial decides first; lower index breaks ties.
    TermOverPosition,
    /// Positions below the split dominate all positions at or above it;
    /// inside each block the monomial decides first. This is the
    /// elimination order used for syzygy extraction: it separates the
    /// relation block without forcing eliminations among the syzygy
    /// coordinates themselves.
    BlockElimination(usize),
}

/// Total well-order on (position, monomial) pairs, compatible with scalar
/// multiplication.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModuleOrder {
    pub base: MonomialOrder,
    pub rule: PositionRule,
}

impl ModuleOrder {
    pub fn cmp_terms(&self, a: (usize, &Monomial), b: (usize, &Monomial)) -> Ordering {
        let (i, m) = a;
        let (j, n) = b;
        match self.rule {
            PositionRule::PositionOverTerm => j.cmp(&i).then_with(|| self.base.cmp(m, n)),
            PositionRule::TermOverPosition => self.base.cmp(m, n).then_with(|| j.cmp(&i)),
            PositionRule::BlockElimination(split) => {
                let (bi, bj) = ((i >= split) as u8, (j >= split) as u8);
                bj.cmp(&bi).then_with(|| self.base.cmp(m, n)).then_with(|| j.cmp(&i))
            }
        }
    }
}

/// A vector of polynomials in R[y]^k, all sharing one ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleElement {
    ring: Arc<RingSpec>,
    entries: Vec<Polynomial>,
}

impl ModuleElement {
    pub fn new(ring: &Arc<RingSpec>, entries: Vec<Polynomial>) -> Self {
        for e in &entries {
            assert!(same_ring(ring, e.ring()), "ring mismatch in module element");
        }
        ModuleElement { ring: Arc::clone(ring), entries }
    }

    pub fn zero(ring: &Arc<RingSpec>, rank: usize) -> Self {
        ModuleElement {
            ring: Arc::clone(ring),
            entries: (0..rank).map(|_| Polynomial::zero(ring)).collect(),
        }
    }

    /// Standard basis vector e_i (0-indexed).
    pub fn unit(ring: &Arc<RingSpec>, rank: usize, i: usize) -> Self {
        assert!(i < rank);
        let mut v = Self::zero(ring, rank);
        v.entries[i] = Polynomial::one(ring);
        v
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    pub fn entry(&self, i: usize) -> &Polynomial {
        &self.entries[i]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    pub fn is_pencil_free(&self) -> bool {
        self.entries.iter().all(Polynomial::is_pencil_free)
    }

    /// Largest y-degree over all entries; `None` when zero.
    pub fn pencil_degree(&self) -> Option<u16> {
        self.entries.iter().filter_map(Polynomial::pencil_degree).max()
    }

    fn assert_compatible(&self, other: &ModuleElement) {
        assert!(same_ring(&self.ring, &other.ring), "ring mismatch");
        assert_eq!(self.rank(), other.rank(), "rank mismatch");
    }

    /// Multiply every entry by a single ring term.
    pub fn mul_term(&self, mono: &Monomial, c: &Coeff) -> ModuleElement {
        ModuleElement {
            ring: Arc::clone(&self.ring),
            entries: self.entries.iter().map(|p| p.mul_term(mono, c)).collect(),
        }
    }

    pub fn scale_poly(&self, p: &Polynomial) -> ModuleElement {
        ModuleElement {
            ring: Arc::clone(&self.ring),
            entries: self.entries.iter().map(|e| e * p).collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> ModuleElement {
        ModuleElement {
            ring: Arc::clone(&self.ring),
            entries: self.entries.iter().map(|e| e.scale(c)).collect(),
        }
    }

    /// Leading (position, monomial, coefficient) under a module order.
    pub fn leading(&self, ord: ModuleOrder) -> Option<(usize, &Monomial, &Coeff)> {
        match ord.rule {
            PositionRule::PositionOverTerm => {
                for (i, p) in self.entries.iter().enumerate() {
                    if let Some((m, c)) = p.leading_term(ord.base) {
                        return Some((i, m, c));
                    }
                }
                None
            }
            PositionRule::TermOverPosition | PositionRule::BlockElimination(_) => {
                let mut best: Option<(usize, &Monomial, &Coeff)> = None;
                for (i, p) in self.entries.iter().enumerate() {
                    if let Some((m, c)) = p.leading_term(ord.base) {
                        let better = match &best {
                            None => true,
                            Some((bi, bm, _)) => {
                                ord.cmp_terms((i, m), (*bi, bm)) == Ordering::Greater
                            }
                        };
                        if better {
                            best = Some((i, m, c));
                        }
                    }
                }
                best
            }
        }
    }

    /// Positions carrying a nonzero entry.
    pub fn support(&self) -> Vec<usize> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    /// The ord-greatest term of the whole element that satisfies `pred`.
    pub fn max_term_where<F>(&self, ord: ModuleOrder, mut pred: F) -> Option<(usize, Monomial, Coeff)>
    where
        F: FnMut(usize, &Monomial) -> bool,
    {
        let mut best: Option<(usize, Monomial, Coeff)> = None;
        for (i, p) in self.entries.iter().enumerate() {
            for (m, c) in p.terms() {
                if !pred(i, m) {
                    continue;
                }
                let better = match &best {
                    None => true,
                    Some((bi, bm, _)) => ord.cmp_terms((i, m), (*bi, bm)) == Ordering::Greater,
                };
                if better {
                    best = Some((i, m.clone(), c.clone()));
                }
            }
        }
        best
    }

    /// Decompose along powers of y into vectors of y-free polynomials,
    /// descending in degree; zero vectors omitted.
    pub fn pencil_coefficient_vectors(&self) -> Vec<(u16, ModuleElement)> {
        let mut buckets: BTreeMap<u16, Vec<Polynomial>> = BTreeMap::new();
        for (idx, p) in self.entries.iter().enumerate() {
            for (deg, coeff) in p.pencil_coefficients() {
                let v = buckets
                    .entry(deg)
                    .or_insert_with(|| vec![Polynomial::zero(&self.ring); self.rank()]);
                v[idx] = coeff;
            }
        }
        buckets
            .into_iter()
            .rev()
            .map(|(deg, entries)| (deg, ModuleElement::new(&self.ring, entries)))
            .collect()
    }

    /// Transposed-vector rendering: `(p1, p2, ...)`.
    pub fn render(&self, order: MonomialOrder) -> String {
        let parts: Vec<String> = self.entries.iter().map(|p| p.render(order)).collect();
        format!("({})", parts.join(", "))
    }
}

impl Add for &ModuleElement {
    type Output = ModuleElement;
    fn add(self, rhs: &ModuleElement) -> ModuleElement {
        self.assert_compatible(rhs);
        ModuleElement {
            ring: Arc::clone(&self.ring),
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &ModuleElement {
    type Output = ModuleElement;
    fn sub(self, rhs: &ModuleElement) -> ModuleElement {
        self.assert_compatible(rhs);
        ModuleElement {
            ring: Arc::clone(&self.ring),
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &ModuleElement {
    type Output = ModuleElement;
    fn neg(self) -> ModuleElement {
        ModuleElement {
            ring: Arc::clone(&self.ring),
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }
}

impl fmt::Display for ModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(MonomialOrder::Grevlex))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_polynomial;

    #[test]
    fn pot_leading_term_prefers_low_position() {
        let ring = RingSpec::rationals(&["t"]).unwrap();
        let v = ModuleElement::new(
            &ring,
            vec![
                parse_polynomial("t", &ring).unwrap(),
                parse_polynomial("y^5", &ring).unwrap(),
            ],
        );
        let pot = ModuleOrder { base: MonomialOrder::Grevlex, rule: PositionRule::PositionOverTerm };
        let top = ModuleOrder { base: MonomialOrder::Grevlex, rule: PositionRule::TermOverPosition };
        assert_eq!(v.leading(pot).unwrap().0, 0);
        assert_eq!(v.leading(top).unwrap().0, 1);
    }

    #[test]
    fn pencil_coefficient_vectors_split() {
        let ring = RingSpec::rationals(&["t"]).unwrap();
        let v = ModuleElement::new(
            &ring,
            vec![
                parse_polynomial("t^2 - t*y", &ring).unwrap(),
                parse_polynomial("t^3", &ring).unwrap(),
            ],
        );
        let parts = v.pencil_coefficient_vectors();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0].0, 1);
        assert_eq!(parts[0].1.entry(0), &parse_polynomial("-t", &ring).unwrap());
        assert!(parts[0].1.entry(1).is_zero());
        assert_eq!(parts[1].0, 0);
        assert_eq!(parts[1].1.entry(0), &parse_polynomial("t^2", &ring).unwrap());
        assert_eq!(parts[1].1.entry(1), &parse_polynomial("t^3", &ring).unwrap());
    }
}
