//! Monomials and global monomial orders.

use std::cmp::Ordering;

use smallvec::SmallVec;

/// Exponent vector over the ring's slots; the pencil variable `y` owns the
/// last slot. Comparison precedence is always y first, then t1 > t2 > ...
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[u16; 6]>,
}

impl Monomial {
    pub fn one(num_slots: usize) -> Self {
        Monomial { exps: SmallVec::from_elem(0, num_slots) }
    }

    pub fn var(num_slots: usize, slot: usize, exp: u16) -> Self {
        let mut m = Self::one(num_slots);
        m.exps[slot] = exp;
        m
    }

    pub fn from_exps(exps: &[u16]) -> Self {
        Monomial { exps: SmallVec::from_slice(exps) }
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn num_slots(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    /// Exponent of the pencil variable (last slot).
    pub fn pencil_exp(&self) -> u16 {
        *self.exps.last().expect("monomial has at least the pencil slot")
    }

    pub fn is_pencil_free(&self) -> bool {
        self.pencil_exp() == 0
    }

    /// Copy with the pencil exponent cleared.
    pub fn without_pencil(&self) -> Monomial {
        let mut m = self.clone();
        *m.exps.last_mut().unwrap() = 0;
        m
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller guarantees divisibility.
    pub fn div_into(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial {
            exps: other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect(),
        }
    }

    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }
}

fn cmp_grevlex(a: &Monomial, b: &Monomial) -> Ordering {
    debug_assert_eq!(a.exps.len(), b.exps.len());
    match a.total_degree().cmp(&b.total_degree()) {
        Ordering::Equal => {}
        ord => return ord,
    }
    // Equal degree: scan from the least-precedence variable upward
    // (t_l, ..., t_1, then y); the first difference decides, smaller
    // exponent wins.
    let n = a.exps.len();
    for i in (0..n - 1).rev() {
        if a.exps[i] != b.exps[i] {
            return b.exps[i].cmp(&a.exps[i]);
        }
    }
    b.exps[n - 1].cmp(&a.exps[n - 1])
}

fn cmp_lex(a: &Monomial, b: &Monomial) -> Ordering {
    debug_assert_eq!(a.exps.len(), b.exps.len());
    let n = a.exps.len();
    // y first, then t1..tl in declaration order.
    match a.exps[n - 1].cmp(&b.exps[n - 1]) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for i in 0..n - 1 {
        match a.exps[i].cmp(&b.exps[i]) {
            Ordering::Equal => {}
            ord => return ord,
        }
    }
    Ordering::Equal
}

/// Structural order used for term storage: grevlex with y greatest.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_grevlex(self, other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A global monomial order with precedence y > t1 > ... > tl.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    #[default]
    Grevlex,
    Lex,
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Grevlex => cmp_grevlex(a, b),
            MonomialOrder::Lex => cmp_lex(a, b),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::Grevlex => "grevlex",
            MonomialOrder::Lex => "lex",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u16]) -> Monomial {
        Monomial::from_exps(exps)
    }

    #[test]
    fn grevlex_examples() {
        // slots [t, y]: y^2 > t*y > t^2
        let ord = MonomialOrder::Grevlex;
        assert_eq!(ord.cmp(&m(&[0, 2]), &m(&[1, 1])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[1, 1]), &m(&[2, 0])), Ordering::Greater);
        // degree dominates: t^3 > y^2
        assert_eq!(ord.cmp(&m(&[3, 0]), &m(&[0, 2])), Ordering::Greater);
    }

    #[test]
    fn grevlex_three_vars() {
        // slots [t, w, y] with precedence y > t > w; classic grevlex
        // tie-break at equal degree: t*w < t^2 etc.
        let ord = MonomialOrder::Grevlex;
        // y*t vs w^2: deg 2 each; scan w first: w-exp 0 vs 2 -> first wins
        assert_eq!(ord.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Greater);
        // t^2 vs t*w: scan w: 0 vs 1 -> t^2 greater
        assert_eq!(ord.cmp(&m(&[2, 0, 0]), &m(&[1, 1, 0])), Ordering::Greater);
    }

    #[test]
    fn lex_examples() {
        let ord = MonomialOrder::Lex;
        // y beats any power of t
        assert_eq!(ord.cmp(&m(&[9, 0]), &m(&[0, 1])), Ordering::Less);
        assert_eq!(ord.cmp(&m(&[2, 1]), &m(&[9, 1])), Ordering::Less);
    }

    #[test]
    fn monomial_lattice_ops() {
        let a = m(&[2, 1]);
        let b = m(&[1, 3]);
        assert_eq!(a.lcm(&b), m(&[2, 3]));
        assert!(m(&[1, 1]).divides(&a));
        assert_eq!(m(&[1, 1]).div_into(&a), m(&[1, 0]));
        assert!(m(&[2, 0]).is_coprime_with(&m(&[0, 3])));
    }
}
