//! Coefficient arithmetic and ring descriptors.
//!
//! The working ring is always the flat polynomial ring over the base
//! coefficients in the declared ring variables t1..tl plus the
//! distinguished pencil variable `y`. The base ring R and the pencil
//! ring R[y] are told apart only by whether `y` occurs.

use std::fmt;
use std::sync::Arc;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Name of the pencil variable; always present, never user-declarable.
pub const PENCIL_VAR: &str = "y";

/// Coefficient domain of the ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CoeffMode {
    /// Arbitrary-precision rationals.
    Rational,
    /// Prime field of characteristic `p`, `p < 2^31`.
    Prime(u64),
}

/// One scalar coefficient. Zero is representable but never stored in a
/// polynomial's term list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Coeff {
    Rat(BigRational),
    Fp(u64),
}

impl Coeff {
    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Rat(r) => r.is_zero(),
            Coeff::Fp(v) => *v == 0,
        }
    }
}

/// Describes the ambient polynomial ring: named ring variables, the
/// implicit pencil variable, and the coefficient mode.
#[derive(Debug, PartialEq, Eq)]
pub struct RingSpec {
    vars: Vec<String>,
    mode: CoeffMode,
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn valid_ident(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl RingSpec {
    fn validate(vars: &[&str]) -> Result<Vec<String>> {
        let mut out = Vec::with_capacity(vars.len());
        for v in vars {
            if !valid_ident(v) {
                return Err(Error::Parse(format!("invalid variable name `{v}`")));
            }
            if *v == PENCIL_VAR {
                return Err(Error::Parse(format!(
                    "variable name `{PENCIL_VAR}` is reserved for the pencil variable"
                )));
            }
            if out.iter().any(|o: &String| o == v) {
                return Err(Error::Parse(format!("duplicate variable name `{v}`")));
            }
            out.push((*v).to_string());
        }
        Ok(out)
    }

    /// Q[t1..tl][y]; an empty list yields Q[y] (field base ring).
    pub fn rationals(vars: &[&str]) -> Result<Arc<RingSpec>> {
        Ok(Arc::new(RingSpec { vars: Self::validate(vars)?, mode: CoeffMode::Rational }))
    }

    /// F_p[t1..tl][y] with p prime, p < 2^31.
    pub fn prime_field(p: u64, vars: &[&str]) -> Result<Arc<RingSpec>> {
        if p >= 1 << 31 {
            return Err(Error::Parse(format!("prime {p} exceeds 2^31")));
        }
        if !is_prime(p) {
            return Err(Error::Parse(format!("{p} is not prime")));
        }
        Ok(Arc::new(RingSpec { vars: Self::validate(vars)?, mode: CoeffMode::Prime(p) }))
    }

    pub fn mode(&self) -> &CoeffMode {
        &self.mode
    }

    /// Number of declared ring variables (excluding the pencil variable).
    pub fn num_ring_vars(&self) -> usize {
        self.vars.len()
    }

    /// Exponent-vector length: ring variables plus the pencil slot.
    pub fn num_slots(&self) -> usize {
        self.vars.len() + 1
    }

    /// Slot index of the pencil variable (always the last slot).
    pub fn pencil_slot(&self) -> usize {
        self.vars.len()
    }

    /// True when the base ring is a field (no ring variables).
    pub fn is_field_base(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    /// Slot index for a variable name; the pencil variable resolves to
    /// the last slot.
    pub fn slot_of(&self, name: &str) -> Option<usize> {
        if name == PENCIL_VAR {
            return Some(self.pencil_slot());
        }
        self.vars.iter().position(|v| v == name)
    }

    pub fn slot_name(&self, slot: usize) -> &str {
        if slot == self.pencil_slot() {
            PENCIL_VAR
        } else {
            &self.vars[slot]
        }
    }

    // ---- coefficient arithmetic ----------------------------------------

    pub fn c_zero(&self) -> Coeff {
        match self.mode {
            CoeffMode::Rational => Coeff::Rat(BigRational::zero()),
            CoeffMode::Prime(_) => Coeff::Fp(0),
        }
    }

    pub fn c_one(&self) -> Coeff {
        match self.mode {
            CoeffMode::Rational => Coeff::Rat(BigRational::one()),
            CoeffMode::Prime(_) => Coeff::Fp(1),
        }
    }

    pub fn c_from_int(&self, n: i64) -> Coeff {
        match self.mode {
            CoeffMode::Rational => Coeff::Rat(BigRational::from_integer(BigInt::from(n))),
            CoeffMode::Prime(p) => Coeff::Fp((n.rem_euclid(p as i64)) as u64),
        }
    }

    /// Map an exact rational into the coefficient mode. In prime mode the
    /// denominator must be invertible.
    pub fn c_from_ratio(&self, r: &BigRational) -> Result<Coeff> {
        match self.mode {
            CoeffMode::Rational => Ok(Coeff::Rat(r.clone())),
            CoeffMode::Prime(p) => {
                let pb = BigInt::from(p);
                let num = ((r.numer() % &pb) + &pb) % &pb;
                let den = ((r.denom() % &pb) + &pb) % &pb;
                let num: u64 = num.try_into().expect("reduced residue fits u64");
                let den: u64 = den.try_into().expect("reduced residue fits u64");
                if den == 0 {
                    return Err(Error::Parse(format!(
                        "denominator of {r} is divisible by the field characteristic {p}"
                    )));
                }
                Ok(Coeff::Fp(mod_mul(num, mod_inv(den, p), p)))
            }
        }
    }

    pub fn c_add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (a, b) {
            (Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x + y),
            (Coeff::Fp(x), Coeff::Fp(y)) => {
                let p = self.char_p();
                Coeff::Fp((x + y) % p)
            }
            _ => panic!("mixed coefficient modes"),
        }
    }

    pub fn c_sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.c_add(a, &self.c_neg(b))
    }

    pub fn c_neg(&self, a: &Coeff) -> Coeff {
        match a {
            Coeff::Rat(x) => Coeff::Rat(-x),
            Coeff::Fp(x) => {
                let p = self.char_p();
                Coeff::Fp(if *x == 0 { 0 } else { p - x })
            }
        }
    }

    pub fn c_mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (a, b) {
            (Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x * y),
            (Coeff::Fp(x), Coeff::Fp(y)) => Coeff::Fp(mod_mul(*x, *y, self.char_p())),
            _ => panic!("mixed coefficient modes"),
        }
    }

    /// Multiplicative inverse; panics on zero (division by a zero lead
    /// coefficient is an engine bug).
    pub fn c_inv(&self, a: &Coeff) -> Coeff {
        match a {
            Coeff::Rat(x) => {
                assert!(!x.is_zero(), "inverse of zero");
                Coeff::Rat(x.recip())
            }
            Coeff::Fp(x) => {
                assert!(*x != 0, "inverse of zero");
                Coeff::Fp(mod_inv(*x, self.char_p()))
            }
        }
    }

    pub fn c_is_one(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Rat(x) => x.is_one(),
            Coeff::Fp(x) => *x == 1,
        }
    }

    /// True when the coefficient renders with a leading minus sign.
    pub fn c_is_negative(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Rat(x) => x.is_negative(),
            Coeff::Fp(_) => false,
        }
    }

    pub fn render_coeff(&self, a: &Coeff) -> String {
        match a {
            Coeff::Rat(x) => {
                if x.denom().is_one() {
                    x.numer().to_string()
                } else {
                    format!("{}/{}", x.numer(), x.denom())
                }
            }
            Coeff::Fp(v) => v.to_string(),
        }
    }

    fn char_p(&self) -> u64 {
        match self.mode {
            CoeffMode::Prime(p) => p,
            CoeffMode::Rational => panic!("rational mode has no characteristic"),
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = match self.mode {
            CoeffMode::Rational => "QQ".to_string(),
            CoeffMode::Prime(p) => format!("GF({p})"),
        };
        let mut vars: Vec<&str> = self.vars.iter().map(|s| s.as_str()).collect();
        vars.push(PENCIL_VAR);
        write!(f, "{base}[{}]", vars.join(","))
    }
}

/// Two ring handles denote the same ring. Arc identity is the fast path.
pub fn same_ring(a: &Arc<RingSpec>, b: &Arc<RingSpec>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

fn mod_mul(a: u64, b: u64, p: u64) -> u64 {
    // p < 2^31 keeps the product inside u64
    (a * b) % p
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // extended Euclid
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (p as i64, (a % p) as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert!(r == 1, "{a} not invertible mod {p}");
    t.rem_euclid(p as i64) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_pencil_name_and_duplicates() {
        assert!(RingSpec::rationals(&["t", "y"]).is_err());
        assert!(RingSpec::rationals(&["t", "t"]).is_err());
        assert!(RingSpec::rationals(&["t", "w"]).is_ok());
    }

    #[test]
    fn prime_field_arithmetic() {
        let r = RingSpec::prime_field(32003, &[]).unwrap();
        let a = r.c_from_int(-1);
        assert_eq!(a, Coeff::Fp(32002));
        let inv = r.c_inv(&r.c_from_int(17));
        assert!(r.c_is_one(&r.c_mul(&inv, &r.c_from_int(17))));
        assert!(RingSpec::prime_field(32004, &[]).is_err());
    }

    #[test]
    fn ratio_into_prime_mode() {
        let r = RingSpec::prime_field(7, &[]).unwrap();
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        // 1/2 = 4 mod 7
        assert_eq!(r.c_from_ratio(&half).unwrap(), Coeff::Fp(4));
        let bad = BigRational::new(BigInt::from(1), BigInt::from(7));
        assert!(r.c_from_ratio(&bad).is_err());
    }
}
