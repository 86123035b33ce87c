//! Exact dense linear algebra over a prime field F_p.
//!
//! All canonical forms (RREF, kernel bases, subspace representatives) are
//! deterministic functions of the input, which is what makes every report in
//! this crate byte-reproducible.

mod matrix;
mod subspace;

pub use matrix::{Mat, Rref, Solution};
pub use subspace::Subspace;

use crate::error::{Error, Result};

/// Default coefficient field.
pub const DEFAULT_MODULUS: u64 = 101;

/// The prime field F_p, elements canonically represented in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fp {
    p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Result<Fp> {
        if p < 2 || p >= (1 << 31) || !is_prime(p) {
            return Err(Error::BadModulus(p));
        }
        Ok(Fp { p })
    }

    pub fn default_field() -> Fp {
        Fp { p: DEFAULT_MODULUS }
    }

    #[inline]
    pub fn modulus(self) -> u64 {
        self.p
    }

    /// Canonical representative of a (possibly negative) integer.
    #[inline]
    pub fn el(self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; panics on zero (a programming error here).
    pub fn inv(self, a: u64) -> u64 {
        assert!(a % self.p != 0, "inverse of zero");
        self.pow(a, self.p - 2)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modulus_validation() {
        assert!(Fp::new(101).is_ok());
        assert!(Fp::new(2).is_ok());
        assert!(Fp::new(1).is_err());
        assert!(Fp::new(91).is_err()); // 7 * 13
        assert!(Fp::new(1 << 31).is_err());
    }

    #[test]
    fn arithmetic_mod_101() {
        let f = Fp::new(101).unwrap();
        assert_eq!(f.add(100, 2), 1);
        assert_eq!(f.sub(0, 1), 100);
        assert_eq!(f.neg(1), 100);
        assert_eq!(f.mul(51, 2), 1);
        assert_eq!(f.inv(2), 51);
        assert_eq!(f.el(-1), 100);
        for a in 1..101 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
    }
}
