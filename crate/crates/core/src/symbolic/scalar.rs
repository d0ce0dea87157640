//! Fields that Laurent polynomials can be evaluated in.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::linalg::Rat;

pub trait Scalar: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_bigint(c: &BigInt) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn inv(&self) -> Option<Self>;
    fn is_zero(&self) -> bool;

    fn pow(&self, e: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    fn powi(&self, e: i64) -> Option<Self> {
        let p = self.pow(e.unsigned_abs() as u32);
        if e < 0 {
            p.inv()
        } else {
            Some(p)
        }
    }
}

impl Scalar for Rat {
    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn from_bigint(c: &BigInt) -> Self {
        Rat::from_integer(c.clone())
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn inv(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }

    fn one() -> Self {
        1.0
    }

    fn from_bigint(c: &BigInt) -> Self {
        c.to_f64().unwrap_or(f64::NAN)
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn inv(&self) -> Option<Self> {
        (*self != 0.0 && self.is_finite()).then(|| 1.0 / self)
    }

    fn is_zero(&self) -> bool {
        *self == 0.0
    }
}

/// The prime `2^62 - 57`.
pub const PRIME: u64 = 4_611_686_018_427_387_847;

/// Element of the prime field of order [`PRIME`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp(pub u64);

impl Fp {
    pub fn new(v: u64) -> Fp {
        Fp(v % PRIME)
    }

    pub fn from_i64(v: i64) -> Fp {
        let r = v.rem_euclid(PRIME as i64);
        Fp(r as u64)
    }
}

impl Scalar for Fp {
    fn zero() -> Self {
        Fp(0)
    }

    fn one() -> Self {
        Fp(1)
    }

    fn from_bigint(c: &BigInt) -> Self {
        let r = c.mod_floor(&BigInt::from(PRIME));
        Fp(r.to_u64().expect("reduced residue fits"))
    }

    fn add(&self, other: &Self) -> Self {
        let s = self.0 + other.0;
        Fp(if s >= PRIME { s - PRIME } else { s })
    }

    fn mul(&self, other: &Self) -> Self {
        Fp(((self.0 as u128 * other.0 as u128) % PRIME as u128) as u64)
    }

    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            return None;
        }
        Some(self.pow_u64(PRIME - 2))
    }

    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl Fp {
    pub fn pow_u64(&self, mut e: u64) -> Fp {
        let mut result = Fp(1);
        let mut base = *self;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        result
    }

    pub fn sub(&self, other: &Fp) -> Fp {
        Fp(if self.0 >= other.0 {
            self.0 - other.0
        } else {
            self.0 + PRIME - other.0
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_mod_prime() {
        let a = Fp::new(123_456_789);
        assert_eq!(a.mul(&a.inv().unwrap()), Fp(1));
        assert_eq!(Fp::from_bigint(&BigInt::from(-1)), Fp(PRIME - 1));
        assert_eq!(Fp::from_i64(-1), Fp(PRIME - 1));
    }

    #[test]
    fn prime_passes_fermat_checks() {
        for b in [2u64, 3, 5, 7, 11, 13] {
            assert_eq!(Fp::new(b).pow_u64(PRIME - 1), Fp(1));
        }
    }
}
