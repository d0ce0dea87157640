//! Rational functions in weak canonical form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use super::gcd::gcd;
use super::poly::LaurentPoly;
use super::scalar::Scalar;
use super::SymbolicError;

/// Default term count above which arithmetic triggers a gcd reduction.
pub const DEFAULT_SIMPLIFY_THRESHOLD: usize = 5000;

/// `num / den` with `den` free of monomial content and with positive leading
/// coefficient. Common polynomial factors are only removed by [`RationalFn::reduce`].
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl RationalFn {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<RationalFn, SymbolicError> {
        if den.is_zero() {
            return Err(SymbolicError::ZeroDenominator);
        }
        let mut r = RationalFn { num, den };
        r.weak_normalize();
        Ok(r)
    }

    pub fn from_poly(p: LaurentPoly) -> RationalFn {
        let n = p.nvars();
        RationalFn {
            num: p,
            den: LaurentPoly::one(n),
        }
    }

    pub fn constant(nvars: usize, c: BigInt) -> RationalFn {
        Self::from_poly(LaurentPoly::constant(nvars, c))
    }

    pub fn one(nvars: usize) -> RationalFn {
        Self::from_poly(LaurentPoly::one(nvars))
    }

    /// `z^exp`.
    pub fn monomial(exp: Vec<i32>) -> RationalFn {
        let n = exp.len();
        Self::from_poly(LaurentPoly::monomial(n, exp, BigInt::one()))
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn term_count(&self) -> usize {
        self.num.len() + self.den.len()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn weak_normalize(&mut self) {
        let m = self.den.min_exponents();
        if m.iter().any(|&e| e != 0) {
            let neg: Vec<i32> = m.iter().map(|x| -x).collect();
            self.num = self.num.shift(&neg);
            self.den = self.den.shift(&neg);
        }
        if self.den.leading().is_some_and(|(_, c)| c.is_negative()) {
            self.num = self.num.neg();
            self.den = self.den.neg();
        }
        let g = self.num.content().gcd(&self.den.content());
        if !g.is_one() {
            self.num = self.num.exact_div(&LaurentPoly::constant(self.nvars(), g.clone())).unwrap();
            self.den = self.den.exact_div(&LaurentPoly::constant(self.nvars(), g)).unwrap();
        }
    }

    fn build(num: LaurentPoly, den: LaurentPoly, threshold: usize) -> RationalFn {
        let mut r = RationalFn { num, den };
        r.weak_normalize();
        if r.term_count() > threshold {
            r = r.reduce();
        }
        r
    }

    pub fn mul_t(&self, other: &RationalFn, threshold: usize) -> RationalFn {
        Self::build(self.num.mul(&other.num), self.den.mul(&other.den), threshold)
    }

    pub fn div_t(&self, other: &RationalFn, threshold: usize) -> Result<RationalFn, SymbolicError> {
        if other.is_zero() {
            return Err(SymbolicError::ZeroDenominator);
        }
        Ok(Self::build(self.num.mul(&other.den), self.den.mul(&other.num), threshold))
    }

    pub fn add_t(&self, other: &RationalFn, threshold: usize) -> RationalFn {
        if self.den == other.den {
            return Self::build(self.num.add(&other.num), self.den.clone(), threshold);
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        Self::build(num, self.den.mul(&other.den), threshold)
    }

    pub fn mul(&self, other: &RationalFn) -> RationalFn {
        self.mul_t(other, DEFAULT_SIMPLIFY_THRESHOLD)
    }

    pub fn div(&self, other: &RationalFn) -> Result<RationalFn, SymbolicError> {
        self.div_t(other, DEFAULT_SIMPLIFY_THRESHOLD)
    }

    pub fn add(&self, other: &RationalFn) -> RationalFn {
        self.add_t(other, DEFAULT_SIMPLIFY_THRESHOLD)
    }

    pub fn sub(&self, other: &RationalFn) -> RationalFn {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RationalFn {
        RationalFn {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Result<RationalFn, SymbolicError> {
        RationalFn::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: i64) -> Result<RationalFn, SymbolicError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = e.unsigned_abs() as u32;
        Ok(Self::build(
            base.num.pow(k),
            base.den.pow(k),
            DEFAULT_SIMPLIFY_THRESHOLD,
        ))
    }

    /// Cancel the polynomial gcd of numerator and denominator.
    pub fn reduce(&self) -> RationalFn {
        if self.num.is_zero() {
            return RationalFn::constant(self.nvars(), BigInt::from(0));
        }
        let g = gcd(&self.num, &self.den);
        if g.is_one() {
            return self.clone();
        }
        let mut r = RationalFn {
            num: self.num.exact_div(&g).expect("gcd divides numerator"),
            den: self.den.exact_div(&g).expect("gcd divides denominator"),
        };
        r.weak_normalize();
        r
    }

    /// Equality by cross-multiplication.
    pub fn equals(&self, other: &RationalFn) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }

    pub fn eval<S: Scalar>(&self, point: &[S]) -> Result<S, SymbolicError> {
        let d = self.den.eval(point).ok_or(SymbolicError::PoleAtPoint)?;
        let d = d.inv().ok_or(SymbolicError::PoleAtPoint)?;
        let n = self.num.eval(point).ok_or(SymbolicError::PoleAtPoint)?;
        Ok(n.mul(&d))
    }
}

pub fn ratfn_equal(a: &RationalFn, b: &RationalFn) -> bool {
    a.equals(b)
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{} / {}", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(&[i32], i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(1, terms.iter().map(|(e, c)| (e.to_vec(), BigInt::from(*c))))
    }

    #[test]
    fn cross_multiplication_equality() {
        let a = RationalFn::from_poly(p(&[(&[0], 1), (&[1], 1)]));
        let b = RationalFn::new(p(&[(&[1], 1), (&[2], 1)]), p(&[(&[1], 1)])).unwrap();
        assert!(ratfn_equal(&a, &b));
        let x = RationalFn::monomial(vec![1]);
        assert!(!ratfn_equal(&x, &a));
    }

    #[test]
    fn weak_form_moves_monomials_and_sign() {
        let r = RationalFn::new(p(&[(&[0], 1)]), p(&[(&[2], -2), (&[1], -4)])).unwrap();
        assert_eq!(r.den(), &p(&[(&[1], 2), (&[0], 4)]));
        assert_eq!(r.num(), &p(&[(&[-1], -1)]));
    }

    #[test]
    fn reduce_cancels() {
        let f = p(&[(&[0], 1), (&[1], 1)]);
        let g = p(&[(&[0], 3), (&[1], -1)]);
        let r = RationalFn::new(f.mul(&g), f.mul(&f)).unwrap().reduce();
        assert_eq!(r, RationalFn::new(g, f).unwrap());
    }

    #[test]
    fn pole_detected() {
        let r = RationalFn::new(p(&[(&[0], 1)]), p(&[(&[1], 1), (&[0], -1)])).unwrap();
        use crate::linalg::rat;
        assert_eq!(r.eval(&[rat(1)]).unwrap_err(), SymbolicError::PoleAtPoint);
        assert_eq!(r.eval(&[rat(3)]).unwrap(), crate::linalg::Rat::new(1.into(), 2.into()));
    }
}
