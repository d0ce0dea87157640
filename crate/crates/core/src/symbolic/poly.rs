//! Sparse Laurent polynomials with big-integer coefficients.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::scalar::Scalar;

/// Exponent vector, ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mono(pub Vec<i32>);

impl Mono {
    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn add(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn divides(&self, other: &Mono) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Mono) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Mono) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Mono, BigInt>,
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        Self::monomial(nvars, vec![0; nvars], c)
    }

    pub fn monomial(nvars: usize, exp: Vec<i32>, c: BigInt) -> Self {
        assert_eq!(exp.len(), nvars, "exponent length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono(exp), c);
        }
        LaurentPoly { nvars, terms }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(nvars, e, BigInt::one())
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<i32>, BigInt)>) -> Self {
        let mut acc: HashMap<Vec<i32>, BigInt> = HashMap::new();
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent length");
            *acc.entry(e).or_insert_with(BigInt::zero) += c;
        }
        Self::from_map(nvars, acc)
    }

    fn from_map(nvars: usize, acc: HashMap<Vec<i32>, BigInt>) -> Self {
        LaurentPoly {
            nvars,
            terms: acc
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(e, c)| (Mono(e), c))
                .collect(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &[i32]) -> BigInt {
        self.terms
            .get(&Mono(exp.to_vec()))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// The constant value, if this polynomial is one.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.0.iter().all(|&e| e == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading(&self) -> Option<(&Mono, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.add_assign_scaled(other, &BigInt::one());
        out
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.add_assign_scaled(other, &-BigInt::one());
        out
    }

    fn add_assign_scaled(&mut self, other: &LaurentPoly, s: &BigInt) {
        for (m, c) in &other.terms {
            let v = c * s;
            match self.terms.get_mut(m) {
                Some(x) => {
                    *x += v;
                    if x.is_zero() {
                        self.terms.remove(m);
                    }
                }
                None => {
                    self.terms.insert(m.clone(), v);
                }
            }
        }
    }

    pub fn neg(&self) -> LaurentPoly {
        self.scale(&-BigInt::one())
    }

    pub fn scale(&self, s: &BigInt) -> LaurentPoly {
        if s.is_zero() {
            return Self::zero(self.nvars);
        }
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect(),
        }
    }

    /// Multiply by `z^shift`.
    pub fn shift(&self, shift: &[i32]) -> LaurentPoly {
        let s = Mono(shift.to_vec());
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.add(&s), c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.nvars);
        }
        if self.terms.len() == 1 || other.terms.len() == 1 {
            let (single, many) = if self.terms.len() == 1 {
                (self, other)
            } else {
                (other, self)
            };
            let (m, c) = single.terms.iter().next().unwrap();
            return LaurentPoly {
                nvars: self.nvars,
                terms: many.terms.iter().map(|(n, d)| (n.add(m), c * d)).collect(),
            };
        }
        let mut acc: HashMap<Vec<i32>, BigInt> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let e: Vec<i32> = m1.0.iter().zip(&m2.0).map(|(a, b)| a + b).collect();
                let v = c1 * c2;
                match acc.get_mut(&e) {
                    Some(x) => *x += v,
                    None => {
                        acc.insert(e, v);
                    }
                }
            }
        }
        Self::from_map(self.nvars, acc)
    }

    pub fn pow(&self, e: u32) -> LaurentPoly {
        let mut result = Self::one(self.nvars);
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

    /// Componentwise minimum exponent (the monomial content).
    pub fn min_exponents(&self) -> Vec<i32> {
        let mut out: Option<Vec<i32>> = None;
        for m in self.terms.keys() {
            match &mut out {
                None => out = Some(m.0.clone()),
                Some(o) => {
                    for (a, b) in o.iter_mut().zip(&m.0) {
                        *a = (*a).min(*b);
                    }
                }
            }
        }
        out.unwrap_or_else(|| vec![0; self.nvars])
    }

    pub fn max_exponents(&self) -> Vec<i32> {
        let mut out: Option<Vec<i32>> = None;
        for m in self.terms.keys() {
            match &mut out {
                None => out = Some(m.0.clone()),
                Some(o) => {
                    for (a, b) in o.iter_mut().zip(&m.0) {
                        *a = (*a).max(*b);
                    }
                }
            }
        }
        out.unwrap_or_else(|| vec![0; self.nvars])
    }

    /// Positive gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Split `self = c * z^m * q` with `q` primitive, free of monomial content,
    /// and with positive leading coefficient.
    pub fn split_unit(&self) -> (BigInt, Vec<i32>, LaurentPoly) {
        assert!(!self.is_zero(), "split of the zero polynomial");
        let m = self.min_exponents();
        let mut c = self.content();
        if self.leading().unwrap().1.is_negative() {
            c = -c;
        }
        let neg: Vec<i32> = m.iter().map(|x| -x).collect();
        let s = Mono(neg);
        let q = LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.add(&s), v / &c))
                .collect(),
        };
        (c, m, q)
    }

    /// Normalized associate: no monomial content, primitive, positive leading coefficient.
    pub fn normalized(&self) -> LaurentPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.split_unit().2
    }

    pub fn vars_used(&self) -> Vec<bool> {
        let mut used = vec![false; self.nvars];
        let first = self.terms.keys().next();
        if let Some(f) = first {
            for m in self.terms.keys() {
                for (i, (a, b)) in m.0.iter().zip(&f.0).enumerate() {
                    if a != b {
                        used[i] = true;
                    }
                }
            }
        }
        used
    }

    /// Exact quotient in the Laurent ring, if it exists.
    pub fn exact_div(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(self.clone());
        }
        if d.terms.len() == 1 {
            let (m, c) = d.terms.iter().next().unwrap();
            let mut terms = BTreeMap::new();
            for (n, e) in &self.terms {
                let (q, r) = e.div_rem(c);
                if !r.is_zero() {
                    return None;
                }
                terms.insert(n.sub(m), q);
            }
            return Some(LaurentPoly {
                nvars: self.nvars,
                terms,
            });
        }
        let ms = self.min_exponents();
        let md = d.min_exponents();
        let neg = |v: &[i32]| v.iter().map(|x| -x).collect::<Vec<i32>>();
        let a = self.shift(&neg(&ms));
        let b = d.shift(&neg(&md));
        if a.terms.len() < b.terms.len() {
            return None;
        }
        let (amax, bmax) = (a.max_exponents(), b.max_exponents());
        if amax.iter().zip(&bmax).any(|(x, y)| x < y) {
            return None;
        }
        let q = poly_div(a, &b)?;
        let shift: Vec<i32> = ms.iter().zip(&md).map(|(x, y)| x - y).collect();
        Some(q.shift(&shift))
    }

    /// Range of exponents of variable `v`.
    pub fn degree_range(&self, v: usize) -> (i32, i32) {
        let mut lo = i32::MAX;
        let mut hi = i32::MIN;
        for m in self.terms.keys() {
            lo = lo.min(m.0[v]);
            hi = hi.max(m.0[v]);
        }
        if self.is_zero() {
            (0, 0)
        } else {
            (lo, hi)
        }
    }

    /// Coefficients with respect to variable `v`; exponent of `v` is zeroed in each.
    pub fn coeffs_in(&self, v: usize) -> BTreeMap<i32, LaurentPoly> {
        let mut out: BTreeMap<i32, LaurentPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let d = e[v];
            e[v] = 0;
            out.entry(d)
                .or_insert_with(|| LaurentPoly::zero(self.nvars))
                .terms
                .insert(Mono(e), c.clone());
        }
        out
    }

    /// Apply a monomial change of variables; `None` if `f` fails on some exponent.
    pub fn map_exponents(
        &self,
        nvars: usize,
        f: impl Fn(&[i32]) -> Option<Vec<i32>>,
    ) -> Option<LaurentPoly> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            terms.push((f(&m.0)?, c.clone()));
        }
        Some(LaurentPoly::from_terms(nvars, terms))
    }

    pub fn eval<S: Scalar>(&self, point: &[S]) -> Option<S> {
        let mut cache: HashMap<(usize, i32), S> = HashMap::new();
        let mut inverses: Vec<Option<S>> = vec![None; self.nvars];
        let mut acc = S::zero();
        for (m, c) in &self.terms {
            let mut t = S::from_bigint(c);
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = match cache.get(&(i, e)) {
                    Some(p) => p.clone(),
                    None => {
                        let base = if e < 0 {
                            if inverses[i].is_none() {
                                inverses[i] = Some(point[i].inv()?);
                            }
                            inverses[i].clone().unwrap()
                        } else {
                            point[i].clone()
                        };
                        let p = base.pow(e.unsigned_abs());
                        cache.insert((i, e), p.clone());
                        p
                    }
                };
                t = t.mul(&p);
            }
            acc = acc.add(&t);
        }
        Some(acc)
    }
}

fn poly_div(mut r: LaurentPoly, b: &LaurentPoly) -> Option<LaurentPoly> {
    let (lb, cb) = b.leading().map(|(m, c)| (m.clone(), c.clone()))?;
    let mut q = BTreeMap::new();
    while let Some((lr, cr)) = r.leading().map(|(m, c)| (m.clone(), c.clone())) {
        if !lb.divides(&lr) {
            return None;
        }
        let (c, rem) = cr.div_rem(&cb);
        if !rem.is_zero() {
            return None;
        }
        let m = lr.sub(&lb);
        if m.degree() < 0 {
            return None;
        }
        for (bm, bc) in &b.terms {
            let key = bm.add(&m);
            let v = bc * &c;
            match r.terms.get_mut(&key) {
                Some(x) => {
                    *x -= v;
                    if x.is_zero() {
                        r.terms.remove(&key);
                    }
                }
                None => {
                    r.terms.insert(key, -v);
                }
            }
        }
        q.insert(m, c);
    }
    Some(LaurentPoly {
        nvars: b.nvars,
        terms: q,
    })
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let e: Vec<String> = m.0.iter().map(|x| x.to_string()).collect();
            write!(f, "{} * z^({})", c, e.join(","))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(nvars: usize, terms: &[(&[i32], i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(
            nvars,
            terms.iter().map(|(e, c)| (e.to_vec(), BigInt::from(*c))),
        )
    }

    #[test]
    fn grlex_order() {
        assert!(Mono(vec![0, 2]) > Mono(vec![1, 0]));
        assert!(Mono(vec![2, 0]) > Mono(vec![1, 1]));
        assert!(Mono(vec![-1, 0]) < Mono(vec![0, 0]));
    }

    #[test]
    fn product_and_division() {
        let a = p(2, &[(&[1, 0], 1), (&[0, 0], 1)]);
        let b = p(2, &[(&[0, 1], 2), (&[-1, 0], -3)]);
        let ab = a.mul(&b);
        assert_eq!(ab.exact_div(&a).unwrap(), b);
        assert_eq!(ab.exact_div(&b).unwrap(), a);
        let c = p(2, &[(&[0, 1], 1), (&[0, 0], 1)]);
        assert!(ab.exact_div(&c).is_none());
    }

    #[test]
    fn split_unit_normalizes() {
        let a = p(2, &[(&[2, 1], -6), (&[1, 3], 4)]);
        let (c, m, q) = a.split_unit();
        assert_eq!(m, vec![1, 1]);
        assert_eq!(c, BigInt::from(2));
        assert_eq!(q, p(2, &[(&[0, 2], 2), (&[1, 0], -3)]));
        assert_eq!(q.shift(&m).scale(&c), a);
    }

    #[test]
    fn display_is_grlex_descending() {
        let a = p(2, &[(&[0, 0], 1), (&[1, 0], 1), (&[0, 1], -2)]);
        assert_eq!(a.to_string(), "1 * z^(1,0) + -2 * z^(0,1) + 1 * z^(0,0)");
    }
}
