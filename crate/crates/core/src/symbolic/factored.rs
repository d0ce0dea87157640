//! Rational functions kept as products of powers over a coprime factor base.
//!
//! Every polynomial entering the base is normalized (primitive, no monomial
//! content, positive leading coefficient). Live pieces are pairwise coprime;
//! when a new polynomial shares a proper factor with a piece, the piece is
//! split and marked dead with its decomposition. A product of pieces is 1
//! exactly when all exponents vanish, which makes identity testing exact.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::gcd::{gcd_primitive, modular_coprime};
use super::poly::LaurentPoly;
use super::ratfn::RationalFn;
use super::scalar::Scalar;
use super::SymbolicError;
use crate::linalg::Rat;

#[derive(Clone, Debug)]
enum Entry {
    Alive(LaurentPoly),
    Split(Vec<(usize, i64)>),
}

#[derive(Clone, Debug)]
pub struct FactorBase {
    nvars: usize,
    entries: Vec<Entry>,
}

/// `coeff * z^mono * prod piece_id^exp`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredFn {
    pub coeff: Rat,
    pub mono: Vec<i64>,
    pub factors: BTreeMap<usize, i64>,
}

impl FactoredFn {
    pub fn one(nvars: usize) -> FactoredFn {
        Self::monomial(vec![0; nvars])
    }

    pub fn monomial(mono: Vec<i64>) -> FactoredFn {
        FactoredFn {
            coeff: <Rat as One>::one(),
            mono,
            factors: BTreeMap::new(),
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.factors.is_empty()
    }

    /// Is this exactly `z^mono` with coefficient one?
    pub fn is_unit_monomial(&self, mono: &[i64]) -> bool {
        self.factors.is_empty() && self.coeff.is_one() && self.mono == mono
    }

    pub fn mul(&self, other: &FactoredFn) -> FactoredFn {
        let mut out = self.clone();
        out.mul_assign_pow(other, 1);
        out
    }

    /// `self *= other^e`.
    pub fn mul_assign_pow(&mut self, other: &FactoredFn, e: i64) {
        if e == 0 {
            return;
        }
        self.coeff *= rat_pow(&other.coeff, e);
        for (a, b) in self.mono.iter_mut().zip(&other.mono) {
            *a += b * e;
        }
        for (&id, &k) in &other.factors {
            add_exp(&mut self.factors, id, k * e);
        }
    }

    pub fn pow(&self, e: i64) -> FactoredFn {
        let mut out = FactoredFn::one(self.mono.len());
        out.mul_assign_pow(self, e);
        out
    }
}

fn rat_pow(r: &Rat, e: i64) -> Rat {
    if r.is_one() {
        return r.clone();
    }
    let p = num_traits::pow(r.clone(), e.unsigned_abs() as usize);
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

fn add_exp(map: &mut BTreeMap<usize, i64>, id: usize, k: i64) {
    if k == 0 {
        return;
    }
    let v = map.entry(id).or_insert(0);
    *v += k;
    if *v == 0 {
        map.remove(&id);
    }
}

impl FactorBase {
    pub fn new(nvars: usize) -> FactorBase {
        FactorBase {
            nvars,
            entries: Vec::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn live_count(&self) -> usize {
        self.entries
            .iter()
            .filter(|e| matches!(e, Entry::Alive(_)))
            .count()
    }

    pub fn piece(&self, id: usize) -> Option<&LaurentPoly> {
        match self.entries.get(id) {
            Some(Entry::Alive(p)) => Some(p),
            _ => None,
        }
    }

    /// Factor a nonzero polynomial over the base, refining the base as needed.
    pub fn factor(&mut self, p: &LaurentPoly) -> FactoredFn {
        assert!(!p.is_zero(), "factoring zero");
        let (c, m, q) = p.split_unit();
        let mut factors = BTreeMap::new();
        if !q.is_one() {
            self.absorb(q, 1, &mut factors);
        }
        let mut f = FactoredFn {
            coeff: Rat::from_integer(c),
            mono: m.into_iter().map(i64::from).collect(),
            factors,
        };
        self.canonicalize(&mut f);
        f
    }

    fn push(&mut self, q: LaurentPoly) -> usize {
        self.entries.push(Entry::Alive(q));
        self.entries.len() - 1
    }

    fn absorb(&mut self, mut q: LaurentPoly, mult: i64, out: &mut BTreeMap<usize, i64>) {
        'outer: loop {
            if q.is_constant() {
                debug_assert!(q.is_one());
                return;
            }
            let uq = q.vars_used();
            for id in 0..self.entries.len() {
                let Entry::Alive(f) = &self.entries[id] else {
                    continue;
                };
                let uf = f.vars_used();
                let common: Vec<usize> = (0..self.nvars).filter(|&i| uq[i] && uf[i]).collect();
                if common.is_empty() {
                    continue;
                }
                if modular_coprime(&q, f, &common) {
                    continue;
                }
                if let Some(r) = q.exact_div(f) {
                    q = r;
                    add_exp(out, id, mult);
                    continue 'outer;
                }
                let g = gcd_primitive(&q, f);
                if g.is_one() {
                    continue;
                }
                let f = f.clone();
                let h = f.exact_div(&g).expect("gcd divides piece");
                self.entries[id] = Entry::Split(Vec::new());
                let mut parts = BTreeMap::new();
                self.absorb(g, 1, &mut parts);
                self.absorb(h, 1, &mut parts);
                self.entries[id] = Entry::Split(parts.into_iter().collect());
                continue 'outer;
            }
            let id = self.push(q);
            add_exp(out, id, mult);
            return;
        }
    }

    fn expand_id(&self, id: usize, k: i64, out: &mut BTreeMap<usize, i64>) {
        match &self.entries[id] {
            Entry::Alive(_) => add_exp(out, id, k),
            Entry::Split(parts) => {
                for &(p, e) in parts {
                    self.expand_id(p, e * k, out);
                }
            }
        }
    }

    /// Rewrite dead pieces in terms of live ones.
    pub fn canonicalize(&self, f: &mut FactoredFn) {
        if f.factors.keys().all(|&id| matches!(self.entries[id], Entry::Alive(_))) {
            return;
        }
        let mut out = BTreeMap::new();
        for (&id, &k) in &f.factors {
            self.expand_id(id, k, &mut out);
        }
        f.factors = out;
    }

    /// Sum of factored terms, factored again over the base.
    pub fn sum(&mut self, terms: &[FactoredFn]) -> Option<FactoredFn> {
        let n = self.nvars;
        let mut terms: Vec<FactoredFn> = terms.to_vec();
        for t in terms.iter_mut() {
            self.canonicalize(t);
        }
        let terms: Vec<&FactoredFn> = terms.iter().filter(|t| !Zero::is_zero(&t.coeff)).collect();
        if terms.is_empty() {
            return None;
        }
        let mut mono_min = terms[0].mono.clone();
        let mut lcm = BigInt::one();
        let mut min_exp: BTreeMap<usize, i64> = BTreeMap::new();
        let mut ids: Vec<usize> = terms.iter().flat_map(|t| t.factors.keys().copied()).collect();
        ids.sort_unstable();
        ids.dedup();
        for &id in &ids {
            let m = terms
                .iter()
                .map(|t| t.factors.get(&id).copied().unwrap_or(0))
                .min()
                .unwrap();
            if m != 0 {
                min_exp.insert(id, m);
            }
        }
        for t in &terms {
            for (a, b) in mono_min.iter_mut().zip(&t.mono) {
                *a = (*a).min(*b);
            }
            lcm = lcm.lcm(t.coeff.denom());
        }
        let mut total = LaurentPoly::zero(n);
        for t in &terms {
            let c = (&t.coeff * Rat::from_integer(lcm.clone())).to_integer();
            let e: Vec<i32> = t
                .mono
                .iter()
                .zip(&mono_min)
                .map(|(a, b)| (a - b) as i32)
                .collect();
            let mut p = LaurentPoly::monomial(n, e, c);
            for &id in &ids {
                let k = t.factors.get(&id).copied().unwrap_or(0) - min_exp.get(&id).copied().unwrap_or(0);
                debug_assert!(k >= 0);
                if k > 0 {
                    let piece = self.piece(id).expect("canonical ids are live");
                    p = p.mul(&piece.pow(k as u32));
                }
            }
            total = total.add(&p);
        }
        if total.is_zero() {
            return None;
        }
        let mut out = self.factor(&total);
        out.coeff /= Rat::from_integer(lcm);
        for (a, b) in out.mono.iter_mut().zip(&mono_min) {
            *a += b;
        }
        let shared = FactoredFn {
            coeff: <Rat as One>::one(),
            mono: vec![0; n],
            factors: min_exp,
        };
        out = out.mul(&shared);
        self.canonicalize(&mut out);
        Some(out)
    }

    /// Expand into a rational function in weak canonical form.
    pub fn to_ratfn(&self, f: &FactoredFn) -> RationalFn {
        let mut f = f.clone();
        self.canonicalize(&mut f);
        let n = self.nvars;
        let num_exp: Vec<i32> = f.mono.iter().map(|&e| e.max(0) as i32).collect();
        let den_exp: Vec<i32> = f.mono.iter().map(|&e| (-e).max(0) as i32).collect();
        let mut num = LaurentPoly::monomial(n, num_exp, f.coeff.numer().clone());
        let mut den = LaurentPoly::monomial(n, den_exp, f.coeff.denom().clone());
        for (&id, &k) in &f.factors {
            let piece = self.piece(id).expect("canonical ids are live");
            if k > 0 {
                num = num.mul(&piece.pow(k as u32));
            } else {
                den = den.mul(&piece.pow((-k) as u32));
            }
        }
        RationalFn::new(num, den).expect("nonzero denominator")
    }

    /// Evaluate with a per-call cache of piece values.
    pub fn eval_many<S: Scalar>(
        &self,
        fs: &[FactoredFn],
        point: &[S],
    ) -> Result<Vec<S>, SymbolicError> {
        let mut cache: BTreeMap<usize, S> = BTreeMap::new();
        let mut out = Vec::with_capacity(fs.len());
        for f in fs {
            let mut f = f.clone();
            self.canonicalize(&mut f);
            let mut v = S::from_bigint(f.coeff.numer())
                .mul(&S::from_bigint(f.coeff.denom()).inv().ok_or(SymbolicError::PoleAtPoint)?);
            for (i, &e) in f.mono.iter().enumerate() {
                if e != 0 {
                    v = v.mul(&point[i].powi(e).ok_or(SymbolicError::PoleAtPoint)?);
                }
            }
            for (&id, &k) in &f.factors {
                let pv = match cache.get(&id) {
                    Some(x) => x.clone(),
                    None => {
                        let piece = self.piece(id).expect("canonical ids are live");
                        let x = piece.eval(point).ok_or(SymbolicError::PoleAtPoint)?;
                        cache.insert(id, x.clone());
                        x
                    }
                };
                if k < 0 && pv.is_zero() {
                    return Err(SymbolicError::PoleAtPoint);
                }
                v = v.mul(&pv.powi(k).ok_or(SymbolicError::PoleAtPoint)?);
            }
            out.push(v);
        }
        Ok(out)
    }

    /// Are all coefficients of every live piece used by `f` nonnegative?
    pub fn is_subtraction_free(&self, f: &FactoredFn) -> bool {
        f.coeff.is_positive()
            && f.factors.keys().all(|&id| {
                self.piece(id)
                    .is_some_and(|p| p.terms().all(|(_, c)| c.is_positive()))
            })
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
    fn pieces_stay_coprime_after_split() {
        let mut base = FactorBase::new(2);
        let a = p(2, &[(&[1, 0], 1), (&[0, 0], 1)]);
        let b = p(2, &[(&[0, 1], 1), (&[0, 0], 2)]);
        let fab = base.factor(&a.mul(&b));
        assert_eq!(base.live_count(), 1);
        let fa = base.factor(&a.scale(&BigInt::from(-3)).shift(&[2, -1]));
        assert_eq!(base.live_count(), 2);
        assert_eq!(fa.coeff, Rat::from_integer(BigInt::from(-3)));
        assert_eq!(fa.mono, vec![2, -1]);
        let mut fab = fab;
        base.canonicalize(&mut fab);
        assert_eq!(fab.factors.len(), 2);
        let ratio = fab.mul(&fa.pow(-1));
        let r = base.to_ratfn(&ratio);
        let expect = RationalFn::new(b.shift(&[-2, 1]), LaurentPoly::constant(2, BigInt::from(-3))).unwrap();
        assert!(r.equals(&expect));
    }

    #[test]
    fn sum_refactors() {
        let mut base = FactorBase::new(1);
        // x/(1+x) + 1/(1+x) = 1
        let one_plus_x = base.factor(&p(1, &[(&[0], 1), (&[1], 1)]));
        let t1 = FactoredFn::monomial(vec![1]).mul(&one_plus_x.pow(-1));
        let t2 = one_plus_x.pow(-1);
        let s = base.sum(&[t1, t2]).unwrap();
        assert!(s.is_unit_monomial(&[0]));
    }
}
