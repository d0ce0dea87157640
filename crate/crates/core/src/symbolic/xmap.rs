//! Pullbacks of cluster transformations on characters of `N`.
//!
//! Images are kept factored over a coprime [`FactorBase`], so a composite is
//! the identity exactly when every image is the corresponding unit monomial.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::factored::{FactorBase, FactoredFn};
use super::fastpath;
use super::ratfn::{RationalFn, DEFAULT_SIMPLIFY_THRESHOLD};
use super::scalar::Scalar;
use super::SymbolicError;
use crate::lattice::{ClusterWord, Seed, Transformation};

#[derive(Clone, Debug)]
pub struct EvalOptions {
    pub fast_path: bool,
    pub simplify_threshold: usize,
    pub budget: Option<Duration>,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions {
            fast_path: true,
            simplify_threshold: DEFAULT_SIMPLIFY_THRESHOLD,
            budget: None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct XMap {
    source: Seed,
    target: Seed,
    base: FactorBase,
    images: Vec<FactoredFn>,
}

fn unit(n: usize, j: usize) -> Vec<i64> {
    let mut e = vec![0; n];
    e[j] = 1;
    e
}

fn to_i64(v: &[BigInt]) -> Vec<i64> {
    v.iter()
        .map(|x| x.to_i64().expect("exponent fits in i64"))
        .collect()
}

impl XMap {
    pub fn identity(seed: &Seed) -> XMap {
        let n = seed.rank();
        XMap {
            source: seed.clone(),
            target: seed.clone(),
            base: FactorBase::new(n),
            images: (0..n).map(|j| FactoredFn::monomial(unit(n, j))).collect(),
        }
    }

    pub fn of_step(t: &Transformation) -> Result<XMap, SymbolicError> {
        let mut m = XMap::identity(t.source());
        m.push(t)?;
        Ok(m)
    }

    pub fn source(&self) -> &Seed {
        &self.source
    }

    pub fn target(&self) -> &Seed {
        &self.target
    }

    pub fn nvars(&self) -> usize {
        self.images.len()
    }

    pub fn base(&self) -> &FactorBase {
        &self.base
    }

    /// Factored pullback of `z^exp`, `exp` in character coordinates.
    pub fn pullback_monomial(&self, exp: &[i64]) -> FactoredFn {
        let mut out = FactoredFn::one(self.nvars());
        for (j, &e) in exp.iter().enumerate() {
            out.mul_assign_pow(&self.images[j], e);
        }
        self.base.canonicalize(&mut out);
        out
    }

    pub fn image(&self, j: usize) -> RationalFn {
        self.base.to_ratfn(&self.images[j])
    }

    pub fn images(&self) -> Vec<RationalFn> {
        (0..self.nvars()).map(|j| self.image(j)).collect()
    }

    pub fn factored_images(&self) -> Vec<FactoredFn> {
        self.images
            .iter()
            .map(|f| {
                let mut f = f.clone();
                self.base.canonicalize(&mut f);
                f
            })
            .collect()
    }

    /// Precompose with one more step: `self` becomes the pullback of the longer word.
    pub fn push(&mut self, t: &Transformation) -> Result<(), SymbolicError> {
        if *t.source() != self.target {
            return Err(SymbolicError::NotComposable);
        }
        let n = self.nvars();
        match t {
            Transformation::Mutation { source, step, target } => {
                let fixed = source.fixed();
                let ek = source.e(step.k);
                let sign = BigInt::from(step.sign.as_i64());
                let w: Vec<BigInt> = fixed
                    .to_character_coords(&ek)
                    .into_iter()
                    .map(|x| x * &sign)
                    .collect();
                let d = fixed
                    .pair_with_characters(&ek)
                    .ok_or(SymbolicError::NonIntegralExponent)?;
                let m = self.pullback_monomial(&to_i64(&w));
                let g = self
                    .base
                    .sum(&[FactoredFn::one(n), m])
                    .ok_or(SymbolicError::ZeroDenominator)?;
                for (img, dj) in self.images.iter_mut().zip(&d) {
                    if !dj.is_zero() {
                        img.mul_assign_pow(&g, dj.to_i64().expect("small exponent"));
                    }
                }
                self.target = target.clone();
            }
            Transformation::Isomorphism(iso) => {
                let fixed = iso.source.fixed();
                let mn = fixed
                    .matrix_in_characters(&iso.matrix)
                    .ok_or(SymbolicError::NonIntegralExponent)?;
                let inv = mn.inverse_unimodular().ok_or(SymbolicError::NonIntegralExponent)?;
                let s = iso.sign.as_i64();
                let new: Vec<FactoredFn> = (0..n)
                    .map(|b| {
                        let col: Vec<i64> = to_i64(&inv.col(b)).into_iter().map(|x| x * s).collect();
                        self.pullback_monomial(&col)
                    })
                    .collect();
                self.images = new;
                self.target = iso.target.clone();
            }
        }
        for img in self.images.iter_mut() {
            self.base.canonicalize(img);
        }
        Ok(())
    }

    /// Pullbacks of the target cluster coordinates `X'_i = z^{e'_i}` written in
    /// the source coordinates `X_i = z^{e_i}`.
    pub fn seed_images(&self) -> Result<Vec<RationalFn>, SymbolicError> {
        let n = self.nvars();
        let fixed = self.source.fixed();
        let e_inv = self
            .source
            .basis()
            .inverse_unimodular()
            .expect("seed basis is unimodular")
            .to_rat();
        let to_seed = |m: &[i32]| -> Option<Vec<i32>> {
            let b: Vec<BigInt> = m.iter().map(|&x| BigInt::from(x)).collect();
            let v = e_inv.mul_vec(&fixed.from_character_coords(&b));
            v.iter()
                .map(|x| x.is_integer().then(|| x.to_integer().to_i32()).flatten())
                .collect()
        };
        (0..n)
            .map(|i| {
                let c = to_i64(&fixed.to_character_coords(&self.target.e(i)));
                let r = self.base.to_ratfn(&self.pullback_monomial(&c));
                let num = r.num().map_exponents(n, to_seed);
                let den = r.den().map_exponents(n, to_seed);
                match (num, den) {
                    (Some(a), Some(b)) => RationalFn::new(a, b),
                    _ => Err(SymbolicError::NonIntegralExponent),
                }
            })
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        let n = self.nvars();
        self.factored_images()
            .iter()
            .enumerate()
            .all(|(j, f)| f.is_unit_monomial(&unit(n, j)))
    }

    /// Every image is a monomial times pieces with nonnegative coefficients.
    pub fn is_subtraction_free(&self) -> bool {
        self.factored_images()
            .iter()
            .all(|f| self.base.is_subtraction_free(f))
    }

    pub fn evaluate<S: Scalar>(&self, point: &[S]) -> Result<Vec<S>, SymbolicError> {
        self.base.eval_many(&self.images, point)
    }

    /// Pullback of an arbitrary rational function by substitution.
    pub fn pullback_ratfn(&self, r: &RationalFn) -> RationalFn {
        let sub = |p: &crate::symbolic::LaurentPoly| -> RationalFn {
            let n = self.nvars();
            let mut acc = RationalFn::constant(n, BigInt::zero());
            for (m, c) in p.terms() {
                let exp: Vec<i64> = m.0.iter().map(|&e| e as i64).collect();
                let mut t = self.pullback_monomial(&exp);
                t.coeff *= crate::linalg::Rat::from_integer(c.clone());
                acc = acc.add(&self.base.to_ratfn(&t));
            }
            acc
        };
        sub(r.num()).div(&sub(r.den())).expect("pullback of a nonzero denominator")
    }
}

/// `inner` followed by `outer`: pullbacks compose as `inner^* ∘ outer^*`.
pub fn xmap_compose(outer: &XMap, inner: &XMap) -> Result<XMap, SymbolicError> {
    if inner.target != outer.source {
        return Err(SymbolicError::NotComposable);
    }
    let n = inner.nvars();
    let mut base = inner.base.clone();
    let mut cache: std::collections::BTreeMap<usize, FactoredFn> = Default::default();
    let mut images = Vec::with_capacity(n);
    for f in outer.factored_images() {
        let mut out = FactoredFn::one(n);
        out.coeff = f.coeff.clone();
        for (j, &e) in f.mono.iter().enumerate() {
            out.mul_assign_pow(&inner.images[j], e);
        }
        for (&id, &k) in &f.factors {
            if !cache.contains_key(&id) {
                let piece = outer.base.piece(id).expect("canonical ids are live");
                let terms: Vec<FactoredFn> = piece
                    .terms()
                    .map(|(m, c)| {
                        let mut t = FactoredFn::one(n);
                        t.coeff = crate::linalg::Rat::from_integer(c.clone());
                        for (j, &e) in m.0.iter().enumerate() {
                            t.mul_assign_pow(&inner.images[j], e as i64);
                        }
                        t
                    })
                    .collect();
                let s = base.sum(&terms).ok_or(SymbolicError::ZeroDenominator)?;
                cache.insert(id, s);
            }
            out.mul_assign_pow(&cache[&id], k);
        }
        images.push(out);
    }
    for img in images.iter_mut() {
        base.canonicalize(img);
    }
    Ok(XMap {
        source: inner.source.clone(),
        target: outer.target.clone(),
        base,
        images,
    })
}

pub fn xmap_of_step(t: &Transformation) -> Result<XMap, SymbolicError> {
    XMap::of_step(t)
}

pub fn evaluate_word(word: &ClusterWord) -> Result<XMap, SymbolicError> {
    evaluate_word_with(word, &EvalOptions::default())
}

pub fn evaluate_word_with(word: &ClusterWord, opts: &EvalOptions) -> Result<XMap, SymbolicError> {
    let start = Instant::now();
    let mut m = XMap::identity(&word.source);
    for t in word.resolve()? {
        if let Some(b) = opts.budget {
            if start.elapsed() > b {
                return Err(SymbolicError::BudgetExceeded);
            }
        }
        m.push(&t)?;
    }
    Ok(m)
}

/// How a triviality verdict was reached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Trivial,
    SeedMismatch,
    RejectedModular,
    NotIdentity,
}

impl Verdict {
    pub fn is_trivial(&self) -> bool {
        *self == Verdict::Trivial
    }
}

pub fn triviality(word: &ClusterWord, opts: &EvalOptions) -> Result<Verdict, SymbolicError> {
    let steps = word.resolve()?;
    let target = steps.last().map_or(&word.source, |t| t.target());
    if *target != word.source {
        return Ok(Verdict::SeedMismatch);
    }
    if opts.fast_path && fastpath::rejects_identity(&steps, word.source.rank()) {
        return Ok(Verdict::RejectedModular);
    }
    let m = evaluate_word_with(word, opts)?;
    Ok(if m.is_identity() {
        Verdict::Trivial
    } else {
        Verdict::NotIdentity
    })
}

pub fn is_trivial_word(word: &ClusterWord) -> Result<bool, SymbolicError> {
    Ok(triviality(word, &EvalOptions::default())?.is_trivial())
}

pub fn xmap_is_identity(m: &XMap) -> bool {
    m.is_identity()
}

/// All images equal as rational functions, via cross-multiplication.
pub fn xmaps_equal(a: &XMap, b: &XMap) -> bool {
    a.nvars() == b.nvars()
        && a.images()
            .iter()
            .zip(b.images().iter())
            .all(|(x, y)| x.equals(y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{
        t_iso, FixedData, IsoSpec, MutationStep, Sign, WordStep,
    };
    use crate::linalg::{rat, IntMatrix};
    use crate::symbolic::LaurentPoly;

    fn rank2() -> Seed {
        FixedData::from_lambda(&IntMatrix::from_rows_i64(&[vec![0, 1], vec![-1, 0]]))
            .unwrap()
            .initial_seed()
    }

    fn mu(k: usize, sign: Sign) -> WordStep {
        WordStep::Mutation(MutationStep::new(k, sign))
    }

    fn poly(terms: &[(&[i32], i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(2, terms.iter().map(|(e, c)| (e.to_vec(), BigInt::from(*c))))
    }

    #[test]
    fn rank_two_mutation_in_seed_coordinates() {
        let s = rank2();
        let m = evaluate_word(&ClusterWord::new(&s, vec![mu(0, Sign::Plus)])).unwrap();
        let img = m.seed_images().unwrap();
        assert!(img[0].equals(&RationalFn::monomial(vec![-1, 0])));
        let x2_1px1 = RationalFn::from_poly(poly(&[(&[0, 1], 1), (&[1, 1], 1)]));
        assert!(img[1].equals(&x2_1px1));
        let at = m.evaluate(&[rat(1), rat(1)]).unwrap();
        assert_eq!(at, vec![rat(1), rat(2)]);
    }

    #[test]
    fn negative_mutation_on_characters() {
        let s = rank2();
        let m = evaluate_word(&ClusterWord::new(&s, vec![mu(0, Sign::Minus)])).unwrap();
        let want = RationalFn::new(poly(&[(&[1, 1], 1), (&[0, 1], 1)]), poly(&[(&[1, 0], 1)])).unwrap();
        assert!(m.image(1).equals(&want));
        assert!(m.image(0).equals(&RationalFn::monomial(vec![1, 0])));
        let plus = evaluate_word(&ClusterWord::new(&s, vec![mu(0, Sign::Plus)])).unwrap();
        let a = m.seed_images().unwrap();
        let b = plus.seed_images().unwrap();
        assert!(a.iter().zip(&b).all(|(x, y)| x.equals(y)));
    }

    #[test]
    fn minus_identity_inverts() {
        let s = FixedData::from_lambda(&IntMatrix::zeros(2, 2)).unwrap().initial_seed();
        let w = ClusterWord::new(
            &s,
            vec![WordStep::Isomorphism(IsoSpec {
                perm: vec![0, 1],
                sign: Sign::Minus,
                matrix: None,
            })],
        );
        let m = evaluate_word(&w).unwrap();
        assert!(m.image(0).equals(&RationalFn::monomial(vec![-1, 0])));
        assert!(m.image(1).equals(&RationalFn::monomial(vec![0, -1])));
    }

    #[test]
    fn double_mutation_is_t() {
        for sign in [Sign::Plus, Sign::Minus] {
            let s = rank2();
            let mm = evaluate_word(&ClusterWord::new(&s, vec![mu(0, sign), mu(0, sign)])).unwrap();
            let t = t_iso(&s, 0, sign).unwrap();
            let tm = XMap::of_step(&Transformation::Isomorphism(t)).unwrap();
            assert_eq!(mm.target(), tm.target());
            assert!(xmaps_equal(&mm, &tm));
            assert!(tm.factored_images().iter().all(|f| f.is_monomial()));
        }
    }

    #[test]
    fn pentagon_has_order_five() {
        let s = rank2();
        let sigma = IntMatrix::from_rows_i64(&[vec![0, 1], vec![-1, 0]]);
        let step = vec![
            mu(0, Sign::Plus),
            WordStep::Isomorphism(IsoSpec {
                perm: vec![1, 0],
                sign: Sign::Plus,
                matrix: Some(sigma),
            }),
        ];
        let w = ClusterWord::new(&s, step);
        for k in 1..5 {
            let v = triviality(&w.power(k), &EvalOptions::default()).unwrap();
            assert!(!v.is_trivial(), "power {k}");
        }
        let five = w.power(5);
        assert_eq!(triviality(&five, &EvalOptions::default()).unwrap(), Verdict::Trivial);
        let slow = EvalOptions {
            fast_path: false,
            ..Default::default()
        };
        assert_eq!(triviality(&five, &slow).unwrap(), Verdict::Trivial);
    }

    #[test]
    fn composition_matches_word_concatenation() {
        let s = FixedData::from_lambda(&IntMatrix::from_rows_i64(&[
            vec![0, 1, -1],
            vec![-1, 0, 2],
            vec![1, -2, 0],
        ]))
        .unwrap()
        .initial_seed();
        let a = ClusterWord::new(&s, vec![mu(0, Sign::Plus), mu(1, Sign::Minus)]);
        let b = ClusterWord::new(&a.target().unwrap(), vec![mu(2, Sign::Plus), mu(0, Sign::Plus)]);
        let whole = evaluate_word(&a.then(&b).unwrap()).unwrap();
        let composed = xmap_compose(&evaluate_word(&b).unwrap(), &evaluate_word(&a).unwrap()).unwrap();
        assert!(xmaps_equal(&whole, &composed));
        let inv = a.inverse().unwrap();
        assert!(is_trivial_word(&a.then(&inv).unwrap()).unwrap());
    }

    #[test]
    fn fast_path_agrees_with_exact_values() {
        let s = rank2();
        let w = ClusterWord::new(&s, vec![mu(0, Sign::Plus), mu(1, Sign::Minus), mu(0, Sign::Plus)]);
        let steps = w.resolve().unwrap();
        let m = evaluate_word(&w).unwrap();
        let pt = [crate::symbolic::Fp(12345), crate::symbolic::Fp(678)];
        assert_eq!(fastpath::evaluate_steps(&steps, &pt).unwrap(), m.evaluate(&pt).unwrap());
    }
}
