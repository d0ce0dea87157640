//! Fixed data, seeds, mutations and seed isomorphisms.
//!
//! A seed is stored as an integer basis matrix whose column `i` is `e_i`
//! written in the initial basis of `N°`. Everything here is exact.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::linalg::{IntMatrix, Rat, RatMatrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("form is not skew-symmetric")]
    NotSkewSymmetric,
    #[error("form is not integral on N°")]
    NonIntegralExchange,
    #[error("bad sublattice: {0}")]
    BadSublattice(String),
    #[error("isomorphism does not respect the form")]
    FormNotRespected,
    #[error("isomorphism does not preserve N")]
    LatticeNotPreserved,
    #[error("not a bijection: {0}")]
    NotBijective(String),
    #[error("words are not composable")]
    NotComposable,
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_i64(v: i64) -> Sign {
        if v < 0 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// The lattice `N° = Z^I` with its skew form and an optional overlattice `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedData {
    labels: Vec<String>,
    lambda: IntMatrix,
    n_basis: Option<RatMatrix>,
    n_basis_inv: Option<IntMatrix>,
}

impl FixedData {
    pub fn new(
        labels: Vec<String>,
        lambda: &RatMatrix,
        n_basis: Option<RatMatrix>,
    ) -> Result<Arc<FixedData>, LatticeError> {
        let n = labels.len();
        if lambda.rows() != n || lambda.cols() != n {
            return Err(LatticeError::DimensionMismatch(format!(
                "{} labels but form is {}x{}",
                n,
                lambda.rows(),
                lambda.cols()
            )));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(LatticeError::DimensionMismatch(format!("duplicate label {l}")));
            }
        }
        for i in 0..n {
            for j in 0..n {
                if *lambda.get(i, j) != -lambda.get(j, i).clone() {
                    return Err(LatticeError::NotSkewSymmetric);
                }
            }
        }
        let lambda_int = lambda.to_int().ok_or(LatticeError::NonIntegralExchange)?;
        let n_basis_inv = match &n_basis {
            None => None,
            Some(b) => {
                if b.rows() != n || b.cols() != n {
                    return Err(LatticeError::DimensionMismatch("n_basis must be square".into()));
                }
                let inv = b
                    .inverse()
                    .ok_or_else(|| LatticeError::BadSublattice("n_basis is singular".into()))?;
                let inv = inv
                    .to_int()
                    .ok_or_else(|| LatticeError::BadSublattice("N° is not contained in N".into()))?;
                let pairing = b.transpose().mul(lambda);
                if !pairing.is_integral() {
                    return Err(LatticeError::BadSublattice("{N, N°} is not integral".into()));
                }
                Some(inv)
            }
        };
        Ok(Arc::new(FixedData {
            labels,
            lambda: lambda_int,
            n_basis,
            n_basis_inv,
        }))
    }

    /// Convenience constructor with labels `1..n`.
    pub fn from_lambda(lambda: &IntMatrix) -> Result<Arc<FixedData>, LatticeError> {
        let labels = (1..=lambda.rows()).map(|i| i.to_string()).collect();
        FixedData::new(labels, &lambda.to_rat(), None)
    }

    /// Same form, new overlattice.
    pub fn with_n_basis(&self, n_basis: RatMatrix) -> Result<Arc<FixedData>, LatticeError> {
        FixedData::new(self.labels.clone(), &self.lambda.to_rat(), Some(n_basis))
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn lambda(&self) -> &IntMatrix {
        &self.lambda
    }

    pub fn n_basis(&self) -> Option<&RatMatrix> {
        self.n_basis.as_ref()
    }

    /// Coordinates of a vector of `N°` in the character basis of `N`.
    pub fn to_character_coords(&self, v: &[BigInt]) -> Vec<BigInt> {
        match &self.n_basis_inv {
            None => v.to_vec(),
            Some(inv) => inv.mul_vec(v),
        }
    }

    /// Rational `N°`-coordinates of a character-basis vector.
    pub fn from_character_coords(&self, v: &[BigInt]) -> Vec<Rat> {
        let r: Vec<Rat> = v.iter().map(|x| Rat::from_integer(x.clone())).collect();
        match &self.n_basis {
            None => r,
            Some(b) => b.mul_vec(&r),
        }
    }

    /// `{e, b_j}` for every character basis vector `b_j`, or `None` if some
    /// value is not an integer.
    pub fn pair_with_characters(&self, e: &[BigInt]) -> Option<Vec<BigInt>> {
        let row: Vec<BigInt> = (0..self.rank())
            .map(|j| (0..self.rank()).map(|i| &e[i] * self.lambda.get(i, j)).sum())
            .collect();
        match &self.n_basis {
            None => Some(row),
            Some(b) => {
                let r: Vec<Rat> = row.into_iter().map(Rat::from_integer).collect();
                b.transpose()
                    .mul_vec(&r)
                    .into_iter()
                    .map(|x| x.is_integer().then(|| x.to_integer()))
                    .collect()
            }
        }
    }

    /// Conjugate a map of `N°` (initial coordinates) into character coordinates.
    pub fn matrix_in_characters(&self, m: &IntMatrix) -> Option<IntMatrix> {
        match (&self.n_basis, &self.n_basis_inv) {
            (Some(b), Some(inv)) => inv.to_rat().mul(&m.to_rat()).mul(b).to_int(),
            _ => Some(m.clone()),
        }
    }

    pub fn form(&self, a: &[BigInt], b: &[BigInt]) -> BigInt {
        let mut s = BigInt::zero();
        for i in 0..self.rank() {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..self.rank() {
                s += &a[i] * self.lambda.get(i, j) * &b[j];
            }
        }
        s
    }

    pub fn initial_seed(self: &Arc<Self>) -> Seed {
        Seed {
            fixed: Arc::clone(self),
            basis: IntMatrix::identity(self.rank()),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Seed {
    fixed: Arc<FixedData>,
    basis: IntMatrix,
}

impl PartialEq for Seed {
    fn eq(&self, other: &Seed) -> bool {
        (Arc::ptr_eq(&self.fixed, &other.fixed) || self.fixed == other.fixed)
            && self.basis == other.basis
    }
}

impl Eq for Seed {}

impl Seed {
    pub fn from_basis(fixed: &Arc<FixedData>, basis: IntMatrix) -> Result<Seed, LatticeError> {
        if basis.rows() != fixed.rank() || basis.cols() != fixed.rank() {
            return Err(LatticeError::DimensionMismatch("basis size".into()));
        }
        if !basis.is_unimodular() {
            return Err(LatticeError::NotBijective("basis is not unimodular".into()));
        }
        Ok(Seed {
            fixed: Arc::clone(fixed),
            basis,
        })
    }

    pub fn fixed(&self) -> &Arc<FixedData> {
        &self.fixed
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.fixed.rank()
    }

    pub fn e(&self, i: usize) -> Vec<BigInt> {
        self.basis.col(i)
    }

    /// `ε_ij = {e_i, e_j}`.
    pub fn exchange_matrix(&self) -> IntMatrix {
        self.basis
            .transpose()
            .mul(&self.fixed.lambda)
            .mul(&self.basis)
    }

    pub fn mutate(&self, step: MutationStep) -> Result<Seed, LatticeError> {
        let n = self.rank();
        let k = step.k;
        if k >= n {
            return Err(LatticeError::IndexOutOfRange(k));
        }
        let eps = self.exchange_matrix();
        let s = BigInt::from(step.sign.as_i64());
        let ek = self.basis.col(k);
        let mut basis = self.basis.clone();
        for i in 0..n {
            if i == k {
                let neg: Vec<BigInt> = ek.iter().map(|x| -x).collect();
                basis.set_col(k, &neg);
                continue;
            }
            let c = &s * eps.get(i, k);
            if c.is_positive() {
                for r in 0..n {
                    let v = basis.get(r, i) + &c * &ek[r];
                    basis.set(r, i, v);
                }
            }
        }
        Ok(Seed {
            fixed: Arc::clone(&self.fixed),
            basis,
        })
    }

    pub fn mutate_at(&self, k: usize, sign: Sign) -> Result<Seed, LatticeError> {
        self.mutate(MutationStep { k, sign })
    }
}

/// Matrix mutation rule, independent of the basis formula.
pub fn mutate_exchange_matrix(eps: &IntMatrix, k: usize) -> IntMatrix {
    let n = eps.rows();
    let pos = |x: &BigInt| if x.is_positive() { x.clone() } else { BigInt::zero() };
    IntMatrix::from_fn(n, n, |i, j| {
        if i == k || j == k {
            -eps.get(i, j).clone()
        } else {
            let (a, b) = (eps.get(i, k), eps.get(k, j));
            eps.get(i, j) + pos(a) * pos(b) - pos(&-a.clone()) * pos(&-b.clone())
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MutationStep {
    pub k: usize,
    pub sign: Sign,
}

impl MutationStep {
    pub fn new(k: usize, sign: Sign) -> Self {
        MutationStep { k, sign }
    }
}

/// A signed seed isomorphism `εσ`. `matrix` is `σ^♭` in initial coordinates of `N°`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeedIsomorphism {
    pub perm: Vec<usize>,
    pub matrix: IntMatrix,
    pub sign: Sign,
    pub source: Seed,
    pub target: Seed,
}

fn check_perm(perm: &[usize], n: usize) -> Result<(), LatticeError> {
    if perm.len() != n {
        return Err(LatticeError::NotBijective(format!(
            "permutation has length {} but rank is {n}",
            perm.len()
        )));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return Err(LatticeError::NotBijective("repeated or out-of-range image".into()));
        }
        seen[p] = true;
    }
    Ok(())
}

pub fn invert_perm(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    inv
}

impl SeedIsomorphism {
    /// Without a matrix, `σ^♭` sends `e_i` to `e_{σ(i)}` of the same seed.
    pub fn new(
        seed: &Seed,
        perm: Vec<usize>,
        sign: Sign,
        matrix: Option<IntMatrix>,
    ) -> Result<SeedIsomorphism, LatticeError> {
        let n = seed.rank();
        check_perm(&perm, n)?;
        let fixed = seed.fixed();
        let (matrix, target) = match matrix {
            None => {
                let eps = seed.exchange_matrix();
                let s = BigInt::from(sign.as_i64());
                for i in 0..n {
                    for j in 0..n {
                        if *eps.get(perm[i], perm[j]) != &s * eps.get(i, j) {
                            return Err(LatticeError::FormNotRespected);
                        }
                    }
                }
                let basis_inv = seed
                    .basis()
                    .inverse_unimodular()
                    .expect("seed basis is unimodular");
                let m = seed
                    .basis()
                    .mul(&IntMatrix::permutation(&perm))
                    .mul(&basis_inv);
                (m, seed.clone())
            }
            Some(m) => {
                if m.rows() != n || m.cols() != n {
                    return Err(LatticeError::DimensionMismatch("isomorphism matrix".into()));
                }
                if !m.is_unimodular() {
                    return Err(LatticeError::NotBijective("matrix is not unimodular".into()));
                }
                let s = BigInt::from(sign.as_i64());
                let pulled = m.transpose().mul(fixed.lambda()).mul(&m);
                let expected = IntMatrix::from_fn(n, n, |i, j| &s * fixed.lambda().get(i, j));
                if pulled != expected {
                    return Err(LatticeError::FormNotRespected);
                }
                let mut basis = IntMatrix::zeros(n, n);
                for i in 0..n {
                    basis.set_col(perm[i], &m.mul_vec(&seed.e(i)));
                }
                let target = Seed::from_basis(fixed, basis)?;
                (m, target)
            }
        };
        if fixed.matrix_in_characters(&matrix).is_none() {
            return Err(LatticeError::LatticeNotPreserved);
        }
        Ok(SeedIsomorphism {
            perm,
            matrix,
            sign,
            source: seed.clone(),
            target,
        })
    }

    pub fn identity(seed: &Seed) -> SeedIsomorphism {
        SeedIsomorphism {
            perm: (0..seed.rank()).collect(),
            matrix: IntMatrix::identity(seed.rank()),
            sign: Sign::Plus,
            source: seed.clone(),
            target: seed.clone(),
        }
    }

    pub fn inverse(&self) -> SeedIsomorphism {
        SeedIsomorphism {
            perm: invert_perm(&self.perm),
            matrix: self
                .matrix
                .inverse_unimodular()
                .expect("isomorphism matrix is unimodular"),
            sign: self.sign,
            source: self.target.clone(),
            target: self.source.clone(),
        }
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &SeedIsomorphism) -> Result<SeedIsomorphism, LatticeError> {
        if self.target != next.source {
            return Err(LatticeError::NotComposable);
        }
        Ok(SeedIsomorphism {
            perm: self.perm.iter().map(|&p| next.perm[p]).collect(),
            matrix: next.matrix.mul(&self.matrix),
            sign: self.sign.times(next.sign),
            source: self.source.clone(),
            target: next.target.clone(),
        })
    }

    pub fn is_identity(&self) -> bool {
        self.sign == Sign::Plus
            && self.perm.iter().enumerate().all(|(i, &p)| i == p)
            && self.matrix == IntMatrix::identity(self.perm.len())
    }

    pub fn spec(&self) -> IsoSpec {
        IsoSpec {
            perm: self.perm.clone(),
            sign: self.sign,
            matrix: Some(self.matrix.clone()),
        }
    }
}

/// `t_k^ε`: the isomorphism `e_i ↦ e_i + ε ε_ik e_k`, equal to `μ_k^ε ∘ μ_k^ε`.
pub fn t_iso(seed: &Seed, k: usize, sign: Sign) -> Result<SeedIsomorphism, LatticeError> {
    let n = seed.rank();
    if k >= n {
        return Err(LatticeError::IndexOutOfRange(k));
    }
    let eps = seed.exchange_matrix();
    let s = BigInt::from(sign.as_i64());
    let ek = seed.e(k);
    let mut basis = seed.basis().clone();
    for i in 0..n {
        if i == k {
            continue;
        }
        let c = &s * eps.get(i, k);
        for r in 0..n {
            let v = basis.get(r, i) + &c * &ek[r];
            basis.set(r, i, v);
        }
    }
    let inv = seed.basis().inverse_unimodular().expect("unimodular basis");
    let m = basis.mul(&inv);
    SeedIsomorphism::new(seed, (0..n).collect(), Sign::Plus, Some(m))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoSpec {
    pub perm: Vec<usize>,
    pub sign: Sign,
    pub matrix: Option<IntMatrix>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WordStep {
    Mutation(MutationStep),
    Isomorphism(IsoSpec),
}

/// A resolved step of a word, with its source and target seeds.
#[derive(Clone, Debug)]
pub enum Transformation {
    Mutation {
        source: Seed,
        step: MutationStep,
        target: Seed,
    },
    Isomorphism(SeedIsomorphism),
}

impl Transformation {
    pub fn source(&self) -> &Seed {
        match self {
            Transformation::Mutation { source, .. } => source,
            Transformation::Isomorphism(iso) => &iso.source,
        }
    }

    pub fn target(&self) -> &Seed {
        match self {
            Transformation::Mutation { target, .. } => target,
            Transformation::Isomorphism(iso) => &iso.target,
        }
    }
}

/// A cluster transformation as a list of steps in the order they are applied.
#[derive(Clone, Debug)]
pub struct ClusterWord {
    pub source: Seed,
    pub steps: Vec<WordStep>,
}

impl ClusterWord {
    pub fn empty(source: &Seed) -> ClusterWord {
        ClusterWord {
            source: source.clone(),
            steps: Vec::new(),
        }
    }

    pub fn new(source: &Seed, steps: Vec<WordStep>) -> ClusterWord {
        ClusterWord {
            source: source.clone(),
            steps,
        }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn mutation_count(&self) -> usize {
        self.steps
            .iter()
            .filter(|s| matches!(s, WordStep::Mutation(_)))
            .count()
    }

    pub fn resolve(&self) -> Result<Vec<Transformation>, LatticeError> {
        let mut seed = self.source.clone();
        let mut out = Vec::with_capacity(self.steps.len());
        for step in &self.steps {
            let t = match step {
                WordStep::Mutation(m) => {
                    let target = seed.mutate(*m)?;
                    Transformation::Mutation {
                        source: seed.clone(),
                        step: *m,
                        target,
                    }
                }
                WordStep::Isomorphism(spec) => Transformation::Isomorphism(SeedIsomorphism::new(
                    &seed,
                    spec.perm.clone(),
                    spec.sign,
                    spec.matrix.clone(),
                )?),
            };
            seed = t.target().clone();
            out.push(t);
        }
        Ok(out)
    }

    pub fn target(&self) -> Result<Seed, LatticeError> {
        Ok(self
            .resolve()?
            .last()
            .map_or_else(|| self.source.clone(), |t| t.target().clone()))
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &ClusterWord) -> Result<ClusterWord, LatticeError> {
        if self.target()? != next.source {
            return Err(LatticeError::NotComposable);
        }
        let mut steps = self.steps.clone();
        steps.extend(next.steps.iter().cloned());
        Ok(ClusterWord {
            source: self.source.clone(),
            steps,
        })
    }

    /// Appends steps without resolving; composability is checked on resolution.
    pub fn then_unchecked(&self, next: &ClusterWord) -> ClusterWord {
        let mut steps = self.steps.clone();
        steps.extend(next.steps.iter().cloned());
        ClusterWord {
            source: self.source.clone(),
            steps,
        }
    }

    pub fn power(&self, n: usize) -> ClusterWord {
        ClusterWord {
            source: self.source.clone(),
            steps: (0..n).flat_map(|_| self.steps.iter().cloned()).collect(),
        }
    }

    pub fn inverse(&self) -> Result<ClusterWord, LatticeError> {
        let resolved = self.resolve()?;
        let target = resolved
            .last()
            .map_or_else(|| self.source.clone(), |t| t.target().clone());
        let steps = resolved
            .iter()
            .rev()
            .map(|t| match t {
                Transformation::Mutation { step, .. } => WordStep::Mutation(MutationStep {
                    k: step.k,
                    sign: step.sign.flip(),
                }),
                Transformation::Isomorphism(iso) => WordStep::Isomorphism(iso.inverse().spec()),
            })
            .collect();
        Ok(ClusterWord {
            source: target,
            steps,
        })
    }

    /// Rewrite as positive mutations followed by a single isomorphism.
    pub fn normalize(&self) -> Result<ClusterWord, LatticeError> {
        let mut out = Vec::new();
        let mut out_seed = self.source.clone();
        let mut pending = SeedIsomorphism::identity(&self.source);
        for t in self.resolve()? {
            match t {
                Transformation::Isomorphism(iso) => {
                    pending = pending.then(&iso)?;
                }
                Transformation::Mutation { step, target, .. } => {
                    // move the pending isomorphism past the mutation
                    let k = invert_perm(&pending.perm)[step.k];
                    let sign = pending.sign.times(step.sign);
                    let moved = out_seed.mutate_at(k, sign)?;
                    let shifted = SeedIsomorphism::new(
                        &moved,
                        pending.perm.clone(),
                        pending.sign,
                        Some(pending.matrix.clone()),
                    )?;
                    let positive = out_seed.mutate_at(k, Sign::Plus)?;
                    out.push(WordStep::Mutation(MutationStep::new(k, Sign::Plus)));
                    pending = match sign {
                        Sign::Plus => shifted,
                        Sign::Minus => t_iso(&positive, k, Sign::Minus)?.then(&shifted)?,
                    };
                    out_seed = positive;
                    if pending.target != target {
                        return Err(LatticeError::NotComposable);
                    }
                }
            }
        }
        out.push(WordStep::Isomorphism(pending.spec()));
        Ok(ClusterWord {
            source: self.source.clone(),
            steps: out,
        })
    }
}

/// Parse a permutation in cycle notation such as `(1,5)(2,6)` over labels `1..=n`.
pub fn perm_from_cycles(cycles: &str, n: usize) -> Result<Vec<usize>, LatticeError> {
    let mut perm: Vec<usize> = (0..n).collect();
    let bad = || LatticeError::NotBijective(format!("bad cycle notation {cycles:?}"));
    let s = cycles.trim();
    if s.is_empty() || s == "id" || s == "()" {
        return Ok(perm);
    }
    let mut seen = vec![false; n];
    let mut rest = s;
    while !rest.is_empty() {
        let open = rest.strip_prefix('(').ok_or_else(bad)?;
        let close = open.find(')').ok_or_else(bad)?;
        let items: Vec<usize> = open[..close]
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<_, _>>()?;
        if items.iter().any(|&x| x == 0 || x > n) {
            return Err(bad());
        }
        for (i, &a) in items.iter().enumerate() {
            if seen[a - 1] {
                return Err(bad());
            }
            seen[a - 1] = true;
            perm[a - 1] = items[(i + 1) % items.len()] - 1;
        }
        rest = open[close + 1..].trim_start();
    }
    check_perm(&perm, n)?;
    Ok(perm)
}

impl fmt::Display for Seed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rank() {
            let col: Vec<String> = self.e(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "e_{} = ({})", self.fixed.labels()[i], col.join(","))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, rat};

    fn rank2() -> Arc<FixedData> {
        FixedData::from_lambda(&IntMatrix::from_rows_i64(&[vec![0, 1], vec![-1, 0]])).unwrap()
    }

    #[test]
    fn rejects_bad_forms() {
        let labels: Vec<String> = vec!["1".into(), "2".into()];
        let half = RatMatrix::from_rows(vec![
            vec![rat(0), Rat::new(int(1), int(2))],
            vec![Rat::new(int(-1), int(2)), rat(0)],
        ]);
        assert_eq!(
            FixedData::new(labels.clone(), &half, None).unwrap_err(),
            LatticeError::NonIntegralExchange
        );
        let sym = RatMatrix::from_rows(vec![vec![rat(0), rat(1)], vec![rat(1), rat(0)]]);
        assert_eq!(
            FixedData::new(labels, &sym, None).unwrap_err(),
            LatticeError::NotSkewSymmetric
        );
    }

    #[test]
    fn rank_two_mutations() {
        let s = rank2().initial_seed();
        let plus = s.mutate_at(0, Sign::Plus).unwrap();
        assert_eq!(
            plus.exchange_matrix(),
            IntMatrix::from_rows_i64(&[vec![0, -1], vec![1, 0]])
        );
        let minus = s.mutate_at(0, Sign::Minus).unwrap();
        assert_eq!(minus.e(0), vec![int(-1), int(0)]);
        assert_eq!(minus.e(1), vec![int(1), int(1)]);
        assert_eq!(plus.mutate_at(0, Sign::Minus).unwrap(), s);
    }

    #[test]
    fn transposition_is_not_form_preserving() {
        let s = rank2().initial_seed();
        assert_eq!(
            SeedIsomorphism::new(&s, vec![1, 0], Sign::Plus, None).unwrap_err(),
            LatticeError::FormNotRespected
        );
        assert!(SeedIsomorphism::new(&s, vec![1, 0], Sign::Minus, None).is_ok());
    }

    #[test]
    fn cycles() {
        assert_eq!(perm_from_cycles("(1,3,4,2)", 4).unwrap(), vec![2, 0, 3, 1]);
        assert_eq!(perm_from_cycles("(1,5)(2,6)", 6).unwrap(), vec![4, 5, 2, 3, 0, 1]);
        assert!(perm_from_cycles("(1,7)", 6).is_err());
    }

    #[test]
    fn normalize_moves_isomorphisms_right() {
        let s = rank2().initial_seed();
        let w = ClusterWord::new(
            &s,
            vec![
                WordStep::Isomorphism(IsoSpec {
                    perm: vec![1, 0],
                    sign: Sign::Minus,
                    matrix: None,
                }),
                WordStep::Mutation(MutationStep::new(0, Sign::Plus)),
                WordStep::Mutation(MutationStep::new(1, Sign::Minus)),
            ],
        );
        let n = w.normalize().unwrap();
        assert_eq!(n.target().unwrap(), w.target().unwrap());
        assert!(matches!(n.steps.last(), Some(WordStep::Isomorphism(_))));
        assert!(n.steps[..n.len() - 1]
            .iter()
            .all(|s| matches!(s, WordStep::Mutation(m) if m.sign == Sign::Plus)));
    }
}
