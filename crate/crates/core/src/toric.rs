//! Seeds from plane vectors, smooth fans, boundary intersection data, null
//! roots and the symmetric form on `K°`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lattice::{FixedData, LatticeError, Seed};
use crate::linalg::{
    complete_to_unimodular, integer_kernel, primitive_on_ray, rat, IntMatrix, Rat,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ToricError {
    #[error("vector w_{0} is not primitive")]
    NotPrimitive(usize),
    #[error("vectors do not span the plane")]
    RankDeficient,
    #[error("vectors do not positively span the plane")]
    NotPositivelySpanning,
    #[error("inconsistent fan: {0}")]
    InconsistentFan(String),
    #[error("seed is not of q-Painleve type")]
    NotQPainleveType,
    #[error("kernel of the boundary intersection matrix has no positive vector")]
    NoPositiveKernelVector,
    #[error("singular system while solving for C_a")]
    SingularSystem,
    #[error("invariants match no known type: {0}")]
    UnrecognizedInvariants(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

pub type V2 = [i64; 2];

/// `a ∧ b` with `(1,0) ∧ (0,1) = 1`.
pub fn wedge(a: V2, b: V2) -> i64 {
    a[0] * b[1] - a[1] * b[0]
}

fn is_primitive(v: V2) -> bool {
    v[0].gcd(&v[1]) == 1
}

/// Counterclockwise angular comparison measured from `start`.
fn angle_cmp(start: V2, a: V2, b: V2) -> Ordering {
    let half = |v: V2| -> u8 {
        let c = wedge(start, v);
        let d = start[0] * v[0] + start[1] * v[1];
        if c == 0 && d > 0 {
            0
        } else if c > 0 {
            1
        } else if c == 0 {
            2
        } else {
            3
        }
    };
    let (ha, hb) = (half(a), half(b));
    if ha != hb {
        return ha.cmp(&hb);
    }
    0.cmp(&wedge(a, b))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToricSeedData {
    pub vectors: Vec<V2>,
    #[serde(default = "default_orientation")]
    pub orientation: i64,
}

fn default_orientation() -> i64 {
    1
}

impl ToricSeedData {
    pub fn new(vectors: Vec<V2>) -> ToricSeedData {
        ToricSeedData {
            vectors,
            orientation: 1,
        }
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn validate(&self) -> Result<(), ToricError> {
        for (i, &v) in self.vectors.iter().enumerate() {
            if !is_primitive(v) {
                return Err(ToricError::NotPrimitive(i + 1));
            }
        }
        if !self
            .vectors
            .iter()
            .any(|&a| self.vectors.iter().any(|&b| wedge(a, b) != 0))
        {
            return Err(ToricError::RankDeficient);
        }
        if self.orientation.abs() != 1 {
            return Err(ToricError::InconsistentFan("orientation must be ±1".into()));
        }
        Ok(())
    }

    /// The `2 × |I|` matrix with columns `w_i`.
    pub fn matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(2, self.len(), |r, c| BigInt::from(self.vectors[c][r]))
    }
}

/// Fixed data with `N = N° = Z^I`, `λ_ij = ±(w_i ∧ w_j)`, and its initial seed.
pub fn seed_from_vectors(data: &ToricSeedData) -> Result<(Arc<FixedData>, Seed), ToricError> {
    data.validate()?;
    let n = data.len();
    let lambda = IntMatrix::from_fn(n, n, |i, j| {
        BigInt::from(data.orientation * wedge(data.vectors[i], data.vectors[j]))
    });
    let fixed = FixedData::from_lambda(&lambda)?;
    let seed = fixed.initial_seed();
    Ok((fixed, seed))
}

/// A complete fan in the plane, rays listed counterclockwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fan2D {
    pub rays: Vec<V2>,
}

impl Fan2D {
    pub fn len(&self) -> usize {
        self.rays.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rays.is_empty()
    }

    pub fn is_smooth(&self) -> bool {
        let s = self.rays.len();
        s >= 3 && (0..s).all(|j| wedge(self.rays[j], self.rays[(j + 1) % s]) == 1)
    }

    pub fn index_of(&self, v: V2) -> Option<usize> {
        self.rays.iter().position(|&r| r == v)
    }

    /// Star subdivision of the cone between rays `j` and `j+1`.
    pub fn star_subdivide(&self, j: usize) -> Fan2D {
        let s = self.rays.len();
        let (u, v) = (self.rays[j], self.rays[(j + 1) % s]);
        let mut rays = self.rays.clone();
        rays.insert(j + 1, [u[0] + v[0], u[1] + v[1]]);
        Fan2D { rays }
    }
}

/// Distinct rays of the data, counterclockwise starting from the ray of `w_1`.
fn sorted_rays(data: &ToricSeedData) -> Vec<V2> {
    let mut rays: Vec<V2> = Vec::new();
    for &v in &data.vectors {
        if !rays.contains(&v) {
            rays.push(v);
        }
    }
    let start = data.vectors[0];
    rays.sort_by(|&a, &b| angle_cmp(start, a, b));
    rays
}

/// Rays of the minimal resolution strictly inside the cone from `u` to `v`.
fn resolve_cone(u: V2, v: V2) -> Vec<V2> {
    let mut out = Vec::new();
    let mut u = u;
    loop {
        let d = wedge(u, v);
        if d == 1 {
            return out;
        }
        // p = p0 + t u runs over det(u, p) = 1; take the one with det(p, v) minimal positive.
        let (g, x, y) = {
            let (g, x, y) = ext_gcd_i64(u[0], u[1]);
            (g, x, y)
        };
        debug_assert_eq!(g, 1);
        let p0 = [-y, x];
        debug_assert_eq!(wedge(u, p0), 1);
        let base = wedge(p0, v);
        // base + t d > 0 with minimal value
        let t = Integer::div_floor(&(-base), &d) + 1;
        let p = [p0[0] + t * u[0], p0[1] + t * u[1]];
        debug_assert!(wedge(p, v) > 0 && wedge(p, v) < d);
        out.push(p);
        u = p;
    }
}

fn ext_gcd_i64(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        return if a < 0 { (-a, -1, 0) } else { (a, 1, 0) };
    }
    let (g, x, y) = ext_gcd_i64(b, a.rem_euclid(b));
    (g, y, x - a.div_euclid(b) * y)
}

/// Smooth complete fan containing every `w_i`, by minimal resolution of each sector.
pub fn smooth_complete_fan(data: &ToricSeedData) -> Result<Fan2D, ToricError> {
    data.validate()?;
    let rays = sorted_rays(data);
    let s = rays.len();
    if s < 3 {
        return Err(ToricError::NotPositivelySpanning);
    }
    for j in 0..s {
        if wedge(rays[j], rays[(j + 1) % s]) <= 0 {
            return Err(ToricError::NotPositivelySpanning);
        }
    }
    let mut out = Vec::new();
    for j in 0..s {
        let (u, v) = (rays[j], rays[(j + 1) % s]);
        out.push(u);
        out.extend(resolve_cone(u, v));
    }
    let fan = Fan2D { rays: out };
    debug_assert!(fan.is_smooth());
    Ok(fan)
}

/// Self-intersections, multiplicities and the boundary intersection matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryData {
    pub fan: Fan2D,
    pub self_int: Vec<i64>,
    pub mult: Vec<i64>,
    pub h: Vec<Vec<i64>>,
}

impl BoundaryData {
    pub fn h_matrix(&self) -> IntMatrix {
        IntMatrix::from_rows_i64(&self.h)
    }

    /// Intersection matrix of the toric boundary, before blowups.
    pub fn toric_matrix(&self) -> IntMatrix {
        cyclic_matrix(&self.self_int)
    }
}

fn cyclic_matrix(diag: &[i64]) -> IntMatrix {
    let s = diag.len();
    IntMatrix::from_fn(s, s, |i, j| {
        if i == j {
            BigInt::from(diag[i])
        } else if (i + 1) % s == j || (j + 1) % s == i {
            BigInt::from(if s == 2 { 2 } else { 1 })
        } else {
            BigInt::zero()
        }
    })
}

pub fn boundary_data(data: &ToricSeedData, fan: &Fan2D) -> Result<BoundaryData, ToricError> {
    let s = fan.len();
    if !fan.is_smooth() {
        return Err(ToricError::InconsistentFan("fan is not smooth".into()));
    }
    let mut self_int = Vec::with_capacity(s);
    for j in 0..s {
        let prev = fan.rays[(j + s - 1) % s];
        let next = fan.rays[(j + 1) % s];
        let w = fan.rays[j];
        let sum = [prev[0] + next[0], prev[1] + next[1]];
        // sum = -n w
        let n = if w[0] != 0 { -sum[0] / w[0] } else { -sum[1] / w[1] };
        if sum[0] != -n * w[0] || sum[1] != -n * w[1] {
            return Err(ToricError::InconsistentFan(format!(
                "w'_{} - neighbours are not colinear with it",
                j + 1
            )));
        }
        self_int.push(n);
    }
    let mut mult = vec![0i64; s];
    for (i, &w) in data.vectors.iter().enumerate() {
        let j = fan
            .index_of(w)
            .ok_or_else(|| ToricError::InconsistentFan(format!("w_{} is not a ray", i + 1)))?;
        mult[j] += 1;
    }
    let diag: Vec<i64> = (0..s).map(|j| self_int[j] - mult[j]).collect();
    let h = cyclic_matrix(&diag).to_rows_i64();
    Ok(BoundaryData {
        fan: fan.clone(),
        self_int,
        mult,
        h,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum QpVerdict {
    QPainleve,
    NegativeDefinite,
    Indefinite,
}

/// Exact symmetric elimination deciding negative (semi)definiteness.
pub fn qp_type_check(h: &IntMatrix) -> QpVerdict {
    let n = h.rows();
    let mut a: Vec<Vec<Rat>> = (0..n)
        .map(|i| (0..n).map(|j| Rat::from_integer(h.get(i, j).clone())).collect())
        .collect();
    let mut alive: Vec<usize> = (0..n).collect();
    loop {
        if alive.iter().any(|&i| a[i][i].is_positive()) {
            return QpVerdict::Indefinite;
        }
        let Some(pos) = alive.iter().position(|&i| a[i][i].is_negative()) else {
            let zero = alive.iter().all(|&i| alive.iter().all(|&j| a[i][j].is_zero()));
            return match (zero, alive.is_empty()) {
                (false, _) => QpVerdict::Indefinite,
                (true, true) => QpVerdict::NegativeDefinite,
                (true, false) => QpVerdict::QPainleve,
            };
        };
        let p = alive.remove(pos);
        let piv = a[p][p].clone();
        for &i in &alive {
            let f = &a[i][p] / &piv;
            if f.is_zero() {
                continue;
            }
            for &j in &alive {
                let v = &a[i][j] - &f * &a[p][j];
                a[i][j] = v;
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NullRoot {
    pub c_prime: Vec<i64>,
    pub c: Vec<i64>,
    pub delta: Vec<i64>,
}

pub fn null_root(
    data: &ToricSeedData,
    fan: &Fan2D,
    bd: &BoundaryData,
) -> Result<NullRoot, ToricError> {
    let h = bd.h_matrix();
    if qp_type_check(&h) != QpVerdict::QPainleve {
        return Err(ToricError::NotQPainleveType);
    }
    let ker = h.to_rat().nullspace();
    if ker.len() != 1 {
        return Err(ToricError::NoPositiveKernelVector);
    }
    let mut v = primitive_on_ray(&ker[0]);
    if v.iter().all(|x| !x.is_positive()) {
        v = v.into_iter().map(|x| -x).collect();
    }
    if !v.iter().all(|x| x.is_positive()) {
        return Err(ToricError::NoPositiveKernelVector);
    }
    let c_prime: Vec<i64> = v.iter().map(|x| x.to_i64().expect("small")).collect();
    let mut c = Vec::with_capacity(data.len());
    for &w in &data.vectors {
        let j = fan
            .index_of(w)
            .ok_or_else(|| ToricError::InconsistentFan("vector missing from fan".into()))?;
        c.push(c_prime[j]);
    }
    let hv = h.mul_vec(&v);
    if hv.iter().any(|x| !x.is_zero()) {
        return Err(ToricError::NoPositiveKernelVector);
    }
    let sx: i64 = c.iter().zip(&data.vectors).map(|(c, w)| c * w[0]).sum();
    let sy: i64 = c.iter().zip(&data.vectors).map(|(c, w)| c * w[1]).sum();
    if sx != 0 || sy != 0 {
        return Err(ToricError::InconsistentFan("Σ c_i w_i ≠ 0".into()));
    }
    Ok(NullRoot {
        c_prime,
        delta: c.clone(),
        c,
    })
}

/// Integer basis of `K° = {a : Σ a_i w_i = 0}`, as columns.
pub fn k_circ_basis(data: &ToricSeedData) -> IntMatrix {
    integer_kernel(&data.matrix())
}

/// The pairing `C_a · C_b − a · b` on `K°`.
#[derive(Clone, Debug)]
pub struct KPairing {
    toric: IntMatrix,
    toric_kernel: Vec<Vec<Rat>>,
    ray_of: Vec<usize>,
    s: usize,
}

impl KPairing {
    pub fn new(data: &ToricSeedData, bd: &BoundaryData) -> Result<KPairing, ToricError> {
        let toric = bd.toric_matrix();
        let toric_kernel = toric.to_rat().nullspace();
        let mut ray_of = Vec::with_capacity(data.len());
        for &w in &data.vectors {
            ray_of.push(
                bd.fan
                    .index_of(w)
                    .ok_or_else(|| ToricError::InconsistentFan("vector missing from fan".into()))?,
            );
        }
        Ok(KPairing {
            toric,
            toric_kernel,
            ray_of,
            s: bd.fan.len(),
        })
    }

    fn target(&self, a: &[BigInt]) -> Vec<Rat> {
        let mut t = vec![Rat::zero(); self.s];
        for (i, x) in a.iter().enumerate() {
            t[self.ray_of[i]] += Rat::from_integer(x.clone());
        }
        t
    }

    /// Coefficients of `C_a` in the `D̄'_j`.
    pub fn curve_class(&self, a: &[BigInt]) -> Result<Vec<Rat>, ToricError> {
        let t = self.target(a);
        for k in &self.toric_kernel {
            let d: Rat = k.iter().zip(&t).map(|(x, y)| x * y).sum();
            if !d.is_zero() {
                return Err(ToricError::SingularSystem);
            }
        }
        self.toric
            .to_rat()
            .solve(&t)
            .ok_or(ToricError::SingularSystem)
    }

    pub fn pair(&self, a: &[BigInt], b: &[BigInt]) -> Result<BigInt, ToricError> {
        let x = self.curve_class(a)?;
        let tb = self.target(b);
        let cc: Rat = x.iter().zip(&tb).map(|(p, q)| p * q).sum();
        let ab: BigInt = a.iter().zip(b).map(|(p, q)| p * q).sum();
        let v = cc - Rat::from_integer(ab);
        if !v.is_integer() {
            return Err(ToricError::SingularSystem);
        }
        Ok(v.to_integer())
    }

    pub fn gram(&self, vecs: &[Vec<BigInt>]) -> Result<IntMatrix, ToricError> {
        let n = vecs.len();
        let mut g = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let v = self.pair(&vecs[i], &vecs[j])?;
                g.set(i, j, v.clone());
                g.set(j, i, v);
            }
        }
        Ok(g)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KForm {
    pub basis: IntMatrix,
    pub gram: IntMatrix,
}

pub fn k_form(data: &ToricSeedData, bd: &BoundaryData) -> Result<KForm, ToricError> {
    let basis = k_circ_basis(data);
    let pairing = KPairing::new(data, bd)?;
    let cols: Vec<Vec<BigInt>> = (0..basis.cols()).map(|c| basis.col(c)).collect();
    let gram = pairing.gram(&cols)?;
    Ok(KForm { basis, gram })
}

/// The ten types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TypeLabel {
    E8,
    E7,
    E6,
    E5,
    E4,
    E3,
    E2,
    E1,
    E1Prime,
    E0,
}

impl TypeLabel {
    pub const ALL: [TypeLabel; 10] = [
        TypeLabel::E8,
        TypeLabel::E7,
        TypeLabel::E6,
        TypeLabel::E5,
        TypeLabel::E4,
        TypeLabel::E3,
        TypeLabel::E2,
        TypeLabel::E1,
        TypeLabel::E1Prime,
        TypeLabel::E0,
    ];

    /// Short name used on the command line, e.g. `e1p`.
    pub fn key(self) -> &'static str {
        match self {
            TypeLabel::E8 => "e8",
            TypeLabel::E7 => "e7",
            TypeLabel::E6 => "e6",
            TypeLabel::E5 => "e5",
            TypeLabel::E4 => "e4",
            TypeLabel::E3 => "e3",
            TypeLabel::E2 => "e2",
            TypeLabel::E1 => "e1",
            TypeLabel::E1Prime => "e1p",
            TypeLabel::E0 => "e0",
        }
    }

    /// Rank of `K°/Zδ` and `|det|` of its Gram matrix.
    pub fn invariants(self) -> (usize, i64) {
        match self {
            TypeLabel::E8 => (8, 1),
            TypeLabel::E7 => (7, 2),
            TypeLabel::E6 => (6, 3),
            TypeLabel::E5 => (5, 4),
            TypeLabel::E4 => (4, 5),
            TypeLabel::E3 => (3, 6),
            TypeLabel::E2 => (2, 7),
            TypeLabel::E1 => (1, 8),
            TypeLabel::E1Prime => (1, 2),
            TypeLabel::E0 => (0, 1),
        }
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TypeLabel::E8 => "E8(1)",
            TypeLabel::E7 => "E7(1)",
            TypeLabel::E6 => "E6(1)",
            TypeLabel::E5 => "E5(1)",
            TypeLabel::E4 => "E4(1)",
            TypeLabel::E3 => "E3(1)",
            TypeLabel::E2 => "E2(1)",
            TypeLabel::E1 => "E1(1)",
            TypeLabel::E1Prime => "E1(1)'",
            TypeLabel::E0 => "E0(1)",
        };
        f.write_str(s)
    }
}

impl FromStr for TypeLabel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().to_ascii_lowercase().replace("(1)", "");
        let t = t.replace('\'', "p").replace("prime", "p");
        TypeLabel::ALL
            .into_iter()
            .find(|l| l.key() == t)
            .ok_or_else(|| format!("unknown type label {s}"))
    }
}

/// Gram matrix of `K°/Zδ` on a complement of `δ`.
pub fn quotient_gram(kf: &KForm, delta: &[i64]) -> Result<IntMatrix, ToricError> {
    let r = kf.basis.cols();
    let d: Vec<Rat> = delta.iter().map(|&x| rat(x)).collect();
    let y = kf
        .basis
        .to_rat()
        .solve(&d)
        .filter(|y| y.iter().all(|x| x.is_integer()) && kf.basis.to_rat().mul_vec(y) == d)
        .ok_or_else(|| ToricError::InconsistentFan("δ is not in K°".into()))?;
    let y = primitive_on_ray(&y);
    let u = complete_to_unimodular(&y)
        .ok_or_else(|| ToricError::InconsistentFan("δ is not primitive in K°".into()))?;
    let g = u.transpose().mul(&kf.gram).mul(&u);
    for i in 0..r {
        if !g.get(0, i).is_zero() {
            return Err(ToricError::InconsistentFan("δ is not in the radical".into()));
        }
    }
    Ok(IntMatrix::from_fn(r - 1, r - 1, |i, j| g.get(i + 1, j + 1).clone()))
}

/// Everything computed for one dataset.
#[derive(Clone, Debug)]
pub struct ToricAnalysis {
    pub fan: Fan2D,
    pub boundary: BoundaryData,
    pub null_root: NullRoot,
    pub kform: KForm,
    pub quotient_gram: IntMatrix,
}

pub fn analyze(data: &ToricSeedData, extra_subdivision: bool) -> Result<ToricAnalysis, ToricError> {
    let mut fan = smooth_complete_fan(data).map_err(|e| match e {
        ToricError::NotPositivelySpanning => ToricError::NotQPainleveType,
        e => e,
    })?;
    if extra_subdivision {
        fan = fan.star_subdivide(0);
    }
    let boundary = boundary_data(data, &fan)?;
    let nr = null_root(data, &fan, &boundary)?;
    let kform = k_form(data, &boundary)?;
    let qg = quotient_gram(&kform, &nr.delta)?;
    Ok(ToricAnalysis {
        fan,
        boundary,
        null_root: nr,
        kform,
        quotient_gram: qg,
    })
}

pub fn classify_type(data: &ToricSeedData) -> Result<TypeLabel, ToricError> {
    let a = analyze(data, false)?;
    classify_quotient(&a.quotient_gram)
}

pub fn classify_quotient(qg: &IntMatrix) -> Result<TypeLabel, ToricError> {
    let rank = qg.rows();
    let det = if rank == 0 { BigInt::one() } else { qg.det().abs() };
    let found = TypeLabel::ALL.into_iter().find(|l| {
        let (r, d) = l.invariants();
        r == rank && BigInt::from(d) == det
    });
    found.ok_or_else(|| {
        ToricError::UnrecognizedInvariants(format!("quotient rank {rank}, |det| {det}"))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(v: &[V2]) -> ToricSeedData {
        ToricSeedData::new(v.to_vec())
    }

    #[test]
    fn e0_exchange_matrix() {
        let (_, s) = seed_from_vectors(&d(&[[-1, 2], [-1, -1], [2, -1]])).unwrap();
        assert_eq!(
            s.exchange_matrix().to_rows_i64(),
            vec![vec![0, 3, -3], vec![-3, 0, 3], vec![3, -3, 0]]
        );
        let (_, s) = seed_from_vectors(&d(&[[1, 0], [0, 1]])).unwrap();
        assert_eq!(s.exchange_matrix().to_rows_i64(), vec![vec![0, 1], vec![-1, 0]]);
        assert_eq!(
            seed_from_vectors(&d(&[[2, 0], [0, 1]])).unwrap_err(),
            ToricError::NotPrimitive(1)
        );
    }

    #[test]
    fn fans() {
        let sq = d(&[[0, 1], [-1, 0], [0, -1], [1, 0]]);
        assert_eq!(smooth_complete_fan(&sq).unwrap().rays, sq.vectors);
        let p2 = d(&[[1, 0], [0, 1], [-1, -1]]);
        assert_eq!(smooth_complete_fan(&p2).unwrap().rays, p2.vectors);
        let e0 = smooth_complete_fan(&d(&[[-1, 2], [-1, -1], [2, -1]])).unwrap();
        assert_eq!(
            e0.rays,
            vec![[-1, 2], [-1, 1], [-1, 0], [-1, -1], [0, -1], [1, -1], [2, -1], [1, 0], [0, 1]]
        );
        assert_eq!(
            smooth_complete_fan(&d(&[[1, 0], [0, 1]])).unwrap_err(),
            ToricError::NotPositivelySpanning
        );
    }

    #[test]
    fn boundary_examples() {
        let p2 = d(&[[1, 0], [0, 1], [-1, -1]]);
        let fan = smooth_complete_fan(&p2).unwrap();
        let mut bd = boundary_data(&p2, &fan).unwrap();
        assert_eq!(bd.self_int, vec![1, 1, 1]);
        bd.mult = vec![0, 0, 0];
        assert_eq!(bd.toric_matrix().to_rows_i64(), vec![vec![1; 3]; 3]);
        let e5 = d(&[[0, 1], [0, 1], [-1, 0], [-1, 0], [0, -1], [0, -1], [1, 0], [1, 0]]);
        let fan = smooth_complete_fan(&e5).unwrap();
        let bd = boundary_data(&e5, &fan).unwrap();
        assert_eq!(bd.h[0], vec![-2, 1, 0, 1]);
        assert_eq!(bd.h[2], vec![0, 1, -2, 1]);
    }

    #[test]
    fn qp_verdicts() {
        let m = |r: Vec<Vec<i64>>| IntMatrix::from_rows_i64(&r);
        let a2 = m(vec![vec![-2, 1, 1], vec![1, -2, 1], vec![1, 1, -2]]);
        assert_eq!(qp_type_check(&a2), QpVerdict::QPainleve);
        assert_eq!(qp_type_check(&IntMatrix::identity(3).neg()), QpVerdict::NegativeDefinite);
        assert_eq!(qp_type_check(&m(vec![vec![1]])), QpVerdict::Indefinite);
        assert_eq!(qp_type_check(&m(vec![vec![0, 1], vec![1, 0]])), QpVerdict::Indefinite);
    }

    #[test]
    fn e7_null_root() {
        let mut v = vec![[0, 1]; 4];
        v.push([-1, 0]);
        v.extend([[0, -1]; 2]);
        v.extend([[1, 0]; 3]);
        let a = analyze(&d(&v), false).unwrap();
        assert_eq!(a.null_root.delta, vec![1, 1, 1, 1, 3, 2, 2, 1, 1, 1]);
        assert_eq!(a.kform.basis.cols(), 8);
        assert_eq!(classify_quotient(&a.quotient_gram).unwrap(), TypeLabel::E7);
    }

    #[test]
    fn e5_and_e1_norms() {
        let e5 = d(&[[0, 1], [0, 1], [-1, 0], [-1, 0], [0, -1], [0, -1], [1, 0], [1, 0]]);
        let fan = smooth_complete_fan(&e5).unwrap();
        let bd = boundary_data(&e5, &fan).unwrap();
        let p = KPairing::new(&e5, &bd).unwrap();
        let a0: Vec<BigInt> = [-1, 1, 0, 0, 0, 0, 0, 0].iter().map(|&x| BigInt::from(x)).collect();
        assert!(p.curve_class(&a0).unwrap().iter().all(|x| x.is_zero()));
        assert_eq!(p.pair(&a0, &a0).unwrap(), BigInt::from(-2));
        let e1 = d(&[[-1, 2], [-1, -1], [1, -1], [1, 0]]);
        let fan = smooth_complete_fan(&e1).unwrap();
        let bd = boundary_data(&e1, &fan).unwrap();
        let p = KPairing::new(&e1, &bd).unwrap();
        let a: Vec<BigInt> = [1, 0, 2, -1].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(p.pair(&a, &a).unwrap(), BigInt::from(-8));
    }

    #[test]
    fn labels_round_trip() {
        for l in TypeLabel::ALL {
            assert_eq!(l.to_string().parse::<TypeLabel>().unwrap(), l);
            assert_eq!(l.key().parse::<TypeLabel>().unwrap(), l);
        }
    }
}
