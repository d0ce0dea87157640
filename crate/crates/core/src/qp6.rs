//! The sixth q-Painlevé system on the `E5(1)` seed, as the alternating action
//! of two involutive cluster transformations `c1`, `c2`.

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog::{catalog_entry, CatalogEntry, CatalogError, Check, ExpectedAction, GeneratorDef, Report, Status};
use crate::lattice::{ClusterWord, LatticeError, Transformation};
use crate::linalg::{Rat, RatMatrix};
use crate::notation::to_bigint;
use crate::symbolic::fastpath::evaluate_steps;
use crate::symbolic::{
    evaluate_word_with, triviality, EvalOptions, RationalFn, SymbolicError, XMap,
};
use crate::toric::TypeLabel;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Qp6Error {
    #[error("lattice validation failed: {0}")]
    LatticeValidationFailed(String),
    #[error("non-generic parameters: {0}")]
    NonGenericParameters(String),
    #[error("pole at step {0}")]
    PoleAtPoint(usize),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Symbolic(#[from] SymbolicError),
}

impl From<LatticeError> for Qp6Error {
    fn from(e: LatticeError) -> Self {
        Qp6Error::LatticeValidationFailed(e.to_string())
    }
}

/// Number of basis characters: `a_i^{1/4}` for `i = 0..5`, then `f`, `g`.
pub const NVARS: usize = 8;
pub const F: usize = 6;
pub const G: usize = 7;

/// Exponent vectors in the basis of `N`.
#[derive(Clone, Debug)]
pub struct Characters {
    pub a: Vec<Vec<i64>>,
    pub f: Vec<i64>,
    pub g: Vec<i64>,
    pub q: Vec<i64>,
    /// `X_i = z^{e_i}`.
    pub x: Vec<Vec<i64>>,
    pub b: Vec<Vec<i64>>,
}

#[derive(Clone, Debug)]
pub struct Qp6Context {
    /// The `E5(1)` entry re-based on the finer lattice, with `i3` added.
    pub entry: CatalogEntry,
    pub chars: Characters,
    pub c1: ClusterWord,
    pub c2: ClusterWord,
}

fn unit(j: usize, k: i64) -> Vec<i64> {
    let mut v = vec![0; NVARS];
    v[j] = k;
    v
}

fn add(a: &[i64], b: &[i64], k: i64) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + k * y).collect()
}

fn tokens(s: &str) -> Vec<String> {
    s.split_whitespace().map(str::to_string).collect()
}

/// Which involution is applied first in the alternating dynamics.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Order {
    C1First,
    C2First,
}

impl std::str::FromStr for Order {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "c1-first" => Ok(Order::C1First),
            "c2-first" => Ok(Order::C2First),
            _ => Err(format!("unknown order {s:?}")),
        }
    }
}

pub fn build_qp6_context() -> Result<Qp6Context, Qp6Error> {
    let mut entry = catalog_entry(TypeLabel::E5)?;
    let n = entry.rank();
    let quarter = |v: &[i64]| -> Vec<Rat> { v.iter().map(|&x| Rat::new(x.into(), 4.into())).collect() };
    let mut cols: Vec<Vec<Rat>> = entry.roots.iter().map(|r| quarter(r)).collect();
    cols.push(quarter(&[1, 1, 0, 0, -1, -1, 0, 0]));
    cols.push(quarter(&[0, 0, 1, 1, 0, 0, -1, -1]));
    let basis = RatMatrix::from_cols(&cols);
    let fixed = entry.seed.fixed().with_n_basis(basis)?;
    entry.seed = fixed.initial_seed();
    entry.generators.push(GeneratorDef {
        name: "i3".into(),
        notation: "-(3,7)(4,8)".into(),
        sigma: None,
        action: ExpectedAction::Roots {
            sign: -1,
            images: Vec::new(),
        },
    });
    for g in &entry.generators {
        let w = entry.generator_word(&g.name)?;
        if w.target()? != entry.seed {
            return Err(Qp6Error::LatticeValidationFailed(format!(
                "{} is not an automorphism on the finer lattice",
                g.name
            )));
        }
    }

    let x: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let e = unit_big(n, i);
            fixed
                .to_character_coords(&e)
                .iter()
                .map(|c| c.to_i64().expect("small"))
                .collect()
        })
        .collect();
    let a: Vec<Vec<i64>> = (0..6).map(|i| unit(i, 4)).collect();
    let f = unit(F, 1);
    let g = unit(G, 1);
    let q: Vec<i64> = fixed
        .to_character_coords(&to_bigint(&entry.delta))
        .iter()
        .map(|c| c.to_i64().expect("small"))
        .collect();
    let b = vec![
        add(&f, &x[0], -1),
        add(&f, &x[1], -1),
        add(&g, &x[2], -1),
        add(&g, &x[3], -1),
        add(&f, &x[4], 1),
        add(&f, &x[5], 1),
        add(&g, &x[6], 1),
        add(&g, &x[7], 1),
    ];
    let c1 = entry.word_of(&tokens("i3 s0 s1 s4 s5 s3 s4 s5 s3"))?;
    let c2 = entry.word_of(&tokens("i1 s4 s5 s0 s1 s2 s0 s1 s2"))?;
    Ok(Qp6Context {
        entry,
        chars: Characters { a, f, g, q, x, b },
        c1,
        c2,
    })
}

fn unit_big(n: usize, i: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); n];
    v[i] = BigInt::one();
    v
}

/// Printed quarter-root monomials of `b_1..b_8` in `a_0..a_5`, times four.
pub const B_PRINTED: [[i64; 6]; 8] = [
    [1, -1, -2, 0, 0, 0],
    [-3, -1, -2, 0, 0, 0],
    [0, 0, 0, -2, 1, -1],
    [0, 0, 0, -2, -3, -1],
    [1, -1, 2, 0, 0, 0],
    [1, 3, 2, 0, 0, 0],
    [0, 0, 0, 2, 1, -1],
    [0, 0, 0, 2, 1, 3],
];

/// `q` as a product of the `a_i`, with `a_3` squared.
pub const Q_IN_A: [i64; 6] = [1, 1, 2, 2, 1, 1];

pub fn qp6_maps(ctx: &Qp6Context, opts: &EvalOptions) -> Result<(XMap, XMap), Qp6Error> {
    Ok((
        evaluate_word_with(&ctx.c1, opts)?,
        evaluate_word_with(&ctx.c2, opts)?,
    ))
}

fn mono(e: &[i64]) -> RationalFn {
    RationalFn::monomial(e.iter().map(|&x| x as i32).collect())
}

/// `(right-hand side of f·f̄, right-hand side of g·g̲)`.
pub fn identity_rhs(ch: &Characters) -> Result<(RationalFn, RationalFn), Qp6Error> {
    let b = |i: usize| mono(&ch.b[i - 1]);
    let (f, g) = (mono(&ch.f), mono(&ch.g));
    let rf = b(7)
        .mul(&b(8))
        .mul(&g.add(&b(3)))
        .mul(&g.add(&b(4)))
        .div(&g.add(&b(7)).mul(&g.add(&b(8))))?;
    let rg = b(1)
        .mul(&b(2))
        .mul(&f.add(&b(5)))
        .mul(&f.add(&b(6)))
        .div(&f.add(&b(1)).mul(&f.add(&b(2))))?;
    Ok((rf, rg))
}

fn check_pullback(m: &XMap, src: &[i64], want: &[i64]) -> Result<(), String> {
    let p = m.pullback_monomial(src);
    if p.is_unit_monomial(want) {
        Ok(())
    } else {
        Err(format!("z^{src:?} -> {}", m.pullback_ratfn(&mono(src))))
    }
}

pub fn verify_qp6_identities(ctx: &Qp6Context, opts: &EvalOptions) -> Report {
    let mut rep = Report::new("qP6");
    let ch = &ctx.chars;
    let mut push = |name: &str, r: Result<(), String>, t: Instant| {
        rep.checks.push(match r {
            Ok(()) => Check {
                check: name.into(),
                status: Status::Pass,
                witness: None,
                millis: t.elapsed().as_millis(),
            },
            Err(w) => Check {
                check: name.into(),
                status: Status::Fail,
                witness: Some(w),
                millis: t.elapsed().as_millis(),
            },
        });
    };

    let t = Instant::now();
    let r = (|| -> Result<(), String> {
        let w = ctx
            .entry
            .word_of(&tokens("i2 i1 i2 i3^-1"))
            .map_err(|e| e.to_string())?;
        match triviality(&w, opts).map_err(|e| e.to_string())?.is_trivial() {
            true => Ok(()),
            false => Err("i2 i1 i2 differs from i3".into()),
        }
    })();
    push("i3 = i2 i1 i2", r, t);

    for (name, w) in [("c1", &ctx.c1), ("c2", &ctx.c2)] {
        let t = Instant::now();
        let r = triviality(&w.power(2), opts)
            .map_err(|e| e.to_string())
            .and_then(|v| v.is_trivial().then_some(()).ok_or(format!("{v:?}")));
        push(&format!("{name}^2 trivial"), r, t);
    }

    let t = Instant::now();
    let r = (|| -> Result<(), String> {
        let q: Vec<i64> = (0..6).fold(vec![0; NVARS], |acc, i| add(&acc, &ch.a[i], Q_IN_A[i]));
        if q != ch.q {
            return Err(format!("z^delta = {:?}, product of a_i = {q:?}", ch.q));
        }
        for (i, row) in B_PRINTED.iter().enumerate() {
            let mut want = vec![0; NVARS];
            want[..6].copy_from_slice(row);
            if ch.b[i] != want {
                return Err(format!("b_{} = {:?} printed {want:?}", i + 1, ch.b[i]));
            }
        }
        Ok(())
    })();
    push("q and b_i monomials", r, t);

    let t = Instant::now();
    let maps = qp6_maps(ctx, opts);
    let (m1, m2) = match maps {
        Ok(m) => m,
        Err(e) => {
            push("pullbacks", Err(e.to_string()), t);
            return rep;
        }
    };
    let qinv: Vec<i64> = ch.q.iter().map(|x| -x).collect();
    let r = (|| -> Result<(), String> {
        for (m, moved, fixed_fg) in [(&m1, 2usize, &ch.g), (&m2, 3usize, &ch.f)] {
            for i in 0..6 {
                let want = if i == moved { add(&ch.a[i], &ch.q, -1) } else { ch.a[i].clone() };
                check_pullback(m, &ch.a[i], &want)?;
            }
            check_pullback(m, &ch.q, &qinv)?;
            check_pullback(m, fixed_fg, fixed_fg)?;
        }
        Ok(())
    })();
    push("pullbacks of a_i, q, f, g", r, t);

    let t = Instant::now();
    let rhs = identity_rhs(ch);
    let r = rhs.as_ref().map_err(|e| e.to_string()).and_then(|(rf, rg)| {
        let fbar = m1.image(F);
        let gbar = m2.image(G);
        let lf = mono(&ch.f).mul(&fbar);
        let lg = mono(&ch.g).mul(&gbar);
        if !lf.equals(rf) {
            return Err(format!("f fbar = {lf}"));
        }
        if !lg.equals(rg) {
            return Err(format!("g gbar = {lg}"));
        }
        Ok(())
    });
    push("f fbar and g gbar identities", r, t);

    let t = Instant::now();
    let r = rhs.map_err(|e| e.to_string()).and_then(|(rf, rg)| {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let fbar = m1.image(F);
        let gbar = m2.image(G);
        for k in 0..20 {
            let p: Vec<Rat> = (0..NVARS)
                .map(|_| Rat::new(rng.gen_range(1..40i64).into(), rng.gen_range(1..40i64).into()))
                .collect();
            let ev = |r: &RationalFn| r.eval(&p).map_err(|e| e.to_string());
            let lf = &p[F] * ev(&fbar)?;
            let lg = &p[G] * ev(&gbar)?;
            if lf != ev(&rf)? || lg != ev(&rg)? {
                return Err(format!("mismatch at point {k}"));
            }
        }
        Ok(())
    });
    push("identities at 20 rational points", r, t);
    rep
}

/// Initial values: quarter roots of `a_0..a_5`, then `f`, `g`.
#[derive(Clone, Debug, PartialEq)]
pub struct Qp6Params {
    pub a_quarter: Vec<Rat>,
    pub f: Rat,
    pub g: Rat,
}

/// Input accepted on the command line: exact quarter roots or float `a_i`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Qp6ParamsJson {
    #[serde(default)]
    pub a_quarter: Option<Vec<String>>,
    #[serde(default)]
    pub a: Option<Vec<f64>>,
    pub f: serde_json::Value,
    pub g: serde_json::Value,
}

fn parse_rat(v: &serde_json::Value) -> Result<Rat, Qp6Error> {
    let bad = || Qp6Error::NonGenericParameters(format!("bad number {v}"));
    match v {
        serde_json::Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Rat::from_integer(i.into()))
            } else {
                Rat::from_float(n.as_f64().ok_or_else(bad)?).ok_or_else(bad)
            }
        }
        serde_json::Value::String(s) => s.trim().parse::<Rat>().map_err(|_| bad()),
        _ => Err(bad()),
    }
}

impl Qp6ParamsJson {
    pub fn resolve(&self) -> Result<Qp6Params, Qp6Error> {
        let (f, g) = (parse_rat(&self.f)?, parse_rat(&self.g)?);
        let a_quarter = match (&self.a_quarter, &self.a) {
            (Some(u), _) => u
                .iter()
                .map(|s| parse_rat(&serde_json::Value::String(s.clone())))
                .collect::<Result<Vec<_>, _>>()?,
            (None, Some(a)) => a
                .iter()
                .map(|&x| {
                    if x <= 0.0 {
                        return Err(Qp6Error::NonGenericParameters(format!("a = {x} must be positive")));
                    }
                    Rat::from_float(x.powf(0.25))
                        .ok_or_else(|| Qp6Error::NonGenericParameters(format!("a = {x}")))
                })
                .collect::<Result<Vec<_>, _>>()?,
            (None, None) => {
                return Err(Qp6Error::NonGenericParameters("give a_quarter or a".into()))
            }
        };
        let p = Qp6Params { a_quarter, f, g };
        p.validate()?;
        Ok(p)
    }
}

impl Qp6Params {
    pub fn validate(&self) -> Result<(), Qp6Error> {
        if self.a_quarter.len() != 6 {
            return Err(Qp6Error::NonGenericParameters("need six a_i".into()));
        }
        if self.point().iter().any(Zero::is_zero) {
            return Err(Qp6Error::NonGenericParameters("zero coordinate".into()));
        }
        let q: Rat = self
            .a_quarter
            .iter()
            .zip(Q_IN_A)
            .map(|(u, k)| num_traits::pow(u.clone(), 4 * k as usize))
            .product();
        if q.is_one() {
            return Err(Qp6Error::NonGenericParameters("q = 1".into()));
        }
        Ok(())
    }

    pub fn point(&self) -> Vec<Rat> {
        let mut p = self.a_quarter.clone();
        p.push(self.f.clone());
        p.push(self.g.clone());
        p
    }

    /// Pseudo-random positive rational parameters.
    pub fn random(seed: u64) -> Qp6Params {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut near_one = || {
            let d: i64 = rng.gen_range(7..13);
            Rat::new((d + rng.gen_range(-1..=1i64)).into(), d.into())
        };
        let a_quarter = (0..6).map(|_| near_one()).collect();
        let mut r = || Rat::new(rng.gen_range(1..10i64).into(), rng.gen_range(1..10i64).into());
        let (f, g) = (r(), r());
        Qp6Params { a_quarter, f, g }
    }
}

/// One row of a trajectory.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OrbitPoint {
    pub step: usize,
    pub map: &'static str,
    pub a: [f64; 6],
    pub f: f64,
    pub g: f64,
    pub q: f64,
    /// Raw coordinates: quarter roots of the `a_i`, then `f`, `g`.
    #[serde(skip)]
    pub vars: Vec<f64>,
}

impl OrbitPoint {
    fn from_values(step: usize, map: &'static str, v: &[f64]) -> OrbitPoint {
        let a: [f64; 6] = std::array::from_fn(|i| v[i].powi(4));
        let q: f64 = a.iter().zip(Q_IN_A).map(|(x, k)| x.powi(k as i32)).product();
        OrbitPoint {
            step,
            map,
            a,
            f: v[F],
            g: v[G],
            q,
            vars: v.to_vec(),
        }
    }

    pub fn csv_header() -> &'static str {
        "step,map,a0,a1,a2,a3,a4,a5,f,g,q"
    }

    pub fn csv_row(&self) -> String {
        let a: Vec<String> = self.a.iter().map(|x| format!("{x:e}")).collect();
        format!(
            "{},{},{},{:e},{:e},{:e}",
            self.step,
            self.map,
            a.join(","),
            self.f,
            self.g,
            self.q
        )
    }
}

fn schedule(order: Order, steps: usize) -> impl Iterator<Item = usize> {
    let first = match order {
        Order::C1First => 0,
        Order::C2First => 1,
    };
    (0..steps).map(move |k| (first + k) % 2)
}

const NAMES: [&str; 2] = ["c1", "c2"];

/// Float trajectory, one mutation or isomorphism at a time.
pub fn qp6_orbit(
    ctx: &Qp6Context,
    params: &Qp6Params,
    steps: usize,
    order: Order,
) -> Result<Vec<OrbitPoint>, Qp6Error> {
    params.validate()?;
    let words: [Vec<Transformation>; 2] = [
        ctx.c1.resolve().map_err(CatalogError::from)?,
        ctx.c2.resolve().map_err(CatalogError::from)?,
    ];
    let mut v: Vec<f64> = params.point().iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect();
    let mut out = vec![OrbitPoint::from_values(0, "", &v)];
    for (k, which) in schedule(order, steps).enumerate() {
        v = evaluate_steps(&words[which], &v).ok_or(Qp6Error::PoleAtPoint(k + 1))?;
        if v.iter().any(|x| !x.is_finite()) {
            return Err(Qp6Error::PoleAtPoint(k + 1));
        }
        out.push(OrbitPoint::from_values(k + 1, NAMES[which], &v));
    }
    Ok(out)
}

/// Exact trajectory of the basis characters, evaluating the composed symbolic maps.
pub fn qp6_orbit_exact(
    maps: &(XMap, XMap),
    params: &Qp6Params,
    steps: usize,
    order: Order,
) -> Result<Vec<Vec<Rat>>, Qp6Error> {
    params.validate()?;
    let images = [maps.0.images(), maps.1.images()];
    let mut v = params.point();
    let mut out = vec![v.clone()];
    for (k, which) in schedule(order, steps).enumerate() {
        v = images[which]
            .iter()
            .map(|r| r.eval(&v))
            .collect::<Result<Vec<Rat>, _>>()
            .map_err(|_| Qp6Error::PoleAtPoint(k + 1))?;
        if v.iter().any(Zero::is_zero) {
            return Err(Qp6Error::PoleAtPoint(k + 1));
        }
        out.push(v.clone());
    }
    Ok(out)
}

fn rel_err(p: &OrbitPoint, exact: &[Rat]) -> f64 {
    let v: Vec<f64> = exact.iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect();
    let ex = OrbitPoint::from_values(p.step, p.map, &v);
    let pairs = p
        .a
        .iter()
        .zip(&ex.a)
        .chain([(&p.f, &ex.f), (&p.g, &ex.g), (&p.q, &ex.q)]);
    let mut worst: f64 = 0.0;
    for (x, y) in pairs {
        let rel = (x - y).abs() / y.abs().max(f64::MIN_POSITIVE);
        worst = worst.max(if rel.is_nan() { f64::INFINITY } else { rel });
    }
    worst
}

/// Largest relative difference between the float and exact trajectories.
pub fn orbit_agreement(float: &[OrbitPoint], exact: &[Vec<Rat>]) -> f64 {
    float
        .iter()
        .zip(exact)
        .map(|(p, e)| rel_err(p, e))
        .fold(0.0, f64::max)
}

/// Per-step errors of a float trajectory: each float state, read as an exact
/// dyadic rational, is pushed through the composed symbolic map and compared
/// with the next float state.
pub fn orbit_step_errors(
    maps: &(XMap, XMap),
    float: &[OrbitPoint],
) -> Result<Vec<f64>, Qp6Error> {
    let images = [maps.0.images(), maps.1.images()];
    let mut out = Vec::with_capacity(float.len().saturating_sub(1));
    for w in float.windows(2) {
        let which = NAMES.iter().position(|n| *n == w[1].map).expect("step label");
        let x: Vec<Rat> = w[0]
            .vars
            .iter()
            .map(|&v| Rat::from_float(v).ok_or(Qp6Error::PoleAtPoint(w[1].step)))
            .collect::<Result<_, _>>()?;
        let y: Vec<Rat> = images[which]
            .iter()
            .map(|r| r.eval(&x))
            .collect::<Result<_, _>>()
            .map_err(|_| Qp6Error::PoleAtPoint(w[1].step))?;
        out.push(rel_err(&w[1], &y));
    }
    Ok(out)
}

/// Bits in the largest numerator or denominator along an exact trajectory.
pub fn max_height_bits(exact: &[Vec<Rat>]) -> u64 {
    exact
        .iter()
        .flatten()
        .map(|x| x.numer().abs().bits().max(x.denom().bits()))
        .max()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn context_builds() {
        let ctx = build_qp6_context().unwrap();
        assert_eq!(ctx.chars.q, vec![4, 4, 8, 8, 4, 4, 0, 0]);
        assert_eq!(ctx.chars.b[4][..6], [1, -1, 2, 0, 0, 0]);
        for x in &ctx.chars.x {
            assert_eq!(x.len(), NVARS);
        }
    }

    #[test]
    fn identities() {
        let ctx = build_qp6_context().unwrap();
        let rep = verify_qp6_identities(&ctx, &EvalOptions::default());
        assert!(rep.passed(), "{rep}");
    }

    #[test]
    fn zero_steps_and_one_c1_step() {
        let ctx = build_qp6_context().unwrap();
        let p = Qp6Params::random(1);
        let o = qp6_orbit(&ctx, &p, 0, Order::C1First).unwrap();
        assert_eq!(o.len(), 1);
        let o = qp6_orbit(&ctx, &p, 1, Order::C1First).unwrap();
        assert!((o[1].q * o[0].q - 1.0).abs() < 1e-12);
        assert_eq!(o[1].a[0], o[0].a[0]);
        assert!((o[1].a[2] * o[0].q / o[0].a[2] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn short_exact_orbit_agrees() {
        let ctx = build_qp6_context().unwrap();
        let maps = qp6_maps(&ctx, &EvalOptions::default()).unwrap();
        let p = Qp6Params::random(5);
        for order in [Order::C1First, Order::C2First] {
            let f = qp6_orbit(&ctx, &p, 8, order).unwrap();
            let e = qp6_orbit_exact(&maps, &p, 8, order).unwrap();
            assert!(orbit_agreement(&f, &e) < 1e-11);
            let steps = orbit_step_errors(&maps, &f).unwrap();
            assert_eq!(steps.len(), 8);
            assert!(steps.iter().all(|&x| x < 1e-12));
        }
    }

    #[test]
    fn rejects_non_generic() {
        let mut p = Qp6Params::random(1);
        p.a_quarter = vec![Rat::one(); 6];
        assert!(matches!(p.validate(), Err(Qp6Error::NonGenericParameters(_))));
        let j = Qp6ParamsJson {
            a_quarter: Some(vec!["1/2".into(); 6]),
            a: None,
            f: serde_json::json!(0),
            g: serde_json::json!("3/4"),
        };
        assert!(j.resolve().is_err());
    }
}

