//! Multivariate gcd over the integers.
//!
//! Recursive primitive remainder sequences, with a modular test that proves
//! coprimality cheaply in the common case.

use num_integer::Integer;
use num_traits::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::poly::LaurentPoly;
use super::scalar::{Fp, Scalar, PRIME};

/// Normalized gcd in the Laurent ring: no monomial content, positive
/// leading coefficient, integer content equal to the gcd of the contents.
pub fn gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return normalize_keep_content(b);
    }
    if b.is_zero() {
        return normalize_keep_content(a);
    }
    let (ca, _, pa) = a.split_unit();
    let (cb, _, pb) = b.split_unit();
    let c = ca.gcd(&cb);
    gcd_primitive(&pa, &pb).scale(&c)
}

fn normalize_keep_content(a: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return a.clone();
    }
    let (c, _, q) = a.split_unit();
    q.scale(&c.abs())
}

/// Gcd of two normalized polynomials (see [`LaurentPoly::split_unit`]).
pub fn gcd_primitive(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let n = a.nvars();
    if a.is_constant() || b.is_constant() {
        return LaurentPoly::one(n);
    }
    if a == b {
        return a.clone();
    }
    let ua = a.vars_used();
    let ub = b.vars_used();
    if !(0..n).any(|i| ua[i] && ub[i]) {
        return LaurentPoly::one(n);
    }
    let common: Vec<usize> = (0..n).filter(|&i| ua[i] && ub[i]).collect();
    if modular_coprime(a, b, &common) {
        return LaurentPoly::one(n);
    }
    // A variable used by only one side cannot occur in the gcd.
    if let Some(x) = (0..n).find(|&i| ua[i] != ub[i]) {
        let (with, without) = if ua[x] { (a, b) } else { (b, a) };
        let mut g = without.clone();
        for c in with.coeffs_in(x).into_values() {
            g = gcd_primitive(&c.normalized(), &g);
            if g.is_one() {
                break;
            }
        }
        return g;
    }
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    if large.exact_div(small).is_some() {
        return small.clone();
    }
    let x = *common
        .iter()
        .min_by_key(|&&i| {
            let (_, da) = a.degree_range(i);
            let (_, db) = b.degree_range(i);
            (da.max(db), i)
        })
        .unwrap();
    prs_gcd(a, b, x)
}

/// Proves `gcd(a, b) = 1` when it can; `false` means "unknown".
pub fn modular_coprime(a: &LaurentPoly, b: &LaurentPoly, vars: &[usize]) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(0x9e37_79b9 ^ ((a.len() as u64) << 20) ^ b.len() as u64);
    let n = a.nvars();
    for &x in vars {
        let point: Vec<Fp> = (0..n).map(|_| Fp(rng.gen_range(2..PRIME))).collect();
        let (Some(ia), Some(ib)) = (univariate_image(a, x, &point), univariate_image(b, x, &point))
        else {
            return false;
        };
        if uni_gcd_degree(ia, ib) != 0 {
            return false;
        }
    }
    true
}

/// Image in `F_p[x]` with the other variables specialized; `None` if the
/// leading coefficient in `x` vanishes.
fn univariate_image(a: &LaurentPoly, x: usize, point: &[Fp]) -> Option<Vec<Fp>> {
    let (lo, hi) = a.degree_range(x);
    let mut coeffs = vec![Fp(0); (hi - lo + 1) as usize];
    for (m, c) in a.terms() {
        let mut t = Fp::from_bigint(c);
        for (i, &e) in m.0.iter().enumerate() {
            if i == x || e == 0 {
                continue;
            }
            let base = if e < 0 { point[i].inv()? } else { point[i] };
            t = t.mul(&base.pow(e.unsigned_abs()));
        }
        let k = (m.0[x] - lo) as usize;
        coeffs[k] = coeffs[k].add(&t);
    }
    if coeffs.last().is_none_or(|c| c.0 == 0) {
        return None;
    }
    Some(coeffs)
}

fn uni_gcd_degree(mut a: Vec<Fp>, mut b: Vec<Fp>) -> usize {
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = uni_rem(&a, &b);
        a = b;
        b = r;
    }
    a.len().saturating_sub(1)
}

fn trim(a: &mut Vec<Fp>) {
    while a.last().is_some_and(|c| c.0 == 0) {
        a.pop();
    }
}

fn uni_rem(a: &[Fp], b: &[Fp]) -> Vec<Fp> {
    let mut r = a.to_vec();
    let inv = b.last().unwrap().inv().unwrap();
    while r.len() >= b.len() {
        let f = r.last().unwrap().mul(&inv);
        let shift = r.len() - b.len();
        for (i, c) in b.iter().enumerate() {
            r[shift + i] = r[shift + i].sub(&f.mul(c));
        }
        r.pop();
        trim(&mut r);
    }
    r
}

type Uni = Vec<LaurentPoly>;

fn to_uni(a: &LaurentPoly, x: usize) -> Uni {
    let cs = a.coeffs_in(x);
    let (lo, hi) = a.degree_range(x);
    let mut out = vec![LaurentPoly::zero(a.nvars()); (hi - lo + 1) as usize];
    for (d, c) in cs {
        out[(d - lo) as usize] = c;
    }
    out
}

fn from_uni(u: &Uni, x: usize, n: usize) -> LaurentPoly {
    let mut out = LaurentPoly::zero(n);
    for (d, c) in u.iter().enumerate() {
        let mut e = vec![0; n];
        e[x] = d as i32;
        out = out.add(&c.shift(&e));
    }
    out
}

fn uni_content(u: &Uni) -> LaurentPoly {
    let mut g = LaurentPoly::zero(u[0].nvars());
    for c in u {
        if c.is_zero() {
            continue;
        }
        g = gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn uni_primitive(u: &Uni) -> Uni {
    let c = uni_content(u);
    if c.is_one() {
        return u.clone();
    }
    u.iter()
        .map(|x| x.exact_div(&c).expect("content divides coefficients"))
        .collect()
}

fn prs_gcd(a: &LaurentPoly, b: &LaurentPoly, x: usize) -> LaurentPoly {
    let n = a.nvars();
    let ua = to_uni(a, x);
    let ub = to_uni(b, x);
    let ca = uni_content(&ua);
    let cb = uni_content(&ub);
    let content = gcd(&ca, &cb);
    let mut p = uni_primitive(&ua);
    let mut q = uni_primitive(&ub);
    if p.len() < q.len() {
        std::mem::swap(&mut p, &mut q);
    }
    while q.len() > 1 || (q.len() == 1 && !q[0].is_zero()) {
        let r = pseudo_rem(&p, &q);
        p = q;
        if r.is_empty() {
            break;
        }
        q = uni_primitive(&r);
    }
    let g = if p.len() == 1 {
        LaurentPoly::one(n)
    } else {
        from_uni(&p, x, n).normalized()
    };
    g.mul(&content).normalized()
}

fn pseudo_rem(a: &Uni, b: &Uni) -> Uni {
    let mut r: Uni = a.clone();
    let lb = b.last().unwrap().clone();
    let db = b.len() - 1;
    loop {
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
        if r.len() < b.len() {
            break;
        }
        let lr = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        for c in r.iter_mut() {
            *c = c.mul(&lb);
        }
        for (i, c) in b.iter().enumerate() {
            let t = lr.mul(c);
            r[shift + i] = r[shift + i].sub(&t);
        }
        debug_assert!(r.last().unwrap().is_zero());
        r.pop();
    }
    r
}

/// Is `a` free of integer content and monomial content with positive leading coefficient?
pub fn is_normalized(a: &LaurentPoly) -> bool {
    if a.is_zero() {
        return false;
    }
    a.content().is_one()
        && a.leading().is_some_and(|(_, c)| c.is_positive())
        && a.min_exponents().iter().all(|&e| e == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn p(nvars: usize, terms: &[(&[i32], i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(
            nvars,
            terms.iter().map(|(e, c)| (e.to_vec(), BigInt::from(*c))),
        )
    }

    #[test]
    fn gcd_of_products() {
        let f = p(3, &[(&[1, 0, 0], 1), (&[0, 1, 1], 1), (&[0, 0, 0], 1)]);
        let g = p(3, &[(&[0, 1, 0], 2), (&[0, 0, 2], -1)]);
        let h = p(3, &[(&[1, 1, 0], 1), (&[0, 0, 0], 3)]);
        let a = f.mul(&g);
        let b = f.mul(&h).shift(&[0, -2, 1]);
        assert_eq!(gcd(&a, &b), f.normalized());
        assert!(gcd(&g, &h).is_one());
    }

    #[test]
    fn gcd_with_integer_content() {
        let f = p(2, &[(&[1, 0], 1), (&[0, 1], 1)]);
        let a = f.scale(&BigInt::from(6));
        let b = f.mul(&p(2, &[(&[1, 0], 4), (&[0, 0], 2)]));
        assert_eq!(gcd(&a, &b), f.scale(&BigInt::from(2)));
    }

    #[test]
    fn gcd_needs_prs() {
        // (x + y)(x - y) and (x + y)^2 share x + y but neither divides the other
        let s = p(2, &[(&[1, 0], 1), (&[0, 1], 1)]);
        let d = p(2, &[(&[1, 0], 1), (&[0, 1], -1)]);
        let a = s.mul(&d);
        let b = s.mul(&s).mul(&p(2, &[(&[1, 1], 1), (&[0, 0], 1)]));
        assert_eq!(gcd(&a, &b), s);
    }
}
