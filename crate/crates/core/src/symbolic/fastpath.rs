//! Numeric evaluation of words, step by step.
//!
//! Modulo a 62-bit prime it is used only to reject identity claims: a word
//! whose pullback differs from the identity at some point is certainly not
//! trivial.

use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::scalar::{Fp, Scalar, PRIME};
use crate::lattice::Transformation;

pub const POINTS: usize = 3;

/// Values of the pulled-back characters `z^{b_j}` at `point`, or `None` when
/// the point hits a pole. Steps are applied one at a time, in any field.
pub fn evaluate_steps<S: Scalar>(steps: &[Transformation], point: &[S]) -> Option<Vec<S>> {
    let mut v = point.to_vec();
    for t in steps {
        v = match t {
            Transformation::Mutation { source, step, .. } => {
                let fixed = source.fixed();
                let ek = source.e(step.k);
                let w = fixed.to_character_coords(&ek);
                let d = fixed.pair_with_characters(&ek)?;
                let s = step.sign.as_i64();
                let mut m = S::one();
                for (vj, wj) in v.iter().zip(&w) {
                    m = m.mul(&vj.powi(wj.to_i64()? * s)?);
                }
                let g = S::one().add(&m);
                let mut out = v.clone();
                for (o, dj) in out.iter_mut().zip(&d) {
                    let dj = dj.to_i64()?;
                    if dj != 0 {
                        *o = o.mul(&g.powi(dj)?);
                    }
                }
                out
            }
            Transformation::Isomorphism(iso) => {
                let fixed = iso.source.fixed();
                let inv = fixed
                    .matrix_in_characters(&iso.matrix)?
                    .inverse_unimodular()?;
                let s = iso.sign.as_i64();
                (0..v.len())
                    .map(|b| {
                        let mut acc = S::one();
                        for (j, vj) in v.iter().enumerate() {
                            let e = inv.get(j, b).to_i64()? * s;
                            if e != 0 {
                                acc = acc.mul(&vj.powi(e)?);
                            }
                        }
                        Some(acc)
                    })
                    .collect::<Option<Vec<S>>>()?
            }
        };
    }
    Some(v)
}

pub fn random_point(rng: &mut ChaCha8Rng, n: usize) -> Vec<Fp> {
    (0..n).map(|_| Fp(rng.gen_range(2..PRIME))).collect()
}

/// True when some random point shows the composite is not the identity.
pub fn rejects_identity(steps: &[Transformation], n: usize) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(0x51ed_270b ^ steps.len() as u64);
    for _ in 0..POINTS {
        let p = random_point(&mut rng, n);
        if let Some(v) = evaluate_steps(steps, &p) {
            if v != p {
                return true;
            }
        }
    }
    false
}
