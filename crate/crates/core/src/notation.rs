//! Text notation for words and lattice vectors.
//!
//! A word is written as in composition, `m1- o (1,8) o m1+`, so the rightmost
//! token is applied first. Tokens:
//! - `mK+` / `mK-`: signed mutation at the direction labelled `K`;
//! - `(a,b)(c,d)`, `-(1,2)`, `id`, `-id`: permutation isomorphisms, the optional
//!   leading `-` being the sign;
//! - `sigma`: the explicit isomorphism supplied by the caller.

use num_bigint::BigInt;
use thiserror::Error;

use crate::lattice::{perm_from_cycles, ClusterWord, IsoSpec, MutationStep, Seed, Sign, WordStep};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NotationError {
    #[error("bad token {0:?}")]
    BadToken(String),
    #[error("unknown direction {0:?}")]
    UnknownDirection(String),
    #[error("`sigma` used but no explicit isomorphism given")]
    MissingSigma,
    #[error("bad vector {0:?}")]
    BadVector(String),
}

fn split_tokens(s: &str) -> Vec<String> {
    s.replace('∘', " o ")
        .split(" o ")
        .map(|t| t.trim().to_string())
        .filter(|t| !t.is_empty())
        .collect()
}

fn parse_sign_prefix(t: &str) -> (Sign, &str) {
    let t = t.trim();
    if let Some(r) = t.strip_prefix('-').or_else(|| t.strip_prefix('−')) {
        (Sign::Minus, r.trim())
    } else if let Some(r) = t.strip_prefix('+') {
        (Sign::Plus, r.trim())
    } else {
        (Sign::Plus, t)
    }
}

/// Parse one token into a step.
pub fn parse_step(
    seed: &Seed,
    token: &str,
    sigma: Option<&IsoSpec>,
) -> Result<WordStep, NotationError> {
    let n = seed.rank();
    let t = token.trim();
    let bad = || NotationError::BadToken(t.to_string());
    if t == "sigma" || t == "σ" {
        return sigma
            .cloned()
            .map(WordStep::Isomorphism)
            .ok_or(NotationError::MissingSigma);
    }
    let body = t.strip_prefix('m').or_else(|| t.strip_prefix('μ'));
    if let Some(body) = body {
        let sign = if body.ends_with('+') || body.ends_with('⁺') {
            Sign::Plus
        } else if body.ends_with('-') || body.ends_with('⁻') || body.ends_with('−') {
            Sign::Minus
        } else {
            return Err(bad());
        };
        let mut chars = body.chars();
        chars.next_back();
        let label = chars.as_str();
        let k = seed
            .fixed()
            .index_of(label)
            .ok_or_else(|| NotationError::UnknownDirection(label.to_string()))?;
        return Ok(WordStep::Mutation(MutationStep::new(k, sign)));
    }
    let (sign, rest) = parse_sign_prefix(t);
    let perm = if rest == "id" {
        (0..n).collect()
    } else if rest.starts_with('(') {
        perm_from_cycles(rest, n).map_err(|_| bad())?
    } else {
        return Err(bad());
    };
    Ok(WordStep::Isomorphism(IsoSpec {
        perm,
        sign,
        matrix: None,
    }))
}

/// Parse a word in composition notation; the result lists steps in application order.
pub fn parse_word(
    seed: &Seed,
    text: &str,
    sigma: Option<&IsoSpec>,
) -> Result<ClusterWord, NotationError> {
    let mut steps = Vec::new();
    for tok in split_tokens(text).iter().rev() {
        steps.push(parse_step(seed, tok, sigma)?);
    }
    Ok(ClusterWord::new(seed, steps))
}

/// Render a word in composition notation.
pub fn format_word(word: &ClusterWord) -> String {
    let labels = word.source.fixed().labels().to_vec();
    let toks: Vec<String> = word
        .steps
        .iter()
        .rev()
        .map(|s| match s {
            WordStep::Mutation(m) => {
                format!("m{}{}", labels[m.k], if m.sign == Sign::Plus { '+' } else { '-' })
            }
            WordStep::Isomorphism(iso) => {
                let sign = if iso.sign == Sign::Minus { "-" } else { "" };
                if iso.matrix.is_some() {
                    return format!("{sign}sigma");
                }
                let c = cycles(&iso.perm);
                format!("{sign}{}", if c.is_empty() { "id".to_string() } else { c })
            }
        })
        .collect();
    if toks.is_empty() {
        "id".to_string()
    } else {
        toks.join(" o ")
    }
}

/// Cycle notation with 1-based labels, fixed points omitted.
pub fn cycles(perm: &[usize]) -> String {
    let mut seen = vec![false; perm.len()];
    let mut out = String::new();
    for i in 0..perm.len() {
        if seen[i] || perm[i] == i {
            continue;
        }
        let mut c = vec![i + 1];
        seen[i] = true;
        let mut j = perm[i];
        while j != i {
            seen[j] = true;
            c.push(j + 1);
            j = perm[j];
        }
        let items: Vec<String> = c.iter().map(|x| x.to_string()).collect();
        out.push_str(&format!("({})", items.join(",")));
    }
    out
}

/// Parse `e1+2e3-e4` into a coefficient vector of length `n`; `0` is the zero vector.
pub fn parse_lincomb(s: &str, n: usize) -> Result<Vec<i64>, NotationError> {
    let bad = || NotationError::BadVector(s.to_string());
    let mut out = vec![0i64; n];
    let t: String = s
        .chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| if c == '−' { '-' } else { c })
        .collect();
    if t == "0" {
        return Ok(out);
    }
    let mut rest = t.as_str();
    while !rest.is_empty() {
        let (sign, r) = match rest.as_bytes()[0] {
            b'-' => (-1, &rest[1..]),
            b'+' => (1, &rest[1..]),
            _ => (1, rest),
        };
        let epos = r.find('e').ok_or_else(bad)?;
        let coeff: i64 = if epos == 0 {
            1
        } else {
            r[..epos].parse().map_err(|_| bad())?
        };
        let r = &r[epos + 1..];
        let end = r.find(['+', '-']).unwrap_or(r.len());
        let idx: usize = r[..end].parse().map_err(|_| bad())?;
        if idx == 0 || idx > n {
            return Err(bad());
        }
        out[idx - 1] += sign * coeff;
        rest = &r[end..];
    }
    Ok(out)
}

pub fn to_bigint(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::FixedData;
    use crate::linalg::IntMatrix;

    fn seed(n: usize) -> Seed {
        FixedData::from_lambda(&IntMatrix::zeros(n, n))
            .unwrap()
            .initial_seed()
    }

    #[test]
    fn lincombs() {
        assert_eq!(parse_lincomb("e1+2e3-e4", 4).unwrap(), vec![1, 0, 2, -1]);
        assert_eq!(parse_lincomb("-e6", 7).unwrap(), vec![0, 0, 0, 0, 0, -1, 0]);
        assert_eq!(parse_lincomb("e10-e9", 11).unwrap()[8..10], [-1, 1]);
        assert!(parse_lincomb("e5", 4).is_err());
        assert!(parse_lincomb("x1", 4).is_err());
    }

    #[test]
    fn words_round_trip() {
        let s = seed(8);
        let w = parse_word(&s, "m1- o (1,8) o m1+", None).unwrap();
        assert_eq!(w.steps.len(), 3);
        assert_eq!(w.steps[0], WordStep::Mutation(MutationStep::new(0, Sign::Plus)));
        assert_eq!(format_word(&w), "m1- o (1,8) o m1+");
        let w = parse_word(&s, "-(1,3)(2,4)(5,7)(6,8)", None).unwrap();
        assert_eq!(format_word(&w), "-(1,3)(2,4)(5,7)(6,8)");
        assert_eq!(
            parse_word(&s, "sigma o m4+", None).unwrap_err(),
            NotationError::MissingSigma
        );
        assert!(parse_word(&s, "m9+", None).is_err());
    }
}
